//! Exact resistance spectra of graphs and constructions of non-isomorphic
//! graphs that share one.
//!
//! The resistance spectrum of a graph is the multiset of effective
//! resistances between all unordered vertex pairs, with every edge a unit
//! resistor. All arithmetic is exact: resistances are rationals, or `+∞` for
//! pairs in different components.
//!
//! ```
//! use resspec::{named, resistance_spectrum};
//!
//! let c3 = named::cycle(3).unwrap();
//! assert_eq!(resistance_spectrum(&c3).to_string(), "2/3^3");
//! ```

pub mod constructions;
pub mod error;
pub mod forest;
pub mod format;
pub mod graph;
pub mod iso;
pub mod mine;
pub mod partition;
pub mod rational;
pub mod resistance;
pub mod spectrum;

pub use constructions::{
    branch_swap_check, equal_squares_check, family_2k, family_q, relation_u, s_transitive,
    verify_family, FamilyMember, PairReport, Provenance, UPair,
};
pub use error::{Error, Result};
pub use forest::forest_oracle_resistance;
pub use graph::{disjoint_union, glue, identify, join_extend, named, GlueSpec, Graph, JoinKind};
pub use iso::{are_isomorphic, canonical_form, CanonicalForm};
pub use mine::{enumerate_nonisomorphic, mine, MineSource};
pub use partition::{partition_count, partitions, Partition};
pub use rational::ExtRational;
pub use resistance::{effective_resistance, resistance_matrix, rsv, ResistanceMatrix};
pub use spectrum::{
    closed_form_spectrum, cut_vertex_spectrum, mrepeat, msum, munion, one_point_gluing,
    resistance_spectrum, spectra_equal, RMultiset, STransitiveProfile, SpectrumComparison,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    struct Introduction;
    #[doc = include_str!("../../../book/src/spectra.md")]
    struct Spectra;
    #[doc = include_str!("../../../book/src/gluing.md")]
    struct Gluing;
    #[doc = include_str!("../../../book/src/families.md")]
    struct Families;
    #[doc = include_str!("../../../book/src/isomorphism.md")]
    struct Isomorphism;
    #[doc = include_str!("../../../book/src/formats.md")]
    struct Formats;
    #[doc = include_str!("../../../book/src/cli.md")]
    struct Cli;
}

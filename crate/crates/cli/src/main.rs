use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use resspec::format::{parse_graphs, to_graph6};
use resspec::partition::equal_sos_pairs;
use resspec::{
    are_isomorphic, family_2k, family_q, mine, partitions, resistance_matrix, resistance_spectrum,
    spectra_equal, verify_family, Error, Graph, MineSource, PairReport, RMultiset,
};

const EXIT_UNEQUAL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_PARSE: u8 = 3;

/// Exact resistance spectra and spectrum-sharing graph families.
#[derive(Parser)]
#[command(name = "resspec", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// 2^k trees hung on a path
    #[value(name = "2k")]
    TwoK,
    /// the order-n family of 2(n-9)p(n-9) pairs
    Q,
}

#[derive(Subcommand)]
enum Command {
    /// Print the resistance spectrum of each input graph
    Spectrum {
        /// edge-list or graph6 file; standard input if omitted or `-`
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        /// also print the resistances from each vertex
        #[arg(long)]
        rsv: bool,
    },
    /// Compare the spectra of two graphs; exit status 1 if they differ
    Compare { a: PathBuf, b: PathBuf },
    /// Generate a family of graphs sharing a spectrum
    Construct {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// recompute spectra and isomorphism for every emitted pair
        #[arg(long)]
        verify: bool,
    },
    /// List the partitions of T in reverse-lexicographic order
    Partitions {
        t: usize,
        /// list pairs of distinct partitions with equal sums of squares
        #[arg(long)]
        equal_sos: bool,
    },
    /// Re-check pair reports (one JSON record per line)
    Verify { file: Option<PathBuf> },
    /// Find non-isomorphic graphs of one order with equal spectra
    Mine {
        order: usize,
        /// candidate graphs in graph6 (or edge-list) form instead of
        /// exhaustive generation
        #[arg(long)]
        g6: Option<PathBuf>,
        /// print pair reports as JSON lines
        #[arg(long)]
        json: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => EXIT_PARSE,
            Error::Verification(_) => EXIT_UNEQUAL,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).map_err(|e| Failure::usage(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text)?;
            Ok(text)
        }
    }
}

fn read_graphs(path: Option<&Path>) -> Result<Vec<Graph>, Failure> {
    let name = path.map_or_else(|| "<stdin>".to_string(), |p| p.display().to_string());
    parse_graphs(&read_input(path)?).map_err(|e| Failure {
        code: EXIT_PARSE,
        message: format!("{name}: {e}"),
    })
}

fn read_one(path: &Path) -> Result<Graph, Failure> {
    let mut graphs = read_graphs(Some(path))?;
    if graphs.len() != 1 {
        return Err(Failure {
            code: EXIT_PARSE,
            message: format!(
                "{}: expected one graph, found {}",
                path.display(),
                graphs.len()
            ),
        });
    }
    Ok(graphs.remove(0))
}

fn json_line(out: &mut impl Write, value: &impl Serialize) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)
}

#[derive(Serialize)]
struct SpectrumRecord {
    order: usize,
    size: usize,
    spectrum: RMultiset,
    #[serde(skip_serializing_if = "Option::is_none")]
    rsv: Option<Vec<RMultiset>>,
}

fn cmd_spectrum(
    out: &mut impl Write,
    file: Option<&Path>,
    format: OutputFormat,
    rsv: bool,
) -> Outcome {
    for g in read_graphs(file)? {
        let m = resistance_matrix(&g);
        let record = SpectrumRecord {
            order: g.order(),
            size: g.size(),
            spectrum: m.spectrum(),
            rsv: rsv.then(|| (0..g.order()).map(|v| m.rsv(v)).collect()),
        };
        match format {
            OutputFormat::Json => json_line(out, &record)?,
            OutputFormat::Text => {
                writeln!(out, "{}", record.spectrum)?;
                for (v, r) in record.rsv.iter().flatten().enumerate() {
                    writeln!(out, "  {v}: {r}")?;
                }
            }
        }
    }
    Ok(0)
}

fn cmd_compare(out: &mut impl Write, a: &Path, b: &Path) -> Outcome {
    let (ga, gb) = (read_one(a)?, read_one(b)?);
    let (sa, sb) = (resistance_spectrum(&ga), resistance_spectrum(&gb));
    let cmp = spectra_equal(&sa, &sb);
    if cmp.is_equal() {
        writeln!(out, "spectra: equal")?;
        writeln!(out, "spectrum: {sa}")?;
    } else {
        writeln!(out, "spectra: different")?;
        for d in &cmp.diffs {
            writeln!(out, "  {d}")?;
        }
    }
    let iso = are_isomorphic(&ga, &gb)?;
    writeln!(out, "isomorphic: {}", if iso { "yes" } else { "no" })?;
    Ok(if cmp.is_equal() { 0 } else { EXIT_UNEQUAL })
}

#[derive(Serialize)]
struct MemberRecord<'a> {
    family: &'static str,
    k: usize,
    p: usize,
    q: usize,
    selector: &'a [u8],
    graph: &'a Graph,
}

fn need(name: &str, value: Option<usize>) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::usage(format!("--{name} is required for this family")))
}

fn cmd_construct(
    out: &mut impl Write,
    family: Family,
    [k, p, q, n]: [Option<usize>; 4],
    verify: bool,
) -> Outcome {
    match family {
        Family::TwoK => {
            let (k, p, q) = (need("k", k)?, need("p", p)?, need("q", q)?);
            let members = family_2k(k, p, q)?;
            if verify {
                verify_family(&members)?;
                eprintln!(
                    "verified {} graphs: equal spectra, pairwise non-isomorphic",
                    members.len()
                );
            }
            for m in &members {
                json_line(
                    out,
                    &MemberRecord {
                        family: "2k",
                        k,
                        p,
                        q,
                        selector: &m.selector,
                        graph: &m.graph,
                    },
                )?;
            }
        }
        Family::Q => {
            let reports = family_q(need("n", n)?)?;
            if verify {
                for r in &reports {
                    r.verify()?;
                }
                eprintln!("verified {} pairs", reports.len());
            }
            for r in &reports {
                json_line(out, r)?;
            }
        }
    }
    Ok(0)
}

fn cmd_partitions(out: &mut impl Write, t: usize, equal_sos: bool) -> Outcome {
    if equal_sos {
        for (a, b) in equal_sos_pairs(t)? {
            writeln!(out, "{a} {b}")?;
        }
    } else {
        for p in partitions(t)? {
            writeln!(out, "{p}")?;
        }
    }
    Ok(0)
}

fn cmd_verify(out: &mut impl Write, file: Option<&Path>) -> Outcome {
    let text = read_input(file)?;
    let mut failed = 0;
    let mut total = 0;
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let report: PairReport = serde_json::from_str(line).map_err(|e| Failure {
            code: EXIT_PARSE,
            message: format!("line {}: {e}", i + 1),
        })?;
        total += 1;
        match report.verify() {
            Ok(()) => {}
            Err(e) => {
                failed += 1;
                writeln!(out, "line {}: FAILED: {e}", i + 1)?;
            }
        }
    }
    writeln!(out, "{} of {total} reports verified", total - failed)?;
    Ok(if failed == 0 { 0 } else { EXIT_UNEQUAL })
}

fn cmd_mine(out: &mut impl Write, order: usize, g6: Option<&Path>, json: bool) -> Outcome {
    let source = match g6 {
        Some(path) => MineSource::Graphs(read_graphs(Some(path))?),
        None => MineSource::Exhaustive,
    };
    let reports = mine(order, source)?;
    for r in &reports {
        if json {
            json_line(out, r)?;
        } else {
            writeln!(
                out,
                "{} {} {}",
                to_graph6(&r.graph_a)?,
                to_graph6(&r.graph_b)?,
                r.spectrum
            )?;
        }
    }
    let noun = if reports.len() == 1 { "pair" } else { "pairs" };
    if json {
        eprintln!("{} {noun}", reports.len());
    } else {
        writeln!(out, "{} {noun}", reports.len())?;
    }
    Ok(0)
}

fn run(cli: Cli, out: &mut impl Write) -> Outcome {
    match cli.command {
        Command::Spectrum { file, format, rsv } => cmd_spectrum(out, file.as_deref(), format, rsv),
        Command::Compare { a, b } => cmd_compare(out, &a, &b),
        Command::Construct {
            family,
            k,
            p,
            q,
            n,
            verify,
        } => cmd_construct(out, family, [k, p, q, n], verify),
        Command::Partitions { t, equal_sos } => cmd_partitions(out, t, equal_sos),
        Command::Verify { file } => cmd_verify(out, file.as_deref()),
        Command::Mine { order, g6, json } => cmd_mine(out, order, g6.as_deref(), json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(code), Ok(())) => ExitCode::from(code),
        (Err(f), _) => {
            eprintln!("resspec: {}", f.message);
            ExitCode::from(f.code)
        }
        (Ok(_), Err(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        (Ok(_), Err(e)) => {
            eprintln!("resspec: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

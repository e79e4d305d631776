//! Command line front end. [`run`] takes the argument vector and the two
//! output streams so the whole binary can be driven from tests.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use semicomplex::genealogy::{self, DEFAULT_MAX_NODES};
use semicomplex::json::{
    ChainJson, ComplexityJson, SemigroupJson, SemigroupListJson, SCHEMA_VERSION,
};
use semicomplex::oracle::{self, Check, VerifyError};
use semicomplex::semigroup::{format_bracket_list, format_gap_list, parse_int_list};
use semicomplex::{
    chain, classify, complexity, ideal_extensions, mu, proper_ideal_extensions, NumericalSemigroup,
    ThetaMap,
};

/// Environment variable overriding the per-level node cap of tree commands.
pub const MAX_NODES_ENV: &str = "SEMICOMPLEX_MAX_NODES";

#[derive(Debug, Parser)]
#[command(
    name = "semicomplex",
    version,
    about = "Ideal extensions, i-chains and complexity of numerical semigroups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classical invariants of a semigroup.
    Info {
        #[command(flatten)]
        input: SemigroupInput,
        #[arg(long)]
        json: bool,
    },
    /// All ideal extensions, one minimal generating set per line.
    Extensions {
        #[command(flatten)]
        input: SemigroupInput,
        /// Leave out the semigroup itself.
        #[arg(long)]
        proper: bool,
        #[command(flatten)]
        style: Style,
    },
    /// The i-chain obtained by iterating an i-pertinent map.
    Chain {
        #[command(flatten)]
        input: SemigroupInput,
        #[arg(long, default_value = "gamma", value_parser = parse_theta)]
        theta: ThetaMap,
        #[command(flatten)]
        style: Style,
    },
    /// The complexity floor(F/m) + 1.
    Complexity {
        #[command(flatten)]
        input: SemigroupInput,
        #[arg(long)]
        json: bool,
    },
    /// Every semigroup with the given multiplicity and complexity.
    Enumerate {
        #[arg(short = 'm', long)]
        multiplicity: i64,
        #[arg(short = 'c', long)]
        complexity: usize,
        /// Print only the number of semigroups.
        #[arg(long)]
        count: bool,
        #[command(flatten)]
        style: Style,
    },
    /// The tree G(m) in Graphviz DOT format.
    TreeDot {
        #[arg(short = 'm', long)]
        multiplicity: i64,
        #[arg(long, default_value_t = 3)]
        depth: usize,
    },
    /// Cross-check the algorithms against brute-force oracles.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_genus: usize,
        /// Comma separated subset of pf,ext,complexity,tree.
        #[arg(long, value_delimiter = ',', default_value = "pf,ext,complexity,tree")]
        checks: Vec<String>,
    },
    /// Semigroups whose PF chain is longer than their complexity, among
    /// all semigroups with Frobenius number at most --max-frobenius.
    SearchPfGap {
        /// Genus bound of the scanned catalog.
        #[arg(long, default_value_t = 10)]
        max_genus: usize,
        /// Defaults to, and may not exceed, --max-genus, since genus <= F
        /// means the catalog is only complete up to that Frobenius number.
        #[arg(long)]
        max_frobenius: Option<i64>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SemigroupInput {
    /// Semigroup literal such as "<5,7>" or "5,7".
    semigroup: Option<String>,
    /// Define the semigroup by its gaps instead, e.g. 1,2,3,4,7.
    #[arg(long)]
    gaps: Option<String>,
}

#[derive(Debug, Args)]
pub struct Style {
    /// Print lists as GAP does: [ 3, 5 ].
    #[arg(long)]
    gap_style: bool,
    #[arg(long, conflicts_with = "gap_style")]
    json: bool,
}

impl Style {
    fn list(&self, xs: &[i64]) -> String {
        if self.gap_style {
            format_gap_list(xs)
        } else {
            format_bracket_list(xs)
        }
    }
}

fn parse_theta(s: &str) -> Result<ThetaMap, String> {
    s.parse().map_err(|e: semicomplex::Error| e.to_string())
}

impl SemigroupInput {
    fn resolve(&self) -> semicomplex::Result<NumericalSemigroup> {
        match (&self.semigroup, &self.gaps) {
            (Some(lit), _) => lit.parse(),
            (None, Some(gaps)) => NumericalSemigroup::from_gaps(&parse_int_list(gaps)?),
            (None, None) => unreachable!("clap requires one input"),
        }
    }
}

#[derive(Serialize)]
struct PfGapJson {
    generators: Vec<i64>,
    frobenius: i64,
    complexity: usize,
    mu_pf: usize,
}

#[derive(Serialize)]
struct PfGapListJson {
    version: u32,
    max_frobenius: i64,
    count: usize,
    semigroups: Vec<PfGapJson>,
}

#[derive(Serialize)]
struct CountJson {
    version: u32,
    multiplicity: i64,
    complexity: usize,
    count: u128,
}

/// Failure of a command: `Usage` exits 2, `Discrepancy` exits 1.
enum Failure {
    Usage(String),
    Discrepancy(String),
}

impl From<semicomplex::Error> for Failure {
    fn from(e: semicomplex::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(format!("write failed: {e}"))
    }
}

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

fn max_nodes() -> Result<usize, Failure> {
    match std::env::var(MAX_NODES_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::Usage(format!("{MAX_NODES_ENV}={v:?} is not a positive integer"))
        }),
        Err(_) => Ok(DEFAULT_MAX_NODES),
    }
}

fn info(out: &mut dyn Write, s: &NumericalSemigroup, json: bool) -> Result<(), Failure> {
    if json {
        return json_line(out, &SemigroupJson::from(s));
    }
    writeln!(out, "semigroup: {s}")?;
    writeln!(out, "multiplicity: {}", s.multiplicity())?;
    writeln!(out, "frobenius: {}", s.frobenius())?;
    writeln!(out, "genus: {}", s.genus())?;
    writeln!(out, "embedding dimension: {}", s.embedding_dimension())?;
    match s.pseudo_frobenius() {
        Ok(pf) => {
            writeln!(out, "type: {}", pf.len())?;
            writeln!(out, "pseudo-frobenius: {}", format_bracket_list(&pf))?;
        }
        Err(_) => {
            writeln!(out, "type: undefined")?;
            writeln!(out, "pseudo-frobenius: undefined")?;
        }
    }
    writeln!(out, "complexity: {}", complexity(s))?;
    writeln!(out, "class: {}", classify(s))?;
    Ok(())
}

fn print_semigroups(
    out: &mut dyn Write,
    items: &[NumericalSemigroup],
    style: &Style,
) -> Result<(), Failure> {
    if style.json {
        return json_line(out, &SemigroupListJson::new(items));
    }
    for s in items {
        writeln!(out, "{}", style.list(s.generators()))?;
    }
    Ok(())
}

fn verify(out: &mut dyn Write, max_genus: usize, checks: &[String]) -> Result<(), Failure> {
    let checks: Vec<Check> = checks
        .iter()
        .map(|c| c.trim().parse())
        .collect::<semicomplex::Result<_>>()?;
    match oracle::verify(max_genus, &checks) {
        Ok(report) => {
            for (check, n) in report.cases {
                writeln!(out, "{check}: {n} cases ok")?;
            }
            writeln!(out, "all checks passed up to genus {max_genus}")?;
            Ok(())
        }
        Err(VerifyError::Setup(e)) => Err(e.into()),
        Err(VerifyError::Discrepancy(d)) => {
            writeln!(out, "discrepancy {d}")?;
            Err(Failure::Discrepancy(d.to_string()))
        }
    }
}

fn search_pf_gap(
    out: &mut dyn Write,
    max_genus: usize,
    max_frobenius: Option<i64>,
    json: bool,
) -> Result<(), Failure> {
    let max_f = max_frobenius.unwrap_or(max_genus as i64);
    if max_f > max_genus as i64 {
        return Err(Failure::Usage(format!(
            "--max-frobenius {max_f} exceeds --max-genus {max_genus}; the scan would be incomplete"
        )));
    }
    let catalog = oracle::enumerate_by_genus(max_genus)?;
    let mut found: Vec<&NumericalSemigroup> = catalog
        .semigroups
        .iter()
        .filter(|s| s.frobenius() <= max_f)
        .filter(|s| semicomplex::pf_chain_exceeds_complexity(s))
        .collect();
    found.sort_by_key(|s| (s.frobenius(), s.generators().to_vec()));
    let rows: Vec<PfGapJson> = found
        .iter()
        .map(|s| PfGapJson {
            generators: s.generators().to_vec(),
            frobenius: s.frobenius(),
            complexity: complexity(s),
            mu_pf: mu(ThetaMap::Pf, s),
        })
        .collect();
    if json {
        return json_line(
            out,
            &PfGapListJson {
                version: SCHEMA_VERSION,
                max_frobenius: max_f,
                count: rows.len(),
                semigroups: rows,
            },
        );
    }
    for (s, row) in found.iter().zip(&rows) {
        writeln!(
            out,
            "{s} F={} C={} mu_pf={}",
            row.frobenius, row.complexity, row.mu_pf
        )?;
    }
    Ok(())
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Info { input, json } => info(out, &input.resolve()?, json),
        Command::Extensions {
            input,
            proper,
            style,
        } => {
            let s = input.resolve()?;
            let list = if proper {
                proper_ideal_extensions(&s)?
            } else {
                ideal_extensions(&s)?
            };
            print_semigroups(out, &list, &style)
        }
        Command::Chain {
            input,
            theta,
            style,
        } => {
            let s = input.resolve()?;
            let ch = chain(theta, &s);
            if style.json {
                return json_line(out, &ChainJson::new(theta, &ch));
            }
            for link in &ch.links()[1..] {
                writeln!(out, "{}", style.list(link.generators()))?;
            }
            Ok(())
        }
        Command::Complexity { input, json } => {
            let s = input.resolve()?;
            if json {
                json_line(out, &ComplexityJson::from(&s))
            } else {
                writeln!(out, "{}", complexity(&s))?;
                Ok(())
            }
        }
        Command::Enumerate {
            multiplicity,
            complexity: c,
            count,
            style,
        } => {
            let cap = max_nodes()?;
            if count {
                let n = genealogy::count_with_cap(multiplicity, c, cap)?;
                if style.json {
                    return json_line(
                        out,
                        &CountJson {
                            version: SCHEMA_VERSION,
                            multiplicity,
                            complexity: c,
                            count: n,
                        },
                    );
                }
                writeln!(out, "{n}")?;
                return Ok(());
            }
            let list = genealogy::enumerate_with_cap(multiplicity, c, cap)?;
            print_semigroups(out, &list, &style)
        }
        Command::TreeDot {
            multiplicity,
            depth,
        } => {
            let dot = genealogy::export_dot_with_cap(multiplicity, depth, max_nodes()?)?;
            out.write_all(dot.as_bytes())?;
            Ok(())
        }
        Command::Verify { max_genus, checks } => verify(out, max_genus, &checks),
        Command::SearchPfGap {
            max_genus,
            max_frobenius,
            json,
        } => search_pf_gap(out, max_genus, max_frobenius, json),
    }
}

/// Runs one invocation. Returns the process exit code: 0 on success, 1 when
/// `verify` finds a discrepancy, 2 on usage or input errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Discrepancy(msg)) => {
            let _ = writeln!(err, "verification failed: {msg}");
            1
        }
    }
}

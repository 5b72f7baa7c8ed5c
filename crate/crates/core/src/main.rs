use std::fmt::Debug;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use unip::cells::{cell_diagrams, lusztig_left_cell, primitive_pairs, CellError, PPSubset};
use unip::check::run_checks;
use unip::count::{unip_count, unip_count_complex, unip_count_verified, CountError};
use unip::descent::{descend, descent_chain, naive_descent, DescentError};
use unip::diagram::DiagramError;
use unip::duality::{bv_dual, infinitesimal_character};
use unip::genfun::{gf, Bucket, GfError};
use unip::oracle::{coh_multiplicity_trace, CohTarget, OracleError};
use unip::paint::{enumerate_pap, enumerate_pbp, pap_signature, PaintError, PaintedBipartition};
use unip::parity::{split_parity, CellType, GroupForm, Label, OrbitSpec, ParityError, Variant};
use unip::realforms::{count_real_orbits, RealFormError};
use unip::weyl::{BipartitionIrrep, WIrrep, WPrimeIrrep, WeylError};
use unip::YoungDiagram;

#[derive(Parser)]
#[command(name = "unip", version, about = "Count special unipotent representations of classical groups")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// A dual orbit as given on the command line.
#[derive(Args)]
struct OrbitArgs {
    /// Label: AR, AH, A, At, B, D, C, Ct, Dstar, Cstar, or AC, BC, DC, CC, CtC.
    #[arg(long)]
    star: Label,
    /// Rows of the dual orbit, e.g. 5,3,3,3,3,1,1.
    #[arg(long, allow_hyphen_values = true)]
    orbit: YoungDiagram,
    /// I or II, for very even D-type orbits.
    #[arg(long)]
    variant: Option<Variant>,
}

impl OrbitArgs {
    fn spec(&self) -> Result<OrbitSpec, ParityError> {
        match self.variant {
            Some(v) => OrbitSpec::new(self.star, self.orbit.clone(), v),
            None => OrbitSpec::new(self.star, self.orbit.clone(), Variant::Unique),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Number of special unipotent representations.
    Count {
        #[command(flatten)]
        orbit: OrbitArgs,
        /// Real form, e.g. Sp:4, Sp4R, SO:3,2, U:2,1, GL:3, SOstar:4. Omit for complex labels.
        #[arg(long)]
        group: Option<GroupForm>,
        /// Fill in the enumeration, oracle and real-orbit cross-checks.
        #[arg(long)]
        verify: bool,
    },
    /// Painted bipartitions of a good-parity orbit.
    Pbp {
        #[command(flatten)]
        orbit: OrbitArgs,
        /// Primitive pairs, e.g. "1,2;5,6".
        #[arg(long, default_value = "")]
        pp: PPSubset,
        #[arg(long, conflicts_with = "signature")]
        group: Option<GroupForm>,
        /// Keep elements of this signature, e.g. 10,9.
        #[arg(long)]
        signature: Option<Pair>,
    },
    /// Painted diagrams for the A family.
    Pap {
        #[command(flatten)]
        orbit: OrbitArgs,
        #[arg(long)]
        signature: Option<Pair>,
    },
    /// Cell diagrams and the left cell.
    Cells {
        #[command(flatten)]
        orbit: OrbitArgs,
        #[arg(long, default_value = "")]
        pp: PPSubset,
    },
    /// Infinitesimal character and dual orbit.
    Dual {
        #[command(flatten)]
        orbit: OrbitArgs,
    },
    /// Descent of one painted bipartition.
    Descend {
        #[command(flatten)]
        orbit: OrbitArgs,
        #[arg(long, default_value = "")]
        pp: PPSubset,
        /// E.g. "**/*s/*s/rc|**/*/*|D".
        #[arg(long)]
        pbp: PaintedBipartition,
        /// Descend repeatedly down to the empty orbit.
        #[arg(long)]
        steps: bool,
    },
    /// Signature generating function.
    Gf {
        #[command(flatten)]
        orbit: OrbitArgs,
        #[arg(long, default_value = "")]
        pp: PPSubset,
        /// Restrict to tails ending in d, cr or s.
        #[arg(long)]
        bucket: Option<Bucket>,
    },
    /// Independent oracles.
    Oracle {
        #[command(subcommand)]
        which: OracleCommand,
    },
    /// Run all property suites.
    Check {
        #[arg(long, default_value_t = 12)]
        max_size: usize,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Multiplicity of an irreducible in the coherent continuation representation.
    Coh {
        #[arg(long)]
        star: Label,
        #[arg(long)]
        group: GroupForm,
        /// "2,1|1" for W_n, "2|1'" or "1|1_I" for W'_n, a diagram for S_n.
        #[arg(long)]
        irrep: String,
    },
    /// Number of real orbits in a complex nilpotent orbit.
    RealOrbits {
        #[arg(long)]
        group: GroupForm,
        #[arg(long)]
        shape: YoungDiagram,
    },
}

#[derive(Clone, Copy, Debug)]
struct Pair(usize, usize);

impl std::str::FromStr for Pair {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("expected p,q but got {s:?}");
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        Ok(Pair(a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(transparent)]
    Parity(#[from] ParityError),
    #[error(transparent)]
    Cell(#[from] CellError),
    #[error(transparent)]
    Paint(#[from] PaintError),
    #[error(transparent)]
    Descent(#[from] DescentError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    RealForm(#[from] RealFormError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error("the group is required for {0}")]
    MissingGroup(Label),
    #[error("property check failed")]
    CheckFailed,
}

/// `Debug` begins with the variant name.
fn variant_name(e: &dyn Debug) -> String {
    format!("{e:?}").chars().take_while(char::is_ascii_alphanumeric).collect()
}

impl CliError {
    /// `ModuleError::Variant`.
    fn name(&self) -> String {
        let (module, inner): (&str, &dyn Debug) = match self {
            CliError::Count(e) => ("CountError", e),
            CliError::Parity(e) => ("ParityError", e),
            CliError::Cell(e) => ("CellError", e),
            CliError::Paint(e) => ("PaintError", e),
            CliError::Descent(e) => ("DescentError", e),
            CliError::Diagram(e) => ("DiagramError", e),
            CliError::Gf(e) => ("GfError", e),
            CliError::Oracle(e) => ("OracleError", e),
            CliError::RealForm(e) => ("RealFormError", e),
            CliError::Weyl(e) => ("WeylError", e),
            CliError::MissingGroup(_) => return "CliError::MissingGroup".into(),
            CliError::CheckFailed => return "CliError::CheckFailed".into(),
        };
        format!("{module}::{}", variant_name(inner))
    }
}

/// Writes one block to stdout; a closed pipe is not an error.
fn print(s: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{s}");
}

fn print_json(value: &impl Serialize) {
    print(&serde_json::to_string_pretty(value).expect("serializable output"));
}

fn emit(format: Format, text: impl FnOnce() -> String, value: &impl Serialize) {
    match format {
        Format::Text => print(&text()),
        Format::Json => print_json(value),
    }
}

fn parse_irrep(star: Label, s: &str) -> Result<CohTarget, CliError> {
    if star.is_a_family() {
        return Ok(CohTarget::Sym(s.parse().map_err(CliError::Diagram)?));
    }
    let prime = |body: &str, decoration: CellType| -> Result<CohTarget, CliError> {
        let x: BipartitionIrrep = body.parse()?;
        Ok(CohTarget::Weyl(WIrrep::WPrime(WPrimeIrrep::new(x.left, x.right, decoration))))
    };
    if let Some(body) = s.strip_suffix("_II") {
        prime(body, CellType::II)
    } else if let Some(body) = s.strip_suffix("_I") {
        prime(body, CellType::I)
    } else if let Some(body) = s.strip_suffix('\'') {
        prime(body, CellType::I)
    } else {
        Ok(CohTarget::Weyl(WIrrep::W(s.parse()?)))
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let format = cli.format;
    match cli.command {
        Command::Count { orbit, group, verify } => {
            if orbit.star.is_complex() {
                let n = unip_count_complex(orbit.star, &orbit.orbit)?;
                emit(format, || n.to_string(), &json!({ "count": n.to_string() }));
                return Ok(());
            }
            let group = group.ok_or(CliError::MissingGroup(orbit.star))?;
            let spec = orbit.spec()?;
            let report = if verify { unip_count_verified(&group, &spec)? } else { unip_count(&group, &spec)? };
            emit(format, || report.count.to_string(), &report);
        }
        Command::Pbp { orbit, pp, group, signature } => {
            let spec = orbit.spec()?;
            let good = split_parity(&spec).d_g;
            let all: Vec<PaintedBipartition> = enumerate_pbp(spec.star, &good, &pp)?
                .into_iter()
                .filter(|t| group.is_none_or(|g| t.group() == g))
                .filter(|t| signature.is_none_or(|Pair(p, q)| (t.signature().p, t.signature().q) == (p, q)))
                .collect();
            let text = || {
                let mut lines: Vec<String> = all.iter().map(|t| format!("{t}  {}", t.group())).collect();
                lines.push(format!("total {}", all.len()));
                lines.join("\n")
            };
            let rows: Vec<_> =
                all.iter().map(|t| json!({ "pbp": t.to_string(), "group": t.group().to_string() })).collect();
            emit(format, text, &json!({ "orbit": good, "pp": pp.pairs(), "count": all.len(), "elements": rows }));
        }
        Command::Pap { orbit, signature } => {
            let spec = orbit.spec()?;
            let all: Vec<_> = enumerate_pap(spec.star, &spec.d)?
                .into_iter()
                .filter(|t| signature.is_none_or(|Pair(p, q)| (pap_signature(t).p, pap_signature(t).q) == (p, q)))
                .collect();
            let text = || {
                let mut lines: Vec<String> = all.iter().map(|t| t.to_string()).collect();
                lines.push(format!("total {}", all.len()));
                lines.join("\n")
            };
            let rows: Vec<String> = all.iter().map(ToString::to_string).collect();
            emit(format, text, &json!({ "count": all.len(), "elements": rows }));
        }
        Command::Cells { orbit, pp } => {
            let spec = orbit.spec()?;
            let split = split_parity(&spec);
            let cd = cell_diagrams(spec.star, &split.d_g, &pp)?;
            let cell: Vec<_> = lusztig_left_cell(&spec)?
                .into_iter()
                .map(|e| json!({ "pp": e.wp.pairs(), "bad": e.bad.to_string(), "good": e.good.to_string() }))
                .collect();
            let pp_all = primitive_pairs(spec.star, &split.d_g).pairs();
            let value = json!({ "iota": cd.iota, "jmath": cd.jmath, "primitive_pairs": pp_all, "left_cell": cell });
            print_json(&value);
        }
        Command::Dual { orbit } => {
            let spec = orbit.spec()?;
            let dbv = bv_dual(&spec)?;
            let dim = dbv.orbit_dim(spec.star.group_family())?;
            let value = json!({ "lambda": infinitesimal_character(&spec), "dbv": dbv, "dim": dim });
            print_json(&value);
        }
        Command::Descend { orbit, pp, pbp, steps } => {
            let spec = orbit.spec()?;
            if steps {
                let chain = descent_chain(&pbp, &spec.d, &pp)?;
                let text = || {
                    chain
                        .iter()
                        .map(|s| format!("{} -> {}  [{} {}]", s.input, s.output, s.star_out, s.orbit_out))
                        .collect::<Vec<_>>()
                        .join("\n")
                };
                emit(format, text, &chain);
            } else {
                let naive = naive_descent(&pbp)?;
                let out = descend(&pbp, &spec.d, &pp)?;
                let text = || format!("naive {naive}  {}\ndescent {out}  {}", naive.group(), out.group());
                let value = json!({
                    "naive": naive.to_string(),
                    "naive_group": naive.group().to_string(),
                    "descent": out.to_string(),
                    "group": out.group().to_string(),
                });
                emit(format, text, &value);
            }
        }
        Command::Gf { orbit, pp, bucket } => {
            let spec = orbit.spec()?;
            let f = gf(spec.star, &spec.d, &pp, bucket)?;
            let terms: Vec<_> = f.terms().map(|((a, b), c)| json!([a, b, c.to_string()])).collect();
            emit(format, || f.to_string(), &json!({ "poly": f.to_string(), "terms": terms }));
        }
        Command::Oracle { which: OracleCommand::Coh { star, group, irrep } } => {
            let target = parse_irrep(star, &irrep)?;
            let (m, trace) = coh_multiplicity_trace(star, &group, &target)?;
            let text = || {
                let mut lines = vec![m.to_string()];
                for t in trace.iter().filter(|t| t.multiplicity > 0) {
                    let params: Vec<String> = t.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    lines.push(format!("  {}: {}", params.join(" "), t.multiplicity));
                }
                lines.join("\n")
            };
            emit(format, text, &json!({ "multiplicity": m, "target": target.to_string(), "trace": trace }));
        }
        Command::Oracle { which: OracleCommand::RealOrbits { group, shape } } => {
            let n = count_real_orbits(&group, &shape)?;
            emit(format, || n.to_string(), &json!({ "group": group.to_string(), "shape": shape, "count": n }));
        }
        Command::Check { max_size } => {
            let results = run_checks(max_size);
            let text = || {
                results
                    .iter()
                    .flat_map(|r| {
                        let head = format!(
                            "{} {}: {} cases, {} failures",
                            if r.passed() { "PASS" } else { "FAIL" },
                            r.name,
                            r.cases,
                            r.failures.len()
                        );
                        std::iter::once(head).chain(r.failures.iter().take(5).map(|f| format!("  {f}")))
                    })
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            emit(format, text, &results);
            if !results.iter().all(|r| r.passed()) {
                return Err(CliError::CheckFailed);
            }
        }
    }
    Ok(())
}

fn configure_threads() {
    let threads = std::env::var("UNIP_THREADS").ok().and_then(|v| v.parse::<usize>().ok());
    if let Some(n) = threads.filter(|&n| n > 0) {
        // Only fails if a global pool already exists.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}: {e}", e.name());
            ExitCode::from(1)
        }
    }
}

//! Command-line entry point: compute classes, expand products, run
//! verification suites, emit JSON.

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use kgrass::coeff::LaurentRing;
use kgrass::demazure::{HDemazure, InfKDemazure, KDemazure, MolevDemazure};
use kgrass::ext_weyl::{parse_element, ExtWeylElement};
use kgrass::partition::Partition;
use kgrass::peterson::{ClassKind, Peterson};
use kgrass::root_data::{GroupKind, RootDatum};
use kgrass::symseries::SymSeries;
use kgrass::verify::{run_suite, Scale};
use kgrass::Error;

#[derive(Parser)]
#[command(name = "kgrass", version, about = "Exact equivariant K-homology of affine Grassmannians")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a Schubert class and print it.
    Compute(ComputeArgs),
    /// Expand a product of two basis classes into structure constants.
    Structure(StructureArgs),
    /// Run a named verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Group {
    Gl,
    Sl,
    Pgl,
    CAdjoint,
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    H,
    Schur,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    K,
    H,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassName {
    /// g_w(y|b) (ideal sheaves); with --mode h the double k-Schur s_w(y|a)
    G,
    /// The closed class g̃_w(y|b) (structure sheaves)
    Gtilde,
    /// k_w in the nil-Hecke T-basis
    K,
    /// ℓ_w in the nil-Hecke T-basis
    L,
    /// The Molev dual Schur function ŝ_λ(y|a) (use --w mlambda:...)
    Shat,
    /// The infinite-rank ĝ_λ(y|b) (use --w mlambda:...)
    Ghat,
}

#[derive(Args)]
struct CommonArgs {
    #[arg(long, value_enum, default_value = "gl")]
    group: Group,
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// y-degree truncation for series output.
    #[arg(long, default_value_t = 8)]
    cap: u32,
    #[arg(long, value_enum, default_value = "h")]
    basis: Basis,
    #[arg(long, value_enum, default_value = "k")]
    mode: Mode,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long, value_enum)]
    class: ClassName,
    /// Element literal: t:[..];perm:[..] | word:pi^M:i,j,.. |
    /// lambda:p1,p2,.. | mlambda:p1,p2,..
    #[arg(long)]
    w: String,
}

#[derive(Args)]
struct StructureArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long)]
    u: String,
    #[arg(long)]
    v: String,
    /// ideal (k_w) or structure (ℓ_w) basis.
    #[arg(long, default_value = "ideal")]
    sc_basis: String,
}

#[derive(Args)]
struct VerifyArgs {
    suite: String,
    #[arg(long, default_value_t = 3)]
    n: usize,
    #[arg(long, default_value_t = 6)]
    cap: u32,
    #[arg(long, default_value_t = 5)]
    maxlen: usize,
    #[arg(long, default_value_t = 4)]
    maxsize: u32,
    /// Seed for the randomized property cases.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn datum_for(group: Group, n: usize) -> kgrass::Result<Arc<RootDatum>> {
    let kind = match group {
        Group::Gl => GroupKind::Gl,
        Group::Sl => GroupKind::Sl,
        Group::Pgl => GroupKind::Pgl,
        Group::CAdjoint => GroupKind::CAdjoint,
    };
    RootDatum::new(kind, n)
}

fn run(cli: Cli) -> kgrass::Result<ExitCode> {
    match cli.command {
        Command::Compute(args) => compute(args),
        Command::Structure(args) => structure(args),
        Command::Verify(args) => verify(args),
    }
}

fn parse_mlambda(s: &str) -> kgrass::Result<Partition> {
    let rest = s
        .strip_prefix("mlambda:")
        .ok_or_else(|| Error::Parse("ŝ/ĝ classes need an mlambda:p1,p2,... literal".into()))?;
    if rest.is_empty() {
        return Ok(Partition::empty());
    }
    let parts: Vec<u32> = rest
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::Parse(format!("bad part {t:?}")))
        })
        .collect::<kgrass::Result<_>>()?;
    Ok(Partition::new(parts))
}

/// The series model lives over GL_n; SL and PGL literals are computed
/// through it (their g̃-classes are the same series, per the subring
/// and quotient descriptions of those rings).
fn series_datum(group: Group, n: usize) -> kgrass::Result<Arc<RootDatum>> {
    match group {
        Group::CAdjoint => Err(Error::Unsupported(
            "series classes require a type A group".into(),
        )),
        _ => datum_for(Group::Gl, n),
    }
}

fn compute(args: ComputeArgs) -> kgrass::Result<ExitCode> {
    let c = &args.common;
    match args.class {
        ClassName::K | ClassName::L => {
            let datum = datum_for(c.group, c.n)?;
            let w = parse_element(&datum, &args.w)?;
            let p = Peterson::new(&datum);
            let kind = if matches!(args.class, ClassName::K) {
                ClassKind::Ideal
            } else {
                ClassKind::Structure
            };
            let value = p.class_value(kind, &w)?;
            match c.format {
                Format::Json => println!("{}", value.json()),
                Format::Text => println!("{:?}", value),
            }
        }
        ClassName::G | ClassName::Gtilde => {
            let datum = datum_for(c.group, c.n)?;
            let sd = series_datum(c.group, c.n)?;
            // Parse in the requested group (validating its literals),
            // then transport the word into the GL model.
            let w = parse_element(&datum, &args.w)?;
            let (m, v) = w.fundamental_split();
            let word = v.reduced_word();
            let wgl = ExtWeylElement::fundamental(&sd, m)
                .multiply(&ExtWeylElement::from_word(&sd, &word));
            match c.mode {
                Mode::K => {
                    let dz = KDemazure::new(&sd, c.cap);
                    let closed = matches!(args.class, ClassName::Gtilde);
                    let series = dz.g_class(&wgl, closed)?;
                    print_series(&series, c.basis, c.format)?;
                }
                Mode::H => {
                    if matches!(args.class, ClassName::Gtilde) {
                        return Err(Error::Unsupported(
                            "the cohomology model defines only the class g (A_w(1))".into(),
                        ));
                    }
                    let hd = HDemazure::new(&sd, c.cap);
                    let series = hd.cohomology_class(&wgl)?;
                    print_series(&series, c.basis, c.format)?;
                }
            }
        }
        ClassName::Shat => {
            let lam = parse_mlambda(&args.w)?;
            let mv = MolevDemazure::new(c.cap);
            let series = mv.molev_class(&lam)?;
            print_inf_series(&series, c.format);
        }
        ClassName::Ghat => {
            let lam = parse_mlambda(&args.w)?;
            let inf = InfKDemazure::new(c.cap);
            let series = inf.infinite_class(&lam, false)?;
            print_inf_series(&series, c.format);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_series(
    series: &SymSeries<LaurentRing>,
    basis: Basis,
    format: Format,
) -> kgrass::Result<()> {
    let (basis_name, terms): (&str, Vec<(Partition, serde_json::Value)>) = match basis {
        Basis::H => (
            "h",
            series
                .terms()
                .map(|(m, c)| (m.clone(), serde_json::to_value(c).unwrap()))
                .collect(),
        ),
        Basis::Schur => (
            "schur",
            series
                .to_schur()?
                .into_iter()
                .map(|(m, c)| (m, serde_json::to_value(&c).unwrap()))
                .collect(),
        ),
    };
    match format {
        Format::Json => {
            let terms: Vec<serde_json::Value> = terms
                .iter()
                .map(|(m, c)| serde_json::json!({"partition": m.parts(), "coef": c}))
                .collect();
            println!(
                "{}",
                serde_json::json!({"cap": series.cap(), "basis": basis_name, "terms": terms})
            );
        }
        Format::Text => {
            let sym = if matches!(basis, Basis::H) { "h" } else { "s" };
            for (m, c) in terms {
                println!("{sym}{} : {}", m, c);
            }
        }
    }
    Ok(())
}

fn print_inf_series(series: &SymSeries<kgrass::coeff::IndexedRing>, format: Format) {
    match format {
        Format::Json => {
            let terms: Vec<serde_json::Value> = series
                .terms()
                .map(|(m, c)| {
                    serde_json::json!({
                        "partition": m.parts(),
                        "coef": format!("{:?}", c),
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::json!({"cap": series.cap(), "basis": "h", "terms": terms})
            );
        }
        Format::Text => {
            for (m, c) in series.terms() {
                println!("h{} : {:?}", m, c);
            }
        }
    }
}

fn structure(args: StructureArgs) -> kgrass::Result<ExitCode> {
    let c = &args.common;
    let datum = datum_for(c.group, c.n)?;
    let u = parse_element(&datum, &args.u)?;
    let v = parse_element(&datum, &args.v)?;
    let kind = match args.sc_basis.as_str() {
        "ideal" => ClassKind::Ideal,
        "structure" => ClassKind::Structure,
        other => return Err(Error::Parse(format!("bad basis {other:?}"))),
    };
    let p = Peterson::new(&datum);
    match p.expand_product(&u, &v, kind) {
        Ok(terms) => {
            let items: Vec<serde_json::Value> = terms
                .iter()
                .map(|(w, coef)| {
                    serde_json::json!({
                        "w": kgrass::ext_weyl::element_json(w),
                        "coef": coef,
                    })
                })
                .collect();
            println!(
                "{}",
                serde_json::json!({
                    "u": kgrass::ext_weyl::element_json(&u),
                    "v": kgrass::ext_weyl::element_json(&v),
                    "basis": args.sc_basis,
                    "terms": items,
                })
            );
            Ok(ExitCode::SUCCESS)
        }
        Err(Error::GrassmannianResidual(msg)) => {
            eprintln!("residual check failed: {msg}");
            Ok(ExitCode::from(1))
        }
        Err(e) => Err(e),
    }
}

fn verify(args: VerifyArgs) -> kgrass::Result<ExitCode> {
    let scale = Scale {
        n: args.n,
        cap: args.cap,
        max_len: args.maxlen,
        max_size: args.maxsize,
        seed: args.seed,
    };
    let report = run_suite(&args.suite, scale)?;
    match args.format {
        Format::Json => println!("{}", serde_json::to_string(&report).unwrap()),
        Format::Text => {
            println!(
                "suite {}: {} cases, {} failures",
                report.suite,
                report.cases,
                report.failures.len()
            );
            for f in &report.failures {
                println!("  FAIL {f}");
            }
        }
    }
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

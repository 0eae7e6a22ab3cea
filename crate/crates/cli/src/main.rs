mod report;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use bms_core::algebra::{Generator, HalfInt};
use bms_core::exactnum::{parse_rational, Poly, Rational, Var};
use bms_core::freefield::{
    bms_whittaker_simple, fock_simple, fock_whittaker_simple, hc_whittaker_simple, residual_suite,
    whittaker_action_table, FfrParams, FreeFieldModule, HcModuleSpec,
};
use bms_core::pbw::{partition_count, weight_basis};
use bms_core::verma::{
    determinant_check, first_degenerate_level, gram_data, random_points, singular_vectors,
    verma_simple, GramReport, WeightParams,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

use report::{
    DetcheckReport, FfrReport, Format, PartitionReport, Render, SimplicityReport, SingularReport,
    WhittakerReport,
};

/// Seed used by `detcheck` when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 20240601;

#[derive(Debug, Parser)]
#[command(
    name = "bms",
    version,
    about = "Exact computations for the N=1 BMS superalgebra"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Gram matrix G_n, the matrix D_n and det G_n of a Verma module.
    Gram(GramArgs),
    /// Check det G_n = +-prod of the diagonal of D_n.
    Detcheck(DetcheckArgs),
    /// Evaluate one of the simplicity criteria.
    Simplicity(SimplicityArgs),
    /// Singular vectors of a numeric Verma module at one level.
    Singular(SingularArgs),
    /// Verify the free-field realization through commutator residuals.
    FfrVerify(FfrArgs),
    /// Action of the positive modes on the Whittaker vector.
    Whittaker(WhittakerArgs),
    /// Dimension of a weight space of the Verma module.
    Partition(PartitionArgs),
}

fn half_int(s: &str) -> Result<HalfInt, String> {
    s.parse().map_err(|e: bms_core::Error| e.to_string())
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// `symbolic` or a rational number.
fn rho_value(s: &str) -> Result<Poly, String> {
    if s == "symbolic" {
        Ok(Poly::var(Var::Rho))
    } else {
        rational(s).map(Poly::constant)
    }
}

#[derive(Debug, Args)]
struct WeightArgs {
    /// Keep h1, h2, c1, c2 symbolic.
    #[arg(long, conflicts_with_all = ["h1", "h2", "c1", "c2"])]
    symbolic: bool,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    h1: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    h2: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    c1: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    c2: Option<Rational>,
}

impl WeightArgs {
    /// Unset values stay symbolic.
    fn params(&self) -> WeightParams {
        let pick = |v: &Option<Rational>, var| v.clone().map_or(Poly::var(var), Poly::constant);
        WeightParams {
            h1: pick(&self.h1, Var::H1),
            h2: pick(&self.h2, Var::H2),
            c1: pick(&self.c1, Var::C1),
            c2: pick(&self.c2, Var::C2),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MatrixKind {
    Gram,
    Dmat,
}

#[derive(Debug, Args)]
struct GramArgs {
    /// Weight level, e.g. 3/2.
    #[arg(long, value_parser = half_int, allow_hyphen_values = true)]
    level: HalfInt,
    #[command(flatten)]
    weight: WeightArgs,
    /// Matrix written in CSV output.
    #[arg(long, value_enum, default_value_t = MatrixKind::Dmat)]
    matrix: MatrixKind,
}

#[derive(Debug, Args)]
struct DetcheckArgs {
    /// Highest level checked; every level from 0 up is included.
    #[arg(long, value_parser = half_int, default_value = "7/2")]
    level: HalfInt,
    /// Check with symbolic parameters instead of random points.
    #[arg(long)]
    symbolic: bool,
    /// Random rational points per level.
    #[arg(long, default_value_t = 5)]
    trials: usize,
    /// Seed for the random points.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Criterion {
    Verma,
    Fock,
    HcWhittaker,
    FockWhittaker,
    BmsWhittaker,
}

#[derive(Debug, Args)]
struct SimplicityArgs {
    #[arg(long, value_enum, default_value_t = Criterion::Verma)]
    kind: Criterion,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    h2: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    c2: Option<Rational>,
    /// Largest i listed among the violations.
    #[arg(long, default_value_t = 50)]
    max_i: u64,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    b: Option<Rational>,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    rho: Option<Rational>,
    /// phi(k) for the Heisenberg-Clifford Whittaker module.
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    phi_k: Option<Rational>,
    /// phi(b_1) for the Fock Whittaker module.
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    phi_b1: Option<Rational>,
    /// Depth of the BMS Whittaker character.
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
    /// Character values such as `M[2]=1`; repeat or separate with commas.
    #[arg(long, value_delimiter = ',')]
    phi: Vec<String>,
}

#[derive(Debug, Args)]
struct SingularArgs {
    #[arg(long, value_parser = half_int)]
    level: HalfInt,
    #[command(flatten)]
    weight: WeightArgs,
    /// Largest raising mode tested; defaults to the level rounded up plus one.
    #[arg(long)]
    mode_cutoff: Option<u32>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SpecKind {
    Fock,
    Whittaker,
}

#[derive(Debug, Args)]
struct FfrArgs {
    #[arg(long, value_parser = half_int, default_value = "3")]
    max_mode: HalfInt,
    #[arg(long, value_parser = half_int, default_value = "4")]
    max_depth: HalfInt,
    /// `symbolic` or a rational value.
    #[arg(long, value_parser = rho_value, default_value = "symbolic", allow_hyphen_values = true)]
    rho: Poly,
    #[arg(long, value_enum, default_value_t = SpecKind::Fock)]
    spec: SpecKind,
}

#[derive(Debug, Args)]
struct WhittakerArgs {
    #[arg(long, default_value_t = 6)]
    max_mode: i64,
    /// `symbolic` or a rational value.
    #[arg(long, value_parser = rho_value, default_value = "symbolic", allow_hyphen_values = true)]
    rho: Poly,
}

#[derive(Debug, Args)]
struct PartitionArgs {
    #[arg(long, value_parser = half_int)]
    n: HalfInt,
    /// Also list the basis monomials.
    #[arg(long)]
    list: bool,
}

struct Failure(String);

impl From<bms_core::Error> for Failure {
    fn from(e: bms_core::Error) -> Self {
        Failure(e.to_string())
    }
}

fn require<T: Clone>(v: &Option<T>, flag: &str) -> Result<T, Failure> {
    v.clone()
        .ok_or_else(|| Failure(format!("--{flag} is required for this criterion")))
}

fn simplicity(args: &SimplicityArgs) -> Result<SimplicityReport, Failure> {
    let mut inputs = BTreeMap::new();
    let mut verma = None;
    let mut first_degenerate = None;
    let (kind, simple) = match args.kind {
        Criterion::Verma => {
            let (h2, c2) = (require(&args.h2, "h2")?, require(&args.c2, "c2")?);
            inputs.insert("h2".to_string(), h2.to_string());
            inputs.insert("c2".to_string(), c2.to_string());
            let result = verma_simple(&h2, &c2, args.max_i);
            first_degenerate = first_degenerate_level(&h2, &c2);
            let simple = result.simple;
            verma = Some(result);
            ("verma", simple)
        }
        Criterion::Fock => {
            let (b, rho) = (require(&args.b, "b")?, require(&args.rho, "rho")?);
            inputs.insert("b".to_string(), b.to_string());
            inputs.insert("rho".to_string(), rho.to_string());
            ("fock", fock_simple(&b, &rho))
        }
        Criterion::HcWhittaker => {
            let k = require(&args.phi_k, "phi-k")?;
            inputs.insert("phi_k".to_string(), k.to_string());
            ("hc-whittaker", hc_whittaker_simple(&k))
        }
        Criterion::FockWhittaker => {
            let b1 = require(&args.phi_b1, "phi-b1")?;
            inputs.insert("phi_b1".to_string(), b1.to_string());
            ("fock-whittaker", fock_whittaker_simple(&b1))
        }
        Criterion::BmsWhittaker => {
            let k = require(&args.k, "k")?;
            let mut phi = BTreeMap::new();
            for entry in &args.phi {
                let (g, v) = entry
                    .split_once('=')
                    .ok_or_else(|| Failure(format!("expected GEN=VALUE, got `{entry}`")))?;
                let g: Generator = g.trim().parse()?;
                let v = parse_rational(v.trim())?;
                inputs.insert(g.to_string(), v.to_string());
                phi.insert(g, v);
            }
            inputs.insert("k".to_string(), k.to_string());
            ("bms-whittaker", bms_whittaker_simple(k, &phi)?)
        }
    };
    Ok(SimplicityReport {
        kind: kind.to_string(),
        inputs,
        simple,
        verma,
        first_degenerate_level: first_degenerate,
    })
}

fn levels_upto(n: HalfInt) -> impl Iterator<Item = HalfInt> {
    (0..=n.twice()).map(HalfInt::from_twice)
}

fn run(cli: &Cli) -> Result<(Box<dyn Render>, bool), Failure> {
    Ok(match &cli.command {
        Command::Gram(args) => {
            let data = gram_data(args.level, &args.weight.params())?;
            let report = report::GramOutput {
                report: GramReport::new(&data)?,
                csv_matrix: matches!(args.matrix, MatrixKind::Gram),
            };
            (Box::new(report), true)
        }
        Command::Detcheck(args) => {
            let mut checks = Vec::new();
            for n in levels_upto(args.level) {
                if args.symbolic {
                    checks.push(determinant_check(n, &WeightParams::symbolic())?);
                } else {
                    for params in random_points(args.seed, args.trials) {
                        checks.push(determinant_check(n, &params)?);
                    }
                }
            }
            let ok = checks.iter().all(|c| c.agrees());
            let seed = (!args.symbolic).then_some(args.seed);
            (Box::new(DetcheckReport { seed, checks }), ok)
        }
        Command::Simplicity(args) => (Box::new(simplicity(args)?), true),
        Command::Singular(args) => {
            let params = args.weight.params();
            let cutoff = args
                .mode_cutoff
                .unwrap_or((args.level.twice() as u32).div_ceil(2) + 1);
            let vectors = singular_vectors(args.level, &params, cutoff)?;
            let report = SingularReport {
                level: args.level,
                params,
                mode_cutoff: cutoff,
                basis: weight_basis(args.level),
                vectors,
            };
            (Box::new(report), true)
        }
        Command::FfrVerify(args) => {
            let spec = match args.spec {
                SpecKind::Fock => HcModuleSpec::fock_symbolic(),
                SpecKind::Whittaker => HcModuleSpec::whittaker_symbolic(),
            };
            let params = FfrParams::new(args.rho.clone());
            let (c1, c2) = params.central_charges();
            let module = FreeFieldModule::new(spec, params);
            let pairs = residual_suite(&module, args.max_mode, args.max_depth)?;
            let passed = pairs.iter().all(|r| r.passed());
            let report = FfrReport {
                spec: match args.spec {
                    SpecKind::Fock => "fock".into(),
                    SpecKind::Whittaker => "whittaker".into(),
                },
                rho: args.rho.clone(),
                max_mode: args.max_mode,
                max_depth: args.max_depth,
                central: [c1, c2],
                pairs,
                passed,
            };
            (Box::new(report), passed)
        }
        Command::Whittaker(args) => {
            let actions = whittaker_action_table(
                &HcModuleSpec::whittaker_symbolic(),
                &FfrParams::new(args.rho.clone()),
                args.max_mode,
            )?;
            let report = WhittakerReport {
                rho: args.rho.clone(),
                max_mode: args.max_mode,
                actions,
            };
            (Box::new(report), true)
        }
        Command::Partition(args) => {
            let report = PartitionReport {
                level: args.n,
                count: partition_count(args.n),
                basis: args.list.then(|| weight_basis(args.n)),
            };
            (Box::new(report), true)
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let (report, verified) = match run(&cli) {
        Ok(out) => out,
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    let text = match report.render(cli.format) {
        Ok(text) => text,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    if verified {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    }
}

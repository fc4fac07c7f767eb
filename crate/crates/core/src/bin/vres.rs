use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use vres::cohomology::CohomologyOptions;
use vres::complex::{free_resolution, ChainComplex};
use vres::curves::{curve_from_p3_to_p1p2, random_monomial_curve, random_rational_curve, sample_space_curve};
use vres::problem::{ComplexFile, ProblemFile, DEFAULT_CHARACTERISTIC};
use vres::virtual_res::{
    is_virtual_with, multigraded_regularity, resolve_via_fat_point, virtual_of_pair, virtual_of_pair_complex,
    RegularityOptions, Strategy,
};
use vres::{AlgebraError, Ideal, Multidegree, MultigradedRing, PrimeField};

#[derive(Parser)]
#[command(name = "vres", version, about = "Virtual resolutions over products of projective spaces")]
struct Cli {
    /// JSON problem file.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Output::Table)]
    output: Output,
    /// Characteristic when the input names none.
    #[arg(long = "char", global = true, default_value_t = DEFAULT_CHARACTERISTIC)]
    characteristic: u32,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Homology,
    Determinantal,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal free resolution of the input module.
    Resolve,
    /// Multigraded Betti table of the minimal free resolution.
    Betti,
    /// Virtual resolution of a pair, keeping summands below the bounds.
    VirtualOfPair {
        /// Semicolon separated degrees, e.g. "3,1" or "3,1;2,2".
        #[arg(long)]
        bounds: String,
        /// Prune the minimal free resolution instead of bounded Schreyer syzygies.
        #[arg(long)]
        from_resolution: bool,
    },
    /// Minimal free resolution of S/(J ∩ B^a).
    FatPoint {
        #[arg(long)]
        a: String,
    },
    /// Decide whether a complex is a virtual resolution.
    IsVirtual {
        /// Complex file, or the JSON output of a resolving command.
        #[arg(long)]
        complex: PathBuf,
        #[arg(long, value_enum, default_value_t = StrategyArg::Homology)]
        strategy: StrategyArg,
    },
    /// Minimal elements of the multigraded regularity of a B-saturated module.
    Regularity {
        #[arg(long, default_value_t = 3)]
        window: usize,
        #[arg(long, default_value_t = 10)]
        t_max: usize,
        #[arg(long)]
        lower: Option<String>,
        #[arg(long)]
        upper: Option<String>,
    },
    /// Saturate the input ideal by the irrelevant ideal.
    Saturate,
    /// Krull dimension of S/I.
    Dim,
    /// Image of a space curve in P1 x P2.
    CurveFromP3 {
        #[arg(long)]
        preserve_degree: bool,
        #[arg(long, conflicts_with = "ideal_file")]
        sample: Option<String>,
        /// Problem file over factors [3].
        #[arg(long)]
        ideal_file: Option<PathBuf>,
    },
    /// Rational curve in P1 x P2 parametrized by random binary forms of degrees d and e.
    RandomRationalCurve { d: u32, e: u32 },
    /// Rational curve in P1 x P2 parametrized by monomials of degrees d and e.
    RandomMonomialCurve { d: u32, e: u32 },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{0}")]
    Usage(String),
}

type CliResult<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn problem(cli: &Cli) -> CliResult<(ProblemFile, MultigradedRing)> {
    let path = cli.input.as_deref().ok_or_else(|| CliError::Usage("this command needs --input FILE".into()))?;
    let pf = ProblemFile::from_json(&read(path)?)?;
    let ring = pf.ring(cli.characteristic)?;
    Ok((pf, ring))
}

fn degrees(text: &str) -> CliResult<Vec<Multidegree>> {
    Ok(text.split(';').map(str::parse).collect::<Result<Vec<Multidegree>, _>>()?)
}

fn print_json<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn emit_complex(out: Output, c: &ChainComplex, betti_only: bool) {
    match out {
        Output::Table if betti_only => print!("{}", c.betti()),
        Output::Table => {
            println!("{}", c.summary());
            println!();
            print!("{}", c.betti());
        }
        Output::Json if betti_only => print_json(&json!({ "betti": c.betti().to_entries() })),
        Output::Json => print_json(&json!({
            "ranks": c.ranks(),
            "betti": c.betti().to_entries(),
            "complex": ComplexFile::from_complex(c),
        })),
    }
}

fn emit_ideal(out: Output, i: &Ideal) {
    match out {
        Output::Table => {
            for g in i.gens() {
                println!("{g}");
            }
        }
        Output::Json => print_json(&ProblemFile::from_ideal(i)),
    }
}

fn load_complex(path: &Path) -> CliResult<ChainComplex> {
    let v: serde_json::Value =
        serde_json::from_str(&read(path)?).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let v = v.get("complex").cloned().unwrap_or(v);
    let cf: ComplexFile = serde_json::from_value(v).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    Ok(cf.to_complex()?)
}

fn run(cli: &Cli) -> CliResult<()> {
    let out = cli.output;
    match &cli.command {
        Command::Resolve | Command::Betti => {
            let (pf, ring) = problem(cli)?;
            let c = free_resolution(&pf.presentation(&ring)?);
            emit_complex(out, &c, matches!(cli.command, Command::Betti));
        }
        Command::VirtualOfPair { bounds, from_resolution } => {
            let (pf, ring) = problem(cli)?;
            let p = pf.presentation(&ring)?;
            let bounds = degrees(bounds)?;
            let c = if *from_resolution {
                virtual_of_pair_complex(&free_resolution(&p), &bounds)?
            } else {
                virtual_of_pair(&p, &bounds)?
            };
            emit_complex(out, &c, false);
        }
        Command::FatPoint { a } => {
            let (pf, ring) = problem(cli)?;
            let a: Multidegree = a.parse()?;
            let a: Vec<i64> = a.iter().map(i64::from).collect();
            emit_complex(out, &resolve_via_fat_point(&pf.ideal(&ring)?, &a)?, false);
        }
        Command::IsVirtual { complex, strategy } => {
            let c = load_complex(complex)?;
            let b = Ideal::irrelevant(c.ring());
            let expected = match &cli.input {
                Some(_) => {
                    let (pf, _) = problem(cli)?;
                    Some(pf.ideal(c.ring())?)
                }
                None => None,
            };
            let strategy = match strategy {
                StrategyArg::Homology => Strategy::Homology,
                StrategyArg::Determinantal => Strategy::Determinantal,
            };
            let report = is_virtual_with(&b, &c, strategy, expected.as_ref())?;
            match out {
                Output::Table => {
                    println!("{}", report.verdict);
                    for e in &report.evidence {
                        println!("  {}", serde_json::to_string(e).expect("serializable"));
                    }
                }
                Output::Json => print_json(&report),
            }
        }
        Command::Regularity { window, t_max, lower, upper } => {
            let (pf, ring) = problem(cli)?;
            let opts = RegularityOptions {
                cohomology: CohomologyOptions { window: *window, t_max: *t_max },
                lower: lower.as_deref().map(str::parse).transpose()?,
                upper: upper.as_deref().map(str::parse).transpose()?,
            };
            let r = multigraded_regularity(&pf.presentation(&ring)?, &opts)?;
            match out {
                Output::Table => {
                    let els: Vec<String> = r.minimal_elements.iter().map(|d| d.to_string()).collect();
                    println!("{}", els.join(" "));
                }
                Output::Json => print_json(&r),
            }
        }
        Command::Saturate => {
            let (pf, ring) = problem(cli)?;
            emit_ideal(out, &pf.ideal(&ring)?.saturate_irrelevant().normalized());
        }
        Command::Dim => {
            let (pf, ring) = problem(cli)?;
            let d = pf.ideal(&ring)?.krull_dimension();
            match out {
                Output::Table => println!("{d}"),
                Output::Json => print_json(&json!({ "dim": d })),
            }
        }
        Command::CurveFromP3 { preserve_degree, sample, ideal_file } => {
            let field = PrimeField::new(cli.characteristic)?;
            let i = match (sample, ideal_file) {
                (Some(name), _) => sample_space_curve(name, field)?,
                (None, Some(path)) => {
                    let pf = ProblemFile::from_json(&read(path)?)?;
                    if pf.factors != [3] {
                        return Err(CliError::Usage("the space curve file must have factors [3]".into()));
                    }
                    pf.ideal(&pf.ring(cli.characteristic)?)?
                }
                (None, None) => return Err(CliError::Usage("give --sample NAME or --ideal-file FILE".into())),
            };
            emit_ideal(out, &curve_from_p3_to_p1p2(&i, *preserve_degree)?);
        }
        Command::RandomRationalCurve { d, e } => {
            let field = PrimeField::new(cli.characteristic)?;
            emit_ideal(out, &random_rational_curve(*d, *e, field, cli.seed)?);
        }
        Command::RandomMonomialCurve { d, e } => {
            let field = PrimeField::new(cli.characteristic)?;
            emit_ideal(out, &random_monomial_curve(*d, *e, field, cli.seed)?);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    if let Some(n) = std::env::var("VRES_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        // only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                CliError::Algebra(AlgebraError::NotStabilized { .. }) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num::BigRational;

use twotangle::enumerate::enumerate_movies;
use twotangle::io::catalog_file::parse_catalog_file;
use twotangle::io::json::export_report_json;
use twotangle::io::model_file::parse_model_file;
use twotangle::io::parse::{parse_term, Term};
use twotangle::io::print::{boundary_to_string, normal_to_string, two_to_string};
use twotangle::io::render::{render_ascii, render_movie_ascii, render_movie_svg, render_svg};
use twotangle::models::{verify_all, LinearModel, Report, Scalar};
use twotangle::movie::normalize;
use twotangle::relations::{equivalent_bounded, ArgPool, Catalog, SampleConfig, Verdict};
use twotangle::two::two_boundary;
use twotangle::{Error, ObjectExpr};

const EXIT_USAGE: u8 = 1;
const EXIT_TERM: u8 = 2;
const EXIT_VERDICT: u8 = 3;

#[derive(Parser)]
#[command(name = "t2", version, about = "Terms, movies and linear models for 2-tangles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Typecheck a term and print its boundary.
    Check { file: PathBuf },
    /// Print the normal form of a term.
    Normalize { file: PathBuf },
    /// Search for a derivation between two 2-morphisms.
    Eq {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value_t = 4)]
        depth: usize,
    },
    /// Evaluate a term in a linear model (exact unless a tolerance is given).
    Eval {
        file: PathBuf,
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// Check a model against the generator cells and sampled relations.
    VerifyModel {
        model: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        per_schema: usize,
        #[arg(long, value_enum, default_value_t = PoolArg::Generators)]
        pool: PoolArg,
        #[arg(long)]
        tolerance: Option<f64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Draw a morphism, or every frame of a 2-morphism.
    Render {
        file: PathBuf,
        #[arg(long)]
        svg: bool,
    },
    /// List every movie of elementary sheets up to a size.
    Enumerate {
        #[arg(long)]
        sheets: usize,
        #[arg(long, default_value_t = 3)]
        max_width: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PoolArg {
    Generators,
    Composites,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: String) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message,
        }
    }

    fn term(path: &Path, e: Error) -> Failure {
        Failure {
            code: EXIT_TERM,
            message: format!("{}: {e}", path.display()),
        }
    }
}

type Outcome = std::result::Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load_term(path: &Path) -> Result<Term, Failure> {
    parse_term(&read(path)?).map_err(|e| Failure::term(path, e))
}

fn load_model<T: Scalar>(path: &Path) -> Result<LinearModel<T>, Failure> {
    parse_model_file(&read(path)?)
        .and_then(|file| file.build())
        .map_err(|e| Failure::term(path, e))
}

fn catalog() -> Result<Catalog, Failure> {
    let mut catalog = Catalog::shipped();
    if let Some(path) = std::env::var_os("T2_CATALOG") {
        let path = PathBuf::from(path);
        for schema in parse_catalog_file(&read(&path)?).map_err(|e| Failure::term(&path, e))? {
            catalog.register(schema);
        }
    }
    Ok(catalog)
}

fn check(file: &Path) -> Outcome {
    match load_term(file)? {
        Term::Mor(f) => {
            let n = f.normalize().map_err(|e| Failure::term(file, e))?;
            println!("{} → {}", ObjectExpr(n.input), ObjectExpr(n.output()));
        }
        Term::Two(a) => {
            let (s, t) = two_boundary(&a).map_err(|e| Failure::term(file, e))?;
            println!("{} ⇒ {}", boundary_to_string(&s), boundary_to_string(&t));
        }
    }
    Ok(0)
}

fn normalize_cmd(file: &Path) -> Outcome {
    match load_term(file)? {
        Term::Mor(f) => {
            let n = f.normalize().map_err(|e| Failure::term(file, e))?;
            println!("{}", normal_to_string(&n));
        }
        Term::Two(a) => {
            let m = normalize(&a).map_err(|e| Failure::term(file, e))?;
            println!("{}", two_to_string(&m.to_term()));
        }
    }
    Ok(0)
}

fn two_term(path: &Path) -> Result<twotangle::TwoTerm, Failure> {
    match load_term(path)? {
        Term::Two(a) => Ok(a),
        Term::Mor(_) => Err(Failure::usage(format!(
            "{}: expected a 2-morphism, found a morphism",
            path.display()
        ))),
    }
}

fn eq(a: &Path, b: &Path, depth: usize) -> Outcome {
    let (x, y) = (two_term(a)?, two_term(b)?);
    let catalog = catalog()?;
    let verdict = equivalent_bounded(&x, &y, depth, &catalog).map_err(|e| Failure {
        code: EXIT_TERM,
        message: e.to_string(),
    })?;
    match verdict {
        Verdict::Equal(path) => {
            println!("equal in {} step{}", path.len(), if path.len() == 1 { "" } else { "s" });
            for step in path {
                println!("  {step}");
            }
            Ok(0)
        }
        Verdict::Unknown => {
            println!("unknown within depth {depth}");
            Ok(EXIT_VERDICT)
        }
    }
}

fn eval_in<T: Scalar>(term: Term, file: &Path, model: &LinearModel<T>) -> Outcome {
    match term {
        Term::Mor(f) => {
            let m = model.evaluate_morphism(&f).map_err(|e| Failure::term(file, e))?;
            print!("{m}");
            Ok(0)
        }
        Term::Two(a) => {
            let w = model.evaluate_two(&a).map_err(|e| Failure::term(file, e))?;
            println!("source:");
            print!("{}", w.source);
            println!("target:");
            print!("{}", w.target);
            println!("deviation: {}", w.max_deviation);
            if let Some(s) = &w.scalar {
                println!("scalar: {s}");
            }
            println!("{}", if w.pass { "pass" } else { "fail" });
            Ok(if w.pass { 0 } else { EXIT_VERDICT })
        }
    }
}

fn eval(file: &Path, model: &Path, tolerance: Option<f64>) -> Outcome {
    let term = load_term(file)?;
    match tolerance {
        None => eval_in(term, file, &load_model::<BigRational>(model)?),
        Some(t) => eval_in(term, file, &load_model::<f64>(model)?.with_tolerance(t)),
    }
}

fn print_report(report: &Report, format: Format) {
    match format {
        Format::Json => println!("{}", String::from_utf8_lossy(&export_report_json(report))),
        Format::Text => {
            for e in &report.entries {
                let status = if e.pass { "PASS" } else { "FAIL" };
                print!("{status} {} {} deviation={}", e.id, e.relation, e.max_deviation);
                match &e.error {
                    Some(err) => println!(" error={err}"),
                    None => println!(),
                }
            }
            println!("pass {} fail {}", report.summary.pass, report.summary.fail);
        }
    }
}

fn verify(
    model: &Path,
    config: SampleConfig,
    tolerance: Option<f64>,
    format: Format,
) -> Outcome {
    let catalog = catalog()?;
    let report = match tolerance {
        None => verify_all(&load_model::<BigRational>(model)?, &catalog, config),
        Some(t) => verify_all(&load_model::<f64>(model)?.with_tolerance(t), &catalog, config),
    };
    print_report(&report, format);
    Ok(if report.all_pass() { 0 } else { EXIT_VERDICT })
}

fn render(file: &Path, svg: bool) -> Outcome {
    match load_term(file)? {
        Term::Mor(f) => {
            let n = f.normalize().map_err(|e| Failure::term(file, e))?;
            print!("{}", if svg { render_svg(&n) } else { render_ascii(&n) });
        }
        Term::Two(a) => {
            let m = normalize(&a).map_err(|e| Failure::term(file, e))?;
            print!("{}", if svg { render_movie_svg(&m) } else { render_movie_ascii(&m) });
        }
    }
    Ok(0)
}

fn enumerate(sheets: usize, max_width: usize) -> Outcome {
    if sheets == 0 {
        return Err(Failure::usage("--sheets must be at least 1".into()));
    }
    let movies = enumerate_movies(sheets, max_width);
    for m in &movies {
        println!("{}", two_to_string(&m.to_term()));
    }
    eprintln!("{} movies", movies.len());
    Ok(0)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Check { file } => check(&file),
        Command::Normalize { file } => normalize_cmd(&file),
        Command::Eq { a, b, depth } => eq(&a, &b, depth),
        Command::Eval {
            file,
            model,
            tolerance,
        } => eval(&file, &model, tolerance),
        Command::VerifyModel {
            model,
            seed,
            per_schema,
            pool,
            tolerance,
            format,
        } => {
            let pool = match pool {
                PoolArg::Generators => ArgPool::Generators,
                PoolArg::Composites => ArgPool::Composites,
            };
            let config = SampleConfig {
                seed,
                per_schema,
                pool,
            };
            verify(&model, config, tolerance, format)
        }
        Command::Render { file, svg } => render(&file, svg),
        Command::Enumerate { sheets, max_width } => enumerate(sheets, max_width),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("t2: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

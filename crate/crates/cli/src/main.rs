//! Command-line front end: materialize sequences and matrices from JSON
//! specs, compute exact leading principal minors, check equimodularity and
//! the Toeplitz factorization, identify minor sequences, solve recurrence
//! targets, and run the built-in verification suites.
//!
//! Exit codes: 0 on success / verdict true, 1 on verdict false or failed
//! verification, 2 on parse or I/O errors. Output is deterministic.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use equimod::json::{parse_matrix_json, parse_sequence_json};
use equimod::verify::{run_all, run_suite, suite_names, ClaimReport};
use equimod::{
    build, check_equimodular, identify_minor_sequence, leading_minors, materialize, minors_auto,
    parse_scalar, predicted_minor, solve_family, verify_factorization, DenseMatrix, Error,
    FieldTag, MatrixFamily, MatrixSpec, MinorSequence, QuadScalar, RecurrenceTarget,
    SequenceWindow,
};

#[derive(Parser)]
#[command(
    name = "equimod",
    about = "Exact minors of structured matrix families over Q(sqrt(d))",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineChoice {
    /// Per-block elimination oracle.
    Oracle,
    /// Cheapest applicable engine (closed recurrence, Hessenberg, oracle).
    Auto,
}

#[derive(Args)]
struct FieldArg {
    /// Radicand of the ambient field; 0 means plain rationals.
    #[arg(long = "field-d", default_value_t = 0)]
    field_d: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Materialize a sequence spec.
    Seq {
        /// Path to a sequence spec JSON document.
        #[arg(long)]
        spec: PathBuf,
        /// Last index to materialize (terms 0..=n).
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Build a matrix spec and print its grid.
    Build {
        /// Path to a matrix spec JSON document.
        #[arg(long)]
        spec: PathBuf,
        /// Override the order stored in the document.
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Leading principal minors d0..=dn of a matrix spec. The three-value
    /// Toeplitz family instead follows its det T_1 = c indexing: rows 1..=n
    /// of an order-n matrix.
    Minors {
        #[arg(long)]
        spec: PathBuf,
        /// Last minor index (the matrix is built at order n + 1).
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = EngineChoice::Oracle)]
        engine: EngineChoice,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Compare the leading minors of two or more matrix specs.
    Equimodular {
        /// Paths to matrix spec JSON documents.
        #[arg(long, num_args = 2.., required = true)]
        specs: Vec<PathBuf>,
        /// Last minor index to compare.
        #[arg(long)]
        upto: usize,
    },
    /// Check the unit-triangular times Hessenberg factorization.
    Factorcheck {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Match a minor sequence against named families.
    Identify {
        /// CSV file of values, either one value per line or n,value rows.
        #[arg(long = "values-from")]
        values_from: PathBuf,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Solve for the Toeplitz families with a prescribed minor recurrence.
    Solve {
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        /// Print the predicted-vs-computed table through this index.
        #[arg(long, default_value_t = 12)]
        n: usize,
    },
    /// Run the built-in verification suites and print a line per claim.
    #[command(name = "verify-paper")]
    VerifyPaper {
        /// Run a single suite (see --list).
        #[arg(long)]
        suite: Option<String>,
        /// List available suite names and exit.
        #[arg(long)]
        list: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn field_tag(arg: &FieldArg) -> Result<FieldTag, Error> {
    FieldTag::new(arg.field_d)
}

fn read(path: &PathBuf) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn dispatch(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Seq {
            spec,
            n,
            field,
            format,
        } => {
            let spec = parse_sequence_json(&read(&spec)?, field_tag(&field)?)?;
            let window = materialize(&spec, n)?;
            print_window(&window, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Build {
            spec,
            order,
            format,
        } => {
            let spec = parse_matrix_json(&read(&spec)?, order)?;
            let matrix = build(&spec)?;
            print_matrix(&matrix, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Minors {
            spec,
            n,
            engine,
            format,
        } => {
            let mut spec = parse_matrix_json(&read(&spec)?, Some(n + 1))?;
            // det T_1 = c indexing for the three-value family
            let offset = if matches!(spec.family, MatrixFamily::ToeplitzAbc { .. }) {
                if n == 0 {
                    return Err(Error::BadSpec(
                        "three-value Toeplitz minors start at n = 1".into(),
                    ));
                }
                spec = spec.at_order(n);
                1
            } else {
                0
            };
            let minors = match engine {
                EngineChoice::Oracle => leading_minors(&build(&spec)?),
                EngineChoice::Auto => minors_auto(&spec)?,
            };
            print_minors(&minors, offset, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Equimodular { specs, upto } => {
            let parsed = specs
                .iter()
                .map(|p| parse_matrix_json(&read(p)?, Some(upto + 1)))
                .collect::<Result<Vec<MatrixSpec>, Error>>()?;
            let report = check_equimodular(&parsed, upto)?;
            if report.verdict {
                println!("equimodular: true (minors agree through index {upto})");
                Ok(ExitCode::SUCCESS)
            } else {
                let divergence = report
                    .first_divergence
                    .expect("divergence on false verdict");
                println!("equimodular: false");
                println!("first divergence: {divergence}");
                Ok(ExitCode::from(1))
            }
        }
        Command::Factorcheck { a, b, r, n, field } => {
            let tag = field_tag(&field)?;
            let a = parse_scalar(&a, tag)?;
            let b = parse_scalar(&b, tag)?;
            let r = parse_scalar(&r, tag)?;
            let holds = verify_factorization(&a, &b, &r, n)?;
            println!("factorization holds at n = {n}: {holds}");
            Ok(if holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Identify { values_from, field } => {
            let tag = field_tag(&field)?;
            let text = read(&values_from)?;
            let values = parse_value_rows(&text, tag)?;
            let matches = identify_minor_sequence(&values);
            if matches.is_empty() {
                println!("no matches");
                Ok(ExitCode::from(1))
            } else {
                for m in matches {
                    println!("{m}");
                }
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Solve { r, s, c, n } => {
            run_solve(&r, &s, &c, n)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyPaper { suite, list } => {
            if list {
                for name in suite_names() {
                    println!("{name}");
                }
                return Ok(ExitCode::SUCCESS);
            }
            let reports = match &suite {
                Some(name) => run_suite(name)
                    .ok_or_else(|| Error::BadSpec(format!("unknown suite {name}")))?,
                None => run_all(),
            };
            Ok(print_claims(&reports))
        }
    }
}

fn print_window(window: &SequenceWindow, format: Format) {
    match format {
        Format::Csv => {
            for (i, term) in window.terms().iter().enumerate() {
                println!("{i},{term}");
            }
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = window
                .terms()
                .iter()
                .enumerate()
                .map(|(i, term)| serde_json::json!({"i": i, "value": term.to_string()}))
                .collect();
            println!("{}", serde_json::Value::Array(items));
        }
    }
}

fn print_matrix(matrix: &DenseMatrix, format: Format) {
    match format {
        Format::Csv => {
            for row in matrix.rows() {
                let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
                println!("{}", cells.join(","));
            }
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = matrix
                .rows()
                .map(|row| {
                    serde_json::Value::Array(
                        row.iter()
                            .map(|e| serde_json::Value::String(e.to_string()))
                            .collect(),
                    )
                })
                .collect();
            let doc = serde_json::json!({
                "field": {"d": matrix.field().d()},
                "order": matrix.order(),
                "rows": rows,
            });
            println!("{doc}");
        }
    }
}

fn print_minors(minors: &MinorSequence, offset: usize, format: Format) {
    match format {
        Format::Csv => {
            for (n, value) in minors.values().iter().enumerate() {
                println!("{},{value}", n + offset);
            }
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = minors
                .values()
                .iter()
                .enumerate()
                .map(|(n, value)| serde_json::json!({"n": n + offset, "value": value.to_string()}))
                .collect();
            let doc = serde_json::json!({
                "engine": minors.engine().name(),
                "values": items,
            });
            println!("{doc}");
        }
    }
}

/// Accept either bare scalar lines or n,value rows (the minors CSV shape).
fn parse_value_rows(text: &str, field: FieldTag) -> Result<Vec<QuadScalar>, Error> {
    let mut values = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let cell = match line.split_once(',') {
            Some((_, value)) => value.trim(),
            None => line,
        };
        values.push(parse_scalar(cell, field)?);
    }
    Ok(values)
}

fn run_solve(r: &str, s: &str, c: &str, upto: usize) -> Result<(), Error> {
    let rational = FieldTag::RATIONAL;
    let r = parse_scalar(r, rational)?;
    let s = parse_scalar(s, rational)?;
    let c = parse_scalar(c, rational)?;
    let target = RecurrenceTarget::new(r, s, c.clone());
    let solved = solve_family(&target)?;

    println!("discriminant: {}", solved.discriminant);
    match solved.extension_needed {
        Some(tag) => println!("field: {tag}"),
        None => println!("field: {}", solved.solutions[0].0.field()),
    }
    if solved.repeated {
        println!("repeated root: the two solutions coincide");
    }
    for (idx, (a, b)) in solved.solutions.iter().enumerate() {
        println!("solution {}: a = {a}, b = {b}", idx + 1);
    }

    let (a, b) = &solved.solutions[0];
    let field = a.field();
    let c_lifted = QuadScalar::from_rational(field, c.rational_part().clone());
    let spec = MatrixSpec::new(
        field,
        upto.max(1),
        MatrixFamily::ToeplitzAbc {
            a: a.clone(),
            b: b.clone(),
            c: c_lifted,
        },
    );
    let computed = leading_minors(&build(&spec)?);
    println!("n,predicted,computed,match");
    for n in 1..=upto.max(1) {
        let predicted = predicted_minor(&target, n)?;
        let oracle = computed.get(n - 1);
        let agree =
            predicted.rational_part() == oracle.rational_part() && oracle.is_rational_value();
        println!("{n},{predicted},{oracle},{agree}");
    }
    Ok(())
}

fn print_claims(reports: &[ClaimReport]) -> ExitCode {
    let mut failed = 0usize;
    for report in reports {
        if report.pass {
            println!("PASS {}: {}", report.suite, report.label);
        } else {
            failed += 1;
            println!("FAIL {}: {}", report.suite, report.label);
            if let Some(detail) = &report.detail {
                println!("    counterexample: {detail}");
            }
        }
    }
    println!(
        "{} of {} claims passed",
        reports.len() - failed,
        reports.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

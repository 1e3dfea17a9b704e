use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use wcs_asp_core::text::{literal_strings, models_json, print_program, theory_json, theory_text};
use wcs_asp_core::{
    answer_sets, as_l_theory, as_n_theory, check_program, definition_completion, fuzz,
    parse_interpretation, parse_source, pdisj, phi_iterates, run_check, satisfies,
    vakarelov_translate, wc_models, weak_completion, CheckReport, Error, Format, Interpretation,
    Limits, Logic, Program, ProgramClass, Property, DEFAULT_MAX_ATOMS,
};

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(
    name = "wcs-asp",
    version,
    about = "Weak Completion Semantics and Answer Set Semantics for three-valued logic programs"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,

    /// Largest alphabet any exhaustive search may enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ATOMS)]
    max_atoms: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Text => Format::Text,
            OutputFormat::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    Wc,
    Dc,
    Pdisj,
    Regular,
    Vakarelov,
}

#[derive(Clone, Copy, ValueEnum)]
enum LogicArg {
    #[value(name = "L")]
    L,
    #[value(name = "N")]
    N,
}

#[derive(Subcommand)]
enum Command {
    /// Print the wc-models of a program.
    Wcs {
        file: PathBuf,
        /// Print the Φ iterates from the empty interpretation (wc-normal programs only).
        #[arg(long)]
        trace_phi: bool,
    },
    /// Print the answer sets of a program.
    Asp { file: PathBuf },
    /// Print a transformed program, or the Vakarelov translation of its Łukasiewicz theory.
    Transform {
        file: PathBuf,
        #[arg(long, value_enum)]
        to: Target,
    },
    /// Evaluate the theory of a program under an interpretation.
    Eval {
        file: PathBuf,
        #[arg(long, value_enum)]
        logic: LogicArg,
        /// Interpretation such as "{a, -b}".
        #[arg(long)]
        interp: String,
    },
    /// Run a property check on generated programs, or on one program with --file.
    Check {
        #[arg(long, value_parser = parse_property)]
        property: Property,
        #[arg(long, default_value_t = 100)]
        instances: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, conflicts_with_all = ["instances", "seed"])]
        file: Option<PathBuf>,
    },
    /// Run a property check on generated programs of a fixed shape.
    Fuzz {
        #[arg(long, value_parser = parse_class)]
        class: ProgramClass,
        #[arg(long)]
        atoms: usize,
        /// Rules per program; formulas per theory for theorem1-vakarelov.
        #[arg(long)]
        rules: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        instances: u64,
        #[arg(long, value_parser = parse_property)]
        property: Property,
    },
}

fn parse_property(s: &str) -> Result<Property, String> {
    s.parse().map_err(|e: Error| {
        let names: Vec<_> = Property::ALL.iter().map(|p| p.name()).collect();
        format!("{e}; expected one of {}", names.join(", "))
    })
}

fn parse_class(s: &str) -> Result<ProgramClass, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

struct Failed {
    code: u8,
    message: String,
}

impl From<Error> for Failed {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::CapExceeded { .. }) {
            EXIT_CAP
        } else {
            EXIT_USAGE
        };
        Failed {
            code,
            message: e.to_string(),
        }
    }
}

fn read_program(path: &Path, for_wcs: bool) -> Result<Program, Failed> {
    let text = std::fs::read_to_string(path).map_err(|e| Failed {
        code: EXIT_USAGE,
        message: format!("{}: {e}", path.display()),
    })?;
    let source = parse_source(&text).map_err(|e| Failed {
        code: EXIT_USAGE,
        message: format!("{}:{e}", path.display()),
    })?;
    if for_wcs {
        if let Some(s) = source.weak_negations.first() {
            return Err(Failed {
                code: EXIT_USAGE,
                message: format!(
                    "{}:{}:{}: weak negation `not` has no meaning under the weak completion; use `-` for strong negation",
                    path.display(),
                    s.line,
                    s.column
                ),
            });
        }
    }
    Ok(source.program)
}

fn models_text(models: &[Interpretation], none: &str) -> String {
    if models.is_empty() {
        return format!("{none}\n");
    }
    models.iter().map(|m| format!("{m}\n")).collect()
}

fn json_text(v: &Value) -> String {
    format!("{v:#}\n")
}

fn report_output(report: &CheckReport, format: Format) -> (String, u8) {
    let code = if report.passed { 0 } else { EXIT_CHECK_FAILED };
    let out = match format {
        Format::Text => report.to_string(),
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(report).expect("reports serialize")
        ),
    };
    (out, code)
}

fn run(cli: Cli) -> Result<(String, u8), Failed> {
    let format = Format::from(cli.format);
    let limits = Limits::new(cli.max_atoms);
    let out = match cli.command {
        Command::Wcs { file, trace_phi } => {
            let p = read_program(&file, true)?;
            let wc_normal = p.classify().wc_normal;
            if trace_phi && !wc_normal {
                p.require_wc_normal()?;
            }
            let (models, trace) = if wc_normal {
                let chain = phi_iterates(&p)?;
                (
                    vec![chain.last().unwrap().clone()],
                    trace_phi.then_some(chain),
                )
            } else {
                (wc_models(&p, limits)?, None)
            };
            match format {
                Format::Text => {
                    let mut s = String::new();
                    if let Some(chain) = &trace {
                        for (k, i) in chain.iter().enumerate() {
                            writeln!(s, "I{k} = {i}").unwrap();
                        }
                    }
                    s + &models_text(&models, "no wc-model")
                }
                Format::Json => {
                    let mut v = models_json("wc_models", &models, &p.atoms());
                    if let Some(chain) = &trace {
                        v["phi_trace"] =
                            json!(chain.iter().map(literal_strings).collect::<Vec<_>>());
                    }
                    json_text(&v)
                }
            }
        }
        Command::Asp { file } => {
            let p = read_program(&file, false)?;
            let models = answer_sets(&p, limits)?;
            match format {
                Format::Text => models_text(&models, "no answer set"),
                Format::Json => json_text(&models_json("answer_sets", &models, &p.atoms())),
            }
        }
        Command::Transform { file, to } => {
            let p = read_program(&file, false)?;
            let q = match to {
                Target::Wc => weak_completion(&p)?,
                Target::Dc => definition_completion(&p)?,
                Target::Pdisj => pdisj(&p)?,
                Target::Regular => p.regularized(),
                Target::Vakarelov => {
                    let t = vakarelov_translate(&as_l_theory(&p)?)?;
                    return Ok((
                        match format {
                            Format::Text => theory_text(&t),
                            Format::Json => json_text(&theory_json(&t)),
                        },
                        0,
                    ));
                }
            };
            print_program(&q, format)
        }
        Command::Eval {
            file,
            logic,
            interp,
        } => {
            let p = read_program(&file, false)?;
            let i = parse_interpretation(&interp)?;
            let theory = match logic {
                LogicArg::L => as_l_theory(&p)?,
                LogicArg::N => as_n_theory(&p),
            };
            let logic: Logic = theory.logic();
            let values = theory
                .formulas()
                .iter()
                .map(|f| Ok((f.to_string(), i.eval(f, logic)?)))
                .collect::<Result<Vec<_>, Error>>()?;
            let model = satisfies(&i, &theory);
            match format {
                Format::Text => {
                    let mut s = String::new();
                    for (f, v) in &values {
                        writeln!(s, "{v}\t{f}").unwrap();
                    }
                    writeln!(
                        s,
                        "{} model of {logic}(P): {}",
                        i,
                        if model { "yes" } else { "no" }
                    )
                    .unwrap();
                    s
                }
                Format::Json => json_text(&json!({
                    "logic": logic.to_string(),
                    "interpretation": literal_strings(&i),
                    "values": values.iter().map(|(f, v)| json!({ "formula": f, "value": v })).collect::<Vec<_>>(),
                    "model": model,
                })),
            }
        }
        Command::Check {
            property,
            instances,
            seed,
            file,
        } => {
            let report = match file {
                Some(path) => check_program(property, &read_program(&path, false)?, limits)?,
                None => run_check(property, instances, seed, limits)?,
            };
            return Ok(report_output(&report, format));
        }
        Command::Fuzz {
            class,
            atoms,
            rules,
            seed,
            instances,
            property,
        } => {
            let report = fuzz(property, class, atoms, rules, seed, instances, limits)?;
            return Ok(report_output(&report, format));
        }
    };
    Ok((out, 0))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

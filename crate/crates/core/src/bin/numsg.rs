use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use numsg_hilbert::corpus::{self, CorpusQuery, Filter};
use numsg_hilbert::family::{self, FamilyReport};
use numsg_hilbert::parse::{self, FamilyInput};
use numsg_hilbert::report::{self, AnalyzeOutput};
use numsg_hilbert::{
    stretched, verification, CorpusError, FamilyError, NumericalSemigroup, SemigroupIdeal,
};

const EXIT_VIOLATION: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(
    name = "numsg",
    version,
    about = "Hilbert coefficients and stretched ideals in numerical semigroup rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert data and classification of the maximal ideal, or of --ideal.
    Analyze {
        /// Generators, e.g. 8,17,21,30,39,52
        gens: String,
        /// Ideal valuations, e.g. gens=5,6
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Validate family parameters and compare predictions with the engine.
    Family {
        /// JSON file, inline JSON, `b=2,e=6,ell=3,b4=6,b5=6` or `preset=ex4-1,b=2,e=8`
        params: String,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate and classify semigroups.
    Search {
        #[arg(long)]
        gen_bound: u32,
        #[arg(long)]
        count_bound: usize,
        /// all, stretched, rank=N, g_cm or not_g_cm
        #[arg(long, default_value = "all")]
        filter: String,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long, default_value_t = corpus::DEFAULT_CAP)]
        cap: usize,
        #[arg(long)]
        min_multiplicity: Option<u32>,
        #[arg(long)]
        max_multiplicity: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Run the full verification suite.
    VerifyPaper {
        #[arg(long)]
        json: bool,
    },
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn invalid(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("invalid: {msg}");
    ExitCode::from(EXIT_INVALID)
}

fn analyze(gens: &str, ideal: Option<&str>, json: bool) -> ExitCode {
    let gens = match parse::parse_semigroup_literal(gens) {
        Ok(g) => g,
        Err(e) => return invalid(e),
    };
    let h = match NumericalSemigroup::from_generators(&gens) {
        Ok(h) => Arc::new(h),
        Err(e) => return invalid(e),
    };
    let ideal = match ideal {
        None => SemigroupIdeal::maximal(&h),
        Some(text) => match parse::parse_ideal_literal(text)
            .map_err(|e| e.to_string())
            .and_then(|v| SemigroupIdeal::from_valuations(&h, &v).map_err(|e| e.to_string()))
        {
            Ok(i) => i,
            Err(e) => return invalid(e),
        },
    };
    let analysis = match stretched::analyze(&ideal) {
        Ok(a) => a,
        Err(e) => return invalid(e),
    };
    let failed = analysis.report.failed_checks();
    let out = AnalyzeOutput::from_analysis(
        h.minimal_generators().to_vec(),
        ideal.minimal_generators(),
        analysis,
    );
    if json {
        print_json(&out);
    } else {
        print!("{}", report::render_analysis(&out));
    }
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        eprintln!("theorem violation: {}", failed.join(", "));
        ExitCode::from(EXIT_VIOLATION)
    }
}

fn family_input(arg: &str) -> Result<FamilyInput, String> {
    let text = if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(|e| format!("{arg}: {e}"))?
    } else {
        arg.to_string()
    };
    parse::parse_family_inline(&text).map_err(|e| e.to_string())
}

fn family(arg: &str, json: bool) -> ExitCode {
    let (params, fill) = match family_input(arg) {
        Ok(FamilyInput::Params(p)) => (p, None),
        Ok(FamilyInput::Preset { preset, b, e }) => match preset.instantiate(b, e) {
            Ok(inst) => (inst.params.clone(), Some(inst)),
            Err(e) => return invalid(e),
        },
        Err(e) => return invalid(e),
    };
    let violations = params.violations();
    if !violations.is_empty() {
        if json {
            print_json(&serde_json::json!({ "status": "invalid", "violations": violations }));
        } else {
            for v in &violations {
                println!("{v}");
            }
        }
        return invalid(format!("{} constraint(s) violated", violations.len()));
    }
    let rep: FamilyReport = match family::evaluate_family(&params) {
        Ok(r) => r,
        Err(FamilyError::Violation(r)) => *r,
        Err(e) => return invalid(e),
    };
    if json {
        print_json(
            &serde_json::json!({ "status": if rep.passed() { "pass" } else { "fail" }, "preset": fill, "report": rep }),
        );
    } else {
        if let Some(inst) = &fill {
            println!(
                "preset {} (filled b_n for n in {:?}, dropped {:?})",
                inst.preset, inst.filled, inst.dropped
            );
        }
        print!("{}", report::render_family(&rep));
    }
    if rep.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VIOLATION)
    }
}

#[allow(clippy::too_many_arguments)]
fn search(
    gen_bound: u32,
    count_bound: usize,
    filter: &str,
    csv: Option<&Path>,
    cap: usize,
    min_m: Option<u32>,
    max_m: Option<u32>,
    json: bool,
) -> ExitCode {
    let filter: Filter = match filter.parse() {
        Ok(f) => f,
        Err(e) => return invalid(e),
    };
    let query = CorpusQuery::new(gen_bound, count_bound)
        .with_filter(filter)
        .with_cap(cap)
        .with_multiplicity(min_m.unwrap_or(1), max_m.unwrap_or(gen_bound));
    let (result, code) = match corpus::search(&query) {
        Ok(r) => (r, ExitCode::SUCCESS),
        Err(CorpusError::CapExceeded(partial)) => {
            eprintln!("instance cap {cap} exceeded; output is partial");
            (*partial, ExitCode::from(EXIT_CAP))
        }
        Err(CorpusError::Violation(v)) => {
            print_json(&v);
            eprintln!("theorem violation: {}", v.failed.join(", "));
            return ExitCode::from(EXIT_VIOLATION);
        }
        Err(e) => return invalid(e),
    };
    if let Some(path) = csv {
        let written = std::fs::File::create(path)
            .map_err(|e| e.to_string())
            .and_then(|f| corpus::write_csv(&result.rows, f).map_err(|e| e.to_string()));
        if let Err(e) = written {
            return invalid(format!("{}: {e}", path.display()));
        }
    }
    if json {
        print_json(&result);
    } else {
        print!("{}", corpus::render_table(&result));
    }
    code
}

fn verify_paper(json: bool) -> ExitCode {
    let outcomes = verification::run_all();
    if json {
        print_json(&outcomes);
    } else {
        print!("{}", report::render_verification(&outcomes));
    }
    if outcomes.iter().all(|o| o.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VIOLATION)
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Analyze { gens, ideal, json } => analyze(&gens, ideal.as_deref(), json),
        Command::Family { params, json } => family(&params, json),
        Command::Search {
            gen_bound,
            count_bound,
            filter,
            csv,
            cap,
            min_multiplicity,
            max_multiplicity,
            json,
        } => search(
            gen_bound,
            count_bound,
            &filter,
            csv.as_deref(),
            cap,
            min_multiplicity,
            max_multiplicity,
            json,
        ),
        Command::VerifyPaper { json } => verify_paper(json),
    }
}

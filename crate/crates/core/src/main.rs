use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use vogan::harness::{cmd_classify, cmd_orbits, parse_spec, render_orbits, render_report, resolve, Format, JobSpec};
use vogan::lfactor::{adjoint_exponents, pole_order_at_1};
use vogan::orbits::{orbit_record, pyasetskii_dual};
use vogan::verify::{run_suite, Bounds, SUITES};
use vogan::Error;

#[derive(Parser)]
#[command(name = "vogan", version, about = "Exact orbit geometry of Vogan varieties for unramified parameters")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed for the generic-element sampler; overrides the job's seed.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Table,
    Json,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Format {
        match f {
            OutputFormat::Table => Format::Table,
            OutputFormat::Json => Format::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify one parameter: orbit, flags, dual orbit, adjoint L-factor.
    Classify { job: Option<PathBuf> },
    /// Tabulate all orbits of a GL Vogan variety.
    Orbits { job: Option<PathBuf> },
    /// Conormal dual orbit of the job's point.
    Dual { job: Option<PathBuf> },
    /// Adjoint L-factor of the job's point.
    Lfactor { job: Option<PathBuf> },
    /// Run an exhaustive verification suite.
    Verify {
        suite: String,
        /// Family bounds as key=value pairs, e.g. gl_size=5,seeds=4.
        #[arg(long, default_value = "")]
        bounds: String,
        /// Worker threads (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Replay a worked example and compare with the expected point.
    Example {
        #[arg(value_enum)]
        name: ExampleName,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ExampleName {
    So7,
    Sp14,
}

/// Process outcome: success, or a verification failure with output to print.
enum Outcome {
    Ok(String),
    Failed(String),
}

fn read_job(path: &Option<PathBuf>, seed: Option<u64>) -> Result<JobSpec, Error> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?,
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
            s
        }
    };
    let mut spec = parse_spec(&text)?;
    if let Some(s) = seed {
        spec.seed = s;
    }
    Ok(spec)
}

fn run_example(name: ExampleName, seed: u64, format: Format) -> Result<Outcome, Error> {
    let (text, expected): (&str, Vec<(usize, usize)>) = match name {
        ExampleName::So7 => (
            r#"{"group":{"kind":"SO_odd","n":7},"discrete_partition":[4,2]}"#,
            vec![(1, 2), (2, 5), (3, 4), (5, 6)],
        ),
        ExampleName::Sp14 => (r#"{"group":{"kind":"Sp","n":14},"discrete_partition":[7,5,3]}"#, vec![]),
    };
    let mut spec = parse_spec(text)?;
    spec.seed = seed;
    let report = cmd_classify(&spec)?;
    let mut out = render_report(&report, format);
    let mut ok = report.all_checks_pass() && report.flags.open;
    match name {
        ExampleName::So7 => {
            let matches = report.x_support == expected && report.exponents == [3, 1, 1, -1, -1, -3];
            out.push_str(&format!("expected support (1,2),(2,5),(3,4),(5,6): {}\n", if matches { "match" } else { "MISMATCH" }));
            ok &= matches && report.pole_order == 0;
        }
        ExampleName::Sp14 => {
            let diagonal = [6, 4, 4, 2, 2, 2, 0, 0, 0, -2, -2, -2, -4, -4, -6];
            let matches = report.exponents == diagonal;
            out.push_str(&format!(
                "expected diagonal 3,2,2,1,1,1,0,0,0,-1,-1,-1,-2,-2,-3: {}\n",
                if matches { "match" } else { "MISMATCH" }
            ));
            ok &= matches;
        }
    }
    Ok(if ok { Outcome::Ok(out) } else { Outcome::Failed(out) })
}

fn run(cli: Cli) -> Result<Outcome, Error> {
    let format: Format = cli.format.into();
    match cli.command {
        Command::Classify { job } => {
            let report = cmd_classify(&read_job(&job, cli.seed)?)?;
            let text = render_report(&report, format);
            Ok(if report.all_checks_pass() { Outcome::Ok(text) } else { Outcome::Failed(text) })
        }
        Command::Orbits { job } => Ok(Outcome::Ok(render_orbits(&cmd_orbits(&read_job(&job, cli.seed)?)?, format))),
        Command::Dual { job } => {
            let spec = read_job(&job, cli.seed)?;
            let j = resolve(&spec)?;
            let own = orbit_record(&j.variety, &j.x)?;
            let dual = pyasetskii_dual(&j.variety, &j.x, spec.seed)?;
            let name = |r: &vogan::orbits::OrbitRecord| {
                r.multisegment.as_ref().map(ToString::to_string).unwrap_or_else(|| "-".into())
            };
            Ok(Outcome::Ok(match format {
                Format::Json => {
                    serde_json::json!({
                        "orbit": {"dimension": own.dimension, "multisegment": own.multisegment.as_ref().map(ToString::to_string), "triangle": own.triangle},
                        "dual": {"dimension": dual.dimension, "multisegment": dual.multisegment.as_ref().map(ToString::to_string), "triangle": dual.triangle, "open": dual.open, "closed": dual.closed},
                    })
                    .to_string()
                        + "\n"
                }
                Format::Table => format!(
                    "orbit in V: {} dimension {}\ndual orbit in V*: {} dimension {} (open: {}, closed: {})\n",
                    name(&own),
                    own.dimension,
                    name(&dual),
                    dual.dimension,
                    dual.open,
                    dual.closed
                ),
            }))
        }
        Command::Lfactor { job } => {
            let j = resolve(&read_job(&job, cli.seed)?)?;
            let ae = adjoint_exponents(&j.variety, &j.x)?;
            let pole = pole_order_at_1(&ae)?;
            Ok(Outcome::Ok(match format {
                Format::Json => serde_json::json!({"adjoint_exponents": ae, "l_factor": ae.to_string(), "pole_order": pole}).to_string() + "\n",
                Format::Table => format!("L(s, φ, Ad) = {ae}\npole order at s = 1: {pole}\n"),
            }))
        }
        Command::Verify { suite, bounds, jobs } => {
            let bounds: Bounds = bounds.parse()?;
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            let mut text = String::new();
            let mut ok = true;
            for name in names {
                let s = run_suite(name, &bounds, cli.seed.unwrap_or(0), jobs)?;
                ok &= s.passed();
                match format {
                    Format::Json => text.push_str(&(serde_json::to_string_pretty(&s).expect("summary serializes") + "\n")),
                    Format::Table => text.push_str(&format!("{s}\n")),
                }
            }
            Ok(if ok { Outcome::Ok(text) } else { Outcome::Failed(text) })
        }
        Command::Example { name } => run_example(name, cli.seed.unwrap_or(0), format),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Outcome::Ok(text)) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Failed(text)) => {
            print!("{text}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

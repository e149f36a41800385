use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dynkin_witt::cli::{
    enumeration_records, enumeration_text, parse_diagram, parse_vertex_list, render_dot, selfcheck,
    CliError, DecorationSpec, Report,
};
use dynkin_witt::enumeration::{enumerate, DEFAULT_RANK_LIMIT};

/// Decide vanishing of twisted Witt groups of G/P_theta from Dynkin-diagram data.
#[derive(Parser)]
#[command(name = "dynkin-witt", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one decoration (theta plus Lambda or an explicit bundle).
    Classify {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Classify every (theta, Lambda) decoration of a diagram.
    Enumerate {
        /// Diagram specification, e.g. D4 or A3xB2.
        diagram: String,
        /// Keep only rows with exactly this theta.
        #[arg(long, allow_hyphen_values = true)]
        theta: Option<String>,
        /// Keep only rows with exactly this Lambda.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_RANK_LIMIT)]
        rank_limit: usize,
    },
    /// Emit a DOT drawing of a decorated diagram.
    Render {
        #[command(flatten)]
        target: Target,
    },
    /// Run the built-in invariant suite.
    Selfcheck,
}

#[derive(Args)]
struct Target {
    /// Diagram specification, e.g. D4 or A3xB2.
    diagram: String,
    /// Comma-separated vertices of theta.
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<String>,
    /// Comma-separated vertices of Lambda(L).
    #[arg(long, allow_hyphen_values = true, conflicts_with = "bundle")]
    lambda: Option<String>,
    /// Comma-separated weight coefficients of L, one per vertex.
    #[arg(long, allow_hyphen_values = true)]
    bundle: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
    Dot,
}

impl Target {
    fn report(&self) -> Result<Report, CliError> {
        let d = parse_diagram(&self.diagram)?;
        let dec = DecorationSpec {
            theta: self.theta.clone(),
            lambda: self.lambda.clone(),
            bundle: self.bundle.clone(),
        };
        Ok(Report::new(dec.resolve(&d)?))
    }
}

fn run(command: Command) -> Result<String, CliError> {
    match command {
        Command::Classify { target, format } => {
            let report = target.report()?;
            Ok(match format {
                Format::Text => report.to_text(),
                Format::Records => report.to_records(),
                Format::Dot => render_dot(&report.class),
            })
        }
        Command::Render { target } => Ok(render_dot(&target.report()?.class)),
        Command::Enumerate {
            diagram,
            theta,
            lambda,
            format,
            rank_limit,
        } => {
            let d = parse_diagram(&diagram)?;
            let theta = theta.map(|t| parse_vertex_list(&d, &t)).transpose()?;
            let lambda = lambda.map(|l| parse_vertex_list(&d, &l)).transpose()?;
            if format == Format::Dot {
                return Err(CliError::Parse {
                    what: "format",
                    token: "dot".into(),
                    reason: "enumerate emits text or records".into(),
                });
            }
            let table = enumerate(&d, rank_limit)?.filter_rows(|r| {
                theta.is_none_or(|t| r.theta == t) && lambda.is_none_or(|l| r.lambda == l)
            });
            Ok(match format {
                Format::Records => enumeration_records(&table),
                _ => enumeration_text(&table),
            })
        }
        Command::Selfcheck => unreachable!("handled in main"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Selfcheck = cli.command {
        let outcomes = selfcheck();
        for o in &outcomes {
            match &o.failure {
                None => println!("PASS  {}", o.name),
                Some(why) => println!("FAIL  {}: {why}", o.name),
            }
        }
        return if outcomes.iter().all(|o| o.passed()) {
            ExitCode::SUCCESS
        } else {
            ExitCode::FAILURE
        };
    }
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

use std::path::PathBuf;
use std::process::ExitCode;

use census_cli::{export, golden_mismatches, render, run_census, Format};
use clap::{Parser, Subcommand};
use floor_curves::{catalog, descriptor, smooth_floor, Q};
use floorplan_engine::{find_plan, realize_numeric};

#[derive(Parser)]
#[command(name = "tropicount", about = "Count nodal tropical cubic surfaces through points in Mikhalkin position")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the census and print the per-case table or JSON.
    Census {
        #[arg(long, default_value_t = 2)]
        delta: u8,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Do not fail when the totals differ from the published ones.
        #[arg(long)]
        no_golden: bool,
    },
    /// List the floors of a degree with a number of node germs.
    Floors {
        #[arg(long)]
        degree: i64,
        #[arg(long, default_value_t = 0)]
        germs: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Write one SVG per floor of a plan.
    Render {
        #[arg(long)]
        plan: String,
        /// Output directory.
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
    /// Realize a plan through explicit points and report every incidence.
    Realize {
        #[arg(long)]
        plan: String,
        #[arg(long, default_value = "1/64")]
        eta: Q,
        #[arg(long, default_value = "1048576")]
        spacing: Q,
    },
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Census { delta, format, no_golden } => {
            let report = run_census(delta)?;
            export(&report, format, &mut std::io::stdout().lock())?;
            let bad = golden_mismatches(&report);
            if !no_golden && !bad.is_empty() {
                for b in bad {
                    eprintln!("golden mismatch: {b}");
                }
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Floors { degree, germs, format } => {
            let floors = if germs == 0 { vec![smooth_floor(degree)?] } else { catalog(degree, germs)?.to_vec() };
            match format {
                Format::Json => {
                    let d: Vec<_> = floors.iter().map(descriptor).collect();
                    println!("{}", serde_json::to_string_pretty(&d)?);
                }
                Format::Table => {
                    for f in &floors {
                        println!("{:<14} {}", f.tag, f.label);
                    }
                }
            }
        }
        Command::Render { plan, out } => {
            for p in render(&plan, &out)? {
                println!("{}", p.display());
            }
        }
        Command::Realize { plan, eta, spacing } => {
            let plan = find_plan(&plan)?;
            let report = realize_numeric(&plan, eta, spacing)?;
            println!("{}", serde_json::to_string_pretty(&report)?);
            if !report.passed {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

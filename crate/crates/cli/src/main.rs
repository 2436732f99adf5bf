//! diffwave: diffusive wavelet transforms on compact groups.
//!
//! Subcommands: `family` (sample wavelet kernels, figure presets),
//! `transform` (forward transform with energy summary), `reconstruct`
//! (inverse transform from an exported field) and `verify` (the batch
//! identity suites). Exit codes: 0 ok, 1 verification failure,
//! 2 configuration error.

mod commands;
mod config;
mod output;

use clap::{Args, Parser, Subcommand};
use config::{preset_config, RunConfig};
use diffwave_core::verify::Suite;
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "diffwave", version, about = "diffusive wavelet transforms on T, S3 and S2")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct ConfigArgs {
    /// Path to a TOML run configuration.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Built-in figure preset (fig1 | fig2 | fig3).
    #[arg(long)]
    preset: Option<String>,
    /// Output directory.
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Seed override for random inputs.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Sample the wavelet family ψ_ρ along the geometry's natural axis.
    Family(ConfigArgs),
    /// Run the forward wavelet transform and export the field.
    Transform(ConfigArgs),
    /// Invert an exported field back to samples.
    Reconstruct(ConfigArgs),
    /// Run the verification suites.
    Verify {
        /// Suite to run: all | fourier | diffusive | transform | quotient.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Optional directory for the JSON report.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn load_config(args: &ConfigArgs) -> anyhow::Result<RunConfig> {
    let mut config = match (&args.config, &args.preset) {
        (_, Some(preset)) => preset_config(preset)?,
        (Some(path), None) => RunConfig::from_file(path)?,
        (None, None) => anyhow::bail!("either --config or --preset is required"),
    };
    if let Some(seed) = args.seed {
        config.seed = seed;
    }
    config.validate()?;
    Ok(config)
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Family(args) => load_config(args)
            .and_then(|c| commands::cmd_family(&c, &args.out))
            .map(|_| true),
        Command::Transform(args) => load_config(args)
            .and_then(|c| commands::cmd_transform(&c, &args.out))
            .map(|_| true),
        Command::Reconstruct(args) => load_config(args)
            .and_then(|c| commands::cmd_reconstruct(&c, &args.out))
            .map(|_| true),
        Command::Verify { suite, seed, out } => suite
            .parse::<Suite>()
            .map_err(anyhow::Error::msg)
            .and_then(|s| commands::cmd_verify(s, *seed, out.as_deref())),
    };
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(err) => {
            eprintln!("error: {err:#}");
            2
        }
    }
}

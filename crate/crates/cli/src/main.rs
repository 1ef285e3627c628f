use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use twofano::classify::{bend_and_break_degree, hom_dimension_bound, HomBoundInput};
use twofano::report::{parse_rational, render_rational, run_classify, run_sweep, Family, OutputFormat, Report, SweepConfig, DEFAULT_CASE_CAP};
use twofano::spec_text::space_from_text;
use twofano::Rational;

#[derive(Parser)]
#[command(name = "twofano", version, about = "Exact Fano and 2-Fano verdicts for catalog spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one space, e.g. "ci n=5 d=3" or "bundle base=(ci n=5 d=3) c1L=2".
    Classify {
        spec: String,
        #[arg(long, default_value = "table", value_parser = parse_format)]
        format: OutputFormat,
    },
    /// Classify every tuple of a parameter family.
    Sweep {
        /// complete-intersection, grassmannian, product or p1-bundle
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, default_value_t = 6)]
        max_n: u64,
        #[arg(long, default_value_t = 2)]
        max_r: u64,
        #[arg(long, default_value_t = 2)]
        min_d: u64,
        #[arg(long, default_value_t = 4)]
        max_d: u64,
        #[arg(long, default_value_t = 3)]
        max_k: u64,
        /// largest weight for weighted ambient spaces; 1 means unweighted
        #[arg(long, default_value_t = 1)]
        max_w: u64,
        /// largest multiple of the base generator used as c1(L) for bundles
        #[arg(long, default_value_t = 2)]
        max_c1l: u64,
        #[arg(long, default_value = "table", value_parser = parse_format)]
        format: OutputFormat,
        /// keep only rows decided by an exact-zero pairing
        #[arg(long)]
        boundary_only: bool,
        /// include every witness pairing
        #[arg(long)]
        verbose: bool,
        #[arg(long, default_value_t = DEFAULT_CASE_CAP)]
        cap: u64,
    },
    /// Evaluate deg ch2 + deg c1^2 / 2e + (e + dim - 3)(1 - g - b) exactly.
    Lemma3 {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_exact)]
        ch2: Rational,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_exact)]
        c1sq: Rational,
        #[arg(long)]
        e: u64,
        #[arg(long)]
        dim: u64,
        #[arg(long)]
        g: u64,
        #[arg(long)]
        b: u64,
    },
    /// Anticanonical degree of the moduli curve swept by each surface generator.
    BbDegree {
        spec: String,
        #[arg(long)]
        e: u64,
    },
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    s.parse().map_err(|e: twofano::Error| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: twofano::Error| e.to_string())
}

fn parse_exact(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Classify { spec, format } => {
            let row = run_classify(&spec).with_context(|| format!("cannot classify '{spec}'"))?;
            Ok(Report::new(vec![row]).render(format))
        }
        Command::Sweep {
            family,
            max_n,
            max_r,
            min_d,
            max_d,
            max_k,
            max_w,
            max_c1l,
            format,
            boundary_only,
            verbose,
            cap,
        } => {
            let config = SweepConfig {
                family,
                max_n,
                max_r,
                min_d,
                max_d,
                max_k,
                max_w,
                max_c1l,
                boundary_only,
                verbose,
                cap,
            };
            Ok(run_sweep(&config)?.render(format))
        }
        Command::Lemma3 { ch2, c1sq, e, dim, g, b } => {
            let bound = hom_dimension_bound(&HomBoundInput { ch2_deg: ch2, c1sq_deg: c1sq, e, dim_x: dim, genus: g, marked: b })?;
            Ok(format!(
                "{}\nch2 term: {}\nc1^2 term: {}\ndeformation term: {}\n",
                render_rational(&bound.total),
                render_rational(&bound.ch2_term),
                render_rational(&bound.c1sq_term),
                render_rational(&bound.deformation_term),
            ))
        }
        Command::BbDegree { spec, e } => {
            let space = space_from_text(&spec).with_context(|| format!("cannot build '{spec}'"))?;
            if space.surface_cone().is_empty() {
                bail!("{} has no surface generators", space.label());
            }
            let mut out = String::new();
            for g in space.surface_cone() {
                let value = bend_and_break_degree(&space, &g.class, e)?;
                out.push_str(&format!("[{}] {}\n", g.label, render_rational(&value)));
            }
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use skein::diagram::{ObjectWord, PdDiagram, SlicedDiagram};
use skein::homspace::standard_basis;
use skein::verify::{self, Outcome, VerifyOptions};
use skein::{linkeval, qwb, render, Engine, SkeinError};

/// Bar involutions and canonical bases in the oriented skein category.
#[derive(Parser)]
#[command(name = "skein", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tikz,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    /// Skein reduction of the diagram.
    Reduce,
    /// Solve against the Gram matrix of the trace pairing.
    Pairing,
}

#[derive(Subcommand)]
enum Command {
    /// List the standard basis of Hom(a, b).
    Basis {
        #[arg(short, long, value_parser = word)]
        a: ObjectWord,
        #[arg(short, long, value_parser = word)]
        b: ObjectWord,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compute and verify the canonical basis of Hom(a, b).
    Canonical {
        #[arg(short, long, value_parser = word)]
        a: ObjectWord,
        #[arg(short, long, value_parser = word)]
        b: ObjectWord,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write to this file instead of standard output.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Expand a sliced diagram in the standard basis.
    Expand {
        /// Diagram file, or `-` for standard input.
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Route::Reduce)]
        route: Route,
    },
    /// Evaluate a closed diagram given in PD notation.
    Homfly {
        file: PathBuf,
    },
    /// Quantized walled Brauer algebras.
    Qwb {
        #[command(subcommand)]
        command: QwbCommand,
    },
    /// Run the reproduction criteria.
    VerifyPaper {
        /// Criterion keys or numbers, comma separated.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Directory with replacement qwb_*.json reference tables.
        #[arg(long)]
        golden_dir: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Include run times (output is then no longer reproducible byte for byte).
        #[arg(long)]
        timings: bool,
    },
    /// Draw a sliced diagram as TikZ.
    Render {
        file: PathBuf,
    },
}

#[derive(Subcommand)]
enum QwbCommand {
    /// Canonical basis of qWB(m, n), labelled by words.
    Canonical {
        #[arg(short, long)]
        m: usize,
        #[arg(short, long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check the defining relations of qWB(m, n) in the skein category.
    Verify {
        #[arg(short, long)]
        m: usize,
        #[arg(short, long)]
        n: usize,
    },
}

fn word(s: &str) -> std::result::Result<ObjectWord, String> {
    s.parse::<ObjectWord>().map_err(|e| e.to_string())
}

fn read_input(path: &Path) -> Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn emit(text: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json_text(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn no_tikz(cmd: &str) -> Result<()> {
    bail!("{cmd} has no tikz output")
}

fn basis(a: &ObjectWord, b: &ObjectWord, format: Format) -> Result<ExitCode> {
    let m = match standard_basis(a, b) {
        Ok(m) => m,
        Err(SkeinError::ZeroHomSpace { .. }) => Vec::new(),
        Err(e) => return Err(e.into()),
    };
    match format {
        Format::Text => print!("{}", render::basis_table(a, b, &m)),
        Format::Json => print!("{}", json_text(&render::basis_json(a, b, &m))),
        Format::Tikz => no_tikz("basis")?,
    }
    Ok(ExitCode::SUCCESS)
}

fn canonical(a: &ObjectWord, b: &ObjectWord, format: Format, out: Option<&Path>) -> Result<ExitCode> {
    let mut e = Engine::new();
    let cb = e.canonical_basis(a, b)?;
    let report = e.verify_canonical(&cb);
    let text = match format {
        Format::Text => render::canonical_text(&cb),
        Format::Json => json_text(&render::canonical_json(&cb)),
        Format::Tikz => render::canonical_tikz(&cb),
    };
    emit(&text, out)?;
    if !report.passed() {
        for c in report.checks.iter().filter(|c| !c.passed) {
            eprintln!("{c}");
        }
        return Ok(ExitCode::FAILURE);
    }
    Ok(ExitCode::SUCCESS)
}

fn expand(file: &Path, format: Format, route: Route) -> Result<ExitCode> {
    let d: SlicedDiagram = read_input(file)?.parse()?;
    let mut e = Engine::new();
    let x = match route {
        Route::Reduce => e.expand(&d),
        Route::Pairing => {
            let cache = std::env::var_os("SKEIN_CACHE_DIR").map(PathBuf::from);
            if let Some(dir) = &cache {
                std::fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
            }
            let g = e.gram_data(d.bottom(), d.top(), cache.as_deref())?;
            e.expand_by_pairing(&g, &d)?
        }
    };
    match format {
        Format::Text => println!("{x}"),
        Format::Json => print!("{}", json_text(&x.to_json())),
        Format::Tikz => no_tikz("expand")?,
    }
    Ok(ExitCode::SUCCESS)
}

fn homfly(file: &Path) -> Result<ExitCode> {
    let pd: PdDiagram = read_input(file)?.parse()?;
    println!("{}", linkeval::eval(&pd)?);
    Ok(ExitCode::SUCCESS)
}

fn qwb_canonical(m: usize, n: usize, format: Format, out: Option<&Path>) -> Result<ExitCode> {
    let mut e = Engine::new();
    let qc = e.qwb_canonical(m, n)?;
    let report = e.verify_canonical(&qc.basis);
    let text = match format {
        Format::Text => qc.to_text(),
        Format::Json => json_text(&qc.to_json()),
        Format::Tikz => render::canonical_tikz(&qc.basis),
    };
    emit(&text, out)?;
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn qwb_verify(m: usize, n: usize) -> Result<ExitCode> {
    let checks = qwb::relation_suite(&mut Engine::new(), m, n)?;
    println!("quadratic relation checked as (H_i - q)(H_i + q^-1) = 0");
    for c in &checks {
        println!("{c}");
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    println!("{} checks, {failed} failed", checks.len());
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

/// Exit status 0 when everything passes, 3 when the only failures are
/// documented errata of a reference table, 1 otherwise.
fn verify_paper(only: Vec<String>, golden_dir: Option<PathBuf>, format: Format, timings: bool) -> Result<ExitCode> {
    let unknown = verify::unknown_keys(&only);
    if !unknown.is_empty() {
        let keys: Vec<&str> = verify::CRITERIA.iter().map(|c| c.1).collect();
        bail!("unknown criteria {}; expected one of {}", unknown.join(", "), keys.join(", "));
    }
    let opts = VerifyOptions { only, golden_dir };
    let results = verify::run_criteria(&opts, |c| {
        if format == Format::Text {
            println!("{c}");
            for d in &c.details {
                println!("      {d}");
            }
            if timings {
                println!("      {:.3} s", c.elapsed.as_secs_f64());
            }
        }
    });
    match format {
        Format::Json => print!("{}", json_text(&verify::summary_json(&results, timings))),
        Format::Text => {
            let count = |o: Outcome| results.iter().filter(|c| c.outcome == o).count();
            println!(
                "summary: {} passed, {} failed, {} failed on documented errata only",
                count(Outcome::Pass),
                count(Outcome::Fail),
                count(Outcome::ErrataOnly)
            );
        }
        Format::Tikz => no_tikz("verify-paper")?,
    }
    let code = if results.iter().any(|c| c.outcome == Outcome::Fail) {
        1
    } else if results.iter().any(|c| c.outcome == Outcome::ErrataOnly) {
        3
    } else {
        0
    };
    Ok(ExitCode::from(code))
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Basis { a, b, format } => basis(&a, &b, format),
        Command::Canonical { a, b, format, out } => canonical(&a, &b, format, out.as_deref()),
        Command::Expand { file, format, route } => expand(&file, format, route),
        Command::Homfly { file } => homfly(&file),
        Command::Qwb { command: QwbCommand::Canonical { m, n, format, out } } => qwb_canonical(m, n, format, out.as_deref()),
        Command::Qwb { command: QwbCommand::Verify { m, n } } => qwb_verify(m, n),
        Command::VerifyPaper { only, golden_dir, format, timings } => verify_paper(only, golden_dir, format, timings),
        Command::Render { file } => {
            let d: SlicedDiagram = read_input(&file)?.parse()?;
            print!("{}", render::tikz_diagram(&d));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

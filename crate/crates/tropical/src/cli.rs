//! Subcommand implementations behind the `trop` binary.
//!
//! Exit-code contract: 0 = success or true predicate, 1 = false predicate
//! or negative verdict, 2 = usage or data error (with a one-line
//! diagnostic on stderr).  The environment variable `TROP_EPSILON`
//! overrides the geometric epsilon (default 1e-9).

use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cone::{cone_contains, relint_contains, ConicSubspace};
use crate::doc::{format_sig17, Document};
use crate::grassmann::{grassmann_canonical, SimplexPoint};
use crate::matrix::TropMatrix;
use crate::scalar::{MaxTimes, GEOM_EPSILON};
use crate::svg::render_delta2;
use crate::vector::TropVector;

#[derive(Parser)]
#[command(name = "trop", version, about = "Tropical linear algebra over JSON documents")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tropical matrix product A ⊙ B
    Matmul { a: PathBuf, b: PathBuf },
    /// Tropical inverse of a square matrix, or "not-invertible"
    Inverse { a: PathBuf },
    /// Evaluate a matrix predicate; prints true/false
    Check {
        a: PathBuf,
        #[arg(long, value_enum)]
        predicate: Predicate,
    },
    /// Span membership of a point, closed cone or relative interior
    Span {
        gens: PathBuf,
        point: PathBuf,
        #[arg(long)]
        closed: bool,
        #[arg(long)]
        open: bool,
    },
    /// Canonical simplex configuration of an independent generator set
    Grass {
        gens: PathBuf,
        #[arg(long)]
        closed: bool,
        #[arg(long)]
        open: bool,
    },
    /// Group generators by orthant stratum
    Decompose { gens: PathBuf },
    /// Run the carrier-isomorphism property suite on seeded samples
    IsoCheck {
        #[arg(long)]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Render a Δ² configuration to SVG
    Plot {
        config: PathBuf,
        #[arg(short)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Predicate {
    Idempotent,
    IdempotentConditions,
    Orthogonal,
    Monomial,
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, String> {
    let eps = geometric_epsilon()?;
    match cli.command {
        Command::Matmul { a, b } => {
            let a = read_matrix(&a)?;
            let b = read_matrix(&b)?;
            let product = a.odot(&b).map_err(|e| e.to_string())?;
            println!("{}", Document::matrix(&product).to_json());
            Ok(0)
        }
        Command::Inverse { a } => {
            let a = read_matrix(&a)?;
            match a.trop_inverse() {
                Ok(inv) => {
                    println!("{}", Document::matrix(&inv).to_json());
                    Ok(0)
                }
                Err(_) => {
                    println!("not-invertible");
                    Ok(1)
                }
            }
        }
        Command::Check { a, predicate } => {
            let a = read_matrix(&a)?;
            if !a.is_square() {
                return Err("predicate checks need a square matrix".into());
            }
            let verdict = match predicate {
                Predicate::Idempotent => a.is_idempotent(),
                Predicate::IdempotentConditions => a.idempotent_necessary_conditions(),
                Predicate::Orthogonal => a.is_trop_orthogonal(),
                Predicate::Monomial => a.monomial_decompose().is_ok(),
            };
            println!("{verdict}");
            Ok(if verdict { 0 } else { 1 })
        }
        Command::Span { gens, point, closed, open } => {
            let closed = pick_flag(closed, open)?;
            let gens = read_generators(&gens)?;
            let point = read_vector(&point)?;
            // construction validates independence
            ConicSubspace::new(gens.clone(), closed, eps).map_err(|e| e.to_string())?;
            let result = if closed {
                cone_contains(&gens, &point, eps)
            } else {
                relint_contains(&gens, &point, eps)
            }
            .map_err(|e| e.to_string())?;
            let witness = match &result.witness {
                Some(w) => format!(
                    "[{}]",
                    w.iter().map(|x| format_sig17(*x)).collect::<Vec<_>>().join(",")
                ),
                None => "null".into(),
            };
            let margin = if result.margin.is_finite() {
                format_sig17(result.margin)
            } else {
                "null".into()
            };
            println!(
                "{{\"member\":{},\"witness\":{},\"margin\":{}}}",
                result.feasible, witness, margin
            );
            Ok(if result.feasible { 0 } else { 1 })
        }
        Command::Grass { gens, closed, open } => {
            let closed = pick_flag(closed, open)?;
            let gens = read_generators(&gens)?;
            match grassmann_canonical(&gens, closed, eps) {
                Ok(g) => {
                    let rows = g
                        .points()
                        .iter()
                        .map(|p| {
                            format!(
                                "[{}]",
                                p.coords()
                                    .iter()
                                    .map(|x| format_sig17(*x))
                                    .collect::<Vec<_>>()
                                    .join(",")
                            )
                        })
                        .collect::<Vec<_>>()
                        .join(",");
                    println!(
                        "{{\"kind\":\"configuration\",\"carrier\":\"maxtimes\",\"closed\":{},\"entries\":[{}]}}",
                        g.is_closed(),
                        rows
                    );
                    Ok(0)
                }
                Err(crate::TropError::NotIndependent) => {
                    println!("not-independent");
                    Ok(1)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Decompose { gens } => {
            let gens = read_generators(&gens)?;
            let c = ConicSubspace::new(gens, true, eps).map_err(|e| e.to_string())?;
            let strata = c
                .subspace_decomposition()
                .iter()
                .map(|(index, group)| {
                    let rows = group
                        .iter()
                        .map(|g| {
                            format!(
                                "[{}]",
                                g.coords()
                                    .iter()
                                    .map(|x| format_sig17(*x))
                                    .collect::<Vec<_>>()
                                    .join(",")
                            )
                        })
                        .collect::<Vec<_>>()
                        .join(",");
                    format!(
                        "\"{}\":{{\"rank\":{},\"generators\":[{}]}}",
                        index.bitstring(),
                        index.rank(),
                        rows
                    )
                })
                .collect::<Vec<_>>()
                .join(",");
            println!("{{\"kind\":\"decomposition\",\"strata\":{{{strata}}}}}");
            Ok(0)
        }
        Command::IsoCheck { samples, seed } => {
            if samples == 0 {
                return Err("--samples must be at least 1".into());
            }
            let (max_dev, all_within) = iso_check(samples, seed);
            println!("max-deviation {}", format_sig17(max_dev));
            Ok(if all_within { 0 } else { 1 })
        }
        Command::Plot { config, out } => {
            let doc = read_doc(&config)?;
            let rows = doc.configuration_rows().map_err(|e| e.to_string())?;
            let mut points = Vec::with_capacity(rows.len());
            for row in rows {
                if row.len() != 3 {
                    return Err("plot needs 3 coordinates per point".into());
                }
                points.push(SimplexPoint::new(row.clone()).map_err(|e| e.to_string())?);
            }
            let svg = render_delta2(&points);
            fs::write(&out, svg).map_err(|e| format!("cannot write {}: {e}", out.display()))?;
            Ok(0)
        }
    }
}

/// Homomorphism suite for the log/exp carrier isomorphism; returns the
/// largest relative deviation seen and whether every identity stayed
/// within 1e-12 relative.
fn iso_check(samples: u64, seed: u64) -> (f64, bool) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut max_dev = 0.0f64;
    let tol = 1e-12;
    let mut ok = true;
    for _ in 0..samples {
        // log-uniform positive values
        let a = MaxTimes::new(rng.gen_range(-6.0..6.0f64).exp()).expect("positive");
        let b = MaxTimes::new(rng.gen_range(-6.0..6.0f64).exp()).expect("positive");
        let pairs = [
            (a.oplus(b).to_minplus().value(), a.to_minplus().oplus(b.to_minplus()).value()),
            (a.odot(b).to_minplus().value(), a.to_minplus().odot(b.to_minplus()).value()),
            (a.to_minplus().to_maxtimes().value(), a.value()),
        ];
        for (x, y) in pairs {
            let denom = x.abs().max(y.abs());
            let dev = if denom == 0.0 { 0.0 } else { (x - y).abs() / denom };
            max_dev = max_dev.max(dev);
            if (x - y).abs() > 1e-15f64.max(tol * denom) {
                ok = false;
            }
        }
    }
    (max_dev, ok)
}

fn geometric_epsilon() -> Result<f64, String> {
    match std::env::var("TROP_EPSILON") {
        Ok(s) => s
            .parse::<f64>()
            .ok()
            .filter(|e| e.is_finite() && *e > 0.0)
            .ok_or_else(|| format!("TROP_EPSILON must be a positive number, got {s:?}")),
        Err(_) => Ok(GEOM_EPSILON),
    }
}

fn pick_flag(closed: bool, open: bool) -> Result<bool, String> {
    match (closed, open) {
        (true, false) => Ok(true),
        (false, true) => Ok(false),
        _ => Err("pass exactly one of --closed or --open".into()),
    }
}

fn read_doc(path: &PathBuf) -> Result<Document, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    Document::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_matrix(path: &PathBuf) -> Result<TropMatrix, String> {
    read_doc(path)?.to_matrix().map_err(|e| e.to_string())
}

fn read_vector(path: &PathBuf) -> Result<TropVector, String> {
    read_doc(path)?.to_vector().map_err(|e| e.to_string())
}

fn read_generators(path: &PathBuf) -> Result<Vec<TropVector>, String> {
    read_doc(path)?.to_generators().map_err(|e| e.to_string())
}

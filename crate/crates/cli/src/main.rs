//! `kfk` - fibredness of one-bridge braid exteriors and the slope
//! arithmetic around it.
//!
//! Exit codes: 0 success, 1 domain error (error name on stderr), 2 bad
//! flags, 3 falsification event (certificate on stderr).

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use kfk_cli::json::{FalsificationJson, FiberJson};
use kfk_cli::sweep::{self, SweepConfig};
use kfk_core::alexander::{alexander_specialized, monic_check};
use kfk_core::braid::{relator, BraidParams};
use kfk_core::fibration::{
    approximate_fibre_classes, fibers_over_slope, weight_for_slope, FibrationError, H2Class,
};
use kfk_core::orbilens::{quotient_data, CyclicActionParams};
use kfk_core::slope::{distance, involution_distance, max_close_clique, Slope};
use kfk_core::surgery::{cosmetic_surgery_lens, BGSurgeryInput};

#[derive(Parser)]
#[command(
    name = "kfk",
    version,
    about = "Fibredness of one-bridge braid exteriors"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BraidArgs {
    /// Braid index (number of strands)
    #[arg(long)]
    n: usize,
    /// Bridge index
    #[arg(long)]
    b: usize,
    /// Twisting number (any integer; reduced mod n)
    #[arg(long, allow_negative_numbers = true)]
    t: i64,
}

#[derive(Args)]
struct SlopeArgs {
    /// Winding coefficient of the boundary curve (>= 1)
    #[arg(long)]
    p: i64,
    /// Meridian coefficient of the boundary curve
    #[arg(long, allow_negative_numbers = true)]
    q: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Decide fibredness of the braid exterior over a boundary slope
    Fiber {
        #[command(flatten)]
        braid: BraidArgs,
        #[command(flatten)]
        slope: SlopeArgs,
        /// Emit the verdict as JSON
        #[arg(long)]
        json: bool,
    },
    /// Print the relator of the exterior's fundamental group
    Relator {
        #[command(flatten)]
        braid: BraidArgs,
    },
    /// Exhaustively verify the fibration criterion over a parameter box
    Sweep {
        /// Largest braid index to test
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        /// Largest |p| and |q| of tested slopes
        #[arg(long, default_value_t = 15)]
        max_slope: i64,
        /// Write CSV rows to this file instead of stdout
        #[arg(long)]
        csv: Option<std::path::PathBuf>,
    },
    /// Lens-space order of a cosmetic surgery on a Berge-Gabai knot
    Surgery {
        /// Order of the ambient lens space
        #[arg(long)]
        p: u64,
        /// Second lens parameter
        #[arg(long, allow_negative_numbers = true)]
        q: i64,
        /// Winding number of the knot
        #[arg(long)]
        w: u64,
        /// Surgery parameter of the slope m*mu0 + lambda0
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
    },
    /// Invariants of the cyclic quotient of the three-sphere
    Orbilens {
        /// Rotation order on the first coordinate plane
        #[arg(long)]
        a1: u64,
        /// Rotation order on the second coordinate plane
        #[arg(long)]
        a2: u64,
    },
    /// Slope arithmetic
    Slope {
        #[command(subcommand)]
        op: SlopeOp,
    },
    /// Approximate a homology class by fibre classes
    Cone {
        /// First coefficient of the target class (nonzero)
        #[arg(long, allow_negative_numbers = true)]
        u: i64,
        /// Second coefficient of the target class
        #[arg(long, allow_negative_numbers = true)]
        v: i64,
        /// Braid index entering the fibre classes
        #[arg(long)]
        n: u64,
        /// Number of approximation steps
        #[arg(long, default_value_t = 10)]
        m_max: u64,
    },
    /// Specialised Alexander invariant along a boundary slope
    Alexander {
        #[command(flatten)]
        braid: BraidArgs,
        #[command(flatten)]
        slope: SlopeArgs,
    },
}

#[derive(Subcommand)]
enum SlopeOp {
    /// Geometric intersection distance of two slopes
    Dist {
        #[arg(long, allow_negative_numbers = true)]
        p1: i64,
        #[arg(long, allow_negative_numbers = true)]
        q1: i64,
        #[arg(long, allow_negative_numbers = true)]
        p2: i64,
        #[arg(long, allow_negative_numbers = true)]
        q2: i64,
    },
    /// Distance 2|pq| from a slope to its involution image
    Parity {
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, allow_negative_numbers = true)]
        q: i64,
    },
    /// Largest pairwise-distance-<=1 set of slopes within a coordinate box
    Clique {
        #[arg(long)]
        bound: u32,
    },
}

enum CmdError {
    Domain(String),
    Falsification(Box<FalsificationJson>),
}

impl<E: std::error::Error> From<E> for CmdError {
    fn from(e: E) -> Self {
        CmdError::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CmdError::Domain(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(CmdError::Falsification(cert)) => {
            eprintln!(
                "{}",
                serde_json::to_string(&cert).expect("serializable certificate")
            );
            ExitCode::from(3)
        }
    }
}

fn braid_params(args: &BraidArgs) -> Result<BraidParams, CmdError> {
    Ok(BraidParams::new(args.n, args.b, args.t)?)
}

fn boundary_slope(args: &SlopeArgs) -> Result<Slope, CmdError> {
    Ok(Slope::new(args.p, args.q)?)
}

fn dispatch(command: Command) -> Result<(), CmdError> {
    match command {
        Command::Fiber { braid, slope, json } => {
            let params = braid_params(&braid)?;
            let r = boundary_slope(&slope)?;
            let verdict = match fibers_over_slope(&params, r) {
                Ok(v) => v,
                Err(FibrationError::Falsified(report)) => {
                    return Err(CmdError::Falsification(Box::new(
                        FalsificationJson::from_report(&report),
                    )));
                }
                Err(e) => return Err(e.into()),
            };
            if json {
                println!(
                    "{}",
                    serde_json::to_string(&FiberJson::from(&verdict)).expect("json")
                );
            } else {
                println!("fibred: {}", verdict.fibred);
                println!("boundary_components: {}", verdict.boundary_components);
                println!("weight: {}", verdict.weight);
                println!(
                    "max: {} at positions {:?}",
                    verdict.brown.max_value, verdict.brown.max_positions
                );
                println!(
                    "min: {} at positions {:?}",
                    verdict.brown.min_value, verdict.brown.min_positions
                );
            }
            Ok(())
        }
        Command::Relator { braid } => {
            let params = braid_params(&braid)?;
            println!("{}", relator(&params)?);
            Ok(())
        }
        Command::Sweep {
            max_n,
            max_slope,
            csv,
        } => {
            let config = SweepConfig {
                max_n,
                max_slope,
                threads: sweep::threads_from_env(),
            };
            let records = sweep::run(&config).map_err(|failure| {
                CmdError::Falsification(Box::new(FalsificationJson::new(
                    failure.event,
                    failure.params,
                    failure.slope,
                    failure.weight,
                    &failure.verdict,
                )))
            })?;
            let data = sweep::to_csv(&records);
            match csv {
                Some(path) => {
                    let mut file = std::fs::File::create(&path)
                        .map_err(|e| CmdError::Domain(format!("IoError: {e}")))?;
                    file.write_all(data.as_bytes())
                        .map_err(|e| CmdError::Domain(format!("IoError: {e}")))?;
                }
                None => print!("{data}"),
            }
            eprintln!(
                "sweep ok: {} rows verified, 0 falsifications",
                records.len()
            );
            Ok(())
        }
        Command::Surgery { p, q, w, m } => {
            let input = BGSurgeryInput::new(p, q, w, m)?;
            let result = cosmetic_surgery_lens(&input)?;
            println!("{}", result.p_prime);
            Ok(())
        }
        Command::Orbilens { a1, a2 } => {
            let params = CyclicActionParams::from_orders(a1, a2)?;
            println!("{}", quotient_data(&params));
            Ok(())
        }
        Command::Slope { op } => {
            match op {
                SlopeOp::Dist { p1, q1, p2, q2 } => {
                    let r1 = Slope::new(p1, q1)?;
                    let r2 = Slope::new(p2, q2)?;
                    println!("{}", distance(r1, r2));
                }
                SlopeOp::Parity { p, q } => {
                    let r = Slope::new(p, q)?;
                    println!("{}", involution_distance(r));
                }
                SlopeOp::Clique { bound } => {
                    let (size, witness) = max_close_clique(bound);
                    let names: Vec<String> = witness.iter().map(|s| s.to_string()).collect();
                    println!("size={} witness={}", size, names.join(" "));
                }
            }
            Ok(())
        }
        Command::Cone { u, v, n, m_max } => {
            let steps = approximate_fibre_classes(H2Class { c1: u, c2: v }, n, m_max)?;
            for (m, (class, error)) in steps.iter().enumerate() {
                println!("m={} class={} error={}", m + 1, class, error);
            }
            Ok(())
        }
        Command::Alexander { braid, slope } => {
            let params = braid_params(&braid)?;
            let r = boundary_slope(&slope)?;
            let hom = weight_for_slope(&params, r)?;
            let rel = relator(&params)?;
            let delta = alexander_specialized(&rel, &hom)?;
            println!("{delta}");
            match monic_check(&delta) {
                Ok(monic) => println!("monic: {monic}"),
                Err(_) => println!("monic: undefined (zero polynomial)"),
            }
            Ok(())
        }
    }
}

//! Command-line surface: parameter sweeps over the damped Bell cat family,
//! dephasing trajectories, single-point reports, and the verification suite
//! that cross-checks the closed forms against the Fock-space construction.

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use bellcat::cat::{damped_bell_xstate, rank2_decomposition, CatDampingParams};
use bellcat::correlations::{
    bc_concurrence, classical_correlation, concurrence_wootters, concurrence_xstate,
    koashi_winter_smin, minimize_conditional_entropy, mutual_information,
    quantum_discord_closed, quantum_discord_numeric, SearchGrid,
};
use bellcat::density::bloch_from_xstate;
use bellcat::dephasing::{dephase, sudden_death_time, DephasingParams};
use bellcat::fock::{coherent_fock, damped_bell_oracle, qubit_basis};
use bellcat::density::C64;

#[derive(Parser)]
#[command(name = "bellcat", version, about = "Quantum correlations of damped Bell cat-states")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep (p, rsq) and tabulate all correlation measures.
    Sweep(SweepArgs),
    /// Evolve one parameter point under the dephasing channel.
    Trajectory(TrajectoryArgs),
    /// Print the full correlation report for a single (p, rsq) point.
    Report(ReportArgs),
    /// Run the oracle verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, default_value_t = 0.05)]
    p_min: f64,
    #[arg(long, default_value_t = 0.95)]
    p_max: f64,
    #[arg(long, default_value_t = 19)]
    p_steps: usize,
    /// Reflection fractions; repeat the flag for several values.
    #[arg(long = "rsq", num_args = 1.., value_delimiter = ',')]
    rsq_values: Option<Vec<f64>>,
    #[arg(long, default_value = "csv", value_parser = ["csv", "json"])]
    format: String,
    /// Output file; stdout when omitted.
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args)]
struct TrajectoryArgs {
    #[arg(long)]
    p: f64,
    #[arg(long)]
    rsq: f64,
    #[arg(long, default_value_t = 1.0)]
    gamma_rate: f64,
    #[arg(long, default_value_t = 3.0)]
    t_max: f64,
    #[arg(long, default_value_t = 60)]
    t_steps: usize,
    #[arg(long, default_value = "csv", value_parser = ["csv", "json"])]
    format: String,
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args)]
struct ReportArgs {
    #[arg(long)]
    p: f64,
    #[arg(long)]
    rsq: f64,
}

#[derive(Args)]
struct VerifyArgs {
    /// Fock truncation dimension.
    #[arg(long, default_value_t = 40)]
    dim: usize,
    /// Tolerance for the oracle agreement checks.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
}

/// 12 significant digits, locale independent.
fn fmt12(x: f64) -> String {
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    format!("{x:.11e}")
}

fn write_output(path: &Option<String>, content: &str) -> Result<(), String> {
    match path {
        Some(p) => fs::write(p, content).map_err(|e| format!("cannot write {p}: {e}")),
        None => {
            print!("{content}");
            std::io::stdout().flush().ok();
            Ok(())
        }
    }
}

fn run_sweep(args: &SweepArgs) -> Result<(), String> {
    if !(args.p_min < args.p_max) || args.p_min <= 0.0 || args.p_max >= 1.0 {
        return Err(format!(
            "invalid p range [{}, {}]: need 0 < p_min < p_max < 1",
            args.p_min, args.p_max
        ));
    }
    if args.p_steps < 1 {
        return Err("p_steps must be positive".into());
    }
    let rsq_values = args
        .rsq_values
        .clone()
        .unwrap_or_else(|| (0..=10).map(|j| j as f64 / 10.0).collect());
    if rsq_values.iter().any(|r| !(0.0..=1.0).contains(r)) {
        return Err("all rsq values must lie in [0, 1]".into());
    }

    let grid = SearchGrid::default();
    let mut rows = Vec::new();
    for i in 0..args.p_steps {
        let p = if args.p_steps == 1 {
            args.p_min
        } else {
            args.p_min + i as f64 * (args.p_max - args.p_min) / (args.p_steps - 1) as f64
        };
        for &rsq in &rsq_values {
            let params = CatDampingParams::new(p, rsq).map_err(|e| e.to_string())?;
            let x = damped_bell_xstate(&params);
            let closed = quantum_discord_closed(&params).map_err(|e| e.to_string())?;
            let report = quantum_discord_numeric(&x, &grid).map_err(|e| e.to_string())?;
            rows.push((
                p,
                rsq,
                mutual_information(&params).map_err(|e| e.to_string())?,
                classical_correlation(&params).map_err(|e| e.to_string())?,
                closed,
                report.discord,
                (closed - report.discord).abs(),
                concurrence_xstate(&x),
            ));
        }
    }

    let content = match args.format.as_str() {
        "csv" => {
            let mut out = String::from(
                "p,rsq,mutual_information,classical_correlation,discord_closed,discord_numeric,abs_gap,concurrence\n",
            );
            for r in &rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{}\n",
                    fmt12(r.0),
                    fmt12(r.1),
                    fmt12(r.2),
                    fmt12(r.3),
                    fmt12(r.4),
                    fmt12(r.5),
                    fmt12(r.6),
                    fmt12(r.7)
                ));
            }
            out
        }
        _ => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "p": r.0,
                        "rsq": r.1,
                        "mutual_information": r.2,
                        "classical_correlation": r.3,
                        "discord_closed": r.4,
                        "discord_numeric": r.5,
                        "abs_gap": r.6,
                        "concurrence": r.7,
                    })
                })
                .collect();
            serde_json::to_string_pretty(&items).unwrap() + "\n"
        }
    };
    write_output(&args.output, &content)
}

fn run_trajectory(args: &TrajectoryArgs) -> Result<(), String> {
    if args.gamma_rate <= 0.0 || args.t_max <= 0.0 || args.t_steps < 1 {
        return Err("gamma_rate, t_max and t_steps must be positive".into());
    }
    let params = CatDampingParams::new(args.p, args.rsq).map_err(|e| e.to_string())?;
    let x0 = damped_bell_xstate(&params);
    let t0 = sudden_death_time(&params, args.gamma_rate).map_err(|e| e.to_string())?;
    let grid = SearchGrid::default();

    let mut rows = Vec::new();
    for i in 0..args.t_steps {
        let t = if args.t_steps == 1 {
            0.0
        } else {
            i as f64 * args.t_max / (args.t_steps - 1) as f64
        };
        let d = DephasingParams::new(args.gamma_rate, t).map_err(|e| e.to_string())?;
        let xt = dephase(&x0, &d);
        let report = quantum_discord_numeric(&xt, &grid).map_err(|e| e.to_string())?;
        rows.push((
            t,
            d.gamma(),
            bellcat::dephasing::concurrence_t(&params, &d),
            concurrence_wootters(&xt.to_matrix()),
            report.discord,
        ));
    }

    let content = match args.format.as_str() {
        "csv" => {
            let mut out = format!("# t0 = {}\n", fmt12(t0));
            out.push_str("t,gamma,concurrence_closed,concurrence_wootters,discord_numeric\n");
            for r in &rows {
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    fmt12(r.0),
                    fmt12(r.1),
                    fmt12(r.2),
                    fmt12(r.3),
                    fmt12(r.4)
                ));
            }
            out
        }
        _ => {
            let points: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "t": r.0,
                        "gamma": r.1,
                        "concurrence_closed": r.2,
                        "concurrence_wootters": r.3,
                        "discord_numeric": r.4,
                    })
                })
                .collect();
            let doc = serde_json::json!({
                "t0": if t0.is_finite() { serde_json::json!(t0) } else { serde_json::json!("inf") },
                "points": points,
            });
            serde_json::to_string_pretty(&doc).unwrap() + "\n"
        }
    };
    write_output(&args.output, &content)
}

fn run_report(args: &ReportArgs) -> Result<(), String> {
    let params = CatDampingParams::new(args.p, args.rsq).map_err(|e| e.to_string())?;
    let x = damped_bell_xstate(&params);
    let report =
        quantum_discord_numeric(&x, &SearchGrid::default()).map_err(|e| e.to_string())?;
    let closed = quantum_discord_closed(&params).map_err(|e| e.to_string())?;
    let spec = rank2_decomposition(&params);
    let bloch = bloch_from_xstate(&x);

    println!("point: p = {}, rsq = {}", fmt12(args.p), fmt12(args.rsq));
    println!("mutual_information      = {}", fmt12(report.mutual_information));
    println!("classical_correlation   = {}", fmt12(report.classical_correlation));
    println!("discord_closed          = {}", fmt12(closed));
    println!("discord_numeric         = {}", fmt12(report.discord));
    println!("abs_gap                 = {}", fmt12((closed - report.discord).abs()));
    println!("smin                    = {}", fmt12(report.smin));
    println!("concurrence             = {}", fmt12(report.concurrence));
    println!(
        "optimal_angles          = (theta = {}, phi = {})",
        fmt12(report.optimal_angles.theta),
        fmt12(report.optimal_angles.phi)
    );
    println!("lambda1, lambda2        = {}, {}", fmt12(spec.values[0]), fmt12(spec.values[1]));
    println!(
        "bloch (R30 R03 R11 R22 R33) = {} {} {} {} {}",
        fmt12(bloch.r30),
        fmt12(bloch.r03),
        fmt12(bloch.r11),
        fmt12(bloch.r22),
        fmt12(bloch.r33)
    );
    Ok(())
}

struct Check {
    name: &'static str,
    deviation: f64,
    tolerance: f64,
}

fn run_verify(args: &VerifyArgs) -> Result<(), String> {
    if args.dim < 20 {
        return Err("dim must be at least 20".into());
    }
    let mut checks: Vec<Check> = Vec::new();
    let mut max_deficit: f64 = 0.0;

    // coherent-state overlap against the analytic value
    {
        let plus = coherent_fock(C64::new(1.0, 0.0), args.dim);
        let minus = coherent_fock(C64::new(-1.0, 0.0), args.dim);
        max_deficit = max_deficit.max(plus.truncation_deficit().abs());
        checks.push(Check {
            name: "coherent overlap <-a|a> = e^{-2|a|^2}",
            deviation: (minus.inner(&plus).re - (-2.0_f64).exp()).abs(),
            tolerance: 1e-12,
        });
    }

    // qubit basis orthonormality
    {
        let (u, v) = qubit_basis(1.0, args.dim).map_err(|e| e.to_string())?;
        let dev = (u.norm_sqr() - 1.0)
            .abs()
            .max((v.norm_sqr() - 1.0).abs())
            .max(u.inner(&v).norm());
        checks.push(Check { name: "even/odd cat basis orthonormal", deviation: dev, tolerance: 1e-12 });
    }

    // Fock oracle vs closed-form X-matrix
    {
        let mut worst: f64 = 0.0;
        for alpha in [0.5, 1.0, 1.5] {
            for rsq in [0.0, 0.25, 0.5, 0.75, 1.0] {
                let oracle = damped_bell_oracle(alpha, rsq, args.dim).map_err(|e| e.to_string())?;
                max_deficit = max_deficit.max(oracle.deficit.abs());
                let params = CatDampingParams::from_alpha(alpha, rsq).map_err(|e| e.to_string())?;
                let closed = damped_bell_xstate(&params);
                let diff = (oracle.matrix.to_matrix() - closed.to_matrix())
                    .iter()
                    .map(|e| e.norm())
                    .fold(0.0, f64::max);
                worst = worst.max(diff);
            }
        }
        checks.push(Check {
            name: "oracle vs closed-form damped Bell matrix",
            deviation: worst,
            tolerance: args.tol,
        });
    }

    // minimized conditional entropy vs the purification shortcut
    {
        let grid = SearchGrid::default();
        let mut worst: f64 = 0.0;
        for i in 1..=9 {
            for j in 1..=9 {
                let params = CatDampingParams::new(i as f64 * 0.1, j as f64 * 0.1).unwrap();
                let b = bloch_from_xstate(&damped_bell_xstate(&params));
                let (smin, _) = minimize_conditional_entropy(&b, &grid);
                let kw = koashi_winter_smin(&params).map_err(|e| e.to_string())?;
                worst = worst.max((smin - kw).abs());
            }
        }
        checks.push(Check {
            name: "grid minimum vs purification-shortcut entropy",
            deviation: worst,
            tolerance: 1e-8,
        });
    }

    // concurrence of rho^BC vs its closed form
    {
        let mut worst: f64 = 0.0;
        for (p, rsq) in [(0.3, 0.4), (0.5, 0.5), (0.7, 0.2), (0.2, 0.8)] {
            let params = CatDampingParams::new(p, rsq).unwrap();
            let w = concurrence_wootters(&bellcat::correlations::rho_bc(&params).to_matrix());
            worst = worst.max((w - bc_concurrence(&params)).abs());
        }
        checks.push(Check {
            name: "spin-flip concurrence of rho^BC vs closed form",
            deviation: worst,
            tolerance: 1e-10,
        });
    }

    // sudden-death time vs bisection on the evolved concurrence
    {
        let params = CatDampingParams::new(0.25, 0.5).unwrap();
        let t0 = sudden_death_time(&params, 1.0).map_err(|e| e.to_string())?;
        let x0 = damped_bell_xstate(&params);
        let conc = |t: f64| {
            let d = DephasingParams::new(1.0, t).unwrap();
            concurrence_wootters(&dephase(&x0, &d).to_matrix())
        };
        let (mut lo, mut hi) = (0.0, 5.0);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if conc(mid) > 0.0 {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let dev = (0.5 * (lo + hi) - t0).abs().max((t0 - 3.0_f64.ln()).abs());
        checks.push(Check {
            name: "sudden-death time closed form vs bisection",
            deviation: dev,
            tolerance: 1e-10,
        });
    }

    if max_deficit > 1e-13 {
        println!(
            "warning: Fock truncation deficit {:.3e} at dim {}; consider a larger --dim",
            max_deficit, args.dim
        );
    }

    let mut failed = false;
    for c in &checks {
        let ok = c.deviation <= c.tolerance;
        failed |= !ok;
        println!(
            "{}: {} (deviation {:.3e}, tolerance {:.1e})",
            if ok { "PASS" } else { "FAIL" },
            c.name,
            c.deviation,
            c.tolerance
        );
    }
    if failed {
        Err("verification failed".into())
    } else {
        println!("all checks passed");
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Sweep(args) => run_sweep(args),
        Command::Trajectory(args) => run_trajectory(args),
        Command::Report(args) => run_report(args),
        Command::Verify(args) => run_verify(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

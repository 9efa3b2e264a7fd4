//! Batches of independent seeded runs, parameter sweeps and their CSV/table output.

use std::io::{self, Write};
use std::time::Duration;

use rayon::prelude::*;

use crate::graph::Graph;
use crate::solver::{solve, Gamma, RunRecord, SolveError, SolverConfig};
use crate::stats::{summarize, RtdSummary};

/// Runs `runs` independent solves with seeds `base_seed, base_seed + 1, ...`.
///
/// Runs execute on a rayon pool of `threads` workers (the global pool when
/// `None`); the returned records are always ordered by seed.
pub fn run_batch(
    g: &Graph,
    cfg: &SolverConfig,
    runs: usize,
    base_seed: u64,
    threads: Option<usize>,
) -> Result<Vec<RunRecord>, SolveError> {
    cfg.validate()?;
    let one = |i: usize| {
        let cfg = SolverConfig {
            seed: base_seed.wrapping_add(i as u64),
            ..cfg.clone()
        };
        solve(g, &cfg).map(|(_, rec)| rec)
    };
    match threads {
        Some(1) => (0..runs).map(one).collect(),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .expect("thread pool construction")
            .install(|| (0..runs).into_par_iter().map(one).collect()),
        None => (0..runs).into_par_iter().map(one).collect(),
    }
}

/// Total steps divided by total wall-clock seconds over a batch.
pub fn throughput(records: &[RunRecord]) -> f64 {
    let steps: u64 = records.iter().map(|r| r.total_steps).sum();
    let secs: f64 = records.iter().map(|r| r.total_time.as_secs_f64()).sum();
    if secs > 0.0 {
        steps as f64 / secs
    } else {
        0.0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepCell {
    pub gamma: Gamma,
    /// `gamma` resolved against the instance.
    pub gamma_abs: u64,
    pub rho: f64,
    pub summary: RtdSummary,
}

/// One batch and summary per `(gamma, rho)` pair, gammas varying slowest.
pub fn sweep(
    g: &Graph,
    gammas: &[Gamma],
    rhos: &[f64],
    runs: usize,
    cfg: &SolverConfig,
    target: usize,
    threads: Option<usize>,
) -> Result<Vec<SweepCell>, SolveError> {
    let mut cells = Vec::with_capacity(gammas.len() * rhos.len());
    for &gamma in gammas {
        for &rho in rhos {
            let cell_cfg = SolverConfig {
                gamma,
                rho,
                ..cfg.clone()
            };
            let gamma_abs = gamma.resolve(g.num_vertices())?;
            let records = run_batch(g, &cell_cfg, runs, cfg.seed, threads)?;
            cells.push(SweepCell {
                gamma,
                gamma_abs,
                rho,
                summary: summarize(&records, cfg.cutoff, target),
            });
        }
    }
    Ok(cells)
}

fn gamma_label(g: Gamma) -> String {
    match g {
        Gamma::Factor(f) => format!("{f}n"),
        Gamma::Absolute(a) => a.to_string(),
    }
}

fn secs(d: Duration) -> String {
    format!("{:.3}", d.as_secs_f64())
}

fn opt(x: Option<f64>, precision: usize) -> String {
    x.map_or_else(|| "n/a".to_string(), |v| format!("{v:.precision$}"))
}

/// Per-run CSV. Wall-clock columns are written only when `timing` is set, so
/// step-budgeted batches produce byte-identical files.
pub fn write_runs_csv<W: Write>(mut out: W, records: &[RunRecord], timing: bool) -> io::Result<()> {
    write!(out, "seed,best_size,success,steps_to_best,total_steps")?;
    if timing {
        write!(out, ",time_to_best,total_time")?;
    }
    writeln!(out)?;
    for r in records {
        write!(
            out,
            "{},{},{},{},{}",
            r.seed, r.best_size, r.success as u8, r.steps_to_best, r.total_steps
        )?;
        if timing {
            write!(out, ",{},{}", secs(r.time_to_best), secs(r.total_time))?;
        }
        writeln!(out)?;
    }
    Ok(())
}

/// Run-time distribution export: `seed,success,time_to_best,steps_to_best`.
pub fn write_rtd_csv<W: Write>(mut out: W, records: &[RunRecord]) -> io::Result<()> {
    writeln!(out, "seed,success,time_to_best,steps_to_best")?;
    for r in records {
        writeln!(
            out,
            "{},{},{},{}",
            r.seed,
            r.success as u8,
            secs(r.time_to_best),
            r.steps_to_best
        )?;
    }
    Ok(())
}

/// Sweep CSV with one row per cell. As with [`write_runs_csv`], timing
/// columns (including the exponential fit) appear only when `timing` is set.
pub fn write_sweep_csv<W: Write>(mut out: W, cells: &[SweepCell], timing: bool) -> io::Result<()> {
    write!(
        out,
        "gamma,gamma_abs,rho,runs,suc,size_min,size_avg,size_max,steps_avg,suc_steps_avg"
    )?;
    if timing {
        write!(out, ",time_avg,suc_time_avg,iqr_time,ks_m,ks_d,ks_pass")?;
    }
    writeln!(out)?;
    for c in cells {
        let s = &c.summary;
        write!(
            out,
            "{},{},{},{},{},{},{:.2},{},{},{}",
            gamma_label(c.gamma),
            c.gamma_abs,
            c.rho,
            s.runs,
            s.suc,
            s.size_min,
            s.size_avg,
            s.size_max,
            opt(s.steps_avg, 1),
            opt(s.suc_steps_avg, 1)
        )?;
        if timing {
            write!(
                out,
                ",{},{},{},{},{},{}",
                opt(s.time_avg, 3),
                opt(s.suc_time_avg, 3),
                opt(s.iqr_time, 3),
                opt(s.ks.map(|k| k.median), 3),
                opt(s.ks.map(|k| k.d), 4),
                s.ks.map_or("n/a", |k| if k.pass { "1" } else { "0" })
            )?;
        }
        writeln!(out)?;
    }
    Ok(())
}

pub const TABLE_HEADER: &str =
    "instance\tvertices\tVC*\tsuc\tVC size\ttime (suc time)\tIQR\tsteps (suc steps)";

/// One row in the layout of the usual results table: the `VC size` column
/// shows `min(avg,max)` when runs disagree, and `suc time` / `suc steps`
/// appear only when some run failed.
pub fn table_row(instance: &str, vertices: usize, target: usize, s: &RtdSummary) -> String {
    let size = if s.size_min == s.size_max {
        s.size_min.to_string()
    } else {
        format!("{}({:.2},{})", s.size_min, s.size_avg, s.size_max)
    };
    let partial = s.suc < s.runs;
    let with_suc = |all: Option<f64>, suc: Option<f64>, p: usize| match (all, partial) {
        (None, _) => "n/a".to_string(),
        (Some(a), true) => format!("{a:.p$}({})", opt(suc, p)),
        (Some(a), false) => format!("{a:.p$}"),
    };
    format!(
        "{instance}\t{vertices}\t{target}\t{}\t{size}\t{}\t{}\t{}",
        s.suc,
        with_suc(s.time_avg, s.suc_time_avg, 3),
        opt(s.iqr_time, 3),
        with_suc(s.steps_avg, s.suc_steps_avg, 0),
    )
}

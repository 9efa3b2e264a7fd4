//! Configuration, the main loop and per-run records.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::Rng;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::state::{Rho, SolverState, StateError};

/// The wall clock is polled once every this many iterations.
const CLOCK_POLL_MASK: u64 = (1 << 10) - 1;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConfigError {
    #[error("rho must lie strictly between 0 and 1, got {0}")]
    Rho(f64),
    #[error("gamma must resolve to at least 1, got {0}")]
    Gamma(String),
    #[error("a wall-clock cutoff or a step budget is required")]
    NoBudget,
    #[error("forgetting period pd must be at least 1")]
    Period,
    #[error("unknown variant {0:?} (expected numvc, pair, noforget or pd)")]
    UnknownVariant(String),
}

#[derive(Debug, Error)]
pub enum SolveError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    State(#[from] StateError),
}

/// Which search algorithm to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Variant {
    /// Two-stage exchange with weighting and multiplicative forgetting.
    #[default]
    NuMvc,
    /// Simultaneous pair exchange; same weighting as [`Variant::NuMvc`].
    Pair,
    /// Two-stage exchange, weights only ever increase.
    NoForget,
    /// Two-stage exchange; every `period` exchange steps each weight above one drops by one.
    Pd { period: u64 },
}

impl Variant {
    pub fn name(&self) -> &'static str {
        match self {
            Variant::NuMvc => "numvc",
            Variant::Pair => "pair",
            Variant::NoForget => "noforget",
            Variant::Pd { .. } => "pd",
        }
    }

    /// Parses a variant tag; `pd` takes its period from `period`.
    pub fn from_tag(tag: &str, period: Option<u64>) -> Result<Variant, ConfigError> {
        match tag {
            "numvc" => Ok(Variant::NuMvc),
            "pair" => Ok(Variant::Pair),
            "noforget" => Ok(Variant::NoForget),
            "pd" => Ok(Variant::Pd {
                period: period.ok_or(ConfigError::Period)?,
            }),
            other => Err(ConfigError::UnknownVariant(other.to_string())),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variant::Pd { period } => write!(f, "pd({period})"),
            v => f.write_str(v.name()),
        }
    }
}

impl FromStr for Variant {
    type Err = ConfigError;

    /// Accepts `numvc`, `pair`, `noforget` and `pd:<period>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once(':') {
            Some(("pd", p)) => Variant::from_tag("pd", p.parse().ok()),
            _ => Variant::from_tag(s, None),
        }
    }
}

/// Mean-weight threshold that triggers forgetting.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Gamma {
    /// Multiple of the vertex count, resolved as `round(factor * n)`.
    Factor(f64),
    Absolute(u64),
}

impl Gamma {
    pub fn resolve(&self, n: usize) -> Result<u64, ConfigError> {
        match *self {
            Gamma::Absolute(g) if g >= 1 => Ok(g),
            Gamma::Absolute(g) => Err(ConfigError::Gamma(g.to_string())),
            Gamma::Factor(f) => {
                let g = (f * n as f64).round();
                if f.is_finite() && g >= 1.0 {
                    Ok(g as u64)
                } else if f.is_finite() && f > 0.0 && n > 0 {
                    // tiny graphs: round(0.5 * 1) would otherwise be rejected
                    Ok(1)
                } else {
                    Err(ConfigError::Gamma(format!("{f} * {n}")))
                }
            }
        }
    }
}

impl fmt::Display for Gamma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gamma::Factor(x) => write!(f, "{x}|V|"),
            Gamma::Absolute(g) => write!(f, "{g}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    pub variant: Variant,
    pub gamma: Gamma,
    pub rho: f64,
    pub seed: u64,
    pub cutoff: Option<Duration>,
    pub max_steps: Option<u64>,
    /// Stop as soon as a cover of at most this size is found.
    pub target_size: Option<usize>,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            variant: Variant::NuMvc,
            gamma: Gamma::Factor(0.5),
            rho: 0.3,
            seed: 1,
            cutoff: None,
            max_steps: None,
            target_size: None,
        }
    }
}

impl SolverConfig {
    pub fn with_max_steps(max_steps: u64) -> Self {
        SolverConfig {
            max_steps: Some(max_steps),
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        Rho::new(self.rho).ok_or(ConfigError::Rho(self.rho))?;
        if self.cutoff.is_none() && self.max_steps.is_none() {
            return Err(ConfigError::NoBudget);
        }
        if let Variant::Pd { period: 0 } = self.variant {
            return Err(ConfigError::Period);
        }
        match self.gamma {
            Gamma::Absolute(0) => Err(ConfigError::Gamma("0".into())),
            Gamma::Factor(f) if !(f.is_finite() && f > 0.0) => {
                Err(ConfigError::Gamma(f.to_string()))
            }
            _ => Ok(()),
        }
    }

    /// Validates and fixes the graph-dependent parameters.
    pub fn resolve(&self, g: &Graph) -> Result<SearchParams, ConfigError> {
        self.validate()?;
        Ok(SearchParams {
            variant: self.variant,
            gamma: self.gamma.resolve(g.num_vertices())?,
            rho: Rho::new(self.rho).ok_or(ConfigError::Rho(self.rho))?,
        })
    }
}

/// Per-graph resolved parameters driving [`SolverState::step`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SearchParams {
    pub variant: Variant,
    pub gamma: u64,
    pub rho: Rho,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepOutcome {
    /// The candidate covered every edge; it was recorded and one vertex was dropped.
    Improved,
    /// One vertex left the candidate and one entered.
    Exchanged,
}

/// Outcome of one run.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub seed: u64,
    pub best_size: usize,
    /// `best_size <= target`; false when no target was given.
    pub success: bool,
    pub time_to_best: Duration,
    pub steps_to_best: u64,
    pub total_steps: u64,
    pub total_time: Duration,
}

impl<'g> SolverState<'g> {
    /// One iteration of the main loop.
    ///
    /// When the candidate covers every edge it is recorded as the best cover and
    /// a vertex of highest `dscore` (ties uniformly at random) is dropped; no
    /// weights change on this branch. Otherwise one vertex leaves, an endpoint
    /// of a random uncovered edge enters, uncovered weights grow by one and the
    /// variant's forgetting rule runs.
    pub fn step(&mut self, params: &SearchParams) -> Result<StepOutcome, StateError> {
        self.step += 1;
        if self.uncovered.is_empty() {
            self.record_if_better();
            if let Some(u) = self.random_highest_dscore_in_candidate() {
                self.remove_from_candidate(u)?;
            }
            return Ok(StepOutcome::Improved);
        }

        match params.variant {
            Variant::Pair => self.exchange_pair()?,
            _ => self.exchange_two_stage()?,
        }
        self.exchanges += 1;
        self.bump_uncovered_weights();
        match params.variant {
            Variant::NuMvc | Variant::Pair => {
                if self.should_forget(params.gamma) {
                    self.forget_weights(params.rho);
                }
            }
            Variant::NoForget => {}
            Variant::Pd { period } => {
                if self.exchanges.is_multiple_of(period) {
                    self.forget_pd();
                }
            }
        }
        Ok(StepOutcome::Exchanged)
    }

    fn exchange_two_stage(&mut self) -> Result<(), StateError> {
        if !self.cover.is_empty() {
            let u = self.select_remove_vertex()?;
            self.remove_from_candidate(u)?;
        }
        let e = self
            .random_uncovered_edge()
            .expect("an uncovered edge exists after a removal from a non-cover");
        let v = self.select_add_vertex(e)?;
        self.add_to_candidate(v)
    }

    fn random_highest_dscore_in_candidate(&mut self) -> Option<usize> {
        let mut best = i64::MIN;
        let mut chosen = None;
        let mut ties = 0u32;
        for &v in &self.cover {
            let d = self.dscore[v];
            if d > best {
                best = d;
                chosen = Some(v);
                ties = 1;
            } else if d == best {
                ties += 1;
                if self.rng.gen_range(0..ties) == 0 {
                    chosen = Some(v);
                }
            }
        }
        chosen
    }
}

/// Runs the configured solver on `g` until the budget is spent or the target is met.
///
/// The returned cover has been checked with [`Graph::is_vertex_cover`].
pub fn solve(g: &Graph, cfg: &SolverConfig) -> Result<(VertexSet, RunRecord), SolveError> {
    solve_observed(g, cfg, |_, _| Ok(()))
}

/// [`solve`] with a hook invoked after every iteration, e.g. to audit
/// invariants. An error from the hook aborts the run.
pub fn solve_observed<F>(
    g: &Graph,
    cfg: &SolverConfig,
    mut observe: F,
) -> Result<(VertexSet, RunRecord), SolveError>
where
    F: FnMut(&SolverState<'_>, StepOutcome) -> Result<(), StateError>,
{
    let params = cfg.resolve(g)?;
    let start = Instant::now();
    let mut state = SolverState::new(g, cfg.seed);
    state.greedy_construct();

    let mut time_to_best = start.elapsed();
    let mut steps_to_best = 0u64;
    let reached = |state: &SolverState<'_>| {
        let best = state.best_size().unwrap_or(usize::MAX);
        best == 0 || cfg.target_size.is_some_and(|t| best <= t)
    };

    while !reached(&state) {
        if cfg.max_steps.is_some_and(|m| state.steps() >= m) {
            break;
        }
        if let Some(cutoff) = cfg.cutoff {
            if state.steps() & CLOCK_POLL_MASK == 0 && start.elapsed() >= cutoff {
                break;
            }
        }
        let before = state.best_size();
        let outcome = state.step(&params)?;
        if state.best_size() != before {
            time_to_best = start.elapsed();
            steps_to_best = state.steps();
        }
        observe(&state, outcome)?;
    }

    let total_time = start.elapsed();
    let best = state.best.take().expect("greedy construction records a cover");
    if !g.is_vertex_cover(&best) {
        return Err(StateError::Invariant("returned set is not a vertex cover".into()).into());
    }
    let record = RunRecord {
        seed: cfg.seed,
        best_size: best.len(),
        success: cfg.target_size.is_some_and(|t| best.len() <= t),
        time_to_best,
        steps_to_best,
        total_steps: state.steps(),
        total_time,
    };
    Ok((best, record))
}

//! Search state shared by every solver variant: the candidate solution, cached
//! `dscore` values, configuration-checking flags, vertex ages, edge weights and
//! the uncovered-edge set.
//!
//! `dscore(v)` is the drop in total uncovered-edge weight obtained by flipping
//! `v` in or out of the candidate solution, so it is `>= 0` outside the
//! candidate and `<= 0` inside. All caches are kept exact under every
//! operation; [`SolverState::check_invariants`] recomputes them from scratch.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{EdgeId, Graph, VertexSet};

const ABSENT: usize = usize::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StateError {
    #[error("candidate solution is empty")]
    EmptyCandidate,
    #[error("vertex {0} is not in the candidate solution")]
    NotInCandidate(usize),
    #[error("vertex {0} is already in the candidate solution")]
    AlreadyInCandidate(usize),
    #[error("edge {0} is not uncovered")]
    EdgeNotUncovered(EdgeId),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

/// Forgetting factor, held as an exact fraction so that
/// `floor(rho * w)` is computed in integers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rho {
    value: f64,
    num: u64,
    den: u64,
}

impl Rho {
    const SCALE: u64 = 1_000_000_000;

    /// `value` is rounded to nine decimal places. Returns `None` unless `0 < value < 1`.
    pub fn new(value: f64) -> Option<Rho> {
        if !(value > 0.0 && value < 1.0) {
            return None;
        }
        let num = (value * Self::SCALE as f64).round() as u64;
        if num == 0 || num >= Self::SCALE {
            return None;
        }
        let g = gcd(num, Self::SCALE);
        Some(Rho {
            value,
            num: num / g,
            den: Self::SCALE / g,
        })
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.value
    }

    /// `floor(rho * w)`.
    #[inline]
    pub fn scale(&self, w: u64) -> u64 {
        ((w as u128 * self.num as u128) / self.den as u128) as u64
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub struct SolverState<'g> {
    pub(crate) graph: &'g Graph,
    pub(crate) in_cover: Vec<bool>,
    /// Members of the candidate solution, unordered; `cover_pos` indexes into it.
    pub(crate) cover: Vec<usize>,
    pub(crate) cover_pos: Vec<usize>,
    pub(crate) dscore: Vec<i64>,
    pub(crate) conf_change: Vec<bool>,
    pub(crate) last_change: Vec<u64>,
    pub(crate) weight: Vec<u64>,
    pub(crate) weight_sum: u64,
    pub(crate) uncovered: Vec<EdgeId>,
    pub(crate) uncovered_pos: Vec<usize>,
    pub(crate) cost: u64,
    pub(crate) step: u64,
    pub(crate) exchanges: u64,
    pub(crate) pair_evaluations: u64,
    pub(crate) best: Option<VertexSet>,
    pub(crate) rng: ChaCha8Rng,
}

impl<'g> SolverState<'g> {
    /// Empty candidate, unit weights, every edge uncovered, all
    /// configuration-checking flags set, all ages stamped 0.
    pub fn new(graph: &'g Graph, seed: u64) -> Self {
        let n = graph.num_vertices();
        let m = graph.num_edges();
        SolverState {
            graph,
            in_cover: vec![false; n],
            cover: Vec::new(),
            cover_pos: vec![ABSENT; n],
            dscore: (0..n).map(|v| graph.degree(v) as i64).collect(),
            conf_change: vec![true; n],
            last_change: vec![0; n],
            weight: vec![1; m],
            weight_sum: m as u64,
            uncovered: (0..m).collect(),
            uncovered_pos: (0..m).collect(),
            cost: m as u64,
            step: 0,
            exchanges: 0,
            pair_evaluations: 0,
            best: None,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    #[inline]
    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    #[inline]
    pub fn in_candidate(&self, v: usize) -> bool {
        self.in_cover[v]
    }

    #[inline]
    pub fn candidate_size(&self) -> usize {
        self.cover.len()
    }

    /// Candidate members in unspecified order.
    #[inline]
    pub fn candidate(&self) -> &[usize] {
        &self.cover
    }

    pub fn candidate_set(&self) -> VertexSet {
        VertexSet::from_mask(self.in_cover.clone())
    }

    #[inline]
    pub fn dscore(&self, v: usize) -> i64 {
        self.dscore[v]
    }

    #[inline]
    pub fn conf_change(&self, v: usize) -> bool {
        self.conf_change[v]
    }

    #[inline]
    pub fn last_change(&self, v: usize) -> u64 {
        self.last_change[v]
    }

    #[inline]
    pub fn weight(&self, e: EdgeId) -> u64 {
        self.weight[e]
    }

    #[inline]
    pub fn weights(&self) -> &[u64] {
        &self.weight
    }

    #[inline]
    pub fn weight_sum(&self) -> u64 {
        self.weight_sum
    }

    /// Total weight of uncovered edges.
    #[inline]
    pub fn cost(&self) -> u64 {
        self.cost
    }

    #[inline]
    pub fn uncovered(&self) -> &[EdgeId] {
        &self.uncovered
    }

    #[inline]
    pub fn is_uncovered(&self, e: EdgeId) -> bool {
        self.uncovered_pos[e] != ABSENT
    }

    /// Loop iterations executed so far (improving and exchanging alike).
    #[inline]
    pub fn steps(&self) -> u64 {
        self.step
    }

    /// Exchange iterations executed so far.
    #[inline]
    pub fn exchanges(&self) -> u64 {
        self.exchanges
    }

    /// Pair benefits evaluated by the pair-exchange variant so far.
    #[inline]
    pub fn pair_evaluations(&self) -> u64 {
        self.pair_evaluations
    }

    /// Best vertex cover recorded so far.
    pub fn best_cover(&self) -> Option<&VertexSet> {
        self.best.as_ref()
    }

    pub fn best_size(&self) -> Option<usize> {
        self.best.as_ref().map(VertexSet::len)
    }

    /// Overrides a vertex's configuration-checking flag. Intended for tests
    /// that need to stage a particular configuration.
    pub fn set_conf_change(&mut self, v: usize, value: bool) {
        self.conf_change[v] = value;
    }

    /// Overrides a vertex's age stamp. Intended for tests.
    pub fn set_last_change(&mut self, v: usize, step: u64) {
        self.last_change[v] = step;
    }

    /// Sets one edge weight and re-derives every dependent cache.
    pub fn set_weight(&mut self, e: EdgeId, w: u64) {
        self.weight[e] = w;
        self.recompute_caches();
    }

    /// `cost(C) - cost(C xor {v})` evaluated from its definition.
    pub fn compute_dscore(&self, v: usize) -> i64 {
        let g = self.graph;
        let open: u64 = g
            .incidences(v)
            .filter(|&(z, _)| !self.in_cover[z])
            .map(|(_, e)| self.weight[e])
            .sum();
        if self.in_cover[v] {
            -(open as i64)
        } else {
            open as i64
        }
    }

    /// Removes `u` from the candidate solution. Edges to neighbors outside the
    /// candidate become uncovered. `u` loses its configuration-checking flag and
    /// every neighbor gains one.
    pub fn remove_from_candidate(&mut self, u: usize) -> Result<(), StateError> {
        if !self.in_cover[u] {
            return Err(StateError::NotInCandidate(u));
        }
        self.in_cover[u] = false;
        let pos = self.cover_pos[u];
        self.cover.swap_remove(pos);
        if pos < self.cover.len() {
            self.cover_pos[self.cover[pos]] = pos;
        }
        self.cover_pos[u] = ABSENT;
        self.last_change[u] = self.step;
        self.dscore[u] = -self.dscore[u];
        self.conf_change[u] = false;

        let g = self.graph;
        for (z, e) in g.incidences(u) {
            let w = self.weight[e] as i64;
            if self.in_cover[z] {
                self.dscore[z] -= w;
            } else {
                self.dscore[z] += w;
                self.push_uncovered(e);
                self.cost += self.weight[e];
            }
            self.conf_change[z] = true;
        }
        Ok(())
    }

    /// Adds `v` to the candidate solution. Edges to neighbors outside the
    /// candidate become covered and every neighbor gains its
    /// configuration-checking flag. `v`'s own flag is left unchanged.
    pub fn add_to_candidate(&mut self, v: usize) -> Result<(), StateError> {
        if self.in_cover[v] {
            return Err(StateError::AlreadyInCandidate(v));
        }
        self.in_cover[v] = true;
        self.cover_pos[v] = self.cover.len();
        self.cover.push(v);
        self.last_change[v] = self.step;
        self.dscore[v] = -self.dscore[v];

        let g = self.graph;
        for (z, e) in g.incidences(v) {
            let w = self.weight[e] as i64;
            if self.in_cover[z] {
                self.dscore[z] += w;
            } else {
                self.dscore[z] -= w;
                self.pop_uncovered(e);
                self.cost -= self.weight[e];
            }
            self.conf_change[z] = true;
        }
        Ok(())
    }

    #[inline]
    fn push_uncovered(&mut self, e: EdgeId) {
        debug_assert_eq!(self.uncovered_pos[e], ABSENT);
        self.uncovered_pos[e] = self.uncovered.len();
        self.uncovered.push(e);
    }

    #[inline]
    fn pop_uncovered(&mut self, e: EdgeId) {
        let pos = self.uncovered_pos[e];
        debug_assert_ne!(pos, ABSENT);
        self.uncovered.swap_remove(pos);
        if pos < self.uncovered.len() {
            self.uncovered_pos[self.uncovered[pos]] = pos;
        }
        self.uncovered_pos[e] = ABSENT;
    }

    /// Uniformly random uncovered edge, or `None` when the candidate is a cover.
    pub fn random_uncovered_edge(&mut self) -> Option<EdgeId> {
        if self.uncovered.is_empty() {
            None
        } else {
            let i = self.rng.gen_range(0..self.uncovered.len());
            Some(self.uncovered[i])
        }
    }

    /// Greedy construction: repeatedly add a vertex of maximum `dscore`, ties
    /// broken uniformly at random, until no edge is uncovered. The result is
    /// recorded as the best cover.
    pub fn greedy_construct(&mut self) {
        let n = self.graph.num_vertices();
        let mut ties = Vec::new();
        while !self.uncovered.is_empty() {
            let mut best = i64::MIN;
            ties.clear();
            for v in 0..n {
                if self.in_cover[v] {
                    continue;
                }
                let d = self.dscore[v];
                if d > best {
                    best = d;
                    ties.clear();
                    ties.push(v);
                } else if d == best {
                    ties.push(v);
                }
            }
            let v = ties[self.rng.gen_range(0..ties.len())];
            self.add_to_candidate(v)
                .expect("greedy construction only adds vertices outside the candidate");
        }
        self.best = Some(self.candidate_set());
    }

    /// Vertex of the candidate with the highest `dscore`; ties go to the
    /// oldest vertex, then to the lowest id. Scans only the candidate.
    pub fn select_remove_vertex(&self) -> Result<usize, StateError> {
        let mut iter = self.cover.iter().copied();
        let mut best = iter.next().ok_or(StateError::EmptyCandidate)?;
        for v in iter {
            let (dv, db) = (self.dscore[v], self.dscore[best]);
            if dv > db
                || (dv == db
                    && (self.last_change[v], v) < (self.last_change[best], best))
            {
                best = v;
            }
        }
        Ok(best)
    }

    /// Endpoint of uncovered edge `e` to add: the only endpoint allowed by
    /// configuration checking, or, when both are allowed, the one with higher
    /// `dscore`, then the older, then the lower id.
    pub fn select_add_vertex(&self, e: EdgeId) -> Result<usize, StateError> {
        let (a, b) = self.graph.edge(e);
        if self.in_cover[a] || self.in_cover[b] {
            return Err(StateError::EdgeNotUncovered(e));
        }
        match (self.conf_change[a], self.conf_change[b]) {
            (true, false) => Ok(a),
            (false, true) => Ok(b),
            (true, true) => {
                let key = |v: usize| (std::cmp::Reverse(self.dscore[v]), self.last_change[v], v);
                Ok(if key(a) <= key(b) { a } else { b })
            }
            (false, false) => Err(StateError::Invariant(format!(
                "uncovered edge {e} = ({a}, {b}) has no endpoint with confChange = 1"
            ))),
        }
    }

    /// Increments the weight of every uncovered edge by one.
    pub fn bump_uncovered_weights(&mut self) {
        let g = self.graph;
        for &e in &self.uncovered {
            let (a, b) = g.edge(e);
            self.weight[e] += 1;
            self.dscore[a] += 1;
            self.dscore[b] += 1;
        }
        let k = self.uncovered.len() as u64;
        self.weight_sum += k;
        self.cost += k;
    }

    /// `w(e) := floor(rho * w(e))` for every edge, then full cache rebuild.
    pub fn forget_weights(&mut self, rho: Rho) {
        for w in &mut self.weight {
            *w = rho.scale(*w);
        }
        self.recompute_caches();
    }

    /// True iff the mean edge weight has reached `gamma`, i.e. `weight_sum >= gamma * m`.
    #[inline]
    pub fn should_forget(&self, gamma: u64) -> bool {
        let m = self.graph.num_edges() as u128;
        m > 0 && self.weight_sum as u128 >= gamma as u128 * m
    }

    /// Rebuilds `weight_sum`, `cost` and every `dscore` from the weights and membership.
    pub(crate) fn recompute_caches(&mut self) {
        let g = self.graph;
        self.weight_sum = self.weight.iter().sum();
        self.cost = 0;
        self.dscore.iter_mut().for_each(|d| *d = 0);
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            let w = self.weight[e] as i64;
            match (self.in_cover[a], self.in_cover[b]) {
                (false, false) => {
                    self.cost += self.weight[e];
                    self.dscore[a] += w;
                    self.dscore[b] += w;
                }
                (true, false) => self.dscore[a] -= w,
                (false, true) => self.dscore[b] -= w,
                (true, true) => {}
            }
        }
    }

    /// Stores the candidate as the best cover if it covers every edge and is
    /// strictly smaller than the current best. Returns whether it was stored.
    pub(crate) fn record_if_better(&mut self) -> bool {
        if !self.uncovered.is_empty() {
            return false;
        }
        if self.best_size().is_some_and(|b| b <= self.cover.len()) {
            return false;
        }
        self.best = Some(self.candidate_set());
        true
    }

    /// Recomputes every cached quantity from scratch and checks the sign,
    /// coverage and configuration-checking invariants.
    pub fn check_invariants(&self) -> Result<(), StateError> {
        let g = self.graph;
        let fail = |msg: String| Err(StateError::Invariant(msg));

        if self.cover.len() != self.in_cover.iter().filter(|&&b| b).count() {
            return fail("candidate list and membership flags disagree".into());
        }
        for (i, &v) in self.cover.iter().enumerate() {
            if !self.in_cover[v] || self.cover_pos[v] != i {
                return fail(format!("candidate index broken at vertex {v}"));
            }
        }
        let weight_sum: u64 = self.weight.iter().sum();
        if weight_sum != self.weight_sum {
            return fail(format!(
                "weight_sum cached {} but edges sum to {}",
                self.weight_sum, weight_sum
            ));
        }
        let mut cost = 0u64;
        for (e, &(a, b)) in g.edges().iter().enumerate() {
            let open = !self.in_cover[a] && !self.in_cover[b];
            if open != self.is_uncovered(e) {
                return fail(format!("edge {e} uncovered-set membership is stale"));
            }
            if open {
                cost += self.weight[e];
                if !self.conf_change[a] && !self.conf_change[b] {
                    return fail(format!(
                        "uncovered edge {e} has no endpoint with confChange = 1"
                    ));
                }
            }
        }
        for (i, &e) in self.uncovered.iter().enumerate() {
            if self.uncovered_pos[e] != i {
                return fail(format!("uncovered index broken at edge {e}"));
            }
        }
        if cost != self.cost {
            return fail(format!("cost cached {} but recomputed {}", self.cost, cost));
        }
        for v in 0..g.num_vertices() {
            let d = self.compute_dscore(v);
            if d != self.dscore[v] {
                return fail(format!(
                    "dscore({v}) cached {} but recomputed {d}",
                    self.dscore[v]
                ));
            }
            if (self.in_cover[v] && d > 0) || (!self.in_cover[v] && d < 0) {
                return fail(format!("dscore({v}) = {d} has the wrong sign"));
            }
        }
        if let Some(best) = &self.best {
            if !g.is_vertex_cover(best) {
                return fail("best cover does not cover every edge".into());
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge() -> Graph {
        Graph::from_edges(2, &[(0, 1)]).unwrap()
    }

    fn triangle() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|l| (0, l)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }

    fn with_cover<'g>(g: &'g Graph, members: &[usize]) -> SolverState<'g> {
        let mut s = SolverState::new(g, 7);
        for &v in members {
            s.add_to_candidate(v).unwrap();
        }
        s
    }

    #[test]
    fn dscore_of_single_edge() {
        let g = edge();
        let s = SolverState::new(&g, 0);
        assert_eq!(s.compute_dscore(0), 1);
        assert_eq!(s.dscore(0), 1);

        let s = with_cover(&g, &[0]);
        assert_eq!(s.compute_dscore(0), -1);
        assert_eq!(s.compute_dscore(1), 0);
        s.check_invariants().unwrap();
    }

    #[test]
    fn dscore_of_weighted_star() {
        let g = star(3);
        let mut s = SolverState::new(&g, 0);
        for (e, w) in [2, 3, 5].into_iter().enumerate() {
            s.set_weight(e, w);
        }
        // reference: sum of weights of uncovered incident edges
        let reference: u64 = g.incident_edges(0).iter().map(|&e| s.weight(e)).sum();
        assert_eq!(reference, 10);
        assert_eq!(s.compute_dscore(0), 10);
        assert_eq!(s.dscore(0), 10);
    }

    #[test]
    fn greedy_on_single_edge_and_star() {
        let g = edge();
        let mut s = SolverState::new(&g, 3);
        s.greedy_construct();
        assert_eq!(s.best_size(), Some(1));

        let g = star(4);
        let mut s = SolverState::new(&g, 3);
        s.greedy_construct();
        assert_eq!(s.candidate(), &[0]);
        assert_eq!(s.best_size(), Some(1));
        s.check_invariants().unwrap();
    }

    #[test]
    fn greedy_on_edgeless_graph() {
        let g = Graph::empty(5);
        let mut s = SolverState::new(&g, 3);
        s.greedy_construct();
        assert_eq!(s.candidate_size(), 0);
        assert_eq!(s.best_size(), Some(0));
    }

    #[test]
    fn select_remove_prefers_dscore_then_age_then_id() {
        let g = Graph::empty(3);
        let mut s = with_cover(&g, &[0, 1]);
        s.dscore[0] = -3;
        s.dscore[1] = -1;
        assert_eq!(s.select_remove_vertex().unwrap(), 1);

        s.dscore[0] = -2;
        s.dscore[1] = -2;
        s.last_change[0] = 5;
        s.last_change[1] = 2;
        assert_eq!(s.select_remove_vertex().unwrap(), 1);

        s.last_change[0] = 2;
        assert_eq!(s.select_remove_vertex().unwrap(), 0);
    }

    #[test]
    fn select_remove_on_empty_candidate() {
        let g = Graph::empty(2);
        let s = SolverState::new(&g, 0);
        assert_eq!(s.select_remove_vertex(), Err(StateError::EmptyCandidate));
    }

    #[test]
    fn select_add_rules() {
        let g = edge();
        let mut s = SolverState::new(&g, 0);
        s.conf_change[0] = false;
        assert_eq!(s.select_add_vertex(0).unwrap(), 1);

        s.conf_change[0] = true;
        s.dscore[0] = 7;
        s.dscore[1] = 4;
        assert_eq!(s.select_add_vertex(0).unwrap(), 0);

        s.dscore[1] = 7;
        s.last_change[0] = 9;
        s.last_change[1] = 1;
        assert_eq!(s.select_add_vertex(0).unwrap(), 1);

        s.last_change[1] = 9;
        assert_eq!(s.select_add_vertex(0).unwrap(), 0);

        s.conf_change[0] = false;
        s.conf_change[1] = false;
        assert!(matches!(s.select_add_vertex(0), Err(StateError::Invariant(_))));
    }

    #[test]
    fn remove_on_single_edge() {
        let g = edge();
        let mut s = with_cover(&g, &[0]);
        s.remove_from_candidate(0).unwrap();
        assert_eq!(s.uncovered(), &[0]);
        assert_eq!(s.cost(), 1);
        assert_eq!(s.dscore(0), 1);
        assert_eq!(s.dscore(1), 1);
        assert!(!s.conf_change(0));
        assert!(s.conf_change(1));
        s.check_invariants().unwrap();
        assert_eq!(s.remove_from_candidate(0), Err(StateError::NotInCandidate(0)));
    }

    #[test]
    fn remove_on_triangle_matches_recompute() {
        let g = triangle();
        let mut s = with_cover(&g, &[0, 1]);
        s.remove_from_candidate(0).unwrap();
        assert_eq!(s.cost(), 1);
        assert!(s.is_uncovered(g.edge_between(0, 2).unwrap()));
        assert_eq!(s.dscore(1), -2);
        for v in 0..3 {
            assert_eq!(s.dscore(v), s.compute_dscore(v));
        }
    }

    #[test]
    fn remove_then_add_restores_coverage() {
        let g = triangle();
        let mut s = with_cover(&g, &[0, 1]);
        let before = (s.cost(), s.dscore.clone(), s.candidate_set());
        s.remove_from_candidate(1).unwrap();
        s.add_to_candidate(1).unwrap();
        let mut unc = s.uncovered().to_vec();
        unc.sort_unstable();
        assert!(unc.is_empty());
        assert_eq!((s.cost(), s.dscore.clone(), s.candidate_set()), before);
    }

    #[test]
    fn add_on_single_edge() {
        let g = edge();
        let mut s = SolverState::new(&g, 0);
        s.add_to_candidate(1).unwrap();
        assert_eq!(s.cost(), 0);
        assert!(s.uncovered().is_empty());
        assert_eq!(s.dscore(1), -1);
        assert_eq!(s.dscore(0), 0);
        assert_eq!(s.add_to_candidate(1), Err(StateError::AlreadyInCandidate(1)));
    }

    #[test]
    fn add_on_path_makes_endpoint_redundant() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let mut s = with_cover(&g, &[0]);
        s.add_to_candidate(1).unwrap();
        assert_eq!(s.dscore(0), 0);
        assert_eq!(s.compute_dscore(0), 0);
        s.check_invariants().unwrap();
    }

    #[test]
    fn add_after_neighbor_removal_restores_flag() {
        let g = edge();
        let mut s = with_cover(&g, &[0]);
        s.remove_from_candidate(0).unwrap();
        assert!(!s.conf_change(0));
        s.add_to_candidate(1).unwrap();
        assert!(s.conf_change(0));
    }

    #[test]
    fn bump_weights() {
        let g = edge();
        let mut s = with_cover(&g, &[0]);
        s.bump_uncovered_weights();
        assert_eq!(s.weight(0), 1);
        assert_eq!(s.cost(), 0);

        s.remove_from_candidate(0).unwrap();
        s.bump_uncovered_weights();
        assert_eq!(s.weight(0), 2);
        assert_eq!(s.cost(), 2);
        assert_eq!(s.dscore(0), 2);
        assert_eq!(s.dscore(1), 2);
        s.check_invariants().unwrap();
    }

    #[test]
    fn forgetting_arithmetic() {
        let rho = Rho::new(0.3).unwrap();
        assert_eq!(rho.scale(1000), 300);
        assert_eq!(rho.scale(100), 30);
        assert_eq!(rho.scale(1), 0);
        assert_eq!(rho.scale(10), 3);
        assert!(Rho::new(0.0).is_none());
        assert!(Rho::new(1.0).is_none());
        assert!(Rho::new(f64::NAN).is_none());
    }

    #[test]
    fn forget_rebuilds_caches() {
        let g = triangle();
        let mut s = with_cover(&g, &[0]);
        s.set_weight(0, 1000);
        s.set_weight(1, 100);
        s.set_weight(2, 1);
        s.forget_weights(Rho::new(0.3).unwrap());
        assert_eq!(s.weights(), &[300, 30, 0]);
        assert_eq!(s.weight_sum(), 330);
        s.check_invariants().unwrap();
    }

    #[test]
    fn forget_trigger_is_integer_threshold() {
        let g = triangle();
        let mut s = SolverState::new(&g, 0);
        // m = 3, gamma = 2: trigger iff weight_sum >= 6
        s.set_weight(0, 3);
        assert_eq!(s.weight_sum(), 5);
        assert!(!s.should_forget(2));
        s.set_weight(0, 4);
        assert!(s.should_forget(2));
    }
}

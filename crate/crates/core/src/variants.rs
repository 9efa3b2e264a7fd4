//! Ablation variants: simultaneous pair exchange and decrement-by-one forgetting.

use crate::state::{SolverState, StateError};

impl<'g> SolverState<'g> {
    /// Drop in cost from swapping `u` (in the candidate) for `v` (outside it):
    /// `dscore(u) + dscore(v)`, plus `w({u, v})` when the two are adjacent.
    pub fn pair_benefit(&self, u: usize, v: usize) -> Result<i64, StateError> {
        if !self.in_cover[u] {
            return Err(StateError::NotInCandidate(u));
        }
        if self.in_cover[v] {
            return Err(StateError::AlreadyInCandidate(v));
        }
        let shared = self
            .graph
            .edge_between(u, v)
            .map_or(0, |e| self.weight[e] as i64);
        Ok(self.dscore[u] + self.dscore[v] + shared)
    }

    /// Picks a random uncovered edge and returns the best pair `(u, v)` with
    /// `u` in the candidate and `v` an endpoint of that edge allowed by
    /// configuration checking. Ties go to the older `u`, then the older `v`,
    /// then lower ids. `u` is `None` only when the candidate is empty.
    pub fn select_pair(&mut self) -> Result<(Option<usize>, usize), StateError> {
        let e = self
            .random_uncovered_edge()
            .ok_or_else(|| StateError::Invariant("pair exchange on a cover".into()))?;
        let (a, b) = self.graph.edge(e);
        let eligible: Vec<usize> = [a, b]
            .into_iter()
            .filter(|&v| self.conf_change[v])
            .collect();
        if eligible.is_empty() {
            return Err(StateError::Invariant(format!(
                "uncovered edge {e} = ({a}, {b}) has no endpoint with confChange = 1"
            )));
        }
        if self.cover.is_empty() {
            return Ok((None, self.select_add_vertex(e)?));
        }

        let mut best: Option<(i64, (u64, u64, usize, usize))> = None;
        for i in 0..self.cover.len() {
            let u = self.cover[i];
            for &v in &eligible {
                let benefit = self.pair_benefit(u, v)?;
                self.pair_evaluations += 1;
                let age = (self.last_change[u], self.last_change[v], u, v);
                let better = match best {
                    None => true,
                    Some((b, ref a)) => benefit > b || (benefit == b && age < *a),
                };
                if better {
                    best = Some((benefit, age));
                }
            }
        }
        let (_, (_, _, u, v)) = best.expect("candidate and eligible set are non-empty");
        Ok((Some(u), v))
    }

    pub(crate) fn exchange_pair(&mut self) -> Result<(), StateError> {
        let (u, v) = self.select_pair()?;
        if let Some(u) = u {
            self.remove_from_candidate(u)?;
        }
        self.add_to_candidate(v)
    }

    /// Decrements every edge weight above one, then rebuilds all caches.
    pub fn forget_pd(&mut self) {
        for w in &mut self.weight {
            if *w > 1 {
                *w -= 1;
            }
        }
        self.recompute_caches();
    }
}

#[cfg(test)]
mod tests {
    use crate::graph::Graph;
    use crate::state::SolverState;

    #[test]
    fn benefit_on_single_edge_is_neutral() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let mut s = SolverState::new(&g, 0);
        s.add_to_candidate(0).unwrap();
        assert_eq!(s.pair_benefit(0, 1).unwrap(), 0);
        assert!(s.pair_benefit(1, 0).is_err());
    }

    #[test]
    fn benefit_of_non_adjacent_pair_is_plain_sum() {
        // 0 in C with dscore -2 (two private edges), 3 outside with dscore 3
        let g = Graph::from_edges(7, &[(0, 1), (0, 2), (3, 4), (3, 5), (3, 6)]).unwrap();
        let mut s = SolverState::new(&g, 0);
        s.add_to_candidate(0).unwrap();
        assert_eq!(s.dscore(0), -2);
        assert_eq!(s.dscore(3), 3);
        assert_eq!(s.pair_benefit(0, 3).unwrap(), 1);
    }

    #[test]
    fn pd_forgetting() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let mut s = SolverState::new(&g, 0);
        s.add_to_candidate(1).unwrap();
        s.forget_pd();
        assert_eq!(s.weights(), &[1, 1, 1]);

        s.set_weight(1, 2);
        s.set_weight(2, 5);
        s.forget_pd();
        assert_eq!(s.weights(), &[1, 1, 4]);
        s.check_invariants().unwrap();
    }

    #[test]
    fn pair_enumerates_two_per_candidate_vertex() {
        // both endpoints of the only uncovered edge are eligible
        let g = Graph::from_edges(6, &[(0, 1), (2, 3), (2, 4), (2, 5)]).unwrap();
        let mut s = SolverState::new(&g, 0);
        s.add_to_candidate(2).unwrap();
        assert_eq!(s.uncovered(), &[0]);
        let (u, v) = s.select_pair().unwrap();
        assert_eq!(s.pair_evaluations(), 2);
        assert_eq!(u, Some(2));
        // benefit(2, 0) = -3 + 1 = benefit(2, 1): older v ties, then lower id
        assert_eq!(v, 0);
    }
}

//! Exact minimum vertex cover for small graphs, used as ground truth.
//!
//! Branch and bound over 64-bit vertex masks: pick a vertex `v` of maximum
//! remaining degree and either take `v` or take all of its remaining
//! neighbors. A greedy maximal matching gives the lower bound.

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

pub const DEFAULT_LIMIT: usize = 32;

/// Masks are 64 bits wide, so no limit can exceed this.
pub const MAX_LIMIT: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance has {n} vertices, exact search is limited to {limit}")]
    TooLarge { n: usize, limit: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactResult {
    pub optimum: usize,
    pub witness: VertexSet,
}

pub fn exact_mvc(g: &Graph, limit: usize) -> Result<ExactResult, OracleError> {
    let n = g.num_vertices();
    if n > limit || n > MAX_LIMIT {
        return Err(OracleError::TooLarge {
            n,
            limit: limit.min(MAX_LIMIT),
        });
    }
    let adj: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, &z| m | 1 << z))
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };

    let mut search = Search {
        adj: &adj,
        best_size: n as u32 + 1,
        best_mask: all,
    };
    search.branch(all, 0);

    let witness = VertexSet::from_vertices(n, bits(search.best_mask));
    debug_assert!(g.is_vertex_cover(&witness));
    Ok(ExactResult {
        optimum: witness.len(),
        witness,
    })
}

struct Search<'a> {
    adj: &'a [u64],
    best_size: u32,
    best_mask: u64,
}

impl Search<'_> {
    fn branch(&mut self, alive: u64, taken: u64) {
        let size = taken.count_ones();
        let mut pick = None;
        let mut max_deg = 0;
        for v in bits(alive) {
            let d = (self.adj[v] & alive).count_ones();
            if d > max_deg {
                max_deg = d;
                pick = Some(v);
            }
        }
        let Some(v) = pick else {
            if size < self.best_size {
                self.best_size = size;
                self.best_mask = taken;
            }
            return;
        };
        if size + matching_bound(self.adj, alive) >= self.best_size {
            return;
        }

        let nbrs = self.adj[v] & alive;
        self.branch(alive & !(1 << v), taken | 1 << v);
        self.branch(alive & !nbrs & !(1 << v), taken | nbrs);
    }
}

/// Size of a greedy maximal matching among `alive` vertices.
fn matching_bound(adj: &[u64], alive: u64) -> u32 {
    let mut free = alive;
    let mut size = 0;
    while free != 0 {
        let u = free.trailing_zeros() as usize;
        free &= !(1 << u);
        let partners = adj[u] & free;
        if partners != 0 {
            free &= !(1 << partners.trailing_zeros());
            size += 1;
        }
    }
    size
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            v
        })
    })
}

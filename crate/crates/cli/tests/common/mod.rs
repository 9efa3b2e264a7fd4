//! Instance fixtures shared by the integration tests.
//!
//! Benchmark files are looked up in `$NUMVC_INSTANCE_DIR`, falling back to
//! `<workspace>/instances`. A few instances can be rebuilt from their
//! definitions and are generated here when no file is present.

#![allow(dead_code)]

use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};

use numvc::graph::{parse_dimacs, Graph};
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn instance_dir() -> PathBuf {
    std::env::var_os("NUMVC_INSTANCE_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| {
            let cli = Path::new(env!("CARGO_MANIFEST_DIR"));
            cli.ancestors().nth(2).unwrap_or(cli).join("instances")
        })
}

/// Loads `name` (with or without a `.clq`/`.mis`/`.col` extension) from the
/// instance directory.
pub fn load_file(name: &str) -> Option<Graph> {
    let dir = instance_dir();
    ["", ".clq", ".mis", ".col"].iter().find_map(|ext| {
        let path = dir.join(format!("{name}{ext}"));
        let file = File::open(&path).ok()?;
        Some(parse_dimacs(BufReader::new(file)).unwrap_or_else(|e| {
            panic!("{}: {e}", path.display());
        }))
    })
}

pub fn er_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Smallest vertex cover by trying every subset; `n <= 20`.
pub fn exhaustive_mvc(g: &Graph) -> usize {
    let n = g.num_vertices();
    assert!(n <= 20);
    let masks: Vec<(u32, u32)> = g.edges().iter().map(|&(u, v)| (1 << u, 1 << v)).collect();
    (0u32..1 << n)
        .filter(|s| masks.iter().all(|&(a, b)| s & (a | b) != 0))
        .map(u32::count_ones)
        .min()
        .unwrap() as usize
}

/// Clique-formulation Hamming graph: words of `bits` bits, adjacent when they
/// differ in at least `distance` positions.
pub fn hamming_clq(bits: u32, distance: u32) -> Graph {
    let n = 1usize << bits;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if (u ^ v).count_ones() >= distance {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Lines of the affine space AG(dim, 3) as sorted point triples.
fn affine_lines(dim: u32) -> Vec<[usize; 3]> {
    let size = 3usize.pow(dim);
    let digit = |p: usize, i: u32| p / 3usize.pow(i) % 3;
    let add = |a: usize, b: usize| {
        (0..dim)
            .map(|i| (digit(a, i) + digit(b, i)) % 3 * 3usize.pow(i))
            .sum::<usize>()
    };
    let mut lines = Vec::new();
    for d in 1..size {
        // one representative per direction class {d, 2d}
        if add(d, d) < d {
            continue;
        }
        for p in 0..size {
            let q = add(p, d);
            let mut line = [p, q, add(q, d)];
            line.sort_unstable();
            if line[0] == p {
                lines.push(line);
            }
        }
    }
    lines
}

/// Clique formulation of the Steiner triple covering problem on AG(dim, 3);
/// dimensions 2 and 3 give the structure of MANN_a9 and MANN_a27.
///
/// Its complement has a star per point (centre plus one leaf per incident
/// triple) and a triangle per triple on the leaves. Maximum independent sets
/// there have size `lines + points - tau`, where `tau` is the smallest number
/// of points meeting every line: 5 for AG(2,3) and 18 for AG(3,3) (27 minus a
/// cap of 9), so the minimum covers of the complements are 29 and 252.
pub fn mann_clq(dim: u32) -> Graph {
    let points = 3usize.pow(dim);
    let mut edges = Vec::new();
    let mut next = points;
    for line in affine_lines(dim) {
        let leaves = [next, next + 1, next + 2];
        next += 3;
        for (i, &p) in line.iter().enumerate() {
            edges.push((p, leaves[i]));
        }
        edges.extend([(leaves[0], leaves[1]), (leaves[0], leaves[2]), (leaves[1], leaves[2])]);
    }
    Graph::from_edges(next, &edges).unwrap().complement().unwrap()
}

pub fn mann_a27_clq() -> Graph {
    mann_clq(3)
}

/// Model RB instance in the `.mis` formulation used by the frb benchmarks:
/// `groups` cliques of `round(groups^0.8)` vertices, constraint edges between
/// them generated at the satisfiability threshold, and a planted independent
/// set with one vertex per group. Returns the graph and its minimum cover
/// size, which is `groups * (group size - 1)` by construction.
pub fn frb(groups: usize, seed: u64) -> (Graph, usize) {
    let alpha: f64 = 0.8;
    let p: f64 = 0.25;
    let nf = groups as f64;
    let d = nf.powf(alpha).round() as usize;
    let r = alpha / (1.0 / (1.0 - p)).ln();
    let constraints = (r * nf * nf.ln()).round() as usize;
    let tuples = (p * (d * d) as f64).round() as usize;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let hidden: Vec<usize> = (0..groups).map(|_| rng.gen_range(0..d)).collect();
    let mut edges = Vec::new();
    for g in 0..groups {
        for a in 0..d {
            for b in a + 1..d {
                edges.push((g * d + a, g * d + b));
            }
        }
    }
    for _ in 0..constraints {
        let gi = rng.gen_range(0..groups);
        let gj = loop {
            let x = rng.gen_range(0..groups);
            if x != gi {
                break x;
            }
        };
        let planted = hidden[gi] * d + hidden[gj];
        for k in index::sample(&mut rng, d * d - 1, tuples) {
            let t = if k >= planted { k + 1 } else { k };
            edges.push((gi * d + t / d, gj * d + t % d));
        }
    }
    let g = Graph::from_edges(groups * d, &edges).unwrap();
    (g, groups * (d - 1))
}

/// The `frb{groups}-{d}-{index}` benchmark file when present, else a
/// generated instance of the same model.
pub fn frb_instance(groups: usize, index: u64) -> (Graph, usize, &'static str) {
    let d = (groups as f64).powf(0.8).round() as usize;
    let target = groups * (d - 1);
    match load_file(&format!("frb{groups}-{d}-{index}")) {
        Some(g) => (g, target, "file"),
        None => {
            let (g, t) = frb(groups, groups as u64 * 1000 + index);
            (g, t, "generated")
        }
    }
}

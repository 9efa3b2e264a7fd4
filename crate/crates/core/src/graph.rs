//! Undirected simple graphs, DIMACS ASCII I/O and the cover / independent set /
//! clique relations between a graph and its complement.
//!
//! Vertices are `0..n` internally. Every reader and writer in this module
//! speaks 1-based ids, as DIMACS files do.

use std::collections::HashMap;
use std::fmt;
use std::io::{self, BufRead, Write};

use thiserror::Error;

/// Index of an edge in [`Graph::edges`]; edges are numbered in first-appearance order.
pub type EdgeId = usize;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: missing problem line before edge data")]
    MissingProblemLine { line: usize },
    #[error("no problem line (\"p edge N M\") found")]
    NoProblemLine,
    #[error("line {line}: duplicate problem line")]
    DuplicateProblemLine { line: usize },
    #[error("line {line}: vertex index {vertex} out of range 1..={n}")]
    VertexOutOfRange { line: usize, vertex: u64, n: usize },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: u64 },
    #[error("line {line}: expected a non-negative integer, found {token:?}")]
    InvalidToken { line: usize, token: String },
    #[error("line {line}: malformed line {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: unsupported problem format {format:?}")]
    UnsupportedFormat { line: usize, format: String },
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl ParseError {
    /// 1-based line number the error refers to, if any.
    pub fn line(&self) -> Option<usize> {
        match self {
            ParseError::MissingProblemLine { line }
            | ParseError::DuplicateProblemLine { line }
            | ParseError::VertexOutOfRange { line, .. }
            | ParseError::SelfLoop { line, .. }
            | ParseError::InvalidToken { line, .. }
            | ParseError::Malformed { line, .. }
            | ParseError::UnsupportedFormat { line, .. } => Some(*line),
            ParseError::NoProblemLine | ParseError::Io(_) => None,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({0}, {1}) references a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("graph with {0} vertices is too large to complement")]
    TooLarge(usize),
}

/// Immutable undirected simple graph.
///
/// Adjacency is stored in compressed rows sorted by neighbor id, and each
/// incidence carries the id of the edge it belongs to so that weight arrays
/// indexed by [`EdgeId`] can be updated while walking a neighborhood.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    neighbors: Vec<usize>,
    incident: Vec<EdgeId>,
}

impl Graph {
    /// Builds a graph on `n` vertices from 0-based edge pairs. Duplicate
    /// edges (in either orientation) are merged, keeping first-appearance order.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut seen: HashMap<(usize, usize), ()> = HashMap::with_capacity(edges.len());
        let mut unique = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if seen.insert(key, ()).is_none() {
                unique.push(key);
            }
        }
        Ok(Self::from_unique_edges(n, unique))
    }

    /// Callers guarantee `edges` holds distinct in-range pairs with `u < v`.
    fn from_unique_edges(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut degree = vec![0usize; n];
        for &(u, v) in &edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut rows = vec![(0usize, 0usize); 2 * edges.len()];
        for (id, &(u, v)) in edges.iter().enumerate() {
            rows[fill[u]] = (v, id);
            fill[u] += 1;
            rows[fill[v]] = (u, id);
            fill[v] += 1;
        }
        for v in 0..n {
            rows[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        let (neighbors, incident) = rows.into_iter().unzip();
        Graph {
            n,
            edges,
            offsets,
            neighbors,
            incident,
        }
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_unique_edges(n, Vec::new())
    }

    #[inline]
    pub fn num_vertices(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edge list as 0-based pairs `(u, v)` with `u < v`, indexed by [`EdgeId`].
    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, e: EdgeId) -> (usize, usize) {
        self.edges[e]
    }

    /// Neighbors of `v`, ascending.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    /// Edge ids incident to `v`, aligned with [`Graph::neighbors`].
    #[inline]
    pub fn incident_edges(&self, v: usize) -> &[EdgeId] {
        &self.incident[self.offsets[v]..self.offsets[v + 1]]
    }

    /// `(neighbor, edge id)` pairs around `v`.
    #[inline]
    pub fn incidences(&self, v: usize) -> impl Iterator<Item = (usize, EdgeId)> + '_ {
        self.neighbors(v)
            .iter()
            .copied()
            .zip(self.incident_edges(v).iter().copied())
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// Id of the edge `{u, v}`, found by binary search in the shorter row.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<EdgeId> {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a)
            .binary_search(&b)
            .ok()
            .map(|i| self.incident_edges(a)[i])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// The complementary graph on the same vertex set. Edges are emitted in
    /// lexicographic order of `(u, v)`.
    pub fn complement(&self) -> Result<Graph, GraphError> {
        let n = self.n;
        let pairs = n
            .checked_mul(n.saturating_sub(1))
            .map(|x| x / 2)
            .ok_or(GraphError::TooLarge(n))?;
        let count = pairs - self.num_edges();
        let mut edges = Vec::new();
        edges
            .try_reserve_exact(count)
            .map_err(|_| GraphError::TooLarge(n))?;
        for u in 0..n {
            let row = self.neighbors(u);
            let mut k = row.partition_point(|&x| x <= u);
            for v in (u + 1)..n {
                if k < row.len() && row[k] == v {
                    k += 1;
                } else {
                    edges.push((u, v));
                }
            }
        }
        Ok(Graph::from_unique_edges(n, edges))
    }

    /// True iff every edge has at least one endpoint in `s`.
    pub fn is_vertex_cover(&self, s: &VertexSet) -> bool {
        debug_assert_eq!(s.universe(), self.n);
        self.edges
            .iter()
            .all(|&(u, v)| s.contains(u) || s.contains(v))
    }

    /// True iff no edge has both endpoints in `s`.
    pub fn is_independent_set(&self, s: &VertexSet) -> bool {
        self.edges
            .iter()
            .all(|&(u, v)| !(s.contains(u) && s.contains(v)))
    }

    /// True iff every pair of distinct members of `s` is adjacent.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let members: Vec<usize> = s.iter().collect();
        members
            .iter()
            .enumerate()
            .all(|(i, &u)| members[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// Writes the graph as DIMACS ASCII (`p edge N M` followed by `e u v` lines, 1-based).
    pub fn write_dimacs<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "p edge {} {}", self.n, self.num_edges())?;
        for &(u, v) in &self.edges {
            writeln!(out, "e {} {}", u + 1, v + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("m", &self.num_edges())
            .finish()
    }
}

impl PartialEq for Graph {
    /// Same vertex count and same edge set; edge order is ignored.
    fn eq(&self, other: &Self) -> bool {
        if self.n != other.n || self.num_edges() != other.num_edges() {
            return false;
        }
        let mut a = self.edges.clone();
        let mut b = other.edges.clone();
        a.sort_unstable();
        b.sort_unstable();
        a == b
    }
}

impl Eq for Graph {}

/// Parses DIMACS ASCII graph data.
///
/// Accepts `p edge N M` and `p col N M`. Duplicate edges are merged, self-loops
/// are rejected. A declared edge count that differs from the parsed one only
/// produces a warning.
pub fn parse_dimacs<R: BufRead>(reader: R) -> Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut declared_m = 0usize;
    let mut raw: Vec<(usize, usize)> = Vec::new();

    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let mut tokens = line.split_whitespace();
        let Some(tag) = tokens.next() else { continue };
        match tag {
            "c" => {}
            "p" => {
                if n.is_some() {
                    return Err(ParseError::DuplicateProblemLine { line: lineno });
                }
                let format = tokens.next().ok_or_else(|| ParseError::Malformed {
                    line: lineno,
                    text: line.clone(),
                })?;
                if format != "edge" && format != "col" {
                    return Err(ParseError::UnsupportedFormat {
                        line: lineno,
                        format: format.to_string(),
                    });
                }
                let nv = parse_count(tokens.next(), lineno, &line)?;
                declared_m = parse_count(tokens.next(), lineno, &line)? as usize;
                if tokens.next().is_some() {
                    return Err(ParseError::Malformed {
                        line: lineno,
                        text: line.clone(),
                    });
                }
                let nv = usize::try_from(nv).map_err(|_| ParseError::InvalidToken {
                    line: lineno,
                    token: nv.to_string(),
                })?;
                raw.reserve(declared_m.min(1 << 24));
                n = Some(nv);
            }
            "e" => {
                let nv = n.ok_or(ParseError::MissingProblemLine { line: lineno })?;
                let u = parse_count(tokens.next(), lineno, &line)?;
                let v = parse_count(tokens.next(), lineno, &line)?;
                if tokens.next().is_some() {
                    return Err(ParseError::Malformed {
                        line: lineno,
                        text: line.clone(),
                    });
                }
                for x in [u, v] {
                    if x == 0 || x > nv as u64 {
                        return Err(ParseError::VertexOutOfRange {
                            line: lineno,
                            vertex: x,
                            n: nv,
                        });
                    }
                }
                if u == v {
                    return Err(ParseError::SelfLoop {
                        line: lineno,
                        vertex: u,
                    });
                }
                raw.push((u as usize - 1, v as usize - 1));
            }
            _ if tag.starts_with('c') => {}
            _ => {
                return Err(ParseError::Malformed {
                    line: lineno,
                    text: line.clone(),
                })
            }
        }
    }

    let n = n.ok_or(ParseError::NoProblemLine)?;
    let g = Graph::from_edges(n, &raw).expect("edges validated during parsing");
    if g.num_edges() != declared_m {
        log::warn!(
            "problem line declares {} edges but {} distinct edges were read",
            declared_m,
            g.num_edges()
        );
    }
    Ok(g)
}

/// Convenience wrapper over [`parse_dimacs`] for in-memory text.
pub fn parse_dimacs_str(text: &str) -> Result<Graph, ParseError> {
    parse_dimacs(text.as_bytes())
}

fn parse_count(token: Option<&str>, line: usize, text: &str) -> Result<u64, ParseError> {
    let token = token.ok_or_else(|| ParseError::Malformed {
        line,
        text: text.to_string(),
    })?;
    token.parse::<u64>().map_err(|_| ParseError::InvalidToken {
        line,
        token: token.to_string(),
    })
}

/// Subset of `0..n` with a cached cardinality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    members: Vec<bool>,
    size: usize,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            members: vec![false; n],
            size: 0,
        }
    }

    pub fn full(n: usize) -> Self {
        VertexSet {
            members: vec![true; n],
            size: n,
        }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Self {
        let mut s = Self::new(n);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    pub(crate) fn from_mask(members: Vec<bool>) -> Self {
        let size = members.iter().filter(|&&b| b).count();
        VertexSet { members, size }
    }

    /// Number of vertices the set ranges over.
    #[inline]
    pub fn universe(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.members[v]
    }

    /// Returns `true` if `v` was not already present.
    pub fn insert(&mut self, v: usize) -> bool {
        let fresh = !self.members[v];
        if fresh {
            self.members[v] = true;
            self.size += 1;
        }
        fresh
    }

    /// Returns `true` if `v` was present.
    pub fn remove(&mut self, v: usize) -> bool {
        let present = self.members[v];
        if present {
            self.members[v] = false;
            self.size -= 1;
        }
        present
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter_map(|(v, &b)| b.then_some(v))
    }

    /// `V \ self`.
    pub fn complement(&self) -> VertexSet {
        VertexSet {
            members: self.members.iter().map(|b| !b).collect(),
            size: self.members.len() - self.size,
        }
    }

    /// Writes the solution format: `s <size>` then one `v <id>` line per member, 1-based.
    pub fn write_solution<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "s {}", self.size)?;
        for v in self.iter() {
            writeln!(out, "v {}", v + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

//! Simple graphs, their edge and cover ideals, and the decomposition of the
//! squared cover ideal along edges and induced odd cycles.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::closure::is_integrally_closed;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, Ring};
use crate::primes::alexander_dual;

/// Largest vertex count accepted by the odd-cycle enumeration.
pub const MAX_CYCLE_SEARCH_VERTICES: usize = 16;

/// A finite simple graph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    /// Edges are unordered; each is stored with the smaller endpoint first.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidGraph("a graph needs at least one vertex".into()));
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {}", u + 1)));
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{}, {}}} has an endpoint outside 1..{}",
                    u + 1,
                    v + 1,
                    vertex_count
                )));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!("duplicate edge {{{}, {}}}", u + 1, v + 1)));
            }
        }
        Ok(SimpleGraph {
            vertex_count,
            edges: set,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// `x1, ..., xn`, one variable per vertex.
    pub fn ring(&self) -> Arc<Ring> {
        Ring::indexed(self.vertex_count).expect("vertex_count ≥ 1")
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidGraph("a cycle needs at least 3 vertices".into()));
        }
        SimpleGraph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn complete(n: usize) -> Result<Self> {
        SimpleGraph::new(n, (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))))
    }

    pub fn path(n: usize) -> Result<Self> {
        SimpleGraph::new(n, (1..n).map(|i| (i - 1, i)))
    }

    /// The Petersen graph: outer 5-cycle, inner pentagram, spokes.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, 5 + i));
        }
        SimpleGraph::new(10, edges).expect("valid graph")
    }

    fn require_edges(&self) -> Result<()> {
        if self.edges.is_empty() {
            Err(Error::EdgelessGraph)
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges.iter().map(|(u, v)| format!("{}-{}", u + 1, v + 1)).collect();
        write!(f, "G(n={}; {})", self.vertex_count, edges.join(" "))
    }
}

/// `I(G) = (x_i x_j : {i, j} ∈ E)`.
pub fn edge_ideal(graph: &SimpleGraph) -> Result<MonomialIdeal> {
    graph.require_edges()?;
    let n = graph.vertex_count;
    MonomialIdeal::minimalize(graph.ring(), graph.edges().map(|(u, v)| Monomial::from_support(n, [u, v])))
}

/// `J(G) = I(G)^∨`, generated by the minimal vertex covers.
pub fn cover_ideal(graph: &SimpleGraph) -> Result<MonomialIdeal> {
    alexander_dual(&edge_ideal(graph)?)
}

/// Vertex subsets of odd size at least 3 inducing a cycle, each sorted,
/// listed by size then lexicographically.
pub fn induced_odd_cycles(graph: &SimpleGraph) -> Result<Vec<Vec<usize>>> {
    let n = graph.vertex_count;
    if n > MAX_CYCLE_SEARCH_VERTICES {
        return Err(Error::TooManyVariables {
            found: n,
            limit: MAX_CYCLE_SEARCH_VERTICES,
        });
    }
    let adjacency: Vec<u32> = (0..n)
        .map(|u| (0..n).filter(|&v| graph.has_edge(u, v)).fold(0u32, |m, v| m | (1 << v)))
        .collect();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for mask in 1u32..(1u32 << n) {
        let size = mask.count_ones();
        if size < 3 || size % 2 == 0 {
            continue;
        }
        let vertices: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
        if vertices.iter().all(|&v| (adjacency[v] & mask).count_ones() == 2) && is_connected(mask, &adjacency) {
            out.push(vertices);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

fn is_connected(mask: u32, adjacency: &[u32]) -> bool {
    let start = mask.trailing_zeros();
    let mut reached = 1u32 << start;
    let mut frontier = reached;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adjacency[v] & mask & !reached;
        reached |= new;
        frontier |= new;
    }
    reached == mask
}

/// The intersection `⋂_{edges} (x_i, x_j)^2 ∩ ⋂_{induced odd cycles}
/// (x_{i_1}^2, ..., x_{i_s}^2)`, which equals the square of the cover ideal.
pub fn fhv_square_decomposition(graph: &SimpleGraph) -> Result<MonomialIdeal> {
    MonomialIdeal::intersect_all(&fhv_components(graph)?)
}

/// The individual components of [`fhv_square_decomposition`]: edge
/// components first, then one per induced odd cycle.
pub fn fhv_components(graph: &SimpleGraph) -> Result<Vec<MonomialIdeal>> {
    graph.require_edges()?;
    let ring = graph.ring();
    let n = graph.vertex_count;
    let mut comps = Vec::new();
    for (u, v) in graph.edges() {
        comps.push(MonomialIdeal::prime(ring.clone(), &[u, v])?.power(2)?);
    }
    for cycle in induced_odd_cycles(graph)? {
        comps.push(MonomialIdeal::minimalize(
            ring.clone(),
            cycle.iter().map(|&v| Monomial::pure_power(n, v, 2)),
        )?);
    }
    Ok(comps)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct P1Check {
    /// The square of the cover ideal is integrally closed.
    pub closed: bool,
    /// `(J^3 : J) = J^2`.
    pub colon_ok: bool,
}

pub fn verify_p1(graph: &SimpleGraph) -> Result<P1Check> {
    let j = cover_ideal(graph)?;
    let powers = j.powers(3)?;
    let closed = is_integrally_closed(&powers[1])?;
    let colon_ok = powers[2].colon_ideal(&j)?.equals(&powers[1])?;
    Ok(P1Check { closed, colon_ok })
}

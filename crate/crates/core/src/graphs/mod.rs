//! Finite simple graphs on vertices `0, .., n-1`.
//!
//! Edge-list text format: first non-comment line `n`, then one `u v` pair per
//! line, 0-indexed. Blank lines and `#` comments are ignored.

mod canon;
mod classes;
mod families;
mod invariants;
mod rooted;

pub use canon::{
    canonical_form, enumerate_graphs, graphs_up_to, CanonicalForm, EnumOptions, CANON_MAX_VERTICES,
};
pub use classes::{colon_edge_ideal, cone_edges, find_cone_edge, in_class_g, in_class_gprime};
pub use families::{parse_family, Family};
pub use invariants::{
    cycle_vertices, has_induced_cycle_mod, induced_matching_number, is_chordal, is_forest,
    is_unicyclic, min_vertex_cover_size,
};
pub use rooted::{enumerate_rooted_trees, rooted_trees_up_to_iso, RootedTree};

use std::fmt;

use crate::error::{invalid, parse_err, Error, Result};
use crate::ideals::SquarefreeIdeal;
use crate::mask::{VertexMask, MAX_VERTICES};
use crate::simplicial::SimplicialComplex;

/// An undirected edge, stored with the smaller endpoint first.
pub type Edge = (usize, usize);

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexMask>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(
            n <= MAX_VERTICES,
            "graph on {n} vertices exceeds {MAX_VERTICES}"
        );
        Graph {
            n,
            adj: vec![VertexMask::EMPTY; n],
        }
    }

    pub fn from_edges<I: IntoIterator<Item = Edge>>(n: usize, edges: I) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::GroundTooLarge(n));
        }
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(invalid(format!("edge {{{u},{v}}} outside {n} vertices")));
            }
            if u == v {
                return Err(invalid(format!("self-loop at {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] = self.adj[u].with(v);
        self.adj[v] = self.adj[v].with(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexMask {
        VertexMask::full(self.n)
    }

    /// Open neighbourhood `N(v)`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexMask {
        self.adj[v]
    }

    /// Closed neighbourhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexMask {
        self.adj[v].with(v)
    }

    /// Union of the closed neighbourhoods of the vertices in `s`.
    pub fn closed_neighbors_of(&self, s: VertexMask) -> VertexMask {
        s.iter().fold(s, |acc, v| acc | self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        (0..self.n)
            .flat_map(|u| {
                (self.adj[u] - VertexMask::full(u + 1))
                    .iter()
                    .map(move |v| (u, v))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn is_trivial(&self) -> bool {
        self.adj.iter().all(|a| a.is_empty())
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexMask> {
        let mut seen = VertexMask::EMPTY;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let comp = self.reach(VertexMask::singleton(s), self.vertices());
            seen = seen | comp;
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `start` inside `within`.
    pub(crate) fn reach(&self, start: VertexMask, within: VertexMask) -> VertexMask {
        let mut comp = start & within;
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexMask::EMPTY;
            for v in frontier.iter() {
                next = next | self.adj[v];
            }
            frontier = (next & within) - comp;
            comp = comp | frontier;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(VertexMask::singleton(0), self.vertices()) == self.vertices()
    }

    /// A connected graph in which every vertex has degree two.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && self.adj.iter().all(|a| a.len() == 2) && self.is_connected()
    }

    pub fn is_vertex_cover(&self, u: VertexMask) -> bool {
        self.edges()
            .into_iter()
            .all(|(a, b)| u.contains(a) || u.contains(b))
    }

    /// `G[w]`, relabeled so the vertices of `w` become `0, .., |w|-1` in
    /// ascending order.
    pub fn induced_subgraph(&self, w: VertexMask) -> Graph {
        let w = w & self.vertices();
        Graph {
            n: w.len(),
            adj: w.iter().map(|v| (self.adj[v] & w).compress(w)).collect(),
        }
    }

    /// `G ∖ A` without relabeling: vertices of `A` become isolated.
    pub fn remove_vertices(&self, a: VertexMask) -> Graph {
        let keep = self.vertices() - a;
        Graph {
            n: self.n,
            adj: (0..self.n)
                .map(|v| {
                    if keep.contains(v) {
                        self.adj[v] & keep
                    } else {
                        VertexMask::EMPTY
                    }
                })
                .collect(),
        }
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n || v >= self.n || !self.has_edge(u, v) {
            return Err(Error::Precondition(format!("{{{u},{v}}} is not an edge")));
        }
        let mut g = self.clone();
        g.adj[u] = g.adj[u].without(v);
        g.adj[v] = g.adj[v].without(u);
        Ok(g)
    }

    /// Vertices of `self` first, then those of `other` shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::GroundTooLarge(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|a| a.shifted(self.n)));
        Ok(Graph { n, adj })
    }

    pub fn edge_ideal(&self) -> SquarefreeIdeal {
        SquarefreeIdeal::new(
            self.n,
            self.edges()
                .into_iter()
                .map(|(u, v)| VertexMask::from_vertices([u, v])),
        )
        .expect("edges are valid quadratic generators")
    }

    /// Faces are the independent sets; the minimal non-faces are the edges.
    pub fn independence_complex(&self) -> SimplicialComplex {
        self.edge_ideal().stanley_reisner_complex()
    }

    /// Interprets a quadratic squarefree ideal as the edge ideal of a graph.
    pub fn from_edge_ideal(ideal: &SquarefreeIdeal) -> Result<Graph> {
        let mut edges = Vec::new();
        for g in ideal.generators() {
            if g.len() != 2 {
                return Err(invalid(format!("generator {g} is not quadratic")));
            }
            let v = g.to_vec();
            edges.push((v[0], v[1]));
        }
        Graph::from_edges(ideal.ground_size(), edges)
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (first, header) = lines
            .next()
            .ok_or_else(|| parse_err(1, "missing vertex count"))?;
        let n: usize = header
            .parse()
            .map_err(|_| parse_err(first, format!("expected vertex count, found `{header}`")))?;
        if n > MAX_VERTICES {
            return Err(parse_err(
                first,
                format!("{n} vertices exceeds the limit of {MAX_VERTICES}"),
            ));
        }
        let mut g = Graph::empty(n);
        for (line, body) in lines {
            let toks: Vec<&str> = body.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(parse_err(line, format!("expected `u v`, found `{body}`")));
            }
            let mut ends = [0usize; 2];
            for (slot, tok) in ends.iter_mut().zip(&toks) {
                *slot = tok.parse().map_err(|_| {
                    parse_err(line, format!("expected vertex index, found `{tok}`"))
                })?;
                if *slot >= n {
                    return Err(parse_err(
                        line,
                        format!("vertex {slot} out of range for {n} vertices"),
                    ));
                }
            }
            if ends[0] == ends[1] {
                return Err(parse_err(line, format!("self-loop at {}", ends[0])));
            }
            g.add_edge(ends[0], ends[1]);
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }

    /// Compact inline form `edges:n:u-v,u-v,...`, accepted by [`parse_family`].
    pub fn to_inline_spec(&self) -> String {
        let e: Vec<String> = self
            .edges()
            .iter()
            .map(|(u, v)| format!("{u}-{v}"))
            .collect();
        format!("edges:{}:{}", self.n, e.join(","))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

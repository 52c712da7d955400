//! Named graph families and the short spec language used on the command line.

use std::fmt;

use super::Graph;
use crate::error::{invalid, Error, Result};
use crate::mask::{VertexMask, MAX_VERTICES};

fn check_size(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::GroundTooLarge(n))
    } else {
        Ok(())
    }
}

impl Graph {
    /// `P_n`: vertices `0..n` in order.
    pub fn path(n: usize) -> Result<Graph> {
        check_size(n)?;
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    /// `C_n`: vertices `0..n` in cyclic order.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(invalid(format!("cycle needs at least 3 vertices, got {n}")));
        }
        check_size(n)?;
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    pub fn complete(n: usize) -> Result<Graph> {
        check_size(n)?;
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// Parts occupy consecutive vertex blocks in the given order.
    pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
        let n: usize = parts.iter().sum();
        check_size(n)?;
        let mut block = Vec::with_capacity(n);
        for (i, &p) in parts.iter().enumerate() {
            block.extend(std::iter::repeat_n(i, p));
        }
        Graph::from_edges(
            n,
            (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| block[u] != block[v]),
        )
    }

    /// `K_{1,k}`: leaves `0..k`, centre `k`.
    pub fn star(k: usize) -> Result<Graph> {
        check_size(k + 1)?;
        Graph::from_edges(k + 1, (0..k).map(|v| (v, k)))
    }

    /// `W_n = x * C_n`: rim `0..n` in cyclic order, hub `n`.
    pub fn wheel(n: usize) -> Result<Graph> {
        let c = Graph::cycle(n)?;
        c.cone_along(c.vertices())
    }

    /// `J_{2,n}`: `C_{2n}` on `0..2n` plus a hub `2n` adjacent to the even
    /// vertices `0, 2, .., 2n-2`.
    pub fn jahangir(n: usize) -> Result<Graph> {
        if n < 2 {
            return Err(invalid(format!("jahangir needs n >= 2, got {n}")));
        }
        let c = Graph::cycle(2 * n)?;
        c.cone_along(VertexMask::from_vertices((0..n).map(|i| 2 * i)))
    }

    /// `F_{m,n}`: `P_n` on `0..n`, then `m` pairwise non-adjacent apexes
    /// `n..n+m`, each adjacent to every path vertex.
    pub fn fan(m: usize, n: usize) -> Result<Graph> {
        let mut g = Graph::path(n)?;
        let path = g.vertices();
        for _ in 0..m {
            g = g.cone_along(path)?;
        }
        Ok(g)
    }

    /// `x *_U G`: a new vertex `n` adjacent to every vertex of `u`.
    pub fn cone_along(&self, u: VertexMask) -> Result<Graph> {
        if !u.is_subset_of(self.vertices()) {
            return Err(invalid(format!(
                "cone set {u} is not a subset of the {} vertices",
                self.n()
            )));
        }
        check_size(self.n() + 1)?;
        let x = self.n();
        let mut g = Graph::empty(x + 1);
        for (a, b) in self.edges() {
            g.add_edge(a, b);
        }
        for v in u.iter() {
            g.add_edge(v, x);
        }
        Ok(g)
    }

    /// `G * H`: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n() {
            for v in 0..other.n() {
                g.add_edge(u, self.n() + v);
            }
        }
        Ok(g)
    }

    /// Glues `other` onto `self` by identifying `other`'s vertex `b` with
    /// `self`'s vertex `a` for each pair `(a, b)`. Both sides must be cliques.
    /// Vertices of `self` keep their labels; the remaining vertices of `other`
    /// follow in ascending order.
    pub fn clique_sum(&self, other: &Graph, pairs: &[(usize, usize)]) -> Result<Graph> {
        let mut left = VertexMask::EMPTY;
        let mut right = VertexMask::EMPTY;
        for &(a, b) in pairs {
            if a >= self.n() || b >= other.n() {
                return Err(invalid(format!("identification ({a}, {b}) out of range")));
            }
            if left.contains(a) || right.contains(b) {
                return Err(invalid(format!(
                    "identification ({a}, {b}) repeats a vertex"
                )));
            }
            left = left.with(a);
            right = right.with(b);
        }
        let is_clique = |g: &Graph, s: VertexMask| {
            s.iter()
                .all(|v| (s.without(v)).is_subset_of(g.neighbors(v)))
        };
        if !is_clique(self, left) || !is_clique(other, right) {
            return Err(Error::Precondition(
                "clique-sum identification must be a clique on both sides".into(),
            ));
        }
        let n = self.n() + other.n() - pairs.len();
        check_size(n)?;
        let mut label = vec![usize::MAX; other.n()];
        for &(a, b) in pairs {
            label[b] = a;
        }
        for (slot, next) in label
            .iter_mut()
            .filter(|l| **l == usize::MAX)
            .zip(self.n()..)
        {
            *slot = next;
        }
        let mut g = Graph::empty(n);
        for (a, b) in self.edges() {
            g.add_edge(a, b);
        }
        for (a, b) in other.edges() {
            g.add_edge(label[a], label[b]);
        }
        Ok(g)
    }
}

/// A parsed family spec such as `cycle:5` or `fan:2,5`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Empty(usize),
    Star(usize),
    Wheel(usize),
    Jahangir(usize),
    Fan(usize, usize),
    Multipartite(Vec<usize>),
    Explicit(Graph),
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match self {
            Family::Path(n) => Graph::path(*n),
            Family::Cycle(n) => Graph::cycle(*n),
            Family::Complete(n) => Graph::complete(*n),
            Family::Empty(n) => {
                check_size(*n)?;
                Ok(Graph::empty(*n))
            }
            Family::Star(k) => Graph::star(*k),
            Family::Wheel(n) => Graph::wheel(*n),
            Family::Jahangir(n) => Graph::jahangir(*n),
            Family::Fan(m, n) => Graph::fan(*m, *n),
            Family::Multipartite(parts) => Graph::complete_multipartite(parts),
            Family::Explicit(g) => Ok(g.clone()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Empty(n) => write!(f, "empty:{n}"),
            Family::Star(k) => write!(f, "star:{k}"),
            Family::Wheel(n) => write!(f, "wheel:{n}"),
            Family::Jahangir(n) => write!(f, "jahangir:{n}"),
            Family::Fan(m, n) => write!(f, "fan:{m},{n}"),
            Family::Multipartite(p) => {
                let p: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                write!(f, "kpartite:{}", p.join(","))
            }
            Family::Explicit(g) => f.write_str(&g.to_inline_spec()),
        }
    }
}

/// Parses `name:args`. Names: `path`, `cycle`, `complete`, `empty`, `star`,
/// `wheel`, `jahangir` (one count each), `fan:m,n`, `kpartite:a,b,..`, and
/// `edges:n:u-v,u-v,..` for an explicit graph.
pub fn parse_family(spec: &str) -> Result<Family> {
    let spec = spec.trim();
    let (name, args) = spec
        .split_once(':')
        .ok_or_else(|| invalid(format!("family spec `{spec}` needs `name:args`")))?;
    let numbers = |s: &str| -> Result<Vec<usize>> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| invalid(format!("bad number `{t}` in `{spec}`")))
            })
            .collect()
    };
    let one = |s: &str| -> Result<usize> {
        match numbers(s)?.as_slice() {
            [n] => Ok(*n),
            _ => Err(invalid(format!("`{name}` takes exactly one argument"))),
        }
    };
    let family = match name {
        "path" => Family::Path(one(args)?),
        "cycle" => Family::Cycle(one(args)?),
        "complete" => Family::Complete(one(args)?),
        "empty" => Family::Empty(one(args)?),
        "star" => Family::Star(one(args)?),
        "wheel" => Family::Wheel(one(args)?),
        "jahangir" => Family::Jahangir(one(args)?),
        "fan" => match numbers(args)?.as_slice() {
            [m, n] => Family::Fan(*m, *n),
            _ => return Err(invalid("`fan` takes two arguments m,n")),
        },
        "kpartite" => Family::Multipartite(numbers(args)?),
        "edges" => {
            let (n, list) = args.split_once(':').unwrap_or((args, ""));
            let n = one(n)?;
            let mut edges = Vec::new();
            for e in list.split(',').map(str::trim).filter(|e| !e.is_empty()) {
                let (u, v) = e
                    .split_once('-')
                    .ok_or_else(|| invalid(format!("bad edge `{e}`")))?;
                let parse = |t: &str| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| invalid(format!("bad edge `{e}`")))
                };
                edges.push((parse(u)?, parse(v)?));
            }
            check_size(n)?;
            Family::Explicit(Graph::from_edges(n, edges)?)
        }
        _ => return Err(invalid(format!("unknown family `{name}`"))),
    };
    family.build()?;
    Ok(family)
}

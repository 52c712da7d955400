//! Canonical labeling and isomorphism-free enumeration for small graphs.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;

use super::{in_class_g, is_chordal, is_unicyclic, Graph};
use crate::error::{invalid, Error, Result};
use crate::mask::VertexMask;

/// Largest vertex count with a canonical form (the code must fit in 64 bits).
pub const CANON_MAX_VERTICES: usize = 11;

/// Largest vertex count for isomorphism-free enumeration.
pub const ENUM_MAX_VERTICES: usize = 9;

/// Largest vertex count for labeled enumeration.
pub const LABELED_MAX_VERTICES: usize = 7;

/// The least upper-triangle adjacency code over the relabelings that list
/// vertices by refined colour class. Equal forms iff isomorphic graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    code: u64,
}

// Bit layout: column j (j = 1..n) holds pairs (0,j), .., (j-1,j); earlier
// columns are more significant so a partial labeling fixes a code prefix.
fn bit_count(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

impl CanonicalForm {
    pub fn n(self) -> usize {
        self.n as usize
    }

    pub fn code(self) -> u64 {
        self.code
    }

    pub fn to_graph(self) -> Graph {
        let n = self.n();
        let mut g = Graph::empty(n);
        let mut pos = bit_count(n);
        for j in 1..n {
            for i in 0..j {
                pos -= 1;
                if self.code >> pos & 1 == 1 {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }
}

/// Stable colour refinement starting from degrees; colours are numbered by
/// sorted signature so the result does not depend on the input labeling.
fn refine(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut colors: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        colors = sigs
            .iter()
            .map(|s| distinct.binary_search(s).unwrap() as u32)
            .collect();
        if distinct.len() == classes {
            return colors;
        }
        classes = distinct.len();
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    cell_of_position: Vec<u32>,
    colors: Vec<u32>,
    order: Vec<usize>,
    best: Option<u64>,
}

impl Search<'_> {
    fn run(&mut self, depth: usize, used: VertexMask, prefix: u64, bits: u32) {
        if depth == self.n {
            if self.best.is_none_or(|b| prefix < b) {
                self.best = Some(prefix);
            }
            return;
        }
        let total = bit_count(self.n);
        for v in 0..self.n {
            if used.contains(v) || self.colors[v] != self.cell_of_position[depth] {
                continue;
            }
            let mut p = prefix;
            for &u in &self.order {
                p = p << 1 | self.g.has_edge(u, v) as u64;
            }
            let nbits = bits + depth as u32;
            if let Some(b) = self.best {
                if p > b >> (total - nbits) {
                    continue;
                }
            }
            self.order.push(v);
            self.run(depth + 1, used.with(v), p, nbits);
            self.order.pop();
        }
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.n();
    if n > CANON_MAX_VERTICES {
        return Err(invalid(format!(
            "canonical form supports at most {CANON_MAX_VERTICES} vertices, got {n}"
        )));
    }
    let colors = refine(g);
    let mut cell_of_position = colors.clone();
    cell_of_position.sort_unstable();
    let mut s = Search {
        g,
        n,
        cell_of_position,
        colors,
        order: Vec::with_capacity(n),
        best: None,
    };
    s.run(0, VertexMask::EMPTY, 0, 0);
    Ok(CanonicalForm {
        n: n as u8,
        code: s.best.unwrap_or(0),
    })
}

/// Filters applied during enumeration.
#[derive(Clone, Copy, Debug, Default)]
pub struct EnumOptions {
    /// One representative per isomorphism class (in canonical labeling,
    /// ordered by canonical code) instead of every labeled graph.
    pub up_to_iso: bool,
    pub connected: bool,
    pub chordal: bool,
    pub unicyclic: bool,
    pub in_class_g: bool,
}

impl EnumOptions {
    pub fn iso() -> Self {
        EnumOptions {
            up_to_iso: true,
            ..Default::default()
        }
    }

    pub fn connected_iso() -> Self {
        EnumOptions {
            up_to_iso: true,
            connected: true,
            ..Default::default()
        }
    }

    fn accepts(&self, g: &Graph) -> bool {
        (!self.connected || g.is_connected())
            && (!self.chordal || is_chordal(g))
            && (!self.unicyclic || is_unicyclic(g))
            && (!self.in_class_g || in_class_g(g))
    }
}

pub type GraphStream = Box<dyn Iterator<Item = Graph> + Send>;

/// All graphs on exactly `n` vertices matching `opts`.
pub fn enumerate_graphs(n: usize, opts: EnumOptions) -> Result<GraphStream> {
    if opts.up_to_iso {
        if n > ENUM_MAX_VERTICES {
            return Err(Error::SweepTooLarge {
                n,
                limit: ENUM_MAX_VERTICES,
            });
        }
        let classes = iso_classes(n);
        Ok(Box::new(
            (0..classes.len())
                .map(move |i| classes[i].to_graph())
                .filter(move |g| opts.accepts(g)),
        ))
    } else {
        if n > LABELED_MAX_VERTICES {
            return Err(Error::SweepTooLarge {
                n,
                limit: LABELED_MAX_VERTICES,
            });
        }
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let count = 1u64 << pairs.len();
        Ok(Box::new(
            (0..count)
                .map(move |sel| {
                    let mut g = Graph::empty(n);
                    for (i, &(u, v)) in pairs.iter().enumerate() {
                        if sel >> i & 1 == 1 {
                            g.add_edge(u, v);
                        }
                    }
                    g
                })
                .filter(move |g| opts.accepts(g)),
        ))
    }
}

/// Graphs on `1..=n_max` vertices, smallest first.
pub fn graphs_up_to(n_max: usize, opts: EnumOptions) -> Result<GraphStream> {
    let mut streams = Vec::new();
    for n in 1..=n_max {
        streams.push(enumerate_graphs(n, opts)?);
    }
    Ok(Box::new(streams.into_iter().flatten()))
}

type ClassCache = Mutex<HashMap<usize, std::sync::Arc<Vec<CanonicalForm>>>>;

fn iso_classes(n: usize) -> std::sync::Arc<Vec<CanonicalForm>> {
    static CACHE: OnceLock<ClassCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(c) = cache.lock().unwrap().get(&n) {
        return c.clone();
    }
    let classes = if n == 0 {
        vec![CanonicalForm { n: 0, code: 0 }]
    } else {
        // every graph on n vertices is a graph on n-1 vertices plus one more
        let smaller = iso_classes(n - 1);
        let mut forms: Vec<CanonicalForm> = smaller
            .par_iter()
            .flat_map_iter(|f| {
                let base = f.to_graph();
                (0u32..1 << (n - 1)).map(move |nb| {
                    let mut g = Graph::empty(n);
                    for (a, b) in base.edges() {
                        g.add_edge(a, b);
                    }
                    for u in VertexMask::from_bits(nb).iter() {
                        g.add_edge(u, n - 1);
                    }
                    canonical_form(&g).expect("within canonical bound")
                })
            })
            .collect();
        forms.par_sort_unstable();
        forms.dedup();
        forms
    };
    let classes = std::sync::Arc::new(classes);
    cache.lock().unwrap().insert(n, classes.clone());
    classes
}

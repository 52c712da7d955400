//! Betti tables assembled from smaller pieces instead of a direct sweep.

use num_integer::binomial;

use super::{graph_betti, hochster_betti, BettiTable, GradedTable};
use crate::error::{invalid, Error, Result};
use crate::exactla::FieldSpec;
use crate::graphs::{colon_edge_ideal, Edge, Graph};
use crate::mask::VertexMask;

/// Splits `I(G)` along a cone edge `e = (x, y)` with `N(x) ⊆ N[y]`:
/// `β_{i,a}(G) = β_{i,a}(G∖e) + β_{i-1,a-{x,y}}(I(G∖e) : x_x x_y)`.
pub fn mapping_cone_betti(g: &Graph, (x, y): Edge, field: FieldSpec) -> Result<BettiTable> {
    let colon = colon_edge_ideal(g, (x, y))?;
    let rest = hochster_betti(&g.delete_edge(x, y)?.edge_ideal(), field)?;
    let shifted = hochster_betti(&colon, field)?;
    let e = VertexMask::from_vertices([x, y]);
    let lifted = shifted.iter().map(|((i, a), b)| {
        debug_assert!(a.is_disjoint(e));
        ((i + 1, a | e), b)
    });
    Ok(BettiTable::from_entries(
        g.n(),
        field,
        rest.iter().chain(lifted),
    ))
}

/// Table of `R/(I + J)` from those of `R/I` and `R/J` when the two ideals
/// live in disjoint sets of variables on a shared ground set.
pub fn disjoint_sum_betti(bi: &BettiTable, bj: &BettiTable) -> Result<BettiTable> {
    if bi.ground_size() != bj.ground_size() || bi.field() != bj.field() {
        return Err(invalid("tables must share ground set and field"));
    }
    let mut entries = Vec::with_capacity(bi.len() * bj.len());
    for ((r, a), x) in bi.iter() {
        for ((s, b), y) in bj.iter() {
            if !a.is_disjoint(b) {
                return Err(Error::Precondition(format!(
                    "multidegrees {a} and {b} overlap; supports are not disjoint"
                )));
            }
            entries.push(((r + s, a | b), x * y));
        }
    }
    Ok(BettiTable::from_entries(
        bi.ground_size(),
        bi.field(),
        entries,
    ))
}

/// Graded table of the cone `x *_U H` from the tables of `H` and of the star
/// `K_{1,|U|}`: `β_{i,j}(H) + β_{i-1,j-1}(H) + β_{i,j}(K_{1,|U|})` for
/// `i ≥ 1`, where the middle term only counts `i - 1 ≥ 1`.
pub fn cone_formula(h: &GradedTable, star: &GradedTable) -> GradedTable {
    let mut entries = vec![((0, 0), 1)];
    entries.extend(h.iter().filter(|&((i, _), _)| i >= 1));
    entries.extend(
        h.iter()
            .filter(|&((i, _), _)| i >= 1)
            .map(|((i, j), b)| ((i + 1, j + 1), b)),
    );
    entries.extend(star.iter().filter(|&((i, _), _)| i >= 1));
    GradedTable::from_entries(h.ground_size() + 1, h.field(), entries)
}

/// [`cone_formula`] for a concrete non-trivial `H` and vertex cover `U`.
pub fn cone_betti(h: &Graph, u: VertexMask, field: FieldSpec) -> Result<GradedTable> {
    if h.is_trivial() {
        return Err(Error::Precondition("cone base must have an edge".into()));
    }
    if !u.is_subset_of(h.vertices()) || !h.is_vertex_cover(u) {
        return Err(Error::Precondition(format!("{u} is not a vertex cover")));
    }
    let bh = graph_betti(h, field)?.graded();
    let star = graph_betti(&Graph::star(u.len())?, field)?.graded();
    Ok(cone_formula(&bh, &star))
}

/// Graded table of the join `G * H` from the tables of `G` (on `m` vertices)
/// and `H` (on `n` vertices):
///
/// `β_{i,j} = Σ_{k=0}^{j-2} [C(n,k) β_{i-k,j-k}(G) + C(m,k) β_{i-k,j-k}(H)]`
/// plus, on the linear strand `j = i + 1`, the complete bipartite
/// contribution `C(m+n, j) - C(m, j) - C(n, j)`.
pub fn join_betti(bg: &GradedTable, bh: &GradedTable) -> Result<GradedTable> {
    let (m, n) = (bg.ground_size(), bh.ground_size());
    if m == 0 || n == 0 {
        return Err(invalid("join needs at least one vertex on each side"));
    }
    if bg.field() != bh.field() {
        return Err(invalid("tables must share a field"));
    }
    let total = m + n;
    let c = |a: usize, b: usize| {
        if b > a {
            0
        } else {
            binomial(a as u64, b as u64)
        }
    };
    let mut entries = vec![((0, 0), 1)];
    for (table, other) in [(bg, n), (bh, m)] {
        for ((i0, j0), b) in table.iter().filter(|&((i, _), _)| i >= 1) {
            // (i0, j0) = (i - k, j - k) with j0 ≥ 2
            for k in 0..=other {
                entries.push(((i0 + k, j0 + k), c(other, k) * b));
            }
        }
    }
    for j in 2..=total {
        let extra = c(total, j) - c(m, j) - c(n, j);
        entries.push(((j - 1, j), extra));
    }
    Ok(GradedTable::from_entries(total, bg.field(), entries))
}

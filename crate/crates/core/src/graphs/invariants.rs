use super::Graph;
use crate::mask::{subsets_of_size, VertexMask};

/// `ν(G)`, the largest number of edges forming an induced matching.
pub fn induced_matching_number(g: &Graph) -> usize {
    let edges = g.edges();
    let mut best = 0;
    search_matching(g, &edges, 0, VertexMask::EMPTY, 0, &mut best);
    best
}

// Choosing an edge blocks both closed neighbourhoods, which rules out shared
// endpoints and cross edges in one step.
fn search_matching(
    g: &Graph,
    edges: &[(usize, usize)],
    from: usize,
    blocked: VertexMask,
    size: usize,
    best: &mut usize,
) {
    *best = (*best).max(size);
    if size + (edges.len() - from) <= *best {
        return;
    }
    for (i, &(u, v)) in edges.iter().enumerate().skip(from) {
        if blocked.contains(u) || blocked.contains(v) {
            continue;
        }
        let next = blocked | g.closed_neighbors(u) | g.closed_neighbors(v);
        search_matching(g, edges, i + 1, next, size + 1, best);
    }
}

pub fn min_vertex_cover_size(g: &Graph) -> usize {
    let edges = g.edges();
    (0..=g.n())
        .find(|&k| {
            subsets_of_size(g.n(), k)
                .any(|s| edges.iter().all(|&(u, v)| s.contains(u) || s.contains(v)))
        })
        .unwrap_or(g.n())
}

/// Whether `G` has an induced cycle of length `ℓ ≥ 3` with `ℓ ≡ residue (mod modulus)`.
pub fn has_induced_cycle_mod(g: &Graph, residue: usize, modulus: usize) -> bool {
    (3..=g.n())
        .filter(|l| l % modulus == residue % modulus)
        .any(|l| {
            subsets_of_size(g.n(), l).any(|w| {
                w.iter().all(|v| (g.neighbors(v) & w).len() == 2)
                    && g.reach(VertexMask::singleton(w.first().unwrap()), w) == w
            })
        })
}

/// Perfect elimination check: repeatedly remove a simplicial vertex.
pub fn is_chordal(g: &Graph) -> bool {
    let mut alive = g.vertices();
    while !alive.is_empty() {
        let simplicial = alive.iter().find(|&v| {
            let nb = g.neighbors(v) & alive;
            nb.iter()
                .all(|u| nb.without(u).is_subset_of(g.neighbors(u)))
        });
        match simplicial {
            Some(v) => alive = alive.without(v),
            None => return false,
        }
    }
    true
}

pub fn is_forest(g: &Graph) -> bool {
    g.edge_count() + g.components().len() == g.n()
}

/// Connected with exactly one cycle.
pub fn is_unicyclic(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && g.edge_count() == g.n()
}

/// Vertices of the unique cycle of a unicyclic graph, found by stripping
/// leaves; `None` if `g` is not unicyclic.
pub fn cycle_vertices(g: &Graph) -> Option<VertexMask> {
    if !is_unicyclic(g) {
        return None;
    }
    let mut alive = g.vertices();
    loop {
        let leaves = VertexMask::from_vertices(
            alive
                .iter()
                .filter(|&v| (g.neighbors(v) & alive).len() <= 1),
        );
        if leaves.is_empty() {
            return Some(alive);
        }
        alive = alive - leaves;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mask::VertexMask;
    use proptest::prelude::*;

    fn brute_nu(g: &Graph) -> usize {
        let edges = g.edges();
        let m = edges.len();
        (0u32..1 << m)
            .filter(|&sel| {
                let chosen: Vec<_> = (0..m)
                    .filter(|i| sel >> i & 1 == 1)
                    .map(|i| edges[i])
                    .collect();
                let verts = VertexMask::from_vertices(chosen.iter().flat_map(|&(u, v)| [u, v]));
                verts.len() == 2 * chosen.len()
                    && g.induced_subgraph(verts).edge_count() == chosen.len()
            })
            .map(|sel| sel.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
                Graph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
            })
        })
    }

    #[test]
    fn nu_examples() {
        assert_eq!(induced_matching_number(&Graph::cycle(5).unwrap()), 1);
        assert_eq!(induced_matching_number(&Graph::cycle(6).unwrap()), 2);
        assert_eq!(induced_matching_number(&Graph::path(5).unwrap()), 2);
        assert_eq!(induced_matching_number(&Graph::empty(4)), 0);
        let three_edges = Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(induced_matching_number(&three_edges), 3);
        assert_eq!(induced_matching_number(&Graph::complete(6).unwrap()), 1);
    }

    #[test]
    fn cover_examples() {
        assert_eq!(min_vertex_cover_size(&Graph::cycle(5).unwrap()), 3);
        assert_eq!(min_vertex_cover_size(&Graph::complete(4).unwrap()), 3);
        assert_eq!(min_vertex_cover_size(&Graph::star(5).unwrap()), 1);
        assert_eq!(min_vertex_cover_size(&Graph::empty(3)), 0);
    }

    #[test]
    fn induced_cycle_examples() {
        let c5 = Graph::cycle(5).unwrap();
        assert!(has_induced_cycle_mod(&c5, 2, 3));
        assert!(!has_induced_cycle_mod(&Graph::cycle(6).unwrap(), 2, 3));
        // the wheel's only induced cycles are its triangles and the rim
        assert!(has_induced_cycle_mod(&Graph::wheel(5).unwrap(), 2, 3));
        assert!(!has_induced_cycle_mod(&Graph::wheel(4).unwrap(), 2, 3));
        assert!(!has_induced_cycle_mod(&Graph::complete(6).unwrap(), 1, 3));
    }

    #[test]
    fn chordal_and_unicyclic() {
        assert!(is_chordal(&Graph::complete(5).unwrap()));
        assert!(is_chordal(&Graph::path(6).unwrap()));
        assert!(!is_chordal(&Graph::cycle(4).unwrap()));
        assert!(!is_chordal(&Graph::wheel(5).unwrap()));
        let pendant = Graph::cycle(4)
            .unwrap()
            .clique_sum(&Graph::path(2).unwrap(), &[(0, 0)])
            .unwrap();
        assert!(is_unicyclic(&pendant));
        assert_eq!(cycle_vertices(&pendant), Some(VertexMask::full(4)));
        assert!(!is_unicyclic(&Graph::path(4).unwrap()));
        assert!(is_forest(&Graph::star(4).unwrap()));
    }

    proptest! {
        #[test]
        fn nu_matches_edge_subset_search(g in arb_graph(7)) {
            prop_assume!(g.edge_count() <= 14);
            prop_assert_eq!(induced_matching_number(&g), brute_nu(&g));
        }

        #[test]
        fn chordal_iff_no_long_induced_cycle(g in arb_graph(7)) {
            let long = (4..=g.n()).any(|l| has_induced_cycle_mod(&g, l, usize::MAX));
            prop_assert_eq!(is_chordal(&g), !long);
        }

        #[test]
        fn nu_at_most_cover(g in arb_graph(8)) {
            prop_assert!(induced_matching_number(&g) <= min_vertex_cover_size(&g));
        }
    }
}

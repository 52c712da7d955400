//! Membership in the class 𝒢 (graphs reducible to cycles and edgeless graphs
//! by deleting cone edges) and its subclass 𝒢′.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::{
    canonical_form, has_induced_cycle_mod, CanonicalForm, Edge, Graph, CANON_MAX_VERTICES,
};
use crate::error::{Error, Result};
use crate::ideals::SquarefreeIdeal;

/// Edges `(x, y)` with `N(x) ⊆ N[y]`, as ordered pairs in lexicographic order.
pub fn cone_edges(g: &Graph) -> impl Iterator<Item = Edge> + '_ {
    (0..g.n()).flat_map(move |x| {
        g.neighbors(x)
            .iter()
            .filter(move |&y| g.neighbors(x).is_subset_of(g.closed_neighbors(y)))
            .map(move |y| (x, y))
    })
}

/// The lexicographically smallest `(x, y)` with `N(x) ⊆ N[y]`.
pub fn find_cone_edge(g: &Graph) -> Option<Edge> {
    cone_edges(g).next()
}

/// `I(G∖e) : x_x x_y` for a cone edge `e = (x, y)`, computed as
/// `I(G∖N[y]) + (x_z : z ∈ N(y), z ≠ x)` on the same ground set.
pub fn colon_edge_ideal(g: &Graph, (x, y): Edge) -> Result<SquarefreeIdeal> {
    if x >= g.n() || y >= g.n() || !g.has_edge(x, y) {
        return Err(Error::Precondition(format!("({x}, {y}) is not an edge")));
    }
    if !g.neighbors(x).is_subset_of(g.closed_neighbors(y)) {
        return Err(Error::Precondition(format!(
            "N({x}) is not contained in N[{y}]"
        )));
    }
    let outside = g.remove_vertices(g.closed_neighbors(y));
    let vars = SquarefreeIdeal::variables(g.n(), g.neighbors(y).without(x))?;
    outside.edge_ideal().sum(&vars)
}

fn memo() -> &'static RwLock<HashMap<CanonicalForm, bool>> {
    static MEMO: OnceLock<RwLock<HashMap<CanonicalForm, bool>>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// A graph is in 𝒢 when each connected component is edgeless, a cycle, or
/// has a cone edge whose deletion leaves a graph in 𝒢.
pub fn in_class_g(g: &Graph) -> bool {
    g.components()
        .into_iter()
        .all(|c| component_in_g(&g.induced_subgraph(c)))
}

fn component_in_g(c: &Graph) -> bool {
    if c.is_trivial() || c.is_cycle() {
        return true;
    }
    if c.n() > CANON_MAX_VERTICES {
        return cone_edges(c).any(|(x, y)| in_class_g(&c.delete_edge(x, y).expect("cone edge")));
    }
    let key = canonical_form(c).expect("within canonical bound");
    if let Some(&known) = memo().read().unwrap().get(&key) {
        return known;
    }
    // recurse on the canonical representative so cached subresults line up
    let rep = key.to_graph();
    let result =
        cone_edges(&rep).any(|(x, y)| in_class_g(&rep.delete_edge(x, y).expect("cone edge")));
    memo().write().unwrap().insert(key, result);
    result
}

/// 𝒢′: members of 𝒢 with no induced cycle of length `≡ 2 (mod 3)`.
pub fn in_class_gprime(g: &Graph) -> bool {
    in_class_g(g) && !has_induced_cycle_mod(g, 2, 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{enumerate_graphs, EnumOptions};
    use crate::mask::VertexMask;

    #[test]
    fn cone_edge_examples() {
        // P_4: the leaf 0 has N(0) = {1} ⊆ N[1]
        let p4 = Graph::path(4).unwrap();
        assert_eq!(find_cone_edge(&p4), Some((0, 1)));
        assert_eq!(find_cone_edge(&Graph::cycle(5).unwrap()), None);
        assert_eq!(find_cone_edge(&Graph::complete(3).unwrap()), Some((0, 1)));
    }

    #[test]
    fn colon_examples() {
        // P_4 minus {0,1} colon x0x1 is (x2)
        let p4 = Graph::path(4).unwrap();
        let colon = colon_edge_ideal(&p4, (0, 1)).unwrap();
        assert_eq!(colon.generators(), &[VertexMask::singleton(2)]);
        assert!(colon_edge_ideal(&Graph::cycle(5).unwrap(), (0, 1)).is_err());
        assert!(colon_edge_ideal(&p4, (0, 2)).is_err());
    }

    #[test]
    fn colon_matches_generic_colon() {
        for g in enumerate_graphs(6, EnumOptions::iso()).unwrap() {
            for (x, y) in cone_edges(&g).collect::<Vec<_>>() {
                let direct = g
                    .delete_edge(x, y)
                    .unwrap()
                    .edge_ideal()
                    .colon_by_monomial(VertexMask::from_vertices([x, y]));
                assert_eq!(
                    colon_edge_ideal(&g, (x, y)).unwrap(),
                    direct.unwrap(),
                    "{g:?} ({x},{y})"
                );
            }
        }
    }

    #[test]
    fn membership_examples() {
        assert!(in_class_g(&Graph::cycle(5).unwrap()));
        assert!(!in_class_gprime(&Graph::cycle(5).unwrap()));
        assert!(in_class_gprime(&Graph::cycle(6).unwrap()));
        assert!(!in_class_g(&Graph::wheel(6).unwrap()));
        assert!(!in_class_g(&Graph::jahangir(3).unwrap()));
        assert!(in_class_g(&Graph::empty(3)));
        let pendant = Graph::cycle(4)
            .unwrap()
            .clique_sum(&Graph::path(2).unwrap(), &[(0, 0)])
            .unwrap();
        assert!(in_class_g(&pendant));
        let two_cycles = Graph::cycle(4)
            .unwrap()
            .disjoint_union(&Graph::cycle(5).unwrap())
            .unwrap();
        assert!(in_class_g(&two_cycles));
    }

    #[test]
    fn chordal_graphs_are_in_class() {
        for n in 1..=7 {
            let opts = EnumOptions {
                chordal: true,
                ..EnumOptions::iso()
            };
            for g in enumerate_graphs(n, opts).unwrap() {
                assert!(in_class_g(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn membership_is_isomorphism_invariant() {
        let g = Graph::jahangir(3).unwrap();
        let perm = [3, 0, 6, 1, 5, 2, 4];
        let h =
            Graph::from_edges(7, g.edges().into_iter().map(|(u, v)| (perm[u], perm[v]))).unwrap();
        assert_eq!(in_class_g(&g), in_class_g(&h));
    }
}

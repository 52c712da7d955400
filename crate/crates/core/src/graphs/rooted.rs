use super::Graph;
use crate::error::{invalid, Result};
use crate::ideals::SquarefreeIdeal;
use crate::mask::{VertexMask, MAX_VERTICES};

/// A tree with a distinguished root, given by parent pointers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    parent: Vec<Option<usize>>,
    root: usize,
}

impl RootedTree {
    /// `parent[v]` is `None` exactly at the root; following parents from any
    /// vertex must reach the root.
    pub fn new(parent: Vec<Option<usize>>) -> Result<Self> {
        let n = parent.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(invalid(format!(
                "rooted tree needs 1..={MAX_VERTICES} vertices, got {n}"
            )));
        }
        let roots: Vec<usize> = (0..n).filter(|&v| parent[v].is_none()).collect();
        let [root] = roots[..] else {
            return Err(invalid("rooted tree needs exactly one root"));
        };
        for v in 0..n {
            let mut cur = v;
            for _ in 0..=n {
                match parent[cur] {
                    None => break,
                    Some(p) if p >= n => return Err(invalid(format!("parent {p} out of range"))),
                    Some(p) => cur = p,
                }
            }
            if cur != root {
                return Err(invalid("parent pointers contain a cycle"));
            }
        }
        Ok(RootedTree { parent, root })
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Distance from the root.
    pub fn level(&self, v: usize) -> usize {
        let mut d = 0;
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            cur = p;
            d += 1;
        }
        d
    }

    /// Largest level.
    pub fn height(&self) -> usize {
        (0..self.n()).map(|v| self.level(v)).max().unwrap_or(0)
    }

    /// Nested-parenthesis encoding with children sorted; equal strings
    /// mean isomorphic rooted trees.
    pub fn canonical_string(&self) -> String {
        let mut children = vec![Vec::new(); self.n()];
        for v in 0..self.n() {
            if let Some(p) = self.parent[v] {
                children[p].push(v);
            }
        }
        fn encode(v: usize, children: &[Vec<usize>]) -> String {
            let mut parts: Vec<String> = children[v].iter().map(|&c| encode(c, children)).collect();
            parts.sort();
            format!("({})", parts.concat())
        }
        encode(self.root, &children)
    }

    pub fn to_graph(&self) -> Graph {
        let edges = (0..self.n()).filter_map(|v| self.parent[v].map(|p| (p, v)));
        Graph::from_edges(self.n(), edges).expect("valid tree")
    }

    /// Ideal generated by the directed paths of `len` vertices, each running
    /// from a vertex down to a descendant.
    pub fn t_path_ideal(&self, len: usize) -> Result<SquarefreeIdeal> {
        if len == 0 {
            return Err(invalid("path length must be at least 1"));
        }
        let mut gens = Vec::new();
        for v in 0..self.n() {
            let mut path = VertexMask::singleton(v);
            let mut cur = v;
            let mut ok = true;
            for _ in 1..len {
                match self.parent[cur] {
                    Some(p) => {
                        path = path.with(p);
                        cur = p;
                    }
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                gens.push(path);
            }
        }
        SquarefreeIdeal::new(self.n(), gens)
    }
}

/// Every labeled rooted tree on `n` vertices with root 0 and each parent
/// smaller than its child. Every rooted tree is isomorphic to one of these.
pub fn enumerate_rooted_trees(n: usize) -> impl Iterator<Item = RootedTree> {
    let total: usize = (1..n).product();
    (0..if n == 0 { 0 } else { total }).map(move |mut code| {
        let mut parent = vec![None; n];
        for (v, slot) in parent.iter_mut().enumerate().skip(1) {
            *slot = Some(code % v);
            code /= v;
        }
        RootedTree { parent, root: 0 }
    })
}

/// One rooted tree per isomorphism class, in the order first met by
/// [`enumerate_rooted_trees`].
pub fn rooted_trees_up_to_iso(n: usize) -> Vec<RootedTree> {
    let mut seen = std::collections::HashSet::new();
    enumerate_rooted_trees(n)
        .filter(|t| seen.insert(t.canonical_string()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path_tree(n: usize) -> RootedTree {
        RootedTree::new((0..n).map(|v| v.checked_sub(1)).collect()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(RootedTree::new(vec![None, Some(0), Some(1)]).is_ok());
        assert!(RootedTree::new(vec![None, None]).is_err());
        assert!(RootedTree::new(vec![None, Some(2), Some(1)]).is_err());
        assert!(RootedTree::new(vec![]).is_err());
    }

    #[test]
    fn path_ideal_examples() {
        let t = path_tree(5);
        assert_eq!(t.height(), 4);
        let i = t.t_path_ideal(3).unwrap();
        assert_eq!(i.generators().len(), 3);
        assert_eq!(t.t_path_ideal(2).unwrap(), t.to_graph().edge_ideal());
        assert!(t.t_path_ideal(6).unwrap().is_zero());
        // star rooted at its centre: no directed path on three vertices
        let star = RootedTree::new(vec![None, Some(0), Some(0), Some(0)]).unwrap();
        assert!(star.t_path_ideal(3).unwrap().is_zero());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_rooted_trees(1).count(), 1);
        assert_eq!(enumerate_rooted_trees(5).count(), 24);
        // rooted trees on 1..=8 vertices up to isomorphism
        let counts = [1, 1, 2, 4, 9, 20, 48, 115];
        for (n, &c) in counts.iter().enumerate() {
            assert_eq!(rooted_trees_up_to_iso(n + 1).len(), c);
        }
        for t in enumerate_rooted_trees(6) {
            assert!(crate::graphs::is_forest(&t.to_graph()) && t.to_graph().is_connected());
        }
    }
}

//! Multigraded and graded Betti tables of `R/I` for squarefree monomial `I`.

mod formulas;
mod hochster;
mod koszul;

pub use formulas::{cone_betti, cone_formula, disjoint_sum_betti, join_betti, mapping_cone_betti};
pub use hochster::{graph_betti, hochster_betti, hochster_betti_unchecked, HOCHSTER_MAX_VERTICES};
pub use koszul::{koszul_oracle_betti, KOSZUL_MAX_VERTICES};

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::exactla::FieldSpec;
use crate::mask::VertexMask;

/// `β_{i,a}(R/I)` keyed by homological index and squarefree multidegree.
/// Zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    ground_size: usize,
    field: FieldSpec,
    entries: BTreeMap<(usize, VertexMask), u64>,
}

impl BettiTable {
    /// Sums duplicate keys and drops zeros.
    pub fn from_entries<I: IntoIterator<Item = ((usize, VertexMask), u64)>>(
        ground_size: usize,
        field: FieldSpec,
        entries: I,
    ) -> Self {
        let mut map = BTreeMap::new();
        for (k, v) in entries {
            *map.entry(k).or_insert(0) += v;
        }
        map.retain(|_, v| *v != 0);
        BettiTable {
            ground_size,
            field,
            entries: map,
        }
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, a: VertexMask) -> u64 {
        self.entries.get(&(i, a)).copied().unwrap_or(0)
    }

    /// Nonzero entries ordered by `(i, mask)`.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, VertexMask), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn graded(&self) -> GradedTable {
        GradedTable::from_entries(
            self.ground_size,
            self.field,
            self.iter().map(|((i, a), b)| ((i, a.len()), b)),
        )
    }

    pub fn t_shift(&self, i: usize) -> Option<usize> {
        self.graded().t_shift(i)
    }

    pub fn reg(&self) -> usize {
        self.graded().reg()
    }

    pub fn pdim(&self) -> usize {
        self.graded().pdim()
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Multi {
            i: usize,
            mask: Vec<usize>,
            beta: u64,
        }
        let graded = self.graded();
        let mut value = graded.to_json();
        let multi: Vec<Multi> = self
            .iter()
            .map(|((i, a), beta)| Multi {
                i,
                mask: a.to_vec(),
                beta,
            })
            .collect();
        value["multigraded"] = serde_json::to_value(multi).expect("plain data serializes");
        value
    }

    /// `i,mask,beta` rows with the mask as space-separated vertices.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("i,mask,beta\n");
        for ((i, a), b) in self.iter() {
            let verts: Vec<String> = a.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(s, "{i},{},{b}", verts.join(" "));
        }
        s
    }
}

/// `β_{i,j}(R/I)` keyed by homological index and total degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedTable {
    ground_size: usize,
    field: FieldSpec,
    entries: BTreeMap<(usize, usize), u64>,
}

impl GradedTable {
    pub fn from_entries<I: IntoIterator<Item = ((usize, usize), u64)>>(
        ground_size: usize,
        field: FieldSpec,
        entries: I,
    ) -> Self {
        let mut map = BTreeMap::new();
        for (k, v) in entries {
            *map.entry(k).or_insert(0) += v;
        }
        map.retain(|_, v| *v != 0);
        GradedTable {
            ground_size,
            field,
            entries: map,
        }
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// `t_i`: largest `j` with `β_{i,j} ≠ 0`.
    pub fn t_shift(&self, i: usize) -> Option<usize> {
        self.entries
            .range((i, 0)..=(i, usize::MAX))
            .next_back()
            .map(|(&(_, j), _)| j)
    }

    /// Smallest `j` with `β_{i,j} ≠ 0`.
    pub fn min_shift(&self, i: usize) -> Option<usize> {
        self.entries
            .range((i, 0)..=(i, usize::MAX))
            .next()
            .map(|(&(_, j), _)| j)
    }

    pub fn reg(&self) -> usize {
        self.entries
            .keys()
            .map(|&(i, j)| j.saturating_sub(i))
            .max()
            .unwrap_or(0)
    }

    pub fn pdim(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Homological indices `i` with `β_{i,i+j} ≠ 0`, ascending.
    pub fn strand(&self, j: usize) -> Vec<usize> {
        self.entries
            .keys()
            .filter(|&&(i, d)| d == i + j)
            .map(|&(i, _)| i)
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Graded {
            i: usize,
            j: usize,
            beta: u64,
        }
        let graded: Vec<Graded> = self
            .iter()
            .map(|((i, j), beta)| Graded { i, j, beta })
            .collect();
        let t: Vec<Option<usize>> = (0..=self.pdim()).map(|i| self.t_shift(i)).collect();
        serde_json::json!({
            "n": self.ground_size,
            "field_char": self.field.characteristic(),
            "multigraded": [],
            "graded": graded,
            "t": t,
            "reg": self.reg(),
            "pdim": self.pdim(),
        })
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("i,j,beta\n");
        for ((i, j), b) in self.iter() {
            let _ = writeln!(s, "{i},{j},{b}");
        }
        s
    }

    /// Betti diagram: columns `i`, rows `j - i`, `.` for zero.
    pub fn to_diagram(&self) -> String {
        let pdim = self.pdim();
        let reg = self.reg();
        let cell = |i: usize, r: usize| match self.get(i, i + r) {
            0 => ".".to_string(),
            b => b.to_string(),
        };
        let totals: Vec<String> = (0..=pdim)
            .map(|i| {
                self.iter()
                    .filter(|&((k, _), _)| k == i)
                    .map(|(_, b)| b)
                    .sum::<u64>()
                    .to_string()
            })
            .collect();
        let width = (0..=pdim)
            .flat_map(|i| (0..=reg).map(move |r| (i, r)))
            .map(|(i, r)| cell(i, r).len())
            .chain(totals.iter().map(String::len))
            .chain(std::iter::once(pdim.to_string().len()))
            .max()
            .unwrap_or(1);
        let label = reg.to_string().len().max("total".len()) + 1;
        let mut s = format!("{:>label$}", "");
        for i in 0..=pdim {
            let _ = write!(s, " {i:>width$}");
        }
        s.push('\n');
        let _ = write!(s, "{:>label$}", "total:");
        for t in &totals {
            let _ = write!(s, " {t:>width$}");
        }
        s.push('\n');
        for r in 0..=reg {
            let _ = write!(s, "{:>label$}", format!("{r}:"));
            for i in 0..=pdim {
                let _ = write!(s, " {:>width$}", cell(i, r));
            }
            s.push('\n');
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Graph;

    fn q() -> FieldSpec {
        FieldSpec::RATIONALS
    }

    #[test]
    fn invariants_of_single_edge() {
        let b = graph_betti(&Graph::path(2).unwrap(), q()).unwrap();
        assert_eq!(b.t_shift(1), Some(2));
        assert_eq!(b.t_shift(2), None);
        assert_eq!(b.reg(), 1);
        assert_eq!(b.pdim(), 1);
    }

    #[test]
    fn disjoint_edges_have_t_equal_twice_i() {
        for k in 1..=4 {
            let g = Graph::from_edges(2 * k, (0..k).map(|e| (2 * e, 2 * e + 1))).unwrap();
            let b = graph_betti(&g, q()).unwrap();
            for i in 1..=k {
                assert_eq!(b.t_shift(i), Some(2 * i));
            }
            assert_eq!(b.pdim(), k);
        }
    }

    #[test]
    fn diagram_layout() {
        let b = graph_betti(&Graph::cycle(5).unwrap(), q()).unwrap();
        let expected =
            "       0 1 2 3\ntotal: 1 5 5 1\n    0: 1 . . .\n    1: . 5 5 .\n    2: . . . 1\n";
        assert_eq!(b.graded().to_diagram(), expected);
    }

    #[test]
    fn json_shape() {
        let b = graph_betti(&Graph::path(2).unwrap(), q()).unwrap();
        let v = b.to_json();
        assert_eq!(v["n"], 2);
        assert_eq!(v["field_char"], 0);
        assert_eq!(v["reg"], 1);
        assert_eq!(v["pdim"], 1);
        assert_eq!(v["t"], serde_json::json!([0, 2]));
        assert_eq!(
            v["multigraded"][1],
            serde_json::json!({"i": 1, "mask": [0, 1], "beta": 1})
        );
        assert_eq!(
            v["graded"][0],
            serde_json::json!({"i": 0, "j": 0, "beta": 1})
        );
    }

    #[test]
    fn csv_rows() {
        let b = graph_betti(&Graph::path(2).unwrap(), q()).unwrap();
        assert_eq!(b.to_csv(), "i,mask,beta\n0,,1\n1,0 1,1\n");
        assert_eq!(b.graded().to_csv(), "i,j,beta\n0,0,1\n1,2,1\n");
    }

    #[test]
    fn strands_and_shifts() {
        let g = graph_betti(&Graph::cycle(5).unwrap(), q())
            .unwrap()
            .graded();
        assert_eq!(g.strand(1), vec![1, 2]);
        assert_eq!(g.strand(2), vec![3]);
        assert_eq!(g.min_shift(3), Some(5));
    }
}

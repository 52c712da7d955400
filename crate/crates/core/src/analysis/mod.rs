//! Checks on Betti tables: subadditivity of maximal shifts, strand
//! connectivity, and bounds on multigraded Betti numbers.

mod harness;
mod search;

pub use harness::{verify_by_name, verify_theorem, Failure, Theorem, VerificationReport};
pub use search::{search_open_questions, OpenQuestionReport, QuestionOutcome};

use serde::Serialize;

use crate::betti::{hochster_betti, BettiTable, GradedTable};
use crate::error::{Error, Result};
use crate::exactla::FieldSpec;
use crate::ideals::SquarefreeIdeal;
use crate::mask::VertexMask;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub a: usize,
    pub b: usize,
    pub t_a: usize,
    pub t_b: usize,
    pub t_ab: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubadditivityReport {
    pub holds: bool,
    pub violations: Vec<Violation>,
}

/// Tests `t_{a+b} ≤ t_a + t_b` for `1 ≤ a ≤ b` with `a + b ≤ pdim`.
pub fn check_subadditivity(b: &BettiTable) -> SubadditivityReport {
    check_subadditivity_graded(&b.graded())
}

pub fn check_subadditivity_graded(g: &GradedTable) -> SubadditivityReport {
    let pdim = g.pdim();
    let mut violations = Vec::new();
    for a in 1..=pdim / 2 {
        for b in a..=pdim - a {
            let (Some(t_a), Some(t_b), Some(t_ab)) = (g.t_shift(a), g.t_shift(b), g.t_shift(a + b))
            else {
                continue;
            };
            if t_ab > t_a + t_b {
                violations.push(Violation {
                    a,
                    b,
                    t_a,
                    t_b,
                    t_ab,
                });
            }
        }
    }
    SubadditivityReport {
        holds: violations.is_empty(),
        violations,
    }
}

/// One nonempty `j`-strand `{i : β_{i,i+j} ≠ 0}` of `R/I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Strand {
    pub j: usize,
    pub q: usize,
    pub p: usize,
    pub present: Vec<usize>,
    pub gaps: Vec<usize>,
}

impl Strand {
    pub fn is_connected(&self) -> bool {
        self.gaps.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrandReport {
    pub strands: Vec<Strand>,
}

impl StrandReport {
    pub fn strand(&self, j: usize) -> Option<&Strand> {
        self.strands.iter().find(|s| s.j == j)
    }

    /// An empty strand counts as connected.
    pub fn is_connected(&self, j: usize) -> bool {
        self.strand(j).is_none_or(Strand::is_connected)
    }

    pub fn all_connected(&self) -> bool {
        self.strands.iter().all(Strand::is_connected)
    }
}

/// Nonempty strands for `j ≥ 1`.
pub fn strand_report(b: &BettiTable) -> StrandReport {
    strand_report_graded(&b.graded())
}

pub fn strand_report_graded(g: &GradedTable) -> StrandReport {
    let strands = (1..=g.reg())
        .filter_map(|j| {
            let present = g.strand(j);
            let (&q, &p) = (present.first()?, present.last()?);
            let gaps = (q..=p)
                .filter(|i| present.binary_search(i).is_err())
                .collect();
            Some(Strand {
                j,
                q,
                p,
                present,
                gaps,
            })
        })
        .collect();
    StrandReport { strands }
}

/// Strand of `R/(I + J)` predicted from the strand of `R/J` when `I` is
/// generated by `k` variables not used by `J`: the linear part of `R/I` has
/// `β_{r,r} = C(k, r)`, so every present `i` spreads to `i, .., i + k`.
pub fn predicted_strand(present: &[usize], k: usize) -> Vec<usize> {
    let mut out: Vec<usize> = present.iter().flat_map(|&i| i..=i + k).collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// Adds the variables `vars` to `j_ideal` and checks every strand `j ≥ 1` of
/// the sum against [`predicted_strand`]; a connected strand `[q, p]` of `J`
/// must become exactly `[q, p + k]`.
pub fn check_linear_strand_extension(
    j_ideal: &SquarefreeIdeal,
    vars: VertexMask,
    field: FieldSpec,
) -> Result<bool> {
    if !vars.is_disjoint(j_ideal.support()) {
        return Err(Error::Precondition(format!(
            "variables {vars} meet the support of J"
        )));
    }
    let linear = SquarefreeIdeal::variables(j_ideal.ground_size(), vars)?;
    let before = hochster_betti(j_ideal, field)?.graded();
    let after = hochster_betti(&j_ideal.sum(&linear)?, field)?.graded();
    let k = vars.len();
    let before_report = strand_report_graded(&before);
    for j in 1..=after.reg().max(before.reg()) {
        let present = before.strand(j);
        let actual = after.strand(j);
        if actual != predicted_strand(&present, k) {
            return Ok(false);
        }
        if let Some(s) = before_report.strand(j).filter(|s| s.is_connected()) {
            if actual != (s.q..=s.p + k).collect::<Vec<_>>() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Largest `β_{i,a}` with `i ≥ 1` and every `(i, a)` attaining it.
pub fn max_multigraded(b: &BettiTable) -> (u64, Vec<(usize, VertexMask)>) {
    let max = b
        .iter()
        .filter(|&((i, _), _)| i >= 1)
        .map(|(_, v)| v)
        .max()
        .unwrap_or(0);
    let witnesses = b
        .iter()
        .filter(|&((i, _), v)| i >= 1 && v == max && max > 0)
        .map(|(k, _)| k)
        .collect();
    (max, witnesses)
}

/// Every `β_{i,a}` with `i ≥ 1` is at most `bound`.
pub fn check_multigraded_bound(b: &BettiTable, bound: u64) -> bool {
    max_multigraded(b).0 <= bound
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::graph_betti;
    use crate::graphs::{enumerate_graphs, EnumOptions, Graph};

    fn q() -> FieldSpec {
        FieldSpec::RATIONALS
    }

    #[test]
    fn strand_gap_in_cycle_plus_cubic() {
        let ideal = SquarefreeIdeal::parse("8\n0 1\n1 2\n2 3\n3 4\n0 4\n5 6 7\n").unwrap();
        let report = strand_report(&hochster_betti(&ideal, q()).unwrap());
        let s = report.strand(2).unwrap();
        assert_eq!(s.present, vec![1, 3]);
        assert_eq!(s.gaps, vec![2]);
        assert!(!report.all_connected());
    }

    #[test]
    fn single_edge_strand() {
        let report = strand_report(&graph_betti(&Graph::path(2).unwrap(), q()).unwrap());
        assert_eq!(
            report.strands,
            vec![Strand {
                j: 1,
                q: 1,
                p: 1,
                present: vec![1],
                gaps: vec![]
            }]
        );
    }

    #[test]
    fn chordal_graphs_are_strand_connected_and_subadditive() {
        for n in 1..=7 {
            let opts = EnumOptions {
                chordal: true,
                ..EnumOptions::iso()
            };
            for g in enumerate_graphs(n, opts).unwrap() {
                let b = graph_betti(&g, q()).unwrap();
                assert!(strand_report(&b).all_connected(), "{g:?}");
                assert!(check_subadditivity(&b).holds, "{g:?}");
            }
        }
    }

    #[test]
    fn disjoint_edges_are_additive_with_equality() {
        for k in 1..=4 {
            let g = Graph::from_edges(2 * k, (0..k).map(|e| (2 * e, 2 * e + 1))).unwrap();
            let gr = graph_betti(&g, q()).unwrap().graded();
            for a in 1..k {
                for b in 1..=k - a {
                    assert_eq!(
                        gr.t_shift(a + b),
                        Some(gr.t_shift(a).unwrap() + gr.t_shift(b).unwrap())
                    );
                }
            }
            assert!(check_subadditivity_graded(&gr).holds);
        }
    }

    #[test]
    fn violations_are_reported() {
        let fake = GradedTable::from_entries(6, q(), [((0, 0), 1), ((1, 2), 1), ((2, 9), 1)]);
        let r = check_subadditivity_graded(&fake);
        assert!(!r.holds);
        assert_eq!(
            r.violations,
            vec![Violation {
                a: 1,
                b: 1,
                t_a: 2,
                t_b: 2,
                t_ab: 9
            }]
        );
    }

    #[test]
    fn linear_strand_extension_examples() {
        let c6 = Graph::cycle(6)
            .unwrap()
            .disjoint_union(&Graph::empty(1))
            .unwrap()
            .edge_ideal();
        assert!(check_linear_strand_extension(&c6, VertexMask::singleton(6), q()).unwrap());
        let p5 = Graph::path(5)
            .unwrap()
            .disjoint_union(&Graph::empty(2))
            .unwrap()
            .edge_ideal();
        assert!(
            check_linear_strand_extension(&p5, VertexMask::from_vertices([5, 6]), q()).unwrap()
        );
        assert!(check_linear_strand_extension(&p5, VertexMask::EMPTY, q()).unwrap());
        assert!(check_linear_strand_extension(&p5, VertexMask::singleton(0), q()).is_err());
    }

    #[test]
    fn multigraded_examples() {
        let c6 = graph_betti(&Graph::cycle(6).unwrap(), q()).unwrap();
        let (max, witnesses) = max_multigraded(&c6);
        assert_eq!(max, 2);
        assert_eq!(witnesses, vec![(4, VertexMask::full(6))]);
        assert!(check_multigraded_bound(
            &graph_betti(&Graph::cycle(5).unwrap(), q()).unwrap(),
            1
        ));
        for n in 1..=8 {
            let forests = enumerate_graphs(n, EnumOptions::iso())
                .unwrap()
                .filter(crate::graphs::is_forest);
            for g in forests {
                assert!(
                    check_multigraded_bound(&graph_betti(&g, q()).unwrap(), 1),
                    "{g:?}"
                );
            }
        }
    }

    #[test]
    fn quadratic_two_strands_and_shift_bounds() {
        for n in 1..=7 {
            for g in enumerate_graphs(n, EnumOptions::iso()).unwrap() {
                let gr = graph_betti(&g, q()).unwrap().graded();
                assert!(strand_report_graded(&gr).is_connected(1));
                let t = |i: usize| gr.t_shift(i);
                for a in 1..=gr.pdim() {
                    if let (Some(ta), Some(tp), Some(t1)) = (t(a), t(a - 1), t(1)) {
                        assert!(ta <= tp + t1, "{g:?} a={a}");
                    }
                    for i in 1..=3.min(a) {
                        if let (Some(ta), Some(tl), Some(ti)) = (t(a), t(a - i), t(i)) {
                            assert!(ta <= tl + ti, "{g:?} a={a} i={i}");
                        }
                    }
                }
            }
        }
    }
}

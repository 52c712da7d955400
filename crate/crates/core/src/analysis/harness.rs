//! Exhaustive checks of the theorems on all small instances of their
//! hypothesis classes.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::{check_subadditivity_graded, max_multigraded, strand_report_graded};
use crate::betti::{
    cone_betti, disjoint_sum_betti, graph_betti, hochster_betti, join_betti, koszul_oracle_betti,
    mapping_cone_betti, BettiTable, KOSZUL_MAX_VERTICES,
};
use crate::error::{Error, Result};
use crate::exactla::FieldSpec;
use crate::graphs::{
    cone_edges, cycle_vertices, enumerate_graphs, graphs_up_to, in_class_g, in_class_gprime,
    induced_matching_number, rooted_trees_up_to_iso, EnumOptions, Graph, RootedTree,
};
use crate::ideals::SquarefreeIdeal;
use crate::mask::{subsets_of_size, VertexMask};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// `t_{a+b} ≤ t_a + t_b` for `b ≤ ν(G)`.
    Indsub,
    /// `t_{a+b} ≤ t_a + t_b` for `b = ν(G) + 1`.
    Nug1,
    /// `t_{ν+1} = 2ν + 1` for connected graphs with at least two edges.
    Tb,
    /// Subadditivity on 𝒢.
    Subedge,
    /// `reg = ν` on 𝒢′.
    Greg,
    /// Strand connectivity on 𝒢′.
    GprimeStrand,
    /// Connected strands survive coning over a vertex cover.
    Strandvertex,
    /// Strand connectivity survives joins.
    Strandjoin,
    /// Multigraded bounds for unicyclic graphs by girth.
    UcMultigraded,
    /// Multigraded bounds `c + 1` / `d` for cones over vertex covers.
    ConeBound,
    /// `β_{i,a} ≤ 2` for wheels, Jahangir graphs and cones over cycles.
    JahangirBound,
    /// `β_{i,a} ≤ 2` for fans.
    FanBound,
    /// `β_{i,a} ≤ k - 1` for complete k-partite graphs.
    KpartiteBound,
    /// Subadditivity for path ideals of rooted trees.
    RootedTree,
    /// Mapping cone along every cone edge equals the direct table.
    Splitting,
    /// Cone formula equals the direct table.
    ConeFormula,
    /// Join formula equals the direct table.
    JoinFormula,
    /// Convolution for disjoint sums equals the direct table.
    DisjointSum,
    /// Hochster sweep equals the Koszul oracle.
    Oracle,
}

impl Theorem {
    pub const ALL: [Theorem; 19] = [
        Theorem::Indsub,
        Theorem::Nug1,
        Theorem::Tb,
        Theorem::Subedge,
        Theorem::Greg,
        Theorem::GprimeStrand,
        Theorem::Strandvertex,
        Theorem::Strandjoin,
        Theorem::UcMultigraded,
        Theorem::ConeBound,
        Theorem::JahangirBound,
        Theorem::FanBound,
        Theorem::KpartiteBound,
        Theorem::RootedTree,
        Theorem::Splitting,
        Theorem::ConeFormula,
        Theorem::JoinFormula,
        Theorem::DisjointSum,
        Theorem::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Indsub => "indsub",
            Theorem::Nug1 => "nug1",
            Theorem::Tb => "tb",
            Theorem::Subedge => "subedge",
            Theorem::Greg => "greg",
            Theorem::GprimeStrand => "gprime_strand",
            Theorem::Strandvertex => "strandvertex",
            Theorem::Strandjoin => "strandjoin",
            Theorem::UcMultigraded => "uc_multigraded",
            Theorem::ConeBound => "cone_bound",
            Theorem::JahangirBound => "jahangir_bound",
            Theorem::FanBound => "fan_bound",
            Theorem::KpartiteBound => "kpartite_bound",
            Theorem::RootedTree => "rooted_tree",
            Theorem::Splitting => "splitting",
            Theorem::ConeFormula => "cone_formula",
            Theorem::JoinFormula => "join_formula",
            Theorem::DisjointSum => "disjoint_sum",
            Theorem::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    /// Inline `edges:n:u-v,..` form of the offending graph.
    pub graph: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub n_max: usize,
    pub instances: usize,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A single checkable case. `check` returns a description of what went wrong.
struct Instance {
    graph: Graph,
    label: String,
    check: Box<dyn Fn(FieldSpec) -> Result<Option<String>> + Send + Sync>,
}

impl Instance {
    fn on_graph(
        g: Graph,
        check: impl Fn(&Graph, FieldSpec) -> Result<Option<String>> + Send + Sync + 'static,
    ) -> Self {
        let label = String::new();
        let h = g.clone();
        Instance {
            graph: g,
            label,
            check: Box::new(move |f| check(&h, f)),
        }
    }

    fn labeled(mut self, label: String) -> Self {
        self.label = label;
        self
    }
}

fn repro(g: &Graph) -> String {
    format!(
        "bettiforge betti --family {} --multigraded --format json",
        g.to_inline_spec()
    )
}

/// Runs `theorem` on every instance of its hypothesis class with at most
/// `n_max` vertices (for constructions, on the resulting graph).
pub fn verify_theorem(
    theorem: Theorem,
    n_max: usize,
    field: FieldSpec,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let instances = instances(theorem, n_max)?;
    let mut failures: Vec<Failure> = instances
        .par_iter()
        .map(|inst| -> Result<Option<Failure>> {
            Ok((inst.check)(field)?.map(|detail| {
                let context = if inst.label.is_empty() {
                    String::new()
                } else {
                    format!("{}; ", inst.label)
                };
                let command = match theorem {
                    Theorem::RootedTree => {
                        format!("bettiforge verify rooted_tree --n-max {}", inst.graph.n())
                    }
                    _ => repro(&inst.graph),
                };
                Failure {
                    graph: inst.graph.to_inline_spec(),
                    detail: format!("{context}{detail}; repro: {command}"),
                }
            }))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    failures.sort();
    Ok(VerificationReport {
        theorem: theorem.name().to_string(),
        n_max,
        instances: instances.len(),
        failures,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

fn all_graphs(n_max: usize) -> Result<Vec<Graph>> {
    Ok(graphs_up_to(n_max, EnumOptions::iso())?.collect())
}

fn nonempty(n_max: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(n_max)?
        .into_iter()
        .filter(|g| !g.is_trivial())
        .collect())
}

/// Every non-trivial `H` with `|V(H)| < n_max` and every vertex cover `U`.
fn covered_cones(n_max: usize) -> Result<Vec<(Graph, VertexMask)>> {
    let mut out = Vec::new();
    for h in nonempty(n_max.saturating_sub(1))? {
        for k in 1..=h.n() {
            out.extend(
                subsets_of_size(h.n(), k)
                    .filter(|&u| h.is_vertex_cover(u))
                    .map(|u| (h.clone(), u)),
            );
        }
    }
    Ok(out)
}

fn shifts_check(
    g: &Graph,
    f: FieldSpec,
    which: fn(usize, usize) -> bool,
) -> Result<Option<String>> {
    let gr = graph_betti(g, f)?.graded();
    let nu = induced_matching_number(g);
    let report = check_subadditivity_graded(&gr);
    let bad: Vec<String> = report
        .violations
        .iter()
        .filter(|v| which(v.a.min(v.b), nu) || which(v.a.max(v.b), nu))
        .map(|v| {
            format!(
                "t_{} = {} > t_{} + t_{} = {} + {}",
                v.a + v.b,
                v.t_ab,
                v.a,
                v.b,
                v.t_a,
                v.t_b
            )
        })
        .collect();
    Ok((!bad.is_empty()).then(|| format!("nu = {nu}; {}", bad.join(", "))))
}

fn bound_check(g: &Graph, f: FieldSpec, bound: u64) -> Result<Option<String>> {
    let (max, witnesses) = max_multigraded(&graph_betti(g, f)?);
    Ok((max > bound)
        .then(|| format!("max multigraded Betti number {max} > {bound} at {witnesses:?}")))
}

fn strands_connected(b: &BettiTable) -> bool {
    strand_report_graded(&b.graded()).all_connected()
}

fn instances(theorem: Theorem, n_max: usize) -> Result<Vec<Instance>> {
    let list = match theorem {
        Theorem::Indsub => all_graphs(n_max)?
            .into_iter()
            .map(|g| Instance::on_graph(g, |g, f| shifts_check(g, f, |b, nu| b <= nu)))
            .collect(),
        Theorem::Nug1 => all_graphs(n_max)?
            .into_iter()
            .map(|g| Instance::on_graph(g, |g, f| shifts_check(g, f, |b, nu| b == nu + 1)))
            .collect(),
        Theorem::Tb => graphs_up_to(n_max, EnumOptions::connected_iso())?
            .filter(|g| g.edge_count() >= 2)
            .map(|g| {
                Instance::on_graph(g, |g, f| {
                    let nu = induced_matching_number(g);
                    let t = graph_betti(g, f)?.t_shift(nu + 1);
                    Ok((t != Some(2 * nu + 1)).then(|| {
                        format!("nu = {nu}, t_{} = {t:?}, expected {}", nu + 1, 2 * nu + 1)
                    }))
                })
            })
            .collect(),
        Theorem::Subedge => all_graphs(n_max)?
            .into_iter()
            .filter(in_class_g)
            .map(|g| {
                Instance::on_graph(g, |g, f| {
                    let r = check_subadditivity_graded(&graph_betti(g, f)?.graded());
                    Ok((!r.holds).then(|| format!("violations {:?}", r.violations)))
                })
            })
            .collect(),
        Theorem::Greg => all_graphs(n_max)?
            .into_iter()
            .filter(in_class_gprime)
            .map(|g| {
                Instance::on_graph(g, |g, f| {
                    let (reg, nu) = (graph_betti(g, f)?.reg(), induced_matching_number(g));
                    Ok((reg != nu).then(|| format!("reg = {reg}, nu = {nu}")))
                })
            })
            .collect(),
        Theorem::GprimeStrand => all_graphs(n_max)?
            .into_iter()
            .filter(in_class_gprime)
            .map(|g| {
                Instance::on_graph(g, |g, f| {
                    let r = strand_report_graded(&graph_betti(g, f)?.graded());
                    Ok((!r.all_connected())
                        .then(|| format!("disconnected strands {:?}", r.strands)))
                })
            })
            .collect(),
        Theorem::Strandvertex => covered_cones(n_max)?
            .into_iter()
            .map(|(h, u)| {
                let g = h.cone_along(u).expect("cover inside H");
                Instance::on_graph(g, move |g, f| {
                    let before = strand_report_graded(&graph_betti(&h, f)?.graded());
                    let after = strand_report_graded(&graph_betti(g, f)?.graded());
                    let broken: Vec<usize> = after
                        .strands
                        .iter()
                        .filter(|s| !s.is_connected() && before.is_connected(s.j))
                        .map(|s| s.j)
                        .collect();
                    Ok((!broken.is_empty())
                        .then(|| format!("cone over {:?} along {u}: strands {broken:?} break", h)))
                })
            })
            .collect(),
        Theorem::Strandjoin => {
            let mut out = Vec::new();
            for m in 1..n_max {
                for n in m..=n_max - m {
                    let left: Vec<Graph> = enumerate_graphs(m, EnumOptions::iso())?.collect();
                    for g in &left {
                        for h in enumerate_graphs(n, EnumOptions::iso())? {
                            let (g, h) = (g.clone(), h);
                            let joined = g.join(&h)?;
                            out.push(Instance::on_graph(joined, move |j, f| {
                                if !strands_connected(&graph_betti(&g, f)?)
                                    || !strands_connected(&graph_betti(&h, f)?)
                                {
                                    return Ok(None);
                                }
                                let r = strand_report_graded(&graph_betti(j, f)?.graded());
                                Ok((!r.all_connected())
                                    .then(|| format!("join of {g:?} and {h:?}: {:?}", r.strands)))
                            }));
                        }
                    }
                }
            }
            out
        }
        Theorem::UcMultigraded => graphs_up_to(
            n_max,
            EnumOptions {
                unicyclic: true,
                ..EnumOptions::iso()
            },
        )?
        .map(|g| Instance::on_graph(g, unicyclic_check))
        .collect(),
        Theorem::ConeBound => covered_cones(n_max)?
            .into_iter()
            .map(|(h, u)| {
                let g = h.cone_along(u).expect("cover inside H");
                Instance::on_graph(g, move |g, f| {
                    let (c, d) = linear_and_beyond_max(&graph_betti(&h, f)?);
                    let (gc, gd) = linear_and_beyond_max(&graph_betti(g, f)?);
                    Ok((gc > c + 1 || gd > d).then(|| {
                        format!("base {h:?} along {u}: c = {c}, d = {d}; cone has {gc}, {gd}")
                    }))
                })
            })
            .collect(),
        Theorem::JahangirBound => {
            let mut graphs = Vec::new();
            for n in 3..n_max {
                let c = Graph::cycle(n)?;
                for k in 1..=n {
                    graphs.extend(subsets_of_size(n, k).filter(|&u| c.is_vertex_cover(u)).map(
                        |u| {
                            (
                                c.cone_along(u).expect("cover inside cycle"),
                                format!("cone over C_{n} along {u}"),
                            )
                        },
                    ));
                }
                graphs.push((Graph::wheel(n)?, format!("W_{n}")));
            }
            for n in 2..=n_max.saturating_sub(1) / 2 {
                graphs.push((Graph::jahangir(n)?, format!("J_2,{n}")));
            }
            graphs
                .into_iter()
                .map(|(g, l)| Instance::on_graph(g, |g, f| bound_check(g, f, 2)).labeled(l))
                .collect()
        }
        Theorem::FanBound => {
            let mut out = Vec::new();
            for n in 2..n_max {
                for m in 1..=n_max - n {
                    out.push(
                        Instance::on_graph(Graph::fan(m, n)?, |g, f| bound_check(g, f, 2))
                            .labeled(format!("F_{m},{n}")),
                    );
                }
            }
            out
        }
        Theorem::KpartiteBound => partitions(n_max)
            .into_iter()
            .filter(|p| p.len() >= 2)
            .map(|p| {
                let k = p.len() as u64;
                let g = Graph::complete_multipartite(&p).expect("small partition");
                Instance::on_graph(g, move |g, f| bound_check(g, f, k - 1))
                    .labeled(format!("parts {p:?}"))
            })
            .collect(),
        Theorem::RootedTree => rooted_tree_instances(n_max)?,
        Theorem::Splitting => nonempty(n_max)?
            .into_iter()
            .map(|g| {
                Instance::on_graph(g, |g, f| {
                    let want = graph_betti(g, f)?;
                    for e in cone_edges(g) {
                        if mapping_cone_betti(g, e, f)? != want {
                            return Ok(Some(format!("mapping cone along {e:?} differs")));
                        }
                    }
                    Ok(None)
                })
            })
            .collect(),
        Theorem::ConeFormula => covered_cones(n_max)?
            .into_iter()
            .map(|(h, u)| {
                let g = h.cone_along(u).expect("cover inside H");
                Instance::on_graph(g, move |g, f| {
                    let ok = cone_betti(&h, u, f)? == graph_betti(g, f)?.graded();
                    Ok((!ok).then(|| format!("cone formula differs for {h:?} along {u}")))
                })
            })
            .collect(),
        Theorem::JoinFormula => {
            let mut out = Vec::new();
            for m in 1..n_max {
                for n in 1..=n_max - m {
                    let left: Vec<Graph> = enumerate_graphs(m, EnumOptions::iso())?.collect();
                    for g in &left {
                        for h in enumerate_graphs(n, EnumOptions::iso())? {
                            let g = g.clone();
                            out.push(Instance::on_graph(g.join(&h)?, move |j, f| {
                                let got = join_betti(
                                    &graph_betti(&g, f)?.graded(),
                                    &graph_betti(&h, f)?.graded(),
                                )?;
                                Ok((got != graph_betti(j, f)?.graded())
                                    .then(|| format!("join formula differs for {g:?} * {h:?}")))
                            }));
                        }
                    }
                }
            }
            out
        }
        Theorem::DisjointSum => {
            let mut out = Vec::new();
            for g in all_graphs(n_max)?
                .into_iter()
                .filter(|g| g.components().len() >= 2)
            {
                let comps = g.components();
                // split off the first component against the rest
                let first = comps[0];
                let g2 = g.clone();
                out.push(Instance::on_graph(g, move |g, f| {
                    let part =
                        |keep: VertexMask| g2.remove_vertices(g2.vertices() - keep).edge_ideal();
                    let (a, b) = (part(first), part(g2.vertices() - first));
                    let got = disjoint_sum_betti(&hochster_betti(&a, f)?, &hochster_betti(&b, f)?)?;
                    Ok((got != graph_betti(g, f)?).then(|| "convolution differs".to_string()))
                }));
            }
            out
        }
        Theorem::Oracle => {
            if n_max > KOSZUL_MAX_VERTICES {
                return Err(Error::SweepTooLarge {
                    n: n_max,
                    limit: KOSZUL_MAX_VERTICES,
                });
            }
            graphs_up_to(n_max, EnumOptions::connected_iso())?
                .map(|g| {
                    Instance::on_graph(g, |g, f| {
                        let ideal = g.edge_ideal();
                        Ok(
                            (hochster_betti(&ideal, f)? != koszul_oracle_betti(&ideal, f)?)
                                .then(|| "tables differ".to_string()),
                        )
                    })
                })
                .collect()
        }
    };
    Ok(list)
}

/// Largest `β_{i,a}` with `|a| = i + 1`, and with `|a| > i + 1`, over `i ≥ 1`.
fn linear_and_beyond_max(b: &BettiTable) -> (u64, u64) {
    let mut c = 0;
    let mut d = 0;
    for ((i, a), v) in b.iter().filter(|&((i, _), _)| i >= 1) {
        if a.len() == i + 1 {
            c = c.max(v);
        } else {
            d = d.max(v);
        }
    }
    (c, d)
}

fn unicyclic_check(g: &Graph, f: FieldSpec) -> Result<Option<String>> {
    let cycle = cycle_vertices(g).expect("filtered to unicyclic graphs");
    let girth = cycle.len();
    let b = graph_betti(g, f)?;
    let (max, witnesses) = max_multigraded(&b);
    if !girth.is_multiple_of(3) {
        return Ok((max > 1).then(|| format!("girth {girth}: max {max} > 1 at {witnesses:?}")));
    }
    if max > 2 {
        return Ok(Some(format!(
            "girth {girth}: max {max} > 2 at {witnesses:?}"
        )));
    }
    // distance at most two from the cycle
    let near = g.closed_neighbors_of(g.closed_neighbors_of(cycle));
    if near == g.vertices() {
        let k = girth / 3;
        let twos: Vec<(usize, VertexMask)> = b
            .iter()
            .filter(|&((i, _), v)| i >= 1 && v == 2)
            .map(|(key, _)| key)
            .collect();
        if twos != vec![(2 * k, cycle)] {
            return Ok(Some(format!(
                "girth {girth}: value-2 entries {twos:?}, expected only (i = {}, {cycle})",
                2 * k
            )));
        }
    }
    Ok(None)
}

/// Integer partitions of every total `2..=n_max`, parts non-increasing.
fn partitions(n_max: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=cap.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for total in 2..=n_max {
        go(total, total, &mut Vec::new(), &mut out);
    }
    out
}

fn rooted_tree_instances(n_max: usize) -> Result<Vec<Instance>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for tree in rooted_trees_up_to_iso(n) {
            for t in 1..=tree.height() + 1 {
                let ideal = tree.t_path_ideal(t)?;
                out.push(path_ideal_instance(tree.clone(), t, ideal));
            }
        }
    }
    Ok(out)
}

fn path_ideal_instance(tree: RootedTree, t: usize, ideal: SquarefreeIdeal) -> Instance {
    let label = format!(
        "parents {:?}, t = {t}, ideal {ideal}",
        (0..tree.n()).map(|v| tree.parent(v)).collect::<Vec<_>>()
    );
    Instance::on_graph(tree.to_graph(), move |_, f| {
        let r = check_subadditivity_graded(&hochster_betti(&ideal, f)?.graded());
        Ok((!r.holds).then(|| format!("violations {:?}", r.violations)))
    })
    .labeled(label)
}

/// Parses `name` and runs [`verify_theorem`].
pub fn verify_by_name(name: &str, n_max: usize, field: FieldSpec) -> Result<VerificationReport> {
    verify_theorem(name.parse()?, n_max, field)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(t.name().parse::<Theorem>().unwrap(), t);
        }
        assert!(matches!(
            "nope".parse::<Theorem>(),
            Err(Error::UnknownTheorem(_))
        ));
    }

    #[test]
    fn every_theorem_passes_at_small_size() {
        for t in Theorem::ALL {
            let r = verify_theorem(t, 5, FieldSpec::RATIONALS).unwrap();
            if t == Theorem::JahangirBound {
                // K_4 = W_3 carries a multigraded Betti number of 3
                let k4 = Graph::complete(4).unwrap().to_inline_spec();
                assert!(r.failures.iter().all(|f| f.graph == k4), "{t}: {:?}", r.failures);
                continue;
            }
            assert!(r.passed(), "{t}: {:?}", r.failures);
            assert!(r.instances > 0, "{t} has no instances");
        }
    }

    #[test]
    fn failures_carry_repro_commands() {
        // false claim on purpose: every graph has at most one Betti number per multidegree
        let g = Graph::cycle(6).unwrap();
        let inst = Instance::on_graph(g.clone(), |g, f| bound_check(g, f, 1));
        let detail = (inst.check)(FieldSpec::RATIONALS).unwrap().unwrap();
        assert!(detail.contains("max multigraded Betti number 2"));
        assert!(repro(&g).contains("--family edges:6:0-1,0-5,1-2,2-3,3-4,4-5"));
    }

    #[test]
    fn partitions_cover_small_totals() {
        let p = partitions(4);
        assert_eq!(p.len(), 2 + 3 + 5);
        assert!(p.contains(&vec![2, 1, 1]));
    }

    #[test]
    fn report_serializes() {
        let r = verify_theorem(Theorem::Tb, 4, FieldSpec::RATIONALS).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["theorem"], "tb");
        assert_eq!(v["n_max"], 4);
        assert!(v["failures"].as_array().unwrap().is_empty());
        assert!(v["elapsed_ms"].is_u64());
    }
}

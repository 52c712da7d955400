//! Exhaustive search for counterexamples to open questions on strand
//! connectivity of edge ideals. Finding none is evidence, not proof, and the
//! report wording says exactly that.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::strand_report_graded;
use crate::betti::graph_betti;
use crate::error::Result;
use crate::exactla::FieldSpec;
use crate::graphs::{
    canonical_form, graphs_up_to, induced_matching_number, CanonicalForm, EnumOptions, Graph,
};
use crate::mask::VertexMask;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuestionOutcome {
    pub id: usize,
    pub question: String,
    pub graphs_checked: usize,
    pub counterexamples: Vec<String>,
    pub conclusion: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OpenQuestionReport {
    pub n_max: usize,
    pub field_char: u32,
    pub questions: Vec<QuestionOutcome>,
}

struct Facts {
    graph: Graph,
    connected_strands: bool,
    /// `j` values whose strand is disconnected.
    broken: Vec<usize>,
    reg: usize,
    nu: usize,
}

const QUESTIONS: [&str; 3] = [
    "If I(G) is strand connected, is I(H) strand connected for every non-trivial induced subgraph H?",
    "If reg(R/I(G)) = nu(G), is I(G) strand connected?",
    "If j <= nu(G), is the j-strand of I(G) connected?",
];

/// Scans every graph on at most `n_max` vertices (up to isomorphism).
pub fn search_open_questions(n_max: usize, field: FieldSpec) -> Result<OpenQuestionReport> {
    let graphs: Vec<Graph> = graphs_up_to(n_max, EnumOptions::iso())?.collect();
    let facts: Vec<Facts> = graphs
        .into_par_iter()
        .map(|g| -> Result<Facts> {
            let gr = graph_betti(&g, field)?.graded();
            let report = strand_report_graded(&gr);
            let broken = report
                .strands
                .iter()
                .filter(|s| !s.is_connected())
                .map(|s| s.j)
                .collect::<Vec<_>>();
            Ok(Facts {
                connected_strands: broken.is_empty(),
                broken,
                reg: gr.reg(),
                nu: induced_matching_number(&g),
                graph: g,
            })
        })
        .collect::<Result<_>>()?;
    let by_form: HashMap<CanonicalForm, bool> = facts
        .iter()
        .map(|f| {
            (
                canonical_form(&f.graph).expect("within enumeration bound"),
                f.connected_strands,
            )
        })
        .collect();

    let nontrivial: Vec<&Facts> = facts.iter().filter(|f| !f.graph.is_trivial()).collect();

    let mut q1: Vec<String> = nontrivial
        .par_iter()
        .filter(|f| f.connected_strands)
        .flat_map_iter(|f| {
            let g = &f.graph;
            (1u32..(1 << g.n()) - 1)
                .map(VertexMask::from_bits)
                .filter(|&w| {
                    let h = g.induced_subgraph(w);
                    // isolated vertices do not change Betti numbers
                    !h.is_trivial() && !by_form[&canonical_form(&h).expect("smaller graph")]
                })
                .map(|w| format!("{} induced on {w}", g.to_inline_spec()))
                .collect::<Vec<_>>()
        })
        .collect();
    let mut q2: Vec<String> = nontrivial
        .iter()
        .filter(|f| f.reg == f.nu && !f.connected_strands)
        .map(|f| {
            format!(
                "{} (reg = nu = {}, broken strands {:?})",
                f.graph.to_inline_spec(),
                f.nu,
                f.broken
            )
        })
        .collect();
    let mut q3: Vec<String> = nontrivial
        .iter()
        .filter(|f| f.broken.iter().any(|&j| j <= f.nu))
        .map(|f| {
            format!(
                "{} (nu = {}, broken strands {:?})",
                f.graph.to_inline_spec(),
                f.nu,
                f.broken
            )
        })
        .collect();
    for list in [&mut q1, &mut q2, &mut q3] {
        list.sort();
    }
    let checked = nontrivial.len();
    let questions = [q1, q2, q3]
        .into_iter()
        .enumerate()
        .map(|(k, counterexamples)| QuestionOutcome {
            id: k + 1,
            question: QUESTIONS[k].to_string(),
            graphs_checked: checked,
            conclusion: if counterexamples.is_empty() {
                format!("no counterexample up to n = {n_max}")
            } else {
                format!(
                    "{} counterexample(s) found up to n = {n_max}",
                    counterexamples.len()
                )
            },
            counterexamples,
        })
        .collect();
    Ok(OpenQuestionReport {
        n_max,
        field_char: field.characteristic(),
        questions,
    })
}

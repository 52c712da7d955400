use rayon::prelude::*;

use super::BettiTable;
use crate::error::{Error, Result};
use crate::exactla::FieldSpec;
use crate::graphs::Graph;
use crate::ideals::SquarefreeIdeal;
use crate::mask::VertexMask;

/// Default cap on the ground set for a full sweep over all `2^n` multidegrees.
pub const HOCHSTER_MAX_VERTICES: usize = 16;

/// `β_{i,W}(R/I) = dim H̃_{|W|-i-1}(Δ[W])` over every `W`, where `Δ` is the
/// Stanley-Reisner complex of `I`. Refuses ground sets above
/// [`HOCHSTER_MAX_VERTICES`].
pub fn hochster_betti(ideal: &SquarefreeIdeal, field: FieldSpec) -> Result<BettiTable> {
    let n = ideal.ground_size();
    if n > HOCHSTER_MAX_VERTICES {
        return Err(Error::SweepTooLarge {
            n,
            limit: HOCHSTER_MAX_VERTICES,
        });
    }
    Ok(hochster_betti_unchecked(ideal, field))
}

/// [`hochster_betti`] without the size cap.
pub fn hochster_betti_unchecked(ideal: &SquarefreeIdeal, field: FieldSpec) -> BettiTable {
    let n = ideal.ground_size();
    let complex = ideal.stanley_reisner_complex();
    let gens = ideal.generators();
    let total: usize = 1 << n;
    let entries: Vec<((usize, VertexMask), u64)> = (1..total)
        .into_par_iter()
        .with_min_len(64)
        .flat_map_iter(|bits| {
            let w = VertexMask::from_bits(bits as u32);
            // a vertex of W outside every generator inside W is a cone point
            let covered = gens
                .iter()
                .filter(|g| g.is_subset_of(w))
                .fold(VertexMask::EMPTY, |acc, &g| acc | g);
            let homology = if covered == w {
                Some(complex.restrict(w).reduced_homology_dims(field))
            } else {
                None
            };
            let size = w.len();
            homology.into_iter().flat_map(move |h| {
                // entry d of the slice is dim H̃_{d-1}, so i = |W| - d
                h.as_slice()
                    .iter()
                    .enumerate()
                    .filter(|&(_, &dim)| dim > 0)
                    .map(move |(d, &dim)| ((size - d, w), dim as u64))
                    .collect::<Vec<_>>()
            })
        })
        .collect();
    BettiTable::from_entries(
        n,
        field,
        std::iter::once(((0, VertexMask::EMPTY), 1)).chain(entries),
    )
}

/// Betti table of `R/I(G)`.
pub fn graph_betti(g: &Graph, field: FieldSpec) -> Result<BettiTable> {
    hochster_betti(&g.edge_ideal(), field)
}

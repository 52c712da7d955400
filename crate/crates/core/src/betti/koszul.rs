//! Betti numbers from the Koszul complex `K(x_0, .., x_{n-1}) ⊗ R/I`, one
//! squarefree multidegree at a time. Shares no code with the simplicial path
//! and is only meant for cross-checking on tiny inputs.

use super::BettiTable;
use crate::error::{Error, Result};
use crate::exactla::FieldSpec;
use crate::ideals::SquarefreeIdeal;
use crate::mask::VertexMask;

pub const KOSZUL_MAX_VERTICES: usize = 6;

/// Only squarefree multidegrees are examined.
pub fn koszul_oracle_betti(ideal: &SquarefreeIdeal, field: FieldSpec) -> Result<BettiTable> {
    let n = ideal.ground_size();
    if n > KOSZUL_MAX_VERTICES {
        return Err(Error::SweepTooLarge {
            n,
            limit: KOSZUL_MAX_VERTICES,
        });
    }
    let mut entries = Vec::new();
    for bits in 0u32..(1 << n) {
        let a = VertexMask::from_bits(bits);
        // basis of K_i in degree a: e_S ⊗ x^{a∖S} with |S| = i and x^{a∖S} ∉ I
        let basis: Vec<Vec<u32>> = (0..=a.len())
            .map(|i| {
                (0..=bits)
                    .filter(|&s| s & !bits == 0 && s.count_ones() as usize == i)
                    .filter(|&s| !ideal.contains_monomial(VertexMask::from_bits(bits & !s)))
                    .collect()
            })
            .collect();
        let ranks: Vec<usize> = (0..=a.len() + 1)
            .map(|i| {
                if i == 0 || i > a.len() {
                    0
                } else {
                    matrix_rank(differential(&basis[i], &basis[i - 1]), field)
                }
            })
            .collect();
        for i in 0..=a.len() {
            let h = basis[i].len() - ranks[i] - ranks[i + 1];
            if h > 0 {
                entries.push(((i, a), h as u64));
            }
        }
    }
    Ok(BettiTable::from_entries(n, field, entries))
}

/// `d(e_S ⊗ m) = Σ_k (-1)^k e_{S∖s_k} ⊗ x_{s_k} m`, dropping targets that vanish in `R/I`.
fn differential(source: &[u32], target: &[u32]) -> Vec<Vec<i64>> {
    let mut rows = vec![vec![0i64; source.len()]; target.len()];
    for (c, &s) in source.iter().enumerate() {
        let mut k = 0;
        for v in 0..32 {
            if s >> v & 1 == 0 {
                continue;
            }
            if let Some(r) = target.iter().position(|&t| t == s & !(1 << v)) {
                rows[r][c] = if k % 2 == 0 { 1 } else { -1 };
            }
            k += 1;
        }
    }
    rows
}

fn matrix_rank(mut rows: Vec<Vec<i64>>, field: FieldSpec) -> usize {
    let p = field.characteristic() as i64;
    if p != 0 {
        for row in rows.iter_mut() {
            for x in row.iter_mut() {
                *x = x.rem_euclid(p);
            }
        }
    }
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in 0..rows.len() {
            if r == rank || rows[r][c] == 0 {
                continue;
            }
            let (a, b) = (rows[rank][c], rows[r][c]);
            #[allow(clippy::needless_range_loop)]
            for k in 0..cols {
                let v = if p == 0 {
                    a * rows[r][k] - b * rows[rank][k]
                } else {
                    (a * rows[r][k] - b * rows[rank][k]).rem_euclid(p)
                };
                rows[r][k] = v;
            }
            if p == 0 {
                let g = rows[r].iter().fold(0i64, |g, &x| num_integer::gcd(g, x));
                if g > 1 {
                    rows[r].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::Graph;

    #[test]
    fn single_edge_and_small_graphs() {
        let q = FieldSpec::RATIONALS;
        let b = koszul_oracle_betti(&Graph::path(2).unwrap().edge_ideal(), q).unwrap();
        assert_eq!(b.get(1, VertexMask::full(2)), 1);
        assert_eq!(b.len(), 2);
        let c4 = koszul_oracle_betti(&Graph::cycle(4).unwrap().edge_ideal(), q)
            .unwrap()
            .graded();
        assert_eq!(
            (c4.get(1, 2), c4.get(2, 3), c4.get(2, 4), c4.get(3, 4)),
            (4, 4, 0, 1)
        );
        let p5 = koszul_oracle_betti(&Graph::path(5).unwrap().edge_ideal(), q)
            .unwrap()
            .graded();
        assert_eq!(p5.get(1, 2), 4);
    }

    #[test]
    fn rank_examples() {
        let q = FieldSpec::RATIONALS;
        assert_eq!(matrix_rank(vec![vec![2, 4], vec![1, 2]], q), 1);
        assert_eq!(matrix_rank(vec![vec![1, 1], vec![1, -1]], q), 2);
        assert_eq!(
            matrix_rank(vec![vec![1, 1], vec![1, -1]], FieldSpec::new(2).unwrap()),
            1
        );
    }

    #[test]
    fn size_guard() {
        assert!(koszul_oracle_betti(&SquarefreeIdeal::zero(7), FieldSpec::RATIONALS).is_err());
    }
}

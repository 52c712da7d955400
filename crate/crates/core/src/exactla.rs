//! Exact rank over the rationals and over prime fields.
//!
//! Characteristic zero never touches floating point: dense matrices go through
//! fraction-free (Bareiss) elimination, sparse ones through integer row
//! combination with content reduction. Both run on `i128` first and redo the
//! work on big integers if an intermediate value overflows.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Column count above which elimination switches to the sparse path.
pub const DENSE_COLUMN_LIMIT: usize = 4096;

/// Coefficient field: `0` for the rationals, otherwise a prime `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    characteristic: u32,
}

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec { characteristic: 0 };

    pub fn new(characteristic: u32) -> Result<Self> {
        if characteristic == 0 || (characteristic < (1 << 31) && is_prime(characteristic)) {
            Ok(FieldSpec { characteristic })
        } else {
            Err(Error::InvalidField(characteristic))
        }
    }

    pub fn characteristic(self) -> u32 {
        self.characteristic
    }

    pub fn is_rational(self) -> bool {
        self.characteristic == 0
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        Self::RATIONALS
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = n as u64;
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Integer matrix in coordinate form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, i64)>,
}

impl SparseMatrix {
    /// Checks bounds and rejects repeated positions. Zero coefficients are dropped.
    pub fn new(rows: usize, cols: usize, entries: Vec<(usize, usize, i64)>) -> Result<Self> {
        let mut seen = std::collections::HashSet::with_capacity(entries.len());
        for &(r, c, _) in &entries {
            if r >= rows || c >= cols {
                return Err(Error::InvalidParameter(format!(
                    "entry ({r}, {c}) outside a {rows}x{cols} matrix"
                )));
            }
            if !seen.insert((r, c)) {
                return Err(Error::InvalidParameter(format!(
                    "duplicate entry at ({r}, {c})"
                )));
            }
        }
        Ok(Self::from_parts(rows, cols, entries))
    }

    pub(crate) fn from_parts(
        rows: usize,
        cols: usize,
        mut entries: Vec<(usize, usize, i64)>,
    ) -> Self {
        entries.retain(|e| e.2 != 0);
        SparseMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        SparseMatrix {
            rows: n,
            cols: n,
            entries: (0..n).map(|i| (i, i, 1)).collect(),
        }
    }

    /// Builds from row-major dense data; all rows must have equal length.
    pub fn from_dense(data: &[Vec<i64>]) -> Self {
        let rows = data.len();
        let cols = data.first().map_or(0, Vec::len);
        let mut entries = Vec::new();
        for (r, row) in data.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged dense matrix");
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    entries.push((r, c, v));
                }
            }
        }
        SparseMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[(usize, usize, i64)] {
        &self.entries
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut d = vec![vec![0i64; self.cols]; self.rows];
        for &(r, c, v) in &self.entries {
            d[r][c] = v;
        }
        d
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self.entries.iter().map(|&(r, c, v)| (c, r, v)).collect(),
        }
    }

    /// Exact product; `None` on dimension mismatch.
    pub fn mul(&self, rhs: &SparseMatrix) -> Option<SparseMatrix> {
        if self.cols != rhs.rows {
            return None;
        }
        let mut by_row: Vec<Vec<(usize, i64)>> = vec![Vec::new(); rhs.rows];
        for &(r, c, v) in &rhs.entries {
            by_row[r].push((c, v));
        }
        let mut acc: HashMap<(usize, usize), i64> = HashMap::new();
        for &(r, k, a) in &self.entries {
            for &(c, b) in &by_row[k] {
                *acc.entry((r, c)).or_insert(0) += a * b;
            }
        }
        let mut entries: Vec<_> = acc.into_iter().map(|((r, c), v)| (r, c, v)).collect();
        entries.sort_unstable();
        Some(SparseMatrix::from_parts(self.rows, rhs.cols, entries))
    }
}

/// Elimination route. `Auto` is what [`rank`] uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Elimination {
    Auto,
    Dense,
    Sparse,
}

pub fn rank(m: &SparseMatrix, field: FieldSpec) -> usize {
    rank_with(m, field, Elimination::Auto)
}

pub fn rank_with(m: &SparseMatrix, field: FieldSpec, strategy: Elimination) -> usize {
    if m.entries.is_empty() {
        return 0;
    }
    let dense = match strategy {
        Elimination::Auto => m.cols <= DENSE_COLUMN_LIMIT,
        Elimination::Dense => true,
        Elimination::Sparse => false,
    };
    let p = field.characteristic() as u64;
    match (field.is_rational(), dense) {
        (true, true) => bareiss_rank::<i128>(m)
            .unwrap_or_else(|| bareiss_rank::<BigInt>(m).expect("bigint cannot overflow")),
        (true, false) => sparse_int_rank::<i128>(m)
            .unwrap_or_else(|| sparse_int_rank::<BigInt>(m).expect("bigint cannot overflow")),
        (false, true) => dense_mod_rank(m, p),
        (false, false) => sparse_mod_rank(m, p),
    }
}

trait ExactInt: Clone + Zero + One + Signed + Integer + CheckedMul + CheckedSub + From<i64> {}
impl<T: Clone + Zero + One + Signed + Integer + CheckedMul + CheckedSub + From<i64>> ExactInt
    for T
{
}

/// Fraction-free elimination to echelon form; every intermediate entry is a
/// minor of the input, so each division by the previous pivot is exact.
fn bareiss_rank<T: ExactInt>(m: &SparseMatrix) -> Option<usize> {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<T>> = vec![vec![T::zero(); cols]; rows];
    for &(r, c, v) in &m.entries {
        a[r][c] = T::from(v);
    }
    let mut prev = T::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let lead = std::mem::replace(&mut row[c], T::zero());
            for j in c + 1..cols {
                let x = pivot
                    .checked_mul(&row[j])?
                    .checked_sub(&lead.checked_mul(&pivot_row[j])?)?;
                debug_assert!(x.is_multiple_of(&prev));
                row[j] = x / prev.clone();
            }
        }
        prev = pivot;
        rank += 1;
    }
    Some(rank)
}

fn sparse_rows<T: From<i64>>(m: &SparseMatrix) -> Vec<Vec<(usize, T)>> {
    let mut rows: Vec<Vec<(usize, i64)>> = vec![Vec::new(); m.rows];
    for &(r, c, v) in &m.entries {
        rows[r].push((c, v));
    }
    rows.into_iter()
        .filter(|r| !r.is_empty())
        .map(|mut r| {
            r.sort_unstable_by_key(|e| e.0);
            r.into_iter().map(|(c, v)| (c, T::from(v))).collect()
        })
        .collect()
}

/// `a * x - b * y` over sorted sparse rows, dropping zeros.
fn combine<T: ExactInt>(
    a: &T,
    x: &[(usize, T)],
    b: &T,
    y: &[(usize, T)],
) -> Option<Vec<(usize, T)>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (col, val) = match (x.get(i), y.get(j)) {
            (Some(&(cx, ref vx)), Some(&(cy, _))) if cx < cy => {
                i += 1;
                (cx, a.checked_mul(vx)?)
            }
            (Some(&(cx, _)), Some(&(cy, ref vy))) if cy < cx => {
                j += 1;
                (cy, T::zero().checked_sub(&b.checked_mul(vy)?)?)
            }
            (Some(&(cx, ref vx)), Some((_, vy))) => {
                i += 1;
                j += 1;
                (cx, a.checked_mul(vx)?.checked_sub(&b.checked_mul(vy)?)?)
            }
            (Some(&(cx, ref vx)), None) => {
                i += 1;
                (cx, a.checked_mul(vx)?)
            }
            (None, Some(&(cy, ref vy))) => {
                j += 1;
                (cy, T::zero().checked_sub(&b.checked_mul(vy)?)?)
            }
            (None, None) => unreachable!(),
        };
        if !val.is_zero() {
            out.push((col, val));
        }
    }
    Some(out)
}

fn remove_content<T: ExactInt>(row: &mut [(usize, T)]) {
    let mut g = T::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() {
        for (_, v) in row.iter_mut() {
            *v = v.clone() / g.clone();
        }
    }
}

fn sparse_int_rank<T: ExactInt>(m: &SparseMatrix) -> Option<usize> {
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::new();
    for mut row in sparse_rows::<T>(m) {
        while let Some((c, lead)) = row.first().cloned() {
            match pivots.get(&c) {
                Some(p) => {
                    row = combine(&p[0].1, &row, &lead, p)?;
                    remove_content(&mut row);
                }
                None => {
                    pivots.insert(c, row);
                    break;
                }
            }
        }
    }
    Some(pivots.len())
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // a^(p-2) mod p
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn to_mod(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

fn dense_mod_rank(m: &SparseMatrix, p: u64) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = vec![vec![0u64; cols]; rows];
    for &(r, c, v) in &m.entries {
        a[r][c] = to_mod(v, p);
    }
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = inv_mod(a[rank][c], p);
        for x in a[rank][c..].iter_mut() {
            *x = *x * inv % p;
        }
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest.iter_mut() {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for j in c..cols {
                row[j] = (row[j] + (p - f) * pivot_row[j]) % p;
            }
        }
        rank += 1;
    }
    rank
}

fn sparse_mod_rank(m: &SparseMatrix, p: u64) -> usize {
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    for row in sparse_rows::<i64>(m) {
        let mut row: Vec<(usize, u64)> = row
            .into_iter()
            .map(|(c, v)| (c, to_mod(v, p)))
            .filter(|e| e.1 != 0)
            .collect();
        while let Some(&(c, lead)) = row.first() {
            match pivots.get(&c) {
                Some(piv) => {
                    // row - lead * piv, pivot rows are monic
                    let mut out = Vec::with_capacity(row.len() + piv.len());
                    let (mut i, mut j) = (0, 0);
                    while i < row.len() || j < piv.len() {
                        let (col, val) = match (row.get(i), piv.get(j)) {
                            (Some(&(cx, vx)), Some(&(cy, _))) if cx < cy => {
                                i += 1;
                                (cx, vx)
                            }
                            (Some(&(cx, _)), Some(&(cy, vy))) if cy < cx => {
                                j += 1;
                                (cy, (p - lead) * vy % p)
                            }
                            (Some(&(cx, vx)), Some(&(_, vy))) => {
                                i += 1;
                                j += 1;
                                (cx, (vx + (p - lead) * vy) % p)
                            }
                            (Some(&(cx, vx)), None) => {
                                i += 1;
                                (cx, vx)
                            }
                            (None, Some(&(cy, vy))) => {
                                j += 1;
                                (cy, (p - lead) * vy % p)
                            }
                            (None, None) => unreachable!(),
                        };
                        if val != 0 {
                            out.push((col, val));
                        }
                    }
                    row = out;
                }
                None => {
                    let inv = inv_mod(lead, p);
                    for e in row.iter_mut() {
                        e.1 = e.1 * inv % p;
                    }
                    pivots.insert(c, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

//! Fixed-width vertex subsets.
//!
//! A [`VertexMask`] is a subset of a ground set `{0, .., n-1}` with `n <= 32`.
//! The same type doubles as a squarefree multidegree: bit `v` set means the
//! exponent of `x_v` is one.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use serde::{Deserialize, Serialize};

/// Largest ground set a mask can address.
pub const MAX_VERTICES: usize = 32;

#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexMask(u32);

impl VertexMask {
    pub const EMPTY: VertexMask = VertexMask(0);

    #[inline]
    pub const fn from_bits(bits: u32) -> Self {
        VertexMask(bits)
    }

    #[inline]
    pub const fn bits(self) -> u32 {
        self.0
    }

    /// All of `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        assert!(
            n <= MAX_VERTICES,
            "ground set of size {n} exceeds {MAX_VERTICES}"
        );
        if n == MAX_VERTICES {
            VertexMask(u32::MAX)
        } else {
            VertexMask((1u32 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        assert!(v < MAX_VERTICES, "vertex {v} out of mask range");
        VertexMask(1 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        vs.into_iter()
            .fold(Self::EMPTY, |m, v| m | Self::singleton(v))
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1 << v) != 0
    }

    #[inline]
    pub const fn is_subset_of(self, other: VertexMask) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: VertexMask) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub const fn with(self, v: usize) -> Self {
        VertexMask(self.0 | (1 << v))
    }

    #[inline]
    pub const fn without(self, v: usize) -> Self {
        VertexMask(self.0 & !(1 << v))
    }

    /// Index of the lowest set bit.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Highest vertex index plus one, or zero for the empty mask.
    #[inline]
    pub fn span(self) -> usize {
        (32 - self.0.leading_zeros()) as usize
    }

    /// Vertices in ascending order.
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Relabels `self` into the coordinates of `frame`: the `r`-th smallest
    /// vertex of `frame` becomes vertex `r`. Bits outside `frame` are dropped.
    pub fn compress(self, frame: VertexMask) -> VertexMask {
        let mut out = 0u32;
        for (r, v) in frame.iter().enumerate() {
            if self.contains(v) {
                out |= 1 << r;
            }
        }
        VertexMask(out)
    }

    /// Inverse of [`compress`](Self::compress).
    pub fn expand(self, frame: VertexMask) -> VertexMask {
        let mut out = 0u32;
        for (r, v) in frame.iter().enumerate() {
            if self.contains(r) {
                out |= 1 << v;
            }
        }
        VertexMask(out)
    }

    /// Shifts every vertex up by `offset`.
    pub fn shifted(self, offset: usize) -> VertexMask {
        if self.is_empty() {
            return self;
        }
        assert!(self.span() + offset <= MAX_VERTICES, "shift overflows mask");
        VertexMask(self.0 << offset)
    }
}

pub struct Vertices(u32);

impl Iterator for Vertices {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Vertices {}

impl BitOr for VertexMask {
    type Output = VertexMask;
    #[inline]
    fn bitor(self, rhs: Self) -> Self {
        VertexMask(self.0 | rhs.0)
    }
}

impl BitAnd for VertexMask {
    type Output = VertexMask;
    #[inline]
    fn bitand(self, rhs: Self) -> Self {
        VertexMask(self.0 & rhs.0)
    }
}

impl Sub for VertexMask {
    type Output = VertexMask;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        VertexMask(self.0 & !rhs.0)
    }
}

impl Not for VertexMask {
    type Output = VertexMask;
    #[inline]
    fn not(self) -> Self {
        VertexMask(!self.0)
    }
}

impl fmt::Debug for VertexMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// All masks with exactly `k` bits drawn from the lowest `n`, in ascending
/// numeric order.
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = VertexMask> {
    assert!(n <= MAX_VERTICES);
    let limit: u64 = 1u64 << n;
    let start: u64 = if k > n { limit } else { (1u64 << k) - 1 };
    let mut cur = Some(start);
    std::iter::from_fn(move || {
        let c = cur?;
        if c >= limit {
            cur = None;
            return None;
        }
        cur = if c == 0 {
            None
        } else {
            // Gosper's hack
            let low = c & c.wrapping_neg();
            let ripple = c + low;
            Some((((ripple ^ c) >> 2) / low) | ripple)
        };
        Some(VertexMask(c as u32))
    })
}

/// Keeps the inclusion-minimal masks, sorted ascending and deduplicated.
pub fn minimalize<I: IntoIterator<Item = VertexMask>>(masks: I) -> Vec<VertexMask> {
    let mut v: Vec<VertexMask> = masks.into_iter().collect();
    v.sort_unstable_by_key(|m| (m.len(), m.bits()));
    v.dedup();
    let mut kept: Vec<VertexMask> = Vec::with_capacity(v.len());
    for m in v {
        if !kept.iter().any(|k| k.is_subset_of(m)) {
            kept.push(m);
        }
    }
    kept.sort_unstable();
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gosper_enumerates_binomial_many_in_order() {
        let v: Vec<_> = subsets_of_size(5, 2).map(|m| m.bits()).collect();
        assert_eq!(v.len(), 10);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(subsets_of_size(4, 0).count(), 1);
        assert_eq!(subsets_of_size(3, 4).count(), 0);
        assert_eq!(subsets_of_size(32, 32).count(), 1);
    }

    #[test]
    fn compress_expand_roundtrip() {
        let frame = VertexMask::from_vertices([1, 4, 6, 9]);
        let m = VertexMask::from_vertices([4, 9]);
        let c = m.compress(frame);
        assert_eq!(c, VertexMask::from_vertices([1, 3]));
        assert_eq!(c.expand(frame), m);
    }

    #[test]
    fn minimalize_drops_supersets() {
        let m = |v: &[usize]| VertexMask::from_vertices(v.iter().copied());
        let out = minimalize([m(&[0, 1]), m(&[0]), m(&[2, 3]), m(&[1, 2, 3]), m(&[0])]);
        assert_eq!(out, vec![m(&[0]), m(&[2, 3])]);
    }

    #[test]
    fn full_handles_width() {
        assert_eq!(VertexMask::full(0), VertexMask::EMPTY);
        assert_eq!(VertexMask::full(32).len(), 32);
        assert_eq!(VertexMask::full(5).to_vec(), vec![0, 1, 2, 3, 4]);
    }
}

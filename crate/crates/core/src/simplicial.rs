//! Simplicial complexes presented by their minimal non-faces.
//!
//! Reduced conventions are explicit: the void complex (generator `∅`) has no
//! faces at all and zero reduced homology; the irrelevant complex `{∅}` has
//! `H̃_{-1} = k`.

use crate::error::{invalid, Result};
use crate::exactla::{rank, FieldSpec, SparseMatrix};
use crate::mask::{minimalize, subsets_of_size, VertexMask, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ground_size: usize,
    nonfaces: Vec<VertexMask>,
}

impl SimplicialComplex {
    /// Minimalizes `nonfaces`; every generator must live in `{0, .., n-1}`.
    pub fn new<I: IntoIterator<Item = VertexMask>>(
        ground_size: usize,
        nonfaces: I,
    ) -> Result<Self> {
        if ground_size > MAX_VERTICES {
            return Err(crate::Error::GroundTooLarge(ground_size));
        }
        let ground = VertexMask::full(ground_size);
        let nonfaces = minimalize(nonfaces);
        if let Some(g) = nonfaces.iter().find(|g| !g.is_subset_of(ground)) {
            return Err(invalid(format!(
                "non-face {g} outside ground set of size {ground_size}"
            )));
        }
        Ok(SimplicialComplex {
            ground_size,
            nonfaces,
        })
    }

    /// Caller guarantees an antichain inside the ground set.
    pub(crate) fn from_antichain(ground_size: usize, nonfaces: Vec<VertexMask>) -> Self {
        SimplicialComplex {
            ground_size,
            nonfaces,
        }
    }

    /// The full simplex on `n` vertices.
    pub fn simplex(n: usize) -> Self {
        SimplicialComplex {
            ground_size: n,
            nonfaces: Vec::new(),
        }
    }

    /// The complex with no faces, not even `∅`.
    pub fn void(n: usize) -> Self {
        SimplicialComplex {
            ground_size: n,
            nonfaces: vec![VertexMask::EMPTY],
        }
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn nonface_generators(&self) -> &[VertexMask] {
        &self.nonfaces
    }

    pub fn is_void(&self) -> bool {
        self.nonfaces.first() == Some(&VertexMask::EMPTY)
    }

    #[inline]
    pub fn is_face(&self, f: VertexMask) -> bool {
        !self.nonfaces.iter().any(|g| g.is_subset_of(f))
    }

    /// Induced subcomplex on `w`, relabeled so the vertices of `w` become
    /// `0, .., |w|-1` in ascending order.
    pub fn restrict(&self, w: VertexMask) -> SimplicialComplex {
        let w = w & VertexMask::full(self.ground_size);
        let nonfaces = self
            .nonfaces
            .iter()
            .filter(|g| g.is_subset_of(w))
            .map(|g| g.compress(w))
            .collect();
        // a sub-family of an antichain is still an antichain
        SimplicialComplex {
            ground_size: w.len(),
            nonfaces,
        }
    }

    /// Faces with `k + 1` vertices in ascending mask order. `k = -1` yields
    /// `[∅]` unless the complex is void.
    pub fn faces_of_dim(&self, k: isize) -> Vec<VertexMask> {
        if k < -1 || k >= self.ground_size as isize {
            return Vec::new();
        }
        subsets_of_size(self.ground_size, (k + 1) as usize)
            .filter(|&f| self.is_face(f))
            .collect()
    }

    /// Signed incidence matrix of `∂_k : C_k -> C_{k-1}` (rows are the
    /// `(k-1)`-faces). For `k = 0` the target is spanned by `∅`.
    pub fn boundary_matrix(&self, k: usize) -> SparseMatrix {
        let lower = self.faces_of_dim(k as isize - 1);
        let upper = self.faces_of_dim(k as isize);
        boundary_between(&upper, &lower)
    }

    pub fn reduced_homology_dims(&self, field: FieldSpec) -> ReducedHomology {
        let n = self.ground_size;
        let mut dims = vec![0usize; n + 1];
        if self.is_void() {
            return ReducedHomology { dims };
        }
        // faces[d] holds the (d-1)-dimensional faces
        let mut faces: Vec<Vec<VertexMask>> = Vec::with_capacity(n + 1);
        for d in 0..=n {
            let f = self.faces_of_dim(d as isize - 1);
            let done = f.is_empty();
            faces.push(f);
            if done {
                break;
            }
        }
        faces.resize(n + 2, Vec::new());
        // ranks[d] = rank of the map out of faces[d]
        let mut ranks = vec![0usize; n + 2];
        for d in 1..=n {
            if faces[d].is_empty() {
                break;
            }
            ranks[d] = rank(&boundary_between(&faces[d], &faces[d - 1]), field);
        }
        for d in 0..=n {
            dims[d] = faces[d].len() - ranks[d] - ranks[d + 1];
        }
        ReducedHomology { dims }
    }
}

pub(crate) fn boundary_between(upper: &[VertexMask], lower: &[VertexMask]) -> SparseMatrix {
    let mut entries = Vec::with_capacity(upper.len() * upper.first().map_or(0, |f| f.len()));
    for (col, &face) in upper.iter().enumerate() {
        for (pos, v) in face.iter().enumerate() {
            let row = lower
                .binary_search(&face.without(v))
                .expect("faces are closed under taking subsets");
            entries.push((row, col, if pos % 2 == 0 { 1 } else { -1 }));
        }
    }
    SparseMatrix::from_parts(lower.len(), upper.len(), entries)
}

/// Reduced Betti numbers `dim H̃_k` for `k = -1 ..= n-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedHomology {
    dims: Vec<usize>,
}

impl ReducedHomology {
    pub fn dim(&self, k: isize) -> usize {
        if k < -1 {
            return 0;
        }
        self.dims.get((k + 1) as usize).copied().unwrap_or(0)
    }

    /// Entry `d` is `dim H̃_{d-1}`.
    pub fn as_slice(&self) -> &[usize] {
        &self.dims
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(d, &h)| if d % 2 == 1 { h as i64 } else { -(h as i64) })
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(v: &[usize]) -> VertexMask {
        VertexMask::from_vertices(v.iter().copied())
    }

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::new(3, [m(&[0, 1, 2])]).unwrap()
    }

    /// Independence complex of C_5 without going through the graph module.
    fn c5_independence() -> SimplicialComplex {
        SimplicialComplex::new(5, (0..5).map(|i| m(&[i, (i + 1) % 5]))).unwrap()
    }

    #[test]
    fn restrict_examples() {
        let r = hollow_triangle().restrict(m(&[0, 1]));
        assert_eq!(r.ground_size(), 2);
        assert!(r.nonface_generators().is_empty());
        let edge_nonface = SimplicialComplex::new(3, [m(&[0, 1])]).unwrap();
        assert_eq!(
            edge_nonface.restrict(m(&[0, 1])).nonface_generators(),
            &[m(&[0, 1])]
        );

        let c5 = c5_independence();
        assert_eq!(c5.restrict(VertexMask::full(5)), c5);
        let r = c5.restrict(m(&[0, 2]));
        assert_eq!(r, SimplicialComplex::simplex(2));
    }

    #[test]
    fn faces_examples() {
        assert_eq!(
            SimplicialComplex::simplex(3).faces_of_dim(1),
            vec![m(&[0, 1]), m(&[0, 2]), m(&[1, 2])]
        );
        assert!(SimplicialComplex::void(3).faces_of_dim(-1).is_empty());
        assert_eq!(
            SimplicialComplex::simplex(0).faces_of_dim(-1),
            vec![VertexMask::EMPTY]
        );
        let edge = SimplicialComplex::new(2, [m(&[0, 1])]).unwrap();
        assert_eq!(edge.faces_of_dim(0), vec![m(&[0]), m(&[1])]);
    }

    #[test]
    fn boundary_examples() {
        let d = SimplicialComplex::simplex(2).boundary_matrix(1).to_dense();
        // edge [0,1] maps to {1} - {0}
        assert_eq!(d, vec![vec![-1], vec![1]]);
        let d1 = hollow_triangle().boundary_matrix(1);
        assert_eq!((d1.rows(), d1.cols()), (3, 3));
        assert_eq!(rank(&d1, FieldSpec::RATIONALS), 2);
        let d0 = hollow_triangle().boundary_matrix(0);
        assert_eq!(d0.to_dense(), vec![vec![1, 1, 1]]);
    }

    #[test]
    fn homology_examples() {
        for n in 0..6 {
            assert!(
                SimplicialComplex::simplex(n)
                    .reduced_homology_dims(FieldSpec::RATIONALS)
                    .is_acyclic()
                    || n == 0
            );
        }
        let h = hollow_triangle().reduced_homology_dims(FieldSpec::RATIONALS);
        assert_eq!(h.as_slice(), &[0, 0, 1, 0]);
        let two_points = SimplicialComplex::new(2, [m(&[0, 1])]).unwrap();
        assert_eq!(
            two_points
                .reduced_homology_dims(FieldSpec::RATIONALS)
                .dim(0),
            1
        );
        // irrelevant complex {∅} and the void complex
        let irrelevant = SimplicialComplex::new(2, [m(&[0]), m(&[1])]).unwrap();
        assert_eq!(
            irrelevant
                .reduced_homology_dims(FieldSpec::RATIONALS)
                .as_slice(),
            &[1, 0, 0]
        );
        assert!(SimplicialComplex::void(2)
            .reduced_homology_dims(FieldSpec::RATIONALS)
            .is_acyclic());
        assert_eq!(
            SimplicialComplex::simplex(0)
                .reduced_homology_dims(FieldSpec::RATIONALS)
                .as_slice(),
            &[1]
        );
        // independence complex of C_5 is a circle
        assert_eq!(
            c5_independence()
                .reduced_homology_dims(FieldSpec::RATIONALS)
                .dim(1),
            1
        );
    }

    fn complex_strategy() -> impl Strategy<Value = SimplicialComplex> {
        (0usize..=8).prop_flat_map(|n| {
            let top = if n == 0 { 1u32 } else { 1u32 << n };
            proptest::collection::vec(1..top.max(2), 0..6).prop_map(move |gens| {
                SimplicialComplex::new(
                    n,
                    gens.into_iter()
                        .map(|b| VertexMask::from_bits(b) & VertexMask::full(n))
                        .filter(|g| !g.is_empty()),
                )
                .unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn boundary_squares_to_zero(c in complex_strategy()) {
            for k in 1..c.ground_size() {
                let prod = c.boundary_matrix(k - 1).mul(&c.boundary_matrix(k)).unwrap();
                prop_assert!(prod.entries().is_empty());
            }
        }

        #[test]
        fn euler_characteristic_consistent(c in complex_strategy()) {
            let h = c.reduced_homology_dims(FieldSpec::RATIONALS);
            let faces: i64 = (0..c.ground_size())
                .map(|k| { let f = c.faces_of_dim(k as isize).len() as i64; if k % 2 == 0 { f } else { -f } })
                .sum();
            let homology: i64 = (0..c.ground_size())
                .map(|k| { let d = h.dim(k as isize) as i64; if k % 2 == 0 { d } else { -d } })
                .sum();
            let nonvoid = i64::from(!c.is_void());
            prop_assert_eq!(faces - nonvoid, homology - h.dim(-1) as i64);
        }

        #[test]
        fn restriction_composes(c in complex_strategy(), w1 in any::<u32>(), w2 in any::<u32>()) {
            let full = VertexMask::full(c.ground_size());
            let w = VertexMask::from_bits(w1) & full;
            let w2 = VertexMask::from_bits(w2) & full;
            let inner = (w & w2).compress(w);
            prop_assert_eq!(c.restrict(w).restrict(inner), c.restrict(w & w2));
        }
    }
}

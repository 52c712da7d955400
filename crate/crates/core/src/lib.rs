//! Exact Betti numbers of squarefree monomial ideals via Hochster's formula,
//! with the graph constructions and checks built on top of them.

pub mod analysis;
pub mod betti;
pub mod error;
pub mod exactla;
pub mod graphs;
pub mod ideals;
pub mod mask;
pub mod simplicial;

pub use betti::{graph_betti, hochster_betti, BettiTable, GradedTable};
pub use error::{Error, Result};
pub use exactla::{FieldSpec, SparseMatrix};
pub use graphs::{Family, Graph};
pub use ideals::SquarefreeIdeal;
pub use mask::VertexMask;
pub use simplicial::{ReducedHomology, SimplicialComplex};

pub mod branching;
pub mod cellular;
pub mod combinatorics;
pub mod diagrams;
pub mod error;
pub mod linalg;
pub mod modules;
pub mod repcalc;
pub mod truncation;
pub mod scalars;
pub mod wreath;

pub use combinatorics::{MComposition, MultiPartition, Partition};
pub use diagrams::{AlgebraElement, Diagram, DiagramAlgebra};
pub use error::{Error, Result};
pub use cellular::CellModule;
pub use linalg::{Matrix, Subspace};
pub use modules::{Module, RepMatrices};
pub use scalars::{Cyclotomic, Params, Rational};

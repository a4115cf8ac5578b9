//! Shared inputs for the benchmarks.

use cbrauer::{DiagramAlgebra, Params};

/// `B_n^m` at seeded generic parameters.
pub fn generic(m: u32, n: usize) -> DiagramAlgebra {
    DiagramAlgebra::cyclotomic(n, &Params::generic(m, 11), true)
}

/// `B_n^m` with every `δ_i = k`.
pub fn constant(m: u32, n: usize, k: i64) -> DiagramAlgebra {
    DiagramAlgebra::cyclotomic(n, &Params::from_ints(&vec![k; m as usize]), true)
}

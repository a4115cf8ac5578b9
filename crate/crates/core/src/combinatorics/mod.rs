//! Partitions, m-partitions, m-compositions, the cyclotomic orders and
//! Littlewood–Richardson coefficients.

mod littlewood;
mod multi;
mod partition;
mod poset;

pub use littlewood::lr_coeff;
pub use multi::{CellBox, MComposition, MultiPartition};
pub use partition::{skew_standard_count, Partition};
pub use poset::{down_set, lambda_omega, order_leq, poset_leq, Hasse, PosetSignature, Variant};

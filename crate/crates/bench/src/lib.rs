//! Fixtures shared by the benchmarks.

use kiter_core::table::FiniteTable;

/// `f(x) = (Σ (i + 1) x_i + 1) mod m`, a deterministic table of any size.
pub fn weighted_sum_table(m: usize, k: usize) -> FiniteTable {
    FiniteTable::from_fn(m, k, |x| {
        (x.iter().enumerate().map(|(i, v)| (i + 1) * v).sum::<usize>() + 1) % m
    })
    .expect("valid dimensions")
}

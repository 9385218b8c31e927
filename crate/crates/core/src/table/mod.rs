//! Exhaustive analysis of maps `f: X^k -> X` over `X = {0, .., m-1}`.
//!
//! A [`FiniteTable`] stores all `m^k` values densely in row-major order:
//! the state `(x_1, .., x_k)` lives at `Σ x_i m^{k-i}`, so the last argument
//! varies fastest.

mod analysis;
mod construct;
mod enumerate;
mod format;
mod perm;

use crate::engine::IterableMap;
use crate::error::{Error, Result};

pub use analysis::{
    as_permutation, cycle_report, is_induced_involutory, is_n_involutory, is_persymmetric,
    is_symmetric, property_profile, successors, table_iterate, CycleReport, IiOrder,
    PropertyProfile,
};
pub use construct::{conjugate, hat_id, project_compose};
pub use enumerate::{
    count_involutions, count_involutions_brute, enumerate_ii_tables, involutions, IiTables,
};
pub use format::{load_table, parse_table};
pub use perm::Permutation;

/// Upper limit on `m^k` for generated tables and exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_states: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_states: 1_000_000,
        }
    }
}

impl Budget {
    /// `m^k`, if it fits.
    pub fn states(&self, m: usize, k: usize) -> Result<usize> {
        let mut states: u128 = 1;
        for _ in 0..k {
            states = states.saturating_mul(m as u128);
            if states > self.max_states {
                return Err(Error::BudgetExceeded {
                    states: (m as u128).saturating_pow(k.min(u32::MAX as usize) as u32),
                    budget: self.max_states,
                });
            }
        }
        Ok(states as usize)
    }
}

/// A map `{0..m-1}^k -> {0..m-1}` as a dense table of `m^k` entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteTable {
    m: usize,
    k: usize,
    entries: Vec<usize>,
}

impl FiniteTable {
    pub fn new(m: usize, k: usize, entries: Vec<usize>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidTable("m must be positive".into()));
        }
        if k == 0 {
            return Err(Error::ZeroArity);
        }
        let states = Budget {
            max_states: usize::MAX as u128,
        }
        .states(m, k)?;
        if entries.len() != states {
            return Err(Error::InvalidTable(format!(
                "expected {states} entries, found {}",
                entries.len()
            )));
        }
        if let Some(&value) = entries.iter().find(|&&v| v >= m) {
            return Err(Error::ValueOutOfRange { value, m });
        }
        Ok(FiniteTable { m, k, entries })
    }

    /// Tabulates `f` over every state, within the default budget.
    pub fn from_fn(m: usize, k: usize, f: impl FnMut(&[usize]) -> usize) -> Result<Self> {
        Self::from_fn_with_budget(m, k, Budget::default(), f)
    }

    pub fn from_fn_with_budget(
        m: usize,
        k: usize,
        budget: Budget,
        mut f: impl FnMut(&[usize]) -> usize,
    ) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidTable("m must be positive".into()));
        }
        if k == 0 {
            return Err(Error::ZeroArity);
        }
        let states = budget.states(m, k)?;
        let mut coords = vec![0usize; k];
        let mut entries = Vec::with_capacity(states);
        for _ in 0..states {
            entries.push(f(&coords));
            advance(&mut coords, m);
        }
        Self::new(m, k, entries)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn states(&self) -> usize {
        self.entries.len()
    }

    /// `f(x)`; `x` must be a valid state.
    pub fn value(&self, x: &[usize]) -> Result<usize> {
        if x.len() != self.k {
            return Err(Error::ArityMismatch {
                expected: self.k,
                found: x.len(),
            });
        }
        Ok(self.entries[state_index(x, self.m)?])
    }

    pub(crate) fn stride(&self, axis: usize) -> usize {
        self.m.pow((self.k - 1 - axis) as u32)
    }
}

impl IterableMap<usize> for FiniteTable {
    fn arity(&self) -> usize {
        self.k
    }

    /// Panics if an argument lies outside `0..m`.
    fn apply(&self, args: &[usize]) -> usize {
        let idx = args.iter().fold(0usize, |acc, &x| {
            assert!(x < self.m, "table argument {x} out of range 0..{}", self.m);
            acc * self.m + x
        });
        self.entries[idx]
    }
}

/// Odometer increment, last coordinate fastest.
pub(crate) fn advance(coords: &mut [usize], m: usize) {
    for c in coords.iter_mut().rev() {
        *c += 1;
        if *c < m {
            return;
        }
        *c = 0;
    }
}

/// Row-major index `Σ x_i m^{k-i}`.
pub fn state_index(s: &[usize], m: usize) -> Result<usize> {
    let mut idx: usize = 0;
    for &x in s {
        if x >= m {
            return Err(Error::ValueOutOfRange { value: x, m });
        }
        idx = idx
            .checked_mul(m)
            .and_then(|v| v.checked_add(x))
            .ok_or_else(|| Error::InvalidArgument("state index overflows".into()))?;
    }
    Ok(idx)
}

pub fn state_from_index(idx: usize, m: usize, k: usize) -> Result<Vec<usize>> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    let states = Budget {
        max_states: usize::MAX as u128,
    }
    .states(m, k)?;
    if idx >= states {
        return Err(Error::IndexOutOfRange { index: idx, states });
    }
    let mut out = vec![0; k];
    let mut rest = idx;
    for slot in out.iter_mut().rev() {
        *slot = rest % m;
        rest /= m;
    }
    Ok(out)
}

/// Reference tables used throughout the tests and the CLI.
pub mod catalog {
    use super::FiniteTable;

    /// `f(i, j) = (i + j) mod 3`: symmetric, II-3, 4-involutory.
    pub fn cyclic_sum_table() -> FiniteTable {
        FiniteTable::from_fn(3, 2, |x| (x[0] + x[1]) % 3).unwrap()
    }

    /// A symmetric, persymmetric Latin square on 4 symbols whose first
    /// iterate is a 15-cycle plus a fixed point.
    pub fn fifteen_cycle_table() -> FiniteTable {
        FiniteTable::new(
            4,
            2,
            vec![0, 2, 3, 1, 2, 0, 1, 3, 3, 1, 0, 2, 1, 3, 2, 0],
        )
        .unwrap()
    }

    /// `f(x) = (A - Σ x_i) mod m`.
    pub fn negated_sum_table(m: usize, k: usize, a: usize) -> FiniteTable {
        FiniteTable::from_fn(m, k, |x| {
            let s = x.iter().sum::<usize>() % m;
            (a % m + m - s) % m
        })
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indexing() {
        assert_eq!(state_index(&[0, 0], 3).unwrap(), 0);
        assert_eq!(state_index(&[1, 2], 3).unwrap(), 5);
        assert_eq!(
            state_index(&[1, 3], 3).unwrap_err(),
            Error::ValueOutOfRange { value: 3, m: 3 }
        );
        assert_eq!(state_from_index(5, 3, 2).unwrap(), vec![1, 2]);
        assert_eq!(
            state_from_index(9, 3, 2).unwrap_err(),
            Error::IndexOutOfRange { index: 9, states: 9 }
        );
    }

    #[test]
    fn index_round_trip() {
        let (m, k) = (4, 3);
        let mut seen = [false; 64];
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    let s = [a, b, c];
                    let idx = state_index(&s, m).unwrap();
                    assert!(!seen[idx]);
                    seen[idx] = true;
                    assert_eq!(state_from_index(idx, m, k).unwrap(), s);
                }
            }
        }
        assert!(seen.iter().all(|&b| b));
    }

    #[test]
    fn construction_errors() {
        assert!(FiniteTable::new(0, 2, vec![]).is_err());
        assert!(FiniteTable::new(2, 0, vec![0]).is_err());
        assert!(matches!(
            FiniteTable::new(2, 2, vec![0, 1, 1]),
            Err(Error::InvalidTable(_))
        ));
        assert_eq!(
            FiniteTable::new(2, 1, vec![0, 2]).unwrap_err(),
            Error::ValueOutOfRange { value: 2, m: 2 }
        );
        assert!(matches!(
            FiniteTable::from_fn(10, 7, |_| 0),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn catalog_tables() {
        let t = catalog::cyclic_sum_table();
        assert_eq!(t.entries(), &[0, 1, 2, 1, 2, 0, 2, 0, 1]);
        assert_eq!(t.value(&[2, 2]).unwrap(), 1);
        let t = catalog::negated_sum_table(3, 2, 0);
        assert_eq!(t.value(&[1, 0]).unwrap(), 2);
        assert_eq!(t.value(&[1, 1]).unwrap(), 1);
    }
}

use num_bigint::BigUint;
use num_traits::One;

use super::{Budget, FiniteTable};
use crate::error::Result;

/// Streams every table that is II (each induced self-map an involution), in
/// ascending lexicographic order of the entry vector.
///
/// Cells are filled in row-major order. A candidate value is accepted only
/// if, along every axis, the partially filled fiber through the cell can
/// still be completed to an involution of `X`.
#[derive(Debug, Clone)]
pub struct IiTables {
    m: usize,
    k: usize,
    strides: Vec<usize>,
    coords: Vec<Vec<usize>>,
    cells: Vec<usize>,
    next_value: Vec<usize>,
    pos: usize,
    done: bool,
}

pub fn enumerate_ii_tables(m: usize, k: usize, budget: Budget) -> Result<IiTables> {
    if m == 0 {
        return Err(crate::Error::InvalidTable("m must be positive".into()));
    }
    if k == 0 {
        return Err(crate::Error::ZeroArity);
    }
    let states = budget.states(m, k)?;
    let strides = (0..k).map(|axis| m.pow((k - 1 - axis) as u32)).collect();
    let coords = (0..states)
        .map(|idx| super::state_from_index(idx, m, k))
        .collect::<Result<_>>()?;
    Ok(IiTables {
        m,
        k,
        strides,
        coords,
        cells: vec![0; states],
        next_value: vec![0; states + 1],
        pos: 0,
        done: false,
    })
}

impl IiTables {
    /// Whether `v` at cell `x` keeps every fiber through `x` extendable to an
    /// involution, given cells `< x` are fixed.
    fn admissible(&self, x: usize, v: usize) -> bool {
        let c = &self.coords[x];
        for (&stride, &cj) in self.strides.iter().zip(c) {
            let base = x - cj * stride;
            let earlier = |t: usize| self.cells[base + t * stride];
            // An earlier point already maps onto cj, so cj must map back.
            if let Some(t) = (0..cj).find(|&t| earlier(t) == cj) {
                if v != t {
                    return false;
                }
                continue;
            }
            if v < cj {
                return false;
            }
            if v > cj && (0..cj).any(|t| earlier(t) == v) {
                return false;
            }
        }
        true
    }
}

impl Iterator for IiTables {
    type Item = FiniteTable;

    fn next(&mut self) -> Option<FiniteTable> {
        let n = self.cells.len();
        while !self.done {
            if self.pos == n {
                let table = FiniteTable {
                    m: self.m,
                    k: self.k,
                    entries: self.cells.clone(),
                };
                self.backtrack();
                return Some(table);
            }
            let start = self.next_value[self.pos];
            match (start..self.m).find(|&v| self.admissible(self.pos, v)) {
                Some(v) => {
                    self.cells[self.pos] = v;
                    self.next_value[self.pos] = v + 1;
                    self.pos += 1;
                    self.next_value[self.pos] = 0;
                }
                None => self.backtrack(),
            }
        }
        None
    }
}

impl IiTables {
    fn backtrack(&mut self) {
        if self.pos == self.cells.len() {
            self.pos -= 1;
            return;
        }
        self.next_value[self.pos] = 0;
        if self.pos == 0 {
            self.done = true;
        } else {
            self.pos -= 1;
        }
    }
}

/// All involutions of `0..m`, lexicographically.
pub fn involutions(m: usize) -> Vec<Vec<usize>> {
    fn go(g: &mut Vec<Option<usize>>, out: &mut Vec<Vec<usize>>) {
        match g.iter().position(Option::is_none) {
            None => out.push(g.iter().map(|v| v.unwrap()).collect()),
            Some(i) => {
                // Sorted output: try partners in ascending order; i itself
                // (a fixed point) is the smallest candidate.
                for j in i..g.len() {
                    if g[j].is_some() {
                        continue;
                    }
                    g[i] = Some(j);
                    g[j] = Some(i);
                    go(g, out);
                    g[i] = None;
                    g[j] = None;
                }
            }
        }
    }
    let mut out = Vec::new();
    go(&mut vec![None; m], &mut out);
    out
}

/// Number of self-maps `g` of an `m`-set with `g ∘ g = id`, by testing all
/// `m^m` maps.
pub fn count_involutions_brute(m: usize) -> u64 {
    if m == 0 {
        return 1;
    }
    let mut g = vec![0usize; m];
    let mut count = 0;
    loop {
        if (0..m).all(|i| g[g[i]] == i) {
            count += 1;
        }
        let mut i = m;
        loop {
            if i == 0 {
                return count;
            }
            i -= 1;
            g[i] += 1;
            if g[i] < m {
                break;
            }
            g[i] = 0;
        }
    }
}

const BRUTE_FORCE_CHECK_UP_TO: usize = 6;

/// Telephone number `T(m) = T(m-1) + (m-1) T(m-2)`, `T(0) = T(1) = 1`.
///
/// For small `m` the recursion is cross-checked against brute force.
pub fn count_involutions(m: usize) -> BigUint {
    let (mut prev, mut cur) = (BigUint::one(), BigUint::one());
    for i in 2..=m {
        let next = &cur + BigUint::from(i - 1) * &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    if m <= BRUTE_FORCE_CHECK_UP_TO {
        assert_eq!(
            cur,
            BigUint::from(count_involutions_brute(m)),
            "telephone recursion disagrees with enumeration at m = {m}"
        );
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::{is_induced_involutory, is_symmetric};

    #[test]
    fn telephone_numbers() {
        let expect = [1u64, 1, 2, 4, 10, 26, 76, 232, 764];
        for (m, &t) in expect.iter().enumerate() {
            assert_eq!(count_involutions(m), BigUint::from(t));
            assert_eq!(involutions(m).len() as u64, t);
        }
        assert_eq!(count_involutions_brute(4), 10);
        assert_eq!(count_involutions_brute(5), 26);
    }

    #[test]
    fn involution_list_is_sorted_and_valid() {
        let all = involutions(4);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|g| (0..4).all(|i| g[g[i]] == i)));
    }

    fn brute_ii(m: usize, k: usize) -> Vec<FiniteTable> {
        let states = m.pow(k as u32);
        let total = m.pow(states as u32);
        (0..total)
            .filter_map(|mut code| {
                let mut entries = vec![0; states];
                for e in entries.iter_mut().rev() {
                    *e = code % m;
                    code /= m;
                }
                let t = FiniteTable::new(m, k, entries).unwrap();
                is_induced_involutory(&t, 2, None).unwrap().then_some(t)
            })
            .collect()
    }

    #[test]
    fn matches_brute_force_filter() {
        for (m, k) in [(1, 2), (2, 1), (2, 2), (3, 1), (2, 3), (3, 2)] {
            let got: Vec<_> = enumerate_ii_tables(m, k, Budget::default())
                .unwrap()
                .collect();
            assert_eq!(got, brute_ii(m, k), "m = {m}, k = {k}");
        }
    }

    #[test]
    fn emitted_tables_are_symmetric() {
        let tables: Vec<_> = enumerate_ii_tables(4, 2, Budget::default())
            .unwrap()
            .collect();
        assert!(!tables.is_empty());
        assert!(tables.iter().all(is_symmetric));
        assert!(tables.windows(2).all(|w| w[0].entries() < w[1].entries()));
    }

    #[test]
    fn single_point_domain() {
        assert_eq!(
            enumerate_ii_tables(1, 2, Budget::default()).unwrap().count(),
            1
        );
    }

    #[test]
    fn budget_is_enforced() {
        let tight = Budget { max_states: 8 };
        assert!(matches!(
            enumerate_ii_tables(3, 2, tight),
            Err(crate::Error::BudgetExceeded { .. })
        ));
    }
}

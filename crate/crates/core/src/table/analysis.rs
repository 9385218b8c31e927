use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use super::{FiniteTable, Permutation};
use crate::engine::first_iterate_into;
use crate::error::{Error, Result};

/// `idx ↦ index of f¹(state_from_index(idx))` for every state.
pub fn successors(t: &FiniteTable) -> Vec<usize> {
    let (m, k) = (t.m(), t.k());
    let mut coords = vec![0usize; k];
    let mut buf = Vec::with_capacity(2 * k);
    let mut out = Vec::with_capacity(t.states());
    for _ in 0..t.states() {
        first_iterate_into(t, &coords, &mut buf);
        out.push(buf.iter().fold(0, |acc, &x| acc * m + x));
        super::advance(&mut coords, m);
    }
    out
}

/// `f¹` as a permutation of the `m^k` states, if it is injective.
pub fn as_permutation(t: &FiniteTable) -> Option<Permutation> {
    Permutation::from_images(successors(t)).ok()
}

/// Cycle structure of `f¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleReport {
    pub bijective: bool,
    /// Cycles of `f¹` as state indices, each starting at its smallest
    /// index. For a non-bijective `f¹` these are the cycles its functional
    /// graph eventually falls into.
    pub cycles: Vec<Vec<usize>>,
    /// Least common multiple of the cycle lengths; only for bijective `f¹`.
    pub minimal_order: Option<BigUint>,
    /// Cycle length of each state lying on a cycle.
    pub per_point_period: Vec<Option<usize>>,
}

impl CycleReport {
    /// Cycle lengths, longest first.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles.iter().map(Vec::len).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }
}

/// Cycles of the functional graph of `next`.
pub(crate) fn functional_cycles(next: &[usize]) -> Vec<Vec<usize>> {
    const UNSEEN: u8 = 0;
    const ON_PATH: u8 = 1;
    const DONE: u8 = 2;
    let mut mark = vec![UNSEEN; next.len()];
    let mut cycles = Vec::new();
    let mut path = Vec::new();
    for start in 0..next.len() {
        if mark[start] != UNSEEN {
            continue;
        }
        path.clear();
        let mut i = start;
        while mark[i] == UNSEEN {
            mark[i] = ON_PATH;
            path.push(i);
            i = next[i];
        }
        if mark[i] == ON_PATH {
            let pos = path.iter().position(|&p| p == i).unwrap();
            let mut cycle = path[pos..].to_vec();
            let min_at = (0..cycle.len()).min_by_key(|&c| cycle[c]).unwrap();
            cycle.rotate_left(min_at);
            cycles.push(cycle);
        }
        for &p in &path {
            mark[p] = DONE;
        }
    }
    cycles.sort_by_key(|c| c[0]);
    cycles
}

pub fn cycle_report(t: &FiniteTable) -> CycleReport {
    let next = successors(t);
    let bijective = Permutation::from_images(next.clone()).is_ok();
    let cycles = functional_cycles(&next);
    let mut per_point_period = vec![None; next.len()];
    for c in &cycles {
        for &i in c {
            per_point_period[i] = Some(c.len());
        }
    }
    let minimal_order = bijective.then(|| {
        cycles
            .iter()
            .fold(BigUint::one(), |acc, c| acc.lcm(&BigUint::from(c.len())))
    });
    CycleReport {
        bijective,
        cycles,
        minimal_order,
        per_point_period,
    }
}

/// `fⁿ = id` on every state. Every map is 0-involutory.
pub fn is_n_involutory(t: &FiniteTable, n: u64) -> bool {
    if n == 0 {
        return true;
    }
    let report = cycle_report(t);
    report.bijective
        && report
            .cycles
            .iter()
            .all(|c| n.is_multiple_of(c.len() as u64))
}

/// Whether `g^n = id` for the self-map `g` on `0..m` given by its images.
fn self_map_has_order_dividing(images: &[usize], n: u64) -> bool {
    if n == 0 {
        return true;
    }
    match Permutation::from_images(images.to_vec()) {
        Ok(p) => p.cycles().iter().all(|c| n.is_multiple_of(c.len() as u64)),
        Err(_) => false,
    }
}

/// Start indices of the fibers along `axis`: states whose `axis`
/// coordinate is zero.
fn fiber_bases(t: &FiniteTable, axis: usize) -> impl Iterator<Item = usize> + '_ {
    let stride = t.stride(axis);
    let m = t.m();
    (0..t.states()).filter(move |idx| (idx / stride).is_multiple_of(m))
}

fn ii_in_axis(t: &FiniteTable, n: u64, axis: usize) -> bool {
    let stride = t.stride(axis);
    let mut images = vec![0; t.m()];
    fiber_bases(t, axis).all(|base| {
        for (v, img) in images.iter_mut().enumerate() {
            *img = t.entries()[base + v * stride];
        }
        self_map_has_order_dividing(&images, n)
    })
}

/// II-n{j} when `j` is given (1-based), otherwise II-n: for every choice of
/// the other arguments, the induced self-map's `n`-th iterate is the
/// identity.
pub fn is_induced_involutory(t: &FiniteTable, n: u64, j: Option<usize>) -> Result<bool> {
    match j {
        Some(j) if j == 0 || j > t.k() => Err(Error::PositionOutOfRange {
            position: j,
            arity: t.k(),
        }),
        Some(j) => Ok(ii_in_axis(t, n, j - 1)),
        None => Ok((0..t.k()).all(|axis| ii_in_axis(t, n, axis))),
    }
}

/// Invariance under every permutation of the arguments, checked on adjacent
/// transpositions.
pub fn is_symmetric(t: &FiniteTable) -> bool {
    let (m, k) = (t.m(), t.k());
    let e = t.entries();
    (0..k.saturating_sub(1)).all(|i| {
        let (si, sj) = (t.stride(i), t.stride(i + 1));
        (0..t.states()).all(|idx| {
            let (ci, cj) = ((idx / si) % m, (idx / sj) % m);
            let swapped = idx - ci * si - cj * sj + cj * si + ci * sj;
            e[idx] == e[swapped]
        })
    })
}

/// Symmetry across the antidiagonal, `f(i, j) = f(m-1-j, m-1-i)`; binary
/// tables only.
pub fn is_persymmetric(t: &FiniteTable) -> Result<bool> {
    if t.k() != 2 {
        return Err(Error::InvalidArgument(
            "persymmetry is defined for k = 2 only".into(),
        ));
    }
    let m = t.m();
    let e = t.entries();
    Ok((0..m).all(|i| (0..m).all(|j| e[i * m + j] == e[(m - 1 - j) * m + (m - 1 - i)])))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IiOrder {
    pub n: u64,
    /// 1-based argument position.
    pub j: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyProfile {
    pub symmetric: bool,
    pub ii_orders: Vec<IiOrder>,
    /// II-2 in every argument.
    pub ii: bool,
}

impl PropertyProfile {
    pub fn ii_order(&self, n: u64, j: usize) -> Option<bool> {
        self.ii_orders
            .iter()
            .find(|o| o.n == n && o.j == j)
            .map(|o| o.holds)
    }
}

/// Symmetry and II-n{j} for `n` in `1..=max_n` and every argument `j`.
pub fn property_profile(t: &FiniteTable, max_n: u64) -> PropertyProfile {
    let mut ii_orders = Vec::new();
    for n in 1..=max_n {
        for axis in 0..t.k() {
            ii_orders.push(IiOrder {
                n,
                j: axis + 1,
                holds: ii_in_axis(t, n, axis),
            });
        }
    }
    PropertyProfile {
        symmetric: is_symmetric(t),
        ii_orders,
        ii: (0..t.k()).all(|axis| ii_in_axis(t, 2, axis)),
    }
}

/// `fⁿ(s)` for any integer `n`; negative `n` needs a bijective `f¹`.
pub fn table_iterate(t: &FiniteTable, s: &[usize], n: i64) -> Result<Vec<usize>> {
    if s.len() != t.k() {
        return Err(Error::ArityMismatch {
            expected: t.k(),
            found: s.len(),
        });
    }
    let idx = super::state_index(s, t.m())?;
    let next = successors(t);
    let target = match Permutation::from_images(next.clone()) {
        Ok(p) => p.pow(n).apply(idx),
        Err(_) if n < 0 => return Err(Error::NotBijection),
        Err(_) => (0..n).fold(idx, |i, _| next[i]),
    };
    super::state_from_index(target, t.m(), t.k())
}

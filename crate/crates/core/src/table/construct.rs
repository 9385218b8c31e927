use super::{FiniteTable, Permutation};
use crate::error::{Error, Result};

/// The first projection `(x_1, .., x_k) ↦ x_1`, whose first iterate is the
/// identity on `X^k`.
pub fn hat_id(m: usize, k: usize) -> Result<FiniteTable> {
    FiniteTable::from_fn(m, k, |x| x[0])
}

/// `(x_1, .., x_k) ↦ g(x_1)` for an involution `g` on `0..m`; the result is
/// 2-involutory.
pub fn project_compose(g: &[usize], k: usize) -> Result<FiniteTable> {
    let m = g.len();
    if g.iter().any(|&v| v >= m) || (0..m).any(|i| g[g[i]] != i) {
        return Err(Error::NotInvolution);
    }
    FiniteTable::from_fn(m, k, |x| g[x[0]])
}

/// `(y_1, .., y_k) ↦ g⁻¹(f(g(y_1), .., g(y_k)))` for a bijection `g`.
pub fn conjugate(t: &FiniteTable, g: &[usize]) -> Result<FiniteTable> {
    if g.len() != t.m() {
        return Err(Error::InvalidArgument(format!(
            "conjugating bijection has {} points, table has m = {}",
            g.len(),
            t.m()
        )));
    }
    let g = Permutation::from_images(g.to_vec())?;
    let inv = g.inverse();
    let m = t.m();
    let e = t.entries();
    FiniteTable::from_fn(m, t.k(), |y| {
        let idx = y.iter().fold(0, |acc, &v| acc * m + g.apply(v));
        inv.apply(e[idx])
    })
}

//! Affine maps `f(x) = Σ a_i x_i + A` over an exact field.
//!
//! The first iterate of an affine map is itself affine, `f¹(x) = M x + c`,
//! so iterates reduce to powers of the homogeneous matrix `[[M, c], [0, 1]]`.

mod closed_forms;
mod real_involution;

pub use closed_forms::{
    fibonacci_closed_form, linear_roots_checks, projection_family_iterate, sum_map_closed_form,
    LinearRoots, RootsCheck,
};
pub use real_involution::{
    decreasing_involution, decreasing_involution_residuals, involution_fixed_point,
    linearizing_map, ResidualSummary,
};

use crate::engine::{IterableMap, State};
use crate::error::{Error, Result};
use crate::number::Field;

/// `f(x_1, .., x_k) = Σ a_i x_i + A`.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineMapSpec<F> {
    coefficients: Vec<F>,
    constant: F,
}

impl<F: Field> AffineMapSpec<F> {
    pub fn new(coefficients: Vec<F>, constant: F) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::ZeroArity);
        }
        Ok(AffineMapSpec {
            coefficients,
            constant,
        })
    }

    /// `A - Σ x_i`.
    pub fn negated_sum(k: usize, constant: F) -> Result<Self> {
        let minus_one = -constant.one_like();
        Self::new(vec![minus_one; k], constant)
    }

    pub fn arity(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[F] {
        &self.coefficients
    }

    pub fn constant(&self) -> &F {
        &self.constant
    }

    /// Invariant under argument permutations iff all coefficients agree.
    pub fn is_symmetric(&self) -> bool {
        self.coefficients.windows(2).all(|w| w[0] == w[1])
    }
}

impl<F: Field> IterableMap<F> for AffineMapSpec<F> {
    fn arity(&self) -> usize {
        self.coefficients.len()
    }

    fn apply(&self, args: &[F]) -> F {
        self.coefficients
            .iter()
            .zip(args)
            .fold(self.constant.clone(), |acc, (a, x)| acc + a.clone() * x.clone())
    }
}

/// `f¹(x) = matrix · x + offset`.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineFirstIterate<F> {
    matrix: Vec<Vec<F>>,
    offset: Vec<F>,
}

type Matrix<F> = Vec<Vec<F>>;

fn identity<F: Field>(n: usize, like: &F) -> Matrix<F> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { like.one_like() } else { like.zero_like() })
                .collect()
        })
        .collect()
}

fn mat_mul<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    let n = a.len();
    let zero = a[0][0].zero_like();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n).fold(zero.clone(), |acc, t| {
                        if a[i][t].is_zero() || b[t][j].is_zero() {
                            acc
                        } else {
                            acc + a[i][t].clone() * b[t][j].clone()
                        }
                    })
                })
                .collect()
        })
        .collect()
}

impl<F: Field> AffineFirstIterate<F> {
    pub fn arity(&self) -> usize {
        self.offset.len()
    }

    pub fn matrix(&self) -> &[Vec<F>] {
        &self.matrix
    }

    pub fn offset(&self) -> &[F] {
        &self.offset
    }

    fn homogeneous(&self) -> Matrix<F> {
        let k = self.arity();
        let like = &self.offset[0];
        let mut h = identity(k + 1, like);
        for ((row, m), c) in h.iter_mut().zip(&self.matrix).zip(&self.offset) {
            row[..k].clone_from_slice(m);
            row[k] = c.clone();
        }
        h
    }

    fn apply_homogeneous(h: &Matrix<F>, s: &[F]) -> Vec<F> {
        let k = s.len();
        (0..k)
            .map(|i| {
                s.iter()
                    .zip(&h[i])
                    .fold(h[i][k].clone(), |acc, (x, a)| acc + a.clone() * x.clone())
            })
            .collect()
    }
}

/// Builds `(M, c)` row by row: row `j` substitutes the rows already built
/// for the fed-back components.
pub fn build_first_iterate<F: Field>(spec: &AffineMapSpec<F>) -> AffineFirstIterate<F> {
    let k = spec.arity();
    let zero = spec.constant.zero_like();
    // Extended sequence x_1..x_k, f¹_1..f¹_k as affine forms in x.
    let mut forms: Vec<(Vec<F>, F)> = (0..k)
        .map(|i| {
            let mut row = vec![zero.clone(); k];
            row[i] = zero.one_like();
            (row, zero.clone())
        })
        .collect();
    for j in 0..k {
        let mut row = vec![zero.clone(); k];
        let mut constant = spec.constant.clone();
        for (t, a) in spec.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let (src_row, src_c) = &forms[j + t];
            for (r, s) in row.iter_mut().zip(src_row) {
                *r = r.clone() + a.clone() * s.clone();
            }
            constant = constant + a.clone() * src_c.clone();
        }
        forms.push((row, constant));
    }
    let (matrix, offset) = forms.drain(k..).unzip();
    AffineFirstIterate { matrix, offset }
}

fn check_dims<F>(it: &AffineFirstIterate<F>, s: &State<F>) -> Result<()> {
    if it.offset.len() != s.arity() {
        return Err(Error::ArityMismatch {
            expected: it.offset.len(),
            found: s.arity(),
        });
    }
    Ok(())
}

/// `fⁿ(s)` by square-and-multiply on the homogeneous matrix.
pub fn affine_iterate<F: Field>(
    it: &AffineFirstIterate<F>,
    s: &State<F>,
    n: u64,
) -> Result<State<F>> {
    check_dims(it, s)?;
    let mut base = it.homogeneous();
    let mut acc = identity(base.len(), &it.offset[0]);
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            acc = mat_mul(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mat_mul(&base, &base);
        }
    }
    State::new(AffineFirstIterate::apply_homogeneous(&acc, s))
}

/// Least `n <= bound` with `Mⁿ = I` and accumulated offset zero.
pub fn affine_involutory_order<F: Field>(
    it: &AffineFirstIterate<F>,
    bound: u64,
) -> Result<Option<u64>> {
    if bound == 0 {
        return Err(Error::InvalidArgument("bound must be positive".into()));
    }
    let h = it.homogeneous();
    let id = identity(h.len(), &it.offset[0]);
    let mut p = h.clone();
    for n in 1..=bound {
        if p == id {
            return Ok(Some(n));
        }
        p = mat_mul(&p, &h);
    }
    Ok(None)
}

/// II-n{j} for an affine map, decided exactly.
///
/// The induced map is `t ↦ a_j t + c` with `c` the frozen part, and its
/// `n`-th iterate is `a_jⁿ t + c (1 + a_j + .. + a_j^{n-1})`. It is the
/// identity for every context iff `a_jⁿ = 1` and the geometric sum kills
/// every attainable `c`: all of the field when another coefficient is
/// nonzero, only `A` otherwise.
pub fn affine_is_induced_involutory<F: Field>(
    spec: &AffineMapSpec<F>,
    n: u64,
    j: Option<usize>,
) -> Result<bool> {
    let k = spec.arity();
    let check = |axis: usize| {
        if n == 0 {
            return true;
        }
        let a = &spec.coefficients[axis];
        if a.pow_u64(n) != a.one_like() {
            return false;
        }
        let mut geometric = a.zero_like();
        let mut power = a.one_like();
        for _ in 0..n {
            geometric = geometric + power.clone();
            power = power * a.clone();
        }
        if geometric.is_zero() {
            return true;
        }
        let others_vanish = spec
            .coefficients
            .iter()
            .enumerate()
            .all(|(i, c)| i == axis || c.is_zero());
        others_vanish && spec.constant.is_zero()
    };
    match j {
        Some(j) if j == 0 || j > k => Err(Error::PositionOutOfRange {
            position: j,
            arity: k,
        }),
        Some(j) => Ok(check(j - 1)),
        None => Ok((0..k).all(check)),
    }
}

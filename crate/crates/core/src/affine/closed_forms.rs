//! Closed-form iterates for particular affine families, used as
//! independent oracles for the matrix and engine paths.

use num_bigint::BigInt;
use num_traits::One;

use super::AffineMapSpec;
use crate::engine::{iterate, FnMap, SelfMap, State};
use crate::error::{Error, Result};
use crate::number::{fibonacci, CycloField, CyclotomicNumber, Field};

/// `F_n` for `n >= -1`, with `F_{-1} = 1`.
fn fib_from_minus_one(n: i64) -> BigInt {
    if n < 0 {
        BigInt::one()
    } else {
        fibonacci(n as u64)
    }
}

/// `fⁿ(x₁, x₂) = (F_{2n-1} x₁ + F_{2n} x₂, F_{2n} x₁ + F_{2n+1} x₂)` for
/// `f(x₁, x₂) = x₁ + x₂`.
pub fn fibonacci_closed_form<F: Field>(n: u64, s: &State<F>) -> Result<State<F>> {
    if s.arity() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            found: s.arity(),
        });
    }
    let two_n = 2 * n as i64;
    let like = &s[0];
    let lo = like.integer_like(&fib_from_minus_one(two_n - 1));
    let mid = like.integer_like(&fib_from_minus_one(two_n));
    let hi = like.integer_like(&fib_from_minus_one(two_n + 1));
    let (x1, x2) = (s[0].clone(), s[1].clone());
    State::new(vec![
        lo * x1.clone() + mid.clone() * x2.clone(),
        mid * x1 + hi * x2,
    ])
}

/// Iterate `iterate_index` of `A - Σ x_j` via its period-`(k+1)` pattern:
/// `f^p(x) = (x_{k-p+2}, .., x_k, A - Σ x_j, x_1, .., x_{k-p})`.
pub fn sum_map_closed_form<F: Field>(
    k: usize,
    constant: &F,
    iterate_index: u64,
    s: &State<F>,
) -> Result<State<F>> {
    if k == 0 {
        return Err(Error::ZeroArity);
    }
    if s.arity() != k {
        return Err(Error::ArityMismatch {
            expected: k,
            found: s.arity(),
        });
    }
    let p = (iterate_index % (k as u64 + 1)) as usize;
    if p == 0 {
        return Ok(s.clone());
    }
    let total = s.iter().cloned().fold(constant.zero_like(), |a, x| a + x);
    let mut out = Vec::with_capacity(k);
    out.extend_from_slice(&s[k + 1 - p..]);
    out.push(constant.clone() - total);
    out.extend_from_slice(&s[..k - p]);
    State::new(out)
}

/// `fⁿ(s)` for `f(x_1, .., x_k) = g(x_j)`. Positions 1 and k use the
/// closed forms `(gⁿ(x_1), .., gⁿ(x_k))` and
/// `(g^{nk-k+1}(x_k), .., g^{nk}(x_k))`; other positions run the engine.
pub fn projection_family_iterate<E, G>(
    g: &G,
    j: usize,
    k: usize,
    n: u64,
    s: &State<E>,
) -> Result<State<E>>
where
    E: Clone,
    G: SelfMap<E>,
{
    if j == 0 || j > k {
        return Err(Error::PositionOutOfRange { position: j, arity: k });
    }
    if s.arity() != k {
        return Err(Error::ArityMismatch {
            expected: k,
            found: s.arity(),
        });
    }
    if n == 0 {
        return Ok(s.clone());
    }
    if j == 1 {
        return State::new(s.iter().map(|x| g.iterate(x, n)).collect());
    }
    if j == k {
        let kk = k as u64;
        let mut cur = g.iterate(&s[k - 1], n * kk - kk + 1);
        let mut out = Vec::with_capacity(k);
        for _ in 1..k {
            let next = g.apply(&cur);
            out.push(std::mem::replace(&mut cur, next));
        }
        out.push(cur);
        return State::new(out);
    }
    let f = FnMap::new(k, |args: &[E]| g.apply(&args[j - 1]))?;
    iterate(&f, s, n)
}

/// Which closed form [`linear_roots_checks`] evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootsCheck {
    /// `t ↦ a t + b x₂` iterated: `aⁿ x₁ + b (1 - aⁿ)/(1 - a) x₂`.
    InducedFirst,
    /// `t ↦ a x₁ + b t` iterated: `bⁿ x₂ + a (1 - bⁿ)/(1 - b) x₁`.
    InducedSecond,
    /// The full iterate for `b = a²`, `a³ = 1`:
    /// `(F_{2n-1} aⁿ x₁ + F_{2n} a^{n+1} x₂, F_{2n} a^{n+2} x₁ + F_{2n+1} aⁿ x₂)`.
    Full,
}

/// `f(x₁, x₂) = a x₁ + b x₂` with `a = ζ_n`, `b = ζ_n^{n-1}` over `Q(ζ_n)`.
#[derive(Debug, Clone)]
pub struct LinearRoots {
    field: CycloField,
    a: CyclotomicNumber,
    b: CyclotomicNumber,
}

impl LinearRoots {
    /// Needs `n >= 3` so that `a` and `b` are distinct and not 1.
    pub fn new(n: u64) -> Result<Self> {
        if n < 3 {
            return Err(Error::UnsupportedRoots(format!(
                "order {n} has no two distinct primitive roots other than 1"
            )));
        }
        let field = CycloField::new(n)?;
        let a = CyclotomicNumber::zeta(&field);
        let b = CyclotomicNumber::zeta_pow(&field, n as i64 - 1);
        Ok(LinearRoots { field, a, b })
    }

    pub fn field(&self) -> &CycloField {
        &self.field
    }

    pub fn a(&self) -> &CyclotomicNumber {
        &self.a
    }

    pub fn b(&self) -> &CyclotomicNumber {
        &self.b
    }

    pub fn spec(&self) -> AffineMapSpec<CyclotomicNumber> {
        AffineMapSpec::new(
            vec![self.a.clone(), self.b.clone()],
            CyclotomicNumber::zero(&self.field),
        )
        .expect("arity 2")
    }
}

/// Geometric induced iterate `rⁿ t + c (1 - rⁿ)/(1 - r)`.
fn induced_closed_form(
    r: &CyclotomicNumber,
    c: &CyclotomicNumber,
    t: &CyclotomicNumber,
    count: u64,
) -> Result<CyclotomicNumber> {
    let one = r.one_like();
    let rn = r.pow_u64(count);
    let denom = (one.clone() - r.clone())
        .inverse()
        .ok_or_else(|| Error::UnsupportedRoots("root equal to 1".into()))?;
    Ok(rn.clone() * t.clone() + c.clone() * (one - rn) * denom)
}

/// Evaluates the chosen closed form for `f(x₁, x₂) = ζ_n x₁ + ζ_n^{n-1} x₂`.
///
/// Induced variants return the iterated component followed by the frozen
/// one; when `count` is a multiple of `n` they fail unless the iterated
/// component came back unchanged. [`RootsCheck::Full`] requires `n = 3`.
pub fn linear_roots_checks(
    n: u64,
    which: RootsCheck,
    count: u64,
    s: &State<CyclotomicNumber>,
) -> Result<State<CyclotomicNumber>> {
    if count == 0 {
        return Err(Error::InvalidArgument("iterate count must be positive".into()));
    }
    if s.arity() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            found: s.arity(),
        });
    }
    let roots = LinearRoots::new(n)?;
    let (a, b) = (&roots.a, &roots.b);
    let (x1, x2) = (s[0].embed(&roots.field)?, s[1].embed(&roots.field)?);
    let (varied, frozen, value) = match which {
        RootsCheck::InducedFirst => {
            let v = induced_closed_form(a, &(b.clone() * x2.clone()), &x1, count)?;
            (x1, x2, v)
        }
        RootsCheck::InducedSecond => {
            let v = induced_closed_form(b, &(a.clone() * x1.clone()), &x2, count)?;
            (x2, x1, v)
        }
        RootsCheck::Full => {
            if n != 3 {
                return Err(Error::UnsupportedRoots(format!(
                    "the full iterate formula needs b = a² with a³ = 1, not order {n}"
                )));
            }
            let fib = |i: i64| a.integer_like(&fib_from_minus_one(i));
            let c = count as i64;
            let an = a.pow(c)?;
            let first = fib(2 * c - 1) * an.clone() * x1.clone()
                + fib(2 * c) * a.pow(c + 1)? * x2.clone();
            let second = fib(2 * c) * a.pow(c + 2)? * x1 + fib(2 * c + 1) * an * x2;
            return State::new(vec![first, second]);
        }
    };
    if count.is_multiple_of(n) && value != varied {
        return Err(Error::InvalidArgument(format!(
            "induced iterate {count} did not return its argument"
        )));
    }
    State::new(vec![value, frozen])
}

//! `Q(ζ_n)` as `Q[z] / Φ_n(z)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{self, Poly};
use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

/// Largest supported root-of-unity order unless a caller raises it.
pub const DEFAULT_ORDER_BOUND: u64 = 64;

/// The `n`-th cyclotomic polynomial, integer coefficients lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloPolynomial {
    order: u64,
    coefficients: Vec<BigInt>,
}

impl CycloPolynomial {
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    fn to_rational(&self) -> Poly {
        self.coefficients
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect()
    }
}

impl fmt::Display for CycloPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, c) in self.coefficients.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (p, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{a}*x")?,
                (_, true) => write!(f, "x^{p}")?,
                (_, false) => write!(f, "{a}*x^{p}")?,
            }
        }
        Ok(())
    }
}

pub fn cyclotomic_polynomial(n: u64) -> Result<CycloPolynomial> {
    cyclotomic_polynomial_bounded(n, DEFAULT_ORDER_BOUND)
}

/// `Φ_n = (x^n - 1) / ∏ Φ_d` over the proper divisors `d` of `n`.
pub fn cyclotomic_polynomial_bounded(n: u64, bound: u64) -> Result<CycloPolynomial> {
    if n == 0 || n > bound {
        return Err(Error::OrderOutOfBound { order: n, bound });
    }
    let divisors: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let mut phis: Vec<(u64, Poly)> = Vec::with_capacity(divisors.len());
    for &d in &divisors {
        let mut num: Poly = vec![Rational::zero(); d as usize + 1];
        num[0] = -Rational::one();
        num[d as usize] = Rational::one();
        for (e, phi) in &phis {
            if d % e == 0 {
                let (q, r) = poly::divrem(&num, phi);
                debug_assert!(r.is_empty());
                num = q;
            }
        }
        phis.push((d, num));
    }
    let (_, phi) = phis.pop().unwrap();
    let coefficients = phi
        .into_iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect();
    Ok(CycloPolynomial {
        order: n,
        coefficients,
    })
}

#[derive(Debug)]
struct FieldInner {
    modulus: CycloPolynomial,
    modulus_q: Poly,
}

/// Handle on `Q(ζ_n)`; cheap to clone.
#[derive(Debug, Clone)]
pub struct CycloField(Arc<FieldInner>);

impl PartialEq for CycloField {
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order()
    }
}

impl Eq for CycloField {}

impl CycloField {
    pub fn new(order: u64) -> Result<Self> {
        Self::with_bound(order, DEFAULT_ORDER_BOUND)
    }

    pub fn with_bound(order: u64, bound: u64) -> Result<Self> {
        let modulus = cyclotomic_polynomial_bounded(order, bound)?;
        let modulus_q = modulus.to_rational();
        Ok(CycloField(Arc::new(FieldInner { modulus, modulus_q })))
    }

    /// `Q` itself, as `Q(ζ_1)`.
    pub fn rationals() -> Self {
        Self::new(1).expect("order 1 is always supported")
    }

    pub fn order(&self) -> u64 {
        self.0.modulus.order
    }

    pub fn degree(&self) -> usize {
        self.0.modulus.degree()
    }

    pub fn modulus(&self) -> &CycloPolynomial {
        &self.0.modulus
    }

    fn reduce(&self, mut p: Poly) -> Vec<Rational> {
        poly::trim(&mut p);
        let mut r = if p.len() > self.degree() {
            poly::divrem(&p, &self.0.modulus_q).1
        } else {
            p
        };
        r.resize(self.degree(), Rational::zero());
        r
    }
}

/// An element of `Q(ζ_n)`: a residue modulo `Φ_n` with exactly
/// `deg Φ_n` rational coefficients, lowest power first.
#[derive(Clone)]
pub struct CyclotomicNumber {
    field: CycloField,
    coeffs: Vec<Rational>,
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.coeffs == other.coeffs
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} in Q(ζ{})]", self, self.order())
    }
}

impl CyclotomicNumber {
    pub fn zero(field: &CycloField) -> Self {
        CyclotomicNumber {
            field: field.clone(),
            coeffs: vec![Rational::zero(); field.degree()],
        }
    }

    pub fn one(field: &CycloField) -> Self {
        Self::from_rational(field, Rational::one())
    }

    pub fn from_rational(field: &CycloField, q: Rational) -> Self {
        let mut out = Self::zero(field);
        out.coeffs[0] = q;
        out
    }

    pub fn from_integer(field: &CycloField, v: i64) -> Self {
        Self::from_rational(field, Rational::from_integer(v.into()))
    }

    /// The polynomial `Σ c_i z^i`, reduced.
    pub fn from_coefficients(field: &CycloField, coeffs: Vec<Rational>) -> Self {
        CyclotomicNumber {
            field: field.clone(),
            coeffs: field.reduce(coeffs),
        }
    }

    /// The generator `ζ_n`.
    pub fn zeta(field: &CycloField) -> Self {
        Self::zeta_pow(field, 1)
    }

    /// `ζ_n^e` for any integer `e`.
    pub fn zeta_pow(field: &CycloField, e: i64) -> Self {
        let e = e.rem_euclid(field.order() as i64) as usize;
        let mut p = vec![Rational::zero(); e + 1];
        p[e] = Rational::one();
        Self::from_coefficients(field, p)
    }

    pub fn field(&self) -> &CycloField {
        &self.field
    }

    pub fn order(&self) -> u64 {
        self.field.order()
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The value as a rational, if it lies in `Q`.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CyclotomicNumber {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self::from_coefficients(
            &self.field,
            poly::mul(&self.coeffs, &other.coeffs),
        ))
    }

    pub fn checked_inverse(&self) -> Result<Self> {
        let mut a = self.coeffs.clone();
        poly::trim(&mut a);
        if a.is_empty() {
            return Err(Error::ZeroInverse);
        }
        // Φ_n is irreducible, so every nonzero residue is a unit.
        let inv = poly::inverse_mod(&a, &self.field.0.modulus_q)
            .expect("nonzero residue modulo an irreducible polynomial");
        Ok(Self::from_coefficients(&self.field, inv))
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, e: i64) -> Result<Self> {
        use super::Field;
        let base = if e < 0 {
            self.checked_inverse()?
        } else {
            self.clone()
        };
        Ok(base.pow_u64(e.unsigned_abs()))
    }

    /// Image under `Q(ζ_a) -> Q(ζ_L)`, `ζ_a ↦ ζ_L^{L/a}`, for `a | L`.
    pub fn embed(&self, target: &CycloField) -> Result<Self> {
        let (a, l) = (self.order(), target.order());
        if l % a != 0 {
            return Err(Error::OrderMismatch { left: a, right: l });
        }
        let step = (l / a) as usize;
        let mut p = vec![Rational::zero(); step * self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            p[i * step] = c.clone();
        }
        Ok(Self::from_coefficients(target, p))
    }

    /// Parses the rendering produced by `Display`, e.g. `-1/2*z + 3`.
    pub fn parse(text: &str, field: &CycloField) -> Result<Self> {
        let coeffs = parse_zpoly(text)?;
        Ok(Self::from_coefficients(field, coeffs))
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let a = c.abs();
            let coef = format_rational(&a);
            match (p, a.is_one()) {
                (0, _) => write!(f, "{coef}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{coef}*z")?,
                (_, true) => write!(f, "z^{p}")?,
                (_, false) => write!(f, "{coef}*z^{p}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn parse_zpoly(text: &str) -> Result<Poly> {
    let bad = |why: &str| Error::InvalidArgument(format!("bad cyclotomic literal {text:?}: {why}"));
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut i = 0;
    let mut out: Poly = Vec::new();
    let number = |i: &mut usize| -> Option<BigInt> {
        let start = *i;
        while *i < chars.len() && chars[*i].is_ascii_digit() {
            *i += 1;
        }
        if start == *i {
            return None;
        }
        chars[start..*i].iter().collect::<String>().parse().ok()
    };
    if chars.is_empty() {
        return Err(bad("empty"));
    }
    while i < chars.len() {
        let mut sign = Rational::one();
        if chars[i] == '+' || chars[i] == '-' {
            if chars[i] == '-' {
                sign = -sign;
            }
            i += 1;
        } else if i > 0 {
            return Err(bad("expected '+' or '-'"));
        }
        let mut coef = Rational::one();
        let mut has_number = false;
        if let Some(n) = number(&mut i) {
            has_number = true;
            let mut d = BigInt::one();
            if chars.get(i) == Some(&'/') {
                i += 1;
                d = number(&mut i).ok_or_else(|| bad("missing denominator"))?;
                if d.is_zero() {
                    return Err(bad("zero denominator"));
                }
            }
            coef = Rational::new(n, d);
            match chars.get(i) {
                Some('*') => {
                    i += 1;
                    if chars.get(i) != Some(&'z') {
                        return Err(bad("expected 'z' after '*'"));
                    }
                }
                Some('z') => return Err(bad("expected '*' before 'z'")),
                _ => {}
            }
        }
        let mut power = 0usize;
        if chars.get(i) == Some(&'z') {
            i += 1;
            power = 1;
            if chars.get(i) == Some(&'^') {
                i += 1;
                power = number(&mut i)
                    .and_then(|p| usize::try_from(p).ok())
                    .filter(|&p| p <= 1 << 16)
                    .ok_or_else(|| bad("bad exponent"))?;
            }
        } else if !has_number {
            return Err(bad("expected a term"));
        }
        if out.len() <= power {
            out.resize(power + 1, Rational::zero());
        }
        out[power] += sign * coef;
    }
    Ok(out)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&CyclotomicNumber> for &CyclotomicNumber {
            type Output = CyclotomicNumber;

            fn $method(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
                self.$checked(rhs).expect("cyclotomic operands of different order")
            }
        }

        impl $trait<CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;

            fn $method(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;

            fn $method(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;

    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;

    fn neg(mut self) -> CyclotomicNumber {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

/// Least common multiple of root orders, for choosing a shared field;
/// `None` once it exceeds `bound`.
pub(crate) fn lcm_orders(orders: impl IntoIterator<Item = u64>, bound: u64) -> Option<u64> {
    orders.into_iter().try_fold(1u64, |acc, o| {
        let l = u128::from(acc).lcm(&u128::from(o));
        (l <= u128::from(bound)).then_some(l as u64)
    })
}

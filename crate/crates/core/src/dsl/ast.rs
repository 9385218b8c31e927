use std::fmt;

use crate::error::{Error, Result};
use crate::number::{format_rational, CycloField, CyclotomicNumber, Field, Rational};

/// Syntax tree of a map definition's right-hand side. Parenthesized
/// subexpressions keep their [`MapExpr::Group`] node so rendering
/// reproduces the parsed structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapExpr {
    /// 1-based variable index.
    Var(usize),
    /// A nonnegative literal `p` or `p/q`.
    Rational(Rational),
    /// `zeta(order)^power`.
    Zeta { order: u64, power: u64 },
    Neg(Box<MapExpr>),
    Add(Box<MapExpr>, Box<MapExpr>),
    Sub(Box<MapExpr>, Box<MapExpr>),
    Mul(Box<MapExpr>, Box<MapExpr>),
    Group(Box<MapExpr>),
}

impl fmt::Display for MapExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapExpr::Var(i) => write!(f, "x{i}"),
            MapExpr::Rational(q) => write!(f, "{}", format_rational(q)),
            MapExpr::Zeta { order, power: 1 } => write!(f, "zeta({order})"),
            MapExpr::Zeta { order, power } => write!(f, "zeta({order})^{power}"),
            MapExpr::Neg(e) => write!(f, "-{e}"),
            MapExpr::Add(a, b) => write!(f, "{a} + {b}"),
            MapExpr::Sub(a, b) => write!(f, "{a} - {b}"),
            MapExpr::Mul(a, b) => write!(f, "{a}*{b}"),
            MapExpr::Group(e) => write!(f, "({e})"),
        }
    }
}

/// `c_0 + Σ c_i x_i`; `coefficients[i]` multiplies `x_{i+1}`.
#[derive(Debug, Clone, PartialEq)]
pub(super) struct LinearForm {
    pub coefficients: Vec<CyclotomicNumber>,
    pub constant: CyclotomicNumber,
}

impl LinearForm {
    fn constant(c: CyclotomicNumber, arity: usize) -> Self {
        LinearForm {
            coefficients: vec![c.zero_like(); arity],
            constant: c,
        }
    }

    fn is_constant(&self) -> bool {
        self.coefficients.iter().all(CyclotomicNumber::is_zero)
    }

    fn scale(self, c: &CyclotomicNumber) -> Self {
        LinearForm {
            coefficients: self.coefficients.into_iter().map(|a| a * c).collect(),
            constant: self.constant * c,
        }
    }

    fn combine(self, other: Self, sign: bool) -> Self {
        let op = |a: CyclotomicNumber, b: CyclotomicNumber| if sign { a + b } else { a - b };
        LinearForm {
            coefficients: self
                .coefficients
                .into_iter()
                .zip(other.coefficients)
                .map(|(a, b)| op(a, b))
                .collect(),
            constant: op(self.constant, other.constant),
        }
    }
}

impl MapExpr {
    pub fn negation(e: MapExpr) -> Self {
        MapExpr::Neg(Box::new(e))
    }

    pub fn plus(a: MapExpr, b: MapExpr) -> Self {
        MapExpr::Add(Box::new(a), Box::new(b))
    }

    pub fn minus(a: MapExpr, b: MapExpr) -> Self {
        MapExpr::Sub(Box::new(a), Box::new(b))
    }

    pub fn times(a: MapExpr, b: MapExpr) -> Self {
        MapExpr::Mul(Box::new(a), Box::new(b))
    }

    pub fn group(e: MapExpr) -> Self {
        MapExpr::Group(Box::new(e))
    }

    fn children(&self) -> Vec<&MapExpr> {
        match self {
            MapExpr::Var(_) | MapExpr::Rational(_) | MapExpr::Zeta { .. } => vec![],
            MapExpr::Neg(e) | MapExpr::Group(e) => vec![e],
            MapExpr::Add(a, b) | MapExpr::Sub(a, b) | MapExpr::Mul(a, b) => vec![a, b],
        }
    }

    /// Every `zeta(n)` order appearing in the expression.
    pub fn zeta_orders(&self) -> Vec<u64> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(e) = stack.pop() {
            if let MapExpr::Zeta { order, .. } = e {
                out.push(*order);
            }
            stack.extend(e.children());
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Largest variable index used, 0 if none.
    pub fn max_variable(&self) -> usize {
        let mut best = 0;
        let mut stack = vec![self];
        while let Some(e) = stack.pop() {
            if let MapExpr::Var(i) = e {
                best = best.max(*i);
            }
            stack.extend(e.children());
        }
        best
    }

    fn zeta_value(field: &CycloField, order: u64, power: u64) -> Result<CyclotomicNumber> {
        let l = field.order();
        if !l.is_multiple_of(order) {
            return Err(Error::OrderMismatch { left: order, right: l });
        }
        let e = ((l / order) as u128 * (power % order) as u128 % l as u128) as i64;
        Ok(CyclotomicNumber::zeta_pow(field, e))
    }

    /// Evaluates with `args[i]` bound to `x_{i+1}`, in `field`.
    pub fn eval(&self, field: &CycloField, args: &[CyclotomicNumber]) -> Result<CyclotomicNumber> {
        Ok(match self {
            MapExpr::Var(i) => args
                .get(i.wrapping_sub(1))
                .cloned()
                .ok_or(Error::PositionOutOfRange {
                    position: *i,
                    arity: args.len(),
                })?,
            MapExpr::Rational(q) => CyclotomicNumber::from_rational(field, q.clone()),
            MapExpr::Zeta { order, power } => Self::zeta_value(field, *order, *power)?,
            MapExpr::Neg(e) => -e.eval(field, args)?,
            MapExpr::Group(e) => e.eval(field, args)?,
            MapExpr::Add(a, b) => a.eval(field, args)?.checked_add(&b.eval(field, args)?)?,
            MapExpr::Sub(a, b) => a.eval(field, args)?.checked_sub(&b.eval(field, args)?)?,
            MapExpr::Mul(a, b) => a.eval(field, args)?.checked_mul(&b.eval(field, args)?)?,
        })
    }

    /// The expression as an affine form in `arity` variables. A product of
    /// two non-constant factors is rejected even if it later cancels.
    pub(super) fn linear_form(&self, field: &CycloField, arity: usize) -> Result<LinearForm> {
        Ok(match self {
            MapExpr::Var(i) => {
                if *i == 0 || *i > arity {
                    return Err(Error::PositionOutOfRange { position: *i, arity });
                }
                let mut form = LinearForm::constant(CyclotomicNumber::zero(field), arity);
                form.coefficients[i - 1] = CyclotomicNumber::one(field);
                form
            }
            MapExpr::Rational(q) => {
                LinearForm::constant(CyclotomicNumber::from_rational(field, q.clone()), arity)
            }
            MapExpr::Zeta { order, power } => {
                LinearForm::constant(Self::zeta_value(field, *order, *power)?, arity)
            }
            MapExpr::Neg(e) => e.linear_form(field, arity)?.scale(&-CyclotomicNumber::one(field)),
            MapExpr::Group(e) => e.linear_form(field, arity)?,
            MapExpr::Add(a, b) => a.linear_form(field, arity)?.combine(b.linear_form(field, arity)?, true),
            MapExpr::Sub(a, b) => a.linear_form(field, arity)?.combine(b.linear_form(field, arity)?, false),
            MapExpr::Mul(a, b) => {
                let (fa, fb) = (a.linear_form(field, arity)?, b.linear_form(field, arity)?);
                if fa.is_constant() {
                    let c = fa.constant.clone();
                    fb.scale(&c)
                } else if fb.is_constant() {
                    let c = fb.constant.clone();
                    fa.scale(&c)
                } else {
                    return Err(Error::NotAffine);
                }
            }
        })
    }
}

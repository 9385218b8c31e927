//! Text syntax for affine-style map definitions over `Q` and `Q(ζ_n)`:
//!
//! ```text
//! def    := "f" "(" var ("," var)* ")" "=" expr
//! expr   := term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := rational | "zeta" "(" int ")" ["^" int] | var | "(" expr ")" | "-" factor
//! var    := "x" int
//! ```
//!
//! Whitespace (including newlines) is insignificant. Seeds and other
//! scalars use the same syntax without variables.

mod ast;
mod lexer;
mod parser;
mod render;

use std::fmt;

pub use ast::MapExpr;
use parser::Parser;
pub use render::{affine_def, format_scalar, scalar_expr};

use crate::affine::AffineMapSpec;
use crate::engine::{IterableMap, State};
use crate::error::{Error, Result};
use crate::number::{lcm_orders, CycloField, CyclotomicNumber, DEFAULT_ORDER_BOUND};

/// A parsed definition `f(x1, .., xk) = expr`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapDef {
    pub arity: usize,
    pub expr: MapExpr,
}

impl fmt::Display for MapDef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f(")?;
        for i in 1..=self.arity {
            if i > 1 {
                write!(f, ", ")?;
            }
            write!(f, "x{i}")?;
        }
        write!(f, ") = {}", self.expr)
    }
}

pub fn parse_map_def(text: &str) -> Result<MapDef> {
    let mut p = Parser::new(text)?;
    let arity = p.header()?;
    let expr = p.expr()?;
    p.finish()?;
    Ok(MapDef { arity, expr })
}

/// Comma-separated constants such as `1/2, zeta(3)^2 - 1`.
pub fn parse_scalars(text: &str) -> Result<Vec<MapExpr>> {
    let mut p = Parser::new(text)?;
    let out = p.scalar_list()?;
    p.finish()?;
    Ok(out)
}

/// `Q(ζ_L)` with `L` the lcm of `orders`, which must not exceed the
/// supported bound.
pub fn shared_field<'a>(exprs: impl IntoIterator<Item = &'a MapExpr>) -> Result<CycloField> {
    let orders = exprs.into_iter().flat_map(MapExpr::zeta_orders);
    match lcm_orders(orders, DEFAULT_ORDER_BOUND) {
        Some(l) => CycloField::new(l),
        None => Err(Error::UnsupportedRoots(format!(
            "the roots of unity used need a field of order above {DEFAULT_ORDER_BOUND}"
        ))),
    }
}

/// Evaluates constants in `field`.
pub fn eval_scalars(exprs: &[MapExpr], field: &CycloField) -> Result<Vec<CyclotomicNumber>> {
    exprs.iter().map(|e| e.eval(field, &[])).collect()
}

/// A definition bound to a field, usable as an [`IterableMap`]. Arguments
/// must lie in that field.
#[derive(Debug, Clone)]
pub struct CompiledMap {
    def: MapDef,
    field: CycloField,
}

impl CompiledMap {
    /// Compiles in the smallest field holding the definition's roots.
    pub fn new(def: MapDef) -> Result<Self> {
        let field = shared_field([&def.expr])?;
        Ok(CompiledMap { def, field })
    }

    pub fn with_field(def: MapDef, field: &CycloField) -> Result<Self> {
        for order in def.expr.zeta_orders() {
            if !field.order().is_multiple_of(order) {
                return Err(Error::OrderMismatch {
                    left: order,
                    right: field.order(),
                });
            }
        }
        Ok(CompiledMap {
            def,
            field: field.clone(),
        })
    }

    pub fn def(&self) -> &MapDef {
        &self.def
    }

    pub fn field(&self) -> &CycloField {
        &self.field
    }

    /// `Σ a_i x_i + A`, or [`Error::NotAffine`].
    pub fn to_affine(&self) -> Result<AffineMapSpec<CyclotomicNumber>> {
        let form = self.def.expr.linear_form(&self.field, self.def.arity)?;
        AffineMapSpec::new(form.coefficients, form.constant)
    }
}

impl IterableMap<CyclotomicNumber> for CompiledMap {
    fn arity(&self) -> usize {
        self.def.arity
    }

    fn apply(&self, args: &[CyclotomicNumber]) -> CyclotomicNumber {
        self.def
            .expr
            .eval(&self.field, args)
            .expect("arguments in the compiled field")
    }
}

/// Parses a definition and a seed and compiles both in one shared field.
pub fn compile_with_seed(def: &str, seed: &str) -> Result<(CompiledMap, State<CyclotomicNumber>)> {
    let def = parse_map_def(def)?;
    let scalars = parse_scalars(seed)?;
    if scalars.len() != def.arity {
        return Err(Error::ArityMismatch {
            expected: def.arity,
            found: scalars.len(),
        });
    }
    let field = shared_field(std::iter::once(&def.expr).chain(&scalars))?;
    let seed = State::new(eval_scalars(&scalars, &field)?)?;
    Ok((CompiledMap::with_field(def, &field)?, seed))
}

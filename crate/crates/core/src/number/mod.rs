//! Exact scalars: arbitrary-precision rationals and cyclotomic fields `Q(ζ_n)`.

mod cyclotomic;
mod field;
mod poly;
mod rational;

pub use cyclotomic::{
    cyclotomic_polynomial, cyclotomic_polynomial_bounded, CycloField, CycloPolynomial,
    CyclotomicNumber, DEFAULT_ORDER_BOUND,
};
pub(crate) use cyclotomic::lcm_orders;
pub use field::Field;
pub use rational::{fibonacci, format_rational, parse_rational, rational, Rational};

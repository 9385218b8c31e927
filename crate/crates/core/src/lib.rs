//! Iterates of multivariate maps `f: Xᵏ -> X` in the sense of order-k
//! recurrences: the first iterate `f¹` sends `(a_1, .., a_k)` to the next k
//! terms of `a_{n+k} = f(a_n, .., a_{n+k-1})`, and `fⁿ` repeats it.
//!
//! - [`engine`]: generic first iterate, iterates, orbits and induced maps.
//! - [`table`]: maps on `{0, .., m-1}` stored as tables, exact cycle analysis
//!   and enumeration.
//! - [`number`]: exact rationals and cyclotomic fields.
//! - [`affine`]: affine maps via matrix powers, plus closed-form oracles.
//! - [`recurrence`]: the sequence view, period detection, arity lifting.
//! - [`dsl`]: a small text syntax for map definitions.

pub mod affine;
pub mod dsl;
pub mod engine;
pub mod error;
pub mod number;
pub mod recurrence;
pub mod table;

pub use engine::{first_iterate, iterate, FnMap, IterableMap, State};
pub use error::{Error, ParseError, Position, Result};
pub use number::{CycloField, CyclotomicNumber, Rational};
pub use table::FiniteTable;

//! Iteration of maps `f: X^k -> X`.
//!
//! The first iterate `f¹` is the self-map on `X^k` that advances the order-k
//! recurrence `a_{n+k} = f(a_n, ..., a_{n+k-1})` by `k` terms: component `j`
//! of `f¹(x)` is `f` applied to `x_j, ..., x_k` followed by the components
//! `1..j-1` already computed. Higher iterates are ordinary iterates of `f¹`.
//!
//! Everything here only needs equality on elements; no hashing or ordering.

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};

/// A map `X^k -> X`.
///
/// `apply` receives exactly `arity()` arguments and must be deterministic.
pub trait IterableMap<E> {
    fn arity(&self) -> usize;
    fn apply(&self, args: &[E]) -> E;
}

impl<E, M: IterableMap<E> + ?Sized> IterableMap<E> for &M {
    fn arity(&self) -> usize {
        (**self).arity()
    }

    fn apply(&self, args: &[E]) -> E {
        (**self).apply(args)
    }
}

impl<E, M: IterableMap<E> + ?Sized> IterableMap<E> for Box<M> {
    fn arity(&self) -> usize {
        (**self).arity()
    }

    fn apply(&self, args: &[E]) -> E {
        (**self).apply(args)
    }
}

/// Adapts a closure over argument slices into an [`IterableMap`].
#[derive(Clone)]
pub struct FnMap<F> {
    arity: usize,
    f: F,
}

impl<F> FnMap<F> {
    pub fn new(arity: usize, f: F) -> Result<Self> {
        if arity == 0 {
            return Err(Error::ZeroArity);
        }
        Ok(FnMap { arity, f })
    }
}

impl<E, F: Fn(&[E]) -> E> IterableMap<E> for FnMap<F> {
    fn arity(&self) -> usize {
        self.arity
    }

    fn apply(&self, args: &[E]) -> E {
        (self.f)(args)
    }
}

impl<F> fmt::Debug for FnMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FnMap").field("arity", &self.arity).finish()
    }
}

/// An ordered k-tuple, `k >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct State<E>(Vec<E>);

impl<E> State<E> {
    pub fn new(elements: Vec<E>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::ZeroArity);
        }
        Ok(State(elements))
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn elements(&self) -> &[E] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<E> {
        self.0
    }
}

impl<E> Deref for State<E> {
    type Target = [E];

    fn deref(&self) -> &[E] {
        &self.0
    }
}

impl<E: fmt::Display> fmt::Display for State<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

fn check_arity<E, M: IterableMap<E> + ?Sized>(f: &M, s: &[E]) -> Result<()> {
    if f.arity() != s.len() {
        return Err(Error::ArityMismatch {
            expected: f.arity(),
            found: s.len(),
        });
    }
    Ok(())
}

/// Writes `f¹(state)` into `out`, using `buf` as the extended-sequence scratch.
/// `state.len()` must equal `f.arity()`.
pub(crate) fn first_iterate_into<E: Clone, M: IterableMap<E> + ?Sized>(
    f: &M,
    state: &[E],
    buf: &mut Vec<E>,
) {
    let k = state.len();
    buf.clear();
    buf.extend_from_slice(state);
    for j in 0..k {
        let next = f.apply(&buf[j..j + k]);
        buf.push(next);
    }
    buf.drain(..k);
}

/// The first iterate `f¹(s)`.
pub fn first_iterate<E, M>(f: &M, s: &State<E>) -> Result<State<E>>
where
    E: Clone,
    M: IterableMap<E> + ?Sized,
{
    check_arity(f, s)?;
    let mut buf = Vec::with_capacity(2 * s.arity());
    first_iterate_into(f, s, &mut buf);
    Ok(State(buf))
}

/// The `n`-th iterate `fⁿ(s)`, by `n` applications of `f¹`.
pub fn iterate<E, M>(f: &M, s: &State<E>, n: u64) -> Result<State<E>>
where
    E: Clone,
    M: IterableMap<E> + ?Sized,
{
    check_arity(f, s)?;
    let mut cur = s.0.clone();
    let mut buf = Vec::with_capacity(2 * s.arity());
    for _ in 0..n {
        first_iterate_into(f, &cur, &mut buf);
        std::mem::swap(&mut cur, &mut buf);
    }
    Ok(State(cur))
}

/// A trajectory `s, f¹(s), f²(s), ...`.
#[derive(Debug, Clone, PartialEq)]
pub struct Orbit<E> {
    pub states: Vec<State<E>>,
    /// The start state came back after `states.len()` steps.
    pub recurred: bool,
}

/// Collects at most `max_steps` states of the orbit of `s`, stopping early
/// when the start state recurs.
pub fn orbit<E, M>(f: &M, s: &State<E>, max_steps: usize) -> Result<Orbit<E>>
where
    E: Clone + PartialEq,
    M: IterableMap<E> + ?Sized,
{
    check_arity(f, s)?;
    if max_steps == 0 {
        return Err(Error::InvalidArgument("max_steps must be positive".into()));
    }
    let mut states = vec![s.clone()];
    let mut buf = Vec::with_capacity(2 * s.arity());
    loop {
        first_iterate_into(f, states.last().unwrap(), &mut buf);
        if buf[..] == s[..] {
            return Ok(Orbit {
                states,
                recurred: true,
            });
        }
        if states.len() == max_steps {
            return Ok(Orbit {
                states,
                recurred: false,
            });
        }
        states.push(State(buf.clone()));
    }
}

/// Smallest `n <= bound` with `fⁿ(s) = s`.
pub fn point_involutory_order<E, M>(f: &M, s: &State<E>, bound: u64) -> Result<Option<u64>>
where
    E: Clone + PartialEq,
    M: IterableMap<E> + ?Sized,
{
    check_arity(f, s)?;
    if bound == 0 {
        return Err(Error::InvalidArgument("bound must be positive".into()));
    }
    let mut cur = s.0.clone();
    let mut buf = Vec::with_capacity(2 * s.arity());
    for n in 1..=bound {
        first_iterate_into(f, &cur, &mut buf);
        std::mem::swap(&mut cur, &mut buf);
        if cur[..] == s[..] {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// A self-map `X -> X`, with iteration.
pub trait SelfMap<E> {
    fn apply(&self, x: &E) -> E;

    fn iterate(&self, x: &E, n: u64) -> E
    where
        E: Clone,
    {
        let mut cur = x.clone();
        for _ in 0..n {
            cur = self.apply(&cur);
        }
        cur
    }
}

/// Wraps a closure as a [`SelfMap`] with the default iteration.
#[derive(Debug, Clone, Copy)]
pub struct FnSelfMap<F>(pub F);

impl<E, F: Fn(&E) -> E> SelfMap<E> for FnSelfMap<F> {
    fn apply(&self, x: &E) -> E {
        (self.0)(x)
    }
}

/// Which argument varies, and the values the others are frozen to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedContext<E> {
    /// 1-based argument position.
    pub position: usize,
    /// The remaining `k - 1` arguments in their original order.
    pub fixed: Vec<E>,
}

impl<E> InducedContext<E> {
    pub fn new(position: usize, fixed: Vec<E>) -> Self {
        InducedContext { position, fixed }
    }
}

/// The one-argument map `t ↦ f(x_1, .., x_{j-1}, t, x_{j+1}, .., x_k)`.
#[derive(Debug, Clone)]
pub struct InducedMap<'a, M: ?Sized, E> {
    map: &'a M,
    position: usize,
    fixed: Vec<E>,
}

impl<E: Clone, M: IterableMap<E> + ?Sized> SelfMap<E> for InducedMap<'_, M, E> {
    fn apply(&self, t: &E) -> E {
        let mut args = Vec::with_capacity(self.fixed.len() + 1);
        args.extend_from_slice(&self.fixed[..self.position - 1]);
        args.push(t.clone());
        args.extend_from_slice(&self.fixed[self.position - 1..]);
        self.map.apply(&args)
    }
}

pub fn induced_self_map<'a, E, M>(
    f: &'a M,
    ctx: &InducedContext<E>,
) -> Result<InducedMap<'a, M, E>>
where
    E: Clone,
    M: IterableMap<E> + ?Sized,
{
    let k = f.arity();
    if ctx.position == 0 || ctx.position > k {
        return Err(Error::PositionOutOfRange {
            position: ctx.position,
            arity: k,
        });
    }
    if ctx.fixed.len() != k - 1 {
        return Err(Error::ContextLength {
            expected: k - 1,
            found: ctx.fixed.len(),
        });
    }
    Ok(InducedMap {
        map: f,
        position: ctx.position,
        fixed: ctx.fixed.clone(),
    })
}

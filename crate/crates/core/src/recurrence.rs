//! The order-k recurrence `a_{n+k} = f(a_n, .., a_{n+k-1})` seen as a
//! sequence: generation, period detection, and the correspondence between
//! sequence periods and point-involutory orders.

use num_integer::Integer;

use crate::affine::AffineMapSpec;
use crate::engine::{iterate, IterableMap, State};
use crate::error::{Error, Result};
use crate::number::Field;
use crate::table::{cycle_report, state_from_index, FiniteTable};

/// Terms materialized by [`detect_minimal_period`] unless told otherwise.
pub const DEFAULT_PERIOD_BOUND: usize = 10_000;

/// A map together with the `k` initial terms.
#[derive(Debug, Clone)]
pub struct RecurrenceSpec<M, E> {
    map: M,
    seed: State<E>,
}

impl<M, E> RecurrenceSpec<M, E>
where
    E: Clone,
    M: IterableMap<E>,
{
    pub fn new(map: M, seed: State<E>) -> Result<Self> {
        if map.arity() != seed.arity() {
            return Err(Error::ArityMismatch {
                expected: map.arity(),
                found: seed.arity(),
            });
        }
        Ok(RecurrenceSpec { map, seed })
    }

    pub fn map(&self) -> &M {
        &self.map
    }

    pub fn seed(&self) -> &State<E> {
        &self.seed
    }

    pub fn arity(&self) -> usize {
        self.seed.arity()
    }
}

/// The first `count` terms, seed first.
pub fn generate<M, E>(spec: &RecurrenceSpec<M, E>, count: usize) -> Result<Vec<E>>
where
    E: Clone,
    M: IterableMap<E>,
{
    let k = spec.arity();
    if count < k {
        return Err(Error::InvalidArgument(format!(
            "need at least {k} terms, asked for {count}"
        )));
    }
    let mut terms = Vec::with_capacity(count);
    terms.extend_from_slice(spec.seed.elements());
    for i in 0..count - k {
        let next = spec.map.apply(&terms[i..i + k]);
        terms.push(next);
    }
    Ok(terms)
}

/// Whether terms `nk+1 ..= nk+k` of the sequence equal `fⁿ(seed)`.
pub fn consistency_check<M, E>(spec: &RecurrenceSpec<M, E>, n: u64) -> Result<bool>
where
    E: Clone + PartialEq,
    M: IterableMap<E>,
{
    let k = spec.arity();
    let start = usize::try_from(n)
        .ok()
        .and_then(|n| n.checked_mul(k))
        .ok_or_else(|| Error::InvalidArgument(format!("iterate {n} too large to materialize")))?;
    let terms = generate(spec, start + k)?;
    let state = iterate(&spec.map, &spec.seed, n)?;
    Ok(terms[start..] == state[..])
}

/// Eventual periodicity of a generated sequence. Indices are 0-based term
/// positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleFinding {
    /// Least `j` with `a_{i+j} = a_i` for all `i >= preperiod`.
    pub minimal_period: Option<usize>,
    /// Number of terms before the periodic part.
    pub preperiod: usize,
    /// Start of the first window of `k` terms that repeats an earlier one.
    pub witness: Option<usize>,
}

/// Finds the first window of `k` consecutive terms equal to an earlier
/// window among the first `bound` terms. Windows determine everything that
/// follows, so the gap between the two is the minimal period and the
/// earlier start is the preperiod.
pub fn detect_minimal_period<M, E>(spec: &RecurrenceSpec<M, E>, bound: usize) -> Result<CycleFinding>
where
    E: Clone + PartialEq,
    M: IterableMap<E>,
{
    if bound == 0 {
        return Err(Error::InvalidArgument("bound must be positive".into()));
    }
    let k = spec.arity();
    let terms = generate(spec, bound.max(k))?;
    let windows = terms.len() - k + 1;
    for q in 1..windows {
        let later = &terms[q..q + k];
        if let Some(p) = (0..q).find(|&p| terms[p] == later[0] && terms[p..p + k] == *later) {
            return Ok(CycleFinding {
                minimal_period: Some(q - p),
                preperiod: p,
                witness: Some(q),
            });
        }
    }
    Ok(CycleFinding {
        minimal_period: None,
        preperiod: 0,
        witness: None,
    })
}

/// Minimal period of a purely periodic sequence whose period divides
/// `terms.len()`.
fn cyclic_period<E: PartialEq>(terms: &[E]) -> usize {
    let len = terms.len();
    (1..=len)
        .filter(|d| len.is_multiple_of(*d))
        .find(|&d| (0..len).all(|i| terms[i] == terms[(i + d) % len]))
        .unwrap_or(len)
}

/// One cyclic state of `f¹` and the sequence it seeds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Claim1Entry {
    pub state: usize,
    /// Least `n >= 1` with `fⁿ(s) = s`.
    pub state_period: usize,
    /// Minimal period `j` of the seeded sequence.
    pub sequence_period: usize,
    /// `n = j / gcd(j, k)`.
    pub direction1: bool,
    pub j_divides_n: bool,
    pub j_divides_nk: bool,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Claim1Tally {
    pub states: usize,
    pub direction1: usize,
    pub j_divides_n: usize,
    pub j_divides_nk: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim1Report {
    pub k: usize,
    /// Ordered by state index.
    pub entries: Vec<Claim1Entry>,
    pub tally: Claim1Tally,
}

impl Claim1Report {
    pub fn direction1_holds(&self) -> bool {
        self.tally.direction1 == self.tally.states
    }

    pub fn j_divides_nk_holds(&self) -> bool {
        self.tally.j_divides_nk == self.tally.states
    }

    pub fn j_divides_n_holds(&self) -> bool {
        self.tally.j_divides_n == self.tally.states
    }
}

/// Compares, for every state on a cycle of `f¹`, the state period `n` with
/// the minimal period `j` of the sequence seeded there. `j` is measured on
/// the generated terms alone.
pub fn claim1_report(t: &FiniteTable) -> Claim1Report {
    let k = t.k();
    let report = cycle_report(t);
    let mut entries = Vec::new();
    let mut tally = Claim1Tally::default();
    for (idx, period) in report.per_point_period.iter().enumerate() {
        let Some(n) = *period else { continue };
        let seed = State::new(state_from_index(idx, t.m(), k).expect("index in range"))
            .expect("nonempty");
        let spec = RecurrenceSpec::new(t, seed).expect("arity matches");
        let terms = generate(&spec, n * k).expect("at least k terms");
        let j = cyclic_period(&terms);
        let entry = Claim1Entry {
            state: idx,
            state_period: n,
            sequence_period: j,
            direction1: n == j / j.gcd(&k),
            j_divides_n: n % j == 0,
            j_divides_nk: (n * k).is_multiple_of(j),
        };
        tally.states += 1;
        tally.direction1 += usize::from(entry.direction1);
        tally.j_divides_n += usize::from(entry.j_divides_n);
        tally.j_divides_nk += usize::from(entry.j_divides_nk);
        entries.push(entry);
    }
    Claim1Report { k, entries, tally }
}

/// A `k`-ary map lifted to arity `k' > k`: the inputs' first `k` terms are
/// continued with `f` up to `x̃_{k'+1}`, which is the value returned.
#[derive(Debug, Clone)]
pub struct AugmentedMap<M> {
    inner: M,
    target_arity: usize,
}

impl<M> AugmentedMap<M> {
    pub fn inner(&self) -> &M {
        &self.inner
    }
}

pub fn augment<E, M: IterableMap<E>>(f: M, target_arity: usize) -> Result<AugmentedMap<M>> {
    let k = f.arity();
    if target_arity <= k {
        return Err(Error::InvalidArgument(format!(
            "target arity {target_arity} must exceed {k}"
        )));
    }
    Ok(AugmentedMap {
        inner: f,
        target_arity,
    })
}

impl<E: Clone, M: IterableMap<E>> IterableMap<E> for AugmentedMap<M> {
    fn arity(&self) -> usize {
        self.target_arity
    }

    fn apply(&self, args: &[E]) -> E {
        let k = self.inner.arity();
        let mut ext = Vec::with_capacity(self.target_arity + 1);
        ext.extend_from_slice(&args[..k]);
        for m in k..=self.target_arity {
            let next = self.inner.apply(&ext[m - k..m]);
            ext.push(next);
        }
        ext.pop().expect("at least one extended term")
    }
}

/// The lifted map of an affine `f`, which is again affine; recovered from
/// its values at the origin and the unit vectors.
pub fn augment_affine<F: Field>(spec: &AffineMapSpec<F>, target_arity: usize) -> Result<AffineMapSpec<F>> {
    let lifted = augment(spec, target_arity)?;
    let zero = spec.constant().zero_like();
    let mut x = vec![zero; target_arity];
    let constant = lifted.apply(&x);
    let mut coefficients = Vec::with_capacity(target_arity);
    for i in 0..target_arity {
        x[i] = x[i].one_like();
        coefficients.push(lifted.apply(&x) - constant.clone());
        x[i] = x[i].zero_like();
    }
    AffineMapSpec::new(coefficients, constant)
}

#[cfg(test)]
mod tests {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    use super::*;
    use crate::engine::FnMap;
    use crate::number::{rational, Rational};
    use crate::table::catalog::{cyclic_sum_table, fifteen_cycle_table, negated_sum_table};
    use crate::table::{hat_id, is_n_involutory, is_symmetric, state_index, successors};

    fn q(v: i64) -> Rational {
        rational(v, 1)
    }

    fn fib() -> AffineMapSpec<Rational> {
        AffineMapSpec::new(vec![q(1), q(1)], q(0)).unwrap()
    }

    fn neg_sum() -> AffineMapSpec<Rational> {
        AffineMapSpec::negated_sum(2, q(0)).unwrap()
    }

    fn seed(v: &[i64]) -> State<Rational> {
        State::new(v.iter().map(|&x| q(x)).collect()).unwrap()
    }

    fn random_q(rng: &mut StdRng) -> Rational {
        rational(rng.random_range(-50..=50), rng.random_range(1..=9))
    }

    #[test]
    fn generation() {
        let spec = RecurrenceSpec::new(fib(), seed(&[1, 1])).unwrap();
        assert_eq!(generate(&spec, 6).unwrap(), seed(&[1, 1, 2, 3, 5, 8]).into_inner());
        assert!(generate(&spec, 1).is_err());
        let spec = RecurrenceSpec::new(neg_sum(), seed(&[1, 2])).unwrap();
        assert_eq!(generate(&spec, 7).unwrap(), seed(&[1, 2, -3, 1, 2, -3, 1]).into_inner());
        let first = FnMap::new(3, |x: &[u8]| x[0]).unwrap();
        let spec = RecurrenceSpec::new(first, State::new(vec![7u8, 8, 9]).unwrap()).unwrap();
        assert_eq!(generate(&spec, 8).unwrap(), vec![7, 8, 9, 7, 8, 9, 7, 8]);
        assert!(RecurrenceSpec::new(fib(), seed(&[1])).is_err());
    }

    #[test]
    fn consistency() {
        let spec = RecurrenceSpec::new(fib(), seed(&[1, 1])).unwrap();
        assert!(consistency_check(&spec, 5).unwrap());
        assert_eq!(&generate(&spec, 12).unwrap()[10..], &seed(&[89, 144])[..]);
        assert!(consistency_check(&spec, 0).unwrap());
        let t = cyclic_sum_table();
        for idx in 0..9 {
            let s = State::new(state_from_index(idx, 3, 2).unwrap()).unwrap();
            let spec = RecurrenceSpec::new(&t, s).unwrap();
            for n in 0..=8 {
                assert!(consistency_check(&spec, n).unwrap());
            }
        }
    }

    #[test]
    fn period_detection() {
        let spec = RecurrenceSpec::new(neg_sum(), seed(&[1, 2])).unwrap();
        let found = detect_minimal_period(&spec, DEFAULT_PERIOD_BOUND).unwrap();
        assert_eq!(found.minimal_period, Some(3));
        assert_eq!(found.preperiod, 0);
        assert_eq!(found.witness, Some(3));

        let constant = FnMap::new(3, |_: &[i32]| 4).unwrap();
        let spec = RecurrenceSpec::new(constant, State::new(vec![1, 2, 3]).unwrap()).unwrap();
        let found = detect_minimal_period(&spec, 100).unwrap();
        assert_eq!(found.minimal_period, Some(1));
        assert_eq!(found.preperiod, 3);

        let spec = RecurrenceSpec::new(fib(), seed(&[1, 1])).unwrap();
        let found = detect_minimal_period(&spec, 1000).unwrap();
        assert_eq!(found.minimal_period, None);
        assert!(detect_minimal_period(&spec, 0).is_err());
    }

    #[test]
    fn period_detection_matches_definition() {
        // Brute-force oracle: least P, then least j, with a_{i+j} = a_i on the prefix.
        let mut rng = StdRng::seed_from_u64(17);
        for _ in 0..200 {
            let m = rng.random_range(2..=4);
            let k = rng.random_range(1..=3);
            let t = FiniteTable::from_fn(m, k, |_| rng.random_range(0..m)).unwrap();
            let idx = rng.random_range(0..t.states());
            let s = State::new(state_from_index(idx, m, k).unwrap()).unwrap();
            let spec = RecurrenceSpec::new(&t, s).unwrap();
            let found = detect_minimal_period(&spec, 200).unwrap();
            let terms = generate(&spec, 200).unwrap();
            let holds = |p: usize, j: usize| (p..150).all(|i| terms[i + j] == terms[i]);
            let p = (0..100).find(|&p| (1..50).any(|j| holds(p, j))).unwrap();
            let j = (1..50).find(|&j| holds(p, j)).unwrap();
            assert_eq!((found.preperiod, found.minimal_period), (p, Some(j)));
        }
    }

    #[test]
    fn cyclic_sum_state_and_sequence_periods() {
        let t = cyclic_sum_table();
        let report = claim1_report(&t);
        let e = report
            .entries
            .iter()
            .find(|e| e.state == state_index(&[0, 1], 3).unwrap())
            .unwrap();
        assert_eq!((e.state_period, e.sequence_period), (4, 8));
        assert!(e.direction1 && !e.j_divides_n && e.j_divides_nk);
        assert_eq!(report.tally.states, 9);
        assert!(report.direction1_holds());
        assert!(report.j_divides_nk_holds());
    }

    #[test]
    fn negated_sum_mod_three() {
        let report = claim1_report(&negated_sum_table(3, 2, 0));
        assert_eq!(report.tally.states, 9);
        assert!(report.direction1_holds());
        for e in &report.entries {
            let s = state_from_index(e.state, 3, 2).unwrap();
            // (i, i) with -2i ≡ i mod 3 is a fixed point; the rest cycle with period 3.
            let expect = if s[0] == s[1] { (1, 1) } else { (3, 3) };
            assert_eq!((e.state_period, e.sequence_period), expect);
        }
    }

    #[test]
    fn fixed_point_with_two_cycle_sequence() {
        let report = claim1_report(&hat_id(3, 2).unwrap());
        let e = report
            .entries
            .iter()
            .find(|e| e.state == state_index(&[0, 2], 3).unwrap())
            .unwrap();
        assert_eq!((e.state_period, e.sequence_period), (1, 2));
        assert!(e.direction1 && !e.j_divides_n && e.j_divides_nk);
        assert!(!report.j_divides_n_holds());
        assert!(report.direction1_holds());
    }

    #[test]
    fn direction1_on_all_small_bijective_tables() {
        let mut checked = 0;
        for code in 0..3usize.pow(9) {
            let mut c = code;
            let entries = (0..9)
                .map(|_| {
                    let v = c % 3;
                    c /= 3;
                    v
                })
                .collect();
            let t = FiniteTable::new(3, 2, entries).unwrap();
            if !cycle_report(&t).bijective {
                continue;
            }
            let report = claim1_report(&t);
            assert!(report.direction1_holds(), "{t}");
            assert!(report.j_divides_nk_holds(), "{t}");
            checked += 1;
        }
        assert!(checked > 0);
    }

    #[test]
    fn fixed_points_seed_sequences_with_period_dividing_k() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..100 {
            let (m, k) = (rng.random_range(2..=4), rng.random_range(1..=3));
            let t = FiniteTable::from_fn(m, k, |_| rng.random_range(0..m)).unwrap();
            let next = successors(&t);
            let symmetric = is_symmetric(&t);
            for (idx, &image) in next.iter().enumerate() {
                let s = State::new(state_from_index(idx, m, k).unwrap()).unwrap();
                let spec = RecurrenceSpec::new(&t, s.clone()).unwrap();
                let j = detect_minimal_period(&spec, 4 * k + 4).unwrap();
                let fixed = image == idx;
                let sequence_fixed = j.preperiod == 0 && j.minimal_period.is_some_and(|j| k % j == 0);
                assert_eq!(fixed, sequence_fixed);
                if fixed && symmetric {
                    assert!(s.iter().all(|&x| x == s[0]));
                    assert_eq!(j.minimal_period, Some(1));
                }
            }
        }
    }

    #[test]
    fn larger_table_report() {
        let report = claim1_report(&fifteen_cycle_table());
        assert_eq!(report.tally.states, 16);
        assert!(report.direction1_holds());
        assert!(report.entries.windows(2).all(|w| w[0].state < w[1].state));
    }

    #[test]
    fn augmented_negated_sum_is_first_projection() {
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..1000 {
            let spec = AffineMapSpec::negated_sum(2, random_q(&mut rng)).unwrap();
            let lifted = augment(spec, 3).unwrap();
            let x: Vec<Rational> = (0..3).map(|_| random_q(&mut rng)).collect();
            assert_eq!(lifted.arity(), 3);
            assert_eq!(lifted.apply(&x), x[0]);
        }
        assert!(augment(neg_sum(), 2).is_err());
        let lifted = augment_affine(&AffineMapSpec::negated_sum(2, rational(5, 2)).unwrap(), 3).unwrap();
        assert_eq!(lifted.coefficients(), &[q(1), q(0), q(0)]);
        assert_eq!(lifted.constant(), &q(0));
    }

    #[test]
    fn augmented_value_continues_the_sequence() {
        let mut rng = StdRng::seed_from_u64(5);
        let spec = AffineMapSpec::new(vec![rational(1, 3), q(-2), q(1)], rational(1, 2)).unwrap();
        for _ in 0..50 {
            let s = State::new((0..3).map(|_| random_q(&mut rng)).collect()).unwrap();
            let terms = generate(&RecurrenceSpec::new(&spec, s).unwrap(), 5).unwrap();
            let lifted = augment(&spec, 4).unwrap();
            assert_eq!(lifted.apply(&terms[..4]), terms[4]);
        }
    }

    #[test]
    fn augmented_first_projection() {
        // Lifting x₁ from k = 2 to a multiple of k gives x₁ again.
        let lifted = augment(FnMap::new(2, |x: &[usize]| x[0]).unwrap(), 4).unwrap();
        let t = FiniteTable::from_fn(3, 4, |x| lifted.apply(x)).unwrap();
        assert_eq!(t, hat_id(3, 4).unwrap());
        assert!(is_n_involutory(&t, 1));
        // To k' = 3 it selects x₂, which is not 1-involutory.
        let lifted = augment(FnMap::new(2, |x: &[usize]| x[0]).unwrap(), 3).unwrap();
        let t = FiniteTable::from_fn(3, 3, |x| lifted.apply(x)).unwrap();
        assert!(!is_n_involutory(&t, 1));
    }
}

//! The worked examples checked by `kiter verify-examples`. Everything goes
//! through the definition parser or the table file reader.

use kiter_core::affine::{
    affine_involutory_order, affine_is_induced_involutory, affine_iterate, build_first_iterate,
    fibonacci_closed_form, linear_roots_checks, sum_map_closed_form, RootsCheck,
};
use kiter_core::dsl::{affine_def, compile_with_seed, eval_scalars, parse_scalars};
use kiter_core::engine::{induced_self_map, InducedContext, SelfMap};
use kiter_core::recurrence::{augment, augment_affine};
use kiter_core::table::{
    cycle_report, is_induced_involutory, is_persymmetric, is_symmetric, parse_table,
};
use kiter_core::{iterate, CyclotomicNumber, IterableMap, State};

pub const CYCLIC_SUM_TABLE: &str = include_str!("../data/cyclic_sum.tbl");
pub const FIFTEEN_CYCLE_TABLE: &str = include_str!("../data/fifteen_cycle.tbl");

pub const FIBONACCI_DEF: &str = "f(x1,x2) = x1 + x2";
pub const CUBE_ROOTS_DEF: &str = "f(x1,x2) = zeta(3)*x1 + zeta(3)^2*x2";

/// Rational seeds for the Fibonacci check.
const FIBONACCI_SEEDS: [&str; 8] = [
    "1, 1",
    "0, 1",
    "1, 0",
    "3/2, -7/5",
    "-11, 4/9",
    "100/3, 0",
    "-1/2, -1/2",
    "123456789/1000, 987654321/7",
];

/// Five points of `Q(ζ₃)`; their pairs make a 25-point grid.
const ROOT_GRID: [&str; 5] = ["0", "1", "-1", "zeta(3)", "1/2 - zeta(3)^2"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExampleResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = Result<String, String>;
type Example = (&'static str, fn() -> Check);

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn err(e: kiter_core::Error) -> String {
    e.to_string()
}

fn table_golden(text: &str, lengths: &[usize], order: u32, persymmetric: bool) -> Check {
    let t = parse_table(text).map_err(err)?;
    let report = cycle_report(&t);
    ensure(report.cycle_lengths() == lengths, || {
        format!("cycle lengths {:?}, expected {lengths:?}", report.cycle_lengths())
    })?;
    let got = report.minimal_order.map(|o| o.to_string());
    ensure(got == Some(order.to_string()), || format!("minimal order {got:?}, expected {order}"))?;
    ensure(is_symmetric(&t), || "not symmetric".into())?;
    if persymmetric {
        ensure(is_persymmetric(&t).map_err(err)?, || "not persymmetric".into())?;
    }
    ensure(is_induced_involutory(&t, 3, None).map_err(err)?, || "not II-3".into())?;
    let lens: Vec<String> = lengths.iter().map(ToString::to_string).collect();
    Ok(format!(
        "cycle lengths {}, minimal order {order}, symmetric{}, II-3",
        lens.join(" "),
        if persymmetric { ", persymmetric" } else { "" }
    ))
}

fn fibonacci() -> Check {
    for seed in FIBONACCI_SEEDS {
        let (map, s) = compile_with_seed(FIBONACCI_DEF, seed).map_err(err)?;
        let it = build_first_iterate(&map.to_affine().map_err(err)?);
        let mut engine = s.clone();
        for n in 0..=30 {
            let closed = fibonacci_closed_form(n, &s).map_err(err)?;
            let fast = affine_iterate(&it, &s, n).map_err(err)?;
            ensure(closed == engine && fast == engine, || {
                format!("seed ({seed}), n = {n}: closed form, engine and matrix disagree")
            })?;
            engine = iterate(&map, &engine, 1).map_err(err)?;
        }
    }
    Ok(format!(
        "closed form = engine = matrix power for n <= 30 on {} seeds",
        FIBONACCI_SEEDS.len()
    ))
}

fn negated_sum() -> Check {
    for k in 1..=5usize {
        let vars: Vec<String> = (1..=k).map(|i| format!("x{i}")).collect();
        let def = format!("f({}) = 7/3 - {}", vars.join(","), vars.join(" - "));
        let seed: Vec<String> = (1..=k).map(|i| format!("{}/{}", 3 * i as i64 - 5, i + 1)).collect();
        let (map, s) = compile_with_seed(&def, &seed.join(",")).map_err(err)?;
        let spec = map.to_affine().map_err(err)?;
        for idx in 0..=2 * (k as u64 + 1) {
            let closed = sum_map_closed_form(k, spec.constant(), idx, &s).map_err(err)?;
            let engine = iterate(&map, &s, idx).map_err(err)?;
            ensure(closed == engine, || format!("k = {k}, iterate {idx}: closed form differs"))?;
        }
        let order = affine_involutory_order(&build_first_iterate(&spec), 50).map_err(err)?;
        ensure(order == Some(k as u64 + 1), || format!("k = {k}: order {order:?}, expected {}", k + 1))?;
    }
    Ok("closed form = engine on every residue class, order k+1, for k <= 5".into())
}

fn cube_roots() -> Check {
    let (map, _) = compile_with_seed(CUBE_ROOTS_DEF, "0, 0").map_err(err)?;
    let field = map.field().clone();
    let grid = eval_scalars(&parse_scalars(&ROOT_GRID.join(",")).map_err(err)?, &field).map_err(err)?;
    let spec = map.to_affine().map_err(err)?;
    let it = build_first_iterate(&spec);
    let mut points = 0;
    for x1 in &grid {
        for x2 in &grid {
            points += 1;
            let s = State::new(vec![x1.clone(), x2.clone()]).map_err(err)?;
            let first = linear_roots_checks(3, RootsCheck::InducedFirst, 3, &s).map_err(err)?;
            let second = linear_roots_checks(3, RootsCheck::InducedSecond, 3, &s).map_err(err)?;
            let g1 = induced_self_map(&map, &InducedContext::new(1, vec![x2.clone()])).map_err(err)?;
            let g2 = induced_self_map(&map, &InducedContext::new(2, vec![x1.clone()])).map_err(err)?;
            ensure(
                first[0] == *x1 && second[0] == *x2 && g1.iterate(x1, 3) == *x1 && g2.iterate(x2, 3) == *x2,
                || format!("induced third iterate moved ({x1}, {x2})"),
            )?;
            for n in 1..=12 {
                let closed = linear_roots_checks(3, RootsCheck::Full, n, &s).map_err(err)?;
                let engine = iterate(&map, &s, n).map_err(err)?;
                ensure(closed == engine && affine_iterate(&it, &s, n).map_err(err)? == engine, || {
                    format!("full iterate {n} differs at ({x1}, {x2})")
                })?;
            }
        }
    }
    ensure(affine_is_induced_involutory(&spec, 3, None).map_err(err)?, || "not II-3".into())?;
    let order = affine_involutory_order(&it, 50).map_err(err)?;
    ensure(order.is_none(), || format!("unexpected involutory order {order:?}"))?;
    let (one, zero) = (CyclotomicNumber::one(&field), CyclotomicNumber::zero(&field));
    ensure(map.apply(&[one.clone(), zero.clone()]) != map.apply(&[zero, one]), || {
        "f(1, 0) = f(0, 1)".into()
    })?;
    Ok(format!(
        "induced 3rd iterates fix all {points} grid points, full formula = engine for n <= 12, \
         no order up to 50, f(1,0) != f(0,1)"
    ))
}

fn augmentation() -> Check {
    let (map, _) = compile_with_seed("f(x1,x2) = 5/2 - x1 - x2", "0, 0").map_err(err)?;
    let spec = map.to_affine().map_err(err)?;
    let lifted = affine_def(&augment_affine(&spec, 3).map_err(err)?).to_string();
    ensure(lifted == "f(x1, x2, x3) = x1", || format!("lifted to {lifted}"))?;
    let field = map.field().clone();
    let direct = augment(&map, 3).map_err(err)?;
    let samples = parse_scalars("1, -2/3, 7, 0, 11/5, -4").map_err(err)?;
    let samples = eval_scalars(&samples, &field).map_err(err)?;
    for w in samples.windows(3) {
        ensure(direct.apply(w) == w[0], || format!("lifted value at ({}, {}, {}) is not x1", w[0], w[1], w[2]))?;
    }
    Ok(format!("5/2 - x1 - x2 lifted to arity 3 is {lifted}"))
}

/// Runs every example, in a fixed order.
pub fn run_examples() -> Vec<ExampleResult> {
    let checks: [Example; 6] = [
        ("mod-3 sum table", || table_golden(CYCLIC_SUM_TABLE, &[4, 4, 1], 4, false)),
        ("fifteen-cycle table", || table_golden(FIFTEEN_CYCLE_TABLE, &[15, 1], 15, true)),
        ("Fibonacci closed form", fibonacci),
        ("negated sum A - x1 - .. - xk", negated_sum),
        ("cube roots of unity a*x1 + b*x2", cube_roots),
        ("arity augmentation", augmentation),
    ];
    checks
        .into_iter()
        .map(|(name, check)| match check() {
            Ok(detail) => ExampleResult {
                name,
                passed: true,
                detail,
            },
            Err(detail) => ExampleResult {
                name,
                passed: false,
                detail,
            },
        })
        .collect()
}

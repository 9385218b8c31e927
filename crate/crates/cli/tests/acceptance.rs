//! Acceptance suite. Each criterion runs under its own time limit and
//! prints one PASS/FAIL line; the process fails if any criterion does.

use std::path::PathBuf;
use std::process::Command as Process;
use std::time::{Duration, Instant};

use kiter_cli::verify::{CUBE_ROOTS_DEF, FIBONACCI_DEF};
use kiter_core::affine::{
    affine_involutory_order, affine_is_induced_involutory, affine_iterate, build_first_iterate,
    decreasing_involution_residuals, fibonacci_closed_form, linear_roots_checks,
    sum_map_closed_form, AffineMapSpec, LinearRoots, RootsCheck,
};
use kiter_core::dsl::{compile_with_seed, parse_map_def, parse_scalars};
use kiter_core::engine::{induced_self_map, InducedContext, SelfMap};
use kiter_core::number::{rational, Rational};
use kiter_core::recurrence::{augment, claim1_report};
use kiter_core::table::{
    count_involutions, count_involutions_brute, cycle_report, enumerate_ii_tables,
    is_induced_involutory, is_n_involutory, is_persymmetric, is_symmetric, load_table,
    state_from_index, Budget,
};
use kiter_core::{iterate, CyclotomicNumber, FiniteTable, IterableMap, State};
use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
/// Name, time limit in seconds, check.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn random_q(rng: &mut StdRng) -> Rational {
    rational(rng.random_range(-60..=60), rng.random_range(1..=12))
}

fn golden_table(file: &str, lengths: &[usize], order: u32, persymmetric: bool) -> Outcome {
    let t = load_table(data(file)).map_err(e)?;
    let report = cycle_report(&t);
    ensure(report.cycle_lengths() == lengths, || format!("cycle lengths {:?}", report.cycle_lengths()))?;
    ensure(report.minimal_order == Some(BigUint::from(order)), || {
        format!("minimal order {:?}", report.minimal_order)
    })?;
    ensure(is_n_involutory(&t, order.into()), || "f^order != id".into())?;
    ensure(is_symmetric(&t), || "not symmetric".into())?;
    if persymmetric {
        ensure(is_persymmetric(&t).map_err(e)?, || "not persymmetric".into())?;
        // Spot check f(i, j) = f(m-1-j, m-1-i) directly.
        let m = t.m();
        for (i, j) in [(0, 1), (1, 3), (2, 0), (3, 3)] {
            let a = t.value(&[i, j]).map_err(e)?;
            let b = t.value(&[m - 1 - j, m - 1 - i]).map_err(e)?;
            ensure(a == b, || format!("f({i},{j}) = {a} but f({},{}) = {b}", m - 1 - j, m - 1 - i))?;
        }
    }
    ensure(is_induced_involutory(&t, 3, None).map_err(e)?, || "not II-3".into())?;
    Ok(format!("cycles {lengths:?}, order {order}"))
}

fn cyclic_sum_golden() -> Outcome {
    golden_table("cyclic_sum.tbl", &[4, 4, 1], 4, false)
}

fn fifteen_cycle_golden() -> Outcome {
    golden_table("fifteen_cycle.tbl", &[15, 1], 15, true)
}

/// `f^p(x) = (x_{k-p+2}, .., x_k, f(x), x_1, .., x_{k-p})` for `1 <= p <= k`.
fn shift_formula(x: &[usize], fx: usize, p: usize) -> Vec<usize> {
    let k = x.len();
    let mut out = x[k + 1 - p..].to_vec();
    out.push(fx);
    out.extend_from_slice(&x[..k - p]);
    out
}

fn ii_sweep() -> Outcome {
    let mut summary = Vec::new();
    for (m, k) in [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3)] {
        let mut count = 0;
        for t in enumerate_ii_tables(m, k, Budget::default()).map_err(e)? {
            count += 1;
            let report = cycle_report(&t);
            ensure(report.minimal_order == Some(BigUint::from(k + 1)), || {
                format!("m={m} k={k}: order {:?} for {t}", report.minimal_order)
            })?;
            ensure(is_symmetric(&t), || format!("m={m} k={k}: not symmetric: {t}"))?;
            for idx in 0..t.states() {
                let x = state_from_index(idx, m, k).map_err(e)?;
                let fx = t.apply(&x);
                let mut s = State::new(x.clone()).map_err(e)?;
                for p in 1..=k + 1 {
                    s = iterate(&t, &s, 1).map_err(e)?;
                    let want = if p <= k { shift_formula(&x, fx, p) } else { x.clone() };
                    ensure(s.elements() == want, || format!("m={m} k={k}: f^{p}{x:?} = {s}"))?;
                }
            }
        }
        ensure(count > 0, || format!("m={m} k={k}: no tables"))?;
        summary.push(format!("({m},{k}):{count}"));
    }
    Ok(format!("tables per (m,k) {}", summary.join(" ")))
}

fn fibonacci_oracles() -> Outcome {
    let mut rng = StdRng::seed_from_u64(1);
    let spec = AffineMapSpec::new(vec![rational(1, 1), rational(1, 1)], rational(0, 1)).map_err(e)?;
    let it = build_first_iterate(&spec);
    for _ in 0..100 {
        let s = State::new(vec![random_q(&mut rng), random_q(&mut rng)]).map_err(e)?;
        let mut engine = s.clone();
        for n in 0..=30 {
            let closed = fibonacci_closed_form(n, &s).map_err(e)?;
            ensure(closed == engine, || format!("closed form differs at n={n}, seed {s}"))?;
            ensure(affine_iterate(&it, &s, n).map_err(e)? == engine, || format!("matrix path differs at n={n}"))?;
            engine = iterate(&spec, &engine, 1).map_err(e)?;
        }
    }
    Ok("100 seeds, n <= 30".into())
}

fn negated_sum_oracles() -> Outcome {
    let mut rng = StdRng::seed_from_u64(2);
    for k in 1..=5usize {
        for _ in 0..10 {
            let a = random_q(&mut rng);
            let spec = AffineMapSpec::negated_sum(k, a.clone()).map_err(e)?;
            let s = State::new((0..k).map(|_| random_q(&mut rng)).collect()).map_err(e)?;
            for idx in 0..=2 * (k as u64 + 1) {
                let closed = sum_map_closed_form(k, &a, idx, &s).map_err(e)?;
                ensure(closed == iterate(&spec, &s, idx).map_err(e)?, || format!("k={k} index {idx}"))?;
            }
            let order = affine_involutory_order(&build_first_iterate(&spec), 50).map_err(e)?;
            ensure(order == Some(k as u64 + 1), || format!("k={k}: order {order:?}"))?;
        }
    }
    Ok("k <= 5, all residues, order k+1".into())
}

fn cube_roots() -> Outcome {
    let roots = LinearRoots::new(3).map_err(e)?;
    let field = roots.field().clone();
    let spec = roots.spec();
    let c = |v: i64| CyclotomicNumber::from_integer(&field, v);
    let z = CyclotomicNumber::zeta(&field);
    let grid = [c(0), c(1), c(-2), z.clone(), c(1) - z.clone() * z.clone()];
    let it = build_first_iterate(&spec);
    let mut points = 0;
    for x1 in &grid {
        for x2 in &grid {
            points += 1;
            let s = State::new(vec![x1.clone(), x2.clone()]).map_err(e)?;
            let g1 = induced_self_map(&spec, &InducedContext::new(1, vec![x2.clone()])).map_err(e)?;
            let g2 = induced_self_map(&spec, &InducedContext::new(2, vec![x1.clone()])).map_err(e)?;
            ensure(g1.iterate(x1, 3) == *x1 && g2.iterate(x2, 3) == *x2, || "induced engine iterate".into())?;
            let a = linear_roots_checks(3, RootsCheck::InducedFirst, 3, &s).map_err(e)?;
            let b = linear_roots_checks(3, RootsCheck::InducedSecond, 3, &s).map_err(e)?;
            ensure(a[0] == *x1 && b[0] == *x2, || "induced closed form".into())?;
            let mut engine = s.clone();
            for n in 1..=12 {
                engine = iterate(&spec, &engine, 1).map_err(e)?;
                let full = linear_roots_checks(3, RootsCheck::Full, n, &s).map_err(e)?;
                ensure(full == engine, || format!("full formula at n={n}"))?;
                ensure(affine_iterate(&it, &s, n).map_err(e)? == engine, || format!("matrix at n={n}"))?;
            }
        }
    }
    ensure(affine_is_induced_involutory(&spec, 3, None).map_err(e)?, || "not II-3".into())?;
    ensure(affine_involutory_order(&it, 50).map_err(e)?.is_none(), || "has an order".into())?;
    ensure(spec.apply(&[c(1), c(0)]) != spec.apply(&[c(0), c(1)]), || "symmetric at (1,0)".into())?;
    Ok(format!("{points} grid points, n <= 12, no order up to 50"))
}

fn telephone_numbers() -> Outcome {
    let mut t: Vec<u64> = vec![1, 1, 2];
    for m in 3..=7u64 {
        t.push(t[m as usize - 1] + (m - 1) * t[m as usize - 2]);
    }
    for (m, &tm) in t.iter().enumerate().skip(1) {
        let brute = count_involutions_brute(m);
        ensure(brute == tm, || format!("m={m}: brute force {brute}, recursion {tm}"))?;
        ensure(count_involutions(m) == BigUint::from(tm), || format!("m={m}: library recursion"))?;
    }
    ensure(t[4] == 10 && t[5] == 26, || "T(4), T(5)".into())?;
    Ok(format!("T(1..7) = {:?}", &t[1..]))
}

fn decreasing_involution() -> Outcome {
    let r = decreasing_involution_residuals(100, 0.1, 10.0).map_err(e)?;
    ensure(r.max_involution_residual < 1e-9 && r.max_conjugacy_residual < 1e-9, || format!("{r:?}"))?;
    Ok(format!(
        "max |h(h(x))-x| = {:.1e}, max |g(h(x))+g(x)| = {:.1e}",
        r.max_involution_residual, r.max_conjugacy_residual
    ))
}

fn claim1_exhaustive() -> Outcome {
    let (mut tables, mut states, mut jn, mut jnk) = (0, 0, 0, 0);
    for code in 0..3usize.pow(9) {
        let entries = (0..9).map(|i| code / 3usize.pow(i) % 3).collect();
        let t = FiniteTable::new(3, 2, entries).map_err(e)?;
        if !cycle_report(&t).bijective {
            continue;
        }
        tables += 1;
        let report = claim1_report(&t);
        ensure(report.direction1_holds(), || format!("direction 1 fails for {t}"))?;
        states += report.tally.states;
        jn += report.tally.j_divides_n;
        jnk += report.tally.j_divides_nk;
    }
    ensure(jnk == states, || format!("j | nk held at {jnk} of {states} states"))?;
    Ok(format!(
        "{tables} bijective tables, {states} cyclic states; j|n at {jn}, j|nk at {jnk}"
    ))
}

fn iterate_rules() -> Outcome {
    let mut rng = StdRng::seed_from_u64(10);
    for _ in 0..500 {
        let (m, k) = (rng.random_range(1..=4), rng.random_range(1..=3));
        let t = FiniteTable::from_fn(m, k, |_| rng.random_range(0..m)).map_err(e)?;
        for idx in 0..t.states() {
            let s = State::new(state_from_index(idx, m, k).map_err(e)?).map_err(e)?;
            let powers: Vec<State<usize>> = (0..=36)
                .scan(s.clone(), |cur, _| {
                    let out = cur.clone();
                    *cur = iterate(&t, cur, 1).expect("arity matches");
                    Some(out)
                })
                .collect();
            for a in 0..=6u64 {
                let fa = iterate(&t, &s, a).map_err(e)?;
                for b in 0..=6u64 {
                    let ab = iterate(&t, &fa, b).map_err(e)?;
                    let ba = iterate(&t, &iterate(&t, &s, b).map_err(e)?, a).map_err(e)?;
                    ensure(ab == powers[(a + b) as usize] && ba == ab, || {
                        format!("addition rule a={a} b={b} on {t}")
                    })?;
                    let mut repeated = s.clone();
                    for _ in 0..b {
                        repeated = iterate(&t, &repeated, a).map_err(e)?;
                    }
                    ensure(repeated == powers[(a * b) as usize], || {
                        format!("multiplication rule a={a} b={b} on {t}")
                    })?;
                }
            }
        }
    }
    Ok("500 tables, indices <= 6".into())
}

fn augmentation() -> Outcome {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..1000 {
        let spec = AffineMapSpec::negated_sum(2, random_q(&mut rng)).map_err(e)?;
        let lifted = augment(spec, 3).map_err(e)?;
        let x: Vec<Rational> = (0..3).map(|_| random_q(&mut rng)).collect();
        ensure(lifted.apply(&x) == x[0], || format!("lifted value at {x:?}"))?;
    }
    Ok("1000 random inputs give x1".into())
}

fn fuzz_input(rng: &mut StdRng) -> String {
    const PIECES: [&str; 22] = [
        "f", "(", ")", "x1", "x2", "x0", "x99999999999999999999", ",", "=", "+", "-", "*", "/",
        "^", "zeta", "0", "3", "64", "65", " ", "\n", "1/0",
    ];
    match rng.random_range(0..3) {
        0 => {
            let len = rng.random_range(0..40);
            (0..len).map(|_| PIECES[rng.random_range(0..PIECES.len())]).collect()
        }
        1 => {
            let bytes: Vec<u8> = (0..rng.random_range(0..40)).map(|_| rng.random()).collect();
            String::from_utf8_lossy(&bytes).into_owned()
        }
        _ => {
            let mut s = String::from("f(x1,x2) = zeta(3)*x1 - 1/2*(x2 + zeta(4)^3)");
            for _ in 0..rng.random_range(1..4) {
                let at = rng.random_range(0..=s.len());
                if rng.random_bool(0.5) && at < s.len() {
                    s.remove(at);
                } else {
                    s.insert_str(at, PIECES[rng.random_range(0..PIECES.len())]);
                }
            }
            s
        }
    }
}

fn cli_end_to_end() -> Outcome {
    let out = Process::new(env!("CARGO_BIN_EXE_kiter"))
        .arg("verify-examples")
        .output()
        .map_err(e)?;
    ensure(out.status.success(), || {
        format!("verify-examples exited with {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stdout))
    })?;
    let cli = kiter_cli::run(["kiter", "iterate", "--def", FIBONACCI_DEF, "--seed", "1,1", "--n", "5"]);
    ensure(cli.code == 0 && cli.stdout == "89 144\n", || format!("iterate printed {:?}", cli.stdout))?;
    let cli = kiter_cli::run(["kiter", "check-ii", "--def", CUBE_ROOTS_DEF, "--n", "3"]);
    ensure(cli.stdout == "true\n", || format!("check-ii printed {:?}", cli.stdout))?;

    let mut rng = StdRng::seed_from_u64(12);
    let (mut accepted, mut rejected) = (0, 0);
    for _ in 0..10_000 {
        let text = fuzz_input(&mut rng);
        let parsed = std::panic::catch_unwind(|| {
            let def = parse_map_def(&text);
            let _ = parse_scalars(&text);
            if let Ok(def) = &def {
                let _ = compile_with_seed(&def.to_string(), &vec!["1"; def.arity].join(","));
            }
            def.is_ok()
        });
        match parsed {
            Ok(true) => accepted += 1,
            Ok(false) => rejected += 1,
            Err(_) => return Err(format!("parser panicked on {text:?}")),
        }
    }
    Ok(format!("verify-examples exit 0; 10000 fuzz inputs ({accepted} parsed, {rejected} rejected)"))
}

fn main() {
    std::panic::set_hook(Box::new(|_| {}));
    let criteria: [Criterion; 12] = [
        ("mod-3 sum table golden values", 1, cyclic_sum_golden),
        ("fifteen-cycle table golden values", 1, fifteen_cycle_golden),
        ("II tables are (k+1)-involutory and symmetric", 60, ii_sweep),
        ("Fibonacci closed form = engine = matrix power", 5, fibonacci_oracles),
        ("negated sum closed form and order k+1", 5, negated_sum_oracles),
        ("cube-root map over Q(zeta3)", 10, cube_roots),
        ("involution counts match telephone recursion", 30, telephone_numbers),
        ("decreasing involution residuals", 1, decreasing_involution),
        ("state period = sequence period / gcd, m=3 k=2", 120, claim1_exhaustive),
        ("addition and multiplication rules on random tables", 30, iterate_rules),
        ("augmented negated sum is the first projection", 1, augmentation),
        ("CLI verify-examples and parser fuzzing", 60, cli_end_to_end),
    ];
    let mut failures = 0;
    for (i, (name, limit, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check)
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = start.elapsed();
        let result = match result {
            Ok(_) if elapsed > Duration::from_secs(limit) => {
                Err(format!("took {elapsed:.2?}, limit {limit}s"))
            }
            other => other,
        };
        match result {
            Ok(detail) => println!("PASS {:>2} {name} [{elapsed:.2?}] {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2} {name} [{elapsed:.2?}] {why}", i + 1);
            }
        }
    }
    println!("{} of 12 acceptance criteria passed", 12 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}

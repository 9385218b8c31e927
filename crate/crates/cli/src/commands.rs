use std::fmt::Write as _;

use kiter_core::affine::{
    affine_involutory_order, affine_is_induced_involutory, affine_iterate, build_first_iterate,
};
use kiter_core::dsl::{affine_def, compile_with_seed, format_scalar, parse_map_def, CompiledMap};
use kiter_core::engine::{iterate, orbit, point_involutory_order};
use kiter_core::recurrence::{augment, augment_affine, claim1_report, detect_minimal_period, RecurrenceSpec};
use kiter_core::table::{
    conjugate, count_involutions, cycle_report, enumerate_ii_tables, is_induced_involutory,
    is_persymmetric, is_symmetric, load_table, state_from_index, table_iterate, Budget,
};
use kiter_core::{CyclotomicNumber, Error, FiniteTable, IterableMap, Result, State};

use crate::args::{Command, Input};
use crate::report::*;
use crate::{verify, EXIT_VERIFICATION};

enum Source {
    Def(String),
    Table(FiniteTable),
}

fn source(input: &Input) -> Result<Source> {
    match (&input.def, &input.table) {
        (Some(d), None) => Ok(Source::Def(d.clone())),
        (None, Some(p)) => Ok(Source::Table(load_table(p)?)),
        _ => Err(Error::InvalidArgument("give exactly one of --def and --table".into())),
    }
}

fn table_only(input: &Input, command: &str) -> Result<FiniteTable> {
    match source(input)? {
        Source::Table(t) => Ok(t),
        Source::Def(_) => Err(Error::InvalidArgument(format!("{command} needs --table"))),
    }
}

fn compile(def: &str) -> Result<CompiledMap> {
    CompiledMap::new(parse_map_def(def)?)
}

fn table_seed(t: &FiniteTable, text: &str) -> Result<Vec<usize>> {
    let values = text
        .split(',')
        .map(|v| {
            v.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidArgument(format!("bad table value {:?} in seed", v.trim())))
        })
        .collect::<Result<Vec<_>>>()?;
    if values.len() != t.k() {
        return Err(Error::ArityMismatch {
            expected: t.k(),
            found: values.len(),
        });
    }
    if let Some(&v) = values.iter().find(|&&v| v >= t.m()) {
        return Err(Error::ValueOutOfRange { value: v, m: t.m() });
    }
    Ok(values)
}

fn scalars(s: &[CyclotomicNumber]) -> Vec<String> {
    s.iter().map(format_scalar).collect()
}

fn numbers(s: &[usize]) -> Vec<String> {
    s.iter().map(ToString::to_string).collect()
}

fn line(values: &[String]) -> String {
    format!("{}\n", join_values(values))
}

pub(crate) fn execute(command: &Command) -> Result<Report> {
    match command {
        Command::Iterate { input, seed, n } => iterate_cmd(input, seed, *n),
        Command::Orbit { input, seed, bound } => orbit_cmd(input, seed, *bound),
        Command::Order { input, bound } => order_cmd(input, *bound),
        Command::PointOrder { input, seed, bound } => point_order_cmd(input, seed, *bound),
        Command::CheckIi { input, n, arg } => check_ii_cmd(input, *n, *arg),
        Command::Symmetric { input } => symmetric_cmd(input),
        Command::Cycles { input } => cycles_cmd(input),
        Command::Period { input, seed, bound } => period_cmd(input, seed, *bound),
        Command::EnumerateIi {
            m,
            k,
            count_only,
            max_states,
        } => enumerate_cmd(*m, *k, *count_only, *max_states),
        Command::CountInvolutions { m } => {
            let count = count_involutions(*m).to_string();
            Ok(Report::new(
                format!("{count}\n"),
                &CountDoc {
                    command: "count-involutions",
                    m: *m,
                    count,
                },
            ))
        }
        Command::Claim1 { input } => claim1_cmd(input),
        Command::Augment { input, to } => augment_cmd(input, *to),
        Command::Conjugate { input, perm } => {
            let t = conjugate(&table_only(input, "conjugate")?, perm)?;
            Ok(Report::new(
                t.to_string(),
                &ConjugateDoc {
                    command: "conjugate",
                    table: TableDoc::from(&t),
                },
            ))
        }
        Command::VerifyExamples => Ok(verify_cmd()),
    }
}

fn iterate_cmd(input: &Input, seed: &str, n: u64) -> Result<Report> {
    let state = match source(input)? {
        Source::Def(def) => {
            let (map, s) = compile_with_seed(&def, seed)?;
            let out = match map.to_affine() {
                Ok(spec) => affine_iterate(&build_first_iterate(&spec), &s, n)?,
                Err(Error::NotAffine) => iterate(&map, &s, n)?,
                Err(e) => return Err(e),
            };
            scalars(&out)
        }
        Source::Table(t) => {
            let s = table_seed(&t, seed)?;
            let n = i64::try_from(n).map_err(|_| Error::InvalidArgument(format!("n = {n} is too large")))?;
            numbers(&table_iterate(&t, &s, n)?)
        }
    };
    Ok(Report::new(
        line(&state),
        &IterateDoc {
            command: "iterate",
            n,
            state,
        },
    ))
}

fn orbit_cmd(input: &Input, seed: &str, bound: usize) -> Result<Report> {
    let (states, recurred) = match source(input)? {
        Source::Def(def) => {
            let (map, s) = compile_with_seed(&def, seed)?;
            let o = orbit(&map, &s, bound)?;
            (o.states.iter().map(|s| scalars(s)).collect::<Vec<_>>(), o.recurred)
        }
        Source::Table(t) => {
            let s = State::new(table_seed(&t, seed)?)?;
            let o = orbit(&t, &s, bound)?;
            (o.states.iter().map(|s| numbers(s)).collect(), o.recurred)
        }
    };
    let mut text: String = states.iter().map(|s| line(s)).collect();
    if recurred {
        let _ = writeln!(text, "recurred after {} steps", states.len());
    } else {
        let _ = writeln!(text, "no recurrence within {bound} steps");
    }
    Ok(Report::new(
        text,
        &OrbitDoc {
            command: "orbit",
            states,
            recurred,
        },
    ))
}

fn order_cmd(input: &Input, bound: u64) -> Result<Report> {
    let (order, exact, text) = match source(input)? {
        Source::Table(t) => match cycle_report(&t).minimal_order {
            Some(o) => (Some(o.to_string()), true, format!("{o}\n")),
            None => (None, true, "none (the first iterate is not a bijection)\n".to_string()),
        },
        Source::Def(def) => {
            let it = build_first_iterate(&compile(&def)?.to_affine()?);
            match affine_involutory_order(&it, bound)? {
                Some(o) => (Some(o.to_string()), false, format!("{o}\n")),
                None => (None, false, format!("none up to {bound}\n")),
            }
        }
    };
    Ok(Report::new(
        text,
        &OrderDoc {
            command: "order",
            order,
            exact,
            bound: (!exact).then_some(bound),
        },
    ))
}

fn point_order_cmd(input: &Input, seed: &str, bound: u64) -> Result<Report> {
    let order = match source(input)? {
        Source::Def(def) => {
            let (map, s) = compile_with_seed(&def, seed)?;
            point_involutory_order(&map, &s, bound)?
        }
        Source::Table(t) => {
            let s = State::new(table_seed(&t, seed)?)?;
            point_involutory_order(&t, &s, bound)?
        }
    };
    let text = match order {
        Some(o) => format!("{o}\n"),
        None => format!("none up to {bound}\n"),
    };
    Ok(Report::new(
        text,
        &PointOrderDoc {
            command: "point-order",
            order,
            bound,
        },
    ))
}

fn check_ii_cmd(input: &Input, n: u64, arg: Option<usize>) -> Result<Report> {
    let holds = match source(input)? {
        Source::Table(t) => is_induced_involutory(&t, n, arg)?,
        Source::Def(def) => affine_is_induced_involutory(&compile(&def)?.to_affine()?, n, arg)?,
    };
    Ok(Report::new(
        format!("{holds}\n"),
        &CheckIiDoc {
            command: "check-ii",
            n,
            arg,
            holds,
        },
    ))
}

fn symmetric_cmd(input: &Input) -> Result<Report> {
    let (symmetric, persymmetric) = match source(input)? {
        Source::Table(t) => (is_symmetric(&t), is_persymmetric(&t).ok()),
        Source::Def(def) => (compile(&def)?.to_affine()?.is_symmetric(), None),
    };
    let mut text = format!("{symmetric}\n");
    if let Some(p) = persymmetric {
        let _ = writeln!(text, "persymmetric: {p}");
    }
    Ok(Report::new(
        text,
        &SymmetricDoc {
            command: "symmetric",
            symmetric,
            persymmetric,
        },
    ))
}

fn cycles_cmd(input: &Input) -> Result<Report> {
    let t = table_only(input, "cycles")?;
    let report = cycle_report(&t);
    let state = |i: usize| state_from_index(i, t.m(), t.k()).expect("index from the report");
    let cycles: Vec<Vec<Vec<usize>>> = report
        .cycles
        .iter()
        .map(|c| c.iter().map(|&i| state(i)).collect())
        .collect();
    let lengths = report.cycle_lengths();
    let order = report.minimal_order.as_ref().map(ToString::to_string);
    let mut text = format!("bijective: {}\n", report.bijective);
    let _ = writeln!(text, "cycle lengths: {}", join_values(&numbers(&lengths)));
    let _ = writeln!(text, "minimal order: {}", order.as_deref().unwrap_or("none"));
    for c in &cycles {
        let parts: Vec<String> = c.iter().map(|s| tuple(s)).collect();
        let _ = writeln!(text, "{}", parts.join(" -> "));
    }
    Ok(Report::new(
        text,
        &CyclesDoc {
            command: "cycles",
            bijective: report.bijective,
            cycle_lengths: lengths,
            minimal_order: order,
            cycles,
        },
    ))
}

fn period_cmd(input: &Input, seed: &str, bound: usize) -> Result<Report> {
    let found = match source(input)? {
        Source::Def(def) => {
            let (map, s) = compile_with_seed(&def, seed)?;
            detect_minimal_period(&RecurrenceSpec::new(map, s)?, bound)?
        }
        Source::Table(t) => {
            let s = State::new(table_seed(&t, seed)?)?;
            detect_minimal_period(&RecurrenceSpec::new(&t, s)?, bound)?
        }
    };
    let text = match found.minimal_period {
        Some(j) => format!("period: {j}\npreperiod: {}\n", found.preperiod),
        None => format!("no period within {bound} terms\n"),
    };
    Ok(Report::new(
        text,
        &PeriodDoc {
            command: "period",
            minimal_period: found.minimal_period,
            preperiod: found.minimal_period.map(|_| found.preperiod),
            bound,
        },
    ))
}

fn enumerate_cmd(m: usize, k: usize, count_only: bool, max_states: u128) -> Result<Report> {
    let tables = enumerate_ii_tables(m, k, Budget { max_states })?;
    let mut text = String::new();
    let mut listed = Vec::new();
    let mut count = 0;
    for t in tables {
        count += 1;
        if !count_only {
            let _ = writeln!(text, "{}", join_values(&numbers(t.entries())));
            listed.push(t.entries().to_vec());
        }
    }
    let _ = writeln!(text, "count: {count}");
    Ok(Report::new(
        text,
        &EnumerateDoc {
            command: "enumerate-ii",
            m,
            k,
            count,
            tables: (!count_only).then_some(listed),
        },
    ))
}

fn claim1_cmd(input: &Input) -> Result<Report> {
    let t = table_only(input, "claim1")?;
    let report = claim1_report(&t);
    let mut text = String::new();
    let mut entries = Vec::new();
    for e in &report.entries {
        let state = state_from_index(e.state, t.m(), t.k())?;
        let _ = writeln!(
            text,
            "{}: n={} j={} n=j/gcd(j,k):{} j|n:{} j|nk:{}",
            tuple(&state),
            e.state_period,
            e.sequence_period,
            e.direction1,
            e.j_divides_n,
            e.j_divides_nk
        );
        entries.push(Claim1EntryDoc {
            state,
            state_period: e.state_period,
            sequence_period: e.sequence_period,
            direction1: e.direction1,
            j_divides_n: e.j_divides_n,
            j_divides_nk: e.j_divides_nk,
        });
    }
    let tally = report.tally;
    let _ = writeln!(
        text,
        "cyclic states: {}, n=j/gcd(j,k): {}, j|n: {}, j|nk: {}",
        tally.states, tally.direction1, tally.j_divides_n, tally.j_divides_nk
    );
    let doc = Claim1Doc {
        command: "claim1",
        k: report.k,
        entries,
        tally: Claim1TallyDoc {
            states: tally.states,
            direction1: tally.direction1,
            j_divides_n: tally.j_divides_n,
            j_divides_nk: tally.j_divides_nk,
        },
    };
    let out = Report::new(text, &doc);
    if report.direction1_holds() {
        Ok(out)
    } else {
        let failed = tally.states - tally.direction1;
        Ok(out.with_code(
            EXIT_VERIFICATION,
            format!("n = j/gcd(j, k) failed at {failed} states\n"),
        ))
    }
}

fn augment_cmd(input: &Input, to: usize) -> Result<Report> {
    match source(input)? {
        Source::Def(def) => {
            let lifted = affine_def(&augment_affine(&compile(&def)?.to_affine()?, to)?);
            let text = lifted.to_string();
            Ok(Report::new(
                format!("{text}\n"),
                &AugmentDoc {
                    command: "augment",
                    arity: to,
                    definition: Some(text),
                    table: None,
                },
            ))
        }
        Source::Table(t) => {
            let lifted = augment(&t, to)?;
            let budget = Budget::default();
            let out = FiniteTable::from_fn_with_budget(t.m(), lifted.arity(), budget, |x| lifted.apply(x))?;
            Ok(Report::new(
                out.to_string(),
                &AugmentDoc {
                    command: "augment",
                    arity: to,
                    definition: None,
                    table: Some(TableDoc::from(&out)),
                },
            ))
        }
    }
}

fn verify_cmd() -> Report {
    let results = verify::run_examples();
    let passed = results.iter().filter(|r| r.passed).count();
    let total = results.len();
    let mut text = String::new();
    for r in &results {
        let _ = writeln!(text, "{} {}: {}", if r.passed { "PASS" } else { "FAIL" }, r.name, r.detail);
    }
    let _ = writeln!(text, "{passed}/{total} examples passed");
    let doc = VerifyDoc {
        command: "verify-examples",
        passed,
        total,
        examples: results
            .into_iter()
            .map(|r| ExampleDoc {
                name: r.name.to_string(),
                passed: r.passed,
                detail: r.detail,
            })
            .collect(),
    };
    let out = Report::new(text, &doc);
    if passed == total {
        out
    } else {
        out.with_code(EXIT_VERIFICATION, format!("{} examples failed\n", total - passed))
    }
}

//! Output documents. Every command has a text form and a JSON form; the
//! JSON structs below fix the field order of the machine-readable output.

use kiter_core::FiniteTable;
use serde::Serialize;

use crate::EXIT_OK;

pub(crate) struct Report {
    pub text: String,
    pub json: String,
    pub code: i32,
    pub diagnostics: String,
}

impl Report {
    pub fn new<T: Serialize>(text: String, doc: &T) -> Self {
        let mut json = serde_json::to_string_pretty(doc).expect("plain data serializes");
        json.push('\n');
        Report {
            text,
            json,
            code: EXIT_OK,
            diagnostics: String::new(),
        }
    }

    pub fn with_code(mut self, code: i32, diagnostics: String) -> Self {
        self.code = code;
        self.diagnostics = diagnostics;
        self
    }
}

/// Space-separated values; values that contain spaces are parenthesized.
pub(crate) fn join_values<S: AsRef<str>>(values: &[S]) -> String {
    values
        .iter()
        .map(|v| {
            let v = v.as_ref();
            if v.contains(' ') {
                format!("({v})")
            } else {
                v.to_string()
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// `(a, b, c)`
pub(crate) fn tuple(values: &[usize]) -> String {
    let parts: Vec<String> = values.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

#[derive(Serialize)]
pub(crate) struct TableDoc {
    pub m: usize,
    pub k: usize,
    pub entries: Vec<usize>,
}

impl From<&FiniteTable> for TableDoc {
    fn from(t: &FiniteTable) -> Self {
        TableDoc {
            m: t.m(),
            k: t.k(),
            entries: t.entries().to_vec(),
        }
    }
}

#[derive(Serialize)]
pub(crate) struct IterateDoc {
    pub command: &'static str,
    pub n: u64,
    pub state: Vec<String>,
}

#[derive(Serialize)]
pub(crate) struct OrbitDoc {
    pub command: &'static str,
    pub states: Vec<Vec<String>>,
    pub recurred: bool,
}

#[derive(Serialize)]
pub(crate) struct OrderDoc {
    pub command: &'static str,
    /// Decimal string; may exceed 64 bits for tables.
    pub order: Option<String>,
    /// True for tables, where the answer is exact; false for a bounded search.
    pub exact: bool,
    pub bound: Option<u64>,
}

#[derive(Serialize)]
pub(crate) struct PointOrderDoc {
    pub command: &'static str,
    pub order: Option<u64>,
    pub bound: u64,
}

#[derive(Serialize)]
pub(crate) struct CheckIiDoc {
    pub command: &'static str,
    pub n: u64,
    pub arg: Option<usize>,
    pub holds: bool,
}

#[derive(Serialize)]
pub(crate) struct SymmetricDoc {
    pub command: &'static str,
    pub symmetric: bool,
    /// Only defined for tables of arity 2.
    pub persymmetric: Option<bool>,
}

#[derive(Serialize)]
pub(crate) struct CyclesDoc {
    pub command: &'static str,
    pub bijective: bool,
    pub cycle_lengths: Vec<usize>,
    pub minimal_order: Option<String>,
    pub cycles: Vec<Vec<Vec<usize>>>,
}

#[derive(Serialize)]
pub(crate) struct PeriodDoc {
    pub command: &'static str,
    pub minimal_period: Option<usize>,
    pub preperiod: Option<usize>,
    pub bound: usize,
}

#[derive(Serialize)]
pub(crate) struct EnumerateDoc {
    pub command: &'static str,
    pub m: usize,
    pub k: usize,
    pub count: usize,
    pub tables: Option<Vec<Vec<usize>>>,
}

#[derive(Serialize)]
pub(crate) struct CountDoc {
    pub command: &'static str,
    pub m: usize,
    pub count: String,
}

#[derive(Serialize)]
pub(crate) struct Claim1EntryDoc {
    pub state: Vec<usize>,
    pub state_period: usize,
    pub sequence_period: usize,
    pub direction1: bool,
    pub j_divides_n: bool,
    pub j_divides_nk: bool,
}

#[derive(Serialize)]
pub(crate) struct Claim1TallyDoc {
    pub states: usize,
    pub direction1: usize,
    pub j_divides_n: usize,
    pub j_divides_nk: usize,
}

#[derive(Serialize)]
pub(crate) struct Claim1Doc {
    pub command: &'static str,
    pub k: usize,
    pub entries: Vec<Claim1EntryDoc>,
    pub tally: Claim1TallyDoc,
}

#[derive(Serialize)]
pub(crate) struct AugmentDoc {
    pub command: &'static str,
    pub arity: usize,
    pub definition: Option<String>,
    pub table: Option<TableDoc>,
}

#[derive(Serialize)]
pub(crate) struct ConjugateDoc {
    pub command: &'static str,
    pub table: TableDoc,
}

#[derive(Serialize)]
pub(crate) struct ExampleDoc {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Serialize)]
pub(crate) struct VerifyDoc {
    pub command: &'static str,
    pub passed: usize,
    pub total: usize,
    pub examples: Vec<ExampleDoc>,
}

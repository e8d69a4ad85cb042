use std::fmt;
use std::thread;

use alexq_core::burau::reduced_alexander;
use alexq_core::coloring::{
    classify, coloring_space_summary, construct_coloring, count_fixed_tuples, in_span_with_trivial,
    kernel_basis_zero_delta, kernel_count_mod, verify_coloring,
};
use alexq_core::linalg::rank;
use alexq_core::{
    BraidWord, Coloring, ColoringRing, Error, FiniteQuandle, LambdaMatrix, LaurentPoly, QuotientCtx, Verdict,
};

use crate::dataset::ExampleRecord;
use crate::report::{
    AlexanderOutput, Certificate, CheckReport, ClassifyOutput, ColorOutput, ConstructedReport, CountOutput,
    RowReport, TableReport, TableSummary,
};

/// Exit status 1: a computed check failed or a request was refused.
pub const EXIT_CHECK: u8 = 1;
/// Exit status 2: malformed input.
pub const EXIT_USAGE: u8 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }

    pub fn check(message: impl Into<String>) -> Self {
        Self { code: EXIT_CHECK, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Syntax { .. }
            | Error::EmptyInput
            | Error::IndexOutOfRange { .. }
            | Error::NonInvertibleT { .. }
            | Error::ZeroModulus
            | Error::UnitModulus
            | Error::BudgetExceeded { .. } => EXIT_USAGE,
            _ => EXIT_CHECK,
        };
        Self { code, message: e.to_string() }
    }
}

fn strings(v: &[LaurentPoly]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

pub fn parse_poly_arg(text: &str) -> Result<LaurentPoly, CliError> {
    text.parse().map_err(|e: Error| CliError::usage(format!("invalid polynomial {text:?}: {e}")))
}

pub fn parse_braid_arg(text: &str, strands: Option<usize>) -> Result<BraidWord, CliError> {
    alexq_core::braid::parse_braid(text, strands).map_err(|e| CliError::usage(format!("invalid braid {text:?}: {e}")))
}

pub fn alexander(w: &BraidWord) -> Result<AlexanderOutput, CliError> {
    Ok(AlexanderOutput { braid: w.to_string(), strands: w.strands(), delta: reduced_alexander(w)?.to_string() })
}

pub fn classify_braid(w: &BraidWord) -> Result<ClassifyOutput, CliError> {
    let class = classify(w)?;
    let certificate = match class.verdict {
        Verdict::ZeroDelta => {
            Certificate::KernelVectors { vectors: kernel_basis_zero_delta(w)?.iter().map(|v| strings(v)).collect() }
        }
        Verdict::UnitDelta => Certificate::TrivialOnly,
        Verdict::NonUnitDelta => {
            let c = construct_coloring(w, &class.delta)?;
            Certificate::Coloring {
                modulus: class.delta.to_string(),
                values: strings(&c.values),
                verified: verify_coloring(w, &c)? && !c.is_trivial(),
            }
        }
    };
    Ok(ClassifyOutput {
        braid: w.to_string(),
        strands: w.strands(),
        delta: class.delta.to_string(),
        verdict: format!("{:?}", class.verdict),
        certificate,
    })
}

fn constructed_report(w: &BraidWord, f: &LaurentPoly) -> Result<(Coloring, ConstructedReport), Error> {
    let c = construct_coloring(w, f)?;
    let summary = coloring_space_summary(w, f, None)?;
    let modulus = match &c.ring {
        ColoringRing::Quotient(ctx) => ctx.modulus().to_string(),
        ColoringRing::Lambda => f.to_string(),
    };
    let report = ConstructedReport {
        modulus,
        values: strings(&c.values),
        verified: verify_coloring(w, &c)?,
        nontrivial: !c.is_trivial(),
        rank_mod_f: summary.rank_mod_f,
        generated_by_one: summary.generated_by_one,
    };
    Ok((c, report))
}

pub fn color(w: &BraidWord, f: &LaurentPoly) -> Result<ColorOutput, CliError> {
    let (_, r) = constructed_report(w, f)?;
    Ok(ColorOutput {
        braid: w.to_string(),
        strands: w.strands(),
        modulus: r.modulus,
        values: r.values,
        verified: r.verified,
        nontrivial: r.nontrivial,
        rank_mod_f: r.rank_mod_f,
        generated_by_one: r.generated_by_one,
    })
}

/// Below this many tuples enumeration stays on one thread.
const PARALLEL_THRESHOLD: u128 = 1 << 16;

/// Enumerates `Z_m^n`, splitting the first coordinate across threads.
pub fn enumerate_count(w: &BraidWord, q: &FiniteQuandle, budget: u64) -> Result<u64, CliError> {
    let m = q.modulus();
    let needed = (m as u128).checked_pow(w.strands() as u32).unwrap_or(u128::MAX);
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget }.into());
    }
    let workers = thread::available_parallelism().map_or(1, |n| n.get() as u64).min(m);
    if needed < PARALLEL_THRESHOLD || workers < 2 {
        return Ok(count_fixed_tuples(w, q, 0..m));
    }
    let chunk = m.div_ceil(workers);
    let total = thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|k| s.spawn(move || count_fixed_tuples(w, q, k * chunk..((k + 1) * chunk).min(m))))
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).sum()
    });
    Ok(total)
}

pub fn count(w: &BraidWord, m: u64, t: i64, budget: u64) -> Result<CountOutput, CliError> {
    let q = FiniteQuandle::new(m, t)?;
    Ok(CountOutput {
        braid: w.to_string(),
        strands: w.strands(),
        m,
        t: q.t(),
        enumerated: enumerate_count(w, &q, budget)?,
        kernel_count: kernel_count_mod(w, &q)?,
    })
}

struct RowChecks(Vec<CheckReport>);

impl RowChecks {
    fn push(&mut self, label: impl Into<String>, result: Result<(), String>) {
        let (passed, detail) = match result {
            Ok(()) => (true, None),
            Err(d) => (false, Some(d)),
        };
        self.0.push(CheckReport { label: label.into(), passed, detail });
    }
}

fn check_tuple(w: &BraidWord, values: &[LaurentPoly], ring: ColoringRing) -> Result<(), String> {
    let c = Coloring::new(values.to_vec(), ring);
    match verify_coloring(w, &c) {
        Ok(true) if c.is_trivial() => Err("coloring is trivial".into()),
        Ok(true) => Ok(()),
        Ok(false) => Err("verification failed".into()),
        Err(e) => Err(e.to_string()),
    }
}

fn check_construction(
    w: &BraidWord,
    f: &LaurentPoly,
    expected: Option<&[LaurentPoly]>,
    checks: &mut RowChecks,
    constructed: &mut Vec<ConstructedReport>,
) {
    let label = format!("construct mod {}", f.normalize_unit());
    let (c, report) = match constructed_report(w, f) {
        Ok(x) => x,
        Err(e) => return checks.push(label, Err(e.to_string())),
    };
    let ok = report.verified && report.nontrivial;
    checks.push(label.clone(), if ok { Ok(()) } else { Err("constructed coloring failed verification".into()) });
    if let (true, Some(e), ColoringRing::Quotient(ctx)) = (report.generated_by_one, expected, &c.ring) {
        let inside = in_span_with_trivial(ctx, &c.values, e).map_err(|e| e.to_string()).and_then(|inside| {
            if inside {
                Ok(())
            } else {
                Err("constructed coloring is not a combination of the expected one and the constant".into())
            }
        });
        checks.push(format!("{label}: span"), inside);
    }
    constructed.push(report);
}

pub fn check_row(rec: &ExampleRecord) -> RowReport {
    let w = &rec.braid;
    let mut checks = RowChecks(Vec::new());
    let mut constructed = Vec::new();
    let mut kernel_vectors = None;
    let (delta, verdict) = match classify(w) {
        Ok(c) => (c.delta, c.verdict),
        Err(e) => {
            checks.push("alexander polynomial", Err(e.to_string()));
            return finish(rec, LaurentPoly::zero(), "error".into(), checks, constructed, None);
        }
    };
    if let Some(stated) = &rec.delta {
        let same = stated.normalize_unit() == delta;
        checks.push("delta", if same { Ok(()) } else { Err(format!("stated {stated}, computed {delta}")) });
    }
    match verdict {
        Verdict::ZeroDelta => match kernel_basis_zero_delta(w) {
            Ok(basis) => {
                if let Some(e) = &rec.expected_coloring {
                    checks.push("expected coloring", check_tuple(w, e, ColoringRing::Lambda));
                    let mut rows = basis.clone();
                    rows.push(e.clone());
                    let in_span = LambdaMatrix::from_rows(rows).map(|m| rank(&m) == basis.len());
                    checks.push(
                        "expected coloring: span",
                        match in_span {
                            Ok(true) => Ok(()),
                            Ok(false) => Err("expected coloring is outside the kernel".into()),
                            Err(e) => Err(e.to_string()),
                        },
                    );
                }
                kernel_vectors = Some(basis.iter().map(|v| strings(v)).collect());
            }
            Err(e) => checks.push("kernel basis", Err(e.to_string())),
        },
        Verdict::UnitDelta => {
            if let Some(e) = &rec.expected_coloring {
                let trivial = Coloring::new(e.clone(), ColoringRing::Lambda).is_trivial();
                checks.push("trivial only", if trivial { Ok(()) } else { Err("unit delta admits no non-trivial coloring".into()) });
            }
        }
        Verdict::NonUnitDelta => {
            if let Some(e) = &rec.expected_coloring {
                let ring = QuotientCtx::new(&delta).map(ColoringRing::Quotient);
                let result = ring.map_err(|e| e.to_string()).and_then(|r| check_tuple(w, e, r));
                checks.push("expected coloring", result);
            }
            check_construction(w, &delta, rec.expected_coloring.as_deref(), &mut checks, &mut constructed);
            for (f, expected) in rec.factors.iter().zip(&rec.factor_colorings) {
                if let Some(e) = expected {
                    let label = format!("expected coloring mod {}", f.normalize_unit());
                    let result = QuotientCtx::new(f)
                        .map_err(|e| e.to_string())
                        .and_then(|ctx| check_tuple(w, e, ColoringRing::Quotient(ctx)));
                    checks.push(label, result);
                }
                check_construction(w, f, expected.as_deref(), &mut checks, &mut constructed);
            }
        }
    }
    finish(rec, delta, format!("{verdict:?}"), checks, constructed, kernel_vectors)
}

fn finish(
    rec: &ExampleRecord,
    delta: LaurentPoly,
    verdict: String,
    checks: RowChecks,
    constructed: Vec<ConstructedReport>,
    kernel_vectors: Option<Vec<Vec<String>>>,
) -> RowReport {
    let pass = checks.0.iter().all(|c| c.passed);
    RowReport {
        name: rec.name.clone(),
        line: rec.line,
        braid: rec.braid.to_string(),
        strands: rec.braid.strands(),
        delta: delta.to_string(),
        verdict,
        checks: checks.0,
        constructed,
        kernel_vectors,
        note: rec.note.clone(),
        pass,
    }
}

pub fn table(records: &[ExampleRecord], source: &str) -> TableReport {
    let rows: Vec<RowReport> = records.iter().map(check_row).collect();
    let passed = rows.iter().filter(|r| r.pass).count();
    TableReport {
        summary: TableSummary { source: source.to_owned(), rows: rows.len(), passed, failed: rows.len() - passed },
        rows,
    }
}

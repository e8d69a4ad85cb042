//! Colorings of braid closures by Alexander quandles.
//!
//! An Alexander quandle is a `Λ`-module with `a ∗ b = t a + (1 - t) b`. A
//! coloring of the closure of `w` is a vector `c` of top-strand colors with
//! `φ(w) c = c`, i.e. a kernel vector of `φ(w) - I` over the quandle.
//!
//! Which case applies is decided by the reduced Alexander polynomial `Δ`:
//!
//! * `Δ = 0`: the kernel over `Λ` has rank at least 2, and any kernel vector
//!   scaled by a quandle element gives a coloring by any Alexander quandle.
//! * `Δ = ±t^k`: only constant colorings exist.
//! * otherwise: `Λ/(f)` admits a non-constant coloring for every non-unit
//!   factor `f` of `Δ`, built by [`construct_coloring`].

mod finite;

pub use finite::{
    count_colorings_finite, count_colorings_with_budget, count_fixed_tuples, kernel_count_mod,
    FiniteQuandle, DEFAULT_BUDGET,
};

use alloc::vec;
use alloc::vec::Vec;

use crate::braid::BraidWord;
use crate::burau::{burau_unreduced, reduced_alexander};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::linalg::{
    back_substitute, echelonize, echelonize_for_modulus, echelonize_over_quotient, kernel_basis, primitive_vector,
    quotient_rank_report, EchelonResult,
};
use crate::matrix::LambdaMatrix;
use crate::quotient::QuotientCtx;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// `Δ = 0`: non-trivial colorings by every non-trivial Alexander quandle.
    ZeroDelta,
    /// `Δ` is a unit: only trivial colorings by any Alexander quandle.
    UnitDelta,
    /// Non-trivial colorings by `Λ/(Δ)` and by `Λ/(f)` for factors `f`.
    NonUnitDelta,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub delta: LaurentPoly,
    pub verdict: Verdict,
}

impl Classification {
    pub fn from_delta(delta: LaurentPoly) -> Self {
        let verdict = if delta.is_zero() {
            Verdict::ZeroDelta
        } else if delta.is_unit() {
            Verdict::UnitDelta
        } else {
            Verdict::NonUnitDelta
        };
        Self { delta, verdict }
    }
}

pub fn classify(w: &BraidWord) -> Result<Classification> {
    Ok(Classification::from_delta(reduced_alexander(w)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoringRing {
    /// Colors are elements of `Λ` itself.
    Lambda,
    Quotient(QuotientCtx),
}

impl ColoringRing {
    pub fn equal(&self, a: &LaurentPoly, b: &LaurentPoly) -> bool {
        match self {
            ColoringRing::Lambda => a == b,
            ColoringRing::Quotient(ctx) => ctx.equal(a, b),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub values: Vec<LaurentPoly>,
    pub ring: ColoringRing,
}

impl Coloring {
    pub fn new(values: Vec<LaurentPoly>, ring: ColoringRing) -> Self {
        Self { values, ring }
    }

    pub fn strands(&self) -> usize {
        self.values.len()
    }

    /// Constant colorings are the trivial ones.
    pub fn is_trivial(&self) -> bool {
        match self.values.split_first() {
            None => true,
            Some((first, rest)) => rest.iter().all(|x| self.ring.equal(first, x)),
        }
    }

    pub fn scale(&self, alpha: &LaurentPoly) -> Self {
        Self { values: self.values.iter().map(|v| alpha * v).collect(), ring: self.ring.clone() }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if self.strands() != other.strands() {
            return Err(Error::LengthMismatch { expected: self.strands(), found: other.strands() });
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Ok(Self { values, ring: self.ring.clone() })
    }
}

/// Pushes top colors through the braid crossing by crossing.
///
/// At `σ_i` the strand at position `i` passes under its neighbour, so
/// `(a, b) ↦ (b, t a + (1 - t) b)`; at `σ_i^{-1}`, `(a, b) ↦ (t^-1 b + (1 - t^-1) a, a)`.
/// Letters are applied from the end of the word, which makes the result
/// equal to `φ(w) · top`.
pub fn propagate(w: &BraidWord, top: &[LaurentPoly]) -> Result<Vec<LaurentPoly>> {
    if top.len() != w.strands() {
        return Err(Error::LengthMismatch { expected: w.strands(), found: top.len() });
    }
    let t = LaurentPoly::t();
    let one_minus_t = &LaurentPoly::one() - &t;
    let tinv = LaurentPoly::monomial(1, -1);
    let one_minus_tinv = &LaurentPoly::one() - &tinv;
    let mut v = top.to_vec();
    for &k in w.letters().iter().rev() {
        let i = k.unsigned_abs() as usize - 1;
        let (a, b) = (v[i].clone(), v[i + 1].clone());
        if k > 0 {
            v[i + 1] = &t * &a + &one_minus_t * &b;
            v[i] = b;
        } else {
            v[i] = &tinv * &b + &one_minus_tinv * &a;
            v[i + 1] = a;
        }
    }
    Ok(v)
}

/// True iff the bottom colors equal the top colors in the coloring's ring.
pub fn verify_coloring(w: &BraidWord, c: &Coloring) -> Result<bool> {
    let bottom = propagate(w, &c.values)?;
    Ok(bottom.iter().zip(&c.values).all(|(b, top)| c.ring.equal(b, top)))
}

fn matrix_minus_identity(w: &BraidWord) -> LambdaMatrix {
    burau_unreduced(w).minus_identity().expect("Burau matrices are square")
}

fn stacked_rank(vectors: &[Vec<LaurentPoly>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let m = LambdaMatrix::from_rows(vectors.to_vec()).expect("equal lengths");
    echelonize(&m).rank
}

/// Kernel vectors of `φ(w) - I` over `Λ` when `Δ = 0`: the all-ones vector
/// first, then independent primitive vectors with last entry 0.
pub fn kernel_basis_zero_delta(w: &BraidWord) -> Result<Vec<Vec<LaurentPoly>>> {
    if classify(w)?.verdict != Verdict::ZeroDelta {
        return Err(Error::WrongVerdict);
    }
    let a = matrix_minus_identity(w);
    let n = w.strands();
    let mut basis = vec![vec![LaurentPoly::one(); n]];
    for v in kernel_basis(&echelonize(&a)) {
        let last = v[n - 1].clone();
        let shifted = primitive_vector(&v.iter().map(|x| x - &last).collect::<Vec<_>>());
        let mut candidate = basis.clone();
        candidate.push(shifted.clone());
        if stacked_rank(&candidate) == candidate.len() {
            basis = candidate;
        }
    }
    let exact = basis.iter().all(|v| a.mul_vec(v).is_ok_and(|r| r.iter().all(LaurentPoly::is_zero)));
    if basis.len() < 2 || !exact {
        return Err(Error::Internal("zero Alexander polynomial without a rank-2 kernel"));
    }
    Ok(basis)
}

/// Candidate coloring from an echelon of `φ(w) - I` with pivots on the
/// diagonal of the first `n - 1` columns: `x_j = f / gcd(a_jj, f)` at a pivot
/// sharing a factor with `f`, zeros below, exact back-substitution above.
fn coloring_from_pivot(e: &EchelonResult, f: &LaurentPoly, j: usize, g: &LaurentPoly) -> Vec<LaurentPoly> {
    let n = e.echelon.cols();
    let mut x = vec![LaurentPoly::zero(); n];
    x[j] = f.divide_exact(g).unwrap().expect("gcd divides the modulus");
    back_substitute(&e.echelon, &e.pivots[..j], &mut x);
    x
}

/// A non-trivial coloring of the closure of `w` over `Λ/(f)`, where `f` is a
/// non-unit factor of `Δ ≠ 0`.
///
/// Row sums of `φ(w) - I` vanish, so with `x_n = 0` it suffices to solve the
/// triangular system in the first `n - 1` columns. Take the first pivot `a_jj`
/// sharing a factor with `f`, set `x_j = f / gcd(a_jj, f)`, which is nonzero
/// modulo `f`, and back-substitute upward. When a pivot does not divide its
/// right-hand side the partial solution is scaled by that pivot; pivots above
/// `j` are coprime to `f`, so the vector stays non-constant modulo `f`.
pub fn construct_coloring(w: &BraidWord, f: &LaurentPoly) -> Result<Coloring> {
    let class = classify(w)?;
    if class.verdict != Verdict::NonUnitDelta {
        return Err(Error::WrongVerdict);
    }
    let ctx = QuotientCtx::new(f)?;
    if !class.delta.is_divisible_by(ctx.modulus()) {
        return Err(Error::NotADivisor);
    }
    let f = ctx.modulus();
    let a = matrix_minus_identity(w);
    let n = w.strands();

    let e = echelonize_for_modulus(&a, f)?;
    let diagonal_pivots = e.rank == n - 1 && e.pivots.iter().enumerate().all(|(k, &p)| p == (k, k));
    if !diagonal_pivots {
        return Err(Error::Internal("nonzero Alexander polynomial but rank(φ(w) - I) < n - 1"));
    }
    let (j, g) = e
        .diagonal()
        .enumerate()
        .map(|(j, entry)| entry.gcd(f).map(|g| (j, g)))
        .find(|r| r.as_ref().map_or(true, |(_, g)| !g.is_unit()))
        .transpose()?
        .ok_or(Error::Internal("every pivot is coprime to a non-unit factor of Δ"))?;
    let x = coloring_from_pivot(&e, f, j, &g);
    let coloring = Coloring::new(ctx.reduce_vector(&x), ColoringRing::Quotient(ctx));
    if coloring.is_trivial() || !verify_coloring(w, &coloring)? {
        return Err(Error::Internal("constructed vector failed verification"));
    }
    Ok(coloring)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringSpaceSummary {
    pub strands: usize,
    /// Rank of `φ(w) - I` over `Λ/(f)`: echelon pivots that survive modulo `f`.
    pub rank_mod_f: usize,
    /// Rank `n - 2`: every coloring is a combination of one non-trivial
    /// coloring and the constant one.
    pub generated_by_one: bool,
    /// `n - k - 1 <= rank_mod_f <= n - 2` for a factor of multiplicity `k`;
    /// `None` when no multiplicity was supplied.
    pub multiplicity_bounds_ok: Option<bool>,
    /// The echelon used certifies the rank over `Λ/(f)`.
    pub certified: bool,
}

pub fn coloring_space_summary(
    w: &BraidWord,
    f: &LaurentPoly,
    multiplicity: Option<u32>,
) -> Result<ColoringSpaceSummary> {
    if f.is_zero() {
        return Err(Error::ZeroModulus);
    }
    let e = echelonize_over_quotient(&matrix_minus_identity(w), f)?;
    let report = quotient_rank_report(&e, f)?;
    let n = w.strands() as i64;
    let rank = report.rank_mod_f as i64;
    Ok(ColoringSpaceSummary {
        strands: w.strands(),
        rank_mod_f: report.rank_mod_f,
        generated_by_one: rank == n - 2,
        multiplicity_bounds_ok: multiplicity.map(|k| n - k as i64 - 1 <= rank && rank <= n - 2),
        certified: report.valid && report.pivot_rows_vanish,
    })
}

/// Whether `c` lies in the span of `e` and the constant vector over `Λ/(f)`,
/// tested by the vanishing of all 2×2 minors of `(c - c_n 1, e - e_n 1)`.
/// The test is exact whenever some entry of `e - e_n 1` is invertible mod `f`.
pub fn in_span_with_trivial(ctx: &QuotientCtx, c: &[LaurentPoly], e: &[LaurentPoly]) -> Result<bool> {
    if c.len() != e.len() {
        return Err(Error::LengthMismatch { expected: e.len(), found: c.len() });
    }
    let (Some(cl), Some(el)) = (c.last(), e.last()) else {
        return Ok(true);
    };
    let dc: Vec<LaurentPoly> = c.iter().map(|x| x - cl).collect();
    let de: Vec<LaurentPoly> = e.iter().map(|x| x - el).collect();
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            let minor = &dc[i] * &de[j] - &dc[j] * &de[i];
            if !ctx.is_zero(&minor) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

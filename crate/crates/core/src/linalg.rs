//! Linear algebra over `Λ = Z[t, t^-1]`.
//!
//! Row reduction uses only three moves: swapping rows, multiplying a row by a
//! nonzero polynomial, and adding a multiple of one row to another. Over `Λ`
//! these keep the solution set of `A x = 0`. Over `Λ/(f)` the scaling move is
//! only safe when the multiplier is coprime to `f`, so every multiplier is
//! recorded and [`quotient_rank_report`] checks them after the fact.
//!
//! Elimination below a pivot `p` scales the target row by `p / gcd(p, a)`
//! instead of `p`, where `a` is the entry being cleared. This is the
//! common-divisor variant of the two-by-two condensation step and keeps
//! coefficient growth down.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::laurent::{cmp_size, LaurentPoly};
use crate::matrix::LambdaMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EchelonResult {
    pub echelon: LambdaMatrix,
    pub rank: usize,
    /// `(row, col)` of each pivot; columns strictly increase.
    pub pivots: Vec<(usize, usize)>,
    /// Every non-identity row multiplier, in the order applied.
    pub multipliers: Vec<LaurentPoly>,
}

impl EchelonResult {
    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.iter().map(|&(_, c)| c)
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.echelon.cols()).filter(|c| !self.pivot_columns().any(|p| p == *c)).collect()
    }

    /// Pivot entries in row order.
    pub fn diagonal(&self) -> impl Iterator<Item = &LaurentPoly> + '_ {
        self.pivots.iter().map(|&(r, c)| &self.echelon[(r, c)])
    }
}

/// Row echelon form over `Λ`. Pivots minimize (span, |leading coefficient|).
pub fn echelonize(a: &LambdaMatrix) -> EchelonResult {
    reduce(a, None, false)
}

/// Like [`echelonize`], but in each column prefers a pivot whose elimination
/// multipliers are all coprime to `modulus`, so the result also certifies
/// solutions over `Λ/(modulus)` whenever such pivots exist.
pub fn echelonize_for_modulus(a: &LambdaMatrix, modulus: &LaurentPoly) -> Result<EchelonResult> {
    if modulus.is_zero() {
        return Err(Error::ZeroModulus);
    }
    Ok(reduce(a, Some(modulus), false))
}

/// Row echelon form over `Λ/(modulus)`: entries divisible by `modulus` count
/// as zero, so every pivot is nonzero modulo `modulus`. Pivots are chosen as in
/// [`echelonize_for_modulus`].
pub fn echelonize_over_quotient(a: &LambdaMatrix, modulus: &LaurentPoly) -> Result<EchelonResult> {
    if modulus.is_zero() {
        return Err(Error::ZeroModulus);
    }
    Ok(reduce(a, Some(modulus), true))
}

fn clear_multiples(m: &mut LambdaMatrix, f: &LaurentPoly) {
    for i in 0..m.rows() {
        for e in m.row_mut(i) {
            if !e.is_zero() && e.is_divisible_by(f) {
                *e = LaurentPoly::zero();
            }
        }
    }
}

fn elimination_factors(pivot: &LaurentPoly, entry: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
    let g = pivot.gcd(entry).expect("pivot is nonzero");
    let scale = pivot.divide_exact(&g).unwrap().expect("gcd divides pivot");
    let factor = entry.divide_exact(&g).unwrap().expect("gcd divides entry");
    (scale, factor)
}

fn reduce(a: &LambdaMatrix, modulus: Option<&LaurentPoly>, over_quotient: bool) -> EchelonResult {
    let mut m = a.clone();
    if over_quotient {
        clear_multiples(&mut m, modulus.expect("quotient elimination needs a modulus"));
    }
    let mut pivots = Vec::new();
    let mut multipliers = Vec::new();
    let mut r = 0;
    for c in 0..m.cols() {
        if r == m.rows() {
            break;
        }
        let mut candidates: Vec<usize> = (r..m.rows()).filter(|&i| !m[(i, c)].is_zero()).collect();
        if candidates.is_empty() {
            continue;
        }
        candidates.sort_by(|&x, &y| cmp_size(&m[(x, c)], &m[(y, c)]).then(x.cmp(&y)));
        let chosen = modulus
            .and_then(|f| {
                candidates.iter().copied().find(|&p| {
                    candidates.iter().filter(|&&i| i != p).all(|&i| {
                        elimination_factors(&m[(p, c)], &m[(i, c)]).0.is_coprime(f)
                    })
                })
            })
            .unwrap_or(candidates[0]);
        m.swap_rows(r, chosen);
        for i in r + 1..m.rows() {
            if m[(i, c)].is_zero() {
                continue;
            }
            let (scale, factor) = elimination_factors(&m[(r, c)], &m[(i, c)]);
            for j in c..m.cols() {
                let updated = &scale * &m[(i, j)] - &factor * &m[(r, j)];
                m[(i, j)] = updated;
            }
            debug_assert!(m[(i, c)].is_zero());
            if !scale.is_one() {
                multipliers.push(scale);
            }
        }
        if over_quotient {
            clear_multiples(&mut m, modulus.expect("quotient elimination needs a modulus"));
        }
        pivots.push((r, c));
        r += 1;
    }
    EchelonResult { echelon: m, rank: r, pivots, multipliers }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn det_bareiss(a: &LambdaMatrix) -> Result<LaurentPoly> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    let n = a.rows();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut m = a.clone();
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        let pivot = (k..n)
            .filter(|&i| !m[(i, k)].is_zero())
            .min_by(|&x, &y| cmp_size(&m[(x, k)], &m[(y, k)]).then(x.cmp(&y)));
        let Some(p) = pivot else {
            return Ok(LaurentPoly::zero());
        };
        if p != k {
            m.swap_rows(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let cross = &m[(k, k)] * &m[(i, j)] - &m[(i, k)] * &m[(k, j)];
                m[(i, j)] = cross
                    .divide_exact(&prev)?
                    .ok_or(Error::Internal("inexact Bareiss division"))?;
            }
            m[(i, k)] = LaurentPoly::zero();
        }
        prev = m[(k, k)].clone();
    }
    let det = m[(n - 1, n - 1)].clone();
    Ok(if negate { -det } else { det })
}

/// One condensation step: `b_ij = a_11 a_ij - a_i1 a_1j` for `i, j >= 2`.
/// Satisfies `det(B) = a_11^(n-2) det(A)` for square `A`.
pub fn condense(a: &LambdaMatrix) -> Result<LambdaMatrix> {
    condense_with_divisor(a, &LaurentPoly::one())
}

/// Condensation after dividing the first column by a common divisor `d`:
/// `b_ij = a'_11 a_ij - a'_i1 a_1j` with `a'_i1 = a_i1 / d`, so that
/// `a_11 det(B) = a'_11^(n-1) det(A)`.
pub fn condense_with_divisor(a: &LambdaMatrix, d: &LaurentPoly) -> Result<LambdaMatrix> {
    if a.rows() == 0 || a.cols() == 0 {
        return Err(Error::DimensionMismatch);
    }
    if a[(0, 0)].is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let first: Vec<LaurentPoly> = (0..a.rows())
        .map(|i| a[(i, 0)].divide_exact(d)?.ok_or(Error::NotADivisor))
        .collect::<Result<_>>()?;
    Ok(LambdaMatrix::from_fn(a.rows() - 1, a.cols() - 1, |i, j| {
        &first[0] * &a[(i + 1, j + 1)] - &first[i + 1] * &a[(0, j + 1)]
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRankReport {
    /// Pivots that stay nonzero modulo `f`.
    pub rank_mod_f: usize,
    /// `(pivot index, gcd(pivot entry, f))`.
    pub diagonal_gcds: Vec<(usize, LaurentPoly)>,
    /// Pivot indices whose entry is divisible by `f`.
    pub vanishing: Vec<usize>,
    /// True iff every recorded multiplier is coprime to `f`, so the echelon
    /// has the same solutions as the original matrix over `Λ/(f)`.
    pub valid: bool,
    /// Every row with a vanishing pivot vanishes entirely modulo `f`. Only
    /// then is `rank_mod_f` the rank over `Λ/(f)`; [`echelonize_over_quotient`]
    /// guarantees it.
    pub pivot_rows_vanish: bool,
}

pub fn quotient_rank_report(e: &EchelonResult, f: &LaurentPoly) -> Result<QuotientRankReport> {
    if f.is_zero() {
        return Err(Error::ZeroModulus);
    }
    let mut diagonal_gcds = Vec::new();
    let mut vanishing = Vec::new();
    for (idx, entry) in e.diagonal().enumerate() {
        diagonal_gcds.push((idx, entry.gcd(f)?));
        if entry.is_divisible_by(f) {
            vanishing.push(idx);
        }
    }
    let valid = e.multipliers.iter().all(|m| m.is_coprime(f));
    let pivot_rows_vanish =
        vanishing.iter().all(|&k| e.echelon.row(e.pivots[k].0).iter().all(|x| x.is_divisible_by(f)));
    Ok(QuotientRankReport { rank_mod_f: e.rank - vanishing.len(), diagonal_gcds, vanishing, valid, pivot_rows_vanish })
}

/// Back-substitution with the given values on free columns (others are 0).
///
/// When a pivot does not divide its right-hand side, the partial solution is
/// rescaled by the pivot entry, so the result is a `Λ`-multiple of the
/// solution over the fraction field with those free values.
pub fn solve_with_free_vars(
    e: &EchelonResult,
    assignments: &BTreeMap<usize, LaurentPoly>,
) -> Result<Vec<LaurentPoly>> {
    let cols = e.echelon.cols();
    let mut x = vec![LaurentPoly::zero(); cols];
    for (&col, value) in assignments {
        if col >= cols || e.pivot_columns().any(|c| c == col) {
            return Err(Error::InconsistentAssignment { col });
        }
        x[col] = value.clone();
    }
    back_substitute(&e.echelon, &e.pivots, &mut x);
    Ok(x)
}

/// Fills pivot columns of `x` bottom-up from the given pivots.
pub(crate) fn back_substitute(m: &LambdaMatrix, pivots: &[(usize, usize)], x: &mut [LaurentPoly]) {
    for &(r, c) in pivots.iter().rev() {
        let rhs = (c + 1..m.cols())
            .filter(|&k| !m[(r, k)].is_zero() && !x[k].is_zero())
            .fold(LaurentPoly::zero(), |acc, k| acc - &m[(r, k)] * &x[k]);
        let pivot = &m[(r, c)];
        match rhs.divide_exact(pivot).expect("pivot is nonzero") {
            Some(q) => x[c] = q,
            None => {
                for v in x.iter_mut() {
                    *v = &*v * pivot;
                }
                x[c] = rhs;
            }
        }
    }
}

/// Divides a vector by the gcd of its entries.
pub fn primitive_vector(v: &[LaurentPoly]) -> Vec<LaurentPoly> {
    let g = v.iter().filter(|p| !p.is_zero()).try_fold(LaurentPoly::zero(), |acc, p| acc.gcd(p));
    match g {
        Ok(g) if !g.is_zero() => v.iter().map(|p| p.divide_exact(&g).unwrap().unwrap()).collect(),
        _ => v.to_vec(),
    }
}

/// One primitive kernel vector per free column, each with a single nonzero free entry.
pub fn kernel_basis(e: &EchelonResult) -> Vec<Vec<LaurentPoly>> {
    e.free_columns()
        .into_iter()
        .map(|col| {
            let assignment = BTreeMap::from([(col, LaurentPoly::one())]);
            let x = solve_with_free_vars(e, &assignment).expect("free column");
            primitive_vector(&x)
        })
        .collect()
}

/// Rank over the fraction field of `Λ`.
pub fn rank(a: &LambdaMatrix) -> usize {
    echelonize(a).rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn mat(rows: &[&[&str]]) -> LambdaMatrix {
        LambdaMatrix::from_rows(rows.iter().map(|r| r.iter().map(|s| p(s)).collect()).collect()).unwrap()
    }

    #[test]
    fn determinant_of_generator_block() {
        assert_eq!(det_bareiss(&mat(&[&["0", "1"], &["t", "1-t"]])).unwrap(), p("-t"));
        assert_eq!(det_bareiss(&LambdaMatrix::identity(4)).unwrap(), LaurentPoly::one());
        assert_eq!(det_bareiss(&LambdaMatrix::zeros(0, 0)).unwrap(), LaurentPoly::one());
        assert_eq!(
            det_bareiss(&LambdaMatrix::zeros(2, 3)),
            Err(Error::NotSquare { rows: 2, cols: 3 })
        );
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        let e = echelonize(&LambdaMatrix::zeros(3, 3));
        assert_eq!(e.rank, 0);
        assert!(e.multipliers.is_empty());
        assert_eq!(e.free_columns(), [0, 1, 2]);
        assert_eq!(echelonize(&LambdaMatrix::zeros(0, 0)).rank, 0);
    }

    #[test]
    fn echelon_shape_and_kernel() {
        let a = mat(&[&["t", "1", "2"], &["t^2", "t", "2t"], &["1", "1+t", "t^-1"]]);
        let e = echelonize(&a);
        assert_eq!(e.rank, 2);
        for (k, &(r, c)) in e.pivots.iter().enumerate() {
            assert_eq!(r, k);
            for i in r + 1..3 {
                assert!(e.echelon[(i, c)].is_zero());
            }
        }
        for v in kernel_basis(&e) {
            assert!(a.mul_vec(&v).unwrap().iter().all(LaurentPoly::is_zero));
        }
    }

    #[test]
    fn back_substitution_rescales_on_inexact_division() {
        // 2 x0 + x1 = 0 with x1 = 1 forces x0 = -1/2; rescaled to (-1, 2)
        let a = mat(&[&["2", "1"]]);
        let e = echelonize(&a);
        let x = solve_with_free_vars(&e, &BTreeMap::from([(1, LaurentPoly::one())])).unwrap();
        assert_eq!(x, [p("-1"), p("2")]);
        let zero = solve_with_free_vars(&e, &BTreeMap::new()).unwrap();
        assert!(zero.iter().all(LaurentPoly::is_zero));
        assert_eq!(
            solve_with_free_vars(&e, &BTreeMap::from([(0, LaurentPoly::one())])),
            Err(Error::InconsistentAssignment { col: 0 })
        );
    }

    #[test]
    fn condensation_identity_on_fixed_matrix() {
        let a = mat(&[&["t", "1", "0"], &["2", "t^-1", "1"], &["1-t", "3", "t"]]);
        let b = condense(&a).unwrap();
        let lhs = det_bareiss(&b).unwrap();
        let rhs = &a[(0, 0)] * &det_bareiss(&a).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn quotient_report_marks_vanishing_pivots() {
        // (t - 1) x = 0 over Λ/((t - 1)(t^2 + 1))
        let a = mat(&[&["t-1"]]);
        let e = echelonize(&a);
        let f = p("(t-1)(t^2+1)");
        let report = quotient_rank_report(&e, &f).unwrap();
        assert_eq!(report.rank_mod_f, 1);
        assert_eq!(report.diagonal_gcds, [(0, p("t-1"))]);
        assert!(report.valid);
        let trivial = quotient_rank_report(&e, &LaurentPoly::one()).unwrap();
        assert_eq!(trivial.rank_mod_f, 0);
        assert_eq!(quotient_rank_report(&e, &LaurentPoly::zero()), Err(Error::ZeroModulus));
    }

    #[test]
    fn modulus_aware_pivoting_avoids_bad_multipliers() {
        // Default pivot is t - 1 (smaller than t^2 + 1), which would scale row 2 by t - 1.
        let a = mat(&[&["t^2+1", "1"], &["t-1", "t"]]);
        let f = p("t-1");
        assert!(!quotient_rank_report(&echelonize(&a), &f).unwrap().valid);
        let e = echelonize_for_modulus(&a, &f).unwrap();
        assert!(quotient_rank_report(&e, &f).unwrap().valid);
        assert_eq!(e.echelon[(0, 0)].to_string(), "t^2 + 1");
    }

    #[test]
    fn quotient_echelon_skips_vanishing_pivots() {
        // the pivot t^2 - t + 1 vanishes mod f but its row does not
        let a = mat(&[&["t^2-t+1", "t"], &["0", "0"]]);
        let f = p("t^2-t+1");
        let report = quotient_rank_report(&echelonize(&a), &f).unwrap();
        assert_eq!(report.rank_mod_f, 0);
        assert!(report.valid && !report.pivot_rows_vanish);
        let e = echelonize_over_quotient(&a, &f).unwrap();
        assert_eq!(e.pivots, [(0, 1)]);
        let report = quotient_rank_report(&e, &f).unwrap();
        assert_eq!(report.rank_mod_f, 1);
        assert!(report.valid && report.pivot_rows_vanish);
        assert_eq!(echelonize_over_quotient(&a, &LaurentPoly::zero()), Err(Error::ZeroModulus));
    }
}

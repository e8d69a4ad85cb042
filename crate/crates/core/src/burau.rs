//! Burau matrices of braid words and the reduced Alexander polynomial.
//!
//! The unreduced generator `σ_i` is the identity with the block
//! `[[0, 1], [t, 1 - t]]` on rows and columns `i, i+1`. A word maps to the
//! product of its generator matrices in the order written, so `φ(w) · c`
//! turns the top colors `c` of the braid into its bottom colors.

use alloc::vec::Vec;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::linalg::det_bareiss;
use crate::matrix::LambdaMatrix;

fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().copied())
}

fn check_index(i: i32, n: usize) -> Result<usize> {
    let k = i.unsigned_abs() as usize;
    if i == 0 || k >= n {
        return Err(Error::IndexOutOfRange { index: i as i64, strands: n });
    }
    Ok(k)
}

/// `φ(σ_i)` for `i > 0`, `φ(σ_{-i})^{-1}` for `i < 0`, as an `n × n` matrix.
pub fn burau_generator(i: i32, n: usize) -> Result<LambdaMatrix> {
    let k = check_index(i, n)? - 1;
    let block = if i > 0 {
        [[poly(&[]), poly(&[(0, 1)])], [poly(&[(1, 1)]), poly(&[(0, 1), (1, -1)])]]
    } else {
        [[poly(&[(0, 1), (-1, -1)]), poly(&[(-1, 1)])], [poly(&[(0, 1)]), poly(&[])]]
    };
    let mut m = LambdaMatrix::identity(n);
    for (r, row) in block.into_iter().enumerate() {
        for (c, e) in row.into_iter().enumerate() {
            m[(k + r, k + c)] = e;
        }
    }
    Ok(m)
}

/// `φ(w)`: the generator matrices multiplied in word order.
pub fn burau_unreduced(w: &BraidWord) -> LambdaMatrix {
    let n = w.strands();
    w.letters().iter().fold(LambdaMatrix::identity(n), |acc, &k| {
        &acc * &burau_generator(k, n).expect("letters are validated by BraidWord")
    })
}

/// Reduced Burau generator, an `(n-1) × (n-1)` matrix.
///
/// `σ_1 ↦ [[-t, 0], [1, 1]] ⊕ I`, `σ_i ↦ I ⊕ [[1, t, 0], [0, -t, 0], [0, 1, 1]] ⊕ I`
/// on rows `i-1..=i+1` (1-based), `σ_{n-1} ↦ I ⊕ [[1, t], [0, -t]]`, and `[-t]`
/// when `n = 2`. Negative letters give the exact inverses.
pub fn reduced_generator(i: i32, n: usize) -> Result<LambdaMatrix> {
    let k = check_index(i, n)?;
    let dim = n - 1;
    let inv = i < 0;
    let t = poly(&[(1, 1)]);
    let neg_t = poly(&[(1, -1)]);
    let tinv = poly(&[(-1, 1)]);
    let neg_tinv = poly(&[(-1, -1)]);
    let one = LaurentPoly::one();
    let mut m = LambdaMatrix::identity(dim);
    if n == 2 {
        m[(0, 0)] = if inv { neg_tinv } else { neg_t };
        return Ok(m);
    }
    // 0-based row of the generator's diagonal -t entry
    let d = k - 1;
    m[(d, d)] = if inv { neg_tinv.clone() } else { neg_t };
    if k > 1 {
        // entry just above the diagonal: t, or 1 for the inverse
        m[(d - 1, d)] = if inv { one.clone() } else { t };
    }
    if k < n - 1 {
        // entry just below the diagonal: 1, or t^-1 for the inverse
        m[(d + 1, d)] = if inv { tinv } else { one };
    }
    Ok(m)
}

/// `φ̃(w)`: the reduced generators multiplied in word order.
pub fn burau_reduced(w: &BraidWord) -> LambdaMatrix {
    let n = w.strands();
    w.letters().iter().fold(LambdaMatrix::identity(n - 1), |acc, &k| {
        &acc * &reduced_generator(k, n).expect("letters are validated by BraidWord")
    })
}

/// `1 + t + ... + t^(n-1)`.
pub fn strand_polynomial(n: usize) -> LaurentPoly {
    LaurentPoly::from_terms((0..n as i64).map(|e| (e, 1)))
}

/// `det(φ̃(w) - I)`.
pub fn reduced_characteristic_det(w: &BraidWord) -> Result<LaurentPoly> {
    det_bareiss(&burau_reduced(w).minus_identity()?)
}

/// The reduced Alexander polynomial of the closure: `det(φ̃(w) - I)` divided by
/// `1 + t + ... + t^(n-1)`, normalized to lowest exponent 0 and a positive
/// leading coefficient.
pub fn reduced_alexander(w: &BraidWord) -> Result<LaurentPoly> {
    let det = reduced_characteristic_det(w)?;
    let quotient = det
        .divide_exact(&strand_polynomial(w.strands()))?
        .ok_or(Error::Internal("1 + t + ... + t^(n-1) does not divide det(reduced Burau - I)"))?;
    Ok(quotient.normalize_unit())
}

/// Row sums of `φ(w) - I`; all zero for every braid.
pub fn row_sums(m: &LambdaMatrix) -> Vec<LaurentPoly> {
    (0..m.rows())
        .map(|i| m.row(i).iter().fold(LaurentPoly::zero(), |acc, e| acc + e))
        .collect()
}

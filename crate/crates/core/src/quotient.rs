//! The quotient ring `Λ/(f)`.
//!
//! Alexander polynomials need not be monic (`8_15` has leading coefficient 3),
//! so `Λ/(f)` has no normal form in general. Equality is decided exactly by
//! divisibility in `Λ`; [`QuotientCtx::reduce`] only produces a smaller
//! congruent representative for display.

use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotientCtx {
    modulus: LaurentPoly,
}

impl QuotientCtx {
    /// Normalizes `f` to lowest exponent 0 and positive leading coefficient.
    pub fn new(f: &LaurentPoly) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroModulus);
        }
        if f.is_unit() {
            return Err(Error::UnitModulus);
        }
        Ok(Self { modulus: f.normalize_unit() })
    }

    pub fn modulus(&self) -> &LaurentPoly {
        &self.modulus
    }

    pub fn is_zero(&self, g: &LaurentPoly) -> bool {
        g.is_divisible_by(&self.modulus)
    }

    pub fn equal(&self, a: &LaurentPoly, b: &LaurentPoly) -> bool {
        self.is_zero(&(a - b))
    }

    /// A representative congruent to `g`.
    ///
    /// Terms below `t^0` are cancelled with multiples of `t^k f` while the
    /// lowest coefficient is divisible by `f`'s constant term; terms at or
    /// above `t^deg f` are cancelled while the top coefficient is divisible by
    /// `f`'s leading coefficient. With a monic-at-both-ends modulus the result
    /// has exponents in `0..deg f`.
    pub fn reduce(&self, g: &LaurentPoly) -> LaurentPoly {
        let f = &self.modulus;
        let deg = f.max_exp().unwrap();
        let (f_low, f_high) = (f.trailing_coeff().unwrap().clone(), f.leading_coeff().unwrap().clone());
        if deg == 0 {
            // Λ/(c) for an integer c: reduce coefficients
            let coeffs = (g.min_exp().unwrap_or(0)..=g.max_exp().unwrap_or(-1))
                .map(|e| g.coeff(e).mod_floor(&f_low))
                .collect();
            return LaurentPoly::from_dense(g.min_exp().unwrap_or(0), coeffs);
        }
        let mut r = g.clone();
        while let Some(low) = r.min_exp().filter(|&e| e < 0) {
            let (q, rem) = r.trailing_coeff().unwrap().div_rem(&f_low);
            if !rem.is_zero() {
                break;
            }
            r = &r - &f.scale(&q).shift(low);
        }
        while let Some(high) = r.max_exp().filter(|&e| e >= deg) {
            let (q, rem) = r.leading_coeff().unwrap().div_rem(&f_high);
            if !rem.is_zero() {
                break;
            }
            r = &r - &f.scale(&q).shift(high - deg);
        }
        r
    }

    pub fn reduce_vector(&self, v: &[LaurentPoly]) -> Vec<LaurentPoly> {
        v.iter().map(|x| self.reduce(x)).collect()
    }

    /// True iff all entries are congruent, i.e. the coloring is constant.
    pub fn is_trivial_vector(&self, v: &[LaurentPoly]) -> bool {
        match v.split_first() {
            None => true,
            Some((first, rest)) => rest.iter().all(|x| self.equal(first, x)),
        }
    }
}

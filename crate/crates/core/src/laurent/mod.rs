//! The Laurent polynomial ring `Z[t, t^-1]`.
//!
//! A [`LaurentPoly`] is stored densely as a lowest exponent plus a run of
//! integer coefficients. The run never starts or ends with a zero, and the
//! zero polynomial is the empty run, so structural equality is ring equality.

mod gcd;
mod text;

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    // exponent of coeffs[0]; 0 for the zero polynomial
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The indeterminate `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        Self::from_dense(exp, vec![c.into()])
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs.
    /// Repeated exponents are summed and zero terms vanish.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        let (Some(lo), Some(hi)) = (
            terms.iter().map(|(e, _)| *e).min(),
            terms.iter().map(|(e, _)| *e).max(),
        ) else {
            return Self::zero();
        };
        let mut coeffs = vec![BigInt::zero(); (hi - lo) as usize + 1];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_dense(lo, coeffs)
    }

    /// Coefficients of `t^low, t^(low+1), ...`; zeros at either end are trimmed.
    pub fn from_dense(low: i64, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        Self { low: low + lead as i64, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// `max_exp - min_exp`; undefined for zero.
    pub fn span(&self) -> Option<usize> {
        (!self.is_zero()).then(|| self.coeffs.len() - 1)
    }

    /// Coefficient of the highest power of `t`.
    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Coefficient of the lowest power of `t`.
    pub fn trailing_coeff(&self) -> Option<&BigInt> {
        self.coeffs.first()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        let idx = exp - self.low;
        if idx < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.low + i as i64, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// True iff `self = ±t^k`, the units of the ring.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].abs().is_one()
    }

    /// The gcd of the integer coefficients (nonnegative; 0 for zero).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// The associate with lowest exponent 0 and positive leading coefficient.
    pub fn normalize_unit(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let flipped = self.leading_coeff().is_some_and(Signed::is_negative);
        let mut out = Self { low: 0, coeffs: self.coeffs.clone() };
        if flipped {
            out = -out;
        }
        out
    }

    /// Returns `h` with `self = divisor * h` when such an `h` exists in the ring.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Option<Self>> {
        if divisor.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if self.is_zero() {
            return Ok(Some(Self::zero()));
        }
        Ok(gcd::div_exact_dense(&self.coeffs, &divisor.coeffs)
            .map(|q| Self::from_dense(self.low - divisor.low, q)))
    }

    /// True iff `divisor` divides `self`. A zero divisor only divides zero.
    pub fn is_divisible_by(&self, divisor: &Self) -> bool {
        if divisor.is_zero() {
            return self.is_zero();
        }
        matches!(self.divide_exact(divisor), Ok(Some(_)))
    }

    /// Normalized gcd (lowest exponent 0, positive leading coefficient).
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        match (self.is_zero(), other.is_zero()) {
            (true, true) => Err(Error::BothZero),
            (false, true) => Ok(self.normalize_unit()),
            (true, false) => Ok(other.normalize_unit()),
            (false, false) => {
                Ok(Self::from_dense(0, gcd::gcd_dense(&self.coeffs, &other.coeffs)).normalize_unit())
            }
        }
    }

    /// True iff the gcd is a unit. Zero is coprime only to units.
    pub fn is_coprime(&self, other: &Self) -> bool {
        match self.gcd(other) {
            Ok(g) => g.is_unit(),
            Err(_) => false,
        }
    }

    /// Value at `t = tval` in `Z/m`, with negative powers through the inverse of `tval`.
    pub fn eval_mod(&self, tval: i64, m: u64) -> Result<u64> {
        if m == 0 {
            return Err(Error::ZeroModulus);
        }
        let modulus = BigInt::from(m);
        let base = BigInt::from(tval).mod_floor(&modulus);
        let inv = mod_inverse(&base, &modulus).ok_or(Error::NonInvertibleT { t: tval, m })?;
        if self.is_zero() || m == 1 {
            return Ok(0);
        }
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = (acc * &base + c).mod_floor(&modulus);
        }
        let factor = if self.low >= 0 {
            base.modpow(&BigInt::from(self.low), &modulus)
        } else {
            inv.modpow(&BigInt::from(-self.low), &modulus)
        };
        let value = (acc * factor).mod_floor(&modulus);
        let (_, digits) = value.to_u64_digits();
        Ok(digits.first().copied().unwrap_or(0))
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else if m.is_one() {
        Some(BigInt::zero())
    } else {
        None
    }
}

fn add_dense(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b.clone() } else { b.clone() };
    }
    let low = a.low.min(b.low);
    let high = a.max_exp().unwrap().max(b.max_exp().unwrap());
    let mut coeffs = vec![BigInt::zero(); (high - low) as usize + 1];
    for (i, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.low - low) as usize + i] += c;
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(b.low - low) as usize + i];
        if negate_b {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    LaurentPoly::from_dense(low, coeffs)
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_dense(self, rhs, false)
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_dense(self, rhs, true)
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, coeffs)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in &mut self.coeffs {
            *c = -core::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self - rhs;
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

/// Orders by span, then by the absolute value of the leading coefficient.
/// Used to rank pivot candidates; zero sorts last.
pub(crate) fn size_key(p: &LaurentPoly) -> (usize, BigInt) {
    match p.span() {
        Some(s) => (s, p.leading_coeff().map(|c| c.abs()).unwrap_or_default()),
        None => (usize::MAX, BigInt::zero()),
    }
}

pub(crate) fn cmp_size(a: &LaurentPoly, b: &LaurentPoly) -> Ordering {
    size_key(a).cmp(&size_key(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn make_canonicalizes() {
        let trefoil = p(&[(0, 1), (1, -1), (2, 1)]);
        assert_eq!(trefoil.to_string(), "t^2 - t + 1");
        assert!(p(&[]).is_zero());
        assert!(p(&[(1, 2), (1, -2)]).is_zero());
        assert_eq!(p(&[(3, 1), (-2, 4), (3, -1)]), LaurentPoly::monomial(4, -2));
        assert_eq!(LaurentPoly::from_dense(5, vec![0.into(), 0.into()]), LaurentPoly::zero());
    }

    #[test]
    fn multiplication_of_eight_fifteen_factors() {
        let a = p(&[(2, 3), (1, -5), (0, 3)]);
        let b = p(&[(2, 1), (1, -1), (0, 1)]);
        assert_eq!(&a * &b, p(&[(4, 3), (3, -8), (2, 11), (1, -8), (0, 3)]));
        assert_eq!(&a * &LaurentPoly::one(), a);
        let tinv = LaurentPoly::monomial(1, -1);
        assert!((&tinv + &(-&tinv)).is_zero());
    }

    #[test]
    fn units() {
        assert!(LaurentPoly::monomial(-1, 3).is_unit());
        assert!(LaurentPoly::monomial(1, -7).is_unit());
        assert!(!p(&[(0, 1), (1, -1)]).is_unit());
        assert!(!LaurentPoly::constant(2).is_unit());
        assert!(!LaurentPoly::zero().is_unit());
    }

    #[test]
    fn exact_division() {
        let delta = p(&[(4, 3), (3, -8), (2, 11), (1, -8), (0, 3)]);
        let f = p(&[(2, 1), (1, -1), (0, 1)]);
        assert_eq!(delta.divide_exact(&f).unwrap(), Some(p(&[(2, 3), (1, -5), (0, 3)])));
        assert_eq!(LaurentPoly::zero().divide_exact(&f).unwrap(), Some(LaurentPoly::zero()));
        assert_eq!(p(&[(1, 1), (0, 1)]).divide_exact(&p(&[(1, 1), (0, -1)])).unwrap(), None);
        assert_eq!(f.divide_exact(&LaurentPoly::zero()), Err(Error::ZeroDivisor));
        // 2t ∤ t even though the shapes match
        assert_eq!(LaurentPoly::t().divide_exact(&LaurentPoly::monomial(2, 1)).unwrap(), None);
        // units divide everything, with negative exponents allowed
        assert_eq!(
            f.divide_exact(&LaurentPoly::monomial(-1, 2)).unwrap(),
            Some(-f.shift(-2))
        );
    }

    #[test]
    fn gcd_examples() {
        let f1 = p(&[(2, 3), (1, -5), (0, 3)]);
        let delta = p(&[(4, 3), (3, -8), (2, 11), (1, -8), (0, 3)]);
        assert_eq!(f1.gcd(&delta).unwrap(), f1);

        let a = p(&[(1, -3), (2, 6)]);
        assert_eq!(a.gcd(&LaurentPoly::zero()).unwrap(), p(&[(0, -3), (1, 6)]));

        let tm1 = p(&[(1, 1), (0, -1)]);
        let prod = &tm1 * &p(&[(2, 1), (0, 1)]);
        assert_eq!(tm1.gcd(&prod).unwrap(), tm1);
        assert_eq!(LaurentPoly::zero().gcd(&LaurentPoly::zero()), Err(Error::BothZero));
    }

    #[test]
    fn gcd_with_integer_content() {
        let a = p(&[(0, 4), (1, 4)]); // 4(1+t)
        let b = p(&[(0, 6), (2, -6)]); // 6(1-t)(1+t)
        assert_eq!(a.gcd(&b).unwrap(), p(&[(0, 2), (1, 2)]));
        assert_eq!(LaurentPoly::constant(2).gcd(&LaurentPoly::t()).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn coprimality() {
        let tm1 = p(&[(1, 1), (0, -1)]);
        assert!(!tm1.is_coprime(&(&tm1 * &p(&[(2, 1), (0, 1)]))));
        assert!(LaurentPoly::t().is_coprime(&p(&[(0, 5), (3, 1)])));
        assert!(p(&[(0, 1), (1, -1), (2, 1)]).is_coprime(&p(&[(2, 3), (1, -5), (0, 3)])));
    }

    #[test]
    fn evaluation_mod_m() {
        assert_eq!(p(&[(0, 1), (1, -1), (2, 1)]).eval_mod(2, 3).unwrap(), 0);
        assert_eq!(LaurentPoly::one().eval_mod(17, 9).unwrap(), 1);
        assert_eq!(LaurentPoly::monomial(1, -1).eval_mod(2, 5).unwrap(), 3);
        assert_eq!(LaurentPoly::t().eval_mod(3, 6), Err(Error::NonInvertibleT { t: 3, m: 6 }));
        assert_eq!(p(&[(-2, -7), (1, 3)]).eval_mod(-1, 4).unwrap(), (4 - (7 + 3) % 4) % 4);
    }

    #[test]
    fn normalize_unit_picks_canonical_associate() {
        let q = p(&[(-3, 1), (-1, -2)]);
        assert_eq!(q.normalize_unit(), p(&[(0, -1), (2, 2)]));
        assert!(LaurentPoly::zero().normalize_unit().is_zero());
    }

    fn small_poly() -> impl Strategy<Value = LaurentPoly> {
        (-3i64..3, proptest::collection::vec(-4i64..=4, 0..5))
            .prop_map(|(low, cs)| LaurentPoly::from_dense(low, cs.into_iter().map(BigInt::from).collect()))
    }

    fn unit() -> impl Strategy<Value = LaurentPoly> {
        (-3i64..=3, prop::bool::ANY)
            .prop_map(|(k, neg)| LaurentPoly::monomial(if neg { -1 } else { 1 }, k))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn division_inverts_multiplication(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).divide_exact(&b).unwrap(), Some(a));
        }

        #[test]
        fn gcd_divides_and_is_unit_invariant(a in small_poly(), b in small_poly(), u in unit(), v in unit()) {
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let g = a.gcd(&b).unwrap();
            prop_assert!(a.is_divisible_by(&g));
            prop_assert!(b.is_divisible_by(&g));
            prop_assert_eq!(b.gcd(&a).unwrap(), g.clone());
            prop_assert_eq!((&a * &u).gcd(&(&b * &v)).unwrap(), g.clone());
            prop_assert_eq!(g.min_exp(), Some(0));
            prop_assert!(!g.leading_coeff().is_some_and(Signed::is_negative));
        }

        #[test]
        fn gcd_is_greatest(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assume!(!c.is_zero() && !(a.is_zero() && b.is_zero()));
            let g = (&a * &c).gcd(&(&b * &c)).unwrap();
            prop_assert!(g.is_divisible_by(&c));
        }

        #[test]
        fn unit_iff_invertible(a in small_poly()) {
            prop_assume!(!a.is_zero());
            prop_assert_eq!(a.is_unit(), LaurentPoly::one().is_divisible_by(&a));
        }

        #[test]
        fn eval_is_ring_hom(a in small_poly(), b in small_poly(), tv in 1i64..7) {
            let m = 7u64;
            let ea = a.eval_mod(tv, m).unwrap();
            let eb = b.eval_mod(tv, m).unwrap();
            prop_assert_eq!((&a * &b).eval_mod(tv, m).unwrap(), ea * eb % m);
            prop_assert_eq!((&a + &b).eval_mod(tv, m).unwrap(), (ea + eb) % m);
        }
    }
}

//! Dense `Z[t]` routines behind division and gcd in the Laurent ring.
//!
//! Inputs are coefficient runs in ascending order. Callers strip the power of
//! `t` first, so every run here has a nonzero constant term; that is what
//! makes `Z[t]` results valid in `Z[t, t^-1]`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn degree(v: &[BigInt]) -> usize {
    v.len() - 1
}

fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn primitive_part(v: &[BigInt]) -> Vec<BigInt> {
    let c = content(v);
    if c.is_zero() || c.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &c).collect()
}

/// `g / f` in `Z[t]` if exact, failing as soon as a quotient coefficient is fractional.
pub(super) fn div_exact_dense(g: &[BigInt], f: &[BigInt]) -> Option<Vec<BigInt>> {
    if g.len() < f.len() {
        return None;
    }
    let lead = f.last().unwrap();
    let mut rem = g.to_vec();
    let mut quot = vec![BigInt::zero(); g.len() - f.len() + 1];
    while !rem.is_empty() && rem.len() >= f.len() {
        let (q, r) = rem.last().unwrap().div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        let shift = rem.len() - f.len();
        for (i, c) in f.iter().enumerate() {
            rem[shift + i] -= &q * c;
        }
        quot[shift] = q;
        trim(&mut rem);
    }
    rem.is_empty().then_some(quot)
}

/// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    let lead = b.last().unwrap();
    let mut steps = a.len() - b.len() + 1;
    while !rem.is_empty() && rem.len() >= b.len() {
        let top = rem.last().unwrap().clone();
        let shift = rem.len() - b.len();
        for c in rem.iter_mut() {
            *c *= lead;
        }
        for (i, c) in b.iter().enumerate() {
            rem[shift + i] -= &top * c;
        }
        trim(&mut rem);
        steps -= 1;
    }
    let scale = num_traits::pow(lead.clone(), steps);
    if !scale.is_one() {
        for c in rem.iter_mut() {
            *c *= &scale;
        }
    }
    rem
}

/// gcd in `Z[t]` by the subresultant remainder sequence on primitive parts,
/// with the integer content gcd restored afterwards.
pub(super) fn gcd_dense(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let cont = content(a).gcd(&content(b));
    let (mut u, mut v) = (primitive_part(a), primitive_part(b));
    if u.len() < v.len() {
        core::mem::swap(&mut u, &mut v);
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        if degree(&v) == 0 {
            return vec![cont];
        }
        let delta = degree(&u) - degree(&v);
        let r = pseudo_rem(&u, &v);
        if r.is_empty() {
            break;
        }
        if degree(&r) == 0 {
            return vec![cont];
        }
        let divisor = &g * num_traits::pow(h.clone(), delta);
        u = v;
        v = r.into_iter().map(|c| c / &divisor).collect();
        g = u.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            let num = num_traits::pow(g.clone(), delta);
            let den = num_traits::pow(h, delta - 1);
            num / den
        };
    }
    let mut out: Vec<BigInt> = primitive_part(&v).into_iter().map(|c| c * &cont).collect();
    if out.last().is_some_and(Signed::is_negative) {
        for c in out.iter_mut() {
            *c = -core::mem::take(c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn pseudo_remainder_matches_hand_computation() {
        // 9(t^2 + 1) = (3t - 1)(3t + 1) + 10
        assert_eq!(pseudo_rem(&z(&[1, 0, 1]), &z(&[-1, 3])), z(&[10]));
    }

    #[test]
    fn subresultant_sequence_on_classic_pair() {
        // Knuth's example: gcd is 1
        let a = z(&[-5, 2, 8, -3, -3, 0, 1, 0, 1]);
        let b = z(&[21, -9, -4, 0, 5, 0, 3]);
        assert_eq!(gcd_dense(&a, &b), z(&[1]));
    }

    #[test]
    fn gcd_keeps_common_factor() {
        // (t^2 - t + 1)(2t + 3) and (t^2 - t + 1)(t - 5)
        let a = z(&[3, -1, 1, 2]);
        let b = z(&[-5, 6, -6, 1]);
        assert_eq!(gcd_dense(&a, &b), z(&[1, -1, 1]));
    }
}

//! Finite Alexander quandles `Z_m` with `x ∗ y = a x + (1 - a) y`.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Range;

use num_integer::Integer;

use crate::braid::BraidWord;
use crate::burau::burau_unreduced;
use crate::error::{Error, Result};

/// Enumeration refuses to visit more than this many tuples by default.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FiniteQuandle {
    m: u64,
    a: u64,
    a_inv: u64,
}

impl FiniteQuandle {
    /// `Z_m` with `t` acting as multiplication by `a`, which must be a unit mod `m`.
    pub fn new(m: u64, a: i64) -> Result<Self> {
        if m < 2 {
            return Err(Error::ZeroModulus);
        }
        if m > u32::MAX as u64 {
            return Err(Error::Internal("modulus must fit in 32 bits"));
        }
        let mi = m as i64;
        let a_red = a.mod_floor(&mi);
        let e = a_red.extended_gcd(&mi);
        if e.gcd != 1 {
            return Err(Error::NonInvertibleT { t: a, m });
        }
        Ok(Self { m, a: a_red as u64, a_inv: e.x.mod_floor(&mi) as u64 })
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn t(&self) -> u64 {
        self.a
    }

    /// `x ∗ y`.
    pub fn op(&self, x: u64, y: u64) -> u64 {
        let m = self.m;
        (self.a * (x % m) + (1 + m - self.a) % m * (y % m)) % m
    }

    fn step(&self, letter: i32, v: &mut [u64]) {
        let m = self.m;
        let i = letter.unsigned_abs() as usize - 1;
        let (x, y) = (v[i], v[i + 1]);
        if letter > 0 {
            v[i] = y;
            v[i + 1] = self.op(x, y);
        } else {
            // t^-1 y + (1 - t^-1) x
            v[i] = (self.a_inv * y + (1 + m - self.a_inv) % m * x) % m;
            v[i + 1] = x;
        }
    }
}

/// Number of tuples `(x_1, ..., x_n)` with first entry in `first` fixed by the
/// braid action. Summing over a partition of `0..m` gives the full count.
pub fn count_fixed_tuples(w: &BraidWord, q: &FiniteQuandle, first: Range<u64>) -> u64 {
    let n = w.strands();
    let m = q.m;
    let first = first.start.min(m)..first.end.min(m);
    if first.is_empty() {
        return 0;
    }
    let letters: Vec<i32> = w.letters().iter().rev().copied().collect();
    let mut top = vec![0u64; n];
    top[0] = first.start;
    let mut work = vec![0u64; n];
    let mut count = 0;
    loop {
        work.copy_from_slice(&top);
        for &k in &letters {
            q.step(k, &mut work);
        }
        if work == top {
            count += 1;
        }
        // odometer, last entry fastest
        let mut pos = n;
        loop {
            if pos == 0 {
                return count;
            }
            pos -= 1;
            top[pos] += 1;
            let limit = if pos == 0 { first.end } else { m };
            if top[pos] < limit {
                break;
            }
            if pos == 0 {
                return count;
            }
            top[pos] = 0;
        }
    }
}

/// Brute-force count of colorings of the closure of `w` by `q`.
pub fn count_colorings_finite(w: &BraidWord, q: &FiniteQuandle) -> Result<u64> {
    count_colorings_with_budget(w, q, DEFAULT_BUDGET)
}

pub fn count_colorings_with_budget(w: &BraidWord, q: &FiniteQuandle, budget: u64) -> Result<u64> {
    let needed = (q.m as u128).checked_pow(w.strands() as u32).unwrap_or(u128::MAX);
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(count_fixed_tuples(w, q, 0..q.m))
}

/// Size of the kernel of `φ(w) - I` evaluated at `t = a` over `Z_m`,
/// read off a diagonal form `Π gcd(d_i, m)`.
pub fn kernel_count_mod(w: &BraidWord, q: &FiniteQuandle) -> Result<u64> {
    let a = burau_unreduced(w).minus_identity()?;
    let m = q.m as i128;
    let mut rows = Vec::with_capacity(a.rows());
    for i in 0..a.rows() {
        let row = a
            .row(i)
            .iter()
            .map(|e| e.eval_mod(q.a as i64, q.m).map(|v| v as i128))
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    let count = kernel_size_mod(rows, a.cols(), m);
    u64::try_from(count).map_err(|_| Error::Internal("kernel count overflows u64"))
}

/// `(g, x, y)` with `x a + y b = g = gcd(a, b)`, and `(a, 1, 0)` when `a | b`.
fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b % a == 0 {
        return (a, 1, 0);
    }
    let e = a.extended_gcd(&b);
    (e.gcd, e.x, e.y)
}

fn kernel_size_mod(mut a: Vec<Vec<i128>>, cols: usize, m: i128) -> u128 {
    let rows = a.len();
    let mut diag = Vec::new();
    for k in 0..rows.min(cols) {
        let Some((pi, pj)) = (k..rows).flat_map(|i| (k..cols).map(move |j| (i, j))).find(|&(i, j)| a[i][j] != 0)
        else {
            break;
        };
        a.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        loop {
            for i in k + 1..rows {
                if a[i][k] == 0 {
                    continue;
                }
                let (g, x, y) = ext_gcd(a[k][k], a[i][k]);
                let (p, q) = (a[k][k] / g, a[i][k] / g);
                for c in k..cols {
                    let (u, v) = (a[k][c], a[i][c]);
                    a[k][c] = (x * u + y * v).rem_euclid(m);
                    a[i][c] = (p * v - q * u).rem_euclid(m);
                }
            }
            for j in k + 1..cols {
                if a[k][j] == 0 {
                    continue;
                }
                let (g, x, y) = ext_gcd(a[k][k], a[k][j]);
                let (p, q) = (a[k][k] / g, a[k][j] / g);
                for row in a.iter_mut() {
                    let (u, v) = (row[k], row[j]);
                    row[k] = (x * u + y * v).rem_euclid(m);
                    row[j] = (p * v - q * u).rem_euclid(m);
                }
            }
            if (k + 1..rows).all(|i| a[i][k] == 0) {
                break;
            }
        }
        diag.push(a[k][k]);
    }
    let free = (cols - diag.len()) as u32;
    diag.iter().fold((m as u128).pow(free), |acc, &d| acc * d.gcd(&m) as u128)
}

//! Test-side oracles. Nothing here calls the library's kernels: sequences
//! come from a plain table walk, binomials from Pascal's rule and sums from
//! `Ratio<BigInt>` directly.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::Ratio;

pub type Q = Ratio<BigInt>;

/// `x_lo..=x_hi` of the recurrence with `x_0 = a`, `x_1 = b`.
pub struct Table {
    lo: i64,
    values: Vec<BigInt>,
}

impl Table {
    pub fn new(a: i64, b: i64, lo: i64, hi: i64) -> Self {
        assert!(lo <= 0 && hi >= 1);
        let mut fwd = vec![BigInt::from(a), BigInt::from(b)];
        for i in 2..=hi as usize {
            let next = &fwd[i - 1] + &fwd[i - 2];
            fwd.push(next);
        }
        // x_{-1}, x_{-2}, ... from x_{k-1} = x_{k+1} - x_k
        let mut back: Vec<BigInt> = Vec::new();
        let (mut x1, mut x0) = (BigInt::from(b), BigInt::from(a));
        for _ in 0..(-lo) {
            let prev = &x1 - &x0;
            back.push(prev.clone());
            x1 = x0;
            x0 = prev;
        }
        back.reverse();
        back.extend(fwd);
        Self { lo, values: back }
    }

    pub fn fib(lo: i64, hi: i64) -> Self {
        Self::new(0, 1, lo, hi)
    }

    pub fn lucas(lo: i64, hi: i64) -> Self {
        Self::new(2, 1, lo, hi)
    }

    pub fn at(&self, n: i64) -> &BigInt {
        &self.values[(n - self.lo) as usize]
    }
}

pub fn pascal(rows: usize) -> Vec<Vec<BigInt>> {
    let mut out: Vec<Vec<BigInt>> = vec![vec![BigInt::from(1)]];
    for n in 1..=rows {
        let prev = &out[n - 1];
        let mut row = vec![BigInt::from(1)];
        for k in 1..n {
            row.push(&prev[k - 1] + &prev[k]);
        }
        row.push(BigInt::from(1));
        out.push(row);
    }
    out
}

pub fn q(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Q {
    Ratio::new(num.into(), den.into())
}

/// `(−1)^e` for any signed `e`.
pub fn sign(e: i64) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn pow3(e: u32) -> BigInt {
    BigInt::from(3).pow(e)
}

pub fn to_string(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

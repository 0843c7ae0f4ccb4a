mod common;

use common::Table;
use fibsum::sequences::{binomial, fib, fib_lucas, fib_oracle, lucas, lucas_oracle};
use num_bigint::BigInt;

#[test]
fn kernel_matches_table_walk() {
    let (f, l) = (Table::fib(-2000, 2000), Table::lucas(-2000, 2000));
    for n in -2000..=2000 {
        assert_eq!(&fib(n), f.at(n), "F_{n}");
        assert_eq!(&lucas(n), l.at(n), "L_{n}");
    }
}

#[test]
fn kernel_matches_library_oracle() {
    for n in (-2000..=2000).step_by(37) {
        assert_eq!(fib(n), fib_oracle(n).unwrap());
        assert_eq!(lucas(n), lucas_oracle(n).unwrap());
    }
}

#[test]
fn sign_rules_and_recurrence() {
    for n in 0..=2000i64 {
        let s = if n % 2 == 0 { 1 } else { -1 };
        assert_eq!(fib(-n), -s * fib(n));
        assert_eq!(lucas(-n), s * lucas(n));
    }
    for n in -500..=500 {
        assert_eq!(fib(n + 2), fib(n + 1) + fib(n));
        assert_eq!(lucas(n + 2), lucas(n + 1) + lucas(n));
        assert_eq!(lucas(n), fib(n - 1) + fib(n + 1));
        assert_eq!(fib_lucas(n), (fib(n), lucas(n)));
    }
}

#[test]
fn large_indices() {
    // F_{2m} = F_m L_m
    for m in [50_000i64, 1 << 20, -(1 << 19) - 1] {
        assert_eq!(fib(2 * m), fib(m) * lucas(m));
    }
    // L_n^2 - 5 F_n^2 = 4(-1)^n
    let n = (1 << 22) + 1;
    let (f, l) = fib_lucas(n);
    assert_eq!(&l * &l - BigInt::from(5) * &f * &f, BigInt::from(-4));
    assert_eq!(fib(100_000), fib_oracle(100_000).unwrap());
}

#[test]
fn binomial_matches_pascal() {
    let rows = common::pascal(80);
    for (n, row) in rows.iter().enumerate() {
        for (k, c) in row.iter().enumerate() {
            assert_eq!(&binomial(n as u64, k as i64), c);
        }
        assert_eq!(binomial(n as u64, -1), BigInt::from(0));
        assert_eq!(binomial(n as u64, n as i64 + 1), BigInt::from(0));
    }
}

//! F_n and L_n for any signed index, checked against the slow oracle.

use fibsum::sequences::{binomial, fib, fib_lucas, fib_oracle, lucas, lucas_oracle, SeqIndex};

fn main() {
    for n in -8..=8 {
        println!("{n:>3}  F={:>4}  L={:>4}", fib(n), lucas(n));
    }

    let (f, l) = fib_lucas(1000);
    assert_eq!(f, fib_oracle(1000).unwrap());
    assert_eq!(l, lucas_oracle(1000).unwrap());
    println!("F_1000 has {} digits", f.to_string().len());
    println!("L_-1000 has {} digits", lucas(-1000).to_string().len());

    println!("C(40, 20) = {}", binomial(40, 20));
    println!("index 2^31 ok: {}", SeqIndex::new(1 << 31).is_ok());
    println!("index 2^31+1: {}", SeqIndex::new((1 << 31) + 1).unwrap_err());
}

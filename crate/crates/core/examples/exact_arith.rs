//! Canonical rationals and arithmetic in Q(√5).

use fibsum::exact::{BigRational, QSqrt5, RationalSum};

fn main() {
    let half = BigRational::new(1, 2).unwrap();
    let third = BigRational::new(1, 3).unwrap();
    println!("1/2 + 1/3 = {}", &half + &third);
    println!("6/-4 reduces to {}", BigRational::new(6, -4).unwrap());
    println!("(2/3)^-3 = {}", BigRational::new(2, 3).unwrap().pow(-3).unwrap());
    println!("1/0 -> {:?}", BigRational::new(1, 0));

    // one reduction at the end instead of one per term
    let mut sum = RationalSum::new();
    for k in 1..=10 {
        sum.add_frac(1.into(), &(k * (k + 1)).into());
    }
    println!("sum 1/(k(k+1)), k=1..10 = {}", sum.finish());

    let (a, b) = (QSqrt5::alpha(), QSqrt5::beta());
    println!("alpha = {a}");
    println!("alpha + beta = {}", &a + &b);
    println!("alpha * beta = {}", &a * &b);
    println!("alpha^10 = {}", a.pow(10).unwrap());
    println!("norm(alpha) = {}", a.norm());
    println!("alpha^-1 = {}", a.inverse().unwrap());
}

//! The Dattoli polynomial identities as exact polynomial equalities.

use fibsum::poly::{check_dattoli, dattoli_sides, Dattoli, Poly};

fn main() {
    let p = Poly::from_integers(&[1, 1]).pow(4);
    println!("(1+x)^4 = {p}");

    for which in Dattoli::ALL {
        let (lhs, rhs) = dattoli_sides(which, 3).unwrap();
        println!("{which} n=3: {lhs}  ==  {rhs}");
    }

    for which in Dattoli::ALL {
        let ok = (0..=64).all(|n| check_dattoli(which, n).unwrap());
        println!("{which} for n <= 64: {}", if ok { "pass" } else { "FAIL" });
    }
    println!("n=257: {}", check_dattoli(Dattoli::Dat1, 257).unwrap_err());
}

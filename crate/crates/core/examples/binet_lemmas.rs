//! Binet's formula and the two power lemmas, checked exactly in Q(√5).

use fibsum::sequences::{check_binet, check_lemma1, check_lemma2};

fn main() {
    let binet = (-500..=500).filter(|&n| check_binet(n)).count();
    println!("Binet: {binet}/1001 indices");

    let lemma1 = (-100..=100).filter(|&s| check_lemma1(s)).count();
    println!("alpha^s, beta^s forms: {lemma1}/201");

    let lemma2 = (-50..=50).flat_map(|r| (-50..=50).map(move |s| (r, s))).filter(|&(r, s)| check_lemma2(r, s)).count();
    println!("four F_r/F_s forms: {lemma2}/10201 pairs");
}

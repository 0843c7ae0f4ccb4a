//! Walk the identity catalog and evaluate a few sides by hand.

use fibsum::catalog::{enumerate_catalog, eval_side, find, ParamTuple, Side};

fn main() {
    for d in enumerate_catalog() {
        let chain = if d.is_three_way() { "lhs = mid = rhs" } else { "lhs = rhs" };
        println!("{:<8} {:<8} uses {:<4} {:<16} {:<15} {}", d.id, d.family, d.params.used_names(), d.params.flags(), chain, d.anchor);
    }

    let thm1 = find("THM1-F").unwrap();
    let p = ParamTuple::new(3, 2, -1, 4);
    println!("THM1-F at {p}: lhs {} rhs {}", eval_side(thm1, Side::Lhs, &p).unwrap(), eval_side(thm1, Side::Rhs, &p).unwrap());

    let rel2p = find("REL2P-F").unwrap();
    for n in 0..4 {
        let p = ParamTuple::n(n);
        println!(
            "REL2P-F n={n}: {} = {} = {}",
            eval_side(rel2p, Side::Lhs, &p).unwrap(),
            eval_side(rel2p, Side::Mid, &p).unwrap(),
            eval_side(rel2p, Side::Rhs, &p).unwrap()
        );
    }

    let thm2 = find("THM2-F").unwrap();
    println!("{}", eval_side(thm2, Side::Lhs, &ParamTuple::new(2, 0, 3, 0)).unwrap_err());
}

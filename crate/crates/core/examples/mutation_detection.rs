//! Single-token corruptions of real entries must be caught.

use fibsum::catalog::mutants;
use fibsum::verifier::{verify_grid, GridSpec};

fn main() {
    let grid = GridSpec::default();
    for m in mutants() {
        let r = verify_grid(&m.descriptor, &grid);
        match r.minimal_counterexample() {
            Some(f) => println!(
                "{:<20} {:<15} {} failures, first at {}: lhs {} rhs {}",
                m.descriptor.id,
                m.kind,
                r.failures.len(),
                f.tuple,
                f.lhs,
                f.rhs
            ),
            None => println!("{:<20} NOT DETECTED ({})", m.descriptor.id, m.change),
        }
    }
}

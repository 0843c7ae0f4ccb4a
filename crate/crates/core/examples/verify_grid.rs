//! Exhaustive checks on a grid, one identity at a time and then everything.
//!
//! `cargo run --release --example verify_grid` for the full default grid.

use fibsum::catalog::{enumerate_catalog, find};
use fibsum::verifier::{verify_all, verify_grid, GridSpec, IntRange};

fn main() {
    let grid = GridSpec::default();
    for id in ["COR1-F", "THM2-L", "REL2-F"] {
        let r = verify_grid(find(id).unwrap(), &grid);
        println!("{id}: tested {} skipped {} failures {} in {} ms", r.tuples_tested, r.tuples_skipped, r.failures.len(), r.wall_time.as_millis());
    }

    // small grid so the whole run is quick
    let small = GridSpec { n_range: IntRange::new(0, 6), r_range: IntRange::new(-3, 3), s_range: IntRange::new(-3, 3), t_range: IntRange::new(-3, 3) };
    let reports = verify_all(enumerate_catalog(), &small, None).unwrap();
    let failing: Vec<_> = reports.iter().filter(|r| !r.passed()).map(|r| r.identity_id.as_str()).collect();
    println!("{} reports on n in {}, failing: {:?}", reports.len(), small.n_range, failing);
}

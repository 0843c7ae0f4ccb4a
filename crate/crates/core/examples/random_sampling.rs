//! Seeded random verification over a magnitude box.

use fibsum::catalog::find;
use fibsum::verifier::{verify_random, RandomSpec, SplitMix64};

fn main() {
    let mut g = SplitMix64::new(1234567);
    println!("first SplitMix64 outputs for 1234567: {} {}", g.next_u64(), g.next_u64());

    let spec = RandomSpec::default();
    for id in ["THM1-F", "THM6-L", "REL1-L"] {
        let r = verify_random(find(id).unwrap(), &spec).unwrap();
        println!("{id}: seed {} samples {} rejected {} failures {}", spec.seed, r.tuples_tested, r.tuples_skipped, r.failures.len());
    }

    let a = verify_random(find("THM3-F").unwrap(), &spec).unwrap();
    let b = verify_random(find("THM3-F").unwrap(), &spec).unwrap();
    println!("same seed, same report: {}", serde_json::to_string(&a).unwrap() == serde_json::to_string(&b).unwrap());

    let tight = RandomSpec { seed: 9, samples: 30, magnitude: 1 };
    let r = verify_random(find("REL1-F").unwrap(), &tight).unwrap();
    println!("REL1-F with M=1: {} drawn, {} rejected (r = 0 or r + s = 0)", r.tuples_tested, r.tuples_skipped);
}

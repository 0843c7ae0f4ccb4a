//! The three report encodings, and the CLI driven in-process.

use fibsum::catalog::{enumerate_catalog, find, mutants};
use fibsum::cli::report::{from_json, from_tsv, to_human, to_json, to_tsv, ReportSet};
use fibsum::cli::run;
use fibsum::verifier::{verify_grid, GridSpec, IntRange};

fn main() {
    let grid = GridSpec { n_range: IntRange::new(0, 3), t_range: IntRange::new(0, 1), ..GridSpec::default() };
    let bad = mutants().into_iter().find(|m| m.original == "COR1-F").unwrap();
    let set = ReportSet::new(vec![verify_grid(find("COR1-F").unwrap(), &grid), verify_grid(&bad.descriptor, &grid)]);

    let json = to_json(&set);
    let tsv = to_tsv(&set);
    print!("{json}{tsv}{}", to_human(&set));
    assert_eq!(to_json(&from_json(&json).unwrap()), json);
    assert_eq!(from_tsv(&tsv).unwrap(), from_json(&json).unwrap());

    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(["fibsum", "eval", "--seq", "lucas", "--index", "-7"], enumerate_catalog(), &mut out, &mut err);
    println!("eval exit {code}: {}", String::from_utf8_lossy(&out).trim());
    let code = run(["fibsum", "verify", "--id", "NOPE"], enumerate_catalog(), &mut out, &mut err);
    println!("unknown id exit {code}: {}", String::from_utf8_lossy(&err).trim());
}

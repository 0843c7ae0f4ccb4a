//! Checks that are not catalog entries: the Binet form and the two lemmas in
//! Q(√5), the Dattoli polynomial identities, the s = 2 reduction of THM2 to
//! COR8, and the F + L specialization.
//!
//! Each sweep is reported like a catalog entry. Predicate sweeps have no
//! sides to show, so a failing tuple is recorded as `lhs = 0/1`, `rhs = 1/1`.

use std::time::Instant;

use rayon::prelude::*;

use super::{Failure, GridSpec, IntRange, VerificationReport};
use crate::catalog::{find, ParamTuple};
use crate::exact::BigRational;
use crate::poly::{check_dattoli, Dattoli};
use crate::sequences::{check_binet, check_lemma1, check_lemma2};

pub const AUX_SWEEP_COUNT: usize = 10;

pub const BINET_RANGE: IntRange = IntRange::new(-500, 500);
pub const LEMMA1_RANGE: IntRange = IntRange::new(-100, 100);
pub const LEMMA2_RANGE: IntRange = IntRange::new(-50, 50);
pub const DATTOLI_RANGE: IntRange = IntRange::new(0, 64);

fn grid(n: IntRange, r: IntRange, s: IntRange, t: IntRange) -> GridSpec {
    GridSpec { n_range: n, r_range: r, s_range: s, t_range: t }
}

fn report(id: &str, grid: GridSpec, tested: u64, mut failures: Vec<Failure>, start: Instant) -> VerificationReport {
    failures.sort_by(|a, b| a.tuple.cmp(&b.tuple));
    VerificationReport {
        identity_id: id.to_owned(),
        tuples_tested: tested,
        tuples_skipped: 0,
        failures,
        wall_time: start.elapsed(),
        grid,
        seed: None,
    }
}

fn predicate_sweep(id: &str, grid: GridSpec, tuples: Vec<ParamTuple>, check: impl Fn(&ParamTuple) -> bool + Sync) -> VerificationReport {
    let start = Instant::now();
    let failures = tuples
        .par_iter()
        .filter(|p| !check(p))
        .map(|p| Failure { tuple: *p, lhs: BigRational::zero(), mid: None, rhs: BigRational::one() })
        .collect();
    report(id, grid, tuples.len() as u64, failures, start)
}

fn binet_sweep() -> VerificationReport {
    let z = IntRange::point(0);
    let tuples = BINET_RANGE.iter().map(|t| ParamTuple::new(0, 0, 0, t)).collect();
    predicate_sweep("AUX-BINET", grid(z, z, z, BINET_RANGE), tuples, |p| check_binet(p.t))
}

fn lemma1_sweep() -> VerificationReport {
    let z = IntRange::point(0);
    let tuples = LEMMA1_RANGE.iter().map(|s| ParamTuple::new(0, 0, s, 0)).collect();
    predicate_sweep("AUX-LEMMA1", grid(z, z, LEMMA1_RANGE, z), tuples, |p| check_lemma1(p.s))
}

fn lemma2_sweep() -> VerificationReport {
    let z = IntRange::point(0);
    let tuples = LEMMA2_RANGE
        .iter()
        .flat_map(|r| LEMMA2_RANGE.iter().map(move |s| ParamTuple::new(0, r, s, 0)))
        .collect();
    predicate_sweep("AUX-LEMMA2", grid(z, LEMMA2_RANGE, LEMMA2_RANGE, z), tuples, |p| check_lemma2(p.r, p.s))
}

fn dattoli_sweep(which: Dattoli) -> VerificationReport {
    let z = IntRange::point(0);
    let id = format!("AUX-{}", which.name().to_ascii_uppercase());
    let tuples = DATTOLI_RANGE.iter().map(|n| ParamTuple::n(n as u32)).collect();
    predicate_sweep(&id, grid(DATTOLI_RANGE, z, z, z), tuples, move |p| {
        check_dattoli(which, p.n).expect("n within bound")
    })
}

/// THM2 at `s = 2` against COR8, side by side. The first mismatching side
/// pair is recorded.
fn remark_sweep(id: &str, thm2: &str, cor8: &str, g: &GridSpec) -> VerificationReport {
    let start = Instant::now();
    let (thm2, cor8) = (find(thm2).expect("catalog id"), find(cor8).expect("catalog id"));
    let z = IntRange::point(0);
    let g = grid(g.n_range, z, IntRange::point(2), g.t_range);
    let tuples = g.tuples(&thm2.params);
    let failures = tuples
        .par_iter()
        .filter_map(|p| {
            let q = ParamTuple::new(p.n, 0, 0, p.t);
            [(thm2.lhs, cor8.lhs), (thm2.rhs, cor8.rhs)].into_iter().find_map(|(a, b)| {
                let (lhs, rhs) = (a(p), b(&q));
                (lhs != rhs).then(|| Failure { tuple: *p, lhs, mid: None, rhs })
            })
        })
        .collect();
    report(id, g, tuples.len() as u64, failures, start)
}

/// SEC4-FL against SEC4-F + SEC4-L: left sides, then the middle of the chain
/// against the sum of the right sides.
fn sec4_sum_sweep(g: &GridSpec) -> VerificationReport {
    let start = Instant::now();
    let fl = find("SEC4-FL").expect("catalog id");
    let f = find("SEC4-F").expect("catalog id");
    let l = find("SEC4-L").expect("catalog id");
    let fl_mid = fl.mid.expect("chain entry");
    let z = IntRange::point(0);
    let g = grid(g.n_range, z, z, z);
    let tuples = g.tuples(&fl.params);
    let failures = tuples
        .par_iter()
        .filter_map(|p| {
            [((fl.lhs)(p), (f.lhs)(p) + (l.lhs)(p)), (fl_mid(p), (f.rhs)(p) + (l.rhs)(p))]
                .into_iter()
                .find(|(a, b)| a != b)
                .map(|(lhs, rhs)| Failure { tuple: *p, lhs, mid: None, rhs })
        })
        .collect();
    report("AUX-SEC4-SUM", g, tuples.len() as u64, failures, start)
}

/// All auxiliary sweeps in a fixed order. Only the remark and F + L sweeps
/// follow `g`; the others use fixed ranges.
pub fn auxiliary_sweeps(g: &GridSpec) -> Vec<VerificationReport> {
    let mut out = vec![binet_sweep(), lemma1_sweep(), lemma2_sweep()];
    out.extend(Dattoli::ALL.into_iter().map(dattoli_sweep));
    out.push(remark_sweep("AUX-REMARK-F", "THM2-F", "COR8-F", g));
    out.push(remark_sweep("AUX-REMARK-L", "THM2-L", "COR8-L", g));
    out.push(sec4_sum_sweep(g));
    debug_assert_eq!(out.len(), AUX_SWEEP_COUNT);
    out
}

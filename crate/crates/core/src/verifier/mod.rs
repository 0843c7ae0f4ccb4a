//! Exhaustive grid and seeded random verification of catalog identities.
//!
//! Work fans out over the current rayon pool, one task per parameter tuple.
//! Results are collected in enumeration order, so reports do not depend on
//! the number of workers. Wrap calls in [`with_jobs`] to pick a pool size.

mod prng;
mod sweeps;

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{IdentityDescriptor, ParamSpace, ParamTuple};
use crate::exact::BigRational;

pub use prng::SplitMix64;
pub use sweeps::{auxiliary_sweeps, AUX_SWEEP_COUNT};

/// Largest `n` a grid or random box may reach.
pub const MAX_N: i64 = 10_000;
/// Largest `|r|`, `|s|`, `|t|` a grid or random box may reach.
pub const MAX_PARAM: i64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("{name} range {lo}..{hi} is empty")]
    EmptyRange { name: char, lo: i64, hi: i64 },
    #[error("n range must start at 0 or above, got {0}")]
    NegativeN(i64),
    #[error("{name} range {lo}..{hi} exceeds the supported bound")]
    RangeTooLarge { name: char, lo: i64, hi: i64 },
    #[error("random spec needs samples > 0 and magnitude >= 1")]
    BadRandomSpec,
    #[error("{0}: no admissible tuple exists in the sampling box")]
    NoAdmissibleTuple(String),
    #[error("{0}: gave up after too many inadmissible draws")]
    TooManyRejections(String),
}

/// Inclusive integer interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntRange {
    pub lo: i64,
    pub hi: i64,
}

impl IntRange {
    pub const fn new(lo: i64, hi: i64) -> Self {
        Self { lo, hi }
    }

    pub const fn point(v: i64) -> Self {
        Self::new(v, v)
    }

    pub fn len(&self) -> u64 {
        if self.hi < self.lo {
            0
        } else {
            self.hi.abs_diff(self.lo) + 1
        }
    }

    pub fn is_empty(&self) -> bool {
        self.hi < self.lo
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

/// Box of `(n, r, s, t)` values to enumerate. Slots an identity does not use
/// are ignored and pinned to 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GridSpec {
    pub n_range: IntRange,
    pub r_range: IntRange,
    pub s_range: IntRange,
    pub t_range: IntRange,
}

impl Default for GridSpec {
    /// `n ∈ [0, 24]`, `r, s, t ∈ [−6, 6]`.
    fn default() -> Self {
        Self {
            n_range: IntRange::new(0, 24),
            r_range: IntRange::new(-6, 6),
            s_range: IntRange::new(-6, 6),
            t_range: IntRange::new(-6, 6),
        }
    }
}

impl GridSpec {
    pub fn validate(&self) -> Result<(), VerifyError> {
        for (name, range) in self.named() {
            if range.is_empty() {
                return Err(VerifyError::EmptyRange { name, lo: range.lo, hi: range.hi });
            }
            let bound = if name == 'n' { MAX_N } else { MAX_PARAM };
            if range.lo < -bound || range.hi > bound {
                return Err(VerifyError::RangeTooLarge { name, lo: range.lo, hi: range.hi });
            }
        }
        if self.n_range.lo < 0 {
            return Err(VerifyError::NegativeN(self.n_range.lo));
        }
        Ok(())
    }

    fn named(&self) -> [(char, IntRange); 4] {
        [('n', self.n_range), ('r', self.r_range), ('s', self.s_range), ('t', self.t_range)]
    }

    /// Ranges an identity actually iterates over; unused slots collapse to 0.
    fn projected(&self, space: &ParamSpace) -> [IntRange; 4] {
        let pick = |used: bool, range: IntRange| if used { range } else { IntRange::point(0) };
        [
            self.n_range,
            pick(space.uses_r, self.r_range),
            pick(space.uses_s, self.s_range),
            pick(space.uses_t, self.t_range),
        ]
    }

    /// Number of tuples in the grid after projecting onto the used slots.
    pub fn cardinality(&self, space: &ParamSpace) -> u64 {
        self.projected(space).iter().map(IntRange::len).product()
    }

    /// All projected tuples in lexicographic `(n, r, s, t)` order.
    pub fn tuples(&self, space: &ParamSpace) -> Vec<ParamTuple> {
        let [ns, rs, ss, ts] = self.projected(space);
        let mut out = Vec::with_capacity(self.cardinality(space) as usize);
        for n in ns.iter() {
            let n = u32::try_from(n).expect("validated n range");
            for r in rs.iter() {
                for s in ss.iter() {
                    for t in ts.iter() {
                        out.push(ParamTuple::new(n, r, s, t));
                    }
                }
            }
        }
        out
    }
}

/// Seeded sampling from the box `n ∈ [0, M]`, `r, s, t ∈ [−M, M]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RandomSpec {
    pub seed: u64,
    pub samples: u64,
    pub magnitude: i64,
}

impl Default for RandomSpec {
    fn default() -> Self {
        Self { seed: 1, samples: 500, magnitude: 40 }
    }
}

impl RandomSpec {
    pub fn validate(&self) -> Result<(), VerifyError> {
        if self.samples == 0 || self.magnitude < 1 {
            return Err(VerifyError::BadRandomSpec);
        }
        self.sampling_box().validate()
    }

    /// The sampling box, expressed as a grid.
    pub fn sampling_box(&self) -> GridSpec {
        let m = self.magnitude;
        GridSpec {
            n_range: IntRange::new(0, m),
            r_range: IntRange::new(-m, m),
            s_range: IntRange::new(-m, m),
            t_range: IntRange::new(-m, m),
        }
    }
}

/// One tuple on which the sides disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub tuple: ParamTuple,
    pub lhs: BigRational,
    pub mid: Option<BigRational>,
    pub rhs: BigRational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity_id: String,
    pub tuples_tested: u64,
    /// Tuples rejected by the identity's constraints.
    pub tuples_skipped: u64,
    /// Sorted by `(n, r, s, t)`; the first entry is the minimal counterexample.
    pub failures: Vec<Failure>,
    /// Not serialized: timings would break byte-identical reports.
    #[serde(skip)]
    pub wall_time: Duration,
    pub grid: GridSpec,
    pub seed: Option<u64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn minimal_counterexample(&self) -> Option<&Failure> {
        self.failures.first()
    }
}

/// Evaluates every side of `desc` at `p`; `Some` when they disagree.
pub fn check_tuple(desc: &IdentityDescriptor, p: &ParamTuple) -> Option<Failure> {
    let lhs = (desc.lhs)(p);
    let rhs = (desc.rhs)(p);
    let mid = desc.mid.map(|mid| mid(p));
    let agree = lhs == rhs && mid.as_ref().map_or(true, |m| *m == lhs);
    (!agree).then(|| Failure { tuple: *p, lhs, mid, rhs })
}

fn evaluate_all(desc: &IdentityDescriptor, tuples: &[ParamTuple]) -> Vec<Failure> {
    let mut failures: Vec<Failure> = tuples.par_iter().filter_map(|p| check_tuple(desc, p)).collect();
    failures.sort_by(|a, b| a.tuple.cmp(&b.tuple));
    failures.dedup_by(|a, b| a.tuple == b.tuple);
    failures
}

/// Checks `desc` on every admissible tuple of `grid`.
///
/// Panics if `grid` is invalid; call [`GridSpec::validate`] on untrusted
/// input.
pub fn verify_grid(desc: &IdentityDescriptor, grid: &GridSpec) -> VerificationReport {
    grid.validate().expect("valid grid");
    let start = Instant::now();
    let all = grid.tuples(&desc.params);
    let total = all.len() as u64;
    let admissible: Vec<ParamTuple> = all.into_iter().filter(|p| desc.params.admits(p)).collect();
    let failures = evaluate_all(desc, &admissible);
    VerificationReport {
        identity_id: desc.id.to_owned(),
        tuples_tested: admissible.len() as u64,
        tuples_skipped: total - admissible.len() as u64,
        failures,
        wall_time: start.elapsed(),
        grid: *grid,
        seed: None,
    }
}

fn some_admissible_tuple(space: &ParamSpace, bx: &GridSpec) -> bool {
    // Constraints only involve r and s, so t = 0 and the smallest n suffice.
    let n = i64::from(space.n_min);
    if n > bx.n_range.hi {
        return false;
    }
    let n = u32::try_from(n.max(bx.n_range.lo)).expect("validated n range");
    let projected = bx.projected(space);
    projected[1]
        .iter()
        .any(|r| projected[2].iter().any(|s| space.admits(&ParamTuple::new(n, r, s, 0))))
}

/// Draws `spec.samples` admissible tuples with [`SplitMix64`] and checks each.
///
/// Per draw, the generator produces `n`, then `r`, `s`, `t` for the slots the
/// identity uses, in that order. Inadmissible draws are discarded and counted
/// in `tuples_skipped`.
pub fn verify_random(desc: &IdentityDescriptor, spec: &RandomSpec) -> Result<VerificationReport, VerifyError> {
    spec.validate()?;
    let bx = spec.sampling_box();
    if !some_admissible_tuple(&desc.params, &bx) {
        return Err(VerifyError::NoAdmissibleTuple(desc.id.to_owned()));
    }
    let start = Instant::now();
    let space = &desc.params;
    let mut rng = SplitMix64::new(spec.seed);
    let max_rejections = spec.samples.saturating_mul(1000);
    let mut rejected = 0u64;
    let mut drawn = Vec::with_capacity(spec.samples as usize);
    while (drawn.len() as u64) < spec.samples {
        let n = rng.range_inclusive(bx.n_range.lo, bx.n_range.hi);
        let mut slot = |used: bool, range: IntRange| if used { rng.range_inclusive(range.lo, range.hi) } else { 0 };
        let r = slot(space.uses_r, bx.r_range);
        let s = slot(space.uses_s, bx.s_range);
        let t = slot(space.uses_t, bx.t_range);
        let p = ParamTuple::new(u32::try_from(n).expect("validated n range"), r, s, t);
        if space.admits(&p) {
            drawn.push(p);
        } else {
            rejected += 1;
            if rejected > max_rejections {
                return Err(VerifyError::TooManyRejections(desc.id.to_owned()));
            }
        }
    }
    let failures = evaluate_all(desc, &drawn);
    Ok(VerificationReport {
        identity_id: desc.id.to_owned(),
        tuples_tested: spec.samples,
        tuples_skipped: rejected,
        failures,
        wall_time: start.elapsed(),
        grid: bx,
        seed: Some(spec.seed),
    })
}

/// Grid (and optionally random) reports for every entry of `catalog`, in
/// catalog order, followed by the auxiliary sweeps.
pub fn verify_all(
    catalog: &[IdentityDescriptor],
    grid: &GridSpec,
    random: Option<&RandomSpec>,
) -> Result<Vec<VerificationReport>, VerifyError> {
    grid.validate()?;
    let mut reports = Vec::with_capacity(catalog.len() * 2 + AUX_SWEEP_COUNT);
    for desc in catalog {
        reports.push(verify_grid(desc, grid));
        if let Some(spec) = random {
            reports.push(verify_random(desc, spec)?);
        }
    }
    reports.extend(auxiliary_sweeps(grid));
    Ok(reports)
}

/// Runs `f` inside a dedicated pool of `jobs` worker threads.
pub fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool")
        .install(f)
}

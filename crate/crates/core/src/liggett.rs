//! Executable form of the convolution theorem: ULC(l) ⋆ ULC(d) is
//! ULC(l+d). The sequence route checks the convolution directly; the
//! geometric route realizes both factors as body pairs, takes cartesian
//! products and compares the product volume polynomial against the
//! convolution — the two-route agreement is the point of the exercise.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geom::{cartesian_product, volume_poly, Body};
use crate::seq::{Seq, ViolationReport};
use crate::shephard::realize;

/// Ambient-dimension cap for the geometric route; the facet scan is
/// exhaustive and meant for desk scale.
pub const GEOMETRIC_DIM_BUDGET: usize = 5;

/// Everything a theorem check produced: the convolution, its ULC report at
/// order `l + d`, and the geometric comparison when it ran.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremVerdict {
    pub a: Seq,
    pub l: u64,
    pub b: Seq,
    pub d: u64,
    /// The convolution `a ⋆ b`.
    pub c: Seq,
    pub ulc_report: ViolationReport,
    /// `Some(result)` iff the geometric route ran.
    pub geometric_match: Option<bool>,
}

impl TheoremVerdict {
    /// True iff nothing contradicted the theorem.
    pub fn holds(&self) -> bool {
        self.ulc_report.holds() && self.geometric_match != Some(false)
    }
}

/// The product bodies of the proof pipeline: `P = K1 × C1`, `Q = K2 × C2`.
pub fn product_construction(
    k1: &Body,
    k2: &Body,
    c1: &Body,
    c2: &Body,
) -> Result<(Body, Body)> {
    if k1.dim() != k2.dim() {
        return Err(Error::DimensionMismatch {
            left: k1.dim(),
            right: k2.dim(),
        });
    }
    if c1.dim() != c2.dim() {
        return Err(Error::DimensionMismatch {
            left: c1.dim(),
            right: c2.dim(),
        });
    }
    Ok((cartesian_product(k1, c1), cartesian_product(k2, c2)))
}

/// Exact check of the volume factorization
/// `Vol_l(tK1 + K2) · Vol_d(tC1 + C2) = Vol_{l+d}(tP + Q)`:
/// the convolution of the factor volume polynomials must equal the product
/// volume polynomial coefficientwise.
pub fn product_identity_check(k1: &Body, k2: &Body, c1: &Body, c2: &Body) -> Result<bool> {
    let (p, q) = product_construction(k1, k2, c1, c2)?;
    if p.dim() > GEOMETRIC_DIM_BUDGET {
        return Err(Error::DimensionBudget {
            dim: p.dim(),
            max: GEOMETRIC_DIM_BUDGET,
        });
    }
    let left = volume_poly(k1, k2)?
        .coeffs
        .convolve(&volume_poly(c1, c2)?.coeffs);
    let right = volume_poly(&p, &q)?.coeffs;
    Ok(left == right)
}

/// Checks the theorem on one input pair.
///
/// The sequence route always runs: `is_ulc(a ⋆ b, l + d)`. With `geometric`
/// set, both sequences are additionally realized as body pairs (which
/// requires them strictly positive and of full length `order + 1`, the
/// setting of the product proof), and the product volume polynomial — scaled
/// by both proportionality constants — is compared against the convolution.
///
/// Inputs that fail their declared ULC orders are errors, reported
/// distinctly from theorem violations (which land in the verdict).
pub fn theorem_check(
    a: &Seq,
    l: u64,
    b: &Seq,
    d: u64,
    geometric: bool,
) -> Result<TheoremVerdict> {
    let report_a = a.is_ulc(l)?;
    if !report_a.holds() {
        return Err(Error::NotUlc {
            order: l,
            report: report_a,
        });
    }
    let report_b = b.is_ulc(d)?;
    if !report_b.holds() {
        return Err(Error::NotUlc {
            order: d,
            report: report_b,
        });
    }

    let c = a.convolve(b);
    let ulc_report = c.is_ulc(l + d).expect("convolution length fits the order sum");

    let geometric_match = if geometric {
        Some(geometric_route(a, l, b, d, &c)?)
    } else {
        None
    };

    Ok(TheoremVerdict {
        a: a.clone(),
        l,
        b: b.clone(),
        d,
        c,
        ulc_report,
        geometric_match,
    })
}

fn geometric_route(a: &Seq, l: u64, b: &Seq, d: u64, c: &Seq) -> Result<bool> {
    if a.len() as u64 != l + 1 || b.len() as u64 != d + 1 {
        return Err(Error::GeometricPrecondition {
            reason: format!(
                "realization needs full-length sequences: len {} for order {l}, len {} for order {d}",
                a.len(),
                b.len()
            ),
        });
    }
    if !a.is_strictly_positive() || !b.is_strictly_positive() {
        return Err(Error::GeometricPrecondition {
            reason: "realization needs strictly positive sequences".to_string(),
        });
    }
    let dim = (l + d) as usize;
    if dim > GEOMETRIC_DIM_BUDGET {
        return Err(Error::DimensionBudget {
            dim,
            max: GEOMETRIC_DIM_BUDGET,
        });
    }

    let ra = realize(a)?;
    let rb = realize(b)?;
    let (k1, k2) = ra.bodies();
    let (c1, c2) = rb.bodies();
    let (p, q) = product_construction(k1, k2, c1, c2)?;
    let poly = volume_poly(&p, &q)?;
    let scale = ra.proportionality() * rb.proportionality();
    Ok(poly.coeffs.scale(&scale) == *c)
}

/// Parameters for the fuzzing harness.
#[derive(Clone, Debug, Serialize)]
pub struct FuzzOptions {
    pub trials: u64,
    pub max_order: u64,
    pub seed: u64,
    /// Run the geometric route on every k-th trial; 0 disables it.
    pub geometric_every: u64,
}

/// A trial whose verdict contradicted the theorem, with the full witness.
#[derive(Clone, Debug, Serialize)]
pub struct FuzzViolation {
    pub trial: u64,
    pub verdict: TheoremVerdict,
}

/// Outcome of a fuzz run. Two runs with the same options compare equal on
/// every field except `elapsed`, which is excluded from serialization and
/// display so that reruns stay byte-identical.
#[derive(Clone, Debug, Serialize)]
pub struct FuzzSummary {
    pub trials: u64,
    pub max_order: u64,
    pub seed: u64,
    pub geometric_every: u64,
    pub geometric_runs: u64,
    pub violations: Vec<FuzzViolation>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl fmt::Display for FuzzSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "fuzz: trials={} max-order={} seed={} geometric-every={}",
            self.trials, self.max_order, self.seed, self.geometric_every
        )?;
        writeln!(f, "geometric runs: {}", self.geometric_runs)?;
        write!(f, "violations: {}", self.violations.len())?;
        for v in &self.violations {
            write!(
                f,
                "\ntrial {}: a={} (order {}), b={} (order {}), c={}: {}",
                v.trial, v.verdict.a, v.verdict.l, v.verdict.b, v.verdict.d, v.verdict.c,
                v.verdict.ulc_report
            )?;
            if v.verdict.geometric_match == Some(false) {
                write!(f, " [geometric mismatch]")?;
            }
        }
        Ok(())
    }
}

/// Runs `theorem_check` on seeded random ULC pairs. Each trial draws from
/// its own ChaCha stream derived from `(seed, trial)`, so the summary is
/// deterministic in the options no matter how trials would be scheduled.
pub fn fuzz(options: &FuzzOptions) -> FuzzSummary {
    fuzz_impl(options, &|_, c| c)
}

/// Test seam: `mutate` may tamper with the convolution before the verdict is
/// re-evaluated, to prove the harness actually flags violations.
pub(crate) fn fuzz_impl(options: &FuzzOptions, mutate: &dyn Fn(u64, Seq) -> Seq) -> FuzzSummary {
    let start = Instant::now();
    let max_order = options.max_order.max(1);
    let mut geometric_runs = 0;
    let mut violations = Vec::new();

    for trial in 0..options.trials {
        let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
        rng.set_stream(trial);

        let geometric = options.geometric_every > 0 && trial % options.geometric_every == 0;
        let (l, d, len_a, len_b) = if geometric {
            let l = rng.random_range(1..=max_order.min(4));
            let d = rng.random_range(1..=max_order.min(GEOMETRIC_DIM_BUDGET as u64 - l));
            (l, d, (l + 1) as usize, (d + 1) as usize)
        } else {
            let l = rng.random_range(1..=max_order);
            let d = rng.random_range(1..=max_order);
            let len_a = rng.random_range(1..=(l + 1) as usize);
            let len_b = rng.random_range(1..=(d + 1) as usize);
            (l, d, len_a, len_b)
        };
        let a = Seq::random_ulc(l, len_a, rng.random()).expect("length within order bound");
        let b = Seq::random_ulc(d, len_b, rng.random()).expect("length within order bound");

        let mut verdict =
            theorem_check(&a, l, &b, d, geometric).expect("fuzz inputs satisfy preconditions");
        if geometric {
            geometric_runs += 1;
        }

        let corrupted = mutate(trial, verdict.c.clone());
        if corrupted != verdict.c {
            verdict.ulc_report = corrupted
                .is_ulc(l + d)
                .expect("mutation must preserve length");
            verdict.c = corrupted;
        }

        if !verdict.holds() {
            violations.push(FuzzViolation { trial, verdict });
        }
    }

    FuzzSummary {
        trials: options.trials,
        max_order: options.max_order,
        seed: options.seed,
        geometric_every: options.geometric_every,
        geometric_runs,
        violations,
        elapsed: start.elapsed(),
    }
}

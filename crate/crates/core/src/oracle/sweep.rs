use std::fmt::Write as _;

use crate::arith::{RMatrix, RVector, Rational};
use crate::decide::{decide_feasibility, verify_farkas, verify_feasible_point, Status};
use crate::error::{Error, Result};
use crate::io::render_instance;
use crate::model::FeasibilityInstance;

use super::fm::{fm_feasible, FmLimits};
use super::generate::{gen_instance, GeneratorConfig};

/// Hard ceiling on the number of instances one sweep may enumerate.
pub const MAX_SWEEP_INSTANCES: u64 = 1_000_000;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub checked: usize,
    /// One line per mismatch or certificate failure, sorted.
    pub disagreements: Vec<String>,
}

impl SweepReport {
    pub fn is_clean(&self) -> bool {
        self.disagreements.is_empty()
    }

    fn record(&mut self, inst: &FeasibilityInstance) -> Result<()> {
        self.checked += 1;
        if let Some(line) = check_instance(inst)? {
            self.disagreements.push(line);
        }
        Ok(())
    }

    fn finish(mut self) -> Self {
        self.disagreements.sort();
        self
    }

    /// Disagreement lines followed by `checked=<k> disagreements=<d>`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for line in &self.disagreements {
            out.push_str(line);
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "checked={} disagreements={}",
            self.checked,
            self.disagreements.len()
        );
        out
    }
}

fn one_line(inst: &FeasibilityInstance) -> String {
    render_instance(inst).trim_end().replace('\n', " | ")
}

/// Compares the decision path against the oracle on one instance and
/// re-verifies the returned certificate. `Some(description)` on any failure.
pub fn check_instance(inst: &FeasibilityInstance) -> Result<Option<String>> {
    let oracle = fm_feasible(inst)?;
    let verdict = match decide_feasibility(inst) {
        Ok(v) => v,
        Err(e) => {
            return Ok(Some(format!(
                "error decide=\"{e}\" fm={oracle} instance={}",
                one_line(inst)
            )))
        }
    };
    let certified = match verdict.status {
        Status::Feasible => verdict
            .witness()
            .map_or(Ok(false), |x| verify_feasible_point(inst, x))?,
        Status::Infeasible => verdict
            .farkas()
            .map_or(Ok(false), |y| verify_farkas(inst, y))?,
    };
    let decided = verdict.status == Status::Feasible;
    if decided != oracle || !certified {
        let label = if decided { "feasible" } else { "infeasible" };
        return Ok(Some(format!(
            "disagreement decide={label} certified={certified} fm={oracle} instance={}",
            one_line(inst)
        )));
    }
    Ok(None)
}

/// Number of instances with entries from a set of size `k` over all shapes
/// `1..=cap_m × 1..=cap_n`, or `None` on overflow.
pub fn exhaustive_instance_count(cap_m: usize, cap_n: usize, k: usize) -> Option<u64> {
    let mut total: u64 = 0;
    for m in 1..=cap_m {
        for n in 1..=cap_n {
            let cells = u32::try_from(m * n + m).ok()?;
            total = total.checked_add((k as u64).checked_pow(cells)?)?;
        }
    }
    Some(total)
}

/// Enumerates every instance with entries drawn from `entries` and shape up to
/// `cap_m × cap_n`, comparing each against the oracle.
pub fn exhaustive_small_check(
    cap_m: usize,
    cap_n: usize,
    entries: &[Rational],
) -> Result<SweepReport> {
    let mut values = entries.to_vec();
    values.sort();
    values.dedup();
    if values.is_empty() {
        return Err(Error::Config("entry set is empty".into()));
    }
    if cap_m == 0 || cap_n == 0 {
        return Err(Error::Config("sweep caps must be at least 1".into()));
    }
    let fm_cap = FmLimits::default().max_vars;
    if cap_n > fm_cap {
        return Err(Error::OracleRefused(format!(
            "n cap {cap_n} exceeds the oracle cap of {fm_cap}"
        )));
    }
    match exhaustive_instance_count(cap_m, cap_n, values.len()) {
        Some(c) if c <= MAX_SWEEP_INSTANCES => {}
        _ => {
            return Err(Error::OracleRefused(format!(
                "sweep would exceed {MAX_SWEEP_INSTANCES} instances"
            )))
        }
    }

    let mut report = SweepReport::default();
    let k = values.len();
    for m in 1..=cap_m {
        for n in 1..=cap_n {
            let cells = m * n + m;
            let mut digits = vec![0usize; cells];
            loop {
                let pick = |d: &[usize]| d.iter().map(|&i| values[i].clone()).collect::<Vec<_>>();
                let a = RMatrix::new(m, n, pick(&digits[..m * n]))?;
                let b = RVector::new(pick(&digits[m * n..]))?;
                report.record(&FeasibilityInstance::new(a, b)?)?;

                // Odometer increment; done when it wraps.
                let mut pos = 0;
                while pos < cells {
                    digits[pos] += 1;
                    if digits[pos] < k {
                        break;
                    }
                    digits[pos] = 0;
                    pos += 1;
                }
                if pos == cells {
                    break;
                }
            }
        }
    }
    Ok(report.finish())
}

/// Checks `count` generated instances of shape `m × n`; instance `i` uses seed
/// `seed + i` (wrapping) with the default entry ranges.
pub fn random_agreement_check(seed: u64, count: usize, m: usize, n: usize) -> Result<SweepReport> {
    let fm_cap = FmLimits::default().max_vars;
    if n > fm_cap {
        return Err(Error::OracleRefused(format!(
            "n = {n} exceeds the oracle cap of {fm_cap}"
        )));
    }
    let mut report = SweepReport::default();
    for i in 0..count {
        let cfg = GeneratorConfig::new(seed.wrapping_add(i as u64), m, n);
        report.record(&gen_instance(&cfg)?)?;
    }
    Ok(report.finish())
}

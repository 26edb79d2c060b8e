use std::collections::HashSet;

use crate::arith::{RVector, Rational};
use crate::error::{Error, Result};
use crate::model::FeasibilityInstance;

#[derive(Clone, Debug)]
pub struct FmLimits {
    /// Largest number of unknowns the oracle accepts.
    pub max_vars: usize,
    /// Abort when a stage produces more constraints than this.
    pub max_constraints: usize,
}

impl Default for FmLimits {
    fn default() -> Self {
        FmLimits {
            max_vars: 8,
            max_constraints: 50_000,
        }
    }
}

/// `coefs · x ≥ rhs`
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Row {
    coefs: Vec<Rational>,
    rhs: Rational,
}

enum Normalized {
    Row(Row),
    Tautology,
    Contradiction,
}

/// Scales so the first nonzero coefficient has magnitude 1, which makes
/// positive multiples of a row compare equal.
fn normalize(row: Row) -> Normalized {
    let Some(lead) = row.coefs.iter().find(|c| !c.is_zero()) else {
        return if row.rhs.is_positive() {
            Normalized::Contradiction
        } else {
            Normalized::Tautology
        };
    };
    let scale = Rational::one() / lead.abs();
    Normalized::Row(Row {
        coefs: row.coefs.iter().map(|c| c * &scale).collect(),
        rhs: &row.rhs * &scale,
    })
}

/// Systems seen before each elimination, paired with the variable removed.
/// The last entry holds the system over the final remaining variable.
struct Elimination {
    stages: Vec<(usize, Vec<Row>)>,
}

struct Dedup {
    rows: Vec<Row>,
    seen: HashSet<Row>,
}

impl Dedup {
    fn new() -> Self {
        Dedup {
            rows: Vec::new(),
            seen: HashSet::new(),
        }
    }

    /// Returns false on a contradiction.
    fn push(&mut self, row: Row) -> bool {
        match normalize(row) {
            Normalized::Contradiction => false,
            Normalized::Tautology => true,
            Normalized::Row(r) => {
                if self.seen.insert(r.clone()) {
                    self.rows.push(r);
                }
                true
            }
        }
    }
}

/// Runs elimination down to one variable; `None` if a contradiction shows up.
fn eliminate(inst: &FeasibilityInstance, limits: &FmLimits) -> Result<Option<Elimination>> {
    let n = inst.n();
    if n > limits.max_vars {
        return Err(Error::OracleRefused(format!(
            "{n} variables exceeds the Fourier-Motzkin cap of {}",
            limits.max_vars
        )));
    }
    let mut system = Dedup::new();
    for (i, row) in inst.a().row_iter().enumerate() {
        let ok = system.push(Row {
            coefs: row.to_vec(),
            rhs: inst.b()[i].clone(),
        });
        if !ok {
            return Ok(None);
        }
    }
    let mut rows = system.rows;
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut stages = Vec::with_capacity(n);

    while remaining.len() > 1 {
        // Smallest pair count first keeps intermediate systems small.
        let (pos_in_remaining, var) = remaining
            .iter()
            .copied()
            .enumerate()
            .min_by_key(|&(_, v)| {
                let pos = rows.iter().filter(|r| r.coefs[v].is_positive()).count();
                let neg = rows.iter().filter(|r| r.coefs[v].is_negative()).count();
                (pos * neg, v)
            })
            .expect("nonempty");
        remaining.remove(pos_in_remaining);

        let mut next = Dedup::new();
        let (mut lower, mut upper) = (Vec::new(), Vec::new());
        for r in &rows {
            if r.coefs[var].is_positive() {
                lower.push(r);
            } else if r.coefs[var].is_negative() {
                upper.push(r);
            } else if !next.push(r.clone()) {
                return Ok(None);
            }
        }
        for p in &lower {
            for q in &upper {
                // (-q_v)·p + p_v·q cancels the variable; both weights are positive.
                let wp = -&q.coefs[var];
                let wq = &p.coefs[var];
                let combined = Row {
                    coefs: p
                        .coefs
                        .iter()
                        .zip(&q.coefs)
                        .map(|(a, b)| &wp * a + wq * b)
                        .collect(),
                    rhs: &wp * &p.rhs + wq * &q.rhs,
                };
                if !next.push(combined) {
                    return Ok(None);
                }
                if next.rows.len() > limits.max_constraints {
                    return Err(Error::OracleRefused(format!(
                        "elimination stage exceeded {} constraints",
                        limits.max_constraints
                    )));
                }
            }
        }
        stages.push((var, std::mem::replace(&mut rows, next.rows)));
    }
    stages.push((remaining[0], rows));
    Ok(Some(Elimination { stages }))
}

/// Bounds on `var` implied by `rows` with the other variables fixed by
/// `values`. `None` if some row without `var` is violated.
fn bounds(
    rows: &[Row],
    var: usize,
    values: &[Option<Rational>],
) -> Option<(Option<Rational>, Option<Rational>)> {
    let mut lo: Option<Rational> = None;
    let mut hi: Option<Rational> = None;
    for r in rows {
        let mut rest = r.rhs.clone();
        for (k, c) in r.coefs.iter().enumerate() {
            if k == var || c.is_zero() {
                continue;
            }
            let v = values[k].as_ref().expect("later variables are fixed first");
            rest -= &(c * v);
        }
        let c = &r.coefs[var];
        if c.is_zero() {
            if rest.is_positive() {
                return None;
            }
        } else {
            let bound = &rest / c;
            if c.is_positive() {
                if lo.as_ref().is_none_or(|l| &bound > l) {
                    lo = Some(bound);
                }
            } else if hi.as_ref().is_none_or(|h| &bound < h) {
                hi = Some(bound);
            }
        }
    }
    match (&lo, &hi) {
        (Some(l), Some(h)) if l > h => None,
        _ => Some((lo, hi)),
    }
}

pub fn fm_feasible(inst: &FeasibilityInstance) -> Result<bool> {
    fm_feasible_with(inst, &FmLimits::default())
}

/// True iff `{x : Ax ≥ b}` is nonempty, decided by exact elimination.
pub fn fm_feasible_with(inst: &FeasibilityInstance, limits: &FmLimits) -> Result<bool> {
    let Some(elim) = eliminate(inst, limits)? else {
        return Ok(false);
    };
    let (var, rows) = elim.stages.last().expect("n >= 1");
    let values = vec![None; inst.n()];
    Ok(bounds(rows, *var, &values).is_some())
}

/// A solution recovered by back-substitution through the elimination
/// stages, or `None` when the system is infeasible.
pub fn fm_witness(inst: &FeasibilityInstance) -> Result<Option<RVector>> {
    let Some(elim) = eliminate(inst, &FmLimits::default())? else {
        return Ok(None);
    };
    let mut values: Vec<Option<Rational>> = vec![None; inst.n()];
    for (depth, (var, rows)) in elim.stages.iter().rev().enumerate() {
        let Some((lo, hi)) = bounds(rows, *var, &values) else {
            if depth == 0 {
                return Ok(None);
            }
            return Err(Error::Internal(format!(
                "back-substitution found an empty interval for variable {var}"
            )));
        };
        values[*var] = Some(match (lo, hi) {
            (Some(l), _) => l,
            (None, Some(h)) => h,
            (None, None) => Rational::zero(),
        });
    }
    let x = values
        .into_iter()
        .map(|v| v.expect("every variable is staged"))
        .collect();
    Ok(Some(RVector::new(x)?))
}

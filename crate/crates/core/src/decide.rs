//! Feasibility decision: solve the relaxed program, test its optimum for zero,
//! and return a certificate that can be checked without trusting the solver.

use crate::arith::{dot, mat_vec, RVector, Rational};
use crate::error::{Error, Result};
use crate::model::{build_phase_one, initial_point, FeasibilityInstance};
use crate::simplex::{initial_basis, solve, to_standard_form, Optimum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Feasible,
    Infeasible,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `x` with `Ax ≥ b`.
    Witness(RVector),
    /// `y ≥ 0` with `Aᵀy = 0` and `bᵀy > 0`.
    Farkas(RVector),
}

/// A verified answer. `optimal_value` is the minimal total violation `Σ Δbᵢ`,
/// zero exactly when the system is feasible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub optimal_value: Rational,
    pub certificate: Certificate,
}

impl Verdict {
    pub fn witness(&self) -> Option<&RVector> {
        match &self.certificate {
            Certificate::Witness(x) => Some(x),
            Certificate::Farkas(_) => None,
        }
    }

    pub fn farkas(&self) -> Option<&RVector> {
        match &self.certificate {
            Certificate::Farkas(y) => Some(y),
            Certificate::Witness(_) => None,
        }
    }
}

pub fn decide_feasibility(inst: &FeasibilityInstance) -> Result<Verdict> {
    decide_with_optimum(inst).map(|(verdict, _)| verdict)
}

/// Like [`decide_feasibility`] but also hands back the solver's optimum.
pub fn decide_with_optimum(inst: &FeasibilityInstance) -> Result<(Verdict, Optimum)> {
    let prog = build_phase_one(inst);
    let start = initial_point(inst);
    let lp = to_standard_form(&prog);
    let basis = initial_basis(&lp, &start)?;
    let opt = solve(&lp, &basis)?;

    let verdict = if opt.value.is_zero() {
        // Δb ≥ 0 with Σ Δbᵢ = 0 forces Δb = 0, so x alone solves the system.
        if !opt.point.relax.is_zero() {
            return Err(Error::Internal(format!(
                "zero optimum with nonzero relaxation {}",
                opt.point.relax
            )));
        }
        let x = opt.point.x.clone();
        if !verify_feasible_point(inst, &x)? {
            return Err(Error::Internal(format!("witness {x} fails Ax >= b")));
        }
        Verdict {
            status: Status::Feasible,
            optimal_value: opt.value.clone(),
            certificate: Certificate::Witness(x),
        }
    } else {
        let y = farkas_from_dual(inst, &opt)?;
        if !verify_farkas(inst, &y)? {
            return Err(Error::Internal(format!(
                "certificate {y} fails verification"
            )));
        }
        Verdict {
            status: Status::Infeasible,
            optimal_value: opt.value.clone(),
            certificate: Certificate::Farkas(y),
        }
    };
    Ok((verdict, opt))
}

/// True iff `Ax ≥ b` componentwise.
pub fn verify_feasible_point(inst: &FeasibilityInstance, x: &RVector) -> Result<bool> {
    let ax = mat_vec(inst.a(), x)?;
    Ok(ax.iter().zip(inst.b().iter()).all(|(l, r)| l >= r))
}

/// The dual of a positive optimum, checked to be a Farkas certificate.
pub fn farkas_from_dual(inst: &FeasibilityInstance, opt: &Optimum) -> Result<RVector> {
    if !opt.value.is_positive() {
        return Err(Error::Contract(format!(
            "Farkas extraction needs a positive optimum, got {}",
            opt.value
        )));
    }
    let y = opt.dual.clone();
    if y.len() != inst.m() {
        return Err(Error::DimensionMismatch {
            context: "dual length",
            expected: inst.m(),
            found: y.len(),
        });
    }
    if !y.is_nonnegative() || !inst.a().transpose_mul(&y)?.is_zero() {
        return Err(Error::Internal(format!(
            "dual {y} is not a Farkas multiplier"
        )));
    }
    if dot(inst.b(), &y)? != opt.value {
        return Err(Error::Internal("bᵀy differs from the optimal value".into()));
    }
    Ok(y)
}

/// True iff `y ≥ 0`, `Aᵀy = 0` and `bᵀy > 0`: a standalone proof that
/// `Ax ≥ b` has no solution.
pub fn verify_farkas(inst: &FeasibilityInstance, y: &RVector) -> Result<bool> {
    if y.len() != inst.m() {
        return Err(Error::DimensionMismatch {
            context: "certificate length",
            expected: inst.m(),
            found: y.len(),
        });
    }
    if !y.is_nonnegative() {
        return Ok(false);
    }
    Ok(inst.a().transpose_mul(y)?.is_zero() && dot(inst.b(), y)?.is_positive())
}

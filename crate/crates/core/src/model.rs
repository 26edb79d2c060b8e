//! The input system `Ax ≥ b` and its relaxed feasibility program.
//!
//! The relaxed program adds one nonnegative violation variable per row:
//!
//! ```text
//! minimize   Σᵢ Δbᵢ
//! subject to Ax + Δb ≥ b,  Δb ≥ 0,  x free
//! ```
//!
//! Its optimum is zero exactly when the original system has a solution.

use crate::arith::{mat_vec, RMatrix, RVector, Rational};
use crate::error::{Error, Result};

/// The system `Ax ≥ b` with `A` of shape `m × n`, both at least 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FeasibilityInstance {
    a: RMatrix,
    b: RVector,
}

impl FeasibilityInstance {
    pub fn new(a: RMatrix, b: RVector) -> Result<Self> {
        if a.rows() != b.len() {
            return Err(Error::DimensionMismatch {
                context: "right-hand side length",
                expected: a.rows(),
                found: b.len(),
            });
        }
        Ok(FeasibilityInstance { a, b })
    }

    /// Convenience constructor for integer data.
    pub fn from_ints(rows: &[&[i64]], b: &[i64]) -> Result<Self> {
        FeasibilityInstance::new(RMatrix::from_int_rows(rows)?, RVector::from_ints(b)?)
    }

    pub fn a(&self) -> &RMatrix {
        &self.a
    }

    pub fn b(&self) -> &RVector {
        &self.b
    }

    /// Number of inequalities.
    pub fn m(&self) -> usize {
        self.a.rows()
    }

    /// Number of unknowns.
    pub fn n(&self) -> usize {
        self.a.cols()
    }
}

/// A point `(x, Δb)` of the relaxed program.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhasePoint {
    pub x: RVector,
    pub relax: RVector,
}

/// The relaxed program built over an instance.
///
/// Variables are ordered `x₁..xₙ, Δb₁..Δbₘ`. The objective is implicit: 1 on
/// every `Δb` coordinate and 0 on every `x` coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaseOneProgram {
    instance: FeasibilityInstance,
}

impl PhaseOneProgram {
    pub fn instance(&self) -> &FeasibilityInstance {
        &self.instance
    }

    pub fn num_x(&self) -> usize {
        self.instance.n()
    }

    pub fn num_relax(&self) -> usize {
        self.instance.m()
    }

    pub fn num_vars(&self) -> usize {
        self.num_x() + self.num_relax()
    }

    /// Objective coefficients over `(x, Δb)`.
    pub fn objective(&self) -> Vec<Rational> {
        let mut c = vec![Rational::zero(); self.num_x()];
        c.extend(std::iter::repeat_n(Rational::one(), self.num_relax()));
        c
    }

    /// Coefficients of row `i` of `[A | I]` in `[A | I](x, Δb) ≥ b`.
    pub fn constraint_row(&self, i: usize) -> Vec<Rational> {
        let mut row = self.instance.a().row(i).to_vec();
        row.extend((0..self.num_relax()).map(|k| {
            if k == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        }));
        row
    }

    fn check_dims(&self, p: &PhasePoint) -> Result<()> {
        if p.x.len() != self.num_x() {
            return Err(Error::DimensionMismatch {
                context: "point x",
                expected: self.num_x(),
                found: p.x.len(),
            });
        }
        if p.relax.len() != self.num_relax() {
            return Err(Error::DimensionMismatch {
                context: "point relaxation",
                expected: self.num_relax(),
                found: p.relax.len(),
            });
        }
        Ok(())
    }
}

pub fn build_phase_one(inst: &FeasibilityInstance) -> PhaseOneProgram {
    PhaseOneProgram {
        instance: inst.clone(),
    }
}

/// The always-feasible start: `x = 0`, `Δbᵢ = max(bᵢ, 0)`.
///
/// This is the componentwise-smallest `Δb` that is feasible at `x = 0`.
pub fn initial_point(inst: &FeasibilityInstance) -> PhasePoint {
    let x = RVector::zeros(inst.n()).expect("n >= 1");
    let relax =
        RVector::new(inst.b().iter().map(Rational::positive_part).collect()).expect("m >= 1");
    PhasePoint { x, relax }
}

/// `Σᵢ Δbᵢ`.
pub fn objective_value(prog: &PhaseOneProgram, p: &PhasePoint) -> Result<Rational> {
    prog.check_dims(p)?;
    Ok(p.relax.iter().sum())
}

/// True iff `Ax + Δb ≥ b` and `Δb ≥ 0`, compared exactly.
pub fn check_point(inst: &FeasibilityInstance, p: &PhasePoint) -> Result<bool> {
    build_phase_one(inst).check_dims(p)?;
    if !p.relax.is_nonnegative() {
        return Ok(false);
    }
    let ax = mat_vec(inst.a(), &p.x)?;
    Ok(ax
        .iter()
        .zip(p.relax.iter())
        .zip(inst.b().iter())
        .all(|((lhs, d), bi)| &(lhs + d) >= bi))
}

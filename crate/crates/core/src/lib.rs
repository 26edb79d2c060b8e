//! Exact feasibility decisions for linear inequality systems `Ax ≥ b`.
//!
//! The system is relaxed to the linear program
//! `min Σ Δbᵢ  s.t.  Ax + Δb ≥ b, Δb ≥ 0`, which always has a feasible point
//! and a nonnegative objective. Its optimum is zero exactly when `Ax ≥ b` is
//! solvable. The program is solved by an exact rational simplex method, and
//! every answer comes with a certificate:
//!
//! * feasible: a point `x` with `Ax ≥ b`;
//! * infeasible: a Farkas vector `y ≥ 0` with `Aᵀy = 0` and `bᵀy > 0`.
//!
//! ```
//! use polyfeas::{decide_feasibility, FeasibilityInstance, Status};
//!
//! // x ≤ 0 and x ≥ 1
//! let inst = FeasibilityInstance::from_ints(&[&[-1], &[1]], &[0, 1]).unwrap();
//! let verdict = decide_feasibility(&inst).unwrap();
//! assert_eq!(verdict.status, Status::Infeasible);
//! assert_eq!(verdict.farkas().unwrap().to_string(), "1 1");
//! ```

pub mod arith;
pub mod cli;
pub mod decide;
pub mod error;
pub mod io;
pub mod model;
pub mod oracle;
pub mod simplex;

pub use arith::{dot, mat_vec, RMatrix, RVector, Rational};
pub use decide::{
    decide_feasibility, decide_with_optimum, farkas_from_dual, verify_farkas,
    verify_feasible_point, Certificate, Status, Verdict,
};
pub use error::{Error, ParseError, Result};
pub use model::{
    build_phase_one, check_point, initial_point, objective_value, FeasibilityInstance,
    PhaseOneProgram, PhasePoint,
};

//! Exact revised simplex for the relaxed feasibility program.
//!
//! The program is first rewritten in equality form over nonnegative columns
//!
//! ```text
//! [ A  -A  I  -I ] (x⁺, x⁻, Δb, s) = b,   all columns ≥ 0
//! ```
//!
//! with cost 1 on the `Δb` block. The solver keeps an explicit basis inverse,
//! updated by elementary row operations after every pivot and rebuilt from
//! scratch every [`SolverOptions::refactor_period`] pivots. Pivots follow
//! Bland's rule, so the method terminates without cycling.

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::{RMatrix, RVector, Rational};
use crate::error::{Error, Result};
use crate::model::{PhaseOneProgram, PhasePoint};

/// What a standard-form column stands for, with the index of its source
/// variable or row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColumnRole {
    XPlus(usize),
    XMinus(usize),
    Relax(usize),
    Surplus(usize),
}

/// Equality-form program `Mz = b, z ≥ 0, min cᵀz`.
///
/// Column layout is `x⁺ (n) | x⁻ (n) | Δb (m) | s (m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardFormLP {
    matrix: RMatrix,
    rhs: RVector,
    cost: RVector,
    roles: Vec<ColumnRole>,
    num_x: usize,
}

impl StandardFormLP {
    pub fn rows(&self) -> usize {
        self.matrix.rows()
    }

    pub fn cols(&self) -> usize {
        self.matrix.cols()
    }

    pub fn num_x(&self) -> usize {
        self.num_x
    }

    pub fn matrix(&self) -> &RMatrix {
        &self.matrix
    }

    pub fn rhs(&self) -> &RVector {
        &self.rhs
    }

    pub fn cost(&self) -> &RVector {
        &self.cost
    }

    pub fn roles(&self) -> &[ColumnRole] {
        &self.roles
    }

    pub fn relax_column(&self, row: usize) -> usize {
        2 * self.num_x + row
    }

    pub fn surplus_column(&self, row: usize) -> usize {
        2 * self.num_x + self.rows() + row
    }

    /// Maps a program point to its standard-form image:
    /// `x⁺ = max(x, 0)`, `x⁻ = max(-x, 0)`, `s = Ax + Δb - b`.
    pub fn lift(&self, p: &PhasePoint) -> Result<Vec<Rational>> {
        let m = self.rows();
        if p.x.len() != self.num_x || p.relax.len() != m {
            return Err(Error::DimensionMismatch {
                context: "standard-form lift",
                expected: self.num_x + m,
                found: p.x.len() + p.relax.len(),
            });
        }
        let mut z = Vec::with_capacity(self.cols());
        z.extend(p.x.iter().map(Rational::positive_part));
        z.extend(p.x.iter().map(|v| (-v).positive_part()));
        z.extend(p.relax.iter().cloned());
        for i in 0..m {
            let row = self.matrix.row(i);
            let ax: Rational = row[..self.num_x]
                .iter()
                .zip(p.x.iter())
                .map(|(a, v)| a * v)
                .sum();
            z.push(ax + &p.relax[i] - &self.rhs[i]);
        }
        Ok(z)
    }

    /// Recovers `(x⁺ - x⁻, Δb)` from a full column assignment.
    pub fn project(&self, z: &[Rational]) -> Result<PhasePoint> {
        if z.len() != self.cols() {
            return Err(Error::DimensionMismatch {
                context: "standard-form projection",
                expected: self.cols(),
                found: z.len(),
            });
        }
        let mut x = vec![Rational::zero(); self.num_x];
        let mut relax = vec![Rational::zero(); self.rows()];
        for (role, v) in self.roles.iter().zip(z) {
            match *role {
                ColumnRole::XPlus(k) => x[k] += v,
                ColumnRole::XMinus(k) => x[k] -= v,
                ColumnRole::Relax(i) => relax[i] = v.clone(),
                ColumnRole::Surplus(_) => {}
            }
        }
        Ok(PhasePoint {
            x: RVector::new(x)?,
            relax: RVector::new(relax)?,
        })
    }

    pub fn objective_at(&self, z: &[Rational]) -> Rational {
        self.cost.iter().zip(z).map(|(c, v)| c * v).sum()
    }
}

pub fn to_standard_form(prog: &PhaseOneProgram) -> StandardFormLP {
    let inst = prog.instance();
    let (m, n) = (inst.m(), inst.n());
    let cols = 2 * n + 2 * m;
    let mut entries = Vec::with_capacity(m * cols);
    for i in 0..m {
        let row = inst.a().row(i);
        entries.extend(row.iter().cloned());
        entries.extend(row.iter().map(|v| -v));
        entries.extend((0..m).map(|k| {
            if k == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        }));
        entries.extend((0..m).map(|k| {
            if k == i {
                -Rational::one()
            } else {
                Rational::zero()
            }
        }));
    }
    let mut roles = Vec::with_capacity(cols);
    roles.extend((0..n).map(ColumnRole::XPlus));
    roles.extend((0..n).map(ColumnRole::XMinus));
    roles.extend((0..m).map(ColumnRole::Relax));
    roles.extend((0..m).map(ColumnRole::Surplus));
    let cost = roles
        .iter()
        .map(|r| match r {
            ColumnRole::Relax(_) => Rational::one(),
            _ => Rational::zero(),
        })
        .collect();
    StandardFormLP {
        matrix: RMatrix::new(m, cols, entries).expect("dimensions are positive"),
        rhs: inst.b().clone(),
        cost: RVector::new(cost).expect("nonempty"),
        roles,
        num_x: n,
    }
}

/// Basic column indices, one per row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Basis(Vec<usize>);

impl Basis {
    pub fn new(indices: Vec<usize>, num_cols: usize) -> Result<Self> {
        let mut seen = vec![false; num_cols];
        for &j in &indices {
            if j >= num_cols {
                return Err(Error::Contract(format!("basis column {j} out of range")));
            }
            if std::mem::replace(&mut seen[j], true) {
                return Err(Error::Contract(format!("basis column {j} repeated")));
            }
        }
        Ok(Basis(indices))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }
}

/// Starting basis at the origin.
///
/// Row `i` takes its `Δbᵢ` column when `bᵢ ≥ 0` and its surplus column
/// otherwise. The basis matrix is diagonal with entries `±1`, so the basic
/// solution is `Δbᵢ = max(bᵢ, 0)`, `sᵢ = max(-bᵢ, 0)`: exactly the image of
/// `start` when `start` is the minimal point produced by `initial_point`.
pub fn initial_basis(lp: &StandardFormLP, start: &PhasePoint) -> Result<Basis> {
    let z = lp.lift(start)?;
    if z.iter().any(Rational::is_negative) {
        return Err(Error::Contract("start point is not feasible".into()));
    }
    let cols = (0..lp.rows())
        .map(|i| {
            if lp.rhs()[i].is_negative() {
                lp.surplus_column(i)
            } else {
                lp.relax_column(i)
            }
        })
        .collect();
    let basis = Basis::new(cols, lp.cols())?;
    debug_assert!(lp.objective_at(&basic_solution(lp, &basis)?) <= lp.objective_at(&z));
    Ok(basis)
}

/// Full column assignment of a basis, computed from a fresh inverse.
pub fn basic_solution(lp: &StandardFormLP, basis: &Basis) -> Result<Vec<Rational>> {
    let inv = invert_basis(lp, basis.indices())?;
    let values = mul_inverse(&inv, lp.rhs().as_slice());
    let mut z = vec![Rational::zero(); lp.cols()];
    for (&j, v) in basis.indices().iter().zip(values) {
        z[j] = v;
    }
    Ok(z)
}

#[derive(Clone, Debug)]
pub struct SolverOptions {
    /// Pivots between exact re-inversions of the basis.
    pub refactor_period: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            refactor_period: 50,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PivotDecision {
    Pivot { entering: usize, leaving_row: usize },
    Optimal,
    Unbounded { entering: usize },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub pivots: usize,
    pub refactorizations: usize,
    /// Objective before the first pivot and after each one.
    pub objective_trace: Vec<Rational>,
}

/// Result of a completed solve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Optimum {
    pub value: Rational,
    pub point: PhasePoint,
    pub dual: RVector,
    pub basis: Basis,
    pub stats: SolveStats,
}

/// Number of distinct bases, `C(cols, rows)`: an upper bound on pivots under
/// Bland's rule since no basis repeats.
pub fn basis_bound(cols: usize, rows: usize) -> BigUint {
    let k = rows.min(cols.saturating_sub(rows));
    if rows > cols {
        return BigUint::from(0u8);
    }
    (0..k).fold(BigUint::one(), |acc, i| acc * (cols - i) / (i + 1))
}

fn invert_basis(lp: &StandardFormLP, basis: &[usize]) -> Result<Vec<Vec<Rational>>> {
    let m = lp.rows();
    let a = lp.matrix();
    // Gauss-Jordan on [B | I].
    let mut work: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row: Vec<Rational> = basis.iter().map(|&j| a.get(i, j).clone()).collect();
            row.extend((0..m).map(|k| {
                if k == i {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            row
        })
        .collect();
    for col in 0..m {
        let p = (col..m)
            .find(|&r| !work[r][col].is_zero())
            .ok_or_else(|| Error::Internal("singular basis matrix".into()))?;
        work.swap(col, p);
        let inv_pivot = Rational::one() / &work[col][col];
        for v in work[col].iter_mut() {
            *v = &*v * &inv_pivot;
        }
        let pivot_row = work[col].clone();
        for (r, row) in work.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v -= &(&f * pv);
            }
        }
    }
    Ok(work.into_iter().map(|row| row[m..].to_vec()).collect())
}

fn mul_inverse(inv: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    inv.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Simplex multipliers `yᵀ = c_Bᵀ B⁻¹`.
fn multipliers_from(lp: &StandardFormLP, basis: &[usize], inv: &[Vec<Rational>]) -> Vec<Rational> {
    let m = lp.rows();
    let mut y = vec![Rational::zero(); m];
    for (k, &j) in basis.iter().enumerate() {
        let c = &lp.cost()[j];
        if c.is_zero() {
            continue;
        }
        for (yi, b) in y.iter_mut().zip(&inv[k]) {
            *yi += &(c * b);
        }
    }
    y
}

fn reduced_cost_from(lp: &StandardFormLP, y: &[Rational], j: usize) -> Rational {
    let a = lp.matrix();
    let yaj: Rational = y.iter().enumerate().map(|(i, yi)| yi * a.get(i, j)).sum();
    &lp.cost()[j] - yaj
}

/// Mutable state of one solve: basis, its inverse and the basic values.
#[derive(Clone, Debug)]
pub struct SolverState<'a> {
    lp: &'a StandardFormLP,
    basis: Vec<usize>,
    in_basis: Vec<bool>,
    inverse: Vec<Vec<Rational>>,
    values: Vec<Rational>,
    options: SolverOptions,
    since_refactor: usize,
    stats: SolveStats,
}

impl<'a> SolverState<'a> {
    pub fn new(lp: &'a StandardFormLP, start: &Basis, options: SolverOptions) -> Result<Self> {
        if start.indices().len() != lp.rows() {
            return Err(Error::Contract(format!(
                "basis has {} columns for {} rows",
                start.indices().len(),
                lp.rows()
            )));
        }
        if options.refactor_period == 0 {
            return Err(Error::Config("refactor period must be positive".into()));
        }
        let inverse = invert_basis(lp, start.indices())?;
        let values = mul_inverse(&inverse, lp.rhs().as_slice());
        if values.iter().any(Rational::is_negative) {
            return Err(Error::Contract("start basis is not primal feasible".into()));
        }
        let mut in_basis = vec![false; lp.cols()];
        for &j in start.indices() {
            in_basis[j] = true;
        }
        let mut state = SolverState {
            lp,
            basis: start.indices().to_vec(),
            in_basis,
            inverse,
            values,
            options,
            since_refactor: 0,
            stats: SolveStats::default(),
        };
        let obj = state.objective();
        state.stats.objective_trace.push(obj);
        Ok(state)
    }

    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    pub fn basic_values(&self) -> &[Rational] {
        &self.values
    }

    pub fn stats(&self) -> &SolveStats {
        &self.stats
    }

    pub fn objective(&self) -> Rational {
        self.basis
            .iter()
            .zip(&self.values)
            .map(|(&j, v)| &self.lp.cost()[j] * v)
            .sum()
    }

    pub fn multipliers(&self) -> Vec<Rational> {
        multipliers_from(self.lp, &self.basis, &self.inverse)
    }

    /// Reduced costs of every column under the current multipliers.
    pub fn reduced_costs(&self) -> Vec<Rational> {
        let y = self.multipliers();
        (0..self.lp.cols())
            .map(|j| reduced_cost_from(self.lp, &y, j))
            .collect()
    }

    /// `B⁻¹ Aⱼ`.
    fn direction(&self, j: usize) -> Vec<Rational> {
        let a = self.lp.matrix();
        self.inverse
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(i, v)| v * a.get(i, j))
                    .sum()
            })
            .collect()
    }

    /// Full column assignment of the current basic solution.
    pub fn solution(&self) -> Vec<Rational> {
        let mut z = vec![Rational::zero(); self.lp.cols()];
        for (&j, v) in self.basis.iter().zip(&self.values) {
            z[j] = v.clone();
        }
        z
    }

    fn refactor(&mut self) -> Result<()> {
        let inverse = invert_basis(self.lp, &self.basis)?;
        let values = mul_inverse(&inverse, self.lp.rhs().as_slice());
        if values != self.values {
            return Err(Error::Internal(
                "basic values drifted from a fresh re-inversion".into(),
            ));
        }
        self.inverse = inverse;
        self.since_refactor = 0;
        self.stats.refactorizations += 1;
        Ok(())
    }

    /// Recomputes everything from scratch and checks primal feasibility and
    /// nonnegative reduced costs, independent of the incremental updates.
    pub fn certify_optimal(&self) -> Result<()> {
        let inverse = invert_basis(self.lp, &self.basis)?;
        let values = mul_inverse(&inverse, self.lp.rhs().as_slice());
        if values != self.values {
            return Err(Error::Internal(
                "basic values disagree with fresh inverse".into(),
            ));
        }
        if values.iter().any(Rational::is_negative) {
            return Err(Error::Internal("final basis is not primal feasible".into()));
        }
        let y = multipliers_from(self.lp, &self.basis, &inverse);
        if let Some(j) =
            (0..self.lp.cols()).find(|&j| reduced_cost_from(self.lp, &y, j).is_negative())
        {
            return Err(Error::Internal(format!(
                "column {j} has negative reduced cost at the final basis"
            )));
        }
        Ok(())
    }
}

/// Bland's rule: lowest-index improving column enters; among rows attaining
/// the minimum ratio the one whose basic column has the lowest index leaves.
pub fn choose_pivot_bland(state: &SolverState<'_>) -> PivotDecision {
    let y = state.multipliers();
    let entering = (0..state.lp.cols())
        .filter(|&j| !state.in_basis[j])
        .find(|&j| reduced_cost_from(state.lp, &y, j).is_negative());
    let Some(entering) = entering else {
        return PivotDecision::Optimal;
    };
    let u = state.direction(entering);
    let mut best: Option<(usize, Rational)> = None;
    for (r, ur) in u.iter().enumerate() {
        if !ur.is_positive() {
            continue;
        }
        let ratio = &state.values[r] / ur;
        let better = match &best {
            None => true,
            Some((br, bv)) => ratio < *bv || (ratio == *bv && state.basis[r] < state.basis[*br]),
        };
        if better {
            best = Some((r, ratio));
        }
    }
    match best {
        Some((leaving_row, _)) => PivotDecision::Pivot {
            entering,
            leaving_row,
        },
        None => PivotDecision::Unbounded { entering },
    }
}

/// Exchanges the entering column into the basis at `leaving_row`.
pub fn pivot(state: &mut SolverState<'_>, decision: &PivotDecision) -> Result<()> {
    let PivotDecision::Pivot {
        entering,
        leaving_row,
    } = *decision
    else {
        return Err(Error::Contract(format!("{decision:?} is not a pivot")));
    };
    if entering >= state.lp.cols() || leaving_row >= state.lp.rows() {
        return Err(Error::Contract("pivot index out of range".into()));
    }
    if state.in_basis[entering] {
        return Err(Error::Contract(format!(
            "column {entering} is already basic"
        )));
    }
    let before = state.objective();
    let u = state.direction(entering);
    let ur = u[leaving_row].clone();
    if !ur.is_positive() {
        return Err(Error::Internal(format!(
            "pivot element {ur} in row {leaving_row} is not positive"
        )));
    }
    let theta = &state.values[leaving_row] / &ur;
    for (r, (v, ui)) in state.values.iter_mut().zip(&u).enumerate() {
        if r != leaving_row && !ui.is_zero() {
            *v -= &(&theta * ui);
        }
    }
    state.values[leaving_row] = theta;
    if state.values.iter().any(Rational::is_negative) {
        return Err(Error::Internal(
            "pivot produced an infeasible basic solution".into(),
        ));
    }

    let inv_ur = Rational::one() / &ur;
    for v in state.inverse[leaving_row].iter_mut() {
        *v = &*v * &inv_ur;
    }
    let pivot_row = state.inverse[leaving_row].clone();
    for (r, row) in state.inverse.iter_mut().enumerate() {
        if r == leaving_row || u[r].is_zero() {
            continue;
        }
        for (v, pv) in row.iter_mut().zip(&pivot_row) {
            *v -= &(&u[r] * pv);
        }
    }

    let leaving = std::mem::replace(&mut state.basis[leaving_row], entering);
    state.in_basis[leaving] = false;
    state.in_basis[entering] = true;
    state.stats.pivots += 1;
    state.since_refactor += 1;
    if state.since_refactor >= state.options.refactor_period {
        state.refactor()?;
    }
    let after = state.objective();
    if after > before {
        return Err(Error::Internal(format!(
            "objective increased from {before} to {after}"
        )));
    }
    state.stats.objective_trace.push(after);
    Ok(())
}

/// Simplex multipliers at the final basis: a dual solution of
/// `max bᵀy s.t. Aᵀy = 0, 0 ≤ y ≤ 1`.
pub fn extract_dual(state: &SolverState<'_>) -> RVector {
    RVector::new(state.multipliers()).expect("m >= 1")
}

pub fn solve(lp: &StandardFormLP, start: &Basis) -> Result<Optimum> {
    solve_with_options(lp, start, SolverOptions::default())
}

pub fn solve_with_options(
    lp: &StandardFormLP,
    start: &Basis,
    options: SolverOptions,
) -> Result<Optimum> {
    let mut state = SolverState::new(lp, start, options)?;
    let bound = basis_bound(lp.cols(), lp.rows());
    loop {
        match choose_pivot_bland(&state) {
            PivotDecision::Optimal => break,
            PivotDecision::Unbounded { entering } => {
                // The objective is a sum of nonnegative columns.
                return Err(Error::Internal(format!(
                    "unbounded ray along column {entering} in a program bounded below by 0"
                )));
            }
            decision => {
                pivot(&mut state, &decision)?;
                if BigUint::from(state.stats.pivots) > bound {
                    return Err(Error::Internal(
                        "pivot count exceeded the basis bound".into(),
                    ));
                }
            }
        }
    }
    state.certify_optimal()?;

    let value = state.objective();
    if value.is_negative() {
        return Err(Error::Internal(format!("negative optimum {value}")));
    }
    let point = lp.project(&state.solution())?;
    let dual = extract_dual(&state);
    if dual.dot(lp.rhs())? != value {
        return Err(Error::Internal(
            "strong duality failed at the optimum".into(),
        ));
    }
    Ok(Optimum {
        value,
        point,
        dual,
        basis: Basis(state.basis.clone()),
        stats: state.stats.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::model::{
        build_phase_one, check_point, initial_point, objective_value, FeasibilityInstance,
    };

    fn lp_of(rows: &[&[i64]], b: &[i64]) -> (FeasibilityInstance, StandardFormLP) {
        let inst = FeasibilityInstance::from_ints(rows, b).unwrap();
        let lp = to_standard_form(&build_phase_one(&inst));
        (inst, lp)
    }

    fn start_of(inst: &FeasibilityInstance, lp: &StandardFormLP) -> Basis {
        initial_basis(lp, &initial_point(inst)).unwrap()
    }

    #[test]
    fn standard_form_shapes() {
        let (_, lp) = lp_of(&[&[2]], &[3]);
        assert_eq!((lp.rows(), lp.cols()), (1, 4));
        assert_eq!(
            lp.roles(),
            &[
                ColumnRole::XPlus(0),
                ColumnRole::XMinus(0),
                ColumnRole::Relax(0),
                ColumnRole::Surplus(0)
            ]
        );
        assert_eq!(lp.matrix().row(0), &[int(2), int(-2), int(1), int(-1)]);

        let (_, lp) = lp_of(&[&[1, 2, 3], &[4, 5, 6]], &[0, 0]);
        assert_eq!((lp.rows(), lp.cols()), (2, 10));

        let (_, lp) = lp_of(&[&[1], &[1]], &[0, 0]);
        assert_eq!(lp.cost(), &RVector::from_ints(&[0, 0, 1, 1, 0, 0]).unwrap());
    }

    #[test]
    fn lift_and_project_preserve_objective() {
        let (inst, lp) = lp_of(&[&[1, -2], &[3, 1]], &[2, -4]);
        let p = PhasePoint {
            x: RVector::new(vec![rat(-1, 2), int(3)]).unwrap(),
            relax: RVector::new(vec![int(9), rat(1, 3)]).unwrap(),
        };
        assert!(check_point(&inst, &p).unwrap());
        let z = lp.lift(&p).unwrap();
        assert!(z.iter().all(|v| !v.is_negative()));
        let mz = lp
            .matrix()
            .mat_vec(&RVector::new(z.clone()).unwrap())
            .unwrap();
        assert_eq!(&mz, lp.rhs());
        assert_eq!(
            lp.objective_at(&z),
            objective_value(&build_phase_one(&inst), &p).unwrap()
        );
        assert_eq!(lp.project(&z).unwrap(), p);
    }

    #[test]
    fn initial_basis_examples() {
        let (inst, lp) = lp_of(&[&[2]], &[3]);
        let basis = start_of(&inst, &lp);
        assert_eq!(basis.indices(), &[2]);
        assert_eq!(basic_solution(&lp, &basis).unwrap()[2], int(3));

        let (inst, lp) = lp_of(&[&[1]], &[-5]);
        let basis = start_of(&inst, &lp);
        assert_eq!(basis.indices(), &[3]);
        assert_eq!(basic_solution(&lp, &basis).unwrap()[3], int(5));

        let (inst, lp) = lp_of(&[&[1]], &[0]);
        let basis = start_of(&inst, &lp);
        assert_eq!(basis.indices(), &[2]);
        assert_eq!(basic_solution(&lp, &basis).unwrap()[2], int(0));
    }

    #[test]
    fn initial_basis_reproduces_start_point() {
        let (inst, lp) = lp_of(&[&[1, 1], &[2, -1], &[0, 3]], &[3, -1, 0]);
        let start = initial_point(&inst);
        let basis = initial_basis(&lp, &start).unwrap();
        assert_eq!(
            basic_solution(&lp, &basis).unwrap(),
            lp.lift(&start).unwrap()
        );
    }

    #[test]
    fn initial_basis_rejects_infeasible_start() {
        let (_, lp) = lp_of(&[&[1]], &[1]);
        let bad = PhasePoint {
            x: RVector::from_ints(&[0]).unwrap(),
            relax: RVector::from_ints(&[0]).unwrap(),
        };
        assert!(matches!(initial_basis(&lp, &bad), Err(Error::Contract(_))));
    }

    #[test]
    fn bland_choice_is_lowest_index() {
        // Costs make columns x⁺ (reduced cost -2) and others eligible; x⁺ is lowest.
        let (inst, lp) = lp_of(&[&[2, 5]], &[3]);
        let start = start_of(&inst, &lp);
        let state = SolverState::new(&lp, &start, SolverOptions::default()).unwrap();
        let d = state.reduced_costs();
        assert_eq!(d[0], int(-2));
        assert_eq!(d[1], int(-5));
        assert_eq!(
            choose_pivot_bland(&state),
            PivotDecision::Pivot {
                entering: 0,
                leaving_row: 0
            }
        );
    }

    #[test]
    fn ratio_tie_prefers_lowest_basic_column() {
        // Two identical rows: x ≥ 1 twice. Both Δ columns tie at ratio 1.
        let (inst, lp) = lp_of(&[&[1], &[1]], &[1, 1]);
        let start = start_of(&inst, &lp);
        assert_eq!(start.indices(), &[2, 3]);
        let state = SolverState::new(&lp, &start, SolverOptions::default()).unwrap();
        assert_eq!(
            choose_pivot_bland(&state),
            PivotDecision::Pivot {
                entering: 0,
                leaving_row: 0
            }
        );

        // Same tie with the rows' basic columns in the opposite order.
        let swapped = Basis::new(vec![3, 2], lp.cols()).unwrap();
        let state = SolverState::new(&lp, &swapped, SolverOptions::default()).unwrap();
        assert_eq!(
            choose_pivot_bland(&state),
            PivotDecision::Pivot {
                entering: 0,
                leaving_row: 1
            }
        );
    }

    #[test]
    fn optimal_when_no_negative_reduced_cost() {
        let (inst, lp) = lp_of(&[&[1]], &[-5]);
        let start = start_of(&inst, &lp);
        let state = SolverState::new(&lp, &start, SolverOptions::default()).unwrap();
        assert!(state.reduced_costs().iter().all(|d| !d.is_negative()));
        assert_eq!(choose_pivot_bland(&state), PivotDecision::Optimal);
    }

    #[test]
    fn single_pivot_drops_objective() {
        // min Δ s.t. 2x⁺ - 2x⁻ + Δ - s = 3 from {Δ}: ratio 3/2, objective 3 → 0.
        let (inst, lp) = lp_of(&[&[2]], &[3]);
        let start = start_of(&inst, &lp);
        let mut state = SolverState::new(&lp, &start, SolverOptions::default()).unwrap();
        assert_eq!(state.objective(), int(3));
        let decision = choose_pivot_bland(&state);
        pivot(&mut state, &decision).unwrap();
        assert_eq!(state.objective(), int(0));
        assert_eq!(state.basis(), &[0]);
        assert_eq!(state.basic_values(), &[rat(3, 2)]);
    }

    #[test]
    fn degenerate_pivot_keeps_objective() {
        // x ≥ 0 and x ≥ 1: row 0 is degenerate (Δ₁ = 0), so x⁺ enters at ratio 0.
        let (inst, lp) = lp_of(&[&[1], &[1]], &[0, 1]);
        let start = start_of(&inst, &lp);
        let mut state = SolverState::new(&lp, &start, SolverOptions::default()).unwrap();
        let before = state.objective();
        let decision = choose_pivot_bland(&state);
        assert_eq!(
            decision,
            PivotDecision::Pivot {
                entering: 0,
                leaving_row: 0
            }
        );
        pivot(&mut state, &decision).unwrap();
        assert_eq!(state.objective(), before);
        assert_eq!(state.basis(), &[0, 3]);
    }

    #[test]
    fn pivot_rejects_basic_entering_column() {
        let (inst, lp) = lp_of(&[&[2]], &[3]);
        let start = start_of(&inst, &lp);
        let mut state = SolverState::new(&lp, &start, SolverOptions::default()).unwrap();
        assert!(state.reduced_costs()[2].is_zero());
        let bogus = PivotDecision::Pivot {
            entering: 2,
            leaving_row: 0,
        };
        assert!(matches!(pivot(&mut state, &bogus), Err(Error::Contract(_))));
        assert!(pivot(&mut state, &PivotDecision::Optimal).is_err());
    }

    #[test]
    fn solve_origin_feasible() {
        let (inst, lp) = lp_of(&[&[1]], &[0]);
        let opt = solve(&lp, &start_of(&inst, &lp)).unwrap();
        assert_eq!(opt.value, int(0));
        assert_eq!(opt.point.x, RVector::from_ints(&[0]).unwrap());
        assert_eq!(opt.point.relax, RVector::from_ints(&[0]).unwrap());
        // Δ starts basic at 0; one degenerate pivot reaches a dual-feasible basis.
        assert_eq!(opt.stats.pivots, 1);
        assert_eq!(opt.stats.objective_trace, vec![int(0), int(0)]);
    }

    #[test]
    fn solve_contradictory_pair() {
        // x ≤ 0 ∧ x ≥ 1: min over x of max(x,0) + max(1-x,0) is 1 on [0,1].
        let (inst, lp) = lp_of(&[&[-1], &[1]], &[0, 1]);
        let opt = solve(&lp, &start_of(&inst, &lp)).unwrap();
        assert_eq!(opt.value, int(1));
        assert_eq!(opt.dual, RVector::from_ints(&[1, 1]).unwrap());
        assert_eq!(
            inst.a().transpose_mul(&opt.dual).unwrap(),
            RVector::from_ints(&[0]).unwrap()
        );
        assert_eq!(opt.dual.dot(inst.b()).unwrap(), int(1));
    }

    #[test]
    fn solve_single_row() {
        let (inst, lp) = lp_of(&[&[2]], &[3]);
        let opt = solve(&lp, &start_of(&inst, &lp)).unwrap();
        assert_eq!(opt.value, int(0));
        assert_eq!(opt.point.x, RVector::new(vec![rat(3, 2)]).unwrap());
        assert!(check_point(&inst, &opt.point).unwrap());
    }

    #[test]
    fn refactor_period_does_not_change_result() {
        let (inst, lp) = lp_of(
            &[
                &[1, 2, -1],
                &[-3, 1, 2],
                &[2, -2, 1],
                &[1, 1, 1],
                &[-1, -1, -1],
            ],
            &[4, 5, -2, 3, -2],
        );
        let start = start_of(&inst, &lp);
        let a = solve_with_options(&lp, &start, SolverOptions { refactor_period: 1 }).unwrap();
        let b = solve(&lp, &start).unwrap();
        assert_eq!(a.value, b.value);
        assert_eq!(a.basis, b.basis);
        assert!(a.stats.refactorizations >= a.stats.pivots);
        assert!(SolverState::new(&lp, &start, SolverOptions { refactor_period: 0 }).is_err());
    }

    #[test]
    fn dual_is_boxed() {
        let (inst, lp) = lp_of(&[&[1, 1], &[-1, -1], &[1, -1]], &[2, -1, 5]);
        let opt = solve(&lp, &start_of(&inst, &lp)).unwrap();
        for y in opt.dual.iter() {
            assert!(!y.is_negative() && y <= &int(1), "dual entry {y}");
        }
        assert_eq!(opt.dual.dot(inst.b()).unwrap(), opt.value);
    }

    #[test]
    fn basis_bound_values() {
        assert_eq!(basis_bound(4, 1), BigUint::from(4u8));
        assert_eq!(basis_bound(10, 2), BigUint::from(45u8));
        assert_eq!(basis_bound(6, 3), BigUint::from(20u8));
    }

    #[test]
    fn basis_validation() {
        assert!(Basis::new(vec![0, 0], 4).is_err());
        assert!(Basis::new(vec![4], 4).is_err());
        assert!(Basis::new(vec![1, 3], 4).is_ok());
    }
}

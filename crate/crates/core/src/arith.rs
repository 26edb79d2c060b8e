//! Exact rational scalars and the dense vector/matrix kernel.
//!
//! Every number on the decision path is a [`Rational`] backed by
//! arbitrary-precision integers, always held in lowest terms with a positive
//! denominator. There is no floating-point code anywhere in this module.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Index, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number `p/q` in canonical lowest terms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `p/q`, normalizing sign and common factors.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Self> {
        let q = q.into();
        if q.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(p.into(), q)))
    }

    pub fn from_integer(v: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(v.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// `None` when dividing by zero.
    pub fn checked_div(&self, rhs: &Rational) -> Option<Rational> {
        if rhs.is_zero() {
            None
        } else {
            Some(Rational(&self.0 / &rhs.0))
        }
    }

    /// `max(self, 0)`.
    pub fn positive_part(&self) -> Rational {
        if self.is_positive() {
            self.clone()
        } else {
            Rational::zero()
        }
    }
}

/// Shorthand for `p/q` with machine integers; panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p, q).expect("nonzero denominator")
}

/// Shorthand for an integer-valued rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(v)
}

/// Same as [`Rational::new`]; named for the construction operation it implements.
pub fn rat_make(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Result<Rational> {
    Rational::new(p, q)
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_integer(v)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn all_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

/// Text form: optional `-`, decimal digits, optionally `/` and decimal digits.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let invalid = || Error::InvalidRational(s.to_string());
        let body = s.strip_prefix('-').unwrap_or(s);
        let (num, den) = match body.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (body, None),
        };
        if !all_digits(num) {
            return Err(invalid());
        }
        let mut p: BigInt = num.parse().map_err(|_| invalid())?;
        if s.starts_with('-') {
            p = -p;
        }
        match den {
            None => Ok(Rational::from_integer(p)),
            Some(d) => {
                if !all_digits(d) {
                    return Err(invalid());
                }
                let q: BigInt = d.parse().map_err(|_| invalid())?;
                Rational::new(p, q)
            }
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(&self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Panics on a zero divisor, like the integer types do.
forward_binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, v| acc + v)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |mut acc, v| {
            acc += v;
            acc
        })
    }
}

/// Fixed-length vector of rationals; never empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RVector(Vec<Rational>);

impl RVector {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyDimension("vector"));
        }
        Ok(RVector(entries))
    }

    pub fn zeros(len: usize) -> Result<Self> {
        RVector::new(vec![Rational::zero(); len])
    }

    pub fn from_ints(values: &[i64]) -> Result<Self> {
        RVector::new(values.iter().map(|&v| int(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; vectors are nonempty by construction.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&Rational> {
        self.0.get(i)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Rational> {
        self.0
    }

    pub fn dot(&self, other: &RVector) -> Result<Rational> {
        dot(self, other)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|v| !v.is_negative())
    }
}

impl Index<usize> for RVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl<'a> IntoIterator for &'a RVector {
    type Item = &'a Rational;
    type IntoIter = std::slice::Iter<'a, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for RVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Exact inner product `Σ uᵢvᵢ`.
pub fn dot(u: &RVector, v: &RVector) -> Result<Rational> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch {
            context: "dot",
            expected: u.len(),
            found: v.len(),
        });
    }
    Ok(u.iter().zip(v.iter()).map(|(a, b)| a * b).sum())
}

/// Dense row-major matrix with positive dimensions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if rows == 0 {
            return Err(Error::EmptyDimension("matrix rows"));
        }
        if cols == 0 {
            return Err(Error::EmptyDimension("matrix columns"));
        }
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                context: "matrix entries",
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(RMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                context: "matrix row length",
                expected: n,
                found: bad.len(),
            });
        }
        RMatrix::new(m, n, rows.into_iter().flatten().collect())
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        RMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| int(v)).collect())
                .collect(),
        )
    }

    pub fn identity(k: usize) -> Result<Self> {
        let mut entries = vec![Rational::zero(); k * k];
        for i in 0..k {
            entries[i * k + i] = Rational::one();
        }
        RMatrix::new(k, k, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        assert!(i < self.rows && j < self.cols, "matrix index out of bounds");
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.cols)
    }

    pub fn mat_vec(&self, x: &RVector) -> Result<RVector> {
        mat_vec(self, x)
    }

    /// `Aᵀy`.
    pub fn transpose_mul(&self, y: &RVector) -> Result<RVector> {
        if y.len() != self.rows {
            return Err(Error::DimensionMismatch {
                context: "transpose product",
                expected: self.rows,
                found: y.len(),
            });
        }
        let mut out = vec![Rational::zero(); self.cols];
        for (row, yi) in self.row_iter().zip(y.iter()) {
            if yi.is_zero() {
                continue;
            }
            for (acc, a) in out.iter_mut().zip(row) {
                *acc += &(a * yi);
            }
        }
        RVector::new(out)
    }
}

impl Index<(usize, usize)> for RMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        self.get(i, j)
    }
}

/// Exact `Ax`.
pub fn mat_vec(a: &RMatrix, x: &RVector) -> Result<RVector> {
    if a.cols != x.len() {
        return Err(Error::DimensionMismatch {
            context: "matrix-vector product",
            expected: a.cols,
            found: x.len(),
        });
    }
    RVector::new(
        a.row_iter()
            .map(|row| row.iter().zip(x.iter()).map(|(p, q)| p * q).sum())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;
    use proptest::prelude::*;

    fn canonical(r: &Rational) -> bool {
        r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
    }

    #[test]
    fn rat_make_normalizes() {
        let half = rat_make(2, 4).unwrap();
        assert_eq!(
            (half.numer().clone(), half.denom().clone()),
            (1.into(), 2.into())
        );
        let neg = rat_make(3, -6).unwrap();
        assert_eq!(neg.to_string(), "-1/2");
        assert_eq!(neg.denom(), &BigInt::from(2));
        let z = rat_make(0, 7).unwrap();
        assert_eq!(z.numer(), &BigInt::zero());
        assert_eq!(z.denom(), &BigInt::one());
        assert_eq!(z, Rational::zero());
    }

    #[test]
    fn rat_make_rejects_zero_denominator() {
        assert!(matches!(rat_make(1, 0), Err(Error::ZeroDenominator)));
    }

    #[test]
    fn dot_examples() {
        let ones = RVector::from_ints(&[1, 1, 1]).unwrap();
        let v = RVector::from_ints(&[1, 2, 3]).unwrap();
        assert_eq!(dot(&ones, &v).unwrap(), int(6));
        let z = RVector::from_ints(&[0, 0]).unwrap();
        let w = RVector::from_ints(&[5, -7]).unwrap();
        assert_eq!(dot(&z, &w).unwrap(), int(0));
        let u = RVector::new(vec![rat(1, 2), rat(1, 3)]).unwrap();
        let t = RVector::from_ints(&[2, 3]).unwrap();
        assert_eq!(dot(&u, &t).unwrap(), int(2));
    }

    #[test]
    fn dot_length_mismatch() {
        let u = RVector::from_ints(&[1, 2]).unwrap();
        let v = RVector::from_ints(&[1]).unwrap();
        assert!(matches!(dot(&u, &v), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn mat_vec_examples() {
        let id = RMatrix::identity(2).unwrap();
        let x = RVector::from_ints(&[3, 4]).unwrap();
        assert_eq!(mat_vec(&id, &x).unwrap(), x);
        let a = RMatrix::from_int_rows(&[&[2]]).unwrap();
        assert_eq!(
            mat_vec(&a, &RVector::from_ints(&[3]).unwrap()).unwrap(),
            RVector::from_ints(&[6]).unwrap()
        );
        let a = RMatrix::from_int_rows(&[&[1, 1], &[-1, -1]]).unwrap();
        assert_eq!(
            mat_vec(&a, &RVector::from_ints(&[1, 0]).unwrap()).unwrap(),
            RVector::from_ints(&[1, -1]).unwrap()
        );
        assert!(mat_vec(&a, &RVector::from_ints(&[1]).unwrap()).is_err());
    }

    #[test]
    fn transpose_mul_matches_columns() {
        let a = RMatrix::from_int_rows(&[&[-1], &[1]]).unwrap();
        let y = RVector::from_ints(&[1, 1]).unwrap();
        assert_eq!(
            a.transpose_mul(&y).unwrap(),
            RVector::from_ints(&[0]).unwrap()
        );
    }

    #[test]
    fn empty_shapes_rejected() {
        assert!(RVector::new(vec![]).is_err());
        assert!(RMatrix::new(0, 3, vec![]).is_err());
        assert!(RMatrix::new(2, 2, vec![int(1)]).is_err());
        assert!(RMatrix::from_rows(vec![vec![int(1)], vec![int(1), int(2)]]).is_err());
    }

    #[test]
    fn text_form() {
        assert_eq!("5".parse::<Rational>().unwrap().to_string(), "5");
        assert_eq!("10/2".parse::<Rational>().unwrap().to_string(), "5");
        assert_eq!("-6/4".parse::<Rational>().unwrap().to_string(), "-3/2");
        assert_eq!("-0".parse::<Rational>().unwrap().to_string(), "0");
        assert!(matches!(
            "1/0".parse::<Rational>(),
            Err(Error::ZeroDenominator)
        ));
        for bad in [
            "", "-", "+1", "1/", "/2", "1/-2", "1.5", "a", "1/2/3", "--1", " 1",
        ] {
            assert!(bad.parse::<Rational>().is_err(), "{bad:?} accepted");
        }
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..200).prop_map(|(p, q)| rat(p, q))
    }

    proptest! {
        #[test]
        fn field_laws_exact(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            for r in [&a + &b, &a * &b, &a - &c] {
                prop_assert!(canonical(&r));
            }
            if !b.is_zero() {
                prop_assert!(canonical(&(&a / &b)));
                prop_assert_eq!((&a / &b) * &b, a.clone());
            }
        }

        #[test]
        fn dot_commutes(pairs in proptest::collection::vec((arb_rational(), arb_rational()), 1..8)) {
            let (u, v): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
            let u = RVector::new(u).unwrap();
            let v = RVector::new(v).unwrap();
            prop_assert_eq!(dot(&u, &v).unwrap(), dot(&v, &u).unwrap());
        }

        #[test]
        fn text_round_trip(p in any::<i64>(), q in 1i64..i64::MAX) {
            let r = rat(p, q);
            let back: Rational = r.to_string().parse().unwrap();
            prop_assert!(canonical(&back));
            prop_assert_eq!(back, r);
        }
    }
}

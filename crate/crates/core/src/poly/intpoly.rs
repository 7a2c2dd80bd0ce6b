use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::coefficient::{Coefficient, RawCoefficient};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
}

/// Univariate polynomial in `t` with arbitrary-precision integer
/// coefficients, lowest degree first and without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    /// `t^d`.
    pub fn monomial(d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[d] = BigInt::one();
        IntPoly { coeffs }
    }

    /// `t − r`.
    pub fn linear(r: i64) -> Self {
        IntPoly::from_i64s(&[-r, 1])
    }

    /// `∏ (t − r)` over the given roots.
    pub fn from_roots(roots: impl IntoIterator<Item = i64>) -> Self {
        roots.into_iter().fold(IntPoly::one(), |acc, r| &acc * &IntPoly::linear(r))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// The quotient `r` with `self = q · r`, if one exists over the integers.
    pub fn divide_exact(&self, q: &IntPoly) -> Result<Option<IntPoly>, PolyError> {
        let Some(dq) = q.degree() else {
            return Err(PolyError::DivisionByZero);
        };
        let Some(dp) = self.degree() else {
            return Ok(Some(IntPoly::zero()));
        };
        if dp < dq {
            return Ok(None);
        }
        let lead = q.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dp - dq + 1];
        for i in (0..=dp - dq).rev() {
            let (c, r) = rem[i + dq].div_rem(lead);
            if !r.is_zero() {
                return Ok(None);
            }
            for (j, qc) in q.coeffs.iter().enumerate() {
                rem[i + j] -= &c * qc;
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Ok(None);
        }
        Ok(Some(IntPoly::new(quot)))
    }

    /// The multiset `{r_i}` (ascending) when `±self = ∏ (t − r_i)` with every
    /// `r_i` a non-negative integer.
    pub fn nonneg_integer_roots(&self) -> Option<Vec<u64>> {
        let d = self.degree()?;
        let mut p = if self.leading()?.is_negative() { -self.clone() } else { self.clone() };
        if !p.leading()?.is_one() {
            return None;
        }
        let mut roots = Vec::with_capacity(d);
        while let Some(deg) = p.degree().filter(|&d| d > 0) {
            // Roots are non-negative with sum −a_{d−1}, which bounds each root.
            let bound = -p.coeff(deg - 1);
            let bound = bound.to_u64()?;
            let root = (0..=bound).find(|&r| p.eval(&BigInt::from(r)).is_zero())?;
            p = p.divide_exact(&IntPoly::linear(root as i64)).ok()??;
            roots.push(root);
        }
        roots.sort_unstable();
        Some(roots)
    }

    /// Coefficients as `i64` where they fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for IntPoly {
    /// Renders as `t^3 - 5t^2 + 7t - 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            let power = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            if a.is_one() && i > 0 {
                write!(f, "{power}")?;
            } else {
                write!(f, "{a}{power}")?;
            }
        }
        Ok(())
    }
}

/// Serializes as a coefficient array, lowest degree first. Coefficients
/// outside the `i64` range are written as decimal strings.
impl Serialize for IntPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(Coefficient))
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let coeffs = Vec::<RawCoefficient>::deserialize(d)?
            .into_iter()
            .map(RawCoefficient::into_bigint)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn display() {
        assert_eq!(IntPoly::from_i64s(&[-3, 7, -5, 1]).to_string(), "t^3 - 5t^2 + 7t - 3");
        assert_eq!(IntPoly::from_i64s(&[0, -1]).to_string(), "-t");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(IntPoly::from_i64s(&[1, 0, 2]).to_string(), "2t^2 + 1");
    }

    #[test]
    fn exact_division() {
        let p = IntPoly::from_roots([1, 3]);
        assert_eq!(p.divide_exact(&p).unwrap(), Some(IntPoly::one()));
        assert_eq!(p.divide_exact(&IntPoly::linear(1)).unwrap(), Some(IntPoly::linear(3)));
        assert_eq!(p.divide_exact(&IntPoly::linear(2)).unwrap(), None);
        assert_eq!(p.divide_exact(&IntPoly::zero()), Err(PolyError::DivisionByZero));
        assert_eq!(IntPoly::from_i64s(&[1, 1]).divide_exact(&IntPoly::from_i64s(&[0, 2])).unwrap(), None);
    }

    #[test]
    fn integer_roots() {
        assert_eq!(IntPoly::from_i64s(&[3, -4, 1]).nonneg_integer_roots(), Some(vec![1, 3]));
        assert_eq!(IntPoly::from_i64s(&[1, 0, 1]).nonneg_integer_roots(), None);
        assert_eq!(IntPoly::from_roots([2, 0, 2]).nonneg_integer_roots(), Some(vec![0, 2, 2]));
        assert_eq!((-IntPoly::from_roots([5])).nonneg_integer_roots(), Some(vec![5]));
        assert_eq!(IntPoly::from_roots([-1, 2]).nonneg_integer_roots(), None);
        assert_eq!(IntPoly::one().nonneg_integer_roots(), Some(vec![]));
    }

    #[test]
    fn json_round_trip() {
        let p = IntPoly::from_i64s(&[-3, 7, -5, 1]);
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, "[-3,7,-5,1]");
        assert_eq!(serde_json::from_str::<IntPoly>(&text).unwrap(), p);
    }

    proptest! {
        #[test]
        fn product_divides_back(a in proptest::collection::vec(-20i64..20, 1..5),
                                b in proptest::collection::vec(-20i64..20, 1..5)) {
            let p = IntPoly::from_i64s(&a);
            let q = IntPoly::from_i64s(&b);
            prop_assume!(!q.is_zero());
            let prod = &p * &q;
            prop_assert_eq!(prod.divide_exact(&q).unwrap(), Some(p.clone()));
            let x = BigInt::from(7);
            prop_assert_eq!(prod.eval(&x), p.eval(&x) * q.eval(&x));
        }

        #[test]
        fn roots_recovered(mut roots in proptest::collection::vec(0i64..12, 0..6)) {
            let p = IntPoly::from_roots(roots.iter().copied());
            roots.sort_unstable();
            let expect: Vec<u64> = roots.iter().map(|&r| r as u64).collect();
            prop_assert_eq!(p.nonneg_integer_roots(), Some(expect));
        }
    }
}

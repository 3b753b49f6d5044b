//! Polynomials in one variable `t` with arbitrary-precision integer coefficients.
//!
//! Poincaré polynomials, Morse-Bott polynomials and the quotient `Q_t` all
//! live here. Every value is kept normalized: the highest stored coefficient
//! is nonzero and the zero polynomial is the empty coefficient vector.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::NotDivisible;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `1 + t`, the factor in the Morse-Bott relation.
    pub fn one_plus_t() -> Self {
        Self::from_coeffs([1, 1])
    }

    /// `c * t^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self { coeffs }
    }

    /// Builds a polynomial from coefficients in ascending degree; trailing
    /// zeros are dropped.
    pub fn from_coeffs<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut p = Self {
            coeffs: coeffs.into_iter().map(Into::into).collect(),
        };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `t^k * self`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Exact value at an integer point, by Horner's rule.
    pub fn eval(&self, x: impl Into<BigInt>) -> BigInt {
        let x = x.into();
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &x + c)
    }

    /// Divides by `1 + t` using synthetic division at the root `-1`.
    ///
    /// The quotient is unique when it exists; divisibility holds exactly when
    /// `self(-1) == 0`, and the error carries that value otherwise.
    pub fn div_one_plus_t(&self) -> Result<IntPoly, NotDivisible> {
        let Some(n) = self.degree() else {
            return Ok(Self::zero());
        };
        // b_{n-1} = a_n, b_{i-1} = a_i - b_i, remainder a_0 - b_0
        let mut quotient = vec![BigInt::zero(); n];
        let mut carry = BigInt::zero();
        for i in (1..=n).rev() {
            carry = &self.coeffs[i] - carry;
            quotient[i - 1] = carry.clone();
        }
        let remainder = &self.coeffs[0] - carry;
        if !remainder.is_zero() {
            return Err(NotDivisible { remainder });
        }
        Ok(Self::from_coeffs(quotient))
    }

    /// Lowest degree holding a negative coefficient.
    pub fn first_negative(&self) -> Option<usize> {
        self.coeffs.iter().position(Signed::is_negative)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)))
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)))
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
        IntPoly::from_coeffs(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;

            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Ascending degree, zero terms omitted: `1 + t + t^4 + t^5`, `t - t^2 + t^3`,
/// `2*t^3`. The zero polynomial renders as `0`.
impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let power = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            if k == 0 {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                f.write_str(&power)?;
            } else {
                write!(f, "{magnitude}*{power}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(c.iter().copied())
    }

    /// Schoolbook convolution on plain integers, kept apart from `Mul`.
    fn convolve(a: &[i64], b: &[i64]) -> Vec<i64> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for k in 0..out.len() {
            for i in 0..=k {
                if i < a.len() && k - i < b.len() {
                    out[k] += a[i] * b[k - i];
                }
            }
        }
        out
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p(&[1, 0, 0, 0, 0, 1]) + &p(&[0, 1, 0, 0, 1]), p(&[1, 1, 0, 0, 1, 1]));
        let q = p(&[3, 0, -2]);
        assert_eq!(&q + &IntPoly::zero(), q);
        assert!((&p(&[1, 1]) + &p(&[-1, -1])).is_zero());
        assert_eq!((&p(&[1, 1]) + &p(&[-1, -1])).coeffs().len(), 0);
    }

    #[test]
    fn mul_examples() {
        let expected = convolve(&[1, 1], &[0, 1, -1, 1]);
        assert_eq!(expected, vec![0, 1, 0, 0, 1]);
        assert_eq!(&IntPoly::one_plus_t() * &p(&[0, 1, -1, 1]), p(&expected));
        let q = p(&[4, -1, 7]);
        assert_eq!(&q * &IntPoly::one(), q);
        assert!((&q * &IntPoly::zero()).is_zero());
    }

    #[test]
    fn shift_examples() {
        assert_eq!(p(&[1, 0, 0, 1]).shift(1), p(&[0, 1, 0, 0, 1]));
        let q = p(&[2, 5]);
        assert_eq!(q.shift(0), q);
        assert!(IntPoly::zero().shift(7).is_zero());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[1, 1, 0, 0, 1, 1]).eval(-1), BigInt::from(0));
        assert_eq!(p(&[1, 0, 0, 0, 0, 1]).eval(-1), BigInt::from(0));
        assert_eq!(IntPoly::zero().eval(12), BigInt::from(0));
        assert_eq!(p(&[1, 2, 3]).eval(2), BigInt::from(17));
    }

    #[test]
    fn division_examples() {
        assert_eq!(p(&[0, 1, 0, 0, 1]).div_one_plus_t().unwrap(), p(&[0, 1, -1, 1]));
        assert!(IntPoly::zero().div_one_plus_t().unwrap().is_zero());
        let err = p(&[1, 0, 1]).div_one_plus_t().unwrap_err();
        assert_eq!(err.remainder, BigInt::from(2));
        // constant polynomials are divisible only when zero
        assert_eq!(p(&[5]).div_one_plus_t().unwrap_err().remainder, BigInt::from(5));
    }

    #[test]
    fn render() {
        assert_eq!(p(&[1, 1, 0, 0, 1, 1]).to_string(), "1 + t + t^4 + t^5");
        assert_eq!(p(&[0, 1, -1, 1]).to_string(), "t - t^2 + t^3");
        assert_eq!(p(&[1]).to_string(), "1");
        assert_eq!(p(&[-1]).to_string(), "-1");
        assert_eq!(p(&[0, -3, 2, 0, 0, -1]).to_string(), "-3*t + 2*t^2 - t^5");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn big_coefficients_do_not_overflow() {
        let big = IntPoly::monomial(BigInt::from(i64::MAX), 3);
        let sq = &big * &big;
        assert_eq!(sq.coeff(6), BigInt::from(i64::MAX) * BigInt::from(i64::MAX));
    }

    fn small_poly() -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(-20i64..=20, 0..8)
    }

    proptest! {
        #[test]
        fn eval_is_multiplicative(a in small_poly(), b in small_poly()) {
            let (pa, pb) = (p(&a), p(&b));
            let prod = &pa * &pb;
            for x in -2i64..=2 {
                prop_assert_eq!(prod.eval(x), pa.eval(x) * pb.eval(x));
            }
        }

        #[test]
        fn mul_matches_convolution(a in small_poly(), b in small_poly()) {
            prop_assert_eq!(&p(&a) * &p(&b), p(&convolve(&a, &b)));
        }

        #[test]
        fn division_round_trip(a in small_poly()) {
            let pa = p(&a);
            match pa.div_one_plus_t() {
                Ok(q) => {
                    prop_assert!(pa.eval(-1).is_zero());
                    prop_assert_eq!(&IntPoly::one_plus_t() * &q, pa);
                }
                Err(e) => {
                    prop_assert!(!e.remainder.is_zero());
                    prop_assert_eq!(e.remainder, pa.eval(-1));
                }
            }
        }

        #[test]
        fn results_stay_normalized(a in small_poly(), b in small_poly(), k in 0usize..4) {
            let (pa, pb) = (p(&a), p(&b));
            for r in [&pa + &pb, &pa - &pb, &pa * &pb, pa.shift(k)] {
                prop_assert!(r.coeffs().last().is_none_or(|c| !c.is_zero()));
            }
        }
    }
}

//! Exact scalar arithmetic: arbitrary-precision rationals and complex rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar, always stored reduced with a positive denominator.
/// Zero is represented uniquely as `0/1`.
pub type Rational = num_rational::BigRational;

/// Integer-valued rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The rational `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// A complex number with exact rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComplexRational {
    pub re: Rational,
    pub im: Rational,
}

impl ComplexRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        ComplexRational { re, im }
    }

    pub fn from_real(re: Rational) -> Self {
        ComplexRational {
            re,
            im: Rational::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::from_real(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_real(Rational::one())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        ComplexRational {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        ComplexRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `re^2 + im^2`, an exact nonnegative rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(ComplexRational {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }
}

impl Add for &ComplexRational {
    type Output = ComplexRational;
    fn add(self, rhs: &ComplexRational) -> ComplexRational {
        ComplexRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &ComplexRational {
    type Output = ComplexRational;
    fn sub(self, rhs: &ComplexRational) -> ComplexRational {
        ComplexRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &ComplexRational {
    type Output = ComplexRational;
    fn mul(self, rhs: &ComplexRational) -> ComplexRational {
        ComplexRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &ComplexRational {
    type Output = ComplexRational;
    fn neg(self) -> ComplexRational {
        ComplexRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl fmt::Display for ComplexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            if self.im.is_one() {
                return write!(f, "i");
            }
            if (-&self.im).is_one() {
                return write!(f, "-i");
            }
            return write!(f, "{}i", self.im);
        }
        if self.im.is_negative() {
            write!(f, "{} - {}i", self.re, -&self.im)
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_reduce() {
        let r = ratio(6, -4);
        assert_eq!(r, ratio(-3, 2));
        assert!(r.denom() > &BigInt::zero());
        assert_eq!(rat(0), ratio(0, 7));
    }

    #[test]
    fn complex_multiplication() {
        let i = ComplexRational::i();
        assert_eq!(&i * &i, ComplexRational::from_real(rat(-1)));
        let z = ComplexRational::new(rat(2), rat(-3));
        assert_eq!(&z * &z.conjugate(), ComplexRational::from_real(z.norm_sqr()));
        let inv = z.inverse().unwrap();
        assert_eq!(&z * &inv, ComplexRational::one());
        assert_eq!(ComplexRational::zero().inverse(), None);
    }

    #[test]
    fn complex_display() {
        assert_eq!(ComplexRational::new(rat(1), rat(-2)).to_string(), "1 - 2i");
        assert_eq!(ComplexRational::i().to_string(), "i");
        assert_eq!(ComplexRational::new(rat(0), ratio(1, 2)).to_string(), "1/2i");
        assert_eq!(ComplexRational::from_real(ratio(-1, 3)).to_string(), "-1/3");
    }
}

//! Exact scalar arithmetic: the field Q(i) of Gaussian rationals.
//!
//! Every invariant produced by this crate is an exact rational number (or
//! infinite), so all coefficient arithmetic happens over arbitrary-precision
//! rationals. There is no floating point anywhere in the kernel.

use num::rational::BigRational;
use num::{BigInt, One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A complex number `re + im*i` with exact rational parts.
///
/// Denominators are kept in canonical reduced form because `BigRational`
/// normalizes on construction. Division by zero panics, as for rationals.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        GaussianRational {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    /// Exact rational `num/den` as a real scalar. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        GaussianRational {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    pub fn from_rational(r: BigRational) -> Self {
        GaussianRational {
            re: r,
            im: BigRational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// `|z|^2 = re^2 + im^2`, an exact nonnegative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussianRational {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = GaussianRational::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        let inv = rhs.inverse().expect("division by zero Gaussian rational");
        self * &inv
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

/// Canonical printing. Pure reals print as rationals, pure imaginaries as
/// `c*i` (with `i` and `-i` shortened), mixed values as `a+b*i` / `a-b*i`.
/// The output re-parses to the same scalar.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let write_im = |f: &mut fmt::Formatter<'_>, im: &BigRational, lead_sign: bool| {
            let (mag, neg) = if im < &BigRational::zero() {
                (-im.clone(), true)
            } else {
                (im.clone(), false)
            };
            let sign = if neg {
                "-"
            } else if lead_sign {
                "+"
            } else {
                ""
            };
            if mag.is_one() {
                write!(f, "{}i", sign)
            } else {
                write!(f, "{}{}*i", sign, mag)
            }
        };
        if self.re.is_zero() {
            write_im(f, &self.im, false)
        } else {
            write!(f, "{}", self.re)?;
            write_im(f, &self.im, true)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(
            BigRational::from_integer(BigInt::from(re)),
            BigRational::from_integer(BigInt::from(im)),
        )
    }

    #[test]
    fn field_operations() {
        let a = g(1, 2);
        let b = g(3, -1);
        assert_eq!(&a + &b, g(4, 1));
        assert_eq!(&a * &b, g(5, 5));
        let q = &(&a * &b) / &b;
        assert_eq!(q, a);
        assert_eq!(&GaussianRational::i() * &GaussianRational::i(), g(-1, 0));
    }

    #[test]
    fn inverse_of_zero_is_none() {
        assert!(GaussianRational::zero().inverse().is_none());
    }

    #[test]
    fn conjugation_and_norm() {
        let a = g(3, 4);
        assert_eq!(
            a.norm_sqr(),
            BigRational::from_integer(BigInt::from(25))
        );
        assert_eq!(&a * &a.conj(), g(25, 0));
    }

    #[test]
    fn display_forms() {
        assert_eq!(g(0, 0).to_string(), "0");
        assert_eq!(g(3, 0).to_string(), "3");
        assert_eq!(g(0, 1).to_string(), "i");
        assert_eq!(g(0, -1).to_string(), "-i");
        assert_eq!(g(0, 2).to_string(), "2*i");
        assert_eq!(g(1, -2).to_string(), "1-2*i");
        assert_eq!(
            GaussianRational::from_ratio(-3, 2).to_string(),
            "-3/2"
        );
    }
}

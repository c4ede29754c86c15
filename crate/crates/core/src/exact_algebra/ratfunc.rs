use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Rational, UniPoly};
use crate::error::{Error, Result};

/// Element of `Q(x)` kept in lowest terms with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: UniPoly,
    den: UniPoly,
}

impl RatFunc {
    /// Builds `num / den`, reducing by the polynomial gcd. Panics if `den` is zero.
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = UniPoly::gcd(&num, &den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lc = den.leading_coeff().cloned().unwrap_or_else(Rational::one);
        let inv = lc.recip();
        RatFunc {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from(UniPoly::one())
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// The polynomial equal to `self`, or `NotPolynomial` when the reduced
    /// denominator has positive degree.
    pub fn to_poly(&self) -> Result<UniPoly> {
        if self.is_polynomial() {
            // the denominator is monic, hence exactly 1
            Ok(self.num.clone())
        } else {
            Err(Error::NotPolynomial(self.to_string()))
        }
    }

    pub fn recip(&self) -> Self {
        RatFunc::new(self.den.clone(), self.num.clone())
    }
}

impl From<UniPoly> for RatFunc {
    fn from(p: UniPoly) -> Self {
        RatFunc {
            num: p,
            den: UniPoly::one(),
        }
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    /// Panics when `rhs` is zero.
    fn div(self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl std::iter::Sum for RatFunc {
    fn sum<I: Iterator<Item = RatFunc>>(iter: I) -> RatFunc {
        iter.fold(RatFunc::zero(), |acc, f| &acc + &f)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_exact_quotient_to_polynomial() {
        // (x^2 - x) / x
        let f = RatFunc::new(UniPoly::from_ints([0, -1, 1]), UniPoly::x());
        assert_eq!(f.to_poly().unwrap(), UniPoly::from_ints([-1, 1]));
    }

    #[test]
    fn zero_over_power_of_x() {
        let f = RatFunc::new(UniPoly::zero(), UniPoly::int_monomial(1, 3));
        assert_eq!(f.to_poly().unwrap(), UniPoly::zero());
    }

    #[test]
    fn reciprocal_of_x_is_not_polynomial() {
        let f = RatFunc::new(UniPoly::one(), UniPoly::x());
        assert!(matches!(f.to_poly(), Err(Error::NotPolynomial(_))));
    }

    #[test]
    fn denominator_is_monic() {
        let f = RatFunc::new(UniPoly::from_ints([3]), UniPoly::int_monomial(-2, 2));
        assert_eq!(f.denominator(), &UniPoly::int_monomial(1, 2));
        assert_eq!(
            f.numerator(),
            &UniPoly::constant(Rational::new((-3).into(), 2.into()))
        );
    }

    #[test]
    fn opposite_reciprocals_cancel() {
        let a = RatFunc::new(UniPoly::one(), UniPoly::x());
        let b = RatFunc::new(UniPoly::one(), UniPoly::int_monomial(-1, 1));
        assert!((&a + &b).is_zero());
    }
}

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Univariate polynomial over the rationals in the generator `x`.
///
/// `coeffs[k]` is the coefficient of `x^k`. The vector never ends in a zero,
/// so the zero polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The generator `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^degree`.
    pub fn monomial(c: Rational, degree: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        UniPoly { coeffs }
    }

    /// Integer multiple of a power of `x`.
    pub fn int_monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        Self::monomial(Rational::from_integer(c.into()), degree)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints<I: IntoIterator<Item = i64>>(coeffs: I) -> Self {
        Self::from_coeffs(
            coeffs
                .into_iter()
                .map(|c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Lowest power of `x` with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Returns `(c, d)` when the polynomial is exactly `c * x^d` with `c != 0`.
    pub fn as_monomial(&self) -> Option<(&Rational, usize)> {
        let d = self.degree()?;
        if self.coeffs[..d].iter().all(Zero::is_zero) {
            Some((&self.coeffs[d], d))
        } else {
            None
        }
    }

    /// Zero, or a single term `c * x^d`.
    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.as_monomial().is_some()
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
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

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    /// Divide by the leading coefficient. The zero polynomial is returned as is.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    /// Euclidean division. Panics when `divisor` is zero.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = &rem[k + dd] / &lc;
            if q.is_zero() {
                continue;
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (Self::from_coeffs(quot), Self::from_coeffs(rem))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl From<Rational> for UniPoly {
    fn from(c: Rational) -> Self {
        UniPoly::constant(c)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

impl std::iter::Sum for UniPoly {
    fn sum<I: Iterator<Item = UniPoly>>(iter: I) -> UniPoly {
        iter.fold(UniPoly::zero(), |acc, p| &acc + &p)
    }
}

fn fmt_term(f: &mut fmt::Formatter<'_>, c: &Rational, k: usize, first: bool) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else {
        write!(f, " {} ", if neg { '-' } else { '+' })?;
    }
    if k == 0 {
        write!(f, "{abs}")
    } else if abs.is_one() {
        write!(f, "x^{k}")
    } else {
        write!(f, "{abs}*x^{k}")
    }
}

/// Terms in ascending degree with explicit powers: `-1 + 3/2*x^1 + x^3`.
impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            fmt_term(f, c, k, first)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = UniPoly::from_ints([1, 0, 0]);
        assert_eq!(p.degree(), Some(0));
        assert!(UniPoly::from_ints([0, 0]).is_zero());
        assert_eq!(UniPoly::zero().degree(), None);
    }

    #[test]
    fn div_rem_exact_and_inexact() {
        let p = UniPoly::from_ints([-1, 0, 1]);
        let d = UniPoly::from_ints([-1, 1]);
        let (quo, rem) = p.div_rem(&d);
        assert_eq!(quo, UniPoly::from_ints([1, 1]));
        assert!(rem.is_zero());

        let (quo, rem) = UniPoly::from_ints([1, 0, 1]).div_rem(&UniPoly::from_ints([0, 2]));
        assert_eq!(quo, UniPoly::from_coeffs(vec![q(0, 1), q(1, 2)]));
        assert_eq!(rem, UniPoly::from_ints([1]));
    }

    #[test]
    fn gcd_is_monic() {
        let a = UniPoly::from_ints([0, 0, 2]);
        let b = UniPoly::from_ints([0, 3, 3]);
        assert_eq!(UniPoly::gcd(&a, &b), UniPoly::x());
        assert!(UniPoly::gcd(&UniPoly::zero(), &UniPoly::zero()).is_zero());
    }

    #[test]
    fn display_ascending_with_explicit_powers() {
        let p = UniPoly::from_coeffs(vec![q(-1, 1), q(3, 2), q(0, 1), q(1, 1)]);
        assert_eq!(p.to_string(), "-1 + 3/2*x^1 + x^3");
        assert_eq!(UniPoly::int_monomial(-2, 3).to_string(), "-2*x^3");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }

    #[test]
    fn monomial_detection() {
        assert!(UniPoly::int_monomial(5, 2).is_homogeneous());
        assert!(!UniPoly::from_ints([1, 1]).is_homogeneous());
        assert_eq!(UniPoly::int_monomial(3, 4).valuation(), Some(4));
    }

    #[test]
    fn pow_and_eval() {
        let p = UniPoly::from_ints([1, 1]);
        assert_eq!(p.pow(3), UniPoly::from_ints([1, 3, 3, 1]));
        assert_eq!(p.pow(3).eval(&q(1, 1)), q(8, 1));
        assert_eq!(p.pow(0), UniPoly::one());
    }
}

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Subset;
use crate::exact_algebra::UniPoly;

/// Square-free monomial `(prod_{i in set} a_i) * y^y_power`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub set: Subset,
    pub y_power: u32,
}

impl Monomial {
    pub fn new(set: Subset, y_power: u32) -> Self {
        Monomial { set, y_power }
    }

    /// Degree in generators (cohomological degree is twice this).
    pub fn degree(&self) -> usize {
        self.set.len() + self.y_power as usize
    }

    /// Product in the ring, with `a_i^2` rewritten as `a_i y`.
    pub fn times(self, other: Monomial) -> Monomial {
        let overlap = self.set.intersection(other.set).len() as u32;
        Monomial {
            set: self.set.union(other.set),
            y_power: self.y_power + other.y_power + overlap,
        }
    }

    /// All monomials of degree `d` in `a_1..a_n, y`, in normal-form order.
    pub fn of_degree(n: usize, d: usize) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = Subset::all(n)
            .into_iter()
            .filter(|s| s.len() <= d)
            .map(|s| Monomial::new(s, (d - s.len()) as u32))
            .collect();
        out.sort();
        out
    }
}

/// Normal-form order: degree, then subset, then power of `y`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.degree(), self.set, self.y_power).cmp(&(other.degree(), other.set, other.y_power))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.set.elements().map(|i| format!("a{i}")).collect();
        match self.y_power {
            0 => {}
            1 => parts.push("y".into()),
            p => parts.push(format!("y^{p}")),
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Element of `Z[a_1..a_n, y] / (a_i y - a_i^2)` in the square-free monomial basis.
///
/// The monomials `a_S y^m` form a Z-basis of this ring, so the map below is a
/// canonical normal form.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CubeClass {
    terms: BTreeMap<Monomial, BigInt>,
}

impl CubeClass {
    pub fn zero() -> Self {
        CubeClass::default()
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::new(Subset::EMPTY, 0), BigInt::one())
    }

    pub fn monomial(m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut out = CubeClass::zero();
        out.add_term(m, c.into());
        out
    }

    /// The generator `a_i`.
    pub fn a(i: usize) -> Self {
        Self::monomial(Monomial::new(Subset::singleton(i), 0), 1)
    }

    /// The generator `y`.
    pub fn y() -> Self {
        Self::monomial(Monomial::new(Subset::EMPTY, 1), 1)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(terms: I) -> Self {
        let mut out = CubeClass::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree if all terms share one degree (the zero class has none).
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Largest index `i` for which `a_i` occurs.
    pub fn max_generator(&self) -> usize {
        self.terms
            .keys()
            .map(|m| m.set.max_element())
            .max()
            .unwrap_or(0)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return CubeClass::zero();
        }
        CubeClass {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(CubeClass::one(), |acc, _| &acc * self)
    }

    /// Substitutes `a_i -> x` for `i` in `at`, `a_i -> 0` otherwise, and `y -> x`.
    pub fn restrict(&self, at: Subset) -> UniPoly {
        let mut by_degree: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.set.is_subset_of(at) {
                *by_degree.entry(m.degree()).or_default() += c;
            }
        }
        by_degree
            .into_iter()
            .map(|(d, c)| UniPoly::int_monomial(c, d))
            .sum()
    }
}

impl Add for &CubeClass {
    type Output = CubeClass;
    fn add(self, rhs: &CubeClass) -> CubeClass {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &CubeClass {
    type Output = CubeClass;
    fn sub(self, rhs: &CubeClass) -> CubeClass {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &CubeClass {
    type Output = CubeClass;
    fn mul(self, rhs: &CubeClass) -> CubeClass {
        let mut out = CubeClass::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.times(*m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &CubeClass {
    type Output = CubeClass;
    fn neg(self) -> CubeClass {
        self.scale(&-BigInt::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CubeClass {
            type Output = CubeClass;
            fn $m(self, rhs: CubeClass) -> CubeClass {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for CubeClass {
    fn sum<I: Iterator<Item = CubeClass>>(iter: I) -> CubeClass {
        iter.fold(CubeClass::zero(), |acc, c| &acc + &c)
    }
}

impl std::iter::Product for CubeClass {
    fn product<I: Iterator<Item = CubeClass>>(iter: I) -> CubeClass {
        iter.fold(CubeClass::one(), |acc, c| &acc * &c)
    }
}

impl fmt::Display for CubeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let is_unit_monomial = m.degree() == 0;
            if abs.is_one() && !is_unit_monomial {
                write!(f, "{m}")?;
            } else if is_unit_monomial {
                write!(f, "{abs}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CubeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CubeClass({self})")
    }
}

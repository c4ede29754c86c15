//! Localization over isolated fixed points.
//!
//! The pushforward of an equivariant class to a point equals
//! `sum_F alpha|_F / e(nu_F)` in `Q(x)`, where the Euler class at `F` is
//! `(prod w_i) x^n`. Because the left side lies in `Z[x]`, every class with
//! known restrictions gives a constraint on the fixed-point data.

mod search;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow, Zero};

pub use search::{
    canonicalize, search_candidates, search_candidates_with, search_space_size, Candidate,
    SearchOptions, SearchParams, SearchResult, DEFAULT_SEARCH_CAP,
};

use crate::error::{Error, Result};
use crate::exact_algebra::{vandermonde_kernel, RatFunc, Rational, UniPoly};
use crate::fixed_point_data::{CountVector, FixedPoint, FixedPointData};

/// Equivariant Euler class of a representation: `(prod w_i) x^n`.
pub fn euler_class(weights: &[i64]) -> Result<UniPoly> {
    if weights.contains(&0) {
        return Err(Error::ZeroWeight {
            id: format!("{weights:?}"),
        });
    }
    let prod: BigInt = weights.iter().map(|&w| BigInt::from(w)).product();
    Ok(UniPoly::int_monomial(prod, weights.len()))
}

/// Elementary symmetric polynomials `sigma_0..sigma_n` of the weights.
pub fn elementary_symmetric(weights: &[i64]) -> Vec<BigInt> {
    let mut e = vec![BigInt::one()];
    for &w in weights {
        let w = BigInt::from(w);
        e.push(BigInt::zero());
        for k in (1..e.len()).rev() {
            let prev = &e[k - 1] * &w;
            e[k] += prev;
        }
    }
    e
}

/// Equivariant Chern classes `c_1..c_up_to` of a representation:
/// `c_i = sigma_i(weights) x^i`.
pub fn rep_chern_classes(weights: &[i64], up_to: usize) -> Vec<UniPoly> {
    let sigma = elementary_symmetric(weights);
    (1..=up_to)
        .map(|i| match sigma.get(i) {
            Some(s) => UniPoly::int_monomial(s.clone(), i),
            None => UniPoly::zero(),
        })
        .collect()
}

/// Restrictions of one equivariant class to every fixed point.
///
/// Every entry is zero or a single term `c x^d` for one common `d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionAssignment {
    values: BTreeMap<String, UniPoly>,
    degree: usize,
}

impl RestrictionAssignment {
    /// Checks that `values` covers every point of `data` and is homogeneous of degree `degree`.
    pub fn new(
        data: &FixedPointData,
        degree: usize,
        values: BTreeMap<String, UniPoly>,
    ) -> Result<Self> {
        for p in data.points() {
            let Some(v) = values.get(&p.id) else {
                return Err(Error::InvalidArgument(format!(
                    "no restriction given at `{}`",
                    p.id
                )));
            };
            if !(v.is_zero() || v.as_monomial().is_some_and(|(_, d)| d == degree)) {
                return Err(Error::InvalidArgument(format!(
                    "restriction {v} at `{}` is not homogeneous of degree {degree}",
                    p.id
                )));
            }
        }
        Ok(RestrictionAssignment { values, degree })
    }

    /// `F -> c_F x^degree` with `c_F = coeff(F)`.
    pub fn from_fn(
        data: &FixedPointData,
        degree: usize,
        coeff: impl Fn(&FixedPoint) -> Rational,
    ) -> Self {
        let values = data
            .points()
            .iter()
            .map(|p| (p.id.clone(), UniPoly::monomial(coeff(p), degree)))
            .collect();
        RestrictionAssignment { values, degree }
    }

    /// The class `1`.
    pub fn unit(data: &FixedPointData) -> Self {
        Self::from_fn(data, 0, |_| Rational::one())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn get(&self, id: &str) -> Option<&UniPoly> {
        self.values.get(id)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &UniPoly)> {
        self.values.iter()
    }

    /// Sum of two assignments of the same degree.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(
            self.degree, other.degree,
            "adding classes of different degree"
        );
        let values = self
            .values
            .iter()
            .map(|(id, v)| {
                (
                    id.clone(),
                    v + other.values.get(id).unwrap_or(&UniPoly::zero()),
                )
            })
            .collect();
        RestrictionAssignment {
            values,
            degree: self.degree,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RestrictionAssignment {
            values: self
                .values
                .iter()
                .map(|(id, v)| (id.clone(), v.scale(c)))
                .collect(),
            degree: self.degree,
        }
    }

    /// Pointwise product, which is the restriction of the cup product.
    pub fn mul(&self, other: &Self) -> Self {
        let values = self
            .values
            .iter()
            .map(|(id, v)| {
                (
                    id.clone(),
                    v * other.values.get(id).unwrap_or(&UniPoly::zero()),
                )
            })
            .collect();
        RestrictionAssignment {
            values,
            degree: self.degree + other.degree,
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        RestrictionAssignment {
            values: self
                .values
                .iter()
                .map(|(id, v)| (id.clone(), v.pow(e)))
                .collect(),
            degree: self.degree * e as usize,
        }
    }
}

/// `sum_F alpha(F) / e(nu_F)`, reduced.
pub fn integrate(data: &FixedPointData, alpha: &RestrictionAssignment) -> Result<RatFunc> {
    let mut total = RatFunc::zero();
    for p in data.points() {
        let Some(v) = alpha.get(&p.id) else {
            return Err(Error::InvalidArgument(format!(
                "no restriction given at `{}`",
                p.id
            )));
        };
        if v.is_zero() {
            continue;
        }
        let e = euler_class(&p.weights)?;
        total = &total + &RatFunc::new(v.clone(), e);
    }
    Ok(total)
}

/// Restrictions of the class `gamma = (n y - c_1)/2`: `gamma|_F = k_F x`.
pub fn gamma_restrictions(data: &FixedPointData) -> Result<RestrictionAssignment> {
    data.require_semifree()?;
    Ok(RestrictionAssignment::from_fn(data, 1, |p| {
        Rational::from_integer(BigInt::from(p.negative_count()))
    }))
}

/// Restrictions of the top Chern class `c_n` of the tangent representation.
pub fn top_chern_restrictions(data: &FixedPointData) -> RestrictionAssignment {
    let n = data.n();
    RestrictionAssignment::from_fn(data, n, |p| {
        Rational::from_integer(elementary_symmetric(&p.weights)[n].clone())
    })
}

/// Sums `sum_k N_k k^l (-1)^k` for `0 <= l < n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentReport {
    pub n: usize,
    pub counts: CountVector,
    /// `(l, sum)` pairs.
    pub sums: Vec<(usize, BigInt)>,
}

impl MomentReport {
    pub fn passed(&self) -> bool {
        self.sums.iter().all(|(_, s)| s.is_zero())
    }

    pub fn first_failure(&self) -> Option<usize> {
        self.sums
            .iter()
            .find(|(_, s)| !s.is_zero())
            .map(|(l, _)| *l)
    }
}

pub fn verify_moment_equations(data: &FixedPointData) -> Result<MomentReport> {
    data.require_semifree()?;
    let counts = data.counts();
    let n = data.n();
    let sums = (0..n)
        .map(|l| {
            let s: BigInt = counts
                .0
                .iter()
                .enumerate()
                .map(|(k, &nk)| {
                    let term = BigInt::from(nk) * Pow::pow(BigInt::from(k), l as u32);
                    if k % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum();
            (l, s)
        })
        .collect();
    Ok(MomentReport { n, counts, sums })
}

/// `N_k = N_0 C(n, k)`, read off the normalized moment-matrix kernel.
pub fn predict_counts(n: usize, n0: u64) -> CountVector {
    let kernel = vandermonde_kernel(n);
    let counts = kernel
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let unsigned = if k % 2 == 0 { a.clone() } else { -a.clone() };
            let v = unsigned * Rational::from_integer(BigInt::from(n0));
            u64::try_from(v.to_integer()).expect("binomial counts are nonnegative")
        })
        .collect();
    CountVector(counts)
}

/// Monomial `c_1^{e_1} ... c_n^{e_n}` in the equivariant Chern classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChernMonomial {
    pub exponents: Vec<u32>,
}

impl ChernMonomial {
    /// Total degree `sum i * e_i`.
    pub fn degree(&self) -> usize {
        self.exponents
            .iter()
            .enumerate()
            .map(|(i, &e)| (i + 1) * e as usize)
            .sum()
    }

    /// Value at a point with the given elementary symmetric functions, as the
    /// coefficient of `x^degree`.
    fn coefficient(&self, sigma: &[BigInt]) -> BigInt {
        self.exponents
            .iter()
            .enumerate()
            .map(|(i, &e)| Pow::pow(sigma.get(i + 1).cloned().unwrap_or_default(), e))
            .product()
    }

    /// All monomials in `c_1..c_n` with degree at most `max_degree`, ordered
    /// by degree, then lexicographically with higher powers of `c_1` first.
    pub fn up_to(n: usize, max_degree: usize) -> Vec<ChernMonomial> {
        let mut out = Vec::new();
        for d in 0..=max_degree {
            let mut cur = vec![0u32; n];
            partitions_into(d, 1, n, &mut cur, &mut out);
        }
        out
    }
}

fn partitions_into(
    rest: usize,
    part: usize,
    n: usize,
    cur: &mut Vec<u32>,
    out: &mut Vec<ChernMonomial>,
) {
    if rest == 0 {
        out.push(ChernMonomial {
            exponents: cur.clone(),
        });
        return;
    }
    if part > n {
        return;
    }
    for e in (0..=rest / part).rev() {
        cur[part - 1] = e as u32;
        partitions_into(rest - e * part, part + 1, n, cur, out);
    }
    cur[part - 1] = 0;
}

impl fmt::Display for ChernMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("c{}", i + 1)
                } else {
                    format!("c{}^{e}", i + 1)
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// One localization integral checked by [`consistency_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialCheck {
    pub monomial: ChernMonomial,
    pub value: RatFunc,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub n: usize,
    pub max_degree: usize,
    pub checks: Vec<MonomialCheck>,
}

impl ConsistencyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &MonomialCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn value_of(&self, monomial: &str) -> Option<&RatFunc> {
        self.checks
            .iter()
            .find(|c| c.monomial.to_string() == monomial)
            .map(|c| &c.value)
    }
}

/// Per-point data used to evaluate Chern monomials quickly.
pub(crate) struct PointProfile {
    pub sigma: Vec<BigInt>,
    pub weight_product: BigInt,
}

impl PointProfile {
    pub fn new(weights: &[i64]) -> Self {
        let sigma = elementary_symmetric(weights);
        let weight_product = sigma[weights.len()].clone();
        PointProfile {
            sigma,
            weight_product,
        }
    }

    /// Contribution `m|_F / e(nu_F)` as the coefficient of `x^{deg m - n}`.
    pub fn contribution(&self, m: &ChernMonomial) -> Rational {
        Rational::new(m.coefficient(&self.sigma), self.weight_product.clone())
    }
}

/// Whether a monomial integral with coefficient `coeff` times `x^{degree - n}`
/// is admissible: zero below the top degree, an integer otherwise.
pub(crate) fn admissible(coeff: &Rational, degree: usize, n: usize) -> bool {
    if degree < n {
        coeff.is_zero()
    } else {
        coeff.is_integer()
    }
}

/// Integrates every Chern monomial of degree at most `max_degree`. Below the
/// dimension an integral must vanish; from the dimension up it must be a
/// polynomial with integer coefficients.
pub fn consistency_check(data: &FixedPointData, max_degree: usize) -> ConsistencyReport {
    let n = data.n();
    let profiles: Vec<PointProfile> = data
        .points()
        .iter()
        .map(|p| PointProfile::new(&p.weights))
        .collect();
    let checks = ChernMonomial::up_to(n, max_degree)
        .into_iter()
        .map(|m| {
            let d = m.degree();
            let coeff: Rational = profiles.iter().map(|p| p.contribution(&m)).sum();
            let passed = admissible(&coeff, d, n);
            let value = if d >= n {
                RatFunc::from(UniPoly::monomial(coeff, d - n))
            } else {
                RatFunc::new(UniPoly::constant(coeff), UniPoly::int_monomial(1, n - d))
            };
            MonomialCheck {
                monomial: m,
                value,
                passed,
            }
        })
        .collect();
    ConsistencyReport {
        n,
        max_degree,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::{int, rational};
    use crate::hypercube::hypercube_data;

    fn pair(a: Vec<i64>, b: Vec<i64>) -> FixedPointData {
        let n = a.len();
        FixedPointData::new(n, vec![FixedPoint::new("p", a), FixedPoint::new("q", b)]).unwrap()
    }

    fn sphere() -> FixedPointData {
        pair(vec![1], vec![-1])
    }

    #[test]
    fn euler_examples() {
        assert_eq!(euler_class(&[1, 1]).unwrap(), UniPoly::int_monomial(1, 2));
        assert_eq!(
            euler_class(&[1, -1, -1]).unwrap(),
            UniPoly::int_monomial(1, 3)
        );
        assert_eq!(
            euler_class(&[-1, 1, 1]).unwrap(),
            UniPoly::int_monomial(-1, 3)
        );
        assert_eq!(
            euler_class(&[1, 1, -2]).unwrap(),
            UniPoly::int_monomial(-2, 3)
        );
        assert!(matches!(
            euler_class(&[1, 0]),
            Err(Error::ZeroWeight { .. })
        ));
    }

    #[test]
    fn chern_examples() {
        assert_eq!(
            rep_chern_classes(&[5], 1),
            vec![UniPoly::int_monomial(5, 1)]
        );
        assert_eq!(
            rep_chern_classes(&[1, 1], 2),
            vec![UniPoly::int_monomial(2, 1), UniPoly::int_monomial(1, 2)]
        );
        assert_eq!(
            rep_chern_classes(&[1, 1, -2], 3),
            vec![
                UniPoly::zero(),
                UniPoly::int_monomial(-3, 2),
                UniPoly::int_monomial(-2, 3)
            ]
        );
        assert_eq!(rep_chern_classes(&[1], 2)[1], UniPoly::zero());
    }

    #[test]
    fn integrate_unit_on_sphere() {
        let d = sphere();
        assert!(integrate(&d, &RestrictionAssignment::unit(&d))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn integrate_euler_class_counts_points() {
        let d = pair(vec![1, 1, -2], vec![-1, -1, 2]);
        let e = RestrictionAssignment::from_fn(&d, 3, |p| int(p.weights.iter().product::<i64>()));
        assert_eq!(
            integrate(&d, &e).unwrap(),
            RatFunc::from(UniPoly::constant(int(2)))
        );
    }

    #[test]
    fn integrate_gamma_on_square() {
        let d = hypercube_data(2);
        let g = gamma_restrictions(&d).unwrap();
        assert_eq!(g.get("{1,2}").unwrap(), &UniPoly::int_monomial(2, 1));
        assert!(integrate(&d, &g).unwrap().is_zero());
    }

    #[test]
    fn integrate_requires_every_point() {
        let d = sphere();
        let partial = RestrictionAssignment {
            values: BTreeMap::from([("p".to_string(), UniPoly::one())]),
            degree: 0,
        };
        assert!(integrate(&d, &partial).is_err());
        assert!(RestrictionAssignment::new(&d, 0, partial.values.clone()).is_err());
    }

    #[test]
    fn gamma_values_on_cube() {
        let d = hypercube_data(3);
        let g = gamma_restrictions(&d).unwrap();
        let vals: Vec<UniPoly> = d
            .points()
            .iter()
            .map(|p| g.get(&p.id).unwrap().clone())
            .collect();
        let expected: Vec<UniPoly> = [0, 1, 1, 1, 2, 2, 2, 3]
            .iter()
            .map(|&k| UniPoly::int_monomial(k, 1))
            .collect();
        assert_eq!(vals, expected);
        assert!(matches!(
            gamma_restrictions(&pair(vec![1, 1, -2], vec![-1, -1, 2])),
            Err(Error::NotSemifree { .. })
        ));
    }

    #[test]
    fn moment_equations() {
        let r = verify_moment_equations(&hypercube_data(3)).unwrap();
        assert!(r.passed());
        assert_eq!(r.sums.len(), 3);

        let d = FixedPointData::new(
            2,
            vec![
                FixedPoint::new("a", vec![1, 1]),
                FixedPoint::new("b", vec![-1, 1]),
                FixedPoint::new("c", vec![-1, -1]),
            ],
        )
        .unwrap();
        let r = verify_moment_equations(&d).unwrap();
        assert_eq!(r.first_failure(), Some(0));
        assert_eq!(r.sums[0].1, BigInt::from(1));

        assert!(verify_moment_equations(&sphere()).unwrap().passed());
    }

    #[test]
    fn predicted_counts() {
        assert_eq!(predict_counts(3, 1).0, vec![1, 3, 3, 1]);
        assert_eq!(predict_counts(1, 1).0, vec![1, 1]);
        assert_eq!(predict_counts(5, 2).0, vec![2, 10, 20, 20, 10, 2]);
    }

    #[test]
    fn monomial_enumeration() {
        let ms: Vec<String> = ChernMonomial::up_to(3, 3)
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(ms, ["1", "c1", "c1^2", "c2", "c1^3", "c1*c2", "c3"]);
        assert!(ChernMonomial::up_to(2, 4).iter().all(|m| m.degree() <= 4));
    }

    #[test]
    fn weight_two_pair_passes() {
        let r = consistency_check(&pair(vec![1, 1, -2], vec![-1, -1, 2]), 3);
        assert!(r.passed());
        assert_eq!(
            r.value_of("c3").unwrap(),
            &RatFunc::from(UniPoly::constant(int(2)))
        );
    }

    #[test]
    fn semifree_pair_fails_at_c1() {
        let r = consistency_check(&pair(vec![1, 1, -1], vec![-1, -1, 1]), 3);
        assert!(!r.passed());
        // the unit integrates to zero; c1 gives -2/x^2
        assert!(r.value_of("1").unwrap().is_zero());
        let c1 = r.value_of("c1").unwrap();
        assert_eq!(
            c1,
            &RatFunc::new(UniPoly::constant(int(-2)), UniPoly::int_monomial(1, 2))
        );
        assert!(c1.to_poly().is_err());
        assert_eq!(r.failures().next().unwrap().monomial.to_string(), "c1");
    }

    #[test]
    fn square_passes_with_euler_characteristic() {
        let r = consistency_check(&hypercube_data(2), 2);
        assert!(r.passed());
        assert_eq!(
            r.value_of("c2").unwrap(),
            &RatFunc::from(UniPoly::constant(int(4)))
        );
    }

    #[test]
    fn fractional_top_integral_fails() {
        // unit integrates to 1/(2x) - 1/x
        let d = pair(vec![2], vec![-1]);
        let r = consistency_check(&d, 1);
        assert!(!r.passed());
        assert_eq!(
            r.value_of("1").unwrap(),
            &RatFunc::new(UniPoly::constant(rational(-1, 2)), UniPoly::x())
        );
    }
}

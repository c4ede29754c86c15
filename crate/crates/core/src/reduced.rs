//! Integral cohomology of the reduced space at a regular level 0.
//!
//! The ring is `Z[a_1..a_n, y]` modulo
//!  1. `a_i y - a_i^2` for every `i`,
//!  2. `prod_{j in J} a_j` for every `J` with `mu(J) > 0`,
//!  3. `prod_{j not in J} (y - a_j)` for every `J` with `mu(J) < 0`.
//!
//! Relation 1 is absorbed by working in the square-free monomial basis of
//! [`CubeClass`]. Each graded piece is then the cokernel of a finite integer
//! matrix, whose free rank and torsion come from the Smith normal form.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::fixed_point_data::FixedPointData;
use crate::hypercube::{
    alpha_class, beta_class, equivariant_chern_series, moment_signs, CubeClass, ModelData,
    Monomial, Subset,
};
use crate::localization::predict_counts;
use crate::par::Execution;

/// Generators of the Kirwan kernel, indexed by subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealPresentation {
    pub n: usize,
    /// `(J, a_J)` for `mu(J) > 0`.
    pub positive: Vec<(Subset, CubeClass)>,
    /// `(J, prod_{j not in J}(y - a_j))` for `mu(J) < 0`.
    pub negative: Vec<(Subset, CubeClass)>,
}

impl IdealPresentation {
    /// Builds the presentation from the sign of the moment value at each subset
    /// (`true` for positive). Every subset of `{1..n}` must be present.
    pub fn from_signs(n: usize, signs: &BTreeMap<Subset, bool>) -> Result<Self> {
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        for j in Subset::all(n) {
            match signs.get(&j) {
                Some(true) => positive.push((j, alpha_class(j))),
                Some(false) => negative.push((j, beta_class(n, j))),
                None => {
                    return Err(Error::InvalidArgument(format!(
                        "no moment sign for subset {j}"
                    )));
                }
            }
        }
        Ok(IdealPresentation {
            n,
            positive,
            negative,
        })
    }

    /// All kernel generators with their degrees.
    pub fn generators(&self) -> impl Iterator<Item = (usize, &CubeClass)> {
        self.positive.iter().map(|(j, c)| (j.len(), c)).chain(
            self.negative
                .iter()
                .map(move |(j, c)| (self.n - j.len(), c)),
        )
    }
}

/// Presentation for `(P^1)^n` with `mu(J) = |J| - c`.
pub fn kernel_generators(model: &ModelData) -> Result<IdealPresentation> {
    IdealPresentation::from_signs(model.n, &moment_signs(model)?)
}

/// One graded piece of the quotient, in cohomological degree `2 * degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientSlice {
    pub degree: usize,
    pub basis: Vec<Monomial>,
    pub rank: usize,
    pub torsion: Vec<BigInt>,
    /// Hermite basis of the relation lattice in this degree, over `basis`.
    pub relations: crate::exact_algebra::IntMatrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedQuotient {
    pub n: usize,
    pub slices: Vec<QuotientSlice>,
}

impl GradedQuotient {
    pub fn ranks(&self) -> Vec<usize> {
        self.slices.iter().map(|s| s.rank).collect()
    }

    pub fn torsion_free(&self) -> bool {
        self.slices.iter().all(|s| s.torsion.is_empty())
    }

    pub fn euler_characteristic(&self) -> usize {
        self.ranks().iter().sum()
    }
}

fn monomial_vector(cls: &CubeClass, index: &BTreeMap<Monomial, usize>, len: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); len];
    for (m, c) in cls.terms() {
        v[index[m]] += c;
    }
    v
}

fn slice(pres: &IdealPresentation, d: usize) -> QuotientSlice {
    let n = pres.n;
    let basis = Monomial::of_degree(n, d);
    let index: BTreeMap<Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut rows: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    for (g_deg, g) in pres.generators() {
        if g_deg > d {
            continue;
        }
        for m in Monomial::of_degree(n, d - g_deg) {
            let prod = g * &CubeClass::monomial(m, 1);
            let v = monomial_vector(&prod, &index, basis.len());
            if v.iter().any(|e| !e.is_zero()) {
                rows.insert(v);
            }
        }
    }
    let m = crate::exact_algebra::IntMatrix::from_big_rows(basis.len(), rows.into_iter().collect());
    let hnf = m.hermite_normal_form();
    let snf = hnf.smith_normal_form();
    QuotientSlice {
        degree: d,
        rank: basis.len() - snf.rank,
        torsion: snf.torsion(),
        basis,
        relations: hnf,
    }
}

/// Free rank and torsion of the quotient in degrees `0..=max_degree`
/// (degree in generators; the cohomological degree is twice that).
pub fn graded_quotient(
    pres: &IdealPresentation,
    max_degree: usize,
    exec: Execution,
) -> GradedQuotient {
    GradedQuotient {
        n: pres.n,
        slices: exec.map_range(max_degree + 1, |d| slice(pres, d)),
    }
}

/// Image of a homogeneous class in one graded piece: the canonical coset
/// representative, listed over the slice basis. With no torsion the nonzero
/// terms lie on the non-pivot monomials, which form a basis of the piece.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedImage {
    pub degree: usize,
    pub terms: Vec<(Monomial, BigInt)>,
}

impl ReducedImage {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Reduces a homogeneous class modulo the kernel in its degree.
pub fn reduce_class(pres: &IdealPresentation, cls: &CubeClass) -> Result<ReducedImage> {
    if cls.is_zero() {
        return Ok(ReducedImage {
            degree: 0,
            terms: Vec::new(),
        });
    }
    let d = cls
        .homogeneous_degree()
        .ok_or_else(|| Error::InvalidArgument(format!("class {cls} is not homogeneous")))?;
    if cls.max_generator() > pres.n {
        return Err(Error::InvalidArgument(format!(
            "class {cls} uses generators beyond n = {}",
            pres.n
        )));
    }
    Ok(reduce_in_slice(&slice(pres, d), cls))
}

fn reduce_in_slice(s: &QuotientSlice, cls: &CubeClass) -> ReducedImage {
    let index: BTreeMap<Monomial, usize> =
        s.basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let v = monomial_vector(cls, &index, s.basis.len());
    let r = s.relations.reduce_mod_hnf(&v);
    ReducedImage {
        degree: s.degree,
        terms: s
            .basis
            .iter()
            .zip(r)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (*m, c))
            .collect(),
    }
}

/// Images of `c_1..c_up_to` of `prod (1 + t(2a_i - y))` in the quotient.
pub fn reduced_chern_series(pres: &IdealPresentation, up_to: usize) -> Vec<ReducedImage> {
    let series = equivariant_chern_series(pres.n, up_to.min(pres.n));
    let mut out: Vec<ReducedImage> = series
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if c.is_zero() {
                ReducedImage {
                    degree: i + 1,
                    terms: Vec::new(),
                }
            } else {
                reduce_in_slice(&slice(pres, i + 1), c)
            }
        })
        .collect();
    out.extend((pres.n + 1..=up_to).map(|d| ReducedImage {
        degree: d,
        terms: Vec::new(),
    }));
    out
}

/// `rank H^{2i}(M_red) = #{F : mu(F) < 0, k_F <= i} - #{F : mu(F) < 0, n - k_F <= i}`.
pub fn betti_by_counting(data: &FixedPointData, i: usize) -> Result<u64> {
    data.require_semifree()?;
    let counts = data.counts();
    let expected = predict_counts(data.n(), 1);
    if counts != expected {
        return Err(Error::CountMismatch {
            expected: expected.0,
            found: counts.0,
        });
    }
    let (_, minus) = data.split_by_moment_sign()?;
    let n = data.n();
    let below = minus.iter().filter(|p| p.negative_count() <= i).count();
    let dual = minus.iter().filter(|p| n - p.negative_count() <= i).count();
    below
        .checked_sub(dual)
        .map(|v| v as u64)
        .ok_or_else(|| Error::InvalidArgument(format!("negative Betti count in degree {}", 2 * i)))
}

/// `betti_by_counting` for `i = 0..=max_degree`.
pub fn betti_numbers_by_counting(data: &FixedPointData, max_degree: usize) -> Result<Vec<u64>> {
    (0..=max_degree)
        .map(|i| betti_by_counting(data, i))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoincareReport {
    pub ranks: Vec<usize>,
    pub passed: bool,
    pub problems: Vec<String>,
}

/// Checks `rank_{2i} = rank_{2(n-1-i)}` for `0 <= i <= n - 1` and that no
/// torsion appears.
pub fn poincare_check(q: &GradedQuotient, n: usize) -> PoincareReport {
    let ranks = q.ranks();
    let mut problems = Vec::new();
    let top = n.saturating_sub(1);
    if ranks.len() <= top {
        problems.push(format!(
            "quotient computed through degree {} only, need {}",
            2 * ranks.len().saturating_sub(1),
            2 * top
        ));
    } else {
        for i in 0..=top {
            if ranks[i] != ranks[top - i] {
                problems.push(format!(
                    "rank {} in degree {} but {} in degree {}",
                    ranks[i],
                    2 * i,
                    ranks[top - i],
                    2 * (top - i)
                ));
            }
        }
    }
    for s in &q.slices {
        if !s.torsion.is_empty() {
            problems.push(format!(
                "torsion {:?} in degree {}",
                s.torsion,
                2 * s.degree
            ));
        }
    }
    PoincareReport {
        passed: problems.is_empty(),
        ranks,
        problems,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::{rational, IntMatrix};

    fn model(n: usize, num: i64, den: i64) -> ModelData {
        ModelData::new(n, rational(num, den))
    }

    #[test]
    fn generators_for_sphere() {
        let p = kernel_generators(&model(1, 1, 2)).unwrap();
        assert_eq!(p.positive, vec![(Subset::singleton(1), CubeClass::a(1))]);
        assert_eq!(
            p.negative,
            vec![(Subset::EMPTY, &CubeClass::y() - &CubeClass::a(1))]
        );
    }

    #[test]
    fn generators_for_balanced_cube() {
        let p = kernel_generators(&model(3, 3, 2)).unwrap();
        assert_eq!(p.positive.len(), 4);
        assert!(p.positive.iter().all(|(j, _)| j.len() >= 2));
        assert_eq!(p.negative.len(), 4);
        assert!(p.negative.iter().all(|(j, _)| j.len() <= 1));
    }

    #[test]
    fn integer_offset_is_critical() {
        for n in 1..=3 {
            assert!(matches!(
                kernel_generators(&model(n, 1, 1)),
                Err(Error::ZeroIsCritical { .. })
            ));
        }
    }

    #[test]
    fn quotient_of_sphere_is_a_point() {
        let p = kernel_generators(&model(1, 1, 2)).unwrap();
        let q = graded_quotient(&p, 2, Execution::Sequential);
        assert_eq!(q.ranks(), vec![1, 0, 0]);
        assert!(q.torsion_free());
    }

    #[test]
    fn quotient_of_balanced_cube() {
        let p = kernel_generators(&model(3, 3, 2)).unwrap();
        let q = graded_quotient(&p, 3, Execution::Parallel);
        assert_eq!(q.ranks(), vec![1, 4, 1, 0]);
        assert!(q.torsion_free());
        assert_eq!(q.euler_characteristic(), 6);
    }

    #[test]
    fn quotient_near_minimum_of_square() {
        let p = kernel_generators(&model(2, 1, 2)).unwrap();
        let q = graded_quotient(&p, 2, Execution::Sequential);
        assert_eq!(q.ranks(), vec![1, 1, 0]);
    }

    #[test]
    fn betti_counting_balanced_cube() {
        let d = model(3, 3, 2).data();
        assert_eq!(betti_by_counting(&d, 0).unwrap(), 1);
        assert_eq!(betti_by_counting(&d, 1).unwrap(), 4);
        assert_eq!(betti_by_counting(&d, 2).unwrap(), 1);
        assert_eq!(betti_by_counting(&d, 3).unwrap(), 0);
    }

    #[test]
    fn chern_images() {
        let p = kernel_generators(&model(1, 1, 2)).unwrap();
        assert!(reduced_chern_series(&p, 1)[0].is_zero());

        let p = kernel_generators(&model(3, 3, 2)).unwrap();
        let c = reduced_chern_series(&p, 3);
        assert!(!c[0].is_zero());
        assert_eq!(c[0].degree, 1);
        assert!(c[2].is_zero());

        let unit = reduce_class(&p, &CubeClass::one()).unwrap();
        assert_eq!(unit.degree, 0);
        assert_eq!(
            unit.terms,
            vec![(Monomial::new(Subset::EMPTY, 0), BigInt::from(1))]
        );
    }

    #[test]
    fn reduce_rejects_inhomogeneous() {
        let p = kernel_generators(&model(2, 1, 2)).unwrap();
        assert!(reduce_class(&p, &(&CubeClass::one() + &CubeClass::y())).is_err());
    }

    #[test]
    fn duality() {
        let p = kernel_generators(&model(3, 3, 2)).unwrap();
        assert!(poincare_check(&graded_quotient(&p, 2, Execution::Sequential), 3).passed);
        let p = kernel_generators(&model(2, 1, 2)).unwrap();
        assert!(poincare_check(&graded_quotient(&p, 1, Execution::Sequential), 2).passed);

        let fake = GradedQuotient {
            n: 2,
            slices: [1, 2]
                .iter()
                .enumerate()
                .map(|(d, &rank)| QuotientSlice {
                    degree: d,
                    basis: Vec::new(),
                    rank,
                    torsion: Vec::new(),
                    relations: IntMatrix::zeros(0, 0),
                })
                .collect(),
        };
        let r = poincare_check(&fake, 2);
        assert!(!r.passed);
        assert_eq!(r.problems.len(), 2);
    }
}

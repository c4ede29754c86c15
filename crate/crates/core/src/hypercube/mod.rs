//! The model space `(P^1)^n` with the diagonal circle action.
//!
//! Fixed points are subsets `J` of `{1, ..., n}`: the point sits at the pole
//! with weight `-1` for the factors in `J` and `+1` for the others, so its
//! index is `2|J|`. Equivariant classes live in
//! `Z[a_1..a_n, y] / (a_i y - a_i^2)` and restrict to `J` by `a_i -> x` for
//! `i in J`, `a_i -> 0` otherwise, `y -> x`.
//!
//! Two sign conventions coexist here. The tangent weights above give
//! `c_1|_J = (n - 2|J|) x`, while restricting the displayed Chern series
//! `prod (1 + t(2a_i - y))` gives `(2|J| - n) x`. The two agree after
//! `x -> -x`; [`chern_sign_relation_holds`] checks exactly that.

mod class;
mod subset;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use class::{CubeClass, Monomial};
pub use subset::{Subset, MAX_N};

use crate::error::{Error, Result};
use crate::exact_algebra::{IntMatrix, Rational, UniPoly};
use crate::fixed_point_data::{FixedPoint, FixedPointData};
use crate::localization::rep_chern_classes;
use crate::par::Execution;

/// Tangent weights at the fixed point `J`: `-1` on factors in `J`, `+1` elsewhere.
pub fn point_weights(n: usize, j: Subset) -> Vec<i64> {
    (1..=n)
        .map(|i| if j.contains(i) { -1 } else { 1 })
        .collect()
}

/// Fixed-point data of `(P^1)^n`; point ids are the subsets written as `{1,3}`.
pub fn hypercube_data(n: usize) -> FixedPointData {
    let points = Subset::all(n)
        .into_iter()
        .map(|j| FixedPoint::new(j.to_string(), point_weights(n, j)))
        .collect();
    FixedPointData::new(n, points).expect("hypercube data is valid")
}

/// `(P^1)^n` with moment map `mu(J) = |J| - offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelData {
    pub n: usize,
    pub offset: Rational,
}

impl ModelData {
    pub fn new(n: usize, offset: Rational) -> Self {
        ModelData { n, offset }
    }

    /// Offset `n/2` for odd `n` and `n/2 + 1/2` for even `n`, so 0 is a regular value.
    pub fn balanced(n: usize) -> Self {
        let num = if n % 2 == 1 { n } else { n + 1 };
        ModelData::new(n, Rational::new(BigInt::from(num), BigInt::from(2)))
    }

    pub fn moment(&self, j: Subset) -> Rational {
        Rational::from_integer(BigInt::from(j.len())) - &self.offset
    }

    /// True when no fixed point lies on the zero level.
    pub fn zero_is_regular(&self) -> bool {
        Subset::all(self.n)
            .into_iter()
            .all(|j| !self.moment(j).is_zero())
    }

    /// Hypercube data carrying the moment values.
    pub fn data(&self) -> FixedPointData {
        let points = Subset::all(self.n)
            .into_iter()
            .map(|j| {
                FixedPoint::new(j.to_string(), point_weights(self.n, j)).with_moment(self.moment(j))
            })
            .collect();
        FixedPointData::new(self.n, points).expect("hypercube data is valid")
    }
}

pub fn restrict_class(cls: &CubeClass, j: Subset) -> UniPoly {
    cls.restrict(j)
}

/// `prod_{j in J} a_j`; restricts to `x^{|J|}` at every `J' ⊇ J` and to 0 elsewhere.
pub fn alpha_class(j: Subset) -> CubeClass {
    j.elements().map(CubeClass::a).product()
}

/// `prod_{j not in J} (y - a_j)`; restricts to `x^{n-|J|}` at every `J' ⊆ J`
/// and to 0 elsewhere.
pub fn beta_class(n: usize, j: Subset) -> CubeClass {
    j.complement(n)
        .elements()
        .map(|i| &CubeClass::y() - &CubeClass::a(i))
        .product()
}

/// Coefficients `c_1..c_up_to` of `prod_i (1 + t(2a_i - y))`.
pub fn equivariant_chern_series(n: usize, up_to: usize) -> Vec<CubeClass> {
    assert!(up_to <= n, "Chern classes above c_n vanish");
    // series[k] = coefficient of t^k
    let mut series = vec![CubeClass::one()];
    for i in 1..=n {
        let lin = &CubeClass::a(i).scale(&BigInt::from(2)) - &CubeClass::y();
        let mut next = vec![CubeClass::zero(); series.len() + 1];
        for (k, c) in series.iter().enumerate() {
            next[k] = &next[k] + c;
            next[k + 1] = &next[k + 1] + &(c * &lin);
        }
        series = next;
    }
    series.into_iter().skip(1).take(up_to).collect()
}

/// Checks `c_i|_J = (-1)^i sigma_i(weights(J)) x^i` for every `i` and `J`:
/// the series and the tangent weights agree up to `x -> -x`.
pub fn chern_sign_relation_holds(n: usize) -> bool {
    let series = equivariant_chern_series(n, n);
    Subset::all(n).into_iter().all(|j| {
        let from_weights = rep_chern_classes(&point_weights(n, j), n);
        series
            .iter()
            .zip(&from_weights)
            .enumerate()
            .all(|(i, (c, w))| {
                let sign = if (i + 1) % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                c.restrict(j) == w.scale(&Rational::from_integer(sign))
            })
    })
}

/// Rank of the restriction matrix in one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeRank {
    /// Degree in generators; the cohomological degree is `2 * degree`.
    pub degree: usize,
    pub basis_size: usize,
    pub rank: usize,
}

impl DegreeRank {
    pub fn full(&self) -> bool {
        self.rank == self.basis_size
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InjectivityReport {
    pub n: usize,
    pub degrees: Vec<DegreeRank>,
}

impl InjectivityReport {
    pub fn passed(&self) -> bool {
        self.degrees.iter().all(DegreeRank::full)
    }
}

/// Upper bound on `n` accepted by [`injectivity_rank_check`].
pub const INJECTIVITY_MAX_N: usize = 12;

/// For each degree `d <= n`, checks that the restrictions of
/// `{alpha_class(J) * x^{d-|J|} : |J| <= d}` to all `2^n` fixed points are
/// linearly independent over the rationals.
pub fn injectivity_rank_check(n: usize, exec: Execution) -> Result<InjectivityReport> {
    if n > INJECTIVITY_MAX_N {
        return Err(Error::InvalidArgument(format!(
            "injectivity check limited to n <= {INJECTIVITY_MAX_N}"
        )));
    }
    let points = Subset::all(n);
    let degrees = exec.map_range(n + 1, |d| {
        let basis: Vec<Subset> = points.iter().copied().filter(|j| j.len() <= d).collect();
        let rows: Vec<Vec<BigInt>> = basis
            .iter()
            .map(|&j| {
                let cls = alpha_class(j);
                points
                    .iter()
                    .map(|&p| {
                        let r = cls.restrict(p).shift(d - j.len());
                        r.coeff(d).to_integer()
                    })
                    .collect()
            })
            .collect();
        let m = IntMatrix::from_big_rows(points.len(), rows);
        DegreeRank {
            degree: d,
            basis_size: basis.len(),
            rank: m.rank(),
        }
    });
    Ok(InjectivityReport { n, degrees })
}

/// Coefficients `p_J(x)` with `cls = sum_J p_J * alpha_class(J)`.
pub type BasisExpansion = BTreeMap<Subset, UniPoly>;

/// Expands `cls` over the alpha basis by a triangular solve on restrictions,
/// visiting subsets in increasing order so every proper subset is done first.
///
/// Only nonzero coefficients are returned.
pub fn express_in_basis(n: usize, cls: &CubeClass) -> Result<BasisExpansion> {
    if cls.max_generator() > n {
        return Err(Error::InvalidArgument(format!(
            "class mentions a_{} but n = {n}",
            cls.max_generator()
        )));
    }
    let mut out = BasisExpansion::new();
    for j in Subset::all(n) {
        let mut r = cls.restrict(j);
        for (k, p) in &out {
            if k.is_subset_of(j) {
                r = &r - &p.shift(k.len());
            }
        }
        if r.is_zero() {
            continue;
        }
        let v = r.valuation().unwrap_or(0);
        if v < j.len() {
            return Err(Error::NotInModule(format!(
                "coefficient at {j} has a negative power of x: ({r}) / x^{}",
                j.len()
            )));
        }
        let p = UniPoly::from_coeffs(r.coeffs()[j.len()..].to_vec());
        if !p.has_integer_coeffs() {
            return Err(Error::NotInModule(format!(
                "coefficient at {j} is not integral: {p}"
            )));
        }
        out.insert(j, p);
    }
    Ok(out)
}

/// Rebuilds `sum_J p_J(y) * alpha_class(J)` from an expansion.
pub fn from_expansion(expansion: &BasisExpansion) -> Result<CubeClass> {
    let mut out = CubeClass::zero();
    for (&j, p) in expansion {
        for (k, c) in p.coeffs().iter().enumerate() {
            if !c.is_integer() {
                return Err(Error::NotInModule(format!("non-integral coefficient {c}")));
            }
            out.add_term(Monomial::new(j, k as u32), c.to_integer());
        }
    }
    Ok(out)
}

/// Checks `alpha_j|_J * x^{n-|J|} = beta_J|_{{j}} * x` for all `J` and `j`.
pub fn b_class_identity_holds(n: usize) -> bool {
    Subset::all(n).into_iter().all(|jset| {
        let beta = beta_class(n, jset);
        (1..=n).all(|j| {
            let lhs = alpha_class(Subset::singleton(j))
                .restrict(jset)
                .shift(n - jset.len());
            let rhs = beta.restrict(Subset::singleton(j)).shift(1);
            lhs == rhs
        })
    })
}

/// Sign of the moment value at each subset, failing on a zero value.
pub fn moment_signs(model: &ModelData) -> Result<BTreeMap<Subset, bool>> {
    Subset::all(model.n)
        .into_iter()
        .map(|j| {
            let m = model.moment(j);
            if m.is_zero() {
                Err(Error::ZeroIsCritical { id: j.to_string() })
            } else {
                Ok((j, m.is_positive()))
            }
        })
        .collect()
}

//! Forced restriction data of the degree-2 generators `a_1..a_n`.
//!
//! For semifree data with binomial counts and `N_0 = 1`, the classes `a_j`
//! normalized at the index-0 and index-2 points have their level sums, their
//! squared level sums, and hence their values pinned down by the moment
//! constraints. The pipeline derives those quantities by completing partially
//! known vectors in the kernel of a moment matrix, then checks a restriction
//! table against them and reads off the identification of fixed points with
//! subsets of `{1, ..., n}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact_algebra::{binomial, complete_in_kernel, Rational, UniPoly};
use crate::fixed_point_data::{CountVector, FixedPointData};
use crate::hypercube::{alpha_class, b_class_identity_holds, Subset};
use crate::localization::predict_counts;
use crate::par::Execution;

/// `sum_i a_j|_{p_k^i} = C(n-1, k-1) x`; zero at `k = 0`.
pub fn forced_level_sum(n: usize, k: usize) -> UniPoly {
    if k == 0 {
        return UniPoly::zero();
    }
    UniPoly::int_monomial(binomial(n as u64 - 1, k as u64 - 1), 1)
}

/// `sum_i (a_j|_{p_k^i})^2 = C(n-1, k-1) x^2`; zero at `k = 0`.
pub fn forced_level_square_sum(n: usize, k: usize) -> UniPoly {
    if k == 0 {
        return UniPoly::zero();
    }
    UniPoly::int_monomial(binomial(n as u64 - 1, k as u64 - 1), 2)
}

/// Integers `c_1..c_N` with `sum c_i = sum c_i^2 = S` satisfy
/// `sum c_i (c_i - 1) = 0`, and each term is nonnegative, so every `c_i` is 0 or 1.
/// Returns the multiset (ones first).
pub fn solve_value_multiset(sum: i64, square_sum_matches: bool, count: usize) -> Result<Vec<i64>> {
    if !square_sum_matches {
        return Err(Error::InvalidArgument(
            "values are only forced when the squared sum equals the sum".into(),
        ));
    }
    if sum < 0 || sum as u64 > count as u64 {
        return Err(Error::NoIntegerSolution { sum, count });
    }
    let ones = sum as usize;
    Ok(std::iter::repeat_n(1, ones)
        .chain(std::iter::repeat_n(0, count - ones))
        .collect())
}

/// Restrictions `a_j|_F = c x` of the generators, stored as the integer `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionTable {
    n: usize,
    ids: Vec<String>,
    levels: Vec<usize>,
    /// `entries[j - 1][column]`
    entries: Vec<Vec<BigInt>>,
}

impl RestrictionTable {
    /// `entries[j - 1][c]` is the coefficient of `x` in `a_j` at the `c`-th
    /// point of `data` (in the data's `(index, id)` order).
    pub fn new(data: &FixedPointData, entries: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = data.n();
        if entries.len() != n || entries.iter().any(|r| r.len() != data.len()) {
            return Err(Error::InvalidArgument(format!(
                "restriction table must be {n} x {}",
                data.len()
            )));
        }
        Ok(RestrictionTable {
            n,
            ids: data.points().iter().map(|p| p.id.clone()).collect(),
            levels: data.points().iter().map(|p| p.negative_count()).collect(),
            entries,
        })
    }

    /// Builds a table from per-point rows `id -> (a_1|_F, ..., a_n|_F)`.
    pub fn from_point_rows(
        data: &FixedPointData,
        rows: &BTreeMap<String, Vec<BigInt>>,
    ) -> Result<Self> {
        let n = data.n();
        let mut entries = vec![Vec::with_capacity(data.len()); n];
        for p in data.points() {
            let Some(row) = rows.get(&p.id) else {
                return Err(Error::InvalidArgument(format!(
                    "no table row for `{}`",
                    p.id
                )));
            };
            if row.len() != n {
                return Err(Error::InvalidArgument(format!(
                    "table row for `{}` has {} entries, expected {n}",
                    p.id,
                    row.len()
                )));
            }
            for (j, v) in row.iter().enumerate() {
                entries[j].push(v.clone());
            }
        }
        if let Some(extra) = rows.keys().find(|id| data.point(id).is_none()) {
            return Err(Error::InvalidArgument(format!(
                "table row for unknown point `{extra}`"
            )));
        }
        Self::new(data, entries)
    }

    /// Restrictions of the model classes `alpha_j` to the points of `(P^1)^n`,
    /// where `data` must be hypercube data with subset ids.
    pub fn from_model(data: &FixedPointData) -> Result<Self> {
        let n = data.n();
        let subsets: Vec<Subset> = data
            .points()
            .iter()
            .map(|p| p.id.parse::<Subset>())
            .collect::<Result<_>>()?;
        let entries = (1..=n)
            .map(|j| {
                let a = alpha_class(Subset::singleton(j));
                subsets
                    .iter()
                    .map(|&s| a.restrict(s).coeff(1).to_integer())
                    .collect()
            })
            .collect();
        Self::new(data, entries)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn level_of(&self, column: usize) -> usize {
        self.levels[column]
    }

    fn column(&self, id: &str) -> Option<usize> {
        self.ids.iter().position(|i| i == id)
    }

    /// `a_j|_F` for `j` in `1..=n`.
    pub fn get(&self, j: usize, id: &str) -> Option<UniPoly> {
        let c = self.column(id)?;
        Some(UniPoly::int_monomial(
            self.entries.get(j.checked_sub(1)?)?[c].clone(),
            1,
        ))
    }

    pub fn coeff(&self, j: usize, column: usize) -> &BigInt {
        &self.entries[j - 1][column]
    }

    /// Columns belonging to points of level `k`.
    fn level_columns(&self, k: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.ids.len()).filter(move |&c| self.levels[c] == k)
    }

    /// Observed `sum_i a_j|_{p_k^i}` as a coefficient of `x`.
    pub fn level_sum(&self, j: usize, k: usize) -> BigInt {
        self.level_columns(k).map(|c| self.coeff(j, c)).sum()
    }

    /// Observed `sum_i (a_j|_{p_k^i})^2` as a coefficient of `x^2`.
    pub fn level_square_sum(&self, j: usize, k: usize) -> BigInt {
        self.level_columns(k)
            .map(|c| self.coeff(j, c) * self.coeff(j, c))
            .sum()
    }
}

/// Number of generators restricting to `x` at the point `id`.
pub fn per_point_count(table: &RestrictionTable, id: &str) -> Result<usize> {
    let c = table
        .column(id)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown point `{id}`")))?;
    let mut count = 0;
    for j in 1..=table.n {
        let v = table.coeff(j, c);
        if v.is_one() {
            count += 1;
        } else if !v.is_zero() {
            return Err(Error::TableViolation(format!(
                "a_{j} restricts to {v}x at `{id}`, expected 0 or x"
            )));
        }
    }
    Ok(count)
}

/// Checks that every point `F` has exactly `k_F` generators restricting to `x`.
pub fn check_point_counts(table: &RestrictionTable) -> Result<()> {
    for (c, id) in table.ids.iter().enumerate() {
        let found = per_point_count(table, id)?;
        let expected = table.levels[c];
        if found != expected {
            return Err(Error::WrongCount {
                id: id.clone(),
                expected,
                found,
            });
        }
    }
    Ok(())
}

/// Identification of fixed points with subsets of `{1, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bijection {
    pub map: BTreeMap<String, Subset>,
}

impl Bijection {
    pub fn subset_of(&self, id: &str) -> Option<Subset> {
        self.map.get(id).copied()
    }

    pub fn point_of(&self, s: Subset) -> Option<&str> {
        self.map
            .iter()
            .find(|(_, &v)| v == s)
            .map(|(k, _)| k.as_str())
    }
}

/// `F -> {j : a_j|_F = x}`; fails unless this hits every subset exactly once
/// with `|J_F| = k_F`.
pub fn assemble_bijection(table: &RestrictionTable) -> Result<Bijection> {
    let mut map = BTreeMap::new();
    let mut hit: BTreeMap<Subset, Vec<String>> = BTreeMap::new();
    for (c, id) in table.ids.iter().enumerate() {
        let s = Subset::from_elements((1..=table.n).filter(|&j| table.coeff(j, c).is_one()));
        if s.len() != table.levels[c] {
            return Err(Error::WrongCount {
                id: id.clone(),
                expected: table.levels[c],
                found: s.len(),
            });
        }
        hit.entry(s).or_default().push(id.clone());
        map.insert(id.clone(), s);
    }
    if let Some((s, ids)) = hit.iter().find(|(_, ids)| ids.len() > 1) {
        return Err(Error::NotInjective {
            subset: s.to_string(),
            ids: ids.clone(),
        });
    }
    if let Some(s) = Subset::all(table.n)
        .into_iter()
        .find(|s| !hit.contains_key(s))
    {
        return Err(Error::NotSurjective {
            subset: s.to_string(),
        });
    }
    Ok(Bijection { map })
}

/// Level sums of a degree-`l` class (as coefficients of `x^l`) derived from
/// the sums known at a few levels. Known sums are given unsigned; the
/// alternating signs of the moment constraint are applied internally.
pub fn complete_level_sums(
    n: usize,
    l: usize,
    known: &BTreeMap<usize, BigInt>,
) -> Result<Vec<BigInt>> {
    let signed: BTreeMap<usize, Rational> = known
        .iter()
        .map(|(&k, v)| (k, Rational::from_integer(alternate(k, v.clone()))))
        .collect();
    let d = complete_in_kernel(n, n.saturating_sub(l), &signed)?;
    d.into_iter()
        .enumerate()
        .map(|(k, v)| {
            if !v.is_integer() {
                return Err(Error::TableViolation(format!(
                    "non-integral level sum {v} at level {k}"
                )));
            }
            Ok(alternate(k, v.to_integer()))
        })
        .collect()
}

fn alternate(k: usize, v: BigInt) -> BigInt {
    if k.is_multiple_of(2) {
        v
    } else {
        -v
    }
}

/// Per-level outcome of the forcing argument (identical for every `j`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelForcing {
    pub level: usize,
    pub points: u64,
    /// `sum_i a_j|_{p_k^i}`, coefficient of `x`.
    pub sum: BigInt,
    /// `sum_i (a_j|_{p_k^i})^2`, coefficient of `x^2`.
    pub square_sum: BigInt,
    /// Values of `a_j` at the points of this level, as coefficients of `x`.
    pub values: Vec<i64>,
}

/// How many levels were known when a completion was invoked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Agreement {
    pub class: String,
    pub degree: usize,
    pub known_levels: Vec<usize>,
}

impl Agreement {
    /// Known levels suffice to determine all level sums.
    pub fn sufficient(&self, n: usize) -> bool {
        self.known_levels.len() >= (self.degree + 1).min(n + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub n: usize,
    pub counts: CountVector,
    pub levels: Vec<LevelForcing>,
    /// Derived `sum_i b_F|_{p_1^i}` (coefficient of `x^{n-k}`) for a point of level `k`.
    pub b_level_one_sums: Vec<(usize, BigInt)>,
    /// Derived number of points of level `s` at which all `a_j`, `j in J`,
    /// restrict to `x`, for `|J| = s`.
    pub subset_hits: Vec<(usize, BigInt)>,
    pub agreements: Vec<Agreement>,
    pub b_identity_holds: bool,
    pub table: RestrictionTable,
    pub bijection: Bijection,
}

/// The forced level data: counts, sums, squared sums and value multisets.
pub fn forced_levels(n: usize, counts: &CountVector, exec: Execution) -> Result<Vec<LevelForcing>> {
    let one = BigInt::one();
    let linear = complete_level_sums(
        n,
        1,
        &BTreeMap::from([(0, BigInt::zero()), (1, one.clone())]),
    )?;
    let square = complete_level_sums(
        n,
        2,
        &BTreeMap::from([(0, BigInt::zero()), (1, one.clone()), (n, one)]),
    )?;
    let per_level = exec.map_range(n + 1, |k| -> Result<LevelForcing> {
        let sum = linear[k].clone();
        let square_sum = square[k].clone();
        if UniPoly::int_monomial(sum.clone(), 1) != forced_level_sum(n, k)
            || UniPoly::int_monomial(square_sum.clone(), 2) != forced_level_square_sum(n, k)
        {
            return Err(Error::TableViolation(format!(
                "derived level sums at level {k} disagree with the closed form"
            )));
        }
        let s = sum
            .to_i64()
            .ok_or_else(|| Error::InvalidArgument("level sum overflow".into()))?;
        let values = solve_value_multiset(s, sum == square_sum, counts.0[k] as usize)?;
        Ok(LevelForcing {
            level: k,
            points: counts.0[k],
            sum,
            square_sum,
            values,
        })
    });
    per_level.into_iter().collect()
}

/// Table assigning level-`k` points (in data order) to the `k`-subsets in
/// ascending order. Any table satisfying the forced constraints agrees with
/// this one up to relabelling points within a level.
pub fn canonical_table(data: &FixedPointData) -> Result<RestrictionTable> {
    let n = data.n();
    let mut by_level: Vec<std::vec::IntoIter<Subset>> =
        (0..=n).map(|k| Subset::of_size(n, k).into_iter()).collect();
    let mut entries = vec![Vec::with_capacity(data.len()); n];
    for p in data.points() {
        let s = by_level[p.negative_count()].next().ok_or_else(|| {
            Error::TableViolation(format!("too many points at level {}", p.negative_count()))
        })?;
        for (j, row) in entries.iter_mut().enumerate() {
            row.push(BigInt::from(u8::from(s.contains(j + 1))));
        }
    }
    RestrictionTable::new(data, entries)
}

fn require_binomial_counts(data: &FixedPointData) -> Result<CountVector> {
    data.require_semifree()?;
    let counts = data.counts();
    let expected = predict_counts(data.n(), 1);
    if counts != expected {
        return Err(Error::CountMismatch {
            expected: expected.0,
            found: counts.0,
        });
    }
    Ok(counts)
}

/// Runs the pipeline on the canonical table for `data`.
pub fn run_pipeline(data: &FixedPointData) -> Result<Certificate> {
    require_binomial_counts(data)?;
    let table = canonical_table(data)?;
    run_pipeline_with_table(data, table)
}

/// Checks a given restriction table against every forced constraint and
/// returns the resulting certificate.
pub fn run_pipeline_with_table(
    data: &FixedPointData,
    table: RestrictionTable,
) -> Result<Certificate> {
    let n = data.n();
    let counts = require_binomial_counts(data)?;
    if table.ids
        != data
            .points()
            .iter()
            .map(|p| p.id.clone())
            .collect::<Vec<_>>()
    {
        return Err(Error::InvalidArgument(
            "table columns do not match the data".into(),
        ));
    }
    let exec = Execution::default();
    let levels = forced_levels(n, &counts, exec)?;

    // normalization at index 0 and 2
    for j in 1..=n {
        for c in table.level_columns(0) {
            if !table.coeff(j, c).is_zero() {
                return Err(Error::TableViolation(format!(
                    "a_{j} does not vanish at the index-0 point"
                )));
            }
        }
        let ones = table
            .level_columns(1)
            .filter(|&c| table.coeff(j, c).is_one())
            .count();
        let nonzero = table
            .level_columns(1)
            .filter(|&c| !table.coeff(j, c).is_zero())
            .count();
        if ones != 1 || nonzero != 1 {
            return Err(Error::TableViolation(format!(
                "a_{j} must be x at exactly one index-2 point and 0 at the others"
            )));
        }
    }

    // observed sums and values against the forced ones
    for lf in &levels {
        for j in 1..=n {
            let k = lf.level;
            if table.level_sum(j, k) != lf.sum || table.level_square_sum(j, k) != lf.square_sum {
                return Err(Error::TableViolation(format!(
                    "level sums of a_{j} at level {k} differ from the forced values"
                )));
            }
            let mut observed: Vec<i64> = table
                .level_columns(k)
                .map(|c| table.coeff(j, c).to_i64().unwrap_or(i64::MAX))
                .collect();
            observed.sort_unstable_by(|a, b| b.cmp(a));
            if observed != lf.values {
                return Err(Error::TableViolation(format!(
                    "values of a_{j} at level {k} are {observed:?}, forced {:?}",
                    lf.values
                )));
            }
        }
    }

    check_point_counts(&table)?;

    // b_F has degree n - k, vanishes above level k and equals x^{n-k} at F.
    let mut b_level_one_sums = Vec::new();
    let mut agreements = Vec::new();
    for k in 0..=n {
        let known: BTreeMap<usize, BigInt> = (k..=n)
            .map(|m| {
                (
                    m,
                    if m == k {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    },
                )
            })
            .collect();
        agreements.push(Agreement {
            class: format!("b_F (level {k})"),
            degree: n - k,
            known_levels: known.keys().copied().collect(),
        });
        let sums = complete_level_sums(n, n - k, &known)?;
        let s1 = sums.get(1).cloned().unwrap_or_default();
        if n >= 1 && s1 != BigInt::from(k) {
            return Err(Error::TableViolation(format!(
                "derived level-1 sum of b_F at level {k} is {s1}, expected {k}"
            )));
        }
        b_level_one_sums.push((k, s1));
        if k >= 1 {
            let mut lv: Vec<usize> = vec![0];
            lv.extend(k..=n);
            agreements.push(Agreement {
                class: format!("a_j * b_F (level {k})"),
                degree: n - k + 1,
                known_levels: lv,
            });
        }
    }
    agreements.insert(
        0,
        Agreement {
            class: "a_j".into(),
            degree: 1,
            known_levels: vec![0, 1],
        },
    );
    let mut sq_levels = vec![0, 1, n];
    sq_levels.dedup();
    agreements.insert(
        1,
        Agreement {
            class: "a_j^2".into(),
            degree: 2,
            known_levels: sq_levels,
        },
    );

    // a_J vanishes below level |J| and is x^{|J|} at the top point
    let mut subset_hits = Vec::new();
    for s in 1..=n {
        let mut known: BTreeMap<usize, BigInt> = (0..s).map(|m| (m, BigInt::zero())).collect();
        known.insert(n, BigInt::one());
        agreements.push(Agreement {
            class: format!("a_J (|J| = {s})"),
            degree: s,
            known_levels: known.keys().copied().collect(),
        });
        let sums = complete_level_sums(n, s, &known)?;
        subset_hits.push((s, sums[s].clone()));
    }
    if let Some(a) = agreements.iter().find(|a| !a.sufficient(n)) {
        return Err(Error::TableViolation(format!(
            "{} has only {} known levels",
            a.class,
            a.known_levels.len()
        )));
    }

    let bijection = assemble_bijection(&table)?;
    for &(s, ref hits) in &subset_hits {
        if !hits.is_one() {
            return Err(Error::TableViolation(format!(
                "derived number of points hit by a {s}-subset is {hits}"
            )));
        }
    }

    Ok(Certificate {
        n,
        counts,
        levels,
        b_level_one_sums,
        subset_hits,
        agreements,
        b_identity_holds: b_class_identity_holds(n),
        table,
        bijection,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixed_point_data::FixedPoint;
    use crate::hypercube::hypercube_data;

    #[test]
    fn level_sum_examples() {
        assert_eq!(forced_level_sum(3, 1), UniPoly::int_monomial(1, 1));
        assert_eq!(forced_level_sum(3, 3), UniPoly::int_monomial(1, 1));
        assert_eq!(forced_level_sum(3, 2), UniPoly::int_monomial(2, 1));
        assert!(forced_level_sum(3, 0).is_zero());
        assert_eq!(forced_level_square_sum(3, 1), UniPoly::int_monomial(1, 2));
        assert_eq!(forced_level_square_sum(2, 2), UniPoly::int_monomial(1, 2));
        assert_eq!(forced_level_square_sum(4, 2), UniPoly::int_monomial(3, 2));
    }

    #[test]
    fn value_multisets() {
        assert_eq!(solve_value_multiset(2, true, 3).unwrap(), vec![1, 1, 0]);
        assert_eq!(solve_value_multiset(0, true, 5).unwrap(), vec![0; 5]);
        assert_eq!(
            solve_value_multiset(4, true, 3),
            Err(Error::NoIntegerSolution { sum: 4, count: 3 })
        );
        assert!(solve_value_multiset(1, false, 3).is_err());
    }

    #[test]
    fn completion_recovers_binomial_sums() {
        for n in 1..=7 {
            let known = BTreeMap::from([(0, BigInt::zero()), (1, BigInt::one())]);
            let sums = complete_level_sums(n, 1, &known).unwrap();
            for (k, s) in sums.iter().enumerate() {
                assert_eq!(UniPoly::int_monomial(s.clone(), 1), forced_level_sum(n, k));
            }
        }
    }

    #[test]
    fn hypercube_counts_per_point() {
        let d = hypercube_data(3);
        let t = RestrictionTable::from_model(&d).unwrap();
        assert_eq!(per_point_count(&t, "{1,2}").unwrap(), 2);
        assert_eq!(per_point_count(&t, "{}").unwrap(), 0);
        assert_eq!(per_point_count(&t, "{1,2,3}").unwrap(), 3);
        check_point_counts(&t).unwrap();
    }

    #[test]
    fn bijection_on_square_is_identity() {
        let d = hypercube_data(2);
        let b = assemble_bijection(&RestrictionTable::from_model(&d).unwrap()).unwrap();
        for p in d.points() {
            assert_eq!(b.subset_of(&p.id).unwrap().to_string(), p.id);
        }
    }

    #[test]
    fn bijection_rejects_collision() {
        let d = hypercube_data(2);
        // both index-2 points claim {1}
        let order: Vec<&str> = d.points().iter().map(|p| p.id.as_str()).collect();
        assert_eq!(order, ["{}", "{1}", "{2}", "{1,2}"]);
        let t = RestrictionTable::new(
            &d,
            vec![
                vec![0, 1, 1, 1].into_iter().map(BigInt::from).collect(),
                vec![0, 0, 0, 1].into_iter().map(BigInt::from).collect(),
            ],
        )
        .unwrap();
        match assemble_bijection(&t) {
            Err(Error::NotInjective { subset, ids }) => {
                assert_eq!(subset, "{1}");
                assert_eq!(ids.len(), 2);
            }
            other => panic!("expected NotInjective, got {other:?}"),
        }
    }

    #[test]
    fn bijection_on_sphere() {
        let d = FixedPointData::new(
            1,
            vec![
                FixedPoint::new("S", vec![1]),
                FixedPoint::new("N", vec![-1]),
            ],
        )
        .unwrap();
        let t = RestrictionTable::new(&d, vec![vec![BigInt::zero(), BigInt::one()]]).unwrap();
        let b = assemble_bijection(&t).unwrap();
        assert_eq!(b.subset_of("S"), Some(Subset::EMPTY));
        assert_eq!(b.subset_of("N"), Some(Subset::singleton(1)));
    }

    #[test]
    fn pipeline_on_cube() {
        let d = hypercube_data(3);
        let cert = run_pipeline(&d).unwrap();
        assert_eq!(cert.bijection.map.len(), 8);
        assert!(cert.b_identity_holds);
        assert_eq!(
            cert.b_level_one_sums,
            (0..=3).map(|k| (k, BigInt::from(k))).collect::<Vec<_>>()
        );
        assert!(cert.subset_hits.iter().all(|(_, h)| h.is_one()));
        let sums: Vec<BigInt> = cert.levels.iter().map(|l| l.sum.clone()).collect();
        assert_eq!(sums, [0, 1, 2, 1].map(BigInt::from));
    }

    #[test]
    fn pipeline_rejects_wrong_counts() {
        let mut pts = vec![
            FixedPoint::new("z", vec![1, 1, 1]),
            FixedPoint::new("t", vec![-1, -1, -1]),
        ];
        for i in 0..2 {
            pts.push(FixedPoint::new(format!("a{i}"), vec![-1, 1, 1]));
        }
        for i in 0..3 {
            pts.push(FixedPoint::new(format!("b{i}"), vec![-1, -1, 1]));
        }
        let d = FixedPointData::new(3, pts).unwrap();
        assert_eq!(
            run_pipeline(&d).unwrap_err(),
            Error::CountMismatch {
                expected: vec![1, 3, 3, 1],
                found: vec![1, 2, 3, 1]
            }
        );
    }

    #[test]
    fn pipeline_on_sphere() {
        let d = FixedPointData::new(
            1,
            vec![
                FixedPoint::new("S", vec![1]),
                FixedPoint::new("N", vec![-1]),
            ],
        )
        .unwrap();
        let cert = run_pipeline(&d).unwrap();
        assert_eq!(cert.bijection.subset_of("N"), Some(Subset::singleton(1)));
    }

    #[test]
    fn pipeline_rejects_bad_table() {
        let d = hypercube_data(2);
        // a_1 = x at {1,2} only: violates the index-2 normalization
        let t = RestrictionTable::new(
            &d,
            vec![
                vec![0, 0, 0, 1].into_iter().map(BigInt::from).collect(),
                vec![0, 0, 1, 1].into_iter().map(BigInt::from).collect(),
            ],
        )
        .unwrap();
        assert!(matches!(
            run_pipeline_with_table(&d, t),
            Err(Error::TableViolation(_))
        ));
    }
}

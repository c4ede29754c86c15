//! Fixed-point data of a circle action with isolated fixed points.

use std::collections::HashSet;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_algebra::Rational;

/// An isolated fixed point: its tangent weights and, optionally, the value of
/// the moment map there.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FixedPoint {
    pub id: String,
    pub weights: Vec<i64>,
    pub moment: Option<Rational>,
}

impl FixedPoint {
    pub fn new(id: impl Into<String>, weights: Vec<i64>) -> Self {
        FixedPoint {
            id: id.into(),
            weights,
            moment: None,
        }
    }

    pub fn with_moment(mut self, moment: Rational) -> Self {
        self.moment = Some(moment);
        self
    }

    /// Number of negative weights, `k_F`.
    pub fn negative_count(&self) -> usize {
        self.weights.iter().filter(|&&w| w < 0).count()
    }

    /// Morse index: twice the number of negative weights.
    pub fn index(&self) -> usize {
        2 * self.negative_count()
    }

    pub fn is_semifree(&self) -> bool {
        self.weights.iter().all(|w| w.abs() == 1)
    }
}

/// Checks that every point has `n` nonzero weights and that ids are unique.
pub fn validate(n: usize, points: &[FixedPoint]) -> Result<()> {
    let mut seen = HashSet::new();
    for p in points {
        if p.weights.len() != n {
            return Err(Error::WrongWeightCount {
                id: p.id.clone(),
                expected: n,
                found: p.weights.len(),
            });
        }
        if p.weights.contains(&0) {
            return Err(Error::ZeroWeight { id: p.id.clone() });
        }
        if !seen.insert(p.id.as_str()) {
            return Err(Error::DuplicateId { id: p.id.clone() });
        }
    }
    Ok(())
}

/// Validated fixed-point data in half-dimension `n`.
///
/// Points are kept sorted by `(index, id)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPointData {
    n: usize,
    points: Vec<FixedPoint>,
}

impl FixedPointData {
    pub fn new(n: usize, mut points: Vec<FixedPoint>) -> Result<Self> {
        validate(n, &points)?;
        points.sort_by(|a, b| (a.index(), &a.id).cmp(&(b.index(), &b.id)));
        Ok(FixedPointData { n, points })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[FixedPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, id: &str) -> Option<&FixedPoint> {
        self.points.iter().find(|p| p.id == id)
    }

    /// True iff every weight is `+1` or `-1`.
    pub fn semifree(&self) -> bool {
        self.points.iter().all(FixedPoint::is_semifree)
    }

    pub fn require_semifree(&self) -> Result<()> {
        match self.points.iter().find(|p| !p.is_semifree()) {
            Some(p) => Err(Error::NotSemifree { id: p.id.clone() }),
            None => Ok(()),
        }
    }

    /// `N_k`: the number of points with exactly `k` negative weights.
    pub fn counts(&self) -> CountVector {
        let mut c = vec![0u64; self.n + 1];
        for p in &self.points {
            c[p.negative_count()] += 1;
        }
        CountVector(c)
    }

    /// Points at level `k` (index `2k`), in `(index, id)` order.
    pub fn level(&self, k: usize) -> impl Iterator<Item = &FixedPoint> {
        self.points.iter().filter(move |p| p.negative_count() == k)
    }

    /// Splits the points into `(F_plus, F_minus)` by the sign of the moment value.
    pub fn split_by_moment_sign(&self) -> Result<(Vec<&FixedPoint>, Vec<&FixedPoint>)> {
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for p in &self.points {
            let Some(m) = &p.moment else {
                return Err(Error::MissingMomentValue { id: p.id.clone() });
            };
            if m.is_zero() {
                return Err(Error::ZeroIsCritical { id: p.id.clone() });
            }
            if m.is_positive() {
                plus.push(p);
            } else {
                minus.push(p);
            }
        }
        Ok((plus, minus))
    }
}

/// Fixed-point counts `N_0..N_n` by number of negative weights.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CountVector(pub Vec<u64>);

impl CountVector {
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Display for CountVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_algebra::rational;

    fn sphere() -> Vec<FixedPoint> {
        vec![
            FixedPoint::new("s", vec![1]),
            FixedPoint::new("n", vec![-1]),
        ]
    }

    #[test]
    fn sphere_is_valid() {
        let d = FixedPointData::new(1, sphere()).unwrap();
        assert!(d.semifree());
        assert_eq!(d.counts(), CountVector(vec![1, 1]));
        // sorted by index first
        assert_eq!(d.points()[0].id, "s");
    }

    #[test]
    fn rejects_zero_weight() {
        let e = FixedPointData::new(2, vec![FixedPoint::new("p", vec![1, 0])]).unwrap_err();
        assert_eq!(e, Error::ZeroWeight { id: "p".into() });
    }

    #[test]
    fn rejects_wrong_weight_count() {
        let e = FixedPointData::new(3, vec![FixedPoint::new("p", vec![1, 1])]).unwrap_err();
        assert_eq!(
            e,
            Error::WrongWeightCount {
                id: "p".into(),
                expected: 3,
                found: 2
            }
        );
    }

    #[test]
    fn rejects_duplicate_id() {
        let pts = vec![
            FixedPoint::new("p", vec![1]),
            FixedPoint::new("p", vec![-1]),
        ];
        assert_eq!(
            FixedPointData::new(1, pts).unwrap_err(),
            Error::DuplicateId { id: "p".into() }
        );
    }

    #[test]
    fn counts_non_semifree_pair() {
        let d = FixedPointData::new(
            3,
            vec![
                FixedPoint::new("a", vec![1, 1, -2]),
                FixedPoint::new("b", vec![-1, -1, 2]),
            ],
        )
        .unwrap();
        assert!(!d.semifree());
        assert_eq!(d.counts(), CountVector(vec![0, 1, 1, 0]));
        assert_eq!(
            d.require_semifree(),
            Err(Error::NotSemifree { id: "a".into() })
        );
    }

    #[test]
    fn split_sphere_by_moment() {
        let pts = vec![
            FixedPoint::new("s", vec![1]).with_moment(rational(-1, 2)),
            FixedPoint::new("n", vec![-1]).with_moment(rational(1, 2)),
        ];
        let d = FixedPointData::new(1, pts).unwrap();
        let (plus, minus) = d.split_by_moment_sign().unwrap();
        assert_eq!(
            plus.iter().map(|p| p.id.as_str()).collect::<Vec<_>>(),
            ["n"]
        );
        assert_eq!(
            minus.iter().map(|p| p.id.as_str()).collect::<Vec<_>>(),
            ["s"]
        );
    }

    #[test]
    fn split_errors() {
        let d = FixedPointData::new(1, sphere()).unwrap();
        assert!(matches!(
            d.split_by_moment_sign(),
            Err(Error::MissingMomentValue { .. })
        ));
        let pts = vec![
            FixedPoint::new("s", vec![1]).with_moment(rational(0, 1)),
            FixedPoint::new("n", vec![-1]).with_moment(rational(1, 1)),
        ];
        let d = FixedPointData::new(1, pts).unwrap();
        assert_eq!(
            d.split_by_moment_sign().unwrap_err(),
            Error::ZeroIsCritical { id: "s".into() }
        );
    }
}

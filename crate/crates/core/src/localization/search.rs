//! Exhaustive search for weight data surviving [`consistency_check`](super::consistency_check).
//!
//! A configuration is a multiset of fixed points, each a multiset of nonzero
//! weights in `[-bound, bound]`. Surviving configurations are reported as
//! "passes up to degree D"; passing says nothing about existence.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{admissible, ChernMonomial, PointProfile};
use crate::error::{Error, Result};
use crate::exact_algebra::Rational;
use crate::par::Execution;

/// Default cap on the number of configurations examined.
pub const DEFAULT_SEARCH_CAP: u128 = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchParams {
    pub n: usize,
    pub num_points: usize,
    pub weight_bound: u32,
    pub max_degree: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub cap: u128,
    pub execution: Execution,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            cap: DEFAULT_SEARCH_CAP,
            execution: Execution::default(),
        }
    }
}

/// Points in canonical form: each point's weights ascending, points ascending.
pub type Candidate = Vec<Vec<i64>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    pub params: SearchParams,
    pub examined: u128,
    pub passing: Vec<Candidate>,
}

impl SearchResult {
    pub fn contains(&self, points: &[Vec<i64>]) -> bool {
        let c = canonicalize(points);
        self.passing.contains(&c)
    }
}

pub fn canonicalize(points: &[Vec<i64>]) -> Candidate {
    let mut out: Candidate = points
        .iter()
        .map(|p| {
            let mut p = p.clone();
            p.sort_unstable();
            p
        })
        .collect();
    out.sort();
    out
}

/// Number of configurations for the given parameters.
pub fn search_space_size(params: &SearchParams) -> Option<u128> {
    let values = 2 * params.weight_bound as u64;
    let types = multichoose(values, params.n as u64)?;
    multichoose(u64::try_from(types).ok()?, params.num_points as u64)
}

/// `C(m + k - 1, k)`, or `None` on overflow.
fn multichoose(m: u64, k: u64) -> Option<u128> {
    if m == 0 {
        return Some(u128::from(k == 0));
    }
    let b: BigInt = num_integer::binomial(BigInt::from(m + k - 1), BigInt::from(k));
    b.to_u128()
}

/// Nondecreasing sequences of length `len` over `0..alphabet`, in lex order.
fn multisets(alphabet: usize, len: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if alphabet == 0 {
        if len == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = vec![0u32; len];
    loop {
        out.push(cur.clone());
        // advance to the next nondecreasing tuple
        let Some(i) = (0..len).rev().find(|&i| (cur[i] as usize) < alphabet - 1) else {
            return out;
        };
        let v = cur[i] + 1;
        for c in cur[i..].iter_mut() {
            *c = v;
        }
    }
}

pub fn search_candidates(params: SearchParams) -> Result<SearchResult> {
    search_candidates_with(params, SearchOptions::default())
}

/// Enumerates every configuration and keeps those passing the consistency
/// check. The result is in canonical order for either execution strategy.
pub fn search_candidates_with(params: SearchParams, opts: SearchOptions) -> Result<SearchResult> {
    if params.n == 0 || params.num_points == 0 || params.weight_bound == 0 {
        return Err(Error::InvalidArgument(
            "n, number of points and weight bound must all be at least 1".into(),
        ));
    }
    let size = search_space_size(&params).unwrap_or(u128::MAX);
    if size > opts.cap {
        return Err(Error::SearchSpaceTooLarge {
            size,
            cap: opts.cap,
        });
    }
    let bound = params.weight_bound as i64;
    let values: Vec<i64> = (-bound..=bound).filter(|&w| w != 0).collect();
    let point_types: Vec<Vec<i64>> = multisets(values.len(), params.n)
        .into_iter()
        .map(|idx| idx.iter().map(|&i| values[i as usize]).collect())
        .collect();

    let monomials = ChernMonomial::up_to(params.n, params.max_degree);
    // contributions[type][monomial]
    let contributions: Vec<Vec<Rational>> = opts.execution.map(&point_types, |w| {
        let p = PointProfile::new(w);
        monomials.iter().map(|m| p.contribution(m)).collect()
    });
    let degrees: Vec<usize> = monomials.iter().map(ChernMonomial::degree).collect();
    let n = params.n;

    let configs = multisets(point_types.len(), params.num_points);
    let examined = configs.len() as u128;
    let verdicts = opts.execution.map(&configs, |cfg| {
        degrees.iter().enumerate().all(|(mi, &d)| {
            let total: Rational = cfg.iter().map(|&t| &contributions[t as usize][mi]).sum();
            admissible(&total, d, n)
        })
    });
    let passing = configs
        .iter()
        .zip(verdicts)
        .filter(|(_, ok)| *ok)
        .map(|(cfg, _)| {
            cfg.iter()
                .map(|&t| point_types[t as usize].clone())
                .collect()
        })
        .collect();
    Ok(SearchResult {
        params,
        examined,
        passing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize, num_points: usize, weight_bound: u32, max_degree: usize) -> SearchParams {
        SearchParams {
            n,
            num_points,
            weight_bound,
            max_degree,
        }
    }

    #[test]
    fn multiset_enumeration() {
        assert_eq!(multisets(2, 2), vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(multisets(3, 1).len(), 3);
        assert_eq!(multisets(4, 3).len(), 20);
    }

    #[test]
    fn space_size_matches_enumeration() {
        let p = params(3, 2, 2, 3);
        // 20 weight multisets, 210 unordered pairs
        assert_eq!(search_space_size(&p), Some(210));
        assert_eq!(search_candidates(p).unwrap().examined, 210);
    }

    #[test]
    fn finds_weight_two_pair() {
        let r = search_candidates(params(3, 2, 2, 3)).unwrap();
        assert!(r.contains(&[vec![1, 1, -2], vec![-1, -1, 2]]));
        assert!(r
            .passing
            .iter()
            .all(|c| c.iter().flatten().any(|w| w.abs() == 2)));
    }

    #[test]
    fn semifree_pairs_in_dimension_six_all_fail() {
        let r = search_candidates(params(3, 2, 1, 3)).unwrap();
        assert!(r.passing.is_empty());
    }

    #[test]
    fn sphere_survives() {
        let r = search_candidates(params(1, 2, 1, 1)).unwrap();
        assert!(r.contains(&[vec![1], vec![-1]]));
    }

    #[test]
    fn cap_is_enforced() {
        let opts = SearchOptions {
            cap: 100,
            execution: Execution::Sequential,
        };
        assert!(matches!(
            search_candidates_with(params(3, 2, 2, 3), opts),
            Err(Error::SearchSpaceTooLarge {
                size: 210,
                cap: 100
            })
        ));
        assert!(search_candidates(params(0, 2, 1, 1)).is_err());
    }

    #[test]
    fn execution_strategies_agree() {
        let p = params(2, 3, 2, 2);
        let seq = search_candidates_with(
            p,
            SearchOptions {
                execution: Execution::Sequential,
                ..Default::default()
            },
        )
        .unwrap();
        let par = search_candidates(p).unwrap();
        assert_eq!(seq, par);
    }
}

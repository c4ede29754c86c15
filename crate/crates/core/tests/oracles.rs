use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use semifree::exact_algebra::{int, vandermonde_kernel};
use semifree::hypercube::{hypercube_data, injectivity_rank_check, CubeClass, ModelData, Subset};
use semifree::localization::{
    gamma_restrictions, integrate, top_chern_restrictions, verify_moment_equations,
};
use semifree::reduced::{
    betti_numbers_by_counting, graded_quotient, kernel_generators, poincare_check,
};
use semifree::theorem2::{run_pipeline, RestrictionTable};
use semifree::{Execution, Rational, UniPoly};

fn pascal(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = vec![BigInt::one(); row.len() + 1];
        for i in 1..row.len() {
            next[i] = &row[i - 1] + &row[i];
        }
        row = next;
    }
    row
}

#[test]
fn kernel_is_signed_pascal_row() {
    for n in 1..=12 {
        let expected: Vec<Rational> = pascal(n)
            .into_iter()
            .enumerate()
            .map(|(k, c)| Rational::from_integer(if k % 2 == 0 { c } else { -c }))
            .collect();
        assert_eq!(vandermonde_kernel(n), expected, "n = {n}");
    }
}

/// `sum over all subsets J of {1..n}` of `(-1)^{|J|} |J|^e`, by bit loops.
fn subset_power_sum(n: usize, e: u32) -> BigInt {
    let mut total = BigInt::zero();
    for bits in 0u32..(1 << n) {
        let k = bits.count_ones() as i64;
        let mut term = BigInt::one();
        for _ in 0..e {
            term *= k;
        }
        if k % 2 == 1 {
            term = -term;
        }
        total += term;
    }
    total
}

#[test]
fn hypercube_moments_and_gamma_power() {
    for n in 1..=8 {
        let data = hypercube_data(n);
        let report = verify_moment_equations(&data).unwrap();
        assert!(report.passed(), "n = {n}");
        for l in 0..n as u32 {
            assert!(subset_power_sum(n, l).is_zero());
        }

        // gamma|_J = |J| x and e(nu_J) = (-1)^{|J|} x^n
        let gamma_n = gamma_restrictions(&data).unwrap().pow(n as u32);
        let value = integrate(&data, &gamma_n).unwrap().to_poly().unwrap();
        let oracle = subset_power_sum(n, n as u32);
        let factorial: BigInt = (1..=n as u64).map(BigInt::from).product();
        let sign = if n % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        assert_eq!(oracle, &sign * &factorial);
        assert_eq!(
            value,
            UniPoly::constant(Rational::from_integer(oracle)),
            "n = {n}"
        );
    }
}

#[test]
fn euler_characteristic_of_cube() {
    for n in 1..=8 {
        let data = hypercube_data(n);
        let chi = integrate(&data, &top_chern_restrictions(&data)).unwrap();
        assert_eq!(chi.to_poly().unwrap(), UniPoly::constant(int(1u64 << n)));
    }
}

#[test]
fn ring_relation_restricts_to_zero() {
    for n in 1..=8 {
        for j in Subset::all(n) {
            for i in 1..=n {
                let a = CubeClass::a(i).restrict(j);
                let y = CubeClass::y().restrict(j);
                assert!((&(&a * &y) - &(&a * &a)).is_zero());
                // the same evaluation done by hand
                let ai = if j.contains(i) { 1 } else { 0 };
                assert_eq!(ai - ai * ai, 0);
            }
        }
    }
}

#[test]
fn pipeline_matches_model_table() {
    for n in 1..=6 {
        let data = hypercube_data(n);
        let cert = run_pipeline(&data).unwrap();
        let model = RestrictionTable::from_model(&data).unwrap();
        assert_eq!(cert.table, model, "n = {n}");

        // level sums C(n-1, k-1) and per-point counts k_F
        let row = pascal(n - 1);
        for k in 0..=n {
            let expected = if k == 0 {
                BigInt::zero()
            } else {
                row[k - 1].clone()
            };
            for j in 1..=n {
                assert_eq!(model.level_sum(j, k), expected);
            }
        }
        for p in data.points() {
            let hits = (1..=n)
                .filter(|&j| model.get(j, &p.id).unwrap() == UniPoly::x())
                .count();
            assert_eq!(hits, p.negative_count());
            let s = cert.bijection.subset_of(&p.id).unwrap();
            assert_eq!(s.to_string(), p.id);
        }
    }
}

#[test]
fn injectivity_through_five() {
    for n in 1..=5 {
        let r = injectivity_rank_check(n, Execution::default()).unwrap();
        assert!(r.passed(), "n = {n}");
        assert_eq!(r.degrees.len(), n + 1);
    }
}

#[test]
fn reduced_betti_numbers_agree() {
    for n in 1..=5 {
        for twice_c in (1..2 * n as i64).step_by(2) {
            let model = ModelData::new(n, Rational::new(twice_c.into(), 2.into()));
            let q = graded_quotient(&kernel_generators(&model).unwrap(), n, Execution::default());
            let counted = betti_numbers_by_counting(&model.data(), n).unwrap();
            let ranks: Vec<u64> = q.ranks().into_iter().map(|r| r as u64).collect();
            assert_eq!(ranks, counted, "n = {n}, c = {twice_c}/2");
            assert_eq!(ranks[n], 0);
            assert!(q.torsion_free());
            assert!(poincare_check(&q, n).passed);
        }
    }
}

#[test]
fn model_table_is_also_accepted_with_subset_ids() {
    let data = hypercube_data(4);
    let rows: BTreeMap<String, Vec<BigInt>> = data
        .points()
        .iter()
        .map(|p| {
            let s: Subset = p.id.parse().unwrap();
            (
                p.id.clone(),
                (1..=4)
                    .map(|j| BigInt::from(u8::from(s.contains(j))))
                    .collect(),
            )
        })
        .collect();
    let t = RestrictionTable::from_point_rows(&data, &rows).unwrap();
    assert_eq!(t, RestrictionTable::from_model(&data).unwrap());
}

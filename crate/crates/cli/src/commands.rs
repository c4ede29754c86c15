use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Signed;
use serde_json::{json, Value};

use semifree::hypercube::{alpha_class, hypercube_data, CubeClass, ModelData, Subset};
use semifree::localization::{
    consistency_check, predict_counts, search_candidates_with, verify_moment_equations,
    SearchOptions, SearchParams,
};
use semifree::reduced::{
    betti_numbers_by_counting, graded_quotient, kernel_generators, poincare_check,
    reduced_chern_series, IdealPresentation,
};
use semifree::theorem2::{run_pipeline, run_pipeline_with_table, Certificate, RestrictionTable};
use semifree::{Execution, FixedPointData, Rational};

use crate::input::InputDocument;
use crate::CliError;

/// Largest `n` accepted by `ring`; the table has `4^n` cells.
pub const RING_MAX_N: usize = 10;

/// Output of one subcommand in both renderings.
#[derive(Debug, Clone)]
pub struct Report {
    pub text: String,
    pub json: Value,
    pub code: i32,
}

impl Report {
    fn new(text: String, json: Value, passed: bool) -> Self {
        Report {
            text,
            json,
            code: if passed { 0 } else { 1 },
        }
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

pub fn check(doc: &InputDocument, max_degree: Option<usize>) -> Result<Report, CliError> {
    let data = doc.data()?;
    let n = data.n();
    let max_degree = max_degree.unwrap_or(n);
    let mut text = String::new();
    let mut passed = true;
    writeln!(text, "n = {n}, {} fixed points", data.len()).unwrap();
    writeln!(text, "counts by index: {}", data.counts()).unwrap();

    let moments = if data.semifree() {
        let report = verify_moment_equations(&data)?;
        for (l, s) in &report.sums {
            writeln!(
                text,
                "moment equation l = {l}: {s} {}",
                if s == &0.into() { "ok" } else { "FAILED" }
            )
            .unwrap();
        }
        passed &= report.passed();
        json!({
            "passed": report.passed(),
            "sums": report.sums.iter().map(|(l, s)| json!({"l": l, "sum": s.to_string()})).collect::<Vec<_>>(),
        })
    } else {
        writeln!(text, "moment equations: skipped (action is not semifree)").unwrap();
        Value::Null
    };

    let consistency = consistency_check(&data, max_degree);
    for c in &consistency.checks {
        writeln!(
            text,
            "integral of {}: {} {}",
            c.monomial,
            c.value,
            if c.passed { "ok" } else { "FAILED" }
        )
        .unwrap();
    }
    for c in consistency.failures() {
        writeln!(text, "not a valid integral: {} = {}", c.monomial, c.value).unwrap();
    }
    passed &= consistency.passed();
    writeln!(
        text,
        "result: {}",
        if passed { "consistent" } else { "inconsistent" }
    )
    .unwrap();

    let json = json!({
        "n": n,
        "counts": data.counts().0,
        "semifree": data.semifree(),
        "moment_equations": moments,
        "max_degree": max_degree,
        "integrals": consistency.checks.iter().map(|c| json!({
            "monomial": c.monomial.to_string(),
            "value": c.value.to_string(),
            "passed": c.passed,
        })).collect::<Vec<_>>(),
        "passed": passed,
    });
    Ok(Report::new(text, json, passed))
}

pub fn count(n: usize, n0: u64) -> Result<Report, CliError> {
    if n == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    let counts = predict_counts(n, n0);
    let text = format!("N_k for n = {n}, N_0 = {n0}:\n{counts}\n");
    Ok(Report::new(
        text,
        json!({"n": n, "N0": n0, "counts": counts.0}),
        true,
    ))
}

/// One class as `[{set, y, coeff}]` in its square-free normal form.
pub fn class_terms(cls: &CubeClass) -> Value {
    cls.terms()
        .map(|(m, c)| json!({"set": m.set.to_string(), "y": m.y_power, "coeff": c.to_string()}))
        .collect()
}

pub fn ring(n: usize) -> Result<Report, CliError> {
    if n == 0 || n > RING_MAX_N {
        return Err(CliError::Usage(format!(
            "ring needs 1 <= n <= {RING_MAX_N}"
        )));
    }
    let points: Vec<Subset> = hypercube_data(n)
        .points()
        .iter()
        .map(|p| p.id.parse())
        .collect::<Result<_, _>>()?;
    let basis = Subset::all(n);
    let mut text = format!(
        "alpha basis of H_S1((P^1)^{n}), restricted to the {} fixed points\n",
        points.len()
    );
    let mut rows = Vec::new();
    let mut header = format!("{:<16}", "class");
    for p in &points {
        write!(header, " {:>8}", p.to_string()).unwrap();
    }
    writeln!(text, "{header}").unwrap();
    let mut classes = Vec::new();
    for &j in &basis {
        let cls = alpha_class(j);
        let row: Vec<String> = points
            .iter()
            .map(|&p| cls.restrict(p).to_string())
            .collect();
        let mut line = format!("{:<16}", format!("alpha{j}"));
        for cell in &row {
            write!(line, " {cell:>8}").unwrap();
        }
        writeln!(text, "{line}").unwrap();
        classes.push(
            json!({"subset": j.to_string(), "class": cls.to_string(), "terms": class_terms(&cls)}),
        );
        rows.push(row);
    }
    let json = json!({
        "n": n,
        "points": points.iter().map(Subset::to_string).collect::<Vec<_>>(),
        "basis": classes,
        "restrictions": rows,
    });
    Ok(Report::new(text, json, true))
}

fn certificate_report(cert: &Certificate) -> Report {
    let n = cert.n;
    let mut text = format!(
        "forced restrictions for n = {n}\ncounts by index: {}\n",
        cert.counts
    );
    writeln!(
        text,
        "{:>5} {:>6} {:>10} {:>10}  values",
        "level", "points", "sum", "sq sum"
    )
    .unwrap();
    for lf in &cert.levels {
        writeln!(
            text,
            "{:>5} {:>6} {:>10} {:>10}  {}",
            lf.level,
            lf.points,
            lf.sum,
            lf.square_sum,
            join(&lf.values)
        )
        .unwrap();
    }
    for (k, s) in &cert.b_level_one_sums {
        writeln!(text, "b_F at level {k}: level-1 sum {s}").unwrap();
    }
    for (s, h) in &cert.subset_hits {
        writeln!(
            text,
            "|J| = {s}: points at level {s} where a_J = x^{s}: {h}"
        )
        .unwrap();
    }
    writeln!(
        text,
        "b-class identity: {}",
        if cert.b_identity_holds {
            "holds"
        } else {
            "FAILS"
        }
    )
    .unwrap();
    writeln!(text, "bijection:").unwrap();
    let ids = cert.table.ids();
    for id in ids {
        let j = cert
            .bijection
            .subset_of(id)
            .expect("bijection covers every point");
        let row: Vec<String> = (1..=n)
            .map(|i| cert.table.coeff(i, column(ids, id)).to_string())
            .collect();
        writeln!(
            text,
            "  {id:<12} -> {:<12} a|_F = ({})",
            j.to_string(),
            row.join(", ")
        )
        .unwrap();
    }
    let json = json!({
        "n": n,
        "counts": cert.counts.0,
        "levels": cert.levels.iter().map(|lf| json!({
            "level": lf.level,
            "points": lf.points,
            "sum": lf.sum.to_string(),
            "square_sum": lf.square_sum.to_string(),
            "values": lf.values,
        })).collect::<Vec<_>>(),
        "b_identity_holds": cert.b_identity_holds,
        "agreements": cert.agreements.iter().map(|a| json!({
            "class": a.class,
            "degree": a.degree,
            "known_levels": a.known_levels,
            "sufficient": a.sufficient(n),
        })).collect::<Vec<_>>(),
        "bijection": ids.iter().map(|id| json!({
            "id": id,
            "subset": cert.bijection.subset_of(id).map(|s| s.to_string()),
            "restrictions": (1..=n).map(|i| cert.table.coeff(i, column(ids, id)).to_string()).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    });
    Report::new(text, json, cert.b_identity_holds)
}

fn column(ids: &[String], id: &str) -> usize {
    ids.iter()
        .position(|x| x == id)
        .expect("id comes from the table")
}

pub fn solve(doc: &InputDocument) -> Result<Report, CliError> {
    let data = doc.data()?;
    let cert = match doc.table_rows() {
        Some(rows) => {
            let table = RestrictionTable::from_point_rows(&data, &rows)?;
            run_pipeline_with_table(&data, table)?
        }
        None => run_pipeline(&data)?,
    };
    Ok(certificate_report(&cert))
}

/// Signs of the moment map on subsets, transported through the forced
/// identification of fixed points with subsets.
fn signs_from_data(data: &FixedPointData) -> Result<BTreeMap<Subset, bool>, CliError> {
    let cert = run_pipeline(data)?;
    let mut signs = BTreeMap::new();
    for p in data.points() {
        let m = p
            .moment
            .as_ref()
            .ok_or_else(|| semifree::Error::MissingMomentValue { id: p.id.clone() })?;
        if m == &Rational::from_integer(0.into()) {
            return Err(semifree::Error::ZeroIsCritical { id: p.id.clone() }.into());
        }
        let j = cert
            .bijection
            .subset_of(&p.id)
            .expect("bijection covers every point");
        signs.insert(j, m.is_positive());
    }
    Ok(signs)
}

pub enum ReduceSource<'a> {
    Document(&'a InputDocument),
    Model { n: usize, c: Rational },
}

pub fn reduce(source: ReduceSource<'_>, max_degree: Option<usize>) -> Result<Report, CliError> {
    let (data, pres) = match source {
        ReduceSource::Document(doc) => {
            let data = doc.data()?;
            let signs = signs_from_data(&data)?;
            let pres = IdealPresentation::from_signs(data.n(), &signs)?;
            (data, pres)
        }
        ReduceSource::Model { n, c } => {
            if n == 0 || n > 12 {
                return Err(CliError::Usage("reduce needs 1 <= n <= 12".into()));
            }
            let model = ModelData::new(n, c);
            let pres = kernel_generators(&model)?;
            (model.data(), pres)
        }
    };
    let n = data.n();
    let top = max_degree.unwrap_or(n).max(n.saturating_sub(1));
    let q = graded_quotient(&pres, top, Execution::default());
    let counted = betti_numbers_by_counting(&data, top)?;
    let duality = poincare_check(&q, n);
    let ranks = q.ranks();
    let agree = ranks.iter().zip(&counted).all(|(&r, &c)| r as u64 == c);
    let vanish = ranks[n..].iter().all(|&r| r == 0);
    let chern = reduced_chern_series(&pres, n.saturating_sub(1));

    let mut text = format!(
        "reduced space at level 0, n = {n}: {} relations a_J, {} relations b_J\n",
        pres.positive.len(),
        pres.negative.len()
    );
    writeln!(
        text,
        "{:>6} {:>6} {:>8} {:>8}",
        "degree", "rank", "torsion", "counted"
    )
    .unwrap();
    for (s, c) in q.slices.iter().zip(&counted) {
        let torsion = if s.torsion.is_empty() {
            "-".to_string()
        } else {
            join(&s.torsion)
        };
        writeln!(
            text,
            "{:>6} {:>6} {:>8} {:>8}",
            2 * s.degree,
            s.rank,
            torsion,
            c
        )
        .unwrap();
    }
    writeln!(text, "betti: {}", join(&ranks[..n.max(1)])).unwrap();
    writeln!(text, "euler characteristic: {}", q.euler_characteristic()).unwrap();
    writeln!(
        text,
        "counting formula: {}",
        if agree { "agrees" } else { "DISAGREES" }
    )
    .unwrap();
    if duality.passed {
        writeln!(text, "poincare duality: holds").unwrap();
    } else {
        for p in &duality.problems {
            writeln!(text, "poincare duality: {p}").unwrap();
        }
    }
    if !vanish {
        writeln!(text, "nonzero rank above degree {}", 2 * (n - 1)).unwrap();
    }
    for (i, img) in chern.iter().enumerate() {
        let terms: Vec<String> = img.terms.iter().map(|(m, c)| format!("{c}*{m}")).collect();
        let shown = if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        };
        writeln!(text, "c{} -> {shown}", i + 1).unwrap();
    }

    let passed = agree && duality.passed && vanish;
    let json = json!({
        "n": n,
        "ranks": ranks,
        "torsion": q.slices.iter().map(|s| s.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "counted": counted,
        "euler_characteristic": q.euler_characteristic(),
        "poincare_duality": duality.passed,
        "problems": duality.problems,
        "chern_images": chern.iter().map(|img| img.terms.iter().map(|(m, c)| json!({
            "monomial": m.to_string(),
            "coeff": c.to_string(),
        })).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "passed": passed,
    });
    Ok(Report::new(text, json, passed))
}

pub fn search(params: SearchParams, cap: Option<u128>) -> Result<Report, CliError> {
    let mut opts = SearchOptions::default();
    if let Some(cap) = cap {
        opts.cap = cap;
    }
    let result = search_candidates_with(params, opts)?;
    let fmt_point = |p: &Vec<i64>| {
        format!(
            "({})",
            p.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
        )
    };
    let mut text = format!(
        "examined {} configurations of {} points, weights in [-{b}, {b}]; {} pass up to degree {}\n",
        result.examined,
        params.num_points,
        result.passing.len(),
        params.max_degree,
        b = params.weight_bound,
    );
    for c in &result.passing {
        writeln!(
            text,
            "{}",
            c.iter().map(fmt_point).collect::<Vec<_>>().join(" ")
        )
        .unwrap();
    }
    let json = json!({
        "n": params.n,
        "points": params.num_points,
        "bound": params.weight_bound,
        "degree": params.max_degree,
        "examined": result.examined.to_string(),
        "passing": result.passing,
    });
    Ok(Report::new(text, json, true))
}

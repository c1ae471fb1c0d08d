//! Machine-readable reports. Field order is fixed, so JSON output is
//! byte-identical across runs.

use std::collections::BTreeMap;

use lieschur::bounds::{
    algebra_bound_report, check_defect_one, check_pair_defect_one, pair_bound_report, BoundReport, CheckResult,
};
use lieschur::pairs::resolve_complement;
use lieschur::{multiplier_report, pair_multiplier_report, Algebra, Pair, Scalar, Subspace, SuperAlgebra};
use serde::Serialize;

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundJson {
    pub bound: i64,
    pub value: i64,
    pub slack: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckJson {
    pub status: String,
    pub detail: String,
}

impl From<CheckResult> for CheckJson {
    fn from(c: CheckResult) -> Self {
        CheckJson { status: c.status.to_string(), detail: c.detail }
    }
}

fn bounds_json(r: &BoundReport) -> BTreeMap<String, BoundJson> {
    r.bounds
        .iter()
        .map(|b| (b.name.to_string(), BoundJson { bound: b.bound, value: b.value, slack: b.slack() }))
        .collect()
}

#[allow(non_snake_case)]
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MultiplierJson {
    pub name: String,
    pub dims: (usize, usize),
    pub dim_M: usize,
    pub rank_d2: usize,
    pub rank_d3: usize,
    pub wedge2: usize,
    pub wedge3: usize,
    pub dim_derived: usize,
    pub bound: usize,
    pub t: i64,
    pub bounds: BTreeMap<String, BoundJson>,
    pub checks: BTreeMap<String, CheckJson>,
}

pub fn multiplier_json(name: &str, alg: &Algebra) -> MultiplierJson {
    let m = multiplier_report(alg);
    let b = algebra_bound_report(name, alg);
    let mut checks = BTreeMap::new();
    checks.insert("defect_one_is_heisenberg".to_string(), check_defect_one(alg).into());
    MultiplierJson {
        name: name.to_string(),
        dims: m.dims,
        dim_M: m.dim_m,
        rank_d2: m.rank_d2,
        rank_d3: m.rank_d3,
        wedge2: m.wedge2_len,
        wedge3: m.wedge3_len,
        dim_derived: m.dim_derived,
        bound: m.nayak_bound,
        t: b.defect,
        bounds: bounds_json(&b),
        checks,
    }
}

#[allow(non_snake_case)]
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairJson {
    pub name: String,
    pub dim_N: (usize, usize),
    pub dim_quotient: (usize, usize),
    pub complement: Vec<String>,
    pub complement_is_ideal: bool,
    pub dim_M: usize,
    pub dim_M_algebra: usize,
    pub dim_M_quotient: usize,
    pub dim_commutator: usize,
    pub dim_pair_center: (usize, usize),
    pub bound: i64,
    pub t: i64,
    pub bounds: BTreeMap<String, BoundJson>,
    pub checks: BTreeMap<String, CheckJson>,
}

/// Labels of a basis-aligned subspace, or rendered vectors otherwise.
pub fn subspace_labels(alg: &Algebra, s: &Subspace) -> Vec<String> {
    s.basis_vectors().iter().map(|v| render_vector(alg, v)).collect()
}

/// `2*x1 - 1/2*y1`, or `0`.
pub fn render_vector<T: Scalar>(alg: &SuperAlgebra<T>, v: &[T]) -> String {
    let mut out = String::new();
    for (k, c) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let negative = c.is_negative();
        let magnitude = c.abs();
        if out.is_empty() {
            out.push_str(if negative { "-" } else { "" });
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if !magnitude.is_one() {
            out.push_str(&format!("{magnitude}*"));
        }
        out.push_str(alg.name(k));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn pair_json(name: &str, p: &Pair) -> Result<PairJson, CliError> {
    let unsupported = |e: lieschur::Error| match e {
        lieschur::Error::UnsupportedPair(msg) => CliError::Unsupported(msg),
        other => CliError::Invalid(other.to_string()),
    };
    let (k, _) = resolve_complement(p).map_err(unsupported)?;
    let r = pair_multiplier_report(p).map_err(unsupported)?;
    let b = pair_bound_report(name, p).map_err(unsupported)?;
    let mut checks = BTreeMap::new();
    let c = check_pair_defect_one(p).map_err(unsupported)?;
    checks.insert("pair_defect_one".to_string(), c.into());
    Ok(PairJson {
        name: name.to_string(),
        dim_N: r.dim_n,
        dim_quotient: r.dim_quotient,
        complement: subspace_labels(p.algebra(), &k),
        complement_is_ideal: r.complement.is_ideal,
        dim_M: r.dim_m,
        dim_M_algebra: r.dim_m_algebra,
        dim_M_quotient: r.dim_m_quotient,
        dim_commutator: r.dim_commutator,
        dim_pair_center: r.dim_pair_center,
        bound: r.bound,
        t: r.defect,
        bounds: bounds_json(&b),
        checks,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidateJson {
    pub name: String,
    pub valid: bool,
    pub violations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalyzeJson {
    pub name: String,
    pub dims: (usize, usize),
    pub center: Vec<String>,
    pub derived: Vec<String>,
    pub lower_central_series: Vec<(usize, usize)>,
    pub nilpotency: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pair: Option<PairAnalysisJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairAnalysisJson {
    pub ideal: Vec<String>,
    pub pair_center: Vec<String>,
    pub commutator: Vec<String>,
}

pub fn analyze_json(name: &str, alg: &Algebra, ideal: Option<&Subspace>) -> Result<AnalyzeJson, CliError> {
    let pair = match ideal {
        Some(n) => {
            let center = alg.pair_center(n).map_err(|e| CliError::Invalid(format!("ideal: {e}")))?;
            let commutator = alg.commutator_subspace(n, &alg.whole()).map_err(|e| CliError::Invalid(e.to_string()))?;
            Some(PairAnalysisJson {
                ideal: subspace_labels(alg, n),
                pair_center: subspace_labels(alg, &center),
                commutator: subspace_labels(alg, &commutator),
            })
        }
        None => None,
    };
    Ok(AnalyzeJson {
        name: name.to_string(),
        dims: alg.dims(),
        center: subspace_labels(alg, &alg.center()),
        derived: subspace_labels(alg, &alg.derived()),
        lower_central_series: alg.lower_central_series().iter().map(Subspace::dims).collect(),
        nilpotency: alg.nilpotency_class().to_string(),
        pair,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use lieschur::{catalog, Rational};

    #[test]
    fn heisenberg_11_multiplier_keys() {
        let h: Algebra = catalog::heisenberg_even(1, 1).unwrap();
        let j = serde_json::to_value(multiplier_json("h", &h)).unwrap();
        assert_eq!(j["dim_M"], 3);
        assert_eq!(j["bound"], 7);
        assert_eq!(j["t"], 4);
        assert!(j["bounds"]["nayak"].is_object());
        assert!(j["checks"].is_object());
    }

    #[test]
    fn vectors_render_with_signs() {
        let h: Algebra = catalog::heisenberg_lie(1).unwrap();
        let v = vec![Rational::from_i64(-1), Rational::from_i64(0), Rational::from_i64(2)];
        assert_eq!(render_vector(&h, &v), "-x1 + 2*z");
        assert_eq!(render_vector(&h, &vec![Rational::from_i64(0); 3]), "0");
    }

    #[test]
    fn pair_without_complement_is_unsupported() {
        let h: Algebra = catalog::heisenberg_lie(1).unwrap();
        let p = Pair::new(h.clone(), h.span_of_labels(&["z"]).unwrap(), None).unwrap();
        assert_eq!(pair_json("h", &p).unwrap_err().exit_code(), 3);
    }
}

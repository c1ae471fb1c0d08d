//! Closed-form dimension bounds, defects, and executable checks of the
//! characterisations of near-extremal multipliers.

use std::fmt;

use crate::algebra::SuperAlgebra;
use crate::error::{Error, Result};
use crate::homology::multiplier_report;
use crate::pairs::{pair_multiplier_report, PairPresentation};
use crate::scalar::Scalar;

/// `((m+n)^2 + (n-m)) / 2`, the dimension of the super exterior square of an
/// `(m|n)`-dimensional space. For `n = 0` this is `m(m-1)/2`.
pub fn nayak_bound(m: usize, n: usize) -> usize {
    ((m + n) * (m + n) + n - m) / 2
}

/// Upper bound on `dim [N, L]` given `dim N/Z(N,L) = (m|n)` and
/// `dim L/N = (p|q)`: `nayak_bound(m, n) + (m+n)(p+q)`.
pub fn commutator_bound(n_mod_center: (usize, usize), quotient: (usize, usize)) -> usize {
    let (m, n) = n_mod_center;
    let (p, q) = quotient;
    nayak_bound(m, n) + (m + n) * (p + q)
}

/// Upper bound on `dim M(N, L)` for `dim N = (m|n)`:
/// `nayak_bound(m, n) + dim N * dim(L/N)`, minus `dim [N, L]` when
/// `include_commutator` is set.
pub fn pair_multiplier_bound(
    dim_n: (usize, usize),
    quotient: (usize, usize),
    dim_commutator: usize,
    include_commutator: bool,
) -> i64 {
    let (m, n) = dim_n;
    let base = (nayak_bound(m, n) + (m + n) * (quotient.0 + quotient.1)) as i64;
    if include_commutator {
        base - dim_commutator as i64
    } else {
        base
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeisenbergKind {
    /// `H(m, n)`, even center, dimension `(2m+1|n)`
    Even,
    /// `H(n)`, odd center, dimension `(n|n+1)`
    Odd,
}

/// Known multiplier dimensions of the Heisenberg superalgebras. For
/// [`HeisenbergKind::Odd`] only `n` is used.
pub fn heisenberg_multiplier_formula(kind: HeisenbergKind, m: usize, n: usize) -> Result<usize> {
    match kind {
        HeisenbergKind::Even => match (m, n) {
            (0, 0) => Err(Error::OutOfFamily("even-center Heisenberg needs m + n >= 1".into())),
            (0, 1) => Ok(0),
            (1, 0) => Ok(2),
            // m + n >= 2 keeps this nonnegative
            _ => Ok(2 * m * m + 2 * m * n + n * (n + 1) / 2 - m - 1),
        },
        HeisenbergKind::Odd => match n {
            0 => Err(Error::OutOfFamily("odd-center Heisenberg needs n >= 1".into())),
            1 => Ok(2),
            _ => Ok(2 * n * n - 1),
        },
    }
}

/// `t(L) = nayak_bound(dim L) - dim M(L)`.
pub fn defect_t<T: Scalar>(alg: &SuperAlgebra<T>) -> usize {
    multiplier_report(alg).defect
}

/// Pair defect relative to the bound without the commutator term.
pub fn defect_t_pair<T: Scalar>(p: &PairPresentation<T>) -> Result<i64> {
    pair_multiplier_report(p).map(|r| r.defect)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundValue {
    pub name: &'static str,
    pub bound: i64,
    pub value: i64,
}

impl BoundValue {
    pub fn slack(&self) -> i64 {
        self.bound - self.value
    }

    pub fn holds(&self) -> bool {
        self.slack() >= 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub subject: String,
    pub dim: (usize, usize),
    /// `dim N` (equal to `dim` for a single algebra)
    pub dim_n: (usize, usize),
    pub dim_quotient: (usize, usize),
    /// `dim [N, L]`
    pub dim_commutator: usize,
    /// `dim Z(N, L)`
    pub dim_center: (usize, usize),
    /// `dim M(L)` or `dim M(N, L)`
    pub dim_m: usize,
    pub bounds: Vec<BoundValue>,
    pub defect: i64,
    pub flags: Vec<(&'static str, bool)>,
}

impl BoundReport {
    pub fn all_hold(&self) -> bool {
        self.bounds.iter().all(BoundValue::holds)
    }

    pub fn bound(&self, name: &str) -> Option<&BoundValue> {
        self.bounds.iter().find(|b| b.name == name)
    }

    pub fn flag(&self, name: &str) -> Option<bool> {
        self.flags.iter().find(|(n, _)| *n == name).map(|&(_, v)| v)
    }
}

/// Recognises `H(1)`: dimension `(3|0)` and `L^2 = Z(L)` one-dimensional.
pub fn is_heisenberg_3<T: Scalar>(alg: &SuperAlgebra<T>) -> bool {
    if alg.dims() != (3, 0) {
        return false;
    }
    let derived = alg.derived();
    derived.dim() == 1 && derived == alg.center()
}

pub fn algebra_bound_report<T: Scalar>(subject: &str, alg: &SuperAlgebra<T>) -> BoundReport {
    let mult = multiplier_report(alg);
    let center = alg.center();
    let (cm, cn) = center.dims();
    let (m, n) = alg.dims();
    let commutator = commutator_bound((m - cm, n - cn), (0, 0));
    BoundReport {
        subject: subject.to_string(),
        dim: (m, n),
        dim_n: (m, n),
        dim_quotient: (0, 0),
        dim_commutator: mult.dim_derived,
        dim_center: (cm, cn),
        dim_m: mult.dim_m,
        bounds: vec![
            BoundValue { name: "nayak", bound: mult.nayak_bound as i64, value: mult.dim_m as i64 },
            BoundValue { name: "commutator", bound: commutator as i64, value: mult.dim_derived as i64 },
        ],
        defect: mult.defect as i64,
        flags: vec![
            ("abelian", alg.is_abelian()),
            ("nilpotent", alg.is_nilpotent()),
            ("heisenberg_3", is_heisenberg_3(alg)),
        ],
    }
}

pub fn pair_bound_report<T: Scalar>(subject: &str, p: &PairPresentation<T>) -> Result<BoundReport> {
    let r = pair_multiplier_report(p)?;
    let alg = p.algebra();
    let (nm, nn) = r.dim_n;
    let (cm, cn) = r.dim_pair_center;
    Ok(BoundReport {
        subject: subject.to_string(),
        dim: alg.dims(),
        dim_n: r.dim_n,
        dim_quotient: r.dim_quotient,
        dim_commutator: r.dim_commutator,
        dim_center: r.dim_pair_center,
        dim_m: r.dim_m,
        bounds: vec![
            BoundValue {
                name: "commutator",
                bound: commutator_bound((nm - cm, nn - cn), r.dim_quotient) as i64,
                value: r.dim_commutator as i64,
            },
            BoundValue { name: "pair_with_commutator", bound: r.bound_with_commutator, value: r.dim_m as i64 },
            BoundValue { name: "pair", bound: r.bound, value: r.dim_m as i64 },
        ],
        defect: r.defect,
        flags: vec![
            ("abelian", alg.is_abelian()),
            ("nilpotent", alg.is_nilpotent()),
            ("central_ideal", alg.center().contains(p.ideal())),
            ("complement_is_ideal", r.complement.is_ideal),
        ],
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    /// The premise does not apply (for example the defect is not 1).
    Vacuous,
    Fail,
    /// The algebra is not nilpotent, so there is nothing to check.
    HypothesisUnmet,
}

impl CheckStatus {
    /// Pass, vacuous pass, or not applicable.
    pub fn is_ok(self) -> bool {
        self != CheckStatus::Fail
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Vacuous => "vacuous",
            CheckStatus::Fail => "FAIL",
            CheckStatus::HypothesisUnmet => "not nilpotent",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub status: CheckStatus,
    pub detail: String,
}

/// For a nilpotent complemented pair with pair defect 1: `L` is non-abelian
/// and either `[N, L] = 0`, or `[N, L] = Z(N, L)` is one-dimensional.
pub fn check_pair_defect_one<T: Scalar>(p: &PairPresentation<T>) -> Result<CheckResult> {
    let alg = p.algebra();
    if !alg.is_nilpotent() {
        return Ok(CheckResult { status: CheckStatus::HypothesisUnmet, detail: "L is not nilpotent".into() });
    }
    let r = pair_multiplier_report(p)?;
    if r.defect != 1 {
        return Ok(CheckResult { status: CheckStatus::Vacuous, detail: format!("pair defect {}", r.defect) });
    }
    if alg.is_abelian() {
        return Ok(CheckResult { status: CheckStatus::Fail, detail: "pair defect 1 with L abelian".into() });
    }
    let commutator = alg.commutator_subspace(p.ideal(), &alg.whole())?;
    if commutator.is_zero() {
        return Ok(CheckResult { status: CheckStatus::Pass, detail: "[N,L] = 0".into() });
    }
    let center = alg.pair_center(p.ideal())?;
    if commutator.dim() == 1 && commutator == center {
        return Ok(CheckResult { status: CheckStatus::Pass, detail: "[N,L] = Z(N,L), dim 1".into() });
    }
    Ok(CheckResult {
        status: CheckStatus::Fail,
        detail: format!(
            "dim [N,L] = {}, dim Z(N,L) = {:?}, equal: {}",
            commutator.dim(),
            center.dims(),
            commutator == center
        ),
    })
}

/// For nilpotent `L`: `t(L) = 1` exactly when `L` is `H(1)`.
pub fn check_defect_one<T: Scalar>(alg: &SuperAlgebra<T>) -> CheckResult {
    if !alg.is_nilpotent() {
        return CheckResult { status: CheckStatus::HypothesisUnmet, detail: "L is not nilpotent".into() };
    }
    let t = defect_t(alg);
    let h1 = is_heisenberg_3(alg);
    let status = if (t == 1) == h1 { CheckStatus::Pass } else { CheckStatus::Fail };
    CheckResult { status, detail: format!("t = {t}, recognised as H(1): {h1}") }
}

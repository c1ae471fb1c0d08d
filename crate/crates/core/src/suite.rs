//! The regression suite: closed-form multiplier tables, bound populations,
//! chain-complex sanity, pair decomposition, the defect-one
//! characterisations and semidirect soundness.

use std::fmt;

use itertools::Itertools;

use crate::action::semidirect;
use crate::algebra::SuperAlgebra;
use crate::bounds::{
    algebra_bound_report, check_defect_one, check_pair_defect_one, defect_t, heisenberg_multiplier_formula,
    is_heisenberg_3, nayak_bound, CheckStatus, HeisenbergKind,
};
use crate::catalog::{self, enumerate_catalog, CatalogEntry};
use crate::error::Result;
use crate::homology::{boundary_maps, multiplier_dim};
use crate::pairs::{
    find_complement, pair_multiplier_dim, pair_multiplier_report_given, PairMultiplierReport, PairPresentation,
};
use crate::random::{action_triple, random_algebras, rng};
use crate::scalar::Scalar;
use crate::subspace::GradedSubspace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub max_dim: usize,
    pub random_algebras: usize,
    pub random_actions: usize,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { max_dim: 6, random_algebras: 100, random_actions: 50, seed: 0x5eed }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl CriterionResult {
    fn new(id: u8, title: &'static str) -> Self {
        CriterionResult { id, title, checked: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checked > 0
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(describe());
        }
    }
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {:>2}. {} ({} checks, {} failures)", self.id, self.title, self.checked, self.failures.len())
    }
}

/// A pair from the catalog: an algebra together with a basis-aligned graded
/// ideal that has a basis-aligned complementary subalgebra, and its report.
pub struct CatalogPair<T: Scalar> {
    pub id: String,
    pub pair: PairPresentation<T>,
    pub report: Result<PairMultiplierReport>,
}

/// Every nonzero basis-subset graded ideal of each entry that admits a
/// basis-aligned complement, with that complement attached.
pub fn catalog_pairs<T: Scalar>(entries: &[CatalogEntry<T>]) -> Vec<CatalogPair<T>> {
    let mut out = Vec::new();
    for e in entries {
        let alg = &e.algebra;
        let dim_m = multiplier_dim(alg);
        let d = alg.dim();
        for size in 1..=d {
            for idx in (0..d).combinations(size) {
                let n = GradedSubspace::from_indices(alg.dims(), &idx).expect("indices in range");
                if !alg.is_graded_ideal(&n) {
                    continue;
                }
                if let Some(k) = find_complement(alg, &n) {
                    let labels = idx.iter().map(|&i| alg.name(i)).join(",");
                    let pair = PairPresentation::new(alg.clone(), n, Some(k)).expect("ideal of this algebra");
                    let report = pair_multiplier_report_given(&pair, dim_m);
                    out.push(CatalogPair { id: format!("{} / N = {{{labels}}}", e.id), pair, report });
                }
            }
        }
    }
    out
}

/// Everything the suite quantifies over, built once.
pub struct Population<T: Scalar> {
    pub catalog: Vec<CatalogEntry<T>>,
    pub random: Vec<SuperAlgebra<T>>,
    pub pairs: Vec<CatalogPair<T>>,
}

impl<T: Scalar> Population<T> {
    pub fn new(config: &SuiteConfig) -> Self {
        let catalog = enumerate_catalog(config.max_dim);
        let random = random_algebras(config.seed, config.random_algebras);
        let pairs = catalog_pairs(&catalog);
        Population { catalog, random, pairs }
    }

    fn algebras(&self) -> impl Iterator<Item = (String, &SuperAlgebra<T>)> {
        let named = self.catalog.iter().map(|e| (e.id.clone(), &e.algebra));
        let random = self.random.iter().enumerate().map(|(i, a)| (format!("random #{i} {:?}", a.dims()), a));
        named.chain(random)
    }
}

pub fn heisenberg_even_table<T: Scalar>() -> CriterionResult {
    let mut r = CriterionResult::new(1, "even-center Heisenberg multipliers, m + n <= 4");
    for (m, n) in (0..=4usize).cartesian_product(0..=4usize).filter(|&(m, n)| (1..=4).contains(&(m + n))) {
        let alg: SuperAlgebra<T> = catalog::heisenberg_even(m, n).expect("in family");
        let got = multiplier_dim(&alg);
        let want = heisenberg_multiplier_formula(HeisenbergKind::Even, m, n).expect("in family");
        r.check(got == want, || format!("Heven({m},{n}): computed {got}, formula {want}"));
    }
    r
}

pub fn heisenberg_odd_table<T: Scalar>() -> CriterionResult {
    let mut r = CriterionResult::new(2, "odd-center Heisenberg multipliers, n = 1, 2, 3");
    for n in 1..=3 {
        let alg: SuperAlgebra<T> = catalog::heisenberg_odd(n).expect("in family");
        let got = multiplier_dim(&alg);
        let want = heisenberg_multiplier_formula(HeisenbergKind::Odd, 0, n).expect("in family");
        r.check(got == want, || format!("Hodd({n}): computed {got}, formula {want}"));
    }
    r
}

pub fn abelian_equality<T: Scalar>(pop: &Population<T>) -> CriterionResult {
    let mut r = CriterionResult::new(3, "exterior-square bound attained exactly by abelian algebras");
    for (m, n) in (0..=4).cartesian_product(0..=4) {
        let got = multiplier_dim(&catalog::abelian::<T>(m, n));
        let want = nayak_bound(m, n);
        r.check(got == want, || format!("abelian({m}|{n}): computed {got}, expected {want}"));
    }
    for e in pop.catalog.iter().filter(|e| !e.algebra.is_abelian()) {
        let (m, n) = e.algebra.dims();
        let got = multiplier_dim(&e.algebra);
        r.check(got < nayak_bound(m, n), || format!("{}: dim M = {got} attains the bound", e.id));
    }
    r
}

pub fn defect_one_population<T: Scalar>(pop: &Population<T>) -> CriterionResult {
    let mut r = CriterionResult::new(4, "defect 1 among nilpotent entries occurs exactly at H(1)");
    let mut lie_hits = 0;
    let mut super_hits = 0;
    for e in pop.catalog.iter().filter(|e| e.algebra.is_nilpotent()) {
        let t = defect_t(&e.algebra);
        let h1 = is_heisenberg_3(&e.algebra);
        let (_, n) = e.algebra.dims();
        if n == 0 && e.algebra.dim() <= 6 {
            r.check((t == 1) == h1, || format!("{} (Lie): t = {t}, H(1): {h1}", e.id));
            lie_hits += usize::from(t == 1);
        }
        let check = check_defect_one(&e.algebra);
        r.check(check.status == CheckStatus::Pass, || format!("{}: {}", e.id, check.detail));
        super_hits += usize::from(t == 1);
    }
    r.check(lie_hits >= 1 && super_hits >= 1, || "H(1) absent from the population".into());
    r
}

pub fn bound_suites<T: Scalar>(pop: &Population<T>) -> CriterionResult {
    let mut r = CriterionResult::new(5, "commutator, exterior-square and pair bounds hold");
    for (id, alg) in pop.algebras() {
        let valid = alg.validate().is_valid();
        r.check(valid, || format!("{id}: not a valid superalgebra"));
        if !valid {
            continue;
        }
        let report = algebra_bound_report(&id, alg);
        for b in &report.bounds {
            r.check(b.holds(), || format!("{id}: {} bound {} < value {}", b.name, b.bound, b.value));
        }
    }
    for p in &pop.pairs {
        match &p.report {
            Ok(rep) => {
                let dim_m = rep.dim_m as i64;
                r.check(rep.dim_commutator <= rep.commutator_bound, || {
                    format!("{}: dim [N,L] = {} > {}", p.id, rep.dim_commutator, rep.commutator_bound)
                });
                r.check(dim_m <= rep.bound_with_commutator, || {
                    format!("{}: dim M(N,L) = {} > {}", p.id, rep.dim_m, rep.bound_with_commutator)
                });
                r.check(dim_m <= rep.bound, || format!("{}: dim M(N,L) = {} > {}", p.id, rep.dim_m, rep.bound));
            }
            Err(e) => r.check(false, || format!("{}: {e}", p.id)),
        }
    }
    r
}

pub fn chain_complex<T: Scalar>(pop: &Population<T>) -> CriterionResult {
    let mut r = CriterionResult::new(6, "d2 d3 = 0 and rank d2 = dim [L, L]");
    for (id, alg) in pop.algebras() {
        let maps = boundary_maps(alg);
        let composite = maps.d2.mul(&maps.d3).expect("shapes compose");
        r.check(composite.is_zero(), || format!("{id}: d2 d3 != 0"));
        let (rank, derived) = (maps.d2.rank(), alg.derived().dim());
        r.check(rank == derived, || format!("{id}: rank d2 = {rank}, dim [L,L] = {derived}"));
    }
    r
}

pub fn pair_decomposition<T: Scalar>(pop: &Population<T>) -> CriterionResult {
    let mut r = CriterionResult::new(7, "M(L, L) = M(L); abelian pairs attain the pair bound");
    for e in &pop.catalog {
        let whole = PairPresentation::whole(e.algebra.clone());
        let got = pair_multiplier_dim(&whole);
        let want = multiplier_dim(&e.algebra);
        r.check(got.as_ref().ok() == Some(&want), || format!("{}: M(L,L) = {got:?}, M(L) = {want}", e.id));
    }
    for p in pop.pairs.iter().filter(|p| p.pair.algebra().is_abelian()) {
        match &p.report {
            Ok(rep) => {
                r.check(rep.defect == 0, || format!("{}: bound {} but dim M(N,L) = {}", p.id, rep.bound, rep.dim_m))
            }
            Err(e) => r.check(false, || format!("{}: {e}", p.id)),
        }
    }
    r
}

pub fn pair_defect_one<T: Scalar>(pop: &Population<T>) -> CriterionResult {
    let mut r = CriterionResult::new(8, "pair defect 1 forces [N,L] = 0 or [N,L] = Z(N,L) of dim 1");
    for p in pop.pairs.iter().filter(|p| p.pair.algebra().is_nilpotent()) {
        match &p.report {
            Ok(rep) if rep.defect != 1 => {}
            Ok(_) => match check_pair_defect_one(&p.pair) {
                Ok(c) => r.check(c.status == CheckStatus::Pass, || format!("{}: {}", p.id, c.detail)),
                Err(e) => r.check(false, || format!("{}: {e}", p.id)),
            },
            Err(e) => r.check(false, || format!("{}: {e}", p.id)),
        }
    }
    r
}

pub fn semidirect_soundness<T: Scalar>(config: &SuiteConfig) -> CriterionResult {
    let mut r = CriterionResult::new(9, "semidirect products are valid with the expected ideal and quotient");
    let mut rng = rng(config.seed ^ 0x9e37_79b9);
    let mut produced = 0;
    while produced < config.random_actions {
        let t = action_triple::<T, _>(&mut rng);
        if !t.action.validate().is_valid() {
            continue;
        }
        produced += 1;
        let label = format!("triple #{produced} L {:?} on M {:?}", t.acting.dims(), t.acted.dims());
        let sd = match semidirect(&t.acted, &t.acting, &t.action) {
            Ok(sd) => sd,
            Err(e) => {
                r.check(false, || format!("{label}: {e}"));
                continue;
            }
        };
        r.check(sd.algebra.validate().is_valid(), || format!("{label}: product fails the axioms"));
        let m = sd.m_subspace();
        r.check(sd.algebra.is_graded_ideal(&m), || format!("{label}: M is not a graded ideal"));
        match sd.algebra.quotient(&m) {
            Ok(q) => {
                let same = q.kept == sd.l_indices
                    && q.algebra.dims() == t.acting.dims()
                    && q.algebra.table() == t.acting.table();
                r.check(same, || format!("{label}: quotient differs from L"));
            }
            Err(e) => r.check(false, || format!("{label}: {e}")),
        }
    }
    r
}

/// Runs criteria 1 to 9 in order.
pub fn run_suite<T: Scalar>(config: &SuiteConfig) -> Vec<CriterionResult> {
    let pop = Population::<T>::new(config);
    vec![
        heisenberg_even_table::<T>(),
        heisenberg_odd_table::<T>(),
        abelian_equality(&pop),
        defect_one_population(&pop),
        bound_suites(&pop),
        chain_complex(&pop),
        pair_decomposition(&pop),
        pair_defect_one(&pop),
        semidirect_soundness::<T>(config),
    ]
}

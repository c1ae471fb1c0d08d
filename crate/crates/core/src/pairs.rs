//! Pairs `(N, L)` of a superalgebra and a graded ideal: complements, the
//! pair multiplier `M(N, L)`, and relative central extensions.
//!
//! `M(N, L)` is computed from the splitting `M(L) = M(N, L) ⊕ M(L/N)`,
//! which holds whenever `N` has a complementary subalgebra. Pairs without
//! one are refused rather than guessed at.

use crate::action::ActionTable;
use crate::algebra::SuperAlgebra;
use crate::bounds::{commutator_bound, pair_multiplier_bound};
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::homology::multiplier_dim;
use crate::scalar::Scalar;
use crate::subspace::GradedSubspace;
use itertools::Itertools;

#[derive(Debug, Clone)]
pub struct PairPresentation<T: Scalar> {
    algebra: SuperAlgebra<T>,
    ideal: GradedSubspace<T>,
    complement: Option<GradedSubspace<T>>,
}

impl<T: Scalar> PairPresentation<T> {
    /// Checks that `ideal` is a graded ideal. A claimed complement is stored
    /// as given; see [`verify_complement`].
    pub fn new(
        algebra: SuperAlgebra<T>,
        ideal: GradedSubspace<T>,
        complement: Option<GradedSubspace<T>>,
    ) -> Result<Self> {
        if ideal.shape() != algebra.dims() || complement.as_ref().is_some_and(|k| k.shape() != algebra.dims()) {
            return Err(Error::MixedAlgebra);
        }
        if !algebra.is_graded_ideal(&ideal) {
            return Err(Error::NotAnIdeal);
        }
        Ok(PairPresentation { algebra, ideal, complement })
    }

    /// The pair `(L, L)`, complemented by zero.
    pub fn whole(algebra: SuperAlgebra<T>) -> Self {
        let ideal = algebra.whole();
        let complement = Some(algebra.zero_subspace());
        PairPresentation { algebra, ideal, complement }
    }

    pub fn algebra(&self) -> &SuperAlgebra<T> {
        &self.algebra
    }

    pub fn ideal(&self) -> &GradedSubspace<T> {
        &self.ideal
    }

    pub fn complement(&self) -> Option<&GradedSubspace<T>> {
        self.complement.as_ref()
    }

    pub fn with_complement(mut self, complement: GradedSubspace<T>) -> Self {
        self.complement = Some(complement);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementReport {
    pub is_subalgebra: bool,
    /// Reported for information; a complement need not be an ideal.
    pub is_ideal: bool,
    pub trivial_intersection: bool,
    pub dimensions_add_up: bool,
}

impl ComplementReport {
    pub fn is_complement(&self) -> bool {
        self.is_subalgebra && self.trivial_intersection && self.dimensions_add_up
    }
}

fn complement_report<T: Scalar>(
    alg: &SuperAlgebra<T>,
    n: &GradedSubspace<T>,
    k: &GradedSubspace<T>,
) -> ComplementReport {
    let (nm, nn) = n.dims();
    let (km, kn) = k.dims();
    ComplementReport {
        is_subalgebra: alg.is_subalgebra(k),
        is_ideal: alg.is_graded_ideal(k),
        trivial_intersection: n.intersect(k).is_ok_and(|i| i.is_zero()),
        dimensions_add_up: (nm + km, nn + kn) == alg.dims(),
    }
}

/// Whether the claimed complement `K` is a graded subalgebra with
/// `L = N ⊕ K`. Returns `None` when no complement is present.
pub fn verify_complement<T: Scalar>(p: &PairPresentation<T>) -> Option<ComplementReport> {
    p.complement.as_ref().map(|k| complement_report(&p.algebra, &p.ideal, k))
}

/// Searches spans of basis subsets (even subset outer, odd subset inner,
/// both lexicographic) for a complementary subalgebra.
pub fn find_complement<T: Scalar>(alg: &SuperAlgebra<T>, n: &GradedSubspace<T>) -> Option<GradedSubspace<T>> {
    if n.shape() != alg.dims() {
        return None;
    }
    let (m, d) = (alg.dims().0, alg.dim());
    let (nm, nn) = n.dims();
    let (want_even, want_odd) = (m - nm, (d - m) - nn);
    for evens in (0..m).combinations(want_even) {
        for odds in (m..d).combinations(want_odd) {
            let idx: Vec<usize> = evens.iter().chain(&odds).copied().collect();
            let k = GradedSubspace::from_indices(alg.dims(), &idx).expect("indices in range");
            if complement_report(alg, n, &k).is_complement() {
                return Some(k);
            }
        }
    }
    None
}

/// Everything computed for a complemented pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairMultiplierReport {
    pub dim_n: (usize, usize),
    pub dim_quotient: (usize, usize),
    /// `dim M(L)`
    pub dim_m_algebra: usize,
    /// `dim M(L/N)`
    pub dim_m_quotient: usize,
    /// `dim M(N, L)`
    pub dim_m: usize,
    /// `dim [N, L]`
    pub dim_commutator: usize,
    /// `dim Z(N, L)`
    pub dim_pair_center: (usize, usize),
    /// Bound on `dim [N, L]` in terms of `N / Z(N, L)` and `L / N`.
    pub commutator_bound: usize,
    /// Bound on `dim M(N, L)` including the `- dim [N, L]` term.
    pub bound_with_commutator: i64,
    /// Bound on `dim M(N, L)` without it.
    pub bound: i64,
    /// `bound - dim_m`.
    pub defect: i64,
    pub complement: ComplementReport,
}

/// Resolves the complement of a pair: the given one if valid, otherwise a
/// basis-aligned search.
pub fn resolve_complement<T: Scalar>(p: &PairPresentation<T>) -> Result<(GradedSubspace<T>, ComplementReport)> {
    if let Some(k) = &p.complement {
        let report = complement_report(&p.algebra, &p.ideal, k);
        if report.is_complement() {
            return Ok((k.clone(), report));
        }
        return Err(Error::UnsupportedPair("the supplied complement is not a complementary subalgebra".into()));
    }
    let k = find_complement(&p.algebra, &p.ideal)
        .ok_or_else(|| Error::UnsupportedPair("no basis-aligned complement found".into()))?;
    let report = complement_report(&p.algebra, &p.ideal, &k);
    Ok((k, report))
}

/// `dim M(N, L) = dim M(L) - dim M(L/N)` for a complemented pair.
pub fn pair_multiplier_report<T: Scalar>(p: &PairPresentation<T>) -> Result<PairMultiplierReport> {
    pair_multiplier_report_given(p, multiplier_dim(&p.algebra))
}

/// As [`pair_multiplier_report`], with `dim M(L)` already known.
pub(crate) fn pair_multiplier_report_given<T: Scalar>(
    p: &PairPresentation<T>,
    dim_m_algebra: usize,
) -> Result<PairMultiplierReport> {
    let (_, complement) = resolve_complement(p)?;
    let alg = &p.algebra;
    let quotient = alg.quotient(&p.ideal)?;
    let dim_m_quotient = multiplier_dim(&quotient.algebra);
    if dim_m_quotient > dim_m_algebra {
        return Err(Error::Internal(format!(
            "negative pair multiplier: dim M(L) = {dim_m_algebra} < dim M(L/N) = {dim_m_quotient}"
        )));
    }
    let dim_m = dim_m_algebra - dim_m_quotient;
    let commutator = alg.commutator_subspace(&p.ideal, &alg.whole())?;
    let center = alg.pair_center(&p.ideal)?;
    let dim_n = p.ideal.dims();
    let dim_quotient = quotient.algebra.dims();
    let (cm, cn) = center.dims();
    let n_mod_center = (dim_n.0 - cm, dim_n.1 - cn);
    let bound = pair_multiplier_bound(dim_n, dim_quotient, commutator.dim(), false);
    Ok(PairMultiplierReport {
        dim_n,
        dim_quotient,
        dim_m_algebra,
        dim_m_quotient,
        dim_m,
        dim_commutator: commutator.dim(),
        dim_pair_center: center.dims(),
        commutator_bound: commutator_bound(n_mod_center, dim_quotient),
        bound_with_commutator: pair_multiplier_bound(dim_n, dim_quotient, commutator.dim(), true),
        bound,
        defect: bound - dim_m as i64,
        complement,
    })
}

pub fn pair_multiplier_dim<T: Scalar>(p: &PairPresentation<T>) -> Result<usize> {
    pair_multiplier_report(p).map(|r| r.dim_m)
}

/// A homomorphism `sigma: M -> L` with an action of `L` on `M`, meant to be
/// a relative central extension of the pair `(ideal, L)`.
#[derive(Debug, Clone)]
pub struct RelativeCentralExtension<T: Scalar> {
    /// `dim L x dim M`
    pub sigma: Matrix<T>,
    pub action: ActionTable<T>,
    /// `N`, the subspace of `L` that `sigma` must hit.
    pub ideal: GradedSubspace<T>,
}

impl<T: Scalar> RelativeCentralExtension<T> {
    pub fn extension(&self) -> &SuperAlgebra<T> {
        self.action.acted()
    }

    pub fn base(&self) -> &SuperAlgebra<T> {
        self.action.acting()
    }

    pub fn kernel(&self) -> Vec<Vec<T>> {
        self.sigma.nullspace()
    }

    /// `[M, L]`, the span of all `^l m`, as a subspace of `M`.
    pub fn action_commutator(&self) -> GradedSubspace<T> {
        let (dl, dm) = (self.base().dim(), self.extension().dim());
        let images =
            (0..dl).flat_map(|l| (0..dm).map(move |m| (l, m))).map(|(l, m)| self.action.act_basis(l, m).to_vec());
        GradedSubspace::span(self.extension().dims(), images)
    }

    /// `Z(M, L) = { m : ^l m = 0 for all l }`.
    pub fn action_center(&self) -> GradedSubspace<T> {
        let (dl, dm) = (self.base().dim(), self.extension().dim());
        let mut rows = Vec::new();
        for l in 0..dl {
            for k in 0..dm {
                rows.push((0..dm).map(|m| self.action.act_basis(l, m)[k].clone()).collect());
            }
        }
        let system = Matrix::from_rows(dm, rows).expect("rows have width dim M");
        GradedSubspace::span(self.extension().dims(), system.nullspace())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtensionCondition {
    /// sigma maps even to even and odd to odd
    ParityPreserving,
    /// sigma[m, m'] = [sigma m, sigma m']
    Homomorphism,
    /// the action satisfies the action axioms
    Action,
    /// sigma(M) = N
    Image,
    /// sigma(^l m) = [l, sigma m]
    Equivariance,
    /// ^(sigma m') m = [m', m]
    Peiffer,
    /// ker sigma ⊆ Z(M, L)
    CentralKernel,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExtensionReport {
    pub failed: Vec<ExtensionCondition>,
}

impl ExtensionReport {
    pub fn is_valid(&self) -> bool {
        self.failed.is_empty()
    }
}

pub fn validate_rce<T: Scalar>(e: &RelativeCentralExtension<T>) -> ExtensionReport {
    let (m_alg, l_alg) = (e.extension(), e.base());
    let (dm, dl) = (m_alg.dim(), l_alg.dim());
    let mut failed = Vec::new();
    if e.sigma.rows() != dl || e.sigma.cols() != dm || e.ideal.shape() != l_alg.dims() {
        return ExtensionReport { failed: vec![ExtensionCondition::ParityPreserving, ExtensionCondition::Image] };
    }
    let sig = |v: &[T]| e.sigma.mul_vec(v).expect("shapes checked");
    let cols: Vec<Vec<T>> = (0..dm).map(|j| e.sigma.column(j)).collect();

    if (0..dm).any(|j| cols[j].iter().enumerate().any(|(i, c)| !c.is_zero() && l_alg.parity(i) != m_alg.parity(j))) {
        failed.push(ExtensionCondition::ParityPreserving);
    }
    let hom = (0..dm)
        .all(|i| (0..dm).all(|j| sig(m_alg.bracket_basis(i, j)) == l_alg.bracket(&cols[i], &cols[j]).expect("shapes")));
    if !hom {
        failed.push(ExtensionCondition::Homomorphism);
    }
    if !e.action.validate().is_valid() {
        failed.push(ExtensionCondition::Action);
    }
    if GradedSubspace::span(l_alg.dims(), cols.clone()) != e.ideal {
        failed.push(ExtensionCondition::Image);
    }
    let equivariant = (0..dl).all(|l| {
        (0..dm)
            .all(|m| sig(e.action.act_basis(l, m)) == l_alg.bracket(&l_alg.basis_vector(l), &cols[m]).expect("shapes"))
    });
    if !equivariant {
        failed.push(ExtensionCondition::Equivariance);
    }
    let peiffer = (0..dm).all(|m2| {
        (0..dm).all(|m| e.action.act(&cols[m2], &m_alg.basis_vector(m)).expect("shapes") == m_alg.bracket_basis(m2, m))
    });
    if !peiffer {
        failed.push(ExtensionCondition::Peiffer);
    }
    let center = e.action_center();
    if !e.kernel().iter().all(|v| center.contains_vector(v)) {
        failed.push(ExtensionCondition::CentralKernel);
    }
    ExtensionReport { failed }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport<T> {
    pub kernel_dim: usize,
    pub pair_multiplier_dim: usize,
    /// A kernel vector outside `[M, L]`, if any.
    pub witness: Option<Vec<T>>,
}

impl<T> CoverReport<T> {
    pub fn is_cover(&self) -> bool {
        self.kernel_dim == self.pair_multiplier_dim && self.witness.is_none()
    }
}

/// A relative central extension is a cover candidate when its kernel has the
/// dimension of `M(N, L)` and lies in `[M, L]`. Kernels are abelian, so
/// equal dimension is the same as isomorphism.
pub fn is_cover_candidate<T: Scalar>(
    e: &RelativeCentralExtension<T>,
    p: &PairPresentation<T>,
) -> Result<CoverReport<T>> {
    let pair_dim = pair_multiplier_dim(p)?;
    let kernel = e.kernel();
    let commutator = e.action_commutator();
    let witness = kernel.iter().find(|v| !commutator.contains_vector(v)).cloned();
    Ok(CoverReport { kernel_dim: kernel.len(), pair_multiplier_dim: pair_dim, witness })
}

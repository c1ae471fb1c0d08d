//! Actions of one superalgebra on another, and semidirect products.

use crate::algebra::SuperAlgebra;
use crate::error::{Error, Result};
use crate::scalar::{koszul_sign, Scalar};
use crate::subspace::GradedSubspace;

/// A bilinear map `L x M -> M`, `(l, m) -> ^l m`, stored on basis pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionTable<T: Scalar> {
    acting: SuperAlgebra<T>,
    acted: SuperAlgebra<T>,
    table: Vec<Vec<T>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ActionViolation {
    /// `^l m` has a component of the wrong parity.
    Grading { l: usize, m: usize },
    /// `^[l,l'] m != ^l(^l' m) - (-1)^(|l||l'|) ^l'(^l m)`.
    Compatibility { l: usize, l2: usize, m: usize },
    /// `^l [m,m'] != [^l m, m'] + (-1)^(|l||m|) [m, ^l m']`.
    Derivation { l: usize, m: usize, m2: usize },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ActionReport {
    pub violations: Vec<ActionViolation>,
}

impl ActionReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl<T: Scalar> ActionTable<T> {
    /// `table[l * dim M + m]` holds the coordinates of `^(e_l) f_m` in `M`.
    pub fn new(acting: SuperAlgebra<T>, acted: SuperAlgebra<T>, table: Vec<Vec<T>>) -> Result<Self> {
        let (dl, dm) = (acting.dim(), acted.dim());
        if table.len() != dl * dm {
            return Err(Error::DimensionMismatch { expected: dl * dm, found: table.len() });
        }
        if let Some(bad) = table.iter().find(|v| v.len() != dm) {
            return Err(Error::DimensionMismatch { expected: dm, found: bad.len() });
        }
        Ok(ActionTable { acting, acted, table })
    }

    pub fn trivial(acting: SuperAlgebra<T>, acted: SuperAlgebra<T>) -> Self {
        let n = acting.dim() * acted.dim();
        let dm = acted.dim();
        ActionTable { acting, acted, table: vec![vec![T::zero(); dm]; n] }
    }

    /// The action of a subalgebra `k` of `p` on a graded ideal `n` of `p` by
    /// `^l m = [l, m]`, both realised in their echelon bases.
    pub fn adjoint(p: &SuperAlgebra<T>, k: &GradedSubspace<T>, n: &GradedSubspace<T>) -> Result<Self> {
        if !p.is_graded_ideal(n) {
            return Err(Error::NotAnIdeal);
        }
        let (acting, _) = p.subalgebra(k)?;
        let (acted, _) = p.subalgebra(n)?;
        let mut table = Vec::with_capacity(k.dim() * n.dim());
        for (_, l) in k.basis() {
            for (_, m) in n.basis() {
                let v = p.bracket(l, m)?;
                table.push(n.coordinates_of(&v).ok_or(Error::NotAnIdeal)?);
            }
        }
        Ok(ActionTable { acting, acted, table })
    }

    pub fn acting(&self) -> &SuperAlgebra<T> {
        &self.acting
    }

    pub fn acted(&self) -> &SuperAlgebra<T> {
        &self.acted
    }

    pub fn act_basis(&self, l: usize, m: usize) -> &[T] {
        &self.table[l * self.acted.dim() + m]
    }

    /// `^l m` for coordinate vectors.
    pub fn act(&self, l: &[T], m: &[T]) -> Result<Vec<T>> {
        let (dl, dm) = (self.acting.dim(), self.acted.dim());
        if l.len() != dl {
            return Err(Error::DimensionMismatch { expected: dl, found: l.len() });
        }
        if m.len() != dm {
            return Err(Error::DimensionMismatch { expected: dm, found: m.len() });
        }
        let mut out = vec![T::zero(); dm];
        for (a, la) in l.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (b, mb) in m.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let coeff = la.clone() * mb.clone();
                for (o, v) in out.iter_mut().zip(self.act_basis(a, b)) {
                    if !v.is_zero() {
                        *o = o.clone() + coeff.clone() * v.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    /// Checks even grading, compatibility with the bracket of `L`, and the
    /// derivation rule on `M`, on all basis pairs and triples.
    pub fn validate(&self) -> ActionReport {
        let (l_alg, m_alg) = (&self.acting, &self.acted);
        let (dl, dm) = (l_alg.dim(), m_alg.dim());
        let mut violations = Vec::new();
        for l in 0..dl {
            for m in 0..dm {
                let want = l_alg.parity(l) + m_alg.parity(m);
                let v = self.act_basis(l, m);
                if v.iter().enumerate().any(|(k, c)| !c.is_zero() && m_alg.parity(k) != want) {
                    violations.push(ActionViolation::Grading { l, m });
                }
            }
        }
        for l in 0..dl {
            for l2 in 0..dl {
                let bracket = l_alg.bracket_basis(l, l2);
                for m in 0..dm {
                    let lhs = self.act(bracket, &m_alg.basis_vector(m)).expect("shapes agree");
                    let inner = self.act_basis(l2, m).to_vec();
                    let first = self.act(&l_alg.basis_vector(l), &inner).expect("shapes agree");
                    let inner2 = self.act_basis(l, m).to_vec();
                    let second = self.act(&l_alg.basis_vector(l2), &inner2).expect("shapes agree");
                    let flip = l_alg.parity(l).koszul(l_alg.parity(l2));
                    let rhs: Vec<T> =
                        first.into_iter().zip(second).map(|(a, b)| if flip { a + b } else { a - b }).collect();
                    if lhs != rhs {
                        violations.push(ActionViolation::Compatibility { l, l2, m });
                    }
                }
            }
        }
        for l in 0..dl {
            let lv = l_alg.basis_vector(l);
            for m in 0..dm {
                for m2 in 0..dm {
                    let lhs = self.act(&lv, m_alg.bracket_basis(m, m2)).expect("shapes agree");
                    let a = m_alg.bracket(self.act_basis(l, m), &m_alg.basis_vector(m2)).expect("shapes agree");
                    let b = m_alg.bracket(&m_alg.basis_vector(m), self.act_basis(l, m2)).expect("shapes agree");
                    let flip = l_alg.parity(l).koszul(m_alg.parity(m));
                    let rhs: Vec<T> = a.into_iter().zip(b).map(|(x, y)| if flip { x - y } else { x + y }).collect();
                    if lhs != rhs {
                        violations.push(ActionViolation::Derivation { l, m, m2 });
                    }
                }
            }
        }
        ActionReport { violations }
    }
}

/// `M ⋊ L` together with where each factor sits in its basis.
#[derive(Debug, Clone)]
pub struct Semidirect<T: Scalar> {
    pub algebra: SuperAlgebra<T>,
    /// Basis index in the product of each basis element of `M`.
    pub m_indices: Vec<usize>,
    /// Basis index in the product of each basis element of `L`.
    pub l_indices: Vec<usize>,
}

impl<T: Scalar> Semidirect<T> {
    /// `M` as a graded subspace of the product.
    pub fn m_subspace(&self) -> GradedSubspace<T> {
        GradedSubspace::from_indices(self.algebra.dims(), &self.m_indices).expect("indices in range")
    }

    pub fn l_subspace(&self) -> GradedSubspace<T> {
        GradedSubspace::from_indices(self.algebra.dims(), &self.l_indices).expect("indices in range")
    }
}

/// Semidirect product `M ⋊ L` with bracket
/// `[(m,l),(m',l')] = ([m,m'] + ^l m' - (-1)^(|m||l'|) ^l' m, [l,l'])`.
///
/// The basis is laid out like `m.direct_sum(l)`, so the trivial action gives
/// exactly the direct sum.
pub fn semidirect<T: Scalar>(m: &SuperAlgebra<T>, l: &SuperAlgebra<T>, act: &ActionTable<T>) -> Result<Semidirect<T>> {
    if act.acted() != m || act.acting() != l {
        return Err(Error::InvalidAction);
    }
    if !act.validate().is_valid() {
        return Err(Error::InvalidAction);
    }
    let (m0, m1) = m.dims();
    let (l0, l1) = l.dims();
    let m_indices: Vec<usize> = (0..m0).chain(m0 + l0..m0 + l0 + m1).collect();
    let l_indices: Vec<usize> = (m0..m0 + l0).chain(m0 + l0 + m1..m0 + l0 + m1 + l1).collect();
    let mut algebra = m.direct_sum(l);
    for (a, &la) in l_indices.iter().enumerate() {
        for (b, &mb) in m_indices.iter().enumerate() {
            for (k, c) in act.act_basis(a, b).iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mk = m_indices[k];
                algebra.add_structure_constant(la, mb, mk, c.clone());
                let swapped = -koszul_sign(m.parity(b), l.parity(a), c.clone());
                algebra.add_structure_constant(mb, la, mk, swapped);
            }
        }
    }
    Ok(Semidirect { algebra, m_indices, l_indices })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::Rational;

    type A = SuperAlgebra<Rational>;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn line(name: &str) -> A {
        SuperAlgebra::abelian(vec![name.to_string()], vec![])
    }

    #[test]
    fn adjoint_action_on_ideal_is_valid() {
        let h: A = catalog::heisenberg_even(1, 1).unwrap();
        let act = ActionTable::adjoint(&h, &h.whole(), &h.center()).unwrap();
        assert!(act.validate().is_valid());
        let act = ActionTable::adjoint(&h, &h.whole(), &h.whole()).unwrap();
        assert!(act.validate().is_valid());
        let ho: A = catalog::heisenberg_odd(2).unwrap();
        let k = ho.span_of_labels(&["x1", "y2"]).unwrap();
        let act = ActionTable::adjoint(&ho, &k, &ho.whole()).unwrap();
        assert!(act.validate().is_valid());
    }

    #[test]
    fn scaling_action_on_a_line() {
        let act = ActionTable::new(line("x"), line("m"), vec![vec![q(1)]]).unwrap();
        assert!(act.validate().is_valid());
        let sd = semidirect(&line("m"), &line("x"), &act).unwrap();
        assert_eq!(sd.algebra.names().collect::<Vec<_>>(), vec!["m", "x"]);
        // [x, m] = m
        assert_eq!(sd.algebra.bracket_basis(1, 0), &[q(1), q(0)]);
        assert_eq!(sd.algebra.bracket_basis(0, 1), &[q(-1), q(0)]);
        assert!(sd.algebra.validate().is_valid());
    }

    #[test]
    fn grading_violation() {
        // even l acting on even m landing on an odd vector
        let acted = SuperAlgebra::abelian(vec!["m".into()], vec!["f".into()]);
        let act = ActionTable::new(line("x"), acted, vec![vec![q(0), q(1)], vec![q(0), q(0)]]).unwrap();
        assert!(act.validate().violations.contains(&ActionViolation::Grading { l: 0, m: 0 }));
    }

    #[test]
    fn trivial_action_gives_direct_sum() {
        let m: A = catalog::heisenberg_odd(1).unwrap();
        let l: A = catalog::heisenberg_even(1, 1).unwrap();
        let sd = semidirect(&m, &l, &ActionTable::trivial(l.clone(), m.clone())).unwrap();
        assert_eq!(sd.algebra, m.direct_sum(&l));
    }

    #[test]
    fn semidirect_rejects_invalid_actions() {
        // a non-derivation of the Heisenberg algebra: x1 -> x1, others fixed at zero
        let m: A = catalog::heisenberg_lie(1).unwrap();
        let mut table = vec![vec![q(0); 3]; 3];
        table[0] = vec![q(1), q(0), q(0)];
        let act = ActionTable::new(line("t"), m.clone(), table).unwrap();
        assert!(!act.validate().is_valid());
        assert!(matches!(semidirect(&m, &line("t"), &act), Err(Error::InvalidAction)));
    }

    #[test]
    fn odd_semidirect_signs() {
        // an odd derivation of abelian (1|1): ^y x = f, ^y f = 0, with y odd acting
        let acting = SuperAlgebra::abelian(vec![], vec!["y".into()]);
        let acted = SuperAlgebra::abelian(vec!["e".into()], vec!["f".into()]);
        let act = ActionTable::new(acting.clone(), acted.clone(), vec![vec![q(0), q(1)], vec![q(0), q(0)]]).unwrap();
        // [y,y] = 0 in L so compatibility needs ^y(^y m) + ^y(^y m) = 0, which holds
        assert!(act.validate().is_valid());
        let sd = semidirect(&acted, &acting, &act).unwrap();
        assert!(sd.algebra.validate().is_valid());
        assert!(sd.algebra.is_graded_ideal(&sd.m_subspace()));
        assert!(sd.algebra.is_subalgebra(&sd.l_subspace()));
    }
}

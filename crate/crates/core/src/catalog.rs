//! Named families of Lie superalgebras, and an enumerator over them.
//!
//! Basis labels: `x1, x2, ...` for the non-central even generators, `y1, ...`
//! for odd generators and `z` for the central element.

use crate::algebra::{labels, IntBracket, SuperAlgebra};
use crate::bounds::{heisenberg_multiplier_formula, nayak_bound, HeisenbergKind};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

type Bracket = (usize, usize, Vec<(usize, i64)>);

/// Abelian superalgebra of dimension `(m|n)`.
pub fn abelian<T: Scalar>(m: usize, n: usize) -> SuperAlgebra<T> {
    SuperAlgebra::abelian(labels("x", m), labels("y", n))
}

/// The Heisenberg Lie algebra `H(m)` of dimension `2m+1`:
/// `[x_i, x_(m+i)] = z`.
pub fn heisenberg_lie<T: Scalar>(m: usize) -> Result<SuperAlgebra<T>> {
    if m == 0 {
        return Err(Error::OutOfFamily("H(m) needs m >= 1".into()));
    }
    heisenberg_even(m, 0)
}

/// Heisenberg superalgebra with even center, dimension `(2m+1|n)`:
/// `[x_i, x_(m+i)] = z = [y_j, y_j]`.
pub fn heisenberg_even<T: Scalar>(m: usize, n: usize) -> Result<SuperAlgebra<T>> {
    if m + n == 0 {
        return Err(Error::OutOfFamily("even-center Heisenberg needs m + n >= 1".into()));
    }
    let mut even = labels("x", 2 * m);
    even.push("z".into());
    let z = 2 * m;
    let mut brackets: Vec<Bracket> = (0..m).map(|i| (i, m + i, vec![(z, 1)])).collect();
    brackets.extend((0..n).map(|j| (2 * m + 1 + j, 2 * m + 1 + j, vec![(z, 1)])));
    build(even, labels("y", n), &brackets)
}

/// Heisenberg superalgebra with odd center, dimension `(n|n+1)`:
/// `[x_i, y_i] = z`.
pub fn heisenberg_odd<T: Scalar>(n: usize) -> Result<SuperAlgebra<T>> {
    if n == 0 {
        return Err(Error::OutOfFamily("odd-center Heisenberg needs n >= 1".into()));
    }
    let mut odd = labels("y", n);
    odd.push("z".into());
    let z = 2 * n;
    let brackets: Vec<Bracket> = (0..n).map(|i| (i, n + i, vec![(z, 1)])).collect();
    build(labels("x", n), odd, &brackets)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NonAbelian11 {
    /// `[x, y] = y`
    Solvable,
    /// `[y, y] = x`
    Heisenberg,
}

/// The two non-abelian superalgebras of dimension `(1|1)`, basis `x | y`.
pub fn nonabelian_11<T: Scalar>(kind: NonAbelian11) -> SuperAlgebra<T> {
    let brackets: &[Bracket] = match kind {
        NonAbelian11::Solvable => &[(0, 1, vec![(1, 1)])],
        NonAbelian11::Heisenberg => &[(1, 1, vec![(0, 1)])],
    };
    build(vec!["x".into()], vec!["y".into()], brackets).expect("fixed table is consistent")
}

fn build<T: Scalar>(even: Vec<String>, odd: Vec<String>, brackets: &[Bracket]) -> Result<SuperAlgebra<T>> {
    let refs: Vec<IntBracket<'_>> = brackets.iter().map(|(i, j, v)| (*i, *j, v.as_slice())).collect();
    SuperAlgebra::from_int_brackets(even, odd, &refs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Abelian,
    HeisenbergLie,
    HeisenbergEven,
    HeisenbergOdd,
    Solvable11,
    Heisenberg11,
    DirectSum,
}

/// A multiplier dimension known in closed form, with where it comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expected {
    pub dim_m: usize,
    pub source: &'static str,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry<T: Scalar> {
    pub id: String,
    pub family: Family,
    pub params: Vec<usize>,
    pub algebra: SuperAlgebra<T>,
    pub expected: Option<Expected>,
}

impl<T: Scalar> CatalogEntry<T> {
    fn new(
        id: String,
        family: Family,
        params: Vec<usize>,
        algebra: SuperAlgebra<T>,
        expected: Option<Expected>,
    ) -> Self {
        CatalogEntry { id, family, params, algebra, expected }
    }
}

/// Every family instance of total dimension `1..=max_dim`, followed by
/// direct sums of two such instances (at least one non-abelian) within the
/// same budget. The order is deterministic.
pub fn enumerate_catalog<T: Scalar>(max_dim: usize) -> Vec<CatalogEntry<T>> {
    let mut base: Vec<CatalogEntry<T>> = Vec::new();
    for total in 1..=max_dim {
        for m in (0..=total).rev() {
            let n = total - m;
            base.push(CatalogEntry::new(
                format!("abelian({m}|{n})"),
                Family::Abelian,
                vec![m, n],
                abelian(m, n),
                Some(Expected { dim_m: nayak_bound(m, n), source: "super exterior square (abelian)" }),
            ));
        }
    }
    for m in (1..).take_while(|m| 2 * m < max_dim) {
        base.push(CatalogEntry::new(
            format!("H({m})"),
            Family::HeisenbergLie,
            vec![m],
            heisenberg_lie(m).expect("m >= 1"),
            Some(Expected {
                dim_m: heisenberg_multiplier_formula(HeisenbergKind::Even, m, 0).expect("in family"),
                source: "even-center Heisenberg formula",
            }),
        ));
    }
    for m in 0.. {
        if 2 * m + 2 > max_dim {
            break;
        }
        for n in 1..=(max_dim - 2 * m - 1) {
            if (m, n) == (0, 1) {
                // listed below as the (1|1) Heisenberg superalgebra
                continue;
            }
            base.push(CatalogEntry::new(
                format!("Heven({m},{n})"),
                Family::HeisenbergEven,
                vec![m, n],
                heisenberg_even(m, n).expect("m + n >= 1"),
                Some(Expected {
                    dim_m: heisenberg_multiplier_formula(HeisenbergKind::Even, m, n).expect("in family"),
                    source: "even-center Heisenberg formula",
                }),
            ));
        }
    }
    for n in (1..).take_while(|n| 2 * n < max_dim) {
        base.push(CatalogEntry::new(
            format!("Hodd({n})"),
            Family::HeisenbergOdd,
            vec![n],
            heisenberg_odd(n).expect("n >= 1"),
            Some(Expected {
                dim_m: heisenberg_multiplier_formula(HeisenbergKind::Odd, 0, n).expect("in family"),
                source: "odd-center Heisenberg formula",
            }),
        ));
    }
    if max_dim >= 2 {
        base.push(CatalogEntry::new(
            "heisenberg(1|1)".into(),
            Family::Heisenberg11,
            vec![1, 1],
            nonabelian_11(NonAbelian11::Heisenberg),
            Some(Expected { dim_m: 0, source: "even-center Heisenberg formula at (0,1)" }),
        ));
        base.push(CatalogEntry::new(
            "solvable(1|1)".into(),
            Family::Solvable11,
            vec![1, 1],
            nonabelian_11(NonAbelian11::Solvable),
            None,
        ));
    }

    let mut sums = Vec::new();
    for (i, a) in base.iter().enumerate() {
        for b in &base[i..] {
            if a.family == Family::Abelian && b.family == Family::Abelian {
                continue;
            }
            if a.algebra.dim() + b.algebra.dim() > max_dim {
                continue;
            }
            sums.push(CatalogEntry::new(
                format!("{} + {}", a.id, b.id),
                Family::DirectSum,
                Vec::new(),
                a.algebra.direct_sum(&b.algebra),
                None,
            ));
        }
    }
    base.extend(sums);
    base
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::multiplier_dim;
    use crate::Rational;

    type A = SuperAlgebra<Rational>;

    #[test]
    fn family_shapes() {
        assert_eq!(abelian::<Rational>(0, 0).dim(), 0);
        assert_eq!(heisenberg_lie::<Rational>(2).unwrap().dims(), (5, 0));
        assert_eq!(heisenberg_even::<Rational>(1, 2).unwrap().dims(), (3, 2));
        assert_eq!(heisenberg_odd::<Rational>(2).unwrap().dims(), (2, 3));
        assert!(heisenberg_lie::<Rational>(0).is_err());
        assert!(heisenberg_even::<Rational>(0, 0).is_err());
        assert!(heisenberg_odd::<Rational>(0).is_err());
    }

    #[test]
    fn lie_heisenberg_is_even_family_with_no_odd_part() {
        for m in 1..4 {
            assert_eq!(heisenberg_lie::<Rational>(m).unwrap(), heisenberg_even(m, 0).unwrap());
        }
    }

    #[test]
    fn family_multipliers() {
        assert_eq!(multiplier_dim(&abelian::<Rational>(2, 0)), 1);
        assert_eq!(multiplier_dim(&abelian::<Rational>(1, 1)), 2);
        assert_eq!(multiplier_dim(&heisenberg_lie::<Rational>(1).unwrap()), 2);
        assert_eq!(multiplier_dim(&heisenberg_lie::<Rational>(2).unwrap()), 5);
        assert_eq!(multiplier_dim(&heisenberg_even::<Rational>(0, 1).unwrap()), 0);
        assert_eq!(multiplier_dim(&heisenberg_even::<Rational>(1, 1).unwrap()), 3);
        assert_eq!(multiplier_dim(&heisenberg_even::<Rational>(0, 2).unwrap()), 2);
        assert_eq!(multiplier_dim(&heisenberg_odd::<Rational>(1).unwrap()), 2);
        assert_eq!(multiplier_dim(&heisenberg_odd::<Rational>(2).unwrap()), 7);
    }

    #[test]
    fn nonabelian_11_kinds() {
        let s: A = nonabelian_11(NonAbelian11::Solvable);
        assert!(!s.is_nilpotent());
        let h: A = nonabelian_11(NonAbelian11::Heisenberg);
        assert_eq!(multiplier_dim(&h), 0);
        assert_eq!(h.derived(), h.center());
        assert_eq!(h.center(), h.span_of_labels(&["x"]).unwrap());
        assert_eq!(h.center().dims(), (1, 0));
    }

    #[test]
    fn heisenberg_entries_have_one_dimensional_central_derived_algebra() {
        for e in enumerate_catalog::<Rational>(6) {
            if matches!(
                e.family,
                Family::HeisenbergLie | Family::HeisenbergEven | Family::HeisenbergOdd | Family::Heisenberg11
            ) {
                assert_eq!(e.algebra.derived(), e.algebra.center(), "{}", e.id);
                assert_eq!(e.algebra.derived().dim(), 1, "{}", e.id);
            }
        }
    }

    #[test]
    fn small_catalogs() {
        let ids = |d| enumerate_catalog::<Rational>(d).into_iter().map(|e| e.id).collect::<Vec<_>>();
        let two = ids(2);
        for id in ["abelian(2|0)", "abelian(1|1)", "abelian(0|2)", "heisenberg(1|1)", "solvable(1|1)"] {
            assert!(two.contains(&id.to_string()), "{id}");
        }
        let three = ids(3);
        for id in ["H(1)", "Hodd(1)", "Heven(0,2)", "abelian(1|0) + heisenberg(1|1)", "abelian(0|1) + solvable(1|1)"] {
            assert!(three.contains(&id.to_string()), "{id}");
        }
        assert!(!three.iter().any(|id| id.starts_with("H(2)")));
        assert_eq!(ids(4), ids(4));
    }

    #[test]
    fn catalog_is_valid_and_matches_expected() {
        for e in enumerate_catalog::<Rational>(6) {
            assert!(e.algebra.validate().is_valid(), "{}", e.id);
            if let Some(exp) = &e.expected {
                assert_eq!(multiplier_dim(&e.algebra), exp.dim_m, "{} ({})", e.id, exp.source);
            }
        }
    }
}

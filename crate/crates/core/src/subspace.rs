//! Graded subspaces and the subspace-level constructions on an algebra:
//! commutators, centers, centralizers, the lower central series, ideal tests,
//! quotients and subalgebras.

use std::fmt;

use num_traits::Zero;

use crate::algebra::SuperAlgebra;
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::scalar::{Parity, Scalar};

/// A sub-superspace `U = U_0 + U_1` of an `(m|n)`-dimensional superspace.
///
/// Each parity block is kept in reduced row echelon form (full-length
/// coordinate vectors, zero outside the block), so equal subspaces compare
/// equal structurally.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GradedSubspace<T> {
    shape: (usize, usize),
    even: Vec<Vec<T>>,
    odd: Vec<Vec<T>>,
}

fn first_nonzero<T: Scalar>(v: &[T]) -> Option<usize> {
    v.iter().position(|c| !c.is_zero())
}

impl<T: Scalar> GradedSubspace<T> {
    pub fn zero(shape: (usize, usize)) -> Self {
        GradedSubspace { shape, even: Vec::new(), odd: Vec::new() }
    }

    pub fn full(shape: (usize, usize)) -> Self {
        let d = shape.0 + shape.1;
        Self::from_indices(shape, &(0..d).collect::<Vec<_>>()).expect("indices in range")
    }

    /// Span of the given basis coordinates.
    pub fn from_indices(shape: (usize, usize), indices: &[usize]) -> Result<Self> {
        let d = shape.0 + shape.1;
        let mut vectors = Vec::with_capacity(indices.len());
        for &i in indices {
            if i >= d {
                return Err(Error::IndexOutOfRange(i));
            }
            let mut v = vec![T::zero(); d];
            v[i] = T::one();
            vectors.push(v);
        }
        Ok(Self::span(shape, vectors))
    }

    /// The smallest graded subspace containing the vectors: each vector
    /// contributes its even and odd components separately.
    pub fn span<I: IntoIterator<Item = Vec<T>>>(shape: (usize, usize), vectors: I) -> Self {
        let (m, n) = shape;
        let mut even = Vec::new();
        let mut odd = Vec::new();
        for v in vectors {
            assert_eq!(v.len(), m + n, "vector length must match the superspace");
            if v[..m].iter().any(|c| !c.is_zero()) {
                even.push(v[..m].to_vec());
            }
            if v[m..].iter().any(|c| !c.is_zero()) {
                odd.push(v[m..].to_vec());
            }
        }
        GradedSubspace {
            shape,
            even: canonical_block(m, even).into_iter().map(|r| pad(r, 0, n)).collect(),
            odd: canonical_block(n, odd).into_iter().map(|r| pad(r, m, 0)).collect(),
        }
    }

    /// Span of homogeneous vectors; rejects vectors with mixed support.
    pub fn from_homogeneous(shape: (usize, usize), vectors: Vec<Vec<T>>) -> Result<Self> {
        let (m, n) = shape;
        for v in &vectors {
            if v.len() != m + n {
                return Err(Error::DimensionMismatch { expected: m + n, found: v.len() });
            }
            if v[..m].iter().any(|c| !c.is_zero()) && v[m..].iter().any(|c| !c.is_zero()) {
                return Err(Error::NonHomogeneous);
            }
        }
        Ok(Self::span(shape, vectors))
    }

    pub fn shape(&self) -> (usize, usize) {
        self.shape
    }

    /// `(dim U_0, dim U_1)`.
    pub fn dims(&self) -> (usize, usize) {
        (self.even.len(), self.odd.len())
    }

    pub fn dim(&self) -> usize {
        self.even.len() + self.odd.len()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dims() == self.shape
    }

    pub fn even_basis(&self) -> &[Vec<T>] {
        &self.even
    }

    pub fn odd_basis(&self) -> &[Vec<T>] {
        &self.odd
    }

    /// Homogeneous basis, even vectors first.
    pub fn basis(&self) -> impl Iterator<Item = (Parity, &Vec<T>)> {
        self.even.iter().map(|v| (Parity::Even, v)).chain(self.odd.iter().map(|v| (Parity::Odd, v)))
    }

    pub fn basis_vectors(&self) -> Vec<Vec<T>> {
        self.basis().map(|(_, v)| v.clone()).collect()
    }

    /// Pivot coordinates of the echelon basis, in basis order.
    pub fn pivots(&self) -> Vec<usize> {
        self.basis().map(|(_, v)| first_nonzero(v).expect("basis vectors are nonzero")).collect()
    }

    /// Coefficients of `v` in [`Self::basis`], or `None` if `v` is not in `U`.
    pub fn coordinates_of(&self, v: &[T]) -> Option<Vec<T>> {
        if v.len() != self.shape.0 + self.shape.1 {
            return None;
        }
        let mut rest = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.dim());
        for (_, b) in self.basis() {
            let p = first_nonzero(b).expect("basis vectors are nonzero");
            let c = rest[p].clone();
            if !c.is_zero() {
                for (r, bv) in rest.iter_mut().zip(b) {
                    if !bv.is_zero() {
                        *r = r.clone() - c.clone() * bv.clone();
                    }
                }
            }
            coeffs.push(c);
        }
        rest.iter().all(Zero::is_zero).then_some(coeffs)
    }

    pub fn contains_vector(&self, v: &[T]) -> bool {
        self.coordinates_of(v).is_some()
    }

    pub fn contains(&self, other: &GradedSubspace<T>) -> bool {
        self.shape == other.shape && other.basis().all(|(_, v)| self.contains_vector(v))
    }

    pub fn sum(&self, other: &GradedSubspace<T>) -> Result<GradedSubspace<T>> {
        if self.shape != other.shape {
            return Err(Error::MixedAlgebra);
        }
        Ok(Self::span(self.shape, self.basis_vectors().into_iter().chain(other.basis_vectors())))
    }

    pub fn intersect(&self, other: &GradedSubspace<T>) -> Result<GradedSubspace<T>> {
        if self.shape != other.shape {
            return Err(Error::MixedAlgebra);
        }
        let d = self.shape.0 + self.shape.1;
        let mut out = Vec::new();
        for (a, b) in [(&self.even, &other.even), (&self.odd, &other.odd)] {
            if a.is_empty() || b.is_empty() {
                continue;
            }
            let columns: Vec<Vec<T>> =
                a.iter().cloned().chain(b.iter().map(|v| v.iter().map(|c| -c.clone()).collect())).collect();
            let system = Matrix::from_columns(d, &columns)?;
            for coeffs in system.nullspace() {
                let mut v = vec![T::zero(); d];
                for (c, basis) in coeffs.iter().take(a.len()).zip(a) {
                    if c.is_zero() {
                        continue;
                    }
                    for (o, bv) in v.iter_mut().zip(basis) {
                        *o = o.clone() + c.clone() * bv.clone();
                    }
                }
                out.push(v);
            }
        }
        Ok(Self::span(self.shape, out))
    }
}

fn canonical_block<T: Scalar>(width: usize, rows: Vec<Vec<T>>) -> Vec<Vec<T>> {
    if rows.is_empty() || width == 0 {
        return Vec::new();
    }
    let m = Matrix::from_rows(width, rows).expect("rows have block width");
    let (r, pivots) = m.rref();
    (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
}

fn pad<T: Scalar>(block: Vec<T>, before: usize, after: usize) -> Vec<T> {
    let mut v = vec![T::zero(); before];
    v.extend(block);
    v.extend(std::iter::repeat_with(T::zero).take(after));
    v
}

impl<T: Scalar> fmt::Debug for GradedSubspace<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.dims();
        write!(f, "GradedSubspace ({a}|{b}) [")?;
        for (p, v) in self.basis() {
            let cells: Vec<String> = v.iter().map(|c| c.to_string()).collect();
            write!(f, " {p}:({})", cells.join(","))?;
        }
        write!(f, " ]")
    }
}

/// Result of [`SuperAlgebra::nilpotency_class`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Nilpotency {
    /// Least `c` with `L^(c+1) = 0`.
    Class(usize),
    NotNilpotent,
}

impl Nilpotency {
    pub fn is_nilpotent(self) -> bool {
        matches!(self, Nilpotency::Class(_))
    }
}

impl fmt::Display for Nilpotency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Nilpotency::Class(c) => write!(f, "class {c}"),
            Nilpotency::NotNilpotent => f.write_str("not nilpotent"),
        }
    }
}

/// `A / I` realised on the non-pivot coordinates of `I`.
#[derive(Debug, Clone)]
pub struct Quotient<T: Scalar> {
    pub algebra: SuperAlgebra<T>,
    /// `dim(A/I) x dim A` matrix of the canonical projection.
    pub projection: Matrix<T>,
    /// Coordinates of `A` kept as the quotient basis, in order.
    pub kept: Vec<usize>,
}

impl<T: Scalar> SuperAlgebra<T> {
    fn check_shape(&self, u: &GradedSubspace<T>) -> Result<()> {
        if u.shape() != self.dims() {
            return Err(Error::MixedAlgebra);
        }
        Ok(())
    }

    pub fn whole(&self) -> GradedSubspace<T> {
        GradedSubspace::full(self.dims())
    }

    pub fn zero_subspace(&self) -> GradedSubspace<T> {
        GradedSubspace::zero(self.dims())
    }

    pub fn span_of_labels(&self, labels: &[&str]) -> Option<GradedSubspace<T>> {
        let idx: Option<Vec<usize>> = labels.iter().map(|l| self.index_of(l)).collect();
        GradedSubspace::from_indices(self.dims(), &idx?).ok()
    }

    /// `[U, V]`, the span of all brackets of elements of `U` and `V`.
    pub fn commutator_subspace(&self, u: &GradedSubspace<T>, v: &GradedSubspace<T>) -> Result<GradedSubspace<T>> {
        self.check_shape(u)?;
        self.check_shape(v)?;
        let mut out = Vec::new();
        for (_, a) in u.basis() {
            for (_, b) in v.basis() {
                let c = self.bracket(a, b)?;
                if c.iter().any(|x| !x.is_zero()) {
                    out.push(c);
                }
            }
        }
        Ok(GradedSubspace::span(self.dims(), out))
    }

    /// `L^2 = [L, L]`.
    pub fn derived(&self) -> GradedSubspace<T> {
        let w = self.whole();
        self.commutator_subspace(&w, &w).expect("same algebra")
    }

    /// Homogeneous elements of the given parity that bracket to zero with
    /// every vector in `targets`.
    fn annihilator(&self, parity: Parity, targets: &[Vec<T>]) -> Vec<Vec<T>> {
        let (m, _) = self.dims();
        let d = self.dim();
        let block: Vec<usize> = match parity {
            Parity::Even => (0..m).collect(),
            Parity::Odd => (m..d).collect(),
        };
        if block.is_empty() {
            return Vec::new();
        }
        let mut rows: Vec<Vec<T>> = Vec::new();
        for w in targets {
            let images: Vec<Vec<T>> = block.iter().map(|&i| self.bracket_basis_vec(i, w)).collect();
            for k in 0..d {
                let row: Vec<T> = images.iter().map(|img| img[k].clone()).collect();
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
        let system = Matrix::from_rows(block.len(), rows).expect("rows have block width");
        system
            .nullspace()
            .into_iter()
            .map(|coeffs| {
                let mut v = vec![T::zero(); d];
                for (c, &i) in coeffs.into_iter().zip(&block) {
                    v[i] = c;
                }
                v
            })
            .collect()
    }

    /// `Z(L)`.
    pub fn center(&self) -> GradedSubspace<T> {
        let basis: Vec<Vec<T>> = (0..self.dim()).map(|i| self.basis_vector(i)).collect();
        let mut vectors = self.annihilator(Parity::Even, &basis);
        vectors.extend(self.annihilator(Parity::Odd, &basis));
        GradedSubspace::span(self.dims(), vectors)
    }

    /// `Z(N, L) = { n in N : [n, L] = 0 }` for a graded ideal `N`.
    pub fn pair_center(&self, n: &GradedSubspace<T>) -> Result<GradedSubspace<T>> {
        self.check_shape(n)?;
        if !self.is_graded_ideal(n) {
            return Err(Error::NotAnIdeal);
        }
        self.center().intersect(n)
    }

    /// The graded centralizer `{ v : [x, v] = 0 }`, i.e. its homogeneous
    /// components. For homogeneous `x` this is the full centralizer.
    pub fn centralizer(&self, x: &[T]) -> Result<GradedSubspace<T>> {
        if x.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: x.len() });
        }
        let targets = [x.to_vec()];
        let mut vectors = self.annihilator(Parity::Even, &targets);
        vectors.extend(self.annihilator(Parity::Odd, &targets));
        Ok(GradedSubspace::span(self.dims(), vectors))
    }

    /// `L^1 = L, L^(i+1) = [L^i, L]`, up to and including the first term that
    /// is zero or equal to its predecessor (the repeated term is not listed).
    pub fn lower_central_series(&self) -> Vec<GradedSubspace<T>> {
        let whole = self.whole();
        let mut series = vec![whole.clone()];
        loop {
            let last = series.last().expect("nonempty");
            if last.is_zero() {
                break;
            }
            let next = self.commutator_subspace(last, &whole).expect("same algebra");
            if &next == last {
                break;
            }
            series.push(next);
        }
        series
    }

    pub fn nilpotency_class(&self) -> Nilpotency {
        let series = self.lower_central_series();
        if series.last().is_some_and(GradedSubspace::is_zero) {
            Nilpotency::Class(series.len() - 1)
        } else {
            Nilpotency::NotNilpotent
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_class().is_nilpotent()
    }

    /// `[U, U] ⊆ U`.
    pub fn is_subalgebra(&self, u: &GradedSubspace<T>) -> bool {
        self.commutator_subspace(u, u).is_ok_and(|c| u.contains(&c))
    }

    /// `[U, L] ⊆ U`.
    pub fn is_graded_ideal(&self, u: &GradedSubspace<T>) -> bool {
        self.commutator_subspace(u, &self.whole()).is_ok_and(|c| u.contains(&c))
    }

    /// Quotient by a graded ideal. The quotient basis is the set of
    /// non-pivot coordinates of the ideal's echelon form, in input order.
    pub fn quotient(&self, ideal: &GradedSubspace<T>) -> Result<Quotient<T>> {
        self.check_shape(ideal)?;
        if !self.is_graded_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let d = self.dim();
        let (m, _) = self.dims();
        let pivots = ideal.pivots();
        let kept: Vec<usize> = (0..d).filter(|i| !pivots.contains(i)).collect();
        let reduce = |v: &[T]| -> Vec<T> {
            let mut rest = v.to_vec();
            for (_, b) in ideal.basis() {
                let p = first_nonzero(b).expect("nonzero");
                let c = rest[p].clone();
                if !c.is_zero() {
                    for (r, bv) in rest.iter_mut().zip(b) {
                        if !bv.is_zero() {
                            *r = r.clone() - c.clone() * bv.clone();
                        }
                    }
                }
            }
            kept.iter().map(|&k| rest[k].clone()).collect()
        };
        let mut projection = Matrix::zeros(kept.len(), d);
        for j in 0..d {
            for (i, v) in reduce(&self.basis_vector(j)).into_iter().enumerate() {
                projection.set(i, j, v);
            }
        }
        let even: Vec<String> = kept.iter().filter(|&&k| k < m).map(|&k| self.name(k).to_string()).collect();
        let odd: Vec<String> = kept.iter().filter(|&&k| k >= m).map(|&k| self.name(k).to_string()).collect();
        let mut entries = Vec::new();
        for (a, &i) in kept.iter().enumerate() {
            for (b, &j) in kept.iter().enumerate() {
                entries.push((a, b, reduce(self.bracket_basis(i, j))));
            }
        }
        let algebra = SuperAlgebra::from_brackets(even, odd, entries)?;
        Ok(Quotient { algebra, projection, kept })
    }

    /// A subalgebra as an algebra in its own right, in the echelon basis of
    /// `u`, together with the `dim A x dim U` inclusion matrix. Basis labels
    /// are the labels of the pivot coordinates.
    pub fn subalgebra(&self, u: &GradedSubspace<T>) -> Result<(SuperAlgebra<T>, Matrix<T>)> {
        self.check_shape(u)?;
        if !self.is_subalgebra(u) {
            return Err(Error::NotASubalgebra);
        }
        let pivots = u.pivots();
        let (a, _) = u.dims();
        let even: Vec<String> = pivots[..a].iter().map(|&p| self.name(p).to_string()).collect();
        let odd: Vec<String> = pivots[a..].iter().map(|&p| self.name(p).to_string()).collect();
        let basis = u.basis_vectors();
        let mut entries = Vec::new();
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                let c = self.bracket(x, y)?;
                let coords = u.coordinates_of(&c).ok_or_else(|| Error::Internal("subalgebra not closed".into()))?;
                entries.push((i, j, coords));
            }
        }
        let sub = SuperAlgebra::from_brackets(even, odd, entries)?;
        let inclusion = Matrix::from_columns(self.dim(), &basis)?;
        Ok((sub, inclusion))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::Rational;

    type A = SuperAlgebra<Rational>;
    type S = GradedSubspace<Rational>;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn h1() -> A {
        catalog::heisenberg_lie(1).unwrap()
    }

    #[test]
    fn commutator_examples() {
        let h = h1();
        let w = h.whole();
        let c = h.commutator_subspace(&w, &w).unwrap();
        assert_eq!(c, S::from_indices((3, 0), &[2]).unwrap());
        assert_eq!(c.dims(), (1, 0));

        let a: A = catalog::abelian(2, 3);
        assert!(a.commutator_subspace(&a.whole(), &a.whole()).unwrap().is_zero());

        let ho: A = catalog::heisenberg_odd(1).unwrap();
        assert_eq!(ho.derived().dims(), (0, 1));
        assert_eq!(ho.derived(), ho.span_of_labels(&["z"]).unwrap());
    }

    #[test]
    fn commutator_rejects_mixed_shapes() {
        let h = h1();
        let other = S::full((2, 1));
        assert_eq!(h.commutator_subspace(&other, &h.whole()), Err(Error::MixedAlgebra));
    }

    #[test]
    fn centers() {
        for (m, n) in [(1, 0), (0, 2), (1, 1), (2, 1)] {
            let h: A = catalog::heisenberg_even(m, n).unwrap();
            assert_eq!(h.center(), h.span_of_labels(&["z"]).unwrap(), "H({m},{n})");
        }
        let a: A = catalog::abelian(1, 2);
        let n = S::from_indices((1, 2), &[0, 2]).unwrap();
        assert_eq!(a.pair_center(&n).unwrap(), n);

        let h = h1();
        let z = h.span_of_labels(&["z"]).unwrap();
        assert_eq!(h.pair_center(&z).unwrap(), z);
        assert_eq!(h.pair_center(&h.whole()).unwrap(), h.center());

        let x1 = h.span_of_labels(&["x1"]).unwrap();
        assert_eq!(h.pair_center(&x1), Err(Error::NotAnIdeal));
    }

    #[test]
    fn centralizers() {
        let h = h1();
        assert_eq!(h.centralizer(&h.basis_vector(2)).unwrap(), h.whole());
        assert_eq!(h.centralizer(&h.basis_vector(0)).unwrap(), h.span_of_labels(&["x1", "z"]).unwrap());
        let a: A = catalog::abelian(1, 1);
        assert_eq!(a.centralizer(&[q(1), q(1)]).unwrap(), a.whole());
    }

    #[test]
    fn lower_central_series_examples() {
        let h = h1();
        let s = h.lower_central_series();
        assert_eq!(s.len(), 3);
        assert_eq!(s[1], h.span_of_labels(&["z"]).unwrap());
        assert!(s[2].is_zero());
        assert_eq!(h.nilpotency_class(), Nilpotency::Class(2));

        assert_eq!(catalog::abelian::<Rational>(2, 2).nilpotency_class(), Nilpotency::Class(1));
        assert_eq!(catalog::abelian::<Rational>(0, 0).nilpotency_class(), Nilpotency::Class(0));

        let solvable: A = catalog::nonabelian_11(catalog::NonAbelian11::Solvable);
        let s = solvable.lower_central_series();
        assert_eq!(s.last().unwrap(), &solvable.span_of_labels(&["y"]).unwrap());
        assert_eq!(solvable.nilpotency_class(), Nilpotency::NotNilpotent);

        assert_eq!(catalog::heisenberg_odd::<Rational>(2).unwrap().nilpotency_class(), Nilpotency::Class(2));
    }

    #[test]
    fn subalgebra_and_ideal_tests() {
        let h = h1();
        let z = h.span_of_labels(&["z"]).unwrap();
        assert!(h.is_graded_ideal(&z));
        let x1 = h.span_of_labels(&["x1"]).unwrap();
        assert!(h.is_subalgebra(&x1));
        assert!(!h.is_graded_ideal(&x1));
        let x12 = h.span_of_labels(&["x1", "x2"]).unwrap();
        assert!(!h.is_subalgebra(&x12));
    }

    #[test]
    fn quotients() {
        let h = h1();
        let quo = h.quotient(&h.span_of_labels(&["z"]).unwrap()).unwrap();
        assert_eq!(quo.algebra.dims(), (2, 0));
        assert!(quo.algebra.is_abelian());
        assert_eq!(quo.kept, vec![0, 1]);

        let ho: A = catalog::heisenberg_odd(1).unwrap();
        let quo = ho.quotient(&ho.center()).unwrap();
        assert_eq!(quo.algebra.dims(), (1, 1));
        assert!(quo.algebra.is_abelian());

        let all = h.quotient(&h.whole()).unwrap();
        assert_eq!(all.algebra.dims(), (0, 0));

        assert!(matches!(h.quotient(&h.span_of_labels(&["x1"]).unwrap()), Err(Error::NotAnIdeal)));
    }

    #[test]
    fn quotient_by_non_basis_ideal() {
        // ideal spanned by z in a rotated basis: kept coordinates follow the echelon pivots
        let h: A = catalog::heisenberg_lie(1).unwrap();
        let d = h.direct_sum(&catalog::abelian(1, 0));
        let ideal = S::span((4, 0), vec![vec![q(0), q(0), q(1), q(1)]]);
        assert!(d.is_graded_ideal(&ideal));
        let quo = d.quotient(&ideal).unwrap();
        assert_eq!(quo.kept, vec![0, 1, 3]);
        // [x1, x2] = z = -x1_2 modulo the ideal
        assert_eq!(quo.algebra.bracket_basis(0, 1), &[q(0), q(0), q(-1)]);
        assert!(quo.algebra.validate().is_valid());
        // projection is a homomorphism
        let px = quo.projection.mul_vec(&d.bracket(&d.basis_vector(0), &d.basis_vector(1)).unwrap()).unwrap();
        assert_eq!(px, quo.algebra.bracket_basis(0, 1));
    }

    #[test]
    fn subspace_algebra() {
        let u = S::span((2, 1), vec![vec![q(1), q(1), q(0)], vec![q(2), q(0), q(0)], vec![q(0), q(0), q(3)]]);
        assert!(u.is_full());
        let v = S::span((2, 1), vec![vec![q(1), q(1), q(2)]]);
        assert_eq!(v.dims(), (1, 1));
        assert!(S::from_homogeneous((2, 1), vec![vec![q(1), q(1), q(2)]]).is_err());
        let w = S::from_indices((2, 1), &[0]).unwrap();
        let i = v.intersect(&w).unwrap();
        assert!(i.is_zero());
        let s = v.sum(&w).unwrap();
        assert_eq!(s, u);
        assert_eq!(u.intersect(&v).unwrap(), v);
    }

    #[test]
    fn subalgebra_extraction() {
        let h: A = catalog::heisenberg_even(1, 1).unwrap();
        let u = h.span_of_labels(&["x1", "z", "y1"]).unwrap();
        let (sub, incl) = h.subalgebra(&u).unwrap();
        assert_eq!(sub.dims(), (2, 1));
        assert!(sub.validate().is_valid());
        assert_eq!(sub.bracket_basis(2, 2), &[q(0), q(1), q(0)]);
        assert_eq!(incl.cols(), 3);
    }
}

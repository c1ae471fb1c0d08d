//! Lie superalgebras given by structure constants.
//!
//! The basis is ordered with all even elements first, then all odd ones.
//! Structure constants are stored densely: `[e_i, e_j] = sum_k c(i,j,k) e_k`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::scalar::{koszul_sign, Parity, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SuperAlgebra<T> {
    even_names: Vec<String>,
    odd_names: Vec<String>,
    sc: Vec<T>,
}

/// `(i, j, &[(k, c)])`: `[e_i, e_j] = sum c e_k` with integer `c`.
pub type IntBracket<'a> = (usize, usize, &'a [(usize, i64)]);

/// One axiom failure, located by basis indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `c(i,j,k) != 0` although `|k| != |i| + |j|`.
    Grading { i: usize, j: usize, k: usize },
    /// `c(j,i,k) != -(-1)^(|i||j|) c(i,j,k)`.
    Antisymmetry { i: usize, j: usize, k: usize },
    /// The graded Jacobi sum for `(i,j,k)` has a nonzero `coordinate`.
    Jacobi { i: usize, j: usize, k: usize, coordinate: usize },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    /// Human-readable lines using the algebra's basis labels.
    pub fn describe<T: Scalar>(&self, alg: &SuperAlgebra<T>) -> Vec<String> {
        self.violations
            .iter()
            .map(|v| match *v {
                Violation::Grading { i, j, k } => format!(
                    "grading: [{}, {}] has a {} component along {}",
                    alg.name(i),
                    alg.name(j),
                    alg.parity(k),
                    alg.name(k)
                ),
                Violation::Antisymmetry { i, j, k } => format!(
                    "antisymmetry: [{}, {}] and [{}, {}] disagree along {}",
                    alg.name(i),
                    alg.name(j),
                    alg.name(j),
                    alg.name(i),
                    alg.name(k)
                ),
                Violation::Jacobi { i, j, k, coordinate } => format!(
                    "jacobi: cyclic sum for ({}, {}, {}) is nonzero along {}",
                    alg.name(i),
                    alg.name(j),
                    alg.name(k),
                    alg.name(coordinate)
                ),
            })
            .collect()
    }
}

impl<T: Scalar> SuperAlgebra<T> {
    pub fn abelian(even_names: Vec<String>, odd_names: Vec<String>) -> Self {
        let d = even_names.len() + odd_names.len();
        SuperAlgebra { even_names, odd_names, sc: vec![T::zero(); d * d * d] }
    }

    /// Takes a full `d^3` table as is, without completion or checks.
    pub fn from_table(even_names: Vec<String>, odd_names: Vec<String>, table: Vec<T>) -> Result<Self> {
        let d = even_names.len() + odd_names.len();
        if table.len() != d * d * d {
            return Err(Error::DimensionMismatch { expected: d * d * d, found: table.len() });
        }
        Ok(SuperAlgebra { even_names, odd_names, sc: table })
    }

    /// Builds an algebra from brackets `(i, j, [e_i, e_j])`, completing the
    /// table by super antisymmetry. Either orientation of a pair may be
    /// given; giving both is allowed only when they agree. A nonzero
    /// `[e, e]` for even `e` is a conflict.
    pub fn from_brackets<I>(even_names: Vec<String>, odd_names: Vec<String>, brackets: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vec<T>)>,
    {
        let mut alg = Self::abelian(even_names, odd_names);
        let d = alg.dim();
        let mut seen: HashSet<(usize, usize)> = HashSet::new();
        for (i, j, value) in brackets {
            if i >= d {
                return Err(Error::IndexOutOfRange(i));
            }
            if j >= d {
                return Err(Error::IndexOutOfRange(j));
            }
            if value.len() != d {
                return Err(Error::DimensionMismatch { expected: d, found: value.len() });
            }
            let conflict = || Error::BracketConflict { left: alg.name(i).to_string(), right: alg.name(j).to_string() };
            let sign_flip = !alg.parity(i).koszul(alg.parity(j));
            let swapped: Vec<T> = value.iter().map(|v| if sign_flip { -v.clone() } else { v.clone() }).collect();
            if i == j && swapped != value {
                return Err(conflict());
            }
            let key = (i.min(j), i.max(j));
            if !seen.insert(key) {
                let existing = alg.bracket_basis(i, j);
                if existing != value.as_slice() {
                    return Err(conflict());
                }
                continue;
            }
            alg.set_bracket(i, j, &value);
            alg.set_bracket(j, i, &swapped);
        }
        Ok(alg)
    }

    /// Convenience constructor with small integer coefficients:
    /// `(i, j, &[(k, c)])` means `[e_i, e_j] = sum c e_k`.
    pub fn from_int_brackets(
        even_names: Vec<String>,
        odd_names: Vec<String>,
        brackets: &[IntBracket<'_>],
    ) -> Result<Self> {
        let d = even_names.len() + odd_names.len();
        let mut entries = Vec::with_capacity(brackets.len());
        for &(i, j, terms) in brackets {
            let mut v = vec![T::zero(); d];
            for &(k, c) in terms {
                if k >= d {
                    return Err(Error::IndexOutOfRange(k));
                }
                v[k] = v[k].clone() + T::from_i64(c);
            }
            entries.push((i, j, v));
        }
        Self::from_brackets(even_names, odd_names, entries)
    }

    fn set_bracket(&mut self, i: usize, j: usize, value: &[T]) {
        let d = self.dim();
        let start = (i * d + j) * d;
        self.sc[start..start + d].clone_from_slice(value);
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.even_names.len(), self.odd_names.len())
    }

    pub fn dim(&self) -> usize {
        self.even_names.len() + self.odd_names.len()
    }

    pub fn parity(&self, i: usize) -> Parity {
        if i < self.even_names.len() {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn name(&self, i: usize) -> &str {
        let m = self.even_names.len();
        if i < m {
            &self.even_names[i]
        } else {
            &self.odd_names[i - m]
        }
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.even_names.iter().chain(&self.odd_names).map(String::as_str)
    }

    pub fn even_names(&self) -> &[String] {
        &self.even_names
    }

    pub fn odd_names(&self) -> &[String] {
        &self.odd_names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names().position(|n| n == name)
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &T {
        let d = self.dim();
        &self.sc[(i * d + j) * d + k]
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[T] {
        let d = self.dim();
        let start = (i * d + j) * d;
        &self.sc[start..start + d]
    }

    pub fn table(&self) -> &[T] {
        &self.sc
    }

    pub fn basis_vector(&self, i: usize) -> Vec<T> {
        let mut v = vec![T::zero(); self.dim()];
        v[i] = T::one();
        v
    }

    pub fn is_abelian(&self) -> bool {
        self.sc.iter().all(Zero::is_zero)
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &[T], y: &[T]) -> Result<Vec<T>> {
        let d = self.dim();
        for v in [x, y] {
            if v.len() != d {
                return Err(Error::DimensionMismatch { expected: d, found: v.len() });
            }
        }
        let mut out = vec![T::zero(); d];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let coeff = xi.clone() * yj.clone();
                for (k, c) in self.bracket_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = out[k].clone() + coeff.clone() * c.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    /// `[e_i, v]` for a coordinate vector `v` of the right length.
    pub(crate) fn bracket_basis_vec(&self, i: usize, v: &[T]) -> Vec<T> {
        let d = self.dim();
        let mut out = vec![T::zero(); d];
        for (j, vj) in v.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (k, c) in self.bracket_basis(i, j).iter().enumerate() {
                if !c.is_zero() {
                    out[k] = out[k].clone() + vj.clone() * c.clone();
                }
            }
        }
        out
    }

    /// Parity of a vector: `Some` if its support lies in one parity block
    /// (the zero vector counts as even), `None` otherwise.
    pub fn vector_parity(&self, v: &[T]) -> Option<Parity> {
        let m = self.even_names.len();
        let even = v[..m].iter().any(|c| !c.is_zero());
        let odd = v[m..].iter().any(|c| !c.is_zero());
        match (even, odd) {
            (true, true) => None,
            (false, true) => Some(Parity::Odd),
            _ => Some(Parity::Even),
        }
    }

    /// Checks grading, super antisymmetry and the graded Jacobi identity on
    /// basis elements.
    pub fn validate(&self) -> ValidationReport {
        let d = self.dim();
        let mut violations = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    if !self.structure_constant(i, j, k).is_zero() && self.parity(k) != self.parity(i) + self.parity(j)
                    {
                        violations.push(Violation::Grading { i, j, k });
                    }
                }
            }
        }
        for i in 0..d {
            for j in i..d {
                for k in 0..d {
                    let expected =
                        -koszul_sign(self.parity(i), self.parity(j), self.structure_constant(i, j, k).clone());
                    if *self.structure_constant(j, i, k) != expected {
                        violations.push(Violation::Antisymmetry { i, j, k });
                    }
                }
            }
        }
        let mut reported: BTreeSet<[usize; 3]> = BTreeSet::new();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let mut key = [i, j, k];
                    key.sort_unstable();
                    if reported.contains(&key) {
                        continue;
                    }
                    let sum = self.jacobi_sum(i, j, k);
                    if let Some(coordinate) = sum.iter().position(|c| !c.is_zero()) {
                        reported.insert(key);
                        violations.push(Violation::Jacobi { i, j, k, coordinate });
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    /// `(-1)^(|x||z|)[x,[y,z]] + (-1)^(|y||x|)[y,[z,x]] + (-1)^(|z||y|)[z,[x,y]]`
    /// on basis elements.
    pub fn jacobi_sum(&self, i: usize, j: usize, k: usize) -> Vec<T> {
        let (pi, pj, pk) = (self.parity(i), self.parity(j), self.parity(k));
        let terms = [
            (pi.koszul(pk), self.bracket_basis_vec(i, self.bracket_basis(j, k))),
            (pj.koszul(pi), self.bracket_basis_vec(j, self.bracket_basis(k, i))),
            (pk.koszul(pj), self.bracket_basis_vec(k, self.bracket_basis(i, j))),
        ];
        let mut out = vec![T::zero(); self.dim()];
        for (negate, term) in terms {
            for (o, t) in out.iter_mut().zip(term) {
                if negate {
                    *o = o.clone() - t;
                } else {
                    *o = o.clone() + t;
                }
            }
        }
        out
    }

    /// Block direct sum. Basis order: even(A), even(B), odd(A), odd(B).
    /// Labels of `other` that collide are suffixed `_2`, `_3`, ...
    pub fn direct_sum(&self, other: &SuperAlgebra<T>) -> SuperAlgebra<T> {
        let (m1, n1) = self.dims();
        let (m2, n2) = other.dims();
        let mut taken: HashSet<String> = self.names().map(str::to_string).collect();
        let mut rename = |name: &str| {
            let mut candidate = name.to_string();
            let mut k = 2;
            while taken.contains(&candidate) {
                candidate = format!("{name}_{k}");
                k += 1;
            }
            taken.insert(candidate.clone());
            candidate
        };
        let other_even: Vec<String> = other.even_names.iter().map(|n| rename(n)).collect();
        let other_odd: Vec<String> = other.odd_names.iter().map(|n| rename(n)).collect();
        let even = [self.even_names.clone(), other_even].concat();
        let odd = [self.odd_names.clone(), other_odd].concat();

        let map_a: Vec<usize> = (0..m1).chain(m1 + m2..m1 + m2 + n1).collect();
        let map_b: Vec<usize> = (m1..m1 + m2).chain(m1 + m2 + n1..m1 + m2 + n1 + n2).collect();
        let mut out = SuperAlgebra::abelian(even, odd);
        out.embed_block(self, &map_a);
        out.embed_block(other, &map_b);
        out
    }

    /// Copies the structure constants of `part` into `self` along `map`
    /// (basis index in `part` -> basis index in `self`).
    pub(crate) fn embed_block(&mut self, part: &SuperAlgebra<T>, map: &[usize]) {
        let d = self.dim();
        let pd = part.dim();
        for i in 0..pd {
            for j in 0..pd {
                for k in 0..pd {
                    let c = part.structure_constant(i, j, k);
                    if !c.is_zero() {
                        self.sc[(map[i] * d + map[j]) * d + map[k]] = c.clone();
                    }
                }
            }
        }
    }

    pub(crate) fn add_structure_constant(&mut self, i: usize, j: usize, k: usize, value: T) {
        let d = self.dim();
        let idx = (i * d + j) * d + k;
        self.sc[idx] = self.sc[idx].clone() + value;
    }

    /// Relabels the basis: new basis element `p` is old element `perm[p]`.
    /// `perm` must map evens to evens and odds to odds.
    pub fn permuted(&self, perm: &[usize]) -> Result<SuperAlgebra<T>> {
        let d = self.dim();
        if perm.len() != d {
            return Err(Error::DimensionMismatch { expected: d, found: perm.len() });
        }
        let mut inverse = vec![usize::MAX; d];
        for (new, &old) in perm.iter().enumerate() {
            if old >= d || inverse[old] != usize::MAX || self.parity(old) != self.parity(new) {
                return Err(Error::IndexOutOfRange(old));
            }
            inverse[old] = new;
        }
        let names: Vec<String> = perm.iter().map(|&old| self.name(old).to_string()).collect();
        let (m, _) = self.dims();
        let mut out = SuperAlgebra::abelian(names[..m].to_vec(), names[m..].to_vec());
        for (new_i, &old_i) in perm.iter().enumerate() {
            for (new_j, &old_j) in perm.iter().enumerate() {
                for (old_k, &new_k) in inverse.iter().enumerate() {
                    let c = self.structure_constant(old_i, old_j, old_k);
                    if !c.is_zero() {
                        out.sc[(new_i * d + new_j) * d + new_k] = c.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    /// Change of basis: the new basis vectors are the columns of `g`, which
    /// must be invertible and parity-preserving.
    pub fn change_basis(&self, g: &Matrix<T>) -> Result<SuperAlgebra<T>> {
        let d = self.dim();
        if g.rows() != d || g.cols() != d {
            return Err(Error::DimensionMismatch { expected: d, found: g.rows() });
        }
        for i in 0..d {
            for j in 0..d {
                if self.parity(i) != self.parity(j) && !g.get(i, j).is_zero() {
                    return Err(Error::NonHomogeneous);
                }
            }
        }
        let inv = g.inverse().ok_or_else(|| Error::Internal("basis change is singular".into()))?;
        let cols: Vec<Vec<T>> = (0..d).map(|j| g.column(j)).collect();
        let mut out = SuperAlgebra::abelian(self.even_names.clone(), self.odd_names.clone());
        for i in 0..d {
            for j in 0..d {
                let b = self.bracket(&cols[i], &cols[j])?;
                let coords = inv.mul_vec(&b)?;
                out.set_bracket(i, j, &coords);
            }
        }
        Ok(out)
    }
}

impl<T: Scalar> fmt::Debug for SuperAlgebra<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (m, n) = self.dims();
        writeln!(f, "SuperAlgebra ({m}|{n}) {{")?;
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let terms: Vec<String> = self
                    .bracket_basis(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| format!("{c}*{}", self.name(k)))
                    .collect();
                if !terms.is_empty() {
                    writeln!(f, "  [{}, {}] = {}", self.name(i), self.name(j), terms.join(" + "))?;
                }
            }
        }
        write!(f, "}}")
    }
}

pub(crate) fn labels(prefix: &str, count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("{prefix}{i}")).collect()
}

//! Degree-two segment of the Chevalley–Eilenberg chain complex with trivial
//! coefficients, `Λ³L -> Λ²L -> L`, and `dim M(L) = dim H_2(L)`.
//!
//! Chains live in the super exterior powers: even generators anticommute,
//! odd generators commute, so `f ∧ f` survives for odd `f`. A generator is
//! stored as a non-decreasing tuple of basis indices in which only odd
//! indices may repeat. Since even indices precede odd ones, sorting a tuple
//! also groups it by parity.

use std::collections::HashMap;

use crate::algebra::SuperAlgebra;
use crate::bounds::nayak_bound;
use crate::error::{Error, Result};
use crate::exactla::Matrix;
use crate::scalar::{koszul_sign, Scalar};

/// Generators of `Λ²L`: `e∧e` (i<j), then `e∧f`, then `f∧f` (a≤b).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wedge2Basis {
    gens: Vec<[usize; 2]>,
    position: HashMap<[usize; 2], usize>,
}

/// Generators of `Λ³L`: `eee`, `eef`, `eff`, `fff`, lexicographic within blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wedge3Basis {
    gens: Vec<[usize; 3]>,
    position: HashMap<[usize; 3], usize>,
}

impl Wedge2Basis {
    pub fn new(m: usize, n: usize) -> Self {
        let d = m + n;
        let mut gens = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                gens.push([i, j]);
            }
        }
        for i in 0..m {
            for a in m..d {
                gens.push([i, a]);
            }
        }
        for a in m..d {
            for b in a..d {
                gens.push([a, b]);
            }
        }
        let position = gens.iter().enumerate().map(|(p, g)| (*g, p)).collect();
        Wedge2Basis { gens, position }
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[[usize; 2]] {
        &self.gens
    }

    pub fn position(&self, g: [usize; 2]) -> Option<usize> {
        self.position.get(&g).copied()
    }
}

impl Wedge3Basis {
    pub fn new(m: usize, n: usize) -> Self {
        let d = m + n;
        let mut gens = Vec::new();
        for i in 0..m {
            for j in i + 1..m {
                for k in j + 1..m {
                    gens.push([i, j, k]);
                }
            }
        }
        for i in 0..m {
            for j in i + 1..m {
                for a in m..d {
                    gens.push([i, j, a]);
                }
            }
        }
        for i in 0..m {
            for a in m..d {
                for b in a..d {
                    gens.push([i, a, b]);
                }
            }
        }
        for a in m..d {
            for b in a..d {
                for c in b..d {
                    gens.push([a, b, c]);
                }
            }
        }
        let position = gens.iter().enumerate().map(|(p, g)| (*g, p)).collect();
        Wedge3Basis { gens, position }
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generators(&self) -> &[[usize; 3]] {
        &self.gens
    }

    pub fn position(&self, g: [usize; 3]) -> Option<usize> {
        self.position.get(&g).copied()
    }
}

/// `e_i ∧ e_j` as `(negate, generator position)`, or `None` when it vanishes.
fn wedge_basis_pair<T: Scalar>(
    alg: &SuperAlgebra<T>,
    basis: &Wedge2Basis,
    i: usize,
    j: usize,
) -> Option<(bool, usize)> {
    if i == j && !alg.parity(i).is_odd() {
        return None;
    }
    if i <= j {
        Some((false, basis.position([i, j]).expect("generator exists")))
    } else {
        // e_i ∧ e_j = -(-1)^(|i||j|) e_j ∧ e_i
        let negate = !alg.parity(i).koszul(alg.parity(j));
        Some((negate, basis.position([j, i]).expect("generator exists")))
    }
}

/// Adds `coeff * (u ∧ e_k)` into `out`.
fn add_wedge_vec<T: Scalar>(alg: &SuperAlgebra<T>, basis: &Wedge2Basis, out: &mut [T], coeff: &T, u: &[T], k: usize) {
    for (l, ul) in u.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        if let Some((negate, pos)) = wedge_basis_pair(alg, basis, l, k) {
            let v = coeff.clone() * ul.clone();
            out[pos] = if negate { out[pos].clone() - v } else { out[pos].clone() + v };
        }
    }
}

/// `x ∧ y` for homogeneous `x`, `y`, expanded on the generators of `Λ²L`
/// with the Koszul reordering sign.
pub fn canonicalize_wedge2<T: Scalar>(alg: &SuperAlgebra<T>, x: &[T], y: &[T]) -> Result<Vec<T>> {
    let d = alg.dim();
    for v in [x, y] {
        if v.len() != d {
            return Err(Error::DimensionMismatch { expected: d, found: v.len() });
        }
        if alg.vector_parity(v).is_none() {
            return Err(Error::NonHomogeneous);
        }
    }
    let (m, n) = alg.dims();
    let basis = Wedge2Basis::new(m, n);
    let mut out = vec![T::zero(); basis.len()];
    for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if let Some((negate, pos)) = wedge_basis_pair(alg, &basis, i, j) {
                let v = xi.clone() * yj.clone();
                out[pos] = if negate { out[pos].clone() - v } else { out[pos].clone() + v };
            }
        }
    }
    Ok(out)
}

/// `d(x∧y) = [x,y]`: one column per generator of `Λ²L`.
pub fn build_d2<T: Scalar>(alg: &SuperAlgebra<T>) -> Matrix<T> {
    let (m, n) = alg.dims();
    let basis = Wedge2Basis::new(m, n);
    let columns: Vec<Vec<T>> = basis.generators().iter().map(|&[i, j]| alg.bracket_basis(i, j).to_vec()).collect();
    Matrix::from_columns(alg.dim(), &columns).expect("columns have algebra length")
}

/// Boundary of the ordered triple `e_i ∧ e_j ∧ e_k`:
/// `[x,y]∧z + (-1)^(|x|(|y|+|z|)) [y,z]∧x + (-1)^(|z|(|x|+|y|)) [z,x]∧y`.
pub fn boundary3<T: Scalar>(alg: &SuperAlgebra<T>, basis: &Wedge2Basis, i: usize, j: usize, k: usize) -> Vec<T> {
    let (pi, pj, pk) = (alg.parity(i), alg.parity(j), alg.parity(k));
    let one = T::one();
    let mut out = vec![T::zero(); basis.len()];
    add_wedge_vec(alg, basis, &mut out, &one, alg.bracket_basis(i, j), k);
    add_wedge_vec(alg, basis, &mut out, &koszul_sign(pi, pj + pk, one.clone()), alg.bracket_basis(j, k), i);
    add_wedge_vec(alg, basis, &mut out, &koszul_sign(pk, pi + pj, one.clone()), alg.bracket_basis(k, i), j);
    out
}

/// One column per generator of `Λ³L`, with values in `Λ²L`.
pub fn build_d3<T: Scalar>(alg: &SuperAlgebra<T>) -> Matrix<T> {
    let (m, n) = alg.dims();
    let w2 = Wedge2Basis::new(m, n);
    let w3 = Wedge3Basis::new(m, n);
    let columns: Vec<Vec<T>> = w3.generators().iter().map(|&[i, j, k]| boundary3(alg, &w2, i, j, k)).collect();
    Matrix::from_columns(w2.len(), &columns).expect("columns have Λ² length")
}

#[derive(Debug, Clone)]
pub struct BoundaryMaps<T: Scalar> {
    pub wedge2: Wedge2Basis,
    pub wedge3: Wedge3Basis,
    pub d2: Matrix<T>,
    pub d3: Matrix<T>,
}

pub fn boundary_maps<T: Scalar>(alg: &SuperAlgebra<T>) -> BoundaryMaps<T> {
    let (m, n) = alg.dims();
    BoundaryMaps {
        wedge2: Wedge2Basis::new(m, n),
        wedge3: Wedge3Basis::new(m, n),
        d2: build_d2(alg),
        d3: build_d3(alg),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplierReport {
    pub dims: (usize, usize),
    pub wedge2_len: usize,
    pub wedge3_len: usize,
    pub rank_d2: usize,
    pub rank_d3: usize,
    /// `dim M(L) = |Λ²| - rank d2 - rank d3`.
    pub dim_m: usize,
    /// `dim [L, L]`, computed from the subspace rather than from `d2`.
    pub dim_derived: usize,
    pub nayak_bound: usize,
    /// `nayak_bound - dim_m`.
    pub defect: usize,
}

pub fn multiplier_report<T: Scalar>(alg: &SuperAlgebra<T>) -> MultiplierReport {
    let maps = boundary_maps(alg);
    let rank_d2 = maps.d2.rank();
    let rank_d3 = maps.d3.rank();
    let wedge2_len = maps.wedge2.len();
    let dim_m = wedge2_len - rank_d2 - rank_d3;
    let (m, n) = alg.dims();
    let nayak = nayak_bound(m, n);
    MultiplierReport {
        dims: (m, n),
        wedge2_len,
        wedge3_len: maps.wedge3.len(),
        rank_d2,
        rank_d3,
        dim_m,
        dim_derived: alg.derived().dim(),
        nayak_bound: nayak,
        defect: nayak.saturating_sub(dim_m),
    }
}

pub fn multiplier_dim<T: Scalar>(alg: &SuperAlgebra<T>) -> usize {
    multiplier_report(alg).dim_m
}

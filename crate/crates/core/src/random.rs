//! Seeded generators of valid superalgebras and valid actions, used by the
//! population suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::action::ActionTable;
use crate::algebra::{labels, SuperAlgebra};
use crate::catalog;
use crate::exactla::Matrix;
use crate::scalar::{Parity, Scalar};
use crate::subspace::GradedSubspace;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small<T: Scalar, R: Rng>(rng: &mut R) -> T {
    T::from_i64(rng.gen_range(-2..=2))
}

/// A two-step nilpotent superalgebra `V + W` with `W` central and
/// `[V, V] ⊆ W`, all brackets random small integers. Always valid since
/// every double bracket vanishes. Total dimension at most `max`.
pub fn two_step<T: Scalar, R: Rng>(rng: &mut R, max: (usize, usize)) -> SuperAlgebra<T> {
    let even = rng.gen_range(0..=max.0);
    let odd = rng.gen_range(0..=max.1).max(usize::from(even == 0));
    let w_even = rng.gen_range(0..=even);
    let w_odd = rng.gen_range(0..=odd);
    let (v_even, v_odd) = (even - w_even, odd - w_odd);
    // layout: V even, W even, V odd, W odd
    let mut names = labels("v", v_even);
    names.extend(labels("w", w_even));
    let mut odd_names = labels("u", v_odd);
    odd_names.extend(labels("t", w_odd));
    let d = even + odd;
    let v_idx: Vec<usize> = (0..v_even).chain(even..even + v_odd).collect();
    let w_even_idx: Vec<usize> = (v_even..even).collect();
    let w_odd_idx: Vec<usize> = (even + v_odd..d).collect();
    let mut brackets = Vec::new();
    for (a, &i) in v_idx.iter().enumerate() {
        for &j in &v_idx[a..] {
            let pi = if i < even { Parity::Even } else { Parity::Odd };
            let pj = if j < even { Parity::Even } else { Parity::Odd };
            if i == j && pi == Parity::Even {
                continue;
            }
            let target = if (pi + pj) == Parity::Even { &w_even_idx } else { &w_odd_idx };
            let mut value = vec![T::zero(); d];
            for &k in target {
                value[k] = small(rng);
            }
            brackets.push((i, j, value));
        }
    }
    SuperAlgebra::from_brackets(names, odd_names, brackets).expect("one orientation per pair")
}

/// A random invertible parity-preserving matrix: unit upper triangular inside
/// each parity block, then a random permutation of each block.
pub fn basis_change<T: Scalar, R: Rng>(rng: &mut R, dims: (usize, usize)) -> Matrix<T> {
    let (m, n) = dims;
    let d = m + n;
    let mut g = Matrix::zeros(d, d);
    for (start, len) in [(0, m), (m, n)] {
        let mut perm: Vec<usize> = (start..start + len).collect();
        perm.shuffle(rng);
        for (a, &row) in perm.iter().enumerate() {
            for b in a..len {
                let v = if a == b { T::one() } else { small(rng) };
                g.set(row, start + b, v);
            }
        }
    }
    g
}

/// Valid superalgebras of dimension at most `(4|4)` drawn from three
/// sources in rotation: two-step nilpotent, random semidirect products, and
/// randomly rebased catalog entries.
pub fn random_algebras<T: Scalar>(seed: u64, count: usize) -> Vec<SuperAlgebra<T>> {
    let mut rng = rng(seed);
    let base: Vec<SuperAlgebra<T>> = catalog::enumerate_catalog::<T>(6)
        .into_iter()
        .map(|e| e.algebra)
        .filter(|a| a.dims().0 <= 4 && a.dims().1 <= 4)
        .collect();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let alg = match out.len() % 3 {
            0 => two_step(&mut rng, (4, 4)),
            1 => {
                let t = action_triple::<T, _>(&mut rng);
                let sd = crate::action::semidirect(&t.acted, &t.acting, &t.action).expect("valid action");
                sd.algebra
            }
            _ => {
                let a = base.choose(&mut rng).expect("catalog is nonempty");
                let g = basis_change(&mut rng, a.dims());
                a.change_basis(&g).expect("parity-preserving and invertible")
            }
        };
        if alg.dims().0 <= 4 && alg.dims().1 <= 4 {
            out.push(alg);
        }
    }
    out
}

/// A superalgebra `acting` acting on `acted` through `action`.
#[derive(Debug, Clone)]
pub struct ActionTriple<T: Scalar> {
    pub acting: SuperAlgebra<T>,
    pub acted: SuperAlgebra<T>,
    pub action: ActionTable<T>,
}

/// A random valid action, drawn from four constructions: the adjoint action
/// of a subalgebra on an ideal of a two-step algebra, an even line acting on
/// an abelian superalgebra by an even endomorphism, an odd line acting by a
/// square-zero odd endomorphism, and an algebra acting on itself.
pub fn action_triple<T: Scalar, R: Rng>(rng: &mut R) -> ActionTriple<T> {
    match rng.gen_range(0..4) {
        0 => {
            let p: SuperAlgebra<T> = two_step(rng, (3, 3));
            let (w, v): (Vec<usize>, Vec<usize>) = (0..p.dim()).partition(|&i| p.name(i).starts_with(['w', 't']));
            let pick = |rng: &mut R| -> Vec<usize> {
                let mut idx = w.clone();
                idx.extend(v.iter().copied().filter(|_| rng.gen_bool(0.5)));
                idx.sort_unstable();
                idx
            };
            let k = GradedSubspace::from_indices(p.dims(), &pick(rng)).expect("indices in range");
            let n = GradedSubspace::from_indices(p.dims(), &pick(rng)).expect("indices in range");
            let action = ActionTable::adjoint(&p, &k, &n).expect("contains the center");
            ActionTriple { acting: action.acting().clone(), acted: action.acted().clone(), action }
        }
        1 | 2 => {
            let odd_line = rng.gen_range(0..2) == 1;
            let (a, b) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
            let (a, b) = if a + b == 0 { (1, 1) } else { (a, b) };
            let acted: SuperAlgebra<T> = SuperAlgebra::abelian(labels("m", a), labels("n", b));
            let acting: SuperAlgebra<T> = if odd_line {
                SuperAlgebra::abelian(vec![], vec!["s".into()])
            } else {
                SuperAlgebra::abelian(vec!["r".into()], vec![])
            };
            let d = a + b;
            let mut table = vec![vec![T::zero(); d]; d];
            for (col, image) in table.iter_mut().enumerate() {
                for (row, slot) in image.iter_mut().enumerate() {
                    let same = (row < a) == (col < a);
                    // odd case: only even -> odd, so the square vanishes
                    let allowed = if odd_line { col < a && row >= a } else { same };
                    if allowed {
                        *slot = small(rng);
                    }
                }
            }
            let action = ActionTable::new(acting.clone(), acted.clone(), table).expect("shapes match");
            ActionTriple { acting, acted, action }
        }
        _ => {
            let p: SuperAlgebra<T> = two_step(rng, (2, 2));
            let action = ActionTable::adjoint(&p, &p.whole(), &p.whole()).expect("whole is an ideal");
            ActionTriple { acting: action.acting().clone(), acted: action.acted().clone(), action }
        }
    }
}

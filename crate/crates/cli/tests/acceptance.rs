//! Acceptance criteria 1 to 10, each checked against formulas and
//! recognisers written out here rather than taken from the library.
//! Prints one line per criterion and exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use lieschur::catalog::{self, enumerate_catalog, CatalogEntry};
use lieschur::homology::boundary_maps;
use lieschur::random::{action_triple, random_algebras, rng};
use lieschur::suite::{catalog_pairs, CatalogPair};
use lieschur::{multiplier_dim, pair_multiplier_dim, semidirect, Algebra, Pair, Rational};

fn exterior_square(m: usize, n: usize) -> i64 {
    let (m, n) = (m as i64, n as i64);
    ((m + n) * (m + n) + (n - m)) / 2
}

fn heisenberg_even(m: usize, n: usize) -> usize {
    match (m, n) {
        (0, 1) => 0,
        (1, 0) => 2,
        _ => {
            let (m, n) = (m as i64, n as i64);
            (2 * m * m - m - 1 + 2 * m * n + n * (n + 1) / 2) as usize
        }
    }
}

fn heisenberg_odd(n: usize) -> usize {
    if n == 1 {
        2
    } else {
        2 * n * n - 1
    }
}

struct Outcome {
    checked: usize,
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { checked: 0, failures: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

type Criterion = fn(&World) -> Outcome;

struct World {
    catalog: Vec<CatalogEntry<Rational>>,
    random: Vec<Algebra>,
    pairs: Vec<CatalogPair<Rational>>,
}

fn population(w: &World) -> impl Iterator<Item = (String, &Algebra)> {
    w.catalog
        .iter()
        .map(|e| (e.id.clone(), &e.algebra))
        .chain(w.random.iter().enumerate().map(|(i, a)| (format!("random #{i}"), a)))
}

fn criterion_1(_: &World) -> Outcome {
    let mut o = Outcome::new();
    for m in 0..=4 {
        for n in 0..=4 - m {
            if m + n == 0 {
                continue;
            }
            let got = multiplier_dim(&catalog::heisenberg_even::<Rational>(m, n).unwrap());
            let want = heisenberg_even(m, n);
            o.check(got == want, || format!("({m},{n}): {got} != {want}"));
        }
    }
    o
}

fn criterion_2(_: &World) -> Outcome {
    let mut o = Outcome::new();
    for n in 1..=3 {
        let got = multiplier_dim(&catalog::heisenberg_odd::<Rational>(n).unwrap());
        let want = heisenberg_odd(n);
        o.check(got == want, || format!("n = {n}: {got} != {want}"));
    }
    o
}

fn criterion_3(w: &World) -> Outcome {
    let mut o = Outcome::new();
    for m in 0..=4 {
        for n in 0..=4 {
            let got = multiplier_dim(&catalog::abelian::<Rational>(m, n)) as i64;
            o.check(got == exterior_square(m, n), || format!("abelian({m}|{n}): {got}"));
        }
    }
    for e in w.catalog.iter().filter(|e| !e.algebra.is_abelian()) {
        let (m, n) = e.algebra.dims();
        let got = multiplier_dim(&e.algebra) as i64;
        o.check(got < exterior_square(m, n), || format!("{}: {got} attains the bound", e.id));
    }
    o
}

fn criterion_4(w: &World) -> Outcome {
    let mut o = Outcome::new();
    let mut lie_h1 = 0;
    let mut super_h1 = 0;
    for e in w.catalog.iter().filter(|e| e.algebra.is_nilpotent()) {
        let (m, n) = e.algebra.dims();
        let t = exterior_square(m, n) - multiplier_dim(&e.algebra) as i64;
        // the only (3|0) non-abelian entry, and the only one isomorphic to H(1)
        let is_h1 = e.id == "H(1)";
        if n == 0 && m <= 6 {
            o.check((t == 1) == is_h1, || format!("{} (Lie): t = {t}", e.id));
            lie_h1 += usize::from(t == 1);
        }
        o.check((t == 1) == is_h1, || format!("{}: t = {t}", e.id));
        super_h1 += usize::from(t == 1);
    }
    o.check(lie_h1 == 1 && super_h1 == 1, || format!("defect-1 counts {lie_h1}, {super_h1}"));
    o
}

fn criterion_5(w: &World) -> Outcome {
    let mut o = Outcome::new();
    for (id, a) in population(w) {
        o.check(a.validate().is_valid(), || format!("{id}: invalid"));
        let (m, n) = a.dims();
        let (zm, zn) = a.center().dims();
        let th1 = exterior_square(m - zm, n - zn);
        let l2 = a.derived().dim() as i64;
        o.check(l2 <= th1, || format!("{id}: dim L^2 = {l2} > {th1}"));
        let dm = multiplier_dim(a) as i64;
        o.check(dm <= exterior_square(m, n), || format!("{id}: dim M = {dm}"));
    }
    for p in &w.pairs {
        let (l, n) = (p.pair.algebra(), p.pair.ideal());
        let (nm, nn) = n.dims();
        let quotient = (l.dim() - n.dim()) as i64;
        let (cm, cn) = l.pair_center(n).unwrap().dims();
        let commutator = l.commutator_subspace(n, &l.whole()).unwrap().dim() as i64;
        let th1 = exterior_square(nm - cm, nn - cn) + ((nm - cm + nn - cn) as i64) * quotient;
        o.check(commutator <= th1, || format!("{}: dim [N,L] = {commutator} > {th1}", p.id));
        let th2 = exterior_square(nm, nn) + (n.dim() as i64) * quotient;
        let dm = pair_multiplier_dim(&p.pair).unwrap() as i64;
        o.check(dm <= th2 - commutator, || format!("{}: dim M(N,L) = {dm} > {}", p.id, th2 - commutator));
        o.check(dm <= th2, || format!("{}: dim M(N,L) = {dm} > {th2}", p.id));
    }
    o
}

fn criterion_6(w: &World) -> Outcome {
    let mut o = Outcome::new();
    for (id, a) in population(w) {
        let maps = boundary_maps(a);
        let zero = (0..maps.d2.rows()).all(|i| {
            (0..maps.d3.cols()).all(|j| {
                let mut s = Rational::from_integer(0.into());
                for k in 0..maps.d2.cols() {
                    s += maps.d2.get(i, k) * maps.d3.get(k, j);
                }
                s == Rational::from_integer(0.into())
            })
        });
        o.check(zero, || format!("{id}: d2 d3 != 0"));
        let (rank, l2) = (maps.d2.rank(), a.derived().dim());
        o.check(rank == l2, || format!("{id}: rank d2 = {rank}, dim L^2 = {l2}"));
    }
    o
}

fn criterion_7(w: &World) -> Outcome {
    let mut o = Outcome::new();
    for e in &w.catalog {
        let whole = pair_multiplier_dim(&Pair::whole(e.algebra.clone())).unwrap();
        let direct = multiplier_dim(&e.algebra);
        o.check(whole == direct, || format!("{}: {whole} != {direct}", e.id));
    }
    for p in w.pairs.iter().filter(|p| p.pair.algebra().is_abelian()) {
        let (nm, nn) = p.pair.ideal().dims();
        let quotient = (p.pair.algebra().dim() - nm - nn) as i64;
        let th2 = exterior_square(nm, nn) + ((nm + nn) as i64) * quotient;
        let dm = pair_multiplier_dim(&p.pair).unwrap() as i64;
        o.check(dm == th2, || format!("{}: {dm} != {th2}", p.id));
    }
    o
}

fn criterion_8(w: &World) -> Outcome {
    let mut o = Outcome::new();
    for p in w.pairs.iter().filter(|p| p.pair.algebra().is_nilpotent()) {
        let (l, n) = (p.pair.algebra(), p.pair.ideal());
        let quotient = (l.dim() - n.dim()) as i64;
        let (nm, nn) = n.dims();
        let th2 = exterior_square(nm, nn) + (n.dim() as i64) * quotient;
        if th2 - pair_multiplier_dim(&p.pair).unwrap() as i64 != 1 {
            continue;
        }
        let commutator = l.commutator_subspace(n, &l.whole()).unwrap();
        let center = l.pair_center(n).unwrap();
        let ok = !l.is_abelian() && (commutator.is_zero() || (commutator.dim() == 1 && commutator == center));
        o.check(ok, || format!("{}: dim [N,L] = {}, Z(N,L) {:?}", p.id, commutator.dim(), center.dims()));
    }
    o
}

fn criterion_9(_: &World) -> Outcome {
    let mut o = Outcome::new();
    let mut r = rng(0xacce55);
    let mut made = 0;
    while made < 50 {
        let t = action_triple::<Rational, _>(&mut r);
        if !t.action.validate().is_valid() {
            continue;
        }
        made += 1;
        let sd = semidirect(&t.acted, &t.acting, &t.action).unwrap();
        o.check(sd.algebra.validate().is_valid(), || format!("triple {made}: product invalid"));
        let m = sd.m_subspace();
        o.check(sd.algebra.is_graded_ideal(&m), || format!("triple {made}: M not an ideal"));
        let q = sd.algebra.quotient(&m).unwrap();
        // the quotient basis is the image of L's basis, in order
        let (l0, l1) = t.acting.dims();
        let mut same = q.algebra.dims() == (l0, l1);
        let d = t.acting.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let lifted = sd.algebra.structure_constant(sd.l_indices[i], sd.l_indices[j], sd.l_indices[k]);
                    same &= q.algebra.structure_constant(i, j, k) == t.acting.structure_constant(i, j, k);
                    same &= lifted == t.acting.structure_constant(i, j, k);
                }
            }
        }
        o.check(same, || format!("triple {made}: quotient differs from L"));
    }
    o
}

fn criterion_10(_: &World) -> Outcome {
    let mut o = Outcome::new();
    let start = Instant::now();
    let status = Command::new(env!("CARGO_BIN_EXE_lieschur")).args(["selftest", "--quiet"]).status();
    let elapsed = start.elapsed();
    let ok = status.as_ref().is_ok_and(|s| s.success());
    o.check(ok, || format!("selftest exit status {status:?}"));
    o.check(elapsed < Duration::from_secs(60), || format!("selftest took {:.1}s", elapsed.as_secs_f64()));
    o
}

fn main() -> ExitCode {
    let catalog = enumerate_catalog::<Rational>(6);
    let pairs = catalog_pairs(&catalog);
    let world = World { random: random_algebras(0xfeed, 100), catalog, pairs };
    let criteria: [(&str, Criterion); 10] = [
        ("even-center Heisenberg table", criterion_1),
        ("odd-center Heisenberg table", criterion_2),
        ("abelian equality and strictness", criterion_3),
        ("defect 1 exactly at H(1)", criterion_4),
        ("bound suites", criterion_5),
        ("chain-complex properties", criterion_6),
        ("pair decomposition", criterion_7),
        ("pair defect 1 dichotomy", criterion_8),
        ("semidirect soundness", criterion_9),
        ("selftest under 60 s", criterion_10),
    ];
    let mut all = true;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run(&world);
        let pass = o.failures.is_empty() && o.checked > 0;
        all &= pass;
        println!(
            "criterion {:>2} {}: {} ({} checks, {:.1}s)",
            i + 1,
            if pass { "PASS" } else { "FAIL" },
            title,
            o.checked,
            start.elapsed().as_secs_f64()
        );
        for f in o.failures.iter().take(10) {
            println!("    {f}");
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

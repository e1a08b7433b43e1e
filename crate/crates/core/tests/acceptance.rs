//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Built with `harness = false` so the lines always print.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use num_traits::{One, Signed, Zero};
use rand::Rng;

use booldeg::boolfn::{decision_tree_complexity, Family, FamilyParams};
use booldeg::cube;
use booldeg::degrees::{deg, hypercube_nullstellensatz, ndeg, partial_degree, rdeg, sdeg};
use booldeg::dtree::build_tree;
use booldeg::harness::{
    counterexample_constraints, verify_corpus, verify_families, CorpusSpec, CorpusSummary, Status,
    CHECK_NAMES,
};
use booldeg::symmetry::{bernoulli_symmetrize, counterexample_symmetrization, minsky_papert};
use booldeg::{BooleanFunction, MultilinearPoly, Rational};
use common::*;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(t: Instant, limit: Duration) -> Result<(), String> {
    let e = t.elapsed();
    ensure(e <= limit, || format!("took {e:.1?}, limit {limit:?}"))
}

fn sweep_clean(s: &CorpusSummary) -> Result<(), String> {
    ensure(s.passed() && s.failures.is_empty(), || {
        let f = &s.failures[0];
        format!("{} failures, first {} {}: {}", s.failures.len(), f.table, f.check, f.detail)
    })?;
    for name in CHECK_NAMES {
        let t = s.checks.get(name).ok_or(format!("check {name} missing"))?;
        ensure(t.fail == 0 && t.pass + t.skipped == s.functions, || {
            format!("{name}: {t:?}")
        })?;
    }
    Ok(())
}

fn c1() -> Outcome {
    let t = Instant::now();
    let s = verify_corpus(&CorpusSpec::Exhaustive { n: 3 }).map_err(|e| e.to_string())?;
    ensure(s.functions == 256, || format!("{} functions", s.functions))?;
    sweep_clean(&s)?;
    within(t, Duration::from_secs(60))?;
    Ok(format!("256 functions, {} checks each, 0 failures", CHECK_NAMES.len()))
}

fn c2() -> Outcome {
    let t = Instant::now();
    let s = verify_corpus(&CorpusSpec::Exhaustive { n: 4 }).map_err(|e| e.to_string())?;
    ensure(s.functions == 65536, || format!("{} functions", s.functions))?;
    sweep_clean(&s)?;
    within(t, Duration::from_secs(3600))?;
    let t4 = t.elapsed();
    let t = Instant::now();
    let s5 = verify_corpus(&CorpusSpec::Sampled { n: 5, count: 200, seed: 7 })
        .map_err(|e| e.to_string())?;
    ensure(s5.functions == 200, || format!("{} sampled", s5.functions))?;
    sweep_clean(&s5)?;
    within(t, Duration::from_secs(600))?;
    Ok(format!(
        "n=4: 65536 functions in {t4:.1?}; n=5: 200 sampled in {:.1?}; 0 failures",
        t.elapsed()
    ))
}

const POINT_VALUES: [&str; 21] = [
    "ndeg_and_1", "ndeg_and_2", "ndeg_and_3", "ndeg_and_4",
    "rdeg_and_1", "rdeg_and_2", "rdeg_and_3", "rdeg_and_4",
    "parity_2_ndeg_rdeg", "parity_4_ndeg_rdeg",
    "sdeg_parity_1", "sdeg_parity_2", "sdeg_parity_3", "sdeg_parity_4",
    "maj_3", "maj_5", "equator_4", "parity_2_tight", "andor_2",
    "nullstellensatz_and_2", "nullstellensatz_all_3",
];

fn c3() -> Outcome {
    let s = verify_families().map_err(|e| e.to_string())?;
    for name in POINT_VALUES {
        let c = s
            .checks
            .iter()
            .find(|c| c.name == name)
            .ok_or(format!("{name} missing"))?;
        ensure(c.status == Status::Pass, || format!("{name}: {}", c.detail))?;
    }
    // a few values recomputed straight from the solvers
    let fam = |f: Family, p: FamilyParams| f.build(p).unwrap().into_total().unwrap();
    for n in 1..=4 {
        let and = fam(Family::And, FamilyParams::n(n));
        ensure(ndeg(&and).degree == n, || format!("ndeg(AND_{n})"))?;
        let par = fam(Family::Parity, FamilyParams::n(n));
        ensure(sdeg(&par).degree == n, || format!("sdeg(PARITY_{n})"))?;
        if n % 2 == 0 {
            ensure(2 * rdeg(&par).degree == n, || format!("rdeg(PARITY_{n})"))?;
        }
    }
    let andor = fam(Family::AndOr, FamilyParams::m(2));
    ensure(rdeg(&andor).degree == 2 && deg(&andor).degree == 4, || "ANDOR".into())?;
    Ok(format!("{} point values exact", POINT_VALUES.len()))
}

fn c4() -> Outcome {
    for n in [2, 3] {
        let (g1, g2) = counterexample_constraints(n).map_err(|e| e.to_string())?;
        ensure(g1.degree() == 1 && g2.degree() == 1, || "constraint degree".into())?;
        let common_zero = cube::points(2 * n).any(|x| g1.eval(x).is_zero() && g2.eval(x).is_zero());
        ensure(!common_zero, || format!("n={n}: common zero"))?;
        let pf = Family::Counterexample
            .build(FamilyParams::n(n))
            .map_err(|e| e.to_string())?
            .into_partial();
        let pd = partial_degree(&pf);
        ensure(pd.degree >= n, || format!("n={n}: partial degree {}", pd.degree))?;
        ensure(!partial_feasible(&pf, pd.degree - 1), || format!("n={n}: not minimal"))?;
        let sym = counterexample_symmetrization(n, &pd.interpolant).map_err(|e| e.to_string())?;
        ensure(sym.passed(), || format!("n={n}: P(s,t) = {}", sym.polynomial))?;
    }
    Ok("n=2,3: linear constraints, no common zero, degree >= n, P(0,t)=0 and P(s,n+1-s)=1".into())
}

fn c5() -> Outcome {
    let t = Instant::now();
    let mut count = 0;
    for idx in 1..255u64 {
        let f = BooleanFunction::from_index(3, idx).unwrap();
        let g1 = ndeg(&f).polynomial;
        let g2 = ndeg(&f.negate()).polynomial;
        let c = hypercube_nullstellensatz(&g1, &g2).map_err(|e| e.to_string())?;
        let one = Rational::one();
        for x in cube::points(3) {
            let v = c.h1.eval(x) * g1.eval(x) + c.h2.eval(x) * g2.eval(x);
            ensure(v == one, || format!("{}: sum at {x} is {v}", f.table_string()))?;
        }
        let d1 = c.h1.multilinearize_product(&g1).unwrap().degree();
        let d2 = c.h2.multilinearize_product(&g2).unwrap().degree();
        let bound = 2 * g1.degree().pow(2) * g2.degree().pow(2);
        ensure(d1.max(d2) <= bound, || {
            format!("{}: degree {} > {bound}", f.table_string(), d1.max(d2))
        })?;
        count += 1;
    }
    within(t, Duration::from_secs(300))?;
    Ok(format!("{count} certificates verified"))
}

fn check_witnesses(f: &BooleanFunction) -> Result<(), String> {
    let tag = f.table_string();
    let n = f.arity();
    let w = ndeg(f);
    let wn = ndeg(&f.negate());
    let sw = sdeg(f);
    let r = rdeg(f);
    let tree = build_tree(f);
    for x in cube::points(n) {
        let b = f.value(x);
        ensure(!w.polynomial.eval(x).is_zero() == b, || format!("{tag}: ndeg witness at {x}"))?;
        ensure(wn.polynomial.eval(x).is_zero() == b, || format!("{tag}: ndeg_neg witness at {x}"))?;
        let s = sw.polynomial.eval(x);
        ensure(!s.is_zero() && s.is_negative() == b, || format!("{tag}: sign witness at {x}"))?;
        let den = r.representation.denominator.eval(x);
        ensure(!den.is_zero(), || format!("{tag}: rational denominator vanishes at {x}"))?;
        let val = r.representation.numerator.eval(x) / den;
        ensure(val == q(b as i64), || format!("{tag}: rational value at {x}"))?;
        ensure(tree.tree.eval(x) == b, || format!("{tag}: tree at {x}"))?;
    }
    ensure(w.polynomial.degree() <= w.degree && sw.polynomial.degree() <= sw.degree, || {
        format!("{tag}: witness degree above claimed degree")
    })?;
    ensure(r.representation.degree() <= r.degree && r.degree == w.degree.max(wn.degree), || {
        format!("{tag}: rdeg")
    })?;
    ensure(tree.tree.is_well_formed(n) && tree.depth >= decision_tree_complexity(f), || {
        format!("{tag}: tree")
    })?;
    if n == 3 {
        for (g, d) in [(f.clone(), w.degree), (f.negate(), wn.degree)] {
            ensure(d == 0 || !ndeg_feasible(&g, d - 1), || format!("{tag}: ndeg not minimal"))?;
        }
        ensure(sw.degree == 0 || !sdeg_feasible(f, sw.degree - 1), || {
            format!("{tag}: sdeg not minimal")
        })?;
    }
    Ok(())
}

fn c6() -> Outcome {
    let mut r = rng(6);
    let mut per_n = [0usize; 3];
    for k in 0..1000 {
        let n = 3 + k % 3;
        let f = random_function(&mut r, n);
        check_witnesses(&f)?;
        per_n[n - 3] += 1;
    }
    Ok(format!(
        "1000 functions (n=3: {}, n=4: {}, n=5: {}) revalidated; n=3 minimality confirmed",
        per_n[0], per_n[1], per_n[2]
    ))
}

fn bernoulli_direct(p: &MultilinearPoly, y: &Rational) -> Rational {
    let n = p.arity();
    let one_minus = Rational::one() - y;
    cube::points(n)
        .map(|x| {
            let w = x.count_ones() as usize;
            let mut weight = Rational::one();
            for _ in 0..w {
                weight *= y;
            }
            for _ in w..n {
                weight *= &one_minus;
            }
            p.eval(x) * weight
        })
        .sum()
}

fn level_average(p: &MultilinearPoly, i: usize) -> Rational {
    let level: Vec<u32> = cube::points(p.arity()).filter(|x| x.count_ones() as usize == i).collect();
    let total: Rational = level.iter().map(|&x| p.eval(x)).sum();
    total / q(level.len() as i64)
}

fn nonzero_bound(p: &MultilinearPoly) -> bool {
    let n = p.arity();
    let nonzero = cube::points(n).filter(|&x| !p.eval(x).is_zero()).count();
    // nonzero / 2^n >= 2^-deg
    nonzero << p.degree() >= 1 << n
}

fn c7() -> Outcome {
    let mut r = rng(7);
    let ys = [(0, 1), (1, 1), (1, 2), (1, 3), (-2, 5)].map(|(a, b)| Rational::new(a.into(), b.into()));
    let mut polys = 0;
    while polys < 200 {
        let n = r.gen_range(1..=5);
        let p = random_poly(&mut r, n);
        if p.is_zero() {
            continue;
        }
        polys += 1;
        let big_p = bernoulli_symmetrize(&p);
        for y in &ys {
            ensure(big_p.eval(y) == bernoulli_direct(&p, y), || format!("Bernoulli: {p} at {y}"))?;
        }
        let mp = minsky_papert(&p, (1u32 << n) - 1).map_err(|e| e.to_string())?;
        let uni = mp.to_univariate().ok_or("full block left variables")?;
        for i in 0..=n {
            ensure(uni.eval(&q(i as i64)) == level_average(&p, i), || {
                format!("Minsky-Papert: {p} at level {i}")
            })?;
        }
        ensure(nonzero_bound(&p), || format!("nonzero bound: {p}"))?;
    }
    let mut witnesses = 0;
    for idx in 0..256u64 {
        let f = BooleanFunction::from_index(3, idx).unwrap();
        for g in [ndeg(&f).polynomial, ndeg(&f.negate()).polynomial] {
            if !g.is_zero() {
                ensure(nonzero_bound(&g), || format!("nonzero bound on witness {g}"))?;
                witnesses += 1;
            }
        }
    }
    let mut rf = rng(77);
    for _ in 0..100 {
        let f = random_function(&mut rf, 4);
        let g = ndeg(&f).polynomial;
        if !g.is_zero() {
            ensure(nonzero_bound(&g), || format!("nonzero bound on witness {g}"))?;
            witnesses += 1;
        }
    }
    Ok(format!("200 polynomials x 5 y values, all levels; Pr[p != 0] >= 2^-deg on 200 polynomials and {witnesses} witnesses"))
}

fn run_cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_booldeg"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || format!("{args:?} exited with {}", out.status))?;
    Ok(out.stdout)
}

fn c8() -> Outcome {
    let commands: [&[&str]; 5] = [
        &["verify", "--n", "3", "--exhaustive"],
        &["verify", "--n", "4", "--sample", "50", "--seed", "8"],
        &["verify-families"],
        &["measures", "--family", "equator", "--n", "4"],
        &["tree", "--family", "address", "--n", "3"],
    ];
    for args in commands {
        let a = run_cli(args)?;
        let b = run_cli(args)?;
        ensure(a == b, || format!("{args:?} differs between runs"))?;
        serde_json::from_slice::<serde_json::Value>(&a).map_err(|e| e.to_string())?;
    }
    let spec = CorpusSpec::Sampled { n: 5, count: 20, seed: 1 };
    let a = serde_json::to_string(&verify_corpus(&spec).unwrap()).unwrap();
    let b = serde_json::to_string(&verify_corpus(&spec).unwrap()).unwrap();
    ensure(a == b, || "library sampled run differs".into())?;
    Ok(format!("{} commands byte-identical across two runs", commands.len() + 1))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("exhaustive sweep n=3", c1),
        ("exhaustive sweep n=4, sampled n=5", c2),
        ("point values", c3),
        ("counterexample family", c4),
        ("nullstellensatz certificates n=3", c5),
        ("witness validity", c6),
        ("symmetrization", c7),
        ("determinism", c8),
    ];
    let only: Vec<usize> = std::env::var("BOOLDEG_ACCEPTANCE_ONLY")
        .map(|s| s.split(',').filter_map(|t| t.trim().parse().ok()).collect())
        .unwrap_or_default();
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let id = k + 1;
        if !only.is_empty() && !only.contains(&id) {
            continue;
        }
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {id} PASS [{name}] {detail} ({:.1?})", t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("criterion {id} FAIL [{name}] {why} ({:.1?})", t.elapsed());
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

//! Test-only oracles. They share no code with the solvers under test beyond
//! the data types.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use booldeg::{BooleanFunction, MultilinearPoly, PartialBooleanFunction, Rational};

pub fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_function(rng: &mut ChaCha8Rng, n: usize) -> BooleanFunction {
    let table = (0..1usize << n).map(|_| rng.gen_bool(0.5)).collect();
    BooleanFunction::new(n, table).unwrap()
}

/// Sparse random polynomial with small rational coefficients.
pub fn random_poly(rng: &mut ChaCha8Rng, n: usize) -> MultilinearPoly {
    let terms = (0..rng.gen_range(1..=6)).map(|_| {
        let mask = rng.gen_range(0..1u32 << n);
        let c = Rational::new(rng.gen_range(-5i64..=5).into(), rng.gen_range(1i64..=4).into());
        (mask, c)
    });
    MultilinearPoly::from_terms(n, terms).unwrap()
}

fn chi(mask: u32, x: u32) -> bool {
    x & mask == mask
}

/// Monomials of degree at most `d` over `n` variables.
pub fn monomials(n: usize, d: usize) -> Vec<u32> {
    (0..1u32 << n).filter(|m| m.count_ones() as usize <= d).collect()
}

/// Rank by plain row reduction.
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let k = rows[i][c].clone() / &pivot;
                for j in c..cols {
                    let t = rows[r][j].clone() * &k;
                    rows[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

/// Unique solution of `A y = b`, if the system is consistent with full
/// column rank.
fn solve_unique(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let cols = a[0].len();
    let mut rows: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(r, v)| r.iter().cloned().chain([v.clone()]).collect())
        .collect();
    let mut r = 0;
    for c in 0..cols {
        let p = (r..rows.len()).find(|&i| !rows[i][c].is_zero())?;
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for j in c..=cols {
            rows[r][j] = rows[r][j].clone() / &pivot;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let k = rows[i][c].clone();
                for j in c..=cols {
                    let t = rows[r][j].clone() * &k;
                    rows[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    Some(rows[..cols].iter().map(|row| row[cols].clone()).collect())
}

/// Möbius inversion straight from the definition.
pub fn mobius_degree(f: &BooleanFunction) -> usize {
    let n = f.arity();
    (0..1u32 << n)
        .filter(|&s| {
            let c: i64 = (0..1u32 << n)
                .filter(|&t| t & s == t)
                .map(|t| {
                    let sign = if (s.count_ones() - t.count_ones()) % 2 == 0 { 1 } else { -1 };
                    sign * f.value(t) as i64
                })
                .sum();
            c != 0
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Is there a degree-`d` polynomial vanishing on `f⁻¹(0)` and nonzero on
/// `f⁻¹(1)`? By the avoidance combination this holds iff every one-point
/// `x` raises the rank of the zero-set evaluation matrix.
pub fn ndeg_feasible(f: &BooleanFunction, d: usize) -> bool {
    let n = f.arity();
    let ms = monomials(n, d);
    let row = |x: u32| ms.iter().map(|&m| if chi(m, x) { q(1) } else { q(0) }).collect::<Vec<_>>();
    let zeros: Vec<Vec<Rational>> = f.level(false).into_iter().map(row).collect();
    let base = if zeros.is_empty() { 0 } else { rank(zeros.clone()) };
    f.level(true).into_iter().all(|x| {
        let mut rows = zeros.clone();
        rows.push(row(x));
        rank(rows) > base
    })
}

/// Is there a degree-`d` polynomial with `p(x) ≥ 1` on `f⁻¹(0)` and
/// `p(x) ≤ -1` on `f⁻¹(1)`? Decided through the Farkas alternative: the
/// system is infeasible iff `{y ≥ 0, Σ y = 1, Σ y_x σ(x) χ_S(x) = 0}` is
/// nonempty, and that polytope is nonempty iff it has a vertex. Vertices
/// are enumerated as unique basic solutions over every support set.
pub fn sdeg_feasible(f: &BooleanFunction, d: usize) -> bool {
    let n = f.arity();
    let ms = monomials(n, d);
    let points: Vec<u32> = (0..1u32 << n).collect();
    let sigma = |x: u32| if f.value(x) { q(-1) } else { q(1) };
    for support in 1u32..1 << points.len() {
        let cols: Vec<u32> = points.iter().copied().filter(|&x| support >> x & 1 == 1).collect();
        let mut a: Vec<Vec<Rational>> = ms
            .iter()
            .map(|&m| {
                cols.iter()
                    .map(|&x| if chi(m, x) { sigma(x) } else { q(0) })
                    .collect()
            })
            .collect();
        a.push(vec![q(1); cols.len()]);
        let mut b = vec![q(0); ms.len()];
        b.push(q(1));
        if let Some(y) = solve_unique(&a, &b) {
            if y.iter().all(|v| !v.is_negative()) {
                return false;
            }
        }
    }
    true
}

/// Does some degree-`d` polynomial agree with `pf` on its domain?
pub fn partial_feasible(pf: &PartialBooleanFunction, d: usize) -> bool {
    let ms = monomials(pf.arity(), d);
    let rows: Vec<Vec<Rational>> = pf
        .domain()
        .map(|x| ms.iter().map(|&m| if chi(m, x) { q(1) } else { q(0) }).collect())
        .collect();
    let aug: Vec<Vec<Rational>> = pf
        .entries()
        .zip(&rows)
        .map(|((_, v), r)| r.iter().cloned().chain([q(v as i64)]).collect())
        .collect();
    rank(rows) == rank(aug)
}

/// Decision-tree depth by unmemoized recursion over restrictions.
pub fn dtree_depth(n: usize, table: &[bool]) -> usize {
    if table.iter().all(|&v| v == table[0]) {
        return 0;
    }
    (0..n)
        .map(|i| {
            // dropping bit i keeps the remaining points in mask order
            let half = |b: bool| -> Vec<bool> {
                (0..table.len())
                    .filter(|&x| (x >> i & 1 == 1) == b)
                    .map(|x| table[x])
                    .collect()
            };
            1 + dtree_depth(n - 1, &half(false)).max(dtree_depth(n - 1, &half(true)))
        })
        .min()
        .expect("nonconstant table has a variable")
}

/// Block sensitivity at `x` by trying every family of disjoint blocks.
pub fn bs_brute(f: &BooleanFunction, x: u32) -> usize {
    let n = f.arity();
    let sensitive: Vec<u32> = (1..1u32 << n).filter(|&b| f.value(x ^ b) != f.value(x)).collect();
    fn go(blocks: &[u32], used: u32) -> usize {
        blocks
            .iter()
            .enumerate()
            .filter(|(_, &b)| b & used == 0)
            .map(|(k, &b)| 1 + go(&blocks[k + 1..], used | b))
            .max()
            .unwrap_or(0)
    }
    go(&sensitive, 0)
}

/// Exact `Pr_x[f(x) ≠ f(x ⊕ e_i)]`.
pub fn influence_brute(f: &BooleanFunction, i: usize) -> Rational {
    let n = f.arity();
    let flips = (0..1u32 << n).filter(|&x| f.value(x) != f.value(x ^ (1 << i))).count();
    Rational::new(BigInt::from(flips), BigInt::one() << n)
}

//! Combinatorial measures: block sensitivity, influence and the exact
//! decision-tree complexity.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::Serialize;

use super::BooleanFunction;
use crate::cube::{self, Assignment, Point};
use crate::error::{Error, Result};
use crate::poly::Rational;

/// Pairwise-disjoint sensitive blocks of `f` at `base`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockPacking {
    pub base: Point,
    pub blocks: Vec<u32>,
}

impl BlockPacking {
    pub fn size(&self) -> usize {
        self.blocks.len()
    }

    /// Checks disjointness and sensitivity of every block.
    pub fn is_valid_for(&self, f: &BooleanFunction) -> bool {
        let mut used = 0u32;
        for &b in &self.blocks {
            if b == 0 || b & used != 0 || f.value(self.base ^ b) == f.value(self.base) {
                return false;
            }
            used |= b;
        }
        true
    }
}

/// Exact `bs_x(f)` with a maximum packing as witness.
pub fn block_sensitivity_at(f: &BooleanFunction, x: &[bool]) -> Result<BlockPacking> {
    if x.len() != f.arity() {
        return Err(Error::ArityMismatch {
            expected: f.arity(),
            found: x.len(),
        });
    }
    Ok(block_sensitivity_at_point(f, cube::from_bits(x)))
}

/// As [`block_sensitivity_at`], for a point mask.
///
/// Dynamic program over subsets of `[n]`: `best[U]` is the largest packing
/// of sensitive blocks inside `U`; the lowest variable of `U` is either
/// unused or lies in the block chosen for it. Runs in `O(3^n)`.
pub fn block_sensitivity_at_point(f: &BooleanFunction, x: Point) -> BlockPacking {
    let n = f.arity();
    let full = cube::size(n);
    let fx = f.value(x);
    let mut best = vec![0u8; full];
    let mut choice = vec![0u32; full];
    for u in 1..full as u32 {
        let low = u & u.wrapping_neg();
        let rest = u ^ low;
        let mut b = best[rest as usize];
        let mut c = 0;
        for sub in cube::submasks(rest) {
            let block = sub | low;
            if f.value(x ^ block) != fx {
                let cand = 1 + best[(u ^ block) as usize];
                if cand > b {
                    b = cand;
                    c = block;
                }
            }
        }
        best[u as usize] = b;
        choice[u as usize] = c;
    }
    let mut blocks = Vec::new();
    let mut u = (full - 1) as u32;
    while u != 0 {
        let c = choice[u as usize];
        if c == 0 {
            u &= u - 1;
        } else {
            blocks.push(c);
            u ^= c;
        }
    }
    blocks.sort_by_key(|&b| crate::poly::Monomial(b));
    BlockPacking { base: x, blocks }
}

/// `min_{x ∈ f⁻¹(b)} bs_x(f)`; an error if the level is empty.
pub fn min_block_sensitivity(f: &BooleanFunction, b: bool) -> Result<usize> {
    f.level(b)
        .into_iter()
        .map(|x| block_sensitivity_at_point(f, x).size())
        .min()
        .ok_or(Error::EmptyLevel(b))
}

/// `min_x bs_x(f)` over the whole cube.
pub fn min_block_sensitivity_overall(f: &BooleanFunction) -> usize {
    cube::points(f.arity())
        .map(|x| block_sensitivity_at_point(f, x).size())
        .min()
        .unwrap_or(0)
}

/// `Inf_i[f] = Pr_x[f(x) ≠ f(x^i)]` as an exact fraction.
pub fn influence(f: &BooleanFunction, i: usize) -> Result<Rational> {
    if i >= f.arity() {
        return Err(Error::IndexOutOfRange {
            index: i,
            arity: f.arity(),
        });
    }
    let count = cube::points(f.arity())
        .filter(|&x| f.value(x) != f.value(x ^ (1 << i)))
        .count();
    Ok(Rational::new(
        BigInt::from(count),
        BigInt::from(cube::size(f.arity())),
    ))
}

pub fn total_influence(f: &BooleanFunction) -> Rational {
    (0..f.arity())
        .map(|i| influence(f, i).expect("index in range"))
        .sum()
}

/// Exact `D(f)`: `0` for constants, else `1 + min_i max(D(f|x_i=0), D(f|x_i=1))`,
/// memoized on restricted truth tables.
pub fn decision_tree_complexity(f: &BooleanFunction) -> usize {
    let mut memo = HashMap::new();
    dtc(f, &mut memo)
}

fn dtc(f: &BooleanFunction, memo: &mut HashMap<BooleanFunction, usize>) -> usize {
    if f.is_constant() {
        return 0;
    }
    if let Some(&d) = memo.get(f) {
        return d;
    }
    let n = f.arity();
    let mut best = usize::MAX;
    for i in 0..n {
        let mut worst = 0;
        for b in [false, true] {
            let a = Assignment::new(n, &[(i, b)]).expect("index in range");
            let r = f.restrict(&a).expect("index in range");
            worst = worst.max(dtc(&r, memo));
            if worst + 1 >= best {
                break;
            }
        }
        best = best.min(1 + worst);
    }
    memo.insert(f.clone(), best);
    best
}

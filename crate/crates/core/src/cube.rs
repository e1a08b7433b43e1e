//! Points of the Boolean cube `{0,1}^n`.
//!
//! A point is a `u32` mask whose bit `i` holds `x_{i+1}`. In text a point is
//! written as `n` characters, the `i`-th character being `x_{i+1}`, so the
//! mask `0b0011` on four variables reads `1100`.

use crate::error::{Error, Result};

pub type Point = u32;

/// Number of points of the cube of dimension `n`.
pub fn size(n: usize) -> usize {
    1usize << n
}

/// All points in index order.
pub fn points(n: usize) -> impl Iterator<Item = Point> + Clone {
    0..(1u32 << n)
}

pub fn weight(x: Point) -> u32 {
    x.count_ones()
}

pub fn bit(x: Point, i: usize) -> bool {
    (x >> i) & 1 == 1
}

pub fn from_bits(bits: &[bool]) -> Point {
    bits.iter()
        .enumerate()
        .fold(0, |acc, (i, &b)| if b { acc | (1 << i) } else { acc })
}

pub fn to_bits(x: Point, n: usize) -> Vec<bool> {
    (0..n).map(|i| bit(x, i)).collect()
}

pub fn format(x: Point, n: usize) -> String {
    (0..n).map(|i| if bit(x, i) { '1' } else { '0' }).collect()
}

pub fn parse(s: &str) -> Result<(Point, usize)> {
    let s = s.trim();
    if s.is_empty() || s.len() > crate::limits::MAX_ARITY {
        return Err(Error::Parse(format!("bad point '{s}'")));
    }
    let mut x = 0;
    for (i, c) in s.chars().enumerate() {
        match c {
            '0' => {}
            '1' => x |= 1 << i,
            _ => return Err(Error::Parse(format!("bad point '{s}'"))),
        }
    }
    Ok((x, s.len()))
}

/// Iterates over all submasks of `mask`, including `0` and `mask` itself.
pub fn submasks(mask: u32) -> impl Iterator<Item = u32> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 { None } else { Some((cur - 1) & mask) };
        Some(cur)
    })
}

/// Packs the bits of `x` that lie outside `removed` into consecutive low bits.
pub fn compress(x: u32, removed: u32, n: usize) -> u32 {
    let mut out = 0;
    let mut j = 0;
    for i in 0..n {
        if removed >> i & 1 == 1 {
            continue;
        }
        if x >> i & 1 == 1 {
            out |= 1 << j;
        }
        j += 1;
    }
    out
}

/// Inverse of [`compress`]: spreads the low bits of `y` over the positions
/// outside `removed`, then ors in `fixed`.
pub fn expand(y: u32, removed: u32, fixed: u32, n: usize) -> u32 {
    let mut out = fixed;
    let mut j = 0;
    for i in 0..n {
        if removed >> i & 1 == 1 {
            continue;
        }
        if y >> j & 1 == 1 {
            out |= 1 << i;
        }
        j += 1;
    }
    out
}

/// A partial assignment of variables, stored as (assigned mask, values mask).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Assignment {
    pub assigned: u32,
    pub values: u32,
}

impl Assignment {
    /// Builds an assignment from `(variable, bit)` pairs (0-based variables).
    pub fn new(n: usize, pairs: &[(usize, bool)]) -> Result<Self> {
        let mut a = Assignment::default();
        for &(i, b) in pairs {
            if i >= n {
                return Err(Error::IndexOutOfRange { index: i, arity: n });
            }
            if a.assigned >> i & 1 == 1 && bit(a.values, i) != b {
                return Err(Error::InvalidArgument(format!(
                    "x{} assigned both values",
                    i + 1
                )));
            }
            a.assigned |= 1 << i;
            if b {
                a.values |= 1 << i;
            }
        }
        Ok(a)
    }

    pub fn len(&self) -> usize {
        self.assigned.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.assigned == 0
    }
}

use std::collections::BTreeMap;
use std::fmt;

use crate::cube::{self, Assignment, Point};
use crate::error::{Error, Result};
use crate::limits::MAX_ARITY;
use crate::poly::{MultilinearPoly, Rational};

/// A total function `{0,1}^n → {0,1}` stored as its truth table. Entry `k`
/// is `f(x)` for the point whose mask is `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BooleanFunction {
    arity: usize,
    table: Vec<bool>,
}

impl BooleanFunction {
    pub fn new(arity: usize, table: Vec<bool>) -> Result<Self> {
        if arity > MAX_ARITY {
            return Err(Error::InvalidArgument(format!("arity {arity} too large")));
        }
        if table.len() != cube::size(arity) {
            return Err(Error::ArityMismatch {
                expected: cube::size(arity),
                found: table.len(),
            });
        }
        Ok(BooleanFunction { arity, table })
    }

    pub fn from_fn(arity: usize, f: impl Fn(Point) -> bool) -> Result<Self> {
        if arity > MAX_ARITY {
            return Err(Error::InvalidArgument(format!("arity {arity} too large")));
        }
        Ok(BooleanFunction {
            arity,
            table: cube::points(arity).map(f).collect(),
        })
    }

    pub fn constant(arity: usize, value: bool) -> Result<Self> {
        Self::from_fn(arity, |_| value)
    }

    /// Builds the `index`-th function of arity `n` in enumeration order: bit
    /// `k` of `index` is the table entry at point `k`. Requires `n ≤ 6`.
    pub fn from_index(arity: usize, index: u64) -> Result<Self> {
        if arity > 6 {
            return Err(Error::InvalidArgument(format!(
                "table index needs arity ≤ 6, got {arity}"
            )));
        }
        Self::from_fn(arity, |x| index >> x & 1 == 1)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn table(&self) -> &[bool] {
        &self.table
    }

    pub fn value(&self, x: Point) -> bool {
        self.table[x as usize]
    }

    pub fn evaluate(&self, x: &[bool]) -> Result<bool> {
        if x.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: x.len(),
            });
        }
        Ok(self.value(cube::from_bits(x)))
    }

    /// `Some(b)` if the function is constantly `b`.
    pub fn constant_value(&self) -> Option<bool> {
        let first = self.table[0];
        self.table.iter().all(|&v| v == first).then_some(first)
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    /// The points mapped to `b`, in index order.
    pub fn level(&self, b: bool) -> Vec<Point> {
        cube::points(self.arity)
            .filter(|&x| self.value(x) == b)
            .collect()
    }

    pub fn count_ones(&self) -> usize {
        self.table.iter().filter(|&&v| v).count()
    }

    pub fn negate(&self) -> Self {
        BooleanFunction {
            arity: self.arity,
            table: self.table.iter().map(|&v| !v).collect(),
        }
    }

    /// Fixes the assigned variables; the remaining ones are renumbered in order.
    pub fn restrict(&self, a: &Assignment) -> Result<Self> {
        if self.arity < 32 && a.assigned >> self.arity != 0 {
            return Err(Error::IndexOutOfRange {
                index: 31 - a.assigned.leading_zeros() as usize,
                arity: self.arity,
            });
        }
        let arity = self.arity - a.len();
        Ok(BooleanFunction {
            arity,
            table: cube::points(arity)
                .map(|y| self.value(cube::expand(y, a.assigned, a.values, self.arity)))
                .collect(),
        })
    }

    pub fn depends_on(&self, i: usize) -> Result<bool> {
        if i >= self.arity {
            return Err(Error::IndexOutOfRange {
                index: i,
                arity: self.arity,
            });
        }
        Ok(cube::points(self.arity).any(|x| self.value(x) != self.value(x ^ (1 << i))))
    }

    /// Variables the function depends on (0-based).
    pub fn relevant_variables(&self) -> Vec<usize> {
        (0..self.arity)
            .filter(|&i| self.depends_on(i).unwrap_or(false))
            .collect()
    }

    /// Table as a string of `0`/`1` characters in index order.
    pub fn table_string(&self) -> String {
        self.table.iter().map(|&v| if v { '1' } else { '0' }).collect()
    }

    /// The unique multilinear polynomial agreeing with the function.
    pub fn multilinear(&self) -> MultilinearPoly {
        let values: Vec<Rational> = self
            .table
            .iter()
            .map(|&v| crate::poly::int(v as i64))
            .collect();
        MultilinearPoly::interpolate(self.arity, &values).expect("table length is 2^n")
    }
}

impl fmt::Display for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {}", self.arity, self.table_string())
    }
}

/// A function defined on a nonempty subset `D` of the cube.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialBooleanFunction {
    arity: usize,
    values: BTreeMap<Point, bool>,
}

impl PartialBooleanFunction {
    pub fn new(arity: usize, values: BTreeMap<Point, bool>) -> Result<Self> {
        if arity > MAX_ARITY {
            return Err(Error::InvalidArgument(format!("arity {arity} too large")));
        }
        if values.is_empty() {
            return Err(Error::InvalidArgument("empty domain".into()));
        }
        if let Some(&x) = values.keys().find(|&&x| arity < 32 && x >> arity != 0) {
            return Err(Error::InvalidArgument(format!(
                "point {x:#b} outside the cube of dimension {arity}"
            )));
        }
        Ok(PartialBooleanFunction { arity, values })
    }

    pub fn from_total(f: &BooleanFunction) -> Self {
        PartialBooleanFunction {
            arity: f.arity(),
            values: cube::points(f.arity()).map(|x| (x, f.value(x))).collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn domain(&self) -> impl Iterator<Item = Point> + '_ {
        self.values.keys().copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = (Point, bool)> + '_ {
        self.values.iter().map(|(&x, &v)| (x, v))
    }

    pub fn get(&self, x: Point) -> Option<bool> {
        self.values.get(&x).copied()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

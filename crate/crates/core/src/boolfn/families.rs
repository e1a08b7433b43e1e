//! Named function families.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::{BooleanFunction, PartialBooleanFunction};
use crate::cube;
use crate::error::{Error, Result};
use crate::limits::MAX_ARITY;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    Zero,
    One,
    And,
    Or,
    Parity,
    Majority,
    Equator,
    Address,
    AndOr,
    Counterexample,
}

/// Parameters accepted by [`Family::build`]; which ones are required depends
/// on the family (see [`Family::schema`]).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FamilyParams {
    pub n: Option<usize>,
    pub m: Option<usize>,
}

impl FamilyParams {
    pub fn n(n: usize) -> Self {
        FamilyParams {
            n: Some(n),
            m: None,
        }
    }

    pub fn m(m: usize) -> Self {
        FamilyParams {
            n: None,
            m: Some(m),
        }
    }
}

/// A family member: most families are total, `COUNTEREXAMPLE` is partial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyFunction {
    Total(BooleanFunction),
    Partial(PartialBooleanFunction),
}

impl FamilyFunction {
    pub fn into_total(self) -> Result<BooleanFunction> {
        match self {
            FamilyFunction::Total(f) => Ok(f),
            FamilyFunction::Partial(_) => Err(Error::InvalidArgument(
                "family yields a partial function".into(),
            )),
        }
    }

    pub fn into_partial(self) -> PartialBooleanFunction {
        match self {
            FamilyFunction::Total(f) => PartialBooleanFunction::from_total(&f),
            FamilyFunction::Partial(p) => p,
        }
    }
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Zero,
        Family::One,
        Family::And,
        Family::Or,
        Family::Parity,
        Family::Majority,
        Family::Equator,
        Family::Address,
        Family::AndOr,
        Family::Counterexample,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Zero => "zero",
            Family::One => "one",
            Family::And => "and",
            Family::Or => "or",
            Family::Parity => "parity",
            Family::Majority => "maj",
            Family::Equator => "equator",
            Family::Address => "address",
            Family::AndOr => "andor",
            Family::Counterexample => "counterexample",
        }
    }

    /// Human-readable parameter schema for `family --list`.
    pub fn schema(self) -> &'static str {
        match self {
            Family::Zero => "--n K (K >= 1): constant 0",
            Family::One => "--n K (K >= 1): constant 1",
            Family::And => "--n K (K >= 1): 1 iff all bits are 1",
            Family::Or => "--n K (K >= 1): 1 iff some bit is 1",
            Family::Parity => "--n K (K >= 1): 1 iff |x| is odd",
            Family::Majority => "--n K (K >= 1): 1 iff |x| > K/2",
            Family::Equator => "--n K (K even, >= 2): 0 iff |x| = K/2",
            Family::Address => {
                "--n K (K = k + 2^k, k >= 1): x1..xk address one of the 2^k target bits x(k+1)..xK"
            }
            Family::AndOr => "--m M (M >= 1): AND of M ORs over consecutive blocks of M bits (M^2 vars)",
            Family::Counterexample => {
                "--n K (K >= 1): partial function on 2K vars; 0 where x1+..+xK = 0, 1 where the total weight is K+1"
            }
        }
    }

    pub fn build(self, params: FamilyParams) -> Result<FamilyFunction> {
        let need_n = || {
            params
                .n
                .filter(|&n| n >= 1)
                .ok_or_else(|| Error::InvalidFamily(format!("{} requires --n >= 1", self.name())))
        };
        let total = |n: usize, f: &dyn Fn(u32) -> bool| -> Result<FamilyFunction> {
            if n > MAX_ARITY {
                return Err(Error::InvalidFamily(format!("n = {n} too large")));
            }
            Ok(FamilyFunction::Total(BooleanFunction::from_fn(n, f)?))
        };
        match self {
            Family::Zero => total(need_n()?, &|_| false),
            Family::One => total(need_n()?, &|_| true),
            Family::And => {
                let n = need_n()?;
                total(n, &|x| x.count_ones() as usize == n)
            }
            Family::Or => total(need_n()?, &|x| x != 0),
            Family::Parity => total(need_n()?, &|x| x.count_ones() % 2 == 1),
            Family::Majority => {
                let n = need_n()?;
                total(n, &|x| 2 * x.count_ones() as usize > n)
            }
            Family::Equator => {
                let n = need_n()?;
                if n % 2 != 0 {
                    return Err(Error::InvalidFamily("equator requires even n".into()));
                }
                total(n, &|x| 2 * x.count_ones() as usize != n)
            }
            Family::Address => {
                let n = need_n()?;
                let k = (1..=4)
                    .find(|&k| k + (1 << k) == n)
                    .ok_or_else(|| Error::InvalidFamily(format!("address requires n = k + 2^k, got {n}")))?;
                total(n, &|x| {
                    let addr = x & ((1 << k) - 1);
                    x >> (k as u32 + addr) & 1 == 1
                })
            }
            Family::AndOr => {
                let m = params
                    .m
                    .filter(|&m| m >= 1)
                    .ok_or_else(|| Error::InvalidFamily("andor requires --m >= 1".into()))?;
                if m * m > MAX_ARITY {
                    return Err(Error::InvalidFamily(format!("m = {m} too large")));
                }
                let block = (1u32 << m) - 1;
                total(m * m, &|x| (0..m).all(|j| x >> (j * m) & block != 0))
            }
            Family::Counterexample => {
                let n = need_n()?;
                if 2 * n > MAX_ARITY {
                    return Err(Error::InvalidFamily(format!("n = {n} too large")));
                }
                Ok(FamilyFunction::Partial(counterexample(n)?))
            }
        }
    }
}

/// Partial function on variables `x1..xn, y1..yn` (the `y`s are bits
/// `n..2n`): `0` on the zeros of `g1 = Σ x_i`, `1` on the zeros of
/// `g2 = Σ x_i + Σ y_i - (n+1)`.
fn counterexample(n: usize) -> Result<PartialBooleanFunction> {
    let xmask = (1u32 << n) - 1;
    let mut values = BTreeMap::new();
    for p in cube::points(2 * n) {
        if p & xmask == 0 {
            values.insert(p, false);
        } else if p.count_ones() as usize == n + 1 {
            values.insert(p, true);
        }
    }
    PartialBooleanFunction::new(2 * n, values)
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let alias = match lower.as_str() {
            "majority" => "maj",
            "const0" | "constant0" => "zero",
            "const1" | "constant1" => "one",
            "and-or" | "and_or" => "andor",
            other => other,
        };
        Family::ALL
            .into_iter()
            .find(|f| f.name() == alias)
            .ok_or_else(|| Error::InvalidFamily(format!("unknown family '{s}'")))
    }
}

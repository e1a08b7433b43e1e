use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::MultilinearPoly;

/// Which of the two nondeterministic witnesses a hitting set was built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// The witness for `f`.
    P,
    /// The witness for `¬f`.
    Q,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::P => "p",
            Side::Q => "q",
        })
    }
}

/// A set of variables meeting every maxonomial of its source polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HittingSet {
    /// Bit `i` set iff `x_{i+1}` is in the set.
    pub variables: u32,
    pub source: Side,
    /// Number of disjoint maxonomials whose union this is.
    pub blocks: usize,
}

impl HittingSet {
    pub fn size(&self) -> usize {
        self.variables.count_ones() as usize
    }

    /// 0-based indices in increasing order.
    pub fn indices(&self) -> Vec<usize> {
        (0..32).filter(|&i| self.variables >> i & 1 == 1).collect()
    }

    pub fn hits(&self, p: &MultilinearPoly) -> bool {
        p.maxonomials()
            .map(|ms| ms.iter().all(|&m| m & self.variables != 0))
            .unwrap_or(false)
    }
}

fn require_nonconstant(p: &MultilinearPoly) -> Result<Vec<u32>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == 0 {
        return Err(Error::ConstantPolynomial);
    }
    p.maxonomials()
}

/// Greedily picks maxonomials in monomial order, keeping each one disjoint
/// from those already chosen. The result cannot be extended.
pub fn greedy_disjoint_maxonomials(p: &MultilinearPoly) -> Result<Vec<u32>> {
    let maxonomials = require_nonconstant(p)?;
    let mut chosen = Vec::new();
    let mut union = 0u32;
    for &m in &maxonomials {
        if m & union == 0 {
            chosen.push(m);
            union |= m;
        }
    }
    assert!(
        maxonomials.iter().all(|&m| m & union != 0),
        "greedy collection is not maximal"
    );
    Ok(chosen)
}

/// Union of [`greedy_disjoint_maxonomials`]. Since the collection is maximal,
/// every maxonomial meets it.
pub fn hitting_set(p: &MultilinearPoly, source: Side) -> Result<HittingSet> {
    let blocks = greedy_disjoint_maxonomials(p)?;
    let h = HittingSet {
        variables: blocks.iter().fold(0, |acc, m| acc | m),
        source,
        blocks: blocks.len(),
    };
    assert!(h.hits(p));
    assert!(h.size() <= p.degree() * h.blocks);
    Ok(h)
}

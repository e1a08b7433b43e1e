use std::fmt;
use std::str::FromStr;

use crate::boolfn::BooleanFunction;
use crate::cube::{self, Point};
use crate::error::{Error, Result};

/// A deterministic query tree. Variables are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum DecisionTree {
    Leaf(bool),
    Query {
        var: usize,
        zero: Box<DecisionTree>,
        one: Box<DecisionTree>,
    },
}

impl DecisionTree {
    pub fn query(var: usize, zero: DecisionTree, one: DecisionTree) -> Self {
        DecisionTree::Query {
            var,
            zero: Box::new(zero),
            one: Box::new(one),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            DecisionTree::Leaf(_) => 0,
            DecisionTree::Query { zero, one, .. } => 1 + zero.depth().max(one.depth()),
        }
    }

    pub fn eval(&self, x: Point) -> bool {
        match self {
            DecisionTree::Leaf(b) => *b,
            DecisionTree::Query { var, zero, one } => {
                if cube::bit(x, *var) {
                    one.eval(x)
                } else {
                    zero.eval(x)
                }
            }
        }
    }

    /// Evaluates on `x`; every queried index must be inside `x`.
    pub fn evaluate(&self, x: &[bool]) -> Result<bool> {
        if let Some(v) = self.max_var() {
            if v >= x.len() {
                return Err(Error::ArityMismatch {
                    expected: v + 1,
                    found: x.len(),
                });
            }
        }
        Ok(self.eval(cube::from_bits(x)))
    }

    pub fn max_var(&self) -> Option<usize> {
        match self {
            DecisionTree::Leaf(_) => None,
            DecisionTree::Query { var, zero, one } => Some(
                (*var)
                    .max(zero.max_var().unwrap_or(0))
                    .max(one.max_var().unwrap_or(0)),
            ),
        }
    }

    /// No variable repeats along a root-to-leaf path and all indices are `< n`.
    pub fn is_well_formed(&self, n: usize) -> bool {
        fn go(t: &DecisionTree, n: usize, seen: u64) -> bool {
            match t {
                DecisionTree::Leaf(_) => true,
                DecisionTree::Query { var, zero, one } => {
                    *var < n
                        && *var < 64
                        && seen >> var & 1 == 0
                        && go(zero, n, seen | 1 << var)
                        && go(one, n, seen | 1 << var)
                }
            }
        }
        go(self, n, 0)
    }

    /// Exhaustive comparison with `f`; returns the first disagreeing point.
    pub fn verify(&self, f: &BooleanFunction) -> TreeVerdict {
        if !self.is_well_formed(f.arity()) {
            return TreeVerdict::Malformed;
        }
        match cube::points(f.arity()).find(|&x| self.eval(x) != f.value(x)) {
            Some(x) => TreeVerdict::Mismatch(cube::format(x, f.arity())),
            None => TreeVerdict::Pass,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeVerdict {
    Pass,
    Malformed,
    Mismatch(String),
}

impl fmt::Display for DecisionTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecisionTree::Leaf(b) => write!(f, "(leaf {})", *b as u8),
            DecisionTree::Query { var, zero, one } => {
                write!(f, "(x{} {} {})", var + 1, zero, one)
            }
        }
    }
}

impl FromStr for DecisionTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<String> = s
            .replace('(', " ( ")
            .replace(')', " ) ")
            .split_whitespace()
            .map(str::to_string)
            .collect();
        let mut pos = 0;
        let t = parse_node(&tokens, &mut pos)?;
        if pos != tokens.len() {
            return Err(Error::Parse("trailing tokens after tree".into()));
        }
        Ok(t)
    }
}

fn parse_node(tokens: &[String], pos: &mut usize) -> Result<DecisionTree> {
    let mut next = || {
        let t = tokens
            .get(*pos)
            .cloned()
            .ok_or_else(|| Error::Parse("unexpected end of tree".into()));
        *pos += 1;
        t
    };
    if next()? != "(" {
        return Err(Error::Parse("expected '('".into()));
    }
    let head = next()?;
    let node = if head == "leaf" {
        match next()?.as_str() {
            "0" => DecisionTree::Leaf(false),
            "1" => DecisionTree::Leaf(true),
            other => return Err(Error::Parse(format!("bad leaf value '{other}'"))),
        }
    } else if let Some(idx) = head.strip_prefix('x') {
        let i: usize = idx
            .parse()
            .map_err(|_| Error::Parse(format!("bad variable '{head}'")))?;
        if i == 0 {
            return Err(Error::Parse("variables are 1-based".into()));
        }
        let zero = parse_node(tokens, pos)?;
        let one = parse_node(tokens, pos)?;
        DecisionTree::query(i - 1, zero, one)
    } else {
        return Err(Error::Parse(format!("unexpected token '{head}'")));
    };
    if tokens.get(*pos).map(String::as_str) != Some(")") {
        return Err(Error::Parse("expected ')'".into()));
    }
    *pos += 1;
    Ok(node)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leaf_basics() {
        let t = DecisionTree::Leaf(true);
        assert!(t.evaluate(&[false, true]).unwrap());
        assert_eq!(t.depth(), 0);
    }

    #[test]
    fn text_round_trip() {
        let s = "(x3 (leaf 0) (x1 (leaf 0) (leaf 1)))";
        let t: DecisionTree = s.parse().unwrap();
        assert_eq!(t.to_string(), s);
        assert_eq!(t.depth(), 2);
        // x1 AND x3
        let f = BooleanFunction::from_fn(3, |x| x & 0b101 == 0b101).unwrap();
        assert_eq!(t.verify(&f), TreeVerdict::Pass);
        assert!(t.evaluate(&[true, false]).is_err());
    }

    #[test]
    fn malformed_trees() {
        let rep: DecisionTree = "(x1 (x1 (leaf 0) (leaf 1)) (leaf 1))".parse().unwrap();
        assert!(!rep.is_well_formed(2));
        let f = BooleanFunction::constant(2, false).unwrap();
        assert_eq!(rep.verify(&f), TreeVerdict::Malformed);
        for bad in ["", "(leaf 2)", "(x0 (leaf 0) (leaf 1))", "(x1 (leaf 0))", "(leaf 0) x"] {
            assert!(bad.parse::<DecisionTree>().is_err(), "{bad}");
        }
    }

    #[test]
    fn mismatch_reported() {
        let t = DecisionTree::Leaf(false);
        let f = BooleanFunction::from_fn(2, |x| x == 3).unwrap();
        assert_eq!(t.verify(&f), TreeVerdict::Mismatch("11".into()));
    }
}

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::cube::{self, Point};
use crate::error::{Error, Result};
use crate::poly::{Monomial, MultilinearPoly, Rational, UnivariatePoly};

/// A polynomial in the variables not yet symmetrized (kept under their
/// original indices) and one fresh variable per symmetrized block.
///
/// Fresh variable `j` counts the ones inside `blocks[j]`. Names are `y` for
/// a single fresh variable, `s` and `t` for two, `y1, y2, …` beyond that.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetrizedPoly {
    arity: usize,
    blocks: Vec<u32>,
    /// `(mask of original variables, powers of the fresh variables)`.
    terms: BTreeMap<(u32, Vec<u32>), Rational>,
}

impl SymmetrizedPoly {
    pub fn from_multilinear(p: &MultilinearPoly) -> Self {
        SymmetrizedPoly {
            arity: p.arity(),
            blocks: Vec::new(),
            terms: p.terms().map(|(m, c)| ((m, Vec::new()), c.clone())).collect(),
        }
    }

    /// Arity of the source polynomial.
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Symmetrized blocks, in the order they were introduced.
    pub fn blocks(&self) -> &[u32] {
        &self.blocks
    }

    /// Original variables not inside any block.
    pub fn remaining(&self) -> u32 {
        let all = if self.arity >= 32 { u32::MAX } else { (1u32 << self.arity) - 1 };
        self.blocks.iter().fold(all, |acc, b| acc & !b)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms
            .keys()
            .map(|(m, pw)| m.count_ones() as usize + pw.iter().sum::<u32>() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn fresh_names(&self) -> Vec<String> {
        match self.blocks.len() {
            1 => vec!["y".into()],
            2 => vec!["s".into(), "t".into()],
            k => (1..=k).map(|j| format!("y{j}")).collect(),
        }
    }

    /// Value at `x` (only bits of [`Self::remaining`] are read) with the
    /// fresh variables set to `fresh`.
    pub fn eval(&self, x: Point, fresh: &[Rational]) -> Result<Rational> {
        if fresh.len() != self.blocks.len() {
            return Err(Error::ArityMismatch {
                expected: self.blocks.len(),
                found: fresh.len(),
            });
        }
        Ok(self
            .terms
            .iter()
            .filter(|((m, _), _)| m & !x == 0)
            .map(|((_, pw), c)| {
                pw.iter().zip(fresh).fold(c.clone(), |acc, (&k, v)| {
                    (0..k).fold(acc, |a, _| a * v)
                })
            })
            .sum())
    }

    /// The univariate polynomial when the only variable left is one fresh
    /// variable.
    pub fn to_univariate(&self) -> Option<UnivariatePoly> {
        if self.blocks.len() != 1 || self.terms.keys().any(|(m, _)| *m != 0) {
            return None;
        }
        let mut coefficients = vec![Rational::zero(); self.degree() + 1];
        for ((_, pw), c) in &self.terms {
            coefficients[pw[0] as usize] += c;
        }
        Some(UnivariatePoly::new(coefficients))
    }

    fn add_term(&mut self, key: (u32, Vec<u32>), c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
}

/// `i(i-1)⋯(i-d+1) / (m(m-1)⋯(m-d+1))` as a polynomial in `i`: the average of
/// a fixed size-`d` monomial over the weight-`i` points of an `m`-cube.
fn block_monomial(d: usize, m: usize) -> UnivariatePoly {
    let denom: Rational = (0..d)
        .map(|k| Rational::from_integer(((m - k) as i64).into()))
        .product();
    let ff = UnivariatePoly::falling_factorial(d);
    UnivariatePoly::new(ff.coefficients().iter().map(|c| c / &denom).collect())
}

/// Replaces each monomial's part inside `block` (of size `d`) by the
/// degree-`d` averaging polynomial in a new fresh variable that counts the
/// ones inside the block.
pub fn minsky_papert_symmetrize(p: &SymmetrizedPoly, block: u32) -> Result<SymmetrizedPoly> {
    if block == 0 {
        return Err(Error::InvalidArgument("empty block".into()));
    }
    let remaining = p.remaining();
    if block & !remaining != 0 {
        let i = (block & !remaining).trailing_zeros() as usize;
        return Err(if i >= p.arity {
            Error::IndexOutOfRange {
                index: i,
                arity: p.arity,
            }
        } else {
            Error::InvalidArgument(format!("x{} is already symmetrized", i + 1))
        });
    }
    let m = block.count_ones() as usize;
    let table: Vec<UnivariatePoly> = (0..=m).map(|d| block_monomial(d, m)).collect();
    let mut out = SymmetrizedPoly {
        arity: p.arity,
        blocks: p.blocks.iter().copied().chain([block]).collect(),
        terms: BTreeMap::new(),
    };
    for ((mask, powers), c) in &p.terms {
        let inner = table[(mask & block).count_ones() as usize].coefficients();
        for (k, a) in inner.iter().enumerate() {
            let mut pw = powers.clone();
            pw.push(k as u32);
            out.add_term((mask & !block, pw), c * a);
        }
    }
    debug_assert!(out.degree() <= p.degree());
    Ok(out)
}

/// Convenience form taking a multilinear polynomial.
pub fn minsky_papert(p: &MultilinearPoly, block: u32) -> Result<SymmetrizedPoly> {
    minsky_papert_symmetrize(&SymmetrizedPoly::from_multilinear(p), block)
}

/// Average of `p` over the points agreeing with `rest` outside `block` and
/// having exactly `i` ones inside it.
pub fn block_average(p: &MultilinearPoly, block: u32, i: usize, rest: Point) -> Rational {
    let base = rest & !block;
    let mut total = Rational::zero();
    let mut count = 0i64;
    for s in cube::submasks(block) {
        if s.count_ones() as usize == i {
            total += p.eval(base | s);
            count += 1;
        }
    }
    if count == 0 {
        return Rational::zero();
    }
    total / Rational::from_integer(count.into())
}

impl fmt::Display for SymmetrizedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.fresh_names();
        let mut keys: Vec<(&(u32, Vec<u32>), &Rational)> = self.terms.iter().collect();
        keys.sort_by(|((ma, pa), _), ((mb, pb), _)| {
            let da = ma.count_ones() + pa.iter().sum::<u32>();
            let db = mb.count_ones() + pb.iter().sum::<u32>();
            (da, pa, Monomial(*ma)).cmp(&(db, pb, Monomial(*mb)))
        });
        let terms = keys.into_iter().map(|((m, pw), c)| {
            let mut factors: Vec<String> = (0..32)
                .filter(|i| m >> i & 1 == 1)
                .map(|i| format!("x{}", i + 1))
                .collect();
            for (name, &k) in names.iter().zip(pw) {
                match k {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{k}")),
                }
            }
            (c.clone(), factors)
        });
        crate::poly::text::write_terms(f, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{frac, int};

    fn poly(s: &str) -> MultilinearPoly {
        s.parse().unwrap()
    }

    #[test]
    fn single_variable_full_block() {
        for n in 1..=4usize {
            let p = MultilinearPoly::var(n, 0).unwrap();
            let u = minsky_papert(&p, (1 << n) - 1).unwrap().to_univariate().unwrap();
            for i in 0..=n {
                assert_eq!(u.eval(&int(i as i64)), frac(i as i64, n as i64));
            }
        }
    }

    #[test]
    fn product_of_two() {
        let u = minsky_papert(&poly("x1 x2"), 0b11).unwrap().to_univariate().unwrap();
        assert_eq!(u.to_string(), "-1/2 y + 1/2 y^2");
        assert_eq!(u.eval(&int(2)), int(1));
        assert_eq!(u.eval(&int(1)), int(0));
    }

    #[test]
    fn partial_block_keeps_other_variables() {
        let p = poly("x1 x2 + x3");
        let s = minsky_papert(&p, 0b011).unwrap();
        assert_eq!(s.to_string(), "x3 - 1/2 y + 1/2 y^2");
        assert!(s.to_univariate().is_none());
        for i in 0..=2 {
            for rest in [0u32, 0b100] {
                assert_eq!(
                    s.eval(rest, &[int(i as i64)]).unwrap(),
                    block_average(&p, 0b011, i, rest)
                );
            }
        }
    }

    #[test]
    fn two_blocks_named_s_t() {
        let p = poly("x1 x3 + x2").with_arity(4).unwrap();
        let s = minsky_papert(&p, 0b011).unwrap();
        let st = minsky_papert_symmetrize(&s, 0b1100).unwrap();
        assert_eq!(st.fresh_names(), vec!["s", "t"]);
        assert_eq!(st.to_string(), "1/2 s + 1/4 s t");
        assert!(minsky_papert_symmetrize(&st, 0b0001).is_err());
    }

    #[test]
    fn bad_blocks() {
        let p = poly("x1");
        assert!(minsky_papert(&p, 0).is_err());
        assert!(matches!(
            minsky_papert(&p.with_arity(2).unwrap(), 0b100),
            Err(Error::IndexOutOfRange { .. })
        ));
    }
}

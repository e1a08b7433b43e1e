use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::block::{minsky_papert, minsky_papert_symmetrize, SymmetrizedPoly};
use crate::cube;
use crate::error::{Error, Result};
use crate::poly::{MultilinearPoly, Rational, UnivariatePoly};

/// `|{x : p(x) ≠ 0}| / 2^n`.
pub fn nonzero_probability(p: &MultilinearPoly) -> Rational {
    let n = p.arity();
    let count = p.values().iter().filter(|v| !v.is_zero()).count();
    Rational::new((count as i64).into(), (cube::size(n) as i64).into())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum MarkovVerdict {
    Pass,
    /// `P` leaves the value band at a grid point.
    HypothesisViolation { point: String, value: String },
    /// `|P'|` exceeds the bound at a grid point.
    BoundViolation {
        point: String,
        derivative: String,
        bound: String,
    },
}

/// Checks `P(x) ∈ [b1, b2]` and `|P'(x)| ≤ (b2-b1)/(a2-a1) · deg(P)²` at the
/// `grid` equally spaced rationals `a1 + k(a2-a1)/(grid-1)`.
///
/// Only grid points are examined, so a pass is a necessary condition.
pub fn markov_grid_check(
    p: &UnivariatePoly,
    interval: (Rational, Rational),
    bounds: (Rational, Rational),
    grid: usize,
) -> Result<MarkovVerdict> {
    let (a1, a2) = interval;
    let (b1, b2) = bounds;
    if a1 >= a2 {
        return Err(Error::InvalidArgument("interval needs a1 < a2".into()));
    }
    if b1 >= b2 {
        return Err(Error::InvalidArgument("bounds need b1 < b2".into()));
    }
    if grid < 2 {
        return Err(Error::InvalidArgument("grid size must be at least 2".into()));
    }
    let step = (&a2 - &a1) / Rational::from_integer(((grid - 1) as i64).into());
    let points: Vec<Rational> = (0..grid)
        .map(|k| &a1 + &step * Rational::from_integer((k as i64).into()))
        .collect();
    for x in &points {
        let v = p.eval(x);
        if v < b1 || v > b2 {
            return Ok(MarkovVerdict::HypothesisViolation {
                point: x.to_string(),
                value: v.to_string(),
            });
        }
    }
    let d = Rational::from_integer(((p.degree() * p.degree()) as i64).into());
    let bound = (&b2 - &b1) / (&a2 - &a1) * d;
    let dp = p.derivative();
    for x in &points {
        let v = dp.eval(x).abs();
        if v > bound {
            return Ok(MarkovVerdict::BoundViolation {
                point: x.to_string(),
                derivative: v.to_string(),
                bound: bound.to_string(),
            });
        }
    }
    Ok(MarkovVerdict::Pass)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ApproxVerdict {
    /// Hypotheses hold and `n ≤ 2 deg(p)²`.
    Pass { n: usize, degree: usize },
    /// Hypothesis `"i"`, `"ii"` or `"iii"` fails, at `point` when applicable.
    HypothesisViolation { hypothesis: String, point: String },
    /// Hypotheses hold but `n > 2 deg(p)²`.
    BoundViolation { n: usize, degree: usize },
}

/// Checks (i) `|p(x)| ≤ h` everywhere, (ii) `|p(0)| = h`, (iii)
/// `p(x) p(0) ≤ 0` at every weight-one `x`; when they hold, tests
/// `n ≤ 2 deg(p)²`.
pub fn corollary_approx_check(p: &MultilinearPoly, h: &Rational) -> Result<ApproxVerdict> {
    if !h.is_positive() {
        return Err(Error::InvalidArgument("h must be positive".into()));
    }
    let n = p.arity();
    let values = p.values();
    let violation = |hyp: &str, x: u32| ApproxVerdict::HypothesisViolation {
        hypothesis: hyp.into(),
        point: cube::format(x, n),
    };
    if let Some(x) = cube::points(n).find(|&x| values[x as usize].abs() > *h) {
        return Ok(violation("i", x));
    }
    let origin = &values[0];
    if origin.abs() != *h {
        return Ok(violation("ii", 0));
    }
    if let Some(i) = (0..n).find(|&i| (&values[1 << i] * origin).is_positive()) {
        return Ok(violation("iii", 1 << i));
    }
    let degree = p.degree();
    Ok(if n <= 2 * degree * degree {
        ApproxVerdict::Pass { n, degree }
    } else {
        ApproxVerdict::BoundViolation { n, degree }
    })
}

/// Outcome of symmetrizing an interpolant of the `2n`-variable
/// counterexample over its two halves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleCheck {
    /// `P(s, t)`: `s` counts ones among `x1..xn`, `t` among the rest.
    pub polynomial: SymmetrizedPoly,
    /// `P(0, t) = 0` for `t = 0..n`.
    pub zero_side: bool,
    /// `P(s, n+1-s) = 1` for `s = 1..n`.
    pub one_side: bool,
}

impl CounterexampleCheck {
    pub fn passed(&self) -> bool {
        self.zero_side && self.one_side
    }
}

/// Symmetrizes `interpolant` first over `x1..xn`, then over `x(n+1)..x2n`,
/// and evaluates on the two lines where the partial function is defined.
pub fn counterexample_symmetrization(n: usize, interpolant: &MultilinearPoly) -> Result<CounterexampleCheck> {
    if n == 0 || interpolant.arity() != 2 * n {
        return Err(Error::ArityMismatch {
            expected: 2 * n,
            found: interpolant.arity(),
        });
    }
    let low = (1u32 << n) - 1;
    let s = minsky_papert(interpolant, low)?;
    let st = minsky_papert_symmetrize(&s, low << n)?;
    let r = |k: usize| Rational::from_integer((k as i64).into());
    let mut zero_side = true;
    for t in 0..=n {
        zero_side &= st.eval(0, &[r(0), r(t)])?.is_zero();
    }
    let mut one_side = true;
    for s in 1..=n {
        one_side &= st.eval(0, &[r(s), r(n + 1 - s)])?.is_one();
    }
    Ok(CounterexampleCheck {
        polynomial: st,
        zero_side,
        one_side,
    })
}

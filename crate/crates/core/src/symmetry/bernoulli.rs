use num_traits::{One, Zero};

use crate::cube;
use crate::poly::{MultilinearPoly, Rational, UnivariatePoly};

/// Replaces every monomial `Π_{i∈S} X_i` by `Y^{|S|}`.
///
/// The result is the expectation of `p` when each bit is independently 1
/// with probability `y`.
pub fn bernoulli_symmetrize(p: &MultilinearPoly) -> UnivariatePoly {
    let mut coefficients = vec![Rational::zero(); p.degree() + 1];
    for (m, c) in p.terms() {
        coefficients[m.count_ones() as usize] += c;
    }
    UnivariatePoly::new(coefficients)
}

/// `Σ_x p(x) y^{|x|} (1-y)^{n-|x|}`, summed over the whole cube.
pub fn bernoulli_expectation(p: &MultilinearPoly, y: &Rational) -> Rational {
    let n = p.arity();
    let complement = Rational::one() - y;
    let pow = |base: &Rational, k: usize| (0..k).fold(Rational::one(), |acc, _| acc * base);
    let ys: Vec<Rational> = (0..=n).map(|k| pow(y, k)).collect();
    let cs: Vec<Rational> = (0..=n).map(|k| pow(&complement, k)).collect();
    p.values()
        .into_iter()
        .zip(cube::points(n))
        .filter(|(v, _)| !v.is_zero())
        .map(|(v, x)| {
            let w = x.count_ones() as usize;
            v * &ys[w] * &cs[n - w]
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{frac, int};

    fn poly(s: &str) -> MultilinearPoly {
        s.parse().unwrap()
    }

    #[test]
    fn substitution_examples() {
        assert_eq!(bernoulli_symmetrize(&poly("x1 x2")).to_string(), "y^2");
        assert_eq!(bernoulli_symmetrize(&poly("x1 + x2")).to_string(), "2 y");
        let parity = poly("x1 + x2 - 2 x1 x2");
        let sym = bernoulli_symmetrize(&parity);
        assert_eq!(sym.to_string(), "2 y - 2 y^2");
        assert_eq!(sym.eval(&frac(1, 2)), frac(1, 2));
        assert_eq!(bernoulli_expectation(&parity, &frac(1, 2)), frac(1, 2));
    }

    #[test]
    fn matches_expectation() {
        let p = poly("3 - x1 + 1/2 x2 x3 - 4 x1 x2 x3");
        let sym = bernoulli_symmetrize(&p);
        for y in [int(0), frac(1, 3), frac(1, 2), frac(2, 3), int(1)] {
            assert_eq!(sym.eval(&y), bernoulli_expectation(&p, &y));
        }
    }

    #[test]
    fn cancellation_lowers_degree() {
        let sym = bernoulli_symmetrize(&poly("x1 x2 - x2 x3"));
        assert!(sym.is_zero());
    }
}

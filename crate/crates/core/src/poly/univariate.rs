use std::fmt;

use num_traits::{One, Zero};

use super::Rational;

/// A polynomial in one variable; `coefficients[k]` multiplies `Y^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnivariatePoly {
    coefficients: Vec<Rational>,
}

impl UnivariatePoly {
    pub fn new(mut coefficients: Vec<Rational>) -> Self {
        while coefficients.last().is_some_and(|c| c.is_zero()) {
            coefficients.pop();
        }
        UnivariatePoly { coefficients }
    }

    pub fn zero() -> Self {
        UnivariatePoly {
            coefficients: Vec::new(),
        }
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn coefficient(&self, k: usize) -> Rational {
        self.coefficients
            .get(k)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Degree, with the zero polynomial reported as `0`.
    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    pub fn eval(&self, y: &Rational) -> Rational {
        self.coefficients
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * y + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coefficients
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer((k as i64).into()))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coefficients.len().max(other.coefficients.len());
        Self::new(
            (0..len)
                .map(|k| self.coefficient(k) + other.coefficient(k))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            for (j, b) in other.coefficients.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Falling factorial `Y (Y-1) ⋯ (Y-d+1)`.
    pub fn falling_factorial(d: usize) -> Self {
        (0..d).fold(Self::new(vec![Rational::one()]), |acc, k| {
            acc.mul(&Self::new(vec![
                -Rational::from_integer((k as i64).into()),
                Rational::one(),
            ]))
        })
    }

    /// Renders the polynomial using `var` as the variable name.
    pub fn display_with<'a>(&'a self, var: &'a str) -> impl fmt::Display + 'a {
        Named { poly: self, var }
    }
}

struct Named<'a> {
    poly: &'a UnivariatePoly,
    var: &'a str,
}

impl fmt::Display for Named<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .poly
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let factors = match k {
                    0 => vec![],
                    1 => vec![self.var.to_string()],
                    _ => vec![format!("{}^{}", self.var, k)],
                };
                (c.clone(), factors)
            });
        super::text::write_terms(f, terms)
    }
}

impl fmt::Display for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("y"))
    }
}

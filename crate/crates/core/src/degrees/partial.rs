use serde::Serialize;

use super::evaluation_matrix;
use crate::boolfn::PartialBooleanFunction;
use crate::poly::{int, monomials_up_to, MultilinearPoly, Rational};

/// Least degree of a polynomial agreeing with a partial function on its
/// domain, with one such interpolant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartialDegree {
    pub degree: usize,
    #[serde(serialize_with = "super::serialize_poly")]
    pub interpolant: MultilinearPoly,
}

/// Smallest `d` for which the system "monomials of size ≤ `d` evaluated on
/// the domain, equated to the values" is consistent. Consistency is monotone
/// in `d`, so the upward sweep is exact.
pub fn partial_degree(pf: &PartialBooleanFunction) -> PartialDegree {
    let n = pf.arity();
    let points: Vec<u32> = pf.domain().collect();
    let values: Vec<Rational> = pf.entries().map(|(_, v)| int(v as i64)).collect();
    for d in 0..=n {
        let monomials = monomials_up_to(n, d);
        let m = evaluation_matrix(&points, &monomials);
        if let Some(c) = m.solve_exact(&values).expect("one value per domain point") {
            let interpolant = MultilinearPoly::from_terms(n, monomials.into_iter().zip(c))
                .expect("monomials fit the arity");
            return PartialDegree {
                degree: d,
                interpolant,
            };
        }
    }
    unreachable!("the full interpolant has degree ≤ n")
}

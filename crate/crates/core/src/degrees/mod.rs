//! Degree measures with explicit witnesses.

mod ndeg;
mod nullstellensatz;
mod partial;
mod rdeg;
mod sdeg;

pub use ndeg::{
    avoidance_coefficients, avoidance_combine, is_nondeterministic_rep, ndeg, ndeg_basis_at,
    NdegWitness,
};
pub use nullstellensatz::{hypercube_nullstellensatz, NullstellensatzCertificate};
pub use partial::{partial_degree, PartialDegree};
pub use rdeg::{deg, rdeg, rdeg_from_witnesses, DegreeResult, RationalRepresentation, RdegResult};
pub use sdeg::{is_sign_rep, sdeg, sign_lp, sign_rep_at, SignWitness};

use num_traits::{One, Zero};

use crate::algebra::RationalMatrix;
use crate::cube::Point;
use crate::poly::{MultilinearPoly, Rational};

/// Rows: points; columns: monomials; entry 1 iff the monomial is contained
/// in the point's support.
pub fn evaluation_matrix(points: &[Point], monomials: &[u32]) -> RationalMatrix {
    let entries = points
        .iter()
        .flat_map(|&x| {
            monomials.iter().map(move |&m| {
                if m & !x == 0 {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
        })
        .collect();
    RationalMatrix::new(points.len(), monomials.len(), entries).expect("sizes match")
}

pub(crate) fn serialize_poly<S: serde::Serializer>(p: &MultilinearPoly, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(p)
}

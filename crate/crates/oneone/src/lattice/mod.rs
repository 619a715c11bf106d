//! Exact rational and projective-line arithmetic, Farey enumeration,
//! lattice-point predicates, and winding numbers of PL loops.
//!
//! Everything here is exact: no floating point anywhere. Coordinates are
//! `BigRational`, so intermediate blow-up during diagram reduction is safe.

mod farey;
mod geom;
mod slope;

pub use farey::{farey_gap, FareyError};
pub use geom::{
    lattice_points_on_segment, point_on_segment, segment_intersection, winding_number, GeomError,
    Point, SegmentMeet,
};
pub use slope::{interval_contains, CyclicInterval, ProjectiveSlope};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational scalar. `BigRational` keeps lowest terms and a positive
/// denominator, which are exactly the invariants we need.
pub type Rational = BigRational;

/// Build a rational from machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer rational.
pub fn rint(n: i64) -> Rational {
    Rational::from(BigInt::from(n))
}

/// An integer vector in the plane lattice.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LatticeVec {
    pub x: i64,
    pub y: i64,
}

impl LatticeVec {
    pub fn new(x: i64, y: i64) -> Self {
        LatticeVec { x, y }
    }

    pub fn det(self, other: LatticeVec) -> i128 {
        self.x as i128 * other.y as i128 - self.y as i128 * other.x as i128
    }
}

/// Whether the triangle with vertices `0`, `v`, `w` contains no lattice point
/// besides its vertices. Equivalent to `{v, w}` being a basis of the lattice;
/// points on open edges count as non-empty.
pub fn triangle_empty(v: LatticeVec, w: LatticeVec) -> Result<bool, GeomError> {
    let d = v.det(w);
    if d == 0 {
        return Err(GeomError::DegenerateTriangle);
    }
    Ok(d.unsigned_abs() == 1)
}

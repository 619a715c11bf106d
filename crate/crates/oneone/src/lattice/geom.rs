//! Exact PL geometry primitives: points, segment meets, lattice points on
//! segments, winding numbers.

use super::Rational;
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeomError {
    #[error("query point lies on the curve")]
    PointOnCurve,
    #[error("triangle is degenerate (determinant zero)")]
    DegenerateTriangle,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn translate(&self, dx: &Rational, dy: &Rational) -> Point {
        Point::new(&self.x + dx, &self.y + dy)
    }
}

fn cross(o: &Point, a: &Point, b: &Point) -> Rational {
    (&a.x - &o.x) * (&b.y - &o.y) - (&a.y - &o.y) * (&b.x - &o.x)
}

/// Closed-segment membership test.
pub fn point_on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    if !cross(a, b, p).is_zero() {
        return false;
    }
    let in_x = (&p.x >= &a.x.clone().min(b.x.clone())) && (&p.x <= &a.x.clone().max(b.x.clone()));
    let in_y = (&p.y >= &a.y.clone().min(b.y.clone())) && (&p.y <= &a.y.clone().max(b.y.clone()));
    in_x && in_y
}

/// How two closed segments meet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SegmentMeet {
    Disjoint,
    /// A single common point.
    At(Point),
    /// Collinear segments sharing more than one point.
    Overlap,
}

/// Exact meet of closed segments [a1,a2] and [b1,b2].
pub fn segment_intersection(a1: &Point, a2: &Point, b1: &Point, b2: &Point) -> SegmentMeet {
    let d1 = cross(a1, a2, b1);
    let d2 = cross(a1, a2, b2);

    if d1.is_zero() && d2.is_zero() {
        // Collinear. Project on the dominant axis.
        let horizontal = (&a2.x - &a1.x).abs() >= (&a2.y - &a1.y).abs();
        let key = |p: &Point| if horizontal { p.x.clone() } else { p.y.clone() };
        let (alo, ahi) = minmax(key(a1), key(a2));
        let (blo, bhi) = minmax(key(b1), key(b2));
        let lo = alo.max(blo);
        let hi = ahi.min(bhi);
        if lo > hi {
            return SegmentMeet::Disjoint;
        }
        if lo == hi {
            // Single shared point.
            let p = [a1, a2, b1, b2]
                .into_iter()
                .find(|p| key(p) == lo)
                .expect("endpoint with extreme key");
            return SegmentMeet::At(p.clone());
        }
        return SegmentMeet::Overlap;
    }

    let d3 = cross(b1, b2, a1);
    let d4 = cross(b1, b2, a2);
    let zero = Rational::zero();

    // Closed segments meet iff each straddles the other's line (zeros allowed).
    if &d1 * &d2 <= zero && &d3 * &d4 <= zero {
        // Not collinear, so exactly one common point; d3 != d4 here.
        let denom = &d3 - &d4;
        debug_assert!(!denom.is_zero());
        let t = &d3 / &denom; // parameter along [a1, a2]
        let x = &a1.x + (&a2.x - &a1.x) * &t;
        let y = &a1.y + (&a2.y - &a1.y) * &t;
        return SegmentMeet::At(Point::new(x, y));
    }
    SegmentMeet::Disjoint
}

fn minmax(a: Rational, b: Rational) -> (Rational, Rational) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// All lattice points `(i, j) ∈ ℤ²` with `(i, j) + shift` on the closed
/// segment [a, b]; i.e. points of the shifted lattice on the segment.
pub fn lattice_points_on_segment(a: &Point, b: &Point, shift: &Point) -> Vec<(i64, i64)> {
    // Work with the segment translated by -shift so targets are ℤ².
    let a = Point::new(&a.x - &shift.x, &a.y - &shift.y);
    let b = Point::new(&b.x - &shift.x, &b.y - &shift.y);
    let mut out = Vec::new();
    if a.y == b.y {
        if !a.y.is_integer() {
            return out;
        }
        let j = rational_to_i64(&a.y);
        let (lo, hi) = minmax(a.x.clone(), b.x.clone());
        let mut i = lo.ceil().to_integer();
        let top = hi.floor().to_integer();
        while i <= top {
            out.push((int_to_i64(&i), j));
            i += 1;
        }
        return out;
    }
    let (ylo, yhi) = minmax(a.y.clone(), b.y.clone());
    let mut j = ylo.ceil().to_integer();
    let jtop = yhi.floor().to_integer();
    while j <= jtop {
        let jr = Rational::from(j.clone());
        // x at height j
        let t = (&jr - &a.y) / (&b.y - &a.y);
        let x = &a.x + (&b.x - &a.x) * &t;
        if x.is_integer() {
            out.push((rational_to_i64(&x), int_to_i64(&j)));
        }
        j += 1;
    }
    out
}

fn rational_to_i64(r: &Rational) -> i64 {
    debug_assert!(r.is_integer());
    int_to_i64(&r.to_integer())
}

fn int_to_i64(i: &num_bigint::BigInt) -> i64 {
    use num_traits::ToPrimitive;
    i.to_i64().expect("lattice coordinate fits in i64")
}

/// Winding number of the closed PL loop `vertices` (implicitly closed back to
/// the first vertex) around `p`, by signed crossings of the ray x > p.x.
pub fn winding_number(vertices: &[Point], p: &Point) -> Result<i64, GeomError> {
    let n = vertices.len();
    assert!(n >= 2, "loop needs at least two vertices");
    let mut wind = 0i64;
    for k in 0..n {
        let a = &vertices[k];
        let b = &vertices[(k + 1) % n];
        if point_on_segment(p, a, b) {
            return Err(GeomError::PointOnCurve);
        }
        let a_above = &a.y > &p.y;
        let b_above = &b.y > &p.y;
        if a_above == b_above {
            continue;
        }
        // Crossing x at height p.y. b.y != a.y here.
        let t = (&p.y - &a.y) / (&b.y - &a.y);
        let x = &a.x + (&b.x - &a.x) * &t;
        if x > p.x {
            wind += if b_above { 1 } else { -1 };
        }
    }
    Ok(wind)
}

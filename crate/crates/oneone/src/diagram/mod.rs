//! Exact PL model of doubly-pointed genus-1 Heegaard diagrams on ℝ²/ℤ².
//!
//! Fixed gauge: the alpha curve is the projection of the horizontal line
//! y = 1/2, and the z basepoint is the projection of the integer lattice.
//! The beta curve is stored as one fundamental PL path plus its homology
//! offset; the closing edge from the last vertex to (first vertex + offset)
//! is implicit. All predicates work on the universal cover with exact
//! rational arithmetic.

mod lift;
mod reduce;
mod standard;

pub use lift::{Bigon, ClassGeometry, HalfPlane, LiftedCrossing};
pub(crate) use lift::lattice_windings as lattice_windings_for;
pub use reduce::insert_empty_finger;
pub use standard::{from_standard_form, geodesic_diagram, meander_diagram, CaptureWord};

use crate::lattice::{
    lattice_points_on_segment, rat, segment_intersection, LatticeVec, Point,
    Rational, SegmentMeet,
};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("offset is not primitive or has zero vertical part")]
    NonPrimitiveOffset,
    #[error("beta path is empty")]
    EmptyPath,
    #[error("projected beta curve self-intersects")]
    SelfIntersecting,
    #[error("a basepoint lies on a curve")]
    BasepointOnCurve,
    #[error("beta path is not transverse to the alpha line family")]
    NotTransverse,
    #[error("parameter combination does not realize an embedded curve: {0}")]
    UnrealizableParameters(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

/// Sign of a transverse crossing of beta through alpha, with alpha oriented
/// by increasing x and beta by increasing path parameter.
pub type CrossingSign = i8;

/// One intersection point of the projected alpha and beta curves.
#[derive(Clone, Debug, PartialEq)]
pub struct IntersectionPoint {
    /// x-coordinate of the point on the alpha circle, in [0, 1).
    pub alpha_position: Rational,
    /// Position along the fundamental beta path: segment index plus local
    /// parameter in (0, 1).
    pub beta_parameter: Rational,
    /// +1 where beta crosses upward, -1 downward.
    pub sign: CrossingSign,
    /// Spin^c class index in [0, p) where p = |offset.y|.
    pub class_id: usize,
}

/// Verdict of the coherence test on a reduced diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoherenceVerdict {
    Positive,
    Negative,
    /// No embedded bigons at all: both orientation choices work vacuously.
    /// Exactly the simple-knot case.
    Both,
    Incoherent,
}

/// Per-class graphic order comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphicSign {
    Positive,
    Negative,
    /// Single-point class.
    Either,
    None,
}

/// A doubly-pointed genus-1 Heegaard diagram in the fixed gauge.
#[derive(Clone, Debug, PartialEq)]
pub struct OneOneDiagram {
    beta: Vec<Point>,
    offset: LatticeVec,
    w: Point,
}

/// A crossing of the fundamental beta path with a line y = level + 1/2.
#[derive(Clone, Debug)]
pub(crate) struct RawCrossing {
    /// Flat parameter seg + t, t in (0,1).
    pub param: Rational,
    pub point: Point,
    /// The line is y = level + 1/2.
    pub level: i64,
    /// +1 upward, -1 downward.
    pub sign: CrossingSign,
}

impl OneOneDiagram {
    /// Validate raw data and build a diagram. Normalizes the path by
    /// dropping duplicate and collinear vertices (including across the
    /// closing edge).
    pub fn validate(
        beta: Vec<Point>,
        offset: LatticeVec,
        w: Point,
    ) -> Result<OneOneDiagram, DiagramError> {
        if beta.is_empty() {
            return Err(DiagramError::EmptyPath);
        }
        if offset.y == 0 || BigInt::from(offset.x).gcd(&BigInt::from(offset.y)) != BigInt::from(1) {
            return Err(DiagramError::NonPrimitiveOffset);
        }
        let beta = normalize_path(beta, offset)?;
        let d = OneOneDiagram { beta, offset, w };
        d.check_transverse()?;
        d.check_basepoints()?;
        d.check_embedded()?;
        Ok(d)
    }

    pub(crate) fn from_parts_unchecked(beta: Vec<Point>, offset: LatticeVec, w: Point) -> Self {
        OneOneDiagram { beta, offset, w }
    }

    pub fn beta_path(&self) -> &[Point] {
        &self.beta
    }

    pub fn offset(&self) -> LatticeVec {
        self.offset
    }

    pub fn w(&self) -> &Point {
        &self.w
    }

    /// Order of the first homology of the presented manifold, p = |offset.y|.
    pub fn homology_order(&self) -> usize {
        self.offset.y.unsigned_abs() as usize
    }

    /// Number of segments of the fundamental path (closing edge included).
    pub fn segment_count(&self) -> usize {
        self.beta.len()
    }

    /// Vertex at a global lift index: v_{m mod k} translated by (m div k)
    /// copies of the offset.
    pub(crate) fn lift_vertex(&self, m: i64) -> Point {
        let k = self.beta.len() as i64;
        let (div, rem) = (m.div_euclid(k), m.rem_euclid(k));
        let v = &self.beta[rem as usize];
        let dx = rat(self.offset.x, 1) * rat(div, 1);
        let dy = rat(self.offset.y, 1) * rat(div, 1);
        v.translate(&dx, &dy)
    }

    /// Endpoints of the lifted segment with global index m.
    pub(crate) fn lift_segment(&self, m: i64) -> (Point, Point) {
        (self.lift_vertex(m), self.lift_vertex(m + 1))
    }

    /// All crossings of the fundamental path with the lines y = j + 1/2,
    /// sorted along the path.
    pub(crate) fn raw_crossings(&self) -> Vec<RawCrossing> {
        let mut out = Vec::new();
        let k = self.beta.len();
        let half = rat(1, 2);
        for i in 0..k {
            let (a, b) = self.lift_segment(i as i64);
            if a.y == b.y {
                continue;
            }
            let (ylo, yhi) = if a.y < b.y {
                (a.y.clone(), b.y.clone())
            } else {
                (b.y.clone(), a.y.clone())
            };
            // levels j with ylo < j + 1/2 < yhi
            let mut j = (&ylo - &half).ceil().to_integer();
            loop {
                let line = Rational::from(j.clone()) + &half;
                if line >= yhi {
                    break;
                }
                if line > ylo {
                    let t = (&line - &a.y) / (&b.y - &a.y);
                    let x = &a.x + (&b.x - &a.x) * &t;
                    let sign = if b.y > a.y { 1 } else { -1 };
                    out.push(RawCrossing {
                        param: Rational::from(BigInt::from(i)) + t,
                        point: Point::new(x, line),
                        level: j.to_i64().expect("level fits i64"),
                        sign,
                    });
                }
                j += 1;
            }
        }
        out.sort_by(|p, q| p.param.cmp(&q.param));
        out
    }

    /// All intersection points of the projected curves, sorted by class and
    /// position on the alpha circle. Verifies the class-count parity
    /// invariants.
    pub fn intersections(&self) -> Result<Vec<IntersectionPoint>, DiagramError> {
        let p = self.homology_order() as i64;
        let mut pts: Vec<IntersectionPoint> = self
            .raw_crossings()
            .into_iter()
            .map(|c| {
                let frac = &c.point.x - c.point.x.floor();
                IntersectionPoint {
                    alpha_position: frac,
                    beta_parameter: c.param,
                    sign: c.sign,
                    class_id: c.level.rem_euclid(p) as usize,
                }
            })
            .collect();
        pts.sort_by(|a, b| {
            (a.class_id, &a.alpha_position, &a.beta_parameter).cmp(&(
                b.class_id,
                &b.alpha_position,
                &b.beta_parameter,
            ))
        });
        // Per-class invariants: odd size, signed count ±1.
        for c in 0..p as usize {
            let class: Vec<_> = pts.iter().filter(|q| q.class_id == c).collect();
            if class.is_empty() {
                return Err(DiagramError::Internal(format!("class {c} has no points")));
            }
            if class.len() % 2 == 0 {
                return Err(DiagramError::Internal(format!(
                    "class {c} has even size {}",
                    class.len()
                )));
            }
            let signed: i64 = class.iter().map(|q| q.sign as i64).sum();
            if signed.abs() != 1 {
                return Err(DiagramError::Internal(format!(
                    "class {c} has signed count {signed}"
                )));
            }
        }
        Ok(pts)
    }

    fn check_transverse(&self) -> Result<(), DiagramError> {
        for v in &self.beta {
            if (&v.y - rat(1, 2)).is_integer() {
                return Err(DiagramError::NotTransverse);
            }
        }
        Ok(())
    }

    fn check_basepoints(&self) -> Result<(), DiagramError> {
        // w off the alpha lifts and off the z lattice
        if (&self.w.y - rat(1, 2)).is_integer() {
            return Err(DiagramError::BasepointOnCurve);
        }
        if self.w.x.is_integer() && self.w.y.is_integer() {
            return Err(DiagramError::BasepointOnCurve);
        }
        let origin = Point::new(rat(0, 1), rat(0, 1));
        for i in 0..self.beta.len() {
            let (a, b) = self.lift_segment(i as i64);
            if !lattice_points_on_segment(&a, &b, &origin).is_empty() {
                return Err(DiagramError::BasepointOnCurve);
            }
            if !lattice_points_on_segment(&a, &b, &self.w).is_empty() {
                return Err(DiagramError::BasepointOnCurve);
            }
        }
        Ok(())
    }

    /// Embeddedness of the projected curve: no two lifted segments meet
    /// except at shared path joints.
    fn check_embedded(&self) -> Result<(), DiagramError> {
        match self.first_embedding_violation() {
            None => Ok(()),
            Some(_) => Err(DiagramError::SelfIntersecting),
        }
    }

    /// Diagnostic form of the embeddedness check: the first offending pair
    /// of fundamental segment indices, the translate, and the meeting point
    /// when there is one.
    ///
    /// For each segment pair only the few translates with overlapping
    /// bounding boxes are examined.
    #[doc(hidden)]
    pub fn first_embedding_violation(&self) -> Option<(usize, usize, LatticeVec, Option<Point>)> {
        let k = self.beta.len();
        let segs: Vec<(Point, Point)> = (0..k).map(|i| self.lift_segment(i as i64)).collect();
        // Degenerate segments are embedding violations of the path data.
        for (i, (a, b)) in segs.iter().enumerate() {
            if a == b {
                return Some((i, i, LatticeVec::new(0, 0), None));
            }
        }
        struct BBox {
            xlo: f64,
            xhi: f64,
            ylo: f64,
            yhi: f64,
        }
        // Correctly-rounded f64 approximations; the margin absorbs the
        // rounding error for any coordinate of plausible magnitude, and a
        // failed conversion falls back to a box that forces the exact check.
        let approx = |r: &Rational| r.to_f64().filter(|v| v.is_finite());
        const MARGIN: f64 = 1e-9;
        let boxes: Vec<BBox> = segs
            .iter()
            .map(|(a, b)| {
                match (approx(&a.x), approx(&b.x), approx(&a.y), approx(&b.y)) {
                    (Some(xa), Some(xb), Some(ya), Some(yb)) => BBox {
                        xlo: xa.min(xb) - MARGIN,
                        xhi: xa.max(xb) + MARGIN,
                        ylo: ya.min(yb) - MARGIN,
                        yhi: ya.max(yb) + MARGIN,
                    },
                    _ => BBox {
                        xlo: -1e9,
                        xhi: 1e9,
                        ylo: -1e9,
                        yhi: 1e9,
                    },
                }
            })
            .collect();
        let k_i = k as i64;
        for i in 0..k {
            for j in i..k {
                // Translates u with bbox_i meeting bbox_j + u.
                let uxlo = (boxes[i].xlo - boxes[j].xhi).ceil() as i64;
                let uxhi = (boxes[i].xhi - boxes[j].xlo).floor() as i64;
                let uylo = (boxes[i].ylo - boxes[j].yhi).ceil() as i64;
                let uyhi = (boxes[i].yhi - boxes[j].ylo).floor() as i64;
                for uy in uylo..=uyhi {
                    for ux in uxlo..=uxhi {
                        if i == j && (uy < 0 || (uy == 0 && ux <= 0)) {
                            continue; // self-pairs once, skip identity
                        }
                        let u = LatticeVec::new(ux, uy);
                        let a = &segs[i];
                        let tb = translate_seg(&segs[j], u);
                        match segment_intersection(&a.0, &a.1, &tb.0, &tb.1) {
                            SegmentMeet::Disjoint => {}
                            SegmentMeet::Overlap => return Some((i, j, u, None)),
                            SegmentMeet::At(p) => {
                                if !self.allowed_joint(i as i64, j as i64, u, k_i, &p) {
                                    return Some((i, j, u, Some(p)));
                                }
                            }
                        }
                    }
                }
            }
        }
        None
    }

    /// Whether a single-point meet of fundamental segment i with fundamental
    /// segment j translated by u is one of the legitimate path joints.
    fn allowed_joint(&self, i: i64, j: i64, u: LatticeVec, k: i64, p: &Point) -> bool {
        // The lifted curve has joints between global segments m and m+1 at
        // lift_vertex(m+1). Segment i here is global i; segment j translated
        // by u is global j + n*k where u must equal n*offset.
        let n = if self.offset.y != 0 {
            u.y / self.offset.y
        } else {
            0
        };
        if LatticeVec::new(n * self.offset.x, n * self.offset.y) != u {
            return false;
        }
        let gj = j + n * k;
        let (lo, hi) = if i <= gj { (i, gj) } else { (gj, i) };
        hi - lo == 1 && *p == self.lift_vertex(hi)
    }
}

/// Development diagnostic: report the first embedding violation of raw path
/// data without validating anything else.
#[doc(hidden)]
pub fn debug_embedding(
    beta: Vec<Point>,
    offset: LatticeVec,
    w: Point,
) -> Option<(usize, usize, LatticeVec, Option<Point>)> {
    let d = OneOneDiagram::from_parts_unchecked(beta, offset, w);
    d.first_embedding_violation()
}

fn translate_seg(s: &(Point, Point), u: LatticeVec) -> (Point, Point) {
    let dx = rat(u.x, 1);
    let dy = rat(u.y, 1);
    (s.0.translate(&dx, &dy), s.1.translate(&dx, &dy))
}

/// Drop duplicate vertices and collinear interior vertices, cyclically
/// (the closing edge participates via the offset).
fn normalize_path(beta: Vec<Point>, offset: LatticeVec) -> Result<Vec<Point>, DiagramError> {
    let mut v = beta;
    loop {
        let k = v.len();
        if k == 1 {
            return Ok(v);
        }
        let mut removed = false;
        let mut i = 0;
        while i < v.len() && v.len() > 1 {
            let k = v.len() as i64;
            let prev = cyclic_vertex(&v, i as i64 - 1, offset, k);
            let cur = v[i].clone();
            let next = cyclic_vertex(&v, i as i64 + 1, offset, k);
            let collinear = {
                let ux = &cur.x - &prev.x;
                let uy = &cur.y - &prev.y;
                let vx = &next.x - &cur.x;
                let vy = &next.y - &cur.y;
                (&ux * &vy - &uy * &vx).is_zero() && (&ux * &vx + &uy * &vy) >= Rational::zero()
            };
            if cur == prev || collinear {
                v.remove(i);
                removed = true;
            } else {
                i += 1;
            }
        }
        if !removed {
            return Ok(v);
        }
    }
}

fn cyclic_vertex(v: &[Point], m: i64, offset: LatticeVec, k: i64) -> Point {
    let (div, rem) = (m.div_euclid(k), m.rem_euclid(k));
    let dx = rat(offset.x, 1) * rat(div, 1);
    let dy = rat(offset.y, 1) * rat(div, 1);
    v[rem as usize].translate(&dx, &dy)
}

//! Universal-cover geometry per spin^c class: lifted crossings on a fixed
//! alpha line, bigon enumeration, graphic order comparison, coherence.

use super::{CoherenceVerdict, DiagramError, GraphicSign, IntersectionPoint, OneOneDiagram};
use crate::lattice::{rat, Point, Rational};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HalfPlane {
    Upper,
    Lower,
}

/// A crossing of the class's lifted beta line with its alpha line.
#[derive(Clone, Debug)]
pub struct LiftedCrossing {
    /// x-coordinate on the lifted alpha line.
    pub x: Rational,
    /// Global beta parameter (periods included).
    pub param: Rational,
    pub sign: i8,
}

/// All lifted data of one spin^c class: the crossings of the chosen lift of
/// beta with the line y = level + 1/2.
#[derive(Clone, Debug)]
pub struct ClassGeometry {
    pub class_id: usize,
    /// The alpha line is y = level + 1/2.
    pub level: i64,
    /// Crossings sorted by x (the generator order along alpha).
    pub points: Vec<LiftedCrossing>,
    /// Indices into `points` sorted by increasing beta parameter.
    pub param_order: Vec<usize>,
}

/// An embedded lifted bigon cobounded by the class's beta line and alpha
/// line, with corner generators and basepoint multiplicities.
#[derive(Clone, Debug)]
pub struct Bigon {
    pub class_id: usize,
    /// Index into the alpha-sorted generator list of the class.
    pub source: usize,
    pub target: usize,
    pub half_plane: HalfPlane,
    pub n_z: u32,
    pub n_w: u32,
    /// Parameter range of the beta arc.
    pub(crate) param_lo: Rational,
    pub(crate) param_hi: Rational,
    /// Twice the enclosed area, for innermost selection.
    pub(crate) area2: Rational,
    /// Generator index of the corner at the earlier raw parameter.
    pub(crate) param_first: usize,
    /// Generator index of the corner at the later raw parameter.
    pub(crate) param_second: usize,
}

impl Bigon {
    /// Whether the arc runs from its right corner to its left corner when
    /// beta carries its canonical orientation (the one with alpha.beta > 0).
    pub(crate) fn right_to_left(&self, points: &[LiftedCrossing], upward: bool) -> bool {
        let (first, second) = if upward {
            (self.param_first, self.param_second)
        } else {
            (self.param_second, self.param_first)
        };
        points[first].x > points[second].x
    }
}

impl OneOneDiagram {
    /// Lifted geometry of one class.
    pub fn class_geometry(&self, class_id: usize) -> Result<ClassGeometry, DiagramError> {
        let p = self.homology_order() as i64;
        assert!((class_id as i64) < p, "class out of range");
        let b = self.offset().y;
        let a = self.offset().x;
        let k = self.segment_count() as i64;
        let mut pts = Vec::new();
        for c in self.raw_crossings() {
            if c.level.rem_euclid(p) as usize != class_id {
                continue;
            }
            let n = (class_id as i64 - c.level) / b;
            let x = &c.point.x + rat(n, 1) * rat(a, 1);
            let param = &c.param + Rational::from(BigInt::from(n)) * Rational::from(BigInt::from(k));
            pts.push(LiftedCrossing {
                x,
                param,
                sign: c.sign,
            });
        }
        if pts.is_empty() {
            return Err(DiagramError::Internal(format!(
                "class {class_id} has no crossings"
            )));
        }
        pts.sort_by(|u, v| u.x.cmp(&v.x));
        let mut param_order: Vec<usize> = (0..pts.len()).collect();
        param_order.sort_by(|&i, &j| pts[i].param.cmp(&pts[j].param));
        Ok(ClassGeometry {
            class_id,
            level: class_id as i64,
            points: pts,
            param_order,
        })
    }

    /// The beta arc between two global parameters, as a vertex chain
    /// starting and ending at the given crossing points.
    pub(crate) fn arc_vertices(&self, start: &Point, end: &Point, p_lo: &Rational, p_hi: &Rational) -> Vec<Point> {
        let mut verts = vec![start.clone()];
        let mut m = p_lo.ceil().to_integer().to_i64().unwrap();
        // p_lo is never an integer (crossings are interior to segments)
        let hi = p_hi.floor().to_integer().to_i64().unwrap();
        while m <= hi {
            verts.push(self.lift_vertex(m));
            m += 1;
        }
        verts.push(end.clone());
        verts
    }

    /// All lifted bigons of one class, ordered along beta.
    pub fn bigons(&self, class_id: usize) -> Result<Vec<Bigon>, DiagramError> {
        let geo = self.class_geometry(class_id)?;
        self.bigons_of(&geo)
    }

    pub(crate) fn bigons_of(&self, geo: &ClassGeometry) -> Result<Vec<Bigon>, DiagramError> {
        let line_y = rat(geo.level, 1) + rat(1, 2);
        let mut out = Vec::new();
        for w in geo.param_order.windows(2) {
            let (i, j) = (w[0], w[1]);
            let pi = &geo.points[i];
            let pj = &geo.points[j];
            if pi.sign == pj.sign {
                return Err(DiagramError::Internal(
                    "consecutive crossings of a line with equal sign".into(),
                ));
            }
            let upper = pi.sign > 0;
            let start = Point::new(pi.x.clone(), line_y.clone());
            let end = Point::new(pj.x.clone(), line_y.clone());
            let arc = self.arc_vertices(&start, &end, &pi.param, &pj.param);
            let (n_z, n_w, area2) = self.arc_multiplicities(&arc)?;
            // Differential direction: upper bigons go from the left corner to
            // the right corner, lower bigons the other way.
            let (left, right) = if pi.x < pj.x { (i, j) } else { (j, i) };
            let (source, target) = if upper { (left, right) } else { (right, left) };
            out.push(Bigon {
                class_id: geo.class_id,
                source,
                target,
                half_plane: if upper { HalfPlane::Upper } else { HalfPlane::Lower },
                n_z,
                n_w,
                param_lo: pi.param.clone(),
                param_hi: pj.param.clone(),
                area2,
                param_first: i,
                param_second: j,
            });
        }
        Ok(out)
    }

    /// Count basepoint lifts inside the disk bounded by the arc and the
    /// closing chord, and the enclosed area (doubled).
    fn arc_multiplicities(&self, loop_verts: &[Point]) -> Result<(u32, u32, Rational), DiagramError> {
        let origin = Point::new(rat(0, 1), rat(0, 1));
        let (nz, _) = lattice_windings(loop_verts, &origin)?;
        let (nw, _) = lattice_windings(loop_verts, self.w())?;
        let area2 = shoelace2(loop_verts).abs();
        Ok((nz as u32, nw as u32, area2))
    }

    /// Graphic order comparison for one class.
    pub fn graphic_sign(&self, class_id: usize) -> Result<GraphicSign, DiagramError> {
        let geo = self.class_geometry(class_id)?;
        Ok(graphic_of(&geo, self.offset().y > 0))
    }

    /// Coherence verdict for the whole (reduced) diagram, by orienting the
    /// curves and checking every lifted bigon.
    pub fn coherence(&self) -> Result<CoherenceVerdict, DiagramError> {
        let upward = self.offset().y > 0;
        let mut saw_rl = false;
        let mut saw_lr = false;
        for c in 0..self.homology_order() {
            let geo = self.class_geometry(c)?;
            for b in self.bigons_of(&geo)? {
                if b.right_to_left(&geo.points, upward) {
                    saw_rl = true;
                } else {
                    saw_lr = true;
                }
            }
        }
        let verdict = match (saw_rl, saw_lr) {
            (false, false) => CoherenceVerdict::Both,
            (true, false) => CoherenceVerdict::Positive,
            (false, true) => CoherenceVerdict::Negative,
            (true, true) => CoherenceVerdict::Incoherent,
        };
        // Cross-check against the class-wise graphic computation.
        let graphic = self.coherence_via_graphic()?;
        if graphic != verdict {
            return Err(DiagramError::Internal(format!(
                "bigon-orientation verdict {verdict:?} disagrees with graphic verdict {graphic:?}"
            )));
        }
        Ok(verdict)
    }

    /// The same verdict assembled from per-class graphic signs.
    fn coherence_via_graphic(&self) -> Result<CoherenceVerdict, DiagramError> {
        let mut all_single = true;
        let mut pos_ok = true;
        let mut neg_ok = true;
        for c in 0..self.homology_order() {
            match self.graphic_sign(c)? {
                GraphicSign::Either => {}
                GraphicSign::Positive => {
                    all_single = false;
                    neg_ok = false;
                }
                GraphicSign::Negative => {
                    all_single = false;
                    pos_ok = false;
                }
                GraphicSign::None => {
                    all_single = false;
                    pos_ok = false;
                    neg_ok = false;
                }
            }
        }
        Ok(if all_single {
            CoherenceVerdict::Both
        } else if pos_ok {
            CoherenceVerdict::Positive
        } else if neg_ok {
            CoherenceVerdict::Negative
        } else {
            CoherenceVerdict::Incoherent
        })
    }

    /// The intersection-point view of a lifted crossing.
    pub fn intersection_point(&self, geo: &ClassGeometry, idx: usize) -> IntersectionPoint {
        let c = &geo.points[idx];
        let frac = &c.x - c.x.floor();
        let k = Rational::from(BigInt::from(self.segment_count() as i64));
        let mut param = c.param.clone();
        // reduce the parameter to the fundamental period [0, k)
        let n = (&param / &k).floor();
        param -= n * k;
        IntersectionPoint {
            alpha_position: frac,
            beta_parameter: param,
            sign: c.sign,
            class_id: geo.class_id,
        }
    }
}

pub(crate) fn graphic_of(geo: &ClassGeometry, upward: bool) -> GraphicSign {
    let n = geo.points.len();
    if n == 1 {
        return GraphicSign::Either;
    }
    // canonical beta direction: by parameter if offset.y > 0, reversed otherwise
    let seq: Vec<usize> = if upward {
        geo.param_order.clone()
    } else {
        geo.param_order.iter().rev().copied().collect()
    };
    let increasing = seq.windows(2).all(|w| w[0] < w[1]);
    let decreasing = seq.windows(2).all(|w| w[0] > w[1]);
    match (decreasing, increasing) {
        (true, false) => GraphicSign::Positive,
        (false, true) => GraphicSign::Negative,
        _ => GraphicSign::None,
    }
}

fn shoelace2(verts: &[Point]) -> Rational {
    let n = verts.len();
    let mut acc = rat(0, 1);
    for i in 0..n {
        let p = &verts[i];
        let q = &verts[(i + 1) % n];
        acc += &p.x * &q.y - &q.x * &p.y;
    }
    acc
}

/// Total |winding| and signed winding of the closed loop over all points of
/// the lattice `shift + Z^2`, by sweeping one horizontal row at a time: the
/// crossings of each row split it into intervals of constant winding, and
/// the lattice points per interval are counted with floor arithmetic.
pub(crate) fn lattice_windings(
    loop_verts: &[Point],
    shift: &Point,
) -> Result<(u64, i64), DiagramError> {
    let n = loop_verts.len();
    let mut ymin = loop_verts[0].y.clone();
    let mut ymax = ymin.clone();
    for v in loop_verts {
        if v.y < ymin {
            ymin = v.y.clone();
        }
        if v.y > ymax {
            ymax = v.y.clone();
        }
    }
    let jlo = (&ymin - &shift.y).ceil().to_integer().to_i64().unwrap();
    let jhi = (&ymax - &shift.y).floor().to_integer().to_i64().unwrap();
    let mut total_abs = 0u64;
    let mut total_signed = 0i64;
    for j in jlo..=jhi {
        let row_y = rat(j, 1) + &shift.y;
        // Crossings of the row: (x, direction).
        let mut crossings: Vec<(Rational, i64)> = Vec::new();
        for i in 0..n {
            let a = &loop_verts[i];
            let b = &loop_verts[(i + 1) % n];
            let a_above = a.y > row_y;
            let b_above = b.y > row_y;
            if a_above == b_above {
                continue;
            }
            let t = (&row_y - &a.y) / (&b.y - &a.y);
            let x = &a.x + (&b.x - &a.x) * &t;
            crossings.push((x, if b_above { 1 } else { -1 }));
        }
        if crossings.is_empty() {
            continue;
        }
        crossings.sort_by(|u, v| u.0.cmp(&v.0));
        // Winding in the gap right of crossing k = suffix sum of directions
        // beyond it. Walk right to left.
        let mut wind = 0i64;
        for k in (0..crossings.len()).rev() {
            let right = &crossings[k].0;
            wind += crossings[k].1;
            let left = if k == 0 { None } else { Some(&crossings[k - 1].0) };
            if wind == 0 {
                continue;
            }
            // Lattice x in (left, right): x = shift.x + i.
            let hi_f = (right - &shift.x).floor();
            let hi = if &(&hi_f + &shift.x) == right {
                // Point exactly on a crossing: on the curve.
                return Err(DiagramError::Internal(
                    "lattice point on winding loop".into(),
                ));
            } else {
                hi_f.to_integer().to_i64().unwrap()
            };
            let lo = match left {
                None => break, // unbounded gap has winding 0; wind != 0 is a bug
                Some(lx) => {
                    let lo_c = (lx - &shift.x).ceil();
                    if &(&lo_c + &shift.x) == lx {
                        return Err(DiagramError::Internal(
                            "lattice point on winding loop".into(),
                        ));
                    }
                    lo_c.to_integer().to_i64().unwrap()
                }
            };
            if lo <= hi {
                let count = (hi - lo + 1) as u64;
                total_abs += count * wind.unsigned_abs();
                total_signed += count as i64 * wind;
            }
        }
    }
    Ok((total_abs, total_signed))
}

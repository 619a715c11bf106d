//! Empty-bigon elimination: isotope beta across basepoint-free bigons until
//! every bigon contains a basepoint.

use super::lift::HalfPlane;
use super::{DiagramError, OneOneDiagram};
use crate::lattice::{
    lattice_points_on_segment, rat, segment_intersection, Point, Rational, SegmentMeet,
};
use num_traits::{Signed, ToPrimitive, Zero};

struct EmptyBigon {
    level_y: Rational,
    param_lo: Rational,
    param_hi: Rational,
    upper: bool,
    area2: Rational,
}

impl OneOneDiagram {
    /// Whether every lifted bigon contains a basepoint.
    pub fn is_reduced(&self) -> Result<bool, DiagramError> {
        Ok(self.smallest_empty_bigon()?.is_none())
    }

    fn smallest_empty_bigon(&self) -> Result<Option<EmptyBigon>, DiagramError> {
        let mut best: Option<EmptyBigon> = None;
        for c in 0..self.homology_order() {
            let geo = self.class_geometry(c)?;
            for b in self.bigons_of(&geo)? {
                if b.n_z + b.n_w > 0 {
                    continue;
                }
                let cand = EmptyBigon {
                    level_y: rat(c as i64, 1) + rat(1, 2),
                    param_lo: b.param_lo.clone(),
                    param_hi: b.param_hi.clone(),
                    upper: b.half_plane == HalfPlane::Upper,
                    area2: b.area2.clone(),
                };
                let better = match &best {
                    None => true,
                    Some(cur) => {
                        (&cand.area2, &cand.param_lo) < (&cur.area2, &cur.param_lo)
                    }
                };
                if better {
                    best = Some(cand);
                }
            }
        }
        Ok(best)
    }

    /// Repeatedly isotope away an innermost basepoint-free bigon. Offset and
    /// w are unchanged; each step removes exactly two intersection points.
    pub fn reduce(&self) -> Result<OneOneDiagram, DiagramError> {
        let mut d = self.clone();
        loop {
            let Some(bigon) = d.smallest_empty_bigon()? else {
                break;
            };
            let before = d.raw_crossings().len();
            d = d.eliminate_bigon(&bigon)?;
            let after = d.raw_crossings().len();
            if before != after + 2 {
                return Err(DiagramError::Internal(format!(
                    "bigon elimination changed crossing count {before} -> {after}"
                )));
            }
        }
        // One full re-validation of the final result.
        OneOneDiagram::validate(d.beta.clone(), d.offset, d.w.clone())
    }

    /// Reroute the beta arc of one empty bigon across its alpha chord.
    fn eliminate_bigon(&self, bigon: &EmptyBigon) -> Result<OneOneDiagram, DiagramError> {
        let k = self.segment_count() as i64;
        let g_a = floor_i64(&bigon.param_lo);
        let g_b = floor_i64(&bigon.param_hi);
        let u = self.lift_vertex(g_a);
        let w_next = self.lift_vertex(g_a + 1);
        let b_lo = self.lift_vertex(g_b);
        let v = self.lift_vertex(g_b + 1);

        let mut delta = rat(1, 4);
        for _attempt in 0..64 {
            let y_clear = if bigon.upper {
                &bigon.level_y - &delta
            } else {
                &bigon.level_y + &delta
            };
            delta /= rat(2, 1);

            // Both neighbor vertices must be past the clearance height.
            let side_ok = if bigon.upper {
                u.y < y_clear && v.y < y_clear
            } else {
                u.y > y_clear && v.y > y_clear
            };
            if !side_ok {
                continue;
            }
            let pa = point_at_height(&u, &w_next, &y_clear);
            let pb = point_at_height(&b_lo, &v, &y_clear);
            if (&pa.x - &pb.x).abs() >= rat(1, 1) {
                continue;
            }
            if !self.splice_clear(&pa, &pb, g_a, g_b) {
                continue;
            }
            // Commit: new fundamental path [Pb, V, ..., U + offset, Pa + offset].
            let mut verts = vec![pb.clone()];
            for m in (g_b + 1)..=(g_a + k) {
                verts.push(self.lift_vertex(m));
            }
            let off_x = rat(self.offset.x, 1);
            let off_y = rat(self.offset.y, 1);
            verts.push(pa.translate(&off_x, &off_y));
            let beta = super::normalize_path(verts, self.offset)?;
            return Ok(OneOneDiagram::from_parts_unchecked(
                beta,
                self.offset,
                self.w.clone(),
            ));
        }
        Err(DiagramError::Internal(
            "could not find clearance for bigon elimination".into(),
        ))
    }

    /// Check the candidate splice segment against every nearby lifted beta
    /// segment and both basepoint lattices.
    fn splice_clear(&self, pa: &Point, pb: &Point, g_a: i64, g_b: i64) -> bool {
        let origin = Point::new(rat(0, 1), rat(0, 1));
        if !lattice_points_on_segment(pa, pb, &origin).is_empty() {
            return false;
        }
        if !lattice_points_on_segment(pa, pb, &self.w).is_empty() {
            return false;
        }
        let k = self.segment_count() as i64;
        let (xmin, xmax) = if pa.x <= pb.x {
            (pa.x.clone(), pb.x.clone())
        } else {
            (pb.x.clone(), pa.x.clone())
        };
        let y = pa.y.clone();
        // Per fundamental segment, only the translates whose box reaches the
        // splice: the y-translate range is pinned by the segment's extent.
        for f in 0..k {
            let (s0, s1) = self.lift_segment(f);
            let (ylo, yhi) = if s0.y <= s1.y {
                (s0.y.clone(), s1.y.clone())
            } else {
                (s1.y.clone(), s0.y.clone())
            };
            let jlo = ceil_i64(&(&y - &yhi));
            let jhi = floor_i64(&(&y - &ylo));
            if jlo > jhi {
                continue;
            }
            let (sxlo, sxhi) = if s0.x <= s1.x {
                (s0.x.clone(), s1.x.clone())
            } else {
                (s1.x.clone(), s0.x.clone())
            };
            let ilo = ceil_i64(&(&xmin - &sxhi));
            let ihi = floor_i64(&(&xmax - &sxlo));
            for j in jlo..=jhi {
                for i in ilo..=ihi {
                    let dx = rat(i, 1);
                    let dy = rat(j, 1);
                    let t0 = s0.translate(&dx, &dy);
                    let t1 = s1.translate(&dx, &dy);
                    match segment_intersection(pa, pb, &t0, &t1) {
                        SegmentMeet::Disjoint => {}
                        SegmentMeet::Overlap => return false,
                        SegmentMeet::At(p) => {
                            // Allowed only at the endpoints, on the two host
                            // segments.
                            let host_a = global_matches(f, i, j, g_a, k, self.offset);
                            let host_b = global_matches(f, i, j, g_b, k, self.offset);
                            let ok = (p == *pa && host_a) || (p == *pb && host_b);
                            if !ok {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

/// Whether fundamental segment f translated by (i, j) is the global lifted
/// segment g.
fn global_matches(
    f: i64,
    i: i64,
    j: i64,
    g: i64,
    k: i64,
    offset: crate::lattice::LatticeVec,
) -> bool {
    let (div, rem) = (g.div_euclid(k), g.rem_euclid(k));
    f == rem && i == div * offset.x && j == div * offset.y
}

fn point_at_height(a: &Point, b: &Point, y: &Rational) -> Point {
    debug_assert!(a.y != b.y);
    let t = (y - &a.y) / (&b.y - &a.y);
    let x = &a.x + (&b.x - &a.x) * &t;
    Point::new(x, y.clone())
}

fn floor_i64(r: &Rational) -> i64 {
    r.floor().to_integer().to_i64().expect("coordinate in range")
}

fn ceil_i64(r: &Rational) -> i64 {
    r.ceil().to_integer().to_i64().expect("coordinate in range")
}

/// Insert an artificial empty bigon: a thin tongue of beta poked across a
/// neighboring alpha line from a level-free spot of the chosen segment.
/// Raises the intersection count by exactly two and is undone by `reduce`.
///
/// `variant` selects among poke positions and directions; different values
/// give different wiggles. Returns the wiggled diagram, or an error if no
/// clearance was found.
pub fn insert_empty_finger(
    d: &OneOneDiagram,
    seg: usize,
    variant: u32,
) -> Result<OneOneDiagram, DiagramError> {
    let seg = seg % d.segment_count();
    let (a, b) = d.lift_segment(seg as i64);
    let before = d.raw_crossings().len();

    let positions = [
        rat(1, 2),
        rat(1, 3),
        rat(2, 3),
        rat(1, 4),
        rat(3, 4),
        rat(1, 8),
        rat(7, 8),
        rat(1, 16),
        rat(15, 16),
        rat(1, 32),
        rat(31, 32),
    ];
    let start = variant as usize;
    for k in 0..positions.len() {
        let tmid = &positions[(start + k) % positions.len()];
        for poke_up in [true, false] {
            for halvings in 2..16u32 {
                let eps = rat(1, 1i64 << halvings.min(40));
                let t1 = tmid - &eps;
                let t2 = tmid + &eps;
                if t1 <= Rational::zero() || t2 >= rat(1, 1) {
                    continue;
                }
                let at = |t: &Rational| {
                    Point::new(&a.x + (&b.x - &a.x) * t, &a.y + (&b.y - &a.y) * t)
                };
                let p1 = at(&t1);
                let p2 = at(&t2);
                let m = at(tmid);
                // The piece p1..p2 must sit inside one strip.
                let lvl1 = floor_i64(&(&p1.y - rat(1, 2)));
                if lvl1 != floor_i64(&(&p2.y - rat(1, 2))) {
                    continue;
                }
                // Poke just across the strip boundary above or below,
                // leaning sideways to clear the host segment's own
                // continuation and neighboring staples.
                let tip_y = if poke_up {
                    rat(lvl1 + 1, 1) + rat(1, 2) + &eps
                } else {
                    rat(lvl1, 1) + rat(1, 2) - &eps
                };
                let t_half = &eps / rat(2, 1);
                for lean in [0i64, 2, -2, 4, -4, 8, -8] {
                    let dx = rat(lean, 1) * &eps;
                    let tq1 = Point::new(&m.x + &dx - &t_half, tip_y.clone());
                    let tq2 = Point::new(&m.x + &dx + &t_half, tip_y.clone());

                    let mut verts: Vec<Point> = Vec::with_capacity(d.beta_path().len() + 4);
                    for (i, v) in d.beta_path().iter().enumerate() {
                        verts.push(v.clone());
                        if i == seg {
                            verts.push(p1.clone());
                            verts.push(tq1.clone());
                            verts.push(tq2.clone());
                            verts.push(p2.clone());
                        }
                    }
                    let Ok(cand) = OneOneDiagram::validate(verts, d.offset(), d.w().clone())
                    else {
                        continue;
                    };
                    if cand.raw_crossings().len() != before + 2 {
                        continue;
                    }
                    // The new bigon must be empty: nothing of either
                    // basepoint lattice inside the tongue's sliver.
                    if !sliver_empty(&tq1, &tq2, &eps, poke_up, d) {
                        continue;
                    }
                    return Ok(cand);
                }
            }
        }
    }
    Err(DiagramError::Internal(
        "no clearance for empty-finger insertion".into(),
    ))
}

/// Conservative emptiness check for the finger's bigon: no basepoint lift in
/// the bounding box between the crossed line and the tongue tip.
fn sliver_empty(tq1: &Point, tq2: &Point, eps: &Rational, poke_up: bool, d: &OneOneDiagram) -> bool {
    let (ylo, yhi) = if poke_up {
        (&tq1.y - eps - eps, tq1.y.clone())
    } else {
        (tq1.y.clone(), &tq1.y + eps + eps)
    };
    for shift in [Point::new(rat(0, 1), rat(0, 1)), d.w().clone()] {
        let ilo = ceil_i64(&(&tq1.x - eps - &shift.x));
        let ihi = floor_i64(&(&tq2.x + eps - &shift.x));
        let jlo = ceil_i64(&(&ylo - &shift.y));
        let jhi = floor_i64(&(&yhi - &shift.y));
        if ilo <= ihi && jlo <= jhi {
            return false;
        }
    }
    true
}

//! Deterministic SVG rendering: the fundamental square with alpha, beta and
//! the basepoints, and one lifted strip per spin^c class with its bigons
//! shaded.

use crate::diagram::{DiagramError, HalfPlane, OneOneDiagram};
use crate::lattice::{rat, Point, Rational};
use num_traits::ToPrimitive;
use std::fmt::Write as _;

const SCALE: f64 = 160.0;
const MARGIN: f64 = 24.0;

/// Fixed-precision decimal for SVG attributes: six significant digits,
/// presentation only.
fn dec(r: &Rational) -> String {
    let v = r.numer().to_f64().unwrap_or(0.0) / r.denom().to_f64().unwrap_or(1.0);
    let s = format!("{v:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s.is_empty() || s == "-" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

struct Canvas {
    body: String,
    width: f64,
    height: f64,
}

impl Canvas {
    fn new() -> Self {
        Canvas {
            body: String::new(),
            width: 0.0,
            height: 0.0,
        }
    }

    fn place(&self, x: &Rational, y: &Rational, origin: (f64, f64)) -> (String, String) {
        let xf = x.numer().to_f64().unwrap_or(0.0) / x.denom().to_f64().unwrap_or(1.0);
        let yf = y.numer().to_f64().unwrap_or(0.0) / y.denom().to_f64().unwrap_or(1.0);
        let px = origin.0 + xf * SCALE;
        let py = origin.1 - yf * SCALE;
        (format!("{px:.2}"), format!("{py:.2}"))
    }
}

/// Render a diagram: the fundamental square on top, one strip per class
/// below with the lifted bigons shaded.
pub fn render_svg(d: &OneOneDiagram) -> Result<String, DiagramError> {
    let mut canvas = Canvas::new();
    let square_origin = (MARGIN, MARGIN + SCALE);
    draw_square(&mut canvas, d, square_origin);

    // Strips, one per class, stacked below the square.
    let mut y_cursor = MARGIN + SCALE + 60.0;
    for c in 0..d.homology_order() {
        let geo = d.class_geometry(c)?;
        let bigons = d.bigons_of(&geo)?;
        let line_y = rat(geo.level, 1) + rat(1, 2);
        let mut xmin = geo.points[0].x.clone();
        let mut xmax = xmin.clone();
        for p in &geo.points {
            if p.x < xmin {
                xmin = p.x.clone();
            }
            if p.x > xmax {
                xmax = p.x.clone();
            }
        }
        let origin = (
            MARGIN - (xmin.to_f64_approx() - 0.5) * SCALE,
            y_cursor + SCALE * 1.5,
        );
        // Shade bigons first.
        for b in &bigons {
            let arc = {
                let lo = geo
                    .points
                    .iter()
                    .find(|p| p.param == b.param_lo)
                    .expect("corner");
                let hi = geo
                    .points
                    .iter()
                    .find(|p| p.param == b.param_hi)
                    .expect("corner");
                let start = Point::new(lo.x.clone(), line_y.clone());
                let end = Point::new(hi.x.clone(), line_y.clone());
                d.arc_vertices(&start, &end, &lo.param, &hi.param)
            };
            let mut path = String::new();
            for (i, v) in arc.iter().enumerate() {
                let (x, y) = canvas.place(&v.x, &v.y, origin);
                let cmd = if i == 0 { 'M' } else { 'L' };
                let _ = write!(path, "{cmd}{x},{y} ");
            }
            path.push('Z');
            let fill = match b.half_plane {
                HalfPlane::Upper => "#ffd9a0",
                HalfPlane::Lower => "#a0c8ff",
            };
            let _ = writeln!(
                canvas.body,
                r##"<path d="{path}" fill="{fill}" fill-opacity="0.6" stroke="none"/>"##
            );
        }
        // The alpha line of the strip.
        {
            let (x0, y0) = canvas.place(&(&xmin - rat(1, 2)), &line_y, origin);
            let (x1, y1) = canvas.place(&(&xmax + rat(1, 2)), &line_y, origin);
            let _ = writeln!(
                canvas.body,
                r##"<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="#c0392b" stroke-width="1.5"/>"##
            );
        }
        // The beta arcs through all crossings of the class.
        let lo_param = geo
            .points
            .iter()
            .map(|p| p.param.clone())
            .min()
            .expect("nonempty");
        let hi_param = geo
            .points
            .iter()
            .map(|p| p.param.clone())
            .max()
            .expect("nonempty");
        let first = geo.points.iter().find(|p| p.param == lo_param).unwrap();
        let last = geo.points.iter().find(|p| p.param == hi_param).unwrap();
        let verts = d.arc_vertices(
            &Point::new(first.x.clone(), line_y.clone()),
            &Point::new(last.x.clone(), line_y.clone()),
            &lo_param,
            &hi_param,
        );
        let mut path = String::new();
        for (i, v) in verts.iter().enumerate() {
            let (x, y) = canvas.place(&v.x, &v.y, origin);
            let cmd = if i == 0 { 'M' } else { 'L' };
            let _ = write!(path, "{cmd}{x},{y} ");
        }
        let _ = writeln!(
            canvas.body,
            r##"<path d="{}" fill="none" stroke="#2980b9" stroke-width="1.5"/>"##,
            path.trim_end()
        );
        // Crossings.
        for p in &geo.points {
            let (x, y) = canvas.place(&p.x, &line_y, origin);
            let _ = writeln!(
                canvas.body,
                r##"<circle cx="{x}" cy="{y}" r="2.5" fill="#2c3e50"/>"##
            );
        }
        let span = (xmax.to_f64_approx() - xmin.to_f64_approx() + 1.0) * SCALE + 2.0 * MARGIN;
        canvas.width = canvas.width.max(span + MARGIN);
        y_cursor += SCALE * 2.0 + 30.0;
    }
    canvas.height = y_cursor + MARGIN;
    canvas.width = canvas.width.max(SCALE + 2.0 * MARGIN);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{:.0}" height="{:.0}" viewBox="0 0 {:.0} {:.0}">"#,
        canvas.width, canvas.height, canvas.width, canvas.height
    );
    out.push_str(&canvas.body);
    out.push_str("</svg>\n");
    Ok(out)
}

trait ApproxF64 {
    fn to_f64_approx(&self) -> f64;
}

impl ApproxF64 for Rational {
    fn to_f64_approx(&self) -> f64 {
        self.numer().to_f64().unwrap_or(0.0) / self.denom().to_f64().unwrap_or(1.0)
    }
}

/// The fundamental square with alpha, the projected beta, and basepoints.
fn draw_square(canvas: &mut Canvas, d: &OneOneDiagram, origin: (f64, f64)) {
    let _ = writeln!(
        canvas.body,
        r##"<rect x="{:.2}" y="{:.2}" width="{SCALE:.2}" height="{SCALE:.2}" fill="none" stroke="#888" stroke-dasharray="4 3"/>"##,
        origin.0,
        origin.1 - SCALE
    );
    // alpha: y = 1/2
    let (x0, y0) = canvas.place(&rat(0, 1), &rat(1, 2), origin);
    let (x1, y1) = canvas.place(&rat(1, 1), &rat(1, 2), origin);
    let _ = writeln!(
        canvas.body,
        r##"<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" stroke="#c0392b" stroke-width="1.5"/>"##
    );
    // beta: clip each lifted segment's integer translates to the square.
    let k = d.segment_count();
    for i in 0..k {
        let (a, b) = d.lift_segment(i as i64);
        let xlo = a.x.clone().min(b.x.clone()).floor().to_integer().to_i64().unwrap() - 1;
        let xhi = a.x.clone().max(b.x.clone()).ceil().to_integer().to_i64().unwrap() + 1;
        let ylo = a.y.clone().min(b.y.clone()).floor().to_integer().to_i64().unwrap() - 1;
        let yhi = a.y.clone().max(b.y.clone()).ceil().to_integer().to_i64().unwrap() + 1;
        for tx in -xhi..=(-xlo) {
            for ty in -yhi..=(-ylo) {
                let dx = rat(tx, 1);
                let dy = rat(ty, 1);
                let pa = a.translate(&dx, &dy);
                let pb = b.translate(&dx, &dy);
                if let Some((ca, cb)) = clip_unit(&pa, &pb) {
                    let (sx0, sy0) = canvas.place(&ca.x, &ca.y, origin);
                    let (sx1, sy1) = canvas.place(&cb.x, &cb.y, origin);
                    let _ = writeln!(
                        canvas.body,
                        r##"<line x1="{sx0}" y1="{sy0}" x2="{sx1}" y2="{sy1}" stroke="#2980b9" stroke-width="1.2"/>"##
                    );
                }
            }
        }
    }
    // Basepoints: z at the corners, w inside.
    for (x, y, fill) in [
        (rat(0, 1), rat(0, 1), "#2c3e50"),
        (rat(1, 1), rat(0, 1), "#2c3e50"),
        (rat(0, 1), rat(1, 1), "#2c3e50"),
        (rat(1, 1), rat(1, 1), "#2c3e50"),
    ] {
        let (cx, cy) = canvas.place(&x, &y, origin);
        let _ = writeln!(
            canvas.body,
            r##"<circle cx="{cx}" cy="{cy}" r="3" fill="{fill}"/>"##
        );
    }
    let wx = &d.w().x - d.w().x.floor();
    let wy = &d.w().y - d.w().y.floor();
    let (cx, cy) = canvas.place(&wx, &wy, origin);
    let _ = writeln!(
        canvas.body,
        r##"<circle cx="{cx}" cy="{cy}" r="3" fill="none" stroke="#2c3e50" stroke-width="1.2"/>"##
    );
    let _ = dec(&rat(0, 1));
}

/// Clip a segment to the closed unit square; returns None if disjoint.
fn clip_unit(a: &Point, b: &Point) -> Option<(Point, Point)> {
    // Liang-Barsky with exact rationals.
    let mut t0 = rat(0, 1);
    let mut t1 = rat(1, 1);
    let dx = &b.x - &a.x;
    let dy = &b.y - &a.y;
    use num_traits::Zero;
    for (p, q) in [
        (-dx.clone(), a.x.clone()),
        (dx.clone(), rat(1, 1) - &a.x),
        (-dy.clone(), a.y.clone()),
        (dy.clone(), rat(1, 1) - &a.y),
    ] {
        if p.is_zero() {
            if q < rat(0, 1) {
                return None;
            }
            continue;
        }
        let r = &q / &p;
        if p < rat(0, 1) {
            if r > t1 {
                return None;
            }
            if r > t0 {
                t0 = r;
            }
        } else {
            if r < t0 {
                return None;
            }
            if r < t1 {
                t1 = r;
            }
        }
    }
    let pa = Point::new(&a.x + &dx * &t0, &a.y + &dy * &t0);
    let pb = Point::new(&a.x + &dx * &t1, &a.y + &dy * &t1);
    Some((pa, pb))
}

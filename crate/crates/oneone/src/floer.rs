//! Knot Floer chain data of a reduced diagram: generators, vertical and
//! horizontal differential edges, relative Alexander gradings, the
//! positive/negative-chain shape test, the L-space verdict, and Alexander
//! polynomials for diagrams of knots in the three-sphere.

use crate::diagram::{
    Bigon, CoherenceVerdict, DiagramError, GraphicSign, HalfPlane, IntersectionPoint,
    OneOneDiagram,
};
use crate::lattice::{rat, Point};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FloerError {
    #[error("diagram does not present a knot in the three-sphere")]
    NotAnS3Diagram,
    #[error("exponent multiset cannot be symmetrized")]
    NormalizationImpossible,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

/// The chain data of one spin^c class.
#[derive(Clone, Debug)]
pub struct ChainSummand {
    pub class_id: usize,
    /// Generators ordered along the alpha line.
    pub generators: Vec<IntersectionPoint>,
    /// Differential edges as (source index, target index) pairs.
    pub v_edges: Vec<(usize, usize)>,
    pub h_edges: Vec<(usize, usize)>,
    /// Relative Alexander grading per generator (defined up to a shift).
    pub rel_alexander: Vec<i64>,
    pub(crate) signs: Vec<i8>,
}

/// Shape of a chain summand relative to the zig-zag pattern.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainShape {
    /// Zig-zag with even generators mapping out; n = 0 covers the
    /// single-generator case.
    Positive,
    Negative,
    Neither,
}

/// Top-level verdict of the characterization theorem.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LSpaceVerdict {
    PositiveLSpaceKnot,
    NegativeLSpaceKnot,
    /// Simple knot: positive and negative at once.
    Both,
    NotByThisDiagram,
}

/// Build the chain summand of one class of a validated, reduced diagram.
pub fn chain_summand(d: &OneOneDiagram, class_id: usize) -> Result<ChainSummand, FloerError> {
    let geo = d.class_geometry(class_id)?;
    let n = geo.points.len();
    let generators: Vec<IntersectionPoint> =
        (0..n).map(|i| d.intersection_point(&geo, i)).collect();
    let signs: Vec<i8> = geo.points.iter().map(|p| p.sign).collect();

    let bigons = d.bigons_of(&geo)?;
    let mut v_edges = Vec::new();
    let mut h_edges = Vec::new();
    for b in &bigons {
        match (b.n_z, b.n_w) {
            (0, 0) => {
                return Err(FloerError::Internal(
                    "empty bigon in a reduced diagram".into(),
                ))
            }
            (z, 0) if z > 0 => v_edges.push((b.source, b.target)),
            (0, w) if w > 0 => h_edges.push((b.source, b.target)),
            _ => {} // both basepoints: no differential edge
        }
    }

    // Relative Alexander grading: integrate n_z - n_w over the loop made of
    // the alpha segment from x to the base generator and the beta arc back.
    let base = 0usize;
    let mut rel = vec![0i64; n];
    for i in 0..n {
        if i == base {
            continue;
        }
        rel[i] = alexander_difference(d, &geo, i, base)?;
    }
    // Cross-check each differential edge against its bigon multiplicities.
    for b in &bigons {
        let expect = b.n_z as i64 - b.n_w as i64;
        let got = rel[b.source] - rel[b.target];
        if got != expect {
            return Err(FloerError::Internal(format!(
                "grading difference {got} disagrees with bigon multiplicities {expect}"
            )));
        }
    }
    Ok(ChainSummand {
        class_id,
        generators,
        v_edges,
        h_edges,
        rel_alexander: rel,
        signs,
    })
}

/// a(x_i) - a(x_j) by winding numbers of the alpha-segment + beta-arc loop
/// around the basepoint lifts.
fn alexander_difference(
    d: &OneOneDiagram,
    geo: &crate::diagram::ClassGeometry,
    i: usize,
    j: usize,
) -> Result<i64, FloerError> {
    let line_y = rat(geo.level, 1) + rat(1, 2);
    let pi = &geo.points[i];
    let pj = &geo.points[j];
    // Loop: alpha from x_i to x_j, then beta from x_j back to x_i.
    let (arc, reversed) = if pj.param < pi.param {
        (
            d.arc_vertices(
                &Point::new(pj.x.clone(), line_y.clone()),
                &Point::new(pi.x.clone(), line_y.clone()),
                &pj.param,
                &pi.param,
            ),
            false,
        )
    } else {
        (
            d.arc_vertices(
                &Point::new(pi.x.clone(), line_y.clone()),
                &Point::new(pj.x.clone(), line_y.clone()),
                &pi.param,
                &pj.param,
            ),
            true,
        )
    };
    // Orient the loop as: alpha segment x_i -> x_j, then beta arc x_j -> x_i.
    let mut loop_verts = arc;
    if reversed {
        loop_verts.reverse();
    }
    // loop_verts now runs from x_j to x_i along beta; the implicit closing
    // edge x_i -> x_j is the alpha segment.
    let origin = Point::new(rat(0, 1), rat(0, 1));
    let (_, nz) = crate::diagram::lattice_windings_for(&loop_verts, &origin)
        .map_err(|_| FloerError::Internal("basepoint on grading loop".into()))?;
    let (_, nw) = crate::diagram::lattice_windings_for(&loop_verts, d.w())
        .map_err(|_| FloerError::Internal("basepoint on grading loop".into()))?;
    Ok(nz - nw)
}

/// Check whether the summand is a positive or negative chain: an alternating
/// zig-zag path with all sources of even path position (positive) or odd
/// (negative), passing the rank-one contraction checks for both edge sets.
pub fn chain_shape_check(c: &ChainSummand) -> ChainShape {
    let n = c.generators.len();
    if n == 1 {
        return if c.v_edges.is_empty() && c.h_edges.is_empty() {
            ChainShape::Positive
        } else {
            ChainShape::Neither
        };
    }
    let half = n / 2;
    if c.v_edges.len() != half || c.h_edges.len() != half {
        return ChainShape::Neither;
    }
    // Matching condition (rank-one contraction): each edge family must have
    // pairwise distinct endpoints.
    for edges in [&c.v_edges, &c.h_edges] {
        let mut seen = std::collections::BTreeSet::new();
        for &(s, t) in edges.iter() {
            if s == t || !seen.insert(s) || !seen.insert(t) {
                return ChainShape::Neither;
            }
        }
    }
    // Build the undirected adjacency with edge labels.
    #[derive(Clone, Copy, PartialEq)]
    enum Lbl {
        V,
        H,
    }
    let mut adj: Vec<Vec<(usize, Lbl, bool)>> = vec![Vec::new(); n]; // (other, label, outgoing)
    for &(s, t) in &c.v_edges {
        adj[s].push((t, Lbl::V, true));
        adj[t].push((s, Lbl::V, false));
    }
    for &(s, t) in &c.h_edges {
        adj[s].push((t, Lbl::H, true));
        adj[t].push((s, Lbl::H, false));
    }
    // Must be a path: exactly two vertices of degree one, rest degree two.
    let deg1: Vec<usize> = (0..n).filter(|&i| adj[i].len() == 1).collect();
    if deg1.len() != 2 || adj.iter().any(|a| a.len() > 2 || a.is_empty()) {
        return ChainShape::Neither;
    }
    // Walk the path from one end.
    let mut order = vec![deg1[0]];
    let mut labels = Vec::new();
    let mut outgoing = Vec::new();
    let mut prev = usize::MAX;
    let mut cur = deg1[0];
    while order.len() < n {
        let &(nxt, lbl, out) = match adj[cur].iter().find(|&&(o, _, _)| o != prev) {
            Some(e) => e,
            None => return ChainShape::Neither,
        };
        labels.push(lbl);
        outgoing.push(out);
        prev = cur;
        cur = nxt;
        order.push(cur);
    }
    // Labels must alternate along the path.
    if labels.windows(2).any(|w| w[0] == w[1]) {
        return ChainShape::Neither;
    }
    // Sources must alternate strictly: the path looks like
    // t <- s -> t <- s -> ... with every second vertex a double source.
    // outgoing[k] records whether edge k points from order[k] to order[k+1].
    let mut source_parity: Option<usize> = None;
    for k in 0..n - 1 {
        let src_pos = if outgoing[k] { k } else { k + 1 };
        match source_parity {
            None => source_parity = Some(src_pos % 2),
            Some(par) => {
                if src_pos % 2 != par {
                    return ChainShape::Neither;
                }
            }
        }
    }
    match source_parity {
        // Even path positions are targets x1, x3, ...: sources sit at odd
        // 0-based positions exactly for a positive chain ordered x1..x_{2n+1}.
        Some(1) => ChainShape::Positive,
        Some(0) => ChainShape::Negative,
        _ => ChainShape::Neither,
    }
}

/// The L-space verdict of Theorem 1.2, cross-checked class by class against
/// the chain-shape test.
pub fn lspace_verdict(d: &OneOneDiagram) -> Result<LSpaceVerdict, FloerError> {
    let coherence = d.coherence()?;
    let mut shapes = Vec::new();
    let mut singles = 0usize;
    for c in 0..d.homology_order() {
        let summand = chain_summand(d, c)?;
        let single = summand.generators.len() == 1;
        if single {
            singles += 1;
        }
        shapes.push((chain_shape_check(&summand), single));
        // Graphic sign must match the chain shape (Prop 2.7).
        let graphic = d.graphic_sign(c)?;
        let consistent = match (graphic, shapes.last().unwrap().0) {
            (GraphicSign::Either, ChainShape::Positive) => single,
            (GraphicSign::Positive, ChainShape::Positive) => true,
            (GraphicSign::Negative, ChainShape::Negative) => true,
            (GraphicSign::None, ChainShape::Neither) => true,
            _ => false,
        };
        if !consistent {
            return Err(FloerError::Internal(format!(
                "class {c}: graphic sign {graphic:?} vs chain shape {:?}",
                shapes.last().unwrap().0
            )));
        }
    }
    let all_pos = shapes
        .iter()
        .all(|&(s, single)| s == ChainShape::Positive || single);
    let all_neg = shapes
        .iter()
        .all(|&(s, single)| s == ChainShape::Negative || (single && s == ChainShape::Positive));
    let all_single = singles == shapes.len();
    let verdict = match coherence {
        CoherenceVerdict::Both => LSpaceVerdict::Both,
        CoherenceVerdict::Positive => LSpaceVerdict::PositiveLSpaceKnot,
        CoherenceVerdict::Negative => LSpaceVerdict::NegativeLSpaceKnot,
        CoherenceVerdict::Incoherent => LSpaceVerdict::NotByThisDiagram,
    };
    let chain_consistent = match verdict {
        LSpaceVerdict::Both => all_single,
        LSpaceVerdict::PositiveLSpaceKnot => all_pos && !all_single,
        LSpaceVerdict::NegativeLSpaceKnot => all_neg && !all_single,
        LSpaceVerdict::NotByThisDiagram => !all_pos && !all_neg,
    };
    if !chain_consistent {
        return Err(FloerError::Internal(format!(
            "coherence {coherence:?} disagrees with chain shapes {shapes:?}"
        )));
    }
    Ok(verdict)
}

/// A Laurent polynomial with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    coeffs: BTreeMap<i64, i64>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coeff: i64) -> Self {
        let mut p = Self::default();
        p.add_term(exp, coeff);
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let e = self.coeffs.entry(exp).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    pub fn degree_span(&self) -> Option<(i64, i64)> {
        let min = self.coeffs.keys().next()?;
        let max = self.coeffs.keys().next_back()?;
        Some((*min, *max))
    }

    /// Substitute t -> 1/t.
    pub fn reversed(&self) -> Self {
        let mut p = Self::default();
        for (&e, &c) in &self.coeffs {
            p.add_term(-e, c);
        }
        p
    }

    pub fn shifted(&self, by: i64) -> Self {
        let mut p = Self::default();
        for (&e, &c) in &self.coeffs {
            p.add_term(e + by, c);
        }
        p
    }

    pub fn negated(&self) -> Self {
        let mut p = Self::default();
        for (&e, &c) in &self.coeffs {
            p.add_term(e, -c);
        }
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut p = Self::default();
        for (&e1, &c1) in &self.coeffs {
            for (&e2, &c2) in &other.coeffs {
                p.add_term(e1 + e2, c1 * c2);
            }
        }
        p
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut p = self.clone();
        for (&e, &c) in &other.coeffs {
            p.add_term(e, c);
        }
        p
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, &c) in self.coeffs.iter().rev() {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            match e {
                0 => write!(f, "{a}")?,
                1 if a == 1 => write!(f, "t")?,
                1 => write!(f, "{a}*t")?,
                _ if a == 1 => write!(f, "t^{e}")?,
                _ => write!(f, "{a}*t^{e}")?,
            }
        }
        Ok(())
    }
}

/// The Alexander polynomial of a diagram of a knot in the three-sphere,
/// normalized to be symmetric with value 1 at t = 1.
pub fn alexander_polynomial(d: &OneOneDiagram) -> Result<LaurentPolynomial, FloerError> {
    if d.homology_order() != 1 {
        return Err(FloerError::NotAnS3Diagram);
    }
    let summand = chain_summand(d, 0)?;
    let mut poly = LaurentPolynomial::zero();
    for (i, a) in summand.rel_alexander.iter().enumerate() {
        poly.add_term(*a, summand.signs[i] as i64);
    }
    normalize_alexander(poly)
}

/// Symmetrize the exponents and fix the sign so the value at 1 is +1.
pub fn normalize_alexander(poly: LaurentPolynomial) -> Result<LaurentPolynomial, FloerError> {
    if poly.is_zero() {
        return Err(FloerError::NormalizationImpossible);
    }
    let (lo, hi) = poly.degree_span().unwrap();
    if (lo + hi) % 2 != 0 {
        return Err(FloerError::NormalizationImpossible);
    }
    let shift = -(lo + hi) / 2;
    let mut p = poly.shifted(shift);
    if p != p.reversed() {
        return Err(FloerError::NormalizationImpossible);
    }
    match p.eval_at_one() {
        1 => {}
        -1 => p = p.negated(),
        _ => return Err(FloerError::NormalizationImpossible),
    }
    Ok(p)
}

/// All bigons of the diagram across classes, for reporting.
pub fn all_bigons(d: &OneOneDiagram) -> Result<Vec<Bigon>, FloerError> {
    let mut out = Vec::new();
    for c in 0..d.homology_order() {
        out.extend(d.bigons(c)?);
    }
    Ok(out)
}

/// Convenience: count the rainbow bigons over each basepoint.
pub fn bigon_census(d: &OneOneDiagram) -> Result<(usize, usize), FloerError> {
    let mut upper = 0;
    let mut lower = 0;
    for b in all_bigons(d)? {
        match b.half_plane {
            HalfPlane::Upper => upper += 1,
            HalfPlane::Lower => lower += 1,
        }
    }
    Ok((upper, lower))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laurent_display() {
        let mut p = LaurentPolynomial::zero();
        p.add_term(3, 1);
        p.add_term(-3, 1);
        p.add_term(0, -1);
        assert_eq!(p.to_string(), "t^3 - 1 + t^-3");
    }

    #[test]
    fn normalize_alternating_seven() {
        // t^6 - t^5 + ... + 1 symmetrizes to the T(2,7) polynomial.
        let mut p = LaurentPolynomial::zero();
        for e in 0..=6 {
            p.add_term(e, if e % 2 == 0 { 1 } else { -1 });
        }
        let n = normalize_alexander(p).unwrap();
        let mut want = LaurentPolynomial::zero();
        for e in -3..=3i64 {
            want.add_term(e, if (e + 3) % 2 == 0 { 1 } else { -1 });
        }
        assert_eq!(n, want);
        assert_eq!(n.eval_at_one(), 1);
        assert_eq!(n, n.reversed());
    }

    #[test]
    fn unsymmetric_multiset_rejected() {
        let mut p = LaurentPolynomial::zero();
        p.add_term(0, 1);
        p.add_term(1, 1);
        p.add_term(2, -1);
        assert_eq!(
            normalize_alexander(p),
            Err(FloerError::NormalizationImpossible)
        );
    }
}

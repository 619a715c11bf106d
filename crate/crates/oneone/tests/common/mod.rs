//! Shared fixtures and independent oracles for the integration tests.

#![allow(dead_code)]

pub mod burau;

use oneone::diagram::{from_standard_form, geodesic_diagram, meander_diagram, CaptureWord};
use oneone::floer::LaurentPolynomial;
use oneone::lattice::LatticeVec;
use oneone::OneOneDiagram;

/// Fig. 1 bottom: a reduced diagram of the torus knot T(2,7), staple form.
pub fn t27_a() -> OneOneDiagram {
    from_standard_form(7, 4, 3, 4).expect("T(2,7) staple form")
}

/// Fig. 1 bottom: a second reduced diagram of T(2,7), zigzag form.
pub fn t27_b() -> OneOneDiagram {
    meander_diagram(&[
        CaptureWord::W(0),
        CaptureWord::Z(0),
        CaptureWord::W(-1),
        CaptureWord::Z(-1),
        CaptureWord::W(-2),
        CaptureWord::Z(-2),
    ])
    .expect("T(2,7) zigzag form")
}

/// Fig. 1 top: a reduced diagram of the twist knot 5_2.
pub fn five2_a() -> OneOneDiagram {
    from_standard_form(7, 1, 3, 0).expect("5_2 staple form")
}

/// Fig. 1 top: a second reduced diagram of 5_2.
pub fn five2_b() -> OneOneDiagram {
    from_standard_form(7, 2, 3, 6).expect("5_2 staple form, second")
}

/// A one-crossing diagram of the unknot in the three-sphere.
pub fn unknot() -> OneOneDiagram {
    geodesic_diagram(LatticeVec::new(0, 1)).expect("unknot geodesic")
}

/// A geodesic diagram of a simple knot in the lens space of order five.
pub fn lens_simple() -> OneOneDiagram {
    geodesic_diagram(LatticeVec::new(2, 5)).expect("L(5,2) simple knot")
}

/// The Alexander polynomial of the torus knot T(p, q), from the quotient
/// formula (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), symmetrized.
pub fn torus_alexander(p: u32, q: u32) -> LaurentPolynomial {
    // (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)) as a polynomial product:
    // expand numerator and divide exactly.
    let cyc = |n: u32| -> Vec<i64> {
        // t^n - 1
        let mut v = vec![0i64; n as usize + 1];
        v[0] = -1;
        v[n as usize] = 1;
        v
    };
    let num = burau::poly_mul(&cyc(p * q), &cyc(1));
    let den = burau::poly_mul(&cyc(p), &cyc(q));
    let quot = burau::poly_div_exact(&num, &den).expect("torus formula divides");
    let mut out = LaurentPolynomial::zero();
    for (e, &c) in quot.iter().enumerate() {
        out.add_term(e as i64, c);
    }
    oneone::floer::normalize_alexander(out).expect("torus polynomial normalizes")
}

/// The spec'd polynomial of the (-2,3,7) pretzel knot.
pub fn pretzel_237() -> LaurentPolynomial {
    let mut p = LaurentPolynomial::zero();
    for (e, c) in [
        (5, 1),
        (4, -1),
        (2, 1),
        (1, -1),
        (0, 1),
        (-1, -1),
        (-2, 1),
        (-4, -1),
        (-5, 1),
    ] {
        p.add_term(e, c);
    }
    p
}

/// The Alexander polynomial of the twist knot 5_2.
pub fn five2_alexander() -> LaurentPolynomial {
    let mut p = LaurentPolynomial::zero();
    p.add_term(1, 2);
    p.add_term(0, -3);
    p.add_term(-1, 2);
    p
}

mod common;

use common::*;
use oneone::floer::{
    alexander_polynomial, chain_shape_check, chain_summand, lspace_verdict, ChainShape,
    FloerError, LSpaceVerdict,
};

#[test]
fn t27_chain_is_a_positive_zigzag() {
    for d in [t27_a(), t27_b()] {
        let c = chain_summand(&d, 0).unwrap();
        assert_eq!(c.generators.len(), 7);
        assert_eq!(c.v_edges.len(), 3);
        assert_eq!(c.h_edges.len(), 3);
        assert_eq!(chain_shape_check(&c), ChainShape::Positive);
        // Relative Alexander gradings take seven consecutive values.
        let mut a = c.rel_alexander.clone();
        a.sort();
        let base = a[0];
        let normalized: Vec<i64> = a.iter().map(|x| x - base).collect();
        assert_eq!(normalized, vec![0, 1, 2, 3, 4, 5, 6]);
    }
}

#[test]
fn grading_drops_match_bigon_multiplicities() {
    let d = t27_a();
    let c = chain_summand(&d, 0).unwrap();
    for &(s, t) in &c.v_edges {
        assert_eq!(c.rel_alexander[s] - c.rel_alexander[t], 1);
    }
    for &(s, t) in &c.h_edges {
        assert_eq!(c.rel_alexander[s] - c.rel_alexander[t], -1);
    }
}

#[test]
fn five2_chain_fails_the_shape_test() {
    let c = chain_summand(&five2_a(), 0).unwrap();
    assert_eq!(c.generators.len(), 7);
    assert_eq!(chain_shape_check(&c), ChainShape::Neither);
}

#[test]
fn single_generator_is_degenerate_positive() {
    let c = chain_summand(&unknot(), 0).unwrap();
    assert_eq!(c.generators.len(), 1);
    assert!(c.v_edges.is_empty() && c.h_edges.is_empty());
    assert_eq!(chain_shape_check(&c), ChainShape::Positive);
}

#[test]
fn lspace_verdicts() {
    assert_eq!(
        lspace_verdict(&t27_a()).unwrap(),
        LSpaceVerdict::PositiveLSpaceKnot
    );
    assert_eq!(
        lspace_verdict(&five2_a()).unwrap(),
        LSpaceVerdict::NotByThisDiagram
    );
    assert_eq!(lspace_verdict(&lens_simple()).unwrap(), LSpaceVerdict::Both);
    assert_eq!(lspace_verdict(&unknot()).unwrap(), LSpaceVerdict::Both);
}

#[test]
fn unknot_alexander_is_one() {
    let p = alexander_polynomial(&unknot()).unwrap();
    assert_eq!(p.to_string(), "1");
    assert_eq!(p.eval_at_one(), 1);
}

#[test]
fn t27_alexander_matches_torus_formula() {
    let expect = torus_alexander(2, 7);
    assert_eq!(alexander_polynomial(&t27_a()).unwrap(), expect);
    assert_eq!(alexander_polynomial(&t27_b()).unwrap(), expect);
    assert_eq!(
        expect.to_string(),
        "t^3 - t^2 + t - 1 + t^-1 - t^-2 + t^-3"
    );
}

#[test]
fn five2_alexander_value() {
    assert_eq!(alexander_polynomial(&five2_a()).unwrap(), five2_alexander());
    assert_eq!(alexander_polynomial(&five2_b()).unwrap(), five2_alexander());
}

#[test]
fn alexander_rejects_lens_space_diagrams() {
    assert!(matches!(
        alexander_polynomial(&lens_simple()),
        Err(FloerError::NotAnS3Diagram)
    ));
}

#[test]
fn alexander_is_symmetric_and_one_at_one() {
    for d in [t27_a(), five2_a(), unknot()] {
        let p = alexander_polynomial(&d).unwrap();
        assert_eq!(p, p.reversed());
        assert_eq!(p.eval_at_one(), 1);
    }
}

#[test]
fn generator_counts_sum_to_intersection_count() {
    for d in [t27_a(), five2_a(), lens_simple(), unknot()] {
        let total = d.intersections().unwrap().len();
        let by_class: usize = (0..d.homology_order())
            .map(|c| chain_summand(&d, c).unwrap().generators.len())
            .sum();
        assert_eq!(total, by_class);
    }
}

#[test]
fn burau_oracle_reproduces_torus_knots() {
    // Trefoil: closure of sigma_1^3 in B_2.
    let tref = common::burau::alexander_of_braid_closure(&[1, 1, 1], 2).unwrap();
    assert_eq!(tref, torus_alexander(2, 3));
    // T(2,7): closure of sigma_1^7 in B_2.
    let t27 = common::burau::alexander_of_braid_closure(&[1; 7], 2).unwrap();
    assert_eq!(t27, torus_alexander(2, 7));
    // T(3,4): closure of (sigma_1 sigma_2)^4 in B_3.
    let t34 =
        common::burau::alexander_of_braid_closure(&[1, 2, 1, 2, 1, 2, 1, 2], 3).unwrap();
    assert_eq!(t34, torus_alexander(3, 4));
}

#[test]
fn burau_oracle_on_bridge_braid_word() {
    // K(7,4,2) closes up in the three-sphere to the (-2,3,7) pretzel.
    let word = common::burau::bridge_braid_word(7, 4, 2);
    let alex = common::burau::alexander_of_braid_closure(&word, 7).unwrap();
    assert_eq!(alex, pretzel_237());
}

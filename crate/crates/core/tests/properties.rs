mod common;

use common::*;

#[test]
fn cyclotomic_field_axioms() {
    field_axioms(1, 40).unwrap();
}

#[test]
fn rank_plus_nullity_is_width() {
    rank_nullity(2, 60).unwrap();
}

#[test]
fn coboundary_squares_to_zero() {
    differential_squares_to_zero(3, 4).unwrap();
}

#[test]
fn bar_ui_family_is_yetter_drinfeld() {
    yd_validation(4, 12).unwrap();
}

#[test]
fn yoneda_product_graded_commutes_mod_coboundaries() {
    graded_commutativity(5, 2).unwrap();
}

#[test]
fn hom_equals_invariants_of_tensor_with_dual() {
    hom_tensor_adjunction(6, 30).unwrap();
}

//! One test per registered property; see `common::registry`.

mod common;

#[test]
fn rational_axioms() {
    common::check("rational_axioms");
}

#[test]
fn divide_by_integer_round_trip() {
    common::check("divide_by_integer_round_trip");
}

#[test]
fn rational_normalization() {
    common::check("rational_normalization");
}

#[test]
fn poly_axioms() {
    common::check("poly_axioms");
}

#[test]
fn evaluation_homomorphism() {
    common::check("evaluation_homomorphism");
}

#[test]
fn derivative_rules() {
    common::check("derivative_rules");
}

#[test]
fn poly_text_round_trip() {
    common::check("poly_text_round_trip");
}

#[test]
fn wedge_graded_commutativity() {
    common::check("wedge_graded_commutativity");
}

#[test]
fn wedge_associativity() {
    common::check("wedge_associativity");
}

#[test]
fn even_forms_satisfy_axioms() {
    common::check("even_forms_satisfy_axioms");
}

#[test]
fn nilpotency() {
    common::check("nilpotency");
}

#[test]
fn form_text_round_trip() {
    common::check("form_text_round_trip");
}

#[test]
fn mat_mul_associative() {
    common::check("mat_mul_associative");
}

#[test]
fn trace_of_product_commutes() {
    common::check("trace_of_product_commutes");
}

#[test]
fn j_left_mul_matches_product() {
    common::check("j_left_mul_matches_product");
}

#[test]
fn matrix_file_round_trip() {
    common::check("matrix_file_round_trip");
}

#[test]
fn charpoly_identities() {
    common::check("charpoly_identities");
}

#[test]
fn determinant_multiplicative() {
    common::check("determinant_multiplicative");
}

#[test]
fn determinant_matches_cofactor() {
    common::check("determinant_matches_cofactor");
}

#[test]
fn pfaffian_squared_is_determinant() {
    common::check("pfaffian_squared_is_determinant");
}

#[test]
fn pfaffian_congruence() {
    common::check("pfaffian_congruence");
}

#[test]
fn pfaffian_swap_sign() {
    common::check("pfaffian_swap_sign");
}

#[test]
fn pfaffian_three_way_agreement() {
    common::check("pfaffian_three_way_agreement");
}

#[test]
fn pfaffian_j_independence() {
    common::check("pfaffian_j_independence");
}

#[test]
fn laplace_pivot_independence() {
    common::check("laplace_pivot_independence");
}

#[test]
fn pfaff_adjugate_identities() {
    common::check("pfaff_adjugate_identities");
}

#[test]
fn psi_polynomial() {
    common::check("psi_polynomial");
}

#[test]
fn euler_frame_invariance() {
    common::check("euler_frame_invariance");
}

#[test]
fn euler_signed_permutation_invariance() {
    common::check("euler_signed_permutation_invariance");
}

#[test]
fn euler_matches_matchings() {
    common::check("euler_matches_matchings");
}

#[test]
fn bench_digest_agreement() {
    common::check("bench_digest_agreement");
}

#[test]
fn registry_names_are_unique() {
    let reg = common::registry();
    let mut names: Vec<&str> = reg.iter().map(|p| p.name).collect();
    names.sort_unstable();
    names.dedup();
    assert_eq!(names.len(), reg.len());
}

use linord::facets::{
    classify, closure_check, enumerate_facets, parse_hrep, pullback_facet, vertex_census,
    FacetClass, HRepresentation, Inequality,
};
use linord::polytope::{lop_vertices, Basis};
use linord::Rational;
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn census_n5_every_facet_has_sixty_vertices() {
    let vs = lop_vertices(5, Basis::K).unwrap();
    let h = enumerate_facets(&vs).unwrap();
    assert_eq!(h.len(), 40);
    let census = vertex_census(&h, &vs).unwrap();
    assert!(census.iter().all(|c| c.tight_vertices == 60));
    assert!(closure_check(&h, &vs).passed());
}

#[test]
fn facets_of_lop_match_the_templates() {
    // Every facet at n <= 5 is x_ij >= 0, x_ij <= 1 or a 3-cycle inequality,
    // and every template instance occurs.
    for n in 3..=5usize {
        let vs = lop_vertices(n, Basis::K).unwrap();
        let h = enumerate_facets(&vs).unwrap();
        let counts = h.class_counts();
        let pairs = n * (n - 1) / 2;
        let triples = n * (n - 1) * (n - 2) / 6;
        assert_eq!(counts.get(&FacetClass::TrivialLower), Some(&pairs));
        assert_eq!(counts.get(&FacetClass::TrivialUpper), Some(&pairs));
        assert_eq!(counts.get(&FacetClass::ThreeCycle), Some(&(2 * triples)));
        assert_eq!(counts.get(&FacetClass::Other), None);
    }
}

#[test]
fn all_pullbacks_n5_are_maximal_facets() {
    let previous = lop_vertices(4, Basis::K).unwrap();
    let h = enumerate_facets(&previous).unwrap();
    for f in &h.facets {
        let pb = pullback_facet(5, &f.inequality).unwrap();
        assert!(pb.is_facet, "{}", pb.inequality);
        assert_eq!(pb.tight_vertices, 60);
        match classify(&f.inequality) {
            FacetClass::ThreeCycle => assert_eq!(pb.class, FacetClass::ThreeCycle),
            _ => assert!(pb.class.is_maximal_type()),
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    let vs = lop_vertices(4, Basis::K).unwrap();
    let a = enumerate_facets(&vs).unwrap().to_text();
    let b = enumerate_facets(&vs).unwrap().to_text();
    assert_eq!(a, b);
}

#[test]
fn parsed_inequalities_reproduce_the_tight_sets() {
    let vs = lop_vertices(4, Basis::K).unwrap();
    let h = enumerate_facets(&vs).unwrap();
    let (n, parsed) = parse_hrep(&h.to_text()).unwrap();
    assert_eq!(HRepresentation::from_inequalities(n, parsed, &vs), h);
}

fn inequality(n: usize) -> impl Strategy<Value = Inequality> {
    let dim = n * (n - 1) / 2;
    (prop::collection::vec(-20i64..=20, dim), -20i64..=20)
        .prop_map(move |(a, b)| Inequality::from_integers(n, &a, b).unwrap())
}

proptest! {
    #[test]
    fn hrep_text_round_trip(ineqs in prop::collection::vec(inequality(4), 0..12)) {
        let vs = lop_vertices(4, Basis::K).unwrap();
        let h = HRepresentation::from_inequalities(4, ineqs.clone(), &vs);
        let (n, parsed) = parse_hrep(&h.to_text()).unwrap();
        prop_assert_eq!(n, 4);
        prop_assert_eq!(parsed, ineqs);
    }

    #[test]
    fn canonical_form_ignores_positive_scaling(ineq in inequality(3), k in 1i64..50) {
        let scaled = Inequality::new(
            3,
            ineq.coefficients.iter().map(|c| c * k).collect(),
            &ineq.rhs * BigInt::from(k),
        )
        .unwrap();
        prop_assert_eq!(&scaled, &ineq);
        let x: Vec<Rational> = (0..3).map(|i| Rational::from_integer(BigInt::from(i))).collect();
        prop_assert_eq!(scaled.holds_at(&x), ineq.holds_at(&x));
    }
}

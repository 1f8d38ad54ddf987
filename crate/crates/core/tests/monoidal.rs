use std::sync::Arc;

use catk_core::fixtures;
use catk_core::monoidal::{
    cartesian_structure, check_interchange, check_monoidal_structure, check_symmetric_structure, first_product_chooser,
    monoidal_from_products, product_category, MonoidalError, MonoidalStructure, MonoidalView, SymmetricStructure,
};
use catk_core::universal::find_terminals;
use catk_core::{Law, ObjId};

#[test]
fn divisor_posets_are_cartesian_symmetric_monoidal() {
    for n in [12u64, 30] {
        let p = Arc::new(fixtures::divisor_poset(n));
        let (m, s) = cartesian_structure(&p).unwrap();
        let report = check_monoidal_structure(&m);
        assert!(report.is_empty(), "div{n}: {report}");
        let report = check_symmetric_structure(&m, &s);
        assert!(report.is_empty(), "div{n}: {report}");
        let objs: Vec<ObjId> = p.object_ids().collect();
        assert!(check_interchange(&m, &objs, 0).is_empty());
        // a poset is thin, so the structure is strict exactly when everything is an identity
        assert!(m.strict());
    }
}

#[test]
fn explicit_chooser_agrees() {
    let p = Arc::new(fixtures::divisor_poset(12));
    let t = find_terminals(&p)[0];
    let m = monoidal_from_products(&p, first_product_chooser(&p), t).unwrap();
    let (four, six) = (p.object("4").unwrap(), p.object("6").unwrap());
    assert_eq!(p.object_name(m.tensor_obj(&four, &six)), "2");
    assert_eq!(p.object_name(m.unit()), "12");
    assert_eq!(
        monoidal_from_products(&p, |_, _| None, t).unwrap_err(),
        MonoidalError::MissingProduct("1".into(), "1".into())
    );
}

#[test]
fn walking_arrow_has_products() {
    // A ≤ B is a two-element lattice: meets are products, B is terminal
    let wa = Arc::new(fixtures::walking_arrow());
    let (m, s) = cartesian_structure(&wa).unwrap();
    assert!(check_monoidal_structure(&m).is_empty());
    assert!(check_symmetric_structure(&m, &s).is_empty());
    let sq = product_category(&wa, &wa);
    assert_eq!(m.tensor().source_category().num_morphisms(), sq.num_morphisms());
}

#[test]
fn missing_products_and_terminal() {
    let d = Arc::new(fixtures::discrete(2));
    assert!(matches!(cartesian_structure(&d), Err(MonoidalError::MissingProduct(..))));
    // Z/2 has no products: hom(pt, pt) has two elements, the pairing map would need four
    let z2 = Arc::new(fixtures::z2());
    assert!(matches!(cartesian_structure(&z2), Err(MonoidalError::MissingProduct(..))));
}

#[test]
fn z2_mutated_associator() {
    let z2 = Arc::new(fixtures::z2());
    let m = MonoidalStructure::strict_monoid(z2.clone()).unwrap();
    assert!(check_monoidal_structure(&m).is_empty());
    let s = z2.morphism("s").unwrap();
    let bad = m.with_associator(ObjId(0), ObjId(0), ObjId(0), s, s).unwrap();
    let report = check_monoidal_structure(&bad);
    assert!(report.count(Law::Pentagon) > 0, "{report}");
    assert!(report.count(Law::Strictness) > 0);
}

#[test]
fn s3_identity_braiding() {
    let s3 = Arc::new(fixtures::s3());
    let m = MonoidalStructure::strict_monoid(s3.clone()).unwrap();
    // composition in a non-commutative group is not a bifunctor on S3 × S3
    assert!(check_monoidal_structure(&m).count(Law::Bifunctor) > 0);
    let s = SymmetricStructure::identity(&m).unwrap();
    assert!(check_symmetric_structure(&m, &s).count(Law::Naturality) > 0);
    let z2 = Arc::new(fixtures::z2());
    let mz = MonoidalStructure::strict_monoid(z2).unwrap();
    let sz = SymmetricStructure::identity(&mz).unwrap();
    assert!(check_symmetric_structure(&mz, &sz).is_empty());
}

mod oracles;

use std::sync::Arc;

use catk_core::fixtures;
use catk_core::functor::{
    cat_category, check_functor_laws, check_naturality, compose_functors, enumerate_functors, FunctorData,
    NatTransData,
};
use catk_core::kernel::{check_category_laws, FinCategory};
use catk_core::{Law, ObjId, DEFAULT_INSTANCE_BUDGET};

fn small_fixtures() -> Vec<(&'static str, Arc<FinCategory>)> {
    vec![
        ("trivial", fixtures::trivial()),
        ("walking arrow", fixtures::walking_arrow()),
        ("Z/2", fixtures::z2()),
        ("S3", fixtures::s3()),
        ("chain", fixtures::chain3()),
        ("parallel", fixtures::parallel_pair()),
        ("discrete 2", fixtures::discrete(2)),
        ("indiscrete 2", fixtures::indiscrete(2)),
    ]
    .into_iter()
    .map(|(n, c)| (n, Arc::new(c)))
    .collect()
}

#[test]
fn enumeration_matches_brute_force() {
    let cats = small_fixtures();
    for (cn, c) in &cats {
        for (dn, d) in &cats {
            let fs = enumerate_functors(c, d);
            assert_eq!(fs.len(), oracles::brute_force_functor_count(c, d), "{cn} -> {dn}");
            for f in &fs {
                assert!(check_functor_laws(f).is_empty(), "{cn} -> {dn}");
            }
        }
    }
}

#[test]
fn known_counts() {
    let wa = Arc::new(fixtures::walking_arrow());
    assert_eq!(enumerate_functors(&wa, &wa).len(), 3);
    let z2 = Arc::new(fixtures::z2());
    let s3 = Arc::new(fixtures::s3());
    // homomorphisms Z/2 -> S3: identity plus the three transpositions
    assert_eq!(enumerate_functors(&z2, &s3).len(), 4);
    // the trivial homomorphism and the sign
    assert_eq!(enumerate_functors(&s3, &z2).len(), 2);
}

#[test]
fn cat_on_three_fixtures() {
    let cats: Vec<(String, Arc<FinCategory>)> = vec![
        ("One".into(), Arc::new(fixtures::trivial())),
        ("Arrow".into(), Arc::new(fixtures::walking_arrow())),
        ("Z2".into(), Arc::new(fixtures::z2())),
    ];
    let cat = cat_category(&cats, DEFAULT_INSTANCE_BUDGET).unwrap();
    assert!(check_category_laws(&cat.category).is_empty());
    for (i, (_, c)) in cats.iter().enumerate() {
        for (k, (_, d)) in cats.iter().enumerate() {
            assert_eq!(cat.category.hom(ObjId(i), ObjId(k)).len(), enumerate_functors(c, d).len());
        }
    }
    assert!(cat_category(&cats, 5).is_err());
}

#[test]
fn composition_of_functors_is_lawful() {
    let wa = Arc::new(fixtures::walking_arrow());
    let chain = Arc::new(fixtures::chain3());
    for f in enumerate_functors(&wa, &chain) {
        for g in enumerate_functors(&chain, &wa) {
            let fg = compose_functors(&f, &g).unwrap();
            assert!(check_functor_laws(&fg).is_empty());
        }
    }
}

#[test]
fn naturality_and_its_violation() {
    let wa = Arc::new(fixtures::walking_arrow());
    let fs = enumerate_functors(&wa, &wa);
    let id = FunctorData::identity(wa.clone());
    assert!(check_naturality(&NatTransData::identity(id.clone())).is_empty());
    // constant at A => identity, with components id_A and f
    let a = wa.object("A").unwrap();
    let f = wa.morphism("f").unwrap();
    let const_a = fs.iter().find(|g| g.obj_map() == [a, a]).unwrap().clone();
    let t = NatTransData::new(const_a.clone(), id.clone(), vec![wa.identity(a), f]).unwrap();
    assert!(check_naturality(&t).is_empty());
    let z2 = Arc::new(fixtures::z2());
    let idz = FunctorData::identity(z2.clone());
    let s = z2.morphism("s").unwrap();
    // in a commutative group every element is a natural endo-transformation of the identity
    assert!(check_naturality(&NatTransData::new(idz.clone(), idz, vec![s]).unwrap()).is_empty());
    let s3 = Arc::new(fixtures::s3());
    let ids3 = FunctorData::identity(s3.clone());
    let swap = s3.morphism("p102").unwrap();
    let report = check_naturality(&NatTransData::new(ids3.clone(), ids3, vec![swap]).unwrap());
    assert!(report.count(Law::Naturality) > 0);
}

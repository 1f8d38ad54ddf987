//! Terminal and initial objects, binary products and coproducts in finite
//! categories. Universal properties are decided by sweeping every cone;
//! the dual notions are computed in the opposite category.

use thiserror::Error;

use crate::kernel::{opposite_category, FinCategory, MorId, ObjId};
use crate::report::{Law, LawReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UniversalError {
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("ill-typed witness: {0}")]
    IllTypedWitness(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TerminalWitness {
    pub object: ObjId,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct InitialWitness {
    pub object: ObjId,
}

/// A product cone `left ← apex → right`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProductWitness {
    pub left: ObjId,
    pub right: ObjId,
    pub apex: ObjId,
    pub proj_l: MorId,
    pub proj_r: MorId,
}

/// A coproduct cocone `left → apex ← right`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoproductWitness {
    pub left: ObjId,
    pub right: ObjId,
    pub apex: ObjId,
    pub inj_l: MorId,
    pub inj_r: MorId,
}

impl From<CoproductWitness> for ProductWitness {
    fn from(w: CoproductWitness) -> Self {
        ProductWitness { left: w.left, right: w.right, apex: w.apex, proj_l: w.inj_l, proj_r: w.inj_r }
    }
}

impl From<ProductWitness> for CoproductWitness {
    fn from(w: ProductWitness) -> Self {
        CoproductWitness { left: w.left, right: w.right, apex: w.apex, inj_l: w.proj_l, inj_r: w.proj_r }
    }
}

fn require(cat: &FinCategory, a: ObjId) -> Result<(), UniversalError> {
    if a.0 < cat.num_objects() {
        Ok(())
    } else {
        Err(UniversalError::UnknownObject(format!("#{}", a.0)))
    }
}

/// Empty iff every hom-set into `t` is a singleton.
pub fn check_terminal(cat: &FinCategory, t: ObjId) -> Result<LawReport, UniversalError> {
    require(cat, t)?;
    let mut report = LawReport::new();
    for a in cat.object_ids() {
        let n = cat.hom(a, t).len();
        if n != 1 {
            let (law, what) = if n == 0 {
                (Law::UniversalExistence, "no morphism".to_string())
            } else {
                (Law::UniversalUniqueness, format!("{n} morphisms"))
            };
            report.push(
                law,
                vec![cat.object_name(a).to_string(), cat.object_name(t).to_string()],
                format!("{what} from {} to {}", cat.object_name(a), cat.object_name(t)),
            );
        }
    }
    Ok(report)
}

pub fn find_terminals(cat: &FinCategory) -> Vec<TerminalWitness> {
    cat.object_ids()
        .filter(|&t| cat.object_ids().all(|a| cat.hom(a, t).len() == 1))
        .map(|object| TerminalWitness { object })
        .collect()
}

/// Terminal objects of the opposite category.
pub fn find_initials(cat: &FinCategory) -> Vec<InitialWitness> {
    find_terminals(&opposite_category(cat)).into_iter().map(|w| InitialWitness { object: w.object }).collect()
}

pub fn check_initial(cat: &FinCategory, i: ObjId) -> Result<LawReport, UniversalError> {
    check_terminal(&opposite_category(cat), i)
}

/// All `m : c → apex` with `m ; proj_l = f` and `m ; proj_r = g`.
pub fn mediators(cat: &FinCategory, w: &ProductWitness, f: MorId, g: MorId) -> Vec<MorId> {
    let c = cat.source(f);
    cat.hom(c, w.apex)
        .iter()
        .copied()
        .filter(|&m| cat.compose(m, w.proj_l) == Ok(f) && cat.compose(m, w.proj_r) == Ok(g))
        .collect()
}

fn check_product_typing(cat: &FinCategory, w: &ProductWitness) -> Result<(), UniversalError> {
    for o in [w.left, w.right, w.apex] {
        require(cat, o)?;
    }
    let typed = |m: MorId, tgt: ObjId| {
        m.0 < cat.num_morphisms() && cat.source(m) == w.apex && cat.target(m) == tgt
    };
    if !typed(w.proj_l, w.left) || !typed(w.proj_r, w.right) {
        return Err(UniversalError::IllTypedWitness(format!(
            "projections must be {} -> {} and {} -> {}",
            cat.object_name(w.apex),
            cat.object_name(w.left),
            cat.object_name(w.apex),
            cat.object_name(w.right)
        )));
    }
    Ok(())
}

/// Count mediating morphisms for every cone `(c, f: c → left, g: c → right)`
/// and report each cone where the count is not exactly one.
pub fn check_product(cat: &FinCategory, w: &ProductWitness) -> Result<LawReport, UniversalError> {
    check_product_typing(cat, w)?;
    let mut report = LawReport::new();
    for c in cat.object_ids() {
        for &f in cat.hom(c, w.left) {
            for &g in cat.hom(c, w.right) {
                let n = mediators(cat, w, f, g).len();
                if n == 1 {
                    continue;
                }
                let witnesses = vec![
                    cat.object_name(c).to_string(),
                    cat.morphism_name(f).to_string(),
                    cat.morphism_name(g).to_string(),
                ];
                if n == 0 {
                    report.push(
                        Law::UniversalExistence,
                        witnesses,
                        format!(
                            "no mediating morphism {} -> {} for the cone ({}, {})",
                            cat.object_name(c),
                            cat.object_name(w.apex),
                            cat.morphism_name(f),
                            cat.morphism_name(g)
                        ),
                    );
                } else {
                    report.push(
                        Law::UniversalUniqueness,
                        witnesses,
                        format!(
                            "{n} mediating morphisms {} -> {} for the cone ({}, {})",
                            cat.object_name(c),
                            cat.object_name(w.apex),
                            cat.morphism_name(f),
                            cat.morphism_name(g)
                        ),
                    );
                }
            }
        }
    }
    Ok(report)
}

/// Every product witness for `(a, b)`, ordered by apex, then projections.
pub fn find_products(cat: &FinCategory, a: ObjId, b: ObjId) -> Result<Vec<ProductWitness>, UniversalError> {
    require(cat, a)?;
    require(cat, b)?;
    let mut out = Vec::new();
    for apex in cat.object_ids() {
        for &proj_l in cat.hom(apex, a) {
            for &proj_r in cat.hom(apex, b) {
                let w = ProductWitness { left: a, right: b, apex, proj_l, proj_r };
                if check_product(cat, &w)?.is_empty() {
                    out.push(w);
                }
            }
        }
    }
    Ok(out)
}

/// Product check in the opposite category.
pub fn check_coproduct(cat: &FinCategory, w: &CoproductWitness) -> Result<LawReport, UniversalError> {
    check_product(&opposite_category(cat), &ProductWitness::from(*w))
}

pub fn find_coproducts(cat: &FinCategory, a: ObjId, b: ObjId) -> Result<Vec<CoproductWitness>, UniversalError> {
    Ok(find_products(&opposite_category(cat), a, b)?.into_iter().map(CoproductWitness::from).collect())
}

/// A pair of mutually inverse morphisms `a → b → a`, if any.
pub fn isomorphism(cat: &FinCategory, a: ObjId, b: ObjId) -> Option<(MorId, MorId)> {
    for &f in cat.hom(a, b) {
        for &g in cat.hom(b, a) {
            if cat.compose(f, g) == Ok(cat.identity(a)) && cat.compose(g, f) == Ok(cat.identity(b)) {
                return Some((f, g));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn obj(cat: &FinCategory, name: &str) -> ObjId {
        cat.object(name).unwrap()
    }

    #[test]
    fn terminal_objects() {
        let wa = fixtures::walking_arrow();
        assert_eq!(find_terminals(&wa), vec![TerminalWitness { object: obj(&wa, "B") }]);
        assert!(check_terminal(&wa, obj(&wa, "B")).unwrap().is_empty());
        let d = fixtures::discrete(2);
        assert!(find_terminals(&d).is_empty());
        assert_eq!(check_terminal(&d, ObjId(0)).unwrap().count(Law::UniversalExistence), 1);
        let p = fixtures::divisor_poset(12);
        assert_eq!(find_terminals(&p), vec![TerminalWitness { object: obj(&p, "12") }]);
        assert_eq!(check_terminal(&p, ObjId(99)), Err(UniversalError::UnknownObject("#99".into())));
    }

    #[test]
    fn initial_objects_by_duality() {
        let p = fixtures::divisor_poset(12);
        assert_eq!(find_initials(&p), vec![InitialWitness { object: obj(&p, "1") }]);
        assert!(check_initial(&p, obj(&p, "1")).unwrap().is_empty());
        assert!(find_initials(&fixtures::discrete(2)).is_empty());
    }

    #[test]
    fn products_in_the_divisor_poset() {
        let p = fixtures::divisor_poset(12);
        let apexes = |a, b| -> Vec<String> {
            find_products(&p, obj(&p, a), obj(&p, b))
                .unwrap()
                .iter()
                .map(|w| p.object_name(w.apex).to_string())
                .collect()
        };
        assert_eq!(apexes("2", "3"), vec!["1"]);
        assert_eq!(apexes("4", "6"), vec!["2"]);
        let co: Vec<String> = find_coproducts(&p, obj(&p, "2"), obj(&p, "3"))
            .unwrap()
            .iter()
            .map(|w| p.object_name(w.apex).to_string())
            .collect();
        assert_eq!(co, vec!["6"]);
    }

    #[test]
    fn ill_typed_product_witness() {
        let p = fixtures::divisor_poset(12);
        // 6 -> 2 does not exist, so borrow any morphism out of 6 as a fake projection
        let six = obj(&p, "6");
        let m = p.hom(six, obj(&p, "12"))[0];
        let w = ProductWitness { left: obj(&p, "2"), right: obj(&p, "3"), apex: six, proj_l: m, proj_r: m };
        assert!(matches!(check_product(&p, &w), Err(UniversalError::IllTypedWitness(_))));
    }

    #[test]
    fn trivial_and_discrete_products() {
        let t = fixtures::trivial();
        let pt = ObjId(0);
        let id = t.identity(pt);
        let w = ProductWitness { left: pt, right: pt, apex: pt, proj_l: id, proj_r: id };
        assert!(check_product(&t, &w).unwrap().is_empty());
        let d = fixtures::discrete(2);
        assert!(find_products(&d, ObjId(0), ObjId(1)).unwrap().is_empty());
    }

    #[test]
    fn removing_the_mediator_breaks_the_product() {
        let p = fixtures::divisor_poset(12);
        let w = find_products(&p, obj(&p, "4"), obj(&p, "6")).unwrap()[0];
        // drop 1 -> 2: the cone from 1 loses its mediator
        let one = obj(&p, "1");
        let gone = p.hom(one, w.apex)[0];
        let sub = p.restrict(|m| m != gone).unwrap();
        let w2 = ProductWitness {
            left: w.left,
            right: w.right,
            apex: w.apex,
            proj_l: sub.morphism(p.morphism_name(w.proj_l)).unwrap(),
            proj_r: sub.morphism(p.morphism_name(w.proj_r)).unwrap(),
        };
        let report = check_product(&sub, &w2).unwrap();
        assert!(report.count(Law::UniversalExistence) >= 1);
    }

    #[test]
    fn terminal_objects_are_isomorphic() {
        // two-object indiscrete category: both objects terminal
        let c = fixtures::indiscrete(2);
        let ts = find_terminals(&c);
        assert_eq!(ts.len(), 2);
        assert!(isomorphism(&c, ts[0].object, ts[1].object).is_some());
    }
}

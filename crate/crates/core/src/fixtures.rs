//! Small standard categories and quivers used throughout the tests and the CLI
//! examples.

use crate::kernel::{FinCategory, FinCategoryBuilder};
use crate::quiver::{monoid_as_category, FiniteMonoid, Quiver};

/// One object, only its identity.
pub fn trivial() -> FinCategory {
    let mut b = FinCategoryBuilder::new();
    b.object("pt");
    b.build().expect("fixture")
}

/// `A --f--> B`.
pub fn walking_arrow() -> FinCategory {
    let mut b = FinCategoryBuilder::new();
    b.objects(["A", "B"]).morphism("f", "A", "B");
    b.build().expect("fixture")
}

/// `n` objects named `X0, X1, ...` and no non-identity morphisms.
pub fn discrete(n: usize) -> FinCategory {
    let mut b = FinCategoryBuilder::new();
    b.objects((0..n).map(|i| format!("X{i}")));
    b.build().expect("fixture")
}

/// `n` objects with exactly one morphism between any two.
pub fn indiscrete(n: usize) -> FinCategory {
    let mut b = FinCategoryBuilder::new();
    b.objects((0..n).map(|i| format!("X{i}")));
    let name = |i: usize, j: usize| if i == j { format!("id_X{i}") } else { format!("u{i}_{j}") };
    for i in 0..n {
        for j in 0..n {
            if i != j {
                b.morphism(name(i, j), format!("X{i}"), format!("X{j}"));
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i != j && j != k {
                    b.compose(name(i, j), name(j, k), name(i, k));
                }
            }
        }
    }
    b.build().expect("fixture")
}

/// Two parallel arrows `f, g : A → B`.
pub fn parallel_pair() -> FinCategory {
    let mut b = FinCategoryBuilder::new();
    b.objects(["A", "B"]).morphism("f", "A", "B").morphism("g", "A", "B");
    b.build().expect("fixture")
}

/// `A --f--> B --g--> C` with `f ; g = h`.
pub fn chain3() -> FinCategory {
    let mut b = FinCategoryBuilder::new();
    b.objects(["A", "B", "C"])
        .morphism("f", "A", "B")
        .morphism("g", "B", "C")
        .morphism("h", "A", "C")
        .compose("f", "g", "h");
    b.build().expect("fixture")
}

pub fn z2_monoid() -> FiniteMonoid {
    FiniteMonoid::from_rows(&["e", "s"], "e", &[&["e", "s"], &["s", "e"]]).expect("fixture")
}

/// Z/2 as a one-object category with elements `e` (identity) and `s`.
pub fn z2() -> FinCategory {
    monoid_as_category(&z2_monoid())
}

/// The six permutations of `{0, 1, 2}`, named by their image lists (`p120`
/// sends 0↦1, 1↦2, 2↦0), in lexicographic order.
pub fn s3_elements() -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                if a != b && b != c && a != c {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

pub fn s3_name(p: &[usize; 3]) -> String {
    format!("p{}{}{}", p[0], p[1], p[2])
}

/// The symmetric group on three letters as a monoid; `p ; q` applies `p` first.
pub fn s3_monoid() -> FiniteMonoid {
    let elems = s3_elements();
    let names: Vec<String> = elems.iter().map(s3_name).collect();
    FiniteMonoid::new(&names, "p012", |i, j| {
        let (p, q) = (elems[i], elems[j]);
        let r = [q[p[0]], q[p[1]], q[p[2]]];
        elems.iter().position(|&x| x == r).expect("closed under composition")
    })
    .expect("fixture")
}

pub fn s3() -> FinCategory {
    monoid_as_category(&s3_monoid())
}

/// Divisors of `n` ordered by divisibility; `mX_Y : X → Y` whenever `X | Y`.
pub fn divisor_poset(n: u64) -> FinCategory {
    let divs: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    let mut b = FinCategoryBuilder::new();
    b.objects(divs.iter().map(u64::to_string));
    let name = |x: u64, y: u64| if x == y { format!("id_{x}") } else { format!("m{x}_{y}") };
    for &x in &divs {
        for &y in &divs {
            if x != y && y % x == 0 {
                b.morphism(name(x, y), x.to_string(), y.to_string());
            }
        }
    }
    for &x in &divs {
        for &y in &divs {
            for &z in &divs {
                if x != y && y != z && y % x == 0 && z % y == 0 {
                    b.compose(name(x, y), name(y, z), name(x, z));
                }
            }
        }
    }
    b.build().expect("fixture")
}

/// Nodes `A, B`, edges `a : A → B` and `b : B → A`.
pub fn ab_quiver() -> Quiver {
    Quiver::new(&["A", "B"], &[("a", "A", "B"), ("b", "B", "A")]).expect("fixture")
}

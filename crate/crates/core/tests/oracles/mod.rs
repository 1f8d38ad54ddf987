//! Independent reference computations. Nothing here calls the enumerators it
//! is compared against.
#![allow(dead_code)]

use catk_core::kernel::{FinCategory, MorId, ObjId};
use catk_core::quiver::Quiver;
use catk_core::smc::{Diagram, OutPort};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// `Σ_{ℓ ≤ max_len} (A^ℓ)[a][b]` for the edge-count adjacency matrix `A`.
pub fn path_count_by_matrix_powers(q: &Quiver, a: usize, b: usize, max_len: usize) -> u128 {
    let n = q.num_nodes();
    let mut adj = vec![vec![0u128; n]; n];
    for e in q.edge_ids() {
        let edge = q.edge(e);
        adj[edge.src.0][edge.tgt.0] += 1;
    }
    let mut power: Vec<Vec<u128>> = (0..n).map(|i| (0..n).map(|j| u128::from(i == j)).collect()).collect();
    let mut total = power[a][b];
    for _ in 0..max_len {
        let mut next = vec![vec![0u128; n]; n];
        for i in 0..n {
            for k in 0..n {
                if power[i][k] == 0 {
                    continue;
                }
                for j in 0..n {
                    next[i][j] += power[i][k] * adj[k][j];
                }
            }
        }
        power = next;
        total += power[a][b];
    }
    total
}

/// A quiver with `1..=max_nodes` nodes and `0..=max_edges` random edges.
pub fn random_quiver(seed: u64, max_nodes: usize, max_edges: usize) -> Quiver {
    let mut rng = StdRng::seed_from_u64(seed);
    let n = rng.random_range(1..=max_nodes);
    let m = rng.random_range(0..=max_edges);
    let nodes: Vec<String> = (0..n).map(|i| format!("N{i}")).collect();
    let edges: Vec<(String, String, String)> = (0..m)
        .map(|i| {
            let s = rng.random_range(0..n);
            let t = rng.random_range(0..n);
            (format!("e{i}"), nodes[s].clone(), nodes[t].clone())
        })
        .collect();
    Quiver::new(&nodes, &edges).expect("names are distinct")
}

/// Count functors by testing every well-typed raw assignment of objects and
/// morphisms against the functor laws.
pub fn brute_force_functor_count(c: &FinCategory, d: &FinCategory) -> usize {
    let n_obj = c.num_objects();
    let n_mor = c.num_morphisms();
    let mut count = 0;
    let mut obj_map = vec![0usize; n_obj];
    loop {
        let objs: Vec<ObjId> = obj_map.iter().map(|&i| ObjId(i)).collect();
        // every morphism of D with the right endpoints, ignoring identity and composition
        let choices: Vec<Vec<MorId>> = c
            .morphism_ids()
            .map(|f| {
                let (a, b) = (objs[c.source(f).0], objs[c.target(f).0]);
                d.morphism_ids().filter(|&g| d.source(g) == a && d.target(g) == b).collect()
            })
            .collect();
        let mut idx = vec![0usize; n_mor];
        if choices.iter().all(|ch| !ch.is_empty()) {
            loop {
                let mor: Vec<MorId> = (0..n_mor).map(|k| choices[k][idx[k]]).collect();
                let ids = c.object_ids().all(|a| mor[c.identity(a).0] == d.identity(objs[a.0]));
                let comp = c.morphism_ids().all(|f| {
                    c.morphism_ids().filter(|&g| c.target(f) == c.source(g)).all(|g| {
                        let h = c.compose(f, g).unwrap();
                        d.compose(mor[f.0], mor[g.0]) == Ok(mor[h.0])
                    })
                });
                if ids && comp {
                    count += 1;
                }
                if !odometer(&mut idx, |k| choices[k].len()) {
                    break;
                }
            }
        }
        if n_obj == 0 {
            return count;
        }
        if d.num_objects() == 0 || !odometer(&mut obj_map, |_| d.num_objects()) {
            return count;
        }
    }
}

/// Advance a mixed-radix counter; false once it wraps around.
pub fn odometer(digits: &mut [usize], radix: impl Fn(usize) -> usize) -> bool {
    for i in (0..digits.len()).rev() {
        digits[i] += 1;
        if digits[i] < radix(i) {
            return true;
        }
        digits[i] = 0;
    }
    false
}

/// All permutations of `0..n` by recursive insertion.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Number of bijective maps among all `n^n` maps from output positions to
/// input positions.
pub fn brute_force_wiring_count(n: usize) -> usize {
    let mut digits = vec![0usize; n];
    let mut count = 0;
    loop {
        let mut seen = vec![false; n];
        if digits.iter().all(|&d| !std::mem::replace(&mut seen[d], true)) {
            count += 1;
        }
        if n == 0 || !odometer(&mut digits, |_| n) {
            return count;
        }
    }
}

/// Codomain position `j` reads domain position `p[j]`.
pub fn permutation_of(d: &Diagram) -> Vec<usize> {
    d.outputs()
        .iter()
        .map(|p| match *p {
            OutPort::Dom(i) => i,
            OutPort::Box(..) => panic!("not a permutation diagram"),
        })
        .collect()
}

/// Diagrammatic composite in the same reading convention.
pub fn then_perm(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&j| p[j]).collect()
}

/// Pointwise table composition, `f` first.
pub fn then_table(f: &[usize], g: &[usize]) -> Vec<usize> {
    f.iter().map(|&x| g[x]).collect()
}

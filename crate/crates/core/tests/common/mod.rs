//! Shared fixtures and brute-force oracles for the integration suites.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use poset_forge::field::{Field, Gf};
use poset_forge::poset::Poset;

pub fn sphere() -> Arc<Poset> {
    Arc::new(
        Poset::from_covers(
            &["1", "2", "3", "4", "5", "6"],
            &[
                ("1", "3"),
                ("1", "4"),
                ("2", "3"),
                ("2", "4"),
                ("3", "5"),
                ("3", "6"),
                ("4", "5"),
                ("4", "6"),
            ],
        )
        .unwrap(),
    )
}

pub fn crown4() -> Arc<Poset> {
    Arc::new(
        Poset::from_covers(&["a", "b", "c", "d"], &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])
            .unwrap(),
    )
}

pub fn a3() -> Arc<Poset> {
    Arc::new(Poset::from_covers(&["a", "b", "c"], &[("a", "b"), ("a", "c")]).unwrap())
}

pub fn section7() -> Arc<Poset> {
    Arc::new(
        Poset::from_covers(
            &["x", "y", "z", "t", "s"],
            &[("x", "y"), ("x", "z"), ("y", "t"), ("y", "s"), ("z", "t"), ("z", "s")],
        )
        .unwrap(),
    )
}

/// The zigzag x0 < x1 > x2 < x3 > ... on n elements.
pub fn fence(n: usize) -> Poset {
    let labels: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let mut pairs = Vec::new();
    for i in 0..n.saturating_sub(1) {
        if i % 2 == 0 {
            pairs.push((i, i + 1));
        } else {
            pairs.push((i + 1, i));
        }
    }
    Poset::from_relation_pairs(labels, &pairs).unwrap()
}

/// Every poset on n elements admitting the natural linear extension
/// (i < j in the order implies i < j numerically). Every isomorphism class
/// appears at least once.
pub fn natural_posets(n: usize) -> Vec<Poset> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let chosen: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(k, _)| mask >> k & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        // transitive already?
        let mut rel = vec![false; n * n];
        for &(a, b) in &chosen {
            rel[a * n + b] = true;
        }
        let mut transitive = true;
        'check: for a in 0..n {
            for b in 0..n {
                if !rel[a * n + b] {
                    continue;
                }
                for c in 0..n {
                    if rel[b * n + c] && !rel[a * n + c] {
                        transitive = false;
                        break 'check;
                    }
                }
            }
        }
        if !transitive {
            continue;
        }
        let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
        out.push(Poset::from_relation_pairs(labels, &chosen).unwrap());
    }
    out
}

/// Canonical key of a poset up to isomorphism (minimum relation bitstring
/// over all permutations); n <= 7.
pub fn iso_key(p: &Poset) -> Vec<bool> {
    let n = p.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    loop {
        let mut key = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                key[perm[i] * n + perm[j]] = p.leq(i, j);
            }
        }
        match &best {
            None => best = Some(key),
            Some(b) if key < *b => best = Some(key),
            _ => {}
        }
        // next permutation
        let mut i = n.wrapping_sub(1);
        while i > 0 && perm[i - 1] >= perm[i] {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let mut j = n - 1;
        while perm[j] <= perm[i - 1] {
            j -= 1;
        }
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    best.unwrap()
}

/// One representative per isomorphism class.
pub fn dedup_posets(posets: Vec<Poset>) -> Vec<Poset> {
    let mut seen = std::collections::HashSet::new();
    posets.into_iter().filter(|p| seen.insert(iso_key(p))).collect()
}

/// Brute-force enumeration of closed subposets straight from the
/// definition: every (subset, sub-relation) pair that is reflexive,
/// transitive, antisymmetric and closed under subintervals.
pub fn brute_force_closed_subposets(p: &Poset) -> Vec<(Vec<usize>, Vec<(usize, usize)>)> {
    let n = p.len();
    let mut out = Vec::new();
    for subset_mask in 0u64..(1u64 << n) {
        let members: Vec<usize> = (0..n).filter(|&i| subset_mask >> i & 1 == 1).collect();
        let candidate_pairs: Vec<(usize, usize)> = members
            .iter()
            .flat_map(|&a| members.iter().map(move |&b| (a, b)))
            .filter(|&(a, b)| p.lt(a, b))
            .collect();
        for rel_mask in 0u64..(1u64 << candidate_pairs.len()) {
            let rel: Vec<(usize, usize)> = candidate_pairs
                .iter()
                .enumerate()
                .filter(|&(k, _)| rel_mask >> k & 1 == 1)
                .map(|(_, &q)| q)
                .collect();
            let has = |a: usize, b: usize| a == b || rel.contains(&(a, b));
            // transitivity
            let transitive = rel.iter().all(|&(a, b)| {
                rel.iter().all(|&(b2, c)| b != b2 || has(a, c))
            });
            if !transitive {
                continue;
            }
            // closure under subintervals
            let closed = rel.iter().all(|&(x, y)| {
                (0..n).all(|z| {
                    if p.leq(x, z) && p.leq(z, y) {
                        members.contains(&z) && has(x, z) && has(z, y)
                    } else {
                        true
                    }
                })
            });
            if !closed {
                continue;
            }
            out.push((members.clone(), rel));
        }
    }
    out
}

/// All thin module structures over F_q on a poset, as (support set, scalar
/// on each strict interval, zero allowed): the action constraint is
/// a(x,z) = a(x,y) a(y,z) against every middle vertex of every interval.
pub fn brute_force_thin_structures(p: &Poset, f: &Gf) -> Vec<BTreeMap<(usize, usize), u32>> {
    let n = p.len();
    let strict: Vec<(usize, usize)> = p
        .intervals()
        .into_iter()
        .filter(|&(a, b)| a != b)
        .collect();
    let q = f.q() as u64;
    let mut out = Vec::new();
    for support_mask in 0u64..(1u64 << n) {
        let members: Vec<usize> = (0..n).filter(|&i| support_mask >> i & 1 == 1).collect();
        let live: Vec<(usize, usize)> = strict
            .iter()
            .copied()
            .filter(|&(a, b)| members.contains(&a) && members.contains(&b))
            .collect();
        let combos = q.pow(live.len() as u32);
        for combo in 0..combos {
            let mut a: BTreeMap<(usize, usize), u32> = BTreeMap::new();
            for &m in &members {
                a.insert((m, m), 1);
            }
            let mut c = combo;
            for &pair in &live {
                let v = (c % q) as u32;
                c /= q;
                if v != 0 {
                    a.insert(pair, v);
                }
            }
            let value = |x: usize, y: usize| -> u32 { a.get(&(x, y)).copied().unwrap_or(0) };
            // associativity of the action against every middle vertex
            let mut ok = true;
            'law: for x in 0..n {
                for z in 0..n {
                    if !p.leq(x, z) {
                        continue;
                    }
                    for y in 0..n {
                        if p.leq(x, y) && p.leq(y, z) {
                            let lhs = value(x, z);
                            let rhs = f.mul(&value(x, y), &value(y, z));
                            if lhs != rhs {
                                ok = false;
                                break 'law;
                            }
                        }
                    }
                }
            }
            if ok {
                out.push(a);
            }
        }
    }
    out
}

/// Isomorphism classes of brute-force thin structures under diagonal
/// rescaling, counted exhaustively.
pub fn brute_force_thin_class_count(p: &Poset, f: &Gf) -> usize {
    let structures = brute_force_thin_structures(p, f);
    let n = p.len();
    let units: Vec<u32> = f.units().collect();
    let mut classes: Vec<BTreeMap<(usize, usize), u32>> = Vec::new();
    'next: for s in structures {
        let members: Vec<usize> =
            (0..n).filter(|&i| s.contains_key(&(i, i))).collect();
        for rep in &classes {
            if rep.keys().collect::<Vec<_>>() != s.keys().collect::<Vec<_>>() {
                continue;
            }
            // exhaust all diagonal rescalings theta on the support
            let k = members.len();
            let total = units.len().pow(k as u32);
            for t in 0..total {
                let mut theta = BTreeMap::new();
                let mut c = t;
                for &m in &members {
                    theta.insert(m, units[c % units.len()]);
                    c /= units.len();
                }
                let matches = s.iter().all(|(&(x, y), &v)| {
                    if x == y {
                        return true;
                    }
                    let w = rep[&(x, y)];
                    // v = theta_x^{-1} w theta_y
                    let lhs = f.mul(&theta[&x], &v);
                    let rhs = f.mul(&w, &theta[&y]);
                    lhs == rhs
                });
                if matches {
                    continue 'next;
                }
            }
        }
        classes.push(s);
    }
    classes.len()
}

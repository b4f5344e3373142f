//! Closed-subposet enumeration against the brute-force definition, wedge
//! laws on the enumerated family, and automorphism/removal properties on
//! generated posets.

mod common;

use std::collections::BTreeSet;

use poset_forge::poset::Poset;

fn as_key(members: &[usize], rel: &[(usize, usize)]) -> (Vec<usize>, Vec<(usize, usize)>) {
    let mut r = rel.to_vec();
    r.sort_unstable();
    (members.to_vec(), r)
}

#[test]
fn closed_subposets_match_brute_force() {
    let mut cases: Vec<Poset> = vec![
        Poset::chain(2),
        Poset::chain(4),
        (*common::a3()).clone(),
        (*common::crown4()).clone(),
        (*common::section7()).clone(),
        (*common::sphere()).clone(),
    ];
    cases.extend(common::natural_posets(4));
    for p in cases {
        let fast: BTreeSet<_> = p
            .closed_subposets()
            .iter()
            .map(|s| as_key(s.members(), &s.strict_pairs()))
            .collect();
        let brute: BTreeSet<_> = common::brute_force_closed_subposets(&p)
            .iter()
            .map(|(m, r)| as_key(m, r))
            .collect();
        assert_eq!(fast, brute, "closed subposets differ on {:?}", p.elements());
        assert_eq!(fast.len(), p.closed_subposets().len(), "duplicates in enumeration");
    }
}

#[test]
fn closure_invariant_holds_pointwise() {
    for p in [(*common::sphere()).clone(), (*common::section7()).clone()] {
        for s in p.closed_subposets() {
            for (x, y) in s.strict_pairs() {
                for z in 0..p.len() {
                    if p.leq(x, z) && p.leq(z, y) {
                        assert!(s.contains(z));
                        assert!(s.rel(x, z) && s.rel(z, y));
                    }
                }
            }
        }
    }
}

#[test]
fn wedge_laws_on_the_enumerated_family() {
    let p = (*common::a3()).clone();
    let subs = p.closed_subposets();
    for a in &subs {
        assert_eq!(a.wedge(a).unwrap(), *a);
        for b in &subs {
            let ab = a.wedge(b).unwrap();
            assert_eq!(ab, b.wedge(a).unwrap());
            assert!(subs.contains(&ab), "wedge stays in the family");
            for c in &subs {
                assert_eq!(
                    ab.wedge(c).unwrap(),
                    a.wedge(&b.wedge(c).unwrap()).unwrap()
                );
            }
        }
    }
}

#[test]
fn automorphism_group_properties_on_generated_posets() {
    for p in common::dedup_posets(common::natural_posets(4)) {
        let g = p.automorphism_group();
        assert!(g[0].is_identity());
        for a in &g {
            assert!(a.preserves(&p));
            assert!(g.contains(&a.inverse()));
            for b in &g {
                assert!(g.contains(&a.compose(b)));
            }
        }
        let covers: BTreeSet<_> = p.hasse_covers().into_iter().collect();
        for a in &g {
            let mapped: BTreeSet<_> =
                covers.iter().map(|&(x, y)| (a.apply(x), a.apply(y))).collect();
            assert_eq!(mapped, covers);
        }
    }
}

#[test]
fn removable_extremal_walks_every_connected_poset_down() {
    let mut posets = common::dedup_posets(common::natural_posets(5));
    posets.push((*common::sphere()).clone());
    for p in posets {
        if !p.is_connected() || p.len() < 2 {
            continue;
        }
        let mut cur = p;
        while cur.len() > 1 {
            let x = cur.removable_extremal().unwrap();
            let mins = cur.minimal_elements();
            let maxs = cur.maximal_elements();
            assert!(mins.contains(&x) || maxs.contains(&x), "extremal vertex");
            let rest: Vec<usize> = (0..cur.len()).filter(|&y| y != x).collect();
            cur = cur.induced(&rest);
            assert!(cur.is_connected(), "removal keeps connectivity");
        }
    }
}

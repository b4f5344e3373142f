//! Tensor structure of thin representations: the pointwise tensor product
//! on the (support, cocycle) invariant, the undeformed semigroup
//! (Cl(P), wedge), meet-semilattice detection, and the K_0 table.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Field, Gf};
use crate::poset::{ClosedSubposet, MeetFailure, Poset, DEFAULT_ENUMERATION_LIMIT};
use crate::thin::{reps_isomorphic, ThinRep};

/// M tensor N on the invariant: support is the wedge of supports, the
/// cocycle multiplies pointwise on the wedge.
pub fn tensor<F: Field>(m: &ThinRep<F>, n: &ThinRep<F>) -> Result<ThinRep<F>> {
    if m.parent() != n.parent() || m.field() != n.field() {
        return Err(Error::MismatchedParent);
    }
    let f = m.field();
    let support = m.support().wedge(n.support())?;
    let mut alpha = BTreeMap::new();
    for (x, y) in support.strict_pairs() {
        let a = m.alpha(x, y).expect("wedge relation is in both supports");
        let b = n.alpha(x, y).expect("wedge relation is in both supports");
        alpha.insert((x, y), f.mul(a, b));
    }
    ThinRep::new(f.clone(), support, &alpha)
}

/// The Cayley table of (Cl(P), wedge): entry (i, j) is the index of the
/// wedge of subposets i and j in the enumeration order.
#[derive(Debug, Clone)]
pub struct WedgeSemigroup {
    pub subposets: Vec<ClosedSubposet>,
    pub table: Vec<Vec<usize>>,
}

impl WedgeSemigroup {
    pub fn identity_index(&self) -> usize {
        // the full subposet is the unit
        self.subposets
            .iter()
            .position(|s| {
                s.len() == s.parent().len()
                    && s.strict_pairs().len()
                        == s.parent().intervals().len() - s.parent().len()
            })
            .expect("the full subposet is closed")
    }
}

pub fn undeformed_semigroup(poset: &Poset) -> Result<WedgeSemigroup> {
    undeformed_semigroup_with_limit(poset, DEFAULT_ENUMERATION_LIMIT)
}

pub fn undeformed_semigroup_with_limit(poset: &Poset, limit: usize) -> Result<WedgeSemigroup> {
    let subposets = poset.closed_subposets_with_limit(limit)?;
    let index_of = |s: &ClosedSubposet| -> usize {
        subposets.iter().position(|t| t == s).expect("wedge of closed subposets is closed")
    };
    let mut table = Vec::with_capacity(subposets.len());
    for a in &subposets {
        let mut row = Vec::with_capacity(subposets.len());
        for b in &subposets {
            row.push(index_of(&a.wedge(b)?));
        }
        table.push(row);
    }
    Ok(WedgeSemigroup { subposets, table })
}

/// Whether every pair of elements has an infimum; on failure the witness
/// pair with its maximal common lower bounds.
pub fn is_meet_semilattice(poset: &Poset) -> (bool, Option<MeetFailure>) {
    match poset.meet_semilattice_witness() {
        Ok(()) => (true, None),
        Err(w) => (false, Some(w)),
    }
}

/// The K_0 multiplication table of a meet-semilattice: P(x) tensor P(y) =
/// P(x meet y) identifies K_0 with the semigroup algebra of (P, meet).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct K0Table {
    pub elements: Vec<String>,
    /// meet[x][y] as an element index
    pub meet: Vec<Vec<usize>>,
}

pub fn k0_table(poset: &Poset) -> Result<K0Table> {
    if let Err(w) = poset.meet_semilattice_witness() {
        return Err(Error::NotMeetSemilattice {
            x: poset.label(w.x).to_string(),
            y: poset.label(w.y).to_string(),
        });
    }
    let n = poset.len();
    let mut meet = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            meet[x][y] = poset.meet(x, y).expect("meet-semilattice");
        }
    }
    Ok(K0Table { elements: poset.elements().to_vec(), meet })
}

/// The projective P(x) as a thin representation: principal down-set with
/// the full induced relation and the trivial cocycle.
pub fn projective_rep<F: Field>(poset: &Arc<Poset>, field: F, x: usize) -> ThinRep<F> {
    let members: Vec<usize> = (0..poset.len()).filter(|&z| poset.leq(z, x)).collect();
    let pairs: Vec<(usize, usize)> = members
        .iter()
        .flat_map(|&a| members.iter().map(move |&b| (a, b)))
        .filter(|&(a, b)| poset.lt(a, b))
        .collect();
    let support =
        ClosedSubposet::new(poset.clone(), members, &pairs).expect("down-sets are closed");
    ThinRep::new(field, support, &BTreeMap::new()).expect("trivial cocycle")
}

/// Checks P(x) tensor P(y) ~ P(x meet y) across the whole table.
pub fn verify_k0_categorification(poset: &Arc<Poset>, field: &Gf) -> Result<bool> {
    let table = k0_table(poset)?;
    let n = poset.len();
    for x in 0..n {
        for y in 0..n {
            let t = tensor(
                &projective_rep(poset, field.clone(), x),
                &projective_rep(poset, field.clone(), y),
            )?;
            let expected = projective_rep(poset, field.clone(), table.meet[x][y]);
            if reps_isomorphic(&t, &expected)?.is_none() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::thin::classify_thin;

    fn a3() -> Arc<Poset> {
        Arc::new(Poset::from_covers(&["a", "b", "c"], &[("a", "b"), ("a", "c")]).unwrap())
    }

    fn crown() -> Arc<Poset> {
        Arc::new(
            Poset::from_covers(&["a", "b", "c", "d"], &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]).unwrap(),
        )
    }

    fn section7_poset() -> Arc<Poset> {
        Arc::new(
            Poset::from_covers(
                &["x", "y", "z", "t", "s"],
                &[("x", "y"), ("x", "z"), ("y", "t"), ("y", "s"), ("z", "t"), ("z", "s")],
            )
            .unwrap(),
        )
    }

    fn f5() -> Gf {
        Gf::new(5).unwrap()
    }

    fn rep_with_support(p: &Arc<Poset>, members: Vec<usize>, pairs: &[(usize, usize)]) -> ThinRep<Gf> {
        let s = ClosedSubposet::new(p.clone(), members, pairs).unwrap();
        ThinRep::new(f5(), s, &BTreeMap::new()).unwrap()
    }

    #[test]
    fn a3_dimension_vector_product() {
        // (1,1,0) tensor (0,1,1) = (0,1,0) in the order (a,b,c)
        let p = a3();
        let m = rep_with_support(&p, vec![0, 1], &[(0, 1)]);
        assert_eq!(m.dimension_vector(), vec![1, 1, 0]);
        let n = rep_with_support(&p, vec![1, 2], &[]);
        assert_eq!(n.dimension_vector(), vec![0, 1, 1]);
        let t = tensor(&m, &n).unwrap();
        assert_eq!(t.dimension_vector(), vec![0, 1, 0]);
    }

    #[test]
    fn defining_rep_is_a_unit() {
        let p = crown();
        let f = f5();
        let unit = ThinRep::defining(p.clone(), f.clone());
        for m in classify_thin(&p, &f).unwrap() {
            let t = tensor(&m, &unit).unwrap();
            assert_eq!(t, m);
            let t = tensor(&unit, &m).unwrap();
            assert_eq!(t, m);
        }
    }

    #[test]
    fn section7_projectives_tensor() {
        let p = section7_poset();
        let f = f5();
        let t_idx = p.index_of("t").unwrap();
        let s_idx = p.index_of("s").unwrap();
        let pt = projective_rep(&p, f.clone(), t_idx);
        let ps = projective_rep(&p, f, s_idx);
        assert_eq!(pt.dimension_vector(), vec![1, 1, 1, 1, 0]);
        assert_eq!(ps.dimension_vector(), vec![1, 1, 1, 0, 1]);
        let prod = tensor(&pt, &ps).unwrap();
        assert_eq!(prod.dimension_vector(), vec![1, 1, 1, 0, 0]);
    }

    #[test]
    fn tensor_matches_matrix_level_oracle() {
        let p = crown();
        let f = f5();
        let reps = classify_thin(&p, &f).unwrap();
        for m in reps.iter().take(12) {
            for n in reps.iter().take(12) {
                let invariant = tensor(m, n).unwrap();
                let table =
                    m.action_table().pointwise_tensor(&n.action_table()).unwrap();
                let from_table = table.to_thin_rep().unwrap();
                assert_eq!(invariant, from_table);
            }
        }
    }

    #[test]
    fn tensor_commutative_associative_up_to_iso() {
        let p = a3();
        let f = f5();
        let reps = classify_thin(&p, &f).unwrap();
        for m in &reps {
            for n in &reps {
                let mn = tensor(m, n).unwrap();
                let nm = tensor(n, m).unwrap();
                assert!(reps_isomorphic(&mn, &nm).unwrap().is_some());
                for k in &reps {
                    let left = tensor(&mn, k).unwrap();
                    let right = tensor(m, &tensor(n, k).unwrap()).unwrap();
                    assert!(reps_isomorphic(&left, &right).unwrap().is_some());
                }
            }
        }
    }

    #[test]
    fn support_of_tensor_is_wedge() {
        let p = crown();
        let f = f5();
        let reps = classify_thin(&p, &f).unwrap();
        for m in reps.iter().take(15) {
            for n in reps.iter().take(15) {
                let t = tensor(m, n).unwrap();
                assert_eq!(*t.support(), m.support().wedge(n.support()).unwrap());
            }
        }
    }

    #[test]
    fn holonomy_is_multiplicative() {
        let p = crown();
        let f = f5();
        let mk = |v: u32| {
            let mut alpha = BTreeMap::new();
            alpha.insert((0usize, 2usize), v);
            ThinRep::new(f.clone(), ClosedSubposet::full(p.clone()), &alpha).unwrap()
        };
        for a in 1..5u32 {
            for b in 1..5u32 {
                let t = tensor(&mk(a), &mk(b)).unwrap();
                let expect = mk(f.mul(&a, &b));
                assert!(reps_isomorphic(&t, &expect).unwrap().is_some());
            }
        }
    }

    #[test]
    fn wedge_semigroup_tables() {
        let two = Poset::chain(2);
        let sg = undeformed_semigroup(&two).unwrap();
        assert_eq!(sg.subposets.len(), 5);
        // commutative idempotent
        for i in 0..5 {
            assert_eq!(sg.table[i][i], i);
            for j in 0..5 {
                assert_eq!(sg.table[i][j], sg.table[j][i]);
            }
        }
        let e = sg.identity_index();
        for i in 0..5 {
            assert_eq!(sg.table[e][i], i);
        }

        // antichain of 2: table is subset intersection
        let sg = undeformed_semigroup(&Poset::antichain(2)).unwrap();
        assert_eq!(sg.subposets.len(), 4);
        for (i, a) in sg.subposets.iter().enumerate() {
            for (j, b) in sg.subposets.iter().enumerate() {
                let inter: Vec<usize> = a
                    .members()
                    .iter()
                    .copied()
                    .filter(|x| b.members().contains(x))
                    .collect();
                assert_eq!(sg.subposets[sg.table[i][j]].members(), inter.as_slice());
            }
        }
    }

    #[test]
    fn semigroup_table_matches_trivial_cocycle_tensor_table() {
        let p = a3();
        let f = f5();
        let sg = undeformed_semigroup(&p).unwrap();
        for (i, a) in sg.subposets.iter().enumerate() {
            for (j, b) in sg.subposets.iter().enumerate() {
                let ra = ThinRep::new(f.clone(), a.clone(), &BTreeMap::new()).unwrap();
                let rb = ThinRep::new(f.clone(), b.clone(), &BTreeMap::new()).unwrap();
                let t = tensor(&ra, &rb).unwrap();
                assert_eq!(*t.support(), sg.subposets[sg.table[i][j]]);
            }
        }
    }

    #[test]
    fn meet_semilattice_detection() {
        assert!(is_meet_semilattice(&Poset::chain(4)).0);
        let (ok, w) = is_meet_semilattice(&crown());
        assert!(!ok);
        let w = w.unwrap();
        assert_eq!((w.x, w.y), (2, 3));
        assert_eq!(w.maximal_lower_bounds, vec![0, 1]);
    }

    #[test]
    fn k0_tables() {
        let chain = Poset::chain(3);
        let t = k0_table(&chain).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(t.meet[x][y], x.min(y));
            }
        }
        let v = Poset::from_covers(&["a", "b", "c"], &[("a", "b"), ("a", "c")]).unwrap();
        let t = k0_table(&v).unwrap();
        assert_eq!(t.meet[1][2], 0);
        assert!(matches!(
            k0_table(&crown()),
            Err(Error::NotMeetSemilattice { .. })
        ));
    }

    #[test]
    fn k0_categorification_on_small_semilattices() {
        let f = f5();
        for p in [
            Arc::new(Poset::chain(3)),
            Arc::new(Poset::from_covers(&["a", "b", "c"], &[("a", "b"), ("a", "c")]).unwrap()),
            section7_poset(),
        ] {
            if p.is_meet_semilattice() {
                assert!(verify_k0_categorification(&p, &f).unwrap());
            }
        }
        // the section-7 poset is not a meet-semilattice (t, s have two
        // maximal lower bounds y, z)
        assert!(!section7_poset().is_meet_semilattice());
    }
}

//! Canonical form of square matrices under conjugation by invertible
//! diagonal matrices. The zero-nonzero pattern graph plus the cycle
//! holonomies left after removing a spanning tree are a complete orbit
//! invariant.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poset::Preorder;

/// A square matrix over a concrete field together with its pattern digraph
/// (arrow i -> j iff the (i,j) entry is nonzero; loops allowed).
#[derive(Debug, Clone, PartialEq)]
pub struct PatternMatrix<F: Field> {
    field: F,
    n: usize,
    entries: Vec<F::Elem>,
}

impl<F: Field> PatternMatrix<F> {
    pub fn new(field: F, n: usize, entries: Vec<F::Elem>) -> PatternMatrix<F> {
        assert_eq!(entries.len(), n * n);
        PatternMatrix { field, n, entries }
    }

    pub fn parse(field: F, text: &str) -> Result<PatternMatrix<F>> {
        let mut rows: Vec<Vec<F::Elem>> = Vec::new();
        for raw in text.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let row: Result<Vec<F::Elem>> =
                line.split_whitespace().map(|tok| field.parse(tok)).collect();
            rows.push(row?);
        }
        let n = rows.len();
        for row in &rows {
            if row.len() != n {
                return Err(Error::Parse(format!(
                    "matrix must be square: row of length {} in a {}-row matrix",
                    row.len(),
                    n
                )));
            }
        }
        Ok(PatternMatrix { field, n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &F::Elem {
        &self.entries[i * self.n + j]
    }

    /// Arrows of the pattern digraph in lexicographic (row-major) order.
    pub fn pattern_graph(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if !self.field.is_zero(self.entry(i, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn same_pattern(&self, other: &PatternMatrix<F>) -> bool {
        self.n == other.n && self.pattern_graph() == other.pattern_graph()
    }

    /// D A D^{-1} for a diagonal of units.
    pub fn conjugate_by_diagonal(&self, d: &[F::Elem]) -> PatternMatrix<F> {
        assert_eq!(d.len(), self.n);
        let f = &self.field;
        let mut entries = Vec::with_capacity(self.n * self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let v = f.mul(
                    &f.mul(&d[i], self.entry(i, j)),
                    &f.inv(&d[j]).expect("diagonal of units"),
                );
                entries.push(v);
            }
        }
        PatternMatrix { field: f.clone(), n: self.n, entries }
    }

    /// Reachability preorder i <= j iff a path i -> j exists in the pattern
    /// graph; the span of the reachable matrix units is closed under
    /// multiplication (a structural matrix algebra), which is asserted.
    pub fn quiver_quotient_preorder(&self) -> Preorder {
        let n = self.n;
        let mut reach = vec![false; n * n];
        for i in 0..n {
            reach[i * n + i] = true;
        }
        for (i, j) in self.pattern_graph() {
            reach[i * n + j] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if reach[i * n + k] {
                    for j in 0..n {
                        if reach[k * n + j] {
                            reach[i * n + j] = true;
                        }
                    }
                }
            }
        }
        // structural matrix algebra check: E_ij E_jk = E_ik stays in the span
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if reach[i * n + j] && reach[j * n + k] {
                        assert!(reach[i * n + k]);
                    }
                }
            }
        }
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        Preorder::new(labels, reach).expect("reachability is reflexive-transitive")
    }
}

/// Per component: the retained spanning-tree arrows and the eliminated
/// arrows in (strictly ascending lexicographic) elimination order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningStructure {
    pub retained: Vec<(usize, usize)>,
    pub eliminated: Vec<(usize, usize)>,
    /// vertex partition of the underlying undirected graph, including
    /// isolated vertices, ordered by least member
    pub components: Vec<Vec<usize>>,
}

/// Repeatedly removes the lexicographically least arrow lying on an
/// undirected cycle (loops and parallel pairs count) until none remain.
pub fn spanning_structure(n: usize, arrows: &[(usize, usize)]) -> SpanningStructure {
    let mut retained: Vec<(usize, usize)> = Vec::new();
    let mut eliminated: Vec<(usize, usize)> = Vec::new();
    let mut remaining: Vec<(usize, usize)> = arrows.to_vec();
    remaining.sort_unstable();

    // an arrow is on a cycle iff it is a loop or not a bridge; removing
    // edges never turns a non-cycle edge into a cycle edge, so one
    // ascending pass eliminates in ascending order
    let mut idx = 0;
    while idx < remaining.len() {
        let (u, v) = remaining[idx];
        if u == v {
            eliminated.push((u, v));
            remaining.remove(idx);
            continue;
        }
        let connected_without = {
            let mut adj = vec![Vec::new(); n];
            for (k, &(a, b)) in remaining.iter().enumerate() {
                if k == idx || a == b {
                    continue;
                }
                adj[a].push(b);
                adj[b].push(a);
            }
            let mut seen = vec![false; n];
            let mut queue = VecDeque::from([u]);
            seen[u] = true;
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            seen[v]
        };
        if connected_without {
            eliminated.push((u, v));
            remaining.remove(idx);
        } else {
            idx += 1;
        }
    }
    retained.extend(remaining);

    // undirected components over all n vertices
    let mut comp_id = vec![usize::MAX; n];
    let mut components = Vec::new();
    for start in 0..n {
        if comp_id[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut comp = Vec::new();
        let mut queue = VecDeque::from([start]);
        comp_id[start] = id;
        while let Some(x) = queue.pop_front() {
            comp.push(x);
            for &(a, b) in arrows {
                let other = if a == x {
                    b
                } else if b == x {
                    a
                } else {
                    continue;
                };
                if comp_id[other] == usize::MAX {
                    comp_id[other] = id;
                    queue.push_back(other);
                }
            }
        }
        comp.sort_unstable();
        components.push(comp);
    }
    SpanningStructure { retained, eliminated, components }
}

/// The canonical conjugate C = D A D^{-1} with ones on the retained tree
/// arrows and the conjugating diagonal D (least vertex of each component
/// scaled to 1).
#[derive(Debug, Clone)]
pub struct CanonicalPair<F: Field> {
    pub c: PatternMatrix<F>,
    pub d: Vec<F::Elem>,
    pub structure: SpanningStructure,
}

pub fn canonical_form<F: Field>(a: &PatternMatrix<F>) -> CanonicalPair<F> {
    let f = a.field().clone();
    let n = a.size();
    let arrows = a.pattern_graph();
    let structure = spanning_structure(n, &arrows);

    // walk each tree from its least vertex: c_ij = 1 on a tree arrow i->j
    // means d_j = a_ij d_i
    let mut d: Vec<Option<F::Elem>> = vec![None; n];
    for comp in &structure.components {
        let root = comp[0];
        d[root] = Some(f.one());
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &(i, j) in &structure.retained {
                if i == x && d[j].is_none() {
                    let dj = f.mul(a.entry(i, j), d[i].as_ref().unwrap());
                    d[j] = Some(dj);
                    queue.push_back(j);
                } else if j == x && d[i].is_none() {
                    let di = f.mul(
                        d[j].as_ref().unwrap(),
                        &f.inv(a.entry(i, j)).expect("pattern entries are nonzero"),
                    );
                    d[i] = Some(di);
                    queue.push_back(i);
                }
            }
        }
    }
    let d: Vec<F::Elem> = d.into_iter().map(|v| v.expect("trees span components")).collect();
    let c = a.conjugate_by_diagonal(&d);
    for &(i, j) in &structure.retained {
        debug_assert!(f.is_one(c.entry(i, j)), "tree arrows carry 1 in the canonical form");
    }
    CanonicalPair { c, d, structure }
}

/// Per eliminated arrow, in elimination order, the canonical-form entry at
/// that position: the holonomy of the cycle the arrow closes. Vector length
/// is e - v + #components.
pub fn orbit_invariant<F: Field>(a: &PatternMatrix<F>) -> (Vec<(usize, usize)>, Vec<F::Elem>) {
    let pair = canonical_form(a);
    let values = pair
        .structure
        .eliminated
        .iter()
        .map(|&(i, j)| pair.c.entry(i, j).clone())
        .collect();
    (a.pattern_graph(), values)
}

/// Some diagonal D with D A D^{-1} = B, exactly when the patterns and
/// canonical forms agree; D is recovered as D_B^{-1} D_A.
pub fn diag_conjugate_test<F: Field>(
    a: &PatternMatrix<F>,
    b: &PatternMatrix<F>,
) -> Option<Vec<F::Elem>> {
    if !a.same_pattern(b) {
        return None;
    }
    let f = a.field().clone();
    let ca = canonical_form(a);
    let cb = canonical_form(b);
    if ca.c != cb.c {
        return None;
    }
    let d: Vec<F::Elem> = ca
        .d
        .iter()
        .zip(cb.d.iter())
        .map(|(da, db)| f.mul(&f.inv(db).expect("units"), da))
        .collect();
    debug_assert!(a.conjugate_by_diagonal(&d) == *b);
    Some(d)
}

/// The worked 4x4 example instantiated over any field: entries assigned in
/// reading order of the nonzero pattern.
pub fn example_4x4_pattern<F: Field>(field: F, values: &[F::Elem; 11]) -> PatternMatrix<F> {
    let z = field.zero();
    let v = values;
    #[rustfmt::skip]
    let entries = vec![
        v[0].clone(), v[1].clone(), v[2].clone(), z.clone(),
        z.clone(),    v[3].clone(), z.clone(),    v[4].clone(),
        v[5].clone(), v[6].clone(), v[7].clone(), v[8].clone(),
        z.clone(),    v[9].clone(), z,            v[10].clone(),
    ];
    PatternMatrix::new(field, 4, entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Gf, Rationals};
    use num_rational::BigRational;

    fn rational_example() -> PatternMatrix<Rationals> {
        let f = Rationals;
        let primes = [2i64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31];
        let vals: Vec<BigRational> = primes.iter().map(|&p| f.from_int(p)).collect();
        example_4x4_pattern(f, &vals.try_into().unwrap())
    }

    #[test]
    fn pattern_graphs() {
        let f = Gf::new(5).unwrap();
        let id = PatternMatrix::new(f.clone(), 3, vec![1, 0, 0, 0, 1, 0, 0, 0, 1]);
        assert_eq!(id.pattern_graph(), vec![(0, 0), (1, 1), (2, 2)]);
        let zero = PatternMatrix::new(f, 2, vec![0, 0, 0, 0]);
        assert!(zero.pattern_graph().is_empty());
        let a = rational_example();
        let g = a.pattern_graph();
        assert_eq!(g.len(), 11);
        assert_eq!(g.iter().filter(|&&(i, j)| i == j).count(), 4);
    }

    #[test]
    fn spanning_structure_of_the_worked_example() {
        let a = rational_example();
        let s = spanning_structure(4, &a.pattern_graph());
        assert_eq!(s.retained, vec![(2, 0), (2, 3), (3, 1)]);
        assert_eq!(s.eliminated.len(), 8);
        // elimination order strictly ascending
        for w in s.eliminated.windows(2) {
            assert!(w[0] < w[1]);
        }
        assert_eq!(s.components.len(), 1);
    }

    #[test]
    fn loops_and_trees() {
        // single loop: tree empty, loop eliminated
        let s = spanning_structure(1, &[(0, 0)]);
        assert!(s.retained.is_empty());
        assert_eq!(s.eliminated, vec![(0, 0)]);
        // a tree stays, nothing eliminated
        let s = spanning_structure(3, &[(0, 1), (1, 2)]);
        assert_eq!(s.retained, vec![(0, 1), (1, 2)]);
        assert!(s.eliminated.is_empty());
    }

    #[test]
    fn worked_canonical_form_matches_displayed_values() {
        let f = Rationals;
        let a = rational_example();
        let pair = canonical_form(&a);
        // tree arrows carry 1
        for &(i, j) in &pair.structure.retained {
            assert!(f.is_one(pair.c.entry(i, j)));
        }
        // c_12 = a_12 a_42^{-1} a_34^{-1} a_31 = 3 * 29^{-1} * 23^{-1} * 13
        assert_eq!(*pair.c.entry(0, 1), f.ratio(39, 667));
        // D = diag(1, a31^{-1} a34 a42, a31^{-1}, a31^{-1} a34)
        assert_eq!(pair.d[0], f.from_int(1));
        assert_eq!(pair.d[1], f.ratio(23 * 29, 13));
        assert_eq!(pair.d[2], f.ratio(1, 13));
        assert_eq!(pair.d[3], f.ratio(23, 13));
        // full C against the displayed formulas
        assert_eq!(*pair.c.entry(0, 0), f.from_int(2));
        assert_eq!(*pair.c.entry(0, 2), f.from_int(5 * 13));
        assert_eq!(*pair.c.entry(1, 1), f.from_int(7));
        assert_eq!(*pair.c.entry(1, 3), f.from_int(11 * 29));
        assert_eq!(*pair.c.entry(2, 1), f.ratio(17, 23 * 29));
        assert_eq!(*pair.c.entry(2, 2), f.from_int(19));
        assert_eq!(*pair.c.entry(3, 3), f.from_int(31));
        // D A = C D entrywise
        for i in 0..4 {
            for j in 0..4 {
                let lhs = f.mul(&pair.d[i], a.entry(i, j));
                let rhs = f.mul(pair.c.entry(i, j), &pair.d[j]);
                assert_eq!(lhs, rhs);
            }
        }
        // idempotent
        let again = canonical_form(&pair.c);
        assert_eq!(again.c, pair.c);
        assert!(again.d.iter().all(|v| f.is_one(v)));
    }

    #[test]
    fn diagonal_matrices_are_fixed() {
        let f = Gf::new(7).unwrap();
        let a = PatternMatrix::new(f.clone(), 3, vec![2, 0, 0, 0, 3, 0, 0, 0, 5]);
        let pair = canonical_form(&a);
        assert_eq!(pair.c, a);
        assert!(pair.d.iter().all(|v| f.is_one(v)));
        // loop entries are conjugation invariants
        for i in 0..3 {
            assert_eq!(pair.c.entry(i, i), a.entry(i, i));
        }
    }

    #[test]
    fn orbit_invariant_lengths() {
        let f = Gf::new(5).unwrap();
        // tree pattern: empty vector
        let tree = PatternMatrix::new(f.clone(), 3, vec![0, 1, 0, 0, 0, 2, 0, 0, 0]);
        let (_, inv) = orbit_invariant(&tree);
        assert!(inv.is_empty());
        // full 2x2: e - v + 1 = 4 - 2 + 1 = 3
        let full = PatternMatrix::new(f.clone(), 2, vec![1, 2, 3, 4]);
        let (_, inv) = orbit_invariant(&full);
        assert_eq!(inv.len(), 3);
        // worked example: 11 - 4 + 1 = 8
        let (_, inv) = orbit_invariant(&rational_example());
        assert_eq!(inv.len(), 8);
    }

    #[test]
    fn invariant_constant_on_orbits() {
        let f = Gf::new(5).unwrap();
        let a = PatternMatrix::new(f.clone(), 3, vec![1, 2, 0, 0, 3, 4, 2, 0, 1]);
        let pair = canonical_form(&a);
        for seed in 1..20u64 {
            let d: Vec<u32> = (0..3).map(|i| f.exp(seed + i)).collect();
            let b = a.conjugate_by_diagonal(&d);
            let pair_b = canonical_form(&b);
            assert_eq!(pair.c, pair_b.c);
        }
    }

    #[test]
    fn conjugate_test_agrees_with_exhaustive_search() {
        let f = Gf::new(5).unwrap();
        let mats = [
            PatternMatrix::new(f.clone(), 2, vec![1, 2, 3, 4]),
            PatternMatrix::new(f.clone(), 2, vec![1, 4, 3, 4]),
            PatternMatrix::new(f.clone(), 2, vec![1, 2, 0, 4]),
            PatternMatrix::new(f.clone(), 2, vec![2, 2, 3, 4]),
        ];
        for a in &mats {
            for b in &mats {
                let fast = diag_conjugate_test(a, b);
                // exhaustive diagonal search over (F_5^*)^2
                let mut slow = None;
                for t in 0..16u32 {
                    let d: Vec<u32> =
                        (0..2).map(|i| f.exp((t >> (2 * i) & 3) as u64)).collect();
                    if a.conjugate_by_diagonal(&d) == *b {
                        slow = Some(d);
                        break;
                    }
                }
                assert_eq!(fast.is_some(), slow.is_some());
                if let Some(d) = fast {
                    assert!(a.conjugate_by_diagonal(&d) == *b);
                }
            }
        }
    }

    #[test]
    fn crown_pattern_holonomy_separation() {
        // two 4-crown-pattern matrices with different cycle holonomies are
        // not diagonally conjugate
        let f = Gf::new(5).unwrap();
        let mk = |ac: u32| {
            PatternMatrix::new(
                f.clone(),
                4,
                vec![0, 0, ac, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
            )
        };
        let a = mk(1);
        let b = mk(2);
        assert!(diag_conjugate_test(&a, &b).is_none());
        assert!(diag_conjugate_test(&a, &a).is_some());
    }

    #[test]
    fn quotient_preorders() {
        let f = Gf::new(5).unwrap();
        // strictly upper triangular: genuine poset
        let upper = PatternMatrix::new(f.clone(), 3, vec![0, 1, 1, 0, 0, 1, 0, 0, 0]);
        assert!(upper.quiver_quotient_preorder().is_poset());
        // the 2-cycle: a ~ b, not a poset
        let cyc = PatternMatrix::new(f.clone(), 2, vec![0, 2, 3, 0]);
        let pre = cyc.quiver_quotient_preorder();
        assert!(!pre.is_poset());
        assert!(pre.leq(0, 1) && pre.leq(1, 0));
        // identity: discrete
        let id = PatternMatrix::new(f, 2, vec![1, 0, 0, 1]);
        let pre = id.quiver_quotient_preorder();
        assert!(pre.is_poset());
        assert!(!pre.leq(0, 1) && !pre.leq(1, 0));
    }

    #[test]
    fn disconnected_patterns_get_per_component_roots() {
        let f = Gf::new(7).unwrap();
        // two independent 2-cycles on {0,1} and {2,3}
        let a = PatternMatrix::new(
            f.clone(),
            4,
            vec![0, 2, 0, 0, 3, 0, 0, 0, 0, 0, 0, 4, 0, 0, 5, 0],
        );
        let pair = canonical_form(&a);
        assert_eq!(pair.structure.components.len(), 2);
        assert!(f.is_one(&pair.d[0]));
        assert!(f.is_one(&pair.d[2]));
        // e - v + #comp = 4 - 4 + 2 = 2
        let (_, inv) = orbit_invariant(&a);
        assert_eq!(inv.len(), 2);
    }
}

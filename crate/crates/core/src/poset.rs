//! Finite posets and preorders, closed subposets, automorphisms,
//! connectivity, and extremal-vertex removal.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Default enumeration guard for closed subposets.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 20;
/// Default guard for the automorphism backtracking search.
pub const DEFAULT_AUTOMORPHISM_LIMIT: usize = 10;

/// A finite poset. Elements are labelled strings; internal indices are their
/// positions in declaration order, which fixes every tie-break in the
/// library.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    elements: Vec<String>,
    /// reflexive-transitive relation, row-major n*n
    leq: Vec<bool>,
}

/// A finite preorder (reflexive, transitive; not necessarily antisymmetric).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preorder {
    elements: Vec<String>,
    leq: Vec<bool>,
}

impl Preorder {
    pub fn new(elements: Vec<String>, leq: Vec<bool>) -> Result<Preorder> {
        let n = elements.len();
        assert_eq!(leq.len(), n * n);
        let mut seen = HashSet::new();
        for e in &elements {
            if !seen.insert(e.clone()) {
                return Err(Error::DuplicateElement(e.clone()));
            }
        }
        for i in 0..n {
            if !leq[i * n + i] {
                return Err(Error::Parse(format!("relation not reflexive at {}", elements[i])));
            }
            for j in 0..n {
                for k in 0..n {
                    if leq[i * n + j] && leq[j * n + k] && !leq[i * n + k] {
                        return Err(Error::Parse("relation not transitive".into()));
                    }
                }
            }
        }
        Ok(Preorder { elements, leq })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.elements.len() + b]
    }

    /// Antisymmetric preorders are posets.
    pub fn is_poset(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| (0..n).all(|j| i == j || !(self.leq(i, j) && self.leq(j, i))))
    }

    pub fn into_poset(self) -> Option<Poset> {
        if self.is_poset() {
            Some(Poset { elements: self.elements, leq: self.leq })
        } else {
            None
        }
    }
}

impl Poset {
    /// Builds a poset from elements and cover (or any relation) pairs given
    /// by index; takes the reflexive-transitive closure and rejects cycles.
    pub fn from_relation_pairs(elements: Vec<String>, pairs: &[(usize, usize)]) -> Result<Poset> {
        let n = elements.len();
        let mut seen = HashSet::new();
        for e in &elements {
            if !seen.insert(e.clone()) {
                return Err(Error::DuplicateElement(e.clone()));
            }
        }
        let mut leq = vec![false; n * n];
        for i in 0..n {
            leq[i * n + i] = true;
        }
        for &(a, b) in pairs {
            assert!(a < n && b < n);
            leq[a * n + b] = true;
        }
        // Floyd-Warshall style transitive closure
        for k in 0..n {
            for i in 0..n {
                if leq[i * n + k] {
                    for j in 0..n {
                        if leq[k * n + j] {
                            leq[i * n + j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i * n + j] && leq[j * n + i] {
                    return Err(Error::CycleDetected(elements[i].clone(), elements[j].clone()));
                }
            }
        }
        Ok(Poset { elements, leq })
    }

    pub fn from_covers(elements: &[&str], covers: &[(&str, &str)]) -> Result<Poset> {
        let labels: Vec<String> = elements.iter().map(|s| s.to_string()).collect();
        let index = |l: &str| -> Result<usize> {
            labels
                .iter()
                .position(|e| e == l)
                .ok_or_else(|| Error::UnknownElement(l.to_string()))
        };
        let mut pairs = Vec::new();
        for (a, b) in covers {
            pairs.push((index(a)?, index(b)?));
        }
        Poset::from_relation_pairs(labels, &pairs)
    }

    /// Parses the poset file format: a line `elements: e1 e2 ...`, zero or
    /// more lines `covers: x<y x<z ...`, `#` comments.
    pub fn parse(text: &str) -> Result<Poset> {
        let mut elements: Option<Vec<String>> = None;
        let mut covers: Vec<(String, String)> = Vec::new();
        for raw in text.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("elements:") {
                if elements.is_some() {
                    return Err(Error::Parse("repeated `elements:` line".into()));
                }
                elements = Some(rest.split_whitespace().map(|s| s.to_string()).collect());
            } else if let Some(rest) = line.strip_prefix("covers:") {
                for tok in rest.split_whitespace() {
                    let (a, b) = tok
                        .split_once('<')
                        .ok_or_else(|| Error::Parse(format!("bad cover `{tok}`")))?;
                    covers.push((a.to_string(), b.to_string()));
                }
            } else {
                return Err(Error::Parse(format!("unrecognized line `{line}`")));
            }
        }
        let elements = elements.ok_or_else(|| Error::Parse("missing `elements:` line".into()))?;
        let mut pairs = Vec::new();
        for (a, b) in &covers {
            let ia = elements
                .iter()
                .position(|e| e == a)
                .ok_or_else(|| Error::UnknownElement(a.clone()))?;
            let ib = elements
                .iter()
                .position(|e| e == b)
                .ok_or_else(|| Error::UnknownElement(b.clone()))?;
            pairs.push((ia, ib));
        }
        Poset::from_relation_pairs(elements, &pairs)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn label(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.elements
            .iter()
            .position(|e| e == label)
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.elements.len() + b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// All pairs (x, y) with x <= y, in lexicographic index order.
    pub fn intervals(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.leq(i, j))
            .collect()
    }

    /// Exactly the pairs x < y with nothing strictly between.
    pub fn hasse_covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if !self.lt(a, b) {
                    continue;
                }
                if (0..n).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    continue;
                }
                out.push((a, b));
            }
        }
        out
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| (0..self.len()).all(|y| !self.lt(y, x))).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| (0..self.len()).all(|y| !self.lt(x, y))).collect()
    }

    /// Connected components of the comparability graph, each sorted, ordered
    /// by least member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            while let Some(x) = queue.pop_front() {
                comp.push(x);
                for y in 0..n {
                    if !seen[y] && (self.lt(x, y) || self.lt(y, x)) {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// The induced poset on a subset of elements (full inherited relation).
    pub fn induced(&self, members: &[usize]) -> Poset {
        let labels = members.iter().map(|&i| self.elements[i].clone()).collect();
        let m = members.len();
        let mut leq = vec![false; m * m];
        for (a, &i) in members.iter().enumerate() {
            for (b, &j) in members.iter().enumerate() {
                leq[a * m + b] = self.leq(i, j);
            }
        }
        Poset { elements: labels, leq }
    }

    /// Least extremal (minimal or maximal) element whose removal keeps the
    /// poset connected. The bipartite Min-Max spanning-tree lemma guarantees
    /// one exists; its leaf set is computed as a cross-check.
    pub fn removable_extremal(&self) -> Result<usize> {
        let n = self.len();
        if n == 1 {
            return Err(Error::Singleton);
        }
        if !self.is_connected() || n == 0 {
            return Err(Error::NotConnected);
        }
        let mins: HashSet<usize> = self.minimal_elements().into_iter().collect();
        let maxs: HashSet<usize> = self.maximal_elements().into_iter().collect();
        let extremal: Vec<usize> =
            (0..n).filter(|x| mins.contains(x) || maxs.contains(x)).collect();

        let still_connected = |x: usize| -> bool {
            let rest: Vec<usize> = (0..n).filter(|&y| y != x).collect();
            self.induced(&rest).is_connected()
        };

        let candidate = extremal.iter().copied().find(|&x| still_connected(x));

        // Lemma certificate: leaves of a spanning tree of the Min-Max
        // bipartite graph are always valid candidates.
        debug_assert!({
            let leaves = self.min_max_tree_leaves(&mins, &maxs);
            !leaves.is_empty() && leaves.iter().all(|&x| still_connected(x))
        });

        candidate.ok_or(Error::NotConnected)
    }

    fn min_max_tree_leaves(&self, mins: &HashSet<usize>, maxs: &HashSet<usize>) -> Vec<usize> {
        let verts: Vec<usize> = {
            let mut v: Vec<usize> = mins.union(maxs).copied().collect();
            v.sort_unstable();
            v
        };
        if verts.is_empty() {
            return Vec::new();
        }
        // BFS spanning tree from the least vertex, neighbors in index order
        let mut tree_deg: std::collections::HashMap<usize, usize> =
            verts.iter().map(|&v| (v, 0)).collect();
        let mut seen: HashSet<usize> = HashSet::from([verts[0]]);
        let mut queue = VecDeque::from([verts[0]]);
        while let Some(x) = queue.pop_front() {
            for &y in &verts {
                if seen.contains(&y) {
                    continue;
                }
                let edge = (mins.contains(&x) && maxs.contains(&y) && self.leq(x, y))
                    || (maxs.contains(&x) && mins.contains(&y) && self.leq(y, x));
                if edge {
                    seen.insert(y);
                    *tree_deg.get_mut(&x).unwrap() += 1;
                    *tree_deg.get_mut(&y).unwrap() += 1;
                    queue.push_back(y);
                }
            }
        }
        let mut leaves: Vec<usize> =
            verts.iter().copied().filter(|v| tree_deg[v] == 1).collect();
        leaves.sort_unstable();
        leaves
    }

    /// All order automorphisms by pruned backtracking. The identity comes
    /// first; the list is closed under composition and inverses.
    pub fn automorphism_group(&self) -> Vec<PosetAutomorphism> {
        self.automorphism_group_with_limit(DEFAULT_AUTOMORPHISM_LIMIT)
            .expect("default limit")
    }

    pub fn automorphism_group_with_limit(&self, limit: usize) -> Result<Vec<PosetAutomorphism>> {
        let n = self.len();
        if n > limit {
            return Err(Error::TooLarge { size: n, limit });
        }
        // order signature prune: (down-set size, up-set size)
        let sig: Vec<(usize, usize)> = (0..n)
            .map(|x| {
                ((0..n).filter(|&y| self.leq(y, x)).count(),
                 (0..n).filter(|&y| self.leq(x, y)).count())
            })
            .collect();
        let mut out = Vec::new();
        let mut perm = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn rec(
            p: &Poset,
            sig: &[(usize, usize)],
            perm: &mut Vec<usize>,
            used: &mut Vec<bool>,
            depth: usize,
            out: &mut Vec<PosetAutomorphism>,
        ) {
            let n = p.len();
            if depth == n {
                out.push(PosetAutomorphism { perm: perm.clone() });
                return;
            }
            for cand in 0..n {
                if used[cand] || sig[depth] != sig[cand] {
                    continue;
                }
                let ok = (0..depth).all(|prev| {
                    p.leq(prev, depth) == p.leq(perm[prev], cand)
                        && p.leq(depth, prev) == p.leq(cand, perm[prev])
                });
                if !ok {
                    continue;
                }
                perm[depth] = cand;
                used[cand] = true;
                rec(p, sig, perm, used, depth + 1, out);
                used[cand] = false;
                perm[depth] = usize::MAX;
            }
        }
        rec(self, &sig, &mut perm, &mut used, 0, &mut out);
        // backtracking in index order emits the identity first
        Ok(out)
    }

    /// Enumerates every closed subposet, including the empty one and the
    /// full poset, via the closure system generated by subinterval closure
    /// and transitivity on strict relation pairs, with isolated vertices
    /// distributed freely.
    pub fn closed_subposets(&self) -> Vec<ClosedSubposet> {
        self.closed_subposets_with_limit(DEFAULT_ENUMERATION_LIMIT).expect("default limit")
    }

    pub fn closed_subposets_with_limit(&self, limit: usize) -> Result<Vec<ClosedSubposet>> {
        let n = self.len();
        if n > limit {
            return Err(Error::TooLarge { size: n, limit });
        }
        let strict: Vec<(usize, usize)> = self
            .intervals()
            .into_iter()
            .filter(|&(a, b)| a != b)
            .collect();
        let pair_index: std::collections::HashMap<(usize, usize), usize> =
            strict.iter().enumerate().map(|(i, &p)| (p, i)).collect();

        // closure: subintervals of each pair, then transitivity, to fixpoint
        let close = |set: &BTreeSet<usize>| -> BTreeSet<usize> {
            let mut cur = set.clone();
            loop {
                let mut next = cur.clone();
                for &pi in &cur {
                    let (x, y) = strict[pi];
                    for a in 0..n {
                        for b in 0..n {
                            if a != b
                                && self.leq(x, a)
                                && self.leq(a, b)
                                && self.leq(b, y)
                            {
                                next.insert(pair_index[&(a, b)]);
                            }
                        }
                    }
                }
                let snapshot: Vec<usize> = next.iter().copied().collect();
                for &p1 in &snapshot {
                    for &p2 in &snapshot {
                        let (x, y) = strict[p1];
                        let (y2, z) = strict[p2];
                        if y == y2 {
                            next.insert(pair_index[&(x, z)]);
                        }
                    }
                }
                if next == cur {
                    return next;
                }
                cur = next;
            }
        };

        // enumerate all closed pair-sets by growing from the empty set
        let mut found: HashSet<BTreeSet<usize>> = HashSet::new();
        let empty = close(&BTreeSet::new());
        let mut queue = VecDeque::from([empty.clone()]);
        found.insert(empty);
        while let Some(cur) = queue.pop_front() {
            for pi in 0..strict.len() {
                if cur.contains(&pi) {
                    continue;
                }
                let mut grown = cur.clone();
                grown.insert(pi);
                let closed = close(&grown);
                if found.insert(closed.clone()) {
                    queue.push_back(closed);
                }
            }
        }

        let parent = Arc::new(self.clone());
        let mut out = Vec::new();
        let mut sets: Vec<BTreeSet<usize>> = found.into_iter().collect();
        sets.sort();
        for rel in sets {
            let touched: BTreeSet<usize> =
                rel.iter().flat_map(|&pi| [strict[pi].0, strict[pi].1]).collect();
            let free: Vec<usize> = (0..n).filter(|x| !touched.contains(x)).collect();
            for mask in 0u64..(1u64 << free.len()) {
                let mut members: Vec<usize> = touched.iter().copied().collect();
                for (bit, &x) in free.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        members.push(x);
                    }
                }
                members.sort_unstable();
                let pairs: Vec<(usize, usize)> = rel.iter().map(|&pi| strict[pi]).collect();
                out.push(ClosedSubposet::new_unchecked(parent.clone(), members, &pairs));
            }
        }
        out.sort_by(|a, b| (a.members(), a.strict_pairs()).cmp(&(b.members(), b.strict_pairs())));
        Ok(out)
    }

    /// Whether every pair has an infimum. On failure the witness is the
    /// greatest failing pair in declaration order (the top pair of the
    /// crown and sphere examples) together with its maximal common lower
    /// bounds.
    pub fn meet_semilattice_witness(&self) -> std::result::Result<(), MeetFailure> {
        let n = self.len();
        for x in (0..n).rev() {
            for y in (x + 1..n).rev() {
                if self.meet(x, y).is_none() {
                    let lows: Vec<usize> =
                        (0..n).filter(|&z| self.leq(z, x) && self.leq(z, y)).collect();
                    let maximal: Vec<usize> = lows
                        .iter()
                        .copied()
                        .filter(|&z| lows.iter().all(|&w| w == z || !self.lt(z, w)))
                        .collect();
                    return Err(MeetFailure { x, y, maximal_lower_bounds: maximal });
                }
            }
        }
        Ok(())
    }

    pub fn is_meet_semilattice(&self) -> bool {
        self.meet_semilattice_witness().is_ok()
    }

    /// Greatest lower bound of x and y, when it exists.
    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        let n = self.len();
        let lows: Vec<usize> = (0..n).filter(|&z| self.leq(z, x) && self.leq(z, y)).collect();
        lows.iter().copied().find(|&m| lows.iter().all(|&z| self.leq(z, m)))
    }

    // -- standard families used across the test suites --

    pub fn chain(n: usize) -> Poset {
        let labels: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let pairs: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_relation_pairs(labels, &pairs).unwrap()
    }

    pub fn antichain(n: usize) -> Poset {
        let labels: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        Poset::from_relation_pairs(labels, &[]).unwrap()
    }

    /// The 2n-crown: a_1..a_n below c_1..c_n with a_i < c_{i-1}, c_i, c_{i+1}
    /// (clamped); n = 2 is the 4-element crown whose order complex is a
    /// circle, and in general the complex is a wedge of n-1 circles.
    pub fn crown(n: usize) -> Poset {
        assert!(n >= 2);
        let mut labels: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
        labels.extend((1..=n).map(|i| format!("c{i}")));
        let mut pairs = Vec::new();
        for i in 0..n {
            if i > 0 {
                pairs.push((i, n + i - 1));
            }
            pairs.push((i, n + i));
            if i + 1 < n {
                pairs.push((i, n + i + 1));
            }
        }
        Poset::from_relation_pairs(labels, &pairs).unwrap()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeetFailure {
    pub x: usize,
    pub y: usize,
    pub maximal_lower_bounds: Vec<usize>,
}

/// An order automorphism, stored as the image permutation on indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PosetAutomorphism {
    perm: Vec<usize>,
}

impl PosetAutomorphism {
    pub fn identity(n: usize) -> PosetAutomorphism {
        PosetAutomorphism { perm: (0..n).collect() }
    }

    pub fn from_perm(perm: Vec<usize>) -> PosetAutomorphism {
        PosetAutomorphism { perm }
    }

    pub fn apply(&self, x: usize) -> usize {
        self.perm[x]
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// self after other: (self * other)(x) = self(other(x))
    pub fn compose(&self, other: &PosetAutomorphism) -> PosetAutomorphism {
        PosetAutomorphism { perm: other.perm.iter().map(|&x| self.perm[x]).collect() }
    }

    pub fn inverse(&self) -> PosetAutomorphism {
        let mut inv = vec![0; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        PosetAutomorphism { perm: inv }
    }

    pub fn preserves(&self, p: &Poset) -> bool {
        let n = p.len();
        (0..n).all(|x| (0..n).all(|y| p.leq(x, y) == p.leq(self.apply(x), self.apply(y))))
    }
}

/// A subposet closed under subintervals of the parent (Supp data of thin
/// representations). Members are parent indices, sorted; the relation is a
/// sub-relation of the parent's.
#[derive(Debug, Clone)]
pub struct ClosedSubposet {
    parent: Arc<Poset>,
    members: Vec<usize>,
    /// row-major |members| x |members| relation in member order
    rel: Vec<bool>,
}

impl PartialEq for ClosedSubposet {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.members == other.members && self.rel == other.rel
    }
}
impl Eq for ClosedSubposet {}

impl ClosedSubposet {
    fn new_unchecked(parent: Arc<Poset>, members: Vec<usize>, pairs: &[(usize, usize)]) -> Self {
        let m = members.len();
        let mut rel = vec![false; m * m];
        let pos = |x: usize| members.binary_search(&x).unwrap();
        for i in 0..m {
            rel[i * m + i] = true;
        }
        for &(a, b) in pairs {
            rel[pos(a) * m + pos(b)] = true;
        }
        ClosedSubposet { parent, members, rel }
    }

    /// Validates the closed-subposet axioms against the parent.
    pub fn new(
        parent: Arc<Poset>,
        members: Vec<usize>,
        pairs: &[(usize, usize)],
    ) -> Result<ClosedSubposet> {
        let mut members = members;
        members.sort_unstable();
        members.dedup();
        for &(a, b) in pairs {
            if !members.contains(&a) || !members.contains(&b) {
                return Err(Error::UnknownElement(format!(
                    "pair ({a},{b}) outside member set"
                )));
            }
            if !parent.leq(a, b) {
                return Err(Error::Parse(format!(
                    "pair {}<{} not a parent relation",
                    parent.label(a),
                    parent.label(b)
                )));
            }
        }
        let sp = ClosedSubposet::new_unchecked(parent, members, pairs);
        sp.validate()?;
        Ok(sp)
    }

    fn validate(&self) -> Result<()> {
        let m = self.members.len();
        // transitive
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    if self.rel[i * m + j] && self.rel[j * m + k] && !self.rel[i * m + k] {
                        return Err(Error::NotClosed);
                    }
                }
            }
        }
        // antisymmetric comes free: rel is a sub-relation of the parent order
        // interval closure
        for i in 0..m {
            for j in 0..m {
                if !self.rel[i * m + j] {
                    continue;
                }
                let (x, y) = (self.members[i], self.members[j]);
                for z in 0..self.parent.len() {
                    if self.parent.leq(x, z) && self.parent.leq(z, y) {
                        let Ok(zi) = self.members.binary_search(&z) else {
                            return Err(Error::NotClosed);
                        };
                        if !self.rel[i * m + zi] || !self.rel[zi * m + j] {
                            return Err(Error::NotClosed);
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn parent(&self) -> &Arc<Poset> {
        &self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    /// Relation on parent indices.
    pub fn rel(&self, x: usize, y: usize) -> bool {
        let m = self.members.len();
        match (self.members.binary_search(&x), self.members.binary_search(&y)) {
            (Ok(i), Ok(j)) => self.rel[i * m + j],
            _ => false,
        }
    }

    /// Strict related pairs on parent indices, lexicographic.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let m = self.members.len();
        let mut out = Vec::new();
        for i in 0..m {
            for j in 0..m {
                if i != j && self.rel[i * m + j] {
                    out.push((self.members[i], self.members[j]));
                }
            }
        }
        out
    }

    /// Materializes the subposet as a standalone poset (member labels,
    /// member order).
    pub fn as_poset(&self) -> Poset {
        let labels = self.members.iter().map(|&i| self.parent.elements[i].clone()).collect();
        let local: Vec<(usize, usize)> = self
            .strict_pairs()
            .into_iter()
            .map(|(a, b)| {
                (self.members.binary_search(&a).unwrap(), self.members.binary_search(&b).unwrap())
            })
            .collect();
        Poset::from_relation_pairs(labels, &local).expect("sub-relation of a poset")
    }

    /// The full poset viewed as a closed subposet of itself.
    pub fn full(parent: Arc<Poset>) -> ClosedSubposet {
        let members: Vec<usize> = (0..parent.len()).collect();
        let pairs: Vec<(usize, usize)> =
            parent.intervals().into_iter().filter(|&(a, b)| a != b).collect();
        ClosedSubposet::new_unchecked(parent, members, &pairs)
    }

    pub fn empty(parent: Arc<Poset>) -> ClosedSubposet {
        ClosedSubposet::new_unchecked(parent, Vec::new(), &[])
    }

    /// Intersection of member sets with the conjunction of relations.
    pub fn wedge(&self, other: &ClosedSubposet) -> Result<ClosedSubposet> {
        if self.parent != other.parent {
            return Err(Error::MismatchedParent);
        }
        let members: Vec<usize> =
            self.members.iter().copied().filter(|&x| other.contains(x)).collect();
        let pairs: Vec<(usize, usize)> = self
            .strict_pairs()
            .into_iter()
            .filter(|&(a, b)| other.rel(a, b))
            .collect();
        Ok(ClosedSubposet::new_unchecked(self.parent.clone(), members, &pairs))
    }

    /// Removes one member, keeping the induced sub-relation. Only sound for
    /// extremal members (the result stays closed).
    pub fn remove(&self, x: usize) -> ClosedSubposet {
        let members: Vec<usize> = self.members.iter().copied().filter(|&y| y != x).collect();
        let pairs: Vec<(usize, usize)> = self
            .strict_pairs()
            .into_iter()
            .filter(|&(a, b)| a != x && b != x)
            .collect();
        ClosedSubposet::new_unchecked(self.parent.clone(), members, &pairs)
    }
}

//! Thin representations of incidence algebras: a closed support subposet
//! together with a multiplicative degree-1 cocycle is a complete invariant,
//! and everything here (action tables, isomorphism, classification,
//! accessibility, submodule lattices) is computed on that invariant.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cocycle::{h1_transversal, reduce_modulo_coboundaries, MultCochain};
use crate::error::{Error, Result};
use crate::field::{Field, Gf};
use crate::linalg::Matrix;
use crate::poset::{ClosedSubposet, Poset, DEFAULT_ENUMERATION_LIMIT};

/// A thin representation, stored intrinsically as (support, cocycle).
/// The action scalars are alpha(x,y) on pairs x <=_S y, with alpha(x,x) = 1.
#[derive(Debug, Clone)]
pub struct ThinRep<F: Field> {
    field: F,
    support: ClosedSubposet,
    alpha: BTreeMap<(usize, usize), F::Elem>,
}

impl<F: Field> PartialEq for ThinRep<F> {
    fn eq(&self, other: &Self) -> bool {
        self.support == other.support && self.alpha == other.alpha
    }
}

impl<F: Field> ThinRep<F> {
    /// Full support, alpha identically 1.
    pub fn defining(poset: Arc<Poset>, field: F) -> ThinRep<F> {
        let support = ClosedSubposet::full(poset);
        ThinRep::new(field, support, &BTreeMap::new()).expect("trivial cocycle")
    }

    /// Builds from a support and the strict-pair alpha values (diagonal
    /// entries are forced to 1; missing strict pairs default to 1).
    pub fn new(
        field: F,
        support: ClosedSubposet,
        strict_alpha: &BTreeMap<(usize, usize), F::Elem>,
    ) -> Result<ThinRep<F>> {
        let mut alpha = BTreeMap::new();
        for &x in support.members() {
            alpha.insert((x, x), field.one());
        }
        for (x, y) in support.strict_pairs() {
            alpha.insert((x, y), field.one());
        }
        for (&(x, y), v) in strict_alpha {
            if !support.rel(x, y) || x == y {
                return Err(Error::NotMultiplicative);
            }
            if field.is_zero(v) {
                return Err(Error::NotAUnit(format!(
                    "{} {}",
                    support.parent().label(x),
                    support.parent().label(y)
                )));
            }
            alpha.insert((x, y), v.clone());
        }
        let rep = ThinRep { field, support, alpha };
        if !rep.is_multiplicative() {
            return Err(Error::NotMultiplicative);
        }
        Ok(rep)
    }

    fn is_multiplicative(&self) -> bool {
        let members = self.support.members();
        members.iter().all(|&x| {
            members.iter().all(|&y| {
                members.iter().all(|&z| {
                    if self.support.rel(x, y) && self.support.rel(y, z) {
                        let lhs = self.alpha[&(x, z)].clone();
                        let rhs = self.field.mul(&self.alpha[&(x, y)], &self.alpha[&(y, z)]);
                        lhs == rhs
                    } else {
                        true
                    }
                })
            })
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn parent(&self) -> &Arc<Poset> {
        self.support.parent()
    }

    pub fn support(&self) -> &ClosedSubposet {
        &self.support
    }

    pub fn dim(&self) -> usize {
        self.support.len()
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    /// alpha(x,y) for x <=_S y, None when the interval acts as zero.
    pub fn alpha(&self, x: usize, y: usize) -> Option<&F::Elem> {
        self.alpha.get(&(x, y))
    }

    /// 0/1 vector over the parent elements.
    pub fn dimension_vector(&self) -> Vec<usize> {
        (0..self.parent().len()).map(|i| usize::from(self.support.contains(i))).collect()
    }

    /// The cocycle as a degree-1 cochain on the support materialized as a
    /// standalone poset (member order).
    pub fn alpha_cochain(&self) -> MultCochain<F> {
        let sposet = Arc::new(self.support.as_poset());
        let members = self.support.members();
        let mut map = BTreeMap::new();
        for (&(x, y), v) in &self.alpha {
            let xi = members.binary_search(&x).unwrap();
            let yi = members.binary_search(&y).unwrap();
            map.insert(vec![xi, yi], v.clone());
        }
        MultCochain::from_partial(sposet, self.field.clone(), 1, map).expect("valid cocycle")
    }

    /// The explicit action data: scalar of f_{xy} on m_y for every interval
    /// acting nonzero.
    pub fn action_table(&self) -> ActionTable<F> {
        ActionTable {
            poset: self.parent().clone(),
            field: self.field.clone(),
            entries: self.alpha.clone(),
        }
    }

    /// Matrix of f_{xy} on the basis (m_z), z running over the support in
    /// member order.
    pub fn action_matrix(&self, x: usize, y: usize) -> Matrix<F> {
        let members = self.support.members();
        let n = members.len();
        let mut m = Matrix::zero(&self.field, n, n);
        if let Some(v) = self.alpha.get(&(x, y)) {
            let xi = members.binary_search(&x).unwrap();
            let yi = members.binary_search(&y).unwrap();
            m[(xi, yi)] = v.clone();
        }
        m
    }

    /// Restriction to the support minus one extremal vertex.
    pub fn restrict_without(&self, x: usize) -> Result<ThinRep<F>> {
        let support = self.support.remove(x);
        let strict: BTreeMap<(usize, usize), F::Elem> = self
            .alpha
            .iter()
            .filter(|(&(a, b), _)| a != b && a != x && b != x)
            .map(|(&k, v)| (k, v.clone()))
            .collect();
        ThinRep::new(self.field.clone(), support, &strict)
    }

    /// End(M) = commutant of the action; its dimension equals the number of
    /// connected components of the support.
    pub fn endomorphism_dimension(&self) -> usize {
        let n = self.dim();
        if n == 0 {
            return 0;
        }
        let f = &self.field;
        let actions: Vec<Matrix<F>> = self
            .parent()
            .intervals()
            .iter()
            .map(|&(x, y)| self.action_matrix(x, y))
            .collect();
        // unknowns X[i][j]; equations (X A - A X)[i][j] = 0
        let mut rows: Vec<Vec<F::Elem>> = Vec::new();
        for a in &actions {
            for i in 0..n {
                for j in 0..n {
                    let mut row = vec![f.zero(); n * n];
                    for k in 0..n {
                        row[i * n + k] = f.add(&row[i * n + k], &a[(k, j)]);
                    }
                    for k in 0..n {
                        let t = f.neg(&a[(i, k)]);
                        row[k * n + j] = f.add(&row[k * n + j], &t);
                    }
                    rows.push(row);
                }
            }
        }
        let m = Matrix::from_fn(f, rows.len(), n * n, |i, j| rows[i][j].clone());
        m.nullspace(f).len()
    }
}

/// Explicit action scalars of a (claimed) thin module: f_{xy} . m_y =
/// entries[(x,y)] m_x, everything absent acting as zero.
#[derive(Debug, Clone)]
pub struct ActionTable<F: Field> {
    poset: Arc<Poset>,
    field: F,
    entries: BTreeMap<(usize, usize), F::Elem>,
}

impl<F: Field> ActionTable<F> {
    pub fn new(
        poset: Arc<Poset>,
        field: F,
        entries: BTreeMap<(usize, usize), F::Elem>,
    ) -> ActionTable<F> {
        let entries = entries.into_iter().filter(|(_, v)| !field.is_zero(v)).collect();
        ActionTable { poset, field, entries }
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), F::Elem> {
        &self.entries
    }

    /// Recovers the thin representation, verifying the table arises from
    /// one: diagonal scalars are 1, nonzero intervals are parent relations,
    /// and multiplicative consistency a(x,z) = a(x,y) a(y,z) holds against
    /// every middle vertex, which is exactly closure under subintervals
    /// plus transitivity of the support.
    pub fn to_thin_rep(&self) -> Result<ThinRep<F>> {
        let f = &self.field;
        let mut vertices: Vec<usize> = Vec::new();
        for (&(x, y), v) in &self.entries {
            if !self.poset.leq(x, y) {
                return Err(Error::NotClosed);
            }
            if x == y {
                if !f.is_one(v) {
                    return Err(Error::NotClosed);
                }
                vertices.push(x);
            }
        }
        vertices.sort_unstable();
        for &(x, y) in self.entries.keys() {
            if !vertices.contains(&x) || !vertices.contains(&y) {
                return Err(Error::NotClosed);
            }
        }
        let value = |x: usize, y: usize| -> Option<&F::Elem> { self.entries.get(&(x, y)) };
        let n = self.poset.len();
        for x in 0..n {
            for z in 0..n {
                if !self.poset.leq(x, z) {
                    continue;
                }
                for y in 0..n {
                    if !(self.poset.leq(x, y) && self.poset.leq(y, z)) {
                        continue;
                    }
                    let lhs = value(x, z);
                    let prod = match (value(x, y), value(y, z)) {
                        (Some(a), Some(b)) => Some(f.mul(a, b)),
                        _ => None,
                    };
                    match (lhs, prod) {
                        (None, None) => {}
                        (Some(_), None) | (None, Some(_)) => return Err(Error::NotClosed),
                        (Some(l), Some(p)) => {
                            if *l != p {
                                return Err(Error::NotClosed);
                            }
                        }
                    }
                }
            }
        }
        let pairs: Vec<(usize, usize)> =
            self.entries.keys().copied().filter(|&(x, y)| x != y).collect();
        let support = ClosedSubposet::new(self.poset.clone(), vertices, &pairs)
            .map_err(|_| Error::NotClosed)?;
        let strict: BTreeMap<(usize, usize), F::Elem> = self
            .entries
            .iter()
            .filter(|(&(x, y), _)| x != y)
            .map(|(&k, v)| (k, v.clone()))
            .collect();
        ThinRep::new(self.field.clone(), support, &strict)
    }

    /// Pointwise tensor on vertex lines: scalars multiply, missing entries
    /// are zero. The matrix-level oracle for the invariant-level tensor.
    pub fn pointwise_tensor(&self, other: &ActionTable<F>) -> Result<ActionTable<F>> {
        if self.poset != other.poset {
            return Err(Error::MismatchedParent);
        }
        let f = &self.field;
        let mut entries = BTreeMap::new();
        for (&k, a) in &self.entries {
            if let Some(b) = other.entries.get(&k) {
                entries.insert(k, f.mul(a, b));
            }
        }
        Ok(ActionTable { poset: self.poset.clone(), field: self.field.clone(), entries })
    }
}

/// The support of a table that arises from a thin representation, with the
/// closure properties verified.
pub fn annihilator_support<F: Field>(table: &ActionTable<F>) -> Result<ClosedSubposet> {
    Ok(table.to_thin_rep()?.support().clone())
}

/// Diagonal rescaling theta with alpha(x,y) beta(x,y)^{-1} =
/// theta_x^{-1} theta_y, when the supports agree and the classes match.
pub fn reps_isomorphic<F: Field>(
    m: &ThinRep<F>,
    n: &ThinRep<F>,
) -> Result<Option<Vec<(usize, F::Elem)>>> {
    if m.parent() != n.parent() || m.field() != n.field() {
        return Err(Error::MismatchedParent);
    }
    if m.support() != n.support() {
        return Ok(None);
    }
    if m.is_zero() {
        return Ok(Some(Vec::new()));
    }
    let a = m.alpha_cochain();
    let b = n.alpha_cochain();
    let quotient = a.mul(&b.invert());
    let report = reduce_modulo_coboundaries(&quotient)?;
    if !report.trivial {
        return Ok(None);
    }
    let witness = report.witness.expect("trivial class has a witness");
    let members = m.support().members();
    let theta: Vec<(usize, F::Elem)> = members
        .iter()
        .enumerate()
        .map(|(local, &global)| (global, witness.value(&[local]).clone()))
        .collect();
    Ok(Some(theta))
}

/// The complete catalogue over a finite field: one representative per
/// (closed subposet, H^1 class), pairwise non-isomorphic and jointly
/// exhaustive.
pub fn classify_thin(poset: &Arc<Poset>, field: &Gf) -> Result<Vec<ThinRep<Gf>>> {
    classify_thin_with_limit(poset, field, DEFAULT_ENUMERATION_LIMIT)
}

pub fn classify_thin_with_limit(
    poset: &Arc<Poset>,
    field: &Gf,
    limit: usize,
) -> Result<Vec<ThinRep<Gf>>> {
    let mut out = Vec::new();
    for support in poset.closed_subposets_with_limit(limit)? {
        let sposet = Arc::new(support.as_poset());
        let members = support.members().to_vec();
        for cochain in h1_transversal(&sposet, field)? {
            let mut strict = BTreeMap::new();
            for (chain, v) in cochain.values() {
                if chain[0] != chain[1] {
                    strict.insert((members[chain[0]], members[chain[1]]), *v);
                }
            }
            out.push(ThinRep::new(field.clone(), support.clone(), &strict)?);
        }
    }
    Ok(out)
}

/// The rescaled algebra basis e_{xy} = alpha(x,y)^{-1} f_{xy} over the
/// support, under which the action becomes the defining representation:
/// e_{xy} e_{yz} = e_{xz} and e_{xy} . m_y = m_x.
#[derive(Debug, Clone)]
pub struct RebaseCertificate<F: Field> {
    /// e_{xy} = algebra_rescale[(x,y)] * f_{xy} on the support algebra
    pub algebra_rescale: BTreeMap<(usize, usize), F::Elem>,
    /// m'_x = module_rescale[x] * m_x (identity; the action rescale does
    /// all the work)
    pub module_rescale: BTreeMap<usize, F::Elem>,
}

pub fn rebase_to_defining<F: Field>(rep: &ThinRep<F>) -> RebaseCertificate<F> {
    let f = rep.field();
    let algebra_rescale: BTreeMap<(usize, usize), F::Elem> = rep
        .alpha
        .iter()
        .map(|(&k, v)| (k, f.inv(v).expect("unit values")))
        .collect();
    let module_rescale = rep.support().members().iter().map(|&x| (x, f.one())).collect();
    // e_{xy} e_{yz} = e_{xz} on all composable support pairs
    let members = rep.support().members();
    for &x in members {
        for &y in members {
            if !rep.support().rel(x, y) {
                continue;
            }
            for &z in members {
                if !rep.support().rel(y, z) {
                    continue;
                }
                // e_xy e_yz = (axy ayz)^{-1} f_xy f_yz = (axy ayz)^{-1} f_xz
                // and e_xz = axz^{-1} f_xz; multiplicativity makes them equal
                let lhs = f.mul(&algebra_rescale[&(x, y)], &algebra_rescale[&(y, z)]);
                assert_eq!(lhs, algebra_rescale[&(x, z)]);
            }
        }
    }
    RebaseCertificate { algebra_rescale, module_rescale }
}

/// Indecomposability is connectivity of the support comparability graph,
/// cross-validated against the endomorphism algebra dimension.
pub fn is_indecomposable<F: Field>(rep: &ThinRep<F>) -> Result<bool> {
    if rep.is_zero() {
        return Err(Error::ZeroRep);
    }
    let components = rep.support().as_poset().components().len();
    let end_dim = rep.endomorphism_dimension();
    assert_eq!(end_dim, components, "End dimension must count support components");
    Ok(components == 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    /// a maximal support vertex was removed; the smaller module includes
    Submodule,
    /// a minimal support vertex was removed; the bigger module projects
    Quotient,
}

#[derive(Debug, Clone)]
pub struct AccessibilityStep<F: Field> {
    pub rep: ThinRep<F>,
    pub removed: usize,
    pub kind: StepKind,
    /// inclusion small -> big (Submodule) or projection big -> small
    /// (Quotient), verified to intertwine the two actions
    pub map: Matrix<F>,
}

#[derive(Debug, Clone)]
pub struct AccessibilityChain<F: Field> {
    pub start: ThinRep<F>,
    pub steps: Vec<AccessibilityStep<F>>,
}

impl<F: Field> AccessibilityChain<F> {
    /// All members, lengths dim, dim-1, ..., 1.
    pub fn reps(&self) -> Vec<&ThinRep<F>> {
        let mut out = vec![&self.start];
        out.extend(self.steps.iter().map(|s| &s.rep));
        out
    }
}

/// Walks an indecomposable representation down to a simple one, removing a
/// removable extremal support vertex at each step; max vertices give
/// submodules, min vertices give quotients, each certified by an explicit
/// intertwiner.
pub fn accessibility_chain<F: Field>(rep: &ThinRep<F>) -> Result<AccessibilityChain<F>> {
    if !is_indecomposable(rep)? {
        return Err(Error::NotIndecomposable);
    }
    let f = rep.field().clone();
    let mut steps = Vec::new();
    let mut current = rep.clone();
    while current.dim() > 1 {
        let sposet = current.support().as_poset();
        let local = sposet.removable_extremal()?;
        let removed = current.support().members()[local];
        let is_min = sposet.minimal_elements().contains(&local);
        let kind = if is_min { StepKind::Quotient } else { StepKind::Submodule };
        let smaller = current.restrict_without(removed)?;

        let big = current.support().members().to_vec();
        let small = smaller.support().members().to_vec();
        let map = match kind {
            StepKind::Submodule => Matrix::from_fn(&f, big.len(), small.len(), |i, j| {
                if big[i] == small[j] {
                    f.one()
                } else {
                    f.zero()
                }
            }),
            StepKind::Quotient => Matrix::from_fn(&f, small.len(), big.len(), |i, j| {
                if small[i] == big[j] {
                    f.one()
                } else {
                    f.zero()
                }
            }),
        };
        for &(x, y) in current.parent().intervals().iter() {
            let a_big = current.action_matrix(x, y);
            let a_small = smaller.action_matrix(x, y);
            let ok = match kind {
                StepKind::Submodule => a_big.mul(&f, &map) == map.mul(&f, &a_small),
                StepKind::Quotient => a_small.mul(&f, &map) == map.mul(&f, &a_big),
            };
            assert!(ok, "accessibility step must intertwine the actions");
        }
        assert!(smaller.support().as_poset().is_connected());
        steps.push(AccessibilityStep { rep: smaller.clone(), removed, kind, map });
        current = smaller;
    }
    Ok(AccessibilityChain { start: rep.clone(), steps })
}

/// The lattice of submodules of the projective P_x: down-closed subsets of
/// {z : z <= x} ordered by inclusion, with meets and joins intersection and
/// union.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubmoduleLattice {
    pub generator: usize,
    pub ground: Vec<usize>,
    pub members: Vec<Vec<usize>>,
    pub distributive: bool,
}

pub fn submodule_lattice(poset: &Poset, x: usize) -> Result<SubmoduleLattice> {
    let ground: Vec<usize> = (0..poset.len()).filter(|&z| poset.leq(z, x)).collect();
    if ground.len() > DEFAULT_ENUMERATION_LIMIT {
        return Err(Error::TooLarge { size: ground.len(), limit: DEFAULT_ENUMERATION_LIMIT });
    }
    let mut members = Vec::new();
    for mask in 0u64..(1u64 << ground.len()) {
        let subset: Vec<usize> = ground
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &z)| z)
            .collect();
        let down_closed = subset
            .iter()
            .all(|&z| ground.iter().all(|&w| !poset.leq(w, z) || subset.contains(&w)));
        if down_closed {
            members.push(subset);
        }
    }
    members.sort_by_key(|s| (s.len(), s.clone()));
    let as_set =
        |v: &[usize]| -> std::collections::BTreeSet<usize> { v.iter().copied().collect() };
    let mut distributive = true;
    for a in &members {
        for b in &members {
            for c in &members {
                let (sa, sb, sc) = (as_set(a), as_set(b), as_set(c));
                let join_bc: std::collections::BTreeSet<usize> = sb.union(&sc).copied().collect();
                let lhs: std::collections::BTreeSet<usize> =
                    sa.intersection(&join_bc).copied().collect();
                let ab: std::collections::BTreeSet<usize> =
                    sa.intersection(&sb).copied().collect();
                let ac: std::collections::BTreeSet<usize> =
                    sa.intersection(&sc).copied().collect();
                let rhs: std::collections::BTreeSet<usize> = ab.union(&ac).copied().collect();
                if lhs != rhs {
                    distributive = false;
                }
            }
        }
    }
    Ok(SubmoduleLattice { generator: x, ground, members, distributive })
}

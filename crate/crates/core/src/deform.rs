//! Deformations of incidence algebras: construction from a 2-cocycle,
//! triviality and isomorphism decisions, recognition from structure
//! constants, standard automorphisms, and annihilator ideals.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cocycle::{
    normalize_2cocycle, reduce_modulo_coboundaries, same_class, weak_chains, MultCochain,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poset::{
    ClosedSubposet, Poset, PosetAutomorphism, Preorder, DEFAULT_AUTOMORPHISM_LIMIT,
    DEFAULT_ENUMERATION_LIMIT,
};

/// I_lambda(P, K): basis f_{xy} over the intervals x <= y with
/// f_{xy} * f_{yz} = lambda(x,y,z) f_{xz}.
#[derive(Debug, Clone)]
pub struct DeformedAlgebra<F: Field> {
    poset: Arc<Poset>,
    field: F,
    lambda: MultCochain<F>,
    intervals: Vec<(usize, usize)>,
}

impl<F: Field> DeformedAlgebra<F> {
    /// Verifies the cocycle condition and re-verifies associativity on
    /// every basis triple, then builds the algebra.
    pub fn build(poset: Arc<Poset>, lambda: MultCochain<F>) -> Result<DeformedAlgebra<F>> {
        assert_eq!(lambda.degree(), 2);
        assert_eq!(*lambda.poset(), poset);
        if !lambda.is_cocycle() {
            return Err(Error::NotACocycle);
        }
        let field = lambda.field().clone();
        let intervals = poset.intervals();
        let alg = DeformedAlgebra { poset, field, lambda, intervals };
        let n = alg.intervals.len();
        for i in 0..n {
            for j in 0..n {
                let ij = alg.mul_basis(i, j);
                for k in 0..n {
                    let jk = alg.mul_basis(j, k);
                    let left = match &ij {
                        None => None,
                        Some((m, c)) => {
                            alg.mul_basis(*m, k).map(|(t, c2)| (t, alg.field.mul(c, &c2)))
                        }
                    };
                    let right = match &jk {
                        None => None,
                        Some((m, c)) => {
                            alg.mul_basis(i, *m).map(|(t, c2)| (t, alg.field.mul(c, &c2)))
                        }
                    };
                    if left != right {
                        return Err(Error::NotACocycle);
                    }
                }
            }
        }
        Ok(alg)
    }

    pub fn undeformed(poset: Arc<Poset>, field: F) -> DeformedAlgebra<F> {
        let lambda = MultCochain::constant_one(poset.clone(), field, 2);
        DeformedAlgebra::build(poset, lambda).expect("constant cocycle")
    }

    pub fn poset(&self) -> &Arc<Poset> {
        &self.poset
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn lambda(&self) -> &MultCochain<F> {
        &self.lambda
    }

    pub fn dim(&self) -> usize {
        self.intervals.len()
    }

    pub fn intervals(&self) -> &[(usize, usize)] {
        &self.intervals
    }

    pub fn basis_index(&self, x: usize, y: usize) -> Option<usize> {
        self.intervals.iter().position(|&p| p == (x, y))
    }

    /// f_i * f_j as (basis index, coefficient); None encodes zero.
    pub fn mul_basis(&self, i: usize, j: usize) -> Option<(usize, F::Elem)> {
        let (x, y) = self.intervals[i];
        let (t, z) = self.intervals[j];
        if y != t {
            return None;
        }
        let k = self.basis_index(x, z).expect("transitivity of the order");
        Some((k, self.lambda.value(&[x, y, z]).clone()))
    }

    pub fn mul_elems(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (i, ai) in a.iter().enumerate() {
            if f.is_zero(ai) {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if f.is_zero(bj) {
                    continue;
                }
                if let Some((k, c)) = self.mul_basis(i, j) {
                    let t = f.mul(&f.mul(ai, bj), &c);
                    out[k] = f.add(&out[k], &t);
                }
            }
        }
        out
    }

    /// The two-sided unit sum_x lambda(x,x,x)^{-1} f_{xx}.
    pub fn unit(&self) -> Vec<F::Elem> {
        let f = &self.field;
        let mut u = vec![f.zero(); self.dim()];
        for (i, &(x, y)) in self.intervals.iter().enumerate() {
            if x == y {
                u[i] = f.inv(self.lambda.value(&[x, x, x])).expect("unit values");
            }
        }
        u
    }

    /// The multiplication table in a basis with idempotent diagonal: the
    /// cocycle is normalized first (same class), so the diagonal elements
    /// are orthogonal idempotents and recognition round-trips.
    pub fn to_structure_constants(&self) -> StructureConstantAlgebra<F> {
        let (mu, _) = normalize_2cocycle(&self.lambda).expect("stored cocycle");
        let f = &self.field;
        let labels: Vec<String> = self
            .intervals
            .iter()
            .map(|&(x, y)| format!("f[{},{}]", self.poset.label(x), self.poset.label(y)))
            .collect();
        let idempotents: Vec<usize> = self
            .intervals
            .iter()
            .enumerate()
            .filter(|(_, &(x, y))| x == y)
            .map(|(i, _)| i)
            .collect();
        let n = self.intervals.len();
        let mut table = vec![vec![Vec::new(); n]; n];
        for (i, &(x, y)) in self.intervals.iter().enumerate() {
            for (j, &(t, z)) in self.intervals.iter().enumerate() {
                if y != t {
                    continue;
                }
                let k = self.basis_index(x, z).unwrap();
                let c = mu.value(&[x, y, z]).clone();
                if !f.is_zero(&c) {
                    table[i][j].push((k, c));
                }
            }
        }
        StructureConstantAlgebra { basis: labels, idempotents, field: f.clone(), table }
    }
}

/// Trivial iff the class of lambda vanishes; the witness alpha gives the
/// basis rescaling f_{xy} -> alpha(x,y) f_{xy} onto the incidence algebra.
pub fn is_trivial_deformation<F: Field>(
    alg: &DeformedAlgebra<F>,
) -> Result<(bool, Option<MultCochain<F>>)> {
    let report = reduce_modulo_coboundaries(alg.lambda())?;
    Ok((report.trivial, report.witness))
}

/// Searches Aut(P) for sigma with lambda_A^sigma * lambda_B^{-1} a
/// coboundary; returns (sigma, alpha) on success.
pub fn deformations_isomorphic<F: Field>(
    a: &DeformedAlgebra<F>,
    b: &DeformedAlgebra<F>,
) -> Result<Option<(PosetAutomorphism, MultCochain<F>)>> {
    deformations_isomorphic_with_limit(a, b, DEFAULT_AUTOMORPHISM_LIMIT)
}

pub fn deformations_isomorphic_with_limit<F: Field>(
    a: &DeformedAlgebra<F>,
    b: &DeformedAlgebra<F>,
    limit: usize,
) -> Result<Option<(PosetAutomorphism, MultCochain<F>)>> {
    if a.poset() != b.poset() || a.field() != b.field() {
        return Err(Error::MismatchedParent);
    }
    for sigma in a.poset().automorphism_group_with_limit(limit)? {
        let twisted = a.lambda().apply_automorphism(&sigma);
        let (same, witness) = same_class(&twisted, b.lambda())?;
        if same {
            return Ok(Some((sigma, witness.expect("trivial class has a witness"))));
        }
    }
    Ok(None)
}

/// An abstract finite-dimensional algebra presented by structure constants
/// on a designated basis with designated diagonal idempotents.
#[derive(Debug, Clone)]
pub struct StructureConstantAlgebra<F: Field> {
    pub basis: Vec<String>,
    pub idempotents: Vec<usize>,
    pub field: F,
    /// table[i][j] = basis expansion of b_i * b_j
    pub table: Vec<Vec<Vec<(usize, F::Elem)>>>,
}

impl<F: Field> StructureConstantAlgebra<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn product_vec(&self, i: usize, j: usize) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (k, c) in &self.table[i][j] {
            out[*k] = f.add(&out[*k], c);
        }
        out
    }

    pub fn mul_vectors(&self, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.dim()];
        for (i, ai) in a.iter().enumerate() {
            if f.is_zero(ai) {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if f.is_zero(bj) {
                    continue;
                }
                let scale = f.mul(ai, bj);
                for (k, c) in &self.table[i][j] {
                    let t = f.mul(&scale, c);
                    out[*k] = f.add(&out[*k], &t);
                }
            }
        }
        out
    }

    fn basis_vec(&self, i: usize) -> Vec<F::Elem> {
        let f = &self.field;
        let mut v = vec![f.zero(); self.dim()];
        v[i] = f.one();
        v
    }

    pub fn is_associative(&self) -> bool {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = self.product_vec(i, j);
                for k in 0..n {
                    let jk = self.product_vec(j, k);
                    let left = self.mul_vectors(&ij, &self.basis_vec(k));
                    let right = self.mul_vectors(&self.basis_vec(i), &jk);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Re-indexes the basis; perm[old] = new position.
    pub fn permute_basis(&self, perm: &[usize]) -> StructureConstantAlgebra<F> {
        let n = self.dim();
        assert_eq!(perm.len(), n);
        let mut inv = vec![0usize; n];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        let basis = (0..n).map(|new| self.basis[inv[new]].clone()).collect();
        let idempotents = self.idempotents.iter().map(|&i| perm[i]).collect();
        let mut table = vec![vec![Vec::new(); n]; n];
        for i in 0..n {
            for j in 0..n {
                table[perm[i]][perm[j]] =
                    self.table[i][j].iter().map(|(k, c)| (perm[*k], c.clone())).collect();
            }
        }
        StructureConstantAlgebra { basis, idempotents, field: self.field.clone(), table }
    }
}

#[derive(Debug, Clone)]
pub enum RecognizedOrder {
    Poset(Poset),
    Preorder(Preorder),
}

/// Result of recognizing a structural-basis algebra as a (deformed)
/// incidence algebra of a poset or quasi-ordered set.
#[derive(Debug, Clone)]
pub struct Recognition<F: Field> {
    pub order: RecognizedOrder,
    /// element i of the order is the idempotent basis[idempotents[i]]
    pub elements: Vec<String>,
    /// lambda(i,j,k) on weak triples i <= j <= k of the recognized order
    pub lambda: BTreeMap<(usize, usize, usize), F::Elem>,
    /// (i,j) -> basis index spanning e_i A e_j
    pub basis_match: BTreeMap<(usize, usize), usize>,
}

impl<F: Field> Recognition<F> {
    /// The recognized poset with its deformation cocycle; None for
    /// quasi-ordered (non-antisymmetric) recognitions.
    pub fn as_poset_deformation(&self, field: &F) -> Option<(Arc<Poset>, MultCochain<F>)> {
        let RecognizedOrder::Poset(p) = &self.order else { return None };
        let p = Arc::new(p.clone());
        let mut map = BTreeMap::new();
        for (&(i, j, k), v) in &self.lambda {
            map.insert(vec![i, j, k], v.clone());
        }
        let lambda = MultCochain::from_partial(p.clone(), field.clone(), 2, map).ok()?;
        Some((p, lambda))
    }
}

/// Reconstruction from structure constants. The designated idempotents must
/// be orthogonal idempotents; every other basis vector must live in a
/// single block e_i A e_j (else MalformedBasis); blocks must be at most
/// one-dimensional and nonzero blocks must compose to nonzero blocks, else
/// the algebra is not a deformed incidence algebra and None comes back.
pub fn recognize_incidence<F: Field>(
    alg: &StructureConstantAlgebra<F>,
) -> Result<Option<Recognition<F>>> {
    let f = &alg.field;
    let n = alg.dim();
    let e = &alg.idempotents;
    let m = e.len();

    for (a, &i) in e.iter().enumerate() {
        for (b, &j) in e.iter().enumerate() {
            let prod = alg.product_vec(i, j);
            let expect = if a == b { alg.basis_vec(i) } else { vec![f.zero(); n] };
            if prod != expect {
                return Ok(None);
            }
        }
    }
    if !alg.is_associative() {
        return Ok(None);
    }

    // block support of every non-idempotent basis vector
    let mut block_of: Vec<Option<(usize, usize)>> = vec![None; n];
    for v in 0..n {
        if let Some(pos) = e.iter().position(|&x| x == v) {
            block_of[v] = Some((pos, pos));
            continue;
        }
        let vec_v = alg.basis_vec(v);
        let mut home: Option<(usize, usize)> = None;
        let mut sum = vec![f.zero(); n];
        for (a, &i) in e.iter().enumerate() {
            let left = alg.mul_vectors(&alg.basis_vec(i), &vec_v);
            for (b, &j) in e.iter().enumerate() {
                let piece = alg.mul_vectors(&left, &alg.basis_vec(j));
                if piece.iter().any(|c| !f.is_zero(c)) {
                    if piece != vec_v || home.is_some() {
                        return Err(Error::MalformedBasis(format!(
                            "basis vector `{}` is not supported in a single block",
                            alg.basis[v]
                        )));
                    }
                    home = Some((a, b));
                }
                for (s, p) in sum.iter_mut().zip(piece.iter()) {
                    *s = f.add(s, p);
                }
            }
        }
        if sum != vec_v || home.is_none() {
            return Err(Error::MalformedBasis(format!(
                "basis vector `{}` is not supported in a single block",
                alg.basis[v]
            )));
        }
        block_of[v] = home;
    }

    // at most one basis vector per block; diagonal blocks carry only e_i
    let mut block_vector: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for v in 0..n {
        let (i, j) = block_of[v].unwrap();
        if block_vector.insert((i, j), v).is_some() {
            return Ok(None);
        }
    }
    for (a, &i) in e.iter().enumerate() {
        if block_vector.get(&(a, a)) != Some(&i) {
            return Ok(None);
        }
    }

    // relation plus transitive nonvanishing of composition
    let rel = |i: usize, j: usize| -> bool { block_vector.contains_key(&(i, j)) };
    let mut lambda = BTreeMap::new();
    for i in 0..m {
        for j in 0..m {
            if !rel(i, j) {
                continue;
            }
            for k in 0..m {
                if !rel(j, k) {
                    continue;
                }
                let prod = alg.product_vec(block_vector[&(i, j)], block_vector[&(j, k)]);
                if prod.iter().all(|c| f.is_zero(c)) {
                    return Ok(None);
                }
                let Some(&vik) = block_vector.get(&(i, k)) else {
                    return Err(Error::MalformedBasis(
                        "product lands outside the designated basis blocks".into(),
                    ));
                };
                let mut coeff = None;
                for (t, c) in prod.iter().enumerate() {
                    if f.is_zero(c) {
                        continue;
                    }
                    if t != vik || coeff.is_some() {
                        return Err(Error::MalformedBasis(
                            "product is not a multiple of the block basis vector".into(),
                        ));
                    }
                    coeff = Some(c.clone());
                }
                lambda.insert((i, j, k), coeff.unwrap());
            }
        }
    }

    let elements: Vec<String> = e.iter().map(|&i| alg.basis[i].clone()).collect();
    let mut leq = vec![false; m * m];
    for i in 0..m {
        for j in 0..m {
            leq[i * m + j] = rel(i, j);
        }
    }
    let preorder = Preorder::new(elements.clone(), leq)
        .map_err(|_| Error::MalformedBasis("block relation is not transitive".into()))?;
    let order = match preorder.clone().into_poset() {
        Some(p) => RecognizedOrder::Poset(p),
        None => RecognizedOrder::Preorder(preorder),
    };
    Ok(Some(Recognition { order, elements, lambda, basis_match: block_vector }))
}

/// The standard automorphism f_{xy} -> gamma(x,y) f_{sigma^{-1}x,
/// sigma^{-1}y} of I_lambda, where gamma combines the class-correcting
/// rescaling with the supplied 1-cocycle twist.
#[derive(Debug, Clone)]
pub struct BasisMap<F: Field> {
    pub sigma: PosetAutomorphism,
    pub coeffs: BTreeMap<(usize, usize), F::Elem>,
}

impl<F: Field> BasisMap<F> {
    pub fn is_identity(&self, field: &F) -> bool {
        self.sigma.is_identity() && self.coeffs.values().all(|c| field.is_one(c))
    }
}

pub fn standard_automorphism<F: Field>(
    alg: &DeformedAlgebra<F>,
    sigma: &PosetAutomorphism,
    alpha: &MultCochain<F>,
) -> Result<BasisMap<F>> {
    assert_eq!(alpha.degree(), 1);
    if !sigma.preserves(alg.poset()) {
        return Err(Error::ClassNotFixed);
    }
    if !alpha.is_cocycle() {
        return Err(Error::NotACocycle);
    }
    // gamma with delta(gamma) = lambda * (lambda^{sigma^{-1}})^{-1}
    let twisted = alg.lambda().apply_automorphism(&sigma.inverse());
    let (fixed, witness) = same_class(alg.lambda(), &twisted)?;
    if !fixed {
        return Err(Error::ClassNotFixed);
    }
    let gamma = witness.expect("trivial class has a witness").mul(alpha);
    let coeffs: BTreeMap<(usize, usize), F::Elem> = weak_chains(alg.poset(), 2)
        .into_iter()
        .map(|pair| ((pair[0], pair[1]), gamma.value(&pair).clone()))
        .collect();
    let map = BasisMap { sigma: sigma.clone(), coeffs };
    verify_basis_map(alg, &map)?;
    Ok(map)
}

/// Multiplicativity of a candidate basis map on every composable pair.
pub fn verify_basis_map<F: Field>(alg: &DeformedAlgebra<F>, map: &BasisMap<F>) -> Result<()> {
    let f = alg.field();
    let inv = map.sigma.inverse();
    for &(x, y) in alg.intervals() {
        for &(u, z) in alg.intervals() {
            if y != u {
                continue;
            }
            let lhs = f.mul(alg.lambda().value(&[x, y, z]), &map.coeffs[&(x, z)]);
            let rhs = f.mul(
                &f.mul(&map.coeffs[&(x, y)], &map.coeffs[&(y, z)]),
                alg.lambda().value(&[inv.apply(x), inv.apply(y), inv.apply(z)]),
            );
            if lhs != rhs {
                return Err(Error::ClassNotFixed);
            }
        }
    }
    Ok(())
}

/// The ideals annihilating thin modules: the span of {f_{xy} : (x,y) not in
/// rel(S)} for each closed subposet S, in bijection with closed_subposets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnihilatorIdeal {
    /// intervals spanning the ideal, lexicographic
    pub basis: Vec<(usize, usize)>,
    /// index of the complementary closed subposet in enumeration order
    pub subposet_index: usize,
}

pub fn two_sided_ideals(poset: &Poset) -> Result<Vec<(AnnihilatorIdeal, ClosedSubposet)>> {
    two_sided_ideals_with_limit(poset, DEFAULT_ENUMERATION_LIMIT)
}

pub fn two_sided_ideals_with_limit(
    poset: &Poset,
    limit: usize,
) -> Result<Vec<(AnnihilatorIdeal, ClosedSubposet)>> {
    let subposets = poset.closed_subposets_with_limit(limit)?;
    let intervals = poset.intervals();
    Ok(subposets
        .into_iter()
        .enumerate()
        .map(|(idx, s)| {
            let basis: Vec<(usize, usize)> =
                intervals.iter().copied().filter(|&(x, y)| !s.rel(x, y)).collect();
            (AnnihilatorIdeal { basis, subposet_index: idx }, s)
        })
        .collect())
}

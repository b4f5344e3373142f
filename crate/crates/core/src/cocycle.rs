//! Multiplicative cochains on the order complex: cocycle and coboundary
//! calculus, triviality decisions by exact integer linear algebra, and the
//! universal-coefficient structure of H^n(Delta(P), K*).
//!
//! Values live on all weakly increasing chains (the domain of deformation
//! data); cohomology itself is computed on strict chains, with the
//! normalization step bridging the two in degree 2.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::complex::{FinAbGroup, OrderComplex};
use crate::error::{Error, Result};
use crate::field::{factor_prime_power, Field, FieldClass, Gf, UnitCoords};
use crate::intmat::{smith_normal_form, solve_int, solve_mod, IntMatrix, LatticeReducer, Snf};
use crate::poset::Poset;

/// All weakly increasing index tuples of the given length.
pub fn weak_chains(poset: &Poset, len: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let n = poset.len();
    let mut out: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    for _ in 1..len {
        let mut next = Vec::new();
        for c in &out {
            let last = *c.last().unwrap();
            for y in 0..n {
                if poset.leq(last, y) {
                    let mut ext = c.clone();
                    ext.push(y);
                    next.push(ext);
                }
            }
        }
        next.sort();
        out = next;
    }
    out
}

fn chain_label(poset: &Poset, chain: &[usize]) -> String {
    chain.iter().map(|&i| poset.label(i)).collect::<Vec<_>>().join(" ")
}

/// A degree-n function from weakly increasing (n+1)-chains to units of the
/// coefficient field.
#[derive(Debug, Clone)]
pub struct MultCochain<F: Field> {
    poset: Arc<Poset>,
    field: F,
    degree: usize,
    values: BTreeMap<Vec<usize>, F::Elem>,
}

impl<F: Field> PartialEq for MultCochain<F> {
    fn eq(&self, other: &Self) -> bool {
        self.poset == other.poset && self.degree == other.degree && self.values == other.values
    }
}

impl<F: Field> MultCochain<F> {
    pub fn constant_one(poset: Arc<Poset>, field: F, degree: usize) -> Self {
        let values =
            weak_chains(&poset, degree + 1).into_iter().map(|c| (c, field.one())).collect();
        MultCochain { poset, field, degree, values }
    }

    /// Builds a cochain from a complete value map. Every weak chain of the
    /// degree must be present and every value must be a unit.
    pub fn from_map(
        poset: Arc<Poset>,
        field: F,
        degree: usize,
        map: BTreeMap<Vec<usize>, F::Elem>,
    ) -> Result<Self> {
        let domain = weak_chains(&poset, degree + 1);
        for chain in &domain {
            match map.get(chain) {
                None => return Err(Error::MissingValue(chain_label(&poset, chain))),
                Some(v) if field.is_zero(v) => {
                    return Err(Error::NotAUnit(chain_label(&poset, chain)))
                }
                _ => {}
            }
        }
        if map.len() != domain.len() {
            let extra = map.keys().find(|k| !domain.contains(k)).unwrap();
            return Err(Error::Parse(format!(
                "value on non-chain [{}]",
                chain_label(&poset, extra)
            )));
        }
        Ok(MultCochain { poset, field, degree, values: map })
    }

    /// Missing chains default to 1 (the file-format convention).
    pub fn from_partial(
        poset: Arc<Poset>,
        field: F,
        degree: usize,
        map: BTreeMap<Vec<usize>, F::Elem>,
    ) -> Result<Self> {
        let mut full: BTreeMap<Vec<usize>, F::Elem> = weak_chains(&poset, degree + 1)
            .into_iter()
            .map(|c| (c, field.one()))
            .collect();
        for (chain, v) in map {
            if !full.contains_key(&chain) {
                return Err(Error::Parse(format!(
                    "[{}] is not a weakly increasing chain",
                    chain_label(&poset, &chain)
                )));
            }
            if field.is_zero(&v) {
                return Err(Error::NotAUnit(chain_label(&poset, &chain)));
            }
            full.insert(chain, v);
        }
        Ok(MultCochain { poset, field, degree, values: full })
    }

    /// Builds from values on strict chains (complex order), ones elsewhere.
    pub fn from_strict_values(
        poset: Arc<Poset>,
        field: F,
        degree: usize,
        strict_values: &[F::Elem],
    ) -> Result<Self> {
        let complex = OrderComplex::new(poset.clone());
        let strict = complex.chains(degree);
        assert_eq!(strict.len(), strict_values.len());
        let mut map = BTreeMap::new();
        for (c, v) in strict.iter().zip(strict_values) {
            map.insert(c.clone(), v.clone());
        }
        MultCochain::from_partial(poset, field, degree, map)
    }

    pub fn poset(&self) -> &Arc<Poset> {
        &self.poset
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn value(&self, chain: &[usize]) -> &F::Elem {
        self.values.get(chain).expect("cochains are total on their domain")
    }

    pub fn values(&self) -> impl Iterator<Item = (&Vec<usize>, &F::Elem)> {
        self.values.iter()
    }

    pub fn is_constant_one(&self) -> bool {
        self.values.values().all(|v| self.field.is_one(v))
    }

    /// Pointwise product.
    pub fn mul(&self, other: &MultCochain<F>) -> MultCochain<F> {
        assert_eq!(self.degree, other.degree);
        assert_eq!(self.poset, other.poset);
        let values = self
            .values
            .iter()
            .map(|(c, v)| (c.clone(), self.field.mul(v, other.value(c))))
            .collect();
        MultCochain { poset: self.poset.clone(), field: self.field.clone(), degree: self.degree, values }
    }

    /// Pointwise inverse.
    pub fn invert(&self) -> MultCochain<F> {
        let values = self
            .values
            .iter()
            .map(|(c, v)| (c.clone(), self.field.inv(v).expect("unit values")))
            .collect();
        MultCochain { poset: self.poset.clone(), field: self.field.clone(), degree: self.degree, values }
    }

    /// The multiplicative coboundary: (delta c)(s_0..s_{n+1}) =
    /// prod_i c(s_0..ŝ_i..s_{n+1})^{(-1)^i}.
    pub fn coboundary(&self) -> MultCochain<F> {
        let f = &self.field;
        let mut values = BTreeMap::new();
        for chain in weak_chains(&self.poset, self.degree + 2) {
            let mut acc = f.one();
            for i in 0..chain.len() {
                let mut face = chain.clone();
                face.remove(i);
                let v = self.value(&face);
                acc = if i % 2 == 0 {
                    f.mul(&acc, v)
                } else {
                    f.mul(&acc, &f.inv(v).expect("unit values"))
                };
            }
            values.insert(chain, acc);
        }
        MultCochain {
            poset: self.poset.clone(),
            field: self.field.clone(),
            degree: self.degree + 1,
            values,
        }
    }

    /// The multiplicative alternating-product condition on every weak chain
    /// of length degree+2.
    pub fn is_cocycle(&self) -> bool {
        self.coboundary().is_constant_one()
    }

    /// Pulls the cochain back along a poset automorphism:
    /// c^sigma(t) = c(sigma(t)).
    pub fn apply_automorphism(&self, sigma: &crate::poset::PosetAutomorphism) -> MultCochain<F> {
        let values = self
            .values
            .keys()
            .map(|chain| {
                let image: Vec<usize> = chain.iter().map(|&x| sigma.apply(x)).collect();
                (chain.clone(), self.value(&image).clone())
            })
            .collect();
        MultCochain { poset: self.poset.clone(), field: self.field.clone(), degree: self.degree, values }
    }

    /// Values on the strict chains of the degree, in complex order.
    pub fn strict_values(&self) -> Vec<F::Elem> {
        let complex = OrderComplex::new(self.poset.clone());
        complex.chains(self.degree).iter().map(|c| self.value(c).clone()).collect()
    }

    fn degenerate_values_are_one(&self) -> bool {
        self.values.iter().all(|(chain, v)| {
            chain.windows(2).all(|w| w[0] != w[1]) || self.field.is_one(v)
        })
    }
}

/// Rescales a 2-cocycle to satisfy mu(x,x,x) = mu(x,x,y) = mu(x,y,y) =
/// mu(y,y,y) = 1, returning (mu, alpha) with mu = lambda * delta(alpha) and
/// alpha(x,y) = lambda(x,x,y)^{-1}.
pub fn normalize_2cocycle<F: Field>(
    lambda: &MultCochain<F>,
) -> Result<(MultCochain<F>, MultCochain<F>)> {
    assert_eq!(lambda.degree(), 2);
    if !lambda.is_cocycle() {
        return Err(Error::NotACocycle);
    }
    let f = lambda.field().clone();
    let mut alpha_map = BTreeMap::new();
    for pair in weak_chains(lambda.poset(), 2) {
        let lam = lambda.value(&[pair[0], pair[0], pair[1]]);
        alpha_map.insert(pair, f.inv(lam).expect("unit values"));
    }
    let alpha = MultCochain {
        poset: lambda.poset().clone(),
        field: f.clone(),
        degree: 1,
        values: alpha_map,
    };
    let mu = lambda.mul(&alpha.coboundary());
    // the four normalization identities, pointwise
    for pair in weak_chains(lambda.poset(), 2) {
        let (x, y) = (pair[0], pair[1]);
        for triple in [[x, x, x], [x, x, y], [x, y, y], [y, y, y]] {
            debug_assert!(f.is_one(mu.value(&triple)), "normalization identity failed");
        }
    }
    Ok((mu, alpha))
}

/// Outcome of a triviality decision: a verified witness when the class is
/// trivial, otherwise the canonical representative of the class.
#[derive(Debug, Clone)]
pub struct TrivialityReport<F: Field> {
    pub trivial: bool,
    pub witness: Option<MultCochain<F>>,
    pub canonical_rep: Option<MultCochain<F>>,
}

struct CochainSystem {
    complex: OrderComplex,
    /// rows = strict n-chains, cols = strict (n-1)-chains
    delta: IntMatrix,
    snf: Snf,
}

fn cochain_system(poset: &Arc<Poset>, degree: usize) -> CochainSystem {
    let complex = OrderComplex::new(poset.clone());
    let delta = complex.boundary_or_zero(degree).transpose();
    let snf = smith_normal_form(&delta);
    CochainSystem { complex, delta, snf }
}

/// Decides whether a cocycle is a coboundary, producing either a pointwise
/// verified witness or the canonical coset representative. Degree 2 data on
/// weak chains is normalized first; the normalizing rescale is folded back
/// into the witness.
pub fn reduce_modulo_coboundaries<F: Field>(c: &MultCochain<F>) -> Result<TrivialityReport<F>> {
    let degree = c.degree();
    if degree == 0 {
        return Err(Error::DegreeOutOfRange { degree: 0, top: -1 });
    }
    if !c.is_cocycle() {
        return Err(Error::NotACocycle);
    }
    let f = c.field().clone();

    // bring the weak data into strict-chain form
    let (work, normalizer) = if degree == 2 {
        let (mu, alpha) = normalize_2cocycle(c)?;
        (mu, Some(alpha))
    } else if degree >= 3 && !c.degenerate_values_are_one() {
        return Err(Error::NotACocycle);
    } else {
        (c.clone(), None)
    };

    let sys = cochain_system(c.poset(), degree);
    let targets = work.strict_values();
    let all_values: Vec<F::Elem> = c.values.values().cloned().collect();
    let coords = f.unit_coords(&all_values)?;

    let mut witness_exps: Vec<Vec<BigInt>> =
        vec![vec![BigInt::zero(); coords.dims()]; sys.delta.cols];
    let mut canonical_exps: Vec<Vec<BigInt>> =
        vec![vec![BigInt::zero(); coords.dims()]; sys.delta.rows];
    let mut trivial = true;

    let encoded: Vec<Vec<BigInt>> =
        targets.iter().map(|v| coords.encode(&f, v)).collect::<Result<_>>()?;
    for coord in 0..coords.dims() {
        let b: Vec<BigInt> = encoded.iter().map(|e| e[coord].clone()).collect();
        let solved = match coords.modulus(coord) {
            Some(m) => solve_mod(&sys.snf, &b, &m),
            None => solve_int(&sys.snf, &b),
        };
        match solved {
            Some(x) => {
                for (i, xi) in x.into_iter().enumerate() {
                    witness_exps[i][coord] = xi;
                }
            }
            None => {
                trivial = false;
            }
        }
        // canonical representative coordinate, even when solvable (cheap)
        let mut gens: Vec<Vec<BigInt>> = (0..sys.delta.cols)
            .map(|j| (0..sys.delta.rows).map(|i| sys.delta[(i, j)].clone()).collect())
            .collect();
        if let Some(m) = coords.modulus(coord) {
            for i in 0..sys.delta.rows {
                let mut e = vec![BigInt::zero(); sys.delta.rows];
                e[i] = m.clone();
                gens.push(e);
            }
        }
        let reducer = LatticeReducer::new(sys.delta.rows, &gens);
        for (i, r) in reducer.reduce(&b).into_iter().enumerate() {
            canonical_exps[i][coord] = r;
        }
    }

    if trivial {
        let strict: Vec<F::Elem> =
            witness_exps.iter().map(|e| coords.decode(&f, e)).collect();
        let mut witness = MultCochain::from_strict_values(
            c.poset().clone(),
            f.clone(),
            degree - 1,
            &strict,
        )?;
        if let Some(alpha) = &normalizer {
            witness = witness.mul(&alpha.invert());
        }
        debug_assert_eq!(witness.coboundary(), *c, "witness must satisfy delta(a) = c");
        Ok(TrivialityReport { trivial: true, witness: Some(witness), canonical_rep: None })
    } else {
        let strict: Vec<F::Elem> =
            canonical_exps.iter().map(|e| coords.decode(&f, e)).collect();
        let rep =
            MultCochain::from_strict_values(c.poset().clone(), f.clone(), degree, &strict)?;
        let _ = &sys.complex;
        Ok(TrivialityReport { trivial: false, witness: None, canonical_rep: Some(rep) })
    }
}

/// Whether two cocycles of equal degree differ by a coboundary; the witness
/// satisfies delta(a) = c1 * c2^{-1}.
pub fn same_class<F: Field>(
    c1: &MultCochain<F>,
    c2: &MultCochain<F>,
) -> Result<(bool, Option<MultCochain<F>>)> {
    if c1.degree() != c2.degree() || c1.poset() != c2.poset() {
        return Err(Error::MismatchedParent);
    }
    let report = reduce_modulo_coboundaries(&c1.mul(&c2.invert()))?;
    Ok((report.trivial, report.witness))
}

/// Every solution of A x = 0 over Z/m (m >= 1), via the Smith form.
pub fn kernel_mod(a: &IntMatrix, m: &BigInt, cap: usize) -> Result<Vec<Vec<BigInt>>> {
    let snf = smith_normal_form(a);
    let diag = snf.diagonal();
    let mut counts: Vec<u64> = Vec::with_capacity(a.cols);
    let mut steps: Vec<BigInt> = Vec::with_capacity(a.cols);
    let mut total: u64 = 1;
    for i in 0..a.cols {
        let s = diag.get(i).cloned().unwrap_or_else(BigInt::zero);
        let g = if s.is_zero() { m.clone() } else { s.gcd(m) };
        let step = m / &g;
        let count = g.to_u64().expect("small modulus");
        total = total.saturating_mul(count.max(1));
        if total as usize > cap {
            return Err(Error::TooLarge { size: total as usize, limit: cap });
        }
        counts.push(count.max(1));
        steps.push(step);
    }
    let mut out = Vec::with_capacity(total as usize);
    let mut idx = vec![0u64; a.cols];
    loop {
        let y: Vec<BigInt> =
            (0..a.cols).map(|i| (&steps[i] * BigInt::from(idx[i])).mod_floor(m)).collect();
        let x = snf.v.mul_vec(&y).into_iter().map(|v| v.mod_floor(m)).collect();
        out.push(x);
        // odometer
        let mut pos = 0;
        loop {
            if pos == a.cols {
                out.sort();
                out.dedup();
                return Ok(out);
            }
            idx[pos] += 1;
            if idx[pos] < counts[pos] {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// One degree-1 cocycle per H^1(Delta(P), F_q*) class: the kernel of the
/// dualized degree-1 boundary modulo m = q-1 is enumerated from its Smith
/// form and deduplicated by the canonical representative modulo the image
/// of the dualized degree-0 boundary.
pub fn h1_transversal(poset: &Arc<Poset>, field: &Gf) -> Result<Vec<MultCochain<Gf>>> {
    let m = BigInt::from(field.q() - 1);
    let complex = OrderComplex::new(poset.clone());
    let edges = complex.chain_count(1);
    // cocycle condition: dual of del_2, rows = triangles, cols = edges
    let cocycle_matrix = complex.boundary_or_zero(2).transpose();
    // coboundary image: dual of del_1, rows = edges, cols = vertices
    let image_matrix = complex.boundary_or_zero(1).transpose();

    let mut gens: Vec<Vec<BigInt>> = (0..image_matrix.cols)
        .map(|j| (0..image_matrix.rows).map(|i| image_matrix[(i, j)].clone()).collect())
        .collect();
    for i in 0..edges {
        let mut e = vec![BigInt::zero(); edges];
        e[i] = m.clone();
        gens.push(e);
    }
    let reducer = LatticeReducer::new(edges, &gens);

    let cocycles = kernel_mod(&cocycle_matrix, &m, 1 << 22)?;
    let mut reps: Vec<Vec<BigInt>> =
        cocycles.iter().map(|z| reducer.reduce(z)).collect();
    reps.sort();
    reps.dedup();

    reps.into_iter()
        .map(|exps| {
            let values: Vec<u32> = exps
                .iter()
                .map(|e| field.exp(e.mod_floor(&m).to_u64().unwrap_or(0)))
                .collect();
            MultCochain::from_strict_values(poset.clone(), field.clone(), 1, &values)
        })
        .collect()
}

/// A degree-n cocycle pairing to the given unit against a generator of the
/// free part of H_n, built from the Smith form of the boundary system: the
/// kernel of del_n is computed exactly, a basis cycle with a +-1 coefficient
/// is selected, and the cochain is supported on that single chain.
///
/// Only available when the complex has no (n+1)-chains (every cochain is
/// then a cocycle and its class is detected by the pairing alone); returns
/// None when that fails or no unimodular-coefficient cycle position exists.
pub fn pairing_cocycle<F: Field>(
    poset: &Arc<Poset>,
    field: F,
    degree: usize,
    value: F::Elem,
) -> Option<MultCochain<F>> {
    let complex = OrderComplex::new(poset.clone());
    if complex.chain_count(degree + 1) != 0 || complex.chain_count(degree) == 0 {
        return None;
    }
    let boundary = complex.boundary_or_zero(degree);
    let snf = smith_normal_form(&boundary);
    let kernel = crate::intmat::kernel_basis(&snf);
    let z = kernel.first()?;
    let pos = z.iter().position(|v| v.abs() == BigInt::one())?;
    let sign_is_positive = z[pos] == BigInt::one();
    let mut strict = vec![field.one(); complex.chain_count(degree)];
    strict[pos] = if sign_is_positive {
        value
    } else {
        field.inv(&value).expect("unit value")
    };
    MultCochain::from_strict_values(poset.clone(), field, degree, &strict).ok()
}

// ---------------------------------------------------------------------------
// universal-coefficient structure
// ---------------------------------------------------------------------------

/// H^n(Delta(P), K*) in the shape Hom(H_n, K*) + Ext(H_{n-1}, K*), simplified
/// per field class: free rank contributes copies of K* (resolved to Z/(q-1)
/// over a finite field), torsion contributes finite cyclic factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalGroupExpr {
    pub field: FieldClass,
    /// copies of the full unit group K* (zero for finite fields, where they
    /// are folded into the torsion part)
    pub unit_rank: usize,
    /// finite cyclic factors as a divisor chain
    pub torsion: Vec<BigInt>,
}

impl FormalGroupExpr {
    pub fn order(&self) -> Option<BigInt> {
        if self.unit_rank > 0 {
            return None;
        }
        let mut o = BigInt::one();
        for d in &self.torsion {
            o *= d;
        }
        Some(o)
    }

    pub fn is_trivial(&self) -> bool {
        self.unit_rank == 0 && self.torsion.is_empty()
    }
}

impl std::fmt::Display for FormalGroupExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_trivial() {
            return write!(f, "1");
        }
        let unit_symbol = match self.field {
            FieldClass::Rationals => "Q*",
            _ => "K*",
        };
        let mut parts = Vec::new();
        match self.unit_rank {
            0 => {}
            1 => parts.push(unit_symbol.to_string()),
            r => parts.push(format!("({unit_symbol})^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" x "))
    }
}

/// The structure of H^n from injected homology groups; the poset-level
/// entry point computes those with Smith normal form first.
pub fn cohomology_structure_from_homology(
    h_n: &FinAbGroup,
    h_prev: &FinAbGroup,
    class: &FieldClass,
) -> Result<FormalGroupExpr> {
    let mut torsion_orders: Vec<BigInt> = Vec::new();
    let mut unit_rank = 0;
    match class {
        FieldClass::Finite { q } => {
            factor_prime_power(*q)?;
            let order = BigInt::from(q - 1);
            for _ in 0..h_n.rank {
                if order > BigInt::one() {
                    torsion_orders.push(order.clone());
                }
            }
            for d in h_n.torsion.iter().chain(&h_prev.torsion) {
                let g = d.gcd(&order);
                if g > BigInt::one() {
                    torsion_orders.push(g);
                }
            }
        }
        FieldClass::Rationals => {
            unit_rank = h_n.rank;
            let two = BigInt::from(2);
            for d in h_n.torsion.iter().chain(&h_prev.torsion) {
                if d.gcd(&two) > BigInt::one() {
                    torsion_orders.push(two.clone());
                }
            }
        }
        FieldClass::Symbolic { characteristic, algebraically_closed } => {
            if !algebraically_closed {
                return Err(Error::SymbolicFieldUnsupported);
            }
            unit_rank = h_n.rank;
            // roots of unity of every order prime to the characteristic
            // exist; the Ext side vanishes by divisibility
            for d in &h_n.torsion {
                let mut d = d.clone();
                if *characteristic > 0 {
                    let p = BigInt::from(*characteristic);
                    while (&d % &p).is_zero() {
                        d /= &p;
                    }
                }
                if d > BigInt::one() {
                    torsion_orders.push(d);
                }
            }
        }
    }
    let assembled = FinAbGroup::from_parts(0, &torsion_orders);
    Ok(FormalGroupExpr { field: class.clone(), unit_rank, torsion: assembled.torsion })
}

pub fn cohomology_structure(
    poset: &Poset,
    degree: usize,
    class: &FieldClass,
) -> Result<FormalGroupExpr> {
    let h_n = crate::complex::homology(poset, degree);
    let h_prev = if degree == 0 {
        FinAbGroup::trivial()
    } else {
        crate::complex::homology(poset, degree - 1)
    };
    cohomology_structure_from_homology(&h_n, &h_prev, class)
}

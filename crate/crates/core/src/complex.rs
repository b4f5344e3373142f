//! The order complex of a poset, its integer boundary matrices, and
//! integral homology via Smith normal form.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::intmat::{smith_normal_form, IntMatrix};
use crate::poset::Poset;

/// Strictly increasing chains of a poset, grouped by degree (a degree-n
/// chain has n+1 vertices), lexicographically ordered within each degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderComplex {
    poset: Arc<Poset>,
    chains: Vec<Vec<Vec<usize>>>,
}

impl OrderComplex {
    pub fn new(poset: Arc<Poset>) -> OrderComplex {
        let n = poset.len();
        let mut chains: Vec<Vec<Vec<usize>>> = Vec::new();
        let mut current: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
        while !current.is_empty() {
            chains.push(current.clone());
            let mut next = Vec::new();
            for c in &current {
                let last = *c.last().unwrap();
                for y in 0..n {
                    if poset.lt(last, y) {
                        let mut ext = c.clone();
                        ext.push(y);
                        next.push(ext);
                    }
                }
            }
            next.sort();
            current = next;
        }
        OrderComplex { poset, chains }
    }

    pub fn poset(&self) -> &Arc<Poset> {
        &self.poset
    }

    /// Highest degree with a chain; -1 for the empty poset.
    pub fn top_degree(&self) -> isize {
        self.chains.len() as isize - 1
    }

    pub fn chains(&self, degree: usize) -> &[Vec<usize>] {
        static EMPTY: Vec<Vec<usize>> = Vec::new();
        self.chains.get(degree).map_or(&EMPTY, |v| v)
    }

    pub fn chain_count(&self, degree: usize) -> usize {
        self.chains(degree).len()
    }

    pub fn chain_index(&self, degree: usize, chain: &[usize]) -> Option<usize> {
        self.chains(degree).binary_search_by(|c| c.as_slice().cmp(chain)).ok()
    }

    /// Boundary matrix of `del_n`: rows indexed by degree n-1 chains,
    /// columns by degree n chains; requires 1 <= n <= top degree.
    pub fn boundary_matrix(&self, n: usize) -> Result<IntMatrix> {
        if n < 1 || n as isize > self.top_degree() {
            return Err(Error::DegreeOutOfRange { degree: n, top: self.top_degree() });
        }
        Ok(self.boundary_or_zero(n))
    }

    /// Total version used by homology: a zero-shaped matrix outside the
    /// supported range.
    pub fn boundary_or_zero(&self, n: usize) -> IntMatrix {
        if n == 0 || self.chain_count(n) == 0 {
            let rows = if n == 0 { 0 } else { self.chain_count(n - 1) };
            return IntMatrix::zero(rows, self.chain_count(n));
        }
        let mut m = IntMatrix::zero(self.chain_count(n - 1), self.chain_count(n));
        for (j, chain) in self.chains(n).iter().enumerate() {
            let mut sign = BigInt::one();
            for i in 0..chain.len() {
                let mut face = chain.clone();
                face.remove(i);
                let row = self.chain_index(n - 1, &face).expect("face is a chain");
                m[(row, j)] += &sign;
                sign = -sign;
            }
        }
        m
    }

    /// Euler characteristic from chain counts.
    pub fn euler_characteristic(&self) -> i64 {
        self.chains
            .iter()
            .enumerate()
            .map(|(d, cs)| if d % 2 == 0 { cs.len() as i64 } else { -(cs.len() as i64) })
            .sum()
    }
}

/// A finitely generated abelian group: free rank plus the torsion divisor
/// chain d_1 | d_2 | ... with each d_i >= 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinAbGroup {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl FinAbGroup {
    pub fn trivial() -> FinAbGroup {
        FinAbGroup { rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: usize) -> FinAbGroup {
        FinAbGroup { rank, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Assembles the divisor-chain form from arbitrary cyclic orders.
    pub fn from_parts(rank: usize, cyclic_orders: &[BigInt]) -> FinAbGroup {
        // collect p-power factors, then rebuild the chain greedily
        let mut primary: Vec<(BigInt, u32)> = Vec::new();
        for d in cyclic_orders {
            assert!(*d >= BigInt::from(2));
            let mut m = d.clone();
            let mut p = BigInt::from(2);
            while &p * &p <= m {
                let mut e = 0;
                while (&m % &p).is_zero() {
                    m /= &p;
                    e += 1;
                }
                if e > 0 {
                    primary.push((p.clone(), e));
                }
                p += 1;
            }
            if m > BigInt::one() {
                primary.push((m, 1));
            }
        }
        let mut torsion: Vec<BigInt> = Vec::new();
        loop {
            // take the highest remaining power of each prime into one factor
            let mut chosen: std::collections::BTreeMap<BigInt, (usize, u32)> = Default::default();
            for (i, (p, e)) in primary.iter().enumerate() {
                match chosen.get(p) {
                    Some(&(_, be)) if be >= *e => {}
                    _ => {
                        chosen.insert(p.clone(), (i, *e));
                    }
                }
            }
            if chosen.is_empty() {
                break;
            }
            let mut d = BigInt::one();
            let mut used: Vec<usize> = Vec::new();
            for (p, (i, e)) in &chosen {
                for _ in 0..*e {
                    d *= p;
                }
                used.push(*i);
            }
            used.sort_unstable_by(|a, b| b.cmp(a));
            for i in used {
                primary.remove(i);
            }
            torsion.push(d);
        }
        torsion.reverse(); // ascending divisor chain
        FinAbGroup { rank, torsion }
    }

    pub fn order(&self) -> Option<BigInt> {
        if self.rank > 0 {
            return None;
        }
        let mut o = BigInt::one();
        for d in &self.torsion {
            o *= d;
        }
        Some(o)
    }
}

impl std::fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// H_n of the order complex with integer coefficients.
pub fn homology(poset: &Poset, n: usize) -> FinAbGroup {
    let complex = OrderComplex::new(Arc::new(poset.clone()));
    homology_of(&complex, n)
}

pub fn homology_of(complex: &OrderComplex, n: usize) -> FinAbGroup {
    let k_n = complex.chain_count(n);
    if k_n == 0 {
        return FinAbGroup::trivial();
    }
    let d_n = complex.boundary_or_zero(n);
    let d_next = complex.boundary_or_zero(n + 1);
    let snf_n = smith_normal_form(&d_n);
    let snf_next = smith_normal_form(&d_next);
    let rank = k_n - snf_n.rank() - snf_next.rank();
    let torsion: Vec<BigInt> = snf_next
        .diagonal()
        .into_iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .collect();
    FinAbGroup { rank, torsion }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn complex(p: &Poset) -> OrderComplex {
        OrderComplex::new(Arc::new(p.clone()))
    }

    fn sphere() -> Poset {
        Poset::from_covers(
            &["1", "2", "3", "4", "5", "6"],
            &[("1", "3"), ("1", "4"), ("2", "3"), ("2", "4"), ("3", "5"), ("3", "6"), ("4", "5"), ("4", "6")],
        )
        .unwrap()
    }

    #[test]
    fn chains_of_two_chain() {
        let k = complex(&Poset::chain(2));
        assert_eq!(k.chain_count(0), 2);
        assert_eq!(k.chains(1), &[vec![0, 1]]);
        assert_eq!(k.top_degree(), 1);
    }

    #[test]
    fn crown_has_four_edges_no_triangles() {
        let k = complex(&Poset::crown(2));
        assert_eq!(k.chain_count(1), 4);
        assert_eq!(k.chain_count(2), 0);
    }

    #[test]
    fn sphere_has_eight_triangles() {
        let k = complex(&sphere());
        assert_eq!(k.chain_count(2), 8);
        assert_eq!(k.euler_characteristic(), 2);
    }

    #[test]
    fn two_chain_boundary_column() {
        let k = complex(&Poset::chain(2));
        let m = k.boundary_matrix(1).unwrap();
        assert_eq!((m.rows, m.cols), (2, 1));
        assert_eq!(m[(0, 0)], BigInt::from(-1));
        assert_eq!(m[(1, 0)], BigInt::from(1));
    }

    #[test]
    fn boundary_squares_to_zero() {
        for p in [Poset::chain(4), Poset::crown(3), sphere()] {
            let k = complex(&p);
            for n in 1..=k.top_degree() as usize {
                let a = k.boundary_or_zero(n);
                let b = k.boundary_or_zero(n + 1);
                if b.cols > 0 {
                    assert!(a.mul(&b).is_zero(), "del^2 != 0 at degree {n}");
                }
            }
        }
    }

    #[test]
    fn crown_boundary_rank() {
        let k = complex(&Poset::crown(2));
        let m = k.boundary_matrix(1).unwrap();
        assert_eq!((m.rows, m.cols), (4, 4));
        assert_eq!(smith_normal_form(&m).rank(), 3);
    }

    #[test]
    fn degree_out_of_range() {
        let k = complex(&Poset::chain(2));
        assert!(matches!(k.boundary_matrix(0), Err(Error::DegreeOutOfRange { .. })));
        assert!(matches!(k.boundary_matrix(2), Err(Error::DegreeOutOfRange { .. })));
    }

    #[test]
    fn homology_circle_and_sphere() {
        let crown = Poset::crown(2);
        assert_eq!(homology(&crown, 0), FinAbGroup::free(1));
        assert_eq!(homology(&crown, 1), FinAbGroup::free(1));
        assert_eq!(homology(&crown, 2), FinAbGroup::trivial());

        let s = sphere();
        assert_eq!(homology(&s, 0), FinAbGroup::free(1));
        assert_eq!(homology(&s, 1), FinAbGroup::trivial());
        assert_eq!(homology(&s, 2), FinAbGroup::free(1));
    }

    #[test]
    fn wedge_of_circles_family() {
        for n in 2..=5 {
            let p = Poset::crown(n);
            assert_eq!(homology(&p, 1), FinAbGroup::free(n - 1), "2n-crown, n = {n}");
        }
    }

    #[test]
    fn h0_counts_components() {
        let p = Poset::antichain(3);
        assert_eq!(homology(&p, 0), FinAbGroup::free(3));
        let q = Poset::chain(4);
        assert_eq!(homology(&q, 0), FinAbGroup::free(1));
    }

    #[test]
    fn cone_is_acyclic() {
        // unique minimum => contractible
        let p = Poset::from_covers(
            &["m", "a", "b", "c"],
            &[("m", "a"), ("m", "b"), ("a", "c"), ("b", "c")],
        )
        .unwrap();
        for n in 1..=4 {
            assert!(homology(&p, n).is_trivial());
        }
    }

    #[test]
    fn euler_characteristic_matches_betti_sum() {
        for p in [Poset::chain(3), Poset::crown(2), Poset::crown(3), sphere()] {
            let k = complex(&p);
            let mut chi = 0i64;
            for n in 0..=(k.top_degree().max(0) as usize) {
                let h = homology_of(&k, n);
                let sign = if n % 2 == 0 { 1 } else { -1 };
                chi += sign * h.rank as i64;
            }
            assert_eq!(chi, k.euler_characteristic());
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(FinAbGroup::trivial().to_string(), "0");
        assert_eq!(FinAbGroup::free(1).to_string(), "Z");
        assert_eq!(
            FinAbGroup { rank: 2, torsion: vec![BigInt::from(2), BigInt::from(4)] }.to_string(),
            "Z^2 + Z/2 + Z/4"
        );
    }

    #[test]
    fn divisor_chain_assembly() {
        let g = FinAbGroup::from_parts(0, &[BigInt::from(2), BigInt::from(5)]);
        assert_eq!(g.torsion, vec![BigInt::from(10)]);
        let g = FinAbGroup::from_parts(1, &[BigInt::from(4), BigInt::from(6)]);
        assert_eq!(g.torsion, vec![BigInt::from(2), BigInt::from(12)]);
    }
}

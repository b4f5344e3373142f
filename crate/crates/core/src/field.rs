//! Concrete coefficient fields.
//!
//! Finite fields F_q (q = p^k <= 2^20) are realized by element-encoding
//! tables: an element is the integer c_0 + c_1 p + ... + c_{k-1} p^{k-1}
//! encoding its coordinates over the minimal irreducible modulus polynomial,
//! multiplication goes through discrete logs to the least generator.
//! The rationals use `BigRational` with units encoded as a sign bit plus a
//! prime exponent vector. Both encodings turn multiplicative problems into
//! integer linear algebra.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub const MAX_FINITE_ORDER: u32 = 1 << 20;

/// The field classes the library understands. `Symbolic` has no elements and
/// only answers structural (cohomology) queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldClass {
    Finite { q: u32 },
    Rationals,
    Symbolic { characteristic: u32, algebraically_closed: bool },
}

impl FieldClass {
    /// Parses the CLI spelling: a prime power, `Q`, or `closed:p` (p = 0 for
    /// characteristic zero).
    pub fn parse(s: &str) -> Result<FieldClass> {
        if s == "Q" {
            return Ok(FieldClass::Rationals);
        }
        if let Some(p) = s.strip_prefix("closed:") {
            let characteristic: u32 = p
                .parse()
                .map_err(|_| Error::InvalidField(format!("bad characteristic `{p}`")))?;
            if characteristic != 0 && !is_prime(characteristic) {
                return Err(Error::InvalidField(format!(
                    "characteristic {characteristic} is not prime"
                )));
            }
            return Ok(FieldClass::Symbolic { characteristic, algebraically_closed: true });
        }
        let q: u32 =
            s.parse().map_err(|_| Error::InvalidField(format!("bad field spec `{s}`")))?;
        factor_prime_power(q)?;
        Ok(FieldClass::Finite { q })
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    let n = n as u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// q = p^k with p prime, k >= 1; also enforces the table-size bound.
pub fn factor_prime_power(q: u32) -> Result<(u32, u32)> {
    if q < 2 {
        return Err(Error::InvalidField(format!("field order {q} < 2")));
    }
    if q > MAX_FINITE_ORDER {
        return Err(Error::TooLarge { size: q as usize, limit: MAX_FINITE_ORDER as usize });
    }
    let mut p = 2u32;
    while p * p <= q {
        if q % p == 0 {
            let mut m = q;
            let mut k = 0;
            while m % p == 0 {
                m /= p;
                k += 1;
            }
            if m != 1 {
                return Err(Error::InvalidField(format!("{q} is not a prime power")));
            }
            return Ok((p, k));
        }
        p += 1;
    }
    Ok((q, 1))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// A field handle: elements are plain data, all arithmetic goes through the
/// handle (the "ring operator" style). Handles are cheap to clone and share.
pub trait Field: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }
    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
    fn pow(&self, a: &Self::Elem, n: i64) -> Self::Elem {
        let (mut base, mut e) = if n < 0 {
            (self.inv(a).expect("pow of non-unit with negative exponent"), (-n) as u64)
        } else {
            (a.clone(), n as u64)
        };
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    fn parse(&self, s: &str) -> Result<Self::Elem>;
    fn format(&self, a: &Self::Elem) -> String;
    fn field_class(&self) -> FieldClass;

    type Units: UnitCoords<Self>;
    /// A coordinate system for the unit group large enough to express the
    /// given units and everything generated from them multiplicatively.
    fn unit_coords(&self, seen: &[Self::Elem]) -> Result<Self::Units>;
}

/// Exponent coordinates for the unit group: each coordinate lives in Z/m
/// (modulus `Some(m)`) or Z (`None`). Encoding and decoding are exact.
pub trait UnitCoords<F: Field> {
    fn dims(&self) -> usize;
    fn modulus(&self, coord: usize) -> Option<BigInt>;
    fn encode(&self, field: &F, a: &F::Elem) -> Result<Vec<BigInt>>;
    fn decode(&self, field: &F, v: &[BigInt]) -> F::Elem;
}

// ---------------------------------------------------------------------------
// finite fields
// ---------------------------------------------------------------------------

#[derive(Debug)]
pub struct GfCtx {
    pub p: u32,
    pub k: u32,
    pub q: u32,
    /// least monic irreducible modulus polynomial, by integer encoding
    /// (constant term first); trivial (x - 0 shape unused) when k = 1
    pub modulus: Vec<u32>,
    /// least generator of the unit group, by integer encoding
    pub generator: u32,
    exp: Vec<u32>,
    dlog: Vec<u32>,
}

/// Handle for F_q. Elements are `u32` integer encodings; 0 is the zero
/// element and for prime q the encoding is just the residue.
#[derive(Clone, Debug)]
pub struct Gf {
    ctx: Arc<GfCtx>,
}

impl PartialEq for Gf {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.q == other.ctx.q
    }
}
impl Eq for Gf {}

fn poly_mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let k = modulus.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai as u64 * bj as u64) % p as u64;
        }
    }
    // reduce by the monic modulus
    for d in (k..prod.len()).rev() {
        let c = prod[d] % p as u64;
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for (t, &m) in modulus.iter().enumerate().take(k) {
            let idx = d - k + t;
            let sub = c * m as u64 % p as u64;
            prod[idx] = (prod[idx] + p as u64 - sub) % p as u64;
        }
    }
    prod.truncate(k.max(1));
    prod.iter().map(|&v| v as u32).collect()
}

fn poly_pow_mod(base: &[u32], mut e: u64, modulus: &[u32], p: u32) -> Vec<u32> {
    let k = (modulus.len() - 1).max(1);
    let mut acc = vec![0u32; k];
    acc[0] = 1;
    let mut b = base.to_vec();
    b.resize(k, 0);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul_mod(&acc, &b, modulus, p);
        }
        b = poly_mul_mod(&b, &b, modulus, p);
        e >>= 1;
    }
    acc
}

fn poly_gcd(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let norm = |v: &[u32]| -> Vec<u32> {
        let mut v = v.to_vec();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    };
    let mut a = norm(a);
    let mut b = norm(b);
    while !b.is_empty() {
        // a mod b
        let lead_inv = mod_pow_u64(*b.last().unwrap() as u64, p as u64 - 2, p as u64) as u32;
        while a.len() >= b.len() && !a.is_empty() {
            let shift = a.len() - b.len();
            let c = (*a.last().unwrap() as u64 * lead_inv as u64 % p as u64) as u32;
            for (i, &bi) in b.iter().enumerate() {
                let sub = c as u64 * bi as u64 % p as u64;
                let idx = i + shift;
                a[idx] = ((a[idx] as u64 + p as u64 - sub) % p as u64) as u32;
            }
            a = norm(&a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

fn mod_pow_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Rabin test: x^(p^k) == x mod f, and x^(p^(k/r)) - x coprime to f for
/// every prime r | k.
fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let k = (modulus.len() - 1) as u64;
    let x = vec![0u32, 1];
    let pk = (p as u64).pow(k as u32);
    let xq = poly_pow_mod(&x, pk, modulus, p);
    let mut xq_minus_x = xq.clone();
    if xq_minus_x.len() < 2 {
        xq_minus_x.resize(2, 0);
    }
    xq_minus_x[1] = ((xq_minus_x[1] as u64 + p as u64 - 1) % p as u64) as u32;
    if xq_minus_x.iter().any(|&c| c != 0) {
        return false;
    }
    for r in prime_factors(k) {
        let e = (p as u64).pow((k / r) as u32);
        let xe = poly_pow_mod(&x, e, modulus, p);
        let mut diff = xe.clone();
        if diff.len() < 2 {
            diff.resize(2, 0);
        }
        diff[1] = ((diff[1] as u64 + p as u64 - 1) % p as u64) as u32;
        let g = poly_gcd(&diff, modulus, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

fn encode_poly(coeffs: &[u32], p: u32) -> u32 {
    let mut acc = 0u64;
    for &c in coeffs.iter().rev() {
        acc = acc * p as u64 + c as u64;
    }
    acc as u32
}

fn decode_poly(mut enc: u32, p: u32, k: u32) -> Vec<u32> {
    let mut out = vec![0u32; k as usize];
    for slot in out.iter_mut() {
        *slot = enc % p;
        enc /= p;
    }
    out
}

impl Gf {
    pub fn new(q: u32) -> Result<Gf> {
        let (p, k) = factor_prime_power(q)?;
        // least monic irreducible modulus (by encoding of the non-leading coefficients)
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            let mut found = None;
            for enc in 0..q {
                let mut coeffs = decode_poly(enc, p, k);
                coeffs.push(1);
                if is_irreducible(&coeffs, p) {
                    found = Some(coeffs);
                    break;
                }
            }
            found.expect("an irreducible polynomial of each degree exists")
        };
        // least generator of the cyclic unit group
        let order = (q - 1) as u64;
        let factors = prime_factors(order);
        let mut generator = 0;
        'outer: for cand in 2..q {
            let poly = decode_poly(cand, p, k);
            for &r in &factors {
                let e = order / r;
                let pw = poly_pow_mod(&poly, e, &modulus, p);
                if encode_poly(&pw, p) == 1 {
                    continue 'outer;
                }
            }
            generator = cand;
            break;
        }
        if generator == 0 {
            // q = 2: the unit group is trivial, generated by 1
            generator = 1;
        }
        // exp/dlog tables
        let mut exp = vec![0u32; (q - 1) as usize];
        let mut dlog = vec![0u32; q as usize];
        let gen_poly = decode_poly(generator, p, k);
        let mut cur = vec![0u32; k as usize];
        cur[0] = 1;
        for (i, slot) in exp.iter_mut().enumerate() {
            let enc = encode_poly(&cur, p);
            *slot = enc;
            dlog[enc as usize] = i as u32;
            cur = poly_mul_mod(&cur, &gen_poly, &modulus, p);
        }
        debug_assert_eq!(encode_poly(&cur, p), 1, "generator order is q-1");
        Ok(Gf { ctx: Arc::new(GfCtx { p, k, q, modulus, generator, exp, dlog }) })
    }

    pub fn q(&self) -> u32 {
        self.ctx.q
    }

    pub fn characteristic(&self) -> u32 {
        self.ctx.p
    }

    pub fn generator(&self) -> u32 {
        self.ctx.generator
    }

    /// Discrete log to the least generator; None for zero.
    pub fn dlog(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            None
        } else {
            Some(self.ctx.dlog[*a as usize])
        }
    }

    pub fn exp(&self, e: u64) -> u32 {
        if self.ctx.q == 2 {
            return 1;
        }
        self.ctx.exp[(e % (self.ctx.q as u64 - 1)) as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.ctx.q
    }

    pub fn units(&self) -> impl Iterator<Item = u32> + '_ {
        self.ctx.exp.iter().copied()
    }

    /// Integers land in the prime subfield.
    pub fn from_int(&self, v: i64) -> u32 {
        v.rem_euclid(self.ctx.p as i64) as u32
    }
}

impl Field for Gf {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let (p, k) = (self.ctx.p, self.ctx.k);
        if k == 1 {
            return (a + b) % p;
        }
        let (mut a, mut b, mut scale, mut out) = (*a, *b, 1u32, 0u32);
        for _ in 0..k {
            out += (a % p + b % p) % p * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        out
    }
    fn neg(&self, a: &u32) -> u32 {
        let (p, k) = (self.ctx.p, self.ctx.k);
        if k == 1 {
            return (p - a) % p;
        }
        let (mut a, mut scale, mut out) = (*a, 1u32, 0u32);
        for _ in 0..k {
            out += (p - a % p) % p * scale;
            a /= p;
            scale *= p;
        }
        out
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        if *a == 0 || *b == 0 {
            return 0;
        }
        let n = self.ctx.q as u64 - 1;
        let e = (self.ctx.dlog[*a as usize] as u64 + self.ctx.dlog[*b as usize] as u64) % n;
        self.ctx.exp[e as usize]
    }
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        let n = self.ctx.q as u64 - 1;
        let e = (n - self.ctx.dlog[*a as usize] as u64) % n;
        Some(self.ctx.exp[e as usize])
    }

    fn parse(&self, s: &str) -> Result<u32> {
        let v: i64 = s.trim().parse().map_err(|_| Error::Parse(format!("bad element `{s}`")))?;
        if self.ctx.k > 1 {
            // allow the full encoding range for extension fields
            if v >= 0 && (v as u64) < self.ctx.q as u64 {
                return Ok(v as u32);
            }
        }
        Ok(self.from_int(v))
    }

    fn format(&self, a: &u32) -> String {
        a.to_string()
    }

    fn field_class(&self) -> FieldClass {
        FieldClass::Finite { q: self.ctx.q }
    }

    type Units = GfUnits;
    fn unit_coords(&self, seen: &[u32]) -> Result<GfUnits> {
        for v in seen {
            if *v == 0 {
                return Err(Error::NotAUnit("0".into()));
            }
        }
        Ok(GfUnits { order: BigInt::from(self.ctx.q - 1) })
    }
}

/// One coordinate: the discrete log in Z/(q-1).
#[derive(Debug, Clone)]
pub struct GfUnits {
    order: BigInt,
}

impl UnitCoords<Gf> for GfUnits {
    fn dims(&self) -> usize {
        1
    }
    fn modulus(&self, _coord: usize) -> Option<BigInt> {
        Some(self.order.clone())
    }
    fn encode(&self, field: &Gf, a: &u32) -> Result<Vec<BigInt>> {
        match field.dlog(a) {
            Some(e) => Ok(vec![BigInt::from(e)]),
            None => Err(Error::NotAUnit("0".into())),
        }
    }
    fn decode(&self, field: &Gf, v: &[BigInt]) -> u32 {
        let e = v[0].mod_floor(&self.order).to_u64().unwrap();
        field.exp(e)
    }
}

// ---------------------------------------------------------------------------
// rationals
// ---------------------------------------------------------------------------

/// Handle for Q with exact `BigRational` elements.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Rationals;

impl Rationals {
    pub fn from_int(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    pub fn ratio(&self, num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
}

fn factor_bigint(n: &BigInt) -> Vec<(BigInt, i64)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let mut e = 0i64;
            while (&n % &d).is_zero() {
                n /= &d;
                e += 1;
            }
            out.push((d.clone(), e));
        }
        d += 1;
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn parse(&self, s: &str) -> Result<BigRational> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt> {
            t.parse::<BigInt>().map_err(|_| Error::Parse(format!("bad rational `{s}`")))
        };
        if let Some((n, d)) = s.split_once('/') {
            let num = parse_int(n)?;
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(BigRational::new(num, den))
        } else {
            Ok(BigRational::from_integer(parse_int(s)?))
        }
    }

    fn format(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn field_class(&self) -> FieldClass {
        FieldClass::Rationals
    }

    type Units = QUnits;
    fn unit_coords(&self, seen: &[BigRational]) -> Result<QUnits> {
        let mut primes: Vec<BigInt> = Vec::new();
        for v in seen {
            if v.is_zero() {
                return Err(Error::NotAUnit("0".into()));
            }
            for part in [v.numer(), v.denom()] {
                for (p, _) in factor_bigint(part) {
                    if !primes.contains(&p) {
                        primes.push(p);
                    }
                }
            }
        }
        primes.sort();
        Ok(QUnits { primes })
    }
}

/// Coordinate 0: sign in Z/2; coordinate 1+i: exponent of primes[i] in Z.
#[derive(Debug, Clone)]
pub struct QUnits {
    pub primes: Vec<BigInt>,
}

impl UnitCoords<Rationals> for QUnits {
    fn dims(&self) -> usize {
        1 + self.primes.len()
    }
    fn modulus(&self, coord: usize) -> Option<BigInt> {
        if coord == 0 {
            Some(BigInt::from(2))
        } else {
            None
        }
    }
    fn encode(&self, _field: &Rationals, a: &BigRational) -> Result<Vec<BigInt>> {
        if a.is_zero() {
            return Err(Error::NotAUnit("0".into()));
        }
        let mut out = vec![BigInt::zero(); self.dims()];
        if a.is_negative() {
            out[0] = BigInt::one();
        }
        for (part, sgn) in [(a.numer(), 1i64), (a.denom(), -1i64)] {
            for (p, e) in factor_bigint(part) {
                match self.primes.binary_search(&p) {
                    Ok(i) => out[1 + i] += BigInt::from(e * sgn),
                    Err(_) => {
                        return Err(Error::Parse(format!(
                            "unit {p} outside the prime basis"
                        )))
                    }
                }
            }
        }
        Ok(out)
    }
    fn decode(&self, _field: &Rationals, v: &[BigInt]) -> BigRational {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        if v[0].mod_floor(&BigInt::from(2)).is_one() {
            num = -num;
        }
        for (i, p) in self.primes.iter().enumerate() {
            let e = v[1 + i].to_i64().expect("small exponent");
            let target = if e >= 0 { &mut num } else { &mut den };
            for _ in 0..e.abs() {
                *target *= p;
            }
        }
        BigRational::new(num, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn axioms(f: &Gf) {
        let q = f.q();
        for a in f.elements() {
            assert_eq!(f.add(&a, &f.neg(&a)), 0);
            assert_eq!(f.mul(&a, &1), a);
            if a != 0 {
                let ai = f.inv(&a).unwrap();
                assert_eq!(f.mul(&a, &ai), 1);
            }
            for b in f.elements() {
                assert_eq!(f.add(&a, &b), f.add(&b, &a));
                assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
                for c in f.elements() {
                    assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
                    assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
                }
            }
        }
        // unit group is cyclic of order q-1 on the generator
        let mut seen = std::collections::HashSet::new();
        for e in 0..q - 1 {
            seen.insert(f.exp(e as u64));
        }
        assert_eq!(seen.len(), (q - 1) as usize);
    }

    #[test]
    fn field_axioms_small_orders() {
        for q in [2u32, 3, 4, 5, 7, 8, 9, 16, 27] {
            let f = Gf::new(q).unwrap();
            axioms(&f);
        }
    }

    #[test]
    fn least_primitive_roots_match_tables() {
        // classical least primitive roots mod p
        for (p, g) in [(3u32, 2u32), (5, 2), (7, 3), (11, 2), (13, 2), (23, 5), (41, 6)] {
            assert_eq!(Gf::new(p).unwrap().generator(), g, "p = {p}");
        }
    }

    #[test]
    fn rejects_non_prime_powers() {
        assert!(Gf::new(6).is_err());
        assert!(Gf::new(1).is_err());
        assert!(Gf::new(12).is_err());
        assert!(FieldClass::parse("10").is_err());
        assert!(FieldClass::parse("Q").is_ok());
        assert!(FieldClass::parse("closed:2").is_ok());
        assert!(FieldClass::parse("closed:4").is_err());
    }

    #[test]
    fn dlog_round_trip() {
        let f = Gf::new(9).unwrap();
        for u in f.units().collect::<Vec<_>>() {
            let e = f.dlog(&u).unwrap();
            assert_eq!(f.exp(e as u64), u);
        }
        assert!(f.dlog(&0).is_none());
    }

    #[test]
    fn rational_unit_coords_round_trip() {
        let f = Rationals;
        let vals = vec![f.ratio(39, 667), f.ratio(-6, 5), f.from_int(14)];
        let coords = f.unit_coords(&vals).unwrap();
        for v in &vals {
            let enc = coords.encode(&f, v).unwrap();
            assert_eq!(coords.decode(&f, &enc), *v);
        }
    }

    #[test]
    fn extension_field_addition_is_componentwise() {
        let f = Gf::new(4).unwrap();
        // char 2: every element is its own negative
        for a in f.elements() {
            assert_eq!(f.add(&a, &a), 0);
        }
        let f9 = Gf::new(9).unwrap();
        // 1 + 3 encodes (1,0)+(0,1) = x+1 -> 4
        assert_eq!(f9.add(&1, &3), 4);
    }
}

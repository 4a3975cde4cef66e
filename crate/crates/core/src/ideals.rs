//! Ideals of `Z[λ]`: prime factorization, the half-power part `[τ]`, the
//! index `[G5 : G0(τ)]`, and residue rings `Z[λ]/(τ)`.
//!
//! `Z[λ]` is a principal ideal domain, so an ideal is stored as the
//! canonical associate of a generator. A rational prime `p` is inert when
//! `p ≡ ±2 (mod 5)`, ramified when `p = 5` (as `(2λ − 1)²`), and splits
//! into two conjugate primes of norm `p` when `p ≡ ±1 (mod 5)`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{RingElt, UnitRep};

/// Largest trial divisor tried by [`factor`].
pub const DEFAULT_FACTOR_CAP: u64 = 1_000_000;

/// A nonzero ideal, identified by the canonical associate of its generator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    generator: RingElt,
}

impl Ideal {
    pub fn new(x: &RingElt) -> Result<Ideal> {
        if x.is_zero() {
            return Err(Error::ZeroInput);
        }
        Ok(Ideal {
            generator: x.canonical_associate(),
        })
    }

    pub fn generator(&self) -> &RingElt {
        &self.generator
    }

    pub fn abs_norm(&self) -> BigInt {
        self.generator.abs_norm()
    }

    pub fn is_unit(&self) -> bool {
        self.generator.is_one()
    }

    pub fn contains(&self, x: &RingElt) -> bool {
        x.is_divisible_by(&self.generator)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generator)
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

impl Serialize for Ideal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.generator.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Splitting {
    Split,
    Inert,
    Ramified,
}

impl Splitting {
    pub fn of(p: u64) -> Splitting {
        match p % 5 {
            0 => Splitting::Ramified,
            1 | 4 => Splitting::Split,
            _ => Splitting::Inert,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct PrimeFactor {
    pub generator: RingElt,
    #[serde(rename = "p")]
    pub residue_characteristic: u64,
    pub splitting: Splitting,
    #[serde(serialize_with = "ser_display")]
    pub absolute_norm: BigInt,
}

fn ser_display<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: UnitRep,
    pub factors: Vec<(PrimeFactor, u32)>,
}

impl Factorization {
    /// `unit · ∏ generatorᵐ`.
    pub fn recompose(&self) -> RingElt {
        self.factors.iter().fold(self.unit.to_elt(), |acc, (p, m)| {
            &acc * &p.generator.pow(*m as u64)
        })
    }

    pub fn multiplicity_of(&self, prime: &RingElt) -> u32 {
        self.factors
            .iter()
            .find(|(p, _)| p.generator == *prime)
            .map_or(0, |(_, m)| *m)
    }

    /// Every divisor up to associates, as canonical generators ordered by
    /// absolute norm and then coefficients. Includes `1` and the full product.
    pub fn divisors(&self) -> Vec<RingElt> {
        let mut out = vec![RingElt::one()];
        for (p, m) in &self.factors {
            let mut next = Vec::with_capacity(out.len() * (*m as usize + 1));
            for d in &out {
                let mut x = d.clone();
                next.push(x.clone());
                for _ in 0..*m {
                    x = &x * &p.generator;
                    next.push(x.clone());
                }
            }
            out = next;
        }
        let mut out: Vec<RingElt> = out.iter().map(RingElt::canonical_associate).collect();
        out.sort_by_key(sort_key);
        out
    }
}

fn sort_key(x: &RingElt) -> (BigInt, BigInt, BigInt) {
    (x.abs_norm(), x.a().clone(), x.b().clone())
}

#[derive(Serialize)]
struct FactorRecord<'a> {
    generator: &'a RingElt,
    p: u64,
    splitting: Splitting,
    multiplicity: u32,
}

impl Serialize for Factorization {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let records: Vec<FactorRecord> = self
            .factors
            .iter()
            .map(|(p, m)| FactorRecord {
                generator: &p.generator,
                p: p.residue_characteristic,
                splitting: p.splitting,
                multiplicity: *m,
            })
            .collect();
        let mut st = s.serialize_struct("Factorization", 2)?;
        st.serialize_field("unit", &self.unit)?;
        st.serialize_field("factors", &records)?;
        st.end()
    }
}

/// Factors `τ` into canonical primes with the default trial-division cap.
pub fn factor(tau: &RingElt) -> Result<Factorization> {
    factor_with_cap(tau, DEFAULT_FACTOR_CAP)
}

pub fn factor_with_cap(tau: &RingElt, cap: u64) -> Result<Factorization> {
    if tau.is_zero() {
        return Err(Error::ZeroInput);
    }
    let norm = tau.abs_norm().to_biguint().expect("absolute value");
    let mut rest = tau.clone();
    let mut factors = Vec::new();
    for (p, _) in factor_integer(&norm, cap)? {
        for prime in primes_above(p) {
            let mut m = 0u32;
            while let Some(q) = rest.exact_divide(&prime.generator)? {
                rest = q;
                m += 1;
            }
            if m > 0 {
                factors.push((prime, m));
            }
        }
    }
    factors.sort_by_key(|(x, _)| sort_key(&x.generator));
    let unit = rest.unit_decompose()?;
    Ok(Factorization { unit, factors })
}

/// The primes of `Z[λ]` lying over the rational prime `p`.
pub fn primes_above(p: u64) -> Vec<PrimeFactor> {
    let splitting = Splitting::of(p);
    let pb = BigInt::from(p);
    match splitting {
        Splitting::Inert => vec![PrimeFactor {
            generator: RingElt::from_int(p),
            residue_characteristic: p,
            splitting,
            absolute_norm: &pb * &pb,
        }],
        Splitting::Ramified => vec![PrimeFactor {
            generator: RingElt::new(-1, 2),
            residue_characteristic: p,
            splitting,
            absolute_norm: pb,
        }],
        Splitting::Split => {
            let r = golden_root_mod(p);
            let first = RingElt::from_int(p)
                .gcd(&RingElt::new(-(r as i128), 1))
                .expect("p is nonzero");
            let second = first.conj().canonical_associate();
            let mut gens = vec![first, second];
            gens.sort_by_key(sort_key);
            gens.into_iter()
                .map(|generator| PrimeFactor {
                    generator,
                    residue_characteristic: p,
                    splitting,
                    absolute_norm: pb.clone(),
                })
                .collect()
        }
    }
}

/// Trial division of `n` by every `d ≤ cap`; a leftover cofactor is accepted
/// as prime only when it is below `(cap + 1)²`.
pub fn factor_integer(n: &BigUint, cap: u64) -> Result<Vec<(u64, u32)>> {
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut d = 2u64;
    while d <= cap {
        let db = BigUint::from(d);
        if &db * &db > n {
            break;
        }
        let mut m = 0;
        while (&n % &db).is_zero() {
            n /= &db;
            m += 1;
        }
        if m > 0 {
            out.push((d, m));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > BigUint::one() {
        let bound = BigUint::from(cap + 1).pow(2);
        if d > cap && n >= bound {
            return Err(Error::FactorCapExceeded(cap));
        }
        let p = n.to_u64().ok_or(Error::FactorCapExceeded(cap))?;
        out.push((p, 1));
    }
    Ok(out)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, m);
        }
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Tonelli–Shanks square root of `n` modulo an odd prime `p`.
fn sqrt_mod(n: u64, p: u64) -> Option<u64> {
    let n = n % p;
    if n == 0 {
        return Some(0);
    }
    if pow_mod(n, (p - 1) / 2, p) != 1 {
        return None;
    }
    let mut q = p - 1;
    let mut s = 0;
    while q.is_multiple_of(2) {
        q /= 2;
        s += 1;
    }
    let mut z = 2;
    while pow_mod(z, (p - 1) / 2, p) != p - 1 {
        z += 1;
    }
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(n, q, p);
    let mut r = pow_mod(n, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = mul_mod(tt, tt, p);
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        r = mul_mod(r, b, p);
    }
    Some(r)
}

/// A root of `x² − x − 1` modulo a prime `p ≡ ±1 (mod 5)`.
fn golden_root_mod(p: u64) -> u64 {
    let s = sqrt_mod(5, p).expect("5 is a square modulo p ≡ ±1 (mod 5)");
    // (1 + s) / 2
    mul_mod((1 + s) % p, p.div_ceil(2), p)
}

/// `[τ] = ∏ p^(m − ⌊m/2⌋)`, the smallest ideal whose square lies in `(τ)`.
pub fn half_power_part(tau: &RingElt) -> Result<Ideal> {
    let f = factor(tau)?;
    let g = f.factors.iter().fold(RingElt::one(), |acc, (p, m)| {
        &acc * &p.generator.pow((m - m / 2) as u64)
    });
    Ideal::new(&g)
}

/// The largest divisor `h` of 4 with `h² | τ`.
pub fn h_of(tau: &RingElt) -> Result<u32> {
    if tau.is_zero() {
        return Err(Error::ZeroInput);
    }
    Ok(if tau.is_divisible_by(&RingElt::from_int(16)) {
        4
    } else if tau.is_divisible_by(&RingElt::from_int(4)) {
        2
    } else {
        1
    })
}

/// `[G5 : G0(τ)] = N(τ) ∏_{P | τ} (1 + 1/N(P))`.
pub fn index_in_g5(tau: &RingElt) -> Result<BigInt> {
    let f = factor(tau)?;
    Ok(index_from_factorization(&f))
}

pub fn index_from_factorization(f: &Factorization) -> BigInt {
    f.factors.iter().fold(BigInt::one(), |acc, (p, m)| {
        let np = &p.absolute_norm;
        acc * np.pow(m - 1) * (np + 1u32)
    })
}

/// `[G0(divisor) : G0(tau)]`; requires `divisor | tau`.
pub fn relative_index(tau: &RingElt, divisor: &RingElt) -> Result<BigInt> {
    if divisor.is_zero() || tau.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !tau.is_divisible_by(divisor) {
        return Err(Error::BadRange(format!("{divisor} does not divide {tau}")));
    }
    let (q, r) = index_in_g5(tau)?.div_rem(&index_in_g5(divisor)?);
    assert!(
        r.is_zero(),
        "index of a subgroup divides the index of its subgroup"
    );
    Ok(q)
}

/// The least `n > 0` in `(τ)`.
pub fn smallest_rational_integer(tau: &RingElt) -> Result<BigInt> {
    Ok(ResidueCtx::new(tau)?.n().clone())
}

/// Canonical representatives of `Z[λ]/(τ)`.
///
/// The coefficient lattice of `(τ)` has the Hermite basis `(n, 0), (s, t)`
/// with `0 ≤ s < n` and `n·t = |N(τ)|`; every residue has a unique
/// representative `x + yλ` with `0 ≤ x < n`, `0 ≤ y < t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueCtx {
    modulus: Ideal,
    n: BigInt,
    s: BigInt,
    t: BigInt,
}

impl ResidueCtx {
    pub fn new(tau: &RingElt) -> Result<ResidueCtx> {
        let modulus = Ideal::new(tau)?;
        let g = modulus.generator();
        let (a, b) = (g.a().clone(), g.b().clone());
        // columns τ = (a, b) and τλ = (b, a + b)
        let ab = &a + &b;
        let eg = b.extended_gcd(&ab);
        let t = eg.gcd.clone();
        let col0 = &eg.x * &a + &eg.y * &b;
        let det = g.abs_norm();
        let n = &det / &t;
        let s = col0.mod_floor(&n);
        debug_assert_eq!(&n * &t, det);
        Ok(ResidueCtx { modulus, n, s, t })
    }

    pub fn modulus(&self) -> &Ideal {
        &self.modulus
    }

    /// Smallest positive rational integer in the ideal.
    pub fn n(&self) -> &BigInt {
        &self.n
    }

    /// Hermite normal form `[[n, s], [0, t]]` (columns generate the lattice).
    pub fn lattice(&self) -> [[BigInt; 2]; 2] {
        [
            [self.n.clone(), self.s.clone()],
            [BigInt::zero(), self.t.clone()],
        ]
    }

    /// Number of residue classes, `|N(τ)|`.
    pub fn size(&self) -> BigInt {
        &self.n * &self.t
    }

    pub fn reduce(&self, x: &RingElt) -> RingElt {
        let k = x.b().div_floor(&self.t);
        let y = x.b() - &k * &self.t;
        let a = (x.a() - &k * &self.s).mod_floor(&self.n);
        RingElt::new(a, y)
    }

    /// Inverse modulo the ideal, when `x` is a unit there.
    pub fn inverse(&self, x: &RingElt) -> Option<RingElt> {
        let (g, s, _) = x.extended_gcd(self.modulus.generator()).ok()?;
        if !g.is_unit() {
            return None;
        }
        let g_inv = RingElt::one().exact_divide(&g).ok()??;
        Some(self.reduce(&(&s * &g_inv)))
    }

    pub fn is_zero_mod(&self, x: &RingElt) -> bool {
        self.reduce(x).is_zero()
    }

    pub fn congruent(&self, x: &RingElt, y: &RingElt) -> bool {
        self.is_zero_mod(&(x - y))
    }
}

/// All ideals with `1 ≤ |N| ≤ bound`, ordered by norm and then generator.
pub fn ideals_up_to_norm(bound: u64) -> Vec<Ideal> {
    let box_radius = (4.0 * (bound as f64).sqrt()).ceil() as i64 + 2;
    let bound_b = BigInt::from(bound);
    let mut seen = BTreeSet::new();
    for a in -box_radius..=box_radius {
        for b in -box_radius..=box_radius {
            let x = RingElt::new(a, b);
            if x.is_zero() || x.abs_norm() > bound_b {
                continue;
            }
            let c = x.canonical_associate();
            seen.insert(sort_key(&c));
        }
    }
    seen.into_iter()
        .map(|(_, a, b)| Ideal {
            generator: RingElt::new(a, b),
        })
        .collect()
}

//! The normalizer of `G0(τ)` in `PSL2(R)`.
//!
//! `N(G0(τ)) = G0(τ/h)` where `h` is the largest divisor of 4 with
//! `h² | τ`, and the quotient `G0(τ/h)/G0(τ)` is trivial, `Z2×Z2` or
//! `Z4×Z4`. This module exposes that result together with the pieces used
//! to derive and check it: the bound obtained from one reduced form, the
//! chain of bounds that strips the 3- and √5-parts, the explicit quotient
//! group computed from a coset table, and the search for elements that are
//! not `G5`-elementary.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ideals::{
    factor, h_of, half_power_part, index_in_g5, smallest_rational_integer, Ideal, ResidueCtx,
};
use crate::matrix::GMatrix;
use crate::reduction::{is_reduced_form, reduced_factor};
use crate::ring::RingElt;
use crate::subgroups::{coset_table, coset_table_bounded, g0_contains, sample_subgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum QuotientType {
    Trivial,
    Klein4,
    Z4xZ4,
}

impl QuotientType {
    fn for_h(h: u32) -> QuotientType {
        match h {
            1 => QuotientType::Trivial,
            2 => QuotientType::Klein4,
            _ => QuotientType::Z4xZ4,
        }
    }

    pub fn order(self) -> usize {
        match self {
            QuotientType::Trivial => 1,
            QuotientType::Klein4 => 4,
            QuotientType::Z4xZ4 => 16,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NormalizerResult {
    /// Generator of `τ/h`.
    pub modulus: Ideal,
    pub h: u32,
    pub quotient: QuotientType,
}

fn require_nonunit(tau: &RingElt) -> Result<()> {
    if tau.is_zero() {
        return Err(Error::ZeroInput);
    }
    if tau.is_unit() {
        return Err(Error::UnitModulus(tau.to_string()));
    }
    Ok(())
}

pub fn normalizer_of(tau: &RingElt) -> Result<NormalizerResult> {
    require_nonunit(tau)?;
    let h = h_of(tau)?;
    let modulus = Ideal::new(&tau.div_exact(&RingElt::from_int(h as i64)))?;
    Ok(NormalizerResult {
        modulus,
        h,
        quotient: QuotientType::for_h(h),
    })
}

/// Whether `m` normalizes `G0(τ)`, decided as `m ∈ G0(τ/h)`.
pub fn normalizes(m: &GMatrix, tau: &RingElt) -> Result<bool> {
    let n = normalizer_of(tau)?;
    g0_contains(m, n.modulus.generator())
}

/// Conjugates `count` sampled elements of `G0(τ)` by `m` and checks they
/// stay in `G0(τ)`.
///
/// This does not rely on the normalizer theorem but can only refute:
/// `false` proves `m` is not in the normalizer, `true` proves nothing.
pub fn normalizes_sampled(m: &GMatrix, tau: &RingElt, count: usize, seed: u64) -> Result<bool> {
    require_nonunit(tau)?;
    let inv = m.inverse();
    for b in sample_subgroup(tau, count, seed)? {
        if !g0_contains(&(&(m * &b) * &inv), tau)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `τ/x` with `x = gcd(τ/[τ], u² − 1)`, given that `u/(wτ)` is a reduced
/// form. `G0(τ/x)` contains `N(G0(τ))`.
pub fn lemma41_bound(tau: &RingElt, u: &RingElt, w: &RingElt) -> Result<Ideal> {
    Ok(bound_with_gcd(tau, u, w)?.0)
}

fn bound_with_gcd(tau: &RingElt, u: &RingElt, w: &RingElt) -> Result<(Ideal, RingElt)> {
    if tau.is_zero() {
        return Err(Error::ZeroInput);
    }
    let den = w * tau;
    if !is_reduced_form(u, &den).unwrap_or(false) {
        return Err(Error::NotReduced(format!("{u} / ({den})")));
    }
    let half = half_power_part(tau)?;
    let cofactor = tau.div_exact(half.generator());
    let x = cofactor.gcd(&(&u.pow(2) - &RingElt::one()))?;
    Ok((Ideal::new(&tau.div_exact(&x))?, x))
}

/// The reduced form `k·λᵉ / n·λ^(e+1)` of `k/(nλ)`, split as
/// `(u, w)` with `u/(wν)` the reduced form.
fn witness_for(k: i64, nu: &RingElt) -> Result<(RingElt, RingElt, i64)> {
    let n = RingElt::from(smallest_rational_integer(nu)?);
    let den = &n * &RingElt::lambda();
    let r = reduced_factor(&RingElt::from_int(k), &den)?;
    let w = r.reduced_den.div_exact(nu);
    Ok((r.reduced_num, w, r.e))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainWitness {
    /// The numerator `u` of the reduced form used.
    pub numerator: RingElt,
    /// `gcd(ν/[ν], u² − 1)`.
    pub gcd: RingElt,
    /// `ν / gcd`.
    pub bound: Ideal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainStep {
    /// The prime whose part was removed: `3` or `2λ−1`.
    pub stripped: RingElt,
    /// `τ` with that prime part removed.
    pub remainder: Ideal,
    pub witnesses: Vec<ChainWitness>,
    /// Intersection of the witness bounds, i.e. their lcm.
    pub bound: Ideal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    pub input: Ideal,
    /// `[τ]`: the normalizer lies in `G0([τ])`.
    pub half_power_bound: Ideal,
    pub steps: Vec<ChainStep>,
    /// lcm of the step bounds.
    pub final_bound: Ideal,
    /// Whether `final_bound = τ/h`.
    pub agrees: bool,
}

fn strip(tau: &RingElt, p: &RingElt) -> RingElt {
    let mut nu = tau.clone();
    while let Ok(Some(q)) = nu.exact_divide(p) {
        nu = q;
    }
    nu
}

fn chain_step(tau: &RingElt, prime: &RingElt, numerators: &[i64]) -> Result<ChainStep> {
    let nu = strip(tau, prime);
    let mut witnesses = Vec::new();
    let mut bound = RingElt::one();
    for &k in numerators {
        let (u, w, _) = witness_for(k, &nu)?;
        let (b, x) = bound_with_gcd(&nu, &u, &w)?;
        bound = bound.lcm(b.generator())?;
        witnesses.push(ChainWitness {
            numerator: u,
            gcd: x,
            bound: b,
        });
    }
    Ok(ChainStep {
        stripped: prime.clone(),
        remainder: Ideal::new(&nu)?,
        witnesses,
        bound: Ideal::new(&bound)?,
    })
}

/// Derives `N(G0(τ)) ⊆ G0(τ/h)` from reduced forms of `3/nλ`, `9/nλ`
/// and `5/nλ`, recording each intermediate bound.
pub fn supergroup_chain(tau: &RingElt) -> Result<ChainReport> {
    require_nonunit(tau)?;
    let three = chain_step(tau, &RingElt::from_int(3), &[3, 9])?;
    let five = chain_step(tau, &RingElt::new(-1, 2), &[5])?;
    let final_gen = three.bound.generator().lcm(five.bound.generator())?;
    let final_bound = Ideal::new(&final_gen)?;
    let agrees = final_bound == normalizer_of(tau)?.modulus;
    Ok(ChainReport {
        input: Ideal::new(tau)?,
        half_power_bound: half_power_part(tau)?,
        steps: vec![three, five],
        final_bound,
        agrees,
    })
}

/// `G0(τ/h)/G0(τ)` as an explicit finite group.
#[derive(Clone, Debug, Serialize)]
pub struct QuotientTable {
    pub modulus: Ideal,
    pub normalizer: NormalizerResult,
    /// Representatives in `G0(τ/h)`, the identity first.
    pub elements: Vec<GMatrix>,
    /// `table[i][j]` is the index of `elements[i]·elements[j]`.
    pub table: Vec<Vec<usize>>,
    pub orders: Vec<u32>,
    /// Number of elements of each order.
    pub order_profile: BTreeMap<u32, usize>,
    pub abelian: bool,
    pub classification: QuotientType,
}

impl QuotientTable {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn exponent(&self) -> u32 {
        self.orders
            .iter()
            .fold(1, |acc, &o| num_integer::lcm(acc, o))
    }

    /// Order of the image of `m ∈ G0(τ/h)`.
    pub fn element_order(&self, m: &GMatrix) -> Result<u32> {
        let i = self.index_of(m)?;
        Ok(self.orders[i])
    }

    fn index_of(&self, m: &GMatrix) -> Result<usize> {
        let tau = self.modulus.generator();
        let m_inv = m.inverse();
        self.elements
            .iter()
            .position(|e| g0_contains(&(e * &m_inv), tau).unwrap_or(false))
            .ok_or_else(|| Error::NotAGroup(format!("{m} is not in G0(τ/h)")))
    }
}

fn classify(profile: &BTreeMap<u32, usize>) -> Option<QuotientType> {
    let p: Vec<(u32, usize)> = profile.iter().map(|(&k, &v)| (k, v)).collect();
    match p.as_slice() {
        [(1, 1)] => Some(QuotientType::Trivial),
        [(1, 1), (2, 3)] => Some(QuotientType::Klein4),
        [(1, 1), (2, 3), (4, 12)] => Some(QuotientType::Z4xZ4),
        _ => None,
    }
}

pub fn quotient_table(tau: &RingElt) -> Result<QuotientTable> {
    let normalizer = normalizer_of(tau)?;
    let big = normalizer.modulus.generator();
    let cosets = coset_table(tau)?;
    let mut members: Vec<usize> = (0..cosets.size())
        .filter(|&i| g0_contains(&cosets.rep_matrix(i), big).unwrap_or(false))
        .collect();
    let id_coset = cosets
        .locate(&GMatrix::identity())
        .expect("identity lies in some coset");
    members.sort_by_key(|&i| (i != id_coset, i));
    if members.first() != Some(&id_coset) {
        return Err(Error::NotAGroup("identity coset missing".into()));
    }
    let position: BTreeMap<usize, usize> =
        members.iter().enumerate().map(|(k, &i)| (i, k)).collect();
    let elements: Vec<GMatrix> = members.iter().map(|&i| cosets.rep_matrix(i)).collect();
    let size = elements.len();
    let expected = (index_in_g5(tau)? / index_in_g5(big)?).to_usize();
    if Some(size) != expected {
        return Err(Error::NotAGroup(format!(
            "{size} cosets inside G0(τ/h), expected {expected:?}"
        )));
    }

    let mut table = vec![vec![0; size]; size];
    for i in 0..size {
        for j in 0..size {
            let prod = &elements[i] * &elements[j];
            let k = cosets
                .locate(&prod)
                .and_then(|c| position.get(&c).copied())
                .ok_or_else(|| Error::NotAGroup(format!("product {i}·{j} leaves the set")))?;
            table[i][j] = k;
        }
    }
    for i in 0..size {
        if table[0][i] != i || table[i][0] != i {
            return Err(Error::NotAGroup("identity law fails".into()));
        }
        if !table[i].contains(&0) {
            return Err(Error::NotAGroup(format!("element {i} has no inverse")));
        }
        for j in 0..size {
            for k in 0..size {
                if table[table[i][j]][k] != table[i][table[j][k]] {
                    return Err(Error::NotAGroup(format!(
                        "associativity fails at {i},{j},{k}"
                    )));
                }
            }
        }
    }
    // products of representatives must not depend on the representative
    let shift = sample_subgroup(tau, 4, 0)?;
    for (i, a) in elements.iter().enumerate() {
        for g in &shift {
            let moved = &(g * a) * &elements[(i + 1) % size];
            let k = cosets
                .locate(&moved)
                .and_then(|c| position.get(&c).copied());
            if k != Some(table[i][(i + 1) % size]) {
                return Err(Error::NotAGroup("coset product is not well defined".into()));
            }
        }
    }
    let abelian = (0..size).all(|i| (0..size).all(|j| table[i][j] == table[j][i]));
    let orders: Vec<u32> = (0..size)
        .map(|i| {
            let mut k = 1;
            let mut acc = i;
            while acc != 0 {
                acc = table[acc][i];
                k += 1;
            }
            k
        })
        .collect();
    let mut order_profile = BTreeMap::new();
    for &o in &orders {
        *order_profile.entry(o).or_insert(0) += 1;
    }
    let classification = classify(&order_profile)
        .filter(|_| abelian)
        .ok_or_else(|| Error::NotAGroup(format!("unrecognized order profile {order_profile:?}")))?;
    Ok(QuotientTable {
        modulus: Ideal::new(tau)?,
        normalizer,
        elements,
        table,
        orders,
        order_profile,
        abelian,
        classification,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    CounterexampleFound,
    NoCounterexampleUpTo,
}

/// How an elementary-element verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Evidence {
    /// `r` is a unit, so every congruence modulo `r` holds.
    Vacuous,
    /// A reduced form `kλᵉ / n(r)λ^(e+1)` with small `k`.
    TargetedWitness,
    /// Top-left entries of generators of `G0(r)`. Since `a ↦ a² mod r`
    /// is a homomorphism on `G0(r)`, checking generators decides every
    /// reduced form, so a negative result here is exhaustive.
    GroupGenerators,
    /// Exhaustive search of the coefficient box.
    BoxSearch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementaryVerdict {
    pub r: RingElt,
    pub verdict: Verdict,
    /// `(x, y)` with `x/(r·y)` a reduced form and `x² ≢ 1 (mod r)`.
    pub witness: Option<(RingElt, RingElt)>,
    pub bound: u64,
    pub evidence: Evidence,
}

impl ElementaryVerdict {
    pub fn is_elementary(&self) -> bool {
        self.verdict == Verdict::NoCounterexampleUpTo
    }
}

impl Serialize for ElementaryVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ElementaryVerdict", 5)?;
        st.serialize_field("r", &self.r.to_string())?;
        st.serialize_field("verdict", &self.verdict)?;
        st.serialize_field(
            "witness",
            &self
                .witness
                .as_ref()
                .map(|(x, y)| [x.to_string(), y.to_string()]),
        )?;
        st.serialize_field("bound", &self.bound)?;
        st.serialize_field("evidence", &self.evidence)?;
        st.end()
    }
}

/// Default coefficient bound of the elementary search box.
pub const DEFAULT_ELEMENTARY_BOUND: u64 = 40;

/// Numerators tried before any search.
pub const TARGETED_NUMERATORS: [i64; 8] = [2, 3, 9, 5, 4, 7, 11, 25];

/// Largest `[G5 : G0(r)]` for which the generator test is used.
pub const GENERATOR_TEST_BOUND: u64 = 20_000;

fn is_counterexample(r: &ResidueCtx, x: &RingElt) -> bool {
    !r.congruent(&x.pow(2), &RingElt::one())
}

/// Searches for a reduced form `x/(r·y)` with `x² ≢ 1 (mod r)`.
///
/// Tries targeted witnesses, then decides exactly through generators of
/// `G0(r)` when its index is at most [`GENERATOR_TEST_BOUND`], and falls
/// back to the box `|coefficients of x, y| ≤ bound` otherwise.
pub fn is_g5_elementary(r: &RingElt, bound: u64) -> Result<ElementaryVerdict> {
    if r.is_zero() {
        return Err(Error::ZeroInput);
    }
    if bound == 0 {
        return Err(Error::BadRange("bound must be at least 1".into()));
    }
    let verdict = |witness: Option<(RingElt, RingElt)>, evidence| ElementaryVerdict {
        r: r.clone(),
        verdict: if witness.is_some() {
            Verdict::CounterexampleFound
        } else {
            Verdict::NoCounterexampleUpTo
        },
        witness,
        bound,
        evidence,
    };
    if r.is_unit() {
        return Ok(verdict(None, Evidence::Vacuous));
    }
    if let Some(w) = targeted_counterexample(r)? {
        return Ok(verdict(Some(w), Evidence::TargetedWitness));
    }
    let index = index_in_g5(r)?.to_u64().unwrap_or(u64::MAX);
    if index <= GENERATOR_TEST_BOUND {
        let w = generator_counterexample(r)?;
        return Ok(verdict(w, Evidence::GroupGenerators));
    }
    let w = box_search(r, bound as i64, bound as i64)?;
    Ok(verdict(w, Evidence::BoxSearch))
}

fn targeted_counterexample(r: &RingElt) -> Result<Option<(RingElt, RingElt)>> {
    let ctx = ResidueCtx::new(r)?;
    for k in TARGETED_NUMERATORS {
        let (x, w, _) = match witness_for(k, r) {
            Ok(found) => found,
            Err(Error::NotCoprime(..)) => continue,
            Err(e) => return Err(e),
        };
        if is_counterexample(&ctx, &x) {
            return Ok(Some((x, w)));
        }
    }
    Ok(None)
}

fn generator_counterexample(r: &RingElt) -> Result<Option<(RingElt, RingElt)>> {
    let ctx = ResidueCtx::new(r)?;
    let table = coset_table_bounded(r, GENERATOR_TEST_BOUND)?;
    let mut found: Vec<(RingElt, RingElt)> = table
        .schreier_generators()
        .iter()
        .map(|w| w.eval())
        .filter(|m| is_counterexample(&ctx, m.a()))
        .map(|m| (m.a().clone(), m.c().div_exact(r)))
        .collect();
    // smallest witness first, for stable output
    found.sort_by_key(|(x, y)| {
        (
            x.abs_norm() * y.abs_norm().max(BigInt::one()),
            x.clone(),
            y.clone(),
        )
    });
    Ok(found.into_iter().next())
}

/// Exhaustive search over `x = a + bλ`, `y = c + dλ` with
/// `|a|, |b| ≤ x_bound` and `|c|, |d| ≤ y_bound`, in lexicographic order of
/// `(c, d, a, b)`. Returns the first counterexample.
pub fn box_search(r: &RingElt, x_bound: i64, y_bound: i64) -> Result<Option<(RingElt, RingElt)>> {
    if r.is_zero() {
        return Err(Error::ZeroInput);
    }
    if r.is_unit() {
        return Ok(None);
    }
    let ctx = ResidueCtx::new(r)?;
    let candidates: Vec<RingElt> = (-x_bound..=x_bound)
        .flat_map(|a| (-x_bound..=x_bound).map(move |b| RingElt::new(a, b)))
        .filter(|x| !x.is_zero() && is_counterexample(&ctx, x))
        .collect();
    for c in -y_bound..=y_bound {
        for d in -y_bound..=y_bound {
            let y = RingElt::new(c, d);
            if y.is_zero() {
                continue;
            }
            let den = r * &y;
            for x in &candidates {
                if x.gcd(&den)?.is_one() && is_reduced_form(x, &den)? {
                    return Ok(Some((x.clone(), y)));
                }
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, Serialize)]
pub struct StrongVerdict {
    pub r: RingElt,
    pub holds: bool,
    /// Every divisor checked, in order.
    pub divisors: Vec<RingElt>,
    /// The first divisor that is not elementary, with its counterexample.
    pub failing: Option<ElementaryVerdict>,
}

/// Whether every divisor of `r` is `G5`-elementary.
pub fn strongly_elementary(r: &RingElt, bound: u64) -> Result<StrongVerdict> {
    if r.is_zero() {
        return Err(Error::ZeroInput);
    }
    let divisors = factor(r)?.divisors();
    for d in &divisors {
        let v = is_g5_elementary(d, bound)?;
        if !v.is_elementary() {
            return Ok(StrongVerdict {
                r: r.clone(),
                holds: false,
                divisors,
                failing: Some(v),
            });
        }
    }
    Ok(StrongVerdict {
        r: r.clone(),
        holds: true,
        divisors,
        failing: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::ideals_up_to_norm;

    fn p(s: &str) -> RingElt {
        s.parse().unwrap()
    }

    fn int(n: i64) -> RingElt {
        RingElt::from_int(n)
    }

    #[test]
    fn normalizer_examples() {
        let n = normalizer_of(&int(4)).unwrap();
        assert_eq!(
            (n.modulus.generator(), n.h, n.quotient),
            (&int(2), 2, QuotientType::Klein4)
        );
        let n = normalizer_of(&int(16)).unwrap();
        assert_eq!(
            (n.modulus.generator(), n.h, n.quotient),
            (&int(4), 4, QuotientType::Z4xZ4)
        );
        let n = normalizer_of(&int(9)).unwrap();
        assert_eq!(
            (n.modulus.generator(), n.h, n.quotient),
            (&int(9), 1, QuotientType::Trivial)
        );
        let n = normalizer_of(&int(12)).unwrap();
        assert_eq!((n.modulus.generator(), n.h), (&int(6), 2));
        assert!(matches!(normalizer_of(&p("L")), Err(Error::UnitModulus(_))));
    }

    #[test]
    fn normalizes_examples() {
        assert!(!normalizes(&GMatrix::lower(p("3*L")), &int(9)).unwrap());
        assert!(normalizes(&GMatrix::lower(p("2*L")), &int(4)).unwrap());
        assert!(!normalizes_sampled(&GMatrix::lower(p("3*L")), &int(9), 50, 1).unwrap());
        assert!(normalizes_sampled(&GMatrix::lower(p("2*L")), &int(4), 50, 1).unwrap());
        for m in sample_subgroup(&int(12), 20, 5).unwrap() {
            assert!(normalizes(&m, &int(12)).unwrap());
        }
    }

    #[test]
    fn normalizer_inside_half_power_bound() {
        for tau in [
            int(4),
            int(8),
            int(9),
            int(16),
            int(12),
            p("2*L-1") * int(5),
        ] {
            let half = half_power_part(&tau).unwrap();
            let samples = sample_subgroup(half.generator(), 30, 2).unwrap();
            for m in samples
                .iter()
                .chain([GMatrix::lower(p("3*L")), GMatrix::t()].iter())
            {
                if normalizes(m, &tau).unwrap() {
                    assert!(g0_contains(m, half.generator()).unwrap());
                }
            }
        }
    }

    #[test]
    fn lemma41_examples() {
        let (u, w, e) = witness_for(3, &int(4)).unwrap();
        assert_eq!(e, 3);
        assert_eq!(u, int(3) * RingElt::lambda_pow(3));
        assert_eq!(&u.pow(2) - &RingElt::one(), int(4) * p("18*L+11"));
        assert_eq!(lemma41_bound(&int(4), &u, &w).unwrap().generator(), &int(2));
        // square-free modulus gives no improvement
        let (u, w, _) = witness_for(3, &int(14)).unwrap();
        assert_eq!(
            lemma41_bound(&int(14), &u, &w).unwrap().generator(),
            &int(14)
        );
        assert!(matches!(
            lemma41_bound(&int(4), &int(3), &RingElt::lambda()),
            Err(Error::NotReduced(_))
        ));
        let (u, _, _) = witness_for(5, &int(7)).unwrap();
        assert_eq!(&u.pow(2) - &RingElt::one(), int(16) * p("225*L+139"));
    }

    #[test]
    fn chain_examples() {
        let c = supergroup_chain(&int(48)).unwrap();
        assert_eq!(c.final_bound.generator(), &int(12));
        assert!(c.agrees);
        assert_eq!(
            supergroup_chain(&int(9)).unwrap().final_bound.generator(),
            &int(9)
        );
        assert_eq!(
            supergroup_chain(&int(5)).unwrap().final_bound.generator(),
            &int(5)
        );
    }

    #[test]
    fn chain_agrees_with_normalizer() {
        for ideal in ideals_up_to_norm(400) {
            let tau = ideal.generator();
            if tau.is_unit() {
                continue;
            }
            let c = supergroup_chain(tau).unwrap();
            assert!(
                c.agrees,
                "{tau}: {} vs {}",
                c.final_bound,
                normalizer_of(tau).unwrap().modulus
            );
            for step in &c.steps {
                assert!(step
                    .remainder
                    .generator()
                    .is_divisible_by(step.bound.generator()));
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let q = quotient_table(&int(4)).unwrap();
        assert_eq!(
            (q.order(), q.exponent(), q.classification),
            (4, 2, QuotientType::Klein4)
        );
        let q = quotient_table(&int(16)).unwrap();
        assert_eq!(q.order(), 16);
        assert_eq!(q.order_profile, BTreeMap::from([(1, 1), (2, 3), (4, 12)]));
        let n4 = smallest_rational_integer(&int(4)).unwrap();
        let probe = GMatrix::lower(RingElt::new(BigInt::from(0), n4));
        assert_eq!(q.element_order(&probe).unwrap(), 4);
        assert_eq!(quotient_table(&int(9)).unwrap().order(), 1);
        assert_eq!(
            quotient_table(&int(8)).unwrap().classification,
            QuotientType::Klein4
        );
    }

    #[test]
    fn elementary_examples() {
        for r in [int(1), int(2), int(4)] {
            let v = is_g5_elementary(&r, DEFAULT_ELEMENTARY_BOUND).unwrap();
            assert!(v.is_elementary(), "{r}");
        }
        let r = p("12*L+7");
        let v = is_g5_elementary(&r, DEFAULT_ELEMENTARY_BOUND).unwrap();
        let (x, y) = v.witness.clone().unwrap();
        assert_eq!(x, int(3) * RingElt::lambda_pow(3));
        assert!(ResidueCtx::new(&r)
            .unwrap()
            .congruent(&(&x.pow(2) - &RingElt::one()), &int(2)));
        assert_eq!(&y * &r, int(11) * RingElt::lambda_pow(4));
        let v = is_g5_elementary(&int(3), DEFAULT_ELEMENTARY_BOUND).unwrap();
        assert_eq!(v.witness.unwrap().0, int(2) * RingElt::lambda_pow(2));
        for r in [int(8), p("2*L-1"), int(6), p("L+3"), int(7), int(12)] {
            let v = is_g5_elementary(&r, DEFAULT_ELEMENTARY_BOUND).unwrap();
            let (x, y) = v.witness.clone().expect("counterexample");
            assert!(is_reduced_form(&x, &(&r * &y)).unwrap());
            assert!(!ResidueCtx::new(&r)
                .unwrap()
                .congruent(&x.pow(2), &RingElt::one()));
        }
    }

    #[test]
    fn generator_test_matches_box_search() {
        // the exact test against a brute-force box on small moduli
        for r in [int(2), int(4), int(3), p("2*L-1"), int(8), p("L+3")] {
            let exact = generator_counterexample(&r).unwrap().is_none();
            let brute = box_search(&r, 12, 3).unwrap().is_none();
            assert_eq!(exact, brute, "{r}");
        }
    }

    #[test]
    fn strong_examples() {
        assert!(
            strongly_elementary(&int(4), DEFAULT_ELEMENTARY_BOUND)
                .unwrap()
                .holds
        );
        assert!(
            strongly_elementary(&int(1), DEFAULT_ELEMENTARY_BOUND)
                .unwrap()
                .holds
        );
        let s = strongly_elementary(&int(8), DEFAULT_ELEMENTARY_BOUND).unwrap();
        assert!(!s.holds);
        assert_eq!(s.failing.unwrap().r, int(8));
    }
}

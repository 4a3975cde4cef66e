//! Congruence subgroups of `G5`.
//!
//! `G0(τ)` is the set of elements of `G5` whose lower-left entry is a
//! multiple of `τ`. Its right cosets correspond to the bottom rows `(c : d)`
//! modulo `τ`, i.e. to points of the projective line over `Z[λ]/(τ)`, and
//! [`coset_table`] enumerates them by closing the orbit of `(0 : 1)` under
//! `S` and `T`.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideals::{index_in_g5, smallest_rational_integer, Ideal, ResidueCtx};
use crate::matrix::{GMatrix, Gen, Word};
use crate::reduction::is_in_g5;
use crate::ring::RingElt;

/// Default cap on the number of projective points a coset table may hold.
pub const DEFAULT_COSET_BOUND: u64 = 10_000;

/// Whether `m ∈ G0(τ)`.
pub fn g0_contains(m: &GMatrix, tau: &RingElt) -> Result<bool> {
    Ok(m.c().is_divisible_by(tau) && is_in_g5(m)?)
}

/// Whether `m` lies in the principal congruence subgroup `G(τ)`, i.e.
/// `m ∈ G5` and `m ≡ ±I (mod τ)`.
pub fn principal_contains(m: &GMatrix, tau: &RingElt) -> Result<bool> {
    if tau.is_zero() {
        return Err(Error::ZeroInput);
    }
    if tau.is_unit() {
        return Err(Error::UnitModulus(tau.to_string()));
    }
    let ctx = ResidueCtx::new(tau)?;
    let zero_off = ctx.is_zero_mod(m.b()) && ctx.is_zero_mod(m.c());
    let one = RingElt::one();
    let plus = ctx.congruent(m.a(), &one) && ctx.congruent(m.d(), &one);
    let minus = ctx.congruent(m.a(), &-&one) && ctx.congruent(m.d(), &-&one);
    Ok(zero_off && (plus || minus) && is_in_g5(m)?)
}

/// `A·B·A⁻¹`.
pub fn conjugate(a: &GMatrix, b: &GMatrix) -> GMatrix {
    b.conjugate(a)
}

/// The three generators of `G0(2)`:
/// `T`, `[[2λ+1, −λ−2], [2λ+2, −2λ−1]]` and `[[2λ+1, −λ], [2λ, −1]]`.
pub fn g0_2_generators() -> [GMatrix; 3] {
    let e = |a: i64, b: i64| RingElt::new(a, b);
    [
        GMatrix::t(),
        GMatrix::new(e(1, 2), e(-2, -1), e(2, 2), e(-1, -2)).expect("det 1"),
        GMatrix::new(e(1, 2), e(0, -1), e(0, 2), e(-1, 0)).expect("det 1"),
    ]
}

/// Residue ring `Z[λ]/(τ)` with small-integer coordinates, used by the
/// coset machinery. Residue `x + yλ` (`0 ≤ x < n`, `0 ≤ y < t`) has index
/// `x + n·y`.
#[derive(Clone, Debug)]
struct SmallRing {
    ctx: ResidueCtx,
    n: i64,
    s: i64,
    t: i64,
}

type Residue = (i64, i64);

impl SmallRing {
    fn new(ctx: ResidueCtx) -> Option<SmallRing> {
        let [[n, s], [_, t]] = ctx.lattice();
        Some(SmallRing {
            n: n.to_i64()?,
            s: s.to_i64()?,
            t: t.to_i64()?,
            ctx,
        })
    }

    fn size(&self) -> i64 {
        self.n * self.t
    }

    fn reduce(&self, x0: i64, x1: i64) -> Residue {
        let k = x1.div_euclid(self.t);
        let y = x1 - k * self.t;
        let x = (x0 - k * self.s).rem_euclid(self.n);
        (x, y)
    }

    fn of(&self, x: &RingElt) -> Residue {
        let r = self.ctx.reduce(x);
        (
            r.a().to_i64().expect("residue fits"),
            r.b().to_i64().expect("residue fits"),
        )
    }

    fn elt(&self, r: Residue) -> RingElt {
        RingElt::new(r.0, r.1)
    }

    fn index(&self, r: Residue) -> u32 {
        (r.0 + self.n * r.1) as u32
    }

    fn mul(&self, x: Residue, y: Residue) -> Residue {
        let bb = x.1 * y.1;
        self.reduce(x.0 * y.0 + bb, x.0 * y.1 + x.1 * y.0 + bb)
    }

    fn add(&self, x: Residue, y: Residue) -> Residue {
        self.reduce(x.0 + y.0, x.1 + y.1)
    }

    fn neg(&self, x: Residue) -> Residue {
        self.reduce(-x.0, -x.1)
    }

    fn all(&self) -> impl Iterator<Item = Residue> + '_ {
        (0..self.t).flat_map(move |y| (0..self.n).map(move |x| (x, y)))
    }
}

/// The projective line over a small residue ring, with canonical forms.
#[derive(Clone, Debug)]
struct ProjectiveLine {
    ring: SmallRing,
    units: Vec<Residue>,
    /// inverse of each unit, by residue index
    inverse: HashMap<u32, Residue>,
}

impl ProjectiveLine {
    fn new(ring: SmallRing) -> ProjectiveLine {
        let mut units = Vec::new();
        let mut inverse = HashMap::new();
        for r in ring.all() {
            if let Some(inv) = ring.ctx.inverse(&ring.elt(r)) {
                units.push(r);
                inverse.insert(ring.index(r), ring.of(&inv));
            }
        }
        ProjectiveLine {
            ring,
            units,
            inverse,
        }
    }

    /// Canonical representative of the class of `(c : d)` under unit scaling:
    /// `(c/d : 1)` when `d` is a unit, otherwise the least pair over all
    /// unit multiples.
    fn canonical(&self, c: Residue, d: Residue) -> (Residue, Residue) {
        let r = &self.ring;
        if let Some(&inv) = self.inverse.get(&r.index(d)) {
            return (r.mul(c, inv), r.reduce(1, 0));
        }
        self.units
            .iter()
            .map(|&u| (r.mul(u, c), r.mul(u, d)))
            .min_by_key(|&(x, y)| (r.index(y), r.index(x)))
            .expect("1 is a unit")
    }

    fn key(&self, p: (Residue, Residue)) -> u64 {
        let r = &self.ring;
        // points with d = 1 first, then by d, then by c
        ((r.index(p.1) as u64) << 32) | r.index(p.0) as u64
    }

    fn act(&self, p: (Residue, Residue), g: Gen) -> (Residue, Residue) {
        let r = &self.ring;
        let (c, d) = p;
        let (c2, d2) = match g {
            Gen::S => (d, r.neg(c)),
            Gen::T => (c, r.add(r.mul(c, r.reduce(0, 1)), d)),
            Gen::TInv => (c, r.add(r.neg(r.mul(c, r.reduce(0, 1))), d)),
        };
        self.canonical(c2, d2)
    }
}

/// The right cosets `G0(τ)\G5`, one per point `(c : d)` of the projective
/// line over `Z[λ]/(τ)`.
#[derive(Clone, Debug)]
pub struct CosetTable {
    modulus: Ideal,
    points: Vec<(RingElt, RingElt)>,
    reps: Vec<Word>,
    action_s: Vec<usize>,
    action_t: Vec<usize>,
    line: ProjectiveLine,
    lookup: HashMap<u64, usize>,
}

impl CosetTable {
    pub fn modulus(&self) -> &Ideal {
        &self.modulus
    }

    pub fn size(&self) -> usize {
        self.points.len()
    }

    /// Canonical bottom rows `(c, d)`, sorted.
    pub fn points(&self) -> &[(RingElt, RingElt)] {
        &self.points
    }

    /// Word for a representative of each coset; its bottom row is a unit
    /// multiple of the corresponding point.
    pub fn reps(&self) -> &[Word] {
        &self.reps
    }

    pub fn rep_matrix(&self, i: usize) -> GMatrix {
        self.reps[i].eval()
    }

    pub fn action(&self, g: Gen) -> Vec<usize> {
        match g {
            Gen::S => self.action_s.clone(),
            Gen::T => self.action_t.clone(),
            Gen::TInv => {
                let mut inv = vec![0; self.action_t.len()];
                for (i, &j) in self.action_t.iter().enumerate() {
                    inv[j] = i;
                }
                inv
            }
        }
    }

    pub fn action_s(&self) -> &[usize] {
        &self.action_s
    }

    pub fn action_t(&self) -> &[usize] {
        &self.action_t
    }

    /// Index of the coset `G0(τ)·m`, from the bottom row of `m`.
    pub fn locate(&self, m: &GMatrix) -> Option<usize> {
        let r = &self.line.ring;
        let p = self.line.canonical(r.of(m.c()), r.of(m.d()));
        self.lookup.get(&self.line.key(p)).copied()
    }

    /// Schreier generators `rep(i)·X·rep(iX)⁻¹` for `X ∈ {S, T}`, with the
    /// trivial ones removed. Together they generate `G0(τ)`.
    pub fn schreier_generators(&self) -> Vec<Word> {
        let mut out = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for i in 0..self.size() {
            for (g, target) in [(Gen::S, self.action_s[i]), (Gen::T, self.action_t[i])] {
                let mut w = self.reps[i].clone();
                w.push(g);
                w.extend(&self.reps[target].inverse());
                let w = w.free_reduce();
                if w.is_empty() {
                    continue;
                }
                let m = w.eval();
                if !m.is_identity() && seen.insert(m) {
                    out.push(w);
                }
            }
        }
        out
    }
}

impl Serialize for CosetTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        #[derive(Serialize)]
        struct Action<'a> {
            #[serde(rename = "S")]
            s: &'a [usize],
            #[serde(rename = "T")]
            t: &'a [usize],
        }
        let points: Vec<[String; 2]> = self
            .points
            .iter()
            .map(|(c, d)| [c.to_string(), d.to_string()])
            .collect();
        let mut st = s.serialize_struct("CosetTable", 5)?;
        st.serialize_field("modulus", &self.modulus)?;
        st.serialize_field("size", &self.points.len())?;
        st.serialize_field("points", &points)?;
        st.serialize_field("reps", &self.reps)?;
        st.serialize_field(
            "action",
            &Action {
                s: &self.action_s,
                t: &self.action_t,
            },
        )?;
        st.end()
    }
}

/// Enumerates `G0(τ)\G5` with the default bound on the number of points.
pub fn coset_table(tau: &RingElt) -> Result<CosetTable> {
    coset_table_bounded(tau, DEFAULT_COSET_BOUND)
}

pub fn coset_table_bounded(tau: &RingElt, bound: u64) -> Result<CosetTable> {
    let expected = index_in_g5(tau)?;
    let size = expected.to_u64().unwrap_or(u64::MAX);
    if size > bound {
        return Err(Error::BoundExceeded { size, bound });
    }
    let ctx = ResidueCtx::new(tau)?;
    let modulus = ctx.modulus().clone();
    let ring = SmallRing::new(ctx).ok_or(Error::BoundExceeded { size, bound })?;
    debug_assert!(ring.size() as u64 <= size);
    let line = ProjectiveLine::new(ring);

    let start = line.canonical((0, 0), line.ring.reduce(1, 0));
    let mut found: Vec<(Residue, Residue)> = vec![start];
    let mut words = vec![Word::new()];
    let mut index: HashMap<u64, usize> = HashMap::from([(line.key(start), 0)]);
    let mut queue = VecDeque::from([0usize]);
    let mut edges: Vec<[usize; 2]> = vec![[usize::MAX; 2]];
    while let Some(i) = queue.pop_front() {
        for (slot, g) in [Gen::S, Gen::T].into_iter().enumerate() {
            let next = line.act(found[i], g);
            let k = line.key(next);
            let j = match index.get(&k) {
                Some(&j) => j,
                None => {
                    let j = found.len();
                    if j as u64 >= size.max(1) * 2 {
                        return Err(Error::IntegrityError {
                            found: j as u64,
                            expected: size,
                        });
                    }
                    found.push(next);
                    let mut w = words[i].clone();
                    w.push(g);
                    words.push(w);
                    edges.push([usize::MAX; 2]);
                    index.insert(k, j);
                    queue.push_back(j);
                    j
                }
            };
            edges[i][slot] = j;
        }
    }
    if found.len() as u64 != size {
        return Err(Error::IntegrityError {
            found: found.len() as u64,
            expected: size,
        });
    }

    // sort by canonical key and relabel
    let mut order: Vec<usize> = (0..found.len()).collect();
    order.sort_by_key(|&i| line.key(found[i]));
    let mut relabel = vec![0; found.len()];
    for (new, &old) in order.iter().enumerate() {
        relabel[old] = new;
    }
    let r = &line.ring;
    let points = order
        .iter()
        .map(|&i| (r.elt(found[i].0), r.elt(found[i].1)))
        .collect();
    let reps = order.iter().map(|&i| words[i].clone()).collect();
    let action_s = order.iter().map(|&i| relabel[edges[i][0]]).collect();
    let action_t = order.iter().map(|&i| relabel[edges[i][1]]).collect();
    let lookup = order
        .iter()
        .enumerate()
        .map(|(new, &old)| (line.key(found[old]), new))
        .collect();
    Ok(CosetTable {
        modulus,
        points,
        reps,
        action_s,
        action_t,
        line,
        lookup,
    })
}

/// `A_xy = [[1, xλ], [0, 1]]·[[1, 0], [y·n(ν)·λ, 1]]` where `n(ν)` is the
/// least positive rational integer in `(ν)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaElement {
    pub x: i64,
    pub y: i64,
    pub matrix: GMatrix,
}

impl OmegaElement {
    pub fn new(x: i64, y: i64, nu: &RingElt) -> Result<OmegaElement> {
        let n = smallest_rational_integer(nu)?;
        let upper = GMatrix::upper(RingElt::new(0, x));
        let lower = GMatrix::lower(RingElt::new(BigInt::zero(), n * y));
        Ok(OmegaElement {
            x,
            y,
            matrix: &upper * &lower,
        })
    }
}

fn check_omega_args(e: &OmegaElement, m: u32, nu: &RingElt) -> Result<i64> {
    if nu.is_divisible_by(&RingElt::from_int(3)) || nu.is_zero() {
        return Err(Error::BadRange(format!("3 divides {nu}")));
    }
    let modulus = 3i64
        .checked_pow(m)
        .ok_or_else(|| Error::BadRange(format!("m = {m} too large")))?;
    if m == 0 || !(0..modulus).contains(&e.x) || !(0..modulus).contains(&e.y) || e.y % 3 == 0 {
        return Err(Error::BadRange(format!(
            "(x, y) = ({}, {}) outside 0 ≤ x, y < 3^{m} with 3 ∤ y",
            e.x, e.y
        )));
    }
    Ok(modulus)
}

/// Congruence test for `A₁·G0(3ᵐν) = A₂·G0(3ᵐν)`:
/// `y ≡ y'` and `y²(x − x') ≡ 0 (mod 3ᵐ)`.
pub fn omega_coset_equal(
    e1: &OmegaElement,
    e2: &OmegaElement,
    m: u32,
    nu: &RingElt,
) -> Result<bool> {
    let q = check_omega_args(e1, m, nu)?;
    check_omega_args(e2, m, nu)?;
    let same_y = (e1.y - e2.y).rem_euclid(q) == 0;
    let x_term = ((e1.y as i128).pow(2) * (e1.x - e2.x) as i128).rem_euclid(q as i128) == 0;
    Ok(same_y && x_term)
}

/// The same question decided from the definition: `A₂⁻¹A₁ ∈ G0(3ᵐν)`.
pub fn omega_coset_equal_by_membership(
    e1: &OmegaElement,
    e2: &OmegaElement,
    m: u32,
    nu: &RingElt,
) -> Result<bool> {
    let q = check_omega_args(e1, m, nu)?;
    check_omega_args(e2, m, nu)?;
    let level = nu * &RingElt::from_int(q);
    g0_contains(&(&e2.matrix.inverse() * &e1.matrix), &level)
}

/// All admissible `A_xy` for the given `m`: `0 ≤ x, y < 3ᵐ`, `3 ∤ y`.
pub fn omega_set(m: u32, nu: &RingElt) -> Result<Vec<OmegaElement>> {
    let q = 3i64.pow(m);
    let mut out = Vec::new();
    for y in (0..q).filter(|y| y % 3 != 0) {
        for x in 0..q {
            out.push(OmegaElement::new(x, y, nu)?);
        }
    }
    Ok(out)
}

/// Largest index for which [`sample_subgroup`] adds Schreier generators.
pub const SCHREIER_SAMPLING_BOUND: u64 = 2_000;

/// Generators used by [`sample_subgroup`]: `T`, `[[1, 0], [n(τ)λ, 1]]`, and
/// the Schreier generators of `G0(τ)` when its index is small enough.
pub fn sampling_generators(tau: &RingElt) -> Result<Vec<GMatrix>> {
    let n = smallest_rational_integer(tau)?;
    let mut gens = vec![
        GMatrix::t(),
        GMatrix::lower(RingElt::new(BigInt::zero(), n)),
    ];
    if let Ok(table) = coset_table_bounded(tau, SCHREIER_SAMPLING_BOUND) {
        for w in table.schreier_generators() {
            let m = w.eval();
            if !gens.contains(&m) {
                gens.push(m);
            }
        }
    }
    Ok(gens)
}

/// `count` pseudo-random elements of `G0(τ)`, deterministic in `seed`.
///
/// Each is a random product of 1 to 6 generators from
/// [`sampling_generators`] or their inverses. When the Schreier generators
/// are included the samples can reach all of `G0(τ)`; otherwise only the
/// subgroup generated by the two translations.
pub fn sample_subgroup(tau: &RingElt, count: usize, seed: u64) -> Result<Vec<GMatrix>> {
    let gens = sampling_generators(tau)?;
    let inverses: Vec<GMatrix> = gens.iter().map(GMatrix::inverse).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let len = rng.gen_range(1..=6);
        let mut m = GMatrix::identity();
        for _ in 0..len {
            let i = rng.gen_range(0..gens.len());
            m = if rng.gen_bool(0.5) {
                &m * &gens[i]
            } else {
                &m * &inverses[i]
            };
        }
        out.push(m);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> RingElt {
        s.parse().unwrap()
    }

    fn int(n: i64) -> RingElt {
        RingElt::from_int(n)
    }

    #[test]
    fn g0_membership() {
        let [t, _, third] = g0_2_generators();
        assert!(g0_contains(&third, &int(2)).unwrap());
        assert!(g0_contains(&t, &p("12*L+7")).unwrap());
        assert!(!g0_contains(&GMatrix::s(), &int(2)).unwrap());
        for g in g0_2_generators() {
            assert!(g0_contains(&g, &int(2)).unwrap(), "{g}");
        }
        // determinant one, even lower-left entry, but outside G5
        let outside = GMatrix::new(p("3*L-1"), p("L"), p("2*L"), p("L")).unwrap();
        assert!(!g0_contains(&outside, &int(2)).unwrap());
    }

    #[test]
    fn principal_membership() {
        assert!(principal_contains(&GMatrix::identity(), &int(7)).unwrap());
        assert!(!principal_contains(&GMatrix::t(), &int(2)).unwrap());
        assert!(principal_contains(&GMatrix::t_pow(2), &int(2)).unwrap());
        assert!(matches!(
            principal_contains(&GMatrix::t(), &p("L")),
            Err(Error::UnitModulus(_))
        ));
    }

    #[test]
    fn conjugation_is_a_homomorphism() {
        let a = GMatrix::lower(p("3*L"));
        let b1: GMatrix = "TSTTSt".parse::<Word>().unwrap().eval();
        let b2: GMatrix = "SttST".parse::<Word>().unwrap().eval();
        assert_eq!(conjugate(&GMatrix::identity(), &b1), b1);
        assert_eq!(
            conjugate(&a, &(&b1 * &b2)),
            &conjugate(&a, &b1) * &conjugate(&a, &b2)
        );
    }

    #[test]
    fn small_tables() {
        let t1 = coset_table(&int(1)).unwrap();
        assert_eq!(t1.size(), 1);
        assert_eq!(coset_table(&int(3)).unwrap().size(), 10);
        assert_eq!(coset_table(&int(2)).unwrap().size(), 5);
        assert_eq!(coset_table(&int(16)).unwrap().size(), 320);
        assert!(matches!(
            coset_table_bounded(&int(16), 100),
            Err(Error::BoundExceeded {
                size: 320,
                bound: 100
            })
        ));
    }

    #[test]
    fn table_structure() {
        let tau = p("12*L+7") * int(3);
        let table = coset_table(&tau).unwrap();
        let n = table.size();
        for act in [table.action_s(), table.action_t()] {
            let mut seen = vec![false; n];
            for &j in act {
                assert!(!seen[j]);
                seen[j] = true;
            }
        }
        for i in 0..n {
            let m = table.rep_matrix(i);
            assert_eq!(table.locate(&m), Some(i));
            let moved = &m * &GMatrix::t();
            assert_eq!(table.locate(&moved), Some(table.action_t()[i]));
            let moved = &m * &GMatrix::s();
            assert_eq!(table.locate(&moved), Some(table.action_s()[i]));
        }
        for w in table.schreier_generators() {
            assert!(g0_contains(&w.eval(), &tau).unwrap());
        }
    }

    #[test]
    fn omega_examples() {
        let one = int(1);
        let a01 = OmegaElement::new(0, 1, &one).unwrap();
        let a11 = OmegaElement::new(1, 1, &one).unwrap();
        assert!(!omega_coset_equal(&a01, &a11, 1, &one).unwrap());
        assert!(omega_coset_equal(&a01, &a01, 1, &one).unwrap());
        let a31 = OmegaElement::new(3, 1, &one).unwrap();
        assert!(!omega_coset_equal(&a01, &a31, 2, &one).unwrap());
        assert!(omega_coset_equal(&a01, &a31, 2, &one).is_ok());
        assert!(matches!(
            omega_coset_equal(&a01, &a31, 1, &one),
            Err(Error::BadRange(_))
        ));
        let a03 = OmegaElement::new(0, 3, &one).unwrap();
        assert!(omega_coset_equal(&a03, &a01, 2, &one).is_err());
        assert!(omega_coset_equal(&a01, &a01, 1, &int(3)).is_err());
    }

    #[test]
    fn omega_elements_lie_in_g5() {
        for e in omega_set(1, &int(2)).unwrap() {
            assert!(is_in_g5(&e.matrix).unwrap());
            // n(2) = 2, so A_xy ∈ G0(2)
            assert!(g0_contains(&e.matrix, &int(2)).unwrap());
        }
    }

    #[test]
    fn sampling() {
        let s = sample_subgroup(&int(2), 1, 0).unwrap();
        assert!(g0_contains(&s[0], &int(2)).unwrap());
        assert_eq!(
            sample_subgroup(&int(6), 5, 3).unwrap(),
            sample_subgroup(&int(6), 5, 3).unwrap()
        );
        let many = sample_subgroup(&int(4), 100, 7).unwrap();
        assert_eq!(many.len(), 100);
        for m in &many {
            assert!(m.c().is_divisible_by(&int(4)));
            assert!(g0_contains(m, &int(4)).unwrap());
        }
        // the generating set is richer than the two translations
        assert!(sampling_generators(&int(4)).unwrap().len() > 2);
    }

    #[test]
    fn table_sizes_match_index() {
        for ideal in crate::ideals::ideals_up_to_norm(400) {
            let g = ideal.generator();
            let table = coset_table(g).unwrap();
            assert_eq!(
                BigInt::from(table.size()),
                index_in_g5(g).unwrap(),
                "{ideal}"
            );
        }
    }

    #[test]
    fn omega_criterion_matches_membership() {
        for nu in [int(1), int(2), p("L+3"), p("2*L-1")] {
            for m in 1..=2 {
                let set = omega_set(m, &nu).unwrap();
                for e1 in &set {
                    for e2 in &set {
                        assert_eq!(
                            omega_coset_equal(e1, e2, m, &nu).unwrap(),
                            omega_coset_equal_by_membership(e1, e2, m, &nu).unwrap(),
                            "{nu} m={m} ({}, {}) ({}, {})",
                            e1.x,
                            e1.y,
                            e2.x,
                            e2.y
                        );
                    }
                }
            }
        }
    }
}

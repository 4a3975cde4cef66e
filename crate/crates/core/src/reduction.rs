//! Pseudo-Euclidean reduction in `Z[λ]`.
//!
//! One division step writes `a = (qλ)·b + r` with `q ∈ Z` and the real
//! value of `r` in the half-open interval `(−|bλ|/2, |bλ|/2]`. Iterating on
//! `(b, r)` ends with a unit `±λ^(−e)`; `e` is the reduced factor of `a/b`
//! and `(aλᵉ, bλᵉ)` is a column of the accumulated matrix, a product of
//! translations `Tᵠ` and swaps `S`. The same procedure decides membership
//! of a matrix in `G5`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{GMatrix, Gen, Word};
use crate::ring::RingElt;

/// Which end of the remainder interval is closed.
///
/// `UpperClosed` is the convention used throughout the crate; the other
/// exists to check that the choice is observable.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum TieBreak {
    /// `(−|bλ|/2, |bλ|/2]`
    #[default]
    UpperClosed,
    /// `[−|bλ|/2, |bλ|/2)`
    LowerClosed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoStep {
    pub q: BigInt,
    pub r: RingElt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedFormResult {
    /// Reduced factor. Negative only when the input is `(unit, 0)` with a
    /// unit of positive exponent, or `(0, unit)`.
    pub e: i64,
    pub reduced_num: RingElt,
    pub reduced_den: RingElt,
    pub witness: GMatrix,
    pub word: Word,
    /// Which column of `witness` equals `±(reduced_num, reduced_den)`.
    pub column: usize,
    /// The quotients `q₁, q₂, …` of the division chain.
    pub quotients: Vec<BigInt>,
}

impl ReducedFormResult {
    /// An element of `G5` whose first column is `±(reduced_num, reduced_den)`.
    pub fn completed_witness(&self) -> GMatrix {
        if self.column == 0 {
            self.witness.clone()
        } else {
            &self.witness * &GMatrix::s()
        }
    }

    pub fn completed_word(&self) -> Word {
        let mut w = self.word.clone();
        if self.column == 1 {
            w.push(Gen::S);
        }
        w
    }
}

/// `floor(real(num) / den)` for a nonzero integer `den`.
pub(crate) fn floor_real_div(num: &RingElt, den: &BigInt) -> BigInt {
    assert!(!den.is_zero());
    let (num, den) = if den.is_negative() {
        (-num, -den)
    } else {
        (num.clone(), den.clone())
    };
    // real(num) = (2a + b + b√5) / 2
    let (a, b) = (num.a(), num.b());
    let root = (b * b * 5u32).sqrt();
    let root = if b.is_negative() { -root } else { root };
    let approx: BigInt = 2 * a + b + root;
    let mut k = approx.div_floor(&(2 * &den));
    let below = |k: &BigInt| (&num - &RingElt::from_int(k * &den)).sign_real();
    while below(&k) < 0 {
        k -= 1;
    }
    while below(&(&k + 1)) >= 0 {
        k += 1;
    }
    k
}

/// One pseudo-Euclidean step `a = (qλ)b + r`.
pub fn pseudo_divide(a: &RingElt, b: &RingElt) -> Result<PseudoStep> {
    pseudo_divide_with(a, b, TieBreak::UpperClosed)
}

pub fn pseudo_divide_with(a: &RingElt, b: &RingElt, tie: TieBreak) -> Result<PseudoStep> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let big = b * &RingElt::lambda();
    let sigma = big.sign_real();
    let beta = big.abs_real();
    let two_n = 2 * beta.norm();
    let two_a = a.scale(&2.into());
    // with x = a/β, the multiplier of β is ⌈x − ½⌉ (upper closed) or ⌊x + ½⌋
    let q_abs = match tie {
        TieBreak::UpperClosed => -floor_real_div(&(&(&beta - &two_a) * &beta.conj()), &two_n),
        TieBreak::LowerClosed => floor_real_div(&(&(&two_a + &beta) * &beta.conj()), &two_n),
    };
    let q = if sigma < 0 { -q_abs } else { q_abs };
    let r = a - &big.scale(&q);
    let two_r = r.scale(&2.into());
    debug_assert!(match tie {
        TieBreak::UpperClosed =>
            (&two_r + &beta).sign_real() > 0 && (&beta - &two_r).sign_real() >= 0,
        TieBreak::LowerClosed =>
            (&two_r + &beta).sign_real() >= 0 && (&beta - &two_r).sign_real() > 0,
    });
    Ok(PseudoStep { q, r })
}

fn iteration_cap(a: &RingElt, b: &RingElt) -> usize {
    let bits = [a.a(), a.b(), b.a(), b.b()]
        .iter()
        .map(|x| x.bits())
        .max()
        .unwrap_or(0)
        .max(1);
    64 * bits as usize
}

/// Runs the division chain on `(a, b)` until the second entry vanishes.
/// Returns the quotients and the final unit-or-not first entry `x`, so that
/// `(a, b) = (∏ TᵠS)·(x, 0)`.
fn division_chain(a: &RingElt, b: &RingElt, tie: TieBreak) -> Result<(Vec<BigInt>, RingElt)> {
    let cap = iteration_cap(a, b);
    let mut x = a.clone();
    let mut y = b.clone();
    let mut qs = Vec::new();
    while !y.is_zero() {
        if qs.len() >= cap {
            return Err(Error::IterationCapExceeded(cap));
        }
        let step = pseudo_divide_with(&x, &y, tie)?;
        qs.push(step.q);
        x = y;
        y = -step.r;
    }
    Ok((qs, x))
}

/// Replays `quotients` on `(a, b)` and checks that every remainder lies in
/// `(−|bλ|/2, |bλ|/2]` and that the chain ends with a zero.
pub fn chain_within_interval(a: &RingElt, b: &RingElt, quotients: &[BigInt]) -> bool {
    let mut x = a.clone();
    let mut y = b.clone();
    for q in quotients {
        if y.is_zero() {
            return false;
        }
        let big = &y * &RingElt::lambda();
        let r = &x - &big.scale(q);
        let beta = big.abs_real();
        let two_r = r.scale(&2.into());
        if (&two_r + &beta).sign_real() <= 0 || (&beta - &two_r).sign_real() < 0 {
            return false;
        }
        x = y;
        y = -r;
    }
    y.is_zero()
}

fn chain_word(qs: &[BigInt]) -> Word {
    let mut w = Word::new();
    for q in qs {
        w.push_t_pow(q);
        w.push(Gen::S);
    }
    w
}

/// Reduced factor `e(a/b)` with its witness in `G5`.
pub fn reduced_factor(a: &RingElt, b: &RingElt) -> Result<ReducedFormResult> {
    reduced_factor_with(a, b, TieBreak::UpperClosed)
}

pub fn reduced_factor_with(a: &RingElt, b: &RingElt, tie: TieBreak) -> Result<ReducedFormResult> {
    let coprime = a.gcd(b).map(|g| g.is_one()).unwrap_or(false);
    if !coprime {
        return Err(Error::NotCoprime(a.to_string(), b.to_string()));
    }
    let (qs, last) = division_chain(a, b, tie)?;
    let unit = last.unit_decompose()?;
    let e = -unit.exponent;
    let scale = RingElt::lambda_pow(e);
    let mut word = chain_word(&qs);
    let column = if qs.is_empty() {
        0
    } else {
        word.0.pop();
        1
    };
    let witness = word.eval();
    Ok(ReducedFormResult {
        e,
        reduced_num: a * &scale,
        reduced_den: b * &scale,
        witness,
        word,
        column,
        quotients: qs,
    })
}

/// Whether `(x, y)` is a column of some element of `G5`.
pub fn is_reduced_form(x: &RingElt, y: &RingElt) -> Result<bool> {
    Ok(reduced_factor(x, y)?.e == 0)
}

/// A word in `S, T, T⁻¹` evaluating to `m`, or `None` when `m ∉ G5`.
pub fn g5_decompose(m: &GMatrix) -> Result<Option<Word>> {
    let det = &(m.a() * m.d()) - &(m.b() * m.c());
    if !det.is_one() {
        return Err(Error::BadDeterminant(det.to_string()));
    }
    let (qs, last) = division_chain(m.a(), m.c(), TieBreak::UpperClosed)?;
    if !last.abs_real().is_one() {
        return Ok(None);
    }
    let mut word = chain_word(&qs);
    let rest = &word.eval().inverse() * m;
    // rest = ±[[1, y], [0, 1]], canonical sign makes the diagonal 1
    debug_assert!(rest.c().is_zero() && rest.a().is_one() && rest.d().is_one());
    let y = rest.b();
    if !y.a().is_zero() {
        return Ok(None);
    }
    word.push_t_pow(y.b());
    debug_assert_eq!(word.eval(), *m);
    Ok(Some(word))
}

pub fn is_in_g5(m: &GMatrix) -> Result<bool> {
    Ok(g5_decompose(m)?.is_some())
}

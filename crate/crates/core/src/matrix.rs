//! Determinant-one 2×2 matrices over `Z[λ]` taken modulo ±1, and words in
//! the generators `S`, `T`, `T⁻¹` of `G5`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ring::RingElt;

/// An element of `PSL2(Z[λ])`. The sign is fixed so that the first nonzero
/// entry in reading order is positive; `M` and `−M` therefore compare equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GMatrix {
    a: RingElt,
    b: RingElt,
    c: RingElt,
    d: RingElt,
}

impl GMatrix {
    pub fn new(a: RingElt, b: RingElt, c: RingElt, d: RingElt) -> Result<Self> {
        let det = &(&a * &d) - &(&b * &c);
        if !det.is_one() {
            return Err(Error::BadDeterminant(det.to_string()));
        }
        Ok(GMatrix::from_det_one(a, b, c, d))
    }

    /// Caller guarantees `ad − bc = 1`.
    pub(crate) fn from_det_one(a: RingElt, b: RingElt, c: RingElt, d: RingElt) -> Self {
        debug_assert!((&(&a * &d) - &(&b * &c)).is_one());
        let lead = [&a, &b, &c, &d]
            .into_iter()
            .find(|x| !x.is_zero())
            .map_or(1, RingElt::sign_real);
        if lead < 0 {
            GMatrix {
                a: -a,
                b: -b,
                c: -c,
                d: -d,
            }
        } else {
            GMatrix { a, b, c, d }
        }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        GMatrix::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        GMatrix::from_det_one(
            RingElt::one(),
            RingElt::zero(),
            RingElt::zero(),
            RingElt::one(),
        )
    }

    /// `S = [[0, −1], [1, 0]]`, the involution `z ↦ −1/z`.
    pub fn s() -> Self {
        GMatrix::from_det_one(
            RingElt::zero(),
            (-1).into(),
            RingElt::one(),
            RingElt::zero(),
        )
    }

    /// `T = [[1, λ], [0, 1]]`, the translation `z ↦ z + λ`.
    pub fn t() -> Self {
        GMatrix::t_pow(1)
    }

    /// `Tᵏ = [[1, kλ], [0, 1]]`.
    pub fn t_pow(k: i64) -> Self {
        GMatrix::from_det_one(
            RingElt::one(),
            RingElt::new(0, k),
            RingElt::zero(),
            RingElt::one(),
        )
    }

    /// `[[1, 0], [x, 1]]`.
    pub fn lower(x: RingElt) -> Self {
        GMatrix::from_det_one(RingElt::one(), RingElt::zero(), x, RingElt::one())
    }

    /// `[[1, x], [0, 1]]`.
    pub fn upper(x: RingElt) -> Self {
        GMatrix::from_det_one(RingElt::one(), x, RingElt::zero(), RingElt::one())
    }

    pub fn a(&self) -> &RingElt {
        &self.a
    }
    pub fn b(&self) -> &RingElt {
        &self.b
    }
    pub fn c(&self) -> &RingElt {
        &self.c
    }
    pub fn d(&self) -> &RingElt {
        &self.d
    }

    pub fn entries(&self) -> [&RingElt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn trace(&self) -> RingElt {
        &self.a + &self.d
    }

    pub fn is_identity(&self) -> bool {
        *self == GMatrix::identity()
    }

    pub fn inverse(&self) -> GMatrix {
        GMatrix::from_det_one(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    pub fn pow(&self, mut e: u64) -> GMatrix {
        let mut base = self.clone();
        let mut acc = GMatrix::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `A·B·A⁻¹`.
    pub fn conjugate(&self, by: &GMatrix) -> GMatrix {
        &(by * self) * &by.inverse()
    }

    /// Largest coefficient bit length over all entries.
    pub fn max_bits(&self) -> u64 {
        self.entries()
            .iter()
            .flat_map(|e| [e.a().bits(), e.b().bits()])
            .max()
            .unwrap_or(0)
    }
}

impl std::ops::Mul<&GMatrix> for &GMatrix {
    type Output = GMatrix;
    fn mul(self, o: &GMatrix) -> GMatrix {
        GMatrix::from_det_one(
            &(&self.a * &o.a) + &(&self.b * &o.c),
            &(&self.a * &o.b) + &(&self.b * &o.d),
            &(&self.c * &o.a) + &(&self.d * &o.c),
            &(&self.c * &o.b) + &(&self.d * &o.d),
        )
    }
}

impl std::ops::Mul for GMatrix {
    type Output = GMatrix;
    fn mul(self, o: GMatrix) -> GMatrix {
        &self * &o
    }
}

impl fmt::Display for GMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for GMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GMatrix{self}")
    }
}

impl Serialize for GMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [
            [self.a.to_string(), self.b.to_string()],
            [self.c.to_string(), self.d.to_string()],
        ]
        .serialize(s)
    }
}

/// A generator of `G5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    S,
    T,
    TInv,
}

impl Gen {
    pub fn matrix(self) -> GMatrix {
        match self {
            Gen::S => GMatrix::s(),
            Gen::T => GMatrix::t(),
            Gen::TInv => GMatrix::t_pow(-1),
        }
    }

    pub fn inverse(self) -> Gen {
        match self {
            Gen::S => Gen::S,
            Gen::T => Gen::TInv,
            Gen::TInv => Gen::T,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Gen::S => 'S',
            Gen::T => 'T',
            Gen::TInv => 't',
        }
    }
}

/// A word over `{S, T, T⁻¹}`, written `S`, `T`, `t`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<Gen>);

impl Word {
    pub fn new() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, g: Gen) {
        self.0.push(g);
    }

    /// Appends `Tᵏ`.
    pub fn push_t_pow(&mut self, k: &BigInt) {
        let g = if k.sign() == num_bigint::Sign::Minus {
            Gen::TInv
        } else {
            Gen::T
        };
        let n: u64 = num_traits::ToPrimitive::to_u64(&k.magnitude().clone())
            .expect("translation exponent fits in u64");
        self.0.extend(std::iter::repeat_n(g, n as usize));
    }

    pub fn extend(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|g| g.inverse()).collect())
    }

    pub fn eval(&self) -> GMatrix {
        let s = GMatrix::s();
        let mut acc = GMatrix::identity();
        let mut i = 0;
        // consecutive T/t letters collapse into a single translation
        while i < self.0.len() {
            if self.0[i] == Gen::S {
                acc = &acc * &s;
                i += 1;
                continue;
            }
            let mut k = 0i64;
            while i < self.0.len() && self.0[i] != Gen::S {
                k += if self.0[i] == Gen::T { 1 } else { -1 };
                i += 1;
            }
            acc = &acc * &GMatrix::t_pow(k);
        }
        acc
    }

    /// Cancels adjacent `Tt`, `tT` and `SS` pairs.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Gen> = Vec::with_capacity(self.0.len());
        for &g in &self.0 {
            if out.last() == Some(&g.inverse()) {
                out.pop();
            } else {
                out.push(g);
            }
        }
        Word(out)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.0 {
            write!(f, "{}", g.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(pos, c)| match c {
                'S' => Ok(Gen::S),
                'T' => Ok(Gen::T),
                't' => Ok(Gen::TInv),
                _ => Err(Error::Syntax {
                    pos,
                    msg: format!("unexpected generator '{c}'"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

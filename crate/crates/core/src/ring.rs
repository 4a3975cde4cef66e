//! Exact arithmetic in the ring `Z[λ]`, λ² = λ + 1.
//!
//! An element `a + bλ` is stored as two arbitrary-precision integers. The
//! real embedding sends λ to the golden ratio `(1 + √5)/2`; every ordering
//! question is answered by exact integer predicates, never by floats.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element `a + bλ` of `Z[λ]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RingElt {
    a: BigInt,
    b: BigInt,
}

/// `sign · λ^exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnitRep {
    pub sign: i8,
    pub exponent: i64,
}

impl UnitRep {
    pub fn to_elt(self) -> RingElt {
        let p = RingElt::lambda_pow(self.exponent);
        if self.sign < 0 {
            -p
        } else {
            p
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivResult {
    pub quotient: RingElt,
    pub remainder: RingElt,
}

impl RingElt {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        RingElt {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn from_int(a: impl Into<BigInt>) -> Self {
        RingElt::new(a, 0)
    }

    pub fn zero() -> Self {
        RingElt::default()
    }

    pub fn one() -> Self {
        RingElt::from_int(1)
    }

    pub fn lambda() -> Self {
        RingElt::new(0, 1)
    }

    /// λ⁻¹ = λ − 1.
    pub fn lambda_inv() -> Self {
        RingElt::new(-1, 1)
    }

    /// λᵏ for any integer k.
    pub fn lambda_pow(k: i64) -> Self {
        if k >= 0 {
            RingElt::lambda().pow(k as u64)
        } else {
            RingElt::lambda_inv().pow(k.unsigned_abs())
        }
    }

    /// Coefficient of 1.
    pub fn a(&self) -> &BigInt {
        &self.a
    }

    /// Coefficient of λ.
    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// The rational integer this element equals, if `b = 0`.
    pub fn as_integer(&self) -> Option<&BigInt> {
        self.b.is_zero().then_some(&self.a)
    }

    pub fn pow(&self, mut e: u64) -> RingElt {
        let mut base = self.clone();
        let mut acc = RingElt::one();
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

    pub fn scale(&self, k: &BigInt) -> RingElt {
        RingElt::new(&self.a * k, &self.b * k)
    }

    /// Galois conjugate: λ ↦ 1 − λ, so `a + bλ ↦ (a + b) − bλ`.
    pub fn conj(&self) -> RingElt {
        RingElt::new(&self.a + &self.b, -&self.b)
    }

    /// Field norm `a² + ab − b²`.
    pub fn norm(&self) -> BigInt {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    pub fn abs_norm(&self) -> BigInt {
        self.norm().abs()
    }

    pub fn is_unit(&self) -> bool {
        self.abs_norm().is_one()
    }

    /// Sign of `a + b(1 + √5)/2`, exactly.
    pub fn sign_real(&self) -> i8 {
        // 2·value = s + b√5 with s = 2a + b
        let s: BigInt = 2 * &self.a + &self.b;
        let ss = sign_of(&s);
        let sb = sign_of(&self.b);
        if ss == sb || sb == 0 {
            return ss;
        }
        if ss == 0 {
            return sb;
        }
        let lhs = &s * &s;
        let rhs = 5 * &self.b * &self.b;
        if lhs > rhs {
            ss
        } else {
            sb
        }
    }

    pub fn cmp_real(&self, other: &RingElt) -> Ordering {
        match (self - other).sign_real() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }

    pub fn abs_real(&self) -> RingElt {
        if self.sign_real() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Approximate real value, for diagnostics only.
    pub fn to_f64(&self) -> f64 {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * phi
    }

    /// Writes a unit as `±λᵏ`.
    pub fn unit_decompose(&self) -> Result<UnitRep> {
        if !self.is_unit() {
            return Err(Error::NotAUnit(self.to_string()));
        }
        let sign = self.sign_real();
        let mut v = self.abs_real();
        let one = RingElt::one();
        let lam = RingElt::lambda();
        let lam_inv = RingElt::lambda_inv();
        let mut k = 0i64;
        while v.cmp_real(&one) == Ordering::Greater {
            v = &v * &lam_inv;
            k += 1;
        }
        while v.cmp_real(&one) == Ordering::Less {
            v = &v * &lam;
            k -= 1;
        }
        debug_assert!(v.is_one());
        Ok(UnitRep { sign, exponent: k })
    }

    /// Norm-Euclidean division with coefficient-wise nearest rounding.
    pub fn divmod_nearest(&self, divisor: &RingElt) -> Result<DivResult> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self * &divisor.conj();
        let n = divisor.norm();
        let quotient = RingElt::new(round_div(&num.a, &n), round_div(&num.b, &n));
        let remainder = self - &(&quotient * divisor);
        debug_assert!(remainder.abs_norm() < n.abs());
        Ok(DivResult {
            quotient,
            remainder,
        })
    }

    /// `Some(q)` with `self = q · d`, or `None` when `d` does not divide `self`.
    pub fn exact_divide(&self, d: &RingElt) -> Result<Option<RingElt>> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self * &d.conj();
        let n = d.norm();
        let (qa, ra) = num.a.div_rem(&n);
        if !ra.is_zero() {
            return Ok(None);
        }
        let (qb, rb) = num.b.div_rem(&n);
        if !rb.is_zero() {
            return Ok(None);
        }
        Ok(Some(RingElt::new(qa, qb)))
    }

    /// Whether `d` divides `self`. Only zero is divisible by zero.
    pub fn is_divisible_by(&self, d: &RingElt) -> bool {
        if d.is_zero() {
            return self.is_zero();
        }
        matches!(self.exact_divide(d), Ok(Some(_)))
    }

    /// Division that the caller knows to be exact.
    pub(crate) fn div_exact(&self, d: &RingElt) -> RingElt {
        self.exact_divide(d)
            .ok()
            .flatten()
            .unwrap_or_else(|| panic!("{d} does not divide {self}"))
    }

    /// Canonical generator of the ideal `(a, b)`.
    pub fn gcd(&self, other: &RingElt) -> Result<RingElt> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let mut x = self.clone();
        let mut y = other.clone();
        while !y.is_zero() {
            let r = x.divmod_nearest(&y)?.remainder;
            x = y;
            y = r;
        }
        Ok(x.canonical_associate())
    }

    /// Bézout coefficients: `(g, s, t)` with `s·self + t·other = g` and `g`
    /// a gcd (not normalized).
    pub fn extended_gcd(&self, other: &RingElt) -> Result<(RingElt, RingElt, RingElt)> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (RingElt::one(), RingElt::zero());
        let (mut t0, mut t1) = (RingElt::zero(), RingElt::one());
        while !r1.is_zero() {
            let DivResult {
                quotient,
                remainder,
            } = r0.divmod_nearest(&r1)?;
            let s2 = &s0 - &(&quotient * &s1);
            let t2 = &t0 - &(&quotient * &t1);
            r0 = std::mem::replace(&mut r1, remainder);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        Ok((r0, s0, t0))
    }

    /// Canonical generator of `lcm(a, b)`; both must be nonzero.
    pub fn lcm(&self, other: &RingElt) -> Result<RingElt> {
        let g = self.gcd(other)?;
        Ok((self * &other.div_exact(&g)).canonical_associate())
    }

    /// The associate `±λᵏx` that is positive and whose real value `v`
    /// satisfies `√|N| ≤ v < λ√|N|`. Zero maps to zero.
    pub fn canonical_associate(&self) -> RingElt {
        if self.is_zero() {
            return RingElt::zero();
        }
        let n = RingElt::from_int(self.abs_norm());
        // v ≥ λ√n  ⇔  v² ≥ (λ+1)n
        let upper = &n * &RingElt::new(1, 1);
        let lam = RingElt::lambda();
        let lam_inv = RingElt::lambda_inv();
        let mut v = self.abs_real();
        while (&v * &v).cmp_real(&upper) != Ordering::Less {
            v = &v * &lam_inv;
        }
        while (&v * &v).cmp_real(&n) == Ordering::Less {
            v = &v * &lam;
        }
        v
    }

    /// True when this element is its own canonical associate.
    pub fn is_canonical(&self) -> bool {
        !self.is_zero() && self.canonical_associate() == *self
    }

    /// `(a, b)` as decimal strings.
    pub fn to_pair_strings(&self) -> [String; 2] {
        [self.a.to_string(), self.b.to_string()]
    }
}

fn sign_of(x: &BigInt) -> i8 {
    match x.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Nearest integer to `p / n`, ties rounded up.
fn round_div(p: &BigInt, n: &BigInt) -> BigInt {
    let (p, n) = if n.is_negative() {
        (-p, -n)
    } else {
        (p.clone(), n.clone())
    };
    let num: BigInt = 2 * p + &n;
    num.div_floor(&(2 * n))
}

impl fmt::Display for RingElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.b.is_one() {
            write!(f, "L")?;
        } else if self.b == -BigInt::one() {
            write!(f, "-L")?;
        } else {
            write!(f, "{}*L", self.b)?;
        }
        match sign_of(&self.a) {
            1 => write!(f, "+{}", self.a),
            -1 => write!(f, "-{}", self.a.abs()),
            _ => Ok(()),
        }
    }
}

impl fmt::Debug for RingElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElt({self})")
    }
}

impl FromStr for RingElt {
    type Err = Error;

    /// Parses sums of products of integers and `L` (λ), e.g. `2*L-1`.
    fn from_str(s: &str) -> Result<Self> {
        Parser::new(s).parse()
    }
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser {
            chars: src
                .char_indices()
                .filter(|(_, c)| !c.is_whitespace())
                .collect(),
            pos: 0,
            src,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.src.len(), |&(i, _)| i)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Syntax {
            pos: self.offset(),
            msg: msg.to_string(),
        })
    }

    fn parse(mut self) -> Result<RingElt> {
        if self.chars.is_empty() {
            return self.err("empty expression");
        }
        let mut acc = RingElt::zero();
        let mut first = true;
        loop {
            let negative = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    false
                }
                Some('-') => {
                    self.pos += 1;
                    true
                }
                Some(_) if first => false,
                Some(_) => return self.err("expected '+' or '-'"),
                None => break,
            };
            first = false;
            let term = self.term()?;
            if negative {
                acc -= term;
            } else {
                acc += term;
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RingElt> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<RingElt> {
        match self.peek() {
            Some('L') | Some('λ') => {
                self.pos += 1;
                Ok(RingElt::lambda())
            }
            Some(c) if c.is_ascii_digit() => {
                let mut digits = String::new();
                while let Some(c) = self.peek().filter(char::is_ascii_digit) {
                    digits.push(c);
                    self.pos += 1;
                }
                Ok(RingElt::from_int(
                    BigInt::from_str(&digits).expect("digits parse"),
                ))
            }
            Some(_) => self.err("expected an integer or 'L'"),
            None => self.err("unexpected end of input"),
        }
    }
}

impl Serialize for RingElt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_pair_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RingElt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a, b] = <[String; 2]>::deserialize(d)?;
        let a = BigInt::from_str(&a).map_err(D::Error::custom)?;
        let b = BigInt::from_str(&b).map_err(D::Error::custom)?;
        Ok(RingElt::new(a, b))
    }
}

impl From<i64> for RingElt {
    fn from(a: i64) -> Self {
        RingElt::from_int(a)
    }
}

impl From<BigInt> for RingElt {
    fn from(a: BigInt) -> Self {
        RingElt::from_int(a)
    }
}

impl Add<&RingElt> for &RingElt {
    type Output = RingElt;
    fn add(self, rhs: &RingElt) -> RingElt {
        RingElt::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub<&RingElt> for &RingElt {
    type Output = RingElt;
    fn sub(self, rhs: &RingElt) -> RingElt {
        RingElt::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul<&RingElt> for &RingElt {
    type Output = RingElt;
    fn mul(self, rhs: &RingElt) -> RingElt {
        let bb = &self.b * &rhs.b;
        RingElt::new(
            &self.a * &rhs.a + &bb,
            &self.a * &rhs.b + &rhs.a * &self.b + bb,
        )
    }
}

impl Neg for &RingElt {
    type Output = RingElt;
    fn neg(self) -> RingElt {
        RingElt::new(-&self.a, -&self.b)
    }
}

impl Neg for RingElt {
    type Output = RingElt;
    fn neg(self) -> RingElt {
        RingElt::new(-self.a, -self.b)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RingElt> for RingElt {
            type Output = RingElt;
            fn $m(self, rhs: RingElt) -> RingElt {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RingElt> for RingElt {
            type Output = RingElt;
            fn $m(self, rhs: &RingElt) -> RingElt {
                (&self).$m(rhs)
            }
        }
        impl $tr<RingElt> for &RingElt {
            type Output = RingElt;
            fn $m(self, rhs: RingElt) -> RingElt {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<RingElt> for RingElt {
    fn add_assign(&mut self, rhs: RingElt) {
        self.a += rhs.a;
        self.b += rhs.b;
    }
}

impl SubAssign<RingElt> for RingElt {
    fn sub_assign(&mut self, rhs: RingElt) {
        self.a -= rhs.a;
        self.b -= rhs.b;
    }
}

impl MulAssign<&RingElt> for RingElt {
    fn mul_assign(&mut self, rhs: &RingElt) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn e(a: i64, b: i64) -> RingElt {
        RingElt::new(a, b)
    }

    fn p(s: &str) -> RingElt {
        s.parse().unwrap()
    }

    #[test]
    fn lambda_squared() {
        assert_eq!(&RingElt::lambda() * &RingElt::lambda(), e(1, 1));
        assert_eq!(p("2*L-1").pow(2), e(5, 0));
        assert_eq!(&RingElt::one() * &e(7, -3), e(7, -3));
    }

    #[test]
    fn norms() {
        assert_eq!(p("225*L+139").norm(), BigInt::from(-29));
        assert_eq!(p("225*L+139").abs_norm(), BigInt::from(29));
        assert_eq!(p("12*L+7").abs_norm(), BigInt::from(11));
        assert_eq!(RingElt::lambda().norm(), BigInt::from(-1));
    }

    #[test]
    fn signs() {
        assert_eq!(p("2*L-3").sign_real(), 1);
        assert_eq!(p("1-L").sign_real(), -1);
        assert_eq!(RingElt::zero().sign_real(), 0);
        // 8λ − 13 ≈ −0.0557, 13 − 8λ > 0 is not mistaken for zero
        assert_eq!(e(-13, 8).sign_real(), -1);
        assert_eq!(e(13, -8).sign_real(), 1);
    }

    #[test]
    fn units() {
        assert_eq!(
            p("2*L-3").unit_decompose().unwrap(),
            UnitRep {
                sign: 1,
                exponent: -3
            }
        );
        assert_eq!(
            p("L+1").unit_decompose().unwrap(),
            UnitRep {
                sign: 1,
                exponent: 2
            }
        );
        assert_eq!(
            e(-1, 0).unit_decompose().unwrap(),
            UnitRep {
                sign: -1,
                exponent: 0
            }
        );
        assert!(matches!(e(2, 0).unit_decompose(), Err(Error::NotAUnit(_))));
        assert_eq!(RingElt::lambda_pow(18), e(1597, 2584));
    }

    #[test]
    fn division() {
        let d = e(5, 0).divmod_nearest(&p("2*L-1")).unwrap();
        assert_eq!((d.quotient, d.remainder), (p("2*L-1"), RingElt::zero()));
        let d = e(3, 0).divmod_nearest(&RingElt::lambda()).unwrap();
        assert_eq!((d.quotient, d.remainder), (p("3*L-3"), RingElt::zero()));
        let d = e(1, 0).divmod_nearest(&e(1, 0)).unwrap();
        assert_eq!((d.quotient, d.remainder), (e(1, 0), RingElt::zero()));
        assert_eq!(
            e(1, 0).divmod_nearest(&RingElt::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn exact_division() {
        assert_eq!(
            p("3600*L+2224").exact_divide(&e(16, 0)).unwrap(),
            Some(p("225*L+139"))
        );
        assert_eq!(e(5, 0).exact_divide(&p("2*L-1")).unwrap(), Some(p("2*L-1")));
        assert_eq!(e(3, 0).exact_divide(&e(2, 0)).unwrap(), None);
        assert_eq!(
            e(3, 0).exact_divide(&RingElt::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn gcds() {
        let u = RingElt::lambda_pow(3).scale(&3.into());
        let w = RingElt::lambda_pow(3).scale(&9.into());
        let one = RingElt::one();
        let g = (&u * &u - &one).gcd(&(&w * &w - &one)).unwrap();
        assert_eq!(g, e(4, 0));
        assert_eq!(e(0, 0).gcd(&e(0, 0)), Err(Error::BothZero));
        assert_eq!(p("18*L+11").gcd(&e(2, 0)).unwrap(), one);
        let x = p("-7*L+3");
        assert_eq!(x.gcd(&RingElt::zero()).unwrap(), x.canonical_associate());
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(e(4, 0).canonical_associate(), e(4, 0));
        assert_eq!(e(-3, 0).canonical_associate(), e(3, 0));
        assert_eq!(p("2*L-1").canonical_associate(), p("2*L-1"));
        assert_eq!(RingElt::lambda_pow(-7).canonical_associate(), e(1, 0));
    }

    #[test]
    fn parsing() {
        assert_eq!(p("2*L-1"), e(-1, 2));
        assert_eq!(p("225*L+139"), e(139, 225));
        assert_eq!(p("5"), e(5, 0));
        assert_eq!(p(" - L + 2 "), e(2, -1));
        assert_eq!(p("L*L"), e(1, 1));
        assert_eq!(p("3*L*L*L"), RingElt::lambda_pow(3).scale(&3.into()));
        match "2*+L".parse::<RingElt>() {
            Err(Error::Syntax { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("{other:?}"),
        }
        assert!("".parse::<RingElt>().is_err());
        assert_eq!(p("2 3"), e(23, 0));
    }

    #[test]
    fn display_round_trip() {
        for x in [
            e(0, 0),
            e(-1, 2),
            e(139, 225),
            e(2, -1),
            e(0, 1),
            e(0, -5),
            e(-4, 0),
        ] {
            assert_eq!(p(&x.to_string()), x);
        }
        assert_eq!(e(60, 96).to_string(), "96*L+60");
    }

    #[test]
    fn serde_pair() {
        let x = e(139, 225);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"["139","225"]"#);
        assert_eq!(serde_json::from_str::<RingElt>(&s).unwrap(), x);
    }

    fn elt() -> impl Strategy<Value = RingElt> {
        (-500i64..500, -500i64..500).prop_map(|(a, b)| RingElt::new(a, b))
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(x in elt(), y in elt()) {
            prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
        }

        #[test]
        fn conj_product_is_norm(x in elt()) {
            prop_assert_eq!(&x * &x.conj(), RingElt::from_int(x.norm()));
        }

        #[test]
        fn divmod_contract(x in elt(), y in elt()) {
            prop_assume!(!y.is_zero());
            let d = x.divmod_nearest(&y).unwrap();
            prop_assert_eq!(&(&d.quotient * &y) + &d.remainder, x);
            prop_assert!(d.remainder.abs_norm() < y.abs_norm());
        }

        #[test]
        fn gcd_divides_and_scales(x in elt(), y in elt(), c in elt()) {
            prop_assume!(!x.is_zero() && !c.is_zero());
            let g = x.gcd(&y).unwrap();
            prop_assert!(x.is_divisible_by(&g) && y.is_divisible_by(&g));
            let gc = (&c * &x).gcd(&(&c * &y)).unwrap();
            prop_assert_eq!(gc, (&c * &g).canonical_associate());
        }

        #[test]
        fn sign_is_ordered_ring(x in elt(), y in elt(), k in -30i64..30) {
            let pos = RingElt::lambda_pow(k);
            prop_assert_eq!(pos.sign_real(), 1);
            let f = x.to_f64() - y.to_f64();
            if f.abs() > 1e-6 {
                prop_assert_eq!(x.cmp_real(&y), f.partial_cmp(&0.0).unwrap());
            }
            prop_assert_eq!((&x * &pos).cmp_real(&(&y * &pos)), x.cmp_real(&y));
            prop_assert_eq!((&x + &pos).cmp_real(&(&y + &pos)), x.cmp_real(&y));
        }

        #[test]
        fn bezout_identity(x in elt(), y in elt()) {
            prop_assume!(!x.is_zero() || !y.is_zero());
            let (g, s, t) = x.extended_gcd(&y).unwrap();
            prop_assert_eq!(&(&s * &x) + &(&t * &y), g.clone());
            prop_assert_eq!(g.canonical_associate(), x.gcd(&y).unwrap());
        }

        #[test]
        fn unit_round_trip(k in -40i64..40, neg in any::<bool>()) {
            let u = UnitRep { sign: if neg { -1 } else { 1 }, exponent: k };
            prop_assert_eq!(u.to_elt().unit_decompose().unwrap(), u);
        }

        #[test]
        fn canonical_is_associate_and_idempotent(x in elt()) {
            prop_assume!(!x.is_zero());
            let c = x.canonical_associate();
            prop_assert!(x.exact_divide(&c).unwrap().is_some_and(|u| u.is_unit()));
            prop_assert_eq!(c.canonical_associate(), c.clone());
            let flipped = -(&x * &RingElt::lambda_pow(5));
            prop_assert_eq!(flipped.canonical_associate(), c);
        }
    }
}

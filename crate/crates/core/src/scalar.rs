//! Exact scalar fields.
//!
//! Everything above this module is written against [`Field`]. Two families
//! implement it: the rationals ([`Rational`], arbitrary precision) and the
//! prime fields [`Fp<P>`] with the modulus fixed at compile time.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;

/// Arbitrary-precision rationals.
pub type Rational = BigRational;

/// An exact field usable as the coefficient domain of group-algebra elements,
/// matrices, and structure constants.
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + 'static
{
    fn from_int(v: i64) -> Self;

    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// 0 for the rationals, `p` for `F_p`.
    fn characteristic() -> u64;

    /// Random element: uniform residue for `F_p`, uniform integer in
    /// `[-10, 10]` for the rationals.
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// Integer value if the element has one (symmetric residue in `F_p`).
    fn to_int(&self) -> Option<i64>;

    /// Image of a rational number `num/den`; `None` if `den` is not invertible.
    fn from_ratio(num: i64, den: i64) -> Option<Self> {
        Self::from_int(den).inv().map(|d| Self::from_int(num) * d)
    }

    /// Parses `"a"` or `"a/b"` with 64-bit integer parts.
    fn parse_ratio(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((a, b)) => Self::from_ratio(a.trim().parse().ok()?, b.trim().parse().ok()?),
            None => Some(Self::from_int(s.parse().ok()?)),
        }
    }

    fn checked_div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }

    /// `self += a * b`, the elimination inner loop.
    #[inline]
    fn add_mul(&mut self, a: &Self, b: &Self) {
        let t = a.clone() * b.clone();
        *self += &t;
    }
}

impl Field for BigRational {
    fn from_int(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn characteristic() -> u64 {
        0
    }

    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Self::from_int(rng.gen_range(-10..=10))
    }

    fn to_int(&self) -> Option<i64> {
        if self.is_integer() {
            self.to_integer().to_i64()
        } else {
            None
        }
    }
}

/// Residues modulo the prime `P`, stored reduced in `[0, P)`.
///
/// `P` must be prime and below `2^31`; this is checked when the first value
/// is built in debug builds.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    pub const MODULUS: u32 = P;

    #[inline]
    pub fn new(v: i64) -> Self {
        debug_assert!(P > 1 && P < (1 << 31));
        Fp(v.rem_euclid(P as i64) as u32)
    }

    #[inline]
    pub fn residue(self) -> u32 {
        self.0
    }

    /// Representative in `(-P/2, P/2]`.
    #[inline]
    pub fn symmetric(self) -> i64 {
        let v = self.0 as i64;
        if v > (P as i64) / 2 {
            v - P as i64
        } else {
            v
        }
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symmetric())
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symmetric())
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        let s = self.0 + rhs.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Fp(if self.0 >= rhs.0 { self.0 - rhs.0 } else { self.0 + P - rhs.0 })
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    #[inline]
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 * rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u32> Div for Fp<P> {
    type Output = Self;
    /// Panics on division by zero.
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in F_p")
    }
}

impl<'a, const P: u32> AddAssign<&'a Fp<P>> for Fp<P> {
    #[inline]
    fn add_assign(&mut self, rhs: &'a Fp<P>) {
        *self = *self + *rhs;
    }
}

impl<'a, const P: u32> SubAssign<&'a Fp<P>> for Fp<P> {
    #[inline]
    fn sub_assign(&mut self, rhs: &'a Fp<P>) {
        *self = *self - *rhs;
    }
}

impl<const P: u32> MulAssign for Fp<P> {
    #[inline]
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<const P: u32> Zero for Fp<P> {
    #[inline]
    fn zero() -> Self {
        Fp(0)
    }
    #[inline]
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    #[inline]
    fn one() -> Self {
        Fp(1)
    }
}

impl<const P: u32> Field for Fp<P> {
    #[inline]
    fn from_int(v: i64) -> Self {
        Fp::new(v)
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        // extended Euclid on (a, P)
        let (g, x, _) = extended_gcd(self.0 as i64, P as i64);
        if g != 1 {
            return None;
        }
        Some(Fp::new(x))
    }

    fn characteristic() -> u64 {
        P as u64
    }

    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Fp(rng.gen_range(0..P))
    }

    fn to_int(&self) -> Option<i64> {
        Some(self.symmetric())
    }

    #[inline]
    fn add_mul(&mut self, a: &Self, b: &Self) {
        self.0 = ((self.0 as u64 + a.0 as u64 * b.0 as u64) % P as u64) as u32;
    }
}

/// Returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`.
pub fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let e = a.extended_gcd(&b);
    (e.gcd, e.x, e.y)
}

/// Deterministic primality test for 64-bit inputs small enough for trial division.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

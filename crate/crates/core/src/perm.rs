//! Permutations of `{1..n}` in one-line notation.
//!
//! Products follow the left-action convention: `(p * q)(x) = p(q(x))`, so
//! `q` is applied first.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported degree. `10! = 3_628_800` fits comfortably in a `u64` rank.
pub const MAX_DEGREE: usize = 10;

/// A permutation of `{1..n}`, `n <= MAX_DEGREE`, stored inline.
///
/// The derived ordering compares degrees first and then one-line notation,
/// so permutations of one degree sort lexicographically.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    n: u8,
    images: [u8; MAX_DEGREE],
}

impl Permutation {
    /// Builds a permutation from its one-line notation `p(1) p(2) ... p(n)`.
    pub fn new(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(Error::DegreeCap { n, cap: MAX_DEGREE });
        }
        let mut seen = [false; MAX_DEGREE + 1];
        let mut arr = [0u8; MAX_DEGREE];
        for (k, &v) in images.iter().enumerate() {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[v] = true;
            arr[k] = v as u8;
        }
        Ok(Permutation { n: n as u8, images: arr })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_DEGREE, "degree {n} exceeds {MAX_DEGREE}");
        let mut images = [0u8; MAX_DEGREE];
        for (k, slot) in images.iter_mut().take(n).enumerate() {
            *slot = k as u8 + 1;
        }
        Permutation { n: n as u8, images }
    }

    /// The transposition exchanging `a` and `b` (1-based).
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(a - 1, b - 1);
        p
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.n as usize
    }

    /// `p(x)` for `x` in `1..=n`.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] as usize
    }

    /// One-line notation.
    #[inline]
    pub fn images(&self) -> &[u8] {
        &self.images[..self.n as usize]
    }

    pub fn is_identity(&self) -> bool {
        self.images().iter().enumerate().all(|(k, &v)| v as usize == k + 1)
    }

    /// `x -> self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose_unchecked(other))
    }

    #[inline]
    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        let mut images = [0u8; MAX_DEGREE];
        for k in 0..self.n as usize {
            images[k] = self.images[other.images[k] as usize - 1];
        }
        Permutation { n: self.n, images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = [0u8; MAX_DEGREE];
        for k in 0..self.n as usize {
            images[self.images[k] as usize - 1] = k as u8 + 1;
        }
        Permutation { n: self.n, images }
    }

    pub fn inversions(&self) -> usize {
        let im = self.images();
        let mut count = 0;
        for i in 0..im.len() {
            for j in i + 1..im.len() {
                if im[i] > im[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i64 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// 1-based position in the lexicographic order of `S_n`.
    pub fn lex_rank(&self) -> u64 {
        self.rank0() as u64 + 1
    }

    /// 0-based lexicographic index (Lehmer code in the factorial base).
    #[inline]
    pub fn rank0(&self) -> usize {
        let n = self.n as usize;
        let mut rank = 0usize;
        let mut used: u16 = 0;
        for k in 0..n {
            let v = self.images[k] as usize;
            let smaller_unused = (v - 1) - (used & ((1u16 << (v - 1)) - 1)).count_ones() as usize;
            rank = rank * (n - k) + smaller_unused;
            used |= 1 << (v - 1);
        }
        rank
    }

    /// Inverse of [`Permutation::lex_rank`].
    pub fn unrank(n: usize, rank: u64) -> Result<Permutation> {
        if n > MAX_DEGREE {
            return Err(Error::DegreeCap { n, cap: MAX_DEGREE });
        }
        let total = factorial(n);
        if rank == 0 || rank > total {
            return Err(Error::InvalidPermutation(format!("rank {rank} of S_{n}")));
        }
        Ok(Self::unrank0(n, (rank - 1) as usize))
    }

    pub(crate) fn unrank0(n: usize, mut rank: usize) -> Permutation {
        let mut digits = [0usize; MAX_DEGREE];
        for k in (0..n).rev() {
            let base = n - k;
            digits[k] = rank % base;
            rank /= base;
        }
        let mut avail: Vec<u8> = (1..=n as u8).collect();
        let mut images = [0u8; MAX_DEGREE];
        for k in 0..n {
            images[k] = avail.remove(digits[k]);
        }
        Permutation { n: n as u8, images }
    }

    /// Permutation fixing `n+1..m` and acting as `self` on `1..n`.
    pub fn extend(&self, m: usize) -> Permutation {
        assert!(m >= self.degree() && m <= MAX_DEGREE);
        let mut p = *self;
        for k in self.n as usize..m {
            p.images[k] = k as u8 + 1;
        }
        p.n = m as u8;
        p
    }
}

/// Panics on a degree mismatch; use [`Permutation::compose`] for a checked product.
impl Mul for Permutation {
    type Output = Permutation;
    fn mul(self, rhs: Permutation) -> Permutation {
        assert_eq!(self.n, rhs.n, "degree mismatch in permutation product");
        self.compose_unchecked(&rhs)
    }
}

impl<'a> Mul<&'a Permutation> for &'a Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.n, rhs.n, "degree mismatch in permutation product");
        self.compose_unchecked(rhs)
    }
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// All of `S_n` in lexicographic order.
pub fn enumerate(n: usize) -> Result<Vec<Permutation>> {
    if n > MAX_DEGREE {
        return Err(Error::DegreeCap { n, cap: MAX_DEGREE });
    }
    let mut out = Vec::with_capacity(factorial(n) as usize);
    let mut cur: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation::new(&cur).expect("valid by construction"));
        if !next_permutation(&mut cur) {
            break;
        }
    }
    Ok(out)
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n as usize <= 9 {
            for v in self.images() {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.images().iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Digits for `n <= 9` ("2314"), comma-separated otherwise.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let images: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::InvalidPermutation(s.to_string()))?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::InvalidPermutation(s.to_string()))?
        };
        if images.is_empty() {
            return Err(Error::InvalidPermutation(s.to_string()));
        }
        Permutation::new(&images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn compose_applies_right_factor_first() {
        // 213 ∘ 132: 1->1->2, 2->3->3, 3->2->1
        assert_eq!(p("213").compose(&p("132")).unwrap(), p("231"));
        let q = p("35142");
        assert_eq!(Permutation::identity(5) * q, q);
        assert_eq!(q * q.inverse(), Permutation::identity(5));
    }

    #[test]
    fn compose_rejects_mixed_degrees() {
        assert_eq!(p("12").compose(&p("123")), Err(Error::DegreeMismatch(2, 3)));
    }

    #[test]
    fn sign_examples() {
        assert_eq!(p("123").sign(), 1);
        assert_eq!(p("213").sign(), -1);
        assert_eq!(p("23451").inversions(), 4);
        assert_eq!(p("23451").sign(), 1);
    }

    #[test]
    fn lex_rank_examples() {
        assert_eq!(p("123").lex_rank(), 1);
        assert_eq!(p("132").lex_rank(), 2);
        assert_eq!(p("321").lex_rank(), 6);
        assert_eq!(Permutation::unrank(3, 4).unwrap(), p("231"));
        assert!(Permutation::unrank(3, 7).is_err());
    }

    #[test]
    fn enumerate_small() {
        let s1 = enumerate(1).unwrap();
        assert_eq!(s1, vec![p("1")]);
        let s3: Vec<String> = enumerate(3).unwrap().iter().map(|q| q.to_string()).collect();
        assert_eq!(s3, ["123", "132", "213", "231", "312", "321"]);
        assert_eq!(enumerate(5).unwrap().len(), 120);
        assert!(enumerate(11).is_err());
    }

    #[test]
    fn parse_and_display() {
        assert!("1223".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().is_err());
        let ten = "2,1,3,4,5,6,7,8,9,10".parse::<Permutation>().unwrap();
        assert_eq!(ten.degree(), 10);
        assert_eq!(ten.to_string(), "2,1,3,4,5,6,7,8,9,10");
        assert_eq!(p("4132").to_string(), "4132");
    }

    #[test]
    fn extend_fixes_new_points() {
        assert_eq!(p("21").extend(4), p("2134"));
    }
}

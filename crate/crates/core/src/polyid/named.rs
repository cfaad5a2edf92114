//! Identities that come up for alternative algebras and the octonions,
//! linearized where needed.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::enumerate;
use crate::polyid::expr::{vars, Expr};
use crate::polyid::poly::{MultilinearPoly, TypeBasis};
use crate::scalar::Field;

/// Spare labels for variables that get linearized.
const X: u8 = 101;
const Y: u8 = 102;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedIdentity {
    /// `(x,y,z) + (y,x,z)`.
    LeftAlternative,
    /// `(x,y,z) + (x,z,y)`.
    RightAlternative,
    /// `(xy,z,t) + (x,y,[z,t]) - x(y,z,t) - (x,z,t)y`.
    AltDeg4,
    /// `[[x,y]^2, x]`.
    R1,
    /// `x^2 s(y,z,t) - (x s(y,z,t)) o x` with `w s(y,z,t)` the alternating
    /// sum of `((w o y) o z) o t`.
    R2,
    /// `[[v,w] o [x,y], z]`.
    Hp5,
    /// Commutator of an alternating degree-5 sum with `u`, degree 6.
    Hp6,
    /// Second alternating degree-5 sum bracketed with `u`, degree 6.
    Sz,
    /// Alternating sum of `5 x1(x2((x3x4)(x5x6))) - x1(x2(x3(x4(x5x6))))`.
    New6,
}

impl NamedIdentity {
    pub const ALL: [NamedIdentity; 9] = [
        NamedIdentity::LeftAlternative,
        NamedIdentity::RightAlternative,
        NamedIdentity::AltDeg4,
        NamedIdentity::R1,
        NamedIdentity::R2,
        NamedIdentity::Hp5,
        NamedIdentity::Hp6,
        NamedIdentity::Sz,
        NamedIdentity::New6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedIdentity::LeftAlternative => "alt-left",
            NamedIdentity::RightAlternative => "alt-right",
            NamedIdentity::AltDeg4 => "altdeg4",
            NamedIdentity::R1 => "r1",
            NamedIdentity::R2 => "r2",
            NamedIdentity::Hp5 => "hp5",
            NamedIdentity::Hp6 => "hp6",
            NamedIdentity::Sz => "sz",
            NamedIdentity::New6 => "new6",
        }
    }

    pub fn degree(self) -> usize {
        match self {
            NamedIdentity::LeftAlternative | NamedIdentity::RightAlternative => 3,
            NamedIdentity::AltDeg4 => 4,
            NamedIdentity::R1 | NamedIdentity::R2 | NamedIdentity::Hp5 => 5,
            NamedIdentity::Hp6 | NamedIdentity::Sz | NamedIdentity::New6 => 6,
        }
    }

    pub fn expr(self) -> Expr {
        let x = vars(6);
        let (a, b, c, d, e, u) = (&x[0], &x[1], &x[2], &x[3], &x[4], &x[5]);
        match self {
            NamedIdentity::LeftAlternative => a.associator(b, c).add(&b.associator(a, c)),
            NamedIdentity::RightAlternative => a.associator(b, c).add(&a.associator(c, b)),
            NamedIdentity::AltDeg4 => a
                .mul(b)
                .associator(c, d)
                .add(&a.associator(b, &c.commutator(d)))
                .sub(&a.mul(&b.associator(c, d)))
                .sub(&a.associator(c, d).mul(b)),
            NamedIdentity::R1 => {
                let (x, y) = (Expr::var(X), Expr::var(Y));
                let w = x.commutator(&y);
                let f = w.mul(&w).commutator(&x);
                f.linearize(X, &[1, 2, 3]).and_then(|f| f.linearize(Y, &[4, 5])).expect("three x, two y")
            }
            NamedIdentity::R2 => {
                let x = Expr::var(X);
                let s = |w: &Expr| w.jordan(c).jordan(d).jordan(e).alternate(&[3, 4, 5]).expect("small");
                let f = s(&x.mul(&x)).sub(&s(&x).jordan(&x));
                f.linearize(X, &[1, 2]).expect("two x")
            }
            NamedIdentity::Hp5 => a.commutator(b).jordan(&c.commutator(d)).commutator(e),
            NamedIdentity::Hp6 => {
                let t1 = a.mul(&b.mul(&c.mul(&d.mul(e)))).scale(24);
                let t2 = a.mul(&b.associator(c, d).mul(e)).scale(8);
                let t3 = a.associator(b, &c.associator(d, e)).scale(11);
                t1.add(&t2).sub(&t3).alternate(&[1, 2, 3, 4, 5]).expect("small").commutator(u)
            }
            NamedIdentity::Sz => {
                let t1 = a.commutator(b).mul(&c.commutator(d)).mul(e).scale(12);
                let t2 = a.commutator(b).commutator(c).commutator(d).commutator(e);
                t1.sub(&t2).alternate(&[1, 2, 3, 4, 5]).expect("small").commutator(u)
            }
            NamedIdentity::New6 => {
                let t1 = a.mul(&b.mul(&c.mul(d).mul(&e.mul(u)))).scale(5);
                let t2 = a.mul(&b.mul(&c.mul(&d.mul(&e.mul(u)))));
                t1.sub(&t2).alternate(&[1, 2, 3, 4, 5, 6]).expect("small")
            }
        }
    }

    pub fn poly<S: Field>(self) -> MultilinearPoly<S> {
        self.expr().to_multilinear(self.degree(), TypeBasis::Free).expect("named identities are multilinear")
    }
}

impl fmt::Display for NamedIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedIdentity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        NamedIdentity::ALL
            .into_iter()
            .find(|i| i.name() == key)
            .ok_or_else(|| Error::Parse(format!("unknown identity {s:?}")))
    }
}

/// Both linearized alternative laws.
pub fn alternative_laws<S: Field>() -> Vec<MultilinearPoly<S>> {
    vec![NamedIdentity::LeftAlternative.poly(), NamedIdentity::RightAlternative.poly()]
}

/// The standard polynomial `sum_sigma sign(sigma) x_{sigma(1)} ... x_{sigma(n)}`
/// over the associative monomials.
pub fn standard_polynomial<S: Field>(n: usize) -> Result<MultilinearPoly<S>> {
    let terms = enumerate(n)?.into_iter().map(|p| ((0, p), S::from_int(p.sign())));
    MultilinearPoly::from_terms(n, TypeBasis::Associative, terms)
}

/// Consequences in degree `n` of every identity in `gens`.
pub fn lift_all<S: Field>(gens: &[MultilinearPoly<S>], n: usize) -> Result<Vec<MultilinearPoly<S>>> {
    let mut out = Vec::new();
    for g in gens {
        out.extend(g.lift_to(n)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{matrix_algebra, octonions};
    use crate::scalar::Fp;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type F = Fp<1000003>;

    #[test]
    fn parse_names() {
        for id in NamedIdentity::ALL {
            assert_eq!(id.name().parse::<NamedIdentity>().unwrap(), id);
        }
        assert!("nope".parse::<NamedIdentity>().is_err());
    }

    #[test]
    fn octonions_satisfy_every_named_identity() {
        let o = octonions::<F>();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for id in NamedIdentity::ALL {
            let f = id.poly::<F>();
            assert_eq!(f.degree(), id.degree());
            assert!(!f.is_zero(), "{id}");
            for _ in 0..3 {
                let args: Vec<_> = (0..f.degree()).map(|_| o.random_element(&mut rng)).collect();
                assert!(f.evaluate(&o, &args).unwrap().is_zero(), "{id}");
            }
        }
    }

    #[test]
    fn standard_polynomial_on_2x2_matrices() {
        let m = matrix_algebra::<F>(2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let s4 = standard_polynomial::<F>(4).unwrap();
        let s3 = standard_polynomial::<F>(3).unwrap();
        let args: Vec<_> = (0..4).map(|_| m.random_element(&mut rng)).collect();
        assert!(s4.evaluate(&m, &args).unwrap().is_zero());
        assert!(!s3.evaluate(&m, &args[..3]).unwrap().is_zero());
    }

    #[test]
    fn lift_counts() {
        let alt = alternative_laws::<F>();
        assert_eq!(lift_all(&alt, 5).unwrap().len(), 60);
        assert_eq!(lift_all(&alt, 6).unwrap().len(), 420);
    }
}

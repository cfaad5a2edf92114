//! Finite-dimensional algebras given by structure constants
//! `v_i v_j = sum_k c_ijk v_k`.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Field;

/// Coordinates of an element with respect to the basis of its algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement<S> {
    pub coords: Vec<S>,
}

impl<S: Field> AlgebraElement<S> {
    pub fn zero(dim: usize) -> Self {
        AlgebraElement { coords: vec![S::zero(); dim] }
    }

    pub fn basis(dim: usize, i: usize) -> Self {
        let mut x = Self::zero(dim);
        x.coords[i] = S::one();
        x
    }

    pub fn from_ints(v: &[i64]) -> Self {
        AlgebraElement { coords: v.iter().map(|&c| S::from_int(c)).collect() }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        AlgebraElement { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a.clone() + b.clone()).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        AlgebraElement { coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a.clone() - b.clone()).collect() }
    }

    pub fn scale(&self, c: &S) -> Self {
        AlgebraElement { coords: self.coords.iter().map(|a| a.clone() * c.clone()).collect() }
    }
}

/// An algebra with dense structure constants plus a list of the nonzero ones.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureAlgebra<S> {
    name: String,
    labels: Vec<String>,
    constants: Vec<S>,
    nonzero: Vec<(usize, usize, usize, S)>,
}

impl<S: Field> StructureAlgebra<S> {
    /// Builds an algebra from `(i, j, k, c)` quadruples meaning `v_i v_j` has `c` at `v_k`
    /// (0-based, repeated quadruples add up).
    pub fn from_quadruples(name: &str, labels: Vec<String>, quads: &[(usize, usize, usize, S)]) -> Result<Self> {
        let d = labels.len();
        if d == 0 {
            return Err(Error::Algebra("dimension must be positive".into()));
        }
        let mut constants = vec![S::zero(); d * d * d];
        for (i, j, k, c) in quads {
            if *i >= d || *j >= d || *k >= d {
                return Err(Error::Algebra(format!("index ({i},{j},{k}) out of range for dimension {d}")));
            }
            constants[(i * d + j) * d + k] += c;
        }
        let nonzero = (0..d * d * d)
            .filter(|&x| !constants[x].is_zero())
            .map(|x| (x / (d * d), (x / d) % d, x % d, constants[x].clone()))
            .collect();
        Ok(StructureAlgebra { name: name.to_string(), labels, constants, nonzero })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `c_ijk`, 0-based.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &S {
        let d = self.dim();
        &self.constants[(i * d + j) * d + k]
    }

    pub fn basis(&self, i: usize) -> AlgebraElement<S> {
        AlgebraElement::basis(self.dim(), i)
    }

    pub fn one_element(&self) -> Option<AlgebraElement<S>> {
        let d = self.dim();
        let candidates: Vec<AlgebraElement<S>> = (0..d).map(|i| self.basis(i)).collect();
        for u in &candidates {
            if candidates.iter().all(|v| self.mul(u, v) == *v && self.mul(v, u) == *v) {
                return Some(u.clone());
            }
        }
        None
    }

    pub fn product(&self, x: &AlgebraElement<S>, y: &AlgebraElement<S>) -> Result<AlgebraElement<S>> {
        let d = self.dim();
        if x.dim() != d || y.dim() != d {
            return Err(Error::DimensionMismatch(format!("elements of length {} and {} in dimension {d}", x.dim(), y.dim())));
        }
        Ok(self.mul(x, y))
    }

    /// Product without the dimension check.
    pub fn mul(&self, x: &AlgebraElement<S>, y: &AlgebraElement<S>) -> AlgebraElement<S> {
        let mut out = vec![S::zero(); self.dim()];
        self.mul_into(&x.coords, &y.coords, &mut out);
        AlgebraElement { coords: out }
    }

    /// `out += x * y` on raw coordinate slices.
    #[inline]
    pub fn mul_into(&self, x: &[S], y: &[S], out: &mut [S]) {
        for (i, j, k, c) in &self.nonzero {
            let (a, b) = (&x[*i], &y[*j]);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let ab = a.clone() * b.clone();
            out[*k].add_mul(&ab, c);
        }
    }

    /// `(xy)z - x(yz)`.
    pub fn associator(&self, x: &AlgebraElement<S>, y: &AlgebraElement<S>, z: &AlgebraElement<S>) -> AlgebraElement<S> {
        self.mul(&self.mul(x, y), z).sub(&self.mul(x, &self.mul(y, z)))
    }

    /// `xy - yx`.
    pub fn commutator(&self, x: &AlgebraElement<S>, y: &AlgebraElement<S>) -> AlgebraElement<S> {
        self.mul(x, y).sub(&self.mul(y, x))
    }

    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> AlgebraElement<S> {
        AlgebraElement { coords: (0..self.dim()).map(|_| S::sample(rng)).collect() }
    }

    pub fn to_spec(&self) -> AlgebraSpec {
        AlgebraSpec {
            name: self.name.clone(),
            labels: self.labels.clone(),
            constants: self.nonzero.iter().map(|(i, j, k, c)| (*i, *j, *k, c.to_string())).collect(),
        }
    }

    pub fn from_spec(spec: &AlgebraSpec) -> Result<Self> {
        let quads = spec
            .constants
            .iter()
            .map(|(i, j, k, c)| {
                S::parse_ratio(c).map(|v| (*i, *j, *k, v)).ok_or_else(|| Error::Parse(format!("bad structure constant {c:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_quadruples(&spec.name, spec.labels.clone(), &quads)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: AlgebraSpec = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_spec(&spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_spec()).expect("spec serializes")
    }
}

/// Serializable description of an algebra: basis labels and the nonzero
/// structure constants as `[i, j, k, "value"]` with 0-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub name: String,
    pub labels: Vec<String>,
    pub constants: Vec<(usize, usize, usize, String)>,
}

// Table entries for e_i e_j, i, j = 1..7: (sign, powers of alpha, beta, gamma, k)
// meaning sign * alpha^a beta^b gamma^c * e_k, with k = 0 the unit.
const CD_TABLE: [[(i8, u8, u8, u8, u8); 7]; 7] = [
    [(1, 1, 0, 0, 0), (1, 0, 0, 0, 3), (1, 1, 0, 0, 2), (1, 0, 0, 0, 5), (1, 1, 0, 0, 4), (-1, 0, 0, 0, 7), (-1, 1, 0, 0, 6)],
    [(-1, 0, 0, 0, 3), (1, 0, 1, 0, 0), (-1, 0, 1, 0, 1), (1, 0, 0, 0, 6), (1, 0, 0, 0, 7), (1, 0, 1, 0, 4), (1, 0, 1, 0, 5)],
    [(-1, 1, 0, 0, 2), (1, 0, 1, 0, 1), (-1, 1, 1, 0, 0), (1, 0, 0, 0, 7), (1, 1, 0, 0, 6), (-1, 0, 1, 0, 5), (-1, 1, 1, 0, 4)],
    [(-1, 0, 0, 0, 5), (-1, 0, 0, 0, 6), (-1, 0, 0, 0, 7), (1, 0, 0, 1, 0), (-1, 0, 0, 1, 1), (-1, 0, 0, 1, 2), (-1, 0, 0, 1, 3)],
    [(-1, 1, 0, 0, 4), (-1, 0, 0, 0, 7), (-1, 1, 0, 0, 6), (1, 0, 0, 1, 1), (-1, 1, 0, 1, 0), (1, 0, 0, 1, 3), (1, 1, 0, 1, 2)],
    [(1, 0, 0, 0, 7), (-1, 0, 1, 0, 4), (1, 0, 1, 0, 5), (1, 0, 0, 1, 2), (-1, 0, 0, 1, 3), (-1, 0, 1, 1, 0), (-1, 0, 1, 1, 1)],
    [(1, 1, 0, 0, 6), (-1, 0, 1, 0, 5), (1, 1, 1, 0, 4), (1, 0, 0, 1, 3), (-1, 1, 0, 1, 2), (1, 0, 1, 1, 1), (1, 1, 1, 1, 0)],
];

fn pow<S: Field>(x: &S, e: u8) -> S {
    (0..e).fold(S::one(), |acc, _| acc * x.clone())
}

/// The Cayley-Dickson algebra `C(alpha, beta, gamma)` on the basis `1, e1, ..., e7`.
pub fn cayley_dickson<S: Field>(alpha: S, beta: S, gamma: S) -> Result<StructureAlgebra<S>> {
    if alpha.is_zero() || beta.is_zero() || gamma.is_zero() {
        return Err(Error::Algebra("Cayley-Dickson parameters must be nonzero".into()));
    }
    let mut quads = Vec::new();
    for k in 0..8 {
        quads.push((0, k, k, S::one()));
        if k > 0 {
            quads.push((k, 0, k, S::one()));
        }
    }
    for (i, row) in CD_TABLE.iter().enumerate() {
        for (j, &(sign, a, b, c, k)) in row.iter().enumerate() {
            let coeff = S::from_int(sign as i64) * pow(&alpha, a) * pow(&beta, b) * pow(&gamma, c);
            quads.push((i + 1, j + 1, k as usize, coeff));
        }
    }
    let labels = std::iter::once("1".to_string()).chain((1..8).map(|i| format!("e{i}"))).collect();
    let name = format!("C({alpha},{beta},{gamma})");
    StructureAlgebra::from_quadruples(&name, labels, &quads)
}

/// The octonions `C(-1, -1, -1)`.
pub fn octonions<S: Field>() -> StructureAlgebra<S> {
    let m = S::from_int(-1);
    let mut a = cayley_dickson(m.clone(), m.clone(), m).expect("nonzero parameters");
    a.name = "octonions".into();
    a
}

/// `M_k(F)` on the matrix units `E_ab`, ordered row-major.
pub fn matrix_algebra<S: Field>(k: usize) -> Result<StructureAlgebra<S>> {
    if k == 0 {
        return Err(Error::Algebra("matrix size must be positive".into()));
    }
    let idx = |a: usize, b: usize| a * k + b;
    let mut quads = Vec::new();
    for a in 0..k {
        for b in 0..k {
            for d in 0..k {
                quads.push((idx(a, b), idx(b, d), idx(a, d), S::one()));
            }
        }
    }
    let labels = (0..k * k).map(|x| format!("E{}{}", x / k + 1, x % k + 1)).collect();
    StructureAlgebra::from_quadruples(&format!("M{k}"), labels, &quads)
}

/// The `n`-dimensional algebra with every product zero.
pub fn zero_algebra<S: Field>(n: usize) -> Result<StructureAlgebra<S>> {
    StructureAlgebra::from_quadruples("zero", (1..=n).map(|i| format!("v{i}")).collect(), &[])
}

/// `t(x) = 2a` for `x = a + sum a_i e_i` in a Cayley-Dickson algebra.
pub fn cd_trace<S: Field>(x: &AlgebraElement<S>) -> S {
    S::from_int(2) * x.coords[0].clone()
}

/// The quadratic norm `x * conj(x)` of `C(alpha, beta, gamma)`.
pub fn cd_norm<S: Field>(alpha: &S, beta: &S, gamma: &S, x: &AlgebraElement<S>) -> S {
    let sq: Vec<S> = x.coords.iter().map(|a| a.clone() * a.clone()).collect();
    let (a, b, g) = (alpha.clone(), beta.clone(), gamma.clone());
    let weights = [
        S::one(),
        -a.clone(),
        -b.clone(),
        a.clone() * b.clone(),
        -g.clone(),
        a.clone() * g.clone(),
        b.clone() * g.clone(),
        -(a * b * g),
    ];
    weights.iter().zip(&sq).fold(S::zero(), |acc, (w, s)| acc + w.clone() * s.clone())
}

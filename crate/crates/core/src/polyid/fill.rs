//! Global fill-and-reduce over all `t * n!` monomials, and the module
//! generated by known identities.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebras::StructureAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, RowReducer};
use crate::perm::enumerate;
use crate::polyid::eval::monomial_values;
use crate::polyid::poly::{MultilinearPoly, TypeBasis};
use crate::scalar::Field;

/// Largest number of monomial columns the global pipeline accepts.
pub const GLOBAL_COLUMN_CAP: usize = 10_000;

/// Stopping rule and seed for randomized fill-and-reduce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FillConfig {
    pub seed: u64,
    /// Stop after this many consecutive iterations without a rank change.
    pub stable_iters: usize,
    pub max_iters: usize,
}

impl FillConfig {
    pub fn new(seed: u64) -> Self {
        FillConfig { seed, stable_iters: 10, max_iters: 10_000 }
    }
}

/// FNV-1a over the seed, a label and the iteration number.
fn mix(seed: u64, label: &str, iteration: usize) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let bytes = seed.to_le_bytes().into_iter().chain(label.bytes()).chain((iteration as u64).to_le_bytes());
    for b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h
}

/// Generator for one fill iteration; depends only on `(seed, label, iteration)`.
pub fn iteration_rng(seed: u64, label: &str, iteration: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(mix(seed, label, iteration))
}

pub(crate) fn random_args<S: Field>(alg: &StructureAlgebra<S>, n: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<S>> {
    (0..n).map(|_| alg.random_element(rng).coords).collect()
}

/// Tracks consecutive iterations without a rank change.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct Stabilizer {
    pub history: Vec<usize>,
    pub stable: usize,
}

impl Stabilizer {
    /// Records a rank; returns `true` once the rank has settled.
    pub fn record(&mut self, rank: usize, full: bool, cfg: &FillConfig) -> Result<bool> {
        let changed = self.history.last() != Some(&rank);
        self.stable = if changed { 0 } else { self.stable + 1 };
        self.history.push(rank);
        if full || self.stable >= cfg.stable_iters {
            return Ok(true);
        }
        if self.history.len() >= cfg.max_iters {
            return Err(Error::RankUnstable { iterations: self.history.len(), rank });
        }
        Ok(false)
    }
}

/// Outcome of the global computation: `All(n)` as a canonical nullspace basis.
#[derive(Clone, Debug)]
pub struct FillResult<S> {
    pub degree: usize,
    pub basis: TypeBasis,
    pub rank: usize,
    /// Rank after each iteration.
    pub rank_history: Vec<usize>,
    /// Canonical basis of the identities, one coefficient vector per row.
    pub identities: Vec<Vec<S>>,
}

impl<S: Field> FillResult<S> {
    pub fn nullity(&self) -> usize {
        self.identities.len()
    }

    pub fn identity_polys(&self) -> Result<Vec<MultilinearPoly<S>>> {
        self.identities.iter().map(|v| MultilinearPoly::from_dense(self.degree, self.basis, v)).collect()
    }
}

fn check_columns(n: usize, basis: TypeBasis) -> Result<usize> {
    if n == 0 || n > 8 {
        return Err(Error::DegreeCap { n, cap: 8 });
    }
    let cols = basis.num_monomials(n);
    if cols > GLOBAL_COLUMN_CAP {
        return Err(Error::SizeCap { size: cols, cap: GLOBAL_COLUMN_CAP });
    }
    Ok(cols)
}

/// Evaluates every monomial at random arguments until the rank of the
/// stacked evaluations settles; the nullspace is the space of identities.
pub fn fill_and_reduce<S: Field>(
    alg: &StructureAlgebra<S>,
    n: usize,
    basis: TypeBasis,
    cfg: &FillConfig,
) -> Result<FillResult<S>> {
    let cols = check_columns(n, basis)?;
    let d = alg.dim();
    let mut reducer = RowReducer::new(cols);
    let mut stab = Stabilizer::default();
    for it in 0.. {
        let mut rng = iteration_rng(cfg.seed, "global", it);
        let vals = monomial_values(alg, &random_args(alg, n, &mut rng), basis);
        for c in 0..d {
            let row: Vec<S> = vals.data.iter().skip(c).step_by(d).cloned().collect();
            reducer.insert(row);
        }
        if stab.record(reducer.rank(), reducer.is_full(), cfg)? {
            break;
        }
    }
    Ok(FillResult { degree: n, basis, rank: reducer.rank(), rank_history: stab.history, identities: reducer.nullspace_basis() })
}

/// Row space of all `sigma . f` for `f` in `polys`, all of one degree.
pub fn module_span<S: Field>(polys: &[MultilinearPoly<S>], n: usize, basis: TypeBasis) -> Result<RowReducer<S>> {
    let cols = check_columns(n, basis)?;
    let perms = enumerate(n)?;
    let mut reducer = RowReducer::new(cols);
    for f in polys {
        if f.degree() != n {
            return Err(Error::DegreeMismatch(f.degree(), n));
        }
        if f.basis() != basis {
            return Err(Error::Parse("generator uses a different monomial basis".into()));
        }
        for s in &perms {
            if reducer.is_full() {
                return Ok(reducer);
            }
            reducer.insert(f.act(s)?.to_dense());
        }
    }
    Ok(reducer)
}

/// `Old(n)`: the module generated by the degree-`n` consequences of `gens`.
/// Returns the rank and the nonzero rows of the RCF.
pub fn module_generators<S: Field>(
    gens: &[MultilinearPoly<S>],
    n: usize,
    basis: TypeBasis,
) -> Result<(usize, Matrix<S>)> {
    let lifted = crate::polyid::named::lift_all(gens, n)?;
    let r = module_span(&lifted, n, basis)?;
    Ok((r.rank(), r.to_matrix()))
}

/// Picks module generators for `All(n)` modulo `Old(n)`: nullspace vectors
/// are tried in order of increasing support, keeping those outside the
/// module generated so far.
pub fn new_generators<S: Field>(
    all: &FillResult<S>,
    old: &[MultilinearPoly<S>],
) -> Result<Vec<MultilinearPoly<S>>> {
    let (n, basis) = (all.degree, all.basis);
    let perms = enumerate(n)?;
    let mut span = module_span(old, n, basis)?;
    let mut order: Vec<&Vec<S>> = all.identities.iter().collect();
    order.sort_by_key(|v| v.iter().filter(|c| !c.is_zero()).count());
    let mut out = Vec::new();
    for v in order {
        if span.rank() >= all.nullity() {
            break;
        }
        if span.contains(v) {
            continue;
        }
        let f = MultilinearPoly::from_dense(n, basis, v)?;
        for s in &perms {
            span.insert(f.act(s)?.to_dense());
        }
        out.push(f);
    }
    Ok(out)
}

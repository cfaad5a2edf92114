//! Association types: bracketings of `n` factors, in a fixed total order.
//!
//! A type of degree `n > 1` is a product `y z` with `y` of degree `a` and `z`
//! of degree `n - a`. Types are ordered by `a` decreasing, then by `y`, then
//! by `z`, recursively; for `n = 3` this gives `(**)*` before `*(**)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::perm::MAX_DEGREE;

/// Largest degree listed by [`association_types`].
pub const TYPE_CAP: usize = 8;

/// Prefix code of a full binary tree: `1` for an internal node, `0` for a leaf.
pub type TreeCode = Vec<u8>;

/// How a type of degree `n > 1` splits into its two factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Split {
    pub left_degree: usize,
    pub left: usize,
    pub right: usize,
}

pub(crate) struct Catalog {
    codes: Vec<Vec<TreeCode>>,
    index: Vec<HashMap<TreeCode, usize>>,
    splits: Vec<Vec<Option<Split>>>,
}

impl Catalog {
    fn build(max: usize) -> Catalog {
        let mut codes: Vec<Vec<TreeCode>> = vec![vec![], vec![vec![0]]];
        let mut splits: Vec<Vec<Option<Split>>> = vec![vec![], vec![None]];
        for n in 2..=max {
            let mut cs = Vec::new();
            let mut ss = Vec::new();
            for a in (1..n).rev() {
                for (li, l) in codes[a].iter().enumerate() {
                    for (ri, r) in codes[n - a].iter().enumerate() {
                        let mut code = Vec::with_capacity(2 * n - 1);
                        code.push(1);
                        code.extend_from_slice(l);
                        code.extend_from_slice(r);
                        cs.push(code);
                        ss.push(Some(Split { left_degree: a, left: li, right: ri }));
                    }
                }
            }
            codes.push(cs);
            splits.push(ss);
        }
        let index = codes.iter().map(|cs| cs.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect()).collect();
        Catalog { codes, index, splits }
    }

    pub fn count(&self, n: usize) -> usize {
        self.codes[n].len()
    }

    pub fn code(&self, n: usize, k: usize) -> &TreeCode {
        &self.codes[n][k]
    }

    pub fn index_of(&self, code: &[u8]) -> Option<usize> {
        let n = code.len().div_ceil(2);
        self.index.get(n)?.get(code).copied()
    }

    pub fn split(&self, n: usize, k: usize) -> Option<Split> {
        self.splits[n][k]
    }
}

pub(crate) fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(|| Catalog::build(MAX_DEGREE))
}

/// Number of association types of degree `n`, the Catalan number `C(n-1)`.
pub fn num_types(n: usize) -> usize {
    assert!((1..=MAX_DEGREE).contains(&n), "degree {n} outside 1..={MAX_DEGREE}");
    catalog().count(n)
}

/// One bracketing of `n` factors and its 1-based position in the type order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AssociationType {
    pub degree: usize,
    pub index: usize,
    code: TreeCode,
}

impl AssociationType {
    pub fn code(&self) -> &[u8] {
        &self.code
    }

    /// Parses the `*` notation, e.g. `"(**)(**)"` or `"*(*(**))"`.
    pub fn parse(s: &str) -> Result<Self> {
        fn factor(b: &[u8], pos: &mut usize) -> Option<TreeCode> {
            match b.get(*pos)? {
                b'*' => {
                    *pos += 1;
                    Some(vec![0])
                }
                b'(' => {
                    *pos += 1;
                    let t = product(b, pos)?;
                    if b.get(*pos) != Some(&b')') {
                        return None;
                    }
                    *pos += 1;
                    Some(t)
                }
                _ => None,
            }
        }
        fn product(b: &[u8], pos: &mut usize) -> Option<TreeCode> {
            let l = factor(b, pos)?;
            if matches!(b.get(*pos), Some(b'*') | Some(b'(')) {
                let r = factor(b, pos)?;
                let mut code = vec![1];
                code.extend(l);
                code.extend(r);
                Some(code)
            } else {
                Some(l)
            }
        }
        let bytes: Vec<u8> = s.bytes().filter(|c| !c.is_ascii_whitespace()).collect();
        let mut pos = 0;
        let code = product(&bytes, &mut pos).filter(|_| pos == bytes.len());
        let code = code.ok_or_else(|| Error::Parse(format!("bad association type {s:?}")))?;
        let degree = code.len().div_ceil(2);
        if degree > MAX_DEGREE {
            return Err(Error::DegreeCap { n: degree, cap: MAX_DEGREE });
        }
        let index = catalog().index_of(&code).expect("every tree is catalogued") + 1;
        Ok(AssociationType { degree, index, code })
    }
}

fn write_code(code: &[u8], pos: &mut usize, top: bool, out: &mut String) {
    let tag = code[*pos];
    *pos += 1;
    if tag == 0 {
        out.push('*');
        return;
    }
    if !top {
        out.push('(');
    }
    write_code(code, pos, false, out);
    write_code(code, pos, false, out);
    if !top {
        out.push(')');
    }
}

impl fmt::Display for AssociationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        write_code(&self.code, &mut 0, true, &mut s);
        write!(f, "{s}")
    }
}

/// All association types of degree `n` in order.
pub fn association_types(n: usize) -> Result<Vec<AssociationType>> {
    if n == 0 || n > TYPE_CAP {
        return Err(Error::DegreeCap { n, cap: TYPE_CAP });
    }
    let cat = catalog();
    Ok((0..cat.count(n)).map(|k| AssociationType { degree: n, index: k + 1, code: cat.code(n, k).clone() }).collect())
}

/// Type with 1-based `index` in degree `n`.
pub fn association_type(n: usize, index: usize) -> Result<AssociationType> {
    association_types(n)?
        .into_iter()
        .nth(index.wrapping_sub(1))
        .ok_or_else(|| Error::Parse(format!("type index {index} out of range for degree {n}")))
}

/// Position of the `k`-th leaf (0-based) in a prefix code.
pub(crate) fn leaf_offset(code: &[u8], k: usize) -> usize {
    code.iter().enumerate().filter(|(_, &c)| c == 0).nth(k).map(|(i, _)| i).expect("leaf exists")
}

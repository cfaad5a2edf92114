//! Partitions, Young diagrams and standard tableaux.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{factorial, Permutation, MAX_DEGREE};

/// Default cap on the size of an explicitly enumerated row or column group.
pub const GROUP_CAP: usize = 10_000;

/// A partition `n_1 >= n_2 >= ... >= n_k >= 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.parts.len()
    }

    pub fn row_len(&self, r: usize) -> usize {
        self.parts.get(r).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts[0];
        let parts = (0..cols).map(|c| self.parts.iter().filter(|&&r| r > c).count()).collect();
        Partition { parts }
    }

    /// Number of standard tableaux, from
    /// `d = n! * prod_{i<j}(m_i - m_j) / prod_i m_i!` with `m_i = n_i + k - i`.
    pub fn dimension(&self) -> u64 {
        let k = self.parts.len();
        let m: Vec<u64> = self.parts.iter().enumerate().map(|(i, &p)| (p + k - i - 1) as u64).collect();
        // Exact: accumulate as a fraction num/den with u128 headroom.
        let mut num: u128 = factorial(self.n()) as u128;
        for i in 0..k {
            for j in i + 1..k {
                num *= (m[i] - m[j]) as u128;
            }
        }
        let den: u128 = m.iter().map(|&x| factorial(x as usize) as u128).product();
        debug_assert_eq!(num % den, 0);
        (num / den) as u64
    }

    /// Hook-length product form, used as an independent check of [`Partition::dimension`].
    pub fn dimension_by_hooks(&self) -> u64 {
        let conj = self.conjugate();
        let mut hooks: u64 = 1;
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.parts[j] - i - 1;
                hooks *= (arm + leg + 1) as u64;
            }
        }
        factorial(self.n()) / hooks
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.iter().all(|&p| p <= 9) && self.n() <= 9 {
            for p in &self.parts {
                write!(f, "{p}")?;
            }
            Ok(())
        } else {
            let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
            write!(f, "{}", s.join(","))
        }
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parts: Option<Vec<usize>> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse().ok()).collect()
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
        };
        let parts = parts.ok_or_else(|| Error::InvalidPartition(s.to_string()))?;
        Partition::new(parts)
    }
}

/// All partitions of `n`, largest first (reverse of the usual diagram order).
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for part in (1..=max.min(remaining)).rev() {
            cur.push(part);
            rec(remaining - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// A filling of a Young diagram by `1..n`, each used once.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u8>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect())
            .map_err(|_| Error::InvalidTableau(format!("{rows:?}")))?;
        let n = shape.n();
        if n > MAX_DEGREE {
            return Err(Error::DegreeCap { n, cap: MAX_DEGREE });
        }
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidTableau(format!("{rows:?}")));
            }
            seen[x] = true;
        }
        let rows = rows.into_iter().map(|r| r.into_iter().map(|x| x as u8).collect()).collect();
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    /// Entry at 0-based row `r`, column `c`.
    #[inline]
    pub fn entry(&self, r: usize, c: usize) -> usize {
        self.rows[r][c] as usize
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    /// 0-based `(row, column)` of every entry, indexed by `entry - 1`.
    pub fn positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(0, 0); self.n()];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                pos[x as usize - 1] = (r, c);
            }
        }
        pos
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = (1..self.rows.len())
            .all(|r| (0..self.rows[r].len()).all(|c| self.rows[r - 1][c] < self.rows[r][c]));
        rows_ok && cols_ok
    }

    /// `pT`: every entry `x` replaced by `p(x)`.
    pub fn apply(&self, p: &Permutation) -> Result<Tableau> {
        if p.degree() != self.n() {
            return Err(Error::DegreeMismatch(p.degree(), self.n()));
        }
        let rows = self.rows.iter().map(|r| r.iter().map(|&x| p.apply(x as usize) as u8).collect()).collect();
        Ok(Tableau { shape: self.shape.clone(), rows })
    }

    /// The unique `s` with `s * other = self`.
    pub fn transition_from(&self, other: &Tableau) -> Result<Permutation> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch(self.shape.to_string(), other.shape.to_string()));
        }
        let mut images = vec![0usize; self.n()];
        for (r, row) in other.rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                images[x as usize - 1] = self.rows[r][c] as usize;
            }
        }
        Permutation::new(&images)
    }

    pub fn row_sets(&self) -> Vec<BTreeSet<usize>> {
        self.rows.iter().map(|r| r.iter().map(|&x| x as usize).collect()).collect()
    }

    pub fn column_sets(&self) -> Vec<BTreeSet<usize>> {
        (0..self.shape.row_len(0))
            .map(|c| self.rows.iter().filter(|r| r.len() > c).map(|r| r[c] as usize).collect())
            .collect()
    }

    /// Permutations preserving every row as a set.
    pub fn horizontal_group(&self) -> Result<Vec<Permutation>> {
        product_of_symmetric_groups(self.n(), &self.row_sets(), GROUP_CAP)
    }

    /// Permutations preserving every column as a set.
    pub fn vertical_group(&self) -> Result<Vec<Permutation>> {
        product_of_symmetric_groups(self.n(), &self.column_sets(), GROUP_CAP)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() > 9 { "," } else { "" };
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)).collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Tableau {
    type Err = Error;

    /// Rows joined by `/`: `"123/45"`.
    fn from_str(s: &str) -> Result<Self> {
        let rows: Option<Vec<Vec<usize>>> = s
            .trim()
            .split('/')
            .map(|r| {
                if r.contains(',') {
                    r.split(',').map(|t| t.trim().parse().ok()).collect()
                } else {
                    r.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
                }
            })
            .collect();
        Tableau::new(rows.ok_or_else(|| Error::InvalidTableau(s.to_string()))?)
    }
}

/// Standard tableaux of shape `shape` in lex order (row-major reading words compared lexicographically).
pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    let n = shape.n();
    let cells: Vec<(usize, usize)> =
        shape.parts().iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<u8>> = shape.parts().iter().map(|&len| vec![0; len]).collect();
    let mut used = vec![false; n + 1];
    let mut out = Vec::new();

    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<u8>>,
        used: &mut Vec<bool>,
        shape: &Partition,
        out: &mut Vec<Tableau>,
    ) {
        if idx == cells.len() {
            out.push(Tableau { shape: shape.clone(), rows: grid.clone() });
            return;
        }
        let (r, c) = cells[idx];
        let left = if c > 0 { grid[r][c - 1] } else { 0 };
        let above = if r > 0 { grid[r - 1][c] } else { 0 };
        let lo = left.max(above) as usize + 1;
        let n = used.len() - 1;
        for x in lo..=n {
            if used[x] {
                continue;
            }
            used[x] = true;
            grid[r][c] = x as u8;
            rec(idx + 1, cells, grid, used, shape, out);
            grid[r][c] = 0;
            used[x] = false;
        }
    }

    rec(0, &cells, &mut grid, &mut used, shape, &mut out);
    out
}

fn product_of_symmetric_groups(n: usize, blocks: &[BTreeSet<usize>], cap: usize) -> Result<Vec<Permutation>> {
    let size: u64 = blocks.iter().map(|b| factorial(b.len())).product();
    if size as usize > cap {
        return Err(Error::SizeCap { size: size as usize, cap });
    }
    let mut out = vec![Permutation::identity(n)];
    for block in blocks {
        if block.len() < 2 {
            continue;
        }
        let elems: Vec<usize> = block.iter().copied().collect();
        let local = crate::perm::enumerate(elems.len())?;
        let mut next = Vec::with_capacity(out.len() * local.len());
        for g in &out {
            for l in &local {
                let mut images: Vec<usize> = g.images().iter().map(|&v| v as usize).collect();
                for (k, &e) in elems.iter().enumerate() {
                    images[e - 1] = elems[l.apply(k + 1) - 1];
                }
                // blocks are disjoint, so g acts trivially on this block
                next.push(Permutation::new(&images)?);
            }
        }
        out = next;
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn strs<T: ToString>(v: &[T]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn partitions_in_decreasing_order() {
        assert_eq!(strs(&partitions(3)), ["3", "21", "111"]);
        assert_eq!(strs(&partitions(5)), ["5", "41", "32", "311", "221", "2111", "11111"]);
        assert_eq!(partitions(6).len(), 11);
    }

    #[test]
    fn partition_parsing() {
        assert!("123".parse::<Partition>().is_err());
        assert!("30".parse::<Partition>().is_err());
        assert_eq!(lam("221").n(), 5);
        assert_eq!(lam("321").conjugate(), lam("321"));
        assert_eq!(lam("41").conjugate(), lam("2111"));
    }

    #[test]
    fn dimensions() {
        assert_eq!(lam("32").dimension(), 5);
        assert_eq!(lam("22").dimension(), 2);
        assert_eq!(lam("321").dimension(), 16);
        assert_eq!(lam("3211").dimension(), 35);
        for n in 1..=7 {
            for l in partitions(n) {
                assert_eq!(l.dimension(), l.dimension_by_hooks(), "{l}");
            }
        }
    }

    #[test]
    fn standard_tableaux_examples() {
        assert_eq!(strs(&standard_tableaux(&lam("32"))), ["123/45", "124/35", "125/34", "134/25", "135/24"]);
        assert_eq!(strs(&standard_tableaux(&lam("21"))), ["12/3", "13/2"]);
        assert_eq!(standard_tableaux(&lam("4")).len(), 1);
    }

    #[test]
    fn apply_and_transition() {
        let t: Tableau = "123/45".parse().unwrap();
        let p: Permutation = "23451".parse().unwrap();
        assert_eq!(t.apply(&p).unwrap().to_string(), "234/51");
        let t1: Tableau = "12/3".parse().unwrap();
        assert_eq!(t1.apply(&"213".parse().unwrap()).unwrap().to_string(), "21/3");
        let t2: Tableau = "13/2".parse().unwrap();
        assert_eq!(t2.transition_from(&t1).unwrap().to_string(), "132");
        assert!(t1.transition_from(&t1).unwrap().is_identity());
        let bad: Tableau = "1/2/3".parse().unwrap();
        assert!(t1.transition_from(&bad).is_err());
        assert!(t1.apply(&"2134".parse().unwrap()).is_err());
    }

    #[test]
    fn rows_and_columns() {
        let t: Tableau = "123/45".parse().unwrap();
        let rows: Vec<Vec<usize>> = t.row_sets().into_iter().map(|s| s.into_iter().collect()).collect();
        assert_eq!(rows, vec![vec![1, 2, 3], vec![4, 5]]);
        let cols: Vec<Vec<usize>> = t.column_sets().into_iter().map(|s| s.into_iter().collect()).collect();
        assert_eq!(cols, vec![vec![1, 4], vec![2, 5], vec![3]]);
        let col: Tableau = "1/2/3".parse().unwrap();
        assert_eq!(col.column_sets().len(), 1);
    }

    #[test]
    fn row_and_column_groups() {
        let t: Tableau = "123".parse().unwrap();
        assert_eq!(strs(&t.vertical_group().unwrap()), ["123"]);
        let t: Tableau = "12/3".parse().unwrap();
        assert_eq!(strs(&t.horizontal_group().unwrap()), ["123", "213"]);
        assert_eq!(strs(&t.vertical_group().unwrap()), ["123", "321"]);
        let t: Tableau = "12/34".parse().unwrap();
        assert_eq!(t.horizontal_group().unwrap().len() * t.vertical_group().unwrap().len(), 16);
    }

    #[test]
    fn group_cap() {
        let t: Tableau = "12345678".parse().unwrap();
        assert!(matches!(t.horizontal_group(), Err(Error::SizeCap { .. })));
    }
}

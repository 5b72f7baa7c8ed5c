//! Young diagrams and the orbit calculus of classical Lie algebras.
//!
//! A diagram is stored by its row lengths. Columns, boxes and the
//! row/column unions are derived on demand. Indices in the accessors are
//! 1-based, so `r(1)` is the longest row and `c(1)` the first column.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("cannot parse diagram {0:?}")]
    Parse(String),
    #[error("size {size} is incompatible with family {family}")]
    IncompatibleSize { size: usize, family: AlgebraFamily },
    #[error("{diagram} is not a valid orbit of family {family}")]
    InvalidOrbit { diagram: YoungDiagram, family: AlgebraFamily },
}

/// The classical families of complex Lie algebras: `gl`, odd orthogonal,
/// symplectic, even orthogonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlgebraFamily {
    GL,
    B,
    C,
    D,
}

impl fmt::Display for AlgebraFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AlgebraFamily::GL => "GL",
            AlgebraFamily::B => "B",
            AlgebraFamily::C => "C",
            AlgebraFamily::D => "D",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct YoungDiagram {
    rows: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnionMode {
    Rows,
    Cols,
}

impl YoungDiagram {
    pub fn empty() -> Self {
        Self { rows: Vec::new() }
    }

    /// Builds a diagram from arbitrary row lengths: zeros are dropped and the
    /// rest sorted decreasingly.
    pub fn from_rows(rows: impl IntoIterator<Item = usize>) -> Self {
        let mut rows: Vec<usize> = rows.into_iter().filter(|&r| r > 0).collect();
        rows.sort_unstable_by(|a, b| b.cmp(a));
        Self { rows }
    }

    pub fn from_cols(cols: impl IntoIterator<Item = usize>) -> Self {
        Self::from_rows(cols).transpose()
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    /// Length of row `i` (1-based), zero beyond the diagram.
    pub fn r(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.rows.get(i - 1).copied().unwrap_or(0)
    }

    /// Length of column `j` (1-based), zero beyond the diagram.
    pub fn c(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.rows.iter().take_while(|&&r| r >= j).count()
    }

    pub fn cols(&self) -> Vec<usize> {
        let width = self.r(1);
        (1..=width).map(|j| self.c(j)).collect()
    }

    pub fn contains_box(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && self.r(i) >= j
    }

    /// Boxes `(row, col)` in row-reading order, 1-based.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
    }

    pub fn contains(&self, other: &YoungDiagram) -> bool {
        other.len() <= self.len() && other.rows.iter().zip(&self.rows).all(|(a, b)| a <= b)
    }

    pub fn transpose(&self) -> Self {
        Self { rows: self.cols() }
    }

    pub fn union(&self, other: &YoungDiagram, mode: UnionMode) -> Self {
        match mode {
            UnionMode::Rows => Self::from_rows(self.rows.iter().chain(&other.rows).copied()),
            UnionMode::Cols => Self::from_cols(self.cols().into_iter().chain(other.cols())),
        }
    }

    /// Multiplicity of the row length `len`.
    pub fn multiplicity(&self, len: usize) -> usize {
        self.rows.iter().filter(|&&r| r == len).count()
    }

    /// Removes the first row.
    pub fn drop_first_row(&self) -> Self {
        Self { rows: self.rows.iter().skip(1).copied().collect() }
    }

    /// Removes the first column.
    pub fn drop_first_col(&self) -> Self {
        Self::from_rows(self.rows.iter().map(|r| r - 1))
    }

    /// Dominance order; `None` when the sizes differ or the two are incomparable.
    pub fn dominance_cmp(&self, other: &YoungDiagram) -> Option<Ordering> {
        if self.size() != other.size() {
            return None;
        }
        let (mut a, mut b) = (0usize, 0usize);
        let (mut le, mut ge) = (true, true);
        for i in 1..=self.len().max(other.len()) {
            a += self.r(i);
            b += other.r(i);
            le &= a <= b;
            ge &= a >= b;
        }
        match (le, ge) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Less),
            (false, true) => Some(Ordering::Greater),
            (false, false) => None,
        }
    }

    pub fn dominated_by(&self, other: &YoungDiagram) -> bool {
        matches!(self.dominance_cmp(other), Some(Ordering::Less | Ordering::Equal))
    }

    /// Σ (i-1) r_i, the lowest degree of the corresponding Specht module.
    pub fn n_invariant(&self) -> usize {
        self.rows.iter().enumerate().map(|(i, r)| i * r).sum()
    }

    pub fn hook_dimension(&self) -> u128 {
        let n = self.size();
        let mut num: u128 = (1..=n as u128).product();
        let mut hooks: u128 = 1;
        for (i, j) in self.boxes() {
            let arm = self.r(i) - j;
            let leg = self.c(j) - i;
            hooks *= (arm + leg + 1) as u128;
        }
        num /= hooks;
        num
    }

    pub fn is_valid_orbit(&self, fam: AlgebraFamily) -> bool {
        let bad_parity = match fam {
            AlgebraFamily::GL => return true,
            AlgebraFamily::B | AlgebraFamily::D => 0,
            AlgebraFamily::C => 1,
        };
        let mut i = 0;
        while i < self.rows.len() {
            let len = self.rows[i];
            let m = self.multiplicity(len);
            if len % 2 == bad_parity && m % 2 == 1 {
                return false;
            }
            i += m;
        }
        true
    }

    fn check_size(&self, fam: AlgebraFamily) -> Result<(), DiagramError> {
        let size = self.size();
        let ok = match fam {
            AlgebraFamily::GL => true,
            AlgebraFamily::B => size % 2 == 1,
            AlgebraFamily::C | AlgebraFamily::D => size.is_multiple_of(2),
        };
        if ok {
            Ok(())
        } else {
            Err(DiagramError::IncompatibleSize { size, family: fam })
        }
    }

    /// The largest diagram in dominance order below `self` that is a valid
    /// orbit of `fam`.
    pub fn collapse(&self, fam: AlgebraFamily) -> Result<Self, DiagramError> {
        self.check_size(fam)?;
        let bad_parity = match fam {
            AlgebraFamily::GL => return Ok(self.clone()),
            AlgebraFamily::B | AlgebraFamily::D => 0,
            AlgebraFamily::C => 1,
        };
        let mut rows = self.rows.clone();
        loop {
            // largest offending part: parity `bad_parity`, odd multiplicity
            let offender = rows
                .iter()
                .copied()
                .filter(|&q| q % 2 == bad_parity && rows.iter().filter(|&&x| x == q).count() % 2 == 1)
                .max();
            let Some(q) = offender else { break };
            let last = rows.iter().rposition(|&x| x == q).unwrap();
            rows[last] -= 1;
            match rows.iter().position(|&x| x < q - 1) {
                Some(k) => rows[k] += 1,
                None => rows.push(1),
            }
            rows.retain(|&x| x > 0);
            rows.sort_unstable_by(|a, b| b.cmp(a));
        }
        Ok(Self { rows })
    }

    /// Complex dimension of the nilpotent orbit with this Jordan type.
    pub fn orbit_dim(&self, fam: AlgebraFamily) -> Result<usize, DiagramError> {
        if !self.is_valid_orbit(fam) {
            return Err(DiagramError::InvalidOrbit { diagram: self.clone(), family: fam });
        }
        let n = self.size();
        let col_sq: usize = self.cols().iter().map(|c| c * c).sum();
        let odd_rows = self.rows.iter().filter(|&&r| r % 2 == 1).count();
        Ok(match fam {
            AlgebraFamily::GL => n * n - col_sq,
            AlgebraFamily::B | AlgebraFamily::D => (n * n - n) / 2 - (col_sq - odd_rows) / 2,
            AlgebraFamily::C => (n * n + n) / 2 - (col_sq + odd_rows) / 2,
        })
    }

    /// Adds one box to the first row (`+`) or removes one from the last (`-`).
    pub fn plus_first(&self) -> Self {
        let mut rows = self.rows.clone();
        match rows.first_mut() {
            Some(r) => *r += 1,
            None => rows.push(1),
        }
        Self { rows }
    }

    pub fn minus_last(&self) -> Self {
        let mut rows = self.rows.clone();
        if let Some(r) = rows.last_mut() {
            *r -= 1;
        }
        Self::from_rows(rows)
    }
}

impl fmt::Display for YoungDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for YoungDiagram {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if t.is_empty() || t == "0" {
            return Ok(Self::empty());
        }
        let mut rows = Vec::new();
        for part in t.split(',') {
            let v: usize = part.trim().parse().map_err(|_| DiagramError::Parse(s.to_string()))?;
            rows.push(v);
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(DiagramError::Parse(s.to_string()));
        }
        Ok(Self::from_rows(rows))
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<YoungDiagram> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
        if rem == 0 {
            out.push(YoungDiagram { rows: cur.clone() });
            return;
        }
        for k in (1..=rem.min(max)).rev() {
            cur.push(k);
            go(rem - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All diagrams contained in `outer` (including empty and `outer` itself).
pub fn subdiagrams(outer: &YoungDiagram) -> Vec<YoungDiagram> {
    fn go(outer: &YoungDiagram, i: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<YoungDiagram>) {
        if i > outer.len() {
            out.push(YoungDiagram::from_rows(cur.iter().copied()));
            return;
        }
        let hi = outer.r(i).min(cap);
        for k in 0..=hi {
            cur.push(k);
            go(outer, i + 1, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(outer, 1, usize::MAX, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> YoungDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(d("").transpose(), d(""));
        assert_eq!(d("3,1,1").transpose(), d("3,1,1"));
        assert_eq!(d("4,2").transpose(), d("2,2,1,1"));
    }

    #[test]
    fn unions() {
        assert_eq!(d("2,1").union(&d(""), UnionMode::Rows), d("2,1"));
        assert_eq!(d("3,1").union(&d("2,2"), UnionMode::Rows), d("3,2,2,1"));
        assert_eq!(d("1,1").union(&d("1"), UnionMode::Cols), d("2,1"));
    }

    #[test]
    fn collapse_examples() {
        for n in 1..=4 {
            let mut rows = vec![2];
            rows.extend(std::iter::repeat_n(1, 2 * n - 1));
            let src = YoungDiagram::from_rows(rows);
            assert_eq!(src.collapse(AlgebraFamily::B).unwrap(), YoungDiagram::from_rows(vec![1; 2 * n + 1]));
            let reg = YoungDiagram::from_rows([2 * n + 1]);
            assert_eq!(reg.collapse(AlgebraFamily::B).unwrap(), reg);
        }
        assert_eq!(d("3,1").collapse(AlgebraFamily::C).unwrap(), d("2,2"));
        assert!(d("3,1").collapse(AlgebraFamily::B).is_err());
    }

    #[test]
    fn validity_and_dimension() {
        assert!(d("3,1,1").is_valid_orbit(AlgebraFamily::B));
        assert!(!d("3,1").is_valid_orbit(AlgebraFamily::C));
        assert!(d("").is_valid_orbit(AlgebraFamily::D));
        assert_eq!(d("2,2").orbit_dim(AlgebraFamily::C).unwrap(), 6);
        for n in 1..=3 {
            let reg = YoungDiagram::from_rows([2 * n + 1]);
            assert_eq!(reg.orbit_dim(AlgebraFamily::B).unwrap(), 2 * n * n);
        }
        for fam in [AlgebraFamily::GL, AlgebraFamily::B, AlgebraFamily::C, AlgebraFamily::D] {
            assert_eq!(YoungDiagram::from_rows(vec![1; 6]).orbit_dim(fam).unwrap(), 0);
        }
    }

    #[test]
    fn parse_round_trip() {
        assert_eq!(d("0"), YoungDiagram::empty());
        assert_eq!(d("5,3,3,3,3,1,1").to_string(), "[5,3,3,3,3,1,1]");
        assert!("3,4".parse::<YoungDiagram>().is_err());
        assert!("x".parse::<YoungDiagram>().is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
        assert_eq!(subdiagrams(&d("2,1")).len(), 5);
    }
}

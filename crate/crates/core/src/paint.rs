//! Paintings, painted bipartitions and their enumeration.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cells::{cell_diagrams, tau_bad_diagrams, CellError, PPSubset};
use crate::diagram::{subdiagrams, YoungDiagram};
use crate::parity::{GroupForm, Label};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PaintError {
    #[error("cannot parse painting {0:?}")]
    Parse(String),
    #[error("invalid painted bipartition {0}")]
    Invalid(String),
    #[error("label {0} has no painted bipartitions")]
    WrongLabel(Label),
    #[error(transparent)]
    Cell(#[from] CellError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Symbol {
    Dot,
    S,
    R,
    C,
    D,
}

impl Symbol {
    pub const ALL: [Symbol; 5] = [Symbol::Dot, Symbol::S, Symbol::R, Symbol::C, Symbol::D];

    pub fn as_char(self) -> char {
        match self {
            Symbol::Dot => '*',
            Symbol::S => 's',
            Symbol::R => 'r',
            Symbol::C => 'c',
            Symbol::D => 'd',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            '*' | '•' => Some(Symbol::Dot),
            's' => Some(Symbol::S),
            'r' => Some(Symbol::R),
            'c' => Some(Symbol::C),
            'd' => Some(Symbol::D),
            _ => None,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A set of symbols, used as a painting alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Alphabet(u8);

impl Alphabet {
    pub fn of(symbols: &[Symbol]) -> Self {
        Self(symbols.iter().fold(0, |m, s| m | (1 << s.index())))
    }

    pub fn contains(self, s: Symbol) -> bool {
        self.0 & (1 << s.index()) != 0
    }
}

/// A diagram with one symbol per box, stored row by row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Painting {
    rows: Vec<Vec<Symbol>>,
}

impl Painting {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a painting from rows; fails unless row lengths weakly decrease.
    pub fn from_rows(rows: Vec<Vec<Symbol>>) -> Option<Self> {
        let mut rows = rows;
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        rows.windows(2).all(|w| w[0].len() >= w[1].len()).then_some(Self { rows })
    }

    /// Paints every box of `shape` with `f(i, j)`; `None` if some box is left unpainted.
    pub fn from_fn(shape: &YoungDiagram, mut f: impl FnMut(usize, usize) -> Option<Symbol>) -> Option<Self> {
        let rows = (1..=shape.len())
            .map(|i| (1..=shape.r(i)).map(|j| f(i, j)).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()?;
        Some(Self { rows })
    }

    pub fn shape(&self) -> YoungDiagram {
        YoungDiagram::from_rows(self.rows.iter().map(Vec::len))
    }

    pub fn rows(&self) -> &[Vec<Symbol>] {
        &self.rows
    }

    /// Symbol at `(row, col)`, 1-based; `None` outside the diagram.
    pub fn get(&self, i: usize, j: usize) -> Option<Symbol> {
        if i == 0 || j == 0 {
            return None;
        }
        self.rows.get(i - 1).and_then(|r| r.get(j - 1)).copied()
    }

    pub fn set(&mut self, i: usize, j: usize, s: Symbol) {
        self.rows[i - 1][j - 1] = s;
    }

    pub fn count(&self, s: Symbol) -> usize {
        self.rows.iter().flatten().filter(|&&x| x == s).count()
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.rows.iter().flatten().copied()
    }

    /// Boxes painted with `•`, as a diagram.
    pub fn dot_diagram(&self) -> YoungDiagram {
        YoungDiagram::from_rows(self.rows.iter().map(|r| r.iter().filter(|&&s| s == Symbol::Dot).count()))
    }

    /// Column `j` (1-based) read top to bottom.
    pub fn column(&self, j: usize) -> Vec<Symbol> {
        self.rows.iter().filter_map(|r| r.get(j - 1).copied()).collect()
    }

    pub fn uses_only(&self, alphabet: Alphabet) -> bool {
        self.symbols().all(|s| alphabet.contains(s))
    }

    /// Removes the first column.
    pub fn drop_first_col(&self) -> Self {
        let rows = self.rows.iter().map(|r| r.iter().skip(1).copied().collect()).collect();
        Self::from_rows(rows).expect("dropping a column keeps rows ordered")
    }

    /// The painting restricted to a smaller diagram.
    pub fn restrict(&self, shape: &YoungDiagram) -> Self {
        let rows = (1..=shape.len()).map(|i| self.rows[i - 1][..shape.r(i)].to_vec()).collect();
        Self { rows }
    }

    /// Nested-subdiagram condition plus at most one `s`/`r` per row and at
    /// most one `c`/`d` per column.
    pub fn is_valid(&self) -> bool {
        for row in &self.rows {
            if row.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
            if row.iter().filter(|&&s| s == Symbol::S).count() > 1
                || row.iter().filter(|&&s| s == Symbol::R).count() > 1
            {
                return false;
            }
        }
        // for each threshold the region below it must have decreasing row lengths
        for t in Symbol::ALL {
            let lens: Vec<usize> = self.rows.iter().map(|r| r.iter().filter(|&&s| s <= t).count()).collect();
            if lens.windows(2).any(|w| w[0] < w[1]) {
                return false;
            }
        }
        let width = self.rows.first().map_or(0, Vec::len);
        for j in 1..=width {
            let col = self.column(j);
            if col.iter().filter(|&&s| s == Symbol::C).count() > 1
                || col.iter().filter(|&&s| s == Symbol::D).count() > 1
            {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Painting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.rows.iter().map(|r| r.iter().map(|s| s.as_char()).collect()).collect();
        f.write_str(&rows.join("/"))
    }
}

impl FromStr for Painting {
    type Err = PaintError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() {
            return Ok(Self::empty());
        }
        let rows = t
            .split('/')
            .map(|row| row.trim().chars().map(Symbol::from_char).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| PaintError::Parse(s.to_string()))?;
        Self::from_rows(rows).ok_or_else(|| PaintError::Parse(s.to_string()))
    }
}

pub fn validate_painting(p: &Painting) -> bool {
    p.is_valid()
}

/// Diagrams `ν ⊇ λ` inside `outer` with `ν/λ` a vertical strip.
fn vertical_strips(lambda: &[usize], outer: &YoungDiagram) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(outer.len());
    fn go(i: usize, lambda: &[usize], outer: &YoungDiagram, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == outer.len() {
            out.push(cur.clone());
            return;
        }
        let base = lambda.get(i).copied().unwrap_or(0);
        for add in 0..=1 {
            let v = base + add;
            if v > outer.r(i + 1) || (i > 0 && v > cur[i - 1]) {
                continue;
            }
            cur.push(v);
            go(i + 1, lambda, outer, cur, out);
            cur.pop();
        }
    }
    go(0, lambda, outer, &mut cur, &mut out);
    out
}

/// Diagrams `ν ⊇ λ` inside `outer` with `ν/λ` a horizontal strip.
fn horizontal_strips(lambda: &[usize], outer: &YoungDiagram) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(i: usize, lambda: &[usize], outer: &YoungDiagram, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == outer.len() {
            out.push(cur.clone());
            return;
        }
        let base = lambda.get(i).copied().unwrap_or(0);
        let cap = if i == 0 { usize::MAX } else { lambda.get(i - 1).copied().unwrap_or(0) };
        let hi = outer.r(i + 1).min(cap);
        for v in base..=hi {
            cur.push(v);
            go(i + 1, lambda, outer, cur, out);
            cur.pop();
        }
    }
    go(0, lambda, outer, &mut cur, &mut out);
    out
}

/// All valid paintings of `shape` over `alphabet` whose `•` boxes are exactly `dots`.
pub fn paintings_with_dots(shape: &YoungDiagram, dots: &YoungDiagram, alphabet: Alphabet) -> Vec<Painting> {
    if !shape.contains(dots) || (!alphabet.contains(Symbol::Dot) && !dots.is_empty()) {
        return Vec::new();
    }
    let n = shape.len();
    let start: Vec<usize> = (1..=n).map(|i| dots.r(i)).collect();
    // chain of nested row-length vectors, one per symbol s, r, c, d
    let mut chains: Vec<Vec<Vec<usize>>> = vec![vec![start]];
    for sym in [Symbol::S, Symbol::R, Symbol::C, Symbol::D] {
        let mut next = Vec::new();
        for chain in &chains {
            let last = chain.last().unwrap();
            let options = if !alphabet.contains(sym) {
                vec![last.clone()]
            } else if matches!(sym, Symbol::S | Symbol::R) {
                vertical_strips(last, shape)
            } else {
                horizontal_strips(last, shape)
            };
            for nu in options {
                let mut c = chain.clone();
                c.push(nu);
                next.push(c);
            }
        }
        chains = next;
    }
    chains
        .into_iter()
        .filter(|chain| (1..=n).all(|i| chain[4][i - 1] == shape.r(i)))
        .map(|chain| {
            let rows = (0..n)
                .map(|i| {
                    let mut row = Vec::with_capacity(shape.r(i + 1));
                    let mut prev = 0;
                    for (k, sym) in Symbol::ALL.iter().enumerate() {
                        let upto = chain[k][i];
                        row.extend(std::iter::repeat_n(*sym, upto - prev));
                        prev = upto;
                    }
                    row
                })
                .collect();
            Painting { rows }
        })
        .collect()
}

/// All valid paintings of `shape` over `alphabet`, in canonical order.
pub fn paintings(shape: &YoungDiagram, alphabet: Alphabet) -> Vec<Painting> {
    let dot_options = if alphabet.contains(Symbol::Dot) { subdiagrams(shape) } else { vec![YoungDiagram::empty()] };
    dot_options.iter().flat_map(|dots| paintings_with_dots(shape, dots, alphabet)).collect()
}

/// Paintings of `d^t` of type `A^R`, `A^H`, `A` or `Ã`.
pub fn enumerate_pap(star: Label, d: &YoungDiagram) -> Result<Vec<Painting>, PaintError> {
    let shape = d.transpose();
    let (alphabet, even_cols) = match star {
        Label::AR => (Alphabet::of(&[Symbol::Dot, Symbol::C, Symbol::D]), true),
        Label::AH => (Alphabet::of(&[Symbol::Dot]), true),
        Label::A | Label::At => (Alphabet::of(&[Symbol::Dot, Symbol::S, Symbol::R]), false),
        l => return Err(PaintError::WrongLabel(l)),
    };
    let dot_ok = |dots: &YoungDiagram| {
        if even_cols {
            dots.cols().iter().all(|c| c % 2 == 0)
        } else {
            dots.rows().iter().all(|r| r % 2 == 0)
        }
    };
    Ok(subdiagrams(&shape)
        .into_iter()
        .filter(|dots| dot_ok(dots))
        .flat_map(|dots| paintings_with_dots(&shape, &dots, alphabet))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature {
    pub p: usize,
    pub q: usize,
}

pub fn pap_signature(p: &Painting) -> Signature {
    let dots = p.count(Symbol::Dot) / 2;
    Signature { p: dots + p.count(Symbol::R), q: dots + p.count(Symbol::S) }
}

/// The tag of a painted bipartition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Gamma {
    BPlus,
    BMinus,
    C,
    D,
    Ct,
    Cstar,
    Dstar,
}

impl Gamma {
    pub fn star(self) -> Label {
        match self {
            Gamma::BPlus | Gamma::BMinus => Label::B,
            Gamma::C => Label::C,
            Gamma::D => Label::D,
            Gamma::Ct => Label::Ct,
            Gamma::Cstar => Label::Cstar,
            Gamma::Dstar => Label::Dstar,
        }
    }

    /// Tags over a label: both `B±` for `B`, otherwise the label itself.
    pub fn over(star: Label) -> Result<Vec<Gamma>, PaintError> {
        Ok(match star.real_pattern() {
            Label::B => vec![Gamma::BPlus, Gamma::BMinus],
            Label::C => vec![Gamma::C],
            Label::D => vec![Gamma::D],
            Label::Ct => vec![Gamma::Ct],
            Label::Cstar => vec![Gamma::Cstar],
            Label::Dstar => vec![Gamma::Dstar],
            l => return Err(PaintError::WrongLabel(l)),
        })
    }

    pub fn alphabets(self) -> (Alphabet, Alphabet) {
        use Symbol::*;
        let (p, q): (&[Symbol], &[Symbol]) = match self {
            Gamma::BPlus | Gamma::BMinus => (&[Dot, C], &[Dot, S, R, D]),
            Gamma::C => (&[Dot, R, C, D], &[Dot, S]),
            Gamma::D => (&[Dot, S, R, C, D], &[Dot]),
            Gamma::Ct => (&[Dot, S, C], &[Dot, R, D]),
            Gamma::Cstar => (&[Dot], &[Dot, S, R]),
            Gamma::Dstar => (&[Dot, S], &[Dot, R]),
        };
        (Alphabet::of(p), Alphabet::of(q))
    }

    pub fn name(self) -> &'static str {
        match self {
            Gamma::BPlus => "B+",
            Gamma::BMinus => "B-",
            Gamma::C => "C",
            Gamma::D => "D",
            Gamma::Ct => "Ct",
            Gamma::Cstar => "Cstar",
            Gamma::Dstar => "Dstar",
        }
    }
}

impl fmt::Display for Gamma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Gamma {
    type Err = PaintError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "B+" | "B⁺" | "Bplus" => Ok(Gamma::BPlus),
            "B-" | "B⁻" | "Bminus" => Ok(Gamma::BMinus),
            "C" => Ok(Gamma::C),
            "D" => Ok(Gamma::D),
            "Ct" | "C~" => Ok(Gamma::Ct),
            "Cstar" | "C*" => Ok(Gamma::Cstar),
            "Dstar" | "D*" => Ok(Gamma::Dstar),
            other => Err(PaintError::Parse(other.to_string())),
        }
    }
}

/// A painted bipartition `(ι, P) × (ȷ, Q) × γ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PaintedBipartition {
    pub p: Painting,
    pub q: Painting,
    pub gamma: Gamma,
}

impl PaintedBipartition {
    pub fn new(p: Painting, q: Painting, gamma: Gamma) -> Self {
        Self { p, q, gamma }
    }

    pub fn star(&self) -> Label {
        self.gamma.star()
    }

    pub fn iota(&self) -> YoungDiagram {
        self.p.shape()
    }

    pub fn jmath(&self) -> YoungDiagram {
        self.q.shape()
    }

    pub fn size(&self) -> usize {
        self.iota().size() + self.jmath().size()
    }

    pub fn is_valid(&self) -> bool {
        let (ap, aq) = self.gamma.alphabets();
        self.p.is_valid()
            && self.q.is_valid()
            && self.p.uses_only(ap)
            && self.q.uses_only(aq)
            && self.p.dot_diagram() == self.q.dot_diagram()
    }

    pub fn signature(&self) -> Signature {
        match self.star() {
            Label::B | Label::D | Label::Cstar => {
                let count = |s: Symbol| self.p.count(s) + self.q.count(s);
                let common = count(Symbol::Dot) + count(Symbol::C) + count(Symbol::D);
                Signature {
                    p: common + 2 * count(Symbol::R) + usize::from(self.gamma == Gamma::BPlus),
                    q: common + 2 * count(Symbol::S) + usize::from(self.gamma == Gamma::BMinus),
                }
            }
            _ => Signature { p: self.size(), q: self.size() },
        }
    }

    pub fn group(&self) -> GroupForm {
        let sig = self.signature();
        match self.gamma {
            Gamma::BPlus | Gamma::BMinus => GroupForm::with_signature(Label::B, sig.p, sig.q),
            Gamma::D => GroupForm::with_signature(Label::D, sig.p, sig.q),
            Gamma::Cstar => GroupForm::with_signature(Label::Cstar, sig.p, sig.q),
            Gamma::C => GroupForm::with_rank(Label::C, self.size()),
            Gamma::Ct => GroupForm::with_rank(Label::Ct, self.size()),
            Gamma::Dstar => GroupForm::with_rank(Label::Dstar, self.size()),
        }
    }
}

impl fmt::Display for PaintedBipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}|{}", self.p, self.q, self.gamma)
    }
}

impl FromStr for PaintedBipartition {
    type Err = PaintError;

    /// Parses `"P|Q|γ"`, e.g. `"**/*s/*s/rc|**/*/*|D"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split('|').collect();
        let [p, q, g] = parts.as_slice() else { return Err(PaintError::Parse(s.to_string())) };
        Ok(Self::new(p.parse()?, q.parse()?, g.parse()?))
    }
}

pub fn validate_pbp(t: &PaintedBipartition) -> bool {
    t.is_valid()
}

pub fn pbp_signature(t: &PaintedBipartition) -> Signature {
    t.signature()
}

pub fn group_of(t: &PaintedBipartition) -> GroupForm {
    t.group()
}

/// All painted bipartitions on a shape pair with a given tag.
pub fn pbps_on_shape(iota: &YoungDiagram, jmath: &YoungDiagram, gamma: Gamma) -> Vec<PaintedBipartition> {
    let (ap, aq) = gamma.alphabets();
    let mut out = Vec::new();
    for dots in subdiagrams(iota) {
        if !jmath.contains(&dots) {
            continue;
        }
        let ps = paintings_with_dots(iota, &dots, ap);
        if ps.is_empty() {
            continue;
        }
        let qs = paintings_with_dots(jmath, &dots, aq);
        for p in &ps {
            for q in &qs {
                out.push(PaintedBipartition::new(p.clone(), q.clone(), gamma));
            }
        }
    }
    out
}

/// `PBP_⋆(Ǒ, ℘)` for a good-parity orbit.
pub fn enumerate_pbp(star: Label, d_good: &YoungDiagram, wp: &PPSubset) -> Result<Vec<PaintedBipartition>, PaintError> {
    let cd = cell_diagrams(star, d_good, wp)?;
    Ok(Gamma::over(star)?.into_iter().flat_map(|g| pbps_on_shape(&cd.iota, &cd.jmath, g)).collect())
}

/// `PBP_G(Ǒ, ℘)`: the elements attached to one real form.
pub fn enumerate_pbp_for_group(
    group: &GroupForm,
    d_good: &YoungDiagram,
    wp: &PPSubset,
) -> Result<Vec<PaintedBipartition>, PaintError> {
    Ok(enumerate_pbp(group.label, d_good, wp)?.into_iter().filter(|t| t.group() == *group).collect())
}

/// `PBP*(Ǒ_b)`: triples on `(τ_L,b, τ_R,b)` with the restricted alphabets.
pub fn enumerate_pbp_bad(star: Label, d_b: &YoungDiagram) -> Result<Vec<(Painting, Painting)>, PaintError> {
    let (l, r) = tau_bad_diagrams(star, d_b)?;
    use Symbol::*;
    let (ap, aq): (&[Symbol], &[Symbol]) = match star.real_pattern() {
        Label::B | Label::Ct => (&[Dot, C, D], &[Dot]),
        Label::C | Label::D => (&[Dot, D], &[Dot, C]),
        _ => (&[Dot], &[Dot]),
    };
    let (ap, aq) = (Alphabet::of(ap), Alphabet::of(aq));
    let mut out = Vec::new();
    for dots in subdiagrams(&l) {
        if !r.contains(&dots) {
            continue;
        }
        for p in paintings_with_dots(&l, &dots, ap) {
            for q in paintings_with_dots(&r, &dots, aq) {
                out.push((p.clone(), q));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::partitions;
    use std::collections::BTreeSet;

    fn d(s: &str) -> YoungDiagram {
        s.parse().unwrap()
    }

    fn pt(s: &str) -> Painting {
        s.parse().unwrap()
    }

    /// Literal check: removing `{d}`, `{c,d}`, `{r,c,d}`, `{s,r,c,d}` leaves
    /// a Young diagram each time, plus the row and column caps.
    fn literal_valid(p: &Painting) -> bool {
        let removals: [&[Symbol]; 4] = [
            &[Symbol::D],
            &[Symbol::C, Symbol::D],
            &[Symbol::R, Symbol::C, Symbol::D],
            &[Symbol::S, Symbol::R, Symbol::C, Symbol::D],
        ];
        for removed in removals {
            let boxes: BTreeSet<(usize, usize)> = p
                .rows()
                .iter()
                .enumerate()
                .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, s)| ((i + 1, j + 1), *s)))
                .filter(|(_, s)| !removed.contains(s))
                .map(|(b, _)| b)
                .collect();
            let closed = boxes
                .iter()
                .all(|&(i, j)| (i == 1 || boxes.contains(&(i - 1, j))) && (j == 1 || boxes.contains(&(i, j - 1))));
            if !closed {
                return false;
            }
        }
        let rows_ok = p.rows().iter().all(|row| {
            row.iter().filter(|&&s| s == Symbol::S).count() <= 1 && row.iter().filter(|&&s| s == Symbol::R).count() <= 1
        });
        let width = p.rows().first().map_or(0, Vec::len);
        let cols_ok = (1..=width).all(|j| {
            let col = p.column(j);
            col.iter().filter(|&&s| s == Symbol::C).count() <= 1 && col.iter().filter(|&&s| s == Symbol::D).count() <= 1
        });
        rows_ok && cols_ok
    }

    fn all_fillings(shape: &YoungDiagram) -> Vec<Painting> {
        let boxes: Vec<(usize, usize)> = shape.boxes().collect();
        let total = 5usize.pow(boxes.len() as u32);
        (0..total)
            .map(|mut code| {
                let mut rows: Vec<Vec<Symbol>> = shape.rows().iter().map(|&r| vec![Symbol::Dot; r]).collect();
                for &(i, j) in &boxes {
                    rows[i - 1][j - 1] = Symbol::ALL[code % 5];
                    code /= 5;
                }
                Painting { rows }
            })
            .collect()
    }

    #[test]
    fn validity_examples() {
        assert!(pt("****r/*rd/sr/dd").is_valid());
        assert!(!pt("dc").is_valid());
        assert!(!pt("cd/c").is_valid());
        assert!(!pt("*ssrd/rc").is_valid());
    }

    #[test]
    fn nesting_matches_literal_removals() {
        for n in 0..=7 {
            for shape in partitions(n) {
                let fills = all_fillings(&shape);
                let valid: BTreeSet<Painting> = fills.iter().filter(|p| literal_valid(p)).cloned().collect();
                for p in &fills {
                    assert_eq!(p.is_valid(), valid.contains(p), "{p}");
                }
                let all = Alphabet::of(&Symbol::ALL);
                let enumerated: BTreeSet<Painting> = paintings(&shape, all).into_iter().collect();
                assert_eq!(enumerated, valid, "shape {shape}");
            }
        }
    }

    #[test]
    fn pap_examples() {
        assert_eq!(enumerate_pap(Label::AR, &d("2,1")).unwrap().len(), 4);
        assert_eq!(enumerate_pap(Label::AH, &d("2,2")).unwrap().len(), 1);
        let a: Vec<String> = enumerate_pap(Label::A, &d("2")).unwrap().iter().map(|p| p.to_string()).collect();
        assert_eq!(a, vec!["r/r", "s/r", "s/s"]);
    }

    #[test]
    fn pap_signature_examples() {
        assert_eq!(pap_signature(&pt("****r/**/sr/s/r")), Signature { p: 6, q: 5 });
        assert_eq!(pap_signature(&pt("**/**")), Signature { p: 2, q: 2 });
        assert_eq!(pap_signature(&pt("s/r")), Signature { p: 1, q: 1 });
    }

    #[test]
    fn sp4_example() {
        let all = enumerate_pbp(Label::C, &d("3,1,1"), &PPSubset::empty()).unwrap();
        let s: Vec<String> = all.iter().map(|t| t.to_string()).collect();
        assert_eq!(s, vec!["d|s|C", "c|s|C", "r|s|C", "*|*|C"]);
        let all = enumerate_pbp(Label::C, &d("3,1,1"), &PPSubset::from_firsts([1])).unwrap();
        let s: Vec<String> = all.iter().map(|t| t.to_string()).collect();
        assert_eq!(s, vec!["c/d||C", "r/d||C", "r/c||C", "r/r||C"]);
        assert_eq!(enumerate_pbp(Label::Ct, &d("4,2"), &PPSubset::empty()).unwrap().len(), 6);
    }

    #[test]
    fn b_example_signature() {
        let t: PaintedBipartition = "||B+".parse().unwrap();
        assert!(t.is_valid());
        let mut t: PaintedBipartition = "**/*/c|**d/*/d|C".parse().unwrap();
        assert!(!t.is_valid());
        t.gamma = Gamma::BPlus;
        assert!(t.is_valid());
        assert_eq!(t.group().to_string(), "SO(10,9)");
        assert!("||Cstar".parse::<PaintedBipartition>().unwrap().is_valid());
    }

    #[test]
    fn bad_enumeration() {
        assert_eq!(enumerate_pbp_bad(Label::Cstar, &d("2,2")).unwrap().len(), 1);
        assert_eq!(enumerate_pbp_bad(Label::B, &d("1,1")).unwrap().len(), 2);
        assert_eq!(enumerate_pbp_bad(Label::D, &d("")).unwrap().len(), 1);
    }
}

//! ⋆-pairs, primitive pairs, the cell diagrams `(ι_℘, ȷ_℘)` and Lusztig left cells.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::YoungDiagram;
use crate::parity::{bad_part_type, split_parity, CellType, Label, OrbitSpec, Variant};
use crate::weyl::{BipartitionIrrep, WIrrep, WPrimeIrrep};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CellError {
    #[error("{wp} is not a set of primitive pairs of {diagram} for {star}")]
    BadSubset { star: Label, diagram: YoungDiagram, wp: PPSubset },
    #[error("{diagram} is not a bad-parity diagram with even multiplicities for {star}")]
    BadParityViolation { star: Label, diagram: YoungDiagram },
    #[error("label {0} has no cell diagrams")]
    WrongLabel(Label),
    #[error("cannot parse pair set {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PairClass {
    Vacant,
    Balanced,
    Tailed,
    Primitive,
    NotAPair,
}

/// A set of ⋆-pairs `(i, i+1)`, stored by their first index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PPSubset(pub BTreeSet<usize>);

impl PPSubset {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_firsts(firsts: impl IntoIterator<Item = usize>) -> Self {
        Self(firsts.into_iter().collect())
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(&i)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &PPSubset) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.0.iter().map(|&i| (i, i + 1)).collect()
    }

    pub fn complement_in(&self, pp: &PPSubset) -> Self {
        Self(pp.0.difference(&self.0).copied().collect())
    }

    /// All subsets, ordered by size and then lexicographically.
    pub fn subsets(&self) -> Vec<PPSubset> {
        let items: Vec<usize> = self.0.iter().copied().collect();
        let mut out: Vec<PPSubset> = (0u32..(1 << items.len()))
            .map(|mask| {
                PPSubset::from_firsts(items.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, &i)| i))
            })
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.0.iter().cmp(b.0.iter())));
        out
    }
}

impl fmt::Display for PPSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| format!("({},{})", i, i + 1)).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl FromStr for PPSubset {
    type Err = CellError;

    /// Parses `"1,2;5,6"`; the empty string is the empty set.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CellError::Parse(s.to_string());
        let mut out = BTreeSet::new();
        for chunk in s.split(';').map(str::trim).filter(|c| !c.is_empty()) {
            let (a, b) = chunk.split_once(',').ok_or_else(bad)?;
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b.trim().parse().map_err(|_| bad())?;
            if b != a + 1 || a == 0 {
                return Err(bad());
            }
            out.insert(a);
        }
        Ok(Self(out))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CellDiagrams {
    pub iota: YoungDiagram,
    pub jmath: YoungDiagram,
}

fn pair_starts_odd(star: Label) -> Result<bool, CellError> {
    match star.real_pattern() {
        Label::C | Label::Ct | Label::Cstar => Ok(true),
        Label::B | Label::D | Label::Dstar => Ok(false),
        l => Err(CellError::WrongLabel(l)),
    }
}

pub fn classify_star_pair(star: Label, d: &YoungDiagram, i: usize) -> PairClass {
    let Ok(odd) = pair_starts_odd(star) else { return PairClass::NotAPair };
    if i == 0 || (i % 2 == 1) != odd {
        return PairClass::NotAPair;
    }
    let (a, b) = (d.r(i), d.r(i + 1));
    match (a, a - b) {
        (0, _) => PairClass::Vacant,
        (_, 0) => PairClass::Balanced,
        (_, diff) if diff % 2 == 1 => PairClass::Tailed,
        _ => PairClass::Primitive,
    }
}

pub fn primitive_pairs(star: Label, d: &YoungDiagram) -> PPSubset {
    PPSubset::from_firsts((1..=d.len()).filter(|&i| classify_star_pair(star, d, i) == PairClass::Primitive))
}

/// No `⋆`-pair is balanced.
pub fn is_quasi_distinguished(star: Label, d: &YoungDiagram) -> bool {
    (1..=d.len()).all(|i| classify_star_pair(star, d, i) != PairClass::Balanced)
}

fn check_subset(star: Label, d: &YoungDiagram, wp: &PPSubset) -> Result<(), CellError> {
    if wp.is_subset(&primitive_pairs(star, d)) {
        Ok(())
    } else {
        Err(CellError::BadSubset { star, diagram: d.clone(), wp: wp.clone() })
    }
}

/// The pair of diagrams `(ι_℘, ȷ_℘)` attached to a good-parity orbit.
pub fn cell_diagrams(star: Label, d: &YoungDiagram, wp: &PPSubset) -> Result<CellDiagrams, CellError> {
    check_subset(star, d, wp)?;
    let r = |i: usize| d.r(i);
    let mut ic: Vec<usize> = Vec::new();
    let mut jc: Vec<usize> = Vec::new();
    match star.real_pattern() {
        Label::B => {
            jc.push(r(1) / 2);
            let mut i = 1;
            while 2 * i <= d.len() {
                let (a, b) = (r(2 * i) / 2, r(2 * i + 1) / 2);
                let (x, y) = if wp.contains(2 * i) { (b, a) } else { (a, b) };
                ic.push(x);
                jc.push(y);
                i += 1;
            }
        }
        Label::Ct => {
            let mut i = 1;
            while 2 * i - 1 <= d.len() {
                let (a, b) = (r(2 * i - 1) / 2, r(2 * i) / 2);
                let (x, y) = if wp.contains(2 * i - 1) { (b, a) } else { (a, b) };
                ic.push(x);
                jc.push(y);
                i += 1;
            }
        }
        Label::C | Label::Cstar => {
            let mut i = 1;
            while 2 * i - 1 <= d.len() {
                let (top, bot) = (r(2 * i - 1), r(2 * i));
                let (j, io) = if wp.contains(2 * i - 1) {
                    ((bot - 1) / 2, top.div_ceil(2))
                } else {
                    match classify_star_pair(star, d, 2 * i - 1) {
                        PairClass::Vacant => (0, 0),
                        PairClass::Tailed => ((top - 1) / 2, 0),
                        _ => ((top - 1) / 2, bot.div_ceil(2)),
                    }
                };
                jc.push(j);
                ic.push(io);
                i += 1;
            }
        }
        Label::D | Label::Dstar => {
            ic.push(if r(1) > 0 { r(1).div_ceil(2) } else { 0 });
            let mut i = 1;
            while 2 * i <= d.len() {
                let (top, bot) = (r(2 * i), r(2 * i + 1));
                let (j, io) = if wp.contains(2 * i) {
                    ((bot - 1) / 2, top.div_ceil(2))
                } else {
                    match classify_star_pair(star, d, 2 * i) {
                        PairClass::Vacant => (0, 0),
                        PairClass::Tailed => ((top - 1) / 2, 0),
                        _ => ((top - 1) / 2, bot.div_ceil(2)),
                    }
                };
                jc.push(j);
                ic.push(io);
                i += 1;
            }
        }
        l => return Err(CellError::WrongLabel(l)),
    }
    Ok(CellDiagrams { iota: YoungDiagram::from_cols(ic), jmath: YoungDiagram::from_cols(jc) })
}

/// Halves a diagram whose rows all occur with even multiplicity.
pub fn halve_rows(d: &YoungDiagram) -> Option<YoungDiagram> {
    let rows = d.rows();
    rows.chunks(2)
        .all(|w| w.len() == 2 && w[0] == w[1])
        .then(|| YoungDiagram::from_rows(rows.iter().step_by(2).copied()))
}

/// The two diagrams `(τ_L,b, τ_R,b)` built column-wise from `Ǒ'_b`.
pub fn tau_bad_diagrams(star: Label, d_b: &YoungDiagram) -> Result<(YoungDiagram, YoungDiagram), CellError> {
    let err = || CellError::BadParityViolation { star, diagram: d_b.clone() };
    let half = halve_rows(d_b).ok_or_else(err)?;
    let bad_is_odd = match star.real_pattern() {
        Label::B | Label::Ct => true,
        Label::C | Label::Cstar | Label::D | Label::Dstar => false,
        l => return Err(CellError::WrongLabel(l)),
    };
    if half.rows().iter().any(|r| (r % 2 == 1) != bad_is_odd) {
        return Err(err());
    }
    let rows = half.rows();
    if bad_is_odd {
        Ok((
            YoungDiagram::from_cols(rows.iter().map(|r| r.div_ceil(2))),
            YoungDiagram::from_cols(rows.iter().map(|r| (r - 1) / 2)),
        ))
    } else {
        let cols = YoungDiagram::from_cols(rows.iter().map(|r| r / 2));
        Ok((cols.clone(), cols))
    }
}

/// The irreducible `τ_b` of the bad-parity factor of the integral Weyl group.
pub fn tau_bad(star: Label, d_b: &YoungDiagram, variant: Variant) -> Result<WIrrep, CellError> {
    let (l, r) = tau_bad_diagrams(star, d_b)?;
    match star.real_pattern() {
        Label::B | Label::Ct => Ok(WIrrep::W(BipartitionIrrep::new(l, r))),
        _ => {
            let ty = bad_part_type(star, d_b, variant).map_err(|_| CellError::WrongLabel(star))?;
            Ok(WIrrep::WPrime(WPrimeIrrep::new(l, r, ty)))
        }
    }
}

/// The irreducible `τ_℘` of the good-parity factor.
pub fn tau_good(star: Label, d_g: &YoungDiagram, wp: &PPSubset) -> Result<WIrrep, CellError> {
    let cd = cell_diagrams(star, d_g, wp)?;
    Ok(match star.real_pattern() {
        Label::B | Label::C | Label::Cstar => WIrrep::W(BipartitionIrrep::new(cd.iota, cd.jmath)),
        Label::D | Label::Dstar => WIrrep::WPrime(WPrimeIrrep::new(cd.iota, cd.jmath, CellType::I)),
        _ => {
            let ty = bad_part_type(Label::Ct, d_g, Variant::Unique).map_err(|_| CellError::WrongLabel(star))?;
            WIrrep::WPrime(WPrimeIrrep::new(cd.iota, cd.jmath, ty))
        }
    })
}

/// Representatives of `Ā(Ǒ)`: all subsets of `PP`, or for `Ct` those
/// avoiding the largest pair (one per complementary couple).
pub fn a_bar(star: Label, d_g: &YoungDiagram) -> Vec<PPSubset> {
    let pp = primitive_pairs(star, d_g);
    let subsets = pp.subsets();
    match (star.real_pattern(), pp.0.iter().next_back()) {
        (Label::Ct, Some(&top)) => subsets.into_iter().filter(|s| !s.contains(top)).collect(),
        _ => subsets,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LeftCellEntry {
    pub wp: PPSubset,
    pub bad: WIrrep,
    pub good: WIrrep,
}

pub fn lusztig_left_cell(spec: &OrbitSpec) -> Result<Vec<LeftCellEntry>, CellError> {
    let split = split_parity(spec);
    let bad = tau_bad(spec.star, &split.d_b, spec.variant)?;
    a_bar(spec.star, &split.d_g)
        .into_iter()
        .map(|wp| {
            let good = tau_good(spec.star, &split.d_g, &wp)?;
            Ok(LeftCellEntry { wp, bad: bad.clone(), good })
        })
        .collect()
}

//! Infinitesimal characters of dual orbits and the dual diagram on the group side.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::cells::{tau_bad, tau_good, CellError, PPSubset};
use crate::diagram::{AlgebraFamily, DiagramError, UnionMode, YoungDiagram};
use crate::parity::{split_parity, Label, OrbitSpec, Variant};
use crate::weyl::a_invariant;

/// Half-integers stored as twice their value, kept weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HalfIntVector(Vec<i64>);

impl HalfIntVector {
    pub fn from_doubled(mut coords: Vec<i64>) -> Self {
        coords.sort_unstable_by(|a, b| b.cmp(a));
        Self(coords)
    }

    /// Twice each coordinate.
    pub fn doubled(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn negative_count(&self) -> usize {
        self.0.iter().filter(|&&x| x < 0).count()
    }

    /// Coordinates rendered as `"3/2"`, `"1"`, `"-1/2"`.
    pub fn render(&self) -> Vec<String> {
        self.0.iter().map(|&x| if x % 2 == 0 { (x / 2).to_string() } else { format!("{x}/2") }).collect()
    }
}

impl fmt::Display for HalfIntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.render().join(", "))
    }
}

impl Serialize for HalfIntVector {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.render().serialize(s)
    }
}

/// `ȟ/2` eigenvalues, doubled: a row of length `r` gives `r-1, r-3, …, 1-r`.
fn doubled_eigenvalues(d: &YoungDiagram) -> Vec<i64> {
    d.rows()
        .iter()
        .flat_map(|&r| {
            let r = r as i64;
            (0..r).map(move |i| r - 1 - 2 * i)
        })
        .collect()
}

/// The dominant representative `λ_Ǒ` of the infinitesimal character.
pub fn infinitesimal_character(spec: &OrbitSpec) -> HalfIntVector {
    let eig = doubled_eigenvalues(&spec.d);
    if spec.star.is_a_family() {
        return HalfIntVector::from_doubled(eig);
    }
    let n = spec.d.size() / 2;
    let mut coords: Vec<i64> = eig.iter().copied().filter(|&x| x > 0).collect();
    coords.resize(n, 0);
    let mut v = HalfIntVector::from_doubled(coords);
    if spec.variant == Variant::II {
        if let Some(last) = v.0.last_mut() {
            *last = -*last;
        }
    }
    v
}

/// `♯Δ⁺` for the complexified Lie algebra of the group.
pub fn positive_roots(fam: AlgebraFamily, rank: usize) -> usize {
    match fam {
        AlgebraFamily::GL => rank * rank.saturating_sub(1) / 2,
        AlgebraFamily::B | AlgebraFamily::C => rank * rank,
        AlgebraFamily::D => rank * rank.saturating_sub(1),
    }
}

/// Rank of the group in the sense of its complexified Lie algebra.
fn lie_rank(spec: &OrbitSpec) -> usize {
    if spec.star.is_a_family() {
        spec.d.size()
    } else {
        spec.star.rank_from_size(spec.d.size())
    }
}

/// The dual orbit `d_BV(Ǒ)` in the Lie algebra of the group.
pub fn bv_dual(spec: &OrbitSpec) -> Result<YoungDiagram, DiagramError> {
    let t = spec.d.transpose();
    match spec.star.real_pattern() {
        Label::C | Label::Cstar => t.minus_last().collapse(AlgebraFamily::C),
        Label::B => t.plus_first().collapse(AlgebraFamily::B),
        Label::D | Label::Dstar => t.collapse(AlgebraFamily::D),
        Label::Ct => t.plus_first().minus_last().collapse(AlgebraFamily::C),
        _ => Ok(t),
    }
}

/// `2(♯Δ⁺ − a(τ_b ⊗ τ_∅))`, the dimension the dual orbit must have.
pub fn bv_dimension_from_cells(spec: &OrbitSpec) -> Result<usize, CellError> {
    let rank = lie_rank(spec);
    let fam = spec.star.group_family();
    if spec.star.is_a_family() {
        let a = spec.d.transpose().n_invariant();
        return Ok(2 * (positive_roots(fam, rank) - a));
    }
    let star = spec.star.real_pattern();
    let split = split_parity(spec);
    let a_bad = if split.d_b.is_empty() { 0 } else { a_invariant(&tau_bad(star, &split.d_b, spec.variant)?) };
    let a_good = a_invariant(&tau_good(star, &split.d_g, &PPSubset::empty())?);
    Ok(2 * (positive_roots(fam, rank) - a_bad - a_good))
}

/// `(Ǒ'_b)^t ⊔_c (Ǒ'_b)^t ⊔_c d_BV(Ǒ_g)`.
pub fn bv_dual_from_split(spec: &OrbitSpec) -> Result<YoungDiagram, DiagramError> {
    let split = split_parity(spec);
    let good_spec = OrbitSpec { star: spec.star, d: split.d_g.clone(), variant: Variant::Unique };
    let good = bv_dual(&good_spec)?;
    let bad = split.d_b_prime.map(|b| b.transpose()).unwrap_or_default();
    Ok(bad.union(&bad, UnionMode::Cols).union(&good, UnionMode::Cols))
}

//! Real nilpotent orbits counted through signed Young diagrams.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::diagram::{AlgebraFamily, YoungDiagram};
use crate::parity::{GroupForm, Label};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealFormError {
    #[error("diagram {diagram} is not an orbit of the complexified Lie algebra of {group}")]
    InvalidOrbit { diagram: YoungDiagram, group: GroupForm },
    #[error("real orbit counting is not available for {0}")]
    Unsupported(GroupForm),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// Rows of alternating signs, each stored as `(length, leading sign)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SignedDiagram {
    rows: Vec<(usize, Sign)>,
}

impl SignedDiagram {
    /// Canonical form: rows sorted by decreasing length, then leading sign.
    pub fn new(mut rows: Vec<(usize, Sign)>) -> Self {
        rows.retain(|&(l, _)| l > 0);
        rows.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        Self { rows }
    }

    pub fn rows(&self) -> &[(usize, Sign)] {
        &self.rows
    }

    pub fn shape(&self) -> YoungDiagram {
        YoungDiagram::from_rows(self.rows.iter().map(|&(l, _)| l))
    }

    /// `(♯+, ♯−)` over all boxes.
    pub fn signature(&self) -> (usize, usize) {
        self.rows.iter().fold((0, 0), |(p, q), &(l, s)| {
            let (more, less) = (l.div_ceil(2), l / 2);
            match s {
                Sign::Plus => (p + more, q + less),
                Sign::Minus => (p + less, q + more),
            }
        })
    }
}

impl fmt::Display for SignedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|&(l, s)| {
                let mut cur = s;
                (0..l)
                    .map(|_| {
                        let c = if cur == Sign::Plus { '+' } else { '-' };
                        cur = cur.flip();
                        c
                    })
                    .collect()
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// Every canonical signed diagram of a shape, with rows of equal length unordered.
pub fn signed_diagrams(shape: &YoungDiagram) -> Vec<SignedDiagram> {
    let mut groups: Vec<(usize, usize)> = Vec::new();
    for &r in shape.rows() {
        match groups.last_mut() {
            Some((l, m)) if *l == r => *m += 1,
            _ => groups.push((r, 1)),
        }
    }
    let mut out: Vec<Vec<(usize, Sign)>> = vec![Vec::new()];
    for (l, m) in groups {
        out = out
            .into_iter()
            .flat_map(|rows| {
                (0..=m).map(move |plus| {
                    let mut rows = rows.clone();
                    rows.extend(std::iter::repeat_n((l, Sign::Plus), plus));
                    rows.extend(std::iter::repeat_n((l, Sign::Minus), m - plus));
                    rows
                })
            })
            .collect();
    }
    out.into_iter().map(SignedDiagram::new).collect()
}

/// The diagram with every multiplicity halved, if all are even.
fn halve_multiplicities(d: &YoungDiagram) -> Option<YoungDiagram> {
    let rows = d.rows();
    rows.chunks(2)
        .all(|w| w.len() == 2 && w[0] == w[1])
        .then(|| YoungDiagram::from_rows(rows.iter().step_by(2).copied()))
}

/// Number of `G`-orbits in the real points of the complex orbit with this diagram.
///
/// `U(p,q)`: alternating signed diagrams of signature `(p,q)`.
/// `Sp(a,b)`: the halved diagram, odd rows signed freely, even rows
/// contributing equally to both sides, signature `(a,b)`.
/// `SO*(2n)`: the halved diagram, odd rows fixed, even rows signed freely.
pub fn count_real_orbits(group: &GroupForm, shape: &YoungDiagram) -> Result<u64, RealFormError> {
    let invalid = || RealFormError::InvalidOrbit { diagram: shape.clone(), group: *group };
    match (group.label, group.signature()) {
        (Label::A | Label::At, Some((p, q))) => {
            if shape.size() != p + q {
                return Err(invalid());
            }
            Ok(signed_diagrams(shape).iter().filter(|s| s.signature() == (p, q)).count() as u64)
        }
        (Label::Cstar, Some((p2, q2))) => {
            let n = group.rank();
            if shape.size() != 2 * n || !shape.is_valid_orbit(AlgebraFamily::C) {
                return Err(invalid());
            }
            let Some(half) = halve_multiplicities(shape) else { return Ok(0) };
            let (a, b) = (p2 / 2, q2 / 2);
            let count = signed_diagrams(&half)
                .into_iter()
                .filter(|s| s.rows().iter().all(|&(l, sign)| l % 2 == 1 || sign == Sign::Plus))
                .filter(|s| {
                    let (p, q) = s.rows().iter().fold((0, 0), |(p, q), &(l, sign)| match (l % 2, sign) {
                        (0, _) => (p + l / 2, q + l / 2),
                        (_, Sign::Plus) => (p + l.div_ceil(2), q + l / 2),
                        (_, Sign::Minus) => (p + l / 2, q + l.div_ceil(2)),
                    });
                    (p, q) == (a, b)
                })
                .count();
            Ok(count as u64)
        }
        (Label::Dstar, None) => {
            let n = group.rank();
            if shape.size() != 2 * n || !shape.is_valid_orbit(AlgebraFamily::D) {
                return Err(invalid());
            }
            let Some(half) = halve_multiplicities(shape) else { return Ok(0) };
            let count = signed_diagrams(&half)
                .into_iter()
                .filter(|s| s.rows().iter().all(|&(l, sign)| l % 2 == 0 || sign == Sign::Plus))
                .count();
            Ok(count as u64)
        }
        _ => Err(RealFormError::Unsupported(*group)),
    }
}

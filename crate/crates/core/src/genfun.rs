//! Signature-graded generating functions of painted bipartitions and their
//! recursions along double descents.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cells::{cell_diagrams, is_quasi_distinguished, primitive_pairs, CellError, PPSubset};
use crate::descent::{dual_descent_orbit, dual_descent_wp, howe_dual};
use crate::diagram::YoungDiagram;
use crate::parity::{GroupForm, Label};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error(transparent)]
    BadSubset(#[from] CellError),
    #[error("label {0} has no generating function")]
    WrongLabel(Label),
    #[error("buckets are only defined for B and D, not {0}")]
    NoBuckets(Label),
}

/// A polynomial in `p` and `q` with integer coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(p: u32, q: u32, coeff: impl Into<BigInt>) -> Self {
        let mut out = Self::zero();
        out.add_term(p, q, coeff.into());
        out
    }

    /// The constant polynomial `c`.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, 0, c)
    }

    fn add_term(&mut self, p: u32, q: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((p, q)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(p, q));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: u32, q: u32) -> BigInt {
        self.terms.get(&(p, q)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero();
        for (&(p, q), v) in &self.terms {
            out.add_term(p, q, v * c);
        }
        out
    }

    /// Multiplies by `(pq)^e`.
    pub fn shift_pq(&self, e: u32) -> Self {
        Self { terms: self.terms.iter().map(|(&(p, q), v)| ((p + e, q + e), v.clone())).collect() }
    }

    pub fn eval(&self, p: &BigInt, q: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(a, b), c)| c * num_traits::pow(p.clone(), a as usize) * num_traits::pow(q.clone(), b as usize))
            .sum()
    }

    /// Value at `p = q = 1`.
    pub fn total(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl Add for &BivariatePoly {
    type Output = BivariatePoly;

    fn add(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (&(p, q), v) in &rhs.terms {
            out.add_term(p, q, v.clone());
        }
        out
    }
}

impl Mul for &BivariatePoly {
    type Output = BivariatePoly;

    fn mul(self, rhs: &BivariatePoly) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for (&(a, b), x) in &self.terms {
            for (&(c, d), y) in &rhs.terms {
                out.add_term(a + c, b + d, x * y);
            }
        }
        out
    }
}

/// Terms by total degree, then by `p`-exponent descending, e.g. `p^3 + 2 p^2 q + q^3`.
impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut keys: Vec<(u32, u32)> = self.terms.keys().copied().collect();
        keys.sort_by(|x, y| (x.0 + x.1).cmp(&(y.0 + y.1)).then(y.0.cmp(&x.0)));
        for (n, &(a, b)) in keys.iter().enumerate() {
            let c = &self.terms[&(a, b)];
            let negative = c < &BigInt::zero();
            match (n, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = if negative { -c } else { c.clone() };
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || (a == 0 && b == 0) {
                parts.push(mag.to_string());
            }
            for (var, e) in [("p", a), ("q", b)] {
                match e {
                    0 => {}
                    1 => parts.push(var.to_string()),
                    e => parts.push(format!("{var}^{e}")),
                }
            }
            f.write_str(&parts.join(" "))?;
        }
        Ok(())
    }
}

/// `ν_k = Σ_{i=0}^{k} p^{2i} q^{2(k-i)}`, zero for `k < 0`.
pub fn nu(k: i64) -> BivariatePoly {
    let mut out = BivariatePoly::zero();
    if k >= 0 {
        let k = k as u32;
        for i in 0..=k {
            out.add_term(2 * i, 2 * (k - i), BigInt::one());
        }
    }
    out
}

/// Which tail symbol `x_τ` a bucket collects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Bucket {
    D,
    CR,
    S,
}

impl Bucket {
    pub const ALL: [Bucket; 3] = [Bucket::D, Bucket::CR, Bucket::S];

    fn index(self) -> usize {
        self as usize
    }
}

impl std::str::FromStr for Bucket {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "d" => Ok(Bucket::D),
            "cr" | "rc" => Ok(Bucket::CR),
            "s" => Ok(Bucket::S),
            _ => Err(format!("unknown bucket {s:?} (expected d, cr or s)")),
        }
    }
}

impl fmt::Display for Bucket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Bucket::D => "d",
            Bucket::CR => "cr",
            Bucket::S => "s",
        })
    }
}

/// The base families: a single `B` row `[2k]`, a `D` hook `[2k-1, 1]`, and `h_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BaseKind {
    BRow,
    DHook,
    H,
}

fn poly(terms: &[(u32, u32)]) -> BivariatePoly {
    let mut out = BivariatePoly::zero();
    for &(p, q) in terms {
        out.add_term(p, q, BigInt::one());
    }
    out
}

pub fn base_gf(kind: BaseKind, k: usize, bucket: Bucket) -> BivariatePoly {
    let k = k as i64;
    match (kind, bucket) {
        (BaseKind::BRow, Bucket::D) => &poly(&[(2, 1), (1, 2)]) * &nu(k - 1),
        (BaseKind::BRow, Bucket::CR) => &(&poly(&[(1, 0)]) * &nu(k)) + &(&poly(&[(2, 1)]) * &nu(k - 1)),
        (BaseKind::BRow, Bucket::S) => poly(&[(0, 2 * k as u32 + 1)]),
        (BaseKind::DHook, _) if k == 0 => {
            if bucket == Bucket::D {
                BivariatePoly::one()
            } else {
                BivariatePoly::zero()
            }
        }
        (BaseKind::DHook, Bucket::D) => &(&poly(&[(1, 1)]) * &nu(k - 1)) + &(&poly(&[(2, 2)]) * &nu(k - 2)),
        (BaseKind::DHook, Bucket::CR) => &poly(&[(2, 0), (1, 1)]) * &nu(k - 1),
        (BaseKind::DHook, Bucket::S) => poly(&[(0, 2 * k as u32)]),
        (BaseKind::H, Bucket::D) => &poly(&[(2, 2), (1, 3)]) * &nu(k - 2),
        (BaseKind::H, Bucket::CR) => &(&poly(&[(1, 1)]) * &nu(k - 1)) + &(&poly(&[(2, 2)]) * &nu(k - 2)),
        (BaseKind::H, Bucket::S) => poly(&[(0, 2 * k as u32)]),
    }
}

type Buckets = [BivariatePoly; 3];

fn sum(b: &Buckets) -> BivariatePoly {
    b.iter().fold(BivariatePoly::zero(), |acc, x| &acc + x)
}

/// `f^S_{⋆,Ǒ,℘}` for the three buckets, `⋆ ∈ {B, D}`.
fn bd_buckets(star: Label, d: &YoungDiagram, wp: &PPSubset) -> Buckets {
    if d.r(2) == 0 {
        // a single B row (possibly empty) or the empty D orbit
        return Bucket::ALL.map(|b| match star {
            Label::B => base_gf(BaseKind::BRow, d.r(1) / 2, b),
            _ => base_gf(BaseKind::DHook, 0, b),
        });
    }
    let k = (d.r(1) - d.r(2)) / 2 + 1;
    let e = (d.r(2) - 1) as u32;
    let child_orbit = d.drop_first_row().drop_first_row();
    let child = bd_buckets(star, &child_orbit, &dual_descent_wp(&dual_descent_wp(wp)));
    let primitive = primitive_pairs(star, d).contains(2);
    Bucket::ALL.map(|b| {
        let hook = base_gf(BaseKind::DHook, k, b);
        let f = if primitive {
            &hook * &sum(&child)
        } else {
            &(&hook * &child[Bucket::D.index()]) + &(&base_gf(BaseKind::H, k, b) * &child[Bucket::CR.index()])
        };
        f.shift_pq(e)
    })
}

fn cstar_gf(d: &YoungDiagram) -> BivariatePoly {
    if d.r(2) == 0 {
        return nu((d.r(1) as i64 - 1) / 2);
    }
    let k = (d.r(1) as i64 - d.r(2) as i64) / 2 - 1;
    let rest = cstar_gf(&d.drop_first_row().drop_first_row());
    (&nu(k) * &rest).shift_pq(d.r(2) as u32 + 1)
}

/// `♯PBP_⋆(Ǒ, ℘)` for `⋆ ∈ {C, C̃, D*}` through one descent step.
fn one_step_count(star: Label, d: &YoungDiagram, wp: &PPSubset) -> Result<BigInt, GfError> {
    let child_star = howe_dual(star).map_err(|_| GfError::WrongLabel(star))?;
    let child_orbit = dual_descent_orbit(star, d);
    let child_wp = dual_descent_wp(wp);
    if star == Label::Dstar {
        return Ok(cstar_gf(&child_orbit).total());
    }
    if d.r(1) == 0 {
        return Ok(BigInt::one());
    }
    let child = bd_buckets(child_star, &child_orbit, &child_wp);
    Ok(if primitive_pairs(star, d).contains(1) {
        sum(&child).total()
    } else {
        child[Bucket::CR.index()].total() + child[Bucket::D.index()].total()
    })
}

/// The generating function `f_{⋆,Ǒ,℘}` (or one bucket of it for `B`, `D`).
/// For `C`, `C̃`, `D*` the result is the constant `♯PBP_⋆(Ǒ, ℘)`.
pub fn gf(star: Label, d: &YoungDiagram, wp: &PPSubset, bucket: Option<Bucket>) -> Result<BivariatePoly, GfError> {
    cell_diagrams(star, d, wp)?;
    if bucket.is_some() && !matches!(star, Label::B | Label::D) {
        return Err(GfError::NoBuckets(star));
    }
    match star {
        Label::B | Label::D => {
            let b = bd_buckets(star, d, wp);
            Ok(match bucket {
                Some(s) => b[s.index()].clone(),
                None => sum(&b),
            })
        }
        Label::Cstar | Label::Dstar if !wp.is_empty() || !is_quasi_distinguished(star, d) => Ok(BivariatePoly::zero()),
        Label::Cstar => Ok(cstar_gf(d)),
        Label::C | Label::Ct | Label::Dstar => Ok(BivariatePoly::constant(one_step_count(star, d, wp)?)),
        l => Err(GfError::WrongLabel(l)),
    }
}

/// `♯PBP_G(Ǒ, ℘)` read off the generating function.
pub fn count_via_gf(group: &GroupForm, d: &YoungDiagram, wp: &PPSubset) -> Result<BigInt, GfError> {
    let f = gf(group.label, d, wp, None)?;
    Ok(match group.signature() {
        Some((p, q)) if matches!(group.label, Label::B | Label::D | Label::Cstar) => f.coeff(p as u32, q as u32),
        _ => f.total(),
    })
}

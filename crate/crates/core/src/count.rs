//! Number of special unipotent representations attached to a dual orbit.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::cells::{primitive_pairs, CellError, PPSubset};
use crate::diagram::{DiagramError, YoungDiagram};
use crate::duality::bv_dual;
use crate::genfun::{count_via_gf, GfError};
use crate::oracle::{cell_multiplicity_sum, gl_cell_multiplicity, good_factor_group, OracleError};
use crate::paint::{enumerate_pap, enumerate_pbp_bad, enumerate_pbp_for_group, pap_signature, PaintError};
use crate::parity::{relevance, split_parity, GroupForm, Label, OrbitSpec, ParityDecomposition, ParityError};
use crate::realforms::count_real_orbits;

#[derive(Debug, Error)]
pub enum CountError {
    #[error("orbit of size {size} does not match {group}")]
    SizeMismatch { size: usize, group: GroupForm },
    #[error("label {label} does not match group {group}")]
    LabelMismatch { label: Label, group: GroupForm },
    #[error("{0} is not a complex label")]
    NotComplex(Label),
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error(transparent)]
    Paint(#[from] PaintError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Cell(#[from] CellError),
    #[error(transparent)]
    Parity(#[from] ParityError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

impl CountError {
    /// The variant name, used by the command line as its error tag.
    pub fn name(&self) -> &'static str {
        match self {
            CountError::SizeMismatch { .. } => "SizeMismatch",
            CountError::LabelMismatch { .. } => "LabelMismatch",
            CountError::NotComplex(_) => "NotComplex",
            CountError::Gf(_) => "GfError",
            CountError::Paint(_) => "PaintError",
            CountError::Oracle(_) => "OracleError",
            CountError::Cell(_) => "CellError",
            CountError::Parity(_) => "ParityError",
            CountError::Diagram(_) => "DiagramError",
        }
    }
}

fn big_as_number<S: Serializer>(n: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match u64::try_from(n) {
        Ok(v) => s.serialize_u64(v),
        Err(_) => s.serialize_str(&n.to_string()),
    }
}

fn big_map_as_numbers<S: Serializer>(m: &Option<BTreeMap<String, BigInt>>, s: S) -> Result<S::Ok, S::Error> {
    let m = m.as_ref().expect("skipped when absent");
    let mut out = s.serialize_map(Some(m.len()))?;
    for (k, v) in m {
        match u64::try_from(v) {
            Ok(v) => out.serialize_entry(k, &v)?,
            Err(_) => out.serialize_entry(k, &v.to_string())?,
        }
    }
    out.end()
}

/// Which result produced the count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Route {
    /// `GL_n(R)` or `GL_n(H)`: painted diagrams of the whole orbit.
    GeneralLinear,
    /// `U(p,q)` or its double cover: parabolic induction from the bad part.
    Unitary { shift: usize },
    /// Bad factor times good factor.
    Reduction {
        #[serde(serialize_with = "big_as_number")]
        bad_factor: BigInt,
        pp_factor: u64,
        #[serde(serialize_with = "big_as_number")]
        good_pbp: BigInt,
        good_group: String,
    },
    /// The orbit does not contribute for this real form.
    NotRelevant { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum CrossCheck {
    Value(#[serde(serialize_with = "big_as_number")] BigInt),
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitSummary {
    pub good: YoungDiagram,
    pub bad: YoungDiagram,
    pub nb: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CountReport {
    #[serde(serialize_with = "big_as_number")]
    pub count: BigInt,
    pub pp: Vec<(usize, usize)>,
    pub split: SplitSummary,
    pub route: Route,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "big_map_as_numbers")]
    pub per_wp: Option<BTreeMap<String, BigInt>>,
    pub cross_checks: BTreeMap<String, CrossCheck>,
}

impl CountReport {
    /// Whether every computed cross-check agrees with the count.
    pub fn consistent(&self) -> bool {
        self.cross_checks.values().all(|c| match c {
            CrossCheck::Value(v) => *v == self.count,
            CrossCheck::Skipped(_) => true,
        })
    }
}

/// `∏ (1 + multiplicity)` over distinct row lengths.
pub fn pap_ar_count(d: &YoungDiagram) -> BigInt {
    let mut out = BigInt::one();
    let rows = d.rows();
    let mut i = 0;
    while i < rows.len() {
        let m = rows[i..].iter().take_while(|&&r| r == rows[i]).count();
        out *= m + 1;
        i += m;
    }
    out
}

fn wp_key(wp: &PPSubset) -> String {
    let pairs: Vec<String> = wp.pairs().iter().map(|(i, j)| format!("({i},{j})")).collect();
    format!("{{{}}}", pairs.join(","))
}

fn check_sizes(group: &GroupForm, spec: &OrbitSpec) -> Result<(), CountError> {
    if group.label.real_pattern() != spec.star.real_pattern() || spec.star.is_complex() {
        return Err(CountError::LabelMismatch { label: spec.star, group: *group });
    }
    let rank = if spec.star.is_a_family() { spec.d.size() } else { spec.rank() };
    if rank != group.rank() {
        return Err(CountError::SizeMismatch { size: spec.d.size(), group: *group });
    }
    Ok(())
}

fn skipped(reason: &str) -> CrossCheck {
    CrossCheck::Skipped(reason.to_string())
}

struct Parts {
    count: BigInt,
    route: Route,
    per_wp: Option<BTreeMap<String, BigInt>>,
}

fn count_general_linear(spec: &OrbitSpec) -> Parts {
    let count = match spec.star {
        Label::AR => pap_ar_count(&spec.d),
        _ => BigInt::from(u8::from(spec.d.rows().iter().all(|r| r % 2 == 0))),
    };
    Parts { count, route: Route::GeneralLinear, per_wp: None }
}

fn count_unitary(group: &GroupForm, split: &ParityDecomposition, star: Label) -> Result<Parts, CountError> {
    let (p, q) = group.signature().unwrap_or((0, 0));
    let Some(bad) = &split.d_b_prime else {
        let reason = "bad rows do not pair up".to_string();
        return Ok(Parts { count: BigInt::zero(), route: Route::NotRelevant { reason }, per_wp: None });
    };
    let shift = bad.size();
    if p < shift || q < shift {
        let reason = format!("signature ({p},{q}) below {shift}");
        return Ok(Parts { count: BigInt::zero(), route: Route::NotRelevant { reason }, per_wp: None });
    }
    let n = enumerate_pap(star, &split.d_g)?
        .iter()
        .map(pap_signature)
        .filter(|s| (s.p + shift, s.q + shift) == (p, q))
        .count();
    Ok(Parts { count: BigInt::from(n), route: Route::Unitary { shift }, per_wp: None })
}

fn count_bcd(group: &GroupForm, spec: &OrbitSpec, split: &ParityDecomposition) -> Result<Parts, CountError> {
    let star = spec.star;
    let not_relevant =
        |reason: String| Parts { count: BigInt::zero(), route: Route::NotRelevant { reason }, per_wp: None };
    if !relevance(group, spec) {
        let reason = match star {
            Label::Dstar => "very even orbit of type II".to_string(),
            _ => format!("signature cannot contain the bad part of size {}", split.n_b),
        };
        return Ok(not_relevant(reason));
    }
    let Some(g_good) = good_factor_group(group, split.n_b, split.n_g) else {
        return Ok(not_relevant("no good-parity factor".to_string()));
    };
    let bad_factor = match (star, &split.d_b_prime) {
        (Label::Cstar | Label::Dstar, _) => BigInt::one(),
        (_, Some(b)) => pap_ar_count(b),
        (_, None) => BigInt::zero(),
    };
    let quaternionic = matches!(star, Label::Cstar | Label::Dstar);
    let pp = primitive_pairs(star, &split.d_g);
    let pp_factor: u64 = if quaternionic { 1 } else { 1 << pp.len() };
    let mut per_wp = BTreeMap::new();
    let subsets = if quaternionic { vec![PPSubset::empty()] } else { pp.subsets() };
    for wp in &subsets {
        per_wp.insert(wp_key(wp), count_via_gf(&g_good, &split.d_g, wp)?);
    }
    let good_pbp = per_wp[&wp_key(&PPSubset::empty())].clone();
    let count = &bad_factor * BigInt::from(pp_factor) * &good_pbp;
    let route = Route::Reduction { bad_factor, pp_factor, good_pbp, good_group: g_good.to_string() };
    Ok(Parts { count, route, per_wp: Some(per_wp) })
}

fn count_parts(group: &GroupForm, spec: &OrbitSpec, split: &ParityDecomposition) -> Result<Parts, CountError> {
    match spec.star {
        Label::AR | Label::AH => Ok(count_general_linear(spec)),
        Label::A | Label::At => count_unitary(group, split, spec.star),
        _ => count_bcd(group, spec, split),
    }
}

fn summary(split: &ParityDecomposition) -> SplitSummary {
    SplitSummary { good: split.d_g.clone(), bad: split.d_b.clone(), nb: split.n_b }
}

/// `♯Unip_Ǒ(G)`, read off the generating functions.
pub fn unip_count(group: &GroupForm, spec: &OrbitSpec) -> Result<CountReport, CountError> {
    check_sizes(group, spec)?;
    let split = split_parity(spec);
    let parts = count_parts(group, spec, &split)?;
    let pp = if spec.star.is_a_family() { Vec::new() } else { primitive_pairs(spec.star, &split.d_g).pairs() };
    let mut cross_checks = BTreeMap::new();
    for name in ["enumeration", "oracle", "realforms"] {
        cross_checks.insert(name.to_string(), skipped("not requested"));
    }
    let genfun = match parts.route {
        Route::Reduction { .. } => CrossCheck::Value(parts.count.clone()),
        Route::NotRelevant { .. } => skipped("orbit not relevant"),
        _ => skipped("no generating function for the A family"),
    };
    cross_checks.insert("genfun".to_string(), genfun);
    Ok(CountReport {
        count: parts.count,
        pp,
        split: summary(&split),
        route: parts.route,
        per_wp: parts.per_wp,
        cross_checks,
    })
}

/// Enumeration route: painted diagrams or painted bipartitions listed one by one.
pub fn count_by_enumeration(group: &GroupForm, spec: &OrbitSpec) -> Result<BigInt, CountError> {
    check_sizes(group, spec)?;
    let split = split_parity(spec);
    match spec.star {
        Label::AR | Label::AH => Ok(BigInt::from(enumerate_pap(spec.star, &spec.d)?.len())),
        Label::A | Label::At => Ok(count_unitary(group, &split, spec.star)?.count),
        star => {
            if !relevance(group, spec) {
                return Ok(BigInt::zero());
            }
            let Some(g_good) = good_factor_group(group, split.n_b, split.n_g) else { return Ok(BigInt::zero()) };
            let bad = match star {
                Label::Cstar | Label::Dstar => 1,
                _ => enumerate_pbp_bad(star, &split.d_b)?.len(),
            };
            let subsets = match star {
                Label::Cstar | Label::Dstar => vec![PPSubset::empty()],
                _ => primitive_pairs(star, &split.d_g).subsets(),
            };
            let mut good = 0usize;
            for wp in &subsets {
                good += enumerate_pbp_for_group(&g_good, &split.d_g, wp)?.len();
            }
            Ok(BigInt::from(bad) * BigInt::from(good))
        }
    }
}

/// Weyl group route; `None` where no coherent continuation formula applies.
pub fn count_by_oracle(group: &GroupForm, spec: &OrbitSpec) -> Result<Option<BigInt>, CountError> {
    check_sizes(group, spec)?;
    match spec.star {
        Label::AR | Label::AH => Ok(Some(BigInt::from(gl_cell_multiplicity(spec)?))),
        Label::A | Label::At => Ok(None),
        _ => Ok(Some(BigInt::from(cell_multiplicity_sum(group, spec)?))),
    }
}

/// Real-orbit route, available for unitary and quaternionic groups with
/// good-parity orbits.
pub fn count_by_realforms(group: &GroupForm, spec: &OrbitSpec) -> Result<Option<BigInt>, CountError> {
    check_sizes(group, spec)?;
    let split = split_parity(spec);
    if !split.d_b.is_empty() {
        return Ok(None);
    }
    match spec.star {
        Label::A | Label::At | Label::Cstar | Label::Dstar => {
            let dual = bv_dual(spec)?;
            match count_real_orbits(group, &dual) {
                Ok(n) => Ok(Some(BigInt::from(n))),
                Err(_) => Ok(None),
            }
        }
        _ => Ok(None),
    }
}

/// [`unip_count`] with every independent route filled in.
pub fn unip_count_verified(group: &GroupForm, spec: &OrbitSpec) -> Result<CountReport, CountError> {
    let mut report = unip_count(group, spec)?;
    let value_or = |v: Option<BigInt>, why: &str| v.map_or_else(|| skipped(why), CrossCheck::Value);
    report.cross_checks.insert("enumeration".into(), CrossCheck::Value(count_by_enumeration(group, spec)?));
    report
        .cross_checks
        .insert("oracle".into(), value_or(count_by_oracle(group, spec)?, "no coherent continuation formula"));
    report.cross_checks.insert(
        "realforms".into(),
        value_or(count_by_realforms(group, spec)?, "not a unitary or quaternionic good-parity case"),
    );
    Ok(report)
}

/// `♯Unip_Ǒ(G)` for a complex group viewed as a real group.
pub fn unip_count_complex(label: Label, d: &YoungDiagram) -> Result<BigInt, CountError> {
    if !label.is_complex() {
        return Err(CountError::NotComplex(label));
    }
    let spec = OrbitSpec::new_default(label, d.clone())?;
    if label == Label::AC {
        return Ok(BigInt::one());
    }
    let split = split_parity(&spec);
    let pp = primitive_pairs(label.real_pattern(), &split.d_g);
    Ok(BigInt::one() << pp.len())
}

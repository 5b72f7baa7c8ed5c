//! Coherent-continuation multiplicities, computed from branching sums.
//!
//! Every coherent continuation representation is assembled at the level of
//! `W_n` (or `S_n` for the A family) by inducing the closed-form pieces of
//! [`crate::weyl`] in stages. Targets living on `W'_n` are lifted to `W_n`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::cells::{a_bar, cell_diagrams, primitive_pairs, tau_bad_diagrams, CellError, PPSubset};
use crate::diagram::{partitions, YoungDiagram};
use crate::parity::{bad_part_type, relevance, split_parity, CellType, GroupForm, Label, OrbitSpec, ParityError};
use crate::weyl::{eta_to_w, induct, lr_coeff, sign_to_w, trivial_to_w, BipartitionIrrep, VirtualRep, WIrrep};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("rank mismatch: irrep of rank {irrep} against group of rank {group}")]
    RankMismatch { irrep: usize, group: usize },
    #[error("label {label} does not match group {group}")]
    LabelMismatch { label: Label, group: GroupForm },
    #[error("no coherent continuation formula for {0}")]
    WrongLabel(Label),
    #[error(transparent)]
    Cell(#[from] CellError),
    #[error(transparent)]
    Parity(#[from] ParityError),
}

/// A target irreducible: `S_n` for the A family, `W_n` or `W'_n` otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CohTarget {
    Sym(YoungDiagram),
    Weyl(WIrrep),
}

impl CohTarget {
    pub fn rank(&self) -> usize {
        match self {
            CohTarget::Sym(d) => d.size(),
            CohTarget::Weyl(w) => {
                let (l, r) = w.halves();
                l.size() + r.size()
            }
        }
    }
}

impl fmt::Display for CohTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CohTarget::Sym(d) => d.fmt(f),
            CohTarget::Weyl(w) => w.fmt(f),
        }
    }
}

/// One summand of a coherent continuation representation, with its parameters.
#[derive(Debug, Clone, Serialize)]
pub struct CohTerm {
    pub params: Params,
    pub multiplicity: u64,
}

type WRep = VirtualRep<BipartitionIrrep>;
type SRep = VirtualRep<YoungDiagram>;
type Params = Vec<(&'static str, usize)>;

fn w_unit() -> WRep {
    WRep::singleton(BipartitionIrrep::new(YoungDiagram::empty(), YoungDiagram::empty()))
}

fn w_single(left: YoungDiagram, right: YoungDiagram) -> WRep {
    WRep::singleton(BipartitionIrrep::new(left, right))
}

fn row(k: usize) -> YoungDiagram {
    YoungDiagram::from_rows([k])
}

fn col(k: usize) -> YoungDiagram {
    YoungDiagram::from_rows(vec![1; k])
}

fn induct_all(parts: &[WRep]) -> WRep {
    parts.iter().fold(w_unit(), |acc, x| induct(&acc, x))
}

/// Summands of the `W_n`-level coherent continuation representation of a
/// group of type `star` with no bad part, each as `(parameters, rep)`.
fn good_summands(star: Label, group: &GroupForm) -> Result<Vec<(Params, WRep)>, OracleError> {
    let n = group.rank();
    let sig = group.signature();
    let mut out = Vec::new();
    match star.real_pattern() {
        Label::B => {
            let (p, q) = sig.ok_or(OracleError::WrongLabel(star))?;
            for t in 0..=n / 2 {
                for a in 0..=n - 2 * t {
                    for r in 0..=n - 2 * t - a {
                        let s = n - 2 * t - a - r;
                        let used_p = 2 * t + a + 2 * r;
                        let used_q = 2 * t + a + 2 * s;
                        if p < used_p || p - used_p > 1 || q < used_q || q - used_q > 1 {
                            continue;
                        }
                        let rep = induct_all(&[
                            eta_to_w(t),
                            trivial_to_w(a),
                            w_single(YoungDiagram::empty(), col(s)),
                            w_single(YoungDiagram::empty(), col(r)),
                        ]);
                        out.push((vec![("t", t), ("a", a), ("r", r), ("s", s)], rep));
                    }
                }
            }
        }
        Label::C => {
            for t in 0..=n / 2 {
                for a in 0..=n - 2 * t {
                    for c in 0..=n - 2 * t - a {
                        let d = n - 2 * t - a - c;
                        let rep = induct_all(&[
                            eta_to_w(t),
                            sign_to_w(a),
                            w_single(row(c), YoungDiagram::empty()),
                            w_single(row(d), YoungDiagram::empty()),
                        ]);
                        out.push((vec![("t", t), ("a", a), ("c", c), ("d", d)], rep));
                    }
                }
            }
        }
        Label::Ct => {
            for t in 0..=n / 2 {
                for a in 0..=n - 2 * t {
                    let a2 = n - 2 * t - a;
                    let rep = induct_all(&[eta_to_w(t), sign_to_w(a), trivial_to_w(a2)]);
                    out.push((vec![("t", t), ("a", a), ("a'", a2)], rep));
                }
            }
        }
        Label::Cstar => {
            let (p, q) = sig.ok_or(OracleError::WrongLabel(star))?;
            if p % 2 == 1 || q % 2 == 1 {
                return Ok(out);
            }
            let (hp, hq) = (p / 2, q / 2);
            for t in 0..=hp.min(hq) {
                let (r, s) = (hp - t, hq - t);
                let rep = induct_all(&[
                    eta_to_w(t),
                    w_single(YoungDiagram::empty(), col(s)),
                    w_single(YoungDiagram::empty(), col(r)),
                ]);
                out.push((vec![("t", t), ("r", r), ("s", s)], rep));
            }
        }
        Label::D => {
            let (p, q) = sig.ok_or(OracleError::WrongLabel(star))?;
            for t in 0..=n / 2 {
                for r in 0..=n {
                    for s in 0..=n {
                        let Some(cd) = p.checked_sub(2 * t + 2 * r) else { continue };
                        if q.checked_sub(2 * t + 2 * s) != Some(cd) {
                            continue;
                        }
                        for c in 0..=cd {
                            let d = cd - c;
                            let rep = induct_all(&[
                                eta_to_w(t),
                                w_single(col(s), YoungDiagram::empty()),
                                w_single(col(r), YoungDiagram::empty()),
                                w_single(row(c), YoungDiagram::empty()),
                                w_single(row(d), YoungDiagram::empty()),
                            ]);
                            out.push((vec![("t", t), ("r", r), ("s", s), ("c", c), ("d", d)], rep));
                        }
                    }
                }
            }
        }
        Label::Dstar => {
            for t in 0..=n / 2 {
                let a = n - 2 * t;
                let rep = induct_all(&[eta_to_w(t), sign_to_w(a)]);
                out.push((vec![("t", t), ("a", a)], rep));
            }
        }
        l => return Err(OracleError::WrongLabel(l)),
    }
    Ok(out)
}

/// The `W_n`-level coherent continuation representation of `group`, as if
/// its infinitesimal character had only good parity.
pub fn coherent_rep(group: &GroupForm) -> Result<WRep, OracleError> {
    let mut total = WRep::new();
    for (_, rep) in good_summands(group.label, group)? {
        total.add_all(&rep);
    }
    Ok(total)
}

fn s_induct(x: &SRep, y: &SRep) -> SRep {
    let mut out = SRep::new();
    for (a, ma) in x.iter() {
        for (b, mb) in y.iter() {
            for t in partitions(a.size() + b.size()) {
                let m = lr_coeff(a, b, &t).unwrap_or(0);
                if m > 0 {
                    out.add(t, ma * mb * m);
                }
            }
        }
    }
    out
}

fn even_columns(k: usize) -> SRep {
    let mut v = SRep::new();
    for s in partitions(k) {
        if s.cols().iter().all(|c| c % 2 == 0) {
            v.add(s, 1);
        }
    }
    v
}

/// Summands of the `S_l` coherent continuation representation for `GL_l(R)`
/// or `GL_{l/2}(H)`.
fn gl_summands(star: Label, l: usize) -> Result<Vec<(Params, SRep)>, OracleError> {
    match star {
        Label::AR => {
            let mut out = Vec::new();
            for t in 0..=l / 2 {
                for c in 0..=l - 2 * t {
                    let d = l - 2 * t - c;
                    let rep =
                        s_induct(&s_induct(&even_columns(2 * t), &SRep::singleton(row(c))), &SRep::singleton(row(d)));
                    out.push((vec![("t", t), ("c", c), ("d", d)], rep));
                }
            }
            Ok(out)
        }
        Label::AH if l.is_multiple_of(2) => Ok(vec![(vec![("t", l / 2)], even_columns(l))]),
        Label::AH => Ok(Vec::new()),
        other => Err(OracleError::WrongLabel(other)),
    }
}

/// Lift of a target to `W_n`: `W'_n` targets of type D are oriented with the
/// longer first column on the left, matching the cell diagrams.
fn lift(star: Label, w: &WIrrep) -> BipartitionIrrep {
    match w {
        WIrrep::W(x) => x.clone(),
        WIrrep::WPrime(x) if matches!(star.real_pattern(), Label::D | Label::Dstar) && x.right.len() > x.left.len() => {
            BipartitionIrrep::new(x.right.clone(), x.left.clone())
        }
        WIrrep::WPrime(x) => BipartitionIrrep::new(x.left.clone(), x.right.clone()),
    }
}

fn multiplicity_in(star: Label, target: &WIrrep, rep: &WRep) -> u64 {
    let lifted = lift(star, target);
    match (star.real_pattern(), target) {
        // restriction from W_n to W'_n
        (Label::Ct, WIrrep::WPrime(x)) if x.left != x.right => {
            rep.multiplicity(&lifted) + rep.multiplicity(&lifted.twist())
        }
        _ => rep.multiplicity(&lifted),
    }
}

/// Multiplicity of `target` in the coherent continuation representation of
/// `group`, with the per-summand trace.
pub fn coh_multiplicity_trace(
    star: Label,
    group: &GroupForm,
    target: &CohTarget,
) -> Result<(u64, Vec<CohTerm>), OracleError> {
    if star.real_pattern() != group.label.real_pattern() {
        return Err(OracleError::LabelMismatch { label: star, group: *group });
    }
    let rank = group.rank();
    if target.rank() != rank {
        return Err(OracleError::RankMismatch { irrep: target.rank(), group: rank });
    }
    let terms: Vec<CohTerm> = match target {
        CohTarget::Sym(sigma) => gl_summands(star, rank)?
            .into_iter()
            .map(|(params, rep)| CohTerm { params, multiplicity: rep.multiplicity(sigma) })
            .collect(),
        CohTarget::Weyl(w) => good_summands(star, group)?
            .into_iter()
            .map(|(params, rep)| CohTerm { params, multiplicity: multiplicity_in(star, w, &rep) })
            .collect(),
    };
    Ok((terms.iter().map(|t| t.multiplicity).sum(), terms))
}

pub fn coh_multiplicity(star: Label, group: &GroupForm, target: &CohTarget) -> Result<u64, OracleError> {
    coh_multiplicity_trace(star, group, target).map(|(m, _)| m)
}

/// The good-parity factor `G_g` of `group` for the orbit's split, or `None`
/// when the signature cannot accommodate the bad part.
pub fn good_factor_group(group: &GroupForm, n_b: usize, n_g: usize) -> Option<GroupForm> {
    let label = group.label;
    match label.real_pattern() {
        Label::B | Label::D | Label::Cstar => {
            let (p, q) = group.signature()?;
            Some(GroupForm::with_signature(label, p.checked_sub(n_b)?, q.checked_sub(n_b)?))
        }
        _ => Some(GroupForm::with_rank(label, n_g)),
    }
}

/// Multiplicity of `τ_b` in the bad-parity coherent continuation representation.
fn bad_multiplicity(spec: &OrbitSpec, n_b: usize, n_g: usize) -> Result<u64, OracleError> {
    let star = spec.star.real_pattern();
    let split = split_parity(spec);
    let (l, r) = tau_bad_diagrams(star, &split.d_b)?;
    let target = BipartitionIrrep::new(l, r);
    Ok(match star {
        Label::B | Label::Ct => {
            let mut total = 0;
            for t in 0..=n_b / 2 {
                for c in 0..=n_b - 2 * t {
                    let d = n_b - 2 * t - c;
                    let rep = induct_all(&[
                        eta_to_w(t),
                        w_single(row(c), YoungDiagram::empty()),
                        w_single(row(d), YoungDiagram::empty()),
                    ]);
                    total += rep.multiplicity(&target);
                }
            }
            total
        }
        Label::C | Label::D => {
            let mut total = 0;
            for t in 0..=n_b / 2 {
                let rep = induct_all(&[eta_to_w(t), trivial_to_w(n_b - 2 * t)]);
                total += rep.multiplicity(&target);
            }
            total
        }
        Label::Dstar if n_g == 0 => {
            let ty = bad_part_type(star, &split.d_b, spec.variant)?;
            u64::from(ty == CellType::I && eta_to_w(n_b / 2).multiplicity(&target) > 0)
        }
        // the type is normalized to I, where Ind η contains every (σ, σ)_I once
        Label::Cstar | Label::Dstar => eta_to_w(n_b / 2).multiplicity(&target),
        l => return Err(OracleError::WrongLabel(l)),
    })
}

/// `Σ_{℘̄ ∈ Ā} [τ_b ⊗ τ_℘̄ : Coh_Λ]`, the number of special unipotent
/// representations predicted by the Weyl group computation.
pub fn cell_multiplicity_sum(group: &GroupForm, spec: &OrbitSpec) -> Result<u64, OracleError> {
    let star = spec.star;
    if star.real_pattern() != group.label.real_pattern() {
        return Err(OracleError::LabelMismatch { label: star, group: *group });
    }
    if !relevance(group, spec) {
        return Ok(0);
    }
    let split = split_parity(spec);
    let Some(g_good) = good_factor_group(group, split.n_b, split.n_g) else { return Ok(0) };
    if g_good.rank() != split.n_g {
        return Ok(0);
    }
    let m_b = bad_multiplicity(spec, split.n_b, split.n_g)?;
    if m_b == 0 {
        return Ok(0);
    }
    let x_g = coherent_rep(&g_good)?;
    let pp = primitive_pairs(star, &split.d_g);
    let mut good = 0;
    for wp in a_bar(star, &split.d_g) {
        // the members of the class ℘̄ in A
        let mut members: Vec<PPSubset> = vec![wp.clone()];
        if star.real_pattern() == Label::Ct && !pp.is_empty() {
            members.push(wp.complement_in(&pp));
        }
        for m in members {
            let cd = cell_diagrams(star, &split.d_g, &m)?;
            good += x_g.multiplicity(&BipartitionIrrep::new(cd.iota, cd.jmath));
        }
    }
    Ok(m_b * good)
}

/// `[Ǒ^t : Coh]` for `GL_n(R)` and `GL_n(H)`, split along parity.
pub fn gl_cell_multiplicity(spec: &OrbitSpec) -> Result<u64, OracleError> {
    let star = spec.star;
    let split = split_parity(spec);
    let mut total = 1;
    for part in [&split.d_b, &split.d_g] {
        let target = part.transpose();
        let m: u64 = gl_summands(star, part.size())?.iter().map(|(_, rep)| rep.multiplicity(&target)).sum();
        total *= m;
    }
    Ok(total)
}

//! Howe duals, descents of orbits and painted bipartitions, shape shifting and tails.
//!
//! Boxes are addressed as `(row, column)`, both 1-based, so `P(c₁(ι), 1)` is
//! the bottom box of the first column of `ι`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cells::{cell_diagrams, PPSubset};
use crate::diagram::YoungDiagram;
use crate::paint::{Gamma, PaintedBipartition, Painting, Symbol};
use crate::parity::Label;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DescentError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("label {0} does not take part in descent")]
    WrongLabel(Label),
}

fn violated(msg: impl Into<String>) -> DescentError {
    DescentError::PreconditionViolated(msg.into())
}

/// One application of the descent map together with its source and target data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentStep {
    pub input: PaintedBipartition,
    pub wp: PPSubset,
    pub output: PaintedBipartition,
    pub wp_out: PPSubset,
    pub star_out: Label,
    pub orbit_out: YoungDiagram,
}

pub fn howe_dual(star: Label) -> Result<Label, DescentError> {
    Ok(match star {
        Label::B => Label::Ct,
        Label::Ct => Label::B,
        Label::C => Label::D,
        Label::D => Label::C,
        Label::Cstar => Label::Dstar,
        Label::Dstar => Label::Cstar,
        l => return Err(DescentError::WrongLabel(l)),
    })
}

/// `∇̌`: drop the first row, except that an empty `D`/`D*` orbit goes to a single box.
pub fn dual_descent_orbit(star: Label, d: &YoungDiagram) -> YoungDiagram {
    if matches!(star, Label::D | Label::Dstar) && d.is_empty() {
        YoungDiagram::from_rows([1])
    } else {
        d.drop_first_row()
    }
}

/// `∇̌(℘) = {(i, i+1) : (i+1, i+2) ∈ ℘}`.
pub fn dual_descent_wp(wp: &PPSubset) -> PPSubset {
    PPSubset::from_firsts(wp.0.iter().filter(|&&i| i >= 2).map(|&i| i - 1))
}

pub fn dual_descent(
    star: Label,
    d: &YoungDiagram,
    wp: &PPSubset,
) -> Result<(Label, YoungDiagram, PPSubset), DescentError> {
    Ok((howe_dual(star)?, dual_descent_orbit(star, d), dual_descent_wp(wp)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ShiftDirection {
    Up,
    Down,
}

fn with_first_col(d: &YoungDiagram, len: usize) -> Option<YoungDiagram> {
    let mut cols = d.cols();
    if cols.is_empty() {
        cols.push(len);
    } else {
        cols[0] = len;
    }
    if cols.windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    Some(YoungDiagram::from_cols(cols))
}

/// `T_{℘,℘↑}` (direction `Up`, requires `(1,2) ∉ ℘`) and its inverse (`Down`,
/// requires `(1,2) ∈ ℘`). `wp` is the pair set the input is painted over.
pub fn shape_shift(
    t: &PaintedBipartition,
    wp: &PPSubset,
    dir: ShiftDirection,
) -> Result<PaintedBipartition, DescentError> {
    let star = t.star();
    if !matches!(star, Label::C | Label::Ct) {
        return Err(DescentError::WrongLabel(star));
    }
    match (dir, wp.contains(1)) {
        (ShiftDirection::Up, true) => return Err(violated("(1,2) already in ℘")),
        (ShiftDirection::Down, false) => return Err(violated("(1,2) not in ℘")),
        _ => {}
    }
    let out = match (star, dir) {
        (Label::C, ShiftDirection::Up) => shift_up_c(t),
        (Label::C, ShiftDirection::Down) => shift_down_c(t),
        _ => shift_ct(t),
    }
    .ok_or_else(|| violated("(1,2) is not primitive for this painted bipartition"))?;
    if out.is_valid() {
        Ok(out)
    } else {
        Err(violated("shape shift produced an invalid painting"))
    }
}

fn shift_up_c(t: &PaintedBipartition) -> Option<PaintedBipartition> {
    use Symbol::*;
    let (iota, jmath) = (t.iota(), t.jmath());
    let c1i = iota.c(1);
    let c1u = jmath.c(1) + 1;
    if c1i == 0 || c1u <= c1i {
        return None;
    }
    let iota_up = with_first_col(&iota, c1u)?;
    let jmath_up = with_first_col(&jmath, c1i - 1)?;
    let p = &t.p;
    let bottom = p.get(c1i, 1)?;
    let mut col1: Vec<(usize, Symbol)> = Vec::new();
    let mut extra: Option<(usize, usize, Symbol)> = None;
    if bottom != Dot {
        if c1i >= 2 && p.get(c1i - 1, 1) == Some(C) {
            col1.extend((c1i - 1..=c1u - 2).map(|i| (i, R)));
            col1.push((c1u - 1, C));
            col1.push((c1u, D));
        } else {
            col1.extend((c1i..=c1u - 1).map(|i| (i, R)));
            col1.push((c1u, bottom));
        }
    } else if iota.c(2) == c1i && p.get(c1i, 2) == Some(R) {
        col1.extend((c1i..=c1u - 1).map(|i| (i, R)));
        extra = Some((iota.c(2), 2, C));
        col1.push((c1u, D));
    } else {
        col1.extend((c1i..=c1u.saturating_sub(2)).map(|i| (i, R)));
        col1.push((c1u - 1, C));
        col1.push((c1u, D));
    }
    let new_p = Painting::from_fn(&iota_up, |i, j| {
        if j == 1 {
            if let Some(&(_, s)) = col1.iter().rev().find(|(r, _)| *r == i) {
                return Some(s);
            }
        }
        if let Some((ei, ej, s)) = extra {
            if (i, j) == (ei, ej) {
                return Some(s);
            }
        }
        p.get(i, j)
    })?;
    let new_q = Painting::from_fn(&jmath_up, |i, j| t.q.get(i, j))?;
    Some(PaintedBipartition::new(new_p, new_q, t.gamma))
}

fn shift_down_c(t: &PaintedBipartition) -> Option<PaintedBipartition> {
    use Symbol::*;
    let (iota, jmath) = (t.iota(), t.jmath());
    let c1i_up = iota.c(1);
    let c1j_up = jmath.c(1);
    let c1i = c1j_up + 1;
    let c1j = c1i_up.checked_sub(1)?;
    if c1i_up < 2 {
        return None;
    }
    let iota_dn = with_first_col(&iota, c1i)?;
    let jmath_dn = with_first_col(&jmath, c1j)?;
    let p = &t.p;
    let mut p_set: Vec<((usize, usize), Symbol)> = Vec::new();
    let mut q_set: Vec<((usize, usize), Symbol)> = Vec::new();
    let s_rows = |from: usize, to: usize| (from..=to).map(|i| ((i, 1), S)).collect::<Vec<_>>();
    match p.get(c1i_up - 1, 1)? {
        C => {
            if c1j_up >= 1 && p.get(c1j_up, 1) == Some(R) {
                p_set.push(((c1i - 1, 1), C));
                p_set.push(((c1i, 1), D));
                q_set.extend(s_rows(c1i, c1j));
            } else {
                p_set.push(((c1i, 1), Dot));
                q_set.push(((c1i, 1), Dot));
                q_set.extend(s_rows(c1i + 1, c1j));
            }
        }
        R => {
            let c2i_up = iota.c(2);
            if c2i_up == c1j_up + 1 && p.get(c1i_up, 1) == Some(D) && p.get(c2i_up, 2) == Some(C) {
                p_set.push(((c1i, 1), Dot));
                p_set.push(((iota_dn.c(2), 2), R));
                q_set.push(((c1i, 1), Dot));
                q_set.extend(s_rows(c1i + 1, c1j));
            } else {
                p_set.push(((c1i, 1), p.get(c1i_up, 1)?));
                q_set.extend(s_rows(c1i, c1j));
            }
        }
        _ => return None,
    }
    let lookup = |set: &[((usize, usize), Symbol)], i: usize, j: usize| {
        set.iter().rev().find(|(b, _)| *b == (i, j)).map(|&(_, s)| s)
    };
    let new_p = Painting::from_fn(&iota_dn, |i, j| lookup(&p_set, i, j).or_else(|| p.get(i, j)))?;
    let new_q = Painting::from_fn(&jmath_dn, |i, j| lookup(&q_set, i, j).or_else(|| t.q.get(i, j)))?;
    Some(PaintedBipartition::new(new_p, new_q, t.gamma))
}

/// The `C̃` shift exchanges the first columns, trading `s ↔ r` and `c ↔ d`
/// between the two sides; it has the same shape in both directions.
fn shift_ct(t: &PaintedBipartition) -> Option<PaintedBipartition> {
    use Symbol::*;
    let (iota, jmath) = (t.iota(), t.jmath());
    let iota_new = with_first_col(&iota, jmath.c(1))?;
    let jmath_new = with_first_col(&jmath, iota.c(1))?;
    let new_p = Painting::from_fn(&iota_new, |i, j| match (j, t.q.get(i, j)) {
        (1, Some(R)) => Some(S),
        (1, Some(D)) => Some(C),
        _ => t.p.get(i, j),
    })?;
    let new_q = Painting::from_fn(&jmath_new, |i, j| match (j, t.p.get(i, j)) {
        (1, Some(S)) => Some(R),
        (1, Some(C)) => Some(D),
        _ => t.q.get(i, j),
    })?;
    Some(PaintedBipartition::new(new_p, new_q, t.gamma))
}

fn is_dot_or_s(s: Symbol) -> bool {
    matches!(s, Symbol::Dot | Symbol::S)
}

/// `∇_naive`: drop the first column on one side and repaint the `{•, s}` region.
pub fn naive_descent(t: &PaintedBipartition) -> Result<PaintedBipartition, DescentError> {
    let star = t.star();
    let target = howe_dual(star)?;
    let gamma = match t.gamma {
        Gamma::Ct if t.p.column(1).contains(&Symbol::C) => Gamma::BMinus,
        Gamma::Ct => Gamma::BPlus,
        _ => Gamma::over(target).map_err(|_| DescentError::WrongLabel(target))?[0],
    };
    let (iota, jmath) = (t.iota(), t.jmath());
    let repaint_left = matches!(star, Label::B | Label::C | Label::Cstar);
    let (p_src, q_src, iota_new, jmath_new) = if repaint_left {
        (t.p.clone(), t.q.drop_first_col(), iota, jmath.drop_first_col())
    } else {
        (t.p.drop_first_col(), t.q.clone(), iota.drop_first_col(), jmath)
    };
    let in_region = |pt: &Painting, i: usize, j: usize| pt.get(i, j).is_some_and(is_dot_or_s);
    // The side whose target alphabet lacks `s` gets `•` on its whole region;
    // the other side copies those dots and fills the rest of its region with `s`.
    let (new_p, new_q) = if repaint_left {
        let q = Painting::from_fn(&jmath_new, |i, j| {
            let s = q_src.get(i, j)?;
            Some(if is_dot_or_s(s) { Symbol::Dot } else { s })
        });
        let p = Painting::from_fn(&iota_new, |i, j| {
            let s = p_src.get(i, j)?;
            Some(match (is_dot_or_s(s), in_region(&q_src, i, j)) {
                (false, _) => s,
                (true, true) => Symbol::Dot,
                (true, false) => Symbol::S,
            })
        });
        (p, q)
    } else {
        let p = Painting::from_fn(&iota_new, |i, j| {
            let s = p_src.get(i, j)?;
            Some(if is_dot_or_s(s) { Symbol::Dot } else { s })
        });
        let q = Painting::from_fn(&jmath_new, |i, j| {
            let s = q_src.get(i, j)?;
            Some(match (is_dot_or_s(s), in_region(&p_src, i, j)) {
                (false, _) => s,
                (true, true) => Symbol::Dot,
                (true, false) => Symbol::S,
            })
        });
        (p, q)
    };
    let (Some(p), Some(q)) = (new_p, new_q) else {
        return Err(violated("naive descent of an ill-formed painted bipartition"));
    };
    let out = PaintedBipartition::new(p, q, gamma);
    if out.is_valid() {
        Ok(out)
    } else {
        Err(violated(format!("{t} has no naive descent")))
    }
}

fn check_member(t: &PaintedBipartition, d: &YoungDiagram, wp: &PPSubset) -> Result<(), DescentError> {
    let cd = cell_diagrams(t.star(), d, wp).map_err(|e| violated(e.to_string()))?;
    if !t.is_valid() || t.iota() != cd.iota || t.jmath() != cd.jmath {
        return Err(violated(format!("{t} is not in PBP_{}({d}, {wp})", t.star())));
    }
    Ok(())
}

/// The descent `∇τ ∈ PBP_{⋆′}(∇̌Ǒ, ∇̌℘)` of `τ ∈ PBP_⋆(Ǒ, ℘)`.
pub fn descend(t: &PaintedBipartition, d: &YoungDiagram, wp: &PPSubset) -> Result<PaintedBipartition, DescentError> {
    use Symbol::*;
    check_member(t, d, wp)?;
    let star = t.star();
    let iota = t.iota();
    let jmath = t.jmath();
    let out = match star {
        Label::B => {
            let mut out = naive_descent(t)?;
            let q_at = |i: usize| t.q.get(i, 1);
            if t.gamma == Gamma::BPlus && !wp.contains(2) && d.r(2) > 0 && matches!(q_at(iota.c(1)), Some(R | D)) {
                let row = out.iota().c(1);
                out.p.set(row, 1, S);
            } else if t.gamma == Gamma::BPlus && wp.contains(2) && matches!(q_at(jmath.c(2)), Some(R | D)) {
                let row = out.jmath().c(1);
                out.q.set(row, 1, R);
            }
            out
        }
        Label::D => {
            let mut out = naive_descent(t)?;
            let (c1, c2) = (iota.c(1), iota.c(2));
            let p_at = |i: usize, j: usize| t.p.get(i, j);
            let case_a = d.r(2) == d.r(3)
                && d.r(2) > 0
                && p_at(c2, 2) == Some(C)
                && (c2..=c1).all(|i| matches!(p_at(i, 1), Some(R | D)));
            if case_a {
                let row = out.iota().c(1);
                out.p.set(row, 1, R);
            } else if wp.contains(2) && c2 >= 2 && matches!(p_at(c2 - 1, 1), Some(R | C)) {
                let row = out.iota().c(1);
                let carried = p_at(c2 - 1, 1).expect("checked above");
                out.p.set(row - 1, 1, R);
                out.p.set(row, 1, carried);
            }
            out
        }
        Label::C | Label::Ct | Label::Cstar | Label::Dstar => {
            if wp.contains(1) {
                if !matches!(star, Label::C | Label::Ct) {
                    return Err(violated("(1,2) ∈ ℘ only occurs for C and C̃"));
                }
                naive_descent(&shape_shift(t, wp, ShiftDirection::Down)?)?
            } else {
                naive_descent(t)?
            }
        }
        l => return Err(DescentError::WrongLabel(l)),
    };
    debug_assert!(
        check_member(&out, &dual_descent_orbit(star, d), &dual_descent_wp(wp)).is_ok(),
        "descent of {t} left the target set: {out}"
    );
    Ok(out)
}

pub fn descent_step(t: &PaintedBipartition, d: &YoungDiagram, wp: &PPSubset) -> Result<DescentStep, DescentError> {
    let output = descend(t, d, wp)?;
    Ok(DescentStep {
        input: t.clone(),
        wp: wp.clone(),
        star_out: output.star(),
        output,
        wp_out: dual_descent_wp(wp),
        orbit_out: dual_descent_orbit(t.star(), d),
    })
}

/// Iterated descent until the orbit becomes empty.
pub fn descent_chain(
    t: &PaintedBipartition,
    d: &YoungDiagram,
    wp: &PPSubset,
) -> Result<Vec<DescentStep>, DescentError> {
    let mut steps: Vec<DescentStep> = Vec::new();
    let (mut t, mut d, mut wp) = (t.clone(), d.clone(), wp.clone());
    loop {
        let step = descent_step(&t, &d, &wp)?;
        let done = step.orbit_out.is_empty();
        (t, d, wp) = (step.output.clone(), step.orbit_out.clone(), step.wp_out.clone());
        steps.push(step);
        if done {
            return Ok(steps);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tail {
    pub pbp: PaintedBipartition,
    /// Bottom symbol of the tail column; absent for `C*`.
    pub x: Option<Symbol>,
    pub eps: u8,
}

/// The tail orbit `Ǒ_t` and its length `k`.
pub fn tail_orbit(star: Label, d: &YoungDiagram) -> Result<(Label, YoungDiagram, usize), DescentError> {
    let (r1, r2) = (d.r(1), d.r(2));
    match star {
        Label::B | Label::D => {
            let k = (r1 - r2) / 2 + 1;
            Ok((Label::D, YoungDiagram::from_rows([2 * k - 1, 1]), k))
        }
        Label::Cstar => {
            let k = (r1 - r2).saturating_sub(1) / 2;
            Ok((Label::Cstar, YoungDiagram::from_rows([2 * k + 1]), k))
        }
        l => Err(DescentError::WrongLabel(l)),
    }
}

/// The tail `τ_t`. The overhang rows are located with the first-column
/// lengths of `(ι_∅, ȷ_∅)`, which agree with those of `τ` unless `(2,3) ∈ ℘`.
pub fn tail(t: &PaintedBipartition, d: &YoungDiagram) -> Result<Tail, DescentError> {
    use Symbol::*;
    let star = t.star();
    if !matches!(star, Label::B | Label::D | Label::Cstar) {
        return Err(DescentError::WrongLabel(star));
    }
    let base = cell_diagrams(star, d, &PPSubset::empty()).map_err(|e| violated(e.to_string()))?;
    let (ci, cj) = (base.iota.c(1), base.jmath.c(1));
    let mut multiset: Vec<Symbol> = match star {
        Label::B => {
            let mut m: Vec<Symbol> = (ci + 1..=cj).filter_map(|j| t.q.get(j, 1)).collect();
            let bottom = (ci > 0).then(|| t.q.get(ci, 1)).flatten();
            m.push(match (t.gamma, bottom) {
                (Gamma::BPlus, None | Some(Dot | S)) => C,
                (Gamma::BMinus, None | Some(Dot | S)) => S,
                (_, Some(s)) => s,
                _ => unreachable!("B-type tag"),
            });
            m
        }
        Label::D => {
            let mut m: Vec<Symbol> = (cj + 2..=ci).filter_map(|j| t.p.get(j, 1)).collect();
            let extra = if d.is_empty() {
                D
            } else if d.r(2) == d.r(3)
                && d.r(2) > 0
                && (cj + 1..=ci).all(|i| matches!(t.p.get(i, 1), Some(R | D)))
                && (t.p.get(cj + 1, 1), t.p.get(cj + 1, 2)) == (Some(R), Some(C))
            {
                C
            } else {
                t.p.get(cj + 1, 1).ok_or_else(|| violated("first column of P too short for a tail"))?
            };
            m.push(extra);
            m
        }
        Label::Cstar => (ci + 1..=cj).filter_map(|j| t.q.get(j, 1)).collect(),
        l => return Err(DescentError::WrongLabel(l)),
    };
    multiset.sort();
    let column = Painting::from_rows(multiset.iter().map(|&s| vec![s]).collect()).expect("single column");
    let pbp = match star {
        Label::Cstar => PaintedBipartition::new(Painting::empty(), column, Gamma::Cstar),
        _ => PaintedBipartition::new(column, Painting::empty(), Gamma::D),
    };
    if !pbp.is_valid() {
        return Err(violated(format!("tail {pbp} of {t} is not a painted bipartition")));
    }
    let x = match star {
        Label::Cstar => None,
        _ => multiset.last().copied(),
    };
    let eps = u8::from(x != Some(D));
    Ok(Tail { pbp, x, eps })
}

/// `τ ↦ (∇²τ, τ_t)` for `⋆ ∈ {B, D, C*}`.
pub fn double_descent(
    t: &PaintedBipartition,
    d: &YoungDiagram,
    wp: &PPSubset,
) -> Result<(PaintedBipartition, Tail), DescentError> {
    let star = t.star();
    if !matches!(star, Label::B | Label::D | Label::Cstar) {
        return Err(DescentError::WrongLabel(star));
    }
    if star == Label::D && d.is_empty() {
        return Err(violated("double descent of the empty D orbit"));
    }
    if star != Label::Cstar && d.r(2) == 0 {
        return Err(violated("double descent needs a second row"));
    }
    let once = descend(t, d, wp)?;
    let d1 = dual_descent_orbit(star, d);
    let twice = descend(&once, &d1, &dual_descent_wp(wp))?;
    Ok((twice, tail(t, d)?))
}

//! Exhaustive property suites over all orbits up to a size bound.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::cells::{primitive_pairs, PPSubset};
use crate::count::{pap_ar_count, unip_count_verified};
use crate::descent::{descend, dual_descent_orbit, dual_descent_wp, howe_dual};
use crate::diagram::{partitions, YoungDiagram};
use crate::duality::{bv_dimension_from_cells, bv_dual, bv_dual_from_split};
use crate::genfun::{gf, BivariatePoly};
use crate::paint::{enumerate_pap, enumerate_pbp, PaintedBipartition};
use crate::parity::{good_parity, is_very_even, real_forms, Label, OrbitSpec, Variant};

/// Outcome of one suite: how many cases ran and what went wrong.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

type Case = Result<(), String>;

fn specs(star: Label, max: usize) -> Vec<OrbitSpec> {
    let mut out: Vec<OrbitSpec> =
        (0..=max).flat_map(partitions).filter_map(|o| OrbitSpec::new_default(star, o).ok()).collect();
    let extra: Vec<OrbitSpec> = out
        .iter()
        .filter(|s| s.variant == Variant::I && is_very_even(&s.d))
        .map(|s| OrbitSpec { variant: Variant::II, ..s.clone() })
        .collect();
    out.extend(extra);
    out
}

fn good_orbits(star: Label, max: usize) -> Vec<YoungDiagram> {
    specs(star, max)
        .into_iter()
        .filter(|s| s.variant != Variant::II && s.d.rows().iter().all(|&r| good_parity(r, star, s.d.size())))
        .map(|s| s.d)
        .collect()
}

fn suite(name: &'static str, cases: Vec<Case>) -> SuiteResult {
    let failures = cases.iter().filter_map(|c| c.as_ref().err().cloned()).collect();
    SuiteResult { name, cases: cases.len(), failures }
}

fn signature_poly(all: &[PaintedBipartition]) -> BivariatePoly {
    all.iter().fold(BivariatePoly::zero(), |acc, t| {
        let s = t.signature();
        &acc + &BivariatePoly::monomial(s.p as u32, s.q as u32, 1)
    })
}

fn good_pairs(max: usize, labels: &[Label]) -> Vec<(Label, YoungDiagram, PPSubset)> {
    labels
        .iter()
        .flat_map(|&star| {
            good_orbits(star, max)
                .into_iter()
                .flat_map(move |o| primitive_pairs(star, &o).subsets().into_iter().map(move |wp| (star, o.clone(), wp)))
        })
        .collect()
}

fn wp_independence(max: usize) -> SuiteResult {
    let labels = [Label::B, Label::C, Label::Ct, Label::D];
    let cases = good_pairs(max, &labels)
        .into_par_iter()
        .map(|(star, o, wp)| {
            let with = signature_poly(&enumerate_pbp(star, &o, &wp).map_err(|e| e.to_string())?);
            let without = signature_poly(&enumerate_pbp(star, &o, &PPSubset::empty()).map_err(|e| e.to_string())?);
            (with == without).then_some(()).ok_or_else(|| format!("{star} {o} {wp}"))
        })
        .collect();
    suite("wp_independence", cases)
}

fn gf_vs_enumeration(max: usize) -> SuiteResult {
    let cases = good_pairs(max, &Label::BCD)
        .into_par_iter()
        .map(|(star, o, wp)| {
            let all = enumerate_pbp(star, &o, &wp).map_err(|e| e.to_string())?;
            let f = gf(star, &o, &wp, None).map_err(|e| e.to_string())?;
            let graded = !matches!(star, Label::B | Label::D | Label::Cstar) || f == signature_poly(&all);
            (graded && f.total() == BigInt::from(all.len())).then_some(()).ok_or_else(|| format!("{star} {o} {wp}"))
        })
        .collect();
    suite("gf_vs_enumeration", cases)
}

fn descent_targets(max: usize) -> SuiteResult {
    let cases = good_pairs(max, &Label::BCD)
        .into_par_iter()
        .map(|(star, o, wp)| {
            let fail = |why: &str| format!("{star} {o} {wp}: {why}");
            let dual = howe_dual(star).map_err(|e| fail(&e.to_string()))?;
            let target: BTreeSet<PaintedBipartition> =
                enumerate_pbp(dual, &dual_descent_orbit(star, &o), &dual_descent_wp(&wp))
                    .map_err(|e| fail(&e.to_string()))?
                    .into_iter()
                    .collect();
            let source = enumerate_pbp(star, &o, &wp).map_err(|e| fail(&e.to_string()))?;
            let mut image = BTreeSet::new();
            for t in &source {
                let out = descend(t, &o, &wp).map_err(|e| fail(&e.to_string()))?;
                if !target.contains(&out) {
                    return Err(fail(&format!("{t} leaves the target")));
                }
                image.insert(out);
            }
            let injective = matches!(star, Label::C | Label::Ct | Label::Dstar);
            if injective && image.len() != source.len() {
                return Err(fail("not injective"));
            }
            Ok(())
        })
        .collect();
    suite("descent_targets", cases)
}

fn duality(max: usize) -> SuiteResult {
    let labels = Label::BCD.into_iter().chain([Label::AR, Label::AH, Label::A, Label::At]);
    let all: Vec<OrbitSpec> = labels.flat_map(|star| specs(star, max)).collect();
    let cases = all
        .into_par_iter()
        .map(|s| {
            let fail = |why: String| format!("{} {} {:?}: {why}", s.star, s.d, s.variant);
            let dual = bv_dual(&s).map_err(|e| fail(e.to_string()))?;
            let dim = dual.orbit_dim(s.star.group_family()).map_err(|e| fail(e.to_string()))?;
            let expected = bv_dimension_from_cells(&s).map_err(|e| fail(e.to_string()))?;
            if dim != expected {
                return Err(fail(format!("dimension {dim} != {expected}")));
            }
            if !s.star.is_a_family() && bv_dual_from_split(&s).map_err(|e| fail(e.to_string()))? != dual {
                return Err(fail("split identity".into()));
            }
            Ok(())
        })
        .collect();
    suite("duality", cases)
}

fn count_routes(max: usize) -> SuiteResult {
    let all: Vec<(OrbitSpec, _)> = Label::REAL
        .into_iter()
        .flat_map(|star| specs(star, max))
        .flat_map(|s| {
            let n = if s.star.is_a_family() { s.d.size() } else { s.rank() };
            real_forms(s.star, n).into_iter().map(move |g| (s.clone(), g))
        })
        .collect();
    let cases = all
        .into_par_iter()
        .map(|(s, g)| {
            let report = unip_count_verified(&g, &s).map_err(|e| format!("{g} {}: {e}", s.d))?;
            report
                .consistent()
                .then_some(())
                .ok_or_else(|| format!("{g} {} {:?}: {:?}", s.d, s.variant, report.cross_checks))
        })
        .collect();
    suite("count_routes", cases)
}

fn gl_product_formula(max: usize) -> SuiteResult {
    let cases = (0..=max)
        .flat_map(partitions)
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|d| {
            let direct = enumerate_pap(Label::AR, &d).map_err(|e| e.to_string())?.len();
            (pap_ar_count(&d) == BigInt::from(direct)).then_some(()).ok_or_else(|| format!("{d}"))
        })
        .collect();
    suite("gl_product_formula", cases)
}

/// Runs every suite on orbits with at most `max_size` boxes.
pub fn run_checks(max_size: usize) -> Vec<SuiteResult> {
    vec![
        gl_product_formula(max_size),
        wp_independence(max_size),
        gf_vs_enumeration(max_size),
        descent_targets(max_size),
        duality(max_size),
        count_routes(max_size),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sizes_pass() {
        for r in run_checks(6) {
            assert!(r.passed(), "{}: {:?}", r.name, r.failures);
            assert!(r.cases > 0, "{} ran nothing", r.name);
        }
    }
}

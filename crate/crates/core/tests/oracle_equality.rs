mod common;

use common::all_orbits;
use unip::cells::primitive_pairs;
use unip::oracle::{cell_multiplicity_sum, gl_cell_multiplicity};
use unip::paint::{enumerate_pap, enumerate_pbp_bad, enumerate_pbp_for_group};
use unip::parity::{is_very_even, relevance, split_parity, GroupForm, Variant};
use unip::{Label, OrbitSpec};

const MAX_RANK: usize = 6;

fn groups(star: Label, n: usize) -> Vec<GroupForm> {
    match star {
        Label::B => (0..=2 * n + 1).map(|p| GroupForm::with_signature(star, p, 2 * n + 1 - p)).collect(),
        Label::D => (0..=2 * n).map(|p| GroupForm::with_signature(star, p, 2 * n - p)).collect(),
        Label::Cstar => (0..=n).map(|a| GroupForm::with_signature(star, 2 * a, 2 * (n - a))).collect(),
        _ => vec![GroupForm::with_rank(star, n)],
    }
}

fn specs(star: Label) -> Vec<OrbitSpec> {
    let max = 2 * MAX_RANK + 1;
    let mut out: Vec<OrbitSpec> = all_orbits(star, max).into_iter().filter(|s| s.rank() <= MAX_RANK).collect();
    let extra: Vec<OrbitSpec> = out
        .iter()
        .filter(|s| s.variant == Variant::I && is_very_even(&s.d))
        .map(|s| OrbitSpec { variant: Variant::II, ..s.clone() })
        .collect();
    out.extend(extra);
    out
}

/// `♯PBP*(Ǒ_b) · Σ_℘ ♯PBP_{G_g}(Ǒ_g, ℘)`, with `G_g` read off the signature shift.
fn painted_product(group: &GroupForm, spec: &OrbitSpec) -> u64 {
    if !relevance(group, spec) {
        return 0;
    }
    let split = split_parity(spec);
    let g_good = match (group.label, group.signature()) {
        (Label::B | Label::D | Label::Cstar, Some((p, q))) => {
            GroupForm::with_signature(group.label, p - split.n_b, q - split.n_b)
        }
        _ => GroupForm::with_rank(group.label, split.n_g),
    };
    let bad = enumerate_pbp_bad(spec.star, &split.d_b).unwrap().len() as u64;
    let good: usize = primitive_pairs(spec.star, &split.d_g)
        .subsets()
        .iter()
        .map(|wp| enumerate_pbp_for_group(&g_good, &split.d_g, wp).unwrap().len())
        .sum();
    bad * good as u64
}

#[test]
fn weyl_oracle_matches_painted_bipartitions() {
    for star in Label::BCD {
        let mut checked = 0;
        for s in specs(star) {
            for g in groups(star, s.rank()) {
                let oracle = cell_multiplicity_sum(&g, &s).unwrap();
                assert_eq!(oracle, painted_product(&g, &s), "{star} {} {:?} over {g}", s.d, s.variant);
                checked += 1;
            }
        }
        assert!(checked > 0);
    }
}

#[test]
fn dstar_non_relevant_vanishes() {
    for s in specs(Label::Dstar) {
        let g = GroupForm::with_rank(Label::Dstar, s.rank());
        if !relevance(&g, &s) {
            assert_eq!(cell_multiplicity_sum(&g, &s).unwrap(), 0);
        }
    }
}

#[test]
fn gl_oracle_matches_pap() {
    for star in [Label::AR, Label::AH] {
        for s in all_orbits(star, MAX_RANK) {
            let pap = enumerate_pap(star, &s.d).unwrap().len() as u64;
            assert_eq!(gl_cell_multiplicity(&s).unwrap(), pap, "{star} {}", s.d);
        }
    }
}

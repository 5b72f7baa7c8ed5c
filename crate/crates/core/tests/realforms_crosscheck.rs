mod common;

use common::good_orbits;
use unip::cells::PPSubset;
use unip::duality::bv_dual;
use unip::paint::{enumerate_pap, enumerate_pbp_for_group, pap_signature};
use unip::parity::GroupForm;
use unip::realforms::count_real_orbits;
use unip::{Label, OrbitSpec};

#[test]
fn unitary_pap_counts_match_signed_diagrams() {
    let mut nonzero = 0;
    for star in [Label::A, Label::At] {
        for o in good_orbits(star, 8) {
            let spec = OrbitSpec::new_default(star, o.clone()).unwrap();
            let dual = bv_dual(&spec).unwrap();
            let paps = enumerate_pap(star, &o).unwrap();
            let n = o.size();
            for p in 0..=n {
                let group = GroupForm::with_signature(star, p, n - p);
                let by_pap = paps.iter().filter(|x| (pap_signature(x).p, pap_signature(x).q) == (p, n - p)).count();
                let real = count_real_orbits(&group, &dual).unwrap();
                assert_eq!(by_pap as u64, real, "{star} {o} over {group}");
                nonzero += usize::from(real > 0);
            }
        }
    }
    assert!(nonzero > 100, "only {nonzero} nonzero comparisons");
}

fn quaternionic_groups(star: Label, n: usize) -> Vec<GroupForm> {
    match star {
        Label::Cstar => (0..=n).map(|a| GroupForm::with_signature(star, 2 * a, 2 * (n - a))).collect(),
        _ => vec![GroupForm::with_rank(star, n)],
    }
}

#[test]
fn quaternionic_pbp_counts_match_signed_diagrams() {
    let mut nonzero = 0;
    for star in [Label::Cstar, Label::Dstar] {
        for o in good_orbits(star, 13) {
            let spec = OrbitSpec::new_default(star, o.clone()).unwrap();
            if spec.rank() > 6 {
                continue;
            }
            let dual = bv_dual(&spec).unwrap();
            for group in quaternionic_groups(star, spec.rank()) {
                let pbp = enumerate_pbp_for_group(&group, &o, &PPSubset::empty()).unwrap().len() as u64;
                let real = count_real_orbits(&group, &dual).unwrap();
                assert_eq!(pbp, real, "{star} {o} over {group}, dual {dual}");
                nonzero += usize::from(real > 0);
            }
        }
    }
    assert!(nonzero > 20, "only {nonzero} nonzero comparisons");
}

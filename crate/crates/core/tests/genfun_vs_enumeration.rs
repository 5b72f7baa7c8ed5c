mod common;

use num_bigint::BigInt;
use num_traits::Zero;

use common::{good_orbits, wp_subsets};
use unip::descent::tail;
use unip::genfun::{gf, BivariatePoly, Bucket};
use unip::paint::{enumerate_pbp, Symbol};
use unip::Label;

const MAX: usize = 12;

fn bucket_of(x: Option<Symbol>) -> Bucket {
    match x {
        Some(Symbol::D) => Bucket::D,
        Some(Symbol::C | Symbol::R) => Bucket::CR,
        Some(Symbol::S) => Bucket::S,
        other => panic!("unexpected tail symbol {other:?}"),
    }
}

#[test]
fn bucketed_gf_matches_enumeration_for_b_and_d() {
    for star in [Label::B, Label::D] {
        for o in good_orbits(star, MAX) {
            for wp in wp_subsets(star, &o) {
                let mut expected = [BivariatePoly::zero(), BivariatePoly::zero(), BivariatePoly::zero()];
                for t in enumerate_pbp(star, &o, &wp).unwrap() {
                    let s = t.signature();
                    let b = bucket_of(tail(&t, &o).unwrap().x);
                    expected[b as usize] = &expected[b as usize] + &BivariatePoly::monomial(s.p as u32, s.q as u32, 1);
                }
                for b in Bucket::ALL {
                    assert_eq!(gf(star, &o, &wp, Some(b)).unwrap(), expected[b as usize], "{star} {o} {wp} bucket {b}");
                }
            }
        }
    }
}

#[test]
fn gf_matches_enumeration_for_all_labels() {
    for star in Label::BCD {
        for o in good_orbits(star, MAX) {
            for wp in wp_subsets(star, &o) {
                let all = enumerate_pbp(star, &o, &wp).unwrap();
                let f = gf(star, &o, &wp, None).unwrap();
                if matches!(star, Label::B | Label::D | Label::Cstar) {
                    let mut expected = BivariatePoly::zero();
                    for t in &all {
                        let s = t.signature();
                        expected = &expected + &BivariatePoly::monomial(s.p as u32, s.q as u32, 1);
                    }
                    assert_eq!(f, expected, "{star} {o} {wp}");
                }
                assert_eq!(f.total(), BigInt::from(all.len()), "{star} {o} {wp}");
                assert!(f.terms().all(|(_, c)| c >= &BigInt::zero()));
            }
        }
    }
}

#[test]
fn gf_is_independent_of_wp() {
    for star in [Label::B, Label::C, Label::Ct, Label::D] {
        for o in good_orbits(star, 20) {
            let subsets = wp_subsets(star, &o);
            let base = gf(star, &o, &subsets[0], None).unwrap();
            for wp in &subsets[1..] {
                assert_eq!(gf(star, &o, wp, None).unwrap(), base, "{star} {o} {wp}");
            }
        }
    }
}

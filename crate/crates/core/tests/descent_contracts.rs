mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::{good_orbits, wp_subsets};
use unip::cells::is_quasi_distinguished;
use unip::descent::{
    descend, double_descent, dual_descent_orbit, dual_descent_wp, howe_dual, shape_shift, tail, tail_orbit,
    ShiftDirection,
};
use unip::paint::{enumerate_pbp, PaintedBipartition, Symbol};
use unip::{Label, YoungDiagram};

const MAX: usize = 12;

fn descend_all(
    star: Label,
    o: &YoungDiagram,
    wp: &unip::cells::PPSubset,
) -> Vec<(PaintedBipartition, PaintedBipartition)> {
    enumerate_pbp(star, o, wp)
        .unwrap()
        .into_iter()
        .map(|t| {
            let out = descend(&t, o, wp).unwrap_or_else(|e| panic!("{star} {o} {wp} {t}: {e}"));
            (t, out)
        })
        .collect()
}

#[test]
fn descent_lands_in_target_set() {
    for star in Label::BCD {
        for o in good_orbits(star, MAX) {
            for wp in wp_subsets(star, &o) {
                let target: BTreeSet<PaintedBipartition> =
                    enumerate_pbp(howe_dual(star).unwrap(), &dual_descent_orbit(star, &o), &dual_descent_wp(&wp))
                        .unwrap()
                        .into_iter()
                        .collect();
                for (t, out) in descend_all(star, &o, &wp) {
                    assert!(target.contains(&out), "{star} {o} {wp}: {t} -> {out}");
                }
            }
        }
    }
}

#[test]
fn descent_of_c_types_is_bijective_or_misses_s_tails() {
    for star in [Label::C, Label::Ct, Label::Dstar] {
        for o in good_orbits(star, MAX) {
            for wp in wp_subsets(star, &o) {
                let (o1, wp1) = (dual_descent_orbit(star, &o), dual_descent_wp(&wp));
                let target = enumerate_pbp(howe_dual(star).unwrap(), &o1, &wp1).unwrap();
                let image: BTreeSet<PaintedBipartition> =
                    descend_all(star, &o, &wp).into_iter().map(|(_, out)| out).collect();
                let source_len = enumerate_pbp(star, &o, &wp).unwrap().len();
                assert_eq!(image.len(), source_len, "{star} {o} {wp}: not injective");
                let expected: BTreeSet<PaintedBipartition> = if star == Label::Dstar || o.r(1) > o.r(2) {
                    target.into_iter().collect()
                } else {
                    target.into_iter().filter(|t| tail(t, &o1).unwrap().x != Some(Symbol::S)).collect()
                };
                assert_eq!(image, expected, "{star} {o} {wp}");
            }
        }
    }
}

#[test]
fn descent_with_signature_and_eps_is_injective() {
    for star in [Label::B, Label::D, Label::Cstar] {
        for o in good_orbits(star, MAX) {
            for wp in wp_subsets(star, &o) {
                let mut seen = BTreeMap::new();
                for (t, out) in descend_all(star, &o, &wp) {
                    let sig = t.signature();
                    let eps = tail(&t, &o).unwrap().eps;
                    if let Some(prev) = seen.insert((out, sig.p, sig.q, eps), t.clone()) {
                        panic!("{star} {o} {wp}: {prev} and {t} collide");
                    }
                }
            }
        }
    }
}

#[test]
fn tails_have_the_tail_orbit_shape() {
    for star in [Label::B, Label::D, Label::Cstar] {
        for o in good_orbits(star, MAX) {
            let (tstar, to, k) = tail_orbit(star, &o).unwrap();
            let tails: BTreeSet<PaintedBipartition> =
                enumerate_pbp(tstar, &to, &Default::default()).unwrap().into_iter().collect();
            for wp in wp_subsets(star, &o) {
                for t in enumerate_pbp(star, &o, &wp).unwrap() {
                    let tl = tail(&t, &o).unwrap_or_else(|e| panic!("{star} {o} {wp} {t}: {e}"));
                    assert_eq!(tl.pbp.size(), k, "{star} {o} {wp} {t}");
                    assert!(tails.contains(&tl.pbp), "{star} {o} {wp} {t}: {}", tl.pbp);
                }
            }
        }
    }
}

#[test]
fn double_descent_matches_the_product_description() {
    for star in [Label::B, Label::D, Label::Cstar] {
        for o in good_orbits(star, MAX) {
            if (star == Label::D && o.is_empty())
                || (star != Label::Cstar && o.r(2) == 0)
                || (star == Label::Cstar && !is_quasi_distinguished(star, &o))
            {
                continue;
            }
            let (tstar, to, _) = tail_orbit(star, &o).unwrap();
            let tails = enumerate_pbp(tstar, &to, &Default::default()).unwrap();
            let o1 = dual_descent_orbit(star, &o);
            let o2 = dual_descent_orbit(howe_dual(star).unwrap(), &o1);
            for wp in wp_subsets(star, &o).into_iter().filter(|wp| star != Label::Cstar || wp.is_empty()) {
                let wp2 = dual_descent_wp(&dual_descent_wp(&wp));
                let children = enumerate_pbp(star, &o2, &wp2).unwrap();
                let image: BTreeSet<(PaintedBipartition, PaintedBipartition)> = enumerate_pbp(star, &o, &wp)
                    .unwrap()
                    .iter()
                    .map(|t| {
                        let (dd, tl) = double_descent(t, &o, &wp).unwrap();
                        (dd, tl.pbp)
                    })
                    .collect();
                let source = enumerate_pbp(star, &o, &wp).unwrap().len();
                assert_eq!(image.len(), source, "{star} {o} {wp}: not injective");
                let mut expected = BTreeSet::new();
                for c in &children {
                    for t0 in &tails {
                        let keep = if star == Label::Cstar || o.r(2) > o.r(3) {
                            true
                        } else {
                            let x = tail(c, &o2).unwrap().x;
                            x == Some(Symbol::D)
                                || (matches!(x, Some(Symbol::R | Symbol::C))
                                    && t0.p.symbols().any(|s| matches!(s, Symbol::S | Symbol::C)))
                        };
                        if keep {
                            expected.insert((c.clone(), t0.clone()));
                        }
                    }
                }
                assert_eq!(image, expected, "{star} {o} {wp}");
            }
        }
    }
}

#[test]
fn shape_shifts_are_mutually_inverse() {
    for star in [Label::C, Label::Ct] {
        for o in good_orbits(star, MAX) {
            for wp in wp_subsets(star, &o) {
                if wp.contains(1) || !unip::cells::primitive_pairs(star, &o).contains(1) {
                    continue;
                }
                let mut up_wp = wp.clone();
                up_wp.0.insert(1);
                let source = enumerate_pbp(star, &o, &wp).unwrap();
                let target: BTreeSet<PaintedBipartition> =
                    enumerate_pbp(star, &o, &up_wp).unwrap().into_iter().collect();
                let mut image = BTreeSet::new();
                for t in &source {
                    let up = shape_shift(t, &wp, ShiftDirection::Up).unwrap_or_else(|e| panic!("{o} {wp} {t}: {e}"));
                    assert!(target.contains(&up), "{o} {wp}: {t} -> {up}");
                    assert_eq!(&shape_shift(&up, &up_wp, ShiftDirection::Down).unwrap(), t);
                    assert_eq!(up.group(), t.group());
                    image.insert(up);
                }
                assert_eq!(image, target, "{star} {o} {wp}");
            }
        }
    }
}

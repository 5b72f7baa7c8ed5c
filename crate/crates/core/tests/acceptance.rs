//! Acceptance criteria, one PASS/FAIL line each. Exits nonzero on any failure.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;

use common::{all_orbits, good_orbits, wp_subsets};
use unip::cells::{cell_diagrams, is_quasi_distinguished, primitive_pairs, PPSubset};
use unip::count::unip_count;
use unip::descent::{
    descend, double_descent, dual_descent_orbit, dual_descent_wp, howe_dual, naive_descent, shape_shift, tail,
    tail_orbit, ShiftDirection,
};
use unip::diagram::{partitions, AlgebraFamily};
use unip::duality::{bv_dimension_from_cells, bv_dual, bv_dual_from_split};
use unip::genfun::{gf, BivariatePoly};
use unip::oracle::cell_multiplicity_sum;
use unip::paint::{
    enumerate_pap, enumerate_pbp, enumerate_pbp_bad, enumerate_pbp_for_group, pap_signature, PaintedBipartition, Symbol,
};
use unip::parity::{is_very_even, relevance, split_parity, GroupForm, Variant};
use unip::realforms::count_real_orbits;
use unip::{Label, OrbitSpec, YoungDiagram};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn d(s: &str) -> YoungDiagram {
    s.parse().unwrap()
}

fn pbp(s: &str) -> PaintedBipartition {
    s.parse().unwrap()
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

/// Every orbit of size at most `max`, very even D-type diagrams in both variants.
fn specs(star: Label, max: usize) -> Vec<OrbitSpec> {
    let mut out = all_orbits(star, max);
    let extra: Vec<OrbitSpec> = out
        .iter()
        .filter(|s| s.variant == Variant::I && is_very_even(&s.d))
        .map(|s| OrbitSpec { variant: Variant::II, ..s.clone() })
        .collect();
    out.extend(extra);
    out
}

fn groups(star: Label, n: usize) -> Vec<GroupForm> {
    match star {
        Label::B => (0..=2 * n + 1).map(|p| GroupForm::with_signature(star, p, 2 * n + 1 - p)).collect(),
        Label::D => (0..=2 * n).map(|p| GroupForm::with_signature(star, p, 2 * n - p)).collect(),
        Label::Cstar => (0..=n).map(|a| GroupForm::with_signature(star, 2 * a, 2 * (n - a))).collect(),
        _ => vec![GroupForm::with_rank(star, n)],
    }
}

fn signature_poly(all: &[PaintedBipartition]) -> BivariatePoly {
    all.iter().fold(BivariatePoly::zero(), |acc, t| {
        let s = t.signature();
        &acc + &BivariatePoly::monomial(s.p as u32, s.q as u32, 1)
    })
}

fn sp4_example() -> Outcome {
    let start = Instant::now();
    let o = d("3,1,1");
    let group: GroupForm = "Sp4R".parse().unwrap();
    let pp = primitive_pairs(Label::C, &o);
    let elements: BTreeSet<String> = enumerate_pbp_for_group(&group, &o, &PPSubset::empty())
        .map_err(|e| e.to_string())?
        .iter()
        .map(ToString::to_string)
        .collect();
    let count = unip_count(&group, &OrbitSpec::new_default(Label::C, o.clone()).unwrap()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let expected: BTreeSet<String> = ["*|*|C", "r|s|C", "c|s|C", "d|s|C"].map(String::from).into();
    ensure!(pp.pairs() == vec![(1, 2)], "PP = {pp}");
    ensure!(elements == expected, "PBP_G = {elements:?}");
    ensure!(count.count == BigInt::from(8), "count {}", count.count);
    ensure!(elapsed < Duration::from_millis(1), "took {elapsed:?}");
    Ok(format!("PP {pp}, 4 elements, count 8 in {elapsed:?}"))
}

fn c_cell_example() -> Outcome {
    let o = d("5,3,3,3,3,1,1");
    let pp = primitive_pairs(Label::C, &o);
    ensure!(pp.pairs() == vec![(1, 2), (5, 6)], "PP = {pp}");
    let cd = cell_diagrams(Label::C, &o, &PPSubset::empty()).map_err(|e| e.to_string())?;
    ensure!(cd.iota == d("3,2") && cd.jmath == d("3,1"), "iota {} jmath {}", cd.iota, cd.jmath);
    Ok(format!("PP {pp}, iota {}, jmath {}", cd.iota, cd.jmath))
}

fn b_example() -> Outcome {
    let t = pbp("**/*/c|**d/*/d|B+");
    ensure!(t.is_valid(), "{t} does not validate");
    let g = t.group().to_string();
    ensure!(g == "SO(10,9)", "group {g}");
    let all = enumerate_pbp(Label::B, &d("6,6,2,2,2"), &PPSubset::empty()).map_err(|e| e.to_string())?;
    ensure!(all.contains(&t), "{t} not enumerated");
    Ok(format!("{t} over {g}"))
}

fn descent_examples() -> Outcome {
    let o = d("8,6,6,6,4,4,2");
    let t = pbp("***c/*sc/sc/c|***/*rd/dd|Ct");
    let source = enumerate_pbp(Label::Ct, &o, &PPSubset::empty()).map_err(|e| e.to_string())?;
    ensure!(source.contains(&t), "{t} not in PBP(Ǒ)");
    ensure!(t.group().to_string() == "Mp_36(R)", "group {}", t.group());
    let n = naive_descent(&t).map_err(|e| e.to_string())?;
    ensure!(n == pbp("**c/*c/c|**s/*rd/dd|B-"), "naive descent {n}");
    ensure!(n.group().to_string() == "SO(14,15)", "naive group {}", n.group());

    let o = d("7,7,7,3");
    let t = pbp("**/*s/*s/rc|**/*/*|D");
    ensure!(t.group().to_string() == "SO(11,13)", "group {}", t.group());
    let n = naive_descent(&t).map_err(|e| e.to_string())?;
    let full = descend(&t, &o, &PPSubset::empty()).map_err(|e| e.to_string())?;
    ensure!(n == pbp("*/*/*/c|*s/*/*|C"), "naive descent {n}");
    ensure!(full == pbp("*/*/*/r|*s/*/*|C"), "descent {full}");
    ensure!(n.group().to_string() == "Sp_16(R)" && full.group() == n.group(), "groups {} {}", n.group(), full.group());
    Ok("both displayed descents reproduced".into())
}

fn gl_product_formula() -> Outcome {
    let mut cases = 0;
    for o in (0..=10).flat_map(partitions) {
        let direct = enumerate_pap(Label::AR, &o).map_err(|e| e.to_string())?.len() as u64;
        let mut product = 1u64;
        let mut seen = BTreeSet::new();
        for &r in o.rows() {
            if seen.insert(r) {
                product *= 1 + o.multiplicity(r) as u64;
            }
        }
        ensure!(direct == product, "{o}: {direct} painted diagrams, product {product}");
        cases += 1;
    }
    Ok(format!("{cases} diagrams"))
}

fn wp_independence() -> Outcome {
    let mut cases = 0;
    for star in [Label::B, Label::C, Label::Ct, Label::D] {
        for o in good_orbits(star, 14) {
            let by_group = |wp: &PPSubset| -> Result<BTreeMap<String, usize>, String> {
                let mut m = BTreeMap::new();
                for t in enumerate_pbp(star, &o, wp).map_err(|e| e.to_string())? {
                    *m.entry(t.group().to_string()).or_insert(0) += 1;
                }
                Ok(m)
            };
            let base = by_group(&PPSubset::empty())?;
            for wp in wp_subsets(star, &o) {
                ensure!(by_group(&wp)? == base, "{star} {o} {wp}");
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (orbit, ℘) pairs"))
}

fn gf_equivalence() -> Outcome {
    let mut cases = 0;
    for star in Label::BCD {
        for o in good_orbits(star, 14) {
            for wp in wp_subsets(star, &o) {
                let all = enumerate_pbp(star, &o, &wp).map_err(|e| e.to_string())?;
                let f = gf(star, &o, &wp, None).map_err(|e| e.to_string())?;
                if matches!(star, Label::B | Label::D | Label::Cstar) {
                    ensure!(f == signature_poly(&all), "{star} {o} {wp}: gf {f}");
                }
                ensure!(f.total() == BigInt::from(all.len()), "{star} {o} {wp}: gf(1,1) {}", f.total());
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (orbit, ℘) pairs"))
}

/// `♯PBP*(Ǒ_b) · Σ_℘ ♯PBP_{G_g}(Ǒ_g, ℘)`.
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

fn weyl_oracle() -> Outcome {
    let mut cases = 0;
    let mut vanishing = 0;
    for star in Label::BCD {
        for s in specs(star, 13).into_iter().filter(|s| s.rank() <= 6) {
            for g in groups(star, s.rank()) {
                let oracle = cell_multiplicity_sum(&g, &s).map_err(|e| e.to_string())?;
                let painted = painted_product(&g, &s);
                ensure!(
                    oracle == painted,
                    "{star} {} {:?} over {g}: oracle {oracle}, painted {painted}",
                    s.d,
                    s.variant
                );
                if star == Label::Dstar && !relevance(&g, &s) {
                    ensure!(oracle == 0, "{} non-relevant but {oracle}", s.d);
                    vanishing += 1;
                }
                cases += 1;
            }
        }
    }
    ensure!(vanishing > 0, "no non-relevant D* orbit exercised");
    Ok(format!("{cases} (orbit, group) pairs, {vanishing} non-relevant D*"))
}

fn shape_shifts() -> Result<usize, String> {
    let mut cases = 0;
    for star in [Label::C, Label::Ct] {
        for o in good_orbits(star, 14) {
            if !primitive_pairs(star, &o).contains(1) {
                continue;
            }
            for wp in wp_subsets(star, &o).into_iter().filter(|wp| !wp.contains(1)) {
                let mut up_wp = wp.clone();
                up_wp.0.insert(1);
                let target: BTreeSet<PaintedBipartition> =
                    enumerate_pbp(star, &o, &up_wp).map_err(|e| e.to_string())?.into_iter().collect();
                let mut image = BTreeSet::new();
                for t in enumerate_pbp(star, &o, &wp).map_err(|e| e.to_string())? {
                    let up = shape_shift(&t, &wp, ShiftDirection::Up).map_err(|e| format!("{o} {wp} {t}: {e}"))?;
                    let back = shape_shift(&up, &up_wp, ShiftDirection::Down).map_err(|e| e.to_string())?;
                    ensure!(back == t, "{star} {o} {wp}: {t} -> {up} -> {back}");
                    image.insert(up);
                }
                ensure!(image == target, "{star} {o} {wp}: shift is not onto");
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn c_type_descents() -> Result<usize, String> {
    let mut cases = 0;
    for star in [Label::C, Label::Ct, Label::Dstar] {
        for o in good_orbits(star, 14) {
            for wp in wp_subsets(star, &o) {
                let (o1, wp1) = (dual_descent_orbit(star, &o), dual_descent_wp(&wp));
                let target = enumerate_pbp(howe_dual(star).unwrap(), &o1, &wp1).map_err(|e| e.to_string())?;
                let source = enumerate_pbp(star, &o, &wp).map_err(|e| e.to_string())?;
                let image: BTreeSet<PaintedBipartition> =
                    source.iter().map(|t| descend(t, &o, &wp)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
                ensure!(image.len() == source.len(), "{star} {o} {wp}: not injective");
                let expected: BTreeSet<PaintedBipartition> = if star == Label::Dstar || o.r(1) > o.r(2) {
                    target.into_iter().collect()
                } else {
                    target
                        .into_iter()
                        .filter(|t| tail(t, &o1).map(|x| x.x != Some(Symbol::S)).unwrap_or(false))
                        .collect()
                };
                ensure!(image == expected, "{star} {o} {wp}: wrong image");
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn double_descents() -> Result<usize, String> {
    let mut cases = 0;
    for star in [Label::B, Label::D, Label::Cstar] {
        for o in good_orbits(star, 14) {
            let gap = star != Label::Cstar && o.r(2) == 0;
            if (star == Label::D && o.is_empty()) || gap || (star == Label::Cstar && !is_quasi_distinguished(star, &o))
            {
                continue;
            }
            let dual = bv_dual(&OrbitSpec::new_default(star, o.clone()).unwrap()).map_err(|e| e.to_string())?;
            let bijective = star == Label::Cstar || o.r(2) > o.r(3);
            let shift = if bijective { dual.c(2) } else { dual.c(2) - 1 };
            let (tstar, to, _) = tail_orbit(star, &o).map_err(|e| e.to_string())?;
            let tails = enumerate_pbp(tstar, &to, &PPSubset::empty()).map_err(|e| e.to_string())?;
            let o1 = dual_descent_orbit(star, &o);
            let o2 = dual_descent_orbit(howe_dual(star).unwrap(), &o1);
            for wp in wp_subsets(star, &o).into_iter().filter(|wp| star != Label::Cstar || wp.is_empty()) {
                let wp2 = dual_descent_wp(&dual_descent_wp(&wp));
                let source = enumerate_pbp(star, &o, &wp).map_err(|e| e.to_string())?;
                let mut image = BTreeSet::new();
                for t in &source {
                    let (dd, tl) = double_descent(t, &o, &wp).map_err(|e| e.to_string())?;
                    let (s, s2, st) = (t.signature(), dd.signature(), tl.pbp.signature());
                    ensure!(
                        (s.p, s.q) == (shift + s2.p + st.p, shift + s2.q + st.q),
                        "{star} {o} {wp} {t}: signature formula"
                    );
                    image.insert((dd, tl.pbp));
                }
                ensure!(image.len() == source.len(), "{star} {o} {wp}: not injective");
                let mut expected = BTreeSet::new();
                for c in enumerate_pbp(star, &o2, &wp2).map_err(|e| e.to_string())? {
                    for t0 in &tails {
                        let keep = bijective || {
                            let x = tail(&c, &o2).map_err(|e| e.to_string())?.x;
                            x == Some(Symbol::D)
                                || (matches!(x, Some(Symbol::R | Symbol::C))
                                    && t0.p.symbols().any(|s| matches!(s, Symbol::S | Symbol::C)))
                        };
                        if keep {
                            expected.insert((c.clone(), t0.clone()));
                        }
                    }
                }
                ensure!(image == expected, "{star} {o} {wp}: wrong image");
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn descent_injective_with_signature() -> Result<usize, String> {
    let mut cases = 0;
    for star in [Label::B, Label::D, Label::Cstar] {
        for o in good_orbits(star, 14) {
            for wp in wp_subsets(star, &o) {
                let mut seen = BTreeSet::new();
                for t in enumerate_pbp(star, &o, &wp).map_err(|e| e.to_string())? {
                    let out = descend(&t, &o, &wp).map_err(|e| e.to_string())?;
                    let eps = tail(&t, &o).map_err(|e| e.to_string())?.eps;
                    let s = t.signature();
                    ensure!(seen.insert((out, s.p, s.q, eps)), "{star} {o} {wp}: {t} collides");
                }
                cases += 1;
            }
        }
    }
    Ok(cases)
}

fn descent_contracts() -> Outcome {
    let a = shape_shifts()?;
    let b = c_type_descents()?;
    let c = double_descents()?;
    let e = descent_injective_with_signature()?;
    Ok(format!("shifts {a}, C-type descents {b}, double descents {c}, injectivity {e}"))
}

fn duality_oracles() -> Outcome {
    let mut cases = 0;
    for star in Label::BCD.into_iter().chain([Label::AR, Label::AH, Label::A, Label::At]) {
        for s in specs(star, 14) {
            let dual = bv_dual(&s).map_err(|e| e.to_string())?;
            let dim = dual.orbit_dim(star.group_family()).map_err(|e| e.to_string())?;
            let expected = bv_dimension_from_cells(&s).map_err(|e| e.to_string())?;
            ensure!(dim == expected, "{star} {} {:?}: dim {dim}, 2(♯Δ⁺ − a) = {expected}", s.d, s.variant);
            if !star.is_a_family() {
                let split = bv_dual_from_split(&s).map_err(|e| e.to_string())?;
                ensure!(split == dual, "{star} {}: {dual} vs split {split}", s.d);
            }
            cases += 1;
        }
    }
    for star in Label::BCD {
        let fam = star.group_family();
        for n in 1..=5usize {
            let odd = matches!(star, Label::C | Label::Cstar);
            let zero =
                OrbitSpec::new_default(star, YoungDiagram::from_rows(vec![1; if odd { 2 * n + 1 } else { 2 * n }]));
            if let Ok(z) = zero {
                let dual = bv_dual(&z).map_err(|e| e.to_string())?;
                let regular = partitions(dual.size())
                    .into_iter()
                    .filter(|p| p.is_valid_orbit(fam))
                    .all(|p| p.dominated_by(&dual));
                ensure!(regular, "{star} rank {n}: zero orbit goes to {dual}");
            }
            let rows = match star {
                Label::C | Label::Cstar => vec![2 * n + 1],
                Label::D | Label::Dstar if n > 1 => vec![2 * n - 1, 1],
                Label::D | Label::Dstar => continue,
                _ => vec![2 * n],
            };
            let dual = bv_dual(&OrbitSpec::new_default(star, YoungDiagram::from_rows(rows)).unwrap())
                .map_err(|e| e.to_string())?;
            if star == Label::Ct {
                let mut minimal = vec![1; 2 * n - 1];
                minimal[0] = 2;
                ensure!(dual == YoungDiagram::from_rows(minimal), "Ct rank {n}: principal goes to {dual}");
            } else {
                ensure!(
                    dual.orbit_dim(fam).map_err(|e| e.to_string())? == 0,
                    "{star} rank {n}: principal goes to {dual}"
                );
            }
        }
    }
    Ok(format!("{cases} orbits; extremes swap at rank ≤ 5 (Ct principal goes to the minimal orbit)"))
}

fn realforms_crosscheck() -> Outcome {
    let mut unitary = 0;
    for star in [Label::A, Label::At] {
        for o in good_orbits(star, 8) {
            let dual = bv_dual(&OrbitSpec::new_default(star, o.clone()).unwrap()).map_err(|e| e.to_string())?;
            let paps = enumerate_pap(star, &o).map_err(|e| e.to_string())?;
            let n = o.size();
            for p in 0..=n {
                let group = GroupForm::with_signature(star, p, n - p);
                let by_pap =
                    paps.iter().filter(|x| (pap_signature(x).p, pap_signature(x).q) == (p, n - p)).count() as u64;
                let real = count_real_orbits(&group, &dual).map_err(|e| e.to_string())?;
                ensure!(by_pap == real, "{star} {o} over {group}: {by_pap} vs {real}");
                unitary += 1;
            }
        }
    }
    let mut quaternionic = 0;
    for star in [Label::Cstar, Label::Dstar] {
        for o in good_orbits(star, 13) {
            let spec = OrbitSpec::new_default(star, o.clone()).unwrap();
            if spec.rank() > 6 {
                continue;
            }
            let dual = bv_dual(&spec).map_err(|e| e.to_string())?;
            ensure!(
                dual.is_valid_orbit(if star == Label::Cstar { AlgebraFamily::C } else { AlgebraFamily::D }),
                "{dual}"
            );
            for group in groups(star, spec.rank()) {
                let pbp =
                    enumerate_pbp_for_group(&group, &o, &PPSubset::empty()).map_err(|e| e.to_string())?.len() as u64;
                let real = count_real_orbits(&group, &dual).map_err(|e| e.to_string())?;
                ensure!(pbp == real, "{star} {o} over {group}: {pbp} vs {real}");
                quaternionic += 1;
            }
        }
    }
    Ok(format!("{unitary} unitary and {quaternionic} quaternionic comparisons"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("Sp4(R) with orbit (3,1,1)", sp4_example),
        ("C cell diagrams of (5,3,3,3,3,1,1)", c_cell_example),
        ("B painted bipartition over SO(10,9)", b_example),
        ("descent worked examples", descent_examples),
        ("GL_n(R) product formula, |Ǒ| ≤ 10", gl_product_formula),
        ("℘-independence, |Ǒ| ≤ 14", wp_independence),
        ("generating functions, |Ǒ| ≤ 14", gf_equivalence),
        ("Weyl group oracle, n ≤ 6", weyl_oracle),
        ("descent contracts, |Ǒ| ≤ 14", descent_contracts),
        ("duality oracles, |Ǒ| ≤ 14", duality_oracles),
        ("real orbit cross-checks", realforms_crosscheck),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{secs:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

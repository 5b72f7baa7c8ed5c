#![allow(dead_code)]

use unip::cells::{primitive_pairs, PPSubset};
use unip::diagram::partitions;
use unip::parity::{good_parity, split_parity};
use unip::{Label, OrbitSpec, YoungDiagram};

pub fn d(s: &str) -> YoungDiagram {
    s.parse().unwrap()
}

/// Orbits of size at most `max` all of whose rows have good parity for `star`.
pub fn good_orbits(star: Label, max: usize) -> Vec<YoungDiagram> {
    (0..=max)
        .flat_map(partitions)
        .filter(|o| o.rows().iter().all(|&r| good_parity(r, star, o.size())))
        .filter(|o| OrbitSpec::new_default(star, o.clone()).is_ok())
        .collect()
}

/// All admissible orbits of size at most `max` for a label.
pub fn all_orbits(star: Label, max: usize) -> Vec<OrbitSpec> {
    (0..=max).flat_map(partitions).filter_map(|o| OrbitSpec::new_default(star, o).ok()).collect()
}

/// Every `℘ ⊆ PP_⋆(Ǒ)`.
pub fn wp_subsets(star: Label, o: &YoungDiagram) -> Vec<PPSubset> {
    primitive_pairs(star, o).subsets()
}

pub fn good_part(spec: &OrbitSpec) -> YoungDiagram {
    split_parity(spec).d_g
}

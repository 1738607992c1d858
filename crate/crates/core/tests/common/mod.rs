#![allow(dead_code)]

use omlkit::lattice::catalog::{self, CORPUS};
use omlkit::{Elem, Oml, ProjectionSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn corpus() -> Vec<Oml> {
    CORPUS.iter().map(|t| catalog::load(t).unwrap()).collect()
}

/// Corpus lattices with at most `n` elements.
pub fn corpus_up_to(n: usize) -> Vec<Oml> {
    corpus().into_iter().filter(|l| l.len() <= n).collect()
}

pub fn get(token: &str) -> Oml {
    catalog::load(token).unwrap()
}

pub fn e(l: &Oml, label: &str) -> Elem {
    l.find(label).unwrap_or_else(|| panic!("no element {label} in {}", l.name()))
}

pub fn set(l: &Oml, labels: &[&str]) -> ProjectionSet {
    ProjectionSet::from_elems(l.len(), labels.iter().map(|s| e(l, s)))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_subset(l: &Oml, rng: &mut ChaCha8Rng, density: f64) -> ProjectionSet {
    ProjectionSet::filter(l, |_| rng.gen_bool(density))
}

/// Corpus lattices with the relative center property. Projection lattices
/// of block algebras have it; the Greechie pastings built on `d16` do not,
/// and theorems proved with symmetries can fail there.
pub fn rcp_corpus() -> Vec<Oml> {
    corpus()
        .into_iter()
        .filter(omlkit::central::has_relative_center_property)
        .collect()
}

/// Block shapes exercised by the matrix-model tests.
pub const SHAPES: [&[usize]; 5] = [&[2], &[3], &[2, 1], &[2, 2], &[3, 2]];

pub fn algebra(dims: &[usize]) -> omlkit::matrix::BlockAlgebra {
    omlkit::matrix::BlockAlgebra::new(dims.to_vec()).unwrap()
}

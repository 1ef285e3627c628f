#![allow(dead_code)]

use std::sync::Arc;

use rand::Rng as _;
use rand_chacha::ChaCha8Rng;
use twofano::ring::{ratio, Ring};
use twofano::spaces::catalog;
use twofano::{FormalBundle, GradedClass, Rational};

pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    ratio(rng.gen_range(-6..=6), rng.gen_range(1..=3))
}

/// Homogeneous class with at most `density` nonzero coefficients.
pub fn random_homogeneous(ring: &Arc<Ring>, degree: usize, density: usize, rng: &mut ChaCha8Rng) -> GradedClass {
    let len = ring.basis_len(degree);
    let mut coefficients = vec![ratio(0, 1); len];
    if len > 0 {
        for _ in 0..density {
            coefficients[rng.gen_range(0..len)] = small_rational(rng);
        }
    }
    GradedClass::homogeneous(ring, degree, coefficients).unwrap()
}

/// Mixed-degree class with a few nonzero coefficients per degree.
pub fn random_class(ring: &Arc<Ring>, rng: &mut ChaCha8Rng) -> GradedClass {
    (0..=ring.dimension()).fold(GradedClass::zero(ring), |acc, d| {
        acc.add(&random_homogeneous(ring, d, 2, rng)).unwrap()
    })
}

/// Class with vanishing degree-0 part.
pub fn random_nilpotent(ring: &Arc<Ring>, rng: &mut ChaCha8Rng) -> GradedClass {
    let c = random_class(ring, rng);
    c.sub(&c.part(0)).unwrap()
}

pub fn random_bundle(ring: &Arc<Ring>, rng: &mut ChaCha8Rng) -> FormalBundle {
    let rank = rng.gen_range(1..=4);
    let top = rank.min(ring.dimension());
    let classes: Vec<GradedClass> = (1..=top).map(|i| random_homogeneous(ring, i, 2, rng)).collect();
    if classes.is_empty() {
        FormalBundle::trivial(ring, rank)
    } else {
        FormalBundle::new(rank, &classes).unwrap()
    }
}

/// Distinct rings of the catalog.
pub fn catalog_rings() -> Vec<Arc<Ring>> {
    let mut rings: Vec<Arc<Ring>> = Vec::new();
    for space in catalog().unwrap() {
        if !rings.iter().any(|r| r.id() == space.ring().id()) {
            rings.push(space.ring().clone());
        }
    }
    rings
}

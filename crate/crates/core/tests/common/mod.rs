#![allow(dead_code)]

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use shockch::{Field2D, InpaintProblem, Mask2D, NonlinearVariant};

pub fn random_field(width: usize, height: usize, seed: u64) -> Field2D {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Field2D::from_fn(width, height, |_, _| rng.gen::<f64>())
}

pub fn random_mask(width: usize, height: usize, seed: u64) -> Mask2D {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
    Mask2D::from_fn(width, height, |_, _| rng.gen_bool(0.3))
}

pub fn random_problem(width: usize, height: usize, lambda0: f64, seed: u64) -> InpaintProblem {
    InpaintProblem::new(
        random_field(width, height, seed),
        random_mask(width, height, seed),
        lambda0,
    )
    .unwrap()
}

pub fn grid_size() -> impl Strategy<Value = usize> {
    prop_oneof![Just(8usize), Just(16usize)]
}

pub fn variant() -> impl Strategy<Value = NonlinearVariant> {
    prop_oneof![
        Just(NonlinearVariant::shock()),
        (0.0..0.5f64).prop_map(|delta| NonlinearVariant::ShockFilter { delta }),
        Just(NonlinearVariant::DoubleWell),
    ]
}

/// Fraction of `mask` pixels on which `u` and `truth` agree after thresholding at 0.5.
pub fn threshold_accuracy(u: &Field2D, truth: &Field2D, mask: &Mask2D) -> f64 {
    let (mut hit, mut total) = (0usize, 0usize);
    for ((a, b), &m) in u.data().iter().zip(truth.data()).zip(mask.inside()) {
        if m {
            total += 1;
            hit += usize::from((*a >= 0.5) == (*b >= 0.5));
        }
    }
    hit as f64 / total.max(1) as f64
}

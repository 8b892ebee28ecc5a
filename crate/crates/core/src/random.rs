//! Seeded random tensors for property panels.

use rand::Rng;

use crate::rational::int;
use crate::tensor::{SparseTensor, SymplecticSpace, Word};

/// Up to `terms` random basis words of length `degree` with small nonzero
/// integer coefficients.
pub fn random_tensor<R: Rng>(rng: &mut R, space: SymplecticSpace, degree: usize, terms: usize) -> SparseTensor {
    let mut t = SparseTensor::zero(space, degree);
    for _ in 0..terms {
        let w: Word = (0..degree).map(|_| rng.gen_range(1..=space.dim()) as u8).collect();
        let mut c = rng.gen_range(-3i64..=3);
        if c == 0 {
            c = 1;
        }
        t.add_term(w, int(c));
    }
    t
}

/// A panel of `count` random tensors drawn from one seeded stream.
pub fn random_panel(seed: u64, space: SymplecticSpace, degree: usize, terms: usize, count: usize) -> Vec<SparseTensor> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_tensor(&mut rng, space, degree, terms)).collect()
}

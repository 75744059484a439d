use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Coeff, Monomial, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::linalg;

/// Bound on the absolute value of random matrix entries.
pub const RANDOM_ENTRY_BOUND: i64 = 10_000;

/// Invertible linear substitution `x_i -> sum_j a_ij x_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearChange {
    ring: Ring,
    matrix: Vec<Vec<Coeff>>,
    seed: Option<u64>,
}

/// Independent sub-seed number `k` of `seed` (splitmix64 finalizer).
pub fn derive_seed(seed: u64, k: u64) -> u64 {
    let mut z = seed.wrapping_add(k.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub(crate) fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub(crate) fn random_entry(ring: Ring, rng: &mut ChaCha8Rng) -> Coeff {
    ring.field.from_i64(rng.gen_range(-RANDOM_ENTRY_BOUND..=RANDOM_ENTRY_BOUND))
}

/// A seeded random linear form `sum c_i x_i` with at least one non-zero entry.
pub fn random_linear_form(ring: Ring, seed: u64) -> Polynomial {
    let mut rng = rng_for(seed);
    loop {
        let terms: Vec<(Monomial, Coeff)> = (0..ring.nvars)
            .map(|i| (Monomial::var(ring.nvars, i), random_entry(ring, &mut rng)))
            .collect();
        let p = Polynomial::from_terms(ring, terms).expect("matching lengths");
        if !p.is_zero() {
            return p;
        }
    }
}

impl LinearChange {
    pub fn identity(ring: Ring) -> Self {
        let k = ring.field;
        let matrix = (0..ring.nvars)
            .map(|i| (0..ring.nvars).map(|j| if i == j { k.one() } else { k.zero() }).collect())
            .collect();
        LinearChange { ring, matrix, seed: None }
    }

    pub fn from_matrix(ring: Ring, matrix: Vec<Vec<Coeff>>) -> Result<Self> {
        if matrix.len() != ring.nvars || matrix.iter().any(|r| r.len() != ring.nvars) {
            return Err(Error::Dimension("change matrix must be n x n".into()));
        }
        linalg::inverse(&ring.field, &matrix).ok_or(Error::Singular)?;
        Ok(LinearChange { ring, matrix, seed: None })
    }

    /// Entries uniform in `[-10^4, 10^4]` (reduced mod p over a prime
    /// field), drawn from a ChaCha stream seeded by `seed`; singular draws
    /// are discarded and redrawn from the same stream.
    pub fn random(ring: Ring, seed: u64) -> Self {
        let mut rng = rng_for(seed);
        loop {
            let matrix: Vec<Vec<Coeff>> = (0..ring.nvars)
                .map(|_| (0..ring.nvars).map(|_| random_entry(ring, &mut rng)).collect())
                .collect();
            if linalg::inverse(&ring.field, &matrix).is_some() {
                return LinearChange { ring, matrix, seed: Some(seed) };
            }
        }
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn matrix(&self) -> &[Vec<Coeff>] {
        &self.matrix
    }

    pub fn inverse(&self) -> LinearChange {
        let inv = linalg::inverse(&self.ring.field, &self.matrix).expect("invertible by construction");
        LinearChange { ring: self.ring, matrix: inv, seed: None }
    }

    /// Image of `x_i`.
    pub fn image_of_var(&self, i: usize) -> Polynomial {
        let terms = self.matrix[i]
            .iter()
            .enumerate()
            .map(|(j, c)| (Monomial::var(self.ring.nvars, j), c.clone()));
        Polynomial::from_terms(self.ring, terms).expect("matching lengths")
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ring() != self.ring {
            return Err(Error::Dimension("change and polynomial live in different rings".into()));
        }
        let images: Vec<Polynomial> = (0..self.ring.nvars).map(|i| self.image_of_var(i)).collect();
        f.substitute(&images, self.ring)
    }
}

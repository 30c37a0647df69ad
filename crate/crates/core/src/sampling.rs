//! Seeded generators for sample points and random linear-algebra instances.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{Kind, MatrixQ, Rational, Subspace};
use crate::poisson::PoissonVS;

pub type SampleRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| ≤ height` and `1 ≤ q ≤ height`.
pub fn grid_rational(rng: &mut SampleRng, height: u32) -> Rational {
    let h = i64::from(height.max(1));
    let p = rng.gen_range(-h..=h);
    let q = rng.gen_range(1..=h);
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn grid_point(rng: &mut SampleRng, dim: usize, height: u32) -> Vec<Rational> {
    (0..dim).map(|_| grid_rational(rng, height)).collect()
}

/// `count` points of ℚ^dim with coordinates of height at most `height`.
pub fn grid_points(seed: u64, dim: usize, height: u32, count: usize) -> Vec<Vec<Rational>> {
    let mut rng = seeded(seed);
    (0..count).map(|_| grid_point(&mut rng, dim, height)).collect()
}

pub fn small_int(rng: &mut SampleRng, bound: i64) -> Rational {
    Rational::from_integer(BigInt::from(rng.gen_range(-bound..=bound)))
}

pub fn random_matrix(rng: &mut SampleRng, rows: usize, cols: usize, bound: i64) -> MatrixQ {
    let data = (0..rows * cols).map(|_| small_int(rng, bound)).collect();
    MatrixQ::new(rows, cols, data).expect("entry count")
}

pub fn random_antisymmetric(rng: &mut SampleRng, n: usize, bound: i64) -> MatrixQ {
    let mut m = MatrixQ::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let x = small_int(rng, bound);
            m[(i, j)] = x.clone();
            m[(j, i)] = -x;
        }
    }
    m
}

/// `Σ_{a<r} u_a∧v_a` with random integer vectors and a random number of terms,
/// so all ranks up to `n` occur.
pub fn random_bivector(rng: &mut SampleRng, n: usize) -> PoissonVS {
    let terms = rng.gen_range(0..=n / 2);
    let mut m = MatrixQ::zeros(n, n);
    for _ in 0..terms {
        let u: Vec<Rational> = (0..n).map(|_| small_int(rng, 2)).collect();
        let v: Vec<Rational> = (0..n).map(|_| small_int(rng, 2)).collect();
        for i in 0..n {
            for j in 0..n {
                let t = &u[i] * &v[j] - &v[i] * &u[j];
                m[(i, j)] += t;
            }
        }
    }
    PoissonVS::new(m).expect("wedge products are antisymmetric")
}

/// Span of `d` random integer vectors (the dimension may drop below `d`).
pub fn random_subspace(rng: &mut SampleRng, n: usize, d: usize) -> Subspace {
    Subspace::span(Kind::Vectors, &random_matrix(rng, d, n, 2))
}

pub fn random_subspace_any_dim(rng: &mut SampleRng, n: usize) -> Subspace {
    let d = rng.gen_range(0..=n);
    random_subspace(rng, n, d)
}

/// A random complement of `s`: the standard complement with each basis vector
/// shifted by a random element of `s`.
pub fn random_complement(rng: &mut SampleRng, s: &Subspace) -> Subspace {
    let base = s.standard_complement();
    let rows: Vec<Vec<Rational>> = base
        .basis_vectors()
        .into_iter()
        .map(|r| {
            let coeffs: Vec<Rational> = (0..s.dim()).map(|_| small_int(rng, 2)).collect();
            let shift = s.combine(&coeffs);
            r.iter().zip(shift).map(|(a, b)| a + b).collect()
        })
        .collect();
    Subspace::from_vectors(s.kind(), s.ambient_dim(), rows).expect("ambient length")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_points_are_reproducible_and_bounded() {
        let a = grid_points(7, 3, 4, 10);
        assert_eq!(a, grid_points(7, 3, 4, 10));
        assert_ne!(a, grid_points(8, 3, 4, 10));
        for p in a.iter().flatten() {
            assert!(p.numer().magnitude() <= &4u32.into());
            assert!(p.denom() <= &4.into());
        }
    }

    #[test]
    fn random_complement_is_a_complement() {
        let mut rng = seeded(3);
        for _ in 0..50 {
            let s = random_subspace_any_dim(&mut rng, 5);
            let r = random_complement(&mut rng, &s);
            assert!(r.is_complement_of(&s).unwrap());
        }
    }
}

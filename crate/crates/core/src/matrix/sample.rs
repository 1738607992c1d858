//! Seeded generators of projections, symmetries and exchange instances.
//! Orthogonal matrices are products of Householder reflections with small
//! integer vectors, so every generator is exact over the rationals.

use rand::seq::SliceRandom;
use rand::Rng;

use super::algebra::{BlockAlgebra, BlockMatrix, Projection, SaElement, Symmetry, SymmetryWitness};
use super::dense::Matrix;
use super::scalar::Scalar;

fn int<T: Scalar>(k: i64) -> T {
    T::from_i64(k).expect("small integer")
}

/// `1 − 2vvᵀ/(vᵀv)` for a nonzero integer vector.
pub fn householder<T: Scalar>(v: &[i64]) -> Matrix<T> {
    let vv: i64 = v.iter().map(|x| x * x).sum();
    assert!(vv > 0, "householder vector must be nonzero");
    let n = v.len();
    Matrix::from_fn(n, n, |i, j| {
        let id = if i == j { 1 } else { 0 };
        T::from_ratio(id * vv - 2 * v[i] * v[j], vv)
    })
}

fn random_vector<R: Rng>(n: usize, rng: &mut R) -> Vec<i64> {
    loop {
        let v: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
        if v.iter().any(|&x| x != 0) {
            return v;
        }
    }
}

/// A rational orthogonal matrix, the product of three random reflections.
pub fn random_orthogonal<T: Scalar, R: Rng>(n: usize, rng: &mut R) -> Matrix<T> {
    (0..3).fold(Matrix::identity(n), |acc, _| &householder::<T>(&random_vector(n, rng)) * &acc)
}

/// Diagonal projection onto the coordinates in `set`.
pub fn coordinate_projection<T: Scalar>(n: usize, set: &[usize]) -> Matrix<T> {
    Matrix::from_fn(n, n, |i, j| if i == j && set.contains(&i) { T::one() } else { T::zero() })
}

fn conj<T: Scalar>(o: &Matrix<T>, a: &Matrix<T>) -> Matrix<T> {
    &(o * a) * &o.transpose()
}

/// Orthogonal `p, q` with equal block ranks and a three-factor witness
/// `x = σ h₁ h₂`, where `h₁, h₂` fix `p` and `σ` swaps `p` with `q`.
#[derive(Clone, Debug)]
pub struct ExchangeInstance<T> {
    pub p: Projection<T>,
    pub q: Projection<T>,
    pub x: SymmetryWitness<T>,
}

pub fn random_exchange_instance<T: Scalar, R: Rng>(alg: &BlockAlgebra, rng: &mut R) -> ExchangeInstance<T> {
    let mut p = Vec::new();
    let mut q = Vec::new();
    let mut sigma = Vec::new();
    let mut h1 = Vec::new();
    let mut h2 = Vec::new();
    for &n in alg.block_dims() {
        let k = rng.gen_range(0..=n / 2);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        let (s, t) = (&perm[..k], &perm[k..2 * k]);
        let o = random_orthogonal::<T, R>(n, rng);
        p.push(conj(&o, &coordinate_projection(n, s)));
        q.push(conj(&o, &coordinate_projection(n, t)));

        let mut tau = Matrix::<T>::identity(n);
        for (&a, &b) in s.iter().zip(t) {
            tau[(a, a)] = T::zero();
            tau[(b, b)] = T::zero();
            tau[(a, b)] = T::one();
            tau[(b, a)] = T::one();
        }
        sigma.push(conj(&o, &tau));

        let signs: Vec<T> = (0..n).map(|_| if rng.gen_bool(0.5) { T::one() } else { -T::one() }).collect();
        h1.push(conj(&o, &Matrix::diagonal(&signs)));

        let outside: Vec<usize> = (0..n).filter(|i| !s.contains(i)).collect();
        let fix = if outside.is_empty() {
            Matrix::identity(n)
        } else {
            let mut u = vec![0; n];
            for &i in &outside {
                u[i] = rng.gen_range(-3..=3);
            }
            if u.iter().all(|&x| x == 0) {
                u[outside[0]] = 1;
            }
            householder(&u)
        };
        h2.push(conj(&o, &fix));
    }
    let block = |v: Vec<Matrix<T>>| BlockMatrix::new(alg, v).expect("generated blocks fit");
    let x = SymmetryWitness::new(
        alg,
        vec![
            Symmetry::new_unchecked(block(h2)),
            Symmetry::new_unchecked(block(h1)),
            Symmetry::new_unchecked(block(sigma)),
        ],
    )
    .expect("same algebra");
    ExchangeInstance {
        p: Projection::new_unchecked(block(p)),
        q: Projection::new_unchecked(block(q)),
        x,
    }
}

fn rotated_coordinates<T: Scalar, R: Rng>(alg: &BlockAlgebra, ranks: &[usize], rng: &mut R) -> Projection<T> {
    Projection::new_unchecked(alg.build(|i, n| {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        let o = random_orthogonal::<T, R>(n, rng);
        conj(&o, &coordinate_projection(n, &perm[..ranks[i]]))
    }))
}

pub fn random_ranks<R: Rng>(alg: &BlockAlgebra, rng: &mut R) -> Vec<usize> {
    alg.block_dims().iter().map(|&n| rng.gen_range(0..=n)).collect()
}

/// A projection `O E_S Oᵀ` with the given block ranks.
pub fn random_projection_with_ranks<T: Scalar, R: Rng>(
    alg: &BlockAlgebra,
    ranks: &[usize],
    rng: &mut R,
) -> Projection<T> {
    rotated_coordinates(alg, ranks, rng)
}

pub fn random_projection<T: Scalar, R: Rng>(alg: &BlockAlgebra, rng: &mut R) -> Projection<T> {
    let ranks = random_ranks(alg, rng);
    rotated_coordinates(alg, &ranks, rng)
}

/// `v(vᵀv)⁻¹vᵀ` for a random integer matrix `v` of full column rank.
pub fn random_range_projection<T: Scalar, R: Rng>(alg: &BlockAlgebra, rng: &mut R) -> Projection<T> {
    Projection::new_unchecked(alg.build(|_, n| {
        let k = rng.gen_range(0..=n);
        loop {
            let v = Matrix::<T>::from_fn(n, k, |_, _| int(rng.gen_range(-3..=3)));
            if v.rank() == k {
                break v.range_projection();
            }
        }
    }))
}

/// One of `1 − 2p`, a signed permutation involution, or `O D Oᵀ`.
pub fn random_symmetry<T: Scalar, R: Rng>(alg: &BlockAlgebra, rng: &mut R) -> Symmetry<T> {
    match rng.gen_range(0..3) {
        0 => Symmetry::reflection(&random_range_projection(alg, rng)),
        1 => Symmetry::new_unchecked(alg.build(|_, n| {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(rng);
            let mut m = Matrix::<T>::zeros(n, n);
            let mut done = vec![false; n];
            for pair in perm.chunks(2) {
                let sign = if rng.gen_bool(0.5) { T::one() } else { -T::one() };
                match *pair {
                    [a, b] if rng.gen_bool(0.7) => {
                        m[(a, b)] = sign.clone();
                        m[(b, a)] = sign;
                        done[a] = true;
                        done[b] = true;
                    }
                    _ => {
                        for &a in pair {
                            m[(a, a)] = if rng.gen_bool(0.5) { T::one() } else { -T::one() };
                            done[a] = true;
                        }
                    }
                }
            }
            debug_assert!(done.iter().all(|&d| d));
            m
        })),
        _ => Symmetry::new_unchecked(alg.build(|_, n| {
            let o = random_orthogonal::<T, R>(n, rng);
            let signs: Vec<T> = (0..n).map(|_| if rng.gen_bool(0.5) { T::one() } else { -T::one() }).collect();
            conj(&o, &Matrix::diagonal(&signs))
        })),
    }
}

/// Symmetric blocks with entries `k/2`, `|k| ≤ 6`.
pub fn random_sa<T: Scalar, R: Rng>(alg: &BlockAlgebra, rng: &mut R) -> SaElement<T> {
    let m = alg.build(|_, n| {
        let mut a = Matrix::<T>::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let x = T::from_ratio(rng.gen_range(-6..=6), 2);
                a[(i, j)] = x.clone();
                a[(j, i)] = x;
            }
        }
        a
    });
    SaElement::new(m).expect("symmetric by construction")
}

/// `a aᵀ` for a random `a`, a positive element.
pub fn random_positive<T: Scalar, R: Rng>(alg: &BlockAlgebra, rng: &mut R) -> SaElement<T> {
    let m = alg.build(|_, n| {
        let a = Matrix::<T>::from_fn(n, n, |_, _| int(rng.gen_range(-3..=3)));
        &a * &a.transpose()
    });
    SaElement::new(m).expect("symmetric by construction")
}

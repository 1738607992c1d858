//! Constructions that need square roots: orthonormal bases, Householder
//! factorizations and principal angles. Every result is verified before it
//! is returned.

use num_traits::Float;
use serde::Serialize;

use crate::error::{Error, Result};

use super::algebra::{BlockMatrix, Projection, Symmetry, SymmetryWitness};
use super::dense::Matrix;
use super::scalar::Scalar;

fn dot<T: Scalar + Float>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (x, y)| acc + *x * *y)
}

fn norm<T: Scalar + Float>(a: &[T]) -> T {
    dot(a, a).sqrt()
}

fn small<T: Scalar + Float>(x: f64) -> T {
    <T as num_traits::NumCast>::from(x).unwrap()
}

/// Eigenvalues (descending) and orthonormal eigenvector columns of a
/// symmetric matrix, by cyclic Jacobi rotations.
pub fn symmetric_eigen<T: Scalar + Float>(a: &Matrix<T>) -> (Vec<T>, Matrix<T>) {
    let n = a.rows();
    let mut a = a.clone();
    let mut v = Matrix::<T>::identity(n);
    let scale = a.frobenius_norm().max(f64::MIN_POSITIVE);
    for _ in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| a[(i, j)].to_f64_lossy().powi(2))
            .sum();
        if off.sqrt() <= T::epsilon().to_f64_lossy() * scale {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == T::zero() {
                    continue;
                }
                let two = T::one() + T::one();
                let theta = (a[(q, q)] - a[(p, p)]) / (two * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
                let c = T::one() / (t * t + T::one()).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (kp, kq) = (a[(k, p)], a[(k, q)]);
                    a[(k, p)] = c * kp - s * kq;
                    a[(k, q)] = s * kp + c * kq;
                }
                for k in 0..n {
                    let (pk, qk) = (a[(p, k)], a[(q, k)]);
                    a[(p, k)] = c * pk - s * qk;
                    a[(q, k)] = s * pk + c * qk;
                }
                for k in 0..n {
                    let (kp, kq) = (v[(k, p)], v[(k, q)]);
                    v[(k, p)] = c * kp - s * kq;
                    v[(k, q)] = s * kp + c * kq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].partial_cmp(&a[(i, i)]).unwrap_or(std::cmp::Ordering::Equal));
    let values = order.iter().map(|&i| a[(i, i)]).collect();
    (values, v.select_columns(&order))
}

/// Orthonormal bases of `range(p)` and `range(1 − p)` for a projection matrix.
pub fn range_bases<T: Scalar + Float>(p: &Matrix<T>) -> (Matrix<T>, Matrix<T>) {
    let (values, vectors) = symmetric_eigen(p);
    let half = small::<T>(0.5);
    let r = values.iter().filter(|&&x| x > half).count();
    let n = p.rows();
    (vectors.select_columns(&(0..r).collect::<Vec<_>>()), vectors.select_columns(&(r..n).collect::<Vec<_>>()))
}

/// Householder reflections `s₁, …, sₘ` (applied first to last) whose
/// product `sₘ⋯s₁` is the orthogonal matrix `o`. A final sign fix is a
/// diagonal `±1` matrix, itself a symmetry.
pub fn householder_factors<T: Scalar + Float>(o: &Matrix<T>) -> Vec<Matrix<T>> {
    let n = o.rows();
    let mut r = o.clone();
    let mut reflections = Vec::new();
    let skip = small::<T>(1e-13);
    for k in 0..n {
        let x: Vec<T> = (k..n).map(|i| r[(i, k)]).collect();
        if norm(&x[1..]) <= skip {
            continue;
        }
        let alpha = norm(&x);
        let mut v = x;
        v[0] = v[0] + if v[0] >= T::zero() { alpha } else { -alpha };
        let vv = dot(&v, &v);
        let two = T::one() + T::one();
        let h = Matrix::from_fn(n, n, |i, j| {
            let id = if i == j { T::one() } else { T::zero() };
            if i < k || j < k {
                id
            } else {
                id - two * v[i - k] * v[j - k] / vv
            }
        });
        r = &h * &r;
        reflections.push(h);
    }
    let signs: Vec<T> = (0..n).map(|i| if r[(i, i)] < T::zero() { -T::one() } else { T::one() }).collect();
    let mut factors = Vec::new();
    if signs.iter().any(|&s| s < T::zero()) {
        factors.push(Matrix::diagonal(&signs));
    }
    factors.extend(reflections.into_iter().rev());
    factors
}

fn pad_factors<T: Scalar>(
    p: &Projection<T>,
    per_block: Vec<Vec<Matrix<T>>>,
) -> Result<SymmetryWitness<T>> {
    let alg = p.algebra();
    let m = per_block.iter().map(Vec::len).max().unwrap_or(0);
    let factors = (0..m)
        .map(|j| {
            Symmetry::new_unchecked(alg.build(|i, n| per_block[i].get(j).cloned().unwrap_or_else(|| Matrix::identity(n))))
        })
        .collect();
    SymmetryWitness::new(alg, factors)
}

/// A product of symmetries `x` with `x p x* = q`, or `None` when some block
/// ranks differ (conjugation by a symmetry preserves every block trace).
pub fn equivalence_witness<T: Scalar + Float>(
    p: &Projection<T>,
    q: &Projection<T>,
) -> Result<Option<SymmetryWitness<T>>> {
    p.same_algebra(q)?;
    if p.ranks() != q.ranks() {
        return Ok(None);
    }
    let per_block = p
        .blocks()
        .iter()
        .zip(q.blocks())
        .map(|(pb, qb)| {
            let (u, u_perp) = range_bases(pb);
            let (v, v_perp) = range_bases(qb);
            let o = &v.hstack(&v_perp) * &u.hstack(&u_perp).transpose();
            householder_factors(&o)
        })
        .collect();
    let x = pad_factors(p, per_block)?;
    verify_witness(&x, p, q)?;
    Ok(Some(x))
}

fn verify_witness<T: Scalar>(x: &SymmetryWitness<T>, p: &Projection<T>, q: &Projection<T>) -> Result<()> {
    let one = p.algebra().one();
    if !x.factors().iter().all(|s| s.is_symmetry()) {
        return Err(Error::Inconsistent("witness factor is not a symmetry".into()));
    }
    if !x.product().mul(&x.adjoint()).approx_eq(&one) || !x.certifies(p, q) {
        return Err(Error::Inconsistent(format!(
            "witness check failed: ‖xpx* − q‖ = {:e}",
            x.conjugate(p).distance(q)
        )));
    }
    Ok(())
}

/// The reflection `1 − 2Σ wⱼwⱼᵀ` with `wⱼ ∝ uⱼ − vⱼ` over principal vector
/// pairs of the column spaces of `u` and `v` (both orthonormal, same width).
/// It carries `range(u)` onto `range(v)`.
pub fn principal_angle_symmetry<T: Scalar + Float>(u: &Matrix<T>, v: &Matrix<T>) -> Matrix<T> {
    let n = u.rows();
    let r = u.cols();
    let mut out = Matrix::identity(n);
    if r == 0 {
        return out;
    }
    let m = &u.transpose() * v;
    let (_, qv) = symmetric_eigen(&(&m.transpose() * &m));
    let mut left: Vec<Option<Vec<T>>> = (0..r)
        .map(|j| {
            let y = (&m * &qv.select_columns(&[j])).column(0);
            let ny = norm(&y);
            (ny > small(1e-7)).then(|| y.iter().map(|&t| t / ny).collect())
        })
        .collect();
    let mut basis: Vec<Vec<T>> = Vec::new();
    for slot in left.iter_mut() {
        if let Some(y) = slot.as_mut() {
            for b in &basis {
                let d = dot(y, b);
                y.iter_mut().zip(b).for_each(|(t, bt)| *t = *t - d * *bt);
            }
            let ny = norm(y);
            y.iter_mut().for_each(|t| *t = *t / ny);
            basis.push(y.clone());
        }
    }
    for slot in left.iter_mut().filter(|s| s.is_none()) {
        let best = (0..r)
            .map(|k| {
                let mut e: Vec<T> = (0..r).map(|i| if i == k { T::one() } else { T::zero() }).collect();
                for b in &basis {
                    let d = dot(&e, b);
                    e.iter_mut().zip(b).for_each(|(t, bt)| *t = *t - d * *bt);
                }
                e
            })
            .max_by(|a, b| norm(a).partial_cmp(&norm(b)).unwrap_or(std::cmp::Ordering::Equal))
            .unwrap();
        let nb = norm(&best);
        let e: Vec<T> = best.iter().map(|&t| t / nb).collect();
        basis.push(e.clone());
        *slot = Some(e);
    }
    let p = Matrix::from_columns(r, &left.into_iter().map(Option::unwrap).collect::<Vec<_>>());
    let up = u * &p;
    let vq = v * &qv;
    let mut ws: Vec<Vec<T>> = Vec::new();
    for j in 0..r {
        let mut w: Vec<T> = up.column(j).iter().zip(vq.column(j)).map(|(&a, b)| a - b).collect();
        if norm(&w) <= small(1e-12) {
            continue;
        }
        for b in &ws {
            let d = dot(&w, b);
            w.iter_mut().zip(b).for_each(|(t, bt)| *t = *t - d * *bt);
        }
        let nw = norm(&w);
        ws.push(w.iter().map(|&t| t / nw).collect());
    }
    let two = T::one() + T::one();
    for w in &ws {
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = out[(i, j)] - two * w[i] * w[j];
            }
        }
    }
    out
}

/// A single symmetry `s` with `s p s = q` for projections of equal block
/// ranks, built from principal angles.
pub fn single_exchange_symmetry<T: Scalar + Float>(p: &Projection<T>, q: &Projection<T>) -> Result<Symmetry<T>> {
    p.same_algebra(q)?;
    if p.ranks() != q.ranks() {
        return Err(Error::Precondition(format!(
            "block ranks differ: {:?} vs {:?}",
            p.ranks(),
            q.ranks()
        )));
    }
    let s = p.algebra().build(|i, _| {
        let (u, _) = range_bases(p.block(i));
        let (v, _) = range_bases(q.block(i));
        principal_angle_symmetry(&u, &v)
    });
    let s = Symmetry::new(s).map_err(|_| Error::Inconsistent("principal-angle reflection is not a symmetry".into()))?;
    if !s.conjugate(p).approx_eq(q) {
        return Err(Error::Inconsistent(format!(
            "‖sps − q‖ = {:e}",
            s.conjugate(p).distance(q)
        )));
    }
    Ok(s)
}

/// Central `c` and symmetry `s` with `s(ec)s ≤ fc` and `s(fc^⊥)s ≤ ec^⊥`.
#[derive(Clone, Debug, Serialize)]
pub struct Comparability<T> {
    #[serde(skip)]
    pub c: Projection<T>,
    #[serde(skip)]
    pub s: Symmetry<T>,
    pub e_ranks: Vec<usize>,
    pub f_ranks: Vec<usize>,
    pub c_blocks: Vec<bool>,
}

impl<T: Scalar> Comparability<T> {
    /// The two defining inequalities and the two complementary ones,
    /// `s e^⊥c^⊥ s ≤ f^⊥c^⊥` and `s f^⊥c s ≤ e^⊥c`.
    pub fn inequalities(&self, e: &Projection<T>, f: &Projection<T>) -> [bool; 4] {
        let c = &self.c;
        let cp = c.complement();
        let conj = |a: &BlockMatrix<T>| Projection::new_unchecked(self.s.conjugate(a));
        let prod = |a: &BlockMatrix<T>, b: &BlockMatrix<T>| Projection::new_unchecked(a.mul(b));
        let (ep, fp) = (e.complement(), f.complement());
        [
            conj(&e.mul(c)).below(&prod(f, c)),
            conj(&f.mul(&cp)).below(&prod(e, &cp)),
            conj(&ep.mul(&cp)).below(&prod(&fp, &cp)),
            conj(&fp.mul(c)).below(&prod(&ep, c)),
        ]
    }
}

/// Generalized comparability by block ranks: `c` is the identity on the
/// blocks where `rank eᵢ ≤ rank fᵢ`, and `s` rotates the smaller range
/// into the larger one block by block.
pub fn generalized_comparability<T: Scalar + Float>(
    e: &Projection<T>,
    f: &Projection<T>,
) -> Result<Comparability<T>> {
    e.same_algebra(f)?;
    let (er, fr) = (e.ranks(), f.ranks());
    let c_blocks: Vec<bool> = er.iter().zip(&fr).map(|(a, b)| a <= b).collect();
    let s = e.algebra().build(|i, _| {
        let (eb, _) = range_bases(e.block(i));
        let (fb, _) = range_bases(f.block(i));
        let k = er[i].min(fr[i]);
        let first = |m: &Matrix<T>| m.select_columns(&(0..k).collect::<Vec<_>>());
        if c_blocks[i] {
            principal_angle_symmetry(&eb, &first(&fb))
        } else {
            principal_angle_symmetry(&fb, &first(&eb))
        }
    });
    let s = Symmetry::new(s).map_err(|_| Error::Inconsistent("comparability symmetry is not a symmetry".into()))?;
    let out = Comparability { c: e.algebra().central(&c_blocks), s, e_ranks: er, f_ranks: fr, c_blocks };
    if out.inequalities(e, f).contains(&false) {
        return Err(Error::Inconsistent("comparability inequalities fail".into()));
    }
    Ok(out)
}

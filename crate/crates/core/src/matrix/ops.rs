//! Operations that stay inside the scalar type: Jordan products, central
//! covers, projection lattice operations and the exchange constructions.

use serde::Serialize;

use crate::error::{Error, Result};

use super::algebra::{BlockMatrix, Projection, SaElement, Symmetry, SymmetryWitness};
use super::dense::Matrix;
use super::scalar::Scalar;

/// `a∘b = ½(ab + ba)`.
pub fn jordan_product<T: Scalar>(a: &SaElement<T>, b: &SaElement<T>) -> Result<SaElement<T>> {
    a.same_algebra(b)?;
    let half = T::from_ratio(1, 2);
    Ok(SaElement::new_unchecked(a.mul(b).add(&b.mul(a)).scale(&half)))
}

/// Identity on every block where `a` is nonzero.
pub fn central_cover_m<T: Scalar>(a: &BlockMatrix<T>) -> Projection<T> {
    let mask: Vec<bool> = a.blocks().iter().map(|b| !b.is_zero()).collect();
    a.algebra().central(&mask)
}

/// Projection onto `range(p) + range(q)`.
pub fn projection_join<T: Scalar>(p: &Projection<T>, q: &Projection<T>) -> Result<Projection<T>> {
    p.same_algebra(q)?;
    let blocks = p.blocks().iter().zip(q.blocks()).map(|(a, b)| a.hstack(b).range_projection()).collect();
    Ok(Projection::new_unchecked(BlockMatrix::new(p.algebra(), blocks)?))
}

/// Projection onto `range(p) ∩ range(q)`, as `(p^⊥ ∨ q^⊥)^⊥`.
pub fn projection_meet<T: Scalar>(p: &Projection<T>, q: &Projection<T>) -> Result<Projection<T>> {
    Ok(projection_join(&p.complement(), &q.complement())?.complement())
}

fn check_witness<T: Scalar>(p: &Projection<T>, q: &Projection<T>, x: &SymmetryWitness<T>) -> Result<()> {
    if x.algebra() != p.algebra() {
        return Err(Error::Shape("witness lives in a different algebra".into()));
    }
    if !x.certifies(p, q) {
        return Err(Error::Precondition("witness does not carry p to q (x p x* ≠ q)".into()));
    }
    Ok(())
}

/// For orthogonal `p ∼ q` with `x p x* = q`, the symmetry
/// `s = qxp + (qxp)ᵀ + (1 − p − q)`, which satisfies `s p s = q`.
pub fn exchange_symmetry_orthogonal<T: Scalar>(
    p: &Projection<T>,
    q: &Projection<T>,
    x: &SymmetryWitness<T>,
) -> Result<Symmetry<T>> {
    p.same_algebra(q)?;
    if !p.is_orthogonal_to(q) {
        return Err(Error::Precondition("p and q are not orthogonal (pq ≠ 0)".into()));
    }
    check_witness(p, q, x)?;
    let qxp = q.mul(&x.product()).mul(p);
    let s = qxp.add(&qxp.transpose()).add(&p.one_minus()).sub(q);
    let s = Symmetry::new(s).map_err(|_| Error::Inconsistent("exchange formula did not give s² = 1".into()))?;
    if !s.conjugate(p).approx_eq(q) {
        return Err(Error::Inconsistent("exchange formula did not give sps = q".into()));
    }
    Ok(s)
}

/// From `s p s = q` with `p, q ≤ r`, the symmetry `s₁ = t + r − t²` of
/// `rAr`, where `t = (p∨q) s (p∨q)`. The result satisfies `s₁ = r s₁ r`,
/// `s₁² = r` and `s₁ p s₁ = q`.
pub fn localize_symmetry<T: Scalar>(
    r: &Projection<T>,
    p: &Projection<T>,
    q: &Projection<T>,
    s: &Symmetry<T>,
) -> Result<BlockMatrix<T>> {
    r.same_algebra(p)?;
    r.same_algebra(q)?;
    r.same_algebra(s)?;
    if !p.below(r) {
        return Err(Error::Precondition("p ≤ r fails".into()));
    }
    if !q.below(r) {
        return Err(Error::Precondition("q ≤ r fails".into()));
    }
    if !s.conjugate(p).approx_eq(q) {
        return Err(Error::Precondition("sps = q fails".into()));
    }
    let j = projection_join(p, q)?;
    let t = j.mul(s).mul(&j);
    let s1 = t.add(r).sub(&t.square());
    let ok = r.mul(&s1).mul(r).approx_eq(&s1)
        && s1.square().approx_eq(r)
        && s1.mul(p).mul(&s1).approx_eq(q);
    if !ok {
        return Err(Error::Inconsistent("localized symmetry fails its identities".into()));
    }
    Ok(s1)
}

/// `u + 1 − r` for a symmetry `u` of `rAr`.
pub fn extend_symmetry<T: Scalar>(r: &Projection<T>, u: &BlockMatrix<T>) -> Result<Symmetry<T>> {
    r.same_algebra(u)?;
    if !(r.mul(u).mul(r).approx_eq(u) && u.is_self_adjoint() && u.square().approx_eq(r)) {
        return Err(Error::Precondition("u is not a symmetry of rAr".into()));
    }
    Symmetry::new(u.add(&r.one_minus()))
}

/// A symmetry exchanging `eᵢ` and `eⱼ`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairExchange<T> {
    pub i: usize,
    pub j: usize,
    #[serde(skip)]
    pub symmetry: Symmetry<T>,
}

/// Given pairwise orthogonal `e₀, …, eₙ` and symmetries with
/// `sᵢ eᵢ sᵢ = eᵢ₊₁`, an exchanging symmetry for every pair `i < j`.
/// Consecutive pairs keep their given symmetry; longer gaps use the
/// witness `s_{j−1}⋯sᵢ` and the orthogonal exchange formula.
pub fn chained_exchange<T: Scalar>(
    family: &[Projection<T>],
    steps: &[Symmetry<T>],
) -> Result<Vec<PairExchange<T>>> {
    if family.is_empty() {
        return Ok(Vec::new());
    }
    if steps.len() + 1 != family.len() {
        return Err(Error::Input(format!(
            "{} projections need {} consecutive symmetries, got {}",
            family.len(),
            family.len() - 1,
            steps.len()
        )));
    }
    let algebra = family[0].algebra();
    for e in family.iter().map(|e| e.as_matrix()).chain(steps.iter().map(|s| s.as_matrix())) {
        family[0].same_algebra(e)?;
    }
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            if !family[i].is_orthogonal_to(&family[j]) {
                return Err(Error::Precondition(format!("e{i} and e{j} are not orthogonal")));
            }
        }
    }
    for (i, s) in steps.iter().enumerate() {
        if !s.conjugate(&family[i]).approx_eq(&family[i + 1]) {
            return Err(Error::Precondition(format!("s{i} does not carry e{i} to e{}", i + 1)));
        }
    }
    let mut out = Vec::new();
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            let symmetry = if j == i + 1 {
                steps[i].clone()
            } else {
                let x = SymmetryWitness::new(algebra, steps[i..j].to_vec())?;
                exchange_symmetry_orthogonal(&family[i], &family[j], &x)?
            };
            out.push(PairExchange { i, j, symmetry });
        }
    }
    Ok(out)
}

/// `aba`, and the same quantity computed as `2a∘(a∘b) − a²∘b`.
pub fn quadratic_representation<T: Scalar>(
    a: &SaElement<T>,
    b: &SaElement<T>,
) -> Result<(BlockMatrix<T>, SaElement<T>)> {
    let direct = a.mul(b).mul(a);
    let ab = jordan_product(a, b)?;
    let two = T::from_ratio(2, 1);
    let jordan = jordan_product(a, &ab)?.scale(&two).sub(jordan_product(&a.square(), b)?.as_matrix());
    Ok((direct, SaElement::new_unchecked(jordan)))
}

/// `pAp` is commutative, checked on the products of `p` with the matrix
/// units `E_ij + E_ji` spanning every block.
pub fn corner_is_commutative<T: Scalar>(p: &Projection<T>) -> bool {
    let alg = p.algebra();
    let mut gens = Vec::new();
    for (b, &n) in alg.block_dims().iter().enumerate() {
        for i in 0..n {
            for j in i..n {
                let g = alg.build(|k, m| {
                    if k == b {
                        &Matrix::unit(m, i, j) + &Matrix::unit(m, j, i)
                    } else {
                        Matrix::zeros(m, m)
                    }
                });
                gens.push(p.mul(&g).mul(p));
            }
        }
    }
    gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutes_with(b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::algebra::BlockAlgebra;
    use num_rational::BigRational;

    type Q = BigRational;

    fn alg(d: &[usize]) -> BlockAlgebra {
        BlockAlgebra::new(d.to_vec()).unwrap()
    }

    fn m(rows: &[&[i64]]) -> Matrix<Q> {
        Matrix::from_ints(rows)
    }

    fn sa(a: &BlockAlgebra, blocks: Vec<Matrix<Q>>) -> SaElement<Q> {
        SaElement::from_blocks(a, blocks).unwrap()
    }

    fn proj(a: &BlockAlgebra, blocks: Vec<Matrix<Q>>) -> Projection<Q> {
        Projection::from_blocks(a, blocks).unwrap()
    }

    fn sym(a: &BlockAlgebra, blocks: Vec<Matrix<Q>>) -> Symmetry<Q> {
        Symmetry::from_blocks(a, blocks).unwrap()
    }

    #[test]
    fn jordan_examples() {
        let a21 = alg(&[2, 1]);
        let a = sa(&a21, vec![m(&[&[1, 0], &[0, 0]]), m(&[&[2]])]);
        let b = sa(&a21, vec![m(&[&[0, 0], &[0, 1]]), m(&[&[3]])]);
        let ab = jordan_product(&a, &b).unwrap();
        assert_eq!(ab.blocks(), [m(&[&[0, 0], &[0, 0]]), m(&[&[6]])]);
        assert_eq!(*ab, a.mul(&b));
        let one = SaElement::new(a21.one()).unwrap();
        assert_eq!(jordan_product(&a, &one).unwrap(), a);

        let x = sa(&a21, vec![m(&[&[0, 1], &[1, 0]]), m(&[&[0]])]);
        let y = sa(&a21, vec![m(&[&[1, 0], &[0, 0]]), m(&[&[0]])]);
        let h = Q::from_ratio(1, 2);
        let z = Q::from_ratio(0, 1);
        let want = Matrix::from_rows(vec![vec![z.clone(), h.clone()], vec![h, z]]).unwrap();
        assert_eq!(jordan_product(&x, &y).unwrap().block(0), &want);

        let other = SaElement::new(alg(&[2]).one()).unwrap();
        assert!(matches!(jordan_product(&a, &other), Err(Error::Shape(_))));
    }

    #[test]
    fn central_cover_examples() {
        let a21 = alg(&[2, 1]);
        let a = a21.unit::<Q>(0, 0, 0);
        assert_eq!(central_cover_m(&a), a21.central(&[true, false]));
        assert_eq!(central_cover_m(&a21.zero::<Q>()), a21.central(&[false, false]));
        let b = a21.build(|i, n| if i == 0 { Matrix::identity(n) } else { m(&[&[5]]) });
        assert_eq!(*central_cover_m(&b), a21.one());
    }

    #[test]
    fn exchange_examples() {
        let a21 = alg(&[2, 1]);
        let p = proj(&a21, vec![m(&[&[1, 0], &[0, 0]]), m(&[&[0]])]);
        let q = proj(&a21, vec![m(&[&[0, 0], &[0, 1]]), m(&[&[0]])]);
        let swap = sym(&a21, vec![m(&[&[0, 1], &[1, 0]]), m(&[&[1]])]);
        let x = SymmetryWitness::new(&a21, vec![swap.clone()]).unwrap();
        let s = exchange_symmetry_orthogonal(&p, &q, &x).unwrap();
        assert_eq!(s, swap);

        let zero = proj(&a21, vec![m(&[&[0, 0], &[0, 0]]), m(&[&[0]])]);
        let s = exchange_symmetry_orthogonal(&zero, &zero, &SymmetryWitness::identity(&a21)).unwrap();
        assert_eq!(*s, a21.one());

        let a3 = alg(&[3]);
        let p = proj(&a3, vec![Matrix::unit(3, 0, 0)]);
        let q = proj(&a3, vec![Matrix::unit(3, 2, 2)]);
        let perm = sym(&a3, vec![m(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]])]);
        let x = SymmetryWitness::new(&a3, vec![perm.clone()]).unwrap();
        assert_eq!(exchange_symmetry_orthogonal(&p, &q, &x).unwrap(), perm);

        assert!(matches!(
            exchange_symmetry_orthogonal(&p, &p, &SymmetryWitness::identity(&a3)),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            exchange_symmetry_orthogonal(&p, &q, &SymmetryWitness::identity(&a3)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn localize_examples() {
        let a3 = alg(&[3]);
        let r = proj(&a3, vec![m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]])]);
        let p = proj(&a3, vec![Matrix::unit(3, 0, 0)]);
        let q = proj(&a3, vec![Matrix::unit(3, 1, 1)]);
        let s = sym(&a3, vec![m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]])]);
        let s1 = localize_symmetry(&r, &p, &q, &s).unwrap();
        assert_eq!(s1.block(0), &m(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 0]]));
        let back = extend_symmetry(&r, &s1).unwrap();
        assert_eq!(back.conjugate(&p), *q);

        let one = Symmetry::identity(&a3);
        let s1 = localize_symmetry(&r, &p, &p, &one).unwrap();
        assert_eq!(s1.mul(&p).mul(&s1), *p);

        assert!(matches!(localize_symmetry(&p, &p, &q, &s), Err(Error::Precondition(m)) if m.contains("q ≤ r")));
        assert!(matches!(localize_symmetry(&r, &p, &q, &one), Err(Error::Precondition(m)) if m.contains("sps")));
    }

    #[test]
    fn chained_examples() {
        let a4 = alg(&[4]);
        let family: Vec<_> = (0..4).map(|i| proj(&a4, vec![Matrix::unit(4, i, i)])).collect();
        let steps: Vec<_> = (0..3)
            .map(|i| {
                let mut t = Matrix::<Q>::identity(4);
                t[(i, i)] = Q::from_ratio(0, 1);
                t[(i + 1, i + 1)] = Q::from_ratio(0, 1);
                t[(i, i + 1)] = Q::from_ratio(1, 1);
                t[(i + 1, i)] = Q::from_ratio(1, 1);
                sym(&a4, vec![t])
            })
            .collect();
        let out = chained_exchange(&family, &steps).unwrap();
        assert_eq!(out.len(), 6);
        let e13 = out.iter().find(|x| (x.i, x.j) == (0, 2)).unwrap();
        assert_eq!(e13.symmetry.conjugate(&family[0]), *family[2]);
        for x in &out {
            assert!(x.symmetry.is_symmetry());
            assert_eq!(x.symmetry.conjugate(&family[x.i]), *family[x.j]);
        }

        assert!(chained_exchange(&family[..1], &[]).unwrap().is_empty());

        let a22 = alg(&[2, 2]);
        let e1 = proj(&a22, vec![Matrix::unit(2, 0, 0), Matrix::zeros(2, 2)]);
        let e2 = proj(&a22, vec![Matrix::unit(2, 1, 1), Matrix::zeros(2, 2)]);
        let swap = sym(&a22, vec![m(&[&[0, 1], &[1, 0]]), Matrix::identity(2)]);
        let out = chained_exchange(&[e1.clone(), e2], &[swap.clone()]).unwrap();
        assert_eq!(out.len(), 1);
        assert_eq!(out[0].symmetry, swap);

        assert!(matches!(chained_exchange(&[e1.clone(), e1], &[swap]), Err(Error::Precondition(_))));
    }

    #[test]
    fn lattice_examples() {
        let a3 = alg(&[3]);
        let p = proj(&a3, vec![Matrix::unit(3, 0, 0)]);
        let q = proj(&a3, vec![m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]])]);
        assert_eq!(projection_meet(&p, &q).unwrap(), p);
        assert_eq!(projection_join(&p, &q).unwrap(), q);

        let a2 = alg(&[2]);
        let p = proj(&a2, vec![Matrix::unit(2, 0, 0)]);
        let h = Q::from_ratio(1, 2);
        let d = Matrix::from_rows(vec![vec![h.clone(), h.clone()], vec![h.clone(), h]]).unwrap();
        let q = proj(&a2, vec![d]);
        assert!(projection_meet(&p, &q).unwrap().is_zero());
        assert_eq!(*projection_join(&p, &q).unwrap(), a2.one());

        let r = proj(&a2, vec![Matrix::unit(2, 1, 1)]);
        assert_eq!(*projection_join(&p, &r).unwrap(), p.add(&r));
    }

    #[test]
    fn abelian_corners() {
        let a = alg(&[2, 1]);
        let rank_one = proj(&a, vec![Matrix::unit(2, 0, 0), m(&[&[1]])]);
        assert!(corner_is_commutative(&rank_one));
        let full = Projection::new(a.one::<Q>()).unwrap();
        assert!(!corner_is_commutative(&full));
    }
}

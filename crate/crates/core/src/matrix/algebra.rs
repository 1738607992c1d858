use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::dense::Matrix;
use super::scalar::Scalar;

/// `M_{n₁}(ℝ) ⊕ ⋯ ⊕ M_{n_k}(ℝ)`, described by its block sizes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockAlgebra {
    #[serde(rename = "blocks")]
    block_dims: Vec<usize>,
}

impl BlockAlgebra {
    pub fn new(block_dims: Vec<usize>) -> Result<Self> {
        if block_dims.is_empty() {
            return Err(Error::Shape("a block algebra needs at least one block".into()));
        }
        if block_dims.contains(&0) {
            return Err(Error::Shape("block sizes must be positive".into()));
        }
        Ok(BlockAlgebra { block_dims })
    }

    pub fn block_dims(&self) -> &[usize] {
        &self.block_dims
    }

    pub fn num_blocks(&self) -> usize {
        self.block_dims.len()
    }

    /// Real dimension `Σ nᵢ²` of the full algebra.
    pub fn dimension(&self) -> usize {
        self.block_dims.iter().map(|n| n * n).sum()
    }

    pub fn zero<T: Scalar>(&self) -> BlockMatrix<T> {
        self.build(|_, n| Matrix::zeros(n, n))
    }

    pub fn one<T: Scalar>(&self) -> BlockMatrix<T> {
        self.build(|_, n| Matrix::identity(n))
    }

    pub fn build<T: Scalar>(&self, mut f: impl FnMut(usize, usize) -> Matrix<T>) -> BlockMatrix<T> {
        let blocks = self.block_dims.iter().enumerate().map(|(i, &n)| f(i, n)).collect();
        BlockMatrix { algebra: self.clone(), blocks }
    }

    /// The central projection that is the identity on the blocks selected by `mask`.
    pub fn central<T: Scalar>(&self, mask: &[bool]) -> Projection<T> {
        Projection(self.build(|i, n| if mask[i] { Matrix::identity(n) } else { Matrix::zeros(n, n) }))
    }

    pub fn central_projections<T: Scalar>(&self) -> Vec<Projection<T>> {
        let k = self.num_blocks();
        (0..1usize << k)
            .map(|bits| {
                let mask: Vec<bool> = (0..k).map(|i| bits >> i & 1 == 1).collect();
                self.central(&mask)
            })
            .collect()
    }

    /// `E_{ij}` placed in block `block`, zero elsewhere.
    pub fn unit<T: Scalar>(&self, block: usize, i: usize, j: usize) -> BlockMatrix<T> {
        self.build(|b, n| if b == block { Matrix::unit(n, i, j) } else { Matrix::zeros(n, n) })
    }
}

/// An element of the associative algebra `⊕ M_{nᵢ}(ℝ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BlockMatrix<T> {
    algebra: BlockAlgebra,
    blocks: Vec<Matrix<T>>,
}

impl<T: Scalar> BlockMatrix<T> {
    pub fn new(algebra: &BlockAlgebra, blocks: Vec<Matrix<T>>) -> Result<Self> {
        if blocks.len() != algebra.num_blocks() {
            return Err(Error::Shape(format!(
                "expected {} blocks, got {}",
                algebra.num_blocks(),
                blocks.len()
            )));
        }
        for (i, (b, &n)) in blocks.iter().zip(algebra.block_dims()).enumerate() {
            if (b.rows(), b.cols()) != (n, n) {
                return Err(Error::Shape(format!(
                    "block {i} is {}x{}, expected {n}x{n}",
                    b.rows(),
                    b.cols()
                )));
            }
        }
        Ok(BlockMatrix { algebra: algebra.clone(), blocks })
    }

    pub fn algebra(&self) -> &BlockAlgebra {
        &self.algebra
    }

    pub fn blocks(&self) -> &[Matrix<T>] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &Matrix<T> {
        &self.blocks[i]
    }

    pub fn same_algebra(&self, other: &Self) -> Result<()> {
        if self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::Shape(format!(
                "blocks {:?} vs {:?}",
                self.algebra.block_dims(),
                other.algebra.block_dims()
            )))
        }
    }

    fn zip(&self, other: &Self, f: impl Fn(&Matrix<T>, &Matrix<T>) -> Matrix<T>) -> Self {
        assert_eq!(self.algebra, other.algebra, "elements of different block algebras");
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| f(a, b)).collect();
        BlockMatrix { algebra: self.algebra.clone(), blocks }
    }

    fn map(&self, f: impl Fn(&Matrix<T>) -> Matrix<T>) -> Self {
        BlockMatrix { algebra: self.algebra.clone(), blocks: self.blocks.iter().map(f).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a * b)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, k: &T) -> Self {
        self.map(|a| a.scale(k))
    }

    pub fn transpose(&self) -> Self {
        self.map(Matrix::transpose)
    }

    /// `1 - self`.
    pub fn one_minus(&self) -> Self {
        self.algebra.one().sub(self)
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    pub fn traces(&self) -> Vec<T> {
        self.blocks.iter().map(Matrix::trace).collect()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.blocks.iter().map(|b| b.frobenius_norm().powi(2)).sum::<f64>().sqrt()
    }

    pub fn distance(&self, other: &Self) -> f64 {
        self.sub(other).frobenius_norm()
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        if self.algebra != other.algebra {
            return false;
        }
        if T::EXACT {
            self == other
        } else {
            self.distance(other) <= T::tolerance()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.approx_eq(&self.algebra.zero())
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.mul(other).approx_eq(&other.mul(self))
    }

    pub fn is_self_adjoint(&self) -> bool {
        self.blocks.iter().all(Matrix::is_symmetric)
    }

    pub fn is_projection(&self) -> bool {
        self.is_self_adjoint() && self.square().approx_eq(self)
    }

    pub fn is_symmetry(&self) -> bool {
        self.is_self_adjoint() && self.square().approx_eq(&self.algebra.one())
    }

    pub fn is_positive(&self) -> bool {
        self.blocks.iter().all(Matrix::is_psd)
    }

    /// `self ≤ other` in the order of self-adjoint elements.
    pub fn leq(&self, other: &Self) -> bool {
        other.sub(self).is_positive()
    }
}

macro_rules! checked_wrapper {
    ($(#[$m:meta])* $name:ident, $check:ident, $what:literal) => {
        $(#[$m])*
        #[derive(Clone, Debug, PartialEq)]
        pub struct $name<T>(BlockMatrix<T>);

        impl<T: Scalar> $name<T> {
            pub fn new(m: BlockMatrix<T>) -> Result<Self> {
                if m.$check() {
                    Ok($name(m))
                } else {
                    Err(Error::Input(concat!("element is not ", $what).into()))
                }
            }

            pub fn from_blocks(algebra: &BlockAlgebra, blocks: Vec<Matrix<T>>) -> Result<Self> {
                Self::new(BlockMatrix::new(algebra, blocks)?)
            }

            pub fn as_matrix(&self) -> &BlockMatrix<T> {
                &self.0
            }

            pub fn into_matrix(self) -> BlockMatrix<T> {
                self.0
            }

            pub(crate) fn new_unchecked(m: BlockMatrix<T>) -> Self {
                $name(m)
            }
        }

        impl<T> Deref for $name<T> {
            type Target = BlockMatrix<T>;

            fn deref(&self) -> &BlockMatrix<T> {
                &self.0
            }
        }
    };
}

checked_wrapper!(
    /// Self-adjoint element: every block symmetric.
    SaElement,
    is_self_adjoint,
    "self-adjoint"
);
checked_wrapper!(
    /// `p = pᵀ = p²`.
    Projection,
    is_projection,
    "a projection"
);
checked_wrapper!(
    /// `s = sᵀ` and `s² = 1`.
    Symmetry,
    is_symmetry,
    "a symmetry"
);

impl<T: Scalar> Projection<T> {
    pub fn complement(&self) -> Self {
        Projection(self.one_minus())
    }

    /// Block ranks, read off the traces.
    pub fn ranks(&self) -> Vec<usize> {
        self.traces().iter().map(|t| t.to_f64_lossy().round().max(0.0) as usize).collect()
    }

    /// `self ≤ other` for projections: `other · self = self`.
    pub fn below(&self, other: &Projection<T>) -> bool {
        other.mul(self).approx_eq(self)
    }

    pub fn is_orthogonal_to(&self, other: &Projection<T>) -> bool {
        self.mul(other).is_zero()
    }

    pub fn to_sa(&self) -> SaElement<T> {
        SaElement(self.0.clone())
    }
}

impl<T: Scalar> Symmetry<T> {
    pub fn identity(algebra: &BlockAlgebra) -> Self {
        Symmetry(algebra.one())
    }

    /// `1 - 2p`.
    pub fn reflection(p: &Projection<T>) -> Self {
        Symmetry(p.one_minus().sub(p))
    }

    /// `s a s`.
    pub fn conjugate(&self, a: &BlockMatrix<T>) -> BlockMatrix<T> {
        self.mul(a).mul(self)
    }
}

impl<T: Scalar> SaElement<T> {
    pub fn square(&self) -> SaElement<T> {
        SaElement(self.0.square())
    }
}

/// Ordered symmetries `s₁, …, sₘ` standing for `x = sₘ⋯s₁`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetryWitness<T> {
    algebra: BlockAlgebra,
    factors: Vec<Symmetry<T>>,
}

impl<T: Scalar> SymmetryWitness<T> {
    pub fn new(algebra: &BlockAlgebra, factors: Vec<Symmetry<T>>) -> Result<Self> {
        if factors.iter().any(|s| s.algebra() != algebra) {
            return Err(Error::Shape("witness factors from a different algebra".into()));
        }
        Ok(SymmetryWitness { algebra: algebra.clone(), factors })
    }

    pub fn identity(algebra: &BlockAlgebra) -> Self {
        SymmetryWitness { algebra: algebra.clone(), factors: Vec::new() }
    }

    pub fn algebra(&self) -> &BlockAlgebra {
        &self.algebra
    }

    pub fn factors(&self) -> &[Symmetry<T>] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// `x = sₘ⋯s₁`.
    pub fn product(&self) -> BlockMatrix<T> {
        self.factors.iter().fold(self.algebra.one(), |acc, s| s.mul(&acc))
    }

    /// `x* = s₁⋯sₘ`.
    pub fn adjoint(&self) -> BlockMatrix<T> {
        self.factors.iter().fold(self.algebra.one(), |acc, s| acc.mul(s))
    }

    /// `x a x*`.
    pub fn conjugate(&self, a: &BlockMatrix<T>) -> BlockMatrix<T> {
        self.product().mul(a).mul(&self.adjoint())
    }

    pub fn certifies(&self, p: &Projection<T>, q: &Projection<T>) -> bool {
        p.algebra() == &self.algebra && q.algebra() == &self.algebra && self.conjugate(p).approx_eq(q)
    }

    /// `s₁, …, sₘ, t₁, …, tₙ`, the witness for `y x` where `y` is `other`.
    pub fn then(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        SymmetryWitness { algebra: self.algebra.clone(), factors }
    }
}

//! Exact rational arithmetic, integer Gram matrices, and signatures.
//!
//! Everything here is exact: scalars are arbitrary-precision rationals and
//! the signature is computed by symmetric congruence diagonalization over
//! the rationals, never by floating-point eigenvalues.

use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::Result;

/// Arbitrary-precision rational scalar, always in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Vector of exact rationals, used for cohomology classes in the basis of
/// vanishing-cycle duals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatVector {
    entries: Vec<Rational>,
}

impl RatVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        RatVector { entries }
    }

    pub fn zero(len: usize) -> Self {
        RatVector {
            entries: vec![Rational::zero(); len],
        }
    }

    /// Standard basis vector `e_i` (0-based index).
    pub fn basis(len: usize, i: usize) -> Self {
        let mut v = Self::zero(len);
        v.entries[i] = rat(1);
        v
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        RatVector {
            entries: entries.iter().map(|&n| rat(n)).collect(),
        }
    }

    pub fn from_bigints(entries: &[BigInt]) -> Self {
        RatVector {
            entries: entries
                .iter()
                .map(|n| Rational::from_integer(n.clone()))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &Rational {
        &self.entries[i]
    }

    pub fn add(&self, other: &RatVector) -> RatVector {
        debug_assert_eq!(self.len(), other.len());
        RatVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &RatVector) -> RatVector {
        debug_assert_eq!(self.len(), other.len());
        RatVector {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> RatVector {
        RatVector {
            entries: self.entries.iter().map(|a| a * c).collect(),
        }
    }
}

impl std::ops::Index<usize> for RatVector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.entries[i]
    }
}

impl fmt::Display for RatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Inertia of a symmetric bilinear form: counts of positive, negative and
/// zero diagonal entries after exact diagonalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Signature {
    pub b_plus: usize,
    pub b_minus: usize,
    pub b_zero: usize,
}

impl Signature {
    pub fn rank(&self) -> usize {
        self.b_plus + self.b_minus + self.b_zero
    }

    /// Nondegenerate iff no zero eigenvalues.
    pub fn is_nondegenerate(&self) -> bool {
        self.b_zero == 0
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.b_plus, self.b_minus, self.b_zero)
    }
}

/// Integral lattice: a free abelian group with a symmetric integer Gram
/// matrix, modelling the intersection form on second cohomology.
///
/// Immutable after construction. The signature is computed on first request
/// and cached; the one-shot fill is race-free because the computation is
/// deterministic and idempotent.
#[derive(Debug)]
pub struct Lattice {
    rank: usize,
    gram: Vec<Vec<i64>>,
    signature: OnceLock<Signature>,
}

impl Clone for Lattice {
    fn clone(&self) -> Self {
        Lattice {
            rank: self.rank,
            gram: self.gram.clone(),
            signature: self.signature.clone(),
        }
    }
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.gram == other.gram
    }
}

impl Eq for Lattice {}

impl Lattice {
    /// Builds a lattice from a square symmetric integer matrix.
    pub fn new(gram: Vec<Vec<i64>>) -> Result<Self> {
        let rank = gram.len();
        for (i, row) in gram.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::RaggedGram {
                    row: i + 1,
                    len: row.len(),
                    expected: rank,
                });
            }
        }
        for i in 0..rank {
            for j in (i + 1)..rank {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::AsymmetricGram {
                        row: i + 1,
                        col: j + 1,
                    });
                }
            }
        }
        Ok(Lattice {
            rank,
            gram,
            signature: OnceLock::new(),
        })
    }

    /// Diagonal lattice `diag(d_1, ..., d_n)`.
    pub fn diagonal(diag: &[i64]) -> Self {
        let rank = diag.len();
        let mut gram = vec![vec![0; rank]; rank];
        for (i, &d) in diag.iter().enumerate() {
            gram[i][i] = d;
        }
        Lattice {
            rank,
            gram,
            signature: OnceLock::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn gram_entry(&self, i: usize, j: usize) -> i64 {
        self.gram[i][j]
    }

    fn check_rank(&self, len: usize) -> Result<()> {
        if len != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: len,
            });
        }
        Ok(())
    }

    /// Exact pairing `v^T . gram . w`.
    pub fn inner_product(&self, v: &RatVector, w: &RatVector) -> Result<Rational> {
        self.check_rank(v.len())?;
        self.check_rank(w.len())?;
        let mut total = Rational::zero();
        for (i, vi) in v.entries().iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            let mut row = Rational::zero();
            for (j, wj) in w.entries().iter().enumerate() {
                let g = self.gram[i][j];
                if g != 0 && !wj.is_zero() {
                    row += wj * Rational::from_integer(BigInt::from(g));
                }
            }
            total += vi * row;
        }
        Ok(total)
    }

    /// Integer pairing for integer class vectors.
    pub fn inner_product_int(&self, v: &[BigInt], w: &[BigInt]) -> Result<BigInt> {
        self.check_rank(v.len())?;
        self.check_rank(w.len())?;
        let mut total = BigInt::zero();
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            let mut row = BigInt::zero();
            for (j, wj) in w.iter().enumerate() {
                let g = self.gram[i][j];
                if g != 0 {
                    row += wj * g;
                }
            }
            total += vi * row;
        }
        Ok(total)
    }

    /// `gram . v` for an integer vector, used to cache pairings during
    /// long reflection orbits.
    pub fn gram_apply_int(&self, v: &[BigInt]) -> Vec<BigInt> {
        debug_assert_eq!(v.len(), self.rank);
        (0..self.rank)
            .map(|i| {
                let mut acc = BigInt::zero();
                for (j, vj) in v.iter().enumerate() {
                    let g = self.gram[i][j];
                    if g != 0 {
                        acc += vj * g;
                    }
                }
                acc
            })
            .collect()
    }

    /// Signature of the form, cached after the first computation.
    pub fn signature(&self) -> Signature {
        *self
            .signature
            .get_or_init(|| congruence_signature(&self.gram))
    }

    pub fn b_plus(&self) -> usize {
        self.signature().b_plus
    }
}

/// Exact Lagrange diagonalization of a symmetric matrix by simultaneous
/// row/column operations, returning the inertia counts.
///
/// Zero pivots are repaired by first swapping in a later nonzero diagonal
/// entry; when the whole remaining diagonal is zero, adding row+column `j`
/// for any `j` with `a[k][j] != 0` creates the pivot `2 a[k][j]`. If no such
/// `j` exists the row is identically zero and contributes to `b_zero`, so
/// the procedure is total on symmetric matrices.
fn congruence_signature(gram: &[Vec<i64>]) -> Signature {
    let n = gram.len();
    let mut a: Vec<Vec<Rational>> = gram
        .iter()
        .map(|row| row.iter().map(|&x| rat(x)).collect())
        .collect();
    let mut sig = Signature {
        b_plus: 0,
        b_minus: 0,
        b_zero: 0,
    };

    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = ((k + 1)..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = ((k + 1)..n).find(|&j| !a[k][j].is_zero()) {
                for c in 0..n {
                    let t = a[j][c].clone();
                    a[k][c] += t;
                }
                for r in 0..n {
                    let t = a[r][j].clone();
                    a[r][k] += t;
                }
            } else {
                sig.b_zero += 1;
                continue;
            }
        }
        let pivot = a[k][k].clone();
        if pivot.is_positive() {
            sig.b_plus += 1;
        } else {
            sig.b_minus += 1;
        }
        for i in (k + 1)..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &pivot;
            for c in 0..n {
                let t = &f * &a[k][c];
                a[i][c] -= t;
            }
            for r in 0..n {
                let t = &f * &a[r][k];
                a[r][i] -= t;
            }
        }
    }
    sig
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inner_product_single_negative_class() {
        let l = Lattice::diagonal(&[-2]);
        let e1 = RatVector::basis(1, 0);
        assert_eq!(l.inner_product(&e1, &e1).unwrap(), rat(-2));
    }

    #[test]
    fn inner_product_zero_vector() {
        let l = Lattice::diagonal(&[-2, 3, 0]);
        let z = RatVector::zero(3);
        let v = RatVector::from_ints(&[1, -4, 7]);
        assert_eq!(l.inner_product(&z, &v).unwrap(), rat(0));
    }

    #[test]
    fn inner_product_rank_mismatch() {
        let l = Lattice::diagonal(&[-2, -2]);
        let v = RatVector::zero(3);
        let w = RatVector::zero(2);
        assert!(matches!(
            l.inner_product(&v, &w),
            Err(Error::RankMismatch { expected: 2, got: 3 })
        ));
    }

    #[test]
    fn asymmetric_gram_rejected() {
        let err = Lattice::new(vec![vec![0, 1], vec![2, 0]]).unwrap_err();
        assert!(matches!(err, Error::AsymmetricGram { row: 1, col: 2 }));
    }

    #[test]
    fn signature_single_negative() {
        let l = Lattice::diagonal(&[-2]);
        assert_eq!(
            l.signature(),
            Signature {
                b_plus: 0,
                b_minus: 1,
                b_zero: 0
            }
        );
    }

    #[test]
    fn signature_hyperbolic_plane() {
        let l = Lattice::new(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(
            l.signature(),
            Signature {
                b_plus: 1,
                b_minus: 1,
                b_zero: 0
            }
        );
    }

    #[test]
    fn signature_zero_pivot_with_nonzero_diagonal_partner() {
        // Adding a row here would kill the pivot (2*1 + (-2) = 0); the
        // diagonal swap has to run first.
        let l = Lattice::new(vec![vec![0, 1], vec![1, -2]]).unwrap();
        assert_eq!(
            l.signature(),
            Signature {
                b_plus: 1,
                b_minus: 1,
                b_zero: 0
            }
        );
    }

    #[test]
    fn signature_zero_block() {
        let l = Lattice::diagonal(&[0, 0, 5]);
        let s = l.signature();
        assert_eq!((s.b_plus, s.b_minus, s.b_zero), (1, 0, 2));
    }

    #[test]
    fn signature_is_cached() {
        let l = Lattice::diagonal(&[1, -1]);
        let first = l.signature();
        let second = l.signature();
        assert_eq!(first, second);
    }
}

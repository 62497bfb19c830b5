//! Reflections in (-2)-classes and their compositions.
//!
//! A Dehn twist on a sphere of square -2 acts on second cohomology by the
//! Picard-Lefschetz formula `v -> v + <v,s> s`, a reflection in the
//! hyperplane orthogonal to the class `s`. This module applies single
//! reflections, composes them over ordered sequences, and computes orders
//! of the resulting isometries.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::lattice::{rat, Lattice, RatVector, Rational};
use crate::Result;

/// Homology class of an embedded sphere with self-intersection -2,
/// in the integer basis of the ambient lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereClass {
    vec: Vec<BigInt>,
}

impl SphereClass {
    /// Validates rank and the square -2 condition against `lattice`.
    pub fn new(lattice: &Lattice, vec: Vec<BigInt>) -> Result<Self> {
        if vec.len() != lattice.rank() {
            return Err(Error::RankMismatch {
                expected: lattice.rank(),
                got: vec.len(),
            });
        }
        let square = lattice.inner_product_int(&vec, &vec)?;
        if square != BigInt::from(-2) {
            return Err(Error::SphereSquare { square });
        }
        Ok(SphereClass { vec })
    }

    pub fn from_ints(lattice: &Lattice, entries: &[i64]) -> Result<Self> {
        Self::new(lattice, entries.iter().map(|&n| BigInt::from(n)).collect())
    }

    /// Basis class `e_i` (0-based); requires `gram[i][i] = -2`.
    pub fn basis(lattice: &Lattice, i: usize) -> Result<Self> {
        let mut vec = vec![BigInt::zero(); lattice.rank()];
        vec[i] = BigInt::one();
        Self::new(lattice, vec)
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.vec
    }

    pub fn to_rat_vector(&self) -> RatVector {
        RatVector::from_bigints(&self.vec)
    }
}

impl fmt::Display for SphereClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.vec.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Ordered sequence of sphere classes in a fixed lattice, traversed
/// `repeat` times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereSeq {
    lattice: Lattice,
    classes: Vec<SphereClass>,
    repeat: u32,
}

impl SphereSeq {
    /// Re-validates every class against `lattice`; `repeat >= 1`.
    pub fn new(lattice: Lattice, classes: Vec<SphereClass>, repeat: u32) -> Result<Self> {
        assert!(repeat >= 1, "repeat must be positive");
        for c in &classes {
            // revalidate: classes may have been built against another lattice
            SphereClass::new(&lattice, c.vec.clone())?;
        }
        Ok(SphereSeq {
            lattice,
            classes,
            repeat,
        })
    }

    /// The sequence `e_1, ..., e_n` of all basis classes in order.
    pub fn basis_config(lattice: Lattice, repeat: u32) -> Result<Self> {
        let classes = (0..lattice.rank())
            .map(|i| SphereClass::basis(&lattice, i))
            .collect::<Result<Vec<_>>>()?;
        Self::new(lattice, classes, repeat)
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn classes(&self) -> &[SphereClass] {
        &self.classes
    }

    pub fn repeat(&self) -> u32 {
        self.repeat
    }

    /// Number of reflections in the fully expanded word.
    pub fn expanded_len(&self) -> usize {
        self.classes.len() * self.repeat as usize
    }

    /// Folds `repeat` into an explicit word of length `classes * repeat`.
    pub fn expand(&self) -> SphereSeq {
        let mut classes = Vec::with_capacity(self.expanded_len());
        for _ in 0..self.repeat {
            classes.extend(self.classes.iter().cloned());
        }
        SphereSeq {
            lattice: self.lattice.clone(),
            classes,
            repeat: 1,
        }
    }
}

/// Rational matrix acting on `RatVector` by left multiplication; carries
/// compositions of Picard-Lefschetz reflections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeMap {
    matrix: Vec<Vec<Rational>>, // row-major
}

impl LatticeMap {
    pub fn identity(n: usize) -> Self {
        let mut matrix = vec![vec![Rational::zero(); n]; n];
        for (i, row) in matrix.iter_mut().enumerate() {
            row[i] = rat(1);
        }
        LatticeMap { matrix }
    }

    pub fn from_rows(matrix: Vec<Vec<Rational>>) -> Self {
        debug_assert!(matrix.iter().all(|r| r.len() == matrix.len()));
        LatticeMap { matrix }
    }

    fn from_int_columns(cols: &[Vec<BigInt>]) -> Self {
        let n = cols.len();
        let mut matrix = vec![vec![Rational::zero(); n]; n];
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                matrix[i][j] = Rational::from_integer(x.clone());
            }
        }
        LatticeMap { matrix }
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.matrix[i][j]
    }

    pub fn apply(&self, v: &RatVector) -> Result<RatVector> {
        if v.len() != self.dim() {
            return Err(Error::RankMismatch {
                expected: self.dim(),
                got: v.len(),
            });
        }
        let entries = self
            .matrix
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v.entries())
                    .filter(|(m, x)| !m.is_zero() && !x.is_zero())
                    .map(|(m, x)| m * x)
                    .sum()
            })
            .collect();
        Ok(RatVector::new(entries))
    }

    /// Matrix product `self * other` (apply `other` first).
    pub fn compose_with(&self, other: &LatticeMap) -> LatticeMap {
        let n = self.dim();
        debug_assert_eq!(n, other.dim());
        let mut matrix = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                if self.matrix[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    if other.matrix[k][j].is_zero() {
                        continue;
                    }
                    let t = &self.matrix[i][k] * &other.matrix[k][j];
                    matrix[i][j] += t;
                }
            }
        }
        LatticeMap { matrix }
    }

    pub fn pow(&self, k: u32) -> LatticeMap {
        let mut acc = LatticeMap::identity(self.dim());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.compose_with(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.compose_with(&base);
            }
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
        })
    }

    pub fn trace(&self) -> Rational {
        (0..self.dim()).map(|i| self.matrix[i][i].clone()).sum()
    }

    /// Exact determinant by rational Gaussian elimination.
    pub fn determinant(&self) -> Rational {
        let n = self.dim();
        let mut a = self.matrix.clone();
        let mut det = rat(1);
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Rational::zero();
            };
            if p != k {
                a.swap(p, k);
                det = -det;
            }
            det *= a[k][k].clone();
            for i in (k + 1)..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] / &a[k][k];
                for j in k..n {
                    let t = &f * &a[k][j];
                    a[i][j] -= t;
                }
            }
        }
        det
    }

    /// Whether `self` preserves the form of `lattice`: `M^T G M = G`.
    pub fn preserves_form(&self, lattice: &Lattice) -> bool {
        let n = self.dim();
        if n != lattice.rank() {
            return false;
        }
        for i in 0..n {
            let col_i = RatVector::new((0..n).map(|r| self.matrix[r][i].clone()).collect());
            for j in i..n {
                let col_j = RatVector::new((0..n).map(|r| self.matrix[r][j].clone()).collect());
                let paired = lattice.inner_product(&col_i, &col_j).expect("rank checked");
                if paired != rat(lattice.gram_entry(i, j)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Picard-Lefschetz reflection of `v` in the class `s`: `v + <v,s> s`.
pub fn reflect(lattice: &Lattice, s: &SphereClass, v: &RatVector) -> Result<RatVector> {
    if v.len() != lattice.rank() {
        return Err(Error::RankMismatch {
            expected: lattice.rank(),
            got: v.len(),
        });
    }
    let c = lattice.inner_product(v, &s.to_rat_vector())?;
    Ok(v.add(&s.to_rat_vector().scale(&c)))
}

/// Reflection of an integer class in an integer class, staying integral.
pub fn reflect_class(lattice: &Lattice, s: &SphereClass, v: &[BigInt]) -> Result<Vec<BigInt>> {
    let c = lattice.inner_product_int(v, s.entries())?;
    Ok(v.iter()
        .zip(s.entries())
        .map(|(vi, si)| vi + &c * si)
        .collect())
}

/// The reflection as a matrix; squares to the identity and preserves the
/// form, both verified on construction.
pub fn reflection_matrix(lattice: &Lattice, s: &SphereClass) -> Result<LatticeMap> {
    let n = lattice.rank();
    let gs = lattice.gram_apply_int(s.entries());
    let cols: Vec<Vec<BigInt>> = (0..n)
        .map(|j| {
            let mut col: Vec<BigInt> = (0..n)
                .map(|i| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect();
            let c = gs[j].clone();
            for (ci, si) in col.iter_mut().zip(s.entries()) {
                *ci += &c * si;
            }
            col
        })
        .collect();
    let m = LatticeMap::from_int_columns(&cols);
    debug_assert!(m.compose_with(&m).is_identity());
    if !m.preserves_form(lattice) {
        // cannot happen for a valid (-2)-class; guard against internal misuse
        return Err(Error::SphereSquare {
            square: lattice.inner_product_int(s.entries(), s.entries())?,
        });
    }
    Ok(m)
}

/// Matrix of one traversal of the word, first listed class applied first:
/// `R_{s_m} ... R_{s_1}` as integer columns.
fn traversal_columns(lattice: &Lattice, classes: &[SphereClass]) -> Vec<Vec<BigInt>> {
    let n = lattice.rank();
    let mut cols: Vec<Vec<BigInt>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect();
    for s in classes {
        let gs = lattice.gram_apply_int(s.entries());
        for col in cols.iter_mut() {
            let c: BigInt = gs.iter().zip(col.iter()).map(|(g, x)| g * x).sum();
            if c.is_zero() {
                continue;
            }
            for (ci, si) in col.iter_mut().zip(s.entries()) {
                *ci += &c * si;
            }
        }
    }
    cols
}

/// Composite of the whole sequence: the product of the reflections of
/// `S_1, ..., S_m` with `S_1` applied first (rightmost factor), raised to
/// the `repeat`-th power. The empty sequence gives the identity.
pub fn compose(seq: &SphereSeq) -> LatticeMap {
    let base = LatticeMap::from_int_columns(&traversal_columns(seq.lattice(), seq.classes()));
    base.pow(seq.repeat())
}

/// Least `k >= 1` with `m^k = Id`, or `None` past the cap.
///
/// A finite-order isometry has all eigenvalues roots of unity, so every
/// power has |trace| <= dim; once a power violates that bound the order is
/// provably infinite and the search stops early.
pub fn monodromy_order(m: &LatticeMap, cap: u32) -> Option<u32> {
    assert!(cap >= 1, "cap must be positive");
    let dim = rat(m.dim() as i64);
    let mut p = m.clone();
    for k in 1..=cap {
        if p.is_identity() {
            return Some(k);
        }
        if p.trace().abs() > dim {
            return None;
        }
        p = p.compose_with(m);
    }
    None
}

/// Default power cap for [`monodromy_order`].
pub const DEFAULT_ORDER_CAP: u32 = 10_000;

/// Whether the composite of the whole sequence acts as the identity.
pub fn is_homologically_trivial(seq: &SphereSeq) -> bool {
    compose(seq).is_identity()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Rank-2 lattice with a single weight-1 edge.
    fn a2() -> Lattice {
        Lattice::new(vec![vec![-2, 1], vec![1, -2]]).unwrap()
    }

    #[test]
    fn reflect_class_in_itself_negates() {
        let l = a2();
        let s = SphereClass::basis(&l, 0).unwrap();
        let v = s.to_rat_vector();
        let r = reflect(&l, &s, &v).unwrap();
        assert_eq!(r, v.scale(&rat(-1)));
    }

    #[test]
    fn reflect_adjacent_basis_vector() {
        // gram(1,2) = 1, so e2 -> e2 + e1
        let l = a2();
        let s = SphereClass::basis(&l, 0).unwrap();
        let v = RatVector::basis(2, 1);
        let r = reflect(&l, &s, &v).unwrap();
        assert_eq!(r, RatVector::from_ints(&[1, 1]));
    }

    #[test]
    fn reflect_fixes_orthogonal_vector() {
        let l = Lattice::diagonal(&[-2, 5]);
        let s = SphereClass::basis(&l, 0).unwrap();
        let v = RatVector::basis(2, 1);
        assert_eq!(reflect(&l, &s, &v).unwrap(), v);
    }

    #[test]
    fn reflection_matrix_rank_one() {
        let l = Lattice::diagonal(&[-2]);
        let s = SphereClass::basis(&l, 0).unwrap();
        let m = reflection_matrix(&l, &s).unwrap();
        assert_eq!(m.entry(0, 0), &rat(-1));
    }

    #[test]
    fn reflection_matrix_is_involution_with_det_minus_one() {
        let l = a2();
        for i in 0..2 {
            let s = SphereClass::basis(&l, i).unwrap();
            let m = reflection_matrix(&l, &s).unwrap();
            assert!(m.compose_with(&m).is_identity());
            assert_eq!(m.determinant(), rat(-1));
        }
    }

    #[test]
    fn sphere_class_square_validated() {
        let l = Lattice::diagonal(&[-2, -2]);
        let err = SphereClass::from_ints(&l, &[1, 1]).unwrap_err();
        assert!(matches!(err, Error::SphereSquare { .. }));
    }

    #[test]
    fn compose_empty_sequence_is_identity() {
        let l = a2();
        let seq = SphereSeq::new(l, vec![], 1).unwrap();
        assert!(compose(&seq).is_identity());
    }

    #[test]
    fn compose_concatenation_is_product() {
        // compose(w2 ++ w1-applied-first) = compose(w2) * compose(w1)
        let l = a2();
        let s1 = SphereClass::basis(&l, 0).unwrap();
        let s2 = SphereClass::basis(&l, 1).unwrap();
        let w1 = SphereSeq::new(l.clone(), vec![s1.clone()], 1).unwrap();
        let w2 = SphereSeq::new(l.clone(), vec![s2.clone()], 1).unwrap();
        let cat = SphereSeq::new(l, vec![s1, s2], 1).unwrap();
        assert_eq!(compose(&cat), compose(&w2).compose_with(&compose(&w1)));
    }

    #[test]
    fn a2_coxeter_element_has_order_three() {
        let l = a2();
        let seq = SphereSeq::basis_config(l, 1).unwrap();
        let m = compose(&seq);
        assert_eq!(monodromy_order(&m, 100), Some(3));
    }

    #[test]
    fn single_sphere_twice_is_trivial() {
        let l = a2();
        let s = SphereClass::basis(&l, 0).unwrap();
        let seq = SphereSeq::new(l, vec![s], 2).unwrap();
        assert!(is_homologically_trivial(&seq));
    }

    #[test]
    fn identity_map_has_order_one() {
        assert_eq!(monodromy_order(&LatticeMap::identity(3), 10), Some(1));
    }

    #[test]
    fn infinite_order_detected_early() {
        // gram [[-2,3],[3,-2]] gives a hyperbolic pair whose composite
        // reflection has unbounded powers
        let l = Lattice::new(vec![vec![-2, 3], vec![3, -2]]).unwrap();
        let seq = SphereSeq::basis_config(l, 1).unwrap();
        let m = compose(&seq);
        assert_eq!(monodromy_order(&m, 10_000), None);
    }

    #[test]
    fn expand_folds_repeat() {
        let l = a2();
        let s = SphereClass::basis(&l, 0).unwrap();
        let seq = SphereSeq::new(l, vec![s], 3).unwrap();
        let ex = seq.expand();
        assert_eq!(ex.repeat(), 1);
        assert_eq!(ex.classes().len(), 3);
        assert_eq!(compose(&ex), compose(&seq));
    }
}

//! Gabrielov lattices of the exceptional unimodal singularities.
//!
//! For a triple (p,q,r) the intersection matrix has three chains of
//! (-2)-vertices of lengths p-1, q-1, r-1 (vertices 1..p-1, p..p+q-2,
//! p+q-1..n-3 in 1-based labels), two hub vertices n-2 and n-1 joined to
//! the end of every chain and to each other with weight -2, and a tail
//! vertex n joined to n-1. The positive frame (a, b) spans the b+ = 2
//! part of the form:
//!
//! ```text
//! a = 2 e_{n-2} - 2 e_{n-1} - e_n
//! b = sum_i (i/p) e_i + sum_i (i/q) e_{p-1+i} + sum_i (i/r) e_{p+q-2+i} + e_{n-2}
//! ```
//!
//! Indices are 1-based in documentation and 0-based in code; the I/O layer
//! always prints 1-based.

use num_traits::Signed;

use crate::error::Error;
use crate::lattice::{ratio, Lattice, RatVector, Rational};
use crate::reflection::SphereSeq;
use crate::Result;

/// Gabrielov numbers (p,q,r), each at least 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GabrielovDiagram {
    p: u32,
    q: u32,
    r: u32,
}

impl GabrielovDiagram {
    pub fn new(p: u32, q: u32, r: u32) -> Result<Self> {
        if p < 2 || q < 2 || r < 2 {
            return Err(Error::InvalidGabrielovTriple {
                p: p as i64,
                q: q as i64,
                r: r as i64,
            });
        }
        Ok(GabrielovDiagram { p, q, r })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Milnor number: the lattice rank `p + q + r`.
    pub fn rank(&self) -> u32 {
        self.p + self.q + self.r
    }
}

/// One row of the singularity table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub diagram: GabrielovDiagram,
    /// Milnor number, equal to p + q + r.
    pub milnor_number: u32,
    /// Order of the composite of the basis reflections on cohomology.
    pub monodromy_order: u32,
}

const CATALOG_ROWS: [(&str, u32, u32, u32, u32); 14] = [
    ("E12", 2, 3, 7, 42),
    ("E13", 2, 3, 8, 30),
    ("E14", 2, 3, 9, 24),
    ("Z11", 2, 4, 5, 30),
    ("Z12", 2, 4, 6, 22),
    ("Z13", 2, 4, 7, 18),
    ("Q10", 3, 3, 4, 24),
    ("Q11", 3, 3, 5, 18),
    ("Q12", 3, 3, 6, 15),
    ("W12", 2, 5, 5, 20),
    ("W13", 2, 5, 6, 16),
    ("S11", 3, 4, 4, 16),
    ("S12", 3, 4, 5, 13),
    ("U12", 4, 4, 4, 12),
];

/// The 14 exceptional unimodal singularities in table order.
pub fn catalog() -> Vec<CatalogEntry> {
    CATALOG_ROWS
        .iter()
        .map(|&(name, p, q, r, h)| CatalogEntry {
            name,
            diagram: GabrielovDiagram { p, q, r },
            milnor_number: p + q + r,
            monodromy_order: h,
        })
        .collect()
}

/// Looks up a catalog entry by name, case-insensitively.
pub fn catalog_entry(name: &str) -> Option<CatalogEntry> {
    catalog()
        .into_iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
}

/// Looks up a catalog entry by its Gabrielov numbers.
pub fn catalog_entry_by_triple(p: u32, q: u32, r: u32) -> Option<CatalogEntry> {
    catalog()
        .into_iter()
        .find(|e| (e.diagram.p, e.diagram.q, e.diagram.r) == (p, q, r))
}

/// Builds the intersection matrix of the diagram.
pub fn build_gabrielov(d: &GabrielovDiagram) -> Lattice {
    let (p, q, r) = (d.p as usize, d.q as usize, d.r as usize);
    let n = p + q + r;
    let mut gram = vec![vec![0i64; n]; n];
    for (i, row) in gram.iter_mut().enumerate() {
        row[i] = -2;
    }
    // 1-based vertex labels throughout, converted on assignment
    let mut link = |i: usize, j: usize, w: i64| {
        gram[i - 1][j - 1] = w;
        gram[j - 1][i - 1] = w;
    };
    for i in 1..=(n - 3) {
        let in_arm = i < p - 1 || (i > p - 1 && i < p + q - 2) || (i > p + q - 2 && i < n - 3);
        if in_arm {
            link(i, i + 1, 1);
        }
    }
    link(n - 2, p - 1, 1);
    link(n - 2, p + q - 2, 1);
    link(n - 2, n - 3, 1);
    link(n - 1, p - 1, 1);
    link(n - 1, p + q - 2, 1);
    link(n - 1, n - 3, 1);
    link(n - 2, n - 1, -2);
    link(n, n - 1, 1);
    Lattice::new(gram).expect("construction is symmetric")
}

/// Oriented positive 2-plane spanned by orthogonal vectors `a`, `b` with
/// `a.a > 0`, `b.b > 0`, `a.b = 0`; all three are checked at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    a: RatVector,
    b: RatVector,
    lattice_rank: usize,
}

impl Frame {
    pub fn new(lattice: &Lattice, a: RatVector, b: RatVector) -> Result<Self> {
        let aa = lattice.inner_product(&a, &a)?;
        let bb = lattice.inner_product(&b, &b)?;
        let ab = lattice.inner_product(&a, &b)?;
        if !aa.is_positive() || !bb.is_positive() || !ab.is_zero() {
            return Err(Error::DegenerateFrame);
        }
        Ok(Frame {
            a,
            b,
            lattice_rank: lattice.rank(),
        })
    }

    pub fn a(&self) -> &RatVector {
        &self.a
    }

    pub fn b(&self) -> &RatVector {
        &self.b
    }

    pub fn lattice_rank(&self) -> usize {
        self.lattice_rank
    }

    /// Swapped frame (b, a); reverses the plane orientation.
    pub fn swapped(&self, lattice: &Lattice) -> Result<Frame> {
        Frame::new(lattice, self.b.clone(), self.a.clone())
    }

    /// Frame scaled by positive rationals.
    pub fn scaled(&self, lattice: &Lattice, la: &Rational, mu: &Rational) -> Result<Frame> {
        if !la.is_positive() || !mu.is_positive() {
            return Err(Error::NonPositiveFrameVector);
        }
        Frame::new(lattice, self.a.scale(la), self.b.scale(mu))
    }
}

/// The standard frame vectors of the diagram.
pub fn frame_vectors(d: &GabrielovDiagram) -> Result<Frame> {
    let lattice = build_gabrielov(d);
    let (p, q, r) = (d.p as i64, d.q as i64, d.r as i64);
    let n = lattice.rank();

    let mut a_entries: Vec<Rational> = RatVector::zero(n).entries().to_vec();
    a_entries[n - 3] = ratio(2, 1);
    a_entries[n - 2] = ratio(-2, 1);
    a_entries[n - 1] = ratio(-1, 1);
    let a = RatVector::new(a_entries);

    let mut b_entries: Vec<Rational> = RatVector::zero(n).entries().to_vec();
    for i in 1..p {
        b_entries[(i - 1) as usize] = ratio(i, p);
    }
    for i in 1..q {
        b_entries[(p - 1 + i - 1) as usize] = ratio(i, q);
    }
    for i in 1..r {
        b_entries[(p + q - 2 + i - 1) as usize] = ratio(i, r);
    }
    b_entries[n - 3] += ratio(1, 1);
    let b = RatVector::new(b_entries);

    Frame::new(&lattice, a, b)
}

/// Lattice, basis-sphere sequence, and frame for a diagram in one call.
pub fn standard_configuration(d: &GabrielovDiagram, repeat: u32) -> Result<(SphereSeq, Frame)> {
    let lattice = build_gabrielov(d);
    let frame = frame_vectors(d)?;
    let seq = SphereSeq::basis_config(lattice, repeat)?;
    Ok((seq, frame))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::rat;

    #[test]
    fn catalog_has_fourteen_rows() {
        let entries = catalog();
        assert_eq!(entries.len(), 14);
        for e in &entries {
            assert_eq!(e.milnor_number, e.diagram.rank());
        }
    }

    #[test]
    fn catalog_lookup_e12() {
        let e = catalog_entry("E12").unwrap();
        assert_eq!(
            (e.diagram.p(), e.diagram.q(), e.diagram.r()),
            (2, 3, 7)
        );
        assert_eq!(e.monodromy_order, 42);
        assert_eq!(e.milnor_number, 12);
    }

    #[test]
    fn catalog_lookup_s12() {
        let e = catalog_entry("s12").unwrap();
        assert_eq!(
            (e.diagram.p(), e.diagram.q(), e.diagram.r()),
            (3, 4, 5)
        );
        assert_eq!(e.monodromy_order, 13);
    }

    #[test]
    fn invalid_triple_rejected() {
        assert!(matches!(
            GabrielovDiagram::new(1, 3, 7),
            Err(Error::InvalidGabrielovTriple { .. })
        ));
    }

    #[test]
    fn gabrielov_237_selected_entries() {
        let d = GabrielovDiagram::new(2, 3, 7).unwrap();
        let l = build_gabrielov(&d);
        assert_eq!(l.rank(), 12);
        // 1-based entries (10,11) and (11,12) of the hub block
        assert_eq!(l.gram_entry(9, 10), -2);
        assert_eq!(l.gram_entry(10, 11), 1);
        // with p = 2 the first arm is the lone vertex 1, so 1 and 2 are
        // not adjacent; the first chain edge sits inside the second arm
        assert_eq!(l.gram_entry(0, 1), 0);
        assert_eq!(l.gram_entry(1, 2), 1);
        // hubs meet the ends of all three arms
        for hub in [9, 10] {
            for arm_end in [0, 2, 8] {
                assert_eq!(l.gram_entry(hub, arm_end), 1);
            }
        }
    }

    #[test]
    fn gabrielov_334_has_adjacent_first_pair() {
        let d = GabrielovDiagram::new(3, 3, 4).unwrap();
        let l = build_gabrielov(&d);
        assert_eq!(l.gram_entry(0, 1), 1);
    }

    #[test]
    fn gabrielov_diagonal_always_minus_two() {
        for (p, q, r) in [(2, 2, 2), (2, 3, 7), (4, 4, 4), (3, 5, 6)] {
            let d = GabrielovDiagram::new(p, q, r).unwrap();
            let l = build_gabrielov(&d);
            for i in 0..l.rank() {
                assert_eq!(l.gram_entry(i, i), -2);
            }
        }
    }

    #[test]
    fn u12_has_b_plus_two() {
        let d = GabrielovDiagram::new(4, 4, 4).unwrap();
        let l = build_gabrielov(&d);
        assert_eq!(l.rank(), 12);
        assert_eq!(l.b_plus(), 2);
    }

    #[test]
    fn frame_237_vectors() {
        let d = GabrielovDiagram::new(2, 3, 7).unwrap();
        let f = frame_vectors(&d).unwrap();
        let expect_a = RatVector::from_ints(&[0, 0, 0, 0, 0, 0, 0, 0, 0, 2, -2, -1]);
        assert_eq!(f.a(), &expect_a);
        assert_eq!(f.b().entry(0), &ratio(1, 2));
        assert_eq!(f.b().entry(1), &ratio(1, 3));
        assert_eq!(f.b().entry(9), &rat(1));
    }

    #[test]
    fn frames_valid_for_all_entries() {
        for e in catalog() {
            let l = build_gabrielov(&e.diagram);
            let f = frame_vectors(&e.diagram).unwrap();
            let aa = l.inner_product(f.a(), f.a()).unwrap();
            let bb = l.inner_product(f.b(), f.b()).unwrap();
            let ab = l.inner_product(f.a(), f.b()).unwrap();
            assert!(aa.is_positive(), "{}: a.a = {aa}", e.name);
            assert!(bb.is_positive(), "{}: b.b = {bb}", e.name);
            assert!(ab.is_zero(), "{}: a.b = {ab}", e.name);
        }
    }
}

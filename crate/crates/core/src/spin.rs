//! Loops of projected reflection orbits and their exact winding numbers.
//!
//! Given a homologically trivial sequence of (-2)-classes and an oriented
//! positive 2-plane spanned by an orthogonal frame (a, b), the orbit of `a`
//! under the successive reflections projects to a closed piecewise-linear
//! loop in the plane based at (1,0). Its winding number about the origin
//! is the spin invariant of the sequence: the full integer when b+ = 2,
//! and only its parity when b+ > 2 (stabilizing to higher positive rank
//! retains exactly the parity of the loop class).

use num_traits::{Signed, Zero};

use crate::dynkin::Frame;
use crate::error::Error;
use crate::lattice::{rat, Lattice, RatVector, Rational};
use crate::reflection::{is_homologically_trivial, SphereSeq};
use crate::Result;

/// Point of the frame plane with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanePoint {
    pub x: Rational,
    pub y: Rational,
}

impl PlanePoint {
    pub fn new(x: Rational, y: Rational) -> Self {
        PlanePoint { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        PlanePoint::new(rat(x), rat(y))
    }

    pub fn is_origin(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Basepoint (1,0) of every projected loop.
    pub fn basepoint() -> Self {
        PlanePoint::from_ints(1, 0)
    }
}

/// Closed piecewise-linear loop based at (1,0), with no vertex at the
/// origin and no segment through the origin. Consecutive duplicate
/// vertices are collapsed at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoopPolyline {
    vertices: Vec<PlanePoint>,
}

impl LoopPolyline {
    pub fn new(raw: Vec<PlanePoint>) -> Result<Self> {
        let mut vertices: Vec<PlanePoint> = Vec::with_capacity(raw.len());
        for p in raw {
            if vertices.last() != Some(&p) {
                vertices.push(p);
            }
        }
        if vertices.is_empty() || vertices[0] != PlanePoint::basepoint() {
            return Err(Error::LoopNotBased);
        }
        if vertices.len() > 1 && vertices.first() != vertices.last() {
            return Err(Error::LoopNotClosed);
        }
        for v in &vertices {
            if v.is_origin() {
                return Err(Error::VertexAtOrigin);
            }
        }
        for (p, q) in vertices.iter().zip(vertices.iter().skip(1)) {
            let cross = &p.x * &q.y - &p.y * &q.x;
            let dot = &p.x * &q.x + &p.y * &q.y;
            if cross.is_zero() && dot.is_negative() {
                return Err(Error::SegmentThroughOrigin);
            }
        }
        Ok(LoopPolyline { vertices })
    }

    pub fn vertices(&self) -> &[PlanePoint] {
        &self.vertices
    }

    pub fn segment_count(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    /// Constant loop at the basepoint.
    pub fn constant() -> Self {
        LoopPolyline {
            vertices: vec![PlanePoint::basepoint()],
        }
    }
}

/// Winding number together with its parity and the ambient b+.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpinResult {
    /// Winding of the projected loop; equals the full invariant when
    /// `b_plus == 2`.
    pub winding: i64,
    /// `winding mod 2`; the only part that survives when `b_plus > 2`.
    pub delta_mod2: u8,
    pub b_plus: usize,
}

impl SpinResult {
    /// Whether the invariant generates its ambient group: winding +-1 for
    /// b+ = 2, odd parity for b+ > 2.
    pub fn is_generator(&self) -> bool {
        if self.b_plus == 2 {
            self.winding == 1 || self.winding == -1
        } else {
            self.delta_mod2 == 1
        }
    }

    pub fn is_trivial(&self) -> bool {
        if self.b_plus == 2 {
            self.winding == 0
        } else {
            self.delta_mod2 == 0
        }
    }
}

/// Gram-Schmidt step: returns `(a, b - (a.b / a.a) a)` as a valid frame.
///
/// Catalog frames are already orthogonal and pass through unchanged.
pub fn orthogonalize_frame(lattice: &Lattice, a: RatVector, b: RatVector) -> Result<Frame> {
    let aa = lattice.inner_product(&a, &a)?;
    if !aa.is_positive() {
        return Err(Error::NonPositiveFrameVector);
    }
    let ab = lattice.inner_product(&a, &b)?;
    let b_prime = b.sub(&a.scale(&(ab / &aa)));
    let bb = lattice.inner_product(&b_prime, &b_prime)?;
    if !bb.is_positive() {
        return Err(Error::FrameNotPositivePlane);
    }
    Frame::new(lattice, a, b_prime)
}

/// Projection of `v` onto frame coordinates:
/// `(<v,a>/<a,a>, <v,b>/<b,b>)`.
pub fn project(lattice: &Lattice, frame: &Frame, v: &RatVector) -> Result<PlanePoint> {
    let aa = lattice.inner_product(frame.a(), frame.a())?;
    let bb = lattice.inner_product(frame.b(), frame.b())?;
    let va = lattice.inner_product(v, frame.a())?;
    let vb = lattice.inner_product(v, frame.b())?;
    Ok(PlanePoint::new(va / aa, vb / bb))
}

/// Orbit loop of the frame vector `a`: the vertex after `k` reflections is
/// the projection of `R_{s_k} ... R_{s_1} a`, traversing the sequence
/// `repeat` times from the basepoint (1,0).
pub fn loop_vertices(seq: &SphereSeq, frame: &Frame) -> Result<LoopPolyline> {
    let lattice = seq.lattice();
    if frame.lattice_rank() != lattice.rank() {
        return Err(Error::RankMismatch {
            expected: lattice.rank(),
            got: frame.lattice_rank(),
        });
    }
    if !is_homologically_trivial(seq) {
        return Err(Error::NotHomologicallyTrivial);
    }

    let aa = lattice.inner_product(frame.a(), frame.a())?;
    let bb = lattice.inner_product(frame.b(), frame.b())?;
    // gram-transformed frame vectors turn each projection into a plain
    // dot product
    let ga = gram_apply_rat(lattice, frame.a());
    let gb = gram_apply_rat(lattice, frame.b());
    // likewise for the pairing against each reflection class
    let gs: Vec<Vec<Rational>> = seq
        .classes()
        .iter()
        .map(|s| {
            lattice
                .gram_apply_int(s.entries())
                .into_iter()
                .map(Rational::from_integer)
                .collect()
        })
        .collect();

    let mut raw = Vec::with_capacity(seq.expanded_len() + 1);
    raw.push(PlanePoint::basepoint());
    let mut v: Vec<Rational> = frame.a().entries().to_vec();
    for _ in 0..seq.repeat() {
        for (s, gsv) in seq.classes().iter().zip(&gs) {
            let c: Rational = dot(&v, gsv);
            if !c.is_zero() {
                for (vi, si) in v.iter_mut().zip(s.entries()) {
                    *vi += &c * &Rational::from_integer(si.clone());
                }
            }
            raw.push(PlanePoint::new(dot(&v, &ga) / &aa, dot(&v, &gb) / &bb));
        }
    }

    if raw.last() != Some(&PlanePoint::basepoint()) {
        // unreachable once the triviality gate has passed
        return Err(Error::LoopNotClosed);
    }
    LoopPolyline::new(raw)
}

fn gram_apply_rat(lattice: &Lattice, v: &RatVector) -> Vec<Rational> {
    let n = lattice.rank();
    (0..n)
        .map(|i| {
            let mut acc = Rational::zero();
            for (j, vj) in v.entries().iter().enumerate() {
                let g = lattice.gram_entry(i, j);
                if g != 0 && !vj.is_zero() {
                    acc += vj * rat(g);
                }
            }
            acc
        })
        .collect()
}

fn dot(u: &[Rational], w: &[Rational]) -> Rational {
    u.iter()
        .zip(w)
        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
        .map(|(a, b)| a * b)
        .sum()
}

/// Exact winding number about the origin, by signed crossings of the
/// positive x-axis.
///
/// Vertices on the axis count as upper half-plane (`sign(0) = +1`), which
/// makes the crossing count total; a crossing exactly at the origin is the
/// loop invariant violation [`Error::SegmentThroughOrigin`].
pub fn winding_number(polyline: &LoopPolyline) -> Result<i64> {
    let mut winding = 0i64;
    for (p, q) in polyline
        .vertices()
        .iter()
        .zip(polyline.vertices().iter().skip(1))
    {
        let sp = !p.y.is_negative();
        let sq = !q.y.is_negative();
        if sp == sq {
            continue;
        }
        let x_star = (&p.x * &q.y - &q.x * &p.y) / (&q.y - &p.y);
        if x_star.is_zero() {
            return Err(Error::SegmentThroughOrigin);
        }
        if x_star.is_positive() {
            winding += if sp { -1 } else { 1 };
        }
    }
    Ok(winding)
}

/// Winding, parity, and ambient b+ of the projected orbit loop.
pub fn spin_number(seq: &SphereSeq, frame: &Frame) -> Result<SpinResult> {
    let polyline = loop_vertices(seq, frame)?;
    let winding = winding_number(&polyline)?;
    Ok(SpinResult {
        winding,
        delta_mod2: winding.rem_euclid(2) as u8,
        b_plus: seq.lattice().signature().b_plus,
    })
}

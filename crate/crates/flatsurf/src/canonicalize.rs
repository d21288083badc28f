//! Reduction of arbitrary presentations to the canonical forms.
//!
//! For tori: Lagrange-Gauss lattice reduction takes any plane basis to a
//! shortest / second-shortest pair, which always satisfies the canonical
//! range `2 b cos(alpha) <= a <= b`. For Klein bottles: any point is moved
//! by surface isometries to the canonical representative `(0, -xi)` with
//! `xi` in `[0, b/4]` its distance to the nearest main geodesic.

use crate::geom::PlanePoint;
use crate::surface::{KleinSpec, SurfacePoint, TorusSpec};
use crate::Error;

/// Outcome of a basis reduction: the canonical spec, the unimodular
/// change-of-basis matrix, and the sign flips applied after reduction.
///
/// With `M = change_of_basis` and `(f0, f1) = sign_flips`, the reduced basis
/// vectors are `u' = s0 (M[0][0] u + M[0][1] v)` and
/// `v' = s1 (M[1][0] u + M[1][1] v)` where `si = -1` when `fi` is set; then
/// `|u'| = a`, `|v'| = b` and the angle between them is `alpha`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReductionResult {
    pub spec: TorusSpec,
    pub change_of_basis: [[i64; 2]; 2],
    pub sign_flips: (bool, bool),
}

impl ReductionResult {
    /// Applies the recorded matrix and sign flips to the original basis.
    pub fn apply(&self, u: PlanePoint, v: PlanePoint) -> (PlanePoint, PlanePoint) {
        let m = self.change_of_basis;
        let mut w0 = u * m[0][0] as f64 + v * m[0][1] as f64;
        let mut w1 = u * m[1][0] as f64 + v * m[1][1] as f64;
        if self.sign_flips.0 {
            w0 = -w0;
        }
        if self.sign_flips.1 {
            w1 = -w1;
        }
        (w0, w1)
    }

    pub fn det(&self) -> i64 {
        let m = self.change_of_basis;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }
}

/// Lagrange-Gauss reduction of the lattice basis `(u, v)`.
///
/// Repeatedly orders the pair by length and subtracts the rounded projection
/// until stable; the result is a shortest vector and a second successive
/// minimum, which yields canonical torus parameters spanning the same
/// lattice.
pub fn reduce_basis(u: PlanePoint, v: PlanePoint) -> Result<ReductionResult, Error> {
    let scale = u.norm() * v.norm();
    if !(u.cross(v).abs() > 1e-12 * scale) {
        return Err(Error::DegenerateBasis);
    }

    let mut w = [u, v];
    let mut m = [[1i64, 0], [0, 1]];
    for _ in 0..64 {
        // Order by length, with slack so that equal-length pairs (ties are
        // common: square and hexagonal lattices) keep the input order.
        if w[0].norm_sq() > w[1].norm_sq() * (1.0 + 1e-12) {
            w.swap(0, 1);
            m.swap(0, 1);
        }
        let r = (w[0].dot(w[1]) / w[0].norm_sq()).round();
        if r == 0.0 {
            break;
        }
        // Accept only strictly shortening steps; at the tie |dot| = |w0|^2/2
        // the rounded step keeps the norm and would oscillate forever.
        let cand = w[1] - w[0] * r;
        if cand.norm_sq() >= w[1].norm_sq() {
            break;
        }
        w[1] = cand;
        let ri = r as i64;
        m[1][0] -= ri * m[0][0];
        m[1][1] -= ri * m[0][1];
    }

    let mut sign_flips = (false, false);
    if w[0].dot(w[1]) < 0.0 {
        w[1] = -w[1];
        sign_flips.1 = true;
    }

    let a = w[0].norm();
    let b = w[1].norm();
    let cos = (w[0].dot(w[1]) / (a * b)).clamp(0.0, 1.0);
    let spec = TorusSpec::new(a, b, cos.acos())?;
    let result = ReductionResult {
        spec,
        change_of_basis: m,
        sign_flips,
    };
    debug_assert_eq!(result.det().abs(), 1);
    Ok(result)
}

/// A point of a Klein bottle moved to the canonical frame.
///
/// The recorded isometry maps canonical-frame coordinates back to the user
/// frame: `(x, y) -> (x + x_offset, s y + level * b / 2)` with `s = -1` when
/// `flip` is set. It sends the canonical representative `(0, -xi)` exactly
/// to the stored representative of the input point, and is a composition of
/// a horizontal translation, main-geodesic reflections, and deck elements.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KleinCanonicalPoint {
    /// Distance to the nearest main geodesic, in `[0, b/4]`.
    pub xi: f64,
    /// Normalized offset `2 xi / b`, in `[0, 1/2]`.
    pub lambda: f64,
    /// Index of the nearest main-geodesic level `y = level * b / 2`.
    pub level: i64,
    /// Whether the frame map negates the y coordinate.
    pub flip: bool,
    /// Horizontal translation component of the frame map.
    pub x_offset: f64,
}

impl KleinCanonicalPoint {
    /// Maps canonical-frame coordinates to the user frame.
    pub fn to_user(&self, spec: KleinSpec, q: PlanePoint) -> PlanePoint {
        let y = if self.flip { -q.y } else { q.y };
        PlanePoint::new(q.x + self.x_offset, y + self.level as f64 * spec.b() / 2.0)
    }

    /// Maps user-frame coordinates to the canonical frame.
    pub fn to_canonical(&self, spec: KleinSpec, r: PlanePoint) -> PlanePoint {
        let y = r.y - self.level as f64 * spec.b() / 2.0;
        PlanePoint::new(r.x - self.x_offset, if self.flip { -y } else { y })
    }
}

/// Normalizes a Klein-bottle point to its offset `xi` from the nearest main
/// geodesic, recording the isometry used.
///
/// Ties at `xi = b/4` pick the geodesic below; `lambda = 1/2` either way.
pub fn klein_canonicalize(spec: KleinSpec, p: &SurfacePoint) -> KleinCanonicalPoint {
    let b = spec.b();
    let half = b / 2.0;
    let y = p.rep.y;
    let q = (y / half).floor();
    let d0 = y - q * half;
    let (level, sigma, xi) = if d0 <= half - d0 {
        (q as i64, 1.0, d0)
    } else {
        (q as i64 + 1, -1.0, half - d0)
    };
    let xi = xi.clamp(0.0, b / 4.0);
    KleinCanonicalPoint {
        xi,
        lambda: (2.0 * xi / b).clamp(0.0, 0.5),
        level,
        flip: sigma > 0.0,
        x_offset: p.rep.x,
    }
}

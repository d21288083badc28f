//! Surface presentations, deck transformations, and canonical representatives.
//!
//! A flat torus is the plane modulo the translation lattice spanned by
//! `u = (a, 0)` and `v = (b cos alpha, b sin alpha)`, with the parameters in
//! the canonical range `2 b cos(alpha) <= a <= b`, `alpha` in `(0, pi/2]`.
//!
//! A flat Klein bottle `K_{a,b}` is the plane modulo the group generated by
//! the vertical translation `t: (x, y) -> (x, y + b)` and the glide
//! reflection `g: (x, y) -> (x + a, -y)` whose axis is the x-axis. The
//! images of the lines `y = n b / 2` are its two main geodesics, the only
//! horizontal geodesics of length `a` rather than `2a`.

use crate::geom::PlanePoint;
use crate::Error;
use std::f64::consts::FRAC_PI_2;

/// Relative tolerance used when validating surface parameters.
pub const PARAM_REL_TOL: f64 = 1e-9;

/// Canonical flat-torus parameters: side lengths `a`, `b` and angle `alpha`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TorusSpec {
    a: f64,
    b: f64,
    alpha: f64,
}

impl TorusSpec {
    /// Validates `a, b > 0`, `alpha` in `(0, pi/2]`, and
    /// `2 b cos(alpha) <= a <= b` within a scale-aware tolerance.
    pub fn new(a: f64, b: f64, alpha: f64) -> Result<Self, Error> {
        Self::with_tolerance(a, b, alpha, PARAM_REL_TOL)
    }

    /// Same as [`TorusSpec::new`] with an explicit relative tolerance.
    pub fn with_tolerance(a: f64, b: f64, alpha: f64, rel_tol: f64) -> Result<Self, Error> {
        if !(a > 0.0) || !(b > 0.0) {
            return Err(Error::NonPositiveSide { a, b });
        }
        if !(alpha > 0.0) || alpha > FRAC_PI_2 {
            return Err(Error::AngleOutOfRange { alpha });
        }
        let tau = rel_tol * a.max(b);
        if a > b + tau || 2.0 * b * alpha.cos() > a + tau {
            return Err(Error::NotCanonical { a, b, alpha });
        }
        Ok(Self { a, b, alpha })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// First lattice basis vector `(a, 0)`.
    pub fn u(&self) -> PlanePoint {
        PlanePoint::new(self.a, 0.0)
    }

    /// Second lattice basis vector `(b cos alpha, b sin alpha)`.
    pub fn v(&self) -> PlanePoint {
        PlanePoint::new(self.b * self.alpha.cos(), self.b * self.alpha.sin())
    }

    /// Far corner of the fundamental parallelogram, `u + v`.
    pub fn h(&self) -> PlanePoint {
        self.u() + self.v()
    }

    /// Area of the fundamental parallelogram.
    pub fn det(&self) -> f64 {
        self.a * self.b * self.alpha.sin()
    }

    /// Coordinates of `w` in the `(u, v)` basis.
    pub fn basis_coords(&self, w: PlanePoint) -> (f64, f64) {
        let u = self.u();
        let v = self.v();
        let det = u.cross(v);
        ((w.cross(v)) / det, (u.cross(w)) / det)
    }
}

/// Canonical flat-Klein-bottle parameters: horizontal period `a` of the main
/// geodesics and vertical period `b`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KleinSpec {
    a: f64,
    b: f64,
}

impl KleinSpec {
    pub fn new(a: f64, b: f64) -> Result<Self, Error> {
        if !(a > 0.0) || !(b > 0.0) {
            return Err(Error::NonPositiveSide { a, b });
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }
}

/// One of the two kinds of closed flat surface.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Surface {
    Torus(TorusSpec),
    Klein(KleinSpec),
}

/// An element of the deck group, as an integer pair.
///
/// Torus: `(k, n)` is the translation by `k u + n v`.
/// Klein bottle: `(k, n)` is `k` applications of the glide reflection
/// followed by the translation `(0, n b)`, i.e.
/// `(x, y) -> (x + k a, (-1)^k y + n b)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct DeckElement {
    pub k: i64,
    pub n: i64,
}

impl DeckElement {
    pub const IDENTITY: DeckElement = DeckElement { k: 0, n: 0 };

    pub fn new(k: i64, n: i64) -> Self {
        Self { k, n }
    }
}

/// A point of a surface, stored through its canonical plane representative.
///
/// Torus: `rep = s u + t v` with `s, t` in `[0, 1)`. Klein bottle:
/// `rep` in `[0, a) x [0, b)`. Construct via [`Surface::wrap`]; building the
/// struct directly is allowed when the representative is already canonical.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SurfacePoint {
    pub surface: Surface,
    pub rep: PlanePoint,
}

impl Surface {
    /// The `(a, b)` parameters of either variant.
    pub fn dims(&self) -> (f64, f64) {
        match self {
            Surface::Torus(t) => (t.a(), t.b()),
            Surface::Klein(k) => (k.a(), k.b()),
        }
    }

    /// Scale-aware tolerance for metric comparisons.
    pub fn dist_tol(&self) -> f64 {
        let (a, b) = self.dims();
        1e-9 * (a + b)
    }

    /// Upper bound on the intrinsic diameter: every point lies within the
    /// circumradius of one tile, which is below `a + b` for both kinds.
    pub fn diameter_bound(&self) -> f64 {
        let (a, b) = self.dims();
        a + b
    }

    /// Applies a deck transformation to a plane point.
    pub fn deck_apply(&self, g: DeckElement, p: PlanePoint) -> PlanePoint {
        match self {
            Surface::Torus(t) => p + t.u() * (g.k as f64) + t.v() * (g.n as f64),
            Surface::Klein(kl) => {
                let y = if g.k.rem_euclid(2) == 0 { p.y } else { -p.y };
                PlanePoint::new(p.x + g.k as f64 * kl.a(), y + g.n as f64 * kl.b())
            }
        }
    }

    /// Group law: `compose(g, h)` acts as `g` after `h`.
    pub fn deck_compose(&self, g: DeckElement, h: DeckElement) -> DeckElement {
        match self {
            Surface::Torus(_) => DeckElement::new(g.k + h.k, g.n + h.n),
            Surface::Klein(_) => {
                let sign = if g.k.rem_euclid(2) == 0 { 1 } else { -1 };
                DeckElement::new(g.k + h.k, g.n + sign * h.n)
            }
        }
    }

    pub fn deck_inverse(&self, g: DeckElement) -> DeckElement {
        match self {
            Surface::Torus(_) => DeckElement::new(-g.k, -g.n),
            Surface::Klein(_) => {
                let sign = if g.k.rem_euclid(2) == 0 { 1 } else { -1 };
                DeckElement::new(-g.k, -sign * g.n)
            }
        }
    }

    /// Canonical representative of the orbit of `p`; idempotent.
    pub fn wrap(&self, p: PlanePoint) -> SurfacePoint {
        let rep = match self {
            Surface::Torus(t) => {
                let (s, t_coord) = t.basis_coords(p);
                let s = fract_unit(s);
                let tc = fract_unit(t_coord);
                t.u() * s + t.v() * tc
            }
            Surface::Klein(kl) => {
                let a = kl.a();
                let b = kl.b();
                let mut k = (p.x / a).floor() as i64;
                let mut x = p.x - k as f64 * a;
                if x < 0.0 {
                    x += a;
                    k -= 1;
                }
                if x >= a {
                    x -= a;
                    k += 1;
                }
                let x = x.max(0.0);
                let y0 = if k.rem_euclid(2) == 0 { p.y } else { -p.y };
                let mut y = y0.rem_euclid(b);
                if y >= b {
                    y = 0.0;
                }
                PlanePoint::new(x, y)
            }
        };
        SurfacePoint {
            surface: *self,
            rep,
        }
    }

    /// Convenience: wraps raw coordinates.
    pub fn point(&self, x: f64, y: f64) -> SurfacePoint {
        self.wrap(PlanePoint::new(x, y))
    }
}

/// Fractional part in `[0, 1)`, robust against the `rem_euclid` edge where
/// rounding returns exactly `1.0`.
fn fract_unit(x: f64) -> f64 {
    let f = x.rem_euclid(1.0);
    if f >= 1.0 {
        0.0
    } else {
        f
    }
}

//! Plane points and the circumcenter primitive.

use std::ops::{Add, Mul, Neg, Sub};

/// A point (or vector) of the Euclidean plane.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct PlanePoint {
    pub x: f64,
    pub y: f64,
}

impl PlanePoint {
    pub fn new(x: f64, y: f64) -> Self {
        debug_assert!(x.is_finite() && y.is_finite(), "non-finite coordinate");
        Self { x, y }
    }

    pub fn dot(self, other: Self) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// 2x2 determinant of the pair seen as column vectors.
    pub fn cross(self, other: Self) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm_sq(self) -> f64 {
        self.dot(self)
    }

    pub fn norm(self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn dist_sq(self, other: Self) -> f64 {
        (self - other).norm_sq()
    }

    pub fn dist(self, other: Self) -> f64 {
        self.dist_sq(other).sqrt()
    }

    pub fn normalized(self) -> Self {
        let n = self.norm();
        debug_assert!(n > 0.0, "normalizing the zero vector");
        Self::new(self.x / n, self.y / n)
    }
}

impl Add for PlanePoint {
    type Output = PlanePoint;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for PlanePoint {
    type Output = PlanePoint;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Neg for PlanePoint {
    type Output = PlanePoint;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

impl Mul<f64> for PlanePoint {
    type Output = PlanePoint;
    fn mul(self, rhs: f64) -> Self {
        Self::new(self.x * rhs, self.y * rhs)
    }
}

/// Circumcenter of three points: the point equidistant from all three.
///
/// Returns `None` when the points are collinear within floating tolerance.
pub fn circumcenter(a: PlanePoint, b: PlanePoint, c: PlanePoint) -> Option<PlanePoint> {
    let p = b - a;
    let q = c - a;
    let d = 2.0 * p.cross(q);
    let scale = p.norm_sq().max(q.norm_sq());
    if d.abs() <= 1e-14 * scale {
        return None;
    }
    let pn = p.norm_sq();
    let qn = q.norm_sq();
    let ux = (q.y * pn - p.y * qn) / d;
    let uy = (p.x * qn - q.x * pn) / d;
    Some(a + PlanePoint::new(ux, uy))
}

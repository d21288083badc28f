//! Orbit enumeration and the intrinsic metric.
//!
//! The distance between two surface points is the Euclidean distance from a
//! lift of the source to the nearest lift of the target; the number of lifts
//! achieving the minimum is the number of segments joining the points.

use crate::geom::PlanePoint;
use crate::surface::{DeckElement, Surface, SurfacePoint};
use crate::Error;

/// Default cap on the number of enumerated orbit points.
pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;

/// The lifts of one surface point inside a disk, with the deck elements that
/// produce them. Sorted by (distance to the center, angle).
#[derive(Clone, Debug)]
pub struct OrbitSet {
    pub center: PlanePoint,
    pub radius: f64,
    pub points: Vec<(PlanePoint, DeckElement)>,
}

/// Enumerates every lift of `p` within `radius` of `center`.
pub fn orbit(
    surface: &Surface,
    p: &SurfacePoint,
    center: PlanePoint,
    radius: f64,
) -> Result<OrbitSet, Error> {
    orbit_with_cap(surface, p, center, radius, DEFAULT_ORBIT_CAP)
}

/// Same as [`orbit`] with an explicit cap on the enumeration size.
pub fn orbit_with_cap(
    surface: &Surface,
    p: &SurfacePoint,
    center: PlanePoint,
    radius: f64,
    cap: usize,
) -> Result<OrbitSet, Error> {
    assert!(radius > 0.0, "orbit radius must be positive");
    let tol = surface.dist_tol();
    let r = radius + tol;
    let r_sq = r * r;
    let mut points = Vec::new();

    match surface {
        Surface::Torus(spec) => {
            let u = spec.u();
            let v = spec.v();
            let det = spec.det();
            //

            // |s u + t v| >= |s| det/|v| and >= |t| det/|u|, so index ranges
            // around the basis coordinates of (center - rep) are complete.
            let (s0, t0) = spec.basis_coords(center - p.rep);
            let m_span = r * v.norm() / det;
            let n_span = r * u.norm() / det;
            let m_lo = (s0 - m_span).floor() as i64 - 2;
            let m_hi = (s0 + m_span).ceil() as i64 + 2;
            let n_lo = (t0 - n_span).floor() as i64 - 2;
            let n_hi = (t0 + n_span).ceil() as i64 + 2;
            check_cap(m_hi - m_lo + 1, n_hi - n_lo + 1, cap)?;
            for m in m_lo..=m_hi {
                for n in n_lo..=n_hi {
                    let g = DeckElement::new(m, n);
                    let pt = p.rep + u * m as f64 + v * n as f64;
                    if pt.dist_sq(center) <= r_sq {
                        points.push((pt, g));
                    }
                }
            }
        }
        Surface::Klein(spec) => {
            let a = spec.a();
            let b = spec.b();
            let k_lo = ((center.x - p.rep.x - r) / a).floor() as i64 - 2;
            let k_hi = ((center.x - p.rep.x + r) / a).ceil() as i64 + 2;
            let n_width = (2.0 * r / b).ceil() as i64 + 5;
            check_cap(k_hi - k_lo + 1, n_width, cap)?;
            for k in k_lo..=k_hi {
                let base_y = if k.rem_euclid(2) == 0 {
                    p.rep.y
                } else {
                    -p.rep.y
                };
                let n_lo = ((center.y - base_y - r) / b).floor() as i64 - 2;
                let n_hi = ((center.y - base_y + r) / b).ceil() as i64 + 2;
                for n in n_lo..=n_hi {
                    let pt = PlanePoint::new(p.rep.x + k as f64 * a, base_y + n as f64 * b);
                    if pt.dist_sq(center) <= r_sq {
                        points.push((pt, DeckElement::new(k, n)));
                    }
                }
            }
        }
    }

    points.sort_by(|(x, _), (y, _)| {
        let dx = x.dist_sq(center);
        let dy = y.dist_sq(center);
        dx.total_cmp(&dy).then_with(|| {
            let ax = (x.y - center.y).atan2(x.x - center.x);
            let ay = (y.y - center.y).atan2(y.x - center.x);
            ax.total_cmp(&ay)
        })
    });

    Ok(OrbitSet {
        center,
        radius,
        points,
    })
}

fn check_cap(range_a: i64, range_b: i64, cap: usize) -> Result<(), Error> {
    let estimate = (range_a.max(0) as u128) * (range_b.max(0) as u128);
    if estimate > cap as u128 {
        return Err(Error::RadiusTooLarge { cap });
    }
    Ok(())
}

/// Intrinsic distance between two points, with the number of minimizing
/// segments and their initial unit directions at the source lift.
#[derive(Clone, Debug)]
pub struct DistanceResult {
    pub distance: f64,
    pub n_segments: usize,
    /// One unit vector per segment, sorted by angle; empty when the points
    /// coincide. Pairwise distinct.
    pub directions: Vec<PlanePoint>,
    /// Set when a further lift falls just outside the tie window, so the
    /// reported multiplicity is sensitive to the tolerance.
    pub near_tie: bool,
}

/// Computes the intrinsic distance from `p` to `q`.
///
/// Lifts of the target within the tie window of the minimum are counted as
/// segments; the window is the scale-aware metric tolerance of the surface.
pub fn distance(p: &SurfacePoint, q: &SurfacePoint) -> DistanceResult {
    debug_assert!(p.surface == q.surface, "points on different surfaces");
    let surface = &p.surface;
    let tol = surface.dist_tol();
    let src = p.rep;

    // Cheap upper bound from nearest-image rounding, then a provably
    // complete enumeration within that bound.
    let upper = nearest_lift_upper_bound(surface, src, q.rep);
    let r = upper + 10.0 * tol;
    let r_sq = r * r;

    let mut lifts: Vec<PlanePoint> = Vec::with_capacity(8);
    match surface {
        Surface::Torus(spec) => {
            let u = spec.u();
            let v = spec.v();
            let det = spec.det();
            let (s0, t0) = spec.basis_coords(src - q.rep);
            let m_span = r * v.norm() / det;
            let n_span = r * u.norm() / det;
            let m_lo = (s0 - m_span).floor() as i64 - 1;
            let m_hi = (s0 + m_span).ceil() as i64 + 1;
            let n_lo = (t0 - n_span).floor() as i64 - 1;
            let n_hi = (t0 + n_span).ceil() as i64 + 1;
            for m in m_lo..=m_hi {
                for n in n_lo..=n_hi {
                    let pt = q.rep + u * m as f64 + v * n as f64;
                    if pt.dist_sq(src) <= r_sq {
                        lifts.push(pt);
                    }
                }
            }
        }
        Surface::Klein(spec) => {
            let a = spec.a();
            let b = spec.b();
            let k_lo = ((src.x - q.rep.x - r) / a).floor() as i64 - 1;
            let k_hi = ((src.x - q.rep.x + r) / a).ceil() as i64 + 1;
            for k in k_lo..=k_hi {
                let base_y = if k.rem_euclid(2) == 0 {
                    q.rep.y
                } else {
                    -q.rep.y
                };
                let n_lo = ((src.y - base_y - r) / b).floor() as i64 - 1;
                let n_hi = ((src.y - base_y + r) / b).ceil() as i64 + 1;
                for n in n_lo..=n_hi {
                    let pt = PlanePoint::new(q.rep.x + k as f64 * a, base_y + n as f64 * b);
                    if pt.dist_sq(src) <= r_sq {
                        lifts.push(pt);
                    }
                }
            }
        }
    }

    let dmin = lifts
        .iter()
        .map(|l| l.dist(src))
        .fold(f64::INFINITY, f64::min);
    debug_assert!(dmin.is_finite());

    let mut directions: Vec<PlanePoint> = Vec::new();
    let mut n_segments = 0usize;
    let mut near_tie = false;
    for l in &lifts {
        let d = l.dist(src);
        if d <= dmin + tol {
            n_segments += 1;
            if dmin > tol {
                directions.push((*l - src).normalized());
            }
        } else if d <= dmin + 10.0 * tol {
            near_tie = true;
        }
    }
    directions.sort_by(|a, b| a.y.atan2(a.x).total_cmp(&b.y.atan2(b.x)));

    DistanceResult {
        distance: dmin,
        n_segments,
        directions,
        near_tie,
    }
}

/// Distance to some lift of `target` from `src`; an upper bound on the
/// intrinsic distance. Exact for Klein bottles (per-coset rectangular
/// rounding), within one reduction step for tori.
fn nearest_lift_upper_bound(surface: &Surface, src: PlanePoint, target: PlanePoint) -> f64 {
    match surface {
        Surface::Torus(spec) => {
            let u = spec.u();
            let v = spec.v();
            let (s0, t0) = spec.basis_coords(src - target);
            let mr = s0.round();
            let nr = t0.round();
            let mut best = f64::INFINITY;
            for dm in -1..=1 {
                for dn in -1..=1 {
                    let pt = target + u * (mr + dm as f64) + v * (nr + dn as f64);
                    best = best.min(pt.dist_sq(src));
                }
            }
            best.sqrt()
        }
        Surface::Klein(spec) => {
            let a = spec.a();
            let b = spec.b();
            let mut best = f64::INFINITY;
            // Even glide powers: the rectangular lattice (2a, b) around target.
            let j = ((src.x - target.x) / (2.0 * a)).round();
            let n = ((src.y - target.y) / b).round();
            let even = PlanePoint::new(target.x + 2.0 * a * j, target.y + b * n);
            best = best.min(even.dist_sq(src));
            // Odd glide powers: x shifts by an odd multiple of a, y negates.
            let j = ((src.x - target.x - a) / (2.0 * a)).round();
            let n = ((src.y + target.y) / b).round();
            let odd = PlanePoint::new(target.x + a + 2.0 * a * j, -target.y + b * n);
            best = best.min(odd.dist_sq(src));
            best.sqrt()
        }
    }
}

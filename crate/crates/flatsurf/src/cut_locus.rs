//! Cut-locus graphs and farthest-point classification.
//!
//! On a flat surface the cut locus of `p` is the image of the Voronoi
//! diagram of the preimage of `p`, and its restriction to one tile equals
//! the Voronoi diagram of the tile's four vertices. For a torus the tile is
//! the fundamental parallelogram with vertices `o, u, v, h = u + v`; for a
//! Klein bottle it is the kite with vertices `p0 = (0, -xi)`,
//! `h± = (±a, xi)`, `v = (0, b - xi)` in the canonical frame. Farthest
//! points are always ramification vertices of the cut locus.

use crate::canonicalize::klein_canonicalize;
use crate::geom::{circumcenter, PlanePoint};
use crate::surface::{KleinSpec, Surface, SurfacePoint, TorusSpec};
use crate::Error;
use std::f64::consts::FRAC_PI_2;

/// Absolute tolerance for treating the torus angle as right.
pub const TAU_ANGLE: f64 = 1e-12;
/// Tolerance on the normalized offset `lambda`.
pub const TAU_LAMBDA: f64 = 1e-12;

/// Circumcenters of the two triangles tiling the fundamental parallelogram,
/// in absolute plane coordinates (translated by the source lift).
#[derive(Clone, Copy, Debug)]
pub struct TorusCutData {
    /// Circumcenter of `(o, u, v)`.
    pub c1: PlanePoint,
    /// Circumcenter of `(u, v, h)`.
    pub c2: PlanePoint,
    /// Right-angle case: the two centers merge into one degree-4 vertex.
    pub degenerate: bool,
}

/// Computes the tile circumcenters for the lift of `p` at the tile origin.
pub fn torus_cut_data(spec: TorusSpec, p: &SurfacePoint) -> TorusCutData {
    let o = p.rep;
    let u = o + spec.u();
    let v = o + spec.v();
    let h = o + spec.h();
    let c1 = circumcenter(o, u, v).expect("tile triangle is non-degenerate");
    let c2 = circumcenter(u, v, h).expect("tile triangle is non-degenerate");
    TorusCutData {
        c1,
        c2,
        degenerate: (spec.alpha() - FRAC_PI_2).abs() < TAU_ANGLE,
    }
}

/// The five qualitative regimes of a Klein-bottle base point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KleinCase {
    /// Point on a main geodesic: rectangular Voronoi tiling.
    LambdaZero,
    DeltaPositive,
    DeltaZero,
    DeltaNegativeInterior,
    DeltaNegativeHalf,
}

/// Circumcenter data for the canonical kite, in the canonical frame where
/// the base point lifts to `p0 = (0, -xi)`.
#[derive(Clone, Copy, Debug)]
pub struct KleinCutData {
    pub lambda: f64,
    /// Discriminant `a^2 - b^2 lambda (1 - lambda)` governing the case split.
    pub delta: f64,
    /// Critical offset where the discriminant vanishes; only for `b >= 2a`.
    pub lambda0: Option<f64>,
    /// Circumcenter of `(p0, v, h+)`.
    pub c_plus: PlanePoint,
    /// Circumcenter of `(p0, v, h-)`.
    pub c_minus: PlanePoint,
    /// Circumcenter of `(p0, h+, h-)`; undefined on a main geodesic.
    pub c0: Option<PlanePoint>,
    /// Circumcenter of `(v, h-, h+)`.
    pub c1: PlanePoint,
    pub case: KleinCase,
    spec: KleinSpec,
}

impl KleinCutData {
    pub fn xi(&self) -> f64 {
        self.lambda * self.spec.b() / 2.0
    }

    /// The kite vertices `(p0, h+, v, h-)` in the canonical frame.
    pub fn kite(&self) -> [PlanePoint; 4] {
        let a = self.spec.a();
        let b = self.spec.b();
        let xi = self.xi();
        [
            PlanePoint::new(0.0, -xi),
            PlanePoint::new(a, xi),
            PlanePoint::new(0.0, b - xi),
            PlanePoint::new(-a, xi),
        ]
    }
}

/// Evaluates the circumcenter formulas for offset `lambda` in `[0, 1/2]`.
pub fn klein_cut_data(spec: KleinSpec, lambda: f64) -> Result<KleinCutData, Error> {
    if !(0.0..=0.5 + TAU_LAMBDA).contains(&lambda) {
        return Err(Error::LambdaOutOfRange { lambda });
    }
    let lambda = lambda.min(0.5);
    let a = spec.a();
    let b = spec.b();
    let delta = a * a - b * b * lambda * (1.0 - lambda);
    let tau_delta = 1e-12 * (a * a).max(b * b);

    let lambda0_arg = 0.25 - (a * a) / (b * b);
    let lambda0 = (lambda0_arg >= 0.0).then(|| 0.5 - lambda0_arg.sqrt());

    let c_plus = PlanePoint::new(delta / (2.0 * a), b * (1.0 - lambda) / 2.0);
    let c_minus = PlanePoint::new(-c_plus.x, c_plus.y);
    let c0 = (lambda >= TAU_LAMBDA).then(|| PlanePoint::new(0.0, a * a / (2.0 * b * lambda)));
    let c1 = PlanePoint::new(
        0.0,
        (b * b * (1.0 - lambda) * (1.0 - lambda) - delta) / (2.0 * b * (1.0 - lambda)),
    );

    let case = if lambda < TAU_LAMBDA {
        KleinCase::LambdaZero
    } else if delta.abs() <= tau_delta {
        KleinCase::DeltaZero
    } else if delta > 0.0 {
        KleinCase::DeltaPositive
    } else if lambda < 0.5 - TAU_LAMBDA {
        KleinCase::DeltaNegativeInterior
    } else {
        KleinCase::DeltaNegativeHalf
    };

    Ok(KleinCutData {
        lambda,
        delta,
        lambda0,
        c_plus,
        c_minus,
        c0,
        c1,
        case,
        spec,
    })
}

/// A ramification vertex of the cut locus.
#[derive(Clone, Copy, Debug)]
pub struct CutVertex {
    pub point: SurfacePoint,
    pub degree: usize,
    pub distance: f64,
}

/// An edge of the cut locus; `from == to` for loops.
#[derive(Clone, Copy, Debug)]
pub struct CutEdge {
    pub from: usize,
    pub to: usize,
    pub length: f64,
}

/// The cut locus as an embedded graph. On any closed flat surface it
/// satisfies `V - E = -1` and has no vertices of degree below three.
#[derive(Clone, Debug)]
pub struct CutLocusGraph {
    pub vertices: Vec<CutVertex>,
    pub edges: Vec<CutEdge>,
}

impl CutLocusGraph {
    pub fn euler_defect(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64
    }

    pub fn degree_sum(&self) -> usize {
        self.vertices.iter().map(|v| v.degree).sum()
    }

    /// Degree of a vertex counted from the edge list (loops count twice).
    pub fn incident_degree(&self, vertex: usize) -> usize {
        self.edges
            .iter()
            .map(|e| (e.from == vertex) as usize + (e.to == vertex) as usize)
            .sum()
    }
}

/// Case labels carried by farthest-point reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseLabel {
    TorusRectangular,
    TorusOblique,
    Klein(KleinCase),
}

impl CaseLabel {
    pub fn name(&self) -> &'static str {
        match self {
            CaseLabel::TorusRectangular => "Rectangular",
            CaseLabel::TorusOblique => "Oblique",
            CaseLabel::Klein(KleinCase::LambdaZero) => "LambdaZero",
            CaseLabel::Klein(KleinCase::DeltaPositive) => "DeltaPositive",
            CaseLabel::Klein(KleinCase::DeltaZero) => "DeltaZero",
            CaseLabel::Klein(KleinCase::DeltaNegativeInterior) => "DeltaNegativeInterior",
            CaseLabel::Klein(KleinCase::DeltaNegativeHalf) => "DeltaNegativeHalf",
        }
    }
}

/// One farthest point, in user coordinates and in the canonical frame that
/// produced it (relative to the source lift for tori).
#[derive(Clone, Copy, Debug)]
pub struct FarthestPoint {
    pub point: SurfacePoint,
    pub canonical: PlanePoint,
    pub n_segments: usize,
    pub distance: f64,
}

/// The farthest-point set of a base point, with its classification case and
/// the maximal distance (the filling radius of the point).
#[derive(Clone, Debug)]
pub struct FarthestReport {
    pub points: Vec<FarthestPoint>,
    pub case: CaseLabel,
    pub radius: f64,
}

impl FarthestReport {
    pub fn case_label(&self) -> &'static str {
        self.case.name()
    }
}

/// Builds the cut locus of `p` as a graph with vertex distances and degrees.
pub fn cut_locus(surface: &Surface, p: &SurfacePoint) -> CutLocusGraph {
    match surface {
        Surface::Torus(spec) => torus_cut_locus(*spec, p),
        Surface::Klein(spec) => klein_cut_locus(surface, *spec, p),
    }
}

fn torus_cut_locus(spec: TorusSpec, p: &SurfacePoint) -> CutLocusGraph {
    let surface = Surface::Torus(spec);
    let data = torus_cut_data(spec, p);
    let rel1 = data.c1 - p.rep;
    let rel2 = data.c2 - p.rep;
    let u = spec.u();

    if data.degenerate {
        // Rectangular tiling: the cut locus is the union of the two closed
        // geodesics through the far corner, a figure eight.
        let radius = rel1.norm();
        let vertex = CutVertex {
            point: surface.wrap(data.c1),
            degree: 4,
            distance: radius,
        };
        return CutLocusGraph {
            vertices: vec![vertex],
            edges: vec![
                CutEdge {
                    from: 0,
                    to: 0,
                    length: spec.a(),
                },
                CutEdge {
                    from: 0,
                    to: 0,
                    length: spec.b(),
                },
            ],
        };
    }

    // Oblique tiling: hexagonal Voronoi cells, so the quotient is a theta
    // graph on the two circumcenter classes. The three edge lengths are the
    // three distinct hexagon sides.
    let radius = rel1.norm();
    let vertices = vec![
        CutVertex {
            point: surface.wrap(data.c1),
            degree: 3,
            distance: radius,
        },
        CutVertex {
            point: surface.wrap(data.c2),
            degree: 3,
            distance: (rel2 - u).norm(),
        },
    ];
    let edges = vec![
        CutEdge {
            from: 0,
            to: 1,
            length: (rel1 - rel2 + u).norm(),
        },
        CutEdge {
            from: 0,
            to: 1,
            length: (rel1 - rel2).norm(),
        },
        CutEdge {
            from: 0,
            to: 1,
            length: (rel1 * 2.0 - u).norm(),
        },
    ];
    CutLocusGraph { vertices, edges }
}

fn klein_cut_locus(surface: &Surface, spec: KleinSpec, p: &SurfacePoint) -> CutLocusGraph {
    let canon = klein_canonicalize(spec, p);
    let data = klein_cut_data(spec, canon.lambda).expect("lambda in range by construction");
    let a = spec.a();
    let b = spec.b();
    let xi = data.xi();
    let p0 = PlanePoint::new(0.0, -xi);
    let v = PlanePoint::new(0.0, b - xi);
    // Midpoints of the lower-right and upper-right kite edges, where the
    // Voronoi legs cross the kite boundary and glue to their mirror legs.
    let m1 = PlanePoint::new(a / 2.0, 0.0);
    let m2 = PlanePoint::new(a / 2.0, b / 2.0);
    let wrap = |c: PlanePoint| surface.wrap(canon.to_user(spec, c));

    match data.case {
        KleinCase::LambdaZero => {
            // Rectangular tiling of the full preimage lattice (a, b): the cut
            // locus is a vertical circle of length b and the opposite main
            // geodesic of length a, crossing once.
            let far = PlanePoint::new(a / 2.0, b / 2.0);
            let vertices = vec![CutVertex {
                point: wrap(far),
                degree: 4,
                distance: (a * a + b * b).sqrt() / 2.0,
            }];
            let edges = vec![
                CutEdge {
                    from: 0,
                    to: 0,
                    length: b,
                },
                CutEdge {
                    from: 0,
                    to: 0,
                    length: a,
                },
            ];
            CutLocusGraph { vertices, edges }
        }
        KleinCase::DeltaPositive => {
            // Theta graph between the mirror-symmetric vertices c+ and c-.
            let cp = data.c_plus;
            let cm = data.c_minus;
            let radius = (cp - p0).norm();
            let vertices = vec![
                CutVertex {
                    point: wrap(cp),
                    degree: 3,
                    distance: radius,
                },
                CutVertex {
                    point: wrap(cm),
                    degree: 3,
                    distance: radius,
                },
            ];
            let edges = vec![
                CutEdge {
                    from: 0,
                    to: 1,
                    length: (cp - cm).norm(),
                },
                CutEdge {
                    from: 0,
                    to: 1,
                    length: 2.0 * (cp - m1).norm(),
                },
                CutEdge {
                    from: 0,
                    to: 1,
                    length: 2.0 * (cp - m2).norm(),
                },
            ];
            CutLocusGraph { vertices, edges }
        }
        KleinCase::DeltaZero => {
            // All four circumcenters coincide: a single degree-4 vertex with
            // two loops through the glued kite-edge midpoints.
            let c = PlanePoint::new(0.0, b * (1.0 - data.lambda) / 2.0);
            let vertices = vec![CutVertex {
                point: wrap(c),
                degree: 4,
                distance: (c - p0).norm(),
            }];
            let edges = vec![
                CutEdge {
                    from: 0,
                    to: 0,
                    length: 2.0 * (c - m1).norm(),
                },
                CutEdge {
                    from: 0,
                    to: 0,
                    length: 2.0 * (c - m2).norm(),
                },
            ];
            CutLocusGraph { vertices, edges }
        }
        KleinCase::DeltaNegativeInterior | KleinCase::DeltaNegativeHalf => {
            // Dumbbell: the axis edge joins c0 and c1, and each vertex
            // carries a loop through its pair of glued kite-edge midpoints.
            let c0 = data.c0.expect("c0 defined for positive lambda");
            let c1 = data.c1;
            let vertices = vec![
                CutVertex {
                    point: wrap(c0),
                    degree: 3,
                    distance: (c0 - p0).norm(),
                },
                CutVertex {
                    point: wrap(c1),
                    degree: 3,
                    distance: (v - c1).norm(),
                },
            ];
            let edges = vec![
                CutEdge {
                    from: 0,
                    to: 1,
                    length: (c1 - c0).norm(),
                },
                CutEdge {
                    from: 0,
                    to: 0,
                    length: 2.0 * (c0 - m1).norm(),
                },
                CutEdge {
                    from: 1,
                    to: 1,
                    length: 2.0 * (c1 - m2).norm(),
                },
            ];
            CutLocusGraph { vertices, edges }
        }
    }
}

/// Classifies and returns the farthest points from `p`.
///
/// Torus: the two circumcenter classes with three segments each, merging to
/// a single four-segment point for the rectangular case. Klein bottle: one
/// of the five regimes of the discriminant classification.
pub fn farthest_points(surface: &Surface, p: &SurfacePoint) -> FarthestReport {
    match surface {
        Surface::Torus(spec) => {
            let data = torus_cut_data(*spec, p);
            let rel1 = data.c1 - p.rep;
            if data.degenerate {
                let radius = rel1.norm();
                FarthestReport {
                    points: vec![FarthestPoint {
                        point: surface.wrap(data.c1),
                        canonical: rel1,
                        n_segments: 4,
                        distance: radius,
                    }],
                    case: CaseLabel::TorusRectangular,
                    radius,
                }
            } else {
                let rel2 = data.c2 - p.rep;
                let radius = rel1.norm();
                FarthestReport {
                    points: vec![
                        FarthestPoint {
                            point: surface.wrap(data.c1),
                            canonical: rel1,
                            n_segments: 3,
                            distance: radius,
                        },
                        FarthestPoint {
                            point: surface.wrap(data.c2),
                            canonical: rel2,
                            n_segments: 3,
                            distance: (rel2 - spec.u()).norm(),
                        },
                    ],
                    case: CaseLabel::TorusOblique,
                    radius,
                }
            }
        }
        Surface::Klein(spec) => {
            let canon = klein_canonicalize(*spec, p);
            let data = klein_cut_data(*spec, canon.lambda).expect("lambda in range");
            let a = spec.a();
            let b = spec.b();
            let xi = data.xi();
            let p0 = PlanePoint::new(0.0, -xi);
            let v = PlanePoint::new(0.0, b - xi);
            let wrap = |c: PlanePoint| surface.wrap(canon.to_user(*spec, c));
            let far = |c: PlanePoint, n: usize, d: f64| FarthestPoint {
                point: wrap(c),
                canonical: c,
                n_segments: n,
                distance: d,
            };

            let (points, case) = match data.case {
                KleinCase::LambdaZero => {
                    let c = PlanePoint::new(a / 2.0, b / 2.0);
                    let d = (a * a + b * b).sqrt() / 2.0;
                    (vec![far(c, 4, d)], KleinCase::LambdaZero)
                }
                KleinCase::DeltaPositive => {
                    let d = (data.c_plus - p0).norm();
                    (
                        vec![far(data.c_plus, 3, d), far(data.c_minus, 3, d)],
                        KleinCase::DeltaPositive,
                    )
                }
                KleinCase::DeltaZero => {
                    let c = PlanePoint::new(0.0, b * (1.0 - data.lambda) / 2.0);
                    (vec![far(c, 4, (c - p0).norm())], KleinCase::DeltaZero)
                }
                KleinCase::DeltaNegativeInterior => {
                    let d = (v - data.c1).norm();
                    (vec![far(data.c1, 3, d)], KleinCase::DeltaNegativeInterior)
                }
                KleinCase::DeltaNegativeHalf => {
                    let c0 = data.c0.expect("c0 defined for positive lambda");
                    (
                        vec![
                            far(c0, 3, (c0 - p0).norm()),
                            far(data.c1, 3, (v - data.c1).norm()),
                        ],
                        KleinCase::DeltaNegativeHalf,
                    )
                }
            };
            let radius = points.iter().map(|f| f.distance).fold(0.0, f64::max);
            FarthestReport {
                points,
                case: CaseLabel::Klein(case),
                radius,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::distance;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3};

    fn hexagonal_torus() -> (Surface, TorusSpec) {
        let spec = TorusSpec::new(1.0, 1.0, FRAC_PI_3).unwrap();
        (Surface::Torus(spec), spec)
    }

    #[test]
    fn torus_cut_data_square() {
        let spec = TorusSpec::new(1.0, 1.0, FRAC_PI_2).unwrap();
        let s = Surface::Torus(spec);
        let data = torus_cut_data(spec, &s.point(0.0, 0.0));
        assert!(data.degenerate);
        assert!(data.c1.dist(PlanePoint::new(0.5, 0.5)) < 1e-12);
        assert!(data.c2.dist(PlanePoint::new(0.5, 0.5)) < 1e-12);
    }

    #[test]
    fn torus_cut_data_hexagonal() {
        let (s, spec) = hexagonal_torus();
        let data = torus_cut_data(spec, &s.point(0.0, 0.0));
        assert!(!data.degenerate);
        let sqrt3 = 3f64.sqrt();
        assert!(data.c1.dist(PlanePoint::new(0.5, sqrt3 / 6.0)) < 1e-12);
        assert!(data.c2.dist(PlanePoint::new(1.0, 1.0 / sqrt3)) < 1e-12);
    }

    #[test]
    fn torus_cut_data_translates_with_base_point() {
        let (s, spec) = hexagonal_torus();
        let origin = torus_cut_data(spec, &s.point(0.0, 0.0));
        let p = s.point(0.21, 0.35);
        let moved = torus_cut_data(spec, &p);
        assert!((moved.c1 - p.rep).dist(origin.c1) < 1e-12);
        assert!((moved.c2 - p.rep).dist(origin.c2) < 1e-12);
    }

    #[test]
    fn klein_cut_data_wide_kite() {
        let spec = KleinSpec::new(1.0, 1.0).unwrap();
        let data = klein_cut_data(spec, 0.25).unwrap();
        assert!((data.delta - 0.8125).abs() < 1e-12);
        assert!(data.c_plus.dist(PlanePoint::new(0.40625, 0.375)) < 1e-12);
        assert!(data.c_minus.dist(PlanePoint::new(-0.40625, 0.375)) < 1e-12);
        assert_eq!(data.case, KleinCase::DeltaPositive);
        assert!(data.lambda0.is_none());
        // Equidistance from the defining triple.
        let p0 = PlanePoint::new(0.0, -0.125);
        let v = PlanePoint::new(0.0, 0.875);
        let hp = PlanePoint::new(1.0, 0.125);
        let r = data.c_plus.dist(p0);
        assert!((data.c_plus.dist(v) - r).abs() < 1e-12);
        assert!((data.c_plus.dist(hp) - r).abs() < 1e-12);
    }

    #[test]
    fn klein_cut_data_tall_kite() {
        let spec = KleinSpec::new(1.0, 4.0).unwrap();
        let data = klein_cut_data(spec, 0.25).unwrap();
        assert!((data.delta + 2.0).abs() < 1e-12);
        assert!(data.c1.dist(PlanePoint::new(0.0, 11.0 / 6.0)) < 1e-12);
        assert_eq!(data.case, KleinCase::DeltaNegativeInterior);
    }

    #[test]
    fn klein_cut_data_critical_offset() {
        let spec = KleinSpec::new(1.0, 4.0).unwrap();
        let lambda0 = 0.5 - 3f64.sqrt() / 4.0;
        let data = klein_cut_data(spec, lambda0).unwrap();
        assert_eq!(data.case, KleinCase::DeltaZero);
        assert!(data.delta.abs() < 1e-10);
        let l0 = data.lambda0.unwrap();
        assert!((l0 - lambda0).abs() < 1e-12);
        // All four centers coincide.
        let c0 = data.c0.unwrap();
        assert!(data.c_plus.dist(c0) < 1e-9);
        assert!(data.c_minus.dist(c0) < 1e-9);
        assert!(data.c1.dist(c0) < 1e-9);
    }

    #[test]
    fn klein_cut_data_rejects_out_of_range() {
        let spec = KleinSpec::new(1.0, 2.0).unwrap();
        assert!(matches!(
            klein_cut_data(spec, 0.6),
            Err(Error::LambdaOutOfRange { .. })
        ));
        assert!(matches!(
            klein_cut_data(spec, -0.1),
            Err(Error::LambdaOutOfRange { .. })
        ));
    }

    #[test]
    fn cut_locus_square_torus_figure_eight() {
        let spec = TorusSpec::new(1.0, 1.0, FRAC_PI_2).unwrap();
        let s = Surface::Torus(spec);
        let g = cut_locus(&s, &s.point(0.0, 0.0));
        assert_eq!(g.vertices.len(), 1);
        assert_eq!(g.edges.len(), 2);
        assert_eq!(g.vertices[0].degree, 4);
        assert!(g.vertices[0].point.rep.dist(PlanePoint::new(0.5, 0.5)) < 1e-12);
        let mut lengths: Vec<f64> = g.edges.iter().map(|e| e.length).collect();
        lengths.sort_by(f64::total_cmp);
        assert!((lengths[0] - 1.0).abs() < 1e-12);
        assert!((lengths[1] - 1.0).abs() < 1e-12);
        assert_eq!(g.euler_defect(), -1);
        assert_eq!(g.degree_sum(), 2 * g.edges.len());
    }

    #[test]
    fn cut_locus_hexagonal_torus_theta_graph() {
        let (s, _) = hexagonal_torus();
        let g = cut_locus(&s, &s.point(0.0, 0.0));
        assert_eq!(g.vertices.len(), 2);
        assert_eq!(g.edges.len(), 3);
        for v in &g.vertices {
            assert_eq!(v.degree, 3);
        }
        for e in &g.edges {
            assert!((e.length - 1.0 / 3f64.sqrt()).abs() < 1e-12);
        }
        assert_eq!(g.euler_defect(), -1);
    }

    #[test]
    fn cut_locus_klein_dumbbell() {
        let spec = KleinSpec::new(1.0, 4.0).unwrap();
        let s = Surface::Klein(spec);
        // lambda = 1/4 puts the point at xi = 1/2 from a main geodesic.
        let g = cut_locus(&s, &s.point(0.0, 0.5));
        assert_eq!(g.vertices.len(), 2);
        assert_eq!(g.edges.len(), 3);
        assert_eq!(g.euler_defect(), -1);
        for v in &g.vertices {
            assert_eq!(v.degree, 3);
            assert_eq!(g.incident_degree(0), 3);
        }
    }

    #[test]
    fn graph_vertex_data_agrees_with_metric() {
        let spec = KleinSpec::new(1.0, 4.0).unwrap();
        let s = Surface::Klein(spec);
        for p in [s.point(0.3, 0.5), s.point(0.0, 1.0), s.point(0.7, 0.13)] {
            let g = cut_locus(&s, &p);
            for vtx in &g.vertices {
                let d = distance(&p, &vtx.point);
                assert!((d.distance - vtx.distance).abs() < s.dist_tol());
                assert_eq!(d.n_segments, vtx.degree);
            }
        }
    }

    #[test]
    fn farthest_square_torus() {
        let spec = TorusSpec::new(1.0, 1.0, FRAC_PI_2).unwrap();
        let s = Surface::Torus(spec);
        let r = farthest_points(&s, &s.point(0.3, 0.4));
        assert_eq!(r.points.len(), 1);
        assert_eq!(r.points[0].n_segments, 4);
        assert!((r.radius - 0.5f64.sqrt()).abs() < 1e-12);
        assert_eq!(r.case, CaseLabel::TorusRectangular);
        let expected = s.point(0.8, 0.9);
        let d = distance(&r.points[0].point, &expected);
        assert!(d.distance < s.dist_tol());
    }

    #[test]
    fn farthest_hexagonal_torus() {
        let (s, _) = hexagonal_torus();
        let r = farthest_points(&s, &s.point(0.0, 0.0));
        assert_eq!(r.points.len(), 2);
        for f in &r.points {
            assert_eq!(f.n_segments, 3);
            assert!((f.distance - 1.0 / 3f64.sqrt()).abs() < 1e-12);
        }
        assert_eq!(r.case, CaseLabel::TorusOblique);
    }

    #[test]
    fn farthest_klein_cases() {
        // b = 2a at the half offset: single point with four segments.
        let s = Surface::Klein(KleinSpec::new(1.0, 2.0).unwrap());
        let r = farthest_points(&s, &s.point(0.0, 0.5));
        assert_eq!(r.points.len(), 1);
        assert_eq!(r.points[0].n_segments, 4);
        assert_eq!(r.case, CaseLabel::Klein(KleinCase::DeltaZero));

        // b = 4a at lambda = 1/4: a single three-segment farthest point.
        let s4 = Surface::Klein(KleinSpec::new(1.0, 4.0).unwrap());
        let r = farthest_points(&s4, &s4.point(0.0, 0.5));
        assert_eq!(r.points.len(), 1);
        assert_eq!(r.points[0].n_segments, 3);
        assert_eq!(r.case, CaseLabel::Klein(KleinCase::DeltaNegativeInterior));
        assert!(r.points[0].canonical.dist(PlanePoint::new(0.0, 11.0 / 6.0)) < 1e-12);

        // b = 4a at lambda = 1/2: both dumbbell vertices are farthest.
        let r = farthest_points(&s4, &s4.point(0.0, 1.0));
        assert_eq!(r.points.len(), 2);
        for f in &r.points {
            assert_eq!(f.n_segments, 3);
            assert!((f.distance - r.radius).abs() < s4.dist_tol());
        }
        assert_eq!(r.case, CaseLabel::Klein(KleinCase::DeltaNegativeHalf));
    }

    #[test]
    fn farthest_points_are_graph_vertices() {
        let surfaces = [
            Surface::Torus(TorusSpec::new(0.8, 1.0, 1.2).unwrap()),
            Surface::Klein(KleinSpec::new(1.0, 1.0).unwrap()),
            Surface::Klein(KleinSpec::new(1.0, 4.0).unwrap()),
        ];
        for s in surfaces {
            let p = s.point(0.17, 0.29);
            let report = farthest_points(&s, &p);
            let graph = cut_locus(&s, &p);
            for f in &report.points {
                let hit = graph
                    .vertices
                    .iter()
                    .find(|v| distance(&v.point, &f.point).distance < s.dist_tol());
                let v = hit.expect("farthest point must be a cut-locus vertex");
                assert_eq!(v.degree, f.n_segments);
                assert!((v.distance - f.distance).abs() < s.dist_tol());
            }
        }
    }
}

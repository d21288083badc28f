//! Intrinsic geometry of closed flat surfaces.
//!
//! Every compact boundaryless flat surface is a flat torus or a flat Klein
//! bottle, presented here as a quotient of the Euclidean plane by a discrete
//! group of isometries. The crate computes, exactly up to floating point:
//!
//! - canonical parameter forms (lattice basis reduction for tori, the
//!   normalized offset to the nearest main geodesic for Klein bottles),
//! - covering-space distances with segment counts and initial directions,
//! - the cut locus of a point as an embedded graph,
//! - the farthest-point set of a point, classified by case,
//! - an independent brute-force oracle (grid maximization of the distance
//!   function plus empty-circumdisk Voronoi vertex detection) used to
//!   cross-validate the analytic results.
//!
//! With the default `parallel` feature, grid evaluation runs on rayon;
//! disabling the feature falls back to a sequential path with byte-identical
//! results.

use thiserror::Error;

pub mod canonicalize;
pub mod cut_locus;
pub mod geom;
pub mod oracle;
pub mod orbit;
pub mod surface;

pub use canonicalize::{klein_canonicalize, reduce_basis, KleinCanonicalPoint, ReductionResult};
pub use cut_locus::{
    cut_locus, farthest_points, klein_cut_data, torus_cut_data, CaseLabel, CutEdge, CutLocusGraph,
    CutVertex, FarthestPoint, FarthestReport, KleinCase, KleinCutData, TorusCutData,
};
pub use geom::{circumcenter, PlanePoint};
pub use oracle::{
    distance_field, distance_field_seq, grid_farthest, restriction_check, voronoi_vertex_oracle,
    DistanceField, OracleFarthest, Rect, RestrictionReport, DEFAULT_RESOLUTION,
};
pub use orbit::{distance, orbit, orbit_with_cap, DistanceResult, OrbitSet, DEFAULT_ORBIT_CAP};
pub use surface::{DeckElement, KleinSpec, Surface, SurfacePoint, TorusSpec};

/// Errors reported by constructors and enumeration routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("side lengths must be positive: a = {a}, b = {b}")]
    NonPositiveSide { a: f64, b: f64 },
    #[error("angle must lie in (0, pi/2]: alpha = {alpha}")]
    AngleOutOfRange { alpha: f64 },
    #[error(
        "parameters violate 2*b*cos(alpha) <= a <= b (a = {a}, b = {b}, alpha = {alpha}); \
         reduce the basis first (`reduce_basis`, or the CLI `reduce` subcommand)"
    )]
    NotCanonical { a: f64, b: f64, alpha: f64 },
    #[error("basis vectors span a degenerate parallelogram")]
    DegenerateBasis,
    #[error("orbit enumeration would exceed the cap of {cap} points")]
    RadiusTooLarge { cap: usize },
    #[error("lambda must lie in [0, 1/2]: lambda = {lambda}")]
    LambdaOutOfRange { lambda: f64 },
}

//! Brute-force ground truth, independent of the cut-locus construction.
//!
//! This module depends only on the surface types and the orbit metric. It
//! provides grid maximization of the distance function, empty-circumdisk
//! Voronoi vertex detection, and the tile-restriction spot check used by the
//! property suites.

use crate::geom::{circumcenter, PlanePoint};
use crate::orbit::{distance, orbit};
use crate::surface::{Surface, SurfacePoint};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Default grid resolution for oracle sweeps.
pub const DEFAULT_RESOLUTION: (usize, usize) = (512, 512);

/// Cell-centered samples of the distance-from-`p` function over the
/// fundamental domain. Row-major: index `j * nx + i`.
#[derive(Clone, Debug)]
pub struct DistanceField {
    pub surface: Surface,
    pub base: SurfacePoint,
    pub nx: usize,
    pub ny: usize,
    pub distances: Vec<f64>,
}

impl DistanceField {
    /// Cell-center sample point for cell `(i, j)`.
    pub fn point_at(&self, i: usize, j: usize) -> SurfacePoint {
        let fx = (i as f64 + 0.5) / self.nx as f64;
        let fy = (j as f64 + 0.5) / self.ny as f64;
        let rep = match &self.surface {
            Surface::Torus(spec) => spec.u() * fx + spec.v() * fy,
            Surface::Klein(spec) => PlanePoint::new(fx * spec.a(), fy * spec.b()),
        };
        SurfacePoint {
            surface: self.surface,
            rep,
        }
    }

    pub fn value(&self, i: usize, j: usize) -> f64 {
        self.distances[j * self.nx + i]
    }

    pub fn max_value(&self) -> f64 {
        self.distances
            .iter()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Length of the longer diagonal of one grid cell.
    pub fn cell_diagonal(&self) -> f64 {
        match &self.surface {
            Surface::Torus(spec) => {
                let du = spec.u() * (1.0 / self.nx as f64);
                let dv = spec.v() * (1.0 / self.ny as f64);
                (du + dv).norm().max((du - dv).norm())
            }
            Surface::Klein(spec) => {
                let dx = spec.a() / self.nx as f64;
                let dy = spec.b() / self.ny as f64;
                (dx * dx + dy * dy).sqrt()
            }
        }
    }
}

/// Samples the distance function on a cell-centered grid. Parallel over rows
/// when the `parallel` feature is on; output is identical either way.
pub fn distance_field(
    surface: &Surface,
    p: &SurfacePoint,
    resolution: (usize, usize),
) -> DistanceField {
    #[cfg(feature = "parallel")]
    {
        field_impl(surface, p, resolution, true)
    }
    #[cfg(not(feature = "parallel"))]
    {
        field_impl(surface, p, resolution)
    }
}

/// Sequential reference path for [`distance_field`].
pub fn distance_field_seq(
    surface: &Surface,
    p: &SurfacePoint,
    resolution: (usize, usize),
) -> DistanceField {
    #[cfg(feature = "parallel")]
    {
        field_impl(surface, p, resolution, false)
    }
    #[cfg(not(feature = "parallel"))]
    {
        field_impl(surface, p, resolution)
    }
}

fn field_impl(
    surface: &Surface,
    p: &SurfacePoint,
    (nx, ny): (usize, usize),
    #[cfg(feature = "parallel")] parallel: bool,
) -> DistanceField {
    assert!(nx >= 1 && ny >= 1, "empty grid");
    let shell = DistanceField {
        surface: *surface,
        base: *p,
        nx,
        ny,
        distances: Vec::new(),
    };
    let row = |j: usize| -> Vec<f64> {
        (0..nx)
            .map(|i| distance(p, &shell.point_at(i, j)).distance)
            .collect()
    };

    #[cfg(feature = "parallel")]
    let rows: Vec<Vec<f64>> = if parallel {
        (0..ny).into_par_iter().map(row).collect()
    } else {
        (0..ny).map(row).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let rows: Vec<Vec<f64>> = (0..ny).map(row).collect();

    let mut distances = Vec::with_capacity(nx * ny);
    for r in rows {
        distances.extend_from_slice(&r);
    }
    DistanceField { distances, ..shell }
}

/// Grid argmax clusters of the distance function.
#[derive(Clone, Debug)]
pub struct OracleFarthest {
    /// One representative per cluster of near-maximal cells.
    pub points: Vec<SurfacePoint>,
    /// The sampled maximum.
    pub distance: f64,
    /// Location tolerance: twice the grid-cell diagonal.
    pub resolution_bound: f64,
}

/// Locates the farthest points from `p` by grid search.
///
/// Cells within a fraction of a cell diagonal of the sampled maximum are
/// grouped by adjacency within a two-cell radius (respecting the surface identifications,
/// including the orientation-reversing seam of the Klein bottle); each
/// cluster reports its maximal cell. Requires at least 16 cells per axis.
pub fn grid_farthest(
    surface: &Surface,
    p: &SurfacePoint,
    resolution: (usize, usize),
) -> OracleFarthest {
    assert!(
        resolution.0 >= 16 && resolution.1 >= 16,
        "grid oracle needs at least 16 cells per axis"
    );
    let field = distance_field(surface, p, resolution);
    cluster_field(&field)
}

fn cluster_field(field: &DistanceField) -> OracleFarthest {
    let (nx, ny) = (field.nx, field.ny);
    let max = field.max_value();
    let diag = field.cell_diagonal();
    // Membership window below the sampled max: wide enough that the cell
    // nearest a true maximum (within half a diagonal of it) always enters,
    // narrow enough that the valleys between distinct farthest points stay
    // out.
    let threshold = max - diag;
    let is_klein = matches!(field.surface, Surface::Klein(_));
    let (a, b) = field.surface.dims();

    let hot: Vec<bool> = field.distances.iter().map(|&d| d >= threshold).collect();
    let mut label = vec![usize::MAX; nx * ny];
    let mut reps: Vec<usize> = Vec::new();

    // Neighbor in quotient coordinates: crossing the x seam of a Klein
    // bottle reflects the row index (cell centers map onto cell centers).
    let neighbor = |i: isize, j: isize| -> (usize, usize) {
        let nxi = nx as isize;
        let nyi = ny as isize;
        let q = i.div_euclid(nxi);
        let ii = i.rem_euclid(nxi);
        let jj = if is_klein && q.rem_euclid(2) != 0 {
            -1 - j
        } else {
            j
        };
        (ii as usize, jj.rem_euclid(nyi) as usize)
    };

    let mut stack = Vec::new();
    for start in 0..nx * ny {
        if !hot[start] || label[start] != usize::MAX {
            continue;
        }
        let lab = reps.len();
        label[start] = lab;
        stack.push(start);
        let mut best = start;
        while let Some(idx) = stack.pop() {
            if field.distances[idx] > field.distances[best]
                || (field.distances[idx] == field.distances[best] && idx < best)
            {
                best = idx;
            }
            let (ci, cj) = (idx % nx, idx / nx);
            for dj in -2isize..=2 {
                for di in -2isize..=2 {
                    if di == 0 && dj == 0 {
                        continue;
                    }
                    let (ni, nj) = neighbor(ci as isize + di, cj as isize + dj);
                    let nidx = nj * nx + ni;
                    if hot[nidx] && label[nidx] == usize::MAX {
                        label[nidx] = lab;
                        stack.push(nidx);
                    }
                }
            }
        }
        reps.push(best);
    }

    // Distinct farthest points are at least min(a, b)/4 apart wherever this
    // oracle certifies counts, while sampling artifacts (fragments of
    // near-maximal ridges around one vertex) stay much closer than that to
    // their vertex. Fold together components whose maxima are within half
    // the guaranteed separation.
    let merge_radius = a.min(b) / 8.0;
    let cell_point = |idx: usize| field.point_at(idx % nx, idx / nx);
    let mut group: Vec<usize> = (0..reps.len()).collect();
    fn root(group: &mut [usize], mut i: usize) -> usize {
        while group[i] != i {
            group[i] = group[group[i]];
            i = group[i];
        }
        i
    }
    for i in 0..reps.len() {
        for j in (i + 1)..reps.len() {
            let d = distance(&cell_point(reps[i]), &cell_point(reps[j])).distance;
            if d <= merge_radius {
                let (ri, rj) = (root(&mut group, i), root(&mut group, j));
                group[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut best_of_root: Vec<Option<usize>> = vec![None; reps.len()];
    for i in 0..reps.len() {
        let r = root(&mut group, i);
        let cand = reps[i];
        best_of_root[r] = Some(match best_of_root[r] {
            None => cand,
            Some(cur)
                if field.distances[cand] > field.distances[cur]
                    || (field.distances[cand] == field.distances[cur] && cand < cur) =>
            {
                cand
            }
            Some(cur) => cur,
        });
    }
    let mut merged: Vec<usize> = best_of_root.into_iter().flatten().collect();
    merged.sort_unstable();
    OracleFarthest {
        points: merged.iter().map(|&idx| cell_point(idx)).collect(),
        distance: max,
        resolution_bound: 2.0 * diag,
    }
}

/// Axis-aligned rectangle used as a search region.
#[derive(Clone, Copy, Debug)]
pub struct Rect {
    pub min: PlanePoint,
    pub max: PlanePoint,
}

impl Rect {
    pub fn new(min: PlanePoint, max: PlanePoint) -> Self {
        Self { min, max }
    }

    pub fn contains(&self, p: PlanePoint, tol: f64) -> bool {
        p.x >= self.min.x - tol
            && p.x <= self.max.x + tol
            && p.y >= self.min.y - tol
            && p.y <= self.max.y + tol
    }
}

/// Finds the Voronoi vertices of a site set inside a region by the
/// empty-circumdisk test.
///
/// Every circumcenter of a site triple whose open circumdisk contains no
/// other site is reported once, with the number of sites on its circle as
/// the degree. Needs at least three sites.
pub fn voronoi_vertex_oracle(sites: &[PlanePoint], region: Rect) -> Vec<(PlanePoint, usize)> {
    assert!(sites.len() >= 3, "need at least three sites");
    let mut scale = 0f64;
    for s in sites {
        scale = scale
            .max((s.x - sites[0].x).abs())
            .max((s.y - sites[0].y).abs());
    }
    let tol = 1e-9 * scale.max(1e-300);

    let mut vertices: Vec<(PlanePoint, usize)> = Vec::new();
    for i in 0..sites.len() {
        for j in (i + 1)..sites.len() {
            for k in (j + 1)..sites.len() {
                let Some(c) = circumcenter(sites[i], sites[j], sites[k]) else {
                    continue;
                };
                if !region.contains(c, tol) {
                    continue;
                }
                let r = c.dist(sites[i]);
                let mut empty = true;
                let mut degree = 0usize;
                for s in sites {
                    let d = c.dist(*s);
                    if d < r - tol {
                        empty = false;
                        break;
                    }
                    if (d - r).abs() <= tol {
                        degree += 1;
                    }
                }
                if !empty {
                    continue;
                }
                if !vertices.iter().any(|(v, _)| v.dist(c) <= tol) {
                    vertices.push((c, degree));
                }
            }
        }
    }
    vertices.sort_by(|(a, _), (b, _)| a.x.total_cmp(&b.x).then(a.y.total_cmp(&b.y)));
    vertices
}

type KiteSampler = Box<dyn FnMut(&mut ChaCha8Rng) -> PlanePoint>;

/// Result of the tile-restriction spot check.
#[derive(Clone, Debug)]
pub struct RestrictionReport {
    pub samples: usize,
    /// Sample points where the nearest tile vertex was not globally nearest.
    pub failures: Vec<PlanePoint>,
}

impl RestrictionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verifies empirically that inside one tile the Voronoi diagram of the
/// full preimage of `p` equals that of the tile's four vertices.
///
/// Draws `n_samples` uniform points in the tile (fundamental parallelogram
/// for a torus, canonical kite for a Klein bottle) and compares the nearest
/// of the four tile vertices against the nearest of all orbit points within
/// radius `3(a+b)`. Deterministic for a fixed `seed`.
pub fn restriction_check(
    surface: &Surface,
    p: &SurfacePoint,
    n_samples: usize,
    seed: u64,
) -> RestrictionReport {
    let (a, b) = surface.dims();
    let tol = surface.dist_tol();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let (verts, sample): (Vec<PlanePoint>, KiteSampler) = match surface {
        Surface::Torus(spec) => {
            let o = p.rep;
            let u = spec.u();
            let v = spec.v();
            let verts = vec![o, o + u, o + v, o + u + v];
            (
                verts,
                Box::new(move |rng| o + u * rng.gen::<f64>() + v * rng.gen::<f64>()),
            )
        }
        Surface::Klein(spec) => {
            let canon = crate::canonicalize::klein_canonicalize(*spec, p);
            let xi = canon.xi;
            let p0 = PlanePoint::new(0.0, -xi);
            let hp = PlanePoint::new(a, xi);
            let hm = PlanePoint::new(-a, xi);
            let v = PlanePoint::new(0.0, b - xi);
            let verts = vec![p0, hp, hm, v];
            // Uniform over the kite: pick one of the two triangles by
            // area, then the standard square-root map inside it. Both the
            // kite and the orbit below live in the canonical frame.
            let area_low = 2.0 * a * xi;
            let area_high = a * (b - 2.0 * xi);
            let sample = move |rng: &mut ChaCha8Rng| {
                let (ta, tb, tc) = if rng.gen::<f64>() * (area_low + area_high) < area_low {
                    (p0, hm, hp)
                } else {
                    (hm, hp, v)
                };
                let r1 = rng.gen::<f64>().sqrt();
                let r2 = rng.gen::<f64>();
                ta + (tb - ta) * r1 + (tc - tb) * (r1 * r2)
            };
            (verts, Box::new(sample))
        }
    };

    // All orbit points within the prescribed radius of the tile. For the
    // Klein bottle both the kite and the orbit live in the canonical frame.
    let centroid = verts.iter().fold(PlanePoint::default(), |acc, v| acc + *v) * 0.25;
    let base = match surface {
        Surface::Torus(_) => *p,
        Surface::Klein(spec) => {
            let canon = crate::canonicalize::klein_canonicalize(*spec, p);
            surface.wrap(PlanePoint::new(0.0, -canon.xi))
        }
    };
    let radius = 3.0 * (a + b);
    let sites = orbit(surface, &base, centroid, radius)
        .expect("restriction orbit within default cap")
        .points;

    let mut failures = Vec::new();
    let mut sample = sample;
    for _ in 0..n_samples {
        let x = sample(&mut rng);
        let min_tile = verts
            .iter()
            .map(|v| v.dist_sq(x))
            .fold(f64::INFINITY, f64::min)
            .sqrt();
        let min_all = sites
            .iter()
            .map(|(s, _)| s.dist_sq(x))
            .fold(f64::INFINITY, f64::min)
            .sqrt();
        if min_tile > min_all + tol {
            failures.push(x);
        }
    }
    RestrictionReport {
        samples: n_samples,
        failures,
    }
}

//! Command-line front end: surface analysis runs, basis reduction, JSON and
//! SVG emission, and grid-oracle verification.
//!
//! Exit codes: 0 success, 1 verification mismatch (or write failure),
//! 2 usage error, 3 invalid geometry.

pub mod cli;
pub mod report;
pub mod svg;

pub use cli::{Cli, Command, CommonArgs, KleinArgs, Pair, Quad, ReduceArgs, TorusArgs};
pub use report::{Report, VerifyInfo};
pub use svg::{emit_svg, SvgOptions};

use flatsurf::{
    cut_locus, distance, farthest_points, grid_farthest, reduce_basis, CutLocusGraph,
    FarthestReport, OracleFarthest, PlanePoint, Surface, SurfacePoint,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GEOMETRY: i32 = 3;

/// Executes a parsed invocation and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Torus(args) => {
            let alpha = if args.common.degrees {
                args.alpha.to_radians()
            } else {
                args.alpha
            };
            let tol = args
                .common
                .tolerance
                .unwrap_or(flatsurf::surface::PARAM_REL_TOL);
            let spec = match flatsurf::TorusSpec::with_tolerance(args.a, args.b, alpha, tol) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_GEOMETRY;
                }
            };
            run_surface(Surface::Torus(spec), &args.common)
        }
        Command::Klein(args) => {
            let spec = match flatsurf::KleinSpec::new(args.a, args.b) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_GEOMETRY;
                }
            };
            run_surface(Surface::Klein(spec), &args.common)
        }
        Command::Reduce(args) => run_reduce(&args),
    }
}

fn run_surface(surface: Surface, common: &CommonArgs) -> i32 {
    let p = surface.point(common.point.0, common.point.1);
    let far = farthest_points(&surface, &p);
    let graph = cut_locus(&surface, &p);

    let mut verify_info = None;
    if let Some(n) = common.verify {
        if n < 16 {
            eprintln!("error: --verify needs a resolution of at least 16");
            return EXIT_USAGE;
        }
        let oracle = grid_farthest(&surface, &p, (n, n));
        let agrees = oracle_agrees(&far, &oracle);
        verify_info = Some(VerifyInfo {
            resolution: n,
            clusters: oracle.points.len(),
            agrees,
        });
    }

    if let Some(path) = &common.svg {
        let doc = emit_svg(
            &surface,
            &p,
            &SvgOptions {
                tiles: common.tiles,
            },
        );
        if let Err(e) = std::fs::write(path, doc) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return EXIT_VERIFY_MISMATCH;
        }
    }

    if common.json {
        let report = Report::build(&surface, &p, &far, &graph, verify_info);
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
    } else {
        print_human(&surface, &p, &far, &graph, verify_info.as_ref());
    }

    match verify_info {
        Some(v) if !v.agrees => EXIT_VERIFY_MISMATCH,
        _ => EXIT_OK,
    }
}

/// Analytic results and grid clusters agree when counts match, every point
/// pairs up within the grid's location tolerance, and the sampled maximum
/// matches the analytic radius within the same bound.
pub fn oracle_agrees(far: &FarthestReport, oracle: &OracleFarthest) -> bool {
    if oracle.points.len() != far.points.len() {
        return false;
    }
    let bound = oracle.resolution_bound;
    if (far.radius - oracle.distance).abs() > bound {
        return false;
    }
    let paired = |x: &SurfacePoint, ys: &[SurfacePoint]| -> bool {
        ys.iter().any(|y| distance(x, y).distance <= bound)
    };
    far.points.iter().all(|f| paired(&f.point, &oracle.points))
        && oracle.points.iter().all(|g| {
            far.points
                .iter()
                .any(|f| distance(g, &f.point).distance <= bound)
        })
}

fn print_human(
    surface: &Surface,
    p: &SurfacePoint,
    far: &FarthestReport,
    graph: &CutLocusGraph,
    verify: Option<&VerifyInfo>,
) {
    match surface {
        Surface::Torus(t) => println!("torus a={} b={} alpha={}", t.a(), t.b(), t.alpha()),
        Surface::Klein(k) => println!("klein bottle a={} b={}", k.a(), k.b()),
    }
    println!("point ({}, {})", p.rep.x, p.rep.y);
    println!("case {}", far.case_label());
    println!("filling radius {}", far.radius);
    println!(
        "farthest points ({}) with {} segments each:",
        far.points.len(),
        far.points[0].n_segments
    );
    for f in &far.points {
        println!(
            "  ({}, {})  distance {}",
            f.point.rep.x, f.point.rep.y, f.distance
        );
    }
    println!(
        "cut locus: {} vertices, {} edges",
        graph.vertices.len(),
        graph.edges.len()
    );
    for v in &graph.vertices {
        println!(
            "  vertex ({}, {})  degree {}  distance {}",
            v.point.rep.x, v.point.rep.y, v.degree, v.distance
        );
    }
    for e in &graph.edges {
        println!("  edge {} - {}  length {}", e.from, e.to, e.length);
    }
    if let Some(v) = verify {
        println!(
            "verify: {} clusters at {}x{} resolution, {}",
            v.clusters,
            v.resolution,
            v.resolution,
            if v.agrees {
                "matches analytic"
            } else {
                "MISMATCH"
            }
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn verify_disagreement_detected() {
        let s = Surface::Torus(flatsurf::TorusSpec::new(1.0, 1.0, FRAC_PI_2).unwrap());
        let p = s.point(0.0, 0.0);
        let far = farthest_points(&s, &p);
        let oracle = grid_farthest(&s, &p, (32, 32));
        assert!(oracle_agrees(&far, &oracle));

        let mut extra_cluster = oracle.clone();
        extra_cluster.points.push(s.point(0.1, 0.1));
        assert!(!oracle_agrees(&far, &extra_cluster));

        let mut off_distance = oracle.clone();
        off_distance.distance += 10.0 * off_distance.resolution_bound;
        assert!(!oracle_agrees(&far, &off_distance));

        let mut displaced = oracle;
        displaced.points[0] = s.point(0.1, 0.1);
        assert!(!oracle_agrees(&far, &displaced));
    }
}

fn run_reduce(args: &ReduceArgs) -> i32 {
    let u = PlanePoint::new(args.basis.0, args.basis.1);
    let v = PlanePoint::new(args.basis.2, args.basis.3);
    let result = match reduce_basis(u, v) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_GEOMETRY;
        }
    };
    if args.json {
        let doc = serde_json::json!({
            "schema": 1,
            "surface": {
                "type": "torus",
                "a": result.spec.a(),
                "b": result.spec.b(),
                "alpha": result.spec.alpha(),
            },
            "change_of_basis": result.change_of_basis,
            "sign_flips": [result.sign_flips.0, result.sign_flips.1],
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("serializes")
        );
    } else {
        println!(
            "canonical torus a={} b={} alpha={}",
            result.spec.a(),
            result.spec.b(),
            result.spec.alpha()
        );
        println!(
            "change of basis [[{}, {}], [{}, {}]]  sign flips ({}, {})",
            result.change_of_basis[0][0],
            result.change_of_basis[0][1],
            result.change_of_basis[1][0],
            result.change_of_basis[1][1],
            result.sign_flips.0,
            result.sign_flips.1
        );
    }
    EXIT_OK
}

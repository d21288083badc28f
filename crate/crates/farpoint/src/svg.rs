//! SVG rendering of the tiling, the Voronoi diagram of the preimage of the
//! base point, and the farthest-point markers.
//!
//! Tori are drawn around the base point's lift; Klein bottles are drawn in
//! the canonical frame where the base point lifts to `(0, -xi)`, with the
//! two glide cosets of the preimage as black and gray dots and the main
//! geodesics dotted. Output is deterministic: identical inputs give
//! byte-identical documents.

use flatsurf::{
    klein_canonicalize, klein_cut_data, torus_cut_data, DeckElement, KleinCase, PlanePoint,
    Surface, SurfacePoint,
};
use std::fmt::Write as _;

#[derive(Clone, Copy, Debug)]
pub struct SvgOptions {
    /// Side of the centered tile block; 0 draws the domain outline only.
    pub tiles: u32,
}

impl Default for SvgOptions {
    fn default() -> Self {
        Self { tiles: 3 }
    }
}

struct Canvas {
    body: String,
    min: PlanePoint,
    max: PlanePoint,
    unit: f64,
}

impl Canvas {
    fn new(unit: f64) -> Self {
        Self {
            body: String::new(),
            min: PlanePoint {
                x: f64::INFINITY,
                y: f64::INFINITY,
            },
            max: PlanePoint {
                x: f64::NEG_INFINITY,
                y: f64::NEG_INFINITY,
            },
            unit,
        }
    }

    fn cover(&mut self, p: PlanePoint) {
        self.min = PlanePoint {
            x: self.min.x.min(p.x),
            y: self.min.y.min(p.y),
        };
        self.max = PlanePoint {
            x: self.max.x.max(p.x),
            y: self.max.y.max(p.y),
        };
    }

    fn open_group(&mut self, attrs: &str) {
        let _ = writeln!(self.body, "<g {attrs}>");
    }

    fn close_group(&mut self) {
        self.body.push_str("</g>\n");
    }

    // The plane is y-up; SVG is y-down. Flip at emission time.
    fn line(&mut self, a: PlanePoint, b: PlanePoint) {
        self.cover(a);
        self.cover(b);
        let _ = writeln!(
            self.body,
            r#"<line x1="{:.6}" y1="{:.6}" x2="{:.6}" y2="{:.6}"/>"#,
            a.x, -a.y, b.x, -b.y
        );
    }

    fn dashed_line(&mut self, a: PlanePoint, b: PlanePoint) {
        self.cover(a);
        self.cover(b);
        let dash = 0.03 * self.unit;
        let _ = writeln!(
            self.body,
            r#"<line x1="{:.6}" y1="{:.6}" x2="{:.6}" y2="{:.6}" stroke-dasharray="{:.6} {:.6}"/>"#,
            a.x, -a.y, b.x, -b.y, dash, dash
        );
    }

    fn circle(&mut self, c: PlanePoint, r: f64) {
        self.cover(c);
        let _ = writeln!(
            self.body,
            r#"<circle cx="{:.6}" cy="{:.6}" r="{:.6}"/>"#,
            c.x, -c.y, r
        );
    }

    fn polygon(&mut self, pts: &[PlanePoint]) {
        let mut coords = String::new();
        for p in pts {
            self.cover(*p);
            let _ = write!(coords, "{:.6},{:.6} ", p.x, -p.y);
        }
        let _ = writeln!(self.body, r#"<polygon points="{}"/>"#, coords.trim_end());
    }

    fn finish(self) -> String {
        let margin = 0.08 * self.unit;
        let min_x = self.min.x - margin;
        let min_y = -self.max.y - margin;
        let w = self.max.x - self.min.x + 2.0 * margin;
        let h = self.max.y - self.min.y + 2.0 * margin;
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.6} {:.6} {:.6} {:.6}\">\n{}</svg>\n",
            min_x, min_y, w, h, self.body
        )
    }
}

/// Renders the figure for `p` on `surface` as an SVG document.
pub fn emit_svg(surface: &Surface, p: &SurfacePoint, opts: &SvgOptions) -> String {
    let (a, b) = surface.dims();
    let unit = a.max(b);
    let mut canvas = Canvas::new(unit);
    let thin = 0.006 * unit;
    let thick = 0.014 * unit;
    let site_r = 0.022 * unit;
    let far_r = 0.04 * unit;

    match surface {
        Surface::Torus(spec) => {
            let rep = p.rep;
            let u = spec.u();
            let v = spec.v();
            let outline = [rep, rep + u, rep + u + v, rep + v];
            if opts.tiles == 0 {
                draw_outline(&mut canvas, &outline, thick);
                return canvas.finish();
            }
            let half = (opts.tiles / 2) as i64;
            let data = torus_cut_data(*spec, p);
            let c1 = data.c1 - rep;
            let c2 = data.c2 - rep;
            let far = flatsurf::farthest_points(surface, p);

            canvas.open_group(&format!(
                r##"stroke="#000000" stroke-width="{thin:.6}" fill="none""##
            ));
            for m in -half..=half {
                for n in -half..=half {
                    let s = rep + u * m as f64 + v * n as f64;
                    canvas.line(s, s + u);
                    canvas.line(s, s + v);
                    if m == half {
                        canvas.line(s + u, s + u + v);
                    }
                    if n == half {
                        canvas.line(s + v, s + u + v);
                    }
                }
            }
            canvas.close_group();

            canvas.open_group(&format!(
                r##"stroke="#999999" stroke-width="{thin:.6}" fill="none""##
            ));
            for m in -half..=half {
                for n in -half..=half {
                    let s = rep + u * m as f64 + v * n as f64;
                    if data.degenerate {
                        // Rectangular cells: vertical and horizontal grid
                        // lines through the cell center.
                        let c = (u + v) * 0.5;
                        canvas.line(
                            s + PlanePoint::new(c.x, c.y - b / 2.0),
                            s + PlanePoint::new(c.x, c.y + b / 2.0),
                        );
                        canvas.line(
                            s + PlanePoint::new(c.x - a / 2.0, c.y),
                            s + PlanePoint::new(c.x + a / 2.0, c.y),
                        );
                    } else {
                        canvas.line(s + c1, s + c2 - u);
                        canvas.line(s + c2 - u, s + c1 - u);
                        canvas.line(s + c1 - u, s - c1);
                    }
                }
            }
            canvas.close_group();

            draw_outline(&mut canvas, &outline, thick);

            canvas.open_group(r##"fill="#000000""##);
            for m in -half..=half {
                for n in -half..=half {
                    canvas.circle(rep + u * m as f64 + v * n as f64, site_r);
                }
            }
            canvas.close_group();

            canvas.open_group(&format!(
                r##"stroke="#cc0000" stroke-width="{thin:.6}" fill="none""##
            ));
            for m in -half..=half {
                for n in -half..=half {
                    let s = rep + u * m as f64 + v * n as f64;
                    for fpt in &far.points {
                        canvas.circle(s + fpt.canonical, far_r);
                    }
                }
            }
            canvas.close_group();
        }
        Surface::Klein(spec) => {
            let canon = klein_canonicalize(*spec, p);
            let data = klein_cut_data(*spec, canon.lambda).expect("lambda in range");
            let xi = canon.xi;
            let p0 = PlanePoint::new(0.0, -xi);
            let on_geodesic = matches!(data.case, KleinCase::LambdaZero);
            let outline: Vec<PlanePoint> = if on_geodesic {
                vec![
                    PlanePoint::new(-a / 2.0, -b / 2.0),
                    PlanePoint::new(a / 2.0, -b / 2.0),
                    PlanePoint::new(a / 2.0, b / 2.0),
                    PlanePoint::new(-a / 2.0, b / 2.0),
                ]
            } else {
                data.kite().to_vec()
            };
            if opts.tiles == 0 {
                draw_outline(&mut canvas, &outline, thick);
                return canvas.finish();
            }
            let half = (opts.tiles / 2) as i64;
            let decks: Vec<DeckElement> = (-half..=half)
                .flat_map(|k| (-half..=half).map(move |n| DeckElement::new(k, n)))
                .collect();

            // Kite tiling: edges from each even-coset site to its four
            // odd-coset neighbors. On a main geodesic the kites flatten to
            // the rectangle grid of the full preimage lattice.
            canvas.open_group(&format!(
                r##"stroke="#000000" stroke-width="{thin:.6}" fill="none""##
            ));
            for g in &decks {
                let s = surface.deck_apply(*g, p0);
                if on_geodesic {
                    canvas.line(s, s + PlanePoint::new(a, 0.0));
                    canvas.line(s, s + PlanePoint::new(0.0, b));
                } else if g.k.rem_euclid(2) == 0 {
                    for (dx, dy) in [
                        (a, 2.0 * xi),
                        (-a, 2.0 * xi),
                        (a, 2.0 * xi - b),
                        (-a, 2.0 * xi - b),
                    ] {
                        canvas.line(s, s + PlanePoint::new(dx, dy));
                    }
                }
            }
            canvas.close_group();

            // Voronoi diagram: one kite's worth of edges mapped around by
            // the deck group.
            let m1 = PlanePoint::new(a / 2.0, 0.0);
            let m1m = PlanePoint::new(-a / 2.0, 0.0);
            let m2 = PlanePoint::new(a / 2.0, b / 2.0);
            let m2m = PlanePoint::new(-a / 2.0, b / 2.0);
            let segments: Vec<(PlanePoint, PlanePoint)> = match data.case {
                KleinCase::LambdaZero => vec![(PlanePoint::new(a / 2.0, -b / 2.0), m2), (m2m, m2)],
                KleinCase::DeltaPositive => vec![
                    (data.c_minus, data.c_plus),
                    (data.c_plus, m1),
                    (data.c_plus, m2),
                    (data.c_minus, m1m),
                    (data.c_minus, m2m),
                ],
                KleinCase::DeltaZero => {
                    let c = PlanePoint::new(0.0, b * (1.0 - data.lambda) / 2.0);
                    vec![(c, m1), (c, m2), (c, m1m), (c, m2m)]
                }
                KleinCase::DeltaNegativeInterior | KleinCase::DeltaNegativeHalf => {
                    let c0 = data.c0.expect("c0 defined off the main geodesics");
                    vec![
                        (c0, data.c1),
                        (c0, m1),
                        (c0, m1m),
                        (data.c1, m2),
                        (data.c1, m2m),
                    ]
                }
            };
            canvas.open_group(&format!(
                r##"stroke="#999999" stroke-width="{thin:.6}" fill="none""##
            ));
            for g in &decks {
                for (s0, s1) in &segments {
                    canvas.line(surface.deck_apply(*g, *s0), surface.deck_apply(*g, *s1));
                }
            }
            canvas.close_group();

            // Main geodesics, dotted.
            canvas.open_group(&format!(
                r##"stroke="#555555" stroke-width="{thin:.6}" fill="none""##
            ));
            let x_lo = -(half as f64 + 1.0) * a;
            let x_hi = (half as f64 + 1.0) * a;
            for level in (-2 * half - 2)..=(2 * half + 2) {
                let y = level as f64 * b / 2.0;
                canvas.dashed_line(PlanePoint::new(x_lo, y), PlanePoint::new(x_hi, y));
            }
            canvas.close_group();

            draw_outline(&mut canvas, &outline, thick);

            // Preimage sites, one color per glide coset.
            canvas.open_group(r##"fill="#000000""##);
            for g in decks.iter().filter(|g| g.k.rem_euclid(2) == 0) {
                canvas.circle(surface.deck_apply(*g, p0), site_r);
            }
            canvas.close_group();
            canvas.open_group(r##"fill="#888888""##);
            for g in decks.iter().filter(|g| g.k.rem_euclid(2) != 0) {
                canvas.circle(surface.deck_apply(*g, p0), site_r);
            }
            canvas.close_group();

            let far = flatsurf::farthest_points(surface, p);
            canvas.open_group(&format!(
                r##"stroke="#cc0000" stroke-width="{thin:.6}" fill="none""##
            ));
            for g in &decks {
                for fpt in &far.points {
                    canvas.circle(surface.deck_apply(*g, fpt.canonical), far_r);
                }
            }
            canvas.close_group();
        }
    }
    canvas.finish()
}

fn draw_outline(canvas: &mut Canvas, pts: &[PlanePoint], width: f64) {
    canvas.open_group(&format!(
        r##"stroke="#1a4fa0" stroke-width="{width:.6}" fill="none""##
    ));
    canvas.polygon(pts);
    canvas.close_group();
}

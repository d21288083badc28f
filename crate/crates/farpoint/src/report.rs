//! The stable JSON report (schema 1).
//!
//! Top-level keys: `surface{type,a,b,alpha?}`, `point{x,y}`, `case`,
//! `radius`, `farthest[{x,y,segments,distance}]`,
//! `cut_locus{vertices[{x,y,degree,distance}], edges[{from,to,length}]}`,
//! and optionally `verify{resolution,clusters,agrees}`. Numbers round-trip
//! bit-exactly through the serializer.

use flatsurf::{CutLocusGraph, FarthestReport, Surface, SurfacePoint};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct Report {
    pub schema: u32,
    pub surface: SurfaceInfo,
    pub point: Coords,
    pub case: String,
    pub radius: f64,
    pub farthest: Vec<FarthestEntry>,
    pub cut_locus: CutLocusInfo,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verify: Option<VerifyInfo>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct SurfaceInfo {
    #[serde(rename = "type")]
    pub kind: String,
    pub a: f64,
    pub b: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
}

#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq)]
pub struct Coords {
    pub x: f64,
    pub y: f64,
}

#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq)]
pub struct FarthestEntry {
    pub x: f64,
    pub y: f64,
    pub segments: usize,
    pub distance: f64,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct CutLocusInfo {
    pub vertices: Vec<VertexEntry>,
    pub edges: Vec<EdgeEntry>,
}

#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq)]
pub struct VertexEntry {
    pub x: f64,
    pub y: f64,
    pub degree: usize,
    pub distance: f64,
}

#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq)]
pub struct EdgeEntry {
    pub from: usize,
    pub to: usize,
    pub length: f64,
}

#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq)]
pub struct VerifyInfo {
    pub resolution: usize,
    pub clusters: usize,
    pub agrees: bool,
}

impl Report {
    pub fn build(
        surface: &Surface,
        p: &SurfacePoint,
        far: &FarthestReport,
        graph: &CutLocusGraph,
        verify: Option<VerifyInfo>,
    ) -> Self {
        let surface_info = match surface {
            Surface::Torus(t) => SurfaceInfo {
                kind: "torus".into(),
                a: t.a(),
                b: t.b(),
                alpha: Some(t.alpha()),
            },
            Surface::Klein(k) => SurfaceInfo {
                kind: "klein".into(),
                a: k.a(),
                b: k.b(),
                alpha: None,
            },
        };
        Report {
            schema: 1,
            surface: surface_info,
            point: Coords {
                x: p.rep.x,
                y: p.rep.y,
            },
            case: far.case_label().to_string(),
            radius: far.radius,
            farthest: far
                .points
                .iter()
                .map(|f| FarthestEntry {
                    x: f.point.rep.x,
                    y: f.point.rep.y,
                    segments: f.n_segments,
                    distance: f.distance,
                })
                .collect(),
            cut_locus: CutLocusInfo {
                vertices: graph
                    .vertices
                    .iter()
                    .map(|v| VertexEntry {
                        x: v.point.rep.x,
                        y: v.point.rep.y,
                        degree: v.degree,
                        distance: v.distance,
                    })
                    .collect(),
                edges: graph
                    .edges
                    .iter()
                    .map(|e| EdgeEntry {
                        from: e.from,
                        to: e.to,
                        length: e.length,
                    })
                    .collect(),
            },
            verify,
        }
    }
}

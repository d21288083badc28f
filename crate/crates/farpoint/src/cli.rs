//! Argument parsing.

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(
    name = "farpoint",
    version,
    about = "Cut loci and farthest-point sets on flat tori and flat Klein bottles"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Analyze a flat torus with sides a, b and angle alpha
    Torus(TorusArgs),
    /// Analyze a flat Klein bottle with horizontal period a and vertical period b
    Klein(KleinArgs),
    /// Reduce a plane lattice basis to canonical torus parameters
    Reduce(ReduceArgs),
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
pub struct TorusArgs {
    /// First side length
    #[arg(long)]
    pub a: f64,
    /// Second side length
    #[arg(long)]
    pub b: f64,
    /// Angle between the sides, in radians unless --degrees is given
    #[arg(long)]
    pub alpha: f64,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
pub struct KleinArgs {
    /// Horizontal period of the main geodesics
    #[arg(long)]
    pub a: f64,
    /// Vertical period
    #[arg(long)]
    pub b: f64,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug)]
pub struct CommonArgs {
    /// Base point as plane coordinates x,y; wrapped onto the surface
    #[arg(long, value_parser = parse_pair, default_value = "0,0", allow_hyphen_values = true)]
    pub point: Pair,
    /// Print the JSON report on standard output
    #[arg(long)]
    pub json: bool,
    /// Write an SVG figure of the tiling and Voronoi diagram to this path
    #[arg(long, value_name = "PATH")]
    pub svg: Option<PathBuf>,
    /// Cross-check against the grid oracle at resolution N x N;
    /// exits with status 1 on disagreement
    #[arg(long, value_name = "N")]
    pub verify: Option<usize>,
    /// Side of the tile block drawn in SVG output (0 = domain outline only)
    #[arg(long, default_value_t = 3)]
    pub tiles: u32,
    /// Relative tolerance override for parameter validation
    #[arg(long, value_name = "T")]
    pub tolerance: Option<f64>,
    /// Interpret --alpha in degrees
    #[arg(long)]
    pub degrees: bool,
}

#[derive(Args, Debug)]
#[command(allow_negative_numbers = true)]
pub struct ReduceArgs {
    /// Basis vectors as ux,uy,vx,vy
    #[arg(long, value_parser = parse_quad, allow_hyphen_values = true)]
    pub basis: Quad,
    /// Print the JSON report on standard output
    #[arg(long)]
    pub json: bool,
}

/// A comma-separated coordinate pair.
#[derive(Clone, Copy, Debug)]
pub struct Pair(pub f64, pub f64);

/// A comma-separated quadruple (two basis vectors).
#[derive(Clone, Copy, Debug)]
pub struct Quad(pub f64, pub f64, pub f64, pub f64);

fn parse_components(s: &str, n: usize) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != n {
        return Err(format!("expected {n} comma-separated numbers, got {s:?}"));
    }
    parts
        .iter()
        .map(|p| {
            p.trim()
                .parse::<f64>()
                .map_err(|e| format!("bad number {p:?}: {e}"))
        })
        .collect()
}

fn parse_pair(s: &str) -> Result<Pair, String> {
    let v = parse_components(s, 2)?;
    Ok(Pair(v[0], v[1]))
}

fn parse_quad(s: &str) -> Result<Quad, String> {
    let v = parse_components(s, 4)?;
    Ok(Quad(v[0], v[1], v[2], v[3]))
}

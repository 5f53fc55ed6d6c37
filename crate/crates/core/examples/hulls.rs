//! Convex sets, hulls and the convex-geometry test for the six standard
//! convexities on a few small graphs.
//!
//!     cargo run --example hulls

use induced_convexity::convexity::{Alignment, ConvexityKind, GeometryVerdict};
use induced_convexity::patterns::family;
use induced_convexity::{Graph, Result, VertexSet};

fn main() -> Result<()> {
    let graphs = [
        ("P5", Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)])?),
        ("C5", Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])?),
        ("house", family("house").unwrap().member(0)),
        ("3-fan", family("3-fan").unwrap().member(0)),
    ];
    let seed: VertexSet = [0, 2].into_iter().collect();
    for (name, g) in &graphs {
        println!("{name}");
        for kind in ConvexityKind::STANDARD {
            let a = Alignment::new(g, kind)?;
            let verdict = match a.geometry()? {
                GeometryVerdict::Geometry => "convex geometry".to_string(),
                GeometryVerdict::Counterexample { set, extreme, hull } => {
                    format!("not a geometry: ex({set}) = {extreme}, hull = {hull}")
                }
            };
            println!(
                "  {kind:<6} hull({seed}) = {:<12} convex sets: {:>3}  {verdict}",
                a.hull(seed).to_string(),
                a.convex_sets()?.len(),
            );
        }
    }
    Ok(())
}

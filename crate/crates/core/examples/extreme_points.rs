//! Extreme points of convex sets compared with the local vertex classes:
//! simplicial (g, m), semisimplicial (m3) and 3SS (gk:3).
//!
//!     cargo run --example extreme_points

use induced_convexity::convexity::{
    semisimplicial_vertices, simplicial_vertices, three_ss_vertices, Alignment, ConvexityKind,
};
use induced_convexity::{Graph, Result};

fn main() -> Result<()> {
    let graphs = [
        ("P3", Graph::from_edges(3, &[(0, 1), (1, 2)])?),
        ("P4", Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)])?),
        ("paw", Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)])?),
        ("claw", Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)])?),
        ("diamond", Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)])?),
    ];
    for (name, g) in &graphs {
        let v = g.vertices();
        println!(
            "{name}: simplicial {}  semisimplicial {}  3SS {}",
            simplicial_vertices(g, v),
            semisimplicial_vertices(g, v),
            three_ss_vertices(g, v)
        );
        for kind in [
            ConvexityKind::Geodesic,
            ConvexityKind::Monophonic,
            ConvexityKind::M3Path,
            ConvexityKind::SteinerK(3),
        ] {
            let a = Alignment::new(g, kind)?;
            let ex = a.extreme_points(v)?;
            println!("  {kind:<5} ex(V) = {:<10} hull(ex(V)) = {}", ex.to_string(), a.hull(ex));
        }
    }
    Ok(())
}

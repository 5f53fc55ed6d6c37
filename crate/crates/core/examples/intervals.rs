//! Interval operators on the A-graph: a square u1-u2-u3-u4 with pendant
//! vertices a at u1 and b at u4.
//!
//!     cargo run --example intervals

use induced_convexity::intervals::{
    geodesic_interval, induced_paths, m3_interval_pair, m3_lower_interval,
    monophonic_interval_pair, monophonic_interval_set, steiner_interval,
};
use induced_convexity::patterns::{a_graph, family};
use induced_convexity::{Result, VertexSet};

fn main() -> Result<()> {
    let g = a_graph();
    let a = family("A").expect("A is in the catalog");
    let role = |r: &str| a.role(r).unwrap();
    let (va, vb) = (role("a"), role("b"));
    println!("A-graph edges: {:?}", g.edges().collect::<Vec<_>>());

    println!("induced a-b paths:");
    for p in induced_paths(&g, va, vb, 0)? {
        println!("  {p:?}");
    }
    println!("I_g[a,b]   = {}", geodesic_interval(&g, va, vb)?);
    println!("I_m[a,b]   = {}", monophonic_interval_pair(&g, va, vb)?);
    println!("I_m3[a,b]  = {}", m3_interval_pair(&g, va, vb)?);
    println!("I_m3[u1,u4]= {}", m3_interval_pair(&g, role("u1"), role("u4"))?);

    let terminals: VertexSet = [va, vb, role("u3")].into_iter().collect();
    println!("I_m({terminals})  = {}", monophonic_interval_set(&g, terminals)?);
    println!("Steiner({terminals}) = {}", steiner_interval(&g, terminals)?);
    println!("I_m_3(V)   = {}", m3_lower_interval(&g, g.vertices())?);
    Ok(())
}

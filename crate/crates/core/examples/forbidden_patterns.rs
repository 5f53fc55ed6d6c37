//! The forbidden-pattern catalog: freeness tests with witnesses, induced
//! embeddings, and the catalog self-check.
//!
//!     cargo run --example forbidden_patterns

use induced_convexity::consistency::consistency_check;
use induced_convexity::patterns::{
    a_graph, catalog, chordless_cycles, forbidden_list, induced_embeddings, is_free,
};
use induced_convexity::{write_graph6, Graph, Result};

fn main() -> Result<()> {
    for fam in catalog() {
        let forms: Vec<String> = fam.members().iter().map(write_graph6).collect();
        println!("{:<7} {} vertices, members {:?}", fam.name, fam.order(), forms);
    }

    // The A-graph with an extra vertex joined to u2 and u3 creates a house.
    let mut edges: Vec<_> = a_graph().edges().collect();
    edges.extend([(6, 3), (6, 4)]);
    let g = Graph::from_edges(7, &edges)?;
    let hhd = forbidden_list(&["house", "hole", "domino"]);
    match is_free(&g, &hhd) {
        Ok(()) => println!("HHD-free"),
        Err(w) => println!("contains {} on {:?}", w.pattern, w.vertices),
    }
    println!("A embeddings: {:?}", induced_embeddings(&g, &a_graph()));
    println!("chordless cycles: {:?}", chordless_cycles(&g, 4));

    let report = consistency_check();
    println!(
        "catalog self-check: {} entries, {} failed",
        report.entries.len(),
        report.failures().count()
    );
    Ok(())
}

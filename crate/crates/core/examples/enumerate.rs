//! graph6 round trips, canonical forms and small-graph enumeration.
//!
//!     cargo run --release --example enumerate -- 7

use induced_convexity::enumerate::{enumerate_graphs, isomorphism_classes};
use induced_convexity::{canonical_form, parse_graph6, write_graph6, Result};

fn main() -> Result<()> {
    let max_n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);

    let p4 = parse_graph6("Ch")?;
    let relabeled = p4.relabel(&[2, 0, 3, 1]);
    println!(
        "P4 = {}, relabeled = {}, same canonical form: {}",
        write_graph6(&p4),
        write_graph6(&relabeled),
        canonical_form(&p4)? == canonical_form(&relabeled)?
    );

    println!("{:>2} {:>8} {:>10}", "n", "graphs", "connected");
    for n in 1..=max_n {
        let all = isomorphism_classes(n)?.len();
        let connected = enumerate_graphs(n, true, true)?.len();
        println!("{n:>2} {all:>8} {connected:>10}");
    }
    Ok(())
}

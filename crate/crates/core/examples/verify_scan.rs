//! Runs every verification check over the connected graphs on up to `n`
//! vertices and prints the tallies; pass a path to also write the JSON report.
//!
//!     cargo run --release --example verify_scan -- 7 report.json

use induced_convexity::harness::{run_corpus, Check, Corpus};
use induced_convexity::Result;

fn main() -> Result<()> {
    let mut args = std::env::args().skip(1);
    let max_n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(6);
    let out = args.next();

    let corpus = Corpus::enumerated(1..=max_n, true, true)?;
    let jobs = std::thread::available_parallelism().map_or(1, |p| p.get());
    let report = run_corpus(&corpus, &Check::ALL, jobs)?;
    println!("{} graphs in {:.2?}", report.results.len(), report.elapsed);
    for (name, t) in &report.summary {
        println!("{name:<10} pass={:<6} fail={:<3} skipped={}", t.pass, t.fail, t.skipped);
    }
    if let Some(path) = out {
        std::fs::write(&path, report.to_json())?;
        println!("wrote {path}");
    }
    Ok(())
}

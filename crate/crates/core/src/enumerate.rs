//! Small-graph corpora: every labelled graph, or one canonical
//! representative per isomorphism class.

use std::collections::BTreeSet;
use std::ops::Range;

use rayon::prelude::*;

use crate::canon::{canonical_graph, CANONICAL_MAX_ORDER};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::write_graph6;

/// Default order caps for [`enumerate_graphs`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationCaps {
    pub dedup: usize,
    pub labeled: usize,
}

impl Default for EnumerationCaps {
    fn default() -> Self {
        EnumerationCaps {
            dedup: CANONICAL_MAX_ORDER,
            labeled: 7,
        }
    }
}

fn vertex_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Number of labelled graphs on `n` vertices, i.e. `2^(n(n-1)/2)`.
pub fn labeled_graph_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// The labelled graph on `n` vertices whose edge set is given by the bits of
/// `mask` over pairs in graph6 column order.
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    let mut g = Graph::empty(n).expect("order checked by caller");
    for (k, (i, j)) in vertex_pairs(n).into_iter().enumerate() {
        if mask >> k & 1 == 1 {
            g.add_edge_unchecked(i, j);
        }
    }
    g
}

/// Labelled graphs with edge masks in `range`; disjoint ranges partition the
/// corpus for parallel consumers.
pub fn labeled_graphs(n: usize, range: Range<u64>) -> impl Iterator<Item = Graph> {
    range.map(move |mask| labeled_graph(n, mask))
}

/// Canonical representatives of all graphs on `n` vertices, sorted by graph6.
///
/// Built by vertex augmentation: every graph on `n` vertices is a graph on
/// `n - 1` vertices plus one vertex joined to some subset.
pub fn isomorphism_classes(n: usize) -> Result<Vec<Graph>> {
    if n > CANONICAL_MAX_ORDER {
        return Err(Error::Capacity {
            what: "isomorphism class enumeration",
            n,
            cap: CANONICAL_MAX_ORDER,
        });
    }
    let mut level = vec![Graph::empty(0)?];
    for order in 1..=n {
        let found: BTreeSet<(String, Vec<u64>)> = level
            .par_iter()
            .flat_map_iter(|base| {
                (0u64..1 << (order - 1)).map(move |nbrs| {
                    let mut adj: Vec<u64> = (0..base.order())
                        .map(|v| base.neighbors(v).bits() | (nbrs >> v & 1) << (order - 1))
                        .collect();
                    adj.push(nbrs);
                    let c = canonical_graph(&Graph::from_adjacency(adj))
                        .expect("order within canonical cap");
                    let key = write_graph6(&c);
                    (key, (0..order).map(|v| c.neighbors(v).bits()).collect())
                })
            })
            .collect();
        level = found
            .into_iter()
            .map(|(_, adj)| Graph::from_adjacency(adj))
            .collect();
    }
    Ok(level)
}

/// Every graph on `n` vertices: all labelled graphs, or one canonical
/// representative per class when `dedup` is set.
pub fn enumerate_graphs(n: usize, connected_only: bool, dedup: bool) -> Result<Vec<Graph>> {
    enumerate_graphs_with(n, connected_only, dedup, EnumerationCaps::default())
}

pub fn enumerate_graphs_with(
    n: usize,
    connected_only: bool,
    dedup: bool,
    caps: EnumerationCaps,
) -> Result<Vec<Graph>> {
    if dedup {
        if n > caps.dedup {
            return Err(Error::Capacity {
                what: "deduplicated enumeration",
                n,
                cap: caps.dedup,
            });
        }
        let mut all = isomorphism_classes(n)?;
        if connected_only {
            all.retain(Graph::is_connected);
        }
        Ok(all)
    } else {
        if n > caps.labeled {
            return Err(Error::Capacity {
                what: "labelled enumeration",
                n,
                cap: caps.labeled,
            });
        }
        Ok(labeled_graphs(n, 0..labeled_graph_count(n))
            .filter(|g| !connected_only || g.is_connected())
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;

    #[test]
    fn connected_class_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| enumerate_graphs(n, true, true).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn all_class_counts() {
        let counts: Vec<usize> = (0..=6)
            .map(|n| isomorphism_classes(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn dedup_matches_labelled_oracle() {
        for n in 1..=5 {
            for connected in [false, true] {
                let oracle: BTreeSet<Vec<u8>> = enumerate_graphs(n, connected, false)
                    .unwrap()
                    .iter()
                    .map(|g| canonical_form(g).unwrap())
                    .collect();
                let classes: Vec<Vec<u8>> = enumerate_graphs(n, connected, true)
                    .unwrap()
                    .iter()
                    .map(|g| canonical_form(g).unwrap())
                    .collect();
                let distinct: BTreeSet<_> = classes.iter().cloned().collect();
                assert_eq!(distinct.len(), classes.len(), "duplicate class at n={n}");
                assert_eq!(distinct, oracle, "n={n} connected={connected}");
            }
        }
    }

    #[test]
    fn labelled_counts_and_ranges() {
        assert_eq!(enumerate_graphs(4, false, false).unwrap().len(), 64);
        assert_eq!(enumerate_graphs(4, true, false).unwrap().len(), 38);
        let split: usize = [0..20, 20..64]
            .into_iter()
            .map(|r| labeled_graphs(4, r).count())
            .sum();
        assert_eq!(split, 64);
    }

    #[test]
    fn caps_are_enforced() {
        assert!(matches!(
            enumerate_graphs(9, true, true),
            Err(Error::Capacity { cap: 8, .. })
        ));
        assert!(matches!(
            enumerate_graphs(8, true, false),
            Err(Error::Capacity { cap: 7, .. })
        ));
    }
}

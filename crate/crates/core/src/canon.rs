//! Canonical labelling by pruned permutation search.
//!
//! Vertices are first split into cells by iterated degree refinement. The
//! canonical order is the one, among all orders that list the cells in
//! refinement order, whose column-major upper-triangle adjacency string is
//! lexicographically largest. Both the cell structure and the maximisation
//! are relabelling invariant, so equal strings mean isomorphic graphs.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6::write_graph6;

/// Largest order accepted by the canonical labeller.
pub const CANONICAL_MAX_ORDER: usize = 8;

fn check_order(g: &Graph) -> Result<()> {
    if g.order() > CANONICAL_MAX_ORDER {
        return Err(Error::Capacity {
            what: "canonical form",
            n: g.order(),
            cap: CANONICAL_MAX_ORDER,
        });
    }
    Ok(())
}

/// Equitable colouring refined from degrees. Colours are dense and ordered
/// by an isomorphism-invariant signature.
pub(crate) fn refined_colors(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut color: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|w| color[w]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<usize>)> = signatures.iter().collect();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = signatures
            .iter()
            .map(|s| distinct.binary_search(&s).unwrap())
            .collect();
        let count = distinct.len();
        color = next;
        if count == classes {
            return color;
        }
        classes = count;
    }
}

struct Search<'a> {
    g: &'a Graph,
    /// Vertex pool per position.
    pools: Vec<VertexSet>,
    order: Vec<usize>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    columns: Vec<u64>,
}

impl Search<'_> {
    fn column(&self, j: usize, v: usize) -> u64 {
        let mut bits = 0u64;
        for &u in &self.order[..j] {
            bits = bits << 1 | self.g.has_edge(u, v) as u64;
        }
        bits
    }

    /// Extends the order at position `j`, pruning prefixes that already
    /// compare below the best complete code.
    fn descend(&mut self, j: usize, used: VertexSet) {
        let n = self.g.order();
        if j == n {
            let better = match &self.best {
                None => true,
                Some((best, _)) => self.columns > *best,
            };
            if better {
                self.best = Some((self.columns.clone(), self.order.clone()));
            }
            return;
        }
        for v in (self.pools[j] - used).iter() {
            let col = self.column(j, v);
            self.columns.push(col);
            let behind = match &self.best {
                Some((best, _)) => self.columns[..] < best[..=j],
                None => false,
            };
            if !behind {
                self.order.push(v);
                self.descend(j + 1, used.with(v));
                self.order.pop();
            }
            self.columns.pop();
        }
    }
}

/// Canonical relabelling as a permutation `old -> new`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    check_order(g)?;
    let n = g.order();
    let color = refined_colors(g);
    let mut by_color: BTreeMap<usize, VertexSet> = BTreeMap::new();
    for (v, &c) in color.iter().enumerate() {
        by_color.entry(c).or_default().insert(v);
    }
    let pools: Vec<VertexSet> = by_color
        .values()
        .flat_map(|&cell| std::iter::repeat_n(cell, cell.len()))
        .collect();
    let mut search = Search {
        g,
        pools,
        order: Vec::with_capacity(n),
        best: None,
        columns: Vec::with_capacity(n),
    };
    search.descend(0, VertexSet::EMPTY);
    let (_, order) = search.best.expect("search visits at least one leaf");
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    Ok(perm)
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    Ok(g.relabel(&canonical_labeling(g)?))
}

/// Byte string equal for two graphs iff they are isomorphic (the graph6
/// encoding of the canonical representative).
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    Ok(write_graph6(&canonical_graph(g)?).into_bytes())
}

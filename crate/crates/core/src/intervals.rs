//! Interval operators: geodesic, monophonic and length-at-least-3 induced
//! path intervals between pairs, and the set intervals built from minimal
//! trees and Steiner trees.
//!
//! The set operators enumerate candidate vertex sets `W ⊇ U` rather than
//! tree subgraphs. A tree with vertex set `W` exists exactly when `<W>` is
//! connected, and whether a tree is a minimal `U`-tree depends only on its
//! vertex set, so the two views give the same intervals.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Cap on the graph order for operators that enumerate vertex subsets.
pub const SUBSET_ENUMERATION_CAP: usize = 16;

fn check_subset_cap(g: &Graph, what: &'static str) -> Result<()> {
    if g.order() > SUBSET_ENUMERATION_CAP {
        return Err(Error::Capacity {
            what,
            n: g.order(),
            cap: SUBSET_ENUMERATION_CAP,
        });
    }
    Ok(())
}

fn check_pair(g: &Graph, u: usize, v: usize) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameEndpoints(u));
    }
    Ok(())
}

fn same_component(g: &Graph, terminals: VertexSet) -> bool {
    match terminals.first() {
        None => true,
        Some(v) => terminals.is_subset(g.reach_within(v, g.vertices())),
    }
}

fn no_path(terminals: VertexSet) -> Error {
    Error::NoPath(terminals.to_string())
}

/// Depth-first enumeration of the induced paths between two vertices.
///
/// Each path is yielded once, from `source` to `target`. Extensions are
/// tried in increasing vertex order.
pub struct InducedPaths<'g> {
    g: &'g Graph,
    target: usize,
    min_len: usize,
    path: Vec<usize>,
    /// Per depth: untried extensions and the closed neighbourhood of every
    /// path vertex before the current last one.
    frames: Vec<(VertexSet, VertexSet)>,
}

impl<'g> InducedPaths<'g> {
    fn new(g: &'g Graph, source: usize, target: usize, min_len: usize) -> Self {
        InducedPaths {
            g,
            target,
            min_len,
            path: vec![source],
            frames: vec![(g.neighbors(source), VertexSet::EMPTY)],
        }
    }
}

impl Iterator for InducedPaths<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        loop {
            let depth = self.frames.len();
            let (candidates, covered) = self.frames.last_mut()?;
            let Some(x) = candidates.first() else {
                self.frames.pop();
                self.path.pop();
                continue;
            };
            candidates.remove(x);
            let covered = *covered;
            if x == self.target {
                if depth >= self.min_len {
                    let mut p = self.path.clone();
                    p.push(x);
                    return Some(p);
                }
                continue;
            }
            let last = *self.path.last().expect("path is never empty");
            let covered = covered | self.g.closed_neighbors(last);
            // The target must stay reachable without a chord to an earlier vertex.
            if covered.contains(self.target) {
                continue;
            }
            self.path.push(x);
            self.frames.push((self.g.neighbors(x) - covered, covered));
        }
    }
}

/// Every induced `u`–`v` path with at least `min_len` edges.
pub fn induced_paths(g: &Graph, u: usize, v: usize, min_len: usize) -> Result<InducedPaths<'_>> {
    check_pair(g, u, v)?;
    Ok(InducedPaths::new(g, u, v, min_len))
}

fn path_union(g: &Graph, u: usize, v: usize, min_len: usize) -> VertexSet {
    InducedPaths::new(g, u, v, min_len).fold(VertexSet::EMPTY, |acc, p| {
        acc | p.into_iter().collect::<VertexSet>()
    })
}

/// `I_g[u,v]`: vertices on some shortest `u`–`v` path.
pub fn geodesic_interval(g: &Graph, u: usize, v: usize) -> Result<VertexSet> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let from_u = g.distances_from(u);
    let from_v = g.distances_from(v);
    let Some(d) = from_u[v] else {
        return Err(no_path(VertexSet::singleton(u).with(v)));
    };
    Ok((0..g.order())
        .filter(|&w| matches!((from_u[w], from_v[w]), (Some(a), Some(b)) if a + b == d))
        .collect())
}

/// `I_m[u,v]`: vertices on some induced `u`–`v` path.
pub fn monophonic_interval_pair(g: &Graph, u: usize, v: usize) -> Result<VertexSet> {
    check_pair(g, u, v)?;
    if !same_component(g, VertexSet::singleton(u).with(v)) {
        return Err(no_path(VertexSet::singleton(u).with(v)));
    }
    Ok(path_union(g, u, v, 0))
}

/// `I_{m³}[u,v]`: vertices on some induced `u`–`v` path of length at least 3.
/// Empty when no such path exists.
pub fn m3_interval_pair(g: &Graph, u: usize, v: usize) -> Result<VertexSet> {
    check_pair(g, u, v)?;
    Ok(path_union(g, u, v, 3))
}

/// `I_{m³}(S)`: union of `I_{m³}[x,y]` over distinct `x, y ∈ S`.
pub fn m3_interval_set(g: &Graph, s: VertexSet) -> Result<VertexSet> {
    g.check_set(s)?;
    let mut out = VertexSet::EMPTY;
    for x in s.iter() {
        for y in s.iter().filter(|&y| y > x) {
            out |= path_union(g, x, y, 3);
        }
    }
    Ok(out)
}

/// Whether `w ⊇ terminals` is the vertex set of a minimal `terminals`-tree.
pub fn is_minimal_tree_set(g: &Graph, terminals: VertexSet, w: VertexSet) -> bool {
    if !terminals.is_subset(w) || !g.is_connected_set(w) {
        return false;
    }
    let extra = w - terminals;
    if extra.is_empty() {
        return true;
    }
    // A cut vertex has at least two neighbours inside W.
    if extra.iter().any(|x| (g.neighbors(x) & w).len() < 2) {
        return false;
    }
    extra.is_subset(g.cut_vertices_of(w))
}

/// Vertex sets of all minimal `U`-trees, in increasing bit order.
pub fn minimal_tree_vertex_sets(
    g: &Graph,
    terminals: VertexSet,
) -> Result<impl Iterator<Item = VertexSet> + '_> {
    check_set_query(g, terminals, "minimal tree enumeration")?;
    Ok(minimal_tree_sets_unchecked(g, terminals))
}

fn minimal_tree_sets_unchecked(
    g: &Graph,
    terminals: VertexSet,
) -> impl Iterator<Item = VertexSet> + '_ {
    (g.vertices() - terminals)
        .subsets()
        .map(move |extra| terminals | extra)
        .filter(move |&w| is_minimal_tree_set(g, terminals, w))
}

fn check_set_query(g: &Graph, terminals: VertexSet, what: &'static str) -> Result<()> {
    g.check_set(terminals)?;
    if terminals.len() < 2 {
        return Err(Error::TooFewTerminals {
            min: 2,
            got: terminals.len(),
        });
    }
    check_subset_cap(g, what)
}

/// `I_m(U)`: union of all minimal `U`-trees.
pub fn monophonic_interval_set(g: &Graph, terminals: VertexSet) -> Result<VertexSet> {
    check_set_query(g, terminals, "monophonic set interval")?;
    Ok(monophonic_set_unchecked(g, terminals))
}

pub(crate) fn monophonic_set_unchecked(g: &Graph, terminals: VertexSet) -> VertexSet {
    minimal_tree_sets_unchecked(g, terminals).fold(VertexSet::EMPTY, |a, w| a | w)
}

/// `I_{m₃}(S)`: union of `I_m(U)` over all 3-subsets `U` of `S`.
pub fn m3_lower_interval(g: &Graph, s: VertexSet) -> Result<VertexSet> {
    g.check_set(s)?;
    check_subset_cap(g, "m3 lower interval")?;
    Ok(s.k_subsets(3)
        .fold(VertexSet::EMPTY, |acc, u| acc | monophonic_set_unchecked(g, u)))
}

/// `I(S)`: union of the vertex sets of all Steiner trees for `S`.
pub fn steiner_interval(g: &Graph, s: VertexSet) -> Result<VertexSet> {
    check_set_query(g, s, "Steiner interval")?;
    if !same_component(g, s) {
        return Err(no_path(s));
    }
    Ok(steiner_unchecked(g, s))
}

pub(crate) fn steiner_unchecked(g: &Graph, s: VertexSet) -> VertexSet {
    let mut best = usize::MAX;
    let mut union = VertexSet::EMPTY;
    for extra in (g.vertices() - s).subsets() {
        let size = extra.len();
        if size > best {
            continue;
        }
        let w = s | extra;
        if g.is_connected_set(w) {
            if size < best {
                best = size;
                union = VertexSet::EMPTY;
            }
            union |= w;
        }
    }
    union
}

/// Pair intervals that return the empty set for separated endpoints; used to
/// build alignments on graphs that may be disconnected.
pub(crate) fn geodesic_or_empty(g: &Graph, u: usize, v: usize) -> VertexSet {
    geodesic_interval(g, u, v).unwrap_or(VertexSet::EMPTY)
}

pub(crate) fn monophonic_pair_unchecked(g: &Graph, u: usize, v: usize) -> VertexSet {
    path_union(g, u, v, 0)
}

pub(crate) fn m3_pair_unchecked(g: &Graph, u: usize, v: usize) -> VertexSet {
    path_union(g, u, v, 3)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn claw() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap()
    }

    // a=0, b=1, u1=2, u2=3, u3=4, u4=5
    fn a_graph() -> Graph {
        Graph::from_edges(6, &[(0, 2), (2, 3), (3, 4), (4, 5), (5, 2), (5, 1)]).unwrap()
    }

    #[test]
    fn induced_path_examples() {
        let c4 = cycle(4);
        let paths: Vec<_> = induced_paths(&c4, 0, 2, 0).unwrap().collect();
        assert_eq!(paths, vec![vec![0, 1, 2], vec![0, 3, 2]]);
        assert_eq!(induced_paths(&c4, 0, 2, 3).unwrap().count(), 0);
        let long: Vec<_> = induced_paths(&cycle(5), 0, 2, 3).unwrap().collect();
        assert_eq!(long, vec![vec![0, 4, 3, 2]]);
        assert!(matches!(induced_paths(&c4, 1, 1, 0), Err(Error::SameEndpoints(1))));
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(induced_paths(&split, 0, 3, 0).unwrap().count(), 0);
    }

    #[test]
    fn geodesic_examples() {
        assert_eq!(geodesic_interval(&path(4), 0, 3).unwrap(), set(&[0, 1, 2, 3]));
        assert_eq!(geodesic_interval(&cycle(5), 0, 2).unwrap(), set(&[0, 1, 2]));
        assert_eq!(geodesic_interval(&cycle(4), 0, 2).unwrap(), set(&[0, 1, 2, 3]));
        let split = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(geodesic_interval(&split, 0, 2), Err(Error::NoPath(_))));
    }

    #[test]
    fn monophonic_pair_examples() {
        let a = a_graph();
        for (u, v) in a.edges() {
            assert_eq!(monophonic_interval_pair(&a, u, v).unwrap(), set(&[u, v]));
        }
        assert_eq!(monophonic_interval_pair(&cycle(5), 0, 2).unwrap(), cycle(5).vertices());
        assert_eq!(monophonic_interval_pair(&a, 0, 1).unwrap(), set(&[0, 2, 5, 1]));
        let split = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(matches!(monophonic_interval_pair(&split, 0, 2), Err(Error::NoPath(_))));
    }

    #[test]
    fn m3_pair_examples() {
        assert_eq!(m3_interval_pair(&path(2), 0, 1).unwrap(), VertexSet::EMPTY);
        assert_eq!(m3_interval_pair(&cycle(5), 0, 2).unwrap(), set(&[0, 4, 3, 2]));
        assert_eq!(m3_interval_pair(&path(4), 0, 3).unwrap(), set(&[0, 1, 2, 3]));
    }

    #[test]
    fn m3_set_examples() {
        assert_eq!(m3_interval_set(&cycle(5), set(&[3])).unwrap(), VertexSet::EMPTY);
        assert_eq!(m3_interval_set(&cycle(5), VertexSet::EMPTY).unwrap(), VertexSet::EMPTY);
        assert_eq!(m3_interval_set(&cycle(5), cycle(5).vertices()).unwrap(), cycle(5).vertices());
        assert_eq!(m3_interval_set(&cycle(4), cycle(4).vertices()).unwrap(), VertexSet::EMPTY);
    }

    #[test]
    fn minimal_tree_examples() {
        // Adjacent pair in C5: the edge itself; the long way round has a chord.
        let c5 = cycle(5);
        let sets: Vec<_> = minimal_tree_vertex_sets(&c5, set(&[0, 1])).unwrap().collect();
        assert_eq!(sets, vec![set(&[0, 1])]);
        // Non-adjacent pair in C5: one set per induced path.
        let sets: Vec<_> = minimal_tree_vertex_sets(&c5, set(&[0, 2])).unwrap().collect();
        assert_eq!(sets, vec![set(&[0, 1, 2]), set(&[0, 2, 3, 4])]);

        let k3 = cycle(3);
        let sets: Vec<_> = minimal_tree_vertex_sets(&k3, k3.vertices()).unwrap().collect();
        assert_eq!(sets, vec![k3.vertices()]);

        let sets: Vec<_> = minimal_tree_vertex_sets(&claw(), set(&[1, 2, 3])).unwrap().collect();
        assert_eq!(sets, vec![set(&[0, 1, 2, 3])]);

        assert!(matches!(
            minimal_tree_vertex_sets(&k3, set(&[0])),
            Err(Error::TooFewTerminals { .. })
        ));
        let big = Graph::empty(17).unwrap();
        assert!(matches!(
            minimal_tree_vertex_sets(&big, set(&[0, 1])).map(|_| ()),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn monophonic_set_examples() {
        let a = a_graph();
        assert_eq!(
            monophonic_interval_set(&a, set(&[0, 1])).unwrap(),
            monophonic_interval_pair(&a, 0, 1).unwrap()
        );
        let k3 = cycle(3);
        assert_eq!(monophonic_interval_set(&k3, k3.vertices()).unwrap(), k3.vertices());
        // W = V(C4) fails: 3 is not a cut vertex of C4.
        assert_eq!(monophonic_interval_set(&cycle(4), set(&[0, 1, 2])).unwrap(), set(&[0, 1, 2]));
    }

    #[test]
    fn m3_lower_examples() {
        assert_eq!(m3_lower_interval(&cycle(5), set(&[0, 2])).unwrap(), VertexSet::EMPTY);
        assert_eq!(m3_lower_interval(&claw(), set(&[1, 2, 3])).unwrap(), set(&[0, 1, 2, 3]));
        // The four 3-subsets of {a,u1,u4,b} stay inside it.
        let a = a_graph();
        assert_eq!(m3_lower_interval(&a, set(&[0, 2, 5, 1])).unwrap(), set(&[0, 1, 2, 5]));
    }

    #[test]
    fn steiner_examples() {
        let a = a_graph();
        assert_eq!(steiner_interval(&a, set(&[2, 3])).unwrap(), set(&[2, 3]));
        assert_eq!(steiner_interval(&claw(), set(&[1, 2, 3])).unwrap(), set(&[0, 1, 2, 3]));
        assert_eq!(steiner_interval(&cycle(4), set(&[0, 2])).unwrap(), set(&[0, 1, 2, 3]));
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(steiner_interval(&split, set(&[0, 3])), Err(Error::NoPath(_))));
    }
}

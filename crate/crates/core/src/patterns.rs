//! Forbidden induced subgraphs: the pattern catalog, induced embedding
//! search, chordless cycle detection and the freeness predicates built on
//! them.

use std::ops::ControlFlow;
use std::sync::OnceLock;

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

/// A pattern graph with required edges and optional edges; every other pair
/// is a required non-edge. The members are `required ∪ S` for each subset
/// `S` of the optional edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternFamily {
    pub name: String,
    pub labels: Vec<String>,
    pub required: Vec<(usize, usize)>,
    pub optional: Vec<(usize, usize)>,
}

impl PatternFamily {
    fn new(name: &str, labels: &[&str], required: &[(usize, usize)], optional: &[(usize, usize)]) -> Self {
        PatternFamily {
            name: name.to_string(),
            labels: labels.iter().map(|s| s.to_string()).collect(),
            required: required.to_vec(),
            optional: optional.to_vec(),
        }
    }

    fn numbered(name: &str, n: usize, required: &[(usize, usize)]) -> Self {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        PatternFamily {
            name: name.to_string(),
            labels,
            required: required.to_vec(),
            optional: Vec::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn role(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Member for the optional-edge subset whose bit `i` selects `optional[i]`.
    pub fn member(&self, subset: usize) -> Graph {
        let mut edges = self.required.clone();
        edges.extend(
            self.optional
                .iter()
                .enumerate()
                .filter(|(i, _)| subset >> i & 1 == 1)
                .map(|(_, &e)| e),
        );
        Graph::from_edges(self.order(), &edges).expect("catalog edges are valid")
    }

    /// All members in binary order of the optional-edge subset.
    pub fn members(&self) -> Vec<Graph> {
        (0..1usize << self.optional.len()).map(|s| self.member(s)).collect()
    }
}

fn path_edges(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

fn build_catalog() -> Vec<PatternFamily> {
    let mut fams = vec![
        PatternFamily::numbered("P3", 3, &path_edges(3)),
        PatternFamily::numbered("P4", 4, &path_edges(4)),
        PatternFamily::numbered("C4", 4, &cycle_edges(4)),
        PatternFamily::numbered("C5", 5, &cycle_edges(5)),
        PatternFamily::numbered("C6", 6, &cycle_edges(6)),
        PatternFamily::numbered("C7", 7, &cycle_edges(7)),
        PatternFamily::numbered("C8", 8, &cycle_edges(8)),
        PatternFamily::new("claw", &["c", "x", "y", "z"], &[(0, 1), (0, 2), (0, 3)], &[]),
        PatternFamily::new(
            "paw",
            &["c", "x", "y", "z"],
            &[(0, 1), (0, 2), (1, 2), (0, 3)],
            &[],
        ),
        // Square a-b-c-d with apex e on the edge ab.
        PatternFamily::new(
            "house",
            &["a", "b", "c", "d", "e"],
            &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)],
            &[],
        ),
        // Squares 0-1-2-3 and 1-4-5-2 sharing the edge 12.
        PatternFamily::numbered(
            "domino",
            6,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (5, 2)],
        ),
        // P4 0-1-2-3 plus a vertex joined to all of it.
        PatternFamily::numbered(
            "3-fan",
            5,
            &[(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)],
        ),
        // Square u1-u2-u3-u4 with pendants a at u1 and b at u4.
        PatternFamily::new(
            "A",
            &["a", "b", "u1", "u2", "u3", "u4"],
            &[(0, 2), (2, 3), (3, 4), (4, 5), (5, 2), (5, 1)],
            &[],
        ),
        // K_{3,3} on {w1,w2,w3} x {s,t,x}, optionally one edge on each side.
        PatternFamily::new(
            "R_C4",
            &["w1", "w2", "w3", "s", "t", "x"],
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
            &[(0, 1), (5, 3)],
        ),
        // K_{2,3} on {p1,p2} x {q1,q2,q3} with a tail x at p1, optionally q1q2.
        PatternFamily::new(
            "T_C4",
            &["p1", "p2", "q1", "q2", "q3", "x"],
            &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (0, 5)],
            &[(2, 3)],
        ),
    ];
    fams.sort_by(|a, b| a.name.cmp(&b.name));
    fams
}

/// The pattern catalog, sorted by family name.
pub fn catalog() -> &'static [PatternFamily] {
    static CATALOG: OnceLock<Vec<PatternFamily>> = OnceLock::new();
    CATALOG.get_or_init(build_catalog)
}

/// Looks up a catalog family by name.
pub fn family(name: &str) -> Option<&'static PatternFamily> {
    catalog().iter().find(|f| f.name == name)
}

/// Induced embedding: `map[i]` is the host vertex of pattern vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn image(&self) -> VertexSet {
        self.map.iter().copied().collect()
    }
}

struct EmbeddingSearch<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    assigned: Vec<usize>,
}

impl EmbeddingSearch<'_> {
    fn new<'a>(host: &'a Graph, pattern: &'a Graph) -> EmbeddingSearch<'a> {
        // Breadth-first from a highest-degree vertex so each new pattern
        // vertex has an already placed neighbour whenever possible.
        let p = pattern.order();
        let mut order = Vec::with_capacity(p);
        let mut placed = VertexSet::EMPTY;
        while order.len() < p {
            let start = (pattern.vertices() - placed)
                .iter()
                .max_by_key(|&v| (pattern.degree(v), std::cmp::Reverse(v)))
                .unwrap();
            let mut queue = std::collections::VecDeque::from([start]);
            placed.insert(start);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for w in (pattern.neighbors(v) - placed).iter() {
                    placed.insert(w);
                    queue.push_back(w);
                }
            }
        }
        EmbeddingSearch {
            host,
            pattern,
            order,
            assigned: vec![usize::MAX; p],
        }
    }

    fn run<F>(&mut self, depth: usize, used: VertexSet, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(Embedding) -> ControlFlow<()>,
    {
        if depth == self.order.len() {
            return visit(Embedding {
                map: self.assigned.clone(),
            });
        }
        let pv = self.order[depth];
        let need = self.pattern.degree(pv);
        let mut candidates = self.host.vertices() - used;
        for &prev in &self.order[..depth] {
            let h = self.assigned[prev];
            candidates = if self.pattern.has_edge(pv, prev) {
                candidates & self.host.neighbors(h)
            } else {
                candidates - self.host.closed_neighbors(h)
            };
        }
        for h in candidates.iter() {
            if self.host.degree(h) < need {
                continue;
            }
            self.assigned[pv] = h;
            self.run(depth + 1, used.with(h), visit)?;
        }
        self.assigned[pv] = usize::MAX;
        ControlFlow::Continue(())
    }
}

fn for_each_embedding<F>(host: &Graph, pattern: &Graph, mut visit: F)
where
    F: FnMut(Embedding) -> ControlFlow<()>,
{
    if pattern.order() > host.order() {
        return;
    }
    let mut search = EmbeddingSearch::new(host, pattern);
    let _ = search.run(0, VertexSet::EMPTY, &mut visit);
}

/// Some induced copy of `pattern` in `host`, if one exists.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    let mut found = None;
    for_each_embedding(host, pattern, |e| {
        found = Some(e);
        ControlFlow::Break(())
    });
    found
}

/// Every induced embedding of `pattern` into `host`, automorphic images
/// included, in lexicographic order.
pub fn induced_embeddings(host: &Graph, pattern: &Graph) -> Vec<Embedding> {
    let mut all = Vec::new();
    for_each_embedding(host, pattern, |e| {
        all.push(e);
        ControlFlow::Continue(())
    });
    all.sort();
    all
}

fn extend_cycle<F>(
    g: &Graph,
    path: &mut Vec<usize>,
    covered: VertexSet,
    allowed: VertexSet,
    min_len: usize,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let start = path[0];
    let last = *path.last().unwrap();
    let candidates = g.neighbors(last) & (allowed - covered);
    let covered_next = if path.len() > 1 {
        covered | g.closed_neighbors(last)
    } else {
        covered
    };
    for x in candidates.iter() {
        if path.len() >= 2 && g.has_edge(x, start) {
            // Closing here; the orientation with the smaller second vertex is canonical.
            if path.len() + 1 >= min_len && path[1] < x {
                path.push(x);
                let flow = visit(path);
                path.pop();
                flow?;
            }
            continue;
        }
        path.push(x);
        let flow = extend_cycle(g, path, covered_next, allowed, min_len, visit);
        path.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

fn for_each_chordless_cycle<F>(g: &Graph, min_len: usize, mut visit: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    for start in 0..g.order() {
        let allowed = VertexSet::full(g.order()) - VertexSet::full(start + 1);
        let mut path = vec![start];
        if extend_cycle(g, &mut path, VertexSet::singleton(start), allowed, min_len, &mut visit).is_break() {
            return;
        }
    }
}

/// Every induced cycle with at least `min_len` vertices, each reported once
/// starting from its smallest vertex.
pub fn chordless_cycles(g: &Graph, min_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_chordless_cycle(g, min_len, |c| {
        out.push(c.to_vec());
        ControlFlow::Continue(())
    });
    out
}

pub fn find_chordless_cycle(g: &Graph, min_len: usize) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_chordless_cycle(g, min_len, |c| {
        found = Some(c.to_vec());
        ControlFlow::Break(())
    });
    found
}

/// A hole is an induced cycle of length at least 5.
pub fn has_hole(g: &Graph) -> bool {
    find_chordless_cycle(g, 5).is_some()
}

/// No induced cycle of length at least 4.
pub fn is_chordal(g: &Graph) -> bool {
    find_chordless_cycle(g, 4).is_none()
}

/// Chordality via maximum cardinality search and a perfect elimination
/// ordering check, independent of cycle enumeration.
pub fn is_chordal_by_elimination(g: &Graph) -> bool {
    let n = g.order();
    let mut weight = vec![0usize; n];
    let mut visited = VertexSet::EMPTY;
    for _ in 0..n {
        let v = (g.vertices() - visited)
            .iter()
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        // Earlier-visited neighbours must form a clique.
        let earlier = g.neighbors(v) & visited;
        for x in earlier.iter() {
            if !(earlier.without(x)).is_subset(g.neighbors(x)) {
                return false;
            }
        }
        visited.insert(v);
        for w in (g.neighbors(v) - visited).iter() {
            weight[w] += 1;
        }
    }
    true
}

/// A forbidden configuration: a catalog family or any hole.
#[derive(Debug, Clone, Copy)]
pub enum Forbidden {
    Family(&'static PatternFamily),
    Hole,
}

impl Forbidden {
    pub fn named(name: &str) -> Option<Forbidden> {
        if name == "hole" {
            Some(Forbidden::Hole)
        } else {
            family(name).map(Forbidden::Family)
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Forbidden::Family(f) => &f.name,
            Forbidden::Hole => "hole",
        }
    }
}

/// An induced forbidden subgraph found in a host graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FreenessWitness {
    pub pattern: String,
    /// Index of the family member (optional-edge subset); 0 for holes.
    pub member: usize,
    /// Host vertices in pattern order (cycle order for holes).
    pub vertices: Vec<usize>,
}

/// `Ok` when no listed configuration occurs induced, else the first witness.
pub fn is_free(g: &Graph, forbidden: &[Forbidden]) -> Result<(), FreenessWitness> {
    for f in forbidden {
        match f {
            Forbidden::Hole => {
                if let Some(c) = find_chordless_cycle(g, 5) {
                    return Err(FreenessWitness {
                        pattern: "hole".into(),
                        member: 0,
                        vertices: c,
                    });
                }
            }
            Forbidden::Family(fam) => {
                for (i, m) in fam.members().iter().enumerate() {
                    if let Some(e) = contains_induced(g, m) {
                        return Err(FreenessWitness {
                            pattern: fam.name.clone(),
                            member: i,
                            vertices: e.map,
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn forbidden_list(names: &[&str]) -> Vec<Forbidden> {
    names
        .iter()
        .map(|n| Forbidden::named(n).unwrap_or_else(|| panic!("unknown pattern {n}")))
        .collect()
}

/// (house, hole, domino)-free.
pub fn is_hhd_free(g: &Graph) -> bool {
    is_free(g, &forbidden_list(&["house", "hole", "domino"])).is_ok()
}

/// (house, hole, domino, A)-free.
pub fn is_hhda_free(g: &Graph) -> bool {
    is_free(g, &forbidden_list(&["house", "hole", "domino", "A"])).is_ok()
}

pub fn is_a_free(g: &Graph) -> bool {
    is_free(g, &forbidden_list(&["A"])).is_ok()
}

pub fn a_graph() -> Graph {
    family("A").unwrap().member(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(name: &str) -> &'static PatternFamily {
        family(name).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, &path_edges(n)).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &cycle_edges(n)).unwrap()
    }

    #[test]
    fn catalog_shapes() {
        let house = fam("house");
        assert_eq!((house.order(), house.member(0).edge_count()), (5, 6));
        let a = fam("A");
        assert_eq!((a.order(), a.member(0).edge_count()), (6, 6));
        let g = a.member(0);
        assert_eq!(g.degree(a.role("a").unwrap()), 1);
        assert_eq!(g.degree(a.role("b").unwrap()), 1);
        assert_eq!(fam("R_C4").members().len(), 4);
        assert_eq!(fam("domino").member(0).edge_count(), 7);
        assert_eq!(fam("3-fan").member(0).edge_count(), 7);
        let names: Vec<&str> = catalog().iter().map(|f| f.name.as_str()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }

    #[test]
    fn family_invariants() {
        for f in catalog() {
            for &(u, v) in &f.optional {
                assert!(!f.required.contains(&(u, v)) && !f.required.contains(&(v, u)), "{}", f.name);
            }
            for m in f.members() {
                assert!(m.is_connected(), "{}", f.name);
            }
        }
    }

    #[test]
    fn embedding_examples() {
        let house = fam("house").member(0);
        let e = contains_induced(&house, &house).unwrap();
        assert_eq!(e.image(), house.vertices());
        assert!(contains_induced(&cycle(4), &path(4)).is_none());
        let a = a_graph();
        assert!(contains_induced(&a, &a).is_some());
        // The A-graph has exactly one non-trivial automorphism.
        assert_eq!(induced_embeddings(&a, &a).len(), 2);
    }

    #[test]
    fn hole_and_chordality_examples() {
        assert!(has_hole(&cycle(5)) && !is_chordal(&cycle(5)));
        assert!(!has_hole(&cycle(4)) && !is_chordal(&cycle(4)));
        let tree = Graph::from_edges(5, &[(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        assert!(!has_hole(&tree) && is_chordal(&tree));
        assert_eq!(chordless_cycles(&cycle(6), 3), vec![vec![0, 1, 2, 3, 4, 5]]);
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(chordless_cycles(&k4, 3).len(), 4);
    }

    #[test]
    fn freeness_examples() {
        for n in 1..=8 {
            assert!(is_hhda_free(&path(n)));
        }
        assert!(!is_hhd_free(&fam("house").member(0)));
        let a = a_graph();
        assert!(is_hhd_free(&a));
        assert!(!is_a_free(&a));
        let w = is_free(&cycle(6), &forbidden_list(&["house", "hole"])).unwrap_err();
        assert_eq!(w.pattern, "hole");
        assert_eq!(w.vertices.len(), 6);
    }
}

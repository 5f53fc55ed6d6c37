//! Graph-level checks. Each check has a precondition (otherwise the graph is
//! skipped) and a conclusion; a failing graph carries a JSON witness.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::convexity::{
    semisimplicial_vertices, simplicial_vertices, three_ss_vertices, Alignment, ConvexityKind,
    GeometryVerdict,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::intervals::{
    induced_paths, m3_interval_set, m3_lower_interval, minimal_tree_vertex_sets,
    monophonic_interval_pair,
};
use crate::patterns::{
    a_graph, family, forbidden_list, induced_embeddings, is_chordal, is_free,
    is_hhd_free, is_hhda_free,
};

/// Largest order for which the extreme-point check enumerates convex sets.
pub const EXTREME_MAX_ORDER: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// m³₃ convex geometry ⇒ A-free.
    Theorem3,
    /// m³₃ convex geometry ⇒ `I_{m³}(I_m[a,b]) ⊆ I_m[a,b]`.
    Lemma4,
    /// m³₃ convex geometry ⇒ `I_{m₃}(I_m[a,b]) ⊆ I_m[a,b]`.
    Lemma5,
    /// (house, hole, domino, T_C4)-free with an induced A ⇒ `u2 ∉ I_m[a,b]`.
    Lemma6,
    /// HHDA-free ⇒ every vertex is semisimplicial or lies on an induced
    /// path of length ≥ 3 between semisimplicial vertices.
    Theorem1,
    /// HHD-free ⇔ `N[S]` is m³-convex for every connected `S`.
    Theorem2,
    /// Geodesic, monophonic and m³ convex geometries versus their
    /// forbidden-subgraph characterisations.
    Classical,
    /// Extreme points of g, m, m³ and g₃ convex sets versus simplicial,
    /// semisimplicial and 3SS vertices.
    Extreme,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Theorem3,
        Check::Lemma4,
        Check::Lemma5,
        Check::Lemma6,
        Check::Theorem1,
        Check::Theorem2,
        Check::Classical,
        Check::Extreme,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Theorem3 => "theorem3",
            Check::Lemma4 => "lemma4",
            Check::Lemma5 => "lemma5",
            Check::Lemma6 => "lemma6",
            Check::Theorem1 => "theorem1",
            Check::Theorem2 => "theorem2",
            Check::Classical => "classical",
            Check::Extreme => "extreme",
        }
    }

    /// Runs the check. Capacity errors become `skipped` with note
    /// `capacity`, never a pass.
    pub fn run(self, g: &Graph) -> Outcome {
        if !g.is_connected() {
            return Outcome::skipped("disconnected");
        }
        let result = match self {
            Check::Theorem3 => theorem3(g),
            Check::Lemma4 => lemma4(g),
            Check::Lemma5 => lemma5(g),
            Check::Lemma6 => lemma6(g),
            Check::Theorem1 => theorem1(g),
            Check::Theorem2 => theorem2(g),
            Check::Classical => classical(g),
            Check::Extreme => extreme(g),
        };
        match result {
            Ok(outcome) => outcome,
            Err(Error::Capacity { .. }) => Outcome::skipped("capacity"),
            Err(e) => Outcome {
                status: Status::Fail,
                witness: json!({ "error": e.to_string() }),
                note: Some("internal error".into()),
            },
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCheck {
                name: s.to_string(),
                known: Check::ALL.map(Check::name).join(", "),
            })
    }
}

/// Parses a comma-separated check list; `all` selects every check.
pub fn parse_checks(list: &str) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if name == "all" {
            out.extend(Check::ALL);
        } else {
            out.push(name.parse()?);
        }
    }
    if out.is_empty() {
        return Err(Error::Usage("no checks selected".into()));
    }
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Outcome {
    pub status: Status,
    pub witness: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Outcome {
    pub fn pass() -> Self {
        Outcome {
            status: Status::Pass,
            witness: Value::Null,
            note: None,
        }
    }

    pub fn fail(witness: Value) -> Self {
        Outcome {
            status: Status::Fail,
            witness,
            note: None,
        }
    }

    pub fn skipped(reason: &str) -> Self {
        Outcome {
            status: Status::Skipped,
            witness: Value::Null,
            note: Some(reason.to_string()),
        }
    }
}

fn m33_geometry(g: &Graph) -> Result<bool> {
    Alignment::new(g, ConvexityKind::M33)?.is_convex_geometry()
}

fn theorem3(g: &Graph) -> Result<Outcome> {
    if !m33_geometry(g)? {
        return Ok(Outcome::skipped("not an m33 convex geometry"));
    }
    Ok(match is_free(g, &forbidden_list(&["A"])) {
        Ok(()) => Outcome::pass(),
        Err(w) => Outcome::fail(json!({ "a_embedding": w.vertices })),
    })
}

/// Pairs `(a, b)` with `a < b` and their monophonic intervals.
fn m_intervals(g: &Graph) -> Result<Vec<(usize, usize, VertexSet)>> {
    let mut out = Vec::new();
    for a in 0..g.order() {
        for b in a + 1..g.order() {
            out.push((a, b, monophonic_interval_pair(g, a, b)?));
        }
    }
    Ok(out)
}

fn lemma4(g: &Graph) -> Result<Outcome> {
    if !m33_geometry(g)? {
        return Ok(Outcome::skipped("not an m33 convex geometry"));
    }
    for (a, b, interval) in m_intervals(g)? {
        let closure = m3_interval_set(g, interval)?;
        let Some(w) = (closure - interval).first() else {
            continue;
        };
        let path = interval
            .iter()
            .flat_map(|u| interval.iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .find_map(|(u, v)| induced_paths(g, u, v, 3).ok()?.find(|p| p.contains(&w)))
            .unwrap_or_default();
        return Ok(Outcome::fail(json!({ "a": a, "b": b, "w": w, "path": path })));
    }
    Ok(Outcome::pass())
}

fn lemma5(g: &Graph) -> Result<Outcome> {
    if !m33_geometry(g)? {
        return Ok(Outcome::skipped("not an m33 convex geometry"));
    }
    for (a, b, interval) in m_intervals(g)? {
        let closure = m3_lower_interval(g, interval)?;
        let Some(w) = (closure - interval).first() else {
            continue;
        };
        let mut witness = json!({ "a": a, "b": b, "w": w });
        for triple in interval.k_subsets(3) {
            if let Some(tree) = minimal_tree_vertex_sets(g, triple)?.find(|t| t.contains(w)) {
                witness["terminals"] = json!(triple);
                witness["tree"] = json!(tree);
                break;
            }
        }
        return Ok(Outcome::fail(witness));
    }
    Ok(Outcome::pass())
}

fn lemma6(g: &Graph) -> Result<Outcome> {
    if is_free(g, &forbidden_list(&["house", "hole", "domino", "T_C4"])).is_err() {
        return Ok(Outcome::skipped("contains house, hole, domino or T_C4"));
    }
    let a = family("A").expect("A in catalog");
    let (ra, rb, ru2) = (
        a.role("a").unwrap(),
        a.role("b").unwrap(),
        a.role("u2").unwrap(),
    );
    let embeddings = induced_embeddings(g, &a_graph());
    if embeddings.is_empty() {
        return Ok(Outcome::skipped("no induced A"));
    }
    for e in embeddings {
        let interval = monophonic_interval_pair(g, e.map[ra], e.map[rb])?;
        if interval.contains(e.map[ru2]) {
            return Ok(Outcome::fail(json!({ "embedding": e.map, "interval": interval })));
        }
    }
    Ok(Outcome::pass())
}

fn theorem1(g: &Graph) -> Result<Outcome> {
    if !is_hhda_free(g) {
        return Ok(Outcome::skipped("not HHDA-free"));
    }
    let all = g.vertices();
    let ss = semisimplicial_vertices(g, all);
    let covered = ss | m3_interval_set(g, ss)?;
    Ok(match (all - covered).first() {
        None => Outcome::pass(),
        Some(v) => Outcome::fail(json!({ "vertex": v, "semisimplicial": ss })),
    })
}

fn theorem2(g: &Graph) -> Result<Outcome> {
    let hhd_free = is_hhd_free(g);
    let m3 = Alignment::new(g, ConvexityKind::M3Path)?;
    let violation = g
        .vertices()
        .subsets()
        .filter(|&s| g.is_connected_set(s))
        .find_map(|s| {
            let nbhd = g.closed_neighborhood(s);
            m3.violation(nbhd).map(|rule| (s, nbhd, rule))
        });
    Ok(match (hhd_free, violation) {
        (true, None) => Outcome::pass(),
        (false, Some(_)) => Outcome::pass(),
        (true, Some((s, nbhd, rule))) => Outcome::fail(json!({
            "hhd_free": true,
            "set": s,
            "closed_neighborhood": nbhd,
            "terminals": rule.terminals,
            "interval": rule.interval,
        })),
        (false, None) => {
            let w = is_free(g, &forbidden_list(&["house", "hole", "domino"])).unwrap_err();
            Outcome::fail(json!({ "hhd_free": false, "forbidden": w }))
        }
    })
}

fn classical(g: &Graph) -> Result<Outcome> {
    let chordal = is_chordal(g);
    let fan_free = is_free(g, &forbidden_list(&["3-fan"])).is_ok();
    let hhda_free = is_hhda_free(g);
    let mut mismatches = Vec::new();
    let cases = [
        (ConvexityKind::Geodesic, chordal && fan_free, "chordal and 3-fan-free"),
        (ConvexityKind::Monophonic, chordal, "chordal"),
        (ConvexityKind::M3Path, hhda_free, "HHDA-free"),
    ];
    for (kind, expected, property) in cases {
        let verdict = Alignment::new(g, kind)?.geometry()?;
        if verdict.is_geometry() != expected {
            mismatches.push(json!({
                "kind": kind,
                "geometry": verdict.is_geometry(),
                "property": property,
                "holds": expected,
                "counterexample": match verdict {
                    GeometryVerdict::Geometry => Value::Null,
                    GeometryVerdict::Counterexample { set, .. } => json!(set),
                },
            }));
        }
    }
    Ok(if mismatches.is_empty() {
        Outcome::pass()
    } else {
        Outcome::fail(Value::Array(mismatches))
    })
}

fn extreme(g: &Graph) -> Result<Outcome> {
    if g.order() > EXTREME_MAX_ORDER {
        return Err(Error::Capacity {
            what: "extreme point characterisation",
            n: g.order(),
            cap: EXTREME_MAX_ORDER,
        });
    }
    type Local = fn(&Graph, VertexSet) -> VertexSet;
    let cases: [(ConvexityKind, Local); 4] = [
        (ConvexityKind::Geodesic, simplicial_vertices),
        (ConvexityKind::Monophonic, simplicial_vertices),
        (ConvexityKind::M3Path, semisimplicial_vertices),
        (ConvexityKind::SteinerK(3), three_ss_vertices),
    ];
    for (kind, local) in cases {
        let alignment = Alignment::new(g, kind)?;
        for &c in alignment.convex_sets()? {
            let ex = alignment.extreme_points(c)?;
            let expected = local(g, c);
            if ex != expected {
                return Ok(Outcome::fail(json!({
                    "kind": kind,
                    "set": c,
                    "extreme": ex,
                    "local": expected,
                })));
            }
        }
    }
    Ok(Outcome::pass())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        graph(n, &edges)
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        graph(n, &edges)
    }

    fn complete(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        graph(n, &edges)
    }

    fn status(c: Check, g: &Graph) -> Status {
        c.run(g).status
    }

    #[test]
    fn names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
        }
        let err = "lemma7".parse::<Check>().unwrap_err();
        assert!(err.to_string().contains("theorem3"));
        assert_eq!(parse_checks("all").unwrap().len(), 8);
        assert_eq!(parse_checks("lemma4,theorem3,lemma4").unwrap(), vec![Check::Theorem3, Check::Lemma4]);
    }

    #[test]
    fn theorem3_examples() {
        assert_eq!(status(Check::Theorem3, &path(5)), Status::Pass);
        assert_eq!(status(Check::Theorem3, &cycle(5)), Status::Skipped);
        assert_ne!(status(Check::Theorem3, &a_graph()), Status::Fail);
    }

    #[test]
    fn lemma_examples() {
        assert_eq!(status(Check::Lemma4, &complete(2)), Status::Pass);
        assert_eq!(status(Check::Lemma4, &path(6)), Status::Pass);
        assert_eq!(status(Check::Lemma5, &complete(3)), Status::Pass);
        let claw = graph(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(status(Check::Lemma5, &claw), Status::Pass);
    }

    #[test]
    fn lemma6_examples() {
        assert_eq!(status(Check::Lemma6, &a_graph()), Status::Pass);
        // A plus a vertex joined to u2 and u3.
        let mut edges: Vec<_> = a_graph().edges().collect();
        edges.extend([(6, 3), (6, 4)]);
        assert_ne!(status(Check::Lemma6, &graph(7, &edges)), Status::Fail);
        assert_eq!(status(Check::Lemma6, &path(4)), Status::Skipped);
    }

    #[test]
    fn theorem1_and_2_examples() {
        assert_eq!(status(Check::Theorem1, &path(4)), Status::Pass);
        assert_eq!(status(Check::Theorem1, &complete(5)), Status::Pass);
        let house = family("house").unwrap().member(0);
        assert_eq!(status(Check::Theorem2, &house), Status::Pass);
        assert_eq!(status(Check::Theorem2, &path(5)), Status::Pass);
    }

    #[test]
    fn classical_and_extreme_examples() {
        assert_eq!(status(Check::Classical, &cycle(4)), Status::Pass);
        let fan = family("3-fan").unwrap().member(0);
        assert_eq!(status(Check::Classical, &fan), Status::Pass);
        assert!(!Alignment::new(&fan, ConvexityKind::Geodesic)
            .unwrap()
            .is_convex_geometry()
            .unwrap());
        assert_eq!(status(Check::Extreme, &cycle(5)), Status::Pass);
        let big = path(7);
        let o = Check::Extreme.run(&big);
        assert_eq!((o.status, o.note.as_deref()), (Status::Skipped, Some("capacity")));
    }

    #[test]
    fn disconnected_graphs_are_skipped() {
        let g = Graph::empty(3).unwrap();
        for c in Check::ALL {
            assert_eq!(status(c, &g), Status::Skipped);
        }
    }
}

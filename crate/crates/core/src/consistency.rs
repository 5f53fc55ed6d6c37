//! Self-check for the pattern catalog.
//!
//! The catalog encodings of house, domino, the A-graph and the two twin-C4
//! families are reconstructed from how the closure arguments use them. This
//! module rebuilds each small configuration those arguments name (edges and
//! non-edges as stated, unknown pairs taken both ways) and checks that it is
//! recognised as the claimed family. It also checks that every member of the
//! obstruction families has at most one 3SS vertex.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::canon::canonical_form;
use crate::convexity::is_3ss;
use crate::graph::Graph;
use crate::patterns::{family, PatternFamily};

/// A configuration named in a closure argument.
#[derive(Debug, Clone, Copy)]
pub struct Configuration {
    pub name: &'static str,
    /// Catalog family the configuration is claimed to belong to.
    pub claim: &'static str,
    pub vertices: &'static str,
    pub edges: &'static str,
    /// Pairs whose adjacency the argument leaves open.
    pub unknown: &'static str,
}

const fn config(
    name: &'static str,
    claim: &'static str,
    vertices: &'static str,
    edges: &'static str,
    unknown: &'static str,
) -> Configuration {
    Configuration {
        name,
        claim,
        vertices,
        edges,
        unknown,
    }
}

/// Configurations taken from the closure arguments for m-intervals under the
/// m³ and m₃ operators and for the leaves of the A-graph.
pub const CONFIGURATIONS: &[Configuration] = &[
    // m³-closure of m-intervals, endpoints on a common induced path.
    config("m3-closure/common-path: y misses z", "house", "x' u w y z", "x'-u u-w w-y y-x' u-z w-z", ""),
    config("m3-closure/common-path: triangle on yz", "house", "x' u z z' y", "x'-u u-z z-z' z'-y y-z y-x'", ""),
    config("m3-closure/common-path: square on yz", "domino", "x' u z z1 z' y", "x'-u u-z z-z1 z1-z' z'-y y-z y-x'", ""),
    // Endpoints on internally disjoint paths, the interior of Q off both paths.
    config("m3-closure/disjoint: u sees one of vL,vR", "house", "vL v vR u' u", "vL-v v-vR u'-vL u'-vR u-u' u-vL", ""),
    config("m3-closure/disjoint: u sees vL", "house", "u u' w v vL", "u-u' u'-w w-v v-vL u-vL u'-vL", ""),
    config("m3-closure/disjoint: r sees vL", "domino", "u' u r vL v w", "u'-u u-r r-vL vL-v v-w w-u' u'-vL", ""),
    config("m3-closure/disjoint: u sees s", "domino", "u' u s vR v vL", "u'-u u-s s-vR vR-u' vR-v v-vL vL-u'", ""),
    config("m3-closure/disjoint: r sees vR", "domino", "u' u r vR v vL", "u'-u u-r r-vR vR-u' vR-v v-vL vL-u'", ""),
    config("m3-closure/disjoint: w sees vL, u sees vR", "house", "u u' vR v w", "u-u' u'-vR vR-v v-w w-u' u-vR", ""),
    config("m3-closure/disjoint: w sees vL, r sees vR", "domino", "u' u r vR v w", "u'-u u-r r-vR vR-u' vR-v v-w w-u'", ""),
    config("m3-closure/disjoint: w sees vL, u sees s", "domino", "u' u s vR v w", "u'-u u-s s-vR vR-u' vR-v v-w w-u'", ""),
    // Q of length three.
    config("m3-closure/short-Q: v2 misses vR", "house", "v2 w v vL vR", "v2-w w-v v-vL v-vR w-vR v2-vL", ""),
    config("m3-closure/short-Q: u sees vL", "house", "u v2 v3 v vL", "u-v2 v2-v3 v3-v v-vL v2-vL u-vL", ""),
    config(
        "m3-closure/short-Q: u misses vL and vR",
        "T_C4",
        "u v2 v3 vL v vR",
        "u-v2 v2-v3 v3-v v3-vR v2-vL v2-vR v-vL v-vR",
        "",
    ),
    // Paths crossing at interior vertices.
    config("m3-closure/crossing: s sees b''L", "house", "s t b''L b'' b''R", "s-t t-b''L t-b''R s-b''L b''L-b'' b''-b''R", ""),
    config(
        "m3-closure/crossing: s sees c",
        "domino",
        "s c t b''L b'' b''R",
        "s-t s-c c-b''L t-b''L t-b''R b''L-b'' b''-b''R",
        "",
    ),
    // m₃-closure of m-intervals.
    config("m3_3-closure/adjacent pair: w1 misses t3", "house", "w1 w2 x w3 t3", "w1-w2 x-w1 x-w2 x-w3 w3-t3 w2-t3", ""),
    config(
        "m3_3-closure/adjacent pair: x misses s3",
        "R_C4",
        "w1 w2 w3 x s3 t3",
        "w1-w2 x-w1 x-w2 x-w3 w3-s3 w3-t3 w1-t3 w2-t3 w1-s3 w2-s3",
        "",
    ),
    config("m3_3-closure/adjacent pair: w2 misses s3", "house", "s3 w3 t3 w2 x", "s3-w3 w3-t3 x-s3 x-w3 x-w2 w2-t3", ""),
    config(
        "m3_3-closure/adjacent pair: x sees s3",
        "R_C4",
        "w1 w2 w3 x s3 t3",
        "w1-w2 x-w1 x-w2 x-w3 x-s3 w3-s3 w3-t3 w1-t3 w2-t3 w1-s3 w2-s3",
        "",
    ),
    config(
        "m3_3-closure/separate paths: equal neighbour pairs",
        "R_C4",
        "w1 w2 w3 s1 t1 x",
        "w1-s1 w1-t1 w1-x w2-s1 w2-t1 w2-x w3-s1 w3-t1 w3-x",
        "w1-w2 x-s1",
    ),
    config(
        "m3_3-closure/separate paths: disjoint neighbour pairs",
        "R_C4",
        "w1 w2 w3 t1 t3 x",
        "w1-t1 w3-t1 w1-t3 w3-t3 w2-t1 w2-t3 x-w1 x-w2 x-w3",
        "w1-w2 t1-t3",
    ),
    config(
        "m3_3-closure/separate paths: shared s, x sees s",
        "R_C4",
        "w1 w2 w3 t1 t3 x",
        "w1-t1 w3-t1 w1-t3 w3-t3 w2-t1 w2-t3 x-w1 x-w2 x-w3",
        "w1-w2 t1-t3",
    ),
    config("m3_3-closure/separate paths: w3 misses t1", "house", "s1 w1 t1 x w3", "s1-w1 w1-t1 x-t1 x-w1 x-w3 s1-w3", ""),
    config(
        "m3_3-closure/separate paths: x sees t1",
        "R_C4",
        "w1 w2 w3 s1 t1 x",
        "w1-s1 w1-t1 w3-s1 w3-t1 w2-s1 w2-t1 x-w1 x-w2 x-w3 x-t1",
        "w1-w2",
    ),
    config(
        "m3_3-closure/separate paths: x misses t1 and t3",
        "R_C4",
        "w1 w2 w3 s1 x t3",
        "w1-s1 w1-t3 w1-x w2-s1 w2-t3 w2-x w3-s1 w3-t3 w3-x",
        "w1-w2",
    ),
    // Leaves of the A-graph.
    config(
        "A-leaves/short prefix: w1 misses the square",
        "domino",
        "a w1 u2 u1 u4 u3",
        "a-u1 u1-u2 u2-u3 u3-u4 u4-u1 a-w1 w1-u2",
        "",
    ),
    config("A-leaves/short prefix: w1 sees u1 only", "house", "w1 u2 u3 u1 u4", "u1-u2 u2-u3 u3-u4 u4-u1 w1-u2 w1-u1", ""),
    config(
        "A-leaves/short prefix: w1 sees u4",
        "T_C4",
        "u2 w1 u1 u3 u4 b",
        "u1-u2 u2-u3 u3-u4 u4-u1 u4-b w1-u2 w1-u4",
        "w1-u1",
    ),
    config("A-leaves/short prefix: w1 sees u3 not u4", "house", "w1 a u1 u4 u3", "w1-a a-u1 u1-u4 u4-u3 w1-u3 w1-u1", ""),
    config("A-leaves/long prefix: wk misses u3, u4", "house", "wk u1 u2 u3 u4", "u1-u2 u2-u3 u3-u4 u4-u1 wk-u1 wk-u2", ""),
    config(
        "A-leaves/long prefix: wk sees u4 only",
        "T_C4",
        "u4 u1 u3 wk u2 b",
        "u1-u2 u2-u3 u3-u4 u4-u1 u4-b wk-u1 wk-u2 wk-u4",
        "",
    ),
    config(
        "A-leaves/long prefix: wk sees u3 only",
        "T_C4",
        "u1 wk u2 u3 u4 a",
        "u1-u2 u2-u3 u3-u4 u4-u1 a-u1 wk-u1 wk-u2 wk-u3",
        "",
    ),
    config("A-leaves/suffix of length two", "house", "wk u2 v1 u4 b", "wk-u2 wk-u4 u2-v1 v1-u4 v1-b u4-b", ""),
    config("A-leaves/long suffix: v2 sees u4", "house", "wk u2 v1 v2 u4", "wk-u2 u2-v1 v1-v2 wk-u4 v1-u4 v2-u4", ""),
    config(
        "A-leaves/long suffix: v3 sees u4",
        "domino",
        "wk u2 v1 v2 v3 u4",
        "wk-u2 u2-v1 v1-v2 v2-v3 wk-u4 v1-u4 v3-u4",
        "",
    ),
];

/// Families whose members may contain at most one 3SS vertex.
pub const SINGLE_3SS_FAMILIES: &[&str] = &["house", "C5", "C6", "C7", "C8", "domino", "R_C4", "T_C4"];

fn parse_pairs(labels: &[&str], text: &str) -> Vec<(usize, usize)> {
    let index = |l: &str| {
        labels
            .iter()
            .position(|x| *x == l)
            .unwrap_or_else(|| panic!("unknown label {l}"))
    };
    text.split_whitespace()
        .map(|pair| {
            let (a, b) = pair.split_once('-').expect("pair written as x-y");
            (index(a), index(b))
        })
        .collect()
}

impl Configuration {
    pub fn labels(&self) -> Vec<&'static str> {
        self.vertices.split_whitespace().collect()
    }

    /// One graph per choice of the unknown pairs.
    pub fn completions(&self) -> Vec<Graph> {
        let labels = self.labels();
        let edges = parse_pairs(&labels, self.edges);
        let unknown = parse_pairs(&labels, self.unknown);
        (0..1usize << unknown.len())
            .map(|mask| {
                let mut all = edges.clone();
                all.extend(
                    unknown
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &e)| e),
                );
                Graph::from_edges(labels.len(), &all).expect("configuration edges are valid")
            })
            .collect()
    }
}

fn member_forms(fam: &PatternFamily) -> BTreeSet<Vec<u8>> {
    fam.members()
        .iter()
        .map(|m| canonical_form(m).expect("catalog members are small"))
        .collect()
}

/// Number of 3SS vertices of `g` (all of `V` as the ambient set).
pub fn three_ss_count(g: &Graph) -> usize {
    g.vertices()
        .iter()
        .filter(|&v| is_3ss(g, g.vertices(), v).expect("vertex in range"))
        .count()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConsistencyEntry {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub entries: Vec<ConsistencyEntry>,
}

impl ConsistencyReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ConsistencyEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }
}

/// Runs both halves of the catalog self-check.
pub fn consistency_check() -> ConsistencyReport {
    let mut entries = Vec::new();
    for c in CONFIGURATIONS {
        let fam = family(c.claim).unwrap_or_else(|| panic!("no family {}", c.claim));
        let forms = member_forms(fam);
        let completions = c.completions();
        let missed = completions
            .iter()
            .filter(|g| !forms.contains(&canonical_form(g).expect("configurations are small")))
            .count();
        entries.push(ConsistencyEntry {
            name: c.name.to_string(),
            passed: missed == 0,
            detail: format!(
                "{}/{} completions recognised as {}",
                completions.len() - missed,
                completions.len(),
                c.claim
            ),
        });
    }
    for name in SINGLE_3SS_FAMILIES {
        let fam = family(name).expect("family in catalog");
        for (i, m) in fam.members().iter().enumerate() {
            let count = three_ss_count(m);
            entries.push(ConsistencyEntry {
                name: format!("{name}[{i}] has at most one 3SS vertex"),
                passed: count <= 1,
                detail: format!("{count} 3SS vertices"),
            });
        }
    }
    ConsistencyReport { entries }
}

//! Alignments driven by interval operators.
//!
//! Every convexity here has the form "for each terminal tuple `T ⊆ S`, the
//! interval of `T` lies in `S`". An [`Alignment`] precomputes one rule
//! `(T, I(T))` per tuple of the whole vertex set; convexity tests and hulls
//! then reduce to bitset containment.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::intervals::{
    geodesic_or_empty, m3_pair_unchecked, monophonic_pair_unchecked, monophonic_set_unchecked,
    steiner_unchecked, SUBSET_ENUMERATION_CAP,
};

/// Cap on the graph order for enumerating every convex set.
pub const ALIGNMENT_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConvexityKind {
    /// `g`: geodesic intervals of pairs.
    Geodesic,
    /// `m = m₂`: induced-path intervals of pairs.
    Monophonic,
    /// `m_k`: monophonic set intervals of `k`-subsets.
    MonophonicK(usize),
    /// `m³`: induced paths of length at least 3 between pairs.
    M3Path,
    /// `m³₃`: both `m³` and `m₃`.
    M33,
    /// `g_k`: Steiner intervals of `k`-subsets.
    SteinerK(usize),
}

impl ConvexityKind {
    /// The six alignments compared throughout the crate.
    pub const STANDARD: [ConvexityKind; 6] = [
        ConvexityKind::Geodesic,
        ConvexityKind::Monophonic,
        ConvexityKind::M3Path,
        ConvexityKind::MonophonicK(3),
        ConvexityKind::M33,
        ConvexityKind::SteinerK(3),
    ];

    fn validate(self) -> Result<()> {
        match self {
            ConvexityKind::MonophonicK(k) | ConvexityKind::SteinerK(k) if k < 2 => {
                Err(Error::InvalidK(k))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for ConvexityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            ConvexityKind::Geodesic => "g".to_string(),
            ConvexityKind::Monophonic => "m".to_string(),
            ConvexityKind::MonophonicK(k) => format!("m3k:{k}"),
            ConvexityKind::M3Path => "m3".to_string(),
            ConvexityKind::M33 => "m33".to_string(),
            ConvexityKind::SteinerK(k) => format!("gk:{k}"),
        };
        f.pad(&text)
    }
}

impl FromStr for ConvexityKind {
    type Err = Error;

    /// Accepts `g`, `m`, `m3`, `m33`, `m3k:<k>` (alias `mk:<k>`) and `gk:<k>`.
    fn from_str(s: &str) -> Result<Self> {
        let parse_k = |k: &str| {
            k.parse::<usize>()
                .map_err(|_| Error::Usage(format!("invalid k in convexity kind `{s}`")))
        };
        let kind = match s {
            "g" => ConvexityKind::Geodesic,
            "m" => ConvexityKind::Monophonic,
            "m3" => ConvexityKind::M3Path,
            "m33" => ConvexityKind::M33,
            _ => {
                if let Some(k) = s.strip_prefix("m3k:").or_else(|| s.strip_prefix("mk:")) {
                    ConvexityKind::MonophonicK(parse_k(k)?)
                } else if let Some(k) = s.strip_prefix("gk:") {
                    ConvexityKind::SteinerK(parse_k(k)?)
                } else {
                    return Err(Error::Usage(format!(
                        "unknown convexity kind `{s}` (expected g, m, m3, m3k:<k>, m33 or gk:<k>)"
                    )));
                }
            }
        };
        kind.validate()?;
        Ok(kind)
    }
}

impl Serialize for ConvexityKind {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ConvexityKind {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `terminals ⊆ S` forces `interval ⊆ S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rule {
    pub terminals: VertexSet,
    pub interval: VertexSet,
}

fn pair_rules(g: &Graph, interval: impl Fn(&Graph, usize, usize) -> VertexSet) -> Vec<Rule> {
    let mut rules = Vec::new();
    for terminals in g.vertices().k_subsets(2) {
        let mut it = terminals.iter();
        let (u, v) = (it.next().unwrap(), it.next().unwrap());
        rules.push(Rule {
            terminals,
            interval: interval(g, u, v),
        });
    }
    rules
}

fn set_rules(g: &Graph, k: usize, interval: impl Fn(&Graph, VertexSet) -> VertexSet) -> Vec<Rule> {
    g.vertices()
        .k_subsets(k)
        .map(|terminals| Rule {
            terminals,
            interval: interval(g, terminals),
        })
        .collect()
}

/// Tuple rules for `kind` over all of `V`. Terminals in different components
/// contribute empty intervals.
pub fn rules_for(g: &Graph, kind: ConvexityKind) -> Result<Vec<Rule>> {
    kind.validate()?;
    if g.order() > SUBSET_ENUMERATION_CAP {
        return Err(Error::Capacity {
            what: "alignment rules",
            n: g.order(),
            cap: SUBSET_ENUMERATION_CAP,
        });
    }
    let mut rules = match kind {
        ConvexityKind::Geodesic => pair_rules(g, geodesic_or_empty),
        ConvexityKind::Monophonic => pair_rules(g, monophonic_pair_unchecked),
        ConvexityKind::M3Path => pair_rules(g, m3_pair_unchecked),
        ConvexityKind::MonophonicK(k) => set_rules(g, k, monophonic_set_unchecked),
        ConvexityKind::SteinerK(k) => set_rules(g, k, steiner_unchecked),
        ConvexityKind::M33 => {
            let mut r = pair_rules(g, m3_pair_unchecked);
            r.extend(set_rules(g, 3, monophonic_set_unchecked));
            r
        }
    };
    rules.retain(|r| !r.interval.is_subset(r.terminals));
    Ok(rules)
}

/// Outcome of the Minkowski–Krein–Milman test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum GeometryVerdict {
    Geometry,
    /// The first convex set (in increasing bit order) that is not the hull
    /// of its extreme points.
    Counterexample {
        set: VertexSet,
        extreme: VertexSet,
        hull: VertexSet,
    },
}

impl GeometryVerdict {
    pub fn is_geometry(&self) -> bool {
        matches!(self, GeometryVerdict::Geometry)
    }
}

/// A graph together with one interval convexity on its vertex set.
pub struct Alignment<'g> {
    graph: &'g Graph,
    kind: ConvexityKind,
    rules: Vec<Rule>,
    convex_sets: OnceLock<Vec<VertexSet>>,
}

impl<'g> Alignment<'g> {
    pub fn new(graph: &'g Graph, kind: ConvexityKind) -> Result<Self> {
        Ok(Alignment {
            graph,
            kind,
            rules: rules_for(graph, kind)?,
            convex_sets: OnceLock::new(),
        })
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn kind(&self) -> ConvexityKind {
        self.kind
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn is_convex(&self, s: VertexSet) -> bool {
        self.rules
            .iter()
            .all(|r| !r.terminals.is_subset(s) || r.interval.is_subset(s))
    }

    /// The first rule violated by `s`, if any.
    pub fn violation(&self, s: VertexSet) -> Option<Rule> {
        self.rules
            .iter()
            .find(|r| r.terminals.is_subset(s) && !r.interval.is_subset(s))
            .copied()
    }

    /// Round-based closure: apply every applicable rule, repeat until stable.
    pub fn hull(&self, s: VertexSet) -> VertexSet {
        let mut current = s;
        loop {
            let mut next = current;
            for r in &self.rules {
                if r.terminals.is_subset(current) {
                    next |= r.interval;
                }
            }
            if next == current {
                return current;
            }
            current = next;
        }
    }

    /// Every convex set in increasing bit order.
    pub fn convex_sets(&self) -> Result<&[VertexSet]> {
        let n = self.graph.order();
        if n > ALIGNMENT_CAP {
            return Err(Error::Capacity {
                what: "convex set enumeration",
                n,
                cap: ALIGNMENT_CAP,
            });
        }
        Ok(self.convex_sets.get_or_init(|| {
            self.graph
                .vertices()
                .subsets()
                .filter(|&s| self.is_convex(s))
                .collect()
        }))
    }

    pub fn extreme_points(&self, s: VertexSet) -> Result<VertexSet> {
        self.graph.check_set(s)?;
        if !self.is_convex(s) {
            return Err(Error::NotConvex(s.to_string()));
        }
        Ok(s.iter().filter(|&x| self.is_convex(s.without(x))).collect())
    }

    pub fn geometry(&self) -> Result<GeometryVerdict> {
        for &c in self.convex_sets()? {
            let extreme = self.extreme_points(c)?;
            let hull = self.hull(extreme);
            if hull != c {
                return Ok(GeometryVerdict::Counterexample {
                    set: c,
                    extreme,
                    hull,
                });
            }
        }
        Ok(GeometryVerdict::Geometry)
    }

    pub fn is_convex_geometry(&self) -> Result<bool> {
        Ok(self.geometry()?.is_geometry())
    }
}

pub fn is_convex(g: &Graph, kind: ConvexityKind, s: VertexSet) -> Result<bool> {
    g.check_set(s)?;
    Ok(Alignment::new(g, kind)?.is_convex(s))
}

pub fn hull(g: &Graph, kind: ConvexityKind, s: VertexSet) -> Result<VertexSet> {
    g.check_set(s)?;
    Ok(Alignment::new(g, kind)?.hull(s))
}

pub fn convex_sets(g: &Graph, kind: ConvexityKind) -> Result<Vec<VertexSet>> {
    Ok(Alignment::new(g, kind)?.convex_sets()?.to_vec())
}

pub fn extreme_points(g: &Graph, kind: ConvexityKind, s: VertexSet) -> Result<VertexSet> {
    Alignment::new(g, kind)?.extreme_points(s)
}

pub fn is_convex_geometry(g: &Graph, kind: ConvexityKind) -> Result<GeometryVerdict> {
    Alignment::new(g, kind)?.geometry()
}

fn check_member(g: &Graph, s: VertexSet, v: usize) -> Result<()> {
    g.check_set(s)?;
    if !s.contains(v) {
        return Err(Error::NotInSet {
            vertex: v,
            set: s.to_string(),
        });
    }
    Ok(())
}

/// Non-adjacent pairs of neighbours of `v` inside `s`.
fn open_pairs(g: &Graph, s: VertexSet, v: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
    let nb = g.neighbors(v) & s;
    nb.iter().flat_map(move |x| {
        (nb - g.closed_neighbors(x))
            .iter()
            .filter(move |&y| y > x)
            .map(move |y| (x, y))
    })
}

fn is_p4_centre(g: &Graph, s: VertexSet, v: usize) -> bool {
    // x - v - y - z with x ≁ y, and z adjacent to y only.
    let nb = g.neighbors(v) & s;
    nb.iter().any(|x| {
        (nb - g.closed_neighbors(x)).iter().any(|y| {
            let z = g.neighbors(y) & (s - g.closed_neighbors(v) - g.closed_neighbors(x));
            !z.is_empty()
        })
    })
}

/// Claw or paw centred at `v`: three neighbours spanning at most one edge.
fn is_claw_or_paw_centre(g: &Graph, s: VertexSet, v: usize) -> bool {
    let nb = g.neighbors(v) & s;
    nb.k_subsets(3).any(|t| {
        let edges: usize = t.iter().map(|x| (g.neighbors(x) & t).len()).sum::<usize>() / 2;
        edges <= 1
    })
}

/// Every two neighbours of `v` in `<s>` are adjacent.
pub fn is_simplicial(g: &Graph, s: VertexSet, v: usize) -> Result<bool> {
    check_member(g, s, v)?;
    Ok(open_pairs(g, s, v).next().is_none())
}

/// `v` is not a centre vertex of an induced `P4` in `<s>`.
pub fn is_semisimplicial(g: &Graph, s: VertexSet, v: usize) -> Result<bool> {
    check_member(g, s, v)?;
    Ok(!is_p4_centre(g, s, v))
}

/// `v` is not a centre of an induced claw, paw or `P4` in `<s>`.
pub fn is_3ss(g: &Graph, s: VertexSet, v: usize) -> Result<bool> {
    check_member(g, s, v)?;
    Ok(!is_p4_centre(g, s, v) && !is_claw_or_paw_centre(g, s, v))
}

/// Vertices of `s` that are semisimplicial in `<s>`.
pub fn semisimplicial_vertices(g: &Graph, s: VertexSet) -> VertexSet {
    s.iter().filter(|&v| !is_p4_centre(g, s, v)).collect()
}

/// Vertices of `s` that are simplicial in `<s>`.
pub fn simplicial_vertices(g: &Graph, s: VertexSet) -> VertexSet {
    s.iter().filter(|&v| open_pairs(g, s, v).next().is_none()).collect()
}

/// Vertices of `s` that are 3SS in `<s>`.
pub fn three_ss_vertices(g: &Graph, s: VertexSet) -> VertexSet {
    s.iter()
        .filter(|&v| !is_p4_centre(g, s, v) && !is_claw_or_paw_centre(g, s, v))
        .collect()
}

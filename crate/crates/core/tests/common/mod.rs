//! Brute-force oracles that share no code with the library algorithms.

#![allow(dead_code)]

use induced_convexity::{Graph, VertexSet};

pub fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).unwrap()
}

/// Degree of `v` inside `w`.
fn inner_degree(g: &Graph, w: VertexSet, v: usize) -> usize {
    w.iter().filter(|&x| x != v && g.has_edge(v, x)).count()
}

fn connected(g: &Graph, w: VertexSet) -> bool {
    let Some(start) = w.iter().next() else {
        return false;
    };
    let mut seen = vec![start];
    let mut i = 0;
    while i < seen.len() {
        let x = seen[i];
        for y in w.iter() {
            if g.has_edge(x, y) && !seen.contains(&y) {
                seen.push(y);
            }
        }
        i += 1;
    }
    seen.len() == w.len()
}

/// Vertex sets of induced `u`–`v` paths: connected sets in which `u` and `v`
/// have degree one and every other vertex degree two.
pub fn induced_path_sets(g: &Graph, u: usize, v: usize) -> Vec<VertexSet> {
    let n = g.order();
    (0u64..1 << n)
        .map(VertexSet::from_bits)
        .filter(|w| w.contains(u) && w.contains(v))
        .filter(|&w| connected(g, w))
        .filter(|&w| {
            w.iter().all(|x| {
                let d = inner_degree(g, w, x);
                if x == u || x == v {
                    d == 1
                } else {
                    d == 2
                }
            })
        })
        .collect()
}

pub fn m_interval(g: &Graph, u: usize, v: usize) -> VertexSet {
    induced_path_sets(g, u, v)
        .into_iter()
        .fold(VertexSet::EMPTY, |a, w| a | w)
}

/// Induced paths with at least three edges.
pub fn m3_interval(g: &Graph, u: usize, v: usize) -> VertexSet {
    induced_path_sets(g, u, v)
        .into_iter()
        .filter(|w| w.len() >= 4)
        .fold(VertexSet::EMPTY, |a, w| a | w)
}

/// All-pairs distances by Floyd–Warshall.
pub fn distances(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let inf = usize::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
        for v in g.neighbors(u).iter() {
            row[v] = 1;
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

pub fn g_interval(g: &Graph, u: usize, v: usize) -> VertexSet {
    let d = distances(g);
    (0..g.order())
        .filter(|&x| d[u][x] + d[x][v] == d[u][v])
        .collect()
}

/// All injective maps from `p` vertices into `n`, by odometer.
pub fn injections(p: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(p);
    fn go(p: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for x in 0..n {
            if !cur.contains(&x) {
                cur.push(x);
                go(p, n, cur, out);
                cur.pop();
            }
        }
    }
    go(p, n, &mut cur, &mut out);
    out
}

pub fn is_induced_map(host: &Graph, pattern: &Graph, map: &[usize]) -> bool {
    (0..pattern.order()).all(|i| {
        (0..i).all(|j| pattern.has_edge(i, j) == host.has_edge(map[i], map[j]))
    })
}

pub fn brute_contains(host: &Graph, pattern: &Graph) -> bool {
    pattern.order() <= host.order()
        && injections(pattern.order(), host.order())
            .iter()
            .any(|m| is_induced_map(host, pattern, m))
}

/// Every subset of `V`, as bit masks in increasing order.
pub fn all_subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u64..1 << n).map(VertexSet::from_bits)
}

/// Fisher–Yates with a small xorshift so the oracle needs no RNG crate.
pub struct XorShift(pub u64);

impl XorShift {
    pub fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            let j = (self.next() % (i as u64 + 1)) as usize;
            p.swap(i, j);
        }
        p
    }
}

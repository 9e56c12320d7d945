//! Shared fixtures and independent oracles for the integration suites.
//!
//! Everything here recomputes results by a route the library does not use:
//! girth by rooted breadth-first search instead of per-edge deletion,
//! cycle counts by exhaustive edge-subset enumeration instead of path
//! extension, correlations by summing over all two-point assignments, and
//! even subgraphs by filtering all `2^e` subsets instead of combining a
//! cycle-space basis.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};
use std::path::PathBuf;

use num::BigInt;
use strongcommon::graph::{EdgeSubset, Graph};
use strongcommon::rational::Rational;

pub fn paw() -> Graph {
    Graph::new(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap()
}

pub fn petersen() -> Graph {
    Graph::new(
        10,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (0, 4),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
            (5, 7),
            (7, 9),
            (6, 9),
            (6, 8),
            (5, 8),
        ],
    )
    .unwrap()
}

pub fn chorded_c5() -> Graph {
    Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)]).unwrap()
}

pub fn cube() -> Graph {
    Graph::new(
        8,
        [
            (0, 1),
            (1, 2),
            (2, 3),
            (0, 3),
            (4, 5),
            (5, 6),
            (6, 7),
            (4, 7),
            (0, 4),
            (1, 5),
            (2, 6),
            (3, 7),
        ],
    )
    .unwrap()
}

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

/// Loads a graph6 fixture file, one graph per line.
pub fn load_g6_fixture(name: &str) -> Vec<(String, Graph)> {
    let text = std::fs::read_to_string(fixture_path(name))
        .unwrap_or_else(|e| panic!("fixture {name}: {e}"));
    text.lines()
        .filter(|line| !line.trim().is_empty())
        .map(|line| {
            let graph = Graph::parse_graph6(line)
                .unwrap_or_else(|e| panic!("fixture {name} line {line:?}: {e}"));
            (line.to_owned(), graph)
        })
        .collect()
}

/// Independent girth: rooted BFS from every vertex; each non-tree edge
/// closes a walk of length `d(u) + d(v) + 1` which contains a cycle, and
/// roots on a shortest cycle realize its length exactly.
pub fn girth_bfs_oracle(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (index, &(u, v)) in g.edges().iter().enumerate() {
        adjacency[u].push((v, index));
        adjacency[v].push((u, index));
    }
    let mut best: Option<usize> = None;
    for root in 0..n {
        let mut distance = vec![usize::MAX; n];
        let mut parent_edge = vec![usize::MAX; n];
        distance[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(current) = queue.pop_front() {
            for &(next, edge) in &adjacency[current] {
                if distance[next] == usize::MAX {
                    distance[next] = distance[current] + 1;
                    parent_edge[next] = edge;
                    queue.push_back(next);
                }
            }
        }
        for (index, &(u, v)) in g.edges().iter().enumerate() {
            if parent_edge[u] == index || parent_edge[v] == index {
                continue;
            }
            if distance[u] == usize::MAX || distance[v] == usize::MAX {
                continue;
            }
            let candidate = distance[u] + distance[v] + 1;
            if best.is_none_or(|b| candidate < b) {
                best = Some(candidate);
            }
        }
    }
    best
}

/// `true` when the given edges form one cycle: every touched vertex has
/// degree 2 and the edges are connected.
fn edges_form_cycle(edges: &[(usize, usize)]) -> bool {
    let mut degree: HashMap<usize, usize> = HashMap::new();
    for &(u, v) in edges {
        *degree.entry(u).or_insert(0) += 1;
        *degree.entry(v).or_insert(0) += 1;
    }
    if degree.values().any(|&d| d != 2) || degree.len() != edges.len() {
        return false;
    }
    // connectivity over the touched vertices
    let start = edges[0].0;
    let mut reached = vec![start];
    let mut seen: HashSet<usize> = HashSet::from([start]);
    while let Some(current) = reached.pop() {
        for &(u, v) in edges {
            let next = if u == current {
                v
            } else if v == current {
                u
            } else {
                continue;
            };
            if seen.insert(next) {
                reached.push(next);
            }
        }
    }
    seen.len() == degree.len()
}

/// Visits every k-element subset of `0..n` in lexicographic order.
pub fn for_each_combination<F: FnMut(&[usize])>(n: usize, k: usize, mut visit: F) {
    if k > n {
        return;
    }
    let mut indices: Vec<usize> = (0..k).collect();
    loop {
        visit(&indices);
        // advance the rightmost index that can move
        let mut position = k;
        loop {
            if position == 0 {
                return;
            }
            position -= 1;
            if indices[position] != position + n - k {
                break;
            }
        }
        indices[position] += 1;
        for i in position + 1..k {
            indices[i] = indices[i - 1] + 1;
        }
    }
}

/// Independent k-cycle count: exhaustive enumeration of all k-edge
/// subsets, keeping those that form one cycle.
pub fn count_k_cycles_exhaustive(g: &Graph, k: usize) -> u64 {
    if k < 3 {
        return 0;
    }
    let edges = g.edges();
    let mut count = 0;
    for_each_combination(edges.len(), k, |chosen| {
        let subset: Vec<(usize, usize)> = chosen.iter().map(|&i| edges[i]).collect();
        if edges_form_cycle(&subset) {
            count += 1;
        }
    });
    count
}

/// Independent correlation: the expectation of the witness sign product
/// over all `2^v` two-point assignments.
pub fn correlation_brute_force(g: &Graph, subset: &EdgeSubset) -> Rational {
    let v = g.vertex_count();
    assert!(v <= 24, "brute-force correlation is for small graphs");
    let members: Vec<(usize, usize)> = subset.indices().map(|i| g.edges()[i]).collect();
    let mut signed_sum: i64 = 0;
    for assignment in 0u64..1 << v {
        let mut negatives = 0usize;
        for &(a, b) in &members {
            if (assignment >> a & 1) == (assignment >> b & 1) {
                negatives += 1;
            }
        }
        signed_sum += if negatives % 2 == 0 { 1 } else { -1 };
    }
    Rational::new(BigInt::from(signed_sum), BigInt::from(1u64 << v))
}

/// Independent even-subgraph enumeration: filter all `2^e` subsets by the
/// even-degree property. Returns the subsets as bit masks.
pub fn even_subgraph_masks_brute(g: &Graph) -> Vec<u64> {
    let e = g.edge_count();
    assert!(e <= 20, "brute-force even-subgraph scan is for small graphs");
    let mut masks = Vec::new();
    for mask in 0u64..1 << e {
        let mut parity = vec![false; g.vertex_count()];
        for (index, &(u, v)) in g.edges().iter().enumerate() {
            if mask >> index & 1 == 1 {
                parity[u] = !parity[u];
                parity[v] = !parity[v];
            }
        }
        if parity.iter().all(|&p| !p) {
            masks.push(mask);
        }
    }
    masks
}

/// Bit mask of an edge subset (defined for graphs with at most 64 edges).
pub fn subset_mask(subset: &EdgeSubset) -> u64 {
    assert!(subset.bit_len() <= 64);
    subset.indices().fold(0u64, |mask, i| mask | 1 << i)
}

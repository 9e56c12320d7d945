//! Simple undirected labeled graphs and the structural computations the
//! certification layer needs: girth, cycle detection, k-cycle subgraph
//! counting, and GF(2) cycle-space enumeration.
//!
//! Edges are identified by their position in the construction sequence, so
//! an [`EdgeSubset`] is a bitset over edge positions. Even subgraphs (every
//! vertex of even degree) are exactly the elements of the GF(2) cycle
//! space, enumerated as combinations of fundamental cycles of a spanning
//! forest.

use std::collections::HashSet;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Errors constructing a graph from explicit edge data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphBuildError {
    #[error("edge ({u}, {v}) is a loop")]
    LoopEdge { u: usize, v: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("edge ({u}, {v}) has an endpoint outside 0..{vertex_count}")]
    EndpointOutOfRange {
        u: usize,
        v: usize,
        vertex_count: usize,
    },
}

/// Errors in the edge-list text format, each naming the offending line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("empty input: expected a vertex count on the first non-comment line")]
    Empty,
    #[error("line {line}: malformed vertex count {text:?}")]
    BadVertexCount { line: usize, text: String },
    #[error("line {line}: expected two whitespace-separated vertex indices, got {text:?}")]
    MalformedEdge { line: usize, text: String },
    #[error("line {line}: endpoints must satisfy u < v, got {u} {v}")]
    NotAscending { line: usize, u: usize, v: usize },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        source: GraphBuildError,
    },
}

/// Errors in the graph6 bit-packed format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 input")]
    Empty,
    #[error("byte 0x{byte:02x} at position {position} is outside the printable range 63..=126")]
    InvalidByte { position: usize, byte: u8 },
    #[error("truncated input: vertex-count prefix needs {expected} bytes, found {found}")]
    TruncatedHeader { expected: usize, found: usize },
    #[error("truncated bit vector: expected {expected} data bytes for {vertex_count} vertices, found {found}")]
    Truncated {
        vertex_count: usize,
        expected: usize,
        found: usize,
    },
    #[error("{extra} trailing bytes after the bit vector")]
    TrailingData { extra: usize },
    #[error("padding bits after the adjacency data must be zero")]
    NonzeroPadding,
    #[error("vertex count {vertex_count} exceeds the supported maximum {max}")]
    TooLarge { vertex_count: usize, max: usize },
}

/// Refusal to enumerate a cycle space whose dimension exceeds the cap.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error(
    "cycle space dimension {dimension} exceeds the enumeration cap {cap}; \
     use the direct density evaluator instead"
)]
pub struct CycleSpaceCapError {
    pub dimension: usize,
    pub cap: u32,
}

/// Length of a shortest cycle, or `Acyclic` for forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(k) => Some(k),
            Girth::Acyclic => None,
        }
    }

    /// `true` when the graph has a shortest cycle of odd length.
    pub fn is_finite_odd(self) -> bool {
        matches!(self, Girth::Finite(k) if k % 2 == 1)
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(k) => write!(f, "{k}"),
            Girth::Acyclic => write!(f, "acyclic"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(k) => serializer.serialize_u64(*k as u64),
            Girth::Acyclic => serializer.serialize_str("acyclic"),
        }
    }
}

/// A subset of a graph's edges, identified by edge position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeSubset {
    bit_len: usize,
    words: Vec<u64>,
}

impl EdgeSubset {
    pub fn empty(bit_len: usize) -> Self {
        EdgeSubset {
            bit_len,
            words: vec![0; bit_len.div_ceil(64).max(1)],
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(bit_len: usize, indices: I) -> Self {
        let mut subset = EdgeSubset::empty(bit_len);
        for i in indices {
            subset.insert(i);
        }
        subset
    }

    /// Number of edge positions this subset ranges over (e(H) of the owner).
    pub fn bit_len(&self) -> usize {
        self.bit_len
    }

    /// Cardinality |S|.
    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, index: usize) -> bool {
        assert!(index < self.bit_len, "edge index {index} out of range");
        self.words[index / 64] >> (index % 64) & 1 == 1
    }

    pub fn insert(&mut self, index: usize) {
        assert!(index < self.bit_len, "edge index {index} out of range");
        self.words[index / 64] |= 1 << (index % 64);
    }

    /// Symmetric difference in place; the GF(2) sum of two subsets.
    pub fn xor_assign(&mut self, other: &EdgeSubset) {
        assert_eq!(
            self.bit_len, other.bit_len,
            "edge subsets belong to different graphs"
        );
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w ^= o;
        }
    }

    /// Indices of the member edges in increasing order.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let tz = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + tz)
                }
            })
        })
    }
}

/// Simple undirected graph with vertices `0..vertex_count` and a fixed
/// edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph, normalizing each pair to `(min, max)` and rejecting
    /// loops, duplicates and out-of-range endpoints.
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphBuildError> {
        let mut normalized = Vec::new();
        let mut seen = HashSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphBuildError::LoopEdge { u, v });
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(GraphBuildError::EndpointOutOfRange {
                    u,
                    v,
                    vertex_count,
                });
            }
            let pair = (u.min(v), u.max(v));
            if !seen.insert(pair) {
                return Err(GraphBuildError::DuplicateEdge { u, v });
            }
            normalized.push(pair);
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (index, &(u, v)) in normalized.iter().enumerate() {
            adjacency[u].push((v, index));
            adjacency[v].push((u, index));
        }
        Ok(Graph {
            vertex_count,
            edges: normalized,
            adjacency,
        })
    }

    /// The cycle `0-1-…-(n-1)-0`; `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    /// The path on `n` vertices (`n - 1` edges).
    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).unwrap()
    }

    /// The complete bipartite graph with parts of size `a` and `b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Graph::new(a + b, edges).unwrap()
    }

    /// Disjoint union; the second graph's vertices are shifted.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let shift = self.vertex_count;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::new(self.vertex_count + other.vertex_count, edges).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, vertex: usize) -> usize {
        self.adjacency[vertex].len()
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].iter().any(|&(w, _)| w == v)
    }

    /// Parses the edge-list format: first non-comment line is the vertex
    /// count, each following non-empty line is `u v` with `0 <= u < v < n`.
    /// Lines starting with `#` are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self, EdgeListError> {
        let mut vertex_count: Option<usize> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        let mut seen: HashSet<(usize, usize)> = HashSet::new();
        for (index, raw) in text.lines().enumerate() {
            let line = index + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let Some(n) = vertex_count else {
                vertex_count = Some(content.parse().map_err(|_| {
                    EdgeListError::BadVertexCount {
                        line,
                        text: content.to_owned(),
                    }
                })?);
                continue;
            };
            let mut parts = content.split_whitespace();
            let (u, v) = match (parts.next(), parts.next(), parts.next()) {
                (Some(a), Some(b), None) => match (a.parse::<usize>(), b.parse::<usize>()) {
                    (Ok(u), Ok(v)) => (u, v),
                    _ => {
                        return Err(EdgeListError::MalformedEdge {
                            line,
                            text: content.to_owned(),
                        })
                    }
                },
                _ => {
                    return Err(EdgeListError::MalformedEdge {
                        line,
                        text: content.to_owned(),
                    })
                }
            };
            let invalid = |source| EdgeListError::Invalid { line, source };
            if u == v {
                return Err(invalid(GraphBuildError::LoopEdge { u, v }));
            }
            if u > v {
                return Err(EdgeListError::NotAscending { line, u, v });
            }
            if v >= n {
                return Err(invalid(GraphBuildError::EndpointOutOfRange {
                    u,
                    v,
                    vertex_count: n,
                }));
            }
            if !seen.insert((u, v)) {
                return Err(invalid(GraphBuildError::DuplicateEdge { u, v }));
            }
            edges.push((u, v));
        }
        match vertex_count {
            Some(n) => Ok(Graph::new(n, edges).expect("edge list was validated line by line")),
            None => Err(EdgeListError::Empty),
        }
    }

    /// Decodes the standard printable graph6 encoding.
    pub fn parse_graph6(text: &str) -> Result<Self, Graph6Error> {
        const MAX_VERTICES: usize = 100_000;
        let trimmed = text.trim();
        let trimmed = trimmed.strip_prefix(">>graph6<<").unwrap_or(trimmed);
        if trimmed.is_empty() {
            return Err(Graph6Error::Empty);
        }
        let bytes = trimmed.as_bytes();
        for (position, &byte) in bytes.iter().enumerate() {
            if !(63..=126).contains(&byte) {
                return Err(Graph6Error::InvalidByte { position, byte });
            }
        }
        // Vertex-count prefix: one byte below 63 vertices, '~' + 3 bytes up
        // to 258047, '~~' + 6 bytes beyond.
        let (vertex_count, data_start) = if bytes[0] == 126 {
            if bytes.len() >= 2 && bytes[1] == 126 {
                if bytes.len() < 8 {
                    return Err(Graph6Error::TruncatedHeader {
                        expected: 8,
                        found: bytes.len(),
                    });
                }
                let mut n = 0usize;
                for &b in &bytes[2..8] {
                    n = n << 6 | (b - 63) as usize;
                }
                (n, 8)
            } else {
                if bytes.len() < 4 {
                    return Err(Graph6Error::TruncatedHeader {
                        expected: 4,
                        found: bytes.len(),
                    });
                }
                let mut n = 0usize;
                for &b in &bytes[1..4] {
                    n = n << 6 | (b - 63) as usize;
                }
                (n, 4)
            }
        } else {
            ((bytes[0] - 63) as usize, 1)
        };
        if vertex_count > MAX_VERTICES {
            return Err(Graph6Error::TooLarge {
                vertex_count,
                max: MAX_VERTICES,
            });
        }
        let bit_count = vertex_count * vertex_count.saturating_sub(1) / 2;
        let expected = bit_count.div_ceil(6);
        let found = bytes.len() - data_start;
        if found < expected {
            return Err(Graph6Error::Truncated {
                vertex_count,
                expected,
                found,
            });
        }
        if found > expected {
            return Err(Graph6Error::TrailingData {
                extra: found - expected,
            });
        }
        let data = &bytes[data_start..];
        let bit = |i: usize| (data[i / 6] - 63) >> (5 - i % 6) & 1 == 1;
        let mut edges = Vec::new();
        let mut cursor = 0;
        for v in 1..vertex_count {
            for u in 0..v {
                if bit(cursor) {
                    edges.push((u, v));
                }
                cursor += 1;
            }
        }
        for i in bit_count..expected * 6 {
            if bit(i) {
                return Err(Graph6Error::NonzeroPadding);
            }
        }
        Ok(Graph::new(vertex_count, edges).expect("graph6 bits cannot encode loops or duplicates"))
    }

    /// Encodes into the standard graph6 form (shortest vertex-count prefix,
    /// zero padding). Inverse of [`Graph::parse_graph6`].
    pub fn to_graph6(&self) -> String {
        let n = self.vertex_count;
        let mut out: Vec<u8> = Vec::new();
        if n < 63 {
            out.push(n as u8 + 63);
        } else if n <= 258_047 {
            out.push(126);
            for shift in [12, 6, 0] {
                out.push((n >> shift & 0x3f) as u8 + 63);
            }
        } else {
            out.push(126);
            out.push(126);
            for shift in [30, 24, 18, 12, 6, 0] {
                out.push((n >> shift & 0x3f) as u8 + 63);
            }
        }
        let mut matrix = vec![false; n * n];
        for &(u, v) in &self.edges {
            matrix[u * n + v] = true;
            matrix[v * n + u] = true;
        }
        let mut accumulator = 0u8;
        let mut filled = 0u8;
        for v in 1..n {
            for u in 0..v {
                accumulator = accumulator << 1 | matrix[u * n + v] as u8;
                filled += 1;
                if filled == 6 {
                    out.push(accumulator + 63);
                    accumulator = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push((accumulator << (6 - filled)) + 63);
        }
        String::from_utf8(out).expect("graph6 bytes are printable ASCII")
    }

    /// Exact girth by shortest-path search: for each edge, the shortest
    /// alternative path between its endpoints closes a minimal cycle
    /// through that edge.
    pub fn girth(&self) -> Girth {
        let mut best: Option<usize> = None;
        for (skip, &(u, v)) in self.edges.iter().enumerate() {
            if let Some(distance) = self.distance_avoiding_edge(u, v, skip) {
                let cycle_len = distance + 1;
                if best.is_none_or(|b| cycle_len < b) {
                    best = Some(cycle_len);
                }
            }
        }
        match best {
            Some(k) => Girth::Finite(k),
            None => Girth::Acyclic,
        }
    }

    fn distance_avoiding_edge(&self, from: usize, to: usize, skip: usize) -> Option<usize> {
        let mut distance = vec![usize::MAX; self.vertex_count];
        let mut queue = std::collections::VecDeque::new();
        distance[from] = 0;
        queue.push_back(from);
        while let Some(current) = queue.pop_front() {
            if current == to {
                return Some(distance[current]);
            }
            for &(next, edge) in &self.adjacency[current] {
                if edge != skip && distance[next] == usize::MAX {
                    distance[next] = distance[current] + 1;
                    queue.push_back(next);
                }
            }
        }
        None
    }

    /// `true` iff the graph is a single cycle: connected, 2-regular, at
    /// least 3 vertices.
    pub fn is_cycle(&self) -> bool {
        self.vertex_count >= 3
            && self.component_count() == 1
            && (0..self.vertex_count).all(|v| self.degree(v) == 2)
    }

    /// `true` when the certification witness applies: finite odd girth and
    /// at least one edge beyond a shortest cycle. The edge-count condition
    /// subsumes "not a cycle" and also excludes cycles padded with isolated
    /// vertices, whose densities coincide with the bare cycle's.
    pub fn witness_applicable(&self) -> bool {
        match self.girth() {
            Girth::Finite(k) => k % 2 == 1 && self.edges.len() > k,
            Girth::Acyclic => false,
        }
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.vertex_count];
        let mut components = 0;
        for start in 0..self.vertex_count {
            if seen[start] {
                continue;
            }
            components += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(current) = stack.pop() {
                for &(next, _) in &self.adjacency[current] {
                    if !seen[next] {
                        seen[next] = true;
                        stack.push(next);
                    }
                }
            }
        }
        components
    }

    /// Number of edge subsets that form a cycle of length exactly `k`
    /// (unlabeled copies of C_k as subgraphs).
    pub fn count_k_cycle_subsets(&self, k: usize) -> u64 {
        if k < 3 || k > self.vertex_count {
            return 0;
        }
        let mut on_path = vec![false; self.vertex_count];
        let mut doubled = 0u64;
        for root in 0..self.vertex_count {
            on_path[root] = true;
            self.extend_cycle(root, root, k - 1, &mut on_path, &mut doubled);
            on_path[root] = false;
        }
        // Each cycle is traced once per direction from its smallest vertex.
        doubled / 2
    }

    fn extend_cycle(
        &self,
        root: usize,
        current: usize,
        remaining: usize,
        on_path: &mut [bool],
        found: &mut u64,
    ) {
        if remaining == 0 {
            if self.are_adjacent(current, root) {
                *found += 1;
            }
            return;
        }
        for &(next, _) in &self.adjacency[current] {
            if next > root && !on_path[next] {
                on_path[next] = true;
                self.extend_cycle(root, next, remaining - 1, on_path, found);
                on_path[next] = false;
            }
        }
    }

    /// Degrees induced by an edge subset.
    pub fn subset_degrees(&self, subset: &EdgeSubset) -> Vec<usize> {
        assert_eq!(subset.bit_len(), self.edges.len());
        let mut degrees = vec![0; self.vertex_count];
        for index in subset.indices() {
            let (u, v) = self.edges[index];
            degrees[u] += 1;
            degrees[v] += 1;
        }
        degrees
    }

    /// `true` when every vertex meets the subset in an even number of edges.
    pub fn subset_is_even(&self, subset: &EdgeSubset) -> bool {
        self.subset_degrees(subset).iter().all(|d| d % 2 == 0)
    }

    /// `true` when the subset's edges form a single cycle: nonempty, every
    /// touched vertex of degree exactly 2, and connected.
    pub fn subset_is_cycle(&self, subset: &EdgeSubset) -> bool {
        let size = subset.count();
        if size < 3 {
            return false;
        }
        let degrees = self.subset_degrees(subset);
        if degrees.iter().any(|&d| d != 0 && d != 2) {
            return false;
        }
        // Walk the cycle from any member edge; it must close after `size`
        // steps having visited every member.
        let first = subset.indices().next().expect("nonempty");
        let start = self.edges[first].0;
        let mut visited_edges = 0;
        let mut previous_edge = usize::MAX;
        let mut current = start;
        loop {
            let &(next, edge) = self.adjacency[current]
                .iter()
                .find(|&&(_, e)| subset.contains(e) && e != previous_edge)
                .expect("degree-2 vertex has a continuation");
            visited_edges += 1;
            previous_edge = edge;
            current = next;
            if current == start {
                break;
            }
        }
        visited_edges == size
    }

    /// Fundamental cycles of a breadth-first spanning forest, in the edge
    /// order of the non-tree edges. Length is `e - v + c`.
    pub fn cycle_space_basis(&self) -> Vec<EdgeSubset> {
        let n = self.vertex_count;
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; n]; // (vertex, edge)
        let mut depth = vec![0usize; n];
        let mut seen = vec![false; n];
        let mut in_tree = vec![false; self.edges.len()];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(current) = queue.pop_front() {
                for &(next, edge) in &self.adjacency[current] {
                    if !seen[next] {
                        seen[next] = true;
                        parent[next] = Some((current, edge));
                        depth[next] = depth[current] + 1;
                        in_tree[edge] = true;
                        queue.push_back(next);
                    }
                }
            }
        }
        let mut basis = Vec::new();
        for (index, &(u, v)) in self.edges.iter().enumerate() {
            if in_tree[index] {
                continue;
            }
            let mut subset = EdgeSubset::empty(self.edges.len());
            subset.insert(index);
            let (mut a, mut b) = (u, v);
            while depth[a] > depth[b] {
                let (up, edge) = parent[a].expect("deeper vertex has a parent");
                subset.insert(edge);
                a = up;
            }
            while depth[b] > depth[a] {
                let (up, edge) = parent[b].expect("deeper vertex has a parent");
                subset.insert(edge);
                b = up;
            }
            while a != b {
                let (ua, ea) = parent[a].expect("vertices meet at an ancestor");
                let (ub, eb) = parent[b].expect("vertices meet at an ancestor");
                subset.insert(ea);
                subset.insert(eb);
                a = ua;
                b = ub;
            }
            basis.push(subset);
        }
        basis
    }

    /// Streams all `2^dim` even subgraphs as GF(2) combinations of the
    /// cycle-space basis. Refuses when the dimension exceeds `max_dimension`.
    pub fn even_subgraphs(&self, max_dimension: u32) -> Result<EvenSubgraphs, CycleSpaceCapError> {
        let basis = self.cycle_space_basis();
        if basis.len() > max_dimension as usize {
            return Err(CycleSpaceCapError {
                dimension: basis.len(),
                cap: max_dimension,
            });
        }
        Ok(EvenSubgraphs {
            current: EdgeSubset::empty(self.edges.len()),
            total: 1u64 << basis.len(),
            index: 0,
            basis,
        })
    }

    /// Visits every even subgraph without allocating per item.
    pub fn visit_even_subgraphs<F: FnMut(&EdgeSubset)>(
        &self,
        max_dimension: u32,
        mut visit: F,
    ) -> Result<(), CycleSpaceCapError> {
        let mut stream = self.even_subgraphs(max_dimension)?;
        loop {
            match stream.step() {
                Some(subset) => visit(subset),
                None => return Ok(()),
            }
        }
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("Graph", 2)?;
        state.serialize_field("vertex_count", &self.vertex_count)?;
        state.serialize_field("edges", &self.edges)?;
        state.end()
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            vertex_count: usize,
            edges: Vec<(usize, usize)>,
        }
        let repr = Repr::deserialize(deserializer)?;
        Graph::new(repr.vertex_count, repr.edges).map_err(serde::de::Error::custom)
    }
}

/// Iterator over all even subgraphs, in Gray-code order so consecutive
/// subsets differ by one basis cycle.
#[derive(Debug)]
pub struct EvenSubgraphs {
    basis: Vec<EdgeSubset>,
    current: EdgeSubset,
    index: u64,
    total: u64,
}

impl EvenSubgraphs {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    fn step(&mut self) -> Option<&EdgeSubset> {
        if self.index == self.total {
            return None;
        }
        if self.index > 0 {
            let flip = self.index.trailing_zeros() as usize;
            self.current.xor_assign(&self.basis[flip]);
        }
        self.index += 1;
        Some(&self.current)
    }
}

impl Iterator for EvenSubgraphs {
    type Item = EdgeSubset;

    fn next(&mut self) -> Option<EdgeSubset> {
        self.step().cloned()
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let remaining = (self.total - self.index) as usize;
        (remaining, Some(remaining))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Triangle {0,1,2} plus the pendant edge {2,3}.
    pub(crate) fn paw() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap()
    }

    pub(crate) fn petersen() -> Graph {
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

    #[test]
    fn build_rejects_invalid_edges() {
        assert_eq!(
            Graph::new(3, [(1, 1)]).unwrap_err(),
            GraphBuildError::LoopEdge { u: 1, v: 1 }
        );
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]).unwrap_err(),
            GraphBuildError::DuplicateEdge { u: 1, v: 0 }
        );
        assert_eq!(
            Graph::new(3, [(0, 3)]).unwrap_err(),
            GraphBuildError::EndpointOutOfRange {
                u: 0,
                v: 3,
                vertex_count: 3
            }
        );
    }

    #[test]
    fn edge_list_parses_paw() {
        let g = Graph::parse_edge_list("4\n0 1\n1 2\n0 2\n2 3\n").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        assert_eq!(g, paw());
    }

    #[test]
    fn edge_list_accepts_comments_and_blank_lines() {
        let g = Graph::parse_edge_list("# a triangle\n3\n\n0 1\n# middle\n1 2\n0 2\n").unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn edge_list_single_vertex() {
        let g = Graph::parse_edge_list("1\n").unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn edge_list_errors_name_the_line() {
        assert_eq!(
            Graph::parse_edge_list("3\n0 1\n0 1\n").unwrap_err(),
            EdgeListError::Invalid {
                line: 3,
                source: GraphBuildError::DuplicateEdge { u: 0, v: 1 }
            }
        );
        assert_eq!(
            Graph::parse_edge_list("3\n2 2\n").unwrap_err(),
            EdgeListError::Invalid {
                line: 2,
                source: GraphBuildError::LoopEdge { u: 2, v: 2 }
            }
        );
        assert_eq!(
            Graph::parse_edge_list("3\n1 0\n").unwrap_err(),
            EdgeListError::NotAscending { line: 2, u: 1, v: 0 }
        );
        assert_eq!(
            Graph::parse_edge_list("3\n0 5\n").unwrap_err(),
            EdgeListError::Invalid {
                line: 2,
                source: GraphBuildError::EndpointOutOfRange {
                    u: 0,
                    v: 5,
                    vertex_count: 3
                }
            }
        );
        assert!(matches!(
            Graph::parse_edge_list("3\n0 1 2\n"),
            Err(EdgeListError::MalformedEdge { line: 2, .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("x\n"),
            Err(EdgeListError::BadVertexCount { line: 1, .. })
        ));
        assert_eq!(
            Graph::parse_edge_list("# nothing\n").unwrap_err(),
            EdgeListError::Empty
        );
    }

    #[test]
    fn graph6_decodes_triangle() {
        let g = Graph::parse_graph6("Bw").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn graph6_decodes_star() {
        // Decoded independently: 5 vertices, all edges into vertex 4.
        let g = Graph::parse_graph6("D?{").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edges(), &[(0, 4), (1, 4), (2, 4), (3, 4)]);
    }

    #[test]
    fn graph6_rejects_bad_input() {
        assert_eq!(Graph::parse_graph6("").unwrap_err(), Graph6Error::Empty);
        assert!(matches!(
            Graph::parse_graph6("B\u{7f}"),
            Err(Graph6Error::InvalidByte { position: 1, .. })
        ));
        assert!(matches!(
            Graph::parse_graph6("D?"),
            Err(Graph6Error::Truncated { .. })
        ));
        assert!(matches!(
            Graph::parse_graph6("Bww"),
            Err(Graph6Error::TrailingData { extra: 1 })
        ));
    }

    #[test]
    fn graph6_round_trips_known_graphs() {
        // Encodings produced by an independent encoder.
        assert_eq!(paw().to_graph6(), "Cx");
        assert_eq!(petersen().to_graph6(), "IheA@GUAo");
        assert_eq!(Graph::complete(12).to_graph6(), "K~~~~~~~~~~~");
        for g6 in ["Bw", "D?{", "Cx", "IheA@GUAo", "?", "@", "A?", "A_"] {
            assert_eq!(Graph::parse_graph6(g6).unwrap().to_graph6(), g6);
        }
    }

    #[test]
    fn girth_of_fixtures() {
        assert_eq!(Graph::cycle(5).girth(), Girth::Finite(5));
        assert_eq!(paw().girth(), Girth::Finite(3));
        assert_eq!(Graph::path(4).girth(), Girth::Acyclic);
        assert_eq!(petersen().girth(), Girth::Finite(5));
        assert_eq!(Graph::complete_bipartite(3, 3).girth(), Girth::Finite(4));
        assert_eq!(Graph::new(1, []).unwrap().girth(), Girth::Acyclic);
    }

    #[test]
    fn cycle_detection() {
        assert!(Graph::cycle(5).is_cycle());
        assert!(!paw().is_cycle());
        let two_triangles = Graph::cycle(3).disjoint_union(&Graph::cycle(3));
        assert!(!two_triangles.is_cycle());
        assert!(two_triangles.witness_applicable());
        assert!(paw().witness_applicable());
        assert!(!Graph::cycle(5).witness_applicable());
        // Even girth: C4 with a pendant edge.
        let c4_pendant = Graph::new(5, [(0, 1), (1, 2), (2, 3), (0, 3), (3, 4)]).unwrap();
        assert!(!c4_pendant.witness_applicable());
        // A padded cycle is density-equivalent to the bare cycle.
        let padded = Graph::new(4, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!padded.is_cycle());
        assert!(!padded.witness_applicable());
    }

    #[test]
    fn k_cycle_counts() {
        assert_eq!(paw().count_k_cycle_subsets(3), 1);
        assert_eq!(Graph::complete(4).count_k_cycle_subsets(3), 4);
        assert_eq!(Graph::complete(4).count_k_cycle_subsets(4), 3);
        // Computed by exhaustive subset enumeration before this was built.
        assert_eq!(petersen().count_k_cycle_subsets(5), 12);
        assert_eq!(petersen().count_k_cycle_subsets(6), 10);
        assert_eq!(petersen().count_k_cycle_subsets(3), 0);
        assert_eq!(Graph::path(6).count_k_cycle_subsets(3), 0);
    }

    #[test]
    fn basis_dimensions() {
        assert_eq!(Graph::cycle(5).cycle_space_basis().len(), 1);
        assert_eq!(Graph::path(4).cycle_space_basis().len(), 0);
        assert_eq!(petersen().cycle_space_basis().len(), 6);
        let two_triangles = Graph::cycle(3).disjoint_union(&Graph::cycle(3));
        assert_eq!(two_triangles.cycle_space_basis().len(), 2);
        for subset in Graph::complete(5).cycle_space_basis() {
            assert!(Graph::complete(5).subset_is_even(&subset));
        }
    }

    #[test]
    fn even_subgraphs_of_small_graphs() {
        let c5 = Graph::cycle(5);
        let all: Vec<_> = c5.even_subgraphs(30).unwrap().collect();
        assert_eq!(all.len(), 2);
        assert!(all.iter().any(|s| s.is_empty()));
        assert!(all.iter().any(|s| s.count() == 5));

        let paw = paw();
        let sizes: Vec<_> = paw
            .even_subgraphs(30)
            .unwrap()
            .map(|s| s.count())
            .collect();
        assert_eq!(sizes.len(), 2);
        assert!(sizes.contains(&0) && sizes.contains(&3));

        // K4: empty, four triangles, three 4-cycles.
        let k4 = Graph::complete(4);
        let mut sizes: Vec<_> = k4.even_subgraphs(30).unwrap().map(|s| s.count()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![0, 3, 3, 3, 3, 4, 4, 4]);
        for s in k4.even_subgraphs(30).unwrap() {
            assert!(k4.subset_is_even(&s));
        }
    }

    #[test]
    fn even_subgraph_cap_refusal() {
        let err = Graph::complete(8).even_subgraphs(10).unwrap_err();
        assert_eq!(err.dimension, 28 - 8 + 1);
        assert_eq!(err.cap, 10);
    }

    #[test]
    fn subset_cycle_recognition() {
        let g = petersen();
        let outer = EdgeSubset::from_indices(15, 0..5);
        assert!(g.subset_is_cycle(&outer));
        let two = Graph::cycle(3).disjoint_union(&Graph::cycle(3));
        let both = EdgeSubset::from_indices(6, 0..6);
        assert!(two.subset_is_even(&both));
        assert!(!two.subset_is_cycle(&both));
        let path_pair = EdgeSubset::from_indices(15, [0, 1]);
        assert!(!g.subset_is_cycle(&path_pair));
    }
}

//! Undirected and directed graphs over dense 0-based vertex ids, with the
//! distance and neighborhood primitives the solvers are built on.
//!
//! The text format (see [`Graph::parse`]) uses 1-based ids; everything in
//! memory is 0-based.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = u32;

/// Sorted set of vertex ids.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet {
    items: Vec<Vertex>,
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet { items: Vec::new() }
    }

    pub fn from_iter(iter: impl IntoIterator<Item = Vertex>) -> Self {
        let mut items: Vec<Vertex> = iter.into_iter().collect();
        items.sort_unstable();
        items.dedup();
        VertexSet { items }
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet { items: vec![v] }
    }

    pub fn full(n: usize) -> Self {
        VertexSet {
            items: (0..n as Vertex).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.items.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        match self.items.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.items.insert(pos, v);
                true
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.items.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.items
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut items = Vec::with_capacity(self.items.len() + other.items.len());
        let (mut i, mut j) = (0, 0);
        while i < self.items.len() && j < other.items.len() {
            match self.items[i].cmp(&other.items[j]) {
                std::cmp::Ordering::Less => {
                    items.push(self.items[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    items.push(other.items[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    items.push(self.items[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        items.extend_from_slice(&self.items[i..]);
        items.extend_from_slice(&other.items[j..]);
        VertexSet { items }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.items.iter().all(|&v| other.contains(v))
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.items.iter().any(|&v| other.contains(v))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.items.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<T: IntoIterator<Item = Vertex>>(iter: T) -> Self {
        VertexSet::from_iter(iter)
    }
}

/// Ordered tuple of vertices, repeats allowed.
pub type VertexTuple = Vec<Vertex>;

/// Distance in hops, or unreachable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distance {
    Finite(u32),
    Infinite,
}

impl Distance {
    pub fn le(self, r: u32) -> bool {
        match self {
            Distance::Finite(d) => d <= r,
            Distance::Infinite => false,
        }
    }
}

/// Undirected simple graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
}

/// Result of parsing a graph file: the graph plus any non-fatal warnings.
#[derive(Debug)]
pub struct LoadedGraph {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

impl Graph {
    /// Builds a graph from an edge list. Rejects self-loops and out-of-range
    /// ids; duplicate edges are collapsed.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        let mut canon: Vec<(Vertex, Vertex)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u as usize >= n {
                return Err(Error::VertexOutOfRange { id: u as usize, n });
            }
            if v as usize >= n {
                return Err(Error::VertexOutOfRange { id: v as usize, n });
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {}", u + 1)));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        canon.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &canon {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: canon,
            adj,
        })
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n as Vertex).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<_> = (1..n as Vertex).map(|v| (v - 1, v)).collect();
        edges.push((0, n as Vertex - 1));
        Graph::new(n, &edges).unwrap()
    }

    /// Star with center 0.
    pub fn star(n: usize) -> Graph {
        let edges: Vec<_> = (1..n as Vertex).map(|v| (0, v)).collect();
        Graph::new(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n as Vertex {
            for v in u + 1..n as Vertex {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    /// Parses the line-oriented text format: `c` comments, one `p <n> <m>`
    /// header, then `m` lines `e <u> <v>` with 1-based ids.
    pub fn parse(text: &str) -> Result<LoadedGraph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
        let mut warnings = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim_end_matches('\r').trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let mut parts = line.split_whitespace();
            match parts.next() {
                Some("p") => {
                    if header.is_some() {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: "duplicate header".into(),
                        });
                    }
                    let n: usize = parse_field(parts.next(), line_no, "vertex count")?;
                    let m: usize = parse_field(parts.next(), line_no, "edge count")?;
                    if n == 0 {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: "vertex count must be at least 1".into(),
                        });
                    }
                    header = Some((n, m));
                }
                Some("e") => {
                    let (n, _) = header.ok_or(Error::Parse {
                        line: line_no,
                        msg: "edge before header".into(),
                    })?;
                    let u: usize = parse_field(parts.next(), line_no, "endpoint")?;
                    let v: usize = parse_field(parts.next(), line_no, "endpoint")?;
                    if u == 0 || u > n || v == 0 || v > n {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("vertex id out of range 1..{}", n),
                        });
                    }
                    if u == v {
                        return Err(Error::Parse {
                            line: line_no,
                            msg: format!("self-loop at vertex {}", u),
                        });
                    }
                    let e = ((u - 1).min(v - 1) as Vertex, (u - 1).max(v - 1) as Vertex);
                    if !seen.insert(e) {
                        warnings.push(format!("line {}: duplicate edge {} {}", line_no, u, v));
                    } else {
                        edges.push(e);
                    }
                }
                Some(other) => {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("unknown line kind '{}'", other),
                    });
                }
                None => unreachable!(),
            }
        }
        let (n, m) = header.ok_or(Error::Parse {
            line: 0,
            msg: "missing header".into(),
        })?;
        if edges.len() + warnings.len() != m {
            return Err(Error::Parse {
                line: 0,
                msg: format!("expected {} edge lines, found {}", m, edges.len() + warnings.len()),
            });
        }
        Ok(LoadedGraph {
            graph: Graph::new(n, &edges)?,
            warnings,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v as usize]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if (v as usize) < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                id: v as usize,
                n: self.n,
            })
        }
    }

    /// BFS hop distances from `src`; `u32::MAX` marks unreachable.
    fn bfs(&self, src: Vertex) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.n];
        dist[src as usize] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &w in self.neighbors(u) {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = dist[u as usize] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: Vertex, v: Vertex) -> Result<Distance> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let d = self.bfs(u)[v as usize];
        Ok(if d == u32::MAX {
            Distance::Infinite
        } else {
            Distance::Finite(d)
        })
    }

    /// All-pairs BFS distances; `u32::MAX` marks unreachable.
    pub fn all_distances(&self) -> Vec<Vec<u32>> {
        (0..self.n as Vertex).map(|v| self.bfs(v)).collect()
    }

    /// Vertices at hop distance at most `r` from some entry of the tuple.
    pub fn neighborhood(&self, tuple: &[Vertex], r: u32) -> Result<VertexSet> {
        for &v in tuple {
            self.check_vertex(v)?;
        }
        let mut dist = vec![u32::MAX; self.n];
        let mut queue = VecDeque::new();
        for &v in tuple {
            if dist[v as usize] != 0 {
                dist[v as usize] = 0;
                queue.push_back(v);
            }
        }
        let mut out = Vec::new();
        while let Some(u) = queue.pop_front() {
            if dist[u as usize] >= r {
                continue;
            }
            for &w in self.neighbors(u) {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = dist[u as usize] + 1;
                    queue.push_back(w);
                }
            }
        }
        for v in 0..self.n {
            if dist[v] != u32::MAX {
                out.push(v as Vertex);
            }
        }
        Ok(VertexSet::from_iter(out))
    }

    /// Subgraph induced by `s`, plus the map from new ids to original ids.
    /// New ids follow the sorted order of `s`.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<Vertex>)> {
        for v in s.iter() {
            self.check_vertex(v)?;
        }
        let back: Vec<Vertex> = s.iter().collect();
        let mut fwd = vec![u32::MAX; self.n];
        for (new, &old) in back.iter().enumerate() {
            fwd[old as usize] = new as Vertex;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if fwd[u as usize] != u32::MAX && fwd[v as usize] != u32::MAX {
                edges.push((fwd[u as usize], fwd[v as usize]));
            }
        }
        Ok((Graph::new(back.len(), &edges)?, back))
    }

    /// Orientation by repeated min-degree peeling (ties toward the lowest
    /// id). Arcs point from the later-peeled endpoint to the earlier-peeled
    /// one, so the maximum in-degree equals the degeneracy.
    pub fn degeneracy_orientation(&self) -> DirectedGraph {
        let mut deg: Vec<usize> = (0..self.n).map(|v| self.adj[v].len()).collect();
        let mut removed = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            let mut best: Option<Vertex> = None;
            for v in 0..self.n {
                if !removed[v] && best.map_or(true, |b| deg[v] < deg[b as usize]) {
                    best = Some(v as Vertex);
                }
            }
            let v = best.unwrap();
            removed[v as usize] = true;
            order.push(v);
            for &w in self.neighbors(v) {
                if !removed[w as usize] {
                    deg[w as usize] -= 1;
                }
            }
        }
        let mut rank = vec![0usize; self.n];
        for (i, &v) in order.iter().enumerate() {
            rank[v as usize] = i;
        }
        let arcs: Vec<(Vertex, Vertex)> = self
            .edges
            .iter()
            .map(|&(u, v)| {
                if rank[u as usize] < rank[v as usize] {
                    (v, u)
                } else {
                    (u, v)
                }
            })
            .collect();
        DirectedGraph::new(self.n, &arcs).unwrap()
    }
}

fn parse_field<T: std::str::FromStr>(
    field: Option<&str>,
    line: usize,
    what: &str,
) -> Result<T> {
    field
        .ok_or(Error::Parse {
            line,
            msg: format!("missing {}", what),
        })?
        .parse()
        .map_err(|_| Error::Parse {
            line,
            msg: format!("bad {}", what),
        })
}

/// Directed simple graph. In-neighbor lists are kept sorted by tail id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedGraph {
    n: usize,
    arcs: Vec<(Vertex, Vertex)>,
    in_adj: Vec<Vec<Vertex>>,
    out_adj: Vec<Vec<Vertex>>,
}

impl DirectedGraph {
    pub fn new(n: usize, arcs: &[(Vertex, Vertex)]) -> Result<DirectedGraph> {
        let mut canon: Vec<(Vertex, Vertex)> = Vec::with_capacity(arcs.len());
        for &(u, v) in arcs {
            if u as usize >= n {
                return Err(Error::VertexOutOfRange { id: u as usize, n });
            }
            if v as usize >= n {
                return Err(Error::VertexOutOfRange { id: v as usize, n });
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {}", u + 1)));
            }
            canon.push((u, v));
        }
        canon.sort_unstable();
        canon.dedup();
        let mut in_adj = vec![Vec::new(); n];
        let mut out_adj = vec![Vec::new(); n];
        for &(u, v) in &canon {
            in_adj[v as usize].push(u);
            out_adj[u as usize].push(v);
        }
        for list in in_adj.iter_mut().chain(out_adj.iter_mut()) {
            list.sort_unstable();
        }
        Ok(DirectedGraph {
            n,
            arcs: canon,
            in_adj,
            out_adj,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(Vertex, Vertex)] {
        &self.arcs
    }

    pub fn has_arc(&self, u: Vertex, v: Vertex) -> bool {
        self.arcs.binary_search(&(u, v)).is_ok()
    }

    pub fn in_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.in_adj[v as usize]
    }

    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out_adj[v as usize]
    }

    pub fn max_in_degree(&self) -> usize {
        self.in_adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_supergraph_of(&self, other: &DirectedGraph) -> bool {
        self.n == other.n && other.arcs.iter().all(|&(u, v)| self.has_arc(u, v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn p4() -> Graph {
        Graph::path(4)
    }

    #[test]
    fn parse_path() {
        let loaded =
            Graph::parse("c a path\np 4 3\ne 1 2\ne 2 3\ne 3 4\n").unwrap();
        assert_eq!(loaded.graph, p4());
        assert!(loaded.warnings.is_empty());
    }

    #[test]
    fn parse_single_vertex() {
        let loaded = Graph::parse("p 1 0").unwrap();
        assert_eq!(loaded.graph.n(), 1);
        assert_eq!(loaded.graph.m(), 0);
    }

    #[test]
    fn parse_triangle() {
        let loaded = Graph::parse("p 3 3\ne 1 2\ne 2 3\ne 1 3").unwrap();
        assert_eq!(loaded.graph, Graph::complete(3));
    }

    #[test]
    fn parse_crlf() {
        let loaded = Graph::parse("p 2 1\r\ne 1 2\r\n").unwrap();
        assert_eq!(loaded.graph.m(), 1);
    }

    #[test]
    fn parse_duplicate_edge_warns() {
        let loaded = Graph::parse("p 3 3\ne 1 2\ne 2 1\ne 2 3").unwrap();
        assert_eq!(loaded.graph.m(), 2);
        assert_eq!(loaded.warnings.len(), 1);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Graph::parse("p 2 1\ne 1 3"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(Graph::parse("e 1 2\np 2 1").is_err());
        assert!(Graph::parse("p 2 1\ne 1 1").is_err());
        assert!(Graph::parse("p 0 0").is_err());
    }

    #[test]
    fn distance_path() {
        let g = p4();
        assert_eq!(g.distance(0, 3).unwrap(), Distance::Finite(3));
        assert_eq!(g.distance(2, 2).unwrap(), Distance::Finite(0));
    }

    #[test]
    fn distance_disconnected() {
        let g = Graph::new(2, &[]).unwrap();
        assert_eq!(g.distance(0, 1).unwrap(), Distance::Infinite);
    }

    #[test]
    fn distance_invalid_id() {
        assert!(p4().distance(0, 9).is_err());
    }

    #[test]
    fn neighborhood_examples() {
        let g = p4();
        assert_eq!(
            g.neighborhood(&[1], 1).unwrap(),
            VertexSet::from_iter([0, 1, 2])
        );
        assert_eq!(
            g.neighborhood(&[2], 0).unwrap(),
            VertexSet::singleton(2)
        );
        // both endpoints of the path, radius 1, covers everything
        assert_eq!(
            g.neighborhood(&[0, 3], 1).unwrap(),
            VertexSet::full(4)
        );
    }

    #[test]
    fn induced_subgraph_cases() {
        let g = p4();
        let (sub, back) = g
            .induced_subgraph(&VertexSet::from_iter([0, 1, 2]))
            .unwrap();
        assert_eq!(sub, Graph::path(3));
        assert_eq!(back, vec![0, 1, 2]);

        let (same, _) = g.induced_subgraph(&VertexSet::full(4)).unwrap();
        assert_eq!(same, g);

        let k3 = Graph::complete(3);
        let (e, _) = k3.induced_subgraph(&VertexSet::from_iter([0, 2])).unwrap();
        assert_eq!(e.m(), 1);
    }

    /// Independent degeneracy computation: smallest d such that repeatedly
    /// deleting vertices of degree at most d empties the graph.
    fn degeneracy_oracle(g: &Graph) -> usize {
        'outer: for d in 0..g.n() {
            let mut deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v as Vertex)).collect();
            let mut removed = vec![false; g.n()];
            let mut count = 0;
            loop {
                let mut progress = false;
                for v in 0..g.n() {
                    if !removed[v] && deg[v] <= d {
                        removed[v] = true;
                        count += 1;
                        progress = true;
                        for &w in g.neighbors(v as Vertex) {
                            if !removed[w as usize] {
                                deg[w as usize] -= 1;
                            }
                        }
                    }
                }
                if count == g.n() {
                    return d;
                }
                if !progress {
                    continue 'outer;
                }
            }
        }
        0
    }

    fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n as Vertex {
            for v in u + 1..n as Vertex {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    #[test]
    fn degeneracy_orientation_tree_and_clique() {
        let tree = Graph::star(5);
        assert_eq!(tree.degeneracy_orientation().max_in_degree(), 1);
        let k3 = Graph::complete(3);
        assert_eq!(k3.degeneracy_orientation().max_in_degree(), 2);
    }

    #[test]
    fn degeneracy_orientation_matches_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let g = random_graph(10, 0.3, &mut rng);
            let oriented = g.degeneracy_orientation();
            assert_eq!(oriented.max_in_degree(), degeneracy_oracle(&g));
            // each undirected edge appears exactly once as an arc
            assert_eq!(oriented.arcs().len(), g.m());
            for &(u, v) in oriented.arcs() {
                assert!(g.has_edge(u, v));
                assert!(!oriented.has_arc(v, u));
            }
        }
    }

    #[test]
    fn distance_is_a_metric_on_components() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let g = random_graph(8, 0.25, &mut rng);
            let dist = g.all_distances();
            for u in 0..8 {
                assert_eq!(dist[u][u], 0);
                for v in 0..8 {
                    assert_eq!(dist[u][v], dist[v][u]);
                    for w in 0..8 {
                        if dist[u][v] != u32::MAX && dist[v][w] != u32::MAX {
                            assert!(dist[u][w] != u32::MAX);
                            assert!(dist[u][w] <= dist[u][v] + dist[v][w]);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn neighborhood_is_union_of_balls() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..10 {
            let g = random_graph(9, 0.25, &mut rng);
            let tuple = [
                rng.gen_range(0..9) as Vertex,
                rng.gen_range(0..9) as Vertex,
                rng.gen_range(0..9) as Vertex,
            ];
            for r in 0..4 {
                let whole = g.neighborhood(&tuple, r).unwrap();
                let mut union = VertexSet::new();
                for &v in &tuple {
                    union = union.union(&g.neighborhood(&[v], r).unwrap());
                }
                assert_eq!(whole, union);
            }
        }
    }
}

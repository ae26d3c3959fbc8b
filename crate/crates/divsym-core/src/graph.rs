//! Ordered-vertex graphs with normalized edge lists, plus trees, paths and
//! cycles as validated special cases.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{check_format, default_format};

/// Graph on vertices `0..m-1` (ordered by index) with edges stored as
/// normalized pairs `(i, j)`, `i < j`, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    m: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Build a graph; edge order is normalized to `(min, max)` and sorted.
    /// Self-loops, duplicates, and out-of-range endpoints are rejected.
    pub fn new(m: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut normalized = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            if a >= m || b >= m {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) out of range for {m} vertices"
                )));
            }
            normalized.push((a.min(b), a.max(b)));
        }
        normalized.sort_unstable();
        if normalized.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph("duplicate edge".into()));
        }
        Ok(Graph {
            m,
            edges: normalized,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.m
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        let e = (a.min(b), a.max(b));
        self.edges.binary_search(&e).is_ok()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.m];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        self.m == 0 || self.components_after_removal(&[]).is_ok_and(|c| c.len() == 1)
    }

    /// Connected components of the graph with `removed` edges deleted.
    ///
    /// Components are returned as sorted vertex lists, ordered by smallest
    /// member; together they partition `0..m-1`.
    pub fn components_after_removal(
        &self,
        removed: &[(usize, usize)],
    ) -> Result<Vec<Vec<usize>>> {
        for &(a, b) in removed {
            if !self.has_edge(a, b) {
                return Err(Error::EdgeNotInGraph(a.min(b), a.max(b)));
            }
        }
        let is_removed = |a: usize, b: usize| {
            removed
                .iter()
                .any(|&(x, y)| (x.min(y), x.max(y)) == (a.min(b), a.max(b)))
        };
        let adj = self.adjacency();
        let mut comp = vec![usize::MAX; self.m];
        let mut components = Vec::new();
        for start in 0..self.m {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut stack = vec![start];
            let mut members = Vec::new();
            comp[start] = id;
            while let Some(v) = stack.pop() {
                members.push(v);
                for &w in &adj[v] {
                    if comp[w] == usize::MAX && !is_removed(v, w) {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        Ok(components)
    }

    /// The complete graph on `m` vertices.
    pub fn complete(m: usize) -> Graph {
        let mut edges = Vec::with_capacity(m * (m.saturating_sub(1)) / 2);
        for i in 0..m {
            for j in i + 1..m {
                edges.push((i, j));
            }
        }
        Graph { m, edges }
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.m`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let m = self.m + other.m;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(a, b)| (a + self.m, b + self.m)));
        edges.sort_unstable();
        Graph { m, edges }
    }
}

/// Path on `m` vertices with edges `(i, i+1)`.
pub fn path_graph(m: usize) -> Result<Graph> {
    if m < 1 {
        return Err(Error::InvalidGraph("path needs at least 1 vertex".into()));
    }
    Graph::new(m, (0..m - 1).map(|i| (i, i + 1)))
}

/// Cycle on `m >= 3` vertices: path edges plus the normalized wrap edge `(0, m-1)`.
pub fn cycle_graph(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(Error::InvalidGraph("cycle needs at least 3 vertices".into()));
    }
    let mut edges: Vec<(usize, usize)> = (0..m - 1).map(|i| (i, i + 1)).collect();
    edges.push((0, m - 1));
    Graph::new(m, edges)
}

/// A connected graph with exactly `m - 1` edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree(Graph);

impl Tree {
    pub fn graph(&self) -> &Graph {
        &self.0
    }

    pub fn num_vertices(&self) -> usize {
        self.0.m
    }
}

pub fn validate_tree(g: Graph) -> Result<Tree> {
    if g.m == 0 {
        return Err(Error::NotATree("empty vertex set".into()));
    }
    if g.edges.len() != g.m - 1 {
        return Err(Error::NotATree(format!(
            "{} edges on {} vertices (need {})",
            g.edges.len(),
            g.m,
            g.m - 1
        )));
    }
    if !g.is_connected() {
        return Err(Error::NotATree("disconnected".into()));
    }
    Ok(Tree(g))
}

// --- wire format -------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct GraphJson {
    #[serde(default = "default_format")]
    format: u32,
    m: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(GraphJson {
            format: 1,
            m: self.m,
            edges: self.edges.clone(),
        })
        .expect("graph serialization cannot fail")
    }

    /// Strict load: edges must already be normalized `i < j`.
    pub fn from_json(v: &serde_json::Value) -> Result<Graph> {
        let raw: GraphJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Json(e.to_string()))?;
        check_format(raw.format)?;
        for &(a, b) in &raw.edges {
            if a >= b {
                return Err(Error::InvalidGraph(format!(
                    "edge [{a}, {b}] must be normalized with i < j"
                )));
            }
        }
        Graph::new(raw.m, raw.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_and_cycle_construction() {
        assert_eq!(path_graph(3).unwrap().edges(), &[(0, 1), (1, 2)]);
        assert_eq!(cycle_graph(3).unwrap().edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(path_graph(1).unwrap().num_edges(), 0);
        assert!(path_graph(0).is_err());
        assert!(cycle_graph(2).is_err());
    }

    #[test]
    fn rejects_malformed_graphs() {
        assert!(Graph::new(3, vec![(0, 0)]).is_err());
        assert!(Graph::new(3, vec![(0, 3)]).is_err());
        assert!(Graph::new(3, vec![(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn normalizes_edge_order() {
        let g = Graph::new(3, vec![(2, 0), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2)]);
    }

    #[test]
    fn tree_validation() {
        assert!(validate_tree(path_graph(3).unwrap()).is_ok());
        assert!(validate_tree(cycle_graph(3).unwrap()).is_err());
        let disconnected = Graph::new(4, vec![(0, 1), (2, 3), (0, 2)]).unwrap();
        assert!(validate_tree(disconnected).is_ok()); // actually connected
        let forest = Graph::new(4, vec![(0, 1), (2, 3)]).unwrap();
        assert!(validate_tree(forest).is_err());
        assert!(validate_tree(path_graph(1).unwrap()).is_ok());
    }

    #[test]
    fn components_cases() {
        let p3 = path_graph(3).unwrap();
        assert_eq!(
            p3.components_after_removal(&[(0, 1)]).unwrap(),
            vec![vec![0], vec![1, 2]]
        );
        assert_eq!(p3.components_after_removal(&[]).unwrap(), vec![vec![0, 1, 2]]);
        let c4 = cycle_graph(4).unwrap();
        assert_eq!(c4.components_after_removal(&[(0, 1)]).unwrap().len(), 1);
        assert!(p3.components_after_removal(&[(0, 2)]).is_err());
    }

    #[test]
    fn tree_edge_removal_gives_two_components_covering_all() {
        for m in 2..7 {
            let t = validate_tree(path_graph(m).unwrap()).unwrap();
            for &e in t.graph().edges() {
                let comps = t.graph().components_after_removal(&[e]).unwrap();
                assert_eq!(comps.len(), 2);
                let total: usize = comps.iter().map(Vec::len).sum();
                assert_eq!(total, m);
                let mut all: Vec<usize> = comps.concat();
                all.sort_unstable();
                assert_eq!(all, (0..m).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn json_round_trip_and_strictness() {
        let g = cycle_graph(4).unwrap();
        assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);

        let unnormalized = serde_json::json!({"m": 3, "edges": [[1, 0]]});
        assert!(Graph::from_json(&unnormalized).is_err());
    }
}

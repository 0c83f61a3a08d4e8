//! Undirected labeled trees on the dense vertex set `0..n`.
//!
//! A [`Tree`] is immutable once built; every constructor validates the
//! edge list and stores neighbor lists in ascending order so that all
//! traversals, and therefore every path and trace derived from them, are
//! reproducible.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    adj: Vec<Vec<Vertex>>,
}

impl Tree {
    /// Validates `edges` as a spanning tree of `0..n`.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotATree("order must be at least 1".into()));
        }
        if edges.len() != n - 1 {
            return Err(Error::NotATree(format!(
                "expected {} edges for order {n}, got {}",
                n - 1,
                edges.len()
            )));
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::NotATree(format!("self-loop at {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::NotATree(format!("duplicate edge at {u}")));
            }
        }
        let tree = Tree { adj };
        let reached = tree.bfs(0).0.iter().filter(|d| **d != usize::MAX).count();
        if reached != n {
            return Err(Error::NotATree("graph is disconnected".into()));
        }
        Ok(tree)
    }

    /// The single-vertex tree.
    pub fn trivial() -> Self {
        Tree {
            adj: vec![Vec::new()],
        }
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Tree::new(n, &edges)
    }

    /// Star with center 0 and `n - 1` leaves.
    pub fn star(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Tree::new(n, &edges)
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    fn check(&self, v: Vertex) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.order(),
            })
        }
    }

    pub fn neighbors(&self, v: Vertex) -> Result<&[Vertex]> {
        self.check(v)?;
        Ok(&self.adj[v])
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.check(v)?;
        Ok(self.adj[v].len())
    }

    pub(crate) fn adj_len(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn is_adjacent(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Vertices of degree exactly 1, ascending.
    pub fn leaves(&self) -> Result<Vec<Vertex>> {
        if self.order() == 1 {
            return Err(Error::DegenerateOrder);
        }
        Ok((0..self.order())
            .filter(|&v| self.adj[v].len() == 1)
            .collect())
    }

    pub fn leaf_count(&self) -> usize {
        self.adj.iter().filter(|l| l.len() == 1).count()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Canonical edge list: `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    // Distances (usize::MAX when unreached) and BFS parents.
    fn bfs(&self, source: Vertex) -> (Vec<usize>, Vec<Option<Vertex>>) {
        let n = self.order();
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![None; n];
        let mut queue = VecDeque::with_capacity(n);
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = Some(u);
                    queue.push_back(v);
                }
            }
        }
        (dist, parent)
    }

    pub fn bfs_distances(&self, source: Vertex) -> Result<Vec<usize>> {
        self.check(source)?;
        Ok(self.bfs(source).0)
    }

    /// Exact diameter plus one diametral path, chosen by double BFS:
    /// the first endpoint is the smallest-id vertex farthest from vertex 0,
    /// the second is the smallest-id vertex farthest from the first.
    pub fn diameter_and_path(&self) -> (usize, TreePath) {
        let farthest = |dist: &[usize]| {
            // max_by_key returns the last maximum, so scan for the first.
            let best = *dist.iter().max().unwrap_or(&0);
            dist.iter().position(|&d| d == best).unwrap_or(0)
        };
        let (d0, _) = self.bfs(0);
        let a = farthest(&d0);
        let (da, parent) = self.bfs(a);
        let b = farthest(&da);
        let mut vertices = vec![b];
        let mut cur = b;
        while let Some(p) = parent[cur] {
            vertices.push(p);
            cur = p;
        }
        vertices.reverse();
        (da[b], TreePath { vertices })
    }

    pub fn diameter(&self) -> usize {
        self.diameter_and_path().0
    }

    /// The unique path from `x` to `y`.
    pub fn path_between(&self, x: Vertex, y: Vertex) -> Result<TreePath> {
        self.check(x)?;
        self.check(y)?;
        let (_, parent) = self.bfs(y);
        let mut vertices = vec![x];
        let mut cur = x;
        while let Some(p) = parent[cur] {
            vertices.push(p);
            cur = p;
        }
        Ok(TreePath { vertices })
    }

    /// Graphviz rendering with edges in canonical order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph T {");
        for (u, v) in self.edges() {
            out.push_str(&format!(" {u} -- {v};"));
        }
        out.push_str(" }\n");
        out
    }
}

/// Line 1 is `n`, then one `u v` line per edge with `u < v`, sorted.
impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.order())?;
        for (u, v) in self.edges() {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

/// Parses the edge-list text format. Blank lines and lines starting with
/// `#` are skipped; edges may appear in any order.
impl FromStr for Tree {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let parse_id = |line: usize, tok: &str| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line,
                msg: format!("expected a non-negative integer, found {tok:?}"),
            })
        };
        let (line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing vertex count".into(),
        })?;
        let n = parse_id(line, header)?;
        let mut edges = Vec::new();
        for (line, l) in lines {
            let toks: Vec<_> = l.split_whitespace().collect();
            if toks.len() != 2 {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected \"u v\", found {l:?}"),
                });
            }
            edges.push((parse_id(line, toks[0])?, parse_id(line, toks[1])?));
        }
        Tree::new(n, &edges)
    }
}

pub fn read_tree(text: &str) -> Result<Tree> {
    text.parse()
}

pub fn write_tree(t: &Tree) -> String {
    t.to_string()
}

/// An ordered sequence of distinct vertices, consecutive ones adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TreePath {
    vertices: Vec<Vertex>,
}

impl TreePath {
    /// Checks that `vertices` forms a path in `t`.
    pub fn new(t: &Tree, vertices: Vec<Vertex>) -> Result<Self> {
        let path = TreePath { vertices };
        path.validate(t)?;
        Ok(path)
    }

    pub(crate) fn validate(&self, t: &Tree) -> Result<()> {
        if self.vertices.is_empty() {
            return Err(Error::InvalidStem("empty path".into()));
        }
        let mut seen = vec![false; t.order()];
        for &v in &self.vertices {
            if v >= t.order() {
                return Err(Error::InvalidStem(format!("vertex {v} out of range")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidStem(format!("vertex {v} repeated")));
            }
        }
        if let Some(w) = self
            .vertices
            .windows(2)
            .find(|w| !t.is_adjacent(w[0], w[1]))
        {
            return Err(Error::InvalidStem(format!(
                "{} and {} are not adjacent",
                w[0], w[1]
            )));
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Edge count.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn reversed(&self) -> TreePath {
        TreePath {
            vertices: self.vertices.iter().rev().copied().collect(),
        }
    }

    pub fn start(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn end(&self) -> Vertex {
        self.vertices[self.vertices.len() - 1]
    }
}

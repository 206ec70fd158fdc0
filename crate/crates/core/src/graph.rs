//! Simple undirected graphs on vertices `0..n`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// Largest order whose upper triangle fits in a `u64` mask.
pub const MAX_MASK_ORDER: usize = 11;

/// An immutable simple undirected graph with contiguous vertex labels.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<bool>,
}

/// Position of the pair `{i, j}` in the column-major upper triangle
/// (the graph6 bit order): `(0,1), (0,2), (1,2), (0,3), ...`.
#[inline]
pub fn pair_index(i: usize, j: usize) -> usize {
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    hi * (hi - 1) / 2 + lo
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.set(u, v);
        }
        Ok(g)
    }

    pub(crate) fn empty(n: usize) -> Self {
        Graph { n, adj: vec![false; n * n] }
    }

    pub(crate) fn set(&mut self, u: usize, v: usize) {
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
    }

    pub fn complete(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut g = Graph::empty(n);
        for j in 1..n {
            for i in 0..j {
                g.set(i, j);
            }
        }
        Ok(g)
    }

    /// Decodes an upper-triangle bitmask where bit `pair_index(i, j)` marks
    /// the edge `{i, j}`.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_MASK_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        let mut g = Graph::empty(n);
        for j in 1..n {
            for i in 0..j {
                if mask >> pair_index(i, j) & 1 == 1 {
                    g.set(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Inverse of [`Graph::from_mask`]; `None` above [`MAX_MASK_ORDER`].
    pub fn to_mask(&self) -> Option<u64> {
        if self.n > MAX_MASK_ORDER {
            return None;
        }
        let mut mask = 0u64;
        for j in 1..self.n {
            for i in 0..j {
                if self.has_edge(i, j) {
                    mask |= 1 << pair_index(i, j);
                }
            }
        }
        Some(mask)
    }

    /// Parses the edge-list text format: the order on the first line, then
    /// one `u v` pair per line. Blank lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty edge list".into()))?;
        let n: usize = header.parse().map_err(|_| Error::Parse(format!("bad order line {header:?}")))?;
        let mut edges = Vec::new();
        for line in lines {
            let mut it = line.split_whitespace().map(str::parse::<usize>);
            match (it.next(), it.next(), it.next()) {
                (Some(Ok(u)), Some(Ok(v)), None) => edges.push((u, v)),
                _ => return Err(Error::Parse(format!("bad edge line {line:?}"))),
            }
        }
        Graph::from_edges(n, &edges)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().filter(|&&b| b).count()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    fn row(&self, v: usize) -> &[bool] {
        &self.adj[v * self.n..(v + 1) * self.n]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().filter(|(_, &b)| b).map(|(u, _)| u)
    }

    /// Edges `(i, j)` with `i < j`, in column-major upper-triangle order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |j| (0..j).filter(move |&i| self.has_edge(i, j)).map(move |i| (i, j)))
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for j in 1..self.n {
            for i in 0..j {
                if !self.has_edge(i, j) {
                    g.set(i, j);
                }
            }
        }
        g
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n;
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(Error::InvalidParameter("permutation length mismatch".into()));
        }
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
        }
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.set(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// Hop distances from `source`; `None` marks unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap_or(0);
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(Option::is_some)
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * (self.n - 1) / 2
    }

    /// Length of a shortest cycle, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n;
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            queue.clear();
            dist[root] = 0;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Part sizes (descending) when the complement is a disjoint union of
    /// cliques, i.e. when non-adjacency is an equivalence relation.
    pub fn complete_multipartite_parts(&self) -> Option<Vec<usize>> {
        let n = self.n;
        let mut part = vec![usize::MAX; n];
        let mut sizes = Vec::new();
        for i in 0..n {
            if part[i] != usize::MAX {
                continue;
            }
            let id = sizes.len();
            let mut size = 0;
            for (j, slot) in part.iter_mut().enumerate() {
                if j == i || !self.has_edge(i, j) {
                    if *slot != usize::MAX {
                        return None;
                    }
                    *slot = id;
                    size += 1;
                }
            }
            sizes.push(size);
        }
        for j in 1..n {
            for i in 0..j {
                if (part[i] == part[j]) == self.has_edge(i, j) {
                    return None;
                }
            }
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Some(sizes)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

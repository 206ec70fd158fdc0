//! All-pairs hop distances and the scalar invariants derived from them.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{ExactValue, Rational};

/// BFS distance matrix of a connected graph with cached transmissions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<u32>,
    transmissions: Vec<u64>,
    diameter: u32,
    wiener: u64,
}

impl DistanceMatrix {
    /// Runs a BFS from every vertex. Fails on disconnected input.
    pub fn new(g: &Graph) -> Result<Self> {
        let n = g.order();
        let mut entries = vec![0u32; n * n];
        for s in 0..n {
            for (t, d) in g.bfs(s).into_iter().enumerate() {
                entries[s * n + t] = d.ok_or(Error::Disconnected)? as u32;
            }
        }
        let transmissions: Vec<u64> = entries.chunks(n).map(|row| row.iter().map(|&d| d as u64).sum()).collect();
        let diameter = entries.iter().copied().max().unwrap_or(0);
        let wiener = transmissions.iter().sum::<u64>() / 2;
        Ok(DistanceMatrix { n, entries, transmissions, diameter, wiener })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn transmissions(&self) -> &[u64] {
        &self.transmissions
    }

    pub fn transmission(&self, v: usize) -> u64 {
        self.transmissions[v]
    }

    pub fn max_transmission(&self) -> u64 {
        self.transmissions.iter().copied().max().unwrap_or(0)
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    pub fn wiener(&self) -> u64 {
        self.wiener
    }

    /// `max_v Tr(v) / (n - 1)`, exact.
    pub fn remoteness(&self) -> Result<Rational> {
        if self.n < 2 {
            return Err(Error::InvalidParameter("remoteness needs at least two vertices".into()));
        }
        Ok(Rational::new(self.max_transmission() as i64, self.n as i64 - 1))
    }

    pub fn is_transmission_regular(&self) -> bool {
        self.transmissions.windows(2).all(|w| w[0] == w[1])
    }

    /// The matrix as dense `f64` rows, for the eigensolver.
    pub fn to_f64(&self) -> Vec<f64> {
        self.entries.iter().map(|&d| d as f64).collect()
    }

    /// Vertices of one shortest path realizing the diameter, from the
    /// lowest-indexed eccentric pair.
    pub fn diameter_path(&self) -> Vec<usize> {
        let n = self.n;
        let d = self.diameter;
        let Some(idx) = self.entries.iter().position(|&x| x == d) else {
            return vec![0];
        };
        let (src, dst) = (idx / n, idx % n);
        let mut path = vec![src];
        let mut cur = src;
        while cur != dst {
            let remaining = self.get(cur, dst);
            cur = (0..n)
                .find(|&w| self.get(cur, w) == 1 && self.get(w, dst) + 1 == remaining)
                .expect("a BFS distance always has a predecessor step");
            path.push(cur);
        }
        path
    }
}

/// Summary of the distance-based and structural invariants of one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantReport {
    pub n: usize,
    pub m: usize,
    pub diameter: u32,
    pub girth: Option<usize>,
    pub remoteness: Option<ExactValue>,
    pub wiener: u64,
    pub min_degree: usize,
    pub is_complete: bool,
    pub complete_multipartite_parts: Option<Vec<usize>>,
    pub is_transmission_regular: bool,
}

impl InvariantReport {
    pub fn compute(g: &Graph) -> Result<Self> {
        let dm = DistanceMatrix::new(g)?;
        Ok(InvariantReport {
            n: g.order(),
            m: g.edge_count(),
            diameter: dm.diameter(),
            girth: g.girth(),
            remoteness: dm.remoteness().ok().map(ExactValue::from),
            wiener: dm.wiener(),
            min_degree: g.min_degree(),
            is_complete: g.is_complete(),
            complete_multipartite_parts: g.complete_multipartite_parts(),
            is_transmission_regular: dm.is_transmission_regular(),
        })
    }
}

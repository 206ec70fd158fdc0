//! Dense symmetric eigenvalues (cyclic Jacobi) and the graph spectra built on them.

use serde::Serialize;

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;

const SYMMETRY_TOL: f64 = 1e-12;
const OFF_DIAGONAL_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 50;

/// Eigenvalues sorted descending, with an absolute error bound.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub accuracy: f64,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    /// The `k`-th largest eigenvalue, 1-based.
    pub fn kth(&self, k: usize) -> f64 {
        self.eigenvalues[k - 1]
    }

    pub fn largest(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn smallest(&self) -> f64 {
        self.eigenvalues[self.eigenvalues.len() - 1]
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }
}

/// All eigenvalues of the symmetric `n x n` row-major matrix `m`.
///
/// Cyclic Jacobi sweeps run until the off-diagonal Frobenius norm drops
/// below `1e-12 * ||M||_F` (at most 50 sweeps). The reported accuracy is that
/// final off-diagonal norm plus a rounding allowance; by Weyl's inequality it
/// bounds the error of every eigenvalue.
pub fn symmetric_eigenvalues(n: usize, m: &[f64]) -> Result<Spectrum> {
    if m.len() != n * n {
        return Err(Error::NotSquare);
    }
    for i in 0..n {
        for j in 0..n {
            let x = m[i * n + j];
            if !x.is_finite() {
                return Err(Error::NonFinite(i, j));
            }
            if j > i && (x - m[j * n + i]).abs() > SYMMETRY_TOL {
                return Err(Error::NotSymmetric(i, j));
            }
        }
    }

    let mut a = m.to_vec();
    // symmetrize so rotations act on an exactly symmetric copy
    for i in 0..n {
        for j in i + 1..n {
            let avg = 0.5 * (a[i * n + j] + a[j * n + i]);
            a[i * n + j] = avg;
            a[j * n + i] = avg;
        }
    }
    let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let target = OFF_DIAGONAL_TOL * norm;

    let mut off = off_diagonal_norm(n, &a);
    let mut sweeps = 0;
    while off > target && sweeps < MAX_SWEEPS {
        for p in 0..n {
            for q in p + 1..n {
                rotate(n, &mut a, p, q);
            }
        }
        off = off_diagonal_norm(n, &a);
        sweeps += 1;
    }

    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eigenvalues.sort_by(|x, y| y.total_cmp(x));
    let rounding = 8.0 * n as f64 * f64::EPSILON * norm.max(1.0);
    Ok(Spectrum { eigenvalues, accuracy: off + rounding })
}

fn off_diagonal_norm(n: usize, a: &[f64]) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

/// Annihilates `a[p][q]` with one plane rotation.
fn rotate(n: usize, a: &mut [f64], p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
    for r in 0..n {
        if r == p || r == q {
            continue;
        }
        let arp = a[r * n + p];
        let arq = a[r * n + q];
        let new_rp = c * arp - s * arq;
        let new_rq = s * arp + c * arq;
        a[r * n + p] = new_rp;
        a[p * n + r] = new_rp;
        a[r * n + q] = new_rq;
        a[q * n + r] = new_rq;
    }
}

pub fn distance_spectrum(g: &Graph) -> Result<Spectrum> {
    let dm = DistanceMatrix::new(g)?;
    distance_spectrum_of(&dm)
}

pub fn distance_spectrum_of(dm: &DistanceMatrix) -> Result<Spectrum> {
    symmetric_eigenvalues(dm.order(), &dm.to_f64())
}

/// Eigenvalues of degree-diagonal minus adjacency.
pub fn laplacian_spectrum(g: &Graph) -> Result<Spectrum> {
    let n = g.order();
    let mut l = vec![0.0; n * n];
    for v in 0..n {
        for u in g.neighbors(v) {
            l[v * n + u] = -1.0;
        }
        l[v * n + v] = g.degree(v) as f64;
    }
    symmetric_eigenvalues(n, &l)
}

/// `2 + 2 cos(i pi / n)`, the `i`-th largest Laplacian eigenvalue of the path on `n` vertices.
pub fn path_laplacian_closed_form(n: usize, i: usize) -> Result<f64> {
    if i == 0 || i > n {
        return Err(Error::InvalidParameter(format!("index {i} outside 1..={n}")));
    }
    Ok(2.0 + 2.0 * (i as f64 * std::f64::consts::PI / n as f64).cos())
}

/// Outcome of comparing the distance spectrum against `-2/lambda_k`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainCheck {
    pub holds: bool,
    /// Slack of each link of `-2/l1 >= d2 >= -2/l2 >= d3 >= ... >= -2/l_{n-1} >= d_n`,
    /// in chain order; a link holds when its slack is `>= -tol`.
    pub margins: Vec<f64>,
}

impl ChainCheck {
    pub fn min_margin(&self) -> f64 {
        self.margins.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

pub fn merris_chain_check(g: &Graph, tol: f64) -> Result<ChainCheck> {
    let dist = distance_spectrum(g)?;
    let lap = laplacian_spectrum(g)?;
    merris_chain_from_spectra(&dist, &lap, tol)
}

pub(crate) fn merris_chain_from_spectra(dist: &Spectrum, lap: &Spectrum, tol: f64) -> Result<ChainCheck> {
    let n = dist.len();
    if n < 2 {
        return Err(Error::InvalidParameter("chain needs at least two vertices".into()));
    }
    let bracket = |k: usize| -2.0 / lap.kth(k);
    let mut margins = Vec::with_capacity(2 * n - 3);
    for k in 1..n {
        // -2/l_k >= d_{k+1}
        margins.push(bracket(k) - dist.kth(k + 1));
        if k + 1 < n {
            // d_{k+1} >= -2/l_{k+1}
            margins.push(dist.kth(k + 1) - bracket(k + 1));
        }
    }
    let holds = margins.iter().all(|&m| m >= -tol);
    Ok(ChainCheck { holds, margins })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InterlacingCheck {
    pub holds: bool,
    pub graph_value: f64,
    pub path_value: f64,
    pub margin: f64,
}

/// Compares `d_k(G)` with `d_k` of the distance submatrix on one diameter path.
pub fn geodesic_interlacing_check(g: &Graph, k: usize) -> Result<InterlacingCheck> {
    let dm = DistanceMatrix::new(g)?;
    let spec = distance_spectrum_of(&dm)?;
    geodesic_interlacing_from(&dm, &spec, k)
}

pub(crate) fn geodesic_interlacing_from(dm: &DistanceMatrix, spec: &Spectrum, k: usize) -> Result<InterlacingCheck> {
    let path = dm.diameter_path();
    let m = path.len();
    if k == 0 || k > m {
        return Err(Error::InvalidParameter(format!("index {k} outside 1..={m}")));
    }
    let sub: Vec<f64> = path.iter().flat_map(|&i| path.iter().map(move |&j| dm.get(i, j) as f64)).collect();
    let path_spec = symmetric_eigenvalues(m, &sub)?;
    let graph_value = spec.kth(k);
    let path_value = path_spec.kth(k);
    let margin = graph_value - path_value;
    Ok(InterlacingCheck { holds: margin >= -(spec.accuracy + path_spec.accuracy), graph_value, path_value, margin })
}

/// Distance spectrum of the path on `n` vertices.
pub fn path_distance_spectrum(n: usize) -> Spectrum {
    let m: Vec<f64> = (0..n).flat_map(|i| (0..n).map(move |j| (i as f64 - j as f64).abs())).collect();
    symmetric_eigenvalues(n, &m).expect("path distance matrix is symmetric")
}

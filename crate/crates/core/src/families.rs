//! Named graph families and closed-form quantities attached to them.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteMultipartite(Vec<usize>),
    /// `K_{1,n-1}` on `n` vertices.
    Star(usize),
    /// `K_n` with one edge removed.
    CompleteMinusEdge(usize),
    /// A clique on `n - a - b` vertices with two pendant paths of `a` and `b`
    /// vertices; one end of each path is joined to every clique vertex.
    CliqueTwoPendantPaths {
        n: usize,
        a: usize,
        b: usize,
    },
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Path(n) | FamilySpec::Complete(n) if n == 0 => Err(invalid("order must be positive")),
            FamilySpec::Cycle(n) if n < 3 => Err(invalid("cycle needs at least 3 vertices")),
            FamilySpec::Star(n) if n < 2 => Err(invalid("star needs at least 2 vertices")),
            FamilySpec::CompleteMinusEdge(n) if n < 3 => Err(invalid("K_n - e needs n >= 3")),
            FamilySpec::CompleteMultipartite(ref parts) if parts.is_empty() || parts.contains(&0) => {
                Err(invalid("parts must be nonempty and positive"))
            }
            FamilySpec::CliqueTwoPendantPaths { n, a, b } if a == 0 || b == 0 || n < a + b + 1 => {
                Err(invalid("need a, b >= 1 and n - a - b >= 1"))
            }
            _ => Ok(()),
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Star(n)
            | FamilySpec::CompleteMinusEdge(n)
            | FamilySpec::CliqueTwoPendantPaths { n, .. } => n,
            FamilySpec::CompleteMultipartite(ref parts) => parts.iter().sum(),
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.validate()?;
        let n = self.order();
        let mut g = Graph::empty(n);
        match *self {
            FamilySpec::Path(_) => (1..n).for_each(|i| g.set(i - 1, i)),
            FamilySpec::Cycle(_) => (0..n).for_each(|i| g.set(i, (i + 1) % n)),
            FamilySpec::Complete(_) => g = Graph::complete(n)?,
            FamilySpec::Star(_) => (1..n).for_each(|v| g.set(0, v)),
            FamilySpec::CompleteMinusEdge(_) => {
                g = Graph::complete(n)?;
                g = Graph::from_edges(n, &g.edges().filter(|&e| e != (0, 1)).collect::<Vec<_>>())?;
            }
            FamilySpec::CompleteMultipartite(ref parts) => {
                let mut start = 0;
                let bounds: Vec<(usize, usize)> = parts
                    .iter()
                    .map(|&p| {
                        let r = (start, start + p);
                        start += p;
                        r
                    })
                    .collect();
                for (x, &(s1, e1)) in bounds.iter().enumerate() {
                    for &(s2, e2) in &bounds[x + 1..] {
                        for u in s1..e1 {
                            for v in s2..e2 {
                                g.set(u, v);
                            }
                        }
                    }
                }
            }
            FamilySpec::CliqueTwoPendantPaths { a, b, .. } => {
                let c = n - a - b;
                for j in 1..c {
                    for i in 0..j {
                        g.set(i, j);
                    }
                }
                for (start, len) in [(c, a), (c + a, b)] {
                    for k in 0..c {
                        g.set(k, start);
                    }
                    for v in start + 1..start + len {
                        g.set(v - 1, v);
                    }
                }
            }
        }
        Ok(g)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::CompleteMinusEdge(n) => write!(f, "kme:{n}"),
            FamilySpec::CompleteMultipartite(parts) => {
                let s: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "cmb:{}", s.join(","))
            }
            FamilySpec::CliqueTwoPendantPaths { n, a, b } => write!(f, "gab:{n},{a},{b}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `path:7`, `cycle:5`, `complete:4`, `star:6`, `kme:6`, `cmb:3,3,2`, `gab:9,2,3`.
    fn from_str(s: &str) -> Result<Self> {
        let (tag, args) = s.split_once(':').ok_or_else(|| Error::Parse(format!("family spec {s:?} lacks ':'")))?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse(format!("bad family parameters {args:?}")))?;
        let single = || match nums.as_slice() {
            [n] => Ok(*n),
            _ => Err(Error::Parse(format!("{tag} takes one parameter"))),
        };
        let spec = match tag {
            "path" => FamilySpec::Path(single()?),
            "cycle" => FamilySpec::Cycle(single()?),
            "complete" | "k" => FamilySpec::Complete(single()?),
            "star" => FamilySpec::Star(single()?),
            "kme" => FamilySpec::CompleteMinusEdge(single()?),
            "cmb" => FamilySpec::CompleteMultipartite(nums),
            "gab" => match nums.as_slice() {
                &[n, a, b] => FamilySpec::CliqueTwoPendantPaths { n, a, b },
                _ => return Err(Error::Parse("gab takes n,a,b".into())),
            },
            other => return Err(Error::Parse(format!("unknown family {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// Remoteness of `K_{n1,n2}`, computed from its distance matrix.
pub fn remoteness_complete_bipartite(n1: usize, n2: usize) -> Result<Rational> {
    if n2 == 0 || n1 < n2 || n1 + n2 < 3 {
        return Err(invalid("need n1 >= n2 >= 1 and n1 + n2 >= 3"));
    }
    let g = FamilySpec::CompleteMultipartite(vec![n1, n2]).build()?;
    DistanceMatrix::new(&g)?.remoteness()
}

/// The constant `(ceil(n/2) - 2)/(n - 1) + 1` as stated for the balanced
/// complete bipartite graph. It differs from the value obtained from the
/// definition, `1 + (ceil(n/2) - 1)/(n - 1)`; both are kept for reporting.
pub fn stated_remoteness_balanced_bipartite(n: usize) -> Rational {
    let n = n as i64;
    Rational::new((n + 1) / 2 - 2, n - 1) + 1
}

fn choose(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Piecewise Wiener index stated for the clique-with-two-pendant-paths
/// extremal graph, branching on the parity of `n` exactly as stated.
/// The result is rational because the even branch is not always integral.
pub fn expected_wiener_gab(n: usize, d: usize) -> Result<Rational> {
    if d < 3 || n < d + 2 {
        return Err(invalid("need d >= 3 and n >= d + 2"));
    }
    Ok(wiener_gab_formula(n as i64, d as i64, n.is_multiple_of(2)))
}

/// The same piecewise formula with the branch chosen explicitly.
pub fn wiener_gab_formula(n: i64, d: i64, even_branch: bool) -> Rational {
    let coef = if even_branch { d * d + 2 * d } else { d * d + 2 * d + 5 };
    Rational::from_integer(choose(d + 2, 3) + choose(n - d - 1, 2)) + Rational::new(coef * (n - d - 1), 4)
}

/// One constructed layout of the pendant-path graph, measured by BFS.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GabLayout {
    pub a: usize,
    pub b: usize,
    pub clique: usize,
    pub bfs_diameter: u32,
    pub bfs_wiener: u64,
}

/// Stated Wiener formula against BFS on both candidate constructions.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WienerCrossCheck {
    pub n: usize,
    pub d: usize,
    /// Branch picked by the parity of `n` (as stated).
    pub formula_by_order_parity: String,
    /// Branch picked by the parity of `d`.
    pub formula_by_diameter_parity: String,
    /// Path orders `floor((d+1)/2)`, `ceil((d+1)/2)` on `K_{n-1-d}` (as stated).
    pub stated_layout: GabLayout,
    /// Path orders `floor(d/2)`, `ceil(d/2)` on `K_{n-d}`; BFS diameter is `d`.
    pub diameter_layout: GabLayout,
    pub order_parity_matches_bfs: bool,
    pub diameter_parity_matches_bfs: bool,
}

fn measure(n: usize, a: usize, b: usize) -> Result<GabLayout> {
    let g = FamilySpec::CliqueTwoPendantPaths { n, a, b }.build()?;
    let dm = DistanceMatrix::new(&g)?;
    Ok(GabLayout { a, b, clique: n - a - b, bfs_diameter: dm.diameter(), bfs_wiener: dm.wiener() })
}

pub fn wiener_gab_crosscheck(n: usize, d: usize) -> Result<WienerCrossCheck> {
    let by_order = expected_wiener_gab(n, d)?;
    let by_diam = wiener_gab_formula(n as i64, d as i64, d.is_multiple_of(2));
    let stated_layout = measure(n, d.div_ceil(2), (d + 2) / 2)?;
    let diameter_layout = measure(n, d / 2, d.div_ceil(2))?;
    let bfs = Rational::from_integer(diameter_layout.bfs_wiener as i64);
    Ok(WienerCrossCheck {
        n,
        d,
        formula_by_order_parity: crate::rational::format_ratio(&by_order),
        formula_by_diameter_parity: crate::rational::format_ratio(&by_diam),
        stated_layout,
        diameter_layout,
        order_parity_matches_bfs: by_order == bfs,
        diameter_parity_matches_bfs: by_diam == bfs,
    })
}

/// `(n - 1 + sqrt((n-1)^2 + 8))/2 - n/(n-1)`, the value of `d1 - rho` at `K_n - e`.
pub fn d1_minus_rho_kn_minus_e(n: usize) -> Result<f64> {
    if n < 3 {
        return Err(invalid("need n >= 3"));
    }
    let m = (n - 1) as f64;
    Ok((m + (m * m + 8.0).sqrt()) / 2.0 - n as f64 / m)
}

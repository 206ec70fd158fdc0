//! Catalog of remoteness / distance-eigenvalue inequalities as checkable predicates.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::families::d1_minus_rho_kn_minus_e;
use crate::graph::Graph;
use crate::rational::{format_ratio, to_f64, Rational};
use crate::spectra::{self, Spectrum};

/// Slack for non-strict relations and equality detection on spectral sides.
pub const TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BoundId {
    DistMinGeqNegD,
    RemotenessGeqHalfD,
    MerrisChain,
    RhoPlusD3Diam2,
    RhoPlusD3Pos,
    RhoPlus78d,
    RemotenessUpper,
    RhoPlusDnUpper,
    RhoPlusDnNonpos,
    D1GeqWiener,
    D1GtNMinus2PlusD,
    D1MinusRhoNonComplete,
    D1MinusRhoGeqNMinus2,
    D3GeqP4Step,
    FFunctionPositive,
}

impl BoundId {
    /// Every bound, in the order `--bounds all` expands to.
    pub const ALL: [BoundId; 15] = [
        BoundId::DistMinGeqNegD,
        BoundId::RemotenessGeqHalfD,
        BoundId::MerrisChain,
        BoundId::RhoPlusD3Diam2,
        BoundId::RhoPlusD3Pos,
        BoundId::RhoPlus78d,
        BoundId::RemotenessUpper,
        BoundId::RhoPlusDnUpper,
        BoundId::RhoPlusDnNonpos,
        BoundId::D1GeqWiener,
        BoundId::D1GtNMinus2PlusD,
        BoundId::D1MinusRhoNonComplete,
        BoundId::D1MinusRhoGeqNMinus2,
        BoundId::D3GeqP4Step,
        BoundId::FFunctionPositive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundId::DistMinGeqNegD => "dist-min-geq-neg-d",
            BoundId::RemotenessGeqHalfD => "remoteness-geq-half-d",
            BoundId::MerrisChain => "merris-chain",
            BoundId::RhoPlusD3Diam2 => "rho-plus-d3-diam2",
            BoundId::RhoPlusD3Pos => "rho-plus-d3-pos",
            BoundId::RhoPlus78d => "rho-plus78d",
            BoundId::RemotenessUpper => "remoteness-upper",
            BoundId::RhoPlusDnUpper => "rho-plus-dn-upper",
            BoundId::RhoPlusDnNonpos => "rho-plus-dn-nonpos",
            BoundId::D1GeqWiener => "d1-geq-wiener",
            BoundId::D1GtNMinus2PlusD => "d1-gt-n-minus2-plus-d",
            BoundId::D1MinusRhoNonComplete => "d1-minus-rho-non-complete",
            BoundId::D1MinusRhoGeqNMinus2 => "d1-minus-rho-geq-n-minus2",
            BoundId::D3GeqP4Step => "d3-geq-p4-step",
            BoundId::FFunctionPositive => "f-function-positive",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            BoundId::DistMinGeqNegD => "d_n >= -d",
            BoundId::RemotenessGeqHalfD => "rho >= d/2",
            BoundId::MerrisChain => "-2/l_1 >= d_2 >= -2/l_2 >= ... >= -2/l_{n-1} >= d_n",
            BoundId::RhoPlusD3Diam2 => "d = 2: rho + d_3 >= (ceil(n/2)-2)/(n-1) - 1",
            BoundId::RhoPlusD3Pos => "d >= 3: rho + d_3 > 0",
            BoundId::RhoPlus78d => "rho + d_floor(7d/8) > 0",
            BoundId::RemotenessUpper => "rho <= d - (d^2-d)/(2(n-1))",
            BoundId::RhoPlusDnUpper => "rho + d_n <= -(d^2-d)/(2(n-1))",
            BoundId::RhoPlusDnNonpos => "rho + d_n <= 0",
            BoundId::D1GeqWiener => "d_1 >= 2W/n",
            BoundId::D1GtNMinus2PlusD => "d >= 3: d_1 > n - 2 + d",
            BoundId::D1MinusRhoNonComplete => "G != K_n: d_1 - rho >= (n-1+sqrt((n-1)^2+8))/2 - n/(n-1)",
            BoundId::D1MinusRhoGeqNMinus2 => "d_1 - rho >= n - 2",
            BoundId::D3GeqP4Step => "d >= 3: d_3 >= d_3(P_4) > -1.2",
            BoundId::FFunctionPositive => "d >= 11: f(d) > 0",
        }
    }

    pub fn relation(self) -> Relation {
        match self {
            BoundId::RhoPlusD3Pos | BoundId::RhoPlus78d | BoundId::D1GtNMinus2PlusD | BoundId::FFunctionPositive => {
                Relation::Gt
            }
            BoundId::RemotenessUpper | BoundId::RhoPlusDnUpper | BoundId::RhoPlusDnNonpos => Relation::Le,
            _ => Relation::Ge,
        }
    }

    /// The family claimed to be exactly the equality set, if any.
    pub fn equality_family(self) -> Option<EqualityFamily> {
        match self {
            BoundId::DistMinGeqNegD => Some(EqualityFamily::CompleteMultipartite),
            BoundId::RhoPlusD3Diam2 => Some(EqualityFamily::CompleteBipartite),
            BoundId::RhoPlusDnUpper | BoundId::RhoPlusDnNonpos | BoundId::D1MinusRhoGeqNMinus2 => {
                Some(EqualityFamily::Complete)
            }
            BoundId::D1GeqWiener => Some(EqualityFamily::TransmissionRegular),
            BoundId::D1MinusRhoNonComplete => Some(EqualityFamily::CompleteMinusEdge),
            _ => None,
        }
    }

    pub(crate) fn needs_laplacian(self) -> bool {
        self == BoundId::MerrisChain
    }

    /// Parses a comma-separated list; `all` expands to [`BoundId::ALL`].
    pub fn parse_list(s: &str) -> Result<Vec<BoundId>> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(BoundId::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundId::ALL.into_iter().find(|id| id.name() == s).ok_or_else(|| Error::UnknownBound(s.to_string()))
    }
}

impl Serialize for BoundId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Ge,
    Gt,
    Le,
}

impl Relation {
    pub fn is_strict(self) -> bool {
        self == Relation::Gt
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Ge => ">=",
            Relation::Gt => ">",
            Relation::Le => "<=",
        }
    }

    fn signed(self, lhs: f64, rhs: f64) -> f64 {
        match self {
            Relation::Ge | Relation::Gt => lhs - rhs,
            Relation::Le => rhs - lhs,
        }
    }
}

impl Serialize for Relation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.symbol())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EqualityFamily {
    CompleteMultipartite,
    CompleteBipartite,
    Complete,
    TransmissionRegular,
    CompleteMinusEdge,
}

impl EqualityFamily {
    pub fn name(self) -> &'static str {
        match self {
            EqualityFamily::CompleteMultipartite => "complete-multipartite",
            EqualityFamily::CompleteBipartite => "complete-bipartite",
            EqualityFamily::Complete => "complete",
            EqualityFamily::TransmissionRegular => "transmission-regular",
            EqualityFamily::CompleteMinusEdge => "complete-minus-edge",
        }
    }

    pub fn contains(self, g: &Graph, dm: &DistanceMatrix) -> bool {
        let n = g.order();
        match self {
            EqualityFamily::CompleteMultipartite => g.complete_multipartite_parts().is_some_and(|p| p.len() >= 2),
            EqualityFamily::CompleteBipartite => g.complete_multipartite_parts().is_some_and(|p| p.len() == 2),
            EqualityFamily::Complete => g.is_complete(),
            EqualityFamily::TransmissionRegular => dm.is_transmission_regular(),
            EqualityFamily::CompleteMinusEdge => n >= 2 && g.edge_count() + 1 == n * (n - 1) / 2,
        }
    }
}

impl Serialize for EqualityFamily {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// One side of an inequality: exact when it is a rational invariant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Side {
    Exact(Rational),
    Real(f64),
}

impl Side {
    pub fn value(self) -> f64 {
        match self {
            Side::Exact(r) => to_f64(r),
            Side::Real(x) => x,
        }
    }

    fn exact(self) -> Option<Rational> {
        match self {
            Side::Exact(r) => Some(r),
            Side::Real(_) => None,
        }
    }
}

impl Serialize for Side {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Side", 2)?;
        st.serialize_field("value", &self.value())?;
        st.serialize_field("exact", &self.exact().map(|r| format_ratio(&r)))?;
        st.end()
    }
}

/// The verdict of one bound on one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundCheck {
    pub id: BoundId,
    pub statement: &'static str,
    pub applicable: bool,
    pub relation: Relation,
    pub lhs: Option<Side>,
    pub rhs: Option<Side>,
    /// `lhs - rhs` for `>=`/`>`, `rhs - lhs` for `<=`.
    pub margin: Option<Side>,
    pub holds: Option<bool>,
    pub equality: Option<bool>,
    pub expected_equality_family: Option<EqualityFamily>,
    pub in_expected_family: Option<bool>,
}

impl BoundCheck {
    fn inapplicable(id: BoundId) -> Self {
        BoundCheck {
            id,
            statement: id.statement(),
            applicable: false,
            relation: id.relation(),
            lhs: None,
            rhs: None,
            margin: None,
            holds: None,
            equality: None,
            expected_equality_family: id.equality_family(),
            in_expected_family: None,
        }
    }

    fn evaluate(id: BoundId, lhs: Side, rhs: Side, family_member: Option<bool>) -> Self {
        let relation = id.relation();
        let (margin, holds, equality) = match (lhs, rhs) {
            (Side::Exact(l), Side::Exact(r)) => {
                let m = match relation {
                    Relation::Ge | Relation::Gt => l - r,
                    Relation::Le => r - l,
                };
                let zero = Rational::from_integer(0);
                let holds = if relation.is_strict() { m > zero } else { m >= zero };
                (Side::Exact(m), holds, m == zero)
            }
            _ => {
                let m = relation.signed(lhs.value(), rhs.value());
                let holds = if relation.is_strict() { m > TOL } else { m >= -TOL };
                (Side::Real(m), holds, m.abs() <= TOL)
            }
        };
        BoundCheck {
            id,
            statement: id.statement(),
            applicable: true,
            relation,
            lhs: Some(lhs),
            rhs: Some(rhs),
            margin: Some(margin),
            holds: Some(holds),
            equality: Some(equality),
            expected_equality_family: id.equality_family(),
            in_expected_family: family_member,
        }
    }

    pub fn margin_value(&self) -> Option<f64> {
        self.margin.map(Side::value)
    }

    pub fn violated(&self) -> bool {
        self.holds == Some(false)
    }
}

/// Distance matrix and spectra of one graph, computed once and shared by
/// every bound evaluated on it.
pub struct GraphContext<'g> {
    pub graph: &'g Graph,
    pub dm: DistanceMatrix,
    pub dist: Spectrum,
    pub lap: Option<Spectrum>,
    remoteness: Option<Rational>,
}

impl<'g> GraphContext<'g> {
    pub fn new(graph: &'g Graph, with_laplacian: bool) -> Result<Self> {
        let dm = DistanceMatrix::new(graph)?;
        let dist = spectra::distance_spectrum_of(&dm)?;
        let lap = if with_laplacian { Some(spectra::laplacian_spectrum(graph)?) } else { None };
        let remoteness = dm.remoteness().ok();
        Ok(GraphContext { graph, dm, dist, lap, remoteness })
    }

    pub fn for_bounds(graph: &'g Graph, ids: &[BoundId]) -> Result<Self> {
        Self::new(graph, ids.iter().any(|id| id.needs_laplacian()))
    }

    pub fn remoteness(&self) -> Option<Rational> {
        self.remoteness
    }

    pub fn check(&self, id: BoundId) -> Result<BoundCheck> {
        let n = self.graph.order();
        let Some(rho) = self.remoteness else {
            return Ok(BoundCheck::inapplicable(id));
        };
        let d = self.dm.diameter() as i64;
        let ni = n as i64;
        let rho_f = to_f64(rho);
        let dist = &self.dist;
        let family = id.equality_family().map(|f| f.contains(self.graph, &self.dm));
        let eval = |lhs, rhs| Ok(BoundCheck::evaluate(id, lhs, rhs, family));
        let upper_slack = Rational::new(d * d - d, 2 * (ni - 1));

        match id {
            BoundId::DistMinGeqNegD => eval(Side::Real(dist.smallest()), Side::Real(-d as f64)),
            BoundId::RemotenessGeqHalfD => eval(Side::Exact(rho), Side::Exact(Rational::new(d, 2))),
            BoundId::MerrisChain => {
                let lap = match &self.lap {
                    Some(l) => l.clone(),
                    None => spectra::laplacian_spectrum(self.graph)?,
                };
                let chain = spectra::merris_chain_from_spectra(dist, &lap, TOL)?;
                eval(Side::Real(chain.min_margin()), Side::Real(0.0))
            }
            BoundId::RhoPlusD3Diam2 if d == 2 && n >= 4 => {
                let stated = Rational::new((ni + 1) / 2 - 2, ni - 1) - 1;
                eval(Side::Real(rho_f + dist.kth(3)), Side::Exact(stated))
            }
            BoundId::RhoPlusD3Pos if d >= 3 => eval(Side::Real(rho_f + dist.kth(3)), Side::Real(0.0)),
            BoundId::RhoPlus78d if n >= 4 && d >= 2 => {
                let k = (7 * d / 8) as usize;
                eval(Side::Real(rho_f + dist.kth(k)), Side::Real(0.0))
            }
            BoundId::RemotenessUpper => eval(Side::Exact(rho), Side::Exact(Rational::from_integer(d) - upper_slack)),
            BoundId::RhoPlusDnUpper => eval(Side::Real(rho_f + dist.smallest()), Side::Exact(-upper_slack)),
            BoundId::RhoPlusDnNonpos => eval(Side::Real(rho_f + dist.smallest()), Side::Real(0.0)),
            BoundId::D1GeqWiener => {
                eval(Side::Real(dist.largest()), Side::Exact(Rational::new(2 * self.dm.wiener() as i64, ni)))
            }
            BoundId::D1GtNMinus2PlusD if d >= 3 => {
                eval(Side::Real(dist.largest()), Side::Exact(Rational::from_integer(ni - 2 + d)))
            }
            BoundId::D1MinusRhoNonComplete if n >= 3 && !self.graph.is_complete() => {
                eval(Side::Real(dist.largest() - rho_f), Side::Real(d1_minus_rho_kn_minus_e(n)?))
            }
            BoundId::D1MinusRhoGeqNMinus2 => {
                eval(Side::Real(dist.largest() - rho_f), Side::Exact(Rational::from_integer(ni - 2)))
            }
            BoundId::D3GeqP4Step if d >= 3 => {
                eval(Side::Real(dist.kth(3)), Side::Real(spectra::path_distance_spectrum(4).kth(3)))
            }
            BoundId::FFunctionPositive if d >= 11 => eval(Side::Real(f_function(d as f64)?), Side::Real(0.0)),
            _ => Ok(BoundCheck::inapplicable(id)),
        }
    }
}

pub fn check_bound(id: BoundId, g: &Graph) -> Result<BoundCheck> {
    GraphContext::for_bounds(g, &[id])?.check(id)
}

pub fn check_bounds(ids: &[BoundId], g: &Graph) -> Result<Vec<BoundCheck>> {
    let ctx = GraphContext::for_bounds(g, ids)?;
    ids.iter().map(|&id| ctx.check(id)).collect()
}

/// Whether `g` lies in the family named as the equality set of `id`.
/// Bounds without an equality clause yield `false`.
pub fn equality_family_matches(id: BoundId, g: &Graph) -> Result<bool> {
    let dm = DistanceMatrix::new(g)?;
    Ok(id.equality_family().is_some_and(|f| f.contains(g, &dm)))
}

/// `1 - 1/x - sin^2(7 x pi / (16 (x + 1)))`.
pub fn f_function(x: f64) -> Result<f64> {
    if x.is_nan() || x <= 0.0 {
        return Err(Error::InvalidParameter(format!("f needs x > 0, got {x}")));
    }
    let s = (7.0 * x * PI / (16.0 * (x + 1.0))).sin();
    Ok(1.0 - 1.0 / x - s * s)
}

/// Quantities along the path-interlacing argument for `rho + d_floor(7d/8) > 0`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainRecord {
    pub d: usize,
    pub k: usize,
    /// `-1 / (2 cos^2(k pi / (2(d+1))))`, i.e. `-2 / lambda_k(P_{d+1})`.
    pub closed_form_lower: f64,
    /// `d_k(P_{d+1})` from the eigensolver.
    pub path_value: f64,
    pub half_d: f64,
    pub path_above_lower: bool,
    pub half_d_plus_path_positive: bool,
}

pub fn conjecture2_chain(d: usize) -> Result<ChainRecord> {
    if d < 2 {
        return Err(Error::InvalidParameter("need d >= 2".into()));
    }
    let k = 7 * d / 8;
    let c = (k as f64 * PI / (2.0 * (d as f64 + 1.0))).cos();
    let closed_form_lower = -1.0 / (2.0 * c * c);
    let path_value = spectra::path_distance_spectrum(d + 1).kth(k);
    let half_d = d as f64 / 2.0;
    Ok(ChainRecord {
        d,
        k,
        closed_form_lower,
        path_value,
        half_d,
        path_above_lower: path_value >= closed_form_lower - TOL,
        half_d_plus_path_positive: half_d + path_value > TOL,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilySpec;

    fn build(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    #[test]
    fn names_round_trip() {
        for id in BoundId::ALL {
            assert_eq!(id.name().parse::<BoundId>().unwrap(), id);
        }
        assert_eq!("nope".parse::<BoundId>(), Err(Error::UnknownBound("nope".into())));
        assert_eq!(BoundId::parse_list("all").unwrap(), BoundId::ALL.to_vec());
        assert_eq!(
            BoundId::parse_list("merris-chain,rho-plus-d3-pos,merris-chain").unwrap(),
            vec![BoundId::MerrisChain, BoundId::RhoPlusD3Pos]
        );
    }

    #[test]
    fn rho_plus_dn_upper_on_k4() {
        let c = check_bound(BoundId::RhoPlusDnUpper, &build("complete:4")).unwrap();
        assert!((c.lhs.unwrap().value()).abs() < 1e-9);
        assert_eq!(c.rhs.unwrap(), Side::Exact(Rational::from_integer(0)));
        assert_eq!((c.holds, c.equality, c.in_expected_family), (Some(true), Some(true), Some(true)));
    }

    #[test]
    fn rho_plus_d3_diam2_on_c4() {
        let c = check_bound(BoundId::RhoPlusD3Diam2, &build("cycle:4")).unwrap();
        assert!((c.lhs.unwrap().value() + 2.0 / 3.0).abs() < 1e-9);
        assert_eq!(c.rhs.unwrap(), Side::Exact(Rational::from_integer(-1)));
        assert!((c.margin_value().unwrap() - 1.0 / 3.0).abs() < 1e-9);
        assert_eq!((c.holds, c.equality), (Some(true), Some(false)));
        assert_eq!(c.in_expected_family, Some(true));
    }

    #[test]
    fn wiener_bound_on_c5() {
        let c = check_bound(BoundId::D1GeqWiener, &build("cycle:5")).unwrap();
        assert!((c.lhs.unwrap().value() - 6.0).abs() < 1e-9);
        assert_eq!(c.rhs.unwrap(), Side::Exact(Rational::from_integer(6)));
        assert_eq!((c.equality, c.in_expected_family), (Some(true), Some(true)));
    }

    #[test]
    fn remoteness_half_d_on_p4() {
        let c = check_bound(BoundId::RemotenessGeqHalfD, &build("path:4")).unwrap();
        assert_eq!(c.margin, Some(Side::Exact(Rational::new(1, 2))));
        assert_eq!(c.holds, Some(true));
    }

    #[test]
    fn applicability() {
        let k4 = build("complete:4");
        assert!(!check_bound(BoundId::RhoPlusD3Pos, &k4).unwrap().applicable);
        assert!(!check_bound(BoundId::D1MinusRhoNonComplete, &k4).unwrap().applicable);
        assert!(!check_bound(BoundId::RhoPlusD3Diam2, &build("path:3")).unwrap().applicable);
        assert!(!check_bound(BoundId::FFunctionPositive, &build("path:10")).unwrap().applicable);
        assert!(check_bound(BoundId::FFunctionPositive, &build("path:12")).unwrap().holds.unwrap());
        let k1 = build("complete:1");
        assert!(BoundId::ALL.iter().all(|&id| !check_bound(id, &k1).unwrap().applicable));
        let disc = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(check_bound(BoundId::D1GeqWiener, &disc), Err(Error::Disconnected));
    }

    #[test]
    fn stated_lower_bound_on_distance_eigenvalue_fails_for_p4() {
        // d_4(P4) = -2 - sqrt(2) < -3 = -d
        let c = check_bound(BoundId::DistMinGeqNegD, &build("path:4")).unwrap();
        assert!((c.lhs.unwrap().value() + 2.0 + 2f64.sqrt()).abs() < 1e-9);
        assert_eq!(c.holds, Some(false));
        let c4 = check_bound(BoundId::DistMinGeqNegD, &build("cycle:4")).unwrap();
        assert_eq!((c4.holds, c4.equality), (Some(true), Some(true)));
    }

    #[test]
    fn equality_family_examples() {
        assert!(equality_family_matches(BoundId::DistMinGeqNegD, &build("cycle:4")).unwrap());
        assert!(!equality_family_matches(BoundId::RhoPlusDnUpper, &build("path:4")).unwrap());
        let c = check_bound(BoundId::RhoPlusDnUpper, &build("path:4")).unwrap();
        assert_eq!(c.equality, Some(false));
        let kme = build("kme:5");
        assert!(equality_family_matches(BoundId::D1MinusRhoNonComplete, &kme).unwrap());
        let c = check_bound(BoundId::D1MinusRhoNonComplete, &kme).unwrap();
        assert_eq!((c.holds, c.equality), (Some(true), Some(true)));
        assert!(!equality_family_matches(BoundId::RemotenessUpper, &kme).unwrap());
    }

    #[test]
    fn p4_step_constant() {
        let c = check_bound(BoundId::D3GeqP4Step, &build("path:4")).unwrap();
        let rhs = c.rhs.unwrap().value();
        assert!(rhs > -1.2 && (rhs + 1.1623).abs() < 1e-4);
        assert_eq!(c.equality, Some(true));
    }

    #[test]
    fn f_function_values() {
        let f11 = f_function(11.0).unwrap();
        let s = (77.0 * PI / 192.0).sin();
        assert!((f11 - (10.0 / 11.0 - s * s)).abs() < 1e-15);
        assert!(f11 > 0.0);
        assert!(f_function(0.0).is_err());
        assert!(f_function(-1.0).is_err());
        for d in 11..=200 {
            let s = (7.0 * d as f64 * PI / (16.0 * (d as f64 + 1.0))).sin();
            assert!(1.0 - 1.0 / d as f64 > s * s);
        }
    }

    #[test]
    fn chain_records() {
        let r5 = conjecture2_chain(5).unwrap();
        assert_eq!(r5.k, 4);
        assert!((r5.path_value + 1.0).abs() < 1e-9);
        let r8 = conjecture2_chain(8).unwrap();
        assert!((r8.path_value + 2.0).abs() < 1e-9);
        let r10 = conjecture2_chain(10).unwrap();
        assert!((r10.path_value + 1.7831).abs() < 1e-4 && r10.half_d == 5.0);
        assert!(conjecture2_chain(1).is_err());
    }
}

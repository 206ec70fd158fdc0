//! Deterministic JSON, CSV and text rendering.
//!
//! Floats always print with six decimals (ties to even); exact rationals
//! travel as `"p/q"` strings next to their float value.

use std::io;

use serde::Serialize;
use serde_json::ser::Formatter;

use crate::bounds::BoundCheck;
use crate::distance::InvariantReport;
use crate::search::{RankedWitness, Table1Row, VerificationReport, TABLE1_REFERENCE};
use crate::spectra::Spectrum;

pub fn fmt6(x: f64) -> String {
    if !x.is_finite() {
        return "nan".into();
    }
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

struct Fixed6;

impl Formatter for Fixed6 {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(fmt6(value).as_bytes())
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, value as f64)
    }
}

/// One-line JSON with fixed float formatting.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Fixed6);
    value.serialize(&mut ser).expect("in-memory serialization");
    String::from_utf8(buf).expect("serde_json emits UTF-8")
}

#[derive(Serialize)]
pub struct ComputeRecord<'a> {
    pub graph6: &'a str,
    #[serde(flatten)]
    pub invariants: &'a InvariantReport,
}

#[derive(Serialize)]
pub struct SpectrumRecord<'a> {
    pub graph6: &'a str,
    pub distance: &'a Spectrum,
    pub laplacian: &'a Spectrum,
}

#[derive(Serialize)]
pub struct CheckRecord<'a> {
    pub graph6: &'a str,
    pub checks: &'a [BoundCheck],
}

fn csv_text(header: &[&str], rows: Vec<Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(vec![]);
    w.write_record(header).expect("in-memory csv");
    for r in rows {
        w.write_record(&r).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv is UTF-8")
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn opt_f(x: Option<f64>) -> String {
    x.map(fmt6).unwrap_or_default()
}

pub fn compute_csv(records: &[(String, InvariantReport)]) -> String {
    let header = [
        "graph6",
        "n",
        "m",
        "diameter",
        "girth",
        "remoteness",
        "remoteness_value",
        "wiener",
        "min_degree",
        "is_complete",
        "complete_multipartite_parts",
        "is_transmission_regular",
    ];
    let rows = records
        .iter()
        .map(|(g6, r)| {
            vec![
                g6.clone(),
                r.n.to_string(),
                r.m.to_string(),
                r.diameter.to_string(),
                opt(r.girth),
                opt(r.remoteness.map(|x| crate::rational::format_ratio(&x.exact))),
                opt_f(r.remoteness.map(|x| x.value)),
                r.wiener.to_string(),
                r.min_degree.to_string(),
                r.is_complete.to_string(),
                r.complete_multipartite_parts
                    .as_ref()
                    .map(|p| p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";"))
                    .unwrap_or_default(),
                r.is_transmission_regular.to_string(),
            ]
        })
        .collect();
    csv_text(&header, rows)
}

pub fn compute_text(g6: &str, r: &InvariantReport) -> String {
    let rho = r
        .remoteness
        .map(|x| format!("{} ({})", crate::rational::format_ratio(&x.exact), fmt6(x.value)))
        .unwrap_or_else(|| "undefined".into());
    format!(
        "graph {g6}\n  n = {}  m = {}  diameter = {}  girth = {}\n  remoteness = {rho}  wiener = {}  min degree = {}\n  complete = {}  complete multipartite = {}  transmission regular = {}\n",
        r.n,
        r.m,
        r.diameter,
        r.girth.map_or("none".into(), |g| g.to_string()),
        r.wiener,
        r.min_degree,
        r.is_complete,
        r.complete_multipartite_parts.as_ref().map_or("no".into(), |p| format!("{p:?}")),
        r.is_transmission_regular,
    )
}

pub fn spectrum_csv(records: &[(String, Spectrum, Spectrum)]) -> String {
    let mut rows = vec![];
    for (g6, dist, lap) in records {
        for (matrix, s) in [("distance", dist), ("laplacian", lap)] {
            for (k, x) in s.eigenvalues.iter().enumerate() {
                rows.push(vec![g6.clone(), matrix.into(), (k + 1).to_string(), fmt6(*x)]);
            }
        }
    }
    csv_text(&["graph6", "matrix", "k", "eigenvalue"], rows)
}

pub fn spectrum_text(g6: &str, dist: &Spectrum, lap: &Spectrum) -> String {
    let join = |s: &Spectrum| s.eigenvalues.iter().map(|&x| fmt6(x)).collect::<Vec<_>>().join(" ");
    format!("graph {g6}\n  distance:  {}\n  laplacian: {}\n", join(dist), join(lap))
}

fn side_text(s: Option<crate::bounds::Side>) -> String {
    s.map(|x| fmt6(x.value())).unwrap_or_default()
}

pub fn check_csv(records: &[(String, Vec<BoundCheck>)]) -> String {
    let header = [
        "graph6",
        "bound",
        "applicable",
        "relation",
        "lhs",
        "rhs",
        "margin",
        "holds",
        "equality",
        "expected_family",
        "in_expected_family",
    ];
    let mut rows = vec![];
    for (g6, checks) in records {
        for c in checks {
            rows.push(vec![
                g6.clone(),
                c.id.to_string(),
                c.applicable.to_string(),
                c.relation.symbol().into(),
                side_text(c.lhs),
                side_text(c.rhs),
                side_text(c.margin),
                opt(c.holds),
                opt(c.equality),
                opt(c.expected_equality_family.map(|f| f.name())),
                opt(c.in_expected_family),
            ]);
        }
    }
    csv_text(&header, rows)
}

pub fn check_text(g6: &str, checks: &[BoundCheck]) -> String {
    let mut out = format!("graph {g6}\n");
    for c in checks {
        if !c.applicable {
            out.push_str(&format!("  {:<28} n/a\n", c.id.name()));
            continue;
        }
        let verdict = if c.holds == Some(true) { "holds" } else { "VIOLATED" };
        let eq = if c.equality == Some(true) { " (equality)" } else { "" };
        out.push_str(&format!(
            "  {:<28} {verdict}{eq}  lhs {} {} rhs {}  margin {}\n",
            c.id.name(),
            side_text(c.lhs),
            c.relation.symbol(),
            side_text(c.rhs),
            side_text(c.margin),
        ));
    }
    out
}

pub fn verify_csv(r: &VerificationReport) -> String {
    let header = [
        "bound",
        "graphs_checked",
        "applicable",
        "violations_total",
        "min_margin",
        "min_margin_witness",
        "equality_total",
        "expected_family",
        "family_total",
        "family_and_equality",
        "characterization",
    ];
    let rows = r
        .bounds
        .iter()
        .map(|b| {
            vec![
                b.id.to_string(),
                b.graphs_checked.to_string(),
                b.applicable.to_string(),
                b.violations_total.to_string(),
                opt_f(b.min_margin),
                b.min_margin_witness.clone().unwrap_or_default(),
                b.equality_total.to_string(),
                b.expected_family.unwrap_or_default().into(),
                b.family_total.to_string(),
                b.family_and_equality.to_string(),
                b.characterization.map(|c| to_json(&c).trim_matches('"').to_string()).unwrap_or_default(),
            ]
        })
        .collect();
    csv_text(&header, rows)
}

pub fn verify_text(r: &VerificationReport) -> String {
    let mut out = format!("{} ({} graphs)\n", r.source, r.graphs_checked);
    for b in &r.bounds {
        out.push_str(&format!(
            "  {:<28} applicable {:>8}  violations {:>6}  min margin {:>12}  equality {:>6}",
            b.id.name(),
            b.applicable,
            b.violations_total,
            opt_f(b.min_margin),
            b.equality_total,
        ));
        if let (Some(f), Some(c)) = (b.expected_family, b.characterization) {
            out.push_str(&format!("  vs {f}: {}", to_json(&c).trim_matches('"')));
        }
        out.push('\n');
        if let Some(note) = b.note {
            out.push_str(&format!("    note: {note}\n"));
        }
    }
    out
}

pub fn extremal_csv(ws: &[RankedWitness]) -> String {
    let rows =
        ws.iter().enumerate().map(|(i, w)| vec![(i + 1).to_string(), w.graph6.clone(), fmt6(w.margin)]).collect();
    csv_text(&["rank", "graph6", "margin"], rows)
}

pub fn extremal_text(ws: &[RankedWitness]) -> String {
    ws.iter().enumerate().map(|(i, w)| format!("{:>4}  {:<12} {}\n", i + 1, w.graph6, fmt6(w.margin))).collect()
}

fn half_d_text(x: f64) -> String {
    format!("{x}")
}

#[derive(Serialize)]
pub struct Table1Record {
    pub d: usize,
    pub half_d: f64,
    pub k: usize,
    pub value: f64,
    pub reference: f64,
}

pub fn table1_records(rows: &[Table1Row]) -> Vec<Table1Record> {
    rows.iter()
        .zip(TABLE1_REFERENCE)
        .map(|(r, (_, reference))| Table1Record { d: r.d, half_d: r.half_d, k: r.k, value: r.value, reference })
        .collect()
}

/// Table rows keep the four-decimal precision of the reference values.
pub fn table1_csv(rows: &[Table1Row]) -> String {
    let rows = rows.iter().map(|r| vec![r.d.to_string(), half_d_text(r.half_d), format!("{:.4}", r.value)]).collect();
    csv_text(&["d", "half_d", "value"], rows)
}

pub fn table1_text(rows: &[Table1Row]) -> String {
    let mut out = String::from("   d  d/2   k  d_k(P_{d+1})\n");
    for r in rows {
        out.push_str(&format!("{:>4} {:>4} {:>3}  {:.4}\n", r.d, half_d_text(r.half_d), r.k, r.value));
    }
    out
}

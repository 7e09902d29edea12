//! Text, JSON and CSV renderings of command results.

use serde_json::{json, Map, Value};

use ratshuffle::engine::{PathReport, SymmetryReport, VerificationReport};
use ratshuffle::{CoeffPoly, DyckPath, ParkingFunction, Partition, SchurExpansion};

use crate::Format;

pub type Rendered = String;

pub enum Payload {
    Paths(Vec<DyckPath>),
    ParkFns(Vec<ParkingFunction>),
    PathExpansions(Vec<PathReport>),
    Total(SchurExpansion),
    Verify(VerificationReport),
    Symmetries(SymmetryReport),
}

pub fn render(command: &str, m: u32, n: u32, format: Format, payload: &Payload) -> Rendered {
    match format {
        Format::Text => text(payload),
        Format::Json => {
            let mut doc = json!({ "m": m, "n": n, "command": command, "results": results_json(payload) });
            if let Payload::Verify(r) = payload {
                doc["summary"] = tallies_json(&r.checks);
                doc["passed"] = json!(r.passed());
            }
            let mut s = serde_json::to_string_pretty(&doc).expect("json value serializes");
            s.push('\n');
            s
        }
        Format::Csv => csv_text(payload),
    }
}

/// Exact integer as a JSON number, however large.
fn big_number(digits: &str) -> Value {
    serde_json::from_str(digits).expect("integer literal is valid json")
}

fn parts(lam: &Partition) -> Value {
    json!(lam.parts())
}

fn ides_text(p: &ParkingFunction) -> String {
    let v: Vec<String> = p.ides().iter().map(ToString::to_string).collect();
    format!("{{{}}}", v.join(","))
}

fn values_text(p: &ParkingFunction) -> String {
    let v: Vec<String> = p.values().iter().map(ToString::to_string).collect();
    format!("({})", v.join(","))
}

fn poly_json(c: &CoeffPoly) -> Value {
    // highest q first, matching the text form
    Value::Array(
        c.terms()
            .rev()
            .map(|(q, t, k)| json!({ "q": q, "t": t, "coeff": big_number(&k.to_string()) }))
            .collect(),
    )
}

fn schur_json(e: &SchurExpansion) -> Value {
    Value::Array(
        e.terms()
            .map(|(lam, c)| json!({ "partition": parts(lam), "terms": poly_json(c) }))
            .collect(),
    )
}

fn tallies_json(checks: &std::collections::BTreeMap<&'static str, ratshuffle::engine::CheckTally>) -> Value {
    let mut map = Map::new();
    for (name, c) in checks {
        map.insert((*name).to_string(), json!({ "passed": c.passed, "failed": c.failed }));
    }
    Value::Object(map)
}

fn results_json(payload: &Payload) -> Value {
    let rows: Vec<Value> = match payload {
        Payload::Paths(paths) => paths
            .iter()
            .map(|p| json!({ "path": parts(p.shape()), "area": p.area() }))
            .collect(),
        Payload::ParkFns(pfs) => pfs
            .iter()
            .map(|p| {
                json!({
                    "values": p.values(),
                    "path": parts(p.path().shape()),
                    "area": p.area(),
                    "dinv": p.dinv(),
                    "ides": p.ides(),
                })
            })
            .collect(),
        Payload::PathExpansions(reports) => reports
            .iter()
            .map(|r| json!({ "path": parts(r.path.shape()), "area": r.area, "schur": schur_json(&r.f) }))
            .collect(),
        Payload::Total(e) => vec![json!({ "path": Value::Null, "area": Value::Null, "schur": schur_json(e) })],
        Payload::Verify(r) => r
            .per_path
            .iter()
            .map(|d| {
                json!({
                    "path": parts(d.path.shape()),
                    "area": d.path.area(),
                    "fiber_size": d.fiber_size,
                    "spin0": d.spin0,
                    "dinv0": d.dinv0,
                    "passed": d.passed(),
                    "checks": tallies_json(&d.checks),
                })
            })
            .collect(),
        Payload::Symmetries(s) => vec![json!({
            "qt_symmetric": s.qt_symmetric,
            "swap_hooks_equal": s.swap_hooks_equal,
            "swap_equal": s.swap_equal,
            "f_mn": schur_json(&s.f_mn),
            "f_nm": schur_json(&s.f_nm),
        })],
    };
    Value::Array(rows)
}

fn text(payload: &Payload) -> Rendered {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    match payload {
        Payload::Paths(paths) => {
            for p in paths {
                line(format!("{} area={}", p.shape(), p.area()));
            }
        }
        Payload::ParkFns(pfs) => {
            for p in pfs {
                line(format!(
                    "{} path={} area={} dinv={} ides={}",
                    values_text(p),
                    p.path().shape(),
                    p.area(),
                    p.dinv(),
                    ides_text(p)
                ));
            }
        }
        Payload::PathExpansions(reports) => {
            for r in reports {
                line(format!("{} area={}: {}", r.path.shape(), r.area, r.f));
            }
        }
        Payload::Total(e) => line(e.to_string()),
        Payload::Verify(r) => {
            for (name, c) in &r.checks {
                line(format!("{name}: {} passed, {} failed", c.passed, c.failed));
            }
            line(format!(
                "verify {}/{}: {} paths, {} failures, {}",
                r.m,
                r.n,
                r.per_path.len(),
                r.failures(),
                if r.passed() { "PASS" } else { "FAIL" }
            ));
        }
        Payload::Symmetries(s) => {
            line(format!("F_{{{}/{}}} = {}", s.m, s.n, s.f_mn));
            line(format!("F_{{{}/{}}} = {}", s.n, s.m, s.f_nm));
            line(format!("q<->t symmetric: {}", s.qt_symmetric));
            line(format!("hook coefficients equal: {}", s.swap_hooks_equal));
            line(format!("expansions equal: {}", s.swap_equal));
        }
    }
    out
}

fn csv_text(payload: &Payload) -> Rendered {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut row = |fields: Vec<String>| w.write_record(&fields).expect("in-memory csv write");
    let s = |x: &dyn ToString| x.to_string();
    let schur_rows = |row: &mut dyn FnMut(Vec<String>), path: &str, area: &str, e: &SchurExpansion| {
        for (lam, c) in e.terms() {
            for (q, t, k) in c.terms().rev() {
                row(vec![path.into(), area.into(), lam.to_string(), s(&q), s(&t), k.to_string()]);
            }
        }
    };
    match payload {
        Payload::Paths(paths) => {
            row(vec!["path".into(), "area".into()]);
            for p in paths {
                row(vec![p.shape().to_string(), s(&p.area())]);
            }
        }
        Payload::ParkFns(pfs) => {
            row(["values", "path", "area", "dinv", "ides"].map(String::from).to_vec());
            for p in pfs {
                row(vec![values_text(p), p.path().shape().to_string(), s(&p.area()), s(&p.dinv()), ides_text(p)]);
            }
        }
        Payload::PathExpansions(reports) => {
            row(["path", "area", "partition", "q", "t", "coeff"].map(String::from).to_vec());
            for r in reports {
                schur_rows(&mut row, &r.path.shape().to_string(), &s(&r.area), &r.f);
            }
        }
        Payload::Total(e) => {
            row(["path", "area", "partition", "q", "t", "coeff"].map(String::from).to_vec());
            schur_rows(&mut row, "", "", e);
        }
        Payload::Verify(r) => {
            row(["check", "passed", "failed"].map(String::from).to_vec());
            for (name, c) in &r.checks {
                row(vec![s(name), s(&c.passed), s(&c.failed)]);
            }
        }
        Payload::Symmetries(sym) => {
            row(["property", "value"].map(String::from).to_vec());
            row(vec!["qt_symmetric".into(), s(&sym.qt_symmetric)]);
            row(vec!["swap_hooks_equal".into(), s(&sym.swap_hooks_equal)]);
            row(vec!["swap_equal".into(), s(&sym.swap_equal)]);
        }
    }
    let bytes = w.into_inner().expect("in-memory csv flush");
    String::from_utf8(bytes).expect("csv output is utf-8")
}

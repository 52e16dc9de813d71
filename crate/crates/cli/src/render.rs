//! Plain-text rendering of a [`Report`].

use std::collections::BTreeMap;
use std::fmt::Write;

use kideal::blocks::InvariantDims;

use crate::report::{Outcome, Report};

const ROWS: [&str; 6] = ["Z", "T1perp", "Zbar", "J(Zbar)", "J^2(Zbar)", "J/J^2"];

fn column(d: &InvariantDims) -> [usize; 6] {
    [d.center, d.t1perp, d.zbar, d.radical, d.radical_sq, d.radical_quot]
}

fn table(headers: &[String], cols: &[[usize; 6]]) -> String {
    let width = headers.iter().map(String::len).max().unwrap_or(0).max(6) + 2;
    let mut out = format!("{:<10}", "");
    for h in headers {
        let _ = write!(out, "{h:>width$}");
    }
    out.push('\n');
    for (r, name) in ROWS.iter().enumerate() {
        let _ = write!(out, "{name:<10}");
        for c in cols {
            let _ = write!(out, "{:>width$}", c[r]);
        }
        out.push('\n');
    }
    out
}

pub fn render(r: &Report) -> String {
    let mut out = String::new();
    if let Some(g) = &r.group {
        let _ = writeln!(out, "{}: order {}, q = {}^{}, defect n = {}, q' = {}", g.name, g.order, g.p, g.exponent, g.defect, g.q_odd);
        let _ = writeln!(out, "{} conjugacy classes", g.classes.len());
        let mut line = String::new();
        for c in &g.classes {
            let item = format!("{}({}) ", c.label, c.size);
            if line.len() + item.len() > 96 {
                let _ = writeln!(out, "  {}", line.trim_end());
                line.clear();
            }
            line.push_str(&item);
        }
        if !line.is_empty() {
            let _ = writeln!(out, "  {}", line.trim_end());
        }
        out.push('\n');
    }
    if let (Some(d), Some(b)) = (&r.dims, &r.blocks) {
        let whole = InvariantDims {
            center: d.center_dim,
            t1perp: d.t1perp_dim,
            zbar: d.zbar_dim,
            radical: d.radical_dim,
            radical_sq: d.radical_sq_dim,
            radical_quot: d.jmodj2_dim,
        };
        let mut headers = vec!["kG".to_string(), "B0".to_string()];
        let mut cols = vec![column(&whole), column(&b.rows[b.principal])];
        let mut families: BTreeMap<[usize; 6], usize> = BTreeMap::new();
        for (i, row) in b.rows.iter().enumerate() {
            if i != b.principal {
                *families.entry(column(row)).or_default() += 1;
            }
        }
        for (col, count) in families.iter().rev() {
            headers.push(format!("{count} x block"));
            cols.push(*col);
        }
        let _ = writeln!(out, "{} blocks (idempotents over F_2^{}); family columns are per block", b.rows.len(), b.field_degree);
        out.push_str(&table(&headers, &cols));
        let _ = writeln!(out, "T_n^perp chain: {:?}", d.tn_perp_chain);
    } else if let Some(d) = &r.dims {
        if let (Some(a), Some(k)) = (d.algebra_dim, d.commutator_dim) {
            let _ = writeln!(out, "algebra dim {a}, commutator dim {k}");
        }
        let _ = writeln!(out, "Z {}, T1perp {}, Zbar {}", d.center_dim, d.t1perp_dim, d.zbar_dim);
        let _ = writeln!(out, "J(Zbar) {}, J^2(Zbar) {}, J/J^2 {}", d.radical_dim, d.radical_sq_dim, d.jmodj2_dim);
        let _ = writeln!(out, "T_n^perp chain: {:?}", d.tn_perp_chain);
        if let Some(c) = &d.radical_chain {
            let _ = writeln!(out, "radical chain: {c:?}");
        }
    }
    if let Some(s) = &r.scalar {
        let _ = writeln!(
            out,
            "\nscalar c = {} (dim J/J^2 of B0: direct {}, subtraction {})",
            s.scalar_c, s.jmodj2_direct, s.jmodj2_subtraction
        );
        let _ = writeln!(
            out,
            "D(2A)^{}(c) with the same dims as B0: c in {:?}",
            s.presented_s, s.presented_match
        );
    }
    if !r.assertions.is_empty() {
        out.push('\n');
    }
    for a in &r.assertions {
        let tag = match a.outcome {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Skipped => "SKIP",
        };
        match (a.expected, a.computed) {
            (Some(e), Some(c)) => {
                let _ = writeln!(out, "{tag} {} (expected {e}, computed {c})", a.name);
            }
            _ => {
                let _ = writeln!(out, "{tag} {}", a.name);
            }
        }
        for d in &a.detail {
            let _ = writeln!(out, "     {d}");
        }
    }
    if let Some(t) = r.timings.get("total") {
        let _ = writeln!(out, "\ntotal {t:.0} ms");
    }
    out
}

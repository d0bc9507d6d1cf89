use std::collections::BTreeSet;

use domtab::bijection::{
    catalan_composition_count, count_domino_tableaux, count_hook, count_rectangle,
    fibonacci_composition_count, gamma, GammaImage, IncreasingTableau,
};
use domtab::combinatorics::{binomial, fibonacci};
use domtab::sieving::{
    conjecture_probe, orbits, verify_csp, CspReport, RealizabilityReport, Verdict,
};
use domtab::tableaux::{count_tableaux, enumerate_tableaux, enumerate_tilings, linear_extensions};
use domtab::tableaux::{DominoTableau, Partition};
use domtab::{Error, Result};
use serde_json::json;

use crate::report::{table, Report};

fn subset_string(s: &BTreeSet<u32>) -> String {
    let items: Vec<String> = s.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(","))
}

fn closed_count(shape: &Partition) -> num_bigint::BigInt {
    if let Some((rows, cols)) = shape.as_rectangle() {
        return count_rectangle(rows, cols);
    }
    if let Some((n, m)) = shape.as_hook() {
        if let Ok(c) = count_hook(n, m) {
            return c;
        }
    }
    count_domino_tableaux(shape)
}

pub fn count(shape: &Partition, brute: bool) -> Result<Report> {
    let count = closed_count(shape);
    if !brute {
        return Ok(Report::new(
            json!({ "count": count.to_string() }),
            vec!["count"],
            vec![vec![count.to_string()]],
        ));
    }
    let oracle = count_tableaux(shape)?;
    let matches = oracle == count;
    Ok(Report::new(
        json!({
            "count": count.to_string(),
            "brute": oracle.to_string(),
            "match": matches,
        }),
        vec!["count", "brute", "match"],
        vec![vec![
            count.to_string(),
            oracle.to_string(),
            matches.to_string(),
        ]],
    )
    .with_ok(matches))
}

/// The first `limit` tableaux in canonical order, without building the rest.
fn first_tableaux(shape: &Partition, limit: Option<usize>) -> Vec<DominoTableau> {
    let Some(limit) = limit else {
        return enumerate_tableaux(shape);
    };
    let mut out = Vec::new();
    for tiling in enumerate_tilings(shape) {
        if out.len() >= limit {
            break;
        }
        out.extend(linear_extensions(&tiling));
    }
    out.truncate(limit);
    out
}

pub fn enumerate(shape: &Partition, limit: Option<usize>) -> Result<Report> {
    if shape.weight() % 2 == 1 {
        return Err(Error::OddWeight {
            shape: shape.to_string(),
            weight: shape.weight(),
        });
    }
    let total = count_domino_tableaux(shape);
    let shown = first_tableaux(shape, limit);
    let mut records = Vec::new();
    let mut text = format!("shape {shape}: {total} tableaux, showing {}\n", shown.len());
    for (i, t) in shown.iter().enumerate() {
        for d in t.dominoes() {
            records.push(vec![
                (i + 1).to_string(),
                d.label.to_string(),
                d.row.to_string(),
                d.col.to_string(),
                if d.is_horizontal() { "H" } else { "V" }.to_string(),
            ]);
        }
        text += &format!("\n#{}\n{t}\n", i + 1);
    }
    Ok(Report::new(
        json!({
            "shape": shape,
            "total": total.to_string(),
            "shown": shown.len(),
            "tableaux": shown,
        }),
        vec!["index", "label", "row", "col", "orient"],
        records,
    )
    .with_text(text))
}

pub fn orbit_report(n: u32) -> Result<Report> {
    let report = orbits(n)?;
    let records = report
        .orbits
        .iter()
        .map(|o| vec![o.size.to_string(), subset_string(&o.representative)])
        .collect();
    let rows: Vec<Vec<String>> = report
        .orbits
        .iter()
        .map(|o| {
            vec![
                o.size.to_string(),
                subset_string(&o.representative),
                o.word.clone(),
            ]
        })
        .collect();
    let text = format!(
        "n = {n}: {} orbits on {} tableaux\n{}",
        report.orbits.len(),
        report.total,
        table(&["size", "representative", "word"], &rows)
    );
    Ok(Report::new(
        serde_json::to_value(&report).expect("orbit report serializes"),
        vec!["size", "representative"],
        records,
    )
    .with_text(text))
}

fn csp_records(report: &CspReport) -> Vec<Vec<String>> {
    report
        .rows
        .iter()
        .map(|r| {
            vec![
                report.n.to_string(),
                r.k.to_string(),
                r.fixed.as_ref().map_or("-".into(), ToString::to_string),
                r.poly.to_string(),
                r.closed.to_string(),
                r.matches.to_string(),
            ]
        })
        .collect()
}

fn verdict_word(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

pub fn csp(ns: Vec<u32>, single: bool) -> Result<Report> {
    let reports: Vec<CspReport> = ns.into_iter().map(verify_csp).collect::<Result<_>>()?;
    let pass = reports.iter().all(|r| r.verdict == Verdict::Pass);
    let header = vec!["n", "k", "fixed", "poly", "closed", "match"];
    let mut records = Vec::new();
    let mut text = String::new();
    for r in &reports {
        let rows = csp_records(r);
        text += &format!("n = {}\n", r.n);
        text += &table(
            &header[1..],
            &rows.iter().map(|row| row[1..].to_vec()).collect::<Vec<_>>(),
        );
        text += &format!("verdict: {}\n\n", verdict_word(r.verdict == Verdict::Pass));
        records.extend(rows);
    }
    text = text.trim_end().to_string() + "\n";
    let json = if single {
        serde_json::to_value(&reports[0])
    } else {
        serde_json::to_value(json!({ "reports": reports, "verdict": verdict_word(pass) }))
    }
    .expect("csp report serializes");
    Ok(Report::new(json, header, records)
        .with_text(text)
        .with_ok(pass))
}

pub fn identities(n_max: u32) -> Result<Report> {
    let mut rows = Vec::new();
    let mut records = Vec::new();
    let mut pass = true;
    for n in 1..=n_max {
        let central = binomial(n as u64, (n / 2) as i64);
        let catalan_sum = catalan_composition_count(n);
        let fib = fibonacci(n as u64);
        let fib_sum = fibonacci_composition_count(n);
        let ok = central == catalan_sum && fib == fib_sum;
        pass &= ok;
        records.push(vec![
            n.to_string(),
            central.to_string(),
            catalan_sum.to_string(),
            fib.to_string(),
            fib_sum.to_string(),
            if ok { "OK" } else { "MISMATCH" }.to_string(),
        ]);
        rows.push(json!({
            "n": n,
            "binomial": central.to_string(),
            "catalan_sum": catalan_sum.to_string(),
            "fibonacci": fib.to_string(),
            "fibonacci_sum": fib_sum.to_string(),
            "ok": ok,
        }));
    }
    Ok(Report::new(
        json!({ "rows": rows, "verdict": verdict_word(pass) }),
        vec![
            "n",
            "binomial",
            "catalan_sum",
            "fibonacci",
            "fibonacci_sum",
            "status",
        ],
        records,
    )
    .with_ok(pass))
}

pub fn tableau_by_index(shape: &Partition, index: usize) -> Result<DominoTableau> {
    first_tableaux(shape, Some(index + 1))
        .into_iter()
        .nth(index)
        .ok_or_else(|| Error::OutOfRange(format!("shape {shape} has no tableau at index {index}")))
}

fn increasing_text(name: &str, t: &IncreasingTableau) -> String {
    let mut s = format!("{name} {}\n", t.shape());
    for row in t.rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        s += &format!("  {}\n", cells.join(" "));
    }
    s
}

pub fn gamma_report(t: &DominoTableau) -> Result<Report> {
    let image: GammaImage = gamma(t)?;
    let mut records = Vec::new();
    for (name, part) in [("I", &image.type_one), ("II", &image.type_two)] {
        for (i, row) in part.rows().iter().enumerate() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            records.push(vec![name.to_string(), (i + 1).to_string(), cells.join(" ")]);
        }
    }
    let text = format!(
        "{}{}",
        increasing_text("type I", &image.type_one),
        increasing_text("type II", &image.type_two)
    );
    Ok(Report::new(
        serde_json::to_value(&image).expect("gamma image serializes"),
        vec!["type", "row", "entries"],
        records,
    )
    .with_text(text))
}

fn realizability_records(r: &RealizabilityReport, records: &mut Vec<Vec<String>>) {
    for (d, fix) in &r.fix {
        records.push(vec![
            r.order.to_string(),
            d.to_string(),
            fix.to_string(),
            r.orbit_counts
                .get(d)
                .map_or("-".into(), ToString::to_string),
        ]);
    }
}

fn verdict_text(r: &RealizabilityReport) -> String {
    match r.verdict {
        domtab::sieving::Realizability::Realizable => "Realizable".into(),
        domtab::sieving::Realizability::Fails(reason) => format!("Fails ({reason:?})"),
    }
}

pub fn conjecture(k: u32, n: u32, order: Option<u64>) -> Result<Report> {
    let probe = conjecture_probe(k, n, order)?;
    let mut records = Vec::new();
    realizability_records(&probe.default_order, &mut records);
    if let Some(r) = &probe.requested_order {
        realizability_records(r, &mut records);
    }
    let mut text = format!(
        "k = {k}, n = {n}\nf(q) = {}\nnonnegative coefficients: {}\nf(1) = {} (expected {})\n",
        probe.polynomial, probe.nonnegative, probe.value_at_one, probe.expected_count
    );
    for r in std::iter::once(&probe.default_order).chain(&probe.requested_order) {
        text += &format!("order {}: {}\n", r.order, verdict_text(r));
    }
    Ok(Report::new(
        serde_json::to_value(&probe).expect("probe serializes"),
        vec!["order", "divisor", "fixed", "orbits"],
        records,
    )
    .with_text(text)
    .with_ok(probe.consistent()))
}

pub fn read_tableau(json: &str) -> Result<DominoTableau> {
    let t: DominoTableau =
        serde_json::from_str(json).map_err(|e| Error::InvalidTableau(e.to_string()))?;
    Ok(t)
}

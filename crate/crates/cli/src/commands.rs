use std::fmt::Write as _;
use std::time::Instant;

use rayon::prelude::*;
use recip_core::curve::{is_affine_smooth, is_regular_at_infinity};
use recip_core::egyptian::integral_closure_at;
use recip_core::puiseux::PlaceAtInfinity;
use recip_core::semigroup::{recip_analysis_at, Completeness, VRecip};
use recip_core::{classify, AffinePlaneCurve, Error};

use crate::document::AnalysisDocument;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CORPUS_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_ANALYSIS: i32 = 3;

#[derive(Clone, Copy, Debug, Default)]
pub struct AnalyzeOptions {
    pub bound: Option<u64>,
    pub truncation: Option<usize>,
}

fn exit_code(e: &Error) -> i32 {
    if e.is_input_error() {
        EXIT_INPUT
    } else {
        EXIT_ANALYSIS
    }
}

fn fill(doc: &mut AnalysisDocument, c: &AffinePlaneCurve, opts: &AnalyzeOptions) -> Result<(), Error> {
    let verdict = classify(c)?;
    doc.egyptian = Some(verdict.egyptian);
    doc.points_at_infinity = Some(verdict.points_at_infinity);
    doc.places_at_infinity = Some(verdict.places_at_infinity.value());
    doc.places_exact = Some(verdict.places_at_infinity.is_exact());
    doc.unique_point = verdict.unique_point.as_ref().map(|p| p.to_string());
    doc.unique_point_xyz = verdict.unique_point.as_ref().map(|p| p.to_xyz());
    doc.regular_at_infinity = Some(is_regular_at_infinity(c)?);
    doc.notes.extend(verdict.notes.iter().cloned());
    if verdict.egyptian {
        return Ok(());
    }

    let place = PlaceAtInfinity::unique(c, opts.truncation)?;
    let closure = integral_closure_at(&verdict, &place)?;
    doc.integral_closure = Some(if closure.local_ring_is_dvr {
        format!("local ring at {}, a DVR containing R(D)", closure.point)
    } else {
        format!("valuation ring of the unique place over the singular point {}", closure.point)
    });
    doc.place_parametrization = Some(closure.parametrization);

    if !is_affine_smooth(c)? {
        doc.notes.push("semigroup analysis skipped: the affine curve is singular".into());
        return Ok(());
    }
    let r = recip_analysis_at(c, &place, opts.bound)?;
    doc.semigroup_generators = Some(r.h.minimal_generators().to_vec());
    doc.genus = Some(r.genus);
    doc.mu = Some(r.mu);
    doc.weierstrass_point = Some(r.weierstrass_point);
    doc.v_recip_kind = Some(r.v_recip.kind().into());
    doc.dvr = Some(r.recip_is_dvr);
    doc.colength = r.colength;
    doc.semigroup_bound = Some(r.bound);
    doc.stabilized = Some(r.stabilized);
    doc.completion = Some(
        match r.completeness {
            Completeness::Certified => "certified",
            Completeness::Heuristic => "heuristic-complete",
        }
        .into(),
    );
    if let VRecip::Sandwich { .. } = r.v_recip {
        doc.notes.push("Weierstrass point: v(R(D)) is only bounded".into());
    }
    Ok(())
}

/// Analyze one polynomial; returns the report and the process exit code.
pub fn cmd_analyze(input: &str, opts: &AnalyzeOptions) -> (AnalysisDocument, i32) {
    let start = Instant::now();
    let mut doc = AnalysisDocument::new(input.trim());
    let result = AffinePlaneCurve::parse(input).and_then(|c| {
        doc.input = c.text();
        fill(&mut doc, &c, opts)
    });
    doc.timing_ms = start.elapsed().as_millis() as u64;
    match result {
        Ok(()) => (doc, EXIT_OK),
        Err(e) => {
            doc.status = e.kind().into();
            doc.error = Some(e.to_string());
            let code = exit_code(&e);
            (doc, code)
        }
    }
}

/// One analyzed corpus line.
#[derive(Clone, Debug)]
pub struct CorpusRow {
    pub line: usize,
    pub doc: AnalysisDocument,
}

/// Polynomials of a corpus file with their 1-based line numbers; `#` starts
/// a comment and blank lines are skipped.
pub fn read_corpus(text: &str) -> Vec<(usize, String)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, l)| {
            let body = l.split('#').next().unwrap_or("").trim();
            (!body.is_empty()).then(|| (i + 1, body.to_string()))
        })
        .collect()
}

/// Analyze every line of a corpus concurrently, keeping file order.
pub fn cmd_corpus(text: &str, opts: &AnalyzeOptions) -> (Vec<CorpusRow>, i32) {
    let rows: Vec<CorpusRow> = read_corpus(text)
        .into_par_iter()
        .map(|(line, poly)| CorpusRow { line, doc: cmd_analyze(&poly, opts).0 })
        .collect();
    let code = if rows.iter().all(|r| r.doc.is_ok()) { EXIT_OK } else { EXIT_CORPUS_FAILURE };
    (rows, code)
}

fn cell<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".into(), T::to_string)
}

/// Aligned table with one row per corpus line.
pub fn corpus_table(rows: &[CorpusRow]) -> String {
    let header = ["line", "input", "points", "places", "egyptian", "genus", "dvr", "status"];
    let body: Vec<[String; 8]> = rows
        .iter()
        .map(|r| {
            let d = &r.doc;
            let places = match (d.places_at_infinity, d.places_exact) {
                (Some(n), Some(false)) => format!(">={n}"),
                (n, _) => cell(&n),
            };
            let status = if d.is_ok() { d.status.clone() } else { format!("ERROR {}", d.status) };
            [
                r.line.to_string(),
                d.input.clone(),
                cell(&d.points_at_infinity),
                places,
                cell(&d.egyptian),
                cell(&d.genus),
                cell(&d.dvr),
                status,
            ]
        })
        .collect();
    let mut widths = header.map(|h| h.chars().count());
    for row in &body {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let parts: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        let _ = writeln!(out, "{}", parts.join("  ").trim_end());
    };
    line(header.to_vec());
    for row in &body {
        line(row.iter().map(String::as_str).collect());
    }
    out
}

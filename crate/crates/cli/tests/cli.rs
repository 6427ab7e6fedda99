mod common;

use std::io::Write;
use std::process::Command;

use recip_cli::{cmd_analyze, cmd_corpus, AnalysisDocument, AnalyzeOptions};

fn recip(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_recip")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn corpus_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn analyze_fermat_text() {
    let (code, out, _) = recip(&["analyze", "x^3 + y^3 - 1"]);
    assert_eq!(code, 0);
    assert!(out.contains("egyptian              true"));
    assert!(out.contains("points at infinity    3"));
}

#[test]
fn analyze_elliptic_json() {
    let (code, out, _) = recip(&["analyze", "y^2 - x^3 + x", "--json"]);
    assert_eq!(code, 0);
    let doc = AnalysisDocument::from_json(out.trim()).unwrap();
    assert_eq!(doc.egyptian, Some(false));
    assert_eq!(doc.semigroup_generators, Some(vec![2, 3]));
    assert_eq!(doc.dvr, Some(false));
    assert_eq!(doc.unique_point_xyz.as_deref(), Some("[0:1:0]"));
}

#[test]
fn input_errors_exit_2() {
    let (code, _, err) = recip(&["analyze", "3"]);
    assert_eq!(code, 2);
    assert!(err.contains("constant polynomial"));
    let (code, out, err) = recip(&["analyze", "x^", "--json"]);
    assert_eq!(code, 2);
    assert!(err.contains("position 3"));
    assert_eq!(AnalysisDocument::from_json(out.trim()).unwrap().status, "SyntaxError");
    assert_eq!(recip(&["analyze", "(x - y)^2"]).0, 2);
    assert_eq!(recip(&["analyze", "x^2 - y^2"]).0, 0);
}

#[test]
fn flags_are_recorded() {
    let (doc, _) = cmd_analyze("y^2 - x^5 - 1", &AnalyzeOptions { bound: Some(4), truncation: Some(3) });
    assert_eq!(doc.semigroup_bound, Some(4));
    // largest gap 3 < 4
    assert_eq!(doc.stabilized, Some(true));
    let (doc, _) = cmd_analyze("y^2 - x^5 - 1", &AnalyzeOptions { bound: Some(2), truncation: None });
    assert_eq!(doc.stabilized, Some(false));
    assert_eq!(doc.semigroup_generators, Some(vec![2, 5]));
}

#[test]
fn json_round_trips_and_is_stable() {
    for src in common::POOL {
        let (a, _) = cmd_analyze(src, &AnalyzeOptions::default());
        let (b, _) = cmd_analyze(src, &AnalyzeOptions::default());
        assert_eq!(a.without_timing().to_json(), b.without_timing().to_json());
        assert_eq!(AnalysisDocument::from_json(&a.to_json()).unwrap(), a);
    }
}

#[test]
fn text_and_json_agree() {
    for src in common::POOL {
        let (code, text, _) = recip(&["analyze", src]);
        let (json_code, json, _) = recip(&["analyze", src, "--json"]);
        assert_eq!(code, json_code);
        let doc = AnalysisDocument::from_json(json.trim()).unwrap();
        let field = |name: &str| text.lines().find(|l| l.starts_with(name)).map(|l| l[22..].to_string());
        let show = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        assert_eq!(field("egyptian"), Some(show(doc.egyptian.map(|b| b.to_string()))));
        assert_eq!(field("points at infinity"), Some(show(doc.points_at_infinity.map(|b| b.to_string()))));
        assert_eq!(field("regular at infinity"), Some(show(doc.regular_at_infinity.map(|b| b.to_string()))));
        if doc.semigroup_generators.is_some() {
            assert_eq!(field("genus"), doc.genus.map(|g| g.to_string()));
            assert_eq!(field("dvr"), doc.dvr.map(|g| g.to_string()));
            assert_eq!(field("colength"), Some(show(doc.colength.map(|c| c.to_string()))));
        }
    }
}

#[test]
fn corpus_runs_in_file_order() {
    let f = corpus_file(include_str!("data/curves.txt"));
    let (code, out, _) = recip(&["corpus", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert!(lines[0].starts_with("line"));
    assert_eq!(lines.len(), 10);
    assert!(lines[6].contains("x^3 - x*y - y") && lines[6].contains("true"));

    let (code, out, _) = recip(&["corpus", f.path().to_str().unwrap(), "--json"]);
    assert_eq!(code, 0);
    let docs: Vec<AnalysisDocument> = out.lines().map(|l| AnalysisDocument::from_json(l).unwrap()).collect();
    assert_eq!(docs.len(), 9);
    assert_eq!(docs[0].points_at_infinity, Some(3));
}

#[test]
fn corpus_errors_and_empty_files() {
    let f = corpus_file("");
    let (code, out, _) = recip(&["corpus", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 1);

    let f = corpus_file("y - x\n3*x +\n# comment\ny^2 - x^3 + x\n");
    let (code, out, _) = recip(&["corpus", f.path().to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.lines().nth(2).unwrap().contains("ERROR SyntaxError"));
    let (rows, code) = cmd_corpus("y - x\n3*x +\n# comment\ny^2 - x^3 + x\n", &AnalyzeOptions::default());
    assert_eq!(code, 1);
    assert_eq!(rows.iter().map(|r| r.line).collect::<Vec<_>>(), vec![1, 2, 4]);

    assert_eq!(recip(&["corpus", "/nonexistent/curves.txt"]).0, 2);
}

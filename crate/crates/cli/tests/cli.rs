use std::process::{Command, Output};

use bredon_core::motivic::MotivicGroup;
use bredon_core::verify::CheckReport;

fn bredon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bredon")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = bredon(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn point_dim_matches_printed_value() {
    assert_eq!(stdout(&["point-dim", "--degree", "2,0,1,-3"]).trim(), "2");
    let json: serde_json::Value = serde_json::from_str(&stdout(&["point-dim", "--degree", "2,0,1,-3", "--json"])).unwrap();
    assert_eq!(json["dimension"], 2);
    assert_eq!(json["degree"], serde_json::json!({"a": 2, "p": 0, "b": 1, "q": -3}));
}

#[test]
fn multiplication_applies_kappa_relation() {
    assert_eq!(stdout(&["mul", "k1", "x1"]).trim(), "x2*y3 + y2*x3");
}

#[test]
fn unknown_product_is_an_error() {
    let out = bredon(&["mul", "theta2", "theta3"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("not determined"));
}

#[test]
fn malformed_degree_is_a_usage_error() {
    assert!(!bredon(&["point-dim", "--degree", "1,2"]).status.success());
    assert!(!bredon(&["motivic", "--degree", "1,2,3,4"]).status.success());
}

#[test]
fn motivic_unit_round_trips_through_json() {
    let text = stdout(&["motivic", "--degree", "0,0:0,0", "--json"]);
    let g: MotivicGroup = serde_json::from_str(&text).unwrap();
    assert_eq!(g.dimension, 1);
    assert_eq!(g.region.name(), "PointRegion");
    assert_eq!(g.realization.raw.to_string(), "Iso");
    assert_eq!(serde_json::to_string_pretty(&g).unwrap(), text.trim_end());
}

#[test]
fn status_of_negative_cone_example() {
    assert!(stdout(&["status", "--degree", "3,-3:1,-3"]).starts_with("MonoNotEpi"));
    assert!(stdout(&["status", "--degree", "3,-2:1,-2"]).starts_with("Iso"));
}

#[test]
fn restriction_kills_the_index_two_generator() {
    assert_eq!(stdout(&["restrict", "--to", "sigma", "x1*x2 + y1"]).trim(), "y1");
    assert_eq!(stdout(&["restrict", "--to", "trivial", "x3 + y2^2"]).trim(), "y2^2");
}

#[test]
fn space_queries() {
    assert_eq!(stdout(&["space-dim", "--space", "B", "--degree", "2,-2"]).trim(), "2");
    assert_eq!(stdout(&["space-dim", "--space", "E", "--degree", "0,0,1,0"]).trim(), "2");
    assert_eq!(stdout(&["space-dim", "--space", "Etilde", "--degree", "3,0,0,0"]).trim(), "0");
    assert_eq!(stdout(&["space-dim", "--space", "Wq", "--degree", "4,2", "--q", "2"]).trim(), "0");
    assert!(!bredon(&["space-dim", "--space", "Wq", "--degree", "4,2"]).status.success());
}

#[test]
fn scan_weight_line_reproduces_motivic_cohomology_of_reals() {
    let csv = stdout(&["scan", "--a=-2..6", "--b", "0..4", "--format", "csv"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("a,p,b,q,dimension,region,status,basis"));
    let mut rows = 0;
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        let (a, b): (i64, i64) = (f[0].parse().unwrap(), f[2].parse().unwrap());
        assert_eq!(f[4], if 0 <= a && a <= b { "1" } else { "0" }, "{line}");
        rows += 1;
    }
    assert_eq!(rows, 9 * 5);
}

#[test]
fn scan_empty_window_is_an_empty_table() {
    assert_eq!(stdout(&["scan", "--a", "3..1"]).trim(), "a,p,b,q,dimension,region,status,basis");
    assert_eq!(stdout(&["scan", "--a", "3..1", "--format", "json"]).trim(), "[]");
}

#[test]
fn scan_respects_thread_cap() {
    let run = |threads: &str| {
        let out = Command::new(env!("CARGO_BIN_EXE_bredon"))
            .args(["scan", "--target", "borel", "--a=-6..6", "--p=-2..2", "--b=-3..-1", "--q", "1..4", "--format", "json"])
            .env("BREDON_THREADS", threads)
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn region_map_outputs() {
    let ascii = stdout(&["region-map"]);
    assert_eq!(ascii, include_str!("../../core/tests/golden/region_map.txt"));
    let svg = stdout(&["region-map", "--b-range=-2..2", "--q-range=-2..2", "--format", "svg"]);
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    let annotated = stdout(&["region-map", "--b-range", "0..2", "--q-range", "0..0", "--annotate", "0,0"]);
    assert!(annotated.contains("11"));
}

#[test]
fn verify_examples_suite_passes_and_reports_json() {
    let text = stdout(&["verify", "--suite", "remarks", "--json"]);
    let reports: Vec<CheckReport> = serde_json::from_str(&text).unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(CheckReport::ok));
    assert!(stdout(&["verify", "--suite", "series", "--window", "3"]).contains("PASS"));
    assert!(!bredon(&["verify", "--suite", "nonsense"]).status.success());
}

#[test]
fn scan_borel_row_matches_shifted_point_dimension() {
    use bredon_core::degrees::KleinDegree;
    use bredon_core::series::dim_point;
    let text = stdout(&["scan", "--target", "borel", "--a=-8..8", "--p=-2..2", "--b=-2..-2", "--q", "2..4", "--format", "json"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&text).unwrap();
    assert_eq!(rows.len(), 17 * 5 * 3);
    for r in rows {
        let [a, p, b, q] = ["a", "p", "b", "q"].map(|k| r[k].as_i64().unwrap());
        let want = dim_point(KleinDegree::new(a - 2 * b, p - q + b, 0, b + q));
        assert_eq!(r["dimension"].as_u64().unwrap(), want, "{r}");
    }
}

#[test]
fn verify_all_succeeds() {
    let out = bredon(&["verify"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
}

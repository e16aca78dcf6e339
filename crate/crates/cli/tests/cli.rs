//! End-to-end runs of the `poleskip` binary.

use poleskip::complex::{c, C64};
use poleskip_cli::report::{CatalogDoc, CutoffDoc, HoloDoc, LocateDoc, ScanDoc, SlopeDoc};
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_poleskip")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn near(a: C64, b: C64, tol: f64) -> bool {
    (a - b).norm() <= tol
}

#[test]
fn coulomb_catalog() {
    let text = stdout(&["catalog", "--model", "coulomb", "--n-max", "3"]);
    let doc: CatalogDoc = serde_json::from_str(&text).unwrap();
    assert_eq!(doc.model, "coulomb");
    assert_eq!(doc.points.len(), 6);
    assert!(doc.points.iter().any(|p| near(p.param, c(-0.5, 0.0), 1e-15) && p.k.norm() == 0.0));
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let p0 = &v["points"][0];
    for key in ["n", "param", "k", "class", "redundant"] {
        assert!(!p0[key].is_null(), "missing {key}");
    }
    assert!(p0["param"]["re"].is_number() && p0["k"]["im"].is_number());
}

#[test]
fn cosh_and_one_pole_catalogs() {
    let doc: CatalogDoc = serde_json::from_str(&stdout(&["catalog", "--model", "pt2", "--n-max", "2"])).unwrap();
    assert!(doc.points.iter().any(|p| near(p.k, c(0.0, 2.0), 1e-15) && near(p.param, c(2.0, 0.0), 1e-15)));
    let doc: CatalogDoc = serde_json::from_str(&stdout(&["catalog", "--model", "onepole"])).unwrap();
    assert_eq!(doc.points.len(), 1);
    assert!(doc.points[0].param.norm() == 0.0 && doc.points[0].k.norm() == 0.0);
}

#[test]
fn catalog_csv_has_header() {
    let text = stdout(&["catalog", "--model", "pt1", "--n-max", "1", "--format", "csv"]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("model,n,param_re,param_im,k_re,k_im,class,redundant"));
    assert!(lines.any(|l| l.ends_with("redundant,true")));
}

#[test]
fn sinh_slope_ratios() {
    let doc: SlopeDoc = serde_json::from_str(&stdout(&["slope", "--model", "pt1", "--at", "nu=-1,k=0+0.5i"])).unwrap();
    // 2 (dk - i dnu) / (dk + i dnu) in (dnu, dk) order: (a, b, c, d) = (-2i, 2, i, 1)
    assert!(near(doc.ratios.b_over_a.into(), c(0.0, 1.0), 1e-2));
    assert!(near(doc.ratios.c_over_a.into(), c(-0.5, 0.0), 1e-2));
    assert!(near(doc.ratios.d_over_a.into(), c(0.0, 0.5), 1e-2));
    assert!(doc.residual < 1e-2);
}

#[test]
fn locate_and_classify() {
    let doc: LocateDoc =
        serde_json::from_str(&stdout(&["locate", "--model", "pt1", "--at", "nu=-1.05,k=0+0.48i"])).unwrap();
    assert!(doc.point.distance(c(-1.0, 0.0), c(0.0, 0.5)) < 1e-10);
    assert_eq!(doc.point.class_name(), "bound");
    assert!(doc.classify_error.is_none());
}

#[test]
fn ir_cutoff_report() {
    let text = stdout(&["cutoff", "--model", "pt1", "--nu", "2", "--ir", "12", "--probe", "k=0+1i"]);
    let doc: CutoffDoc = serde_json::from_str(&text).unwrap();
    let ir = doc.ir.unwrap();
    assert_eq!(ir.message, "no pole within 0.2");
    assert_eq!(ir.uncut_poles, 1);
    assert_eq!(ir.cut_poles, 0);
}

#[test]
fn uv_cutoff_report() {
    let text = stdout(&["cutoff", "--model", "pt1", "--nu", "0.75", "--uv", "0.001", "--probe", "0.8"]);
    let uv = serde_json::from_str::<CutoffDoc>(&text).unwrap().uv.unwrap();
    let (r1, r2): (C64, C64) = (uv.ratio.unwrap().into(), uv.ratio_half.unwrap().into());
    assert!(r1.norm() > 0.0 && r2.norm() > 0.0);
}

#[test]
fn holography_report() {
    let doc: HoloDoc =
        serde_json::from_str(&stdout(&["holo", "--metric", "btz-like", "--omega", "0-1i", "--T", "0.159154943"])).unwrap();
    assert!(near(doc.nu.into(), c(-0.5, 0.0), 1e-8));
    assert!(C64::from(doc.fitted_coefficient).norm() < 1e-8);
    let doc: HoloDoc = serde_json::from_str(&stdout(&[
        "holo", "--metric", "rindler", "--omega", "0-1i", "--T", "0.25", "--matsubara", "2",
    ]))
    .unwrap();
    let m = doc.matsubara.unwrap();
    assert!(near(m.fitted_nu.into(), c(-1.0, 0.0), 1e-6));
}

fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<String>>) {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header = r.headers().unwrap().iter().map(String::from).collect();
    let rows = r.records().map(|x| x.unwrap().iter().map(String::from).collect()).collect();
    (header, rows)
}

#[test]
fn free_scan_is_unitary() {
    let text = stdout(&["scan", "--model", "free", "--numeric", "--grid", "k:0.2:3:8"]);
    let (header, rows) = parse_csv(&text);
    assert_eq!(header, ["k_re", "k_im", "s_re", "s_im", "abs_f_plus", "abs_f_minus", "status"]);
    assert_eq!(rows.len(), 8);
    for r in rows {
        assert_eq!(r[6], "ok");
        let s = c(r[2].parse().unwrap(), r[3].parse().unwrap());
        assert!((s.norm() - 1.0).abs() < 1e-9);
    }
}

#[test]
fn transparent_cosh_scan() {
    let text = stdout(&["scan", "--model", "pt2", "--kappa", "1", "--grid", "k:0.1:4:7", "--format", "json"]);
    let doc: ScanDoc = serde_json::from_str(&text).unwrap();
    assert_eq!(doc.rows.len(), 7);
    for r in doc.rows {
        assert!(near(r.s.unwrap().into(), c(1.0, 0.0), 1e-12));
    }
}

#[test]
fn scan_rows_follow_grid_order() {
    let args = ["scan", "--model", "pt1", "--grid", "k:0.3:0.9:4", "--grid", "nu:-1.2-0.1i:-0.8+0.1i:5"];
    let first = stdout(&args);
    assert_eq!(first, stdout(&args));
    let (_, rows) = parse_csv(&first);
    assert_eq!(rows.len(), 20);
    for (i, r) in rows.iter().enumerate() {
        let k: f64 = r[0].parse().unwrap();
        let nu: f64 = r[2].parse().unwrap();
        assert!((k - (0.3 + 0.2 * (i / 5) as f64)).abs() < 1e-12);
        assert!((nu - (-1.2 + 0.1 * (i % 5) as f64)).abs() < 1e-12);
    }
    // the pole-skipping point itself is reported, not fatal
    let text = stdout(&["scan", "--model", "pt1", "--nu", "-1", "--grid", "k:0+0.5i:0+0.5i:1"]);
    let (_, rows) = parse_csv(&text);
    assert_eq!(rows[0][6], "indeterminate");
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("poleskip-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cat.json");
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&["catalog", "--model", "coulomb", "--out", p]), "");
    let doc: CatalogDoc = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc.points.len(), 6);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["catalog", "--model", "nonsense"]), 2);
    assert_eq!(code(&["catalog", "--model", "pt1", "--param", "kappa=2"]), 2);
    assert_eq!(code(&["scan", "--model", "pt1", "--grid", "k:0:1"]), 2);
    assert_eq!(code(&["locate", "--model", "pt1", "--at", "nu=-1", "--tol", "1e-12"]), 2);
    assert_eq!(code(&["locate", "--model", "pt1", "--at", "nu=-1,k=0.5i", "--tol", "1"]), 2);
    assert_eq!(code(&["locate", "--model", "pt1", "--at", "nu=5,k=7"]), 3);
    assert_eq!(code(&["slope", "--model", "pt1", "--at", "nu=-1,k=0+0.5i", "--delta", "0.3"]), 4);
    assert_eq!(code(&["locate", "--model", "pt1", "--at", "nu=-1.05,k=0.48i"]), 0);
}

//! Output records and their JSON / CSV emission.

use crate::CliError;
use poleskip::complex::C64;
use poleskip::{Mobius, PoleSkipPoint};
use serde::{Deserialize, Serialize};
use serde_json::Value;

/// A complex number as `{"re": .., "im": ..}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cx {
    pub re: f64,
    pub im: f64,
}

impl From<C64> for Cx {
    fn from(z: C64) -> Self {
        Cx { re: z.re, im: z.im }
    }
}

impl From<Cx> for C64 {
    fn from(z: Cx) -> Self {
        C64::new(z.re, z.im)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogDoc {
    pub model: String,
    pub points: Vec<PoleSkipPoint>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub coords: Vec<Cx>,
    pub s: Option<Cx>,
    pub abs_f_plus: Option<f64>,
    pub abs_f_minus: Option<f64>,
    pub status: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanDoc {
    pub model: String,
    pub numeric: bool,
    pub axes: Vec<String>,
    pub rows: Vec<ScanRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LocateDoc {
    pub model: String,
    pub seed: [Cx; 2],
    pub point: PoleSkipPoint,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classify_error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Ratios {
    pub b_over_a: Cx,
    pub c_over_a: Cx,
    pub d_over_a: Cx,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SlopeDoc {
    pub model: String,
    pub point: PoleSkipPoint,
    pub delta: f64,
    pub angles: usize,
    pub mobius: Mobius,
    pub ratios: Ratios,
    pub residual: f64,
}

/// Argument-principle counts around the probe before and after truncating the potential at `r`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IrReport {
    pub r: f64,
    pub uncut_winding_f_plus: i32,
    pub uncut_winding_f_minus: i32,
    pub uncut_poles: i32,
    pub cut_winding_f_plus: i32,
    pub cut_winding_f_minus: i32,
    pub cut_poles: i32,
    pub message: String,
}

/// Renormalized Jost function at the probe for the cutoff `a` and `a/2`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UvReport {
    pub a: f64,
    pub f_plus_r: Cx,
    pub f_plus_r_half: Cx,
    pub s_r: Option<Cx>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ratio: Option<Cx>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ratio_half: Option<Cx>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CutoffDoc {
    pub model: String,
    pub param: Cx,
    pub probe: Cx,
    pub radius: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ir: Option<IrReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub uv: Option<UvReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatsubaraDoc {
    pub n: i64,
    pub omega: Cx,
    pub nu: Cx,
    pub fitted_nu: Cx,
    pub pivot: Cx,
    pub det: Cx,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HoloDoc {
    pub metric: String,
    pub temperature: f64,
    pub mass2: f64,
    pub omega: Cx,
    pub nu: Cx,
    pub expected_coefficient: Cx,
    pub fitted_coefficient: Cx,
    pub fit_residual: f64,
    pub fitted_nu: Cx,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matsubara: Option<MatsubaraDoc>,
}

pub fn to_json<T: Serialize>(doc: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(doc).map_err(|e| CliError::io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

/// Flattens nested objects and arrays into dotted column names.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                flatten(&join(k), x, out);
            }
        }
        Value::Array(xs) => {
            for (i, x) in xs.iter().enumerate() {
                flatten(&join(&i.to_string()), x, out);
            }
        }
        Value::Null => out.push((prefix.to_string(), String::new())),
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

fn csv_from_rows(header: &[String], rows: &[Vec<String>]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(|e| CliError::io(e.to_string()))?;
    for r in rows {
        w.write_record(r).map_err(|e| CliError::io(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::io(e.to_string()))
}

/// One CSV row per record; columns are the union of flattened keys in first-seen order.
pub fn records_to_csv<T: Serialize>(records: &[T]) -> Result<String, CliError> {
    let mut flat = Vec::with_capacity(records.len());
    let mut header: Vec<String> = Vec::new();
    for r in records {
        let v = serde_json::to_value(r).map_err(|e| CliError::io(e.to_string()))?;
        let mut cells = Vec::new();
        flatten("", &v, &mut cells);
        for (k, _) in &cells {
            if !header.contains(k) {
                header.push(k.clone());
            }
        }
        flat.push(cells);
    }
    let rows: Vec<Vec<String>> = flat
        .into_iter()
        .map(|cells| {
            header
                .iter()
                .map(|h| cells.iter().find(|(k, _)| k == h).map(|(_, v)| v.clone()).unwrap_or_default())
                .collect()
        })
        .collect();
    csv_from_rows(&header, &rows)
}

pub fn catalog_csv(doc: &CatalogDoc) -> Result<String, CliError> {
    let header: Vec<String> =
        ["model", "n", "param_re", "param_im", "k_re", "k_im", "class", "redundant"].map(String::from).to_vec();
    let rows: Vec<Vec<String>> = doc
        .points
        .iter()
        .map(|p| {
            vec![
                doc.model.clone(),
                p.n.to_string(),
                p.param.re.to_string(),
                p.param.im.to_string(),
                p.k.re.to_string(),
                p.k.im.to_string(),
                p.class_name().to_string(),
                p.is_redundant().to_string(),
            ]
        })
        .collect();
    csv_from_rows(&header, &rows)
}

pub fn scan_csv(doc: &ScanDoc) -> Result<String, CliError> {
    let mut header: Vec<String> = Vec::new();
    for a in &doc.axes {
        header.push(format!("{a}_re"));
        header.push(format!("{a}_im"));
    }
    header.extend(["s_re", "s_im", "abs_f_plus", "abs_f_minus", "status"].map(String::from));
    let opt = |x: Option<f64>| x.map(|v| v.to_string()).unwrap_or_default();
    let rows: Vec<Vec<String>> = doc
        .rows
        .iter()
        .map(|r| {
            let mut row = Vec::with_capacity(header.len());
            for z in &r.coords {
                row.push(z.re.to_string());
                row.push(z.im.to_string());
            }
            row.push(opt(r.s.map(|s| s.re)));
            row.push(opt(r.s.map(|s| s.im)));
            row.push(opt(r.abs_f_plus));
            row.push(opt(r.abs_f_minus));
            row.push(r.status.clone());
            row
        })
        .collect();
    csv_from_rows(&header, &rows)
}

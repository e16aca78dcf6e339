//! Subcommand implementations.

use crate::report::{
    catalog_csv, records_to_csv, scan_csv, to_json, CatalogDoc, CutoffDoc, Cx, Format, HoloDoc, IrReport, LocateDoc,
    MatsubaraDoc, Ratios, ScanDoc, ScanRow, SlopeDoc, UvReport,
};
use crate::spec::{check_tol, grid_nodes, parse_assignments, plane_point, GridAxis, ModelSpec, Tag};
use crate::{CliError, Command, ModelArgs, OutputArgs};
use poleskip::complex::{parse_complex, C64};
use poleskip::holography::{effective_potential, matsubara_check, MetricModel};
use poleskip::locator::{classify, find_skip, mobius_ratios, slope_probe, winding_number, ModelSkip};
use poleskip::models::{pt1_jost_plus, pt2_jost_plus};
use poleskip::solver::{ir_cutoff_jost, jost_functions, uv_cutoff_jost, uv_cutoff_s, SolverConfig};
use poleskip::{Error, PoleSkipPoint};
use rayon::prelude::*;
use serde::Serialize;

pub fn run(cmd: &Command) -> Result<String, CliError> {
    match cmd {
        Command::Catalog { model, n_max, output } => catalog(model, *n_max, output),
        Command::Scan { model, grids, numeric, k_im_max, output } => scan(model, grids, *numeric, *k_im_max, output),
        Command::Locate { model, at, tol, output } => {
            let doc = locate(model, at, *tol)?;
            emit_single(&doc, output)
        }
        Command::Slope { model, at, tol, delta, angles, output } => slope(model, at, *tol, *delta, *angles, output),
        Command::Cutoff { model, ir, uv, probe, radius, output } => cutoff(model, *ir, *uv, probe, *radius, output),
        Command::Holo { metric, omega, temperature, m2, matsubara, output } => {
            holo(metric, omega, *temperature, *m2, *matsubara, output)
        }
    }
}

fn emit_single<T: Serialize>(doc: &T, output: &OutputArgs) -> Result<String, CliError> {
    match output.format.unwrap_or(Format::Json) {
        Format::Json => to_json(doc),
        Format::Csv => records_to_csv(std::slice::from_ref(doc)),
    }
}

fn catalog(args: &ModelArgs, n_max: u32, output: &OutputArgs) -> Result<String, CliError> {
    if n_max < 1 {
        return Err(CliError::config("--n-max must be at least 1"));
    }
    let spec = args.spec()?;
    let points = poleskip::models::pole_skip_catalog(&spec.model()?, n_max)?;
    let doc = CatalogDoc { model: spec.tag.name().to_string(), points };
    match output.format.unwrap_or(Format::Json) {
        Format::Json => to_json(&doc),
        Format::Csv => catalog_csv(&doc),
    }
}

fn status_of(e: &Error) -> String {
    match e {
        Error::IndeterminateRatio { .. } => "indeterminate".to_string(),
        Error::PoleHit | Error::PoleAtNonpositiveInteger(_) => "pole".to_string(),
        other => format!("error: {other}"),
    }
}

/// S and `|F+-|` at one node; failures become a status string.
fn scan_node(spec: &ModelSpec, numeric: bool, cfg: &SolverConfig) -> ScanRow {
    let k = spec.get("k");
    let row = |s: Option<C64>, fp: Option<f64>, fm: Option<f64>, status: String| ScanRow {
        coords: Vec::new(),
        s: s.map(Cx::from),
        abs_f_plus: fp,
        abs_f_minus: fm,
        status,
    };
    if numeric {
        let (pot, nu) = match spec.numerical() {
            Ok(p) => p,
            Err(e) => return row(None, None, None, format!("error: {e}")),
        };
        return match jost_functions(&pot, k, nu, cfg) {
            Ok(pair) => match pair.s() {
                Ok(s) => row(Some(s), Some(pair.f_plus.norm()), Some(pair.f_minus.norm()), "ok".into()),
                Err(e) => row(None, Some(pair.f_plus.norm()), Some(pair.f_minus.norm()), status_of(&e)),
            },
            Err(e) => row(None, None, None, status_of(&e)),
        };
    }
    let model = match spec.model() {
        Ok(m) => m,
        Err(e) => return row(None, None, None, format!("error: {e}")),
    };
    let (fp, fm) = match model.jost(k) {
        Ok(p) => (Some(p.f_plus.norm()), Some(p.f_minus.norm())),
        Err(_) => (None, None),
    };
    match model.s_matrix(k) {
        Ok(s) => row(Some(s), fp, fm, "ok".into()),
        Err(e) => row(None, fp, fm, status_of(&e)),
    }
}

fn scan(
    args: &ModelArgs,
    grids: &[String],
    numeric: bool,
    k_im_max: f64,
    output: &OutputArgs,
) -> Result<String, CliError> {
    let spec = args.spec()?;
    if spec.tag == Tag::Free && !numeric {
        return Err(CliError::config("the free model is scanned with --numeric"));
    }
    if !(k_im_max > 0.0) {
        return Err(CliError::config("--k-im-max must be positive"));
    }
    let axes: Vec<GridAxis> = grids.iter().map(|g| GridAxis::parse(g)).collect::<Result<_, _>>()?;
    if axes.is_empty() || axes.len() > 2 {
        return Err(CliError::config("scan takes one or two --grid axes"));
    }
    for a in &axes {
        spec.with(&a.axis, C64::new(0.0, 0.0))?;
    }
    let nodes = grid_nodes(&axes)?;
    let cfg = SolverConfig { k_im_max, ..SolverConfig::default() };
    // rayon's indexed collect keeps grid order whatever the completion order
    let rows: Vec<ScanRow> = nodes
        .par_iter()
        .map(|coords| {
            let mut s = spec.clone();
            for (a, v) in axes.iter().zip(coords) {
                s = s.with(&a.axis, *v).expect("axes checked above");
            }
            let mut r = scan_node(&s, numeric, &cfg);
            r.coords = coords.iter().map(|z| Cx::from(*z)).collect();
            r
        })
        .collect();
    let doc = ScanDoc {
        model: spec.tag.name().to_string(),
        numeric,
        axes: axes.iter().map(|a| a.axis.clone()).collect(),
        rows,
    };
    match output.format.unwrap_or(Format::Csv) {
        Format::Json => to_json(&doc),
        Format::Csv => scan_csv(&doc),
    }
}

fn skip_function(spec: &ModelSpec) -> Result<ModelSkip, CliError> {
    Ok(ModelSkip::new(spec.model()?).with_k_ref(spec.get("k")))
}

fn locate_point(spec: &ModelSpec, at: &str, tol: f64) -> Result<(ModelSkip, (C64, C64), PoleSkipPoint), CliError> {
    let tol = check_tol(tol)?;
    let f = skip_function(spec)?;
    let seed = plane_point(&f.model, &parse_assignments(at)?)?;
    let point = find_skip(&f, seed, tol)?;
    Ok((f, seed, point))
}

fn locate(args: &ModelArgs, at: &str, tol: f64) -> Result<LocateDoc, CliError> {
    let spec = args.spec()?;
    let (f, seed, mut point) = locate_point(&spec, at, tol)?;
    let classify_error = match classify(&f, &point) {
        Ok(cls) => {
            point.classification = Some(cls);
            None
        }
        Err(e) => Some(e.to_string()),
    };
    Ok(LocateDoc { model: spec.tag.name().to_string(), seed: [seed.0.into(), seed.1.into()], point, classify_error })
}

fn slope(
    args: &ModelArgs,
    at: &str,
    tol: f64,
    delta: f64,
    angles: usize,
    output: &OutputArgs,
) -> Result<String, CliError> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(CliError::config("--delta must lie in (0, 1)"));
    }
    let spec = args.spec()?;
    let (f, _, mut point) = locate_point(&spec, at, tol)?;
    let fit = slope_probe(&f, &point, delta, angles)?;
    point.mobius = Some(fit);
    let [b, c, d] = mobius_ratios(&fit);
    let doc = SlopeDoc {
        model: spec.tag.name().to_string(),
        point,
        delta,
        angles,
        mobius: fit,
        ratios: Ratios { b_over_a: b.into(), c_over_a: c.into(), d_over_a: d.into() },
        residual: fit.residual,
    };
    emit_single(&doc, output)
}

/// `S`-pole count inside a small circle: zeros of `F+` plus poles of `F-`.
fn pole_count(w_plus: i32, w_minus: i32) -> i32 {
    w_plus.max(0) + (-w_minus).max(0)
}

/// Closed-form `F+` of the uncut model on the branch that dominates at small `x`.
fn reference_f_plus(spec: &ModelSpec, k: C64) -> Option<C64> {
    match spec.tag {
        Tag::Pt1 => {
            let nu = spec.get("nu");
            let nu = if nu.re >= 0.0 { nu } else { -nu };
            pt1_jost_plus(k, nu).ok()
        }
        Tag::Pt2 => pt2_jost_plus(k, spec.get("kappa")).ok(),
        Tag::Free => Some(C64::new(1.0, 0.0)),
        _ => None,
    }
}

fn cutoff(
    args: &ModelArgs,
    ir: Option<f64>,
    uv: Option<f64>,
    probe: &str,
    radius: f64,
    output: &OutputArgs,
) -> Result<String, CliError> {
    let spec = args.spec()?;
    let (pot, nu) = spec.numerical()?;
    let probe = match probe.split_once('=') {
        Some((key, v)) if key.trim() == "k" => v,
        Some((key, _)) => return Err(CliError::config(format!("probe axis must be k, got '{key}'"))),
        None => probe,
    };
    let k0 = parse_complex(probe).map_err(|e| CliError::config(e.to_string()))?;
    if !(radius > 0.0) {
        return Err(CliError::config("--radius must be positive"));
    }
    if ir.is_none() && uv.is_none() {
        return Err(CliError::config("cutoff needs --ir and/or --uv"));
    }
    let cfg = SolverConfig { k_im_max: (k0.im.abs() + radius + 0.5).max(1.0), ..SolverConfig::default() };
    let param = match spec.tag {
        Tag::Pt2 => spec.get("kappa"),
        _ => nu,
    };

    let ir_report = match ir {
        None => None,
        Some(r) => {
            let (wp0, wm0) = if spec.tag == Tag::Free {
                let fp = |k: C64| Ok(jost_functions(&pot, k, nu, &cfg)?.f_plus);
                let fm = |k: C64| Ok(jost_functions(&pot, k, nu, &cfg)?.f_minus);
                (winding_number(fp, k0, radius)?, winding_number(fm, k0, radius)?)
            } else {
                let model = spec.model()?;
                let fp = |k: C64| Ok(model.jost(k)?.f_plus);
                let fm = |k: C64| Ok(model.jost(k)?.f_minus);
                (winding_number(fp, k0, radius)?, winding_number(fm, k0, radius)?)
            };
            let fp = |k: C64| Ok(ir_cutoff_jost(&pot, r, k, nu, &cfg)?.f_plus);
            let fm = |k: C64| Ok(ir_cutoff_jost(&pot, r, k, nu, &cfg)?.f_minus);
            let (wp, wm) = (winding_number(fp, k0, radius)?, winding_number(fm, k0, radius)?);
            let cut_poles = pole_count(wp, wm);
            let message = if cut_poles == 0 {
                format!("no pole within {radius}")
            } else {
                format!("{cut_poles} pole(s) within {radius}")
            };
            Some(IrReport {
                r,
                uncut_winding_f_plus: wp0,
                uncut_winding_f_minus: wm0,
                uncut_poles: pole_count(wp0, wm0),
                cut_winding_f_plus: wp,
                cut_winding_f_minus: wm,
                cut_poles,
                message,
            })
        }
    };

    let uv_report = match uv {
        None => None,
        Some(a) => {
            let f1 = uv_cutoff_jost(&pot, a, k0, &cfg)?;
            let f2 = uv_cutoff_jost(&pot, a / 2.0, k0, &cfg)?;
            let s_r = uv_cutoff_s(&pot, a, k0, &cfg).ok().map(Cx::from);
            let reference = reference_f_plus(&spec, k0).filter(|z| z.norm() > 0.0);
            Some(UvReport {
                a,
                f_plus_r: f1.into(),
                f_plus_r_half: f2.into(),
                s_r,
                ratio: reference.map(|z| (f1 / z).into()),
                ratio_half: reference.map(|z| (f2 / z).into()),
            })
        }
    };

    let doc = CutoffDoc {
        model: spec.tag.name().to_string(),
        param: param.into(),
        probe: k0.into(),
        radius,
        ir: ir_report,
        uv: uv_report,
    };
    emit_single(&doc, output)
}

fn holo(
    metric: &str,
    omega: &str,
    temperature: f64,
    m2: f64,
    matsubara: Option<i64>,
    output: &OutputArgs,
) -> Result<String, CliError> {
    let omega = parse_complex(omega).map_err(|e| CliError::config(e.to_string()))?;
    let m = MetricModel::preset(metric, temperature, m2)?;
    let problem = effective_potential(&m, omega)?;
    let fit = problem.near_horizon_fit()?;
    let nu = problem.nu;
    let matsubara = match matsubara {
        None => None,
        Some(n) => {
            let chk = matsubara_check(&m, n)?;
            Some(MatsubaraDoc {
                n,
                omega: chk.omega.into(),
                nu: chk.nu.into(),
                fitted_nu: chk.fitted_nu.into(),
                pivot: chk.pivot.into(),
                det: chk.det.into(),
            })
        }
    };
    let doc = HoloDoc {
        metric: metric.to_string(),
        temperature,
        mass2: m2,
        omega: omega.into(),
        nu: nu.into(),
        expected_coefficient: (nu * nu - 0.25).into(),
        fitted_coefficient: fit.leading().into(),
        fit_residual: fit.residual,
        fitted_nu: fit.nu_near(nu).into(),
        matsubara,
    };
    emit_single(&doc, output)
}

//! Parsing of model, grid and point specifications.

use crate::CliError;
use poleskip::complex::{parse_complex, C64};
use poleskip::solver::NumericalPotential;
use poleskip::{Axis, PotentialModel};
use std::collections::BTreeMap;

/// Largest number of nodes a scan may visit.
pub const MAX_GRID_NODES: usize = 1_000_000;
/// Accepted range of user tolerances.
pub const TOL_RANGE: (f64, f64) = (1e-14, 1e-2);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tag {
    Coulomb,
    Pt1,
    Pt2,
    OnePole,
    Free,
}

impl Tag {
    pub fn parse(s: &str) -> Result<Tag, CliError> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "coulomb" => Tag::Coulomb,
            "pt1" | "sinh" | "sinh_sq" | "sinh-sq" => Tag::Pt1,
            "pt2" | "cosh" | "cosh_sq" | "cosh-sq" => Tag::Pt2,
            "onepole" | "one-pole" | "one_pole" => Tag::OnePole,
            "free" => Tag::Free,
            other => return Err(CliError::config(format!("unknown model '{other}'"))),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Tag::Coulomb => "coulomb",
            Tag::Pt1 => "pt1",
            Tag::Pt2 => "pt2",
            Tag::OnePole => "onepole",
            Tag::Free => "free",
        }
    }

    /// Parameter names with their defaults; `k` is shared by all models.
    fn defaults(&self) -> &'static [(&'static str, f64)] {
        match self {
            Tag::Coulomb => &[("e2", 1.0), ("nu", 0.5), ("k", 1.0)],
            Tag::Pt1 => &[("nu", 0.75), ("k", 1.0)],
            Tag::Pt2 => &[("kappa", 1.5), ("k", 1.0)],
            Tag::OnePole => &[("c", 0.5), ("k", 1.0)],
            Tag::Free => &[("k", 1.0)],
        }
    }
}

/// A model tag with its complex parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelSpec {
    pub tag: Tag,
    pub params: BTreeMap<String, C64>,
}

impl ModelSpec {
    pub fn new(tag: &str, overrides: &[(String, C64)]) -> Result<Self, CliError> {
        let tag = Tag::parse(tag)?;
        let mut params: BTreeMap<String, C64> =
            tag.defaults().iter().map(|(k, v)| (k.to_string(), C64::new(*v, 0.0))).collect();
        for (key, v) in overrides {
            let key = canonical_key(tag, key);
            if key == "kappa_c" && tag == Tag::Coulomb {
                params.insert(key, *v);
                continue;
            }
            if !params.contains_key(&key) {
                return Err(CliError::config(format!("model {} has no parameter '{key}'", tag.name())));
            }
            params.insert(key, *v);
        }
        let spec = ModelSpec { tag, params };
        if tag != Tag::Free {
            spec.model()?;
        }
        Ok(spec)
    }

    pub fn get(&self, key: &str) -> C64 {
        self.params.get(key).copied().unwrap_or(C64::new(0.0, 0.0))
    }

    /// Same spec with one parameter replaced.
    pub fn with(&self, key: &str, v: C64) -> Result<Self, CliError> {
        let key = canonical_key(self.tag, key);
        if !self.params.contains_key(&key) && !(key == "kappa_c" && self.tag == Tag::Coulomb) {
            return Err(CliError::config(format!("model {} has no axis '{key}'", self.tag.name())));
        }
        let mut out = self.clone();
        out.params.insert(key, v);
        Ok(out)
    }

    /// Coupling `e^2`, taken from `kappa_c` when that is given.
    fn e2(&self) -> C64 {
        match self.params.get("kappa_c") {
            Some(kc) => 2.0 * self.get("k") * kc,
            None => self.get("e2"),
        }
    }

    pub fn model(&self) -> Result<PotentialModel, CliError> {
        Ok(match self.tag {
            Tag::Coulomb => PotentialModel::coulomb(self.e2(), self.get("nu")),
            Tag::Pt1 => PotentialModel::sinh_sq(self.get("nu")),
            Tag::Pt2 => PotentialModel::cosh_sq(self.get("kappa")),
            Tag::OnePole => {
                let c = self.get("c");
                if c.im != 0.0 {
                    return Err(CliError::config("the one-pole parameter c must be real"));
                }
                PotentialModel::one_pole(c.re)
            }
            Tag::Free => return Err(CliError::config("the free model has no closed form; use --numeric")),
        })
    }

    /// The potential handed to the numerical solver and the index of its regular solution.
    pub fn numerical(&self) -> Result<(NumericalPotential, C64), CliError> {
        let half = C64::new(0.5, 0.0);
        match self.tag {
            Tag::Free => Ok((NumericalPotential::free(), half)),
            Tag::Pt1 => Ok((NumericalPotential::sinh_sq(self.get("nu")), self.get("nu"))),
            Tag::Pt2 => Ok((NumericalPotential::cosh_sq(self.get("kappa")), half)),
            _ => Err(CliError::config(format!("model {} has no short-range potential", self.tag.name()))),
        }
    }
}

fn canonical_key(tag: Tag, key: &str) -> String {
    let key = key.trim().to_ascii_lowercase();
    match (tag, key.as_str()) {
        (Tag::Coulomb, "kappa" | "kc" | "kappac") => "kappa_c".to_string(),
        _ => key,
    }
}

/// `key=value` with a complex literal value.
pub fn parse_assignment(s: &str) -> Result<(String, C64), CliError> {
    let (key, val) = s
        .split_once('=')
        .ok_or_else(|| CliError::config(format!("expected key=value, got '{s}'")))?;
    let v = parse_complex(val).map_err(|e| CliError::config(e.to_string()))?;
    Ok((key.trim().to_string(), v))
}

/// Comma-separated `key=value` pairs, as in `nu=-1,k=0+0.5i`.
pub fn parse_assignments(s: &str) -> Result<Vec<(String, C64)>, CliError> {
    s.split(',').filter(|p| !p.trim().is_empty()).map(parse_assignment).collect()
}

/// One scan axis: `count` evenly spaced nodes on the segment `[min, max]` of the complex plane.
#[derive(Debug, Clone, PartialEq)]
pub struct GridAxis {
    pub axis: String,
    pub min: C64,
    pub max: C64,
    pub count: usize,
}

impl GridAxis {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 4 {
            return Err(CliError::config(format!("grid '{s}' is not axis:min:max:count")));
        }
        let cplx = |t: &str| parse_complex(t).map_err(|e| CliError::config(e.to_string()));
        let count: usize = parts[3]
            .trim()
            .parse()
            .map_err(|_| CliError::config(format!("bad grid count '{}'", parts[3])))?;
        if count == 0 || count > MAX_GRID_NODES {
            return Err(CliError::config(format!("grid count must lie in 1..={MAX_GRID_NODES}")));
        }
        Ok(GridAxis { axis: parts[0].trim().to_ascii_lowercase(), min: cplx(parts[1])?, max: cplx(parts[2])?, count })
    }

    pub fn node(&self, i: usize) -> C64 {
        if self.count == 1 {
            return self.min;
        }
        let t = i as f64 / (self.count - 1) as f64;
        self.min + (self.max - self.min) * t
    }
}

/// Outer product of the axes, first axis slowest.
pub fn grid_nodes(axes: &[GridAxis]) -> Result<Vec<Vec<C64>>, CliError> {
    let total = axes.iter().try_fold(1usize, |acc, a| acc.checked_mul(a.count));
    match total {
        Some(t) if t <= MAX_GRID_NODES => {}
        _ => return Err(CliError::config(format!("grid exceeds {MAX_GRID_NODES} nodes"))),
    }
    let mut nodes = vec![Vec::new()];
    for a in axes {
        nodes = nodes
            .into_iter()
            .flat_map(|prefix| {
                (0..a.count).map(move |i| {
                    let mut p = prefix.clone();
                    p.push(a.node(i));
                    p
                })
            })
            .collect();
    }
    Ok(nodes)
}

pub fn check_tol(tol: f64) -> Result<f64, CliError> {
    if !(TOL_RANGE.0..=TOL_RANGE.1).contains(&tol) {
        return Err(CliError::config(format!("tolerance {tol:e} outside [{:e}, {:e}]", TOL_RANGE.0, TOL_RANGE.1)));
    }
    Ok(tol)
}

/// Reads `(param, k)` for a model's pole-skipping plane from `key=value` pairs.
pub fn plane_point(model: &PotentialModel, pairs: &[(String, C64)]) -> Result<(C64, C64), CliError> {
    let (pa, ka) = model.axes();
    let mut p = None;
    let mut k = None;
    for (key, v) in pairs {
        let key = key.trim().to_ascii_lowercase();
        if matches_axis(pa, &key) {
            p = Some(*v);
        } else if matches_axis(ka, &key) {
            k = Some(*v);
        } else {
            return Err(CliError::config(format!("'{key}' is not an axis of the {} plane ({pa}, {ka})", model.name())));
        }
    }
    match (p, k) {
        (Some(p), Some(k)) => Ok((p, k)),
        _ => Err(CliError::config(format!("--at needs both {pa} and {ka}"))),
    }
}

fn matches_axis(axis: Axis, key: &str) -> bool {
    match axis {
        Axis::KappaC => matches!(key, "kappa_c" | "kappac" | "kappa" | "kc"),
        other => Axis::from_name(key) == Some(other),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use poleskip::complex::c;

    #[test]
    fn model_defaults_and_overrides() {
        let m = ModelSpec::new("pt1", &[("nu".into(), c(2.0, 0.0))]).unwrap();
        assert_eq!(m.model().unwrap(), PotentialModel::sinh_sq(c(2.0, 0.0)));
        assert!(ModelSpec::new("pt1", &[("kappa".into(), c(2.0, 0.0))]).is_err());
        assert!(ModelSpec::new("onepole", &[("c".into(), c(0.0, 1.0))]).is_err());
        assert!(ModelSpec::new("nope", &[]).is_err());
    }

    #[test]
    fn coulomb_kappa_axis_sets_coupling() {
        let m = ModelSpec::new("coulomb", &[("k".into(), c(2.0, 0.0)), ("kappa".into(), c(0.0, 0.5))]).unwrap();
        assert_eq!(m.model().unwrap(), PotentialModel::coulomb(c(0.0, 2.0), c(0.5, 0.0)));
    }

    #[test]
    fn grid_parsing() {
        let g = GridAxis::parse("k:0.1:1.1:6").unwrap();
        assert_eq!(g.node(5), c(1.1, 0.0));
        assert!((g.node(1) - c(0.3, 0.0)).norm() < 1e-15);
        let g2 = GridAxis::parse("nu:-1-0.1i:-1+0.1i:3").unwrap();
        let nodes = grid_nodes(&[g, g2]).unwrap();
        assert_eq!(nodes.len(), 18);
        assert_eq!(nodes[1], vec![c(0.1, 0.0), c(-1.0, 0.0)]);
        assert!(GridAxis::parse("k:0:1").is_err());
        assert!(GridAxis::parse("k:0:1:0").is_err());
        let big = GridAxis::parse("k:0:1:1000000").unwrap();
        assert!(grid_nodes(&[big.clone(), big]).is_err());
    }

    #[test]
    fn at_parsing() {
        let pairs = parse_assignments("nu=-1,k=0+0.5i").unwrap();
        let (p, k) = plane_point(&PotentialModel::sinh_sq(c(0.0, 0.0)), &pairs).unwrap();
        assert_eq!((p, k), (c(-1.0, 0.0), c(0.0, 0.5)));
        assert!(plane_point(&PotentialModel::sinh_sq(c(0.0, 0.0)), &pairs[..1]).is_err());
        let pairs = parse_assignments("nu=-1,kappa=0.5i").unwrap();
        assert!(plane_point(&PotentialModel::coulomb(c(1.0, 0.0), c(0.0, 0.0)), &pairs).is_ok());
    }

    #[test]
    fn tolerance_range() {
        assert!(check_tol(1e-12).is_ok());
        assert!(check_tol(1e-15).is_err());
        assert!(check_tol(0.1).is_err());
    }
}

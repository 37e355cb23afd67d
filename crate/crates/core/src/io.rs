//! Self-describing JSON catalogs. Reals are decimal strings tagged with
//! the precision they were computed at.

use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::config::{GeometricConfiguration, Isometry};
use crate::error::{Error, Result};
use crate::geom::{CircleData, HomTriple};
use crate::incidence::{Kind, Label};
use crate::real::{MpFloat, Precision, Real};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub command: Vec<String>,
    pub precision_bits: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Catalog<T> {
    pub schema_version: u32,
    pub kind: String,
    pub provenance: Provenance,
    pub records: T,
}

impl<T: Serialize> Catalog<T> {
    pub fn new(kind: &str, provenance: Provenance, records: T) -> Self {
        Catalog { schema_version: SCHEMA_VERSION, kind: kind.to_string(), provenance, records }
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_json()?)?;
        Ok(())
    }
}

#[derive(Deserialize)]
struct Header {
    schema_version: u32,
    kind: String,
}

/// Parses a catalog, checking the schema version and kind before the
/// records. Errors carry the JSON path of the offending value.
pub fn parse_catalog<T: DeserializeOwned>(text: &str, kind: &str) -> Result<Catalog<T>> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let head: Header = serde_path_to_error::deserialize(de).map_err(schema_error)?;
    if head.schema_version != SCHEMA_VERSION {
        return Err(Error::Schema {
            path: "schema_version".into(),
            msg: format!("unsupported version {} (expected {SCHEMA_VERSION})", head.schema_version),
        });
    }
    if head.kind != kind {
        return Err(Error::Schema { path: "kind".into(), msg: format!("expected {kind:?}, found {:?}", head.kind) });
    }
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(schema_error)
}

pub fn load_catalog<T: DeserializeOwned>(path: &Path, kind: &str) -> Result<Catalog<T>> {
    parse_catalog(&std::fs::read_to_string(path)?, kind)
}

fn schema_error(e: serde_path_to_error::Error<serde_json::Error>) -> Error {
    let path = e.path().to_string();
    Error::Schema { path, msg: e.into_inner().to_string() }
}

pub fn decimal(x: &MpFloat) -> String {
    x.to_decimal()
}

fn parse_at(s: &str, p: Precision, path: impl Fn() -> String) -> Result<MpFloat> {
    MpFloat::parse_decimal(s, p).map_err(|e| Error::Schema { path: path(), msg: e.to_string() })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ElementRecord {
    pub label: Label,
    pub coords: [String; 3],
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CircleRecord {
    pub center: [String; 2],
    pub radius: String,
}

/// First row `(c, s)` of a reflection matrix; the mirror makes angle
/// `atan2(s, c) / 2` with the x-axis.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MirrorRecord {
    pub c: String,
    pub s: String,
}

impl MirrorRecord {
    pub fn angle(&self) -> Option<f64> {
        let c: f64 = self.c.parse().ok()?;
        let s: f64 = self.s.parse().ok()?;
        Some(s.atan2(c) / 2.0)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConfigRecord {
    pub name: String,
    pub m: u32,
    pub precision_bits: u32,
    pub points: Vec<ElementRecord>,
    pub lines: Vec<ElementRecord>,
    pub incidences: Vec<(Label, Label)>,
    pub max_incidence_residual: String,
    pub min_point_separation: String,
    pub min_line_separation: String,
    pub symmetry_order: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<CircleRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mirror: Option<MirrorRecord>,
    /// Solver data behind the coordinates (parameters, certification ladder).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solution: Option<serde_json::Value>,
}

fn element_records(els: &[(Label, HomTriple<MpFloat>)]) -> Vec<ElementRecord> {
    els.iter()
        .map(|(l, h)| {
            let n = h.normalized();
            ElementRecord { label: l.clone(), coords: [decimal(&n[0]), decimal(&n[1]), decimal(&n[2])] }
        })
        .collect()
}

impl ConfigRecord {
    pub fn from_config(name: &str, cfg: &GeometricConfiguration) -> Self {
        ConfigRecord {
            name: name.to_string(),
            m: cfg.m,
            precision_bits: cfg.precision.bits(),
            points: element_records(&cfg.points),
            lines: element_records(&cfg.lines),
            incidences: cfg.incidences.clone(),
            max_incidence_residual: decimal(&cfg.max_incidence_residual),
            min_point_separation: decimal(&cfg.min_point_separation),
            min_line_separation: decimal(&cfg.min_line_separation),
            symmetry_order: cfg.symmetry_order,
            omega: None,
            mirror: None,
            solution: None,
        }
    }

    pub fn with_omega(mut self, c: &CircleData<MpFloat>) -> Self {
        self.omega = Some(CircleRecord {
            center: [decimal(&c.center[0]), decimal(&c.center[1])],
            radius: decimal(&c.radius),
        });
        self
    }

    pub fn with_mirror(mut self, g: &Isometry) -> Self {
        if g.reflection {
            self.mirror = Some(MirrorRecord { c: decimal(&g.c), s: decimal(&g.s) });
        }
        self
    }

    pub fn with_solution(mut self, v: serde_json::Value) -> Self {
        self.solution = Some(v);
        self
    }

    pub fn precision(&self) -> Result<Precision> {
        Precision::new(self.precision_bits)
            .map_err(|e| Error::Schema { path: "precision_bits".into(), msg: e.to_string() })
    }

    /// Rebuilds the configuration at the stored precision. Residuals and
    /// separations are measured afresh.
    pub fn to_config(&self) -> Result<GeometricConfiguration> {
        let p = self.precision()?;
        let read = |els: &[ElementRecord], field: &str, kind: Kind| -> Result<Vec<(Label, HomTriple<MpFloat>)>> {
            els.iter()
                .enumerate()
                .map(|(i, e)| {
                    let mut c = Vec::with_capacity(3);
                    for (k, s) in e.coords.iter().enumerate() {
                        c.push(parse_at(s, p, || format!("{field}[{i}].coords[{k}]"))?);
                    }
                    let coords: [MpFloat; 3] = c.try_into().expect("three coordinates");
                    let h = HomTriple::new(coords, kind)
                        .map_err(|e| Error::Schema { path: format!("{field}[{i}]"), msg: e.to_string() })?;
                    Ok((e.label.clone(), h))
                })
                .collect()
        };
        let points = read(&self.points, "points", Kind::Point)?;
        let lines = read(&self.lines, "lines", Kind::Line)?;
        let mut cfg = GeometricConfiguration::new(self.m, points, lines, self.incidences.clone())?;
        cfg.precision = p;
        Ok(cfg)
    }

    pub fn omega(&self) -> Result<Option<CircleData<MpFloat>>> {
        let Some(o) = &self.omega else { return Ok(None) };
        let p = self.precision()?;
        let cx = parse_at(&o.center[0], p, || "omega.center[0]".into())?;
        let cy = parse_at(&o.center[1], p, || "omega.center[1]".into())?;
        let r = parse_at(&o.radius, p, || "omega.radius".into())?;
        CircleData::new([cx, cy], r).map(Some)
    }
}

pub fn parse_config_catalog(text: &str) -> Result<Catalog<Vec<ConfigRecord>>> {
    parse_catalog(text, "configurations")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::celestial::gr_coordinates;

    #[test]
    fn label_is_a_pair() {
        let s = serde_json::to_string(&Label::new("R", 0)).unwrap();
        assert_eq!(s, r#"["R",0]"#);
        let l: Label = serde_json::from_str(r#"["y",2]"#).unwrap();
        assert_eq!(l, Label::new("y", 2));
    }

    #[test]
    fn config_round_trip() {
        let p = Precision::new(128).unwrap();
        let cfg = gr_coordinates(p).unwrap();
        let rec = ConfigRecord::from_config("GR", &cfg);
        let cat = Catalog::new("configurations", Provenance::default(), vec![rec.clone()]);
        let text = cat.to_json().unwrap();
        assert_eq!(text, cat.to_json().unwrap());
        let back = parse_config_catalog(&text).unwrap();
        assert_eq!(back.records[0], rec);
        let cfg2 = back.records[0].to_config().unwrap();
        assert_eq!(cfg2.incidences.len(), 84);
        assert_eq!(cfg2.precision.bits(), 128);
        assert!(cfg2.max_incidence_residual.to_f64() < 1e-30);
        assert_eq!(cfg2.symmetry_order, 7);
    }

    #[test]
    fn schema_errors_name_the_path() {
        let bad = r#"{"schema_version":1,"kind":"configurations","provenance":{"command":[],"precision_bits":null},
            "records":[{"name":"x","m":3,"precision_bits":64,"points":[{"label":["R",0],"coords":["1","0"]}]}]}"#;
        match parse_config_catalog(bad) {
            Err(Error::Schema { path, .. }) => assert!(path.starts_with("records[0].points[0].coords"), "{path}"),
            other => panic!("{other:?}"),
        }
        let old = r#"{"schema_version":0,"kind":"configurations","provenance":{"command":[]},"records":[]}"#;
        assert!(matches!(parse_config_catalog(old), Err(Error::Schema { path, .. }) if path == "schema_version"));
        let text = r#"{"schema_version":1,"kind":"configurations","provenance":{"command":[]},"records":[{"name":"x","m":3,"precision_bits":64,"points":[{"label":["R",0],"coords":["1","zz","1"]}],"lines":[],"incidences":[],"max_incidence_residual":"0","min_point_separation":"0","min_line_separation":"0","symmetry_order":1}]}"#;
        let cat = parse_config_catalog(text).unwrap();
        assert!(matches!(cat.records[0].to_config(), Err(Error::Schema { path, .. }) if path == "points[0].coords[1]"));
    }
}

//! The two conjectured parameter families of (7m_4) configurations and
//! batch scans over them.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::real::{MpFloat, Real};
use crate::realize::{realize_from, solve_system, tally, SolveOptions};
use crate::voltage::{family_lift_report, FamilyLiftReport, ParameterVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    F1,
    F2,
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "F1" => Ok(Family::F1),
            "F2" => Ok(Family::F2),
            _ => Err(Error::Parse(format!("unknown family {s:?}, expected F1 or F2"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FamilySpec {
    pub family: Family,
    pub m: u32,
    pub a: i64,
    pub b: i64,
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}({};{},{})", self.family, self.m, self.a, self.b)
    }
}

impl FamilySpec {
    pub fn new(family: Family, m: u32, a: i64, b: i64) -> Self {
        FamilySpec { family, m, a, b }
    }

    /// F1 needs `a >= b` and `1 <= a, b <= m/2`; F2 needs `1 <= b <= a < m`
    /// and `a != m/2`.
    pub fn validate(&self) -> Result<()> {
        let (m, a, b) = (self.m as i64, self.a, self.b);
        if m < 1 {
            return Err(Error::Validation("modulus must be positive".into()));
        }
        let ok = match self.family {
            Family::F1 => a >= b && 1 <= b && 2 * a <= m && 2 * b <= m,
            Family::F2 => a >= b && 1 <= b && a < m && 2 * a != m,
        };
        if ok {
            Ok(())
        } else {
            let rule = match self.family {
                Family::F1 => "a >= b and 1 <= a, b <= m/2",
                Family::F2 => "a >= b >= 1, a < m and a != m/2",
            };
            Err(Error::Validation(format!("{self} violates {rule}")))
        }
    }

    /// All valid specs of a family for moduli in `ms`, ordered by (m, a, b).
    pub fn all(family: Family, ms: impl IntoIterator<Item = u32>) -> Vec<FamilySpec> {
        let mut out = Vec::new();
        for m in ms {
            for a in 1..m as i64 {
                for b in 1..=a {
                    let s = FamilySpec::new(family, m, a, b);
                    if s.validate().is_ok() {
                        out.push(s);
                    }
                }
            }
        }
        out
    }
}

pub fn family_params(spec: &FamilySpec) -> Result<ParameterVector> {
    spec.validate()?;
    let (a, b) = (spec.a, spec.b);
    let v = match spec.family {
        Family::F1 => [a, -a, a, b, b, -a, -2 * a, a, -a, a, b, b, -a, -2 * a, 0],
        Family::F2 => [a, b, b, b, b, b, b, a, b, b, b, b, b, b, 0],
    };
    ParameterVector::new(spec.m, &v)
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanRow {
    pub spec: FamilySpec,
    pub params: Option<ParameterVector>,
    pub combinatorial: Option<FamilyLiftReport>,
    pub full: usize,
    pub partial: usize,
    pub degenerate: usize,
    pub singular: usize,
    /// FULL solutions re-verified as strong realizations.
    pub realizations: usize,
    pub best_min_point_separation: Option<MpFloat>,
    pub best_max_incidence_residual: Option<MpFloat>,
    pub error: Option<String>,
}

impl ScanRow {
    fn empty(spec: FamilySpec) -> Self {
        ScanRow {
            spec,
            params: None,
            combinatorial: None,
            full: 0,
            partial: 0,
            degenerate: 0,
            singular: 0,
            realizations: 0,
            best_min_point_separation: None,
            best_max_incidence_residual: None,
            error: None,
        }
    }

    pub fn min_separation_f64(&self) -> Option<f64> {
        self.best_min_point_separation.as_ref().map(Real::to_f64)
    }

    pub fn combinatorially_valid(&self) -> bool {
        self.combinatorial.as_ref().is_some_and(FamilyLiftReport::valid)
    }
}

/// Failures of any stage are recorded in the row, never raised.
pub fn scan_one(spec: &FamilySpec, opts: &SolveOptions) -> ScanRow {
    let mut row = ScanRow::empty(*spec);
    let params = match family_params(spec) {
        Ok(p) => p,
        Err(e) => {
            row.error = Some(e.to_string());
            return row;
        }
    };
    row.params = Some(params);
    row.combinatorial = Some(family_lift_report(spec.m, &params));
    let sols = match solve_system(spec.m, &params, opts) {
        Ok(s) => s,
        Err(e) => {
            row.error = Some(e.to_string());
            return row;
        }
    };
    (row.full, row.partial, row.degenerate) = tally(&sols);
    row.singular = sols.iter().filter(|s| s.singular).count();
    match realize_from(spec.m, &params, &sols) {
        Ok(cfgs) => {
            row.realizations = cfgs.iter().filter(|c| c.is_strong()).count();
            if let Some(best) = cfgs.iter().max_by(|a, b| {
                a.min_point_separation.partial_cmp(&b.min_point_separation).unwrap_or(std::cmp::Ordering::Equal)
            }) {
                row.best_min_point_separation = Some(best.min_point_separation.clone());
                row.best_max_incidence_residual = Some(best.max_incidence_residual.clone());
            }
        }
        Err(e) => row.error = Some(e.to_string()),
    }
    row
}

/// One row per spec, in spec order regardless of scheduling.
pub fn scan_family(specs: &[FamilySpec], opts: &SolveOptions) -> Vec<ScanRow> {
    specs.par_iter().map(|s| scan_one(s, opts)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_and_constraints() {
        let p = family_params(&FamilySpec::new(Family::F1, 3, 1, 1)).unwrap();
        assert_eq!(p.0, [1, 2, 1, 1, 1, 2, 1, 1, 2, 1, 1, 1, 2, 1, 0]);
        let p = family_params(&FamilySpec::new(Family::F2, 4, 3, 1)).unwrap();
        assert_eq!(p.0, [3, 1, 1, 1, 1, 1, 1, 3, 1, 1, 1, 1, 1, 1, 0]);
        assert!(family_params(&FamilySpec::new(Family::F1, 4, 1, 3)).is_err());
        assert!(family_params(&FamilySpec::new(Family::F2, 4, 2, 1)).is_err());
        assert!(FamilySpec::all(Family::F1, [3]).len() == 1);
    }
}

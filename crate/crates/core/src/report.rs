//! Census of the enumerated Levi graphs with solver outcomes.

use std::fmt::Write;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::families::{family_params, Family, FamilySpec};
use crate::realize::{solve_system, tally, SolveOptions};
use crate::symmetry::canonical_form;
use crate::voltage::{configuration_count, lift, rlg_b_template, rlg_gr_template, EnumerationRecord, ParameterVector};

/// Nondegenerate solutions: none, only partial ones, or a full realization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum NdSols {
    #[serde(rename = "n")]
    None,
    #[serde(rename = "y")]
    Partial,
    #[serde(rename = "Y")]
    Full,
}

impl NdSols {
    pub fn from_tally(full: usize, partial: usize) -> Self {
        if full > 0 {
            NdSols::Full
        } else if partial > 0 {
            NdSols::Partial
        } else {
            NdSols::None
        }
    }

    pub fn symbol(self) -> char {
        match self {
            NdSols::None => 'n',
            NdSols::Partial => 'y',
            NdSols::Full => 'Y',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolverSummary {
    /// The vector actually solved, which need not be the class representative.
    pub params: ParameterVector,
    pub full: usize,
    pub partial: usize,
    pub degenerate: usize,
    pub ndsols: NdSols,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusRow {
    pub item: usize,
    pub params: ParameterVector,
    pub aut_order: usize,
    pub name: Option<String>,
    pub self_dual: bool,
    pub certificate: String,
    /// Absent when the solver was not run or failed for this class.
    pub solver: Option<SolverSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solver_error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusReport {
    pub rows: Vec<CensusRow>,
    pub levi_graphs: usize,
    pub self_dual: usize,
    pub configurations: usize,
}

/// Certificates of the two named (21_4) configurations.
pub fn named_certificates() -> Result<Vec<(String, String)>> {
    let b = family_params(&FamilySpec::new(Family::F1, 3, 1, 1))?;
    let (gb, _) = lift(&rlg_b_template(3, &b))?;
    let (gr, _) = lift(&rlg_gr_template())?;
    Ok(vec![("B".into(), canonical_form(&gb, true).hex()), ("GR".into(), canonical_form(&gr, true).hex())])
}

/// Builds the census. With `solve` set, each class is solved at the vector
/// from `vectors` whose lift has its certificate, or at its representative.
pub fn census_report(
    records: &[EnumerationRecord],
    vectors: &[ParameterVector],
    solve: Option<&SolveOptions>,
) -> Result<CensusReport> {
    let names = named_certificates()?;
    let mut by_cert = Vec::new();
    for v in vectors {
        let (g, _) = lift(&rlg_b_template(3, v))?;
        by_cert.push((canonical_form(&g, true).hex(), *v));
    }
    let rows: Vec<CensusRow> = records
        .par_iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = CensusRow {
                item: i + 1,
                params: r.params,
                aut_order: r.aut_order,
                name: names.iter().find(|(_, c)| *c == r.certificate).map(|(n, _)| n.clone()),
                self_dual: r.self_dual,
                certificate: r.certificate.clone(),
                solver: None,
                solver_error: None,
            };
            if let Some(opts) = solve {
                let v = by_cert.iter().find(|(c, _)| *c == r.certificate).map_or(r.params, |e| e.1);
                match solve_system(3, &v, opts) {
                    Ok(sols) => {
                        let (full, partial, degenerate) = tally(&sols);
                        row.solver = Some(SolverSummary {
                            params: v,
                            full,
                            partial,
                            degenerate,
                            ndsols: NdSols::from_tally(full, partial),
                        });
                    }
                    Err(e) => row.solver_error = Some(e.to_string()),
                }
            }
            row
        })
        .collect();
    Ok(CensusReport {
        levi_graphs: records.len(),
        self_dual: records.iter().filter(|r| r.self_dual).count(),
        configurations: configuration_count(records),
        rows,
    })
}

impl CensusReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{:>3}  {:<33}  {:>5}  {:<4}  {:<9}  {}", "#", "parameters", "|Aut|", "name", "self-dual", "NDsols");
        for r in &self.rows {
            let nd = r.solver.as_ref().map_or('?', |v| v.ndsols.symbol());
            let _ = writeln!(
                s,
                "{:>3}  {:<33}  {:>5}  {:<4}  {:<9}  {}",
                r.item,
                r.params.to_string(),
                r.aut_order,
                r.name.as_deref().unwrap_or(""),
                if r.self_dual { "y" } else { "n" },
                nd
            );
        }
        let missing = self.rows.iter().filter(|r| r.solver.is_none()).count();
        let _ = writeln!(
            s,
            "Levi graphs: {}, self-dual: {}, configurations: {}",
            self.levi_graphs, self.self_dual, self.configurations
        );
        if missing > 0 {
            let _ = writeln!(s, "solver results missing for {missing} rows (shown as ?)");
        }
        s
    }
}

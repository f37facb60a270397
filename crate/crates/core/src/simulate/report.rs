use std::collections::BTreeSet;
use std::fmt;

use crate::grossnum::GrossNumber;
use crate::turing::Configuration;

use super::{observability, simulation_cost, SimulateError, SimulationMode, Verdicts};

/// Outcome of a simulation, executed or purely algebraic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimulationReport {
    pub degree: u64,
    pub depth: GrossNumber,
    /// Cost of re-executing the complete tree of this degree and depth; an
    /// upper bound on `measured_steps`.
    pub cost: GrossNumber,
    /// Steps actually executed; `None` for algebraic reports.
    pub measured_steps: Option<u64>,
    /// Paths visited, i.e. tree nodes below the root.
    pub paths: Option<u64>,
    /// Nodes per level, starting at level 1.
    pub level_sizes: Vec<u64>,
    pub final_configurations: BTreeSet<Configuration>,
    pub verdicts: Verdicts,
    pub mode: Option<SimulationMode>,
}

fn bound(d: u64, k: &GrossNumber) -> Result<(GrossNumber, Verdicts), SimulateError> {
    if d == 0 {
        // Nothing can fire: the root is the whole tree.
        let v = observability(1, k)?;
        let all = Verdicts {
            steps_ok: true,
            leaves_ok: true,
            nodes_ok: true,
            ..v
        };
        return Ok((GrossNumber::zero(), all));
    }
    Ok((simulation_cost(d, k)?, observability(d, k)?))
}

impl SimulationReport {
    /// Cost and verdicts for a complete tree, without running anything.
    pub fn analytic(d: u64, k: GrossNumber) -> Result<Self, SimulateError> {
        let (cost, verdicts) = bound(d, &k)?;
        Ok(Self {
            degree: d,
            depth: k,
            cost,
            measured_steps: None,
            paths: None,
            level_sizes: Vec::new(),
            final_configurations: BTreeSet::new(),
            verdicts,
            mode: None,
        })
    }

    pub(crate) fn executed(
        d: u64,
        k: GrossNumber,
        measured: u64,
        paths: u64,
        level_sizes: Vec<u64>,
        finals: BTreeSet<Configuration>,
        mode: SimulationMode,
    ) -> Result<Self, SimulateError> {
        let mut r = Self::analytic(d, k)?;
        r.measured_steps = Some(measured);
        r.paths = Some(paths);
        r.level_sizes = level_sizes;
        r.final_configurations = finals;
        r.mode = Some(mode);
        Ok(r)
    }

    /// False when steps were counted with the cached mode.
    pub fn conforming(&self) -> bool {
        self.mode != Some(SimulationMode::Cached)
    }

    /// Key/value rows in report order. Gross-numbers use their canonical
    /// spelling.
    pub fn rows(&self) -> Vec<(String, String)> {
        let mut rows = vec![
            ("degree".to_string(), self.degree.to_string()),
            ("depth".to_string(), self.depth.to_string()),
            ("cost".to_string(), self.cost.to_string()),
        ];
        if let Some(mode) = self.mode {
            let name = match mode {
                SimulationMode::ReExecute => "re-execute",
                SimulationMode::Cached => "cached",
            };
            rows.push(("mode".into(), name.into()));
            rows.push(("conforming".into(), self.conforming().to_string()));
        }
        if let Some(m) = self.measured_steps {
            rows.push(("measured_steps".into(), m.to_string()));
        }
        if let Some(p) = self.paths {
            rows.push(("paths".into(), p.to_string()));
            let levels: Vec<String> = self.level_sizes.iter().map(u64::to_string).collect();
            rows.push(("levels".into(), levels.join(" ")));
            rows.push((
                "final_configurations".into(),
                self.final_configurations.len().to_string(),
            ));
            for (i, c) in self.final_configurations.iter().enumerate() {
                rows.push((format!("final.{i}"), c.to_string()));
            }
        }
        for (name, ok) in self.verdicts.entries() {
            rows.push((format!("verdict.{name}"), ok.to_string()));
        }
        rows
    }
}

/// Layout of a textual report.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ReportFormat {
    /// Aligned `key  value` columns.
    #[default]
    Table,
    /// One `key=value` per line.
    Kv,
}

/// Render rows, one per line, each line newline-terminated.
pub fn render(rows: &[(String, String)], format: ReportFormat) -> String {
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        match format {
            ReportFormat::Kv => out.push_str(&format!("{k}={v}\n")),
            ReportFormat::Table => out.push_str(&format!("{k:<width$}  {v}\n")),
        }
    }
    out
}

impl fmt::Display for SimulationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.rows(), ReportFormat::Table))
    }
}

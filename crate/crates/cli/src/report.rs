//! Report types and their text, JSON and CSV renderings.

use std::collections::BTreeMap;
use std::fmt::Write;

use bms_core::algebra::HalfInt;
use bms_core::exactnum::Poly;
use bms_core::freefield::{ResidualReport, WhittakerAction};
use bms_core::pbw::IndexTriple;
use bms_core::verma::{DeterminantCheck, GramReport, VermaSimplicity, VermaVector, WeightParams};
use clap::ValueEnum;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

pub trait Render {
    fn json(&self) -> serde_json::Result<String>;
    fn text(&self) -> String;
    /// Header and rows.
    fn table(&self) -> (Vec<String>, Vec<Vec<String>>);

    fn render(&self, format: Format) -> Result<String, String> {
        match format {
            Format::Json => self.json().map(|s| s + "\n").map_err(|e| e.to_string()),
            Format::Text => Ok(self.text()),
            Format::Csv => {
                let (header, rows) = self.table();
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&header).map_err(|e| e.to_string())?;
                for row in rows {
                    w.write_record(&row).map_err(|e| e.to_string())?;
                }
                let bytes = w.into_inner().map_err(|e| e.to_string())?;
                String::from_utf8(bytes).map_err(|e| e.to_string())
            }
        }
    }
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn point(p: &WeightParams) -> String {
    format!("({}, {}, {}, {})", p.h1, p.h2, p.c1, p.c2)
}

/// A [`GramReport`]; CSV output holds either `G_n` or `D_n`.
pub struct GramOutput {
    pub report: GramReport,
    pub csv_matrix: bool,
}

impl Render for GramOutput {
    fn json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(&self.report)
    }

    fn text(&self) -> String {
        let r = &self.report;
        let mut out = format!("level {}\ndimension {}\n", r.level, r.basis.len());
        let width = r
            .basis
            .iter()
            .map(|t| t.to_string().len())
            .max()
            .unwrap_or(0);
        out.push_str("diagonal of D:\n");
        for (t, d) in r.basis.iter().zip(&r.diagonal) {
            let _ = writeln!(out, "  {:width$}  {d}", t.to_string());
        }
        let _ = writeln!(out, "det G = {}", r.det);
        out
    }

    fn table(&self) -> (Vec<String>, Vec<Vec<String>>) {
        let r = &self.report;
        let matrix = if self.csv_matrix { &r.gram } else { &r.dmat };
        let mut header = vec!["basis".to_string()];
        header.extend(strings(&r.basis));
        let rows = r
            .basis
            .iter()
            .zip(matrix)
            .map(|(t, row)| {
                let mut cells = vec![t.to_string()];
                cells.extend(strings(row));
                cells
            })
            .collect();
        (header, rows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DetcheckReport {
    /// `None` for symbolic checks.
    pub seed: Option<u64>,
    pub checks: Vec<DeterminantCheck>,
}

impl Render for DetcheckReport {
    fn json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    fn text(&self) -> String {
        let mut out = String::new();
        if let Some(seed) = self.seed {
            let _ = writeln!(out, "seed {seed}");
        }
        for c in &self.checks {
            let [h1, h2, c1, c2] = &c.point;
            let verdict = match c.sign {
                1 => "det = +prod",
                -1 => "det = -prod",
                _ => "MISMATCH",
            };
            let _ = writeln!(
                out,
                "level {} at ({h1}, {h2}, {c1}, {c2}): {verdict}",
                c.level
            );
        }
        let failed = self.checks.iter().filter(|c| !c.agrees()).count();
        let _ = writeln!(out, "{} checks, {failed} mismatches", self.checks.len());
        out
    }

    fn table(&self) -> (Vec<String>, Vec<Vec<String>>) {
        let header = [
            "level",
            "h1",
            "h2",
            "c1",
            "c2",
            "det",
            "diagonal_product",
            "sign",
        ];
        let rows = self
            .checks
            .iter()
            .map(|c| {
                let mut row = vec![c.level.to_string()];
                row.extend(strings(&c.point));
                row.extend([
                    c.det.to_string(),
                    c.diagonal_product.to_string(),
                    c.sign.to_string(),
                ]);
                row
            })
            .collect();
        (strings(&header), rows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicityReport {
    pub kind: String,
    pub inputs: BTreeMap<String, String>,
    pub simple: bool,
    pub verma: Option<VermaSimplicity>,
    pub first_degenerate_level: Option<HalfInt>,
}

impl Render for SimplicityReport {
    fn json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    fn text(&self) -> String {
        let inputs: Vec<String> = self
            .inputs
            .iter()
            .map(|(k, v)| format!("{k} = {v}"))
            .collect();
        let mut out = format!(
            "{} ({}): {}\n",
            self.kind,
            inputs.join(", "),
            if self.simple { "simple" } else { "not simple" }
        );
        if let Some(v) = &self.verma {
            match &v.all_roots {
                Some(roots) => {
                    let _ = writeln!(out, "violating i: {:?}", roots);
                }
                None => out.push_str("violating i: all\n"),
            }
        }
        if let Some(level) = self.first_degenerate_level {
            let _ = writeln!(out, "first degenerate level {level}");
        }
        out
    }

    fn table(&self) -> (Vec<String>, Vec<Vec<String>>) {
        let mut rows = vec![
            vec!["kind".to_string(), self.kind.clone()],
            vec!["simple".to_string(), self.simple.to_string()],
        ];
        rows.extend(self.inputs.iter().map(|(k, v)| vec![k.clone(), v.clone()]));
        if let Some(level) = self.first_degenerate_level {
            rows.push(vec!["first_degenerate_level".into(), level.to_string()]);
        }
        (strings(&["key", "value"]), rows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularReport {
    pub level: HalfInt,
    pub params: WeightParams,
    pub mode_cutoff: u32,
    pub basis: Vec<IndexTriple>,
    pub vectors: Vec<VermaVector>,
}

impl Render for SingularReport {
    fn json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    fn text(&self) -> String {
        let mut out = format!(
            "level {} of M{}: singular space of dimension {} (raising modes up to {})\n",
            self.level,
            point(&self.params),
            self.vectors.len(),
            self.mode_cutoff
        );
        for v in &self.vectors {
            let _ = writeln!(out, "  {v}");
        }
        out
    }

    fn table(&self) -> (Vec<String>, Vec<Vec<String>>) {
        let rows = self
            .vectors
            .iter()
            .map(|v| {
                self.basis
                    .iter()
                    .map(|t| v.coefficient(t).to_string())
                    .collect()
            })
            .collect();
        (strings(&self.basis), rows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FfrReport {
    pub spec: String,
    pub rho: Poly,
    pub max_mode: HalfInt,
    pub max_depth: HalfInt,
    pub central: [Poly; 2],
    pub pairs: Vec<ResidualReport>,
    pub passed: bool,
}

impl Render for FfrReport {
    fn json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    fn text(&self) -> String {
        let mut out = format!(
            "{} module, rho = {}, |mode| <= {}, depth <= {}\n",
            self.spec, self.rho, self.max_mode, self.max_depth
        );
        let failed: Vec<&ResidualReport> = self.pairs.iter().filter(|r| !r.passed()).collect();
        for r in &failed {
            let _ = writeln!(
                out,
                "  [{}, {}]: residual with {} terms",
                r.pair[0], r.pair[1], r.max_residual_terms
            );
        }
        let _ = writeln!(
            out,
            "{} pairs, {} failures\ncentral charges c1 = {}, c2 = {}",
            self.pairs.len(),
            failed.len(),
            self.central[0],
            self.central[1]
        );
        out
    }

    fn table(&self) -> (Vec<String>, Vec<Vec<String>>) {
        let rows = self
            .pairs
            .iter()
            .map(|r| {
                vec![
                    r.pair[0].to_string(),
                    r.pair[1].to_string(),
                    r.cutoff.to_string(),
                    r.max_residual_terms.to_string(),
                ]
            })
            .collect();
        (strings(&["x", "y", "depth", "residual_terms"]), rows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WhittakerReport {
    pub rho: Poly,
    pub max_mode: i64,
    pub actions: Vec<WhittakerAction>,
}

impl Render for WhittakerReport {
    fn json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    fn text(&self) -> String {
        let mut out = format!("rho = {}\n", self.rho);
        for a in &self.actions {
            let _ = writeln!(out, "{} w = {}", a.generator, a.image);
        }
        out
    }

    fn table(&self) -> (Vec<String>, Vec<Vec<String>>) {
        let rows = self
            .actions
            .iter()
            .map(|a| vec![a.generator.to_string(), a.image.to_string()])
            .collect();
        (strings(&["generator", "image"]), rows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub level: HalfInt,
    pub count: u64,
    pub basis: Option<Vec<IndexTriple>>,
}

impl Render for PartitionReport {
    fn json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    fn text(&self) -> String {
        let mut out = format!("{}\n", self.count);
        for t in self.basis.iter().flatten() {
            let _ = writeln!(out, "{t}");
        }
        out
    }

    fn table(&self) -> (Vec<String>, Vec<Vec<String>>) {
        let rows = match &self.basis {
            Some(basis) => basis
                .iter()
                .map(|t| vec![self.level.to_string(), t.to_string()])
                .collect(),
            None => vec![vec![self.level.to_string(), self.count.to_string()]],
        };
        let header = if self.basis.is_some() {
            ["level", "monomial"]
        } else {
            ["level", "count"]
        };
        (strings(&header), rows)
    }
}

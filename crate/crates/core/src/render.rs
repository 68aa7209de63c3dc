//! Chain diagrams for uniserial modules, drawn socle first.
//!
//! Edge labels are ambient shifts: a factor `D^(λ±d)` of the summand
//! `Y^(λ±δ)` is labelled `d` relative to the hook's base partition `λ`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hook::{YoungDecomposition, YoungSummand};
use crate::partition::TwoPartPartition;
use crate::structure::{young_factors, CompositionSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeEdge {
    pub from: usize,
    pub to: usize,
    pub label: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeDiagram {
    pub title: String,
    pub vertices: usize,
    pub edges: Vec<LatticeEdge>,
}

fn summand_title(ambient: TwoPartPartition, shift: u64, own: TwoPartPartition) -> String {
    if shift == 0 {
        format!("Y^{own}")
    } else {
        format!("Y^{ambient}±{shift} = Y^{own}")
    }
}

/// The partition `μ` with `μ ± shift = lam`, if there is one.
fn unshift(lam: TwoPartPartition, shift: u64) -> Result<TwoPartPartition> {
    let overflow = || Error::ShiftOverflow { shift, label: lam.to_string() };
    let lam1 = lam.lam1().checked_sub(shift).ok_or_else(overflow)?;
    let lam2 = lam.lam2().checked_add(shift).ok_or_else(overflow)?;
    TwoPartPartition::new(lam1, lam2).map_err(|_| overflow())
}

impl LatticeDiagram {
    /// Chain `0 -> 1 -> .. -> k` of a series on `Y^μ` with `μ = λ ± ambient_shift`.
    pub fn from_series(series: &CompositionSeries, ambient_shift: u64) -> Result<Self> {
        let ambient = unshift(series.base, ambient_shift)?;
        let edges = series
            .labels
            .iter()
            .enumerate()
            .map(|(i, l)| LatticeEdge { from: i, to: i + 1, label: l.shift + ambient_shift })
            .collect();
        Ok(Self {
            title: summand_title(ambient, ambient_shift, series.base),
            vertices: series.len() + 1,
            edges,
        })
    }

    /// A single annotated vertex standing in for a summand with no unique series.
    pub fn non_uniserial(ambient: TwoPartPartition, summand: &YoungSummand) -> Self {
        let k = young_factors(summand.label).total();
        Self {
            title: format!(
                "{}: non-uniserial, {k} factors",
                summand_title(ambient, summand.delta, summand.label)
            ),
            vertices: 1,
            edges: Vec::new(),
        }
    }

    pub fn labels(&self) -> Vec<u64> {
        self.edges.iter().map(|e| e.label).collect()
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str("digraph lattice {\n");
        let _ = writeln!(out, "    label=\"{}\";", self.title.replace('"', "\\\""));
        out.push_str("    labelloc=b;\n    rankdir=BT;\n    node [shape=circle, label=\"\"];\n");
        for v in 0..self.vertices {
            let _ = writeln!(out, "    n{v};");
        }
        for e in &self.edges {
            let _ = writeln!(out, "    n{} -> n{} [label=\"{}\"];", e.from, e.to, e.label);
        }
        out.push_str("}\n");
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.title);
        for e in &self.edges {
            let _ = writeln!(out, "{} -> {} [{}]", e.from, e.to, e.label);
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("diagram serializes");
        s.push('\n');
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Json => self.to_json(),
            Format::Dot => self.to_dot(),
        }
    }
}

pub fn render_series(series: &CompositionSeries, ambient_shift: u64, format: Format) -> Result<String> {
    Ok(LatticeDiagram::from_series(series, ambient_shift)?.render(format))
}

/// One diagram per summand in increasing `δ`.
pub fn decomposition_diagrams(dec: &YoungDecomposition) -> Result<Vec<LatticeDiagram>> {
    dec.summands
        .iter()
        .map(|s| match &s.series {
            Some(series) => LatticeDiagram::from_series(series, s.delta),
            None => Ok(LatticeDiagram::non_uniserial(dec.base, s)),
        })
        .collect()
}

pub fn render_decomposition(dec: &YoungDecomposition, format: Format) -> Result<String> {
    let diagrams = decomposition_diagrams(dec)?;
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&diagrams).expect("diagrams serialize");
            s.push('\n');
            s
        }
        _ => diagrams.iter().map(|d| d.render(format)).collect::<Vec<_>>().join("\n"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hook::hook_decompose;
    use crate::partition::HookShape;
    use crate::structure::young_series;

    fn p(a: u64, b: u64) -> TwoPartPartition {
        TwoPartPartition::new(a, b).unwrap()
    }

    #[test]
    fn series_labels_in_ambient_coordinates() {
        let d = LatticeDiagram::from_series(&young_series(p(48, 21)).unwrap(), 0).unwrap();
        assert_eq!(d.labels(), vec![4, 8, 16, 0, 16, 8, 4]);
        assert_eq!(d.vertices, 8);
        assert_eq!(d.title, "Y^(48,21)");

        let d = LatticeDiagram::from_series(&young_series(p(66, 7)).unwrap(), 18).unwrap();
        assert_eq!(d.labels(), vec![22, 18, 22]);
        assert_eq!(d.title, "Y^(48,25)±18 = Y^(66,7)");

        let d = LatticeDiagram::from_series(&young_series(p(50, 19)).unwrap(), 2).unwrap();
        assert_eq!(d.labels(), vec![2]);
    }

    #[test]
    fn shift_outside_ambient_is_rejected() {
        let s = young_series(p(50, 19)).unwrap();
        assert!(matches!(LatticeDiagram::from_series(&s, 16), Err(Error::ShiftOverflow { .. })));
        assert!(matches!(LatticeDiagram::from_series(&s, 51), Err(Error::ShiftOverflow { .. })));
        assert!(LatticeDiagram::from_series(&s, 15).is_ok());
    }

    #[test]
    fn formats() {
        let s = young_series(p(64, 5)).unwrap();
        let text = render_series(&s, 16, Format::Text).unwrap();
        assert_eq!(text, "Y^(48,21)±16 = Y^(64,5)\n0 -> 1 [20]\n1 -> 2 [16]\n2 -> 3 [20]\n");
        let dot = render_series(&s, 16, Format::Dot).unwrap();
        assert!(dot.starts_with("digraph lattice {\n"));
        assert!(dot.contains("    n0 -> n1 [label=\"20\"];\n"));
        assert!(dot.contains("    n3;\n"));
        let json = render_series(&s, 16, Format::Json).unwrap();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["vertices"], 4);
        assert_eq!(value["edges"][1], serde_json::json!({"from": 1, "to": 2, "label": 16}));
    }

    #[test]
    fn json_roundtrip() {
        let dec = hook_decompose(HookShape::new(48, 25).unwrap()).unwrap();
        for d in decomposition_diagrams(&dec).unwrap() {
            let back: LatticeDiagram = serde_json::from_str(&d.to_json()).unwrap();
            assert_eq!(back, d);
        }
    }

    #[test]
    fn non_uniserial_summand_is_a_single_vertex() {
        // (25, 1^12): the δ = 4 summand Y^(29,8) is not uniserial
        let dec = hook_decompose(HookShape::new(25, 12).unwrap()).unwrap();
        let diagrams = decomposition_diagrams(&dec).unwrap();
        let idx = dec.deltas.iter().position(|&d| d == 4).unwrap();
        assert!(!dec.summands[idx].uniserial);
        let d = &diagrams[idx];
        assert_eq!((d.vertices, d.edges.len()), (1, 0));
        let k = young_factors(p(29, 8)).total();
        assert_eq!(d.title, format!("Y^(25,12)±4 = Y^(29,8): non-uniserial, {k} factors"));
    }
}

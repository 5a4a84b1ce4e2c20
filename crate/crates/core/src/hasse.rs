//! Hasse diagrams of extensions that are semilattices.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::carriers::named;
use crate::caps::check;
use crate::error::{Error, Result};
use crate::extension::ExtensionSemigroup;
use crate::family::UpFamily;
use crate::space::{lambda4_name, SpaceKind};

/// Larger carriers are refused; the cover computation is quadratic in memory.
pub const HASSE_LIMIT: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseNode {
    pub id: usize,
    pub label: String,
    pub family: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseDiagram {
    pub space: SpaceKind,
    pub nodes: Vec<HasseNode>,
    /// Covering pairs `(lower, upper)`.
    pub edges: Vec<(usize, usize)>,
}

fn label(e: &ExtensionSemigroup, f: &UpFamily, chain4: bool) -> String {
    if chain4 {
        if let Some(name) = lambda4_name(f) {
            return name.to_string();
        }
    }
    match f.minimal() {
        [single] if single.len() == 1 => format!("⟨{}⟩", single.indices()[0]),
        _ if e.kind() == SpaceKind::Lambda && f.order() == 3 => "Δ".to_string(),
        _ => f.to_string(),
    }
}

/// Covers of the order `x ≤ y ⇔ xy = x`. Fails unless the extension is a
/// semilattice.
pub fn hasse_diagram(e: &ExtensionSemigroup) -> Result<HasseDiagram> {
    check(&format!("hasse diagram of {}", e.kind()), e.len(), HASSE_LIMIT)?;
    if e.band_witness().is_some() || e.commutativity_witness().is_some() {
        return Err(Error::NotSemilattice);
    }
    let n = e.len();
    let leq: Vec<Vec<bool>> = (0..n).map(|x| (0..n).map(|y| e.leq(x, y)).collect()).collect();
    let mut edges = Vec::new();
    for x in 0..n {
        let above: Vec<usize> = (0..n).filter(|&y| y != x && leq[x][y]).collect();
        for &y in &above {
            if !above.iter().any(|&z| z != y && leq[z][y]) {
                edges.push((x, y));
            }
        }
    }
    let chain4 = e.kind() == SpaceKind::Lambda && Some(e.base()) == named("chain:4").ok().as_ref();
    let nodes = e
        .carrier()
        .iter()
        .enumerate()
        .map(|(id, f)| HasseNode {
            id,
            label: label(e, f, chain4),
            family: f.index_lists(),
        })
        .collect();
    Ok(HasseDiagram {
        space: e.kind(),
        nodes,
        edges,
    })
}

impl HasseDiagram {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
        for node in &self.nodes {
            let _ = writeln!(out, "  n{} [label=\"{}\"];", node.id, node.label.replace('"', "\\\""));
        }
        for (a, b) in &self.edges {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data serializes")
    }

    pub fn label_of(&self, id: usize) -> &str {
        &self.nodes[id].label
    }

    /// Covering pairs by label.
    pub fn labeled_edges(&self) -> Vec<(String, String)> {
        self.edges
            .iter()
            .map(|&(a, b)| (self.nodes[a].label.clone(), self.nodes[b].label.clone()))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::extension::build_extension;

    fn diagram(carrier: &str, kind: SpaceKind) -> Result<HasseDiagram> {
        let e = build_extension(&named(carrier).unwrap(), kind, &Caps::default()).unwrap();
        hasse_diagram(&e)
    }

    #[test]
    fn lambda_three_is_a_chain() {
        let d = diagram("chain:3", SpaceKind::Lambda).unwrap();
        let mut edges = d.labeled_edges();
        edges.sort();
        assert_eq!(edges.len(), 3);
        assert!(edges.contains(&("⟨0⟩".into(), "⟨1⟩".into())));
        assert!(edges.contains(&("⟨1⟩".into(), "Δ".into())));
        assert!(edges.contains(&("Δ".into(), "⟨2⟩".into())));
    }

    #[test]
    fn lambda_four_labels() {
        let d = diagram("chain:4", SpaceKind::Lambda).unwrap();
        let edges = d.labeled_edges();
        for pair in [("⟨0⟩", "⟨1⟩"), ("⟨1⟩", "Δ_3"), ("Δ_3", "⟨2⟩"), ("□_3", "⟨3⟩")] {
            assert!(edges.contains(&(pair.0.into(), pair.1.into())), "{pair:?}");
        }
        assert!(d.to_dot().starts_with("digraph hasse {"));
        assert_eq!(d.to_json()["nodes"].as_array().unwrap().len(), 12);
    }

    #[test]
    fn refuses_non_semilattices() {
        assert_eq!(diagram("vee", SpaceKind::Upsilon), Err(Error::NotSemilattice));
    }
}

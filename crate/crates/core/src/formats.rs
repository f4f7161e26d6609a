//! JSON encodings of groups, homomorphisms and centralizer lattices, and
//! the DOT rendering of a lattice's Hasse diagram.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};
use thiserror::Error;

use crate::group::{Element, FiniteGroup, GroupError};
use crate::homs::{GroupHom, HomError};
use crate::lattice::CentralizerLattice;

#[derive(Error, Debug)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid document: {0}")]
    Invalid(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Hom(#[from] HomError),
}

/// `{"order": n, "table": [[...]], "generators": {"x": i, ...}?, "labels": [...]?}`
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct TableJson {
    pub order: usize,
    pub table: Vec<Vec<Element>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Map<String, Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl TableJson {
    pub fn from_group(g: &FiniteGroup) -> Self {
        let generators = g
            .generators()
            .iter()
            .map(|(l, e)| (l.clone(), Value::from(*e)))
            .collect();
        TableJson {
            order: g.order(),
            table: g.table(),
            generators: Some(generators),
            labels: g.labels().map(|l| l.to_vec()),
        }
    }

    pub fn into_group(self) -> Result<FiniteGroup, FormatError> {
        if self.order != self.table.len() {
            return Err(FormatError::Invalid(format!(
                "order is {} but the table has {} rows",
                self.order,
                self.table.len()
            )));
        }
        let hints = match self.generators {
            None => None,
            Some(map) => Some(
                map.into_iter()
                    .map(|(label, v)| match v.as_u64() {
                        Some(e) => Ok((label, e as Element)),
                        None => Err(FormatError::Invalid(format!(
                            "generator {label:?} must be an element index, got {v}"
                        ))),
                    })
                    .collect::<Result<Vec<_>, _>>()?,
            ),
        };
        let g = FiniteGroup::from_multiplication_table(self.table, hints)?;
        match self.labels {
            Some(labels) => Ok(g.with_labels(labels)?),
            None => Ok(g),
        }
    }
}

pub fn parse_table_json(text: &str) -> Result<FiniteGroup, FormatError> {
    serde_json::from_str::<TableJson>(text)?.into_group()
}

/// A group named either by a group expression or by an inline table.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
#[serde(untagged)]
pub enum GroupRef {
    Expr(String),
    Table(TableJson),
}

/// `{"source": <group ref>, "target": <group ref>, "map": [...]}`
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct HomJson {
    pub source: GroupRef,
    pub target: GroupRef,
    pub map: Vec<Element>,
}

impl HomJson {
    pub fn new(source: GroupRef, target: GroupRef, hom: &GroupHom) -> Self {
        HomJson {
            source,
            target,
            map: hom.map().to_vec(),
        }
    }

    /// Embeds both groups as tables.
    pub fn inline(hom: &GroupHom) -> Self {
        Self::new(
            GroupRef::Table(TableJson::from_group(hom.source())),
            GroupRef::Table(TableJson::from_group(hom.target())),
            hom,
        )
    }

    /// Resolves both group references and validates the map.
    pub fn resolve<F>(&self, mut resolve: F) -> Result<GroupHom, FormatError>
    where
        F: FnMut(&GroupRef) -> Result<FiniteGroup, FormatError>,
    {
        let source = resolve(&self.source)?;
        let target = resolve(&self.target)?;
        Ok(GroupHom::from_map(&source, &target, self.map.clone())?)
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct LatticeNodeJson {
    pub id: usize,
    pub order: usize,
    pub members: Vec<Element>,
}

/// `{"group_order": n, "nodes": [...], "leq": [[i,j]...], "involution": [...], "top": i, "bottom": j}`
///
/// `leq` lists every pair `[i, j]` with node `i` contained in node `j`,
/// reflexive pairs included, in ascending order.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct LatticeJson {
    pub group_order: usize,
    pub nodes: Vec<LatticeNodeJson>,
    pub leq: Vec<[usize; 2]>,
    pub involution: Vec<usize>,
    pub top: usize,
    pub bottom: usize,
}

impl LatticeJson {
    pub fn from_lattice(l: &CentralizerLattice) -> Self {
        let n = l.len();
        LatticeJson {
            group_order: l.group().order(),
            nodes: l
                .nodes()
                .iter()
                .enumerate()
                .map(|(id, s)| LatticeNodeJson {
                    id,
                    order: s.order(),
                    members: s.members(),
                })
                .collect(),
            leq: (0..n)
                .flat_map(|i| (0..n).map(move |j| [i, j]))
                .filter(|&[i, j]| l.leq(i, j))
                .collect(),
            involution: (0..n).map(|s| l.involution(s)).collect(),
            top: l.top(),
            bottom: l.bottom(),
        }
    }
}

pub fn to_json_pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable value")
}

/// Hasse diagram in DOT: cover edges drawn top-down, one `rank=same` group
/// per rank with the top at rank 0, and dashed undirected edges between
/// nodes swapped by the involution.
pub fn lattice_to_dot(l: &CentralizerLattice) -> String {
    let ranks = l.ranks();
    let mut out = String::new();
    out.push_str("graph centralizer_lattice {\n");
    out.push_str("  rankdir=TB;\n  node [shape=box];\n");
    for (id, s) in l.nodes().iter().enumerate() {
        let _ = writeln!(out, "  N{id} [label=\"N{id} (|·|={})\"];", s.order());
    }
    let max_rank = ranks.iter().copied().max().unwrap_or(0);
    for r in 0..=max_rank {
        let members: Vec<String> = (0..l.len())
            .filter(|&s| ranks[s] == r)
            .map(|s| format!("N{s};"))
            .collect();
        let _ = writeln!(out, "  {{ rank=same; {} }}", members.join(" "));
    }
    for (upper, lower) in l.covers() {
        let _ = writeln!(out, "  N{upper} -- N{lower};");
    }
    for s in 0..l.len() {
        let t = l.involution(s);
        if s < t {
            let _ = writeln!(out, "  N{s} -- N{t} [style=dashed, constraint=false];");
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_family, Family};

    #[test]
    fn table_json_rejects_unknown_fields() {
        let text = r#"{"order": 1, "table": [[0]], "extra": 3}"#;
        assert!(matches!(parse_table_json(text), Err(FormatError::Json(_))));
    }

    #[test]
    fn table_json_checks_order() {
        let text = r#"{"order": 2, "table": [[0]]}"#;
        assert!(matches!(
            parse_table_json(text),
            Err(FormatError::Invalid(_))
        ));
    }

    #[test]
    fn table_json_named_generators() {
        let text = r#"{"order": 4, "table": [[0,1,2,3],[1,2,3,0],[2,3,0,1],[3,0,1,2]],
                       "generators": {"t": 3}, "labels": ["e","a","b","c"]}"#;
        let g = parse_table_json(text).unwrap();
        assert_eq!(g.generator("t"), Some(3));
        assert_eq!(g.label(2), "b");
        let bad = r#"{"order": 1, "table": [[0]], "generators": {"t": "x"}}"#;
        assert!(matches!(
            parse_table_json(bad),
            Err(FormatError::Invalid(_))
        ));
    }

    #[test]
    fn table_json_round_trip() {
        let g = make_family(Family::Semidihedral, 16).unwrap();
        let text = to_json_pretty(&TableJson::from_group(&g));
        let back = parse_table_json(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.generators(), g.generators());
        assert_eq!(back.labels(), g.labels());
    }

    #[test]
    fn hom_json_inline_round_trip() {
        let g = make_family(Family::Dihedral, 8).unwrap();
        let id = GroupHom::identity(&g);
        let json = to_json_pretty(&HomJson::inline(&id));
        let parsed: HomJson = serde_json::from_str(&json).unwrap();
        let hom = parsed
            .resolve(|r| match r {
                GroupRef::Table(t) => t.clone().into_group(),
                GroupRef::Expr(_) => unreachable!(),
            })
            .unwrap();
        assert_eq!(hom, id);
    }

    #[test]
    fn q8_dot() {
        let l =
            CentralizerLattice::build(&make_family(Family::Quaternion, 8).unwrap(), 256).unwrap();
        let dot = lattice_to_dot(&l);
        assert_eq!(dot.matches("[label=").count(), 5);
        assert!(dot.contains("N4 [label=\"N4 (|·|=8)\"]"));
        assert!(dot.contains("N0 -- N4 [style=dashed, constraint=false];"));
        assert!(dot.contains("{ rank=same; N4; }"));
        assert_eq!(dot.matches(" -- ").count(), 6 + 1);
    }

    #[test]
    fn lattice_json_shape() {
        let l =
            CentralizerLattice::build(&make_family(Family::Quaternion, 8).unwrap(), 256).unwrap();
        let json = LatticeJson::from_lattice(&l);
        assert_eq!(json.nodes.len(), 5);
        assert_eq!(json.top, 4);
        assert_eq!(json.bottom, 0);
        assert!(json.leq.contains(&[0, 4]));
        assert!(!json.leq.contains(&[4, 0]));
        let text = serde_json::to_string(&json).unwrap();
        assert!(text.starts_with("{\"group_order\":8,\"nodes\":"));
    }
}

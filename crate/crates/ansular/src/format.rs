//! Canonical JSON for datasets and graphs.
//!
//! Keys are sorted and only integers appear, so a dataset written by
//! [`to_canonical`] parses back to the same value and re-serializes to the
//! same bytes.

use ansular_core::graph::{Graph, Mate};
use ansular_core::gv::{FusionDatum, GroupTable, PointedDatum};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Shape(String),
}

// Field order is the sorted key order; serde writes struct fields in
// declaration order.

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FusionJson {
    #[serde(rename = "N")]
    n: Vec<Vec<Vec<u32>>>,
    bar: Vec<usize>,
    kappa: usize,
    rank: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GroupJson {
    order: usize,
    table: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct QJson {
    exponents: Vec<u64>,
    root_order: u64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointedJson {
    b0: usize,
    group: GroupJson,
    q: QJson,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    edges: Vec<[usize; 2]>,
    legs: BTreeMap<String, [usize; 2]>,
    vertices: Vec<usize>,
}

/// A parsed dataset in either of its two forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Dataset {
    Fusion(FusionDatum),
    Pointed(PointedDatum),
}

impl Dataset {
    pub fn rank(&self) -> usize {
        match self {
            Dataset::Fusion(d) => d.rank(),
            Dataset::Pointed(p) => p.group().order(),
        }
    }
}

pub fn parse_dataset(text: &str) -> Result<Dataset, FormatError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("group").is_some() {
        let p: PointedJson = serde_json::from_value(value)?;
        if p.group.order != p.group.table.len() {
            return Err(FormatError::Shape(format!(
                "group order {} but table has {} rows",
                p.group.order,
                p.group.table.len()
            )));
        }
        let group = GroupTable::new(p.group.table)
            .map_err(|e| FormatError::Shape(format!("group table: {e}")))?;
        Ok(Dataset::Pointed(PointedDatum::new(
            group,
            p.q.root_order,
            p.q.exponents,
            p.b0,
        )))
    } else {
        let f: FusionJson = serde_json::from_value(value)?;
        if f.n.len() != f.rank {
            return Err(FormatError::Shape(format!(
                "rank {} but N has {} slices",
                f.rank,
                f.n.len()
            )));
        }
        Ok(Dataset::Fusion(FusionDatum::new(f.n, f.bar, f.kappa)))
    }
}

/// Compact JSON with sorted keys and a trailing newline.
pub fn to_canonical(d: &Dataset) -> String {
    let mut s = match d {
        Dataset::Fusion(f) => serde_json::to_string(&FusionJson {
            n: f.tensor().to_vec(),
            bar: f.bars().to_vec(),
            kappa: f.kappa(),
            rank: f.rank(),
        }),
        Dataset::Pointed(p) => serde_json::to_string(&PointedJson {
            b0: p.b0(),
            group: GroupJson {
                order: p.group().order(),
                table: p.group().table().to_vec(),
            },
            q: QJson {
                exponents: p.exponents().to_vec(),
                root_order: p.root_order(),
            },
        }),
    }
    .expect("datasets serialize");
    s.push('\n');
    s
}

/// Reads the graph form `{edges, legs, vertices}`: `vertices` lists
/// valences, half-edges are numbered vertex by vertex, `legs` maps a label to
/// `[vertex, slot]`.
pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let g: GraphJson = serde_json::from_str(text)?;
    let mut offsets = Vec::with_capacity(g.vertices.len());
    let mut total = 0;
    for &v in &g.vertices {
        offsets.push(total);
        total += v;
    }
    let slot = |h: usize| -> Result<(usize, usize), FormatError> {
        if h >= total {
            return Err(FormatError::Shape(format!("half-edge {h} out of range")));
        }
        let v = offsets.partition_point(|&o| o <= h) - 1;
        Ok((v, h - offsets[v]))
    };
    let edges = g
        .edges
        .iter()
        .map(|&[a, b]| Ok((slot(a)?, slot(b)?)))
        .collect::<Result<Vec<_>, FormatError>>()?;
    let legs = g
        .legs
        .iter()
        .map(|(label, &[v, s])| {
            let l = label
                .parse::<u32>()
                .map_err(|_| FormatError::Shape(format!("leg label {label:?} is not a number")))?;
            Ok((l, (v, s)))
        })
        .collect::<Result<Vec<_>, FormatError>>()?;
    Graph::from_slots(g.vertices, &edges, &legs).map_err(|e| FormatError::Shape(e.to_string()))
}

pub fn graph_to_json(g: &Graph) -> serde_json::Value {
    let mut legs = BTreeMap::new();
    let mut edges = Vec::new();
    for (h, m) in g.mates().iter().enumerate() {
        match *m {
            Mate::Edge(k) if h < k => edges.push([h, k]),
            Mate::Edge(_) => {}
            Mate::Leg(l) => {
                let (v, s) = g.slot_of(h);
                legs.insert(l.to_string(), [v, s]);
            }
        }
    }
    serde_json::to_value(GraphJson {
        edges,
        legs,
        vertices: g.arities().to_vec(),
    })
    .expect("graphs serialize")
}

pub fn graph_to_canonical(g: &Graph) -> String {
    let mut s = graph_to_json(g).to_string();
    s.push('\n');
    s
}

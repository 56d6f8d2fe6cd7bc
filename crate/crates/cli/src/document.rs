//! The JSON graph document.
//!
//! ```json
//! {"dimension": 3,
//!  "vertices": ["000", "001", ...],
//!  "edges": [["000", "001"], ...],
//!  "arcs": [["000", "100"], ...],
//!  "twisted_edges": [],
//!  "bridge_arc": ["0110", "0111"],
//!  "set": ["000", "010"]}
//! ```
//!
//! With a dimension every vertex is a bit string of that length (leftmost
//! character first) and its id is the string's binary value. Without one
//! (`"dimension": null`) labels are arbitrary and ids follow list order.
//! `arcs`, `bridge_arc` and `set` are optional.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use twistcube_core::graph::bit_label;
use twistcube_core::minority::MinorityCube;
use twistcube_core::{ArcEdge, ArcSet, BitVertex, CubeGraph, Graph};

use crate::error::FormatError;

#[derive(Serialize, Deserialize)]
struct RawDocument {
    dimension: Option<u32>,
    vertices: Vec<String>,
    edges: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    arcs: Option<Vec<[String; 2]>>,
    #[serde(default)]
    twisted_edges: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bridge_arc: Option<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    set: Option<Vec<String>>,
}

/// A graph with labels and the optional payloads carried by the document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDocument {
    pub dimension: Option<u32>,
    /// Label of every vertex, indexed by id.
    pub labels: Vec<String>,
    pub graph: Graph,
    pub arcs: Option<ArcSet>,
    /// Normalised to `u < v`, sorted.
    pub twisted_edges: Vec<(usize, usize)>,
    pub bridge_arc: Option<ArcEdge>,
    /// Sorted, without repeats.
    pub set: Option<Vec<usize>>,
}

impl GraphDocument {
    pub fn cube(cube: &CubeGraph) -> Self {
        let n = cube.dimension();
        GraphDocument {
            dimension: Some(n),
            labels: (0..cube.graph().order()).map(|v| bit_label(v, n)).collect(),
            graph: cube.graph().clone(),
            arcs: None,
            twisted_edges: cube.twisted_edges(),
            bridge_arc: None,
            set: None,
        }
    }

    /// A general graph labelled by decimal ids.
    pub fn general(graph: &Graph) -> Self {
        GraphDocument {
            dimension: None,
            labels: (0..graph.order()).map(|v| v.to_string()).collect(),
            graph: graph.clone(),
            arcs: None,
            twisted_edges: Vec::new(),
            bridge_arc: None,
            set: None,
        }
    }

    pub fn minority(m: &MinorityCube) -> Self {
        GraphDocument {
            arcs: Some(m.arcs.clone()),
            bridge_arc: m.bridge_arc,
            ..Self::cube(&m.cube)
        }
    }

    pub fn with_arcs(mut self, arcs: ArcSet) -> Self {
        self.arcs = Some(arcs);
        self
    }

    pub fn with_set(mut self, mut set: Vec<usize>) -> Self {
        set.sort_unstable();
        set.dedup();
        self.set = Some(set);
        self
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels_of(&self, vs: &[usize]) -> Vec<String> {
        vs.iter().map(|&v| self.labels[v].clone()).collect()
    }

    /// The graph as a cube, when the document has a dimension.
    pub fn cube_graph(&self) -> Option<CubeGraph> {
        self.dimension
            .and_then(|n| CubeGraph::from_graph(n, self.graph.clone()).ok())
    }

    /// Id of a label.
    pub fn vertex(&self, label: &str) -> Option<usize> {
        match self.dimension {
            Some(n) => BitVertex::parse(label)
                .ok()
                .filter(|b| b.len() == n)
                .map(BitVertex::id),
            None => self.labels.iter().position(|l| l == label),
        }
    }

    pub fn to_json(&self) -> String {
        let pair = |u: usize, v: usize| [self.labels[u].clone(), self.labels[v].clone()];
        let raw = RawDocument {
            dimension: self.dimension,
            vertices: self.labels.clone(),
            edges: self.graph.edges().map(|(u, v)| pair(u, v)).collect(),
            arcs: self
                .arcs
                .as_ref()
                .map(|f| f.iter().map(|a| pair(a.tail, a.head)).collect()),
            twisted_edges: self
                .twisted_edges
                .iter()
                .map(|&(u, v)| pair(u, v))
                .collect(),
            bridge_arc: self.bridge_arc.map(|a| pair(a.tail, a.head)),
            set: self.set.as_ref().map(|s| self.labels_of(s)),
        };
        let mut out = serde_json::to_string_pretty(&raw).expect("documents serialise");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self, FormatError> {
        let raw: RawDocument = serde_json::from_str(text)?;
        let order = raw.vertices.len();
        let mut ids: HashMap<&str, usize> = HashMap::with_capacity(order);
        let mut labels = vec![String::new(); order];
        match raw.dimension {
            Some(n) => {
                if n > twistcube_core::graph::MAX_DIMENSION {
                    return Err(FormatError::at(
                        "dimension",
                        format!("{n} exceeds the limit"),
                    ));
                }
                if order != 1 << n {
                    return Err(FormatError::at(
                        "vertices",
                        format!(
                            "dimension {n} needs {} vertices, found {order}",
                            1usize << n
                        ),
                    ));
                }
                for (i, label) in raw.vertices.iter().enumerate() {
                    let b = BitVertex::parse(label)
                        .ok()
                        .filter(|b| b.len() == n)
                        .ok_or_else(|| {
                            FormatError::at(
                                format!("vertices[{i}]"),
                                format!("{label:?} is not a {n}-bit string"),
                            )
                        })?;
                    if ids.insert(label, b.id()).is_some() {
                        return Err(FormatError::at(
                            format!("vertices[{i}]"),
                            format!("{label:?} repeats"),
                        ));
                    }
                    labels[b.id()] = label.clone();
                }
            }
            None => {
                for (i, label) in raw.vertices.iter().enumerate() {
                    if ids.insert(label, i).is_some() {
                        return Err(FormatError::at(
                            format!("vertices[{i}]"),
                            format!("{label:?} repeats"),
                        ));
                    }
                    labels[i] = label.clone();
                }
            }
        }
        let lookup = |path: String, label: &str| {
            ids.get(label)
                .copied()
                .ok_or_else(|| FormatError::at(path, format!("unknown vertex {label:?}")))
        };
        let pairs = |key: &str, list: &[[String; 2]]| -> Result<Vec<(usize, usize)>, FormatError> {
            list.iter()
                .enumerate()
                .map(|(i, [a, b])| {
                    Ok((
                        lookup(format!("{key}[{i}][0]"), a)?,
                        lookup(format!("{key}[{i}][1]"), b)?,
                    ))
                })
                .collect()
        };
        let edges = pairs("edges", &raw.edges)?;
        let graph =
            Graph::from_edges(order, edges).map_err(|e| FormatError::at("edges", e.to_string()))?;
        let arcs = raw
            .arcs
            .as_deref()
            .map(|list| pairs("arcs", list))
            .transpose()?
            .map(|ps| {
                ps.into_iter()
                    .map(|(t, h)| ArcEdge::new(t, h))
                    .collect::<ArcSet>()
            });
        let mut twisted_edges = pairs("twisted_edges", &raw.twisted_edges)?;
        for (i, e) in twisted_edges.iter_mut().enumerate() {
            if !graph.has_edge(e.0, e.1) {
                return Err(FormatError::at(
                    format!("twisted_edges[{i}]"),
                    "not an edge",
                ));
            }
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        twisted_edges.sort_unstable();
        twisted_edges.dedup();
        let bridge_arc = raw
            .bridge_arc
            .map(|[a, b]| -> Result<ArcEdge, FormatError> {
                Ok(ArcEdge::new(
                    lookup("bridge_arc[0]".into(), &a)?,
                    lookup("bridge_arc[1]".into(), &b)?,
                ))
            })
            .transpose()?;
        let set = raw
            .set
            .map(|labels| {
                labels
                    .iter()
                    .enumerate()
                    .map(|(i, l)| lookup(format!("set[{i}]"), l))
                    .collect::<Result<Vec<usize>, _>>()
            })
            .transpose()?
            .map(|mut s| {
                s.sort_unstable();
                s.dedup();
                s
            });
        Ok(GraphDocument {
            dimension: raw.dimension,
            labels,
            graph,
            arcs,
            twisted_edges,
            bridge_arc,
            set,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use twistcube_core::minority::build_recursive;

    #[test]
    fn cube_round_trip() {
        let q3 = GraphDocument::cube(&CubeGraph::hypercube(3).unwrap());
        let text = q3.to_json();
        assert!(text.contains("\"dimension\": 3"));
        assert!(!text.contains("\"arcs\""));
        assert_eq!(GraphDocument::from_json(&text).unwrap(), q3);
    }

    #[test]
    fn minority_round_trip() {
        let m = GraphDocument::minority(&build_recursive(4).unwrap());
        let back = GraphDocument::from_json(&m.to_json()).unwrap();
        assert_eq!(back.arcs.as_ref().unwrap().len(), 9);
        assert_eq!(back.twisted_edges.len(), 2);
        assert_eq!(back, m);
    }

    #[test]
    fn truncated_json_is_rejected() {
        let text = GraphDocument::cube(&CubeGraph::hypercube(2).unwrap()).to_json();
        let cut = &text[..text.len() / 2];
        match GraphDocument::from_json(cut) {
            Err(FormatError::Json(e)) => assert!(e.line() > 0),
            other => panic!("expected a JSON error, got {other:?}"),
        }
    }

    #[test]
    fn semantic_errors_name_the_location() {
        let bad = r#"{"dimension": 2, "vertices": ["00","01","10","11"], "edges": [["00","01"],["00","12"]]}"#;
        let err = GraphDocument::from_json(bad).unwrap_err().to_string();
        assert!(err.starts_with("edges[1][1]"), "{err}");
        let short = r#"{"dimension": 2, "vertices": ["00","01","10"], "edges": []}"#;
        assert!(GraphDocument::from_json(short)
            .unwrap_err()
            .to_string()
            .starts_with("vertices"));
        let looped = r#"{"dimension": null, "vertices": ["a","b"], "edges": [["a","a"]]}"#;
        assert!(GraphDocument::from_json(looped).is_err());
    }

    #[test]
    fn general_graph_labels() {
        let text = r#"{"dimension": null, "vertices": ["x","y","z"], "edges": [["x","y"],["y","z"]], "set": ["x"]}"#;
        let d = GraphDocument::from_json(text).unwrap();
        assert_eq!(d.graph, Graph::path(3));
        assert_eq!(d.set, Some(vec![0]));
        assert_eq!(d.vertex("z"), Some(2));
        assert_eq!(GraphDocument::from_json(&d.to_json()).unwrap(), d);
    }
}

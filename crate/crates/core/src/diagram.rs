//! Coxeter diagrams: weighted graphs with finite-order, infinite and dotted
//! edges, plus the line-oriented diagram file format.
//!
//! Edge conventions follow the usual diagram encoding of a Gram matrix: an
//! absent edge means dihedral angle pi/2, an order-m edge means angle pi/m,
//! an infinite edge means parallel hyperplanes and a dotted edge carries
//! cosh of the distance between ultraparallel hyperplanes.

use std::collections::BTreeMap;
use std::fmt;

use crate::exact::{RadicalNumber, Sign};

/// Hard cap on diagram size; `n+3 <= 19` covers every dimension this family
/// can inhabit, with headroom.
pub const MAX_NODES: usize = 20;

/// Label of one edge. Order 2 (a right angle) is represented by edge absence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum EdgeLabel {
    /// Dihedral angle pi/m, m >= 3.
    Order(u32),
    /// Parallel hyperplanes (Gram entry -1).
    Infinity,
    /// Ultraparallel hyperplanes at distance rho; the weight is cosh(rho) > 1.
    Dotted(RadicalNumber),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: dotted weight must exceed 1 (cosh of a positive distance)")]
    InvalidWeight { line: usize },
    #[error("line {line}: duplicate edge {i}-{j}")]
    DuplicateEdge { line: usize, i: usize, j: usize },
    #[error("unknown node {0}")]
    UnknownNode(usize),
    #[error("edge order m={0} is out of range (m >= 3, or use 'inf')")]
    BadOrder(u32),
    #[error("self-loop on node {0}")]
    SelfLoop(usize),
    #[error("node count {0} exceeds the supported maximum {MAX_NODES}")]
    TooManyNodes(usize),
}

/// A Coxeter diagram on nodes `0..node_count`. Node tags are free-form
/// metadata (the catalog uses them to record Gale-diagram positions); they
/// never influence canonical forms or verification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterDiagram {
    node_count: usize,
    tags: Vec<Option<String>>,
    edges: BTreeMap<(usize, usize), EdgeLabel>,
}

impl CoxeterDiagram {
    pub fn new(node_count: usize) -> Result<Self, DiagramError> {
        if node_count > MAX_NODES {
            return Err(DiagramError::TooManyNodes(node_count));
        }
        Ok(CoxeterDiagram {
            node_count,
            tags: vec![None; node_count],
            edges: BTreeMap::new(),
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn tag(&self, node: usize) -> Option<&str> {
        self.tags.get(node).and_then(|t| t.as_deref())
    }

    pub fn set_tag(&mut self, node: usize, tag: impl Into<String>) -> Result<(), DiagramError> {
        if node >= self.node_count {
            return Err(DiagramError::UnknownNode(node));
        }
        self.tags[node] = Some(tag.into());
        Ok(())
    }

    fn key(i: usize, j: usize) -> (usize, usize) {
        (i.min(j), i.max(j))
    }

    /// Inserts an edge; rejects self-loops, duplicate pairs, orders < 3 and
    /// dotted weights <= 1.
    pub fn add_edge(&mut self, i: usize, j: usize, label: EdgeLabel) -> Result<(), DiagramError> {
        if i >= self.node_count {
            return Err(DiagramError::UnknownNode(i));
        }
        if j >= self.node_count {
            return Err(DiagramError::UnknownNode(j));
        }
        if i == j {
            return Err(DiagramError::SelfLoop(i));
        }
        match &label {
            EdgeLabel::Order(m) if *m < 3 => return Err(DiagramError::BadOrder(*m)),
            EdgeLabel::Dotted(w) => {
                let above_one = w - &RadicalNumber::one();
                if above_one.sign().sign != Sign::Positive {
                    return Err(DiagramError::InvalidWeight { line: 0 });
                }
            }
            _ => {}
        }
        let key = Self::key(i, j);
        if self.edges.contains_key(&key) {
            return Err(DiagramError::DuplicateEdge {
                line: 0,
                i: key.0,
                j: key.1,
            });
        }
        self.edges.insert(key, label);
        Ok(())
    }

    pub fn edge(&self, i: usize, j: usize) -> Option<&EdgeLabel> {
        self.edges.get(&Self::key(i, j))
    }

    /// Edges as `(i, j, label)` with `i < j`, in key order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &EdgeLabel)> {
        self.edges.iter().map(|(&(i, j), l)| (i, j, l))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_dotted_edges(&self) -> bool {
        self.edges
            .values()
            .any(|l| matches!(l, EdgeLabel::Dotted(_)))
    }

    pub fn dotted_edges(&self) -> Vec<(usize, usize, &RadicalNumber)> {
        self.edges
            .iter()
            .filter_map(|(&(i, j), l)| match l {
                EdgeLabel::Dotted(w) => Some((i, j, w)),
                _ => None,
            })
            .collect()
    }

    /// Induced subdiagram on the given nodes (relabelled 0..len in the given
    /// order); labels and tags are preserved.
    pub fn subdiagram(&self, nodes: &[usize]) -> Result<CoxeterDiagram, DiagramError> {
        let mut sub = CoxeterDiagram::new(nodes.len())?;
        let mut back = vec![usize::MAX; self.node_count];
        for (new, &old) in nodes.iter().enumerate() {
            if old >= self.node_count {
                return Err(DiagramError::UnknownNode(old));
            }
            back[old] = new;
            if let Some(t) = &self.tags[old] {
                sub.tags[new] = Some(t.clone());
            }
        }
        for (&(i, j), label) in &self.edges {
            let (a, b) = (back[i], back[j]);
            if a != usize::MAX && b != usize::MAX {
                sub.edges.insert(Self::key(a, b), label.clone());
            }
        }
        Ok(sub)
    }

    /// Partition of the nodes into maximal connected sets. Dotted and
    /// infinite edges count as edges.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.node_count];
        for &(i, j) in self.edges.keys() {
            adj[i].push(j);
            adj[j].push(i);
        }
        let mut seen = vec![false; self.node_count];
        let mut comps = Vec::new();
        for start in 0..self.node_count {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &v in &adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.node_count <= 1 || self.connected_components().len() == 1
    }

    /// Isomorphism-invariant key; tags are ignored. See [`crate::canon`].
    pub fn canonical_key(&self) -> String {
        crate::canon::canonical_key(self)
    }
}

/// A parsed diagram file: the declared dimension plus the diagram itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramFile {
    pub dim: usize,
    pub diagram: CoxeterDiagram,
}

impl DiagramFile {
    /// Parses the line-oriented diagram format:
    ///
    /// ```text
    /// # comment
    /// dim <n>
    /// nodes <p>
    /// tag <node> <string>
    /// edge <i> <j> m=<int> | inf | dotted <expr>
    /// ```
    pub fn parse(text: &str) -> Result<DiagramFile, DiagramError> {
        let mut dim: Option<usize> = None;
        let mut diagram: Option<CoxeterDiagram> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            let mut words = line.split_whitespace();
            let head = words.next().unwrap();
            let syntax = |message: &str| DiagramError::Syntax {
                line: line_no,
                message: message.to_string(),
            };
            match head {
                "dim" => {
                    let n: usize = words
                        .next()
                        .and_then(|w| w.parse().ok())
                        .ok_or_else(|| syntax("expected 'dim <n>'"))?;
                    dim = Some(n);
                }
                "nodes" => {
                    let p: usize = words
                        .next()
                        .and_then(|w| w.parse().ok())
                        .ok_or_else(|| syntax("expected 'nodes <p>'"))?;
                    diagram = Some(CoxeterDiagram::new(p).map_err(|e| DiagramError::Syntax {
                        line: line_no,
                        message: e.to_string(),
                    })?);
                }
                "tag" => {
                    let d = diagram
                        .as_mut()
                        .ok_or_else(|| syntax("'tag' before 'nodes'"))?;
                    let node: usize = words
                        .next()
                        .and_then(|w| w.parse().ok())
                        .ok_or_else(|| syntax("expected 'tag <node> <string>'"))?;
                    let tag = words.next().ok_or_else(|| syntax("missing tag string"))?;
                    d.set_tag(node, tag).map_err(|e| DiagramError::Syntax {
                        line: line_no,
                        message: e.to_string(),
                    })?;
                }
                "edge" => {
                    let d = diagram
                        .as_mut()
                        .ok_or_else(|| syntax("'edge' before 'nodes'"))?;
                    let i: usize = words
                        .next()
                        .and_then(|w| w.parse().ok())
                        .ok_or_else(|| syntax("expected 'edge <i> <j> ...'"))?;
                    let j: usize = words
                        .next()
                        .and_then(|w| w.parse().ok())
                        .ok_or_else(|| syntax("expected 'edge <i> <j> ...'"))?;
                    let kind = words.next().ok_or_else(|| syntax("missing edge label"))?;
                    let label = if kind == "inf" {
                        EdgeLabel::Infinity
                    } else if let Some(mtext) = kind.strip_prefix("m=") {
                        let m: u32 = mtext
                            .parse()
                            .map_err(|_| syntax("expected integer after 'm='"))?;
                        EdgeLabel::Order(m)
                    } else if kind == "dotted" {
                        let rest: String = words.collect::<Vec<_>>().join(" ");
                        if rest.is_empty() {
                            return Err(syntax("dotted edge needs a weight expression"));
                        }
                        let w: RadicalNumber = rest.parse().map_err(
                            |e: crate::exact::ExprParseError| DiagramError::Syntax {
                                line: line_no,
                                message: e.to_string(),
                            },
                        )?;
                        EdgeLabel::Dotted(w)
                    } else {
                        return Err(syntax("edge label must be 'm=<int>', 'inf' or 'dotted <expr>'"));
                    };
                    d.add_edge(i, j, label).map_err(|e| match e {
                        DiagramError::InvalidWeight { .. } => {
                            DiagramError::InvalidWeight { line: line_no }
                        }
                        DiagramError::DuplicateEdge { i, j, .. } => {
                            DiagramError::DuplicateEdge { line: line_no, i, j }
                        }
                        other => DiagramError::Syntax {
                            line: line_no,
                            message: other.to_string(),
                        },
                    })?;
                }
                other => {
                    return Err(syntax(&format!("unknown directive '{other}'")));
                }
            }
        }
        let dim = dim.ok_or(DiagramError::Syntax {
            line: 0,
            message: "missing 'dim <n>' line".into(),
        })?;
        let diagram = diagram.ok_or(DiagramError::Syntax {
            line: 0,
            message: "missing 'nodes <p>' line".into(),
        })?;
        Ok(DiagramFile { dim, diagram })
    }
}

impl fmt::Display for DiagramFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dim {}", self.dim)?;
        writeln!(f, "nodes {}", self.diagram.node_count())?;
        for node in 0..self.diagram.node_count() {
            if let Some(tag) = self.diagram.tag(node) {
                writeln!(f, "tag {node} {tag}")?;
            }
        }
        for (i, j, label) in self.diagram.edges() {
            match label {
                EdgeLabel::Order(m) => writeln!(f, "edge {i} {j} m={m}")?,
                EdgeLabel::Infinity => writeln!(f, "edge {i} {j} inf")?,
                EdgeLabel::Dotted(w) => writeln!(f, "edge {i} {j} dotted {w}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> DiagramFile {
        DiagramFile::parse(text).unwrap()
    }

    #[test]
    fn parses_minimal_path() {
        let f = parse("dim 1\nnodes 2\nedge 0 1 m=3\n");
        assert_eq!(f.diagram.node_count(), 2);
        assert_eq!(f.diagram.edge(1, 0), Some(&EdgeLabel::Order(3)));
    }

    #[test]
    fn parses_dotted_weight() {
        let f = parse("dim 1\nnodes 2\nedge 0 1 dotted sqrt(3)\n");
        match f.diagram.edge(0, 1).unwrap() {
            EdgeLabel::Dotted(w) => assert_eq!(w.to_string(), "sqrt(3)"),
            other => panic!("unexpected label {other:?}"),
        }
    }

    #[test]
    fn rejects_weight_at_most_one() {
        let err = DiagramFile::parse("dim 1\nnodes 2\nedge 0 1 dotted 1/2\n").unwrap_err();
        assert!(matches!(err, DiagramError::InvalidWeight { line: 3 }));
        let err = DiagramFile::parse("dim 1\nnodes 2\nedge 0 1 dotted 1\n").unwrap_err();
        assert!(matches!(err, DiagramError::InvalidWeight { .. }));
    }

    #[test]
    fn rejects_duplicate_edges_and_bad_syntax() {
        let err =
            DiagramFile::parse("dim 1\nnodes 2\nedge 0 1 m=3\nedge 1 0 m=4\n").unwrap_err();
        assert!(matches!(err, DiagramError::DuplicateEdge { line: 4, i: 0, j: 1 }));
        assert!(DiagramFile::parse("nodes 2\n").is_err());
        assert!(DiagramFile::parse("dim 1\nnodes 2\nedge 0 1 m=x\n").is_err());
        assert!(DiagramFile::parse("dim 1\nnodes 2\nedge 0 5 m=3\n").is_err());
    }

    #[test]
    fn print_parse_roundtrip() {
        let text = "dim 4\nnodes 3\ntag 0 9\ntag 2 3,1\nedge 0 1 inf\nedge 1 2 dotted 1/2+1/3sqrt(15)\n";
        let f = parse(text);
        let printed = f.to_string();
        let again = parse(&printed);
        assert_eq!(f, again);
        assert_eq!(printed, text);
    }

    #[test]
    fn subdiagram_preserves_labels_and_tags() {
        let f = parse("dim 4\nnodes 4\ntag 3 7\nedge 0 1 m=5\nedge 1 2 inf\nedge 2 3 m=4\n");
        let sub = f.diagram.subdiagram(&[1, 2, 3]).unwrap();
        assert_eq!(sub.node_count(), 3);
        assert_eq!(sub.edge(0, 1), Some(&EdgeLabel::Infinity));
        assert_eq!(sub.edge(1, 2), Some(&EdgeLabel::Order(4)));
        assert_eq!(sub.edge(0, 2), None);
        assert_eq!(sub.tag(2), Some("7"));

        let all: Vec<usize> = (0..4).collect();
        assert_eq!(f.diagram.subdiagram(&all).unwrap(), f.diagram);
        let empty = f.diagram.subdiagram(&[]).unwrap();
        assert_eq!(empty.node_count(), 0);
        assert!(f.diagram.subdiagram(&[9]).is_err());
    }

    #[test]
    fn connected_components_split() {
        let f = parse("dim 1\nnodes 4\nedge 0 2 m=5\n");
        let comps = f.diagram.connected_components();
        assert_eq!(comps, vec![vec![0, 2], vec![1], vec![3]]);
        assert!(!f.diagram.is_connected());
        let single = parse("dim 1\nnodes 2\nedge 0 1 m=5\n");
        assert_eq!(single.diagram.connected_components().len(), 1);
    }
}

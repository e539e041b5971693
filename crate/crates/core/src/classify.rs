//! Signature-based classification of Coxeter diagrams without dotted edges.
//!
//! The classes are defined purely through Gram-matrix inertia, in this
//! order (each case excludes the previous ones):
//!
//! * `Elliptic` — positive definite (finite reflection group);
//! * `Parabolic` — positive semidefinite, not definite, every connected
//!   component singular with a one-dimensional kernel (affine components);
//! * `Lanner` — connected, inertia `(size-1, 1, 0)`, every proper
//!   subdiagram elliptic;
//! * `QuasiLanner` — connected, inertia `(size-1, 1, 0)`, every proper
//!   subdiagram elliptic or parabolic, not Lanner;
//! * `Other` — anything else.
//!
//! No external tables are consulted; enumeration by class is done by
//! growing diagrams node by node and classifying each candidate.

use std::collections::BTreeSet;
use std::fmt;

use crate::diagram::{CoxeterDiagram, EdgeLabel};
use crate::exact::UnsupportedOrder;
use crate::gram::{GramMatrix, InertiaTriple};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum DiagramClass {
    Elliptic,
    Parabolic,
    Lanner,
    QuasiLanner,
    Other,
}

impl fmt::Display for DiagramClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            DiagramClass::Elliptic => "elliptic",
            DiagramClass::Parabolic => "parabolic",
            DiagramClass::Lanner => "lanner",
            DiagramClass::QuasiLanner => "quasi-lanner",
            DiagramClass::Other => "other",
        };
        write!(f, "{name}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("classification applies to angle-only diagrams; a dotted edge is present")]
    DottedEdgePresent,
    #[error(transparent)]
    UnsupportedOrder(#[from] UnsupportedOrder),
}

/// Classifies a diagram together with its witness inertia.
pub fn classify_with_inertia(
    d: &CoxeterDiagram,
) -> Result<(DiagramClass, InertiaTriple), ClassifyError> {
    if d.has_dotted_edges() {
        return Err(ClassifyError::DottedEdgePresent);
    }
    let gram = GramMatrix::from_diagram(d).map_err(|e| match e {
        crate::gram::GramError::UnsupportedOrder(u) => ClassifyError::UnsupportedOrder(u),
        other => unreachable!("diagram-built Gram cannot fail otherwise: {other}"),
    })?;
    let inertia = gram.inertia();
    Ok((classify_inner(d, inertia)?, inertia))
}

pub fn classify(d: &CoxeterDiagram) -> Result<DiagramClass, ClassifyError> {
    classify_with_inertia(d).map(|(c, _)| c)
}

fn classify_inner(d: &CoxeterDiagram, inertia: InertiaTriple) -> Result<DiagramClass, ClassifyError> {
    let size = d.node_count();
    if inertia.negative == 0 && inertia.zero == 0 {
        return Ok(DiagramClass::Elliptic);
    }
    if inertia.negative == 0 {
        return Ok(if is_parabolic_shape(d)? {
            DiagramClass::Parabolic
        } else {
            DiagramClass::Other
        });
    }
    let hyperbolic = inertia
        == InertiaTriple {
            positive: size - 1,
            negative: 1,
            zero: 0,
        };
    if !hyperbolic || !d.is_connected() {
        return Ok(DiagramClass::Other);
    }
    // For connected diagrams of signature (size-1, 1), the class is decided
    // by the maximal proper subdiagrams: heredity covers everything below
    // them (subdiagrams of definite diagrams are definite, and proper
    // subdiagrams of connected degenerate semidefinite diagrams are
    // definite). A disconnected semidefinite maximal subdiagram always has a
    // deeper mixed subdiagram, so it must itself be rejected here.
    let mut all_elliptic = true;
    for drop in 0..size {
        let keep: Vec<usize> = (0..size).filter(|&v| v != drop).collect();
        let sub = d.subdiagram(&keep).expect("nodes in range");
        let sub_inertia = GramMatrix::from_diagram(&sub)
            .expect("labels already validated")
            .inertia();
        if sub_inertia.negative > 0 {
            return Ok(DiagramClass::Other);
        }
        if sub_inertia.zero == 0 {
            continue; // elliptic
        }
        all_elliptic = false;
        if !(sub.is_connected() && is_parabolic_shape(&sub)?) {
            return Ok(DiagramClass::Other);
        }
    }
    Ok(if all_elliptic {
        DiagramClass::Lanner
    } else {
        DiagramClass::QuasiLanner
    })
}

/// Positive semidefinite with every connected component carrying exactly one
/// zero direction (all components affine).
fn is_parabolic_shape(d: &CoxeterDiagram) -> Result<bool, ClassifyError> {
    for comp in d.connected_components() {
        let sub = d.subdiagram(&comp).expect("component nodes in range");
        let it = GramMatrix::from_diagram(&sub)
            .map_err(|e| match e {
                crate::gram::GramError::UnsupportedOrder(u) => ClassifyError::UnsupportedOrder(u),
                other => unreachable!("{other}"),
            })?
            .inertia();
        if it.negative != 0 || it.zero != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All connected diagrams of the class on up to `max_nodes` nodes with edge
/// labels drawn from {3,4,5,6,inf}, up to isomorphism.
///
/// The hereditary classes are enumerated by growth: every connected
/// elliptic, parabolic, Lanner or quasi-Lanner diagram on k+1 nodes loses a
/// non-cut node to a connected elliptic or parabolic diagram on k nodes, so
/// extending those parents by one node reaches everything. `Other` falls
/// back to exhaustive generation and is only practical for small sizes.
pub fn enumerate_connected(class: DiagramClass, max_nodes: usize) -> Vec<CoxeterDiagram> {
    assert!(max_nodes <= 10, "enumeration is capped at 10 nodes");
    if class == DiagramClass::Other {
        return enumerate_other(max_nodes);
    }
    let mut result: Vec<CoxeterDiagram> = Vec::new();
    let mut result_keys = BTreeSet::new();
    // parents for the next size: connected elliptic/parabolic diagrams
    let mut frontier: Vec<CoxeterDiagram> = Vec::new();

    let single = CoxeterDiagram::new(1).expect("1 <= MAX_NODES");
    if max_nodes >= 1 {
        if class == DiagramClass::Elliptic {
            result_keys.insert(single.canonical_key());
            result.push(single.clone());
        }
        frontier.push(single);
    }

    for size in 2..=max_nodes {
        let mut next_frontier: Vec<CoxeterDiagram> = Vec::new();
        let mut seen = BTreeSet::new();
        for parent in &frontier {
            extend_parent(parent, class, &mut |child| {
                let key = child.canonical_key();
                if !seen.insert(key.clone()) {
                    return;
                }
                let (cls, _) = classify_with_inertia(&child).expect("angle labels only");
                if cls == class && result_keys.insert(key) {
                    result.push(child.clone());
                }
                if matches!(cls, DiagramClass::Elliptic | DiagramClass::Parabolic)
                    && size < max_nodes
                {
                    next_frontier.push(child);
                }
            });
        }
        frontier = next_frontier;
    }
    result
}

const EDGE_CHOICES: [Option<EdgeLabel>; 6] = [
    None,
    Some(EdgeLabel::Order(3)),
    Some(EdgeLabel::Order(4)),
    Some(EdgeLabel::Order(5)),
    Some(EdgeLabel::Order(6)),
    Some(EdgeLabel::Infinity),
];

/// Attaches one new node to `parent` in every way compatible with the
/// target class, pruning partial attachments whose induced subdiagram
/// already violates heredity.
fn extend_parent(
    parent: &CoxeterDiagram,
    class: DiagramClass,
    emit: &mut dyn FnMut(CoxeterDiagram),
) {
    let k = parent.node_count();
    let new = k;
    let mut child = parent_plus_node(parent);
    attach(&mut child, new, 0, false, class, emit);
}

fn parent_plus_node(parent: &CoxeterDiagram) -> CoxeterDiagram {
    let k = parent.node_count();
    let mut d = CoxeterDiagram::new(k + 1).expect("within MAX_NODES");
    for (i, j, l) in parent.edges() {
        d.add_edge(i, j, l.clone()).expect("copy of valid edge");
    }
    d
}

fn attach(
    child: &mut CoxeterDiagram,
    new: usize,
    next: usize,
    any_edge: bool,
    class: DiagramClass,
    emit: &mut dyn FnMut(CoxeterDiagram),
) {
    if next == new {
        if any_edge {
            emit(child.clone());
        }
        return;
    }
    for choice in &EDGE_CHOICES {
        let mut ok = true;
        if let Some(label) = choice {
            child.add_edge(new, next, label.clone()).expect("fresh pair");
            ok = partial_attachment_ok(child, new, next, class);
        }
        if ok {
            attach(child, new, next + 1, any_edge || choice.is_some(), class, emit);
        }
        if choice.is_some() {
            remove_edge(child, new, next);
        }
    }
}

fn remove_edge(d: &mut CoxeterDiagram, i: usize, j: usize) {
    // rebuild without the edge; diagrams are tiny here
    let mut replacement = CoxeterDiagram::new(d.node_count()).expect("same size");
    for (a, b, l) in d.edges() {
        if (a, b) != (i.min(j), i.max(j)) {
            replacement.add_edge(a, b, l.clone()).expect("copy");
        }
    }
    *d = replacement;
}

/// The induced diagram on the new node plus the prefix it has been attached
/// to must stay inside the classes heredity allows.
fn partial_attachment_ok(
    child: &CoxeterDiagram,
    new: usize,
    prefix_end: usize,
    class: DiagramClass,
) -> bool {
    let mut nodes: Vec<usize> = (0..=prefix_end).collect();
    nodes.push(new);
    if nodes.len() == child.node_count() {
        return true; // full diagram is classified by the caller
    }
    let sub = child.subdiagram(&nodes).expect("in range");
    let gram = match GramMatrix::from_diagram(&sub) {
        Ok(g) => g,
        Err(_) => return false,
    };
    let it = gram.inertia();
    match class {
        // proper subdiagrams of elliptic/parabolic/Lanner diagrams are elliptic
        DiagramClass::Elliptic | DiagramClass::Parabolic | DiagramClass::Lanner => {
            it.negative == 0 && it.zero == 0
        }
        // proper subdiagrams of quasi-Lanner diagrams are elliptic or parabolic
        DiagramClass::QuasiLanner => {
            it.negative == 0
                && (it.zero == 0 || is_parabolic_shape(&sub).unwrap_or(false))
        }
        DiagramClass::Other => true,
    }
}

/// Exhaustive enumeration for the residual class; exponential in the pair
/// count, intended for small sizes only.
fn enumerate_other(max_nodes: usize) -> Vec<CoxeterDiagram> {
    let mut out = Vec::new();
    let mut keys = BTreeSet::new();
    for size in 1..=max_nodes {
        let pairs: Vec<(usize, usize)> = (0..size)
            .flat_map(|i| (i + 1..size).map(move |j| (i, j)))
            .collect();
        let mut assignment = vec![0usize; pairs.len()];
        loop {
            let mut d = CoxeterDiagram::new(size).expect("within cap");
            for (idx, &(i, j)) in pairs.iter().enumerate() {
                if let Some(label) = &EDGE_CHOICES[assignment[idx]] {
                    d.add_edge(i, j, label.clone()).expect("fresh");
                }
            }
            if d.is_connected()
                && classify(&d).expect("angle labels") == DiagramClass::Other
            {
                let key = d.canonical_key();
                if keys.insert(key) {
                    out.push(d);
                }
            }
            // odometer
            let mut pos = 0;
            loop {
                if pos == assignment.len() {
                    break;
                }
                assignment[pos] += 1;
                if assignment[pos] < EDGE_CHOICES.len() {
                    break;
                }
                assignment[pos] = 0;
                pos += 1;
            }
            if pos == assignment.len() {
                break;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::DiagramFile;

    fn diagram(text: &str) -> CoxeterDiagram {
        DiagramFile::parse(text).unwrap().diagram
    }

    #[test]
    fn single_node_is_elliptic() {
        assert_eq!(
            classify(&diagram("dim 1\nnodes 1\n")).unwrap(),
            DiagramClass::Elliptic
        );
    }

    #[test]
    fn infinity_edge_is_parabolic() {
        assert_eq!(
            classify(&diagram("dim 1\nnodes 2\nedge 0 1 inf\n")).unwrap(),
            DiagramClass::Parabolic
        );
    }

    #[test]
    fn triangle_of_order_three_is_parabolic() {
        // 3-cycle, all m=3: eigenvalues {0, 3/2, 3/2}
        let d = diagram("dim 1\nnodes 3\nedge 0 1 m=3\nedge 1 2 m=3\nedge 0 2 m=3\n");
        let (class, inertia) = classify_with_inertia(&d).unwrap();
        assert_eq!(class, DiagramClass::Parabolic);
        assert_eq!(inertia.zero, 1);
    }

    #[test]
    fn double_five_path_is_lanner() {
        // path with labels (5,5): det = 1 - 2 cos^2(pi/5) < 0
        let d = diagram("dim 1\nnodes 3\nedge 0 1 m=5\nedge 1 2 m=5\n");
        assert_eq!(classify(&d).unwrap(), DiagramClass::Lanner);
    }

    #[test]
    fn infinity_plus_tail_is_quasi_lanner() {
        let d = diagram("dim 1\nnodes 3\nedge 0 1 inf\nedge 1 2 m=3\n");
        assert_eq!(classify(&d).unwrap(), DiagramClass::QuasiLanner);
    }

    #[test]
    fn disconnected_affine_pieces_are_parabolic() {
        let d = diagram("dim 1\nnodes 4\nedge 0 1 inf\nedge 2 3 inf\n");
        assert_eq!(classify(&d).unwrap(), DiagramClass::Parabolic);
        // affine plus finite mixes are not parabolic
        let d = diagram("dim 1\nnodes 3\nedge 0 1 inf\n");
        assert_eq!(classify(&d).unwrap(), DiagramClass::Other);
    }

    #[test]
    fn dotted_edges_are_rejected() {
        let d = diagram("dim 1\nnodes 2\nedge 0 1 dotted sqrt(3)\n");
        assert_eq!(classify(&d), Err(ClassifyError::DottedEdgePresent));
    }

    #[test]
    fn two_node_enumeration_matches_theory() {
        // exactly one connected 2-node parabolic diagram: the infinity edge
        let parabolic = enumerate_connected(DiagramClass::Parabolic, 2);
        assert_eq!(parabolic.len(), 1);
        assert_eq!(parabolic[0].edge(0, 1), Some(&EdgeLabel::Infinity));
        // no 2-node Lanner diagram exists over these labels
        assert!(enumerate_connected(DiagramClass::Lanner, 2).is_empty());
    }

    #[test]
    fn elliptic_enumeration_agrees_with_brute_force() {
        let grown = enumerate_connected(DiagramClass::Elliptic, 3);
        // brute force over all labelings of 2 and 3 nodes
        let mut count = 1; // single node
        for labels in [
            vec![(0usize, 1usize)],
            vec![(0, 1), (1, 2)],
            vec![(0, 1), (1, 2), (0, 2)],
        ] {
            let nodes = labels.iter().flat_map(|&(a, b)| [a, b]).max().unwrap() + 1;
            let mut assignment = vec![0usize; labels.len()];
            let mut seen = std::collections::BTreeSet::new();
            loop {
                let mut d = CoxeterDiagram::new(nodes).unwrap();
                let mut full = true;
                for (idx, &(i, j)) in labels.iter().enumerate() {
                    match &EDGE_CHOICES[assignment[idx]] {
                        Some(l) => d.add_edge(i, j, l.clone()).unwrap(),
                        None => full = false,
                    }
                }
                // require exactly the chosen edge support to avoid recounting
                if full
                    && d.is_connected()
                    && classify(&d).unwrap() == DiagramClass::Elliptic
                    && seen.insert(d.canonical_key())
                {
                    count += 1;
                }
                let mut pos = 0;
                loop {
                    if pos == assignment.len() {
                        break;
                    }
                    assignment[pos] += 1;
                    if assignment[pos] < EDGE_CHOICES.len() {
                        break;
                    }
                    assignment[pos] = 0;
                    pos += 1;
                }
                if pos == assignment.len() {
                    break;
                }
            }
        }
        assert_eq!(grown.len(), count);
    }

    #[test]
    fn lanner_members_lose_any_node_to_elliptic() {
        for d in enumerate_connected(DiagramClass::Lanner, 5) {
            for drop in 0..d.node_count() {
                let keep: Vec<usize> = (0..d.node_count()).filter(|&v| v != drop).collect();
                let sub = d.subdiagram(&keep).unwrap();
                assert_eq!(classify(&sub).unwrap(), DiagramClass::Elliptic);
            }
        }
    }
}

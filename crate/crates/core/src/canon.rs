//! Canonical forms of Coxeter diagrams via partition refinement with
//! individualization, over the complete edge-coloured relation (edge absence
//! is a colour of its own). Two diagrams receive equal keys exactly when a
//! label-preserving node bijection maps one onto the other; node tags are
//! ignored.

use std::collections::BTreeMap;

use crate::diagram::{CoxeterDiagram, EdgeLabel};

/// Compact colour id per pair; 0 = no edge.
type Color = u32;

struct Instance {
    n: usize,
    color: Vec<Vec<Color>>,
}

/// Canonical key for a diagram; dotted weights participate through their
/// canonical printed form.
pub fn canonical_key(d: &CoxeterDiagram) -> String {
    let tokens = d
        .edges()
        .map(|(i, j, l)| (i, j, edge_token(l)))
        .collect::<Vec<_>>();
    canonical_key_of_tokens(d.node_count(), &tokens)
}

/// Canonical key for a diagram skeleton: dotted weights are erased so that a
/// candidate with unknown weights can be matched against a solved diagram.
pub fn skeleton_key(d: &CoxeterDiagram) -> String {
    let tokens = d
        .edges()
        .map(|(i, j, l)| {
            let t = match l {
                EdgeLabel::Dotted(_) => "dot:?".to_string(),
                other => edge_token(other),
            };
            (i, j, t)
        })
        .collect::<Vec<_>>();
    canonical_key_of_tokens(d.node_count(), &tokens)
}

fn edge_token(label: &EdgeLabel) -> String {
    match label {
        EdgeLabel::Order(m) => format!("m{m}"),
        EdgeLabel::Infinity => "inf".to_string(),
        EdgeLabel::Dotted(w) => format!("dot:{w}"),
    }
}

/// Canonical key over explicit `(i, j, token)` labelled pairs.
pub fn canonical_key_of_tokens(n: usize, edges: &[(usize, usize, String)]) -> String {
    // interned colours, sorted by token so the key is label-stable
    let mut token_set: Vec<&str> = edges.iter().map(|(_, _, t)| t.as_str()).collect();
    token_set.sort_unstable();
    token_set.dedup();
    let token_id: BTreeMap<&str, Color> = token_set
        .iter()
        .enumerate()
        .map(|(i, &t)| (t, i as Color + 1))
        .collect();

    let mut color = vec![vec![0 as Color; n]; n];
    for (i, j, t) in edges {
        let c = token_id[t.as_str()];
        color[*i][*j] = c;
        color[*j][*i] = c;
    }
    let inst = Instance { n, color };

    let mut best: Option<Vec<Color>> = None;
    if n == 0 {
        return "0|".to_string();
    }
    search(&inst, vec![(0..n).collect()], &mut best);
    let cert = best.expect("at least one leaf");

    let mut out = format!("{n}|");
    for c in cert {
        out.push_str(&c.to_string());
        out.push(',');
    }
    // append the token legend so equal certificates mean equal labels
    out.push('|');
    for t in token_set {
        out.push_str(t);
        out.push(';');
    }
    out
}

/// Refines the ordered partition to equitability: every node's signature
/// (multiset of pair colours into each cell) is constant on each cell.
fn refine(inst: &Instance, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    loop {
        let mut changed = false;
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            // signature of u: per target cell, the sorted colour multiset
            let mut grouped: BTreeMap<Vec<Vec<Color>>, Vec<usize>> = BTreeMap::new();
            for &u in cell {
                let sig: Vec<Vec<Color>> = cells
                    .iter()
                    .map(|target| {
                        let mut colors: Vec<Color> = target
                            .iter()
                            .filter(|&&v| v != u)
                            .map(|&v| inst.color[u][v])
                            .collect();
                        colors.sort_unstable();
                        colors
                    })
                    .collect();
                grouped.entry(sig).or_default().push(u);
            }
            if grouped.len() > 1 {
                changed = true;
            }
            for (_, members) in grouped {
                next.push(members);
            }
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

/// True when all members of the cell are pairwise interchangeable: identical
/// colours to every outside node and a uniform colour within the cell. Such
/// cells can be ordered arbitrarily without branching.
fn interchangeable(inst: &Instance, cell: &[usize]) -> bool {
    let inner = inst.color[cell[0]][cell[1]];
    for (ai, &a) in cell.iter().enumerate() {
        for &b in &cell[ai + 1..] {
            if inst.color[a][b] != inner {
                return false;
            }
        }
    }
    for &a in cell {
        for v in 0..inst.n {
            if cell.contains(&v) {
                continue;
            }
            if inst.color[a][v] != inst.color[cell[0]][v] && a != cell[0] {
                return false;
            }
        }
    }
    true
}

fn search(inst: &Instance, cells: Vec<Vec<usize>>, best: &mut Option<Vec<Color>>) {
    let mut cells = refine(inst, cells);
    loop {
        let target = cells.iter().position(|c| c.len() > 1);
        let Some(idx) = target else {
            // discrete: position of node = index in cells
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let cert = certificate(inst, &order);
            if best.as_ref().is_none_or(|b| cert < *b) {
                *best = Some(cert);
            }
            return;
        };
        let cell = cells[idx].clone();
        if interchangeable(inst, &cell) {
            // order members arbitrarily; no refinement can distinguish them
            let mut next = Vec::with_capacity(cells.len() + cell.len() - 1);
            for (ci, c) in cells.iter().enumerate() {
                if ci == idx {
                    for &u in &cell {
                        next.push(vec![u]);
                    }
                } else {
                    next.push(c.clone());
                }
            }
            cells = next;
            continue;
        }
        for &u in &cell {
            let mut branch = Vec::with_capacity(cells.len() + 1);
            for (ci, c) in cells.iter().enumerate() {
                if ci == idx {
                    branch.push(vec![u]);
                    branch.push(cell.iter().copied().filter(|&v| v != u).collect());
                } else {
                    branch.push(c.clone());
                }
            }
            search(inst, branch, best);
        }
        return;
    }
}

fn certificate(inst: &Instance, order: &[usize]) -> Vec<Color> {
    let n = order.len();
    let mut cert = Vec::with_capacity(n * (n - 1) / 2);
    for a in 0..n {
        for b in a + 1..n {
            cert.push(inst.color[order[a]][order[b]]);
        }
    }
    cert
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{CoxeterDiagram, EdgeLabel};
    use proptest::prelude::*;

    fn path(labels: &[u32]) -> CoxeterDiagram {
        let mut d = CoxeterDiagram::new(labels.len() + 1).unwrap();
        for (i, &m) in labels.iter().enumerate() {
            d.add_edge(i, i + 1, EdgeLabel::Order(m)).unwrap();
        }
        d
    }

    #[test]
    fn relabelled_paths_match() {
        let a = path(&[3, 3]);
        let mut b = CoxeterDiagram::new(3).unwrap();
        b.add_edge(2, 1, EdgeLabel::Order(3)).unwrap();
        b.add_edge(1, 0, EdgeLabel::Order(3)).unwrap();
        assert_eq!(a.canonical_key(), b.canonical_key());
    }

    #[test]
    fn reflected_labels_match() {
        assert_eq!(path(&[3, 4]).canonical_key(), path(&[4, 3]).canonical_key());
        assert_ne!(path(&[3, 4]).canonical_key(), path(&[3, 3]).canonical_key());
    }

    #[test]
    fn triangle_differs_from_path() {
        let mut tri = CoxeterDiagram::new(3).unwrap();
        tri.add_edge(0, 1, EdgeLabel::Order(3)).unwrap();
        tri.add_edge(1, 2, EdgeLabel::Order(3)).unwrap();
        tri.add_edge(0, 2, EdgeLabel::Order(3)).unwrap();
        assert_ne!(tri.canonical_key(), path(&[3, 3]).canonical_key());
    }

    #[test]
    fn tags_are_ignored() {
        let mut a = path(&[5, 3]);
        a.set_tag(0, "0").unwrap();
        let b = path(&[5, 3]);
        assert_eq!(a.canonical_key(), b.canonical_key());
    }

    #[test]
    fn dotted_weight_participates() {
        let mut a = CoxeterDiagram::new(2).unwrap();
        a.add_edge(0, 1, EdgeLabel::Dotted("sqrt(3)".parse().unwrap()))
            .unwrap();
        let mut b = CoxeterDiagram::new(2).unwrap();
        b.add_edge(0, 1, EdgeLabel::Dotted("sqrt(2)".parse().unwrap()))
            .unwrap();
        assert_ne!(a.canonical_key(), b.canonical_key());
        assert_eq!(skeleton_key(&a), skeleton_key(&b));
    }

    #[test]
    fn hard_symmetric_cases_terminate() {
        // no edges at all: fully interchangeable
        let empty = CoxeterDiagram::new(13).unwrap();
        let _ = empty.canonical_key();
        // a 12-cycle of m3 edges: vertex-transitive, needs individualization
        let mut cyc = CoxeterDiagram::new(12).unwrap();
        for i in 0..12 {
            cyc.add_edge(i, (i + 1) % 12, EdgeLabel::Order(3)).unwrap();
        }
        let _ = cyc.canonical_key();
    }

    fn arb_diagram(max_nodes: usize) -> impl Strategy<Value = CoxeterDiagram> {
        (2..=max_nodes).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            proptest::collection::vec(0u8..8, pairs).prop_map(move |labels| {
                let mut d = CoxeterDiagram::new(n).unwrap();
                let mut it = labels.into_iter();
                for i in 0..n {
                    for j in i + 1..n {
                        let label = match it.next().unwrap() {
                            0 | 6 | 7 => None,
                            1 => Some(EdgeLabel::Order(3)),
                            2 => Some(EdgeLabel::Order(4)),
                            3 => Some(EdgeLabel::Order(5)),
                            4 => Some(EdgeLabel::Order(6)),
                            _ => Some(EdgeLabel::Infinity),
                        };
                        if let Some(l) = label {
                            d.add_edge(i, j, l).unwrap();
                        }
                    }
                }
                d
            })
        })
    }

    proptest! {
        // canonical key is invariant under node relabelling
        #[test]
        fn permutation_invariance(d in arb_diagram(9), seed in any::<u64>()) {
            let n = d.node_count();
            let mut perm: Vec<usize> = (0..n).collect();
            // cheap deterministic shuffle
            let mut state = seed;
            for i in (1..n).rev() {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let j = (state >> 33) as usize % (i + 1);
                perm.swap(i, j);
            }
            let mut relabelled = CoxeterDiagram::new(n).unwrap();
            for (i, j, l) in d.edges() {
                relabelled.add_edge(perm[i], perm[j], l.clone()).unwrap();
            }
            prop_assert_eq!(d.canonical_key(), relabelled.canonical_key());
        }
    }
}

//! Standard two-dimensional Gale diagrams of n-polytopes with n+3 facets.
//!
//! A diagram is a weighted regular 2k-gon: non-negative integer weights
//! summing to n+3, no two cyclically adjacent zeros, no two opposite zeros,
//! and every open half-plane through the origin sees total weight at least
//! two. Everything here is arc combinatorics on position indices (2k-th
//! roots of unity); no floating-point geometry is involved anywhere.
//!
//! This family fixes exactly one pair of opposite positions with nonzero
//! weights; both weights are forced to 1 and the pair encodes the one
//! non-simple vertex.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GaleError {
    #[error("dimension {0} outside the supported range 2..=16")]
    UnsupportedDimension(usize),
    #[error("exactly one opposite pair with nonzero weights is required, found {0}")]
    NotOneOppositePair(usize),
    #[error("invalid gale diagram: {0}")]
    Invalid(String),
}

/// Weighted 2k-gon in cyclic position order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GaleDiagram {
    weights: Vec<u32>,
}

impl GaleDiagram {
    pub fn new(weights: Vec<u32>) -> Result<GaleDiagram, GaleError> {
        if weights.len() < 4 || weights.len() % 2 != 0 {
            return Err(GaleError::Invalid(format!(
                "a 2k-gon needs an even number of positions >= 4, got {}",
                weights.len()
            )));
        }
        let g = GaleDiagram { weights };
        for (rule, ok) in g.rule_checks() {
            if !ok {
                return Err(GaleError::Invalid(format!("rule violated: {rule}")));
            }
        }
        Ok(g)
    }

    /// Half the polygon size.
    pub fn k(&self) -> usize {
        self.weights.len() / 2
    }

    pub fn positions(&self) -> usize {
        self.weights.len()
    }

    pub fn weight(&self, position: usize) -> u32 {
        self.weights[position % self.weights.len()]
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn total_weight(&self) -> u32 {
        self.weights.iter().sum()
    }

    /// The four defining rules, named, for independent re-checking.
    pub fn rule_checks(&self) -> Vec<(&'static str, bool)> {
        let two_k = self.weights.len();
        let k = two_k / 2;
        let no_adjacent_zeros = (0..two_k)
            .all(|i| self.weights[i] != 0 || self.weights[(i + 1) % two_k] != 0);
        let no_opposite_zeros = (0..k).all(|i| self.weights[i] != 0 || self.weights[i + k] != 0);
        // every open half-plane through the origin: the tightest ones are
        // bounded by a diagonal through two opposite positions and contain
        // the k-1 consecutive positions strictly between them
        let halfplane = (0..two_k).all(|start| {
            let sum: u32 = (0..k.saturating_sub(1))
                .map(|t| self.weights[(start + t) % two_k])
                .sum();
            sum >= 2
        });
        vec![
            ("positive total weight", self.total_weight() > 0),
            ("no adjacent zero pair", no_adjacent_zeros),
            ("no opposite zero pair", no_opposite_zeros),
            ("open half-planes carry weight >= 2", halfplane),
        ]
    }

    /// Opposite position pairs `(i, i+k)` with both weights nonzero.
    pub fn opposite_pairs(&self) -> Vec<usize> {
        let k = self.k();
        (0..k)
            .filter(|&i| self.weights[i] != 0 && self.weights[i + k] != 0)
            .collect()
    }

    /// Lexicographically least representative under the dihedral action.
    pub fn dihedral_canonical(&self) -> Vec<u32> {
        let n = self.weights.len();
        let mut best: Option<Vec<u32>> = None;
        for start in 0..n {
            let mut rot: Vec<u32> = (0..n).map(|i| self.weights[(start + i) % n]).collect();
            for _ in 0..2 {
                if best.as_ref().is_none_or(|b| rot < *b) {
                    best = Some(rot.clone());
                }
                rot.reverse();
            }
        }
        best.expect("nonempty weights")
    }

    pub fn facet_atlas(&self) -> FacetAtlas {
        let mut positions = Vec::new();
        let mut copies = Vec::new();
        for (pos, &w) in self.weights.iter().enumerate() {
            for c in 1..=w {
                positions.push(pos);
                copies.push(c);
            }
        }
        FacetAtlas {
            k: self.k(),
            positions,
            copies,
        }
    }

    /// Remark-style face test: the facet subset is a face exactly when the
    /// origin lies in the convex hull of the complement's positions. On the
    /// circle this reduces to: no open semicircle contains every complement
    /// position, i.e. the largest circular gap between consecutive occupied
    /// positions is at most k.
    pub fn is_face(&self, atlas: &FacetAtlas, subset: &[usize]) -> bool {
        let two_k = self.weights.len();
        let k = self.k();
        let in_subset: BTreeSet<usize> = subset.iter().copied().collect();
        let mut occupied: Vec<usize> = (0..atlas.facet_count())
            .filter(|f| !in_subset.contains(f))
            .map(|f| atlas.positions[f])
            .collect();
        occupied.sort_unstable();
        occupied.dedup();
        if occupied.is_empty() {
            return false;
        }
        let mut max_gap = 0;
        for (idx, &p) in occupied.iter().enumerate() {
            let next = if idx + 1 == occupied.len() {
                occupied[0] + two_k
            } else {
                occupied[idx + 1]
            };
            max_gap = max_gap.max(next - p);
        }
        max_gap <= k
    }

    /// All vertices of the combinatorial polytope, as facet sets: the unique
    /// non-simple vertex (all facets off the opposite pair) plus every
    /// size-n face subset not contained in it.
    pub fn vertices(&self, atlas: &FacetAtlas) -> Result<Vec<Vec<usize>>, GaleError> {
        let pairs = self.opposite_pairs();
        if pairs.len() != 1 {
            return Err(GaleError::NotOneOppositePair(pairs.len()));
        }
        let i0 = pairs[0];
        let k = self.k();
        let p = atlas.facet_count();
        let n = p - 3;
        let pair_facets: Vec<usize> = (0..p)
            .filter(|&f| atlas.positions[f] == i0 || atlas.positions[f] == i0 + k)
            .collect();
        let nonsimple: Vec<usize> = (0..p).filter(|f| !pair_facets.contains(f)).collect();
        let mut vertices = vec![nonsimple.clone()];
        let nonsimple_set: BTreeSet<usize> = nonsimple.iter().copied().collect();
        for subset in combinations(p, n) {
            if subset.iter().all(|f| nonsimple_set.contains(f)) {
                continue;
            }
            if self.is_face(atlas, &subset) {
                vertices.push(subset);
            }
        }
        Ok(vertices)
    }

    /// Subdiagram obligations read off the Gale diagram: the two arcs beside
    /// the opposite pair must be connected parabolic; arcs over a pair
    /// member are quasi-Lanner, with the variant depending on whether the
    /// neighbouring position is occupied; almost-opposite zero pairs force
    /// Lanner arcs; and every simple vertex must look like an actual or
    /// ideal polytope vertex.
    pub fn derive_constraints(&self) -> Result<ConstraintSet, GaleError> {
        let pairs = self.opposite_pairs();
        if pairs.len() != 1 {
            return Err(GaleError::NotOneOppositePair(pairs.len()));
        }
        let atlas = self.facet_atlas();
        let two_k = self.weights.len();
        let k = self.k();

        let mut set = ConstraintSet {
            pair_facets: (0..atlas.facet_count())
                .filter(|&f| {
                    atlas.positions[f] % k == pairs[0] && self.weights[atlas.positions[f]] != 0
                })
                .collect(),
            ..ConstraintSet::default()
        };

        // scan both orientations so every directed reading of the arc
        // patterns fires; `orient` maps a scan position to a real position
        for reflected in [false, true] {
            let orient = |pos: isize| -> usize {
                let m = pos.rem_euclid(two_k as isize) as usize;
                if reflected {
                    (two_k - m) % two_k
                } else {
                    m
                }
            };
            let weight_at = |pos: isize| self.weights[orient(pos)];
            let arc_facets = |from: isize, to: isize| -> Vec<usize> {
                // positions from..=to in scan order, mapped through orient
                let len = (to - from).rem_euclid(two_k as isize) as usize;
                let mut facets = Vec::new();
                for t in 0..=len {
                    let real = orient(from + t as isize);
                    for f in 0..atlas.facet_count() {
                        if atlas.positions[f] == real {
                            facets.push(f);
                        }
                    }
                }
                facets.sort_unstable();
                facets
            };

            for scan_i in 0..two_k as isize {
                let i = scan_i;
                let opposite = i + k as isize;
                if weight_at(i) != 0 && weight_at(opposite) != 0 {
                    // arc strictly between the pair members: connected parabolic
                    set.parabolic_arcs
                        .push(arc_facets(i + 1, opposite - 1));
                    if weight_at(i + 1) != 0 && weight_at(opposite + 1) != 0 {
                        set.quasi_lanner_arcs.push(arc_facets(i + 1, opposite));
                    }
                    if weight_at(i + 1) == 0 {
                        set.quasi_lanner_arcs.push(arc_facets(i + 2, opposite));
                    }
                }
                if weight_at(i) == 0 && weight_at(opposite - 1) == 0 {
                    set.lanner_arcs.push(arc_facets(i + 1, opposite - 2));
                }
            }
        }

        for vertex in self.vertices(&atlas)? {
            if vertex.len() == atlas.facet_count() - 3 {
                set.simple_vertices.push(vertex);
            } else {
                set.ideal_vertex = vertex;
            }
        }

        set.dedup();
        Ok(set)
    }
}

impl fmt::Display for GaleDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ws: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        write!(f, "k={}; weights={}", self.k(), ws.join(","))
    }
}

impl FromStr for GaleDiagram {
    type Err = GaleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(';').map(str::trim).collect();
        if parts.len() != 2 {
            return Err(GaleError::Invalid("expected 'k=<int>; weights=<list>'".into()));
        }
        let k: usize = parts[0]
            .strip_prefix("k=")
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| GaleError::Invalid("bad k field".into()))?;
        let weights: Vec<u32> = parts[1]
            .strip_prefix("weights=")
            .ok_or_else(|| GaleError::Invalid("bad weights field".into()))?
            .split(',')
            .map(|w| w.trim().parse())
            .collect::<Result<_, _>>()
            .map_err(|_| GaleError::Invalid("weights must be integers".into()))?;
        if weights.len() != 2 * k {
            return Err(GaleError::Invalid(format!(
                "k={k} needs {} weights, got {}",
                2 * k,
                weights.len()
            )));
        }
        GaleDiagram::new(weights)
    }
}

/// Facet book-keeping: facet index -> (polygon position, copy number).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetAtlas {
    k: usize,
    positions: Vec<usize>,
    copies: Vec<u32>,
}

impl FacetAtlas {
    pub fn facet_count(&self) -> usize {
        self.positions.len()
    }

    pub fn position(&self, facet: usize) -> usize {
        self.positions[facet]
    }

    pub fn copy(&self, facet: usize) -> u32 {
        self.copies[facet]
    }

    /// Facets sitting at a polygon position.
    pub fn facets_at(&self, position: usize) -> Vec<usize> {
        (0..self.facet_count())
            .filter(|&f| self.positions[f] == position)
            .collect()
    }
}

/// Subdiagram obligations for one Gale diagram, as facet index sets.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConstraintSet {
    /// The two facets of the opposite pair.
    pub pair_facets: Vec<usize>,
    /// Arcs that must induce connected parabolic diagrams.
    pub parabolic_arcs: Vec<Vec<usize>>,
    /// Arcs that must induce quasi-Lanner diagrams.
    pub quasi_lanner_arcs: Vec<Vec<usize>>,
    /// Arcs that must induce Lanner diagrams.
    pub lanner_arcs: Vec<Vec<usize>>,
    /// Facet sets of simple vertices: each must induce an elliptic diagram
    /// (actual vertex) or a connected parabolic one (ideal vertex).
    pub simple_vertices: Vec<Vec<usize>>,
    /// The non-simple vertex facet set: parabolic with a two-dimensional
    /// kernel (two affine components).
    pub ideal_vertex: Vec<usize>,
}

impl ConstraintSet {
    fn dedup(&mut self) {
        for list in [
            &mut self.parabolic_arcs,
            &mut self.quasi_lanner_arcs,
            &mut self.lanner_arcs,
            &mut self.simple_vertices,
        ] {
            list.sort();
            list.dedup();
        }
    }

    /// Structured plain-text report.
    pub fn report(&self) -> String {
        let mut out = String::new();
        let fmt_sets = |name: &str, sets: &[Vec<usize>], out: &mut String| {
            out.push_str(&format!("{name} ({}):\n", sets.len()));
            for s in sets {
                let items: Vec<String> = s.iter().map(|f| f.to_string()).collect();
                out.push_str(&format!("  {{{}}}\n", items.join(",")));
            }
        };
        out.push_str(&format!(
            "opposite pair facets: {{{}}}\n",
            self.pair_facets
                .iter()
                .map(|f| f.to_string())
                .collect::<Vec<_>>()
                .join(",")
        ));
        fmt_sets("connected parabolic arcs", &self.parabolic_arcs, &mut out);
        fmt_sets("quasi-lanner arcs", &self.quasi_lanner_arcs, &mut out);
        fmt_sets("lanner arcs", &self.lanner_arcs, &mut out);
        fmt_sets("simple vertices", &self.simple_vertices, &mut out);
        fmt_sets(
            "non-simple vertex",
            std::slice::from_ref(&self.ideal_vertex),
            &mut out,
        );
        out
    }
}

fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if r > n {
        return out;
    }
    let mut current: Vec<usize> = (0..r).collect();
    loop {
        out.push(current.clone());
        // advance
        let mut idx = r;
        loop {
            if idx == 0 {
                return out;
            }
            idx -= 1;
            if current[idx] != idx + n - r {
                break;
            }
            if idx == 0 {
                return out;
            }
        }
        current[idx] += 1;
        for t in idx + 1..r {
            current[t] = current[t - 1] + 1;
        }
    }
}

/// Enumerates all Gale diagrams for dimension `n` with exactly
/// `opposite_pairs` opposite nonzero pairs, deduplicated up to the dihedral
/// symmetry of the polygon. Weights of each opposite pair are forced to 1.
pub fn enumerate_gale(n: usize, opposite_pairs: usize) -> Result<Vec<GaleDiagram>, GaleError> {
    if !(2..=16).contains(&n) {
        return Err(GaleError::UnsupportedDimension(n));
    }
    let total = (n + 3) as u32;
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut out = Vec::new();
    for k in 2..=(n + 3) {
        let two_k = 2 * k;
        let mut weights = vec![0u32; two_k];
        enumerate_rec(&mut weights, 0, total, 0, opposite_pairs, k, &mut |w| {
            let g = GaleDiagram {
                weights: w.to_vec(),
            };
            if g.rule_checks().iter().all(|(_, ok)| *ok) {
                let canon = g.dihedral_canonical();
                if seen.insert(canon.clone()) {
                    out.push(GaleDiagram { weights: canon });
                }
            }
        });
    }
    Ok(out)
}

fn enumerate_rec(
    weights: &mut Vec<u32>,
    pos: usize,
    left: u32,
    pairs_so_far: usize,
    pairs_wanted: usize,
    k: usize,
    emit: &mut dyn FnMut(&[u32]),
) {
    let two_k = 2 * k;
    if pos == two_k {
        if left == 0 && pairs_so_far == pairs_wanted {
            emit(weights);
        }
        return;
    }
    for w in 0..=left {
        // adjacent zeros prune (cyclic closure re-checked by the rules)
        if w == 0 && pos > 0 && weights[pos - 1] == 0 {
            continue;
        }
        let mut pairs = pairs_so_far;
        if pos >= k {
            let partner = weights[pos - k];
            if w == 0 && partner == 0 {
                continue; // opposite zeros
            }
            if w != 0 && partner != 0 {
                if w != 1 || partner != 1 {
                    continue; // nonzero opposite pairs are forced to weight 1
                }
                pairs += 1;
                if pairs > pairs_wanted {
                    continue;
                }
            }
        }
        weights[pos] = w;
        enumerate_rec(weights, pos + 1, left - w, pairs, pairs_wanted, k, emit);
        weights[pos] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn decagon() -> GaleDiagram {
        GaleDiagram::new(vec![1, 1, 0, 2, 0, 1, 0, 1, 0, 1]).unwrap()
    }

    #[test]
    fn decagon_satisfies_rules() {
        let g = decagon();
        assert!(g.rule_checks().iter().all(|(_, ok)| *ok));
        assert_eq!(g.total_weight(), 7);
        assert_eq!(g.opposite_pairs(), vec![0]);
    }

    #[test]
    fn enumeration_contains_the_decagon_for_n4() {
        let all = enumerate_gale(4, 1).unwrap();
        let target = decagon().dihedral_canonical();
        assert!(all.iter().any(|g| g.dihedral_canonical() == target));
        // rotations never add new diagrams
        for g in &all {
            let n = g.positions();
            let rotated: Vec<u32> = (0..n).map(|i| g.weight(i + 1)).collect();
            let r = GaleDiagram { weights: rotated };
            assert!(all
                .iter()
                .any(|h| h.dihedral_canonical() == r.dihedral_canonical()));
        }
    }

    #[test]
    fn face_tests_on_the_decagon() {
        let g = decagon();
        let atlas = g.facet_atlas();
        assert_eq!(atlas.facet_count(), 7);
        // whole polytope is a face
        assert!(g.is_face(&atlas, &[]));
        // empty complement is not
        let all: Vec<usize> = (0..7).collect();
        assert!(!g.is_face(&atlas, &all));
        // all but the opposite pair: the non-simple vertex
        let pair: Vec<usize> = (0..7)
            .filter(|&f| atlas.position(f) == 0 || atlas.position(f) == 5)
            .collect();
        assert_eq!(pair.len(), 2);
        let rest: Vec<usize> = (0..7).filter(|f| !pair.contains(f)).collect();
        assert!(g.is_face(&atlas, &rest));
        assert_eq!(rest.len(), 5); // n+1 facets
    }

    #[test]
    fn face_monotonicity_on_subsets() {
        let g = decagon();
        let atlas = g.facet_atlas();
        let rest: Vec<usize> = (0..7)
            .filter(|&f| atlas.position(f) != 0 && atlas.position(f) != 5)
            .collect();
        for drop in &rest {
            let smaller: Vec<usize> = rest.iter().copied().filter(|f| f != drop).collect();
            assert!(g.is_face(&atlas, &smaller));
        }
    }

    #[test]
    fn decagon_constraints_contain_the_pair_arcs() {
        let g = decagon();
        let atlas = g.facet_atlas();
        let set = g.derive_constraints().unwrap();
        // facets at positions 1..4 and 6..9
        let arc1: Vec<usize> = (0..7)
            .filter(|&f| (1..=4).contains(&atlas.position(f)))
            .collect();
        let arc2: Vec<usize> = (0..7)
            .filter(|&f| (6..=9).contains(&atlas.position(f)))
            .collect();
        assert!(set.parabolic_arcs.contains(&arc1));
        assert!(set.parabolic_arcs.contains(&arc2));
        assert_eq!(set.ideal_vertex.len(), 5);
        // every constraint set is a proper subset of the facets
        for s in set
            .parabolic_arcs
            .iter()
            .chain(&set.quasi_lanner_arcs)
            .chain(&set.lanner_arcs)
            .chain(&set.simple_vertices)
        {
            assert!(s.len() < 7);
        }
    }

    #[test]
    fn lanner_arcs_fire_on_almost_opposite_zeros() {
        let g = decagon();
        // zero positions: 2,4,6,8; k=5; pattern (i, i+k-1): (2,6), (4,8)
        let set = g.derive_constraints().unwrap();
        assert!(!set.lanner_arcs.is_empty());
    }

    #[test]
    fn enumeration_counts_are_frozen() {
        // brute-force-validated golden numbers for this family
        let expected = [(4, 5), (5, 14), (6, 29), (7, 64), (8, 127), (9, 262), (10, 517)];
        for (n, count) in expected {
            assert_eq!(enumerate_gale(n, 1).unwrap().len(), count, "n={n}");
        }
    }

    #[test]
    fn rejects_unsupported_dimension() {
        assert!(matches!(
            enumerate_gale(17, 1),
            Err(GaleError::UnsupportedDimension(17))
        ));
        assert!(matches!(
            enumerate_gale(1, 1),
            Err(GaleError::UnsupportedDimension(1))
        ));
    }

    #[test]
    fn serialization_round_trip() {
        let g = decagon();
        let s = g.to_string();
        assert_eq!(s, "k=5; weights=1,1,0,2,0,1,0,1,0,1");
        let back: GaleDiagram = s.parse().unwrap();
        assert_eq!(back, g);
        assert!("k=3; weights=1,1".parse::<GaleDiagram>().is_err());
    }

    #[test]
    fn every_enumerated_diagram_passes_independent_recheck() {
        for n in [4usize, 6] {
            for g in enumerate_gale(n, 1).unwrap() {
                assert_eq!(g.total_weight() as usize, n + 3);
                assert!(g.rule_checks().iter().all(|(_, ok)| *ok));
                let pairs = g.opposite_pairs();
                assert_eq!(pairs.len(), 1);
                let i = pairs[0];
                assert_eq!(g.weight(i), 1);
                assert_eq!(g.weight(i + g.k()), 1);
            }
        }
    }
}

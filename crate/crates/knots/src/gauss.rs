//! Gauss diagrams: an oriented circle with one directed, signed chord per
//! crossing, pointing from the under- to the over-strand passage.
//!
//! Positions live in `0..2c` around the circle; the basepoint sits in the
//! gap before position 0 (rotate with [`GaussDiagram::rotate`] to move it).

use serde::Serialize;
use std::collections::BTreeSet;

use crate::error::KnotError;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Arrow {
    /// Position of the under-strand passage (arrow tail).
    pub under: usize,
    /// Position of the over-strand passage (arrow head).
    pub over: usize,
    /// Crossing sign.
    pub writhe: i8,
}

impl Arrow {
    pub fn endpoints(&self) -> [usize; 2] {
        [self.under, self.over]
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GaussDiagram {
    arrows: Vec<Arrow>,
}

impl GaussDiagram {
    pub fn new(arrows: Vec<Arrow>) -> Result<Self, KnotError> {
        let n = 2 * arrows.len();
        let mut seen = vec![false; n];
        for a in &arrows {
            if a.writhe.abs() != 1 {
                return Err(KnotError::invalid("arrow writhe must be +1 or -1"));
            }
            for p in a.endpoints() {
                if p >= n || seen[p] {
                    return Err(KnotError::invalid(
                        "arrow endpoints must form a perfect matching of 0..2c",
                    ));
                }
                seen[p] = true;
            }
        }
        Ok(GaussDiagram { arrows })
    }

    pub fn empty() -> Self {
        GaussDiagram { arrows: Vec::new() }
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// Number of arrows (crossings).
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn writhe(&self) -> i64 {
        self.arrows.iter().map(|a| a.writhe as i64).sum()
    }

    pub fn is_positive(&self) -> bool {
        self.arrows.iter().all(|a| a.writhe == 1)
    }

    /// Mirror image: over/under swap at every crossing, all signs flip.
    pub fn mirror(&self) -> Self {
        GaussDiagram {
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { under: a.over, over: a.under, writhe: -a.writhe })
                .collect(),
        }
    }

    /// Move the basepoint: position p becomes p - k (mod 2c).
    pub fn rotate(&self, k: usize) -> Self {
        let n = 2 * self.len();
        if n == 0 {
            return self.clone();
        }
        GaussDiagram {
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    under: (a.under + n - k % n) % n,
                    over: (a.over + n - k % n) % n,
                    writhe: a.writhe,
                })
                .collect(),
        }
    }

    /// Connected sum: splice `other` into the gap before position 0.
    pub fn connected_sum(&self, other: &Self) -> Self {
        let shift = 2 * other.len();
        let mut arrows: Vec<Arrow> = other.arrows.clone();
        arrows.extend(self.arrows.iter().map(|a| Arrow {
            under: a.under + shift,
            over: a.over + shift,
            writhe: a.writhe,
        }));
        GaussDiagram { arrows }
    }

    /// True iff chords i and j interleave on the circle.
    pub fn linked(&self, i: usize, j: usize) -> bool {
        let (a, b) = (&self.arrows[i], &self.arrows[j]);
        let (lo, hi) = minmax(a.under, a.over);
        let inside = |p: usize| lo < p && p < hi;
        inside(b.under) != inside(b.over)
    }

    /// Positions strictly inside the side of chord `i` running from `from`
    /// to the other endpoint (exclusive), counterclockwise.
    fn side_positions(&self, i: usize, from: usize) -> Vec<usize> {
        let n = 2 * self.len();
        let a = &self.arrows[i];
        let to = if a.under == from { a.over } else { a.under };
        let mut out = Vec::new();
        let mut p = (from + 1) % n;
        while p != to {
            out.push(p);
            p = (p + 1) % n;
        }
        out
    }

    /// Map position -> (arrow id, is_over).
    pub fn position_table(&self) -> Vec<(usize, bool)> {
        let mut t = vec![(usize::MAX, false); 2 * self.len()];
        for (i, a) in self.arrows.iter().enumerate() {
            t[a.under] = (i, false);
            t[a.over] = (i, true);
        }
        t
    }

    /// Delete a set of arrows, compacting the circle positions.
    pub fn delete_arrows(&self, ids: &BTreeSet<usize>) -> Self {
        let n = 2 * self.len();
        let mut keep_pos = vec![true; n];
        for &i in ids {
            keep_pos[self.arrows[i].under] = false;
            keep_pos[self.arrows[i].over] = false;
        }
        let mut newpos = vec![0usize; n];
        let mut next = 0;
        for p in 0..n {
            newpos[p] = next;
            if keep_pos[p] {
                next += 1;
            }
        }
        GaussDiagram {
            arrows: self
                .arrows
                .iter()
                .enumerate()
                .filter(|(i, _)| !ids.contains(i))
                .map(|(_, a)| Arrow {
                    under: newpos[a.under],
                    over: newpos[a.over],
                    writhe: a.writhe,
                })
                .collect(),
        }
    }

    /// Number of Seifert circles of any (hypothetical) diagram with this
    /// Gauss code: orientation-respecting smoothing of every crossing.
    pub fn seifert_circle_count(&self) -> usize {
        let c = self.len();
        let n = 2 * c;
        if c == 0 {
            return 1;
        }
        // Arc i runs from position i to position i+1 (mod n). Smoothing
        // joins the in-arc at the under passage to the out-arc at the over
        // passage and vice versa.
        let mut succ = vec![usize::MAX; n];
        for a in &self.arrows {
            succ[(a.under + n - 1) % n] = a.over;
            succ[(a.over + n - 1) % n] = a.under;
        }
        let mut seen = vec![false; n];
        let mut circles = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            circles += 1;
            let mut e = start;
            while !seen[e] {
                seen[e] = true;
                e = succ[e];
            }
        }
        circles
    }

    /// Canonical genus of the underlying knot diagram: (c - n + 1)/2.
    pub fn canonical_genus(&self) -> i64 {
        let c = self.len() as i64;
        let n = self.seifert_circle_count() as i64;
        (c - n + 1) / 2
    }

    /// Spherical embeddability of the signed, directed code.
    ///
    /// Sign plus arrow direction determine the local rotation at every
    /// crossing; the code is realizable iff the resulting rotation system
    /// has genus 0, i.e. exactly c + 2 faces.
    pub fn is_realizable(&self) -> bool {
        match self.face_count() {
            None => self.is_empty(),
            Some(f) => f == self.len() + 2,
        }
    }

    /// Faces of the rotation system induced by signs and directions.
    pub(crate) fn face_count(&self) -> Option<usize> {
        let c = self.len();
        if c == 0 {
            return None;
        }
        let n = 2 * c;
        // Slot layout, counterclockwise from the incoming under-strand:
        //   sign +1: under-in, over-out, under-out, over-in
        //   sign -1: under-in, over-in, under-out, over-out
        // Incidence = (arc, incoming?) where arc i runs position i -> i+1.
        #[derive(Clone, Copy)]
        struct Inc {
            arc: usize,
            incoming: bool,
        }
        let prev = |p: usize| (p + n - 1) % n;
        let mut slots: Vec<[Inc; 4]> = Vec::with_capacity(c);
        for a in &self.arrows {
            let (u, o) = (a.under, a.over);
            let s = if a.writhe > 0 {
                [
                    Inc { arc: prev(u), incoming: true },
                    Inc { arc: o, incoming: false },
                    Inc { arc: u, incoming: false },
                    Inc { arc: prev(o), incoming: true },
                ]
            } else {
                [
                    Inc { arc: prev(u), incoming: true },
                    Inc { arc: prev(o), incoming: true },
                    Inc { arc: u, incoming: false },
                    Inc { arc: o, incoming: false },
                ]
            };
            slots.push(s);
        }
        // Where does each dart land? Forward dart of arc e arrives at the
        // slot holding (e, incoming); backward at (e, outgoing).
        let mut arrive_fwd = vec![(0usize, 0usize); n];
        let mut arrive_bwd = vec![(0usize, 0usize); n];
        for (v, s) in slots.iter().enumerate() {
            for (k, inc) in s.iter().enumerate() {
                if inc.incoming {
                    arrive_fwd[inc.arc] = (v, k);
                } else {
                    arrive_bwd[inc.arc] = (v, k);
                }
            }
        }
        let next_dart = |d: usize| -> usize {
            let (arc, fwd) = (d / 2, d % 2 == 0);
            let (v, s) = if fwd { arrive_fwd[arc] } else { arrive_bwd[arc] };
            let inc = slots[v][(s + 1) % 4];
            if inc.incoming {
                2 * inc.arc + 1
            } else {
                2 * inc.arc
            }
        };
        let mut seen = vec![false; 2 * n];
        let mut faces = 0;
        for start in 0..2 * n {
            if seen[start] {
                continue;
            }
            faces += 1;
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                d = next_dart(d);
            }
        }
        Some(faces)
    }
}

fn minmax(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IntersectionGraph {
    pub vertex_count: usize,
    /// Unordered linked pairs (i < j).
    pub edges: Vec<(usize, usize)>,
    /// Per-vertex linked counts l_i.
    pub degrees: Vec<usize>,
}

impl IntersectionGraph {
    pub fn linked_pair_count(&self) -> usize {
        self.edges.len()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        let (i, j) = minmax(i, j);
        self.edges.binary_search(&(i, j)).is_ok()
    }
}

pub fn intersection_graph(g: &GaussDiagram) -> IntersectionGraph {
    let c = g.len();
    let mut edges = Vec::new();
    let mut degrees = vec![0usize; c];
    for i in 0..c {
        for j in i + 1..c {
            if g.linked(i, j) {
                edges.push((i, j));
                degrees[i] += 1;
                degrees[j] += 1;
            }
        }
    }
    IntersectionGraph { vertex_count: c, edges, degrees }
}

#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
pub struct StructuralChecks {
    pub even_valence: bool,
    pub double_connectivity: bool,
}

/// Necessary conditions for realizability: every chord crosses an even
/// number of chords, and any two adjacent intersection-graph edges lie in a
/// 3- or 4-cycle.
pub fn structural_checks(g: &GaussDiagram) -> StructuralChecks {
    let ig = intersection_graph(g);
    let even_valence = ig.degrees.iter().all(|&d| d % 2 == 0);
    let c = g.len();
    let mut double_connectivity = true;
    'outer: for v in 0..c {
        let nb: Vec<usize> = (0..c).filter(|&u| u != v && ig.adjacent(v, u)).collect();
        for (x, &a) in nb.iter().enumerate() {
            for &b in nb.iter().skip(x + 1) {
                if ig.adjacent(a, b) {
                    continue;
                }
                let four = (0..c).any(|d| d != v && ig.adjacent(d, a) && ig.adjacent(d, b));
                if !four {
                    double_connectivity = false;
                    break 'outer;
                }
            }
        }
    }
    StructuralChecks { even_valence, double_connectivity }
}

/// A "second reduction move" site: chord `a` has exactly two arrow ends
/// strictly inside one side, belonging to distinct arrows `b`, `c` that are
/// not linked with each other and point in opposite directions across `a`
/// (one head and one tail inside).
#[derive(Clone, Copy, Debug, Serialize, PartialEq, Eq)]
pub struct SecondMoveSite {
    pub chord: usize,
    /// The two positions inside the short side (in circle order).
    pub inner: [usize; 2],
    /// The arrows owning those positions.
    pub others: [usize; 2],
}

pub fn second_move_sites(g: &GaussDiagram) -> Vec<SecondMoveSite> {
    let table = g.position_table();
    let mut sites = Vec::new();
    for i in 0..g.len() {
        for from in g.arrows()[i].endpoints() {
            let side = g.side_positions(i, from);
            if side.len() != 2 {
                continue;
            }
            let (p1, p2) = (side[0], side[1]);
            let (b, b_over) = table[p1];
            let (c, c_over) = table[p2];
            if b == c || b == i || c == i {
                continue;
            }
            if g.linked(b, c) {
                continue; // a (3,3) configuration, not a second move
            }
            if b_over == c_over {
                continue; // same direction across a: a (4,2)0 configuration
            }
            // the passing strand must run straight through the tongue: its
            // two passages away from the loop are consecutive on the circle
            let n2 = 2 * g.len();
            let qb = g.arrows()[b].endpoints().into_iter().find(|&q| q != p1).unwrap();
            let qc = g.arrows()[c].endpoints().into_iter().find(|&q| q != p2).unwrap();
            if (qb + 1) % n2 != qc && (qc + 1) % n2 != qb {
                continue;
            }
            sites.push(SecondMoveSite { chord: i, inner: [p1, p2], others: [b, c] });
        }
    }
    sites
}

#[derive(Clone, Debug, Serialize)]
pub struct ReductionStatus {
    pub reducible_arrows: BTreeSet<usize>,
    pub is_reduced: bool,
    pub is_bireduced: bool,
    pub is_composite: bool,
    pub is_loop_minimal: bool,
}

pub fn reduction_status(g: &GaussDiagram) -> ReductionStatus {
    let ig = intersection_graph(g);
    let reducible_arrows: BTreeSet<usize> =
        (0..g.len()).filter(|&i| ig.degrees[i] == 0).collect();
    let is_reduced = reducible_arrows.is_empty();
    let is_bireduced = is_reduced && second_move_sites(g).is_empty();
    // (5,1) pattern: an edge (b,c) plus a chord a linked with neither end;
    // both b and c then lie entirely on one side of a. Its absence is
    // loop-minimality.
    let mut is_loop_minimal = true;
    'lm: for &(b, c) in &ig.edges {
        for a in 0..g.len() {
            if a != b && a != c && !ig.adjacent(a, b) && !ig.adjacent(a, c) {
                is_loop_minimal = false;
                break 'lm;
            }
        }
    }
    ReductionStatus {
        reducible_arrows,
        is_reduced,
        is_bireduced,
        is_composite: is_composite(g),
        is_loop_minimal,
    }
}

/// True iff the circle splits into two arcs, each holding at least one
/// complete chord and no chord spanning the cut.
pub fn is_composite(g: &GaussDiagram) -> bool {
    let c = g.len();
    let n = 2 * c;
    if c < 2 {
        return false;
    }
    // Cut at gaps g1 < g2 (gap g = before position g); part A = [g1, g2).
    for g1 in 0..n {
        for g2 in g1 + 1..n {
            let in_a = |p: usize| g1 <= p && p < g2;
            let mut a_cnt = 0;
            let mut b_cnt = 0;
            let mut spanned = false;
            for arr in g.arrows() {
                match (in_a(arr.under), in_a(arr.over)) {
                    (true, true) => a_cnt += 1,
                    (false, false) => b_cnt += 1,
                    _ => {
                        spanned = true;
                        break;
                    }
                }
            }
            if !spanned && a_cnt > 0 && b_cnt > 0 {
                return true;
            }
        }
    }
    false
}

/// The standard positive trefoil Gauss diagram (O1+ U2+ O3+ U1+ O2+ U3+).
pub fn positive_trefoil() -> GaussDiagram {
    GaussDiagram::new(vec![
        Arrow { under: 3, over: 0, writhe: 1 },
        Arrow { under: 1, over: 4, writhe: 1 },
        Arrow { under: 5, over: 2, writhe: 1 },
    ])
    .unwrap()
}

/// The torus knot (2, m) Gauss diagram: m mutually linked equal chords.
pub fn torus2(m: usize, sign: i8) -> GaussDiagram {
    let arrows = (0..m)
        .map(|i| {
            let (a, b) = (i, i + m);
            // alternate under/over so consecutive passes alternate strands
            if i % 2 == 0 {
                Arrow { under: a, over: b, writhe: sign }
            } else {
                Arrow { under: b, over: a, writhe: sign }
            }
        })
        .collect();
    GaussDiagram::new(arrows).unwrap()
}

/// The three-groups-of-two-parallel-chords diagram: chords linked iff in
/// distinct groups. Satisfies both structural checks yet is not realizable.
pub fn three_parallel_groups(writhe: i8) -> GaussDiagram {
    let pts = [(0usize, 7usize), (1, 6), (2, 9), (3, 8), (4, 11), (5, 10)];
    GaussDiagram::new(
        pts.iter().map(|&(u, o)| Arrow { under: u, over: o, writhe }).collect(),
    )
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_is_complete_graph() {
        let g = positive_trefoil();
        let ig = intersection_graph(&g);
        assert_eq!(ig.linked_pair_count(), 3);
        assert_eq!(ig.degrees, vec![2, 2, 2]);
        assert!(g.is_realizable());
        let st = structural_checks(&g);
        assert!(st.even_valence && st.double_connectivity);
        let rs = reduction_status(&g);
        assert!(rs.is_reduced && rs.is_bireduced && !rs.is_composite && rs.is_loop_minimal);
    }

    #[test]
    fn torus_2_5_is_k5() {
        let g = torus2(5, 1);
        let ig = intersection_graph(&g);
        assert_eq!(ig.linked_pair_count(), 10);
        assert!(ig.degrees.iter().all(|&d| d == 4));
        assert!(g.is_realizable());
    }

    #[test]
    fn kink_is_reducible() {
        let g = GaussDiagram::new(vec![Arrow { under: 0, over: 1, writhe: 1 }]).unwrap();
        let rs = reduction_status(&g);
        assert_eq!(rs.reducible_arrows.len(), 1);
        assert!(!rs.is_reduced);
        assert!(g.is_realizable());
    }

    #[test]
    fn three_groups_pattern_not_realizable() {
        let g = three_parallel_groups(1);
        let st = structural_checks(&g);
        assert!(st.even_valence);
        assert!(st.double_connectivity);
        assert!(!g.is_realizable());
    }

    #[test]
    fn seifert_circles_of_trefoil() {
        // sigma_1^3 closure has 2 Seifert circles; the standard trefoil
        // Gauss diagram is that closure.
        assert_eq!(positive_trefoil().seifert_circle_count(), 2);
        assert_eq!(positive_trefoil().canonical_genus(), 1);
    }

    #[test]
    fn composite_detection() {
        let g = positive_trefoil();
        let sum = g.connected_sum(&positive_trefoil());
        assert!(is_composite(&sum));
        assert!(!is_composite(&g));
        assert!(sum.is_realizable());
    }

    #[test]
    fn mirror_flips() {
        let g = positive_trefoil().mirror();
        assert!(!g.is_positive());
        assert_eq!(g.writhe(), -3);
        assert!(g.is_realizable());
    }
}

//! Oriented planar diagrams of knots and links.
//!
//! A crossing stores its sign and the four incident arc ids counterclockwise
//! from the incoming under-strand. Together with the sign this fixes the
//! role of every slot:
//!
//! sign +1: `[under-in, over-out, under-out, over-in]`
//! sign -1: `[under-in, over-in, under-out, over-out]`
//!
//! Arcs are oriented edges of the 4-valent graph; each arc id appears exactly
//! once as an in-slot and once as an out-slot. The slot lists are a rotation
//! system, i.e. the diagram knows its planar embedding.

use serde::Serialize;

use crate::error::KnotError;
use crate::gauss::{Arrow, GaussDiagram};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Crossing {
    pub sign: i8,
    pub arcs: [usize; 4],
}

impl Crossing {
    pub fn over_in_slot(&self) -> usize {
        if self.sign > 0 {
            3
        } else {
            1
        }
    }

    pub fn over_out_slot(&self) -> usize {
        if self.sign > 0 {
            1
        } else {
            3
        }
    }

    pub const UNDER_IN: usize = 0;
    pub const UNDER_OUT: usize = 2;

    fn is_in_slot(&self, slot: usize) -> bool {
        slot == Self::UNDER_IN || slot == self.over_in_slot()
    }
}

/// A directed edge side used in face traversal.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Dart {
    pub arc: usize,
    /// True if the dart runs along the arc orientation.
    pub along: bool,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    arc_count: usize,
    /// Crossing-free unknot components.
    pub extra_circles: usize,
}

impl PlanarDiagram {
    pub fn unknot() -> Self {
        PlanarDiagram { crossings: Vec::new(), arc_count: 0, extra_circles: 1 }
    }

    pub fn new(crossings: Vec<Crossing>, extra_circles: usize) -> Result<Self, KnotError> {
        let arc_count = 2 * crossings.len();
        let mut ins = vec![0usize; arc_count];
        let mut outs = vec![0usize; arc_count];
        for x in &crossings {
            if x.sign.abs() != 1 {
                return Err(KnotError::invalid("crossing sign must be +1 or -1"));
            }
            for slot in 0..4 {
                let a = x.arcs[slot];
                if a >= arc_count {
                    return Err(KnotError::invalid("arc id out of range"));
                }
                if x.is_in_slot(slot) {
                    ins[a] += 1;
                } else {
                    outs[a] += 1;
                }
            }
        }
        if !(ins.iter().all(|&k| k == 1) && outs.iter().all(|&k| k == 1)) {
            return Err(KnotError::invalid(
                "every arc must appear exactly once incoming and once outgoing",
            ));
        }
        let d = PlanarDiagram { crossings, arc_count, extra_circles };
        // Planarity of the rotation system: Euler characteristic 2 per
        // connected piece of the 4-valent graph.
        if !d.crossings.is_empty() {
            let f = d.faces().len();
            // V = c, E = 2c, and each connected piece contributes Euler
            // characteristic 2: F = E - V + 2k = c + 2k.
            let expected = d.crossing_count() + 2 * d.graph_component_count();
            if f != expected {
                return Err(KnotError::invalid(format!(
                    "rotation system is not planar: {f} faces, expected {expected}"
                )));
            }
        }
        Ok(d)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|x| x.sign as i64).sum()
    }

    pub fn is_positive(&self) -> bool {
        self.crossings.iter().all(|x| x.sign == 1)
    }

    /// (crossing, slot) where each arc leaves / arrives.
    fn arc_ends(&self) -> (Vec<(usize, usize)>, Vec<(usize, usize)>) {
        let mut from = vec![(usize::MAX, 0); self.arc_count];
        let mut to = vec![(usize::MAX, 0); self.arc_count];
        for (ci, x) in self.crossings.iter().enumerate() {
            for slot in 0..4 {
                let a = x.arcs[slot];
                if x.is_in_slot(slot) {
                    to[a] = (ci, slot);
                } else {
                    from[a] = (ci, slot);
                }
            }
        }
        (from, to)
    }

    /// Next arc when traveling through the diagram along the orientation.
    pub fn next_arc(&self, arc: usize) -> usize {
        let (_, to) = self.arc_ends();
        let (ci, slot) = to[arc];
        let x = &self.crossings[ci];
        if slot == Crossing::UNDER_IN {
            x.arcs[Crossing::UNDER_OUT]
        } else {
            x.arcs[x.over_out_slot()]
        }
    }

    /// Link components as arc cycles; crossing-free circles not included.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let (_, to) = self.arc_ends();
        let next = |arc: usize| {
            let (ci, slot) = to[arc];
            let x = &self.crossings[ci];
            if slot == Crossing::UNDER_IN {
                x.arcs[Crossing::UNDER_OUT]
            } else {
                x.arcs[x.over_out_slot()]
            }
        };
        let mut seen = vec![false; self.arc_count];
        let mut comps = Vec::new();
        for start in 0..self.arc_count {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut a = start;
            while !seen[a] {
                seen[a] = true;
                cycle.push(a);
                a = next(a);
            }
            comps.push(cycle);
        }
        comps
    }

    pub fn component_count(&self) -> usize {
        self.components().len() + self.extra_circles
    }

    /// Connected components of the underlying 4-valent graph.
    fn graph_component_count(&self) -> usize {
        let n = self.crossing_count();
        if n == 0 {
            return 0;
        }
        let (from, to) = self.arc_ends();
        let mut uf = UnionFind::new(n);
        for a in 0..self.arc_count {
            uf.union(from[a].0, to[a].0);
        }
        uf.count()
    }

    pub fn is_connected(&self) -> bool {
        self.extra_circles == 0 && self.graph_component_count() <= 1
    }

    /// Faces of the embedding, as dart cycles.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let (from, to) = self.arc_ends();
        // Traveling on a dart we arrive at a crossing slot; the face
        // continues on the dart leaving from the next slot counterclockwise.
        let next_dart = |d: Dart| -> Dart {
            let (ci, slot) = if d.along { to[d.arc] } else { from[d.arc] };
            let x = &self.crossings[ci];
            let s2 = (slot + 1) % 4;
            let a2 = x.arcs[s2];
            Dart { arc: a2, along: !x.is_in_slot(s2) }
        };
        let mut seen = vec![[false; 2]; self.arc_count];
        let mut faces = Vec::new();
        for arc in 0..self.arc_count {
            for along in [true, false] {
                if seen[arc][along as usize] {
                    continue;
                }
                let mut face = Vec::new();
                let mut d = Dart { arc, along };
                while !seen[d.arc][d.along as usize] {
                    seen[d.arc][d.along as usize] = true;
                    face.push(d);
                    d = next_dart(d);
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Seifert circles: arc -> circle id, and the number of circles
    /// (crossing-free extra circles included in the count).
    pub fn seifert_circles(&self) -> (Vec<usize>, usize) {
        let mut uf = UnionFind::new(self.arc_count.max(1));
        for x in &self.crossings {
            // orientation-respecting smoothing: under-in joins over-out,
            // over-in joins under-out
            uf.union(x.arcs[Crossing::UNDER_IN], x.arcs[x.over_out_slot()]);
            uf.union(x.arcs[x.over_in_slot()], x.arcs[Crossing::UNDER_OUT]);
        }
        let mut ids = vec![0usize; self.arc_count];
        let mut label = std::collections::HashMap::new();
        for a in 0..self.arc_count {
            let r = uf.find(a);
            let next_id = label.len();
            ids[a] = *label.entry(r).or_insert(next_id);
        }
        let base = if self.arc_count == 0 { 0 } else { label.len() };
        (ids, base + self.extra_circles)
    }

    /// Mirror image: all crossings switched (sign flipped), embedding kept.
    pub fn mirror(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .map(|x| {
                let a = x.arcs;
                if x.sign > 0 {
                    Crossing { sign: -1, arcs: [a[3], a[0], a[1], a[2]] }
                } else {
                    Crossing { sign: 1, arcs: [a[1], a[2], a[3], a[0]] }
                }
            })
            .collect();
        PlanarDiagram { crossings, arc_count: self.arc_count, extra_circles: self.extra_circles }
    }

    /// Gauss diagram of a knot diagram (single component, no extra circles).
    pub fn to_gauss(&self) -> Result<GaussDiagram, KnotError> {
        if self.extra_circles > 0 || self.components().len() != 1 {
            return Err(KnotError::precondition("to_gauss requires a knot diagram"));
        }
        if self.crossings.is_empty() {
            return Ok(GaussDiagram::empty());
        }
        let comp = &self.components()[0];
        let (_, to) = self.arc_ends();
        let mut under_pos = vec![usize::MAX; self.crossing_count()];
        let mut over_pos = vec![usize::MAX; self.crossing_count()];
        for (pos, &arc) in comp.iter().enumerate() {
            let (ci, slot) = to[arc];
            if slot == Crossing::UNDER_IN {
                under_pos[ci] = pos;
            } else {
                over_pos[ci] = pos;
            }
        }
        let arrows = (0..self.crossing_count())
            .map(|ci| Arrow {
                under: under_pos[ci],
                over: over_pos[ci],
                writhe: self.crossings[ci].sign,
            })
            .collect();
        GaussDiagram::new(arrows)
    }

    /// Rebuild a planar diagram from a realizable signed Gauss diagram.
    pub fn from_gauss(g: &GaussDiagram) -> Result<Self, KnotError> {
        if !g.is_realizable() {
            return Err(KnotError::precondition("Gauss diagram is not realizable"));
        }
        if g.is_empty() {
            return Ok(PlanarDiagram::unknot());
        }
        let n = 2 * g.len();
        let prev = |p: usize| (p + n - 1) % n;
        let crossings = g
            .arrows()
            .iter()
            .map(|a| {
                let (u, o) = (a.under, a.over);
                let arcs = if a.writhe > 0 {
                    [prev(u), o, u, prev(o)]
                } else {
                    [prev(u), prev(o), u, o]
                };
                Crossing { sign: a.writhe, arcs }
            })
            .collect();
        PlanarDiagram::new(crossings, 0)
    }

    /// Connected sum: splice `other` into arc `0` of self at arc `0` of other.
    pub fn connected_sum(&self, other: &Self) -> Result<Self, KnotError> {
        if self.crossings.is_empty() {
            return Ok(other.clone());
        }
        if other.crossings.is_empty() {
            return Ok(self.clone());
        }
        let a1 = self.arc_count;
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|x| Crossing {
            sign: x.sign,
            arcs: [x.arcs[0] + a1, x.arcs[1] + a1, x.arcs[2] + a1, x.arcs[3] + a1],
        }));
        // self arc 0: from X to Y; other arc 0 (now a1): from P to Q.
        // After the splice: X -> (arc 0) -> Q and P -> (arc a1) -> Y.
        let (_, to_self) = self.arc_ends();
        let (_, to_other) = other.arc_ends();
        let (y, sy) = to_self[0];
        let (q, sq) = to_other[0];
        crossings[y].arcs[sy] = a1;
        crossings[self.crossing_count() + q].arcs[sq] = 0;
        PlanarDiagram::new(crossings, self.extra_circles + other.extra_circles)
    }

    /// Switch over- and under-strand at one crossing (sign flips).
    pub fn switch_crossing(&self, ci: usize) -> Self {
        let mut crossings = self.crossings.clone();
        let x = crossings[ci];
        let a = x.arcs;
        crossings[ci] = if x.sign > 0 {
            Crossing { sign: -1, arcs: [a[3], a[0], a[1], a[2]] }
        } else {
            Crossing { sign: 1, arcs: [a[1], a[2], a[3], a[0]] }
        };
        PlanarDiagram { crossings, arc_count: self.arc_count, extra_circles: self.extra_circles }
    }

    /// Oriented smoothing of one crossing (the skein L0 resolution).
    pub fn smooth_crossing(&self, ci: usize) -> Self {
        let x = self.crossings[ci];
        let pairs = [
            (x.arcs[Crossing::UNDER_IN], x.arcs[x.over_out_slot()]),
            (x.arcs[x.over_in_slot()], x.arcs[Crossing::UNDER_OUT]),
        ];
        let mut extra = self.extra_circles;
        let mut subst: Vec<usize> = (0..self.arc_count).collect();
        for (inc, out) in pairs {
            if inc == out {
                extra += 1; // the strand closes into a free circle
            } else {
                subst[out] = inc;
            }
        }
        // One pass suffices: the two pairs touch disjoint out-arcs, but a
        // chain (in1 -> out1 == in2 -> out2) needs resolving.
        for a in 0..self.arc_count {
            if subst[subst[a]] != subst[a] {
                subst[a] = subst[subst[a]];
            }
        }
        let mut crossings: Vec<Crossing> = self
            .crossings
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != ci)
            .map(|(_, x)| Crossing {
                sign: x.sign,
                arcs: [subst[x.arcs[0]], subst[x.arcs[1]], subst[x.arcs[2]], subst[x.arcs[3]]],
            })
            .collect();
        // compact arc ids
        let mut newid = vec![usize::MAX; self.arc_count];
        let mut used: Vec<usize> = crossings.iter().flat_map(|x| x.arcs).collect();
        used.sort_unstable();
        used.dedup();
        for (k, &a) in used.iter().enumerate() {
            newid[a] = k;
        }
        // A merged strand that no longer touches any crossing is a circle.
        let mut lost = Vec::new();
        for (inc, out) in pairs {
            if inc != out && newid[subst[inc]] == usize::MAX {
                lost.push(subst[inc]);
            }
        }
        lost.dedup();
        extra += lost.len();
        for x in &mut crossings {
            for a in &mut x.arcs {
                *a = newid[*a];
            }
        }
        PlanarDiagram { crossings, arc_count: used.len(), extra_circles: extra }
    }

    /// First crossing met on its under-strand at first visit, walking the
    /// components in order. `None` means the diagram is descending.
    pub fn first_bad_crossing(&self) -> Option<usize> {
        let (_, to) = self.arc_ends();
        let mut visited = vec![false; self.crossing_count()];
        for comp in self.components() {
            for &arc in &comp {
                let (ci, slot) = to[arc];
                if !visited[ci] {
                    visited[ci] = true;
                    if slot == Crossing::UNDER_IN {
                        return Some(ci);
                    }
                }
            }
        }
        None
    }

    /// Insert a kink (Reidemeister I) of the given sign on an arc.
    pub fn r1_insert(&self, arc: usize, sign: i8) -> Result<Self, KnotError> {
        let (_, to) = self.arc_ends();
        let mut crossings = self.crossings.clone();
        let a2 = self.arc_count; // continuation of `arc`
        let b = self.arc_count + 1; // the loop
        let (y, sy) = to[arc];
        crossings[y].arcs[sy] = a2;
        let x = if sign > 0 {
            // [under-in, over-out, under-out, over-in]
            Crossing { sign: 1, arcs: [arc, a2, b, b] }
        } else {
            // [under-in, over-in, under-out, over-out]
            Crossing { sign: -1, arcs: [arc, b, b, a2] }
        };
        crossings.push(x);
        PlanarDiagram::new(crossings, self.extra_circles)
    }

    /// Reidemeister II poke: push arc `a` over arc `b` across a face that
    /// has darts for both. `a_along`/`b_along` say in which direction the
    /// shared face traverses each arc (as returned by [`Self::faces`]).
    pub fn r2_insert(
        &self,
        da: Dart,
        db: Dart,
    ) -> Result<Self, KnotError> {
        let (a, b) = (da.arc, db.arc);
        if a == b {
            return Err(KnotError::precondition("R2 needs two distinct arcs"));
        }
        let (_, to) = self.arc_ends();
        let mut crossings = self.crossings.clone();
        // Plane picture: the shared face between the strands; boundary
        // traversal puts `a` on top running +x and `b` on bottom running -x
        // (in dart direction). Strand `a` is pushed over `b`, crossing it at
        // `x` (left) and `y` (right).
        //
        // Geometric directions: Da = +x iff da.along, Db = -x iff db.along.
        let a_right = da.along;
        let b_left = db.along;
        // New arcs: a splits into (a, a_mid, a_end); b into (b, b_end).
        let a_mid = self.arc_count;
        let a_end = self.arc_count + 1;
        let b_end = self.arc_count + 2;
        let (ya, sa) = to[a];
        let (yb, sb) = to[b];
        crossings[ya].arcs[sa] = a_end;
        crossings[yb].arcs[sb] = b_end;
        let xi = crossings.len(); // left crossing
        let yi = crossings.len() + 1; // right crossing
        // a's segments in arc order: first -> mid -> last.
        // If a runs +x it meets x first (downward there), else y first.
        // b's segments: if b runs -x it meets y first, else x first.
        let (a_first, a_second) = if a_right { (xi, yi) } else { (yi, xi) };
        let (b_first, b_second) = if b_left { (yi, xi) } else { (xi, yi) };
        // Per crossing, record the incidences:
        //  - vertical strand (a): N and S ends; down: in at N, out at S.
        //  - horizontal strand (b): W and E ends.
        // a is downward at its first crossing, upward at its second.
        // Slot array ccw from under-in (b's in side):
        //  Db = -x (west): [b_in(E), a_N, b_out(W), a_S]
        //  Db = +x (east): [b_in(W), a_S, b_out(E), a_N]
        // Signs: down/west -1, down/east +1, up/west +1, up/east -1.
        let mut arcs_at = [[usize::MAX; 4]; 2]; // [xi, yi] relative: index 0 = xi
        let mut sign_at = [0i8; 2];
        let idx = |ci: usize| ci - xi;
        {
            // b through its crossings: (b, b_mid?) -- b has only two
            // segments, so the mid arc between the crossings is fresh.
            let b_mid = self.arc_count + 3;
            // a segments: a (into first), a_mid (between), a_end (out of second)
            // b segments: b (into first), b_mid (between), b_end (out of second)
            let (a_in, a_btw, a_out) = (a, a_mid, a_end);
            let (b_in, b_btw, b_out) = (b, b_mid, b_end);
            // fill per crossing
            for (ci, vertical_down) in [(a_first, true), (a_second, false)] {
                let k = idx(ci);
                // a's ends at this crossing
                let (n_arc, s_arc) = if vertical_down {
                    // in at N, out at S
                    let inn = if ci == a_first { a_in } else { a_btw };
                    let out = if ci == a_second { a_out } else { a_btw };
                    (inn, out)
                } else {
                    let inn = if ci == a_first { a_in } else { a_btw };
                    let out = if ci == a_second { a_out } else { a_btw };
                    (out, inn)
                };
                // b's ends at this crossing
                let b_inn = if ci == b_first { b_in } else { b_btw };
                let b_out_ = if ci == b_second { b_out } else { b_btw };
                let (slots, sign) = if b_left {
                    // Db = west: [b_in(E), aN, b_out(W), aS]
                    ([b_inn, n_arc, b_out_, s_arc], if vertical_down { -1 } else { 1 })
                } else {
                    // Db = east: [b_in(W), aS, b_out(E), aN]
                    ([b_inn, s_arc, b_out_, n_arc], if vertical_down { 1 } else { -1 })
                };
                arcs_at[k] = slots;
                sign_at[k] = sign;
            }
        }
        crossings.push(Crossing { sign: sign_at[0], arcs: arcs_at[0] });
        crossings.push(Crossing { sign: sign_at[1], arcs: arcs_at[1] });
        PlanarDiagram::new(crossings, self.extra_circles)
    }
}

/// Closure of a braid word as a planar diagram.
pub fn braid_closure(n: usize, letters: &[i32]) -> Result<PlanarDiagram, KnotError> {
    for &l in letters {
        if l == 0 || l.unsigned_abs() as usize >= n {
            return Err(KnotError::invalid("braid letter out of range"));
        }
    }
    // Temporary arc ids: 0..n are the strand tops; every crossing output
    // gets a fresh id; at closure, bottoms are fused with tops.
    let mut next_id = n;
    let mut cur: Vec<usize> = (0..n).collect();
    struct TmpX {
        sign: i8,
        arcs: [usize; 4],
    }
    let mut tmp: Vec<TmpX> = Vec::new();
    for &l in letters {
        let i = l.unsigned_abs() as usize - 1; // left strand position
        let (in_l, in_r) = (cur[i], cur[i + 1]);
        let (out_l, out_r) = (next_id, next_id + 1);
        next_id += 2;
        if l > 0 {
            // right strand passes over to the left
            tmp.push(TmpX { sign: 1, arcs: [in_l, out_l, out_r, in_r] });
        } else {
            tmp.push(TmpX { sign: -1, arcs: [in_r, in_l, out_l, out_r] });
        }
        cur[i] = out_l;
        cur[i + 1] = out_r;
    }
    // Fuse bottoms with tops.
    let mut subst: Vec<usize> = (0..next_id).collect();
    let mut extra = 0usize;
    for i in 0..n {
        if cur[i] == i {
            extra += 1; // untouched strand: a free circle
        } else {
            subst[cur[i]] = i;
        }
    }
    // Compact used arc ids.
    let mut used: Vec<usize> = Vec::new();
    let mut newid = vec![usize::MAX; next_id];
    for x in &tmp {
        for &a in &x.arcs {
            let a = subst[a];
            if newid[a] == usize::MAX {
                newid[a] = usize::MAX - 1; // mark
                used.push(a);
            }
        }
    }
    used.sort_unstable();
    for (k, &a) in used.iter().enumerate() {
        newid[a] = k;
    }
    let crossings = tmp
        .into_iter()
        .map(|x| Crossing {
            sign: x.sign,
            arcs: [
                newid[subst[x.arcs[0]]],
                newid[subst[x.arcs[1]]],
                newid[subst[x.arcs[2]]],
                newid[subst[x.arcs[3]]],
            ],
        })
        .collect();
    PlanarDiagram::new(crossings, extra)
}

#[derive(Clone, Debug)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    pub fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let r = self.find(self.parent[x]);
            self.parent[x] = r;
            r
        } else {
            x
        }
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    pub fn count(&mut self) -> usize {
        let n = self.parent.len();
        (0..n).filter(|&i| self.find(i) == i).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_closure() {
        let d = braid_closure(2, &[1, 1, 1]).unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.writhe(), 3);
        assert_eq!(d.component_count(), 1);
        let (_, n) = d.seifert_circles();
        assert_eq!(n, 2);
        assert_eq!(d.faces().len(), 5);
        let g = d.to_gauss().unwrap();
        assert!(g.is_realizable());
        assert_eq!(crate::vassiliev::v3_gauss(&g).unwrap(), 4);
        assert_eq!(crate::vassiliev::v2_gauss(&g).unwrap(), 1);
    }

    #[test]
    fn figure_eight_closure() {
        let d = braid_closure(3, &[1, -2, 1, -2]).unwrap();
        assert_eq!(d.crossing_count(), 4);
        assert_eq!(d.writhe(), 0);
        assert_eq!(d.component_count(), 1);
        let (_, n) = d.seifert_circles();
        assert_eq!(n, 3);
        let g = d.to_gauss().unwrap();
        assert!(g.is_realizable());
        let st = crate::gauss::structural_checks(&g);
        assert!(st.even_valence && st.double_connectivity);
        assert_eq!(crate::vassiliev::v2_gauss(&g).unwrap(), -1);
        assert_eq!(crate::vassiliev::v3_gauss(&g).unwrap(), 0);
    }

    #[test]
    fn gauss_roundtrip() {
        let d = braid_closure(2, &[1, 1, 1, 1, 1]).unwrap();
        let g = d.to_gauss().unwrap();
        let d2 = PlanarDiagram::from_gauss(&g).unwrap();
        let g2 = d2.to_gauss().unwrap();
        assert_eq!(
            crate::vassiliev::v3_gauss(&g).unwrap(),
            crate::vassiliev::v3_gauss(&g2).unwrap()
        );
        assert_eq!(d2.crossing_count(), 5);
        assert_eq!(d2.seifert_circles().1, 2);
    }

    #[test]
    fn mirror_writhe() {
        let d = braid_closure(2, &[1, 1, 1]).unwrap();
        let m = d.mirror();
        assert_eq!(m.writhe(), -3);
        let g = m.to_gauss().unwrap();
        assert_eq!(crate::vassiliev::v3_gauss(&g).unwrap(), -4);
    }

    #[test]
    fn r1_preserves_invariants() {
        let d = braid_closure(2, &[1, 1, 1]).unwrap();
        for arc in 0..d.arc_count() {
            for sign in [1i8, -1] {
                let d2 = d.r1_insert(arc, sign).unwrap();
                assert_eq!(d2.crossing_count(), 4);
                let g = d2.to_gauss().unwrap();
                assert_eq!(crate::vassiliev::v3_gauss(&g).unwrap(), 4);
                assert_eq!(crate::vassiliev::v2_gauss(&g).unwrap(), 1);
            }
        }
    }

    #[test]
    fn r2_preserves_invariants() {
        let d = braid_closure(2, &[1, 1, 1]).unwrap();
        let mut tried = 0;
        for face in d.faces() {
            for (i, &da) in face.iter().enumerate() {
                for &db in face.iter().skip(i + 1) {
                    if da.arc == db.arc {
                        continue;
                    }
                    let d2 = d.r2_insert(da, db).unwrap();
                    assert_eq!(d2.crossing_count(), 5);
                    assert_eq!(d2.writhe(), 3);
                    let g = d2.to_gauss().unwrap();
                    assert_eq!(crate::vassiliev::v3_gauss(&g).unwrap(), 4, "darts {da:?} {db:?}");
                    assert_eq!(crate::vassiliev::v2_gauss(&g).unwrap(), 1);
                    tried += 1;
                }
            }
        }
        assert!(tried > 0);
    }

    #[test]
    fn connected_sum_adds_v3() {
        let t = braid_closure(2, &[1, 1, 1]).unwrap();
        let s = t.connected_sum(&t).unwrap();
        assert_eq!(s.crossing_count(), 6);
        assert_eq!(s.component_count(), 1);
        let g = s.to_gauss().unwrap();
        assert_eq!(crate::vassiliev::v3_gauss(&g).unwrap(), 8);
        assert_eq!(crate::vassiliev::v2_gauss(&g).unwrap(), 2);
    }

    #[test]
    fn split_braid_closure() {
        // sigma_1 in B_3 leaves strand 3 as a free circle.
        let d = braid_closure(3, &[1]).unwrap();
        assert_eq!(d.extra_circles, 1);
        assert_eq!(d.component_count(), 2);
    }
}

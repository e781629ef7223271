//! Diagram transformations: reduction moves on Gauss diagrams, the loop move
//! with its unknotting ledger, loop-move trivialization, and Whitehead
//! doubling of planar diagrams.

use serde::Serialize;
use std::collections::BTreeSet;

use crate::error::KnotError;
use crate::gauss::{intersection_graph, second_move_sites, Arrow, GaussDiagram};
use crate::planar::{Crossing, Dart, PlanarDiagram};
use crate::vassiliev::{v2_gauss, v3_gauss};

#[derive(Clone, Debug, Serialize)]
pub enum MoveEntry {
    /// Deletion of an isolated (reducible) chord.
    DeleteIsolated { arrow: usize },
    /// Second reduction move at `chord`, exchanging the inner ends of `others`.
    SecondMove { chord: usize, others: [usize; 2] },
    /// Loop move at chord `p`: k linked arrows removed via `switched` = k/2
    /// crossing switches, then `removed_reducible` newly isolated chords.
    LoopMove { p: usize, k: usize, switched: usize, removed_reducible: usize, v2_drop: i64 },
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct MoveTrace {
    pub entries: Vec<MoveEntry>,
    pub total_switches: usize,
}

impl MoveTrace {
    fn push(&mut self, e: MoveEntry) {
        if let MoveEntry::LoopMove { switched, .. } = e {
            self.total_switches += switched;
        }
        self.entries.push(e);
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReduceRecord {
    pub result: GaussDiagram,
    pub trace: MoveTrace,
}

/// Delete all isolated chords (cascading) and record the deletions. Arrow
/// ids in the trace refer to the diagram state at the time of each deletion.
fn delete_isolated(g: &GaussDiagram, trace: &mut MoveTrace) -> (GaussDiagram, usize) {
    let mut cur = g.clone();
    let mut removed = 0;
    loop {
        let ig = intersection_graph(&cur);
        let isolated: BTreeSet<usize> =
            (0..cur.len()).filter(|&i| ig.degrees[i] == 0).collect();
        if isolated.is_empty() {
            return (cur, removed);
        }
        for &i in &isolated {
            trace.push(MoveEntry::DeleteIsolated { arrow: i });
        }
        removed += isolated.len();
        cur = cur.delete_arrows(&isolated);
    }
}

/// One combinatorial candidate for the outcome of a second move: delete the
/// chord, re-insert the two inner ends near their old location (`shift` of
/// the gap between the remaining ends by -1, 0 or +1 slots, pair optionally
/// reversed), optionally trading over/under on both owner chords.
fn second_move_candidate(
    g: &GaussDiagram,
    site: &crate::gauss::SecondMoveSite,
    shift: i64,
    reverse_pair: bool,
    flip_roles: bool,
) -> Option<GaussDiagram> {
    let [p1, p2] = site.inner;
    let a = &g.arrows()[site.chord];
    let n = 2 * g.len();
    // remaining positions except the moved pair, in circle order
    let keep: Vec<usize> = (0..n)
        .filter(|&p| p != p1 && p != p2 && !a.endpoints().contains(&p))
        .collect();
    let pair = if reverse_pair { [p2, p1] } else { [p1, p2] };
    let mut order: Vec<usize> = Vec::with_capacity(n - 2);
    if keep.is_empty() {
        order.extend(pair);
    } else {
        // in place, the pair sits before the first kept position above p2
        let idx0 = keep.iter().position(|&p| p > p2).unwrap_or(keep.len()) as i64;
        let idx = (idx0 + shift).rem_euclid(keep.len() as i64) as usize;
        order.extend(&keep[..idx]);
        order.extend(pair);
        order.extend(&keep[idx..]);
    }
    let mut newpos = vec![usize::MAX; n];
    for (s, &p) in order.iter().enumerate() {
        newpos[p] = s;
    }
    let arrows: Vec<Arrow> = g
        .arrows()
        .iter()
        .enumerate()
        .filter(|&(id, _)| id != site.chord)
        .map(|(id, ar)| {
            let (mut under, mut over) = (newpos[ar.under], newpos[ar.over]);
            if flip_roles && site.others.contains(&id) {
                std::mem::swap(&mut under, &mut over);
            }
            Arrow { under, over, writhe: ar.writhe }
        })
        .collect();
    GaussDiagram::new(arrows).ok()
}

/// Apply the second reduction move at the first workable site: the strand
/// crossing the tongue of a chord is slid out across the crossing
/// (Reidemeister III), after which the chord is removed (Reidemeister I).
/// The slide's combinatorial outcome depends on the local embedding, so the
/// few possible outcomes are tried and the first one certified by the
/// invariants (realizability, v2, v3, and the Jones polynomial on small
/// diagrams) is taken.
fn apply_second_move(g: &GaussDiagram, trace: &mut MoveTrace) -> Option<GaussDiagram> {
    if !g.is_realizable() {
        return None; // the move is geometric; unrealizable codes stay put
    }
    let (v2, v3) = (v2_gauss(g).ok()?, v3_gauss(g).ok()?);
    let jones_of = |gd: &GaussDiagram| {
        PlanarDiagram::from_gauss(gd).ok().and_then(|d| crate::poly::bracket::jones(&d).ok())
    };
    let jref = if g.len() <= 16 { jones_of(g) } else { None };
    for site in second_move_sites(g) {
        for flip_roles in [true, false] {
            for shift in [0i64, -1, 1] {
                for reverse_pair in [true, false] {
                    let Some(cand) = second_move_candidate(g, &site, shift, reverse_pair, flip_roles)
                    else {
                        continue;
                    };
                    if !cand.is_realizable() {
                        continue;
                    }
                    if v2_gauss(&cand).ok() != Some(v2) || v3_gauss(&cand).ok() != Some(v3) {
                        continue;
                    }
                    if let Some(jr) = &jref {
                        if jones_of(&cand).as_ref() != Some(jr) {
                            continue;
                        }
                    }
                    trace.push(MoveEntry::SecondMove { chord: site.chord, others: site.others });
                    return Some(cand);
                }
            }
        }
    }
    None
}

/// Reduce until bireduced: cascade isolated-chord deletions and second
/// moves. v2/v3 are invariant under both moves; checked on realizable input.
pub fn reduce_diagram(g: &GaussDiagram) -> Result<ReduceRecord, KnotError> {
    let check = g.is_realizable();
    let before = if check { Some((v2_gauss(g)?, v3_gauss(g)?)) } else { None };
    let mut trace = MoveTrace::default();
    let mut cur = g.clone();
    loop {
        cur = delete_isolated(&cur, &mut trace).0;
        match apply_second_move(&cur, &mut trace) {
            Some(next) => cur = next,
            None => break,
        }
    }
    if let Some((v2, v3)) = before {
        if cur.is_realizable() {
            let (r2, r3) = (v2_gauss(&cur)?, v3_gauss(&cur)?);
            if (r2, r3) != (v2, v3) {
                return Err(KnotError::invalid(format!(
                    "reduction changed invariants: v2 {v2}->{r2}, v3 {v3}->{r3}"
                )));
            }
        }
    }
    Ok(ReduceRecord { result: cur, trace })
}

#[derive(Clone, Debug, Serialize)]
pub struct LoopRecord {
    pub result: GaussDiagram,
    pub switched: usize,
    pub removed_reducible: usize,
    pub v2_drop: i64,
}

fn complete_chords_inside(g: &GaussDiagram, p: usize, from: usize) -> usize {
    let table = g.position_table();
    let a = &g.arrows()[p];
    let n = 2 * g.len();
    let to = if a.under == from { a.over } else { a.under };
    let mut ids = std::collections::HashMap::new();
    let mut q = (from + 1) % n;
    while q != to {
        let (id, _) = table[q];
        *ids.entry(id).or_insert(0usize) += 1;
        q = (q + 1) % n;
    }
    ids.values().filter(|&&k| k == 2).count()
}

/// The loop condition: one side of chord p holds no complete chord.
pub fn loop_condition(g: &GaussDiagram, p: usize) -> bool {
    g.arrows()[p]
        .endpoints()
        .iter()
        .any(|&from| complete_chords_inside(g, p, from) == 0)
}

/// Loop move at chord p of a positive diagram: switch k/2 crossings so the
/// loop through p can be pulled free, removing the k arrows linked with p,
/// then delete the newly reducible chords (p among them).
pub fn loop_move(g: &GaussDiagram, p: usize) -> Result<LoopRecord, KnotError> {
    if !g.is_positive() {
        return Err(KnotError::precondition("loop move is defined for positive diagrams"));
    }
    if p >= g.len() {
        return Err(KnotError::invalid(format!("no chord {p}")));
    }
    if !loop_condition(g, p) {
        return Err(KnotError::precondition(
            "loop condition violated: both sides of p hold a complete chord",
        ));
    }
    let linked: BTreeSet<usize> = (0..g.len()).filter(|&j| j != p && g.linked(p, j)).collect();
    let k = linked.len();
    if k == 0 {
        return Err(KnotError::precondition("chord p is isolated (k = 0); delete it instead"));
    }
    debug_assert_eq!(k % 2, 0, "even valence");
    let v2_before = v2_gauss(g)?;
    let after_deletion = g.delete_arrows(&linked);
    let mut trace = MoveTrace::default();
    let (result, removed_reducible) = delete_isolated(&after_deletion, &mut trace);
    let v2_after = v2_gauss(&result)?;
    let v2_drop = v2_before - v2_after;
    let bound = (k as i64 + 2 * removed_reducible as i64) / 4; // floor(k/4 + c/2)
    if v2_drop < bound {
        return Err(KnotError::invalid(format!(
            "loop move accounting violated: v2 drop {v2_drop} < {bound}"
        )));
    }
    Ok(LoopRecord { result, switched: k / 2, removed_reducible, v2_drop })
}

#[derive(Clone, Debug, Serialize)]
pub struct TrivializeRecord {
    pub trace: MoveTrace,
    pub total_switches: usize,
    /// Per-loop-move v2 decreases, in move order.
    pub v2_ledger: Vec<i64>,
}

/// Trivialize a positive diagram by loop moves (with isolated-chord
/// clean-up); the switch total is an unknotting-sequence length.
pub fn trivialize_by_loops(g: &GaussDiagram) -> Result<TrivializeRecord, KnotError> {
    if !g.is_positive() {
        return Err(KnotError::precondition("loop trivialization needs a positive diagram"));
    }
    let c0 = g.len() as i64;
    let v2_0 = v2_gauss(g)?;
    let g_can = if g.is_realizable() { g.canonical_genus() } else { 0 };
    let mut trace = MoveTrace::default();
    let mut ledger = Vec::new();
    let mut cur = delete_isolated(g, &mut trace).0;
    while !cur.is_empty() {
        // p: smallest id among chords of maximal linked count that satisfy
        // the loop condition
        let ig = intersection_graph(&cur);
        let p = (0..cur.len())
            .filter(|&i| loop_condition(&cur, i) && ig.degrees[i] > 0)
            .max_by(|&a, &b| ig.degrees[a].cmp(&ig.degrees[b]).then(b.cmp(&a)))
            .ok_or_else(|| KnotError::invalid("no loop chord on a nonempty positive diagram"))?;
        let k = ig.degrees[p];
        let before = cur.len() as i64;
        let rec = loop_move(&cur, p)?;
        let crossing_drop = before - rec.result.len() as i64;
        // Lemma-style per-move accounting: 5 * v2 drop >= crossing drop + k/2
        if 5 * rec.v2_drop < crossing_drop + (k as i64) / 2 {
            return Err(KnotError::invalid(format!(
                "per-move ledger violated at p={p}: 5*{} < {} + {}",
                rec.v2_drop,
                crossing_drop,
                k / 2
            )));
        }
        trace.push(MoveEntry::LoopMove {
            p,
            k,
            switched: rec.switched,
            removed_reducible: rec.removed_reducible,
            v2_drop: rec.v2_drop,
        });
        ledger.push(rec.v2_drop);
        cur = rec.result;
    }
    let total = trace.total_switches;
    if 5 * v2_0 < c0 + total as i64 {
        return Err(KnotError::invalid(format!(
            "trivialization ledger violated: 5*{v2_0} < {c0} + {total}"
        )));
    }
    if (total as i64) < g_can {
        return Err(KnotError::invalid(format!(
            "switch total {total} below canonical genus {g_can}"
        )));
    }
    Ok(TrivializeRecord { trace, total_switches: total, v2_ledger: ledger })
}

/// Untwisted Whitehead double with the given clasp sign.
///
/// Construction: blackboard-framed anti-parallel two-cable; the two cable
/// strands of one arc are re-joined crosswise into a single hairpin curve;
/// |w| two-crossing twist blocks of sign sgn(w) cancel the blackboard
/// framing; a two-crossing clasp of the requested sign hooks the two
/// connector arcs. Each block/clasp is an R2 poke with one crossing switched.
pub fn whitehead_double(d: &PlanarDiagram, clasp_sign: i8) -> Result<PlanarDiagram, KnotError> {
    if clasp_sign.abs() != 1 {
        return Err(KnotError::invalid("clasp sign must be +1 or -1"));
    }
    if d.component_count() != 1 {
        return Err(KnotError::precondition("Whitehead double is defined for knot diagrams"));
    }
    if d.crossing_count() == 0 {
        return Ok(PlanarDiagram::unknot());
    }
    let arcs0 = d.arc_count();
    // Anti-parallel cable: arc a doubles into A(a) = 2a (parallel) and
    // B(a) = 2a+1 (reversed); each crossing becomes four, with four fresh
    // middle arcs. Slot tables derived from the two-lane plane picture.
    let a_of = |a: usize| 2 * a;
    let b_of = |a: usize| 2 * a + 1;
    let mut crossings: Vec<Crossing> = Vec::with_capacity(4 * d.crossing_count());
    for (ci, x) in d.crossings().iter().enumerate() {
        let base = 2 * arcs0 + 4 * ci;
        let (mu_a, mu_b, mo_a, mo_b) = (base, base + 1, base + 2, base + 3);
        let (uin, uout) = (x.arcs[0], x.arcs[2]);
        let (oin, oout) = (x.arcs[x.over_in_slot()], x.arcs[x.over_out_slot()]);
        if x.sign > 0 {
            crossings.push(Crossing { sign: 1, arcs: [mu_a, mo_a, a_of(uout), a_of(oin)] });
            crossings.push(Crossing { sign: -1, arcs: [a_of(uin), mo_b, mu_a, b_of(oin)] });
            crossings.push(Crossing { sign: -1, arcs: [b_of(uout), mo_a, mu_b, a_of(oout)] });
            crossings.push(Crossing { sign: 1, arcs: [mu_b, mo_b, b_of(uin), b_of(oout)] });
        } else {
            crossings.push(Crossing { sign: -1, arcs: [a_of(uin), mo_a, mu_a, a_of(oout)] });
            crossings.push(Crossing { sign: 1, arcs: [mu_a, mo_b, a_of(uout), b_of(oout)] });
            crossings.push(Crossing { sign: 1, arcs: [mu_b, mo_a, b_of(uin), a_of(oin)] });
            crossings.push(Crossing { sign: -1, arcs: [b_of(uout), mo_b, mu_b, b_of(oin)] });
        }
    }
    // Hairpin rewiring at original arc 0: swap the destinations of its two
    // cable copies, merging the two cable components into one curve.
    {
        let in_slot_of = |crossings: &[Crossing], arc: usize| -> (usize, usize) {
            for (ci, x) in crossings.iter().enumerate() {
                for s in [0, x.over_in_slot()] {
                    if x.arcs[s] == arc {
                        return (ci, s);
                    }
                }
            }
            unreachable!("arc has an in-slot");
        };
        let (ca, sa) = in_slot_of(&crossings, a_of(0));
        let (cb, sb) = in_slot_of(&crossings, b_of(0));
        crossings[ca].arcs[sa] = b_of(0);
        crossings[cb].arcs[sb] = a_of(0);
    }
    let mut cur = PlanarDiagram::new(crossings, 2 * d.extra_circles)?;
    // Framing compensation: |w| twist blocks of sign sgn(w) on the band of
    // original arc 1 (arc 0 carries the hairpin), then the clasp on the two
    // connector arcs. A block is a poke of one band edge over the other with
    // one of the two new crossings switched, leaving equal signs.
    let (mut pa, mut pb) = (a_of(1), b_of(1));
    let w = d.writhe();
    let block_sign = if w > 0 { 1 } else { -1 };
    for _ in 0..w.unsigned_abs() {
        let next = poke_and_switch(&cur, pa, pb, block_sign)?;
        // continue on the far segments of the band
        (pa, pb) = (cur.arc_count() + 1, pb);
        cur = next;
    }
    // a positive clasp hooks the connectors with two negative-looking poke
    // crossings in this cable's orientation, hence the sign flip
    cur = poke_and_switch(&cur, a_of(0), b_of(0), -clasp_sign)?;
    Ok(cur)
}

/// R2 poke of arc x over arc y across a shared face, then switch one of the
/// two new crossings so that both carry `sign`.
fn poke_and_switch(
    d: &PlanarDiagram,
    x: usize,
    y: usize,
    sign: i8,
) -> Result<PlanarDiagram, KnotError> {
    let (dx, dy) = common_face_darts(d, x, y)
        .ok_or_else(|| KnotError::invalid(format!("arcs {x},{y} share no face")))?;
    let poked = d.r2_insert(dx, dy)?;
    let xi = d.crossing_count();
    let yi = xi + 1;
    // the pair has opposite signs; switching one makes both the other's sign
    let flip = if poked.crossings()[yi].sign == sign { xi } else { yi };
    Ok(poked.switch_crossing(flip))
}

fn common_face_darts(d: &PlanarDiagram, x: usize, y: usize) -> Option<(Dart, Dart)> {
    for face in d.faces() {
        let fx = face.iter().find(|dart| dart.arc == x);
        let fy = face.iter().find(|dart| dart.arc == y);
        if let (Some(&fx), Some(&fy)) = (fx, fy) {
            return Some((fx, fy));
        }
    }
    None
}

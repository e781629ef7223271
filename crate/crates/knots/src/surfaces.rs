//! Seifert-circle decomposition, the Bennequin-Vogel inequality, Vogel
//! braiding, Markov destabilization of positive braids, and braid bounds.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::codes::BraidWord;
use crate::error::KnotError;
use crate::planar::{Dart, PlanarDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SeifertData {
    pub circle_count: usize,
    pub writhe: i64,
    pub crossing_count: usize,
    /// (c - n + s) / 2 with s the number of link components.
    pub canonical_genus_doubled: i64,
}

impl SeifertData {
    /// Canonical genus for knots (integral).
    pub fn canonical_genus(&self) -> i64 {
        debug_assert!(self.canonical_genus_doubled % 2 == 0);
        self.canonical_genus_doubled / 2
    }
}

pub fn seifert_decomposition(d: &PlanarDiagram) -> SeifertData {
    let (_, n) = d.seifert_circles();
    let c = d.crossing_count() as i64;
    let s = d.component_count() as i64;
    SeifertData {
        circle_count: n,
        writhe: d.writhe(),
        crossing_count: d.crossing_count(),
        canonical_genus_doubled: c - n as i64 + s,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BennequinCheck {
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
}

/// |w(D)| + 1 <= n(D) + 2 g_bound.
pub fn bennequin_check(d: &PlanarDiagram, g_bound: i64) -> BennequinCheck {
    let s = seifert_decomposition(d);
    let lhs = s.writhe.abs() + 1;
    let rhs = s.circle_count as i64 + 2 * g_bound;
    BennequinCheck { lhs, rhs, holds: lhs <= rhs }
}

#[derive(Clone, Debug, Serialize)]
pub struct VogelResult {
    pub braid: BraidWord,
    pub move_count: usize,
}

/// Braid a connected diagram by Vogel's algorithm: repeatedly apply a
/// crossing-augmenting Reidemeister II move to a face carrying oppositely
/// oriented strands of two distinct Seifert circles, then read the braid
/// word off the resulting coherent diagram.
pub fn vogel_braiding(d: &PlanarDiagram) -> Result<VogelResult, KnotError> {
    if d.crossing_count() == 0 {
        return Ok(VogelResult { braid: BraidWord::new(1, vec![])?, move_count: 0 });
    }
    if !d.is_connected() {
        return Err(KnotError::precondition("Vogel braiding needs a connected diagram"));
    }
    let mut cur = d.clone();
    let mut moves = 0usize;
    let cap = 4 * d.crossing_count() * d.crossing_count() + 64;
    while let Some((da, db)) = incoherent_face_pair(&cur) {
        cur = cur.r2_insert(da, db)?;
        moves += 1;
        if moves > cap {
            return Err(KnotError::invalid(
                "Vogel iteration cap exceeded (implementation bug)",
            ));
        }
    }
    let braid = extract_braid(&cur)?;
    Ok(VogelResult { braid, move_count: moves })
}

/// First face (in face order) with two darts of equal boundary direction on
/// distinct Seifert circles; such strands are reversely oriented in the
/// plane. Returns the dart pair to poke.
fn incoherent_face_pair(d: &PlanarDiagram) -> Option<(Dart, Dart)> {
    let (circle, _) = d.seifert_circles();
    for face in d.faces() {
        for (i, &da) in face.iter().enumerate() {
            for &db in face.iter().skip(i + 1) {
                if da.along == db.along
                    && da.arc != db.arc
                    && circle[da.arc] != circle[db.arc]
                {
                    return Some((da, db));
                }
            }
        }
    }
    None
}

/// Read a braid word off a coherent (braided) diagram. The Seifert graph
/// must be a path; its order gives the strand positions, and the cyclic
/// order of crossings along each circle is merged into a global word.
fn extract_braid(d: &PlanarDiagram) -> Result<BraidWord, KnotError> {
    let (circle, n) = d.seifert_circles();
    // crossings incident to each circle, in cyclic order along the circle
    let mut along: Vec<Vec<usize>> = vec![Vec::new(); n];
    {
        // order arcs along each circle: succ within the Seifert smoothing
        let mut succ = vec![usize::MAX; d.arc_count()];
        for x in d.crossings() {
            succ[x.arcs[0]] = x.arcs[x.over_out_slot()];
            succ[x.arcs[x.over_in_slot()]] = x.arcs[2];
        }
        let mut seen = vec![false; d.arc_count()];
        // crossing met when leaving each arc
        let mut at = vec![usize::MAX; d.arc_count()];
        for (ci, x) in d.crossings().iter().enumerate() {
            at[x.arcs[0]] = ci;
            at[x.arcs[x.over_in_slot()]] = ci;
        }
        for start in 0..d.arc_count() {
            if seen[start] {
                continue;
            }
            let cid = circle[start];
            let mut a = start;
            while !seen[a] {
                seen[a] = true;
                along[cid].push(at[a]);
                a = succ[a];
            }
        }
    }
    // Seifert graph adjacency; must form a path
    let mut pairs: Vec<(usize, usize)> = d
        .crossings()
        .iter()
        .map(|x| {
            let (a, b) = (circle[x.arcs[0]], circle[x.arcs[2]]);
            (a.min(b), a.max(b))
        })
        .collect();
    pairs.sort_unstable();
    pairs.dedup();
    let mut deg = vec![0usize; n];
    for &(a, b) in &pairs {
        if a == b {
            return Err(KnotError::invalid("braided diagram has a self-adjacent circle"));
        }
        deg[a] += 1;
        deg[b] += 1;
    }
    if pairs.len() + 1 != n || deg.iter().filter(|&&k| k == 1).count() != 2 && n > 1 {
        return Err(KnotError::invalid("Seifert graph of braided diagram is not a path"));
    }
    // order circles along the path, trying both ends
    let mut best: Option<Vec<i32>> = None;
    for flip in [false, true] {
        let order = path_order(n, &pairs, flip);
        let mut pos = vec![0usize; n];
        for (i, &cid) in order.iter().enumerate() {
            pos[cid] = i;
        }
        // strand index of each crossing
        let strand: Vec<usize> = d
            .crossings()
            .iter()
            .map(|x| pos[circle[x.arcs[0]]].min(pos[circle[x.arcs[2]]]))
            .collect();
        // merge cyclic orders circle by circle along the path
        let mut word: Vec<usize> = along[order[0]].clone();
        for w in 1..n {
            let cid = order[w];
            let cycle = &along[cid];
            // crossings shared with the word so far are those on strand w-1
            let Some(first_shared) = cycle.iter().position(|&ci| strand[ci] == w - 1) else {
                return Err(KnotError::invalid("disconnected Seifert path segment"));
            };
            let mut merged: Vec<usize> = Vec::with_capacity(word.len() + cycle.len());
            // rotate the cycle to start at a shared crossing
            let rot: Vec<usize> =
                cycle[first_shared..].iter().chain(&cycle[..first_shared]).copied().collect();
            // split rot into blocks starting at each shared crossing
            let mut blocks: Vec<(usize, Vec<usize>)> = Vec::new();
            for &ci in &rot {
                if strand[ci] == w - 1 {
                    blocks.push((ci, Vec::new()));
                } else {
                    blocks.last_mut().expect("starts at shared").1.push(ci);
                }
            }
            for &ci in &word {
                merged.push(ci);
                if let Some(b) = blocks.iter().position(|&(anchor, _)| anchor == ci) {
                    merged.extend(blocks[b].1.iter().copied());
                }
            }
            word = merged;
        }
        if word.len() != d.crossing_count() {
            return Err(KnotError::invalid("braid extraction lost crossings"));
        }
        // rotate to start at the smallest crossing id
        let start = word
            .iter()
            .position(|&ci| ci == *word.iter().min().expect("nonempty"))
            .expect("present");
        let letters: Vec<i32> = word[start..]
            .iter()
            .chain(&word[..start])
            .map(|&ci| {
                let gen = (strand[ci] + 1) as i32;
                if d.crossings()[ci].sign > 0 {
                    gen
                } else {
                    -gen
                }
            })
            .collect();
        if best.as_ref().map(|b| letters < *b).unwrap_or(true) {
            best = Some(letters);
        }
    }
    BraidWord::new(n, best.expect("at least one orientation"))
}

fn path_order(n: usize, pairs: &[(usize, usize)], flip: bool) -> Vec<usize> {
    if n == 1 {
        return vec![0];
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in pairs {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut ends: Vec<usize> = (0..n).filter(|&v| adj[v].len() == 1).collect();
    ends.sort_unstable();
    let start = if flip { ends[1] } else { ends[0] };
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while order.len() < n {
        let next = *adj[cur].iter().find(|&&v| v != prev).expect("path");
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

/// Destabilize a positive braid: any generator occurring exactly once can be
/// removed (its strand pair merges); repeat until every generator occurs at
/// least twice or nothing is left.
pub fn markov_reduce_positive(b: &BraidWord) -> Result<BraidWord, KnotError> {
    if !b.is_positive() {
        return Err(KnotError::precondition("Markov reduction implemented for positive braids"));
    }
    let mut n = b.n;
    let mut letters: Vec<i32> = b.letters.clone();
    loop {
        let mut count = vec![0usize; n];
        for &l in &letters {
            count[l as usize] += 1;
        }
        let Some(g) = (1..n).find(|&g| count[g] == 1) else {
            break;
        };
        // Letters below and above g commute across the gap at g; sort them
        // apart before merging the strand ranges at strand g, so the result
        // is the connected-sum braid of the two halves.
        let low = letters.iter().copied().filter(|&l| (l as usize) < g);
        let high = letters.iter().copied().filter(|&l| (l as usize) > g).map(|l| l - 1);
        letters = low.chain(high).collect();
        n -= 1;
        if n == 1 {
            letters.clear();
            break;
        }
    }
    BraidWord::new(n, letters)
}

#[derive(Clone, Debug, Serialize)]
pub struct BraidBounds {
    /// ([beta] + 1 - n) / 2
    pub min_deg_v_formula: BigRational,
    /// [beta] / 4
    pub thm4_bound: BigRational,
    /// [beta]^2 / (4n(n-1)) - (2n-3)(n-1)/8
    pub thv2bp_bound: BigRational,
}

pub fn braid_bounds(b: &BraidWord) -> Result<BraidBounds, KnotError> {
    if !b.is_positive() {
        return Err(KnotError::precondition("braid bounds are stated for positive braids"));
    }
    let e = BigInt::from(b.exponent_sum());
    let n = BigInt::from(b.n as i64);
    let q = |a: BigInt, b: BigInt| BigRational::new(a, b);
    let one = BigInt::from(1);
    Ok(BraidBounds {
        min_deg_v_formula: q(&e + &one - &n, BigInt::from(2)),
        thm4_bound: q(e.clone(), BigInt::from(4)),
        thv2bp_bound: q(&e * &e, BigInt::from(4) * &n * (&n - &one))
            - q(
                (BigInt::from(2) * &n - BigInt::from(3)) * (&n - &one),
                BigInt::from(8),
            ),
    })
}

/// Data triple ([beta], n, v3) for the cubic braid-positivity bound; no
/// constants are asserted, the caller only collects the numbers.
pub fn v3_braid_data(b: &BraidWord) -> Result<(i64, usize, i64), KnotError> {
    let d = b.closure()?;
    let g = d.to_gauss()?;
    Ok((b.exponent_sum(), b.n, crate::vassiliev::v3_gauss(&g)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::braid_closure;
    use crate::poly::bracket::jones;

    #[test]
    fn seifert_data_examples() {
        let d = braid_closure(2, &[1, 1, 1]).unwrap();
        let s = seifert_decomposition(&d);
        assert_eq!((s.circle_count, s.writhe, s.canonical_genus()), (2, 3, 1));
        let b = bennequin_check(&d, 1);
        assert!(b.holds && b.lhs == b.rhs);
        // torus (2,m): g_can = (m-1)/2
        for m in [3i64, 5, 7, 9] {
            let t = braid_closure(2, &vec![1; m as usize]).unwrap();
            assert_eq!(seifert_decomposition(&t).canonical_genus(), (m - 1) / 2);
        }
        // kink
        let k = braid_closure(2, &[1]).unwrap();
        let sk = seifert_decomposition(&k);
        assert_eq!((sk.circle_count, sk.canonical_genus()), (2, 0));
    }

    #[test]
    fn vogel_on_braided_input_is_identity() {
        let b = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        let r = vogel_braiding(&b.closure().unwrap()).unwrap();
        assert_eq!(r.move_count, 0);
        assert_eq!(r.braid, b);
    }

    #[test]
    fn vogel_braids_rational_diagrams() {
        for entries in [vec![2i64, 2], vec![-3, -2], vec![3], vec![2, 1, 3], vec![3, 1, 3]] {
            let d = crate::build::rational_closure(&entries).unwrap();
            let s = seifert_decomposition(&d);
            let r = vogel_braiding(&d).unwrap();
            assert_eq!(r.braid.n, s.circle_count, "{entries:?}");
            assert_eq!(r.braid.exponent_sum(), s.writhe, "{entries:?}");
            let closed = r.braid.closure().unwrap();
            assert_eq!(
                jones(&closed).unwrap(),
                jones(&d).unwrap(),
                "Jones changed for {entries:?} -> {:?}",
                r.braid
            );
        }
    }

    #[test]
    fn figure_eight_vogel() {
        let d = crate::build::rational_closure(&[2, 2]).unwrap();
        let r = vogel_braiding(&d).unwrap();
        assert_eq!(r.braid.n, 3);
        assert_eq!(r.braid.exponent_sum(), 0);
    }

    #[test]
    fn markov_examples() {
        let b = BraidWord::new(4, vec![1, 2, 3]).unwrap();
        let r = markov_reduce_positive(&b).unwrap();
        assert_eq!((r.n, r.letters.len()), (1, 0));
        let b = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        assert_eq!(markov_reduce_positive(&b).unwrap(), b);
        let b = BraidWord::new(3, vec![1, 1, 2]).unwrap();
        let r = markov_reduce_positive(&b).unwrap();
        assert_eq!((r.n, r.letters), (2, vec![1, 1]));
    }

    #[test]
    fn bounds_examples() {
        use num_traits::ToPrimitive;
        let b = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        let r = braid_bounds(&b).unwrap();
        assert_eq!(r.min_deg_v_formula.to_integer().to_i64().unwrap(), 1);
        assert_eq!(r.thv2bp_bound, BigRational::from(BigInt::from(1)));
        let b5 = BraidWord::new(2, vec![1; 5]).unwrap();
        let r5 = braid_bounds(&b5).unwrap();
        assert_eq!(r5.min_deg_v_formula.to_integer().to_i64().unwrap(), 2);
        assert_eq!(r5.thm4_bound, BigRational::new(BigInt::from(5), BigInt::from(4)));
    }
}

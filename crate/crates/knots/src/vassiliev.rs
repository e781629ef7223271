//! Gauss-sum evaluation: a generic configuration matcher and the degree-2
//! and degree-3 Vassiliev invariant formulas built on it.
//!
//! Conventions are pinned by anchors: v3(right trefoil) = 4 and v2 equals
//! the Conway z^2 coefficient on every fixture.

use serde::Serialize;

use crate::error::KnotError;
use crate::gauss::{intersection_graph, GaussDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WeightRule {
    /// Product of the writhes of the matched arrows.
    WritheProduct,
    /// (w_p + w_q)/2 for a two-chord pattern.
    HalfWritheSum,
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct PatternChord {
    /// Cyclic position of the tail (under) end in 0..2k.
    pub tail: usize,
    /// Cyclic position of the head (over) end.
    pub head: usize,
    /// Undirected chords match an arrow either way around.
    pub directed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfigurationPattern {
    pub chords: Vec<PatternChord>,
    /// Based patterns read positions linearly from the diagram basepoint.
    pub based: bool,
    pub weight: WeightRule,
}

/// Injective assignments pattern-chord -> diagram-arrow, one per unordered
/// match (an arrow set participating several equivalent ways counts once).
#[derive(Clone, Debug, Serialize)]
pub struct MatchSet {
    pub assignments: Vec<Vec<usize>>,
}

impl ConfigurationPattern {
    pub fn linked_pair() -> Self {
        ConfigurationPattern {
            chords: vec![
                PatternChord { tail: 0, head: 2, directed: false },
                PatternChord { tail: 1, head: 3, directed: false },
            ],
            based: false,
            weight: WeightRule::HalfWritheSum,
        }
    }

    /// Three pairwise linked chords, directions free.
    pub fn conf_3_3() -> Self {
        ConfigurationPattern {
            chords: vec![
                PatternChord { tail: 0, head: 3, directed: false },
                PatternChord { tail: 1, head: 4, directed: false },
                PatternChord { tail: 2, head: 5, directed: false },
            ],
            based: false,
            weight: WeightRule::WritheProduct,
        }
    }

    /// Chord d plus two arrows crossing d (not each other), pointing the
    /// same way across it: cyclic ends d, p-head, q-head, d, q-tail, p-tail.
    pub fn conf_4_2_0() -> Self {
        ConfigurationPattern {
            chords: vec![
                PatternChord { tail: 0, head: 3, directed: false },
                PatternChord { tail: 5, head: 1, directed: true },
                PatternChord { tail: 4, head: 2, directed: true },
            ],
            based: false,
            weight: WeightRule::WritheProduct,
        }
    }

    /// Based two-arrow pattern: from the basepoint, over B, under A,
    /// under B, over A.
    pub fn v2_pattern_1() -> Self {
        ConfigurationPattern {
            chords: vec![
                PatternChord { tail: 1, head: 3, directed: true },
                PatternChord { tail: 2, head: 0, directed: true },
            ],
            based: true,
            weight: WeightRule::WritheProduct,
        }
    }

    /// The reverse-oriented twin: under B, over A, over B, under A.
    pub fn v2_pattern_2() -> Self {
        ConfigurationPattern {
            chords: vec![
                PatternChord { tail: 3, head: 1, directed: true },
                PatternChord { tail: 0, head: 2, directed: true },
            ],
            based: true,
            weight: WeightRule::WritheProduct,
        }
    }
}

/// All order- and direction-preserving injective matches of `p` into `g`,
/// deduplicated per unordered arrow set.
pub fn match_config(g: &GaussDiagram, p: &ConfigurationPattern) -> MatchSet {
    let k = p.chords.len();
    let c = g.len();
    let m = 2 * k;
    let mut assignments: Vec<Vec<usize>> = Vec::new();
    let mut seen_sets: std::collections::BTreeSet<Vec<usize>> = Default::default();
    let mut tuple = vec![0usize; k];
    let mut used = vec![false; c.max(1)];

    fn rec(
        g: &GaussDiagram,
        p: &ConfigurationPattern,
        depth: usize,
        tuple: &mut Vec<usize>,
        used: &mut Vec<bool>,
        seen_sets: &mut std::collections::BTreeSet<Vec<usize>>,
        assignments: &mut Vec<Vec<usize>>,
        m: usize,
    ) {
        let k = p.chords.len();
        if depth == k {
            if tuple_matches(g, p, tuple, m) {
                let mut key = tuple.clone();
                key.sort_unstable();
                if seen_sets.insert(key) {
                    assignments.push(tuple.clone());
                }
            }
            return;
        }
        for a in 0..g.len() {
            if used[a] {
                continue;
            }
            used[a] = true;
            tuple[depth] = a;
            rec(g, p, depth + 1, tuple, used, seen_sets, assignments, m);
            used[a] = false;
        }
    }

    if c >= k {
        rec(g, p, 0, &mut tuple, &mut used, &mut seen_sets, &mut assignments, m);
    }
    MatchSet { assignments }
}

fn tuple_matches(g: &GaussDiagram, p: &ConfigurationPattern, tuple: &[usize], m: usize) -> bool {
    let k = p.chords.len();
    // Try every orientation flip of the undirected pattern chords.
    let undirected: Vec<usize> =
        (0..k).filter(|&i| !p.chords[i].directed).collect();
    let combos = 1usize << undirected.len();
    'combo: for bits in 0..combos {
        let mut pat_at = vec![usize::MAX; m]; // diagram position slot -> pattern position
        let mut pts: Vec<(usize, usize)> = Vec::with_capacity(m);
        for (i, &arrow_id) in tuple.iter().enumerate() {
            let a = &g.arrows()[arrow_id];
            let flip = undirected
                .iter()
                .position(|&u| u == i)
                .map(|idx| bits >> idx & 1 == 1)
                .unwrap_or(false);
            let (tail_pos, head_pos) =
                if flip { (a.over, a.under) } else { (a.under, a.over) };
            pts.push((tail_pos, p.chords[i].tail));
            pts.push((head_pos, p.chords[i].head));
        }
        pts.sort_unstable();
        for (slot, &(_, pp)) in pts.iter().enumerate() {
            pat_at[slot] = pp;
        }
        if p.based {
            if (0..m).all(|s| pat_at[s] == s) {
                return true;
            }
        } else {
            let ok = (0..m).all(|s| (pat_at[(s + 1) % m] + m - pat_at[s]) % m == 1);
            if ok {
                return true;
            }
        }
        continue 'combo;
    }
    false
}

fn weight_sum(g: &GaussDiagram, p: &ConfigurationPattern, ms: &MatchSet) -> i64 {
    let mut doubled = 0i64; // in half units for HalfWritheSum
    for asg in &ms.assignments {
        match p.weight {
            WeightRule::WritheProduct => {
                let prod: i64 = asg.iter().map(|&a| g.arrows()[a].writhe as i64).product();
                doubled += 2 * prod;
            }
            WeightRule::HalfWritheSum => {
                let s: i64 = asg.iter().map(|&a| g.arrows()[a].writhe as i64).sum();
                doubled += s;
            }
        }
    }
    doubled
}

fn require_realizable(g: &GaussDiagram) -> Result<(), KnotError> {
    if g.is_realizable() {
        Ok(())
    } else {
        Err(KnotError::precondition("Gauss diagram is not realizable"))
    }
}

/// Degree-2 Vassiliev invariant (Conway z^2 coefficient), by the
/// symmetrized two-pattern Polyak-Viro formula.
pub fn v2_gauss(g: &GaussDiagram) -> Result<i64, KnotError> {
    require_realizable(g)?;
    let n1 = weight_sum(g, &ConfigurationPattern::v2_pattern_1(),
        &match_config(g, &ConfigurationPattern::v2_pattern_1()));
    let n2 = weight_sum(g, &ConfigurationPattern::v2_pattern_2(),
        &match_config(g, &ConfigurationPattern::v2_pattern_2()));
    // n1, n2 are doubled weight sums; the formula halves their mean.
    let four_v2 = n1 + n2;
    assert_eq!(four_v2 % 4, 0, "v2 symmetrization must be integral");
    Ok(four_v2 / 4)
}

/// Degree-3 Vassiliev invariant, normalized so v3(right trefoil) = 4:
/// sum over (3,3) and (4,2)0 of the writhe products plus half the sum of
/// (w_p + w_q) over linked pairs.
pub fn v3_gauss(g: &GaussDiagram) -> Result<i64, KnotError> {
    require_realizable(g)?;
    let t33 = weight_sum(g, &ConfigurationPattern::conf_3_3(),
        &match_config(g, &ConfigurationPattern::conf_3_3()));
    let t420 = weight_sum(g, &ConfigurationPattern::conf_4_2_0(),
        &match_config(g, &ConfigurationPattern::conf_4_2_0()));
    let lp = weight_sum(g, &ConfigurationPattern::linked_pair(),
        &match_config(g, &ConfigurationPattern::linked_pair()));
    let doubled = t33 + t420 + lp;
    assert_eq!(doubled % 2, 0, "v3 must be integral");
    Ok(doubled / 2)
}

#[derive(Clone, Debug, Serialize)]
pub struct ArrowStatistics {
    /// l_i: number of arrows linked with arrow i.
    pub linked_counts: Vec<usize>,
    /// Number of linked pairs in which arrow i is the distinguished one
    /// (its over passage is followed by the partner's under passage).
    /// Basepoint-independent: the rule reads the cyclic order.
    pub distinguished_counts: Vec<usize>,
}

pub fn arrow_statistics(g: &GaussDiagram) -> ArrowStatistics {
    let ig = intersection_graph(g);
    let mut distinguished = vec![0usize; g.len()];
    for &(i, j) in &ig.edges {
        let (a, b) = (&g.arrows()[i], &g.arrows()[j]);
        let mut pts = [a.under, a.over, b.under, b.over];
        pts.sort_unstable();
        let succ = |p: usize| {
            let idx = pts.iter().position(|&x| x == p).unwrap();
            pts[(idx + 1) % 4]
        };
        if succ(a.over) == b.under {
            distinguished[i] += 1;
        } else {
            assert_eq!(succ(b.over), a.under, "linked pair must alternate");
            distinguished[j] += 1;
        }
    }
    ArrowStatistics { linked_counts: ig.degrees, distinguished_counts: distinguished }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::{positive_trefoil, torus2};

    #[test]
    fn trefoil_anchors() {
        let g = positive_trefoil();
        assert_eq!(v3_gauss(&g).unwrap(), 4);
        assert_eq!(v2_gauss(&g).unwrap(), 1);
        let m = g.mirror();
        assert_eq!(v3_gauss(&m).unwrap(), -4);
        assert_eq!(v2_gauss(&m).unwrap(), 1);
    }

    #[test]
    fn linked_pair_matches_on_trefoil() {
        let g = positive_trefoil();
        let ms = match_config(&g, &ConfigurationPattern::linked_pair());
        assert_eq!(ms.assignments.len(), 3);
        let ms33 = match_config(&g, &ConfigurationPattern::conf_3_3());
        assert_eq!(ms33.assignments.len(), 1);
        let ms420 = match_config(&g, &ConfigurationPattern::conf_4_2_0());
        assert_eq!(ms420.assignments.len(), 0);
    }

    #[test]
    fn empty_diagram() {
        let g = GaussDiagram::empty();
        assert_eq!(v2_gauss(&g).unwrap(), 0);
        assert_eq!(v3_gauss(&g).unwrap(), 0);
        assert_eq!(
            match_config(&g, &ConfigurationPattern::linked_pair()).assignments.len(),
            0
        );
    }

    #[test]
    fn torus_2_5_values() {
        // All C(5,3) triples are (3,3); all 10 pairs are linked positive.
        let g = torus2(5, 1);
        assert_eq!(v3_gauss(&g).unwrap(), 10 + 0 + 10);
        // v2 of the (2,5) torus knot is 3.
        assert_eq!(v2_gauss(&g).unwrap(), 3);
    }

    #[test]
    fn basepoint_independence() {
        let g = torus2(5, 1);
        for k in 0..10 {
            assert_eq!(v2_gauss(&g.rotate(k)).unwrap(), 3);
            assert_eq!(v3_gauss(&g.rotate(k)).unwrap(), 20);
        }
    }

    #[test]
    fn distinguished_half_on_positive() {
        for g in [positive_trefoil(), torus2(5, 1), torus2(7, 1)] {
            let st = arrow_statistics(&g);
            for i in 0..g.len() {
                assert_eq!(st.distinguished_counts[i] * 2, st.linked_counts[i]);
            }
        }
    }
}

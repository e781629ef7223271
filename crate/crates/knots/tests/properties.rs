//! Property-based checks: structural conditions on realizable Gauss
//! diagrams, mirror/rotation behaviour of v2 and v3, Reidemeister
//! invariance, and polynomial identities on random braid closures.

use proptest::prelude::*;

use knots::codes::BraidWord;
use knots::gauss::structural_checks;
use knots::moves::reduce_diagram;
use knots::planar::{braid_closure, PlanarDiagram};
use knots::poly::bracket::{jones, vassiliev_from_jones};
use knots::surfaces::markov_reduce_positive;
use knots::vassiliev::{v2_gauss, v3_gauss};

/// Braid words with 2..=4 strands and 1..=8 letters, mixed signs.
fn braid_strategy() -> impl Strategy<Value = (usize, Vec<i32>)> {
    (2usize..=4).prop_flat_map(|n| {
        let letter = (1..n as i32, any::<bool>())
            .prop_map(|(g, neg)| if neg { -g } else { g });
        (Just(n), prop::collection::vec(letter, 1..=8))
    })
}

/// Positive braid words with knot closure.
fn positive_braid_strategy() -> impl Strategy<Value = BraidWord> {
    (2usize..=4)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(1..n as i32, 1..=9)))
        .prop_filter_map("closure must be a knot", |(n, w)| {
            let b = BraidWord::new(n, w).ok()?;
            (b.closure().ok()?.component_count() == 1).then_some(b)
        })
}

/// Apply R1 kinks and R2 pokes chosen by the seeds.
fn perturb(mut d: PlanarDiagram, ops: &[(u8, usize, usize)]) -> PlanarDiagram {
    for &(kind, s1, s2) in ops {
        if kind % 2 == 0 || d.crossing_count() == 0 {
            let arc = s1 % d.arc_count().max(1);
            let sign = if s2 % 2 == 0 { 1 } else { -1 };
            d = d.r1_insert(arc, sign).unwrap();
        } else {
            let faces = d.faces();
            let cands: Vec<_> = faces
                .iter()
                .filter(|f| {
                    f.iter().any(|x| f.iter().any(|y| x.arc != y.arc))
                })
                .collect();
            if cands.is_empty() {
                continue;
            }
            let f = cands[s1 % cands.len()];
            let i = s2 % f.len();
            let j = (i + 1..i + f.len())
                .map(|k| k % f.len())
                .find(|&k| f[k].arc != f[i].arc)
                .unwrap();
            d = d.r2_insert(f[i], f[j]).unwrap();
        }
    }
    d
}

fn knot_closure((n, w): &(usize, Vec<i32>)) -> Option<PlanarDiagram> {
    let d = braid_closure(*n, w).ok()?;
    (d.component_count() == 1).then_some(d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_writhe_matches_exponent_sum(bw in braid_strategy()) {
        let (n, w) = &bw;
        let b = BraidWord::new(*n, w.clone()).unwrap();
        let d = b.closure().unwrap();
        prop_assert_eq!(d.writhe(), b.exponent_sum());
    }

    #[test]
    fn realizable_diagrams_pass_structural_checks(bw in braid_strategy()) {
        let Some(d) = knot_closure(&bw) else { return Ok(()) };
        let g = d.to_gauss().unwrap();
        prop_assert!(g.is_realizable());
        let s = structural_checks(&g);
        prop_assert!(s.even_valence);
        prop_assert!(s.double_connectivity);
    }

    #[test]
    fn v3_mirror_antisymmetric_v2_invariant(bw in braid_strategy()) {
        let Some(d) = knot_closure(&bw) else { return Ok(()) };
        let g = d.to_gauss().unwrap();
        let m = g.mirror();
        prop_assert_eq!(v2_gauss(&g).unwrap(), v2_gauss(&m).unwrap());
        prop_assert_eq!(v3_gauss(&g).unwrap(), -v3_gauss(&m).unwrap());
    }

    #[test]
    fn v2_v3_basepoint_independent(bw in braid_strategy(), k in 0usize..16) {
        let Some(d) = knot_closure(&bw) else { return Ok(()) };
        let g = d.to_gauss().unwrap();
        let r = g.rotate(k % (2 * g.len().max(1)));
        prop_assert_eq!(v2_gauss(&g).unwrap(), v2_gauss(&r).unwrap());
        prop_assert_eq!(v3_gauss(&g).unwrap(), v3_gauss(&r).unwrap());
    }

    #[test]
    fn gauss_sums_match_jones_derivatives(bw in braid_strategy()) {
        let Some(d) = knot_closure(&bw) else { return Ok(()) };
        let g = d.to_gauss().unwrap();
        let (v2j, v3j) = vassiliev_from_jones(&jones(&d).unwrap()).unwrap();
        prop_assert_eq!(v2_gauss(&g).unwrap(), v2j);
        prop_assert_eq!(v3_gauss(&g).unwrap(), v3j);
    }

    #[test]
    fn reidemeister_perturbation_invariance(
        bw in braid_strategy(),
        ops in prop::collection::vec((any::<u8>(), any::<usize>(), any::<usize>()), 0..3),
    ) {
        let Some(d) = knot_closure(&bw) else { return Ok(()) };
        let p = perturb(d.clone(), &ops);
        prop_assert_eq!(jones(&d).unwrap(), jones(&p).unwrap());
        let (g, gp) = (d.to_gauss().unwrap(), p.to_gauss().unwrap());
        prop_assert_eq!(v2_gauss(&g).unwrap(), v2_gauss(&gp).unwrap());
        prop_assert_eq!(v3_gauss(&g).unwrap(), v3_gauss(&gp).unwrap());
    }

    #[test]
    fn mirror_conjugates_jones(bw in braid_strategy()) {
        let Some(d) = knot_closure(&bw) else { return Ok(()) };
        prop_assert_eq!(jones(&d.mirror()).unwrap(), jones(&d).unwrap().conjugate());
    }

    #[test]
    fn connected_sum_adds_v2_v3(a in braid_strategy(), b in braid_strategy()) {
        let (Some(da), Some(db)) = (knot_closure(&a), knot_closure(&b)) else { return Ok(()) };
        let (ga, gb) = (da.to_gauss().unwrap(), db.to_gauss().unwrap());
        let gs = ga.connected_sum(&gb);
        prop_assert_eq!(
            v2_gauss(&gs).unwrap(),
            v2_gauss(&ga).unwrap() + v2_gauss(&gb).unwrap()
        );
        prop_assert_eq!(
            v3_gauss(&gs).unwrap(),
            v3_gauss(&ga).unwrap() + v3_gauss(&gb).unwrap()
        );
    }

    #[test]
    fn reduction_shrinks_and_preserves_invariants(bw in braid_strategy()) {
        let Some(d) = knot_closure(&bw) else { return Ok(()) };
        let g = d.to_gauss().unwrap();
        // reduce_diagram verifies v2/v3 invariance internally on realizable input
        let r = reduce_diagram(&g).unwrap();
        prop_assert!(r.result.len() <= g.len());
    }

    #[test]
    fn markov_reduction_preserves_closure_jones(b in positive_braid_strategy()) {
        let r = markov_reduce_positive(&b).unwrap();
        prop_assert!(r.letters.len() <= b.letters.len());
        prop_assert_eq!(
            jones(&r.closure().unwrap()).unwrap(),
            jones(&b.closure().unwrap()).unwrap()
        );
    }
}

//! Obstruction batteries for positivity and braid positivity, a bounded
//! search deciding braid positivity, and a seeded positive-diagram corpus.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::codes::{BraidWord, ConwayTangle};
use crate::error::KnotError;
use crate::gauss::{intersection_graph, reduction_status};
use crate::planar::PlanarDiagram;
use crate::poly::bracket::jones;
use crate::poly::homfly::{alexander_from_conway, conway_from_homfly, homfly, HOMFLY_BUDGET};
use crate::poly::seifert::{seifert_matrix_from_braid, symmetrized_signature};
use crate::poly::{Laurent1, Laurent2};
use crate::surfaces::seifert_decomposition;
use crate::vassiliev::{v2_gauss, v3_gauss};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Verdict {
    Passes,
    Violated,
    Inapplicable,
}

#[derive(Clone, Debug, Serialize)]
pub struct ObstructionEntry {
    pub name: &'static str,
    /// The inequality instantiated with the computed values.
    pub detail: String,
    pub verdict: Verdict,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Overall {
    NotPositive,
    NotBraidPositive,
    Consistent,
}

#[derive(Clone, Debug, Serialize)]
pub struct ObstructionReport {
    pub entries: Vec<ObstructionEntry>,
    pub overall: Overall,
    /// A violated obstruction certifies the verdict; "consistent" does not
    /// certify positivity, and identifying the knot behind a diagram is
    /// assumed, not decided.
    pub note: &'static str,
}

impl ObstructionReport {
    pub fn violated(&self) -> Vec<&'static str> {
        self.entries
            .iter()
            .filter(|e| e.verdict == Verdict::Violated)
            .map(|e| e.name)
            .collect()
    }
}

/// Invariants of one knot diagram feeding the obstruction batteries.
#[derive(Clone, Debug, Serialize)]
pub struct KnotData {
    pub crossing_count: usize,
    pub v2: i64,
    pub v3: i64,
    pub jones: Laurent1,
    pub homfly: Laurent2,
    pub conway: Laurent1,
    pub alexander: Laurent1,
    pub signature: i64,
}

pub fn knot_data(d: &PlanarDiagram) -> Result<KnotData, KnotError> {
    if d.component_count() != 1 {
        return Err(KnotError::precondition("obstruction batteries expect a knot diagram"));
    }
    let g = d.to_gauss()?;
    let p = homfly(d, HOMFLY_BUDGET)?;
    let conway = conway_from_homfly(&p)?;
    let alexander = alexander_from_conway(&conway);
    let sig = crate::poly::seifert::seifert_signature(d)?.signature;
    Ok(KnotData {
        crossing_count: d.crossing_count(),
        v2: v2_gauss(&g)?,
        v3: v3_gauss(&g)?,
        jones: jones(d)?,
        homfly: p,
        conway,
        alexander,
        signature: sig,
    })
}

fn rat(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

fn entry(name: &'static str, detail: String, ok: bool) -> ObstructionEntry {
    ObstructionEntry {
        name,
        detail,
        verdict: if ok { Verdict::Passes } else { Verdict::Violated },
    }
}

fn inapplicable(name: &'static str, detail: &str) -> ObstructionEntry {
    ObstructionEntry { name, detail: detail.into(), verdict: Verdict::Inapplicable }
}

const REPORT_NOTE: &str = "a violated obstruction certifies the verdict; a consistent \
report does not certify positivity (knot identification from a diagram is assumed)";

/// Whether P(it, iz) has only non-negative coefficients as a polynomial in z,
/// evaluated exactly at the given rational t. None when an l/m exponent pair
/// has odd total degree (not a knot polynomial).
fn morton_cromwell_nonneg(p: &Laurent2, t: &BigRational) -> Option<bool> {
    use std::collections::BTreeMap;
    // c * l^a * m^b at (l,m) = (it, iz) contributes c * (-1)^((a+b)/2) * t^a * z^b
    let mut z_coeff: BTreeMap<i64, BigRational> = BTreeMap::new();
    for ((a, b), c) in p.terms() {
        if (a + b) % 2 != 0 {
            return None;
        }
        let sgn = if (a + b).rem_euclid(4) == 0 { 1 } else { -1 };
        let term = BigRational::from(c * sgn) * t.pow(a as i32);
        *z_coeff.entry(b).or_insert_with(BigRational::zero) += term;
    }
    Some(z_coeff.values().all(|v| !v.is_negative()))
}

/// The battery of inequalities every positive knot satisfies. The crossing
/// number of the knot is bracketed by span V (below) and the crossing count
/// of the supplied diagram (above); each side is used where it is the
/// conservative one.
pub fn positivity_obstructions(data: &KnotData) -> ObstructionReport {
    let mut entries = Vec::new();
    if data.jones == Laurent1::one() {
        entries.push(inapplicable("trivial-knot", "V = 1: obstructions apply to nontrivial knots"));
        return ObstructionReport { entries, overall: Overall::Consistent, note: REPORT_NOTE };
    }
    let (v2, v3) = (data.v2, data.v3);
    let c_hi = data.crossing_count as i64;
    let span = data.jones.span().unwrap_or_else(BigRational::zero);
    let max_v = data.jones.max_deg().unwrap_or_else(BigRational::zero);
    let max_m = data.homfly.max_deg_m().unwrap_or(0);

    entries.push(entry(
        "vassiliev-positive",
        format!("v2 = {v2} > 0 and v3 = {v3} > 0"),
        v2 > 0 && v3 > 0,
    ));
    entries.push(entry(
        "crossings-at-most-v3",
        format!("span V = {span} <= v3 = {v3}"),
        span <= rat(v3),
    ));
    entries.push(entry(
        "v2-quarter-crossings",
        format!("v2 = {v2} >= span V / 4 = {}/4", span.clone()),
        rat(4 * v2) >= span,
    ));
    entries.push(entry(
        "five-v2-jones",
        format!("5 v2 = {} >= max deg V = {max_v}", 5 * v2),
        rat(5 * v2) >= max_v,
    ));
    entries.push(entry(
        "v3-83-v2",
        format!("v3 = {v3} >= 8/3 v2 = 8*{v2}/3"),
        rat(3 * v3) >= rat(8 * v2),
    ));
    entries.push(entry(
        "v3-homfly-m-degree",
        format!("v3 = {v3} >= 2 max deg_m P = {}", 2 * max_m),
        v3 >= 2 * max_m,
    ));
    if v3 > v2 {
        entries.push(entry(
            "crossing-quadratic",
            format!("c <= {c_hi} must satisfy c >= 2 v2^2/(v3 - v2) = 2*{v2}^2/{}", v3 - v2),
            rat(c_hi) * rat(v3 - v2) >= rat(2 * v2 * v2),
        ));
    } else {
        entries.push(inapplicable("crossing-quadratic", "needs v3 > v2"));
    }
    entries.push(entry(
        "v3-v2-product",
        format!("3/4 v3 = 3*{v3}/4 <= v2 * c = {v2}*{c_hi}"),
        rat(3 * v3) <= rat(4 * v2 * c_hi),
    ));
    let (min_l, max_dm) = (data.homfly.min_deg_l(), data.homfly.max_deg_m());
    match (min_l, max_dm) {
        (Some(a), Some(b)) => entries.push(entry(
            "cromwell-degrees",
            format!("min deg_l P = {a} equals max deg_m P = {b}"),
            a == b,
        )),
        _ => entries.push(inapplicable("cromwell-degrees", "P = 0")),
    }
    entries.push(entry(
        "conway-positive",
        "all Conway coefficients non-negative".into(),
        data.conway.coefficients_nonnegative(),
    ));
    let samples = [(1, 4), (1, 2), (3, 4), (1, 1)];
    let mut mc: Option<bool> = Some(true);
    for (num, den) in samples {
        let t = BigRational::new(BigInt::from(num), BigInt::from(den));
        match (mc, morton_cromwell_nonneg(&data.homfly, &t)) {
            (Some(acc), Some(ok)) => mc = Some(acc && ok),
            _ => mc = None,
        }
    }
    match mc {
        Some(ok) => entries.push(entry(
            "morton-cromwell",
            "P(it, iz) coefficients non-negative at t in {1/4, 1/2, 3/4, 1}".into(),
            ok,
        )),
        None => entries.push(inapplicable("morton-cromwell", "odd total degree in P")),
    }
    let overall = if entries.iter().any(|e| e.verdict == Verdict::Violated) {
        Overall::NotPositive
    } else {
        Overall::Consistent
    };
    ObstructionReport { entries, overall, note: REPORT_NOTE }
}

/// The battery of checks every braid positive knot satisfies.
pub fn braid_positivity_obstructions(data: &KnotData) -> ObstructionReport {
    let mut entries = Vec::new();
    if data.jones == Laurent1::one() {
        entries.push(inapplicable("trivial-knot", "V = 1: obstructions apply to nontrivial knots"));
        return ObstructionReport { entries, overall: Overall::Consistent, note: REPORT_NOTE };
    }
    let min_v = data.jones.min_deg().unwrap_or_else(BigRational::zero);
    let span = data.jones.span().unwrap_or_else(BigRational::zero);
    let min_cf = data.jones.min_coeff().cloned().unwrap_or_else(BigInt::zero);
    entries.push(entry(
        "fiedler-jones",
        format!("min deg V = {min_v} > 0 with minimal coefficient {min_cf} = 1"),
        min_v.is_positive() && min_cf.is_one(),
    ));
    entries.push(entry(
        "min-deg-v-quarter",
        format!("min deg V = {min_v} >= span V / 4 = {span}/4"),
        rat(4) * &min_v >= span,
    ));
    let max_alex = data.alexander.max_deg().unwrap_or_else(BigRational::zero);
    entries.push(entry(
        "fibered-degrees",
        format!("max deg Alexander = {max_alex} equals min deg V = {min_v}"),
        max_alex == min_v,
    ));
    entries.push(entry(
        "monic-alexander",
        "Alexander polynomial is monic".into(),
        data.alexander.is_monic(),
    ));
    let overall = if entries.iter().any(|e| e.verdict == Verdict::Violated) {
        Overall::NotBraidPositive
    } else {
        Overall::Consistent
    };
    ObstructionReport { entries, overall, note: REPORT_NOTE }
}

#[derive(Clone, Debug, Serialize)]
pub enum BraidPositivity {
    Yes { witness: BraidWord },
    No { report: ObstructionReport, reason: String },
    Unknown { reason: String },
}

fn canonical_under_rotation(w: &[i32]) -> bool {
    let n = w.len();
    (1..n).all(|r| {
        let rot = w[r..].iter().chain(&w[..r]);
        w.iter().cmp(rot) != std::cmp::Ordering::Greater
    })
}

/// Bounded search for a positive braid word whose closure matches the knot.
/// A reduced braid positive diagram has at most 4 min deg V crossings, so
/// the word length is capped by min(4 min deg V, budget). A witness is
/// certified by agreement on V, P and the signature (a polynomial-level
/// certificate, not a proof of isotopy).
pub fn decide_braid_positive(
    d: &PlanarDiagram,
    budget: usize,
) -> Result<BraidPositivity, KnotError> {
    let data = knot_data(d)?;
    let report = braid_positivity_obstructions(&data);
    if report.overall == Overall::NotBraidPositive {
        let names = report.violated().join(", ");
        return Ok(BraidPositivity::No { report, reason: format!("obstructions violated: {names}") });
    }
    let min_v = data.jones.min_deg().unwrap_or_else(BigRational::zero);
    if min_v < BigRational::one() || !min_v.is_integer() {
        return Ok(BraidPositivity::No {
            report,
            reason: format!("min deg V = {min_v} < 1"),
        });
    }
    let bound = 4 * i64::try_from(min_v.to_integer()).unwrap_or(i64::MAX) as usize;
    let lmax = bound.min(budget);
    for len in 1..=lmax {
        for n in 2..=len + 1 {
            let mut word = vec![1i32; len];
            loop {
                if canonical_under_rotation(&word) && word_is_search_candidate(&word, n) {
                    if let Some(witness) = certify_witness(&word, n, &data)? {
                        return Ok(BraidPositivity::Yes { witness });
                    }
                }
                // odometer over letters 1..n-1
                let mut i = 0;
                loop {
                    if i == len {
                        break;
                    }
                    if (word[i] as usize) < n - 1 {
                        word[i] += 1;
                        break;
                    }
                    word[i] = 1;
                    i += 1;
                }
                if i == len {
                    break;
                }
            }
        }
    }
    if bound <= budget {
        Ok(BraidPositivity::No {
            reason: format!("search exhausted all positive words of length <= {bound}"),
            report,
        })
    } else {
        Ok(BraidPositivity::Unknown {
            reason: format!("search bound {bound} exceeds budget {budget}"),
        })
    }
}

/// Every generator present (connected closure) and none exactly once
/// (otherwise Markov-reducible: the reduced word appears at a shorter
/// length).
fn word_is_search_candidate(word: &[i32], n: usize) -> bool {
    let mut occ = vec![0usize; n];
    for &l in word {
        occ[l as usize] += 1;
    }
    (1..n).all(|g| occ[g] >= 2) || (n == 2 && word.len() == 1)
}

fn certify_witness(
    word: &[i32],
    n: usize,
    data: &KnotData,
) -> Result<Option<BraidWord>, KnotError> {
    let b = BraidWord::new(n, word.to_vec())?;
    let closure = b.closure()?;
    if closure.component_count() != 1 {
        return Ok(None);
    }
    if symmetrized_signature(&seifert_matrix_from_braid(&b)) != data.signature {
        return Ok(None);
    }
    if jones(&closure)? != data.jones {
        return Ok(None);
    }
    if homfly(&closure, HOMFLY_BUDGET)? != data.homfly {
        return Ok(None);
    }
    Ok(Some(b))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Family {
    Torus,
    Braid,
    Rational,
    Pretzel,
    ConnectedSum,
}

pub const ALL_FAMILIES: [Family; 5] =
    [Family::Torus, Family::Braid, Family::Rational, Family::Pretzel, Family::ConnectedSum];

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub diagram: PlanarDiagram,
    pub family: Family,
    /// Human-readable construction tag (word / tangle entries).
    pub construction: String,
    pub canonical_genus: i64,
}

/// Deterministic corpus of positive knot diagrams: positive braid closures
/// (torus, random, and connected sums via shifted concatenation) and positive
/// rational closures. Every emitted crossing has sign +1 and the canonical
/// genus is recorded from the Seifert decomposition.
pub fn generate_positive_corpus(
    seed: u64,
    count: usize,
    size_range: (usize, usize),
    families: &[Family],
) -> Vec<CorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = size_range;
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0usize;
    while out.len() < count && attempts < 1000 * (count + 1) {
        attempts += 1;
        let family = families[rng.gen_range(0..families.len())];
        let candidate = match family {
            Family::Torus => {
                let m = 2 * rng.gen_range(1..=7) + 1;
                BraidWord::new(2, vec![1; m])
                    .ok()
                    .and_then(|b| b.closure().ok().map(|d| (d, format!("torus(2,{m})"))))
            }
            Family::Braid => {
                let n = rng.gen_range(2..=4);
                let len = rng.gen_range(lo.max(n)..=hi.max(n));
                let letters: Vec<i32> = (0..len).map(|_| rng.gen_range(1..n as i32)).collect();
                BraidWord::new(n, letters.clone()).ok().and_then(|b| {
                    b.closure().ok().map(|d| (d, format!("braid n={n} w={letters:?}")))
                })
            }
            Family::ConnectedSum => {
                let m1 = 2 * rng.gen_range(1..=3) + 1;
                let m2 = 2 * rng.gen_range(1..=3) + 1;
                let mut letters = vec![1i32; m1];
                letters.extend(std::iter::repeat(2).take(m2));
                BraidWord::new(3, letters).ok().and_then(|b| {
                    b.closure()
                        .ok()
                        .map(|d| (d, format!("torus(2,{m1}) # torus(2,{m2})")))
                })
            }
            Family::Pretzel => {
                let qs: Vec<i64> = (0..3).map(|_| -(2 * rng.gen_range(0..=2) + 1)).collect();
                crate::build::pretzel(&qs)
                    .ok()
                    .map(|d| (d, format!("pretzel {qs:?}")))
            }
            Family::Rational => {
                let k = rng.gen_range(1..=3);
                let entries: Vec<i64> = (0..k).map(|_| rng.gen_range(1..=4)).collect();
                let neg: Vec<i64> = entries.iter().map(|&e| -e).collect();
                [entries, neg]
                    .into_iter()
                    .filter_map(|e| {
                        let d = ConwayTangle(e.clone()).closure().ok()?;
                        Some((d, format!("rational {e:?}")))
                    })
                    .find(|(d, _)| d.crossings().iter().all(|x| x.sign > 0))
            }
        };
        let Some((d, construction)) = candidate else { continue };
        if d.component_count() != 1
            || d.crossing_count() < lo
            || d.crossing_count() > hi
            || !d.crossings().iter().all(|x| x.sign > 0)
        {
            continue;
        }
        let canonical_genus = seifert_decomposition(&d).canonical_genus();
        out.push(CorpusEntry { diagram: d, family, construction, canonical_genus });
    }
    out
}

/// The per-diagram positive-knot theorem suite: every inequality any positive
/// diagram must satisfy, instantiated with exact values. Used by the
/// verification suites; violated entries indicate a bug, not a verdict.
pub fn positive_diagram_suite(d: &PlanarDiagram) -> Result<Vec<ObstructionEntry>, KnotError> {
    if d.component_count() != 1 || !d.crossings().iter().all(|x| x.sign > 0) {
        return Err(KnotError::precondition("suite expects a positive knot diagram"));
    }
    let g = d.to_gauss()?;
    let c = d.crossing_count() as i64;
    let (v2, v3) = (v2_gauss(&g)?, v3_gauss(&g)?);
    let status = reduction_status(&g);
    let lk = intersection_graph(&g).edges.len() as i64;
    let g_can = seifert_decomposition(d).canonical_genus();
    let v = jones(d)?;
    let p = homfly(d, HOMFLY_BUDGET)?;
    let max_v = v.max_deg().unwrap_or_else(BigRational::zero);
    let max_m = p.max_deg_m().unwrap_or(0);
    let mut out = Vec::new();
    if status.is_reduced {
        out.push(entry("v3-crossings-reduced", format!("v3 = {v3} >= c = {c}"), v3 >= c));
    } else {
        out.push(inapplicable("v3-crossings-reduced", "diagram not reduced"));
    }
    if status.is_bireduced && !status.is_composite {
        let bound = 4 * ((c - 1) / 2);
        out.push(entry(
            "v3-bireduced",
            format!("v3 = {v3} >= 4 floor((c-1)/2) = {bound}"),
            v3 >= bound,
        ));
    } else {
        out.push(inapplicable("v3-bireduced", "diagram not bireduced prime"));
    }
    out.push(entry("v2-quarter", format!("4 v2 = {} >= c = {c}", 4 * v2), 4 * v2 >= c));
    if v3 > v2 {
        out.push(entry(
            "crossing-quadratic",
            format!("c (v3 - v2) = {} >= 2 v2^2 = {}", c * (v3 - v2), 2 * v2 * v2),
            c * (v3 - v2) >= 2 * v2 * v2,
        ));
    } else {
        out.push(inapplicable("crossing-quadratic", "needs v3 > v2"));
    }
    out.push(entry(
        "v3-v2-product",
        format!("3 v3 = {} <= 4 v2 c = {}", 3 * v3, 4 * v2 * c),
        3 * v3 <= 4 * v2 * c,
    ));
    out.push(entry("v3-genus", format!("v3 = {v3} >= 4 g_can = {}", 4 * g_can), v3 >= 4 * g_can));
    out.push(entry("v2-genus", format!("v2 = {v2} >= g_can = {g_can}"), v2 >= g_can));
    out.push(entry("linked-genus", format!("lk = {lk} >= 3 g_can = {}", 3 * g_can), lk >= 3 * g_can));
    out.push(entry(
        "five-v2-jones",
        format!("5 v2 = {} >= max deg V = {max_v}", 5 * v2),
        rat(5 * v2) >= max_v,
    ));
    out.push(entry("v3-83-v2", format!("3 v3 = {} >= 8 v2 = {}", 3 * v3, 8 * v2), 3 * v3 >= 8 * v2));
    out.push(entry(
        "v3-homfly-m-degree",
        format!("v3 = {v3} >= 2 max deg_m P = {}", 2 * max_m),
        v3 >= 2 * max_m,
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::diagram;

    #[test]
    fn figure_eight_not_positive() {
        let data = knot_data(&diagram("4_1").unwrap()).unwrap();
        let r = positivity_obstructions(&data);
        assert_eq!(r.overall, Overall::NotPositive);
        assert!(r.violated().contains(&"vassiliev-positive"), "{:?}", r.violated());
    }

    #[test]
    fn six_two_not_positive_by_span() {
        let data = knot_data(&diagram("6_2").unwrap()).unwrap();
        assert_eq!(data.v3, 4);
        let span = data.jones.span().unwrap();
        assert_eq!(span, rat(6));
        let r = positivity_obstructions(&data);
        assert_eq!(r.overall, Overall::NotPositive);
        assert!(r.violated().contains(&"crossings-at-most-v3"));
    }

    #[test]
    fn positive_fixtures_consistent() {
        for name in ["3_1", "5_1", "7_5", "granny", "8_19"] {
            let data = knot_data(&diagram(name).unwrap()).unwrap();
            let r = positivity_obstructions(&data);
            assert_eq!(r.overall, Overall::Consistent, "{name}: {:?}", r.violated());
        }
    }

    #[test]
    fn braid_battery_examples() {
        let m52 = knot_data(&diagram("!5_2").unwrap()).unwrap();
        let r = braid_positivity_obstructions(&m52);
        assert_eq!(r.overall, Overall::NotBraidPositive);
        assert!(r.violated().contains(&"min-deg-v-quarter"), "{:?}", r.violated());

        let k73 = knot_data(&diagram("7_3").unwrap()).unwrap();
        let r = braid_positivity_obstructions(&k73);
        assert!(r.violated().contains(&"monic-alexander"), "{:?}", r.violated());

        let tref = knot_data(&diagram("3_1").unwrap()).unwrap();
        assert_eq!(braid_positivity_obstructions(&tref).overall, Overall::Consistent);
    }

    #[test]
    fn decide_trefoil_yes() {
        let t = diagram("3_1").unwrap();
        match decide_braid_positive(&t, 16).unwrap() {
            BraidPositivity::Yes { witness } => {
                assert_eq!(witness.n, 2);
                assert_eq!(witness.letters, vec![1, 1, 1]);
            }
            other => panic!("expected yes, got {other:?}"),
        }
    }

    #[test]
    fn decide_negative_examples() {
        match decide_braid_positive(&diagram("4_1").unwrap(), 16).unwrap() {
            BraidPositivity::No { report, .. } => {
                assert!(report.violated().contains(&"fiedler-jones"));
            }
            other => panic!("expected no, got {other:?}"),
        }
        // genus-1 path: max deg Alexander = 1 differs from min deg V = 2
        match decide_braid_positive(&diagram("7_4").unwrap(), 16).unwrap() {
            BraidPositivity::No { report, .. } => {
                assert!(report.violated().contains(&"fibered-degrees"), "{:?}", report.violated());
            }
            other => panic!("expected no, got {other:?}"),
        }
    }

    #[test]
    fn corpus_deterministic_and_positive() {
        let a = generate_positive_corpus(7, 40, (3, 12), &ALL_FAMILIES);
        let b = generate_positive_corpus(7, 40, (3, 12), &ALL_FAMILIES);
        assert_eq!(a.len(), 40);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.construction, y.construction);
            assert!(x.diagram.crossings().iter().all(|c| c.sign > 0));
            assert!((3..=12).contains(&x.diagram.crossing_count()));
            assert_eq!(x.diagram.component_count(), 1);
        }
    }

    #[test]
    fn corpus_torus_family() {
        let e = generate_positive_corpus(1, 1, (3, 16), &[Family::Torus]);
        assert_eq!(e.len(), 1);
        assert!(e[0].construction.starts_with("torus(2,"), "{}", e[0].construction);
        let c = e[0].diagram.crossing_count() as i64;
        assert_eq!(e[0].canonical_genus, (c - 1) / 2);
    }

    #[test]
    fn suite_on_small_positive_diagrams() {
        for name in ["3_1", "5_1", "5_2", "7_3", "granny"] {
            // 5_2 and 7_3 fixtures are negative diagrams; use mirrors
            let d = match name {
                "5_2" | "7_3" => diagram(&format!("!{name}")).unwrap(),
                _ => diagram(name).unwrap(),
            };
            let entries = positive_diagram_suite(&d).unwrap();
            for e in &entries {
                assert_ne!(e.verdict, Verdict::Violated, "{name}: {} {}", e.name, e.detail);
            }
        }
    }
}

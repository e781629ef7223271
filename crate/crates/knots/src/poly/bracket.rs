//! Kauffman bracket state sum and the Jones polynomial.

use num_bigint::BigInt;
use std::collections::HashMap;

use super::Laurent1;
use crate::error::KnotError;
use crate::planar::{PlanarDiagram, UnionFind};

/// Largest crossing number accepted by the 2^c state sum.
pub const BRACKET_BUDGET: usize = 24;

/// Jones polynomial in t, computed from the Kauffman bracket.
///
/// The bracket is evaluated over all 2^c states; an A-smoothing joins the
/// strand ends (0,1) and (2,3) in slot order (the regions swept rotating the
/// over-strand counterclockwise merge), a B-smoothing joins (1,2) and (3,0).
/// The bracket is normalized by (-A^3)^(-w) and A = t^(-1/4).
pub fn jones(d: &PlanarDiagram) -> Result<Laurent1, KnotError> {
    let c = d.crossing_count();
    if c > BRACKET_BUDGET {
        return Err(KnotError::Budget(format!(
            "bracket state sum limited to {BRACKET_BUDGET} crossings, got {c}"
        )));
    }
    // counts[(A-exponent, loops)] = number of states
    let mut counts: HashMap<(i64, usize), BigInt> = HashMap::new();
    let arcs = d.arc_count().max(1);
    for state in 0u64..(1u64 << c) {
        let mut uf = UnionFind::new(arcs);
        let mut exp = 0i64;
        for (ci, x) in d.crossings().iter().enumerate() {
            let a_smooth = (state >> ci) & 1 == 0;
            exp += if a_smooth { 1 } else { -1 };
            let pairs: [(usize, usize); 2] =
                if a_smooth { [(0, 1), (2, 3)] } else { [(1, 2), (3, 0)] };
            for (s, t) in pairs {
                uf.union(x.arcs[s], x.arcs[t]);
            }
        }
        let loops = if d.arc_count() == 0 {
            d.extra_circles
        } else {
            let mut roots: Vec<usize> = (0..arcs).map(|a| uf.find(a)).collect();
            roots.sort_unstable();
            roots.dedup();
            roots.len() + d.extra_circles
        };
        *counts.entry((exp, loops)).or_default() += 1;
    }
    // delta = -A^2 - A^-2
    let delta = {
        let mut p = Laurent1::zero();
        p.add_term_half(4, &BigInt::from(-1));
        p.add_term_half(-4, &BigInt::from(-1));
        p
    };
    let max_loops = counts.keys().map(|&(_, l)| l).max().unwrap_or(1);
    let mut delta_pows = vec![Laurent1::one()];
    for k in 1..max_loops {
        delta_pows.push(delta_pows[k - 1].mul(&delta));
    }
    let mut bracket = Laurent1::zero();
    for ((exp, loops), n) in counts {
        // A exponent in half units of A: exp crossings each give A^(+/-1).
        bracket = bracket.add(&delta_pows[loops - 1].mul_monomial_half(2 * exp, &n));
    }
    // normalize: multiply by (-A^3)^(-w)
    let w = d.writhe();
    let norm_sign = if w % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
    let f = bracket.mul_monomial_half(-6 * w, &norm_sign);
    // substitute t = A^-4: A exponent e becomes t exponent -e/4,
    // i.e. A half-exponent h becomes t half-exponent -h/4
    let mut out = Laurent1::zero();
    for (h, cf) in f.terms_half() {
        debug_assert!(h % 4 == 0, "normalized bracket exponent not divisible by 4");
        out.add_term_half(-h / 4, cf);
    }
    Ok(out)
}

/// v2 and v3 of a knot extracted from derivatives of its Jones polynomial:
/// v2 = -V''(1)/6 and v3 = -V''(1)/3 - V'''(1)/9.
pub fn vassiliev_from_jones(v: &Laurent1) -> Result<(i64, i64), KnotError> {
    use num_rational::BigRational;
    use num_traits::ToPrimitive;
    let d2 = v.derivative_at_one(2);
    let d3 = v.derivative_at_one(3);
    let six = BigRational::from(BigInt::from(6));
    let three = BigRational::from(BigInt::from(3));
    let nine = BigRational::from(BigInt::from(9));
    let v2 = -d2.clone() / six;
    let v3 = -d2 / three - d3 / nine;
    for q in [&v2, &v3] {
        if !q.is_integer() {
            return Err(KnotError::invalid("Jones derivative combination is not integral"));
        }
    }
    let to = |q: BigRational| -> Result<i64, KnotError> {
        q.to_integer()
            .to_i64()
            .ok_or_else(|| KnotError::invalid("Jones derivative out of i64 range"))
    };
    Ok((to(v2)?, to(v3)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::braid_closure;

    fn poly(pairs: &[(i64, i64)]) -> Laurent1 {
        let mut p = Laurent1::zero();
        for &(e, c) in pairs {
            p.add_term_half(2 * e, &BigInt::from(c));
        }
        p
    }

    #[test]
    fn trefoil_jones() {
        let d = braid_closure(2, &[1, 1, 1]).unwrap();
        let v = jones(&d).unwrap();
        assert_eq!(v, poly(&[(4, -1), (3, 1), (1, 1)]));
        let m = jones(&d.mirror()).unwrap();
        assert_eq!(m, v.conjugate());
        assert_eq!(vassiliev_from_jones(&v).unwrap(), (1, 4));
        assert_eq!(vassiliev_from_jones(&m).unwrap(), (1, -4));
    }

    #[test]
    fn figure_eight_jones() {
        let d = braid_closure(3, &[1, -2, 1, -2]).unwrap();
        let v = jones(&d).unwrap();
        assert_eq!(v, poly(&[(2, 1), (1, -1), (0, 1), (-1, -1), (-2, 1)]));
        assert!(v.is_self_conjugate());
        assert_eq!(vassiliev_from_jones(&v).unwrap(), (-1, 0));
    }

    #[test]
    fn unknot_and_kinks() {
        let d = PlanarDiagram::unknot();
        assert_eq!(jones(&d).unwrap(), Laurent1::one());
        let k = braid_closure(2, &[1]).unwrap(); // one kink after closure
        assert_eq!(jones(&k).unwrap(), Laurent1::one());
        // two kinks of opposite sign: sigma_1 sigma_1^-1 sigma_1 closes to an unknot
        let k2 = braid_closure(2, &[1, -1, 1]).unwrap();
        assert_eq!(jones(&k2).unwrap(), Laurent1::one());
        // sigma_1 sigma_1^-1 closes to a two-component unlink
        let unlink = braid_closure(2, &[1, -1]).unwrap();
        assert_eq!(unlink.component_count(), 2);
        let mut delta = Laurent1::zero();
        delta.add_term_half(1, &BigInt::from(-1));
        delta.add_term_half(-1, &BigInt::from(-1));
        assert_eq!(jones(&unlink).unwrap(), delta);
    }

    #[test]
    fn hopf_link_half_exponents() {
        let d = braid_closure(2, &[1, 1]).unwrap();
        let v = jones(&d).unwrap();
        // positive Hopf link: -t^(1/2) - t^(5/2)
        let mut exp = Laurent1::zero();
        exp.add_term_half(1, &BigInt::from(-1));
        exp.add_term_half(5, &BigInt::from(-1));
        assert_eq!(v, exp);
    }

    #[test]
    fn torus_2_5_jones() {
        let d = braid_closure(2, &[1, 1, 1, 1, 1]).unwrap();
        let v = jones(&d).unwrap();
        // V(5_1 mirror-positive) = t^2 + t^4 - t^5 + t^6 - t^7
        assert_eq!(v, poly(&[(2, 1), (4, 1), (5, -1), (6, 1), (7, -1)]));
        assert_eq!(vassiliev_from_jones(&v).unwrap(), (3, 20));
    }
}

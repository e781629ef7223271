//! HOMFLY polynomial by the descending-diagram skein recursion, plus an
//! independent Conway polynomial recursion used as a cross-check.
//!
//! Convention: l P(L-) + l^-1 P(L+) + m P(L0) = 0 with P(unknot) = 1, so
//! positive braid knots land in positive powers of l. Under this convention
//! V(t) = P(l = -it, m = i(t^-1/2 - t^1/2)) and the Conway polynomial is
//! nabla(z) = P(l = -i, m = -iz).

use num_bigint::BigInt;
use num_traits::One;

use super::{Laurent1, Laurent2};
use crate::error::KnotError;
use crate::planar::PlanarDiagram;

/// Default crossing budget for the exponential skein recursion.
pub const HOMFLY_BUDGET: usize = 16;

pub fn homfly(d: &PlanarDiagram, budget: usize) -> Result<Laurent2, KnotError> {
    if d.crossing_count() > budget {
        return Err(KnotError::Budget(format!(
            "skein recursion limited to {budget} crossings, got {}",
            d.crossing_count()
        )));
    }
    Ok(homfly_rec(d))
}

fn homfly_rec(d: &PlanarDiagram) -> Laurent2 {
    match d.first_bad_crossing() {
        None => {
            // descending diagram: an unlink
            let n = d.component_count();
            homfly_delta_pow(n - 1)
        }
        Some(ci) => {
            let switched = homfly_rec(&d.switch_crossing(ci));
            let smoothed = homfly_rec(&d.smooth_crossing(ci));
            if d.crossings()[ci].sign > 0 {
                // P(L+) = -l^2 P(L-) - l m P(L0)
                switched
                    .mul_monomial(2, 0, &BigInt::from(-1))
                    .add(&smoothed.mul_monomial(1, 1, &BigInt::from(-1)))
            } else {
                // P(L-) = -l^-2 P(L+) - l^-1 m P(L0)
                switched
                    .mul_monomial(-2, 0, &BigInt::from(-1))
                    .add(&smoothed.mul_monomial(-1, 1, &BigInt::from(-1)))
            }
        }
    }
}

/// ((-l - l^-1)/m)^k
fn homfly_delta_pow(k: usize) -> Laurent2 {
    let mut delta = Laurent2::zero();
    delta.add_term(1, -1, &BigInt::from(-1));
    delta.add_term(-1, -1, &BigInt::from(-1));
    let mut out = Laurent2::one();
    for _ in 0..k {
        out = out.mul(&delta);
    }
    out
}

/// Conway polynomial in z by its own skein recursion
/// (nabla(L+) - nabla(L-) = z nabla(L0)), independent of [`homfly`].
pub fn conway_skein(d: &PlanarDiagram, budget: usize) -> Result<Laurent1, KnotError> {
    if d.crossing_count() > budget {
        return Err(KnotError::Budget(format!(
            "skein recursion limited to {budget} crossings, got {}",
            d.crossing_count()
        )));
    }
    Ok(conway_rec(d))
}

fn conway_rec(d: &PlanarDiagram) -> Laurent1 {
    match d.first_bad_crossing() {
        None => {
            if d.component_count() == 1 {
                Laurent1::one()
            } else {
                Laurent1::zero() // split unlink
            }
        }
        Some(ci) => {
            let switched = conway_rec(&d.switch_crossing(ci));
            let smoothed = conway_rec(&d.smooth_crossing(ci));
            let z_smoothed = smoothed.mul_monomial_half(2, &BigInt::one());
            if d.crossings()[ci].sign > 0 {
                switched.add(&z_smoothed)
            } else {
                switched.sub(&z_smoothed)
            }
        }
    }
}

/// Jones polynomial of a knot from HOMFLY:
/// V(t) = P(l = -it, m = i(t^-1/2 - t^1/2)).
///
/// Terms of P satisfy a + b even for knots, so powers of i cancel to signs.
pub fn jones_from_homfly(p: &Laurent2) -> Result<Laurent1, KnotError> {
    // m^b with m = i (t^-1/2 - t^1/2): i^b * (t^-1/2 - t^1/2)^b
    let mut mpow = Laurent1::zero();
    mpow.add_term_half(-1, &BigInt::from(1));
    mpow.add_term_half(1, &BigInt::from(-1));
    let mut out = Laurent1::zero();
    for ((a, b), c) in p.terms() {
        if (a + b) % 2 != 0 {
            return Err(KnotError::precondition(
                "Jones specialization implemented for knots only (odd l+m degree)",
            ));
        }
        // (-i)^a i^b = i^(b-a) (-1)^... : overall i^(a+b) (-1)^a; a+b even
        // gives i^(a+b) = (-1)^((a+b)/2).
        let sign_exp = (a + b) / 2 + a;
        let s = if sign_exp.rem_euclid(2) == 0 { BigInt::from(1) } else { BigInt::from(-1) };
        let term = mpow.pow(b as usize).mul_monomial_half(2 * a, &(c * s));
        out = out.add(&term);
    }
    Ok(out)
}

/// Conway polynomial from HOMFLY: nabla(z) = P(l = -i, m = -iz).
pub fn conway_from_homfly(p: &Laurent2) -> Result<Laurent1, KnotError> {
    let mut out = Laurent1::zero();
    for ((a, b), c) in p.terms() {
        if (a + b) % 2 != 0 {
            return Err(KnotError::precondition(
                "Conway specialization implemented for knots only (odd l+m degree)",
            ));
        }
        // (-i)^a (-i)^b = (-i)^(a+b) = (-1)^((a+b)/2) for a+b even
        let s = if ((a + b) / 2).rem_euclid(2) == 0 { BigInt::from(1) } else { BigInt::from(-1) };
        out.add_term_half(2 * b, &(c * s));
    }
    Ok(out)
}

/// Alexander polynomial from Conway: Delta(t) = nabla(t^1/2 - t^-1/2),
/// in the symmetric normalization with Delta(1) = 1.
pub fn alexander_from_conway(nabla: &Laurent1) -> Laurent1 {
    let mut z = Laurent1::zero();
    z.add_term_half(1, &BigInt::from(1));
    z.add_term_half(-1, &BigInt::from(-1));
    let mut out = Laurent1::zero();
    for (h, c) in nabla.terms_half() {
        assert!(h % 2 == 0, "Conway polynomial has integral z powers");
        out = out.add(&z.pow((h / 2) as usize).mul_monomial_half(0, c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::braid_closure;

    fn l2(terms: &[(i64, i64, i64)]) -> Laurent2 {
        let mut p = Laurent2::zero();
        for &(a, b, c) in terms {
            p.add_term(a, b, &BigInt::from(c));
        }
        p
    }

    #[test]
    fn trefoil_homfly() {
        let d = braid_closure(2, &[1, 1, 1]).unwrap();
        let p = homfly(&d, HOMFLY_BUDGET).unwrap();
        assert_eq!(p, l2(&[(2, 0, -2), (4, 0, -1), (2, 2, 1)]));
    }

    #[test]
    fn figure_eight_homfly() {
        let d = braid_closure(3, &[1, -2, 1, -2]).unwrap();
        let p = homfly(&d, HOMFLY_BUDGET).unwrap();
        assert_eq!(p, l2(&[(2, 0, -1), (0, 0, -1), (-2, 0, -1), (0, 2, 1)]));
    }

    #[test]
    fn jones_specialization_matches_bracket() {
        for (n, word) in [
            (2usize, vec![1, 1, 1]),
            (3, vec![1, -2, 1, -2]),
            (2, vec![1, 1, 1, 1, 1]),
            (3, vec![1, 1, 2, 2, 1, 2]),
            (3, vec![-1, 2, -1, 2, -1, 2]),
        ] {
            let d = braid_closure(n, &word).unwrap();
            if d.component_count() != 1 {
                continue;
            }
            let p = homfly(&d, HOMFLY_BUDGET).unwrap();
            let v1 = jones_from_homfly(&p).unwrap();
            let v2 = super::super::bracket::jones(&d).unwrap();
            assert_eq!(v1, v2, "word {word:?}");
        }
    }

    #[test]
    fn conway_paths_agree() {
        for (n, word) in [
            (2usize, vec![1, 1, 1]),
            (3, vec![1, -2, 1, -2]),
            (2, vec![1, 1, 1, 1, 1]),
            (3, vec![1, 1, 2, -1, 2, 2]),
        ] {
            let d = braid_closure(n, &word).unwrap();
            let p = homfly(&d, HOMFLY_BUDGET).unwrap();
            let c1 = conway_from_homfly(&p).unwrap();
            let c2 = conway_skein(&d, HOMFLY_BUDGET).unwrap();
            assert_eq!(c1, c2, "word {word:?}");
        }
    }

    #[test]
    fn trefoil_conway_and_alexander() {
        let d = braid_closure(2, &[1, 1, 1]).unwrap();
        let c = conway_skein(&d, HOMFLY_BUDGET).unwrap();
        // nabla = 1 + z^2
        assert_eq!(c.coeff(0), BigInt::from(1));
        assert_eq!(c.coeff(2), BigInt::from(1));
        let a = alexander_from_conway(&c);
        // Delta = t - 1 + t^-1
        assert_eq!(a.coeff(1), BigInt::from(1));
        assert_eq!(a.coeff(0), BigInt::from(-1));
        assert_eq!(a.coeff(-1), BigInt::from(1));
        assert_eq!(a.eval(&num_rational::BigRational::one()), num_rational::BigRational::one());
    }

    #[test]
    fn homfly_mirror_trefoil() {
        let d = braid_closure(2, &[-1, -1, -1]).unwrap();
        let p = homfly(&d, HOMFLY_BUDGET).unwrap();
        assert_eq!(p, l2(&[(-2, 0, -2), (-4, 0, -1), (-2, 2, 1)]));
    }
}

//! Seifert matrix of a knot via its braided form, matrix signature, and the
//! Alexander polynomial det(V - tV^T).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::codes::BraidWord;
use crate::error::KnotError;
use crate::planar::PlanarDiagram;
use crate::poly::Laurent1;
use crate::surfaces::vogel_braiding;

#[derive(Clone, Debug, Serialize)]
pub struct SeifertRecord {
    pub matrix: Vec<Vec<i64>>,
    pub signature: i64,
    /// det(V - tV^T) recentred so that it is symmetric and evaluates to 1 at t=1.
    pub alexander: Laurent1,
}

/// Seifert matrix of a braid closure, one band per letter, one generating
/// loop per consecutive pair of occurrences of the same generator. Entry
/// conventions (push-off direction, band handedness) are pinned by the tests
/// below: the symmetrized matrix of the positive trefoil has signature +2
/// and det(V - tV^T) reproduces the Conway-derived Alexander polynomial.
pub fn seifert_matrix_from_braid(b: &BraidWord) -> Vec<Vec<i64>> {
    // loops: (generator, word position of first band, word position of second)
    let mut loops: Vec<(usize, usize, usize)> = Vec::new();
    for g in 1..b.n {
        let occ: Vec<usize> = b
            .letters
            .iter()
            .enumerate()
            .filter(|(_, &l)| l.unsigned_abs() as usize == g)
            .map(|(p, _)| p)
            .collect();
        for w in occ.windows(2) {
            loops.push((g, w[0], w[1]));
        }
    }
    let sign = |p: usize| b.letters[p].signum() as i64;
    let m = loops.len();
    let mut v = vec![vec![0i64; m]; m];
    for (xi, &(gx, a, bb)) in loops.iter().enumerate() {
        v[xi][xi] = (sign(a) + sign(bb)) / 2;
        for (yi, &(gy, c, d)) in loops.iter().enumerate() {
            if gy == gx && c == bb {
                // consecutive loops of one generator share the band at c
                if sign(c) > 0 {
                    v[yi][xi] = -1;
                } else {
                    v[xi][yi] = 1;
                }
            } else if gy == gx + 1 {
                // adjacent generators interact when their spans interleave
                let c_in = a < c && c < bb;
                let d_in = a < d && d < bb;
                if c_in && !d_in {
                    v[yi][xi] = 1;
                } else if d_in && !c_in {
                    v[yi][xi] = -1;
                }
            }
        }
    }
    v
}

/// Signature of the symmetric matrix V + V^T by rational congruent
/// diagonalization.
pub fn symmetrized_signature(v: &[Vec<i64>]) -> i64 {
    let m = v.len();
    let mut a: Vec<Vec<BigRational>> = (0..m)
        .map(|i| (0..m).map(|j| BigRational::from(BigInt::from(v[i][j] + v[j][i]))).collect())
        .collect();
    let mut sig = 0i64;
    for i in 0..m {
        if a[i][i].is_zero() {
            if let Some(j) = (i + 1..m).find(|&j| !a[i][j].is_zero()) {
                if !a[j][j].is_zero() {
                    // adding +/- (row j, col j) makes the pivot 2a[i][j] + a[j][j]
                    // or -2a[i][j] + a[j][j]; at most one of these is zero
                    let two_aij = BigRational::from(BigInt::from(2)) * &a[i][j];
                    let flip = (&two_aij + &a[j][j]).is_zero();
                    for r in 0..m {
                        let t = a[r][j].clone();
                        if flip {
                            a[r][i] -= t;
                        } else {
                            a[r][i] += t;
                        }
                    }
                    for cidx in 0..m {
                        let t = a[j][cidx].clone();
                        if flip {
                            a[i][cidx] -= t;
                        } else {
                            a[i][cidx] += t;
                        }
                    }
                } else {
                    // a[i][i] = a[j][j] = 0, a[i][j] != 0: the pair contributes
                    // a hyperbolic block; clear it and move on.
                    for r in 0..m {
                        if r != i && r != j {
                            let f = &a[r][i] / &a[i][j];
                            let t = &f * &a[j][j];
                            a[r][j] = &a[r][j] - t;
                            let rowj = a[j].clone();
                            for cidx in 0..m {
                                let t = &f * &rowj[cidx];
                                a[r][cidx] = &a[r][cidx] - t;
                            }
                        }
                    }
                    for cidx in 0..m {
                        if cidx != i && cidx != j {
                            let f = &a[i][cidx] / &a[i][j];
                            let coli: Vec<BigRational> = (0..m).map(|r| a[r][j].clone()).collect();
                            for r in 0..m {
                                let t = &f * &coli[r];
                                a[r][cidx] = &a[r][cidx] - t;
                            }
                        }
                    }
                    for r in 0..m {
                        a[r][i] = BigRational::zero();
                        a[r][j] = BigRational::zero();
                    }
                    for cidx in 0..m {
                        a[i][cidx] = BigRational::zero();
                        a[j][cidx] = BigRational::zero();
                    }
                    continue;
                }
            } else {
                continue;
            }
        }
        let piv = a[i][i].clone();
        sig += if piv.is_positive() { 1 } else { -1 };
        for r in i + 1..m {
            if a[r][i].is_zero() {
                continue;
            }
            let f = &a[r][i] / &piv;
            let rowi = a[i].clone();
            for cidx in 0..m {
                let t = &f * &rowi[cidx];
                a[r][cidx] = &a[r][cidx] - t;
            }
        }
        for cidx in i + 1..m {
            if a[i][cidx].is_zero() {
                continue;
            }
            let f = &a[i][cidx] / &piv;
            let coli: Vec<BigRational> = (0..m).map(|r| a[r][i].clone()).collect();
            for r in 0..m {
                let t = &f * &coli[r];
                a[r][cidx] = &a[r][cidx] - t;
            }
        }
    }
    sig
}

/// Fraction-free integer determinant (Bareiss).
fn det_bigint(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let m = a.len();
    if m == 0 {
        return BigInt::one();
    }
    let mut denom = BigInt::one();
    let mut sign = 1i64;
    for k in 0..m - 1 {
        if a[k][k].is_zero() {
            match (k + 1..m).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..m {
            for j in k + 1..m {
                let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = &t / &denom;
            }
        }
        denom = a[k][k].clone();
    }
    if sign > 0 {
        a[m - 1][m - 1].clone()
    } else {
        -a[m - 1][m - 1].clone()
    }
}

/// det(V - tV^T), recentred by t^{-g} so the result is symmetric in t and
/// t^{-1} and takes value 1 at t = 1.
pub fn alexander_from_matrix(v: &[Vec<i64>]) -> Laurent1 {
    let m = v.len();
    // degree <= m; interpolate from m+1 integer evaluation points
    let pts: Vec<i64> = (0..=m as i64).collect();
    let vals: Vec<BigInt> = pts
        .iter()
        .map(|&t| {
            let a: Vec<Vec<BigInt>> = (0..m)
                .map(|i| (0..m).map(|j| BigInt::from(v[i][j]) - BigInt::from(t) * v[j][i]).collect())
                .collect();
            det_bigint(a)
        })
        .collect();
    // Lagrange interpolation via Newton's divided differences (exact)
    let n = pts.len();
    let mut dd: Vec<BigRational> = vals.iter().map(|v| BigRational::from(v.clone())).collect();
    for lvl in 1..n {
        for i in (lvl..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = BigRational::from(BigInt::from(pts[i] - pts[i - lvl]));
            dd[i] = num / den;
        }
    }
    // expand Newton form to coefficients
    let mut coeffs = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        // coeffs = coeffs * (t - pts[i]) + dd[i]
        let mut next = vec![BigRational::zero(); n];
        for (e, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            next[e + 1] = &next[e + 1] + c;
            next[e] = &next[e] - c * BigRational::from(BigInt::from(pts[i]));
        }
        next[0] = &next[0] + &dd[i];
        coeffs = next;
    }
    let mut p = Laurent1::zero();
    for (e, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            debug_assert!(c.is_integer());
            p.add_term_half(2 * (e as i64 - (m as i64) / 2), &c.to_integer());
        }
    }
    debug_assert_eq!(m % 2, 0, "knot Seifert matrices have even rank");
    debug_assert!(p.eval(&BigRational::one()).is_one(), "det(V - V^T) must be 1");
    p
}

/// Seifert matrix of the canonical surface of a braided form of the diagram,
/// with its signature and Alexander polynomial.
pub fn seifert_signature(d: &PlanarDiagram) -> Result<SeifertRecord, KnotError> {
    if d.component_count() != 1 {
        return Err(KnotError::precondition("Seifert signature implemented for knot diagrams"));
    }
    let braid = vogel_braiding(d)?.braid;
    let v = seifert_matrix_from_braid(&braid);
    let signature = symmetrized_signature(&v);
    let alexander = alexander_from_matrix(&v);
    Ok(SeifertRecord { matrix: v, signature, alexander })
}

//! Fixed-size complex matrix helpers: a cyclic Jacobi eigensolver for 4x4
//! Hermitian matrices, with eigenvector accumulation.

// Index loops mirror the textbook rotation formulas better than iterators.
#![allow(clippy::needless_range_loop)]

use num_complex::Complex64;

use crate::error::{Error, Result};

pub(crate) type Matrix4 = [[Complex64; 4]; 4];

const OFF_DIAGONAL_CONVERGENCE: f64 = 1e-14;
const MAX_SWEEPS: usize = 60;

fn off_diagonal_norm(m: &Matrix4) -> f64 {
    let mut sum = 0.0;
    for p in 0..4 {
        for q in 0..4 {
            if p != q {
                sum += m[p][q].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// Eigenvalues and orthonormal eigenvectors (columns of the returned matrix)
/// of a Hermitian 4x4 matrix, by cyclic complex Jacobi rotations.
///
/// Iterates full sweeps until the off-diagonal Frobenius norm drops below
/// 1e-14. Hermiticity of the input is the caller's responsibility.
pub(crate) fn jacobi_hermitian(m: &Matrix4) -> Result<([f64; 4], Matrix4)> {
    let mut a = *m;
    let mut v: Matrix4 = [[Complex64::new(0.0, 0.0); 4]; 4];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = Complex64::new(1.0, 0.0);
    }

    let mut sweeps = 0;
    while off_diagonal_norm(&a) >= OFF_DIAGONAL_CONVERGENCE {
        if sweeps >= MAX_SWEEPS {
            return Err(Error::EigensolverDidNotConverge {
                sweeps,
                off_diagonal: off_diagonal_norm(&a),
            });
        }
        sweeps += 1;
        for p in 0..3 {
            for q in (p + 1)..4 {
                let apq = a[p][q];
                let mag = apq.norm();
                if mag < 1e-300 {
                    continue;
                }
                // Diagonalize the 2x2 Hermitian block [[app, apq], [apq*, aqq]].
                let phase = apq / mag;
                let tau = (a[p][p].re - a[q][q].re) / (2.0 * mag);
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                let sp = s * phase;

                for k in 0..4 {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp + sp.conj() * akq;
                    a[k][q] = c * akq - sp * akp;
                }
                for k in 0..4 {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk + sp * aqk;
                    a[q][k] = c * aqk - sp.conj() * apk;
                }
                a[p][q] = Complex64::new(0.0, 0.0);
                a[q][p] = Complex64::new(0.0, 0.0);
                for k in 0..4 {
                    let vkp = v[k][p];
                    let vkq = v[k][q];
                    v[k][p] = c * vkp + sp.conj() * vkq;
                    v[k][q] = c * vkq - sp * vkp;
                }
            }
        }
    }

    let values = [a[0][0].re, a[1][1].re, a[2][2].re, a[3][3].re];
    Ok((values, v))
}

pub(crate) fn matrix_sub(a: &Matrix4, b: &Matrix4) -> Matrix4 {
    let mut out = [[Complex64::new(0.0, 0.0); 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[i][j] - b[i][j];
        }
    }
    out
}

pub(crate) fn hermitian_defect(m: &Matrix4) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..4 {
        for j in 0..4 {
            worst = worst.max((m[i][j] - m[j][i].conj()).norm());
        }
    }
    worst
}

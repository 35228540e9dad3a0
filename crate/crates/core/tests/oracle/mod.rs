//! Reference computations that avoid the library's own linear algebra.

#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64;
use qcapon::qlinalg::{QMatrix, QVector};
use qcapon::Quaternion;
use rand::Rng;

pub fn random_quat<R: Rng>(rng: &mut R) -> Quaternion {
    Quaternion::new(
        rng.random_range(-1.0..1.0),
        rng.random_range(-1.0..1.0),
        rng.random_range(-1.0..1.0),
        rng.random_range(-1.0..1.0),
    )
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> QMatrix {
    QMatrix::from_fn(rows, cols, |_, _| random_quat(rng))
}

pub fn random_vector<R: Rng>(rng: &mut R, n: usize) -> QVector {
    QVector::from_fn(n, |_| random_quat(rng))
}

/// `B B^H + shift·I`, summed entry by entry.
pub fn random_hpd<R: Rng>(rng: &mut R, n: usize, shift: f64) -> QMatrix {
    let b = random_matrix(rng, n, n);
    QMatrix::from_fn(n, n, |r, c| {
        let mut acc = Quaternion::ZERO;
        for k in 0..n {
            acc += b[(r, k)] * b[(c, k)].conj();
        }
        if r == c {
            Quaternion::real(acc.a + shift)
        } else {
            acc
        }
    })
}

/// `[[A1, conj A2], [−A2, conj A1]]` with `A = A1 + i·A2`,
/// `A1 = a + j·c`, `A2 = b + j·d`.
pub fn adjoint(a: &QMatrix) -> DMatrix<Complex64> {
    let (m, n) = (a.rows(), a.cols());
    let mut out = DMatrix::zeros(2 * m, 2 * n);
    for r in 0..m {
        for c in 0..n {
            let q = a[(r, c)];
            let a1 = Complex64::new(q.a, q.c);
            let a2 = Complex64::new(q.b, q.d);
            out[(r, c)] = a1;
            out[(r, c + n)] = a2.conj();
            out[(r + m, c)] = -a2;
            out[(r + m, c + n)] = a1.conj();
        }
    }
    out
}

/// Real `4×4` matrix of `p ↦ q·p` on `(a, b, c, d)`.
fn left_mult(q: Quaternion) -> [[f64; 4]; 4] {
    let (a, b, c, d) = (q.a, q.b, q.c, q.d);
    [[a, -b, -c, -d], [b, a, -d, c], [c, d, a, -b], [d, -c, b, a]]
}

/// Real `4N × 4N` matrix of `x ↦ A·x`; symmetric when `A` is Hermitian.
pub fn real_embedding(a: &QMatrix) -> Vec<Vec<f64>> {
    let n = a.rows();
    let mut out = vec![vec![0.0; 4 * a.cols()]; 4 * n];
    for r in 0..n {
        for c in 0..a.cols() {
            let block = left_mult(a[(r, c)]);
            for (i, row) in block.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    out[4 * r + i][4 * c + j] = *v;
                }
            }
        }
    }
    out
}

/// Cyclic Jacobi eigenvalues of a real symmetric matrix, descending.
pub fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>) -> Vec<f64> {
    let n = a.len();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        let diag: f64 = (0..n).map(|i| a[i][i] * a[i][i]).sum();
        if off <= 1e-30 * diag.max(1e-300) {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
    ev.sort_by(|x, y| y.total_cmp(x));
    ev
}

/// Constrained-variance Lagrangian as a real scalar:
/// `w^H R w + 2·Re((w^H C − f)·λ^H)`.
pub fn lagrangian_real(w: &QVector, lambda: &[Quaternion; 2], r: &QMatrix, c: &QMatrix, f: &[Quaternion; 2]) -> f64 {
    let n = w.len();
    let mut quad = 0.0;
    for i in 0..n {
        for k in 0..n {
            quad += (w[i].conj() * r[(i, k)] * w[k]).a;
        }
    }
    let mut lin = 0.0;
    for col in 0..2 {
        let mut wc = Quaternion::ZERO;
        for i in 0..n {
            wc += w[i].conj() * c[(i, col)];
        }
        lin += ((wc - f[col]) * lambda[col].conj()).a;
    }
    quad + 2.0 * lin
}

/// `¼(∂a + ∂b·i + ∂c·j + ∂d·k)` by central differences.
pub fn fd_gradient(g: impl Fn(&QVector) -> f64, w: &QVector, step: f64) -> QVector {
    let units = [Quaternion::ONE, Quaternion::I, Quaternion::J, Quaternion::K];
    QVector::from_fn(w.len(), |n| {
        let mut acc = Quaternion::ZERO;
        for unit in units {
            let mut plus = w.clone();
            let mut minus = w.clone();
            plus[n] += unit.scale(step);
            minus[n] -= unit.scale(step);
            acc += unit.scale((g(&plus) - g(&minus)) / (2.0 * step));
        }
        acc.scale(0.25)
    })
}

pub fn max_abs(m: &DMatrix<Complex64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Strict-or-equal local minima of a `[row][col]` grid (interior points).
pub fn local_minima(grid: &[Vec<f64>]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 1..grid.len() - 1 {
        for j in 1..grid[i].len() - 1 {
            let v = grid[i][j];
            let is_min = (-1i64..=1).all(|di| {
                (-1i64..=1).all(|dj| grid[(i as i64 + di) as usize][(j as i64 + dj) as usize] >= v)
            });
            if is_min {
                out.push((i, j));
            }
        }
    }
    out
}

//! Real-multiplication accounting for both beamformers.
//!
//! One quaternion product costs 16 real multiplications. The instrumented
//! solvers below run an LU factorisation with partial pivoting and count
//! every quaternion product they execute; pivot inversions are divisions and
//! are not counted. Under that convention factorising a `k × k` matrix costs
//! exactly `(k³ − k)/3` products, and a triangular solve pair costs `k²`.
//!
//! Totals for an `N`-sensor array:
//!
//! | solver                      | real multiplications                    |
//! |-----------------------------|-----------------------------------------|
//! | baseline, applied twice     | `(32/3)N³ + 64N² + (160/3)N`            |
//! | full quaternion             | `(16/3)N³ + 64N² + (272/3)N + 96`       |

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::{ConstraintSet, SolverKind};
use crate::error::{Error, Result};
use crate::qlinalg::{QMatrix, QVector, PIVOT_RELATIVE_TOLERANCE};
use crate::quaternion::Quaternion;

pub const REAL_MULTS_PER_QUATERNION_MULT: u64 = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CostReport {
    pub counted_real_mults: u64,
    pub formula_real_mults: u64,
    pub solver: SolverKind,
}

/// Closed-form real multiplication count.
pub fn formula_real_mults(solver: SolverKind, n: u64) -> u64 {
    match solver {
        SolverKind::BaselineQCapon => (32 * n * n * n + 192 * n * n + 160 * n) / 3,
        SolverKind::FullQCapon => (16 * n * n * n + 192 * n * n + 272 * n + 288) / 3,
    }
}

/// Leading `N³` coefficient as `(numerator, denominator)`.
pub fn cubic_coefficient(solver: SolverKind) -> (u64, u64) {
    match solver {
        SolverKind::BaselineQCapon => (32, 3),
        SolverKind::FullQCapon => (16, 3),
    }
}

#[derive(Debug, Default)]
struct Counter {
    mults: u64,
}

impl Counter {
    fn mul(&mut self, p: Quaternion, q: Quaternion) -> Quaternion {
        self.mults += 1;
        p * q
    }
}

/// `P·A = L·U` with unit lower `L`; `pivot_inv[k] = U[k][k]⁻¹`.
struct Lu {
    lu: QMatrix,
    perm: Vec<usize>,
    pivot_inv: Vec<Quaternion>,
}

impl Lu {
    fn factor(a: &QMatrix, counter: &mut Counter) -> Result<Lu> {
        let n = a.rows();
        let threshold = PIVOT_RELATIVE_TOLERANCE * a.frobenius_norm();
        let mut lu = a.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut pivot_inv = Vec::with_capacity(n);
        for k in 0..n {
            let (p, best) = (k..n)
                .map(|r| (r, lu[(r, k)].norm()))
                .fold((k, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
            if !(best > threshold) {
                return Err(Error::Singular {
                    context: "LU factorisation".into(),
                    pivot: best,
                    threshold,
                });
            }
            lu.swap_rows(k, p);
            perm.swap(k, p);
            let inv = lu[(k, k)].inverse()?;
            pivot_inv.push(inv);
            for i in k + 1..n {
                let l = counter.mul(lu[(i, k)], inv);
                lu[(i, k)] = l;
                for j in k + 1..n {
                    let v = counter.mul(l, lu[(k, j)]);
                    lu[(i, j)] -= v;
                }
            }
        }
        Ok(Lu { lu, perm, pivot_inv })
    }

    fn n(&self) -> usize {
        self.perm.len()
    }

    /// `x = A⁻¹·b`.
    fn solve(&self, b: &QVector, counter: &mut Counter) -> QVector {
        let n = self.n();
        let mut y: Vec<Quaternion> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            for j in 0..i {
                let v = counter.mul(self.lu[(i, j)], y[j]);
                y[i] -= v;
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                let v = counter.mul(self.lu[(i, j)], y[j]);
                y[i] -= v;
            }
            y[i] = counter.mul(self.pivot_inv[i], y[i]);
        }
        QVector::new(y)
    }

    /// Row vector `y` with `y·A = c`.
    fn solve_left(&self, c: &[Quaternion], counter: &mut Counter) -> Vec<Quaternion> {
        let n = self.n();
        // t·U = c
        let mut t = c.to_vec();
        for j in 0..n {
            for i in 0..j {
                let v = counter.mul(t[i], self.lu[(i, j)]);
                t[j] -= v;
            }
            t[j] = counter.mul(t[j], self.pivot_inv[j]);
        }
        // z·L = t
        for i in (0..n).rev() {
            for j in i + 1..n {
                let v = counter.mul(t[j], self.lu[(j, i)]);
                t[i] -= v;
            }
        }
        let mut y = vec![Quaternion::ZERO; n];
        for (i, &p) in self.perm.iter().enumerate() {
            y[p] = t[i];
        }
        y
    }
}

fn row_times_column(row: &[Quaternion], col: &QVector, counter: &mut Counter) -> Quaternion {
    row.iter().zip(col.iter()).map(|(a, b)| counter.mul(*a, *b)).sum()
}

/// Full quaternion weights through the counted LU path; returns the weights
/// and the number of quaternion products executed.
pub fn counted_full_qcapon(r: &QMatrix, cs: &ConstraintSet) -> Result<(QVector, u64)> {
    let mut counter = Counter::default();
    let lu = Lu::factor(r, &mut counter)?;
    let cols = [cs.column(0), cs.column(1)];
    let r_inv_c: Vec<QVector> = cols.iter().map(|b| lu.solve(b, &mut counter)).collect();
    let ch_r_inv: Vec<Vec<Quaternion>> = cols
        .iter()
        .map(|b| lu.solve_left(b.conj().as_slice(), &mut counter))
        .collect();
    let gram = QMatrix::from_fn(2, 2, |k, l| row_times_column(&ch_r_inv[k], &cols[l], &mut counter));
    let gram_lu = Lu::factor(&gram, &mut counter).map_err(|e| match e {
        Error::Singular { pivot, threshold, .. } => Error::Singular {
            context: "constraint Gram matrix C^H R^-1 C".into(),
            pivot,
            threshold,
        },
        other => other,
    })?;
    let beta = gram_lu.solve(&QVector::new(vec![cs.f[0].conj(), cs.f[1].conj()]), &mut counter);
    let w = QVector::from_fn(r.rows(), |n| {
        counter.mul(r_inv_c[0][n], beta[0]) + counter.mul(r_inv_c[1][n], beta[1])
    });
    Ok((w, counter.mults))
}

/// Single-constraint weights through the counted LU path.
pub fn counted_baseline_qcapon(r: &QMatrix, a0: &QVector) -> Result<(QVector, u64)> {
    let mut counter = Counter::default();
    let lu = Lu::factor(r, &mut counter)?;
    let r_inv_a = lu.solve(a0, &mut counter);
    let ah_r_inv = lu.solve_left(a0.conj().as_slice(), &mut counter);
    let denom = row_times_column(&ah_r_inv, a0, &mut counter);
    let denom_inv = denom.inverse()?;
    let w = QVector::from_fn(a0.len(), |n| counter.mul(r_inv_a[n], denom_inv));
    Ok((w, counter.mults))
}

/// Counted cost of recovering a quaternion SOI with the given solver on a
/// deterministic `N`-sensor problem, alongside the closed form.
pub fn multiplication_cost(solver: SolverKind, n: usize) -> Result<CostReport> {
    if n < 2 {
        return Err(Error::Contract(format!("cost accounting needs N >= 2, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_c057 ^ n as u64);
    let mut gauss = || -> Quaternion {
        let mut g = || -> f64 { StandardNormal.sample(&mut rng) };
        Quaternion::new(g(), g(), g(), g())
    };
    let b = QMatrix::from_fn(n, n, |_, _| gauss());
    let r = b.matmul(&b.hermitian_transpose())?.add_diagonal(n as f64).hermitian_part();
    let cs = ConstraintSet::new(&QVector::from_fn(n, |_| gauss()), &QVector::from_fn(n, |_| gauss()))?;

    let quaternion_mults = match solver {
        SolverKind::FullQCapon => counted_full_qcapon(&r, &cs)?.1,
        SolverKind::BaselineQCapon => {
            // once per sub-signal, nothing shared between the two runs
            counted_baseline_qcapon(&r, &cs.column(0))?.1 + counted_baseline_qcapon(&r, &cs.column(1))?.1
        }
    };
    Ok(CostReport {
        counted_real_mults: quaternion_mults * REAL_MULTS_PER_QUATERNION_MULT,
        formula_real_mults: formula_real_mults(solver, n as u64),
        solver,
    })
}

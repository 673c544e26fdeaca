//! Gaussian elimination over the rationals: rank, solving, inverses,
//! kernels, and quotient spaces presented by projection/section pairs.

use num_rational::BigRational;
use num_traits::Zero;

use super::mat::QMat;

/// Row echelon form in place; returns pivot columns.
fn echelon(m: &mut QMat) -> Vec<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else { continue };
        for j in 0..cols {
            let t = m[(r, j)].clone();
            m[(r, j)] = m[(p, j)].clone();
            m[(p, j)] = t;
        }
        let inv = m[(r, c)].recip();
        for j in c..cols {
            let t = &m[(r, j)] * &inv;
            m[(r, j)] = t;
        }
        for i in 0..rows {
            if i != r && !m[(i, c)].is_zero() {
                let f = m[(i, c)].clone();
                for j in c..cols {
                    let t = &m[(i, j)] - &f * &m[(r, j)];
                    m[(i, j)] = t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(a: &QMat) -> usize {
    let mut m = a.clone();
    echelon(&mut m).len()
}

/// Solve `a x = b` for each column of `b`; `None` if inconsistent.
pub fn solve_mat(a: &QMat, b: &QMat) -> Option<QMat> {
    assert_eq!(a.rows(), b.rows());
    let mut aug = a.hstack(b);
    let pivots = echelon(&mut aug);
    if pivots.iter().any(|&c| c >= a.cols()) {
        return None; // pivot in the rhs block: inconsistent
    }
    let mut x = QMat::zeros(a.cols(), b.cols());
    for (r, &c) in pivots.iter().enumerate() {
        for j in 0..b.cols() {
            x[(c, j)] = aug[(r, a.cols() + j)].clone();
        }
    }
    Some(x)
}

pub fn solve_vec(a: &QMat, b: &[BigRational]) -> Option<Vec<BigRational>> {
    solve_mat(a, &QMat::col_vec(b)).map(|x| x.col(0))
}

pub fn inverse(a: &QMat) -> Option<QMat> {
    assert_eq!(a.rows(), a.cols());
    let n = a.rows();
    let mut aug = a.hstack(&QMat::identity(n));
    let pivots = echelon(&mut aug);
    if pivots.len() < n {
        return None;
    }
    let rows: Vec<usize> = (0..n).collect();
    let cols: Vec<usize> = (n..2 * n).collect();
    Some(aug.submatrix(&rows, &cols))
}

/// Basis of the null space of `a`, as matrix columns.
pub fn kernel(a: &QMat) -> QMat {
    let mut m = a.clone();
    let pivots = echelon(&mut m);
    let free: Vec<usize> = (0..a.cols()).filter(|c| !pivots.contains(c)).collect();
    let mut k = QMat::zeros(a.cols(), free.len());
    for (j, &fc) in free.iter().enumerate() {
        k[(fc, j)] = BigRational::from_integer(1.into());
        for (r, &pc) in pivots.iter().enumerate() {
            k[(pc, j)] = -m[(r, fc)].clone();
        }
    }
    k
}

/// Columns of `a` forming a basis of its column space.
pub fn column_space_basis(a: &QMat) -> QMat {
    let mut m = a.clone();
    let pivots = echelon(&mut m);
    let rows: Vec<usize> = (0..a.rows()).collect();
    a.submatrix(&rows, &pivots)
}

/// A quotient `Q^ambient / span`, presented by a surjection `projection`
/// with `kernel(projection) = span` and a section with
/// `projection * section = id`.
#[derive(Clone, Debug)]
pub struct RatQuotient {
    pub ambient: usize,
    pub dim: usize,
    pub projection: QMat,
    pub section: QMat,
}

impl RatQuotient {
    pub fn project(&self, v: &[BigRational]) -> Vec<BigRational> {
        self.projection.mul_vec(v)
    }

    pub fn lift(&self, v: &[BigRational]) -> Vec<BigRational> {
        self.section.mul_vec(v)
    }
}

/// Quotient of an ambient rational space by the column span of `span`.
pub fn rational_quotient(ambient: usize, span: &QMat) -> RatQuotient {
    assert_eq!(span.rows(), ambient);
    let basis = column_space_basis(span);
    let r = basis.cols();
    // Extend the span basis to a basis of the ambient space by standard vectors.
    let mut full = basis.clone();
    let mut chosen = Vec::new();
    for i in 0..ambient {
        if full.cols() == ambient {
            break;
        }
        let mut e = QMat::zeros(ambient, 1);
        e[(i, 0)] = BigRational::from_integer(1.into());
        let cand = full.hstack(&e);
        if rank(&cand) == cand.cols() {
            full = cand;
            chosen.push(i);
        }
    }
    assert_eq!(full.cols(), ambient);
    let inv = inverse(&full).expect("basis extension must be invertible");
    let dim = ambient - r;
    let proj_rows: Vec<usize> = (r..ambient).collect();
    let all_cols: Vec<usize> = (0..ambient).collect();
    let projection = inv.submatrix(&proj_rows, &all_cols);
    let all_rows: Vec<usize> = (0..ambient).collect();
    let sec_cols: Vec<usize> = (r..ambient).collect();
    let section = full.submatrix(&all_rows, &sec_cols);
    RatQuotient { ambient, dim, projection, section }
}

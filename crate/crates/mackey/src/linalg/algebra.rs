//! Finite-dimensional associative algebras over the rationals, given by
//! structure constants, together with the checks the splitting pipeline
//! needs: semisimplicity via the trace form (valid in characteristic 0),
//! center dimension, module validation, characters, and brute-force
//! intertwiner search for small modules.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::mat::QMat;
use super::rational;

#[derive(Clone, Debug)]
pub struct FiniteDimAlgebra {
    pub dim: usize,
    /// `table[i][j]` = coordinates of `e_i * e_j`.
    pub table: Vec<Vec<Vec<BigRational>>>,
    pub unit: Vec<BigRational>,
}

/// Outcome of the trace-form test: either a nonzero Gram determinant or
/// an explicit radical vector.
#[derive(Clone, Debug)]
pub enum SemisimpleCertificate {
    GramDeterminant(BigRational),
    RadicalVector(Vec<BigRational>),
}

impl FiniteDimAlgebra {
    pub fn new(table: Vec<Vec<Vec<BigRational>>>, unit: Vec<BigRational>) -> Self {
        let dim = unit.len();
        assert_eq!(table.len(), dim);
        assert!(table.iter().all(|row| row.len() == dim && row.iter().all(|v| v.len() == dim)));
        FiniteDimAlgebra { dim, table, unit }
    }

    /// The rationals as a 1-dimensional algebra.
    pub fn rationals() -> Self {
        FiniteDimAlgebra::new(vec![vec![vec![BigRational::one()]]], vec![BigRational::one()])
    }

    pub fn mul_vec(&self, x: &[BigRational], y: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.dim];
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim {
                if y[j].is_zero() {
                    continue;
                }
                let c = &x[i] * &y[j];
                for k in 0..self.dim {
                    if !self.table[i][j][k].is_zero() {
                        out[k] += &c * &self.table[i][j][k];
                    }
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `x`.
    pub fn left_mult(&self, x: &[BigRational]) -> QMat {
        QMat::from_fn(self.dim, self.dim, |k, j| {
            let mut acc = BigRational::zero();
            for i in 0..self.dim {
                if !x[i].is_zero() && !self.table[i][j][k].is_zero() {
                    acc += &x[i] * &self.table[i][j][k];
                }
            }
            acc
        })
    }

    pub fn right_mult(&self, x: &[BigRational]) -> QMat {
        QMat::from_fn(self.dim, self.dim, |k, i| {
            let mut acc = BigRational::zero();
            for j in 0..self.dim {
                if !x[j].is_zero() && !self.table[i][j][k].is_zero() {
                    acc += &x[j] * &self.table[i][j][k];
                }
            }
            acc
        })
    }

    fn basis_vec(&self, i: usize) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.dim];
        v[i] = BigRational::one();
        v
    }

    /// Check associativity on basis triples and the two-sided unit law.
    pub fn validate(&self) -> Result<(), String> {
        for i in 0..self.dim {
            let e = self.basis_vec(i);
            if self.mul_vec(&self.unit, &e) != e {
                return Err(format!("unit law fails on the left at basis {i}"));
            }
            if self.mul_vec(&e, &self.unit) != e {
                return Err(format!("unit law fails on the right at basis {i}"));
            }
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.table[i][j].clone();
                for k in 0..self.dim {
                    let jk = self.table[j][k].clone();
                    let left = self.mul_vec(&ij, &self.basis_vec(k));
                    let right = self.mul_vec(&self.basis_vec(i), &jk);
                    if left != right {
                        return Err(format!("associativity fails at basis triple ({i},{j},{k})"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Gram matrix of the trace form `T(a, b) = tr(L_a L_b)`.
    pub fn trace_form(&self) -> QMat {
        let lefts: Vec<QMat> = (0..self.dim).map(|i| self.left_mult(&self.basis_vec(i))).collect();
        QMat::from_fn(self.dim, self.dim, |i, j| {
            let prod = lefts[i].mul(&lefts[j]);
            (0..self.dim).map(|k| prod[(k, k)].clone()).fold(BigRational::zero(), |a, b| a + b)
        })
    }

    /// Dickson's criterion: in characteristic zero the algebra is
    /// semisimple iff the trace form is nondegenerate.
    pub fn is_semisimple(&self) -> (bool, SemisimpleCertificate) {
        let gram = self.trace_form();
        let ker = rational::kernel(&gram);
        if ker.cols() == 0 {
            (true, SemisimpleCertificate::GramDeterminant(det(&gram)))
        } else {
            (false, SemisimpleCertificate::RadicalVector(ker.col(0)))
        }
    }

    /// Dimension of the center `{x : xa = ax for all a}`.
    pub fn center_dim(&self) -> usize {
        let mut stacked: Option<QMat> = None;
        for i in 0..self.dim {
            let e = self.basis_vec(i);
            let diff = self.left_mult(&e).sub(&self.right_mult(&e));
            stacked = Some(match stacked {
                None => diff,
                Some(s) => s.vstack(&diff),
            });
        }
        rational::kernel(&stacked.unwrap()).cols()
    }

    /// Check that `rho` (one matrix per basis element) defines a left
    /// module structure.
    pub fn validate_module(&self, rho: &[QMat]) -> Result<(), String> {
        assert_eq!(rho.len(), self.dim);
        let n = if self.dim > 0 { rho[0].rows() } else { 0 };
        for (i, m) in rho.iter().enumerate() {
            if m.rows() != n || m.cols() != n {
                return Err(format!("action matrix {i} has inconsistent shape"));
            }
        }
        // unit acts as the identity
        let mut unit_action = QMat::zeros(n, n);
        for i in 0..self.dim {
            if !self.unit[i].is_zero() {
                unit_action = unit_action.add(&rho[i].scale(&self.unit[i]));
            }
        }
        if unit_action != QMat::identity(n) {
            return Err("unit does not act as the identity".into());
        }
        for i in 0..self.dim {
            for j in 0..self.dim {
                let lhs = rho[i].mul(&rho[j]);
                let mut rhs = QMat::zeros(n, n);
                for k in 0..self.dim {
                    if !self.table[i][j][k].is_zero() {
                        rhs = rhs.add(&rho[k].scale(&self.table[i][j][k]));
                    }
                }
                if lhs != rhs {
                    return Err(format!("action incompatible with product at ({i},{j})"));
                }
            }
        }
        Ok(())
    }

    /// Trace of the action of each basis element: for a semisimple
    /// algebra over Q this is a complete isomorphism invariant.
    pub fn module_character(&self, rho: &[QMat]) -> Vec<BigRational> {
        rho.iter()
            .map(|m| (0..m.rows()).map(|k| m[(k, k)].clone()).fold(BigRational::zero(), |a, b| a + b))
            .collect()
    }

    /// Action matrices of the regular module.
    pub fn regular_module(&self) -> Vec<QMat> {
        (0..self.dim).map(|i| self.left_mult(&self.basis_vec(i))).collect()
    }
}

pub fn det(a: &QMat) -> BigRational {
    assert_eq!(a.rows(), a.cols());
    let n = a.rows();
    let mut m = a.clone();
    let mut result = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[(r, c)].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            for j in 0..n {
                let t = m[(c, j)].clone();
                m[(c, j)] = m[(p, j)].clone();
                m[(p, j)] = t;
            }
            result = -result;
        }
        result *= m[(c, c)].clone();
        let inv = m[(c, c)].recip();
        for r in c + 1..n {
            if !m[(r, c)].is_zero() {
                let f = &m[(r, c)] * &inv;
                for j in c..n {
                    let t = &m[(r, j)] - &f * &m[(c, j)];
                    m[(r, j)] = t;
                }
            }
        }
    }
    result
}

/// Basis of the space of module maps `rho_m -> rho_n`.
pub fn intertwiner_space(rho_m: &[QMat], rho_n: &[QMat]) -> Vec<QMat> {
    assert_eq!(rho_m.len(), rho_n.len());
    let (m, n) = (
        rho_m.first().map_or(0, QMat::rows),
        rho_n.first().map_or(0, QMat::rows),
    );
    if rho_m.is_empty() || m * n == 0 {
        // No constraints beyond shape; only the zero map unless both sides trivial.
        return if m * n == 0 { vec![QMat::zeros(n, m)] } else { Vec::new() };
    }
    // T rho_m(e_i) = rho_n(e_i) T, unknowns T (n x m), flattened row-major.
    let vars = n * m;
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for (a, b) in rho_m.iter().zip(rho_n) {
        for r in 0..n {
            for c in 0..m {
                let mut row = vec![BigRational::zero(); vars];
                // (T a)[r][c] = sum_k T[r][k] a[k][c]
                for k in 0..m {
                    row[r * m + k] += &a[(k, c)] * &BigRational::one();
                }
                // (b T)[r][c] = sum_k b[r][k] T[k][c]
                for k in 0..n {
                    row[k * m + c] -= &b[(r, k)] * &BigRational::one();
                }
                rows.push(row);
            }
        }
    }
    let sys = QMat::from_rows(rows);
    let ker = rational::kernel(&sys);
    (0..ker.cols())
        .map(|j| QMat::from_fn(n, m, |r, c| ker[(r * m + c, j)].clone()))
        .collect()
}

/// Search for an invertible intertwiner as a small integer combination
/// of the intertwiner-space basis. Complete for semisimple inputs at
/// the dimensions used here (invertible combinations are Zariski-dense,
/// so a short deterministic scan finds one when it exists).
pub fn find_invertible_intertwiner(rho_m: &[QMat], rho_n: &[QMat]) -> Option<QMat> {
    let space = intertwiner_space(rho_m, rho_n);
    let (m, n) = (
        rho_m.first().map_or(0, QMat::rows),
        rho_n.first().map_or(0, QMat::rows),
    );
    if m != n {
        return None;
    }
    if n == 0 {
        return Some(QMat::zeros(0, 0));
    }
    if space.is_empty() {
        return None;
    }
    // Scan coefficient vectors over a widening box.
    let s = space.len();
    let bounds = [1i64, 2, 3];
    for &b in &bounds {
        let span = 2 * b + 1;
        let total = (span as u64).pow(s as u32);
        if total > 2_000_000 {
            break;
        }
        for idx in 0..total {
            let mut rem = idx;
            let mut t = QMat::zeros(n, m);
            for mat in &space {
                let c = (rem % span as u64) as i64 - b;
                rem /= span as u64;
                if c != 0 {
                    t = t.add(&mat.scale(&BigRational::from_integer(c.into())));
                }
            }
            if rational::inverse(&t).is_some() {
                return Some(t);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{q, qi};

    fn group_algebra_c2() -> FiniteDimAlgebra {
        // basis (e, t) with t^2 = e
        let z = BigRational::zero();
        let o = BigRational::one();
        FiniteDimAlgebra::new(
            vec![
                vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
                vec![vec![z.clone(), o.clone()], vec![o.clone(), z.clone()]],
            ],
            vec![o.clone(), z.clone()],
        )
    }

    fn dual_numbers() -> FiniteDimAlgebra {
        // Q[x]/(x^2): basis (1, x)
        let z = BigRational::zero();
        let o = BigRational::one();
        FiniteDimAlgebra::new(
            vec![
                vec![vec![o.clone(), z.clone()], vec![z.clone(), o.clone()]],
                vec![vec![z.clone(), o.clone()], vec![z.clone(), z.clone()]],
            ],
            vec![o.clone(), z.clone()],
        )
    }

    #[test]
    fn semisimplicity_spec_examples() {
        let qc2 = group_algebra_c2();
        qc2.validate().unwrap();
        let (ss, cert) = qc2.is_semisimple();
        assert!(ss);
        match cert {
            SemisimpleCertificate::GramDeterminant(d) => assert!(!d.is_zero()),
            _ => panic!("expected a determinant certificate"),
        }

        let dual = dual_numbers();
        dual.validate().unwrap();
        let (ss, cert) = dual.is_semisimple();
        assert!(!ss);
        match cert {
            SemisimpleCertificate::RadicalVector(v) => {
                // radical is spanned by x
                assert!(v[0].is_zero());
                assert!(!v[1].is_zero());
            }
            _ => panic!("expected a radical vector"),
        }

        let (ss, _) = FiniteDimAlgebra::rationals().is_semisimple();
        assert!(ss);
    }

    #[test]
    fn regular_character_of_qc2() {
        let a = group_algebra_c2();
        let reg = a.regular_module();
        a.validate_module(&reg).unwrap();
        assert_eq!(a.module_character(&reg), vec![qi(2), qi(0)]);
        // zero module
        let zero: Vec<QMat> = (0..2).map(|_| QMat::zeros(0, 0)).collect();
        assert_eq!(a.module_character(&zero), vec![qi(0), qi(0)]);
    }

    #[test]
    fn character_detects_isomorphism_small() {
        let a = group_algebra_c2();
        // the two 1-dim modules: t -> 1 and t -> -1
        let triv = vec![QMat::identity(1), QMat::identity(1)];
        let sign = vec![QMat::identity(1), QMat::identity(1).scale(&qi(-1))];
        a.validate_module(&triv).unwrap();
        a.validate_module(&sign).unwrap();
        assert!(find_invertible_intertwiner(&triv, &triv).is_some());
        assert!(find_invertible_intertwiner(&triv, &sign).is_none());
        // triv ⊕ sign is isomorphic to the regular module
        let sum: Vec<QMat> = triv.iter().zip(&sign).map(|(x, y)| x.direct_sum(y)).collect();
        let reg = a.regular_module();
        assert_eq!(a.module_character(&sum), a.module_character(&reg));
        let t = find_invertible_intertwiner(&sum, &reg).unwrap();
        for (x, y) in sum.iter().zip(&reg) {
            assert_eq!(t.mul(x), y.mul(&t));
        }
    }

    #[test]
    fn determinant_basics() {
        let m = QMat::from_rows(vec![vec![qi(2), qi(1)], vec![qi(1), qi(1)]]);
        assert_eq!(det(&m), qi(1));
        let s = QMat::from_rows(vec![vec![qi(0), qi(1)], vec![qi(1), qi(0)]]);
        assert_eq!(det(&s), qi(-1));
        assert_eq!(q(1, 2) + q(1, 2), qi(1));
    }
}

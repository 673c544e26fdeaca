//! Smith normal form of integer matrices, with unimodular transforms
//! and the lattice utilities built on top of it (integer kernels,
//! integer linear solves, incremental lattice bases).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::mat::IntMat;

/// `u * a * v = d` with `u`, `v` unimodular and `d` diagonal satisfying
/// the divisibility chain `d_1 | d_2 | ...`. Inverses are tracked so
/// both change-of-basis directions are available exactly.
pub struct Snf {
    pub u: IntMat,
    pub uinv: IntMat,
    pub d: IntMat,
    pub v: IntMat,
    pub vinv: IntMat,
}

impl Snf {
    pub fn rank(&self) -> usize {
        let n = self.d.rows().min(self.d.cols());
        (0..n).take_while(|&i| !self.d[(i, i)].is_zero()).count()
    }

    /// Nonzero diagonal entries.
    pub fn divisors(&self) -> Vec<BigInt> {
        let n = self.d.rows().min(self.d.cols());
        (0..n).map(|i| self.d[(i, i)].clone()).filter(|d| !d.is_zero()).collect()
    }
}

struct Work {
    d: IntMat,
    u: IntMat,
    uinv: IntMat,
    v: IntMat,
    vinv: IntMat,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.d.cols() {
            let t = self.d[(i, c)].clone();
            self.d[(i, c)] = self.d[(j, c)].clone();
            self.d[(j, c)] = t;
        }
        for c in 0..self.u.cols() {
            let t = self.u[(i, c)].clone();
            self.u[(i, c)] = self.u[(j, c)].clone();
            self.u[(j, c)] = t;
        }
        for r in 0..self.uinv.rows() {
            let t = self.uinv[(r, i)].clone();
            self.uinv[(r, i)] = self.uinv[(r, j)].clone();
            self.uinv[(r, j)] = t;
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.d.rows() {
            let t = self.d[(r, i)].clone();
            self.d[(r, i)] = self.d[(r, j)].clone();
            self.d[(r, j)] = t;
        }
        for r in 0..self.v.rows() {
            let t = self.v[(r, i)].clone();
            self.v[(r, i)] = self.v[(r, j)].clone();
            self.v[(r, j)] = t;
        }
        for c in 0..self.vinv.cols() {
            let t = self.vinv[(i, c)].clone();
            self.vinv[(i, c)] = self.vinv[(j, c)].clone();
            self.vinv[(j, c)] = t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.d.cols() {
            let t = -self.d[(i, c)].clone();
            self.d[(i, c)] = t;
        }
        for c in 0..self.u.cols() {
            let t = -self.u[(i, c)].clone();
            self.u[(i, c)] = t;
        }
        for r in 0..self.uinv.rows() {
            let t = -self.uinv[(r, i)].clone();
            self.uinv[(r, i)] = t;
        }
    }

    /// row_i += q * row_j
    fn addmul_row(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.d.cols() {
            let t = &self.d[(i, c)] + q * &self.d[(j, c)];
            self.d[(i, c)] = t;
        }
        for c in 0..self.u.cols() {
            let t = &self.u[(i, c)] + q * &self.u[(j, c)];
            self.u[(i, c)] = t;
        }
        for r in 0..self.uinv.rows() {
            let t = &self.uinv[(r, j)] - q * &self.uinv[(r, i)];
            self.uinv[(r, j)] = t;
        }
    }

    /// col_i += q * col_j
    fn addmul_col(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.d.rows() {
            let t = &self.d[(r, i)] + q * &self.d[(r, j)];
            self.d[(r, i)] = t;
        }
        for r in 0..self.v.rows() {
            let t = &self.v[(r, i)] + q * &self.v[(r, j)];
            self.v[(r, i)] = t;
        }
        for c in 0..self.vinv.cols() {
            let t = &self.vinv[(j, c)] - q * &self.vinv[(i, c)];
            self.vinv[(j, c)] = t;
        }
    }
}

pub fn smith_normal_form(a: &IntMat) -> Snf {
    let (m, n) = (a.rows(), a.cols());
    let mut w = Work {
        d: a.clone(),
        u: IntMat::identity(m),
        uinv: IntMat::identity(m),
        v: IntMat::identity(n),
        vinv: IntMat::identity(n),
    };

    let k_max = m.min(n);
    let mut k = 0;
    while k < k_max {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        let mut pivot: Option<(usize, usize)> = None;
        for r in k..m {
            for c in k..n {
                if !w.d[(r, c)].is_zero()
                    && pivot.map_or(true, |(pr, pc)| w.d[(r, c)].abs() < w.d[(pr, pc)].abs())
                {
                    pivot = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        w.swap_rows(k, pr);
        w.swap_cols(k, pc);
        if w.d[(k, k)].is_negative() {
            w.negate_row(k);
        }

        // Reduce column and row below/right of the pivot; repeat until clean.
        let mut dirty = true;
        while dirty {
            dirty = false;
            for r in k + 1..m {
                if !w.d[(r, k)].is_zero() {
                    let q = -w.d[(r, k)].div_floor(&w.d[(k, k)]);
                    w.addmul_row(r, k, &q);
                    if !w.d[(r, k)].is_zero() {
                        // Remainder is a strictly smaller positive pivot.
                        w.swap_rows(k, r);
                        dirty = true;
                    }
                }
            }
            for c in k + 1..n {
                if !w.d[(k, c)].is_zero() {
                    let q = -w.d[(k, c)].div_floor(&w.d[(k, k)]);
                    w.addmul_col(c, k, &q);
                    if !w.d[(k, c)].is_zero() {
                        w.swap_cols(k, c);
                        dirty = true;
                    }
                }
            }
        }

        // Divisibility: fold any non-multiple into the pivot's row and redo.
        let mut fold: Option<usize> = None;
        'scan: for r in k + 1..m {
            for c in k + 1..n {
                if !w.d[(r, c)].mod_floor(&w.d[(k, k)]).is_zero() {
                    fold = Some(r);
                    break 'scan;
                }
            }
        }
        if let Some(r) = fold {
            w.addmul_row(k, r, &BigInt::one());
            continue;
        }
        k += 1;
    }

    Snf { u: w.u, uinv: w.uinv, d: w.d, v: w.v, vinv: w.vinv }
}

/// Basis of the integer kernel of `a`, as matrix columns. The columns
/// span a saturated sublattice (the full kernel, not a finite-index one).
pub fn kernel_basis(a: &IntMat) -> IntMat {
    let snf = smith_normal_form(a);
    let rank = snf.rank();
    let cols: Vec<usize> = (rank..a.cols()).collect();
    let all_rows: Vec<usize> = (0..a.cols()).collect();
    snf.v.submatrix(&all_rows, &cols)
}

/// One integer solution of `a x = b`, if any.
pub fn solve(a: &IntMat, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), b.len());
    let snf = smith_normal_form(a);
    let c = snf.u.mul_vec(b);
    let mut y = vec![BigInt::zero(); a.cols()];
    for i in 0..a.rows() {
        let d = if i < a.cols() { snf.d[(i, i)].clone() } else { BigInt::zero() };
        if d.is_zero() {
            if !c[i].is_zero() {
                return None;
            }
        } else {
            let (q, r) = c[i].div_rem(&d);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        }
    }
    Some(snf.v.mul_vec(&y))
}

/// Solve `a X = b` columnwise over the integers.
pub fn solve_mat(a: &IntMat, b: &IntMat) -> Option<IntMat> {
    assert_eq!(a.rows(), b.rows());
    let snf = smith_normal_form(a);
    let mut out = IntMat::zeros(a.cols(), b.cols());
    for j in 0..b.cols() {
        let c = snf.u.mul_vec(&b.col(j));
        let mut y = vec![BigInt::zero(); a.cols()];
        for i in 0..a.rows() {
            let d = if i < a.cols() { snf.d[(i, i)].clone() } else { BigInt::zero() };
            if d.is_zero() {
                if !c[i].is_zero() {
                    return None;
                }
            } else {
                let (q, r) = c[i].div_rem(&d);
                if !r.is_zero() {
                    return None;
                }
                y[i] = q;
            }
        }
        let x = snf.v.mul_vec(&y);
        for i in 0..a.cols() {
            out[(i, j)] = x[i].clone();
        }
    }
    Some(out)
}

/// Incremental column basis of an integer lattice, kept in echelon form
/// by pivot row. Inserting a column costs one pass of gcd reductions;
/// feeding thousands of relation columns through this before a final
/// Smith normal form keeps the big eliminations small.
pub struct LatticeBuilder {
    n: usize,
    /// pivot row -> column with its first nonzero (positive) entry there
    cols: std::collections::BTreeMap<usize, Vec<BigInt>>,
}

impl LatticeBuilder {
    pub fn new(n: usize) -> Self {
        LatticeBuilder { n, cols: std::collections::BTreeMap::new() }
    }

    pub fn insert(&mut self, mut col: Vec<BigInt>) {
        assert_eq!(col.len(), self.n);
        loop {
            let Some(r) = col.iter().position(|x| !x.is_zero()) else { return };
            match self.cols.get_mut(&r) {
                None => {
                    if col[r].is_negative() {
                        for x in col.iter_mut() {
                            *x = -std::mem::take(x);
                        }
                    }
                    self.cols.insert(r, col);
                    return;
                }
                Some(pivot) => {
                    let e = pivot[r].clone();
                    let c = col[r].clone();
                    let g = e.extended_gcd(&c);
                    // g.gcd = g.x * e + g.y * c
                    let (e_g, c_g) = (&e / &g.gcd, &c / &g.gcd);
                    let new_pivot: Vec<BigInt> = (0..self.n)
                        .map(|i| &g.x * &pivot[i] + &g.y * &col[i])
                        .collect();
                    let new_col: Vec<BigInt> = (0..self.n)
                        .map(|i| &e_g * &col[i] - &c_g * &pivot[i])
                        .collect();
                    debug_assert!(new_col[r].is_zero());
                    *pivot = new_pivot;
                    col = new_col;
                }
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.cols.is_empty()
    }

    /// Current basis as matrix columns (ordered by pivot row).
    pub fn basis(&self) -> IntMat {
        let k = self.cols.len();
        let mut m = IntMat::zeros(self.n, k);
        for (j, col) in self.cols.values().enumerate() {
            for i in 0..self.n {
                m[(i, j)] = col[i].clone();
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_mat(rows: &[&[i64]]) -> IntMat {
        IntMat::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    fn check_snf(a: &IntMat) -> Snf {
        let snf = smith_normal_form(a);
        // u a v = d, and both transforms invert exactly.
        assert_eq!(snf.u.mul(a).mul(&snf.v), snf.d);
        assert_eq!(snf.u.mul(&snf.uinv), IntMat::identity(a.rows()));
        assert_eq!(snf.v.mul(&snf.vinv), IntMat::identity(a.cols()));
        // divisibility chain
        let divs = snf.divisors();
        for w in divs.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "chain broken: {:?}", divs);
        }
        snf
    }

    #[test]
    fn snf_spec_examples() {
        // [[2,4],[6,8]] -> diag(2,4)
        let snf = check_snf(&int_mat(&[&[2, 4], &[6, 8]]));
        assert_eq!(snf.divisors(), vec![BigInt::from(2), BigInt::from(4)]);

        let snf = check_snf(&int_mat(&[&[1, 0], &[0, 1]]));
        assert_eq!(snf.divisors(), vec![BigInt::from(1), BigInt::from(1)]);

        let snf = check_snf(&int_mat(&[&[0, 0, 0], &[0, 0, 0]]));
        assert!(snf.divisors().is_empty());
    }

    #[test]
    fn snf_random_grid() {
        // Deterministic pseudo-random small matrices, all shapes.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for rows in 1..5usize {
            for cols in 1..5usize {
                for _ in 0..8 {
                    let a = IntMat::from_fn(rows, cols, |_, _| {
                        BigInt::from((next() % 11) as i64 - 5)
                    });
                    check_snf(&a);
                }
            }
        }
    }

    #[test]
    fn kernel_and_solve() {
        let a = int_mat(&[&[2, 4, 6], &[1, 2, 3]]);
        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 2);
        assert!(a.mul(&k).is_zero());

        let b = vec![BigInt::from(10), BigInt::from(5)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(a.mul_vec(&x), b);

        // 2x = 1 has no integer solution
        let a = int_mat(&[&[2]]);
        assert!(solve(&a, &[BigInt::from(1)]).is_none());
    }

    #[test]
    fn lattice_builder_matches_snf_span() {
        let cols: Vec<Vec<i64>> = vec![
            vec![2, 0, 4],
            vec![0, 3, 3],
            vec![2, 3, 7],
            vec![4, 3, 11],
            vec![0, 0, 6],
        ];
        let mut lb = LatticeBuilder::new(3);
        for c in &cols {
            lb.insert(c.iter().map(|&x| BigInt::from(x)).collect());
        }
        let basis = lb.basis();
        let full = IntMat::from_fn(3, cols.len(), |r, c| BigInt::from(cols[c][r]));
        // Same lattice: mutual integral containment.
        assert!(solve_mat(&basis, &full).is_some());
        assert!(solve_mat(&full, &basis).is_some());
    }
}

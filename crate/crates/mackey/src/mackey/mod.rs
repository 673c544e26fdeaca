//! Mackey functors, Green functors and Mackey modules in the subgroups
//! picture, with validators for every axiom.
//!
//! A Mackey functor assigns a free Z- or Q-module to each subgroup,
//! with restriction, induction and conjugation matrices. The validators
//! check the identity axioms, transitivity, conjugation functoriality
//! and equivariance, and the double coset formula
//!
//!   res^H_K ∘ ind^H_L = Σ_{g ∈ K\H/L} ind^K_{K∩ᵍL} ∘ c_g ∘ res^L_{K^g∩L},
//!
//! reporting every violated identity with its witnessing (H, K, g).

pub mod burnside;
pub mod fixed_point;
pub mod rep;
pub mod serial;

pub use burnside::{burnside_green, canonical_burnside_action, marks_matrix};
pub use fixed_point::{fixed_point_green, fixed_point_mackey};
pub use rep::rep_green;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::group::GroupContext;
use crate::linalg::QMat;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum BaseRing {
    Z,
    Q,
}

/// One level's worth of a bilinear pairing `left x right -> out`,
/// stored as one `out x right` matrix per left basis element.
#[derive(Clone)]
pub struct Bilinear {
    pub left: usize,
    pub right: usize,
    pub out: usize,
    pub table: Vec<QMat>,
}

impl Bilinear {
    pub fn zero(left: usize, right: usize, out: usize) -> Self {
        Bilinear { left, right, out, table: (0..left).map(|_| QMat::zeros(out, right)).collect() }
    }

    pub fn apply(&self, x: &[BigRational], y: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(x.len(), self.left);
        let mut acc = vec![BigRational::zero(); self.out];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            let part = self.table[i].mul_vec(y);
            for (a, p) in acc.iter_mut().zip(part) {
                *a += xi * &p;
            }
        }
        acc
    }

    pub fn apply_basis(&self, i: usize, j: usize) -> Vec<BigRational> {
        self.table[i].col(j)
    }

    /// The matrix of `x · (-)` acting on the right slot.
    pub fn left_action_matrix(&self, x: &[BigRational]) -> QMat {
        let mut acc = QMat::zeros(self.out, self.right);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                acc = acc.add(&self.table[i].scale(xi));
            }
        }
        acc
    }

    /// The matrix of `(-) · y` acting on the left slot.
    pub fn right_action_matrix(&self, y: &[BigRational]) -> QMat {
        QMat::from_fn(self.out, self.left, |r, i| {
            let mut acc = BigRational::zero();
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() {
                    acc += &self.table[i][(r, j)] * yj;
                }
            }
            acc
        })
    }

    pub fn is_integral(&self) -> bool {
        self.table.iter().all(QMat::is_integral)
    }
}

#[derive(Clone)]
pub struct MackeyFunctor {
    pub ctx: Arc<GroupContext>,
    pub base: BaseRing,
    pub name: String,
    pub ranks: Vec<usize>,
    /// res[(h, k)] : M(H) -> M(K) for k ≤ h, shape rank_k x rank_h
    res: BTreeMap<(usize, usize), QMat>,
    /// ind[(h, k)] : M(K) -> M(H) for k ≤ h, shape rank_h x rank_k
    ind: BTreeMap<(usize, usize), QMat>,
    /// conj[g][h] : M(H) -> M(ᵍH)
    conj: Vec<Vec<QMat>>,
}

impl MackeyFunctor {
    pub fn new(
        ctx: Arc<GroupContext>,
        base: BaseRing,
        name: String,
        ranks: Vec<usize>,
        res: BTreeMap<(usize, usize), QMat>,
        ind: BTreeMap<(usize, usize), QMat>,
        conj: Vec<Vec<QMat>>,
    ) -> Self {
        MackeyFunctor { ctx, base, name, ranks, res, ind, conj }
    }

    pub fn res(&self, h: usize, k: usize) -> &QMat {
        &self.res[&(h, k)]
    }

    pub fn ind(&self, h: usize, k: usize) -> &QMat {
        &self.ind[&(h, k)]
    }

    pub fn conj(&self, g: usize, h: usize) -> &QMat {
        &self.conj[g][h]
    }

    pub fn rank(&self, h: usize) -> usize {
        self.ranks[h]
    }

    /// Zero functor over a context.
    pub fn zero(ctx: Arc<GroupContext>, base: BaseRing) -> Self {
        let n = ctx.lattice.len();
        let ranks = vec![0usize; n];
        let mut res = BTreeMap::new();
        let mut ind = BTreeMap::new();
        for h in 0..n {
            for k in ctx.lattice.subgroups_of(h) {
                res.insert((h, k), QMat::zeros(0, 0));
                ind.insert((h, k), QMat::zeros(0, 0));
            }
        }
        let conj = (0..ctx.order()).map(|_| (0..n).map(|_| QMat::zeros(0, 0)).collect()).collect();
        MackeyFunctor { ctx, base, name: "0".into(), ranks, res, ind, conj }
    }

    pub fn direct_sum(&self, other: &MackeyFunctor) -> MackeyFunctor {
        assert!(Arc::ptr_eq(&self.ctx, &other.ctx), "direct sum needs a common group");
        assert_eq!(self.base, other.base, "direct sum needs a common base ring");
        let ranks = self.ranks.iter().zip(&other.ranks).map(|(a, b)| a + b).collect();
        let res = self
            .res
            .iter()
            .map(|(k, m)| (*k, m.direct_sum(&other.res[k])))
            .collect();
        let ind = self
            .ind
            .iter()
            .map(|(k, m)| (*k, m.direct_sum(&other.ind[k])))
            .collect();
        let conj = self
            .conj
            .iter()
            .zip(&other.conj)
            .map(|(row_a, row_b)| {
                row_a.iter().zip(row_b).map(|(a, b)| a.direct_sum(b)).collect()
            })
            .collect();
        MackeyFunctor {
            ctx: Arc::clone(&self.ctx),
            base: self.base,
            name: format!("{} ⊕ {}", self.name, other.name),
            ranks,
            res,
            ind,
            conj,
        }
    }

    /// Reinterpret the same structure matrices over Q.
    pub fn scalar_extend(&self) -> MackeyFunctor {
        let mut out = self.clone();
        out.base = BaseRing::Q;
        out.name = format!("{}_Q", self.name);
        out
    }
}

impl fmt::Debug for MackeyFunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MackeyFunctor({}, ranks {:?})", self.name, self.ranks)
    }
}

#[derive(Clone)]
pub struct GreenFunctor {
    pub m: MackeyFunctor,
    /// mult[h] : R(H) x R(H) -> R(H)
    pub mult: Vec<Bilinear>,
    pub one: Vec<Vec<BigRational>>,
}

impl GreenFunctor {
    pub fn ctx(&self) -> &Arc<GroupContext> {
        &self.m.ctx
    }

    pub fn rank(&self, h: usize) -> usize {
        self.m.ranks[h]
    }

    pub fn is_commutative(&self) -> bool {
        self.mult.iter().all(|b| {
            (0..b.left).all(|i| {
                (0..i).all(|j| b.apply_basis(i, j) == b.apply_basis(j, i))
            })
        })
    }

    pub fn scalar_extend(&self) -> GreenFunctor {
        GreenFunctor { m: self.m.scalar_extend(), mult: self.mult.clone(), one: self.one.clone() }
    }

    /// The Green functor viewed as a module over itself.
    pub fn as_module(self: &Arc<Self>) -> MackeyModule {
        MackeyModule { ring: Arc::clone(self), m: self.m.clone(), act: self.mult.clone() }
    }
}

#[derive(Clone)]
pub struct MackeyModule {
    pub ring: Arc<GreenFunctor>,
    pub m: MackeyFunctor,
    /// act[h] : R(H) x M(H) -> M(H)
    pub act: Vec<Bilinear>,
}

impl MackeyModule {
    pub fn ctx(&self) -> &Arc<GroupContext> {
        &self.m.ctx
    }

    pub fn rank(&self, h: usize) -> usize {
        self.m.ranks[h]
    }

    pub fn zero(ring: &Arc<GreenFunctor>) -> MackeyModule {
        let ctx = Arc::clone(ring.ctx());
        let m = MackeyFunctor::zero(ctx, ring.m.base);
        let act = (0..ring.m.ranks.len()).map(|h| Bilinear::zero(ring.rank(h), 0, 0)).collect();
        MackeyModule { ring: Arc::clone(ring), m, act }
    }

    pub fn direct_sum(&self, other: &MackeyModule) -> MackeyModule {
        assert!(Arc::ptr_eq(&self.ring, &other.ring), "direct sum needs a common Green functor");
        let m = self.m.direct_sum(&other.m);
        let act = self
            .act
            .iter()
            .zip(&other.act)
            .enumerate()
            .map(|(h, (a, b))| {
                let out = Bilinear {
                    left: self.ring.rank(h),
                    right: a.right + b.right,
                    out: a.out + b.out,
                    table: a
                        .table
                        .iter()
                        .zip(&b.table)
                        .map(|(x, y)| x.direct_sum(y))
                        .collect(),
                };
                out
            })
            .collect();
        MackeyModule { ring: Arc::clone(&self.ring), m, act }
    }

    /// Extend scalars of both the module and (a clone of) its ring.
    pub fn scalar_extend(&self, ring_q: &Arc<GreenFunctor>) -> MackeyModule {
        MackeyModule { ring: Arc::clone(ring_q), m: self.m.scalar_extend(), act: self.act.clone() }
    }
}

pub struct MackeyMorphism {
    pub source: Arc<MackeyModule>,
    pub target: Arc<MackeyModule>,
    pub comps: Vec<QMat>,
}

impl MackeyMorphism {
    pub fn identity(m: &Arc<MackeyModule>) -> Self {
        let comps = (0..m.m.ranks.len()).map(|h| QMat::identity(m.rank(h))).collect();
        MackeyMorphism { source: Arc::clone(m), target: Arc::clone(m), comps }
    }

    pub fn compose(&self, other: &MackeyMorphism) -> MackeyMorphism {
        // self ∘ other
        assert!(Arc::ptr_eq(&other.target, &self.source));
        let comps =
            self.comps.iter().zip(&other.comps).map(|(a, b)| a.mul(b)).collect();
        MackeyMorphism {
            source: Arc::clone(&other.source),
            target: Arc::clone(&self.target),
            comps,
        }
    }
}

// ---------------------------------------------------------------------------
// validation

#[derive(Debug, Clone)]
pub struct Violation {
    pub law: String,
    pub witness: String,
}

#[derive(Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, law: &str, witness: String) {
        self.violations.push(Violation { law: law.to_string(), witness });
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            write!(f, "valid (no violations)")
        } else {
            writeln!(f, "{} violation(s):", self.violations.len())?;
            for v in &self.violations {
                writeln!(f, "  {} at {}", v.law, v.witness)?;
            }
            Ok(())
        }
    }
}

pub fn validate_mackey(m: &MackeyFunctor) -> ValidationReport {
    let mut report = ValidationReport::default();
    let ctx = &m.ctx;
    let lat = &ctx.lattice;
    let n = lat.len();
    let order = ctx.order();

    // structural checks before any axiom
    for h in 0..n {
        for k in lat.subgroups_of(h) {
            let r = &m.res[&(h, k)];
            if (r.rows(), r.cols()) != (m.ranks[k], m.ranks[h]) {
                report.push("shape(res)", format!("H={h} K={k}"));
            }
            let i = &m.ind[&(h, k)];
            if (i.rows(), i.cols()) != (m.ranks[h], m.ranks[k]) {
                report.push("shape(ind)", format!("H={h} K={k}"));
            }
        }
    }
    for g in 0..order {
        for h in 0..n {
            let gh = ctx.conj_subgroup(g, h);
            let c = &m.conj[g][h];
            if (c.rows(), c.cols()) != (m.ranks[gh], m.ranks[h]) {
                report.push("shape(conj)", format!("g={g} H={h}"));
            }
        }
    }
    if !report.is_valid() {
        return report;
    }

    if m.base == BaseRing::Z {
        let integral = m.res.values().all(QMat::is_integral)
            && m.ind.values().all(QMat::is_integral)
            && m.conj.iter().flatten().all(QMat::is_integral);
        if !integral {
            report.push("integrality", "base Z with non-integer entries".into());
        }
    }

    // identity axioms
    for h in 0..n {
        let id = QMat::identity(m.ranks[h]);
        if *m.res(h, h) != id {
            report.push("res^H_H = id", format!("H={h}"));
        }
        if *m.ind(h, h) != id {
            report.push("ind^H_H = id", format!("H={h}"));
        }
        for &x in lat.elements(h) {
            if *m.conj(x, h) != id {
                report.push("c_h = id for h in H", format!("H={h} h={x}"));
            }
        }
    }

    // transitivity
    for h in 0..n {
        for k in lat.subgroups_of(h) {
            for l in lat.subgroups_of(k) {
                if m.res(k, l).mul(m.res(h, k)) != *m.res(h, l) {
                    report.push("res transitivity", format!("L={l} K={k} H={h}"));
                }
                if m.ind(h, k).mul(m.ind(k, l)) != *m.ind(h, l) {
                    report.push("ind transitivity", format!("L={l} K={k} H={h}"));
                }
            }
        }
    }

    // conjugation functoriality: c_{g'} c_g = c_{g'g}
    for g in 0..order {
        for g2 in 0..order {
            let gg = ctx.group.mul(g2, g);
            for h in 0..n {
                let gh = ctx.conj_subgroup(g, h);
                if m.conj(g2, gh).mul(m.conj(g, h)) != *m.conj(gg, h) {
                    report.push("conj functoriality", format!("g'={g2} g={g} H={h}"));
                }
            }
        }
    }

    // equivariance with res and ind
    for g in 0..order {
        for h in 0..n {
            let gh = ctx.conj_subgroup(g, h);
            for k in lat.subgroups_of(h) {
                let gk = ctx.conj_subgroup(g, k);
                if m.conj(g, k).mul(m.res(h, k)) != m.res(gh, gk).mul(m.conj(g, h)) {
                    report.push("c_g res = res c_g", format!("g={g} H={h} K={k}"));
                }
                if m.conj(g, h).mul(m.ind(h, k)) != m.ind(gh, gk).mul(m.conj(g, k)) {
                    report.push("c_g ind = ind c_g", format!("g={g} H={h} K={k}"));
                }
            }
        }
    }

    // double coset formula
    for h in 0..n {
        for k in lat.subgroups_of(h) {
            for l in lat.subgroups_of(h) {
                let lhs = m.res(h, k).mul(m.ind(h, l));
                let mut rhs = QMat::zeros(m.ranks[k], m.ranks[l]);
                for dc in ctx.double_cosets_in(h, k, l) {
                    let term = m
                        .ind(k, dc.k_cap_gl)
                        .mul(m.conj(dc.rep, dc.kg_cap_l))
                        .mul(m.res(l, dc.kg_cap_l));
                    rhs = rhs.add(&term);
                }
                if lhs != rhs {
                    report.push("double coset formula", format!("H={h} K={k} L={l}"));
                }
            }
        }
    }

    report
}

pub fn validate_green(r: &GreenFunctor) -> ValidationReport {
    let mut report = validate_mackey(&r.m);
    let ctx = &r.m.ctx;
    let lat = &ctx.lattice;
    let n = lat.len();

    for h in 0..n {
        let rank = r.rank(h);
        let b = &r.mult[h];
        if b.left != rank || b.right != rank || b.out != rank || r.one[h].len() != rank {
            report.push("shape(mult)", format!("H={h}"));
            return report;
        }
        // unit law
        for j in 0..rank {
            let mut e = vec![BigRational::zero(); rank];
            e[j] = BigRational::one();
            if b.apply(&r.one[h], &e) != e || b.apply(&e, &r.one[h]) != e {
                report.push("level unit law", format!("H={h} basis={j}"));
            }
        }
        // associativity on basis triples
        for i in 0..rank {
            for j in 0..rank {
                let ij = b.apply_basis(i, j);
                for k in 0..rank {
                    let mut ek = vec![BigRational::zero(); rank];
                    ek[k] = BigRational::one();
                    let jk = b.apply_basis(j, k);
                    let mut ei = vec![BigRational::zero(); rank];
                    ei[i] = BigRational::one();
                    if b.apply(&ij, &ek) != b.apply(&ei, &jk) {
                        report.push("level associativity", format!("H={h} ({i},{j},{k})"));
                    }
                }
            }
        }
    }

    // res and conj are ring maps preserving one
    for h in 0..n {
        for k in lat.subgroups_of(h) {
            let res = r.m.res(h, k);
            if res.mul_vec(&r.one[h]) != r.one[k] {
                report.push("res preserves one", format!("H={h} K={k}"));
            }
            for i in 0..r.rank(h) {
                for j in 0..r.rank(h) {
                    let lhs = res.mul_vec(&r.mult[h].apply_basis(i, j));
                    let rhs = r.mult[k].apply(&res.col(i), &res.col(j));
                    if lhs != rhs {
                        report.push("res is a ring map", format!("H={h} K={k} ({i},{j})"));
                    }
                }
            }
        }
    }
    for g in 0..ctx.order() {
        for h in 0..n {
            let gh = ctx.conj_subgroup(g, h);
            let c = r.m.conj(g, h);
            if c.mul_vec(&r.one[h]) != r.one[gh] {
                report.push("conj preserves one", format!("g={g} H={h}"));
            }
            for i in 0..r.rank(h) {
                for j in 0..r.rank(h) {
                    let lhs = c.mul_vec(&r.mult[h].apply_basis(i, j));
                    let rhs = r.mult[gh].apply(&c.col(i), &c.col(j));
                    if lhs != rhs {
                        report.push("conj is a ring map", format!("g={g} H={h} ({i},{j})"));
                    }
                }
            }
        }
    }

    // Frobenius relations
    for h in 0..n {
        for k in lat.subgroups_of(h) {
            let res = r.m.res(h, k);
            let ind = r.m.ind(h, k);
            for i in 0..r.rank(h) {
                let res_i = res.col(i);
                let mut ei = vec![BigRational::zero(); r.rank(h)];
                ei[i] = BigRational::one();
                for j in 0..r.rank(k) {
                    let mut ej = vec![BigRational::zero(); r.rank(k)];
                    ej[j] = BigRational::one();
                    // ind(res(x)·y) = x·ind(y)
                    let lhs = ind.mul_vec(&r.mult[k].apply(&res_i, &ej));
                    let rhs = r.mult[h].apply(&ei, &ind.col(j));
                    if lhs != rhs {
                        report.push("Frobenius (left)", format!("H={h} K={k} ({i},{j})"));
                    }
                    // ind(y·res(x)) = ind(y)·x
                    let lhs = ind.mul_vec(&r.mult[k].apply(&ej, &res_i));
                    let rhs = r.mult[h].apply(&ind.col(j), &ei);
                    if lhs != rhs {
                        report.push("Frobenius (right)", format!("H={h} K={k} ({i},{j})"));
                    }
                }
            }
        }
    }

    report
}

pub fn validate_module(module: &MackeyModule) -> ValidationReport {
    let mut report = validate_mackey(&module.m);
    let r = &module.ring;
    let ctx = &module.m.ctx;
    let lat = &ctx.lattice;
    let n = lat.len();

    for h in 0..n {
        let b = &module.act[h];
        if b.left != r.rank(h) || b.right != module.rank(h) || b.out != module.rank(h) {
            report.push("shape(act)", format!("H={h}"));
            return report;
        }
        // unital and associative
        for j in 0..module.rank(h) {
            let mut e = vec![BigRational::zero(); module.rank(h)];
            e[j] = BigRational::one();
            if b.apply(&r.one[h], &e) != e {
                report.push("unital action", format!("H={h} basis={j}"));
            }
        }
        for i in 0..r.rank(h) {
            let mut ei = vec![BigRational::zero(); r.rank(h)];
            ei[i] = BigRational::one();
            for i2 in 0..r.rank(h) {
                let prod = r.mult[h].apply_basis(i, i2);
                for j in 0..module.rank(h) {
                    let lhs = b.apply(&ei, &b.apply_basis(i2, j));
                    let rhs = b.apply(
                        &prod,
                        &{
                            let mut ej = vec![BigRational::zero(); module.rank(h)];
                            ej[j] = BigRational::one();
                            ej
                        },
                    );
                    if lhs != rhs {
                        report.push("associative action", format!("H={h} ({i},{i2},{j})"));
                    }
                }
            }
        }
    }

    // res commutes with the action
    for h in 0..n {
        for k in lat.subgroups_of(h) {
            let res_r = r.m.res(h, k);
            let res_m = module.m.res(h, k);
            for i in 0..r.rank(h) {
                for j in 0..module.rank(h) {
                    let lhs = res_m.mul_vec(&module.act[h].apply_basis(i, j));
                    let rhs = module.act[k].apply(&res_r.col(i), &res_m.col(j));
                    if lhs != rhs {
                        report.push("res(r·m) = res(r)·res(m)", format!("H={h} K={k} ({i},{j})"));
                    }
                }
            }
        }
    }

    // conj twists the action
    for g in 0..ctx.order() {
        for h in 0..n {
            let gh = ctx.conj_subgroup(g, h);
            let c_r = r.m.conj(g, h);
            let c_m = module.m.conj(g, h);
            for i in 0..r.rank(h) {
                for j in 0..module.rank(h) {
                    let lhs = c_m.mul_vec(&module.act[h].apply_basis(i, j));
                    let rhs = module.act[gh].apply(&c_r.col(i), &c_m.col(j));
                    if lhs != rhs {
                        report.push("c_g(r·m) = c_g(r)·c_g(m)", format!("g={g} H={h} ({i},{j})"));
                    }
                }
            }
        }
    }

    // module Frobenius relations
    for h in 0..n {
        for k in lat.subgroups_of(h) {
            let res_r = r.m.res(h, k);
            let res_m = module.m.res(h, k);
            let ind_m = module.m.ind(h, k);
            for i in 0..r.rank(h) {
                let res_i = res_r.col(i);
                let mut ei = vec![BigRational::zero(); r.rank(h)];
                ei[i] = BigRational::one();
                for j in 0..module.rank(k) {
                    // ind(res(r)·m) = r·ind(m), r ∈ R(H), m ∈ M(K)
                    let mut ej = vec![BigRational::zero(); module.rank(k)];
                    ej[j] = BigRational::one();
                    let lhs = ind_m.mul_vec(&module.act[k].apply(&res_i, &ej));
                    let rhs = module.act[h].apply(&ei, &ind_m.col(j));
                    if lhs != rhs {
                        report.push("module Frobenius (left)", format!("H={h} K={k} ({i},{j})"));
                    }
                }
            }
            for i in 0..r.rank(k) {
                let mut ei = vec![BigRational::zero(); r.rank(k)];
                ei[i] = BigRational::one();
                let ind_ri = r.m.ind(h, k).col(i);
                for j in 0..module.rank(h) {
                    // ind(r·res(m)) = ind(r)·m, r ∈ R(K), m ∈ M(H)
                    let lhs = ind_m.mul_vec(&module.act[k].apply(&ei, &res_m.col(j)));
                    let mut ej = vec![BigRational::zero(); module.rank(h)];
                    ej[j] = BigRational::one();
                    let rhs = module.act[h].apply(&ind_ri, &ej);
                    if lhs != rhs {
                        report.push("module Frobenius (right)", format!("H={h} K={k} ({i},{j})"));
                    }
                }
            }
        }
    }

    report
}

/// Check that the components commute with res, ind and conj and are
/// R(H)-linear at every level.
pub fn validate_morphism(f: &MackeyMorphism) -> ValidationReport {
    let mut report = ValidationReport::default();
    let src = &f.source;
    let tgt = &f.target;
    if !Arc::ptr_eq(&src.ring, &tgt.ring) {
        report.push("common Green functor", "source and target rings differ".into());
        return report;
    }
    let ctx = &src.m.ctx;
    let lat = &ctx.lattice;
    let n = lat.len();
    for h in 0..n {
        let c = &f.comps[h];
        if (c.rows(), c.cols()) != (tgt.rank(h), src.rank(h)) {
            report.push("shape(component)", format!("H={h}"));
            return report;
        }
    }
    for h in 0..n {
        for k in lat.subgroups_of(h) {
            if f.comps[k].mul(src.m.res(h, k)) != tgt.m.res(h, k).mul(&f.comps[h]) {
                report.push("commutes with res", format!("H={h} K={k}"));
            }
            if f.comps[h].mul(src.m.ind(h, k)) != tgt.m.ind(h, k).mul(&f.comps[k]) {
                report.push("commutes with ind", format!("H={h} K={k}"));
            }
        }
    }
    for g in 0..ctx.order() {
        for h in 0..n {
            let gh = ctx.conj_subgroup(g, h);
            if f.comps[gh].mul(src.m.conj(g, h)) != tgt.m.conj(g, h).mul(&f.comps[h]) {
                report.push("commutes with conj", format!("g={g} H={h}"));
            }
        }
    }
    for h in 0..n {
        for i in 0..src.ring.rank(h) {
            let mut ei = vec![BigRational::zero(); src.ring.rank(h)];
            ei[i] = BigRational::one();
            for j in 0..src.rank(h) {
                let lhs = f.comps[h].mul_vec(&src.act[h].apply_basis(i, j));
                let rhs = tgt.act[h].apply(&ei, &f.comps[h].col(j));
                if lhs != rhs {
                    report.push("R(H)-linearity", format!("H={h} ({i},{j})"));
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_SIZE_LIMIT;
    use crate::linalg::qi;

    fn ctx(spec: &str) -> Arc<GroupContext> {
        GroupContext::for_spec(spec, DEFAULT_SIZE_LIMIT).unwrap()
    }

    #[test]
    fn burnside_green_validates_and_perturbation_is_caught() {
        let c = ctx("S3");
        let b = burnside_green(&c);
        assert!(validate_green(&b).is_valid());

        // perturb one induction entry: the double coset formula must fail
        let mut bad = b.m.clone();
        let top = c.lattice.top();
        let k = c.lattice.subgroups_of(top)[1];
        let mut mat = bad.ind(top, k).clone();
        mat[(0, 0)] = &mat[(0, 0)] + &qi(1);
        bad.ind.insert((top, k), mat);
        let report = validate_mackey(&bad);
        assert!(!report.is_valid());
        assert!(report.violations.iter().any(|v| v.law.contains("double coset")
            || v.law.contains("transitivity")
            || v.law.contains("ind")));
    }

    #[test]
    fn zero_and_direct_sum_validate() {
        let c = ctx("S3");
        let b = Arc::new(burnside_green(&c));
        let zero = MackeyModule::zero(&b);
        assert!(validate_module(&zero).is_valid());

        let bb = Arc::new(b.as_module());
        let sum = bb.direct_sum(&zero);
        assert!(validate_module(&sum).is_valid());
        assert_eq!(sum.m.ranks, b.m.ranks);

        // M ⊕ M with the swap morphism
        let mm = Arc::new(bb.direct_sum(&bb));
        let swap_comps: Vec<QMat> = (0..c.lattice.len())
            .map(|h| {
                let r = bb.rank(h);
                QMat::from_fn(2 * r, 2 * r, |i, j| {
                    if (i + r) % (2 * r) == j { qi(1) } else { qi(0) }
                })
            })
            .collect();
        let swap = MackeyMorphism {
            source: Arc::clone(&mm),
            target: Arc::clone(&mm),
            comps: swap_comps,
        };
        assert!(validate_morphism(&swap).is_valid());
        let id = MackeyMorphism::identity(&mm);
        assert!(validate_morphism(&id).is_valid());
        // swap ∘ swap = id
        let twice = swap.compose(&swap);
        assert_eq!(twice.comps, id.comps);
    }

    #[test]
    fn scalar_extension_keeps_validity_and_ranks() {
        let c = ctx("S3");
        let b = burnside_green(&c);
        let bq = b.scalar_extend();
        assert_eq!(bq.m.base, BaseRing::Q);
        assert_eq!(bq.m.ranks, b.m.ranks);
        assert!(validate_green(&bq).is_valid());
    }
}

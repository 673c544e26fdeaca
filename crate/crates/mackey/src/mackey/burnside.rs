//! The Burnside ring Green functor and the canonical action of the
//! Burnside ring on an arbitrary Mackey functor.
//!
//! B(H) is free on H-conjugacy classes of subgroups of H. Restriction
//! decomposes H-sets into K-orbits via double cosets, induction
//! relabels, conjugation transports along ᵍ(-), and multiplication
//! decomposes H/K × H/L into orbits.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::group::GroupContext;
use crate::linalg::{IntMat, QMat};

use super::{BaseRing, Bilinear, GreenFunctor, MackeyFunctor, MackeyModule};

/// H-conjugacy classes of subgroups of H, as (representative-sorted)
/// lists of lattice ids, plus the membership map.
pub struct LevelBasis {
    pub reps: Vec<usize>,
    pub class_of: BTreeMap<usize, usize>,
}

pub fn level_basis(ctx: &GroupContext, h: usize) -> LevelBasis {
    let subs = ctx.lattice.subgroups_of(h);
    let h_elems = ctx.lattice.elements(h);
    let mut class_of: BTreeMap<usize, usize> = BTreeMap::new();
    let mut reps = Vec::new();
    for &s in &subs {
        if class_of.contains_key(&s) {
            continue;
        }
        let idx = reps.len();
        reps.push(s);
        for &x in h_elems {
            class_of.insert(ctx.conj_subgroup(x, s), idx);
        }
    }
    LevelBasis { reps, class_of }
}

pub fn burnside_green(ctx: &Arc<GroupContext>) -> GreenFunctor {
    let lat = &ctx.lattice;
    let n = lat.len();
    let bases: Vec<LevelBasis> = (0..n).map(|h| level_basis(ctx, h)).collect();
    let ranks: Vec<usize> = bases.iter().map(|b| b.reps.len()).collect();

    let mut res = BTreeMap::new();
    let mut ind = BTreeMap::new();
    for h in 0..n {
        for k in lat.subgroups_of(h) {
            // ind^H_K [K/L] = [H/L]
            let mut imat = QMat::zeros(ranks[h], ranks[k]);
            for (j, &l) in bases[k].reps.iter().enumerate() {
                imat[(bases[h].class_of[&l], j)] += BigRational::one();
            }
            ind.insert((h, k), imat);
            // res^H_K [H/L] = Σ_{KgL ⊆ H} [K/(K ∩ ᵍL)]
            let mut rmat = QMat::zeros(ranks[k], ranks[h]);
            for (j, &l) in bases[h].reps.iter().enumerate() {
                for dc in ctx.double_cosets_in(h, k, l) {
                    rmat[(bases[k].class_of[&dc.k_cap_gl], j)] += BigRational::one();
                }
            }
            res.insert((h, k), rmat);
        }
    }

    let conj: Vec<Vec<QMat>> = (0..ctx.order())
        .map(|g| {
            (0..n)
                .map(|h| {
                    let gh = ctx.conj_subgroup(g, h);
                    let mut c = QMat::zeros(ranks[gh], ranks[h]);
                    for (j, &l) in bases[h].reps.iter().enumerate() {
                        let gl = ctx.conj_subgroup(g, l);
                        c[(bases[gh].class_of[&gl], j)] += BigRational::one();
                    }
                    c
                })
                .collect()
        })
        .collect();

    // multiplication: [H/K] · [H/L] = Σ_{KgL ⊆ H} [H/(K ∩ ᵍL)]
    let mult: Vec<Bilinear> = (0..n)
        .map(|h| {
            let rank = ranks[h];
            let table: Vec<QMat> = (0..rank)
                .map(|i| {
                    let k = bases[h].reps[i];
                    let mut m = QMat::zeros(rank, rank);
                    for (j, &l) in bases[h].reps.iter().enumerate() {
                        for dc in ctx.double_cosets_in(h, k, l) {
                            m[(bases[h].class_of[&dc.k_cap_gl], j)] += BigRational::one();
                        }
                    }
                    m
                })
                .collect();
            Bilinear { left: rank, right: rank, out: rank, table }
        })
        .collect();

    let one: Vec<Vec<BigRational>> = (0..n)
        .map(|h| {
            let mut v = vec![BigRational::zero(); ranks[h]];
            v[bases[h].class_of[&h]] = BigRational::one();
            v
        })
        .collect();

    let m = MackeyFunctor::new(
        Arc::clone(ctx),
        BaseRing::Z,
        "B".to_string(),
        ranks,
        res,
        ind,
        conj,
    );
    GreenFunctor { m, mult, one }
}

/// Table of marks at level H: marks[i][j] = #(H/L_j)^{K_i}, rows and
/// columns indexed by the H-classes of subgroups of H.
pub fn marks_matrix(ctx: &GroupContext, h: usize) -> IntMat {
    let basis = level_basis(ctx, h);
    let h_elems = ctx.lattice.elements(h);
    IntMat::from_fn(basis.reps.len(), basis.reps.len(), |i, j| {
        let k = basis.reps[i];
        let l = basis.reps[j];
        let l_len = ctx.lattice.order_of(l);
        let l_set = ctx.lattice.elements(l);
        // #{x ∈ H : K^x ⊆ L} / |L|
        let count = h_elems
            .iter()
            .filter(|&&x| {
                let xinv = ctx.group.inv(x);
                ctx.lattice
                    .elements(k)
                    .iter()
                    .all(|&ke| l_set.binary_search(&ctx.group.conj(xinv, ke)).is_ok())
            })
            .count();
        BigInt::from(count / l_len)
    })
}

/// The canonical action [H/K] · m = ind^H_K res^H_K (m) making any
/// Mackey functor a module over the Burnside Green functor.
pub fn canonical_burnside_action(
    burnside: &Arc<GreenFunctor>,
    m: MackeyFunctor,
) -> MackeyModule {
    let ctx = Arc::clone(&m.ctx);
    let n = ctx.lattice.len();
    let act: Vec<Bilinear> = (0..n)
        .map(|h| {
            let basis = level_basis(&ctx, h);
            let table: Vec<QMat> = basis
                .reps
                .iter()
                .map(|&k| m.ind(h, k).mul(m.res(h, k)))
                .collect();
            Bilinear { left: basis.reps.len(), right: m.ranks[h], out: m.ranks[h], table }
        })
        .collect();
    MackeyModule { ring: Arc::clone(burnside), m, act }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_SIZE_LIMIT;
    use crate::linalg::{algebra::det, qi};
    use crate::mackey::{validate_green, validate_module};

    fn ctx(spec: &str) -> Arc<GroupContext> {
        GroupContext::for_spec(spec, DEFAULT_SIZE_LIMIT).unwrap()
    }

    #[test]
    fn ranks_and_spec_products() {
        let c = ctx("S3");
        let b = burnside_green(&c);
        let top = c.lattice.top();
        // B(S3) has rank 4
        assert_eq!(b.rank(top), 4);
        // B(1) is Z
        assert_eq!(b.rank(0), 1);

        // [S3/C2]·[S3/C3] = [S3/1]
        let basis = level_basis(&c, top);
        let c2 = basis
            .reps
            .iter()
            .position(|&s| c.lattice.order_of(s) == 2)
            .unwrap();
        let c3 = basis
            .reps
            .iter()
            .position(|&s| c.lattice.order_of(s) == 3)
            .unwrap();
        let triv = basis.reps.iter().position(|&s| s == 0).unwrap();
        let prod = b.mult[top].apply_basis(c2, c3);
        let mut expect = vec![qi(0); 4];
        expect[triv] = qi(1);
        assert_eq!(prod, expect);
    }

    #[test]
    fn validates_on_catalog() {
        for spec in ["C1", "C4", "S3", "D4", "Q8"] {
            let c = ctx(spec);
            let b = burnside_green(&c);
            assert!(validate_green(&b).is_valid(), "{spec}");
            assert!(b.is_commutative(), "{spec}");
        }
    }

    #[test]
    fn marks_are_injective_levelwise() {
        for spec in ["C6", "S3", "D4", "A4"] {
            let c = ctx(spec);
            for h in 0..c.lattice.len() {
                let marks = marks_matrix(&c, h);
                assert!(!det(&marks.to_rational()).is_zero(), "{spec} level {h}");
            }
        }
    }

    #[test]
    fn burnside_acts_on_itself_as_multiplication() {
        let c = ctx("S3");
        let b = Arc::new(burnside_green(&c));
        let action = canonical_burnside_action(&b, b.m.clone());
        assert!(validate_module(&action).is_valid());
        // [H/K]·x via ind∘res equals the ring product [H/K]·x
        for h in 0..c.lattice.len() {
            for i in 0..b.rank(h) {
                for j in 0..b.rank(h) {
                    assert_eq!(
                        action.act[h].apply_basis(i, j),
                        b.mult[h].apply_basis(i, j),
                        "level {h} ({i},{j})"
                    );
                }
            }
        }
    }

    #[test]
    fn canonical_action_identity_class() {
        // [H/H] acts as the identity on any Mackey functor level
        let c = ctx("D4");
        let b = Arc::new(burnside_green(&c));
        let action = canonical_burnside_action(&b, b.m.clone());
        for h in 0..c.lattice.len() {
            let basis = level_basis(&c, h);
            let hh = basis.class_of[&h];
            for j in 0..b.rank(h) {
                let mut e = vec![qi(0); b.rank(h)];
                e[j] = qi(1);
                assert_eq!(action.act[h].apply_basis(hh, j), e);
            }
        }
    }
}

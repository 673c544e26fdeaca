//! Fixed-point Mackey functors of an integer representation: level H is
//! the fixed sublattice V^H, restriction is inclusion, induction is the
//! relative trace over coset representatives, conjugation is the action.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::group::GroupContext;
use crate::linalg::snf;
use crate::linalg::{IntMat, QMat};

use super::{BaseRing, Bilinear, GreenFunctor, MackeyFunctor};

/// An integer representation of the context group: one matrix per
/// element, validated as a homomorphism.
pub struct IntRepresentation {
    pub dim: usize,
    pub mats: Vec<IntMat>,
}

impl IntRepresentation {
    pub fn new(ctx: &GroupContext, mats: Vec<IntMat>) -> Result<Self> {
        if mats.len() != ctx.order() {
            return Err(Error::Dimension("one matrix per group element required".into()));
        }
        let dim = mats[0].rows();
        for m in &mats {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::Dimension("representation matrices must be square".into()));
            }
        }
        if mats[0] != IntMat::identity(dim) {
            return Err(Error::Validation("identity must act as the identity matrix".into()));
        }
        for a in 0..ctx.order() {
            for b in 0..ctx.order() {
                if mats[a].mul(&mats[b]) != mats[ctx.group.mul(a, b)] {
                    return Err(Error::Validation(format!(
                        "not a homomorphism at ({a},{b})"
                    )));
                }
            }
        }
        Ok(IntRepresentation { dim, mats })
    }

    pub fn trivial(ctx: &GroupContext) -> Self {
        IntRepresentation {
            dim: 1,
            mats: (0..ctx.order()).map(|_| IntMat::identity(1)).collect(),
        }
    }

    /// The regular representation on Z[G] by left multiplication.
    pub fn regular(ctx: &GroupContext) -> Self {
        let n = ctx.order();
        let mats = (0..n)
            .map(|g| {
                IntMat::from_fn(n, n, |r, c| {
                    if ctx.group.mul(g, c) == r { BigInt::one() } else { BigInt::zero() }
                })
            })
            .collect();
        IntRepresentation { dim: n, mats }
    }

    /// The zero representation (dimension 0).
    pub fn zero(ctx: &GroupContext) -> Self {
        IntRepresentation { dim: 0, mats: (0..ctx.order()).map(|_| IntMat::zeros(0, 0)).collect() }
    }
}

fn fixed_lattice(ctx: &GroupContext, rep: &IntRepresentation, h: usize) -> IntMat {
    let elems = ctx.lattice.elements(h);
    if rep.dim == 0 {
        return IntMat::zeros(0, 0);
    }
    let id = IntMat::identity(rep.dim);
    let mut stacked: Option<IntMat> = None;
    for &x in elems.iter().filter(|&&x| x != 0) {
        let diff = rep.mats[x].sub(&id);
        stacked = Some(match stacked {
            None => diff,
            Some(s) => s.vstack(&diff),
        });
    }
    match stacked {
        None => id, // trivial subgroup: everything is fixed
        Some(s) => snf::kernel_basis(&s),
    }
}

/// Express `cols` in the basis `basis` (both spanning sublattices of the
/// same ambient lattice, with `cols` inside the span of `basis`).
fn in_basis(basis: &IntMat, cols: &IntMat) -> IntMat {
    snf::solve_mat(basis, cols).expect("saturated sublattice coordinates must be integral")
}

pub fn fixed_point_mackey(
    ctx: &Arc<GroupContext>,
    rep: &IntRepresentation,
    name: &str,
) -> MackeyFunctor {
    let lat = &ctx.lattice;
    let n = lat.len();
    let bases: Vec<IntMat> = (0..n).map(|h| fixed_lattice(ctx, rep, h)).collect();
    let ranks: Vec<usize> = bases.iter().map(IntMat::cols).collect();

    let mut res = BTreeMap::new();
    let mut ind = BTreeMap::new();
    for h in 0..n {
        for k in lat.subgroups_of(h) {
            // res: V^H ⊆ V^K expressed in the K-basis
            res.insert((h, k), in_basis(&bases[k], &bases[h]).to_rational());
            // ind: relative trace Σ over coset representatives of K in H
            let h_elems = lat.elements(h);
            let k_elems = lat.elements(k);
            let mut seen = vec![false; ctx.order()];
            let mut trace = IntMat::zeros(rep.dim, rep.dim);
            for &x in h_elems {
                if seen[x] {
                    continue;
                }
                for &ke in k_elems {
                    seen[ctx.group.mul(x, ke)] = true;
                }
                trace = trace.add(&rep.mats[x]);
            }
            ind.insert((h, k), in_basis(&bases[h], &trace.mul(&bases[k])).to_rational());
        }
    }

    let conj: Vec<Vec<QMat>> = (0..ctx.order())
        .map(|g| {
            (0..n)
                .map(|h| {
                    let gh = ctx.conj_subgroup(g, h);
                    in_basis(&bases[gh], &rep.mats[g].mul(&bases[h])).to_rational()
                })
                .collect()
        })
        .collect();

    let res_q = res.into_iter().collect();
    let ind_q = ind.into_iter().collect();
    MackeyFunctor::new(
        Arc::clone(ctx),
        BaseRing::Z,
        name.to_string(),
        ranks,
        res_q,
        ind_q,
        conj,
    )
}

/// Fixed points of a G-ring: level multiplication is the ambient one
/// restricted to fixed sublattices. The action matrices must be ring
/// automorphisms for the ambient product.
pub fn fixed_point_green(
    ctx: &Arc<GroupContext>,
    rep: &IntRepresentation,
    ambient_mult: &Bilinear,
    ambient_one: &[BigRational],
    name: &str,
) -> Result<GreenFunctor> {
    for g in 0..ctx.order() {
        let m = rep.mats[g].to_rational();
        for i in 0..rep.dim {
            for j in 0..rep.dim {
                let lhs = m.mul_vec(&ambient_mult.apply_basis(i, j));
                let rhs = ambient_mult.apply(&m.col(i), &m.col(j));
                if lhs != rhs {
                    return Err(Error::Validation(format!(
                        "element {g} does not act by ring automorphisms"
                    )));
                }
            }
        }
        if m.mul_vec(&ambient_one.to_vec()) != ambient_one {
            return Err(Error::Validation(format!("element {g} moves the unit")));
        }
    }
    let m = fixed_point_mackey(ctx, rep, name);
    let n = ctx.lattice.len();
    let bases: Vec<IntMat> = (0..n).map(|h| fixed_lattice(ctx, rep, h)).collect();
    let mut mult = Vec::with_capacity(n);
    let mut one = Vec::with_capacity(n);
    for h in 0..n {
        let basis = bases[h].to_rational();
        let rank = m.ranks[h];
        let table: Vec<QMat> = (0..rank)
            .map(|i| {
                let cols: Vec<Vec<BigRational>> = (0..rank)
                    .map(|j| {
                        let prod = ambient_mult.apply(&basis.col(i), &basis.col(j));
                        crate::linalg::rational::solve_vec(&basis, &prod)
                            .expect("product of fixed vectors is fixed")
                    })
                    .collect();
                QMat::from_fn(rank, rank, |r, c| cols[c][r].clone())
            })
            .collect();
        mult.push(Bilinear { left: rank, right: rank, out: rank, table });
        one.push(
            crate::linalg::rational::solve_vec(&basis, &ambient_one.to_vec())
                .expect("the unit is fixed by every subgroup"),
        );
    }
    Ok(GreenFunctor { m, mult, one })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_SIZE_LIMIT;
    use crate::linalg::qi;
    use crate::mackey::{
        burnside_green, canonical_burnside_action, validate_green, validate_mackey,
        validate_module,
    };

    fn ctx(spec: &str) -> Arc<GroupContext> {
        GroupContext::for_spec(spec, DEFAULT_SIZE_LIMIT).unwrap()
    }

    #[test]
    fn trivial_rep_gives_constant_functor_with_index_inductions() {
        let c = ctx("S3");
        let rep = IntRepresentation::trivial(&c);
        let m = fixed_point_mackey(&c, &rep, "FP(triv)");
        assert!(validate_mackey(&m).is_valid());
        assert!(m.ranks.iter().all(|&r| r == 1));
        for h in 0..c.lattice.len() {
            for k in c.lattice.subgroups_of(h) {
                let index = c.lattice.order_of(h) / c.lattice.order_of(k);
                assert_eq!(m.ind(h, k)[(0, 0)], qi(index as i64));
                assert_eq!(m.res(h, k)[(0, 0)], qi(1));
            }
        }
    }

    #[test]
    fn regular_rep_of_c2_has_levels_2_1() {
        let c = ctx("C2");
        let rep = IntRepresentation::regular(&c);
        let m = fixed_point_mackey(&c, &rep, "FP(reg)");
        assert!(validate_mackey(&m).is_valid());
        assert_eq!(m.ranks, vec![2, 1]);
    }

    #[test]
    fn zero_rep_gives_zero_functor() {
        let c = ctx("C4");
        let rep = IntRepresentation::zero(&c);
        let m = fixed_point_mackey(&c, &rep, "FP(0)");
        assert!(validate_mackey(&m).is_valid());
        assert!(m.ranks.iter().all(|&r| r == 0));
    }

    #[test]
    fn ind_res_is_index_on_trivial_action() {
        // ind^H_K ∘ res^H_K = [H:K] on V^H when K acts trivially on V:
        // with the trivial representation this holds at every level pair.
        for spec in ["C6", "S3", "D4"] {
            let c = ctx(spec);
            let rep = IntRepresentation::trivial(&c);
            let m = fixed_point_mackey(&c, &rep, "FP(triv)");
            for h in 0..c.lattice.len() {
                for k in c.lattice.subgroups_of(h) {
                    let comp = m.ind(h, k).mul(m.res(h, k));
                    let index = c.lattice.order_of(h) / c.lattice.order_of(k);
                    assert_eq!(comp, QMat::identity(1).scale(&qi(index as i64)));
                }
            }
        }
    }

    #[test]
    fn fixed_point_modules_validate_over_burnside() {
        for spec in ["C4", "S3", "Q8"] {
            let c = ctx(spec);
            let b = Arc::new(burnside_green(&c));
            for rep in [IntRepresentation::trivial(&c), IntRepresentation::regular(&c)] {
                let m = fixed_point_mackey(&c, &rep, "FP");
                let module = canonical_burnside_action(&b, m);
                assert!(validate_module(&module).is_valid(), "{spec}");
            }
        }
    }

    #[test]
    fn constant_green_functor_from_trivial_ring() {
        let c = ctx("S3");
        let rep = IntRepresentation::trivial(&c);
        let mult = Bilinear { left: 1, right: 1, out: 1, table: vec![QMat::identity(1)] };
        let one = vec![qi(1)];
        let g = fixed_point_green(&c, &rep, &mult, &one, "FP(Z)").unwrap();
        assert!(validate_green(&g).is_valid());
    }

    #[test]
    fn non_representation_is_rejected() {
        let c = ctx("C2");
        let bad = vec![IntMat::identity(1), IntMat::identity(1).scale(&BigInt::from(2))];
        assert!(IntRepresentation::new(&c, bad).is_err());
    }
}

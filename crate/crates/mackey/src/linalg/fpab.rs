//! Finitely presented abelian groups and integral quotient presentations.
//!
//! A group is a cokernel `Z^gens / im(rels)`. Everything downstream that
//! says "bijective after inverting |G|" reduces here to elementary
//! divisors: a map is an isomorphism up to |G|-torsion iff it is a
//! rational bijection and every divisor of its kernel/cokernel only
//! involves primes dividing |G|.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::mat::IntMat;
use super::snf::{self, smith_normal_form, LatticeBuilder};

/// `Z^gens / im(rels)`; `rels` is `gens x r`.
#[derive(Clone, Debug)]
pub struct FpGroup {
    pub gens: usize,
    pub rels: IntMat,
}

/// Isomorphism invariants of a finitely generated abelian group:
/// free rank plus the elementary divisor chain (entries > 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbInvariants {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// All primes dividing some elementary divisor.
    pub fn torsion_primes(&self) -> Vec<BigInt> {
        let mut primes = Vec::new();
        for d in &self.torsion {
            let mut d = d.abs();
            let mut p = BigInt::from(2);
            while &p * &p <= d {
                if (&d % &p).is_zero() {
                    if !primes.contains(&p) {
                        primes.push(p.clone());
                    }
                    while (&d % &p).is_zero() {
                        d = &d / &p;
                    }
                }
                p += 1;
            }
            if d > BigInt::one() && !primes.contains(&d) {
                primes.push(d);
            }
        }
        primes.sort();
        primes
    }
}

impl FpGroup {
    pub fn free(n: usize) -> Self {
        FpGroup { gens: n, rels: IntMat::zeros(n, 0) }
    }

    pub fn invariants(&self) -> AbInvariants {
        let snf = smith_normal_form(&self.rels);
        let nonzero = snf.divisors();
        let torsion: Vec<BigInt> = nonzero.iter().filter(|d| !d.is_one()).cloned().collect();
        AbInvariants { free_rank: self.gens - nonzero.len(), torsion }
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants().is_trivial()
    }

    /// Does `v` lie in the relation span (i.e. is zero in the group)?
    pub fn is_zero_element(&self, v: &[BigInt]) -> bool {
        snf::solve(&self.rels, v).is_some()
    }

    pub fn eq_elements(&self, a: &[BigInt], b: &[BigInt]) -> bool {
        let diff: Vec<BigInt> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        self.is_zero_element(&diff)
    }

    /// Direct sum, generators concatenated.
    pub fn direct_sum(&self, other: &FpGroup) -> FpGroup {
        FpGroup { gens: self.gens + other.gens, rels: self.rels.direct_sum(&other.rels) }
    }
}

/// A morphism of finitely presented groups is a `target.gens x source.gens`
/// integer matrix sending the relation span into the relation span.
pub fn is_well_defined(f: &IntMat, source: &FpGroup, target: &FpGroup) -> bool {
    assert_eq!(f.rows(), target.gens);
    assert_eq!(f.cols(), source.gens);
    let image = f.mul(&source.rels);
    snf::solve_mat(&target.rels, &image).is_some()
}

/// Invariants of `target / im(f)`.
pub fn cokernel_invariants(f: &IntMat, target: &FpGroup) -> AbInvariants {
    FpGroup { gens: target.gens, rels: target.rels.hstack(f) }.invariants()
}

/// The sublattice `{ x : f x ∈ im(rels) }` of the source generator
/// lattice, as basis columns.
pub fn preimage_lattice(f: &IntMat, target: &FpGroup) -> IntMat {
    let stacked = f.hstack(&target.rels);
    let k = snf::kernel_basis(&stacked);
    let mut lb = LatticeBuilder::new(f.cols());
    for j in 0..k.cols() {
        lb.insert((0..f.cols()).map(|i| k[(i, j)].clone()).collect());
    }
    lb.basis()
}

/// Invariants of `ker(f : source -> target)`.
pub fn kernel_invariants(f: &IntMat, source: &FpGroup, target: &FpGroup) -> AbInvariants {
    let lattice = preimage_lattice(f, target);
    // ker = lattice / im(source.rels); the relation columns lie in the
    // lattice exactly because f is a well-defined morphism.
    let coords = snf::solve_mat(&lattice, &source.rels)
        .expect("morphism relations must land in the preimage lattice");
    FpGroup { gens: lattice.cols(), rels: coords }.invariants()
}

pub fn is_isomorphism(f: &IntMat, source: &FpGroup, target: &FpGroup) -> bool {
    is_well_defined(f, source, target)
        && cokernel_invariants(f, target).is_trivial()
        && kernel_invariants(f, source, target).is_trivial()
}

/// A subgroup presented on its own generators together with the
/// inclusion into the ambient group's generators.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub group: FpGroup,
    /// `ambient.gens x group.gens`
    pub inclusion: IntMat,
}

impl Subgroup {
    /// Express an ambient element lying in the subgroup in subgroup
    /// generators; `None` when it does not lie there.
    pub fn express(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        // Solve inclusion * x = v modulo ambient relations is not needed:
        // subgroup generators are chosen inside the ambient lattice, so a
        // plain lattice solve suffices for the elements we pass in.
        snf::solve(&self.inclusion, v)
    }
}

/// The subgroup of simultaneous fixed points `{ t : a_i t = t }` of a
/// family of endomorphisms acting on the group's generators.
pub fn fixed_subgroup(t: &FpGroup, actions: &[IntMat]) -> Subgroup {
    if actions.is_empty() {
        return Subgroup { group: t.clone(), inclusion: IntMat::identity(t.gens) };
    }
    // x fixed iff (a_i - 1) x ∈ im(rels) for all i: take the x-part of
    // the kernel of [stack(a_i - 1) | diag(rels, ..., rels)].
    let id = IntMat::identity(t.gens);
    let mut stack: Option<IntMat> = None;
    for a in actions {
        let diff = a.sub(&id);
        stack = Some(match stack {
            None => diff,
            Some(s) => s.vstack(&diff),
        });
    }
    let stack = stack.unwrap();
    let mut rel_block = IntMat::zeros(0, 0);
    for _ in actions {
        rel_block = rel_block.direct_sum(&t.rels);
    }
    let full = stack.hstack(&rel_block);
    let k = snf::kernel_basis(&full);
    let mut lb = LatticeBuilder::new(t.gens);
    for j in 0..k.cols() {
        lb.insert((0..t.gens).map(|i| k[(i, j)].clone()).collect());
    }
    // The relation span is fixed pointwise modulo itself, so it embeds.
    for j in 0..t.rels.cols() {
        lb.insert(t.rels.col(j));
    }
    let inclusion = lb.basis();
    let rels = snf::solve_mat(&inclusion, &t.rels).expect("relations lie in the fixed lattice");
    Subgroup { group: FpGroup { gens: inclusion.cols(), rels }, inclusion }
}

/// A quotient `Z^ambient / span`, with torsion, presented by explicit
/// projection and lift matrices. This is the integral counterpart of
/// `RatQuotient` and the carrier for Brauer quotients over the integers.
#[derive(Clone, Debug)]
pub struct AbelianPresentation {
    pub free_rank: usize,
    /// Elementary divisors > 1, in a divisibility chain.
    pub torsion: Vec<BigInt>,
    /// `(t + f) x ambient`: torsion coordinates first, then free ones.
    pub projection: IntMat,
    /// `ambient x (t + f)`: lifts of the quotient generators.
    pub lift: IntMat,
    /// Moduli per quotient coordinate (`0` for free coordinates).
    pub moduli: Vec<BigInt>,
    /// The relation span as basis columns (for downstream morphism checks).
    pub span: IntMat,
}

impl AbelianPresentation {
    pub fn gens(&self) -> usize {
        self.torsion.len() + self.free_rank
    }

    pub fn as_fp(&self) -> FpGroup {
        let t = self.torsion.len();
        let mut rels = IntMat::zeros(self.gens(), t);
        for (i, d) in self.torsion.iter().enumerate() {
            rels[(i, i)] = d.clone();
        }
        FpGroup { gens: self.gens(), rels }
    }

    /// Reduce quotient coordinates modulo the torsion moduli.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.gens());
        v.iter()
            .zip(&self.moduli)
            .map(|(x, m)| if m.is_zero() { x.clone() } else { x.mod_floor(m) })
            .collect()
    }

    pub fn project(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.reduce(&self.projection.mul_vec(v))
    }

    pub fn eq_coords(&self, a: &[BigInt], b: &[BigInt]) -> bool {
        self.reduce(a) == self.reduce(b)
    }

    pub fn is_zero_coords(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn invariants(&self) -> AbInvariants {
        AbInvariants { free_rank: self.free_rank, torsion: self.torsion.clone() }
    }
}

/// Present `Z^ambient / column-span(span)`.
pub fn cokernel(span: &IntMat) -> AbelianPresentation {
    let ambient = span.rows();
    let s = smith_normal_form(span);
    let min = ambient.min(span.cols());
    let diag =
        |i: usize| -> BigInt { if i < min { s.d[(i, i)].clone() } else { BigInt::zero() } };
    // Quotient keeps the coordinates whose divisor is not 1; torsion first
    // preserves the divisibility chain ordering automatically.
    let kept: Vec<usize> = (0..ambient).filter(|&i| !diag(i).is_one()).collect();
    let torsion: Vec<BigInt> =
        kept.iter().map(|&i| diag(i)).filter(|d| !d.is_zero()).collect();
    let free_rank = kept.iter().filter(|&&i| diag(i).is_zero()).count();
    let all_cols: Vec<usize> = (0..ambient).collect();
    let projection = s.u.submatrix(&kept, &all_cols);
    let lift = s.uinv.submatrix(&all_cols, &kept);
    let moduli: Vec<BigInt> = kept.iter().map(|&i| diag(i)).collect();
    AbelianPresentation { free_rank, torsion, projection, lift, moduli, span: span.clone() }
}

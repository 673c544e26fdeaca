//! Exact character tables of small groups.
//!
//! Tables are computed by the Burnside–Dixon method: class-multiplication
//! coefficients give commuting integer matrices whose common eigenvectors
//! over a suitable prime field F_p (p ≡ 1 mod exp(G), p > 2√|G|) are the
//! central characters; degrees and character values are recovered mod p
//! and lifted to exact cyclotomic integers by discrete-log matching of
//! eigenvalue multiplicities. Row and column orthogonality are verified
//! exactly on construction, so a lifting bug cannot produce a table.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupContext};

/// Conjugacy classes of elements with the lookups character calculus needs.
#[derive(Clone)]
pub struct ElementClasses {
    pub classes: Vec<Vec<usize>>,
    pub reps: Vec<usize>,
    pub sizes: Vec<usize>,
    pub class_of: Vec<usize>,
    pub inverse_class: Vec<usize>,
}

impl ElementClasses {
    pub fn build(g: &FiniteGroup) -> Self {
        let classes = g.element_classes();
        let mut class_of = vec![0usize; g.order()];
        for (i, c) in classes.iter().enumerate() {
            for &x in c {
                class_of[x] = i;
            }
        }
        let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
        let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
        let inverse_class = reps.iter().map(|&r| class_of[g.inv(r)]).collect();
        ElementClasses { classes, reps, sizes, class_of, inverse_class }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// A class function with exact cyclotomic values, one per class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    pub values: Vec<Cyclotomic>,
}

#[derive(Clone)]
pub struct CharacterTable {
    pub group: FiniteGroup,
    pub conductor: u64,
    pub classes: ElementClasses,
    pub degrees: Vec<u64>,
    pub irreducibles: Vec<ClassFunction>,
    /// Index of the trivial character.
    pub trivial: usize,
}

// ---------------------------------------------------------------------------
// prime field helpers

#[derive(Copy, Clone)]
struct Fp {
    p: u64,
}

impl Fp {
    fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }
    fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }
    fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }
    fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }
    fn inv(self, a: u64) -> u64 {
        self.pow(a, self.p - 2)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

type FpMat = Vec<Vec<u64>>;

fn fp_matmul(fp: Fp, a: &FpMat, b: &FpMat) -> FpMat {
    let (n, m, k) = (a.len(), b[0].len(), b.len());
    let mut out = vec![vec![0u64; m]; n];
    for (i, arow) in a.iter().enumerate() {
        for l in 0..k {
            if arow[l] == 0 {
                continue;
            }
            for j in 0..m {
                out[i][j] = fp.add(out[i][j], fp.mul(arow[l], b[l][j]));
            }
        }
    }
    out
}

/// Kernel basis (as columns, one Vec each) of a mod-p matrix.
fn fp_kernel(fp: Fp, a: &FpMat) -> Vec<Vec<u64>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m = a.clone();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r >= rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, pr);
        let inv = fp.inv(m[r][c]);
        for j in 0..cols {
            m[r][j] = fp.mul(m[r][j], inv);
        }
        for i in 0..rows {
            if i != r && m[i][c] != 0 {
                let f = m[i][c];
                for j in 0..cols {
                    let t = fp.sub(m[i][j], fp.mul(f, m[r][j]));
                    m[i][j] = t;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; cols];
            v[fc] = 1;
            for &(pr, pc) in &pivots {
                v[pc] = fp.sub(0, m[pr][fc]);
            }
            v
        })
        .collect()
}

/// Solve B·C = M·B for C, where B (n x d, full column rank) spans an
/// M-invariant subspace.
fn fp_restrict(fp: Fp, m: &FpMat, b: &FpMat) -> FpMat {
    let n = b.len();
    let d = b[0].len();
    let mb = fp_matmul(fp, m, b);
    let w = mb[0].len();
    let mut aug: FpMat = (0..n)
        .map(|i| {
            let mut row = b[i].clone();
            row.extend(mb[i].iter().copied());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..d {
        let Some(pr) = (r..n).find(|&i| aug[i][c] != 0) else { continue };
        aug.swap(r, pr);
        let inv = fp.inv(aug[r][c]);
        for j in 0..d + w {
            aug[r][j] = fp.mul(aug[r][j], inv);
        }
        for i in 0..n {
            if i != r && aug[i][c] != 0 {
                let f = aug[i][c];
                for j in 0..d + w {
                    let t = fp.sub(aug[i][j], fp.mul(f, aug[r][j]));
                    aug[i][j] = t;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    assert_eq!(pivots.len(), d, "basis must have full column rank");
    // rows beyond the pivots must be zero, or the subspace was not invariant
    for i in d..n {
        assert!(aug[i][d..].iter().all(|&x| x == 0), "subspace not invariant");
    }
    let mut out = vec![vec![0u64; w]; d];
    for &(pr, pc) in &pivots {
        for j in 0..w {
            out[pc][j] = aug[pr][d + j];
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Dixon's algorithm

pub fn character_table(g: &FiniteGroup) -> CharacterTable {
    let classes = ElementClasses::build(g);
    let k = classes.len();
    let order = g.order() as u64;
    let m = g.exponent() as u64;

    // p ≡ 1 (mod m), p > 2√|G|
    let bound = {
        let mut b = 1u64;
        while b * b <= 4 * order {
            b += 1;
        }
        b
    };
    let mut p = m + 1;
    while !is_prime(p) || p < bound {
        p += m;
    }
    let fp = Fp { p };

    // class multiplication coefficients a[i][j][t]: for a fixed
    // representative z_t, the number of (x, y) ∈ C_i × C_j with xy = z_t
    let mut a = vec![vec![vec![0u64; k]; k]; k];
    for i in 0..k {
        for &x in &classes.classes[i] {
            let xinv = g.inv(x);
            for (t, &z) in classes.reps.iter().enumerate() {
                let y = g.mul(xinv, z);
                a[i][classes.class_of[y]][t] += 1;
            }
        }
    }

    // split the common eigenspaces of the class matrices (M_i)_{j,t} = a_{ijt}
    let mats: Vec<FpMat> = (0..k)
        .map(|i| (0..k).map(|j| (0..k).map(|t| a[i][j][t] % p).collect()).collect())
        .collect();
    let identity_basis: FpMat = (0..k)
        .map(|i| {
            let mut row = vec![0u64; k];
            row[i] = 1;
            row
        })
        .collect();
    let mut subspaces: Vec<FpMat> = vec![identity_basis];
    for mi in &mats {
        if subspaces.iter().all(|b| b[0].len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for b in &subspaces {
            let d = b[0].len();
            if d == 1 {
                next.push(b.clone());
                continue;
            }
            let c = fp_restrict(fp, mi, b);
            let mut found = 0usize;
            let mut lambda = 0u64;
            while found < d {
                assert!(lambda < p, "restriction must split over F_p");
                let shifted: FpMat = (0..d)
                    .map(|r| {
                        (0..d)
                            .map(|cc| if r == cc { fp.sub(c[r][cc], lambda) } else { c[r][cc] })
                            .collect()
                    })
                    .collect();
                let ker = fp_kernel(fp, &shifted);
                if !ker.is_empty() {
                    found += ker.len();
                    let nb: FpMat = (0..k)
                        .map(|r| {
                            ker.iter()
                                .map(|kv| {
                                    let mut acc = 0;
                                    for l in 0..d {
                                        acc = fp.add(acc, fp.mul(b[r][l], kv[l]));
                                    }
                                    acc
                                })
                                .collect()
                        })
                        .collect();
                    next.push(nb);
                }
                lambda += 1;
            }
        }
        subspaces = next;
    }
    assert!(
        subspaces.iter().all(|b| b[0].len() == 1),
        "central characters must separate into one-dimensional common eigenspaces"
    );

    // normalize so the identity-class coordinate is 1: the central character ω
    let id_class = classes.class_of[0];
    let omegas: Vec<Vec<u64>> = subspaces
        .iter()
        .map(|b| {
            let v: Vec<u64> = (0..k).map(|r| b[r][0]).collect();
            let s = fp.inv(v[id_class]);
            v.iter().map(|&x| fp.mul(x, s)).collect()
        })
        .collect();

    // degrees from d² Σ_i ω_i ω_{i*}/|C_i| = |G|, lifted uniquely since p > 2√|G|
    let mut table_mod_p: Vec<(u64, Vec<u64>)> = Vec::new();
    for omega in &omegas {
        let mut s = 0u64;
        for i in 0..k {
            let term = fp.mul(omega[i], omega[classes.inverse_class[i]]);
            s = fp.add(s, fp.mul(term, fp.inv(classes.sizes[i] as u64 % p)));
        }
        let t = fp.mul(order % p, fp.inv(s));
        let mut deg = 0u64;
        let mut d = 1u64;
        while d * d <= order {
            if fp.mul(d % p, d % p) == t {
                deg = d;
                break;
            }
            d += 1;
        }
        assert!(deg > 0, "no integer degree matches mod p");
        let values: Vec<u64> = (0..k)
            .map(|i| fp.mul(fp.mul(deg % p, omega[i]), fp.inv(classes.sizes[i] as u64 % p)))
            .collect();
        table_mod_p.push((deg, values));
    }

    // an element of multiplicative order exactly m in F_p^×
    let z = (1..p)
        .find(|&c| fp.pow(c, m) == 1 && (1..m).all(|e| fp.pow(c, e) != 1))
        .expect("F_p contains an element of order m when p ≡ 1 mod m");

    // lift to cyclotomic values of conductor m via eigenvalue multiplicities
    let mut lifted: Vec<(u64, Vec<Cyclotomic>, Vec<Vec<BigRational>>)> = Vec::new();
    for (deg, vals) in &table_mod_p {
        let mut row = Vec::with_capacity(k);
        for i in 0..k {
            let rep = classes.reps[i];
            let o = g.element_order(rep) as u64;
            let lam = fp.pow(z, m / o);
            let oinv = fp.inv(o % p);
            let mut value = Cyclotomic::zero(m);
            for j in 0..o {
                // multiplicity of the eigenvalue ζ_o^j in a matrix realizing χ at rep
                let mut s = 0u64;
                for l in 0..o {
                    let cls = classes.class_of[g.power(rep, l as i64)];
                    let lam_pow = fp.pow(lam, (j * l) % o);
                    s = fp.add(s, fp.mul(vals[cls], fp.inv(lam_pow)));
                }
                let mult = fp.mul(s, oinv);
                assert!(mult <= *deg, "eigenvalue multiplicity exceeds the degree");
                if mult > 0 {
                    value = value.add(
                        &Cyclotomic::root_power(m, (j * (m / o)) as i64)
                            .scale(&BigRational::from_integer(BigInt::from(mult))),
                    );
                }
            }
            row.push(value);
        }
        let coords: Vec<Vec<BigRational>> = row.iter().map(|v| v.coords().to_vec()).collect();
        lifted.push((*deg, row, coords));
    }
    lifted.sort_by(|x, y| (x.0, &x.2).cmp(&(y.0, &y.2)));

    let degrees: Vec<u64> = lifted.iter().map(|t| t.0).collect();
    let irreducibles: Vec<ClassFunction> =
        lifted.into_iter().map(|t| ClassFunction { values: t.1 }).collect();
    let one = Cyclotomic::one(m);
    let trivial = irreducibles
        .iter()
        .position(|cf| cf.values.iter().all(|v| *v == one))
        .expect("the trivial character must appear");

    let table =
        CharacterTable { group: g.clone(), conductor: m, classes, degrees, irreducibles, trivial };
    table.verify().expect("character table fails exact orthogonality");
    table
}

impl CharacterTable {
    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn value(&self, chi: usize, elem: usize) -> &Cyclotomic {
        &self.irreducibles[chi].values[self.classes.class_of[elem]]
    }

    /// ⟨f, h⟩ = (1/|G|) Σ_g f(g) conj(h(g)), exactly.
    pub fn inner(&self, f: &ClassFunction, h: &ClassFunction) -> Cyclotomic {
        let mut acc = Cyclotomic::zero(self.conductor);
        for i in 0..self.classes.len() {
            let term = f.values[i].mul(&h.values[i].conj());
            acc = acc.add(&term.scale(&BigRational::from_integer(self.classes.sizes[i].into())));
        }
        acc.scale(&BigRational::new(BigInt::one(), BigInt::from(self.group.order())))
    }

    /// Multiplicities of `f` over the irreducibles; errors unless every
    /// inner product is a rational integer.
    pub fn decompose(&self, f: &ClassFunction) -> Result<Vec<BigInt>> {
        let mut mults = Vec::with_capacity(self.len());
        for chi in &self.irreducibles {
            let ip = self.inner(f, chi);
            let Some(r) = ip.as_rational() else {
                return Err(Error::NotVirtualCharacter);
            };
            if !r.is_integer() {
                return Err(Error::NotVirtualCharacter);
            }
            mults.push(r.to_integer());
        }
        Ok(mults)
    }

    pub fn product(&self, f: &ClassFunction, h: &ClassFunction) -> ClassFunction {
        ClassFunction { values: f.values.iter().zip(&h.values).map(|(a, b)| a.mul(b)).collect() }
    }

    pub fn sum_of(&self, mults: &[BigInt]) -> ClassFunction {
        let mut values = vec![Cyclotomic::zero(self.conductor); self.classes.len()];
        for (chi, mult) in self.irreducibles.iter().zip(mults) {
            if mult.is_zero() {
                continue;
            }
            let s = BigRational::from_integer(mult.clone());
            for (v, x) in values.iter_mut().zip(&chi.values) {
                *v = v.add(&x.scale(&s));
            }
        }
        ClassFunction { values }
    }

    fn verify(&self) -> Result<()> {
        let k = self.classes.len();
        let sum: u64 = self.degrees.iter().map(|d| d * d).sum();
        if sum != self.group.order() as u64 {
            return Err(Error::Validation("degree squares do not sum to |G|".into()));
        }
        for i in 0..k {
            for j in 0..k {
                let ip = self.inner(&self.irreducibles[i], &self.irreducibles[j]);
                let want = if i == j {
                    Cyclotomic::one(self.conductor)
                } else {
                    Cyclotomic::zero(self.conductor)
                };
                if ip != want {
                    return Err(Error::Validation(format!(
                        "row orthogonality fails at ({i},{j})"
                    )));
                }
            }
        }
        // column orthogonality: Σ_χ χ(g_i) conj(χ(g_j)) = δ_ij |G|/|C_i|
        for i in 0..k {
            for j in 0..k {
                let mut acc = Cyclotomic::zero(self.conductor);
                for chi in &self.irreducibles {
                    acc = acc.add(&chi.values[i].mul(&chi.values[j].conj()));
                }
                let want = if i == j {
                    Cyclotomic::from_rational(
                        self.conductor,
                        BigRational::new(
                            BigInt::from(self.group.order()),
                            BigInt::from(self.classes.sizes[i]),
                        ),
                    )
                } else {
                    Cyclotomic::zero(self.conductor)
                };
                if acc != want {
                    return Err(Error::Validation(format!(
                        "column orthogonality fails at ({i},{j})"
                    )));
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// character calculus across the subgroup lattice

/// Character tables of every subgroup, with the element bookkeeping for
/// induction, restriction and conjugation in parent coordinates.
pub struct SubgroupCharacters {
    pub ctx: Arc<GroupContext>,
    pub tables: Vec<LocalTable>,
}

pub struct LocalTable {
    pub sub: usize,
    pub local: FiniteGroup,
    pub to_parent: Vec<usize>,
    from_parent: BTreeMap<usize, usize>,
    pub table: CharacterTable,
}

impl LocalTable {
    pub fn contains_parent(&self, parent_elem: usize) -> bool {
        self.from_parent.contains_key(&parent_elem)
    }

    pub fn local_of(&self, parent_elem: usize) -> usize {
        self.from_parent[&parent_elem]
    }

    /// Class representatives as parent elements.
    pub fn parent_reps(&self) -> Vec<usize> {
        self.table.classes.reps.iter().map(|&r| self.to_parent[r]).collect()
    }
}

impl SubgroupCharacters {
    pub fn build(ctx: Arc<GroupContext>) -> Self {
        let mut tables = Vec::with_capacity(ctx.lattice.len());
        for sub in 0..ctx.lattice.len() {
            let elems = ctx.lattice.elements(sub);
            let label = format!("{}#{}", ctx.group.label(), sub);
            let (local, to_parent) = ctx.group.subgroup_group(&label, elems);
            let from_parent = to_parent.iter().enumerate().map(|(i, &p)| (p, i)).collect();
            let table = character_table(&local);
            tables.push(LocalTable { sub, local, to_parent, from_parent, table });
        }
        SubgroupCharacters { ctx, tables }
    }

    /// Frobenius induction of a K-class function to H (K ≤ H), by the
    /// coset sum (ind ψ)(h) = Σ_{xK ⊆ H, x⁻¹hx ∈ K} ψ(x⁻¹hx).
    pub fn induce(&self, h: usize, k: usize, psi: &ClassFunction) -> ClassFunction {
        let g = &self.ctx.group;
        let ht = &self.tables[h];
        let kt = &self.tables[k];
        let mut seen: BTreeMap<usize, ()> = BTreeMap::new();
        let mut reps = Vec::new();
        for &x in &ht.to_parent {
            if seen.contains_key(&x) {
                continue;
            }
            reps.push(x);
            for &ke in &kt.to_parent {
                seen.insert(g.mul(x, ke), ());
            }
        }
        let values = ht
            .parent_reps()
            .iter()
            .map(|&hrep| {
                let mut acc = Cyclotomic::zero(kt.table.conductor);
                for &x in &reps {
                    let t = g.mul(g.mul(g.inv(x), hrep), x);
                    if kt.contains_parent(t) {
                        let cls = kt.table.classes.class_of[kt.local_of(t)];
                        acc = acc.add(&psi.values[cls]);
                    }
                }
                acc
            })
            .collect();
        ClassFunction { values }
    }

    /// Restriction of an H-class function to K ≤ H.
    pub fn restrict(&self, h: usize, k: usize, chi: &ClassFunction) -> ClassFunction {
        let ht = &self.tables[h];
        let kt = &self.tables[k];
        let values = kt
            .parent_reps()
            .iter()
            .map(|&krep| chi.values[ht.table.classes.class_of[ht.local_of(krep)]].clone())
            .collect();
        ClassFunction { values }
    }

    /// Conjugate of an H-class function: a class function on ᵍH with
    /// (ᵍχ)(y) = χ(g⁻¹yg).
    pub fn conjugate(&self, g_elem: usize, h: usize, chi: &ClassFunction) -> ClassFunction {
        let g = &self.ctx.group;
        let gh = self.ctx.conj_subgroup(g_elem, h);
        let ht = &self.tables[h];
        let ght = &self.tables[gh];
        let ginv = g.inv(g_elem);
        let values = ght
            .parent_reps()
            .iter()
            .map(|&y| {
                let t = g.mul(g.mul(ginv, y), g_elem);
                chi.values[ht.table.classes.class_of[ht.local_of(t)]].clone()
            })
            .collect();
        ClassFunction { values }
    }

    pub fn irreducible(&self, h: usize, chi: usize) -> ClassFunction {
        self.tables[h].table.irreducibles[chi].clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, DEFAULT_SIZE_LIMIT};
    use num_traits::ToPrimitive;

    fn table_for(spec: &str) -> CharacterTable {
        character_table(&build_group(spec, DEFAULT_SIZE_LIMIT).unwrap())
    }

    #[test]
    fn degrees_spec_examples() {
        assert_eq!(table_for("S3").degrees, vec![1, 1, 2]);
        assert_eq!(table_for("Q8").degrees, vec![1, 1, 1, 1, 2]);
        assert_eq!(table_for("C2").degrees, vec![1, 1]);
        assert_eq!(table_for("A4").degrees, vec![1, 1, 1, 3]);
        assert_eq!(table_for("D4").degrees, vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn c2_values() {
        let t = table_for("C2");
        let vals: Vec<Vec<i64>> = t
            .irreducibles
            .iter()
            .map(|cf| {
                cf.values
                    .iter()
                    .map(|v| v.as_rational().unwrap().to_integer().to_i64().unwrap())
                    .collect()
            })
            .collect();
        assert!(vals.contains(&vec![1, 1]));
        assert!(vals.contains(&vec![1, -1]));
    }

    /// Independent oracle: bounded search over exact cyclotomic values.
    /// A degree-d value at an element of order o is a sum of exactly d
    /// o-th roots of unity, so for small groups every candidate row can
    /// be enumerated. A candidate χ with χ(e) = d is an irreducible
    /// character iff ⟨χ, χ⟩ = 1 and its normalization
    /// ω_i = |C_i| χ(g_i) / d is a central character, i.e. satisfies
    /// ω_i ω_j = Σ_t a_{ijt} ω_t for the class-multiplication constants.
    mod oracle {
        use super::*;

        fn compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
            if parts == 1 {
                return vec![vec![total]];
            }
            let mut out = Vec::new();
            for first in 0..=total {
                for mut rest in compositions(total - first, parts - 1) {
                    let mut v = vec![first];
                    v.append(&mut rest);
                    out.push(v);
                }
            }
            out
        }

        pub fn brute_force_table(g: &FiniteGroup) -> Vec<Vec<Cyclotomic>> {
            assert!(g.order() <= 12);
            let classes = ElementClasses::build(g);
            let m = g.exponent() as u64;
            let k = classes.len();
            let orders: Vec<u64> =
                classes.reps.iter().map(|&r| g.element_order(r) as u64).collect();
            // class multiplication constants
            let mut a = vec![vec![vec![0i64; k]; k]; k];
            for i in 0..k {
                for &x in &classes.classes[i] {
                    let xinv = g.inv(x);
                    for (t, &z) in classes.reps.iter().enumerate() {
                        a[i][classes.class_of[g.mul(xinv, z)]][t] += 1;
                    }
                }
            }
            let inner = |f: &[Cyclotomic], h: &[Cyclotomic]| -> Cyclotomic {
                let mut acc = Cyclotomic::zero(m);
                for i in 0..k {
                    acc = acc.add(
                        &f[i]
                            .mul(&h[i].conj())
                            .scale(&BigRational::from_integer(classes.sizes[i].into())),
                    );
                }
                acc.scale(&BigRational::new(BigInt::one(), BigInt::from(g.order())))
            };
            let is_central_character = |chi: &[Cyclotomic], d: u64| -> bool {
                let omega: Vec<Cyclotomic> = (0..k)
                    .map(|i| {
                        chi[i].scale(&BigRational::new(
                            BigInt::from(classes.sizes[i]),
                            BigInt::from(d),
                        ))
                    })
                    .collect();
                for i in 0..k {
                    for j in 0..=i {
                        let mut rhs = Cyclotomic::zero(m);
                        for t in 0..k {
                            if a[i][j][t] != 0 {
                                rhs = rhs.add(
                                    &omega[t]
                                        .scale(&BigRational::from_integer(a[i][j][t].into())),
                                );
                            }
                        }
                        if omega[i].mul(&omega[j]) != rhs {
                            return false;
                        }
                    }
                }
                true
            };
            let mut found: Vec<Vec<Cyclotomic>> = Vec::new();
            let mut degree_sum = 0u64;
            let mut d = 1u64;
            while degree_sum < g.order() as u64 {
                let per_class: Vec<Vec<Cyclotomic>> = (0..k)
                    .map(|i| {
                        if classes.reps[i] == 0 {
                            return vec![Cyclotomic::from_rational(
                                m,
                                BigRational::from_integer(BigInt::from(d)),
                            )];
                        }
                        let o = orders[i];
                        let mut vals: Vec<Cyclotomic> = compositions(d, o as usize)
                            .into_iter()
                            .map(|comp| {
                                let mut acc = Cyclotomic::zero(m);
                                for (j, mult) in comp.iter().enumerate() {
                                    if *mult > 0 {
                                        acc = acc.add(
                                            &Cyclotomic::root_power(
                                                m,
                                                (j as u64 * (m / o)) as i64,
                                            )
                                            .scale(
                                                &BigRational::from_integer(BigInt::from(*mult)),
                                            ),
                                        );
                                    }
                                }
                                acc
                            })
                            .collect();
                        vals.sort_by(|a, b| a.coords().cmp(b.coords()));
                        vals.dedup();
                        vals
                    })
                    .collect();
                let mut stack: Vec<Vec<Cyclotomic>> = vec![Vec::new()];
                while let Some(partial) = stack.pop() {
                    if partial.len() == k {
                        if inner(&partial, &partial) != Cyclotomic::one(m) {
                            continue;
                        }
                        if is_central_character(&partial, d) && !found.contains(&partial) {
                            degree_sum += d * d;
                            found.push(partial);
                        }
                        continue;
                    }
                    for v in per_class[partial.len()].iter().rev() {
                        let mut nxt = partial.clone();
                        nxt.push(v.clone());
                        stack.push(nxt);
                    }
                }
                d += 1;
                assert!(d <= 4, "oracle search ran away");
            }
            assert_eq!(degree_sum, g.order() as u64);
            found
        }
    }

    #[test]
    fn dixon_matches_brute_force_oracle() {
        for spec in ["C1", "C2", "C3", "C4", "C6", "S3", "D4", "Q8", "A4"] {
            let g = build_group(spec, DEFAULT_SIZE_LIMIT).unwrap();
            let t = character_table(&g);
            let mut dixon: Vec<Vec<Vec<BigRational>>> = t
                .irreducibles
                .iter()
                .map(|cf| cf.values.iter().map(|v| v.coords().to_vec()).collect())
                .collect();
            let mut brute: Vec<Vec<Vec<BigRational>>> = oracle::brute_force_table(&g)
                .iter()
                .map(|row| row.iter().map(|v| v.coords().to_vec()).collect())
                .collect();
            dixon.sort();
            brute.sort();
            assert_eq!(dixon, brute, "{spec}");
        }
    }

    #[test]
    fn induction_spec_examples() {
        let ctx = GroupContext::for_spec("S3", DEFAULT_SIZE_LIMIT).unwrap();
        let sc = SubgroupCharacters::build(Arc::clone(&ctx));
        let top = ctx.lattice.top();
        let c2 = (0..ctx.lattice.len()).find(|&i| ctx.lattice.order_of(i) == 2).unwrap();
        let triv_c2 = sc.tables[c2].table.trivial;
        let ind = sc.induce(top, c2, &sc.irreducible(c2, triv_c2));
        // identify expected values (3, 1, 0) by class size and element order
        let t = &sc.tables[top].table;
        for (i, v) in ind.values.iter().enumerate() {
            let size = t.classes.sizes[i];
            let rep_order = ctx.group.element_order(t.classes.reps[i]);
            let expected: i64 = match (size, rep_order) {
                (1, 1) => 3,
                (3, 2) => 1,
                (2, 3) => 0,
                _ => unreachable!(),
            };
            assert_eq!(v.as_rational().unwrap(), BigRational::from_integer(expected.into()));
        }
        // decomposes as trivial + 2-dim
        let mults = t.decompose(&ind).unwrap();
        let degrees_hit: Vec<u64> = mults
            .iter()
            .enumerate()
            .filter(|(_, m)| !m.is_zero())
            .map(|(i, _)| t.degrees[i])
            .collect();
        assert_eq!(degrees_hit, vec![1, 2]);

        // induce from G to G is the identity
        let chi = sc.irreducible(top, 2);
        assert_eq!(sc.induce(top, top, &chi), chi);

        // regular character of C2 from the trivial subgroup
        let ctx2 = GroupContext::for_spec("C2", DEFAULT_SIZE_LIMIT).unwrap();
        let sc2 = SubgroupCharacters::build(Arc::clone(&ctx2));
        let ind = sc2.induce(ctx2.lattice.top(), 0, &sc2.irreducible(0, 0));
        let as_ints: Vec<BigRational> =
            ind.values.iter().map(|v| v.as_rational().unwrap()).collect();
        assert_eq!(
            as_ints,
            vec![BigRational::from_integer(2.into()), BigRational::from_integer(0.into())]
        );
    }

    #[test]
    fn product_decomposition_s3() {
        let t = table_for("S3");
        let two = t.degrees.iter().position(|&d| d == 2).unwrap();
        let chi = &t.irreducibles[two];
        let prod = t.product(chi, chi);
        let mults = t.decompose(&prod).unwrap();
        assert_eq!(mults, vec![BigInt::one(), BigInt::one(), BigInt::one()]);
        let m = t.decompose(chi).unwrap();
        assert_eq!(m.iter().filter(|x| !x.is_zero()).count(), 1);
        let zero =
            ClassFunction { values: vec![Cyclotomic::zero(t.conductor); t.classes.len()] };
        assert!(t.decompose(&zero).unwrap().iter().all(Zero::is_zero));
        // a non-virtual class function is rejected
        let half = ClassFunction {
            values: (0..t.classes.len())
                .map(|_| {
                    Cyclotomic::from_rational(t.conductor, BigRational::new(1.into(), 2.into()))
                })
                .collect(),
        };
        assert!(t.decompose(&half).is_err());
    }

    #[test]
    fn frobenius_reciprocity_on_catalog() {
        for spec in ["C4", "S3", "D4", "Q8"] {
            let ctx = GroupContext::for_spec(spec, DEFAULT_SIZE_LIMIT).unwrap();
            let sc = SubgroupCharacters::build(Arc::clone(&ctx));
            for h in 0..ctx.lattice.len() {
                for k in ctx.lattice.subgroups_of(h) {
                    let ht = &sc.tables[h].table;
                    let kt = &sc.tables[k].table;
                    for i in 0..kt.len() {
                        let ind = sc.induce(h, k, &kt.irreducibles[i]);
                        for j in 0..ht.len() {
                            let res = sc.restrict(h, k, &ht.irreducibles[j]);
                            let lhs = ht.inner(&ind, &ht.irreducibles[j]);
                            let rhs = kt.inner(&kt.irreducibles[i], &res);
                            assert_eq!(lhs, rhs, "{spec} H={h} K={k}");
                        }
                    }
                }
            }
        }
    }
}

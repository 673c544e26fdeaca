//! Finite groups as explicit multiplication tables, plus the small
//! catalog and permutation-generator input the command line accepts.
//!
//! Elements are indices `0..order` with the identity at index 0.
//! Everything downstream (subgroup lattices, coset spaces, double
//! cosets, Weyl groups) works from these tables.

pub mod gsets;
pub mod lattice;

pub use gsets::{CosetSpace, DoubleCoset, FixedPointSet};
pub use lattice::{GroupContext, Subgroup, SubgroupLattice, WeylGroup};

use std::collections::BTreeMap;

use crate::error::{Error, Result};

pub const DEFAULT_SIZE_LIMIT: usize = 48;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mult: Vec<usize>,
    inv: Vec<usize>,
    label: String,
}

impl FiniteGroup {
    pub fn from_mult_table(label: &str, order: usize, mult: Vec<usize>) -> Result<Self> {
        assert_eq!(mult.len(), order * order);
        let mut inv = vec![usize::MAX; order];
        for a in 0..order {
            for b in 0..order {
                if mult[a * order + b] == 0 {
                    inv[a] = b;
                }
            }
        }
        let g = FiniteGroup { order, mult, inv, label: label.to_string() };
        g.validate()?;
        Ok(g)
    }

    /// Check associativity and the identity/inverse tables.
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::Validation(format!("identity law fails at element {a}")));
            }
            let i = self.inv[a];
            if i >= n || self.mul(a, i) != 0 || self.mul(i, a) != 0 {
                return Err(Error::Validation(format!("inverse table wrong at element {a}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::Validation(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// g a g^{-1}
    #[inline]
    pub fn conj(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv[g])
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut o = 1;
        while x != 0 {
            x = self.mul(x, a);
            o += 1;
        }
        o
    }

    pub fn exponent(&self) -> usize {
        (0..self.order).map(|a| self.element_order(a)).fold(1, num_integer::lcm)
    }

    pub fn power(&self, a: usize, e: i64) -> usize {
        let o = self.element_order(a) as i64;
        let mut e = e.rem_euclid(o) as usize;
        let mut acc = 0;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Conjugacy classes of elements, each sorted, ordered by smallest member.
    pub fn element_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for a in 0..self.order {
            if seen[a] {
                continue;
            }
            let mut class: Vec<usize> = (0..self.order).map(|g| self.conj(g, a)).collect();
            class.sort_unstable();
            class.dedup();
            for &x in &class {
                seen[x] = true;
            }
            classes.push(class);
        }
        classes
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The group structure on a subset closed under multiplication,
    /// together with the element map back into this group.
    pub fn subgroup_group(&self, label: &str, elements: &[usize]) -> (FiniteGroup, Vec<usize>) {
        let to_parent = elements.to_vec();
        debug_assert_eq!(to_parent[0], 0, "subgroups contain the identity first");
        let mut from_parent = BTreeMap::new();
        for (i, &e) in to_parent.iter().enumerate() {
            from_parent.insert(e, i);
        }
        let n = to_parent.len();
        let mut mult = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                mult[i * n + j] = from_parent[&self.mul(to_parent[i], to_parent[j])];
            }
        }
        let inv = (0..n).map(|i| from_parent[&self.inv[to_parent[i]]]).collect();
        (FiniteGroup { order: n, mult, inv, label: label.to_string() }, to_parent)
    }
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.label, self.order)
    }
}

/// A permutation as the list of images of `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        // (self ∘ other)(x) = self(other(x))
        Perm(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
        let mut p: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cyc in cycles {
            for &x in cyc {
                if x >= n {
                    return Err(Error::GroupSpec(format!("point {} out of range", x + 1)));
                }
                if touched[x] {
                    return Err(Error::GroupSpec(format!("point {} repeated in cycles", x + 1)));
                }
                touched[x] = true;
            }
            for i in 0..cyc.len() {
                p[cyc[i]] = cyc[(i + 1) % cyc.len()];
            }
        }
        Ok(Perm(p))
    }
}

/// Closure of permutation generators, identity first, breadth first.
pub fn group_from_permutations(
    label: &str,
    gens: &[Perm],
    limit: usize,
) -> Result<FiniteGroup> {
    let n = gens.first().map_or(1, |p| p.0.len());
    if gens.iter().any(|p| p.0.len() != n) {
        return Err(Error::GroupSpec("generators act on sets of different sizes".into()));
    }
    let mut elements = vec![Perm::identity(n)];
    let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    index.insert(elements[0].0.clone(), 0);
    let mut frontier = 0;
    while frontier < elements.len() {
        let cur = elements[frontier].clone();
        for g in gens {
            let next = g.compose(&cur);
            if !index.contains_key(&next.0) {
                if elements.len() >= limit {
                    return Err(Error::SizeLimit { order: elements.len() + 1, limit });
                }
                index.insert(next.0.clone(), elements.len());
                elements.push(next);
            }
        }
        frontier += 1;
    }
    let order = elements.len();
    let mut mult = vec![0usize; order * order];
    for a in 0..order {
        for b in 0..order {
            mult[a * order + b] = index[&elements[a].compose(&elements[b]).0];
        }
    }
    let mut inv = vec![0usize; order];
    for a in 0..order {
        inv[a] = (0..order).find(|&b| mult[a * order + b] == 0).unwrap();
    }
    Ok(FiniteGroup { order, mult, inv, label: label.to_string() })
}

pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let mult = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    let inv = (0..n).map(|a| (n - a) % n).collect();
    FiniteGroup { order: n, mult, inv, label: format!("C{n}") }
}

/// Dihedral group of order 2n; elements r^i s^j indexed as i + n*j.
pub fn dihedral(n: usize) -> FiniteGroup {
    assert!(n >= 1);
    let order = 2 * n;
    let mut mult = vec![0usize; order * order];
    for i1 in 0..n {
        for j1 in 0..2 {
            for i2 in 0..n {
                for j2 in 0..2 {
                    let i = if j1 == 0 { (i1 + i2) % n } else { (i1 + n - i2) % n };
                    let j = (j1 + j2) % 2;
                    mult[(i1 + n * j1) * order + (i2 + n * j2)] = i + n * j;
                }
            }
        }
    }
    let mut inv = vec![0usize; order];
    for a in 0..order {
        inv[a] = (0..order).find(|&b| mult[a * order + b] == 0).unwrap();
    }
    FiniteGroup { order, mult, inv, label: format!("D{n}") }
}

pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    if n == 0 || n > 4 {
        return Err(Error::GroupSpec("S_n is supported for 1 <= n <= 4".into()));
    }
    if n == 1 {
        return Ok(cyclic(1));
    }
    let transposition = Perm::from_cycles(n, &[vec![0, 1]])?;
    let cycle = Perm::from_cycles(n, &[(0..n).collect()])?;
    group_from_permutations(&format!("S{n}"), &[transposition, cycle], DEFAULT_SIZE_LIMIT)
}

pub fn alternating4() -> FiniteGroup {
    let a = Perm::from_cycles(4, &[vec![0, 1, 2]]).unwrap();
    let b = Perm::from_cycles(4, &[vec![1, 2, 3]]).unwrap();
    group_from_permutations("A4", &[a, b], DEFAULT_SIZE_LIMIT).unwrap()
}

pub fn quaternion8() -> FiniteGroup {
    // units 1, -1, i, -i, j, -j, k, -k as (axis, sign): index = 2*axis + sign
    let axis_mul = |a: usize, b: usize| -> (usize, bool) {
        // axes: 0 = e, 1 = i, 2 = j, 3 = k; returns (axis, negate)
        match (a, b) {
            (0, x) => (x, false),
            (x, 0) => (x, false),
            (1, 1) | (2, 2) | (3, 3) => (0, true),
            (1, 2) => (3, false),
            (2, 1) => (3, true),
            (2, 3) => (1, false),
            (3, 2) => (1, true),
            (3, 1) => (2, false),
            (1, 3) => (2, true),
            _ => unreachable!(),
        }
    };
    let order = 8;
    let mut mult = vec![0usize; order * order];
    for a in 0..order {
        for b in 0..order {
            let (ax, sa) = (a / 2, a % 2 == 1);
            let (bx, sb) = (b / 2, b % 2 == 1);
            let (cx, neg) = axis_mul(ax, bx);
            let sc = (sa ^ sb) ^ neg;
            mult[a * order + b] = 2 * cx + usize::from(sc);
        }
    }
    let mut inv = vec![0usize; order];
    for a in 0..order {
        inv[a] = (0..order).find(|&b| mult[a * order + b] == 0).unwrap();
    }
    FiniteGroup { order, mult, inv, label: "Q8".to_string() }
}

/// Parse a group spec: a catalog token (`C6`, `D4`, `S3`, `Q8`, `A4`)
/// or permutation generators in 1-indexed cycle notation, e.g.
/// `perm: (1 2)(3 4); (1 2 3)`.
pub fn build_group(spec: &str, limit: usize) -> Result<FiniteGroup> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("perm:") {
        return build_from_perm_spec(rest, limit);
    }
    let (head, tail) = spec.split_at(1.min(spec.len()));
    let parse_n = |tail: &str| -> Result<usize> {
        tail.parse::<usize>().map_err(|_| Error::GroupSpec(format!("bad catalog token `{spec}`")))
    };
    let g = match head {
        "C" | "c" => {
            let n = parse_n(tail)?;
            if n < 1 {
                return Err(Error::GroupSpec("C_n needs n >= 1".into()));
            }
            cyclic(n)
        }
        "D" | "d" => {
            let n = parse_n(tail)?;
            if n < 1 {
                return Err(Error::GroupSpec("D_n needs n >= 1".into()));
            }
            dihedral(n)
        }
        "S" | "s" => symmetric(parse_n(tail)?)?,
        "Q" | "q" if tail == "8" => quaternion8(),
        "A" | "a" if tail == "4" => alternating4(),
        _ => return Err(Error::GroupSpec(format!("unknown catalog token `{spec}`"))),
    };
    if g.order() > limit {
        return Err(Error::SizeLimit { order: g.order(), limit });
    }
    Ok(g)
}

fn build_from_perm_spec(body: &str, limit: usize) -> Result<FiniteGroup> {
    let mut gens_cycles: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut max_point = 0usize;
    for gen_txt in body.split(';') {
        let gen_txt = gen_txt.trim();
        if gen_txt.is_empty() {
            continue;
        }
        let mut cycles = Vec::new();
        let mut rest = gen_txt;
        while let Some(open) = rest.find('(') {
            let close = rest[open..]
                .find(')')
                .ok_or_else(|| Error::GroupSpec("unbalanced parentheses".into()))?
                + open;
            let inner = &rest[open + 1..close];
            let cycle: Vec<usize> = inner
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::GroupSpec(format!("bad point `{t}`")))
                        .and_then(|x| {
                            if x == 0 {
                                Err(Error::GroupSpec("points are 1-indexed".into()))
                            } else {
                                Ok(x - 1)
                            }
                        })
                })
                .collect::<Result<_>>()?;
            if cycle.is_empty() {
                return Err(Error::GroupSpec("empty cycle".into()));
            }
            max_point = max_point.max(*cycle.iter().max().unwrap() + 1);
            cycles.push(cycle);
            rest = &rest[close + 1..];
        }
        if !rest.trim().is_empty() {
            return Err(Error::GroupSpec(format!("unexpected text `{}`", rest.trim())));
        }
        if cycles.is_empty() {
            return Err(Error::GroupSpec("generator without cycles".into()));
        }
        gens_cycles.push(cycles);
    }
    if gens_cycles.is_empty() {
        return Err(Error::GroupSpec("no generators given".into()));
    }
    let gens: Vec<Perm> = gens_cycles
        .iter()
        .map(|cycles| Perm::from_cycles(max_point, cycles))
        .collect::<Result<_>>()?;
    group_from_permutations("perm-group", &gens, limit)
}

/// Multiplication tables equal up to a relabeling fixing the identity.
/// Backtracking search; intended for the small orders used in tests.
pub fn isomorphic_tables(a: &FiniteGroup, b: &FiniteGroup) -> bool {
    if a.order != b.order {
        return false;
    }
    let n = a.order;
    // order-profile pruning
    let mut prof_a: Vec<usize> = (0..n).map(|x| a.element_order(x)).collect();
    let mut prof_b: Vec<usize> = (0..n).map(|x| b.element_order(x)).collect();
    let orders_a = prof_a.clone();
    let orders_b = prof_b.clone();
    prof_a.sort_unstable();
    prof_b.sort_unstable();
    if prof_a != prof_b {
        return false;
    }

    // Assign images of 0..n in order; after assigning `next`, every
    // product of two assigned elements whose result is assigned must be
    // respected, and products landing on unassigned elements must not
    // collide with an already-used image.
    fn consistent(a: &FiniteGroup, b: &FiniteGroup, map: &[usize], next: usize) -> bool {
        for x in 0..=next {
            for (p, q) in [
                (a.mul(x, next), b.mul(map[x], map[next])),
                (a.mul(next, x), b.mul(map[next], map[x])),
            ] {
                if p <= next {
                    if map[p] != q {
                        return false;
                    }
                } else if let Some(pre) = map[..=next].iter().position(|&y| y == q) {
                    if pre != p {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn extend(
        a: &FiniteGroup,
        b: &FiniteGroup,
        orders_a: &[usize],
        orders_b: &[usize],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        next: usize,
    ) -> bool {
        let n = a.order;
        if next == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] || orders_b[cand] != orders_a[next] {
                continue;
            }
            map[next] = cand;
            used[cand] = true;
            if consistent(a, b, map, next) && extend(a, b, orders_a, orders_b, map, used, next + 1)
            {
                return true;
            }
            used[cand] = false;
        }
        false
    }

    let mut map = vec![0usize; n];
    let mut used = vec![false; n];
    used[0] = true;
    extend(a, b, &orders_a, &orders_b, &mut map, &mut used, 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_builds_and_validates() {
        for spec in ["C1", "C2", "C3", "C4", "C6", "S3", "D4", "Q8", "A4"] {
            let g = build_group(spec, DEFAULT_SIZE_LIMIT).unwrap();
            g.validate().unwrap();
            let expected = match spec {
                "C1" => 1,
                "C2" => 2,
                "C3" => 3,
                "C4" => 4,
                "C6" => 6,
                "S3" => 6,
                "D4" => 8,
                "Q8" => 8,
                "A4" => 12,
                _ => unreachable!(),
            };
            assert_eq!(g.order(), expected, "{spec}");
        }
        assert_eq!(build_group("C1", 48).unwrap().order(), 1);
        assert!(build_group("NOPE", 48).is_err());
        assert!(build_group("C100", 48).is_err());
    }

    #[test]
    fn perm_spec_matches_catalog_s3() {
        let g = build_group("perm: (1 2); (1 2 3)", 48).unwrap();
        assert_eq!(g.order(), 6);
        let s3 = build_group("S3", 48).unwrap();
        assert!(isomorphic_tables(&g, &s3));
        let c6 = build_group("C6", 48).unwrap();
        assert!(!isomorphic_tables(&g, &c6));
    }

    #[test]
    fn perm_spec_errors() {
        assert!(build_group("perm: (1 2", 48).is_err());
        assert!(build_group("perm: (0 1)", 48).is_err());
        assert!(build_group("perm: (1 1 2)", 48).is_err());
        assert!(build_group("perm:", 48).is_err());
        // closure exceeding the size limit
        assert!(matches!(
            build_group("perm: (1 2); (1 2 3 4 5 6 7 8)", 24),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn q8_structure() {
        let q8 = quaternion8();
        q8.validate().unwrap();
        assert_eq!(q8.exponent(), 4);
        let orders: Vec<usize> = (0..8).map(|a| q8.element_order(a)).collect();
        assert_eq!(orders.iter().filter(|&&o| o == 4).count(), 6);
        assert_eq!(orders.iter().filter(|&&o| o == 2).count(), 1);
        assert_eq!(q8.element_classes().len(), 5);
    }

    #[test]
    fn element_classes_s3() {
        let s3 = symmetric(3).unwrap();
        let classes = s3.element_classes();
        let mut sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(s3.exponent(), 6);
        assert!(!s3.is_abelian());
        assert!(cyclic(6).is_abelian());
    }
}

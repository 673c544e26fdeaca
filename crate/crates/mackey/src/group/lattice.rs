//! Complete subgroup lattices of small groups: containment, conjugacy
//! classes, normalizers, Weyl groups.
//!
//! Enumeration is by closing the set of cyclic subgroups under pairwise
//! joins until a fixpoint, which yields every subgroup. Subgroups are
//! sorted by (order, elements) so ids are deterministic; the trivial
//! subgroup is id 0 and the whole group is the last id.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::FiniteGroup;

#[derive(Clone, Debug)]
pub struct Subgroup {
    pub id: usize,
    /// Sorted element indices; always starts with the identity 0.
    pub elements: Vec<usize>,
}

#[derive(Clone)]
pub struct SubgroupLattice {
    pub subgroups: Vec<Subgroup>,
    contains: Vec<Vec<bool>>,
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    pub normalizer: Vec<usize>,
    index: BTreeMap<Vec<usize>, usize>,
}

fn closure(g: &FiniteGroup, seed: &[usize]) -> Vec<usize> {
    let mut in_set = vec![false; g.order()];
    let mut elems = vec![0usize];
    in_set[0] = true;
    for &s in seed {
        if !in_set[s] {
            in_set[s] = true;
            elems.push(s);
        }
    }
    let mut frontier = 0;
    while frontier < elems.len() {
        let a = elems[frontier];
        frontier += 1;
        for i in 0..elems.len() {
            let b = elems[i];
            for p in [g.mul(a, b), g.mul(b, a), g.inv(a)] {
                if !in_set[p] {
                    in_set[p] = true;
                    elems.push(p);
                }
            }
        }
    }
    elems.sort_unstable();
    elems
}

impl SubgroupLattice {
    pub fn build(g: &FiniteGroup) -> Self {
        let n = g.order();
        let mut sets: BTreeMap<Vec<usize>, ()> = BTreeMap::new();
        // all cyclic subgroups
        for a in 0..n {
            sets.insert(closure(g, &[a]), ());
        }
        // close under pairwise joins
        loop {
            let current: Vec<Vec<usize>> = sets.keys().cloned().collect();
            let before = sets.len();
            for i in 0..current.len() {
                for j in 0..i {
                    let mut seed = current[i].clone();
                    seed.extend_from_slice(&current[j]);
                    let join = closure(g, &seed);
                    sets.entry(join).or_insert(());
                }
            }
            if sets.len() == before {
                break;
            }
        }
        let mut all: Vec<Vec<usize>> = sets.into_keys().collect();
        all.sort_by(|a, b| (a.len(), a.clone()).cmp(&(b.len(), b.clone())));
        let subgroups: Vec<Subgroup> =
            all.into_iter().enumerate().map(|(id, elements)| Subgroup { id, elements }).collect();
        let index: BTreeMap<Vec<usize>, usize> =
            subgroups.iter().map(|s| (s.elements.clone(), s.id)).collect();
        let k = subgroups.len();

        // Lagrange sanity
        for s in &subgroups {
            assert_eq!(n % s.elements.len(), 0, "subgroup order must divide the group order");
        }

        let contains: Vec<Vec<bool>> = (0..k)
            .map(|h| {
                (0..k)
                    .map(|s| subgroups[s].elements.iter().all(|e| {
                        subgroups[h].elements.binary_search(e).is_ok()
                    }))
                    .collect()
            })
            .collect();

        // conjugacy classes of subgroups
        let conj_of = |gel: usize, id: usize| -> usize {
            let mut e: Vec<usize> =
                subgroups[id].elements.iter().map(|&x| g.conj(gel, x)).collect();
            e.sort_unstable();
            index[&e]
        };
        let mut class_of = vec![usize::MAX; k];
        let mut classes = Vec::new();
        for id in 0..k {
            if class_of[id] != usize::MAX {
                continue;
            }
            let mut orbit: Vec<usize> = (0..n).map(|gel| conj_of(gel, id)).collect();
            orbit.sort_unstable();
            orbit.dedup();
            let c = classes.len();
            for &m in &orbit {
                class_of[m] = c;
            }
            classes.push(orbit);
        }

        let normalizer = (0..k)
            .map(|id| {
                let elems: Vec<usize> = (0..n).filter(|&gel| conj_of(gel, id) == id).collect();
                index[&elems]
            })
            .collect();

        SubgroupLattice { subgroups, contains, classes, class_of, normalizer, index }
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn top(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn order_of(&self, id: usize) -> usize {
        self.subgroups[id].elements.len()
    }

    pub fn elements(&self, id: usize) -> &[usize] {
        &self.subgroups[id].elements
    }

    pub fn contains(&self, h: usize, k: usize) -> bool {
        self.contains[h][k]
    }

    pub fn id_of(&self, elements: &[usize]) -> Option<usize> {
        let mut e = elements.to_vec();
        e.sort_unstable();
        e.dedup();
        self.index.get(&e).copied()
    }

    /// Ids of subgroups contained in `h`, ascending.
    pub fn subgroups_of(&self, h: usize) -> Vec<usize> {
        (0..self.len()).filter(|&s| self.contains[h][s]).collect()
    }

    pub fn proper_subgroups_of(&self, h: usize) -> Vec<usize> {
        self.subgroups_of(h).into_iter().filter(|&s| s != h).collect()
    }

    /// One representative per conjugacy class (the smallest id).
    pub fn class_reps(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }
}

/// The Weyl group N_G(H)/H with a chosen section of coset
/// representatives (smallest element of each coset; the identity coset
/// is index 0).
#[derive(Clone)]
pub struct WeylGroup {
    pub h: usize,
    pub group: FiniteGroup,
    pub section: Vec<usize>,
    coset_of: BTreeMap<usize, usize>,
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Quotient element of a normalizer element.
    pub fn class_of(&self, n_elem: usize) -> usize {
        self.coset_of[&n_elem]
    }
}

/// A finite group together with its subgroup lattice; the shared
/// context every Mackey-level structure references.
pub struct GroupContext {
    pub group: FiniteGroup,
    pub lattice: SubgroupLattice,
}

impl GroupContext {
    pub fn new(group: FiniteGroup) -> Arc<Self> {
        let lattice = SubgroupLattice::build(&group);
        Arc::new(GroupContext { group, lattice })
    }

    pub fn for_spec(spec: &str, limit: usize) -> crate::Result<Arc<Self>> {
        Ok(Self::new(super::build_group(spec, limit)?))
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// id of the conjugate subgroup gHg^{-1}.
    pub fn conj_subgroup(&self, g: usize, h: usize) -> usize {
        let mut e: Vec<usize> =
            self.lattice.elements(h).iter().map(|&x| self.group.conj(g, x)).collect();
        e.sort_unstable();
        self.lattice.id_of(&e).expect("conjugate of a subgroup is a subgroup")
    }

    /// id of H ∩ K.
    pub fn intersect(&self, h: usize, k: usize) -> usize {
        let kset = self.lattice.elements(k);
        let e: Vec<usize> = self
            .lattice
            .elements(h)
            .iter()
            .copied()
            .filter(|x| kset.binary_search(x).is_ok())
            .collect();
        self.lattice.id_of(&e).expect("intersection of subgroups is a subgroup")
    }

    pub fn weyl_group(&self, h: usize) -> WeylGroup {
        let n_id = self.lattice.normalizer[h];
        let n_elems = self.lattice.elements(n_id);
        let h_elems = self.lattice.elements(h);
        // cosets nH inside N, keyed by sorted content, ordered by min element
        let mut seen = vec![false; self.group.order()];
        let mut cosets: Vec<(usize, Vec<usize>)> = Vec::new();
        for &x in n_elems {
            if seen[x] {
                continue;
            }
            let mut coset: Vec<usize> = h_elems.iter().map(|&h0| self.group.mul(x, h0)).collect();
            coset.sort_unstable();
            for &y in &coset {
                seen[y] = true;
            }
            cosets.push((coset[0], coset));
        }
        cosets.sort_by_key(|(min, _)| *min);
        let section: Vec<usize> = cosets.iter().map(|(min, _)| *min).collect();
        let mut coset_of = BTreeMap::new();
        for (i, (_, coset)) in cosets.iter().enumerate() {
            for &y in coset {
                coset_of.insert(y, i);
            }
        }
        let w = cosets.len();
        debug_assert_eq!(w * h_elems.len(), n_elems.len());
        let mut mult = vec![0usize; w * w];
        for i in 0..w {
            for j in 0..w {
                mult[i * w + j] = coset_of[&self.group.mul(section[i], section[j])];
            }
        }
        let mut inv = vec![0usize; w];
        for i in 0..w {
            inv[i] = (0..w).find(|&j| mult[i * w + j] == 0).unwrap();
        }
        let label = format!("W({})", self.lattice.order_of(h));
        let group = FiniteGroup::from_raw(label, w, mult, inv);
        debug_assert!(group.validate().is_ok());
        WeylGroup { h, group, section, coset_of }
    }
}

impl FiniteGroup {
    pub(crate) fn from_raw(label: String, order: usize, mult: Vec<usize>, inv: Vec<usize>) -> Self {
        FiniteGroup { order, mult, inv, label }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_group, DEFAULT_SIZE_LIMIT};

    fn ctx(spec: &str) -> Arc<GroupContext> {
        GroupContext::for_spec(spec, DEFAULT_SIZE_LIMIT).unwrap()
    }

    /// Independent oracle: test every subset of size d | |G| containing
    /// the identity for closure. Exponential; for |G| <= 12 only.
    fn subgroups_by_brute_force(g: &FiniteGroup) -> Vec<Vec<usize>> {
        let n = g.order();
        assert!(n <= 12);
        let mut found = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask & 1 == 0 {
                continue; // must contain the identity
            }
            let size = mask.count_ones() as usize;
            if n % size != 0 {
                continue;
            }
            let elems: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let closed = elems.iter().all(|&a| {
                elems.iter().all(|&b| mask >> g.mul(a, b) & 1 == 1) && mask >> g.inv(a) & 1 == 1
            });
            if closed {
                found.push(elems);
            }
        }
        found
    }

    #[test]
    fn lattice_matches_brute_force_oracle() {
        for spec in ["C1", "C2", "C3", "C4", "C6", "S3", "D4", "Q8", "A4"] {
            let c = ctx(spec);
            let brute = subgroups_by_brute_force(&c.group);
            let listed: Vec<Vec<usize>> =
                c.lattice.subgroups.iter().map(|s| s.elements.clone()).collect();
            let mut brute_sorted = brute;
            brute_sorted.sort_by(|a, b| (a.len(), a.clone()).cmp(&(b.len(), b.clone())));
            assert_eq!(listed, brute_sorted, "{spec}");
        }
    }

    #[test]
    fn class_counts_spec_examples() {
        let s3 = ctx("S3");
        assert_eq!(s3.lattice.len(), 6);
        assert_eq!(s3.lattice.classes.len(), 4);

        let c1 = ctx("C1");
        assert_eq!(c1.lattice.len(), 1);
        assert_eq!(c1.lattice.classes.len(), 1);

        let d4 = ctx("D4");
        assert_eq!(d4.lattice.len(), 10);
        assert_eq!(d4.lattice.classes.len(), 8);
    }

    #[test]
    fn containment_is_a_partial_order() {
        let d4 = ctx("D4");
        let l = &d4.lattice;
        let k = l.len();
        for a in 0..k {
            assert!(l.contains(a, 0));
            assert!(l.contains(l.top(), a));
            for b in 0..k {
                if l.contains(a, b) && l.contains(b, a) {
                    assert_eq!(a, b, "antisymmetry");
                }
                for c in 0..k {
                    if l.contains(a, b) && l.contains(b, c) {
                        assert!(l.contains(a, c), "transitivity");
                    }
                }
            }
        }
    }

    #[test]
    fn conjugacy_classes_are_conjugacy_classes() {
        let a4 = ctx("A4");
        let l = &a4.lattice;
        for class in &l.classes {
            for &m in class {
                // some g conjugates the representative to m
                assert!((0..a4.order()).any(|g| a4.conj_subgroup(g, class[0]) == m));
            }
        }
        // no two representatives conjugate
        let reps = l.class_reps();
        for (i, &r) in reps.iter().enumerate() {
            for &s in reps.iter().skip(i + 1) {
                assert!((0..a4.order()).all(|g| a4.conj_subgroup(g, r) != s));
            }
        }
    }

    #[test]
    fn weyl_groups_spec_examples() {
        let s3 = ctx("S3");
        let l = &s3.lattice;
        let c3 = (0..l.len()).find(|&i| l.order_of(i) == 3).unwrap();
        let w = s3.weyl_group(c3);
        assert_eq!(w.order(), 2);

        let top = l.top();
        assert_eq!(s3.weyl_group(top).order(), 1);

        let c2 = (0..l.len()).find(|&i| l.order_of(i) == 2).unwrap();
        assert_eq!(s3.weyl_group(c2).order(), 1);
    }

    #[test]
    fn weyl_section_consistency() {
        // conjugation through the section is independent of representative:
        // section(w) h section(w)^-1 lands in H for h in H, for every
        // subgroup of every catalog group, and section(w)section(w') is in
        // the coset of section(ww').
        for spec in ["S3", "D4", "Q8", "A4"] {
            let c = ctx(spec);
            for h in 0..c.lattice.len() {
                let w = c.weyl_group(h);
                let h_elems = c.lattice.elements(h);
                for wi in 0..w.order() {
                    for &he in h_elems {
                        let conj = c.group.conj(w.section[wi], he);
                        assert!(h_elems.binary_search(&conj).is_ok());
                    }
                    for wj in 0..w.order() {
                        let prod = c.group.mul(w.section[wi], w.section[wj]);
                        let expect = w.group.mul(wi, wj);
                        assert_eq!(w.class_of(prod), expect);
                        // section(w)·section(w')·section(ww')^{-1} ∈ H
                        let back = c.group.mul(prod, c.group.inv(w.section[expect]));
                        assert!(h_elems.binary_search(&back).is_ok());
                    }
                }
            }
        }
    }
}

//! Transitive G-sets G/K, their H-fixed points with the Weyl action,
//! and double coset decompositions.

use super::lattice::GroupContext;

/// The left G-set G/K. Cosets are stored sorted and ordered by their
/// smallest element, so the identity coset eK is point 0.
#[derive(Clone)]
pub struct CosetSpace {
    pub k: usize,
    pub points: Vec<Vec<usize>>,
    /// group element -> index of its coset
    pub point_of: Vec<usize>,
    /// action[g][p] = index of g·(point p)
    pub action: Vec<Vec<usize>>,
}

impl CosetSpace {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The smallest representative of point `p`.
    pub fn rep(&self, p: usize) -> usize {
        self.points[p][0]
    }
}

impl GroupContext {
    pub fn coset_space(&self, k: usize) -> CosetSpace {
        let n = self.group.order();
        let k_elems = self.lattice.elements(k);
        let mut point_of = vec![usize::MAX; n];
        let mut points = Vec::new();
        for g in 0..n {
            if point_of[g] != usize::MAX {
                continue;
            }
            let mut coset: Vec<usize> = k_elems.iter().map(|&x| self.group.mul(g, x)).collect();
            coset.sort_unstable();
            let idx = points.len();
            for &y in &coset {
                point_of[y] = idx;
            }
            points.push(coset);
        }
        // scanning g in order means each coset is first seen at its smallest element
        let action = (0..n)
            .map(|g| {
                (0..points.len()).map(|p| point_of[self.group.mul(g, points[p][0])]).collect()
            })
            .collect();
        CosetSpace { k, points, point_of, action }
    }

    /// The H-fixed points of G/K with the Weyl-group action of W_G(H).
    ///
    /// Membership is computed from the action and re-checked elementwise
    /// against the criterion "gK is H-fixed iff H^g ⊆ K".
    pub fn fixed_points(&self, k: usize, h: usize) -> FixedPointSet {
        let space = self.coset_space(k);
        let h_elems = self.lattice.elements(h);
        let k_elems = self.lattice.elements(k);
        let mut points = Vec::new();
        for p in 0..space.len() {
            let fixed = h_elems.iter().all(|&x| space.action[x][p] == p);
            // independent criterion through subgroup conjugation
            let g = space.rep(p);
            let ginv = self.group.inv(g);
            let conj_in_k = h_elems
                .iter()
                .all(|&x| k_elems.binary_search(&self.group.conj(ginv, x)).is_ok());
            assert_eq!(fixed, conj_in_k, "fixed-point criteria disagree");
            if fixed {
                points.push(p);
            }
        }
        let weyl = self.weyl_group(h);
        let weyl_action = (0..weyl.order())
            .map(|w| {
                let s = weyl.section[w];
                points
                    .iter()
                    .map(|&p| {
                        let image = space.action[s][p];
                        points
                            .binary_search(&image)
                            .expect("Weyl action preserves the fixed-point set")
                    })
                    .collect()
            })
            .collect();
        FixedPointSet { k, h, space, points, weyl_action }
    }

    /// Double cosets K\H/L for K, L ≤ H, with the intersection data the
    /// Mackey formula consumes.
    pub fn double_cosets_in(&self, h: usize, k: usize, l: usize) -> Vec<DoubleCoset> {
        debug_assert!(self.lattice.contains(h, k) && self.lattice.contains(h, l));
        let h_elems = self.lattice.elements(h);
        let k_elems = self.lattice.elements(k);
        let l_elems = self.lattice.elements(l);
        let mut seen = vec![false; self.group.order()];
        let mut out = Vec::new();
        for &g in h_elems {
            if seen[g] {
                continue;
            }
            let mut orbit = Vec::new();
            for &a in k_elems {
                for &b in l_elems {
                    let x = self.group.mul(self.group.mul(a, g), b);
                    if !seen[x] {
                        seen[x] = true;
                        orbit.push(x);
                    }
                }
            }
            orbit.sort_unstable();
            // K ∩ gLg^{-1} and g^{-1}Kg ∩ L
            let gl = self.conj_subgroup(g, l);
            let kg = self.conj_subgroup(self.group.inv(g), k);
            out.push(DoubleCoset {
                rep: g,
                size: orbit.len(),
                k_cap_gl: self.intersect(k, gl),
                kg_cap_l: self.intersect(kg, l),
            });
        }
        out
    }
}

#[derive(Clone)]
pub struct FixedPointSet {
    pub k: usize,
    pub h: usize,
    pub space: CosetSpace,
    /// Indices into `space.points`, ascending.
    pub points: Vec<usize>,
    /// weyl_action[w][i] = index (into `points`) of section(w)·points[i]
    pub weyl_action: Vec<Vec<usize>>,
}

impl FixedPointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// One K–L double coset KgL with its Mackey-formula intersections.
#[derive(Clone, Debug)]
pub struct DoubleCoset {
    pub rep: usize,
    pub size: usize,
    /// K ∩ ᵍL
    pub k_cap_gl: usize,
    /// K^g ∩ L
    pub kg_cap_l: usize,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_SIZE_LIMIT;
    use std::sync::Arc;

    fn ctx(spec: &str) -> Arc<GroupContext> {
        GroupContext::for_spec(spec, DEFAULT_SIZE_LIMIT).unwrap()
    }

    fn sub_of_order(c: &GroupContext, o: usize) -> usize {
        (0..c.lattice.len()).find(|&i| c.lattice.order_of(i) == o).unwrap()
    }

    #[test]
    fn coset_space_is_transitive_with_stabilizer_k() {
        let s3 = ctx("S3");
        for k in 0..s3.lattice.len() {
            let space = s3.coset_space(k);
            assert_eq!(space.len() * s3.lattice.order_of(k), s3.order());
            // stabilizer of eK is K
            let stab: Vec<usize> =
                (0..s3.order()).filter(|&g| space.action[g][0] == 0).collect();
            assert_eq!(stab, s3.lattice.elements(k));
            // transitivity
            for p in 0..space.len() {
                assert!((0..s3.order()).any(|g| space.action[g][0] == p));
            }
        }
    }

    #[test]
    fn double_coset_spec_examples() {
        let s3 = ctx("S3");
        let c2 = sub_of_order(&s3, 2);
        let c3 = sub_of_order(&s3, 3);
        let top = s3.lattice.top();
        assert_eq!(s3.double_cosets_in(top, c2, c2).len(), 2);
        assert_eq!(s3.double_cosets_in(top, top, top).len(), 1);
        assert_eq!(s3.double_cosets_in(top, c3, c3).len(), 2);
    }

    #[test]
    fn double_cosets_partition_the_group() {
        for spec in ["S3", "D4", "Q8", "A4"] {
            let c = ctx(spec);
            let top = c.lattice.top();
            for k in 0..c.lattice.len() {
                for l in 0..c.lattice.len() {
                    let dcs = c.double_cosets_in(top, k, l);
                    let total: usize = dcs.iter().map(|d| d.size).sum();
                    assert_eq!(total, c.order(), "{spec}: |K g L| must sum to |G|");
                }
            }
        }
    }

    #[test]
    fn fixed_point_spec_examples() {
        let s3 = ctx("S3");
        let c2 = sub_of_order(&s3, 2);
        let c3 = sub_of_order(&s3, 3);
        let top = s3.lattice.top();

        // (G/H)^H is a single transitive Weyl orbit of size |W|
        for h in 0..s3.lattice.len() {
            let fps = s3.fixed_points(h, h);
            let w = s3.weyl_group(h);
            assert_eq!(fps.len(), w.order());
            // transitive: orbit of the first point is everything
            if !fps.is_empty() {
                let mut orbit: Vec<usize> =
                    (0..w.order()).map(|wi| fps.weyl_action[wi][0]).collect();
                orbit.sort_unstable();
                orbit.dedup();
                assert_eq!(orbit.len(), fps.len());
            }
        }

        // no conjugate of C3 lies in C2
        assert!(s3.fixed_points(c2, c3).is_empty());

        // K = G always has exactly one (fixed) point
        for h in 0..s3.lattice.len() {
            assert_eq!(s3.fixed_points(top, h).len(), 1);
        }
    }

    #[test]
    fn fixed_points_empty_when_order_does_not_divide() {
        for spec in ["S3", "D4", "A4"] {
            let c = ctx(spec);
            for k in 0..c.lattice.len() {
                for h in 0..c.lattice.len() {
                    if c.lattice.order_of(k) % c.lattice.order_of(h) != 0 {
                        assert!(c.fixed_points(k, h).is_empty());
                    }
                }
            }
        }
    }
}

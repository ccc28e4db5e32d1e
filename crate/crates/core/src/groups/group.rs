use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::perm::Permutation;
use super::GroupError;

/// Hard construction limit on group order.
pub const MAX_ORDER: usize = 2000;

/// Largest number of points a group may act on.
pub const MAX_DEGREE: usize = 4096;

/// A finite permutation group closed into an explicit multiplication table.
///
/// Elements are numbered breadth-first from the identity (index 0), expanding
/// each element by the generators in the order given. `mul(a, b)` is the
/// element "a then b".
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    label: String,
    generators: Vec<Permutation>,
    perms: Vec<Permutation>,
    table: Vec<u32>,
    inverses: Vec<u32>,
}

/// Closes `generators` under composition, failing once more than `limit`
/// elements (capped at [`MAX_ORDER`]) have been found.
pub fn build_group(
    generators: &[Permutation],
    limit: usize,
    label: impl Into<String>,
) -> Result<FiniteGroup, GroupError> {
    let limit = limit.min(MAX_ORDER);
    let degree = generators.iter().map(Permutation::degree).max().unwrap_or(0);
    if degree > MAX_DEGREE {
        return Err(GroupError::InvalidPermutation(format!(
            "acts on {degree} points, more than {MAX_DEGREE}"
        )));
    }
    let gens: Vec<Permutation> = generators.iter().map(|g| g.extended(degree)).collect();

    let mut perms = vec![Permutation::identity(degree)];
    let mut index: HashMap<Permutation, u32> = HashMap::new();
    index.insert(perms[0].clone(), 0);
    // Spanning tree of the Cayley graph: element = parent * gens[via].
    let mut parent = vec![0u32];
    let mut via = vec![0u32];
    let mut right: Vec<u32> = Vec::new();

    let mut head = 0;
    while head < perms.len() {
        for (gi, g) in gens.iter().enumerate() {
            let y = perms[head].then(g);
            let idx = match index.get(&y) {
                Some(&i) => i,
                None => {
                    let i = perms.len() as u32;
                    if perms.len() >= limit {
                        return Err(GroupError::ClosureExceedsLimit { limit });
                    }
                    index.insert(y.clone(), i);
                    perms.push(y);
                    parent.push(head as u32);
                    via.push(gi as u32);
                    i
                }
            };
            right.push(idx);
        }
        head += 1;
    }

    let n = perms.len();
    let k = gens.len();
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        table[a * n] = a as u32;
        for b in 1..n {
            let prefix = table[a * n + parent[b] as usize] as usize;
            table[a * n + b] = right[prefix * k + via[b] as usize];
        }
    }
    let mut inverses = vec![0u32; n];
    for a in 0..n {
        let row = &table[a * n..(a + 1) * n];
        inverses[a] = row.iter().position(|&c| c == 0).expect("finite group") as u32;
    }

    Ok(FiniteGroup {
        label: label.into(),
        generators: gens,
        perms,
        table,
        inverses,
    })
}

impl FiniteGroup {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Number of points the permutations act on.
    pub fn degree(&self) -> usize {
        self.perms[0].degree()
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.perms[i]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        let p = p.extended(self.degree());
        self.perms.iter().position(|q| *q == p)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center(&self) -> Vec<usize> {
        let n = self.order();
        (0..n)
            .filter(|&z| (0..n).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect()
    }

    /// Sorted elements of the subgroup generated by `elements`.
    pub fn subgroup(&self, elements: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut list = vec![0usize];
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            for &g in elements {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    list.push(y);
                }
            }
            head += 1;
        }
        list.sort_unstable();
        list
    }

    pub fn is_normal(&self, subgroup: &[usize]) -> bool {
        let mut member = vec![false; self.order()];
        for &h in subgroup {
            member[h] = true;
        }
        subgroup
            .iter()
            .all(|&h| (0..self.order()).all(|g| member[self.conjugate(h, g)]))
    }

    /// Quotient by a normal subgroup, realised as the regular permutation
    /// action on cosets.
    pub fn quotient(
        &self,
        normal: &[usize],
        label: impl Into<String>,
    ) -> Result<FiniteGroup, GroupError> {
        if !self.is_normal(normal) {
            return Err(GroupError::NotNormal);
        }
        let n = self.order();
        let mut coset = vec![u32::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if coset[x] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(x);
            for &h in normal {
                coset[self.mul(h, x)] = c;
            }
        }
        let mut gens = Vec::with_capacity(self.generators.len());
        for g in &self.generators {
            let gi = self.index_of(g).expect("generator is an element");
            let images = reps
                .iter()
                .map(|&r| coset[self.mul(r, gi)])
                .collect::<Vec<_>>();
            gens.push(Permutation::from_images(images)?);
        }
        build_group(&gens, MAX_ORDER, label)
    }

    /// Verifies identity, inverses and associativity: exhaustively up to
    /// order 256, on `samples` random triples above.
    pub fn check_axioms(&self, samples: usize, seed: u64) -> Result<(), GroupError> {
        let n = self.order();
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(GroupError::AxiomViolation(format!("identity fails at {a}")));
            }
            let b = self.inv(a);
            if self.mul(a, b) != 0 || self.mul(b, a) != 0 {
                return Err(GroupError::AxiomViolation(format!("no inverse for {a}")));
            }
        }
        let assoc = |a: usize, b: usize, c: usize| {
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
        };
        if n <= 256 {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(GroupError::AxiomViolation(format!(
                                "associativity fails at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..samples {
                let (a, b, c) = (
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                    rng.random_range(0..n),
                );
                if !assoc(a, b, c) {
                    return Err(GroupError::AxiomViolation(format!(
                        "associativity fails at ({a},{b},{c})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Direct product acting on disjoint point sets.
pub fn direct_product(
    g: &FiniteGroup,
    h: &FiniteGroup,
    label: impl Into<String>,
) -> Result<FiniteGroup, GroupError> {
    let offset = g.degree();
    let mut gens: Vec<Permutation> = g.generators().to_vec();
    gens.extend(h.generators().iter().map(|p| p.shifted(offset)));
    build_group(&gens, MAX_ORDER, label)
}

/// Element of `g x h` given by a pair of permutations (h shifted past g).
pub(crate) fn pair_element(g: &FiniteGroup, h: &FiniteGroup, a: usize, b: usize) -> Permutation {
    let left = g.element(a).extended(g.degree());
    let right = h.element(b).shifted(g.degree());
    left.then(&right)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perms(list: &[&str]) -> Vec<Permutation> {
        list.iter().map(|s| Permutation::parse(s).unwrap()).collect()
    }

    #[test]
    fn c2_and_trivial() {
        let c2 = build_group(&perms(&["(1 2)"]), 100, "C2").unwrap();
        assert_eq!(c2.order(), 2);
        let t = build_group(&[], 100, "1").unwrap();
        assert_eq!(t.order(), 1);
        assert_eq!(t.inv(0), 0);
        t.check_axioms(10, 0).unwrap();
    }

    #[test]
    fn bfs_numbering_is_deterministic() {
        let g = build_group(&perms(&["(1 2)", "(1 2 3)"]), 100, "S3").unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.element(1), &Permutation::parse("(1 2)").unwrap().extended(3));
        assert_eq!(g.element(2), &Permutation::parse("(1 2 3)").unwrap());
        g.check_axioms(0, 0).unwrap();
    }

    #[test]
    fn closure_limit_enforced() {
        let err = build_group(&perms(&["(1 2)", "(1 2 3 4 5)"]), 100, "S5").unwrap_err();
        assert!(matches!(err, GroupError::ClosureExceedsLimit { limit: 100 }));
        let err = build_group(&perms(&["(1 2)", "(1 2 3 4 5 6 7)"]), 10_000, "S7").unwrap_err();
        assert!(matches!(err, GroupError::ClosureExceedsLimit { limit: MAX_ORDER }));
    }

    #[test]
    fn table_matches_permutation_product() {
        let g = build_group(&perms(&["(1 2 3 4)", "(1 3)"]), 100, "D4").unwrap();
        for a in 0..g.order() {
            for b in 0..g.order() {
                let p = g.element(a).then(g.element(b));
                assert_eq!(g.index_of(&p), Some(g.mul(a, b)));
            }
        }
    }

    #[test]
    fn quotient_of_cyclic() {
        let c6 = build_group(&perms(&["(1 2 3 4 5 6)"]), 100, "C6").unwrap();
        let three = c6.index_of(&Permutation::parse("(1 4)(2 5)(3 6)").unwrap()).unwrap();
        let n = c6.subgroup(&[three]);
        assert_eq!(n.len(), 2);
        let q = c6.quotient(&n, "C3").unwrap();
        assert_eq!(q.order(), 3);
    }

    #[test]
    fn large_group_sampled_axioms() {
        let s6 = build_group(&perms(&["(1 2)", "(1 2 3 4 5 6)"]), 2000, "S6").unwrap();
        assert_eq!(s6.order(), 720);
        s6.check_axioms(100_000, 7).unwrap();
    }
}

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use super::group::FiniteGroup;

/// Partition of a group into conjugacy classes, ordered by
/// (class size, least element). The identity class is always index 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClassPartition {
    order: usize,
    class_of: Vec<u32>,
    class_sizes: Vec<usize>,
    representatives: Vec<usize>,
    inverse_class: Vec<usize>,
    fingerprint: u64,
}

pub fn conjugacy_classes(group: &FiniteGroup) -> ConjugacyClassPartition {
    let n = group.order();
    let mut raw = vec![u32::MAX; n];
    let mut classes: Vec<(usize, usize)> = Vec::new(); // (size, least element)
    for x in 0..n {
        if raw[x] != u32::MAX {
            continue;
        }
        let c = classes.len() as u32;
        let mut size = 0;
        for g in 0..n {
            let y = group.conjugate(x, g);
            if raw[y] == u32::MAX {
                raw[y] = c;
                size += 1;
            }
        }
        // x is the least unassigned element, hence least in its class.
        classes.push((size, x));
    }
    let mut order: Vec<usize> = (0..classes.len()).collect();
    order.sort_by_key(|&c| classes[c]);
    let mut relabel = vec![0u32; classes.len()];
    for (new, &old) in order.iter().enumerate() {
        relabel[old] = new as u32;
    }
    let class_of: Vec<u32> = raw.iter().map(|&c| relabel[c as usize]).collect();
    let class_sizes: Vec<usize> = order.iter().map(|&c| classes[c].0).collect();
    let representatives: Vec<usize> = order.iter().map(|&c| classes[c].1).collect();
    let inverse_class = representatives
        .iter()
        .map(|&r| class_of[group.inv(r)] as usize)
        .collect();

    let mut h = DefaultHasher::new();
    n.hash(&mut h);
    class_of.hash(&mut h);
    ConjugacyClassPartition {
        order: n,
        class_of,
        class_sizes,
        representatives,
        inverse_class,
        fingerprint: h.finish(),
    }
}

impl ConjugacyClassPartition {
    pub fn group_order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_sizes.is_empty()
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element] as usize
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    /// Class containing the inverses of class `c`.
    pub fn inverse_class(&self, c: usize) -> usize {
        self.inverse_class[c]
    }

    /// Identifies the class structure; characters carry it to detect mixing.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }
}

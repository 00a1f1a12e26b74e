use std::sync::OnceLock;

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::field::prime_power;
use crate::group::{CyclicSubgroup, GroupHandle, Id, SubgroupSet};

/// The maximal cyclic subgroups of a group (the maximal cliques of its
/// enhanced power graph) with a per-element membership index.
#[derive(Debug)]
pub struct MaxCyclicCatalog {
    order: usize,
    subgroups: Vec<CyclicSubgroup>,
    offsets: Vec<u32>,
    flat: Vec<u32>,
    cyc: SubgroupSet,
    maximal_elements: SubgroupSet,
    simplicial: SubgroupSet,
    omega: usize,
    orders: Vec<u32>,
    intersections: OnceLock<Intersections>,
}

/// `|A ∩ B|` for every pair of distinct maximal cyclics sharing an element
/// outside `Cyc(G)`. Pairs not listed meet exactly in `Cyc(G)`.
#[derive(Debug, Default)]
pub struct Intersections {
    pub sizes: FxHashMap<(u32, u32), u32>,
}

impl MaxCyclicCatalog {
    /// `⟨h^p⟩` is a maximal subgroup of `⟨h⟩` for every prime `p` dividing
    /// `|h|`, and every non-maximal cyclic subgroup arises this way, so
    /// marking those leaves exactly the maximal cyclics.
    pub fn new(g: &GroupHandle) -> Self {
        let cyclics = g.cyclic_subgroups();
        let non_max: Vec<usize> = cyclics
            .par_iter()
            .flat_map_iter(|c| {
                let n = c.size();
                let h = c.canonical_generator;
                (2..=n)
                    .filter(move |&p| n % p == 0 && crate::field::is_prime(p as u64))
                    .map(move |p| g.cyclic_index(g.pow(h, p as i64)))
            })
            .collect();
        let mut is_max = vec![true; cyclics.len()];
        for i in non_max {
            is_max[i] = false;
        }
        let subgroups: Vec<CyclicSubgroup> = cyclics
            .iter()
            .zip(&is_max)
            .filter(|(_, &m)| m)
            .map(|(c, _)| c.clone())
            .collect();

        let n = g.order();
        let mut counts = vec![0u32; n + 1];
        for s in &subgroups {
            for &x in s.members.members() {
                counts[x as usize + 1] += 1;
            }
        }
        for i in 0..n {
            counts[i + 1] += counts[i];
        }
        let offsets = counts.clone();
        let mut fill = counts;
        let mut flat = vec![0u32; offsets[n] as usize];
        for (i, s) in subgroups.iter().enumerate() {
            for &x in s.members.members() {
                flat[fill[x as usize] as usize] = i as u32;
                fill[x as usize] += 1;
            }
        }

        let k = subgroups.len() as u32;
        let count = |x: usize| offsets[x + 1] - offsets[x];
        let cyc = SubgroupSet::from_ids((0..n).filter(|&x| count(x) == k).map(|x| x as Id).collect());
        let simplicial =
            SubgroupSet::from_ids((0..n).filter(|&x| count(x) == 1).map(|x| x as Id).collect());
        let maximal_elements = SubgroupSet::from_ids(
            g.ids()
                .filter(|&x| is_max[g.cyclic_index(x)])
                .collect(),
        );
        let omega = subgroups.iter().map(|s| s.size()).max().unwrap_or(1);
        MaxCyclicCatalog {
            order: n,
            subgroups,
            offsets,
            flat,
            cyc,
            maximal_elements,
            simplicial,
            omega,
            orders: g.orders().to_vec(),
            intersections: OnceLock::new(),
        }
    }

    pub fn group_order(&self) -> usize {
        self.order
    }

    pub fn subgroups(&self) -> &[CyclicSubgroup] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    /// Indices of the maximal cyclics containing `x`.
    pub fn membership(&self, x: Id) -> &[u32] {
        &self.flat[self.offsets[x as usize] as usize..self.offsets[x as usize + 1] as usize]
    }

    /// `Cyc(G)`: the intersection of all maximal cyclic subgroups.
    pub fn cyc(&self) -> &SubgroupSet {
        &self.cyc
    }

    /// `M(G) = {g : ⟨g⟩ is maximal cyclic}`.
    pub fn maximal_elements(&self) -> &SubgroupSet {
        &self.maximal_elements
    }

    /// Elements lying in exactly one maximal cyclic subgroup.
    pub fn simplicial(&self) -> &SubgroupSet {
        &self.simplicial
    }

    /// Clique number: the largest maximal cyclic subgroup.
    pub fn omega(&self) -> usize {
        self.omega
    }

    pub fn is_cyclic_group(&self) -> bool {
        self.subgroups.len() == 1
    }

    pub fn element_order(&self, x: Id) -> usize {
        self.orders[x as usize] as usize
    }

    /// `⟨x, y⟩` is cyclic iff `x` and `y` share a maximal cyclic subgroup.
    pub fn adjacent(&self, x: Id, y: Id) -> bool {
        if x == y {
            return false;
        }
        let (a, b) = (self.membership(x), self.membership(y));
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    /// Closed neighbourhood of `x` in the enhanced power graph, sorted.
    pub fn closed_neighbourhood(&self, x: Id) -> Vec<Id> {
        let mut out: Vec<Id> = self
            .membership(x)
            .iter()
            .flat_map(|&i| self.subgroups[i as usize].members.members().iter().copied())
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Pairwise intersection sizes, counted once through the membership
    /// lists of elements outside `Cyc(G)`.
    pub fn intersections(&self) -> &Intersections {
        self.intersections.get_or_init(|| {
            let base = self.cyc.len() as u32;
            let mut sizes: FxHashMap<(u32, u32), u32> = FxHashMap::default();
            for x in 0..self.order as Id {
                if self.cyc.contains(x) {
                    continue;
                }
                let m = self.membership(x);
                for (i, &a) in m.iter().enumerate() {
                    for &b in &m[i + 1..] {
                        *sizes.entry((a, b)).or_insert(base) += 1;
                    }
                }
            }
            Intersections { sizes }
        })
    }

    /// `|A_i ∩ A_j|`.
    pub fn intersection_size(&self, i: u32, j: u32) -> usize {
        if i == j {
            return self.subgroups[i as usize].size();
        }
        let key = (i.min(j), i.max(j));
        self.intersections()
            .sizes
            .get(&key)
            .copied()
            .unwrap_or(self.cyc.len() as u32) as usize
    }

    /// Whether every element order is a prime power.
    pub fn is_eppo(&self) -> bool {
        self.orders
            .iter()
            .all(|&o| o == 1 || prime_power(o as u64).is_some())
    }
}

//! Enumerated finite groups.
//!
//! A [`GroupHandle`] is the full element list of a finite group given by
//! generators, closed under composition by breadth-first search. Elements are
//! addressed by dense ids (`0` is the identity) so every downstream structure
//! can use plain arrays and bitsets. Alongside the elements the handle records
//! every distinct cyclic subgroup with its members in power order, which makes
//! element orders, inverses and powers O(1) lookups.
//!
//! Composition is left-to-right: `mul(x, y)` applies `x` first. For
//! permutations this is `i -> y[x[i]]`; matrices act on row vectors, so the
//! product is the ordinary matrix product `x * y`.

mod backend;
mod ops;

pub use backend::{cycles_to_images, Backend};
pub(crate) use backend::vector_times_matrix;

use std::collections::VecDeque;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::field::{gcd, lcm};

/// Element id within one [`GroupHandle`].
pub type Id = u32;

/// Default enumeration cap.
pub const DEFAULT_CAP: usize = 1_000_000;

const UNSET: u32 = u32::MAX;

/// A subgroup as a strictly increasing list of element ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubgroupSet {
    members: Vec<Id>,
}

impl SubgroupSet {
    /// Sorts and dedups; closure is the caller's responsibility.
    pub fn from_ids(mut ids: Vec<Id>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        SubgroupSet { members: ids }
    }

    pub fn trivial() -> Self {
        SubgroupSet { members: vec![0] }
    }

    pub fn members(&self) -> &[Id] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: Id) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_subset(&self, other: &SubgroupSet) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    pub fn intersection(&self, other: &SubgroupSet) -> SubgroupSet {
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.members, &other.members);
        let mut out = Vec::new();
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        SubgroupSet { members: out }
    }
}

/// A cyclic subgroup `<g>`, identified by its smallest-id generator.
#[derive(Clone, Debug)]
pub struct CyclicSubgroup {
    pub canonical_generator: Id,
    /// `powers[k] = g^k` for the canonical generator `g`.
    pub powers: Vec<Id>,
    pub members: SubgroupSet,
}

impl CyclicSubgroup {
    pub fn size(&self) -> usize {
        self.powers.len()
    }
}

impl PartialEq for CyclicSubgroup {
    fn eq(&self, other: &Self) -> bool {
        self.canonical_generator == other.canonical_generator
    }
}

impl Eq for CyclicSubgroup {}

/// Result of testing whether `<x, y>` is cyclic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwoGenerated {
    pub cyclic: bool,
    /// A generator of `<x, y>` when it is cyclic.
    pub generator: Option<Id>,
}

#[derive(Clone, Debug)]
pub struct GroupHandle {
    backend: Backend,
    width: usize,
    data: Vec<u16>,
    index: FxHashMap<Box<[u16]>, Id>,
    generators: Vec<Id>,
    order_of: Vec<u32>,
    cyclic_of: Vec<u32>,
    log_of: Vec<u32>,
    cyclics: Vec<CyclicSubgroup>,
}

impl GroupHandle {
    /// Closes `generators` under composition. Ids follow discovery order with
    /// the identity first.
    pub fn enumerate(backend: Backend, generators: &[Vec<u16>], cap: usize) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::NoGenerators);
        }
        let width = backend.width();
        for g in generators {
            if g.len() != width {
                return Err(Error::MixedDegree);
            }
            backend.validate(g)?;
        }
        let cap = cap.max(1);

        let mut data: Vec<u16> = Vec::new();
        let mut index: FxHashMap<Box<[u16]>, Id> = FxHashMap::default();
        let identity = backend.identity();
        data.extend_from_slice(&identity);
        index.insert(identity.into_boxed_slice(), 0);

        let mut queue = VecDeque::from([0u32]);
        let mut scratch = vec![0u16; width];
        while let Some(x) = queue.pop_front() {
            for s in generators {
                let xs = &data[x as usize * width..(x as usize + 1) * width];
                backend.compose_into(xs, s, &mut scratch);
                if !index.contains_key(scratch.as_slice()) {
                    let id = index.len() as Id;
                    if id as usize >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    data.extend_from_slice(&scratch);
                    index.insert(scratch.clone().into_boxed_slice(), id);
                    queue.push_back(id);
                }
            }
        }
        let gen_ids = generators
            .iter()
            .map(|g| index[g.as_slice()])
            .collect::<Vec<_>>();

        let mut group = GroupHandle {
            backend,
            width,
            data,
            index,
            generators: gen_ids,
            order_of: Vec::new(),
            cyclic_of: Vec::new(),
            log_of: Vec::new(),
            cyclics: Vec::new(),
        };
        group.index_cyclic_subgroups();
        Ok(group)
    }

    /// Powers of every element, grouped by cyclic subgroup. Elements are
    /// visited by id, so the first element seen of each cyclic subgroup is
    /// its smallest-id generator.
    fn index_cyclic_subgroups(&mut self) {
        let n = self.order();
        self.order_of = vec![0; n];
        self.cyclic_of = vec![UNSET; n];
        self.log_of = vec![0; n];
        let mut scratch = vec![0u16; self.width];
        for g in 0..n as Id {
            if self.cyclic_of[g as usize] != UNSET {
                continue;
            }
            let mut powers = vec![0 as Id];
            let mut cur = g;
            while cur != 0 {
                powers.push(cur);
                cur = self.mul_with(cur, g, &mut scratch);
            }
            let size = powers.len();
            let idx = self.cyclics.len() as u32;
            for (k, &x) in powers.iter().enumerate() {
                let d = gcd(size, k);
                self.order_of[x as usize] = (size / d) as u32;
                if d == 1 {
                    self.cyclic_of[x as usize] = idx;
                    self.log_of[x as usize] = k as u32;
                }
            }
            let members = SubgroupSet::from_ids(powers.clone());
            self.cyclics.push(CyclicSubgroup {
                canonical_generator: g,
                powers,
                members,
            });
        }
    }

    fn mul_with(&self, x: Id, y: Id, scratch: &mut [u16]) -> Id {
        self.backend
            .compose_into(self.element(x), self.element(y), scratch);
        self.index[&*scratch]
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    pub fn order(&self) -> usize {
        self.data.len() / self.width
    }

    pub fn generators(&self) -> &[Id] {
        &self.generators
    }

    /// Raw backend representation of an element.
    pub fn element(&self, x: Id) -> &[u16] {
        let w = self.width;
        &self.data[x as usize * w..(x as usize + 1) * w]
    }

    pub fn id_of(&self, raw: &[u16]) -> Option<Id> {
        self.index.get(raw).copied()
    }

    pub fn ids(&self) -> impl Iterator<Item = Id> {
        0..self.order() as Id
    }

    pub fn mul(&self, x: Id, y: Id) -> Id {
        if self.width <= 128 {
            let mut buf = [0u16; 128];
            self.mul_with(x, y, &mut buf[..self.width])
        } else {
            let mut scratch = vec![0u16; self.width];
            self.mul_with(x, y, &mut scratch)
        }
    }

    pub fn inv(&self, x: Id) -> Id {
        self.pow(x, -1)
    }

    pub fn pow(&self, x: Id, k: i64) -> Id {
        let c = &self.cyclics[self.cyclic_of[x as usize] as usize];
        let n = c.size() as i64;
        let e = (self.log_of[x as usize] as i64 * k.rem_euclid(n)).rem_euclid(n);
        c.powers[e as usize]
    }

    /// `g^-1 x g`.
    pub fn conj(&self, x: Id, g: Id) -> Id {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn element_order(&self, x: Id) -> usize {
        self.order_of[x as usize] as usize
    }

    pub fn orders(&self) -> &[u32] {
        &self.order_of
    }

    pub fn commutes(&self, x: Id, y: Id) -> bool {
        x == y || self.mul(x, y) == self.mul(y, x)
    }

    /// Every distinct cyclic subgroup of the group.
    pub fn cyclic_subgroups(&self) -> &[CyclicSubgroup] {
        &self.cyclics
    }

    /// `<x>`.
    pub fn cyclic_subgroup(&self, x: Id) -> &CyclicSubgroup {
        &self.cyclics[self.cyclic_of[x as usize] as usize]
    }

    /// Index of `<x>` in [`GroupHandle::cyclic_subgroups`].
    pub fn cyclic_index(&self, x: Id) -> usize {
        self.cyclic_of[x as usize] as usize
    }

    /// `y ∈ <x>`.
    pub fn in_cyclic(&self, y: Id, x: Id) -> bool {
        self.cyclic_subgroup(x).members.contains(y)
    }

    /// Power-graph adjacency test (`x ≠ y` not required).
    pub fn one_is_power_of_other(&self, x: Id, y: Id) -> bool {
        self.in_cyclic(x, y) || self.in_cyclic(y, x)
    }

    pub fn is_central(&self, x: Id) -> bool {
        self.generators.iter().all(|&g| self.commutes(x, g))
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order();
        self.order_of.iter().any(|&o| o as usize == n)
    }

    pub fn max_element_order(&self) -> usize {
        self.order_of.iter().copied().max().unwrap_or(1) as usize
    }

    /// Decides whether `<x, y>` is cyclic.
    ///
    /// Non-commuting pairs never generate a cyclic group. For commuting
    /// pairs `<x, y> = {x^i y^j}` is abelian with exponent `lcm(|x|, |y|)`,
    /// and an abelian group is cyclic exactly when its order equals its
    /// exponent.
    pub fn two_generated_cyclic(&self, x: Id, y: Id) -> TwoGenerated {
        let yes = |g| TwoGenerated {
            cyclic: true,
            generator: Some(g),
        };
        if self.in_cyclic(y, x) {
            return yes(x);
        }
        if self.in_cyclic(x, y) {
            return yes(y);
        }
        if !self.commutes(x, y) {
            return TwoGenerated {
                cyclic: false,
                generator: None,
            };
        }
        let (ox, oy) = (self.element_order(x), self.element_order(y));
        if gcd(ox, oy) == 1 {
            return yes(self.mul(x, y));
        }
        let target = lcm(ox, oy);
        let xs = &self.cyclic_subgroup(x).powers;
        let ys = &self.cyclic_subgroup(y).powers;
        let mut seen = rustc_hash::FxHashSet::default();
        let mut scratch = vec![0u16; self.width];
        for &a in xs {
            for &b in ys {
                seen.insert(self.mul_with(a, b, &mut scratch));
            }
        }
        if seen.len() == target {
            let g = seen
                .iter()
                .copied()
                .filter(|&g| self.element_order(g) == target)
                .min()
                .expect("cyclic group has a generator");
            yes(g)
        } else {
            TwoGenerated {
                cyclic: false,
                generator: None,
            }
        }
    }

    /// Smallest subgroup containing `seeds`.
    pub fn subgroup_closure(&self, seeds: &[Id]) -> SubgroupSet {
        let mut in_set = rustc_hash::FxHashSet::default();
        in_set.insert(0);
        let mut members = vec![0];
        let gens: Vec<Id> = seeds.iter().copied().filter(|&s| s != 0).collect();
        let mut queue = VecDeque::from([0]);
        let mut scratch = vec![0u16; self.width];
        while let Some(x) = queue.pop_front() {
            for &s in &gens {
                let y = self.mul_with(x, s, &mut scratch);
                if in_set.insert(y) {
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        SubgroupSet::from_ids(members)
    }

    /// `g^-1 S g = S` for every generator `g`.
    pub fn is_normal(&self, s: &SubgroupSet) -> bool {
        self.generators
            .iter()
            .all(|&g| s.members().iter().all(|&x| s.contains(self.conj(x, g))))
    }

    /// The group as permutations: the permutation backend unchanged, matrix
    /// groups acting on nonzero row vectors.
    pub fn permutation_image(&self, x: Id) -> Vec<u16> {
        self.backend.permutation_image(self.element(x))
    }

    pub fn permutation_degree(&self) -> usize {
        self.backend.permutation_degree()
    }

    /// Human-readable rendering: 1-based cycle notation or a matrix.
    pub fn render(&self, x: Id) -> String {
        self.backend.render(self.element(x))
    }

    /// A subgroup as a standalone handle, generated by the given elements.
    pub fn subgroup_handle(&self, seeds: &[Id]) -> Result<GroupHandle> {
        let gens: Vec<Vec<u16>> = if seeds.is_empty() {
            vec![self.element(0).to_vec()]
        } else {
            seeds.iter().map(|&s| self.element(s).to_vec()).collect()
        };
        GroupHandle::enumerate(self.backend.clone(), &gens, self.order())
    }

    /// Each element of `sub` located in `self` by its raw representation.
    /// Both groups must share a backend.
    pub fn embed(&self, sub: &GroupHandle) -> Option<Vec<Id>> {
        sub.ids().map(|x| self.id_of(sub.element(x))).collect()
    }
}

#[cfg(test)]
mod tests;

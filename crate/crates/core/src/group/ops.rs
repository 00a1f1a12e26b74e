//! Quotients and products. Every result is a permutation group.

use std::collections::VecDeque;

use super::{Backend, GroupHandle, Id, SubgroupSet, UNSET};
use crate::error::{Error, Result};

impl GroupHandle {
    /// `G/N` acting on the cosets of `N` by right multiplication, together
    /// with the projection `G -> G/N` as an id map.
    pub fn quotient(&self, n: &SubgroupSet) -> Result<(GroupHandle, Vec<Id>)> {
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let order = self.order();
        if n.len() == 1 {
            let gens: Vec<Vec<u16>> = self
                .generators
                .iter()
                .map(|&g| self.permutation_image(g))
                .collect();
            let q = GroupHandle::enumerate(
                Backend::Perm {
                    degree: self.permutation_degree(),
                },
                &gens,
                order,
            )?;
            let proj = self
                .ids()
                .map(|x| q.id_of(&self.permutation_image(x)).expect("faithful image"))
                .collect();
            return Ok((q, proj));
        }

        let mut coset_of = vec![UNSET; order];
        let mut reps: Vec<Id> = Vec::new();
        for g in self.ids() {
            if coset_of[g as usize] != UNSET {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(g);
            for &m in n.members() {
                coset_of[self.mul(m, g) as usize] = c;
            }
        }
        let k = reps.len();
        if k > u16::MAX as usize {
            return Err(Error::CapExceeded {
                cap: u16::MAX as usize,
            });
        }
        let image = |g: Id| -> Vec<u16> {
            reps.iter()
                .map(|&r| coset_of[self.mul(r, g) as usize] as u16)
                .collect()
        };
        let gens: Vec<Vec<u16>> = self.generators.iter().map(|&g| image(g)).collect();
        let q = GroupHandle::enumerate(Backend::Perm { degree: k }, &gens, k)?;

        // Coset c maps to the quotient element that sends coset 0 to c.
        let mut qid_of_coset = vec![UNSET; k];
        for x in q.ids() {
            qid_of_coset[q.element(x)[0] as usize] = x;
        }
        let proj = self
            .ids()
            .map(|g| qid_of_coset[coset_of[g as usize] as usize])
            .collect();
        Ok((q, proj))
    }

    /// `G1 x G2` on the disjoint union of the two permutation domains.
    pub fn direct_product(&self, other: &GroupHandle) -> Result<GroupHandle> {
        let (d1, d2) = (self.permutation_degree(), other.permutation_degree());
        if d1 + d2 > u16::MAX as usize {
            return Err(Error::MixedDegree);
        }
        let mut gens = Vec::new();
        for &g in &self.generators {
            gens.push(pair_image(&self.permutation_image(g), &identity(d2), d1));
        }
        for &h in &other.generators {
            gens.push(pair_image(&identity(d1), &other.permutation_image(h), d1));
        }
        GroupHandle::enumerate(
            Backend::Perm { degree: d1 + d2 },
            &gens,
            self.order().saturating_mul(other.order()),
        )
    }

    /// Id of `(x, y)` inside a product built by [`GroupHandle::direct_product`].
    pub fn product_element(&self, g1: &GroupHandle, x: Id, g2: &GroupHandle, y: Id) -> Option<Id> {
        let raw = pair_image(
            &g1.permutation_image(x),
            &g2.permutation_image(y),
            g1.permutation_degree(),
        );
        self.id_of(&raw)
    }

    /// `(G1 x G2) / <(z1, z2^-1)>`.
    pub fn central_product(&self, other: &GroupHandle, z1: Id, z2: Id) -> Result<GroupHandle> {
        if self.element_order(z1) != other.element_order(z2)
            || !self.is_central(z1)
            || !other.is_central(z2)
        {
            return Err(Error::CentralElementMismatch);
        }
        let p = self.direct_product(other)?;
        let z = p
            .product_element(self, z1, other, other.inv(z2))
            .expect("product contains both factors");
        let n = p.subgroup_closure(&[z]);
        Ok(p.quotient(&n)?.0)
    }

    /// Smallest-id central element of order 2.
    pub fn central_involution(&self) -> Option<Id> {
        self.ids()
            .find(|&x| self.element_order(x) == 2 && self.is_central(x))
    }

    /// Breadth-first word lengths over the generators; handy for picking
    /// short representatives.
    pub fn word_lengths(&self) -> Vec<u32> {
        let mut dist = vec![UNSET; self.order()];
        dist[0] = 0;
        let mut queue = VecDeque::from([0 as Id]);
        while let Some(x) = queue.pop_front() {
            for &s in &self.generators {
                let y = self.mul(x, s);
                if dist[y as usize] == UNSET {
                    dist[y as usize] = dist[x as usize] + 1;
                    queue.push_back(y);
                }
            }
        }
        dist
    }
}

fn identity(d: usize) -> Vec<u16> {
    (0..d as u16).collect()
}

fn pair_image(a: &[u16], b: &[u16], shift: usize) -> Vec<u16> {
    a.iter()
        .copied()
        .chain(b.iter().map(|&i| i + shift as u16))
        .collect()
}

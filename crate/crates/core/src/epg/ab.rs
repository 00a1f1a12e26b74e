use serde::{Deserialize, Serialize};

use super::MaxCyclicCatalog;
use crate::error::{Error, Result};
use crate::field::{gcd, prime_power};
use crate::group::{GroupHandle, Id};

/// Elements `a1, a2, b1, b2` of prime-power order with `<a1, a2>` and
/// `<b1, b2>` non-cyclic, each `a` commuting with each `b` and of order
/// coprime to it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ABConfiguration {
    pub a1: Id,
    pub a2: Id,
    pub b1: Id,
    pub b2: Id,
}

fn prime_of(n: usize) -> Option<u64> {
    prime_power(n as u64).map(|(p, _)| p)
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidWitness(msg.into())
}

impl ABConfiguration {
    /// `[|a1|, |a2|, |b1|, |b2|]`
    pub fn orders(&self, g: &GroupHandle) -> [usize; 4] {
        [self.a1, self.a2, self.b1, self.b2].map(|x| g.element_order(x))
    }

    /// The induced 4-cycle `(a1, b1, a2, b2)`.
    pub fn cycle(&self) -> [Id; 4] {
        [self.a1, self.b1, self.a2, self.b2]
    }

    pub fn validate(&self, g: &GroupHandle) -> Result<()> {
        let n = g.order() as Id;
        if [self.a1, self.a2, self.b1, self.b2].iter().any(|&x| x >= n) {
            return Err(invalid("element id out of range"));
        }
        let o = self.orders(g);
        if o.iter().any(|&k| prime_of(k).is_none()) {
            return Err(invalid(format!("orders {o:?} are not all prime powers")));
        }
        for a in [self.a1, self.a2] {
            for b in [self.b1, self.b2] {
                if gcd(g.element_order(a), g.element_order(b)) != 1 {
                    return Err(invalid(format!("orders of {a} and {b} are not coprime")));
                }
                if !g.commutes(a, b) {
                    return Err(invalid(format!("{a} and {b} do not commute")));
                }
            }
        }
        if g.two_generated_cyclic(self.a1, self.a2).cyclic {
            return Err(invalid("<a1, a2> is cyclic"));
        }
        if g.two_generated_cyclic(self.b1, self.b2).cyclic {
            return Err(invalid("<b1, b2> is cyclic"));
        }
        Ok(())
    }

    /// The same configuration inside a supergroup, given where each element
    /// of the subgroup lands.
    pub fn lift(&self, embedding: &[Id]) -> ABConfiguration {
        let f = |x: Id| embedding[x as usize];
        ABConfiguration {
            a1: f(self.a1),
            a2: f(self.a2),
            b1: f(self.b1),
            b2: f(self.b2),
        }
    }
}

fn adjacent(g: &GroupHandle, x: Id, y: Id) -> bool {
    x != y && g.two_generated_cyclic(x, y).cyclic
}

/// Whether `(c0, c1, c2, c3)` is an induced 4-cycle of the enhanced power
/// graph, decided from the definition.
pub fn is_induced_c4(g: &GroupHandle, c: [Id; 4]) -> bool {
    let distinct = (0..4).all(|i| (i + 1..4).all(|j| c[i] != c[j]));
    distinct
        && (0..4).all(|i| adjacent(g, c[i], c[(i + 1) % 4]))
        && !adjacent(g, c[0], c[2])
        && !adjacent(g, c[1], c[3])
}

pub fn ab_to_c4(g: &GroupHandle, cfg: &ABConfiguration) -> Result<[Id; 4]> {
    cfg.validate(g)?;
    let c = cfg.cycle();
    if !is_induced_c4(g, c) {
        return Err(invalid("configuration does not give an induced 4-cycle"));
    }
    Ok(c)
}

/// Normalises an induced 4-cycle by replacing each vertex of mixed order
/// with a suitable primary part, then reads off the configuration.
pub fn c4_to_ab(g: &GroupHandle, cycle: [Id; 4]) -> Result<ABConfiguration> {
    if !is_induced_c4(g, cycle) {
        return Err(invalid("not an induced 4-cycle"));
    }
    let mut c = cycle;
    for i in 0..4 {
        let m = g.element_order(c[i]);
        if prime_of(m).is_some() {
            continue;
        }
        let replaced = super::criteria::primes_of(m).into_iter().find_map(|p| {
            let mut l = m;
            while l % p == 0 {
                l /= p;
            }
            let mut d = c;
            d[i] = g.pow(c[i], l as i64);
            is_induced_c4(g, d).then_some(d)
        });
        c = replaced.ok_or_else(|| invalid("no primary part keeps the cycle induced"))?;
    }
    let cfg = ABConfiguration {
        a1: c[0],
        a2: c[2],
        b1: c[1],
        b2: c[3],
    };
    cfg.validate(g)?;
    Ok(cfg)
}

/// Conjugacy class representatives (smallest id) of the elements in `set`,
/// which must be closed under conjugation.
fn class_representatives(g: &GroupHandle, set: &[bool]) -> Vec<Id> {
    let n = g.order();
    let mut parent: Vec<Id> = (0..n as Id).collect();
    fn find(p: &mut [Id], mut x: Id) -> Id {
        while p[x as usize] != x {
            p[x as usize] = p[p[x as usize] as usize];
            x = p[x as usize];
        }
        x
    }
    for x in (0..n as Id).filter(|&x| set[x as usize]) {
        for &s in g.generators() {
            let (a, b) = (find(&mut parent, x), find(&mut parent, g.conj(x, s)));
            if a != b {
                parent[a.max(b) as usize] = a.min(b);
            }
        }
    }
    (0..n as Id)
        .filter(|&x| set[x as usize] && find(&mut parent, x) == x)
        .collect()
}

/// Searches for an AB-configuration, equivalently an induced 4-cycle.
///
/// Only normalised cycles are considered: non-simplicial vertices outside
/// `Cyc(G)` of prime-power order, adjacent ones of coprime order. `a1`
/// runs over class representatives by ascending prime, then id; the rest
/// are taken in id order.
pub fn c4_witness_search(g: &GroupHandle, catalog: &MaxCyclicCatalog) -> Option<ABConfiguration> {
    let n = g.order();
    let prime: Vec<u64> = (0..n as Id)
        .map(|x| {
            let o = catalog.element_order(x);
            let ok = o > 1 && !catalog.simplicial().contains(x) && !catalog.cyc().contains(x);
            if ok {
                prime_of(o).unwrap_or(0)
            } else {
                0
            }
        })
        .collect();
    let usable: Vec<bool> = prime.iter().map(|&p| p != 0).collect();
    let mut reps = class_representatives(g, &usable);
    reps.sort_by_key(|&x| (prime[x as usize], x));

    let coprime = |x: Id, y: Id| prime[x as usize] != prime[y as usize];
    for a1 in reps {
        let n1: Vec<Id> = catalog
            .closed_neighbourhood(a1)
            .into_iter()
            .filter(|&b| usable[b as usize] && coprime(a1, b))
            .collect();
        if n1.len() < 2 {
            continue;
        }
        let mut a2s: Vec<Id> = n1
            .iter()
            .flat_map(|&b| catalog.closed_neighbourhood(b))
            .filter(|&a| a != a1 && usable[a as usize] && !catalog.adjacent(a1, a))
            .collect();
        a2s.sort_unstable();
        a2s.dedup();
        for a2 in a2s {
            let s: Vec<Id> = n1
                .iter()
                .copied()
                .filter(|&b| coprime(a2, b) && catalog.adjacent(a2, b))
                .collect();
            for (i, &b1) in s.iter().enumerate() {
                if let Some(&b2) = s[i + 1..].iter().find(|&&b2| !catalog.adjacent(b1, b2)) {
                    return Some(ABConfiguration { a1, a2, b1, b2 });
                }
            }
        }
    }
    None
}

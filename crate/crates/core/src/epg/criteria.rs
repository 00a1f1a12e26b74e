use serde::{Deserialize, Serialize};

use super::{EpgGraph, MaxCyclicCatalog};
use crate::field::prime_power;
use crate::graph::{has_induced_c4, is_block_graph, is_chordal, is_cograph, is_diamond_free};
use crate::group::{GroupHandle, Id};

/// Three distinct maximal cyclics `A, B, C` with `A ∩ B` and `A ∩ C`
/// incomparable, which rules out a cograph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WTriple {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    /// `[|A|, |B|, |C|]`
    pub sizes: [usize; 3],
    pub ab: usize,
    pub ac: usize,
}

impl WTriple {
    /// Recomputes both intersections from member sets.
    pub fn verify(&self, catalog: &MaxCyclicCatalog) -> bool {
        let s = catalog.subgroups();
        let k = s.len() as u32;
        if self.a >= k || self.b >= k || self.c >= k {
            return false;
        }
        if self.a == self.b || self.a == self.c || self.b == self.c {
            return false;
        }
        let (a, b, c) = (
            &s[self.a as usize].members,
            &s[self.b as usize].members,
            &s[self.c as usize].members,
        );
        let ab = a.intersection(b);
        let ac = a.intersection(c);
        ab.len() == self.ab
            && ac.len() == self.ac
            && [a.len(), b.len(), c.len()] == self.sizes
            && !ab.is_subset(&ac)
            && !ac.is_subset(&ab)
    }
}

/// Per subgroup, the other subgroups meeting it in more than `Cyc(G)`,
/// with the intersection order.
fn neighbour_lists(catalog: &MaxCyclicCatalog) -> Vec<Vec<(u32, usize)>> {
    let mut lists = vec![Vec::new(); catalog.len()];
    for (&(i, j), &s) in &catalog.intersections().sizes {
        lists[i as usize].push((j, s as usize));
        lists[j as usize].push((i, s as usize));
    }
    for l in &mut lists {
        l.sort_unstable();
    }
    lists
}

fn triple(catalog: &MaxCyclicCatalog, a: u32, b: (u32, usize), c: (u32, usize)) -> WTriple {
    let size = |i: u32| catalog.subgroups()[i as usize].size();
    WTriple {
        a,
        b: b.0,
        c: c.0,
        sizes: [size(a), size(b.0), size(c.0)],
        ab: b.1,
        ac: c.1,
    }
}

/// A violating triple, found by checking that for each `A` the orders of
/// `A ∩ B` form a divisibility chain. Subgroups of a cyclic group are
/// determined by their order, so comparability is divisibility.
pub fn w_triple(catalog: &MaxCyclicCatalog) -> Option<WTriple> {
    for (a, list) in neighbour_lists(catalog).iter().enumerate() {
        // smallest-id representative per order
        let mut by_size: Vec<(usize, u32)> = Vec::new();
        for &(j, s) in list {
            match by_size.iter_mut().find(|(t, _)| *t == s) {
                Some(e) => e.1 = e.1.min(j),
                None => by_size.push((s, j)),
            }
        }
        by_size.sort_unstable();
        for w in by_size.windows(2) {
            let ((s, b), (t, c)) = (w[0], w[1]);
            if t % s != 0 {
                return Some(triple(catalog, a as u32, (b, s), (c, t)));
            }
        }
    }
    None
}

/// Cograph test through the chain condition; vacuously true with fewer
/// than three maximal cyclics.
pub fn cograph_by_chains(catalog: &MaxCyclicCatalog) -> bool {
    w_triple(catalog).is_none()
}

/// A violating triple with prescribed `[|A|, |B|, |C|]`.
pub fn w_triple_with_sizes(catalog: &MaxCyclicCatalog, sizes: [usize; 3]) -> Option<WTriple> {
    let size = |i: u32| catalog.subgroups()[i as usize].size();
    for (a, list) in neighbour_lists(catalog).iter().enumerate() {
        if size(a as u32) != sizes[0] {
            continue;
        }
        for &(b, s) in list.iter().filter(|&&(b, _)| size(b) == sizes[1]) {
            for &(c, t) in list.iter().filter(|&&(c, _)| c != b && size(c) == sizes[2]) {
                if s % t != 0 && t % s != 0 {
                    return Some(triple(catalog, a as u32, (b, s), (c, t)));
                }
            }
        }
    }
    None
}

/// The cubic triple loop on member sets. Oracle for [`w_triple`].
pub fn w_triple_naive(catalog: &MaxCyclicCatalog) -> Option<WTriple> {
    let s = catalog.subgroups();
    let k = s.len() as u32;
    for a in 0..k {
        for b in 0..k {
            for c in b + 1..k {
                if a == b || a == c {
                    continue;
                }
                let ab = s[a as usize].members.intersection(&s[b as usize].members);
                let ac = s[a as usize].members.intersection(&s[c as usize].members);
                if !ab.is_subset(&ac) && !ac.is_subset(&ab) {
                    return Some(triple(catalog, a, (b, ab.len()), (c, ac.len())));
                }
            }
        }
    }
    None
}

/// Orders of all intersections of two distinct maximal cyclics, each
/// listed once.
pub fn intersection_orders(catalog: &MaxCyclicCatalog) -> Vec<usize> {
    let k = catalog.len();
    let sizes = &catalog.intersections().sizes;
    let mut out: Vec<usize> = sizes.values().map(|&s| s as usize).collect();
    if sizes.len() < k * k.saturating_sub(1) / 2 {
        out.push(catalog.cyc().len());
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Whether every intersection of two distinct maximal cyclics is a
/// `p`-group.
pub fn prime_intersection_check(catalog: &MaxCyclicCatalog, p: u64) -> bool {
    intersection_orders(catalog).iter().all(|&s| {
        s == 1 || prime_power(s as u64).is_some_and(|(q, _)| q == p)
    })
}

pub fn clique_number(catalog: &MaxCyclicCatalog) -> usize {
    catalog.omega()
}

pub fn is_eppo(catalog: &MaxCyclicCatalog) -> bool {
    catalog.is_eppo()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "subgroups", rename_all = "snake_case")]
pub enum PartitionOutcome {
    Cyclic,
    /// Indices of the maximal cyclics, which partition the group.
    Partition(Vec<u32>),
    None,
}

/// The maximal cyclics as a partition, when they pairwise meet trivially.
pub fn partition_by_cyclics(catalog: &MaxCyclicCatalog) -> PartitionOutcome {
    if catalog.is_cyclic_group() {
        return PartitionOutcome::Cyclic;
    }
    if catalog.cyc().len() == 1 && catalog.intersections().sizes.is_empty() {
        PartitionOutcome::Partition((0..catalog.len() as u32).collect())
    } else {
        PartitionOutcome::None
    }
}

/// The conditions of the partition theorem, each computed on its own.
/// Graph conditions are `None` when no dense graph was supplied.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionReport {
    pub cyclic: bool,
    pub diamond_free: Option<bool>,
    pub trivial_intersections: bool,
    pub simplicial_nonidentity: bool,
    pub cyclic_partition: bool,
    pub block_graph: Option<bool>,
    pub c_tidy: bool,
    pub cyclic_transitive: bool,
}

impl PartitionReport {
    pub fn values(&self) -> Vec<(&'static str, bool)> {
        let mut v = Vec::new();
        if let Some(a) = self.diamond_free {
            v.push(("a", a));
        }
        v.push(("b", self.trivial_intersections));
        v.push(("c", self.simplicial_nonidentity));
        v.push(("d", self.cyclic_partition));
        if let Some(f) = self.block_graph {
            v.push(("f", f));
        }
        v.push(("g", self.c_tidy));
        v.push(("h", self.cyclic_transitive));
        v
    }

    pub fn all_equal(&self) -> bool {
        let v = self.values();
        v.iter().all(|&(_, b)| b == v[0].1)
    }

    pub fn verdict(&self) -> Option<bool> {
        self.all_equal().then(|| self.values()[0].1)
    }
}

/// Whether the closed neighbourhood of `x` is exactly one cyclic subgroup.
fn neighbourhood_is_cyclic(g: &GroupHandle, catalog: &MaxCyclicCatalog, x: Id) -> bool {
    let n = catalog.closed_neighbourhood(x);
    n.iter().any(|&y| {
        catalog.element_order(y) == n.len() && g.cyclic_subgroup(y).members.members() == n.as_slice()
    })
}

pub fn partition_equivalents(
    g: &GroupHandle,
    catalog: &MaxCyclicCatalog,
    graph: Option<&EpgGraph>,
) -> PartitionReport {
    let cyclic = catalog.is_cyclic_group();
    if cyclic {
        let t = Some(true);
        return PartitionReport {
            cyclic,
            diamond_free: t,
            trivial_intersections: true,
            simplicial_nonidentity: true,
            cyclic_partition: true,
            block_graph: t,
            c_tidy: true,
            cyclic_transitive: true,
        };
    }
    let trivial_intersections =
        intersection_orders(catalog).iter().all(|&s| s == 1);
    let simplicial_nonidentity =
        (1..catalog.group_order() as Id).all(|x| catalog.simplicial().contains(x));
    let cyclic_partition = matches!(partition_by_cyclics(catalog), PartitionOutcome::Partition(_));
    let c_tidy = catalog.cyc().len() == 1
        && g.ids()
            .filter(|&x| !catalog.cyc().contains(x))
            .all(|x| neighbourhood_is_cyclic(g, catalog, x));
    // every vertex of E(G) - 1 is simplicial
    let cyclic_transitive = g.ids().skip(1).all(|x| {
        let nb: Vec<Id> = catalog
            .closed_neighbourhood(x)
            .into_iter()
            .filter(|&y| y != 0 && y != x)
            .collect();
        nb.iter()
            .enumerate()
            .all(|(i, &y)| nb[i + 1..].iter().all(|&z| catalog.adjacent(y, z)))
    });
    PartitionReport {
        cyclic,
        diamond_free: graph.map(|e| is_diamond_free(&e.graph).is_none()),
        trivial_intersections,
        simplicial_nonidentity,
        cyclic_partition,
        block_graph: graph.map(|e| is_block_graph(&e.graph)),
        c_tidy,
        cyclic_transitive,
    }
}

/// Primes dividing `n`, ascending.
pub fn primes_of(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn p_part(mut n: usize, p: usize) -> usize {
    let mut r = 1;
    while n % p == 0 {
        n /= p;
        r *= p;
    }
    r
}

fn is_p_power(n: usize, p: usize) -> bool {
    n == 1 || prime_power(n as u64).is_some_and(|(q, _)| q as usize == p)
}

/// A finite group is nilpotent iff each Sylow subgroup is normal, i.e. the
/// `p`-elements number exactly the `p`-part of the order.
pub fn is_nilpotent(g: &GroupHandle) -> bool {
    let n = g.order();
    primes_of(n).into_iter().all(|p| {
        g.orders().iter().filter(|&&o| is_p_power(o as usize, p)).count() == p_part(n, p)
    })
}

/// The nilpotent theorem's conditions. The graph conditions are `None`
/// without a dense graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilpotentReport {
    pub cograph: Option<bool>,
    pub chordal: Option<bool>,
    pub c4_free: Option<bool>,
    pub one_noncyclic_sylow: bool,
    pub p_times_cyclic: bool,
}

impl NilpotentReport {
    pub fn values(&self) -> Vec<bool> {
        [self.cograph, self.chordal, self.c4_free]
            .into_iter()
            .flatten()
            .chain([self.one_noncyclic_sylow, self.p_times_cyclic])
            .collect()
    }

    pub fn all_equal(&self) -> bool {
        let v = self.values();
        v.iter().all(|&b| b == v[0])
    }
}

/// Requires `g` nilpotent.
pub fn nilpotent_conditions(g: &GroupHandle, graph: Option<&EpgGraph>) -> NilpotentReport {
    let n = g.order();
    let primes = primes_of(n);
    let sylow_cyclic = |p: usize| {
        let pp = p_part(n, p);
        g.orders().iter().any(|&o| o as usize == pp)
    };
    let noncyclic = primes.iter().filter(|&&p| !sylow_cyclic(p)).count();

    // G = P x C_m: the p-elements form P, the p'-elements form a cyclic
    // group centralising P
    let split = |p: usize| {
        let pel: Vec<Id> = g.ids().filter(|&x| is_p_power(g.element_order(x), p)).collect();
        let rest: Vec<Id> = g
            .ids()
            .filter(|&x| g.element_order(x) % p != 0)
            .collect();
        if pel.len() * rest.len() != n || g.subgroup_closure(&pel).len() != pel.len() {
            return false;
        }
        let Some(&c) = rest.iter().find(|&&x| g.element_order(x) == rest.len()) else {
            return false;
        };
        pel.iter().all(|&x| g.commutes(x, c))
    };
    let p_times_cyclic = n == 1 || primes.iter().any(|&p| split(p));

    NilpotentReport {
        cograph: graph.map(|e| is_cograph(&e.graph).is_member()),
        chordal: graph.map(|e| is_chordal(&e.graph).is_member()),
        c4_free: graph.map(|e| has_induced_c4(&e.graph).is_none()),
        one_noncyclic_sylow: noncyclic <= 1,
        p_times_cyclic,
    }
}

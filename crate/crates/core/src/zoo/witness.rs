//! Explicit elements used in the worked examples.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::linear::{psl, MatrixSpace};
use super::{projective_image, shared_field};
use crate::error::{Error, Result};
use crate::field::gcd;
use crate::group::{cycles_to_images, Backend, GroupHandle, Id, DEFAULT_CAP};

/// Named elements of one group.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessElements {
    pub labels: BTreeMap<String, Id>,
}

impl WitnessElements {
    pub fn get(&self, name: &str) -> Option<Id> {
        self.labels.get(name).copied()
    }

    fn put(&mut self, g: &GroupHandle, name: &str, x: Id, order: usize) -> Result<()> {
        if g.element_order(x) != order {
            return Err(Error::InvalidWitness(format!(
                "{name} has order {}, expected {order}",
                g.element_order(x)
            )));
        }
        self.labels.insert(name.to_string(), x);
        Ok(())
    }
}

fn one_based(degree: usize, cycles: &[&[usize]]) -> Vec<u16> {
    let shifted: Vec<Vec<usize>> = cycles
        .iter()
        .map(|c| c.iter().map(|&i| i - 1).collect())
        .collect();
    let refs: Vec<&[usize]> = shifted.iter().map(|c| c.as_slice()).collect();
    cycles_to_images(degree, &refs)
}

/// `K = <a, x, y> <= A7` with `a = (5 6 7)`, `x = (1 2 3 4)(5 6)`,
/// `y = (1 2)(3 4)`. Labels `a`, `x`, `y` and `x2 = x^2`.
pub fn k_a7() -> Result<(GroupHandle, WitnessElements)> {
    let a = one_based(7, &[&[5, 6, 7]]);
    let x = one_based(7, &[&[1, 2, 3, 4], &[5, 6]]);
    let y = one_based(7, &[&[1, 2], &[3, 4]]);
    let g = GroupHandle::enumerate(Backend::Perm { degree: 7 }, &[a.clone(), x.clone(), y.clone()], DEFAULT_CAP)?;
    let mut w = WitnessElements::default();
    let id = |raw: &[u16]| g.id_of(raw).expect("generator is in the group");
    w.put(&g, "a", id(&a), 3)?;
    w.put(&g, "x", id(&x), 4)?;
    w.put(&g, "y", id(&y), 2)?;
    w.put(&g, "x2", g.pow(id(&x), 2), 2)?;
    Ok((g, w))
}

/// The 4-cycle `((1 2)(3 4), (5 6 7), (1 3)(2 4), (5 6 8))` located in `g`,
/// which must be a permutation group on 8 points containing it.
pub fn a8_cycle(g: &GroupHandle) -> Option<[Id; 4]> {
    let raw = [
        one_based(8, &[&[1, 2], &[3, 4]]),
        one_based(8, &[&[5, 6, 7]]),
        one_based(8, &[&[1, 3], &[2, 4]]),
        one_based(8, &[&[5, 6, 8]]),
    ];
    let mut out = [0; 4];
    for (o, r) in out.iter_mut().zip(&raw) {
        *o = g.id_of(r)?;
    }
    Some(out)
}

/// `PSL(3,q)` for `q` in `{3, 5}` with the labelled elements
/// `a = I + E13`, `x = diag(w, w^-2, w)`, `g = I + E23` and `b = g^-1 x g`.
pub fn psl3_witnesses(q: u32) -> Result<(GroupHandle, WitnessElements)> {
    if q != 3 && q != 5 {
        return Err(Error::UnsupportedQ(q));
    }
    let field = shared_field(q)?;
    let p = field.characteristic() as usize;
    let s = MatrixSpace::new(3, field.clone());
    let w = field.generator();
    let a = s.transvection(0, 2, 1);
    let x = s.diag(&[w, field.pow(w, -2), w]);
    let gm = s.transvection(1, 2, 1);
    let b = s.mul(&s.mul(&s.inverse(&gm), &x), &gm);

    let group = psl(3, q, DEFAULT_CAP)?;
    let find = |m: &[u16]| {
        group
            .id_of(&projective_image(&field, 3, m))
            .ok_or_else(|| Error::InvalidWitness("matrix not in PSL(3,q)".into()))
    };
    let xo = (q as usize - 1) / gcd(3, q as usize - 1);
    let mut wit = WitnessElements::default();
    wit.put(&group, "a", find(&a)?, p)?;
    wit.put(&group, "x", find(&x)?, xo)?;
    wit.put(&group, "g", find(&gm)?, p)?;
    wit.put(&group, "b", find(&b)?, xo)?;
    Ok((group, wit))
}

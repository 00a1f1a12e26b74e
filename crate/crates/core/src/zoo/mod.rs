//! Named groups: small permutation families, matrix groups over finite
//! fields, the Suzuki group Sz(8), sporadic groups from generator files and
//! labelled witness elements.

mod linear;
mod sporadic;
mod witness;

pub use linear::{projective_image, psl, psu3, sl, suzuki, MatrixSpace};
pub use sporadic::{load_generators, GeneratorFile};
pub use witness::{a8_cycle, k_a7, psl3_witnesses, WitnessElements};

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::expr::GroupExpr;
use crate::field::{gcd, FieldTable};
use crate::group::{cycles_to_images, Backend, GroupHandle};

/// A built group plus labelled elements when the constructor defines them.
#[derive(Clone, Debug)]
pub struct Built {
    pub group: GroupHandle,
    pub witnesses: Option<WitnessElements>,
}

pub fn field(p: u32, f: u32) -> Result<FieldTable> {
    FieldTable::new(p, f)
}

pub(crate) fn shared_field(q: u32) -> Result<Arc<FieldTable>> {
    let (p, f) = crate::field::prime_power(q as u64).ok_or(Error::UnsupportedQ(q))?;
    Ok(Arc::new(FieldTable::new(p as u32, f)?))
}

fn perm_group(degree: usize, gens: Vec<Vec<u16>>, cap: usize) -> Result<GroupHandle> {
    let gens = if gens.is_empty() {
        vec![(0..degree as u16).collect()]
    } else {
        gens
    };
    GroupHandle::enumerate(Backend::Perm { degree }, &gens, cap)
}

pub fn cyclic(n: usize, cap: usize) -> Result<GroupHandle> {
    let c: Vec<usize> = (0..n).collect();
    perm_group(n.max(1), vec![cycles_to_images(n.max(1), &[&c])], cap)
}

/// `C_p^k` on `k` disjoint `p`-cycles.
pub fn elementary(p: usize, k: usize, cap: usize) -> Result<GroupHandle> {
    let gens = (0..k)
        .map(|i| {
            let c: Vec<usize> = (i * p..(i + 1) * p).collect();
            cycles_to_images(p * k, &[&c])
        })
        .collect();
    perm_group(p * k, gens, cap)
}

/// Dihedral group of order `order`.
pub fn dihedral(order: usize, cap: usize) -> Result<GroupHandle> {
    let n = order / 2;
    if n == 2 {
        return elementary(2, 2, cap);
    }
    let rot: Vec<usize> = (0..n).collect();
    let refl: Vec<Vec<usize>> = (1..n.div_ceil(2)).map(|i| vec![i, n - i]).collect();
    let refl: Vec<&[usize]> = refl.iter().map(|c| c.as_slice()).collect();
    perm_group(
        n,
        vec![cycles_to_images(n, &[&rot]), cycles_to_images(n, &refl)],
        cap,
    )
}

/// Regular representation on `1, i, j, k, -1, -i, -j, -k`.
pub fn quaternion(cap: usize) -> Result<GroupHandle> {
    let i = cycles_to_images(8, &[&[0, 1, 4, 5], &[2, 7, 6, 3]]);
    let j = cycles_to_images(8, &[&[0, 2, 4, 6], &[1, 3, 5, 7]]);
    perm_group(8, vec![i, j], cap)
}

pub fn alternating(n: usize, cap: usize) -> Result<GroupHandle> {
    if n < 3 {
        return perm_group(n.max(1), vec![], cap);
    }
    let three = cycles_to_images(n, &[&[0, 1, 2]]);
    let long: Vec<usize> = if n % 2 == 1 { (0..n).collect() } else { (1..n).collect() };
    perm_group(n, vec![three, cycles_to_images(n, &[&long])], cap)
}

pub fn symmetric(n: usize, cap: usize) -> Result<GroupHandle> {
    if n < 2 {
        return perm_group(1, vec![], cap);
    }
    let long: Vec<usize> = (0..n).collect();
    perm_group(
        n,
        vec![cycles_to_images(n, &[&long]), cycles_to_images(n, &[&[0, 1]])],
        cap,
    )
}

fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}

fn sl_order(n: u32, q: u64) -> u128 {
    let q = q as u128;
    let mut o = q.pow(n * (n - 1) / 2);
    for i in 2..=n {
        o *= q.pow(i) - 1;
    }
    o
}

/// Order the constructor must produce, where it is known in closed form.
pub fn expected_order(e: &GroupExpr) -> Option<u128> {
    use GroupExpr::*;
    Some(match e {
        Cyclic(n) => *n as u128,
        Elementary { p, k } => (*p as u128).pow(*k),
        Dihedral(n) => *n as u128,
        Q8 => 8,
        Alternating(n) => (factorial(*n as u64) / 2).max(1),
        Symmetric(n) => factorial(*n as u64),
        SL { n, q } => sl_order(*n, *q as u64),
        PSL { n, q } => sl_order(*n, *q as u64) / gcd(*n as usize, *q as usize - 1) as u128,
        PSU { q } => {
            let q = *q as u128;
            q.pow(3) * (q * q - 1) * (q.pow(3) + 1) / gcd(3, q as usize + 1) as u128
        }
        Suzuki(q) => {
            let q = *q as u128;
            q * q * (q - 1) * (q * q + 1)
        }
        M11 => 7920,
        M12 => 95040,
        M22 => 443520,
        J1 => 175560,
        KA7 => 24,
        Direct(a, b) => expected_order(a)? * expected_order(b)?,
        Central(a, b) => expected_order(a)? * expected_order(b)? / 2,
        QuoCyc(_) => return None,
    })
}

/// Builds the group named by `e` and checks its order against
/// [`expected_order`].
pub fn build_named(e: &GroupExpr, cap: usize) -> Result<Built> {
    if let Some(want) = expected_order(e) {
        if want > cap as u128 {
            return Err(Error::CapExceeded { cap });
        }
    }
    let built = build_unchecked(e, cap)?;
    if let Some(want) = expected_order(e) {
        if built.group.order() as u128 != want {
            return Err(Error::OrderMismatch {
                name: e.to_string(),
                expected: want as usize,
                got: built.group.order(),
            });
        }
    }
    Ok(built)
}

fn plain(group: GroupHandle) -> Built {
    Built {
        group,
        witnesses: None,
    }
}

fn build_unchecked(e: &GroupExpr, cap: usize) -> Result<Built> {
    use GroupExpr::*;
    let g = match e {
        Cyclic(n) => cyclic(*n as usize, cap)?,
        Elementary { p, k } => elementary(*p as usize, *k as usize, cap)?,
        Dihedral(n) => dihedral(*n as usize, cap)?,
        Q8 => quaternion(cap)?,
        Alternating(n) => alternating(*n as usize, cap)?,
        Symmetric(n) => symmetric(*n as usize, cap)?,
        SL { n, q } => sl(*n as usize, *q, cap)?,
        PSL { n, q } => psl(*n as usize, *q, cap)?,
        PSU { q } => psu3(*q, cap)?,
        Suzuki(q) => suzuki(*q, cap)?,
        M11 => sporadic::named("m11", cap)?,
        M12 => sporadic::named("m12", cap)?,
        M22 => sporadic::named("m22", cap)?,
        J1 => sporadic::named("j1", cap)?,
        KA7 => {
            let (group, w) = k_a7()?;
            return Ok(Built {
                group,
                witnesses: Some(w),
            });
        }
        Direct(a, b) => {
            let a = build_named(a, cap)?.group;
            let b = build_named(b, cap)?.group;
            a.direct_product(&b)?
        }
        Central(a, b) => {
            let a = build_named(a, cap)?.group;
            let b = build_named(b, cap)?.group;
            let (Some(z1), Some(z2)) = (a.central_involution(), b.central_involution()) else {
                return Err(Error::Semantic(format!(
                    "{e}: both factors need a central involution"
                )));
            };
            a.central_product(&b, z1, z2)?
        }
        QuoCyc(a) => {
            let a = build_named(a, cap)?.group;
            let cyc = crate::epg::MaxCyclicCatalog::new(&a).cyc().clone();
            a.quotient(&cyc)?.0
        }
    };
    Ok(plain(g))
}

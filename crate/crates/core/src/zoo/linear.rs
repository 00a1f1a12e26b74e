//! Matrix groups. `SL(n,q)` and `Sz(q)` are closed as matrices; the
//! projective groups act on the points of the projective space, which kills
//! the scalar kernel.

use std::sync::Arc;

use super::shared_field;
use crate::error::{Error, Result};
use crate::field::FieldTable;
use crate::group::{Backend, GroupHandle};

/// `n x n` matrices over one field, row-major, entries as field indices.
#[derive(Clone, Debug)]
pub struct MatrixSpace {
    pub n: usize,
    pub field: Arc<FieldTable>,
}

impl MatrixSpace {
    pub fn new(n: usize, field: Arc<FieldTable>) -> Self {
        MatrixSpace { n, field }
    }

    pub fn identity(&self) -> Vec<u16> {
        let mut m = vec![0; self.n * self.n];
        for i in 0..self.n {
            m[i * self.n + i] = 1;
        }
        m
    }

    /// `I + c E_ij`.
    pub fn transvection(&self, i: usize, j: usize, c: u16) -> Vec<u16> {
        let mut m = self.identity();
        m[i * self.n + j] = c;
        m
    }

    pub fn diag(&self, d: &[u16]) -> Vec<u16> {
        let mut m = vec![0; self.n * self.n];
        for (i, &x) in d.iter().enumerate() {
            m[i * self.n + i] = x;
        }
        m
    }

    pub fn from_rows(&self, rows: &[&[u16]]) -> Vec<u16> {
        rows.iter().flat_map(|r| r.iter().copied()).collect()
    }

    pub fn backend(&self) -> Backend {
        Backend::Matrix {
            dim: self.n,
            field: self.field.clone(),
        }
    }

    pub fn mul(&self, a: &[u16], b: &[u16]) -> Vec<u16> {
        self.backend().compose(a, b)
    }

    pub fn det(&self, a: &[u16]) -> u16 {
        self.backend().determinant(a)
    }

    /// Inverse by repeated multiplication; only used on small generator sets.
    pub fn inverse(&self, a: &[u16]) -> Vec<u16> {
        let id = self.identity();
        let mut prev = id.clone();
        let mut cur = a.to_vec();
        while cur != id {
            prev = cur.clone();
            cur = self.mul(&cur, a);
        }
        prev
    }

    pub fn transpose(&self, a: &[u16]) -> Vec<u16> {
        let n = self.n;
        (0..n * n).map(|k| a[(k % n) * n + k / n]).collect()
    }

    /// Entrywise `x -> x^e`.
    pub fn frobenius(&self, a: &[u16], e: i64) -> Vec<u16> {
        a.iter().map(|&x| self.field.pow(x, e)).collect()
    }
}

/// Normalised points of `PG(n-1, q)` and their indices.
struct ProjectiveSpace {
    n: usize,
    field: Arc<FieldTable>,
    points: Vec<Vec<u16>>,
    index_of_code: Vec<u32>,
}

impl ProjectiveSpace {
    fn new(n: usize, field: Arc<FieldTable>) -> Self {
        let q = field.order();
        let total = q.pow(n as u32);
        let mut points = Vec::new();
        let mut index_of_code = vec![u32::MAX; total];
        for code in 1..total {
            let v = decode(code, q, n);
            let lead = v.iter().copied().find(|&e| e != 0).unwrap();
            if lead == 1 {
                index_of_code[code] = points.len() as u32;
                points.push(v);
            }
        }
        ProjectiveSpace {
            n,
            field,
            points,
            index_of_code,
        }
    }

    fn image(&self, m: &[u16]) -> Vec<u16> {
        let f = &self.field;
        let n = self.n;
        let mut w = vec![0u16; n];
        self.points
            .iter()
            .map(|v| {
                crate::group::vector_times_matrix(f, v, m, n, &mut w);
                let lead = w.iter().copied().find(|&e| e != 0).unwrap();
                let s = f.inv(lead).unwrap();
                let code = w
                    .iter()
                    .rev()
                    .fold(0usize, |acc, &e| acc * f.order() + f.mul(e, s) as usize);
                self.index_of_code[code] as u16
            })
            .collect()
    }
}

fn decode(mut code: usize, q: usize, n: usize) -> Vec<u16> {
    (0..n)
        .map(|_| {
            let e = (code % q) as u16;
            code /= q;
            e
        })
        .collect()
}

/// The permutation induced by `m` on projective points.
pub fn projective_image(field: &Arc<FieldTable>, n: usize, m: &[u16]) -> Vec<u16> {
    ProjectiveSpace::new(n, field.clone()).image(m)
}

/// Transvections `I + c E_ij` with `c` running over an `F_p`-basis of the
/// field; they generate `SL(n,q)`.
fn sl_generators(space: &MatrixSpace) -> Vec<Vec<u16>> {
    let f = &space.field;
    let basis: Vec<u16> = (0..f.degree() as i64).map(|k| f.w_pow(k)).collect();
    let mut gens = Vec::new();
    for i in 0..space.n {
        for j in 0..space.n {
            if i != j {
                for &c in &basis {
                    gens.push(space.transvection(i, j, c));
                }
            }
        }
    }
    if gens.is_empty() {
        gens.push(space.identity());
    }
    gens
}

pub fn sl(n: usize, q: u32, cap: usize) -> Result<GroupHandle> {
    let space = MatrixSpace::new(n, shared_field(q)?);
    GroupHandle::enumerate(space.backend(), &sl_generators(&space), cap)
}

pub fn psl(n: usize, q: u32, cap: usize) -> Result<GroupHandle> {
    let field = shared_field(q)?;
    let space = MatrixSpace::new(n, field.clone());
    let proj = ProjectiveSpace::new(n, field);
    if proj.points.len() > u16::MAX as usize {
        return Err(Error::UnsupportedQ(q));
    }
    let gens: Vec<Vec<u16>> = sl_generators(&space).iter().map(|m| proj.image(m)).collect();
    GroupHandle::enumerate(
        Backend::Perm {
            degree: proj.points.len(),
        },
        &gens,
        cap,
    )
}

/// Generators of `SU(3,q)` for the form with antidiagonal Gram matrix `J`:
/// all upper unitriangular isometries, `-J` and the torus element
/// `diag(l, l^(q-1), l^-q)`.
pub fn su3_generators(q: u32) -> Result<(MatrixSpace, Vec<Vec<u16>>)> {
    let field = shared_field(q * q)?;
    let s = MatrixSpace::new(3, field.clone());
    let f = &*field;
    let q = q as i64;
    let mut gens = Vec::new();
    for alpha in 0..f.order() as u16 {
        for beta in 0..f.order() as u16 {
            let lhs = f.add(f.add(f.pow(beta, q), beta), f.pow(alpha, q + 1));
            if lhs == 0 && (alpha, beta) != (0, 0) {
                let ga = f.neg(f.pow(alpha, q));
                gens.push(s.from_rows(&[&[1, alpha, beta], &[0, 1, ga], &[0, 0, 1]]));
            }
        }
    }
    let m1 = f.neg(1);
    gens.push(s.from_rows(&[&[0, 0, m1], &[0, m1, 0], &[m1, 0, 0]]));
    let l = f.generator();
    gens.push(s.diag(&[l, f.pow(l, q - 1), f.pow(l, -q)]));

    let j = s.from_rows(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
    for m in &gens {
        let conj_t = s.transpose(&s.frobenius(m, q));
        if s.mul(&s.mul(m, &j), &conj_t) != j || s.det(m) != 1 {
            return Err(Error::InvalidGenerator(s.backend().render(m)));
        }
    }
    Ok((s, gens))
}

pub fn psu3(q: u32, cap: usize) -> Result<GroupHandle> {
    let (space, gens) = su3_generators(q)?;
    let proj = ProjectiveSpace::new(3, space.field.clone());
    if proj.points.len() > u16::MAX as usize {
        return Err(Error::UnsupportedQ(q));
    }
    let gens: Vec<Vec<u16>> = gens.iter().map(|m| proj.image(m)).collect();
    GroupHandle::enumerate(
        Backend::Perm {
            degree: proj.points.len(),
        },
        &gens,
        cap,
    )
}

/// `Sz(q)`, `q = 2^(2m+1)`, as 4x4 matrices: the Weyl element `W`, the torus
/// `D(l) = diag(l^(1+r), l^r, l^-r, l^-(1+r))` with `r = 2^m`, and the
/// unipotent `T(a,b)` for `a, b` in `{1, w}`, where `theta(x) = x^(2r)`.
pub fn suzuki(q: u32, cap: usize) -> Result<GroupHandle> {
    let Some((2, f)) = crate::field::prime_power(q as u64) else {
        return Err(Error::UnsupportedQ(q));
    };
    if f % 2 == 0 || f < 3 {
        return Err(Error::UnsupportedQ(q));
    }
    let field = shared_field(q)?;
    let s = MatrixSpace::new(4, field.clone());
    let fl = &*field;
    let r = 1i64 << ((f - 1) / 2);
    let theta = |x: u16| fl.pow(x, 2 * r);
    let t = |a: u16, b: u16| {
        let ta = theta(a);
        let last0 = fl.add(fl.add(fl.mul(fl.mul(a, a), ta), fl.mul(a, b)), theta(b));
        let last1 = fl.add(fl.mul(a, ta), b);
        s.from_rows(&[
            &[1, 0, 0, 0],
            &[a, 1, 0, 0],
            &[b, ta, 1, 0],
            &[last0, last1, a, 1],
        ])
    };
    let l = fl.generator();
    let d = s.diag(&[
        fl.pow(l, 1 + r),
        fl.pow(l, r),
        fl.pow(l, -r),
        fl.pow(l, -1 - r),
    ]);
    let w = s.from_rows(&[&[0, 0, 0, 1], &[0, 0, 1, 0], &[0, 1, 0, 0], &[1, 0, 0, 0]]);
    let gens = vec![w, d, t(1, 0), t(0, 1), t(l, 0)];
    GroupHandle::enumerate(s.backend(), &gens, cap)
}

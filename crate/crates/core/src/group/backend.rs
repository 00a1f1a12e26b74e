use std::fmt::Write;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::FieldTable;

/// How raw elements are stored and composed.
#[derive(Clone, Debug)]
pub enum Backend {
    /// Permutations of `0..degree` as image lists.
    Perm { degree: usize },
    /// `dim x dim` matrices over a finite field, row-major, entries as field
    /// element indices.
    Matrix { dim: usize, field: Arc<FieldTable> },
}

/// Converts 0-based cycles into an image list of the given degree.
pub fn cycles_to_images(degree: usize, cycles: &[&[usize]]) -> Vec<u16> {
    let mut img: Vec<u16> = (0..degree as u16).collect();
    for c in cycles {
        for i in 0..c.len() {
            img[c[i]] = c[(i + 1) % c.len()] as u16;
        }
    }
    img
}

impl Backend {
    pub fn width(&self) -> usize {
        match self {
            Backend::Perm { degree } => *degree,
            Backend::Matrix { dim, .. } => dim * dim,
        }
    }

    pub fn identity(&self) -> Vec<u16> {
        match self {
            Backend::Perm { degree } => (0..*degree as u16).collect(),
            Backend::Matrix { dim, .. } => {
                let mut m = vec![0u16; dim * dim];
                for i in 0..*dim {
                    m[i * dim + i] = 1;
                }
                m
            }
        }
    }

    pub fn validate(&self, raw: &[u16]) -> Result<()> {
        match self {
            Backend::Perm { degree } => {
                let mut seen = vec![false; *degree];
                for &i in raw {
                    let i = i as usize;
                    if i >= *degree || seen[i] {
                        return Err(Error::InvalidGenerator(format!("{raw:?}")));
                    }
                    seen[i] = true;
                }
                Ok(())
            }
            Backend::Matrix { field, .. } => {
                if raw.iter().any(|&e| e as usize >= field.order()) {
                    return Err(Error::InvalidGenerator(format!("{raw:?}")));
                }
                if self.determinant(raw) == 0 {
                    return Err(Error::InvalidGenerator("singular matrix".into()));
                }
                Ok(())
            }
        }
    }

    #[inline]
    pub fn compose_into(&self, x: &[u16], y: &[u16], out: &mut [u16]) {
        match self {
            Backend::Perm { .. } => {
                for (o, &xi) in out.iter_mut().zip(x) {
                    *o = y[xi as usize];
                }
            }
            Backend::Matrix { dim, field } => {
                let n = *dim;
                for i in 0..n {
                    for j in 0..n {
                        let mut acc = 0u16;
                        for k in 0..n {
                            let a = x[i * n + k];
                            if a != 0 {
                                acc = field.add(acc, field.mul(a, y[k * n + j]));
                            }
                        }
                        out[i * n + j] = acc;
                    }
                }
            }
        }
    }

    pub fn compose(&self, x: &[u16], y: &[u16]) -> Vec<u16> {
        let mut out = vec![0u16; self.width()];
        self.compose_into(x, y, &mut out);
        out
    }

    pub fn same_kind(&self, other: &Backend) -> bool {
        match (self, other) {
            (Backend::Perm { degree: a }, Backend::Perm { degree: b }) => a == b,
            (Backend::Matrix { dim: a, field: f }, Backend::Matrix { dim: b, field: g }) => {
                a == b && f == g
            }
            _ => false,
        }
    }

    /// Determinant by Gaussian elimination (matrix backend only).
    pub fn determinant(&self, raw: &[u16]) -> u16 {
        let Backend::Matrix { dim, field } = self else {
            return 1;
        };
        let n = *dim;
        let mut m = raw.to_vec();
        let mut det = 1u16;
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| m[r * n + col] != 0) else {
                return 0;
            };
            if piv != col {
                for j in 0..n {
                    m.swap(piv * n + j, col * n + j);
                }
                det = field.neg(det);
            }
            let p = m[col * n + col];
            det = field.mul(det, p);
            let pinv = field.inv(p).expect("nonzero pivot");
            for r in col + 1..n {
                let factor = field.mul(m[r * n + col], pinv);
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    let sub = field.mul(factor, m[col * n + j]);
                    m[r * n + j] = field.sub(m[r * n + j], sub);
                }
            }
        }
        det
    }

    /// Degree of the permutation representation used by
    /// [`Backend::permutation_image`].
    pub fn permutation_degree(&self) -> usize {
        match self {
            Backend::Perm { degree } => *degree,
            Backend::Matrix { dim, field } => field.order().pow(*dim as u32) - 1,
        }
    }

    /// Matrices act on nonzero row vectors, indexed by their base-`q`
    /// encoding minus one.
    pub fn permutation_image(&self, raw: &[u16]) -> Vec<u16> {
        match self {
            Backend::Perm { .. } => raw.to_vec(),
            Backend::Matrix { dim, field } => {
                let n = *dim;
                let q = field.order();
                let count = q.pow(n as u32);
                let mut img = Vec::with_capacity(count - 1);
                let mut v = vec![0u16; n];
                let mut w = vec![0u16; n];
                for code in 1..count {
                    let mut c = code;
                    for slot in v.iter_mut() {
                        *slot = (c % q) as u16;
                        c /= q;
                    }
                    vector_times_matrix(field, &v, raw, n, &mut w);
                    let enc = w.iter().rev().fold(0usize, |acc, &e| acc * q + e as usize);
                    img.push((enc - 1) as u16);
                }
                img
            }
        }
    }

    pub fn render(&self, raw: &[u16]) -> String {
        match self {
            Backend::Perm { degree } => {
                let mut seen = vec![false; *degree];
                let mut out = String::new();
                for start in 0..*degree {
                    if seen[start] || raw[start] as usize == start {
                        continue;
                    }
                    out.push('(');
                    let mut i = start;
                    let mut first = true;
                    while !seen[i] {
                        seen[i] = true;
                        if !first {
                            out.push(',');
                        }
                        let _ = write!(out, "{}", i + 1);
                        first = false;
                        i = raw[i] as usize;
                    }
                    out.push(')');
                }
                if out.is_empty() {
                    out.push_str("()");
                }
                out
            }
            Backend::Matrix { dim, field } => {
                let n = *dim;
                let entry = |e: u16| -> String {
                    if field.degree() == 1 {
                        e.to_string()
                    } else if e == 0 {
                        "0".into()
                    } else {
                        format!("w^{}", field.log(e).unwrap())
                    }
                };
                let rows: Vec<String> = (0..n)
                    .map(|i| {
                        let cells: Vec<String> = (0..n).map(|j| entry(raw[i * n + j])).collect();
                        format!("[{}]", cells.join(","))
                    })
                    .collect();
                format!("[{}]", rows.join(","))
            }
        }
    }
}

impl PartialEq for Backend {
    fn eq(&self, other: &Self) -> bool {
        self.same_kind(other)
    }
}

impl Eq for Backend {}

pub(crate) fn vector_times_matrix(field: &FieldTable, v: &[u16], m: &[u16], n: usize, out: &mut [u16]) {
    for j in 0..n {
        let mut acc = 0u16;
        for k in 0..n {
            if v[k] != 0 {
                acc = field.add(acc, field.mul(v[k], m[k * n + j]));
            }
        }
        out[j] = acc;
    }
}

//! Sporadic groups from checksummed generator files in `data/`.

use sha2::{Digest, Sha256};

use super::shared_field;
use crate::error::{Error, Result};
use crate::group::{Backend, GroupHandle};

const MANIFEST: &str = include_str!("../../data/MANIFEST");

const FILES: &[(&str, &str)] = &[
    ("m11", include_str!("../../data/m11.gens")),
    ("m12", include_str!("../../data/m12.gens")),
    ("m22", include_str!("../../data/m22.gens")),
    ("j1", include_str!("../../data/j1.gens")),
];

/// A parsed generator file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorFile {
    pub backend: Backend,
    pub generators: Vec<Vec<u16>>,
}

/// Parses a generator file. The first line is either `degree N` (then each
/// line is a 0-based image list) or `matrix n q` (then each line holds the
/// `n*n` entries of one matrix, row-major).
pub fn load_generators(name: &str, text: &str) -> Result<GeneratorFile> {
    let bad = |msg: &str| Error::DataFile(name.to_string(), msg.to_string());
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header: Vec<&str> = lines
        .next()
        .ok_or_else(|| bad("empty file"))?
        .split_whitespace()
        .collect();
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad(&format!("bad number `{s}`")));
    let (backend, width) = match header.as_slice() {
        ["degree", n] => {
            let n = num(n)?;
            (Backend::Perm { degree: n }, n)
        }
        ["matrix", n, q] => {
            let n = num(n)?;
            let field = shared_field(num(q)? as u32)?;
            (Backend::Matrix { dim: n, field }, n * n)
        }
        _ => return Err(bad("bad header")),
    };
    let mut generators = Vec::new();
    for line in lines {
        let g = line
            .split_whitespace()
            .map(|s| num(s).map(|v| v as u16))
            .collect::<Result<Vec<u16>>>()?;
        if g.len() != width {
            return Err(bad("generator has the wrong length"));
        }
        backend
            .validate(&g)
            .map_err(|e| bad(&e.to_string()))?;
        generators.push(g);
    }
    Ok(GeneratorFile {
        backend,
        generators,
    })
}

fn manifest_digest(file: &str) -> Option<&'static str> {
    MANIFEST
        .lines()
        .filter(|l| !l.starts_with('#'))
        .find_map(|l| {
            let mut it = l.split_whitespace();
            let digest = it.next()?;
            (it.next()? == file).then_some(digest)
        })
}

pub(super) fn named(name: &str, cap: usize) -> Result<GroupHandle> {
    let file = format!("{name}.gens");
    let (_, text) = FILES
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::UnknownSpec(name.to_string()))?;
    let want = manifest_digest(&file).ok_or_else(|| Error::DataFile(file.clone(), "not in MANIFEST".into()))?;
    let got = hex::encode(Sha256::digest(text.as_bytes()));
    if got != want {
        return Err(Error::DataFile(file, "checksum mismatch".into()));
    }
    let g = load_generators(&file, text)?;
    GroupHandle::enumerate(g.backend, &g.generators, cap)
}

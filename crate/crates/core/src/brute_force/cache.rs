//! Binary cache of enumerated groups.
//!
//! Layout, all integers little-endian:
//!
//! ```text
//! magic   b"ZGRP"
//! version u8 (= 1)
//! family  u8 (0 = psl2, 1 = sz)
//! q       u32
//! order   u64
//! dim     u8
//! order × dim² × u16   packed entries of each canonical element, in index order
//! ```
//!
//! Classes and generators are recomputed on load, so a cached group behaves
//! exactly like a freshly enumerated one.

use std::fs;
use std::io::{self, BufReader, BufWriter, Read, Write};
use std::path::Path;

use super::group::MatrixGroup;
use super::matrix::MatrixElement;
use super::psl2::{enumerate_psl2, psl2_arith, psl2_generators};
use super::suzuki::{generate_sz, sz_arith, sz_generator_sets};
use super::{BruteForceError, BruteForceGroup};
use crate::closed_form::{Family, GroupSpec};

const MAGIC: &[u8; 4] = b"ZGRP";
const VERSION: u8 = 1;

pub fn write_cache<W: Write>(group: &BruteForceGroup, out: W) -> Result<(), BruteForceError> {
    let mut out = BufWriter::new(out);
    let spec = group.spec();
    out.write_all(MAGIC)?;
    out.write_all(&[VERSION])?;
    out.write_all(&[match spec.family {
        Family::Psl2 => 0,
        Family::Sz => 1,
    }])?;
    out.write_all(&(spec.q as u32).to_le_bytes())?;
    out.write_all(&(group.order() as u64).to_le_bytes())?;
    out.write_all(&[group.arith().dim() as u8])?;
    for m in group.elements() {
        for &e in m.packed() {
            out.write_all(&e.to_le_bytes())?;
        }
    }
    out.flush()?;
    Ok(())
}

fn read_array<R: Read, const N: usize>(input: &mut R) -> io::Result<[u8; N]> {
    let mut buf = [0u8; N];
    input.read_exact(&mut buf)?;
    Ok(buf)
}

pub fn read_cache<R: Read>(input: R) -> Result<BruteForceGroup, BruteForceError> {
    let mut input = BufReader::new(input);
    let invalid = |msg: &str| BruteForceError::Invalid(format!("cache: {msg}"));
    if &read_array::<_, 4>(&mut input)? != MAGIC {
        return Err(invalid("bad magic"));
    }
    if read_array::<_, 1>(&mut input)?[0] != VERSION {
        return Err(invalid("unsupported version"));
    }
    let family = match read_array::<_, 1>(&mut input)?[0] {
        0 => Family::Psl2,
        1 => Family::Sz,
        _ => return Err(invalid("unknown family")),
    };
    let q = u32::from_le_bytes(read_array(&mut input)?) as u64;
    let order = u64::from_le_bytes(read_array(&mut input)?);
    let dim = read_array::<_, 1>(&mut input)?[0] as usize;
    let spec = GroupSpec::new(family, q)?;
    if order as u128 != spec.group_order {
        return Err(invalid("order does not match header family and q"));
    }
    let (arith, generator_sets) = match family {
        Family::Psl2 => {
            let arith = psl2_arith(&spec)?;
            let gens = psl2_generators(&arith);
            (arith, vec![gens])
        }
        Family::Sz => {
            let arith = sz_arith(&spec)?;
            let sets = sz_generator_sets(&arith)?;
            (arith, sets)
        }
    };
    if dim != arith.dim() {
        return Err(invalid("dimension does not match family"));
    }
    let mut packed = vec![0u16; dim * dim];
    let mut elements = Vec::with_capacity(order as usize);
    for _ in 0..order {
        for e in packed.iter_mut() {
            *e = u16::from_le_bytes(read_array(&mut input)?);
        }
        elements.push(MatrixElement::from_packed(dim, &packed));
    }
    let mut last_err = invalid("no generator set");
    for gens in generator_sets {
        match MatrixGroup::from_elements(arith.clone(), elements.clone(), &gens) {
            Ok(group) => return BruteForceGroup::new(spec, group),
            Err(e) => last_err = e,
        }
    }
    Err(last_err)
}

/// Reads `<dir>/<family>-<q>.bin` if present, otherwise enumerates the group
/// and writes that file.
pub fn load_or_build(
    family: Family,
    q: u64,
    dir: &Path,
    allow_large: bool,
) -> Result<BruteForceGroup, BruteForceError> {
    let path = dir.join(format!("{family}-{q}.bin"));
    if path.exists() {
        return read_cache(fs::File::open(&path)?);
    }
    let group = match family {
        Family::Psl2 => enumerate_psl2(q)?,
        Family::Sz => generate_sz(q, allow_large)?,
    };
    fs::create_dir_all(dir)?;
    write_cache(&group, fs::File::create(&path)?)?;
    Ok(group)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_psl2() {
        let g = enumerate_psl2(9).unwrap();
        let mut buf = Vec::new();
        write_cache(&g, &mut buf).unwrap();
        assert_eq!(buf.len(), 4 + 1 + 1 + 4 + 8 + 1 + 360 * 4 * 2);
        let h = read_cache(buf.as_slice()).unwrap();
        assert_eq!(h.elements(), g.elements());
        assert_eq!(h.classes(), g.classes());
        assert_eq!(h.generators(), g.generators());
    }

    #[test]
    fn rejects_corrupt_input() {
        assert!(matches!(
            read_cache(&b"NOPE"[..]),
            Err(BruteForceError::Invalid(_))
        ));
        let g = enumerate_psl2(5).unwrap();
        let mut buf = Vec::new();
        write_cache(&g, &mut buf).unwrap();
        buf.truncate(buf.len() - 3);
        assert!(matches!(read_cache(buf.as_slice()), Err(BruteForceError::Io(_))));
    }
}

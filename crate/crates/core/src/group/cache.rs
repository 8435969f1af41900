//! Binary cache of an enumerated group and its class partition.
//!
//! Layout, all integers little-endian:
//!
//! ```text
//! header   "CXQT" | version u32 | label (u32 len + utf8) | rank u32 | order u64 | roots u32
//! body     ambient_dim u32
//!          roots: per coordinate u32 len + scalar text
//!          simple root count u32
//!          element keys: order × rank × u16 (simple-root images)
//!          parents: order × (u32 parent, u8 generator)
//!          classes: count u32, then count × (rep u32, size u64), then order × u32 class id
//! trailer  SHA-256 of the body
//! ```

use std::path::Path;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use super::{ClassPartition, FiniteGroup, NO_PARENT};
use crate::error::{CacheError, Error, Result};
use crate::exact::Scalar;
use crate::roots::{RootSystem, RootSystemDocument};

pub const MAGIC: &[u8; 4] = b"CXQT";
pub const FORMAT_VERSION: u32 = 1;

const CHECKSUM_LEN: usize = 32;
const CLOSURE_SAMPLES: usize = 64;

fn put_u32(out: &mut Vec<u8>, v: u32) {
    out.extend_from_slice(&v.to_le_bytes());
}

fn put_u64(out: &mut Vec<u8>, v: u64) {
    out.extend_from_slice(&v.to_le_bytes());
}

fn put_str(out: &mut Vec<u8>, s: &str) {
    put_u32(out, s.len() as u32);
    out.extend_from_slice(s.as_bytes());
}

/// Serializes a group, computing its class partition if needed.
pub fn encode(group: &FiniteGroup) -> Vec<u8> {
    let sys = group.system();
    let rank = group.rank();
    let order = group.order();

    let mut out = Vec::new();
    out.extend_from_slice(MAGIC);
    put_u32(&mut out, FORMAT_VERSION);
    put_str(&mut out, &sys.label().to_string());
    put_u32(&mut out, rank as u32);
    put_u64(&mut out, order as u64);
    put_u32(&mut out, sys.len() as u32);

    let mut body = Vec::new();
    put_u32(&mut body, sys.ambient_dim() as u32);
    for root in sys.roots() {
        for x in root {
            put_str(&mut body, &x.to_string());
        }
    }
    put_u32(&mut body, sys.simple_roots().len() as u32);
    for idx in 0..order as u32 {
        for e in group.simple_images(idx) {
            body.extend_from_slice(&e.to_le_bytes());
        }
    }
    for i in 0..order {
        put_u32(&mut body, group.parent[i]);
        body.push(group.via[i]);
    }
    let p = group.class_partition();
    put_u32(&mut body, p.len() as u32);
    for c in 0..p.len() {
        put_u32(&mut body, p.representative(c));
        put_u64(&mut body, p.size(c));
    }
    for &c in p.class_ids() {
        put_u32(&mut body, c);
    }

    let digest = Sha256::digest(&body);
    out.extend_from_slice(&body);
    out.extend_from_slice(&digest);
    out
}

pub fn cache_store(group: &FiniteGroup, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, encode(group))?;
    Ok(())
}

pub fn cache_load(path: impl AsRef<Path>) -> Result<FiniteGroup> {
    let path = path.as_ref();
    let bytes = std::fs::read(path)?;
    decode(&bytes).map_err(|e| match e {
        DecodeError::Cache(kind) => Error::Cache {
            path: path.to_path_buf(),
            kind,
        },
        DecodeError::Other(e) => e,
    })
}

pub(crate) enum DecodeError {
    Cache(CacheError),
    Other(Error),
}

impl From<CacheError> for DecodeError {
    fn from(e: CacheError) -> Self {
        DecodeError::Cache(e)
    }
}

impl From<Error> for DecodeError {
    fn from(e: Error) -> Self {
        DecodeError::Other(e)
    }
}

struct Reader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, n: usize) -> std::result::Result<&'a [u8], CacheError> {
        let end = self
            .pos
            .checked_add(n)
            .filter(|&e| e <= self.buf.len())
            .ok_or_else(|| CacheError::Malformed(format!("unexpected end at byte {}", self.pos)))?;
        let s = &self.buf[self.pos..end];
        self.pos = end;
        Ok(s)
    }

    fn u8(&mut self) -> std::result::Result<u8, CacheError> {
        Ok(self.take(1)?[0])
    }

    fn u16(&mut self) -> std::result::Result<u16, CacheError> {
        Ok(u16::from_le_bytes(self.take(2)?.try_into().unwrap()))
    }

    fn u32(&mut self) -> std::result::Result<u32, CacheError> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    fn u64(&mut self) -> std::result::Result<u64, CacheError> {
        Ok(u64::from_le_bytes(self.take(8)?.try_into().unwrap()))
    }

    fn string(&mut self) -> std::result::Result<String, CacheError> {
        let n = self.u32()? as usize;
        let raw = self.take(n)?;
        String::from_utf8(raw.to_vec())
            .map_err(|_| CacheError::Malformed("label is not utf-8".into()))
    }

    fn done(&self) -> bool {
        self.pos == self.buf.len()
    }
}

pub(crate) fn decode(bytes: &[u8]) -> std::result::Result<FiniteGroup, DecodeError> {
    let mut head = Reader { buf: bytes, pos: 0 };
    if head.take(4).map_err(|_| CacheError::BadMagic)? != MAGIC {
        return Err(CacheError::BadMagic.into());
    }
    let version = head.u32()?;
    if version != FORMAT_VERSION {
        return Err(CacheError::VersionMismatch {
            found: version,
            expected: FORMAT_VERSION,
        }
        .into());
    }
    let label = head.string()?;
    let rank = head.u32()? as usize;
    let order = head.u64()? as usize;
    let n_roots = head.u32()? as usize;

    let body_end = bytes
        .len()
        .checked_sub(CHECKSUM_LEN)
        .filter(|&e| e >= head.pos)
        .ok_or_else(|| CacheError::Malformed("missing checksum".into()))?;
    let body = &bytes[head.pos..body_end];
    if Sha256::digest(body).as_slice() != &bytes[body_end..] {
        return Err(CacheError::Checksum.into());
    }

    let mut r = Reader { buf: body, pos: 0 };
    let dim = r.u32()? as usize;
    let mut roots = Vec::with_capacity(n_roots);
    for _ in 0..n_roots {
        let root = (0..dim)
            .map(|_| -> std::result::Result<Scalar, DecodeError> {
                Ok(r.string()?.parse::<Scalar>()?)
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        roots.push(root);
    }
    let simple_count = r.u32()? as usize;
    if simple_count != rank {
        return Err(CacheError::Malformed("rank disagrees with simple roots".into()).into());
    }
    let doc = RootSystemDocument {
        label,
        rank,
        ambient_dim: dim,
        roots,
        simple_roots: (0..rank).collect(),
    };
    let system = RootSystem::from_document(doc)?;
    if system.len() != n_roots {
        return Err(CacheError::Malformed("repeated roots".into()).into());
    }

    let mut group = FiniteGroup::empty(Arc::new(system))?;
    let mut images = vec![0u16; rank];
    let mut keys = Vec::with_capacity(order);
    for _ in 0..order {
        for e in images.iter_mut() {
            *e = r.u16()?;
            if *e as usize >= n_roots {
                return Err(CacheError::Malformed("root index out of range".into()).into());
            }
        }
        keys.push(group.key_of_images(&images));
    }
    let mut links = Vec::with_capacity(order);
    for &key in &keys {
        let parent = r.u32()?;
        let via = r.u8()?;
        if group.index.contains_key(&key) {
            return Err(CacheError::Malformed("duplicate element".into()).into());
        }
        group.push(key, parent, via);
        links.push((parent, via));
    }
    // every element must be its parent times the recorded generator
    for (i, &(parent, via)) in links.iter().enumerate() {
        let ok = if parent == NO_PARENT {
            i == 0 && keys[0] == group.action.identity_key()
        } else {
            (parent as usize) < order
                && (via as usize) < rank
                && group.action.left_mul(keys[parent as usize], via as usize) == keys[i]
        };
        if !ok {
            return Err(CacheError::Malformed(format!("broken parent link at element {i}")).into());
        }
    }

    let n_classes = r.u32()? as usize;
    let mut reps = Vec::with_capacity(n_classes);
    let mut sizes = Vec::with_capacity(n_classes);
    for _ in 0..n_classes {
        reps.push(r.u32()?);
        sizes.push(r.u64()?);
    }
    let mut class_of = Vec::with_capacity(order);
    for _ in 0..order {
        let c = r.u32()?;
        if c as usize >= n_classes {
            return Err(CacheError::Malformed("class id out of range".into()).into());
        }
        class_of.push(c);
    }
    if !r.done() {
        return Err(CacheError::Malformed("trailing bytes in body".into()).into());
    }
    if sizes.iter().sum::<u64>() != order as u64 {
        return Err(CacheError::Malformed("class sizes do not sum to the order".into()).into());
    }

    let id = group.action.identity_key();
    group.generators = (0..rank)
        .map(|j| group.find(group.action.left_mul(id, j)))
        .collect::<Option<Vec<_>>>()
        .ok_or(CacheError::SampleClosure(0))?;

    let mut rng = ChaCha8Rng::seed_from_u64(order as u64);
    for _ in 0..CLOSURE_SAMPLES.min(order) {
        let idx = rng.gen_range(0..order) as u32;
        for j in 0..rank {
            if group
                .find(group.action.left_mul(group.key(idx), j))
                .is_none()
            {
                return Err(CacheError::SampleClosure(idx).into());
            }
        }
    }

    group.set_partition(ClassPartition::from_parts(class_of, reps, sizes));
    Ok(group)
}

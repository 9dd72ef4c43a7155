use std::sync::Arc;

use super::cube::Cube;
use super::layout::Layout;
use crate::{Error, Result};

/// Bytes before the tables: the order, then the signature digest (LE).
pub const HEADER_LEN: usize = 5;

/// Fixed-width byte encoding of a cube: header, then every symbol table in
/// signature order with one byte per cell.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Encoding(Vec<u8>);

impl Encoding {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn into_bytes(self) -> Vec<u8> {
        self.0
    }

    pub fn from_bytes(bytes: Vec<u8>) -> Encoding {
        Encoding(bytes)
    }

    /// The table part, without the header.
    pub fn tables(&self) -> &[u8] {
        &self.0[HEADER_LEN.min(self.0.len())..]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Lowercase hex, the on-disk compact model format.
    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(text: &str) -> Result<Encoding> {
        hex::decode(text.trim())
            .map(Encoding)
            .map_err(|e| Error::Encoding(format!("bad hex: {e}")))
    }
}

fn header(layout: &Layout) -> [u8; HEADER_LEN] {
    let d = layout.digest().to_le_bytes();
    [layout.order() as u8, d[0], d[1], d[2], d[3]]
}

pub fn encode(c: &Cube) -> Encoding {
    let mut bytes = Vec::with_capacity(HEADER_LEN + c.values().len());
    bytes.extend_from_slice(&header(c.layout()));
    bytes.extend_from_slice(c.values());
    Encoding(bytes)
}

/// Writes the encoding of a cube given as raw entries into `out`.
pub(crate) fn encode_into(layout: &Layout, values: &[u8], out: &mut Vec<u8>) {
    out.clear();
    out.extend_from_slice(&header(layout));
    out.extend_from_slice(values);
}

pub fn decode(layout: &Arc<Layout>, e: &Encoding) -> Result<Cube> {
    let expected = HEADER_LEN + layout.num_cells();
    if e.0.len() != expected {
        return Err(Error::Encoding(format!(
            "expected {expected} bytes, found {}",
            e.0.len()
        )));
    }
    if e.0[..HEADER_LEN] != header(layout) {
        return Err(Error::SignatureMismatch(format!(
            "encoding header {} does not match order {} and this signature",
            hex::encode(&e.0[..HEADER_LEN]),
            layout.order()
        )));
    }
    Cube::from_values(layout.clone(), e.0[HEADER_LEN..].to_vec())
}

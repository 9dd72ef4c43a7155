use std::sync::Arc;

use crate::fol::Signature;
use crate::ground::Cell;
use crate::{Error, Result};

/// Largest domain size the one-byte entry encoding can hold.
pub const MAX_ORDER: usize = 253;

/// Cell addressing for one signature over a fixed domain size: symbol
/// tables are laid out in signature order, each flattened row-major.
#[derive(Debug, PartialEq, Eq)]
pub struct Layout {
    signature: Signature,
    n: usize,
    offsets: Vec<usize>,
    arities: Vec<usize>,
    digest: u32,
}

impl Layout {
    /// Builds the layout. Orders down to 1 are accepted here so that
    /// degenerate structures can still be encoded and compared.
    pub fn new(signature: Signature, n: usize) -> Result<Arc<Layout>> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::DomainSize(n));
        }
        if let Some(&d) = signature.pinned.iter().find(|&&d| d as usize >= n) {
            return Err(Error::NumeralOutOfRange { numeral: d, n });
        }
        let arities: Vec<usize> = signature.symbols().map(|s| s.arity).collect();
        let mut offsets = Vec::with_capacity(arities.len() + 1);
        let mut total = 0usize;
        for &k in &arities {
            offsets.push(total);
            total += n.pow(k as u32);
        }
        offsets.push(total);
        let digest = signature_digest(&signature);
        Ok(Arc::new(Layout {
            signature,
            n,
            offsets,
            arities,
            digest,
        }))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn num_cells(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn num_symbols(&self) -> usize {
        self.arities.len()
    }

    pub fn arity(&self, symbol: usize) -> usize {
        self.arities[symbol]
    }

    pub fn is_relation(&self, symbol: usize) -> bool {
        self.signature.is_relation(symbol)
    }

    /// Cell index range of one symbol's table.
    pub fn symbol_range(&self, symbol: usize) -> std::ops::Range<usize> {
        self.offsets[symbol]..self.offsets[symbol + 1]
    }

    pub fn digest(&self) -> u32 {
        self.digest
    }

    pub fn is_pinned(&self, d: u8) -> bool {
        self.signature.pinned.contains(&d)
    }

    pub fn cell_index(&self, symbol: usize, args: &[u8]) -> usize {
        debug_assert_eq!(args.len(), self.arities[symbol]);
        let mut idx = 0usize;
        for &a in args {
            idx = idx * self.n + a as usize;
        }
        self.offsets[symbol] + idx
    }

    pub fn symbol_of(&self, cell: usize) -> usize {
        // offsets is sorted; the last offset <= cell names the symbol
        self.offsets.partition_point(|&o| o <= cell) - 1
    }

    /// Writes the arguments of `cell` into `out` and returns its symbol.
    pub fn decompose(&self, cell: usize, out: &mut [u8; 3]) -> usize {
        let symbol = self.symbol_of(cell);
        let k = self.arities[symbol];
        let mut rest = cell - self.offsets[symbol];
        for i in (0..k).rev() {
            out[i] = (rest % self.n) as u8;
            rest /= self.n;
        }
        symbol
    }

    pub fn cell(&self, index: usize) -> Cell {
        let mut args = [0u8; 3];
        let symbol = self.decompose(index, &mut args);
        Cell {
            symbol,
            args: args[..self.arities[symbol]].to_vec(),
        }
    }
}

/// FNV-1a over the symbol list; pinned elements are not part of the digest
/// since they do not change the table shapes.
fn signature_digest(sig: &Signature) -> u32 {
    let mut h: u32 = 0x811c_9dc5;
    let mut feed = |bytes: &[u8]| {
        for &b in bytes {
            h ^= b as u32;
            h = h.wrapping_mul(0x0100_0193);
        }
    };
    for s in sig.functions.iter() {
        feed(b"f");
        feed(s.name.as_bytes());
        feed(&[0, s.arity as u8]);
    }
    for s in sig.relations.iter() {
        feed(b"r");
        feed(s.name.as_bytes());
        feed(&[0, s.arity as u8]);
    }
    h
}

//! Text format for blocks of received symbols.
//!
//! ```text
//! rs 7 3 3 0xb
//! 1 2 4 3 6 7 5
//! 1 ? 4 3 0 7 5
//! ```
//!
//! The header names n, k, m and the primitive polynomial in hex. Every
//! following line holds n decimal symbols, with `?` marking an erasure.
//! Blank lines and lines starting with `#` are ignored.

use std::fmt::Write as _;

use crate::codec::{CodeParams, ReceivedWord};
use crate::error::{Error, Result};
use crate::galois::{Field, FieldElement};
use crate::spectral::EvaluationVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Header {
    pub n: usize,
    pub k: usize,
    pub m: u32,
    pub prim_poly: u32,
}

impl Header {
    pub fn of(params: &CodeParams) -> Header {
        Header {
            n: params.n(),
            k: params.k(),
            m: params.field().degree(),
            prim_poly: params.field().prim_poly(),
        }
    }

    pub fn params(&self) -> Result<CodeParams> {
        let field = Field::new(self.m, self.prim_poly)?;
        if field.order() != self.n {
            return Err(Error::Parse(format!(
                "header n = {} does not match 2^{} - 1",
                self.n, self.m
            )));
        }
        CodeParams::new(field, self.k)
    }
}

/// One line of the file; `None` marks an erased symbol.
pub type Block = Vec<Option<u32>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockFile {
    pub header: Header,
    pub blocks: Vec<Block>,
}

/// Parses a hexadecimal integer with or without a `0x` prefix.
pub fn parse_hex(text: &str) -> Result<u32> {
    let digits = text
        .strip_prefix("0x")
        .or_else(|| text.strip_prefix("0X"))
        .unwrap_or(text);
    u32::from_str_radix(digits, 16).map_err(|_| Error::Parse(format!("bad hex value {text:?}")))
}

fn parse_usize(tok: &str, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::Parse(format!("bad {what} {tok:?}")))
}

impl BlockFile {
    pub fn new(params: &CodeParams) -> BlockFile {
        BlockFile {
            header: Header::of(params),
            blocks: Vec::new(),
        }
    }

    pub fn push_codeword(&mut self, word: &EvaluationVector) {
        self.blocks
            .push(word.values().iter().map(|v| Some(v.value() as u32)).collect());
    }

    pub fn push_received(&mut self, word: &ReceivedWord) {
        self.blocks.push(
            word.symbols()
                .iter()
                .enumerate()
                .map(|(i, v)| (!word.is_erased(i)).then_some(v.value() as u32))
                .collect(),
        );
    }

    pub fn parse(text: &str) -> Result<BlockFile> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (_, head) = lines
            .next()
            .ok_or_else(|| Error::Parse("missing header line".into()))?;
        let toks: Vec<&str> = head.split_whitespace().collect();
        let header = match toks.as_slice() {
            ["rs", n, k, m, poly] => Header {
                n: parse_usize(n, "n")?,
                k: parse_usize(k, "k")?,
                m: parse_usize(m, "m")? as u32,
                prim_poly: parse_hex(poly)?,
            },
            _ => {
                return Err(Error::Parse(format!(
                    "header must read `rs n k m prim_poly_hex`, got {head:?}"
                )))
            }
        };
        let params = header.params()?;
        let q = params.field().size() as u32;

        let mut blocks = Vec::new();
        for (lineno, line) in lines {
            let block = line
                .split_whitespace()
                .map(|tok| match tok {
                    "?" => Ok(None),
                    _ => match tok.parse::<u32>() {
                        Ok(v) if v < q => Ok(Some(v)),
                        _ => Err(Error::Parse(format!("line {lineno}: bad symbol {tok:?}"))),
                    },
                })
                .collect::<Result<Block>>()?;
            if block.len() != header.n {
                return Err(Error::Parse(format!(
                    "line {lineno}: expected {} symbols, found {}",
                    header.n,
                    block.len()
                )));
            }
            blocks.push(block);
        }
        Ok(BlockFile { header, blocks })
    }

    pub fn render(&self) -> String {
        let h = &self.header;
        let mut out = format!("rs {} {} {} {:#x}\n", h.n, h.k, h.m, h.prim_poly);
        for block in &self.blocks {
            let line: Vec<String> = block
                .iter()
                .map(|s| s.map_or_else(|| "?".to_string(), |v| v.to_string()))
                .collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }
}

/// Converts a parsed block into a received word for `params`.
pub fn to_received(params: &CodeParams, block: &Block) -> Result<ReceivedWord> {
    let erasures: Vec<usize> = (0..block.len()).filter(|&i| block[i].is_none()).collect();
    let symbols = block
        .iter()
        .map(|s| params.field().element(s.unwrap_or(0)))
        .collect::<Result<Vec<FieldElement>>>()?;
    ReceivedWord::new(params, symbols, &erasures)
}

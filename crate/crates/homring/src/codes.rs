//! Linear codes over `Z_n` and their homogeneous weight enumerators.
//!
//! A code is described by a generator matrix in a small text format:
//!
//! ```text
//! n k len
//! g11 g12 ... g1len
//! ...
//! gk1 gk2 ... gklen
//! ```
//!
//! The header gives the modulus, the number of rows, and the block
//! length; entries may be any integers and are reduced mod `n`.  The code
//! is the set of products `m·G` over all messages `m ∈ Z_n^k`, and the
//! weight enumerator counts codewords per exact homogeneous weight.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::lambda::LambdaRational;
use crate::numtheory::mul_mod;
use crate::zn::{ZnError, ZnRing};

/// Cap on `k·len` accepted by the parser.
pub const MAX_MATRIX_ENTRIES: u64 = 1_000_000;
/// Cap on `n^k`, the number of messages enumerated.
pub const MAX_CODE_MESSAGES: u64 = 1_000_000;

#[derive(Debug, Error)]
pub enum CodeError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("matrix has {entries} entries, the limit is {limit}")]
    MatrixTooLarge { entries: u128, limit: u64 },
    #[error("enumerating Z_{n}^{k} exceeds the limit of {limit} messages")]
    CodeTooLarge { n: u64, k: usize, limit: u64 },
    #[error(transparent)]
    Ring(#[from] ZnError),
}

/// A `k × len` generator matrix over `Z_n`, entries stored reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    n: u64,
    k: usize,
    len: usize,
    entries: Vec<u64>,
}

fn parse_token<T: FromStr>(token: &str, line: usize, what: &str) -> Result<T, CodeError> {
    token.parse().map_err(|_| CodeError::Parse {
        line,
        reason: format!("{what} `{token}` is not a valid integer"),
    })
}

impl FromStr for GeneratorMatrix {
    type Err = CodeError;

    fn from_str(s: &str) -> Result<Self, CodeError> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| !l.trim().is_empty());
        let last_line = s.lines().count() + 1;

        let (header_line, header) = lines.next().ok_or(CodeError::Parse {
            line: 1,
            reason: "empty input, expected a `n k len` header".into(),
        })?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(CodeError::Parse {
                line: header_line,
                reason: format!("expected header `n k len`, found {} fields", fields.len()),
            });
        }
        let n: u64 = parse_token(fields[0], header_line, "modulus")?;
        let k: usize = parse_token(fields[1], header_line, "row count")?;
        let len: usize = parse_token(fields[2], header_line, "block length")?;
        if n < 2 {
            return Err(CodeError::Parse {
                line: header_line,
                reason: format!("modulus must be at least 2, got {n}"),
            });
        }
        if k == 0 || len == 0 {
            return Err(CodeError::Parse {
                line: header_line,
                reason: "matrix dimensions must be positive".into(),
            });
        }
        let entry_count = k as u128 * len as u128;
        if entry_count > MAX_MATRIX_ENTRIES as u128 {
            return Err(CodeError::MatrixTooLarge {
                entries: entry_count,
                limit: MAX_MATRIX_ENTRIES,
            });
        }

        let mut entries = Vec::with_capacity(k * len);
        for row in 0..k {
            let (line, text) = lines.next().ok_or(CodeError::Parse {
                line: last_line,
                reason: format!("expected {k} matrix rows, found {row}"),
            })?;
            let tokens: Vec<&str> = text.split_whitespace().collect();
            if tokens.len() != len {
                return Err(CodeError::Parse {
                    line,
                    reason: format!("row has {} entries, expected {len}", tokens.len()),
                });
            }
            for token in tokens {
                let value: i128 = parse_token(token, line, "entry")?;
                entries.push(value.rem_euclid(n as i128) as u64);
            }
        }
        if let Some((line, _)) = lines.next() {
            return Err(CodeError::Parse {
                line,
                reason: format!("unexpected content after {k} matrix rows"),
            });
        }
        Ok(GeneratorMatrix { n, k, len, entries })
    }
}

impl fmt::Display for GeneratorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.n, self.k, self.len)?;
        for row in 0..self.k {
            let cells: Vec<String> =
                self.row(row).iter().map(|e| e.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl GeneratorMatrix {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn row_count(&self) -> usize {
        self.k
    }

    pub fn block_length(&self) -> usize {
        self.len
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.entries[i * self.len..(i + 1) * self.len]
    }

    /// The set of codewords `m·G` over all messages `m ∈ Z_n^k`, sorted
    /// and deduplicated.
    pub fn enumerate_code(&self) -> Result<Vec<Vec<u64>>, CodeError> {
        let mut messages: u128 = 1;
        for _ in 0..self.k {
            messages = messages
                .checked_mul(self.n as u128)
                .filter(|&m| m <= MAX_CODE_MESSAGES as u128)
                .ok_or(CodeError::CodeTooLarge {
                    n: self.n,
                    k: self.k,
                    limit: MAX_CODE_MESSAGES,
                })?;
        }
        let mut code = BTreeSet::new();
        let mut message = vec![0u64; self.k];
        loop {
            let mut word = vec![0u64; self.len];
            for (i, &m) in message.iter().enumerate() {
                if m == 0 {
                    continue;
                }
                for (w, &g) in word.iter_mut().zip(self.row(i)) {
                    *w = (*w + mul_mod(m, g, self.n)) % self.n;
                }
            }
            code.insert(word);
            // odometer step through Z_n^k
            let mut digit = 0;
            loop {
                if digit == self.k {
                    return Ok(code.into_iter().collect());
                }
                message[digit] += 1;
                if message[digit] < self.n {
                    break;
                }
                message[digit] = 0;
                digit += 1;
            }
        }
    }

    /// Counts codewords per exact homogeneous weight.
    pub fn weight_enumerator(
        &self,
        lambda: &LambdaRational,
    ) -> Result<WeightDistribution, CodeError> {
        let ring = ZnRing::new(self.n)?;
        let mut counts = BTreeMap::new();
        for word in self.enumerate_code()? {
            *counts.entry(vector_weight(&ring, &word, lambda)).or_insert(0) += 1;
        }
        Ok(WeightDistribution { counts })
    }
}

/// The homogeneous weight of a vector: the sum of its coordinate weights.
pub fn vector_weight(ring: &ZnRing, word: &[u64], lambda: &LambdaRational) -> LambdaRational {
    word.iter().map(|&v| ring.element(v).weight(lambda)).sum()
}

/// A weight enumerator: how many codewords attain each weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    counts: BTreeMap<LambdaRational, u64>,
}

impl WeightDistribution {
    /// Counts keyed by weight, in increasing weight order.
    pub fn counts(&self) -> &BTreeMap<LambdaRational, u64> {
        &self.counts
    }

    pub fn count_of(&self, weight: &LambdaRational) -> u64 {
        self.counts.get(weight).copied().unwrap_or(0)
    }

    /// Total number of codewords.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

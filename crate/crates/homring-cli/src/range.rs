//! The `<a>..<b>` argument of `homring verify`.

use std::fmt;
use std::str::FromStr;

/// An inclusive range of moduli, parsed from `a..b` or a single `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RangeSpec {
    pub from: u64,
    pub to: u64,
}

impl RangeSpec {
    pub fn iter(&self) -> impl Iterator<Item = u64> {
        self.from..=self.to
    }

    /// Saturates at `u64::MAX` when the range covers every modulus.
    pub fn len(&self) -> u64 {
        self.to.saturating_sub(self.from).saturating_add(1)
    }

    /// A parsed range is never empty: `from > to` is rejected upstream.
    pub fn is_empty(&self) -> bool {
        false
    }
}

impl FromStr for RangeSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let parse_end = |t: &str| -> Result<u64, String> {
            t.parse()
                .map_err(|_| format!("`{t}` is not a valid modulus"))
        };
        let (from, to) = match s.split_once("..") {
            Some((a, b)) => (parse_end(a)?, parse_end(b)?),
            None => {
                let n = parse_end(s)?;
                (n, n)
            }
        };
        if from > to {
            return Err(format!("range {from}..{to} runs backwards"));
        }
        Ok(RangeSpec { from, to })
    }
}

impl fmt::Display for RangeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.from == self.to {
            write!(f, "{}", self.from)
        } else {
            write!(f, "{}..{}", self.from, self.to)
        }
    }
}

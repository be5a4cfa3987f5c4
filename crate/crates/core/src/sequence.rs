//! Finite binary sequences with run-length notation parsing.
//!
//! Sequences are 1-indexed at every public interface: position `p` of a
//! sequence of length `l` ranges over `1..=l`. Internally bits are stored in a
//! plain vector.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Default cap on the expanded length of a parsed or repeated sequence.
pub const DEFAULT_MAX_LEN: usize = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SequenceError {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("expanded length {len} exceeds the limit of {limit} bits")]
    TooLong { len: usize, limit: usize },
    #[error("position {pos} out of range for a sequence of length {len}")]
    OutOfRange { pos: usize, len: usize },
    #[error("empty sequence")]
    Empty,
}

/// A finite binary sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BitSeq {
    bits: Vec<bool>,
}

impl BitSeq {
    pub fn new() -> Self {
        BitSeq { bits: Vec::new() }
    }

    pub fn from_bools(bits: Vec<bool>) -> Self {
        BitSeq { bits }
    }

    /// The all-ones sequence `1^count`.
    pub fn all_ones(count: usize) -> Self {
        BitSeq {
            bits: vec![true; count],
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// The bit at 1-based position `pos`, or `None` when out of range.
    pub fn get(&self, pos: usize) -> Option<bool> {
        if pos == 0 {
            return None;
        }
        self.bits.get(pos - 1).copied()
    }

    pub fn as_bools(&self) -> &[bool] {
        &self.bits
    }

    /// Number of 1-bits in the whole sequence.
    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Number of 1-bits among the first `p` terms; `p` may be 0..=len.
    pub fn prefix_weight(&self, p: usize) -> Result<usize, SequenceError> {
        if p > self.bits.len() {
            return Err(SequenceError::OutOfRange {
                pos: p,
                len: self.bits.len(),
            });
        }
        Ok(self.bits[..p].iter().filter(|&&b| b).count())
    }

    /// 1-based positions of every 1-bit, in order.
    pub fn one_positions(&self) -> Vec<usize> {
        self.bits
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i + 1))
            .collect()
    }

    /// Smallest period `tau >= 1` with `tau < len` such that
    /// `s[r] == s[r + tau]` for all `r = 1..=len-tau`; `None` when only the
    /// trivial `tau = len` works.
    ///
    /// Computed through the KMP failure function (smallest period equals
    /// length minus longest proper border); the brute-force scan lives in the
    /// test suite as an independent check.
    pub fn min_period(&self) -> Result<Option<usize>, SequenceError> {
        let l = self.bits.len();
        if l == 0 {
            return Err(SequenceError::Empty);
        }
        let mut fail = vec![0usize; l];
        for i in 1..l {
            let mut k = fail[i - 1];
            while k > 0 && self.bits[i] != self.bits[k] {
                k = fail[k - 1];
            }
            if self.bits[i] == self.bits[k] {
                k += 1;
            }
            fail[i] = k;
        }
        let tau = l - fail[l - 1];
        Ok((tau < l).then_some(tau))
    }

    pub fn concat(&self, other: &BitSeq) -> BitSeq {
        let mut bits = self.bits.clone();
        bits.extend_from_slice(&other.bits);
        BitSeq { bits }
    }

    /// `s` copies of the sequence concatenated; `power(a, 0)` is empty.
    pub fn power(&self, s: usize) -> Result<BitSeq, SequenceError> {
        self.power_with_limit(s, DEFAULT_MAX_LEN)
    }

    pub fn power_with_limit(&self, s: usize, limit: usize) -> Result<BitSeq, SequenceError> {
        let len = self
            .bits
            .len()
            .checked_mul(s)
            .filter(|&l| l <= limit)
            .ok_or(SequenceError::TooLong {
                len: self.bits.len().saturating_mul(s),
                limit,
            })?;
        let mut bits = Vec::with_capacity(len);
        for _ in 0..s {
            bits.extend_from_slice(&self.bits);
        }
        Ok(BitSeq { bits })
    }

    /// First `p` bits as a new sequence.
    pub fn prefix(&self, p: usize) -> Result<BitSeq, SequenceError> {
        if p > self.bits.len() {
            return Err(SequenceError::OutOfRange {
                pos: p,
                len: self.bits.len(),
            });
        }
        Ok(BitSeq {
            bits: self.bits[..p].to_vec(),
        })
    }

    /// Parse run-length notation, e.g. `(10)^2(1011)^30^4`.
    ///
    /// `^` binds to the immediately preceding atom only, so `10^2` means
    /// `1` followed by `00`. An exponent of 0 yields the empty string.
    /// Whitespace is ignored.
    pub fn parse(text: &str) -> Result<BitSeq, SequenceError> {
        Self::parse_with_limit(text, DEFAULT_MAX_LEN)
    }

    pub fn parse_with_limit(text: &str, limit: usize) -> Result<BitSeq, SequenceError> {
        let chars: Vec<char> = text.chars().collect();
        let n = chars.len();
        let mut out: Vec<bool> = Vec::new();
        let mut idx = 0usize;
        while idx < n {
            let c = chars[idx];
            if c.is_whitespace() {
                idx += 1;
                continue;
            }
            let atom: Vec<bool> = match c {
                '0' => {
                    idx += 1;
                    vec![false]
                }
                '1' => {
                    idx += 1;
                    vec![true]
                }
                '(' => {
                    let open_pos = idx + 1;
                    idx += 1;
                    let mut inner = Vec::new();
                    loop {
                        if idx >= n {
                            return Err(SequenceError::Parse {
                                pos: open_pos,
                                msg: "unclosed '('".into(),
                            });
                        }
                        match chars[idx] {
                            '0' => inner.push(false),
                            '1' => inner.push(true),
                            ')' => break,
                            w if w.is_whitespace() => {}
                            other => {
                                return Err(SequenceError::Parse {
                                    pos: idx + 1,
                                    msg: format!("unexpected '{other}' inside parentheses"),
                                })
                            }
                        }
                        idx += 1;
                    }
                    idx += 1; // consume ')'
                    if inner.is_empty() {
                        return Err(SequenceError::Parse {
                            pos: open_pos,
                            msg: "empty parentheses".into(),
                        });
                    }
                    inner
                }
                '^' => {
                    return Err(SequenceError::Parse {
                        pos: idx + 1,
                        msg: "'^' with no preceding atom".into(),
                    })
                }
                other => {
                    return Err(SequenceError::Parse {
                        pos: idx + 1,
                        msg: format!("unexpected character '{other}'"),
                    })
                }
            };
            // Optional exponent on the atom just read.
            let mut look = idx;
            while look < n && chars[look].is_whitespace() {
                look += 1;
            }
            let mut exp = 1usize;
            if look < n && chars[look] == '^' {
                idx = look + 1;
                while idx < n && chars[idx].is_whitespace() {
                    idx += 1;
                }
                let digit_pos = idx + 1;
                let mut val = 0usize;
                let mut any = false;
                while idx < n && chars[idx].is_ascii_digit() {
                    any = true;
                    val = val
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(chars[idx] as usize - '0' as usize))
                        .ok_or(SequenceError::Parse {
                            pos: digit_pos,
                            msg: "exponent overflow".into(),
                        })?;
                    idx += 1;
                }
                if !any {
                    return Err(SequenceError::Parse {
                        pos: digit_pos,
                        msg: "expected digits after '^'".into(),
                    });
                }
                exp = val;
            }
            let add = atom.len().checked_mul(exp).ok_or(SequenceError::TooLong {
                len: usize::MAX,
                limit,
            })?;
            if out.len() + add > limit {
                return Err(SequenceError::TooLong {
                    len: out.len() + add,
                    limit,
                });
            }
            for _ in 0..exp {
                out.extend_from_slice(&atom);
            }
        }
        Ok(BitSeq { bits: out })
    }

    /// Canonical output form: the plain bitstring.
    pub fn render(&self) -> String {
        self.bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

impl fmt::Display for BitSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl FromStr for BitSeq {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BitSeq::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> BitSeq {
        BitSeq::parse(s).unwrap()
    }

    #[test]
    fn parse_literal() {
        assert_eq!(
            seq("101101").as_bools(),
            &[true, false, true, true, false, true]
        );
    }

    #[test]
    fn parse_run_length() {
        assert_eq!(seq("(10)^2(1011)^30^4").render(), "10101011101110110000");
    }

    #[test]
    fn caret_binds_to_single_bit() {
        // "10^010^21" = "1" + "0^0" + "1" + "0^2" + "1"
        assert_eq!(seq("10^010^21").render(), "11001");
    }

    #[test]
    fn parse_ignores_whitespace() {
        assert_eq!(seq("10 10 1011").render(), "10101011");
        assert_eq!(seq("(10) ^ 2").render(), "1010");
    }

    #[test]
    fn parse_errors_carry_position() {
        match BitSeq::parse("10x1") {
            Err(SequenceError::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(
            BitSeq::parse("^2"),
            Err(SequenceError::Parse { pos: 1, .. })
        ));
        assert!(matches!(
            BitSeq::parse("(10"),
            Err(SequenceError::Parse { .. })
        ));
        assert!(matches!(
            BitSeq::parse("1^"),
            Err(SequenceError::Parse { .. })
        ));
        assert!(matches!(
            BitSeq::parse("()"),
            Err(SequenceError::Parse { .. })
        ));
    }

    #[test]
    fn parse_respects_limit() {
        assert!(matches!(
            BitSeq::parse_with_limit("1^100", 99),
            Err(SequenceError::TooLong { len: 100, limit: 99 })
        ));
        assert_eq!(BitSeq::parse_with_limit("1^100", 100).unwrap().weight(), 100);
    }

    #[test]
    fn weight_and_prefix_weight() {
        let s = seq("101101");
        assert_eq!(s.weight(), 4);
        assert_eq!(s.prefix_weight(3).unwrap(), 2);
        assert_eq!(s.prefix_weight(0).unwrap(), 0);
        assert_eq!(s.prefix_weight(6).unwrap(), 4);
        assert!(s.prefix_weight(7).is_err());
        assert_eq!(seq("00000").weight(), 0);
        let t = seq("1011010100100100100010100101");
        assert_eq!(t.prefix_weight(t.len()).unwrap(), 12);
    }

    #[test]
    fn min_period_examples() {
        assert_eq!(seq("101110111011").min_period().unwrap(), Some(4));
        assert_eq!(seq("1111").min_period().unwrap(), Some(1));
        assert_eq!(seq("10110").min_period().unwrap(), Some(3));
        assert_eq!(seq("10").min_period().unwrap(), None);
        assert_eq!(seq("1").min_period().unwrap(), None);
        assert!(BitSeq::new().min_period().is_err());
    }

    #[test]
    fn concat_and_power() {
        assert_eq!(seq("10").concat(&seq("11")).render(), "1011");
        assert_eq!(seq("110").power(5).unwrap().render(), "110110110110110");
        assert_eq!(seq("1011").power(3).unwrap().render(), "101110111011");
        assert!(seq("10").power(0).unwrap().is_empty());
    }

    #[test]
    fn render_round_trip() {
        let s = seq("1011010100100100100010100101");
        assert_eq!(BitSeq::parse(&s.render()).unwrap(), s);
    }
}

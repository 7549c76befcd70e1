use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};

/// A finite word over the integer alphabet `0..alphabet_size`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word {
    symbols: Vec<u8>,
    alphabet_size: usize,
}

impl Word {
    pub fn new(symbols: Vec<u8>, alphabet_size: usize) -> Result<Self> {
        if let Some((index, &symbol)) = symbols
            .iter()
            .enumerate()
            .find(|(_, &s)| s as usize >= alphabet_size)
        {
            return Err(Error::SymbolOutOfRange {
                index,
                symbol,
                alphabet_size,
            });
        }
        Ok(Word {
            symbols,
            alphabet_size: alphabet_size.max(1),
        })
    }

    /// Builds a word with the smallest alphabet that contains every symbol.
    pub fn from_symbols(symbols: Vec<u8>) -> Self {
        let alphabet_size = symbols.iter().map(|&s| s as usize + 1).max().unwrap_or(1);
        Word {
            symbols,
            alphabet_size,
        }
    }

    /// Maps arbitrary text onto a dense alphabet in order of first appearance,
    /// so `alfalfa` becomes `0120120`.
    pub fn from_text(text: &str) -> Self {
        let mut seen: Vec<char> = Vec::new();
        let symbols = text
            .chars()
            .map(|c| match seen.iter().position(|&d| d == c) {
                Some(i) => i as u8,
                None => {
                    seen.push(c);
                    (seen.len() - 1) as u8
                }
            })
            .collect();
        Word::from_symbols(symbols)
    }

    /// Parses a string of decimal digits, one symbol per character.
    pub fn from_digits(digits: &str) -> Result<Self> {
        let symbols = digits
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::InvalidRepresentation(format!("not a digit: {c:?}")))
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(Word::from_symbols(symbols))
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word {
            symbols: self.symbols[..n.min(self.len())].to_vec(),
            alphabet_size: self.alphabet_size,
        }
    }

    pub fn factor(&self, start: usize, len: usize) -> &[u8] {
        &self.symbols[start..start + len]
    }

    /// Number of distinct symbols that actually occur.
    pub fn distinct_symbols(&self) -> usize {
        let mut seen = vec![false; self.alphabet_size];
        for &s in &self.symbols {
            seen[s as usize] = true;
        }
        seen.into_iter().filter(|&b| b).count()
    }
}

impl Index<usize> for Word {
    type Output = u8;

    fn index(&self, i: usize) -> &u8 {
        &self.symbols[i]
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.alphabet_size <= 10 {
            for &s in &self.symbols {
                write!(f, "{s}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.symbols.iter().map(|s| s.to_string()).collect();
            write!(f, "{}", parts.join("."))
        }
    }
}

//! Regular numeration systems: base-k, Fibonacci (Zeckendorf) and Tribonacci.
//!
//! Representations are most-significant digit first. Zero is written `0`.

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NumerationSystem {
    Base(u32),
    Fibonacci,
    Tribonacci,
}

impl NumerationSystem {
    /// Size of the digit alphabet.
    pub fn digit_count(&self) -> usize {
        match *self {
            NumerationSystem::Base(k) => k as usize,
            NumerationSystem::Fibonacci | NumerationSystem::Tribonacci => 2,
        }
    }

    /// Place values, least significant first, for as many digits as are
    /// needed to write numbers up to and including `n`.
    fn place_values(&self, n: u64) -> Vec<u64> {
        let mut places = Vec::new();
        match *self {
            NumerationSystem::Base(k) => {
                let mut p = 1u64;
                places.push(p);
                while let Some(next) = p.checked_mul(k as u64) {
                    if next > n {
                        break;
                    }
                    p = next;
                    places.push(p);
                }
            }
            NumerationSystem::Fibonacci => {
                let (mut a, mut b) = (1u64, 2u64);
                places.push(a);
                while b <= n {
                    places.push(b);
                    match a.checked_add(b) {
                        Some(c) => {
                            a = b;
                            b = c;
                        }
                        None => break,
                    }
                }
            }
            NumerationSystem::Tribonacci => {
                let (mut a, mut b, mut c) = (1u64, 2u64, 4u64);
                places.push(a);
                if b <= n {
                    places.push(b);
                }
                while c <= n {
                    places.push(c);
                    match a.checked_add(b).and_then(|s| s.checked_add(c)) {
                        Some(d) => {
                            a = b;
                            b = c;
                            c = d;
                        }
                        None => break,
                    }
                }
            }
        }
        places
    }

    /// Canonical (greedy) representation of `n`.
    pub fn representation(&self, n: u64) -> Vec<u8> {
        if n == 0 {
            return vec![0];
        }
        let places = self.place_values(n);
        let mut rest = n;
        let mut digits = Vec::with_capacity(places.len());
        for &p in places.iter().rev() {
            let d = rest / p;
            rest -= d * p;
            digits.push(d as u8);
        }
        while digits.len() > 1 && digits[0] == 0 {
            digits.remove(0);
        }
        digits
    }

    /// Value of a digit word. Leading zeros are accepted; forbidden digit
    /// patterns (`11` in Fibonacci, `111` in Tribonacci) are rejected.
    pub fn value(&self, digits: &[u8]) -> Result<u64> {
        let base = self.digit_count();
        if let Some(&digit) = digits.iter().find(|&&d| d as usize >= base) {
            return Err(Error::DigitOutOfRange { digit, base });
        }
        let run_limit = match self {
            NumerationSystem::Base(_) => usize::MAX,
            NumerationSystem::Fibonacci => 1,
            NumerationSystem::Tribonacci => 2,
        };
        let mut run = 0;
        for &d in digits {
            run = if d == 1 { run + 1 } else { 0 };
            if run > run_limit {
                return Err(Error::InvalidRepresentation(format!(
                    "{} consecutive ones in {:?}",
                    run, self
                )));
            }
        }
        let overflow = || Error::Overflow(format!("value of {digits:?}"));
        let mut places: Vec<u64> = Vec::with_capacity(digits.len());
        match *self {
            NumerationSystem::Base(k) => {
                let mut p = 1u64;
                for i in 0..digits.len() {
                    if i > 0 {
                        p = p.checked_mul(k as u64).ok_or_else(overflow)?;
                    }
                    places.push(p);
                }
            }
            NumerationSystem::Fibonacci => {
                for i in 0..digits.len() {
                    let p = match i {
                        0 => 1,
                        1 => 2,
                        _ => places[i - 1]
                            .checked_add(places[i - 2])
                            .ok_or_else(overflow)?,
                    };
                    places.push(p);
                }
            }
            NumerationSystem::Tribonacci => {
                for i in 0..digits.len() {
                    let p = match i {
                        0 => 1,
                        1 => 2,
                        2 => 4,
                        _ => places[i - 1]
                            .checked_add(places[i - 2])
                            .and_then(|s| s.checked_add(places[i - 3]))
                            .ok_or_else(overflow)?,
                    };
                    places.push(p);
                }
            }
        }
        digits
            .iter()
            .rev()
            .zip(&places)
            .try_fold(0u64, |acc, (&d, &p)| {
                (d as u64)
                    .checked_mul(p)
                    .and_then(|t| acc.checked_add(t))
                    .ok_or_else(overflow)
            })
    }
}

/// The Tribonacci numbers `T_0 = 0, T_1 = 1, T_2 = 1, T_i = T_{i-1} + T_{i-2} + T_{i-3}`.
pub fn trib_number(i: usize) -> Result<u64> {
    let (mut a, mut b, mut c) = (0u64, 1u64, 1u64);
    for _ in 0..i {
        let d = a
            .checked_add(b)
            .and_then(|s| s.checked_add(c))
            .ok_or_else(|| Error::Overflow(format!("T_{i}")))?;
        a = b;
        b = c;
        c = d;
    }
    Ok(a)
}

/// `W_i = T_i + T_{i-3} + ... + T_{2 + ((i - 2) mod 3)}` for `i >= 4`.
pub fn trib_w(i: usize) -> Result<u64> {
    if i < 4 {
        return Err(Error::IndexTooSmall {
            what: "W_i",
            index: i,
            min: 4,
        });
    }
    let last = 2 + (i - 2) % 3;
    let mut sum = 0u64;
    let mut j = i;
    loop {
        sum = sum
            .checked_add(trib_number(j)?)
            .ok_or_else(|| Error::Overflow(format!("W_{i}")))?;
        if j == last {
            break;
        }
        j -= 3;
    }
    Ok(sum)
}

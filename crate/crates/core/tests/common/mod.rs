//! Brute-force reference implementations. Everything here works straight
//! from the definitions on byte slices, shares no code with the library, and
//! is only fast enough for short words.
#![allow(dead_code)]

use std::collections::HashSet;

/// Every occurrence of every factor must touch some chosen position.
pub fn naive_is_attractor(w: &[u8], positions: &[usize]) -> bool {
    let n = w.len();
    for len in 1..=n {
        for start in 0..=n - len {
            let f = &w[start..start + len];
            let hit = (0..=n - len)
                .any(|j| &w[j..j + len] == f && positions.iter().any(|&p| j <= p && p < j + len));
            if !hit {
                return false;
            }
        }
    }
    true
}

/// Minimum attractor size: the smallest `k` for which some `k`-subset works.
pub fn naive_gamma(w: &[u8]) -> usize {
    let n = w.len();
    assert!(n <= 20);
    (1..=n)
        .find(|&k| {
            (0u32..1 << n)
                .filter(|m| m.count_ones() as usize == k)
                .any(|m| {
                    let set: Vec<usize> = (0..n).filter(|&i| m >> i & 1 == 1).collect();
                    naive_is_attractor(w, &set)
                })
        })
        .unwrap_or(0)
}

pub fn distinct_factors(w: &[u8], len: usize) -> usize {
    if len == 0 || len > w.len() {
        return usize::from(len == 0);
    }
    w.windows(len).collect::<HashSet<_>>().len()
}

/// Largest `d_k / k` as a reduced fraction.
pub fn naive_delta(w: &[u8]) -> (u64, u64) {
    let mut best = (0u64, 1u64);
    for k in 1..=w.len() {
        let d = distinct_factors(w, k) as u64;
        if d * best.1 > best.0 * k as u64 {
            best = (d, k as u64);
        }
    }
    let g = gcd(best.0, best.1);
    (best.0 / g, best.1 / g)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `w[p..p+len]` has no occurrence starting earlier.
pub fn naive_is_novel(w: &[u8], p: usize, len: usize) -> bool {
    let f = &w[p..p + len];
    !(0..p).any(|j| &w[j..j + len] == f)
}

/// All words of length `n` over `sigma` symbols, in lexicographic order.
pub fn all_words(sigma: u8, n: usize) -> Vec<Vec<u8>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..sigma).map(move |c| {
                    let mut v = w.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out
}

/// Thue-Morse by the bit-count rule.
pub fn thue_morse(n: usize) -> Vec<u8> {
    (0..n).map(|i| (i.count_ones() % 2) as u8).collect()
}

/// Period-doubling: 1 when the 2-adic valuation of `i + 1` is even.
pub fn period_doubling(n: usize) -> Vec<u8> {
    (1..=n)
        .map(|i| u8::from(i.trailing_zeros() % 2 == 0))
        .collect()
}

/// 1 exactly where `i + 1` is a power of two.
pub fn powers_of_two(n: usize) -> Vec<u8> {
    (1..=n).map(|i| u8::from(i.is_power_of_two())).collect()
}

/// Tribonacci word by repeated substitution.
pub fn tribonacci(n: usize) -> Vec<u8> {
    let mut w = vec![0u8];
    while w.len() < n {
        w = w
            .iter()
            .flat_map(|&c| match c {
                0 => vec![0, 1],
                1 => vec![0, 2],
                _ => vec![0],
            })
            .collect();
    }
    w.truncate(n);
    w
}

/// Ternary word counting the 1s between consecutive 0s of Thue-Morse.
pub fn vtm(n: usize) -> Vec<u8> {
    let tm = thue_morse(4 * n + 8);
    let zeros: Vec<usize> = (0..tm.len()).filter(|&i| tm[i] == 0).collect();
    zeros
        .windows(2)
        .take(n)
        .map(|z| (z[1] - z[0] - 1) as u8)
        .collect()
}

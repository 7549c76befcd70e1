use crate::error::{Error, Result};
use crate::word::Word;

/// A substitution prolongable on `seed`, with an optional letter-to-letter coding
/// applied to its fixed point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    alphabet_size: usize,
    images: Vec<Vec<u8>>,
    seed: u8,
    coding: Option<Vec<u8>>,
}

impl Morphism {
    pub fn new(images: Vec<Vec<u8>>, seed: u8, coding: Option<Vec<u8>>) -> Result<Self> {
        let alphabet_size = images.len();
        let bad = |msg: String| Error::MalformedMorphism(msg);
        if seed as usize >= alphabet_size {
            return Err(bad(format!("seed {seed} has no image")));
        }
        for (a, img) in images.iter().enumerate() {
            if img.is_empty() {
                return Err(bad(format!("image of {a} is empty")));
            }
            if let Some(&s) = img.iter().find(|&&s| s as usize >= alphabet_size) {
                return Err(bad(format!("image of {a} uses symbol {s} with no image")));
            }
        }
        if let Some(c) = &coding {
            if c.len() != alphabet_size {
                return Err(bad(format!(
                    "coding covers {} symbols, morphism has {alphabet_size}",
                    c.len()
                )));
            }
        }
        let img = &images[seed as usize];
        if img[0] != seed || img.len() < 2 {
            return Err(Error::NotProlongable { seed });
        }
        Ok(Morphism {
            alphabet_size,
            images,
            seed,
            coding,
        })
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn images(&self) -> &[Vec<u8>] {
        &self.images
    }

    pub fn seed(&self) -> u8 {
        self.seed
    }

    /// Alphabet size after the coding is applied.
    pub fn output_alphabet_size(&self) -> usize {
        match &self.coding {
            Some(c) => c.iter().map(|&s| s as usize + 1).max().unwrap_or(1),
            None => self.alphabet_size,
        }
    }

    /// First `n` symbols of the coded fixed point. Expansion stops as soon as
    /// `n` symbols exist.
    pub fn fixed_point_prefix(&self, n: usize) -> Word {
        let mut out: Vec<u8> = Vec::with_capacity(n + 8);
        out.extend_from_slice(&self.images[self.seed as usize]);
        let mut cursor = 1;
        while out.len() < n {
            let a = out[cursor] as usize;
            out.extend_from_slice(&self.images[a]);
            cursor += 1;
        }
        out.truncate(n);
        if let Some(c) = &self.coding {
            for s in out.iter_mut() {
                *s = c[*s as usize];
            }
        }
        Word::new(out, self.output_alphabet_size()).expect("coding output in range")
    }

    /// Parses `morphism:0->01,1->10;seed=0[;coding=0:0,1:1]`. The leading
    /// `morphism:` tag is optional. Images are digit strings, or dot-separated
    /// integers (`10->1.0`) when symbols exceed 9.
    pub fn parse(spec: &str) -> Result<Self> {
        let bad = |msg: &str| Error::MalformedMorphism(format!("{msg} in `{spec}`"));
        let body = spec.strip_prefix("morphism:").unwrap_or(spec);
        let mut parts = body.split(';');
        let rules = parts.next().ok_or_else(|| bad("missing rules"))?;
        let mut pairs: Vec<(u8, Vec<u8>)> = Vec::new();
        for rule in rules.split(',').filter(|r| !r.trim().is_empty()) {
            let (lhs, rhs) = rule
                .split_once("->")
                .ok_or_else(|| bad("rule without `->`"))?;
            let a: u8 = lhs.trim().parse().map_err(|_| bad("bad rule symbol"))?;
            pairs.push((
                a,
                parse_symbols(rhs.trim()).ok_or_else(|| bad("bad image"))?,
            ));
        }
        let mut seed = None;
        let mut coding_pairs: Option<Vec<(u8, u8)>> = None;
        for opt in parts {
            let (key, val) = opt
                .split_once('=')
                .ok_or_else(|| bad("option without `=`"))?;
            match key.trim() {
                "seed" => seed = Some(val.trim().parse::<u8>().map_err(|_| bad("bad seed"))?),
                "coding" => {
                    let mut cp = Vec::new();
                    for entry in val.split(',') {
                        let (a, b) = entry.split_once(':').ok_or_else(|| bad("bad coding"))?;
                        let a = a.trim().parse().map_err(|_| bad("bad coding"))?;
                        let b = b.trim().parse().map_err(|_| bad("bad coding"))?;
                        cp.push((a, b));
                    }
                    coding_pairs = Some(cp);
                }
                _ => return Err(bad("unknown option")),
            }
        }
        let size = pairs
            .iter()
            .map(|(a, _)| *a as usize + 1)
            .max()
            .unwrap_or(0);
        let mut images = vec![Vec::new(); size];
        for (a, img) in pairs {
            if !images[a as usize].is_empty() {
                return Err(bad("duplicate rule"));
            }
            images[a as usize] = img;
        }
        let coding = match coding_pairs {
            Some(cp) => {
                let mut c = vec![None; size];
                for (a, b) in cp {
                    *c.get_mut(a as usize)
                        .ok_or_else(|| bad("coding symbol has no rule"))? = Some(b);
                }
                Some(
                    c.into_iter()
                        .collect::<Option<Vec<u8>>>()
                        .ok_or_else(|| bad("coding is not total"))?,
                )
            }
            None => None,
        };
        let seed = seed.ok_or_else(|| bad("missing seed"))?;
        Morphism::new(images, seed, coding)
    }
}

fn parse_symbols(s: &str) -> Option<Vec<u8>> {
    if s.contains('.') {
        s.split('.').map(|t| t.parse().ok()).collect()
    } else {
        s.chars().map(|c| c.to_digit(10).map(|d| d as u8)).collect()
    }
}

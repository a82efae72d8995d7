//! Braid words, permutations, pure-braid generators and full twists.
//!
//! A word `l_1 l_2 ... l_k` denotes the group product in that order. It acts
//! on the left, so the word's action is the composite of its letters' actions
//! with `l_1` outermost; permutation images compose the same way.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection of `{0, ..., m-1}`, printed one-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation((0..m).collect())
    }

    /// Validates a zero-based image list.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Invalid(format!("not a permutation: {images:?}")));
            }
        }
        Ok(Permutation(images))
    }

    /// The transposition of `a` and `b` (zero-based).
    pub fn transposition(m: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(m);
        p.0.swap(a, b);
        p
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// One-based images, the usual one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_line().iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// A word in the Artin generators of the braid group on `strands` strands.
///
/// Letter `i > 0` is `s_i`, letter `-i` is `s_i^{-1}`, with `1 <= i <= strands - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::Invalid(format!("a braid needs at least 2 strands, got {strands}")));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::IndexOutOfRange(format!(
                    "generator s{} on {} strands (valid 1..={})",
                    l.unsigned_abs(),
                    strands,
                    strands - 1
                )));
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn empty(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn generator(strands: usize, i: i32) -> Result<Self> {
        Self::new(strands, vec![i])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_strands(&self, other: &Self) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { expected: self.strands, actual: other.strands });
        }
        Ok(())
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        self.check_strands(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn inverse(&self) -> Self {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    /// `self^e` for any integer `e`.
    pub fn pow(&self, e: i32) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * e.unsigned_abs() as usize);
        for _ in 0..e.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// `c * self * c^{-1}`.
    pub fn conjugate_by(&self, c: &Self) -> Result<Self> {
        c.concat(self)?.concat(&c.inverse())
    }

    /// The same letters read on a larger strand count.
    pub fn widen(&self, strands: usize) -> Result<Self> {
        Self::new(strands, self.letters.clone())
    }

    pub fn is_pure(&self) -> bool {
        permutation_image(self).is_identity()
    }

    /// Errors with [`Error::NonPureWord`] unless the permutation image is trivial.
    pub fn require_pure(&self) -> Result<()> {
        let p = permutation_image(self);
        if p.is_identity() {
            Ok(())
        } else {
            Err(Error::NonPureWord(p.to_string()))
        }
    }

    /// Parses either a JSON array of signed integers or whitespace/comma separated tokens:
    /// `s3`, `s3^-1`, `s3^2`, `A r s` (pure generator), `D a b` (full twist on strands a..b).
    /// A trailing `^e` on the last number of `A`/`D` raises that factor to the power `e`.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let t = text.trim();
        if t.starts_with('[') {
            let letters: Vec<i32> =
                serde_json::from_str(t).map_err(|e| Error::Invalid(format!("braid word JSON: {e}")))?;
            return Self::new(strands, letters);
        }
        let tokens: Vec<&str> = t.split(|c: char| c.is_whitespace() || c == ',').filter(|s| !s.is_empty()).collect();
        let mut word = Self::empty(strands);
        let mut idx = 0;
        while idx < tokens.len() {
            let tok = tokens[idx];
            let factor = if tok == "A" || tok == "D" {
                let (a, b, e) = parse_pair(&tokens, idx)?;
                idx += 3;
                let base = if tok == "A" { pure_generator(a, b, strands)? } else { full_twist(a, b, strands)? };
                base.pow(e)
            } else if let Some(rest) = tok.strip_prefix('s') {
                idx += 1;
                let (i, e) = split_power(rest)?;
                Self::generator(strands, i)?.pow(e)
            } else {
                return Err(Error::Invalid(format!("unrecognized braid token `{tok}`")));
            };
            word = word.concat(&factor)?;
        }
        Ok(word)
    }
}

fn split_power(tok: &str) -> Result<(i32, i32)> {
    let bad = || Error::Invalid(format!("malformed braid token `{tok}`"));
    let (base, exp) = match tok.split_once('^') {
        Some((b, e)) => (b, e.parse::<i32>().map_err(|_| bad())?),
        None => (tok, 1),
    };
    let i = base.parse::<i32>().map_err(|_| bad())?;
    if i <= 0 {
        return Err(bad());
    }
    Ok((i, exp))
}

fn parse_pair(tokens: &[&str], idx: usize) -> Result<(usize, usize, i32)> {
    let head = tokens[idx];
    if idx + 2 >= tokens.len() {
        return Err(Error::Invalid(format!("`{head}` needs two strand indices")));
    }
    let a = tokens[idx + 1]
        .parse::<usize>()
        .map_err(|_| Error::Invalid(format!("bad strand index `{}`", tokens[idx + 1])))?;
    let (b, e) = split_power(tokens[idx + 2])?;
    Ok((a, b as usize, e))
}

impl fmt::Display for BraidWord {
    /// Token form `s1 s2^-1 s1`; the empty word prints as `e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&l| if l > 0 { format!("s{l}") } else { format!("s{}^-1", -l) })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Image in the symmetric group: `s_i` maps to the transposition `(i, i+1)`.
pub fn permutation_image(w: &BraidWord) -> Permutation {
    let m = w.strands;
    w.letters.iter().fold(Permutation::identity(m), |acc, &l| {
        let i = l.unsigned_abs() as usize;
        acc.compose(&Permutation::transposition(m, i - 1, i))
    })
}

/// The pure braid `A_{rs} = Π^{-1} s_r^2 Π` with `Π = s_{r+1} s_{r+2} ... s_{s-1}` (one-based strands).
pub fn pure_generator(r: usize, s: usize, strands: usize) -> Result<BraidWord> {
    if !(1 <= r && r < s && s <= strands) {
        return Err(Error::IndexOutOfRange(format!(
            "A_{{{r},{s}}} needs 1 <= r < s <= {strands}"
        )));
    }
    let pi: Vec<i32> = (r + 1..s).map(|i| i as i32).collect();
    let mut letters: Vec<i32> = pi.iter().rev().map(|l| -l).collect();
    letters.extend([r as i32, r as i32]);
    letters.extend(&pi);
    BraidWord::new(strands, letters)
}

/// All pure generators `A_{rs}`, `1 <= r < s <= strands`, in lexicographic order of `(r, s)`.
pub fn pure_generators(strands: usize) -> Vec<((usize, usize), BraidWord)> {
    let mut out = Vec::new();
    for r in 1..strands {
        for s in r + 1..=strands {
            out.push(((r, s), pure_generator(r, s, strands).expect("indices in range")));
        }
    }
    out
}

/// The half twist on strands `a..=b`: `(s_a ... s_{b-1})(s_a ... s_{b-2}) ... (s_a)`.
///
/// `full_twist(1, m, m)` is the Garside element whose square generates the centre.
pub fn full_twist(a: usize, b: usize, strands: usize) -> Result<BraidWord> {
    if !(1 <= a && a < b && b <= strands) {
        return Err(Error::IndexOutOfRange(format!("twist on strands {a}..{b} of {strands}")));
    }
    let mut letters = Vec::new();
    for top in (a..b).rev() {
        letters.extend((a..=top).map(|i| i as i32));
    }
    BraidWord::new(strands, letters)
}

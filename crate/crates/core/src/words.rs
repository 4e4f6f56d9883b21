//! Free words over the ranked alphabets `a_i`, `b_i` (surface groups) and
//! `x_i` (free groups).
//!
//! Text form: whitespace-separated tokens such as `a1 B2 x3`, where an
//! uppercase letter denotes the inverse generator and `1` alone denotes the
//! identity. Every constructor returns a freely reduced word.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    X,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'a',
            Family::B => 'b',
            Family::X => 'x',
        }
    }
}

/// A signed generator. Field order fixes the letter order used by shortlex
/// comparisons: `a1 < A1 < b1 < B1 < a2 < ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    index: u32,
    family: Family,
    inverse: bool,
}

impl Generator {
    /// Panics if `index` is zero.
    pub fn new(family: Family, index: u32, inverse: bool) -> Self {
        assert!(index >= 1, "generator index must be positive");
        Generator { index, family, inverse }
    }

    pub fn a(index: u32) -> Self {
        Self::new(Family::A, index, false)
    }

    pub fn b(index: u32) -> Self {
        Self::new(Family::B, index, false)
    }

    pub fn x(index: u32) -> Self {
        Self::new(Family::X, index, false)
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn index(self) -> u32 {
        self.index
    }

    pub fn is_inverse(self) -> bool {
        self.inverse
    }

    /// +1 for a positive letter, -1 for an inverse letter.
    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inverse(self) -> Self {
        Generator { inverse: !self.inverse, ..self }
    }

    /// The positive letter with the same family and index.
    pub fn positive(self) -> Self {
        Generator { inverse: false, ..self }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.family.letter();
        let c = if self.inverse { c.to_ascii_uppercase() } else { c };
        write!(f, "{}{}", c, self.index)
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Generator>,
}

/// Push letters onto a reduced stack, cancelling adjacent inverse pairs.
fn push_reduced(stack: &mut Vec<Generator>, letters: impl IntoIterator<Item = Generator>) {
    for g in letters {
        if stack.last() == Some(&g.inverse()) {
            stack.pop();
        } else {
            stack.push(g);
        }
    }
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    /// Build a word from arbitrary letters, freely reducing them.
    pub fn from_letters(letters: impl IntoIterator<Item = Generator>) -> Self {
        let mut stack = Vec::new();
        push_reduced(&mut stack, letters);
        Word { letters: stack }
    }

    pub fn letter(g: Generator) -> Self {
        Word { letters: vec![g] }
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word { letters: self.letters.iter().rev().map(|g| g.inverse()).collect() }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut stack = self.letters.clone();
        push_reduced(&mut stack, other.letters.iter().copied());
        Word { letters: stack }
    }

    /// `g w g⁻¹`.
    pub fn conjugate(&self, g: &Word) -> Word {
        g.concat(self).concat(&g.inverse())
    }

    /// `u v u⁻¹ v⁻¹`.
    pub fn commutator(&self, other: &Word) -> Word {
        self.concat(other).concat(&self.inverse()).concat(&other.inverse())
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Split into `(core, conjugator)` with `self = conjugator · core · conjugator⁻¹`
    /// and `core` cyclically reduced.
    pub fn cyclic_reduce(&self) -> (Word, Word) {
        let n = self.letters.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.letters[k] == self.letters[n - 1 - k].inverse() {
            k += 1;
        }
        let conjugator = Word { letters: self.letters[..k].to_vec() };
        let core = Word { letters: self.letters[k..n - k].to_vec() };
        (core, conjugator)
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(f), Some(l)) => self.letters.len() == 1 || *f != l.inverse(),
            _ => true,
        }
    }

    /// Cyclic rotation starting at position `k`. Only meaningful for
    /// cyclically reduced words, where the result is again reduced.
    pub fn rotate(&self, k: usize) -> Word {
        if self.letters.is_empty() {
            return Word::identity();
        }
        let k = k % self.letters.len();
        let mut letters = self.letters[k..].to_vec();
        letters.extend_from_slice(&self.letters[..k]);
        Word::from_letters(letters)
    }

    /// Shortlex-least word among all rotations of the cyclic core of `self`
    /// and of its inverse. Two words get the same key iff their cyclic cores
    /// agree up to rotation and inversion.
    pub fn cyclic_class_key(&self) -> Word {
        let (core, _) = self.cyclic_reduce();
        let inv = core.inverse();
        (0..core.len().max(1))
            .flat_map(|k| [core.rotate(k), inv.rotate(k)])
            .min()
            .unwrap_or_default()
    }

    /// Largest generator index used, 0 for the identity.
    pub fn max_index(&self) -> u32 {
        self.letters.iter().map(|g| g.index).max().unwrap_or(0)
    }

    /// Substitute an image word for every positive letter and reduce.
    pub fn substitute(&self, image: impl Fn(Generator) -> Word) -> Word {
        let mut stack = Vec::new();
        for g in &self.letters {
            let w = image(g.positive());
            if g.inverse {
                push_reduced(&mut stack, w.letters.iter().rev().map(|h| h.inverse()));
            } else {
                push_reduced(&mut stack, w.letters.iter().copied());
            }
        }
        Word { letters: stack }
    }
}

/// Shortlex: shorter words first, then lexicographic by letter order.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (i, g) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

fn parse_token(token: &str, position: usize) -> Result<Generator> {
    let err = |message: String| Error::Parse { position, message };
    let mut chars = token.chars();
    let head = chars.next().ok_or_else(|| err("empty token".into()))?;
    let (family, inverse) = match head {
        'a' => (Family::A, false),
        'A' => (Family::A, true),
        'b' => (Family::B, false),
        'B' => (Family::B, true),
        'x' => (Family::X, false),
        'X' => (Family::X, true),
        _ => return Err(err(format!("unexpected token `{token}`"))),
    };
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(err(format!("token `{token}` needs a decimal index")));
    }
    let index: u32 = digits.parse().map_err(|_| err(format!("index of `{token}` is too large")))?;
    if index == 0 {
        return Err(err(format!("index of `{token}` must be at least 1")));
    }
    Ok(Generator::new(family, index, inverse))
}

/// Parse the shared word grammar. Positions in errors are byte offsets.
pub fn parse_word(s: &str) -> Result<Word> {
    let mut tokens = Vec::new();
    let mut offset = 0;
    for piece in s.split_whitespace() {
        let at = offset + s[offset..].find(piece).expect("token comes from the input");
        offset = at + piece.len();
        tokens.push((at, piece));
    }
    if tokens.is_empty() {
        return Err(Error::Parse { position: 0, message: "empty word; write `1` for the identity".into() });
    }
    if let Some(&(position, _)) = tokens.iter().find(|(_, t)| *t == "1") {
        if tokens.len() == 1 {
            return Ok(Word::identity());
        }
        return Err(Error::Parse { position, message: "`1` must appear alone".into() });
    }
    let letters = tokens.into_iter().map(|(p, t)| parse_token(t, p)).collect::<Result<Vec<_>>>()?;
    Ok(Word::from_letters(letters))
}

pub fn format_word(w: &Word) -> String {
    w.to_string()
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

#[cfg(test)]
pub(crate) fn w(s: &str) -> Word {
    parse_word(s).unwrap()
}

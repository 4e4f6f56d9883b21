//! Exhaustive enumeration of surface words with incrementally maintained
//! images under one or more homomorphisms.

use std::collections::BTreeMap;

use crate::diagram::HomSpec;
use crate::error::Result;
use crate::splitting::{Side, SplittingHom};
use crate::words::{Generator, Word};

/// Free-group word kept reduced under appends, with an undo log.
#[derive(Default)]
struct ImageStack {
    buf: Vec<Generator>,
    popped: Vec<Generator>,
    log: Vec<(usize, usize)>,
}

impl ImageStack {
    fn push_word(&mut self, w: &[Generator]) {
        let (mut pushed, mut popped) = (0, 0);
        for &g in w {
            if pushed == 0 && self.buf.last() == Some(&g.inverse()) {
                self.popped.push(self.buf.pop().expect("nonempty"));
                popped += 1;
            } else if pushed > 0 && self.buf.last() == Some(&g.inverse()) {
                self.buf.pop();
                pushed -= 1;
            } else {
                self.buf.push(g);
                pushed += 1;
            }
        }
        self.log.push((pushed, popped));
    }

    fn undo(&mut self) {
        let (pushed, popped) = self.log.pop().expect("undo without push");
        self.buf.truncate(self.buf.len() - pushed);
        for _ in 0..popped {
            let g = self.popped.pop().expect("popped letter");
            self.buf.push(g);
        }
    }

    fn is_empty(&self) -> bool {
        self.buf.is_empty()
    }
}

/// Surface letters in shortlex order `a1, A1, b1, B1, a2, …`.
pub(crate) fn surface_letters(genus: u32) -> Vec<Generator> {
    (1..=genus)
        .flat_map(|i| {
            let (a, b) = (Generator::a(i), Generator::b(i));
            [a, a.inverse(), b, b.inverse()]
        })
        .collect()
}

/// Depth-first walk over all nonempty reduced surface words of length
/// `≤ max_len`. The visitor sees the word and, for each spec, whether its
/// image is trivial.
pub(crate) fn walk_reduced_words(
    genus: u32,
    specs: &[&HomSpec],
    max_len: usize,
    mut visit: impl FnMut(&[Generator], &[bool]),
) {
    let letters = surface_letters(genus);
    let images: Vec<Vec<Vec<Generator>>> = specs
        .iter()
        .map(|h| {
            letters
                .iter()
                .map(|&g| {
                    let w = h.image_of(g.positive());
                    if g.is_inverse() {
                        w.inverse().letters().to_vec()
                    } else {
                        w.letters().to_vec()
                    }
                })
                .collect()
        })
        .collect();
    let mut stacks: Vec<ImageStack> = specs.iter().map(|_| ImageStack::default()).collect();
    let mut word: Vec<Generator> = Vec::with_capacity(max_len);
    let mut trivial = vec![false; specs.len()];

    // explicit DFS: `choice[d]` is the next letter index to try at depth d
    let mut choice = vec![0usize; max_len + 1];
    let mut depth = 0;
    loop {
        if depth == max_len || choice[depth] == letters.len() {
            if depth == 0 {
                break;
            }
            choice[depth] = 0;
            depth -= 1;
            word.pop();
            for s in stacks.iter_mut() {
                s.undo();
            }
            continue;
        }
        let k = choice[depth];
        choice[depth] += 1;
        let g = letters[k];
        if word.last() == Some(&g.inverse()) {
            continue;
        }
        word.push(g);
        for (s, img) in stacks.iter_mut().zip(&images) {
            s.push_word(&img[k]);
        }
        for (t, s) in trivial.iter_mut().zip(&stacks) {
            *t = s.is_empty();
        }
        visit(&word, &trivial);
        depth += 1;
    }
}

/// Nonempty reduced words of length `≤ max_len` in the kernel of one side,
/// in shortlex order.
pub fn kernel_words(s: &SplittingHom, side: Side, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    walk_reduced_words(s.genus(), &[s.spec(side)], max_len, |w, trivial| {
        if trivial[0] {
            out.push(Word::from_letters(w.iter().copied()));
        }
    });
    out.sort();
    out
}

/// Cyclic classes of the intersection `K_α ∩ K_β` up to a length bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionEnumeration {
    pub max_len: usize,
    /// One shortlex-least representative per class, in shortlex order.
    pub words: Vec<Word>,
    /// `counts[l]` = number of classes of length `l`, for `0 ≤ l ≤ max_len`.
    pub counts: Vec<usize>,
}

impl IntersectionEnumeration {
    pub fn cumulative(&self) -> Vec<usize> {
        self.counts
            .iter()
            .scan(0, |acc, &c| {
                *acc += c;
                Some(*acc)
            })
            .collect()
    }
}

/// All cyclically reduced words of length `1..=max_len` that lie in both
/// kernels and are nontrivial in `π₁(Σ)`, deduplicated up to cyclic
/// rotation and inversion.
pub fn enumerate_intersection(s: &SplittingHom, max_len: usize) -> Result<IntersectionEnumeration> {
    let surface = s.surface();
    let mut found: BTreeMap<Word, ()> = BTreeMap::new();
    let specs = [s.spec(Side::Alpha), s.spec(Side::Beta)];
    let mut failure = None;
    walk_reduced_words(s.genus(), &specs, max_len, |w, trivial| {
        if !(trivial[0] && trivial[1]) || failure.is_some() {
            return;
        }
        if w.len() > 1 && w[0] == w[w.len() - 1].inverse() {
            return;
        }
        let word = Word::from_letters(w.iter().copied());
        if word.cyclic_class_key() != word {
            return;
        }
        match surface.is_trivial(&word) {
            Ok(false) => {
                found.insert(word, ());
            }
            Ok(true) => {}
            Err(e) => failure = Some(e),
        }
    });
    if let Some(e) = failure {
        return Err(e);
    }
    let mut counts = vec![0; max_len + 1];
    for w in found.keys() {
        counts[w.len()] += 1;
    }
    Ok(IntersectionEnumeration { max_len, words: found.into_keys().collect(), counts })
}

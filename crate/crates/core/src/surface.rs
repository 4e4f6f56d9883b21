//! The closed orientable surface group
//! `⟨a1, b1, …, ag, bg | a1 b1 A1 B1 ⋯ ag bg Ag Bg⟩`.
//!
//! The relator convention (product of commutators `[a_i, b_i]` in index
//! order) is fixed throughout the crate. Genus 1 is handled by exponent
//! sums; genus ≥ 2 by Dehn's algorithm, which is complete here because the
//! standard relator satisfies C′(1/6): every piece has length 1 and the
//! relator has length 4g ≥ 8.

use crate::error::{Error, Result};
use crate::words::{Family, Generator, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurfaceGroup {
    genus: u32,
}

/// The surface relator for genus `g ≥ 1`.
pub fn surface_relator(genus: u32) -> Result<Word> {
    if genus == 0 {
        return Err(Error::InvalidGenus(0));
    }
    let mut letters = Vec::with_capacity(4 * genus as usize);
    for i in 1..=genus {
        let (a, b) = (Generator::a(i), Generator::b(i));
        letters.extend([a, b, a.inverse(), b.inverse()]);
    }
    Ok(Word::from_letters(letters))
}

/// Dense letter code: `4(i-1) + 2·[family = b] + [inverse]`.
fn code(g: Generator) -> usize {
    let fam = usize::from(g.family() == Family::B);
    4 * (g.index() as usize - 1) + 2 * fam + usize::from(g.is_inverse())
}

#[inline]
fn inv(c: usize) -> usize {
    c ^ 1
}

impl SurfaceGroup {
    pub fn new(genus: u32) -> Self {
        SurfaceGroup { genus }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn relator(&self) -> Result<Word> {
        surface_relator(self.genus)
    }

    /// Rejects letters outside `a_i, b_i` with `i ≤ genus`.
    pub fn check_alphabet(&self, w: &Word) -> Result<()> {
        for g in w.letters() {
            if g.family() == Family::X || g.index() > self.genus {
                return Err(Error::Alphabet {
                    generator: g.to_string(),
                    context: format!("the genus-{} surface group", self.genus),
                });
            }
        }
        Ok(())
    }

    /// Exponent-sum image in `H₁(Σ) = Z^{2g}`, coordinates `(a1, b1, a2, b2, …)`.
    pub fn h1_image(&self, w: &Word) -> Result<Vec<i64>> {
        self.check_alphabet(w)?;
        let mut v = vec![0i64; 2 * self.genus as usize];
        for g in w.letters() {
            v[code(g.positive()) / 2] += g.sign();
        }
        Ok(v)
    }

    pub fn is_trivial(&self, w: &Word) -> Result<bool> {
        self.check_alphabet(w)?;
        Ok(match self.genus {
            0 => true,
            1 => self.h1_image(w)?.iter().all(|&e| e == 0),
            g => DehnReducer::new(g).reduces_to_identity(w),
        })
    }

    pub fn equal(&self, u: &Word, w: &Word) -> Result<bool> {
        self.check_alphabet(u)?;
        self.is_trivial(&u.concat(&w.inverse()))
    }
}

/// Dehn's algorithm on cyclic words for the standard relator of genus ≥ 2.
///
/// Each letter occurs exactly once in the relator and once in its inverse,
/// so each position of the word has exactly two candidate alignments.
struct DehnReducer {
    /// Relator and inverse relator as letter codes.
    rels: [Vec<usize>; 2],
    /// `pos[r][c]` = position of letter `c` in `rels[r]`.
    pos: [Vec<usize>; 2],
}

impl DehnReducer {
    fn new(genus: u32) -> Self {
        let r: Vec<usize> =
            surface_relator(genus).expect("genus ≥ 2").letters().iter().map(|&g| code(g)).collect();
        let r_inv: Vec<usize> = r.iter().rev().map(|&c| inv(c)).collect();
        let index = |rel: &[usize]| {
            let mut p = vec![0; rel.len()];
            for (i, &c) in rel.iter().enumerate() {
                p[c] = i;
            }
            p
        };
        let pos = [index(&r), index(&r_inv)];
        DehnReducer { rels: [r, r_inv], pos }
    }

    fn reduces_to_identity(&self, w: &Word) -> bool {
        let mut cur: Vec<usize> = Vec::with_capacity(w.len());
        for g in w.letters() {
            push_code(&mut cur, code(*g));
        }
        cyclically_reduce_codes(&mut cur);
        while !cur.is_empty() {
            match self.find_replacement(&cur) {
                Some((start, rel, offset, len)) => {
                    cur = self.replace(&cur, start, rel, offset, len);
                }
                None => return false,
            }
        }
        true
    }

    /// Leftmost start position, then longest match, of a cyclic subword
    /// agreeing with more than half of a cyclic rotation of the relator or
    /// its inverse. Returns `(start, relator, offset in relator, length)`.
    fn find_replacement(&self, cur: &[usize]) -> Option<(usize, usize, usize, usize)> {
        let m = cur.len();
        let n = self.rels[0].len();
        let half = n / 2;
        for start in 0..m {
            let mut best: Option<(usize, usize, usize)> = None;
            for r in 0..2 {
                let rel = &self.rels[r];
                let offset = self.pos[r][cur[start]];
                let mut len = 0;
                while len < m && len < n && cur[(start + len) % m] == rel[(offset + len) % n] {
                    len += 1;
                }
                if len > half && best.is_none_or(|(_, _, l)| len > l) {
                    best = Some((r, offset, len));
                }
            }
            if let Some((r, offset, len)) = best {
                return Some((start, r, offset, len));
            }
        }
        None
    }

    /// Replace the matched piece `u` by `v⁻¹`, where `u v` is the relator
    /// rotation starting at `offset`, then reduce cyclically.
    fn replace(&self, cur: &[usize], start: usize, r: usize, offset: usize, len: usize) -> Vec<usize> {
        let m = cur.len();
        let rel = &self.rels[r];
        let n = rel.len();
        let mut out = Vec::with_capacity(m + n);
        for k in (len..n).rev() {
            push_code(&mut out, inv(rel[(offset + k) % n]));
        }
        for k in len..m {
            push_code(&mut out, cur[(start + k) % m]);
        }
        cyclically_reduce_codes(&mut out);
        out
    }
}

fn push_code(stack: &mut Vec<usize>, c: usize) {
    if stack.last() == Some(&inv(c)) {
        stack.pop();
    } else {
        stack.push(c);
    }
}

fn cyclically_reduce_codes(w: &mut Vec<usize>) {
    let mut lo = 0;
    let mut hi = w.len();
    while hi - lo >= 2 && w[lo] == inv(w[hi - 1]) {
        lo += 1;
        hi -= 1;
    }
    w.truncate(hi);
    w.drain(..lo);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::w;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_word(rng: &mut StdRng, genus: u32, len: usize) -> Word {
        Word::from_letters((0..len).map(|_| {
            let i = rng.gen_range(1..=genus);
            let g = if rng.gen() { Generator::a(i) } else { Generator::b(i) };
            if rng.gen() {
                g.inverse()
            } else {
                g
            }
        }))
    }

    #[test]
    fn relator_words() {
        assert_eq!(surface_relator(1).unwrap(), w("a1 b1 A1 B1"));
        assert_eq!(surface_relator(2).unwrap(), w("a1 b1 A1 B1 a2 b2 A2 B2"));
        assert_eq!(surface_relator(0), Err(Error::InvalidGenus(0)));
    }

    #[test]
    fn triviality_examples() {
        let g2 = SurfaceGroup::new(2);
        assert!(g2.is_trivial(&surface_relator(2).unwrap()).unwrap());
        assert!(!g2.is_trivial(&w("a1")).unwrap());
        assert!(g2.equal(&surface_relator(2).unwrap(), &Word::identity()).unwrap());
        assert!(SurfaceGroup::new(1).equal(&w("a1 b1"), &w("b1 a1")).unwrap());
        assert!(!g2.equal(&w("a1 b1"), &w("b1 a1")).unwrap());
        // rotations and inverse rotations of the relator
        let r = surface_relator(3).unwrap();
        let g3 = SurfaceGroup::new(3);
        for k in 0..r.len() {
            assert!(g3.is_trivial(&r.rotate(k)).unwrap());
            assert!(g3.is_trivial(&r.inverse().rotate(k)).unwrap());
        }
    }

    #[test]
    fn half_relator_words_are_nontrivial() {
        // exactly half of the relator is not replaced, and the word is nontrivial
        let g2 = SurfaceGroup::new(2);
        assert!(!g2.is_trivial(&w("a1 b1 A1 B1")).unwrap());
        assert!(!g2.is_trivial(&w("a1 b1 A1 B1 a2 b2 A2")).unwrap()); // equals b2
        assert!(g2.equal(&w("a1 b1 A1 B1 a2 b2 A2"), &w("b2")).unwrap());
    }

    #[test]
    fn products_of_relator_conjugates_are_trivial() {
        let mut rng = StdRng::seed_from_u64(7);
        for genus in [2, 3] {
            let g = SurfaceGroup::new(genus);
            let r = surface_relator(genus).unwrap();
            for _ in 0..50 {
                let mut prod = Word::identity();
                for _ in 0..5 {
                    let len = rng.gen_range(0..10);
                    let c = random_word(&mut rng, genus, len);
                    let f = if rng.gen() { r.clone() } else { r.inverse() };
                    prod = prod.concat(&f.conjugate(&c));
                }
                assert!(g.is_trivial(&prod).unwrap(), "{prod}");
            }
        }
    }

    #[test]
    fn alphabet_is_checked() {
        let g2 = SurfaceGroup::new(2);
        assert!(matches!(g2.is_trivial(&w("a3")), Err(Error::Alphabet { .. })));
        assert!(matches!(g2.h1_image(&w("x1")), Err(Error::Alphabet { .. })));
    }

    #[test]
    fn h1_images() {
        assert_eq!(SurfaceGroup::new(2).h1_image(&w("a1 a1 b2")).unwrap(), vec![2, 0, 0, 1]);
        let g3 = SurfaceGroup::new(3);
        assert_eq!(g3.h1_image(&surface_relator(3).unwrap()).unwrap(), vec![0; 6]);
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..100 {
            let u = random_word(&mut rng, 3, 6);
            let v = random_word(&mut rng, 3, 6);
            assert_eq!(g3.h1_image(&u.commutator(&v)).unwrap(), vec![0; 6]);
            let sum: Vec<i64> = g3
                .h1_image(&u)
                .unwrap()
                .iter()
                .zip(g3.h1_image(&v).unwrap())
                .map(|(x, y)| x + y)
                .collect();
            assert_eq!(g3.h1_image(&u.concat(&v)).unwrap(), sum);
        }
    }

    #[test]
    fn genus_one_triviality_matches_h1() {
        let g1 = SurfaceGroup::new(1);
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..200 {
            let len = rng.gen_range(0..8);
            let u = random_word(&mut rng, 1, len);
            let zero = g1.h1_image(&u).unwrap().iter().all(|&e| e == 0);
            assert_eq!(g1.is_trivial(&u).unwrap(), zero);
        }
    }

    #[test]
    fn trivial_words_have_zero_h1_and_equality_is_an_equivalence() {
        let mut rng = StdRng::seed_from_u64(5);
        let g2 = SurfaceGroup::new(2);
        let r = surface_relator(2).unwrap();
        let mut sample = Vec::new();
        for _ in 0..30 {
            let u = random_word(&mut rng, 2, 5);
            let c = random_word(&mut rng, 2, 3);
            sample.push(u.clone());
            // an equal but different spelling
            sample.push(u.concat(&r.conjugate(&c)));
        }
        for u in &sample {
            assert!(g2.equal(u, u).unwrap());
            for v in &sample {
                let uv = g2.equal(u, v).unwrap();
                assert_eq!(uv, g2.equal(v, u).unwrap());
                if uv {
                    assert_eq!(g2.h1_image(u).unwrap(), g2.h1_image(v).unwrap());
                    for t in &sample {
                        if g2.equal(v, t).unwrap() {
                            assert!(g2.equal(u, t).unwrap());
                        }
                    }
                }
            }
        }
    }
}

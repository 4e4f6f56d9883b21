//! Search for an essential simple curve bounding disks on both sides.

use std::collections::BTreeSet;

use crate::error::Result;
use crate::spheres::twist::TwistSet;
use crate::splitting::SplittingHom;
use crate::words::{Generator, Word};

/// Standard simple curves: `a1, b1, …, ag, bg`, then the separating curves
/// `[a1,b1]…[ah,bh]` for `1 ≤ h < g`.
pub fn base_curves(genus: u32) -> Vec<Word> {
    let mut out: Vec<Word> = (1..=genus)
        .flat_map(|i| [Word::letter(Generator::a(i)), Word::letter(Generator::b(i))])
        .collect();
    let mut sep = Word::identity();
    for h in 1..genus {
        let (a, b) = (Word::letter(Generator::a(h)), Word::letter(Generator::b(h)));
        sep = sep.concat(&a.commutator(&b));
        out.push(sep.clone());
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProbeResult {
    /// Cyclically reduced word of a simple curve in `K_α ∩ K_β`, nontrivial in `π₁(Σ)`.
    Reducing(Word),
    NotFound,
}

/// Breadth-first over the twist orbit of the base curves, depth by depth,
/// twists in canonical order. Curves are deduplicated up to cyclic
/// rotation and inversion.
pub fn reducibility_probe(s: &SplittingHom, twist_depth: usize) -> Result<ProbeResult> {
    let surface = s.surface();
    let twists = TwistSet::load(s.genus())?;
    let mut seen = BTreeSet::new();
    let mut level = Vec::new();
    for c in base_curves(s.genus()) {
        if seen.insert(c.cyclic_class_key()) {
            level.push(c);
        }
    }
    for depth in 0..=twist_depth {
        for c in &level {
            if s.in_intersection(c)? && !surface.is_trivial(c)? {
                return Ok(ProbeResult::Reducing(c.cyclic_reduce().0));
            }
        }
        if depth == twist_depth {
            break;
        }
        let mut next = Vec::new();
        for c in &level {
            for t in twists.twists() {
                let image = t.apply(c);
                if seen.insert(image.cyclic_class_key()) {
                    next.push(image);
                }
            }
        }
        level = next;
    }
    Ok(ProbeResult::NotFound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{lens, s2xs1_sum, s3};
    use crate::words::w;

    fn hom(d: crate::diagram::HeegaardDiagram) -> SplittingHom {
        SplittingHom::new(d).unwrap()
    }

    #[test]
    fn base_curve_list() {
        assert_eq!(base_curves(1), vec![w("a1"), w("b1")]);
        let c = base_curves(3);
        assert_eq!(c.len(), 8);
        assert_eq!(c[6], w("a1 b1 A1 B1"));
        assert_eq!(c[7], w("a1 b1 A1 B1 a2 b2 A2 B2"));
    }

    #[test]
    fn probe_examples() {
        assert_eq!(reducibility_probe(&hom(s2xs1_sum(1).unwrap()), 0).unwrap(), ProbeResult::Reducing(w("a1")));
        assert_eq!(
            reducibility_probe(&hom(s3(2).unwrap()), 0).unwrap(),
            ProbeResult::Reducing(w("a1 b1 A1 B1"))
        );
        assert_eq!(reducibility_probe(&hom(lens(5, 2).unwrap()), 2).unwrap(), ProbeResult::NotFound);
        assert_eq!(reducibility_probe(&hom(s3(1).unwrap()), 2).unwrap(), ProbeResult::NotFound);
    }
}

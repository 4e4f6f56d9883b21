//! Second homotopy group calculus. Sphere classes are represented by words
//! in `K_α ∩ K_β`; the class of `γ` vanishes exactly when `γ ∈ [K_α, K_β]`.
//!
//! At genus 1 everything is lattice arithmetic and [`pi2_genus1`] is exact.
//! At higher genus the tools are one-sided: a nonzero [`h1_obstruction`]
//! proves a class nontrivial, a verified [`CommutatorCertificate`] proves it
//! trivial, and otherwise the answer is [`Pi2Verdict::Unknown`].

pub mod certificate;
pub mod enumerate;
pub mod probe;
pub mod twist;

pub use certificate::{
    search_commutator_certificate, verify_commutator_certificate, CertificateSearch, CommutatorCertificate,
    NotFoundReason, SearchBounds,
};
pub use enumerate::{enumerate_intersection, kernel_words, IntersectionEnumeration};
pub use probe::{base_curves, reducibility_probe, ProbeResult};
pub use twist::{apply_twist, intersection_form, is_symplectic, Twist, TwistSet, TWIST_TABLE_VERSION};

use crate::diagram::{validate, HeegaardDiagram};
use crate::error::{Error, Result};
use crate::splitting::SplittingHom;
use crate::words::{Generator, Word};

/// Rank of `π₂(M)` as an abelian group for a valid genus-1 diagram: 1 when
/// the two kernel lattices coincide, 0 otherwise.
pub fn pi2_genus1(d: &HeegaardDiagram) -> Result<u32> {
    if d.genus() != 1 {
        return Err(Error::Precondition(format!("pi2_genus1 needs genus 1, found genus {}", d.genus())));
    }
    let report = validate(d);
    if !report.is_valid() {
        return Err(Error::InvalidDiagram(report.to_string()));
    }
    // the kernel of (p, q): Z² → Z is spanned by (-q, p); two such lines
    // are parallel iff the determinant vanishes
    let row = |h: &crate::diagram::HomSpec| {
        let exp = |g: Generator| h.image_of(g).letters().iter().map(|l| l.sign()).sum::<i64>();
        (exp(Generator::a(1)), exp(Generator::b(1)))
    };
    let (pa, qa) = row(d.alpha());
    let (pb, qb) = row(d.beta());
    Ok(u32::from(pa * qb - qa * pb == 0))
}

fn require_intersection(gamma: &Word, s: &SplittingHom) -> Result<()> {
    if s.in_intersection(gamma)? {
        Ok(())
    } else {
        Err(Error::NotInIntersection { word: gamma.clone() })
    }
}

/// `H₁(Σ)` image of a word in `K_α ∩ K_β`. Nonzero output proves the
/// sphere class nontrivial, since `[K_α, K_β]` maps to zero.
pub fn h1_obstruction(gamma: &Word, s: &SplittingHom) -> Result<Vec<i64>> {
    require_intersection(gamma, s)?;
    s.surface().h1_image(gamma)
}

/// Action of a `π₁(M)` element, given by a surface word preimage `g`, on the
/// class of `gamma`: conjugation `g γ g⁻¹`.
pub fn act_pi1(g: &Word, gamma: &Word, s: &SplittingHom) -> Result<Word> {
    s.surface().check_alphabet(g)?;
    require_intersection(gamma, s)?;
    Ok(gamma.conjugate(g))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pi2Verdict {
    /// `gamma` is trivial in `π₁(Σ)`, or genus 1 where the quotient is the
    /// intersection itself.
    Trivial,
    NontrivialByH1(Vec<i64>),
    CertifiedTrivialClass(CommutatorCertificate),
    Unknown,
}

/// A word in `K_α ∩ K_β` together with its splitting.
#[derive(Debug, Clone)]
pub struct SphereClass<'a> {
    gamma: Word,
    splitting: &'a SplittingHom,
}

impl<'a> SphereClass<'a> {
    pub fn new(gamma: Word, splitting: &'a SplittingHom) -> Result<Self> {
        require_intersection(&gamma, splitting)?;
        Ok(SphereClass { gamma, splitting })
    }

    pub fn gamma(&self) -> &Word {
        &self.gamma
    }

    pub fn splitting(&self) -> &'a SplittingHom {
        self.splitting
    }

    pub fn obstruction(&self) -> Vec<i64> {
        self.splitting.surface().h1_image(&self.gamma).expect("checked alphabet")
    }

    pub fn act(&self, g: &Word) -> Result<SphereClass<'a>> {
        Ok(SphereClass { gamma: act_pi1(g, &self.gamma, self.splitting)?, splitting: self.splitting })
    }

    /// Decide what can be decided about the class.
    pub fn classify(&self, bounds: SearchBounds) -> Result<Pi2Verdict> {
        let surface = self.splitting.surface();
        if surface.is_trivial(&self.gamma)? {
            return Ok(Pi2Verdict::Trivial);
        }
        let h1 = self.obstruction();
        if h1.iter().any(|&e| e != 0) {
            return Ok(Pi2Verdict::NontrivialByH1(h1));
        }
        if self.splitting.genus() == 1 {
            // the lattice is torsion-free, so zero homology means trivial
            return Ok(Pi2Verdict::Trivial);
        }
        Ok(match search_commutator_certificate(&self.gamma, self.splitting, bounds)? {
            CertificateSearch::Found(c) => Pi2Verdict::CertifiedTrivialClass(c),
            CertificateSearch::NotFound(_) => Pi2Verdict::Unknown,
        })
    }
}

/// Manifold-level answer to "is `π₂(M)` nonzero?".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pi2Status {
    /// A word in the intersection with nonzero homology.
    Nontrivial { witness: Word, obstruction: Vec<i64> },
    /// Exact at genus 1.
    Trivial,
    /// Genus ≥ 2 and no obstruction among the words scanned.
    NoObstructionFound,
}

impl Pi2Status {
    pub fn is_nontrivial(&self) -> bool {
        matches!(self, Pi2Status::Nontrivial { .. })
    }
}

/// At genus 1 use the exact lattice criterion. Otherwise scan the base
/// curves and then the intersection up to `max_len` for a word with
/// nonzero homology.
pub fn pi2_status(s: &SplittingHom, max_len: usize) -> Result<Pi2Status> {
    let surface = s.surface();
    let with_obstruction = |w: &Word| -> Result<Option<Pi2Status>> {
        let h1 = surface.h1_image(w)?;
        Ok(h1.iter().any(|&e| e != 0).then(|| Pi2Status::Nontrivial { witness: w.clone(), obstruction: h1 }))
    };
    if s.genus() == 1 && pi2_genus1(s.diagram())? == 0 {
        return Ok(Pi2Status::Trivial);
    }
    for c in base_curves(s.genus()) {
        if s.in_intersection(&c)? {
            if let Some(found) = with_obstruction(&c)? {
                return Ok(found);
            }
        }
    }
    for w in enumerate_intersection(s, max_len)?.words {
        if let Some(found) = with_obstruction(&w)? {
            return Ok(found);
        }
    }
    Ok(Pi2Status::NoObstructionFound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{lens, s2xs1_sum, s3, stabilize};
    use crate::words::w;

    fn hom(d: HeegaardDiagram) -> SplittingHom {
        SplittingHom::new(d).unwrap()
    }

    #[test]
    fn genus_one_ranks() {
        assert_eq!(pi2_genus1(&s3(1).unwrap()).unwrap(), 0);
        assert_eq!(pi2_genus1(&lens(5, 2).unwrap()).unwrap(), 0);
        assert_eq!(pi2_genus1(&s2xs1_sum(1).unwrap()).unwrap(), 1);
        assert!(matches!(pi2_genus1(&s3(2).unwrap()), Err(Error::Precondition(_))));
    }

    #[test]
    fn obstruction_examples() {
        let t = hom(s2xs1_sum(1).unwrap());
        assert_eq!(h1_obstruction(&w("a1"), &t).unwrap(), vec![1, 0]);
        let s = hom(s3(2).unwrap());
        assert_eq!(h1_obstruction(&w("a1 b1 A1 B1"), &s).unwrap(), vec![0; 4]);
        assert!(matches!(h1_obstruction(&w("a1"), &s), Err(Error::NotInIntersection { .. })));
    }

    #[test]
    fn action_examples() {
        let t = hom(s2xs1_sum(1).unwrap());
        assert_eq!(act_pi1(&w("1"), &w("a1"), &t).unwrap(), w("a1"));
        let moved = act_pi1(&w("b1"), &w("a1"), &t).unwrap();
        assert_eq!(moved, w("b1 a1 B1"));
        assert!(t.in_intersection(&moved).unwrap());
        assert_eq!(h1_obstruction(&moved, &t).unwrap(), vec![1, 0]);
        let back = act_pi1(&w("B1"), &moved, &t).unwrap();
        assert!(t.surface().equal(&back, &w("a1")).unwrap());
    }

    #[test]
    fn classification() {
        let s = hom(s3(2).unwrap());
        let bounds = SearchBounds { max_factors: 1, max_word_len: 2, max_checks: 100_000 };
        let c = SphereClass::new(w("a1 b1 A1 B1"), &s).unwrap();
        assert_eq!(
            c.classify(bounds).unwrap(),
            Pi2Verdict::CertifiedTrivialClass(CommutatorCertificate::new(vec![(w("a1"), w("b1"))]))
        );
        assert_eq!(SphereClass::new(w("1"), &s).unwrap().classify(bounds).unwrap(), Pi2Verdict::Trivial);
        let t = hom(s2xs1_sum(1).unwrap());
        assert_eq!(
            SphereClass::new(w("A1"), &t).unwrap().classify(bounds).unwrap(),
            Pi2Verdict::NontrivialByH1(vec![-1, 0])
        );
        assert!(SphereClass::new(w("b1"), &t).is_err());
    }

    #[test]
    fn manifold_status() {
        assert_eq!(pi2_status(&hom(s3(1).unwrap()), 4).unwrap(), Pi2Status::Trivial);
        assert!(pi2_status(&hom(s2xs1_sum(1).unwrap()), 4).unwrap().is_nontrivial());
        let st = stabilize(&s2xs1_sum(1).unwrap()).unwrap();
        assert_eq!(
            pi2_status(&hom(st), 4).unwrap(),
            Pi2Status::Nontrivial { witness: w("a1"), obstruction: vec![1, 0, 0, 0] }
        );
        let st = stabilize(&lens(5, 2).unwrap()).unwrap();
        assert_eq!(pi2_status(&hom(st), 4).unwrap(), Pi2Status::NoObstructionFound);
    }
}

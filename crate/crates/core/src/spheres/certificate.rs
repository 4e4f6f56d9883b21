//! Commutator certificates: finite witnesses that a word lies in
//! `[K_α, K_β]`, so that its sphere class vanishes.

use std::fmt;

use crate::error::{Error, Result};
use crate::spheres::enumerate::kernel_words;
use crate::splitting::{Side, SplittingHom};
use crate::words::{parse_word, Word};

/// Factors `(A_i, B_i)` standing for the product `Π [A_i, B_i]`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CommutatorCertificate {
    pub factors: Vec<(Word, Word)>,
}

impl CommutatorCertificate {
    pub fn new(factors: Vec<(Word, Word)>) -> Self {
        CommutatorCertificate { factors }
    }

    pub fn product(&self) -> Word {
        self.factors.iter().fold(Word::identity(), |acc, (a, b)| acc.concat(&a.commutator(b)))
    }

    /// Parse the certificate file format: one `A: <word> ; B: <word>` per
    /// line, `#` comments, blank lines ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut factors = Vec::new();
        let mut offset = 0;
        for raw in text.split_inclusive('\n') {
            let start = offset;
            offset += raw.len();
            let body = raw.split('#').next().unwrap_or("");
            if body.trim().is_empty() {
                continue;
            }
            let bad = |message: &str| Error::Parse { position: start, message: message.into() };
            let (lhs, rhs) = body.split_once(';').ok_or_else(|| bad("expected `A: <word> ; B: <word>`"))?;
            let a = lhs.trim().strip_prefix("A:").ok_or_else(|| bad("expected `A:`"))?;
            let b = rhs.trim().strip_prefix("B:").ok_or_else(|| bad("expected `B:`"))?;
            let reposition = |e: Error| match e {
                Error::Parse { message, .. } => Error::Parse { position: start, message },
                other => other,
            };
            factors.push((parse_word(a).map_err(reposition)?, parse_word(b).map_err(reposition)?));
        }
        Ok(CommutatorCertificate { factors })
    }
}

impl fmt::Display for CommutatorCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in &self.factors {
            writeln!(f, "A: {a} ; B: {b}")?;
        }
        Ok(())
    }
}

/// `true` iff every `A_i ∈ K_α`, every `B_i ∈ K_β`, and `gamma = Π [A_i, B_i]`
/// in the surface group.
pub fn verify_commutator_certificate(gamma: &Word, cert: &CommutatorCertificate, s: &SplittingHom) -> Result<bool> {
    let surface = s.surface();
    surface.check_alphabet(gamma)?;
    for (a, b) in &cert.factors {
        surface.check_alphabet(a)?;
        surface.check_alphabet(b)?;
    }
    for (a, b) in &cert.factors {
        if !s.in_kernel(a, Side::Alpha)? || !s.in_kernel(b, Side::Beta)? {
            return Ok(false);
        }
    }
    surface.equal(gamma, &cert.product())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    pub max_factors: usize,
    pub max_word_len: usize,
    /// Cap on surface-equality tests.
    pub max_checks: u64,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds { max_factors: 3, max_word_len: 8, max_checks: 2_000_000 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotFoundReason {
    /// `gamma` has nonzero homology, so no certificate exists.
    ObstructedByH1(Vec<i64>),
    /// The bounded search space was exhausted.
    SpaceExhausted,
    /// `max_checks` was reached before the space was exhausted.
    CheckLimit,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateSearch {
    Found(CommutatorCertificate),
    NotFound(NotFoundReason),
}

struct Search<'a> {
    s: &'a SplittingHom,
    gamma: &'a Word,
    /// Kernel words grouped by length: `alpha[l]`, `beta[l]`.
    alpha: Vec<Vec<Word>>,
    beta: Vec<Vec<Word>>,
    max_len: usize,
    checks: u64,
    max_checks: u64,
}

enum Step {
    Found(Vec<(Word, Word)>),
    Continue,
    Stop,
}

impl Search<'_> {
    /// Choose the remaining `k` factors with total length exactly `budget`.
    fn choose(&mut self, prefix: &mut Vec<(Word, Word)>, product: &Word, k: usize, budget: usize) -> Result<Step> {
        if k == 0 {
            if budget != 0 {
                return Ok(Step::Continue);
            }
            if self.checks >= self.max_checks {
                return Ok(Step::Stop);
            }
            self.checks += 1;
            return Ok(if self.s.surface().equal(self.gamma, product)? {
                Step::Found(prefix.clone())
            } else {
                Step::Continue
            });
        }
        let min_rest = 2 * (k - 1);
        if budget < 2 + min_rest {
            return Ok(Step::Continue);
        }
        let max_here = if k == 1 { budget } else { budget - min_rest };
        for total in 2..=max_here.min(2 * self.max_len) {
            if k == 1 && total != budget {
                continue;
            }
            for la in 1..total {
                let lb = total - la;
                if la > self.max_len || lb > self.max_len {
                    continue;
                }
                for ia in 0..self.alpha[la].len() {
                    for ib in 0..self.beta[lb].len() {
                        let a = self.alpha[la][ia].clone();
                        let b = self.beta[lb][ib].clone();
                        let c = a.commutator(&b);
                        if c.is_empty() {
                            continue;
                        }
                        let next = product.concat(&c);
                        prefix.push((a, b));
                        let step = self.choose(prefix, &next, k - 1, budget - total)?;
                        prefix.pop();
                        match step {
                            Step::Continue => {}
                            other => return Ok(other),
                        }
                    }
                }
            }
        }
        Ok(Step::Continue)
    }
}

/// Bounded search for a certificate of `gamma ∈ [K_α, K_β]`. Factor counts
/// are tried in increasing order, then total length, then shortlex order of
/// the factors, so the first certificate found is canonical.
pub fn search_commutator_certificate(
    gamma: &Word,
    s: &SplittingHom,
    bounds: SearchBounds,
) -> Result<CertificateSearch> {
    if bounds.max_factors == 0 || bounds.max_word_len == 0 {
        return Err(Error::Precondition("search bounds must be at least 1".into()));
    }
    if !s.in_intersection(gamma)? {
        return Err(Error::NotInIntersection { word: gamma.clone() });
    }
    let surface = s.surface();
    if surface.is_trivial(gamma)? {
        return Ok(CertificateSearch::Found(CommutatorCertificate::default()));
    }
    let h1 = surface.h1_image(gamma)?;
    if h1.iter().any(|&e| e != 0) {
        return Ok(CertificateSearch::NotFound(NotFoundReason::ObstructedByH1(h1)));
    }
    let group = |words: Vec<Word>| {
        let mut by_len = vec![Vec::new(); bounds.max_word_len + 1];
        for w in words {
            by_len[w.len()].push(w);
        }
        by_len
    };
    let mut search = Search {
        s,
        gamma,
        alpha: group(kernel_words(s, Side::Alpha, bounds.max_word_len)),
        beta: group(kernel_words(s, Side::Beta, bounds.max_word_len)),
        max_len: bounds.max_word_len,
        checks: 0,
        max_checks: bounds.max_checks,
    };
    for k in 1..=bounds.max_factors {
        for budget in 2 * k..=2 * k * bounds.max_word_len {
            match search.choose(&mut Vec::new(), &Word::identity(), k, budget)? {
                Step::Found(factors) => return Ok(CertificateSearch::Found(CommutatorCertificate::new(factors))),
                Step::Stop => return Ok(CertificateSearch::NotFound(NotFoundReason::CheckLimit)),
                Step::Continue => {}
            }
        }
    }
    Ok(CertificateSearch::NotFound(NotFoundReason::SpaceExhausted))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{s2xs1_sum, s3};
    use crate::words::w;

    fn hom(d: crate::diagram::HeegaardDiagram) -> SplittingHom {
        SplittingHom::new(d).unwrap()
    }

    #[test]
    fn verification_examples() {
        let s = hom(s3(2).unwrap());
        let cert = CommutatorCertificate::new(vec![(w("a1"), w("b1"))]);
        assert!(verify_commutator_certificate(&w("a1 b1 A1 B1"), &cert, &s).unwrap());
        assert!(verify_commutator_certificate(&w("1"), &CommutatorCertificate::default(), &s).unwrap());
        // wrong sides
        let swapped = CommutatorCertificate::new(vec![(w("b1"), w("a1"))]);
        assert!(!verify_commutator_certificate(&w("b1 a1 B1 A1"), &swapped, &s).unwrap());
        // a different spelling of the same element
        let r = crate::surface::surface_relator(2).unwrap();
        assert!(verify_commutator_certificate(&w("a1 b1 A1 B1").concat(&r.conjugate(&w("b2"))), &cert, &s).unwrap());

        let t = hom(s2xs1_sum(1).unwrap());
        let cert = CommutatorCertificate::new(vec![(w("a1"), w("a1 b1 a1 B1"))]);
        assert!(!verify_commutator_certificate(&w("a1"), &cert, &t).unwrap());
        assert!(matches!(
            verify_commutator_certificate(&w("x1"), &cert, &t),
            Err(Error::Alphabet { .. })
        ));
    }

    #[test]
    fn search_examples() {
        let s = hom(s3(2).unwrap());
        let bounds = SearchBounds { max_factors: 1, max_word_len: 4, max_checks: 1_000_000 };
        assert_eq!(
            search_commutator_certificate(&w("a1 b1 A1 B1"), &s, bounds).unwrap(),
            CertificateSearch::Found(CommutatorCertificate::new(vec![(w("a1"), w("b1"))]))
        );
        assert_eq!(
            search_commutator_certificate(&w("1"), &s, bounds).unwrap(),
            CertificateSearch::Found(CommutatorCertificate::default())
        );
        let t = hom(s2xs1_sum(1).unwrap());
        assert_eq!(
            search_commutator_certificate(&w("a1"), &t, bounds).unwrap(),
            CertificateSearch::NotFound(NotFoundReason::ObstructedByH1(vec![1, 0]))
        );
        assert!(matches!(
            search_commutator_certificate(&w("b1"), &t, bounds),
            Err(Error::NotInIntersection { .. })
        ));
    }

    #[test]
    fn search_finds_two_factor_products() {
        let s = hom(s3(2).unwrap());
        let gamma = w("a1 b1 A1 B1 a2 b2 A2 B2").concat(&w("a1 b2 A1 B2"));
        let bounds = SearchBounds { max_factors: 2, max_word_len: 1, max_checks: 1_000_000 };
        match search_commutator_certificate(&gamma, &s, bounds).unwrap() {
            CertificateSearch::Found(c) => {
                assert!(c.factors.len() <= 2);
                assert!(verify_commutator_certificate(&gamma, &c, &s).unwrap());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn search_reports_exhaustion_and_limits() {
        let s = hom(s3(2).unwrap());
        // in the intersection with zero homology, but not a single short commutator
        let gamma = w("a1 b1 A1 B1 a1 b1 A1 B1");
        let tight = SearchBounds { max_factors: 1, max_word_len: 1, max_checks: 1_000_000 };
        assert_eq!(
            search_commutator_certificate(&gamma, &s, tight).unwrap(),
            CertificateSearch::NotFound(NotFoundReason::SpaceExhausted)
        );
        let capped = SearchBounds { max_factors: 1, max_word_len: 3, max_checks: 5 };
        assert_eq!(
            search_commutator_certificate(&gamma, &s, capped).unwrap(),
            CertificateSearch::NotFound(NotFoundReason::CheckLimit)
        );
    }

    #[test]
    fn certificate_file_format() {
        let c = CommutatorCertificate::parse("# one factor\nA: a1 ; B: b1\n\nA: A2 b1 a2 B1 ; B: 1\n").unwrap();
        assert_eq!(c.factors, vec![(w("a1"), w("b1")), (w("A2 b1 a2 B1"), w("1"))]);
        assert_eq!(CommutatorCertificate::parse(&c.to_string()).unwrap(), c);
        assert!(CommutatorCertificate::parse("A: a1 B: b1\n").is_err());
        assert!(CommutatorCertificate::parse("A: a1 ; C: b1\n").is_err());
        assert!(matches!(
            CommutatorCertificate::parse("A: a1 ; B: b1\nA: a0 ; B: b1\n"),
            Err(Error::Parse { position: 14, .. })
        ));
        assert_eq!(CommutatorCertificate::parse("").unwrap(), CommutatorCertificate::default());
    }
}

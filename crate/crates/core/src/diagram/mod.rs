//! Heegaard diagrams: the two handlebody sides of a genus-g splitting, each
//! given as an epimorphism from the surface group onto a free group of rank g,
//! plus optional attaching curves normally generating the beta kernel.

mod format;

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::splitting::folding::FoldedGraph;
use crate::surface::{surface_relator, SurfaceGroup};
use crate::words::{Family, Generator, Word};

pub use format::{parse_diagram, write_diagram};

/// A homomorphism from the genus-g surface group to the free group on
/// `x1 … xg`, given by the images of `a1, b1, a2, b2, …` in that order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HomSpec {
    genus: u32,
    images: Vec<Word>,
}

impl HomSpec {
    pub fn new(genus: u32, images: Vec<Word>) -> Result<Self> {
        if genus == 0 {
            return Err(Error::InvalidGenus(0));
        }
        if images.len() != 2 * genus as usize {
            return Err(Error::Precondition(format!(
                "a genus-{genus} homomorphism needs {} generator images, got {}",
                2 * genus,
                images.len()
            )));
        }
        for w in &images {
            if let Some(g) = w.letters().iter().find(|g| g.family() != Family::X || g.index() > genus) {
                return Err(Error::Alphabet {
                    generator: g.to_string(),
                    context: format!("the rank-{genus} free group"),
                });
            }
        }
        Ok(HomSpec { genus, images })
    }

    /// `a_i ↦ 1`, `b_i ↦ x_i`.
    pub fn standard(genus: u32) -> Self {
        let images = (1..=genus)
            .flat_map(|i| [Word::identity(), Word::letter(Generator::x(i))])
            .collect();
        HomSpec { genus, images }
    }

    pub fn is_standard(&self) -> bool {
        *self == HomSpec::standard(self.genus)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    /// Image of a positive surface generator.
    pub fn image_of(&self, g: Generator) -> &Word {
        let slot = 2 * (g.index() as usize - 1) + usize::from(g.family() == Family::B);
        &self.images[slot]
    }

    /// Image of a surface word, freely reduced.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        SurfaceGroup::new(self.genus).check_alphabet(w)?;
        Ok(w.substitute(|g| self.image_of(g).clone()))
    }

    pub fn relator_image(&self) -> Word {
        self.apply(&surface_relator(self.genus).expect("genus ≥ 1")).expect("relator is in the alphabet")
    }

    /// A generator `x_i` outside the image subgroup, or `None` if the map is onto.
    pub fn surjectivity_witness(&self) -> Option<Word> {
        let graph = FoldedGraph::from_words(&self.images);
        (1..=self.genus)
            .map(|i| Word::letter(Generator::x(i)))
            .find(|x| !graph.accepts(x))
    }

    /// Extend to genus + 1 with `a_{g+1} ↦ a`, `b_{g+1} ↦ b`.
    fn extended(&self, a: Word, b: Word) -> HomSpec {
        let mut images = self.images.clone();
        images.push(a);
        images.push(b);
        HomSpec { genus: self.genus + 1, images }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HeegaardDiagram {
    genus: u32,
    alpha: HomSpec,
    beta: HomSpec,
    beta_curves: Option<Vec<Word>>,
}

impl HeegaardDiagram {
    /// Assemble a diagram. Checks shapes and alphabets only; use
    /// [`validate`] for the homomorphism, surjectivity and curve checks.
    pub fn new(alpha: HomSpec, beta: HomSpec, beta_curves: Option<Vec<Word>>) -> Result<Self> {
        let genus = alpha.genus();
        if beta.genus() != genus {
            return Err(Error::GenusMismatch { expected: genus, found: beta.genus() });
        }
        if let Some(curves) = &beta_curves {
            let surface = SurfaceGroup::new(genus);
            for c in curves {
                surface.check_alphabet(c)?;
            }
        }
        Ok(HeegaardDiagram { genus, alpha, beta, beta_curves })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn alpha(&self) -> &HomSpec {
        &self.alpha
    }

    pub fn beta(&self) -> &HomSpec {
        &self.beta
    }

    pub fn beta_curves(&self) -> Option<&[Word]> {
        self.beta_curves.as_deref()
    }

    pub fn surface(&self) -> SurfaceGroup {
        SurfaceGroup::new(self.genus)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail { witness: Option<Word>, detail: String },
    NotApplicable,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        !matches!(self, Verdict::Fail { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub verdict: Verdict,
}

/// Per-check verdicts of [`validate`]; failures carry witness words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramReport {
    pub checks: Vec<Check>,
}

impl DiagramReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.verdict.passed())
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.verdict.passed())
    }
}

impl fmt::Display for DiagramReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.verdict {
                Verdict::Pass => writeln!(f, "{}: pass", c.name)?,
                Verdict::NotApplicable => writeln!(f, "{}: n/a", c.name)?,
                Verdict::Fail { witness: Some(w), detail } => {
                    writeln!(f, "{}: FAIL ({detail}; witness {w})", c.name)?
                }
                Verdict::Fail { witness: None, detail } => writeln!(f, "{}: FAIL ({detail})", c.name)?,
            }
        }
        Ok(())
    }
}

fn relator_check(name: &'static str, h: &HomSpec) -> Check {
    let image = h.relator_image();
    let verdict = if image.is_empty() {
        Verdict::Pass
    } else {
        Verdict::Fail { detail: "relator image is not the identity".into(), witness: Some(image) }
    };
    Check { name, verdict }
}

fn surjectivity_check(name: &'static str, h: &HomSpec) -> Check {
    let verdict = match h.surjectivity_witness() {
        None => Verdict::Pass,
        Some(x) => Verdict::Fail { detail: "generator not in the image".into(), witness: Some(x) },
    };
    Check { name, verdict }
}

pub fn validate(d: &HeegaardDiagram) -> DiagramReport {
    let mut checks = vec![
        relator_check("alpha relator", &d.alpha),
        surjectivity_check("alpha surjective", &d.alpha),
        relator_check("beta relator", &d.beta),
        surjectivity_check("beta surjective", &d.beta),
    ];
    match &d.beta_curves {
        None => {
            checks.push(Check { name: "beta curve count", verdict: Verdict::NotApplicable });
            checks.push(Check { name: "beta curves in kernel", verdict: Verdict::NotApplicable });
        }
        Some(curves) => {
            let count = if curves.len() == d.genus as usize {
                Verdict::Pass
            } else {
                Verdict::Fail {
                    detail: format!("expected {} curves, found {}", d.genus, curves.len()),
                    witness: None,
                }
            };
            checks.push(Check { name: "beta curve count", verdict: count });
            let bad = curves.iter().find_map(|c| {
                let image = d.beta.apply(c).ok()?;
                (!image.is_empty()).then(|| (c.clone(), image))
            });
            let membership = match bad {
                None => Verdict::Pass,
                Some((c, image)) => Verdict::Fail { detail: format!("beta image is {image}"), witness: Some(c) },
            };
            checks.push(Check { name: "beta curves in kernel", verdict: membership });
        }
    }
    DiagramReport { checks }
}

fn xpow(i: u32, n: i64) -> Word {
    Word::letter(Generator::x(i)).pow(n)
}

fn letter_pow(g: Generator, n: i64) -> Word {
    Word::letter(g).pow(n)
}

/// `beta: a_i ↦ x_i, b_i ↦ 1`, curves `b_i`.
pub fn s3(genus: u32) -> Result<HeegaardDiagram> {
    if genus == 0 {
        return Err(Error::InvalidBuiltin { name: "s3".into(), reason: "genus must be at least 1".into() });
    }
    let beta = (1..=genus).flat_map(|i| [xpow(i, 1), Word::identity()]).collect();
    let curves = (1..=genus).map(|i| Word::letter(Generator::b(i))).collect();
    HeegaardDiagram::new(HomSpec::standard(genus), HomSpec::new(genus, beta)?, Some(curves))
}

/// Genus 1, curve `b1^p a1^q`, `beta: a1 ↦ x1^p, b1 ↦ x1^{-q}`.
pub fn lens(p: i64, q: i64) -> Result<HeegaardDiagram> {
    let bad = |reason: &str| Error::InvalidBuiltin { name: "lens".into(), reason: reason.into() };
    if p < 2 {
        return Err(bad("p must be at least 2"));
    }
    if q < 1 || q >= p {
        return Err(bad("q must satisfy 1 ≤ q < p"));
    }
    if p.gcd(&q) != 1 {
        return Err(bad("p and q must be coprime"));
    }
    let beta = HomSpec::new(1, vec![xpow(1, p), xpow(1, -q)])?;
    let curve = letter_pow(Generator::b(1), p).concat(&letter_pow(Generator::a(1), q));
    HeegaardDiagram::new(HomSpec::standard(1), beta, Some(vec![curve]))
}

/// Standard genus-g splitting of the connected sum of g copies of S²×S¹:
/// beta equals alpha, curves `a_i`.
pub fn s2xs1_sum(genus: u32) -> Result<HeegaardDiagram> {
    if genus == 0 {
        return Err(Error::InvalidBuiltin { name: "s2xs1_sum".into(), reason: "genus must be at least 1".into() });
    }
    let curves = (1..=genus).map(|i| Word::letter(Generator::a(i))).collect();
    HeegaardDiagram::new(HomSpec::standard(genus), HomSpec::standard(genus), Some(curves))
}

/// Catalog lookup by name: `s3` (params `[g]`), `lens` (`[p, q]`),
/// `s2xs1_sum` (`[g]`).
pub fn builtin(name: &str, params: &[i64]) -> Result<HeegaardDiagram> {
    let bad = |reason: String| Error::InvalidBuiltin { name: name.into(), reason };
    let genus = |params: &[i64]| -> Result<u32> {
        match params {
            [] => Ok(1),
            [g] if *g >= 1 && *g <= u32::MAX as i64 => Ok(*g as u32),
            [_] => Err(bad("genus must be at least 1".into())),
            _ => Err(bad(format!("expected one parameter, got {}", params.len()))),
        }
    };
    match name {
        "s3" => s3(genus(params)?),
        "s2xs1_sum" => s2xs1_sum(genus(params)?),
        "lens" => match params {
            [p, q] => lens(*p, *q),
            _ => Err(bad("expected parameters p,q".into())),
        },
        _ => Err(bad("unknown catalog entry (expected s3, lens or s2xs1_sum)".into())),
    }
}

/// Add a trivially glued handle: alpha `a_{g+1} ↦ 1, b_{g+1} ↦ x_{g+1}`,
/// beta `a_{g+1} ↦ x_{g+1}, b_{g+1} ↦ 1`, extra curve `b_{g+1}`.
pub fn stabilize(d: &HeegaardDiagram) -> Result<HeegaardDiagram> {
    let report = validate(d);
    if !report.is_valid() {
        return Err(Error::InvalidDiagram(report.to_string().trim_end().replace('\n', "; ")));
    }
    let g = d.genus + 1;
    let alpha = d.alpha.extended(Word::identity(), xpow(g, 1));
    let beta = d.beta.extended(xpow(g, 1), Word::identity());
    let curves = d.beta_curves.as_ref().map(|cs| {
        let mut cs = cs.clone();
        cs.push(Word::letter(Generator::b(g)));
        cs
    });
    HeegaardDiagram::new(alpha, beta, curves)
}

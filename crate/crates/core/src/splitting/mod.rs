//! The splitting homomorphism `π₁(Σ) → π₁(H_α) × π₁(H_β)` of a valid
//! diagram, its kernels, and the invariants of `π₁(M)` read off from it.

pub mod coset;
pub mod folding;
pub mod snf;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::diagram::{validate, HeegaardDiagram, HomSpec};
use crate::error::{Error, Result};
use crate::surface::SurfaceGroup;
use crate::words::{Generator, Word};

pub use coset::{enumerate_cosets, CosetTable};
pub use snf::{smith_normal_form, IntMatrix, SmithForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Alpha,
    Beta,
}

/// Whether the images generate the free group of rank `h.genus()`.
pub fn check_surjective(h: &HomSpec) -> bool {
    h.surjectivity_witness().is_none()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplittingHom {
    diagram: HeegaardDiagram,
}

/// `⟨x1, …, xg | relators⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub generator_count: u32,
    pub relators: Vec<Word>,
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (1..=self.generator_count).map(|i| Generator::x(i).to_string()).collect();
        let rels: Vec<String> = self.relators.iter().map(|r| r.to_string()).collect();
        write!(f, "⟨{} | {}⟩", gens.join(", "), rels.join(", "))
    }
}

impl Presentation {
    /// Exponent-sum matrix, one row per relator.
    pub fn relation_matrix(&self) -> IntMatrix {
        let n = self.generator_count as usize;
        let rows: Vec<Vec<i64>> = self
            .relators
            .iter()
            .map(|r| {
                let mut row = vec![0i64; n];
                for g in r.letters() {
                    row[g.index() as usize - 1] += g.sign();
                }
                row
            })
            .collect();
        if rows.is_empty() {
            IntMatrix::zero(0, n)
        } else {
            IntMatrix::from_rows(&rows)
        }
    }
}

/// Invariant-factor decomposition `Z^rank ⊕ Z/t1 ⊕ … ⊕ Z/tk`, `t1 | t2 | …`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AbelianInvariants {
    pub rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    /// Group order when finite.
    pub fn order(&self) -> Option<BigInt> {
        (self.rank == 0).then(|| self.torsion.iter().product())
    }

    pub fn from_invariant_factors(factors: &[BigInt], generators: usize) -> Self {
        let nonzero = factors.iter().filter(|d| !d.is_zero()).count();
        AbelianInvariants {
            rank: generators - nonzero,
            torsion: factors.iter().filter(|d| !d.is_zero() && !d.is_one()).cloned().collect(),
        }
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderVerdict {
    Finite(usize),
    /// `H₁` has positive rank, so the group is infinite.
    InfiniteByH1,
    /// Enumeration exceeded the coset limit.
    Unknown { limit: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Membership {
    Yes,
    No,
    Unknown,
}

impl SplittingHom {
    /// Fails with [`Error::InvalidDiagram`] unless every check passes.
    pub fn new(diagram: HeegaardDiagram) -> Result<Self> {
        let report = validate(&diagram);
        if !report.is_valid() {
            let summary: Vec<String> = report.failures().map(|c| c.name.to_string()).collect();
            return Err(Error::InvalidDiagram(format!("failed checks: {}", summary.join(", "))));
        }
        Ok(SplittingHom { diagram })
    }

    pub fn diagram(&self) -> &HeegaardDiagram {
        &self.diagram
    }

    pub fn genus(&self) -> u32 {
        self.diagram.genus()
    }

    pub fn surface(&self) -> SurfaceGroup {
        self.diagram.surface()
    }

    pub fn spec(&self, side: Side) -> &HomSpec {
        match side {
            Side::Alpha => self.diagram.alpha(),
            Side::Beta => self.diagram.beta(),
        }
    }

    pub fn image(&self, w: &Word, side: Side) -> Result<Word> {
        self.spec(side).apply(w)
    }

    pub fn image_alpha(&self, w: &Word) -> Result<Word> {
        self.image(w, Side::Alpha)
    }

    pub fn image_beta(&self, w: &Word) -> Result<Word> {
        self.image(w, Side::Beta)
    }

    pub fn in_kernel(&self, w: &Word, side: Side) -> Result<bool> {
        Ok(self.image(w, side)?.is_empty())
    }

    pub fn in_intersection(&self, w: &Word) -> Result<bool> {
        Ok(self.in_kernel(w, Side::Alpha)? && self.in_kernel(w, Side::Beta)?)
    }

    /// `π₁(M) = F_g / ⟨⟨α(c_1), …, α(c_g)⟩⟩` for the beta curves `c_j`.
    pub fn pi1_presentation(&self) -> Result<Presentation> {
        let curves = self.diagram.beta_curves().ok_or(Error::MissingCurves)?;
        let relators = curves.iter().map(|c| self.image_alpha(c)).collect::<Result<Vec<_>>>()?;
        Ok(Presentation { generator_count: self.genus(), relators })
    }

    pub fn h1(&self) -> Result<AbelianInvariants> {
        let p = self.pi1_presentation()?;
        let snf = smith_normal_form(&p.relation_matrix());
        Ok(AbelianInvariants::from_invariant_factors(&snf.invariant_factors(), p.generator_count as usize))
    }

    pub fn order_pi1(&self, coset_limit: usize) -> Result<OrderVerdict> {
        if self.h1()?.rank > 0 {
            return Ok(OrderVerdict::InfiniteByH1);
        }
        let p = self.pi1_presentation()?;
        Ok(match enumerate_cosets(p.generator_count, &p.relators, coset_limit) {
            Some(table) => OrderVerdict::Finite(table.len()),
            None => OrderVerdict::Unknown { limit: coset_limit },
        })
    }

    /// Membership of `w` in the join `K_α K_β`, i.e. triviality of `α(w)` in
    /// `π₁(M)`. Exact shortcuts come first: an identity image, a nonzero
    /// class in `H₁(M)`, or a free presented group; otherwise coset
    /// enumeration within `coset_limit`.
    pub fn in_join(&self, w: &Word, coset_limit: usize) -> Result<Membership> {
        let image = self.image_alpha(w)?;
        if image.is_empty() {
            return Ok(Membership::Yes);
        }
        let p = self.pi1_presentation()?;
        if !h1_class_vanishes(&p, &image) {
            return Ok(Membership::No);
        }
        if p.relators.iter().all(Word::is_empty) {
            // free group: the reduced image is nonempty
            return Ok(Membership::No);
        }
        Ok(match enumerate_cosets(p.generator_count, &p.relators, coset_limit) {
            Some(table) if table.act(0, &image) == 0 => Membership::Yes,
            Some(_) => Membership::No,
            None => Membership::Unknown,
        })
    }
}

/// Whether the exponent vector of `w` lies in the row lattice of the
/// relation matrix, i.e. `w` dies in the abelianization.
fn h1_class_vanishes(p: &Presentation, w: &Word) -> bool {
    let n = p.generator_count as usize;
    let mut v = IntMatrix::zero(1, n);
    for g in w.letters() {
        v[(0, g.index() as usize - 1)] += BigInt::from(g.sign());
    }
    let m = p.relation_matrix();
    let snf = smith_normal_form(&m);
    // rowspan(M) = rowspan(D V⁻¹), so v ∈ rowspan(M) iff (v V)_j ∈ d_j Z.
    let vv = v.mul(&snf.v);
    let diag = snf.invariant_factors();
    (0..n).all(|j| {
        let d = diag.get(j).cloned().unwrap_or_else(BigInt::zero);
        let c = &vv[(0, j)];
        if d.is_zero() {
            c.is_zero()
        } else {
            (c % &d).is_zero()
        }
    })
}

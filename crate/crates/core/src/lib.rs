//! Group theory of Heegaard splittings.
//!
//! A genus-g splitting of a closed 3-manifold `M` is modelled by its two
//! epimorphisms from the surface group `π₁(Σ)` onto free groups of rank g.
//! From them the crate decides kernel membership, presents `π₁(M)`,
//! computes `H₁(M)`, and works with sphere classes through the
//! isomorphism `π₂(M) ≅ (K_α ∩ K_β) / [K_α, K_β]`: exactly at genus 1, and by
//! commutator certificates and homological obstructions above that.

pub mod diagram;
pub mod error;
pub mod spheres;
pub mod splitting;
pub mod surface;
pub mod words;

pub use diagram::{builtin, parse_diagram, stabilize, validate, write_diagram, DiagramReport, HeegaardDiagram, HomSpec};
pub use error::{Error, Result};
pub use splitting::{AbelianInvariants, Membership, OrderVerdict, Presentation, Side, SplittingHom};
pub use surface::{surface_relator, SurfaceGroup};
pub use words::{format_word, parse_word, Family, Generator, Word};

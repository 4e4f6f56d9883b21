//! Dehn twists along the standard curves `a_i`, `b_i` and the chain curves
//! `c_i` joining handles `i` and `i + 1`, as automorphisms of the surface
//! group. The tables live in `twists.tbl` and are checked on load: each
//! twist must preserve the relator up to conjugacy, fix its own curve up to
//! conjugacy, act on `H₁` as the symplectic transvection along its curve, and
//! compose with its inverse to the identity.

use crate::error::{Error, Result};
use crate::surface::{surface_relator, SurfaceGroup};
use crate::words::{parse_word, Family, Generator, Word};

pub const TWIST_TABLE_VERSION: u32 = 1;
const TABLE: &str = include_str!("twists.tbl");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Twist {
    name: String,
    curve: Word,
    positive: bool,
    /// Images of `a1, b1, a2, b2, …`.
    images: Vec<Word>,
}

impl Twist {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn curve(&self) -> &Word {
        &self.curve
    }

    pub fn is_positive(&self) -> bool {
        self.positive
    }

    /// Name of the inverse twist (case flipped).
    pub fn inverse_name(&self) -> String {
        flip_case(&self.name)
    }

    pub fn image_of(&self, g: Generator) -> &Word {
        &self.images[slot(g)]
    }

    pub fn apply(&self, w: &Word) -> Word {
        w.substitute(|g| self.image_of(g).clone())
    }

    /// Integer matrix of the induced map on `H₁(Σ)`; column `k` is the image
    /// of the `k`-th basis vector `(a1, b1, a2, b2, …)`.
    pub fn h1_matrix(&self) -> Vec<Vec<i64>> {
        let genus = (self.images.len() / 2) as u32;
        let surface = SurfaceGroup::new(genus);
        let cols: Vec<Vec<i64>> = self.images.iter().map(|w| surface.h1_image(w).expect("in alphabet")).collect();
        let n = cols.len();
        (0..n).map(|r| (0..n).map(|c| cols[c][r]).collect()).collect()
    }
}

fn slot(g: Generator) -> usize {
    2 * (g.index() as usize - 1) + usize::from(g.family() == Family::B)
}

fn flip_case(s: &str) -> String {
    s.chars()
        .map(|c| if c.is_ascii_lowercase() { c.to_ascii_uppercase() } else { c.to_ascii_lowercase() })
        .collect()
}

/// Standard symplectic form on `H₁(Σ)`: `ω(a_i, b_i) = 1`.
pub fn intersection_form(u: &[i64], v: &[i64]) -> i64 {
    u.chunks(2).zip(v.chunks(2)).map(|(p, q)| p[0] * q[1] - p[1] * q[0]).sum()
}

struct Template {
    letter: char,
    curve: String,
    rules: Vec<(String, String)>,
}

fn table_error(msg: impl Into<String>) -> Error {
    Error::TwistTable(msg.into())
}

fn parse_templates() -> Result<Vec<Template>> {
    let mut out: Vec<Template> = Vec::new();
    let mut version = None;
    for line in TABLE.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(v) = line.strip_prefix("version ") {
            version = v.trim().parse::<u32>().ok();
        } else if let Some(name) = line.strip_prefix("twist ") {
            let mut chars = name.trim().chars();
            let letter = chars.next().ok_or_else(|| table_error("empty twist name"))?;
            out.push(Template { letter, curve: String::new(), rules: Vec::new() });
        } else if let Some(curve) = line.strip_prefix("curve ") {
            let t = out.last_mut().ok_or_else(|| table_error("curve before twist"))?;
            t.curve = curve.trim().to_string();
        } else if let Some((lhs, rhs)) = line.split_once("->") {
            let t = out.last_mut().ok_or_else(|| table_error("rule before twist"))?;
            t.rules.push((lhs.trim().to_string(), rhs.trim().to_string()));
        } else {
            return Err(table_error(format!("unrecognised line `{line}`")));
        }
    }
    if version != Some(TWIST_TABLE_VERSION) {
        return Err(table_error(format!("expected table version {TWIST_TABLE_VERSION}, found {version:?}")));
    }
    Ok(out)
}

fn instantiate(t: &Template, i: u32, genus: u32) -> Result<Twist> {
    let fill = |s: &str| s.replace("{i}", &i.to_string()).replace("{j}", &(i + 1).to_string());
    let word = |s: &str| parse_word(&fill(s)).map_err(|e| table_error(format!("twist {}{i}: {e}", t.letter)));
    let mut images: Vec<Word> = (1..=genus)
        .flat_map(|k| [Word::letter(Generator::a(k)), Word::letter(Generator::b(k))])
        .collect();
    for (lhs, rhs) in &t.rules {
        let g = match word(lhs)?.letters() {
            [g] if !g.is_inverse() => *g,
            _ => return Err(table_error(format!("rule source `{lhs}` must be one generator"))),
        };
        images[slot(g)] = word(rhs)?;
    }
    Ok(Twist {
        name: format!("{}{i}", t.letter),
        curve: word(&t.curve)?,
        positive: t.letter.is_ascii_lowercase(),
        images,
    })
}

/// `true` iff the cyclic core of `w` is a rotation of the cyclic core of `target`.
fn conjugate_in_free_group(w: &Word, target: &Word) -> bool {
    let (core, _) = w.cyclic_reduce();
    let (t, _) = target.cyclic_reduce();
    core.len() == t.len() && (0..t.len().max(1)).any(|k| t.rotate(k) == core)
}

fn check_twist(t: &Twist, genus: u32) -> Result<()> {
    let fail = |what: &str| Err(table_error(format!("twist {} at genus {genus}: {what}", t.name)));
    let relator = surface_relator(genus)?;
    if !conjugate_in_free_group(&t.apply(&relator), &relator) {
        return fail("relator is not preserved up to conjugacy");
    }
    if !conjugate_in_free_group(&t.apply(&t.curve), &t.curve) {
        return fail("twist curve is not fixed up to conjugacy");
    }
    let surface = SurfaceGroup::new(genus);
    let c = surface.h1_image(&t.curve)?;
    let m = t.h1_matrix();
    let n = m.len();
    let sign = if t.positive { 1 } else { -1 };
    for k in 0..n {
        let mut e = vec![0i64; n];
        e[k] = 1;
        let expected: Vec<i64> = (0..n).map(|r| e[r] + sign * intersection_form(&c, &e) * c[r]).collect();
        let actual: Vec<i64> = (0..n).map(|r| m[r][k]).collect();
        if actual != expected {
            return fail("H1 action is not the transvection along the twist curve");
        }
    }
    if !is_symplectic(&m) {
        return fail("H1 action does not preserve the intersection form");
    }
    Ok(())
}

/// `Mᵀ J M = J` for the standard form.
pub fn is_symplectic(m: &[Vec<i64>]) -> bool {
    let n = m.len();
    let col = |k: usize| -> Vec<i64> { (0..n).map(|r| m[r][k]).collect() };
    (0..n).all(|p| {
        (0..n).all(|q| {
            let mut ep = vec![0; n];
            let mut eq = vec![0; n];
            ep[p] = 1;
            eq[q] = 1;
            intersection_form(&col(p), &col(q)) == intersection_form(&ep, &eq)
        })
    })
}

/// All twists available at one genus, in the canonical order
/// `a1, A1, b1, B1, a2, …, c1, C1, …`.
#[derive(Debug, Clone)]
pub struct TwistSet {
    genus: u32,
    twists: Vec<Twist>,
}

impl TwistSet {
    pub fn load(genus: u32) -> Result<Self> {
        if genus == 0 {
            return Err(Error::InvalidGenus(0));
        }
        let templates = parse_templates()?;
        let find = |c: char| {
            templates.iter().find(|t| t.letter == c).ok_or_else(|| table_error(format!("missing twist `{c}`")))
        };
        let mut twists = Vec::new();
        for i in 1..=genus {
            for c in ['a', 'A', 'b', 'B'] {
                twists.push(instantiate(find(c)?, i, genus)?);
            }
        }
        for i in 1..genus {
            for c in ['c', 'C'] {
                twists.push(instantiate(find(c)?, i, genus)?);
            }
        }
        let set = TwistSet { genus, twists };
        for t in &set.twists {
            check_twist(t, genus)?;
            let inv = set.get(&t.inverse_name())?;
            for k in 1..=genus {
                for g in [Generator::a(k), Generator::b(k)] {
                    if inv.apply(t.image_of(g)) != Word::letter(g) {
                        return Err(table_error(format!("{} and {} are not inverse", t.name, inv.name)));
                    }
                }
            }
        }
        Ok(set)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn twists(&self) -> &[Twist] {
        &self.twists
    }

    pub fn get(&self, name: &str) -> Result<&Twist> {
        self.twists.iter().find(|t| t.name == name).ok_or_else(|| Error::UnknownTwist(name.to_string()))
    }

    pub fn apply(&self, name: &str, w: &Word) -> Result<Word> {
        SurfaceGroup::new(self.genus).check_alphabet(w)?;
        Ok(self.get(name)?.apply(w))
    }
}

/// Apply the named twist (e.g. `a1`, `B2`, `c1`) at the given genus.
pub fn apply_twist(name: &str, w: &Word, genus: u32) -> Result<Word> {
    TwistSet::load(genus)?.apply(name, w)
}

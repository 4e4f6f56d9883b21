//! The `.hgd` text format.
//!
//! ```text
//! genus: 1
//! alpha: standard
//! beta: a1=x1 x1 x1 x1 x1, b1=X1 X1
//! beta_curves: b1 b1 b1 b1 b1 a1 a1
//! ```
//!
//! `#` starts a comment; blank lines are ignored. Errors report the byte
//! offset of the offending text within the whole input.

use std::fmt::Write as _;

use super::{HeegaardDiagram, HomSpec};
use crate::error::{Error, Result};
use crate::words::{parse_word, Word};

struct Line<'a> {
    offset: usize,
    key: &'a str,
    value: &'a str,
    value_offset: usize,
}

fn err(position: usize, message: impl Into<String>) -> Error {
    Error::Parse { position, message: message.into() }
}

/// Re-base a word parse error onto the position in the whole file.
fn word_at(text: &str, offset: usize) -> Result<Word> {
    parse_word(text).map_err(|e| match e {
        Error::Parse { position, message } => Error::Parse { position: offset + position, message },
        other => other,
    })
}

fn content_lines(input: &str) -> Result<Vec<Line<'_>>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for raw in input.split_inclusive('\n') {
        let start = offset;
        offset += raw.len();
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let Some(colon) = body.find(':') else {
            return Err(err(start, "expected `key: value`"));
        };
        let key = body[..colon].trim();
        let rest = &body[colon + 1..];
        let lead = rest.len() - rest.trim_start().len();
        out.push(Line { offset: start, key, value: rest.trim(), value_offset: start + colon + 1 + lead });
    }
    Ok(out)
}

fn parse_images(line: &Line<'_>, genus: u32) -> Result<HomSpec> {
    let mut images: Vec<Option<Word>> = vec![None; 2 * genus as usize];
    let mut cursor = 0;
    for item in line.value.split(',') {
        let at = line.value_offset + cursor;
        cursor += item.len() + 1;
        let Some(eq) = item.find('=') else {
            return Err(err(at, "expected `<generator>=<word>`"));
        };
        let name = item[..eq].trim();
        let gen = word_at(name, at)?;
        let slot = match gen.letters() {
            [g] if !g.is_inverse() && g.family() != crate::words::Family::X && g.index() <= genus => {
                2 * (g.index() as usize - 1) + usize::from(g.family() == crate::words::Family::B)
            }
            _ => return Err(err(at, format!("`{name}` is not a surface generator of genus {genus}"))),
        };
        if images[slot].is_some() {
            return Err(err(at, format!("generator `{name}` assigned twice")));
        }
        images[slot] = Some(word_at(&item[eq + 1..], at + eq + 1)?);
    }
    let images: Option<Vec<Word>> = images.into_iter().collect();
    let images = images.ok_or_else(|| err(line.offset, "every generator a1, b1, … needs an image"))?;
    HomSpec::new(genus, images).map_err(|e| err(line.value_offset, e.to_string()))
}

pub fn parse_diagram(input: &str) -> Result<HeegaardDiagram> {
    let lines = content_lines(input)?;
    let expect = |k: usize, key: &str| -> Result<&Line<'_>> {
        match lines.get(k) {
            Some(l) if l.key == key => Ok(l),
            Some(l) => Err(err(l.offset, format!("expected `{key}:`, found `{}:`", l.key))),
            None => Err(err(input.len(), format!("missing `{key}:` line"))),
        }
    };

    let genus_line = expect(0, "genus")?;
    let genus: u32 = genus_line
        .value
        .parse()
        .ok()
        .filter(|&g| g >= 1)
        .ok_or_else(|| err(genus_line.value_offset, "genus must be a positive integer"))?;

    let alpha_line = expect(1, "alpha")?;
    let alpha =
        if alpha_line.value == "standard" { HomSpec::standard(genus) } else { parse_images(alpha_line, genus)? };
    let beta = parse_images(expect(2, "beta")?, genus)?;

    let curves = match lines.get(3) {
        None => None,
        Some(l) if l.key == "beta_curves" => {
            let mut out = Vec::new();
            let mut cursor = 0;
            for piece in l.value.split(';') {
                out.push(word_at(piece, l.value_offset + cursor)?);
                cursor += piece.len() + 1;
            }
            if out.len() != genus as usize {
                return Err(err(l.value_offset, format!("expected {genus} beta curves, found {}", out.len())));
            }
            Some(out)
        }
        Some(l) => return Err(err(l.offset, format!("unexpected `{}:` line", l.key))),
    };
    if let Some(extra) = lines.get(4) {
        return Err(err(extra.offset, "unexpected trailing line"));
    }
    HeegaardDiagram::new(alpha, beta, curves).map_err(|e| err(0, e.to_string()))
}

fn write_images(out: &mut String, h: &HomSpec) {
    let parts: Vec<String> = h
        .images()
        .chunks(2)
        .enumerate()
        .map(|(i, pair)| format!("a{0}={1}, b{0}={2}", i + 1, pair[0], pair[1]))
        .collect();
    out.push_str(&parts.join(", "));
}

pub fn write_diagram(d: &HeegaardDiagram) -> String {
    let mut out = String::new();
    writeln!(out, "genus: {}", d.genus()).unwrap();
    out.push_str("alpha: ");
    if d.alpha().is_standard() {
        out.push_str("standard");
    } else {
        write_images(&mut out, d.alpha());
    }
    out.push_str("\nbeta: ");
    write_images(&mut out, d.beta());
    out.push('\n');
    if let Some(curves) = d.beta_curves() {
        let parts: Vec<String> = curves.iter().map(|c| c.to_string()).collect();
        writeln!(out, "beta_curves: {}", parts.join(" ; ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{lens, s2xs1_sum, s3, stabilize};
    use crate::words::w;

    #[test]
    fn writes_lens_space() {
        let text = write_diagram(&lens(5, 2).unwrap());
        assert_eq!(
            text,
            "genus: 1\nalpha: standard\nbeta: a1=x1 x1 x1 x1 x1, b1=X1 X1\nbeta_curves: b1 b1 b1 b1 b1 a1 a1\n"
        );
    }

    #[test]
    fn round_trips_catalog() {
        let mut all = vec![lens(7, 3).unwrap(), s3(3).unwrap(), s2xs1_sum(2).unwrap()];
        all.push(stabilize(&lens(5, 2).unwrap()).unwrap());
        for d in all {
            assert_eq!(parse_diagram(&write_diagram(&d)).unwrap(), d);
        }
    }

    #[test]
    fn parses_comments_and_general_alpha() {
        let text = "# a genus-1 diagram\n\ngenus: 1   # one handle\nalpha: b1=x1, a1=1\nbeta: a1=x1, b1=x1\n";
        let d = parse_diagram(text).unwrap();
        assert!(d.alpha().is_standard());
        assert_eq!(d.beta().images(), &[w("x1"), w("x1")]);
        assert!(d.beta_curves().is_none());
    }

    #[test]
    fn reports_positions() {
        let text = "genus: 1\nalpha: standard\nbeta: a1=x1, b1=y1\n";
        match parse_diagram(text) {
            Err(Error::Parse { position, .. }) => assert_eq!(&text[position..position + 2], "y1"),
            other => panic!("unexpected {other:?}"),
        }
        let text = "genus: 1\nalpha: standard\nbeta: a1=x1, b1=x0\n";
        match parse_diagram(text) {
            Err(Error::Parse { position, .. }) => assert_eq!(&text[position..position + 2], "x0"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rejects_malformed_files() {
        assert!(parse_diagram("").is_err());
        assert!(parse_diagram("genus: 0\nalpha: standard\nbeta: \n").is_err());
        assert!(parse_diagram("genus: 1\nbeta: a1=x1, b1=1\n").is_err());
        assert!(parse_diagram("genus: 1\nalpha: standard\nbeta: a1=x1\n").is_err());
        assert!(parse_diagram("genus: 1\nalpha: standard\nbeta: a1=x1, a1=1\n").is_err());
        assert!(parse_diagram("genus: 1\nalpha: standard\nbeta: a1=x1, b1=1\nbeta_curves: b1 ; a1\n").is_err());
        assert!(parse_diagram("genus: 1\nalpha: standard\nbeta: a1=x2, b1=1\n").is_err());
        assert!(parse_diagram("genus: 1\nalpha: standard\nbeta: a1=x1, b1=1\nbeta_curves: b1\nextra: 1\n").is_err());
    }
}

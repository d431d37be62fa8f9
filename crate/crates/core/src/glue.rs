//! Line-oriented text format for disks given by explicit gluings.
//!
//! ```text
//! # two squares side by side
//! squares 2
//! name 0 a
//! name 1 b
//! glue 0 1 1 3
//! ```

use crate::disk::QuadDisk;
use crate::error::{Error, Result};

/// Parses a glue file. Squares keep their declaration order.
pub fn parse_glued(text: &str) -> Result<QuadDisk> {
    let mut squares: Option<usize> = None;
    let mut gluings = Vec::new();
    let mut names: Vec<Option<String>> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let words: Vec<&str> = content.split_whitespace().collect();
        let perr = |message: String| Error::Parse { line, message };
        match words[0] {
            "squares" => {
                if squares.is_some() {
                    return Err(perr("repeated squares header".into()));
                }
                if words.len() != 2 {
                    return Err(perr("expected `squares N`".into()));
                }
                let n: usize = words[1].parse().map_err(|_| perr(format!("bad square count {:?}", words[1])))?;
                squares = Some(n);
                names = vec![None; n];
            }
            "glue" => {
                let n = squares.ok_or_else(|| perr("`glue` before `squares` header".into()))?;
                if words.len() != 5 {
                    return Err(perr("expected `glue a e b f`".into()));
                }
                let a = parse_index(words[1], n, line)?;
                let e = parse_slot(words[2], line)?;
                let b = parse_index(words[3], n, line)?;
                let f = parse_slot(words[4], line)?;
                gluings.push((a, e, b, f));
            }
            "name" => {
                let n = squares.ok_or_else(|| perr("`name` before `squares` header".into()))?;
                if words.len() != 3 {
                    return Err(perr("expected `name i TEXT`".into()));
                }
                let s = parse_index(words[1], n, line)?;
                if names[s].is_some() {
                    return Err(perr(format!("square {s} named twice")));
                }
                names[s] = Some(words[2].to_string());
            }
            other => return Err(perr(format!("unknown directive {other:?}"))),
        }
    }
    let n = squares.ok_or(Error::Parse { line: 1, message: "missing `squares N` header".into() })?;
    let disk = QuadDisk::from_gluings(n, &gluings)?;
    if names.iter().any(|x| x.is_some()) {
        let names = names.into_iter().enumerate().map(|(i, x)| x.unwrap_or_else(|| i.to_string())).collect();
        return disk.with_names(names);
    }
    Ok(disk)
}

fn parse_index(word: &str, n: usize, line: usize) -> Result<usize> {
    let v: usize = word.parse().map_err(|_| Error::Parse { line, message: format!("bad square index {word:?}") })?;
    if v >= n {
        return Err(Error::Parse { line, message: format!("square {v} out of range 0..{n}") });
    }
    Ok(v)
}

fn parse_slot(word: &str, line: usize) -> Result<u8> {
    match word {
        "0" => Ok(0),
        "1" => Ok(1),
        "2" => Ok(2),
        "3" => Ok(3),
        _ => Err(Error::Parse { line, message: format!("bad edge slot {word:?}") }),
    }
}

/// Writes a disk in glue format. Each gluing appears once, from its smaller
/// `(square, slot)` end.
pub fn render_glued(disk: &QuadDisk) -> String {
    let mut out = format!("squares {}\n", disk.num_squares());
    if let Some(names) = disk.names() {
        for (i, n) in names.iter().enumerate() {
            out.push_str(&format!("name {i} {n}\n"));
        }
    }
    for s in 0..disk.num_squares() {
        for e in 0..4u8 {
            if let Some((t, f)) = disk.partner(s, e) {
                if (s, e) < (t, f) {
                    out.push_str(&format!("glue {s} {e} {t} {f}\n"));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::disk::Color;

    #[test]
    fn domino() {
        let d = parse_glued("squares 2\nglue 0 1 1 3\n").unwrap();
        assert_eq!(d.count(Color::Black), 1);
        assert_eq!(d.count(Color::White), 1);
    }

    #[test]
    fn round_trip() {
        let text = "squares 3\nname 0 a\nname 1 b\nname 2 c\nglue 0 1 1 3\nglue 1 2 2 0\n";
        let d = parse_glued(text).unwrap();
        assert_eq!(render_glued(&d), text);
    }

    #[test]
    fn comments_and_errors() {
        let d = parse_glued("# a square\nsquares 1 # trailing\n").unwrap();
        assert_eq!(d.num_squares(), 1);
        assert_eq!(parse_glued("glue 0 1 1 3").unwrap_err().line(), Some(1));
        assert_eq!(parse_glued("squares 2\nglue 0 4 1 3").unwrap_err().line(), Some(2));
        assert!(matches!(parse_glued("squares 1\nglue 0 0 0 2"), Err(Error::NonDisk(_))));
        assert!(parse_glued("squares 1\nwobble").is_err());
    }
}

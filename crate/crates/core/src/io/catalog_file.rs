//! Extra relation schemas read from a text file.
//!
//! ```text
//! # one or more blocks
//! relation writhe-twice: v(W, dual(W)) = id2(cap)
//! ```
//!
//! A block runs from `relation` at the start of a line to the next such
//! line, so sides may span several lines. Each side is a 2-morphism; the
//! sides must be parallel.

use crate::error::{Error, Result};
use crate::io::parse::{line_col, parse_two};
use crate::relations::RelationSchema;

fn blank_comments(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut in_comment = false;
    for c in text.chars() {
        match c {
            '\n' => {
                in_comment = false;
                out.push('\n');
            }
            '#' => {
                in_comment = true;
                out.push(' ');
            }
            _ if in_comment => out.extend(std::iter::repeat_n(' ', c.len_utf8())),
            _ => out.push(c),
        }
    }
    out
}

/// `text` with everything outside `range` replaced by spaces, keeping
/// newlines, so parse errors report positions in the whole file.
fn mask(text: &str, range: std::ops::Range<usize>) -> String {
    text.char_indices()
        .map(|(i, c)| {
            if c == '\n' || range.contains(&i) {
                c.to_string()
            } else {
                " ".repeat(c.len_utf8())
            }
        })
        .collect()
}

fn error_at(text: &str, offset: usize, expected: &str) -> Error {
    let (line, col) = line_col(text, offset);
    Error::Parse {
        line,
        col,
        expected: expected.into(),
    }
}

fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '-' || c == '_'
}

pub fn parse_catalog_file(text: &str) -> Result<Vec<RelationSchema>> {
    let clean = blank_comments(text);
    let mut starts = Vec::new();
    let mut offset = 0;
    for line in clean.split_inclusive('\n') {
        let body = line.trim_start();
        let indent = line.len() - body.len();
        if body.starts_with("relation") && body[8..].starts_with(char::is_whitespace) {
            starts.push(offset + indent);
        } else if !body.trim().is_empty() && starts.is_empty() {
            return Err(error_at(text, offset + indent, "`relation`"));
        }
        offset += line.len();
    }
    let mut schemas = Vec::new();
    for (k, &start) in starts.iter().enumerate() {
        let end = starts.get(k + 1).copied().unwrap_or(clean.len());
        let header = start + "relation".len();
        let after = &clean[header..end];
        let name_start = header + (after.len() - after.trim_start().len());
        let name_len = clean[name_start..end]
            .find(|c: char| !is_name_char(c))
            .unwrap_or(end - name_start);
        if name_len == 0 {
            return Err(error_at(text, name_start, "relation name"));
        }
        let name = &clean[name_start..name_start + name_len];
        let rest = &clean[name_start + name_len..end];
        let colon = name_start + name_len + (rest.len() - rest.trim_start().len());
        if !clean[colon..end].starts_with(':') {
            return Err(error_at(text, colon, "`:`"));
        }
        let body = colon + 1;
        let Some(eq) = clean[body..end].find('=').map(|i| body + i) else {
            return Err(error_at(text, end.min(clean.len()), "`=`"));
        };
        let lhs = parse_two(&mask(&clean, body..eq))?;
        let rhs = parse_two(&mask(&clean, eq + 1..end))?;
        let schema = RelationSchema::equation(name, lhs, rhs);
        schema.instantiate(&[])?;
        schemas.push(schema);
    }
    Ok(schemas)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_blocks() {
        let text = "# extra\nrelation a: W = W\nrelation b-2:\n  v(W, dual(W))\n  = id2(cap) # done\n";
        let schemas = parse_catalog_file(text).unwrap();
        assert_eq!(schemas.len(), 2);
        assert_eq!(schemas[0].name, "a");
        assert_eq!(schemas[1].name, "b-2");
    }

    #[test]
    fn positions_are_file_relative() {
        let text = "relation a: W = W\nrelation b:\n  v(W, nope)\n  = W\n";
        match parse_catalog_file(text) {
            Err(Error::Parse { line, col, .. }) => assert_eq!((line, col), (3, 8)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_bad_blocks() {
        assert!(matches!(parse_catalog_file("W = W\n"), Err(Error::Parse { line: 1, col: 1, .. })));
        assert!(matches!(parse_catalog_file("relation : W = W"), Err(Error::Parse { col: 10, .. })));
        assert!(matches!(parse_catalog_file("relation a W = W"), Err(Error::Parse { col: 12, .. })));
        assert!(matches!(parse_catalog_file("relation a: W"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_catalog_file("relation a: W = dual(W)"),
            Err(Error::NotParallel(_))
        ));
        assert!(parse_catalog_file("").unwrap().is_empty());
    }
}

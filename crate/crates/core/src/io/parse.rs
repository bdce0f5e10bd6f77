//! Parser for the term language.
//!
//! ```text
//! morphism   := atom (";" atom)*
//! atom       := "id(" n ")" | "cap" | "cup" | "pos" | "neg"
//!             | "w(" n "," morphism "," n ")" | "(" morphism ")"
//! 2-morphism := "id2(" morphism ")" | "tens(" morphism "," morphism ")"
//!             | "rzf(" morphism ")" | "rfz(" morphism ")"
//!             | "i(" morphism ")" | "e(" morphism ")" | "T" | "W"
//!             | "dual(" 2-morphism ")" | "adj(" 2-morphism ")"
//!             | "v(" 2-morphism ("," 2-morphism)+ ")"
//!             | "h(" 2-morphism ("," 2-morphism)+ ")"
//!             | "w2(" n "," 2-morphism "," n ")"
//! ```
//!
//! `#` starts a comment running to the end of the line. `e(f)` and `adj(a)`
//! expand to their definitions, so their arguments must be well typed.

use nom::branch::alt;
use nom::bytes::complete::take_while;
use nom::character::complete::{alpha1, alphanumeric0, char, digit1, multispace1};
use nom::combinator::{cut, map, recognize, value};
use nom::error::{ErrorKind, ParseError};
use nom::multi::many0;
use nom::sequence::{pair, preceded};
use nom::{Err as NomErr, IResult};

use crate::error::{Error, Result};
use crate::morphism::MorTerm;
use crate::two::{counit2, TwoTerm};

/// A parsed term of either level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Mor(MorTerm),
    Two(TwoTerm),
}

#[derive(Debug, PartialEq)]
struct Expected<'a> {
    input: &'a str,
    what: &'static str,
}

impl<'a> ParseError<&'a str> for Expected<'a> {
    fn from_error_kind(input: &'a str, _: ErrorKind) -> Self {
        Expected {
            input,
            what: "term",
        }
    }

    fn append(_: &'a str, _: ErrorKind, other: Self) -> Self {
        other
    }

    fn or(self, other: Self) -> Self {
        if other.input.len() <= self.input.len() {
            other
        } else {
            self
        }
    }
}

type Res<'a, T> = IResult<&'a str, T, Expected<'a>>;

fn fail<'a, T>(input: &'a str, what: &'static str) -> Res<'a, T> {
    Err(NomErr::Error(Expected { input, what }))
}

fn abort<'a, T>(input: &'a str, what: &'static str) -> Res<'a, T> {
    Err(NomErr::Failure(Expected { input, what }))
}

fn ws(input: &str) -> Res<'_, ()> {
    let comment = value((), pair(char('#'), take_while(|c| c != '\n')));
    value((), many0(alt((value((), multispace1), comment))))(input)
}

/// Skips whitespace, then expects `c` (committing: failure is fatal).
fn punct<'a>(c: char, what: &'static str) -> impl FnMut(&'a str) -> Res<'a, ()> {
    move |input| {
        let (input, _) = ws(input)?;
        match char::<_, Expected>(c)(input) {
            Ok((rest, _)) => Ok((rest, ())),
            Err(_) => abort(input, what),
        }
    }
}

fn ident(input: &str) -> Res<'_, &str> {
    recognize(pair(alpha1, alphanumeric0))(input)
}

fn nat(input: &str) -> Res<'_, usize> {
    let (input, _) = ws(input)?;
    match digit1::<_, Expected>(input) {
        Ok((rest, digits)) => match digits.parse() {
            Ok(n) => Ok((rest, n)),
            Err(_) => abort(input, "number"),
        },
        Err(_) => abort(input, "number"),
    }
}

fn morphism(input: &str) -> Res<'_, MorTerm> {
    let (mut input, mut acc) = mor_atom(input)?;
    loop {
        let (rest, _) = ws(input)?;
        match char::<_, Expected>(';')(rest) {
            Ok((rest, _)) => {
                let (rest, next) = cut(mor_atom)(rest)?;
                acc = acc.then(next);
                input = rest;
            }
            Err(_) => return Ok((input, acc)),
        }
    }
}

fn mor_atom(input: &str) -> Res<'_, MorTerm> {
    let (input, _) = ws(input)?;
    if let Ok((rest, _)) = char::<_, Expected>('(')(input) {
        let (rest, m) = cut(morphism)(rest)?;
        let (rest, _) = punct(')', "`)`")(rest)?;
        return Ok((rest, m));
    }
    let Ok((rest, name)) = ident(input) else {
        return fail(input, "morphism");
    };
    match name {
        "cap" => Ok((rest, MorTerm::cap())),
        "cup" => Ok((rest, MorTerm::cup())),
        "pos" => Ok((rest, MorTerm::pos())),
        "neg" => Ok((rest, MorTerm::neg())),
        "id" => {
            let (rest, _) = punct('(', "`(`")(rest)?;
            let (rest, n) = nat(rest)?;
            let (rest, _) = punct(')', "`)`")(rest)?;
            Ok((rest, MorTerm::id(n)))
        }
        "w" => {
            let (rest, _) = punct('(', "`(`")(rest)?;
            let (rest, l) = nat(rest)?;
            let (rest, _) = punct(',', "`,`")(rest)?;
            let (rest, body) = cut(morphism)(rest)?;
            let (rest, _) = punct(',', "`,`")(rest)?;
            let (rest, r) = nat(rest)?;
            let (rest, _) = punct(')', "`)`")(rest)?;
            Ok((rest, MorTerm::whisker(l, body, r)))
        }
        _ => fail(input, "morphism"),
    }
}

const TWO_HEADS: [&str; 13] = [
    "id2", "tens", "rzf", "rfz", "i", "e", "T", "W", "dual", "adj", "v", "h", "w2",
];

fn bracketed<'a, T>(
    input: &'a str,
    inner: impl FnMut(&'a str) -> Res<'a, T>,
) -> Res<'a, T> {
    let (input, _) = punct('(', "`(`")(input)?;
    let (input, t) = cut(inner)(input)?;
    let (input, _) = punct(')', "`)`")(input)?;
    Ok((input, t))
}

fn two_list(input: &str) -> Res<'_, Vec<TwoTerm>> {
    let (input, _) = punct('(', "`(`")(input)?;
    let (mut input, first) = cut(two_morphism)(input)?;
    let mut items = vec![first];
    loop {
        let (rest, _) = ws(input)?;
        if let Ok((rest, _)) = char::<_, Expected>(',')(rest) {
            let (rest, next) = cut(two_morphism)(rest)?;
            items.push(next);
            input = rest;
        } else {
            let (rest, _) = punct(')', "`,` or `)`")(input)?;
            if items.len() < 2 {
                return abort(input, "`,`");
            }
            return Ok((rest, items));
        }
    }
}

fn two_morphism(input: &str) -> Res<'_, TwoTerm> {
    let (input, _) = ws(input)?;
    let Ok((rest, name)) = ident(input) else {
        return fail(input, "2-morphism");
    };
    match name {
        "T" => Ok((rest, TwoTerm::triangulator())),
        "W" => Ok((rest, TwoTerm::writhe())),
        "id2" => map(|i| bracketed(i, morphism), TwoTerm::id2)(rest),
        "rzf" => map(|i| bracketed(i, morphism), TwoTerm::braid_zf)(rest),
        "rfz" => map(|i| bracketed(i, morphism), TwoTerm::braid_fz)(rest),
        "i" => map(|i| bracketed(i, morphism), TwoTerm::unit2)(rest),
        "dual" => map(|i| bracketed(i, two_morphism), TwoTerm::dual2)(rest),
        "e" => {
            let (after, f) = bracketed(rest, morphism)?;
            match counit2(&f) {
                Ok(t) => Ok((after, t)),
                Err(_) => abort(rest, "well-typed morphism"),
            }
        }
        "adj" => {
            let (after, a) = bracketed(rest, two_morphism)?;
            match a.adjoint() {
                Ok(t) => Ok((after, t)),
                Err(_) => abort(rest, "well-typed 2-morphism"),
            }
        }
        "tens" => {
            let (rest, _) = punct('(', "`(`")(rest)?;
            let (rest, f) = cut(morphism)(rest)?;
            let (rest, _) = punct(',', "`,`")(rest)?;
            let (rest, g) = cut(morphism)(rest)?;
            let (rest, _) = punct(')', "`)`")(rest)?;
            Ok((rest, TwoTerm::tensorator(f, g)))
        }
        "w2" => {
            let (rest, _) = punct('(', "`(`")(rest)?;
            let (rest, l) = nat(rest)?;
            let (rest, _) = punct(',', "`,`")(rest)?;
            let (rest, body) = cut(two_morphism)(rest)?;
            let (rest, _) = punct(',', "`,`")(rest)?;
            let (rest, r) = nat(rest)?;
            let (rest, _) = punct(')', "`)`")(rest)?;
            Ok((rest, TwoTerm::whisker(l, body, r)))
        }
        "v" | "h" => {
            let vertical = name == "v";
            let (rest, items) = two_list(rest)?;
            let mut it = items.into_iter();
            let first = it.next().expect("at least two");
            let t = it.fold(first, |acc, x| if vertical { acc.vcomp(x) } else { acc.hcomp(x) });
            Ok((rest, t))
        }
        _ => fail(input, "2-morphism"),
    }
}

/// Line and column (both 1-based) of byte `offset` in `text`.
pub fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let col = before
        .rsplit('\n')
        .next()
        .map_or(0, |l| l.chars().count())
        + 1;
    (line, col)
}

fn to_error(text: &str, e: Expected<'_>) -> Error {
    let (line, col) = line_col(text, text.len() - e.input.len());
    let expected = if e.input.trim().is_empty() {
        format!("{} before end of input", e.what)
    } else {
        e.what.to_string()
    };
    Error::Parse {
        line,
        col,
        expected,
    }
}

fn complete<'a, T>(text: &'a str, parser: impl FnMut(&'a str) -> Res<'a, T>) -> Result<T> {
    let mut whole = preceded(ws, parser);
    match whole(text) {
        Ok((rest, t)) => {
            let (rest, _) = ws(rest).map_err(|_| Error::Parse {
                line: 1,
                col: 1,
                expected: "term".into(),
            })?;
            if rest.is_empty() {
                Ok(t)
            } else {
                Err(to_error(
                    text,
                    Expected {
                        input: rest,
                        what: "end of input",
                    },
                ))
            }
        }
        Err(NomErr::Error(e)) | Err(NomErr::Failure(e)) => Err(to_error(text, e)),
        Err(NomErr::Incomplete(_)) => Err(Error::Parse {
            line: 1,
            col: 1,
            expected: "complete input".into(),
        }),
    }
}

fn head(text: &str) -> Option<&str> {
    let (rest, _) = ws(text).ok()?;
    ident(rest).ok().map(|(_, name)| name)
}

/// Parses a morphism or a 2-morphism, decided by the leading keyword.
pub fn parse_term(text: &str) -> Result<Term> {
    match head(text) {
        Some(name) if TWO_HEADS.contains(&name) => parse_two(text).map(Term::Two),
        _ => parse_morphism(text).map(Term::Mor),
    }
}

pub fn parse_morphism(text: &str) -> Result<MorTerm> {
    complete(text, morphism)
}

pub fn parse_two(text: &str) -> Result<TwoTerm> {
    complete(text, two_morphism)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composite_with_whisker() {
        let t = parse_term("cap ; w(1,pos,0)").unwrap();
        assert_eq!(
            t,
            Term::Mor(MorTerm::cap().then(MorTerm::whisker(1, MorTerm::pos(), 0)))
        );
    }

    #[test]
    fn sphere() {
        let t = parse_term("v(i(cap), dual(i(cap)))").unwrap();
        let cap = MorTerm::cap();
        assert_eq!(
            t,
            Term::Two(TwoTerm::unit2(cap.clone()).vcomp(TwoTerm::unit2(cap).dual2()))
        );
    }

    #[test]
    fn dangling_semicolon() {
        let err = parse_term("cap ;").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 1,
                col: 6,
                expected: "morphism before end of input".into()
            }
        );
    }

    #[test]
    fn comments_and_lines() {
        let text = "# a circle\ncap ;\n  # then\n cup # done\n";
        assert_eq!(
            parse_term(text).unwrap(),
            Term::Mor(MorTerm::cap().then(MorTerm::cup()))
        );
        let err = parse_term("v(W,\n   dual(W) x)").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, col: 12, .. }), "{err:?}");
    }

    #[test]
    fn macros_expand() {
        let e = parse_two("e(cap)").unwrap();
        assert_eq!(e, counit2(&MorTerm::cap()).unwrap());
        let a = parse_two("adj(id2(cap))").unwrap();
        assert_eq!(a, TwoTerm::id2(MorTerm::cap()).adjoint().unwrap());
        assert!(matches!(parse_two("e(cap ; cap)"), Err(Error::Parse { .. })));
    }

    #[test]
    fn nary_composites() {
        let t = parse_two("h(W, id2(pos), W)").unwrap();
        let expect = TwoTerm::writhe()
            .hcomp(TwoTerm::id2(MorTerm::pos()))
            .hcomp(TwoTerm::writhe());
        assert_eq!(t, expect);
        assert!(parse_two("v(W)").is_err());
    }

    #[test]
    fn garbage_never_panics() {
        for text in ["", ")", "w(", "w(1,", "w(1,cap", "tens(cap", "v(", "id(x)", "W W", "é", "99"] {
            assert!(parse_term(text).is_err(), "{text}");
        }
    }
}

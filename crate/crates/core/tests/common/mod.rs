//! Well-typed random terms driven by a byte stream, so that proptest can
//! shrink the choices.

#![allow(dead_code)]

use std::sync::OnceLock;

use twotangle::enumerate::single_sheets;
use twotangle::movie::{normalize, Movie, Sheet};
use twotangle::{MorGen, MorNormal, MorTerm, Slice, TwoTerm};

pub const MAX_WIDTH: usize = 4;

pub struct Choices<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Choices<'a> {
    pub fn new(bytes: &'a [u8]) -> Self {
        Choices { bytes, pos: 0 }
    }

    pub fn byte(&mut self) -> u8 {
        let b = self.bytes.get(self.pos).copied().unwrap_or(0);
        self.pos += 1;
        b
    }

    /// A number below `n` (which must be positive).
    pub fn pick(&mut self, n: usize) -> usize {
        let hi = self.byte() as usize;
        let lo = self.byte() as usize;
        (hi * 256 + lo) % n
    }
}

fn slices_from(width: usize) -> Vec<Slice> {
    let mut out = Vec::new();
    for gen in [MorGen::Cap, MorGen::Cup, MorGen::Pos, MorGen::Neg] {
        let (a, b) = (gen.source_width(), gen.target_width());
        if a > width || width - a + b > MAX_WIDTH {
            continue;
        }
        for left in 0..=width - a {
            out.push(Slice::new(left, gen, width - a - left));
        }
    }
    out
}

pub fn normal_from(c: &mut Choices, input: usize, len: usize) -> MorNormal {
    let mut width = input;
    let mut slices = Vec::new();
    for _ in 0..len {
        let options = slices_from(width);
        let s = options[c.pick(options.len())];
        width = s.output_width();
        slices.push(s);
    }
    MorNormal { input, slices }
}

/// A morphism term with some nesting, so printing exercises parentheses.
pub fn morphism(c: &mut Choices) -> MorTerm {
    let input = c.pick(3);
    let len = c.pick(5);
    let n = normal_from(c, input, len);
    restructure(c, &n)
}

fn restructure(c: &mut Choices, n: &MorNormal) -> MorTerm {
    if n.len() < 2 || c.pick(3) == 0 {
        let t = n.to_term();
        return if c.pick(4) == 0 { t.then(MorTerm::id(n.output())) } else { t };
    }
    let cut = 1 + c.pick(n.len() - 1);
    let (a, b) = (n.segment(0, cut), n.segment(cut, n.len()));
    restructure(c, &a).then(restructure(c, &b))
}

pub fn sheets() -> &'static [Sheet] {
    static SHEETS: OnceLock<Vec<Sheet>> = OnceLock::new();
    SHEETS.get_or_init(|| single_sheets(3))
}

/// Extends `frame` by up to `steps` sheets that fit.
pub fn movie_from(c: &mut Choices, frame: MorNormal, steps: usize) -> Movie {
    let mut movie = Movie::identity(frame);
    for _ in 0..steps {
        let current = movie.target();
        let mut options = Vec::new();
        for s in sheets() {
            for at in 0..=current.len() {
                let placed = s.shifted(0, 0, at);
                if let Ok(next) = placed.apply(&current) {
                    if next.max_width() <= MAX_WIDTH {
                        options.push(placed);
                    }
                }
            }
        }
        if options.is_empty() {
            break;
        }
        movie.sheets.push(options[c.pick(options.len())].clone());
    }
    movie
}

pub fn random_movie(c: &mut Choices) -> Movie {
    let first = sheets()[c.pick(sheets().len())].clone();
    let steps = c.pick(3);
    let mut m = movie_from(c, first.target(), steps);
    m.source = first.source();
    m.sheets.insert(0, first);
    m
}

fn target_frame(t: &TwoTerm) -> MorNormal {
    normalize(t).expect("well typed").target()
}

/// A well-typed 2-morphism term of nesting depth at most `depth`.
pub fn two_term(c: &mut Choices, depth: usize) -> TwoTerm {
    let op = if depth == 0 { c.pick(3) } else { c.pick(7) };
    match op {
        0 => sheets()[c.pick(sheets().len())].term(),
        1 => TwoTerm::id2(morphism(c)),
        2 => random_movie(c).to_term(),
        3 => {
            let a = two_term(c, depth - 1);
            let steps = 1 + c.pick(2);
            let b = movie_from(c, target_frame(&a), steps);
            a.vcomp(b.to_term())
        }
        4 => {
            let a = two_term(c, depth - 1);
            let width = target_frame(&a).output();
            let len = c.pick(3);
            let frame = normal_from(c, width, len);
            let steps = c.pick(2);
            let b = movie_from(c, frame, steps);
            a.hcomp(b.to_term())
        }
        5 => {
            let (l, r) = (c.pick(2), c.pick(2));
            TwoTerm::whisker(l, two_term(c, depth - 1), r)
        }
        _ => two_term(c, depth - 1).dual2(),
    }
}

/// A 2-morphism whose source is the target of `a`.
pub fn continuation(c: &mut Choices, a: &TwoTerm) -> TwoTerm {
    let steps = c.pick(3);
    movie_from(c, target_frame(a), steps).to_term()
}

//! Text and SVG pictures of tangles, read top to bottom.
//!
//! A picture alternates strand rows (`|` per strand) with one band per
//! slice. Cap is `/-\`, cup `\-/`, crossings ` X ` and ` X'`.

use std::fmt::Write;

use crate::morphism::{MorGen, MorNormal, Slice};
use crate::movie::Movie;

fn strands(width: usize) -> String {
    vec!["|"; width].join(" ")
}

fn glyph(gen: MorGen) -> &'static str {
    match gen {
        MorGen::Cap => "/-\\",
        MorGen::Cup => "\\-/",
        MorGen::Pos => " X ",
        MorGen::Neg => " X'",
    }
}

/// The row drawn for one slice; `2 * max(in, out) - 1` columns wide.
pub fn band(slice: &Slice) -> String {
    let mut tokens = vec!["|"; slice.left];
    tokens.push(glyph(slice.gen));
    tokens.extend(std::iter::repeat_n("|", slice.right));
    tokens.join(" ")
}

pub fn render_ascii(f: &MorNormal) -> String {
    let mut out = String::new();
    out.push_str(&strands(f.input));
    out.push('\n');
    for s in &f.slices {
        out.push_str(&band(s));
        out.push('\n');
        out.push_str(&strands(s.output_width()));
        out.push('\n');
    }
    out
}

/// Every frame of a movie, separated by the sheet acting between them.
pub fn render_movie_ascii(movie: &Movie) -> String {
    let frames = movie.frames();
    let mut out = String::new();
    for (k, frame) in frames.iter().enumerate() {
        let _ = writeln!(out, "-- frame {k}");
        out.push_str(&render_ascii(frame));
        if let Some(sheet) = movie.sheets.get(k) {
            let _ = writeln!(out, "== {}", sheet.describe());
        }
    }
    out
}

const STEP: f64 = 24.0;
const BAND: f64 = 40.0;

fn x(k: usize) -> f64 {
    STEP * (k as f64 + 1.0)
}

fn svg_band(out: &mut String, s: &Slice, top: f64) {
    let bottom = top + BAND;
    let mid = top + BAND / 2.0;
    let line = |out: &mut String, x1: f64, y1: f64, x2: f64, y2: f64| {
        let _ = writeln!(out, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#);
    };
    for k in 0..s.left {
        line(out, x(k), top, x(k), bottom);
    }
    let (a, b) = (s.gen.source_width(), s.gen.target_width());
    for k in 0..s.right {
        line(out, x(s.left + a + k), top, x(s.left + b + k), bottom);
    }
    let (l, r) = (x(s.left), x(s.left + 1));
    match s.gen {
        MorGen::Cap => {
            let _ = writeln!(out, r#"<path d="M {l} {bottom} C {l} {mid}, {r} {mid}, {r} {bottom}"/>"#);
        }
        MorGen::Cup => {
            let _ = writeln!(out, r#"<path d="M {l} {top} C {l} {mid}, {r} {mid}, {r} {top}"/>"#);
        }
        MorGen::Pos | MorGen::Neg => {
            // over strand drawn whole, under strand broken at the middle
            let (over, under) = if s.gen == MorGen::Pos {
                ((l, top, r, bottom), (r, top, l, bottom))
            } else {
                ((r, top, l, bottom), (l, top, r, bottom))
            };
            line(out, over.0, over.1, over.2, over.3);
            let gap = 0.3;
            let (ux, uy, vx, vy) = under;
            let (dx, dy) = (vx - ux, vy - uy);
            line(out, ux, uy, ux + dx * (0.5 - gap / 2.0), uy + dy * (0.5 - gap / 2.0));
            line(out, ux + dx * (0.5 + gap / 2.0), uy + dy * (0.5 + gap / 2.0), vx, vy);
        }
    }
}

fn svg_strokes(f: &MorNormal, height: f64) -> String {
    let mut out = String::new();
    if f.is_empty() {
        for k in 0..f.input {
            let _ = writeln!(out, r#"<line x1="{0}" y1="0" x2="{0}" y2="{height}"/>"#, x(k));
        }
    }
    for (i, s) in f.slices.iter().enumerate() {
        svg_band(&mut out, s, BAND * i as f64);
    }
    out
}

fn svg_document(width: f64, height: f64, body: &str) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n\
         <g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n{body}</g>\n</svg>\n"
    )
}

fn frame_width(f: &MorNormal) -> f64 {
    STEP * (f.max_width() as f64 + 1.0)
}

pub fn render_svg(f: &MorNormal) -> String {
    let height = BAND * f.len().max(1) as f64;
    svg_document(frame_width(f), height, &svg_strokes(f, height))
}

/// The frames of a movie side by side, left to right.
pub fn render_movie_svg(movie: &Movie) -> String {
    let frames = movie.frames();
    let height = BAND * frames.iter().map(MorNormal::len).max().unwrap_or(0).max(1) as f64;
    let mut body = String::new();
    let mut offset = 0.0;
    for frame in &frames {
        let _ = writeln!(body, r#"<g transform="translate({offset},0)">"#);
        body.push_str(&svg_strokes(frame, height));
        body.push_str("</g>\n");
        offset += frame_width(frame) + STEP;
    }
    svg_document(offset.max(STEP), height, &body)
}

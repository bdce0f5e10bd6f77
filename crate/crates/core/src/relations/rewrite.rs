use std::fmt;

use serde::Serialize;

use super::catalog::RelationInstance;
use crate::error::{Error, Result};
use crate::morphism::MorNormal;
use crate::movie::{normalize, Movie};
use crate::two::TwoTerm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Direction {
    LeftToRight,
    RightToLeft,
}

impl Direction {
    pub fn flip(self) -> Direction {
        match self {
            Direction::LeftToRight => Direction::RightToLeft,
            Direction::RightToLeft => Direction::LeftToRight,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::LeftToRight => "->",
            Direction::RightToLeft => "<-",
        })
    }
}

/// Where a pattern sits in a movie: starting at sheet `sheet`, at slice
/// index `at` of that sheet's frame, with `left` extra strands on its left.
/// The right whisker is whatever width remains.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Site {
    pub sheet: usize,
    pub at: usize,
    pub left: usize,
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sheet {} slice {} left {}", self.sheet, self.at, self.left)
    }
}

/// A relation instance with both sides in movie normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub instance: RelationInstance,
    pub lhs: Movie,
    pub rhs: Movie,
}

impl Rule {
    pub fn new(instance: RelationInstance) -> Result<Rule> {
        let lhs = normalize(&instance.lhs)?;
        let rhs = normalize(&instance.rhs)?;
        Ok(Rule { instance, lhs, rhs })
    }

    pub fn label(&self) -> String {
        self.instance.label()
    }

    /// Pattern and replacement for a direction.
    pub fn sides(&self, direction: Direction) -> (&Movie, &Movie) {
        match direction {
            Direction::LeftToRight => (&self.lhs, &self.rhs),
            Direction::RightToLeft => (&self.rhs, &self.lhs),
        }
    }
}

/// Right whisker of `pattern` placed at `site`, if it matches there.
fn match_at(movie: &Movie, frames: &[MorNormal], pattern: &Movie, site: Site) -> Option<usize> {
    let frame = frames.get(site.sheet)?;
    let src = &pattern.source;
    if site.at + src.len() > frame.len() || site.sheet + pattern.len() > movie.len() {
        return None;
    }
    let width = frame.width_at(site.at);
    if width < site.left + src.input {
        return None;
    }
    let right = width - site.left - src.input;
    let slices_match = src
        .slices
        .iter()
        .zip(&frame.slices[site.at..])
        .all(|(p, f)| p.shifted(site.left, right) == *f);
    let sheets_match = pattern
        .sheets
        .iter()
        .zip(&movie.sheets[site.sheet..])
        .all(|(p, m)| p.shifted(site.left, right, site.at) == *m);
    (slices_match && sheets_match).then_some(right)
}

/// Every site where the rule's pattern for `direction` occurs, in order of
/// sheet, slice index, then left whisker.
pub fn matches(movie: &Movie, frames: &[MorNormal], rule: &Rule, direction: Direction) -> Vec<Site> {
    let (pattern, _) = rule.sides(direction);
    let mut out = Vec::new();
    if pattern.len() > movie.len() {
        return out;
    }
    for k in 0..=movie.len() - pattern.len() {
        let frame = &frames[k];
        let mut candidates = Vec::new();
        if let Some(first) = pattern.sheets.first() {
            let m = &movie.sheets[k];
            if m.cell == first.cell && m.flipped == first.flipped && m.left >= first.left && m.at >= first.at {
                candidates.push((m.at - first.at, m.left - first.left));
            }
        } else if let Some(first) = pattern.source.slices.first() {
            for (at, s) in frame.slices.iter().enumerate() {
                if s.gen == first.gen && s.left >= first.left {
                    candidates.push((at, s.left - first.left));
                }
            }
        } else {
            for at in 0..=frame.len() {
                let width = frame.width_at(at);
                if width >= pattern.source.input {
                    for left in 0..=width - pattern.source.input {
                        candidates.push((at, left));
                    }
                }
            }
        }
        for (at, left) in candidates {
            let site = Site { sheet: k, at, left };
            if match_at(movie, frames, pattern, site).is_some() {
                out.push(site);
            }
        }
    }
    out
}

/// Replaces the pattern at `site` by the rule's other side.
pub fn apply(movie: &Movie, rule: &Rule, site: Site, direction: Direction) -> Result<Movie> {
    let frames = movie.frames();
    let (pattern, replacement) = rule.sides(direction);
    let right = match_at(movie, &frames, pattern, site).ok_or_else(|| Error::NoMatch {
        rule: rule.label(),
        site: site.to_string(),
    })?;
    let mut sheets = movie.sheets[..site.sheet].to_vec();
    sheets.extend(
        replacement
            .sheets
            .iter()
            .map(|s| s.shifted(site.left, right, site.at)),
    );
    sheets.extend_from_slice(&movie.sheets[site.sheet + pattern.len()..]);
    Ok(Movie {
        source: movie.source.clone(),
        sheets,
    })
}

/// One rewrite of a term by a relation instance, returned in normal form.
pub fn rewrite_step(
    alpha: &TwoTerm,
    instance: &RelationInstance,
    site: Site,
    direction: Direction,
) -> Result<TwoTerm> {
    let movie = normalize(alpha)?;
    let rule = Rule::new(instance.clone())?;
    Ok(apply(&movie, &rule, site, direction)?.to_term())
}

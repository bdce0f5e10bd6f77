//! Movie normal form for 2-morphisms.
//!
//! A movie is a source frame (a morphism in slice normal form) and a vertical
//! list of sheets. Each sheet is one elementary 2-cell whose morphism
//! arguments are single slices, whiskered by identity strands on the left and
//! right and placed at a slice index of the current frame. Reading the sheets
//! in order replays the surface as a sequence of still tangles.
//!
//! Horizontal composites expand left-then-right: `α ∘ β` becomes
//! `(α ∘ 1) · (1 ∘ β)`. The other order is reached by the interchange
//! rewrite, never silently identified.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Position, Result};
use crate::morphism::{braid_slices, MorGen, MorNormal, MorTerm, Slice};
use crate::two::{TwoGen, TwoTerm};

/// Elementary 2-cell with single-slice arguments, before whiskering.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Cell {
    /// `⊗_{f⊗Z^gap, g}`.
    Tensor { f: MorGen, gap: usize, g: MorGen },
    BraidZf(Slice),
    BraidfZ(Slice),
    Unit(MorGen),
    Triangulator,
    Writhe,
}

impl Cell {
    pub fn width(&self) -> usize {
        match self {
            Cell::Tensor { f, gap, g } => f.source_width() + gap + g.source_width(),
            Cell::BraidZf(s) | Cell::BraidfZ(s) => 1 + s.input_width(),
            Cell::Unit(f) => f.source_width(),
            Cell::Triangulator => 1,
            Cell::Writhe => 0,
        }
    }

    pub fn source(&self) -> MorNormal {
        match self {
            Cell::Tensor { f, gap, g } => {
                let a = f.source_width();
                MorNormal {
                    input: self.width(),
                    slices: vec![
                        Slice::new(a + gap, *g, 0),
                        Slice::new(0, *f, gap + g.target_width()),
                    ],
                }
            }
            Cell::BraidZf(s) => {
                let mut slices = vec![s.shifted(1, 0)];
                slices.extend(braid_slices(1, s.output_width()).slices);
                MorNormal {
                    input: self.width(),
                    slices,
                }
            }
            Cell::BraidfZ(s) => {
                let mut slices = vec![s.shifted(0, 1)];
                slices.extend(braid_slices(s.output_width(), 1).slices);
                MorNormal {
                    input: self.width(),
                    slices,
                }
            }
            Cell::Unit(f) => MorNormal::identity(f.source_width()),
            Cell::Triangulator => MorNormal {
                input: 1,
                slices: vec![Slice::new(0, MorGen::Cap, 1), Slice::new(1, MorGen::Cup, 0)],
            },
            Cell::Writhe => MorNormal {
                input: 0,
                slices: vec![Slice::new(0, MorGen::Cap, 0)],
            },
        }
    }

    pub fn target(&self) -> MorNormal {
        match self {
            Cell::Tensor { f, gap, g } => {
                let a2 = f.target_width();
                MorNormal {
                    input: self.width(),
                    slices: vec![
                        Slice::new(0, *f, gap + g.source_width()),
                        Slice::new(a2 + gap, *g, 0),
                    ],
                }
            }
            Cell::BraidZf(s) => {
                let mut slices = braid_slices(1, s.input_width()).slices;
                slices.push(s.shifted(0, 1));
                MorNormal {
                    input: self.width(),
                    slices,
                }
            }
            Cell::BraidfZ(s) => {
                let mut slices = braid_slices(s.input_width(), 1).slices;
                slices.push(s.shifted(1, 0));
                MorNormal {
                    input: self.width(),
                    slices,
                }
            }
            Cell::Unit(f) => MorNormal {
                input: f.source_width(),
                slices: vec![Slice::new(0, *f, 0), Slice::new(0, f.dual(), 0)],
            },
            Cell::Triangulator => MorNormal::identity(1),
            Cell::Writhe => MorNormal {
                input: 0,
                slices: vec![Slice::new(0, MorGen::Cap, 0), Slice::new(0, MorGen::Pos, 0)],
            },
        }
    }

    pub fn to_term(&self) -> TwoTerm {
        match self {
            Cell::Tensor { f, gap, g } => {
                let f_term = if *gap == 0 {
                    MorTerm::Gen(*f)
                } else {
                    MorTerm::whisker(0, MorTerm::Gen(*f), *gap)
                };
                TwoTerm::tensorator(f_term, MorTerm::Gen(*g))
            }
            Cell::BraidZf(s) => TwoTerm::braid_zf(s.to_term()),
            Cell::BraidfZ(s) => TwoTerm::braid_fz(s.to_term()),
            Cell::Unit(f) => TwoTerm::unit2(MorTerm::Gen(*f)),
            Cell::Triangulator => TwoTerm::triangulator(),
            Cell::Writhe => TwoTerm::writhe(),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Cell::Tensor { f, gap, g } => format!("tens({f},{gap},{g})"),
            Cell::BraidZf(s) => format!("rzf({},{},{})", s.left, s.gen, s.right),
            Cell::BraidfZ(s) => format!("rfz({},{},{})", s.left, s.gen, s.right),
            Cell::Unit(f) => format!("i({f})"),
            Cell::Triangulator => "T".into(),
            Cell::Writhe => "W".into(),
        }
    }
}

/// A whiskered elementary cell placed at slice index `at` of its frame.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Sheet {
    pub left: usize,
    pub right: usize,
    pub at: usize,
    pub cell: Cell,
    /// The dual of the cell (source and target exchanged).
    pub flipped: bool,
}

impl Sheet {
    pub fn new(cell: Cell) -> Sheet {
        Sheet {
            left: 0,
            right: 0,
            at: 0,
            cell,
            flipped: false,
        }
    }

    pub fn width(&self) -> usize {
        self.left + self.cell.width() + self.right
    }

    pub fn source(&self) -> MorNormal {
        let core = if self.flipped {
            self.cell.target()
        } else {
            self.cell.source()
        };
        core.whiskered(self.left, self.right)
    }

    pub fn target(&self) -> MorNormal {
        let core = if self.flipped {
            self.cell.source()
        } else {
            self.cell.target()
        };
        core.whiskered(self.left, self.right)
    }

    pub fn flip(&self) -> Sheet {
        Sheet {
            flipped: !self.flipped,
            ..self.clone()
        }
    }

    pub fn shifted(&self, left: usize, right: usize, at: usize) -> Sheet {
        Sheet {
            left: self.left + left,
            right: self.right + right,
            at: self.at + at,
            ..self.clone()
        }
    }

    /// The whiskered cell as a term, ignoring its vertical placement.
    pub fn term(&self) -> TwoTerm {
        let mut t = self.cell.to_term();
        if self.flipped {
            t = t.dual2();
        }
        if self.left > 0 || self.right > 0 {
            t = TwoTerm::whisker(self.left, t, self.right);
        }
        t
    }

    /// Replaces this sheet's source in `frame` by its target.
    pub fn apply(&self, frame: &MorNormal) -> Result<MorNormal> {
        let src = self.source();
        let end = self.at + src.len();
        if end > frame.len() || frame.width_at(self.at) != src.input {
            return Err(Error::Ill2Typed {
                position: Position::root(),
                reason: format!("sheet {} does not fit its frame", self.describe()),
            });
        }
        if frame.slices[self.at..end] != src.slices[..] {
            return Err(Error::Ill2Typed {
                position: Position::root(),
                reason: format!("sheet {} source not found in frame", self.describe()),
            });
        }
        Ok(self.apply_unchecked(frame))
    }

    fn apply_unchecked(&self, frame: &MorNormal) -> MorNormal {
        let src_len = self.source().len();
        let mut slices = frame.slices[..self.at].to_vec();
        slices.extend(self.target().slices);
        slices.extend_from_slice(&frame.slices[self.at + src_len..]);
        MorNormal {
            input: frame.input,
            slices,
        }
    }

    pub fn describe(&self) -> String {
        format!(
            "{}{}[{},{}]@{}",
            self.cell.name(),
            if self.flipped { "*" } else { "" },
            self.left,
            self.right,
            self.at
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Movie {
    pub source: MorNormal,
    pub sheets: Vec<Sheet>,
}

impl Movie {
    pub fn identity(frame: MorNormal) -> Movie {
        Movie {
            source: frame,
            sheets: Vec::new(),
        }
    }

    /// Builds a movie, checking that every sheet fits the frame it acts on.
    pub fn new(source: MorNormal, sheets: Vec<Sheet>) -> Result<Movie> {
        let mut frame = source.clone();
        for sheet in &sheets {
            frame = sheet.apply(&frame)?;
        }
        Ok(Movie { source, sheets })
    }

    pub fn len(&self) -> usize {
        self.sheets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sheets.is_empty()
    }

    /// The `sheets + 1` still frames.
    pub fn frames(&self) -> Vec<MorNormal> {
        let mut frames = Vec::with_capacity(self.sheets.len() + 1);
        let mut frame = self.source.clone();
        for sheet in &self.sheets {
            let next = sheet.apply_unchecked(&frame);
            frames.push(frame);
            frame = next;
        }
        frames.push(frame);
        frames
    }

    pub fn target(&self) -> MorNormal {
        self.sheets
            .iter()
            .fold(self.source.clone(), |frame, s| s.apply_unchecked(&frame))
    }

    pub fn then(mut self, next: Movie) -> Result<Movie> {
        if self.target() != next.source {
            return Err(Error::Ill2Typed {
                position: Position::root(),
                reason: "vertical composite: frames do not meet".into(),
            });
        }
        self.sheets.extend(next.sheets);
        Ok(self)
    }

    pub fn whiskered(&self, left: usize, right: usize) -> Movie {
        Movie {
            source: self.source.whiskered(left, right),
            sheets: self
                .sheets
                .iter()
                .map(|s| s.shifted(left, right, 0))
                .collect(),
        }
    }

    /// `self ∘ next`, expanded as `(self ∘ 1) · (1 ∘ next)`.
    pub fn beside(&self, next: &Movie) -> Result<Movie> {
        if self.source.output() != next.source.input {
            return Err(Error::Ill2Typed {
                position: Position::root(),
                reason: format!(
                    "horizontal composite: widths {} and {} do not meet",
                    self.source.output(),
                    next.source.input
                ),
            });
        }
        let offset = self.target().len();
        let mut sheets = self.sheets.clone();
        sheets.extend(next.sheets.iter().map(|s| s.shifted(0, 0, offset)));
        Ok(Movie {
            source: self.source.then(&next.source)?,
            sheets,
        })
    }

    /// `self ∘ next`, expanded as `(1 ∘ next) · (self ∘ 1)`.
    pub fn beside_right_first(&self, next: &Movie) -> Result<Movie> {
        if self.source.output() != next.source.input {
            return Err(Error::Ill2Typed {
                position: Position::root(),
                reason: "horizontal composite: widths do not meet".into(),
            });
        }
        let offset = self.source.len();
        let mut sheets: Vec<Sheet> = next.sheets.iter().map(|s| s.shifted(0, 0, offset)).collect();
        sheets.extend(self.sheets.iter().cloned());
        Ok(Movie {
            source: self.source.then(&next.source)?,
            sheets,
        })
    }

    pub fn dual(&self) -> Movie {
        Movie {
            source: self.target(),
            sheets: self.sheets.iter().rev().map(Sheet::flip).collect(),
        }
    }

    pub fn to_term(&self) -> TwoTerm {
        if self.sheets.is_empty() {
            return TwoTerm::id2(self.source.to_term());
        }
        let frames = self.frames();
        let mut parts = self.sheets.iter().zip(&frames).map(|(sheet, frame)| {
            let end = sheet.at + sheet.source().len();
            let mut t = sheet.term();
            if sheet.at > 0 {
                t = TwoTerm::id2(frame.segment(0, sheet.at).to_term()).hcomp(t);
            }
            if end < frame.len() {
                t = t.hcomp(TwoTerm::id2(frame.segment(end, frame.len()).to_term()));
            }
            t
        });
        let first = parts.next().expect("nonempty");
        parts.fold(first, TwoTerm::vcomp)
    }
}

impl fmt::Display for Movie {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.sheets.iter().map(Sheet::describe).collect();
        write!(f, "[{}]", names.join(", "))
    }
}

/// Movie normal form of a 2-morphism term.
pub fn normalize(alpha: &TwoTerm) -> Result<Movie> {
    movie_at(alpha, &Position::root(), false)
}

/// Still frames of a movie.
pub fn frames(movie: &Movie) -> Vec<MorNormal> {
    movie.frames()
}

/// `flipped` tracks an enclosing `*`, pushed down to the generators so that
/// horizontal composites always expand left-then-right.
fn movie_at(alpha: &TwoTerm, pos: &Position, flipped: bool) -> Result<Movie> {
    let locate = |e: Error| match e {
        Error::Ill2Typed { reason, .. } => Error::Ill2Typed {
            position: pos.clone(),
            reason,
        },
        other => other,
    };
    match alpha {
        TwoTerm::Gen(g) => {
            let m = gen_movie(g).map_err(locate)?;
            Ok(if flipped { m.dual() } else { m })
        }
        TwoTerm::Whisker2 { left, body, right } => {
            Ok(movie_at(body, &pos.child(0), flipped)?.whiskered(*left, *right))
        }
        TwoTerm::VComp(a, b) => {
            let ma = movie_at(a, &pos.child(0), flipped)?;
            let mb = movie_at(b, &pos.child(1), flipped)?;
            if flipped {
                mb.then(ma).map_err(locate)
            } else {
                ma.then(mb).map_err(locate)
            }
        }
        TwoTerm::HComp(a, b) => {
            let ma = movie_at(a, &pos.child(0), flipped)?;
            let mb = movie_at(b, &pos.child(1), flipped)?;
            ma.beside(&mb).map_err(locate)
        }
        TwoTerm::Dual2(a) => movie_at(a, &pos.child(0), !flipped),
    }
}

fn gen_movie(g: &TwoGen) -> Result<Movie> {
    match g {
        TwoGen::Id2(f) => Ok(Movie::identity(f.normalize()?)),
        TwoGen::Tensorator(f, g) => {
            let f = f.normalize()?;
            let g = g.normalize()?;
            let source = g
                .whiskered(f.input, 0)
                .then(&f.whiskered(0, g.output()))?;
            let mut sheets = Vec::with_capacity(f.len() * g.len());
            for (i, fs) in f.slices.iter().enumerate() {
                for (j, gs) in g.slices.iter().enumerate().rev() {
                    sheets.push(Sheet {
                        left: fs.left,
                        right: gs.right,
                        at: i + j,
                        cell: Cell::Tensor {
                            f: fs.gen,
                            gap: fs.right + gs.left,
                            g: gs.gen,
                        },
                        flipped: false,
                    });
                }
            }
            Ok(Movie { source, sheets })
        }
        TwoGen::BraidZf(g) => {
            let g = g.normalize()?;
            let source = g
                .whiskered(1, 0)
                .then(&braid_slices(1, g.output()))?;
            let sheets = g
                .slices
                .iter()
                .enumerate()
                .rev()
                .map(|(j, s)| Sheet {
                    at: j,
                    ..Sheet::new(Cell::BraidZf(*s))
                })
                .collect();
            Ok(Movie { source, sheets })
        }
        TwoGen::BraidfZ(f) => {
            let f = f.normalize()?;
            let source = f
                .whiskered(0, 1)
                .then(&braid_slices(f.output(), 1))?;
            let sheets = f
                .slices
                .iter()
                .enumerate()
                .rev()
                .map(|(j, s)| Sheet {
                    at: j,
                    ..Sheet::new(Cell::BraidfZ(*s))
                })
                .collect();
            Ok(Movie { source, sheets })
        }
        TwoGen::Unit2(f) => {
            // i_{fg} = i_f · (f i_g f*) and i_{A⊗f} = A ⊗ i_f
            let f = f.normalize()?;
            let sheets = f
                .slices
                .iter()
                .enumerate()
                .map(|(j, s)| Sheet {
                    left: s.left,
                    right: s.right,
                    at: j,
                    cell: Cell::Unit(s.gen),
                    flipped: false,
                })
                .collect();
            Ok(Movie {
                source: MorNormal::identity(f.input),
                sheets,
            })
        }
        TwoGen::TriangulatorZ => Ok(Movie {
            source: Cell::Triangulator.source(),
            sheets: vec![Sheet::new(Cell::Triangulator)],
        }),
        TwoGen::WritheZ => Ok(Movie {
            source: Cell::Writhe.source(),
            sheets: vec![Sheet::new(Cell::Writhe)],
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphism::MorGen::*;
    use crate::two::{counit2, two_boundary};

    fn normal(input: usize, slices: &[(usize, MorGen, usize)]) -> MorNormal {
        MorNormal {
            input,
            slices: slices.iter().map(|&(l, g, r)| Slice::new(l, g, r)).collect(),
        }
    }

    fn sphere() -> TwoTerm {
        TwoTerm::unit2(MorTerm::cap()).vcomp(TwoTerm::unit2(MorTerm::cap()).dual2())
    }

    #[test]
    fn identity_movie() {
        let f = MorTerm::cap().then(MorTerm::pos());
        let m = normalize(&TwoTerm::id2(f.clone())).unwrap();
        assert!(m.is_empty());
        assert_eq!(m.frames(), vec![f.normalize().unwrap()]);
    }

    #[test]
    fn identities_vanish_beside_a_sheet() {
        let t = TwoTerm::writhe().hcomp(TwoTerm::id2(MorTerm::pos()));
        let m = normalize(&t).unwrap();
        assert_eq!(m.len(), 1);
        assert_eq!(m.sheets[0].cell, Cell::Writhe);
        assert_eq!(m.source, normal(0, &[(0, Cap, 0), (0, Pos, 0)]));
    }

    #[test]
    fn unit_of_composite_splits() {
        let m = normalize(&TwoTerm::unit2(MorTerm::cap().then(MorTerm::pos()))).unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(
            m.frames(),
            vec![
                MorNormal::identity(0),
                normal(0, &[(0, Cap, 0), (0, Cup, 0)]),
                normal(0, &[(0, Cap, 0), (0, Pos, 0), (0, Neg, 0), (0, Cup, 0)]),
            ]
        );
    }

    #[test]
    fn sphere_frames() {
        let m = normalize(&sphere()).unwrap();
        let circle = normal(0, &[(0, Cap, 0), (0, Cup, 0)]);
        assert_eq!(m.frames(), vec![MorNormal::identity(0), circle, MorNormal::identity(0)]);
    }

    #[test]
    fn triangulator_and_writhe_frames() {
        let m = normalize(&TwoTerm::triangulator()).unwrap();
        assert_eq!(
            m.frames(),
            vec![normal(1, &[(0, Cap, 1), (1, Cup, 0)]), MorNormal::identity(1)]
        );
        let m = normalize(&TwoTerm::writhe()).unwrap();
        assert_eq!(
            m.frames(),
            vec![normal(0, &[(0, Cap, 0)]), normal(0, &[(0, Cap, 0), (0, Pos, 0)])]
        );
    }

    #[test]
    fn tensorator_grid() {
        let f = MorTerm::cap().then(MorTerm::pos());
        let g = MorTerm::cup().then(MorTerm::cap()).then(MorTerm::neg());
        let t = TwoTerm::tensorator(f, g);
        let m = normalize(&t).unwrap();
        assert_eq!(m.len(), 6);
        let (s, tg) = two_boundary(&t).unwrap();
        let frames = m.frames();
        assert_eq!(frames.first(), Some(&s));
        assert_eq!(frames.last(), Some(&tg));
        Movie::new(m.source.clone(), m.sheets.clone()).unwrap();
    }

    #[test]
    fn braid_cells_frames_match_typing() {
        let g = MorTerm::whisker(1, MorTerm::cup(), 0).then(MorTerm::whisker(0, MorTerm::cap(), 1));
        for t in [TwoTerm::braid_zf(g.clone()), TwoTerm::braid_fz(g)] {
            let m = normalize(&t).unwrap();
            let (s, tg) = two_boundary(&t).unwrap();
            assert_eq!(m.source, s);
            assert_eq!(m.target(), tg);
            assert_eq!(m.len(), 2);
            Movie::new(m.source.clone(), m.sheets.clone()).unwrap();
        }
    }

    #[test]
    fn counit_is_reversed_unit() {
        let m = normalize(&counit2(&MorTerm::cap()).unwrap()).unwrap();
        assert_eq!(m.len(), 1);
        assert!(m.sheets[0].flipped);
        assert_eq!(m.sheets[0].cell, Cell::Unit(Cup));
    }

    #[test]
    fn to_term_round_trip() {
        let t = TwoTerm::tensorator(
            MorTerm::cap().then(MorTerm::pos()),
            MorTerm::whisker(0, MorTerm::cap(), 1),
        )
        .vcomp(
            TwoTerm::id2(
                MorTerm::whisker(0, MorTerm::cap(), 1)
                    .then(MorTerm::whisker(0, MorTerm::pos(), 1))
                    .then(MorTerm::whisker(2, MorTerm::cap(), 1)),
            )
            .hcomp(TwoTerm::unit2(MorTerm::whisker(2, MorTerm::pos(), 1))),
        );
        let m = normalize(&t).unwrap();
        assert_eq!(normalize(&m.to_term()).unwrap(), m);
        let d = normalize(&t.dual2()).unwrap();
        assert_eq!(d, m.dual());
    }

    #[test]
    fn right_first_expansion() {
        let a = normalize(&TwoTerm::writhe()).unwrap();
        let b = normalize(&TwoTerm::unit2(MorTerm::pos())).unwrap();
        let lr = a.beside(&b).unwrap();
        let rl = a.beside_right_first(&b).unwrap();
        assert_eq!(lr.source, rl.source);
        assert_eq!(lr.target(), rl.target());
        Movie::new(rl.source.clone(), rl.sheets.clone()).unwrap();
        assert_ne!(lr, rl);
    }
}

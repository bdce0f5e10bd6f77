//! Objects and morphisms of the free structure.
//!
//! Every object is a tensor power `Z^n` of the generating point, so an object
//! is just its width. Morphisms are words in four generators (`cap`, `cup`,
//! `pos`, `neg`) built with whiskering and composition. Composition is written
//! in diagrammatic order: `f.then(g)` is "first `f`, then `g`".
//!
//! Equality of morphisms is syntactic on the slice normal form. Only the strict
//! laws are quotiented (associativity, identities, distributing a whisker over
//! a composite); two tangles related by a Reidemeister move stay distinct.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Position, Result};

/// A tensor power of the generator; width 0 is the unit object `I`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ObjectExpr(pub usize);

impl ObjectExpr {
    pub const UNIT: ObjectExpr = ObjectExpr(0);
    pub const Z: ObjectExpr = ObjectExpr(1);

    pub fn width(self) -> usize {
        self.0
    }

    pub fn tensor(self, other: ObjectExpr) -> ObjectExpr {
        ObjectExpr(self.0 + other.0)
    }

    /// `(A ⊗ B)* = B* ⊗ A*` with `Z* = Z`, so the width is unchanged.
    pub fn dual(self) -> ObjectExpr {
        self
    }
}

impl fmt::Display for ObjectExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => f.write_str("I"),
            1 => f.write_str("Z"),
            n => write!(f, "Z^{n}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum MorGen {
    /// The unit `i_Z: I → Z ⊗ Z`.
    Cap,
    /// The counit `e_Z = i_Z*: Z ⊗ Z → I`.
    Cup,
    /// The braiding `R_{Z,Z}`.
    Pos,
    /// Its dual `R*_{Z,Z}`; a generator in its own right, not an inverse.
    Neg,
}

impl MorGen {
    pub const ALL: [MorGen; 4] = [MorGen::Cap, MorGen::Cup, MorGen::Pos, MorGen::Neg];

    pub fn source_width(self) -> usize {
        match self {
            MorGen::Cap => 0,
            MorGen::Cup | MorGen::Pos | MorGen::Neg => 2,
        }
    }

    pub fn target_width(self) -> usize {
        match self {
            MorGen::Cup => 0,
            MorGen::Cap | MorGen::Pos | MorGen::Neg => 2,
        }
    }

    pub fn dual(self) -> MorGen {
        match self {
            MorGen::Cap => MorGen::Cup,
            MorGen::Cup => MorGen::Cap,
            MorGen::Pos => MorGen::Neg,
            MorGen::Neg => MorGen::Pos,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MorGen::Cap => "cap",
            MorGen::Cup => "cup",
            MorGen::Pos => "pos",
            MorGen::Neg => "neg",
        }
    }
}

impl fmt::Display for MorGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MorTerm {
    Identity(usize),
    Gen(MorGen),
    Whiskered {
        left: usize,
        body: Box<MorTerm>,
        right: usize,
    },
    /// `first` followed by `then`.
    Composite(Box<MorTerm>, Box<MorTerm>),
}

impl MorTerm {
    pub fn id(width: usize) -> MorTerm {
        MorTerm::Identity(width)
    }

    pub fn cap() -> MorTerm {
        MorTerm::Gen(MorGen::Cap)
    }

    pub fn cup() -> MorTerm {
        MorTerm::Gen(MorGen::Cup)
    }

    pub fn pos() -> MorTerm {
        MorTerm::Gen(MorGen::Pos)
    }

    pub fn neg() -> MorTerm {
        MorTerm::Gen(MorGen::Neg)
    }

    pub fn whisker(left: usize, body: MorTerm, right: usize) -> MorTerm {
        MorTerm::Whiskered {
            left,
            body: Box::new(body),
            right,
        }
    }

    pub fn then(self, next: MorTerm) -> MorTerm {
        MorTerm::Composite(Box::new(self), Box::new(next))
    }

    /// Source and target objects.
    pub fn typecheck(&self) -> Result<(ObjectExpr, ObjectExpr)> {
        self.widths_at(&Position::root())
            .map(|(s, t)| (ObjectExpr(s), ObjectExpr(t)))
    }

    fn widths_at(&self, pos: &Position) -> Result<(usize, usize)> {
        match self {
            MorTerm::Identity(n) => Ok((*n, *n)),
            MorTerm::Gen(g) => Ok((g.source_width(), g.target_width())),
            MorTerm::Whiskered { left, body, right } => {
                let (s, t) = body.widths_at(&pos.child(0))?;
                Ok((left + s + right, left + t + right))
            }
            MorTerm::Composite(first, then) => {
                let (s, mid) = first.widths_at(&pos.child(0))?;
                let (mid2, t) = then.widths_at(&pos.child(1))?;
                if mid != mid2 {
                    return Err(Error::WidthMismatch {
                        position: pos.clone(),
                        left: mid,
                        right: mid2,
                    });
                }
                Ok((s, t))
            }
        }
    }

    pub fn source(&self) -> Result<ObjectExpr> {
        Ok(self.typecheck()?.0)
    }

    pub fn target(&self) -> Result<ObjectExpr> {
        Ok(self.typecheck()?.1)
    }

    pub fn normalize(&self) -> Result<MorNormal> {
        let (src, _) = self.typecheck()?;
        let mut slices = Vec::new();
        self.push_slices(0, 0, &mut slices);
        Ok(MorNormal {
            input: src.width(),
            slices,
        })
    }

    fn push_slices(&self, outer_left: usize, outer_right: usize, out: &mut Vec<Slice>) {
        match self {
            MorTerm::Identity(_) => {}
            MorTerm::Gen(g) => out.push(Slice::new(outer_left, *g, outer_right)),
            MorTerm::Whiskered { left, body, right } => {
                body.push_slices(outer_left + left, outer_right + right, out)
            }
            MorTerm::Composite(first, then) => {
                first.push_slices(outer_left, outer_right, out);
                then.push_slices(outer_left, outer_right, out);
            }
        }
    }

    /// The dual morphism: reverses composition, dualizes each generator and
    /// keeps whiskers in place.
    pub fn dual(&self) -> Result<MorTerm> {
        self.typecheck()?;
        Ok(self.dual_unchecked())
    }

    fn dual_unchecked(&self) -> MorTerm {
        match self {
            MorTerm::Identity(n) => MorTerm::Identity(*n),
            MorTerm::Gen(g) => MorTerm::Gen(g.dual()),
            MorTerm::Whiskered { left, body, right } => {
                MorTerm::whisker(*left, body.dual_unchecked(), *right)
            }
            MorTerm::Composite(first, then) => then.dual_unchecked().then(first.dual_unchecked()),
        }
    }

    /// Syntactic equality of slice normal forms.
    pub fn equals(&self, other: &MorTerm) -> Result<bool> {
        Ok(self.normalize()? == other.normalize()?)
    }
}

impl From<MorGen> for MorTerm {
    fn from(g: MorGen) -> Self {
        MorTerm::Gen(g)
    }
}

/// One generator with identity strands on either side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Slice {
    pub left: usize,
    pub gen: MorGen,
    pub right: usize,
}

impl Slice {
    pub fn new(left: usize, gen: MorGen, right: usize) -> Slice {
        Slice { left, gen, right }
    }

    pub fn input_width(&self) -> usize {
        self.left + self.gen.source_width() + self.right
    }

    pub fn output_width(&self) -> usize {
        self.left + self.gen.target_width() + self.right
    }

    pub fn shifted(&self, left: usize, right: usize) -> Slice {
        Slice::new(self.left + left, self.gen, self.right + right)
    }

    pub fn dual(&self) -> Slice {
        Slice::new(self.left, self.gen.dual(), self.right)
    }

    pub fn to_term(&self) -> MorTerm {
        if self.left == 0 && self.right == 0 {
            MorTerm::Gen(self.gen)
        } else {
            MorTerm::whisker(self.left, MorTerm::Gen(self.gen), self.right)
        }
    }
}

/// Slice normal form: an input width and a list of single-generator slices
/// whose widths chain.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MorNormal {
    pub input: usize,
    pub slices: Vec<Slice>,
}

impl MorNormal {
    pub fn identity(width: usize) -> MorNormal {
        MorNormal {
            input: width,
            slices: Vec::new(),
        }
    }

    /// Builds a normal form, checking the width chain.
    pub fn from_slices(input: usize, slices: Vec<Slice>) -> Result<MorNormal> {
        let mut width = input;
        for (k, s) in slices.iter().enumerate() {
            if s.input_width() != width {
                return Err(Error::WidthMismatch {
                    position: Position(vec![k]),
                    left: width,
                    right: s.input_width(),
                });
            }
            width = s.output_width();
        }
        Ok(MorNormal { input, slices })
    }

    pub fn output(&self) -> usize {
        self.slices.last().map_or(self.input, |s| s.output_width())
    }

    pub fn len(&self) -> usize {
        self.slices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slices.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.slices.is_empty()
    }

    /// Width of the interface just before slice `position` (or after the last
    /// slice when `position == len`).
    pub fn width_at(&self, position: usize) -> usize {
        if position == 0 {
            self.input
        } else {
            self.slices[position - 1].output_width()
        }
    }

    pub fn max_width(&self) -> usize {
        self.slices
            .iter()
            .map(|s| s.output_width())
            .fold(self.input, usize::max)
    }

    pub fn then(&self, next: &MorNormal) -> Result<MorNormal> {
        if self.output() != next.input {
            return Err(Error::WidthMismatch {
                position: Position::root(),
                left: self.output(),
                right: next.input,
            });
        }
        let mut slices = self.slices.clone();
        slices.extend_from_slice(&next.slices);
        Ok(MorNormal {
            input: self.input,
            slices,
        })
    }

    pub fn whiskered(&self, left: usize, right: usize) -> MorNormal {
        MorNormal {
            input: self.input + left + right,
            slices: self.slices.iter().map(|s| s.shifted(left, right)).collect(),
        }
    }

    pub fn dual(&self) -> MorNormal {
        MorNormal {
            input: self.output(),
            slices: self.slices.iter().rev().map(Slice::dual).collect(),
        }
    }

    /// Slices `range` as a normal form of its own.
    pub fn segment(&self, start: usize, end: usize) -> MorNormal {
        MorNormal {
            input: self.width_at(start),
            slices: self.slices[start..end].to_vec(),
        }
    }

    /// Removes identity strands common to every slice on the left and right.
    /// Returns the stripped form with the amounts removed.
    pub fn stripped(&self) -> (MorNormal, usize, usize) {
        if self.slices.is_empty() {
            return (self.clone(), 0, 0);
        }
        let left = self.slices.iter().map(|s| s.left).min().unwrap_or(0);
        let right = self.slices.iter().map(|s| s.right).min().unwrap_or(0);
        let slices = self
            .slices
            .iter()
            .map(|s| Slice::new(s.left - left, s.gen, s.right - right))
            .collect();
        (
            MorNormal {
                input: self.input - left - right,
                slices,
            },
            left,
            right,
        )
    }

    pub fn to_term(&self) -> MorTerm {
        let mut terms = self.slices.iter().map(Slice::to_term);
        match terms.next() {
            None => MorTerm::Identity(self.input),
            Some(first) => terms.fold(first, MorTerm::then),
        }
    }
}

/// The braiding `R_{Z^m, Z^n}` expanded into crossings.
///
/// The left block crosses strand by strand, starting with its rightmost
/// strand; each strand passes over the whole right block before the next one
/// starts. With either block empty the result is an identity.
pub fn braid_expand(m: usize, n: usize) -> MorTerm {
    braid_slices(m, n).to_term()
}

pub(crate) fn braid_slices(m: usize, n: usize) -> MorNormal {
    let total = m + n;
    let mut slices = Vec::with_capacity(m * n);
    for i in (0..m).rev() {
        for j in 0..n {
            slices.push(Slice::new(i + j, MorGen::Pos, total - 2 - i - j));
        }
    }
    MorNormal {
        input: total,
        slices,
    }
}

/// `i_{Z^n}: I → Z^{2n}` as nested caps, from `i_{A⊗B} = i_A (A ⊗ i_B ⊗ A*)`.
/// The unit of the unit object is taken to be the identity.
pub fn unit_of_object(n: usize) -> MorTerm {
    unit_slices(n).to_term()
}

pub(crate) fn unit_slices(n: usize) -> MorNormal {
    MorNormal {
        input: 0,
        slices: (0..n).map(|k| Slice::new(k, MorGen::Cap, k)).collect(),
    }
}

/// `e_{Z^n}`, the dual of [`unit_of_object`].
pub fn counit_of_object(n: usize) -> MorTerm {
    unit_slices(n).dual().to_term()
}

/// The balancing `b_A = (e_A* ⊗ A)(A* ⊗ R_{A,A})(e_A ⊗ A)` at `A = Z^n`.
pub fn balancing(n: usize) -> MorTerm {
    let counit = unit_slices(n).dual();
    let birth = counit.dual().whiskered(0, n);
    let twist = braid_slices(n, n).whiskered(n, 0);
    let death = counit.whiskered(0, n);
    let mut slices = birth.slices;
    slices.extend(twist.slices);
    slices.extend(death.slices);
    MorNormal { input: n, slices }.to_term()
}

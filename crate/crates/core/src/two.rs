//! 2-morphism terms.
//!
//! Generators follow the list that generates every 2-morphism of the free
//! structure: identities `1_f`, tensorators `⊗_{f,g}`, braiding cells
//! `R_{Z,g}` and `R_{f,Z}`, units `i_f`, the triangulator `T_Z` and the
//! writhing `W_Z`. Terms combine them with object whiskering, vertical
//! composition `·`, horizontal composition `∘` and duals.
//!
//! Counits, adjoints and the triangulators of tensor powers are derived
//! here as macros over the primitive syntax.

use crate::error::{Error, Position, Result};
use crate::morphism::{
    braid_expand, counit_of_object, unit_of_object, MorNormal, MorTerm, ObjectExpr,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TwoGen {
    Id2(MorTerm),
    /// `⊗_{f,g}: (A⊗g)(f⊗B') ⇒ (f⊗B)(A'⊗g)`.
    Tensorator(MorTerm, MorTerm),
    /// `R_{Z,g}: (Z⊗g)R_{Z,B'} ⇒ R_{Z,B}(g⊗Z)`.
    BraidZf(MorTerm),
    /// `R_{f,Z}: (f⊗Z)R_{A',Z} ⇒ R_{A,Z}(Z⊗f)`.
    BraidfZ(MorTerm),
    /// `i_f: 1_A ⇒ f f*`.
    Unit2(MorTerm),
    /// `T_Z: (i_Z⊗Z)(Z⊗e_Z) ⇒ 1_Z`.
    TriangulatorZ,
    /// `W_Z: i_Z ⇒ i_Z R_{Z,Z}`.
    WritheZ,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TwoTerm {
    Gen(TwoGen),
    Whisker2 {
        left: usize,
        body: Box<TwoTerm>,
        right: usize,
    },
    /// Vertical composite `a · b`: first `a`, then `b`.
    VComp(Box<TwoTerm>, Box<TwoTerm>),
    /// Horizontal composite `a ∘ b` along a shared object.
    HComp(Box<TwoTerm>, Box<TwoTerm>),
    Dual2(Box<TwoTerm>),
}

impl From<TwoGen> for TwoTerm {
    fn from(g: TwoGen) -> Self {
        TwoTerm::Gen(g)
    }
}

impl TwoTerm {
    pub fn id2(f: MorTerm) -> TwoTerm {
        TwoTerm::Gen(TwoGen::Id2(f))
    }

    pub fn tensorator(f: MorTerm, g: MorTerm) -> TwoTerm {
        TwoTerm::Gen(TwoGen::Tensorator(f, g))
    }

    pub fn braid_zf(g: MorTerm) -> TwoTerm {
        TwoTerm::Gen(TwoGen::BraidZf(g))
    }

    pub fn braid_fz(f: MorTerm) -> TwoTerm {
        TwoTerm::Gen(TwoGen::BraidfZ(f))
    }

    pub fn unit2(f: MorTerm) -> TwoTerm {
        TwoTerm::Gen(TwoGen::Unit2(f))
    }

    pub fn triangulator() -> TwoTerm {
        TwoTerm::Gen(TwoGen::TriangulatorZ)
    }

    pub fn writhe() -> TwoTerm {
        TwoTerm::Gen(TwoGen::WritheZ)
    }

    pub fn whisker(left: usize, body: TwoTerm, right: usize) -> TwoTerm {
        TwoTerm::Whisker2 {
            left,
            body: Box::new(body),
            right,
        }
    }

    pub fn vcomp(self, next: TwoTerm) -> TwoTerm {
        TwoTerm::VComp(Box::new(self), Box::new(next))
    }

    pub fn hcomp(self, next: TwoTerm) -> TwoTerm {
        TwoTerm::HComp(Box::new(self), Box::new(next))
    }

    /// The formal dual `α*`, kept as a node.
    pub fn dual2(self) -> TwoTerm {
        TwoTerm::Dual2(Box::new(self))
    }

    /// Source and target morphisms.
    pub fn typecheck(&self) -> Result<(MorTerm, MorTerm)> {
        self.type_at(&Position::root())
    }

    pub fn source(&self) -> Result<MorTerm> {
        Ok(self.typecheck()?.0)
    }

    pub fn target(&self) -> Result<MorTerm> {
        Ok(self.typecheck()?.1)
    }

    fn type_at(&self, pos: &Position) -> Result<(MorTerm, MorTerm)> {
        match self {
            TwoTerm::Gen(g) => gen_type(g).map_err(|e| relocate(e, pos)),
            TwoTerm::Whisker2 { left, body, right } => {
                let (s, t) = body.type_at(&pos.child(0))?;
                Ok((
                    MorTerm::whisker(*left, s, *right),
                    MorTerm::whisker(*left, t, *right),
                ))
            }
            TwoTerm::VComp(a, b) => {
                let (s, mid) = a.type_at(&pos.child(0))?;
                let (mid2, t) = b.type_at(&pos.child(1))?;
                if !mid.equals(&mid2)? {
                    return Err(Error::Ill2Typed {
                        position: pos.clone(),
                        reason: "vertical composite: target of first differs from source of second"
                            .into(),
                    });
                }
                Ok((s, t))
            }
            TwoTerm::HComp(a, b) => {
                let (sa, ta) = a.type_at(&pos.child(0))?;
                let (sb, tb) = b.type_at(&pos.child(1))?;
                let mid = sa.target()?;
                let mid2 = sb.source()?;
                if mid != mid2 {
                    return Err(Error::Ill2Typed {
                        position: pos.clone(),
                        reason: format!(
                            "horizontal composite: objects {mid} and {mid2} do not meet"
                        ),
                    });
                }
                Ok((sa.then(sb), ta.then(tb)))
            }
            TwoTerm::Dual2(a) => {
                let (s, t) = a.type_at(&pos.child(0))?;
                Ok((t, s))
            }
        }
    }

    /// Dual with the `*` pushed down to generator leaves:
    /// `(α·β)* = β*·α*`, `(α∘β)* = α*∘β*`, `(A⊗α)* = A⊗α*`, `α** = α`, `1_f* = 1_f`.
    pub fn dual(&self) -> Result<TwoTerm> {
        self.typecheck()?;
        Ok(self.push_dual(true))
    }

    fn push_dual(&self, flip: bool) -> TwoTerm {
        match self {
            TwoTerm::Gen(TwoGen::Id2(f)) => TwoTerm::id2(f.clone()),
            TwoTerm::Gen(g) => {
                let leaf = TwoTerm::Gen(g.clone());
                if flip {
                    leaf.dual2()
                } else {
                    leaf
                }
            }
            TwoTerm::Whisker2 { left, body, right } => {
                TwoTerm::whisker(*left, body.push_dual(flip), *right)
            }
            TwoTerm::VComp(a, b) => {
                if flip {
                    b.push_dual(true).vcomp(a.push_dual(true))
                } else {
                    a.push_dual(false).vcomp(b.push_dual(false))
                }
            }
            TwoTerm::HComp(a, b) => a.push_dual(flip).hcomp(b.push_dual(flip)),
            TwoTerm::Dual2(a) => a.push_dual(!flip),
        }
    }

    /// The adjoint `α† = (g* i_f) · (g* α f*) · (e_g f*)` of `α: f ⇒ g`.
    pub fn adjoint(&self) -> Result<TwoTerm> {
        let (f, g) = self.typecheck()?;
        let f_dual = f.dual()?;
        let g_dual = g.dual()?;
        let first = TwoTerm::id2(g_dual.clone()).hcomp(TwoTerm::unit2(f.clone()));
        let middle = TwoTerm::id2(g_dual)
            .hcomp(self.clone())
            .hcomp(TwoTerm::id2(f_dual.clone()));
        let last = counit2(&g)?.hcomp(TwoTerm::id2(f_dual));
        Ok(first.vcomp(middle).vcomp(last))
    }
}

/// `e_f := (i_{f*})*`, typed `f* f ⇒ 1_B`.
pub fn counit2(f: &MorTerm) -> Result<TwoTerm> {
    Ok(TwoTerm::unit2(f.dual()?).dual2())
}

/// `T_{Z^n}`, built from `T_Z` with
/// `T_{A⊗B} = [(i_A⊗A⊗B)(A⊗⊗⁻¹_{i_B,e_A}⊗B)(A⊗B⊗e_B)] · [(T_A⊗B) ∘ (A⊗T_B)]`
/// at `A = Z`, `B = Z^{n-1}`. `T_I` is the identity on `1_I`.
pub fn triangulator_of_object(n: usize) -> TwoTerm {
    match n {
        0 => TwoTerm::id2(MorTerm::id(0)),
        1 => TwoTerm::triangulator(),
        _ => {
            let b = n - 1;
            let inverse_tensorator =
                TwoTerm::tensorator(unit_of_object(b), counit_of_object(1)).dual2();
            let bracket = TwoTerm::id2(MorTerm::whisker(0, unit_of_object(1), 1 + b))
                .hcomp(TwoTerm::whisker(1, inverse_tensorator, b))
                .hcomp(TwoTerm::id2(MorTerm::whisker(1 + b, counit_of_object(b), 0)));
            let collapse = TwoTerm::whisker(0, TwoTerm::triangulator(), b)
                .hcomp(TwoTerm::whisker(1, triangulator_of_object(b), 0));
            bracket.vcomp(collapse)
        }
    }
}

/// Source and target of a generator.
pub fn gen_type(g: &TwoGen) -> Result<(MorTerm, MorTerm)> {
    match g {
        TwoGen::Id2(f) => {
            f.typecheck()?;
            Ok((f.clone(), f.clone()))
        }
        TwoGen::Tensorator(f, g) => {
            let (a, a2) = f.typecheck()?;
            let (b, b2) = g.typecheck()?;
            let src = MorTerm::whisker(a.width(), g.clone(), 0)
                .then(MorTerm::whisker(0, f.clone(), b2.width()));
            let tgt = MorTerm::whisker(0, f.clone(), b.width())
                .then(MorTerm::whisker(a2.width(), g.clone(), 0));
            Ok((src, tgt))
        }
        TwoGen::BraidZf(g) => {
            let (b, b2) = g.typecheck()?;
            let src = MorTerm::whisker(1, g.clone(), 0).then(braid_expand(1, b2.width()));
            let tgt = braid_expand(1, b.width()).then(MorTerm::whisker(0, g.clone(), 1));
            Ok((src, tgt))
        }
        TwoGen::BraidfZ(f) => {
            let (a, a2) = f.typecheck()?;
            let src = MorTerm::whisker(0, f.clone(), 1).then(braid_expand(a2.width(), 1));
            let tgt = braid_expand(a.width(), 1).then(MorTerm::whisker(1, f.clone(), 0));
            Ok((src, tgt))
        }
        TwoGen::Unit2(f) => {
            let (a, _) = f.typecheck()?;
            Ok((MorTerm::id(a.width()), f.clone().then(f.dual()?)))
        }
        TwoGen::TriangulatorZ => Ok((
            MorTerm::whisker(0, MorTerm::cap(), 1).then(MorTerm::whisker(1, MorTerm::cup(), 0)),
            MorTerm::id(1),
        )),
        TwoGen::WritheZ => Ok((MorTerm::cap(), MorTerm::cap().then(MorTerm::pos()))),
    }
}

fn relocate(err: Error, pos: &Position) -> Error {
    match err {
        Error::WidthMismatch { left, right, .. } => Error::Ill2Typed {
            position: pos.clone(),
            reason: format!("morphism argument has width mismatch {left} vs {right}"),
        },
        other => other,
    }
}

/// Source and target objects of the 1-cells of `α`.
pub fn two_objects(alpha: &TwoTerm) -> Result<(ObjectExpr, ObjectExpr)> {
    alpha.source()?.typecheck()
}

/// Normal forms of source and target.
pub fn two_boundary(alpha: &TwoTerm) -> Result<(MorNormal, MorNormal)> {
    let (s, t) = alpha.typecheck()?;
    Ok((s.normalize()?, t.normalize()?))
}

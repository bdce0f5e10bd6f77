use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use rand::{Rng, RngCore};

use super::sample::{random_morphism, random_morphism_between, random_sheet, random_two_morphism, ArgPool};
use crate::error::{Error, Result};
use crate::io::print::{mor_to_string, two_to_string};
use crate::morphism::{braid_expand, counit_of_object, unit_of_object, MorGen, MorNormal, MorTerm};
use crate::movie::{Cell, Movie, Sheet};
use crate::two::{counit2, triangulator_of_object, two_boundary, TwoTerm};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArgKind {
    Object,
    Morphism,
    TwoMorphism,
}

impl fmt::Display for ArgKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ArgKind::Object => "object",
            ArgKind::Morphism => "morphism",
            ArgKind::TwoMorphism => "2-morphism",
        })
    }
}

/// A schema argument. Objects are given by their width.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Arg {
    Object(usize),
    Mor(MorTerm),
    Two(TwoTerm),
}

impl Arg {
    pub fn kind(&self) -> ArgKind {
        match self {
            Arg::Object(_) => ArgKind::Object,
            Arg::Mor(_) => ArgKind::Morphism,
            Arg::Two(_) => ArgKind::TwoMorphism,
        }
    }
}

impl fmt::Display for Arg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Arg::Object(n) => write!(f, "{n}"),
            Arg::Mor(m) => f.write_str(&mor_to_string(m)),
            Arg::Two(t) => f.write_str(&two_to_string(t)),
        }
    }
}

/// A schema applied to arguments: a pair of parallel 2-morphisms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelationInstance {
    pub schema: String,
    pub args: Vec<Arg>,
    pub lhs: TwoTerm,
    pub rhs: TwoTerm,
}

impl RelationInstance {
    pub fn label(&self) -> String {
        if self.args.is_empty() {
            return self.schema.clone();
        }
        let args: Vec<String> = self.args.iter().map(Arg::to_string).collect();
        format!("{}({})", self.schema, args.join(" | "))
    }
}

type Build = dyn Fn(&[Arg]) -> Result<(TwoTerm, TwoTerm)> + Send + Sync;
type Propose = dyn Fn(&Movie, &[MorNormal]) -> Vec<Vec<Arg>> + Send + Sync;
type Draw = dyn Fn(&mut dyn RngCore, ArgPool) -> Vec<Arg> + Send + Sync;

/// A named family of relations indexed by objects, morphisms or 2-morphisms.
///
/// Besides building instances, a schema proposes arguments relevant to a
/// given movie (used by the search) and draws random arguments (used by
/// sampling checks).
#[derive(Clone)]
pub struct RelationSchema {
    pub name: String,
    pub arg_kinds: Vec<ArgKind>,
    /// The relation in symbols.
    pub statement: String,
    build: Arc<Build>,
    propose: Arc<Propose>,
    draw: Arc<Draw>,
}

impl fmt::Debug for RelationSchema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RelationSchema")
            .field("name", &self.name)
            .field("arg_kinds", &self.arg_kinds)
            .finish()
    }
}

impl RelationSchema {
    pub fn new(
        name: &str,
        arg_kinds: Vec<ArgKind>,
        statement: &str,
        build: impl Fn(&[Arg]) -> Result<(TwoTerm, TwoTerm)> + Send + Sync + 'static,
    ) -> RelationSchema {
        let kinds = arg_kinds.clone();
        RelationSchema {
            name: name.into(),
            arg_kinds,
            statement: statement.into(),
            build: Arc::new(build),
            propose: Arc::new(|_: &Movie, _: &[MorNormal]| Vec::new()),
            draw: Arc::new(move |rng: &mut dyn RngCore, pool| {
                kinds.iter().map(|k| draw_kind(*k, rng, pool)).collect()
            }),
        }
    }

    /// A schema with no arguments relating two fixed 2-morphisms.
    pub fn equation(name: &str, lhs: TwoTerm, rhs: TwoTerm) -> RelationSchema {
        let statement = format!("{} = {}", two_to_string(&lhs), two_to_string(&rhs));
        RelationSchema::new(name, Vec::new(), &statement, move |_| {
            Ok((lhs.clone(), rhs.clone()))
        })
        .with_proposer(|_, _| vec![Vec::new()])
    }

    pub fn with_proposer(
        mut self,
        propose: impl Fn(&Movie, &[MorNormal]) -> Vec<Vec<Arg>> + Send + Sync + 'static,
    ) -> RelationSchema {
        self.propose = Arc::new(propose);
        self
    }

    pub fn with_sampler(
        mut self,
        draw: impl Fn(&mut dyn RngCore, ArgPool) -> Vec<Arg> + Send + Sync + 'static,
    ) -> RelationSchema {
        self.draw = Arc::new(draw);
        self
    }

    /// Builds the instance, checking argument kinds and that both sides are
    /// well typed and parallel.
    pub fn instantiate(&self, args: &[Arg]) -> Result<RelationInstance> {
        if args.len() != self.arg_kinds.len() {
            return Err(Error::KindMismatch {
                schema: self.name.clone(),
                reason: format!(
                    "expected {} arguments, got {}",
                    self.arg_kinds.len(),
                    args.len()
                ),
            });
        }
        for (i, (arg, kind)) in args.iter().zip(&self.arg_kinds).enumerate() {
            if arg.kind() != *kind {
                return Err(Error::KindMismatch {
                    schema: self.name.clone(),
                    reason: format!("argument {i} should be a {kind}, got a {}", arg.kind()),
                });
            }
        }
        let (lhs, rhs) = (self.build)(args)?;
        let left = two_boundary(&lhs)?;
        let right = two_boundary(&rhs)?;
        if left != right {
            return Err(Error::NotParallel(format!(
                "sides of `{}` have different boundaries",
                self.name
            )));
        }
        Ok(RelationInstance {
            schema: self.name.clone(),
            args: args.to_vec(),
            lhs,
            rhs,
        })
    }

    /// Candidate arguments whose instances may act on `movie`.
    pub fn propose(&self, movie: &Movie, frames: &[MorNormal]) -> Vec<Vec<Arg>> {
        (self.propose)(movie, frames)
    }

    pub fn draw(&self, rng: &mut dyn RngCore, pool: ArgPool) -> Vec<Arg> {
        (self.draw)(rng, pool)
    }
}

fn draw_kind(kind: ArgKind, rng: &mut dyn RngCore, pool: ArgPool) -> Arg {
    match kind {
        ArgKind::Object => Arg::Object(rng.gen_range(0..=2)),
        ArgKind::Morphism => Arg::Mor(random_morphism(rng, 3, pool)),
        ArgKind::TwoMorphism => Arg::Two(random_two_morphism(rng, pool)),
    }
}

/// An ordered set of relation schemas.
#[derive(Clone, Debug, Default)]
pub struct Catalog {
    schemas: Vec<RelationSchema>,
}

impl Catalog {
    pub fn empty() -> Catalog {
        Catalog::default()
    }

    pub fn schemas(&self) -> &[RelationSchema] {
        &self.schemas
    }

    pub fn get(&self, name: &str) -> Result<&RelationSchema> {
        self.schemas
            .iter()
            .find(|s| s.name == name)
            .ok_or_else(|| Error::UnknownSchema(name.into()))
    }

    pub fn instantiate(&self, name: &str, args: &[Arg]) -> Result<RelationInstance> {
        self.get(name)?.instantiate(args)
    }

    /// Adds a schema, replacing any schema of the same name.
    pub fn register(&mut self, schema: RelationSchema) {
        match self.schemas.iter_mut().find(|s| s.name == schema.name) {
            Some(slot) => *slot = schema,
            None => self.schemas.push(schema),
        }
    }

    /// The built-in relations.
    pub fn shipped() -> Catalog {
        use ArgKind::*;
        let mut c = Catalog::empty();

        let tens = |a: &[Arg]| Ok(TwoTerm::tensorator(mor(a, 0)?, mor(a, 1)?));
        for (name, co) in [("tensorator-unitary", false), ("tensorator-unitary-co", true)] {
            c.register(
                unitary(name, vec![Morphism, Morphism], "⊗_{f,g}", co, tens)
                    .with_proposer(propose_tensor_pairs),
            );
        }
        let tri = |a: &[Arg]| Ok(triangulator_of_object(obj(a, 0)?));
        for (name, co) in [("T-unitary", false), ("T-unitary-co", true)] {
            c.register(unitary(name, vec![Object], "T_A", co, tri).with_proposer(|_, _| {
                vec![vec![Arg::Object(1)]]
            }));
        }
        for (name, co) in [("W-unitary", false), ("W-unitary-co", true)] {
            c.register(
                unitary(name, vec![], "W_Z", co, |_| Ok(TwoTerm::writhe()))
                    .with_proposer(|_, _| vec![Vec::new()]),
            );
        }
        let unit_braid = |a: &[Arg]| Ok(TwoTerm::unit2(braid_expand(obj(a, 0)?, obj(a, 1)?)));
        for (name, co) in [("iR-unitary", false), ("iR-unitary-co", true)] {
            c.register(
                unitary(name, vec![Object, Object], "i_{R_{A,B}}", co, unit_braid)
                    .with_proposer(|_, _| vec![vec![Arg::Object(1), Arg::Object(1)]]),
            );
        }
        let counit_braid = |a: &[Arg]| counit2(&braid_expand(obj(a, 0)?, obj(a, 1)?));
        for (name, co) in [("eR-unitary", false), ("eR-unitary-co", true)] {
            c.register(
                unitary(name, vec![Object, Object], "e_{R_{A,B}}", co, counit_braid)
                    .with_proposer(|_, _| vec![vec![Arg::Object(1), Arg::Object(1)]]),
            );
        }
        let rzf = |a: &[Arg]| Ok(TwoTerm::braid_zf(mor(a, 0)?));
        for (name, co) in [("RZf-unitary", false), ("RZf-unitary-co", true)] {
            c.register(
                unitary(name, vec![Morphism], "R_{Z,g}", co, rzf).with_proposer(propose_braid_slices),
            );
        }
        let rfz = |a: &[Arg]| Ok(TwoTerm::braid_fz(mor(a, 0)?));
        for (name, co) in [("RfZ-unitary", false), ("RfZ-unitary-co", true)] {
            c.register(
                unitary(name, vec![Morphism], "R_{f,Z}", co, rfz).with_proposer(propose_braid_slices),
            );
        }
        c.register(
            unitary(
                "Rtilde-left-unitary",
                vec![Object, Object, Object],
                "R~_{(A|B,C)}",
                false,
                |a| rtilde_left(obj(a, 0)?, obj(a, 1)?, obj(a, 2)?),
            )
            .with_sampler(|rng, _| {
                vec![
                    Arg::Object(rng.gen_range(0..=1)),
                    Arg::Object(rng.gen_range(0..=2)),
                    Arg::Object(rng.gen_range(0..=2)),
                ]
            }),
        );
        c.register(unitary(
            "Rtilde-right-unitary",
            vec![Object, Object, Object],
            "R~_{(A,B|C)}",
            false,
            |a| rtilde_right(obj(a, 0)?, obj(a, 1)?, obj(a, 2)?),
        ));

        c.register(
            RelationSchema::new(
                "zigzag-2cell",
                vec![Morphism],
                "(i_f ∘ 1_f) · (1_f ∘ e_f) = 1_f",
                |a| {
                    let f = mor(a, 0)?;
                    let lhs = TwoTerm::unit2(f.clone())
                        .hcomp(TwoTerm::id2(f.clone()))
                        .vcomp(TwoTerm::id2(f.clone()).hcomp(counit2(&f)?));
                    Ok((lhs, TwoTerm::id2(f)))
                },
            )
            .with_proposer(propose_segments),
        );
        c.register(
            RelationSchema::new(
                "zigzag-2cell-co",
                vec![Morphism],
                "(1_{f*} ∘ i_f) · (e_f ∘ 1_{f*}) = 1_{f*}",
                |a| {
                    let f = mor(a, 0)?;
                    let fd = f.dual()?;
                    let lhs = TwoTerm::id2(fd.clone())
                        .hcomp(TwoTerm::unit2(f.clone()))
                        .vcomp(counit2(&f)?.hcomp(TwoTerm::id2(fd.clone())));
                    Ok((lhs, TwoTerm::id2(fd)))
                },
            )
            .with_proposer(propose_segments),
        );
        c.register(
            RelationSchema::new(
                "adjoint-dual-commute",
                vec![TwoMorphism],
                "(α†)* = (α*)†",
                |a| {
                    let alpha = two(a, 0)?;
                    Ok((
                        alpha.adjoint()?.dual2(),
                        alpha.clone().dual2().adjoint()?,
                    ))
                },
            )
            .with_proposer(propose_cells),
        );
        c.register(
            RelationSchema::new(
                "triangulator-equation",
                vec![Object],
                "(i_A ∘ A⊗T_{A*}†) · (⊗⁻¹_{i_A,i_A} ∘ A⊗e_A⊗A*) · (i_A ∘ T_A⊗A*) = 1_{i_A}",
                |a| Ok(triangulator_equation(obj(a, 0)?)),
            )
            .with_proposer(|_, _| vec![vec![Arg::Object(1)]]),
        );
        c.register(
            RelationSchema::new(
                "writhing-equation",
                vec![],
                "the two writhe-framed loops on Z agree",
                |_| Ok(writhing_equation()),
            )
            .with_proposer(|_, _| vec![Vec::new()]),
        );
        c.register(
            RelationSchema::new(
                "interchange",
                vec![TwoMorphism, Morphism, TwoMorphism],
                "(α ∘ m ∘ 1) · (1 ∘ m ∘ β) = (1 ∘ m ∘ β) · (α ∘ m ∘ 1)",
                |a| {
                    let (alpha, m, beta) = (two(a, 0)?, mor(a, 1)?, two(a, 2)?);
                    interchange(alpha, m, beta)
                },
            )
            .with_proposer(|movie, frames| propose_adjacent(movie, frames, false))
            .with_sampler(draw_interchange),
        );
        c.register(
            RelationSchema::new(
                "hcomp-expansion-order",
                vec![TwoMorphism, TwoMorphism],
                "α ∘ β = (1 ∘ β) · (α ∘ 1)",
                |a| {
                    let (alpha, beta) = (two(a, 0)?, two(a, 1)?);
                    let (sa, _) = alpha.typecheck()?;
                    let (_, tb) = beta.typecheck()?;
                    let lhs = alpha.clone().hcomp(beta.clone());
                    let rhs = TwoTerm::id2(sa)
                        .hcomp(beta.clone())
                        .vcomp(alpha.clone().hcomp(TwoTerm::id2(tb)));
                    Ok((lhs, rhs))
                },
            )
            .with_proposer(|movie, frames| propose_adjacent(movie, frames, true))
            .with_sampler(draw_hcomp_pair),
        );
        c
    }
}

fn kind_error(i: usize, want: ArgKind) -> Error {
    Error::KindMismatch {
        schema: String::new(),
        reason: format!("argument {i} should be a {want}"),
    }
}

fn obj(args: &[Arg], i: usize) -> Result<usize> {
    match args.get(i) {
        Some(Arg::Object(n)) => Ok(*n),
        _ => Err(kind_error(i, ArgKind::Object)),
    }
}

fn mor(args: &[Arg], i: usize) -> Result<MorTerm> {
    match args.get(i) {
        Some(Arg::Mor(m)) => Ok(m.clone()),
        _ => Err(kind_error(i, ArgKind::Morphism)),
    }
}

fn two(args: &[Arg], i: usize) -> Result<TwoTerm> {
    match args.get(i) {
        Some(Arg::Two(t)) => Ok(t.clone()),
        _ => Err(kind_error(i, ArgKind::TwoMorphism)),
    }
}

/// `γ · γ* = 1` (or `γ* · γ = 1` for the co-variant) for the 2-cell built from the arguments.
fn unitary(
    name: &str,
    kinds: Vec<ArgKind>,
    cell: &str,
    co: bool,
    make: impl Fn(&[Arg]) -> Result<TwoTerm> + Send + Sync + 'static,
) -> RelationSchema {
    let statement = if co {
        format!("{cell}* · {cell} = 1")
    } else {
        format!("{cell} · {cell}* = 1")
    };
    RelationSchema::new(name, kinds, &statement, move |args| {
        let gamma = make(args)?;
        let (s, t) = gamma.typecheck()?;
        if co {
            Ok((gamma.clone().dual2().vcomp(gamma), TwoTerm::id2(t)))
        } else {
            Ok((gamma.clone().vcomp(gamma.dual2()), TwoTerm::id2(s)))
        }
    })
}

/// `R~_{(A|B,C)}: (R_{A,B}⊗C)(B⊗R_{A,C}) ⇒ R_{A,B⊗C}`, available when both
/// sides have the same slice form (always for `A` of width at most 1).
fn rtilde_left(a: usize, b: usize, c: usize) -> Result<TwoTerm> {
    let split = MorTerm::whisker(0, braid_expand(a, b), c)
        .then(MorTerm::whisker(b, braid_expand(a, c), 0));
    if split.normalize()? != braid_expand(a, b + c).normalize()? {
        return Err(Error::KindMismatch {
            schema: "Rtilde-left-unitary".into(),
            reason: format!("R~ on ({a}|{b},{c}) is not an identity in slice form"),
        });
    }
    Ok(TwoTerm::id2(split))
}

/// `R~_{(A,B|C)}: (A⊗R_{B,C})(R_{A,C}⊗B) ⇒ R_{A⊗B,C}`, an identity in slice form.
fn rtilde_right(a: usize, b: usize, c: usize) -> Result<TwoTerm> {
    let split = MorTerm::whisker(a, braid_expand(b, c), 0)
        .then(MorTerm::whisker(0, braid_expand(a, c), b));
    if split.normalize()? != braid_expand(a + b, c).normalize()? {
        return Err(Error::KindMismatch {
            schema: "Rtilde-right-unitary".into(),
            reason: format!("R~ on ({a},{b}|{c}) is not an identity in slice form"),
        });
    }
    Ok(TwoTerm::id2(split))
}

fn triangulator_equation(n: usize) -> (TwoTerm, TwoTerm) {
    let i_a = unit_of_object(n);
    let e_a = counit_of_object(n);
    let t_a = triangulator_of_object(n);
    let first = TwoTerm::id2(i_a.clone()).hcomp(TwoTerm::whisker(
        n,
        t_a.adjoint().expect("triangulator is well typed"),
        0,
    ));
    let second = TwoTerm::tensorator(i_a.clone(), i_a.clone())
        .dual2()
        .hcomp(TwoTerm::id2(MorTerm::whisker(n, e_a, n)));
    let third = TwoTerm::id2(i_a.clone()).hcomp(TwoTerm::whisker(0, t_a, n));
    (first.vcomp(second).vcomp(third), TwoTerm::id2(i_a))
}

fn writhing_equation() -> (TwoTerm, TwoTerm) {
    let w = |l, f, r| MorTerm::whisker(l, f, r);
    let cap = MorTerm::cap;
    let cup = MorTerm::cup;
    let pos = MorTerm::pos;
    let neg = MorTerm::neg;
    let adj = |t: TwoTerm| t.adjoint().expect("writhing pieces are well typed");

    let l1 = adj(TwoTerm::triangulator());
    let l2 = TwoTerm::whisker(1, TwoTerm::writhe(), 0).hcomp(TwoTerm::id2(w(0, cup(), 1)));
    let l3 = TwoTerm::id2(w(1, cap().then(pos()), 0)).hcomp(adj(TwoTerm::braid_zf(cap())));
    let l4 = TwoTerm::id2(w(1, cap().then(pos()), 0))
        .hcomp(adj(TwoTerm::id2(braid_expand(1, 2))))
        .hcomp(TwoTerm::id2(w(1, cup(), 0)));
    let l5 = TwoTerm::whisker(
        1,
        TwoTerm::id2(cap()).hcomp(TwoTerm::unit2(pos()).dual2()),
        0,
    )
    .hcomp(TwoTerm::id2(w(0, neg(), 1).then(w(1, cup(), 0))));
    let lhs = l1.vcomp(l2).vcomp(l3).vcomp(l4).vcomp(l5);

    let r1 = TwoTerm::triangulator().dual2();
    let r2 = TwoTerm::id2(w(0, cap(), 1)).hcomp(TwoTerm::whisker(
        1,
        TwoTerm::unit2(pos()).hcomp(TwoTerm::id2(cup())),
        0,
    ));
    let r3 = TwoTerm::id2(w(0, cap(), 1)).hcomp(TwoTerm::whisker(
        1,
        TwoTerm::id2(pos()).hcomp(adj(TwoTerm::writhe())),
        0,
    ));
    let r4 = adj(TwoTerm::braid_fz(cup()))
        .dual2()
        .hcomp(TwoTerm::id2(w(1, pos().then(cup()), 0)));
    let r5 = TwoTerm::id2(w(1, cap(), 0))
        .hcomp(adj(TwoTerm::id2(braid_expand(2, 1))))
        .hcomp(TwoTerm::id2(w(1, pos().then(cup()), 0)));
    let r6 = TwoTerm::id2(w(1, cap(), 0).then(w(0, neg(), 1))).hcomp(TwoTerm::whisker(
        1,
        counit2(&pos()).expect("crossing is well typed").hcomp(TwoTerm::id2(cup())),
        0,
    ));
    let rhs = r1.vcomp(r2).vcomp(r3).vcomp(r4).vcomp(r5).vcomp(r6);
    (lhs, rhs)
}

fn interchange(alpha: TwoTerm, m: MorTerm, beta: TwoTerm) -> Result<(TwoTerm, TwoTerm)> {
    let (sa, ta) = alpha.typecheck()?;
    let (sb, tb) = beta.typecheck()?;
    let lhs = alpha
        .clone()
        .hcomp(TwoTerm::id2(m.clone()))
        .hcomp(TwoTerm::id2(sb.clone()))
        .vcomp(
            TwoTerm::id2(ta.clone())
                .hcomp(TwoTerm::id2(m.clone()))
                .hcomp(beta.clone()),
        );
    let rhs = TwoTerm::id2(sa)
        .hcomp(TwoTerm::id2(m.clone()))
        .hcomp(beta)
        .vcomp(alpha.hcomp(TwoTerm::id2(m)).hcomp(TwoTerm::id2(tb)));
    Ok((lhs, rhs))
}

fn unwhiskered(sheet: &Sheet) -> Sheet {
    Sheet {
        left: 0,
        right: 0,
        at: 0,
        ..sheet.clone()
    }
}

fn gen_term(g: MorGen, gap: usize) -> MorTerm {
    if gap == 0 {
        MorTerm::Gen(g)
    } else {
        MorTerm::whisker(0, MorTerm::Gen(g), gap)
    }
}

/// Tensorator arguments read off tensorator sheets and off adjacent slice
/// pairs that look like a tensorator source or target.
fn propose_tensor_pairs(movie: &Movie, frames: &[MorNormal]) -> Vec<Vec<Arg>> {
    let mut found = BTreeSet::new();
    for sheet in &movie.sheets {
        if let Cell::Tensor { f, gap, g } = sheet.cell {
            found.insert((f, gap, g));
        }
    }
    for frame in frames {
        for pair in frame.slices.windows(2) {
            let (s1, s2) = (pair[0], pair[1]);
            // source shape: g on the right first, then f on the left
            let (l, a) = (s2.left, s2.gen.source_width());
            if s1.left >= l + a {
                let gap = s1.left - l - a;
                if s2.right == gap + s1.gen.target_width() + s1.right {
                    found.insert((s2.gen, gap, s1.gen));
                }
            }
            // target shape: f on the left first, then g on the right
            let (l, a2) = (s1.left, s1.gen.target_width());
            if s2.left >= l + a2 {
                let gap = s2.left - l - a2;
                if s1.right == gap + s2.gen.source_width() + s2.right {
                    found.insert((s1.gen, gap, s2.gen));
                }
            }
        }
    }
    found
        .into_iter()
        .map(|(f, gap, g)| vec![Arg::Mor(gen_term(f, gap)), Arg::Mor(MorTerm::Gen(g))])
        .collect()
}

fn max_frame_width(frames: &[MorNormal]) -> usize {
    frames.iter().map(MorNormal::max_width).max().unwrap_or(0)
}

/// Single slices narrow enough for a braid cell to fit the movie's frames.
fn propose_braid_slices(_: &Movie, frames: &[MorNormal]) -> Vec<Vec<Arg>> {
    let w = max_frame_width(frames);
    if w < 3 {
        return Vec::new();
    }
    crate::enumerate::slices_up_to(w - 1)
        .into_iter()
        .map(|s| vec![Arg::Mor(s.to_term())])
        .collect()
}

/// Stripped frame segments of one or two slices, and their duals.
fn propose_segments(_: &Movie, frames: &[MorNormal]) -> Vec<Vec<Arg>> {
    let mut found = BTreeSet::new();
    for frame in frames {
        for len in 1..=2 {
            for start in 0..frame.len().saturating_sub(len - 1) {
                let (seg, _, _) = frame.segment(start, start + len).stripped();
                found.insert(seg.dual());
                found.insert(seg);
            }
        }
    }
    found
        .into_iter()
        .map(|f| vec![Arg::Mor(f.to_term())])
        .collect()
}

/// The unwhiskered cells of the movie, in both orientations.
fn propose_cells(movie: &Movie, _: &[MorNormal]) -> Vec<Vec<Arg>> {
    let mut found = BTreeSet::new();
    for sheet in &movie.sheets {
        let s = unwhiskered(sheet);
        found.insert(s.flip());
        found.insert(s);
    }
    found
        .into_iter()
        .map(|s| vec![Arg::Two(s.term())])
        .collect()
}

/// Arguments for interchange (or, with `adjacent_only`, for the expansion
/// order relation) from pairs of consecutive sheets acting side by side.
fn propose_adjacent(movie: &Movie, frames: &[MorNormal], adjacent_only: bool) -> Vec<Vec<Arg>> {
    let mut out = Vec::new();
    for (i, pair) in movie.sheets.windows(2).enumerate() {
        let (s1, s2) = (&pair[0], &pair[1]);
        let mid = &frames[i + 1];
        let t1 = (s1.at, s1.at + s1.target().len());
        let b2 = (s2.at, s2.at + s2.source().len());
        let (left, right, gap) = if t1.1 <= b2.0 {
            (s1, s2, (t1.1, b2.0))
        } else if b2.1 <= t1.0 {
            (s2, s1, (b2.1, t1.0))
        } else {
            continue;
        };
        if adjacent_only && gap.0 != gap.1 {
            continue;
        }
        let a = Arg::Two(left.term());
        let b = Arg::Two(right.term());
        if adjacent_only {
            out.push(vec![a, b]);
        } else {
            let m = mid.segment(gap.0, gap.1).to_term();
            out.push(vec![a, Arg::Mor(m), b]);
        }
    }
    out
}

fn draw_interchange(rng: &mut dyn RngCore, pool: ArgPool) -> Vec<Arg> {
    let a = random_sheet(rng, pool);
    let from = a.target().output();
    loop {
        let b = random_sheet(rng, pool);
        if (from + b.width()).is_multiple_of(2) {
            let m = random_morphism_between(rng, from, b.width());
            return vec![Arg::Two(a.term()), Arg::Mor(m), Arg::Two(b.term())];
        }
    }
}

fn draw_hcomp_pair(rng: &mut dyn RngCore, pool: ArgPool) -> Vec<Arg> {
    let a = random_sheet(rng, pool);
    let from = a.target().output();
    loop {
        let b = random_sheet(rng, pool);
        if b.width() == from {
            return vec![Arg::Two(a.term()), Arg::Two(b.term())];
        }
    }
}

use std::cell::RefCell;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::rc::Rc;

use super::catalog::Catalog;
use super::rewrite::{apply, matches, Direction, Rule, Site};
use crate::error::{Error, Result};
use crate::io::print::boundary_to_string;
use crate::movie::{normalize, Movie};
use crate::two::{two_boundary, TwoTerm};

/// One rewrite in a derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub rule: Rc<Rule>,
    pub site: Site,
    pub direction: Direction,
}

impl Step {
    pub fn inverse(&self) -> Step {
        Step {
            direction: self.direction.flip(),
            ..self.clone()
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} at {}", self.rule.label(), self.direction, self.site)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// A derivation from the first term to the second.
    Equal(Vec<Step>),
    /// No derivation within the bound.
    Unknown,
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal(_))
    }
}

/// Generates the one-step rewrites of a movie from a catalog, caching
/// compiled rules.
pub struct Rewriter<'a> {
    catalog: &'a Catalog,
    rules: RefCell<HashMap<String, Option<Rc<Rule>>>>,
}

impl<'a> Rewriter<'a> {
    pub fn new(catalog: &'a Catalog) -> Rewriter<'a> {
        Rewriter {
            catalog,
            rules: RefCell::new(HashMap::new()),
        }
    }

    /// Rules proposed by the catalog for this movie, skipping instances
    /// that fail to build and rules whose sides coincide.
    pub fn rules_for(&self, movie: &Movie) -> Vec<Rc<Rule>> {
        let frames = movie.frames();
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        for schema in self.catalog.schemas() {
            for args in schema.propose(movie, &frames) {
                let Ok(inst) = schema.instantiate(&args) else {
                    continue;
                };
                let key = inst.label();
                if !seen.insert(key.clone()) {
                    continue;
                }
                let rule = self
                    .rules
                    .borrow_mut()
                    .entry(key)
                    .or_insert_with(|| {
                        Rule::new(inst)
                            .ok()
                            .filter(|r| r.lhs != r.rhs)
                            .map(Rc::new)
                    })
                    .clone();
                out.extend(rule);
            }
        }
        out
    }

    /// All one-step rewrites of `movie`, in a fixed order.
    pub fn neighbors(&self, movie: &Movie) -> Vec<(Movie, Step)> {
        let frames = movie.frames();
        let mut out = Vec::new();
        for rule in self.rules_for(movie) {
            for direction in [Direction::LeftToRight, Direction::RightToLeft] {
                for site in matches(movie, &frames, &rule, direction) {
                    if let Ok(next) = apply(movie, &rule, site, direction) {
                        out.push((
                            next,
                            Step {
                                rule: rule.clone(),
                                site,
                                direction,
                            },
                        ));
                    }
                }
            }
        }
        out
    }
}

/// Replays a derivation.
pub fn replay(start: &Movie, steps: &[Step]) -> Result<Movie> {
    let mut movie = start.clone();
    for step in steps {
        movie = apply(&movie, &step.rule, step.site, step.direction)?;
    }
    Ok(movie)
}

fn check_parallel(a: &TwoTerm, b: &TwoTerm) -> Result<()> {
    let (sa, ta) = two_boundary(a)?;
    let (sb, tb) = two_boundary(b)?;
    if sa != sb || ta != tb {
        return Err(Error::NotParallel(format!(
            "{} => {} versus {} => {}",
            boundary_to_string(&sa),
            boundary_to_string(&ta),
            boundary_to_string(&sb),
            boundary_to_string(&tb)
        )));
    }
    Ok(())
}

type Parents = HashMap<Movie, Option<(Movie, Step)>>;

fn chain(parents: &Parents, end: &Movie) -> Vec<Step> {
    let mut steps = Vec::new();
    let mut node = end;
    while let Some(Some((prev, step))) = parents.get(node) {
        steps.push(step.clone());
        node = prev;
    }
    steps.reverse();
    steps
}

/// Searches for a derivation of `a = b` using at most `depth` rewrites.
///
/// Breadth-first from both ends, alternating sides, so a derivation of
/// length `d` is found after about `d/2` expansions on each side.
pub fn equivalent_bounded(a: &TwoTerm, b: &TwoTerm, depth: usize, catalog: &Catalog) -> Result<Verdict> {
    check_parallel(a, b)?;
    let start = normalize(a)?;
    let goal = normalize(b)?;
    if start == goal {
        return Ok(Verdict::Equal(Vec::new()));
    }
    let rewriter = Rewriter::new(catalog);
    let mut forward: Parents = HashMap::from([(start.clone(), None)]);
    let mut backward: Parents = HashMap::from([(goal.clone(), None)]);
    let mut front = vec![start];
    let mut back = vec![goal];
    for round in 0..depth {
        let from_start = round % 2 == 0;
        let (visited, other, layer) = if from_start {
            (&mut forward, &backward, &mut front)
        } else {
            (&mut backward, &forward, &mut back)
        };
        let mut next = Vec::new();
        let mut meet = None;
        'expand: for node in layer.iter() {
            for (movie, step) in rewriter.neighbors(node) {
                if visited.contains_key(&movie) {
                    continue;
                }
                visited.insert(movie.clone(), Some((node.clone(), step)));
                if other.contains_key(&movie) {
                    meet = Some(movie);
                    break 'expand;
                }
                next.push(movie);
            }
        }
        if let Some(m) = meet {
            let mut path = chain(&forward, &m);
            let tail = chain(&backward, &m);
            path.extend(tail.iter().rev().map(Step::inverse));
            return Ok(Verdict::Equal(path));
        }
        *layer = next;
        if front.is_empty() && back.is_empty() {
            break;
        }
    }
    Ok(Verdict::Unknown)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morphism::MorTerm;
    use crate::relations::Arg;

    fn check(a: &TwoTerm, b: &TwoTerm, depth: usize) -> Verdict {
        let c = Catalog::shipped();
        let v = equivalent_bounded(a, b, depth, &c).unwrap();
        if let Verdict::Equal(path) = &v {
            let end = replay(&normalize(a).unwrap(), path).unwrap();
            assert_eq!(end, normalize(b).unwrap());
        }
        v
    }

    #[test]
    fn identical_terms_need_no_steps() {
        let w = TwoTerm::writhe();
        assert_eq!(check(&w, &w, 0), Verdict::Equal(Vec::new()));
    }

    #[test]
    fn zigzag_sides_meet_in_one_step() {
        let c = Catalog::shipped();
        let inst = c
            .instantiate("zigzag-2cell", &[Arg::Mor(MorTerm::cap())])
            .unwrap();
        let v = check(&inst.lhs, &inst.rhs, 1);
        assert!(matches!(v, Verdict::Equal(ref p) if p.len() == 1));
    }

    #[test]
    fn adjoint_of_identity_on_cap() {
        let a = TwoTerm::id2(MorTerm::cap()).adjoint().unwrap();
        let b = TwoTerm::id2(MorTerm::cup());
        assert!(check(&a, &b, 1).is_equal());
    }

    #[test]
    fn not_parallel() {
        let w = TwoTerm::writhe();
        let c = Catalog::shipped();
        let err = equivalent_bounded(&w, &w.clone().dual2(), 2, &c).unwrap_err();
        assert!(matches!(err, Error::NotParallel(_)));
    }

    #[test]
    fn writhe_is_not_its_own_inverse_at_depth_zero() {
        let w = TwoTerm::writhe();
        let a = w.clone().vcomp(w.dual2());
        let b = TwoTerm::id2(MorTerm::cap());
        assert_eq!(check(&a, &b, 0), Verdict::Unknown);
        assert!(check(&a, &b, 1).is_equal());
    }
}

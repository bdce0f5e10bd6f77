//! Relations between 2-morphisms: schemas, rewriting, bounded search.

mod catalog;
mod rewrite;
mod sample;
mod search;

pub use catalog::{Arg, ArgKind, Catalog, RelationInstance, RelationSchema};
pub use rewrite::{apply, matches, rewrite_step, Direction, Rule, Site};
pub use sample::{
    random_morphism, random_morphism_between, random_morphism_from, random_sheet,
    random_two_morphism, sample_instances, ArgPool, SampleConfig,
};
pub use search::{equivalent_bounded, replay, Rewriter, Step, Verdict};

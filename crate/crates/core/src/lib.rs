pub mod enumerate;
pub mod error;
pub mod io;
pub mod models;
pub mod morphism;
pub mod movie;
pub mod relations;
pub mod two;

pub use error::{Error, Position, Result};
pub use morphism::{
    balancing, braid_expand, counit_of_object, unit_of_object, MorGen, MorNormal, MorTerm,
    ObjectExpr, Slice,
};
pub use movie::{normalize, Cell, Movie, Sheet};
pub use relations::{equivalent_bounded, Arg, Catalog, Direction, RelationInstance, Site, Verdict};
pub use two::{counit2, triangulator_of_object, TwoGen, TwoTerm};

//! Reading and writing terms, models, catalogs and reports.

pub mod catalog_file;
pub mod json;
pub mod model_file;
pub mod parse;
pub mod print;
pub mod render;

//! `.t2m` model files.
//!
//! ```text
//! # identity form on a 2-dimensional space
//! dim 2
//! form
//! 1 0
//! 0 1
//! ```
//!
//! An optional `crossing` section follows with `dim²` rows. Entries are
//! integers, fractions `p/q` or decimals.

use crate::error::{Error, Result};
use crate::models::{LinearModel, Matrix, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelFile {
    pub dim: usize,
    pub form: Vec<Vec<String>>,
    pub crossing: Option<Vec<Vec<String>>>,
    /// Line of each matrix row, for diagnostics.
    lines: Vec<usize>,
}

fn parse_error(line: usize, col: usize, expected: &str) -> Error {
    Error::Parse {
        line,
        col,
        expected: expected.into(),
    }
}

enum Section {
    None,
    Form,
    Crossing,
}

pub fn parse_model_file(text: &str) -> Result<ModelFile> {
    let mut dim = None;
    let mut form = Vec::new();
    let mut crossing: Option<Vec<Vec<String>>> = None;
    let mut section = Section::None;
    let mut lines = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let col = content.len() - content.trim_start().len() + 1;
        let words: Vec<&str> = content.split_whitespace().collect();
        match words.as_slice() {
            [] => continue,
            ["dim", n] => {
                let n = n
                    .parse::<usize>()
                    .ok()
                    .filter(|&n| n > 0)
                    .ok_or_else(|| parse_error(line_no, col + 4, "positive dimension"))?;
                dim = Some(n);
                section = Section::None;
            }
            ["form"] => section = Section::Form,
            ["crossing"] => {
                section = Section::Crossing;
                crossing = Some(Vec::new());
            }
            row => {
                let row: Vec<String> = row.iter().map(|s| s.to_string()).collect();
                match section {
                    Section::Form => form.push(row),
                    Section::Crossing => crossing.get_or_insert_with(Vec::new).push(row),
                    Section::None => {
                        return Err(parse_error(line_no, col, "`dim`, `form` or `crossing`"))
                    }
                }
                lines.push(line_no);
            }
        }
    }
    let dim = dim.ok_or_else(|| parse_error(1, 1, "`dim` line"))?;
    Ok(ModelFile {
        dim,
        form,
        crossing,
        lines,
    })
}

impl ModelFile {
    fn matrix<T: Scalar>(&self, rows: &[Vec<String>], first_line: usize, n: usize, what: &str) -> Result<Matrix<T>> {
        if rows.len() != n {
            return Err(Error::Model(format!("{what} needs {n} rows, found {}", rows.len())));
        }
        let mut parsed = Vec::with_capacity(n);
        for (k, row) in rows.iter().enumerate() {
            let line = self.lines.get(first_line + k).copied().unwrap_or(0);
            if row.len() != n {
                return Err(Error::Model(format!(
                    "{what} row on line {line} needs {n} entries, found {}",
                    row.len()
                )));
            }
            let mut values = Vec::with_capacity(n);
            for entry in row {
                values.push(
                    T::parse(entry)
                        .ok_or_else(|| Error::Model(format!("bad number `{entry}` on line {line}")))?,
                );
            }
            parsed.push(values);
        }
        Matrix::from_rows(parsed).ok_or_else(|| Error::Model(format!("{what} is not rectangular")))
    }

    pub fn build<T: Scalar>(&self) -> Result<LinearModel<T>> {
        let form = self.matrix(&self.form, 0, self.dim, "form")?;
        let crossing = match &self.crossing {
            Some(rows) => Some(self.matrix(rows, self.form.len(), self.dim * self.dim, "crossing")?),
            None => None,
        };
        LinearModel::new(self.dim, form, crossing)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigRational;

    #[test]
    fn identity_form() {
        let file = parse_model_file("# comment\ndim 2\nform\n1 0\n0 1\n").unwrap();
        let m: LinearModel<BigRational> = file.build().unwrap();
        assert_eq!(m.dim(), 2);
        assert_eq!(m.form(), &Matrix::identity(2));
    }

    #[test]
    fn fractions_and_crossing() {
        let text = "dim 1\nform\n1/2\ncrossing\n1\n";
        let m: LinearModel<BigRational> = parse_model_file(text).unwrap().build().unwrap();
        assert_eq!(m.copairing().data()[0], BigRational::from_i64(2));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse_model_file("form\n1\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_model_file("dim x\n"),
            Err(Error::Parse { line: 1, col: 5, .. })
        ));
        assert!(matches!(parse_model_file("1 2\n"), Err(Error::Parse { line: 1, .. })));
        let file = parse_model_file("dim 2\nform\n1 0\n").unwrap();
        assert!(matches!(file.build::<BigRational>(), Err(Error::Model(_))));
        let file = parse_model_file("dim 2\nform\n1 1\n1 1\n").unwrap();
        assert_eq!(file.build::<BigRational>().unwrap_err(), Error::SingularForm);
    }
}

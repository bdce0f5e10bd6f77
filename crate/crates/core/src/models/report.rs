use serde::{Serialize, Serializer};

use super::linear::{generator_two_cells, LinearModel};
use super::scalar::Scalar;
use crate::io::print::two_to_string;
use crate::relations::{sample_instances, Catalog, RelationInstance, SampleConfig};
use crate::two::TwoTerm;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportEntry {
    pub id: usize,
    pub relation: String,
    pub pass: bool,
    #[serde(serialize_with = "plain_number")]
    pub max_deviation: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Report {
    pub entries: Vec<ReportEntry>,
    pub summary: Summary,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn push(&mut self, entry: ReportEntry) {
        if entry.pass {
            self.summary.pass += 1;
        } else {
            self.summary.fail += 1;
        }
        self.entries.push(entry);
    }

    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0
    }
}

/// Integers print without a fractional part; non-finite values as strings.
fn plain_number<S: Serializer>(value: &f64, s: S) -> Result<S::Ok, S::Error> {
    if !value.is_finite() {
        s.serialize_str(&value.to_string())
    } else if value.fract() == 0.0 && value.abs() < 9.0e15 {
        s.serialize_i64(*value as i64)
    } else {
        s.serialize_f64(*value)
    }
}

/// Checks each instance in the model: both sides must have source and
/// target images that agree.
pub fn verify_model<T: Scalar>(model: &LinearModel<T>, instances: &[RelationInstance]) -> Report {
    let mut report = Report::default();
    for (id, inst) in instances.iter().enumerate() {
        report.push(check_instance(model, id, inst));
    }
    report
}

/// Samples instances of every schema and verifies them. Instances that
/// fail to build are reported as failures.
pub fn verify_catalog<T: Scalar>(
    model: &LinearModel<T>,
    catalog: &Catalog,
    config: SampleConfig,
) -> Report {
    let mut report = Report::default();
    for (id, (schema, inst)) in sample_instances(catalog, config).into_iter().enumerate() {
        report.push(match inst {
            Ok(inst) => check_instance(model, id, &inst),
            Err(e) => ReportEntry {
                id,
                relation: schema,
                pass: false,
                max_deviation: f64::INFINITY,
                error: Some(e.to_string()),
            },
        });
    }
    report
}

/// Every generator 2-cell, then sampled catalog instances, numbered in
/// that order.
pub fn verify_all<T: Scalar>(model: &LinearModel<T>, catalog: &Catalog, config: SampleConfig) -> Report {
    let mut report = Report::default();
    for alpha in generator_two_cells() {
        report.push(check_cell(model, report.entries.len(), &alpha));
    }
    let offset = report.entries.len();
    for mut entry in verify_catalog(model, catalog, config).entries {
        entry.id += offset;
        report.push(entry);
    }
    report
}

fn check_cell<T: Scalar>(model: &LinearModel<T>, id: usize, alpha: &TwoTerm) -> ReportEntry {
    let relation = format!("generator {}", two_to_string(alpha));
    match model.evaluate_two(alpha) {
        Ok(w) => ReportEntry {
            id,
            relation,
            pass: w.pass,
            max_deviation: w.max_deviation,
            error: None,
        },
        Err(e) => ReportEntry {
            id,
            relation,
            pass: false,
            max_deviation: f64::INFINITY,
            error: Some(e.to_string()),
        },
    }
}

fn check_instance<T: Scalar>(model: &LinearModel<T>, id: usize, inst: &RelationInstance) -> ReportEntry {
    match (model.evaluate_two(&inst.lhs), model.evaluate_two(&inst.rhs)) {
        (Ok(l), Ok(r)) => {
            let max_deviation = [
                l.max_deviation,
                r.max_deviation,
                l.source.max_deviation(&r.source),
                l.target.max_deviation(&r.target),
            ]
            .into_iter()
            .fold(0.0, f64::max);
            ReportEntry {
                id,
                relation: inst.label(),
                pass: max_deviation <= model.tolerance(),
                max_deviation,
                error: None,
            }
        }
        (Err(e), _) | (_, Err(e)) => ReportEntry {
            id,
            relation: inst.label(),
            pass: false,
            max_deviation: f64::INFINITY,
            error: Some(e.to_string()),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::Matrix;
    use crate::morphism::MorTerm;
    use crate::relations::Arg;
    use num::BigRational;

    #[test]
    fn empty_report() {
        let m = LinearModel::<BigRational>::new(2, Matrix::identity(2), None).unwrap();
        let r = verify_model(&m, &[]);
        assert!(r.entries.is_empty());
        assert_eq!(r.summary, Summary::default());
    }

    #[test]
    fn zigzag_instance_passes() {
        let m = LinearModel::<BigRational>::new(2, Matrix::identity(2), None).unwrap();
        let inst = Catalog::shipped()
            .instantiate("zigzag-2cell", &[Arg::Mor(MorTerm::pos())])
            .unwrap();
        let r = verify_model(&m, &[inst]);
        assert_eq!(r.summary, Summary { pass: 1, fail: 0 });
        assert_eq!(r.entries[0].max_deviation, 0.0);
    }
}

//! Linear models: `Z` goes to a `dim`-dimensional space, generators go to
//! matrices, and every 2-cell goes to an identity.
//!
//! Morphisms compose left to right while matrices act on column vectors, so
//! `F(f ; g) = F(g) · F(f)`. Tensor factors are ordered with the leftmost
//! strand most significant.

use super::matrix::Matrix;
use super::scalar::Scalar;
use crate::error::{Error, Result};
use crate::morphism::{MorGen, MorNormal, MorTerm};
use crate::movie::Cell;
use crate::two::{two_boundary, TwoTerm};

#[derive(Clone, Debug, PartialEq)]
pub struct LinearModel<T> {
    dim: usize,
    form: Matrix<T>,
    pair: Matrix<T>,
    copair: Matrix<T>,
    crossing: Matrix<T>,
    crossing_dual: Matrix<T>,
    tolerance: f64,
}

/// Comparison of the images of a 2-morphism's source and target.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness<T> {
    pub source: Matrix<T>,
    pub target: Matrix<T>,
    pub max_deviation: f64,
    pub pass: bool,
    /// For 2-morphisms `1_I ⇒ 1_I`: the image as a number.
    pub scalar: Option<T>,
}

/// The factor swap on `V ⊗ V`.
pub fn swap_matrix<T: Scalar>(dim: usize) -> Matrix<T> {
    let n = dim * dim;
    Matrix::from_fn(n, n, |r, c| {
        let (i, j) = (c / dim, c % dim);
        if r == j * dim + i {
            T::one()
        } else {
            T::zero()
        }
    })
}

impl<T: Scalar> LinearModel<T> {
    /// A model with pairing `cup ↦ form` and crossing image `crossing`
    /// (the factor swap when `None`). The copairing is the inverse form,
    /// which makes both zig-zag identities hold exactly.
    pub fn new(dim: usize, form: Matrix<T>, crossing: Option<Matrix<T>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Model("dimension must be positive".into()));
        }
        if form.rows() != dim || form.cols() != dim {
            return Err(Error::Model(format!("form must be {dim}x{dim}")));
        }
        let inverse = form.inverse().ok_or(Error::SingularForm)?;
        let n = dim * dim;
        let pair = Matrix::from_fn(1, n, |_, c| form.get(c / dim, c % dim).clone());
        let copair = Matrix::from_fn(n, 1, |r, _| inverse.get(r / dim, r % dim).clone());
        let crossing = match crossing {
            Some(x) if x.rows() != n || x.cols() != n => {
                return Err(Error::Model(format!("crossing must be {n}x{n}")));
            }
            Some(x) => x,
            None => swap_matrix(dim),
        };
        // the negative crossing is the crossing's adjoint for the form
        let gram = form.kron(&form);
        let gram_inv = gram.inverse().ok_or(Error::SingularForm)?;
        let crossing_dual = gram_inv.mul(&crossing.transpose()).mul(&gram);
        Ok(LinearModel {
            dim,
            form,
            pair,
            copair,
            crossing,
            crossing_dual,
            tolerance: 0.0,
        })
    }

    /// Deviation allowed when comparing matrices (zero by default).
    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn form(&self) -> &Matrix<T> {
        &self.form
    }

    pub fn copairing(&self) -> &Matrix<T> {
        &self.copair
    }

    pub fn pairing(&self) -> &Matrix<T> {
        &self.pair
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn generator(&self, g: MorGen) -> &Matrix<T> {
        match g {
            MorGen::Cap => &self.copair,
            MorGen::Cup => &self.pair,
            MorGen::Pos => &self.crossing,
            MorGen::Neg => &self.crossing_dual,
        }
    }

    fn power(&self, n: usize) -> usize {
        self.dim.pow(n as u32)
    }

    pub fn evaluate_normal(&self, f: &MorNormal) -> Matrix<T> {
        let mut m = Matrix::identity(self.power(f.input));
        for s in &f.slices {
            m = m.apply_local(self.generator(s.gen), self.power(s.left), self.power(s.right));
        }
        m
    }

    /// Matrix of shape `dim^target × dim^source`.
    pub fn evaluate_morphism(&self, f: &MorTerm) -> Result<Matrix<T>> {
        Ok(self.evaluate_normal(&f.normalize()?))
    }

    pub fn evaluate_two(&self, alpha: &TwoTerm) -> Result<Witness<T>> {
        let (s, t) = two_boundary(alpha)?;
        Ok(self.witness(&s, &t))
    }

    pub fn witness(&self, s: &MorNormal, t: &MorNormal) -> Witness<T> {
        let source = self.evaluate_normal(s);
        let target = self.evaluate_normal(t);
        let max_deviation = source.max_deviation(&target);
        let pass = max_deviation <= self.tolerance;
        let closed = s.input == 0 && s.output() == 0 && s.is_empty() && t.is_empty();
        Witness {
            source,
            target,
            max_deviation,
            pass,
            scalar: closed.then(T::one),
        }
    }

    /// Largest deviation of the two zig-zag composites from the identity.
    pub fn zigzag_deviation(&self) -> f64 {
        let id = Matrix::identity(self.dim);
        let snakes = [
            [(0, MorGen::Cap, 1), (1, MorGen::Cup, 0)],
            [(1, MorGen::Cap, 0), (0, MorGen::Cup, 1)],
        ];
        snakes
            .iter()
            .map(|slices| {
                let f = MorNormal::from_slices(
                    1,
                    slices
                        .iter()
                        .map(|&(l, g, r)| crate::morphism::Slice::new(l, g, r))
                        .collect(),
                )
                .expect("zig-zag is well formed");
                self.evaluate_normal(&f).max_deviation(&id)
            })
            .fold(0.0, f64::max)
    }
}

/// Every generator 2-cell: tensorators and braid cells on generators, the
/// units and counits, the triangulator and the writhe.
pub fn generator_two_cells() -> Vec<TwoTerm> {
    let mut out = Vec::new();
    for f in MorGen::ALL {
        for g in MorGen::ALL {
            out.push(Cell::Tensor { f, gap: 0, g }.to_term());
        }
    }
    for g in MorGen::ALL {
        let s = crate::morphism::Slice::new(0, g, 0);
        out.push(Cell::BraidZf(s).to_term());
        out.push(Cell::BraidfZ(s).to_term());
    }
    for g in MorGen::ALL {
        out.push(TwoTerm::unit2(MorTerm::Gen(g)));
        out.push(crate::two::counit2(&MorTerm::Gen(g)).expect("generator is well typed"));
    }
    out.push(TwoTerm::triangulator());
    out.push(TwoTerm::writhe());
    out
}

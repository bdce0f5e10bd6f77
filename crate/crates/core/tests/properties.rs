mod common;

use num::BigRational;
use proptest::prelude::*;

use common::{continuation, morphism, random_movie, two_term, Choices};
use twotangle::io::parse::{parse_morphism, parse_two};
use twotangle::io::print::{mor_to_string, two_to_string};
use twotangle::models::{LinearModel, Matrix, Scalar};
use twotangle::movie::normalize;
use twotangle::relations::{apply, equivalent_bounded, replay, Rewriter};
use twotangle::{Catalog, MorTerm, ObjectExpr};

type Q = BigRational;

fn bytes() -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(any::<u8>(), 0..64)
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

fn power(m: &Matrix<Q>, n: usize) -> Matrix<Q> {
    (0..n).fold(Matrix::identity(1), |acc, _| acc.kron(m))
}

fn symmetric_model() -> impl Strategy<Value = LinearModel<Q>> {
    (1usize..=2, prop::collection::vec(-2i64..=2, 3)).prop_filter_map("singular", |(dim, v)| {
        let form = if dim == 1 {
            Matrix::from_rows(vec![vec![Q::from_i64(v[0])]])?
        } else {
            Matrix::from_rows(vec![
                vec![Q::from_i64(v[0]), Q::from_i64(v[1])],
                vec![Q::from_i64(v[1]), Q::from_i64(v[2])],
            ])?
        };
        LinearModel::new(dim, form, None).ok()
    })
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn object_dual_is_an_involution(n in 0usize..16) {
        let x = ObjectExpr(n);
        prop_assert_eq!(x.dual().dual(), x);
    }

    #[test]
    fn morphism_dual_is_an_involution(b in bytes()) {
        let f = morphism(&mut Choices::new(&b));
        prop_assert_eq!(f.dual().unwrap().dual().unwrap().normalize().unwrap(), f.normalize().unwrap());
    }

    #[test]
    fn morphism_dual_reverses_composites(b in bytes()) {
        let mut c = Choices::new(&b);
        let f = morphism(&mut c);
        let n = f.normalize().unwrap();
        let len = c.pick(4);
        let g = common::normal_from(&mut c, n.output(), len).to_term();
        let lhs = f.clone().then(g.clone()).dual().unwrap();
        let rhs = g.dual().unwrap().then(f.dual().unwrap());
        prop_assert_eq!(lhs.normalize().unwrap(), rhs.normalize().unwrap());
    }

    #[test]
    fn two_dual_is_an_involution(b in bytes()) {
        let a = two_term(&mut Choices::new(&b), 2);
        let once = a.dual().unwrap();
        prop_assert_eq!(normalize(&once.dual().unwrap()).unwrap(), normalize(&a).unwrap());
        prop_assert_eq!(normalize(&a.clone().dual2().dual2()).unwrap(), normalize(&a).unwrap());
    }

    #[test]
    fn two_dual_reverses_vertical_composites(b in bytes()) {
        let mut c = Choices::new(&b);
        let a = two_term(&mut c, 2);
        let next = continuation(&mut c, &a);
        let lhs = a.clone().vcomp(next.clone()).dual().unwrap();
        let rhs = next.dual().unwrap().vcomp(a.dual().unwrap());
        prop_assert_eq!(normalize(&lhs).unwrap(), normalize(&rhs).unwrap());
    }

    #[test]
    fn movie_dual_reverses_the_movie(b in bytes()) {
        let a = two_term(&mut Choices::new(&b), 2);
        let m = normalize(&a).unwrap();
        let d = normalize(&a.dual().unwrap()).unwrap();
        prop_assert_eq!(&d, &normalize(&a.clone().dual2()).unwrap());
        let rev = m.dual();
        prop_assert_eq!(&d.source, &rev.source);
        prop_assert_eq!(d.target(), rev.target());
        prop_assert_eq!(d.len(), rev.len());
    }

    #[test]
    fn morphisms_round_trip_through_text(b in bytes()) {
        let f = morphism(&mut Choices::new(&b));
        let back = parse_morphism(&mor_to_string(&f)).unwrap();
        prop_assert_eq!(back.normalize().unwrap(), f.normalize().unwrap());
    }

    #[test]
    fn two_morphisms_round_trip_through_text(b in bytes()) {
        let a = two_term(&mut Choices::new(&b), 3);
        let text = two_to_string(&a);
        let back = parse_two(&text).unwrap();
        prop_assert_eq!(normalize(&back).unwrap(), normalize(&a).unwrap(), "{}", text);
    }
}

proptest! {
    #![proptest_config(config(40))]

    #[test]
    fn rewrites_preserve_boundaries_and_invert(b in bytes()) {
        let m = random_movie(&mut Choices::new(&b));
        let catalog = Catalog::shipped();
        let rewriter = Rewriter::new(&catalog);
        for (next, step) in rewriter.neighbors(&m) {
            prop_assert_eq!(&next.source, &m.source);
            prop_assert_eq!(next.target(), m.target());
            let back = apply(&next, &step.rule, step.site, step.direction.flip()).unwrap();
            prop_assert_eq!(&back, &m, "{}", step);
        }
    }

    #[test]
    fn search_is_symmetric_and_monotone(b in bytes(), walk in 0usize..3) {
        let mut c = Choices::new(&b);
        let start = random_movie(&mut c);
        let catalog = Catalog::shipped();
        let rewriter = Rewriter::new(&catalog);
        let mut end = start.clone();
        for _ in 0..walk {
            let n = rewriter.neighbors(&end);
            if n.is_empty() {
                break;
            }
            end = n[c.pick(n.len())].0.clone();
        }
        let (x, y) = (start.to_term(), end.to_term());
        let forward = equivalent_bounded(&x, &y, walk, &catalog).unwrap();
        let backward = equivalent_bounded(&y, &x, walk, &catalog).unwrap();
        prop_assert!(forward.is_equal());
        prop_assert_eq!(forward.is_equal(), backward.is_equal());
        prop_assert!(equivalent_bounded(&x, &y, walk + 1, &catalog).unwrap().is_equal());
        if let twotangle::Verdict::Equal(path) = forward {
            prop_assert!(path.len() <= walk);
            prop_assert_eq!(replay(&start, &path).unwrap(), end);
        }
    }

    #[test]
    fn evaluation_is_functorial(model in symmetric_model(), b in bytes()) {
        let mut c = Choices::new(&b);
        let f = morphism(&mut c);
        let n = f.normalize().unwrap();
        let len = c.pick(3);
        let g = common::normal_from(&mut c, n.output(), len).to_term();
        let whole = model.evaluate_morphism(&f.clone().then(g.clone())).unwrap();
        let parts = model.evaluate_morphism(&g).unwrap().mul(&model.evaluate_morphism(&f).unwrap());
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn evaluation_is_monoidal(model in symmetric_model(), b in bytes(), l in 0usize..2, r in 0usize..2) {
        let f = morphism(&mut Choices::new(&b));
        let v = Matrix::<Q>::identity(model.dim());
        let expected = power(&v, l).kron(&model.evaluate_morphism(&f).unwrap()).kron(&power(&v, r));
        prop_assert_eq!(model.evaluate_morphism(&MorTerm::whisker(l, f, r)).unwrap(), expected);
    }

    #[test]
    fn symmetric_forms_respect_duals(model in symmetric_model(), b in bytes()) {
        let f = morphism(&mut Choices::new(&b));
        let n = f.normalize().unwrap();
        let form = model.form().clone();
        let (bin, bout) = (power(&form, n.input), power(&form, n.output()));
        let expected = bin.inverse().unwrap().mul(&model.evaluate_morphism(&f).unwrap().transpose()).mul(&bout);
        prop_assert_eq!(model.evaluate_morphism(&f.dual().unwrap()).unwrap(), expected);
    }

    #[test]
    fn two_cells_evaluate_to_parallel_images(model in symmetric_model(), b in bytes()) {
        let a = two_term(&mut Choices::new(&b), 2);
        let w = model.evaluate_two(&a).unwrap();
        let (s, t) = a.typecheck().unwrap();
        prop_assert_eq!(w.source, model.evaluate_morphism(&s).unwrap());
        prop_assert_eq!(w.target, model.evaluate_morphism(&t).unwrap());
    }
}

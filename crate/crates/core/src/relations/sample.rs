use std::sync::OnceLock;

use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::catalog::{Catalog, RelationInstance};
use crate::enumerate::{elementary_cells, single_sheets};
use crate::error::Result;
use crate::morphism::{MorGen, MorNormal, MorTerm, Slice};
use crate::movie::Sheet;
use crate::two::TwoTerm;

const MAX_WIDTH: usize = 4;

/// Where random schema arguments come from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ArgPool {
    /// Whiskered composites of up to three slices and small 2-cell composites.
    #[default]
    Composites,
    /// Bare generators: `cap`, `cup`, `pos`, `neg` and unwhiskered elementary cells.
    Generators,
}

#[derive(Clone, Copy, Debug)]
pub struct SampleConfig {
    pub seed: u64,
    pub per_schema: usize,
    pub pool: ArgPool,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            seed: 0,
            per_schema: 100,
            pool: ArgPool::Composites,
        }
    }
}

/// Random instances of every schema in the catalog, in catalog order,
/// each paired with its schema name.
pub fn sample_instances(
    catalog: &Catalog,
    config: SampleConfig,
) -> Vec<(String, Result<RelationInstance>)> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut out = Vec::new();
    for schema in catalog.schemas() {
        for _ in 0..config.per_schema {
            let args = schema.draw(&mut rng, config.pool);
            out.push((schema.name.clone(), schema.instantiate(&args)));
        }
    }
    out
}

fn pick_slice(rng: &mut dyn RngCore, width: usize) -> Option<Slice> {
    let options: Vec<MorGen> = MorGen::ALL
        .into_iter()
        .filter(|g| {
            g.source_width() <= width && width - g.source_width() + g.target_width() <= MAX_WIDTH
        })
        .collect();
    let gen = *options.choose(rng)?;
    let left = rng.gen_range(0..=width - gen.source_width());
    Some(Slice::new(left, gen, width - gen.source_width() - left))
}

/// A random morphism of 1 to `max_len` slices, at most four strands wide,
/// or a bare generator.
pub fn random_morphism(rng: &mut dyn RngCore, max_len: usize, pool: ArgPool) -> MorTerm {
    if pool == ArgPool::Generators {
        return MorTerm::Gen(*MorGen::ALL.choose(rng).expect("nonempty"));
    }
    let from = rng.gen_range(0..=2);
    let len = rng.gen_range(1..=max_len.max(1));
    random_morphism_from(rng, from, len)
}

pub fn random_morphism_from(rng: &mut dyn RngCore, from: usize, len: usize) -> MorTerm {
    let mut width = from;
    let mut slices = Vec::with_capacity(len);
    for _ in 0..len {
        if let Some(s) = pick_slice(rng, width) {
            width = s.output_width();
            slices.push(s);
        }
    }
    MorNormal { input: from, slices }.to_term()
}

/// A random morphism `Z^from → Z^to`; the widths must have equal parity.
pub fn random_morphism_between(rng: &mut dyn RngCore, from: usize, to: usize) -> MorTerm {
    assert_eq!(from % 2, to % 2, "widths of different parity");
    let mut width = from;
    let mut slices = Vec::new();
    if width >= 2 {
        for _ in 0..rng.gen_range(0..=2) {
            let gen = if rng.gen() { MorGen::Pos } else { MorGen::Neg };
            let left = rng.gen_range(0..=width - 2);
            slices.push(Slice::new(left, gen, width - 2 - left));
        }
    }
    while width != to {
        if width < to {
            let left = rng.gen_range(0..=width);
            slices.push(Slice::new(left, MorGen::Cap, width - left));
            width += 2;
        } else {
            let left = rng.gen_range(0..=width - 2);
            slices.push(Slice::new(left, MorGen::Cup, width - 2 - left));
            width -= 2;
        }
    }
    MorNormal { input: from, slices }.to_term()
}

fn sheets(pool: ArgPool) -> &'static [Sheet] {
    static WHISKERED: OnceLock<Vec<Sheet>> = OnceLock::new();
    static BARE: OnceLock<Vec<Sheet>> = OnceLock::new();
    match pool {
        ArgPool::Composites => WHISKERED.get_or_init(|| single_sheets(3)),
        ArgPool::Generators => BARE.get_or_init(|| {
            elementary_cells(3)
                .into_iter()
                .flat_map(|c| {
                    let s = Sheet::new(c);
                    [s.clone(), s.flip()]
                })
                .collect()
        }),
    }
}

/// A random elementary cell at most three strands wide; whiskered and
/// possibly flipped for the composite pool.
pub fn random_sheet(rng: &mut dyn RngCore, pool: ArgPool) -> Sheet {
    sheets(pool).choose(rng).expect("nonempty").clone()
}

/// A random 2-morphism built from one or two elementary cells. The
/// generator pool returns a single cell.
pub fn random_two_morphism(rng: &mut dyn RngCore, pool: ArgPool) -> TwoTerm {
    let sheet = random_sheet(rng, pool);
    let alpha = sheet.term();
    if pool == ArgPool::Generators {
        return alpha;
    }
    match rng.gen_range(0..4) {
        0 => alpha,
        1 => alpha.dual2(),
        2 => alpha.clone().vcomp(alpha.dual2()),
        _ => {
            let width = sheet.target().output();
            let len = rng.gen_range(1..=2);
            alpha.hcomp(TwoTerm::id2(random_morphism_from(rng, width, len)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_terms_typecheck() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            for pool in [ArgPool::Composites, ArgPool::Generators] {
                random_morphism(&mut rng, 3, pool).typecheck().unwrap();
                random_two_morphism(&mut rng, pool).typecheck().unwrap();
            }
            let (a, b) = (rng.gen_range(0..4), rng.gen_range(0..3) * 2);
            let m = random_morphism_between(&mut rng, a, a % 2 + b);
            assert_eq!(m.source().unwrap().width(), a);
            assert_eq!(m.target().unwrap().width(), a % 2 + b);
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let c = Catalog::shipped();
        let cfg = SampleConfig {
            seed: 3,
            per_schema: 2,
            pool: ArgPool::Composites,
        };
        assert_eq!(sample_instances(&c, cfg), sample_instances(&c, cfg));
    }
}

//! Seeded random color-shifted balanced complexes.
//!
//! Instances are built from a random family of rainbow generator faces
//! (always at least one of full rainbow size, so the result is balanced),
//! closed under within-class index decreases and then under inclusion. The
//! closure argument is generator-wise, so the resulting complex is
//! color-shifted by construction; the property is still asserted.

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::colored::ColoredComplex;
use crate::complex::{Complex, Face, Vertex};

/// Parameters of the randomized balanced corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BalancedConfig {
    pub count: usize,
    pub seed: u64,
    pub d_max: u32,
    pub lambda_max: u32,
}

impl Default for BalancedConfig {
    fn default() -> Self {
        BalancedConfig {
            count: 200,
            seed: 1,
            d_max: 4,
            lambda_max: 3,
        }
    }
}

/// Deterministic instance `index` of the corpus with the given seed.
pub fn random_color_shifted(cfg: &BalancedConfig, index: u64) -> ColoredComplex {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let d = rng.gen_range(1..=cfg.d_max);
    let lambda: Vec<u32> = (0..d).map(|_| rng.gen_range(1..=cfg.lambda_max)).collect();

    let random_rainbow = |rng: &mut ChaCha8Rng, classes: &[u32]| -> Face {
        let verts: Vec<Vertex> = classes
            .iter()
            .map(|&i| Vertex::colored(i, rng.gen_range(1..=lambda[(i - 1) as usize])))
            .collect();
        Face::new(verts).expect("one vertex per class")
    };

    let all_classes: Vec<u32> = (1..=d).collect();
    let mut generators: BTreeSet<Face> = BTreeSet::new();
    let n_top = rng.gen_range(1..=6usize);
    for _ in 0..n_top {
        generators.insert(random_rainbow(&mut rng, &all_classes));
    }
    // Monotone perturbations: extra lower-dimensional rainbow generators that
    // keep the complex non-pure some of the time.
    if d >= 2 {
        let extras = rng.gen_range(0..=3usize);
        for _ in 0..extras {
            let k = rng.gen_range(1..d) as usize;
            let mut classes = all_classes.clone();
            for i in (1..classes.len()).rev() {
                classes.swap(i, rng.gen_range(0..=i));
            }
            classes.truncate(k);
            classes.sort_unstable();
            generators.insert(random_rainbow(&mut rng, &classes));
        }
    }

    // Close the generator family under index decreases.
    let mut frontier: Vec<Face> = generators.iter().cloned().collect();
    while let Some(f) = frontier.pop() {
        for v in f.vertices().to_vec() {
            let Vertex::Colored { color, index } = v else { unreachable!() };
            for j in 1..index {
                let g = f.without(v).with(Vertex::colored(color, j));
                if generators.insert(g.clone()) {
                    frontier.push(g);
                }
            }
        }
    }

    let complex = Complex::generate(generators.into_iter().collect())
        .expect("generator family is non-empty");
    let cc = ColoredComplex::new(d, complex).expect("rainbow faces respect the coloring");
    debug_assert!(cc.is_balanced());
    debug_assert!(cc.is_color_shifted());
    cc
}

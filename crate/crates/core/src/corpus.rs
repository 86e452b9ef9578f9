//! Seeded random inputs for verification suites, property tests, and
//! benchmarks. Everything is deterministic in the provided generator.

use crate::model::{Arrow, Generator, MonomialPresentation, WeightedQuiver, Word};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

const LETTERS: [&str; 3] = ["x", "y", "z"];

/// A presentation on up to three letters with up to four forbidden words of
/// length at most four. Half of the draws are generated in degree one.
pub fn random_presentation(rng: &mut ChaCha8Rng) -> MonomialPresentation {
    let n = rng.random_range(1..=3);
    let degree_one = rng.random_bool(0.5);
    let generators: Vec<Generator> = (0..n)
        .map(|i| Generator {
            name: LETTERS[i].into(),
            degree: if degree_one { 1 } else { rng.random_range(1..=3) },
        })
        .collect();
    let words = rng.random_range(0..=4);
    let forbidden: Vec<Word> = (0..words)
        .map(|_| {
            let len = rng.random_range(1..=4);
            Word((0..len).map(|_| rng.random_range(0..n)).collect())
        })
        .collect();
    MonomialPresentation::new(generators, forbidden).expect("generated presentation is valid")
}

/// A weighted quiver with up to four vertices and five arrows, degrees up to
/// three. With `ensure_heavy` the quiver keeps at least one arrow of degree
/// greater than one, so it can be split.
pub fn random_weighted_quiver(rng: &mut ChaCha8Rng, ensure_heavy: bool) -> WeightedQuiver {
    let nv = rng.random_range(1..=4);
    let vertices: Vec<String> = (0..nv).map(|i| format!("v{}", i + 1)).collect();
    let na = rng.random_range(1..=5);
    let mut arrows: Vec<Arrow> = (0..na)
        .map(|i| Arrow {
            name: format!("a{}", i + 1),
            source: vertices[rng.random_range(0..nv)].clone(),
            target: vertices[rng.random_range(0..nv)].clone(),
            degree: rng.random_range(1..=3),
        })
        .collect();
    if ensure_heavy && arrows.iter().all(|a| a.degree == 1) {
        let i = rng.random_range(0..arrows.len());
        arrows[i].degree = rng.random_range(2..=3);
    }
    WeightedQuiver::new(vertices, arrows).expect("generated quiver is valid")
}

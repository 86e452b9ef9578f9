//! Cross-checks of the factor automaton against brute force: naive factor
//! scans, exhaustive word enumeration, and degree counting by filtering.

use num_bigint::BigUint;
use pathalg_core::corpus::random_presentation;
use pathalg_core::words::FactorAutomaton;
use pathalg_core::{parse_input, AlgebraInput, MonomialPresentation, Word, DEFAULT_ENUM_BUDGET};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn presentation(json: &str) -> MonomialPresentation {
    match parse_input(json.as_bytes()).unwrap() {
        AlgebraInput::Presentation(p) => p,
        _ => panic!("expected presentation"),
    }
}

fn ex42() -> MonomialPresentation {
    presentation(
        r#"{"kind":"monomial","generators":[{"name":"x","degree":1},{"name":"y","degree":1},{"name":"z","degree":1}],"forbidden":["xx","yx","zy","xz","zz","yyyy"]}"#,
    )
}

fn ex48() -> MonomialPresentation {
    presentation(
        r#"{"kind":"monomial","generators":[{"name":"x","degree":1},{"name":"y","degree":2}],"forbidden":["yx","xxx"]}"#,
    )
}

/// Independent legality oracle: scan every window of every forbidden word.
fn legal_by_scan(p: &MonomialPresentation, w: &Word) -> bool {
    !p.forbidden().iter().any(|f| w.contains_factor(f))
}

/// All words of length n over the alphabet, lexicographic.
fn all_words(alphabet: usize, n: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..alphabet).map(move |c| {
                    let mut letters = w.0.clone();
                    letters.push(c);
                    Word(letters)
                })
            })
            .collect();
    }
    out
}

#[test]
fn enumeration_is_exhaustive_and_sound_up_to_length_8() {
    let mut presentations = vec![ex42(), ex48()];
    for seed in 0..10 {
        presentations.push(random_presentation(&mut ChaCha8Rng::seed_from_u64(seed)));
    }
    for p in &presentations {
        let automaton = FactorAutomaton::new(p);
        for n in 0..=8usize {
            let listed = automaton.enumerate_by_length(n, DEFAULT_ENUM_BUDGET).unwrap();
            // Lexicographic and duplicate-free.
            assert!(listed.windows(2).all(|w| w[0] < w[1]));
            let expected: Vec<Word> = all_words(p.alphabet_size(), n)
                .into_iter()
                .filter(|w| legal_by_scan(p, w))
                .collect();
            assert_eq!(listed, expected, "length {n}");
            assert_eq!(BigUint::from(expected.len()), automaton.count_by_length(n));
        }
    }
}

#[test]
fn automaton_agrees_with_naive_scan_on_random_words() {
    for seed in 0..50u64 {
        let p = random_presentation(&mut ChaCha8Rng::seed_from_u64(seed));
        let automaton = FactorAutomaton::new(&p);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        for _ in 0..10_000 {
            let len = rng.random_range(0..=10);
            let w = Word((0..len).map(|_| rng.random_range(0..p.alphabet_size())).collect());
            assert_eq!(automaton.is_legal(&w), legal_by_scan(&p, &w));
        }
    }
}

#[test]
fn sample_word_legality_matches_the_scan() {
    let p = ex42();
    let automaton = FactorAutomaton::new(&p);
    for (text, expect) in [
        ("zxyzx", true), // every length-4 window is a graph arrow
        ("zxyyyzxyz", true),
        ("xyyyyz", false), // contains y⁴
        ("zxz", false),    // contains xz
        ("", true),
    ] {
        let w = p.parse_word_text(text, "w").unwrap();
        assert_eq!(legal_by_scan(&p, &w), expect, "oracle on {text:?}");
        assert_eq!(automaton.is_legal(&w), expect, "automaton on {text:?}");
    }
}

#[test]
fn degree_series_matches_enumeration_with_filtering() {
    // The degree-indexed counts must agree with enumerating every length and
    // tallying by degree (degree ≥ length bounds the lengths to scan).
    let mut presentations = vec![ex42(), ex48()];
    for seed in 20..30 {
        presentations.push(random_presentation(&mut ChaCha8Rng::seed_from_u64(seed)));
    }
    for p in &presentations {
        let automaton = FactorAutomaton::new(p);
        let n = 7usize;
        let series = automaton.count_by_degree(n);
        let mut tally = vec![BigUint::default(); n + 1];
        for len in 0..=n {
            for w in automaton.enumerate_by_length(len, DEFAULT_ENUM_BUDGET).unwrap() {
                let d = p.word_degree(&w) as usize;
                if d <= n {
                    tally[d] += BigUint::from(1u32);
                }
            }
        }
        assert_eq!(series.coeffs, tally);
        assert_eq!(series.coeffs[0], BigUint::from(1u32), "the empty word is legal");
    }
}

#[test]
fn degree_counts_collapse_to_length_counts_in_degree_one() {
    for seed in 0..20u64 {
        let p = random_presentation(&mut ChaCha8Rng::seed_from_u64(seed));
        if !p.all_degrees_one() {
            continue;
        }
        let automaton = FactorAutomaton::new(&p);
        let series = automaton.count_by_degree(8);
        for (n, coeff) in series.coeffs.iter().enumerate() {
            assert_eq!(*coeff, automaton.count_by_length(n));
        }
    }
}

#[test]
fn reduction_never_changes_legality() {
    // Exhaustive over all words of length ≤ 6 for every corpus presentation.
    for seed in 0..25u64 {
        let p = random_presentation(&mut ChaCha8Rng::seed_from_u64(seed));
        let reduced = pathalg_core::reduce_forbidden(&p);
        assert!(reduced.forbidden().len() <= p.forbidden().len());
        // Idempotent.
        assert_eq!(pathalg_core::reduce_forbidden(&reduced), reduced);
        let before = FactorAutomaton::new(&p);
        let after = FactorAutomaton::new(&reduced);
        for n in 0..=6usize {
            for w in all_words(p.alphabet_size(), n) {
                assert_eq!(before.is_legal(&w), after.is_legal(&w));
            }
        }
    }
}

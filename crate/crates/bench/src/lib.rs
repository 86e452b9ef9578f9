//! Shared fixtures for the criterion benchmarks.

use pathalg_core::{parse_input, AlgebraInput, MonomialPresentation};

/// Three letters with six short forbidden words; the graph has six vertices.
pub fn three_letter_presentation() -> MonomialPresentation {
    let input = parse_input(
        br#"{"kind":"monomial","generators":[{"name":"x","degree":1},{"name":"y","degree":1},{"name":"z","degree":1}],"forbidden":["xx","yx","zy","xz","zz","yyyy"]}"#,
    )
    .expect("fixture parses");
    match input {
        AlgebraInput::Presentation(p) => p,
        _ => unreachable!("fixture is a presentation"),
    }
}

/// Two letters in degrees one and two; the graph carries a degree-2 loop.
pub fn weighted_presentation() -> MonomialPresentation {
    let input = parse_input(
        br#"{"kind":"monomial","generators":[{"name":"x","degree":1},{"name":"y","degree":2}],"forbidden":["yx","xxx"]}"#,
    )
    .expect("fixture parses");
    match input {
        AlgebraInput::Presentation(p) => p,
        _ => unreachable!("fixture is a presentation"),
    }
}

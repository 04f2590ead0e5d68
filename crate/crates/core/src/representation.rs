//! The action of the monoid on the free group `F_∞` by injective endomorphisms.
//!
//! Generators act by
//!
//! ```text
//! s_i:    e_i -> e_{i-1} e_i^-1 e_{i+1}      e_j -> e_j (j != i)
//! s_i^-1: e_i -> e_{i+1} e_i^-1 e_{i-1}      e_j -> e_j (j != i)
//! x_i:    e_j -> e_{j+1} (j >= i)            e_j -> e_j (j < i)
//! ```
//!
//! with `e_0` read as the identity. A word acts with its rightmost letter first,
//! `(uv)(w) = u(v(w))`; this is the only convention under which relations (1) and (3)
//! hold. The action is faithful, so equality of images decides equality of elements.

use std::cmp::Ordering;

use crate::error::Result;
use crate::freegroup::{FLetter, FWord};
use crate::word::{Generator, Kind, RWord};

/// Image of the basis element `e_j` under a single generator.
pub fn generator_image(g: Generator, j: u32) -> FWord {
    let i = g.index();
    match g.kind() {
        Kind::Sigma if j == i => {
            FWord::reduce([FLetter::pos(i - 1), FLetter::neg(i), FLetter::pos(i + 1)])
        }
        Kind::SigmaInv if j == i => {
            FWord::reduce([FLetter::pos(i + 1), FLetter::neg(i), FLetter::pos(i - 1)])
        }
        Kind::X if j >= i => FWord::generator(j + 1),
        _ => FWord::generator(j),
    }
}

pub fn apply_gen(g: Generator, w: &FWord) -> FWord {
    w.substitute(|j| generator_image(g, j))
}

/// Applies `word` to `u`, rightmost letter first.
pub fn apply_word(word: &RWord, u: &FWord) -> FWord {
    word.letters()
        .iter()
        .rev()
        .fold(u.clone(), |acc, &g| apply_gen(g, &acc))
}

/// `word(e_n)`.
pub fn image(word: &RWord, n: u32) -> FWord {
    apply_word(word, &FWord::generator(n))
}

/// An index past which both words act on `e_j` as the pure shift by their x-count.
///
/// Each letter can move the support of an image by at most one index, so the bound
/// is deliberately loose.
pub fn stabilization_bound(u: &RWord, v: &RWord) -> u32 {
    u.max_index().max(v.max_index()) + u.len() as u32 + v.len() as u32 + 2
}

/// Equality of the two elements, decided through their images.
pub fn morphism_eq(u: &RWord, v: &RWord) -> bool {
    (1..=stabilization_bound(u, v)).all(|n| image(u, n) == image(v, n))
}

/// The order `<_L`: compare images of `e_1, e_2, ...` and decide at the first basis
/// element where they differ, using the curve order on the free group.
pub fn cmp_l(u: &RWord, v: &RWord) -> Ordering {
    (1..=stabilization_bound(u, v))
        .find_map(|n| {
            let (a, b) = (image(u, n), image(v, n));
            (a != b).then(|| a.curve_cmp(&b))
        })
        .unwrap_or(Ordering::Equal)
}

/// Whether `g · x_1^{m-1} = x_1^{m-1}`, i.e. `g` fixes every `e_j` with `j >= m`.
pub fn stabilizes_x_power(g: &RWord, m: u32) -> Result<bool> {
    assert!(m >= 1, "power index must be positive");
    g.require_braid()?;
    let xs = RWord::x1_power(m - 1);
    Ok(morphism_eq(&g.concat(&xs), &xs))
}

/// Images of `e_1 ..= e_n`, for callers that compare one word against many.
pub fn images(word: &RWord, n: u32) -> Vec<FWord> {
    (1..=n).map(|j| image(word, j)).collect()
}

/// [`cmp_l`] on precomputed [`images`]. Both slices must reach past the
/// stabilization bound of the two words.
pub fn cmp_images(a: &[FWord], b: &[FWord]) -> Ordering {
    a.iter()
        .zip(b)
        .find(|(x, y)| x != y)
        .map_or(Ordering::Equal, |(x, y)| x.curve_cmp(y))
}

//! Shared tokenizer for the word grammars.
//!
//! Both the monoid-word grammar (`s3`, `s3^-1`, `x2`) and the free-group grammar
//! (`e1`, `e1^-1`) are whitespace-separated sequences of a letter, a decimal index
//! and an optional `^-1` suffix.

use crate::error::ParseError;

/// Whitespace-separated tokens together with their byte offsets.
pub(crate) fn tokens(input: &str) -> impl Iterator<Item = (usize, &str)> {
    let base = input.as_ptr() as usize;
    input
        .split_ascii_whitespace()
        .map(move |tok| (tok.as_ptr() as usize - base, tok))
}

/// A letter token split into its parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct LetterToken {
    pub letter: char,
    pub index: u32,
    pub inverse: bool,
}

pub(crate) fn letter_token(offset: usize, tok: &str) -> Result<LetterToken, ParseError> {
    let mut chars = tok.chars();
    let letter = chars
        .next()
        .ok_or_else(|| ParseError::new(offset, tok, "empty token"))?;
    let rest = chars.as_str();
    let (digits, inverse) = match rest.strip_suffix("^-1") {
        Some(d) => (d, true),
        None => (rest, false),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::new(
            offset,
            tok,
            "expected a letter followed by a decimal index",
        ));
    }
    let index = digits
        .parse::<u32>()
        .map_err(|_| ParseError::new(offset, tok, "index out of range"))?;
    Ok(LetterToken {
        letter,
        index,
        inverse,
    })
}

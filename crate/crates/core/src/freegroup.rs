//! Reduced words in the free group on `e_1, e_2, ...` and the curve order on them.
//!
//! A word `e_{i_1}^{k_1} ... e_{i_l}^{k_l}` encodes a curve in the punctured disk from
//! `-1` to `1`: the letter `e_i` (resp. `e_i^-1`) records a crossing of the segment
//! between the `i`-th and `(i+1)`-th puncture from below to above (resp. above to
//! below). Lifting curves to the universal cover and comparing where they end gives a
//! linear order, computed here combinatorially by [`FWord::curve_cmp`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::ParseError;
use crate::text;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// `e_index^{±1}`. Index 0 stands for the identity and never survives reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FLetter {
    pub index: u32,
    pub sign: Sign,
}

impl FLetter {
    pub fn pos(index: u32) -> Self {
        Self {
            index,
            sign: Sign::Pos,
        }
    }

    pub fn neg(index: u32) -> Self {
        Self {
            index,
            sign: Sign::Neg,
        }
    }

    pub fn inverse(self) -> Self {
        Self {
            index: self.index,
            sign: self.sign.flip(),
        }
    }
}

impl fmt::Display for FLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Pos => write!(f, "e{}", self.index),
            Sign::Neg => write!(f, "e{}^-1", self.index),
        }
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FWord {
    letters: Vec<FLetter>,
}

impl FWord {
    pub fn identity() -> Self {
        Self::default()
    }

    /// The generator `e_i` (the identity when `i == 0`).
    pub fn generator(i: u32) -> Self {
        Self::reduce([FLetter::pos(i)])
    }

    /// Freely reduces a letter sequence, dropping index-0 letters first.
    pub fn reduce(letters: impl IntoIterator<Item = FLetter>) -> Self {
        let mut out: Vec<FLetter> = Vec::new();
        for l in letters {
            push_reduced(&mut out, l);
        }
        Self { letters: out }
    }

    pub fn letters(&self) -> &[FLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn max_index(&self) -> u32 {
        self.letters.iter().map(|l| l.index).max().unwrap_or(0)
    }

    pub fn mul(&self, other: &FWord) -> FWord {
        let mut out = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut out, l);
        }
        FWord { letters: out }
    }

    pub fn inv(&self) -> FWord {
        FWord {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// The automorphism `e_i -> e_i^-1`. Reducedness is preserved, so no reduction pass.
    pub fn psi(&self) -> FWord {
        FWord {
            letters: self.letters.iter().map(|l| l.inverse()).collect(),
        }
    }

    /// Image under the homomorphism sending `e_i` to `images(i)`.
    pub fn substitute(&self, mut images: impl FnMut(u32) -> FWord) -> FWord {
        let mut out: Vec<FLetter> = Vec::new();
        for l in &self.letters {
            let img = images(l.index);
            match l.sign {
                Sign::Pos => img.letters.iter().for_each(|&m| push_reduced(&mut out, m)),
                Sign::Neg => img
                    .letters
                    .iter()
                    .rev()
                    .for_each(|&m| push_reduced(&mut out, m.inverse())),
            }
        }
        FWord { letters: out }
    }

    /// The curve order.
    ///
    /// Two distinct reduced words are compared at their first differing position `m`
    /// (a word that has ended counts as the end-of-curve marker). The ranking of the
    /// possible continuations depends only on the letter before `m`:
    ///
    /// * at the start: `e_n, ..., e_2, e_1, e_1^-1, e_2^-1, ...`, then the end marker;
    /// * after `e_p`: `e_i^-1` for `i > p` ascending, the end marker, every `e_i`
    ///   descending, then `e_i^-1` for `i < p` ascending;
    /// * after `e_p^-1`: `e_i` for `i < p` descending, every `e_i^-1` ascending, the end
    ///   marker, then `e_i` for `i > p` descending.
    ///
    /// The orientation makes `e_1 < e_1^-1 e_2`, so braids that are positive in `s_1`
    /// move `e_1` upward. This puts `e_2 < e_1`.
    pub fn curve_cmp(&self, other: &FWord) -> Ordering {
        let m = self
            .letters
            .iter()
            .zip(&other.letters)
            .take_while(|(a, b)| a == b)
            .count();
        if m == self.len() && m == other.len() {
            return Ordering::Equal;
        }
        let prev = m.checked_sub(1).map(|k| self.letters[k]);
        let rank_self = continuation_rank(prev, self.letters.get(m).copied());
        let rank_other = continuation_rank(prev, other.letters.get(m).copied());
        rank_self.cmp(&rank_other)
    }
}

fn push_reduced(out: &mut Vec<FLetter>, l: FLetter) {
    if l.index == 0 {
        return;
    }
    if out.last() == Some(&l.inverse()) {
        out.pop();
    } else {
        out.push(l);
    }
}

/// Sort key of the continuation `next` (`None` = end of word) after `prev`.
fn continuation_rank(prev: Option<FLetter>, next: Option<FLetter>) -> (u8, i64) {
    let key = |l: FLetter| match l.sign {
        Sign::Pos => -i64::from(l.index),
        Sign::Neg => i64::from(l.index),
    };
    match (prev, next) {
        (None, None) => (2, 0),
        (None, Some(l)) => match l.sign {
            Sign::Pos => (0, key(l)),
            Sign::Neg => (1, key(l)),
        },
        (Some(p), next) => {
            // The state after e_p^-1 is the mirror image of the state after e_p:
            // mirror the continuation, rank it there, and reverse.
            let (p_index, next) = match p.sign {
                Sign::Pos => (p.index, next),
                Sign::Neg => (p.index, next.map(FLetter::inverse)),
            };
            let (band, k) = match next {
                None => (1, 0),
                Some(l) => match l.sign {
                    Sign::Neg if l.index > p_index => (0, key(l)),
                    Sign::Pos => (2, key(l)),
                    Sign::Neg => (3, key(l)),
                },
            };
            match p.sign {
                Sign::Pos => (band, k),
                Sign::Neg => (3 - band, -k),
            }
        }
    }
}

/// The comparison clauses of the combinatorial curve-order definition, read
/// literally: returns whether `w ⊳ u`.
///
/// Kept for reference and testing. Read literally, the clauses do not form an
/// order: some pairs are related both ways or neither way, and the relation is not
/// invariant under the braid action. [`FWord::curve_cmp`] is the order to use. It
/// agrees with this relation whenever the words already differ at their first
/// letter (there `w ⊳ u` means `w > u`).
pub fn definition_relation(w: &FWord, u: &FWord) -> bool {
    if w == u {
        return false;
    }
    let (wl, ul) = (w.letters(), u.letters());
    let common = wl.iter().zip(ul).take_while(|(a, b)| a == b).count();
    let m = common + 1;
    let ki = |l: FLetter| l.sign.as_i64() * i64::from(l.index);
    if m == 1 {
        return match (wl.first(), ul.first()) {
            (Some(&a), Some(&b)) => ki(a) < ki(b),
            // Not covered by the clauses.
            _ => false,
        };
    }
    let prev = wl[m - 2];
    let p = prev.index;
    if m <= wl.len().min(ul.len()) {
        let (a, b) = (wl[m - 1], ul[m - 1]);
        let (i, j) = (a.index, b.index);
        match prev.sign {
            Sign::Pos => match (a.sign, b.sign) {
                (Sign::Pos, Sign::Pos) => i > j,
                (Sign::Pos, Sign::Neg) => j < p,
                (Sign::Neg, Sign::Pos) => i > p,
                (Sign::Neg, Sign::Neg) => (i > p && i > j) || (i < j && j < p),
            },
            Sign::Neg => definition_relation(&u.psi(), &w.psi()),
        }
    } else if common == ul.len() {
        let a = wl[m - 1];
        (prev.sign == Sign::Neg && a.sign == Sign::Neg && a.index > p)
            || (prev.sign == Sign::Pos && (a.sign == Sign::Neg || a.index < p))
    } else {
        !definition_relation(u, w)
    }
}

impl fmt::Display for FWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, l) in self.letters.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromStr for FWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut letters = Vec::new();
        for (offset, tok) in text::tokens(s) {
            let t = text::letter_token(offset, tok)?;
            if t.letter != 'e' {
                return Err(ParseError::new(offset, tok, "expected an e letter"));
            }
            letters.push(if t.inverse {
                FLetter::neg(t.index)
            } else {
                FLetter::pos(t.index)
            });
        }
        Ok(FWord::reduce(letters))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> FWord {
        s.parse().unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(f("e1 e1^-1"), FWord::identity());
        assert_eq!(f("e1 e2 e2^-1 e3"), f("e1 e3"));
        assert_eq!(f("e2^-1 e2 e2"), f("e2"));
        assert_eq!(f("e0 e1 e0^-1"), f("e1"));
        assert_eq!(f("e1 e2 e2^-1 e1^-1").len(), 0);
    }

    #[test]
    fn group_operations() {
        assert_eq!(f("e1").mul(&f("e1^-1")), FWord::identity());
        assert_eq!(f("e1 e2^-1").psi(), f("e1^-1 e2"));
        assert_eq!(f("e1 e2").inv(), f("e2^-1 e1^-1"));
        let u = f("e3 e1^-1 e2");
        assert_eq!(u.mul(&u.inv()), FWord::identity());
    }

    #[test]
    fn substitute_inverts_letters() {
        let u = f("e1 e2^-1");
        let img = u.substitute(|i| FWord::reduce([FLetter::pos(i), FLetter::pos(i + 1)]));
        assert_eq!(img, f("e1 e2 e3^-1 e2^-1"));
    }

    #[test]
    fn curve_cmp_examples() {
        let w = f("e2 e1^-1 e3");
        assert_eq!(w.curve_cmp(&w), Ordering::Equal);
        assert_eq!(f("e1").curve_cmp(&f("e2")), Ordering::Greater);
        assert_eq!(f("e1^-1").curve_cmp(&f("e1")), Ordering::Greater);
        assert_eq!(f("e1").curve_cmp(&f("e1^-1 e2")), Ordering::Less);
        // continuation after e1: e2^-1 sorts before the end marker
        assert_eq!(f("e1 e2^-1 e3").curve_cmp(&f("e1")), Ordering::Less);
        assert_eq!(f("e1 e1").curve_cmp(&f("e1")), Ordering::Greater);
        assert_eq!(f("").curve_cmp(&f("e4^-1")), Ordering::Greater);
    }

    #[test]
    fn first_letter_agrees_with_definition() {
        let singles = ["e1", "e2", "e3", "e1^-1", "e2^-1", "e3^-1"].map(f);
        for a in &singles {
            for b in &singles {
                if a != b {
                    assert_eq!(
                        definition_relation(a, b),
                        a.curve_cmp(b) == Ordering::Greater
                    );
                }
            }
        }
    }

    #[test]
    fn definition_relation_is_not_an_order() {
        // The empty word against a nonempty one is covered by no clause.
        let (e, a) = (FWord::identity(), f("e1"));
        assert!(!definition_relation(&e, &a) && !definition_relation(&a, &e));
        // After e1, clause (a) ranks e1 e3 above e1 e2; the boundary order does not.
        assert!(definition_relation(&f("e1 e3"), &f("e1 e2")));
        assert_eq!(f("e1 e3").curve_cmp(&f("e1 e2")), Ordering::Less);
    }
}

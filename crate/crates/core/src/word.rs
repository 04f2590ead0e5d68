//! Words over the generators `s_i`, `s_i^-1` and `x_i` of the shrinking-braid monoid.
//!
//! A word is a purely syntactic representative; two different words may denote the
//! same element. Semantic equality lives in [`crate::representation`].

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};
use crate::text;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Sigma,
    SigmaInv,
    X,
}

/// One letter: a crossing `s_i`, its inverse, or a merge `x_i`. Indices start at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator {
    kind: Kind,
    index: u32,
}

impl Generator {
    /// # Panics
    /// If `index` is zero.
    pub fn new(kind: Kind, index: u32) -> Self {
        assert!(index >= 1, "generator index must be at least 1");
        Self { kind, index }
    }

    pub fn sigma(index: u32) -> Self {
        Self::new(Kind::Sigma, index)
    }

    pub fn sigma_inv(index: u32) -> Self {
        Self::new(Kind::SigmaInv, index)
    }

    pub fn x(index: u32) -> Self {
        Self::new(Kind::X, index)
    }

    /// `s_i` when `positive`, `s_i^-1` otherwise.
    pub fn sigma_signed(index: u32, positive: bool) -> Self {
        if positive {
            Self::sigma(index)
        } else {
            Self::sigma_inv(index)
        }
    }

    pub fn kind(self) -> Kind {
        self.kind
    }

    pub fn index(self) -> u32 {
        self.index
    }

    pub fn is_sigma(self) -> bool {
        matches!(self.kind, Kind::Sigma | Kind::SigmaInv)
    }

    pub fn is_x(self) -> bool {
        self.kind == Kind::X
    }

    /// Group inverse; `None` for `x_i`.
    pub fn inverse(self) -> Option<Self> {
        match self.kind {
            Kind::Sigma => Some(Self::sigma_inv(self.index)),
            Kind::SigmaInv => Some(Self::sigma(self.index)),
            Kind::X => None,
        }
    }

    pub fn shifted(self, k: u32) -> Self {
        Self::new(self.kind, self.index + k)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::Sigma => write!(f, "s{}", self.index),
            Kind::SigmaInv => write!(f, "s{}^-1", self.index),
            Kind::X => write!(f, "x{}", self.index),
        }
    }
}

/// A finite word over [`Generator`]s. The empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct RWord {
    letters: Vec<Generator>,
}

impl RWord {
    pub fn new(letters: Vec<Generator>) -> Self {
        Self { letters }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    /// `x_1^k`.
    pub fn x1_power(k: u32) -> Self {
        Self::new(vec![Generator::x(1); k as usize])
    }

    pub fn letters(&self) -> &[Generator] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Generator> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn max_index(&self) -> u32 {
        self.letters.iter().map(|g| g.index).max().unwrap_or(0)
    }

    pub fn x_count(&self) -> u32 {
        self.letters.iter().filter(|g| g.is_x()).count() as u32
    }

    /// True when the word has no `x` letters, i.e. it denotes a braid.
    pub fn is_braid(&self) -> bool {
        self.letters.iter().all(|g| g.is_sigma())
    }

    pub(crate) fn require_braid(&self) -> Result<()> {
        match self.letters.iter().position(|g| g.is_x()) {
            None => Ok(()),
            Some(position) => Err(Error::XLetterPresent {
                letter: self.letters[position].to_string(),
                position,
            }),
        }
    }

    pub fn push(&mut self, g: Generator) {
        self.letters.push(g);
    }

    pub fn concat(&self, other: &RWord) -> RWord {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        RWord::new(letters)
    }

    /// The shift endomorphism `sh^k`: every index raised by `k`.
    pub fn shift(&self, k: u32) -> RWord {
        self.letters.iter().map(|g| g.shifted(k)).collect()
    }

    /// Inverse in the braid group. Fails on words containing `x` letters.
    pub fn braid_inverse(&self) -> Result<RWord> {
        self.require_braid()?;
        Ok(self
            .letters
            .iter()
            .rev()
            .map(|g| g.inverse().expect("braid letter"))
            .collect())
    }

    /// Removes adjacent `s_i s_i^-1` and `s_i^-1 s_i` pairs until none remain.
    pub fn free_cancel(&self) -> RWord {
        let mut out: Vec<Generator> = Vec::with_capacity(self.len());
        for &g in &self.letters {
            match out.last() {
                Some(&last) if last.inverse() == Some(g) => {
                    out.pop();
                }
                _ => out.push(g),
            }
        }
        RWord::new(out)
    }

    /// Rewrites the word as `braid · xs`, with every `x` letter moved to the tail.
    ///
    /// The word is scanned right to left; each `x` letter is pushed rightward across
    /// the braid suffix one crossing at a time (see [`push_x_past`]). The x part is
    /// returned in ascending canonical form.
    pub fn sx_decompose(&self) -> (RWord, RWord) {
        let mut braid: Vec<Generator> = Vec::new();
        let mut xs: Vec<u32> = Vec::new();
        for &g in self.letters.iter().rev() {
            if g.is_sigma() {
                braid.insert(0, g);
                continue;
            }
            let mut index = g.index;
            let mut moved = Vec::with_capacity(braid.len() + 4);
            for &b in &braid {
                let (prefix, next) = push_x_past(index, b);
                moved.extend(prefix);
                index = next;
            }
            braid = moved;
            xs.insert(0, index);
        }
        let xs = crate::xmonoid::XWord::new(xs).canonicalize();
        (
            RWord::new(braid).free_cancel(),
            xs.indices().iter().map(|&i| Generator::x(i)).collect(),
        )
    }

    /// Applies one defining relation at `position`.
    ///
    /// `LeftToRight` replaces an occurrence of the relation's left side by its right
    /// side; `RightToLeft` does the converse. Relation (5) covers its three forms.
    pub fn apply_relation(
        &self,
        rule: Relation,
        position: usize,
        direction: Direction,
    ) -> Result<RWord> {
        let no_match = Error::NoMatch {
            rule: rule.number(),
            position,
        };
        if position > self.len() {
            return Err(no_match);
        }
        let rest = &self.letters[position..];
        let (consumed, replacement) = match direction {
            Direction::LeftToRight => match_left(rule, rest),
            Direction::RightToLeft => match_right(rule, rest),
        }
        .ok_or(no_match)?;
        let mut letters = Vec::with_capacity(self.len() + 2);
        letters.extend_from_slice(&self.letters[..position]);
        letters.extend(replacement);
        letters.extend_from_slice(&self.letters[position + consumed..]);
        Ok(RWord::new(letters))
    }
}

/// Rewrites `x_i · g` as `prefix · x_j` with `prefix` made of crossings.
///
/// Positive crossings use relations (3), (4) and (5) directly. The inverse forms are
/// obtained by rearranging them:
/// `x_{i+1} s_i^-1 = s_i^-1 s_{i+1}^-1 x_i` and `x_i s_i^-1 = s_{i+1}^-1 s_i^-1 x_{i+1}`.
pub fn push_x_past(i: u32, g: Generator) -> (Vec<Generator>, u32) {
    debug_assert!(g.is_sigma());
    let j = g.index;
    let pos = g.kind == Kind::Sigma;
    let s = Generator::sigma_signed;
    if j > i {
        (vec![s(j + 1, pos)], i)
    } else if j == i {
        if pos {
            (vec![s(i + 1, true), s(i, true)], i + 1)
        } else {
            (vec![s(i + 1, false), s(i, false)], i + 1)
        }
    } else if j + 1 == i {
        if pos {
            (vec![s(j, true), s(i, true)], j)
        } else {
            (vec![s(j, false), s(i, false)], j)
        }
    } else {
        (vec![g], i)
    }
}

/// The seven defining relations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `s_i x_i = x_i`
    Pants1,
    /// `x_{i+1} x_i = x_i x_i`
    Pants2,
    /// `x_{i+1} s_i = s_i s_{i+1} x_i`
    Cross3,
    /// `x_i s_i = s_{i+1} s_i x_{i+1}`
    Cross4,
    /// `x_i x_j = x_{j+1} x_i`, `x_i s_j = s_{j+1} x_i` (j > i), `x_i s_k = s_k x_i` (k < i-1)
    Thompson5,
    /// `s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}`
    Braid6,
    /// `s_i s_j = s_j s_i` (j > i+1)
    Commute7,
}

impl Relation {
    pub const ALL: [Relation; 7] = [
        Relation::Pants1,
        Relation::Pants2,
        Relation::Cross3,
        Relation::Cross4,
        Relation::Thompson5,
        Relation::Braid6,
        Relation::Commute7,
    ];

    pub fn number(self) -> u8 {
        self as u8 + 1
    }

    pub fn from_number(n: u8) -> Option<Relation> {
        Self::ALL.get(usize::from(n).checked_sub(1)?).copied()
    }

    /// Every instance `(lhs, rhs)` of the relation with all indices in `1..=max`.
    pub fn instances(self, max: u32) -> Vec<(RWord, RWord)> {
        use Generator as G;
        let w = |gs: &[Generator]| RWord::new(gs.to_vec());
        let mut out = Vec::new();
        for i in 1..=max {
            match self {
                Relation::Pants1 => out.push((w(&[G::sigma(i), G::x(i)]), w(&[G::x(i)]))),
                Relation::Pants2 if i < max => {
                    out.push((w(&[G::x(i + 1), G::x(i)]), w(&[G::x(i), G::x(i)])))
                }
                Relation::Cross3 if i < max => out.push((
                    w(&[G::x(i + 1), G::sigma(i)]),
                    w(&[G::sigma(i), G::sigma(i + 1), G::x(i)]),
                )),
                Relation::Cross4 if i < max => out.push((
                    w(&[G::x(i), G::sigma(i)]),
                    w(&[G::sigma(i + 1), G::sigma(i), G::x(i + 1)]),
                )),
                Relation::Thompson5 => {
                    for j in i + 1..max {
                        out.push((w(&[G::x(i), G::x(j)]), w(&[G::x(j + 1), G::x(i)])));
                        out.push((w(&[G::x(i), G::sigma(j)]), w(&[G::sigma(j + 1), G::x(i)])));
                    }
                    for k in 1..i.saturating_sub(1) {
                        out.push((w(&[G::x(i), G::sigma(k)]), w(&[G::sigma(k), G::x(i)])));
                    }
                }
                Relation::Braid6 if i < max => out.push((
                    w(&[G::sigma(i), G::sigma(i + 1), G::sigma(i)]),
                    w(&[G::sigma(i + 1), G::sigma(i), G::sigma(i + 1)]),
                )),
                Relation::Commute7 => {
                    for j in i + 2..=max {
                        out.push((
                            w(&[G::sigma(i), G::sigma(j)]),
                            w(&[G::sigma(j), G::sigma(i)]),
                        ));
                    }
                }
                _ => {}
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    LeftToRight,
    RightToLeft,
}

fn match_left(rule: Relation, w: &[Generator]) -> Option<(usize, Vec<Generator>)> {
    use Generator as G;
    use Kind::*;
    let k = |n: usize| w.get(n).map(|g| (g.kind, g.index));
    match rule {
        Relation::Pants1 => match (k(0)?, k(1)?) {
            ((Sigma, i), (X, j)) if i == j => Some((2, vec![G::x(i)])),
            _ => None,
        },
        Relation::Pants2 => match (k(0)?, k(1)?) {
            ((X, a), (X, i)) if a == i + 1 => Some((2, vec![G::x(i), G::x(i)])),
            _ => None,
        },
        Relation::Cross3 => match (k(0)?, k(1)?) {
            ((X, a), (Sigma, i)) if a == i + 1 => {
                Some((2, vec![G::sigma(i), G::sigma(i + 1), G::x(i)]))
            }
            _ => None,
        },
        Relation::Cross4 => match (k(0)?, k(1)?) {
            ((X, i), (Sigma, j)) if i == j => {
                Some((2, vec![G::sigma(i + 1), G::sigma(i), G::x(i + 1)]))
            }
            _ => None,
        },
        Relation::Thompson5 => match (k(0)?, k(1)?) {
            ((X, i), (X, j)) if j > i => Some((2, vec![G::x(j + 1), G::x(i)])),
            ((X, i), (Sigma, j)) if j > i => Some((2, vec![G::sigma(j + 1), G::x(i)])),
            ((X, i), (Sigma, k)) if k + 1 < i => Some((2, vec![G::sigma(k), G::x(i)])),
            _ => None,
        },
        Relation::Braid6 => match (k(0)?, k(1)?, k(2)?) {
            ((Sigma, i), (Sigma, a), (Sigma, b)) if a == i + 1 && b == i => {
                Some((3, vec![G::sigma(i + 1), G::sigma(i), G::sigma(i + 1)]))
            }
            _ => None,
        },
        Relation::Commute7 => match (k(0)?, k(1)?) {
            ((Sigma, i), (Sigma, j)) if j > i + 1 => Some((2, vec![G::sigma(j), G::sigma(i)])),
            _ => None,
        },
    }
}

fn match_right(rule: Relation, w: &[Generator]) -> Option<(usize, Vec<Generator>)> {
    use Generator as G;
    use Kind::*;
    let k = |n: usize| w.get(n).map(|g| (g.kind, g.index));
    match rule {
        Relation::Pants1 => match k(0)? {
            (X, i) => Some((1, vec![G::sigma(i), G::x(i)])),
            _ => None,
        },
        Relation::Pants2 => match (k(0)?, k(1)?) {
            ((X, i), (X, j)) if i == j => Some((2, vec![G::x(i + 1), G::x(i)])),
            _ => None,
        },
        Relation::Cross3 => match (k(0)?, k(1)?, k(2)?) {
            ((Sigma, i), (Sigma, a), (X, b)) if a == i + 1 && b == i => {
                Some((3, vec![G::x(i + 1), G::sigma(i)]))
            }
            _ => None,
        },
        Relation::Cross4 => match (k(0)?, k(1)?, k(2)?) {
            ((Sigma, a), (Sigma, i), (X, b)) if a == i + 1 && b == i + 1 => {
                Some((3, vec![G::x(i), G::sigma(i)]))
            }
            _ => None,
        },
        Relation::Thompson5 => match (k(0)?, k(1)?) {
            ((X, a), (X, i)) if a > i + 1 => Some((2, vec![G::x(i), G::x(a - 1)])),
            ((Sigma, a), (X, i)) if a > i + 1 => Some((2, vec![G::x(i), G::sigma(a - 1)])),
            ((Sigma, k), (X, i)) if k + 1 < i => Some((2, vec![G::x(i), G::sigma(k)])),
            _ => None,
        },
        Relation::Braid6 => match (k(0)?, k(1)?, k(2)?) {
            ((Sigma, a), (Sigma, i), (Sigma, b)) if a == i + 1 && b == i + 1 => {
                Some((3, vec![G::sigma(i), G::sigma(i + 1), G::sigma(i)]))
            }
            _ => None,
        },
        Relation::Commute7 => match (k(0)?, k(1)?) {
            ((Sigma, j), (Sigma, i)) if j > i + 1 => Some((2, vec![G::sigma(i), G::sigma(j)])),
            _ => None,
        },
    }
}

impl FromIterator<Generator> for RWord {
    fn from_iter<I: IntoIterator<Item = Generator>>(iter: I) -> Self {
        RWord::new(iter.into_iter().collect())
    }
}

impl Mul for &RWord {
    type Output = RWord;

    fn mul(self, rhs: &RWord) -> RWord {
        self.concat(rhs)
    }
}

impl fmt::Display for RWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, g) in self.letters.iter().enumerate() {
            if n > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for RWord {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let mut letters = Vec::new();
        for (offset, tok) in text::tokens(s) {
            let t = text::letter_token(offset, tok)?;
            if t.index == 0 {
                return Err(ParseError::new(
                    offset,
                    tok,
                    "generator index must be at least 1",
                ));
            }
            let g = match (t.letter, t.inverse) {
                ('s', false) => Generator::sigma(t.index),
                ('s', true) => Generator::sigma_inv(t.index),
                ('x', false) => Generator::x(t.index),
                ('x', true) => {
                    return Err(ParseError::new(offset, tok, "x letters have no inverse"))
                }
                _ => return Err(ParseError::new(offset, tok, "expected an s or x letter")),
            };
            letters.push(g);
        }
        Ok(RWord::new(letters))
    }
}

//! Left-distributive operations on braids and on elements `a · x_1^{n-1}`.
//!
//! On braids, `a · b = a sh(b) s_1 sh(a^-1)` and `a ∘ b = a sh(b) x_1`. Starting from
//! the identity braid they generate an LD system `A_e` and an LD monoid `F_e`. Each
//! element of `F_e` is `a_1 ∘ ... ∘ a_n` with `a_i ∈ A_e`. It is realized as the word
//! `sh(a⃗) x_1^{n-1}`, where `sh(a⃗) = a_1 sh(a_2) ... sh^{n-1}(a_n)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{ParseError, Result};
use crate::representation::cmp_l;
use crate::word::{Generator, RWord};

/// `a · b = a sh(b) s_1 sh(a^-1)` on braid words.
pub fn ld_dot(a: &RWord, b: &RWord) -> Result<RWord> {
    b.require_braid()?;
    let a_inv = a.braid_inverse()?;
    let mut out = a.concat(&b.shift(1));
    out.push(Generator::sigma(1));
    Ok(out.concat(&a_inv.shift(1)))
}

/// `a ∘ b = a sh(b) x_1` on braid words.
pub fn ld_circ(a: &RWord, b: &RWord) -> Result<RWord> {
    a.require_braid()?;
    b.require_braid()?;
    let mut out = a.concat(&b.shift(1));
    out.push(Generator::x(1));
    Ok(out)
}

/// `braid · x_1^{n-1}` with `braid` free of x letters and `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BElement {
    braid: RWord,
    n: u32,
}

impl BElement {
    /// # Panics
    /// If `braid` has x letters or `n == 0`.
    pub fn new(braid: RWord, n: u32) -> Self {
        assert!(braid.is_braid(), "braid part must not contain x letters");
        assert!(n >= 1, "x power index starts at 1");
        Self { braid, n }
    }

    /// The generator of `F_e`: the identity braid with `n = 1`.
    pub fn unit() -> Self {
        Self::new(RWord::identity(), 1)
    }

    pub fn braid(&self) -> &RWord {
        &self.braid
    }

    /// The ∘-length: the element is `braid · x_1^{n-1}`.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn realize(&self) -> RWord {
        self.braid.concat(&RWord::x1_power(self.n - 1))
    }

    /// `(a x_1^{n-1}) · c = a sh^n(c) s_n ... s_1 sh(a^-1)`, normalized back into
    /// `braid · x_1^{m-1}` where `m` is the ∘-length of `c`.
    pub fn dot(&self, c: &BElement) -> BElement {
        let n = self.n;
        let mut w = self.braid.concat(&c.realize().shift(n));
        for k in (1..=n).rev() {
            w.push(Generator::sigma(k));
        }
        let a_inv = self.braid.braid_inverse().expect("braid part");
        let w = w.concat(&a_inv.shift(1));
        let (braid, xs) = w.sx_decompose();
        assert_eq!(
            xs,
            RWord::x1_power(c.n - 1),
            "x part of a product must be x_1^(m-1)"
        );
        BElement::new(braid, c.n)
    }

    /// `(a x_1^{n-1}) ∘ c = a sh^n(c) x_1^n`, i.e. braid part `a sh^n(c_braid)` and
    /// ∘-length `n + m`.
    pub fn circ(&self, c: &BElement) -> BElement {
        BElement::new(self.braid.concat(&c.braid.shift(self.n)), self.n + c.n)
    }
}

/// `sh(a⃗) = a_1 sh(a_2) ... sh^{n-1}(a_n)`.
pub fn shift_vector(components: &[RWord]) -> RWord {
    components
        .iter()
        .enumerate()
        .fold(RWord::identity(), |acc, (k, a)| {
            acc.concat(&a.shift(k as u32))
        })
}

/// The positive-braid action on braid sequences:
/// `s_i (.., a_i, a_{i+1}, ..) = (.., a_i · a_{i+1}, a_i, ..)`, `i` 1-based.
pub fn sequence_sigma(i: usize, seq: &[RWord]) -> Result<Vec<RWord>> {
    if i == 0 || i >= seq.len() {
        return Err(crate::Error::IndexOutOfRange {
            index: i,
            len: seq.len(),
        });
    }
    let mut out = seq.to_vec();
    out[i - 1] = ld_dot(&seq[i - 1], &seq[i])?;
    out[i] = seq[i - 1].clone();
    Ok(out)
}

/// The ∘-sequence form `(a⃗) · (b⃗)`: the `k`-th component is
/// `a_1 · (a_2 · ( ... (a_n · b_k)))`.
pub fn sequence_dot(a: &[RWord], b: &[RWord]) -> Result<Vec<RWord>> {
    b.iter()
        .map(|bk| {
            a.iter().rev().try_fold(bk.clone(), |acc, ai| {
                ld_dot(ai, &acc).map(|w| w.free_cancel())
            })
        })
        .collect()
}

/// Realizes a ∘-sequence of braids as `sh(a⃗) x_1^{n-1}`.
pub fn realize_sequence(seq: &[RWord]) -> RWord {
    shift_vector(seq).concat(&RWord::x1_power(seq.len().saturating_sub(1) as u32))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Dot,
    Circ,
}

/// A term over the single generator `j` built with `·` and `∘`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LDTerm {
    Leaf,
    Node(Op, Box<LDTerm>, Box<LDTerm>),
}

impl LDTerm {
    pub fn dot(l: LDTerm, r: LDTerm) -> LDTerm {
        LDTerm::Node(Op::Dot, Box::new(l), Box::new(r))
    }

    pub fn circ(l: LDTerm, r: LDTerm) -> LDTerm {
        LDTerm::Node(Op::Circ, Box::new(l), Box::new(r))
    }

    pub fn depth(&self) -> usize {
        match self {
            LDTerm::Leaf => 0,
            LDTerm::Node(_, l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    pub fn leaves(&self) -> usize {
        match self {
            LDTerm::Leaf => 1,
            LDTerm::Node(_, l, r) => l.leaves() + r.leaves(),
        }
    }

    /// Every term of depth at most `depth`, shallowest first.
    pub fn all_up_to_depth(depth: usize) -> Vec<LDTerm> {
        let mut terms = vec![LDTerm::Leaf];
        for _ in 0..depth {
            let mut next = vec![LDTerm::Leaf];
            for l in &terms {
                for r in &terms {
                    next.push(LDTerm::dot(l.clone(), r.clone()));
                    next.push(LDTerm::circ(l.clone(), r.clone()));
                }
            }
            terms = next;
        }
        terms
    }

    /// Evaluates the term in `F_e` through the closed product formulas.
    pub fn eval(&self) -> BElement {
        match self {
            LDTerm::Leaf => BElement::unit(),
            LDTerm::Node(Op::Dot, l, r) => l.eval().dot(&r.eval()),
            LDTerm::Node(Op::Circ, l, r) => l.eval().circ(&r.eval()),
        }
    }

    /// The realized monoid word of the term.
    pub fn realize(&self) -> RWord {
        self.eval().realize()
    }

    /// Evaluates the term as a ∘-sequence of braids in `A_e`, using the componentwise
    /// product on sequences and concatenation for `∘`.
    pub fn eval_sequence(&self) -> Vec<RWord> {
        match self {
            LDTerm::Leaf => vec![RWord::identity()],
            LDTerm::Node(Op::Dot, l, r) => {
                sequence_dot(&l.eval_sequence(), &r.eval_sequence()).expect("braid components")
            }
            LDTerm::Node(Op::Circ, l, r) => {
                let mut s = l.eval_sequence();
                s.extend(r.eval_sequence());
                s
            }
        }
    }
}

/// Compares two terms by `<_L` on their realizations.
pub fn laver_cmp(s: &LDTerm, t: &LDTerm) -> Ordering {
    cmp_l(&s.realize(), &t.realize())
}

impl fmt::Display for LDTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LDTerm::Leaf => f.write_str("j"),
            LDTerm::Node(op, l, r) => {
                let sym = match op {
                    Op::Dot => ".",
                    Op::Circ => "o",
                };
                write!(f, "({l} {sym} {r})")
            }
        }
    }
}

impl FromStr for LDTerm {
    type Err = ParseError;

    /// Grammar: `term := "j" | "(" term ("." | "o") term ")"`, whitespace-insensitive.
    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let mut p = TermParser { src: s, pos: 0 };
        let t = p.term()?;
        p.skip_ws();
        if p.pos < s.len() {
            return Err(p.error("trailing input after term"));
        }
        Ok(t)
    }
}

struct TermParser<'a> {
    src: &'a str,
    pos: usize,
}

impl TermParser<'_> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn error(&self, message: &str) -> ParseError {
        let token = self.src[self.pos..]
            .split_whitespace()
            .next()
            .unwrap_or("<end of input>");
        ParseError::new(self.pos, token, message)
    }

    fn expect(&mut self, c: char, message: &str) -> std::result::Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(message))
        }
    }

    fn term(&mut self) -> std::result::Result<LDTerm, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some('j') => {
                self.pos += 1;
                Ok(LDTerm::Leaf)
            }
            Some('(') => {
                self.pos += 1;
                let l = self.term()?;
                self.skip_ws();
                let op = match self.peek() {
                    Some('.') => Op::Dot,
                    Some('o') => Op::Circ,
                    _ => return Err(self.error("expected `.` or `o`")),
                };
                self.pos += 1;
                let r = self.term()?;
                self.expect(')', "expected `)`")?;
                Ok(LDTerm::Node(op, Box::new(l), Box::new(r)))
            }
            _ => Err(self.error("expected `j` or `(`")),
        }
    }
}

//! The submonoid generated by the `x_i`: canonical forms, fiber sequences and the
//! function representations.
//!
//! Under `x_i x_j = x_{j+1} x_i` (j ≥ i) every element has a unique weakly
//! increasing word `x_{i_1} ... x_{i_m}`. Its fiber sequence `S(y) = (n_1, n_2, ...)`
//! counts how many points the surjection `p(y)` sends to each `j`. The entries are
//! eventually 1 and `Σ (n_j - 1) = m`.

use std::cmp::Ordering;
use std::fmt;

use crate::word::{Generator, Kind, RWord};

/// A word `x_{i_1} ... x_{i_m}` stored as its index sequence.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct XWord {
    indices: Vec<u32>,
}

impl XWord {
    /// # Panics
    /// If any index is zero.
    pub fn new(indices: Vec<u32>) -> Self {
        assert!(indices.iter().all(|&i| i >= 1), "x indices start at 1");
        Self { indices }
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn is_canonical(&self) -> bool {
        self.indices.windows(2).all(|p| p[0] <= p[1])
    }

    pub fn concat(&self, other: &XWord) -> XWord {
        XWord::new([self.indices.as_slice(), other.indices.as_slice()].concat())
    }

    /// The ascending canonical form, reached by rewriting adjacent `x_a x_b` with
    /// `a > b` into `x_b x_{a-1}`.
    pub fn canonicalize(&self) -> XWord {
        let mut v = self.indices.clone();
        // Insertion sort where each swap lowers the moving index by one.
        for k in 1..v.len() {
            let mut p = k;
            while p > 0 && v[p - 1] > v[p] {
                let (a, b) = (v[p - 1], v[p]);
                v[p - 1] = b;
                v[p] = a - 1;
                p -= 1;
            }
        }
        XWord { indices: v }
    }

    /// Rewrites the adjacent pair at `position` if it is out of order.
    /// Returns `None` when `indices[position] <= indices[position + 1]`.
    pub fn rewrite_at(&self, position: usize) -> Option<XWord> {
        let (&a, &b) = (self.indices.get(position)?, self.indices.get(position + 1)?);
        (a > b).then(|| {
            let mut v = self.indices.clone();
            v[position] = b;
            v[position + 1] = a - 1;
            XWord { indices: v }
        })
    }

    pub fn to_rword(&self) -> RWord {
        self.indices.iter().map(|&i| Generator::x(i)).collect()
    }

    /// `None` if the word contains crossings.
    pub fn from_rword(w: &RWord) -> Option<XWord> {
        w.letters()
            .iter()
            .map(|g| (g.kind() == Kind::X).then(|| g.index()))
            .collect::<Option<Vec<_>>>()
            .map(XWord::new)
    }

    /// The fiber sequence `S(y)`, with `n_j = 1 + #{k : i_k = j}` read off the
    /// canonical form.
    pub fn s_of(&self) -> XSeq {
        let canon = self.canonicalize();
        let len = canon.indices.last().copied().unwrap_or(0) as usize;
        let mut n = vec![1u32; len];
        for &i in &canon.indices {
            n[i as usize - 1] += 1;
        }
        XSeq::new(n)
    }

    /// `p(y)(k)`: the letters act leftmost first, `x_i` sending `j <= i` to `j` and
    /// `j > i` to `j - 1`.
    pub fn p_eval(&self, k: u32) -> u32 {
        self.indices
            .iter()
            .fold(k, |j, &i| if j > i { j - 1 } else { j })
    }
}

impl fmt::Display for XWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_rword().fmt(f)
    }
}

/// An eventually-1 sequence of positive integers, stored without its trailing 1s.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct XSeq {
    prefix: Vec<u32>,
}

impl XSeq {
    /// # Panics
    /// If an entry is zero.
    pub fn new(mut prefix: Vec<u32>) -> Self {
        assert!(prefix.iter().all(|&n| n >= 1), "fiber sizes are positive");
        while prefix.last() == Some(&1) {
            prefix.pop();
        }
        Self { prefix }
    }

    pub fn prefix(&self) -> &[u32] {
        &self.prefix
    }

    /// `n_j` for `j >= 1`.
    pub fn get(&self, j: usize) -> u32 {
        self.prefix.get(j - 1).copied().unwrap_or(1)
    }

    /// `L(y) = Σ (n_j - 1)`, the length of the canonical word.
    pub fn excess(&self) -> u32 {
        self.prefix.iter().map(|n| n - 1).sum()
    }

    /// The product `m⃗ n⃗`: the `k`-th entry sums `m` over the `k`-th consecutive block,
    /// block lengths given by `n`. Matches `S(uv) = S(u) S(v)`.
    pub fn compose(&self, n: &XSeq) -> XSeq {
        let mut out = Vec::new();
        let mut start = 1usize;
        let mut k = 1usize;
        while k <= n.prefix.len() || start <= self.prefix.len() {
            let width = n.get(k) as usize;
            out.push((start..start + width).map(|t| self.get(t)).sum());
            start += width;
            k += 1;
        }
        XSeq::new(out)
    }

    /// The ascending word with this fiber sequence.
    pub fn canonical_word(&self) -> XWord {
        let mut v = Vec::new();
        for (j, &n) in self.prefix.iter().enumerate() {
            v.extend(std::iter::repeat_n(j as u32 + 1, n as usize - 1));
        }
        XWord::new(v)
    }
}

impl fmt::Display for XSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, n) in self.prefix.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{n}")?;
        }
        f.write_str(")")
    }
}

/// Compares two elements through their fiber sequences.
///
/// The sequences are compared lexicographically (padded with 1s) with the
/// orientation reversed: a larger entry at the first difference ranks lower. This is
/// the orientation in which the comparison coincides with `<_L`.
pub fn lex_cmp(c: &XWord, d: &XWord) -> Ordering {
    let (sc, sd) = (c.s_of(), d.s_of());
    let len = sc.prefix.len().max(sd.prefix.len());
    (1..=len)
        .map(|j| sd.get(j).cmp(&sc.get(j)))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Evaluates the image of `w` in the quotient where `s_i^2 = e`: crossings act as
/// the transposition of `i` and `i + 1`, `x_i` as in [`XWord::p_eval`], leftmost
/// letter first.
pub fn sf_eval(w: &RWord, k: u32) -> u32 {
    w.letters().iter().fold(k, |j, g| {
        let i = g.index();
        match g.kind() {
            Kind::X => {
                if j > i {
                    j - 1
                } else {
                    j
                }
            }
            Kind::Sigma | Kind::SigmaInv => {
                if j == i {
                    i + 1
                } else if j == i + 1 {
                    i
                } else {
                    j
                }
            }
        }
    })
}

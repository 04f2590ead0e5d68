//! The enveloping LD monoid of a finite LD system.
//!
//! An element is a ∘-sequence `a_1 ∘ ... ∘ a_n` of table elements. Two sequences
//! denote the same element exactly when the positive braid monoid, acting by
//! `σ_i(.., a_i, a_{i+1}, ..) = (.., a_i · a_{i+1}, a_i, ..)`, maps them to a common
//! sequence. Over a finite table the orbits are finite, so this is decidable.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite left-distributive operation on `1..=size`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LDTable {
    size: u32,
    rows: Vec<Vec<u32>>,
}

impl LDTable {
    /// Builds a table from its rows (`rows[a-1][b-1] = a·b`), checking shape, range
    /// and left distributivity.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let size = rows.len() as u32;
        if size == 0 {
            return Err(Error::InvalidTable(
                "table must have at least one element".into(),
            ));
        }
        for (a, row) in rows.iter().enumerate() {
            if row.len() != rows.len() {
                return Err(Error::InvalidTable(format!(
                    "row {} has {} entries, expected {size}",
                    a + 1,
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&v| v == 0 || v > size) {
                return Err(Error::InvalidTable(format!(
                    "row {} contains {bad}, outside 1..={size}",
                    a + 1
                )));
            }
        }
        let table = Self { size, rows };
        if let Some((a, b, c)) = table.distributivity_violation() {
            return Err(Error::NotLeftDistributive { a, b, c });
        }
        Ok(table)
    }

    /// Builds a table from a closure on `1..=size`.
    pub fn from_fn(size: u32, f: impl Fn(u32, u32) -> u32) -> Result<Self> {
        Self::new(
            (1..=size)
                .map(|a| (1..=size).map(|b| f(a, b)).collect())
                .collect(),
        )
    }

    /// The one-element system.
    pub fn trivial() -> Self {
        Self::from_fn(1, |_, _| 1).expect("one-element table is LD")
    }

    /// The dihedral quandle `a·b = 2b − a (mod n)`, elements relabeled `1..=n`.
    pub fn cyclic(n: u32) -> Result<Self> {
        let n64 = i64::from(n);
        Self::from_fn(n, |a, b| {
            let (a, b) = (i64::from(a) - 1, i64::from(b) - 1);
            ((2 * b - a).rem_euclid(n64) + 1) as u32
        })
    }

    /// The Laver table `A_k` on `2^k` elements: `a·1 = a + 1 (mod 2^k)` and
    /// `a·(b+1) = (a·b)·(a+1)`.
    pub fn laver(k: u32) -> Self {
        let n = 1usize << k;
        let mut rows = vec![vec![0u32; n]; n];
        for a in (1..=n).rev() {
            rows[a - 1][0] = if a == n { 1 } else { a as u32 + 1 };
            for b in 1..n {
                let prev = rows[a - 1][b - 1] as usize;
                // prev > a whenever a < n, so that row is already filled
                rows[a - 1][b] = if a == n {
                    b as u32 + 1
                } else {
                    rows[prev - 1][a]
                };
            }
        }
        Self::new(rows).expect("Laver tables are LD")
    }

    pub fn size(&self) -> u32 {
        self.size
    }

    /// `a·b`.
    ///
    /// # Panics
    /// If `a` or `b` is outside `1..=size`.
    pub fn op(&self, a: u32, b: u32) -> u32 {
        self.rows[a as usize - 1][b as usize - 1]
    }

    /// The first triple `(a, b, c)` with `a·(b·c) != (a·b)·(a·c)`, if any.
    pub fn distributivity_violation(&self) -> Option<(u32, u32, u32)> {
        let n = self.size;
        (1..=n)
            .flat_map(|a| (1..=n).flat_map(move |b| (1..=n).map(move |c| (a, b, c))))
            .find(|&(a, b, c)| self.op(a, self.op(b, c)) != self.op(self.op(a, b), self.op(a, c)))
    }

    /// Checks that every id in `e` is an element of this table.
    pub fn validate(&self, e: &EnvElement) -> Result<()> {
        match e.seq.iter().find(|&&a| a == 0 || a > self.size) {
            Some(&bad) => Err(Error::InvalidTable(format!(
                "element {bad} is outside 1..={}",
                self.size
            ))),
            None => Ok(()),
        }
    }

    /// `σ_i` on `s`, with `i` 1-based and `i < len(s)`.
    pub fn sigma_action(&self, i: usize, s: &EnvElement) -> Result<EnvElement> {
        if i == 0 || i >= s.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: s.len(),
            });
        }
        let mut seq = s.seq.clone();
        let (a, b) = (seq[i - 1], seq[i]);
        seq[i - 1] = self.op(a, b);
        seq[i] = a;
        Ok(EnvElement { seq })
    }

    /// `(a_1 ∘ ... ∘ a_n) · (b_1 ∘ ... ∘ b_m)`: the `k`-th entry is
    /// `a_1 · (a_2 · ( ... (a_n · b_k)))`.
    pub fn env_dot(&self, u: &EnvElement, v: &EnvElement) -> EnvElement {
        let seq = v
            .seq
            .iter()
            .map(|&b| u.seq.iter().rev().fold(b, |acc, &a| self.op(a, acc)))
            .collect();
        EnvElement { seq }
    }

    /// `u ∘ v`: concatenation.
    pub fn env_circ(&self, u: &EnvElement, v: &EnvElement) -> EnvElement {
        let mut seq = u.seq.clone();
        seq.extend_from_slice(&v.seq);
        EnvElement { seq }
    }

    /// Decides whether `u` and `v` have a common image under the positive braid
    /// action, exploring at most `depth` σ-applications from each side.
    pub fn orbit_eq(&self, u: &EnvElement, v: &EnvElement, depth: usize) -> OrbitAnswer {
        if u.len() != v.len() {
            return OrbitAnswer::No;
        }
        let (ru, closed_u) = self.reachable(u, depth);
        let (rv, closed_v) = self.reachable(v, depth);
        if !ru.is_disjoint(&rv) {
            OrbitAnswer::Yes
        } else if closed_u && closed_v {
            OrbitAnswer::No
        } else {
            OrbitAnswer::Unknown
        }
    }

    /// [`LDTable::orbit_eq`] with a budget large enough to enumerate both orbits.
    pub fn orbit_eq_exact(&self, u: &EnvElement, v: &EnvElement) -> bool {
        let budget = (self.size as usize).saturating_pow(u.len().max(v.len()) as u32);
        self.orbit_eq(u, v, budget) == OrbitAnswer::Yes
    }

    /// Breadth-first closure of `start` under the σ_i. The flag reports whether the
    /// whole orbit was enumerated within `depth` levels.
    fn reachable(&self, start: &EnvElement, depth: usize) -> (HashSet<Vec<u32>>, bool) {
        let mut seen = HashSet::from([start.seq.clone()]);
        let mut queue = VecDeque::from([(start.seq.clone(), 0usize)]);
        let mut closed = true;
        while let Some((seq, d)) = queue.pop_front() {
            for i in 1..seq.len() {
                let mut next = seq.clone();
                next[i - 1] = self.op(seq[i - 1], seq[i]);
                next[i] = seq[i - 1];
                if seen.contains(&next) {
                    continue;
                }
                if d == depth {
                    closed = false;
                    continue;
                }
                seen.insert(next.clone());
                queue.push_back((next, d + 1));
            }
        }
        (seen, closed)
    }
}

impl FromStr for LDTable {
    type Err = Error;

    /// First line: the size `n`. Then `n` rows of `n` whitespace-separated ids.
    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s.lines().filter(|l| !l.trim().is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidTable("empty table file".into()))?;
        let size: usize = header
            .trim()
            .parse()
            .map_err(|_| Error::InvalidTable(format!("bad size line `{}`", header.trim())))?;
        let rows = lines
            .enumerate()
            .map(|(r, line)| {
                line.split_whitespace()
                    .map(|tok| {
                        tok.parse::<u32>().map_err(|_| {
                            Error::InvalidTable(format!("row {}: bad entry `{tok}`", r + 1))
                        })
                    })
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if rows.len() != size {
            return Err(Error::InvalidTable(format!(
                "expected {size} rows, found {}",
                rows.len()
            )));
        }
        LDTable::new(rows)
    }
}

impl fmt::Display for LDTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.size)?;
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// A nonempty ∘-sequence of table elements.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EnvElement {
    seq: Vec<u32>,
}

impl EnvElement {
    /// # Panics
    /// If `seq` is empty.
    pub fn new(seq: Vec<u32>) -> Self {
        assert!(!seq.is_empty(), "envelope elements are nonempty sequences");
        Self { seq }
    }

    /// The canonical embedding of a single table element.
    pub fn single(a: u32) -> Self {
        Self::new(vec![a])
    }

    pub fn seq(&self) -> &[u32] {
        &self.seq
    }

    /// The canonical homomorphism to the positive integers.
    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for EnvElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.seq.iter().map(u32::to_string).collect();
        f.write_str(&cells.join(","))
    }
}

impl FromStr for EnvElement {
    type Err = Error;

    /// Comma-separated ids, e.g. `1,3,2`.
    fn from_str(s: &str) -> Result<Self> {
        let seq = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidTable(format!("bad element id `{}`", tok.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        if seq.contains(&0) {
            return Err(Error::InvalidTable("element ids start at 1".into()));
        }
        Ok(Self { seq })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrbitAnswer {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for OrbitAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrbitAnswer::Yes => "Yes",
            OrbitAnswer::No => "No",
            OrbitAnswer::Unknown => "Unknown",
        })
    }
}

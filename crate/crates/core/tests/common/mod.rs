#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use sbraid::{Direction, FLetter, FWord, Generator, LDTable, LDTerm, RWord, Relation, XWord};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn w(s: &str) -> RWord {
    s.parse().unwrap()
}

/// A braid word with `len` letters and indices in `1..=max`.
pub fn braid(rng: &mut impl Rng, len: usize, max: u32) -> RWord {
    (0..len)
        .map(|_| Generator::sigma_signed(rng.gen_range(1..=max), rng.gen()))
        .collect()
}

/// A monoid word with `len` letters; about a third of them are merges.
pub fn rword(rng: &mut impl Rng, len: usize, max: u32) -> RWord {
    (0..len)
        .map(|_| {
            let i = rng.gen_range(1..=max);
            match rng.gen_range(0..3) {
                0 => Generator::x(i),
                1 => Generator::sigma(i),
                _ => Generator::sigma_inv(i),
            }
        })
        .collect()
}

/// A braid word with at least one `s_1`, no `s_1^-1`, and other letters `s_i^{±1}`, `i >= 2`.
pub fn sigma1_positive(rng: &mut impl Rng, len: usize, max: u32) -> RWord {
    let mut letters: Vec<Generator> = (0..len)
        .map(|_| match rng.gen_range(1..=max) {
            1 => Generator::sigma(1),
            i => Generator::sigma_signed(i, rng.gen()),
        })
        .collect();
    let at = rng.gen_range(0..=letters.len());
    letters.insert(at, Generator::sigma(1));
    RWord::new(letters)
}

pub fn fword(rng: &mut impl Rng, len: usize, max: u32) -> FWord {
    FWord::reduce((0..len).map(|_| {
        let i = rng.gen_range(1..=max);
        if rng.gen() {
            FLetter::pos(i)
        } else {
            FLetter::neg(i)
        }
    }))
}

pub fn xword(rng: &mut impl Rng, len: usize, max: u32) -> XWord {
    XWord::new((0..len).map(|_| rng.gen_range(1..=max)).collect())
}

/// Applies `steps` random relation rewrites (either direction) wherever one matches.
pub fn relation_walk(rng: &mut impl Rng, start: &RWord, steps: usize, rules: &[Relation]) -> RWord {
    let mut cur = start.clone();
    for _ in 0..steps {
        let mut moves = Vec::new();
        for &rule in rules {
            for pos in 0..=cur.len() {
                for dir in [Direction::LeftToRight, Direction::RightToLeft] {
                    if let Ok(next) = cur.apply_relation(rule, pos, dir) {
                        moves.push(next);
                    }
                }
            }
        }
        match moves.choose(rng) {
            Some(next) => cur = next.clone(),
            None => break,
        }
    }
    cur
}

pub fn term(rng: &mut impl Rng, depth: usize) -> LDTerm {
    if depth == 0 || rng.gen_range(0..4) == 0 {
        return LDTerm::Leaf;
    }
    let (l, r) = (term(rng, depth - 1), term(rng, depth - 1));
    if rng.gen() {
        LDTerm::dot(l, r)
    } else {
        LDTerm::circ(l, r)
    }
}

/// A random LD table on `size` elements, found by randomized backtracking over the
/// cells in row-major order, pruning on every fully-determined triple.
pub fn random_ld_table(rng: &mut impl Rng, size: u32) -> LDTable {
    let n = size as usize;
    let mut cells = vec![0u32; n * n];
    assert!(fill(rng, &mut cells, n, 0), "a trivial table always exists");
    LDTable::new(cells.chunks(n).map(<[u32]>::to_vec).collect()).unwrap()
}

fn fill(rng: &mut impl Rng, cells: &mut [u32], n: usize, k: usize) -> bool {
    if k == cells.len() {
        return true;
    }
    let mut values: Vec<u32> = (1..=n as u32).collect();
    values.shuffle(rng);
    for v in values {
        cells[k] = v;
        if consistent(cells, n) && fill(rng, cells, n, k + 1) {
            return true;
        }
    }
    cells[k] = 0;
    false
}

fn consistent(cells: &[u32], n: usize) -> bool {
    let op = |a: u32, b: u32| cells[(a as usize - 1) * n + b as usize - 1];
    for a in 1..=n as u32 {
        for b in 1..=n as u32 {
            for c in 1..=n as u32 {
                let (bc, ab, ac) = (op(b, c), op(a, b), op(a, c));
                if bc == 0 || ab == 0 || ac == 0 {
                    continue;
                }
                let (l, r) = (op(a, bc), op(ab, ac));
                if l != 0 && r != 0 && l != r {
                    return false;
                }
            }
        }
    }
    true
}

/// The fixed LD tables of size at most four used across the suites.
pub fn fixed_tables() -> Vec<LDTable> {
    let mut out = vec![
        LDTable::trivial(),
        LDTable::from_fn(3, |_, b| b).unwrap(),
        LDTable::from_fn(4, |a, _| a).unwrap(),
        LDTable::cyclic(3).unwrap(),
        LDTable::cyclic(4).unwrap(),
        LDTable::laver(1),
        LDTable::laver(2),
        // the permutation rack a·b = f(b) with f = (1 2 3 4)
        LDTable::from_fn(4, |_, b| b % 4 + 1).unwrap(),
    ];
    out.push(LDTable::from_fn(3, |_, b| [2, 1, 3][b as usize - 1]).unwrap());
    out
}

/// Fixed tables plus `extra` randomly generated ones of size 2..=4.
pub fn ld_tables(rng: &mut impl Rng, extra: usize) -> Vec<LDTable> {
    let mut out = fixed_tables();
    out.extend((0..extra).map(|_| {
        let size = rng.gen_range(2..=4);
        random_ld_table(rng, size)
    }));
    out
}

pub fn env_seq(rng: &mut impl Rng, table: &LDTable, max_len: usize) -> sbraid::EnvElement {
    let len = rng.gen_range(1..=max_len);
    sbraid::EnvElement::new((0..len).map(|_| rng.gen_range(1..=table.size())).collect())
}

//! Braid coloring: a multi-braid word on `n` top strands as a morphism from the free
//! group on its bottom strands to the free group on its top strands.
//!
//! Colors are read from the top. A crossing `s_i` turns the colors `(g, h)` at
//! positions `i, i+1` into `(g h g^-1, g)`, `s_i^-1` turns them into `(h, h^-1 g h)`,
//! and `x_i` merges them into `g h`. Letters are processed left to right, and indices
//! refer to the current, shrinking, strand configuration.

use std::fmt;

use crate::error::{Error, Result};
use crate::freegroup::FWord;
use crate::word::{Kind, RWord};

/// A morphism `F_m -> F_n`, given by the images of `e_1 ..= e_m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ColoredMorphism {
    source_rank: u32,
    target_rank: u32,
    images: Vec<FWord>,
}

impl ColoredMorphism {
    pub fn identity(n: u32) -> Self {
        Self {
            source_rank: n,
            target_rank: n,
            images: (1..=n).map(FWord::generator).collect(),
        }
    }

    /// Number of bottom strands.
    pub fn source_rank(&self) -> u32 {
        self.source_rank
    }

    /// Number of top strands.
    pub fn target_rank(&self) -> u32 {
        self.target_rank
    }

    pub fn images(&self) -> &[FWord] {
        &self.images
    }

    /// Applies the morphism to a word over `e_1 ..= e_m`.
    ///
    /// # Panics
    /// If `w` mentions a generator beyond the source rank.
    pub fn apply(&self, w: &FWord) -> FWord {
        w.substitute(|j| {
            assert!(j <= self.source_rank, "e{j} is outside the source rank");
            self.images[j as usize - 1].clone()
        })
    }
}

impl fmt::Display for ColoredMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, img) in self.images.iter().enumerate() {
            let shown = if img.is_empty() {
                "1".to_string()
            } else {
                img.to_string()
            };
            writeln!(f, "e{} -> {shown}", k + 1)?;
        }
        Ok(())
    }
}

/// Colors `w` on `n_top` strands.
pub fn color(w: &RWord, n_top: u32) -> Result<ColoredMorphism> {
    assert!(n_top >= 1, "at least one strand is needed");
    let mut colors: Vec<FWord> = (1..=n_top).map(FWord::generator).collect();
    for (position, &g) in w.letters().iter().enumerate() {
        let i = g.index() as usize;
        if i + 1 > colors.len() {
            return Err(Error::InvalidStrandIndex {
                letter: g.to_string(),
                position,
                needed: i as u32 + 1,
                available: colors.len() as u32,
            });
        }
        let (a, b) = (colors[i - 1].clone(), colors[i].clone());
        match g.kind() {
            Kind::Sigma => {
                colors[i - 1] = a.mul(&b).mul(&a.inv());
                colors[i] = a;
            }
            Kind::SigmaInv => {
                colors[i - 1] = b.clone();
                colors[i] = b.inv().mul(&a).mul(&b);
            }
            Kind::X => {
                colors[i - 1] = a.mul(&b);
                colors.remove(i);
            }
        }
    }
    Ok(ColoredMorphism {
        source_rank: colors.len() as u32,
        target_rank: n_top,
        images: colors,
    })
}

/// `f ∘ g`: first `g`, then `f`. Coloring reverses composition, so
/// `color(u v) = compose_colored(color(u), color(v))`.
pub fn compose_colored(f: &ColoredMorphism, g: &ColoredMorphism) -> Result<ColoredMorphism> {
    if f.source_rank != g.target_rank {
        return Err(Error::RankMismatch {
            source_rank: f.source_rank,
            target_rank: g.target_rank,
        });
    }
    Ok(ColoredMorphism {
        source_rank: g.source_rank,
        target_rank: f.target_rank,
        images: g.images.iter().map(|img| f.apply(img)).collect(),
    })
}

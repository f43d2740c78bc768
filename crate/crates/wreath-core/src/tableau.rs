//! Tableaux: the level-indexed coordinate form for elements of iterated
//! wreath products acting on a rooted tree.
//!
//! A tableau for tree degrees `(n_1, ..., n_k)` stores one permutation per
//! tree vertex above the leaves: level `i` (0-based internally) holds
//! `n_1 * ... * n_i` entries of degree `n_(i+1)`. The entry at a vertex
//! permutes the children of that vertex. Acting on a path through the tree,
//! each coordinate is moved by the entry at the vertex reached by the
//! *original* path prefix, which makes composition, inversion, and the leaf
//! action all expressible in closed form.
//!
//! Vertices of a level are indexed in mixed radix, most significant digit
//! first, so that the leaf action of a tableau becomes an ordinary
//! permutation of `n_1 * ... * n_k` points.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::perm::Perm;
use crate::{Error, Result};

/// Tree degrees `(n_1, ..., n_k)`, all at least 2, with overflow-checked
/// level widths.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WreathSpec {
    degrees: Vec<usize>,
}

impl WreathSpec {
    pub fn new(degrees: Vec<usize>) -> Result<WreathSpec> {
        if degrees.is_empty() {
            return Err(Error::BadParameter(String::from(
                "at least one level is required",
            )));
        }
        let mut width = 1usize;
        for &n in &degrees {
            if n < 2 {
                return Err(Error::BadParameter(String::from(
                    "level degrees must be at least 2",
                )));
            }
            width = width
                .checked_mul(n)
                .ok_or_else(|| Error::BadParameter(String::from("degree product overflows")))?;
        }
        Ok(WreathSpec { degrees })
    }

    pub fn depth(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Number of vertices at 0-based level `i`: the product of the degrees
    /// above it.
    pub fn level_width(&self, i: usize) -> usize {
        self.degrees[..i].iter().product()
    }

    pub fn leaf_count(&self) -> usize {
        self.degrees.iter().product()
    }

    /// Mixed-radix index of the vertex reached by `path` (most significant
    /// digit first).
    pub fn vertex_index(&self, path: &[usize]) -> usize {
        let mut v = 0usize;
        for (j, &x) in path.iter().enumerate() {
            v = v * self.degrees[j] + x;
        }
        v
    }

    /// Inverse of `vertex_index` for a vertex at 0-based level `level`.
    pub fn vertex_path(&self, level: usize, index: usize) -> Vec<usize> {
        let mut digits = vec![0usize; level];
        let mut rest = index;
        for j in (0..level).rev() {
            digits[j] = rest % self.degrees[j];
            rest /= self.degrees[j];
        }
        digits
    }
}

/// Summary of where a tableau is active and how its level parities fall.
pub struct Classification {
    /// 1-based index of the shallowest level with a nontrivial entry;
    /// `None` for the identity.
    pub first_active_level: Option<usize>,
    /// Sum of the entry ranks at each level.
    pub level_rank_sums: Vec<usize>,
    /// Parity (0 even, 1 odd) of each level rank sum.
    pub level_parities: Vec<u8>,
    /// 1-based levels `i` such that the tableau is trivial above level `i`
    /// and every level rank sum is even; these are exactly the nested
    /// parity kernels the tableau belongs to.
    pub parity_kernel_levels: Vec<usize>,
    /// Extra flags that only make sense for two-level tableaux.
    pub depth_two: Option<DepthTwoFlags>,
}

pub struct DepthTwoFlags {
    pub top_trivial: bool,
    /// Top trivial and the base rank sum even.
    pub in_even_kernel: bool,
    /// Top trivial and all base entries of one common parity.
    pub in_uniform_parity_kernel: bool,
}

/// One permutation per tree vertex, level by level. Level `i` has
/// `n_1 * ... * n_i` entries of degree `n_(i+1)`; the shape determines the
/// tree, so a tableau is self-describing.
#[derive(Clone, PartialEq, Eq)]
pub struct Tableau {
    levels: Vec<Vec<Perm>>,
}

impl Tableau {
    pub fn new(levels: Vec<Vec<Perm>>) -> Result<Tableau> {
        if levels.is_empty() || levels[0].len() != 1 {
            return Err(Error::BadParameter(String::from(
                "a tableau needs levels with widths 1, n_1, n_1*n_2, ...",
            )));
        }
        let mut width = 1usize;
        for (i, level) in levels.iter().enumerate() {
            if level.len() != width {
                return Err(Error::BadParameter(format!(
                    "level {} has {} entries, expected {}",
                    i + 1,
                    level.len(),
                    width
                )));
            }
            let n = level[0].degree();
            if n < 2 {
                return Err(Error::BadParameter(String::from(
                    "level degrees must be at least 2",
                )));
            }
            for e in level {
                if e.degree() != n {
                    return Err(Error::DegreeMismatch {
                        left: n,
                        right: e.degree(),
                    });
                }
            }
            width = width
                .checked_mul(n)
                .ok_or_else(|| Error::BadParameter(String::from("degree product overflows")))?;
        }
        Ok(Tableau { levels })
    }

    pub fn identity(spec: &WreathSpec) -> Tableau {
        let levels = spec
            .degrees()
            .iter()
            .enumerate()
            .map(|(i, &n)| vec![Perm::identity(n); spec.level_width(i)])
            .collect();
        Tableau { levels }
    }

    /// Identity everywhere except a single entry.
    pub fn elementary(spec: &WreathSpec, level: usize, vertex: usize, p: Perm) -> Result<Tableau> {
        if level >= spec.depth() || vertex >= spec.level_width(level) {
            return Err(Error::BadParameter(String::from(
                "entry position outside the tree",
            )));
        }
        if p.degree() != spec.degrees()[level] {
            return Err(Error::DegreeMismatch {
                left: spec.degrees()[level],
                right: p.degree(),
            });
        }
        let mut t = Tableau::identity(spec);
        t.levels[level][vertex] = p;
        Ok(t)
    }

    pub fn spec(&self) -> WreathSpec {
        WreathSpec {
            degrees: self.levels.iter().map(|l| l[0].degree()).collect(),
        }
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn levels(&self) -> &[Vec<Perm>] {
        &self.levels
    }

    pub fn entry(&self, level: usize, vertex: usize) -> &Perm {
        &self.levels[level][vertex]
    }

    pub fn is_identity(&self) -> bool {
        self.levels
            .iter()
            .all(|l| l.iter().all(|p| p.is_identity()))
    }

    fn same_shape(&self, other: &Tableau) -> bool {
        self.levels.len() == other.levels.len()
            && self
                .levels
                .iter()
                .zip(&other.levels)
                .all(|(a, b)| a.len() == b.len() && a[0].degree() == b[0].degree())
    }

    /// Image of a (possibly partial) path down the tree: coordinate `i` is
    /// moved by the entry at the vertex selected by the original prefix
    /// `path[..i]`.
    pub fn act(&self, path: &[usize]) -> Result<Vec<usize>> {
        if path.len() > self.levels.len() {
            return Err(Error::BadParameter(String::from(
                "path longer than the tree is deep",
            )));
        }
        let spec = self.spec();
        let mut out = Vec::with_capacity(path.len());
        for (i, &x) in path.iter().enumerate() {
            let entry = &self.levels[i][spec.vertex_index(&path[..i])];
            if x >= entry.degree() {
                return Err(Error::BadParameter(String::from(
                    "path coordinate outside the level degree",
                )));
            }
            out.push(entry.apply(x));
        }
        Ok(out)
    }

    /// Product acting as `self` first, then `other` (matching
    /// `Perm::compose`): the result's entry at a vertex composes this
    /// tableau's entry there with the other's entry at the image vertex.
    pub fn multiply(&self, other: &Tableau) -> Result<Tableau> {
        if !self.same_shape(other) {
            return Err(Error::BadParameter(String::from("tableau shapes differ")));
        }
        let spec = self.spec();
        let mut levels = Vec::with_capacity(self.levels.len());
        for (i, level) in self.levels.iter().enumerate() {
            let mut out = Vec::with_capacity(level.len());
            for (v, entry) in level.iter().enumerate() {
                let path = spec.vertex_path(i, v);
                let image = spec.vertex_index(&self.act(&path)?);
                out.push(entry.compose(&other.levels[i][image])?);
            }
            levels.push(out);
        }
        Ok(Tableau { levels })
    }

    pub fn inverse(&self) -> Tableau {
        let spec = self.spec();
        let mut levels: Vec<Vec<Perm>> = self
            .levels
            .iter()
            .map(|l| vec![Perm::identity(l[0].degree()); l.len()])
            .collect();
        for (i, level) in self.levels.iter().enumerate() {
            for (v, entry) in level.iter().enumerate() {
                let path = spec.vertex_path(i, v);
                let image = spec.vertex_index(&self.act(&path).expect("own path is valid"));
                levels[i][image] = entry.inverse();
            }
        }
        Tableau { levels }
    }

    /// The tableau as a permutation of the leaves, in mixed-radix leaf
    /// order.
    pub fn leaf_permutation(&self) -> Perm {
        let spec = self.spec();
        let leaves = spec.leaf_count();
        let depth = spec.depth();
        let mut img = vec![0usize; leaves];
        for (leaf, slot) in img.iter_mut().enumerate() {
            let path = spec.vertex_path(depth, leaf);
            let image = self.act(&path).expect("own path is valid");
            *slot = spec.vertex_index(&image);
        }
        Perm::new(img).expect("tableau action is a bijection")
    }

    /// 1-based index of the shallowest level with a nontrivial entry.
    pub fn first_active_level(&self) -> Option<usize> {
        self.levels
            .iter()
            .position(|l| l.iter().any(|p| !p.is_identity()))
            .map(|i| i + 1)
    }

    pub fn level_rank_sums(&self) -> Vec<usize> {
        self.levels
            .iter()
            .map(|l| l.iter().map(Perm::rank).sum())
            .collect()
    }

    pub fn level_parities(&self) -> Vec<u8> {
        self.level_rank_sums()
            .iter()
            .map(|&s| (s % 2) as u8)
            .collect()
    }

    pub fn classify(&self) -> Classification {
        let level_rank_sums = self.level_rank_sums();
        let level_parities: Vec<u8> = level_rank_sums.iter().map(|&s| (s % 2) as u8).collect();
        let first_active_level = self.first_active_level();
        let all_even = level_parities.iter().all(|&p| p == 0);
        let parity_kernel_levels = if all_even {
            let bound = first_active_level.unwrap_or(self.levels.len());
            (1..=bound).collect()
        } else {
            Vec::new()
        };
        let depth_two = if self.levels.len() == 2 {
            let top_trivial = self.levels[0][0].is_identity();
            let base = &self.levels[1];
            let even_count = base.iter().filter(|p| p.is_even()).count();
            Some(DepthTwoFlags {
                top_trivial,
                in_even_kernel: top_trivial && level_rank_sums[1].is_multiple_of(2),
                in_uniform_parity_kernel: top_trivial
                    && (even_count == base.len() || even_count == 0),
            })
        } else {
            None
        };
        Classification {
            first_active_level,
            level_rank_sums,
            level_parities,
            parity_kernel_levels,
            depth_two,
        }
    }

    /// Parses the bracketed level list written by `Display`, e.g.
    /// `[(1,2,3)];[(1,2),(1,2),()]`. The spec supplies entry degrees.
    pub fn parse(s: &str, spec: &WreathSpec) -> Result<Tableau> {
        let mut levels = Vec::with_capacity(spec.depth());
        let parts: Vec<&str> = s.split(';').collect();
        if parts.len() != spec.depth() {
            return Err(Error::Parse(format!(
                "expected {} levels, found {}",
                spec.depth(),
                parts.len()
            )));
        }
        for (i, part) in parts.iter().enumerate() {
            let part = part.trim();
            let body = part
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("level {} is not bracketed", i + 1)))?;
            let entries = split_top_level(body);
            if entries.len() != spec.level_width(i) {
                return Err(Error::Parse(format!(
                    "level {} has {} entries, expected {}",
                    i + 1,
                    entries.len(),
                    spec.level_width(i)
                )));
            }
            let mut level = Vec::with_capacity(entries.len());
            for e in entries {
                level.push(Perm::parse(e.trim(), spec.degrees()[i])?);
            }
            levels.push(level);
        }
        Tableau::new(levels)
    }
}

/// Splits on commas that are outside parentheses.
fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, level) in self.levels.iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            write!(f, "[")?;
            for (v, p) in level.iter().enumerate() {
                if v > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", p)?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

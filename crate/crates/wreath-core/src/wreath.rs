//! Iterated wreath products of symmetric and alternating groups, realized
//! as permutation groups on the leaves of the underlying rooted tree.
//!
//! A product is described by a string such as `S3*A4*S2`: the leftmost
//! factor acts at the top of the tree, each further factor acts at every
//! vertex of the next level down. The group is generated by one standard
//! generating set per vertex, embedded as single-entry tableaux.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use crate::group::Group;
use crate::perm::Perm;
use crate::tableau::{Tableau, WreathSpec};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LevelKind {
    Symmetric,
    Alternating,
}

impl LevelKind {
    /// Order of the point group of this kind at the given degree.
    pub fn order(self, degree: usize) -> BigUint {
        let full = factorial(degree);
        match self {
            LevelKind::Symmetric => full,
            LevelKind::Alternating => full / 2u8,
        }
    }

    pub fn letter(self) -> char {
        match self {
            LevelKind::Symmetric => 'S',
            LevelKind::Alternating => 'A',
        }
    }
}

pub fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::from(1u8);
    for i in 2..=n {
        acc *= BigUint::from(i);
    }
    acc
}

/// Standard generators for a symmetric or alternating group of the given
/// degree, on 0-based points.
pub fn standard_generators(kind: LevelKind, degree: usize) -> Vec<Perm> {
    match kind {
        LevelKind::Symmetric => {
            let mut gens =
                vec![Perm::from_cycles(degree, &[(0..degree).collect()])
                    .expect("full cycle is valid")];
            if degree > 2 {
                gens.push(Perm::from_cycles(degree, &[vec![0, 1]]).expect("swap is valid"));
            }
            gens
        }
        LevelKind::Alternating => {
            if degree < 3 {
                return Vec::new();
            }
            let mut gens =
                vec![Perm::from_cycles(degree, &[vec![0, 1, 2]]).expect("3-cycle is valid")];
            if degree > 3 {
                let cycle: Vec<usize> = if degree % 2 == 1 {
                    (0..degree).collect()
                } else {
                    (1..degree).collect()
                };
                gens.push(Perm::from_cycles(degree, &[cycle]).expect("even cycle is valid"));
            }
            gens
        }
    }
}

/// Parses a product description like `S3*A4*S2` into degrees and kinds,
/// leftmost factor on top.
pub fn parse_product(s: &str) -> Result<(WreathSpec, Vec<LevelKind>)> {
    let mut degrees = Vec::new();
    let mut kinds = Vec::new();
    for token in s.split('*') {
        let token = token.trim();
        let mut chars = token.chars();
        let kind = match chars.next() {
            Some('S') => LevelKind::Symmetric,
            Some('A') => LevelKind::Alternating,
            _ => {
                return Err(Error::Parse(format!(
                    "factor '{}' must start with S or A",
                    token
                )))
            }
        };
        let digits = chars.as_str();
        let degree: usize = digits
            .parse()
            .map_err(|_| Error::Parse(format!("factor '{}' has no valid degree", token)))?;
        if degree < 2 {
            return Err(Error::Parse(format!(
                "factor '{}' needs degree at least 2",
                token
            )));
        }
        degrees.push(degree);
        kinds.push(kind);
    }
    Ok((WreathSpec::new(degrees)?, kinds))
}

/// An iterated wreath product together with its realization as a
/// permutation group on the tree leaves.
pub struct WreathProduct {
    spec: WreathSpec,
    kinds: Vec<LevelKind>,
    group: Group,
    generator_tableaux: Vec<Tableau>,
}

impl WreathProduct {
    /// Builds the group from one standard generating set per tree vertex.
    /// Fails when the tree has more than `leaf_limit` leaves.
    pub fn build(
        spec: WreathSpec,
        kinds: Vec<LevelKind>,
        leaf_limit: u64,
    ) -> Result<WreathProduct> {
        if kinds.len() != spec.depth() {
            return Err(Error::WrongSpecDepth {
                expected: spec.depth(),
                got: kinds.len(),
            });
        }
        let leaves = spec.leaf_count();
        if leaves as u64 > leaf_limit {
            return Err(Error::LeafLimitExceeded {
                leaves: leaves as u64,
                limit: leaf_limit,
            });
        }
        let mut generator_tableaux = Vec::new();
        for (i, (&n, &kind)) in spec.degrees().iter().zip(&kinds).enumerate() {
            for v in 0..spec.level_width(i) {
                for p in standard_generators(kind, n) {
                    generator_tableaux.push(Tableau::elementary(&spec, i, v, p)?);
                }
            }
        }
        let perms: Vec<Perm> = generator_tableaux
            .iter()
            .map(Tableau::leaf_permutation)
            .collect();
        let group = Group::new(leaves, perms)?;
        Ok(WreathProduct {
            spec,
            kinds,
            group,
            generator_tableaux,
        })
    }

    pub fn parse_and_build(s: &str, leaf_limit: u64) -> Result<WreathProduct> {
        let (spec, kinds) = parse_product(s)?;
        WreathProduct::build(spec, kinds, leaf_limit)
    }

    pub fn spec(&self) -> &WreathSpec {
        &self.spec
    }

    pub fn kinds(&self) -> &[LevelKind] {
        &self.kinds
    }

    /// The realized permutation group on the leaves.
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn generator_tableaux(&self) -> &[Tableau] {
        &self.generator_tableaux
    }

    pub fn order(&self) -> BigUint {
        self.group.order()
    }

    /// Order the product must have: the kind order at each level, raised to
    /// the number of vertices on that level.
    pub fn expected_order(&self) -> BigUint {
        let mut acc = BigUint::from(1u8);
        for (i, (&n, &kind)) in self.spec.degrees().iter().zip(&self.kinds).enumerate() {
            acc *= kind.order(n).pow(self.spec.level_width(i) as u32);
        }
        acc
    }

    /// Order of the kernel of the projection onto the top `top_levels`
    /// levels: everything below ranges freely.
    pub fn kernel_order(&self, top_levels: usize) -> Result<BigUint> {
        if top_levels > self.spec.depth() {
            return Err(Error::BadParameter(String::from(
                "projection depth exceeds the tree depth",
            )));
        }
        let mut acc = BigUint::from(1u8);
        for (i, (&n, &kind)) in self.spec.degrees().iter().zip(&self.kinds).enumerate() {
            if i >= top_levels {
                acc *= kind.order(n).pow(self.spec.level_width(i) as u32);
            }
        }
        Ok(acc)
    }

    pub fn tableau_to_perm(&self, t: &Tableau) -> Result<Perm> {
        if t.spec() != self.spec {
            return Err(Error::BadParameter(String::from(
                "tableau shape does not match the product",
            )));
        }
        Ok(t.leaf_permutation())
    }

    /// Reads a leaf permutation back into tableau form. Fails with
    /// `NotBlockStructured` when the permutation does not preserve the tree.
    pub fn perm_to_tableau(&self, p: &Perm) -> Result<Tableau> {
        let leaves = self.spec.leaf_count();
        if p.degree() != leaves {
            return Err(Error::DegreeMismatch {
                left: leaves,
                right: p.degree(),
            });
        }
        let depth = self.spec.depth();
        let mut levels = Vec::with_capacity(depth);
        for (i, &n) in self.spec.degrees().iter().enumerate() {
            let mut level = Vec::with_capacity(self.spec.level_width(i));
            for v in 0..self.spec.level_width(i) {
                let prefix = self.spec.vertex_path(i, v);
                let mut img = vec![0usize; n];
                for (x, slot) in img.iter_mut().enumerate() {
                    // probe with the first leaf under child x of this vertex
                    let mut path = prefix.clone();
                    path.push(x);
                    path.resize(depth, 0);
                    let leaf = self.spec.vertex_index(&path);
                    let image_path = self.spec.vertex_path(depth, p.apply(leaf));
                    *slot = image_path[i];
                }
                level.push(Perm::new(img).map_err(|_| Error::NotBlockStructured)?);
            }
            levels.push(level);
        }
        let t = Tableau::new(levels)?;
        if &t.leaf_permutation() != p {
            return Err(Error::NotBlockStructured);
        }
        Ok(t)
    }

    /// Truncation to the top `top_levels` levels, the image of the natural
    /// projection homomorphism.
    pub fn project(&self, t: &Tableau, top_levels: usize) -> Result<Tableau> {
        if t.spec() != self.spec {
            return Err(Error::BadParameter(String::from(
                "tableau shape does not match the product",
            )));
        }
        if top_levels == 0 || top_levels > self.spec.depth() {
            return Err(Error::BadParameter(String::from(
                "projection depth must be between 1 and the tree depth",
            )));
        }
        Tableau::new(t.levels()[..top_levels].to_vec())
    }

    /// Canonical description string, e.g. `S3*A4`.
    pub fn describe(&self) -> String {
        let mut s = String::new();
        for (i, (&n, &kind)) in self.spec.degrees().iter().zip(&self.kinds).enumerate() {
            if i > 0 {
                s.push('*');
            }
            s.push(kind.letter());
            s.push_str(&format!("{}", n));
        }
        s
    }
}

impl fmt::Display for WreathProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::SeededRng;

    #[test]
    fn parse_accepts_products_and_rejects_junk() {
        let (spec, kinds) = parse_product("S3*A4*S2").unwrap();
        assert_eq!(spec.degrees(), &[3, 4, 2]);
        assert_eq!(
            kinds,
            vec![
                LevelKind::Symmetric,
                LevelKind::Alternating,
                LevelKind::Symmetric
            ]
        );
        assert!(parse_product("").is_err());
        assert!(parse_product("S1").is_err());
        assert!(parse_product("X3").is_err());
        assert!(parse_product("S3**S3").is_err());
        assert!(parse_product("S3*").is_err());
        assert!(parse_product("S").is_err());
    }

    #[test]
    fn orders_match_the_closed_form() {
        for desc in ["S2*S2", "S3*S3", "A3*S3", "S3*A3", "S2*S3*S2", "A4*A3"] {
            let w = WreathProduct::parse_and_build(desc, 10_000).unwrap();
            assert_eq!(w.order(), w.expected_order(), "order of {}", desc);
        }
        let w = WreathProduct::parse_and_build("S3*S3", 10_000).unwrap();
        assert_eq!(w.order(), BigUint::from(1296u32));
        let w = WreathProduct::parse_and_build("A3*S3", 10_000).unwrap();
        assert_eq!(w.order(), BigUint::from(648u32));
        let w = WreathProduct::parse_and_build("S2*S2", 10_000).unwrap();
        assert_eq!(w.order(), BigUint::from(8u8));
    }

    #[test]
    fn leaf_limit_is_enforced() {
        assert!(matches!(
            WreathProduct::parse_and_build("S10*S10*S10", 100),
            Err(Error::LeafLimitExceeded {
                leaves: 1000,
                limit: 100
            })
        ));
    }

    #[test]
    fn kernel_orders() {
        let w = WreathProduct::parse_and_build("S3*S3", 10_000).unwrap();
        assert_eq!(w.kernel_order(0).unwrap(), BigUint::from(1296u32));
        assert_eq!(w.kernel_order(1).unwrap(), BigUint::from(216u32));
        assert_eq!(w.kernel_order(2).unwrap(), BigUint::from(1u32));
        assert!(w.kernel_order(3).is_err());
    }

    #[test]
    fn tableau_roundtrip_through_leaf_permutations() {
        let w = WreathProduct::parse_and_build("S3*S3", 10_000).unwrap();
        let mut rng = SeededRng::new(11);
        for _ in 0..40 {
            let p = w.group().random_element(&mut rng);
            let t = w.perm_to_tableau(&p).unwrap();
            assert_eq!(w.tableau_to_perm(&t).unwrap(), p);
        }
    }

    #[test]
    fn non_members_are_not_block_structured() {
        let w = WreathProduct::parse_and_build("S3*S3", 10_000).unwrap();
        // swaps a leaf of the first block with a leaf of the second
        let p = Perm::parse("(3,4)", 9).unwrap();
        assert!(matches!(
            w.perm_to_tableau(&p),
            Err(Error::NotBlockStructured)
        ));
        assert!(!w.group().contains(&p));
    }

    #[test]
    fn alternating_levels_restrict_entries() {
        let w = WreathProduct::parse_and_build("S3*A3", 10_000).unwrap();
        let spec = w.spec().clone();
        let odd = Tableau::elementary(&spec, 1, 0, Perm::parse("(1,2)", 3).unwrap()).unwrap();
        assert!(!w.group().contains(&w.tableau_to_perm(&odd).unwrap()));
        let even = Tableau::elementary(&spec, 1, 0, Perm::parse("(1,2,3)", 3).unwrap()).unwrap();
        assert!(w.group().contains(&w.tableau_to_perm(&even).unwrap()));
    }

    #[test]
    fn projection_is_a_homomorphism_on_samples() {
        let w = WreathProduct::parse_and_build("S2*S3*S2", 10_000).unwrap();
        let mut rng = SeededRng::new(5);
        for _ in 0..25 {
            let a = w
                .perm_to_tableau(&w.group().random_element(&mut rng))
                .unwrap();
            let b = w
                .perm_to_tableau(&w.group().random_element(&mut rng))
                .unwrap();
            let lhs = w.project(&a.multiply(&b).unwrap(), 2).unwrap();
            let rhs = w
                .project(&a, 2)
                .unwrap()
                .multiply(&w.project(&b, 2).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn standard_generator_shapes() {
        assert_eq!(standard_generators(LevelKind::Symmetric, 2).len(), 1);
        assert_eq!(standard_generators(LevelKind::Symmetric, 5).len(), 2);
        assert_eq!(standard_generators(LevelKind::Alternating, 2).len(), 0);
        assert_eq!(standard_generators(LevelKind::Alternating, 3).len(), 1);
        for n in [4, 5, 6, 7] {
            for g in standard_generators(LevelKind::Alternating, n) {
                assert!(g.is_even());
            }
        }
    }
}

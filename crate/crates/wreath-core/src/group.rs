//! Permutation groups backed by deterministic Schreier-Sims stabilizer
//! chains, plus the normal-subgroup machinery built on top of them:
//! normal closures, derived subgroups, centers, conjugacy classes, the full
//! normal-subgroup lattice for enumerable groups, monoliths, intersections,
//! normalizers, and structure fingerprints.
//!
//! Determinism: base points are the smallest moved points of the residues
//! that create each level, orbits grow by BFS in generator order, and every
//! randomized operation takes an explicit seeded generator. The same input
//! always produces the same chain.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::perm::Perm;
use crate::rng::SeededRng;
use crate::{Error, Result};

struct Level {
    base: usize,
    gens: Vec<Perm>,
    /// BFS discovery order; `orbit[0] == base`.
    orbit: Vec<usize>,
    /// Indexed by point: `(rep, rep_inverse)` with `rep` mapping base to the
    /// point. Entries are only ever added, never rewritten, which keeps all
    /// previously verified sift paths valid.
    transversal: Vec<Option<(Perm, Perm)>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal: Vec<Option<(Perm, Perm)>> = vec![None; degree];
        let id = Perm::identity(degree);
        transversal[base] = Some((id.clone(), id));
        Level {
            base,
            gens: Vec::new(),
            orbit: vec![base],
            transversal,
        }
    }
}

struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    fn new(degree: usize) -> Self {
        StabChain {
            degree,
            levels: Vec::new(),
        }
    }

    fn order(&self) -> BigUint {
        let mut acc = BigUint::from(1u8);
        for lev in &self.levels {
            acc *= BigUint::from(lev.orbit.len());
        }
        acc
    }

    /// Sifts `g` through the chain; returns the residue together with the
    /// level at which sifting stopped (`levels.len()` when it fell off the
    /// end). The residue fixes the base points of all earlier levels.
    fn sift_stuck(&self, g: Perm) -> (Perm, usize) {
        let mut r = g;
        for (j, lev) in self.levels.iter().enumerate() {
            if r.is_identity() {
                return (r, j);
            }
            let p = r.apply(lev.base);
            if p == lev.base {
                continue;
            }
            match &lev.transversal[p] {
                None => return (r, j),
                Some((_, rep_inv)) => {
                    r = r.compose(rep_inv).expect("degrees agree inside chain");
                }
            }
        }
        (r, self.levels.len())
    }

    fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        self.sift_stuck(g.clone()).0.is_identity()
    }

    /// Inserts a generator, restoring the full strong-generating invariant.
    /// Returns true when the group grew.
    ///
    /// A sift residue that fixes the base points of levels `0..j` is a
    /// strong generator for every level up to `j`, so it is adjoined to
    /// each of them; the fresh Schreier generators of each touched level
    /// queue up and are incorporated the same way until everything sifts
    /// to the identity. Transversal entries are never rewritten, so
    /// Schreier generators from earlier rounds stay verified.
    fn insert(&mut self, g: Perm) -> bool {
        let mut queue: VecDeque<Perm> = VecDeque::new();
        queue.push_back(g);
        let mut grew = false;
        while let Some(cand) = queue.pop_front() {
            let (r, stuck) = self.sift_stuck(cand);
            if r.is_identity() {
                continue;
            }
            grew = true;
            if stuck == self.levels.len() {
                let base = r.min_moved_point().expect("non-identity residue");
                self.levels.push(Level::new(base, self.degree));
            }
            for l in 0..=stuck {
                let new_gen_idx = {
                    self.levels[l].gens.push(r.clone());
                    self.levels[l].gens.len() - 1
                };
                let old_orbit_len = self.levels[l].orbit.len();
                let new_points = self.extend_orbit(l, new_gen_idx);

                // Schreier generators for the pairs that did not exist
                // before: old orbit points with the new generator, new
                // points with all generators.
                let mut pending: Vec<(usize, usize)> = Vec::new();
                for &p in &self.levels[l].orbit[..old_orbit_len] {
                    pending.push((p, new_gen_idx));
                }
                for &p in &new_points {
                    for gi in 0..self.levels[l].gens.len() {
                        pending.push((p, gi));
                    }
                }
                for (p, gi) in pending {
                    let u = self.schreier_gen(l, p, gi);
                    if !u.is_identity() {
                        queue.push_back(u);
                    }
                }
            }
        }
        grew
    }

    /// BFS closure of the orbit at level `l` after a generator was appended.
    /// Old points only try generators from `first_new` on; discovered points
    /// try all. Returns the newly discovered points.
    fn extend_orbit(&mut self, l: usize, first_new: usize) -> Vec<usize> {
        let mut new_points = Vec::new();
        let mut queue: VecDeque<(usize, usize)> = self.levels[l]
            .orbit
            .iter()
            .map(|&p| (p, first_new))
            .collect();
        while let Some((p, start)) = queue.pop_front() {
            for gi in start..self.levels[l].gens.len() {
                let q = self.levels[l].gens[gi].apply(p);
                if self.levels[l].transversal[q].is_none() {
                    let rep = self.levels[l].transversal[p]
                        .as_ref()
                        .expect("orbit point has a rep")
                        .0
                        .compose(&self.levels[l].gens[gi])
                        .expect("degrees agree inside chain");
                    let rep_inv = rep.inverse();
                    self.levels[l].transversal[q] = Some((rep, rep_inv));
                    self.levels[l].orbit.push(q);
                    new_points.push(q);
                    queue.push_back((q, 0));
                }
            }
        }
        new_points
    }

    fn schreier_gen(&self, l: usize, p: usize, gi: usize) -> Perm {
        let lev = &self.levels[l];
        let g = &lev.gens[gi];
        let rep_p = &lev.transversal[p].as_ref().expect("orbit point").0;
        let q = g.apply(p);
        let rep_q_inv = &lev.transversal[q].as_ref().expect("orbit point").1;
        rep_p
            .compose(g)
            .and_then(|x| x.compose(rep_q_inv))
            .expect("degrees agree inside chain")
    }

    /// All group elements as products of transversal representatives,
    /// deepest level first. Deterministic order.
    fn elements(&self, limit: u64) -> Result<Vec<Perm>> {
        if self.order() > BigUint::from(limit) {
            return Err(Error::EnumerationLimitExceeded { limit });
        }
        let mut elems = vec![Perm::identity(self.degree)];
        for lev in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elems.len() * lev.orbit.len());
            for e in &elems {
                for &p in &lev.orbit {
                    let rep = &lev.transversal[p].as_ref().expect("orbit point").0;
                    next.push(e.compose(rep).expect("degrees agree inside chain"));
                }
            }
            elems = next;
        }
        Ok(elems)
    }

    /// Uniformly random element: one uniformly chosen transversal
    /// representative per level, deepest first.
    fn random_element(&self, rng: &mut SeededRng) -> Perm {
        let mut e = Perm::identity(self.degree);
        for lev in self.levels.iter().rev() {
            let p = lev.orbit[rng.below(lev.orbit.len())];
            let rep = &lev.transversal[p].as_ref().expect("orbit point").0;
            e = e.compose(rep).expect("degrees agree inside chain");
        }
        e
    }
}

/// A permutation group with its stabilizer chain. The defining generators
/// are kept as handed in (identities dropped).
pub struct Group {
    degree: usize,
    gens: Vec<Perm>,
    chain: StabChain,
}

impl core::fmt::Debug for Group {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Group")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .finish()
    }
}

#[derive(Clone)]
pub struct ConjugacyClass {
    pub representative: Perm,
    pub size: usize,
}

pub enum MonolithOutcome {
    /// A unique minimal nontrivial normal subgroup.
    Monolithic(Group),
    /// The intersection of all nontrivial normal subgroups is trivial.
    NotMonolithic { minimal_orders: Vec<BigUint> },
}

/// Cheap non-isomorphism certificate: equal fingerprints do not prove
/// isomorphism, but different ones refute it.
#[derive(Clone, PartialEq, Eq)]
pub struct StructureFingerprint {
    pub order: BigUint,
    pub derived_order: BigUint,
    pub center_order: BigUint,
    /// Invariant factors of the abelianization, ascending, each dividing
    /// the next.
    pub abelian_invariants: Vec<u64>,
    pub exponent: BigUint,
}

impl Group {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Group> {
        let mut chain = StabChain::new(degree);
        let mut kept = Vec::new();
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
            if g.is_identity() {
                continue;
            }
            chain.insert(g.clone());
            kept.push(g);
        }
        Ok(Group {
            degree,
            gens: kept,
            chain,
        })
    }

    pub fn trivial(degree: usize) -> Group {
        Group {
            degree,
            gens: Vec::new(),
            chain: StabChain::new(degree),
        }
    }

    /// Regenerates a group from an element list, keeping only the elements
    /// that enlarge the chain as generators.
    pub fn from_elements(degree: usize, elems: &[Perm]) -> Result<Group> {
        let mut chain = StabChain::new(degree);
        let mut gens = Vec::new();
        for e in elems {
            if e.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: e.degree(),
                });
            }
            if chain.insert(e.clone()) {
                gens.push(e.clone());
            }
        }
        Ok(Group {
            degree,
            gens,
            chain,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn order(&self) -> BigUint {
        self.chain.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.chain.levels.is_empty()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.chain.contains(p)
    }

    pub fn is_subgroup_of(&self, other: &Group) -> bool {
        self.degree == other.degree && self.gens.iter().all(|g| other.contains(g))
    }

    /// Same underlying set of permutations.
    pub fn equal_as_group(&self, other: &Group) -> bool {
        self.order() == other.order() && self.is_subgroup_of(other)
    }

    pub fn elements(&self, limit: u64) -> Result<Vec<Perm>> {
        self.chain.elements(limit)
    }

    pub fn random_element(&self, rng: &mut SeededRng) -> Perm {
        self.chain.random_element(rng)
    }

    /// Smallest normal subgroup of `self` containing `seeds`: closes the
    /// seed set under conjugation by the generators of `self` until the
    /// chain stabilizes.
    pub fn normal_closure(&self, seeds: &[Perm]) -> Result<Group> {
        for s in seeds {
            if !self.contains(s) {
                return Err(Error::SeedOutsideAmbient);
            }
        }
        let mut chain = StabChain::new(self.degree);
        let mut ngens: Vec<Perm> = Vec::new();
        for s in seeds {
            if chain.insert(s.clone()) {
                ngens.push(s.clone());
            }
        }
        let mut i = 0;
        while i < ngens.len() {
            for g in &self.gens {
                let c = ngens[i].conjugate(g)?;
                if chain.insert(c.clone()) {
                    ngens.push(c);
                }
            }
            i += 1;
        }
        Ok(Group {
            degree: self.degree,
            gens: ngens,
            chain,
        })
    }

    /// Whether `sub` (required to be a subgroup of `self`) is normal in
    /// `self`: every conjugate of a subgroup generator by a group generator
    /// must sift to the identity in `sub`'s chain.
    pub fn is_normal_subgroup(&self, sub: &Group) -> Result<bool> {
        if !sub.is_subgroup_of(self) {
            return Err(Error::NotASubgroup);
        }
        for h in &sub.gens {
            for g in &self.gens {
                if !sub.contains(&h.conjugate(g)?) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Normal closure of the pairwise generator commutators.
    pub fn derived_subgroup(&self) -> Result<Group> {
        let mut seeds = Vec::new();
        for a in &self.gens {
            for b in &self.gens {
                let c = a.commutator(b)?;
                if !c.is_identity() {
                    seeds.push(c);
                }
            }
        }
        self.normal_closure(&seeds)
    }

    /// Brute force over all elements; requires order <= limit.
    pub fn center(&self, limit: u64) -> Result<Group> {
        let elems = self.elements(limit)?;
        let central: Vec<Perm> = elems
            .into_iter()
            .filter(|e| {
                self.gens
                    .iter()
                    .all(|g| e.compose(g).unwrap() == g.compose(e).unwrap())
            })
            .collect();
        Group::from_elements(self.degree, &central)
    }

    /// Conjugacy classes with lexicographically minimal representatives,
    /// ordered by representative. Sizes sum to the group order.
    pub fn conjugacy_classes(&self, limit: u64) -> Result<Vec<ConjugacyClass>> {
        let mut elems = self.elements(limit)?;
        elems.sort_unstable();
        let mut visited: BTreeSet<Perm> = BTreeSet::new();
        let mut classes = Vec::new();
        for e in &elems {
            if visited.contains(e) {
                continue;
            }
            let mut stack = vec![e.clone()];
            visited.insert(e.clone());
            let mut size = 0usize;
            while let Some(x) = stack.pop() {
                size += 1;
                for g in &self.gens {
                    let c = x.conjugate(g)?;
                    if visited.insert(c.clone()) {
                        stack.push(c);
                    }
                }
            }
            classes.push(ConjugacyClass {
                representative: e.clone(),
                size,
            });
        }
        Ok(classes)
    }

    /// The complete normal-subgroup lattice, as the join-closure of the
    /// normal closures of conjugacy-class representatives. Correct because
    /// every normal subgroup is a union of classes and is generated by the
    /// closures of the classes it contains. Sorted by order, then by
    /// element list; includes the trivial group and the whole group.
    pub fn normal_subgroups(&self, limit: u64) -> Result<Vec<Group>> {
        let classes = self.conjugacy_classes(limit)?;
        let mut subs: Vec<Group> = Vec::new();
        for cl in &classes {
            let n = if cl.representative.is_identity() {
                Group::trivial(self.degree)
            } else {
                self.normal_closure(core::slice::from_ref(&cl.representative))?
            };
            if !subs.iter().any(|s| s.equal_as_group(&n)) {
                subs.push(n);
            }
        }
        let mut i = 0;
        while i < subs.len() {
            for j in 0..i {
                let mut gens = subs[i].gens.clone();
                gens.extend_from_slice(&subs[j].gens);
                let join = self.normal_closure(&gens)?;
                if !subs.iter().any(|s| s.equal_as_group(&join)) {
                    subs.push(join);
                }
            }
            i += 1;
        }
        let mut keyed: Vec<(BigUint, Vec<Perm>, Group)> = subs
            .into_iter()
            .map(|s| {
                let mut elems = s.elements(limit).expect("lattice members enumerable");
                elems.sort_unstable();
                (s.order(), elems, s)
            })
            .collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
        Ok(keyed.into_iter().map(|(_, _, s)| s).collect())
    }

    /// Intersection of all nontrivial normal subgroups, via the lattice.
    pub fn monolith(&self, limit: u64) -> Result<MonolithOutcome> {
        let subs = self.normal_subgroups(limit)?;
        let nontrivial: Vec<&Group> = subs.iter().filter(|s| !s.is_trivial()).collect();
        let minimal: Vec<&Group> = nontrivial
            .iter()
            .filter(|s| {
                !nontrivial
                    .iter()
                    .any(|t| t.order() < s.order() && t.is_subgroup_of(s))
            })
            .copied()
            .collect();
        if minimal.len() == 1 {
            let m = minimal[0];
            Ok(MonolithOutcome::Monolithic(Group::new(
                self.degree,
                m.gens.clone(),
            )?))
        } else {
            Ok(MonolithOutcome::NotMonolithic {
                minimal_orders: minimal.iter().map(|s| s.order()).collect(),
            })
        }
    }

    /// Membership filter over the smaller factor; both groups must be
    /// enumerable within the limit.
    pub fn intersect(&self, other: &Group, limit: u64) -> Result<Group> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        let (small, big) = if self.order() <= other.order() {
            (self, other)
        } else {
            (other, self)
        };
        let elems = small.elements(limit)?;
        let common: Vec<Perm> = elems.into_iter().filter(|e| big.contains(e)).collect();
        Group::from_elements(self.degree, &common)
    }

    /// { g in self : g normalizes sub }, by brute force over the elements
    /// of `self`.
    pub fn normalizer_of(&self, sub: &Group, limit: u64) -> Result<Group> {
        if !sub.is_subgroup_of(self) {
            return Err(Error::NotASubgroup);
        }
        let elems = self.elements(limit)?;
        let mut keep = Vec::new();
        for n in elems {
            let mut ok = true;
            for h in &sub.gens {
                if !sub.contains(&h.conjugate(&n)?) {
                    ok = false;
                    break;
                }
            }
            if ok {
                keep.push(n);
            }
        }
        Group::from_elements(self.degree, &keep)
    }

    /// Invariant factors of G/G' (ascending, each dividing the next),
    /// computed from coset representatives: the quotient is identified
    /// through membership of products in the derived subgroup, and the
    /// cyclic decomposition is recovered from the element-order counts of
    /// each p-part. Requires |G/G'| <= limit; enumeration of G itself is
    /// not needed.
    pub fn abelian_invariants(&self, limit: u64) -> Result<Vec<u64>> {
        let derived = self.derived_subgroup()?;
        let q_order = self.order() / derived.order();
        if q_order > BigUint::from(limit) {
            return Err(Error::EnumerationLimitExceeded { limit });
        }
        let q_order = biguint_to_u64(&q_order);
        if q_order == 1 {
            return Ok(Vec::new());
        }

        let same_coset =
            |a: &Perm, b: &Perm| -> bool { derived.contains(&a.compose(&b.inverse()).unwrap()) };
        let mut reps: Vec<Perm> = vec![Perm::identity(self.degree)];
        let mut i = 0;
        while i < reps.len() {
            for g in &self.gens {
                let c = reps[i].compose(g).unwrap();
                if !reps.iter().any(|r| same_coset(&c, r)) {
                    reps.push(c);
                }
            }
            i += 1;
        }
        debug_assert_eq!(reps.len() as u64, q_order);

        // Order of each coset in the quotient.
        let coset_order = |r: &Perm| -> u64 {
            let mut k = 1u64;
            let mut acc = r.clone();
            while !derived.contains(&acc) {
                acc = acc.compose(r).unwrap();
                k += 1;
            }
            k
        };
        let orders: Vec<u64> = reps.iter().map(coset_order).collect();

        let mut factors_per_prime: Vec<Vec<u64>> = Vec::new();
        for p in prime_factors(q_order) {
            // f[i] = #elements killed by p^i; the increments of log_p f form
            // the conjugate of the partition of cyclic p-power factors.
            let mut e: Vec<u32> = Vec::new();
            let mut prev_log = 0u32;
            let mut pk = 1u64;
            loop {
                pk *= p;
                let f = orders.iter().filter(|&&o| pk.is_multiple_of(o)).count() as u64;
                let log = ilog(f, p);
                if log == prev_log {
                    break;
                }
                e.push(log - prev_log);
                prev_log = log;
            }
            // Conjugate partition: lambda_j = #{i : e_i >= j} gives the
            // exponents of the cyclic p-power factors, largest first.
            let max = *e.iter().max().unwrap_or(&0);
            let powers: Vec<u64> = (1..=max)
                .map(|j| {
                    let l = e.iter().filter(|&&x| x >= j).count() as u32;
                    p.pow(l)
                })
                .collect();
            factors_per_prime.push(powers);
        }
        let rows = factors_per_prime.iter().map(|v| v.len()).max().unwrap_or(0);
        let mut invariants: Vec<u64> = Vec::new();
        for t in 0..rows {
            let mut d = 1u64;
            for col in &factors_per_prime {
                if t < col.len() {
                    d *= col[t];
                }
            }
            invariants.push(d);
        }
        invariants.reverse();
        Ok(invariants)
    }

    /// (order, derived order, center order, abelianization invariants,
    /// exponent). Requires the group to be enumerable within the limit.
    pub fn fingerprint(&self, limit: u64) -> Result<StructureFingerprint> {
        let elems = self.elements(limit)?;
        let center_order = {
            let central = elems
                .iter()
                .filter(|e| {
                    self.gens
                        .iter()
                        .all(|g| e.compose(g).unwrap() == g.compose(e).unwrap())
                })
                .count();
            BigUint::from(central)
        };
        let mut exponent = BigUint::from(1u8);
        for e in &elems {
            let o = e.order();
            exponent = lcm_big(&exponent, &o);
        }
        Ok(StructureFingerprint {
            order: self.order(),
            derived_order: self.derived_subgroup()?.order(),
            center_order,
            abelian_invariants: self.abelian_invariants(limit)?,
            exponent,
        })
    }
}

fn lcm_big(a: &BigUint, b: &BigUint) -> BigUint {
    let mut x = a.clone();
    let mut y = b.clone();
    let zero = BigUint::from(0u8);
    if x == zero || y == zero {
        return zero;
    }
    let (p, q) = (x.clone(), y.clone());
    while y != zero {
        let r = &x % &y;
        x = y;
        y = r;
    }
    p / &x * q
}

fn biguint_to_u64(n: &BigUint) -> u64 {
    let digits = n.to_u64_digits();
    match digits.len() {
        0 => 0,
        1 => digits[0],
        _ => panic!("value exceeds u64"),
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// log base p of a power of p.
fn ilog(mut f: u64, p: u64) -> u32 {
    let mut l = 0;
    while f > 1 {
        debug_assert_eq!(f % p, 0, "count must be a power of the prime");
        f /= p;
        l += 1;
    }
    l
}

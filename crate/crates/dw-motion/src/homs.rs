//! Homomorphisms from finitely presented groups into finite groups, their
//! conjugation classes, actions by endomorphisms, and pure-flux labeled
//! spaces.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;
use thiserror::Error;

use crate::group::FiniteGroup;
use crate::perm::Permutation;
use crate::presentation::{Endomorphism, Presentation, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomError {
    #[error("hom set is not closed under conjugation")]
    NotConjugationClosed,
    #[error("endomorphism has {0} images but the presentation has {1} generators")]
    GeneratorMismatch(usize, usize),
    #[error("pulling back class {0} does not give a homomorphism")]
    NotAHom(usize),
    #[error("pulling back class {0} leaves the labeled basis")]
    LabelsNotInvariant(usize),
    #[error("induced map on classes is not a bijection")]
    NotBijective,
    #[error("label elements {0} and {1} do not commute")]
    NonCommutingLabel(usize, usize),
    #[error("boundary condition has {0} words but {1} label elements")]
    LabelArity(usize, usize),
}

/// A homomorphism given by its generator images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Hom {
    pub images: Vec<usize>,
}

/// Value of a word under generator images.
pub fn evaluate(g: &FiniteGroup, images: &[usize], w: &Word) -> usize {
    w.letters().iter().fold(0, |acc, l| {
        let x = images[l.generator];
        g.mul(acc, if l.inverse { g.inv(x) } else { x })
    })
}

/// Whether every relator evaluates to the identity.
pub fn is_hom(p: &Presentation, g: &FiniteGroup, images: &[usize]) -> bool {
    p.relators().iter().all(|r| evaluate(g, images, r) == 0)
}

struct Search<'a> {
    group: &'a FiniteGroup,
    by_level: Vec<Vec<&'a Word>>,
}

impl Search<'_> {
    fn new<'a>(p: &'a Presentation, g: &'a FiniteGroup) -> Search<'a> {
        let mut by_level = vec![Vec::new(); p.generator_count()];
        for r in p.relators() {
            if let Some(m) = r.max_generator() {
                by_level[m].push(r);
            }
        }
        Search { group: g, by_level }
    }

    fn ok(&self, level: usize, images: &[usize]) -> bool {
        self.by_level[level]
            .iter()
            .all(|r| evaluate(self.group, images, r) == 0)
    }

    fn dfs(&self, level: usize, images: &mut Vec<usize>, sink: &mut impl FnMut(&[usize])) {
        if level == images.len() {
            sink(images);
            return;
        }
        for x in 0..self.group.order() {
            images[level] = x;
            if self.ok(level, images) {
                self.dfs(level + 1, images, sink);
            }
        }
    }

    fn run<T: Send>(&self, k: usize, per_branch: impl Fn(&Self, &mut Vec<usize>) -> T + Sync) -> Vec<T>
    where
        Self: Sync,
    {
        (0..self.group.order())
            .into_par_iter()
            .filter_map(|a| {
                let mut images = vec![0; k];
                images[0] = a;
                self.ok(0, &images).then(|| per_branch(self, &mut images))
            })
            .collect()
    }
}

/// All homomorphisms in lexicographic order of image tuples.
pub fn enumerate_homs(p: &Presentation, g: &FiniteGroup) -> Vec<Hom> {
    let k = p.generator_count();
    if k == 0 {
        return vec![Hom { images: Vec::new() }];
    }
    let search = Search::new(p, g);
    search
        .run(k, |s, images| {
            let mut out = Vec::new();
            s.dfs(1, images, &mut |im| out.push(Hom { images: im.to_vec() }));
            out
        })
        .into_iter()
        .flatten()
        .collect()
}

/// Number of homomorphisms, without materializing them.
pub fn count_homs(p: &Presentation, g: &FiniteGroup) -> u64 {
    let k = p.generator_count();
    if k == 0 {
        return 1;
    }
    let search = Search::new(p, g);
    search
        .run(k, |s, images| {
            let mut n = 0u64;
            s.dfs(1, images, &mut |_| n += 1);
            n
        })
        .into_iter()
        .sum()
}

/// `a·ρ·a⁻¹` on image tuples.
pub fn conjugate_images(g: &FiniteGroup, a: usize, images: &[usize]) -> Vec<usize> {
    images.iter().map(|&x| g.conj(a, x)).collect()
}

/// Lexicographically minimal tuple in the conjugation orbit.
pub fn canonical_form(g: &FiniteGroup, images: &[usize]) -> Vec<usize> {
    let mut best = images.to_vec();
    let mut cur = vec![0; images.len()];
    for a in 1..g.order() {
        for (c, &x) in cur.iter_mut().zip(images) {
            *c = g.conj(a, x);
        }
        if cur < best {
            best.clone_from(&cur);
        }
    }
    best
}

/// A conjugation orbit of homomorphisms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomClass {
    pub canonical: Hom,
    pub orbit_size: usize,
}

/// Conjugation classes sorted by canonical form, with lookup.
#[derive(Clone, Debug, Default)]
pub struct HomClasses {
    classes: Vec<HomClass>,
    index: HashMap<Vec<usize>, usize>,
}

impl HomClasses {
    /// Groups a conjugation-closed hom list into orbits.
    pub fn from_homs(homs: &[Hom], g: &FiniteGroup) -> Result<Self, HomError> {
        let all: HashSet<&[usize]> = homs.iter().map(|h| h.images.as_slice()).collect();
        let mut visited: HashSet<Vec<usize>> = HashSet::with_capacity(homs.len());
        let mut classes = Vec::new();
        for h in homs {
            if visited.contains(&h.images) {
                continue;
            }
            let mut orbit: Vec<Vec<usize>> = (0..g.order())
                .map(|a| conjugate_images(g, a, &h.images))
                .collect();
            orbit.sort_unstable();
            orbit.dedup();
            if orbit.iter().any(|o| !all.contains(o.as_slice())) {
                return Err(HomError::NotConjugationClosed);
            }
            let canonical = orbit[0].clone();
            let orbit_size = orbit.len();
            visited.extend(orbit);
            classes.push(HomClass {
                canonical: Hom { images: canonical },
                orbit_size,
            });
        }
        Ok(Self::from_sorted(classes))
    }

    fn from_sorted(mut classes: Vec<HomClass>) -> Self {
        classes.sort_by(|a, b| a.canonical.cmp(&b.canonical));
        let index = classes
            .iter()
            .enumerate()
            .map(|(i, c)| (c.canonical.images.clone(), i))
            .collect();
        HomClasses { classes, index }
    }

    /// Enumerates and classifies in one step.
    pub fn of(p: &Presentation, g: &FiniteGroup) -> Self {
        Self::from_homs(&enumerate_homs(p, g), g).expect("hom sets are conjugation closed")
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[HomClass] {
        &self.classes
    }

    pub fn canonical(&self, k: usize) -> &[usize] {
        &self.classes[k].canonical.images
    }

    /// Total number of homomorphisms across the classes.
    pub fn hom_count(&self) -> usize {
        self.classes.iter().map(|c| c.orbit_size).sum()
    }

    /// Index of the class containing `images`, if any.
    pub fn class_of(&self, g: &FiniteGroup, images: &[usize]) -> Option<usize> {
        self.index.get(&canonical_form(g, images)).copied()
    }

    /// Index of a class by its canonical tuple.
    pub fn index_of_canonical(&self, canonical: &[usize]) -> Option<usize> {
        self.index.get(canonical).copied()
    }

    /// Classes satisfying a predicate on the canonical tuple.
    pub fn filter(&self, mut keep: impl FnMut(&[usize]) -> bool) -> HomClasses {
        Self::from_sorted(
            self.classes
                .iter()
                .filter(|c| keep(&c.canonical.images))
                .cloned()
                .collect(),
        )
    }
}

/// Class permutation `[φ] ↦ [φ∘e]`, checked to be a bijection.
///
/// This is contravariant: `act_pre(e1∘e2) = act_pre(e2)∘act_pre(e1)`.
pub fn act_pre(
    e: &Endomorphism,
    basis: &HomClasses,
    p: &Presentation,
    g: &FiniteGroup,
) -> Result<Permutation, HomError> {
    if e.generator_count() != p.generator_count() {
        return Err(HomError::GeneratorMismatch(e.generator_count(), p.generator_count()));
    }
    let images: Result<Vec<usize>, HomError> = (0..basis.len())
        .into_par_iter()
        .map(|k| {
            let rho = basis.canonical(k);
            let pulled: Vec<usize> = e.images().iter().map(|w| evaluate(g, rho, w)).collect();
            if !is_hom(p, g, &pulled) {
                return Err(HomError::NotAHom(k));
            }
            basis.class_of(g, &pulled).ok_or(HomError::LabelsNotInvariant(k))
        })
        .collect();
    Permutation::from_images(images?).ok_or(HomError::NotBijective)
}

/// Class permutation `[φ] ↦ [φ∘e⁻¹]`, the covariant convention:
/// `act(e1∘e2) = act(e1)∘act(e2)`.
pub fn act(
    e: &Endomorphism,
    basis: &HomClasses,
    p: &Presentation,
    g: &FiniteGroup,
) -> Result<Permutation, HomError> {
    act_pre(e, basis, p, g).map(|perm| perm.inverse())
}

/// Pure-flux condition on one boundary piece: there is a single `a` with
/// `ρ(words[j]) = a·label[j]·a⁻¹` for every `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryCondition {
    pub words: Vec<Word>,
    pub label: Vec<usize>,
}

impl BoundaryCondition {
    /// Torus boundary with meridian label `g` and longitude label `h`.
    pub fn torus(meridian: Word, longitude: Word, g: usize, h: usize) -> Self {
        BoundaryCondition {
            words: vec![meridian, longitude],
            label: vec![g, h],
        }
    }

    /// Circle boundary: `ρ(w)` conjugate to `g`.
    pub fn circle(w: Word, g: usize) -> Self {
        BoundaryCondition {
            words: vec![w],
            label: vec![g],
        }
    }

    /// Minimal witness `a`, if one exists.
    pub fn witness(&self, g: &FiniteGroup, images: &[usize]) -> Option<usize> {
        let values: Vec<usize> = self.words.iter().map(|w| evaluate(g, images, w)).collect();
        (0..g.order()).find(|&a| {
            values
                .iter()
                .zip(&self.label)
                .all(|(&v, &l)| g.conj(a, l) == v)
        })
    }

    fn validate(&self, g: &FiniteGroup) -> Result<(), HomError> {
        if self.words.len() != self.label.len() {
            return Err(HomError::LabelArity(self.words.len(), self.label.len()));
        }
        for (i, &x) in self.label.iter().enumerate() {
            for &y in &self.label[i + 1..] {
                if !g.commutes(x, y) {
                    return Err(HomError::NonCommutingLabel(x, y));
                }
            }
        }
        Ok(())
    }
}

/// A basis class together with its witnesses, one per boundary condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledBasisVector {
    pub rho: Hom,
    pub witnesses: Vec<usize>,
}

/// Hom classes whose boundary holonomies match the pure-flux labels.
#[derive(Clone, Debug)]
pub struct LabeledSpace {
    classes: HomClasses,
    witnesses: Vec<Vec<usize>>,
    boundary: Vec<BoundaryCondition>,
}

impl LabeledSpace {
    pub fn new(
        p: &Presentation,
        g: &FiniteGroup,
        boundary: Vec<BoundaryCondition>,
    ) -> Result<Self, HomError> {
        Self::from_classes(&HomClasses::of(p, g), g, boundary)
    }

    /// Restricts an already enumerated class list.
    pub fn from_classes(
        all: &HomClasses,
        g: &FiniteGroup,
        boundary: Vec<BoundaryCondition>,
    ) -> Result<Self, HomError> {
        for b in &boundary {
            b.validate(g)?;
        }
        let classes = all.filter(|rho| boundary.iter().all(|b| b.witness(g, rho).is_some()));
        let witnesses = classes
            .classes()
            .iter()
            .map(|c| {
                boundary
                    .iter()
                    .map(|b| b.witness(g, &c.canonical.images).expect("filtered"))
                    .collect()
            })
            .collect();
        Ok(LabeledSpace {
            classes,
            witnesses,
            boundary,
        })
    }

    pub fn dim(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &HomClasses {
        &self.classes
    }

    pub fn boundary(&self) -> &[BoundaryCondition] {
        &self.boundary
    }

    pub fn witnesses(&self, k: usize) -> &[usize] {
        &self.witnesses[k]
    }

    pub fn basis(&self) -> Vec<LabeledBasisVector> {
        self.classes
            .classes()
            .iter()
            .zip(&self.witnesses)
            .map(|(c, w)| LabeledBasisVector {
                rho: c.canonical.clone(),
                witnesses: w.clone(),
            })
            .collect()
    }

    /// Whether a homomorphism satisfies every boundary condition.
    pub fn satisfies(&self, g: &FiniteGroup, images: &[usize]) -> bool {
        self.boundary.iter().all(|b| b.witness(g, images).is_some())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Presentation;

    fn s3() -> FiniteGroup {
        "S:3".parse().unwrap()
    }

    #[test]
    fn torus_homs_into_s3() {
        let g = s3();
        let homs = enumerate_homs(&Presentation::torus(), &g);
        let commuting: usize = (0..6).map(|a| g.centralizer(&[a]).len()).sum();
        assert_eq!(homs.len(), commuting);
        assert_eq!(homs.len(), 18);
        let classes = HomClasses::from_homs(&homs, &g).unwrap();
        assert_eq!(classes.len(), 8);
        assert_eq!(classes.hom_count(), 18);
    }

    #[test]
    fn burnside_count_of_torus_classes() {
        for spec in ["S:3", "Q8", "D:4", "SL2:3"] {
            let g: FiniteGroup = spec.parse().unwrap();
            let homs = enumerate_homs(&Presentation::torus(), &g);
            // orbits = (1/|G|) Σ_a #{ρ : aρa⁻¹ = ρ}
            let fixed: usize = (0..g.order())
                .map(|a| homs.iter().filter(|h| conjugate_images(&g, a, &h.images) == h.images).count())
                .sum();
            let classes = HomClasses::from_homs(&homs, &g).unwrap();
            assert_eq!(classes.len() * g.order(), fixed, "{spec}");
        }
    }

    #[test]
    fn degenerate_presentations() {
        let g = s3();
        assert_eq!(enumerate_homs(&Presentation::circle(), &g).len(), 6);
        assert_eq!(enumerate_homs(&Presentation::sphere(), &g).len(), 1);
        assert_eq!(HomClasses::of(&Presentation::circle(), &g).len(), 3);
        let z6: FiniteGroup = "Z:6".parse().unwrap();
        assert_eq!(HomClasses::of(&Presentation::circle(), &z6).len(), 6);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let g = s3();
        let p = Presentation::parse("gens: x y u\nrel: x^3 y^-2\nrel: y^2 u y^-2 u^-1").unwrap();
        let mut brute = Vec::new();
        for a in 0..6 {
            for b in 0..6 {
                for c in 0..6 {
                    if is_hom(&p, &g, &[a, b, c]) {
                        brute.push(vec![a, b, c]);
                    }
                }
            }
        }
        let homs: Vec<Vec<usize>> = enumerate_homs(&p, &g).into_iter().map(|h| h.images).collect();
        assert_eq!(homs, brute);
        assert_eq!(count_homs(&p, &g) as usize, brute.len());
    }

    #[test]
    fn orbit_sizes_divide_order() {
        let g: FiniteGroup = "SL2:3".parse().unwrap();
        let classes = HomClasses::of(&Presentation::torus(), &g);
        for c in classes.classes() {
            assert_eq!(g.order() % c.orbit_size, 0);
            assert_eq!(canonical_form(&g, &c.canonical.images), c.canonical.images);
        }
    }

    #[test]
    fn act_identity_and_inverse_pair() {
        let g = s3();
        let p = Presentation::torus();
        let basis = HomClasses::of(&p, &g);
        let id = act(&Endomorphism::identity(2), &basis, &p, &g).unwrap();
        assert!(id.is_identity());
        let t = Endomorphism::parse(&p, "a -> a b").unwrap();
        let tinv = Endomorphism::parse(&p, "a -> a b^-1").unwrap();
        let at = act(&t, &basis, &p, &g).unwrap();
        let atinv = act(&tinv, &basis, &p, &g).unwrap();
        assert!(at.compose(&atinv).is_identity());
    }

    #[test]
    fn act_is_covariant() {
        let g = s3();
        let p = Presentation::torus();
        let basis = HomClasses::of(&p, &g);
        let s = Endomorphism::parse(&p, "a -> b\nb -> a^-1").unwrap();
        let t = Endomorphism::parse(&p, "a -> a b").unwrap();
        let lhs = act(&s.compose(&t), &basis, &p, &g).unwrap();
        let rhs = act(&s, &basis, &p, &g).unwrap().compose(&act(&t, &basis, &p, &g).unwrap());
        assert_eq!(lhs, rhs);
        let pre = act_pre(&s.compose(&t), &basis, &p, &g).unwrap();
        let pre_rhs = act_pre(&t, &basis, &p, &g).unwrap().compose(&act_pre(&s, &basis, &p, &g).unwrap());
        assert_eq!(pre, pre_rhs);
    }

    #[test]
    fn non_automorphism_is_rejected() {
        let g = s3();
        let p = Presentation::circle();
        let basis = HomClasses::of(&p, &g);
        let square = Endomorphism::new(vec![Word::power(0, 2)]).unwrap();
        assert_eq!(act(&square, &basis, &p, &g), Err(HomError::NotBijective));
    }

    #[test]
    fn labeled_space_examples() {
        let trivial = FiniteGroup::trivial();
        let p = Presentation::torus();
        let b = BoundaryCondition::torus(Word::generator(0), Word::generator(1), 0, 0);
        assert_eq!(LabeledSpace::new(&p, &trivial, vec![b]).unwrap().dim(), 1);

        let g = s3();
        let t = g.element("(12)").unwrap();
        let disk = BoundaryCondition::circle(Word::empty(), t);
        assert_eq!(LabeledSpace::new(&Presentation::sphere(), &g, vec![disk]).unwrap().dim(), 0);

        let c = g.element("(123)").unwrap();
        let bad = BoundaryCondition::torus(Word::generator(0), Word::generator(1), t, c);
        assert!(matches!(LabeledSpace::new(&p, &g, vec![bad]), Err(HomError::NonCommutingLabel(..))));
    }

    #[test]
    fn labeled_witnesses_satisfy_equations() {
        let g = s3();
        let p = Presentation::torus();
        let t = g.element("(12)").unwrap();
        let b = BoundaryCondition::torus(Word::generator(0), Word::generator(1), t, 0);
        let space = LabeledSpace::new(&p, &g, vec![b]).unwrap();
        assert_eq!(space.dim(), 1);
        for v in space.basis() {
            let a = v.witnesses[0];
            assert_eq!(v.rho.images[0], g.conj(a, t));
            assert_eq!(v.rho.images[1], g.conj(a, 0));
        }
    }
}

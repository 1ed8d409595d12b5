//! Link families, their complements' fundamental groups, motion-group
//! generator actions and pure-flux motion representations.

mod necklace;
mod torus;

pub use necklace::{necklace_t_check, NecklaceReport};
pub use torus::{brute_force_dim, psi_all_blocks, psi_bijection, thm2_decomposition, torus_blocks, BaseChoice, BaseTuple, PsiReport, Thm2Block, Thm2Report};

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::dw::PermutationRep;
use crate::group::{FiniteGroup, GroupError};
use crate::homs::{BoundaryCondition, HomClasses, HomError, LabeledSpace};
use crate::perm::{evaluate_word, Permutation};
use crate::presentation::{Endomorphism, Presentation, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinkError {
    #[error("malformed link spec `{0}`")]
    BadSpec(String),
    #[error("invalid link parameters: {0}")]
    Invalid(String),
    #[error("{0} needs an axis label")]
    MissingAxis(String),
    #[error("labels are not invariant under the motion generators: {0}")]
    NotInvariant(HomError),
    #[error("block is empty")]
    EmptyBlock,
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// The link families with explicit motion-group actions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinkFamily {
    Necklace(usize),
    Hopf(usize),
    Torus { p: u32, q: u32, n: usize },
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl LinkFamily {
    pub fn torus(p: u32, q: u32, n: usize) -> Result<Self, LinkError> {
        if p == 0 || q == 0 || n == 0 {
            return Err(LinkError::Invalid("p, q, n must be positive".into()));
        }
        if gcd(p, q) != 1 {
            return Err(LinkError::Invalid(format!("gcd({p},{q}) ≠ 1")));
        }
        Ok(LinkFamily::Torus { p, q, n })
    }

    /// Number of unlinked components permuted by the motions.
    pub fn n(&self) -> usize {
        match *self {
            LinkFamily::Necklace(n) | LinkFamily::Hopf(n) => n,
            LinkFamily::Torus { n, .. } => n,
        }
    }

    pub fn has_axis(&self) -> bool {
        matches!(self, LinkFamily::Necklace(_) | LinkFamily::Hopf(_))
    }
}

impl FromStr for LinkFamily {
    type Err = LinkError;

    /// `torus:p,q,n`, `necklace:n` or `hopf:n`.
    fn from_str(s: &str) -> Result<Self, LinkError> {
        let bad = || LinkError::BadSpec(s.to_string());
        let (head, args) = s.trim().split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        match (head, nums.as_slice()) {
            ("necklace", &[n]) if n >= 1 => Ok(LinkFamily::Necklace(n)),
            ("hopf", &[n]) if n >= 1 => Ok(LinkFamily::Hopf(n)),
            ("torus", &[p, q, n]) => LinkFamily::torus(p as u32, q as u32, n),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for LinkFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinkFamily::Necklace(n) => write!(f, "necklace:{n}"),
            LinkFamily::Hopf(n) => write!(f, "hopf:{n}"),
            LinkFamily::Torus { p, q, n } => write!(f, "torus:{p},{q},{n}"),
        }
    }
}

/// Meridian and longitude words of one boundary torus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentWords {
    pub name: String,
    pub meridian: Word,
    pub longitude: Word,
}

/// π₁ of the complement with peripheral words. Unlinked components come
/// first; an axis component, if any, is last.
#[derive(Clone, Debug)]
pub struct LinkComplement {
    pub presentation: Presentation,
    pub components: Vec<ComponentWords>,
}

/// Torus-link generator `u_j` with `u_0 = y`, `u_n = x`; genuine generators
/// are `x = 0`, `y = 1`, `u_j = j + 1` for `1 ≤ j ≤ n−1`.
fn torus_u(j: usize, n: usize) -> Word {
    match j {
        0 => Word::generator(1),
        _ if j == n => Word::generator(0),
        _ => Word::generator(j + 1),
    }
}

/// Meridian `u_{i−1}·u_i⁻¹` of torus-link component `i` (1-based).
pub(crate) fn torus_meridian(i: usize, n: usize) -> Word {
    torus_u(i - 1, n).concat(&torus_u(i, n).inverse())
}

pub fn pi1(link: &LinkFamily) -> LinkComplement {
    match *link {
        LinkFamily::Torus { p, q, n } => {
            let mut names = vec!["x".to_string(), "y".to_string()];
            names.extend((1..n).map(|j| format!("u{j}")));
            let yq = Word::power(1, q as i64);
            let mut relators = vec![Word::power(0, p as i64).concat(&yq.inverse())];
            for j in 1..n {
                relators.push(Word::commutator(&yq, &Word::generator(j + 1)));
            }
            let presentation = Presentation::new(names, relators).expect("torus link presentation");
            let components = (1..=n)
                .map(|i| ComponentWords {
                    name: format!("K{i}"),
                    meridian: torus_meridian(i, n),
                    longitude: Word::power(0, p as i64),
                })
                .collect();
            LinkComplement {
                presentation,
                components,
            }
        }
        LinkFamily::Necklace(n) | LinkFamily::Hopf(n) => {
            let axis = if matches!(link, LinkFamily::Necklace(_)) { "x" } else { "y" };
            let mut names = vec![axis.to_string()];
            names.extend((1..=n).map(|i| format!("x{i}")));
            let relators = (1..=n)
                .map(|i| Word::commutator(&Word::generator(0), &Word::generator(i)))
                .collect();
            let presentation = Presentation::new(names, relators).expect("necklace presentation");
            let mut components: Vec<ComponentWords> = (1..=n)
                .map(|i| ComponentWords {
                    name: format!("L{i}"),
                    meridian: Word::generator(i),
                    longitude: Word::generator(0),
                })
                .collect();
            components.push(ComponentWords {
                name: "Lc".into(),
                meridian: Word::generator(0),
                longitude: Word::product((1..=n).map(Word::generator).collect::<Vec<_>>().iter()),
            });
            LinkComplement {
                presentation,
                components,
            }
        }
    }
}

/// Half-twist `σ_i` on generators `x_i, x_{i+1}` at the given indices.
fn necklace_sigma(total: usize, xi: usize, xj: usize) -> Endomorphism {
    let (a, b) = (Word::generator(xi), Word::generator(xj));
    Endomorphism::with_images(total, &[(xi, a.concat(&b).concat(&a.inverse())), (xj, a)]).expect("sigma")
}

/// Cyclic shift `x_i ↦ x_{i−1 mod n}` on generators at `first..first+n`.
fn necklace_shift(total: usize, first: usize, n: usize) -> Endomorphism {
    let changes: Vec<(usize, Word)> = (0..n)
        .map(|i| (first + i, Word::generator(first + (i + n - 1) % n)))
        .collect();
    Endomorphism::with_images(total, &changes).expect("shift")
}

/// Named motion-group generators acting on π₁ of the complement.
pub fn motion_generators(link: &LinkFamily) -> Vec<(String, Endomorphism)> {
    match *link {
        LinkFamily::Torus { n, .. } => {
            let total = n + 1;
            let mut gens = Vec::new();
            for i in 1..n {
                let img = torus_u(i - 1, n).concat(&torus_u(i, n).inverse()).concat(&torus_u(i + 1, n));
                gens.push((format!("sigma{i}"), Endomorphism::with_images(total, &[(i + 1, img)]).expect("sigma")));
            }
            for i in 1..=n {
                let c = torus_meridian(i, n);
                let mut changes = vec![(0, Word::generator(0).conjugate_by(&c))];
                for j in i..n {
                    changes.push((j + 1, Word::generator(j + 1).conjugate_by(&c)));
                }
                gens.push((format!("r{i}"), Endomorphism::with_images(total, &changes).expect("rho")));
            }
            gens
        }
        LinkFamily::Necklace(n) | LinkFamily::Hopf(n) => {
            let total = n + 1;
            let mut gens: Vec<(String, Endomorphism)> = (1..n)
                .map(|i| (format!("sigma{i}"), necklace_sigma(total, i, i + 1)))
                .collect();
            gens.push(("p".into(), necklace_shift(total, 1, n)));
            gens
        }
    }
}

/// Which relator set applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MotionFamily {
    /// Torus links with p + q odd.
    Odd,
    /// Torus links with p + q even, other than (1,1).
    Even,
    /// Torus links with p = q = 1.
    Hopf,
    /// Links with an unknotted axis: braid relations plus shift relations.
    Annular,
}

/// A relator as a word in the motion generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotionRelator {
    pub name: String,
    pub word: Vec<(usize, i32)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotionPresentation {
    pub family: MotionFamily,
    pub generator_names: Vec<String>,
    pub relators: Vec<MotionRelator>,
}

fn commutator(a: usize, b: usize) -> Vec<(usize, i32)> {
    vec![(a, 1), (b, 1), (a, -1), (b, -1)]
}

fn braid_relators(sigma: &[usize], out: &mut Vec<MotionRelator>) {
    let m = sigma.len();
    for j in 0..m {
        for k in j + 1..m {
            let (a, b) = (sigma[j], sigma[k]);
            let (name, word) = if k == j + 1 {
                (
                    format!("s{}s{}s{} = s{}s{}s{}", j + 1, k + 1, j + 1, k + 1, j + 1, k + 1),
                    vec![(a, 1), (b, 1), (a, 1), (b, -1), (a, -1), (b, -1)],
                )
            } else {
                (format!("s{}s{} = s{}s{}", j + 1, k + 1, k + 1, j + 1), commutator(a, b))
            };
            out.push(MotionRelator { name, word });
        }
    }
}

pub fn motion_presentation(link: &LinkFamily) -> MotionPresentation {
    let n = link.n();
    let mut names: Vec<String> = (1..n).map(|i| format!("sigma{i}")).collect();
    let sigma: Vec<usize> = (0..n.saturating_sub(1)).collect();
    let mut relators = Vec::new();
    match *link {
        LinkFamily::Torus { p, q, .. } => {
            let family = if p == 1 && q == 1 {
                MotionFamily::Hopf
            } else if (p + q) % 2 == 1 {
                MotionFamily::Odd
            } else {
                MotionFamily::Even
            };
            let r: Vec<usize> = (0..n).map(|i| sigma.len() + i).collect();
            names.extend((1..=n).map(|i| format!("r{i}")));
            braid_relators(&sigma, &mut relators);
            relators.push(MotionRelator {
                name: "r1...rn = 1".into(),
                word: r.iter().map(|&x| (x, 1)).collect(),
            });
            for i in 0..n {
                for k in i + 1..n {
                    relators.push(MotionRelator {
                        name: format!("r{}r{} = r{}r{}", i + 1, k + 1, k + 1, i + 1),
                        word: commutator(r[i], r[k]),
                    });
                }
            }
            for i in 1..=n {
                for j in 1..n {
                    if j + 1 != i {
                        relators.push(MotionRelator {
                            name: format!("r{i}s{j} = s{j}r{i}"),
                            word: commutator(r[i - 1], sigma[j - 1]),
                        });
                    }
                }
            }
            match family {
                MotionFamily::Even => {
                    let r2pi = names.len();
                    names.push("r2pi".into());
                    let mut w: Vec<(usize, i32)> = r.iter().map(|&x| (x, 1)).collect();
                    w.push((r2pi, -1));
                    relators.push(MotionRelator {
                        name: "r1...rn = r2pi".into(),
                        word: w,
                    });
                    relators.push(MotionRelator {
                        name: "r2pi^2 = 1".into(),
                        word: vec![(r2pi, 2)],
                    });
                }
                MotionFamily::Hopf => {
                    relators.push(MotionRelator {
                        name: "r1 = 1".into(),
                        word: vec![(r[0], 1)],
                    });
                    relators.push(MotionRelator {
                        name: format!("r{n} = 1"),
                        word: vec![(r[n - 1], 1)],
                    });
                }
                _ => {}
            }
            MotionPresentation {
                family,
                generator_names: names,
                relators,
            }
        }
        LinkFamily::Necklace(_) | LinkFamily::Hopf(_) => {
            let pi = names.len();
            names.push("p".into());
            braid_relators(&sigma, &mut relators);
            for i in 2..n {
                relators.push(MotionRelator {
                    name: format!("p s{i} p^-1 = s{}", i - 1),
                    word: vec![(pi, 1), (sigma[i - 1], 1), (pi, -1), (sigma[i - 2], -1)],
                });
            }
            if n >= 2 {
                relators.push(MotionRelator {
                    name: format!("p^2 s1 p^-2 = s{}", n - 1),
                    word: vec![(pi, 2), (sigma[0], 1), (pi, -2), (sigma[n - 2], -1)],
                });
            }
            MotionPresentation {
                family: MotionFamily::Annular,
                generator_names: names,
                relators,
            }
        }
    }
}

/// A commuting label pair `(g, h)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FluxLabel {
    pub g: usize,
    pub h: usize,
}

impl FluxLabel {
    pub fn new(group: &FiniteGroup, g: usize, h: usize) -> Result<Self, LinkError> {
        if !group.commutes(g, h) {
            return Err(HomError::NonCommutingLabel(g, h).into());
        }
        Ok(FluxLabel { g, h })
    }

    /// Parses `g,h` from element labels, trying every comma split so that
    /// labels containing commas still work.
    pub fn parse(group: &FiniteGroup, s: &str) -> Result<Self, LinkError> {
        for (i, _) in s.match_indices(',') {
            if let (Ok(g), Ok(h)) = (group.element(&s[..i]), group.element(&s[i + 1..])) {
                return Self::new(group, g, h);
            }
        }
        Err(LinkError::BadSpec(format!("flux `{s}`")))
    }
}

/// Boundary conditions for the given labels.
pub fn link_boundary(
    link: &LinkFamily,
    flux: FluxLabel,
    axis: Option<FluxLabel>,
) -> Result<Vec<BoundaryCondition>, LinkError> {
    let comp = pi1(link);
    let mut out = Vec::new();
    for (k, c) in comp.components.iter().enumerate() {
        let is_axis = link.has_axis() && k == comp.components.len() - 1;
        let label = if is_axis {
            axis.ok_or_else(|| LinkError::MissingAxis(link.to_string()))?
        } else {
            flux
        };
        out.push(BoundaryCondition::torus(c.meridian.clone(), c.longitude.clone(), label.g, label.h));
    }
    Ok(out)
}

/// A pure-flux motion representation.
#[derive(Clone, Debug)]
pub struct MotionRep {
    pub link: LinkFamily,
    pub presentation: Presentation,
    pub space: LabeledSpace,
    pub rep: PermutationRep,
}

/// Labeled space and generator permutations; for the even torus family the
/// extra generator `r2pi` is realized as `r1⋯rn`.
pub fn motion_rep(
    link: &LinkFamily,
    g: &FiniteGroup,
    flux: FluxLabel,
    axis: Option<FluxLabel>,
) -> Result<MotionRep, LinkError> {
    let comp = pi1(link);
    let all = HomClasses::of(&comp.presentation, g);
    motion_rep_from_classes(link, g, &all, flux, axis)
}

/// As `motion_rep`, reusing an enumeration of all hom classes.
pub fn motion_rep_from_classes(
    link: &LinkFamily,
    g: &FiniteGroup,
    all: &HomClasses,
    flux: FluxLabel,
    axis: Option<FluxLabel>,
) -> Result<MotionRep, LinkError> {
    let comp = pi1(link);
    let boundary = link_boundary(link, flux, axis)?;
    let space = LabeledSpace::from_classes(all, g, boundary)?;
    let gens = motion_generators(link);
    let mut rep = PermutationRep::from_endomorphisms(space.classes(), &comp.presentation, g, &gens)
        .map_err(|e| match e {
            HomError::LabelsNotInvariant(_) => LinkError::NotInvariant(e),
            other => LinkError::Hom(other),
        })?;
    if motion_presentation(link).family == MotionFamily::Even {
        let n = link.n();
        let word: Vec<(usize, i32)> = (0..n).map(|i| (n - 1 + i, 1)).collect();
        let r2pi = evaluate_word(&rep.perms, &word, rep.dim);
        rep.names.push("r2pi".into());
        rep.perms.push(r2pi);
    }
    Ok(MotionRep {
        link: *link,
        presentation: comp.presentation,
        space,
        rep,
    })
}

/// Per-relator outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelatorResult {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub family: MotionFamily,
    pub results: Vec<RelatorResult>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.results.iter().all(|r| r.holds)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.results.iter().filter(|r| !r.holds).map(|r| r.name.as_str()).collect()
    }
}

/// Evaluates every relator as a permutation product.
pub fn verify_motion_relations(rep: &PermutationRep, mp: &MotionPresentation) -> RelationReport {
    let perms: Vec<Permutation> = mp
        .generator_names
        .iter()
        .map(|n| rep.get(n).cloned().unwrap_or_else(|| Permutation::identity(rep.dim)))
        .collect();
    let results = mp
        .relators
        .iter()
        .map(|r| RelatorResult {
            name: r.name.clone(),
            holds: evaluate_word(&perms, &r.word, rep.dim).is_identity(),
        })
        .collect();
    RelationReport {
        family: mp.family,
        results,
    }
}

/// Minimal positive `(u, v)` with `p·v − q·u = 1`.
pub fn bezout_uv(p: u32, q: u32) -> (u64, u64) {
    let (p, q) = (p as u64, q as u64);
    (1..)
        .find_map(|v: u64| {
            let pv = p * v;
            (pv > 1 && (pv - 1).is_multiple_of(q)).then(|| ((pv - 1) / q, v))
        })
        .expect("gcd(p,q) = 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homs::{enumerate_homs, HomClasses};

    fn s3() -> FiniteGroup {
        "S:3".parse().unwrap()
    }

    #[test]
    fn torus_link_presentation() {
        let c = pi1(&LinkFamily::torus(3, 2, 2).unwrap());
        assert_eq!(c.presentation.to_text(), "gens: x y u1\nrel: x^3 y^-2\nrel: y^2 u1 y^-2 u1^-1\n");
        let p = &c.presentation;
        assert_eq!(c.components[0].meridian, p.word("y u1^-1").unwrap());
        assert_eq!(c.components[1].meridian, p.word("u1 x^-1").unwrap());
        assert_eq!(c.components[0].longitude, p.word("x^3").unwrap());
        let c3 = pi1(&LinkFamily::torus(3, 2, 3).unwrap());
        let reparsed = Presentation::parse(&c3.presentation.to_text()).unwrap();
        assert_eq!(reparsed, c3.presentation);
        assert_eq!((reparsed.generator_count(), reparsed.relators().len()), (4, 3));
    }

    #[test]
    fn necklace_and_hopf_presentations() {
        let c = pi1(&LinkFamily::Necklace(2));
        assert_eq!(c.presentation.to_text(), "gens: x x1 x2\nrel: x x1 x^-1 x1^-1\nrel: x x2 x^-1 x2^-1\n");
        let h = pi1(&LinkFamily::Hopf(1));
        assert_eq!(h.presentation.to_text(), "gens: y x1\nrel: y x1 y^-1 x1^-1\n");
    }

    #[test]
    fn generator_formulas() {
        let link = LinkFamily::torus(3, 2, 3).unwrap();
        let p = pi1(&link).presentation;
        let gens = motion_generators(&link);
        let s1 = &gens[0].1;
        assert_eq!(s1.image(2), &p.word("y u1^-1 u2").unwrap());
        assert_eq!(s1.image(3), &p.word("u2").unwrap());
        assert_eq!(s1.image(0), &p.word("x").unwrap());
        let link2 = LinkFamily::torus(3, 2, 2).unwrap();
        let p2 = pi1(&link2).presentation;
        let r1 = &motion_generators(&link2)[1].1;
        let c = p2.word("y u1^-1").unwrap();
        assert_eq!(r1.image(2), &Word::generator(2).conjugate_by(&c));
        assert_eq!(r1.image(0), &Word::generator(0).conjugate_by(&c));
        assert_eq!(r1.image(1), &Word::generator(1));
        let neck = motion_generators(&LinkFamily::Necklace(3));
        let shift = &neck.last().unwrap().1;
        assert_eq!(shift.images(), &[0, 3, 1, 2].map(Word::generator));
    }

    #[test]
    fn generators_preserve_relators_semantically() {
        let g = s3();
        for link in [LinkFamily::torus(3, 2, 3).unwrap(), LinkFamily::Necklace(3), LinkFamily::torus(1, 1, 3).unwrap()] {
            let p = pi1(&link).presentation;
            for h in enumerate_homs(&p, &g) {
                for (_, e) in motion_generators(&link) {
                    let pulled: Vec<usize> = e.images().iter().map(|w| crate::homs::evaluate(&g, &h.images, w)).collect();
                    assert!(crate::homs::is_hom(&p, &g, &pulled));
                }
            }
        }
    }

    #[test]
    fn sigma_and_inverse_cancel_semantically() {
        let g = s3();
        let link = LinkFamily::torus(3, 2, 3).unwrap();
        let p = pi1(&link).presentation;
        let classes = HomClasses::of(&p, &g);
        let (_, s1) = &motion_generators(&link)[0];
        // σ1⁻¹: u1 ↦ u2 ... solved from u1' = y u1⁻¹ u2: u1 = u2 u1'⁻¹ y
        let inv = Endomorphism::with_images(4, &[(2, p.word("u2 u1^-1 y").unwrap())]).unwrap();
        for c in classes.classes() {
            let img = &c.canonical.images;
            let comp = s1.compose(&inv);
            let pulled: Vec<usize> = comp.images().iter().map(|w| crate::homs::evaluate(&g, img, w)).collect();
            assert_eq!(&pulled, img);
        }
    }

    #[test]
    fn necklace_relations_hold_as_endomorphisms() {
        for n in 2..=4 {
            let link = LinkFamily::Necklace(n);
            let gens: Vec<Endomorphism> = motion_generators(&link).into_iter().map(|(_, e)| e).collect();
            let p = &gens[n - 1];
            let mut pinv = p.clone();
            for _ in 0..n - 2 {
                pinv = pinv.compose(p);
            }
            for i in 2..n {
                assert_eq!(p.compose(&gens[i - 1]).compose(&pinv), gens[i - 2]);
            }
            let p2 = p.compose(p);
            let p2inv = pinv.compose(&pinv);
            assert_eq!(p2.compose(&gens[0]).compose(&p2inv), gens[n - 2]);
        }
    }

    #[test]
    fn trivial_labels_on_trefoil_pair() {
        let g = s3();
        let link = LinkFamily::torus(3, 2, 2).unwrap();
        let m = motion_rep(&link, &g, FluxLabel { g: 0, h: 0 }, None).unwrap();
        assert_eq!(m.space.dim(), 1);
        let report = verify_motion_relations(&m.rep, &motion_presentation(&link));
        assert!(report.all_hold());
    }

    #[test]
    fn trivial_group_gives_trivial_rep() {
        let g = FiniteGroup::trivial();
        for link in [LinkFamily::torus(3, 2, 3).unwrap(), LinkFamily::Necklace(2)] {
            let axis = link.has_axis().then_some(FluxLabel { g: 0, h: 0 });
            let m = motion_rep(&link, &g, FluxLabel { g: 0, h: 0 }, axis).unwrap();
            assert_eq!(m.rep.dim, 1);
            assert!(verify_motion_relations(&m.rep, &motion_presentation(&link)).all_hold());
        }
    }

    #[test]
    fn presentation_families() {
        let fam = |p, q| motion_presentation(&LinkFamily::torus(p, q, 2).unwrap()).family;
        assert_eq!(fam(3, 2), MotionFamily::Odd);
        assert_eq!(fam(3, 1), MotionFamily::Even);
        assert_eq!(fam(1, 1), MotionFamily::Hopf);
        let odd = motion_presentation(&LinkFamily::torus(3, 2, 3).unwrap());
        assert!(odd.relators.iter().any(|r| r.name == "r2s2 = s2r2"));
        assert!(!odd.relators.iter().any(|r| r.name == "r2s1 = s1r2"));
    }

    #[test]
    fn bezout() {
        assert_eq!(bezout_uv(3, 2), (1, 1));
        assert_eq!(bezout_uv(1, 1), (1, 2));
        assert_eq!(bezout_uv(3, 1), (2, 1));
        assert_eq!(bezout_uv(2, 3), (1, 2));
    }

    #[test]
    fn spec_parsing() {
        assert_eq!("torus:3,2,2".parse::<LinkFamily>().unwrap(), LinkFamily::Torus { p: 3, q: 2, n: 2 });
        assert!("torus:2,4,2".parse::<LinkFamily>().is_err());
        assert_eq!("necklace:3".parse::<LinkFamily>().unwrap(), LinkFamily::Necklace(3));
        assert!("ring:3".parse::<LinkFamily>().is_err());
    }

    #[test]
    fn flux_parsing() {
        let g: FiniteGroup = "prod(Z:2,Z:3)".parse().unwrap();
        let f = FluxLabel::parse(&g, "(1,0),(0,2)").unwrap();
        assert_eq!(g.label(f.g), "(1,0)");
        assert_eq!(g.label(f.h), "(0,2)");
        let s = s3();
        assert!(FluxLabel::parse(&s, "(12),(123)").is_err());
    }
}

//! The Ψ bijection between torus-link blocks and punctured-cylinder spaces
//! over `C_G(y₀^q)`, and the resulting block decomposition.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{bezout_uv, motion_generators, motion_rep, torus_meridian, FluxLabel, LinkError, LinkFamily, MotionRep};
use crate::group::{FiniteGroup, Subgroup};
use crate::homs::{act, conjugate_images, BoundaryCondition, HomClasses, LabeledSpace};
use crate::perm::generated_order;
use crate::presentation::{Presentation, Word};

/// Limit for image-group closures in reports.
const IMAGE_LIMIT: usize = 1 << 20;

/// How the base tuple of a block is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BaseChoice {
    /// Minimal canonical form in the block.
    Minimal,
    /// A different tuple of the block: the second class if there is one,
    /// otherwise a conjugate of the minimal tuple or alternative witnesses.
    Alternate,
}

/// Base tuple `(x₀, y₀, u_{i,0})` with witnesses `a_{i,0}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaseTuple {
    pub images: Vec<usize>,
    pub witnesses: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PsiReport {
    pub x_class: usize,
    pub y_class: usize,
    pub base: BaseTuple,
    pub centralizer_order: usize,
    /// Global indices of the block's classes in the link space.
    pub s_classes: Vec<usize>,
    pub f_dim: usize,
    /// `map[k]` is the F class of `s_classes[k]`.
    pub map: Vec<usize>,
    pub well_defined: bool,
    pub injective: bool,
    pub surjective: bool,
    pub block_preserved: bool,
    pub natural: bool,
    pub failing_generators: Vec<String>,
    pub s_image_order: Option<usize>,
    pub f_image_order: Option<usize>,
}

impl PsiReport {
    pub fn s_dim(&self) -> usize {
        self.s_classes.len()
    }

    pub fn bijective(&self) -> bool {
        self.well_defined && self.injective && self.surjective
    }

    pub fn holds(&self) -> bool {
        self.bijective() && self.block_preserved && self.natural
    }
}

/// Partition of the link space by the conjugacy classes of `x` and `y`.
pub fn torus_blocks(space: &LabeledSpace, g: &FiniteGroup) -> BTreeMap<(usize, usize), Vec<usize>> {
    let cc = g.conjugacy_classes();
    let mut blocks: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (k, c) in space.classes().classes().iter().enumerate() {
        let im = &c.canonical.images;
        blocks.entry((cc.class_of(im[0]), cc.class_of(im[1]))).or_default().push(k);
    }
    blocks
}

fn torus_link_rep(g: &FiniteGroup, p: u32, q: u32, n: usize, flux: FluxLabel) -> Result<MotionRep, LinkError> {
    motion_rep(&LinkFamily::torus(p, q, n)?, g, flux, None)
}

fn all_witnesses(b: &BoundaryCondition, g: &FiniteGroup, images: &[usize]) -> Vec<usize> {
    let values: Vec<usize> = b.words.iter().map(|w| crate::homs::evaluate(g, images, w)).collect();
    (0..g.order())
        .filter(|&a| values.iter().zip(&b.label).all(|(&v, &l)| g.conj(a, l) == v))
        .collect()
}

fn choose_base(space: &LabeledSpace, g: &FiniteGroup, block: &[usize], choice: BaseChoice) -> BaseTuple {
    let first = block[0];
    let minimal = BaseTuple {
        images: space.classes().canonical(first).to_vec(),
        witnesses: space.witnesses(first).to_vec(),
    };
    if choice == BaseChoice::Minimal {
        return minimal;
    }
    if let Some(&second) = block.get(1) {
        return BaseTuple {
            images: space.classes().canonical(second).to_vec(),
            witnesses: space.witnesses(second).to_vec(),
        };
    }
    let moved = (0..g.order())
        .map(|a| conjugate_images(g, a, &minimal.images))
        .find(|im| *im != minimal.images);
    match moved {
        Some(images) => {
            let witnesses = space
                .boundary()
                .iter()
                .map(|b| b.witness(g, &images).expect("conjugate satisfies labels"))
                .collect();
            BaseTuple { images, witnesses }
        }
        None => {
            let witnesses = space
                .boundary()
                .iter()
                .map(|b| *all_witnesses(b, g, &minimal.images).last().expect("labeled"))
                .collect();
            BaseTuple {
                images: minimal.images,
                witnesses,
            }
        }
    }
}

/// F space over `H = C_G(y₀^q)` for a base tuple: free group on
/// `x, y, u_1..u_{n−1}` with `x ~ x₀`, `y ~ y₀`, `m_i ~ a_{i,0} g a_{i,0}⁻¹`.
fn cylinder_space(
    g: &FiniteGroup,
    h: &Subgroup,
    link: &MotionRep,
    n: usize,
    flux: FluxLabel,
    base: &BaseTuple,
) -> (Presentation, LabeledSpace) {
    let pres = Presentation::new(link.presentation.generator_names().to_vec(), Vec::new()).expect("free");
    let sub = |e: usize| h.to_sub(e).expect("base data lies in the centralizer");
    let mut boundary = vec![
        BoundaryCondition::circle(Word::generator(0), sub(base.images[0])),
        BoundaryCondition::circle(Word::generator(1), sub(base.images[1])),
    ];
    for i in 1..=n {
        let gi = g.conj(base.witnesses[i - 1], flux.g);
        boundary.push(BoundaryCondition::circle(torus_meridian(i, n), sub(gi)));
    }
    let space = LabeledSpace::new(&pres, &h.group, boundary).expect("circle labels");
    (pres, space)
}

/// Builds Ψ on one block and verifies it by enumerating both sides.
pub fn psi_bijection(
    g: &FiniteGroup,
    p: u32,
    q: u32,
    n: usize,
    flux: FluxLabel,
    block: (usize, usize),
    choice: BaseChoice,
) -> Result<PsiReport, LinkError> {
    let link = torus_link_rep(g, p, q, n, flux)?;
    let blocks = torus_blocks(&link.space, g);
    let members = blocks.get(&block).ok_or(LinkError::EmptyBlock)?;
    Ok(psi_on_block(g, &link, q, n, flux, block, members, choice))
}

#[allow(clippy::too_many_arguments)]
fn psi_on_block(
    g: &FiniteGroup,
    link: &MotionRep,
    q: u32,
    n: usize,
    flux: FluxLabel,
    block: (usize, usize),
    members: &[usize],
    choice: BaseChoice,
) -> PsiReport {
    let space = &link.space;
    let base = choose_base(space, g, members, choice);
    let y0 = base.images[1];
    let h = g
        .subgroup(&g.centralizer(&[g.pow(y0, q as i64)]), "C(y0^q)")
        .expect("centralizer is a subgroup");
    let (fpres, fspace) = cylinder_space(g, &h, link, n, flux, &base);

    let psi_of = |k: usize| -> Option<usize> {
        let rho = space.classes().canonical(k);
        let c = (0..g.order()).find(|&c| g.conj(c, rho[1]) == y0)?;
        let normalized = conjugate_images(g, c, rho);
        let sub: Option<Vec<usize>> = normalized.iter().map(|&e| h.to_sub(e)).collect();
        fspace.classes().class_of(&h.group, &sub?)
    };
    let images: Vec<Option<usize>> = members.iter().map(|&k| psi_of(k)).collect();
    let well_defined = images.iter().all(Option::is_some);
    let map: Vec<usize> = images.iter().map(|m| m.unwrap_or(usize::MAX)).collect();
    let mut sorted = map.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let injective = well_defined && sorted.len() == map.len();
    let surjective = well_defined && sorted.len() == fspace.dim();

    let position: BTreeMap<usize, usize> = members.iter().enumerate().map(|(i, &k)| (k, i)).collect();
    let mut block_preserved = true;
    let mut natural = true;
    let mut failing = Vec::new();
    let mut s_perms = Vec::new();
    let mut f_perms = Vec::new();
    for (name, e) in motion_generators(&link.link) {
        let s_perm = link.rep.get(&name).expect("generator in rep");
        let local: Option<Vec<usize>> = members.iter().map(|&k| position.get(&s_perm.apply(k)).copied()).collect();
        let Some(local) = local else {
            block_preserved = false;
            failing.push(name);
            continue;
        };
        let ok = match act(&e, fspace.classes(), &fpres, &h.group) {
            Ok(f_perm) if well_defined => {
                let holds = (0..members.len()).all(|i| map[local[i]] == f_perm.apply(map[i]));
                f_perms.push(f_perm);
                holds
            }
            _ => false,
        };
        if !ok {
            natural = false;
            failing.push(name);
        }
        s_perms.push(crate::perm::Permutation::from_images(local).expect("restriction of a permutation"));
    }
    PsiReport {
        x_class: block.0,
        y_class: block.1,
        base,
        centralizer_order: h.group.order(),
        s_classes: members.to_vec(),
        f_dim: fspace.dim(),
        map,
        well_defined,
        injective,
        surjective,
        block_preserved,
        natural,
        failing_generators: failing,
        s_image_order: generated_order(&s_perms, members.len(), IMAGE_LIMIT),
        f_image_order: generated_order(&f_perms, fspace.dim(), IMAGE_LIMIT),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Thm2Block {
    pub x_class: usize,
    pub y_class: usize,
    pub s_dim: usize,
    pub f_dim: usize,
    pub centralizer_order: usize,
    pub bijective: bool,
    pub natural: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Thm2Report {
    pub u: u64,
    pub v: u64,
    pub lhs_dim: usize,
    pub rhs_dim: usize,
    pub blocks: Vec<Thm2Block>,
}

impl Thm2Report {
    pub fn holds(&self) -> bool {
        self.lhs_dim == self.rhs_dim && self.blocks.iter().all(|b| b.bijective)
    }
}

/// Compares the link-space dimension with the sum of the F-space
/// dimensions over all nonempty blocks.
pub fn thm2_decomposition(g: &FiniteGroup, p: u32, q: u32, n: usize, flux: FluxLabel) -> Result<Thm2Report, LinkError> {
    let link = torus_link_rep(g, p, q, n, flux)?;
    let (u, v) = bezout_uv(p, q);
    let blocks: Vec<Thm2Block> = torus_blocks(&link.space, g)
        .iter()
        .map(|(&key, members)| {
            let r = psi_on_block(g, &link, q, n, flux, key, members, BaseChoice::Minimal);
            Thm2Block {
                x_class: key.0,
                y_class: key.1,
                s_dim: r.s_dim(),
                f_dim: r.f_dim,
                centralizer_order: r.centralizer_order,
                bijective: r.bijective(),
                natural: r.natural,
            }
        })
        .collect();
    Ok(Thm2Report {
        u,
        v,
        lhs_dim: link.space.dim(),
        rhs_dim: blocks.iter().map(|b| b.f_dim).sum(),
        blocks,
    })
}

/// Every nonempty block's Ψ report.
pub fn psi_all_blocks(
    g: &FiniteGroup,
    p: u32,
    q: u32,
    n: usize,
    flux: FluxLabel,
    choice: BaseChoice,
) -> Result<Vec<PsiReport>, LinkError> {
    let link = torus_link_rep(g, p, q, n, flux)?;
    Ok(torus_blocks(&link.space, g)
        .iter()
        .map(|(&key, members)| psi_on_block(g, &link, q, n, flux, key, members, choice))
        .collect())
}

/// Independent count of the link space: brute force over all tuples,
/// testing the label equations directly.
pub fn brute_force_dim(g: &FiniteGroup, p: u32, q: u32, n: usize, flux: FluxLabel) -> Result<usize, LinkError> {
    let link = LinkFamily::torus(p, q, n)?;
    let comp = super::pi1(&link);
    let all = HomClasses::of(&comp.presentation, g);
    let boundary = super::link_boundary(&link, flux, None)?;
    Ok(all
        .classes()
        .iter()
        .filter(|c| boundary.iter().all(|b| !all_witnesses(b, g, &c.canonical.images).is_empty()))
        .count())
}

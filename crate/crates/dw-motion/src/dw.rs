//! Dijkgraaf-Witten vector spaces, mapping-class permutation representations,
//! label counts and the dimension-reduction assembly map.

use std::collections::BTreeSet;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::group::{FiniteGroup, GroupError, Subgroup};
use crate::homs::{act, HomClasses, HomError};
use crate::perm::{self, Permutation};
use crate::presentation::{Endomorphism, Presentation, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DwError {
    #[error("unknown surface `{0}`")]
    UnknownSurface(String),
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// V_G(Y): basis of conjugation classes of Hom(π₁(Y), G).
#[derive(Clone, Debug)]
pub struct DwSpace {
    presentation: Presentation,
    classes: HomClasses,
}

impl DwSpace {
    pub fn new(p: &Presentation, g: &FiniteGroup) -> Self {
        DwSpace {
            presentation: p.clone(),
            classes: HomClasses::of(p, g),
        }
    }

    pub fn dim(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &HomClasses {
        &self.classes
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    /// Index of the class of the trivial homomorphism.
    pub fn trivial_class(&self) -> usize {
        self.classes
            .index_of_canonical(&vec![0; self.presentation.generator_count()])
            .expect("trivial hom is always present")
    }
}

/// Named generators acting by permutations on a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationRep {
    pub dim: usize,
    pub names: Vec<String>,
    pub perms: Vec<Permutation>,
}

impl PermutationRep {
    /// Builds the representation `name ↦ act(e)` on a class basis.
    pub fn from_endomorphisms(
        basis: &HomClasses,
        p: &Presentation,
        g: &FiniteGroup,
        gens: &[(String, Endomorphism)],
    ) -> Result<Self, HomError> {
        let perms = gens
            .iter()
            .map(|(_, e)| act(e, basis, p, g))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PermutationRep {
            dim: basis.len(),
            names: gens.iter().map(|(n, _)| n.clone()).collect(),
            perms,
        })
    }

    pub fn get(&self, name: &str) -> Option<&Permutation> {
        self.names.iter().position(|n| n == name).map(|i| &self.perms[i])
    }

    /// Order of the generated permutation group, `None` above `limit`.
    pub fn image_order(&self, limit: usize) -> Option<usize> {
        perm::generated_order(&self.perms, self.dim, limit)
    }
}

/// Mapping-class permutation representation on V_G(Y).
pub fn mcg_rep(
    space: &DwSpace,
    g: &FiniteGroup,
    gens: &[(String, Endomorphism)],
) -> Result<PermutationRep, HomError> {
    PermutationRep::from_endomorphisms(&space.classes, &space.presentation, g, gens)
}

/// Built-in closed manifolds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Surface {
    Sphere,
    Circle,
    Torus,
    ThreeTorus,
    Genus(usize),
}

impl FromStr for Surface {
    type Err = DwError;

    fn from_str(s: &str) -> Result<Self, DwError> {
        match s.trim() {
            "sphere" => Ok(Surface::Sphere),
            "circle" => Ok(Surface::Circle),
            "torus" => Ok(Surface::Torus),
            "t3" => Ok(Surface::ThreeTorus),
            other => other
                .strip_prefix("genus:")
                .and_then(|g| g.parse().ok())
                .map(Surface::Genus)
                .ok_or_else(|| DwError::UnknownSurface(other.to_string())),
        }
    }
}

/// SL(3,Z) generators acting on T³.
pub const T3_MATRIX: [[i64; 3]; 3] = [[1, 1, 0], [0, 1, 0], [0, 0, 1]];
pub const S3_MATRIX: [[i64; 3]; 3] = [[0, 0, 1], [1, 0, 0], [0, 1, 0]];

fn rows<const N: usize>(m: &[[i64; N]; N]) -> Vec<Vec<i64>> {
    m.iter().map(|r| r.to_vec()).collect()
}

impl Surface {
    pub fn presentation(&self) -> Presentation {
        match self {
            Surface::Sphere => Presentation::sphere(),
            Surface::Circle => Presentation::circle(),
            Surface::Torus => Presentation::torus(),
            Surface::ThreeTorus => Presentation::torus_dim(3),
            Surface::Genus(g) => Presentation::closed_surface(*g),
        }
    }

    /// Generators of the mapping class group used for representations:
    /// `S: a↦b, b↦a⁻¹` and `T: a↦ab` on T², the S₃/T₃ matrices on T³.
    /// Other manifolds get none.
    pub fn mapping_class_generators(&self) -> Vec<(String, Endomorphism)> {
        match self {
            Surface::Torus => vec![
                ("S".to_string(), t2_s()),
                ("T".to_string(), t2_t()),
            ],
            Surface::ThreeTorus => vec![
                ("S".to_string(), Endomorphism::from_matrix(&rows(&S3_MATRIX))),
                ("T".to_string(), Endomorphism::from_matrix(&rows(&T3_MATRIX))),
            ],
            _ => Vec::new(),
        }
    }
}

/// `S: a ↦ b, b ↦ a⁻¹` on T².
pub fn t2_s() -> Endomorphism {
    Endomorphism::new(vec![Word::generator(1), Word::power(0, -1)]).expect("two generators")
}

/// `T: a ↦ a·b, b ↦ b` on T².
pub fn t2_t() -> Endomorphism {
    Endomorphism::new(vec![Word::from_powers(&[(0, 1), (1, 1)]), Word::generator(1)]).expect("two generators")
}

/// Integer matrix product.
pub fn int_mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect())
        .collect()
}

/// Embeds a 2×2 integer matrix into 3×3 acting on coordinates `i < j`,
/// fixing the remaining one.
pub fn embed_sl2(m: [[i64; 2]; 2], i: usize, j: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![0; 3]; 3];
    for (k, row) in out.iter_mut().enumerate() {
        row[k] = 1;
    }
    let idx = [i, j];
    for a in 0..2 {
        for b in 0..2 {
            out[idx[a]][idx[b]] = m[a][b];
        }
    }
    out
}

/// `T₂ = [[1,1],[0,1]]`, `S₂ = [[0,-1],[1,0]]`.
pub const T2_MATRIX: [[i64; 2]; 2] = [[1, 1], [0, 1]];
pub const S2_MATRIX: [[i64; 2]; 2] = [[0, -1], [1, 0]];

/// Checks `T₃ = T₂₁` and `S₃ = S₂₁·S₂₃`, where `X₂₁` acts on the first two
/// coordinates and `X₂₃` on the last two.
pub fn sl3_generation_identities() -> (bool, bool) {
    let t21 = embed_sl2(T2_MATRIX, 0, 1);
    let s21 = embed_sl2(S2_MATRIX, 0, 1);
    let s23 = embed_sl2(S2_MATRIX, 1, 2);
    (rows(&T3_MATRIX) == t21, rows(&S3_MATRIX) == int_mat_mul(&s21, &s23))
}

/// One summand `V_{C(g)}(Y)` of the assembly.
#[derive(Clone, Debug)]
pub struct AssemblyBlock {
    /// Conjugacy class index in G and its minimal-index representative.
    pub class_index: usize,
    pub rep: usize,
    pub centralizer: Subgroup,
    pub source: HomClasses,
    /// Target basis index of each source class.
    pub map: Vec<usize>,
}

/// `⊕_[g] V_{C(g)}(Y) → V_G(Y×S¹)`.
#[derive(Clone, Debug)]
pub struct AssemblyMap {
    pub product: Presentation,
    pub target: HomClasses,
    pub blocks: Vec<AssemblyBlock>,
}

impl AssemblyMap {
    pub fn source_dim(&self) -> usize {
        self.blocks.iter().map(|b| b.source.len()).sum()
    }

    /// Whether the images of all blocks partition the target basis.
    pub fn is_bijective(&self) -> bool {
        let mut hit = vec![false; self.target.len()];
        for b in &self.blocks {
            for &t in &b.map {
                if std::mem::replace(&mut hit[t], true) {
                    return false;
                }
            }
        }
        hit.into_iter().all(|h| h)
    }
}

/// Block for one element `g`: `[φ: π₁(Y) → C(g)] ↦ [(φ, t ↦ g)]`.
pub fn assemble_block(
    py: &Presentation,
    g: &FiniteGroup,
    target: &HomClasses,
    rep: usize,
) -> Result<AssemblyBlock, DwError> {
    let cent = g.subgroup(&g.centralizer(&[rep]), format!("C({})", g.label(rep)))?;
    let source = HomClasses::of(py, &cent.group);
    let map = source
        .classes()
        .iter()
        .map(|c| {
            let mut images: Vec<usize> = c.canonical.images.iter().map(|&x| cent.to_ambient(x)).collect();
            images.push(rep);
            target.class_of(g, &images).ok_or(HomError::NotAHom(0))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AssemblyBlock {
        class_index: g.conjugacy_classes().class_of(rep),
        rep,
        centralizer: cent,
        source,
        map,
    })
}

/// Builds the assembly map over all conjugacy classes.
pub fn assemble_dimension_reduction(py: &Presentation, g: &FiniteGroup) -> Result<AssemblyMap, DwError> {
    let product = py.times_circle();
    let target = HomClasses::of(&product, g);
    let blocks = g
        .conjugacy_classes()
        .reps()
        .into_iter()
        .map(|rep| assemble_block(py, g, &target, rep))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AssemblyMap {
        product,
        target,
        blocks,
    })
}

/// Target basis indices hit by the block built from element `rep`.
pub fn block_image(py: &Presentation, g: &FiniteGroup, target: &HomClasses, rep: usize) -> Result<BTreeSet<usize>, DwError> {
    Ok(assemble_block(py, g, target, rep)?.map.into_iter().collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntertwinerReport {
    pub holds: bool,
    /// Blocks (by class index) where the square fails.
    pub failing_blocks: Vec<usize>,
    pub target_order: usize,
    pub block_orders: Vec<usize>,
}

/// Checks `ρ_as ∘ (⊕ f_*) = (f×id)_* ∘ ρ_as` as permutations.
pub fn verify_intertwiner(
    map: &AssemblyMap,
    py: &Presentation,
    g: &FiniteGroup,
    f: &Endomorphism,
) -> Result<IntertwinerReport, DwError> {
    let big = act(&f.extend_identity(1), &map.target, &map.product, g)?;
    let mut failing = Vec::new();
    let mut block_orders = Vec::new();
    for b in &map.blocks {
        let small = act(f, &b.source, py, &b.centralizer.group)?;
        block_orders.push(small.order());
        if (0..b.source.len()).any(|s| b.map[small.apply(s)] != big.apply(b.map[s])) {
            failing.push(b.class_index);
        }
    }
    Ok(IntertwinerReport {
        holds: failing.is_empty(),
        failing_blocks: failing,
        target_order: big.order(),
        block_orders,
    })
}

/// One term of the label count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabelTerm {
    pub class: Vec<usize>,
    pub centralizer_order: usize,
    pub irreps: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabelCount {
    pub count: usize,
    pub terms: Vec<LabelTerm>,
}

/// Σ over classes [ρ] of the number of irreducible representations of
/// `C_G(Im ρ)`, counted as its number of conjugacy classes.
pub fn count_labels(p: &Presentation, g: &FiniteGroup) -> Result<LabelCount, DwError> {
    let classes = HomClasses::of(p, g);
    let mut terms = Vec::new();
    for c in classes.classes() {
        let cent = g.centralizer(&c.canonical.images);
        let sub = g.subgroup(&cent, "C")?;
        terms.push(LabelTerm {
            class: c.canonical.images.clone(),
            centralizer_order: cent.len(),
            irreps: sub.group.conjugacy_classes().len(),
        });
    }
    Ok(LabelCount {
        count: terms.iter().map(|t| t.irreps).sum(),
        terms,
    })
}

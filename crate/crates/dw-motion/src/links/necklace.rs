//! Comparison of the necklace-link motion representation with the braid
//! representation on the punctured disk over `C_G(g_c)`.

use std::collections::HashSet;

use serde::Serialize;

use super::{motion_generators, motion_rep, necklace_sigma, FluxLabel, LinkError, LinkFamily};
use crate::group::FiniteGroup;
use crate::homs::{act, BoundaryCondition, LabeledSpace};
use crate::perm::{closure, Permutation};
use crate::presentation::{Presentation, Word};

const IMAGE_LIMIT: usize = 1 << 20;

#[derive(Clone, Debug, Serialize)]
pub struct NecklaceReport {
    pub n: usize,
    pub link_dim: usize,
    pub disk_dim: usize,
    pub centralizer_order: usize,
    /// Puncture labels in the centralizer, as ambient element indices.
    pub disk_labels: Vec<usize>,
    /// `t_map[k]` is the link class of disk class `k`.
    pub t_map: Vec<usize>,
    pub well_defined: bool,
    pub bijective: bool,
    pub commutes: bool,
    pub failing_generators: Vec<String>,
    pub link_image_order: Option<usize>,
    pub disk_image_order: Option<usize>,
    pub images_equal: bool,
}

impl NecklaceReport {
    pub fn holds(&self) -> bool {
        self.bijective && self.commutes && self.images_equal
    }
}

/// Builds `T([x_i]) = [g_c, x_i]` from disk classes to link classes with
/// labels `(g, g_c)` on each `L_i` and `(g_c, h_c)` on the axis, then checks
/// bijectivity, the braid squares and equality of the generated images.
pub fn necklace_t_check(g: &FiniteGroup, n: usize, gl: usize, gc: usize, hc: usize) -> Result<NecklaceReport, LinkError> {
    let link = LinkFamily::Necklace(n);
    let flux = FluxLabel::new(g, gl, gc)?;
    let axis = FluxLabel::new(g, gc, hc)?;
    let m = motion_rep(&link, g, flux, Some(axis))?;
    let h = g.subgroup(&g.centralizer(&[gc]), "C(g_c)")?;

    // Puncture labels a_{c,0}⁻¹a_{i,0} g a_{i,0}⁻¹a_{c,0} from the minimal base tuple.
    let disk_labels: Vec<usize> = if m.space.dim() > 0 {
        let w = m.space.witnesses(0);
        let ac_inv = g.inv(w[n]);
        (0..n).map(|i| g.conj(g.mul(ac_inv, w[i]), gl)).collect()
    } else {
        vec![gl; n]
    };
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let disk = Presentation::new(names, Vec::new()).expect("free");
    let sub = |e: usize| h.to_sub(e).ok_or_else(|| LinkError::Invalid(format!("{} does not commute with g_c", g.label(e))));
    let mut boundary = Vec::new();
    for (i, &l) in disk_labels.iter().enumerate() {
        boundary.push(BoundaryCondition::circle(Word::generator(i), sub(l)?));
    }
    let outer = Word::product((0..n).map(Word::generator).collect::<Vec<_>>().iter());
    boundary.push(BoundaryCondition::circle(outer, sub(hc)?));
    let dspace = LabeledSpace::new(&disk, &h.group, boundary)?;

    let t: Vec<Option<usize>> = dspace
        .classes()
        .classes()
        .iter()
        .map(|c| {
            let mut amb = vec![gc];
            amb.extend(c.canonical.images.iter().map(|&e| h.to_ambient(e)));
            m.space.classes().class_of(g, &amb)
        })
        .collect();
    let well_defined = t.iter().all(Option::is_some);
    let t_map: Vec<usize> = t.iter().map(|x| x.unwrap_or(usize::MAX)).collect();
    let bijective = well_defined
        && t_map.len() == m.space.dim()
        && t_map.iter().collect::<HashSet<_>>().len() == t_map.len();

    let mut commutes = bijective;
    let mut failing = Vec::new();
    let mut disk_perms = Vec::new();
    for i in 1..n {
        let name = format!("sigma{i}");
        let link_perm = m.rep.get(&name).expect("sigma in rep");
        match act(&necklace_sigma(n, i - 1, i), dspace.classes(), &disk, &h.group) {
            Ok(dp) => {
                let ok = bijective && (0..dspace.dim()).all(|k| link_perm.apply(t_map[k]) == t_map[dp.apply(k)]);
                if !ok {
                    commutes = false;
                    failing.push(name);
                }
                disk_perms.push(dp);
            }
            Err(_) => {
                commutes = false;
                failing.push(name);
            }
        }
    }

    let link_image = closure(&m.rep.perms, m.rep.dim, IMAGE_LIMIT);
    let disk_image = closure(&disk_perms, dspace.dim(), IMAGE_LIMIT);
    let images_equal = bijective
        && match (&link_image, &disk_image) {
            (Some(li), Some(di)) => {
                let t_inv = Permutation::from_images(t_map.clone()).expect("bijective").inverse();
                let transported: HashSet<Permutation> = di
                    .iter()
                    .map(|d| {
                        let images = (0..m.rep.dim).map(|k| t_map[d.apply(t_inv.apply(k))]).collect();
                        Permutation::from_images(images).expect("conjugate of a permutation")
                    })
                    .collect();
                transported == *li
            }
            _ => false,
        };
    debug_assert_eq!(motion_generators(&link).len(), m.rep.perms.len());
    Ok(NecklaceReport {
        n,
        link_dim: m.space.dim(),
        disk_dim: dspace.dim(),
        centralizer_order: h.group.order(),
        disk_labels,
        t_map,
        well_defined,
        bijective,
        commutes,
        failing_generators: failing,
        link_image_order: link_image.map(|s| s.len()),
        disk_image_order: disk_image.map(|s| s.len()),
        images_equal,
    })
}

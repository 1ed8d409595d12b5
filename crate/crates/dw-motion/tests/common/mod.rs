//! Brute-force oracles shared by the integration tests. Everything here
//! works from the multiplication table and raw words only.

#![allow(dead_code)]

use std::collections::HashSet;

use dw_motion::group::FiniteGroup;
use dw_motion::presentation::{Presentation, Word};

pub fn eval(g: &FiniteGroup, images: &[usize], w: &Word) -> usize {
    w.letters().iter().fold(g.identity(), |acc, l| {
        let x = images[l.generator];
        g.mul(acc, if l.inverse { g.inv(x) } else { x })
    })
}

/// Every tuple of images satisfying all relators, by exhaustive search.
pub fn all_homs(p: &Presentation, g: &FiniteGroup) -> Vec<Vec<usize>> {
    let k = p.generator_count();
    let total = g.order().pow(k as u32);
    (0..total)
        .map(|mut code| {
            (0..k)
                .map(|_| {
                    let e = code % g.order();
                    code /= g.order();
                    e
                })
                .collect::<Vec<_>>()
        })
        .filter(|im| p.relators().iter().all(|r| eval(g, im, r) == g.identity()))
        .collect()
}

pub fn conj_tuple(g: &FiniteGroup, a: usize, t: &[usize]) -> Vec<usize> {
    t.iter().map(|&x| g.mul(g.mul(a, x), g.inv(a))).collect()
}

/// Number of orbits of `G` acting by conjugation on `tuples`.
pub fn orbit_count(g: &FiniteGroup, tuples: &[Vec<usize>]) -> usize {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut orbits = 0;
    for t in tuples {
        if seen.contains(t) {
            continue;
        }
        orbits += 1;
        for a in 0..g.order() {
            seen.insert(conj_tuple(g, a, t));
        }
    }
    orbits
}

pub fn centralizer_of(g: &FiniteGroup, set: &[usize]) -> Vec<usize> {
    (0..g.order())
        .filter(|&a| set.iter().all(|&x| g.mul(a, x) == g.mul(x, a)))
        .collect()
}

/// Labels on the boundary of `Σ × I`: pairs of a class of `ρ` and an irrep
/// of `C(Im ρ)`. Counted as commuting pairs in the centralizer, summed over
/// homs and divided by `|G|`.
pub fn label_count(p: &Presentation, g: &FiniteGroup) -> usize {
    let total: usize = all_homs(p, g)
        .iter()
        .map(|rho| {
            let c = centralizer_of(g, rho);
            c.iter()
                .flat_map(|&x| c.iter().map(move |&y| (x, y)))
                .filter(|&(x, y)| g.mul(x, y) == g.mul(y, x))
                .count()
        })
        .sum();
    assert_eq!(total % g.order(), 0);
    total / g.order()
}

/// Dimension of `V_G(Y × S¹)` by Burnside over pairs `(ρ, z)` with
/// `z ∈ C(Im ρ)`: `(1/|G|) Σ |C(Im ρ ∪ {z})|`.
pub fn product_circle_dim(p: &Presentation, g: &FiniteGroup) -> usize {
    let total: usize = all_homs(p, g)
        .iter()
        .map(|rho| {
            centralizer_of(g, rho)
                .into_iter()
                .map(|z| {
                    let mut set = rho.clone();
                    set.push(z);
                    centralizer_of(g, &set).len()
                })
                .sum::<usize>()
        })
        .sum();
    total / g.order()
}

/// Labeled hom classes: tuples satisfying the relators and, for each
/// `(words, label)`, some `a` with `ρ(words[j]) = a·label[j]·a⁻¹`.
pub fn labeled_dim(p: &Presentation, g: &FiniteGroup, conditions: &[(Vec<Word>, Vec<usize>)]) -> usize {
    let homs: Vec<Vec<usize>> = all_homs(p, g)
        .into_iter()
        .filter(|rho| {
            conditions.iter().all(|(words, label)| {
                (0..g.order()).any(|a| {
                    words
                        .iter()
                        .zip(label)
                        .all(|(w, &l)| eval(g, rho, w) == g.mul(g.mul(a, l), g.inv(a)))
                })
            })
        })
        .collect();
    orbit_count(g, &homs)
}

pub fn commuting_pairs(g: &FiniteGroup) -> Vec<(usize, usize)> {
    (0..g.order())
        .flat_map(|a| (0..g.order()).map(move |b| (a, b)))
        .filter(|&(a, b)| g.commutes(a, b))
        .collect()
}

/// Vectors of `Z_p^d` fixed by a row-major matrix.
pub fn fixed_vectors(d: usize, p: u32, m: &[u32]) -> u64 {
    let q = (p as usize).pow(d as u32);
    (0..q)
        .filter(|&code| {
            let x: Vec<u64> = (0..d).map(|i| (code / (p as usize).pow(i as u32) % p as usize) as u64).collect();
            (0..d).all(|r| (0..d).map(|c| m[r * d + c] as u64 * x[c]).sum::<u64>() % p as u64 == x[r])
        })
        .count() as u64
}

/// `|SL(d, p)|` from the order formula.
pub fn sl_order(d: u32, p: u64) -> u64 {
    let gl: u64 = (0..d).map(|i| p.pow(d) - p.pow(i)).product();
    gl / (p - 1)
}

/// Groups used for the sweep properties.
pub fn small_groups() -> Vec<FiniteGroup> {
    let mut out = vec![FiniteGroup::trivial(), FiniteGroup::quaternion()];
    for n in 1..=7 {
        out.push(FiniteGroup::cyclic(n).unwrap());
    }
    for n in 1..=4 {
        out.push(FiniteGroup::symmetric(n).unwrap());
    }
    for n in 3..=6 {
        out.push(FiniteGroup::dihedral(n).unwrap());
    }
    out.push(FiniteGroup::special_linear(2, 2).unwrap());
    out.push(FiniteGroup::special_linear(2, 3).unwrap());
    out.push(FiniteGroup::product(&FiniteGroup::cyclic(2).unwrap(), &FiniteGroup::symmetric(3).unwrap()).unwrap());
    out
}

/// Flat colorings by enumerating every assignment of group elements to
/// edges, `g_ab·g_bc = g_ac` on each triangle `a < b < c`.
pub fn brute_force_colorings(t: &dw_motion::simplicial::Triangulation, g: &FiniteGroup) -> u64 {
    let edges = t.edges();
    let idx = |a: usize, b: usize| edges.iter().position(|&e| e == (a.min(b), a.max(b))).expect("edge");
    let tris: Vec<[usize; 3]> = t
        .triangles()
        .iter()
        .map(|tri| {
            let mut v = *tri;
            v.sort_unstable();
            [idx(v[0], v[1]), idx(v[1], v[2]), idx(v[0], v[2])]
        })
        .collect();
    let n = g.order();
    let total = (n as u64).pow(edges.len() as u32);
    let mut color = vec![0usize; edges.len()];
    let mut count = 0;
    for mut code in 0..total {
        for c in color.iter_mut() {
            *c = (code % n as u64) as usize;
            code /= n as u64;
        }
        if tris.iter().all(|&[ab, bc, ac]| g.mul(color[ab], color[bc]) == color[ac]) {
            count += 1;
        }
    }
    count
}

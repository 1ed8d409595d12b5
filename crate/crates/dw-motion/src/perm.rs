//! Permutations of basis indices and permutation-group closure.

use std::collections::HashSet;
use std::fmt;

/// A permutation of `0..n`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_notation())
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Returns `None` unless `images` is a bijection on `0..len`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || std::mem::replace(&mut seen[x], true) {
                return None;
            }
        }
        Some(Permutation(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn fixes(&self, i: usize) -> bool {
        self.0[i] == i
    }

    /// Nontrivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.0[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| lcm(acc, c.len()))
    }

    /// Cycle notation with 0-based points, `()` for the identity.
    pub fn cycle_notation(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let pts: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                format!("({})", pts.join(" "))
            })
            .collect()
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Product of a word of permutations: `perms[w0] ∘ perms[w1] ∘ …`.
pub fn evaluate_word(perms: &[Permutation], word: &[(usize, i32)], degree: usize) -> Permutation {
    let mut acc = Permutation::identity(degree);
    for &(g, e) in word {
        let step = if e < 0 { perms[g].inverse() } else { perms[g].clone() };
        for _ in 0..e.unsigned_abs() {
            acc = acc.compose(&step);
        }
    }
    acc
}

/// Elements of the group generated by `gens`, or `None` once more than
/// `limit` elements have been found.
pub fn closure(gens: &[Permutation], degree: usize, limit: usize) -> Option<HashSet<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = g.compose(&x);
            if !seen.contains(&y) {
                if seen.len() >= limit {
                    return None;
                }
                seen.insert(y.clone());
                frontier.push(y);
            }
        }
    }
    Some(seen)
}

/// Order of the generated group, `None` above `limit`.
pub fn generated_order(gens: &[Permutation], degree: usize, limit: usize) -> Option<usize> {
    closure(gens, degree, limit).map(|s| s.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_first() {
        let a = Permutation::from_images(vec![1, 0, 2]).unwrap();
        let b = Permutation::from_images(vec![0, 2, 1]).unwrap();
        assert_eq!(a.compose(&b).images(), &[1, 2, 0]);
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0]).is_none());
        assert!(Permutation::from_images(vec![2, 0]).is_none());
    }

    #[test]
    fn cycle_notation_and_order() {
        let p = Permutation::from_images(vec![1, 2, 0, 4, 3]).unwrap();
        assert_eq!(p.cycle_notation(), "(0 1 2)(3 4)");
        assert_eq!(p.order(), 6);
        assert_eq!(Permutation::identity(3).cycle_notation(), "()");
    }

    #[test]
    fn closure_of_symmetric_generators() {
        let t = Permutation::from_images(vec![1, 0, 2, 3]).unwrap();
        let c = Permutation::from_images(vec![1, 2, 3, 0]).unwrap();
        assert_eq!(generated_order(&[t.clone(), c], 4, 100), Some(24));
        assert_eq!(generated_order(&[t], 4, 100), Some(2));
    }

    #[test]
    fn closure_respects_limit() {
        let t = Permutation::from_images(vec![1, 0, 2, 3]).unwrap();
        let c = Permutation::from_images(vec![1, 2, 3, 0]).unwrap();
        assert_eq!(generated_order(&[t, c], 4, 10), None);
    }
}

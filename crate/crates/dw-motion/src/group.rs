//! Finite groups stored as indexed multiplication tables.
//!
//! Element `0` is always the identity. Constructors enumerate elements in a
//! fixed order so that canonical forms built on top of the index order are
//! reproducible.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use thiserror::Error;

/// Largest group order the table representation accepts.
pub const MAX_ORDER: usize = 10_000;

/// Orders up to this bound get an exhaustive associativity check.
const EXHAUSTIVE_ASSOCIATIVITY: usize = 200;
const RANDOM_TRIPLES: usize = 200_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("malformed group spec `{0}`")]
    BadSpec(String),
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("group order {0} exceeds the supported maximum {MAX_ORDER}")]
    TooLarge(usize),
    #[error("invalid multiplication table: {0}")]
    BadTable(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("element set is not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("cannot read group table: {0}")]
    Io(String),
}

/// Matrix view of an element of SL(d, p), entries row-major in `0..p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixView {
    pub dim: usize,
    pub modulus: u32,
    pub entries: Vec<Vec<u32>>,
}

/// A finite group with identity at index 0.
#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    labels: Vec<String>,
    label_index: HashMap<String, usize>,
    matrices: Option<MatrixView>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

impl FiniteGroup {
    /// Builds a group from a full multiplication table, validating the axioms.
    pub fn from_table(
        name: impl Into<String>,
        table: &[Vec<usize>],
        labels: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        let n = table.len();
        if table.iter().any(|row| row.len() != n) {
            return Err(GroupError::BadTable("table is not square".into()));
        }
        Self::from_fn(name, n, labels, |a, b| table[a][b])
    }

    fn from_fn(
        name: impl Into<String>,
        n: usize,
        labels: Option<Vec<String>>,
        f: impl Fn(usize, usize) -> usize,
    ) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::BadTable("empty group".into()));
        }
        if n > MAX_ORDER {
            return Err(GroupError::TooLarge(n));
        }
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                let c = f(a, b);
                if c >= n {
                    return Err(GroupError::BadTable(format!("entry {c} out of range")));
                }
                mul[a * n + b] = c as u16;
            }
        }
        let labels = labels.unwrap_or_else(|| (0..n).map(|i| i.to_string()).collect());
        if labels.len() != n {
            return Err(GroupError::BadTable("label count differs from order".into()));
        }
        let mut group = FiniteGroup {
            name: name.into(),
            order: n,
            mul,
            inv: vec![0; n],
            labels: Vec::new(),
            label_index: HashMap::new(),
            matrices: None,
        };
        group.validate()?;
        group.set_labels(labels)?;
        Ok(group)
    }

    fn set_labels(&mut self, labels: Vec<String>) -> Result<(), GroupError> {
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(GroupError::BadTable(format!("duplicate label `{l}`")));
            }
        }
        self.labels = labels;
        self.label_index = index;
        Ok(())
    }

    fn validate(&mut self) -> Result<(), GroupError> {
        let n = self.order;
        for g in 0..n {
            if self.mul(0, g) != g || self.mul(g, 0) != g {
                return Err(GroupError::BadTable("index 0 is not the identity".into()));
            }
        }
        let mut seen = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                let c = self.mul(a, b);
                if seen[c] == a {
                    return Err(GroupError::BadTable(format!("row {a} repeats {c}")));
                }
                seen[c] = a;
            }
        }
        seen.fill(usize::MAX);
        for b in 0..n {
            for a in 0..n {
                let c = self.mul(a, b);
                if seen[c] == b {
                    return Err(GroupError::BadTable(format!("column {b} repeats {c}")));
                }
                seen[c] = b;
            }
        }
        for a in 0..n {
            let b = (0..n).find(|&b| self.mul(a, b) == 0).expect("latin row");
            self.inv[a] = b as u16;
        }
        let assoc = |a: usize, b: usize, c: usize| {
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
        };
        if n <= EXHAUSTIVE_ASSOCIATIVITY {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if !assoc(a, b, c) {
                            return Err(GroupError::BadTable(format!(
                                "not associative at ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
            for _ in 0..RANDOM_TRIPLES {
                let (a, b, c) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !assoc(a, b, c) {
                    return Err(GroupError::BadTable(format!("not associative at ({a},{b},{c})")));
                }
            }
        }
        Ok(())
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        Self::cyclic(1).expect("trivial group")
    }

    /// Cyclic group Z_n with elements `0..n` under addition.
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::from_fn(format!("Z:{n}"), n, Some(labels), |a, b| (a + b) % n)
    }

    /// Symmetric group S_n, n ≤ 7. Permutations are listed lexicographically
    /// by image tuple and compose as functions: `(στ)(x) = σ(τ(x))`.
    pub fn symmetric(n: usize) -> Result<Self, GroupError> {
        if n == 0 || n > 7 {
            return Err(GroupError::BadSpec(format!("S:{n}")));
        }
        let perms = lex_permutations(n);
        let index: HashMap<Vec<u8>, usize> =
            perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let labels = perms.iter().map(|p| cycle_label(p)).collect();
        Self::from_fn(format!("S:{n}"), perms.len(), Some(labels), |a, b| {
            let (s, t) = (&perms[a], &perms[b]);
            let c: Vec<u8> = (0..n).map(|x| s[t[x] as usize]).collect();
            index[&c]
        })
    }

    /// Dihedral group of order 2n, element `r^a s^e` at index `a + n·e`.
    pub fn dihedral(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::BadSpec("D:0".into()));
        }
        let labels = (0..2 * n)
            .map(|i| {
                let (a, e) = (i % n, i / n);
                let r = match a {
                    0 => String::new(),
                    1 => "r".to_string(),
                    _ => format!("r^{a}"),
                };
                match (r.is_empty(), e) {
                    (true, 0) => "e".to_string(),
                    (_, 0) => r,
                    (_, _) => format!("{r}s"),
                }
            })
            .collect();
        Self::from_fn(format!("D:{n}"), 2 * n, Some(labels), |x, y| {
            let (a, e) = (x % n, x / n);
            let (b, f) = (y % n, y / n);
            let b = if e == 0 { b } else { (n - b) % n };
            (a + b) % n + n * ((e + f) % 2)
        })
    }

    /// Quaternion group, labels `1,-1,i,-i,j,-j,k,-k`.
    pub fn quaternion() -> Self {
        // unit products for 1,i,j,k as (sign flip, unit)
        const UNIT: [[(usize, usize); 4]; 4] = [
            [(0, 0), (0, 1), (0, 2), (0, 3)],
            [(0, 1), (1, 0), (0, 3), (1, 2)],
            [(0, 2), (1, 3), (1, 0), (0, 1)],
            [(0, 3), (0, 2), (1, 1), (1, 0)],
        ];
        let labels = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        Self::from_fn("Q8", 8, Some(labels), |x, y| {
            let (ux, sx) = (x / 2, x % 2);
            let (uy, sy) = (y / 2, y % 2);
            let (s, u) = UNIT[ux][uy];
            2 * u + (s + sx + sy) % 2
        })
        .expect("quaternion table")
    }

    /// SL(d, p): d×d matrices over Z_p with determinant 1. The identity is
    /// index 0; the rest follow in row-major lexicographic order of entries.
    pub fn special_linear(d: usize, p: u32) -> Result<Self, GroupError> {
        if !is_prime(p) {
            return Err(GroupError::NotPrime(p));
        }
        if !(2..=3).contains(&d) {
            return Err(GroupError::BadSpec(format!("SL{d}:{p}")));
        }
        let mats = special_linear_matrices(d, p);
        if mats.len() > MAX_ORDER {
            return Err(GroupError::TooLarge(mats.len()));
        }
        let mut code_index = vec![u32::MAX; (p as usize).pow((d * d) as u32)];
        for (i, m) in mats.iter().enumerate() {
            code_index[encode(m, p)] = i as u32;
        }
        let labels = mats.iter().map(|m| matrix_label(m, p)).collect();
        let mut g = Self::from_fn(format!("SL{d}:{p}"), mats.len(), Some(labels), |a, b| {
            code_index[encode(&mat_mul(&mats[a], &mats[b], d, p), p)] as usize
        })?;
        g.matrices = Some(MatrixView {
            dim: d,
            modulus: p,
            entries: mats,
        });
        Ok(g)
    }

    /// Direct product, element `(a, b)` at index `a·|B| + b`.
    pub fn product(a: &FiniteGroup, b: &FiniteGroup) -> Result<Self, GroupError> {
        let (na, nb) = (a.order, b.order);
        if na * nb > MAX_ORDER {
            return Err(GroupError::TooLarge(na * nb));
        }
        let labels = (0..na * nb)
            .map(|i| format!("({},{})", a.label(i / nb), b.label(i % nb)))
            .collect();
        Self::from_fn(
            format!("prod({},{})", a.name, b.name),
            na * nb,
            Some(labels),
            |x, y| a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb),
        )
    }

    /// Reads the `table:` text format: the order on the first line, then one
    /// row of space-separated indices per element.
    pub fn load_table(path: &Path) -> Result<Self, GroupError> {
        let text = std::fs::read_to_string(path).map_err(|e| GroupError::Io(e.to_string()))?;
        Self::parse_table(&format!("table:{}", path.display()), &text)
    }

    /// Parses the table text format.
    pub fn parse_table(name: &str, text: &str) -> Result<Self, GroupError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| GroupError::BadTable("missing order line".into()))?
            .parse()
            .map_err(|_| GroupError::BadTable("order line is not an integer".into()))?;
        if n > MAX_ORDER {
            return Err(GroupError::TooLarge(n));
        }
        let mut table = Vec::with_capacity(n);
        for (r, line) in lines.enumerate() {
            let row: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
            let row = row.map_err(|_| GroupError::BadTable(format!("row {r} is not numeric")))?;
            table.push(row);
        }
        if table.len() != n {
            return Err(GroupError::BadTable(format!("expected {n} rows, found {}", table.len())));
        }
        Self::from_table(name, &table, None)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `a·g·a⁻¹`.
    #[inline]
    pub fn conj(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(a, g), self.inv(a))
    }

    pub fn commutes(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut acc = 0;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commutes(a, b)))
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Looks up an element by label, or by `#k` for index `k`.
    pub fn element(&self, label: &str) -> Result<usize, GroupError> {
        let label = label.trim();
        if let Some(i) = self.label_index.get(label) {
            return Ok(*i);
        }
        if let Some(k) = label.strip_prefix('#').and_then(|s| s.parse::<usize>().ok()) {
            if k < self.order {
                return Ok(k);
            }
        }
        Err(GroupError::UnknownElement(label.to_string()))
    }

    /// Matrix entries of element `a` for SL groups.
    pub fn matrix(&self, a: usize) -> Option<&[u32]> {
        self.matrices.as_ref().map(|m| m.entries[a].as_slice())
    }

    pub fn matrix_view(&self) -> Option<&MatrixView> {
        self.matrices.as_ref()
    }

    /// Row-major multiplication table.
    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub fn conjugacy_classes(&self) -> ConjugacyClasses {
        let n = self.order;
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for g in 0..n {
            if class_of[g] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = Vec::new();
            for a in 0..n {
                let c = self.conj(a, g);
                if class_of[c] == usize::MAX {
                    class_of[c] = id;
                    members.push(c);
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        ConjugacyClasses { classes, class_of }
    }

    /// `{g : gs = sg for all s in set}`, sorted.
    pub fn centralizer(&self, set: &[usize]) -> Vec<usize> {
        (0..self.order)
            .filter(|&g| set.iter().all(|&s| self.commutes(g, s)))
            .collect()
    }

    /// Re-indexes a subgroup as a standalone group.
    pub fn subgroup(&self, elements: &[usize], name: impl Into<String>) -> Result<Subgroup, GroupError> {
        let mut elems = elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        if elems.first() != Some(&0) {
            return Err(GroupError::NotSubgroup("identity missing".into()));
        }
        let mut position = vec![usize::MAX; self.order];
        for (i, &g) in elems.iter().enumerate() {
            position[g] = i;
        }
        for &a in &elems {
            if position[self.inv(a)] == usize::MAX {
                return Err(GroupError::NotSubgroup(format!("no inverse of {}", self.label(a))));
            }
            for &b in &elems {
                if position[self.mul(a, b)] == usize::MAX {
                    return Err(GroupError::NotSubgroup(format!(
                        "{}·{} escapes",
                        self.label(a),
                        self.label(b)
                    )));
                }
            }
        }
        let labels = elems.iter().map(|&g| self.labels[g].clone()).collect();
        let group = Self::from_fn(name, elems.len(), Some(labels), |a, b| {
            position[self.mul(elems[a], elems[b])]
        })?;
        Ok(Subgroup {
            group,
            embedding: elems,
            position,
        })
    }
}

impl FromStr for FiniteGroup {
    type Err = GroupError;

    /// Parses `Z:n`, `S:n`, `D:n`, `Q8`, `SL2:p`, `SL3:p`, `prod(a,b)` and
    /// `table:path`.
    fn from_str(spec: &str) -> Result<Self, GroupError> {
        let s = spec.trim();
        let bad = || GroupError::BadSpec(s.to_string());
        if let Some(path) = s.strip_prefix("table:") {
            return Self::load_table(Path::new(path));
        }
        if s == "Q8" {
            return Ok(Self::quaternion());
        }
        if let Some(inner) = s.strip_prefix("prod(").and_then(|r| r.strip_suffix(')')) {
            let split = top_level_comma(inner).ok_or_else(bad)?;
            let a: FiniteGroup = inner[..split].parse()?;
            let b: FiniteGroup = inner[split + 1..].parse()?;
            return Self::product(&a, &b);
        }
        let (head, arg) = s.split_once(':').ok_or_else(bad)?;
        let n: usize = arg.trim().parse().map_err(|_| bad())?;
        match head.trim() {
            "Z" if n >= 1 => Self::cyclic(n),
            "S" => Self::symmetric(n),
            "D" => Self::dihedral(n),
            "SL2" => Self::special_linear(2, n as u32),
            "SL3" => Self::special_linear(3, n as u32),
            _ => Err(bad()),
        }
    }
}

fn top_level_comma(s: &str) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some(i),
            _ => {}
        }
    }
    None
}

/// Conjugacy classes, each sorted, listed by minimal element.
#[derive(Debug, Clone)]
pub struct ConjugacyClasses {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, k: usize) -> &[usize] {
        &self.classes[k]
    }

    /// Minimal-index representative of class `k`.
    pub fn rep(&self, k: usize) -> usize {
        self.classes[k][0]
    }

    pub fn reps(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }
}

/// A subgroup re-indexed as a group of its own.
#[derive(Debug, Clone)]
pub struct Subgroup {
    pub group: FiniteGroup,
    /// Index in the ambient group of each subgroup element.
    pub embedding: Vec<usize>,
    position: Vec<usize>,
}

impl Subgroup {
    /// Subgroup index of an ambient element, if it belongs to the subgroup.
    pub fn to_sub(&self, g: usize) -> Option<usize> {
        match self.position[g] {
            usize::MAX => None,
            i => Some(i),
        }
    }

    pub fn to_ambient(&self, h: usize) -> usize {
        self.embedding[h]
    }
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn lex_permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("successor");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

fn cycle_label(p: &[u8]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] as usize == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            out.push_str(&(x + 1).to_string());
            x = p[x] as usize;
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

fn encode(m: &[u32], p: u32) -> usize {
    m.iter().fold(0usize, |acc, &x| acc * p as usize + x as usize)
}

fn matrix_label(m: &[u32], p: u32) -> String {
    let parts: Vec<String> = m.iter().map(|x| x.to_string()).collect();
    if p > 10 {
        parts.join(".")
    } else {
        parts.concat()
    }
}

/// Product of row-major d×d matrices over Z_p.
pub fn mat_mul(a: &[u32], b: &[u32], d: usize, p: u32) -> Vec<u32> {
    let mut c = vec![0u32; d * d];
    for i in 0..d {
        for j in 0..d {
            let mut s = 0u32;
            for k in 0..d {
                s += a[i * d + k] * b[k * d + j];
            }
            c[i * d + j] = s % p;
        }
    }
    c
}

/// Determinant mod p for d ∈ {1, 2, 3}.
pub fn det_mod(m: &[u32], d: usize, p: u32) -> u32 {
    let p64 = p as i64;
    let e = |i: usize, j: usize| m[i * d + j] as i64;
    let det = match d {
        1 => e(0, 0),
        2 => e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0),
        3 => {
            e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
                - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
                + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
        }
        _ => panic!("determinant only for d ≤ 3"),
    };
    det.rem_euclid(p64) as u32
}

/// All elements of SL(d, p): identity first, then lexicographic.
pub fn special_linear_matrices(d: usize, p: u32) -> Vec<Vec<u32>> {
    let total = (p as usize).pow((d * d) as u32);
    let identity: Vec<u32> = (0..d * d).map(|i| u32::from(i % (d + 1) == 0)).collect();
    let mut out = vec![identity.clone()];
    for code in 0..total {
        let mut m = vec![0u32; d * d];
        let mut c = code;
        for slot in m.iter_mut().rev() {
            *slot = (c % p as usize) as u32;
            c /= p as usize;
        }
        if m != identity && det_mod(&m, d, p) == 1 {
            out.push(m);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_constructors() -> Vec<FiniteGroup> {
        ["Z:1", "Z:6", "S:3", "S:4", "D:4", "D:5", "Q8", "SL2:2", "SL2:3", "prod(Z:2,S:3)"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect()
    }

    #[test]
    fn orders_match_formulas() {
        let cases = [("S:3", 6), ("S:5", 120), ("D:4", 8), ("Q8", 8), ("SL2:3", 24), ("SL2:5", 120)];
        for (spec, n) in cases {
            assert_eq!(spec.parse::<FiniteGroup>().unwrap().order(), n, "{spec}");
        }
    }

    #[test]
    fn sl_orders_against_brute_force_determinant_count() {
        for (d, p) in [(2usize, 3u32), (3, 2)] {
            let total = (p as usize).pow((d * d) as u32);
            let mut count = 0;
            for code in 0..total {
                let m: Vec<u32> = (0..d * d)
                    .map(|k| ((code / (p as usize).pow(k as u32)) % p as usize) as u32)
                    .collect();
                let det = if d == 2 {
                    (m[0] * m[3] + p * p - m[1] * m[2]) % p
                } else {
                    let t = |i: usize, j: usize| m[i * 3 + j] as i64;
                    let v = t(0, 0) * t(1, 1) * t(2, 2) + t(0, 1) * t(1, 2) * t(2, 0)
                        + t(0, 2) * t(1, 0) * t(2, 1)
                        - t(0, 2) * t(1, 1) * t(2, 0)
                        - t(0, 0) * t(1, 2) * t(2, 1)
                        - t(0, 1) * t(1, 0) * t(2, 2);
                    v.rem_euclid(p as i64) as u32
                };
                count += usize::from(det == 1);
            }
            let g = FiniteGroup::special_linear(d, p).unwrap();
            assert_eq!(g.order(), count);
        }
    }

    #[test]
    fn group_axioms_hold_for_constructors() {
        for g in all_constructors() {
            let n = g.order();
            for a in 0..n {
                assert_eq!(g.mul(a, g.inv(a)), 0);
                for b in 0..n {
                    for c in 0..n {
                        assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn class_counts() {
        let count = |s: &str| s.parse::<FiniteGroup>().unwrap().conjugacy_classes().len();
        assert_eq!(count("S:3"), 3);
        assert_eq!(count("Z:6"), 6);
        assert_eq!(count("SL2:3"), 7);
        assert_eq!(count("Q8"), 5);
        assert_eq!(count("D:4"), 5);
        assert_eq!(count("S:4"), 5);
    }

    #[test]
    fn classes_are_conjugation_orbits() {
        for g in all_constructors() {
            let cc = g.conjugacy_classes();
            for a in 0..g.order() {
                for b in 0..g.order() {
                    let conjugate = (0..g.order()).any(|h| g.conj(h, a) == b);
                    assert_eq!(conjugate, cc.class_of(a) == cc.class_of(b));
                }
            }
        }
    }

    #[test]
    fn orbit_stabilizer() {
        for g in all_constructors() {
            let cc = g.conjugacy_classes();
            for a in 0..g.order() {
                let size = cc.class(cc.class_of(a)).len();
                assert_eq!(size * g.centralizer(&[a]).len(), g.order());
            }
        }
    }

    #[test]
    fn centralizer_examples() {
        let s3: FiniteGroup = "S:3".parse().unwrap();
        let t = s3.element("(12)").unwrap();
        assert_eq!(s3.centralizer(&[t]), vec![0, t]);
        assert_eq!(s3.centralizer(&[]).len(), 6);
        let sl: FiniteGroup = "SL2:3".parse().unwrap();
        let minus = sl.element("2002").unwrap();
        assert_eq!(sl.centralizer(&[minus]).len(), 24);
    }

    #[test]
    fn centralizer_of_noncentral_sl23_element_is_small_subgroup() {
        let sl: FiniteGroup = "SL2:3".parse().unwrap();
        let c = sl.element("1101").unwrap();
        let cent = sl.centralizer(&[c]);
        let sub = sl.subgroup(&cent, "C").unwrap();
        assert!(sub.group.order() <= 6 && 24 % sub.group.order() == 0);
    }

    #[test]
    fn subgroup_reindexing() {
        let s3: FiniteGroup = "S:3".parse().unwrap();
        let rot: Vec<usize> = ["e", "(123)", "(132)"].iter().map(|l| s3.element(l).unwrap()).collect();
        let sub = s3.subgroup(&rot, "A3").unwrap();
        assert_eq!(sub.group.order(), 3);
        assert!(sub.group.is_abelian());
        for a in 0..3 {
            for b in 0..3 {
                assert_eq!(sub.to_ambient(sub.group.mul(a, b)), s3.mul(sub.to_ambient(a), sub.to_ambient(b)));
            }
        }
        let all = s3.subgroup(&(0..6).collect::<Vec<_>>(), "S3").unwrap();
        assert_eq!(all.embedding, (0..6).collect::<Vec<_>>());
        let t = s3.element("(12)").unwrap();
        let u = s3.element("(13)").unwrap();
        assert!(s3.subgroup(&[0, t, u], "bad").is_err());
    }

    #[test]
    fn labels_round_trip_and_identity_first() {
        for g in all_constructors() {
            for a in 0..g.order() {
                assert_eq!(g.element(g.label(a)).unwrap(), a);
                assert_eq!(g.element(&format!("#{a}")).unwrap(), a);
            }
        }
        let sl: FiniteGroup = "SL2:3".parse().unwrap();
        assert_eq!(sl.label(0), "1001");
        assert_eq!(sl.matrix(0).unwrap(), &[1, 0, 0, 1]);
        let s3: FiniteGroup = "S:3".parse().unwrap();
        assert_eq!(s3.label(0), "e");
    }

    #[test]
    fn quaternion_relations() {
        let q = FiniteGroup::quaternion();
        let [i, j, k, m] = ["i", "j", "k", "-1"].map(|l| q.element(l).unwrap());
        assert_eq!(q.mul(i, j), k);
        assert_eq!(q.mul(i, i), m);
        assert_eq!(q.mul(q.mul(i, j), k), m);
    }

    #[test]
    fn table_format_round_trip_and_rejections() {
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let text = format!(
            "3\n{}\n",
            z3.table()
                .iter()
                .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
                .collect::<Vec<_>>()
                .join("\n")
        );
        let g = FiniteGroup::parse_table("t", &text).unwrap();
        assert_eq!(g.table(), z3.table());
        assert!(FiniteGroup::parse_table("t", "2\n0 1\n1 1\n").is_err());
        assert!(FiniteGroup::parse_table("t", "2\n1 0\n0 1\n").is_err());
        let non_assoc = "3\n0 1 2\n1 0 2\n2 2 0\n";
        assert!(FiniteGroup::parse_table("t", non_assoc).is_err());
    }

    #[test]
    fn spec_errors() {
        for bad in ["Z:0", "S:9", "SL2:4", "SL4:2", "foo", "prod(Z:2)", "SL3:5"] {
            assert!(bad.parse::<FiniteGroup>().is_err(), "{bad}");
        }
    }
}

//! Permutation characters of SL(d,p) on Z_p^d and their decompositions
//! into irreducible characters of SL(2,p) and SL(3,p).

use std::collections::{HashMap, HashSet};
use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

use crate::group::{is_prime, mat_mul, FiniteGroup, GroupError};

/// Tolerance on `|lhs − rhs|` per class.
pub const RESIDUAL_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CharError {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("unsupported (d, p) = ({0}, {1})")]
    Unsupported(usize, u32),
    #[error("unknown class tag `{0}`")]
    UnknownTag(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A named class with parameters and a concrete representative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassPoint {
    pub tag: String,
    pub params: Vec<i64>,
    /// Row-major `d × d` matrix over Z_p.
    pub matrix: Vec<u32>,
}

fn rank_mod_p(m: &[u32], rows: usize, cols: usize, p: u32) -> usize {
    let mut a: Vec<Vec<u64>> = (0..rows).map(|r| m[r * cols..(r + 1) * cols].iter().map(|&x| x as u64).collect()).collect();
    let p = p as u64;
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_multiple_of(p)) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = pow_mod(a[rank][col], p - 2, p);
        for x in a[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = a[rank].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p * p - f * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// `p^dim ker(M − I)`: the number of vectors of Z_p^d fixed by `M`.
pub fn permutation_character(d: usize, p: u32, m: &[u32]) -> u64 {
    let mut a = m.to_vec();
    for i in 0..d {
        a[i * d + i] = (a[i * d + i] + p - 1) % p;
    }
    (p as u64).pow((d - rank_mod_p(&a, d, d, p)) as u32)
}

/// Smallest generator of Z_p^×.
pub fn primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    (1..p)
        .find(|&g| (1..p - 1).all(|k| pow_mod(g as u64, k as u64, p as u64) != 1))
        .expect("prime")
}

/// The extension field F_{p^m} as polynomials modulo a monic irreducible.
#[derive(Clone, Debug)]
struct Field {
    p: u32,
    m: usize,
    /// Low-to-high coefficients of the monic modulus, without the leading 1.
    modulus: Vec<u32>,
}

type Elt = Vec<u32>;

impl Field {
    /// Uses the lexicographically smallest monic irreducible of degree `m ≤ 3`.
    fn new(p: u32, m: usize) -> Self {
        let count = p.pow(m as u32);
        for code in 0..count {
            let modulus: Vec<u32> = (0..m).map(|i| code / p.pow(i as u32) % p).collect();
            let has_root = (0..p).any(|x| {
                let mut v = 1u64;
                for &c in modulus.iter().rev() {
                    v = (v * x as u64 + c as u64) % p as u64;
                }
                v == 0
            });
            if !has_root {
                return Field { p, m, modulus };
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    fn constant(&self, c: u32) -> Elt {
        let mut v = vec![0; self.m];
        v[0] = c % self.p;
        v
    }

    fn decode(&self, code: u32) -> Elt {
        (0..self.m).map(|i| code / self.p.pow(i as u32) % self.p).collect()
    }

    fn order(&self) -> u32 {
        self.p.pow(self.m as u32)
    }

    fn add(&self, a: &Elt, b: &Elt) -> Elt {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    fn neg(&self, a: &Elt) -> Elt {
        a.iter().map(|x| (self.p - x) % self.p).collect()
    }

    fn mul(&self, a: &Elt, b: &Elt) -> Elt {
        let p = self.p as u64;
        let mut prod = vec![0u64; 2 * self.m];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for k in (self.m..2 * self.m).rev() {
            let c = prod[k];
            if c != 0 {
                prod[k] = 0;
                for (i, &mc) in self.modulus.iter().enumerate() {
                    prod[k - self.m + i] = (prod[k - self.m + i] + p * p - c * mc as u64 % p) % p;
                }
            }
        }
        prod[..self.m].iter().map(|&x| x as u32).collect()
    }

    fn pow(&self, a: &Elt, e: u64) -> Elt {
        let mut r = self.constant(1);
        let mut b = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        r
    }

    fn is_one(&self, a: &Elt) -> bool {
        *a == self.constant(1)
    }

    fn primitive(&self) -> Elt {
        let n = (self.order() - 1) as u64;
        let primes: Vec<u64> = (2..=n).filter(|&q| n.is_multiple_of(q) && (2..q).all(|r| q % r != 0)).collect();
        (1..self.order())
            .map(|c| self.decode(c))
            .find(|a| primes.iter().all(|&q| !self.is_one(&self.pow(a, n / q))))
            .expect("multiplicative group is cyclic")
    }

    /// Minimal polynomial of `a` over F_p, low-to-high, monic.
    fn min_poly(&self, a: &Elt) -> Vec<u32> {
        let mut conj = vec![a.clone()];
        loop {
            let next = self.pow(conj.last().expect("nonempty"), self.p as u64);
            if next == conj[0] {
                break;
            }
            conj.push(next);
        }
        let mut poly: Vec<Elt> = vec![self.constant(1)];
        for r in &conj {
            let mut next = vec![self.constant(0); poly.len() + 1];
            for (i, c) in poly.iter().enumerate() {
                next[i + 1] = self.add(&next[i + 1], c);
                next[i] = self.add(&next[i], &self.neg(&self.mul(c, r)));
            }
            poly = next;
        }
        poly.iter()
            .map(|c| {
                debug_assert!(c[1..].iter().all(|&x| x == 0));
                c[0]
            })
            .collect()
    }
}

/// Companion matrix (row-major) of a monic polynomial, eigenvalues its roots.
fn companion(poly: &[u32], p: u32) -> Vec<u32> {
    let r = poly.len() - 1;
    let mut m = vec![0; r * r];
    for i in 1..r {
        m[i * r + i - 1] = 1;
    }
    for i in 0..r {
        m[i * r + r - 1] = (p - poly[i]) % p;
    }
    m
}

fn block_diag(blocks: &[Vec<u32>]) -> Vec<u32> {
    let sizes: Vec<usize> = blocks.iter().map(|b| (b.len() as f64).sqrt() as usize).collect();
    let d: usize = sizes.iter().sum();
    let mut m = vec![0; d * d];
    let mut off = 0;
    for (b, &s) in blocks.iter().zip(&sizes) {
        for i in 0..s {
            for j in 0..s {
                m[(off + i) * d + off + j] = b[i * s + j];
            }
        }
        off += s;
    }
    m
}

fn point(tag: &str, params: Vec<i64>, matrix: Vec<u32>) -> ClassPoint {
    ClassPoint {
        tag: tag.to_string(),
        params,
        matrix,
    }
}

/// Smallest `t` such that `x² − t·x + 1` has companion matrix of order `p+1`.
fn order_p_plus_1_element(p: u32) -> Vec<u32> {
    (0..p)
        .map(|t| companion(&[1, (p - t) % p, 1], p))
        .find(|m| element_order(m, 2, p) == (p + 1) as usize)
        .expect("nonsplit torus is cyclic of order p+1")
}

fn identity(d: usize) -> Vec<u32> {
    (0..d * d).map(|k| u32::from(k % (d + 1) == 0)).collect()
}

fn element_order(m: &[u32], d: usize, p: u32) -> usize {
    let id = identity(d);
    let mut x = m.to_vec();
    let mut k = 1;
    while x != id {
        x = mat_mul(&x, m, d, p);
        k += 1;
    }
    k
}

fn mat_pow(m: &[u32], d: usize, p: u32, e: u64) -> Vec<u32> {
    let mut r = identity(d);
    for _ in 0..e {
        r = mat_mul(&r, m, d, p);
    }
    r
}

/// Class representatives of SL(2,p): `1, z, a^l, b^m, c, d, zc, zd`, with
/// `z`, `a^l`, `d`, `zc`, `zd` absent when they coincide for small `p`.
pub fn sl2_class_points(p: u32) -> Result<Vec<ClassPoint>, CharError> {
    if !is_prime(p) {
        return Err(CharError::NotPrime(p));
    }
    let v = primitive_root(p);
    let b = order_p_plus_1_element(p);
    let c = vec![1, 1, 0, 1];
    let mut out = vec![point("1", vec![], identity(2))];
    if p == 2 {
        out.push(point("b", vec![1], b));
        out.push(point("c", vec![], c));
        return Ok(out);
    }
    let z = vec![p - 1, 0, 0, p - 1];
    out.push(point("z", vec![], z.clone()));
    let vinv = pow_mod(v as u64, (p - 2) as u64, p as u64) as u32;
    for l in 1..=((p - 3) / 2) as u64 {
        let a = vec![pow_mod(v as u64, l, p as u64) as u32, 0, 0, pow_mod(vinv as u64, l, p as u64) as u32];
        out.push(point("a", vec![l as i64], a));
    }
    for m in 1..=((p - 1) / 2) as u64 {
        out.push(point("b", vec![m as i64], mat_pow(&b, 2, p, m)));
    }
    let d = vec![1, v, 0, 1];
    out.push(point("zc", vec![], mat_mul(&z, &c, 2, p)));
    out.push(point("zd", vec![], mat_mul(&z, &d, 2, p)));
    out.insert(out.len() - 2, point("c", vec![], c));
    out.insert(out.len() - 2, point("d", vec![], d));
    Ok(out)
}

fn supported_sl3(p: u32) -> Result<(), CharError> {
    if !is_prime(p) {
        return Err(CharError::NotPrime(p));
    }
    // Scalar and twisted unipotent classes are single classes only when
    // Z_p^× has no element of order 3.
    if (p - 1).is_multiple_of(3) {
        return Err(CharError::Unsupported(3, p));
    }
    Ok(())
}

/// Class representatives of SL(3,p) for `p ≢ 1 (mod 3)`, families C1..C8
/// with parameters as exponents of the generators `ρ` (of Z_p^×), `σ` (of
/// F_{p²}^×, with `σ^{p+1} = ρ`) and `τ` (of the norm-one subgroup of
/// F_{p³}^×).
pub fn sl3_class_points(p: u32) -> Result<Vec<ClassPoint>, CharError> {
    supported_sl3(p)?;
    let n = (p - 1) as i64;
    let f2 = Field::new(p, 2);
    let sigma = f2.primitive();
    let rho = f2.pow(&sigma, (p + 1) as u64)[0];
    let rho_pow = |k: i64| pow_mod(rho as u64, k.rem_euclid(n) as u64, p as u64) as u32;

    let mut out = vec![point("C1", vec![0], identity(3))];
    out.push(point("C2", vec![0], vec![1, 0, 0, 1, 1, 0, 0, 0, 1]));
    out.push(point("C3", vec![0, 0], vec![1, 0, 0, 1, 1, 0, 0, 1, 1]));
    for k in 1..n {
        if (3 * k) % n != 0 {
            let (a, b) = (rho_pow(k), rho_pow(-2 * k));
            out.push(point("C4", vec![k], vec![a, 0, 0, 0, a, 0, 0, 0, b]));
        }
    }
    for k in 1..n {
        if (3 * k) % n != 0 {
            let (a, b) = (rho_pow(k), rho_pow(-2 * k));
            out.push(point("C5", vec![k], vec![a, 0, 0, 1, a, 0, 0, 0, b]));
        }
    }
    for k in 0..n {
        for l in k + 1..n {
            let m = (-k - l).rem_euclid(n);
            if m > l {
                out.push(point("C6", vec![k, l, m], vec![rho_pow(k), 0, 0, 0, rho_pow(l), 0, 0, 0, rho_pow(m)]));
            }
        }
    }
    let q2 = (p * p - 1) as i64;
    for k in 1..q2 {
        if k % (p as i64 + 1) == 0 || (k * p as i64) % q2 < k {
            continue;
        }
        let beta = f2.pow(&sigma, (-k).rem_euclid(q2) as u64);
        let block = companion(&f2.min_poly(&beta), p);
        out.push(point("C7", vec![k], block_diag(&[vec![rho_pow(k)], block])));
    }
    let f3 = Field::new(p, 3);
    let tau = f3.pow(&f3.primitive(), (p - 1) as u64);
    let q3 = (p * p + p + 1) as i64;
    for k in 1..q3 {
        let orbit = [k, k * p as i64 % q3, k * (p * p) as i64 % q3];
        if orbit.iter().any(|&j| j < k) {
            continue;
        }
        let block = companion(&f3.min_poly(&f3.pow(&tau, k as u64)), p);
        out.push(point("C8", vec![k], block));
    }
    Ok(out)
}

/// Expected number of classes: `p+4` for SL(2,p), `p²+p` for SL(3,p), with
/// SL(2,2) ≅ S₃ having 3.
pub fn expected_class_count(d: usize, p: u32) -> usize {
    match (d, p) {
        (2, 2) => 3,
        (2, p) => p as usize + 4,
        (_, p) => (p * p + p) as usize,
    }
}

fn unit(k: f64, n: f64) -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * PI * k / n)
}

/// Irreducible character values `[1, ψ, ζ_1.., ξ_1, ξ_2]` on the listed
/// classes `1, z, a^l, b^m, c, d`.
fn table1_values(p: u32, tag: &str, param: i64) -> Result<Vec<Complex64>, CharError> {
    let pf = p as f64;
    let n_zeta = if p > 2 { (p as i64 - 3) / 2 } else { 0 };
    let e: f64 = if p == 2 || (p - 1).is_multiple_of(4) { 1.0 } else { -1.0 };
    let sqrt_ep = if e > 0.0 { Complex64::new(pf.sqrt(), 0.0) } else { Complex64::new(0.0, pf.sqrt()) };
    let tau = |k: i64| unit(k as f64, pf - 1.0);
    let r = |x: f64| Complex64::new(x, 0.0);
    type Zeta<'a> = Box<dyn Fn(i64) -> Complex64 + 'a>;
    let (psi, zeta, xi): (Complex64, Zeta<'_>, [Complex64; 2]) = match tag {
        "1" => (r(pf), Box::new(|_| r(pf + 1.0)), [r((pf + 1.0) / 2.0); 2]),
        "z" => (
            r(pf),
            Box::new(|i| r(if i % 2 == 0 { pf + 1.0 } else { -(pf + 1.0) })),
            [r(e * (pf + 1.0) / 2.0); 2],
        ),
        "a" => {
            let s = if param % 2 == 0 { 1.0 } else { -1.0 };
            (r(1.0), Box::new(move |i| tau(i * param) + tau(-i * param)), [r(s); 2])
        }
        "b" => (r(-1.0), Box::new(|_| r(0.0)), [r(0.0); 2]),
        "c" => (r(0.0), Box::new(|_| r(1.0)), [(1.0 + sqrt_ep) / 2.0, (1.0 - sqrt_ep) / 2.0]),
        "d" => (r(0.0), Box::new(|_| r(1.0)), [(1.0 - sqrt_ep) / 2.0, (1.0 + sqrt_ep) / 2.0]),
        other => return Err(CharError::UnknownTag(other.to_string())),
    };
    let mut out = vec![r(1.0), psi];
    if p > 2 {
        out.extend((1..=n_zeta).map(&zeta));
        out.extend(xi);
    }
    Ok(out)
}

/// Multiplicities matching `table1_values`: `2·1 + ψ + 2Σζ_i + ξ_1 + ξ_2`,
/// reducing to `2·1 + ψ` when `p = 2`.
fn table1_multiplicities(p: u32) -> Vec<f64> {
    let mut m = vec![2.0, 1.0];
    if p > 2 {
        m.extend(std::iter::repeat_n(2.0, ((p - 3) / 2) as usize));
        m.extend([1.0, 1.0]);
    }
    m
}

/// Right-hand side of the SL(2,p) decomposition at a class; values on
/// `zc`, `zd` use `χ(z·g) = χ(g)·χ(z)/χ(1)` for each irreducible.
pub fn table1_rhs(p: u32, pt: &ClassPoint) -> Result<Complex64, CharError> {
    let param = pt.params.first().copied().unwrap_or(0);
    let values = match pt.tag.as_str() {
        "zc" | "zd" => {
            let base = table1_values(p, &pt.tag[1..], param)?;
            let z = table1_values(p, "z", 0)?;
            let one = table1_values(p, "1", 0)?;
            base.iter().zip(z.iter().zip(&one)).map(|(v, (zv, d))| v * zv / d).collect()
        }
        tag => table1_values(p, tag, param)?,
    };
    Ok(values.iter().zip(table1_multiplicities(p)).map(|(v, m)| v * m).sum())
}

/// `χ_{p(p+1)}` and `χ^{(i)}_{p²+p+1}` at a class, `e = e^{2πi/(p−1)}`.
fn table2_values(p: u32, pt: &ClassPoint, i: i64) -> Result<(Complex64, Complex64), CharError> {
    let pf = p as f64;
    let e = |k: i64| unit(k as f64, pf - 1.0);
    let k = |j: usize| pt.params.get(j).copied().unwrap_or(0);
    // Scalar parts are trivial since Z_p^× has no element of order 3 here.
    let omega = |_: i64| Complex64::new(1.0, 0.0);
    let r = |x: f64| Complex64::new(x, 0.0);
    Ok(match pt.tag.as_str() {
        "C1" => (r(pf * (pf + 1.0)), (pf * pf + pf + 1.0) * omega(i * k(0))),
        "C2" => (r(pf), (pf + 1.0) * omega(i * k(0))),
        "C3" => (r(0.0), omega(i * k(0))),
        "C4" => (r(pf + 1.0), (pf + 1.0) * e(i * k(0)) + e(-2 * i * k(0))),
        "C5" => (r(1.0), e(i * k(0)) + e(-2 * i * k(0))),
        "C6" => (r(2.0), e(i * k(0)) + e(i * k(1)) + e(i * k(2))),
        "C7" => (r(0.0), e(i * k(0))),
        "C8" => (r(-1.0), r(0.0)),
        other => return Err(CharError::UnknownTag(other.to_string())),
    })
}

/// Right-hand side `2χ_1 + χ_{p(p+1)} + Σ_{i=1}^{p−2} χ^{(i)}_{p²+p+1}`.
pub fn table2_rhs(p: u32, pt: &ClassPoint) -> Result<Complex64, CharError> {
    supported_sl3(p)?;
    let (steinberg_like, _) = table2_values(p, pt, 0)?;
    let mut total = Complex64::new(2.0, 0.0) + steinberg_like;
    for i in 1..=(p as i64 - 2) {
        total += table2_values(p, pt, i)?.1;
    }
    Ok(total)
}

/// The C4 entry of `χ^{(i)}_{p²+p+1}` as printed, `(p+1)(e^{ik}+e^{−2ik})`.
/// Counting fixed lines gives `(p+1)e^{ik} + e^{−2ik}` instead.
pub fn table2_c4_as_printed(p: u32, k: i64, i: i64) -> Complex64 {
    let e = |j: i64| unit(j as f64, p as f64 - 1.0);
    (p as f64 + 1.0) * (e(i * k) + e(-2 * i * k))
}

/// One class of the identity check.
#[derive(Clone, Debug, Serialize)]
pub struct CharacterRow {
    pub tag: String,
    pub params: Vec<i64>,
    pub lhs: u64,
    pub rhs_re: f64,
    pub rhs_im: f64,
    pub residual: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterReport {
    pub d: usize,
    pub p: u32,
    pub decomposition: Vec<String>,
    pub rows: Vec<CharacterRow>,
    pub class_count: usize,
    pub expected_class_count: usize,
    pub max_residual: f64,
    /// Orbit-union coverage of the group by the representatives' classes,
    /// computed when the group fits in memory.
    pub coverage: Option<bool>,
    pub holds: bool,
}

impl CharacterReport {
    pub fn to_csv(&self) -> String {
        // Rounding noise below the printed precision would show as -0.
        let clean = |x: f64| if x.abs() < 1e-12 { 0.0 } else { x };
        let mut s = String::from("tag,params,lhs,rhs_re,rhs_im,residual\n");
        for r in &self.rows {
            let params: Vec<String> = r.params.iter().map(i64::to_string).collect();
            s.push_str(&format!(
                "{},{},{},{:.12},{:.12},{:.3e}\n",
                r.tag,
                params.join(";"),
                r.lhs,
                clean(r.rhs_re),
                clean(r.rhs_im),
                r.residual
            ));
        }
        s
    }
}

pub fn decomposition_terms(d: usize, p: u32) -> Vec<String> {
    match d {
        2 if p == 2 => vec!["2·1".into(), "ψ".into()],
        2 => {
            let mut t = vec!["2·1".to_string(), "ψ".to_string()];
            if p > 3 {
                t.push(format!("2·ζ_i (i = 1..{})", (p - 3) / 2));
            }
            t.extend(["ξ_1".to_string(), "ξ_2".to_string()]);
            t
        }
        _ => {
            let mut t = vec!["2·χ_1".to_string(), "χ_p(p+1)".to_string()];
            if p > 2 {
                t.push(format!("χ^(i)_p²+p+1 (i = 1..{})", p - 2));
            }
            t
        }
    }
}

/// Whether the classes of the representatives are distinct and their
/// union is the whole group.
pub fn orbit_coverage(d: usize, p: u32, points: &[ClassPoint]) -> Result<bool, CharError> {
    let g = FiniteGroup::special_linear(d, p)?;
    let index: HashMap<&[u32], usize> = (0..g.order()).map(|i| (g.matrix(i).expect("matrix group"), i)).collect();
    let cc = g.conjugacy_classes();
    let mut seen = HashSet::new();
    let mut covered = 0;
    for pt in points {
        let Some(&i) = index.get(pt.matrix.as_slice()) else {
            return Ok(false);
        };
        let k = cc.class_of(i);
        if !seen.insert(k) {
            return Ok(false);
        }
        covered += cc.class(k).len();
    }
    Ok(covered == g.order())
}

/// Evaluates the decomposition on every class representative.
pub fn verify_character_identity(d: usize, p: u32) -> Result<CharacterReport, CharError> {
    type Rhs = fn(u32, &ClassPoint) -> Result<Complex64, CharError>;
    let (points, rhs): (Vec<ClassPoint>, Rhs) = match d {
        2 => (sl2_class_points(p)?, table1_rhs),
        3 => (sl3_class_points(p)?, table2_rhs),
        _ => return Err(CharError::Unsupported(d, p)),
    };
    let mut rows = Vec::new();
    for pt in &points {
        let lhs = permutation_character(d, p, &pt.matrix);
        let r = rhs(p, pt)?;
        rows.push(CharacterRow {
            tag: pt.tag.clone(),
            params: pt.params.clone(),
            lhs,
            rhs_re: r.re,
            rhs_im: r.im,
            residual: (Complex64::new(lhs as f64, 0.0) - r).norm(),
        });
    }
    let max_residual = rows.iter().map(|r| r.residual).fold(0.0, f64::max);
    let coverage = if p <= 3 { Some(orbit_coverage(d, p, &points)?) } else { None };
    let expected = expected_class_count(d, p);
    let holds = max_residual < RESIDUAL_TOLERANCE && points.len() == expected && coverage != Some(false);
    Ok(CharacterReport {
        d,
        p,
        decomposition: decomposition_terms(d, p),
        class_count: points.len(),
        expected_class_count: expected,
        rows,
        max_residual,
        coverage,
        holds,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BurnsideReport {
    pub group_order: usize,
    pub sum_of_squares: u64,
    pub orbits: usize,
    pub holds: bool,
}

/// `Σ_g χ(g)² = |G|·#orbits` on pairs of vectors, both sides exhaustive.
pub fn burnside_check(d: usize, p: u32) -> Result<BurnsideReport, CharError> {
    let g = FiniteGroup::special_linear(d, p)?;
    let sum: u64 = (0..g.order())
        .map(|i| permutation_character(d, p, g.matrix(i).expect("matrix group")).pow(2))
        .sum();
    let q = (p as usize).pow(d as u32);
    let decode = |v: usize| -> Vec<u32> { (0..d).map(|i| (v / (p as usize).pow(i as u32) % p as usize) as u32).collect() };
    let encode = |v: &[u32]| -> usize { v.iter().enumerate().map(|(i, &x)| x as usize * (p as usize).pow(i as u32)).sum() };
    let apply = |m: &[u32], v: usize| -> usize {
        let x = decode(v);
        let y: Vec<u32> = (0..d)
            .map(|r| ((0..d).map(|c| m[r * d + c] as u64 * x[c] as u64).sum::<u64>() % p as u64) as u32)
            .collect();
        encode(&y)
    };
    let mut seen = vec![false; q * q];
    let mut orbits = 0;
    for start in 0..q * q {
        if seen[start] {
            continue;
        }
        orbits += 1;
        let (u, v) = (start / q, start % q);
        for i in 0..g.order() {
            let m = g.matrix(i).expect("matrix group");
            seen[apply(m, u) * q + apply(m, v)] = true;
        }
    }
    Ok(BurnsideReport {
        group_order: g.order(),
        sum_of_squares: sum,
        orbits,
        holds: sum == (g.order() * orbits) as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_point_counts() {
        assert_eq!(permutation_character(2, 3, &[1, 0, 0, 1]), 9);
        assert_eq!(permutation_character(2, 3, &[2, 0, 0, 2]), 1);
        assert_eq!(permutation_character(2, 3, &[1, 1, 0, 1]), 3);
        assert_eq!(permutation_character(3, 2, &identity(3)), 8);
    }

    #[test]
    fn table1_spot_values() {
        let one = point("1", vec![], identity(2));
        assert!((table1_rhs(3, &one).unwrap() - 9.0).norm() < 1e-12);
        let c = point("c", vec![], vec![1, 1, 0, 1]);
        assert!((table1_rhs(3, &c).unwrap() - 3.0).norm() < 1e-12);
        assert!((table1_rhs(2, &one).unwrap() - 4.0).norm() < 1e-12);
    }

    #[test]
    fn table2_spot_values() {
        let c1 = point("C1", vec![0], identity(3));
        assert!((table2_rhs(2, &c1).unwrap() - 8.0).norm() < 1e-12);
        let c8 = point("C8", vec![1], vec![]);
        assert!((table2_rhs(2, &c8).unwrap() - 1.0).norm() < 1e-12);
        let c2 = point("C2", vec![0], vec![]);
        assert!((table2_rhs(3, &c2).unwrap() - 9.0).norm() < 1e-12);
    }

    #[test]
    fn printed_c4_entry_disagrees_with_fixed_points() {
        // diag(ρ, ρ, ρ⁻²) over Z_3 fixes a single line pointwise.
        let c4 = sl3_class_points(3).unwrap().into_iter().find(|c| c.tag == "C4").unwrap();
        let lhs = permutation_character(3, 3, &c4.matrix) as f64;
        assert_eq!(lhs, 3.0);
        assert!((table2_rhs(3, &c4).unwrap() - lhs).norm() < 1e-12);
        let printed = 2.0 + 4.0 + table2_c4_as_printed(3, 1, 1);
        assert!((printed - lhs).norm() > 1.0);
    }

    #[test]
    fn class_counts() {
        for p in [2, 3, 5, 7] {
            assert_eq!(sl2_class_points(p).unwrap().len(), expected_class_count(2, p));
        }
        for p in [2, 3, 5] {
            assert_eq!(sl3_class_points(p).unwrap().len(), expected_class_count(3, p), "p={p}");
        }
        assert!(sl3_class_points(7).is_err());
    }

    #[test]
    fn representatives_have_determinant_one() {
        for p in [2, 3, 5] {
            for pt in sl3_class_points(p).unwrap() {
                assert_eq!(crate::group::det_mod(&pt.matrix, 3, p), 1, "{pt:?}");
            }
            for pt in sl2_class_points(p).unwrap() {
                assert_eq!(crate::group::det_mod(&pt.matrix, 2, p), 1, "{pt:?}");
            }
        }
    }

    #[test]
    fn identities_hold() {
        for (d, p) in [(2, 2), (2, 3), (2, 5), (2, 7), (3, 2), (3, 3), (3, 5)] {
            let r = verify_character_identity(d, p).unwrap();
            assert!(r.holds, "{d},{p}: {r:?}");
        }
    }

    #[test]
    fn burnside() {
        for p in [2, 3] {
            assert!(burnside_check(2, p).unwrap().holds);
        }
    }

    #[test]
    fn field_arithmetic() {
        let f = Field::new(3, 2);
        let s = f.primitive();
        assert!(f.is_one(&f.pow(&s, 8)));
        assert!(!f.is_one(&f.pow(&s, 4)));
        let mp = f.min_poly(&s);
        assert_eq!(mp.len(), 3);
        assert_eq!(mp[2], 1);
    }
}

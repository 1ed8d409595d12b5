//! Triangulations, flat edge colorings and the state-sum partition function.
//!
//! Edges are oriented from the lower to the higher vertex id; the reverse
//! orientation carries the inverse color. A coloring is flat when every
//! triangle `a < b < c` satisfies `c(ab)·c(bc) = c(ac)`.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{FiniteGroup, GroupError};
use crate::homs::{self, HomClasses};
use crate::presentation::{Presentation, Word};

/// Upper bound on `|G|^(branching edges)` for coloring searches.
pub const MAX_STATES: u128 = 1 << 24;

const UNSET: usize = usize::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimplicialError {
    #[error("invalid triangulation: {0}")]
    Invalid(String),
    #[error("complex is not connected")]
    Disconnected,
    #[error("search space of {0} states exceeds the cap of 2^24")]
    TooLarge(u128),
    #[error("edge ({0},{1}) is not in the triangulation")]
    UnknownEdge(usize, usize),
    #[error("boundary coloring: {0}")]
    Boundary(String),
    #[error("Y×I does not restrict to Y on both ends: {0}")]
    MismatchedBoundary(String),
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Serialize, Deserialize)]
struct TriangulationFile {
    vertices: usize,
    triangles: Vec<[usize; 3]>,
    #[serde(default)]
    boundary_vertices: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    edges: Vec<[usize; 2]>,
}

/// A finite simplicial complex of dimension at most 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    vertex_count: usize,
    triangles: Vec<[usize; 3]>,
    extra_edges: Vec<(usize, usize)>,
    boundary_vertices: Vec<usize>,
    edges: Vec<(usize, usize)>,
    edge_index: HashMap<(usize, usize), usize>,
    triangle_edges: Vec<[usize; 3]>,
}

impl Triangulation {
    /// Builds a complex from triangles plus optional stand-alone edges.
    pub fn new(
        vertex_count: usize,
        triangles: Vec<[usize; 3]>,
        extra_edges: Vec<(usize, usize)>,
        boundary_vertices: Vec<usize>,
    ) -> Result<Self, SimplicialError> {
        let mut tris = Vec::with_capacity(triangles.len());
        for t in triangles {
            let mut s = t;
            s.sort_unstable();
            if s[2] >= vertex_count {
                return Err(SimplicialError::Invalid(format!("triangle {t:?} out of range")));
            }
            if s[0] == s[1] || s[1] == s[2] {
                return Err(SimplicialError::Invalid(format!("degenerate triangle {t:?}")));
            }
            tris.push(s);
        }
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for t in &tris {
            edges.extend([(t[0], t[1]), (t[1], t[2]), (t[0], t[2])]);
        }
        let mut extra = Vec::new();
        for &(a, b) in &extra_edges {
            if a == b || a.max(b) >= vertex_count {
                return Err(SimplicialError::Invalid(format!("bad edge ({a},{b})")));
            }
            extra.push((a.min(b), a.max(b)));
        }
        edges.extend(&extra);
        edges.sort_unstable();
        edges.dedup();
        let edge_index: HashMap<(usize, usize), usize> =
            edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let triangle_edges = tris
            .iter()
            .map(|t| {
                [
                    edge_index[&(t[0], t[1])],
                    edge_index[&(t[1], t[2])],
                    edge_index[&(t[0], t[2])],
                ]
            })
            .collect();
        let mut bv = boundary_vertices;
        bv.sort_unstable();
        bv.dedup();
        if bv.last().is_some_and(|&v| v >= vertex_count) {
            return Err(SimplicialError::Invalid("boundary vertex out of range".into()));
        }
        Ok(Triangulation {
            vertex_count,
            triangles: tris,
            extra_edges: extra,
            boundary_vertices: bv,
            edges,
            edge_index,
            triangle_edges,
        })
    }

    /// Reads `{"vertices", "triangles", "boundary_vertices", "edges"?}`.
    pub fn from_json(text: &str) -> Result<Self, SimplicialError> {
        let f: TriangulationFile =
            serde_json::from_str(text).map_err(|e| SimplicialError::Json(e.to_string()))?;
        Self::new(
            f.vertices,
            f.triangles,
            f.edges.into_iter().map(|[a, b]| (a, b)).collect(),
            f.boundary_vertices,
        )
    }

    pub fn to_json(&self) -> String {
        let f = TriangulationFile {
            vertices: self.vertex_count,
            triangles: self.triangles.clone(),
            boundary_vertices: self.boundary_vertices.clone(),
            edges: self.extra_edges.iter().map(|&(a, b)| [a, b]).collect(),
        };
        serde_json::to_string(&f).expect("serializable")
    }

    /// Circle with `n ≥ 3` vertices and no 2-cells.
    pub fn circle(n: usize) -> Self {
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, Vec::new(), edges, Vec::new()).expect("circle")
    }

    /// A single triangle, all vertices on the boundary.
    pub fn triangle() -> Self {
        Self::new(3, vec![[0, 1, 2]], Vec::new(), vec![0, 1, 2]).expect("triangle")
    }

    /// Square 0-1-2-3 split by the diagonal 0-2 or 1-3.
    pub fn square_disk(diagonal_from_zero: bool) -> Self {
        let tris = if diagonal_from_zero {
            vec![[0, 1, 2], [0, 2, 3]]
        } else {
            vec![[0, 1, 3], [1, 2, 3]]
        };
        Self::new(4, tris, Vec::new(), vec![0, 1, 2, 3]).expect("square")
    }

    /// Triangle 0-1-2 coned from an interior vertex 3.
    pub fn cone_disk() -> Self {
        Self::new(4, vec![[0, 1, 3], [1, 2, 3], [0, 2, 3]], Vec::new(), vec![0, 1, 2]).expect("cone")
    }

    /// The minimal 7-vertex torus.
    pub fn torus7() -> Self {
        let mut tris = Vec::new();
        for i in 0..7 {
            tris.push([i, (i + 1) % 7, (i + 3) % 7]);
            tris.push([i, (i + 2) % 7, (i + 3) % 7]);
        }
        Self::new(7, tris, Vec::new(), Vec::new()).expect("torus")
    }

    /// Y×I for a 1-dimensional Y: bottom vertices `i`, top vertices `i+v`,
    /// each square over an edge `(a,b)` split along `a → b+v`.
    pub fn product_with_interval(y: &Triangulation) -> Result<Self, SimplicialError> {
        if !y.triangles.is_empty() {
            return Err(SimplicialError::Invalid("product builder needs a 1-dimensional Y".into()));
        }
        let v = y.vertex_count;
        let tris = y
            .edges
            .iter()
            .flat_map(|&(a, b)| [[a, b, b + v], [a, a + v, b + v]])
            .collect();
        Self::new(2 * v, tris, Vec::new(), (0..2 * v).collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn boundary_vertices(&self) -> &[usize] {
        &self.boundary_vertices
    }

    pub fn edge(&self, a: usize, b: usize) -> Option<usize> {
        self.edge_index.get(&(a.min(b), a.max(b))).copied()
    }

    /// Edges lying in exactly one triangle.
    pub fn boundary_edges(&self) -> Vec<usize> {
        let mut count = vec![0usize; self.edges.len()];
        for t in &self.triangle_edges {
            for &e in t {
                count[e] += 1;
            }
        }
        (0..self.edges.len()).filter(|&e| count[e] == 1).collect()
    }

    fn is_flat(&self, g: &FiniteGroup, color: &[usize], t: usize) -> bool {
        let [ab, bc, ac] = self.triangle_edges[t];
        g.mul(color[ab], color[bc]) == color[ac]
    }

    fn forced_value(&self, g: &FiniteGroup, color: &[usize], t: usize, e: usize) -> usize {
        let [ab, bc, ac] = self.triangle_edges[t];
        if e == ac {
            g.mul(color[ab], color[bc])
        } else if e == ab {
            g.mul(color[ac], g.inv(color[bc]))
        } else {
            g.mul(g.inv(color[ab]), color[ac])
        }
    }
}

/// Colors on some edges, stored in low→high orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryColoring {
    entries: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct BoundaryFile {
    edges: Vec<(usize, usize, String)>,
}

impl BoundaryColoring {
    /// From `(i, j, element)` triples meaning the edge `i → j` carries the
    /// element; `i > j` stores the inverse on `j → i`.
    pub fn new(
        t: &Triangulation,
        g: &FiniteGroup,
        triples: &[(usize, usize, usize)],
    ) -> Result<Self, SimplicialError> {
        let mut map: HashMap<usize, usize> = HashMap::new();
        for &(i, j, x) in triples {
            let e = t.edge(i, j).ok_or(SimplicialError::UnknownEdge(i, j))?;
            let value = if i < j { x } else { g.inv(x) };
            if let Some(old) = map.insert(e, value) {
                if old != value {
                    return Err(SimplicialError::Boundary(format!("edge ({i},{j}) colored twice")));
                }
            }
        }
        let mut entries: Vec<(usize, usize)> = map.into_iter().collect();
        entries.sort_unstable();
        Ok(BoundaryColoring { entries })
    }

    /// Reads `{"edges": [[i, j, "label"], …]}`.
    pub fn from_json(t: &Triangulation, g: &FiniteGroup, text: &str) -> Result<Self, SimplicialError> {
        let f: BoundaryFile =
            serde_json::from_str(text).map_err(|e| SimplicialError::Json(e.to_string()))?;
        let triples: Result<Vec<_>, SimplicialError> = f
            .edges
            .iter()
            .map(|(i, j, l)| Ok((*i, *j, g.element(l)?)))
            .collect();
        Self::new(t, g, &triples?)
    }

    /// Colors indexed by edge id, for the edges listed in `edge_ids`.
    pub fn from_edge_values(edge_ids: &[usize], values: &[usize]) -> Self {
        let mut entries: Vec<(usize, usize)> = edge_ids.iter().copied().zip(values.iter().copied()).collect();
        entries.sort_unstable();
        BoundaryColoring { entries }
    }

    pub fn entries(&self) -> &[(usize, usize)] {
        &self.entries
    }
}

/// Exact value `count · |G|^(half_exponent/2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StateSumValue {
    pub count: u64,
    pub half_exponent: i64,
    pub group_order: u64,
}

impl StateSumValue {
    /// Moves factors of `|G|` from the count into the exponent.
    pub fn normalized(self) -> Self {
        let mut v = self;
        if v.count == 0 {
            v.half_exponent = 0;
            return v;
        }
        while v.group_order > 1 && v.count.is_multiple_of(v.group_order) {
            v.count /= v.group_order;
            v.half_exponent += 2;
        }
        v
    }

    /// Exact equality of the represented real numbers.
    pub fn same_value(&self, other: &Self) -> bool {
        self.group_order == other.group_order && self.normalized() == other.normalized()
    }

    pub fn to_f64(&self) -> f64 {
        self.count as f64 * (self.group_order as f64).powf(self.half_exponent as f64 / 2.0)
    }
}

impl fmt::Display for StateSumValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·{}^({}/2)", self.count, self.group_order, self.half_exponent)
    }
}

struct Step {
    edge: usize,
    forced_by: Option<usize>,
    checks: Vec<usize>,
}

struct Plan {
    initial: Vec<usize>,
    steps: Vec<Step>,
    branching: usize,
}

fn plan(t: &Triangulation, fixed: &[bool]) -> Plan {
    let ne = t.edges.len();
    let mut assigned = fixed.to_vec();
    let mut tris_of_edge: Vec<Vec<usize>> = vec![Vec::new(); ne];
    for (k, te) in t.triangle_edges.iter().enumerate() {
        for &e in te {
            tris_of_edge[e].push(k);
        }
    }
    let full = |assigned: &[bool], k: usize| t.triangle_edges[k].iter().all(|&e| assigned[e]);
    let initial = (0..t.triangles.len()).filter(|&k| full(&assigned, k)).collect();
    let mut steps = Vec::new();
    let mut branching = 0;
    while let Some(first_free) = assigned.iter().position(|a| !a) {
        let forced = (0..ne).filter(|&e| !assigned[e]).find_map(|e| {
            tris_of_edge[e]
                .iter()
                .find(|&&k| t.triangle_edges[k].iter().all(|&f| f == e || assigned[f]))
                .map(|&k| (e, k))
        });
        let (edge, forced_by) = match forced {
            Some((e, k)) => (e, Some(k)),
            None => {
                branching += 1;
                (first_free, None)
            }
        };
        assigned[edge] = true;
        let checks = tris_of_edge[edge]
            .iter()
            .copied()
            .filter(|&k| Some(k) != forced_by && full(&assigned, k))
            .collect();
        steps.push(Step {
            edge,
            forced_by,
            checks,
        });
    }
    Plan {
        initial,
        steps,
        branching,
    }
}

fn search(
    t: &Triangulation,
    g: &FiniteGroup,
    tau: Option<&BoundaryColoring>,
    sink: &mut dyn FnMut(&[usize]),
) -> Result<(), SimplicialError> {
    let ne = t.edges.len();
    let mut color = vec![UNSET; ne];
    let mut fixed = vec![false; ne];
    if let Some(tau) = tau {
        for &(e, x) in &tau.entries {
            if x >= g.order() {
                return Err(SimplicialError::Boundary(format!("element {x} out of range")));
            }
            color[e] = x;
            fixed[e] = true;
        }
    }
    let plan = plan(t, &fixed);
    let states = (g.order() as u128).checked_pow(plan.branching as u32).unwrap_or(u128::MAX);
    if states > MAX_STATES {
        return Err(SimplicialError::TooLarge(states));
    }
    if plan.initial.iter().any(|&k| !t.is_flat(g, &color, k)) {
        return Ok(());
    }
    fn rec(
        t: &Triangulation,
        g: &FiniteGroup,
        steps: &[Step],
        color: &mut Vec<usize>,
        sink: &mut dyn FnMut(&[usize]),
    ) {
        let Some((step, rest)) = steps.split_first() else {
            sink(color);
            return;
        };
        let mut try_value = |color: &mut Vec<usize>, x: usize| {
            color[step.edge] = x;
            if step.checks.iter().all(|&k| t.is_flat(g, color, k)) {
                rec(t, g, rest, color, sink);
            }
        };
        match step.forced_by {
            Some(k) => {
                let x = t.forced_value(g, color, k, step.edge);
                try_value(color, x);
            }
            None => {
                for x in 0..g.order() {
                    try_value(color, x);
                }
            }
        }
        color[step.edge] = UNSET;
    }
    rec(t, g, &plan.steps, &mut color, sink);
    Ok(())
}

fn check_boundary(t: &Triangulation, tau: &BoundaryColoring) -> Result<(), SimplicialError> {
    let boundary = t.boundary_edges();
    let colored: Vec<usize> = tau.entries.iter().map(|&(e, _)| e).collect();
    if colored != boundary {
        return Err(SimplicialError::Boundary(
            "coloring must cover exactly the boundary edges".into(),
        ));
    }
    Ok(())
}

/// `#Col(M, τ)`: flat colorings extending the boundary coloring.
pub fn count_colorings(
    t: &Triangulation,
    g: &FiniteGroup,
    tau: Option<&BoundaryColoring>,
) -> Result<u64, SimplicialError> {
    if let Some(tau) = tau {
        check_boundary(t, tau)?;
    }
    let mut n = 0u64;
    search(t, g, tau, &mut |_| n += 1)?;
    Ok(n)
}

/// All flat colorings, indexed by edge id.
pub fn enumerate_colorings(t: &Triangulation, g: &FiniteGroup) -> Result<Vec<Vec<usize>>, SimplicialError> {
    let mut out = Vec::new();
    search(t, g, None, &mut |c| out.push(c.to_vec()))?;
    Ok(out)
}

/// `Z(M, τ) = |G|^(∂v/2 − v) · #Col(M, τ)`.
pub fn partition_function(
    t: &Triangulation,
    g: &FiniteGroup,
    tau: Option<&BoundaryColoring>,
) -> Result<StateSumValue, SimplicialError> {
    Ok(StateSumValue {
        count: count_colorings(t, g, tau)?,
        half_exponent: t.boundary_vertices.len() as i64 - 2 * t.vertex_count as i64,
        group_order: g.order() as u64,
    })
}

/// π₁ presentation read off a maximal tree, with the data needed to turn
/// colorings into holonomy homomorphisms.
#[derive(Clone, Debug)]
pub struct EdgePresentation {
    pub presentation: Presentation,
    /// Edge id behind each surviving generator.
    pub generator_edges: Vec<usize>,
    /// Tree parent and connecting edge of every non-root vertex.
    pub parent: Vec<Option<(usize, usize)>>,
    bfs_order: Vec<usize>,
}

/// Generators are the non-tree edges, one relator per triangle; generators
/// killed by a one-letter relator are then eliminated.
pub fn presentation_from_triangulation(t: &Triangulation) -> Result<EdgePresentation, SimplicialError> {
    let v = t.vertex_count;
    if v == 0 {
        return Err(SimplicialError::Disconnected);
    }
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); v];
    for (i, &(a, b)) in t.edges.iter().enumerate() {
        adj[a].push((b, i));
        adj[b].push((a, i));
    }
    let mut parent = vec![None; v];
    let mut seen = vec![false; v];
    let mut tree = vec![false; t.edges.len()];
    let mut order = vec![0];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(a) = queue.pop_front() {
        for &(b, e) in &adj[a] {
            if !seen[b] {
                seen[b] = true;
                parent[b] = Some((a, e));
                tree[e] = true;
                order.push(b);
                queue.push_back(b);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(SimplicialError::Disconnected);
    }
    let mut gens: Vec<usize> = (0..t.edges.len()).filter(|&e| !tree[e]).collect();
    let gen_of = |gens: &[usize], e: usize| gens.iter().position(|&x| x == e);
    let mut relators: Vec<Vec<(usize, bool)>> = t
        .triangle_edges
        .iter()
        .map(|&[ab, bc, ac]| {
            [(ab, false), (bc, false), (ac, true)]
                .into_iter()
                .filter(|&(e, _)| !tree[e])
                .collect()
        })
        .collect();
    loop {
        let reduce = |r: &[(usize, bool)]| {
            let mut out: Vec<(usize, bool)> = Vec::new();
            for &l in r {
                if out.last() == Some(&(l.0, !l.1)) {
                    out.pop();
                } else {
                    out.push(l);
                }
            }
            out
        };
        relators = relators.iter().map(|r| reduce(r)).filter(|r| !r.is_empty()).collect();
        let Some(kill) = relators.iter().find(|r| r.len() == 1).map(|r| r[0].0) else {
            break;
        };
        gens.retain(|&e| e != kill);
        for r in relators.iter_mut() {
            r.retain(|&(e, _)| e != kill);
        }
    }
    let names = gens
        .iter()
        .map(|&e| format!("e{}_{}", t.edges[e].0, t.edges[e].1))
        .collect();
    let words = relators
        .iter()
        .map(|r| {
            let letters: Vec<_> = r
                .iter()
                .map(|&(e, inv)| crate::presentation::Letter::new(gen_of(&gens, e).expect("live"), inv))
                .collect();
            Word::from_letters(&letters)
        })
        .collect();
    let presentation = Presentation::new(names, words).expect("distinct edge names");
    Ok(EdgePresentation {
        presentation,
        generator_edges: gens,
        parent,
        bfs_order: order,
    })
}

impl EdgePresentation {
    /// Holonomy homomorphism of a flat coloring:
    /// `hol(a→b) = P(a)·c(ab)·P(b)⁻¹`, `P` the tree-path product from vertex 0.
    pub fn holonomy(&self, t: &Triangulation, g: &FiniteGroup, color: &[usize]) -> Vec<usize> {
        let oriented = |a: usize, b: usize, e: usize| if a < b { color[e] } else { g.inv(color[e]) };
        let mut path = vec![0usize; t.vertex_count];
        for &b in &self.bfs_order {
            if let Some((a, e)) = self.parent[b] {
                path[b] = g.mul(path[a], oriented(a, b, e));
            }
        }
        self.generator_edges
            .iter()
            .map(|&e| {
                let (a, b) = t.edges[e];
                g.mul(g.mul(path[a], color[e]), g.inv(path[b]))
            })
            .collect()
    }
}

/// Outcome of the colorings-versus-homomorphisms count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma1Report {
    pub vertices: usize,
    pub colorings: u64,
    pub homs: u64,
    pub predicted: u128,
    pub holds: bool,
}

/// Checks `#Col(M) = |G|^(v−1) · #Hom(π₁(M), G)`.
pub fn verify_lemma1(t: &Triangulation, g: &FiniteGroup) -> Result<Lemma1Report, SimplicialError> {
    let colorings = count_colorings(t, g, None)?;
    let ep = presentation_from_triangulation(t)?;
    let homs = homs::count_homs(&ep.presentation, g);
    let predicted = (g.order() as u128).pow(t.vertex_count as u32 - 1) * homs as u128;
    Ok(Lemma1Report {
        vertices: t.vertex_count,
        colorings,
        homs,
        predicted,
        holds: predicted == colorings as u128,
    })
}

/// One holonomy-class block of `Z(Id_Y)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdempotentBlock {
    pub class: Vec<usize>,
    pub size: usize,
    pub centralizer_order: usize,
    /// Block entries are `centralizer_order / |G|^denominator_exponent`.
    pub denominator_exponent: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdempotentReport {
    pub dimension: usize,
    pub blocks: Vec<IdempotentBlock>,
    pub block_diagonal: bool,
    pub constant_blocks: bool,
    pub idempotent: bool,
}

impl IdempotentReport {
    pub fn holds(&self) -> bool {
        self.block_diagonal && self.constant_blocks && self.idempotent
    }
}

/// Checks the block structure and idempotence of `Z(Id_Y)` computed on a
/// triangulation of Y×I whose bottom is Y on vertices `0..v` and whose top
/// is Y shifted by `v`.
pub fn verify_idempotent_blocks(
    y: &Triangulation,
    yi: &Triangulation,
    g: &FiniteGroup,
) -> Result<IdempotentReport, SimplicialError> {
    let v = y.vertex_count;
    let bottom: Vec<usize> = y
        .edges
        .iter()
        .map(|&(a, b)| yi.edge(a, b).ok_or(SimplicialError::MismatchedBoundary(format!("missing ({a},{b})"))))
        .collect::<Result<_, _>>()?;
    let top: Vec<usize> = y
        .edges
        .iter()
        .map(|&(a, b)| {
            yi.edge(a + v, b + v)
                .ok_or(SimplicialError::MismatchedBoundary(format!("missing ({},{})", a + v, b + v)))
        })
        .collect::<Result<_, _>>()?;
    let mut expected: Vec<usize> = bottom.iter().chain(&top).copied().collect();
    expected.sort_unstable();
    if expected != yi.boundary_edges() {
        return Err(SimplicialError::MismatchedBoundary("boundary edges differ from Y ⊔ Y".into()));
    }

    let states = enumerate_colorings(y, g)?;
    let ep = presentation_from_triangulation(y)?;
    let classes = HomClasses::of(&ep.presentation, g);
    let class_of: Vec<usize> = states
        .iter()
        .map(|c| {
            classes
                .class_of(g, &ep.holonomy(y, g, c))
                .expect("holonomy is a homomorphism")
        })
        .collect();
    let n = states.len();
    let mut m = vec![vec![0u64; n]; n];
    let mut ids: Vec<usize> = bottom.clone();
    ids.extend(&top);
    for (i, si) in states.iter().enumerate() {
        for (j, sj) in states.iter().enumerate() {
            let values: Vec<usize> = si.iter().chain(sj).copied().collect();
            let tau = BoundaryColoring::from_edge_values(&ids, &values);
            m[i][j] = count_colorings(yi, g, Some(&tau))?;
        }
    }
    // Z = M · |G|^(k/2)
    let k = yi.boundary_vertices.len() as i64 - 2 * yi.vertex_count as i64;
    let order = g.order() as u128;
    let pow = |e: i64| order.pow(e.unsigned_abs() as u32);

    let block_diagonal = (0..n).all(|i| (0..n).all(|j| (m[i][j] != 0) == (class_of[i] == class_of[j])));

    let centralizer: Vec<usize> = (0..classes.len())
        .map(|c| g.centralizer(classes.canonical(c)).len())
        .collect();
    // entry = |C| / |G|^v  ⇔  count² · |G|^(k + 2v) = |C|²
    let e = k + 2 * v as i64;
    let constant_blocks = (0..n).all(|i| {
        (0..n).all(|j| {
            if class_of[i] != class_of[j] {
                return true;
            }
            let c = centralizer[class_of[i]] as u128;
            let lhs = (m[i][j] as u128).pow(2) * if e > 0 { pow(e) } else { 1 };
            let rhs = c * c * if e < 0 { pow(e) } else { 1 };
            lhs == rhs
        })
    });

    // Z² = Z  ⇔  (M²)_ij · |G|^(k/2) = M_ij  ⇔  (M²)_ij² · |G|^k = M_ij²
    let mut idempotent = true;
    for i in 0..n {
        for j in 0..n {
            let sq: u128 = (0..n).map(|l| m[i][l] as u128 * m[l][j] as u128).sum();
            let lhs = sq * sq * if k > 0 { pow(k) } else { 1 };
            let rhs = (m[i][j] as u128).pow(2) * if k < 0 { pow(k) } else { 1 };
            idempotent &= lhs == rhs;
        }
    }

    let blocks = (0..classes.len())
        .map(|c| IdempotentBlock {
            class: classes.canonical(c).to_vec(),
            size: class_of.iter().filter(|&&x| x == c).count(),
            centralizer_order: centralizer[c],
            denominator_exponent: v,
        })
        .filter(|b| b.size > 0)
        .collect();
    Ok(IdempotentReport {
        dimension: n,
        blocks,
        block_diagonal,
        constant_blocks,
        idempotent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(s: &str) -> FiniteGroup {
        s.parse().unwrap()
    }

    #[test]
    fn circle_and_triangle_counts() {
        let z2 = grp("Z:2");
        assert_eq!(count_colorings(&Triangulation::circle(3), &z2, None).unwrap(), 8);
        let s3 = grp("S:3");
        assert_eq!(count_colorings(&Triangulation::triangle(), &s3, None).unwrap(), 36);
    }

    #[test]
    fn torus_lemma1_z2() {
        let r = verify_lemma1(&Triangulation::torus7(), &grp("Z:2")).unwrap();
        assert_eq!(r.colorings, 256);
        assert_eq!(r.homs, 4);
        assert!(r.holds);
    }

    #[test]
    fn presentation_examples() {
        let c = presentation_from_triangulation(&Triangulation::circle(3)).unwrap();
        assert_eq!(c.presentation.generator_count(), 1);
        assert!(c.presentation.relators().is_empty());
        let d = presentation_from_triangulation(&Triangulation::triangle()).unwrap();
        assert_eq!(d.presentation.generator_count(), 0);
        let disconnected = Triangulation::new(4, vec![], vec![(0, 1), (2, 3)], vec![]).unwrap();
        assert_eq!(
            presentation_from_triangulation(&disconnected).unwrap_err(),
            SimplicialError::Disconnected
        );
    }

    #[test]
    fn holonomy_is_a_homomorphism() {
        let t = Triangulation::torus7();
        let g = grp("S:3");
        let ep = presentation_from_triangulation(&t).unwrap();
        let cols = enumerate_colorings(&t, &grp("Z:2")).unwrap();
        assert_eq!(cols.len(), 256);
        let z2 = grp("Z:2");
        for c in &cols {
            assert!(homs::is_hom(&ep.presentation, &z2, &ep.holonomy(&t, &z2, c)));
        }
        let r = verify_lemma1(&t, &g).unwrap();
        assert!(r.holds);
        assert_eq!(r.homs, 18);
    }

    #[test]
    fn square_disk_diagonals_agree() {
        let g = grp("S:3");
        let (a, b) = (g.element("(12)").unwrap(), g.element("(123)").unwrap());
        for (x, y, z) in [(a, b, a), (a, a, 0), (b, b, b)] {
            // boundary 0→1→2→3 with colors x, y, z and 0→3 closing the loop
            let w = g.mul(g.mul(x, y), z);
            for closing in [w, a] {
                let triples = [(0, 1, x), (1, 2, y), (2, 3, z), (0, 3, closing)];
                let z1 = {
                    let t = Triangulation::square_disk(true);
                    partition_function(&t, &g, Some(&BoundaryColoring::new(&t, &g, &triples).unwrap())).unwrap()
                };
                let z2 = {
                    let t = Triangulation::square_disk(false);
                    partition_function(&t, &g, Some(&BoundaryColoring::new(&t, &g, &triples).unwrap())).unwrap()
                };
                assert!(z1.same_value(&z2));
            }
        }
    }

    #[test]
    fn cone_matches_single_triangle() {
        let g = grp("S:3");
        for x in 0..6 {
            for y in 0..6 {
                for z in [g.mul(x, y), 0] {
                    let triples = [(0, 1, x), (1, 2, y), (0, 2, z)];
                    let t1 = Triangulation::triangle();
                    let t2 = Triangulation::cone_disk();
                    let a = partition_function(&t1, &g, Some(&BoundaryColoring::new(&t1, &g, &triples).unwrap())).unwrap();
                    let b = partition_function(&t2, &g, Some(&BoundaryColoring::new(&t2, &g, &triples).unwrap())).unwrap();
                    assert!(a.count <= 1);
                    assert!(a.same_value(&b), "{a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn annulus_lemma2_specialization() {
        let g = grp("S:3");
        let y = Triangulation::circle(3);
        let yi = Triangulation::product_with_interval(&y).unwrap();
        assert_eq!(yi.triangles().len(), 6);
        let t = g.element("(12)").unwrap();
        let c = g.element("(123)").unwrap();
        // bottom holonomy t, top holonomy a conjugate of t, or a 3-cycle
        for (top, expect) in [(g.conj(c, t), 2u64), (t, 2), (c, 0)] {
            let triples = [(0, 1, t), (1, 2, 0), (0, 2, 0), (3, 4, top), (4, 5, 0), (3, 5, 0)];
            // (0,2) closes the loop: hol = c01·c12·c02⁻¹
            let tau = BoundaryColoring::new(&yi, &g, &triples).unwrap();
            let n = count_colorings(&yi, &g, Some(&tau)).unwrap();
            assert_eq!(n, expect);
        }
    }

    #[test]
    fn boundary_must_be_exact() {
        let g = grp("Z:2");
        let t = Triangulation::triangle();
        let partial = BoundaryColoring::new(&t, &g, &[(0, 1, 1)]).unwrap();
        assert!(count_colorings(&t, &g, Some(&partial)).is_err());
        assert!(BoundaryColoring::new(&t, &g, &[(0, 1, 1), (1, 0, 0)]).is_err());
    }

    #[test]
    fn idempotent_blocks_small_groups() {
        let y = Triangulation::circle(3);
        let yi = Triangulation::product_with_interval(&y).unwrap();
        for (spec, blocks) in [("Z:1", 1), ("Z:2", 2), ("S:3", 3)] {
            let r = verify_idempotent_blocks(&y, &yi, &grp(spec)).unwrap();
            assert!(r.holds(), "{spec}");
            assert_eq!(r.blocks.len(), blocks);
        }
    }

    #[test]
    fn state_sum_value_normalization() {
        let a = StateSumValue { count: 36, half_exponent: -6, group_order: 6 };
        let b = StateSumValue { count: 1, half_exponent: -2, group_order: 6 };
        assert!(a.same_value(&b));
        assert!((a.to_f64() - 1.0 / 6.0).abs() < 1e-12);
    }

    #[test]
    fn json_round_trip() {
        for t in [Triangulation::circle(3), Triangulation::torus7(), Triangulation::triangle()] {
            assert_eq!(Triangulation::from_json(&t.to_json()).unwrap(), t);
        }
        assert!(Triangulation::from_json(r#"{"vertices":2,"triangles":[[0,1,2]]}"#).is_err());
    }
}

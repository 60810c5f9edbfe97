//! Matching instances in `Z^3` built from simple graphs, with exact
//! brute-force solvers for matching and independent set.
//!
//! Each graph vertex becomes a staircase of axis-parallel lines in its own
//! horizontal plane carrying `n-1` type-A points (odd positions) and `n-2`
//! type-B points (even positions). Each graph edge becomes a five-line path
//! leaving an A-point of either endpoint along the z-axis, running through a
//! private horizontal plane and column, and returning along the z-axis. The
//! largest set of points with no two on a common axis-parallel line then has
//! size `n^2 - 2n + alpha + 2m`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::hypergraph::PartitionedHypergraph;
use crate::representation::hypergraph_from_points;

pub const MATCHING_CAP: usize = 64;
pub const INDEPENDENT_SET_CAP: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleGraphDoc {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl SimpleGraph {
    /// Edges are stored as given, with endpoints ordered.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut out = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::Contract(format!("edge ({a}, {b}) out of range for n = {n}")));
            }
            if a == b {
                return Err(Error::Contract(format!("loop at vertex {a}")));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::Contract(format!("parallel edge ({}, {})", e.0, e.1)));
            }
            out.push(e);
        }
        Ok(SimpleGraph { n, edges: out })
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        SimpleGraph { n, edges }
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i.min((i + 1) % n), i.max((i + 1) % n))).collect();
        SimpleGraph::new(n, &edges).expect("cycle is simple for n >= 3")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn to_document(&self) -> SimpleGraphDoc {
        SimpleGraphDoc {
            n: self.n,
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn from_document(doc: &SimpleGraphDoc) -> Result<Self> {
        let edges: Vec<(usize, usize)> = doc.edges.iter().map(|e| (e[0], e[1])).collect();
        SimpleGraph::new(doc.n, &edges)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_document(&serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("graph serializes")
    }
}

/// `n^2 - 2n + ell + 2m`: the matching size reached exactly when the graph has an
/// independent set of size `ell`.
pub fn matching_target(n: usize, m: usize, ell: usize) -> usize {
    n * n - 2 * n + ell + 2 * m
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Role {
    A,
    B,
    #[serde(rename = "inner")]
    Inner,
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Role::A => "A",
            Role::B => "B",
            Role::Inner => "inner",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Owner {
    Vertex(usize),
    Edge(usize),
}

impl fmt::Display for Owner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Owner::Vertex(v) => write!(f, "v{v}"),
            Owner::Edge(e) => write!(f, "e{e}"),
        }
    }
}

impl std::str::FromStr for Owner {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parse = |rest: &str| rest.parse::<usize>().map_err(|_| format!("bad owner {s:?}"));
        if let Some(rest) = s.strip_prefix('v') {
            Ok(Owner::Vertex(parse(rest)?))
        } else if let Some(rest) = s.strip_prefix('e') {
            Ok(Owner::Edge(parse(rest)?))
        } else {
            Err(format!("bad owner {s:?}"))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetPoint {
    pub coords: [i64; 3],
    pub role: Role,
    pub owner: Owner,
}

/// Six point indices `[endpoint, inner x4, endpoint]` in path order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgePath {
    pub edge: [usize; 2],
    pub points: [usize; 6],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetInstance {
    pub graph: SimpleGraph,
    pub points: Vec<GadgetPoint>,
    /// Point indices of each vertex staircase, in path order.
    pub vertex_paths: Vec<Vec<usize>>,
    pub edge_paths: Vec<EdgePath>,
}

#[derive(Serialize, Deserialize)]
struct RoleDoc {
    role: Role,
    owner: String,
}

#[derive(Deserialize)]
struct GadgetDoc {
    points: Vec<[i64; 3]>,
    roles: HashMap<String, RoleDoc>,
    vertex_paths: Vec<Vec<usize>>,
    edge_paths: Vec<EdgePath>,
    graph: SimpleGraphDoc,
}

impl GadgetInstance {
    pub fn coordinates(&self) -> Vec<Vec<i64>> {
        self.points.iter().map(|p| p.coords.to_vec()).collect()
    }

    /// `t(ell)` for this instance's graph.
    pub fn target(&self, ell: usize) -> usize {
        matching_target(self.graph.n(), self.graph.m(), ell)
    }

    /// The point–line incidence hypergraph (lines parallel to the axes).
    pub fn hypergraph(&self) -> Result<PartitionedHypergraph> {
        Ok(hypergraph_from_points(&self.coordinates(), 1)?.graph)
    }

    pub fn to_value(&self) -> Value {
        let mut roles = Map::new();
        for (i, p) in self.points.iter().enumerate() {
            roles.insert(i.to_string(), json!({"role": p.role, "owner": p.owner.to_string()}));
        }
        json!({
            "d": 3,
            "ell": 1,
            "points": self.coordinates(),
            "roles": roles,
            "vertex_paths": self.vertex_paths,
            "edge_paths": self.edge_paths,
            "graph": self.graph.to_document(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_value()).expect("gadget serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GadgetDoc = serde_json::from_str(text)?;
        let graph = SimpleGraph::from_document(&doc.graph)?;
        let mut points = Vec::with_capacity(doc.points.len());
        for (i, coords) in doc.points.iter().enumerate() {
            let r = doc
                .roles
                .get(&i.to_string())
                .ok_or_else(|| Error::Malformed(format!("no role for point {i}")))?;
            let owner = r.owner.parse::<Owner>().map_err(Error::Malformed)?;
            points.push(GadgetPoint {
                coords: *coords,
                role: r.role,
                owner,
            });
        }
        let all = doc.vertex_paths.iter().flatten().chain(doc.edge_paths.iter().flat_map(|p| p.points.iter()));
        if let Some(bad) = all.into_iter().find(|&&i| i >= points.len()) {
            return Err(Error::Malformed(format!("path refers to missing point {bad}")));
        }
        Ok(GadgetInstance {
            graph,
            points,
            vertex_paths: doc.vertex_paths,
            edge_paths: doc.edge_paths,
        })
    }
}

pub fn build_matching_instance(g: &SimpleGraph) -> Result<GadgetInstance> {
    let n = g.n();
    if n < 2 {
        return Err(Error::Contract(format!("reduction needs n >= 2, got {n}")));
    }
    let span = n as i64;
    let mut points = Vec::with_capacity(n * (2 * n - 3) + 4 * g.m());
    let mut vertex_paths = Vec::with_capacity(n);
    for v in 0..n {
        let base = v as i64 * span;
        let mut path = Vec::with_capacity(2 * n - 3);
        for t in 1..=(2 * n - 3) as i64 {
            path.push(points.len());
            points.push(GadgetPoint {
                coords: [base + (t - 1) / 2, base + t / 2, v as i64],
                role: if t % 2 == 1 { Role::A } else { Role::B },
                owner: Owner::Vertex(v),
            });
        }
        vertex_paths.push(path);
    }

    let mut next_slot = vec![0usize; n];
    let mut take_slot = |v: usize| -> usize {
        let slot = next_slot[v];
        next_slot[v] += 1;
        vertex_paths[v][2 * slot]
    };
    let mut edge_paths = Vec::with_capacity(g.m());
    for (j, &(u, v)) in g.edges().iter().enumerate() {
        let a = take_slot(u);
        let b = take_slot(v);
        let [xa, ya, _] = points[a].coords;
        let [xb, yb, _] = points[b].coords;
        let height = span + j as i64;
        let column = span * span + j as i64;
        let inner = [
            [xa, ya, height],
            [column, ya, height],
            [column, yb, height],
            [xb, yb, height],
        ];
        let mut ids = [a, 0, 0, 0, 0, b];
        for (slot, coords) in inner.into_iter().enumerate() {
            ids[slot + 1] = points.len();
            points.push(GadgetPoint {
                coords,
                role: Role::Inner,
                owner: Owner::Edge(j),
            });
        }
        edge_paths.push(EdgePath {
            edge: [u, v],
            points: ids,
        });
    }
    Ok(GadgetInstance {
        graph: g.clone(),
        points,
        vertex_paths,
        edge_paths,
    })
}

/// Number of coordinates in which two points differ; they share an
/// axis-parallel line exactly when this is 1.
fn differing_axes(a: &[i64; 3], b: &[i64; 3]) -> usize {
    (0..3).filter(|&i| a[i] != b[i]).count()
}

fn coplanar(points: &[[i64; 3]]) -> bool {
    let origin = points[0];
    let diffs: Vec<[i128; 3]> = points[1..]
        .iter()
        .map(|p| [0, 1, 2].map(|i| (p[i] - origin[i]) as i128))
        .collect();
    let cross = |a: &[i128; 3], b: &[i128; 3]| {
        [
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ]
    };
    let mut normal = None;
    'outer: for (i, a) in diffs.iter().enumerate() {
        for b in &diffs[i + 1..] {
            let c = cross(a, b);
            if c != [0, 0, 0] {
                normal = Some(c);
                break 'outer;
            }
        }
    }
    match normal {
        None => true,
        Some(nv) => diffs.iter().all(|d| d[0] * nv[0] + d[1] * nv[1] + d[2] * nv[2] == 0),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GadgetViolation {
    VertexPath(String),
    SharedPlane { first: usize, second: usize },
    EdgePath(String),
    CoplanarEdgePath { edge: usize },
    SharedEndpoint { point: usize },
    DuplicatePoint { first: usize, second: usize },
    MissingLine { first: usize, second: usize },
    UnintendedLine { first: usize, second: usize },
}

impl fmt::Display for GadgetViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GadgetViolation::VertexPath(why) => write!(f, "vertex path malformed: {why}"),
            GadgetViolation::SharedPlane { first, second } => {
                write!(f, "vertex paths share a plane: v{first} and v{second}")
            }
            GadgetViolation::EdgePath(why) => write!(f, "edge path malformed: {why}"),
            GadgetViolation::CoplanarEdgePath { edge } => write!(f, "edge path lies on a plane: e{edge}"),
            GadgetViolation::SharedEndpoint { point } => {
                write!(f, "edge paths not disjoint: A-point {point} ends two edge paths")
            }
            GadgetViolation::DuplicatePoint { first, second } => {
                write!(f, "points not distinct: {first} and {second}")
            }
            GadgetViolation::MissingLine { first, second } => {
                write!(f, "consecutive points {first} and {second} share no line")
            }
            GadgetViolation::UnintendedLine { first, second } => {
                write!(f, "lines overlap: points {first} and {second} share an unintended line")
            }
        }
    }
}

impl std::error::Error for GadgetViolation {}

pub fn verify_gadget_instance(h: &GadgetInstance) -> std::result::Result<(), GadgetViolation> {
    let n = h.graph.n();
    let m = h.graph.m();
    let pts = &h.points;
    if n < 2 {
        return Err(GadgetViolation::VertexPath(format!("n = {n} < 2")));
    }
    if h.vertex_paths.len() != n {
        return Err(GadgetViolation::VertexPath(format!(
            "{} vertex paths for {n} vertices",
            h.vertex_paths.len()
        )));
    }
    for (v, path) in h.vertex_paths.iter().enumerate() {
        if path.len() != 2 * n - 3 {
            return Err(GadgetViolation::VertexPath(format!(
                "v{v} carries {} points, expected {}",
                path.len(),
                2 * n - 3
            )));
        }
        for (pos, &p) in path.iter().enumerate() {
            let expected = if pos % 2 == 0 { Role::A } else { Role::B };
            if pts[p].role != expected || pts[p].owner != Owner::Vertex(v) {
                return Err(GadgetViolation::VertexPath(format!(
                    "point {p} at position {pos} of v{v} is {} owned by {}",
                    pts[p].role, pts[p].owner
                )));
            }
        }
    }
    let mut plane_of: HashMap<i64, usize> = HashMap::new();
    for (v, path) in h.vertex_paths.iter().enumerate() {
        let z = pts[path[0]].coords[2];
        if path.iter().any(|&p| pts[p].coords[2] != z) {
            return Err(GadgetViolation::VertexPath(format!("v{v} is not perpendicular to the z-axis")));
        }
        if let Some(&first) = plane_of.get(&z) {
            return Err(GadgetViolation::SharedPlane { first, second: v });
        }
        plane_of.insert(z, v);
    }

    if h.edge_paths.len() != m {
        return Err(GadgetViolation::EdgePath(format!("{} edge paths for {m} edges", h.edge_paths.len())));
    }
    let mut endpoint_used = HashSet::new();
    for (j, path) in h.edge_paths.iter().enumerate() {
        let (u, v) = h.graph.edges()[j];
        if path.edge != [u, v] {
            return Err(GadgetViolation::EdgePath(format!("e{j} connects {:?}, expected [{u}, {v}]", path.edge)));
        }
        let [a, q1, q2, q3, q4, b] = path.points;
        for (p, owner) in [(a, u), (b, v)] {
            if pts[p].role != Role::A || pts[p].owner != Owner::Vertex(owner) {
                return Err(GadgetViolation::EdgePath(format!("e{j}: endpoint {p} is not an A-point of v{owner}")));
            }
        }
        for q in [q1, q2, q3, q4] {
            if pts[q].role != Role::Inner || pts[q].owner != Owner::Edge(j) {
                return Err(GadgetViolation::EdgePath(format!("e{j}: point {q} is not an inner point of e{j}")));
            }
        }
        let coords: Vec<[i64; 3]> = path.points.iter().map(|&p| pts[p].coords).collect();
        if coplanar(&coords) {
            return Err(GadgetViolation::CoplanarEdgePath { edge: j });
        }
        for p in [a, b] {
            if !endpoint_used.insert(p) {
                return Err(GadgetViolation::SharedEndpoint { point: p });
            }
        }
    }
    let mut owners_ok = vec![false; pts.len()];
    for &p in h.vertex_paths.iter().flatten() {
        owners_ok[p] = true;
    }
    for path in &h.edge_paths {
        for &q in &path.points[1..5] {
            owners_ok[q] = true;
        }
    }
    if let Some(p) = owners_ok.iter().position(|ok| !ok) {
        return Err(GadgetViolation::EdgePath(format!("point {p} belongs to no path")));
    }
    let expected_points = n * (2 * n - 3) + 4 * m;
    if pts.len() != expected_points {
        return Err(GadgetViolation::EdgePath(format!(
            "{} points, expected {expected_points}",
            pts.len()
        )));
    }

    let mut seen: HashMap<[i64; 3], usize> = HashMap::with_capacity(pts.len());
    for (i, p) in pts.iter().enumerate() {
        if let Some(&first) = seen.get(&p.coords) {
            return Err(GadgetViolation::DuplicatePoint { first, second: i });
        }
        seen.insert(p.coords, i);
    }

    let mut intended: HashSet<(usize, usize)> = HashSet::new();
    let paths = h
        .vertex_paths
        .iter()
        .map(|p| p.as_slice())
        .chain(h.edge_paths.iter().map(|p| &p.points[..]));
    for path in paths {
        for w in path.windows(2) {
            let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
            if differing_axes(&pts[a].coords, &pts[b].coords) != 1 {
                return Err(GadgetViolation::MissingLine { first: a, second: b });
            }
            intended.insert((a, b));
        }
    }
    // Group points by line: for each axis, the key is the other two coordinates.
    for axis in 0..3 {
        let mut lines: HashMap<[i64; 2], Vec<usize>> = HashMap::new();
        for (i, p) in pts.iter().enumerate() {
            let mut key = [0i64; 2];
            let mut k = 0;
            for (c, &x) in p.coords.iter().enumerate() {
                if c != axis {
                    key[k] = x;
                    k += 1;
                }
            }
            lines.entry(key).or_default().push(i);
        }
        let mut keys: Vec<&[i64; 2]> = lines.keys().collect();
        keys.sort();
        for key in keys {
            let members = &lines[key];
            for (i, &a) in members.iter().enumerate() {
                for &b in &members[i + 1..] {
                    if !intended.contains(&(a.min(b), a.max(b))) {
                        return Err(GadgetViolation::UnintendedLine {
                            first: a.min(b),
                            second: a.max(b),
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

/// Exact maximum matching (pairwise vertex-disjoint hyperedges) by
/// branch-and-bound. For a point–line instance the hyperedges are the points
/// and the vertices the lines, so this is the largest point set with no two
/// points on a common line.
pub fn brute_force_max_matching(g: &PartitionedHypergraph) -> Result<usize> {
    let m = g.edge_count();
    if m > MATCHING_CAP {
        return Err(Error::SizeCap {
            size: m,
            cap: MATCHING_CAP,
        });
    }
    let lines: Vec<u64> = g
        .vertices()
        .map(|v| g.edges_of(v).iter().fold(0u64, |acc, e| acc | 1 << e.0))
        .collect();
    let part_lines: Vec<Vec<usize>> = (0..g.part_count())
        .map(|p| g.part_vertices(p).map(|v| v.0).collect())
        .collect();
    let point_lines: Vec<Vec<usize>> = g.edges().map(|e| g.edge(e).iter().map(|v| v.0).collect()).collect();
    let conflict: Vec<u64> = (0..m)
        .map(|p| point_lines[p].iter().fold(0u64, |acc, &l| acc | lines[l]) & !(1 << p))
        .collect();
    let mut search = MatchingSearch {
        lines,
        part_lines,
        point_lines,
        conflict,
        best: 0,
    };
    let all = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    search.run(all, 0);
    Ok(search.best)
}

/// Exact maximum matching of a point set covered by axis-parallel lines.
pub fn max_matching_of_points(points: &[Vec<i64>]) -> Result<usize> {
    if points.is_empty() {
        return Ok(0);
    }
    if points.len() > MATCHING_CAP {
        return Err(Error::SizeCap {
            size: points.len(),
            cap: MATCHING_CAP,
        });
    }
    brute_force_max_matching(&hypergraph_from_points(points, 1)?.graph)
}

struct MatchingSearch {
    lines: Vec<u64>,
    part_lines: Vec<Vec<usize>>,
    point_lines: Vec<Vec<usize>>,
    conflict: Vec<u64>,
    best: usize,
}

impl MatchingSearch {
    fn upper_bound(&self, avail: u64) -> usize {
        let by_lines = self
            .part_lines
            .iter()
            .map(|ls| ls.iter().filter(|&&l| self.lines[l] & avail != 0).count())
            .min()
            .unwrap_or(0);
        by_lines.min(avail.count_ones() as usize)
    }

    fn take(&self, avail: u64, p: usize) -> u64 {
        avail & !self.conflict[p] & !(1 << p)
    }

    fn run(&mut self, mut avail: u64, mut count: usize) {
        // A point whose conflicts all lie on one line has a clique as its
        // neighbourhood and belongs to some maximum matching.
        'reduce: loop {
            let mut rest = avail;
            while rest != 0 {
                let p = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let busy = self.point_lines[p]
                    .iter()
                    .filter(|&&l| (self.lines[l] & avail).count_ones() >= 2)
                    .count();
                if busy <= 1 {
                    avail = self.take(avail, p);
                    count += 1;
                    continue 'reduce;
                }
            }
            break;
        }
        if avail == 0 {
            self.best = self.best.max(count);
            return;
        }
        if count + self.upper_bound(avail) <= self.best {
            return;
        }
        let line = (0..self.lines.len())
            .max_by_key(|&l| ((self.lines[l] & avail).count_ones(), std::cmp::Reverse(l)))
            .expect("available points lie on lines");
        let on_line = self.lines[line] & avail;
        let mut rest = on_line;
        while rest != 0 {
            let p = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            self.run(self.take(avail, p), count + 1);
        }
        self.run(avail & !on_line, count);
    }
}

/// Exact independence number by include/exclude branching with a size bound.
pub fn brute_force_max_independent_set(g: &SimpleGraph) -> Result<usize> {
    let n = g.n();
    if n > INDEPENDENT_SET_CAP {
        return Err(Error::SizeCap {
            size: n,
            cap: INDEPENDENT_SET_CAP,
        });
    }
    let mut adj = vec![0u32; n];
    for &(a, b) in g.edges() {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    fn rec(adj: &[u32], avail: u32, count: usize, best: &mut usize) {
        if avail == 0 {
            *best = (*best).max(count);
            return;
        }
        if count + avail.count_ones() as usize <= *best {
            return;
        }
        let v = avail.trailing_zeros() as usize;
        let rest = avail & !(1 << v);
        rec(adj, rest & !adj[v], count + 1, best);
        if adj[v] & avail != 0 {
            rec(adj, rest, count, best);
        }
    }
    let mut best = 0;
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    rec(&adj, all, 0, &mut best);
    Ok(best)
}

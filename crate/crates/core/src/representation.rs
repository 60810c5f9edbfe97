//! Representations of hypergraphs by points and axis-aligned subspaces.
//!
//! A hyperedge becomes a point whose `i`-th coordinate is the id of its
//! component for axis `i`; a vertex becomes the subspace that leaves its
//! part's coordinates free and fixes the others to the values shared by all of
//! its hyperedges. The construction succeeds exactly when the hypergraph is
//! vertex-separable under the labeling.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeRef, PartitionedHypergraph, VertexRef};
use crate::labeling::{binomial, subsets, PartLabeling};
use crate::separability::{check_labeling, edge_witness, vertex_witness, AxisComponents, SeparabilityWitness};

/// Axis-aligned affine subspace: `None` marks a free coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AxisSubspace {
    coords: Vec<Option<i64>>,
}

impl AxisSubspace {
    pub fn new(coords: Vec<Option<i64>>) -> Self {
        AxisSubspace { coords }
    }

    pub fn dimension(&self) -> usize {
        self.coords.len()
    }

    pub fn free(&self) -> Vec<usize> {
        (0..self.coords.len()).filter(|&a| self.coords[a].is_none()).collect()
    }

    pub fn fixed(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coords.iter().enumerate().filter_map(|(a, c)| c.map(|c| (a, c)))
    }

    pub fn coordinate(&self, axis: usize) -> Option<i64> {
        self.coords[axis]
    }

    pub fn set_coordinate(&mut self, axis: usize, value: Option<i64>) {
        self.coords[axis] = value;
    }

    pub fn contains(&self, point: &[i64]) -> bool {
        point.len() == self.coords.len() && self.fixed().all(|(a, c)| point[a] == c)
    }

    /// The subspace with free set `free` through `point`.
    pub fn through(point: &[i64], free: &[usize]) -> Self {
        let mut coords: Vec<Option<i64>> = point.iter().copied().map(Some).collect();
        for &a in free {
            coords[a] = None;
        }
        AxisSubspace { coords }
    }

    fn to_value(&self) -> Value {
        let mut fixed = Map::new();
        for (a, c) in self.fixed() {
            fixed.insert((a + 1).to_string(), Value::from(c));
        }
        json!({"free": self.free().iter().map(|a| a + 1).collect::<Vec<_>>(), "fixed": fixed})
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    labeling: PartLabeling,
    points: Vec<Vec<i64>>,
    subspaces: Vec<AxisSubspace>,
}

#[derive(Deserialize)]
struct SubspaceDoc {
    free: Vec<usize>,
    fixed: HashMap<String, i64>,
}

#[derive(Deserialize)]
struct RepresentationDoc {
    d: usize,
    ell: usize,
    points: HashMap<String, Vec<i64>>,
    subspaces: HashMap<String, SubspaceDoc>,
    labeling: Vec<Vec<usize>>,
}

impl Representation {
    pub fn new(labeling: PartLabeling, points: Vec<Vec<i64>>, subspaces: Vec<AxisSubspace>) -> Self {
        Representation {
            labeling,
            points,
            subspaces,
        }
    }

    pub fn d(&self) -> usize {
        self.labeling.d()
    }

    pub fn ell(&self) -> usize {
        self.labeling.ell()
    }

    pub fn labeling(&self) -> &PartLabeling {
        &self.labeling
    }

    pub fn point(&self, e: EdgeRef) -> &[i64] {
        &self.points[e.0]
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn points_mut(&mut self) -> &mut [Vec<i64>] {
        &mut self.points
    }

    pub fn subspace(&self, v: VertexRef) -> &AxisSubspace {
        &self.subspaces[v.0]
    }

    pub fn subspaces(&self) -> &[AxisSubspace] {
        &self.subspaces
    }

    pub fn subspaces_mut(&mut self) -> &mut [AxisSubspace] {
        &mut self.subspaces
    }

    pub fn to_value(&self, g: &PartitionedHypergraph) -> Value {
        let mut points = Map::new();
        for (i, p) in self.points.iter().enumerate() {
            points.insert(EdgeRef(i).name(), Value::from(p.clone()));
        }
        let mut subspaces = Map::new();
        for (i, s) in self.subspaces.iter().enumerate() {
            subspaces.insert(g.name(VertexRef(i)).to_string(), s.to_value());
        }
        json!({
            "d": self.d(),
            "ell": self.ell(),
            "points": points,
            "subspaces": subspaces,
            "labeling": self.labeling.to_document(),
        })
    }

    pub fn to_json(&self, g: &PartitionedHypergraph) -> String {
        serde_json::to_string(&self.to_value(g)).expect("representation serializes")
    }

    /// Reads a representation document against the names of `g`.
    pub fn from_json(text: &str, g: &PartitionedHypergraph) -> Result<Self> {
        let doc: RepresentationDoc = serde_json::from_str(text)?;
        let labeling = PartLabeling::from_document(&doc.labeling)?;
        if labeling.d() != doc.d || labeling.ell() != doc.ell {
            return Err(Error::Malformed(format!(
                "labeling implies (d, ell) = ({}, {}), document says ({}, {})",
                labeling.d(),
                labeling.ell(),
                doc.d,
                doc.ell
            )));
        }
        if doc.points.len() != g.edge_count() {
            return Err(Error::Contract(format!(
                "representation has {} points, hypergraph has {} edges",
                doc.points.len(),
                g.edge_count()
            )));
        }
        if doc.subspaces.len() != g.vertex_count() {
            return Err(Error::Contract(format!(
                "representation has {} subspaces, hypergraph has {} vertices",
                doc.subspaces.len(),
                g.vertex_count()
            )));
        }
        let mut points = Vec::with_capacity(g.edge_count());
        for e in g.edges() {
            let p = doc
                .points
                .get(&e.name())
                .ok_or_else(|| Error::Contract(format!("no point for {}", e.name())))?;
            if p.len() != doc.d {
                return Err(Error::Malformed(format!("point {} has wrong dimension", e.name())));
            }
            points.push(p.clone());
        }
        let mut subspaces = Vec::with_capacity(g.vertex_count());
        for v in g.vertices() {
            let s = doc
                .subspaces
                .get(g.name(v))
                .ok_or_else(|| Error::Contract(format!("no subspace for {}", g.name(v))))?;
            let mut coords = vec![None; doc.d];
            for (axis, value) in &s.fixed {
                let a: usize = axis
                    .parse()
                    .ok()
                    .filter(|a| (1..=doc.d).contains(a))
                    .ok_or_else(|| Error::Malformed(format!("bad axis key {axis:?}")))?;
                coords[a - 1] = Some(*value);
            }
            let sub = AxisSubspace::new(coords);
            let free: Vec<usize> = s.free.iter().map(|a| a.wrapping_sub(1)).collect();
            if sub.free() != free {
                return Err(Error::Malformed(format!(
                    "subspace of {}: free and fixed coordinates do not partition the axes",
                    g.name(v)
                )));
            }
            subspaces.push(sub);
        }
        Ok(Representation::new(labeling, points, subspaces))
    }
}

/// Result of running the construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Construction {
    Represented(Representation),
    NotRepresentable(SeparabilityWitness),
}

impl Construction {
    pub fn representation(&self) -> Option<&Representation> {
        match self {
            Construction::Represented(r) => Some(r),
            Construction::NotRepresentable(_) => None,
        }
    }

    pub fn witness(&self) -> Option<&SeparabilityWitness> {
        match self {
            Construction::Represented(_) => None,
            Construction::NotRepresentable(w) => Some(w),
        }
    }

    pub fn is_represented(&self) -> bool {
        matches!(self, Construction::Represented(_))
    }
}

pub fn construct_representation(g: &PartitionedHypergraph, labeling: &PartLabeling) -> Result<Construction> {
    let comps = AxisComponents::build(g, labeling)?;
    if let Some(w) = vertex_witness(g, labeling, &comps) {
        return Ok(Construction::NotRepresentable(w));
    }
    if let Some(w) = edge_witness(g, labeling, &comps) {
        return Ok(Construction::NotRepresentable(w));
    }
    let d = labeling.d();
    let points: Vec<Vec<i64>> = g
        .edges()
        .map(|e| (0..d).map(|a| i64::from(comps.axis(a).component(e))).collect())
        .collect();
    let subspaces = g
        .vertices()
        .map(|v| AxisSubspace::through(&points[g.edges_of(v)[0].0], labeling.free_set(g.part_of(v))))
        .collect();
    Ok(Construction::Represented(Representation::new(labeling.clone(), points, subspaces)))
}

/// First violated representation invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    ShapeMismatch(String),
    WrongFreeSet { vertex: String },
    IncidenceViolated { edge: String, vertex: String },
    PointsNotDistinct { first: String, second: String },
    SubspacesNotDistinct { first: String, second: String },
    SpuriousIncidence { edge: String, vertex: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ShapeMismatch(why) => write!(f, "shape mismatch: {why}"),
            Violation::WrongFreeSet { vertex } => {
                write!(f, "free set of {vertex} does not match its part's label")
            }
            Violation::IncidenceViolated { edge, vertex } => {
                write!(f, "incidence violated: point {edge} is not on the subspace of {vertex}")
            }
            Violation::PointsNotDistinct { first, second } => {
                write!(f, "points not distinct: {first} and {second}")
            }
            Violation::SubspacesNotDistinct { first, second } => {
                write!(f, "subspaces not distinct: {first} and {second}")
            }
            Violation::SpuriousIncidence { edge, vertex } => {
                write!(f, "spurious incidence: point {edge} lies on the subspace of {vertex}")
            }
        }
    }
}

impl std::error::Error for Violation {}

fn projection(point: &[i64], fixed: &[usize]) -> Vec<i64> {
    fixed.iter().map(|&a| point[a]).collect()
}

pub fn verify_representation(g: &PartitionedHypergraph, rep: &Representation) -> std::result::Result<(), Violation> {
    let labeling = rep.labeling();
    let d = labeling.d();
    if labeling.part_count() != g.part_count() {
        return Err(Violation::ShapeMismatch(format!(
            "labeling covers {} parts, hypergraph has {}",
            labeling.part_count(),
            g.part_count()
        )));
    }
    if rep.points.len() != g.edge_count() || rep.subspaces.len() != g.vertex_count() {
        return Err(Violation::ShapeMismatch(format!(
            "{} points / {} subspaces for {} edges / {} vertices",
            rep.points.len(),
            rep.subspaces.len(),
            g.edge_count(),
            g.vertex_count()
        )));
    }
    if let Some(e) = g.edges().find(|e| rep.point(*e).len() != d) {
        return Err(Violation::ShapeMismatch(format!("point {} has wrong dimension", e.name())));
    }
    for v in g.vertices() {
        let s = rep.subspace(v);
        if s.dimension() != d {
            return Err(Violation::ShapeMismatch(format!("subspace of {} has wrong dimension", g.name(v))));
        }
        if s.free() != labeling.free_set(g.part_of(v)) {
            return Err(Violation::WrongFreeSet {
                vertex: g.name(v).to_string(),
            });
        }
    }
    let mut seen: HashMap<&[i64], EdgeRef> = HashMap::with_capacity(g.edge_count());
    for e in g.edges() {
        if let Some(&first) = seen.get(rep.point(e)) {
            return Err(Violation::PointsNotDistinct {
                first: first.name(),
                second: e.name(),
            });
        }
        seen.insert(rep.point(e), e);
    }
    for e in g.edges() {
        for &v in g.edge(e) {
            if !rep.subspace(v).contains(rep.point(e)) {
                return Err(Violation::IncidenceViolated {
                    edge: e.name(),
                    vertex: g.name(v).to_string(),
                });
            }
        }
    }
    let fixed: Vec<Vec<usize>> = (0..g.part_count()).map(|p| labeling.fixed_axes(p)).collect();
    let mut by_part: Vec<HashMap<Vec<i64>, VertexRef>> = vec![HashMap::new(); g.part_count()];
    for v in g.vertices() {
        let part = g.part_of(v);
        let key: Vec<i64> = fixed[part].iter().map(|&a| rep.subspace(v).coordinate(a).unwrap()).collect();
        if let Some(&first) = by_part[part].get(&key) {
            return Err(Violation::SubspacesNotDistinct {
                first: g.name(first).to_string(),
                second: g.name(v).to_string(),
            });
        }
        by_part[part].insert(key, v);
    }
    // Subspaces of one part are pairwise distinct here, so a point lies on at
    // most one of them; it must be the hyperedge's own vertex.
    for e in g.edges() {
        for (part, &own) in g.edge(e).iter().enumerate() {
            if let Some(&hit) = by_part[part].get(&projection(rep.point(e), &fixed[part])) {
                if hit != own {
                    return Err(Violation::SpuriousIncidence {
                        edge: e.name(),
                        vertex: g.name(hit).to_string(),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Point-set document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSetDoc {
    pub d: usize,
    #[serde(default = "default_ell")]
    pub ell: usize,
    pub points: Vec<Vec<i64>>,
}

fn default_ell() -> usize {
    1
}

#[derive(Clone, Debug)]
pub struct FromPoints {
    pub graph: PartitionedHypergraph,
    pub labeling: PartLabeling,
    pub representation: Representation,
}

fn subspace_name(point: &[i64], free: &[usize]) -> String {
    let parts: Vec<String> = point
        .iter()
        .enumerate()
        .map(|(a, c)| {
            if free.binary_search(&a).is_ok() {
                "*".to_string()
            } else {
                c.to_string()
            }
        })
        .collect();
    format!("({})", parts.join(","))
}

/// The incidence hypergraph of a point set: one hyperedge per point, one vertex
/// per axis-aligned `ell`-subspace through at least one point.
pub fn hypergraph_from_points(points: &[Vec<i64>], ell: usize) -> Result<FromPoints> {
    let Some(first) = points.first() else {
        return Err(Error::InvalidPoints("point set is empty".into()));
    };
    let d = first.len();
    if let Some(i) = points.iter().position(|p| p.len() != d) {
        return Err(Error::InvalidPoints(format!("point {i} has dimension {}, expected {d}", points[i].len())));
    }
    let labeling = PartLabeling::canonical(d, ell).map_err(|_| {
        Error::InvalidPoints(format!("need d >= 2 and 1 <= ell <= d-1, got d={d}, ell={ell}"))
    })?;
    {
        let mut seen: HashMap<&[i64], usize> = HashMap::with_capacity(points.len());
        for (i, p) in points.iter().enumerate() {
            if let Some(j) = seen.insert(p.as_slice(), i) {
                return Err(Error::InvalidPoints(format!("points {j} and {i} coincide")));
            }
        }
    }
    let k = labeling.part_count();
    let mut parts: Vec<Vec<String>> = vec![Vec::new(); k];
    let mut local_of: Vec<HashMap<Vec<i64>, usize>> = vec![HashMap::new(); k];
    let mut edges = Vec::with_capacity(points.len());
    for p in points {
        let mut edge = Vec::with_capacity(k);
        for part in 0..k {
            let fixed = labeling.fixed_axes(part);
            let key = projection(p, &fixed);
            let next = parts[part].len();
            let local = *local_of[part].entry(key).or_insert_with(|| {
                parts[part].push(subspace_name(p, labeling.free_set(part)));
                next
            });
            edge.push(local);
        }
        edges.push(edge);
    }
    let graph = PartitionedHypergraph::new(parts, edges, Some(labeling.clone()))?;
    let subspaces = graph
        .vertices()
        .map(|v| AxisSubspace::through(&points[graph.edges_of(v)[0].0], labeling.free_set(graph.part_of(v))))
        .collect();
    let representation = Representation::new(labeling.clone(), points.to_vec(), subspaces);
    Ok(FromPoints {
        graph,
        labeling,
        representation,
    })
}

/// For each part, the class of every point under "lies on the same
/// subspace", numbered by first appearance. Two point sets with equal classes
/// have the same incidence structure.
pub fn incidence_classes(points: &[Vec<i64>], labeling: &PartLabeling) -> Vec<Vec<u32>> {
    (0..labeling.part_count())
        .map(|part| {
            let fixed = labeling.fixed_axes(part);
            let mut ids: HashMap<Vec<i64>, u32> = HashMap::new();
            points
                .iter()
                .map(|p| {
                    let next = ids.len() as u32 + 1;
                    *ids.entry(projection(p, &fixed)).or_insert(next)
                })
                .collect()
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LabelingMode {
    Fixed,
    Enumerate,
}

impl std::str::FromStr for LabelingMode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "fixed" => Ok(LabelingMode::Fixed),
            "enumerate" => Ok(LabelingMode::Enumerate),
            other => Err(format!("unknown labeling mode {other:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recognition {
    Represented(Representation),
    /// No labeling tried admits a representation; the witness refers to the
    /// first labeling tried.
    NotRepresentable {
        labeling: PartLabeling,
        witness: SeparabilityWitness,
        labelings_tried: u64,
    },
}

impl Recognition {
    pub fn representation(&self) -> Option<&Representation> {
        match self {
            Recognition::Represented(r) => Some(r),
            Recognition::NotRepresentable { .. } => None,
        }
    }

    pub fn is_represented(&self) -> bool {
        matches!(self, Recognition::Represented(_))
    }
}

fn factorial(n: usize) -> Option<u64> {
    (1..=n as u64).try_fold(1u64, |acc, x| acc.checked_mul(x))
}

/// The `rank`-th permutation of `0..k` in lexicographic order.
fn unrank_permutation(k: usize, mut rank: u64) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..k).collect();
    let mut out = Vec::with_capacity(k);
    for i in (0..k).rev() {
        let f = factorial(i).unwrap();
        let idx = (rank / f) as usize;
        rank %= f;
        out.push(pool.remove(idx));
    }
    out
}

/// The labeling used in fixed mode: the document labeling when it matches
/// `(d, ell)`, otherwise the canonical one for `ell = 1`.
pub fn fixed_labeling(g: &PartitionedHypergraph, d: usize, ell: usize) -> Result<PartLabeling> {
    match g.labeling() {
        Some(l) if l.d() == d && l.ell() == ell => Ok(l.clone()),
        Some(l) => Err(Error::InvalidLabeling(format!(
            "document labeling is for (d, ell) = ({}, {}), requested ({d}, {ell})",
            l.d(),
            l.ell()
        ))),
        None if ell == 1 => PartLabeling::canonical(d, ell),
        None => Err(Error::MissingLabeling(ell)),
    }
}

pub fn recognize(g: &PartitionedHypergraph, d: usize, ell: usize, mode: LabelingMode) -> Result<Recognition> {
    if d < 2 || ell < 1 || ell >= d {
        return Err(Error::InvalidLabeling(format!(
            "need d >= 2 and 1 <= ell <= d-1, got d={d}, ell={ell}"
        )));
    }
    let expected = binomial(d, ell);
    if g.part_count() != expected {
        return Err(Error::PartCountMismatch {
            parts: g.part_count(),
            d,
            ell,
            expected,
        });
    }
    let single = |labeling: PartLabeling| -> Result<Recognition> {
        Ok(match construct_representation(g, &labeling)? {
            Construction::Represented(r) => Recognition::Represented(r),
            Construction::NotRepresentable(witness) => Recognition::NotRepresentable {
                labeling,
                witness,
                labelings_tried: 1,
            },
        })
    };
    match mode {
        LabelingMode::Fixed => single(fixed_labeling(g, d, ell)?),
        // Every labeling is a coordinate permutation of the canonical one.
        LabelingMode::Enumerate if ell == 1 || ell == d - 1 => single(PartLabeling::canonical(d, ell)?),
        LabelingMode::Enumerate => {
            let k = g.part_count();
            let total = factorial(k)
                .ok_or_else(|| Error::Contract(format!("{k}! labelings cannot be enumerated")))?;
            let all = subsets(d, ell);
            let found = (0..total).into_par_iter().find_map_first(|rank| {
                let labeling = PartLabeling::from_permutation(d, ell, &all, &unrank_permutation(k, rank));
                match construct_representation(g, &labeling) {
                    Ok(Construction::Represented(r)) => Some(r),
                    _ => None,
                }
            });
            match found {
                Some(r) => Ok(Recognition::Represented(r)),
                None => {
                    let labeling = PartLabeling::canonical(d, ell)?;
                    check_labeling(g, &labeling)?;
                    let witness = construct_representation(g, &labeling)?
                        .witness()
                        .cloned()
                        .expect("no labeling succeeded");
                    Ok(Recognition::NotRepresentable {
                        labeling,
                        witness,
                        labelings_tried: total,
                    })
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::parse_hypergraph;
    use crate::separability::WitnessPair;

    fn two_edge() -> PartitionedHypergraph {
        parse_hypergraph(
            r#"{"k":3,"parts":[["a1","a2"],["b1"],["c1","c2"]],
                "edges":[["a1","b1","c1"],["a2","b1","c2"]]}"#,
        )
        .unwrap()
    }

    fn lines3() -> PartLabeling {
        PartLabeling::canonical(3, 1).unwrap()
    }

    fn vx(g: &PartitionedHypergraph, n: &str) -> VertexRef {
        g.vertex_by_name(n).unwrap()
    }

    #[test]
    fn hand_executed_construction() {
        let g = two_edge();
        let rep = construct_representation(&g, &lines3()).unwrap();
        let rep = rep.representation().unwrap();
        assert_eq!(rep.point(EdgeRef(0)), &[1, 1, 1]);
        assert_eq!(rep.point(EdgeRef(1)), &[1, 2, 1]);
        assert_eq!(rep.subspace(vx(&g, "b1")), &AxisSubspace::new(vec![Some(1), None, Some(1)]));
        assert_eq!(rep.subspace(vx(&g, "a2")), &AxisSubspace::new(vec![None, Some(2), Some(1)]));
        verify_representation(&g, rep).unwrap();
        let text = rep.to_json(&g);
        assert!(text.starts_with(r#"{"d":3,"ell":1,"points":{"e0":[1,1,1],"e1":[1,2,1]},"subspaces":{"a1":"#));
        assert!(text.contains(r#""b1":{"free":[2],"fixed":{"1":1,"3":1}}"#));
        assert!(text.ends_with(r#""labeling":[[1],[2],[3]]}"#));
        assert_eq!(Representation::from_json(&text, &g).unwrap(), *rep);
    }

    #[test]
    fn single_edge_gives_three_lines() {
        let g = parse_hypergraph(r#"{"k":3,"parts":[["a"],["b"],["c"]],"edges":[["a","b","c"]]}"#).unwrap();
        let c = construct_representation(&g, &lines3()).unwrap();
        let rep = c.representation().unwrap();
        assert_eq!(rep.points(), &[vec![1, 1, 1]]);
        let free: Vec<Vec<usize>> = rep.subspaces().iter().map(|s| s.free()).collect();
        assert_eq!(free, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn inseparable_pair_fails_with_vertex_witness() {
        let g = parse_hypergraph(
            r#"{"k":3,"parts":[["a1"],["b1","b2"],["c1"]],"edges":[["a1","b1","c1"],["a1","b2","c1"]]}"#,
        )
        .unwrap();
        let c = construct_representation(&g, &lines3()).unwrap();
        assert_eq!(
            c.witness().unwrap().pair,
            WitnessPair::Vertices(vx(&g, "b1"), vx(&g, "b2"))
        );
    }

    #[test]
    fn verification_catches_tampering() {
        let g = two_edge();
        let rep = construct_representation(&g, &lines3()).unwrap().representation().cloned().unwrap();

        let mut merged = rep.clone();
        merged.points_mut()[1] = merged.points()[0].clone();
        let err = verify_representation(&g, &merged).unwrap_err();
        assert_eq!(err.to_string(), "points not distinct: e0 and e1");

        let mut perturbed = rep.clone();
        perturbed.subspaces_mut()[vx(&g, "b1").0].set_coordinate(0, Some(7));
        let err = verify_representation(&g, &perturbed).unwrap_err();
        assert!(err.to_string().starts_with("incidence violated"), "{err}");

        let mut refree = rep.clone();
        refree.subspaces_mut()[vx(&g, "b1").0].set_coordinate(1, Some(1));
        assert!(matches!(
            verify_representation(&g, &refree).unwrap_err(),
            Violation::WrongFreeSet { .. }
        ));
    }

    #[test]
    fn verification_catches_coincident_subspaces() {
        let g = parse_hypergraph(r#"{"k":2,"parts":[["a0","a1"],["b0","b1"]],"edges":[["a0","b0"],["a1","b1"]]}"#)
            .unwrap();
        let labeling = PartLabeling::canonical(2, 1).unwrap();
        let rep = Representation::new(
            labeling,
            vec![vec![0, 0], vec![0, 1]],
            vec![
                AxisSubspace::new(vec![None, Some(0)]),
                AxisSubspace::new(vec![None, Some(1)]),
                AxisSubspace::new(vec![Some(0), None]),
                AxisSubspace::new(vec![Some(0), None]),
            ],
        );
        assert_eq!(
            verify_representation(&g, &rep).unwrap_err().to_string(),
            "subspaces not distinct: b0 and b1"
        );
        let short = Representation::new(rep.labeling().clone(), vec![vec![0, 0]], rep.subspaces().to_vec());
        assert!(matches!(
            verify_representation(&g, &short).unwrap_err(),
            Violation::ShapeMismatch(_)
        ));
    }

    #[test]
    fn points_to_hypergraph() {
        let single = hypergraph_from_points(&[vec![0, 0]], 1).unwrap();
        assert_eq!(
            (single.graph.part_count(), single.graph.vertex_count(), single.graph.edge_count()),
            (2, 2, 1)
        );

        let f = hypergraph_from_points(&[vec![0, 0], vec![1, 1], vec![0, 1]], 1).unwrap();
        let g = &f.graph;
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 3));
        // Part 1: lines with x free (rows), part 2: lines with y free (columns).
        assert_eq!(g.to_document().parts, vec![vec!["(*,0)", "(*,1)"], vec!["(0,*)", "(1,*)"]]);
        assert_eq!(g.edge(EdgeRef(1))[0], g.edge(EdgeRef(2))[0]);
        assert_eq!(g.edge(EdgeRef(0))[1], g.edge(EdgeRef(2))[1]);
        verify_representation(g, &f.representation).unwrap();

        let f3 = hypergraph_from_points(&[vec![0, 0, 0], vec![5, 0, 0]], 1).unwrap();
        let shared = f3.graph.edge(EdgeRef(0))[0];
        assert_eq!(shared, f3.graph.edge(EdgeRef(1))[0]);
        assert_eq!(f3.graph.name(shared), "(*,0,0)");
    }

    #[test]
    fn points_errors() {
        assert!(hypergraph_from_points(&[], 1).is_err());
        assert!(hypergraph_from_points(&[vec![0, 0], vec![0, 0]], 1).is_err());
        assert!(hypergraph_from_points(&[vec![0, 0]], 2).is_err());
        assert!(hypergraph_from_points(&[vec![0, 0], vec![1]], 1).is_err());
    }

    #[test]
    fn recognize_modes() {
        let g = two_edge();
        assert!(recognize(&g, 3, 1, LabelingMode::Fixed).unwrap().is_represented());
        assert!(recognize(&g, 3, 2, LabelingMode::Enumerate).unwrap().is_represented());
        assert!(matches!(
            recognize(&g, 4, 1, LabelingMode::Fixed),
            Err(Error::PartCountMismatch { .. })
        ));
        assert!(matches!(recognize(&g, 3, 2, LabelingMode::Fixed), Err(Error::MissingLabeling(2))));
    }

    #[test]
    fn permutations_unrank_in_lexicographic_order() {
        let perms: Vec<Vec<usize>> = (0..6).map(|r| unrank_permutation(3, r)).collect();
        assert_eq!(
            perms,
            vec![
                vec![0, 1, 2],
                vec![0, 2, 1],
                vec![1, 0, 2],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![2, 1, 0]
            ]
        );
    }

    #[test]
    fn incidence_classes_ignore_coordinate_values() {
        let l = PartLabeling::canonical(2, 1).unwrap();
        let a = incidence_classes(&[vec![0, 0], vec![7, 0], vec![7, 3]], &l);
        let b = incidence_classes(&[vec![1, 1], vec![2, 1], vec![2, 2]], &l);
        assert_eq!(a, b);
        assert_eq!(a, vec![vec![1, 1, 2], vec![1, 2, 2]]);
    }
}

//! Vertex and edge separability, decided through per-axis component graphs.
//!
//! For an axis `j`, the component graph links two hyperedges when they share a
//! vertex from a part whose free set excludes `j`. Its connected components are
//! found with a disjoint-set forest over hyperedges: every such vertex unions
//! its incident hyperedges, which is linear in the incidence size instead of
//! quadratic in the edge count.
//!
//! Two same-part vertices are joined by a path avoiding the parts that have
//! `j` free exactly when their hyperedges fall into one component for `j`, so
//! separability reduces to comparing component ids. The `*_by_paths`
//! functions decide the same predicates by breadth-first search and serve as
//! an independent cross-check.

use std::collections::HashMap;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::hypergraph::{shortest_avoiding_path, EdgeRef, PartitionedHypergraph, VertexRef};
use crate::labeling::PartLabeling;
use crate::union_find::DisjointSets;

/// Connected components of the component graph for one axis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPartition {
    axis: usize,
    component_of: Vec<u32>,
    component_count: usize,
}

impl ComponentPartition {
    /// 0-based axis.
    pub fn axis(&self) -> usize {
        self.axis
    }

    /// 1-based component id of `e`.
    pub fn component(&self, e: EdgeRef) -> u32 {
        self.component_of[e.0]
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn ids(&self) -> &[u32] {
        &self.component_of
    }
}

pub(crate) fn check_labeling(g: &PartitionedHypergraph, labeling: &PartLabeling) -> Result<()> {
    if labeling.part_count() != g.part_count() {
        return Err(Error::InvalidLabeling(format!(
            "labeling covers {} parts, hypergraph has {}",
            labeling.part_count(),
            g.part_count()
        )));
    }
    Ok(())
}

fn components(g: &PartitionedHypergraph, labeling: &PartLabeling, axis: usize) -> ComponentPartition {
    let mut sets = DisjointSets::new(g.edge_count());
    for part in 0..g.part_count() {
        if labeling.is_free(part, axis) {
            continue;
        }
        for v in g.part_vertices(part) {
            let incident = g.edges_of(v);
            if let Some((first, rest)) = incident.split_first() {
                for e in rest {
                    sets.union(first.0, e.0);
                }
            }
        }
    }
    let (component_of, component_count) = sets.labels();
    ComponentPartition {
        axis,
        component_of,
        component_count,
    }
}

pub fn build_component_partition(
    g: &PartitionedHypergraph,
    labeling: &PartLabeling,
    axis: usize,
) -> Result<ComponentPartition> {
    check_labeling(g, labeling)?;
    if axis >= labeling.d() {
        return Err(Error::Contract(format!(
            "axis {} out of range for d = {}",
            axis + 1,
            labeling.d()
        )));
    }
    Ok(components(g, labeling, axis))
}

/// Component partitions for every axis.
#[derive(Clone, Debug)]
pub struct AxisComponents {
    partitions: Vec<ComponentPartition>,
}

impl AxisComponents {
    pub fn build(g: &PartitionedHypergraph, labeling: &PartLabeling) -> Result<Self> {
        check_labeling(g, labeling)?;
        Ok(AxisComponents {
            partitions: (0..labeling.d()).map(|a| components(g, labeling, a)).collect(),
        })
    }

    pub fn axis(&self, axis: usize) -> &ComponentPartition {
        &self.partitions[axis]
    }

    pub fn partitions(&self) -> &[ComponentPartition] {
        &self.partitions
    }

    /// The point of `e`: its component id on every axis.
    pub fn point(&self, e: EdgeRef) -> Vec<u32> {
        self.partitions.iter().map(|p| p.component(e)).collect()
    }

    /// Component ids of every edge on `axes`, concatenated edge by edge.
    fn flat_ids(&self, edges: impl Iterator<Item = EdgeRef>, axes: &[usize]) -> Vec<u32> {
        let mut out = Vec::new();
        for e in edges {
            out.extend(axes.iter().map(|&a| self.partitions[a].component(e)));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessPair {
    Vertices(VertexRef, VertexRef),
    Edges(EdgeRef, EdgeRef),
}

/// Certificate that a pair cannot be separated: for every candidate cut axis,
/// a shortest path that avoids the parts having that axis free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparabilityWitness {
    pub pair: WitnessPair,
    /// `(axis, path)` with 0-based axes in ascending order.
    pub avoiding_paths: Vec<(usize, Vec<VertexRef>)>,
}

impl SeparabilityWitness {
    fn for_vertices(g: &PartitionedHypergraph, labeling: &PartLabeling, v: VertexRef, w: VertexRef) -> Self {
        let avoiding_paths = labeling
            .fixed_axes(g.part_of(v))
            .into_iter()
            .map(|axis| {
                let cut = labeling.cut_mask(axis);
                let path = shortest_avoiding_path(g, &[v], &[w], &cut)
                    .expect("inseparable pair has an avoiding path on every axis");
                (axis, path)
            })
            .collect();
        SeparabilityWitness {
            pair: WitnessPair::Vertices(v, w),
            avoiding_paths,
        }
    }

    fn for_edges(g: &PartitionedHypergraph, labeling: &PartLabeling, e: EdgeRef, f: EdgeRef) -> Self {
        let avoiding_paths = (0..labeling.d())
            .map(|axis| {
                let cut = labeling.cut_mask(axis);
                let path = shortest_avoiding_path(g, g.edge(e), g.edge(f), &cut)
                    .expect("inseparable pair has an avoiding path on every axis");
                (axis, path)
            })
            .collect();
        SeparabilityWitness {
            pair: WitnessPair::Edges(e, f),
            avoiding_paths,
        }
    }

    pub fn to_value(&self, g: &PartitionedHypergraph) -> Value {
        let (kind, pair) = match self.pair {
            WitnessPair::Vertices(v, w) => ("vertex", [g.name(v).to_string(), g.name(w).to_string()]),
            WitnessPair::Edges(e, f) => ("edge", [e.name(), f.name()]),
        };
        let mut paths = Map::new();
        for (axis, path) in &self.avoiding_paths {
            paths.insert(
                (axis + 1).to_string(),
                Value::from(path.iter().map(|v| g.name(*v).to_string()).collect::<Vec<_>>()),
            );
        }
        json!({"kind": kind, "pair": pair, "avoiding_paths": paths})
    }

    pub fn to_json(&self, g: &PartitionedHypergraph) -> String {
        serde_json::to_string(&self.to_value(g)).expect("witness serializes")
    }

    /// Checks that every listed path is a valid path between the pair that
    /// avoids its cut, and that every candidate axis is covered.
    pub fn check(&self, g: &PartitionedHypergraph, labeling: &PartLabeling) -> std::result::Result<(), String> {
        let axes: Vec<usize> = match self.pair {
            WitnessPair::Vertices(v, w) => {
                if v == w || g.part_of(v) != g.part_of(w) {
                    return Err("vertex pair must be two distinct same-part vertices".into());
                }
                labeling.fixed_axes(g.part_of(v))
            }
            WitnessPair::Edges(e, f) => {
                if e == f {
                    return Err("edge pair must be distinct".into());
                }
                (0..labeling.d()).collect()
            }
        };
        let listed: Vec<usize> = self.avoiding_paths.iter().map(|(a, _)| *a).collect();
        if listed != axes {
            return Err(format!("paths listed for axes {listed:?}, expected {axes:?}"));
        }
        for (axis, path) in &self.avoiding_paths {
            let (Some(&first), Some(&last)) = (path.first(), path.last()) else {
                return Err(format!("empty path for axis {}", axis + 1));
            };
            let endpoints_ok = match self.pair {
                WitnessPair::Vertices(v, w) => first == v && last == w,
                WitnessPair::Edges(e, f) => g.contains(e, first) && g.contains(f, last),
            };
            if !endpoints_ok {
                return Err(format!("path for axis {} has wrong endpoints", axis + 1));
            }
            if path.iter().any(|&u| labeling.is_free(g.part_of(u), *axis)) {
                return Err(format!("path for axis {} enters the cut", axis + 1));
            }
            for pair in path.windows(2) {
                let joined = g.edges_of(pair[0]).iter().any(|&e| g.contains(e, pair[1]));
                if !joined {
                    return Err(format!(
                        "path for axis {}: {} and {} share no hyperedge",
                        axis + 1,
                        g.name(pair[0]),
                        g.name(pair[1])
                    ));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Separable,
    NotSeparable(SeparabilityWitness),
}

impl Verdict {
    pub fn is_separable(&self) -> bool {
        matches!(self, Verdict::Separable)
    }

    pub fn witness(&self) -> Option<&SeparabilityWitness> {
        match self {
            Verdict::Separable => None,
            Verdict::NotSeparable(w) => Some(w),
        }
    }
}

fn check_same_part(g: &PartitionedHypergraph, v: VertexRef, w: VertexRef) -> Result<()> {
    if v == w {
        return Err(Error::Contract("vertex pair must be distinct".into()));
    }
    if g.part_of(v) != g.part_of(w) {
        return Err(Error::Contract(format!(
            "{} and {} lie in different parts",
            g.name(v),
            g.name(w)
        )));
    }
    Ok(())
}

/// Smallest axis outside the pair's free set whose cut separates `v` from `w`.
pub fn vertex_separable(
    g: &PartitionedHypergraph,
    labeling: &PartLabeling,
    v: VertexRef,
    w: VertexRef,
) -> Result<Option<usize>> {
    check_same_part(g, v, w)?;
    let comps = AxisComponents::build(g, labeling)?;
    let (ev, ew) = (g.edges_of(v)[0], g.edges_of(w)[0]);
    Ok(labeling
        .fixed_axes(g.part_of(v))
        .into_iter()
        .find(|&a| comps.axis(a).component(ev) != comps.axis(a).component(ew)))
}

/// Smallest axis on which `e` and `f` fall into different components.
pub fn edge_separable(
    g: &PartitionedHypergraph,
    labeling: &PartLabeling,
    e: EdgeRef,
    f: EdgeRef,
) -> Result<Option<usize>> {
    if e == f {
        return Err(Error::Contract("edge pair must be distinct".into()));
    }
    let comps = AxisComponents::build(g, labeling)?;
    Ok((0..labeling.d()).find(|&a| comps.axis(a).component(e) != comps.axis(a).component(f)))
}

/// First same-part vertex pair (in vertex order) whose fixed-coordinate
/// signatures coincide.
pub(crate) fn first_vertex_collision(
    g: &PartitionedHypergraph,
    labeling: &PartLabeling,
    comps: &AxisComponents,
) -> Option<(VertexRef, VertexRef)> {
    for part in 0..g.part_count() {
        let axes = labeling.fixed_axes(part);
        let vertices: Vec<VertexRef> = g.part_vertices(part).collect();
        let sigs = comps.flat_ids(vertices.iter().map(|&v| g.edges_of(v)[0]), &axes);
        if let Some((i, j)) = first_duplicate(&sigs, vertices.len()) {
            return Some((vertices[i], vertices[j]));
        }
    }
    None
}

pub(crate) fn first_edge_collision(comps: &AxisComponents, m: usize) -> Option<(EdgeRef, EdgeRef)> {
    let axes: Vec<usize> = (0..comps.partitions.len()).collect();
    let points = comps.flat_ids((0..m).map(EdgeRef), &axes);
    first_duplicate(&points, m).map(|(i, j)| (EdgeRef(i), EdgeRef(j)))
}

/// First `(earlier, later)` pair among `count` equal-width keys stored back
/// to back, `later` minimal.
fn first_duplicate(flat: &[u32], count: usize) -> Option<(usize, usize)> {
    let width = flat.len().checked_div(count).unwrap_or(0);
    let key = |i: usize| &flat[i * width..(i + 1) * width];
    if let Some(mut packed) = pack_keys(flat, width, count) {
        packed.sort_unstable();
        // Among equal runs (sorted by index), the later element of the
        // earliest-completing pair gives the answer.
        return packed
            .windows(2)
            .filter(|w| w[0].0 == w[1].0)
            .map(|w| (w[0].1, w[1].1))
            .min_by_key(|&(_, later)| later)
            .map(|(_, later)| (first_with_key(&packed, packed_key(&packed, later)), later));
    }
    let mut seen: HashMap<&[u32], usize> = HashMap::with_capacity(count);
    for i in 0..count {
        if let Some(&earlier) = seen.get(key(i)) {
            return Some((earlier, i));
        }
        seen.insert(key(i), i);
    }
    None
}

/// Mixed-radix encoding of each key with its index, or `None` on overflow.
fn pack_keys(flat: &[u32], width: usize, count: usize) -> Option<Vec<(u128, usize)>> {
    let mut radix = vec![1u128; width];
    for (c, r) in radix.iter_mut().enumerate() {
        *r = (0..count).map(|i| flat[i * width + c]).max().map_or(1, |m| u128::from(m) + 1);
    }
    radix.iter().try_fold(1u128, |acc, &r| acc.checked_mul(r))?;
    Some(
        (0..count)
            .map(|i| {
                let k = flat[i * width..(i + 1) * width]
                    .iter()
                    .zip(&radix)
                    .fold(0u128, |acc, (&x, &r)| acc * r + u128::from(x));
                (k, i)
            })
            .collect(),
    )
}

fn packed_key(packed: &[(u128, usize)], index: usize) -> u128 {
    packed.iter().find(|p| p.1 == index).map(|p| p.0).expect("index present")
}

fn first_with_key(packed: &[(u128, usize)], key: u128) -> usize {
    let start = packed.partition_point(|p| p.0 < key);
    packed[start].1
}

pub(crate) fn vertex_witness(
    g: &PartitionedHypergraph,
    labeling: &PartLabeling,
    comps: &AxisComponents,
) -> Option<SeparabilityWitness> {
    first_vertex_collision(g, labeling, comps).map(|(v, w)| SeparabilityWitness::for_vertices(g, labeling, v, w))
}

pub(crate) fn edge_witness(
    g: &PartitionedHypergraph,
    labeling: &PartLabeling,
    comps: &AxisComponents,
) -> Option<SeparabilityWitness> {
    first_edge_collision(comps, g.edge_count()).map(|(e, f)| SeparabilityWitness::for_edges(g, labeling, e, f))
}

pub fn is_vertex_separable(g: &PartitionedHypergraph, labeling: &PartLabeling) -> Result<Verdict> {
    let comps = AxisComponents::build(g, labeling)?;
    Ok(match vertex_witness(g, labeling, &comps) {
        None => Verdict::Separable,
        Some(w) => Verdict::NotSeparable(w),
    })
}

pub fn is_edge_separable(g: &PartitionedHypergraph, labeling: &PartLabeling) -> Result<Verdict> {
    let comps = AxisComponents::build(g, labeling)?;
    Ok(match edge_witness(g, labeling, &comps) {
        None => Verdict::Separable,
        Some(w) => Verdict::NotSeparable(w),
    })
}

/// Path-search counterpart of [`vertex_separable`].
pub fn vertex_separable_by_paths(
    g: &PartitionedHypergraph,
    labeling: &PartLabeling,
    v: VertexRef,
    w: VertexRef,
) -> Result<Option<usize>> {
    check_same_part(g, v, w)?;
    check_labeling(g, labeling)?;
    Ok(labeling
        .fixed_axes(g.part_of(v))
        .into_iter()
        .find(|&a| shortest_avoiding_path(g, &[v], &[w], &labeling.cut_mask(a)).is_none()))
}

/// Path-search counterpart of [`edge_separable`].
pub fn edge_separable_by_paths(
    g: &PartitionedHypergraph,
    labeling: &PartLabeling,
    e: EdgeRef,
    f: EdgeRef,
) -> Result<Option<usize>> {
    if e == f {
        return Err(Error::Contract("edge pair must be distinct".into()));
    }
    check_labeling(g, labeling)?;
    Ok((0..labeling.d())
        .find(|&a| shortest_avoiding_path(g, g.edge(e), g.edge(f), &labeling.cut_mask(a)).is_none()))
}

/// All same-part pairs checked by path search. Quadratic; meant for small inputs.
pub fn is_vertex_separable_by_paths(g: &PartitionedHypergraph, labeling: &PartLabeling) -> Result<bool> {
    for part in 0..g.part_count() {
        let vs: Vec<VertexRef> = g.part_vertices(part).collect();
        for (i, &v) in vs.iter().enumerate() {
            for &w in &vs[i + 1..] {
                if vertex_separable_by_paths(g, labeling, v, w)?.is_none() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// All edge pairs checked by path search. Quadratic; meant for small inputs.
pub fn is_edge_separable_by_paths(g: &PartitionedHypergraph, labeling: &PartLabeling) -> Result<bool> {
    let m = g.edge_count();
    for e in 0..m {
        for f in e + 1..m {
            if edge_separable_by_paths(g, labeling, EdgeRef(e), EdgeRef(f))?.is_none() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

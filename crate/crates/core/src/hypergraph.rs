//! k-partite k-uniform hypergraphs with a prescribed vertex partition.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::labeling::PartLabeling;

/// Dense vertex index; vertices are numbered part by part in document order.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexRef(pub usize);

/// Index into the hyperedge list.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeRef(pub usize);

impl EdgeRef {
    /// Name used for hyperedges in output documents (`e0`, `e1`, ...).
    pub fn name(self) -> String {
        format!("e{}", self.0)
    }
}

/// The JSON instance document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphDoc {
    pub k: usize,
    pub parts: Vec<Vec<String>>,
    pub edges: Vec<Vec<String>>,
    #[serde(default)]
    pub labeling: Option<Vec<Vec<usize>>>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ParseOptions {
    /// Drop vertices contained in no hyperedge instead of rejecting them.
    pub prune_isolated: bool,
}

#[derive(Clone, Debug)]
pub struct Parsed {
    pub graph: PartitionedHypergraph,
    /// Names of vertices dropped by `prune_isolated`.
    pub pruned: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionedHypergraph {
    names: Vec<String>,
    part_of: Vec<usize>,
    part_start: Vec<usize>,
    // m * k entries; edge e occupies [e*k, (e+1)*k), position i in part i.
    edge_vertices: Vec<VertexRef>,
    inc_start: Vec<usize>,
    inc_edges: Vec<EdgeRef>,
    labeling: Option<PartLabeling>,
}

impl PartitionedHypergraph {
    /// Builds a hypergraph from part name lists and edges given as local
    /// indices (`edges[j][i]` indexes into `parts[i]`).
    pub fn new(
        parts: Vec<Vec<String>>,
        edges: Vec<Vec<usize>>,
        labeling: Option<PartLabeling>,
    ) -> Result<Self> {
        Self::assemble(parts, edges, labeling, false).map(|p| p.graph)
    }

    /// Builds a hypergraph from edges given as local index tuples, keeping only
    /// the vertices that occur. Vertices are named by part letter and local
    /// index (`a0`, `b3`, ...), ordered by local index.
    pub fn from_tuples(k: usize, tuples: &[Vec<usize>]) -> Result<Self> {
        if k == 0 {
            return Err(Error::NoParts);
        }
        let mut used: Vec<Vec<usize>> = vec![Vec::new(); k];
        for (j, t) in tuples.iter().enumerate() {
            if t.len() != k {
                return Err(Error::EdgeArity {
                    edge: j,
                    found: t.len(),
                    expected: k,
                });
            }
            for (i, &local) in t.iter().enumerate() {
                used[i].push(local);
            }
        }
        let mut remap: Vec<HashMap<usize, usize>> = Vec::with_capacity(k);
        let mut parts = Vec::with_capacity(k);
        for (i, locals) in used.iter_mut().enumerate() {
            locals.sort_unstable();
            locals.dedup();
            remap.push(locals.iter().enumerate().map(|(n, &l)| (l, n)).collect());
            parts.push(locals.iter().map(|l| format!("{}{}", part_letter(i), l)).collect());
        }
        let edges = tuples
            .iter()
            .map(|t| t.iter().enumerate().map(|(i, l)| remap[i][l]).collect())
            .collect();
        Self::new(parts, edges, None)
    }

    fn assemble(
        parts: Vec<Vec<String>>,
        edges: Vec<Vec<usize>>,
        labeling: Option<PartLabeling>,
        prune_isolated: bool,
    ) -> Result<Parsed> {
        let k = parts.len();
        if k == 0 {
            return Err(Error::NoParts);
        }
        if let Some(l) = &labeling {
            if l.part_count() != k {
                return Err(Error::InvalidLabeling(format!(
                    "labeling covers {} parts, hypergraph has {k}",
                    l.part_count()
                )));
            }
        }
        {
            let mut seen = std::collections::HashSet::new();
            for name in parts.iter().flatten() {
                if !seen.insert(name.as_str()) {
                    return Err(Error::DuplicateVertex(name.clone()));
                }
            }
        }
        for (j, e) in edges.iter().enumerate() {
            if e.len() != k {
                return Err(Error::EdgeArity {
                    edge: j,
                    found: e.len(),
                    expected: k,
                });
            }
            for (i, &local) in e.iter().enumerate() {
                if local >= parts[i].len() {
                    return Err(Error::Contract(format!(
                        "edge {j}: local index {local} out of range for part {}",
                        i + 1
                    )));
                }
            }
        }

        let mut used: Vec<Vec<bool>> = parts.iter().map(|p| vec![false; p.len()]).collect();
        for e in &edges {
            for (i, &local) in e.iter().enumerate() {
                used[i][local] = true;
            }
        }
        let mut pruned = Vec::new();
        for (i, part) in parts.iter().enumerate() {
            for (local, name) in part.iter().enumerate() {
                if !used[i][local] {
                    if !prune_isolated {
                        return Err(Error::IsolatedVertex(name.clone()));
                    }
                    pruned.push(name.clone());
                }
            }
        }

        let mut names = Vec::new();
        let mut part_of = Vec::new();
        let mut part_start = Vec::with_capacity(k + 1);
        let mut global: Vec<Vec<usize>> = Vec::with_capacity(k);
        for (i, part) in parts.into_iter().enumerate() {
            part_start.push(names.len());
            let mut ids = vec![usize::MAX; part.len()];
            for (local, name) in part.into_iter().enumerate() {
                if used[i][local] {
                    ids[local] = names.len();
                    names.push(name);
                    part_of.push(i);
                }
            }
            global.push(ids);
        }
        part_start.push(names.len());

        let m = edges.len();
        let mut edge_vertices = Vec::with_capacity(m * k);
        let mut seen_edges: HashMap<Vec<VertexRef>, usize> = HashMap::with_capacity(m);
        for (j, e) in edges.iter().enumerate() {
            let tuple: Vec<VertexRef> = e
                .iter()
                .enumerate()
                .map(|(i, &l)| VertexRef(global[i][l]))
                .collect();
            edge_vertices.extend_from_slice(&tuple);
            if let Some(&first) = seen_edges.get(&tuple) {
                return Err(Error::DuplicateEdge { first, second: j });
            }
            seen_edges.insert(tuple, j);
        }

        let n = names.len();
        let mut degree = vec![0usize; n];
        for v in &edge_vertices {
            degree[v.0] += 1;
        }
        let mut inc_start = Vec::with_capacity(n + 1);
        let mut acc = 0;
        for d in &degree {
            inc_start.push(acc);
            acc += d;
        }
        inc_start.push(acc);
        let mut fill = inc_start.clone();
        let mut inc_edges = vec![EdgeRef(0); acc];
        for (pos, v) in edge_vertices.iter().enumerate() {
            inc_edges[fill[v.0]] = EdgeRef(pos / k);
            fill[v.0] += 1;
        }

        Ok(Parsed {
            graph: PartitionedHypergraph {
                names,
                part_of,
                part_start,
                edge_vertices,
                inc_start,
                inc_edges,
                labeling,
            },
            pruned,
        })
    }

    pub fn part_count(&self) -> usize {
        self.part_start.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_vertices.len() / self.part_count()
    }

    pub fn labeling(&self) -> Option<&PartLabeling> {
        self.labeling.as_ref()
    }

    pub fn with_labeling(mut self, labeling: Option<PartLabeling>) -> Result<Self> {
        if let Some(l) = &labeling {
            if l.part_count() != self.part_count() {
                return Err(Error::InvalidLabeling(format!(
                    "labeling covers {} parts, hypergraph has {}",
                    l.part_count(),
                    self.part_count()
                )));
            }
        }
        self.labeling = labeling;
        Ok(self)
    }

    pub fn name(&self, v: VertexRef) -> &str {
        &self.names[v.0]
    }

    pub fn part_of(&self, v: VertexRef) -> usize {
        self.part_of[v.0]
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexRef> {
        (0..self.vertex_count()).map(VertexRef)
    }

    pub fn part_vertices(&self, part: usize) -> impl Iterator<Item = VertexRef> {
        (self.part_start[part]..self.part_start[part + 1]).map(VertexRef)
    }

    pub fn part_size(&self, part: usize) -> usize {
        self.part_start[part + 1] - self.part_start[part]
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeRef> {
        (0..self.edge_count()).map(EdgeRef)
    }

    /// The `k` vertices of `e`, position `i` from part `i`.
    pub fn edge(&self, e: EdgeRef) -> &[VertexRef] {
        let k = self.part_count();
        &self.edge_vertices[e.0 * k..(e.0 + 1) * k]
    }

    /// Hyperedges containing `v`, ascending.
    pub fn edges_of(&self, v: VertexRef) -> &[EdgeRef] {
        &self.inc_edges[self.inc_start[v.0]..self.inc_start[v.0 + 1]]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexRef> {
        self.names.iter().position(|n| n == name).map(VertexRef)
    }

    /// A name → vertex index table, for bulk lookups.
    pub fn name_index(&self) -> HashMap<&str, VertexRef> {
        self.names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), VertexRef(i)))
            .collect()
    }

    pub fn contains(&self, e: EdgeRef, v: VertexRef) -> bool {
        self.edge(e)[self.part_of(v)] == v
    }

    pub fn to_document(&self) -> HypergraphDoc {
        let k = self.part_count();
        HypergraphDoc {
            k,
            parts: (0..k)
                .map(|p| self.part_vertices(p).map(|v| self.names[v.0].clone()).collect())
                .collect(),
            edges: self
                .edges()
                .map(|e| self.edge(e).iter().map(|v| self.names[v.0].clone()).collect())
                .collect(),
            labeling: self.labeling.as_ref().map(PartLabeling::to_document),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_document()).expect("hypergraph documents serialize")
    }

    pub fn from_document(doc: HypergraphDoc, options: ParseOptions) -> Result<Parsed> {
        if doc.k == 0 {
            return Err(Error::NoParts);
        }
        if doc.parts.len() != doc.k {
            return Err(Error::PartCount {
                declared: doc.k,
                found: doc.parts.len(),
            });
        }
        let labeling = doc
            .labeling
            .as_deref()
            .map(PartLabeling::from_document)
            .transpose()?;

        let mut lookup: HashMap<&str, (usize, usize)> = HashMap::new();
        for (i, part) in doc.parts.iter().enumerate() {
            for (local, name) in part.iter().enumerate() {
                if lookup.insert(name.as_str(), (i, local)).is_some() {
                    return Err(Error::DuplicateVertex(name.clone()));
                }
            }
        }
        let mut edges = Vec::with_capacity(doc.edges.len());
        for (j, e) in doc.edges.iter().enumerate() {
            if e.len() != doc.k {
                return Err(Error::EdgeArity {
                    edge: j,
                    found: e.len(),
                    expected: doc.k,
                });
            }
            let mut resolved = Vec::with_capacity(doc.k);
            for name in e {
                let &(part, local) = lookup.get(name.as_str()).ok_or_else(|| Error::UnknownVertex {
                    edge: j,
                    name: name.clone(),
                })?;
                resolved.push((part, local));
            }
            let mut hits = vec![0usize; doc.k];
            for &(part, _) in &resolved {
                hits[part] += 1;
                if hits[part] > 1 {
                    return Err(Error::RepeatedPart {
                        edge: j,
                        part: part + 1,
                    });
                }
            }
            for (position, &(part, _)) in resolved.iter().enumerate() {
                if part != position {
                    return Err(Error::WrongPart {
                        edge: j,
                        name: e[position].clone(),
                        position: position + 1,
                    });
                }
            }
            edges.push(resolved.into_iter().map(|(_, l)| l).collect());
        }
        Self::assemble(doc.parts, edges, labeling, options.prune_isolated)
    }
}

fn part_letter(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("p{}_", i + 1)
    }
}

pub fn parse_hypergraph(text: &str) -> Result<PartitionedHypergraph> {
    parse_hypergraph_with(text, ParseOptions::default()).map(|p| p.graph)
}

pub fn parse_hypergraph_with(text: &str, options: ParseOptions) -> Result<Parsed> {
    let doc: HypergraphDoc = serde_json::from_str(text)?;
    PartitionedHypergraph::from_document(doc, options)
}

/// Hyperedges containing `v`.
pub fn edges_of(g: &PartitionedHypergraph, v: VertexRef) -> &[EdgeRef] {
    g.edges_of(v)
}

/// Breadth-first search over the co-occurrence relation restricted to vertices
/// outside `forbidden` parts. Returns a shortest path from any source to any
/// target, both endpoints included. Forbidden sources and targets are skipped.
pub fn shortest_avoiding_path(
    g: &PartitionedHypergraph,
    sources: &[VertexRef],
    targets: &[VertexRef],
    forbidden: &[bool],
) -> Option<Vec<VertexRef>> {
    let n = g.vertex_count();
    let mut is_target = vec![false; n];
    for t in targets {
        if !forbidden[g.part_of(*t)] {
            is_target[t.0] = true;
        }
    }
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in sources {
        if !forbidden[g.part_of(*s)] && parent[s.0] == usize::MAX {
            parent[s.0] = s.0;
            queue.push_back(s.0);
        }
    }
    while let Some(u) = queue.pop_front() {
        if is_target[u] {
            let mut path = vec![VertexRef(u)];
            let mut cur = u;
            while parent[cur] != cur {
                cur = parent[cur];
                path.push(VertexRef(cur));
            }
            path.reverse();
            return Some(path);
        }
        for &e in g.edges_of(VertexRef(u)) {
            for &w in g.edge(e) {
                if parent[w.0] == usize::MAX && !forbidden[g.part_of(w)] {
                    parent[w.0] = u;
                    queue.push_back(w.0);
                }
            }
        }
    }
    None
}

/// Whether an `s`–`t` path exists none of whose vertices lies in a part listed
/// in `forbidden`. Part indices are 0-based.
pub fn path_exists(
    g: &PartitionedHypergraph,
    s: VertexRef,
    t: VertexRef,
    forbidden: &[usize],
) -> Result<bool> {
    let mut mask = vec![false; g.part_count()];
    for &p in forbidden {
        if p >= mask.len() {
            return Err(Error::Contract(format!("part {p} out of range")));
        }
        mask[p] = true;
    }
    if mask[g.part_of(s)] || mask[g.part_of(t)] {
        return Err(Error::Contract(
            "path endpoints must not lie in a forbidden part".into(),
        ));
    }
    Ok(shortest_avoiding_path(g, &[s], &[t], &mask).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn two_edge() -> PartitionedHypergraph {
        parse_hypergraph(
            r#"{"k":3,"parts":[["a1","a2"],["b1"],["c1","c2"]],
                "edges":[["a1","b1","c1"],["a2","b1","c2"]],"labeling":null}"#,
        )
        .unwrap()
    }

    fn v(g: &PartitionedHypergraph, name: &str) -> VertexRef {
        g.vertex_by_name(name).unwrap()
    }

    #[test]
    fn minimal_instance() {
        let g = parse_hypergraph(r#"{"k":2,"parts":[["a"],["b"]],"edges":[["a","b"]]}"#).unwrap();
        assert_eq!((g.part_count(), g.vertex_count(), g.edge_count()), (2, 2, 1));
        assert_eq!(g.labeling(), None);
    }

    #[test]
    fn three_part_counts() {
        let g = two_edge();
        assert_eq!((g.part_count(), g.vertex_count(), g.edge_count()), (3, 5, 2));
        assert_eq!(g.part_size(0), 2);
        assert_eq!(g.edge(EdgeRef(1)), &[v(&g, "a2"), v(&g, "b1"), v(&g, "c2")]);
    }

    #[test]
    fn arity_violation_names_the_part() {
        let err = parse_hypergraph(
            r#"{"k":3,"parts":[["a","a2"],["b"],["c"]],"edges":[["a","a2","c"]]}"#,
        )
        .unwrap_err();
        assert!(matches!(err, Error::RepeatedPart { part: 1, .. }));
        assert!(err.to_string().contains("two vertices from part 1"));
    }

    #[test]
    fn parse_errors() {
        let cases = [
            (r#"{"k":2,"parts":[["a"],["a"]],"edges":[["a","a"]]}"#, "duplicate vertex"),
            (r#"{"k":2,"parts":[["a"],["b"]],"edges":[["a"]]}"#, "expected 2"),
            (r#"{"k":2,"parts":[["a"],["b"]],"edges":[["b","a"]]}"#, "not in part 1"),
            (r#"{"k":2,"parts":[["a"],["b"]],"edges":[["a","x"]]}"#, "unknown vertex"),
            (r#"{"k":2,"parts":[["a","z"],["b"]],"edges":[["a","b"]]}"#, "\"z\""),
            (
                r#"{"k":2,"parts":[["a"],["b"]],"edges":[["a","b"],["a","b"]]}"#,
                "identical",
            ),
            (r#"{"k":3,"parts":[["a"],["b"]],"edges":[]}"#, "lists 2 parts"),
            (r#"{"k":2,"parts":[["a"],["b"]]"#, "malformed"),
        ];
        for (text, needle) in cases {
            let err = parse_hypergraph(text).unwrap_err().to_string();
            assert!(err.contains(needle), "{text}: {err}");
        }
    }

    #[test]
    fn prune_isolated_drops_and_reports() {
        let parsed = parse_hypergraph_with(
            r#"{"k":2,"parts":[["a","z"],["b"]],"edges":[["a","b"]]}"#,
            ParseOptions {
                prune_isolated: true,
            },
        )
        .unwrap();
        assert_eq!(parsed.pruned, vec!["z".to_string()]);
        assert_eq!(parsed.graph.vertex_count(), 2);
    }

    #[test]
    fn incidence_lists() {
        let g = two_edge();
        assert_eq!(edges_of(&g, v(&g, "b1")), &[EdgeRef(0), EdgeRef(1)]);
        assert_eq!(edges_of(&g, v(&g, "a1")), &[EdgeRef(0)]);
        let single = parse_hypergraph(r#"{"k":2,"parts":[["a"],["b"]],"edges":[["a","b"]]}"#).unwrap();
        for x in single.vertices() {
            assert_eq!(edges_of(&single, x), &[EdgeRef(0)]);
        }
    }

    #[test]
    fn paths_with_cuts() {
        let single = parse_hypergraph(
            r#"{"k":3,"parts":[["a"],["b"],["c"]],"edges":[["a","b","c"]]}"#,
        )
        .unwrap();
        assert!(path_exists(&single, v(&single, "a"), v(&single, "c"), &[]).unwrap());

        let g = two_edge();
        let (a1, a2) = (v(&g, "a1"), v(&g, "a2"));
        assert!(!path_exists(&g, a1, a2, &[1]).unwrap());
        assert!(path_exists(&g, a1, a2, &[2]).unwrap());
        let path = shortest_avoiding_path(&g, &[a1], &[a2], &[false, false, true]).unwrap();
        assert_eq!(path, vec![a1, v(&g, "b1"), a2]);
        assert!(path_exists(&g, a1, a2, &[0]).is_err());
    }

    #[test]
    fn from_tuples_compacts_vertices() {
        let g = PartitionedHypergraph::from_tuples(2, &[vec![0, 5], vec![3, 5]]).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.to_document().parts, vec![vec!["a0", "a3"], vec!["b5"]]);
    }

    #[test]
    fn document_round_trip() {
        let g = two_edge();
        assert_eq!(parse_hypergraph(&g.to_json()).unwrap(), g);
    }
}

//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet};
use std::path::PathBuf;

use rand::seq::SliceRandom;
use rand::Rng;

use axicover::labeling::subsets;
use axicover::{PartLabeling, PartitionedHypergraph, SimpleGraph, VertexRef};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub fn read_fixture(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap()
}

pub fn random_points(rng: &mut impl Rng, d: usize, count: usize, range: i64) -> Vec<Vec<i64>> {
    assert!((count as f64) <= (range as f64).powi(d as i32), "{count} points do not fit");
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p: Vec<i64> = (0..d).map(|_| rng.random_range(0..range)).collect();
        if seen.insert(p.clone()) {
            out.push(p);
        }
    }
    out
}

/// Distinct edges drawn uniformly from `[0, part_size)^k`.
pub fn random_tuples(rng: &mut impl Rng, k: usize, part_size: usize, m: usize) -> Vec<Vec<usize>> {
    let cap = (part_size as f64).powi(k as i32);
    let m = m.min(cap as usize);
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(m);
    while out.len() < m {
        let t: Vec<usize> = (0..k).map(|_| rng.random_range(0..part_size)).collect();
        if seen.insert(t.clone()) {
            out.push(t);
        }
    }
    out
}

pub fn random_hypergraph(rng: &mut impl Rng, k: usize, part_size: usize, m: usize) -> PartitionedHypergraph {
    PartitionedHypergraph::from_tuples(k, &random_tuples(rng, k, part_size, m)).unwrap()
}

pub fn random_labeling(rng: &mut impl Rng, d: usize, ell: usize) -> PartLabeling {
    let mut sets = subsets(d, ell);
    sets.shuffle(rng);
    PartLabeling::new(d, ell, sets).unwrap()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, m: usize) -> SimpleGraph {
    let mut all: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    all.shuffle(rng);
    all.truncate(m);
    SimpleGraph::new(n, &all).unwrap()
}

/// Vertex adjacency outside the cut, explored by depth-first search.
pub fn connected_avoiding(g: &PartitionedHypergraph, from: &[VertexRef], to: &[VertexRef], cut: &[bool]) -> bool {
    let targets: HashSet<usize> = to.iter().filter(|v| !cut[g.part_of(**v)]).map(|v| v.0).collect();
    let mut seen = vec![false; g.vertex_count()];
    let mut stack: Vec<usize> = from.iter().filter(|v| !cut[g.part_of(**v)]).map(|v| v.0).collect();
    while let Some(u) = stack.pop() {
        if std::mem::replace(&mut seen[u], true) {
            continue;
        }
        if targets.contains(&u) {
            return true;
        }
        for e in g.edges() {
            let members = g.edge(e);
            if members.iter().any(|v| v.0 == u) {
                stack.extend(members.iter().filter(|v| !cut[g.part_of(**v)] && !seen[v.0]).map(|v| v.0));
            }
        }
    }
    false
}

pub fn naive_vertex_separable(g: &PartitionedHypergraph, l: &PartLabeling) -> bool {
    for part in 0..g.part_count() {
        let vs: Vec<VertexRef> = g.part_vertices(part).collect();
        for (i, &v) in vs.iter().enumerate() {
            for &w in &vs[i + 1..] {
                let separable = l
                    .fixed_axes(part)
                    .into_iter()
                    .any(|a| !connected_avoiding(g, &[v], &[w], &l.cut_mask(a)));
                if !separable {
                    return false;
                }
            }
        }
    }
    true
}

pub fn naive_edge_separable(g: &PartitionedHypergraph, l: &PartLabeling) -> bool {
    let edges: Vec<_> = g.edges().collect();
    for (i, &e) in edges.iter().enumerate() {
        for &f in &edges[i + 1..] {
            let separable = (0..l.d()).any(|a| !connected_avoiding(g, g.edge(e), g.edge(f), &l.cut_mask(a)));
            if !separable {
                return false;
            }
        }
    }
    true
}

/// Searches for points in `{1..m}^3` representing a 3-partite hypergraph
/// with part `i` drawn as lines parallel to axis `i`. Values on each axis are
/// introduced in increasing order, which loses no solutions since relabeling
/// one axis preserves every constraint.
pub fn brute_force_representable(g: &PartitionedHypergraph) -> bool {
    assert_eq!(g.part_count(), 3);
    let m = g.edge_count() as i64;
    let edges: Vec<[usize; 3]> = g.edges().map(|e| [g.edge(e)[0].0, g.edge(e)[1].0, g.edge(e)[2].0]).collect();
    struct State {
        line: Vec<Option<[i64; 2]>>,
        used: Vec<HashSet<[i64; 2]>>,
        points: HashSet<[i64; 3]>,
        top: [i64; 3],
    }
    fn fixed(p: [i64; 3], axis: usize) -> [i64; 2] {
        match axis {
            0 => [p[1], p[2]],
            1 => [p[0], p[2]],
            _ => [p[0], p[1]],
        }
    }
    fn rec(j: usize, edges: &[[usize; 3]], g: &PartitionedHypergraph, m: i64, s: &mut State) -> bool {
        if j == edges.len() {
            return true;
        }
        let e = edges[j];
        for x in 1..=(s.top[0] + 1).min(m) {
            for y in 1..=(s.top[1] + 1).min(m) {
                for z in 1..=(s.top[2] + 1).min(m) {
                    let p = [x, y, z];
                    if s.points.contains(&p) {
                        continue;
                    }
                    let mut ok = true;
                    for (axis, &v) in e.iter().enumerate() {
                        let want = fixed(p, axis);
                        match s.line[v] {
                            Some(have) => ok &= have == want,
                            None => ok &= !s.used[axis].contains(&want),
                        }
                    }
                    if !ok {
                        continue;
                    }
                    let mut fresh = Vec::new();
                    for (axis, &v) in e.iter().enumerate() {
                        if s.line[v].is_none() {
                            let want = fixed(p, axis);
                            s.line[v] = Some(want);
                            s.used[axis].insert(want);
                            fresh.push((axis, v, want));
                        }
                    }
                    let saved = s.top;
                    s.top = [s.top[0].max(x), s.top[1].max(y), s.top[2].max(z)];
                    s.points.insert(p);
                    if rec(j + 1, edges, g, m, s) {
                        return true;
                    }
                    s.points.remove(&p);
                    s.top = saved;
                    for (axis, v, want) in fresh {
                        s.line[v] = None;
                        s.used[axis].remove(&want);
                    }
                }
            }
        }
        false
    }
    let mut s = State {
        line: vec![None; g.vertex_count()],
        used: vec![HashSet::new(); 3],
        points: HashSet::new(),
        top: [0; 3],
    };
    rec(0, &edges, g, m, &mut s)
}

/// Canonical form of an edge set of `[3]^3` under independent relabeling of
/// the three parts.
pub fn canonical_triples(edges: &[[usize; 3]]) -> Vec<[usize; 3]> {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut best: Option<Vec<[usize; 3]>> = None;
    for p0 in &perms {
        for p1 in &perms {
            for p2 in &perms {
                let mut image: Vec<[usize; 3]> = edges.iter().map(|e| [p0[e[0]], p1[e[1]], p2[e[2]]]).collect();
                image.sort_unstable();
                if best.as_ref().is_none_or(|b| image < *b) {
                    best = Some(image);
                }
            }
        }
    }
    best.unwrap_or_default()
}

/// Every edge set of `[3]^3` with 1 to `max_edges` edges, one per class under
/// within-part relabeling.
pub fn small_tripartite_corpus(max_edges: usize) -> Vec<PartitionedHypergraph> {
    let triples: Vec<[usize; 3]> = (0..27).map(|i| [i / 9, (i / 3) % 3, i % 3]).collect();
    let mut seen: HashSet<Vec<[usize; 3]>> = HashSet::new();
    let mut out = Vec::new();
    let mut chosen: Vec<[usize; 3]> = Vec::new();
    fn rec(
        start: usize,
        max: usize,
        triples: &[[usize; 3]],
        chosen: &mut Vec<[usize; 3]>,
        seen: &mut HashSet<Vec<[usize; 3]>>,
        out: &mut Vec<PartitionedHypergraph>,
    ) {
        if !chosen.is_empty() && seen.insert(canonical_triples(chosen)) {
            let tuples: Vec<Vec<usize>> = chosen.iter().map(|t| t.to_vec()).collect();
            out.push(PartitionedHypergraph::from_tuples(3, &tuples).unwrap());
        }
        if chosen.len() == max {
            return;
        }
        for i in start..triples.len() {
            chosen.push(triples[i]);
            rec(i + 1, max, triples, chosen, seen, out);
            chosen.pop();
        }
    }
    rec(0, max_edges, &triples, &mut chosen, &mut seen, &mut out);
    out
}

/// Graphs on `n` vertices, one per isomorphism class.
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<SimpleGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let mut perms = vec![(0..n).collect::<Vec<usize>>()];
    for _ in 1..(1..=n).product::<usize>() {
        let mut p = perms.last().unwrap().clone();
        next_permutation(&mut p);
        perms.push(p);
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<(usize, usize)> = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
        let canon = perms
            .iter()
            .map(|p| {
                let mut img: Vec<(usize, usize)> =
                    edges.iter().map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b]))).collect();
                img.sort_unstable();
                img
            })
            .min()
            .unwrap();
        if seen.insert(canon) {
            out.push(SimpleGraph::new(n, &edges).unwrap());
        }
    }
    out
}

fn next_permutation(p: &mut [usize]) {
    let Some(i) = (0..p.len() - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return;
    };
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
}

/// Two points of `Z^3` lie on a common axis-parallel line.
pub fn collinear(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).filter(|(x, y)| x != y).count() == 1
}

pub fn pairwise_free(points: &[&[i64]]) -> bool {
    points
        .iter()
        .enumerate()
        .all(|(i, a)| points[i + 1..].iter().all(|b| !collinear(a, b)))
}

/// Maximum size subsets of `points` with no two collinear, by enumeration.
pub fn maximum_free_subsets(points: &[&[i64]]) -> (usize, Vec<u32>) {
    assert!(points.len() < 24);
    let mut best = 0;
    let mut sets = Vec::new();
    for mask in 0u32..(1 << points.len()) {
        let chosen: Vec<&[i64]> = (0..points.len()).filter(|i| mask >> i & 1 == 1).map(|i| points[i]).collect();
        if !pairwise_free(&chosen) {
            continue;
        }
        match chosen.len().cmp(&best) {
            std::cmp::Ordering::Greater => {
                best = chosen.len();
                sets = vec![mask];
            }
            std::cmp::Ordering::Equal => sets.push(mask),
            std::cmp::Ordering::Less => {}
        }
    }
    (best, sets)
}

/// Histogram of values, for comparing partitions.
pub fn counts<T: std::hash::Hash + Eq + Clone>(items: &[T]) -> HashMap<T, usize> {
    let mut out = HashMap::new();
    for i in items {
        *out.entry(i.clone()).or_insert(0) += 1;
    }
    out
}

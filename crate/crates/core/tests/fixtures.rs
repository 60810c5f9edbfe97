mod common;

use axicover::projection::{check_planar_structure, planar_hypergraph};
use axicover::{
    brute_force_max_independent_set, build_matching_instance, hypergraph_from_points, is_edge_separable,
    is_vertex_separable, matching_target, parse_hypergraph, recognize, verify_gadget_instance, LabelingMode,
    PartLabeling, PlanarInstance, Recognition, SimpleGraph,
};

use common::*;

#[test]
fn edge_separable_instance_without_vertex_separability() {
    let g = parse_hypergraph(&read_fixture("edge_not_vertex_separable.json")).unwrap();
    let l = PartLabeling::canonical(3, 1).unwrap();
    assert!(is_edge_separable(&g, &l).unwrap().is_separable());
    let verdict = is_vertex_separable(&g, &l).unwrap();
    let w = verdict.witness().expect("vertex separability should fail");
    w.check(&g, &l).unwrap();
    assert!(!naive_vertex_separable(&g, &l));
    assert!(!recognize(&g, 3, 1, LabelingMode::Enumerate).unwrap().is_represented());
    assert!(!brute_force_representable(&g));
}

#[test]
fn three_direction_planar_instance_is_not_representable() {
    let inst = PlanarInstance::from_json(&read_fixture("three_direction_inseparable.json")).unwrap();
    assert_eq!(check_planar_structure(&inst).unwrap(), 3);
    let g = planar_hypergraph(&inst).unwrap();
    assert_eq!((g.part_count(), g.edge_count()), (3, 4));
    let l = PartLabeling::canonical(3, 1).unwrap();
    assert!(!is_edge_separable(&g, &l).unwrap().is_separable());
    assert!(!is_vertex_separable(&g, &l).unwrap().is_separable());
    assert!(!recognize(&g, 3, 1, LabelingMode::Enumerate).unwrap().is_represented());
    assert!(!brute_force_representable(&g));
}

#[test]
fn quadrilateral_determines_six_slopes() {
    let inst = PlanarInstance::from_json(&read_fixture("quadrilateral_six_slopes.json")).unwrap();
    assert_eq!(check_planar_structure(&inst).unwrap(), 6);
    for (i, a) in inst.lines.iter().enumerate() {
        for b in &inst.lines[i + 1..] {
            assert_ne!(a.dir[0] * b.dir[1] - a.dir[1] * b.dir[0], 0, "classes {} and {}", a.class, b.class);
        }
    }
    let mut pairs = Vec::new();
    for line in &inst.lines {
        let on: Vec<usize> = (0..inst.points.len())
            .filter(|&i| {
                let p = inst.points[i];
                (p[0] - line.through[0]) * line.dir[1] - (p[1] - line.through[1]) * line.dir[0] == 0
            })
            .collect();
        assert_eq!(on.len(), 2, "class {}", line.class);
        pairs.push((on[0], on[1]));
    }
    pairs.sort();
    pairs.dedup();
    assert_eq!(pairs.len(), 6);
}

#[test]
fn two_edges_in_distinct_components_are_representable() {
    let g = parse_hypergraph(&read_fixture("two_edges.json")).unwrap();
    let Recognition::Represented(rep) = recognize(&g, 3, 1, LabelingMode::Fixed).unwrap() else {
        panic!("two_edges should be representable");
    };
    assert_ne!(rep.points()[0], rep.points()[1]);
}

#[test]
fn edges_sharing_two_vertices_yield_witness() {
    let g = parse_hypergraph(&read_fixture("shared_ends.json")).unwrap();
    let l = PartLabeling::canonical(3, 1).unwrap();
    let verdict = is_edge_separable(&g, &l).unwrap();
    verdict.witness().unwrap().check(&g, &l).unwrap();
    match recognize(&g, 3, 1, LabelingMode::Enumerate).unwrap() {
        Recognition::NotRepresentable { labeling, witness, .. } => witness.check(&g, &labeling).unwrap(),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn grid_corner_points_give_expected_incidences() {
    let doc: serde_json::Value = serde_json::from_str(&read_fixture("grid_corner.json")).unwrap();
    let points: Vec<Vec<i64>> = serde_json::from_value(doc["points"].clone()).unwrap();
    let fp = hypergraph_from_points(&points, 1).unwrap();
    assert_eq!(fp.graph.edge_count(), 3);
    assert_eq!(fp.graph.vertex_count(), 4);
}

#[test]
fn triangle_gadget_matches_formula() {
    let g = SimpleGraph::from_json(&read_fixture("triangle.json")).unwrap();
    let h = build_matching_instance(&g).unwrap();
    verify_gadget_instance(&h).unwrap();
    assert_eq!(h.points.len(), 21);
    assert_eq!(brute_force_max_independent_set(&g).unwrap(), 1);
    assert_eq!(matching_target(3, 3, 1), 10);
}

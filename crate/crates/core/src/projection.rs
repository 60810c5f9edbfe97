//! Random linear maps from line representations in `Z^d` to planar
//! point–line instances whose lines use exactly `d` directions.
//!
//! All arithmetic is exact (`i128` with overflow checks).

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::PartitionedHypergraph;
use crate::labeling::PartLabeling;
use crate::representation::Representation;

pub const MAX_ATTEMPTS: usize = 16;
const ENTRY_BOUND: i64 = 1 << 31;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PlanarLine {
    pub dir: [i128; 2],
    pub through: [i128; 2],
    /// 1-based direction class.
    pub class: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarInstance {
    pub points: Vec<[i128; 2]>,
    pub lines: Vec<PlanarLine>,
}

impl PlanarInstance {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("planar instance serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// A 2D line representation drawn as is: class 1 is horizontal, class 2 vertical.
    pub fn from_representation(rep: &Representation) -> Result<Self> {
        if rep.d() != 2 || rep.ell() != 1 {
            return Err(Error::Contract(format!(
                "need a (2,1) representation, got ({}, {})",
                rep.d(),
                rep.ell()
            )));
        }
        let points = rep.points().iter().map(|p| [p[0] as i128, p[1] as i128]).collect();
        let lines = rep
            .subspaces()
            .iter()
            .map(|s| {
                let axis = s.free()[0];
                let mut dir = [0i128; 2];
                dir[axis] = 1;
                let through = [0, 1].map(|a| s.coordinate(a).unwrap_or(0) as i128);
                PlanarLine {
                    dir,
                    through,
                    class: axis + 1,
                }
            })
            .collect();
        Ok(PlanarInstance { points, lines })
    }

    pub fn class_count(&self) -> usize {
        let mut classes: Vec<usize> = self.lines.iter().map(|l| l.class).collect();
        classes.sort_unstable();
        classes.dedup();
        classes.len()
    }
}

fn overflow() -> Error {
    Error::InvalidPoints("coordinates too large for exact arithmetic".into())
}

fn cross(a: [i128; 2], b: [i128; 2]) -> Option<i128> {
    a[0].checked_mul(b[1])?.checked_sub(a[1].checked_mul(b[0])?)
}

/// Identifies the line with direction `dir` through `p`: two points lie on a
/// common line of that direction iff their keys agree.
fn line_key(dir: [i128; 2], p: [i128; 2]) -> Option<i128> {
    cross(dir, p)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    /// `rows[r][c]`, two rows and `d` columns.
    pub rows: [Vec<i64>; 2],
}

impl Matrix {
    pub fn random(d: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut draw = || (0..d).map(|_| rng.random_range(1..ENTRY_BOUND)).collect::<Vec<i64>>();
        let r0 = draw();
        let r1 = draw();
        Matrix { rows: [r0, r1] }
    }

    pub fn column(&self, c: usize) -> [i128; 2] {
        [self.rows[0][c] as i128, self.rows[1][c] as i128]
    }

    pub fn apply(&self, p: &[i64]) -> Option<[i128; 2]> {
        let mut out = [0i128; 2];
        for (r, row) in self.rows.iter().enumerate() {
            for (&m, &x) in row.iter().zip(p) {
                out[r] = out[r].checked_add((m as i128).checked_mul(x as i128)?)?;
            }
        }
        Some(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    pub instance: PlanarInstance,
    pub matrix: Matrix,
    /// Seed that produced the accepted matrix.
    pub seed: u64,
    pub attempts: usize,
}

fn project_once(rep: &Representation, matrix: &Matrix) -> Result<PlanarInstance> {
    let points = rep
        .points()
        .iter()
        .map(|p| matrix.apply(p).ok_or_else(overflow))
        .collect::<Result<Vec<_>>>()?;
    let mut lines = Vec::with_capacity(rep.subspaces().len());
    for s in rep.subspaces() {
        let axis = s.free()[0];
        let anchor: Vec<i64> = (0..rep.d()).map(|a| s.coordinate(a).unwrap_or(0)).collect();
        lines.push(PlanarLine {
            dir: matrix.column(axis),
            through: matrix.apply(&anchor).ok_or_else(overflow)?,
            class: axis + 1,
        });
    }
    Ok(PlanarInstance { points, lines })
}

/// Projects with the matrix drawn from `seed`, moving to `seed + 1`, `seed + 2`, …
/// while the image fails verification.
pub fn project_to_plane(rep: &Representation, seed: u64) -> Result<Projection> {
    if rep.ell() != 1 {
        return Err(Error::Contract(format!("projection needs ell = 1, got {}", rep.ell())));
    }
    for attempt in 0..MAX_ATTEMPTS {
        let s = seed.wrapping_add(attempt as u64);
        let matrix = Matrix::random(rep.d(), s);
        let instance = project_once(rep, &matrix)?;
        if verify_planar_instance(rep, &instance).is_ok() {
            return Ok(Projection {
                instance,
                matrix,
                seed: s,
                attempts: attempt + 1,
            });
        }
    }
    Err(Error::RetriesExhausted(MAX_ATTEMPTS))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlanarViolation {
    PointCount { expected: usize, found: usize },
    PointsNotDistinct { first: usize, second: usize },
    ZeroDirection { line: usize },
    ClassNotParallel { class: usize },
    ClassCount { expected: usize, found: usize },
    DirectionsNotDistinct { first: usize, second: usize },
    EmptyLine { line: usize },
    DuplicateLine { first: usize, second: usize },
    Incidence(String),
    Overflow,
}

impl fmt::Display for PlanarViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanarViolation::PointCount { expected, found } => {
                write!(f, "point count mismatch: expected {expected}, found {found}")
            }
            PlanarViolation::PointsNotDistinct { first, second } => {
                write!(f, "points not distinct: {first} and {second}")
            }
            PlanarViolation::ZeroDirection { line } => write!(f, "line {line} has a zero direction"),
            PlanarViolation::ClassNotParallel { class } => {
                write!(f, "direction class {class} mixes non-parallel lines")
            }
            PlanarViolation::ClassCount { expected, found } => {
                write!(f, "expected {expected} direction classes, found {found}")
            }
            PlanarViolation::DirectionsNotDistinct { first, second } => {
                write!(f, "directions not distinct: classes {first} and {second} are parallel")
            }
            PlanarViolation::EmptyLine { line } => write!(f, "line {line} contains no point"),
            PlanarViolation::DuplicateLine { first, second } => {
                write!(f, "lines {first} and {second} coincide")
            }
            PlanarViolation::Incidence(why) => write!(f, "incidence mismatch: {why}"),
            PlanarViolation::Overflow => f.write_str("coordinates too large for exact arithmetic"),
        }
    }
}

impl std::error::Error for PlanarViolation {}

/// The points on each line, by exact arithmetic.
fn line_members(inst: &PlanarInstance) -> std::result::Result<Vec<Vec<usize>>, PlanarViolation> {
    // Lines of one class share a direction up to scaling, so group the points
    // once per distinct direction vector.
    let mut by_dir: HashMap<[i128; 2], HashMap<i128, Vec<usize>>> = HashMap::new();
    for l in &inst.lines {
        if by_dir.contains_key(&l.dir) {
            continue;
        }
        let mut keyed: HashMap<i128, Vec<usize>> = HashMap::new();
        for (i, &p) in inst.points.iter().enumerate() {
            let key = line_key(l.dir, p).ok_or(PlanarViolation::Overflow)?;
            keyed.entry(key).or_default().push(i);
        }
        by_dir.insert(l.dir, keyed);
    }
    inst.lines
        .iter()
        .map(|l| {
            let key = line_key(l.dir, l.through).ok_or(PlanarViolation::Overflow)?;
            Ok(by_dir[&l.dir].get(&key).cloned().unwrap_or_default())
        })
        .collect()
}

/// Checks that points are distinct, that every class is internally parallel,
/// that distinct classes are pairwise non-parallel, and that the lines are
/// distinct and non-empty. Returns the number of classes.
pub fn check_planar_structure(inst: &PlanarInstance) -> std::result::Result<usize, PlanarViolation> {
    let mut seen: HashMap<[i128; 2], usize> = HashMap::with_capacity(inst.points.len());
    for (i, &p) in inst.points.iter().enumerate() {
        if let Some(&first) = seen.get(&p) {
            return Err(PlanarViolation::PointsNotDistinct { first, second: i });
        }
        seen.insert(p, i);
    }
    let mut class_dir: BTreeMap<usize, [i128; 2]> = BTreeMap::new();
    for (i, l) in inst.lines.iter().enumerate() {
        if l.dir == [0, 0] {
            return Err(PlanarViolation::ZeroDirection { line: i });
        }
        match class_dir.get(&l.class) {
            None => {
                class_dir.insert(l.class, l.dir);
            }
            Some(&d) => {
                if cross(d, l.dir).ok_or(PlanarViolation::Overflow)? != 0 {
                    return Err(PlanarViolation::ClassNotParallel { class: l.class });
                }
            }
        }
    }
    let classes: Vec<(usize, [i128; 2])> = class_dir.into_iter().collect();
    for (i, &(ca, da)) in classes.iter().enumerate() {
        for &(cb, db) in &classes[i + 1..] {
            if cross(da, db).ok_or(PlanarViolation::Overflow)? == 0 {
                return Err(PlanarViolation::DirectionsNotDistinct { first: ca, second: cb });
            }
        }
    }
    let members = line_members(inst)?;
    let mut by_set: HashMap<(usize, &[usize]), usize> = HashMap::new();
    for (i, set) in members.iter().enumerate() {
        if set.is_empty() {
            return Err(PlanarViolation::EmptyLine { line: i });
        }
        if let Some(&first) = by_set.get(&(inst.lines[i].class, set.as_slice())) {
            return Err(PlanarViolation::DuplicateLine { first, second: i });
        }
        by_set.insert((inst.lines[i].class, set.as_slice()), i);
    }
    Ok(classes.len())
}

/// Checks `inst` against the representation it claims to picture: same
/// number of points, exactly `d` pairwise non-parallel classes, and point `i`
/// of `inst` lying on the lines that match the subspaces through point `i`
/// of `src`, class by class.
pub fn verify_planar_instance(src: &Representation, inst: &PlanarInstance) -> std::result::Result<(), PlanarViolation> {
    if inst.points.len() != src.points().len() {
        return Err(PlanarViolation::PointCount {
            expected: src.points().len(),
            found: inst.points.len(),
        });
    }
    let classes = check_planar_structure(inst)?;
    if classes != src.d() {
        return Err(PlanarViolation::ClassCount {
            expected: src.d(),
            found: classes,
        });
    }
    let mut source: Vec<(usize, Vec<usize>)> = Vec::with_capacity(src.subspaces().len());
    let mut by_key: HashMap<(usize, Vec<i64>), Vec<usize>> = HashMap::new();
    for (i, p) in src.points().iter().enumerate() {
        for axis in 0..src.d() {
            let mut key = p.clone();
            key[axis] = 0;
            by_key.entry((axis, key)).or_default().push(i);
        }
    }
    for s in src.subspaces() {
        let free = s.free();
        if free.len() != 1 {
            return Err(PlanarViolation::Incidence("source is not a line representation".into()));
        }
        let key: Vec<i64> = (0..src.d()).map(|a| s.coordinate(a).unwrap_or(0)).collect();
        let set = by_key.get(&(free[0], key)).cloned().unwrap_or_default();
        source.push((free[0] + 1, set));
    }
    let members = line_members(inst)?;
    let mut planar: Vec<(usize, Vec<usize>)> =
        inst.lines.iter().zip(members).map(|(l, set)| (l.class, set)).collect();
    source.sort();
    planar.sort();
    if source.len() != planar.len() {
        return Err(PlanarViolation::Incidence(format!(
            "{} source subspaces, {} planar lines",
            source.len(),
            planar.len()
        )));
    }
    if let Some((s, p)) = source.iter().zip(&planar).find(|(s, p)| s != p) {
        return Err(PlanarViolation::Incidence(format!(
            "class {} points {:?} against class {} points {:?}",
            s.0, s.1, p.0, p.1
        )));
    }
    Ok(())
}

/// The incidence hypergraph of a planar instance: one part per direction
/// class (ascending), one vertex per line, one edge per point. Every point
/// must lie on exactly one line of each class.
pub fn planar_hypergraph(inst: &PlanarInstance) -> Result<PartitionedHypergraph> {
    check_planar_structure(inst).map_err(|v| Error::InvalidPoints(v.to_string()))?;
    let mut classes: Vec<usize> = inst.lines.iter().map(|l| l.class).collect();
    classes.sort_unstable();
    classes.dedup();
    let part_index: HashMap<usize, usize> = classes.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let members = line_members(inst).map_err(|v| Error::InvalidPoints(v.to_string()))?;
    let k = classes.len();
    let mut parts: Vec<Vec<String>> = vec![Vec::new(); k];
    let mut edges: Vec<Vec<Option<usize>>> = vec![vec![None; k]; inst.points.len()];
    for (i, (line, set)) in inst.lines.iter().zip(&members).enumerate() {
        let part = part_index[&line.class];
        let local = parts[part].len();
        parts[part].push(format!("l{i}"));
        for &p in set {
            if edges[p][part].replace(local).is_some() {
                return Err(Error::InvalidPoints(format!("point {p} lies on two lines of class {}", line.class)));
            }
        }
    }
    let edges = edges
        .into_iter()
        .enumerate()
        .map(|(p, e)| {
            e.into_iter()
                .enumerate()
                .map(|(part, v)| {
                    v.ok_or_else(|| {
                        Error::InvalidPoints(format!("point {p} lies on no line of class {}", classes[part]))
                    })
                })
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    PartitionedHypergraph::new(parts, edges, None::<PartLabeling>)
}

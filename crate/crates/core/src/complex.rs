//! Finite simplicial complexes stored as the full face family.
//!
//! A complex always contains the empty face and is closed under inclusion.
//! Faces are kept in a canonical order (by dimension, then lexicographically
//! on the sorted vertex list) so that iteration, boundary matrices and ledger
//! output are deterministic.

use std::collections::BTreeSet;
use std::fmt;

use serde_json::{json, Value};

use crate::error::Error;
use crate::Result;

/// A ground-set element: either a plain positive integer, or `u_{i,j}` in
/// color class `i` with within-class index `j`.
///
/// Colored vertices compare by `(j, i)`: `u_{i,j} < u_{i',j'}` iff `j < j'`,
/// or `j = j'` and `i < i'`. This is the linear order underlying the revlex
/// order on rainbow sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Vertex {
    Plain(u32),
    Colored { color: u32, index: u32 },
}

impl Vertex {
    pub fn colored(color: u32, index: u32) -> Self {
        Vertex::Colored { color, index }
    }

    fn key(&self) -> (u8, u32, u32) {
        match *self {
            Vertex::Plain(id) => (0, id, 0),
            Vertex::Colored { color, index } => (1, index, color),
        }
    }
}

impl Ord for Vertex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Vertex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Vertex::Plain(id) => write!(f, "{id}"),
            Vertex::Colored { color, index } => write!(f, "{color}.{index}"),
        }
    }
}

/// A face: a sorted, duplicate-free vertex set. The empty face has
/// dimension -1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Face(Vec<Vertex>);

impl Face {
    pub fn empty() -> Self {
        Face(Vec::new())
    }

    /// Builds a face from an arbitrary vertex list, sorting it; duplicate
    /// vertices are a malformed-face error.
    pub fn new(mut vertices: Vec<Vertex>) -> Result<Self> {
        vertices.sort();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::MalformedFace(format!(
                "duplicate vertex in {:?}",
                vertices
            )));
        }
        Ok(Face(vertices))
    }

    /// Builds a face of plain vertices.
    pub fn plain(ids: &[u32]) -> Result<Self> {
        Face::new(ids.iter().map(|&v| Vertex::Plain(v)).collect())
    }

    pub(crate) fn from_sorted_unchecked(vertices: Vec<Vertex>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Face(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> i32 {
        self.0.len() as i32 - 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    pub fn is_disjoint_from(&self, other: &Face) -> bool {
        self.0.iter().all(|v| !other.contains(*v))
    }

    /// Set union; the inputs must be disjoint in the contexts where this is
    /// called, but overlapping unions are still well-formed.
    pub fn union(&self, other: &Face) -> Face {
        let mut v: Vec<Vertex> = self.0.iter().chain(other.0.iter()).copied().collect();
        v.sort();
        v.dedup();
        Face(v)
    }

    pub fn without(&self, v: Vertex) -> Face {
        Face(self.0.iter().copied().filter(|&u| u != v).collect())
    }

    pub fn with(&self, v: Vertex) -> Face {
        let mut w = self.0.clone();
        match w.binary_search(&v) {
            Ok(_) => {}
            Err(pos) => w.insert(pos, v),
        }
        Face(w)
    }

    pub fn intersect(&self, other: &Face) -> Face {
        Face(
            self.0
                .iter()
                .copied()
                .filter(|v| other.contains(*v))
                .collect(),
        )
    }

    /// All subsets, the face itself included.
    pub fn subsets(&self) -> Vec<Face> {
        let n = self.0.len();
        let mut out = Vec::with_capacity(1 << n);
        for mask in 0u32..(1 << n) {
            let verts = (0..n)
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| self.0[i])
                .collect();
            out.push(Face(verts));
        }
        out
    }

    /// The maximal proper subsets (vertex deletions), in deletion order.
    pub fn boundary_faces(&self) -> Vec<Face> {
        (0..self.0.len())
            .map(|i| {
                let mut v = self.0.clone();
                v.remove(i);
                Face(v)
            })
            .collect()
    }

    /// Canonical order used throughout: by cardinality, then lexicographically.
    pub fn canonical_cmp(&self, other: &Face) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then(self.0.cmp(&other.0))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// The f-vector `(f_{-1}, f_0, ..., f_{d-1})`. Entry `i` of the backing
/// vector is `f_{i-1}`, so the vector doubles as the coefficient list of the
/// f-polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector(Vec<u64>);

impl FVector {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.is_empty() || entries[0] != 1 {
            return Err(Error::Domain("f-vector must start with f_{-1} = 1".into()));
        }
        if *entries.last().unwrap() == 0 {
            return Err(Error::Domain("last f-vector entry must be positive".into()));
        }
        Ok(FVector(entries))
    }

    /// `f_k`, zero outside the stored range.
    pub fn f(&self, k: i32) -> u64 {
        let i = k + 1;
        if i < 0 || i as usize >= self.0.len() {
            0
        } else {
            self.0[i as usize]
        }
    }

    /// Dimension of the underlying complex; -1 for the trivial complex.
    pub fn dim(&self) -> i32 {
        self.0.len() as i32 - 2
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    /// Inverts the h-transform: `f_{k-1} = sum_i h_i * C(d-i, k-i)`.
    pub fn from_h(h: &HVector) -> Result<FVector> {
        let d = h.0.len() as i64 - 1;
        let mut f = Vec::with_capacity(h.0.len());
        for k in 0..=d {
            let mut acc: i64 = 0;
            for (i, &hi) in h.0.iter().enumerate() {
                let i = i as i64;
                if i <= k {
                    acc += hi * binomial_i64(d - i, k - i);
                }
            }
            if acc < 0 {
                return Err(Error::Domain(format!(
                    "h-vector does not come from a complex: f_{} = {}",
                    k - 1,
                    acc
                )));
            }
            f.push(acc as u64);
        }
        while f.len() > 1 && *f.last().unwrap() == 0 {
            f.pop();
        }
        FVector::new(f)
    }
}

/// The h-vector `(h_0, ..., h_d)` determined by
/// `sum h_i x^i = sum f_{i-1} x^i (1-x)^{d-i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HVector(Vec<i64>);

impl HVector {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// h-polynomial coefficients; same data, named for call sites that think
    /// of it as a polynomial.
    pub fn poly(&self) -> &[i64] {
        &self.0
    }
}

/// Exact h-vector of an f-vector via the defining polynomial identity.
pub fn h_vector(f: &FVector) -> HVector {
    let d = f.0.len() - 1; // complex dimension + 1
    let mut h = vec![0i64; d + 1];
    for (i, &fi) in f.0.iter().enumerate() {
        // add f_{i-1} x^i (1-x)^{d-i}
        for j in 0..=(d - i) {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            h[i + j] += sign * fi as i64 * binomial_i64((d - i) as i64, j as i64);
        }
    }
    HVector(h)
}

pub(crate) fn binomial_i64(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// A finite simplicial complex: the full face family, closed under inclusion,
/// always containing the empty face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complex {
    /// Faces in canonical order (size, then lexicographic).
    faces: Vec<Face>,
    /// `size_start[s]` is the index of the first face of cardinality `s`;
    /// one extra sentinel entry at the end.
    size_start: Vec<usize>,
}

impl Complex {
    /// The trivial complex `{∅}`.
    pub fn trivial() -> Self {
        Complex::from_face_set(std::iter::once(Face::empty()).collect())
    }

    /// The downward closure of the given faces. The inclusion-maximal inputs
    /// become the facets.
    pub fn generate(faces: Vec<Face>) -> Result<Self> {
        if faces.is_empty() {
            return Err(Error::VoidComplex);
        }
        let mut all: BTreeSet<Face> = BTreeSet::new();
        for f in &faces {
            if f.len() <= 16 {
                for s in f.subsets() {
                    all.insert(s);
                }
            } else {
                // Large generators: close dimension by dimension to avoid the
                // 2^|F| subset enumeration blowing up on repeated work.
                let mut frontier: BTreeSet<Face> = std::iter::once(f.clone()).collect();
                while let Some(g) = frontier.iter().next().cloned() {
                    frontier.remove(&g);
                    if all.insert(g.clone()) && !g.is_empty() {
                        for b in g.boundary_faces() {
                            if !all.contains(&b) {
                                frontier.insert(b);
                            }
                        }
                    }
                }
            }
        }
        all.insert(Face::empty());
        Ok(Complex::from_face_set(all))
    }

    /// Builds from a face family that is already closed under inclusion.
    pub(crate) fn from_face_set(set: BTreeSet<Face>) -> Self {
        let mut faces: Vec<Face> = set.into_iter().collect();
        faces.sort_by(|a, b| a.canonical_cmp(b));
        debug_assert!(!faces.is_empty() && faces[0].is_empty());
        let max_size = faces.last().map_or(0, Face::len);
        let mut size_start = vec![0usize; max_size + 2];
        let mut s = 0usize;
        for (i, f) in faces.iter().enumerate() {
            while s <= f.len() {
                size_start[s] = i;
                s += 1;
            }
        }
        while s <= max_size + 1 {
            size_start[s] = faces.len();
            s += 1;
        }
        size_start[max_size + 1] = faces.len();
        let c = Complex { faces, size_start };
        debug_assert!(c.check_closed());
        c
    }

    fn check_closed(&self) -> bool {
        self.faces.iter().all(|f| {
            f.is_empty()
                || f.boundary_faces()
                    .iter()
                    .all(|b| self.contains(b))
        })
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// All faces of cardinality `size` (dimension `size - 1`).
    pub fn faces_of_size(&self, size: usize) -> &[Face] {
        if size + 1 >= self.size_start.len() {
            return &[];
        }
        &self.faces[self.size_start[size]..self.size_start[size + 1]]
    }

    pub fn contains(&self, f: &Face) -> bool {
        self.faces_of_size(f.len()).binary_search(f).is_ok()
    }

    /// Position of a face within its dimension slice; used to index boundary
    /// matrices.
    pub fn face_index(&self, f: &Face) -> Option<usize> {
        self.faces_of_size(f.len()).binary_search(f).ok()
    }

    pub fn dim(&self) -> i32 {
        self.faces.last().map_or(-1, Face::dim)
    }

    /// Number of `k`-dimensional faces.
    pub fn f(&self, k: i32) -> u64 {
        if k < -1 {
            0
        } else {
            self.faces_of_size((k + 1) as usize).len() as u64
        }
    }

    pub fn f_vector(&self) -> FVector {
        let d = self.dim();
        let entries = (0..=(d + 1) as usize)
            .map(|s| self.faces_of_size(s).len() as u64)
            .collect();
        FVector::new(entries).expect("complex face counts form a valid f-vector")
    }

    /// Vertices of the complex, as faces' underlying elements.
    pub fn vertex_set(&self) -> Vec<Vertex> {
        self.faces_of_size(1).iter().map(|f| f.vertices()[0]).collect()
    }

    pub fn facets(&self) -> Vec<&Face> {
        // A face is a facet iff no face one dimension up contains it.
        self.faces
            .iter()
            .filter(|f| {
                !self
                    .faces_of_size(f.len() + 1)
                    .iter()
                    .any(|g| f.is_subset_of(g))
            })
            .collect()
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.facets().iter().all(|f| f.dim() == d)
    }

    fn require_face(&self, f: &Face) -> Result<()> {
        if self.contains(f) {
            Ok(())
        } else {
            Err(Error::NotAFace(f.to_string()))
        }
    }

    /// `Lk(F) = { G : G ∩ F = ∅, G ∪ F ∈ Δ }`.
    pub fn link(&self, f: &Face) -> Result<Complex> {
        self.require_face(f)?;
        let set = self
            .faces
            .iter()
            .filter(|g| g.is_disjoint_from(f) && self.contains(&g.union(f)))
            .cloned()
            .collect();
        Ok(Complex::from_face_set(set))
    }

    /// `Ast(F) = { G : G ∩ F = ∅ }`.
    pub fn antistar(&self, f: &Face) -> Result<Complex> {
        self.require_face(f)?;
        let set = self
            .faces
            .iter()
            .filter(|g| g.is_disjoint_from(f))
            .cloned()
            .collect();
        Ok(Complex::from_face_set(set))
    }

    /// The closure of the open star: `{ G : G ∪ F ∈ Δ }`.
    pub fn closed_star(&self, f: &Face) -> Result<Complex> {
        self.require_face(f)?;
        let set = self
            .faces
            .iter()
            .filter(|g| self.contains(&g.union(f)))
            .cloned()
            .collect();
        Ok(Complex::from_face_set(set))
    }

    /// The subcomplex induced by a vertex subset `W`: `{ F ∈ Δ : F ⊆ W }`.
    pub fn induced(&self, w: &Face) -> Complex {
        let set = self
            .faces
            .iter()
            .filter(|g| g.is_subset_of(w))
            .cloned()
            .collect();
        Complex::from_face_set(set)
    }

    /// Join of two complexes on disjoint vertex sets.
    pub fn join(&self, other: &Complex) -> Result<Complex> {
        let mine = self.vertex_set();
        let overlap: Vec<_> = other
            .vertex_set()
            .iter()
            .filter(|v| mine.contains(v))
            .copied()
            .collect();
        if !overlap.is_empty() {
            return Err(Error::VertexOverlap(format!("{:?}", overlap)));
        }
        let mut set = BTreeSet::new();
        for a in &self.faces {
            for b in &other.faces {
                set.insert(a.union(b));
            }
        }
        Ok(Complex::from_face_set(set))
    }

    /// Cone over the complex with a fresh conepoint.
    pub fn cone(&self, v: Vertex) -> Result<Complex> {
        let point = Complex::generate(vec![Face::new(vec![v])?])?;
        self.join(&point)
    }

    /// Removes, in order of decreasing dimension over `dims`, every facet
    /// whose dimension lies in `dims`. The result has no facet with dimension
    /// in `dims` and agrees with `self` in every dimension outside `dims`.
    pub fn facet_free_reduction(&self, dims: &BTreeSet<u32>) -> Complex {
        let mut current = self.clone();
        let mut order: Vec<u32> = dims.iter().copied().collect();
        order.sort_unstable_by(|a, b| b.cmp(a));
        for a in order {
            let doom: Vec<Face> = current
                .facets()
                .into_iter()
                .filter(|f| f.dim() == a as i32)
                .cloned()
                .collect();
            if doom.is_empty() {
                continue;
            }
            let set: BTreeSet<Face> = current
                .faces
                .iter()
                .filter(|f| !doom.contains(f))
                .cloned()
                .collect();
            current = Complex::from_face_set(set);
        }
        current
    }

    /// Serializes as `{"vertices": [...], "facets": [[...], ...]}`, with
    /// colored vertices encoded as `"i.j"` strings.
    pub fn to_json(&self) -> Value {
        let vert = |v: &Vertex| -> Value {
            match v {
                Vertex::Plain(id) => json!(id),
                Vertex::Colored { .. } => json!(v.to_string()),
            }
        };
        let vertices: Vec<Value> = self.vertex_set().iter().map(vert).collect();
        let facets: Vec<Value> = self
            .facets()
            .iter()
            .map(|f| Value::Array(f.vertices().iter().map(vert).collect()))
            .collect();
        json!({ "vertices": vertices, "facets": facets })
    }

    pub fn from_json(value: &Value) -> Result<Complex> {
        let parse_vertex = |v: &Value| -> Result<Vertex> {
            match v {
                Value::Number(n) => {
                    let id = n
                        .as_u64()
                        .ok_or_else(|| Error::Domain(format!("bad vertex id {n}")))?;
                    Ok(Vertex::Plain(id as u32))
                }
                Value::String(s) => {
                    let (i, j) = s
                        .split_once('.')
                        .ok_or_else(|| Error::Domain(format!("bad colored vertex {s:?}")))?;
                    let color: u32 = i
                        .parse()
                        .map_err(|_| Error::Domain(format!("bad color in {s:?}")))?;
                    let index: u32 = j
                        .parse()
                        .map_err(|_| Error::Domain(format!("bad index in {s:?}")))?;
                    Ok(Vertex::Colored { color, index })
                }
                other => Err(Error::Domain(format!("bad vertex {other}"))),
            }
        };
        let facets = value
            .get("facets")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Domain("missing \"facets\" array".into()))?;
        let mut faces = Vec::new();
        for f in facets {
            let arr = f
                .as_array()
                .ok_or_else(|| Error::Domain("facet must be an array".into()))?;
            let verts = arr.iter().map(parse_vertex).collect::<Result<Vec<_>>>()?;
            faces.push(Face::new(verts)?);
        }
        if faces.is_empty() {
            faces.push(Face::empty());
        }
        let complex = Complex::generate(faces)?;
        if let Some(vs) = value.get("vertices").and_then(Value::as_array) {
            let declared: BTreeSet<Vertex> = vs
                .iter()
                .map(parse_vertex)
                .collect::<Result<BTreeSet<_>>>()?;
            let actual: BTreeSet<Vertex> = complex.vertex_set().into_iter().collect();
            if declared != actual {
                return Err(Error::Domain(
                    "\"vertices\" does not match the union of the facets".into(),
                ));
            }
        }
        Ok(complex)
    }
}

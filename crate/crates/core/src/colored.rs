//! Colored, balanced, color-shifted and revlex complexes, and the
//! constructions built from them: revlex prefix complexes, the hat
//! subcomplex of a color-shifted complex, the combinatorial top Betti count,
//! and the coned union of revlex pieces used to transfer top homology from a
//! flag complex into a colorable one.
//!
//! The canonical ground partition assigns class `i` the positive integers
//! congruent to `i` mod `d`; under that encoding the class-respecting linear
//! order `u_{i,j} < u_{i',j'} iff (j,i) < (j',i')` is plain integer order.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::canon;
use crate::complex::{Complex, FVector, Face, Vertex};
use crate::error::Error;
use crate::graph::require_flag;
use crate::Result;

/// An ordered partition of a finite colored ground set: `d` classes with
/// `sizes[i-1]` elements `u_{i,1} < ... < u_{i,sizes[i-1]}` in class `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGround {
    pub d: u32,
    pub sizes: Vec<u32>,
}

impl ColoredGround {
    pub fn new(sizes: Vec<u32>) -> Self {
        ColoredGround {
            d: sizes.len() as u32,
            sizes,
        }
    }

    pub fn vertex(&self, color: u32, index: u32) -> Vertex {
        debug_assert!(color >= 1 && color <= self.d);
        debug_assert!(index >= 1 && index <= self.sizes[(color - 1) as usize]);
        Vertex::colored(color, index)
    }

    pub fn all_vertices(&self) -> Vec<Vertex> {
        let mut out = Vec::new();
        for (i, &s) in self.sizes.iter().enumerate() {
            for j in 1..=s {
                out.push(Vertex::colored(i as u32 + 1, j));
            }
        }
        out.sort();
        out
    }
}

/// A complex over colored vertices in which every face meets each color
/// class at most once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredComplex {
    colors: u32,
    complex: Complex,
}

impl ColoredComplex {
    pub fn new(colors: u32, complex: Complex) -> Result<Self> {
        if colors == 0 {
            return Err(Error::InvalidColoring("need at least one color class".into()));
        }
        for f in complex.faces() {
            let mut seen = vec![false; colors as usize];
            for v in f.vertices() {
                match *v {
                    Vertex::Colored { color, index } if (1..=colors).contains(&color) && index >= 1 => {
                        let slot = (color - 1) as usize;
                        if seen[slot] {
                            return Err(Error::InvalidColoring(format!(
                                "face {f} meets color class {color} twice"
                            )));
                        }
                        seen[slot] = true;
                    }
                    _ => {
                        return Err(Error::InvalidColoring(format!(
                            "vertex {v} is not a colored vertex in [1, {colors}]"
                        )));
                    }
                }
            }
        }
        Ok(ColoredComplex { colors, complex })
    }

    pub fn colors(&self) -> u32 {
        self.colors
    }

    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    pub fn into_complex(self) -> Complex {
        self.complex
    }

    /// Balanced: the dimension matches the number of color classes.
    pub fn is_balanced(&self) -> bool {
        self.complex.dim() == self.colors as i32 - 1
    }

    /// Largest within-class index used in each class.
    pub fn class_sizes(&self) -> Vec<u32> {
        let mut sizes = vec![0u32; self.colors as usize];
        for v in self.complex.vertex_set() {
            if let Vertex::Colored { color, index } = v {
                let slot = (color - 1) as usize;
                sizes[slot] = sizes[slot].max(index);
            }
        }
        sizes
    }

    /// True iff every face survives every within-class index decrease.
    pub fn is_color_shifted(&self) -> bool {
        self.color_shift_witness().is_none()
    }

    /// A face and the replacement that is missing, when not color-shifted.
    pub fn color_shift_witness(&self) -> Option<(Face, Face)> {
        for f in self.complex.faces() {
            for v in f.vertices() {
                let Vertex::Colored { color, index } = *v else { continue };
                for j in 1..index {
                    let g = f.without(*v).with(Vertex::colored(color, j));
                    if !self.complex.contains(&g) {
                        return Some((f.clone(), g));
                    }
                }
            }
        }
        None
    }

    pub fn require_color_shifted(&self) -> Result<()> {
        match self.color_shift_witness() {
            None => Ok(()),
            Some((f, g)) => Err(Error::NotColorShifted(format!(
                "face {f} present but index-decreased {g} missing"
            ))),
        }
    }

    /// Serializes as the plain complex JSON plus a `"colors"` field.
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = self.complex.to_json();
        v.as_object_mut()
            .expect("complex serializes to an object")
            .insert("colors".into(), serde_json::json!(self.colors));
        v
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let colors = value
            .get("colors")
            .and_then(serde_json::Value::as_u64)
            .ok_or_else(|| Error::Domain("missing \"colors\" field".into()))?;
        ColoredComplex::new(colors as u32, Complex::from_json(value)?)
    }
}

/// Reverse-lexicographic comparison of two same-size colored faces:
/// `A > B` iff `max(A - B) > max(B - A)` in the class-respecting order.
pub fn revlex_compare(a: &Face, b: &Face) -> Result<Ordering> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch(format!(
            "revlex compares equal-size sets, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    let max_a = a.vertices().iter().rev().find(|v| !b.contains(**v));
    let max_b = b.vertices().iter().rev().find(|v| !a.contains(**v));
    Ok(match (max_a, max_b) {
        (None, None) => Ordering::Equal,
        (Some(x), Some(y)) => x.cmp(y),
        // Same size with empty difference on one side only is impossible.
        _ => unreachable!("equal-size sets with asymmetric difference"),
    })
}

fn encoded_vertex(d: u32, id: u32) -> Vertex {
    Vertex::colored((id - 1) % d + 1, (id - 1) / d + 1)
}

/// The first `count` rainbow k-subsets of the canonical d-colored ground, in
/// increasing revlex order. The ground is grown on demand: the smallest m
/// with enough rainbow k-subsets among its first m elements is used.
pub fn rainbow_prefix(d: u32, k: u32, count: u64) -> Vec<Face> {
    assert!(d >= 1 && k >= 1);
    if count == 0 {
        return Vec::new();
    }
    let target = num_bigint::BigUint::from(count);
    let mut m = k as u64;
    while crate::turan::turan_coeff(m as i64, k as i64, d) < target {
        m += 1;
    }
    let mut all = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    collect_rainbow(d, k, m as u32, 1, 0, &mut current, &mut all);
    all.sort_by(|a, b| revlex_compare(a, b).expect("equal sizes by construction"));
    all.truncate(count as usize);
    debug_assert_eq!(all.len(), count as usize);
    all
}

fn collect_rainbow(
    d: u32,
    k: u32,
    m: u32,
    next: u32,
    used_colors: u64,
    current: &mut Vec<u32>,
    out: &mut Vec<Face>,
) {
    if current.len() == k as usize {
        let verts = current.iter().map(|&id| encoded_vertex(d, id)).collect();
        out.push(Face::new(verts).expect("distinct encoded ids"));
        return;
    }
    let remaining = (k as usize - current.len()) as u32;
    for id in next..=m {
        if m - id + 1 < remaining {
            break;
        }
        let color = (id - 1) % d;
        if (used_colors >> color) & 1 == 1 {
            continue;
        }
        current.push(id);
        collect_rainbow(d, k, m, id + 1, used_colors | (1 << color), current, out);
        current.pop();
    }
}

/// Verifies that for every cardinality the faces form an initial revlex
/// segment of the rainbow sets.
pub fn verify_revlex(cc: &ColoredComplex) -> Result<()> {
    let d = cc.colors();
    let c = cc.complex();
    for k in 1..=(c.dim() + 1) as u32 {
        let have: BTreeSet<&Face> = c.faces_of_size(k as usize).iter().collect();
        let want = rainbow_prefix(d, k, have.len() as u64);
        for f in &want {
            if !have.contains(f) {
                return Err(Error::Domain(format!(
                    "faces of size {k} are not a revlex prefix: {f} missing"
                )));
            }
        }
    }
    Ok(())
}

/// The smallest revlex d-colorable complex with `n_top` top faces of full
/// rainbow size: the downward closure of the first `n_top` rainbow d-sets.
pub fn revlex_complex_top(n_top: u64, d: u32) -> Result<ColoredComplex> {
    if n_top == 0 {
        return Err(Error::Domain("need at least one top face".into()));
    }
    let tops = rainbow_prefix(d, d, n_top);
    let complex = Complex::generate(tops)?;
    let cc = ColoredComplex::new(d, complex)?;
    verify_revlex(&cc)?;
    Ok(cc)
}

/// Both equivalent numeric colorability conditions on an f-vector: each face
/// count fits under the upper shadow of the previous one, equivalently each
/// lower shadow fits under the next count down. The two routes are always
/// evaluated together and must agree.
pub fn ffk_check(f: &FVector, r: u32) -> Result<bool> {
    let d = f.dim() + 1;
    if d as u32 > r {
        return Err(Error::Domain(format!(
            "f-vector of dimension {} cannot be {r}-colorable",
            d - 1
        )));
    }
    if f.entries().contains(&0) {
        return Err(Error::Domain("face counts must be positive".into()));
    }
    let mut by_shadow_down = true;
    let mut by_shadow_up = true;
    for k in 1..d {
        let fk = num_bigint::BigUint::from(f.f(k));
        let fkm1 = num_bigint::BigUint::from(f.f(k - 1));
        let down = canon::shadow_down(&fk, (k + 1) as u32, r)?;
        if fkm1 < down {
            by_shadow_down = false;
        }
        let up = canon::shadow_up(&fkm1, k as u32, r)?;
        if up < fk {
            by_shadow_up = false;
        }
    }
    assert_eq!(
        by_shadow_down, by_shadow_up,
        "the two colorability routes disagree on {:?} with r={r}",
        f.entries()
    );
    Ok(by_shadow_down)
}

/// The revlex r-colorable complex realizing a given f-vector: for each k its
/// (k-1)-faces are exactly the first `f_{k-1}` rainbow k-sets. Closure of the
/// union is verified explicitly rather than trusted.
pub fn revlex_complex_fvec(f: &FVector, d: u32) -> Result<ColoredComplex> {
    if !ffk_check(f, d)? {
        return Err(Error::FfkViolation(format!(
            "{:?} is not the f-vector of a {d}-colorable complex",
            f.entries()
        )));
    }
    let mut set: BTreeSet<Face> = BTreeSet::new();
    set.insert(Face::empty());
    for k in 1..=(f.dim() + 1) as u32 {
        for face in rainbow_prefix(d, k, f.f(k as i32 - 1)) {
            set.insert(face);
        }
    }
    for face in &set {
        for b in face.boundary_faces() {
            if !set.contains(&b) {
                return Err(Error::Domain(format!(
                    "revlex prefixes failed to close under inclusion: {face} lacks {b}"
                )));
            }
        }
    }
    let complex = Complex::from_face_set(set);
    if &complex.f_vector() != f {
        return Err(Error::Domain(
            "constructed complex does not realize the requested f-vector".into(),
        ));
    }
    let cc = ColoredComplex::new(d, complex)?;
    verify_revlex(&cc)?;
    Ok(cc)
}

/// Restriction of the top faces of a color-shifted balanced complex to the
/// vertices of within-class index at least two. The result is verified to be
/// a subcomplex, and its total face count must equal the number of top faces
/// (the faces biject with top faces by padding missing classes with
/// first-index vertices).
pub fn hat_complex(cc: &ColoredComplex) -> Result<Complex> {
    cc.require_color_shifted()?;
    if !cc.is_balanced() {
        return Err(Error::InvalidColoring(format!(
            "hat construction needs a balanced complex: dim {} with {} colors",
            cc.complex().dim(),
            cc.colors()
        )));
    }
    let d = cc.colors() as usize;
    let mut set: BTreeSet<Face> = BTreeSet::new();
    for f in cc.complex().faces_of_size(d) {
        let kept: Vec<Vertex> = f
            .vertices()
            .iter()
            .copied()
            .filter(|v| matches!(v, Vertex::Colored { index, .. } if *index >= 2))
            .collect();
        set.insert(Face::from_sorted_unchecked(kept));
    }
    for face in &set {
        if !cc.complex().contains(face) {
            return Err(Error::Domain(format!(
                "hat face {face} is not a face of the complex"
            )));
        }
        for b in face.boundary_faces() {
            if !set.contains(&b) {
                return Err(Error::Domain(format!(
                    "hat family is not closed under inclusion at {face}"
                )));
            }
        }
    }
    let hat = Complex::from_face_set(set);
    let total: u64 = hat.f_vector().entries().iter().sum();
    let tops = cc.complex().f(d as i32 - 1);
    if total != tops {
        return Err(Error::Domain(format!(
            "hat bijection count failed: {total} faces vs {tops} top faces"
        )));
    }
    Ok(hat)
}

/// Combinatorial top Betti number of a color-shifted d-colored
/// (d-1)-complex: the number of top faces avoiding every first-index vertex.
pub fn shifted_betti_top(cc: &ColoredComplex) -> Result<u64> {
    cc.require_color_shifted()?;
    if !cc.is_balanced() {
        return Err(Error::InvalidColoring(
            "top Betti count needs a balanced complex".into(),
        ));
    }
    let d = cc.colors() as usize;
    Ok(count_avoiding_first(cc.complex().faces_of_size(d)))
}

fn count_avoiding_first(faces: &[Face]) -> u64 {
    faces
        .iter()
        .filter(|f| {
            f.vertices()
                .iter()
                .all(|v| matches!(v, Vertex::Colored { index, .. } if *index >= 2))
        })
        .count() as u64
}

/// The Turán clique complex with its natural coloring: class i is the i-th
/// part.
pub fn turan_colored(n: usize, d: u32) -> ColoredComplex {
    let plain = crate::graph::turan_complex(n, d);
    let recolored = map_plain_to_classes(&plain, d);
    ColoredComplex::new(d, recolored).expect("parts give a proper coloring")
}

fn map_plain_to_classes(c: &Complex, d: u32) -> Complex {
    let set: BTreeSet<Face> = c
        .faces()
        .iter()
        .map(|f| {
            let verts: Vec<Vertex> = f
                .vertices()
                .iter()
                .map(|v| match v {
                    Vertex::Plain(id) => {
                        let zero = id - 1;
                        Vertex::colored(zero % d + 1, zero / d + 1)
                    }
                    other => *other,
                })
                .collect();
            Face::new(verts).expect("relabeling preserves distinctness")
        })
        .collect();
    Complex::from_face_set(set)
}

/// Output of the coned-union construction on a flag complex.
#[derive(Debug, Clone)]
pub struct SigmaBuild {
    pub sigma: ColoredComplex,
    /// Top-face counts of the links along the peeling order; entry 0 belongs
    /// to the chosen center vertex.
    pub a: Vec<u64>,
    pub center: Vertex,
    pub peeled: Vec<Vertex>,
    /// Combinatorial top Betti number of each revlex piece.
    pub piece_top_betti: Vec<u64>,
}

/// Builds the coned union of revlex pieces for a flag complex of dimension
/// d >= 1: peel the vertices outside the closed star of a vertex of maximal
/// top degree, record each link's top face count, realize each count as a
/// minimal revlex d-colorable complex, and cone each piece into a fresh
/// (d+1)-th color class. The result has the same top face count and at least
/// the top Betti number of the input.
pub fn build_sigma(c: &Complex) -> Result<SigmaBuild> {
    require_flag(c)?;
    let d = c.dim();
    if d < 1 {
        return Err(Error::Domain(format!(
            "coned-union construction needs dimension >= 1, got {d}"
        )));
    }
    let top_size = (d + 1) as usize;
    let verts = c.vertex_set();
    let top_degree = |v: Vertex| {
        c.faces_of_size(top_size)
            .iter()
            .filter(|f| f.contains(v))
            .count()
    };
    let best = verts
        .iter()
        .map(|&v| top_degree(v))
        .max()
        .expect("a complex of dimension >= 1 has vertices");
    // Ties break to the smallest vertex for reproducibility.
    let center = verts
        .iter()
        .copied()
        .find(|&v| top_degree(v) == best)
        .expect("some vertex attains the maximum");

    let center_face = Face::from_sorted_unchecked(vec![center]);
    let star = c.closed_star(&center_face)?;
    let star_verts: BTreeSet<Vertex> = star.vertex_set().into_iter().collect();
    let peeled: Vec<Vertex> = verts
        .iter()
        .copied()
        .filter(|v| !star_verts.contains(v))
        .collect();

    let mut a_rev: Vec<u64> = Vec::new();
    let mut current = c.clone();
    for v in peeled.iter().rev() {
        let vf = Face::from_sorted_unchecked(vec![*v]);
        a_rev.push(current.link(&vf)?.f(d - 1));
        current = current.antistar(&vf)?;
    }
    assert_eq!(
        current, star,
        "peeling a flag complex must terminate at the closed star"
    );
    let mut a = vec![c.link(&center_face)?.f(d - 1)];
    a.extend(a_rev.into_iter().rev());

    let d_colors = d as u32;
    let max_a = *a.iter().max().expect("a is non-empty");
    let prefix = rainbow_prefix(d_colors, d_colors, max_a);
    let mut faces: BTreeSet<Face> = BTreeSet::new();
    faces.insert(Face::empty());
    let mut piece_top_betti = Vec::with_capacity(a.len());
    for (i, &ai) in a.iter().enumerate() {
        let apex = Vertex::colored(d_colors + 1, i as u32 + 1);
        faces.insert(Face::from_sorted_unchecked(vec![apex]));
        for top in &prefix[..ai as usize] {
            for sub in top.with(apex).subsets() {
                faces.insert(sub);
            }
        }
        piece_top_betti.push(count_avoiding_first(&prefix[..ai as usize]));
    }
    let sigma = ColoredComplex::new(d_colors + 1, Complex::from_face_set(faces))?;
    Ok(SigmaBuild {
        sigma,
        a,
        center,
        peeled,
        piece_top_betti,
    })
}

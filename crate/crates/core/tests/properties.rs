//! Property tests for the structural invariants, plus a few cross-module
//! identities that want real homology on one side.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use proptest::prelude::*;

use flag_homology::canon::{canonical_rep, enumerate_reps};
use flag_homology::colored::{revlex_complex_fvec, revlex_complex_top, shifted_betti_top};
use flag_homology::complex::{h_vector, Complex, FVector, Face, Vertex};
use flag_homology::graph::{from_graph6, is_flag, to_graph6, turan_complex, Graph};
use flag_homology::homology::{betti_vector, boundary_matrix, PrimeField};

fn faces_from(sets: &[BTreeSet<u32>]) -> Vec<Face> {
    let mut faces: Vec<Face> = sets
        .iter()
        .map(|s| Face::plain(&s.iter().copied().collect::<Vec<_>>()).unwrap())
        .collect();
    if faces.is_empty() {
        faces.push(Face::empty());
    }
    faces
}

fn arb_complex(lo: u32, hi: u32) -> impl Strategy<Value = Complex> {
    prop::collection::vec(prop::collection::btree_set(lo..=hi, 0..=4), 1..=6)
        .prop_map(|sets| Complex::generate(faces_from(&sets)).unwrap())
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let bits = n * (n - 1) / 2;
            (Just(n), prop::bits::u64::between(0, bits.max(1)))
        })
        .prop_map(|(n, mask)| {
            let mut g = Graph::new(n);
            let mut pos = 0;
            for j in 1..n {
                for i in 0..j {
                    if (mask >> pos) & 1 == 1 {
                        g.add_edge(i, j);
                    }
                    pos += 1;
                }
            }
            g
        })
}

proptest! {
    #[test]
    fn generated_complexes_are_downward_closed(c in arb_complex(1, 8)) {
        for f in c.faces() {
            for b in f.boundary_faces() {
                prop_assert!(c.contains(&b));
            }
        }
        prop_assert!(c.contains(&Face::empty()));
    }

    #[test]
    fn h_transform_round_trips(c in arb_complex(1, 8)) {
        let f = c.f_vector();
        let h = h_vector(&f);
        prop_assert_eq!(FVector::from_h(&h).unwrap(), f);
    }

    #[test]
    fn join_h_polynomials_multiply(a in arb_complex(1, 6), b in arb_complex(11, 16)) {
        let j = a.join(&b).unwrap();
        let ha = h_vector(&a.f_vector());
        let hb = h_vector(&b.f_vector());
        let hj = h_vector(&j.f_vector());
        let mut product = vec![0i64; ha.entries().len() + hb.entries().len() - 1];
        for (i, x) in ha.entries().iter().enumerate() {
            for (k, y) in hb.entries().iter().enumerate() {
                product[i + k] += x * y;
            }
        }
        prop_assert_eq!(hj.entries(), &product[..]);
    }

    #[test]
    fn link_is_antistar_meet_closed_star(c in arb_complex(1, 7)) {
        for f in c.faces().to_vec() {
            if f.is_empty() {
                continue;
            }
            let lk = c.link(&f).unwrap();
            let ast = c.antistar(&f).unwrap();
            let st = c.closed_star(&f).unwrap();
            for g in c.faces() {
                let in_lk = lk.contains(g);
                prop_assert_eq!(in_lk, ast.contains(g) && st.contains(g));
            }
        }
    }

    #[test]
    fn facet_free_reduction_contract(c in arb_complex(1, 8), dims in prop::collection::btree_set(0u32..4, 0..3)) {
        let r = c.facet_free_reduction(&dims);
        for f in r.facets() {
            prop_assert!(!dims.contains(&(f.dim() as u32)));
        }
        for k in -1..=c.dim() {
            if k >= 0 && dims.contains(&(k as u32)) {
                continue;
            }
            prop_assert_eq!(r.f(k), c.f(k), "dimension {} changed", k);
        }
        // Removing facets strictly below the top dimension keeps the top
        // homology.
        if c.dim() >= 0 && !dims.contains(&(c.dim() as u32)) {
            let p = PrimeField::new(2).unwrap();
            prop_assert_eq!(
                betti_vector(&r, p).beta(c.dim()),
                betti_vector(&c, p).beta(c.dim())
            );
        }
    }

    #[test]
    fn graph6_round_trips(g in arb_graph(9)) {
        let s = to_graph6(&g);
        prop_assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn clique_complexes_are_flag_and_self_describing(g in arb_graph(7)) {
        let c = g.clique_complex();
        prop_assert!(is_flag(&c));
        // A flag complex is recovered face-for-face from its own graph.
        let (h, labels) = flag_homology::graph::underlying_graph(&c);
        let rebuilt: BTreeSet<Face> = h
            .clique_complex()
            .faces()
            .iter()
            .map(|f| {
                let verts: Vec<Vertex> = f
                    .vertices()
                    .iter()
                    .map(|v| match v {
                        Vertex::Plain(id) => labels[(*id - 1) as usize],
                        other => *other,
                    })
                    .collect();
                Face::new(verts).unwrap()
            })
            .collect();
        let original: BTreeSet<Face> = c.faces().iter().cloned().collect();
        prop_assert_eq!(rebuilt, original);
    }

    #[test]
    fn canonical_rep_round_trips_at_scale(n in 1u64..=1_000_000, k in 1u32..=7, extra in 0u32..=3) {
        let r = k + extra;
        let rep = canonical_rep(&BigUint::from(n), k, r).unwrap();
        prop_assert_eq!(rep.eval(), BigUint::from(n));
    }

    #[test]
    fn canonical_rep_unique_on_random_inputs(n in 1u64..=400, k in 1u32..=5, extra in 0u32..=2) {
        let r = k + extra;
        let all = enumerate_reps(&BigUint::from(n), k, r);
        prop_assert_eq!(all.len(), 1);
        let rep = canonical_rep(&BigUint::from(n), k, r).unwrap();
        prop_assert_eq!(&all[0][..], rep.indices());
    }

    #[test]
    fn flag_fvectors_realize_as_revlex_colorable(g in arb_graph(7)) {
        let c = g.clique_complex();
        let f = c.f_vector();
        let colors = (c.dim() + 1) as u32;
        let cc = revlex_complex_fvec(&f, colors).unwrap();
        prop_assert_eq!(&cc.complex().f_vector(), &f);
        prop_assert!(cc.is_color_shifted());
    }

    #[test]
    fn boundary_ranks_agree_across_elimination_orders(g in arb_graph(6), p in prop::sample::select(vec![2u32, 3, 5])) {
        let c = g.clique_complex();
        let field = PrimeField::new(p).unwrap();
        for k in 0..=(c.dim().max(0) as usize) {
            let m = boundary_matrix(&c, k, field);
            prop_assert_eq!(m.rank(), m.rank_transposed());
        }
    }

    #[test]
    fn boundary_composition_vanishes(g in arb_graph(6), p in prop::sample::select(vec![2u32, 3, 5])) {
        let c = g.clique_complex();
        let field = PrimeField::new(p).unwrap();
        for k in 1..=(c.dim().max(0) as usize) {
            let a = boundary_matrix(&c, k - 1, field);
            let b = boundary_matrix(&c, k, field);
            prop_assert!(a.mul(&b).is_zero());
        }
    }

    #[test]
    fn reduced_euler_poincare(g in arb_graph(7), p in prop::sample::select(vec![2u32, 3, 5])) {
        let c = g.clique_complex();
        let b = betti_vector(&c, PrimeField::new(p).unwrap());
        let mut alternating_betti = 0i64;
        let mut alternating_f = 0i64;
        for k in 0..=c.dim() {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            alternating_betti += sign * b.beta(k) as i64;
            alternating_f += sign * c.f(k) as i64;
        }
        prop_assert_eq!(alternating_betti, alternating_f - 1);
    }
}

#[test]
fn simplex_face_counts_are_binomial() {
    fn binomial(n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        (0..k.min(n - k)).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
    for k in 0..=6u32 {
        let verts: Vec<u32> = (1..=k + 1).collect();
        let c = Complex::generate(vec![Face::plain(&verts).unwrap()]).unwrap();
        let f = c.f_vector();
        for i in 0..=k as u64 + 1 {
            assert_eq!(f.f(i as i32 - 1), binomial(k as u64 + 1, i));
        }
    }
}

#[test]
fn join_of_two_point_complexes_is_balanced_turan() {
    // The d-fold join of two-point complexes is the Turán clique complex on
    // 2d vertices with d parts.
    for d in 1..=4u32 {
        let mut joined: Option<Complex> = None;
        for i in 0..d {
            let pair = Complex::generate(vec![
                Face::plain(&[2 * i + 1]).unwrap(),
                Face::plain(&[2 * i + 2]).unwrap(),
            ])
            .unwrap();
            joined = Some(match joined {
                None => pair,
                Some(j) => j.join(&pair).unwrap(),
            });
        }
        let joined = joined.unwrap();
        let reference = turan_complex(2 * d as usize, d);
        assert_eq!(joined.f_vector(), reference.f_vector());
        assert!(is_flag(&joined));
        let (g, _) = flag_homology::graph::underlying_graph(&joined);
        assert!(flag_homology::graph::is_turan_graph(&g, d));
    }
}

#[test]
fn same_top_faces_give_same_top_betti() {
    // Adding or removing lower-dimensional facets must not move the top
    // homology.
    let oct = turan_complex(6, 3);
    let mut facets: Vec<Face> = oct.facets().into_iter().cloned().collect();
    facets.push(Face::plain(&[1, 4]).unwrap()); // a diagonal edge facet
    let augmented = Complex::generate(facets).unwrap();
    assert_ne!(augmented.f(1), oct.f(1));
    for p in [2u32, 3, 5] {
        let field = PrimeField::new(p).unwrap();
        assert_eq!(
            betti_vector(&augmented, field).beta(2),
            betti_vector(&oct, field).beta(2)
        );
    }
    // And the facet-free reduction recovers the original counts.
    let reduced = augmented.facet_free_reduction(&BTreeSet::from([1]));
    assert_eq!(reduced, oct);
}

#[test]
fn pendant_edge_reduction_preserves_top_betti() {
    let oct = turan_complex(6, 3);
    let mut facets: Vec<Face> = oct.facets().into_iter().cloned().collect();
    facets.push(Face::plain(&[1, 9]).unwrap()); // pendant edge to a new vertex
    let c = Complex::generate(facets).unwrap();
    let r = c.facet_free_reduction(&BTreeSet::from([1]));
    let p = PrimeField::new(2).unwrap();
    assert_eq!(betti_vector(&r, p).beta(2), betti_vector(&c, p).beta(2));
}

#[test]
fn revlex_top_betti_matches_down_shift() {
    // The minimal revlex complex on N top faces realizes exactly the
    // down-shifted value of N's representation as its top Betti number.
    for d in 1..=4u32 {
        for n in 1u64..=40 {
            let cc = revlex_complex_top(n, d).unwrap();
            let rep = canonical_rep(&BigUint::from(n), d, d).unwrap();
            let expected = rep.shift_down();
            let combinatorial = shifted_betti_top(&cc).unwrap();
            assert_eq!(BigUint::from(combinatorial), expected, "n={n} d={d}");
            for p in [2u32, 3] {
                let beta = betti_vector(cc.complex(), PrimeField::new(p).unwrap())
                    .beta(d as i32 - 1);
                assert_eq!(BigUint::from(beta), expected, "n={n} d={d} p={p}");
            }
        }
    }
}

#[test]
fn low_dimensional_homology_of_pure_color_shifted_vanishes() {
    // Below the top dimension, pure color-shifted balanced complexes are
    // homologically trivial.
    for d in 2..=4u32 {
        for n in (2 * d as u64)..=(2 * d as u64 + 2) {
            let cc = revlex_complex_top(n, d).unwrap();
            if !cc.complex().is_pure() {
                continue;
            }
            let b = betti_vector(cc.complex(), PrimeField::new(2).unwrap());
            for k in 0..(d as i32 - 1) {
                assert_eq!(b.beta(k), 0, "n={n} d={d} k={k}");
            }
        }
    }
}

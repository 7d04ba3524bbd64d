//! One executable check per verified statement. Each check computes both
//! sides of its inequalities exactly and reports them as witness data.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::canon::{canonical_rep, CanonRep};
use crate::colored::{
    revlex_complex_fvec, revlex_complex_top, shifted_betti_top, ColoredComplex,
};
use crate::complex::{Complex, FVector, Face};
use crate::graph::{is_turan_graph, underlying_graph, zykov_check, Graph};
use crate::homology::{betti_vector, BettiVector, PrimeField};
use crate::report::{CheckReport, Verdict};
use crate::turan::turan_coeff;

/// Identifiers of the per-statement checks; the serialized names are the
/// ledger wire format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum CheckId {
    #[serde(rename = "ZYKOV")]
    Zykov,
    #[serde(rename = "THM_1_1")]
    BalancedTransfer,
    #[serde(rename = "THM_1_2")]
    TopBettiUpperBound,
    #[serde(rename = "THM_1_3")]
    FaceLowerBound,
    #[serde(rename = "COR_1_4")]
    TuranDomination,
    #[serde(rename = "THM_1_5")]
    FPolyLowerBound,
    #[serde(rename = "MESHULAM")]
    MeshulamBound,
    #[serde(rename = "LEM_4_1")]
    VertexSplitBound,
    #[serde(rename = "THM_4_2")]
    RevlexTopTransfer,
    #[serde(rename = "THM_3_5")]
    BalancedTopBound,
    #[serde(rename = "COR_5_2")]
    BalancedFaceLowerBound,
    #[serde(rename = "COR_5_4")]
    BalancedFPolyBound,
    #[serde(rename = "FFK_CONT")]
    ColorableRootBound,
    #[serde(rename = "CONJ_6_2")]
    ConjFaceBoundAllDims,
    #[serde(rename = "CONJ_6_3")]
    ConjTuranAllDims,
}

impl CheckId {
    pub const ALL: [CheckId; 15] = [
        CheckId::Zykov,
        CheckId::BalancedTransfer,
        CheckId::TopBettiUpperBound,
        CheckId::FaceLowerBound,
        CheckId::TuranDomination,
        CheckId::FPolyLowerBound,
        CheckId::MeshulamBound,
        CheckId::VertexSplitBound,
        CheckId::RevlexTopTransfer,
        CheckId::BalancedTopBound,
        CheckId::BalancedFaceLowerBound,
        CheckId::BalancedFPolyBound,
        CheckId::ColorableRootBound,
        CheckId::ConjFaceBoundAllDims,
        CheckId::ConjTuranAllDims,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::Zykov => "ZYKOV",
            CheckId::BalancedTransfer => "THM_1_1",
            CheckId::TopBettiUpperBound => "THM_1_2",
            CheckId::FaceLowerBound => "THM_1_3",
            CheckId::TuranDomination => "COR_1_4",
            CheckId::FPolyLowerBound => "THM_1_5",
            CheckId::MeshulamBound => "MESHULAM",
            CheckId::VertexSplitBound => "LEM_4_1",
            CheckId::RevlexTopTransfer => "THM_4_2",
            CheckId::BalancedTopBound => "THM_3_5",
            CheckId::BalancedFaceLowerBound => "COR_5_2",
            CheckId::BalancedFPolyBound => "COR_5_4",
            CheckId::ColorableRootBound => "FFK_CONT",
            CheckId::ConjFaceBoundAllDims => "CONJ_6_2",
            CheckId::ConjTuranAllDims => "CONJ_6_3",
        }
    }

    /// Checks that run on clique complexes of corpus graphs.
    pub fn runs_on_flag(self) -> bool {
        !matches!(
            self,
            CheckId::BalancedTopBound | CheckId::BalancedFaceLowerBound | CheckId::BalancedFPolyBound
        )
    }

    /// Checks that run on the randomized balanced corpus.
    pub fn runs_on_balanced(self) -> bool {
        matches!(
            self,
            CheckId::BalancedTopBound
                | CheckId::BalancedFaceLowerBound
                | CheckId::BalancedFPolyBound
                | CheckId::ColorableRootBound
        )
    }

    /// Conjecture scans emit certificates instead of failures.
    pub fn is_conjecture(self) -> bool {
        matches!(self, CheckId::ConjFaceBoundAllDims | CheckId::ConjTuranAllDims)
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown check {s:?}"))
    }
}

/// A corpus graph together with its clique complex.
#[derive(Debug, Clone)]
pub struct FlagInstance {
    pub graph: Graph,
    pub g6: String,
    pub complex: Complex,
    pub fvec: FVector,
}

impl FlagInstance {
    pub fn new(graph: Graph) -> Self {
        let g6 = crate::graph::to_graph6(&graph);
        let complex = graph.clique_complex();
        let fvec = complex.f_vector();
        FlagInstance {
            graph,
            g6,
            complex,
            fvec,
        }
    }
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn binom_u(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Bound rows `(i, lhs, rhs)` rendered for the witness field.
fn bound_rows(rows: &[(i64, BigUint, BigUint)]) -> Value {
    Value::Array(
        rows.iter()
            .map(|(i, lhs, rhs)| {
                json!({ "i": i, "lhs": lhs.to_string(), "rhs": rhs.to_string() })
            })
            .collect(),
    )
}

/// The top-Betti upper bound attached to the representation of a face count:
/// every term's index drops by its subscript and its choose parameter is
/// raised to the subscript.
fn top_betti_bound(rep: &CanonRep, d: u32) -> BigUint {
    rep.indices()
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let di = d - i as u32;
            let idx = num_bigint::BigInt::from(v.clone()) - num_bigint::BigInt::from(di);
            crate::turan::turan_coeff_big(&idx, di as i64, di)
        })
        .sum()
}

/// The face-count lower bound at index `i` attached to the representation of
/// a top Betti number: every term's index grows by its subscript.
fn face_lower_bound(rep: &CanonRep, i: i64) -> BigUint {
    rep.terms()
        .iter()
        .map(|(v, _, sub)| {
            let idx = num_bigint::BigInt::from(v.clone()) + num_bigint::BigInt::from(*sub);
            crate::turan::turan_coeff_big(&idx, i - (rep.r() - sub) as i64, *sub)
        })
        .sum()
}

/// Exact comparison `f >= C(d,i) * (1 + a^(1/d))^i` for all i, plus the
/// coefficientwise-equality flag (only attainable when a is a perfect d-th
/// power). No floating point: for irrational roots the comparison is decided
/// by refining a scaled integer-root interval until it separates; separation
/// is guaranteed because the bound is irrational then.
fn fpoly_bounds(fvec: &FVector, d: u32, a: u64) -> (bool, bool, Vec<(i64, BigUint, String)>) {
    let a_big = big(a);
    let root = a_big.nth_root(d);
    let exact = num_traits::pow::pow(root.clone(), d as usize) == a_big;
    let mut ok = true;
    let mut all_equal = exact;
    let mut rows = Vec::new();
    for i in 0..=d as i64 {
        let f = big(fvec.f(i as i32 - 1));
        let c = binom_u(d as u64, i as u64);
        if exact {
            let bound = &c * num_traits::pow::pow(&root + 1u32, i as usize);
            if f < bound {
                ok = false;
            }
            if f != bound {
                all_equal = false;
            }
            rows.push((i, f, bound.to_string()));
        } else {
            // Interval refinement around B * (1 + a^(1/d)).
            let mut shift = 64u32;
            let verdict = loop {
                let b = BigUint::one() << shift;
                let scaled_root = (&a_big << (shift as usize * d as usize)).nth_root(d);
                let lo = &b + &scaled_root;
                let hi = &lo + 1u32;
                let lhs = &f * num_traits::pow::pow(b.clone(), i as usize);
                let upper = &c * num_traits::pow::pow(hi, i as usize);
                let lower = &c * num_traits::pow::pow(lo, i as usize);
                if lhs >= upper {
                    break true;
                }
                if lhs < lower {
                    break false;
                }
                shift *= 2;
                assert!(
                    shift <= 4096,
                    "interval refinement failed to separate an irrational bound"
                );
            };
            if !verdict {
                ok = false;
            }
            rows.push((i, f, format!("C({d},{i})*(1+{a}^(1/{d}))^{i}")));
        }
    }
    (ok, all_equal, rows)
}

fn is_turan_instance(graph: &Graph, d: u32, n: usize) -> bool {
    graph.n() == n && is_turan_graph(graph, d)
}

// ---------------------------------------------------------------------------
// flag-corpus checks

struct FlagCtx<'a> {
    inst: &'a FlagInstance,
    betti: BettiVector,
}

impl FlagCtx<'_> {
    fn dim(&self) -> i32 {
        self.inst.complex.dim()
    }
}

fn check_zykov(ctx: &FlagCtx) -> (Verdict, Value) {
    match zykov_check(&ctx.inst.complex) {
        Ok(out) => (out.verdict, out.witness),
        Err(e) => (Verdict::Fail, json!({ "error": e.to_string() })),
    }
}

fn check_balanced_transfer(ctx: &FlagCtx, field: PrimeField) -> (Verdict, Value) {
    let d = ctx.dim();
    let colors = (d + 1) as u32;
    let gamma = match revlex_complex_fvec(&ctx.inst.fvec, colors) {
        Ok(g) => g,
        Err(e) => {
            return (
                Verdict::Fail,
                json!({ "error": format!("no colorable realization: {e}") }),
            )
        }
    };
    let beta_delta = ctx.betti.beta(d);
    let beta_gamma = betti_vector(gamma.complex(), field).beta(d);
    let formula = shifted_betti_top(&gamma).expect("revlex complexes are color-shifted");
    let same_fvec = gamma.complex().f_vector() == ctx.inst.fvec;
    let ok = same_fvec && beta_gamma >= beta_delta && formula == beta_gamma;
    (
        if ok { Verdict::Pass } else { Verdict::Fail },
        json!({
            "lhs": beta_gamma.to_string(),
            "rhs": beta_delta.to_string(),
            "same_f_vector": same_fvec,
            "combinatorial_top_betti": formula.to_string(),
        }),
    )
}

fn check_top_betti_upper_bound(ctx: &FlagCtx) -> (Verdict, Value) {
    let d = (ctx.dim() + 1) as u32;
    let beta = big(ctx.betti.beta(ctx.dim()));
    let mut rows = Vec::new();
    let mut ok = true;
    let mut equality = false;
    for k in 1..=d {
        let n = ctx.inst.fvec.f(k as i32 - 1);
        let rep = canonical_rep(&big(n), k, d).expect("face counts are positive");
        let bound = top_betti_bound(&rep, d);
        if beta > bound {
            ok = false;
        }
        if beta == bound {
            equality = true;
        }
        rows.push((k as i64, beta.clone(), bound));
    }
    let verdict = if !ok {
        Verdict::Fail
    } else if equality {
        Verdict::Equality
    } else {
        Verdict::Pass
    };
    (verdict, json!({ "bounds": bound_rows(&rows) }))
}

fn face_lower_bound_rows(
    fvec: &FVector,
    d: u32,
    a: u64,
) -> (bool, bool, Vec<(i64, BigUint, BigUint)>, usize) {
    let rep = canonical_rep(&big(a), d, d).expect("a >= 1");
    let s = rep.s();
    let mut ok = true;
    let mut rows = Vec::new();
    for i in 0..=d as i64 {
        let lhs = big(fvec.f(i as i32 - 1));
        let rhs = face_lower_bound(&rep, i);
        if lhs < rhs {
            ok = false;
        }
        rows.push((i, lhs, rhs));
    }
    // Rigidity: within i in [s+1, d], equality propagates upward.
    let mut rigidity_ok = true;
    let mut seen_equality = false;
    for (i, lhs, rhs) in &rows {
        if (*i as usize) < s + 1 {
            continue;
        }
        let eq = lhs == rhs;
        if seen_equality && !eq {
            rigidity_ok = false;
        }
        if eq {
            seen_equality = true;
        }
    }
    (ok, rigidity_ok, rows, s)
}

fn check_face_lower_bound(ctx: &FlagCtx) -> (Verdict, Value) {
    let d = (ctx.dim() + 1) as u32;
    let a = ctx.betti.beta(ctx.dim());
    if a == 0 {
        return (Verdict::Skipped, json!({ "reason": "top Betti number is zero" }));
    }
    let (ok, rigidity_ok, rows, s) = face_lower_bound_rows(&ctx.inst.fvec, d, a);
    let verdict = if ok && rigidity_ok { Verdict::Pass } else { Verdict::Fail };
    (
        verdict,
        json!({
            "a": a,
            "s": s,
            "bounds": bound_rows(&rows),
            "rigidity_ok": rigidity_ok,
        }),
    )
}

fn check_turan_domination(ctx: &FlagCtx) -> (Verdict, Value) {
    let d = (ctx.dim() + 1) as u32;
    let a = big(ctx.betti.beta(ctx.dim()));
    if a.is_zero() {
        return (Verdict::Skipped, json!({ "reason": "top Betti number is zero" }));
    }
    let mut ok = true;
    let mut swept = Vec::new();
    let mut n = d as i64;
    loop {
        let beta_t = turan_coeff(n - d as i64, d as i64, d);
        if beta_t > a {
            break;
        }
        let mut dominated = true;
        for i in 0..d as i64 {
            let lhs = big(ctx.inst.fvec.f(i as i32));
            let rhs = turan_coeff(n, i + 1, d);
            if lhs < rhs {
                dominated = false;
            }
        }
        if !dominated {
            ok = false;
        }
        let mut equivalences = None;
        if beta_t == a {
            let same_f0 = ctx.inst.fvec.f(0) == n as u64;
            let same_fvec = (0..=d as i64)
                .all(|k| big(ctx.inst.fvec.f(k as i32 - 1)) == turan_coeff(n, k, d));
            let iso = is_turan_instance(&ctx.inst.graph, d, n as usize);
            if !(same_f0 == same_fvec && same_fvec == iso) {
                ok = false;
            }
            equivalences = Some(json!({
                "same_f0": same_f0, "same_f_vector": same_fvec, "isomorphic": iso,
            }));
        }
        swept.push(json!({
            "n": n,
            "turan_top_betti": beta_t.to_string(),
            "dominated": dominated,
            "equivalences": equivalences,
        }));
        n += 1;
    }
    (
        if ok { Verdict::Pass } else { Verdict::Fail },
        json!({ "a": a.to_string(), "turan_sweep": swept }),
    )
}

fn check_fpoly_lower_bound(ctx: &FlagCtx) -> (Verdict, Value) {
    let d = (ctx.dim() + 1) as u32;
    let a = ctx.betti.beta(ctx.dim());
    let (ok, all_equal, rows) = fpoly_bounds(&ctx.inst.fvec, d, a);
    let root = big(a).nth_root(d);
    let root_exact = num_traits::pow::pow(root.clone(), d as usize) == big(a);
    let mut verdict = if ok { Verdict::Pass } else { Verdict::Fail };
    let mut iso = None;
    if root_exact {
        let m = root.to_u64_digits().first().copied().unwrap_or(0);
        let n_eq = (d as u64 * (m + 1)) as usize;
        let is_iso = is_turan_instance(&ctx.inst.graph, d, n_eq);
        iso = Some(is_iso);
        // Tightness is an iff when the root is an integer.
        if all_equal != is_iso {
            verdict = Verdict::Fail;
        } else if all_equal {
            verdict = Verdict::Equality;
        }
    }
    (
        verdict,
        json!({
            "a": a,
            "d": d,
            "integral_root": root_exact,
            "coefficientwise_equality": all_equal,
            "turan_isomorphic": iso,
            "bounds": Value::Array(
                rows.iter()
                    .map(|(i, lhs, rhs)| json!({ "i": i, "lhs": lhs.to_string(), "rhs": rhs }))
                    .collect()
            ),
        }),
    )
}

fn check_meshulam(ctx: &FlagCtx) -> (Verdict, Value) {
    let mut applicable = false;
    let mut ok = true;
    let mut detail = Vec::new();
    for k in 1..=(ctx.dim() + 1) as i64 {
        if ctx.betti.beta(k as i32 - 1) == 0 {
            continue;
        }
        applicable = true;
        let mut rows = Vec::new();
        for i in 0..=k {
            let lhs = big(ctx.inst.fvec.f(i as i32 - 1));
            let rhs = turan_coeff(2 * k, i, k as u32);
            debug_assert_eq!(rhs, binom_u(k as u64, i as u64) << i as u32);
            if lhs < rhs {
                ok = false;
            }
            rows.push((i, lhs, rhs));
        }
        detail.push(json!({ "k": k, "bounds": bound_rows(&rows) }));
    }
    if !applicable {
        return (Verdict::Skipped, json!({ "reason": "all reduced Betti numbers vanish" }));
    }
    (
        if ok { Verdict::Pass } else { Verdict::Fail },
        json!({ "per_k": detail }),
    )
}

fn check_vertex_split(ctx: &FlagCtx, field: PrimeField) -> (Verdict, Value) {
    let c = &ctx.inst.complex;
    let mut ok = true;
    let mut worst: Option<Value> = None;
    for v in c.vertex_set() {
        let vf = Face::from_sorted_unchecked(vec![v]);
        let ast = c.antistar(&vf).expect("vertex is a face");
        let lk = c.link(&vf).expect("vertex is a face");
        let b_ast = betti_vector(&ast, field);
        let b_lk = betti_vector(&lk, field);
        for k in 0..=ctx.dim() {
            let lhs = ctx.betti.beta(k);
            let rhs = b_ast.beta(k) + b_lk.beta(k - 1);
            if lhs > rhs {
                ok = false;
                worst = Some(json!({
                    "vertex": v.to_string(), "k": k, "lhs": lhs, "rhs": rhs,
                }));
            }
        }
    }
    (
        if ok { Verdict::Pass } else { Verdict::Fail },
        json!({ "violation": worst }),
    )
}

fn check_revlex_top_transfer(ctx: &FlagCtx, field: PrimeField) -> (Verdict, Value) {
    let d = ctx.dim();
    let top = ctx.inst.fvec.f(d);
    let gamma = match revlex_complex_top(top, (d + 1) as u32) {
        Ok(g) => g,
        Err(e) => return (Verdict::Fail, json!({ "error": e.to_string() })),
    };
    let beta_delta = ctx.betti.beta(d);
    let beta_gamma = betti_vector(gamma.complex(), field).beta(d);
    let formula = shifted_betti_top(&gamma).expect("revlex complexes are color-shifted");
    let mut ok = beta_gamma >= beta_delta && formula == beta_gamma;
    let mut sigma_witness = Value::Null;
    if d >= 1 {
        match crate::colored::build_sigma(&ctx.inst.complex) {
            Ok(out) => {
                let beta_sigma = betti_vector(out.sigma.complex(), field).beta(d);
                let additivity: u64 = out.piece_top_betti.iter().skip(1).sum();
                let same_top = out.sigma.complex().f(d) == top;
                let a0_dominates = out.a.iter().all(|&ai| ai <= out.a[0]);
                if !(same_top && a0_dominates && beta_sigma == additivity
                    && beta_sigma >= beta_delta
                    && beta_gamma >= beta_sigma)
                {
                    ok = false;
                }
                sigma_witness = json!({
                    "a": out.a,
                    "beta_sigma": beta_sigma,
                    "piece_additivity": additivity,
                    "same_top_count": same_top,
                    "a0_dominates": a0_dominates,
                });
            }
            Err(e) => {
                ok = false;
                sigma_witness = json!({ "error": e.to_string() });
            }
        }
    }
    (
        if ok { Verdict::Pass } else { Verdict::Fail },
        json!({
            "lhs": beta_gamma.to_string(),
            "rhs": beta_delta.to_string(),
            "combinatorial_top_betti": formula.to_string(),
            "coned_union": sigma_witness,
        }),
    )
}

fn check_colorable_root_bound(fvec: &FVector, r: u32) -> (Verdict, Value) {
    let mut ok = true;
    let mut rows = Vec::new();
    for k in 1..=r as i64 {
        let n = big(fvec.f(k as i32 - 1));
        for j in 1..=k {
            // f_{j-1}^k * C(r,k)^j >= C(r,j)^k * f_{k-1}^j
            let lhs = num_traits::pow::pow(big(fvec.f(j as i32 - 1)), k as usize)
                * num_traits::pow::pow(binom_u(r as u64, k as u64), j as usize);
            let rhs = num_traits::pow::pow(binom_u(r as u64, j as u64), k as usize)
                * num_traits::pow::pow(n.clone(), j as usize);
            if lhs < rhs {
                ok = false;
                rows.push(json!({
                    "k": k, "j": j, "lhs": lhs.to_string(), "rhs": rhs.to_string(),
                }));
            }
        }
    }
    (
        if ok { Verdict::Pass } else { Verdict::Fail },
        json!({ "r": r, "violations": rows }),
    )
}

fn check_conj_face_bound(ctx: &FlagCtx) -> (Verdict, Value) {
    let mut applicable = false;
    let mut violated = Vec::new();
    for k in 1..=(ctx.dim() + 1) as u32 {
        let a = ctx.betti.beta(k as i32 - 1);
        if a == 0 {
            continue;
        }
        applicable = true;
        let rep = canonical_rep(&big(a), k, k).expect("a >= 1");
        for i in 0..=k as i64 {
            let lhs = big(ctx.inst.fvec.f(i as i32 - 1));
            let rhs = face_lower_bound(&rep, i);
            if lhs < rhs {
                violated.push(json!({
                    "k": k, "i": i, "a": a, "lhs": lhs.to_string(), "rhs": rhs.to_string(),
                }));
            }
        }
    }
    if !applicable {
        return (Verdict::Skipped, json!({ "reason": "all reduced Betti numbers vanish" }));
    }
    if violated.is_empty() {
        (Verdict::Pass, json!({ "certificates": [] }))
    } else {
        (Verdict::Certificate, json!({ "certificates": violated }))
    }
}

fn check_conj_turan(ctx: &FlagCtx) -> (Verdict, Value) {
    let mut applicable = false;
    let mut violated = Vec::new();
    for k in 0..=ctx.dim() {
        let a = big(ctx.betti.beta(k));
        if a.is_zero() {
            continue;
        }
        applicable = true;
        let parts = (k + 1) as u32;
        let mut n = parts as i64;
        loop {
            let beta_t = turan_coeff(n - parts as i64, parts as i64, parts);
            if beta_t > a {
                break;
            }
            for i in 0..=k as i64 {
                let lhs = big(ctx.inst.fvec.f(i as i32));
                let rhs = turan_coeff(n, i + 1, parts);
                if lhs < rhs {
                    violated.push(json!({
                        "k": k, "n": n, "i": i,
                        "lhs": lhs.to_string(), "rhs": rhs.to_string(),
                    }));
                }
            }
            n += 1;
        }
    }
    if !applicable {
        return (Verdict::Skipped, json!({ "reason": "all reduced Betti numbers vanish" }));
    }
    if violated.is_empty() {
        (Verdict::Pass, json!({ "certificates": [] }))
    } else {
        (Verdict::Certificate, json!({ "certificates": violated }))
    }
}

/// Runs the selected checks on a clique-complex instance over one field.
pub fn flag_reports(
    inst: &FlagInstance,
    checks: &BTreeSet<CheckId>,
    field: PrimeField,
) -> Vec<CheckReport> {
    let ctx = FlagCtx {
        inst,
        betti: betti_vector(&inst.complex, field),
    };
    let mut out = Vec::new();
    for id in CheckId::ALL {
        if !checks.contains(&id) || !id.runs_on_flag() {
            continue;
        }
        let (verdict, witness) = match id {
            CheckId::Zykov => check_zykov(&ctx),
            CheckId::BalancedTransfer => check_balanced_transfer(&ctx, field),
            CheckId::TopBettiUpperBound => check_top_betti_upper_bound(&ctx),
            CheckId::FaceLowerBound => check_face_lower_bound(&ctx),
            CheckId::TuranDomination => check_turan_domination(&ctx),
            CheckId::FPolyLowerBound => check_fpoly_lower_bound(&ctx),
            CheckId::MeshulamBound => check_meshulam(&ctx),
            CheckId::VertexSplitBound => check_vertex_split(&ctx, field),
            CheckId::RevlexTopTransfer => check_revlex_top_transfer(&ctx, field),
            CheckId::ColorableRootBound => {
                check_colorable_root_bound(&ctx.inst.fvec, ctx.inst.graph.chromatic_number() as u32)
            }
            CheckId::ConjFaceBoundAllDims => check_conj_face_bound(&ctx),
            CheckId::ConjTuranAllDims => check_conj_turan(&ctx),
            _ => continue,
        };
        out.push(
            CheckReport::new(id.name(), inst.g6.clone())
                .with_p(field.p())
                .with_verdict(verdict)
                .with_witness(witness),
        );
    }
    out
}

/// Runs the selected checks on one balanced-corpus instance over one field.
pub fn balanced_reports(
    cc: &ColoredComplex,
    descriptor: &str,
    checks: &BTreeSet<CheckId>,
    field: PrimeField,
) -> Vec<CheckReport> {
    let d = cc.colors();
    let fvec = cc.complex().f_vector();
    let betti = betti_vector(cc.complex(), field);
    let beta_top = betti.beta(d as i32 - 1);
    let mut out = Vec::new();
    for id in CheckId::ALL {
        if !checks.contains(&id) || !id.runs_on_balanced() {
            continue;
        }
        let (verdict, witness) = match id {
            CheckId::BalancedTopBound => {
                let mut ok = true;
                let mut equality = false;
                let mut rows = Vec::new();
                for k in 1..=d {
                    let n = fvec.f(k as i32 - 1);
                    let rep = canonical_rep(&big(n), k, d).expect("face counts are positive");
                    let bound = top_betti_bound(&rep, d);
                    if big(beta_top) > bound {
                        ok = false;
                    }
                    if big(beta_top) == bound {
                        equality = true;
                    }
                    rows.push((k as i64, big(beta_top), bound));
                }
                let v = if !ok {
                    Verdict::Fail
                } else if equality {
                    Verdict::Equality
                } else {
                    Verdict::Pass
                };
                (v, json!({ "bounds": bound_rows(&rows) }))
            }
            CheckId::BalancedFaceLowerBound => {
                if beta_top == 0 {
                    (Verdict::Skipped, json!({ "reason": "top Betti number is zero" }))
                } else {
                    let (ok, rig, rows, s) = face_lower_bound_rows(&fvec, d, beta_top);
                    let v = if ok && rig { Verdict::Pass } else { Verdict::Fail };
                    (v, json!({ "a": beta_top, "s": s, "bounds": bound_rows(&rows), "rigidity_ok": rig }))
                }
            }
            CheckId::BalancedFPolyBound => {
                let (ok, all_equal, rows) = fpoly_bounds(&fvec, d, beta_top);
                let root = big(beta_top).nth_root(d);
                let root_exact = num_traits::pow::pow(root.clone(), d as usize) == big(beta_top);
                let mut verdict = if ok { Verdict::Pass } else { Verdict::Fail };
                let mut iso = None;
                if root_exact {
                    let m = root.to_u64_digits().first().copied().unwrap_or(0);
                    let n_eq = (d as u64 * (m + 1)) as usize;
                    let is_iso = crate::graph::is_flag(cc.complex()) && {
                        let (g, _) = underlying_graph(cc.complex());
                        is_turan_instance(&g, d, n_eq)
                    };
                    iso = Some(is_iso);
                    if all_equal != is_iso {
                        verdict = Verdict::Fail;
                    } else if all_equal {
                        verdict = Verdict::Equality;
                    }
                }
                (
                    verdict,
                    json!({
                        "a": beta_top,
                        "integral_root": root_exact,
                        "coefficientwise_equality": all_equal,
                        "turan_isomorphic": iso,
                        "bounds": Value::Array(rows.iter().map(|(i, lhs, rhs)| {
                            json!({ "i": i, "lhs": lhs.to_string(), "rhs": rhs })
                        }).collect()),
                    }),
                )
            }
            CheckId::ColorableRootBound => check_colorable_root_bound(&fvec, d),
            _ => continue,
        };
        out.push(
            CheckReport::new(id.name(), descriptor.to_string())
                .with_p(field.p())
                .with_verdict(verdict)
                .with_witness(witness),
        );
    }
    out
}

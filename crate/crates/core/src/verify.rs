//! Replays the acceptance checks on fixed fixtures, exhaustive small families
//! and seeded random instances, and collects a [`VerificationReport`].

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::complex::{counterexample_complex, SimplicialComplex, DEFAULT_SHELLING_FACET_LIMIT};
use crate::error::{Error, Result};
use crate::families;
use crate::graphs::{
    construct_g_ell, cover_ideal, cover_polarization_renaming, cover_symbolic_power,
    graphs_isomorphic, independence_complex, is_well_covered, vwc_decompose, vwc_expand,
    vwc_serre_depth_formula, Graph, VwcStructure,
};
use crate::hochster;
use crate::homology::{reduced_homology, reduced_homology_direct, Field};
use crate::monomials::{
    depth_monomial, polarize, serre_depth_monomial, serre_depth_monomial_direct, sr_complex,
    sr_ideal, symbolic_power,
};
use crate::symbolic::{
    classify_dim1, depth_sequence, h1_vanishes, h1_vanishes_criterion, serre_depth_sequence,
    symbolic_coh_profile, symbolic_depth, symbolic_serre_depth, Dim1Class, EnumLimits,
};
use crate::vertex_set::VertexSet;

/// Default seed for the random families.
pub const DEFAULT_SEED: u64 = 20_240_917;

const Q: Field = Field::Rationals;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedBudget,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub detail: String,
    pub elapsed_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    /// One line per check.
    pub fn render(&self) -> String {
        self.checks
            .iter()
            .map(|c| {
                let tag = match c.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::SkippedBudget => "SKIP",
                };
                format!(
                    "{tag} {:<28} {:>8} ms  {}\n",
                    c.name, c.elapsed_ms, c.detail
                )
            })
            .collect()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub limits: EnumLimits,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            limits: EnumLimits::default(),
            seed: DEFAULT_SEED,
        }
    }
}

/// Outcome of one check before timing: passed or not, plus a summary.
pub type Outcome = (bool, String);

type CheckFn = fn(&VerifyConfig) -> Result<Outcome>;

/// Every check by name, in report order.
pub const CHECKS: [(&str, CheckFn); 13] = [
    ("01-counterexample-d3", counterexample_d3),
    ("02-ce2-sequence", ce2_sequence),
    ("03-dim1-classification", dim1_classification),
    ("04-duality-identity", duality_identity),
    ("05-skeleton-formulas", skeleton_formulas),
    ("06-oracle-pair", oracle_pair),
    ("07-h1-criterion", h1_criterion),
    ("08-inflation-shift", inflation_shift),
    ("09-polarization-shift", polarization_shift),
    ("10-vwc-formula", vwc_formula),
    ("11-non-increasing", non_increasing),
    ("12-cover-polarization", cover_polarization),
    ("13-homology-sanity", homology_sanity),
];

/// Runs one named check; a budget overrun is reported, not failed.
pub fn run_check(name: &str, cfg: &VerifyConfig) -> Result<Check> {
    let (_, f) = CHECKS
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| Error::Range(format!("unknown check {name:?}")))?;
    let start = Instant::now();
    let (status, detail) = match f(cfg) {
        Ok((true, d)) => (Status::Pass, d),
        Ok((false, d)) => (Status::Fail, d),
        Err(e @ Error::Budget { .. }) => (Status::SkippedBudget, e.to_string()),
        Err(e) => (Status::Fail, format!("error: {e}")),
    };
    Ok(Check {
        name: name.to_string(),
        status,
        detail,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

pub fn verify_all(cfg: &VerifyConfig) -> VerificationReport {
    let checks = CHECKS
        .iter()
        .map(|(name, _)| run_check(name, cfg).expect("name comes from the table"))
        .collect();
    VerificationReport { checks }
}

/// Collects failures, keeping the first few for the report.
struct Tally {
    cases: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn finish(self, label: &str) -> Outcome {
        if self.failures.is_empty() {
            (true, format!("{} {label}", self.cases))
        } else {
            let shown: Vec<&str> = self.failures.iter().take(3).map(String::as_str).collect();
            (
                false,
                format!(
                    "{} of {} {label} failed; {}",
                    self.failures.len(),
                    self.cases,
                    shown.join("; ")
                ),
            )
        }
    }
}

fn counterexample_d3(cfg: &VerifyConfig) -> Result<Outcome> {
    let cx = counterexample_complex(3)?;
    let order = match cx.is_shellable(DEFAULT_SHELLING_FACET_LIMIT)? {
        crate::complex::ShellingOutcome::Shellable(order) => order,
        other => return Ok((false, format!("no shelling found: {other:?}"))),
    };
    let shelled = cx.verify_shelling(&order)?;
    let depth = hochster::depth(&cx, Q)?;
    let dim = cx.krull_dim().unwrap_or(0);
    let d: Vec<usize> = [2, 4, 5]
        .iter()
        .map(|&l| symbolic_depth(&cx, l, Q, cfg.limits))
        .collect::<Result<_>>()?;
    let s4 = symbolic_serre_depth(&cx, 4, 2, Q, cfg.limits)?;
    let s5 = symbolic_serre_depth(&cx, 5, 2, Q, cfg.limits)?;
    let ok = cx.is_pure()
        && shelled
        && depth == 3
        && dim == 3
        && d[0] == 3
        && d[1] == 1
        && d[2] >= 2
        && s4 == 1
        && s5 >= 2;
    Ok((
        ok,
        format!(
            "{} facets, shelled {shelled}, depth {depth}/dim {dim}, depth at l=2,4,5: {d:?}, S2 at l=4,5: {s4},{s5}",
            cx.facets().len()
        ),
    ))
}

fn ce2_sequence(cfg: &VerifyConfig) -> Result<Outcome> {
    let cx = families::ce2();
    let depth = depth_sequence(&cx, 8, Q, cfg.limits)?;
    let s2 = serre_depth_sequence(&cx, 8, 2, Q, cfg.limits)?;
    let expected = vec![2, 2, 2, 2, 2, 2, 1, 2];
    let s2_ok = s2
        .iter()
        .enumerate()
        .all(|(i, &v)| if i == 6 { v == 1 } else { v >= 2 });
    Ok((
        depth == expected && s2_ok,
        format!("depth {depth:?} (expected {expected:?}), S2 {s2:?}"),
    ))
}

fn dim1_classification(cfg: &VerifyConfig) -> Result<Outcome> {
    let cases = [
        (families::c4(), Dim1Class::Matroid, vec![2, 2, 2, 2]),
        (
            families::triangle_with_pendant(),
            Dim1Class::DiamAtMost2NotMatroid,
            vec![2, 2, 1, 1],
        ),
        (
            families::p4(),
            Dim1Class::FiniteDiamAtLeast3,
            vec![2, 1, 1, 1],
        ),
        (
            families::two_k2(),
            Dim1Class::Disconnected,
            vec![1, 1, 1, 1],
        ),
    ];
    let mut t = Tally::new();
    for (cx, class, expected) in cases {
        let got = classify_dim1(&cx)?;
        let depth = depth_sequence(&cx, 4, Q, cfg.limits)?;
        let s2 = serre_depth_sequence(&cx, 4, 2, Q, cfg.limits)?;
        t.check(
            got == class
                && depth == expected
                && s2 == expected
                && class.predicted_prefix(4) == expected,
            || format!("{cx}: class {got:?}, depth {depth:?}, S2 {s2:?}"),
        );
    }
    Ok(t.finish("fixtures"))
}

/// Pure complexes on `n ≤ 6` vertices with at most 12 facets, up to isomorphism.
fn small_pure_family() -> Vec<SimplicialComplex> {
    (1..=6)
        .flat_map(|n| families::pure_complexes_up_to_iso(n, 12))
        .collect()
}

fn duality_identity(_: &VerifyConfig) -> Result<Outcome> {
    let mut t = Tally::new();
    for cx in small_pure_family() {
        let dual = hochster::betti_table(&cx.alexander_dual(), Q)?;
        for r in [2, 3] {
            let lhs = dual.max_strand_upto(r).map_or(-1, |j| j as i64);
            let s = hochster::serre_depth(&cx, r, Q)?;
            let rhs = cx.n() as i64 - s as i64 - 1;
            t.check(lhs == rhs, || format!("{cx} r={r}: {lhs} vs {rhs}"));
        }
    }
    Ok(t.finish("complex/r pairs"))
}

fn skeleton_formulas(_: &VerifyConfig) -> Result<Outcome> {
    let mut t = Tally::new();
    for cx in small_pure_family() {
        let d = cx.krull_dim().unwrap_or(0);
        let full = hochster::local_coh_dims(&cx, Q)?;
        let depth = hochster::depth(&cx, Q)?;
        let smith = hochster::depth_via_skeleton(&cx, Q)?;
        t.check(depth == smith && Some(depth) == full.depth(), || {
            format!(
                "{cx}: depth {depth}, skeleton {smith}, profile {:?}",
                full.depth()
            )
        });
        for r in [2, 3].into_iter().filter(|&r| r <= d) {
            let s = hochster::serre_depth(&cx, r, Q)?;
            let sk = hochster::serre_depth_via_skeleton(&cx, r, Q)?;
            let links = hochster::serre_depth_via_links(&cx, r, Q)?;
            t.check(s == sk && s == links, || {
                format!("{cx} r={r}: {s} / skeleton {sk} / links {links}")
            });
        }
    }
    Ok(t.finish("identities"))
}

fn oracle_pair(cfg: &VerifyConfig) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 6);
    let mut t = Tally::new();
    for _ in 0..50 {
        let n = rng.gen_range(3..=6);
        let cx = families::random_covering_pure_complex(&mut rng, n, 2..=(n - 1).min(4), 10);
        for ell in [2, 3] {
            let a = symbolic_depth(&cx, ell, Q, cfg.limits)?;
            let b = depth_monomial(&symbolic_power(&sr_ideal(&cx), ell)?, Q)?;
            t.check(a == b, || {
                format!("{cx} l={ell}: Takayama {a}, polarization {b}")
            });
        }
    }
    Ok(t.finish("complex/l pairs"))
}

fn h1_criterion(cfg: &VerifyConfig) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 7);
    let mut t = Tally::new();
    let mut vanishing = 0;
    for _ in 0..30 {
        let n = rng.gen_range(3..=6);
        let cx = families::random_covering_complex(&mut rng, n, 3.min(n), 6);
        for ell in [2, 3] {
            let direct = h1_vanishes(&cx, ell, cfg.limits)?;
            let crit = h1_vanishes_criterion(&cx, ell, cfg.limits)?;
            vanishing += direct as usize;
            t.check(direct == crit, || {
                format!("{cx} l={ell}: direct {direct}, criterion {crit}")
            });
        }
    }
    let (ok, detail) = t.finish("complex/l pairs");
    Ok((ok, format!("{detail}, {vanishing} with vanishing H^1")))
}

fn inflation_shift(cfg: &VerifyConfig) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 8);
    let mut t = Tally::new();
    for _ in 0..20 {
        let n = rng.gen_range(3..=6);
        let cx = families::random_covering_pure_complex(&mut rng, n, 2..=(n - 1).min(4), 8);
        let v = rng.gen_range(1..=n);
        let inflated = cx.one_vertex_inflation(v)?;
        for r in [2, 3] {
            let before = hochster::serre_depth(&cx, r, Q)?;
            let after = hochster::serre_depth(&inflated, r, Q)?;
            t.check(after == before + 1, || {
                format!("{cx} v={v} r={r}: {before} -> {after}")
            });
        }
    }
    Ok(t.finish("complex/r pairs"))
}

fn polarization_shift(cfg: &VerifyConfig) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 9);
    let mut t = Tally::new();
    let mut attempts = 0;
    while t.cases < 20 {
        attempts += 1;
        if attempts > 5000 {
            return Ok((
                false,
                format!("only {} unmixed ideals in 5000 draws", t.cases),
            ));
        }
        let n = rng.gen_range(2..=4);
        let ideal = families::random_monomial_ideal(&mut rng, n, 3, 4);
        let pol = polarize(&ideal);
        let pcx = sr_complex(&pol.ideal)?;
        if !pcx.is_pure() {
            continue;
        }
        let r = rng.gen_range(2..=3);
        let direct = serre_depth_monomial_direct(&ideal, r, Q)?;
        let via_pol = serre_depth_monomial(&ideal, r, Q)?;
        let polarized = hochster::serre_depth(&pcx, r, Q)?;
        t.check(direct + pol.extra == polarized && via_pol == direct, || {
            format!(
                "{ideal} r={r}: direct {direct} + {} vs polarized {polarized}",
                pol.extra
            )
        });
    }
    Ok(t.finish("ideals"))
}

/// Multiplicity vectors of length `len` with positive entries summing to at most `total`.
fn multiplicities(len: usize, total: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=total.saturating_sub(len - 1) {
        for mut rest in multiplicities(len - 1, total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn vwc_formula(_: &VerifyConfig) -> Result<Outcome> {
    let mut t = Tally::new();
    for h in [Graph::complete(2), families::matched_p4()] {
        let d0 = h.n() / 2;
        for mult in multiplicities(d0, 5) {
            let s = VwcStructure::new(h.clone(), mult.clone())?;
            let g = vwc_expand(&s);
            let cx = independence_complex(&g);
            for r in [2, 3] {
                let formula = vwc_serre_depth_formula(&s, r)?;
                let direct = hochster::serre_depth(&cx, r, Q)?;
                t.check(formula == direct, || {
                    format!("{h} n={mult:?} r={r}: formula {formula}, direct {direct}")
                });
            }
            let s2 = s.d() - mult.iter().max().copied().unwrap_or(0) + 1;
            t.check(vwc_serre_depth_formula(&s, 2)? == s2, || {
                format!("{h} n={mult:?}: S2 specialization {s2}")
            });
            let back = vwc_decompose(&g)?;
            t.check(graphs_isomorphic(&vwc_expand(&back), &g), || {
                format!("{h} n={mult:?}: decomposition")
            });
        }
    }
    let k22 = Graph::complete_bipartite(2, 2);
    let s = vwc_decompose(&k22)?;
    let f = vwc_serre_depth_formula(&s, 2)?;
    let direct = hochster::serre_depth(&independence_complex(&k22), 2, Q)?;
    t.check(f == 1 && direct == 1, || {
        format!("K_2,2: formula {f}, direct {direct}")
    });
    Ok(t.finish("cases"))
}

fn graph_of(cx: &SimplicialComplex) -> Graph {
    let edges: Vec<(usize, usize)> = cx
        .facets()
        .iter()
        .map(|f| {
            let v = f.to_vec();
            (v[0], v[1])
        })
        .collect();
    Graph::new(cx.n(), &edges).expect("facets are edges")
}

fn non_increasing_seq(s: &[usize]) -> bool {
    s.windows(2).all(|w| w[0] >= w[1])
}

fn non_increasing(cfg: &VerifyConfig) -> Result<Outcome> {
    let mut t = Tally::new();
    let graphs: Vec<SimplicialComplex> = (2..=6)
        .flat_map(|n| families::pure_complexes_with_facet_size(n, 2, 15))
        .collect();
    // edge ideals of well-covered graphs, S2-depth
    let mut well_covered: Vec<Graph> = graphs
        .iter()
        .map(graph_of)
        .filter(is_well_covered)
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 11);
    for _ in 0..3 {
        // whiskering makes any graph well-covered
        let base = families::random_graph(&mut rng, 4, 0.5);
        let mut edges = base.edges();
        edges.extend((1..=4).map(|v| (v, v + 4)));
        well_covered.push(Graph::new(8, &edges)?);
    }
    for g in &well_covered {
        let seq = serre_depth_sequence(&independence_complex(g), 4, 2, Q, cfg.limits)?;
        t.check(non_increasing_seq(&seq), || {
            format!("edge ideal of {g}: {seq:?}")
        });
    }
    // cover ideals, S2-depth, where every vertex misses some edge
    for g in graphs.iter().map(graph_of) {
        let cx = sr_complex(&cover_ideal(&g))?;
        if !cx.covers_ground_set() {
            continue;
        }
        let seq = serre_depth_sequence(&cx, 4, 2, Q, cfg.limits)?;
        t.check(non_increasing_seq(&seq), || {
            format!("cover ideal of {g}: {seq:?}")
        });
    }
    // one-dimensional complexes: depth, and the classification it follows
    for cx in graphs.iter().filter(|c| c.covers_ground_set()) {
        let seq = depth_sequence(cx, 4, Q, cfg.limits)?;
        let class = classify_dim1(cx)?;
        t.check(
            non_increasing_seq(&seq) && seq == class.predicted_prefix(4),
            || format!("{cx}: {seq:?} as {class:?}"),
        );
        let s2 = serre_depth_sequence(cx, 4, 2, Q, cfg.limits)?;
        t.check(non_increasing_seq(&s2), || format!("{cx}: S2 {s2:?}"));
    }
    // every complex on at most five vertices
    for n in 1..=5 {
        for cx in families::covering_complexes_up_to_iso(n) {
            let seq = depth_sequence(&cx, 4, Q, cfg.limits)?;
            t.check(non_increasing_seq(&seq), || format!("{cx}: depth {seq:?}"));
            if cx.is_pure() {
                let s2 = serre_depth_sequence(&cx, 4, 2, Q, cfg.limits)?;
                t.check(non_increasing_seq(&s2), || format!("{cx}: S2 {s2:?}"));
            }
        }
    }
    Ok(t.finish("sequences"))
}

fn cover_polarization(_: &VerifyConfig) -> Result<Outcome> {
    let mut t = Tally::new();
    for g in [
        Graph::complete(2),
        Graph::path(4),
        Graph::cycle(5),
        Graph::complete_bipartite(2, 2),
    ] {
        for ell in 1..=3u32 {
            let pol = polarize(&cover_symbolic_power(&g, ell)?);
            let image = cover_polarization_renaming(&pol, ell as usize)?;
            let renamed = pol.ideal.rename(g.n() * ell as usize, &image)?;
            let expected = cover_ideal(&construct_g_ell(&g, ell as usize)?);
            t.check(renamed == expected, || {
                format!("{g} l={ell}: {renamed} vs {expected}")
            });
        }
    }
    Ok(t.finish("graph/l pairs"))
}

fn reduced_euler_from_faces(cx: &SimplicialComplex) -> i64 {
    // f_vector()[k] counts faces with k vertices, of dimension k - 1
    cx.f_vector()
        .iter()
        .enumerate()
        .map(|(k, &f)| if k % 2 == 1 { f as i64 } else { -(f as i64) })
        .sum()
}

fn homology_sanity(cfg: &VerifyConfig) -> Result<Outcome> {
    let mut t = Tally::new();
    let mut complexes: Vec<SimplicialComplex> = (1..=5)
        .flat_map(families::covering_complexes_up_to_iso)
        .collect();
    complexes.extend([families::rp2(), families::ce2(), counterexample_complex(3)?]);
    for cx in &complexes {
        for field in [Q, Field::Prime(2)] {
            let h = reduced_homology(cx, field)?;
            let plain = reduced_homology_direct(cx, field)?;
            let chi = reduced_euler_from_faces(cx);
            t.check(h.euler_characteristic() == chi && h == plain, || {
                format!(
                    "{cx} over {field}: chi {} vs {chi}",
                    h.euler_characteristic()
                )
            });
        }
    }
    // Euler identity on the symbolic degree complexes behind a few profiles
    for cx in [families::c4(), families::ce2()] {
        let p = symbolic_coh_profile(&cx, 2, Q, cfg.limits)?;
        for w in (0..=p.profile().module_dim()).filter_map(|i| p.witness(i)) {
            let kept = crate::symbolic::takayama_complex(
                &cx.link(w.face.iter().copied().collect::<VertexSet>())?,
                &w.a,
                2,
            )?;
            let h = reduced_homology(&kept, Q)?;
            t.check(
                h.euler_characteristic() == reduced_euler_from_faces(&kept),
                || format!("degree complex of {cx}"),
            );
        }
    }
    let rp2 = families::rp2();
    let q = reduced_homology(&rp2, Q)?;
    let f2 = reduced_homology(&rp2, Field::Prime(2))?;
    t.check(
        q.get(1) == 0 && f2.get(1) == 1 && q.get(2) == 0 && f2.get(2) == 1,
        || format!("RP2: H1 over Q {} / F2 {}", q.get(1), f2.get(1)),
    );
    Ok(t.finish("profiles"))
}

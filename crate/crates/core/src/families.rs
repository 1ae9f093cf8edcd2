//! Named fixtures, exhaustive enumeration of small pure complexes up to
//! isomorphism, and seeded random instances.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::complex::SimplicialComplex;
use crate::graphs::Graph;
use crate::monomials::{Monomial, MonomialIdeal};
use crate::vertex_set::VertexSet;

fn cx(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
    let facets: Vec<Vec<usize>> = facets.iter().map(|f| f.to_vec()).collect();
    SimplicialComplex::from_facets(n, &facets).expect("fixture is well formed")
}

/// The 4-cycle as a 1-dimensional complex.
pub fn c4() -> SimplicialComplex {
    cx(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]])
}

/// A triangle with a pendant edge: diameter 2, not a matroid.
pub fn triangle_with_pendant() -> SimplicialComplex {
    cx(4, &[&[1, 2], &[1, 3], &[2, 3], &[1, 4]])
}

/// The path 1-2-3-4.
pub fn p4() -> SimplicialComplex {
    cx(4, &[&[1, 2], &[2, 3], &[3, 4]])
}

/// Two disjoint edges.
pub fn two_k2() -> SimplicialComplex {
    cx(4, &[&[1, 2], &[3, 4]])
}

/// Boundary of the tetrahedron `1234` with the triangles `145`, `245`, `345`
/// and `456` attached.
pub fn ce2() -> SimplicialComplex {
    cx(
        6,
        &[
            &[1, 2, 3],
            &[1, 2, 4],
            &[1, 3, 4],
            &[2, 3, 4],
            &[1, 4, 5],
            &[2, 4, 5],
            &[3, 4, 5],
            &[4, 5, 6],
        ],
    )
}

/// Six-vertex triangulation of the real projective plane.
pub fn rp2() -> SimplicialComplex {
    cx(
        6,
        &[
            &[1, 2, 3],
            &[1, 3, 4],
            &[1, 4, 5],
            &[1, 5, 6],
            &[1, 2, 6],
            &[2, 3, 5],
            &[3, 4, 6],
            &[2, 4, 5],
            &[3, 5, 6],
            &[2, 4, 6],
        ],
    )
}

/// Boundary of a triangle.
pub fn hollow_triangle() -> SimplicialComplex {
    cx(3, &[&[1, 2], &[1, 3], &[2, 3]])
}

/// `y_1 - x_1 - x_2 - y_2` with `x_i = i`, `y_i = 2 + i`.
pub fn matched_p4() -> Graph {
    Graph::new(4, &[(1, 3), (2, 4), (1, 2)]).expect("fixture is well formed")
}

/// Lexicographic permutations of `0..n`.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n)
            .rev()
            .find(|&j| p[j] > p[i - 1])
            .expect("a larger entry exists");
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}

/// For `n ≤ 6` a family of subsets of `[n]` fits in one `u64`, bit `s` for the
/// subset with bitmask `s`.
struct SubsetPerms {
    tables: Vec<[u8; 64]>,
}

impl SubsetPerms {
    fn new(n: usize) -> Self {
        let tables = permutations(n)
            .into_iter()
            .map(|p| {
                let mut t = [0u8; 64];
                for (s, slot) in t.iter_mut().enumerate().take(1 << n) {
                    *slot = (0..n)
                        .filter(|b| s >> b & 1 == 1)
                        .fold(0u8, |acc, b| acc | 1 << p[b]);
                }
                t
            })
            .collect();
        SubsetPerms { tables }
    }

    fn canonical(&self, family: u64) -> u64 {
        self.tables
            .iter()
            .map(|t| {
                let mut out = 0u64;
                let mut rest = family;
                while rest != 0 {
                    let s = rest.trailing_zeros() as usize;
                    out |= 1 << t[s];
                    rest &= rest - 1;
                }
                out
            })
            .min()
            .expect("at least one permutation")
    }
}

/// All pure complexes on the ground set `[n]` (`1 ≤ n ≤ 6`) whose facets have
/// one common size `k ≥ 1` and number at most `max_facets`, one per
/// isomorphism class. Vertices of `[n]` outside every facet are allowed.
pub fn pure_complexes_up_to_iso(n: usize, max_facets: usize) -> Vec<SimplicialComplex> {
    (1..=n)
        .flat_map(|k| pure_complexes_with_facet_size(n, k, max_facets))
        .collect()
}

/// Pure complexes on `[n]` with `1..=max_facets` facets of size `k`, up to
/// isomorphism, built one facet at a time and deduplicated by canonical form.
pub fn pure_complexes_with_facet_size(
    n: usize,
    k: usize,
    max_facets: usize,
) -> Vec<SimplicialComplex> {
    assert!(
        (1..=6).contains(&n),
        "exhaustive enumeration supports 1 ≤ n ≤ 6"
    );
    let perms = SubsetPerms::new(n);
    let candidates: Vec<u64> = (0u64..1 << n)
        .filter(|s| s.count_ones() as usize == k)
        .collect();
    let mut out = Vec::new();
    let mut level: Vec<u64> = vec![0];
    for _ in 0..max_facets.min(candidates.len()) {
        let mut next: HashSet<u64> = HashSet::new();
        for &fam in &level {
            for &s in &candidates {
                if fam >> s & 1 == 0 {
                    next.insert(perms.canonical(fam | 1 << s));
                }
            }
        }
        let mut sorted: Vec<u64> = next.into_iter().collect();
        sorted.sort_unstable();
        out.extend(sorted.iter().map(|&fam| family_to_complex(n, fam)));
        level = sorted;
    }
    out
}

/// Every complex on `[n]` (`n ≤ 5`) that uses all `n` vertices, up to
/// isomorphism: antichains of nonempty subsets by depth-first search.
pub fn covering_complexes_up_to_iso(n: usize) -> Vec<SimplicialComplex> {
    assert!(
        (1..=5).contains(&n),
        "exhaustive enumeration supports 1 ≤ n ≤ 5"
    );
    let perms = SubsetPerms::new(n);
    // larger sets first so that every accepted set is maximal when added
    let mut sets: Vec<u64> = (1u64..1 << n).collect();
    sets.sort_by_key(|s| (std::cmp::Reverse(s.count_ones()), *s));
    let full = (1u64 << n) - 1;
    let mut seen: HashSet<u64> = HashSet::new();
    fn go(
        sets: &[u64],
        pos: usize,
        chosen: &mut Vec<u64>,
        full: u64,
        perms: &SubsetPerms,
        seen: &mut HashSet<u64>,
    ) {
        if pos == sets.len() {
            let cover = chosen.iter().fold(0, |a, s| a | s);
            if cover == full {
                seen.insert(perms.canonical(chosen.iter().fold(0u64, |a, &s| a | 1 << s)));
            }
            return;
        }
        let s = sets[pos];
        go(sets, pos + 1, chosen, full, perms, seen);
        if chosen.iter().all(|&c| s & c != s) {
            chosen.push(s);
            go(sets, pos + 1, chosen, full, perms, seen);
            chosen.pop();
        }
    }
    go(&sets, 0, &mut Vec::new(), full, &perms, &mut seen);
    let mut fams: Vec<u64> = seen.into_iter().collect();
    fams.sort_unstable();
    fams.into_iter()
        .map(|fam| family_to_complex(n, fam))
        .collect()
}

fn family_to_complex(n: usize, family: u64) -> SimplicialComplex {
    let sets = (0..64u64)
        .filter(|s| family >> s & 1 == 1)
        .map(VertexSet::from_bits);
    SimplicialComplex::from_sets(n, sets).expect("subsets of [n]")
}

/// `m` distinct random `k`-subsets of `[n]` as facets.
pub fn random_pure_complex<R: Rng>(rng: &mut R, n: usize, k: usize, m: usize) -> SimplicialComplex {
    let all: Vec<VertexSet> = VertexSet::full(n)
        .subsets()
        .filter(|s| s.len() == k)
        .collect();
    let chosen: Vec<VertexSet> = all
        .choose_multiple(rng, m.min(all.len()))
        .copied()
        .collect();
    SimplicialComplex::from_sets(n, chosen).expect("subsets of [n]")
}

/// Random pure complex on `[n]` covering every vertex, with facet size in
/// `k_range` and between 2 and `max_facets` facets.
pub fn random_covering_pure_complex<R: Rng>(
    rng: &mut R,
    n: usize,
    k_range: std::ops::RangeInclusive<usize>,
    max_facets: usize,
) -> SimplicialComplex {
    loop {
        let k = rng.gen_range(k_range.clone());
        let m = rng.gen_range(2..=max_facets);
        let cx = random_pure_complex(rng, n, k, m);
        if cx.covers_ground_set() {
            return cx;
        }
    }
}

/// Random complex on `[n]` covering every vertex with facets of mixed sizes
/// in `2..=max_size`; its dimension is at least 1.
pub fn random_covering_complex<R: Rng>(
    rng: &mut R,
    n: usize,
    max_size: usize,
    max_facets: usize,
) -> SimplicialComplex {
    loop {
        let m = rng.gen_range(2..=max_facets);
        let sets: Vec<VertexSet> = (0..m)
            .map(|_| {
                let k = rng.gen_range(2..=max_size);
                let mut verts: Vec<usize> = (1..=n).collect();
                verts.shuffle(rng);
                verts[..k]
                    .iter()
                    .fold(VertexSet::EMPTY, |acc, &v| acc.insert(v))
            })
            .collect();
        let cx = SimplicialComplex::from_sets(n, sets).expect("subsets of [n]");
        if cx.covers_ground_set() {
            return cx;
        }
    }
}

/// Random monomial ideal in `n` variables with `1..=max_gens` generators and
/// exponents at most `max_exp`; no generator is the unit.
pub fn random_monomial_ideal<R: Rng>(
    rng: &mut R,
    n: usize,
    max_exp: u32,
    max_gens: usize,
) -> MonomialIdeal {
    let m = rng.gen_range(1..=max_gens);
    let gens = (0..m)
        .map(|_| loop {
            let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_exp)).collect();
            if e.iter().any(|&x| x > 0) {
                break Monomial::new(e);
            }
        })
        .collect();
    MonomialIdeal::new(n, gens).expect("lengths agree")
}

/// Random graph on `[n]` where each edge appears with probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, &edges).expect("simple graph")
}

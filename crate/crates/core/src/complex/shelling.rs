use std::collections::HashSet;

use super::SimplicialComplex;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Default largest facet count accepted by the shelling search.
pub const DEFAULT_SHELLING_FACET_LIMIT: usize = 24;

const NODE_BUDGET: u64 = 5_000_000;

/// Result of a shelling search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShellingOutcome {
    /// A shelling order, as facets in order.
    Shellable(Vec<VertexSet>),
    NotShellable,
    /// The search budget ran out before a decision.
    Unknown,
}

impl ShellingOutcome {
    pub fn is_shellable(&self) -> bool {
        matches!(self, ShellingOutcome::Shellable(_))
    }
}

/// Whether `next` can follow the facets selected in `used`: for every earlier
/// `F_j` some `t ∈ next \ F_j` has `next \ F_k = {t}` for an earlier `F_k`.
fn extends(facets: &[VertexSet], used: u64, next: VertexSet) -> bool {
    let mut singles = VertexSet::EMPTY;
    for (k, f) in facets.iter().enumerate() {
        if used >> k & 1 == 1 {
            let d = next.difference(*f);
            if d.len() == 1 {
                singles = singles.union(d);
            }
        }
    }
    facets
        .iter()
        .enumerate()
        .filter(|(j, _)| used >> j & 1 == 1)
        .all(|(_, f)| next.difference(*f).intersects(singles))
}

impl SimplicialComplex {
    /// Checks the shelling condition for the given facet order, which must be
    /// a permutation of the facets.
    pub fn verify_shelling(&self, order: &[VertexSet]) -> Result<bool> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        let mut sorted = order.to_vec();
        sorted.sort();
        if sorted != self.facets {
            return Err(Error::Range(
                "order is not a permutation of the facets".into(),
            ));
        }
        for i in 1..order.len() {
            for j in 0..i {
                let ok = order[i].difference(order[j]).iter().any(|t| {
                    (0..i).any(|k| order[i].difference(order[k]) == VertexSet::singleton(t))
                });
                if !ok {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Backtracking search for a shelling order.
    pub fn is_shellable(&self, facet_limit: usize) -> Result<ShellingOutcome> {
        if !self.is_pure() {
            return Err(Error::NotPure);
        }
        let m = self.facets.len();
        if m > facet_limit || m > 63 {
            return Err(Error::Budget {
                what: "shelling search".into(),
                required: m as u128,
                limit: facet_limit.min(63) as u128,
            });
        }
        if m <= 1 {
            return Ok(ShellingOutcome::Shellable(self.facets.clone()));
        }
        let mut search = Search {
            facets: &self.facets,
            dead: HashSet::new(),
            nodes: 0,
            order: Vec::with_capacity(m),
        };
        for start in 0..m {
            search.order.push(start);
            match search.extend(1u64 << start) {
                Some(true) => {
                    let order = search.order.iter().map(|&i| self.facets[i]).collect();
                    return Ok(ShellingOutcome::Shellable(order));
                }
                Some(false) => {
                    search.order.pop();
                }
                None => return Ok(ShellingOutcome::Unknown),
            }
        }
        Ok(ShellingOutcome::NotShellable)
    }
}

struct Search<'a> {
    facets: &'a [VertexSet],
    dead: HashSet<u64>,
    nodes: u64,
    order: Vec<usize>,
}

impl Search<'_> {
    /// `Some(true)` on success, `Some(false)` if exhausted, `None` on budget.
    fn extend(&mut self, used: u64) -> Option<bool> {
        let m = self.facets.len();
        if used.count_ones() as usize == m {
            return Some(true);
        }
        if self.dead.contains(&used) {
            return Some(false);
        }
        self.nodes += 1;
        if self.nodes > NODE_BUDGET {
            return None;
        }
        for next in 0..m {
            if used >> next & 1 == 1 || !extends(self.facets, used, self.facets[next]) {
                continue;
            }
            self.order.push(next);
            match self.extend(used | 1u64 << next) {
                Some(true) => return Some(true),
                Some(false) => {
                    self.order.pop();
                }
                None => return None,
            }
        }
        self.dead.insert(used);
        Some(false)
    }
}

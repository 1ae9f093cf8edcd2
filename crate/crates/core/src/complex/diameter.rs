use std::collections::VecDeque;

use super::SimplicialComplex;
use crate::error::{Error, Result};
use crate::extint::ExtInt;
use crate::vertex_set::VertexSet;

impl SimplicialComplex {
    /// Graph diameter of the 1-skeleton over the vertices of the complex;
    /// `inf` when disconnected.
    pub fn one_skeleton_diameter(&self) -> Result<ExtInt> {
        let verts = self.vertex_set().to_vec();
        if verts.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![VertexSet::EMPTY; self.n + 1];
        for f in self.facets() {
            for v in f.iter() {
                adj[v] = adj[v].union(f.remove(v));
            }
        }
        let mut diameter = 0i64;
        for &s in &verts {
            let mut dist = vec![usize::MAX; self.n + 1];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for w in adj[u].iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            for &t in &verts {
                if dist[t] == usize::MAX {
                    return Ok(ExtInt::Inf);
                }
                diameter = diameter.max(dist[t] as i64);
            }
        }
        Ok(ExtInt::Finite(diameter))
    }

    /// Largest over pairs of `t`-faces `F, G` of the shortest chain
    /// `F ⊆ F_1, ..., F_p ⊇ G` of `(t+1)`-faces with consecutive members
    /// meeting; `inf` if some pair admits no chain.
    pub fn t_diameter(&self, t: isize) -> Result<ExtInt> {
        if t < 0 {
            return Err(Error::Range(format!("t = {t} must be nonnegative")));
        }
        let small = self.faces_of_dim(t).members;
        if small.is_empty() {
            return Err(Error::Range(format!("no faces of dimension {t}")));
        }
        let big = self.faces_of_dim(t + 1).members;
        let m = big.len();
        let adj: Vec<Vec<usize>> = (0..m)
            .map(|i| {
                (0..m)
                    .filter(|&j| j != i && big[i].intersects(big[j]))
                    .collect()
            })
            .collect();
        // hop[i][j]: number of chain members from big[i] to big[j]
        let mut hop = vec![vec![usize::MAX; m]; m];
        for (i, row) in hop.iter_mut().enumerate() {
            row[i] = 1;
            let mut queue = VecDeque::from([i]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if row[w] == usize::MAX {
                        row[w] = row[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        let containers: Vec<Vec<usize>> = small
            .iter()
            .map(|f| (0..m).filter(|&i| f.is_subset(big[i])).collect())
            .collect();
        let mut worst = 0usize;
        for a in 0..small.len() {
            for b in a..small.len() {
                let mut best = usize::MAX;
                for &i in &containers[a] {
                    for &j in &containers[b] {
                        best = best.min(hop[i][j]);
                    }
                }
                if best == usize::MAX {
                    return Ok(ExtInt::Inf);
                }
                worst = worst.max(best);
            }
        }
        Ok(ExtInt::Finite(worst as i64))
    }
}

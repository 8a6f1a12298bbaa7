use serde::{Deserialize, Serialize};

use super::{timed, ListingReport};
use crate::error::{Error, Result};
use crate::graph::{degeneracy, Graph};

pub const MIN_ELL: usize = 3;
pub const MAX_ELL: usize = 8;

/// A complete subgraph given by its strictly increasing vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CliqueTuple(Vec<usize>);

impl CliqueTuple {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let v = &self.0;
        v.windows(2).all(|w| w[0] < w[1])
            && v.last().is_none_or(|&x| x < g.n())
            && v.iter()
                .enumerate()
                .all(|(p, &a)| v[p + 1..].iter().all(|&b| g.has_edge(a, b)))
    }
}

/// Lists every `K_ℓ` once.
///
/// Edges are oriented along the degeneracy order, so every vertex has at most
/// `d` out-neighbours. A clique is grown only through out-neighbours, with the
/// candidate set narrowed by intersection at each step; each `K_ℓ` is therefore
/// reached along exactly one increasing chain.
pub fn list_cliques(g: &Graph, ell: usize, mut visitor: impl FnMut(CliqueTuple)) -> Result<ListingReport> {
    if !(MIN_ELL..=MAX_ELL).contains(&ell) {
        return Err(Error::EllOutOfRange(ell));
    }
    Ok(timed("cliques", || {
        let rank = degeneracy(g).ranks();
        let out: Vec<Vec<usize>> = (0..g.n())
            .map(|v| g.neighbors(v).iter().copied().filter(|&w| rank[w] > rank[v]).collect())
            .collect();
        let mut search = Search {
            out: &out,
            stack: Vec::with_capacity(ell),
            emitted: 0,
            probes: 0,
        };
        for (v, candidates) in out.iter().enumerate() {
            search.stack.push(v);
            search.extend(candidates, ell - 1, &mut visitor);
            search.stack.pop();
        }
        (search.emitted, search.probes)
    }))
}

struct Search<'a> {
    out: &'a [Vec<usize>],
    stack: Vec<usize>,
    emitted: u64,
    probes: u64,
}

impl Search<'_> {
    fn extend(&mut self, candidates: &[usize], needed: usize, visitor: &mut impl FnMut(CliqueTuple)) {
        if candidates.len() < needed {
            return;
        }
        if needed == 1 {
            for &w in candidates {
                let mut clique = self.stack.clone();
                clique.push(w);
                clique.sort_unstable();
                visitor(CliqueTuple(clique));
                self.emitted += 1;
            }
            return;
        }
        for &w in candidates {
            let next = intersect_sorted(candidates, &self.out[w], &mut self.probes);
            self.stack.push(w);
            self.extend(&next, needed - 1, visitor);
            self.stack.pop();
        }
    }
}

fn intersect_sorted(a: &[usize], b: &[usize], probes: &mut u64) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        *probes += 1;
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

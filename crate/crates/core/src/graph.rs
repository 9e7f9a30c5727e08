//! Compressed adjacency storage and breadth-first sweeps for Hurwitz graphs.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::hurwitz::HurwitzWord;

/// Marks an unreachable vertex in a distance buffer.
pub const UNREACHED: u32 = u32::MAX;

/// Undirected graph in CSR form; every edge is stored in both directions and
/// each neighbor list is sorted.
#[derive(Debug, Clone)]
pub struct Csr {
    offsets: Vec<u32>,
    targets: Vec<u32>,
}

impl Csr {
    /// Adjacency of the Hurwitz graph on `words`, which must be closed under
    /// moves. Vertex `k` is `words[k]`.
    pub fn from_words<W: HurwitzWord>(words: &[W]) -> Self {
        let index: HashMap<&W, u32> = words.iter().enumerate().map(|(k, w)| (w, k as u32)).collect();
        let lists: Vec<Vec<u32>> = words
            .par_iter()
            .map(|w| {
                let mut nb: Vec<u32> = w
                    .neighbor_words()
                    .iter()
                    .map(|v| *index.get(v).expect("word set not closed under moves"))
                    .collect();
                nb.sort_unstable();
                nb
            })
            .collect();
        let mut offsets = Vec::with_capacity(words.len() + 1);
        let mut targets = Vec::with_capacity(lists.iter().map(Vec::len).sum());
        offsets.push(0);
        for l in lists {
            targets.extend_from_slice(&l);
            offsets.push(targets.len() as u32);
        }
        Self { offsets, targets }
    }

    pub fn num_vertices(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of undirected edges.
    pub fn num_edges(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.targets[self.offsets[v as usize] as usize..self.offsets[v as usize + 1] as usize]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.neighbors(v).len()
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Undirected edges `(u, v)` with `u < v`, in order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..self.num_vertices() as u32)
            .flat_map(move |u| self.neighbors(u).iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn is_symmetric(&self) -> bool {
        self.edges().all(|(u, v)| self.has_edge(v, u))
            && (0..self.num_vertices() as u32)
                .all(|u| self.neighbors(u).iter().all(|&v| self.has_edge(v, u)))
    }

    /// Distances from `src`; returns the eccentricity within the reached part.
    /// `dist` and `queue` are caller-owned scratch buffers.
    pub fn bfs_into(&self, src: u32, dist: &mut Vec<u32>, queue: &mut Vec<u32>) -> u32 {
        dist.clear();
        dist.resize(self.num_vertices(), UNREACHED);
        queue.clear();
        dist[src as usize] = 0;
        queue.push(src);
        let mut head = 0;
        let mut ecc = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            let du = dist[u as usize];
            ecc = du;
            for &v in self.neighbors(u) {
                if dist[v as usize] == UNREACHED {
                    dist[v as usize] = du + 1;
                    queue.push(v);
                }
            }
        }
        ecc
    }

    pub fn bfs(&self, src: u32) -> Vec<u32> {
        let (mut dist, mut queue) = (Vec::new(), Vec::new());
        self.bfs_into(src, &mut dist, &mut queue);
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.num_vertices() == 0 || self.bfs(0).iter().all(|&d| d != UNREACHED)
    }

    /// Eccentricity of every vertex, computed in parallel over sources.
    ///
    /// When `abort_above` is set, the sweep stops at the first vertex whose
    /// eccentricity exceeds it and reports that vertex instead.
    pub fn all_eccentricities(&self, abort_above: Option<u32>) -> Result<Vec<u32>, (u32, u32)> {
        (0..self.num_vertices() as u32)
            .into_par_iter()
            .map_init(
                || (Vec::new(), Vec::new()),
                |(dist, queue), v| {
                    let ecc = self.bfs_into(v, dist, queue);
                    match abort_above {
                        Some(bound) if ecc > bound => Err((v, ecc)),
                        _ => Ok(ecc),
                    }
                },
            )
            .collect()
    }
}

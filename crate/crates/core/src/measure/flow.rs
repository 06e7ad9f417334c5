//! Integer max-flow (Dinic) on arbitrary-precision capacities.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

#[derive(Clone, Debug)]
struct Edge {
    to: usize,
    cap: BigInt,
}

#[derive(Clone, Debug, Default)]
pub struct FlowNetwork {
    edges: Vec<Edge>,
    adj: Vec<Vec<usize>>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        Self {
            edges: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    /// Adds `from → to` and its residual twin; returns the forward edge id.
    pub fn add_edge(&mut self, from: usize, to: usize, cap: BigInt) -> usize {
        let id = self.edges.len();
        self.edges.push(Edge { to, cap });
        self.edges.push(Edge {
            to: from,
            cap: BigInt::zero(),
        });
        self.adj[from].push(id);
        self.adj[to].push(id + 1);
        id
    }

    /// Flow currently routed through forward edge `id`.
    pub fn flow_on(&self, id: usize) -> BigInt {
        self.edges[id ^ 1].cap.clone()
    }

    pub fn max_flow(&mut self, source: usize, sink: usize) -> BigInt {
        let mut total = BigInt::zero();
        loop {
            let Some(level) = self.levels(source, sink) else {
                return total;
            };
            let mut next = vec![0usize; self.adj.len()];
            loop {
                let pushed = self.augment(source, sink, None, &level, &mut next);
                if pushed.is_zero() {
                    break;
                }
                total += pushed;
            }
        }
    }

    fn levels(&self, source: usize, sink: usize) -> Option<Vec<i64>> {
        let mut level = vec![-1i64; self.adj.len()];
        level[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for &id in &self.adj[v] {
                let e = &self.edges[id];
                if e.cap.is_positive() && level[e.to] < 0 {
                    level[e.to] = level[v] + 1;
                    queue.push_back(e.to);
                }
            }
        }
        (level[sink] >= 0).then_some(level)
    }

    /// Blocking-flow DFS; `limit = None` means unbounded.
    fn augment(
        &mut self,
        v: usize,
        sink: usize,
        limit: Option<&BigInt>,
        level: &[i64],
        next: &mut [usize],
    ) -> BigInt {
        if v == sink {
            return limit.cloned().unwrap_or_else(BigInt::zero);
        }
        while next[v] < self.adj[v].len() {
            let id = self.adj[v][next[v]];
            let (to, cap) = (self.edges[id].to, self.edges[id].cap.clone());
            if cap.is_positive() && level[to] == level[v] + 1 {
                let bound = match limit {
                    Some(l) if *l < cap => l.clone(),
                    _ => cap,
                };
                let pushed = self.augment(to, sink, Some(&bound), level, next);
                if pushed.is_positive() {
                    self.edges[id].cap -= &pushed;
                    self.edges[id ^ 1].cap += &pushed;
                    return pushed;
                }
            }
            next[v] += 1;
        }
        BigInt::zero()
    }
}

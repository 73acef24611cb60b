//! Dinic's blocking-flow max-flow on integer capacities.

use std::collections::VecDeque;

#[derive(Clone, Debug)]
pub(crate) struct Network {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i128>,
    original: Vec<i128>,
}

impl Network {
    pub fn new(nodes: usize) -> Self {
        Network { head: vec![Vec::new(); nodes], to: Vec::new(), cap: Vec::new(), original: Vec::new() }
    }

    /// Adds `u → v` and returns its edge id; the reverse edge is `id ^ 1`.
    pub fn add_edge(&mut self, u: usize, v: usize, cap: i128) -> usize {
        let id = self.to.len();
        self.head[u].push(id);
        self.to.push(v);
        self.cap.push(cap);
        self.original.push(cap);
        self.head[v].push(id + 1);
        self.to.push(u);
        self.cap.push(0);
        self.original.push(0);
        id
    }

    pub fn flow_on(&self, edge: usize) -> i128 {
        self.original[edge] - self.cap[edge]
    }

    fn levels(&self, s: usize) -> Vec<i64> {
        let mut level = vec![-1; self.head.len()];
        level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.head[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && level[v] < 0 {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        level
    }

    /// Iterative blocking-flow search from `s`.
    fn push(&mut self, s: usize, t: usize, level: &[i64], next: &mut [usize]) -> i128 {
        let mut total = 0;
        loop {
            // Walk a level-increasing path to `t`, retreating from dead ends.
            let mut path: Vec<usize> = Vec::new();
            let mut u = s;
            loop {
                if u == t {
                    break;
                }
                let mut advanced = false;
                while next[u] < self.head[u].len() {
                    let e = self.head[u][next[u]];
                    let v = self.to[e];
                    if self.cap[e] > 0 && level[v] == level[u] + 1 {
                        path.push(e);
                        u = v;
                        advanced = true;
                        break;
                    }
                    next[u] += 1;
                }
                if !advanced {
                    if u == s {
                        return total;
                    }
                    let e = path.pop().expect("non-source node has an entering edge");
                    u = self.to[e ^ 1];
                    next[u] += 1;
                }
            }
            let bottleneck = path.iter().map(|&e| self.cap[e]).min().expect("s != t");
            for &e in &path {
                self.cap[e] -= bottleneck;
                self.cap[e ^ 1] += bottleneck;
            }
            total += bottleneck;
        }
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> i128 {
        let mut total = 0;
        loop {
            let level = self.levels(s);
            if level[t] < 0 {
                return total;
            }
            let mut next = vec![0; self.head.len()];
            total += self.push(s, t, &level, &mut next);
        }
    }

    /// Nodes reachable from `s` in the residual graph.
    pub fn residual_reachable(&self, s: usize) -> Vec<bool> {
        self.levels(s).into_iter().map(|l| l >= 0).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classic_small_network() {
        // CLRS figure: max flow 23.
        let mut g = Network::new(6);
        for (u, v, c) in [(0, 1, 16), (0, 2, 13), (1, 3, 12), (2, 1, 4), (2, 4, 14), (3, 2, 9), (3, 5, 20), (4, 3, 7), (4, 5, 4)] {
            g.add_edge(u, v, c);
        }
        assert_eq!(g.max_flow(0, 5), 23);
        let reach = g.residual_reachable(0);
        assert!(reach[0] && !reach[5]);
    }

    #[test]
    fn disconnected_sink() {
        let mut g = Network::new(3);
        let e = g.add_edge(0, 1, 5);
        assert_eq!(g.max_flow(0, 2), 0);
        assert_eq!(g.flow_on(e), 0);
    }
}

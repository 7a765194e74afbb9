//! Dinic max-flow over an adjacency-list arc arena with i64 capacities.

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    cap: i64,
}

pub struct Dinic {
    arcs: Vec<Arc>,
    head: Vec<Vec<usize>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl Dinic {
    pub fn new(num_nodes: usize) -> Self {
        Dinic {
            arcs: Vec::new(),
            head: vec![Vec::new(); num_nodes],
            level: vec![0; num_nodes],
            iter: vec![0; num_nodes],
        }
    }

    /// Adds a directed arc u -> v with the given capacity (plus the zero
    /// residual reverse arc).
    pub fn add_arc(&mut self, u: usize, v: usize, cap: i64) {
        debug_assert!(cap >= 0);
        let idx = self.arcs.len();
        self.arcs.push(Arc { to: v, cap });
        self.arcs.push(Arc { to: u, cap: 0 });
        self.head[u].push(idx);
        self.head[v].push(idx + 1);
    }

    /// Adds an undirected edge as a pair of arcs, each with capacity `cap`.
    pub fn add_undirected(&mut self, u: usize, v: usize, cap: i64) {
        debug_assert!(cap >= 0);
        let idx = self.arcs.len();
        self.arcs.push(Arc { to: v, cap });
        self.arcs.push(Arc { to: u, cap });
        self.head[u].push(idx);
        self.head[v].push(idx + 1);
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        let mut queue = std::collections::VecDeque::new();
        self.level[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &idx in &self.head[u] {
                let arc = &self.arcs[idx];
                if arc.cap > 0 && self.level[arc.to] < 0 {
                    self.level[arc.to] = self.level[u] + 1;
                    queue.push_back(arc.to);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, u: usize, t: usize, upper: i64) -> i64 {
        if u == t {
            return upper;
        }
        let mut pushed = 0;
        while self.iter[u] < self.head[u].len() {
            let idx = self.head[u][self.iter[u]];
            let (to, cap) = {
                let arc = &self.arcs[idx];
                (arc.to, arc.cap)
            };
            if cap > 0 && self.level[to] == self.level[u] + 1 {
                let d = self.dfs(to, t, (upper - pushed).min(cap));
                if d > 0 {
                    self.arcs[idx].cap -= d;
                    self.arcs[idx ^ 1].cap += d;
                    pushed += d;
                    if pushed == upper {
                        return pushed;
                    }
                    continue;
                }
            }
            self.iter[u] += 1;
        }
        self.level[u] = -1;
        pushed
    }

    pub fn max_flow(&mut self, s: usize, t: usize) -> i64 {
        let mut flow = 0;
        while self.bfs(s, t) {
            self.iter.iter_mut().for_each(|i| *i = 0);
            loop {
                let f = self.dfs(s, t, i64::MAX);
                if f == 0 {
                    break;
                }
                flow += f;
            }
        }
        flow
    }

    /// Nodes reachable from `s` in the residual network (the source side of
    /// a minimum cut after `max_flow`).
    pub fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.head.len()];
        let mut queue = std::collections::VecDeque::new();
        seen[s] = true;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &idx in &self.head[u] {
                let arc = &self.arcs[idx];
                if arc.cap > 0 && !seen[arc.to] {
                    seen[arc.to] = true;
                    queue.push_back(arc.to);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_bipartite() {
        // s=0, t=5; 0->{1,2}, 1->3, 2->{3,4}, {3,4}->5
        let mut d = Dinic::new(6);
        d.add_arc(0, 1, 1);
        d.add_arc(0, 2, 1);
        d.add_arc(1, 3, 1);
        d.add_arc(2, 3, 1);
        d.add_arc(2, 4, 1);
        d.add_arc(3, 5, 1);
        d.add_arc(4, 5, 1);
        assert_eq!(d.max_flow(0, 5), 2);
    }

    #[test]
    fn min_cut_side() {
        // bottleneck between 1 and 2
        let mut d = Dinic::new(4);
        d.add_arc(0, 1, 10);
        d.add_arc(1, 2, 3);
        d.add_arc(2, 3, 10);
        assert_eq!(d.max_flow(0, 3), 3);
        let side = d.residual_reachable(0);
        assert_eq!(side, vec![true, true, false, false]);
    }
}

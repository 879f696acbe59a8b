use std::collections::VecDeque;

use crate::error::SolveError;
use crate::graph::SimpleGraph;

struct Arc {
    to: usize,
    cap: u32,
}

/// Residual network with paired forward/backward arcs.
struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork { arcs: Vec::new(), out: vec![Vec::new(); nodes] }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0 });
    }

    /// Edmonds–Karp; returns the flow value.
    fn max_flow(&mut self, source: usize, sink: usize) -> usize {
        let mut flow = 0;
        loop {
            let mut via = vec![usize::MAX; self.out.len()];
            let mut seen = vec![false; self.out.len()];
            seen[source] = true;
            let mut queue = VecDeque::from([source]);
            while let Some(u) = queue.pop_front() {
                if u == sink {
                    break;
                }
                for &a in &self.out[u] {
                    let v = self.arcs[a].to;
                    if self.arcs[a].cap > 0 && !seen[v] {
                        seen[v] = true;
                        via[v] = a;
                        queue.push_back(v);
                    }
                }
            }
            if !seen[sink] {
                return flow;
            }
            let mut bottleneck = u32::MAX;
            let mut v = sink;
            while v != source {
                let a = via[v];
                bottleneck = bottleneck.min(self.arcs[a].cap);
                v = self.arcs[a ^ 1].to;
            }
            let mut v = sink;
            while v != source {
                let a = via[v];
                self.arcs[a].cap -= bottleneck;
                self.arcs[a ^ 1].cap += bottleneck;
                v = self.arcs[a ^ 1].to;
            }
            flow += bottleneck as usize;
        }
    }

    fn residual_reachable(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[source] = true;
        let mut stack = vec![source];
        while let Some(u) = stack.pop() {
            for &a in &self.out[u] {
                let v = self.arcs[a].to;
                if self.arcs[a].cap > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }
}

/// Minimum set of vertices other than `s` and `t` whose removal disconnects them.
///
/// Each vertex `v` is split into `v_in -> v_out` with unit capacity; graph
/// edges become uncapacitated arcs `u_out -> v_in` in both directions. The cut
/// vertices are those whose `v_in` is reachable in the final residual network
/// and whose `v_out` is not. Its size equals the number of internally
/// vertex-disjoint `s`-`t` paths.
pub fn min_st_vertex_cut(g: &SimpleGraph, s: usize, t: usize) -> Result<Vec<usize>, SolveError> {
    let n = g.vertex_count();
    if s >= n || t >= n || s == t {
        return Err(SolveError::InvalidInput(format!("bad cut endpoints s = {s}, t = {t}")));
    }
    if g.has_edge(s, t) {
        return Err(SolveError::Infeasible(format!(
            "s = {s} and t = {t} are adjacent, no vertex cut exists"
        )));
    }
    let big = n as u32 + 1;
    let (vin, vout) = (|v: usize| 2 * v, |v: usize| 2 * v + 1);
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        let cap = if v == s || v == t { big } else { 1 };
        net.add_arc(vin(v), vout(v), cap);
    }
    for (u, v) in g.edges() {
        net.add_arc(vout(u), vin(v), big);
        net.add_arc(vout(v), vin(u), big);
    }
    let flow = net.max_flow(vout(s), vin(t));
    let reach = net.residual_reachable(vout(s));
    let cut: Vec<usize> = (0..n).filter(|&v| reach[vin(v)] && !reach[vout(v)]).collect();
    debug_assert_eq!(cut.len(), flow);
    Ok(cut)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn examples() {
        assert_eq!(min_st_vertex_cut(&Graph::path(3).unwrap(), 0, 2).unwrap(), vec![1]);
        // s=0, a=1, b=2, t=3
        let two = SimpleGraph::new(4, [(0, 1), (1, 3), (0, 2), (2, 3)]).unwrap();
        assert_eq!(min_st_vertex_cut(&two, 0, 3).unwrap(), vec![1, 2]);
        assert_eq!(min_st_vertex_cut(&Graph::cycle(4).unwrap(), 0, 2).unwrap(), vec![1, 3]);
    }

    #[test]
    fn adjacent_endpoints() {
        let err = min_st_vertex_cut(&Graph::path(2).unwrap(), 0, 1).unwrap_err();
        assert!(err.is_infeasible());
    }

    #[test]
    fn bottleneck_vertex() {
        // Two triangles joined at vertex 2.
        let g = SimpleGraph::new(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(min_st_vertex_cut(&g, 0, 4).unwrap(), vec![2]);
    }
}

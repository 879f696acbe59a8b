//! Undirected simple graphs, BFS distances, rooted trees and centroids.

use std::collections::VecDeque;
use std::sync::OnceLock;

use crate::error::GraphError;

/// A simple undirected graph on vertices `0..n`, not necessarily connected.
///
/// Adjacency lists are kept sorted so edge queries are a binary search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl SimpleGraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        SimpleGraph { adj: vec![Vec::new(); n], edge_count: 0 }
    }

    /// Builds a graph rejecting self-loops, duplicate edges and out-of-range ids.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = SimpleGraph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.adj.len();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => return Err(GraphError::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => self.adj[u].insert(pos, v),
        }
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        self.edge_count += 1;
        Ok(())
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> SimpleGraph {
        let n = self.vertex_count();
        let mut adj = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, row) in adj.iter_mut().enumerate() {
            for v in 0..n {
                if u != v && !self.has_edge(u, v) {
                    row.push(v);
                    if u < v {
                        edge_count += 1;
                    }
                }
            }
        }
        SimpleGraph { adj, edge_count }
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            local[v] = i;
        }
        let mut adj = vec![Vec::new(); vertices.len()];
        let mut edge_count = 0;
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = local[w];
                if j != usize::MAX {
                    adj[i].push(j);
                    if i < j {
                        edge_count += 1;
                    }
                }
            }
            adj[i].sort_unstable();
        }
        SimpleGraph { adj, edge_count }
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        n > 0 && self.is_connected_subset(&vec![true; n])
    }

    /// True iff the members of `mask` induce a nonempty connected subgraph.
    pub fn is_connected_subset(&self, mask: &[bool]) -> bool {
        let Some(start) = mask.iter().position(|&m| m) else {
            return false;
        };
        let total = mask.iter().filter(|&&m| m).count();
        let mut seen = vec![false; self.vertex_count()];
        seen[start] = true;
        let mut stack = vec![start];
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if mask[v] && !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == total
    }

    /// Proper 2-coloring if one exists. Each component's smallest vertex goes left.
    pub fn two_coloring(&self) -> Option<Bipartition> {
        let n = self.vertex_count();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &v in &self.adj[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for (v, c) in color.into_iter().enumerate() {
            if c == Some(false) {
                left.push(v)
            } else {
                right.push(v)
            }
        }
        Some(Bipartition { left, right })
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u == v || self.has_edge(u, v)))
    }
}

/// Two sides of a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl Bipartition {
    /// Per-vertex side (`false` = left), checking the partition is proper.
    pub fn sides(&self, g: &SimpleGraph) -> Result<Vec<bool>, GraphError> {
        let n = g.vertex_count();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for (list, s) in [(&self.left, false), (&self.right, true)] {
            for &v in list {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
                if side[v].is_some() {
                    return Err(GraphError::InvalidBipartition(format!("vertex {v} listed twice")));
                }
                side[v] = Some(s);
            }
        }
        let side: Vec<bool> = side
            .into_iter()
            .enumerate()
            .map(|(v, s)| {
                s.ok_or_else(|| GraphError::InvalidBipartition(format!("vertex {v} not listed")))
            })
            .collect::<Result<_, _>>()?;
        if let Some((u, v)) = g.edges().find(|&(u, v)| side[u] == side[v]) {
            return Err(GraphError::InvalidBipartition(format!("edge {u}-{v} inside one side")));
        }
        Ok(side)
    }
}

/// Hop distances from `source` to every vertex; unreachable vertices get `usize::MAX`.
pub fn bfs_distances(g: &SimpleGraph, source: usize) -> Result<Vec<usize>, GraphError> {
    let n = g.vertex_count();
    if source >= n {
        return Err(GraphError::VertexOutOfRange { vertex: source, n });
    }
    let mut dist = vec![usize::MAX; n];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    Ok(dist)
}

/// A connected simple graph with a memoized all-sources distance cache.
///
/// The cache is filled lazily per source and is safe to share across threads.
#[derive(Debug, Clone)]
pub struct Graph {
    structure: SimpleGraph,
    dist: Vec<OnceLock<Vec<usize>>>,
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Graph::from_simple(SimpleGraph::new(n, edges)?)
    }

    pub fn from_simple(structure: SimpleGraph) -> Result<Self, GraphError> {
        if structure.vertex_count() == 0 {
            return Err(GraphError::Empty);
        }
        if !structure.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let dist = (0..structure.vertex_count()).map(|_| OnceLock::new()).collect();
        Ok(Graph { structure, dist })
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        Graph::new(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn star(leaves: usize) -> Result<Self, GraphError> {
        Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v)))
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    #[inline]
    pub fn structure(&self) -> &SimpleGraph {
        &self.structure
    }

    pub fn into_structure(self) -> SimpleGraph {
        self.structure
    }

    /// Distances from `source`, computed once and cached.
    pub fn distances_from(&self, source: usize) -> &[usize] {
        self.dist[source].get_or_init(|| {
            bfs_distances(&self.structure, source).expect("source checked by caller")
        })
    }

    #[inline]
    pub fn distance(&self, u: usize, v: usize) -> usize {
        self.distances_from(u)[v]
    }

    pub fn diameter(&self) -> usize {
        (0..self.vertex_count())
            .map(|u| self.distances_from(u).iter().copied().max().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.vertex_count()
    }

    /// A path graph is a tree whose maximum degree is at most two.
    pub fn is_path(&self) -> bool {
        self.is_tree() && (0..self.vertex_count()).all(|v| self.degree(v) <= 2)
    }
}

impl std::ops::Deref for Graph {
    type Target = SimpleGraph;

    fn deref(&self) -> &SimpleGraph {
        &self.structure
    }
}

/// A tree (or a connected piece of one) rooted at a chosen vertex.
///
/// Vertices carry local indices `0..len` in BFS order with the root at `0`;
/// `global` maps them back to ids of the host graph.
#[derive(Debug, Clone)]
pub struct RootedTree {
    global: Vec<usize>,
    local: Vec<usize>,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    depth: Vec<usize>,
    post_order: Vec<usize>,
}

impl RootedTree {
    /// Roots the whole graph at `root`; fails unless the graph is a tree.
    pub fn new(g: &Graph, root: usize) -> Result<Self, GraphError> {
        if !g.is_tree() {
            return Err(GraphError::NotATree);
        }
        if root >= g.vertex_count() {
            return Err(GraphError::VertexOutOfRange { vertex: root, n: g.vertex_count() });
        }
        Ok(RootedTree::spanning(g.structure(), root, |_| true))
    }

    /// Roots the component of `root` inside the vertices accepted by `allowed`.
    ///
    /// The host graph must be a forest on the allowed vertices.
    pub fn spanning<F>(g: &SimpleGraph, root: usize, allowed: F) -> Self
    where
        F: Fn(usize) -> bool,
    {
        let mut local = vec![usize::MAX; g.vertex_count()];
        let mut global = vec![root];
        let mut parent = vec![None];
        let mut depth = vec![0];
        local[root] = 0;
        let mut head = 0;
        while head < global.len() {
            let u = global[head];
            for &v in g.neighbors(u) {
                if allowed(v) && local[v] == usize::MAX {
                    local[v] = global.len();
                    global.push(v);
                    parent.push(Some(head));
                    depth.push(depth[head] + 1);
                }
            }
            head += 1;
        }
        let mut children = vec![Vec::new(); global.len()];
        for (v, p) in parent.iter().enumerate() {
            if let Some(p) = *p {
                children[p].push(v);
            }
        }
        // Reverse BFS order puts every child before its parent.
        let post_order = (0..global.len()).rev().collect();
        RootedTree { global, local, parent, children, depth, post_order }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.global.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.global.is_empty()
    }

    #[inline]
    pub fn root(&self) -> usize {
        self.global[0]
    }

    #[inline]
    pub fn global(&self, local: usize) -> usize {
        self.global[local]
    }

    pub fn globals(&self) -> &[usize] {
        &self.global
    }

    /// Local index of a host vertex, if it belongs to this tree.
    #[inline]
    pub fn local(&self, global: usize) -> Option<usize> {
        match self.local.get(global) {
            Some(&l) if l != usize::MAX => Some(l),
            _ => None,
        }
    }

    #[inline]
    pub fn parent(&self, local: usize) -> Option<usize> {
        self.parent[local]
    }

    #[inline]
    pub fn children(&self, local: usize) -> &[usize] {
        &self.children[local]
    }

    #[inline]
    pub fn depth(&self, local: usize) -> usize {
        self.depth[local]
    }

    pub fn post_order(&self) -> &[usize] {
        &self.post_order
    }

    /// Number of vertices in each subtree, by local index.
    pub fn subtree_sizes(&self) -> Vec<usize> {
        let mut size = vec![1; self.len()];
        for &v in &self.post_order {
            if let Some(p) = self.parent[v] {
                size[p] += size[v];
            }
        }
        size
    }

    /// Host id of a centroid: the vertex minimizing the largest component left
    /// after its removal, smallest host id among ties.
    pub fn centroid(&self) -> usize {
        let n = self.len();
        let size = self.subtree_sizes();
        let mut best = (usize::MAX, usize::MAX);
        for v in 0..n {
            let below = self.children[v].iter().map(|&c| size[c]).max().unwrap_or(0);
            let worst = below.max(n - size[v]);
            best = best.min((worst, self.global[v]));
        }
        best.1
    }
}

/// Centroid of a tree graph, smallest vertex id among ties.
pub fn centroid(g: &Graph) -> Result<usize, GraphError> {
    Ok(RootedTree::new(g, 0)?.centroid())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn floyd_warshall(g: &SimpleGraph) -> Vec<Vec<usize>> {
        let n = g.vertex_count();
        let inf = usize::MAX / 4;
        let mut d = vec![vec![inf; n]; n];
        for (u, row) in d.iter_mut().enumerate() {
            row[u] = 0;
            for &v in g.neighbors(u) {
                row[v] = 1;
            }
        }
        for w in 0..n {
            for u in 0..n {
                for v in 0..n {
                    d[u][v] = d[u][v].min(d[u][w] + d[w][v]);
                }
            }
        }
        d
    }

    fn components_without(g: &SimpleGraph, removed: usize) -> Vec<usize> {
        let n = g.vertex_count();
        let mut seen = vec![false; n];
        seen[removed] = true;
        let mut sizes = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut count = 0;
            while let Some(u) = stack.pop() {
                count += 1;
                for &v in g.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            sizes.push(count);
        }
        sizes
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(SimpleGraph::new(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(SimpleGraph::new(3, [(0, 1), (1, 0)]), Err(GraphError::DuplicateEdge(0, 1)));
        assert!(matches!(SimpleGraph::new(2, [(0, 2)]), Err(GraphError::VertexOutOfRange { .. })));
        assert!(matches!(Graph::new(3, [(0, 1)]), Err(GraphError::Disconnected)));
        assert!(matches!(Graph::new(0, []), Err(GraphError::Empty)));
    }

    #[test]
    fn bfs_examples() {
        let p = Graph::path(3).unwrap();
        assert_eq!(bfs_distances(&p, 0).unwrap(), vec![0, 1, 2]);
        let s = Graph::star(3).unwrap();
        assert_eq!(bfs_distances(&s, 1).unwrap(), vec![1, 0, 2, 2]);
        assert_eq!(floyd_warshall(&s)[1], vec![1, 0, 2, 2]);
        assert!(bfs_distances(&s, 4).is_err());
        let c = Graph::cycle(6).unwrap();
        let fw = floyd_warshall(&c);
        for (u, row) in fw.iter().enumerate() {
            assert_eq!(c.distances_from(u), row.as_slice());
            assert_eq!(c.distance(u, u), 0);
        }
        assert_eq!(c.diameter(), 3);
    }

    #[test]
    fn connected_subsets() {
        let p = Graph::path(3).unwrap();
        assert!(p.is_connected_subset(&[true, true, false]));
        assert!(!p.is_connected_subset(&[true, false, true]));
        assert!(!p.is_connected_subset(&[false, false, false]));
        let s = Graph::star(3).unwrap();
        assert!(!s.is_connected_subset(&[false, true, true, true]));
    }

    #[test]
    fn centroid_examples() {
        assert_eq!(centroid(&Graph::path(3).unwrap()).unwrap(), 1);
        assert_eq!(centroid(&Graph::path(1).unwrap()).unwrap(), 0);
        assert_eq!(centroid(&Graph::path(4).unwrap()).unwrap(), 1);
        assert_eq!(centroid(&Graph::star(5).unwrap()).unwrap(), 0);
        assert_eq!(centroid(&Graph::cycle(4).unwrap()), Err(GraphError::NotATree));
    }

    #[test]
    fn centroid_bound_on_random_trees() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 1..40 {
            let t = crate::random::random_tree(n, &mut rng);
            let c = centroid(&t).unwrap();
            assert!(components_without(&t, c).into_iter().all(|s| s <= n / 2), "n={n}");
        }
    }

    #[test]
    fn rooted_tree_orders() {
        let g = Graph::new(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let t = RootedTree::new(&g, 1).unwrap();
        assert_eq!(t.root(), 1);
        let mut seen = vec![false; t.len()];
        for &v in t.post_order() {
            assert!(t.children(v).iter().all(|&c| seen[c]));
            seen[v] = true;
        }
        assert_eq!(t.subtree_sizes()[0], 5);
        assert_eq!(t.depth(t.local(4).unwrap()), 2);
        let part = RootedTree::spanning(&g, 3, |v| v != 1);
        assert_eq!(part.len(), 2);
        assert_eq!(part.local(0), None);
    }

    #[test]
    fn two_coloring_detects_odd_cycles() {
        assert!(Graph::cycle(6).unwrap().is_bipartite());
        assert!(!Graph::cycle(5).unwrap().is_bipartite());
        let b = Graph::path(4).unwrap().two_coloring().unwrap();
        assert_eq!(b.left, vec![0, 2]);
        assert!(b.sides(&Graph::path(4).unwrap()).is_ok());
        let bad = Bipartition { left: vec![0, 1], right: vec![2, 3] };
        assert!(bad.sides(&Graph::path(4).unwrap()).is_err());
    }

    #[test]
    fn complement_and_induced() {
        let p = Graph::path(4).unwrap();
        let c = p.complement();
        assert_eq!(c.edge_count(), 3);
        assert!(c.has_edge(0, 2) && c.has_edge(0, 3) && c.has_edge(1, 3));
        let h = p.induced(&[1, 2, 3]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }
}

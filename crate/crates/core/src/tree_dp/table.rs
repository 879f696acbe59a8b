use crate::graph::RootedTree;
use crate::instance::Solution;
use crate::num::CostValue;
use crate::tree_dp::distribution::DistributionTable;
use crate::Cost;

/// Start-position statistics of a rooted tree, indexed by local vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PebbleCensus {
    /// Pebbles starting anywhere in the subtree of `u`.
    pub eta: Vec<usize>,
    /// Pebbles starting exactly on `u`.
    pub phi: Vec<usize>,
    /// Whether `u` starts with at least one pebble.
    pub gamma: Vec<bool>,
}

impl PebbleCensus {
    /// `starts` are local vertex indices of the pebbles that begin inside the tree.
    pub fn new<I: IntoIterator<Item = usize>>(tree: &RootedTree, starts: I) -> Self {
        let mut phi = vec![0; tree.len()];
        for s in starts {
            phi[s] += 1;
        }
        let mut eta = phi.clone();
        for &u in tree.post_order() {
            if let Some(p) = tree.parent(u) {
                eta[p] += eta[u];
            }
        }
        let gamma = phi.iter().map(|&f| f >= 1).collect();
        PebbleCensus { eta, phi, gamma }
    }
}

/// Cost tables of a tree DP with the back-pointers needed for reconstruction.
///
/// `opt[u][j]` is the best cost for the subtree of local vertex `u` when it
/// ends with exactly `j` pebbles. The independent-set programs additionally
/// keep the split into "u occupied" and "u empty" rows.
#[derive(Debug, Clone)]
pub struct DpTable<C> {
    pub(crate) k: usize,
    pub(crate) opt: Vec<Vec<C>>,
    pub(crate) plus: Vec<Vec<C>>,
    pub(crate) minus: Vec<Vec<C>>,
    /// Pebbles kept on `u` itself in the chosen optimum for `(u, j)`.
    pub(crate) held: Vec<Vec<usize>>,
    /// Distribution over the children's `opt` rows.
    pub(crate) spread: Vec<DistributionTable<C>>,
    /// Distribution over the children's `minus` rows (independent-set only).
    pub(crate) spread_minus: Vec<DistributionTable<C>>,
}

impl<C: CostValue> DpTable<C> {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.opt.len()
    }

    pub fn opt(&self, u: usize, j: usize) -> C {
        self.opt[u][j]
    }

    pub fn row(&self, u: usize) -> &[C] {
        &self.opt[u]
    }

    /// `u` occupied; `None` for the connected programs.
    pub fn opt_plus(&self, u: usize, j: usize) -> Option<C> {
        self.plus.get(u).map(|r| r[j])
    }

    /// `u` empty; `None` for the connected programs.
    pub fn opt_minus(&self, u: usize, j: usize) -> Option<C> {
        self.minus.get(u).map(|r| r[j])
    }

    pub fn held(&self, u: usize, j: usize) -> usize {
        self.held[u][j]
    }

    pub fn is_split(&self) -> bool {
        !self.plus.is_empty()
    }

    /// Final pebble count per local vertex for the optimum at the root with `k` pebbles.
    pub(crate) fn end_counts(&self, tree: &RootedTree) -> Vec<usize> {
        #[derive(Clone, Copy)]
        enum Want {
            Any,
            Empty,
        }
        let mut counts = vec![0; tree.len()];
        let mut stack = vec![(0usize, self.k, Want::Any)];
        while let Some((u, j, want)) = stack.pop() {
            let children = tree.children(u);
            if !self.is_split() {
                let z = self.held[u][j];
                counts[u] = z;
                for (&c, x) in children.iter().zip(self.spread[u].allocation(j - z)) {
                    stack.push((c, x, Want::Any));
                }
                continue;
            }
            let occupied = match want {
                Want::Any => self.held[u][j] == 1,
                Want::Empty => false,
            };
            if occupied {
                counts[u] = 1;
                for (&c, x) in children.iter().zip(self.spread_minus[u].allocation(j - 1)) {
                    stack.push((c, x, Want::Empty));
                }
            } else {
                for (&c, x) in children.iter().zip(self.spread[u].allocation(j)) {
                    stack.push((c, x, Want::Any));
                }
            }
        }
        counts
    }
}

/// Amount of pebbles crossing one tree edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeFlow {
    pub child: usize,
    pub parent: usize,
    /// Pebbles that start below the edge, after relocation.
    pub pebbles_below: usize,
    /// Pebbles the optimum places below the edge.
    pub allotted_below: usize,
}

/// Everything a tree solver decided, in host vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePlan {
    /// Root of the tree the winning table was computed on.
    pub root: usize,
    /// Vertices of that tree (a component left by the centroid recursion).
    pub vertices: Vec<usize>,
    /// Cost of first moving pebbles from outside that tree to its root's side.
    pub relocation_cost: Cost,
    /// Optimal table value at the root.
    pub dp_cost: Cost,
    pub flows: Vec<EdgeFlow>,
    pub solution: Solution,
}

impl TreePlan {
    /// Sum over the edges of the net number of pebbles crossing them.
    pub fn flow_cost(&self) -> Cost {
        self.flows.iter().map(|f| f.pebbles_below.abs_diff(f.allotted_below) as Cost).sum()
    }

    pub fn total(&self) -> Cost {
        self.relocation_cost + self.dp_cost
    }
}

/// How the final positions are charged, which decides how pebbles are routed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Charge {
    Distance,
    Moves,
}

/// Assigns pebbles to the per-vertex end counts.
///
/// `starts[p]` is the local start of pebble `p`, `None` if it begins outside
/// the tree. Under `Distance` every start must be inside and pebbles are
/// matched bottom-up so that no edge is crossed in both directions. Under
/// `Moves` pebbles keep their start vertex while it still has room.
pub(crate) fn assign_ends(
    tree: &RootedTree,
    starts: &[Option<usize>],
    counts: &[usize],
    charge: Charge,
) -> Vec<usize> {
    let mut end = vec![usize::MAX; starts.len()];
    match charge {
        Charge::Distance => {
            let mut waiting: Vec<Vec<usize>> = vec![Vec::new(); tree.len()];
            for (p, s) in starts.iter().enumerate() {
                waiting[s.expect("distance routing needs every start inside")].push(p);
            }
            let mut surplus: Vec<Vec<usize>> = vec![Vec::new(); tree.len()];
            let mut deficit: Vec<Vec<usize>> = vec![Vec::new(); tree.len()];
            for &u in tree.post_order() {
                let mut pebbles = std::mem::take(&mut waiting[u]);
                let mut slots = vec![u; counts[u]];
                for &c in tree.children(u) {
                    pebbles.append(&mut surplus[c]);
                    slots.append(&mut deficit[c]);
                }
                while !pebbles.is_empty() && !slots.is_empty() {
                    let p = pebbles.pop().unwrap();
                    end[p] = slots.pop().unwrap();
                }
                surplus[u] = pebbles;
                deficit[u] = slots;
            }
            debug_assert!(surplus[0].is_empty() && deficit[0].is_empty());
        }
        Charge::Moves => {
            let mut room = counts.to_vec();
            for (p, s) in starts.iter().enumerate() {
                if let Some(s) = *s {
                    if room[s] > 0 {
                        room[s] -= 1;
                        end[p] = s;
                    }
                }
            }
            let mut next = 0;
            for slot in end.iter_mut().filter(|e| **e == usize::MAX) {
                while room[next] == 0 {
                    next += 1;
                }
                room[next] -= 1;
                *slot = next;
            }
        }
    }
    end
}

/// Builds the plan for an optimum found on `tree`.
pub(crate) fn make_plan<C: CostValue>(
    tree: &RootedTree,
    table: &DpTable<C>,
    census: &PebbleCensus,
    starts: &[Option<usize>],
    relocation_cost: Cost,
    charge: Charge,
) -> TreePlan {
    let counts = table.end_counts(tree);
    let ends = assign_ends(tree, starts, &counts, charge);
    let mut below = counts.clone();
    for &u in tree.post_order() {
        if let Some(p) = tree.parent(u) {
            below[p] += below[u];
        }
    }
    let flows = (1..tree.len())
        .map(|u| EdgeFlow {
            child: tree.global(u),
            parent: tree.global(tree.parent(u).unwrap()),
            pebbles_below: census.eta[u],
            allotted_below: below[u],
        })
        .collect();
    TreePlan {
        root: tree.root(),
        vertices: tree.globals().to_vec(),
        relocation_cost,
        dp_cost: table.opt(0, table.k).finite_u64().expect("plan built from a finite optimum"),
        flows,
        solution: Solution::new(ends.into_iter().map(|e| tree.global(e)).collect()),
    }
}

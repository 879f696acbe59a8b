use crate::error::SolveError;
use crate::graph::SimpleGraph;
use crate::instance::{Goal, Guarantee, Instance, Measure, Solution, SolveReport};
use crate::primitives::{clique_weight, max_weight_clique, vertex_cover_2approx};
use crate::{Cost, Ratio};

/// Largest graph on which [`exact_clique_num_mwc`] runs its exponential search.
pub const MWC_VERTEX_LIMIT: usize = 40;

fn require_clique(inst: &Instance) -> Result<(), SolveError> {
    if inst.goal() != Goal::Clique {
        return Err(SolveError::GoalMismatch { expected: "clique", found: inst.goal().name() });
    }
    Ok(())
}

/// The graph in which every vertex holding `φ > 1` pebbles is blown up into
/// a `φ`-clique, so that each pebble gets a start vertex of its own.
#[derive(Debug, Clone)]
pub struct CliqueExpansion {
    pub graph: SimpleGraph,
    /// Original vertex of each expanded vertex.
    pub vertex_origin: Vec<usize>,
    /// Injective start map into the expanded graph.
    pub sigma: Vec<usize>,
}

impl CliqueExpansion {
    pub fn new(g: &SimpleGraph, sigma: &[usize]) -> Self {
        let n = g.vertex_count();
        let mut phi = vec![0usize; n];
        for &s in sigma {
            phi[s] += 1;
        }
        let mut copies: Vec<Vec<usize>> = Vec::with_capacity(n);
        let mut vertex_origin = Vec::new();
        for (v, &f) in phi.iter().enumerate() {
            let first = vertex_origin.len();
            vertex_origin.extend(std::iter::repeat_n(v, f.max(1)));
            copies.push((first..vertex_origin.len()).collect());
        }
        let mut graph = SimpleGraph::empty(vertex_origin.len());
        for c in &copies {
            for (i, &a) in c.iter().enumerate() {
                for &b in &c[i + 1..] {
                    graph.add_edge(a, b).expect("fresh copy pair");
                }
            }
        }
        for (u, v) in g.edges() {
            for &a in &copies[u] {
                for &b in &copies[v] {
                    graph.add_edge(a, b).expect("fresh lifted edge");
                }
            }
        }
        let mut used = vec![0usize; n];
        let sigma = sigma
            .iter()
            .map(|&s| {
                used[s] += 1;
                copies[s][used[s] - 1]
            })
            .collect();
        CliqueExpansion { graph, vertex_origin, sigma }
    }
}

/// End vertices of the vertex-cover based Clique-Num heuristic on `g`.
fn clique_num_ends(g: &SimpleGraph, sigma: &[usize]) -> Vec<usize> {
    let ex = CliqueExpansion::new(g, sigma);
    let mut pebbled = ex.sigma.clone();
    pebbled.sort_unstable();
    let h = ex.graph.induced(&pebbled);
    let cover = vertex_cover_2approx(&h.complement());
    let mut in_cover = vec![false; pebbled.len()];
    for &c in &cover {
        in_cover[c] = true;
    }
    let keep: Vec<usize> = (0..pebbled.len()).filter(|&i| !in_cover[i]).map(|i| pebbled[i]).collect();
    match keep.first() {
        Some(&hub) => {
            let mut on_keep = vec![false; ex.graph.vertex_count()];
            for &q in &keep {
                on_keep[q] = true;
            }
            ex.sigma
                .iter()
                .map(|&s| ex.vertex_origin[if on_keep[s] { s } else { hub }])
                .collect()
        }
        None => {
            // The cover took every pebbled vertex; gather at the fullest start.
            let mut phi = vec![0usize; g.vertex_count()];
            for &s in sigma {
                phi[s] += 1;
            }
            let hub = (0..phi.len()).max_by_key(|&v| (phi[v], std::cmp::Reverse(v))).unwrap();
            vec![hub; sigma.len()]
        }
    }
}

/// Clique-Num within a factor 2: keep the pebbles on the complement of a
/// 2-approximate vertex cover of the non-adjacency graph of the starts.
pub fn approx_clique_num(inst: &Instance) -> Result<SolveReport, SolveError> {
    require_clique(inst)?;
    let mu = clique_num_ends(inst.graph(), inst.sigma());
    Ok(SolveReport::new(
        inst,
        Solution::new(mu),
        Measure::Num,
        Guarantee::Factor(Ratio::from_integer(2)),
        "approx-clique-num",
    ))
}

/// Exact Clique-Num via a maximum clique weighted by start counts, guarded
/// at [`MWC_VERTEX_LIMIT`] vertices.
pub fn exact_clique_num_mwc(inst: &Instance) -> Result<SolveReport, SolveError> {
    let n = inst.vertex_count();
    if n > MWC_VERTEX_LIMIT {
        return Err(SolveError::GuardExceeded {
            what: "vertex count for maximum weight clique",
            value: n as u128,
            limit: MWC_VERTEX_LIMIT as u128,
        });
    }
    exact_clique_num_mwc_unguarded(inst)
}

/// [`exact_clique_num_mwc`] without the size guard.
pub fn exact_clique_num_mwc_unguarded(inst: &Instance) -> Result<SolveReport, SolveError> {
    require_clique(inst)?;
    let phi: Vec<u64> = inst.start_counts().iter().map(|&f| f as u64).collect();
    let q = max_weight_clique(inst.graph(), &phi);
    let hub = q[0];
    let mut inside = vec![false; inst.vertex_count()];
    for &v in &q {
        inside[v] = true;
    }
    let mu = inst.sigma().iter().map(|&s| if inside[s] { s } else { hub }).collect();
    let r = SolveReport::new(inst, Solution::new(mu), Measure::Num, Guarantee::Exact, "exact-clique-num-mwc");
    debug_assert_eq!(r.cost, inst.pebble_count() as Cost - clique_weight(&q, &phi));
    Ok(r)
}

/// Clique-Max within one of the optimum: gather everything on the best single vertex.
pub fn approx_clique_max(inst: &Instance) -> Result<SolveReport, SolveError> {
    require_clique(inst)?;
    let g = inst.graph();
    let hub = (0..inst.vertex_count())
        .min_by_key(|&u| {
            let d = g.distances_from(u);
            inst.sigma().iter().map(|&s| d[s]).max().unwrap_or(0)
        })
        .expect("graphs are nonempty");
    Ok(SolveReport::new(
        inst,
        Solution::new(vec![hub; inst.pebble_count()]),
        Measure::Max,
        Guarantee::AdditivePlusOne,
        "approx-clique-max",
    ))
}

/// Clique-Sum within a factor 2.
///
/// Candidates: everything on one vertex `u`; and, for each start vertex `u`,
/// pebbles on or far from `u` go to `u` while the neighbours of `u` run the
/// Clique-Num heuristic restricted to `u` and their own start vertices.
pub fn approx_clique_sum(inst: &Instance) -> Result<SolveReport, SolveError> {
    require_clique(inst)?;
    let g = inst.graph();
    let sigma = inst.sigma();
    let mut best: Option<(Cost, Vec<usize>)> = None;
    let mut offer = |mu: Vec<usize>| {
        let cost = inst.solution_cost(&Solution::new(mu.clone()), Measure::Sum);
        if best.as_ref().is_none_or(|(b, _)| cost < *b) {
            best = Some((cost, mu));
        }
    };
    for u in 0..g.vertex_count() {
        offer(vec![u; sigma.len()]);
    }
    let phi = inst.start_counts();
    for u in (0..g.vertex_count()).filter(|&u| phi[u] > 0) {
        let near: Vec<usize> = (0..sigma.len()).filter(|&p| g.has_edge(u, sigma[p])).collect();
        if near.is_empty() {
            continue;
        }
        let mut vertices: Vec<usize> = near.iter().map(|&p| sigma[p]).collect();
        vertices.push(u);
        vertices.sort_unstable();
        vertices.dedup();
        let local = |v: usize| vertices.binary_search(&v).unwrap();
        let sub = g.induced(&vertices);
        let sub_sigma: Vec<usize> = near.iter().map(|&p| local(sigma[p])).collect();
        let ends = clique_num_ends(&sub, &sub_sigma);
        let mut mu = vec![u; sigma.len()];
        for (i, &p) in near.iter().enumerate() {
            if ends[i] == sub_sigma[i] {
                mu[p] = sigma[p];
            }
        }
        offer(mu);
    }
    let (_, mu) = best.expect("at least one candidate");
    Ok(SolveReport::new(
        inst,
        Solution::new(mu),
        Measure::Sum,
        Guarantee::Factor(Ratio::from_integer(2)),
        "approx-clique-sum",
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn clique(g: Graph, sigma: Vec<usize>) -> Instance {
        Instance::new(g, sigma, Goal::Clique).unwrap()
    }

    #[test]
    fn expansion_shape() {
        let p3 = Graph::path(3).unwrap();
        let ex = CliqueExpansion::new(&p3, &[0, 0, 2]);
        assert_eq!(ex.vertex_origin, vec![0, 0, 1, 2]);
        assert_eq!(ex.sigma, vec![0, 1, 3]);
        assert!(ex.graph.has_edge(0, 1) && ex.graph.has_edge(0, 2) && ex.graph.has_edge(1, 2));
        assert!(!ex.graph.has_edge(0, 3));
        assert_eq!(ex.graph.edge_count(), 4);
    }

    #[test]
    fn clique_max_examples() {
        assert_eq!(approx_clique_max(&clique(Graph::complete(3).unwrap(), vec![0, 1, 2])).unwrap().cost, 1);
        assert_eq!(approx_clique_max(&clique(Graph::path(4).unwrap(), vec![2, 2])).unwrap().cost, 0);
        assert_eq!(approx_clique_max(&clique(Graph::path(3).unwrap(), vec![0, 2])).unwrap().cost, 1);
    }

    #[test]
    fn clique_num_examples() {
        let r = approx_clique_num(&clique(Graph::path(3).unwrap(), vec![0, 2])).unwrap();
        assert!(r.cost <= 2);
        assert_eq!(approx_clique_num(&clique(Graph::path(3).unwrap(), vec![0, 1])).unwrap().cost, 0);
        assert_eq!(approx_clique_num(&clique(Graph::complete(3).unwrap(), vec![0, 1, 2])).unwrap().cost, 0);
        let inst = clique(Graph::path(3).unwrap(), vec![0, 0, 2]);
        let r = approx_clique_num(&inst).unwrap();
        assert!(inst.validate(&r.solution));
    }

    #[test]
    fn mwc_examples() {
        assert_eq!(exact_clique_num_mwc(&clique(Graph::path(3).unwrap(), vec![0, 0, 2])).unwrap().cost, 1);
        assert_eq!(exact_clique_num_mwc(&clique(Graph::path(3).unwrap(), vec![1, 2])).unwrap().cost, 0);
        assert_eq!(exact_clique_num_mwc(&clique(Graph::complete(3).unwrap(), vec![0, 0, 1])).unwrap().cost, 0);
        let big = clique(Graph::path(41).unwrap(), vec![0]);
        assert!(matches!(exact_clique_num_mwc(&big), Err(SolveError::GuardExceeded { .. })));
        assert_eq!(exact_clique_num_mwc_unguarded(&big).unwrap().cost, 0);
    }

    #[test]
    fn clique_sum_examples() {
        let r = approx_clique_sum(&clique(Graph::path(3).unwrap(), vec![0, 2])).unwrap();
        assert!(r.cost <= 2);
        assert_eq!(approx_clique_sum(&clique(Graph::complete(4).unwrap(), vec![0, 1, 3])).unwrap().cost, 0);
        // The optimum is 2 (two leaves join the centre next to the third);
        // both candidate families pay 3 here.
        assert_eq!(approx_clique_sum(&clique(Graph::star(3).unwrap(), vec![1, 2, 3])).unwrap().cost, 3);
    }
}

use crate::error::GadgetError;
use crate::gadgets::{Builder, Cnf3, GadgetInstance, Label};
use crate::instance::{Goal, Measure};

/// s-t vertex cut reduction from 3-SAT with long paths of `h` edges.
///
/// Variable `i` is the path `x_i - u_i - ~x_i`, clause `j` the path
/// `l1 - v_j - l2 - v'_j - l3` over its three occurrences. Long paths join
/// `s` to every `x_i` and `~x_i`, `t` to every occurrence, and each
/// occurrence of `x_s` to `x_s` (of `~x_s` to `~x_s`). Pebbles sit on every
/// `u_i, v_j, v'_j`, so `k = τ + 2m`. With `h > k` the formula is satisfiable
/// iff every pebble can move at most 1 to form a cut.
pub fn gen_stcut_gadget(f: &Cnf3, h: usize) -> Result<GadgetInstance, GadgetError> {
    let tau = f.variable_count();
    let m = f.clause_count();
    let k = tau + 2 * m;
    if h <= k {
        return Err(GadgetError::PathTooShort { h, k });
    }
    let mut b = Builder::default();
    let s = b.vertex(Label::S);
    let t = b.vertex(Label::T);
    let mut pebbled = Vec::with_capacity(k);
    let mut x = Vec::with_capacity(tau);
    let mut x_bar = Vec::with_capacity(tau);
    for i in 0..tau {
        x.push(b.vertex(Label::X(i)));
        let u = b.vertex(Label::U(i));
        x_bar.push(b.vertex(Label::XBar(i)));
        b.edge(x[i], u);
        b.edge(u, x_bar[i]);
        pebbled.push(u);
    }
    let mut occurrences = Vec::with_capacity(3 * m);
    for (j, clause) in f.clauses().iter().enumerate() {
        let l: Vec<usize> =
            (0..3).map(|position| b.vertex(Label::ClauseLiteral { clause: j, position })).collect();
        let v = b.vertex(Label::ClausePebble(j));
        let v2 = b.vertex(Label::ClausePebblePrime(j));
        b.edge(l[0], v);
        b.edge(v, l[1]);
        b.edge(l[1], v2);
        b.edge(v2, l[2]);
        pebbled.extend([v, v2]);
        occurrences.extend(clause.iter().zip(l));
    }
    for i in 0..tau {
        b.long_path(s, x[i], h);
        b.long_path(s, x_bar[i], h);
    }
    for &(lit, l) in &occurrences {
        let var = lit.var - 1;
        b.long_path(l, if lit.negated { x_bar[var] } else { x[var] }, h);
        b.long_path(l, t, h);
    }
    let thresholds = vec![(Measure::Max, 1), (Measure::Sum, k as u64)];
    b.finish(pebbled, |_| Goal::StCut { s, t }, thresholds)
}

/// [`gen_stcut_gadget`] with the shortest legal paths, `h = k + 1`.
pub fn gen_stcut_gadget_default(f: &Cnf3) -> Result<GadgetInstance, GadgetError> {
    gen_stcut_gadget(f, f.variable_count() + 2 * f.clause_count() + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_clause_sizes() {
        let f = Cnf3::from_signed(3, &[[1, 2, 3], [-1, -2, 3]]).unwrap();
        assert_eq!(
            gen_stcut_gadget(&f, 7).unwrap_err(),
            GadgetError::PathTooShort { h: 7, k: 7 }
        );
        let g = gen_stcut_gadget(&f, 8).unwrap();
        assert_eq!(g.instance.pebble_count(), 7);
        assert!(g.instance.graph().is_bipartite());
        let paths = 2 * 3 + 2 * 6;
        assert_eq!(g.instance.vertex_count(), 2 + 9 + 10 + paths * 7);
    }

    #[test]
    fn bipartite_for_odd_and_even_lengths() {
        let f = Cnf3::from_signed(1, &[[1, 1, -1]]).unwrap();
        for h in 4..8 {
            assert!(gen_stcut_gadget(&f, h).unwrap().instance.graph().is_bipartite());
        }
    }
}

use crate::error::GadgetError;
use crate::gadgets::{Builder, Cnf3, GadgetInstance, Label};
use crate::instance::{Goal, Measure};

/// Independent-set reduction from 3-SAT.
///
/// Variable `i` is a star with centre `v_i` and leaves `u_i, x_i, ~x_i`;
/// clause `j` is a star with centre `z_j` and leaves `w_j` plus one vertex per
/// literal occurrence. An occurrence of `x_s` is joined to `~x_s`, an
/// occurrence of `~x_s` to `x_s`. Pebbles sit on every `u, v, w, z`, so
/// `n = 4τ + 5m` and `k = 2(τ + m)`. The formula is satisfiable iff Ind-Max
/// is at most 1, iff Ind-Sum is at most `τ + m`.
///
/// Fails with [`GadgetError::Disconnected`] when the formula does not tie
/// all variables and clauses together.
pub fn gen_ind_gadget(f: &Cnf3) -> Result<GadgetInstance, GadgetError> {
    let tau = f.variable_count();
    let m = f.clause_count();
    let mut b = Builder::default();
    let mut pebbled = Vec::with_capacity(2 * (tau + m));
    let mut x = Vec::with_capacity(tau);
    let mut x_bar = Vec::with_capacity(tau);
    for i in 0..tau {
        let u = b.vertex(Label::U(i));
        let v = b.vertex(Label::V(i));
        x.push(b.vertex(Label::X(i)));
        x_bar.push(b.vertex(Label::XBar(i)));
        b.edge(v, u);
        b.edge(v, x[i]);
        b.edge(v, x_bar[i]);
        pebbled.extend([u, v]);
    }
    for (j, clause) in f.clauses().iter().enumerate() {
        let w = b.vertex(Label::W(j));
        let z = b.vertex(Label::Z(j));
        b.edge(z, w);
        pebbled.extend([w, z]);
        for (position, lit) in clause.iter().enumerate() {
            let l = b.vertex(Label::ClauseLiteral { clause: j, position });
            b.edge(z, l);
            let s = lit.var - 1;
            b.edge(l, if lit.negated { x[s] } else { x_bar[s] });
        }
    }
    let thresholds = vec![(Measure::Max, 1), (Measure::Sum, (tau + m) as u64)];
    b.finish(pebbled, |_| Goal::Ind, thresholds)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_clause_sizes() {
        let f = Cnf3::from_signed(3, &[[-1, -2, 3], [1, 2, -3]]).unwrap();
        let g = gen_ind_gadget(&f).unwrap();
        assert_eq!(g.instance.vertex_count(), 22);
        assert_eq!(g.instance.pebble_count(), 10);
        assert!(g.instance.graph().is_bipartite());
        assert_eq!(g.threshold(Measure::Sum), Some(5));
        let l = g.vertex(Label::ClauseLiteral { clause: 0, position: 0 }).unwrap();
        assert!(g.instance.graph().has_edge(l, g.vertex(Label::X(0)).unwrap()));
    }

    #[test]
    fn unused_variable_is_rejected() {
        let f = Cnf3::from_signed(2, &[[1, 1, 1]]).unwrap();
        assert_eq!(gen_ind_gadget(&f).unwrap_err(), GadgetError::Disconnected);
    }
}

//! Optimal split of a pebble budget among child subtrees.
//!
//! Every tree DP needs, at a vertex with children `v_1..v_l`, the cheapest way
//! to place `h` pebbles in the children's subtrees when child `i` charges
//! `rows[i][j_i]` for receiving `j_i` pebbles. The table below answers that
//! for every `h` up to a budget in `O(l * budget^2)` time and keeps
//! back-pointers to recover the allocation.

use crate::num::CostValue;

/// Whether the allocation must use the whole budget or may use less.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Budget {
    Exactly,
    AtMost,
}

#[derive(Debug, Clone)]
pub struct DistributionTable<C> {
    budget: usize,
    /// `best[i][h]`: cheapest placement of exactly `h` pebbles in children `i..`.
    best: Vec<Vec<C>>,
    /// Pebbles given to child `i` in that placement.
    take: Vec<Vec<u32>>,
}

impl<C: CostValue> DistributionTable<C> {
    /// Rows shorter than `budget + 1` are padded with `+inf`.
    pub fn new<R: AsRef<[C]>>(rows: &[R], budget: usize) -> Self {
        let l = rows.len();
        let width = budget + 1;
        let mut best = vec![vec![C::infinity(); width]; l + 1];
        let mut take = vec![vec![0u32; width]; l];
        best[l][0] = C::zero();
        for i in (0..l).rev() {
            let row = rows[i].as_ref();
            let (head, tail) = best.split_at_mut(i + 1);
            let (cur, next) = (&mut head[i], &tail[0]);
            for h in 0..width {
                let mut value = C::infinity();
                let mut arg = 0;
                for x in 0..=h.min(row.len().saturating_sub(1)) {
                    let rest = next[h - x];
                    if row[x].is_infinite() || rest.is_infinite() {
                        continue;
                    }
                    let total = row[x].plus(rest);
                    if total < value {
                        value = total;
                        arg = x;
                    }
                }
                cur[h] = value;
                take[i][h] = arg as u32;
            }
        }
        DistributionTable { budget, best, take }
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    pub fn children(&self) -> usize {
        self.take.len()
    }

    /// Cheapest cost of placing exactly `h` pebbles.
    #[inline]
    pub fn exactly(&self, h: usize) -> C {
        self.best[0][h]
    }

    /// Cheapest cost of placing at most `h` pebbles, with the amount used.
    /// Ties prefer the larger amount.
    pub fn at_most(&self, h: usize) -> (C, usize) {
        let mut best = (C::infinity(), 0);
        for used in 0..=h {
            let c = self.best[0][used];
            if c.is_finite() && c <= best.0 {
                best = (c, used);
            }
        }
        best
    }

    /// Optimal `(cost, allocation)` for `h` pebbles under `mode`.
    pub fn query(&self, h: usize, mode: Budget) -> (C, Vec<usize>) {
        match mode {
            Budget::Exactly => (self.exactly(h), self.allocation(h)),
            Budget::AtMost => {
                let (c, used) = self.at_most(h);
                (c, self.allocation(used))
            }
        }
    }

    /// Lexicographically smallest optimal allocation of exactly `h` pebbles.
    pub fn allocation(&self, mut h: usize) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.take.len());
        for row in &self.take {
            let x = row[h] as usize;
            out.push(x);
            h -= x;
        }
        out
    }
}

/// One-shot form of [`DistributionTable`]: cheapest allocation of `budget`
/// pebbles over the cost rows, or `+inf` with an arbitrary allocation.
pub fn optimal_distribution<C: CostValue, R: AsRef<[C]>>(
    child_costs: &[R],
    budget: usize,
    mode: Budget,
) -> (C, Vec<usize>) {
    DistributionTable::new(child_costs, budget).query(budget, mode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn enumerate(rows: &[Vec<u32>], budget: usize, mode: Budget) -> u32 {
        fn go(rows: &[Vec<u32>], left: usize, exact: bool) -> u32 {
            match rows.split_first() {
                None => {
                    if exact && left > 0 {
                        u32::MAX
                    } else {
                        0
                    }
                }
                Some((row, rest)) => (0..=left.min(row.len() - 1))
                    .filter(|&x| row[x] != u32::MAX)
                    .map(|x| {
                        let r = go(rest, left - x, exact);
                        if r == u32::MAX {
                            u32::MAX
                        } else {
                            row[x] + r
                        }
                    })
                    .min()
                    .unwrap_or(u32::MAX),
            }
        }
        go(rows, budget, mode == Budget::Exactly)
    }

    #[test]
    fn examples() {
        let (c, a) = optimal_distribution(&[vec![5u32, 2]], 1, Budget::Exactly);
        assert_eq!((c, a), (2, vec![1]));
        let rows = vec![vec![0u32, 1], vec![0, 1]];
        let (c, a) = optimal_distribution(&rows, 1, Budget::Exactly);
        assert_eq!(c, 1);
        assert!(a == vec![1, 0] || a == vec![0, 1]);
        assert_eq!(optimal_distribution(&rows, 1, Budget::AtMost), (0, vec![0, 0]));
    }

    #[test]
    fn no_children() {
        let rows: Vec<Vec<u32>> = Vec::new();
        assert_eq!(optimal_distribution(&rows, 0, Budget::Exactly), (0, vec![]));
        assert_eq!(optimal_distribution(&rows, 2, Budget::Exactly).0, u32::MAX);
        assert_eq!(optimal_distribution(&rows, 2, Budget::AtMost).0, 0);
    }

    #[test]
    fn infeasible_cells() {
        let inf = u32::MAX;
        let rows = vec![vec![inf, 3], vec![inf, 4]];
        assert_eq!(optimal_distribution(&rows, 1, Budget::Exactly).0, inf);
        assert_eq!(optimal_distribution(&rows, 2, Budget::Exactly), (7, vec![1, 1]));
    }

    #[test]
    fn lexicographic_ties() {
        let rows = vec![vec![0u32, 0, 0], vec![0, 0, 0]];
        assert_eq!(optimal_distribution(&rows, 2, Budget::Exactly).1, vec![0, 2]);
    }

    proptest! {
        #[test]
        fn matches_enumeration(
            rows in prop::collection::vec(
                prop::collection::vec(prop_oneof![4 => 0u32..20, 1 => Just(u32::MAX)], 1..5),
                0..4),
            budget in 0usize..5,
            exact in any::<bool>(),
        ) {
            let mode = if exact { Budget::Exactly } else { Budget::AtMost };
            let table = DistributionTable::new(&rows, budget);
            let (c, alloc) = table.query(budget, mode);
            prop_assert_eq!(c, enumerate(&rows, budget, mode));
            if c != u32::MAX {
                let used: usize = alloc.iter().sum();
                let within = if exact { used == budget } else { used <= budget };
                prop_assert!(within);
                let total: u32 = alloc.iter().zip(&rows).map(|(&x, r)| r[x]).sum();
                prop_assert_eq!(total, c);
            }
        }

        #[test]
        fn scalar_width_is_irrelevant(
            rows in prop::collection::vec(prop::collection::vec(0u8..30, 1..4), 0..4),
            budget in 0usize..4,
        ) {
            let wide: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|&x| x as u64).collect()).collect();
            let narrow: Vec<Vec<u16>> = rows.iter().map(|r| r.iter().map(|&x| x as u16).collect()).collect();
            let a = optimal_distribution(&wide, budget, Budget::Exactly);
            let b = optimal_distribution(&narrow, budget, Budget::Exactly);
            prop_assert_eq!(a.1, b.1);
            prop_assert_eq!(a.0.finite_u64(), b.0.finite_u64());
        }
    }
}

//! Exact chromatic number.
//!
//! Tries k = ω, ω+1, ... up to the greedy bound; each k is a backtracking
//! search that pre-colours a maximum clique and never opens more than one
//! new colour at a time.

use crate::graph::Graph;
use crate::invariants::clique::max_clique;

fn greedy_colouring(g: &Graph, order: &[usize]) -> Vec<usize> {
    let mut colour = vec![usize::MAX; g.n()];
    for &v in order {
        let used: Vec<usize> = g.neighbors(v).iter().map(|u| colour[u]).collect();
        colour[v] = (0..).find(|c| !used.contains(c)).expect("some colour is free");
    }
    colour
}

struct Backtrack<'a> {
    g: &'a Graph,
    order: &'a [usize],
    colour: Vec<usize>,
    k: usize,
}

impl Backtrack<'_> {
    fn run(&mut self, i: usize, used: usize) -> bool {
        if i == self.order.len() {
            return true;
        }
        let v = self.order[i];
        if self.colour[v] != usize::MAX {
            return self.run(i + 1, used);
        }
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.g.neighbors(v).iter().any(|u| self.colour[u] == c) {
                continue;
            }
            self.colour[v] = c;
            if self.run(i + 1, used.max(c + 1)) {
                return true;
            }
        }
        self.colour[v] = usize::MAX;
        false
    }
}

/// χ(G) with an optimal colouring (`colour[v]` in `0..χ`).
pub fn chromatic_number(g: &Graph) -> (usize, Vec<usize>) {
    let n = g.n();
    if n == 0 {
        return (0, Vec::new());
    }
    let clique = max_clique(g);
    let mut order: Vec<usize> = clique.iter().collect();
    let mut rest: Vec<usize> = (0..n).filter(|&v| !clique.contains(v)).collect();
    rest.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order.extend(rest);

    let greedy = greedy_colouring(g, &order);
    let upper = greedy.iter().max().map_or(0, |&c| c + 1);
    let lower = clique.len();
    for k in lower..upper {
        let mut colour = vec![usize::MAX; n];
        for (c, v) in clique.iter().enumerate() {
            colour[v] = c;
        }
        let mut bt = Backtrack {
            g,
            order: &order,
            colour,
            k,
        };
        if bt.run(0, lower) {
            return (k, bt.colour);
        }
    }
    (upper, greedy)
}

pub fn chi(g: &Graph) -> usize {
    chromatic_number(g).0
}

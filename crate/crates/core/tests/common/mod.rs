//! Brute-force oracles sharing no code with the library.

#![allow(dead_code)]

use p5lab::Graph;

pub type Adj = Vec<Vec<bool>>;

pub fn adj(g: &Graph) -> Adj {
    (0..g.n())
        .map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

pub fn adj_from_edges(n: usize, edges: &[(usize, usize)]) -> Adj {
    let mut a = vec![vec![false; n]; n];
    for &(u, v) in edges {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

fn members(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

fn is_stable(a: &Adj, vs: &[usize]) -> bool {
    vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| !a[u][v]))
}

fn is_clique(a: &Adj, vs: &[usize]) -> bool {
    vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| a[u][v]))
}

/// α of the subgraph induced by `mask`.
pub fn alpha_within(a: &Adj, mask: u32) -> usize {
    let n = a.len();
    let mut best = 0;
    let mut sub = mask;
    loop {
        let vs = members(sub, n);
        if vs.len() > best && is_stable(a, &vs) {
            best = vs.len();
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & mask;
    }
    best
}

pub fn alpha(a: &Adj) -> usize {
    alpha_within(a, (1u32 << a.len()) - 1)
}

pub fn omega(a: &Adj) -> usize {
    let n = a.len();
    (0u32..1 << n)
        .map(|m| members(m, n))
        .filter(|vs| is_clique(a, vs))
        .map(|vs| vs.len())
        .max()
        .unwrap_or(0)
}

pub fn chi(a: &Adj) -> usize {
    fn colour(a: &Adj, k: usize, cols: &mut Vec<usize>) -> bool {
        let v = cols.len();
        if v == a.len() {
            return true;
        }
        for c in 0..k {
            if (0..v).all(|u| !a[u][v] || cols[u] != c) {
                cols.push(c);
                if colour(a, k, cols) {
                    return true;
                }
                cols.pop();
            }
        }
        false
    }
    (0..=a.len()).find(|&k| colour(a, k, &mut Vec::new())).expect("n colours suffice")
}

/// max |S|/α(S) over nonempty S, as a reduced (num, den).
pub fn hall_ratio(a: &Adj) -> (usize, usize) {
    let n = a.len();
    let mut best = (0, 1);
    for m in 1u32..1 << n {
        let (s, al) = (m.count_ones() as usize, alpha_within(a, m));
        if s * best.1 > best.0 * al {
            best = (s, al);
        }
    }
    let g = gcd(best.0, best.1);
    (best.0 / g, best.1 / g)
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Induced P5 by trying every ordered 5-tuple.
pub fn has_induced_p5(a: &Adj) -> bool {
    let n = a.len();
    let mut t = [0usize; 5];
    fn go(a: &Adj, t: &mut [usize; 5], k: usize) -> bool {
        if k == 5 {
            return (0..5).all(|i| (i + 1..5).all(|j| a[t[i]][t[j]] == (j == i + 1)));
        }
        for v in 0..a.len() {
            if t[..k].contains(&v) {
                continue;
            }
            if k > 0 && !a[t[k - 1]][v] {
                continue;
            }
            t[k] = v;
            if go(a, t, k + 1) {
                return true;
            }
        }
        false
    }
    n >= 5 && go(a, &mut t, 0)
}

/// Isomorphism by trying every bijection.
pub fn isomorphic(a: &Adj, b: &Adj) -> bool {
    fn go(a: &Adj, b: &Adj, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let v = map.len();
        if v == a.len() {
            return true;
        }
        for w in 0..b.len() {
            if used[w] || (0..v).any(|u| a[u][v] != b[map[u]][w]) {
                continue;
            }
            used[w] = true;
            map.push(w);
            if go(a, b, map, used) {
                return true;
            }
            map.pop();
            used[w] = false;
        }
        false
    }
    a.len() == b.len() && go(a, b, &mut Vec::new(), &mut vec![false; b.len()])
}

/// Petersen as the Kneser graph on 2-subsets of a 5-set.
pub fn kneser_petersen() -> Adj {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
    pairs
        .iter()
        .map(|&(a, b)| pairs.iter().map(|&(c, d)| a != c && a != d && b != c && b != d).collect())
        .collect()
}

pub fn complement(a: &Adj) -> Adj {
    let n = a.len();
    (0..n).map(|u| (0..n).map(|v| u != v && !a[u][v]).collect()).collect()
}

/// Labelled P5-free graphs on `n` vertices by brute force.
pub fn count_p5_free(n: usize) -> u64 {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    (0u64..1 << pairs.len())
        .filter(|m| {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| m >> k & 1 == 1).map(|(_, &e)| e).collect();
            !has_induced_p5(&adj_from_edges(n, &edges))
        })
        .count() as u64
}

pub fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

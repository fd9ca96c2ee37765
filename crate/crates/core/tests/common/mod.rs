//! Enumerators, random generators and brute-force oracles shared by the
//! integration tests.
#![allow(dead_code)]

use ecmod::{Colour, ColouredGraph};
use rand::Rng;

/// Every permutation of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn rec(i: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for j in i..cur.len() {
            cur.swap(i, j);
            rec(i + 1, cur, out);
            cur.swap(i, j);
        }
    }
    rec(0, &mut cur, &mut out);
    out
}

/// Unordered pairs `a < b` of `0..n` in lexicographic order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect()
}

/// Colours of an edge slot state: bit 0 red, bit 1 blue.
fn slot_colours(state: usize) -> impl Iterator<Item = Colour> {
    [(1, Colour::RED), (2, Colour::BLUE)]
        .into_iter()
        .filter(move |(bit, _)| state & bit != 0)
        .map(|(_, c)| c)
}

/// Calls `f` on every 2-edge-coloured graph on `0..=max_n` vertices in which
/// every vertex pair and every loop slot holds none, r, b or both.
pub fn for_each_small_graph(max_n: usize, mut f: impl FnMut(&ColouredGraph)) {
    for n in 0..=max_n {
        let mut slots: Vec<(usize, usize)> = pairs(n);
        slots.extend((0..n).map(|v| (v, v)));
        let total = 1usize << (2 * slots.len());
        for code in 0..total {
            let mut g = ColouredGraph::new(n);
            for (i, &(a, b)) in slots.iter().enumerate() {
                for c in slot_colours(code >> (2 * i) & 3) {
                    g.add_edge(a, b, c).unwrap();
                }
            }
            f(&g);
        }
    }
}

/// Calls `f` on every loopless graph on `0..=max_n` vertices whose pairs hold
/// none, r or b.
pub fn for_each_simple_graph(max_n: usize, mut f: impl FnMut(&ColouredGraph)) {
    for n in 0..=max_n {
        let ps = pairs(n);
        let total = 3usize.pow(ps.len() as u32);
        for mut code in 0..total {
            let mut g = ColouredGraph::new(n);
            for &(a, b) in &ps {
                match code % 3 {
                    1 => g.add_edge(a, b, Colour::RED).map(|_| ()).unwrap(),
                    2 => g.add_edge(a, b, Colour::BLUE).map(|_| ()).unwrap(),
                    _ => {}
                }
                code /= 3;
            }
            f(&g);
        }
    }
}

/// Random r/b multigraph with `1..=max_n` vertices and `0..=max_m` edges,
/// loops and parallel edges included.
pub fn random_graph(rng: &mut impl Rng, min_n: usize, max_n: usize, max_m: usize) -> ColouredGraph {
    let n = rng.gen_range(min_n..=max_n);
    let m = rng.gen_range(0..=max_m);
    let mut g = ColouredGraph::new(n);
    for _ in 0..m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        let c = if rng.gen_bool(0.5) {
            Colour::RED
        } else {
            Colour::BLUE
        };
        g.add_edge(u, v, c).unwrap();
    }
    g
}

/// Smallest vertex cover by subset enumeration.
pub fn vertex_cover_number(n: usize, edges: &[(usize, usize)]) -> usize {
    (0u32..1 << n)
        .filter(|m| {
            edges
                .iter()
                .all(|&(a, b)| m >> a & 1 == 1 || m >> b & 1 == 1)
        })
        .map(|m| m.count_ones() as usize)
        .min()
        .unwrap_or(0)
}

/// One vertex per part, no edge between chosen vertices.
pub fn has_multicoloured_independent_set(edges: &[(usize, usize)], parts: &[Vec<usize>]) -> bool {
    fn rec(
        i: usize,
        parts: &[Vec<usize>],
        edges: &[(usize, usize)],
        chosen: &mut Vec<usize>,
    ) -> bool {
        if i == parts.len() {
            return true;
        }
        for &v in &parts[i] {
            let free = chosen
                .iter()
                .all(|&w| !edges.contains(&(v.min(w), v.max(w))));
            if free {
                chosen.push(v);
                if rec(i + 1, parts, edges, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    rec(0, parts, edges, &mut Vec::new())
}

/// Connected simple graphs on `1..=max_n` vertices, one per isomorphism class.
pub fn connected_graphs_up_to_iso(max_n: usize) -> Vec<(usize, Vec<(usize, usize)>)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let ps = pairs(n);
        let index =
            |a: usize, b: usize| ps.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
        let perms = permutations(n);
        let images: Vec<Vec<usize>> = perms
            .iter()
            .map(|p| ps.iter().map(|&(a, b)| index(p[a], p[b])).collect())
            .collect();
        let mut seen = std::collections::BTreeSet::new();
        for mask in 0u32..1 << ps.len() {
            let edges: Vec<(usize, usize)> = (0..ps.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| ps[i])
                .collect();
            if !connected(n, &edges) {
                continue;
            }
            let canon = images
                .iter()
                .map(|img| {
                    (0..ps.len())
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| 1u32 << img[i])
                        .sum::<u32>()
                })
                .min()
                .unwrap();
            if seen.insert(canon) {
                out.push((n, edges));
            }
        }
    }
    out
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut reach = vec![false; n];
    let mut stack = vec![0];
    reach[0] = true;
    while let Some(v) = stack.pop() {
        for &(a, b) in edges {
            for (x, y) in [(a, b), (b, a)] {
                if x == v && !reach[y] {
                    reach[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    reach.into_iter().all(|r| r)
}

/// Partitioned graphs on at most `max_n` vertices with at most `max_parts`
/// parts, edges only between parts, one per isomorphism class (relabelling
/// inside parts and exchanging parts of equal size).
pub type Partitioned = (usize, Vec<(usize, usize)>, Vec<Vec<usize>>);

pub fn partitioned_graphs_up_to_iso(max_n: usize, max_parts: usize) -> Vec<Partitioned> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let perms = permutations(n);
        for sizes in part_sizes(n, max_parts) {
            let mut parts = Vec::new();
            let mut next = 0;
            for s in &sizes {
                parts.push((next..next + s).collect::<Vec<usize>>());
                next += s;
            }
            let mut owner = vec![0; n];
            for (i, p) in parts.iter().enumerate() {
                for &v in p {
                    owner[v] = i;
                }
            }
            let cross: Vec<(usize, usize)> = pairs(n)
                .into_iter()
                .filter(|&(a, b)| owner[a] != owner[b])
                .collect();
            let index = |a: usize, b: usize| {
                cross
                    .iter()
                    .position(|&p| p == (a.min(b), a.max(b)))
                    .unwrap()
            };
            let images: Vec<Vec<usize>> = perms
                .iter()
                .filter(|p| {
                    parts.iter().all(|part| {
                        let target = owner[p[part[0]]];
                        part.iter().all(|&v| owner[p[v]] == target)
                            && parts[target].len() == part.len()
                    })
                })
                .map(|p| cross.iter().map(|&(a, b)| index(p[a], p[b])).collect())
                .collect();
            let mut seen = std::collections::BTreeSet::new();
            for mask in 0u32..1 << cross.len() {
                let canon = images
                    .iter()
                    .map(|img| {
                        (0..cross.len())
                            .filter(|i| mask >> i & 1 == 1)
                            .map(|i| 1u32 << img[i])
                            .sum::<u32>()
                    })
                    .min()
                    .unwrap();
                if seen.insert(canon) {
                    let edges = (0..cross.len())
                        .filter(|i| mask >> i & 1 == 1)
                        .map(|i| cross[i])
                        .collect();
                    out.push((n, edges, parts.clone()));
                }
            }
        }
    }
    out
}

/// Non-decreasing sequences of at most `max_parts` positive sizes summing to `n`.
fn part_sizes(n: usize, max_parts: usize) -> Vec<Vec<usize>> {
    fn rec(rem: usize, min: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        if left == 0 {
            return;
        }
        for s in min..=rem {
            cur.push(s);
            rec(rem - s, s, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 1, max_parts, &mut Vec::new(), &mut out);
    out
}

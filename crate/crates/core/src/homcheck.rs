//! Homomorphism tests and the path/cycle obstructions used by the switching
//! solvers.
//!
//! Vertex 0 of an order-2 target plays "false" and vertex 1 "true" in the
//! 2-SAT encodings.

use std::collections::VecDeque;
use std::fmt;

use crate::ecgraph::{Colour, ColouredGraph, Edge, Target};
use crate::error::{Error, Result};
use crate::twosat::{solve_2sat, Clause, Group, Literal, TwoCnf};

/// A vertex map `G -> H`, indexed by vertex of `G`.
pub type Homomorphism = Vec<usize>;

/// Does `map` send every edge of `g` to an edge of `h` of the same colour?
pub fn is_homomorphism(g: &ColouredGraph, h: &Target, map: &[usize]) -> bool {
    map.len() == g.n()
        && map.iter().all(|&a| a < h.order())
        && g.edges()
            .iter()
            .all(|e| h.has_edge(map[e.u], map[e.v], &e.colour))
}

/// Backtracking search over all maps, vertices in index order, images in
/// index order. Returns the lexicographically least homomorphism.
pub fn hom_exists_bruteforce(g: &ColouredGraph, h: &Target) -> Option<Homomorphism> {
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    if h.order() == 0 {
        return None;
    }
    // constraints checked when the later endpoint is assigned
    let mut back: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for e in g.edges() {
        let ci = h.colour_index(&e.colour)?;
        back[e.v].push((e.u, ci));
    }
    let mut map = vec![0usize; n];
    let mut next = vec![0usize; n];
    let mut v = 0;
    loop {
        if next[v] == h.order() {
            next[v] = 0;
            if v == 0 {
                return None;
            }
            v -= 1;
            continue;
        }
        let a = next[v];
        next[v] += 1;
        if back[v]
            .iter()
            .all(|&(u, ci)| h.adjacent_idx(ci, if u == v { a } else { map[u] }, a))
        {
            map[v] = a;
            if v + 1 == n {
                return Some(map);
            }
            v += 1;
        }
    }
}

/// How edges of `G` become clauses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Encoding {
    /// The clause table as is.
    Plain,
    /// Every clause of a non-loop edge mentions both endpoints, so deleting a
    /// variable removes exactly the constraints of the deleted vertex.
    VertexDeletion,
    /// One clause group per edge occurrence, in edge order; single-loop rows
    /// use a fresh auxiliary variable per edge as the group witness.
    EdgeGroups,
}

/// Which of the pairs 00, 01, 11 carry colour `c` in `h`.
fn row(h: &Target, colour: &Colour) -> (bool, bool, bool) {
    let Some(ci) = h.colour_index(colour) else {
        return (false, false, false);
    };
    match h.order() {
        // the single vertex is "true"
        1 => (false, false, h.adjacent_idx(ci, 0, 0)),
        _ => (
            h.adjacent_idx(ci, 0, 0),
            h.adjacent_idx(ci, 0, 1),
            h.adjacent_idx(ci, 1, 1),
        ),
    }
}

fn edge_clauses(e: &Edge, h: &Target, encoding: Encoding, f: &mut TwoCnf) -> Vec<Clause> {
    let (s00, s01, s11) = row(h, &e.colour);
    let (u, v) = (e.u, e.v);
    let (pu, nu, pv, nv) = (
        Literal::pos(u),
        Literal::neg(u),
        Literal::pos(v),
        Literal::neg(v),
    );
    let unit = Clause::unit;
    let pair = Clause::pair;
    if e.is_loop() {
        return match (s00, s11) {
            (true, true) => vec![],
            (true, false) => vec![unit(nu)],
            (false, true) => vec![unit(pu)],
            (false, false) => vec![unit(pu), unit(nu)],
        };
    }
    match (s00, s01, s11) {
        (true, true, true) => vec![],
        (true, true, false) => vec![pair(nu, nv)],
        (false, true, true) => vec![pair(pu, pv)],
        (true, false, true) => vec![pair(pu, nv), pair(nu, pv)],
        (false, true, false) => vec![pair(pu, pv), pair(nu, nv)],
        (true, false, false) | (false, false, true) => {
            let (lu, lv) = if s11 { (pu, pv) } else { (nu, nv) };
            match encoding {
                Encoding::Plain => vec![unit(lu), unit(lv)],
                Encoding::VertexDeletion => {
                    vec![pair(lu, lv), pair(lu, lv.negated()), pair(lu.negated(), lv)]
                }
                Encoding::EdgeGroups => {
                    let c = Literal::pos(f.add_var());
                    vec![pair(c, lu), pair(c, lv), unit(c.negated())]
                }
            }
        }
        (false, false, false) => match encoding {
            Encoding::VertexDeletion => {
                vec![pair(pu, pv), pair(pu, nv), pair(nu, pv), pair(nu, nv)]
            }
            _ => vec![unit(pu), unit(nu)],
        },
    }
}

/// Translate "G maps to H" into a 2-CNF with one variable per vertex of `g`
/// (plus per-edge auxiliaries under [`Encoding::EdgeGroups`]).
pub fn build_2sat(g: &ColouredGraph, h: &Target, encoding: Encoding) -> Result<TwoCnf> {
    if !(1..=2).contains(&h.order()) {
        return Err(Error::Domain(format!(
            "2-SAT encoding needs a target of order 1 or 2, got {}",
            h.order()
        )));
    }
    let mut f = TwoCnf::new(g.n());
    let mut groups = Vec::new();
    for e in g.edges() {
        let clauses = edge_clauses(e, h, encoding, &mut f);
        let first = f.clauses().len();
        // an auxiliary variable, when present, is the first literal
        let witness = clauses
            .iter()
            .map(|c| c.first.var)
            .find(|&x| x >= g.n())
            .unwrap_or(e.u);
        for c in clauses {
            f.add_clause(c)?;
        }
        groups.push(Group {
            clauses: (first..f.clauses().len()).collect(),
            witness,
        });
    }
    if encoding == Encoding::EdgeGroups {
        f.set_groups(groups)?;
    }
    Ok(f)
}

/// Read a homomorphism off a satisfying assignment.
pub fn decode_assignment(h: &Target, n: usize, assignment: &[bool]) -> Homomorphism {
    match h.order() {
        1 => vec![0; n],
        _ => assignment[..n].iter().map(|&b| usize::from(b)).collect(),
    }
}

/// Homomorphism test through the 2-SAT encoding; order-1 and order-2
/// targets only.
pub fn hom_exists_2sat(g: &ColouredGraph, h: &Target) -> Result<Option<Homomorphism>> {
    let f = build_2sat(g, h, Encoding::Plain)?;
    Ok(solve_2sat(&f).map(|a| decode_assignment(h, g.n(), &a)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ObstructionKind {
    /// Image of a red-blue-red path.
    RbrImage,
    /// Image of a red edge, an odd blue path and a red edge.
    RbOddRPath,
    /// Odd cycle (or loop) made of blue edges.
    AllBlueOddCycle,
    /// Cycle with an odd number of blue edges.
    OddBlueParityCycle,
}

impl fmt::Display for ObstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ObstructionKind::RbrImage => "RBR_IMAGE",
            ObstructionKind::RbOddRPath => "RB_ODD_R_PATH",
            ObstructionKind::AllBlueOddCycle => "ALL_BLUE_ODD_CYCLE",
            ObstructionKind::OddBlueParityCycle => "ODD_BLUE_PARITY_CYCLE",
        })
    }
}

/// A walk in `G`: `vertices[i]` and `vertices[i + 1]` are the ends of
/// `edges[i]`. Cycles repeat their first vertex at the end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Obstruction {
    /// Re-check the witness against `g` by inspection.
    pub fn validate(&self, g: &ColouredGraph) -> bool {
        if self.vertices.len() != self.edges.len() + 1 || self.edges.iter().any(|&e| e >= g.m()) {
            return false;
        }
        let walk_ok = self.edges.iter().enumerate().all(|(i, &ei)| {
            let e = g.edge(ei);
            let (a, b) = (self.vertices[i], self.vertices[i + 1]);
            (e.u == a && e.v == b) || (e.u == b && e.v == a)
        });
        if !walk_ok {
            return false;
        }
        let blue: Vec<bool> = self
            .edges
            .iter()
            .map(|&ei| g.edge(ei).colour == Colour::BLUE)
            .collect();
        let red = |ei: usize| g.edge(ei).colour == Colour::RED;
        let closed = self.vertices.first() == self.vertices.last();
        let len = self.edges.len();
        match self.kind {
            ObstructionKind::RbrImage => {
                len == 3 && red(self.edges[0]) && blue[1] && red(self.edges[2])
            }
            ObstructionKind::RbOddRPath => {
                len >= 3
                    && len % 2 == 1
                    && red(self.edges[0])
                    && red(self.edges[len - 1])
                    && blue[1..len - 1].iter().all(|&b| b)
            }
            ObstructionKind::AllBlueOddCycle => closed && len % 2 == 1 && blue.iter().all(|&b| b),
            ObstructionKind::OddBlueParityCycle => {
                closed && len >= 1 && blue.iter().filter(|&&b| b).count() % 2 == 1
            }
        }
    }

    /// Distinct vertices of the witness, ascending.
    pub fn vertex_set(&self) -> Vec<usize> {
        let mut v = self.vertices.clone();
        v.sort_unstable();
        v.dedup();
        v
    }
}

fn require_two_coloured(g: &ColouredGraph) -> Result<()> {
    if g.is_two_coloured() {
        Ok(())
    } else {
        Err(Error::Domain(
            "graph uses colours other than r and b".into(),
        ))
    }
}

/// First red edge at each vertex.
fn red_at(g: &ColouredGraph) -> Vec<Option<usize>> {
    let mut out = vec![None; g.n()];
    for (i, e) in g.edges().iter().enumerate() {
        if e.colour == Colour::RED {
            for w in [e.u, e.v] {
                out[w].get_or_insert(i);
            }
        }
    }
    out
}

/// A blue edge whose two ends both meet a red edge.
pub fn find_rbr_image(g: &ColouredGraph) -> Result<Option<Obstruction>> {
    require_two_coloured(g)?;
    let red = red_at(g);
    for (i, e) in g.edges().iter().enumerate() {
        if e.colour != Colour::BLUE {
            continue;
        }
        if let (Some(r1), Some(r2)) = (red[e.u], red[e.v]) {
            return Ok(Some(Obstruction {
                kind: ObstructionKind::RbrImage,
                vertices: vec![g.edge(r1).other(e.u), e.u, e.v, g.edge(r2).other(e.v)],
                edges: vec![r1, i, r2],
            }));
        }
    }
    Ok(None)
}

/// Spanning forest with parity potentials over the edges accepted by
/// `keep`; returns the first non-tree edge closing an odd cycle.
fn odd_cycle(
    g: &ColouredGraph,
    keep: impl Fn(&Edge) -> bool,
    weight: impl Fn(&Edge) -> bool,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.n();
    let inc = g.incidence();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    let mut parity = vec![false; n];
    let mut tree = vec![false; g.m()];
    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &ei in &inc[x] {
                let e = g.edge(ei);
                if !keep(e) {
                    continue;
                }
                let y = e.other(x);
                if depth[y] == usize::MAX {
                    depth[y] = depth[x] + 1;
                    parity[y] = parity[x] ^ weight(e);
                    parent[y] = Some((x, ei));
                    tree[ei] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    for (ei, e) in g.edges().iter().enumerate() {
        if tree[ei] || !keep(e) || !(parity[e.u] ^ parity[e.v] ^ weight(e)) {
            continue;
        }
        // cycle: u .. lca .. v, then e back to u
        let (mut a, mut b) = (e.u, e.v);
        let mut left = vec![(a, None)];
        let mut right = vec![(b, None)];
        while a != b {
            if depth[a] >= depth[b] {
                let (p, pe) = parent[a].expect("non-root");
                left.last_mut().unwrap().1 = Some(pe);
                left.push((p, None));
                a = p;
            } else {
                let (p, pe) = parent[b].expect("non-root");
                right.last_mut().unwrap().1 = Some(pe);
                right.push((p, None));
                b = p;
            }
        }
        let mut vertices: Vec<usize> = left.iter().map(|&(v, _)| v).collect();
        let mut edges: Vec<usize> = left.iter().filter_map(|&(_, e)| e).collect();
        right.pop();
        for &(v, pe) in right.iter().rev() {
            vertices.push(v);
            edges.push(pe.expect("edge to parent"));
        }
        vertices.push(e.u);
        edges.push(ei);
        return Some((vertices, edges));
    }
    None
}

/// A cycle (closed walk on distinct edges) with an odd number of blue edges.
pub fn find_odd_blue_parity_cycle(g: &ColouredGraph) -> Result<Option<Obstruction>> {
    require_two_coloured(g)?;
    Ok(
        odd_cycle(g, |_| true, |e| e.colour == Colour::BLUE).map(|(vertices, edges)| Obstruction {
            kind: ObstructionKind::OddBlueParityCycle,
            vertices,
            edges,
        }),
    )
}

/// An odd cycle in the blue subgraph.
pub fn find_all_blue_odd_cycle(g: &ColouredGraph) -> Result<Option<Obstruction>> {
    require_two_coloured(g)?;
    Ok(
        odd_cycle(g, |e| e.colour == Colour::BLUE, |_| true).map(|(vertices, edges)| Obstruction {
            kind: ObstructionKind::AllBlueOddCycle,
            vertices,
            edges,
        }),
    )
}

/// Two red-incident vertices on opposite sides of a blue component, joined
/// through a shortest blue path. Requires that `g` has no cycle with an odd
/// number of blue edges.
pub fn find_rb_odd_r_path(g: &ColouredGraph) -> Result<Option<Obstruction>> {
    if find_odd_blue_parity_cycle(g)?.is_some() {
        return Err(Error::Contract(
            "graph has a cycle with an odd number of blue edges".into(),
        ));
    }
    let red = red_at(g);
    let blue = g.colour_subgraph(&Colour::BLUE);
    let side = blue.two_colouring().expect("blue subgraph is bipartite");
    for comp in blue.connected_components() {
        let reds: Vec<usize> = comp.iter().copied().filter(|&w| red[w].is_some()).collect();
        let Some(&x) = reds.first() else { continue };
        let Some(&y) = reds.iter().find(|&&y| side[y] != side[x]) else {
            continue;
        };
        let (path_v, path_e) = blue_path(g, x, y);
        let r1 = red[x].unwrap();
        let r2 = red[y].unwrap();
        let mut vertices = vec![g.edge(r1).other(x)];
        vertices.extend(path_v);
        vertices.push(g.edge(r2).other(y));
        let mut edges = vec![r1];
        edges.extend(path_e);
        edges.push(r2);
        return Ok(Some(Obstruction {
            kind: ObstructionKind::RbOddRPath,
            vertices,
            edges,
        }));
    }
    Ok(None)
}

/// Shortest blue path between `from` and `to` (edge ids of `g`).
fn blue_path(g: &ColouredGraph, from: usize, to: usize) -> (Vec<usize>, Vec<usize>) {
    let inc = g.incidence();
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; g.n()];
    let mut seen = vec![false; g.n()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        for &ei in &inc[x] {
            let e = g.edge(ei);
            if e.colour != Colour::BLUE {
                continue;
            }
            let y = e.other(x);
            if !seen[y] {
                seen[y] = true;
                prev[y] = Some((x, ei));
                queue.push_back(y);
            }
        }
    }
    let mut vertices = vec![to];
    let mut edges = Vec::new();
    let mut cur = to;
    while cur != from {
        let (p, ei) = prev[cur].expect("same blue component");
        edges.push(ei);
        vertices.push(p);
        cur = p;
    }
    vertices.reverse();
    edges.reverse();
    (vertices, edges)
}

/// Smallest vertex set whose switching makes every edge `colour`, or `None`
/// when no switching does. Per component the smaller of the two forced
/// classes is taken; ties go to the class of the component's least vertex.
pub fn min_switch_to_monochromatic(
    g: &ColouredGraph,
    colour: &Colour,
) -> Result<Option<Vec<usize>>> {
    require_two_coloured(g)?;
    if !colour.is_red_or_blue() {
        return Err(Error::Domain(format!("colour {colour} is not r or b")));
    }
    let inc = g.incidence();
    let mut label: Vec<Option<bool>> = vec![None; g.n()];
    let mut out = Vec::new();
    for comp in g.connected_components() {
        let root = comp[0];
        label[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            let lx = label[x].unwrap();
            for &ei in &inc[x] {
                let e = g.edge(ei);
                let differ = e.colour != *colour;
                if e.is_loop() {
                    if differ {
                        return Ok(None);
                    }
                    continue;
                }
                let y = e.other(x);
                match label[y] {
                    None => {
                        label[y] = Some(lx ^ differ);
                        queue.push_back(y);
                    }
                    Some(ly) if ly != lx ^ differ => return Ok(None),
                    Some(_) => {}
                }
            }
        }
        let ones = comp.iter().filter(|&&w| label[w] == Some(true)).count();
        let pick = ones < comp.len() - ones;
        out.extend(comp.iter().copied().filter(|&w| label[w] == Some(pick)));
    }
    out.sort_unstable();
    Ok(Some(out))
}

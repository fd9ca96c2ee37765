//! Edge-coloured multigraphs: the instance and target representation.
//!
//! Vertices are the dense integers `0..n`. Edges are stored as a multiset of
//! endpoint-normalised records (`u <= v`), loops and parallel edges included.
//! All operations return new values; a [`ColouredGraph`] is never mutated
//! behind the caller's back.

use std::borrow::Cow;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// An edge colour, identified by a token over `[a-z0-9_]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Colour(Cow<'static, str>);

impl Colour {
    pub const RED: Colour = Colour(Cow::Borrowed("r"));
    pub const BLUE: Colour = Colour(Cow::Borrowed("b"));

    pub fn new(name: &str) -> Result<Colour> {
        if name.is_empty()
            || !name
                .bytes()
                .all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == b'_')
        {
            return Err(Error::Argument(format!("invalid colour token {name:?}")));
        }
        Ok(match name {
            "r" => Colour::RED,
            "b" => Colour::BLUE,
            _ => Colour(Cow::Owned(name.to_string())),
        })
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    pub fn is_red_or_blue(&self) -> bool {
        *self == Colour::RED || *self == Colour::BLUE
    }

    /// The other colour of a 2-edge-coloured context.
    pub fn flipped(&self) -> Result<Colour> {
        if *self == Colour::RED {
            Ok(Colour::BLUE)
        } else if *self == Colour::BLUE {
            Ok(Colour::RED)
        } else {
            Err(Error::Domain(format!(
                "colour {} is not one of r/b",
                self.name()
            )))
        }
    }
}

impl fmt::Debug for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// One edge record; `u <= v` always holds.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub colour: Colour,
}

impl Edge {
    pub fn new(a: usize, b: usize, colour: Colour) -> Edge {
        let (u, v) = if a <= b { (a, b) } else { (b, a) };
        Edge { u, v, colour }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn other(&self, w: usize) -> usize {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, w: usize) -> bool {
        self.u == w || self.v == w
    }
}

/// Stable identity of an edge occurrence: the record plus its rank among
/// identical records in input order. Used in deletion certificates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef {
    pub u: usize,
    pub v: usize,
    pub colour: Colour,
    pub occurrence: usize,
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}-{}:{}#{}",
            self.u, self.v, self.colour, self.occurrence
        )
    }
}

/// Edge-coloured multigraph with loops and parallel edges.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ColouredGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl ColouredGraph {
    pub fn new(n: usize) -> ColouredGraph {
        ColouredGraph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<ColouredGraph>
    where
        I: IntoIterator<Item = (usize, usize, Colour)>,
    {
        let mut g = ColouredGraph::new(n);
        for (u, v, c) in edges {
            g.add_edge(u, v, c)?;
        }
        Ok(g)
    }

    /// Trusted constructor for edges already normalised and in range.
    pub(crate) fn from_parts(n: usize, edges: Vec<Edge>) -> ColouredGraph {
        debug_assert!(edges.iter().all(|e| e.u <= e.v && e.v < n));
        ColouredGraph { n, edges }
    }

    pub fn add_edge(&mut self, u: usize, v: usize, colour: Colour) -> Result<usize> {
        if u >= self.n || v >= self.n {
            return Err(Error::Argument(format!(
                "edge {u}-{v} out of range for {} vertices",
                self.n
            )));
        }
        self.edges.push(Edge::new(u, v, colour));
        Ok(self.edges.len() - 1)
    }

    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, idx: usize) -> &Edge {
        &self.edges[idx]
    }

    /// Colours that appear on at least one edge.
    pub fn colours(&self) -> BTreeSet<Colour> {
        self.edges.iter().map(|e| e.colour.clone()).collect()
    }

    pub fn is_two_coloured(&self) -> bool {
        self.edges.iter().all(|e| e.colour.is_red_or_blue())
    }

    fn require_two_coloured(&self) -> Result<()> {
        match self.edges.iter().find(|e| !e.colour.is_red_or_blue()) {
            Some(e) => Err(Error::Domain(format!(
                "switching needs a 2-edge-coloured graph, found colour {}",
                e.colour
            ))),
            None => Ok(()),
        }
    }

    /// Identity of edge `idx` for certificates.
    pub fn edge_ref(&self, idx: usize) -> EdgeRef {
        let e = &self.edges[idx];
        let occurrence = self.edges[..idx].iter().filter(|f| *f == e).count();
        EdgeRef {
            u: e.u,
            v: e.v,
            colour: e.colour.clone(),
            occurrence,
        }
    }

    /// Inverse of [`ColouredGraph::edge_ref`].
    pub fn resolve_edge_ref(&self, r: &EdgeRef) -> Option<usize> {
        let key = Edge::new(r.u, r.v, r.colour.clone());
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| **e == key)
            .nth(r.occurrence)
            .map(|(i, _)| i)
    }

    /// Edge indices incident to each vertex (a loop is listed once).
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            inc[e.u].push(i);
            if e.v != e.u {
                inc[e.v].push(i);
            }
        }
        inc
    }

    /// Switch at `v`: every non-loop edge at `v` swaps red and blue.
    pub fn switch_at(&self, v: usize) -> Result<ColouredGraph> {
        if v >= self.n {
            return Err(Error::Argument(format!("vertex {v} out of range")));
        }
        let mut mask = vec![false; self.n];
        mask[v] = true;
        self.switch_mask(&mask)
    }

    /// Switch at every vertex of `set`. Only edges across the cut change.
    pub fn switch_set(&self, set: &[usize]) -> Result<ColouredGraph> {
        let mut mask = vec![false; self.n];
        for &v in set {
            if v >= self.n {
                return Err(Error::Argument(format!("vertex {v} out of range")));
            }
            mask[v] ^= true;
        }
        self.switch_mask(&mask)
    }

    /// Switch at the vertices flagged in `mask` (`mask.len() == n`).
    pub fn switch_mask(&self, mask: &[bool]) -> Result<ColouredGraph> {
        self.require_two_coloured()?;
        if mask.len() != self.n {
            return Err(Error::Argument("switch mask has wrong length".into()));
        }
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let colour = if mask[e.u] != mask[e.v] {
                    e.colour.flipped().expect("checked two-coloured")
                } else {
                    e.colour.clone()
                };
                Edge {
                    u: e.u,
                    v: e.v,
                    colour,
                }
            })
            .collect();
        Ok(ColouredGraph { n: self.n, edges })
    }

    /// Swap red and blue on every edge.
    pub fn swap_colours(&self) -> Result<ColouredGraph> {
        self.require_two_coloured()?;
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                u: e.u,
                v: e.v,
                colour: e.colour.flipped().expect("checked two-coloured"),
            })
            .collect();
        Ok(ColouredGraph { n: self.n, edges })
    }

    /// Rename vertex `v` to `perm[v]`; `perm` must be a permutation.
    pub fn permute(&self, perm: &[usize]) -> ColouredGraph {
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::new(perm[e.u], perm[e.v], e.colour.clone()))
            .collect();
        ColouredGraph { n: self.n, edges }
    }

    /// Delete the given vertices and their edges. Returns the remaining graph
    /// and, per original vertex, its new index (`None` when deleted).
    pub fn delete_vertices(&self, deleted: &[usize]) -> (ColouredGraph, Vec<Option<usize>>) {
        let mut gone = vec![false; self.n];
        for &v in deleted {
            if v < self.n {
                gone[v] = true;
            }
        }
        let mut relabel = vec![None; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if !gone[v] {
                relabel[v] = Some(next);
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|e| match (relabel[e.u], relabel[e.v]) {
                (Some(a), Some(b)) => Some(Edge::new(a, b, e.colour.clone())),
                _ => None,
            })
            .collect();
        (ColouredGraph { n: next, edges }, relabel)
    }

    /// Delete the edges with the given indices (duplicates ignored).
    pub fn delete_edges(&self, deleted: &[usize]) -> ColouredGraph {
        let mut gone = vec![false; self.edges.len()];
        for &i in deleted {
            if i < gone.len() {
                gone[i] = true;
            }
        }
        let edges = self
            .edges
            .iter()
            .zip(&gone)
            .filter(|(_, g)| !**g)
            .map(|(e, _)| e.clone())
            .collect();
        ColouredGraph { n: self.n, edges }
    }

    /// Keep only edges of the given colour.
    pub fn colour_subgraph(&self, colour: &Colour) -> ColouredGraph {
        ColouredGraph {
            n: self.n,
            edges: self
                .edges
                .iter()
                .filter(|e| e.colour == *colour)
                .cloned()
                .collect(),
        }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &ColouredGraph) -> ColouredGraph {
        let mut edges = self.edges.clone();
        edges.extend(
            other
                .edges
                .iter()
                .map(|e| Edge::new(e.u + self.n, e.v + self.n, e.colour.clone())),
        );
        ColouredGraph {
            n: self.n + other.n,
            edges,
        }
    }

    /// Sorted copy of the edge records, for multiset comparison.
    pub fn sorted_edges(&self) -> Vec<Edge> {
        let mut e = self.edges.clone();
        e.sort();
        e
    }

    /// Equality as edge multisets (order of records ignored).
    pub fn same_multiset(&self, other: &ColouredGraph) -> bool {
        self.n == other.n && self.sorted_edges() == other.sorted_edges()
    }

    /// Maximal vertex sets connected when colours are ignored, ordered by
    /// smallest member; each set is sorted.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let inc = self.incidence();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                for &ei in &inc[x] {
                    let y = self.edges[ei].other(x);
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Two-colourability of the underlying multigraph. Any loop fails;
    /// parallel edges do not.
    pub fn is_bipartite(&self) -> bool {
        self.two_colouring().is_some()
    }

    /// A proper 2-colouring of the underlying multigraph, if one exists.
    pub fn two_colouring(&self) -> Option<Vec<bool>> {
        if self.edges.iter().any(Edge::is_loop) {
            return None;
        }
        let inc = self.incidence();
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for root in 0..self.n {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                let sx = side[x].expect("queued vertices are coloured");
                for &ei in &inc[x] {
                    let y = self.edges[ei].other(x);
                    match side[y] {
                        None => {
                            side[y] = Some(!sx);
                            queue.push_back(y);
                        }
                        Some(sy) if sy == sx => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap_or(false)).collect())
    }

    /// Length of a shortest cycle of the underlying multigraph: a loop counts
    /// 1, a parallel pair 2. `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        if self.edges.iter().any(Edge::is_loop) {
            return Some(1);
        }
        let inc = self.incidence();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent_edge = vec![usize::MAX; self.n];
        for root in 0..self.n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                if let Some(b) = best {
                    if 2 * dist[x] + 1 >= b {
                        break;
                    }
                }
                for &ei in &inc[x] {
                    if ei == parent_edge[x] {
                        continue;
                    }
                    let y = self.edges[ei].other(x);
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        parent_edge[y] = ei;
                        queue.push_back(y);
                    } else {
                        let len = dist[x] + dist[y] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// BFS distance between two vertices, ignoring colours.
    pub fn distance(&self, from: usize, to: usize) -> Option<usize> {
        let inc = self.incidence();
        let mut dist = vec![usize::MAX; self.n];
        dist[from] = 0;
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                return Some(dist[x]);
            }
            for &ei in &inc[x] {
                let y = self.edges[ei].other(x);
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        None
    }
}

/// The twelve 2-edge-coloured cores of order at most two, up to swapping
/// the colours.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoreName {
    H1Rb,
    H1B,
    H1None,
    H2NoneRB,
    H2BNoneNone,
    H2BRB,
    H2BRNone,
    H2BRR,
    H2RbNoneNone,
    H2RbRB,
    H2RbRNone,
    H2RbRR,
}

impl CoreName {
    pub const ALL: [CoreName; 12] = [
        CoreName::H1Rb,
        CoreName::H1B,
        CoreName::H1None,
        CoreName::H2NoneRB,
        CoreName::H2BNoneNone,
        CoreName::H2BRB,
        CoreName::H2BRNone,
        CoreName::H2BRR,
        CoreName::H2RbNoneNone,
        CoreName::H2RbRB,
        CoreName::H2RbRNone,
        CoreName::H2RbRR,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CoreName::H1Rb => "H1_rb",
            CoreName::H1B => "H1_b",
            CoreName::H1None => "H1_-",
            CoreName::H2NoneRB => "H2-_r,b",
            CoreName::H2BNoneNone => "H2b_-,-",
            CoreName::H2BRB => "H2b_r,b",
            CoreName::H2BRNone => "H2b_r,-",
            CoreName::H2BRR => "H2b_r,r",
            CoreName::H2RbNoneNone => "H2rb_-,-",
            CoreName::H2RbRB => "H2rb_r,b",
            CoreName::H2RbRNone => "H2rb_r,-",
            CoreName::H2RbRR => "H2rb_r,r",
        }
    }

    pub fn from_name(name: &str) -> Option<CoreName> {
        CoreName::ALL.into_iter().find(|c| c.as_str() == name)
    }

    pub fn target(self) -> Target {
        Target::from_name(self.as_str()).expect("core names parse")
    }
}

impl fmt::Display for CoreName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How a target relates to its named core: `target` equals the core after
/// optionally swapping colours and then optionally swapping vertices 0 and 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoreMatch {
    pub core: CoreName,
    pub colours_swapped: bool,
    pub vertices_swapped: bool,
}

/// A homomorphism target: a coloured graph with same-colour parallel edges
/// collapsed and a per-colour adjacency table.
#[derive(Clone, Debug)]
pub struct Target {
    graph: ColouredGraph,
    table: Vec<(Colour, Vec<bool>)>,
    core_match: Option<CoreMatch>,
}

impl PartialEq for Target {
    fn eq(&self, other: &Target) -> bool {
        self.graph == other.graph
    }
}

impl Eq for Target {}

impl Target {
    pub fn new(graph: &ColouredGraph) -> Target {
        let mut t = Target::new_unmatched(graph);
        t.core_match = t.find_core_match();
        t
    }

    /// Parse `H1_<loops>` or `H2<edge>_<loop0>,<loop1>`.
    pub fn from_name(name: &str) -> Result<Target> {
        let bad = || Error::Argument(format!("invalid target name {name:?}"));
        let parse_set = |s: &str, allow_both: bool| -> Option<Vec<Colour>> {
            match s {
                "-" => Some(vec![]),
                "r" => Some(vec![Colour::RED]),
                "b" => Some(vec![Colour::BLUE]),
                "rb" | "br" if allow_both => Some(vec![Colour::RED, Colour::BLUE]),
                _ => None,
            }
        };
        if let Some(rest) = name.strip_prefix("H1_") {
            let loops = parse_set(rest, true).ok_or_else(bad)?;
            let g = ColouredGraph::from_edges(1, loops.into_iter().map(|c| (0, 0, c)))?;
            return Ok(Target::new(&g));
        }
        let rest = name.strip_prefix("H2").ok_or_else(bad)?;
        let (alpha, loops) = rest.split_once('_').ok_or_else(bad)?;
        let (beta, gamma) = loops.split_once(',').ok_or_else(bad)?;
        let mut edges = Vec::new();
        for c in parse_set(alpha, true).ok_or_else(bad)? {
            edges.push((0, 1, c));
        }
        for c in parse_set(beta, false).ok_or_else(bad)? {
            edges.push((0, 0, c));
        }
        for c in parse_set(gamma, false).ok_or_else(bad)? {
            edges.push((1, 1, c));
        }
        Ok(Target::new(&ColouredGraph::from_edges(2, edges)?))
    }

    pub fn graph(&self) -> &ColouredGraph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.n()
    }

    pub fn colours(&self) -> BTreeSet<Colour> {
        self.graph.colours()
    }

    pub fn is_two_coloured(&self) -> bool {
        self.graph.is_two_coloured()
    }

    /// Index of `colour` in the adjacency table, if the target uses it.
    pub fn colour_index(&self, colour: &Colour) -> Option<usize> {
        self.table.iter().position(|(c, _)| c == colour)
    }

    /// Adjacency test by colour-table index.
    #[inline]
    pub fn adjacent_idx(&self, colour_idx: usize, a: usize, b: usize) -> bool {
        self.table[colour_idx].1[a * self.graph.n() + b]
    }

    pub fn has_edge(&self, a: usize, b: usize, colour: &Colour) -> bool {
        self.colour_index(colour)
            .is_some_and(|ci| self.adjacent_idx(ci, a, b))
    }

    /// Name in the `H1_*` / `H2*_*,*` grammar, if the target is expressible
    /// in it as given (no symmetry applied).
    pub fn literal_name(&self) -> Option<String> {
        if !self.is_two_coloured() {
            return None;
        }
        let set = |a: usize, b: usize| -> &'static str {
            match (
                self.has_edge(a, b, &Colour::RED),
                self.has_edge(a, b, &Colour::BLUE),
            ) {
                (false, false) => "-",
                (true, false) => "r",
                (false, true) => "b",
                (true, true) => "rb",
            }
        };
        match self.order() {
            1 => Some(format!("H1_{}", set(0, 0))),
            2 => {
                let (l0, l1) = (set(0, 0), set(1, 1));
                if l0 == "rb" || l1 == "rb" {
                    return None;
                }
                Some(format!("H2{}_{},{}", set(0, 1), l0, l1))
            }
            _ => None,
        }
    }

    fn find_core_match(&self) -> Option<CoreMatch> {
        if self.order() > 2 || !self.is_two_coloured() {
            return None;
        }
        for colours_swapped in [false, true] {
            for vertices_swapped in [false, true] {
                if vertices_swapped && self.order() == 1 {
                    continue;
                }
                let mut g = self.graph.clone();
                if vertices_swapped {
                    g = g.permute(&[1, 0]);
                }
                if colours_swapped {
                    g = g.swap_colours().expect("two-coloured");
                }
                let name = Target::new_unmatched(&g).literal_name();
                if let Some(core) = name.as_deref().and_then(CoreName::from_name) {
                    return Some(CoreMatch {
                        core,
                        colours_swapped,
                        vertices_swapped,
                    });
                }
            }
        }
        None
    }

    fn new_unmatched(graph: &ColouredGraph) -> Target {
        let mut edges = graph.sorted_edges();
        edges.dedup();
        let graph = ColouredGraph {
            n: graph.n(),
            edges,
        };
        Target {
            table: Target::new_table(&graph),
            graph,
            core_match: None,
        }
    }

    fn new_table(graph: &ColouredGraph) -> Vec<(Colour, Vec<bool>)> {
        let n = graph.n();
        let mut table: Vec<(Colour, Vec<bool>)> = Vec::new();
        for e in graph.edges() {
            let idx = match table.iter().position(|(c, _)| *c == e.colour) {
                Some(i) => i,
                None => {
                    table.push((e.colour.clone(), vec![false; n * n]));
                    table.len() - 1
                }
            };
            table[idx].1[e.u * n + e.v] = true;
            table[idx].1[e.v * n + e.u] = true;
        }
        table
    }

    /// Which of the twelve named cores this target is, up to colour swap and
    /// vertex swap.
    pub fn core_match(&self) -> Option<CoreMatch> {
        self.core_match
    }

    /// Canonical core name when the target is one of the twelve cores.
    pub fn canonical_name(&self) -> Option<&'static str> {
        self.core_match.map(|m| m.core.as_str())
    }

    /// Best available label: canonical name, else literal name, else a
    /// structural summary.
    pub fn label(&self) -> String {
        if let Some(m) = self.core_match {
            if !m.colours_swapped && !m.vertices_swapped {
                return m.core.as_str().to_string();
            }
        }
        if let Some(n) = self.literal_name() {
            return n;
        }
        format!("graph(n={},m={})", self.order(), self.graph.m())
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

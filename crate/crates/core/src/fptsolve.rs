//! Solvers for vertex deletion (VDEL), edge deletion (EDEL) and switching
//! (SWITCH) towards a fixed target.
//!
//! Every solver returns a minimum-size certificate, and among those the
//! lexicographically least one, so the specialised paths and the exhaustive
//! [`solve_xp`] agree on certificates as well as on answers.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::dichotomy::{core_of, edel_is_polynomial, MAX_CORE_ORDER};
use crate::ecgraph::{Colour, ColouredGraph, CoreName, Edge, Target};
use crate::error::{Error, Result};
use crate::homcheck::{
    build_2sat, find_odd_blue_parity_cycle, find_rb_odd_r_path, find_rbr_image, hom_exists_2sat,
    hom_exists_bruteforce, min_switch_to_monochromatic, Encoding, Homomorphism, Obstruction,
};
use crate::twosat::{group_del_almost_2sat, var_del_almost_2sat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ProblemKind {
    Vdel,
    Edel,
    Switch,
}

impl ProblemKind {
    pub const ALL: [ProblemKind; 3] = [ProblemKind::Vdel, ProblemKind::Edel, ProblemKind::Switch];

    pub fn as_str(self) -> &'static str {
        match self {
            ProblemKind::Vdel => "vdel",
            ProblemKind::Edel => "edel",
            ProblemKind::Switch => "switch",
        }
    }
}

impl fmt::Display for ProblemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ProblemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<ProblemKind> {
        match s.to_ascii_lowercase().as_str() {
            "vdel" => Ok(ProblemKind::Vdel),
            "edel" => Ok(ProblemKind::Edel),
            "switch" => Ok(ProblemKind::Switch),
            _ => Err(Error::Argument(format!("unknown problem {s:?}"))),
        }
    }
}

/// What a yes-answer modifies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    DeletedVertices(Vec<usize>),
    /// Edge indices of the input graph.
    DeletedEdges(Vec<usize>),
    Switched(Vec<usize>),
}

impl Certificate {
    fn new(problem: ProblemKind, items: Vec<usize>) -> Certificate {
        match problem {
            ProblemKind::Vdel => Certificate::DeletedVertices(items),
            ProblemKind::Edel => Certificate::DeletedEdges(items),
            ProblemKind::Switch => Certificate::Switched(items),
        }
    }

    pub fn items(&self) -> &[usize] {
        match self {
            Certificate::DeletedVertices(v)
            | Certificate::DeletedEdges(v)
            | Certificate::Switched(v) => v,
        }
    }

    pub fn len(&self) -> usize {
        self.items().len()
    }

    pub fn is_empty(&self) -> bool {
        self.items().is_empty()
    }

    pub fn problem(&self) -> ProblemKind {
        match self {
            Certificate::DeletedVertices(_) => ProblemKind::Vdel,
            Certificate::DeletedEdges(_) => ProblemKind::Edel,
            Certificate::Switched(_) => ProblemKind::Switch,
        }
    }
}

/// Which algorithm produced a solution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Exhaustive,
    VariableDeletion,
    GroupDeletion,
    EdgeMatching,
    SwitchDirect,
    SwitchBranching,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Exhaustive => "exhaustive",
            Method::VariableDeletion => "variable-deletion-2sat",
            Method::GroupDeletion => "group-deletion-2sat",
            Method::EdgeMatching => "edge-deletion-matching",
            Method::SwitchDirect => "switch-direct",
            Method::SwitchBranching => "switch-branching",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub problem: ProblemKind,
    pub answer: bool,
    /// Present exactly when `answer` is yes.
    pub certificate: Option<Certificate>,
    /// Image of every input vertex; deleted vertices map to `None`.
    pub homomorphism: Option<Vec<Option<usize>>>,
    pub budget_used: usize,
    pub method: Method,
    /// The specialised path did not apply and the exhaustive search ran.
    pub fallback: bool,
    /// Witness of a no-answer, when the algorithm has one.
    pub obstruction: Option<Obstruction>,
}

impl Solution {
    fn no(problem: ProblemKind, method: Method) -> Solution {
        Solution {
            problem,
            answer: false,
            certificate: None,
            homomorphism: None,
            budget_used: 0,
            method,
            fallback: false,
            obstruction: None,
        }
    }
}

/// Homomorphism test used inside the exhaustive search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum HomOracle {
    BruteForce,
    TwoSat,
    /// 2-SAT for targets of order at most two, brute force otherwise.
    #[default]
    Auto,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Skip the specialised algorithms.
    pub force_xp: bool,
    /// Require exactly `k` modifications instead of at most `k`.
    pub strict: bool,
    pub oracle: HomOracle,
    /// Cut the exhaustive search when a decided part already fails.
    pub prune: bool,
}

impl Default for SolveOptions {
    fn default() -> SolveOptions {
        SolveOptions {
            force_xp: false,
            strict: false,
            oracle: HomOracle::Auto,
            prune: true,
        }
    }
}

fn check_switch_inputs(problem: ProblemKind, g: &ColouredGraph, h: &Target) -> Result<()> {
    if problem == ProblemKind::Switch && !(g.is_two_coloured() && h.is_two_coloured()) {
        return Err(Error::Domain(
            "switching needs a 2-edge-coloured instance and target".into(),
        ));
    }
    Ok(())
}

/// Apply a certificate. Returns the modified graph and the new index of
/// every input vertex.
pub fn apply_certificate(
    g: &ColouredGraph,
    certificate: &Certificate,
) -> Result<(ColouredGraph, Vec<Option<usize>>)> {
    let identity = || (0..g.n()).map(Some).collect();
    match certificate {
        Certificate::DeletedVertices(vs) => {
            if let Some(&v) = vs.iter().find(|&&v| v >= g.n()) {
                return Err(Error::Argument(format!("vertex {v} out of range")));
            }
            Ok(g.delete_vertices(vs))
        }
        Certificate::DeletedEdges(es) => {
            if let Some(&e) = es.iter().find(|&&e| e >= g.m()) {
                return Err(Error::Argument(format!("edge {e} out of range")));
            }
            Ok((g.delete_edges(es), identity()))
        }
        Certificate::Switched(vs) => Ok((g.switch_set(vs)?, identity())),
    }
}

/// Check a solution by replaying its certificate: size within `k`, the
/// stated homomorphism valid, and the brute-force test positive.
pub fn verify_solution(g: &ColouredGraph, h: &Target, k: usize, s: &Solution) -> Result<bool> {
    if !s.answer {
        return Ok(s.certificate.is_none());
    }
    let Some(cert) = &s.certificate else {
        return Ok(false);
    };
    if cert.problem() != s.problem || cert.len() > k || cert.len() != s.budget_used {
        return Ok(false);
    }
    let distinct: BTreeSet<usize> = cert.items().iter().copied().collect();
    if distinct.len() != cert.len() {
        return Ok(false);
    }
    let (modified, relabel) = apply_certificate(g, cert)?;
    if let Some(map) = &s.homomorphism {
        let mut m = vec![0; modified.n()];
        for (v, image) in map.iter().enumerate() {
            match (relabel[v], image) {
                (Some(nv), Some(a)) => m[nv] = *a,
                (None, None) => {}
                _ => return Ok(false),
            }
        }
        if !crate::homcheck::is_homomorphism(&modified, h, &m) {
            return Ok(false);
        }
    }
    Ok(hom_exists_bruteforce(&modified, h).is_some())
}

/// Target reduction shared by the solvers: the core of `h` when it is
/// computable, with the embedding back into `h`.
struct Reduced {
    core: Option<(Target, Vec<usize>)>,
}

impl Reduced {
    fn new(h: &Target) -> Reduced {
        let core = if h.order() <= MAX_CORE_ORDER {
            core_of(h).ok()
        } else {
            None
        };
        Reduced { core }
    }

    /// A target of order at most two homomorphically equivalent to `h`.
    fn small<'a>(&'a self, h: &'a Target) -> Option<&'a Target> {
        if (1..=2).contains(&h.order()) {
            return Some(h);
        }
        match &self.core {
            Some((c, _)) if (1..=2).contains(&c.order()) => Some(c),
            _ => None,
        }
    }
}

/// A homomorphism `g -> h`, via 2-SAT whenever `h` or its core is small.
fn find_hom(g: &ColouredGraph, h: &Target, reduced: &Reduced) -> Result<Option<Homomorphism>> {
    if (1..=2).contains(&h.order()) {
        return hom_exists_2sat(g, h);
    }
    if let Some((core, emb)) = &reduced.core {
        if (1..=2).contains(&core.order()) {
            return Ok(hom_exists_2sat(g, core)?.map(|m| m.into_iter().map(|a| emb[a]).collect()));
        }
    }
    Ok(hom_exists_bruteforce(g, h))
}

fn finish(
    problem: ProblemKind,
    g: &ColouredGraph,
    h: &Target,
    reduced: &Reduced,
    mut items: Vec<usize>,
    method: Method,
) -> Result<Solution> {
    items.sort_unstable();
    let cert = Certificate::new(problem, items);
    let (modified, relabel) = apply_certificate(g, &cert)?;
    let map = find_hom(&modified, h, reduced)?.ok_or_else(|| {
        Error::Contract(format!(
            "{method} produced a certificate that does not replay"
        ))
    })?;
    let homomorphism = relabel.iter().map(|r| r.map(|nv| map[nv])).collect();
    Ok(Solution {
        problem,
        answer: true,
        budget_used: cert.len(),
        certificate: Some(cert),
        homomorphism: Some(homomorphism),
        method,
        fallback: false,
        obstruction: None,
    })
}

enum Oracle<'a> {
    Brute(&'a Target),
    TwoSat(&'a Target),
}

impl Oracle<'_> {
    fn maps(&self, g: &ColouredGraph) -> bool {
        match self {
            Oracle::Brute(h) => hom_exists_bruteforce(g, h).is_some(),
            Oracle::TwoSat(h) => hom_exists_2sat(g, h).expect("order checked").is_some(),
        }
    }
}

/// Exhaustive search over modification sets in order of size, then
/// lexicographically. With pruning, ground elements are decided in index
/// order and a branch is cut as soon as the decided part of the graph has no
/// homomorphism; for switching, a component never receives more than half
/// of its vertices, since switching the complement inside a component gives
/// the same graph.
struct XpSearch<'a> {
    problem: ProblemKind,
    g: &'a ColouredGraph,
    oracle: Oracle<'a>,
    prune: bool,
    halve: bool,
    ground: usize,
    /// vertex problems: edges whose larger endpoint is the vertex
    back: Vec<Vec<usize>>,
    flipped: Vec<Option<Colour>>,
    comp_of: Vec<usize>,
    comp_cap: Vec<usize>,
}

struct XpState {
    chosen: Vec<usize>,
    in_set: Vec<bool>,
    edges: Vec<Edge>,
    /// per vertex, positions in `edges` of the decided edges at it
    adj: Vec<Vec<usize>>,
    comp_count: Vec<usize>,
}

impl XpState {
    fn push_edge(&mut self, e: Edge) {
        let at = self.edges.len();
        self.adj[e.u].push(at);
        if !e.is_loop() {
            self.adj[e.v].push(at);
        }
        self.edges.push(e);
    }

    fn pop_edges(&mut self, count: usize) {
        for _ in 0..count {
            let e = self.edges.pop().expect("pushed");
            self.adj[e.u].pop();
            if !e.is_loop() {
                self.adj[e.v].pop();
            }
        }
    }

    /// The decided edges in the component of `start`, relabelled.
    fn component(&self, start: usize) -> ColouredGraph {
        let mut label = std::collections::HashMap::new();
        label.insert(start, 0usize);
        let mut queue = vec![start];
        let mut edges = Vec::new();
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            for &at in &self.adj[v] {
                let e = &self.edges[at];
                let w = e.other(v);
                if let std::collections::hash_map::Entry::Vacant(slot) = label.entry(w) {
                    slot.insert(queue.len());
                    queue.push(w);
                }
                if e.u == v {
                    edges.push(at);
                }
            }
        }
        let edges = edges
            .into_iter()
            .map(|at| {
                let e = &self.edges[at];
                Edge::new(label[&e.u], label[&e.v], e.colour.clone())
            })
            .collect();
        ColouredGraph::from_parts(queue.len(), edges)
    }
}

impl<'a> XpSearch<'a> {
    fn new(
        problem: ProblemKind,
        g: &'a ColouredGraph,
        oracle: Oracle<'a>,
        opts: &SolveOptions,
    ) -> XpSearch<'a> {
        let mut back = vec![Vec::new(); g.n()];
        for (i, e) in g.edges().iter().enumerate() {
            back[e.v].push(i);
        }
        let comps = g.connected_components();
        let mut comp_of = vec![0; g.n()];
        for (ci, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = ci;
            }
        }
        XpSearch {
            problem,
            g,
            oracle,
            prune: opts.prune,
            halve: opts.prune && !opts.strict && problem == ProblemKind::Switch,
            ground: match problem {
                ProblemKind::Edel => g.m(),
                _ => g.n(),
            },
            back,
            flipped: g.edges().iter().map(|e| e.colour.flipped().ok()).collect(),
            comp_of,
            comp_cap: comps.iter().map(|c| c.len() / 2).collect(),
        }
    }

    fn run(&self, size: usize) -> Option<Vec<usize>> {
        if size > self.ground {
            return None;
        }
        let mut st = XpState {
            chosen: Vec::with_capacity(size),
            in_set: vec![false; self.ground],
            edges: Vec::new(),
            adj: vec![Vec::new(); self.g.n()],
            comp_count: vec![0; self.comp_cap.len()],
        };
        if self.dfs(0, size, &mut st) {
            Some(st.chosen)
        } else {
            None
        }
    }

    /// Record the edges decided by fixing element `i`; returns how many.
    fn push_edges(&self, i: usize, st: &mut XpState) -> usize {
        let before = st.edges.len();
        match self.problem {
            ProblemKind::Vdel => {
                if !st.in_set[i] {
                    for &ei in &self.back[i] {
                        let e = self.g.edge(ei);
                        if !st.in_set[e.u] {
                            st.push_edge(e.clone());
                        }
                    }
                }
            }
            ProblemKind::Edel => {
                if !st.in_set[i] {
                    st.push_edge(self.g.edge(i).clone());
                }
            }
            ProblemKind::Switch => {
                for &ei in &self.back[i] {
                    let e = self.g.edge(ei);
                    let colour = if st.in_set[e.u] != st.in_set[e.v] {
                        self.flipped[ei].clone().expect("two-coloured")
                    } else {
                        e.colour.clone()
                    };
                    st.push_edge(Edge {
                        u: e.u,
                        v: e.v,
                        colour,
                    });
                }
            }
        }
        st.edges.len() - before
    }

    /// Earlier components were already checked, so only the one holding
    /// the newest edge can fail.
    fn prefix_maps(&self, st: &XpState) -> bool {
        let last = st.edges.last().expect("edges pushed");
        self.oracle.maps(&st.component(last.u))
    }

    fn leaf_maps(&self, st: &XpState) -> bool {
        let cert = Certificate::new(self.problem, st.chosen.clone());
        let (modified, _) = apply_certificate(self.g, &cert).expect("valid certificate");
        self.oracle.maps(&modified)
    }

    fn dfs(&self, i: usize, size: usize, st: &mut XpState) -> bool {
        if i == self.ground {
            return self.prune || self.leaf_maps(st);
        }
        let need = size - st.chosen.len();
        let left = self.ground - i;
        if need > left {
            return false;
        }
        for include in [true, false] {
            if include && need == 0 || !include && need == left {
                continue;
            }
            let comp = self.comp_of.get(i).copied().unwrap_or(0);
            if include && self.halve && st.comp_count[comp] + 1 > self.comp_cap[comp] {
                continue;
            }
            if include {
                st.in_set[i] = true;
                st.chosen.push(i);
                if self.halve {
                    st.comp_count[comp] += 1;
                }
            }
            let mut ok = true;
            let mut pushed = 0;
            if self.prune {
                pushed = self.push_edges(i, st);
                ok = pushed == 0 || self.prefix_maps(st);
            }
            if ok && self.dfs(i + 1, size, st) {
                return true;
            }
            st.pop_edges(pushed);
            if include {
                st.in_set[i] = false;
                st.chosen.pop();
                if self.halve {
                    st.comp_count[comp] -= 1;
                }
            }
        }
        false
    }
}

/// Exhaustive solver for any target: the least modification set of minimum
/// size, with default options.
pub fn solve_xp(problem: ProblemKind, g: &ColouredGraph, h: &Target, k: usize) -> Result<Solution> {
    solve_xp_with(problem, g, h, k, &SolveOptions::default())
}

pub fn solve_xp_with(
    problem: ProblemKind,
    g: &ColouredGraph,
    h: &Target,
    k: usize,
    opts: &SolveOptions,
) -> Result<Solution> {
    check_switch_inputs(problem, g, h)?;
    let reduced = Reduced::new(h);
    let oracle = match opts.oracle {
        HomOracle::BruteForce => Oracle::Brute(h),
        HomOracle::TwoSat => match reduced.small(h) {
            Some(t) => Oracle::TwoSat(t),
            None => {
                return Err(Error::Domain(
                    "2-SAT oracle needs a target of order at most two".into(),
                ))
            }
        },
        HomOracle::Auto => match reduced.small(h) {
            Some(t) => Oracle::TwoSat(t),
            None => Oracle::Brute(h),
        },
    };
    let search = XpSearch::new(problem, g, oracle, opts);
    let sizes = if opts.strict { k..=k } else { 0..=k };
    for size in sizes {
        if let Some(set) = search.run(size) {
            return finish(problem, g, h, &reduced, set, Method::Exhaustive);
        }
    }
    Ok(Solution::no(problem, Method::Exhaustive))
}

fn xp_fallback(problem: ProblemKind, g: &ColouredGraph, h: &Target, k: usize) -> Result<Solution> {
    let mut s = solve_xp(problem, g, h, k)?;
    s.fallback = true;
    Ok(s)
}

/// VDEL through Variable Deletion Almost 2-SAT on an encoding in which
/// deleting a variable removes exactly the constraints of its vertex.
pub fn solve_vdel(g: &ColouredGraph, h: &Target, k: usize) -> Result<Solution> {
    let reduced = Reduced::new(h);
    let Some(t) = reduced.small(h) else {
        return xp_fallback(ProblemKind::Vdel, g, h, k);
    };
    let f = build_2sat(g, t, Encoding::VertexDeletion)?;
    match var_del_almost_2sat(&f, k) {
        Some(sol) => finish(
            ProblemKind::Vdel,
            g,
            h,
            &reduced,
            sol.deleted,
            Method::VariableDeletion,
        ),
        None => Ok(Solution::no(ProblemKind::Vdel, Method::VariableDeletion)),
    }
}

/// EDEL: the matching algorithm when the target's core allows it, Group
/// Deletion Almost 2-SAT with one group per edge otherwise.
pub fn solve_edel(g: &ColouredGraph, h: &Target, k: usize) -> Result<Solution> {
    let reduced = Reduced::new(h);
    let Some(t) = reduced.small(h) else {
        return xp_fallback(ProblemKind::Edel, g, h, k);
    };
    if let Some((core, _)) = &reduced.core {
        if edel_is_polynomial(core) {
            let mut s = solve_edel_ptime(g, core, k)?;
            if s.answer {
                let items = s
                    .certificate
                    .take()
                    .expect("yes has certificate")
                    .items()
                    .to_vec();
                s = finish(
                    ProblemKind::Edel,
                    g,
                    h,
                    &reduced,
                    items,
                    Method::EdgeMatching,
                )?;
            }
            return Ok(s);
        }
    }
    edel_by_groups(g, h, t, &reduced, k)
}

/// EDEL through Group Deletion Almost 2-SAT, regardless of the target.
pub fn solve_edel_groups(g: &ColouredGraph, h: &Target, k: usize) -> Result<Solution> {
    let reduced = Reduced::new(h);
    let Some(t) = reduced.small(h) else {
        return Err(Error::Domain(
            "group encoding needs a target of order at most two".into(),
        ));
    };
    edel_by_groups(g, h, t, &reduced, k)
}

fn edel_by_groups(
    g: &ColouredGraph,
    h: &Target,
    t: &Target,
    reduced: &Reduced,
    k: usize,
) -> Result<Solution> {
    let f = build_2sat(g, t, Encoding::EdgeGroups)?;
    match group_del_almost_2sat(&f, k)? {
        Some(sol) => finish(
            ProblemKind::Edel,
            g,
            h,
            reduced,
            sol.deleted,
            Method::GroupDeletion,
        ),
        None => Ok(Solution::no(ProblemKind::Edel, Method::GroupDeletion)),
    }
}

/// Side of an edge after colour dropping and merging in the matching
/// algorithm: `A` edges need both ends on target vertex 0, `B` on vertex 1.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    A,
    B,
}

enum EdgeClass {
    Free,
    Foreign,
    Fixed(Side),
    /// loops on both target vertices: either side
    Both,
}

struct EdgeMatching<'a> {
    g: &'a ColouredGraph,
    class: Vec<EdgeClass>,
}

impl EdgeMatching<'_> {
    /// Minimum number of deletions among the edges not in `removed`, and
    /// one optimal deletion set.
    fn optimum(&self, removed: &[bool]) -> (usize, Vec<usize>) {
        let mut deleted = Vec::new();
        // split copies: (edge, side)
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (i, c) in self.class.iter().enumerate() {
            if removed[i] {
                continue;
            }
            match c {
                EdgeClass::Free => {}
                EdgeClass::Foreign => deleted.push(i),
                EdgeClass::Fixed(Side::A) => left.push(i),
                EdgeClass::Fixed(Side::B) => right.push(i),
                EdgeClass::Both => {
                    left.push(i);
                    right.push(i);
                }
            }
        }
        let mut at_vertex: Vec<Vec<usize>> = vec![Vec::new(); self.g.n()];
        for (ri, &e) in right.iter().enumerate() {
            let edge = self.g.edge(e);
            at_vertex[edge.u].push(ri);
            if edge.v != edge.u {
                at_vertex[edge.v].push(ri);
            }
        }
        let adj: Vec<Vec<usize>> = left
            .iter()
            .map(|&e| {
                let edge = self.g.edge(e);
                let mut nb: Vec<usize> = at_vertex[edge.u]
                    .iter()
                    .chain(&at_vertex[edge.v])
                    .copied()
                    .collect();
                nb.sort_unstable();
                nb.dedup();
                nb
            })
            .collect();
        let (in_left, in_right) = konig_cover(&adj, right.len());
        let mut covered = vec![0u8; self.g.m()];
        for (li, &e) in left.iter().enumerate() {
            if in_left[li] {
                covered[e] += 1;
            }
        }
        for (ri, &e) in right.iter().enumerate() {
            if in_right[ri] {
                covered[e] += 1;
            }
        }
        for (i, c) in self.class.iter().enumerate() {
            let gone = match c {
                EdgeClass::Fixed(_) => covered[i] == 1,
                EdgeClass::Both => covered[i] == 2,
                _ => false,
            };
            if gone && !removed[i] {
                deleted.push(i);
            }
        }
        deleted.sort_unstable();
        (deleted.len(), deleted)
    }
}

/// Maximum matching by augmenting paths, then a minimum vertex cover from
/// the alternating-reachability sets.
fn konig_cover(adj: &[Vec<usize>], n_right: usize) -> (Vec<bool>, Vec<bool>) {
    let n_left = adj.len();
    let mut match_r: Vec<Option<usize>> = vec![None; n_right];
    let mut match_l: Vec<Option<usize>> = vec![None; n_left];
    fn augment(
        l: usize,
        adj: &[Vec<usize>],
        seen: &mut [bool],
        match_l: &mut [Option<usize>],
        match_r: &mut [Option<usize>],
    ) -> bool {
        for &r in &adj[l] {
            if seen[r] {
                continue;
            }
            seen[r] = true;
            if match_r[r].is_none_or(|l2| augment(l2, adj, seen, match_l, match_r)) {
                match_r[r] = Some(l);
                match_l[l] = Some(r);
                return true;
            }
        }
        false
    }
    for l in 0..n_left {
        let mut seen = vec![false; n_right];
        augment(l, adj, &mut seen, &mut match_l, &mut match_r);
    }
    let mut reach_l = vec![false; n_left];
    let mut reach_r = vec![false; n_right];
    let mut stack: Vec<usize> = (0..n_left).filter(|&l| match_l[l].is_none()).collect();
    for &l in &stack {
        reach_l[l] = true;
    }
    while let Some(l) = stack.pop() {
        for &r in &adj[l] {
            if reach_r[r] || match_l[l] == Some(r) {
                continue;
            }
            reach_r[r] = true;
            if let Some(l2) = match_r[r] {
                if !reach_l[l2] {
                    reach_l[l2] = true;
                    stack.push(l2);
                }
            }
        }
    }
    (reach_l.iter().map(|&x| !x).collect(), reach_r)
}

/// Polynomial EDEL for targets whose every colour is loops-only or has all
/// three edges: colours with all edges are ignored, colours missing from the
/// target are deleted, the rest is a bipartite vertex cover between edges
/// forced to opposite target vertices.
pub fn solve_edel_ptime(g: &ColouredGraph, h: &Target, k: usize) -> Result<Solution> {
    if !(1..=2).contains(&h.order()) || !edel_is_polynomial(h) {
        return Err(Error::Contract(format!(
            "target {h} is not in the polynomial edge-deletion class"
        )));
    }
    let class = g
        .edges()
        .iter()
        .map(|e| {
            let c = &e.colour;
            if h.colour_index(c).is_none() {
                return EdgeClass::Foreign;
            }
            if h.order() == 1 || h.has_edge(0, 1, c) {
                return EdgeClass::Free;
            }
            match (h.has_edge(0, 0, c), h.has_edge(1, 1, c)) {
                (true, true) => EdgeClass::Both,
                (true, false) => EdgeClass::Fixed(Side::A),
                _ => EdgeClass::Fixed(Side::B),
            }
        })
        .collect();
    let em = EdgeMatching { g, class };
    let mut removed = vec![false; g.m()];
    let (best, _) = em.optimum(&removed);
    if best > k {
        return Ok(Solution::no(ProblemKind::Edel, Method::EdgeMatching));
    }
    // least set among the optimal ones, one edge at a time
    let mut chosen = Vec::new();
    let mut rest = best;
    for e in 0..g.m() {
        if rest == 0 {
            break;
        }
        removed[e] = true;
        if em.optimum(&removed).0 + 1 == rest {
            chosen.push(e);
            rest -= 1;
        } else {
            removed[e] = false;
        }
    }
    finish(
        ProblemKind::Edel,
        g,
        h,
        &Reduced::new(h),
        chosen,
        Method::EdgeMatching,
    )
}

/// Forced switch labels of one component: same colour as `colour` keeps the
/// label, the other colour flips it. `None` on a contradiction.
fn component_classes(
    g: &ColouredGraph,
    inc: &[Vec<usize>],
    comp: &[usize],
    colour: &Colour,
) -> Option<[Vec<usize>; 2]> {
    let mut label: std::collections::HashMap<usize, bool> = std::collections::HashMap::new();
    label.insert(comp[0], false);
    let mut stack = vec![comp[0]];
    while let Some(x) = stack.pop() {
        let lx = label[&x];
        for &ei in &inc[x] {
            let e = g.edge(ei);
            let differ = e.colour != *colour;
            if e.is_loop() {
                if differ {
                    return None;
                }
                continue;
            }
            let y = e.other(x);
            match label.get(&y) {
                None => {
                    label.insert(y, lx ^ differ);
                    stack.push(y);
                }
                Some(&ly) if ly != lx ^ differ => return None,
                Some(_) => {}
            }
        }
    }
    let first: Vec<usize> = comp.iter().copied().filter(|v| !label[v]).collect();
    let second: Vec<usize> = comp.iter().copied().filter(|v| label[v]).collect();
    Some([first, second])
}

fn least(candidates: impl IntoIterator<Item = Vec<usize>>) -> Option<Vec<usize>> {
    candidates
        .into_iter()
        .min_by(|a, b| (a.len(), a).cmp(&(b.len(), b)))
}

/// Bounded search for switching targets with finitely many obstructions:
/// while an obstruction remains, one of `branch_vertices` must be switched.
/// All minimum sets are collected and the least is returned.
fn switch_branching(
    g: &ColouredGraph,
    k: usize,
    witness: &dyn Fn(&ColouredGraph) -> Result<Option<Obstruction>>,
    branch_vertices: &dyn Fn(&Obstruction) -> Vec<usize>,
) -> Result<Option<Vec<usize>>> {
    fn go(
        g: &ColouredGraph,
        mask: &mut Vec<bool>,
        depth: usize,
        witness: &dyn Fn(&ColouredGraph) -> Result<Option<Obstruction>>,
        branch_vertices: &dyn Fn(&Obstruction) -> Vec<usize>,
        found: &mut BTreeSet<Vec<usize>>,
    ) -> Result<()> {
        let current = g.switch_mask(mask)?;
        match witness(&current)? {
            None => {
                if depth == 0 {
                    found.insert((0..mask.len()).filter(|&v| mask[v]).collect());
                }
            }
            Some(w) if depth > 0 => {
                for v in branch_vertices(&w) {
                    if mask[v] {
                        continue;
                    }
                    mask[v] = true;
                    go(g, mask, depth - 1, witness, branch_vertices, found)?;
                    mask[v] = false;
                }
            }
            Some(_) => {}
        }
        Ok(())
    }
    for depth in 0..=k.min(g.n()) {
        let mut found = BTreeSet::new();
        go(
            g,
            &mut vec![false; g.n()],
            depth,
            witness,
            branch_vertices,
            &mut found,
        )?;
        if let Some(s) = found.into_iter().next() {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// SWITCH, dispatched on which of the twelve cores the target's core is.
pub fn solve_switch(g: &ColouredGraph, h: &Target, k: usize) -> Result<Solution> {
    check_switch_inputs(ProblemKind::Switch, g, h)?;
    let reduced = Reduced::new(h);
    let matched = reduced.core.as_ref().and_then(|(c, _)| c.core_match());
    let Some(m) = matched else {
        return xp_fallback(ProblemKind::Switch, g, h, k);
    };
    // work with the named core; swapping colours commutes with switching
    let work = if m.colours_swapped {
        g.swap_colours()?
    } else {
        g.clone()
    };
    let p = ProblemKind::Switch;
    let done = |set: Vec<usize>, method| finish(p, g, h, &reduced, set, method);
    let refuse = |method, obstruction: Option<Obstruction>| {
        let mut s = Solution::no(p, method);
        s.obstruction = obstruction;
        Ok(s)
    };
    let within = |set: Option<Vec<usize>>| set.filter(|s| s.len() <= k);
    match m.core {
        CoreName::H1Rb => done(vec![], Method::SwitchDirect),
        CoreName::H1None => {
            if work.m() == 0 {
                done(vec![], Method::SwitchDirect)
            } else {
                refuse(Method::SwitchDirect, None)
            }
        }
        CoreName::H1B => match within(min_switch_to_monochromatic(&work, &Colour::BLUE)?) {
            Some(s) => done(s, Method::SwitchDirect),
            None => refuse(Method::SwitchDirect, None),
        },
        CoreName::H2NoneRB => {
            let inc = work.incidence();
            let mut total = Vec::new();
            for comp in work.connected_components() {
                let options = [Colour::RED, Colour::BLUE]
                    .iter()
                    .filter_map(|c| component_classes(&work, &inc, &comp, c))
                    .flatten();
                match least(options) {
                    Some(s) => total.extend(s),
                    None => return refuse(Method::SwitchDirect, None),
                }
            }
            match within(Some(total)) {
                Some(s) => done(s, Method::SwitchDirect),
                None => refuse(Method::SwitchDirect, None),
            }
        }
        CoreName::H2RbNoneNone => {
            if work.is_bipartite() {
                done(vec![], Method::SwitchDirect)
            } else {
                refuse(Method::SwitchDirect, None)
            }
        }
        CoreName::H2BNoneNone => {
            if !work.is_bipartite() {
                return refuse(Method::SwitchDirect, None);
            }
            match within(min_switch_to_monochromatic(&work, &Colour::BLUE)?) {
                Some(s) => done(s, Method::SwitchDirect),
                None => refuse(Method::SwitchDirect, None),
            }
        }
        CoreName::H2BRR => match find_odd_blue_parity_cycle(&work)? {
            None => done(vec![], Method::SwitchDirect),
            Some(w) => refuse(Method::SwitchDirect, Some(w)),
        },
        CoreName::H2BRB => {
            let set = switch_branching(&work, k, &|x| find_rbr_image(x), &|w| w.vertex_set())?;
            match set {
                Some(s) => done(s, Method::SwitchBranching),
                None => refuse(Method::SwitchBranching, find_rbr_image(&work)?),
            }
        }
        CoreName::H2BRNone => {
            if let Some(w) = find_odd_blue_parity_cycle(&work)? {
                return refuse(Method::SwitchBranching, Some(w));
            }
            let ends = |w: &Obstruction| {
                let l = w.vertices.len();
                let mut v = vec![
                    w.vertices[0],
                    w.vertices[1],
                    w.vertices[l - 2],
                    w.vertices[l - 1],
                ];
                v.sort_unstable();
                v.dedup();
                v
            };
            match switch_branching(&work, k, &|x| find_rb_odd_r_path(x), &ends)? {
                Some(s) => done(s, Method::SwitchBranching),
                None => refuse(Method::SwitchBranching, find_rb_odd_r_path(&work)?),
            }
        }
        CoreName::H2RbRB | CoreName::H2RbRNone | CoreName::H2RbRR => {
            let opts = SolveOptions {
                oracle: HomOracle::TwoSat,
                ..SolveOptions::default()
            };
            solve_xp_with(p, g, h, k, &opts)
        }
    }
}

/// Dispatch on the problem. `strict` asks for exactly `k` modifications:
/// deletion certificates are padded with the least unused elements, and
/// switching is searched over sets of size exactly `k`.
pub fn solve(
    problem: ProblemKind,
    g: &ColouredGraph,
    h: &Target,
    k: usize,
    opts: &SolveOptions,
) -> Result<Solution> {
    if opts.force_xp || (opts.strict && problem == ProblemKind::Switch) {
        return solve_xp_with(problem, g, h, k, opts);
    }
    let mut s = match problem {
        ProblemKind::Vdel => solve_vdel(g, h, k)?,
        ProblemKind::Edel => solve_edel(g, h, k)?,
        ProblemKind::Switch => solve_switch(g, h, k)?,
    };
    if opts.strict && s.answer {
        let ground = if problem == ProblemKind::Edel {
            g.m()
        } else {
            g.n()
        };
        if ground < k {
            return Ok(Solution::no(problem, s.method));
        }
        let mut items = s
            .certificate
            .take()
            .expect("yes has certificate")
            .items()
            .to_vec();
        let used: BTreeSet<usize> = items.iter().copied().collect();
        items.extend(
            (0..ground)
                .filter(|x| !used.contains(x))
                .take(k - used.len()),
        );
        let method = s.method;
        s = finish(problem, g, h, &Reduced::new(h), items, method)?;
    }
    Ok(s)
}

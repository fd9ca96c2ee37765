//! Instance generators for the hardness reductions: three from Vertex
//! Cover and one family from Multicoloured Independent Set, plus a checker
//! for the gadget properties the latter relies on.
//!
//! The independent-set reduction replaces part `V_i` by a partition gadget
//! with `|V_i|` special vertices and every edge `uv` between different parts
//! by an edge gadget whose two special vertices are identified with those
//! of `u` and `v`. The target is `H2rb_r,x` for `x` in `{r, b, -}`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::ecgraph::{Colour, ColouredGraph, Target};
use crate::error::{Error, Result};
use crate::fptsolve::ProblemKind;
use crate::homcheck::hom_exists_2sat;

/// Uncoloured simple graph with a budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VcInstance {
    n: usize,
    edges: Vec<(usize, usize)>,
    pub k: usize,
}

fn simple_edges(n: usize, edges: &[(usize, usize)]) -> Result<Vec<(usize, usize)>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(edges.len());
    for &(a, b) in edges {
        if a >= n || b >= n {
            return Err(Error::Argument(format!("edge {a}-{b} out of range")));
        }
        if a == b {
            return Err(Error::Argument(format!("loop at {a} in a simple graph")));
        }
        let e = (a.min(b), a.max(b));
        if !seen.insert(e) {
            return Err(Error::Argument(format!("parallel edge {}-{}", e.0, e.1)));
        }
        out.push(e);
    }
    Ok(out)
}

impl VcInstance {
    pub fn new(n: usize, edges: &[(usize, usize)], k: usize) -> Result<VcInstance> {
        Ok(VcInstance {
            n,
            edges: simple_edges(n, edges)?,
            k,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// Uncoloured simple graph with a partition of its vertices into non-empty
/// parts; the budget is the number of parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MisInstance {
    n: usize,
    edges: Vec<(usize, usize)>,
    parts: Vec<Vec<usize>>,
}

impl MisInstance {
    pub fn new(n: usize, edges: &[(usize, usize)], parts: Vec<Vec<usize>>) -> Result<MisInstance> {
        let edges = simple_edges(n, edges)?;
        let mut owner = vec![None; n];
        let mut parts = parts;
        for (i, p) in parts.iter_mut().enumerate() {
            if p.is_empty() {
                return Err(Error::Argument(format!("part {i} is empty")));
            }
            p.sort_unstable();
            for &v in p.iter() {
                if v >= n {
                    return Err(Error::Argument(format!("vertex {v} out of range")));
                }
                if owner[v].replace(i).is_some() {
                    return Err(Error::Argument(format!("vertex {v} is in two parts")));
                }
            }
        }
        if let Some(v) = owner.iter().position(Option::is_none) {
            return Err(Error::Argument(format!("vertex {v} is in no part")));
        }
        Ok(MisInstance { n, edges, parts })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    fn part_of(&self) -> Vec<usize> {
        let mut owner = vec![0; self.n];
        for (i, p) in self.parts.iter().enumerate() {
            for &v in p {
                owner[v] = i;
            }
        }
        owner
    }
}

/// Where a vertex of a generated instance comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    /// The copy of source vertex `v`.
    Vertex(usize),
    /// The pendant neighbour `v'` of source vertex `v`.
    Pendant(usize),
    /// Internal vertex of the gadget of source edge `(u, v)`.
    EdgeGadget(usize, usize),
    /// Non-special vertex of the partition gadget of part `i`.
    PartitionGadget(usize),
}

impl fmt::Display for Origin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Origin::Vertex(v) => write!(f, "vertex {v}"),
            Origin::Pendant(v) => write!(f, "pendant {v}"),
            Origin::EdgeGadget(u, v) => write!(f, "edge gadget {u}-{v}"),
            Origin::PartitionGadget(i) => write!(f, "partition gadget {i}"),
        }
    }
}

/// A generated instance with the origin of each of its vertices.
#[derive(Clone, Debug)]
pub struct ReducedInstance {
    pub instance: ColouredGraph,
    pub problem: ProblemKind,
    pub target: Target,
    pub budget: usize,
    pub provenance: Vec<Origin>,
}

fn red() -> Colour {
    Colour::RED
}

fn blue() -> Colour {
    Colour::BLUE
}

/// Blue copy of `G` with a red pendant edge at every vertex; EDEL towards
/// `H2b_r,b`. Vertex `v'` is `n + v`; pendant edges come first.
pub fn gen_vc_edel_h2b_rb(vc: &VcInstance) -> ReducedInstance {
    let n = vc.n;
    let mut g = ColouredGraph::new(2 * n);
    for v in 0..n {
        g.add_edge(v, n + v, red()).expect("in range");
    }
    for &(a, b) in &vc.edges {
        g.add_edge(a, b, blue()).expect("in range");
    }
    ReducedInstance {
        instance: g,
        problem: ProblemKind::Edel,
        target: Target::from_name("H2b_r,b").expect("core name"),
        budget: vc.k,
        provenance: pendant_provenance(n),
    }
}

fn pendant_provenance(n: usize) -> Vec<Origin> {
    (0..n)
        .map(Origin::Vertex)
        .chain((0..n).map(Origin::Pendant))
        .collect()
}

/// Red copy of `G`, a blue pendant `vv'` per vertex, and per edge `uv` three
/// vertices `x, y, z` with `u'x, v'x, yz` red and `xy, xz` blue; EDEL towards
/// `H2rb_r,b`.
pub fn gen_vc_edel_h2rb_rb(vc: &VcInstance) -> ReducedInstance {
    let n = vc.n;
    let mut g = ColouredGraph::new(2 * n);
    let mut provenance = pendant_provenance(n);
    for v in 0..n {
        g.add_edge(v, n + v, blue()).expect("in range");
    }
    for &(a, b) in &vc.edges {
        g.add_edge(a, b, red()).expect("in range");
        let x = g.add_vertex();
        let y = g.add_vertex();
        let z = g.add_vertex();
        provenance.extend(std::iter::repeat_n(Origin::EdgeGadget(a, b), 3));
        g.add_edge(n + a, x, red()).expect("in range");
        g.add_edge(n + b, x, red()).expect("in range");
        g.add_edge(x, y, blue()).expect("in range");
        g.add_edge(x, z, blue()).expect("in range");
        g.add_edge(y, z, red()).expect("in range");
    }
    ReducedInstance {
        instance: g,
        problem: ProblemKind::Edel,
        target: Target::from_name("H2rb_r,b").expect("core name"),
        budget: vc.k,
        provenance,
    }
}

/// Red copy of `G`, a blue pendant `vv'` per vertex and a red loop at each
/// `v'`; SWITCH towards `H2b_r,-`.
pub fn gen_vc_switch_h2b_rdash(vc: &VcInstance) -> ReducedInstance {
    let n = vc.n;
    let mut g = ColouredGraph::new(2 * n);
    for v in 0..n {
        g.add_edge(v, n + v, blue()).expect("in range");
        g.add_edge(n + v, n + v, red()).expect("in range");
    }
    for &(a, b) in &vc.edges {
        g.add_edge(a, b, red()).expect("in range");
    }
    ReducedInstance {
        instance: g,
        problem: ProblemKind::Switch,
        target: Target::from_name("H2b_r,-").expect("core name"),
        budget: vc.k,
        provenance: pendant_provenance(n),
    }
}

/// The loop colour at the second vertex of the target `H2rb_r,x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GadgetFamily {
    R,
    B,
    None,
}

impl GadgetFamily {
    pub const ALL: [GadgetFamily; 3] = [GadgetFamily::R, GadgetFamily::B, GadgetFamily::None];

    pub fn target(self) -> Target {
        Target::from_name(&format!("H2rb_r,{self}")).expect("core name")
    }
}

impl fmt::Display for GadgetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GadgetFamily::R => "r",
            GadgetFamily::B => "b",
            GadgetFamily::None => "-",
        })
    }
}

impl FromStr for GadgetFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<GadgetFamily> {
        match s {
            "r" => Ok(GadgetFamily::R),
            "b" => Ok(GadgetFamily::B),
            "-" => Ok(GadgetFamily::None),
            _ => Err(Error::Argument(format!(
                "gadget family must be r, b or -, got {s:?}"
            ))),
        }
    }
}

/// A partition gadget; its special vertices are `0..special`.
#[derive(Clone, Debug)]
pub struct PartitionGadget {
    pub graph: ColouredGraph,
    pub special: usize,
}

/// An edge gadget with special vertices `u` and `v`.
#[derive(Clone, Debug)]
pub struct EdgeGadget {
    pub graph: ColouredGraph,
    pub u: usize,
    pub v: usize,
}

fn check_q(q: usize) -> Result<()> {
    if q < 3 {
        return Err(Error::Argument(format!(
            "girth parameter q must be at least 3, got {q}"
        )));
    }
    Ok(())
}

/// Append a path of `len` edges from `from` to `to` through fresh vertices;
/// `colour(i)` colours the `i`-th edge.
fn add_path(
    g: &mut ColouredGraph,
    from: usize,
    to: usize,
    len: usize,
    colour: impl Fn(usize) -> Colour,
) {
    let mut prev = from;
    for i in 0..len {
        let next = if i + 1 == len { to } else { g.add_vertex() };
        g.add_edge(prev, next, colour(i)).expect("in range");
        prev = next;
    }
}

fn odd_at_least(n: usize) -> usize {
    n | 1
}

/// Partition gadget with `size` special vertices.
///
/// For `r` and `-`: an all-blue cycle of length `2q` (or `2q + 2` when `q`
/// and `size` differ in parity) with a chord path on the `size` special
/// vertices joining two antipodal cycle vertices. For a single special
/// vertex the chord degenerates and the gadget is two odd cycles sharing it.
///
/// For `b`: two alternating odd cycles `C` of length `size + q` (or one
/// more), each with an alternating odd cycle `C'` hung at its vertex with two
/// red edges through two blue edges, glued along a path through the `size`
/// special vertices.
pub fn partition_gadget(x: GadgetFamily, q: usize, size: usize) -> Result<PartitionGadget> {
    check_q(q)?;
    if size == 0 {
        return Err(Error::Argument("a part needs at least one vertex".into()));
    }
    let mut g = ColouredGraph::new(size);
    match x {
        GadgetFamily::R | GadgetFamily::None => {
            for i in 1..size {
                g.add_edge(i - 1, i, blue()).expect("in range");
            }
            let half = if q % 2 == size % 2 { q } else { q + 1 };
            for _ in 0..2 {
                add_path(&mut g, 0, size - 1, half, |_| blue());
            }
        }
        GadgetFamily::B => {
            let lc = odd_at_least(size + q);
            let lp = odd_at_least(q);
            let t = (lc - size).div_ceil(2);
            // position on C -> vertex, with the shared path on 0..size
            for copy in 0..2 {
                let cycle: Vec<usize> = (0..lc)
                    .map(|i| {
                        if (t..t + size).contains(&i) {
                            i - t
                        } else {
                            g.add_vertex()
                        }
                    })
                    .collect();
                for i in 0..lc {
                    let shared = (t..t + size - 1).contains(&i);
                    if shared && copy == 1 {
                        continue;
                    }
                    let colour = if i % 2 == 0 { red() } else { blue() };
                    g.add_edge(cycle[i], cycle[(i + 1) % lc], colour)
                        .expect("in range");
                }
                let c0 = cycle[0];
                add_path(
                    &mut g,
                    c0,
                    c0,
                    lp,
                    |j| if j % 2 == 0 { blue() } else { red() },
                );
            }
        }
    }
    Ok(PartitionGadget {
        graph: g,
        special: size,
    })
}

/// Edge gadget for the family `x`.
///
/// `r`: an all-blue cycle of length `2q + 1` switched at two vertices at
/// distance `q`. `-`: a path of odd length at least `max(q, 5)`, blue except
/// for its first two and last two edges. `b`: two alternating cycles of
/// length `2q + 1` sharing their monochromatic vertex (red in the first,
/// blue in the second), switched at two vertices of the first cycle at
/// distance `q`, placed symmetrically about the shared vertex.
pub fn edge_gadget(x: GadgetFamily, q: usize) -> Result<EdgeGadget> {
    check_q(q)?;
    let len = 2 * q + 1;
    let (g, u, v) = match x {
        GadgetFamily::R => {
            let mut g = ColouredGraph::new(len);
            for i in 0..len {
                g.add_edge(i, (i + 1) % len, blue()).expect("in range");
            }
            (g.switch_set(&[0, q])?, 0, q)
        }
        GadgetFamily::None => {
            let l = odd_at_least(q.max(5));
            let mut g = ColouredGraph::new(2);
            add_path(&mut g, 0, 1, l, |i| {
                if i < 2 || i + 2 >= l {
                    red()
                } else {
                    blue()
                }
            });
            (g, 0, 1)
        }
        GadgetFamily::B => {
            // vertex 0 is the shared vertex; first cycle on 0..len
            let mut g = ColouredGraph::new(len);
            for i in 0..len {
                let colour = if i % 2 == 0 { red() } else { blue() };
                g.add_edge(i, (i + 1) % len, colour).expect("in range");
            }
            add_path(
                &mut g,
                0,
                0,
                len,
                |j| if j % 2 == 0 { blue() } else { red() },
            );
            // mirror images under the reflection fixing the shared vertex
            let a = q.div_ceil(2);
            (g.switch_set(&[a, len - a])?, len - a, a)
        }
    };
    Ok(EdgeGadget { graph: g, u, v })
}

/// Copy `part` into `g`, sending vertex `i` of `part` to `fixed[i]` when
/// given and to a fresh vertex otherwise. Returns the vertex map.
fn embed(g: &mut ColouredGraph, part: &ColouredGraph, fixed: &[(usize, usize)]) -> Vec<usize> {
    let mut map = vec![usize::MAX; part.n()];
    for &(i, target) in fixed {
        map[i] = target;
    }
    for slot in map.iter_mut() {
        if *slot == usize::MAX {
            *slot = g.add_vertex();
        }
    }
    for e in part.edges() {
        g.add_edge(map[e.u], map[e.v], e.colour.clone())
            .expect("in range");
    }
    map
}

/// The independent-set reduction for target `H2rb_r,x` and girth `q`.
/// Partition gadgets come first, part by part, with each part's special
/// vertices leading; edge gadget internals follow in edge order. Edges
/// inside a part are dropped since they never join two chosen vertices.
pub fn gen_mis_switch(mis: &MisInstance, x: GadgetFamily, q: usize) -> Result<ReducedInstance> {
    check_q(q)?;
    let mut g = ColouredGraph::new(0);
    let mut provenance = Vec::new();
    let mut image = vec![0usize; mis.n];
    for (i, part) in mis.parts.iter().enumerate() {
        let pg = partition_gadget(x, q, part.len())?;
        let map = embed(&mut g, &pg.graph, &[]);
        for (j, &v) in part.iter().enumerate() {
            image[v] = map[j];
        }
        provenance.extend((0..pg.graph.n()).map(|j| {
            if j < part.len() {
                Origin::Vertex(part[j])
            } else {
                Origin::PartitionGadget(i)
            }
        }));
    }
    let owner = mis.part_of();
    let eg = edge_gadget(x, q)?;
    let mut edges = mis.edges.clone();
    edges.sort_unstable();
    for (a, b) in edges {
        if owner[a] == owner[b] {
            continue;
        }
        let before = g.n();
        embed(&mut g, &eg.graph, &[(eg.u, image[a]), (eg.v, image[b])]);
        provenance.extend(std::iter::repeat_n(
            Origin::EdgeGadget(a, b),
            g.n() - before,
        ));
    }
    Ok(ReducedInstance {
        instance: g,
        problem: ProblemKind::Switch,
        target: x.target(),
        budget: mis.k(),
        provenance,
    })
}

/// Outcome of one property check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyCheck {
    pub name: &'static str,
    pub passed: bool,
    /// What failed, when it failed.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetReport {
    pub family: GadgetFamily,
    pub q: usize,
    pub part_size: usize,
    pub checks: Vec<PropertyCheck>,
}

impl GadgetReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for GadgetReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            write!(
                f,
                "family={} q={} size={} property={} result={}",
                self.family,
                self.q,
                self.part_size,
                c.name,
                if c.passed { "pass" } else { "fail" }
            )?;
            if let Some(w) = &c.witness {
                write!(f, " witness={w:?}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

pub const MAX_VERIFY_Q: usize = 6;
pub const MAX_VERIFY_PART: usize = 4;

fn maps(g: &ColouredGraph, h: &Target) -> bool {
    hom_exists_2sat(g, h).expect("order-2 target").is_some()
}

fn check(name: &'static str, failure: Option<String>) -> PropertyCheck {
    PropertyCheck {
        name,
        passed: failure.is_none(),
        witness: failure,
    }
}

/// Check the partition-gadget properties P1-P3, the edge-gadget properties
/// E1-E4, and the separation property SP on a two-part instance, all by
/// homomorphism tests.
pub fn verify_gadget_properties(
    x: GadgetFamily,
    q: usize,
    part_size: usize,
) -> Result<GadgetReport> {
    check_q(q)?;
    if q > MAX_VERIFY_Q || part_size > MAX_VERIFY_PART {
        return Err(Error::Size(format!(
            "gadget checks support q <= {MAX_VERIFY_Q} and part size <= {MAX_VERIFY_PART}"
        )));
    }
    let h = x.target();
    let pg = partition_gadget(x, q, part_size)?;
    let eg = edge_gadget(x, q)?;
    let mut checks = Vec::new();

    checks.push(check(
        "P1",
        maps(&pg.graph, &h).then(|| "partition gadget maps unswitched".to_string()),
    ));
    let p2 = (0..pg.graph.n()).find(|&w| {
        let switched = pg.graph.switch_set(&[w]).expect("two-coloured");
        maps(&switched, &h) != (w < pg.special)
    });
    checks.push(check(
        "P2",
        p2.map(|w| format!("switching vertex {w} (special: {})", w < pg.special)),
    ));
    checks.push(check("P3", girth_below(&pg.graph, q)));

    let e1 = [vec![], vec![eg.u], vec![eg.v]]
        .into_iter()
        .find(|s| !maps(&eg.graph.switch_set(s).expect("two-coloured"), &h));
    checks.push(check(
        "E1",
        e1.map(|s| format!("switch set {s:?} does not map")),
    ));

    let mut e2 = None;
    'pairs: for a in 0..part_size {
        for b in 0..part_size {
            let mut g = ColouredGraph::new(0);
            let mi = embed(&mut g, &pg.graph, &[]);
            let mj = embed(&mut g, &pg.graph, &[]);
            embed(&mut g, &eg.graph, &[(eg.u, mi[a]), (eg.v, mj[b])]);
            if maps(&g.switch_set(&[mi[a], mj[b]]).expect("two-coloured"), &h) {
                e2 = Some(format!("specials {a} and {b} switched, union maps"));
                break 'pairs;
            }
        }
    }
    checks.push(check("E2", e2));
    checks.push(check("E3", girth_below(&eg.graph, q)));
    let d = eg.graph.distance(eg.u, eg.v);
    checks.push(check(
        "E4",
        d.filter(|&d| d < q)
            .map(|d| format!("special vertices at distance {d}")),
    ));
    checks.push(check("SP", separation_failure(x, q, part_size)?));
    Ok(GadgetReport {
        family: x,
        q,
        part_size,
        checks,
    })
}

fn girth_below(g: &ColouredGraph, q: usize) -> Option<String> {
    g.girth().filter(|&l| l < q).map(|l| format!("girth {l}"))
}

/// On three parts of `part_size` vertices with edges joining the first
/// vertex of the middle part to the first vertices of the outer parts (so it
/// is the second special vertex of one edge gadget and the first of the
/// other), every valid switch set (at most one vertex per part, not both
/// ends of an edge) whose result does not map must leave a gadget that does
/// not map on its own.
fn separation_failure(x: GadgetFamily, q: usize, part_size: usize) -> Result<Option<String>> {
    let s = part_size;
    let parts = (0..3).map(|i| (i * s..(i + 1) * s).collect()).collect();
    let source_edges = [(0, s), (s, 2 * s)];
    let mis = MisInstance::new(3 * s, &source_edges, parts)?;
    let red = gen_mis_switch(&mis, x, q)?;
    let g = &red.instance;
    let h = &red.target;
    let pg_n = partition_gadget(x, q, s)?.graph.n();
    let image = |v: usize| (v / s) * pg_n + v % s;
    let mut gadgets: Vec<Vec<usize>> = (0..3)
        .map(|i| (i * pg_n..(i + 1) * pg_n).collect())
        .collect();
    for &(a, b) in &source_edges {
        let mut vs: Vec<usize> = (0..g.n())
            .filter(|&v| red.provenance[v] == Origin::EdgeGadget(a, b))
            .collect();
        vs.extend([image(a), image(b)]);
        gadgets.push(vs);
    }
    let choices = |i: usize| std::iter::once(None).chain((0..s).map(move |j| Some(i * s + j)));
    for a in choices(0) {
        for b in choices(1) {
            for c in choices(2) {
                let chosen: Vec<usize> = [a, b, c].into_iter().flatten().collect();
                if source_edges
                    .iter()
                    .any(|e| chosen.contains(&e.0) && chosen.contains(&e.1))
                {
                    continue;
                }
                let set: Vec<usize> = chosen.iter().map(|&v| image(v)).collect();
                let switched = g.switch_set(&set)?;
                if maps(&switched, h) {
                    continue;
                }
                let local = gadgets.iter().any(|vs| {
                    let drop: Vec<usize> = (0..g.n()).filter(|v| !vs.contains(v)).collect();
                    !maps(&switched.delete_vertices(&drop).0, h)
                });
                if !local {
                    return Ok(Some(format!(
                        "switching source vertices {chosen:?}: obstruction spans gadgets"
                    )));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fptsolve::solve_xp;

    fn k2(k: usize) -> VcInstance {
        VcInstance::new(2, &[(0, 1)], k).unwrap()
    }

    fn answer(r: &ReducedInstance, k: usize) -> bool {
        solve_xp(r.problem, &r.instance, &r.target, k)
            .unwrap()
            .answer
    }

    #[test]
    fn vc_edel_h2b_rb() {
        let r = gen_vc_edel_h2b_rb(&k2(1));
        assert_eq!(r.instance.n(), 4);
        assert!(answer(&r, 1) && !answer(&r, 0));
        let empty = gen_vc_edel_h2b_rb(&VcInstance::new(3, &[], 0).unwrap());
        assert!(answer(&empty, 0));
        let tri = gen_vc_edel_h2b_rb(&VcInstance::new(3, &[(0, 1), (1, 2), (0, 2)], 2).unwrap());
        assert!(answer(&tri, 2) && !answer(&tri, 1));
    }

    #[test]
    fn vc_edel_h2rb_rb() {
        let r = gen_vc_edel_h2rb_rb(&k2(1));
        assert!(answer(&r, 1) && !answer(&r, 0));
        let p3 = gen_vc_edel_h2rb_rb(&VcInstance::new(3, &[(0, 1), (1, 2)], 1).unwrap());
        assert!(answer(&p3, 1));
        let tri = gen_vc_edel_h2rb_rb(&VcInstance::new(3, &[(0, 1), (1, 2), (0, 2)], 1).unwrap());
        assert!(!answer(&tri, 1));
    }

    #[test]
    fn vc_switch_h2b_rdash() {
        let r = gen_vc_switch_h2b_rdash(&k2(1));
        assert!(answer(&r, 1) && !answer(&r, 0));
        let empty = gen_vc_switch_h2b_rdash(&VcInstance::new(2, &[], 0).unwrap());
        assert!(answer(&empty, 0));
        let c4 = gen_vc_switch_h2b_rdash(
            &VcInstance::new(4, &[(0, 1), (1, 2), (2, 3), (3, 0)], 2).unwrap(),
        );
        assert!(answer(&c4, 2) && !answer(&c4, 1));
    }

    #[test]
    fn mis_examples() {
        let apart = MisInstance::new(2, &[], vec![vec![0], vec![1]]).unwrap();
        let r = gen_mis_switch(&apart, GadgetFamily::R, 3).unwrap();
        let s = solve_xp(r.problem, &r.instance, &r.target, 2).unwrap();
        assert!(s.answer);
        let joined = MisInstance::new(2, &[(0, 1)], vec![vec![0], vec![1]]).unwrap();
        let r = gen_mis_switch(&joined, GadgetFamily::R, 3).unwrap();
        assert!(!answer(&r, 2));
        assert!(r.instance.girth().is_none_or(|l| l >= 3));
        assert!(matches!(
            gen_mis_switch(&joined, GadgetFamily::R, 2),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn partition_cycle_parity() {
        for q in 3..7 {
            for size in 1..5 {
                let pg = partition_gadget(GadgetFamily::R, q, size).unwrap();
                let cycle = if q % 2 == size % 2 { 2 * q } else { 2 * q + 2 };
                let chord_edges = size - 1;
                assert_eq!(pg.graph.m(), cycle + chord_edges);
            }
        }
    }

    #[test]
    fn figure_sized_gadgets() {
        // four specials, q = 3: an 8-cycle with a 3-edge chord
        let pg = partition_gadget(GadgetFamily::R, 3, 4).unwrap();
        assert_eq!((pg.graph.n(), pg.graph.m()), (10, 11));
        let eg = edge_gadget(GadgetFamily::None, 6).unwrap();
        assert_eq!(eg.graph.m(), 7);
        let eg = edge_gadget(GadgetFamily::B, 3).unwrap();
        assert_eq!((eg.graph.n(), eg.graph.m()), (13, 14));
        assert_eq!(eg.graph.distance(eg.u, eg.v), Some(3));
    }

    #[test]
    fn small_reports_pass() {
        for (x, q, s) in [
            (GadgetFamily::R, 3, 3),
            (GadgetFamily::None, 4, 2),
            (GadgetFamily::B, 3, 1),
        ] {
            let report = verify_gadget_properties(x, q, s).unwrap();
            assert!(report.all_passed(), "{report}");
        }
        assert!(matches!(
            verify_gadget_properties(GadgetFamily::R, 2, 1),
            Err(Error::Argument(_))
        ));
        assert!(matches!(
            verify_gadget_properties(GadgetFamily::R, 7, 1),
            Err(Error::Size(_))
        ));
    }

    #[test]
    fn full_range_reports_pass() {
        for x in GadgetFamily::ALL {
            for q in 3..=MAX_VERIFY_Q {
                for s in 1..=MAX_VERIFY_PART {
                    let report = verify_gadget_properties(x, q, s).unwrap();
                    assert!(report.all_passed(), "{report}");
                }
            }
        }
    }
}

//! 2-SAT and the two Almost-2-SAT deletion variants.
//!
//! Satisfiability uses the implication graph and Tarjan's strongly connected
//! components. The deletion variants are exact: a bounded branching over the
//! variables (or groups) of a contradictory implication cycle, with subset
//! enumeration as a fallback when that cycle is wide.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::{self, Write as _};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn pos(var: usize) -> Literal {
        Literal {
            var,
            positive: true,
        }
    }

    pub fn neg(var: usize) -> Literal {
        Literal {
            var,
            positive: false,
        }
    }

    pub fn negated(self) -> Literal {
        Literal {
            var: self.var,
            positive: !self.positive,
        }
    }

    /// Node of this literal in the implication graph.
    #[inline]
    fn node(self) -> usize {
        2 * self.var + usize::from(self.positive)
    }

    fn holds(self, assignment: &[bool]) -> bool {
        assignment[self.var] == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "x{}", self.var)
        } else {
            write!(f, "!x{}", self.var)
        }
    }
}

/// A clause of one or two literals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clause {
    pub first: Literal,
    pub second: Option<Literal>,
}

impl Clause {
    pub fn unit(a: Literal) -> Clause {
        Clause {
            first: a,
            second: None,
        }
    }

    pub fn pair(a: Literal, b: Literal) -> Clause {
        Clause {
            first: a,
            second: Some(b),
        }
    }

    pub fn literals(&self) -> impl Iterator<Item = Literal> + '_ {
        std::iter::once(self.first).chain(self.second)
    }

    pub fn mentions(&self, var: usize) -> bool {
        self.literals().any(|l| l.var == var)
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.literals().any(|l| l.holds(assignment))
    }
}

/// A group of clauses deleted together, with a variable present in all of
/// them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    pub clauses: Vec<usize>,
    pub witness: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TwoCnf {
    num_vars: usize,
    clauses: Vec<Clause>,
    groups: Option<Vec<Group>>,
}

impl TwoCnf {
    pub fn new(num_vars: usize) -> TwoCnf {
        TwoCnf {
            num_vars,
            clauses: Vec::new(),
            groups: None,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    pub fn groups(&self) -> Option<&[Group]> {
        self.groups.as_deref()
    }

    pub fn add_var(&mut self) -> usize {
        self.num_vars += 1;
        self.num_vars - 1
    }

    pub fn add_clause(&mut self, clause: Clause) -> Result<usize> {
        if let Some(l) = clause.literals().find(|l| l.var >= self.num_vars) {
            return Err(Error::Argument(format!(
                "literal {l} out of range for {} variables",
                self.num_vars
            )));
        }
        self.clauses.push(clause);
        Ok(self.clauses.len() - 1)
    }

    pub fn add_unit(&mut self, a: Literal) -> Result<usize> {
        self.add_clause(Clause::unit(a))
    }

    pub fn add_pair(&mut self, a: Literal, b: Literal) -> Result<usize> {
        self.add_clause(Clause::pair(a, b))
    }

    /// Attach a grouping; validated against the partition and witness rules.
    pub fn set_groups(&mut self, groups: Vec<Group>) -> Result<()> {
        let mut owner = vec![None; self.clauses.len()];
        for (gi, g) in groups.iter().enumerate() {
            if g.witness >= self.num_vars {
                return Err(Error::Argument(format!("group {gi}: witness out of range")));
            }
            for &c in &g.clauses {
                if c >= self.clauses.len() {
                    return Err(Error::Argument(format!(
                        "group {gi}: clause {c} out of range"
                    )));
                }
                if owner[c].replace(gi).is_some() {
                    return Err(Error::Argument(format!("clause {c} is in two groups")));
                }
                if !self.clauses[c].mentions(g.witness) {
                    return Err(Error::Argument(format!(
                        "group {gi}: witness x{} missing from clause {c}",
                        g.witness
                    )));
                }
            }
        }
        if let Some(c) = owner.iter().position(Option::is_none) {
            return Err(Error::Argument(format!("clause {c} is in no group")));
        }
        self.groups = Some(groups);
        Ok(())
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.satisfied_by(assignment))
    }

    /// Line-oriented dump in a DIMACS-like layout; groups as `c group` lines.
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "p cnf {} {}", self.num_vars, self.clauses.len());
        if let Some(groups) = &self.groups {
            for (gi, g) in groups.iter().enumerate() {
                let ids: Vec<String> = g.clauses.iter().map(|c| c.to_string()).collect();
                let _ = writeln!(
                    out,
                    "c group {gi} witness {} clauses {}",
                    g.witness + 1,
                    ids.join(" ")
                );
            }
        }
        for c in &self.clauses {
            for l in c.literals() {
                let v = l.var as i64 + 1;
                let _ = write!(out, "{} ", if l.positive { v } else { -v });
            }
            out.push_str("0\n");
        }
        out
    }
}

/// Implication graph restricted to active clauses, with per-edge clause ids.
struct Implications {
    adj: Vec<Vec<(usize, usize)>>,
}

impl Implications {
    fn build(f: &TwoCnf, active: &dyn Fn(usize) -> bool) -> Implications {
        let mut adj = vec![Vec::new(); 2 * f.num_vars];
        for (ci, c) in f.clauses.iter().enumerate() {
            if !active(ci) {
                continue;
            }
            let a = c.first;
            let b = c.second.unwrap_or(a);
            // (a or b): !a -> b, !b -> a
            adj[a.negated().node()].push((b.node(), ci));
            if b != a {
                adj[b.negated().node()].push((a.node(), ci));
            }
        }
        Implications { adj }
    }

    /// Tarjan SCC, iterative. Components are numbered in reverse topological
    /// order (sinks first).
    fn components(&self) -> Vec<usize> {
        let n = self.adj.len();
        const UNSET: usize = usize::MAX;
        let mut index = vec![UNSET; n];
        let mut low = vec![0; n];
        let mut comp = vec![UNSET; n];
        let mut on_stack = vec![false; n];
        let mut stack = Vec::new();
        let mut call: Vec<(usize, usize)> = Vec::new();
        let mut next_index = 0;
        let mut next_comp = 0;
        for root in 0..n {
            if index[root] != UNSET {
                continue;
            }
            call.push((root, 0));
            while let Some(&mut (v, ref mut pos)) = call.last_mut() {
                if *pos == 0 && index[v] == UNSET {
                    index[v] = next_index;
                    low[v] = next_index;
                    next_index += 1;
                    stack.push(v);
                    on_stack[v] = true;
                }
                if *pos < self.adj[v].len() {
                    let w = self.adj[v][*pos].0;
                    *pos += 1;
                    if index[w] == UNSET {
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                    continue;
                }
                call.pop();
                if let Some(&(p, _)) = call.last() {
                    low[p] = low[p].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().expect("scc stack");
                        on_stack[w] = false;
                        comp[w] = next_comp;
                        if w == v {
                            break;
                        }
                    }
                    next_comp += 1;
                }
            }
        }
        comp
    }

    /// Clause ids on a shortest implication path `from -> to`.
    fn path_clauses(&self, from: usize, to: usize) -> Vec<usize> {
        let n = self.adj.len();
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        'bfs: while let Some(x) = queue.pop_front() {
            for &(y, ci) in &self.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    prev[y] = Some((x, ci));
                    if y == to {
                        break 'bfs;
                    }
                    queue.push_back(y);
                }
            }
        }
        let mut out = Vec::new();
        let mut cur = to;
        while cur != from {
            let (p, ci) = prev[cur].expect("target reachable");
            out.push(ci);
            cur = p;
        }
        out
    }
}

/// Satisfiability result for a formula with some clauses switched off.
enum Verdict {
    Sat(Vec<bool>),
    /// Clause ids of a contradictory implication cycle `x -> .. -> !x -> .. -> x`.
    Unsat(Vec<usize>),
}

fn decide(f: &TwoCnf, active: &dyn Fn(usize) -> bool) -> Verdict {
    let imp = Implications::build(f, active);
    let comp = imp.components();
    for var in 0..f.num_vars {
        let (p, n) = (Literal::pos(var).node(), Literal::neg(var).node());
        if comp[p] == comp[n] {
            let mut core = imp.path_clauses(p, n);
            core.extend(imp.path_clauses(n, p));
            core.sort_unstable();
            core.dedup();
            return Verdict::Unsat(core);
        }
    }
    // sinks first: a literal is true when its component precedes its negation
    let values = (0..f.num_vars)
        .map(|var| comp[Literal::pos(var).node()] < comp[Literal::neg(var).node()])
        .collect();
    Verdict::Sat(values)
}

/// Decide a 2-CNF. The assignment is deterministic; an empty formula gets
/// all-false.
pub fn solve_2sat(f: &TwoCnf) -> Option<Vec<bool>> {
    match decide(f, &|_| true) {
        Verdict::Sat(a) => Some(a),
        Verdict::Unsat(_) => None,
    }
}

/// Result of a deletion search: the deleted items and an assignment of the
/// remaining formula (values of deleted variables are meaningless).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletionSolution {
    pub deleted: Vec<usize>,
    pub assignment: Vec<bool>,
}

/// What a branch may delete.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Unit {
    Variables,
    Groups,
}

struct DeletionSearch<'a> {
    f: &'a TwoCnf,
    /// clause -> deletable unit ids that remove it
    clause_units: Vec<Vec<usize>>,
    unit_count: usize,
}

impl<'a> DeletionSearch<'a> {
    fn new(f: &'a TwoCnf, unit: Unit) -> DeletionSearch<'a> {
        let clause_units = match unit {
            Unit::Variables => f
                .clauses
                .iter()
                .map(|c| {
                    let mut v: Vec<usize> = c.literals().map(|l| l.var).collect();
                    v.dedup();
                    v
                })
                .collect(),
            Unit::Groups => {
                let mut cu = vec![Vec::new(); f.clauses.len()];
                for (gi, g) in f.groups.as_deref().unwrap_or_default().iter().enumerate() {
                    for &c in &g.clauses {
                        cu[c].push(gi);
                    }
                }
                cu
            }
        };
        let unit_count = match unit {
            Unit::Variables => f.num_vars,
            Unit::Groups => f.groups.as_ref().map_or(0, Vec::len),
        };
        DeletionSearch {
            f,
            clause_units,
            unit_count,
        }
    }

    fn decide(&self, deleted: &[bool]) -> Verdict {
        decide(self.f, &|ci| {
            !self.clause_units[ci].iter().any(|&u| deleted[u])
        })
    }

    /// All deletion sets of exactly `depth` more units reachable by branching
    /// on contradictory cycles, below the current `chosen` set.
    fn branch(
        &self,
        deleted: &mut Vec<bool>,
        chosen: &mut Vec<usize>,
        depth: usize,
        found: &mut BTreeSet<Vec<usize>>,
    ) {
        match self.decide(deleted) {
            Verdict::Sat(_) => {
                if depth == 0 {
                    let mut s = chosen.clone();
                    s.sort_unstable();
                    found.insert(s);
                }
            }
            Verdict::Unsat(core) => {
                if depth == 0 {
                    return;
                }
                let mut candidates: Vec<usize> = core
                    .iter()
                    .flat_map(|&ci| self.clause_units[ci].iter().copied())
                    .filter(|&u| !deleted[u])
                    .collect();
                candidates.sort_unstable();
                candidates.dedup();
                for u in candidates {
                    deleted[u] = true;
                    chosen.push(u);
                    self.branch(deleted, chosen, depth - 1, found);
                    chosen.pop();
                    deleted[u] = false;
                }
            }
        }
    }

    /// First satisfiable `size`-subset in lexicographic order.
    fn enumerate(&self, size: usize) -> Option<Vec<usize>> {
        let n = self.unit_count;
        if size > n {
            return None;
        }
        let mut combo: Vec<usize> = (0..size).collect();
        let mut deleted = vec![false; n];
        loop {
            deleted.iter_mut().for_each(|d| *d = false);
            for &u in &combo {
                deleted[u] = true;
            }
            if let Verdict::Sat(_) = self.decide(&deleted) {
                return Some(combo);
            }
            // next combination
            let mut i = size;
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                if combo[i] < n - size + i {
                    combo[i] += 1;
                    for j in i + 1..size {
                        combo[j] = combo[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    fn solve(&self, k: usize) -> Option<DeletionSolution> {
        let first_core = match self.decide(&vec![false; self.unit_count]) {
            Verdict::Sat(assignment) => {
                return Some(DeletionSolution {
                    deleted: Vec::new(),
                    assignment,
                })
            }
            Verdict::Unsat(core) => core,
        };
        let width = {
            let mut u: Vec<usize> = first_core
                .iter()
                .flat_map(|&ci| self.clause_units[ci].iter().copied())
                .collect();
            u.sort_unstable();
            u.dedup();
            u.len()
        };
        for size in 1..=k.min(self.unit_count) {
            let set = if branching_cost(width, size) <= binomial(self.unit_count, size) {
                let mut found = BTreeSet::new();
                self.branch(
                    &mut vec![false; self.unit_count],
                    &mut Vec::new(),
                    size,
                    &mut found,
                );
                found.into_iter().next()
            } else {
                self.enumerate(size)
            };
            if let Some(deleted) = set {
                let mut mask = vec![false; self.unit_count];
                for &u in &deleted {
                    mask[u] = true;
                }
                let Verdict::Sat(assignment) = self.decide(&mask) else {
                    unreachable!("deletion set was verified satisfiable");
                };
                return Some(DeletionSolution {
                    deleted,
                    assignment,
                });
            }
        }
        None
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn branching_cost(width: usize, depth: usize) -> u128 {
    (width as u128).saturating_pow(depth as u32)
}

/// Variable Deletion Almost 2-SAT: a smallest set of at most `k` variables
/// whose removal (with every clause mentioning them) leaves a satisfiable
/// formula. Among smallest sets the lexicographically least is returned.
pub fn var_del_almost_2sat(f: &TwoCnf, k: usize) -> Option<DeletionSolution> {
    DeletionSearch::new(f, Unit::Variables).solve(k)
}

/// Group Deletion Almost 2-SAT: a smallest set of at most `k` groups whose
/// removal leaves a satisfiable formula (lexicographically least among
/// smallest).
pub fn group_del_almost_2sat(f: &TwoCnf, k: usize) -> Result<Option<DeletionSolution>> {
    if f.groups.is_none() {
        return Err(Error::Argument("formula has no clause groups".into()));
    }
    Ok(DeletionSearch::new(f, Unit::Groups).solve(k))
}

/// Output of [`group_to_var_reduction`].
#[derive(Clone, Debug)]
pub struct GroupReduction {
    pub formula: TwoCnf,
    /// new variable -> (group, original variable)
    pub origin: Vec<(usize, usize)>,
}

impl GroupReduction {
    /// Groups hit by a set of deleted variables of the reduced formula.
    pub fn groups_of(&self, vars: &[usize]) -> Vec<usize> {
        let mut g: Vec<usize> = vars.iter().map(|&v| self.origin[v].0).collect();
        g.sort_unstable();
        g.dedup();
        g
    }
}

/// Rename every variable occurrence inside group `i` to a fresh copy `x_i`
/// and tie copies of the same variable with equality clauses. The result is
/// a positive variable-deletion instance for budget k iff the input is a
/// positive group-deletion instance for budget k.
pub fn group_to_var_reduction(f: &TwoCnf) -> Result<GroupReduction> {
    let groups = f
        .groups
        .as_ref()
        .ok_or_else(|| Error::Argument("formula has no clause groups".into()))?;
    let mut out = TwoCnf::new(0);
    let mut origin = Vec::new();
    // copies[x] = list of (group, new var)
    let mut copies: Vec<Vec<(usize, usize)>> = vec![Vec::new(); f.num_vars];
    let mut renamed: Vec<Option<Clause>> = vec![None; f.clauses.len()];
    for (gi, g) in groups.iter().enumerate() {
        let mut vars: Vec<usize> = g
            .clauses
            .iter()
            .flat_map(|&c| f.clauses[c].literals().map(|l| l.var))
            .collect();
        vars.sort_unstable();
        vars.dedup();
        let mut local = std::collections::HashMap::new();
        for x in vars {
            let nv = out.add_var();
            origin.push((gi, x));
            copies[x].push((gi, nv));
            local.insert(x, nv);
        }
        let rename = |l: Literal| Literal {
            var: local[&l.var],
            positive: l.positive,
        };
        for &c in &g.clauses {
            let cl = f.clauses[c];
            renamed[c] = Some(Clause {
                first: rename(cl.first),
                second: cl.second.map(rename),
            });
        }
    }
    for c in renamed {
        out.add_clause(c.expect("groups partition the clauses"))?;
    }
    for list in &copies {
        for (i, &(_, a)) in list.iter().enumerate() {
            for &(_, b) in &list[i + 1..] {
                out.add_pair(Literal::neg(a), Literal::pos(b))?;
                out.add_pair(Literal::pos(a), Literal::neg(b))?;
            }
        }
    }
    Ok(GroupReduction {
        formula: out,
        origin,
    })
}

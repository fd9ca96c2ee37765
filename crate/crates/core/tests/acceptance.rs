//! Acceptance suite. Runs every criterion in turn and prints one PASS/FAIL
//! line per criterion; numeric arguments restrict the run to those
//! criteria.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use ecmod::dichotomy::{classify, Classical, Parameterized};
use ecmod::fptsolve::{solve_edel_groups, solve_edel_ptime, solve_xp, verify_solution};
use ecmod::gadgets::{
    gen_mis_switch, gen_vc_edel_h2b_rb, gen_vc_edel_h2rb_rb, gen_vc_switch_h2b_rdash,
    verify_gadget_properties, GadgetFamily, MisInstance, VcInstance, MAX_VERIFY_PART, MAX_VERIFY_Q,
};
use ecmod::homcheck::{
    find_all_blue_odd_cycle, find_odd_blue_parity_cycle, find_rb_odd_r_path, find_rbr_image,
    hom_exists_2sat, hom_exists_bruteforce, is_homomorphism, Obstruction,
};
use ecmod::twosat::{
    group_del_almost_2sat, group_to_var_reduction, var_del_almost_2sat, Clause, Group, Literal,
    TwoCnf,
};
use ecmod::{solve, ColouredGraph, CoreName, ProblemKind, SolveOptions, Target};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn cores() -> Vec<Target> {
    CoreName::ALL.iter().map(|c| c.target()).collect()
}

fn describe(g: &ColouredGraph) -> String {
    let edges: Vec<String> = g
        .edges()
        .iter()
        .map(|e| format!("{}-{}{}", e.u, e.v, e.colour))
        .collect();
    format!("n={} [{}]", g.n(), edges.join(" "))
}

fn c1_two_sat_matches_brute_force() -> Outcome {
    let cores = cores();
    let mut graphs = 0usize;
    let mut failure = None;
    for_each_small_graph(4, |g| {
        if failure.is_some() {
            return;
        }
        graphs += 1;
        for h in &cores {
            let two_sat = hom_exists_2sat(g, h).expect("order two");
            let brute = hom_exists_bruteforce(g, h);
            if two_sat.is_some() != brute.is_some()
                || two_sat.as_ref().is_some_and(|m| !is_homomorphism(g, h, m))
            {
                failure = Some(format!(
                    "{} to {h}: 2-SAT {two_sat:?}, brute force {brute:?}",
                    describe(g)
                ));
                return;
            }
        }
    });
    match failure {
        Some(f) => Err(f),
        None => Ok(format!("{graphs} graphs x 12 cores")),
    }
}

fn c2_obstructions_match_oracle() -> Outcome {
    let h_rbr = Target::from_name("H2b_r,b").map_err(err)?;
    let h_parity = Target::from_name("H2b_r,r").map_err(err)?;
    let h_blue = Target::from_name("H2rb_r,r").map_err(err)?;
    let h_path = Target::from_name("H2b_r,-").map_err(err)?;
    let mut failure: Option<String> = None;
    let mut graphs = 0usize;
    for_each_small_graph(4, |g| {
        if failure.is_some() {
            return;
        }
        graphs += 1;
        let maps = |h: &Target| hom_exists_2sat(g, h).expect("order two").is_some();
        let check = |name: &str, found: Option<Obstruction>, h: &Target| -> Option<String> {
            if found.is_some() == maps(h) {
                return Some(format!("{name} on {}: detector {found:?}", describe(g)));
            }
            match found {
                Some(o) if !o.validate(g) => {
                    Some(format!("{name}: invalid witness {o:?} on {}", describe(g)))
                }
                _ => None,
            }
        };
        let parity = find_odd_blue_parity_cycle(g).expect("r/b graph");
        let path = match parity {
            Some(_) => None,
            None => find_rb_odd_r_path(g).expect("no odd parity cycle"),
        };
        failure = check("RBR", find_rbr_image(g).expect("r/b graph"), &h_rbr)
            .or_else(|| check("odd blue parity", parity.clone(), &h_parity))
            .or_else(|| {
                check(
                    "all-blue odd cycle",
                    find_all_blue_odd_cycle(g).expect("r/b graph"),
                    &h_blue,
                )
            })
            .or_else(|| check("RB^(2p-1)R pipeline", parity.or(path), &h_path));
    });
    match failure {
        Some(f) => Err(f),
        None => Ok(format!("{graphs} graphs x 4 detectors")),
    }
}

fn c3_solvers_match_exhaustive() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut yes = 0;
    let mut runs = 0;
    for problem in ProblemKind::ALL {
        for core in CoreName::ALL {
            let h = core.target();
            for _ in 0..500 {
                let g = random_graph(&mut rng, 1, 8, 14);
                let k = rng.gen_range(0..=3);
                let fast = solve(problem, &g, &h, k, &SolveOptions::default()).map_err(err)?;
                let xp = solve_xp(problem, &g, &h, k).map_err(err)?;
                ensure!(
                    fast.answer == xp.answer,
                    "{problem} {} k={k} on {}: {} ({}) vs exhaustive {}",
                    core.as_str(),
                    describe(&g),
                    fast.answer,
                    fast.method,
                    xp.answer
                );
                for s in [&fast, &xp] {
                    ensure!(
                        !s.answer || verify_solution(&g, &h, k, s).map_err(err)?,
                        "{problem} {}: certificate does not replay on {}",
                        core.as_str(),
                        describe(&g)
                    );
                }
                runs += 1;
                yes += fast.answer as usize;
            }
        }
    }
    Ok(format!("{runs} instances, {yes} yes"))
}

fn satisfiable(num_vars: usize, clauses: &[&Clause]) -> bool {
    (0u32..1 << num_vars).any(|bits| {
        let a: Vec<bool> = (0..num_vars).map(|v| bits >> v & 1 == 1).collect();
        clauses.iter().all(|c| c.satisfied_by(&a))
    })
}

fn subsets_up_to(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n)
        .filter(move |m| m.count_ones() as usize <= k)
        .map(move |m| (0..n).filter(|i| m >> i & 1 == 1).collect())
}

fn random_formula(rng: &mut ChaCha8Rng) -> TwoCnf {
    let nv = rng.gen_range(1..=8);
    let ng = rng.gen_range(1..=5);
    let nc = rng.gen_range(ng..=12);
    let witness: Vec<usize> = (0..ng).map(|_| rng.gen_range(0..nv)).collect();
    let mut f = TwoCnf::new(nv);
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); ng];
    for c in 0..nc {
        let gi = if c < ng { c } else { rng.gen_range(0..ng) };
        let first = Literal {
            var: witness[gi],
            positive: rng.gen_bool(0.5),
        };
        let clause = if rng.gen_bool(0.75) {
            let second = Literal {
                var: rng.gen_range(0..nv),
                positive: rng.gen_bool(0.5),
            };
            Clause::pair(first, second)
        } else {
            Clause::unit(first)
        };
        groups[gi].push(f.add_clause(clause).unwrap());
    }
    f.set_groups(
        groups
            .into_iter()
            .zip(witness)
            .map(|(clauses, witness)| Group { clauses, witness })
            .collect(),
    )
    .unwrap();
    f
}

fn c4_almost_two_sat() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut yes = [0, 0];
    for round in 0..500 {
        let f = random_formula(&mut rng);
        let k = rng.gen_range(0..=3);
        let nv = f.num_vars();
        let groups = f.groups().expect("grouped").to_vec();

        let var_brute = subsets_up_to(nv, k).any(|del| {
            let kept: Vec<&Clause> = f
                .clauses()
                .iter()
                .filter(|c| !del.iter().any(|&v| c.mentions(v)))
                .collect();
            satisfiable(nv, &kept)
        });
        let var = var_del_almost_2sat(&f, k);
        ensure!(
            var.is_some() == var_brute,
            "round {round}: variable deletion {var:?}, brute force {var_brute}"
        );
        if let Some(s) = &var {
            ensure!(s.deleted.len() <= k, "round {round}: too many deletions");
            let ok = f
                .clauses()
                .iter()
                .all(|c| s.deleted.iter().any(|&v| c.mentions(v)) || c.satisfied_by(&s.assignment));
            ensure!(ok, "round {round}: variable deletion assignment fails");
        }

        let group_brute = subsets_up_to(groups.len(), k).any(|del| {
            let kept: Vec<&Clause> = (0..f.clauses().len())
                .filter(|c| !del.iter().any(|&g| groups[g].clauses.contains(c)))
                .map(|c| &f.clauses()[c])
                .collect();
            satisfiable(nv, &kept)
        });
        let group = group_del_almost_2sat(&f, k).map_err(err)?;
        ensure!(
            group.is_some() == group_brute,
            "round {round}: group deletion {group:?}, brute force {group_brute}"
        );
        if let Some(s) = &group {
            ensure!(s.deleted.len() <= k, "round {round}: too many groups");
            let ok = (0..f.clauses().len())
                .filter(|c| !s.deleted.iter().any(|&g| groups[g].clauses.contains(c)))
                .all(|c| f.clauses()[c].satisfied_by(&s.assignment));
            ensure!(ok, "round {round}: group deletion assignment fails");
        }

        let red = group_to_var_reduction(&f).map_err(err)?;
        let via = var_del_almost_2sat(&red.formula, k);
        ensure!(
            via.is_some() == group_brute,
            "round {round}: reduction changes the verdict"
        );
        yes[0] += var_brute as usize;
        yes[1] += group_brute as usize;
    }
    Ok(format!("500 formulas, {} / {} yes", yes[0], yes[1]))
}

fn c5_edel_ptime() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let names = ["H1_rb", "H1_b", "H1_-", "H2-_r,b", "H1_r", "H2-_b,r"];
    for name in names {
        let h = Target::from_name(name).map_err(err)?;
        for _ in 0..200 {
            let g = random_graph(&mut rng, 1, 8, 14);
            let k = rng.gen_range(0..=3);
            let p = solve_edel_ptime(&g, &h, k).map_err(err)?;
            let q = solve_edel_groups(&g, &h, k).map_err(err)?;
            let x = solve_xp(ProblemKind::Edel, &g, &h, k).map_err(err)?;
            ensure!(
                p.answer == q.answer
                    && q.answer == x.answer
                    && p.certificate == x.certificate
                    && q.certificate == x.certificate,
                "{name} k={k} on {}: matching {:?}, groups {:?}, exhaustive {:?}",
                describe(&g),
                p.certificate,
                q.certificate,
                x.certificate
            );
            ensure!(
                !p.answer || verify_solution(&g, &h, k, &p).map_err(err)?,
                "{name}: matching certificate fails"
            );
        }
    }
    Ok(format!("{} targets x 200 instances", names.len()))
}

fn c6_reductions() -> Outcome {
    let graphs = connected_graphs_up_to_iso(6);
    for (n, edges) in &graphs {
        let tau = vertex_cover_number(*n, edges);
        let vc = VcInstance::new(*n, edges, 6).map_err(err)?;
        for r in [
            gen_vc_edel_h2b_rb(&vc),
            gen_vc_edel_h2rb_rb(&vc),
            gen_vc_switch_h2b_rdash(&vc),
        ] {
            // one search at the largest budget settles every smaller one:
            // the exhaustive solver deepens from size 0
            let s = solve_xp(r.problem, &r.instance, &r.target, 6).map_err(err)?;
            ensure!(s.answer, "{} on {edges:?}: no at budget 6", r.target);
            ensure!(
                verify_solution(&r.instance, &r.target, 6, &s).map_err(err)?,
                "certificate fails"
            );
            for k in 0..=6 {
                ensure!(
                    (tau <= k) == (s.budget_used <= k),
                    "{} {} on {edges:?} k={k}: cover number {tau}, modification number {}",
                    r.problem,
                    r.target,
                    s.budget_used
                );
            }
        }
    }
    let instances = partitioned_graphs_up_to_iso(6, 3);
    for (n, edges, parts) in &instances {
        let expected = has_multicoloured_independent_set(edges, parts);
        let mis = MisInstance::new(*n, edges, parts.clone()).map_err(err)?;
        for x in GadgetFamily::ALL {
            for q in [3, 4] {
                let r = gen_mis_switch(&mis, x, q).map_err(err)?;
                let s = solve_xp(r.problem, &r.instance, &r.target, r.budget).map_err(err)?;
                ensure!(
                    s.answer == expected,
                    "x={x} q={q} parts {parts:?} edges {edges:?}: independent set {expected}, switching {}",
                    s.answer
                );
            }
        }
    }
    Ok(format!(
        "{} connected graphs x 3 reductions x k 0..6, {} partitioned graphs x 6",
        graphs.len(),
        instances.len()
    ))
}

fn c7_gadgets() -> Outcome {
    let mut reports = 0;
    for x in GadgetFamily::ALL {
        for q in 3..=MAX_VERIFY_Q {
            for size in 1..=MAX_VERIFY_PART {
                let report = verify_gadget_properties(x, q, size).map_err(err)?;
                ensure!(report.all_passed(), "{report}");
                reports += 1;
            }
        }
    }
    let instances = partitioned_graphs_up_to_iso(5, 3);
    for (n, edges, parts) in &instances {
        let mis = MisInstance::new(*n, edges, parts.clone()).map_err(err)?;
        for x in GadgetFamily::ALL {
            for q in 3..=MAX_VERIFY_Q {
                let g = gen_mis_switch(&mis, x, q).map_err(err)?.instance;
                ensure!(
                    g.girth().is_none_or(|l| l >= q),
                    "x={x} q={q} parts {parts:?}: girth {:?}",
                    g.girth()
                );
            }
        }
    }
    Ok(format!(
        "{reports} gadget reports, girth on {} instances x 12",
        instances.len()
    ))
}

/// Blue-edge parity of each fundamental cycle of a spanning forest, one
/// entry per non-forest edge (loops included).
fn fundamental_parities(g: &ColouredGraph) -> Vec<bool> {
    let n = g.n();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    let mut tree = vec![false; g.m()];
    let inc = g.incidence();
    for root in 0..n {
        if depth[root] != usize::MAX {
            continue;
        }
        depth[root] = 0;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            for &ei in &inc[v] {
                let w = g.edge(ei).other(v);
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    parent[w] = Some((v, ei));
                    tree[ei] = true;
                    stack.push(w);
                }
            }
        }
    }
    let blue = |ei: usize| g.edge(ei).colour == ecmod::Colour::BLUE;
    (0..g.m())
        .filter(|&ei| !tree[ei])
        .map(|ei| {
            let e = g.edge(ei);
            let (mut a, mut b) = (e.u, e.v);
            let mut parity = blue(ei);
            while a != b {
                if depth[a] < depth[b] {
                    std::mem::swap(&mut a, &mut b);
                }
                let (p, pe) = parent[a].expect("not a root");
                parity ^= blue(pe);
                a = p;
            }
            parity
        })
        .collect()
}

fn switching_invariants(g: &ColouredGraph, set: &[usize]) -> Result<(), String> {
    let s = g.switch_set(set).map_err(err)?;
    ensure!(
        s.switch_set(set).map_err(err)? == *g,
        "involution fails for {set:?} on {}",
        describe(g)
    );
    let inside = |v: usize| set.contains(&v);
    for (e, f) in g.edges().iter().zip(s.edges()) {
        let cut = !e.is_loop() && inside(e.u) != inside(e.v);
        ensure!(
            (e.u, e.v) == (f.u, f.v) && (e.colour != f.colour) == cut,
            "edge {}-{} flips wrongly for {set:?} on {}",
            e.u,
            e.v,
            describe(g)
        );
    }
    let complement: Vec<usize> = (0..g.n()).filter(|v| !inside(*v)).collect();
    ensure!(
        g.switch_set(&complement).map_err(err)? == s,
        "complement differs for {set:?} on {}",
        describe(g)
    );
    ensure!(
        fundamental_parities(g) == fundamental_parities(&s),
        "blue parity changes for {set:?} on {}",
        describe(g)
    );
    Ok(())
}

fn c8_switching() -> Outcome {
    let mut exhaustive = 0usize;
    let mut failure = None;
    let mut visit = |g: &ColouredGraph| {
        if failure.is_some() {
            return;
        }
        for mask in 0u32..1 << g.n() {
            let set: Vec<usize> = (0..g.n()).filter(|v| mask >> v & 1 == 1).collect();
            if let Err(e) = switching_invariants(g, &set) {
                failure = Some(e);
                return;
            }
        }
        exhaustive += 1;
    };
    for_each_simple_graph(5, &mut visit);
    for_each_small_graph(3, &mut visit);
    if let Some(f) = failure {
        return Err(f);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..1000 {
        let g = random_graph(&mut rng, 6, 20, 40);
        for _ in 0..4 {
            let set: Vec<usize> = (0..g.n()).filter(|_| rng.gen_bool(0.4)).collect();
            switching_invariants(&g, &set)?;
        }
    }
    Ok(format!(
        "{exhaustive} exhaustive graphs with all switch sets, 1000 random graphs"
    ))
}

fn c9_classifier() -> Outcome {
    use Classical::{NpComplete as Npc, PTime as P};
    use Parameterized::{Fpt, W1Hard as W1};
    // (problem, core, classical, parameterized, reason)
    let table: [(ProblemKind, &str, Classical, Parameterized, &str); 36] = [
        (
            ProblemKind::Vdel,
            "H1_rb",
            P,
            Fpt,
            "a vertex with both loops absorbs every graph",
        ),
        (
            ProblemKind::Vdel,
            "H1_b",
            Npc,
            Fpt,
            "vertex cover of the red edges; FPT through variable deletion 2-SAT",
        ),
        (ProblemKind::Vdel, "H1_-", Npc, Fpt, "vertex cover"),
        (
            ProblemKind::Vdel,
            "H2-_r,b",
            Npc,
            Fpt,
            "no vertex carries both loops",
        ),
        (
            ProblemKind::Vdel,
            "H2b_-,-",
            Npc,
            Fpt,
            "odd cycle transversal of the blue graph",
        ),
        (
            ProblemKind::Vdel,
            "H2b_r,b",
            Npc,
            Fpt,
            "no vertex carries both loops",
        ),
        (
            ProblemKind::Vdel,
            "H2b_r,-",
            Npc,
            Fpt,
            "no vertex carries both loops",
        ),
        (
            ProblemKind::Vdel,
            "H2b_r,r",
            Npc,
            Fpt,
            "no vertex carries both loops",
        ),
        (
            ProblemKind::Vdel,
            "H2rb_-,-",
            Npc,
            Fpt,
            "odd cycle transversal",
        ),
        (
            ProblemKind::Vdel,
            "H2rb_r,b",
            Npc,
            Fpt,
            "no vertex carries both loops",
        ),
        (
            ProblemKind::Vdel,
            "H2rb_r,-",
            Npc,
            Fpt,
            "no vertex carries both loops",
        ),
        (
            ProblemKind::Vdel,
            "H2rb_r,r",
            Npc,
            Fpt,
            "no vertex carries both loops",
        ),
        (ProblemKind::Edel, "H1_rb", P, Fpt, "nothing to delete"),
        (ProblemKind::Edel, "H1_b", P, Fpt, "delete the red edges"),
        (ProblemKind::Edel, "H1_-", P, Fpt, "delete every edge"),
        (
            ProblemKind::Edel,
            "H2-_r,b",
            P,
            Fpt,
            "only loops: colour classes and a bipartite matching",
        ),
        (
            ProblemKind::Edel,
            "H2b_-,-",
            Npc,
            Fpt,
            "edge bipartization of the blue graph",
        ),
        (
            ProblemKind::Edel,
            "H2b_r,b",
            Npc,
            Fpt,
            "vertex cover via red pendants on a blue copy",
        ),
        (
            ProblemKind::Edel,
            "H2b_r,-",
            Npc,
            Fpt,
            "neither only loops nor all three edges",
        ),
        (
            ProblemKind::Edel,
            "H2b_r,r",
            Npc,
            Fpt,
            "neither only loops nor all three edges",
        ),
        (
            ProblemKind::Edel,
            "H2rb_-,-",
            Npc,
            Fpt,
            "edge bipartization",
        ),
        (
            ProblemKind::Edel,
            "H2rb_r,b",
            Npc,
            Fpt,
            "vertex cover via the figure-eight completer",
        ),
        (
            ProblemKind::Edel,
            "H2rb_r,-",
            Npc,
            Fpt,
            "neither only loops nor all three edges",
        ),
        (
            ProblemKind::Edel,
            "H2rb_r,r",
            Npc,
            Fpt,
            "neither only loops nor all three edges",
        ),
        (ProblemKind::Switch, "H1_rb", P, Fpt, "every graph maps"),
        (
            ProblemKind::Switch,
            "H1_b",
            P,
            Fpt,
            "balance test: switch to all blue",
        ),
        (
            ProblemKind::Switch,
            "H1_-",
            P,
            Fpt,
            "switching cannot remove edges",
        ),
        (
            ProblemKind::Switch,
            "H2-_r,b",
            P,
            Fpt,
            "monochromatic per component",
        ),
        (
            ProblemKind::Switch,
            "H2b_-,-",
            P,
            Fpt,
            "bipartite, then switch to all blue",
        ),
        (
            ProblemKind::Switch,
            "H2b_r,b",
            Npc,
            Fpt,
            "vertex cover reduction; bounded search on RBR witnesses",
        ),
        (
            ProblemKind::Switch,
            "H2b_r,-",
            Npc,
            Fpt,
            "vertex cover via red-looped pendants; bounded search",
        ),
        (
            ProblemKind::Switch,
            "H2b_r,r",
            P,
            Fpt,
            "no odd blue parity cycle, which switching preserves",
        ),
        (
            ProblemKind::Switch,
            "H2rb_-,-",
            P,
            Fpt,
            "underlying graph bipartite",
        ),
        (
            ProblemKind::Switch,
            "H2rb_r,b",
            Npc,
            W1,
            "multicoloured independent set reduction",
        ),
        (
            ProblemKind::Switch,
            "H2rb_r,-",
            Npc,
            W1,
            "multicoloured independent set reduction",
        ),
        (
            ProblemKind::Switch,
            "H2rb_r,r",
            Npc,
            W1,
            "multicoloured independent set reduction",
        ),
    ];
    for (problem, name, classical, parameterized, reason) in table {
        let h = Target::from_name(name).map_err(err)?;
        let c = classify(problem, &h).map_err(err)?;
        ensure!(
            c.classical == classical && c.parameterized == parameterized,
            "{problem} {name}: got {}, {}; expected {classical}, {parameterized} ({reason})",
            c.classical,
            c.parameterized
        );
    }
    Ok("36 entries".into())
}

fn panic_message(p: Box<dyn std::any::Any + Send>) -> String {
    p.downcast_ref::<String>()
        .cloned()
        .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
        .unwrap_or_else(|| "panic".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        (
            "2-SAT homomorphism test equals brute force",
            c1_two_sat_matches_brute_force,
        ),
        (
            "obstruction detectors equal the oracle",
            c2_obstructions_match_oracle,
        ),
        (
            "specialised solvers equal the exhaustive solver",
            c3_solvers_match_exhaustive,
        ),
        ("almost 2-SAT equals subset enumeration", c4_almost_two_sat),
        (
            "polynomial edge deletion equals both other paths",
            c5_edel_ptime,
        ),
        ("reductions preserve answers", c6_reductions),
        ("gadget properties and girth", c7_gadgets),
        ("switching invariants", c8_switching),
        ("classifier table", c9_classifier),
    ];
    let only: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        if !only.is_empty() && !only.contains(&(i + 1)) {
            continue;
        }
        let start = Instant::now();
        let outcome =
            panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| Err(panic_message(p)));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(summary) => println!("criterion {}: PASS {name}: {summary} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

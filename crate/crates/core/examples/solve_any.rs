//! The dispatching solver on a target given as a graph rather than a name;
//! the solvers work on its core.

use ecmod::cli::parse_graph;
use ecmod::fptsolve::verify_solution;
use ecmod::{solve, ProblemKind, SolveOptions, Target};

const TARGET: &str = "
colours r b
vertices 3
edge 0 1 b
edge 0 0 r
edge 1 1 b
edge 2 2 r
edge 1 2 b
";

const INPUT: &str = "
colours r b
vertices 5
edge 0 1 r
edge 1 2 b
edge 2 3 r
edge 3 4 b
edge 4 4 b
";

fn main() -> ecmod::Result<()> {
    let h = Target::new(&parse_graph(TARGET)?);
    let g = parse_graph(INPUT)?;
    println!("target {h}, core match {:?}", h.core_match());
    for problem in ProblemKind::ALL {
        for opts in [
            SolveOptions::default(),
            SolveOptions {
                force_xp: true,
                ..SolveOptions::default()
            },
        ] {
            let s = solve(problem, &g, &h, 2, &opts)?;
            println!("{problem} {}: {} {:?}", s.method, s.answer, s.certificate);
            if s.answer {
                assert!(verify_solution(&g, &h, 2, &s)?);
            }
        }
    }
    Ok(())
}

//! The switching reduction from multicoloured independent set.

use ecmod::fptsolve::solve_xp;
use ecmod::gadgets::{gen_mis_switch, GadgetFamily, MisInstance};

fn main() -> ecmod::Result<()> {
    // three parts; 1, 3, 4 is the only independent choice
    let mis = MisInstance::new(
        5,
        &[(0, 2), (0, 3), (1, 2), (2, 4)],
        vec![vec![0, 1], vec![2, 3], vec![4]],
    )?;
    for x in GadgetFamily::ALL {
        let r = gen_mis_switch(&mis, x, 3)?;
        let s = solve_xp(r.problem, &r.instance, &r.target, r.budget)?;
        let picked: Vec<String> = s
            .certificate
            .iter()
            .flat_map(|c| c.items().iter().map(|&v| r.provenance[v].to_string()))
            .collect();
        println!(
            "x={x}: {} vertices, girth {:?}, answer {}, switched {picked:?}",
            r.instance.n(),
            r.instance.girth(),
            s.answer
        );
    }
    Ok(())
}

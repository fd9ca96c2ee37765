//! 2-SAT and its deletion variants.

use ecmod::twosat::{
    group_del_almost_2sat, group_to_var_reduction, solve_2sat, var_del_almost_2sat, Group, Literal,
    TwoCnf,
};

fn main() -> ecmod::Result<()> {
    let (x, y) = (0, 1);
    let mut f = TwoCnf::new(2);
    f.add_pair(Literal::pos(x), Literal::pos(y))?;
    f.add_pair(Literal::neg(x), Literal::pos(y))?;
    println!("satisfying assignment: {:?}", solve_2sat(&f));

    // x and not x: one variable has to go
    let mut g = TwoCnf::new(2);
    g.add_unit(Literal::pos(x))?;
    g.add_unit(Literal::neg(x))?;
    g.add_pair(Literal::pos(y), Literal::neg(x))?;
    println!("unsatisfiable: {}", solve_2sat(&g).is_none());
    let sol = var_del_almost_2sat(&g, 1).expect("one deletion suffices");
    println!("delete variables {:?}", sol.deleted);

    g.set_groups(vec![
        Group {
            clauses: vec![0],
            witness: x,
        },
        Group {
            clauses: vec![1, 2],
            witness: x,
        },
    ])?;
    let sol = group_del_almost_2sat(&g, 1)?.expect("one group suffices");
    println!("delete groups {:?}", sol.deleted);

    let red = group_to_var_reduction(&g)?;
    let via = var_del_almost_2sat(&red.formula, 1).expect("same verdict");
    println!(
        "through variables: groups {:?}",
        red.groups_of(&via.deleted)
    );
    print!("{}", g.to_dimacs());
    Ok(())
}

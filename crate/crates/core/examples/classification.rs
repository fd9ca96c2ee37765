//! The complexity table for every core and problem.

use ecmod::dichotomy::classify;
use ecmod::{CoreName, ProblemKind};

fn main() -> ecmod::Result<()> {
    for problem in ProblemKind::ALL {
        for core in CoreName::ALL {
            println!("{}", classify(problem, &core.target())?);
        }
    }
    Ok(())
}

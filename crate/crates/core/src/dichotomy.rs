//! Cores of small targets and the complexity classifier.

use std::collections::BTreeSet;
use std::fmt;

use crate::ecgraph::{Colour, ColouredGraph, CoreName, Target};
use crate::error::{Error, Result};
use crate::fptsolve::ProblemKind;
use crate::homcheck::is_homomorphism;

/// Largest target order for which [`compute_core`] searches endomorphisms.
pub const MAX_CORE_ORDER: usize = 4;

/// The core of `h` together with its embedding: core vertex `i` is vertex
/// `embedding[i]` of `h`. Among minimum endomorphism images the
/// lexicographically least vertex set is used.
pub fn core_of(h: &Target) -> Result<(Target, Vec<usize>)> {
    let n = h.order();
    if n > MAX_CORE_ORDER {
        return Err(Error::Size(format!(
            "core computation supports targets of order at most {MAX_CORE_ORDER}, got {n}"
        )));
    }
    let mut best: Option<Vec<usize>> = None;
    let mut map = vec![0usize; n];
    let total = n.pow(n as u32);
    for code in 0..total.max(1) {
        let mut c = code;
        for slot in map.iter_mut() {
            *slot = c % n.max(1);
            c /= n.max(1);
        }
        if n > 0 && !is_homomorphism(h.graph(), h, &map) {
            continue;
        }
        let image: Vec<usize> = map
            .iter()
            .copied()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let better = match &best {
            None => true,
            Some(b) => (image.len(), &image) < (b.len(), b),
        };
        if better {
            best = Some(image);
        }
    }
    let keep = best.unwrap_or_default();
    let drop: Vec<usize> = (0..n).filter(|v| !keep.contains(v)).collect();
    let (induced, _) = h.graph().delete_vertices(&drop);
    Ok((Target::new(&induced), keep))
}

/// The core of `h` as an induced subgraph, vertices in their original order.
pub fn compute_core(h: &Target) -> Result<Target> {
    core_of(h).map(|(c, _)| c)
}

/// Every colour of `h` is loops-only or has all three possible edges.
pub fn edel_is_polynomial(h: &Target) -> bool {
    if h.order() > 2 {
        return false;
    }
    h.colours().iter().all(|c| {
        let loops_only =
            (0..h.order()).all(|a| (0..h.order()).all(|b| a == b || !h.has_edge(a, b, c)));
        let complete = (0..h.order()).all(|a| (0..h.order()).all(|b| h.has_edge(a, b, c)));
        loops_only || complete
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classical {
    PTime,
    NpComplete,
    Unknown,
}

impl fmt::Display for Classical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classical::PTime => "PTime",
            Classical::NpComplete => "NP-complete",
            Classical::Unknown => "unknown",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parameterized {
    Fpt,
    W1Hard,
    XpOnly,
    NotInXp,
    Unknown,
}

impl fmt::Display for Parameterized {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parameterized::Fpt => "FPT",
            Parameterized::W1Hard => "W[1]-hard",
            Parameterized::XpOnly => "XP",
            Parameterized::NotInXp => "not in XP",
            Parameterized::Unknown => "unknown",
        })
    }
}

/// Complexity verdict for a (problem, target) pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub problem: ProblemKind,
    pub target: String,
    pub classical: Classical,
    pub parameterized: Parameterized,
    /// Short tag naming the result the verdict follows from.
    pub source: &'static str,
    pub note: Option<String>,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "problem={} target={} classical={} parameterized={} source={}",
            self.problem, self.target, self.classical, self.parameterized, self.source
        )?;
        if let Some(note) = &self.note {
            write!(f, " note={note:?}")?;
        }
        Ok(())
    }
}

/// `h` is a loopless one-colour complete graph on at least three vertices
/// or a loopless one-colour odd cycle, so `h`-colouring is already NP-hard.
fn colouring_is_hard(h: &Target) -> bool {
    let g = h.graph();
    let n = g.n();
    if g.colours().len() != 1 || n < 3 || g.edges().iter().any(|e| e.is_loop()) {
        return false;
    }
    let m = g.m();
    let complete = m == n * (n - 1) / 2;
    let degrees_two = (0..n).all(|v| g.edges().iter().filter(|e| e.touches(v)).count() == 2);
    let odd_cycle = n % 2 == 1 && m == n && degrees_two && g.connected_components().len() == 1;
    complete || odd_cycle
}

fn default_ambient(h: &Target) -> BTreeSet<Colour> {
    let colours = h.colours();
    if colours.iter().all(Colour::is_red_or_blue) {
        BTreeSet::from([Colour::RED, Colour::BLUE])
    } else {
        colours
    }
}

fn has_full_loop_vertex(h: &Target, ambient: &BTreeSet<Colour>) -> bool {
    (0..h.order()).any(|v| ambient.iter().all(|c| h.has_edge(v, v, c)))
}

/// VDEL classification with the ambient colour set defaulting to `{r, b}`
/// for targets within those colours and to the target's colours otherwise.
pub fn classify_vdel(h: &Target) -> Classification {
    classify_vdel_with(h, None)
}

/// VDEL classification against an explicit ambient colour set.
pub fn classify_vdel_with(h: &Target, ambient: Option<&BTreeSet<Colour>>) -> Classification {
    let default = default_ambient(h);
    let ambient = ambient.unwrap_or(&default);
    let classical = if has_full_loop_vertex(h, ambient) {
        Classical::PTime
    } else {
        Classical::NpComplete
    };
    let own = h.colours();
    let note =
        if ambient != &own && has_full_loop_vertex(h, &own) != (classical == Classical::PTime) {
            Some(format!(
                "over the target's own colours the verdict is {}",
                if has_full_loop_vertex(h, &own) {
                    Classical::PTime
                } else {
                    Classical::NpComplete
                }
            ))
        } else {
            None
        };
    let (parameterized, source) = match core_of(h) {
        Ok((core, _)) if core.order() <= 2 => {
            (Parameterized::Fpt, "vdel-loop-criterion,two-sat-deletion")
        }
        Ok((core, _)) if colouring_is_hard(&core) => (Parameterized::NotInXp, "hard-colouring"),
        Err(_) if colouring_is_hard(h) => (Parameterized::NotInXp, "hard-colouring"),
        _ => (Parameterized::Unknown, "vdel-loop-criterion"),
    };
    Classification {
        problem: ProblemKind::Vdel,
        target: h.label(),
        classical,
        parameterized,
        source,
        note,
    }
}

/// EDEL classification; targets are reduced to their cores first.
pub fn classify_edel(h: &Target) -> Result<Classification> {
    let core = compute_core(h)?;
    let (classical, parameterized, source) = if core.order() <= 2 {
        let classical = if edel_is_polynomial(&core) {
            Classical::PTime
        } else {
            Classical::NpComplete
        };
        (classical, Parameterized::Fpt, "edel-dichotomy")
    } else if colouring_is_hard(&core) {
        (
            Classical::NpComplete,
            Parameterized::NotInXp,
            "hard-colouring",
        )
    } else {
        (Classical::Unknown, Parameterized::Unknown, "edel-dichotomy")
    };
    Ok(Classification {
        problem: ProblemKind::Edel,
        target: h.label(),
        classical,
        parameterized,
        source,
        note: None,
    })
}

/// SWITCH classification for 2-edge-coloured targets, matched against the
/// twelve cores up to colour and vertex swap.
pub fn classify_switch(h: &Target) -> Result<Classification> {
    if !h.is_two_coloured() {
        return Err(Error::Domain(
            "switching needs a 2-edge-coloured target".into(),
        ));
    }
    let core = compute_core(h)?;
    let (classical, parameterized, source) = match core.core_match().map(|m| m.core) {
        Some(CoreName::H2BRB | CoreName::H2BRNone) => (
            Classical::NpComplete,
            Parameterized::Fpt,
            "switch-bounded-search",
        ),
        Some(CoreName::H2RbRB | CoreName::H2RbRNone | CoreName::H2RbRR) => (
            Classical::NpComplete,
            Parameterized::W1Hard,
            "switch-independent-set-reduction",
        ),
        Some(_) => (Classical::PTime, Parameterized::Fpt, "switch-dichotomy"),
        None if colouring_is_hard(&core) => (
            Classical::NpComplete,
            Parameterized::NotInXp,
            "hard-colouring",
        ),
        None => (
            Classical::Unknown,
            Parameterized::Unknown,
            "switch-dichotomy",
        ),
    };
    Ok(Classification {
        problem: ProblemKind::Switch,
        target: h.label(),
        classical,
        parameterized,
        source,
        note: None,
    })
}

pub fn classify(problem: ProblemKind, h: &Target) -> Result<Classification> {
    match problem {
        ProblemKind::Vdel => Ok(classify_vdel(h)),
        ProblemKind::Edel => classify_edel(h),
        ProblemKind::Switch => classify_switch(h),
    }
}

/// Monochromatic complete graph of the given colour, used in examples.
pub fn monochromatic_clique(n: usize, colour: &Colour) -> Target {
    let mut g = ColouredGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v, colour.clone()).expect("in range");
        }
    }
    Target::new(&g)
}

//! Extremal fixed points of multivalued maps and extremal Nash equilibria.
//!
//! [`rt_solve`] is the round-robin (Robinson-Topkis) iteration: starting at
//! `⊥` (or `⊤`), each player in turn is assigned `∧B_i(s_{-i})` (or
//! `∨B_i(s_{-i})`) until a full sweep changes nothing. Every assignment is one
//! best-response call, the assignments of the final unchanged sweep included;
//! a player whose vector payoff is maximized component by component is charged
//! one call per component.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{Correspondence, Game};
use crate::lattice::{Elem, ElemSet, Lattice};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Lfp,
    Gfp,
}

impl Direction {
    fn start(self, l: &Lattice) -> Elem {
        match self {
            Direction::Lfp => l.bot(),
            Direction::Gfp => l.top(),
        }
    }

    fn select(self, l: &Lattice, xs: &ElemSet) -> Result<Elem> {
        match self {
            Direction::Lfp => l.meet(xs),
            Direction::Gfp => l.join(xs),
        }
    }

    /// `from ⊑ to` in the direction of iteration.
    fn advances(self, from: &Elem, to: &Elem) -> bool {
        match self {
            Direction::Lfp => from.leq(to),
            Direction::Gfp => to.leq(from),
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Direction::Lfp => "∧",
            Direction::Gfp => "∨",
        }
    }
}

impl std::fmt::Display for Direction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Direction::Lfp => "lfp",
            Direction::Gfp => "gfp",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveTrace {
    pub direction: Direction,
    /// The start point followed by the state after every assignment.
    pub iterates: Vec<Elem>,
    pub best_response_calls: usize,
    pub sweeps: usize,
    pub result: Elem,
}

impl SolveTrace {
    /// Iterates with consecutive repeats removed.
    pub fn distinct_iterates(&self) -> Vec<Elem> {
        let mut out: Vec<Elem> = Vec::new();
        for x in &self.iterates {
            if out.last() != Some(x) {
                out.push(x.clone());
            }
        }
        out
    }

    pub fn is_monotone_chain(&self) -> bool {
        self.iterates
            .windows(2)
            .all(|w| self.direction.advances(&w[0], &w[1]))
    }
}

const UNBOUNDED_CAP: usize = 100_000;

fn default_cap(l: &Lattice) -> usize {
    l.size().map_or(UNBOUNDED_CAP, |n| n.saturating_add(1))
}

/// `lfp(f)` by iterating `x ← ∧f(x)` from `⊥`.
pub fn lfp_multivalued(f: &Correspondence) -> Result<SolveTrace> {
    iterate_multivalued(f, Direction::Lfp, None)
}

/// `gfp(f)` by iterating `x ← ∨f(x)` from `⊤`.
pub fn gfp_multivalued(f: &Correspondence) -> Result<SolveTrace> {
    iterate_multivalued(f, Direction::Gfp, None)
}

pub fn iterate_multivalued(
    f: &Correspondence,
    direction: Direction,
    cap: Option<usize>,
) -> Result<SolveTrace> {
    let l = f.domain();
    if f.codomain() != l {
        return Err(Error::Contract("fixed points need a self-map".into()));
    }
    let cap = cap.unwrap_or_else(|| default_cap(l));
    let mut x = direction.start(l);
    let mut iterates = vec![x.clone()];
    let mut calls = 0;
    loop {
        let fx = f.eval(&x)?;
        if fx.is_empty() {
            return Err(Error::Precondition(format!("f({x}) is empty")));
        }
        calls += 1;
        let next = direction.select(l, &fx)?;
        if !fx.contains(&next) {
            return Err(Error::Precondition(format!(
                "{}f({x}) = {next} is not in f({x})",
                direction.symbol()
            )));
        }
        if next == x {
            return Ok(SolveTrace {
                direction,
                iterates,
                best_response_calls: calls,
                sweeps: calls,
                result: x,
            });
        }
        if !direction.advances(&x, &next) {
            return Err(Error::Precondition(format!(
                "iteration is not monotone: {x} -> {next}"
            )));
        }
        if calls >= cap {
            return Err(Error::NonConvergence {
                cap,
                previous: x,
                last: next,
            });
        }
        iterates.push(next.clone());
        x = next;
    }
}

#[derive(Debug, Clone, Default)]
pub struct RtOptions {
    /// Player sweep order (0-based); ascending when `None`.
    pub order: Option<Vec<usize>>,
    /// Maximum number of sweeps; `|S| + 1` when `None`.
    pub cap: Option<usize>,
    /// Start profile; `⊥` (`⊤`) when `None`. Iterates from another start
    /// need not form a chain, so the monotonicity check is skipped.
    pub start: Option<Elem>,
}

pub fn rt_solve(game: &Game, direction: Direction) -> Result<SolveTrace> {
    rt_solve_with(game, direction, &RtOptions::default())
}

pub fn rt_solve_with(game: &Game, direction: Direction, opts: &RtOptions) -> Result<SolveTrace> {
    let n = game.num_players();
    let order: Vec<usize> = opts.order.clone().unwrap_or_else(|| (0..n).collect());
    let mut sorted = order.clone();
    sorted.sort_unstable();
    if sorted != (0..n).collect::<Vec<_>>() {
        return Err(Error::Contract(format!(
            "sweep order {order:?} is not a permutation of the players"
        )));
    }
    let space = game.profile_space();
    let cap = opts.cap.unwrap_or_else(|| default_cap(space));
    let mut s = match &opts.start {
        Some(s) => {
            space.check(s)?;
            s.clone()
        }
        None => direction.start(space),
    };
    let mut iterates = vec![s.clone()];
    let mut calls = 0;
    let mut sweeps = 0;
    loop {
        sweeps += 1;
        let before = s.clone();
        for &i in &order {
            let s_minus_i = game.minus_i(&s, i)?;
            let br = game.best_response_i(i, &s_minus_i)?;
            if br.is_empty() {
                return Err(Error::NoMaximum {
                    player: i + 1,
                    profile: s_minus_i,
                });
            }
            let x = direction.select(game.space(i), &br)?;
            if !br.contains(&x) {
                return Err(Error::Precondition(format!(
                    "{}B_{}({s_minus_i}) = {x} is not a best response",
                    direction.symbol(),
                    i + 1
                )));
            }
            calls += game.utility(i).calls_per_assignment();
            let next = game.splice(&s_minus_i, i, &x)?;
            if opts.start.is_none() && !direction.advances(&s, &next) {
                return Err(Error::Precondition(format!(
                    "round-robin iteration is not monotone: {s} -> {next}"
                )));
            }
            s = next;
            iterates.push(s.clone());
        }
        if s == before {
            return Ok(SolveTrace {
                direction,
                iterates,
                best_response_calls: calls,
                sweeps,
                result: s,
            });
        }
        if sweeps >= cap {
            return Err(Error::NonConvergence {
                cap,
                previous: before,
                last: s,
            });
        }
    }
}

/// `Eq(Γ) = {s | s ∈ B(s)}` by exhaustive scan.
pub fn enumerate_equilibria(game: &Game) -> Result<ElemSet> {
    let n = game.num_players();
    let mut tables: Vec<BTreeMap<Elem, ElemSet>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut t = BTreeMap::new();
        for s_minus_i in game.opponent_profiles(i)? {
            let br = game.best_response_i(i, &s_minus_i)?;
            t.insert(s_minus_i, br);
        }
        tables.push(t);
    }
    let mut out = ElemSet::new();
    'profiles: for s in game.profile_space().enumerate()? {
        for (i, table) in tables.iter().enumerate() {
            let s_i = game.component(&s, i)?;
            if !table[&game.minus_i(&s, i)?].contains(&s_i) {
                continue 'profiles;
            }
        }
        out.insert(s);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixSet {
    pub elements: ElemSet,
    /// Nonempty, and every pair has a least upper and a greatest lower bound
    /// inside the set under the ambient order.
    pub is_lattice: bool,
}

/// `Fix(f) = {x | x ∈ f(x)}` over a finite domain.
pub fn fix_set_multivalued(f: &Correspondence) -> Result<FixSet> {
    let mut elements = ElemSet::new();
    for (x, fx) in f.tabulate()? {
        if fx.contains(&x) {
            elements.insert(x);
        }
    }
    let is_lattice = is_lattice_under_order(&elements);
    Ok(FixSet {
        elements,
        is_lattice,
    })
}

fn is_lattice_under_order(xs: &ElemSet) -> bool {
    if xs.is_empty() {
        return false;
    }
    let v: Vec<&Elem> = xs.iter().collect();
    let extremal = |bounds: Vec<&Elem>, least: bool| {
        bounds.iter().any(|b| {
            bounds
                .iter()
                .all(|c| if least { b.leq(c) } else { c.leq(b) })
        })
    };
    for a in &v {
        for b in &v {
            let ub: Vec<&Elem> = v.iter().copied().filter(|z| a.leq(z) && b.leq(z)).collect();
            let lb: Vec<&Elem> = v.iter().copied().filter(|z| z.leq(a) && z.leq(b)).collect();
            if !extremal(ub, true) || !extremal(lb, false) {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, Serialize)]
pub struct EquilibriumReport {
    pub lne: Elem,
    pub gne: Elem,
    pub all_equilibria: Option<ElemSet>,
    pub lfp_trace: SolveTrace,
    pub gfp_trace: SolveTrace,
}

/// Least and greatest equilibria by round-robin iteration, optionally with
/// the full equilibrium set.
pub fn solve_game(game: &Game, enumerate: bool) -> Result<EquilibriumReport> {
    let lfp_trace = rt_solve(game, Direction::Lfp)?;
    let gfp_trace = rt_solve(game, Direction::Gfp)?;
    let all_equilibria = if enumerate {
        Some(enumerate_equilibria(game)?)
    } else {
        None
    };
    Ok(EquilibriumReport {
        lne: lfp_trace.result.clone(),
        gne: gfp_trace.result.clone(),
        all_equilibria,
        lfp_trace,
        gfp_trace,
    })
}

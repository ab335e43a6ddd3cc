//! Games, best-response correspondences and the lattice-theoretic payoff
//! properties (supermodularity, increasing differences, single crossing).
//!
//! Player indices are 0-based throughout the API.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{Elem, ElemSet, Lattice};
use crate::powerset::{compare_unchecked, SetRelation};
use crate::rational::Rational;

pub type PayoffFn = Arc<dyn Fn(&Elem) -> Vec<Rational> + Send + Sync>;
/// Closed-form best response: maps `s_{-i}` to `B_i(s_{-i})`.
pub type BestResponseFn = Arc<dyn Fn(&Elem) -> Result<ElemSet> + Send + Sync>;
pub type CorrespondenceFn = Arc<dyn Fn(&Elem) -> Result<ElemSet> + Send + Sync>;

/// A payoff `u_i : S → ℚ^{N_i}`, evaluated on full strategy profiles.
#[derive(Clone)]
pub struct Utility {
    arity: usize,
    eval: PayoffFn,
    componentwise: bool,
    best_response: Option<BestResponseFn>,
}

impl Utility {
    pub fn new(
        arity: usize,
        eval: impl Fn(&Elem) -> Vec<Rational> + Send + Sync + 'static,
    ) -> Self {
        assert!(arity >= 1, "payoff arity must be positive");
        Utility {
            arity,
            eval: Arc::new(eval),
            componentwise: false,
            best_response: None,
        }
    }

    pub fn scalar(eval: impl Fn(&Elem) -> Rational + Send + Sync + 'static) -> Self {
        Utility::new(1, move |s| vec![eval(s)])
    }

    /// Declares that payoff component `j` depends on the player's own
    /// coordinate `j` only (among the player's own coordinates).
    pub fn componentwise(mut self) -> Self {
        self.componentwise = true;
        self
    }

    pub fn with_best_response(
        mut self,
        hook: impl Fn(&Elem) -> Result<ElemSet> + Send + Sync + 'static,
    ) -> Self {
        self.best_response = Some(Arc::new(hook));
        self
    }

    pub(crate) fn with_hook(mut self, hook: Option<BestResponseFn>) -> Self {
        self.best_response = hook;
        self
    }

    pub(crate) fn hook(&self) -> Option<&BestResponseFn> {
        self.best_response.as_ref()
    }

    pub(crate) fn eval_fn(&self) -> &PayoffFn {
        &self.eval
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_componentwise(&self) -> bool {
        self.componentwise
    }

    pub fn has_best_response_hook(&self) -> bool {
        self.best_response.is_some()
    }

    pub fn eval(&self, profile: &Elem) -> Vec<Rational> {
        let v = (self.eval)(profile);
        debug_assert_eq!(v.len(), self.arity);
        v
    }

    /// Best-response evaluations charged for one strategy assignment: one per
    /// payoff component when the components are maximized separately.
    pub fn calls_per_assignment(&self) -> usize {
        if self.componentwise {
            self.arity
        } else {
            1
        }
    }
}

impl fmt::Debug for Utility {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Utility")
            .field("arity", &self.arity)
            .field("componentwise", &self.componentwise)
            .field("hook", &self.best_response.is_some())
            .finish()
    }
}

/// `Γ = ⟨S_i, u_i⟩`.
#[derive(Clone, Debug)]
pub struct Game {
    spaces: Vec<Lattice>,
    utilities: Vec<Utility>,
    profiles: Lattice,
}

impl Game {
    pub fn new(spaces: Vec<Lattice>, utilities: Vec<Utility>) -> Result<Self> {
        if spaces.is_empty() {
            return Err(Error::Contract("a game needs at least one player".into()));
        }
        if spaces.len() != utilities.len() {
            return Err(Error::Contract(format!(
                "{} strategy spaces but {} utilities",
                spaces.len(),
                utilities.len()
            )));
        }
        let profiles = Lattice::product(spaces.clone())?;
        Ok(Game {
            spaces,
            utilities,
            profiles,
        })
    }

    pub fn num_players(&self) -> usize {
        self.spaces.len()
    }

    pub fn space(&self, i: usize) -> &Lattice {
        &self.spaces[i]
    }

    pub fn spaces(&self) -> &[Lattice] {
        &self.spaces
    }

    pub fn utility(&self, i: usize) -> &Utility {
        &self.utilities[i]
    }

    pub fn utilities(&self) -> &[Utility] {
        &self.utilities
    }

    /// `S = ×S_i`.
    pub fn profile_space(&self) -> &Lattice {
        &self.profiles
    }

    fn check_player(&self, i: usize) -> Result<()> {
        if i >= self.num_players() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.num_players(),
            });
        }
        Ok(())
    }

    pub fn payoff(&self, i: usize, profile: &Elem) -> Result<Vec<Rational>> {
        self.check_player(i)?;
        self.profiles.check(profile)?;
        Ok(self.utilities[i].eval(profile))
    }

    /// `s_{-i}`; the empty tuple in a one-player game.
    pub fn minus_i(&self, s: &Elem, i: usize) -> Result<Elem> {
        self.profiles.minus_i(s, i)
    }

    pub fn splice(&self, s_minus_i: &Elem, i: usize, x_i: &Elem) -> Result<Elem> {
        self.profiles.splice(s_minus_i, i, x_i)
    }

    pub fn component(&self, s: &Elem, i: usize) -> Result<Elem> {
        self.profiles.project(s, i)
    }

    /// Every `s_{-i}` in lexicographic order.
    pub fn opponent_profiles(&self, i: usize) -> Result<Vec<Elem>> {
        self.check_player(i)?;
        if self.num_players() == 1 {
            return Ok(vec![Elem::new(Vec::new())]);
        }
        self.profiles.project_minus_i(i)?.enumerate()
    }

    fn opponent_covers(&self, i: usize) -> Result<Vec<(usize, usize)>> {
        if self.num_players() == 1 {
            return Ok(Vec::new());
        }
        self.profiles.project_minus_i(i)?.cover_pairs()
    }

    /// `B_i(s_{-i})`: the strategies whose payoff vector dominates that of every
    /// other own strategy.
    pub fn best_response_i(&self, i: usize, s_minus_i: &Elem) -> Result<ElemSet> {
        self.check_player(i)?;
        let u = &self.utilities[i];
        if let Some(hook) = &u.best_response {
            return hook(s_minus_i);
        }
        let space = &self.spaces[i];
        let strategies = space.enumerate().map_err(|_| {
            Error::Unsupported(format!(
                "player {} has an infinite strategy space and no closed-form best response",
                i + 1
            ))
        })?;
        let values: Vec<Vec<Rational>> = strategies
            .iter()
            .map(|x| self.splice(s_minus_i, i, x).map(|p| u.eval(&p)))
            .collect::<Result<_>>()?;

        let mut best = values[0].clone();
        for v in &values[1..] {
            for (b, x) in best.iter_mut().zip(v) {
                if x > b {
                    *b = x.clone();
                }
            }
        }

        if u.componentwise && u.arity > 1 && space.num_components() == u.arity {
            // each payoff component is maximized over its own coordinate
            let per_component: Vec<ElemSet> = (0..u.arity)
                .map(|j| {
                    strategies
                        .iter()
                        .zip(&values)
                        .filter(|(_, v)| v[j] == best[j])
                        .map(|(x, _)| space.project(x, j).expect("component"))
                        .collect()
                })
                .collect();
            return Ok(cartesian(&per_component));
        }

        let set: ElemSet = strategies
            .iter()
            .zip(&values)
            .filter(|(_, v)| **v == best)
            .map(|(x, _)| x.clone())
            .collect();
        if set.is_empty() {
            return Err(Error::NoMaximum {
                player: i + 1,
                profile: s_minus_i.clone(),
            });
        }
        Ok(set)
    }

    /// `B(s) = ×B_i(s_{-i})`.
    pub fn best_response_at(&self, s: &Elem) -> Result<ElemSet> {
        self.profiles.check(s)?;
        let parts = (0..self.num_players())
            .map(|i| self.best_response_i(i, &self.minus_i(s, i)?))
            .collect::<Result<Vec<_>>>()?;
        Ok(cartesian(&parts))
    }
}

/// `X_1 × ⋯ × X_n` as a set of concatenated tuples.
pub fn cartesian(parts: &[ElemSet]) -> ElemSet {
    let mut out = vec![Elem::new(Vec::new())];
    for part in parts {
        let mut next = Vec::with_capacity(out.len() * part.len());
        for prefix in &out {
            for x in part {
                next.push(Elem::concat([prefix, x]));
            }
        }
        out = next;
    }
    out.into_iter().collect()
}

/// `B` as a correspondence on `S`.
pub fn best_response(game: &Game) -> Correspondence {
    let g = game.clone();
    Correspondence::from_fn(
        game.profile_space().clone(),
        game.profile_space().clone(),
        move |s| g.best_response_at(s),
    )
}

/// `B_i` as a correspondence `S_{-i} → ℘(S_i)` (at least two players).
pub fn player_best_response(game: &Game, i: usize) -> Result<Correspondence> {
    game.check_player(i)?;
    let others = game.profile_space().project_minus_i(i)?;
    let g = game.clone();
    Ok(Correspondence::from_fn(
        others,
        game.space(i).clone(),
        move |s| g.best_response_i(i, s),
    ))
}

/// A multivalued map from a lattice into finite subsets of a lattice.
#[derive(Clone)]
pub struct Correspondence {
    domain: Lattice,
    codomain: Lattice,
    map: CorrespondenceFn,
}

impl Correspondence {
    pub fn from_fn(
        domain: Lattice,
        codomain: Lattice,
        f: impl Fn(&Elem) -> Result<ElemSet> + Send + Sync + 'static,
    ) -> Self {
        Correspondence {
            domain,
            codomain,
            map: Arc::new(f),
        }
    }

    /// A correspondence given by an explicit table over a finite domain.
    pub fn from_table(
        domain: Lattice,
        codomain: Lattice,
        table: BTreeMap<Elem, ElemSet>,
    ) -> Result<Self> {
        for x in domain.enumerate()? {
            let image = table
                .get(&x)
                .ok_or_else(|| Error::Contract(format!("no image given for {x}")))?;
            for y in image {
                codomain.check(y)?;
            }
        }
        for x in table.keys() {
            domain.check(x)?;
        }
        Ok(Correspondence::from_fn(domain, codomain, move |x| {
            table
                .get(x)
                .cloned()
                .ok_or_else(|| Error::NotAMember(x.clone()))
        }))
    }

    pub fn identity(domain: &Lattice) -> Self {
        Correspondence::from_fn(domain.clone(), domain.clone(), |x| {
            Ok(std::iter::once(x.clone()).collect())
        })
    }

    pub fn constant(domain: &Lattice, codomain: &Lattice, value: ElemSet) -> Self {
        Correspondence::from_fn(domain.clone(), codomain.clone(), move |_| Ok(value.clone()))
    }

    pub fn domain(&self) -> &Lattice {
        &self.domain
    }

    pub fn codomain(&self) -> &Lattice {
        &self.codomain
    }

    pub fn eval(&self, x: &Elem) -> Result<ElemSet> {
        self.domain.check(x)?;
        (self.map)(x)
    }

    /// The full graph over a finite domain, in enumeration order.
    pub fn tabulate(&self) -> Result<Vec<(Elem, ElemSet)>> {
        self.domain
            .enumerate()?
            .into_iter()
            .map(|x| {
                let y = (self.map)(&x)?;
                Ok((x, y))
            })
            .collect()
    }

    /// A correspondence backed by a precomputed table of this one.
    pub fn memoized(&self) -> Result<Self> {
        let table: BTreeMap<Elem, ElemSet> = self.tabulate()?.into_iter().collect();
        Correspondence::from_table(self.domain.clone(), self.codomain.clone(), table)
    }

    /// First cover pair `x ⋖ y` of the domain with `f(x)` not related to `f(y)`
    /// (finite domains; the set relations are preorders, so covers suffice).
    pub fn monotonicity_witness(&self, rel: SetRelation) -> Result<Option<(Elem, Elem)>> {
        let table = self.tabulate()?;
        for (a, b) in self.domain.cover_pairs()? {
            if !compare_unchecked(rel, &self.codomain, &table[a].1, &table[b].1) {
                return Ok(Some((table[a].0.clone(), table[b].0.clone())));
            }
        }
        Ok(None)
    }
}

impl fmt::Debug for Correspondence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Correspondence({} -> {})", self.domain, self.codomain)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PropertyMode {
    Supermodular,
    Quasisupermodular,
    IncreasingDifferences,
    SingleCrossing,
    Monotone,
}

impl std::str::FromStr for PropertyMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "supermodular" => PropertyMode::Supermodular,
            "quasisupermodular" => PropertyMode::Quasisupermodular,
            "increasing-differences" | "increasing_differences" => {
                PropertyMode::IncreasingDifferences
            }
            "single-crossing" | "single_crossing" => PropertyMode::SingleCrossing,
            "monotone" => PropertyMode::Monotone,
            other => return Err(Error::Contract(format!("unknown property `{other}`"))),
        })
    }
}

/// A violated instance of a property of `f(x, y)`, `x` ranging over the own
/// lattice and `y` over the others. For the single-lattice modes `y = y′`.
///
/// The violated inequality is `lhs ≤ rhs` (componentwise), or its strict
/// form when `strict` is set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub x: Elem,
    pub x_prime: Elem,
    pub y: Elem,
    pub y_prime: Elem,
    pub lhs: Vec<Rational>,
    pub rhs: Vec<Rational>,
    pub strict: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyVerdict {
    pub mode: PropertyMode,
    pub holds: bool,
    /// Number of violated instances among those examined.
    pub violations: usize,
    /// The first violation in enumeration order.
    pub counterexample: Option<Counterexample>,
}

fn vle(a: &[Rational], b: &[Rational]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn vlt(a: &[Rational], b: &[Rational]) -> bool {
    vle(a, b) && a != b
}

fn vadd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn vsub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Exhaustive check of a payoff property of `f(x, y)`.
///
/// * supermodular, quasisupermodular, monotone: in `x`, for every fixed `y`;
/// * increasing differences, single crossing: between `x` and `y`.
///
/// Pass a one-element `others` lattice to check a function of `x` alone.
pub fn check_lattice_property(
    mode: PropertyMode,
    f: &dyn Fn(&Elem, &Elem) -> Vec<Rational>,
    own: &Lattice,
    others: &Lattice,
) -> Result<PropertyVerdict> {
    let xs = own.enumerate()?;
    let ys = others.enumerate()?;
    let own_covers = own.cover_pairs()?;
    let other_covers = others.cover_pairs()?;
    let table: Vec<Vec<Vec<Rational>>> = xs
        .iter()
        .map(|x| ys.iter().map(|y| f(x, y)).collect())
        .collect();
    Ok(check_tabulated(
        mode,
        own,
        &xs,
        &ys,
        &own_covers,
        &other_covers,
        &table,
    ))
}

fn check_tabulated(
    mode: PropertyMode,
    own: &Lattice,
    xs: &[Elem],
    ys: &[Elem],
    own_covers: &[(usize, usize)],
    other_covers: &[(usize, usize)],
    table: &[Vec<Vec<Rational>>],
) -> PropertyVerdict {
    let mut violations = 0usize;
    let mut first: Option<Counterexample> = None;
    let mut record = |ce: Counterexample| {
        violations += 1;
        if first.is_none() {
            first = Some(ce);
        }
    };
    let index: BTreeMap<&Elem, usize> = xs.iter().enumerate().map(|(k, x)| (x, k)).collect();
    let ce = |a: usize, b: usize, c: usize, d: usize, lhs, rhs, strict| Counterexample {
        x: xs[a].clone(),
        x_prime: xs[b].clone(),
        y: ys[c].clone(),
        y_prime: ys[d].clone(),
        lhs,
        rhs,
        strict,
    };
    match mode {
        PropertyMode::Supermodular | PropertyMode::Quasisupermodular => {
            for a in 0..xs.len() {
                for b in a + 1..xs.len() {
                    // comparable pairs satisfy both properties trivially
                    if xs[a].leq(&xs[b]) || xs[b].leq(&xs[a]) {
                        continue;
                    }
                    let m = index[&own.meet2(&xs[a], &xs[b])];
                    let j = index[&own.join2(&xs[a], &xs[b])];
                    for c in 0..ys.len() {
                        let (ua, ub, um, uj) =
                            (&table[a][c], &table[b][c], &table[m][c], &table[j][c]);
                        if mode == PropertyMode::Supermodular {
                            let lhs = vadd(ua, ub);
                            let rhs = vadd(uj, um);
                            if !vle(&lhs, &rhs) {
                                record(ce(a, b, c, c, lhs, rhs, false));
                            }
                        } else {
                            // both orientations of the pair
                            for (p, pp) in [(ua, ub), (ub, ua)] {
                                if vle(um, p) && !vle(pp, uj) {
                                    record(ce(a, b, c, c, pp.clone(), uj.clone(), false));
                                } else if vlt(um, p) && !vlt(pp, uj) {
                                    record(ce(a, b, c, c, pp.clone(), uj.clone(), true));
                                }
                            }
                        }
                    }
                }
            }
        }
        PropertyMode::Monotone => {
            for &(a, b) in own_covers {
                for c in 0..ys.len() {
                    if !vle(&table[a][c], &table[b][c]) {
                        record(ce(
                            a,
                            b,
                            c,
                            c,
                            table[a][c].clone(),
                            table[b][c].clone(),
                            false,
                        ));
                    }
                }
            }
        }
        PropertyMode::IncreasingDifferences => {
            for &(a, b) in own_covers {
                for &(c, d) in other_covers {
                    let lhs = vsub(&table[b][c], &table[a][c]);
                    let rhs = vsub(&table[b][d], &table[a][d]);
                    if !vle(&lhs, &rhs) {
                        record(ce(a, b, c, d, lhs, rhs, false));
                    }
                }
            }
        }
        PropertyMode::SingleCrossing => {
            for a in 0..xs.len() {
                for b in 0..xs.len() {
                    if a == b || !xs[a].leq(&xs[b]) {
                        continue;
                    }
                    for &(c, d) in other_covers {
                        let (lo_y, hi_y) = (&table[a][c], &table[b][c]);
                        let (lo_yp, hi_yp) = (&table[a][d], &table[b][d]);
                        if vle(lo_y, hi_y) && !vle(lo_yp, hi_yp) {
                            record(ce(a, b, c, d, lo_yp.clone(), hi_yp.clone(), false));
                        } else if vlt(lo_y, hi_y) && !vlt(lo_yp, hi_yp) {
                            record(ce(a, b, c, d, lo_yp.clone(), hi_yp.clone(), true));
                        }
                    }
                }
            }
        }
    }
    PropertyVerdict {
        mode,
        holds: violations == 0,
        violations,
        counterexample: first,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PlayerProperties {
    pub player: usize,
    pub supermodular: PropertyVerdict,
    pub increasing_differences: PropertyVerdict,
    pub quasisupermodular: PropertyVerdict,
    pub single_crossing: PropertyVerdict,
}

#[derive(Debug, Clone, Serialize)]
pub struct SupermodularityReport {
    /// Supermodular in own strategy with increasing differences, every player.
    pub supermodular: bool,
    /// Quasisupermodular in own strategy with single crossing, every player.
    pub quasisupermodular: bool,
    pub players: Vec<PlayerProperties>,
}

/// Checks the supermodular-game conditions for each player.
pub fn is_supermodular_game(game: &Game) -> Result<SupermodularityReport> {
    let mut players = Vec::new();
    for i in 0..game.num_players() {
        let own = game.space(i);
        let xs = own.enumerate()?;
        let ys = game.opponent_profiles(i)?;
        let own_covers = own.cover_pairs()?;
        let other_covers = game.opponent_covers(i)?;
        let u = game.utility(i);
        let table: Vec<Vec<Vec<Rational>>> = xs
            .iter()
            .map(|x| {
                ys.iter()
                    .map(|y| game.splice(y, i, x).map(|p| u.eval(&p)))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let run = |mode| check_tabulated(mode, own, &xs, &ys, &own_covers, &other_covers, &table);
        players.push(PlayerProperties {
            player: i + 1,
            supermodular: run(PropertyMode::Supermodular),
            increasing_differences: run(PropertyMode::IncreasingDifferences),
            quasisupermodular: run(PropertyMode::Quasisupermodular),
            single_crossing: run(PropertyMode::SingleCrossing),
        });
    }
    Ok(SupermodularityReport {
        supermodular: players
            .iter()
            .all(|p| p.supermodular.holds && p.increasing_differences.holds),
        quasisupermodular: players
            .iter()
            .all(|p| p.quasisupermodular.holds && p.single_crossing.holds),
        players,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use proptest::prelude::*;

    fn matrix_game(n1: i64, n2: i64, u1: Vec<i64>, u2: Vec<i64>) -> Game {
        let s1 = Lattice::int_chain(1, n1).unwrap();
        let s2 = Lattice::int_chain(1, n2).unwrap();
        let idx = move |s: &Elem| {
            let a = s.coord(0).to_i64().unwrap() - 1;
            let b = s.coord(1).to_i64().unwrap() - 1;
            (a * n2 + b) as usize
        };
        Game::new(
            vec![s1, s2],
            vec![
                Utility::scalar(move |s| Rational::from_integer(u1[idx(s)])),
                Utility::scalar(move |s| Rational::from_integer(u2[idx(s)])),
            ],
        )
        .unwrap()
    }

    #[test]
    fn constant_game_best_responds_with_everything() {
        let s = Lattice::int_chain(1, 4).unwrap();
        let g = Game::new(vec![s.clone()], vec![Utility::scalar(|_| q(3, 1))]).unwrap();
        let br = g.best_response_i(0, &Elem::new(vec![])).unwrap();
        assert_eq!(br.len(), 4);
        let g2 = matrix_game(2, 3, vec![0; 6], vec![0; 6]);
        let b = best_response(&g2);
        assert_eq!(b.eval(&Elem::ints(&[1, 1])).unwrap().len(), 6);
    }

    #[test]
    fn vector_payoffs_without_maximum() {
        let s = Lattice::int_chain(0, 1).unwrap();
        // two incomparable payoff vectors
        let g = Game::new(
            vec![s],
            vec![Utility::new(2, |p| {
                let x = p.coord(0).clone();
                vec![x.clone(), Rational::one() - x]
            })],
        )
        .unwrap();
        assert!(matches!(
            g.best_response_i(0, &Elem::new(vec![])),
            Err(Error::NoMaximum { player: 1, .. })
        ));
    }

    #[test]
    fn componentwise_vector_best_response() {
        let s = Lattice::power(&Lattice::int_chain(0, 2).unwrap(), 2).unwrap();
        // component j peaks at 2 - j, independent of the other coordinate
        let u = Utility::new(2, |p| {
            let a = p.coord(0).clone();
            let b = p.coord(1).clone();
            vec![-(a.clone() - 2) * (a - 2), -(b.clone() - 1) * (b - 1)]
        })
        .componentwise();
        assert_eq!(u.calls_per_assignment(), 2);
        let g = Game::new(vec![s], vec![u]).unwrap();
        let br = g.best_response_i(0, &Elem::new(vec![])).unwrap();
        assert_eq!(br, [Elem::ints(&[2, 1])].into_iter().collect());
    }

    #[test]
    fn anti_coordination_is_not_supermodular() {
        // 2×2: each player wants to mismatch the other
        let g = matrix_game(2, 2, vec![0, 1, 1, 0], vec![0, 1, 1, 0]);
        let r = is_supermodular_game(&g).unwrap();
        assert!(!r.supermodular);
        let ce = r.players[0]
            .increasing_differences
            .counterexample
            .clone()
            .unwrap();
        assert_eq!(ce.lhs, vec![q(1, 1)]);
        assert_eq!(ce.rhs, vec![q(-1, 1)]);
        let coord = matrix_game(2, 2, vec![1, 0, 0, 1], vec![1, 0, 0, 1]);
        assert!(is_supermodular_game(&coord).unwrap().supermodular);
    }

    #[test]
    fn identity_on_chain_is_supermodular() {
        let c = Lattice::int_chain(1, 5).unwrap();
        let unit = Lattice::int_chain(0, 0).unwrap();
        let v = check_lattice_property(
            PropertyMode::Supermodular,
            &|x, _| vec![x.coord(0).clone()],
            &c,
            &unit,
        )
        .unwrap();
        assert!(v.holds);
        let v = check_lattice_property(
            PropertyMode::Monotone,
            &|x, _| vec![-x.coord(0).clone()],
            &c,
            &unit,
        )
        .unwrap();
        assert_eq!(v.violations, 4);
    }

    #[test]
    fn supermodularity_on_a_square() {
        let sq = Lattice::power(&Lattice::int_chain(0, 1).unwrap(), 2).unwrap();
        let unit = Lattice::int_chain(0, 0).unwrap();
        let prod = |x: &Elem, _: &Elem| vec![x.coord(0) * x.coord(1)];
        let neg = |x: &Elem, _: &Elem| vec![-(x.coord(0) * x.coord(1))];
        assert!(
            check_lattice_property(PropertyMode::Supermodular, &prod, &sq, &unit)
                .unwrap()
                .holds
        );
        let v = check_lattice_property(PropertyMode::Supermodular, &neg, &sq, &unit).unwrap();
        assert!(!v.holds);
        // min(x0, x1) is not supermodular in the negated form but is quasisupermodular
        let qsm = |x: &Elem, _: &Elem| vec![x.coord(0).clone().min(x.coord(1).clone())];
        assert!(
            check_lattice_property(PropertyMode::Quasisupermodular, &qsm, &sq, &unit)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn correspondence_table_and_monotonicity() {
        let c = Lattice::int_chain(1, 3).unwrap();
        let table: BTreeMap<Elem, ElemSet> = (1..=3)
            .map(|k| (Elem::int(k), [Elem::int(4 - k)].into_iter().collect()))
            .collect();
        let f = Correspondence::from_table(c.clone(), c.clone(), table).unwrap();
        assert_eq!(
            f.monotonicity_witness(SetRelation::EgliMilner).unwrap(),
            Some((Elem::int(1), Elem::int(2)))
        );
        assert_eq!(
            Correspondence::identity(&c)
                .monotonicity_witness(SetRelation::Smyth)
                .unwrap(),
            None
        );
        assert!(Correspondence::from_table(c.clone(), c, BTreeMap::new()).is_err());
    }

    proptest! {
        // increasing differences is equivalent to its all-pairs definition
        #[test]
        fn cover_check_matches_all_pairs(w in proptest::collection::vec(-3i64..4, 16)) {
            let own = Lattice::int_chain(0, 3).unwrap();
            let others = Lattice::int_chain(0, 3).unwrap();
            let f = |x: &Elem, y: &Elem| {
                let (a, b) = (x.coord(0).to_i64().unwrap(), y.coord(0).to_i64().unwrap());
                vec![Rational::from_integer(w[(a * 4 + b) as usize])]
            };
            let fast = check_lattice_property(PropertyMode::IncreasingDifferences, &f, &own, &others).unwrap();
            let mut brute = true;
            for a in 0..4 { for b in a..4 { for c in 0..4 { for d in c..4 {
                let u = |x: i64, y: i64| w[(x * 4 + y) as usize];
                if u(b, c) - u(a, c) > u(b, d) - u(a, d) { brute = false; }
            }}}}
            prop_assert_eq!(fast.holds, brute);
        }
    }
}

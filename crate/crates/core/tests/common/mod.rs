#![allow(dead_code)]

use supermod_core::models::{bertrand3, twentieths, Bertrand3Params};
use supermod_core::{gc_from_subset, Elem, GaloisConnection, Game, Rational};

pub fn ints(xs: &[i64]) -> Vec<Elem> {
    xs.iter().map(|&x| Elem::int(x)).collect()
}

pub fn pair(a: i64, b: i64) -> Elem {
    Elem::ints(&[a, b])
}

pub fn frac(s: &str) -> Rational {
    s.parse().unwrap()
}

pub fn fracs(xs: &[&str]) -> Elem {
    Elem::new(xs.iter().map(|s| frac(s)).collect())
}

pub fn twentieth_elems(xs: impl IntoIterator<Item = i64>) -> Vec<Elem> {
    xs.into_iter()
        .map(|x| Elem::scalar(Rational::new(x, 20)))
        .collect()
}

pub fn bertrand3_game() -> Game {
    bertrand3(&Bertrand3Params::default()).unwrap()
}

/// The three price abstractions of the 3-firm market: the first has a gap
/// between 38/20 and 42/20.
pub fn bertrand3_abstractions(game: &Game) -> Vec<GaloisConnection> {
    let members: [Vec<i64>; 3] = [
        (35..=38).chain(42..=46).collect(),
        (36..=46).collect(),
        (38..=46).collect(),
    ];
    members
        .iter()
        .enumerate()
        .map(|(i, m)| gc_from_subset(game.space(i), twentieth_elems(m.iter().copied())).unwrap())
        .collect()
}

pub fn floor_space() -> supermod_core::Lattice {
    twentieths(26, 42).unwrap()
}

pub mod random {
    //! Seeded generators for lattices, abstractions, correspondences and
    //! supermodular games.

    use std::collections::BTreeMap;

    use rand::seq::SliceRandom;
    use rand::Rng;
    use rand_chacha::ChaCha8Rng;
    use supermod_core::models::table_game;
    use supermod_core::{
        gc_from_subset, Correspondence, Elem, ElemSet, GaloisConnection, Game, Lattice, Rational,
    };

    pub use rand::SeedableRng;
    pub type Rng8 = ChaCha8Rng;

    pub fn rng(seed: u64) -> Rng8 {
        ChaCha8Rng::seed_from_u64(seed)
    }

    /// A chain or a product of chains with at most `max` elements.
    pub fn lattice(rng: &mut Rng8, max: usize) -> Lattice {
        let mut dims = Vec::new();
        let mut size = 1;
        loop {
            let cap = max / size;
            if cap < 2 || (!dims.is_empty() && rng.gen_bool(0.4)) {
                break;
            }
            let d = rng.gen_range(2..=cap.min(6));
            dims.push(d);
            size *= d;
        }
        if dims.is_empty() {
            dims.push(1);
        }
        if dims.len() == 1 {
            return Lattice::int_chain(1, dims[0] as i64).unwrap();
        }
        let parts = dims
            .iter()
            .map(|&d| Lattice::int_chain(1, d as i64).unwrap())
            .collect();
        Lattice::product(parts).unwrap()
    }

    /// A random Moore family: random members closed under meets, plus `⊤`.
    pub fn moore_family(rng: &mut Rng8, l: &Lattice) -> Vec<Elem> {
        let all = l.enumerate().unwrap();
        let mut members: ElemSet = all.iter().filter(|_| rng.gen_bool(0.4)).cloned().collect();
        members.insert(l.top());
        loop {
            let current: Vec<Elem> = members.iter().cloned().collect();
            let before = members.len();
            for x in &current {
                for y in &current {
                    members.insert(l.meet2(x, y));
                }
            }
            if members.len() == before {
                return current;
            }
        }
    }

    pub fn abstraction(rng: &mut Rng8, l: &Lattice) -> GaloisConnection {
        gc_from_subset(l, moore_family(rng, l)).unwrap()
    }

    pub fn subset(rng: &mut Rng8, members: &[Elem], max: usize) -> ElemSet {
        let k = rng.gen_range(1..=max.min(members.len()));
        members.choose_multiple(rng, k).cloned().collect()
    }

    /// A monotone self-map `c ↦ ∨{r(d) | d ≤ c}`.
    pub fn monotone_map(rng: &mut Rng8, l: &Lattice) -> BTreeMap<Elem, Elem> {
        let all = l.enumerate().unwrap();
        let bot = l.bot();
        let seeds: Vec<Elem> = all
            .iter()
            .map(|_| {
                if rng.gen_bool(0.5) {
                    bot.clone()
                } else {
                    all.choose(rng).unwrap().clone()
                }
            })
            .collect();
        all.iter()
            .map(|c| {
                let v = all
                    .iter()
                    .zip(&seeds)
                    .filter(|(d, _)| d.leq(c))
                    .fold(bot.clone(), |acc, (_, r)| l.join2(&acc, r));
                (c.clone(), v)
            })
            .collect()
    }

    fn pointwise_join(
        l: &Lattice,
        a: &BTreeMap<Elem, Elem>,
        b: &BTreeMap<Elem, Elem>,
    ) -> BTreeMap<Elem, Elem> {
        a.iter()
            .map(|(c, x)| (c.clone(), l.join2(x, &b[c])))
            .collect()
    }

    /// `{lo, hi}` or the interval `[lo, hi]`; both are sublattices with
    /// least element `lo` and greatest element `hi`.
    fn bracket(all: &[Elem], lo: &Elem, hi: &Elem, full: bool) -> ElemSet {
        if full {
            all.iter()
                .filter(|x| lo.leq(x) && x.leq(hi))
                .cloned()
                .collect()
        } else {
            ElemSet::from([lo.clone(), hi.clone()])
        }
    }

    /// EM-monotone `f, g : C → SL(C)` with `f(c) ⪯_EM g(c)` for every `c`.
    pub fn dominated_pair(rng: &mut Rng8, l: &Lattice) -> (Correspondence, Correspondence) {
        let all = l.enumerate().unwrap();
        let lo_f = monotone_map(rng, l);
        let hi_f = pointwise_join(l, &lo_f, &monotone_map(rng, l));
        let lo_g = pointwise_join(l, &lo_f, &monotone_map(rng, l));
        let hi_g = pointwise_join(l, &pointwise_join(l, &hi_f, &lo_g), &monotone_map(rng, l));
        let full_f = rng.gen_bool(0.5);
        let full_g = rng.gen_bool(0.5);
        let table = |lo: &BTreeMap<Elem, Elem>, hi: &BTreeMap<Elem, Elem>, full: bool| {
            all.iter()
                .map(|c| (c.clone(), bracket(&all, &lo[c], &hi[c], full)))
                .collect::<BTreeMap<_, _>>()
        };
        let f =
            Correspondence::from_table(l.clone(), l.clone(), table(&lo_f, &hi_f, full_f)).unwrap();
        let g =
            Correspondence::from_table(l.clone(), l.clone(), table(&lo_g, &hi_g, full_g)).unwrap();
        (f, g)
    }

    /// A chain, or a product of two short chains.
    pub fn strategy_space(rng: &mut Rng8) -> Lattice {
        if rng.gen_bool(0.7) {
            Lattice::int_chain(1, rng.gen_range(2..=5)).unwrap()
        } else {
            let a = Lattice::int_chain(1, rng.gen_range(2..=3)).unwrap();
            let b = Lattice::int_chain(1, 2).unwrap();
            Lattice::product(vec![a, b]).unwrap()
        }
    }

    /// A 2-player game whose payoffs are built to be supermodular: for each
    /// player a modular own term, an arbitrary opponent-only term, and a
    /// nonnegative combination of indicators `1[s ≥ z]` over the whole
    /// profile. Small integer ranges make ties common.
    pub fn supermodular_game(rng: &mut Rng8) -> Game {
        let spaces = vec![strategy_space(rng), strategy_space(rng)];
        let profile_space = Lattice::product(spaces.clone()).unwrap();
        let profiles = profile_space.enumerate().unwrap();
        let arities: Vec<usize> = spaces.iter().map(Lattice::arity).collect();
        let mut payoffs: BTreeMap<Elem, Vec<Rational>> =
            profiles.iter().map(|s| (s.clone(), Vec::new())).collect();
        for i in 0..2 {
            let own_range = if i == 0 {
                0..arities[0]
            } else {
                arities[0]..arities[0] + arities[1]
            };
            let modular: Vec<Vec<i64>> = own_range
                .clone()
                .map(|_| (0..=5).map(|_| rng.gen_range(0..=3)).collect())
                .collect();
            let mut opponent: BTreeMap<Vec<Rational>, i64> = BTreeMap::new();
            let bumps: Vec<(Elem, i64)> = (0..rng.gen_range(1..=4))
                .map(|_| (profiles.choose(rng).unwrap().clone(), rng.gen_range(0..=3)))
                .collect();
            for s in &profiles {
                let mut u: i64 = 0;
                for (k, c) in own_range.clone().enumerate() {
                    u += modular[k][s.coord(c).to_i64().unwrap() as usize];
                }
                let others: Vec<Rational> = s
                    .coords()
                    .iter()
                    .enumerate()
                    .filter(|(c, _)| !own_range.contains(c))
                    .map(|(_, x)| x.clone())
                    .collect();
                let next = rng.gen_range(0..=2);
                u += *opponent.entry(others).or_insert(next);
                u += bumps
                    .iter()
                    .filter(|(z, _)| z.leq(s))
                    .map(|(_, w)| w)
                    .sum::<i64>();
                payoffs.get_mut(s).unwrap().push(Rational::from_integer(u));
            }
        }
        table_game(spaces, payoffs).unwrap()
    }
}

pub mod suites {
    //! One check per randomized property; each returns a description of the
    //! first failure.

    use super::random::{self, Rng8};
    use rand::Rng;
    use supermod_core::{
        abstract_best_response_game, alpha_s, enumerate_equilibria, extremal_membership,
        fix_set_multivalued, gamma_s, gc_from_subset, powerset_compare, rt_solve, validate_gc,
        Direction, Elem, Lattice, SetRelation,
    };

    pub type Outcome = Result<(), String>;

    /// Every abstraction of the chain `1..=n` (subsets containing `n`).
    pub fn chain_gc_laws(n: i64) -> Outcome {
        let c = Lattice::int_chain(1, n).unwrap();
        for mask in 0u32..(1 << (n - 1)) {
            let mut members: Vec<Elem> = (1..n)
                .filter(|k| mask & (1 << (k - 1)) != 0)
                .map(Elem::int)
                .collect();
            members.push(Elem::int(n));
            let gc = gc_from_subset(&c, members.clone()).map_err(|e| e.to_string())?;
            let v = validate_gc(&gc).map_err(|e| e.to_string())?;
            if !v.holds {
                return Err(format!(
                    "chain 1..{n}, members {members:?}: {:?}",
                    v.violations
                ));
            }
        }
        Ok(())
    }

    /// `α^s(X) ⪯ Y ⟺ X ⪯ γ^s(Y)` for S, H and EM on sets with the matching
    /// extremal elements.
    pub fn preorder_adjunction(rng: &mut Rng8) -> Outcome {
        let c = random::lattice(rng, 16);
        let gc = random::abstraction(rng, &c);
        let cs = c.enumerate().unwrap();
        let as_ = gc.abstract_lattice().enumerate().unwrap();
        for _ in 0..20 {
            let x = random::subset(rng, &cs, 4);
            let y = random::subset(rng, &as_, 4);
            let fx = extremal_membership(&c, &x).unwrap();
            let fy = extremal_membership(gc.abstract_lattice(), &y).unwrap();
            for rel in [
                SetRelation::Smyth,
                SetRelation::Hoare,
                SetRelation::EgliMilner,
            ] {
                if !(fx.fits(rel) && fy.fits(rel)) {
                    continue;
                }
                let left =
                    powerset_compare(rel, gc.abstract_lattice(), &alpha_s(&gc, &x).unwrap(), &y)
                        .unwrap();
                let right = powerset_compare(rel, &c, &x, &gamma_s(&gc, &y).unwrap()).unwrap();
                if left != right {
                    return Err(format!("{rel} on {c}: X={x:?} Y={y:?}: {left} vs {right}"));
                }
            }
        }
        Ok(())
    }

    /// The least and greatest enumerated equilibria are the round-robin
    /// fixed points.
    pub fn solver_oracle(rng: &mut Rng8) -> Outcome {
        let g = random::supermodular_game(rng);
        let report = supermod_core::is_supermodular_game(&g).unwrap();
        if !report.supermodular {
            return Err(format!(
                "generated game on {} is not supermodular",
                g.profile_space()
            ));
        }
        let eq = enumerate_equilibria(&g).unwrap();
        let l = g.profile_space();
        if eq.is_empty() {
            return Err(format!("no equilibria on {l}"));
        }
        let least = l.meet(&eq).unwrap();
        let greatest = l.join(&eq).unwrap();
        let lfp = rt_solve(&g, Direction::Lfp)
            .map_err(|e| e.to_string())?
            .result;
        let gfp = rt_solve(&g, Direction::Gfp)
            .map_err(|e| e.to_string())?
            .result;
        if lfp != least || gfp != greatest || !eq.contains(&least) || !eq.contains(&greatest) {
            return Err(format!("on {l}: Eq={eq:?}, lfp={lfp}, gfp={gfp}"));
        }
        Ok(())
    }

    /// `Fix(f) ⪯_EM Fix(g)` for EM-monotone `f, g` into sublattices with
    /// `f ⪯_EM g` pointwise.
    pub fn fix_dominance(rng: &mut Rng8) -> Outcome {
        let l = random::lattice(rng, 16);
        let (f, g) = random::dominated_pair(rng, &l);
        for h in [&f, &g] {
            if let Some(w) = h.monotonicity_witness(SetRelation::EgliMilner).unwrap() {
                return Err(format!("generated correspondence not EM-monotone at {w:?}"));
            }
        }
        let ff = fix_set_multivalued(&f).unwrap().elements;
        let fg = fix_set_multivalued(&g).unwrap().elements;
        if ff.is_empty()
            || fg.is_empty()
            || !powerset_compare(SetRelation::EgliMilner, &l, &ff, &fg).unwrap()
        {
            return Err(format!("on {l}: Fix(f)={ff:?}, Fix(g)={fg:?}"));
        }
        Ok(())
    }

    /// `Eq(Γ) ⪯_EM Eq(Γ_𝒢)` for the abstract best-response game.
    pub fn abstract_response_dominance(rng: &mut Rng8) -> Outcome {
        let g = random::supermodular_game(rng);
        let gcs: Vec<_> = (0..2)
            .map(|i| {
                if rng.gen_bool(0.15) {
                    supermod_core::GaloisConnection::identity(g.space(i))
                } else {
                    random::abstraction(rng, g.space(i))
                }
            })
            .collect();
        let ag = abstract_best_response_game(&g, &gcs).unwrap();
        let concrete = enumerate_equilibria(&g).unwrap();
        let abstract_ = enumerate_equilibria(&ag.derived).unwrap();
        if !powerset_compare(
            SetRelation::EgliMilner,
            g.profile_space(),
            &concrete,
            &abstract_,
        )
        .unwrap()
        {
            return Err(format!(
                "on {}: Eq(G)={concrete:?}, Eq(G_abs)={abstract_:?}",
                g.profile_space()
            ));
        }
        Ok(())
    }
}

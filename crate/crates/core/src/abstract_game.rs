//! Games over abstracted strategy spaces and correctness of abstract best
//! responses.
//!
//! Two constructions from a game `Γ` and one connection `(α_i, S_i, A_i, γ_i)`
//! per player:
//!
//! * [`restrict_game`]: players choose in `A_i`, with `u_i^𝒢(a) = u_i(γ(a))`;
//! * [`abstract_best_response_game`]: players keep `S_i` but see opponents
//!   through `ρ_{-i} = γ_{-i}∘α_{-i}`: `u_{i,𝒢}(s) = u_i(s_i, ρ_{-i}(s_{-i}))`.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::abstraction::{alpha_s, compose_product, is_principal_filter, GaloisConnection};
use crate::error::{Error, Result};
use crate::game::{best_response, Correspondence, Game, Utility};
use crate::lattice::{Elem, ElemSet, Lattice};
use crate::powerset::{compare_unchecked, extremal_unchecked, SetRelation};
use crate::solver::{enumerate_equilibria, lfp_multivalued};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scheme {
    RestrictedStrategySpace,
    AbstractBestResponse,
}

#[derive(Debug, Clone)]
pub struct AbstractGame {
    pub base: Game,
    pub gcs: Vec<GaloisConnection>,
    pub scheme: Scheme,
    pub derived: Game,
    /// False when some connection is not finitely disjunctive, in which case
    /// supermodularity of a restricted game is not implied by that of `base`.
    pub supermodularity_preserved: bool,
    pub warnings: Vec<String>,
}

impl AbstractGame {
    /// The product connection `×(α_i, S_i, A_i, γ_i)`.
    pub fn product_gc(&self) -> Result<GaloisConnection> {
        compose_product(&self.gcs)
    }
}

fn check_gcs(game: &Game, gcs: &[GaloisConnection]) -> Result<()> {
    if gcs.len() != game.num_players() {
        return Err(Error::Contract(format!(
            "{} abstractions for {} players",
            gcs.len(),
            game.num_players()
        )));
    }
    for (i, gc) in gcs.iter().enumerate() {
        if gc.concrete() != game.space(i) {
            return Err(Error::Contract(format!(
                "abstraction {} is over {}, not over the strategy space {}",
                i + 1,
                gc.concrete(),
                game.space(i)
            )));
        }
    }
    Ok(())
}

/// `Γ^𝒢 = ⟨A_i, u_i∘γ⟩`.
pub fn restrict_game(game: &Game, gcs: &[GaloisConnection]) -> Result<AbstractGame> {
    check_gcs(game, gcs)?;
    let mut warnings = Vec::new();
    for (i, gc) in gcs.iter().enumerate() {
        if !gc.finitely_disjunctive() {
            warnings.push(format!(
                "abstraction of player {} is not finitely disjunctive; supermodularity of the restricted game is unverified",
                i + 1
            ));
        }
    }
    // γ is the inclusion, so u_i∘γ is u_i restricted to A; closed-form best
    // responses range over S_i and are dropped.
    let utilities = game
        .utilities()
        .iter()
        .map(|u| u.clone().with_hook(None))
        .collect();
    let spaces = gcs.iter().map(|g| g.abstract_lattice().clone()).collect();
    let derived = Game::new(spaces, utilities)?;
    Ok(AbstractGame {
        base: game.clone(),
        gcs: gcs.to_vec(),
        scheme: Scheme::RestrictedStrategySpace,
        derived,
        supermodularity_preserved: warnings.is_empty(),
        warnings,
    })
}

/// Applies `ρ_j` to every opponent coordinate block of `s_{-i}`.
fn rho_minus_i(game: &Game, gcs: &[GaloisConnection], i: usize, s_minus_i: &Elem) -> Result<Elem> {
    let mut offset = 0;
    let mut pieces = Vec::with_capacity(gcs.len());
    for (j, gc) in gcs.iter().enumerate() {
        if j == i {
            continue;
        }
        let width = game.space(j).arity();
        let block = Elem::new(s_minus_i.coords()[offset..offset + width].to_vec());
        pieces.push(gc.alpha(&block)?);
        offset += width;
    }
    Ok(Elem::concat(&pieces))
}

/// `Γ_𝒢 = ⟨S_i, u_i(s_i, ρ_{-i}(s_{-i}))⟩`. Closed-form best responses are
/// kept and applied to `ρ_{-i}(s_{-i})`.
pub fn abstract_best_response_game(game: &Game, gcs: &[GaloisConnection]) -> Result<AbstractGame> {
    check_gcs(game, gcs)?;
    let shared = Arc::new((game.clone(), gcs.to_vec()));
    let mut utilities = Vec::with_capacity(game.num_players());
    for i in 0..game.num_players() {
        let base = game.utility(i);
        let ctx = Arc::clone(&shared);
        let eval = Arc::clone(base.eval_fn());
        let mut u = Utility::new(base.arity(), move |s| {
            let (g, gcs) = &*ctx;
            let own = g.component(s, i).expect("profile");
            let others = g.minus_i(s, i).expect("profile");
            let seen = rho_minus_i(g, gcs, i, &others).expect("opponent abstraction");
            eval(&g.splice(&seen, i, &own).expect("profile"))
        });
        if base.is_componentwise() {
            u = u.componentwise();
        }
        if let Some(hook) = base.hook() {
            let hook = Arc::clone(hook);
            let ctx = Arc::clone(&shared);
            u = u.with_best_response(move |s_minus_i| {
                let (g, gcs) = &*ctx;
                hook(&rho_minus_i(g, gcs, i, s_minus_i)?)
            });
        }
        utilities.push(u);
    }
    let derived = Game::new(game.spaces().to_vec(), utilities)?;
    Ok(AbstractGame {
        base: game.clone(),
        gcs: gcs.to_vec(),
        scheme: Scheme::AbstractBestResponse,
        derived,
        supermodularity_preserved: true,
        warnings: Vec::new(),
    })
}

/// `f^A(a) = α^s(f(γ(a)))` for `f : C → ℘(C)`.
pub fn best_correct_approx(f: &Correspondence, gc: &GaloisConnection) -> Result<Correspondence> {
    best_correct_approx_with(f, gc, gc)
}

/// `f^A(a) = α_cod^s(f(γ_dom(a)))` for `f : C → ℘(D)`.
pub fn best_correct_approx_with(
    f: &Correspondence,
    dom: &GaloisConnection,
    cod: &GaloisConnection,
) -> Result<Correspondence> {
    if f.domain() != dom.concrete() || f.codomain() != cod.concrete() {
        return Err(Error::Contract(
            "abstractions do not match the correspondence's domain and codomain".into(),
        ));
    }
    let (f, dom_c, cod_c) = (f.clone(), dom.clone(), cod.clone());
    Ok(Correspondence::from_fn(
        dom.abstract_lattice().clone(),
        cod.abstract_lattice().clone(),
        move |a| alpha_s(&cod_c, &f.eval(&dom_c.gamma(a)?)?),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ApproxCounterexample {
    /// `f(γ(a))` is not related to `γ^s(f♯(a))`.
    Soundness {
        a: Elem,
        concrete: ElemSet,
        #[serde(rename = "abstract")]
        abstract_: ElemSet,
    },
    /// `f♯(a)` lacks the extremal element(s) the relation needs.
    NotExtremal { a: Elem, image: ElemSet },
    /// `a ⋖ a′` but `f♯(a)` is not related to `f♯(a′)`.
    NotMonotone { a: Elem, a_prime: Elem },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorrectnessVerdict {
    pub relation: SetRelation,
    pub holds: bool,
    pub counterexample: Option<ApproxCounterexample>,
}

/// Is `f♯ : A → ℘(A)` a correct approximation of `f : C → ℘(C)` for `rel`?
pub fn check_correct_approx(
    f: &Correspondence,
    f_sharp: &Correspondence,
    gc: &GaloisConnection,
    rel: SetRelation,
) -> Result<CorrectnessVerdict> {
    check_correct_approx_with(f, f_sharp, gc, gc, rel)
}

/// As [`check_correct_approx`] for `f : C → ℘(D)` and `f♯ : A_C → ℘(A_D)`.
///
/// Soundness `f(γ(a)) rel γ^s(f♯(a))` is checked first, then the
/// fixed-point condition: `f♯(a)` in the family the relation asks for and
/// `f♯` monotone for `rel`.
pub fn check_correct_approx_with(
    f: &Correspondence,
    f_sharp: &Correspondence,
    dom: &GaloisConnection,
    cod: &GaloisConnection,
    rel: SetRelation,
) -> Result<CorrectnessVerdict> {
    let fail = |ce| {
        Ok(CorrectnessVerdict {
            relation: rel,
            holds: false,
            counterexample: Some(ce),
        })
    };
    let table = f_sharp.tabulate()?;
    let d = cod.concrete();
    for (a, image) in &table {
        let concrete = f.eval(&dom.gamma(a)?)?;
        if !compare_unchecked(rel, d, &concrete, image) {
            return fail(ApproxCounterexample::Soundness {
                a: a.clone(),
                concrete,
                abstract_: image.clone(),
            });
        }
    }
    let cod_a = cod.abstract_lattice();
    for (a, image) in &table {
        if image.is_empty() || !extremal_unchecked(cod_a, image).fits(rel) {
            return fail(ApproxCounterexample::NotExtremal {
                a: a.clone(),
                image: image.clone(),
            });
        }
    }
    if let Some((a, a_prime)) = f_sharp.monotonicity_witness(rel)? {
        return fail(ApproxCounterexample::NotMonotone { a, a_prime });
    }
    Ok(CorrectnessVerdict {
        relation: rel,
        holds: true,
        counterexample: None,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompletenessVerdict {
    pub holds: bool,
    /// Some `c` with `α^s(f(c)) ≠ f♯(α(c))`.
    pub witness: Option<Elem>,
    /// When complete: whether `α(lfp f) = lfp f♯`; `None` if either least
    /// fixed point could not be computed.
    pub lfp_transfer: Option<bool>,
}

/// `α^s(f(c)) = f♯(α(c))` for every `c ∈ C`.
pub fn check_complete_approx(
    f: &Correspondence,
    f_sharp: &Correspondence,
    gc: &GaloisConnection,
) -> Result<CompletenessVerdict> {
    for (c, fc) in f.tabulate()? {
        if alpha_s(gc, &fc)? != f_sharp.eval(&gc.alpha(&c)?)? {
            return Ok(CompletenessVerdict {
                holds: false,
                witness: Some(c),
                lfp_transfer: None,
            });
        }
    }
    let lfp_transfer = match (lfp_multivalued(f), lfp_multivalued(f_sharp)) {
        (Ok(lc), Ok(la)) => Some(gc.alpha(&lc.result)? == la.result),
        _ => None,
    };
    Ok(CompletenessVerdict {
        holds: true,
        witness: None,
        lfp_transfer,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremFailure {
    /// The abstract profile.
    pub a: Elem,
    /// `∨B(γ(a)) ∨ γ(∧B^𝒢(a))`, which lies outside `γ(A)`.
    pub value: Elem,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    /// `∨B(γ(a)) ∨ γ(∧B^𝒢(a)) ∈ γ(A)` for every abstract profile `a`.
    pub holds: bool,
    pub failures: Vec<TheoremFailure>,
    pub principal_filters: Vec<bool>,
    pub all_principal_filter: bool,
    /// `Eq(Γ) ⪯_EM γ^s(Eq(Γ^𝒢))` is guaranteed: either the condition holds
    /// or every abstraction is a principal filter.
    pub dominance_guaranteed: bool,
}

/// Evaluates the side condition of equilibrium correctness for the
/// restricted game, componentwise over players.
pub fn check_theorem_condition(game: &Game, gcs: &[GaloisConnection]) -> Result<TheoremVerdict> {
    let restricted = restrict_game(game, gcs)?;
    let derived = &restricted.derived;
    let n = game.num_players();
    let mut memo: Vec<BTreeMap<Elem, Elem>> = vec![BTreeMap::new(); n];
    let mut failures = Vec::new();
    for a in derived.profile_space().enumerate()? {
        let mut pieces = Vec::with_capacity(n);
        let mut inside = true;
        for i in 0..n {
            let a_minus_i = derived.minus_i(&a, i)?;
            let x = match memo[i].get(&a_minus_i) {
                Some(x) => x.clone(),
                None => {
                    let s_i = game.space(i);
                    let concrete = s_i.join(&game.best_response_i(i, &a_minus_i)?)?;
                    let abstract_ = derived
                        .space(i)
                        .meet(&derived.best_response_i(i, &a_minus_i)?)?;
                    let x = s_i.join2(&concrete, &abstract_);
                    memo[i].insert(a_minus_i, x.clone());
                    x
                }
            };
            inside &= derived.space(i).contains(&x);
            pieces.push(x);
        }
        if !inside {
            failures.push(TheoremFailure {
                a,
                value: Elem::concat(&pieces),
            });
        }
    }
    let principal_filters: Vec<bool> =
        gcs.iter().map(is_principal_filter).collect::<Result<_>>()?;
    let all_principal_filter = principal_filters.iter().all(|&p| p);
    let holds = failures.is_empty();
    Ok(TheoremVerdict {
        holds,
        failures,
        principal_filters,
        all_principal_filter,
        dominance_guaranteed: holds || all_principal_filter,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominanceVerdict {
    /// `Eq(Γ) ⪯_EM γ^s(Eq(derived))`
    pub holds: bool,
    pub concrete: ElemSet,
    #[serde(rename = "abstract")]
    pub abstract_: ElemSet,
}

/// Compares the equilibria of `base` and `derived` in the Egli-Milner order
/// on the concrete profile space.
pub fn check_em_dominance(ag: &AbstractGame) -> Result<DominanceVerdict> {
    let concrete = enumerate_equilibria(&ag.base)?;
    let abstract_ = enumerate_equilibria(&ag.derived)?;
    let holds = compare_unchecked(
        SetRelation::EgliMilner,
        ag.base.profile_space(),
        &concrete,
        &abstract_,
    );
    Ok(DominanceVerdict {
        holds,
        concrete,
        abstract_,
    })
}

/// `B^A`, the best correct approximation of the best response of `game`
/// on the product of `gcs`.
pub fn best_response_approx(game: &Game, gcs: &[GaloisConnection]) -> Result<Correspondence> {
    check_gcs(game, gcs)?;
    best_correct_approx(&best_response(game), &compose_product(gcs)?)
}

/// The product lattice `×A_i`.
pub fn abstract_profile_space(gcs: &[GaloisConnection]) -> Result<Lattice> {
    Lattice::product(gcs.iter().map(|g| g.abstract_lattice().clone()).collect())
}

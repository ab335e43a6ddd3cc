//! Galois connections between strategy lattices.
//!
//! An abstraction is always materialized: the abstract lattice `A` is a
//! lattice whose elements are elements of the concrete lattice `C` (a subset,
//! a product of subsets, or `C` itself), `γ` is the inclusion and `α(c)` is the
//! least abstract element above `c`. `ρ = γ∘α` is then a closure operator on
//! `C` with image `A`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{Elem, ElemSet, Lattice};
use crate::rational::Rational;

#[derive(Clone)]
enum AlphaMap {
    /// `α(c) = ∧{a ∈ A | c ≤ a}`
    Closure,
    /// Explicit values over a finite concrete lattice.
    Table(Arc<BTreeMap<Elem, Elem>>),
    /// `α(c) = (α_i(c_i))_i`
    Componentwise(Vec<GaloisConnection>),
}

#[derive(Clone)]
pub struct GaloisConnection {
    concrete: Lattice,
    abstract_: Lattice,
    alpha: AlphaMap,
}

impl fmt::Debug for GaloisConnection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GC({} -> {})", self.concrete, self.abstract_)
    }
}

/// A closure operator `ρ` on a lattice.
#[derive(Clone)]
pub struct ClosureOperator {
    domain: Lattice,
    map: Arc<dyn Fn(&Elem) -> Result<Elem> + Send + Sync>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ClosureLaws {
    /// A cover pair `x ⋖ y` with `ρ(x) ≰ ρ(y)`.
    pub not_monotone: Option<(Elem, Elem)>,
    /// Some `x` with `x ≰ ρ(x)`.
    pub not_extensive: Option<Elem>,
    /// Some `x` with `ρ(ρ(x)) ≠ ρ(x)`.
    pub not_idempotent: Option<Elem>,
}

impl ClosureLaws {
    pub fn hold(&self) -> bool {
        self.not_monotone.is_none() && self.not_extensive.is_none() && self.not_idempotent.is_none()
    }
}

impl ClosureOperator {
    pub fn new(
        domain: Lattice,
        map: impl Fn(&Elem) -> Result<Elem> + Send + Sync + 'static,
    ) -> Self {
        ClosureOperator {
            domain,
            map: Arc::new(map),
        }
    }

    pub fn domain(&self) -> &Lattice {
        &self.domain
    }

    pub fn apply(&self, x: &Elem) -> Result<Elem> {
        self.domain.check(x)?;
        (self.map)(x)
    }

    /// The fixed points `ρ(C)`.
    pub fn image(&self) -> Result<ElemSet> {
        self.domain
            .enumerate()?
            .iter()
            .map(|x| (self.map)(x))
            .collect()
    }

    /// Exhaustive check of monotonicity, extensiveness and idempotence.
    pub fn laws(&self) -> Result<ClosureLaws> {
        let xs = self.domain.enumerate()?;
        let images: Vec<Elem> = xs.iter().map(|x| (self.map)(x)).collect::<Result<_>>()?;
        let mut laws = ClosureLaws::default();
        for (a, b) in self.domain.cover_pairs()? {
            if !images[a].leq(&images[b]) {
                laws.not_monotone = Some((xs[a].clone(), xs[b].clone()));
                break;
            }
        }
        laws.not_extensive = xs
            .iter()
            .zip(&images)
            .find(|(x, r)| !x.leq(r))
            .map(|(x, _)| x.clone());
        for (x, r) in xs.iter().zip(&images) {
            if !self.domain.contains(r) || (self.map)(r)? != *r {
                laws.not_idempotent = Some(x.clone());
                break;
            }
        }
        Ok(laws)
    }
}

impl GaloisConnection {
    /// `A = C`, `α = γ = id`.
    pub fn identity(concrete: &Lattice) -> Self {
        GaloisConnection {
            concrete: concrete.clone(),
            abstract_: concrete.clone(),
            alpha: AlphaMap::Closure,
        }
    }

    /// A connection with an explicit abstraction map, not validated. Use
    /// [`validate_gc`] to check it.
    pub fn from_alpha_table(
        concrete: &Lattice,
        abstract_: &Lattice,
        table: BTreeMap<Elem, Elem>,
    ) -> Result<Self> {
        for c in concrete.enumerate()? {
            let a = table
                .get(&c)
                .ok_or_else(|| Error::Contract(format!("α({c}) is not given")))?;
            concrete.check(a)?;
        }
        Ok(GaloisConnection {
            concrete: concrete.clone(),
            abstract_: abstract_.clone(),
            alpha: AlphaMap::Table(Arc::new(table)),
        })
    }

    pub fn concrete(&self) -> &Lattice {
        &self.concrete
    }

    pub fn abstract_lattice(&self) -> &Lattice {
        &self.abstract_
    }

    pub fn alpha(&self, c: &Elem) -> Result<Elem> {
        self.concrete.check(c)?;
        self.alpha_unchecked(c)
    }

    pub(crate) fn alpha_unchecked(&self, c: &Elem) -> Result<Elem> {
        match &self.alpha {
            AlphaMap::Closure => self
                .abstract_
                .closure(c)
                .ok_or_else(|| Error::MissingTop(self.concrete.top())),
            AlphaMap::Table(t) => t
                .get(c)
                .cloned()
                .ok_or_else(|| Error::NotAMember(c.clone())),
            AlphaMap::Componentwise(gcs) => {
                let pieces = self.concrete.split(c);
                let images: Vec<Elem> = gcs
                    .iter()
                    .zip(&pieces)
                    .map(|(g, p)| g.alpha_unchecked(p))
                    .collect::<Result<_>>()?;
                Ok(Elem::concat(&images))
            }
        }
    }

    /// The inclusion `A ⊆ C`.
    pub fn gamma(&self, a: &Elem) -> Result<Elem> {
        self.abstract_.check(a)?;
        Ok(a.clone())
    }

    /// `ρ = γ∘α`.
    pub fn rho(&self, c: &Elem) -> Result<Elem> {
        self.alpha(c)
    }

    pub fn closure_operator(&self) -> ClosureOperator {
        let gc = self.clone();
        ClosureOperator::new(self.concrete.clone(), move |c| gc.alpha_unchecked(c))
    }

    /// `γ(A)`, over a finite abstract lattice.
    pub fn gamma_image(&self) -> Result<ElemSet> {
        Ok(self.abstract_.enumerate()?.into_iter().collect())
    }

    /// Per-player components when the connection is a product composition.
    pub fn components(&self) -> Option<&[GaloisConnection]> {
        match &self.alpha {
            AlphaMap::Componentwise(gcs) => Some(gcs),
            _ => None,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.concrete == self.abstract_
            || self
                .components()
                .is_some_and(|gcs| gcs.iter().all(GaloisConnection::is_identity))
    }

    /// `α∘γ = id`.
    pub fn is_insertion(&self) -> Result<bool> {
        for a in self.abstract_.enumerate()? {
            if self.alpha_unchecked(&a)? != a {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `γ` preserves binary joins: `γ(A)` is join-closed in `C`. On the finite
    /// abstract domains used here this coincides with disjunctivity.
    pub fn finitely_disjunctive(&self) -> bool {
        match &self.alpha {
            AlphaMap::Componentwise(gcs) => gcs.iter().all(GaloisConnection::finitely_disjunctive),
            _ => self.abstract_.is_join_closed(),
        }
    }

    pub fn disjunctive(&self) -> bool {
        self.finitely_disjunctive()
    }

    pub fn flags(&self) -> GcFlags {
        GcFlags {
            is_insertion: self.is_insertion().ok(),
            finitely_disjunctive: self.finitely_disjunctive(),
            disjunctive: self.disjunctive(),
            principal_filter: is_principal_filter(self).ok(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GcFlags {
    /// `None` when the abstract lattice cannot be enumerated.
    pub is_insertion: Option<bool>,
    pub finitely_disjunctive: bool,
    pub disjunctive: bool,
    /// `None` when the concrete lattice cannot be enumerated.
    pub principal_filter: Option<bool>,
}

/// The connection induced by a meet-closed subset containing `⊤_C`:
/// `α(c) = ∧{x ∈ members | c ≤ x}`.
pub fn gc_from_subset(
    concrete: &Lattice,
    members: impl IntoIterator<Item = Elem>,
) -> Result<GaloisConnection> {
    let members: ElemSet = members.into_iter().collect();
    for m in &members {
        concrete.check(m)?;
    }
    let top = concrete.top();
    if !members.contains(&top) {
        return Err(Error::MissingTop(top));
    }
    let abstract_ = Lattice::subset(concrete, members)?;
    Ok(GaloisConnection {
        concrete: concrete.clone(),
        abstract_,
        alpha: AlphaMap::Closure,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GcLaw {
    /// `α(c) ∈ A`
    AlphaIntoAbstract,
    /// `α(c) ≤ a ⇔ c ≤ γ(a)`
    Adjunction,
    /// `α(c ∨ c′) = α(c) ∨ α(c′)` and `α(⊥) = ⊥`
    AlphaAdditive,
    /// `γ(a ∧ a′) = γ(a) ∧ γ(a′)` and `γ(⊤) = ⊤`
    GammaCoadditive,
    ClosureMonotone,
    ClosureExtensive,
    ClosureIdempotent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawViolation {
    pub law: GcLaw,
    pub witness: Vec<Elem>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GcValidation {
    pub holds: bool,
    /// First witness for each violated law.
    pub violations: Vec<LawViolation>,
    pub flags: GcFlags,
}

/// Exhaustive verification of the connection laws over finite lattices.
pub fn validate_gc(gc: &GaloisConnection) -> Result<GcValidation> {
    let c_lat = &gc.concrete;
    let a_lat = &gc.abstract_;
    let cs = c_lat.enumerate()?;
    let as_ = a_lat.enumerate()?;
    let alphas: Vec<Elem> = cs
        .iter()
        .map(|c| gc.alpha_unchecked(c))
        .collect::<Result<_>>()?;
    let mut violations = Vec::new();
    let mut report = |law, witness: Vec<Elem>| {
        if !violations.iter().any(|v: &LawViolation| v.law == law) {
            violations.push(LawViolation { law, witness });
        }
    };

    for (c, a) in cs.iter().zip(&alphas) {
        if !a_lat.contains(a) {
            report(GcLaw::AlphaIntoAbstract, vec![c.clone(), a.clone()]);
        }
    }
    'adj: for (c, ac) in cs.iter().zip(&alphas) {
        for a in &as_ {
            if ac.leq(a) != c.leq(a) {
                report(GcLaw::Adjunction, vec![c.clone(), a.clone()]);
                break 'adj;
            }
        }
    }
    let index: BTreeMap<&Elem, usize> = cs.iter().enumerate().map(|(k, c)| (c, k)).collect();
    if alphas[index[&c_lat.bot()]] != a_lat.bot() {
        report(GcLaw::AlphaAdditive, vec![c_lat.bot()]);
    }
    'add: for i in 0..cs.len() {
        for j in i + 1..cs.len() {
            let joined = &alphas[index[&c_lat.join2(&cs[i], &cs[j])]];
            let (x, y) = (&alphas[i], &alphas[j]);
            if !a_lat.contains(x) || !a_lat.contains(y) || *joined != a_lat.join2(x, y) {
                report(GcLaw::AlphaAdditive, vec![cs[i].clone(), cs[j].clone()]);
                break 'add;
            }
        }
    }
    if a_lat.top() != c_lat.top() {
        report(GcLaw::GammaCoadditive, vec![a_lat.top()]);
    }
    'coadd: for i in 0..as_.len() {
        for j in i + 1..as_.len() {
            if a_lat.meet2(&as_[i], &as_[j]) != c_lat.meet2(&as_[i], &as_[j]) {
                report(GcLaw::GammaCoadditive, vec![as_[i].clone(), as_[j].clone()]);
                break 'coadd;
            }
        }
    }
    let laws = gc.closure_operator().laws()?;
    if let Some((x, y)) = laws.not_monotone {
        report(GcLaw::ClosureMonotone, vec![x, y]);
    }
    if let Some(x) = laws.not_extensive {
        report(GcLaw::ClosureExtensive, vec![x]);
    }
    if let Some(x) = laws.not_idempotent {
        report(GcLaw::ClosureIdempotent, vec![x]);
    }
    Ok(GcValidation {
        holds: violations.is_empty(),
        violations,
        flags: gc.flags(),
    })
}

/// `α(c) = (α_i(c_i))_i`, `γ(a) = (γ_i(a_i))_i`.
pub fn compose_product(gcs: &[GaloisConnection]) -> Result<GaloisConnection> {
    if gcs.is_empty() {
        return Err(Error::Contract("product of no abstractions".into()));
    }
    let concrete = Lattice::product(gcs.iter().map(|g| g.concrete.clone()).collect())?;
    let abstract_ = Lattice::product(gcs.iter().map(|g| g.abstract_.clone()).collect())?;
    Ok(GaloisConnection {
        concrete,
        abstract_,
        alpha: AlphaMap::Componentwise(gcs.to_vec()),
    })
}

/// Per-component connections `α_i(c_i) = γ(α(c_i, ⊥_{-i}))_i` with
/// `A_i = {γ(a)_i | a ∈ A}`.
pub fn decompose_product(gc: &GaloisConnection) -> Result<Vec<GaloisConnection>> {
    if let Some(gcs) = gc.components() {
        return Ok(gcs.to_vec());
    }
    let c = &gc.concrete;
    if !c.is_product() {
        return Err(Error::Unsupported(
            "decomposition of a non-product abstraction".into(),
        ));
    }
    let abstract_points = gc.abstract_.enumerate()?;
    let bot = c.bot();
    let mut out = Vec::with_capacity(c.num_components());
    for i in 0..c.num_components() {
        let ci = c.component(i)?;
        let members: ElemSet = abstract_points
            .iter()
            .map(|a| c.project(a, i))
            .collect::<Result<_>>()?;
        let ai = Lattice::subset(&ci, members)?;
        let bot_minus_i = c.minus_i(&bot, i)?;
        let mut table = BTreeMap::new();
        for x in ci.enumerate()? {
            let lifted = c.splice(&bot_minus_i, i, &x)?;
            let image = gc.alpha_unchecked(&lifted)?;
            table.insert(x, c.project(&image, i)?);
        }
        out.push(GaloisConnection::from_alpha_table(&ci, &ai, table)?);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationalVerdict {
    pub relational: bool,
    /// First element of `A_1 × ⋯ × A_n` outside `A`.
    pub witness: Option<Elem>,
}

/// Relational when the product of the decomposed components is strictly
/// larger than `γ(A)`.
pub fn is_relational(gc: &GaloisConnection) -> Result<RelationalVerdict> {
    if gc.components().is_some() {
        return Ok(RelationalVerdict {
            relational: false,
            witness: None,
        });
    }
    let own = gc.gamma_image()?;
    let product = compose_product(&decompose_product(gc)?)?;
    let witness = product
        .abstract_
        .enumerate()?
        .into_iter()
        .find(|a| !own.contains(a));
    Ok(RelationalVerdict {
        relational: witness.is_some(),
        witness,
    })
}

/// `γ(A) = {c ∈ C | γ(⊥_A) ≤ c}`.
pub fn is_principal_filter(gc: &GaloisConnection) -> Result<bool> {
    let image = gc.gamma_image()?;
    let floor = gc.abstract_.bot();
    let filter: ElemSet = gc
        .concrete
        .enumerate()?
        .into_iter()
        .filter(|c| floor.leq(c))
        .collect();
    Ok(filter == image)
}

/// `cl_N(x) = ⌈10^N x⌉ / 10^N`.
pub fn ceil_digits(x: &Rational, n: u32) -> Rational {
    let scale = Rational::from_bigint(num_bigint::BigInt::from(10u32).pow(n));
    (x * &scale).ceil() / scale
}

/// The abstraction induced by `cl_N` on a scalar grid or interval, or on a
/// product of those (coordinatewise). The image of `cl_N` must stay inside the
/// concrete lattice.
pub fn ceil_abstraction(n: u32, concrete: &Lattice) -> Result<GaloisConnection> {
    if concrete.is_product() {
        let parts = concrete
            .components()
            .iter()
            .map(|c| ceil_abstraction(n, c))
            .collect::<Result<Vec<_>>>()?;
        return compose_product(&parts);
    }
    if concrete.arity() != 1 || !concrete.is_chain() || concrete.is_subset() {
        return Err(Error::Unsupported(
            "ceil abstraction needs a scalar grid or interval".into(),
        ));
    }
    let top = concrete.top();
    if ceil_digits(top.coord(0), n) != *top.coord(0) {
        return Err(Error::IncompatibleStep(format!(
            "cl_{n}({top}) lies above the top of {concrete}"
        )));
    }
    match concrete.enumerate() {
        Ok(points) => {
            let mut image = ElemSet::new();
            for p in &points {
                let r = Elem::scalar(ceil_digits(p.coord(0), n));
                if !concrete.contains(&r) {
                    return Err(Error::IncompatibleStep(format!(
                        "cl_{n}({p}) = {r} is not a point of {concrete}"
                    )));
                }
                image.insert(r);
            }
            gc_from_subset(concrete, image)
        }
        Err(_) => {
            let step =
                Rational::one() / Rational::from_bigint(num_bigint::BigInt::from(10u32).pow(n));
            let lo = ceil_digits(concrete.bot().coord(0), n);
            let grid = Lattice::grid(lo, top.coord(0).clone(), step)?;
            Ok(GaloisConnection {
                concrete: concrete.clone(),
                abstract_: grid,
                alpha: AlphaMap::Closure,
            })
        }
    }
}

/// `α^s(X) = {α(x) | x ∈ X}`.
pub fn alpha_s(gc: &GaloisConnection, xs: &ElemSet) -> Result<ElemSet> {
    xs.iter().map(|x| gc.alpha(x)).collect()
}

/// `γ^s(Y) = {γ(y) | y ∈ Y}`.
pub fn gamma_s(gc: &GaloisConnection, ys: &ElemSet) -> Result<ElemSet> {
    ys.iter().map(|y| gc.gamma(y)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::powerset::{extremal_membership, powerset_compare, SetRelation};
    use crate::rational::q;
    use proptest::prelude::*;

    fn chain(lo: i64, hi: i64) -> Lattice {
        Lattice::int_chain(lo, hi).unwrap()
    }

    fn ints(xs: &[i64]) -> Vec<Elem> {
        xs.iter().map(|&x| Elem::int(x)).collect()
    }

    fn diagram_gc() -> GaloisConnection {
        let c = Lattice::power(&chain(1, 6), 2).unwrap();
        let pts = [(2, 2), (3, 4), (4, 4), (3, 5), (4, 5), (6, 6)];
        gc_from_subset(&c, pts.iter().map(|&(a, b)| Elem::ints(&[a, b]))).unwrap()
    }

    #[test]
    fn chain_subsets_are_abstractions() {
        let c = chain(1, 6);
        let gc = gc_from_subset(&c, ints(&[3, 5, 6])).unwrap();
        let v = validate_gc(&gc).unwrap();
        assert!(v.holds, "{:?}", v.violations);
        assert_eq!(v.flags.is_insertion, Some(true));
        assert!(v.flags.disjunctive);
        assert_eq!(gc.alpha(&Elem::int(1)).unwrap(), Elem::int(3));
        assert_eq!(gc.alpha(&Elem::int(4)).unwrap(), Elem::int(5));

        let top_only = gc_from_subset(&c, ints(&[6])).unwrap();
        for x in 1..=6 {
            assert_eq!(top_only.alpha(&Elem::int(x)).unwrap(), Elem::int(6));
        }
        assert!(validate_gc(&top_only).unwrap().holds);
    }

    #[test]
    fn subset_errors() {
        let c = chain(1, 6);
        assert_eq!(
            gc_from_subset(&c, ints(&[3, 5])).unwrap_err(),
            Error::MissingTop(Elem::int(6))
        );
        let sq = Lattice::power(&c, 2).unwrap();
        let err = gc_from_subset(
            &sq,
            [
                Elem::ints(&[1, 2]),
                Elem::ints(&[2, 1]),
                Elem::ints(&[6, 6]),
            ],
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotMeetClosed { .. }));
    }

    #[test]
    fn diagram_is_disjunctive_and_relational() {
        let gc = diagram_gc();
        let v = validate_gc(&gc).unwrap();
        assert!(v.holds);
        assert!(v.flags.disjunctive);
        let parts = decompose_product(&gc).unwrap();
        let members: Vec<Vec<Elem>> = parts
            .iter()
            .map(|p| p.abstract_lattice().enumerate().unwrap())
            .collect();
        assert_eq!(members[0], ints(&[2, 3, 4, 6]));
        assert_eq!(members[1], ints(&[2, 4, 5, 6]));
        for p in &parts {
            assert!(validate_gc(p).unwrap().holds);
        }
        let r = is_relational(&gc).unwrap();
        assert!(r.relational);
        assert_eq!(r.witness, Some(Elem::ints(&[2, 4])));
    }

    #[test]
    fn product_round_trip() {
        let c = chain(1, 6);
        let a1 = gc_from_subset(&c, ints(&[3, 5, 6])).unwrap();
        let a2 = gc_from_subset(&c, ints(&[2, 6])).unwrap();
        let p = compose_product(&[a1.clone(), a2.clone()]).unwrap();
        assert!(validate_gc(&p).unwrap().holds);
        assert!(!is_relational(&p).unwrap().relational);
        assert_eq!(p.alpha(&Elem::ints(&[4, 3])).unwrap(), Elem::ints(&[5, 6]));
        let back = decompose_product(&p).unwrap();
        assert_eq!(back[0].gamma_image().unwrap(), a1.gamma_image().unwrap());
        assert_eq!(back[1].gamma_image().unwrap(), a2.gamma_image().unwrap());

        // a flattened product (same members, no component structure) also round-trips
        let flat = gc_from_subset(p.concrete(), p.abstract_lattice().enumerate().unwrap()).unwrap();
        assert!(!is_relational(&flat).unwrap().relational);
        let parts = decompose_product(&flat).unwrap();
        assert_eq!(parts[0].gamma_image().unwrap(), a1.gamma_image().unwrap());
    }

    #[test]
    fn identity_connections() {
        let sq = Lattice::power(&chain(1, 3), 2).unwrap();
        let id = GaloisConnection::identity(&sq);
        let v = validate_gc(&id).unwrap();
        assert!(v.holds && v.flags.disjunctive);
        assert!(id.is_identity());
        let parts = decompose_product(&id).unwrap();
        assert_eq!(parts.len(), 2);
        for p in &parts {
            assert_eq!(p.gamma_image().unwrap().len(), 3);
        }
        let p = compose_product(&vec![GaloisConnection::identity(&chain(1, 3)); 2]).unwrap();
        assert!(p.is_identity());
        assert_eq!(p.gamma_image().unwrap(), id.gamma_image().unwrap());
    }

    #[test]
    fn corrupted_alpha_breaks_adjunction() {
        let c = chain(1, 6);
        let gc = gc_from_subset(&c, ints(&[3, 5, 6])).unwrap();
        let mut table: BTreeMap<Elem, Elem> = c
            .enumerate()
            .unwrap()
            .into_iter()
            .map(|x| {
                let a = gc.alpha(&x).unwrap();
                (x, a)
            })
            .collect();
        let (x1, x4) = (Elem::int(1), Elem::int(4));
        let (v1, v4) = (table[&x1].clone(), table[&x4].clone());
        table.insert(x1, v4);
        table.insert(x4, v1);
        let bad = GaloisConnection::from_alpha_table(&c, gc.abstract_lattice(), table).unwrap();
        let v = validate_gc(&bad).unwrap();
        assert!(!v.holds);
        let adj = v
            .violations
            .iter()
            .find(|v| v.law == GcLaw::Adjunction)
            .unwrap();
        assert_eq!(adj.witness, vec![Elem::int(1), Elem::int(3)]);
    }

    #[test]
    fn principal_filters() {
        let c = chain(1, 6);
        assert!(is_principal_filter(&gc_from_subset(&c, ints(&[4, 5, 6])).unwrap()).unwrap());
        assert!(!is_principal_filter(&gc_from_subset(&c, ints(&[3, 5, 6])).unwrap()).unwrap());
        assert!(is_principal_filter(&GaloisConnection::identity(&c)).unwrap());
        let i = Lattice::interval(q(3, 2), q(5, 2)).unwrap();
        assert!(matches!(
            is_principal_filter(&ceil_abstraction(3, &i).unwrap()),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn ceil_operator() {
        assert_eq!(ceil_digits(&q(1001, 1000), 2), q(101, 100));
        assert_eq!(ceil_digits(&q(10001, 10000), 2), q(101, 100));
        assert_eq!(ceil_digits(&q(101, 100), 2), q(101, 100));
        assert_eq!(ceil_digits(&q(7, 3), 0), q(3, 1));
        assert_eq!(ceil_digits(&q(-7, 3), 0), q(-2, 1));

        let fine = Lattice::grid(q(1, 1), q(2, 1), q(1, 1000)).unwrap();
        let gc = ceil_abstraction(2, &fine).unwrap();
        assert_eq!(
            gc.alpha(&Elem::scalar(q(1001, 1000))).unwrap(),
            Elem::scalar(q(101, 100))
        );
        assert_eq!(gc.abstract_lattice().size(), Some(101));
        assert!(gc.closure_operator().laws().unwrap().hold());

        let coarse = Lattice::grid(q(1, 1), q(2, 1), q(1, 20)).unwrap();
        let id = ceil_abstraction(2, &coarse).unwrap();
        assert_eq!(id.gamma_image().unwrap().len(), 21);
        for x in coarse.enumerate().unwrap() {
            assert_eq!(id.alpha(&x).unwrap(), x);
        }

        let misaligned = Lattice::grid(q(1, 30), q(31, 30), q(1, 30)).unwrap();
        assert!(matches!(
            ceil_abstraction(1, &misaligned),
            Err(Error::IncompatibleStep(_))
        ));

        let i = Lattice::interval(q(3, 2), q(5, 2)).unwrap();
        let gc3 = ceil_abstraction(3, &i).unwrap();
        assert_eq!(
            gc3.alpha(&Elem::scalar(q(10669, 6000))).unwrap(),
            Elem::scalar(q(1779, 1000))
        );
        assert_eq!(gc3.abstract_lattice().size(), Some(1001));
    }

    #[test]
    fn powerset_liftings() {
        let c = chain(1, 6);
        let gc = gc_from_subset(&c, ints(&[3, 5, 6])).unwrap();
        let xs: ElemSet = ints(&[1, 4]).into_iter().collect();
        assert_eq!(
            alpha_s(&gc, &xs).unwrap(),
            ints(&[3, 5]).into_iter().collect()
        );
        let ys: ElemSet = ints(&[3, 6]).into_iter().collect();
        assert_eq!(gamma_s(&gc, &ys).unwrap(), ys);
        assert!(gamma_s(&gc, &ints(&[4]).into_iter().collect()).is_err());
    }

    proptest! {
        #[test]
        fn chain_abstractions_satisfy_laws(n in 1i64..=8, mask in any::<u8>()) {
            let c = chain(1, n);
            let members: Vec<Elem> = (1..=n)
                .filter(|&k| k == n || mask >> (k - 1) & 1 == 1)
                .map(Elem::int)
                .collect();
            let gc = gc_from_subset(&c, members).unwrap();
            let v = validate_gc(&gc).unwrap();
            prop_assert!(v.holds, "{:?}", v.violations);
            prop_assert_eq!(v.flags.is_insertion, Some(true));
        }

        #[test]
        fn ceil_closure_laws(n in 0u32..3, denom in 1i64..30) {
            let g = Lattice::grid(q(0, 1), q(2, 1), q(1, denom)).unwrap();
            let gc = ceil_abstraction(n, &g);
            if let Ok(gc) = gc {
                prop_assert!(gc.closure_operator().laws().unwrap().hold());
                prop_assert!(validate_gc(&gc).unwrap().holds);
            }
        }

        #[test]
        fn preorder_connection_on_sets(
            xs in proptest::collection::btree_set(1i64..=6, 1..4),
            ys in proptest::collection::btree_set(0usize..3, 1..3),
        ) {
            let c = chain(1, 6);
            let gc = gc_from_subset(&c, ints(&[3, 5, 6])).unwrap();
            let a = gc.abstract_lattice().clone();
            let members = a.enumerate().unwrap();
            let x: ElemSet = xs.into_iter().map(Elem::int).collect();
            let y: ElemSet = ys.into_iter().map(|k| members[k].clone()).collect();
            let ax = alpha_s(&gc, &x).unwrap();
            let gy = gamma_s(&gc, &y).unwrap();
            for rel in [SetRelation::Smyth, SetRelation::Hoare, SetRelation::EgliMilner] {
                let fx = extremal_membership(&c, &x).unwrap();
                let fy = extremal_membership(&a, &y).unwrap();
                if fx.fits(rel) && fy.fits(rel) {
                    prop_assert_eq!(
                        powerset_compare(rel, &a, &ax, &y).unwrap(),
                        powerset_compare(rel, &c, &x, &gy).unwrap()
                    );
                }
            }
        }
    }
}

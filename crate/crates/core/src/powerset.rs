//! Preorders on finite sets of lattice elements and the extremal set families.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Elem, ElemSet, Lattice};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SetRelation {
    /// `∀y∈Y ∃x∈X. x ≤ y`
    Smyth,
    /// `∀x∈X ∃y∈Y. x ≤ y`
    Hoare,
    /// Smyth and Hoare.
    EgliMilner,
    /// `∀x∈X ∀y∈Y. x∧y ∈ X and x∨y ∈ Y`
    Veinott,
}

impl SetRelation {
    pub const ALL: [SetRelation; 4] = [
        SetRelation::Smyth,
        SetRelation::Hoare,
        SetRelation::EgliMilner,
        SetRelation::Veinott,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SetRelation::Smyth => "smyth",
            SetRelation::Hoare => "hoare",
            SetRelation::EgliMilner => "egli-milner",
            SetRelation::Veinott => "veinott",
        }
    }
}

impl std::str::FromStr for SetRelation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "s" | "smyth" => Ok(SetRelation::Smyth),
            "h" | "hoare" => Ok(SetRelation::Hoare),
            "em" | "egli-milner" | "eglimilner" => Ok(SetRelation::EgliMilner),
            "v" | "veinott" => Ok(SetRelation::Veinott),
            other => Err(Error::Contract(format!("unknown set relation `{other}`"))),
        }
    }
}

impl std::fmt::Display for SetRelation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

fn check_all(l: &Lattice, xs: &ElemSet) -> Result<()> {
    xs.iter().try_for_each(|x| l.check(x))
}

/// Evaluates `X rel Y` by direct quantification.
pub fn powerset_compare(rel: SetRelation, l: &Lattice, x: &ElemSet, y: &ElemSet) -> Result<bool> {
    check_all(l, x)?;
    check_all(l, y)?;
    Ok(compare_unchecked(rel, l, x, y))
}

pub(crate) fn compare_unchecked(rel: SetRelation, l: &Lattice, x: &ElemSet, y: &ElemSet) -> bool {
    let smyth = || y.iter().all(|b| x.iter().any(|a| a.leq(b)));
    let hoare = || x.iter().all(|a| y.iter().any(|b| a.leq(b)));
    match rel {
        SetRelation::Smyth => smyth(),
        SetRelation::Hoare => hoare(),
        SetRelation::EgliMilner => smyth() && hoare(),
        SetRelation::Veinott => x.iter().all(|a| {
            y.iter()
                .all(|b| x.contains(&l.meet2(a, b)) && y.contains(&l.join2(a, b)))
        }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalFlags {
    /// `∧X ∈ X`
    pub has_meet: bool,
    /// `∨X ∈ X`
    pub has_join: bool,
    /// both of the above
    pub has_both: bool,
    /// closed under binary meets and joins
    pub sublattice: bool,
}

impl ExtremalFlags {
    /// The family a relation's fixed-point condition asks for: `℘^∧` for
    /// Smyth, `℘^∨` for Hoare, `℘^⋄` for Egli-Milner, sublattices for Veinott.
    pub fn fits(&self, rel: SetRelation) -> bool {
        match rel {
            SetRelation::Smyth => self.has_meet,
            SetRelation::Hoare => self.has_join,
            SetRelation::EgliMilner => self.has_both,
            SetRelation::Veinott => self.sublattice,
        }
    }
}

pub fn extremal_membership(l: &Lattice, x: &ElemSet) -> Result<ExtremalFlags> {
    if x.is_empty() {
        return Err(Error::Contract(
            "extremal membership of an empty set".into(),
        ));
    }
    check_all(l, x)?;
    Ok(extremal_unchecked(l, x))
}

pub(crate) fn extremal_unchecked(l: &Lattice, x: &ElemSet) -> ExtremalFlags {
    let meet = fold(l, x, Lattice::meet2);
    let join = fold(l, x, Lattice::join2);
    let has_meet = x.contains(&meet);
    let has_join = x.contains(&join);
    let sublattice = x.iter().all(|a| {
        x.iter()
            .all(|b| x.contains(&l.meet2(a, b)) && x.contains(&l.join2(a, b)))
    });
    ExtremalFlags {
        has_meet,
        has_join,
        has_both: has_meet && has_join,
        sublattice,
    }
}

fn fold(l: &Lattice, x: &ElemSet, op: fn(&Lattice, &Elem, &Elem) -> Elem) -> Elem {
    let mut it = x.iter();
    let first = it.next().expect("nonempty").clone();
    it.fold(first, |acc, e| op(l, &acc, e))
}

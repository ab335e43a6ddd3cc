//! Complete lattices of strategies.
//!
//! A [`Lattice`] is one of: a chain of integers, a finite grid of rationals,
//! a closed rational interval (not enumerable), a finite product of lattices,
//! or a meet-closed subset of another lattice. Every lattice order is the
//! componentwise numeric order on the flattened coordinates of an [`Elem`], so
//! a product of products is simply a longer coordinate tuple.
//!
//! Enumeration is lexicographic in the coordinates. Solver traces and
//! counterexample reports depend on this order.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A point of a lattice: a tuple of rational coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(Vec<Rational>);

pub type ElemSet = BTreeSet<Elem>;

impl Elem {
    pub fn new(coords: Vec<Rational>) -> Self {
        Elem(coords)
    }

    pub fn scalar(value: Rational) -> Self {
        Elem(vec![value])
    }

    pub fn int(value: i64) -> Self {
        Elem(vec![Rational::from_integer(value)])
    }

    pub fn ints(values: &[i64]) -> Self {
        Elem(values.iter().map(|&v| Rational::from_integer(v)).collect())
    }

    pub fn concat<'a>(parts: impl IntoIterator<Item = &'a Elem>) -> Self {
        Elem(
            parts
                .into_iter()
                .flat_map(|p| p.0.iter().cloned())
                .collect(),
        )
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn coord(&self, k: usize) -> &Rational {
        &self.0[k]
    }

    /// Componentwise `≤`. Valid for every lattice in this crate.
    pub fn leq(&self, other: &Elem) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn componentwise_min(&self, other: &Elem) -> Elem {
        Elem(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.min(b).clone())
                .collect(),
        )
    }

    pub fn componentwise_max(&self, other: &Elem) -> Elem {
        Elem(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.max(b).clone())
                .collect(),
        )
    }

    fn slice(&self, start: usize, end: usize) -> Elem {
        Elem(self.0[start..end].to_vec())
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Rational> for Elem {
    fn from(r: Rational) -> Self {
        Elem::scalar(r)
    }
}

#[derive(Clone, PartialEq, Eq)]
enum Kind {
    IntChain {
        lo: i64,
        hi: i64,
    },
    Grid {
        lo: Rational,
        hi: Rational,
        step: Rational,
        len: usize,
    },
    Interval {
        lo: Rational,
        hi: Rational,
    },
    Product {
        parts: Vec<Lattice>,
        offsets: Vec<usize>,
        arity: usize,
    },
    Subset {
        parent: Lattice,
        /// Sorted lexicographically, no duplicates.
        members: Vec<Elem>,
        join_closed: bool,
    },
}

/// A complete lattice. Cheap to clone; immutable after construction.
#[derive(Clone, PartialEq, Eq)]
pub struct Lattice(Arc<Kind>);

impl Lattice {
    /// The integers `lo..=hi`.
    pub fn int_chain(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidLattice(format!("empty chain [{lo}, {hi}]")));
        }
        Ok(Lattice(Arc::new(Kind::IntChain { lo, hi })))
    }

    /// `{lo, lo + step, …, hi}`; `(hi − lo) / step` must be a nonnegative integer.
    pub fn grid(lo: Rational, hi: Rational, step: Rational) -> Result<Self> {
        if step <= Rational::zero() {
            return Err(Error::InvalidLattice(format!(
                "grid step {step} must be positive"
            )));
        }
        if lo > hi {
            return Err(Error::InvalidLattice(format!("empty grid [{lo}, {hi}]")));
        }
        let count = (&hi - &lo) / &step;
        if !count.is_integer() {
            return Err(Error::InvalidLattice(format!(
                "({hi} - {lo}) / {step} is not an integer"
            )));
        }
        let len = count
            .to_i64()
            .and_then(|c| usize::try_from(c).ok())
            .and_then(|c| c.checked_add(1))
            .ok_or_else(|| Error::InvalidLattice("grid too large".into()))?;
        Ok(Lattice(Arc::new(Kind::Grid { lo, hi, step, len })))
    }

    /// The closed rational interval `[lo, hi]`. Not enumerable.
    pub fn interval(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidLattice(format!(
                "empty interval [{lo}, {hi}]"
            )));
        }
        Ok(Lattice(Arc::new(Kind::Interval { lo, hi })))
    }

    pub fn product(parts: Vec<Lattice>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidLattice("product of no lattices".into()));
        }
        let mut offsets = Vec::with_capacity(parts.len() + 1);
        let mut arity = 0;
        for p in &parts {
            offsets.push(arity);
            arity += p.arity();
        }
        offsets.push(arity);
        Ok(Lattice(Arc::new(Kind::Product {
            parts,
            offsets,
            arity,
        })))
    }

    /// `n`-fold power `L × ⋯ × L`.
    pub fn power(base: &Lattice, n: usize) -> Result<Self> {
        Lattice::product(vec![base.clone(); n])
    }

    /// A meet-closed subset of `parent` containing the join of its members.
    ///
    /// Meets are inherited from `parent`; joins are inherited when the subset
    /// is also join-closed and otherwise rounded up to the least member above.
    pub fn subset(parent: &Lattice, members: impl IntoIterator<Item = Elem>) -> Result<Self> {
        let members: Vec<Elem> = members
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if members.is_empty() {
            return Err(Error::InvalidLattice("empty subset".into()));
        }
        for m in &members {
            parent.check(m)?;
        }
        let mut join_closed = true;
        if !parent.is_chain() {
            for (k, a) in members.iter().enumerate() {
                for b in &members[k + 1..] {
                    let m = parent.meet2(a, b);
                    if members.binary_search(&m).is_err() {
                        return Err(Error::NotMeetClosed {
                            left: a.clone(),
                            right: b.clone(),
                            meet: m,
                        });
                    }
                    if join_closed && members.binary_search(&parent.join2(a, b)).is_err() {
                        join_closed = false;
                    }
                }
            }
        }
        let mut top = members[0].clone();
        for m in &members[1..] {
            top = parent.join2(&top, m);
        }
        if members.binary_search(&top).is_err() {
            return Err(Error::InvalidLattice(format!(
                "subset has no greatest element (join {top} is missing)"
            )));
        }
        Ok(Lattice(Arc::new(Kind::Subset {
            parent: parent.clone(),
            members,
            join_closed,
        })))
    }

    /// Number of scalar coordinates of each element.
    pub fn arity(&self) -> usize {
        match &*self.0 {
            Kind::IntChain { .. } | Kind::Grid { .. } | Kind::Interval { .. } => 1,
            Kind::Product { arity, .. } => *arity,
            Kind::Subset { parent, .. } => parent.arity(),
        }
    }

    /// True for the totally ordered scalar lattices and subsets of them.
    pub fn is_chain(&self) -> bool {
        match &*self.0 {
            Kind::IntChain { .. } | Kind::Grid { .. } | Kind::Interval { .. } => true,
            Kind::Product { parts, .. } => {
                parts.iter().filter(|p| !p.is_singleton()).count() <= 1
                    && parts.iter().all(|p| p.is_chain())
            }
            Kind::Subset { parent, .. } => parent.is_chain(),
        }
    }

    fn is_singleton(&self) -> bool {
        self.size() == Some(1)
    }

    pub fn is_product(&self) -> bool {
        matches!(&*self.0, Kind::Product { .. })
    }

    pub fn is_subset(&self) -> bool {
        matches!(&*self.0, Kind::Subset { .. })
    }

    /// True when every subset join agrees with the parent's join (always true
    /// for lattices that are not subsets).
    pub fn is_join_closed(&self) -> bool {
        match &*self.0 {
            Kind::Subset { join_closed, .. } => *join_closed,
            Kind::Product { parts, .. } => parts.iter().all(|p| p.is_join_closed()),
            _ => true,
        }
    }

    pub fn parent(&self) -> Option<&Lattice> {
        match &*self.0 {
            Kind::Subset { parent, .. } => Some(parent),
            _ => None,
        }
    }

    pub fn subset_members(&self) -> Option<&[Elem]> {
        match &*self.0 {
            Kind::Subset { members, .. } => Some(members),
            _ => None,
        }
    }

    /// Product components; a non-product lattice is its own single component.
    pub fn components(&self) -> Vec<Lattice> {
        match &*self.0 {
            Kind::Product { parts, .. } => parts.clone(),
            _ => vec![self.clone()],
        }
    }

    pub fn num_components(&self) -> usize {
        match &*self.0 {
            Kind::Product { parts, .. } => parts.len(),
            _ => 1,
        }
    }

    pub fn component(&self, i: usize) -> Result<Lattice> {
        match &*self.0 {
            Kind::Product { parts, .. } => parts.get(i).cloned().ok_or(Error::IndexOutOfRange {
                index: i,
                len: parts.len(),
            }),
            _ if i == 0 => Ok(self.clone()),
            _ => Err(Error::IndexOutOfRange { index: i, len: 1 }),
        }
    }

    pub fn size(&self) -> Option<usize> {
        match &*self.0 {
            Kind::IntChain { lo, hi } => usize::try_from(hi - lo).ok().map(|n| n + 1),
            Kind::Grid { len, .. } => Some(*len),
            Kind::Interval { lo, hi } => (lo == hi).then_some(1),
            Kind::Product { parts, .. } => parts
                .iter()
                .try_fold(1usize, |acc, p| p.size().and_then(|n| acc.checked_mul(n))),
            Kind::Subset { members, .. } => Some(members.len()),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.size().is_some()
    }

    pub fn contains(&self, x: &Elem) -> bool {
        if x.arity() != self.arity() {
            return false;
        }
        match &*self.0 {
            Kind::IntChain { lo, hi } => {
                let c = x.coord(0);
                c.is_integer()
                    && c >= &Rational::from_integer(*lo)
                    && c <= &Rational::from_integer(*hi)
            }
            Kind::Grid { lo, hi, step, .. } => {
                let c = x.coord(0);
                c >= lo && c <= hi && ((c - lo) / step).is_integer()
            }
            Kind::Interval { lo, hi } => {
                let c = x.coord(0);
                c >= lo && c <= hi
            }
            Kind::Product { parts, offsets, .. } => parts
                .iter()
                .enumerate()
                .all(|(k, p)| p.contains(&x.slice(offsets[k], offsets[k + 1]))),
            Kind::Subset { members, .. } => members.binary_search(x).is_ok(),
        }
    }

    /// Ok when `x` is an element of this lattice.
    pub fn check(&self, x: &Elem) -> Result<()> {
        if x.arity() != self.arity() {
            return Err(Error::DimensionMismatch {
                expected: self.arity(),
                found: x.arity(),
            });
        }
        if !self.contains(x) {
            return Err(Error::NotAMember(x.clone()));
        }
        Ok(())
    }

    pub fn leq(&self, x: &Elem, y: &Elem) -> Result<bool> {
        self.check(x)?;
        self.check(y)?;
        Ok(x.leq(y))
    }

    pub fn bot(&self) -> Elem {
        match &*self.0 {
            Kind::IntChain { lo, .. } => Elem::int(*lo),
            Kind::Grid { lo, .. } | Kind::Interval { lo, .. } => Elem::scalar(lo.clone()),
            Kind::Product { parts, .. } => {
                let bots: Vec<Elem> = parts.iter().map(Lattice::bot).collect();
                Elem::concat(&bots)
            }
            Kind::Subset {
                parent, members, ..
            } => members[1..]
                .iter()
                .fold(members[0].clone(), |acc, m| parent.meet2(&acc, m)),
        }
    }

    pub fn top(&self) -> Elem {
        match &*self.0 {
            Kind::IntChain { hi, .. } => Elem::int(*hi),
            Kind::Grid { hi, .. } | Kind::Interval { hi, .. } => Elem::scalar(hi.clone()),
            Kind::Product { parts, .. } => {
                let tops: Vec<Elem> = parts.iter().map(Lattice::top).collect();
                Elem::concat(&tops)
            }
            Kind::Subset {
                parent, members, ..
            } => members[1..]
                .iter()
                .fold(members[0].clone(), |acc, m| parent.join2(&acc, m)),
        }
    }

    /// Binary meet of two members (unchecked).
    pub fn meet2(&self, x: &Elem, y: &Elem) -> Elem {
        match &*self.0 {
            Kind::IntChain { .. } | Kind::Grid { .. } | Kind::Interval { .. } => {
                x.componentwise_min(y)
            }
            Kind::Product { parts, offsets, .. } => {
                let pieces: Vec<Elem> = parts
                    .iter()
                    .enumerate()
                    .map(|(k, p)| {
                        p.meet2(
                            &x.slice(offsets[k], offsets[k + 1]),
                            &y.slice(offsets[k], offsets[k + 1]),
                        )
                    })
                    .collect();
                Elem::concat(&pieces)
            }
            Kind::Subset { parent, .. } => parent.meet2(x, y),
        }
    }

    /// Binary join of two members (unchecked).
    pub fn join2(&self, x: &Elem, y: &Elem) -> Elem {
        match &*self.0 {
            Kind::IntChain { .. } | Kind::Grid { .. } | Kind::Interval { .. } => {
                x.componentwise_max(y)
            }
            Kind::Product { parts, offsets, .. } => {
                let pieces: Vec<Elem> = parts
                    .iter()
                    .enumerate()
                    .map(|(k, p)| {
                        p.join2(
                            &x.slice(offsets[k], offsets[k + 1]),
                            &y.slice(offsets[k], offsets[k + 1]),
                        )
                    })
                    .collect();
                Elem::concat(&pieces)
            }
            Kind::Subset {
                parent,
                join_closed,
                ..
            } => {
                let j = parent.join2(x, y);
                if *join_closed {
                    j
                } else {
                    self.closure(&j).expect("subset contains its top")
                }
            }
        }
    }

    /// Greatest lower bound of a nonempty set of members.
    pub fn meet<'a>(&self, xs: impl IntoIterator<Item = &'a Elem>) -> Result<Elem> {
        self.fold_checked(xs, Lattice::meet2, "meet of an empty set")
    }

    /// Least upper bound of a nonempty set of members.
    pub fn join<'a>(&self, xs: impl IntoIterator<Item = &'a Elem>) -> Result<Elem> {
        self.fold_checked(xs, Lattice::join2, "join of an empty set")
    }

    fn fold_checked<'a>(
        &self,
        xs: impl IntoIterator<Item = &'a Elem>,
        op: fn(&Lattice, &Elem, &Elem) -> Elem,
        empty: &str,
    ) -> Result<Elem> {
        let mut acc: Option<Elem> = None;
        for x in xs {
            self.check(x)?;
            acc = Some(match acc {
                None => x.clone(),
                Some(a) => op(self, &a, x),
            });
        }
        acc.ok_or_else(|| Error::Contract(empty.into()))
    }

    /// The least element of this lattice above `c`, where `c` is a point of the
    /// ambient coordinate space (for a subset, a point of its parent). `None`
    /// when nothing in the lattice lies above `c`.
    pub fn closure(&self, c: &Elem) -> Option<Elem> {
        if c.arity() != self.arity() {
            return None;
        }
        match &*self.0 {
            Kind::IntChain { lo, hi } => {
                let v = c.coord(0).ceil().max(Rational::from_integer(*lo));
                (v <= Rational::from_integer(*hi)).then(|| Elem::scalar(v))
            }
            Kind::Grid { lo, hi, step, .. } => {
                let v = if c.coord(0) <= lo {
                    lo.clone()
                } else {
                    lo + ((c.coord(0) - lo) / step).ceil() * step
                };
                (&v <= hi).then(|| Elem::scalar(v))
            }
            Kind::Interval { lo, hi } => {
                let v = c.coord(0).max(lo).clone();
                (&v <= hi).then(|| Elem::scalar(v))
            }
            Kind::Product { parts, offsets, .. } => {
                let mut pieces = Vec::with_capacity(parts.len());
                for (k, p) in parts.iter().enumerate() {
                    pieces.push(p.closure(&c.slice(offsets[k], offsets[k + 1]))?);
                }
                Some(Elem::concat(&pieces))
            }
            Kind::Subset {
                parent, members, ..
            } => {
                if parent.is_chain() {
                    let idx = members.partition_point(|m| !c.leq(m));
                    return members.get(idx).cloned();
                }
                let mut acc: Option<Elem> = None;
                for m in members.iter().filter(|m| c.leq(m)) {
                    acc = Some(match acc {
                        None => m.clone(),
                        Some(a) => parent.meet2(&a, m),
                    });
                }
                acc
            }
        }
    }

    /// Every element exactly once, in lexicographic coordinate order.
    pub fn enumerate(&self) -> Result<Vec<Elem>> {
        match &*self.0 {
            Kind::IntChain { lo, hi } => Ok((*lo..=*hi).map(Elem::int).collect()),
            Kind::Grid { lo, step, len, .. } => Ok((0..*len)
                .map(|k| Elem::scalar(lo + step * (k as i64)))
                .collect()),
            Kind::Interval { lo, hi } => {
                if lo == hi {
                    Ok(vec![Elem::scalar(lo.clone())])
                } else {
                    Err(Error::Unsupported(format!(
                        "cannot enumerate the interval [{lo}, {hi}]"
                    )))
                }
            }
            Kind::Product { parts, .. } => {
                let mut out = vec![Elem::new(Vec::new())];
                for p in parts {
                    let values = p.enumerate()?;
                    let mut next = Vec::with_capacity(out.len() * values.len());
                    for prefix in &out {
                        for v in &values {
                            next.push(Elem::concat([prefix, v]));
                        }
                    }
                    out = next;
                }
                Ok(out)
            }
            Kind::Subset { members, .. } => Ok(members.clone()),
        }
    }

    /// Covering pairs `(i, j)` of the enumeration: `x_i < x_j` with nothing
    /// strictly between. On a finite lattice every `x ≤ y` is reached by a
    /// chain of covers.
    pub fn cover_pairs(&self) -> Result<Vec<(usize, usize)>> {
        match &*self.0 {
            Kind::IntChain { .. } | Kind::Grid { .. } | Kind::Interval { .. } => {
                let n = self
                    .size()
                    .ok_or_else(|| Error::Unsupported("cover pairs of an interval".into()))?;
                Ok((1..n).map(|k| (k - 1, k)).collect())
            }
            Kind::Product { parts, .. } => {
                let sizes: Vec<usize> = parts
                    .iter()
                    .map(|p| {
                        p.size()
                            .ok_or_else(|| Error::Unsupported("infinite component".into()))
                    })
                    .collect::<Result<_>>()?;
                let total: usize = sizes.iter().product();
                let mut strides = vec![1usize; parts.len()];
                for k in (0..parts.len().saturating_sub(1)).rev() {
                    strides[k] = strides[k + 1] * sizes[k + 1];
                }
                let mut out = Vec::new();
                for (k, p) in parts.iter().enumerate() {
                    for (a, b) in p.cover_pairs()? {
                        for idx in 0..total {
                            if (idx / strides[k]) % sizes[k] == a {
                                out.push((idx, idx + (b - a) * strides[k]));
                            }
                        }
                    }
                }
                out.sort_unstable();
                Ok(out)
            }
            Kind::Subset {
                parent, members, ..
            } => {
                let n = members.len();
                if parent.is_chain() {
                    return Ok((1..n).map(|k| (k - 1, k)).collect());
                }
                let lt = |a: usize, b: usize| a != b && members[a].leq(&members[b]);
                let mut out = Vec::new();
                for a in 0..n {
                    for b in 0..n {
                        if lt(a, b) && !(0..n).any(|z| lt(a, z) && lt(z, b)) {
                            out.push((a, b));
                        }
                    }
                }
                Ok(out)
            }
        }
    }

    /// Splits a product element into its per-component pieces.
    pub fn split(&self, x: &Elem) -> Vec<Elem> {
        match &*self.0 {
            Kind::Product { offsets, parts, .. } => (0..parts.len())
                .map(|k| x.slice(offsets[k], offsets[k + 1]))
                .collect(),
            _ => vec![x.clone()],
        }
    }

    /// Component `i` of a product element.
    pub fn project(&self, x: &Elem, i: usize) -> Result<Elem> {
        match &*self.0 {
            Kind::Product { offsets, parts, .. } => {
                if i >= parts.len() {
                    return Err(Error::IndexOutOfRange {
                        index: i,
                        len: parts.len(),
                    });
                }
                Ok(x.slice(offsets[i], offsets[i + 1]))
            }
            _ if i == 0 => Ok(x.clone()),
            _ => Err(Error::IndexOutOfRange { index: i, len: 1 }),
        }
    }

    /// `L_{-i}`: the product with component `i` (0-based) removed. When only one
    /// component remains it is returned directly.
    pub fn project_minus_i(&self, i: usize) -> Result<Lattice> {
        let parts = match &*self.0 {
            Kind::Product { parts, .. } => parts,
            _ => {
                return Err(Error::Unsupported(
                    "project_minus_i on a non-product lattice".into(),
                ))
            }
        };
        if i >= parts.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: parts.len(),
            });
        }
        let rest: Vec<Lattice> = parts
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, p)| p.clone())
            .collect();
        match rest.len() {
            0 => Err(Error::Unsupported(
                "a one-component product has no opponents".into(),
            )),
            1 => Ok(rest.into_iter().next().expect("one component")),
            _ => Lattice::product(rest),
        }
    }

    /// `x_{-i}`: the coordinates of every component except `i`.
    pub fn minus_i(&self, x: &Elem, i: usize) -> Result<Elem> {
        let pieces = self.split(x);
        if i >= pieces.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: pieces.len(),
            });
        }
        Ok(Elem::concat(
            pieces
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, p)| p),
        ))
    }

    /// Reinserts `x_i` at component `i` of `s_minus_i`.
    pub fn splice(&self, s_minus_i: &Elem, i: usize, x_i: &Elem) -> Result<Elem> {
        let (parts, offsets, arity) = match &*self.0 {
            Kind::Product {
                parts,
                offsets,
                arity,
            } => (parts, offsets, *arity),
            _ => return Err(Error::Unsupported("splice on a non-product lattice".into())),
        };
        if i >= parts.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: parts.len(),
            });
        }
        let width = offsets[i + 1] - offsets[i];
        if x_i.arity() != width {
            return Err(Error::DimensionMismatch {
                expected: width,
                found: x_i.arity(),
            });
        }
        if s_minus_i.arity() != arity - width {
            return Err(Error::DimensionMismatch {
                expected: arity - width,
                found: s_minus_i.arity(),
            });
        }
        let mut coords = Vec::with_capacity(arity);
        coords.extend_from_slice(&s_minus_i.coords()[..offsets[i]]);
        coords.extend_from_slice(x_i.coords());
        coords.extend_from_slice(&s_minus_i.coords()[offsets[i]..]);
        Ok(Elem::new(coords))
    }
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            Kind::IntChain { lo, hi } => write!(f, "[{lo}..{hi}]"),
            Kind::Grid { lo, hi, step, .. } => write!(f, "[{lo}..{hi} step {step}]"),
            Kind::Interval { lo, hi } => write!(f, "[{lo}, {hi}]"),
            Kind::Product { parts, .. } => {
                for (k, p) in parts.iter().enumerate() {
                    if k > 0 {
                        write!(f, " × ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
            Kind::Subset { members, .. } => {
                write!(f, "{{")?;
                for (k, m) in members.iter().enumerate() {
                    if k > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{m}")?;
                }
                write!(f, "}}")
            }
        }
    }
}

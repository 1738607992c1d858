//! Type-determining sets.
//!
//! For `Q ⊆ L`:
//!
//! * `[Q]` is the set of joins of centrally orthogonal families drawn from
//!   `Q`, the empty family contributing `0`;
//! * `Q^γ = {q ∧ c : q ∈ Q, c central}` and `Q^↓` is the down-closure;
//! * `Q` is TD when `[Q] ⊆ Q` and `Q^γ ⊆ Q`, STD when `[Q] ⊆ Q` and
//!   `Q^↓ ⊆ Q`.
//!
//! The type cover `c_Q` is the largest element of `γ(Q)`.

use std::collections::VecDeque;

use serde::Serialize;

use crate::central::{center, central_cover, is_central};
use crate::equivalence::projectivity_classes;
use crate::error::{Error, Result};
use crate::lattice::{Elem, Interval, Oml, ProjectionSet};

fn check_universe(l: &Oml, q: &ProjectionSet) -> Result<()> {
    if q.universe() != l.len() {
        return Err(Error::Input(format!(
            "set over {} elements used with a lattice of {}",
            q.universe(),
            l.len()
        )));
    }
    Ok(())
}

/// `[Q]`.
///
/// Since `γ` preserves joins, a centrally orthogonal family with join `j`
/// can be extended by `x` exactly when `γx ⊥ γj`, so a search over
/// reachable joins suffices.
pub fn closure_centorth_sups(l: &Oml, q: &ProjectionSet) -> ProjectionSet {
    let members: Vec<Elem> = q.iter().collect();
    let mut seen = ProjectionSet::empty(l.len());
    let mut queue = VecDeque::from([l.bottom()]);
    seen.insert(l.bottom());
    while let Some(j) = queue.pop_front() {
        let gj = central_cover(l, j);
        for &x in &members {
            if l.is_orthogonal(central_cover(l, x), gj) {
                let next = l.join(j, x);
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
    }
    seen
}

/// `Q^γ`.
pub fn gamma_restrict(l: &Oml, q: &ProjectionSet) -> ProjectionSet {
    let cs = center(l).to_vec();
    ProjectionSet::from_elems(
        l.len(),
        q.iter().flat_map(|x| cs.iter().map(move |&c| l.meet(x, c))),
    )
}

/// `Q^↓`.
pub fn down_closure(l: &Oml, q: &ProjectionSet) -> ProjectionSet {
    ProjectionSet::filter(l, |p| q.iter().any(|x| l.leq(p, x)))
}

/// `[Q^γ]`, the smallest TD set containing `Q`.
pub fn td_closure(l: &Oml, q: &ProjectionSet) -> ProjectionSet {
    closure_centorth_sups(l, &gamma_restrict(l, q))
}

/// `[Q^↓]`, the smallest STD set containing `Q`.
pub fn std_closure(l: &Oml, q: &ProjectionSet) -> ProjectionSet {
    closure_centorth_sups(l, &down_closure(l, q))
}

/// `γ(Q) = {γq : q ∈ Q}`.
pub fn gamma_image(l: &Oml, q: &ProjectionSet) -> ProjectionSet {
    ProjectionSet::from_elems(l.len(), q.iter().map(|x| central_cover(l, x)))
}

/// `Q ∩ [0, p]` in the coordinates of the interval.
pub fn relativize(q: &ProjectionSet, iv: &Interval) -> ProjectionSet {
    ProjectionSet::from_elems(
        iv.oml.len(),
        iv.parent_elements()
            .iter()
            .enumerate()
            .filter(|(_, &x)| q.contains(x))
            .map(|(i, _)| Elem(i)),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SetClassification {
    pub is_td: bool,
    pub is_std: bool,
    pub is_projective: bool,
    pub is_order_ideal: bool,
    pub is_oml_ideal: bool,
    pub is_p_ideal: bool,
}

/// `0 ∈ Q` and `Q` is closed under joins of centrally orthogonal pairs,
/// which by induction covers all finite centrally orthogonal families.
fn sups_closed(l: &Oml, q: &ProjectionSet) -> bool {
    q.contains(l.bottom())
        && q.iter().all(|x| {
            q.iter().all(|y| {
                !l.is_orthogonal(central_cover(l, x), central_cover(l, y)) || q.contains(l.join(x, y))
            })
        })
}

fn gamma_closed(l: &Oml, q: &ProjectionSet) -> bool {
    let cs = center(l).to_vec();
    q.iter().all(|x| cs.iter().all(|&c| q.contains(l.meet(x, c))))
}

fn down_closed(l: &Oml, q: &ProjectionSet) -> bool {
    q.iter().all(|x| l.elements().all(|p| !l.leq(p, x) || q.contains(p)))
}

fn projective(l: &Oml, q: &ProjectionSet) -> bool {
    let part = projectivity_classes(l);
    q.iter().all(|x| part.members(x).iter().all(|&p| q.contains(p)))
}

/// Evaluates each property from its definition, independently of the
/// closure operators.
pub fn classify_set(l: &Oml, q: &ProjectionSet) -> Result<SetClassification> {
    check_universe(l, q)?;
    let sups = sups_closed(l, q);
    let is_order_ideal = !q.is_empty() && down_closed(l, q);
    let is_oml_ideal =
        is_order_ideal && q.iter().all(|x| q.iter().all(|y| q.contains(l.join(x, y))));
    let is_projective = projective(l, q);
    Ok(SetClassification {
        is_td: sups && gamma_closed(l, q),
        is_std: sups && down_closed(l, q),
        is_projective,
        is_order_ideal,
        is_oml_ideal,
        is_p_ideal: is_oml_ideal && is_projective,
    })
}

fn require_td(l: &Oml, q: &ProjectionSet, what: &str) -> Result<()> {
    check_universe(l, q)?;
    if !sups_closed(l, q) {
        return Err(Error::Precondition(format!(
            "{what} is not TD: [{what}] ⊄ {what} (not closed under centrally orthogonal suprema)"
        )));
    }
    if !gamma_closed(l, q) {
        return Err(Error::Precondition(format!(
            "{what} is not TD: {what}^γ ⊄ {what} (not closed under meets with central elements)"
        )));
    }
    Ok(())
}

/// Fails with a precondition error unless `q` is TD.
pub fn ensure_td(l: &Oml, q: &ProjectionSet, what: &str) -> Result<()> {
    require_td(l, q, what)
}

fn largest(l: &Oml, s: &ProjectionSet, what: &str) -> Result<Elem> {
    let top = l.join_all(s.iter());
    if s.contains(top) {
        Ok(top)
    } else {
        Err(Error::Inconsistent(format!("{what} has no largest element")))
    }
}

/// `c_Q`.
pub fn type_cover(l: &Oml, q: &ProjectionSet) -> Result<Elem> {
    require_td(l, q, "Q")?;
    largest(l, &gamma_image(l, q), "γ(Q)")
}

/// `c_{Q∩C}`, the largest central member of `Q`.
pub fn restricted_type_cover(l: &Oml, q: &ProjectionSet) -> Result<Elem> {
    require_td(l, q, "Q")?;
    largest(l, &q.intersection(center(l)), "Q ∩ C")
}

pub fn is_faithful(l: &Oml, f: Elem) -> bool {
    central_cover(l, f) == l.top()
}

/// Is `p` the join of a pairwise orthogonal subfamily of `q`?
fn orthogonal_join(l: &Oml, members: &[Elem], p: Elem) -> bool {
    let below: Vec<Elem> = members
        .iter()
        .copied()
        .filter(|&x| x != l.bottom() && l.leq(x, p))
        .collect();

    // peel off maximal members under the residual
    let mut j = l.bottom();
    loop {
        if j == p {
            return true;
        }
        let residual = l.meet(p, l.ortho(j));
        let next = below
            .iter()
            .copied()
            .filter(|&x| l.leq(x, residual))
            .max_by_key(|&x| l.down_set(x).len());
        match next {
            Some(x) => j = l.join(j, x),
            None => break,
        }
    }

    // a family stays pairwise orthogonal exactly when each new member is
    // orthogonal to the join so far
    let mut seen = ProjectionSet::empty(l.len());
    seen.insert(l.bottom());
    let mut queue = VecDeque::from([l.bottom()]);
    while let Some(j) = queue.pop_front() {
        if j == p {
            return true;
        }
        for &x in &below {
            if l.is_orthogonal(x, j) {
                let next = l.join(j, x);
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
    }
    false
}

/// Every `p ≤ c` is the join of a pairwise orthogonal subfamily of `Q`.
pub fn is_orthodense(l: &Oml, q: &ProjectionSet, c: Elem) -> Result<bool> {
    check_universe(l, q)?;
    l.check(c)?;
    if !is_central(l, c) {
        return Err(Error::Precondition(format!("{} is not central", l.label(c))));
    }
    let members: Vec<Elem> = q.iter().collect();
    Ok(l.elements()
        .filter(|&p| l.leq(p, c))
        .all(|p| orthogonal_join(l, &members, p)))
}

/// For every central `d` with `p ∧ d ≠ 0`, `Q ∩ [0, p ∧ d] ≠ {0}`.
pub fn same_cover_condition(l: &Oml, q: &ProjectionSet, p: Elem) -> bool {
    center(l).iter().all(|d| {
        let pd = l.meet(p, d);
        pd == l.bottom() || q.iter().any(|x| x != l.bottom() && l.leq(x, pd))
    })
}

/// A nonzero `q ∈ Q ∩ [0, p]` with `γq = γp`, if one exists.
///
/// The join of a maximal centrally orthogonal family in `Q ∩ [0, p]` lies
/// in `Q`; if its cover falls short of `γp`, the central gap between them
/// witnesses that no such `q` exists.
pub fn faithful_q_with_same_cover(l: &Oml, q: &ProjectionSet, p: Elem) -> Result<Option<Elem>> {
    l.check(p)?;
    if p == l.bottom() {
        return Err(Error::Precondition("p must be nonzero".into()));
    }
    require_td(l, q, "Q")?;
    let mut j = l.bottom();
    for x in q.iter().filter(|&x| x != l.bottom() && l.leq(x, p)) {
        if l.is_orthogonal(central_cover(l, x), central_cover(l, j)) {
            j = l.join(j, x);
        }
    }
    debug_assert!(q.contains(j));
    if j != l.bottom() && central_cover(l, j) == central_cover(l, p) {
        Ok(Some(j))
    } else {
        Ok(None)
    }
}

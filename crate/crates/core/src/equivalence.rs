//! Complements, perspectivity and projectivity.
//!
//! At lattice level the equivalence `p ∼ q` of projections is projectivity,
//! the transitive closure of perspectivity, so everything here is computed
//! from complement sets.

use serde::Serialize;

use crate::lattice::{Elem, Oml, ProjectionSet};

/// Partition of a lattice into projectivity classes. Classes are numbered
/// in order of their smallest element.
#[derive(Clone, Debug, Serialize)]
pub struct EquivalencePartition {
    pub class_of: Vec<usize>,
    pub classes: Vec<Vec<Elem>>,
}

impl EquivalencePartition {
    pub fn class(&self, p: Elem) -> usize {
        self.class_of[p.0]
    }

    pub fn members(&self, p: Elem) -> &[Elem] {
        &self.classes[self.class_of[p.0]]
    }

    pub fn same(&self, p: Elem, q: Elem) -> bool {
        self.class_of[p.0] == self.class_of[q.0]
    }
}

fn complement_table(l: &Oml) -> &[ProjectionSet] {
    l.cache.complements.get_or_init(|| {
        l.elements()
            .map(|p| {
                ProjectionSet::filter(l, |x| l.join(p, x) == l.top() && l.meet(p, x) == l.bottom())
            })
            .collect()
    })
}

/// `{x : p ∨ x = 1, p ∧ x = 0}`.
pub fn complements(l: &Oml, p: Elem) -> &ProjectionSet {
    &complement_table(l)[p.0]
}

/// Perspective: the two elements share a complement.
pub fn are_perspective(l: &Oml, p: Elem, q: Elem) -> bool {
    let t = complement_table(l);
    !t[p.0].is_disjoint(&t[q.0])
}

/// Perspectivity inside the interval `[0, r]`; `p, q ≤ r` is assumed.
pub fn are_perspective_in(l: &Oml, r: Elem, p: Elem, q: Elem) -> bool {
    l.elements().any(|x| {
        l.leq(x, r)
            && l.join(p, x) == r
            && l.meet(p, x) == l.bottom()
            && l.join(q, x) == r
            && l.meet(q, x) == l.bottom()
    })
}

/// Perspective inside `[0, p ∨ q]`.
pub fn are_strongly_perspective(l: &Oml, p: Elem, q: Elem) -> bool {
    are_perspective_in(l, l.join(p, q), p, q)
}

pub fn projectivity_classes(l: &Oml) -> &EquivalencePartition {
    l.cache.classes.get_or_init(|| {
        let n = l.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn root(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for p in l.elements() {
            for q in l.elements().skip(p.0 + 1) {
                if are_perspective(l, p, q) {
                    let (a, b) = (root(&mut parent, p.0), root(&mut parent, q.0));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<Elem>> = Vec::new();
        for p in 0..n {
            let r = root(&mut parent, p);
            if class_of[r] == usize::MAX {
                class_of[r] = classes.len();
                classes.push(Vec::new());
            }
            class_of[p] = class_of[r];
            classes[class_of[p]].push(Elem(p));
        }
        EquivalencePartition { class_of, classes }
    })
}

pub fn are_projective(l: &Oml, p: Elem, q: Elem) -> bool {
    projectivity_classes(l).same(p, q)
}

/// `p ⪯ q`: `p` is projective to some `q₁ ≤ q`.
pub fn is_subequivalent(l: &Oml, p: Elem, q: Elem) -> bool {
    let part = projectivity_classes(l);
    part.members(p).iter().any(|&q1| l.leq(q1, q))
}

/// Nonzero `p₁ ≤ p` and `q₁ ≤ q` with `p₁ ∼ q₁` exist.
pub fn are_related(l: &Oml, p: Elem, q: Elem) -> bool {
    let part = projectivity_classes(l);
    let mut below_q = vec![false; part.classes.len()];
    for q1 in l.elements().filter(|&x| x != l.bottom() && l.leq(x, q)) {
        below_q[part.class(q1)] = true;
    }
    l.elements()
        .filter(|&x| x != l.bottom() && l.leq(x, p))
        .any(|p1| below_q[part.class(p1)])
}

/// Unrelated to its own orthocomplement.
pub fn is_invariant(l: &Oml, h: Elem) -> bool {
    !are_related(l, h, l.ortho(h))
}

/// Every perspective pair is strongly perspective.
pub fn perspective_implies_strong(l: &Oml) -> bool {
    l.elements().all(|p| {
        l.elements()
            .skip(p.0)
            .all(|q| !are_perspective(l, p, q) || are_strongly_perspective(l, p, q))
    })
}

/// No `p < q` with `p` perspective to `q`.
pub fn no_perspective_proper_subelement(l: &Oml) -> bool {
    l.elements()
        .all(|p| l.elements().all(|q| !(l.lt(p, q) && are_perspective(l, p, q))))
}

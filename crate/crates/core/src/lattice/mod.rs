//! Finite orthomodular lattices.
//!
//! An [`Oml`] is stored as its full order relation plus precomputed meet and
//! join tables. Elements are plain indices ([`Elem`]); bottom and top are
//! discovered from the order, never assumed to sit at fixed positions.
//! Construction always goes through [`validate_oml`], so every `Oml` value
//! satisfies the lattice, orthocomplementation and orthomodular axioms.

mod build;
pub mod pasting;
pub mod catalog;
pub mod io;
mod set;
mod validate;

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};

pub use build::{boolean, direct_product, mo, o6, Interval};
pub use set::ProjectionSet;
pub use validate::{validate_oml, Axiom, Failure, RawOml, ValidationReport};

/// Index of a lattice element. Only meaningful relative to one [`Oml`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Elem(pub usize);

impl Elem {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Lazily computed derived structure, shared by the analysis modules.
#[derive(Default)]
pub(crate) struct Cache {
    pub center: OnceLock<ProjectionSet>,
    pub gamma: OnceLock<Vec<Elem>>,
    pub complements: OnceLock<Vec<ProjectionSet>>,
    pub classes: OnceLock<crate::equivalence::EquivalencePartition>,
    pub class_table: OnceLock<crate::classes::ClassTable>,
}

/// A validated finite orthomodular lattice.
pub struct Oml {
    name: String,
    labels: Vec<String>,
    n: usize,
    leq: Vec<bool>,
    ortho: Vec<Elem>,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    bottom: Elem,
    top: Elem,
    pub(crate) cache: Cache,
}

impl fmt::Debug for Oml {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Oml")
            .field("name", &self.name)
            .field("n", &self.n)
            .field("bottom", &self.bottom)
            .field("top", &self.top)
            .finish_non_exhaustive()
    }
}

impl Clone for Oml {
    fn clone(&self) -> Self {
        Oml {
            name: self.name.clone(),
            labels: self.labels.clone(),
            n: self.n,
            leq: self.leq.clone(),
            ortho: self.ortho.clone(),
            meet: self.meet.clone(),
            join: self.join.clone(),
            bottom: self.bottom,
            top: self.top,
            cache: Cache::default(),
        }
    }
}

impl Oml {
    /// Validates `raw` and builds the lattice. Structural problems and axiom
    /// failures are reported as distinct error variants.
    pub fn new(name: impl Into<String>, raw: RawOml) -> Result<Oml> {
        let report = validate_oml(&raw)?;
        if !report.ok {
            return Err(Error::Axioms(report));
        }
        let tables = report
            .tables
            .expect("a passing validation always carries meet/join tables");
        let n = raw.len();
        let mut leq = vec![false; n * n];
        for p in 0..n {
            for q in 0..n {
                leq[p * n + q] = raw.leq[p][q];
            }
        }
        Ok(Oml {
            name: name.into(),
            labels: raw.labels,
            n,
            leq,
            ortho: raw.ortho.into_iter().map(Elem).collect(),
            meet: tables.meet,
            join: tables.join,
            bottom: tables.bottom,
            top: tables.top,
            cache: Cache::default(),
        })
    }

    /// Assembles an `Oml` from tables that are already known to be correct
    /// (sub-tables of a validated lattice, coordinatewise products).
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn from_tables(
        name: String,
        labels: Vec<String>,
        leq: Vec<bool>,
        ortho: Vec<Elem>,
        meet: Vec<Elem>,
        join: Vec<Elem>,
        bottom: Elem,
        top: Elem,
    ) -> Oml {
        let n = labels.len();
        debug_assert_eq!(leq.len(), n * n);
        debug_assert_eq!(meet.len(), n * n);
        Oml {
            name,
            labels,
            n,
            leq,
            ortho,
            meet,
            join,
            bottom,
            top,
            cache: Cache::default(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Oml {
        self.name = name.into();
        self
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn elements(&self) -> impl DoubleEndedIterator<Item = Elem> + ExactSizeIterator + Clone {
        (0..self.n).map(Elem)
    }

    pub fn label(&self, p: Elem) -> &str {
        &self.labels[p.0]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Looks an element up by label, falling back to a decimal index.
    pub fn find(&self, token: &str) -> Option<Elem> {
        if let Some(i) = self.labels.iter().position(|l| l == token) {
            return Some(Elem(i));
        }
        token.parse::<usize>().ok().filter(|&i| i < self.n).map(Elem)
    }

    /// Rejects out-of-range indices.
    pub fn check(&self, p: Elem) -> Result<Elem> {
        if p.0 < self.n {
            Ok(p)
        } else {
            Err(Error::Input(format!(
                "element index {} out of range for a lattice with {} elements",
                p.0, self.n
            )))
        }
    }

    #[inline]
    pub fn leq(&self, p: Elem, q: Elem) -> bool {
        self.leq[p.0 * self.n + q.0]
    }

    #[inline]
    pub fn lt(&self, p: Elem, q: Elem) -> bool {
        p != q && self.leq(p, q)
    }

    #[inline]
    pub fn ortho(&self, p: Elem) -> Elem {
        self.ortho[p.0]
    }

    #[inline]
    pub fn meet(&self, p: Elem, q: Elem) -> Elem {
        self.meet[p.0 * self.n + q.0]
    }

    #[inline]
    pub fn join(&self, p: Elem, q: Elem) -> Elem {
        self.join[p.0 * self.n + q.0]
    }

    /// Checked variant of [`Oml::meet`].
    pub fn try_meet(&self, p: Elem, q: Elem) -> Result<Elem> {
        Ok(self.meet(self.check(p)?, self.check(q)?))
    }

    /// Checked variant of [`Oml::join`].
    pub fn try_join(&self, p: Elem, q: Elem) -> Result<Elem> {
        Ok(self.join(self.check(p)?, self.check(q)?))
    }

    /// Supremum of an arbitrary finite family; bottom for the empty family.
    pub fn join_all<I: IntoIterator<Item = Elem>>(&self, items: I) -> Elem {
        items.into_iter().fold(self.bottom, |acc, p| self.join(acc, p))
    }

    /// Infimum of an arbitrary finite family; top for the empty family.
    pub fn meet_all<I: IntoIterator<Item = Elem>>(&self, items: I) -> Elem {
        items.into_iter().fold(self.top, |acc, p| self.meet(acc, p))
    }

    /// `p ⊥ q` iff `p ≤ q^⊥`.
    #[inline]
    pub fn is_orthogonal(&self, p: Elem, q: Elem) -> bool {
        self.leq(p, self.ortho(q))
    }

    /// Mackey compatibility: `p = x ∨ y` for some `x ≤ q`, `y ≤ q^⊥`.
    ///
    /// Any such `x, y` satisfy `x ≤ p∧q` and `y ≤ p∧q^⊥`, so the search
    /// collapses to the single candidate pair `(p∧q, p∧q^⊥)`.
    #[inline]
    pub fn is_compatible(&self, p: Elem, q: Elem) -> bool {
        let x = self.meet(p, q);
        let y = self.meet(p, self.ortho(q));
        self.join(x, y) == p
    }

    /// Elements `q ≤ p`, in index order.
    pub fn down_set(&self, p: Elem) -> Vec<Elem> {
        self.elements().filter(|&q| self.leq(q, p)).collect()
    }

    /// Atoms: elements covering bottom.
    pub fn atoms(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&a| {
                a != self.bottom
                    && self
                        .elements()
                        .all(|x| x == self.bottom || x == a || !self.leq(x, a))
            })
            .collect()
    }

    /// Hasse diagram edges `(lower, upper)` in lexicographic order.
    pub fn covers(&self) -> Vec<(Elem, Elem)> {
        let mut out = Vec::new();
        for p in self.elements() {
            for q in self.elements() {
                if self.lt(p, q)
                    && !self
                        .elements()
                        .any(|r| r != p && r != q && self.leq(p, r) && self.leq(r, q))
                {
                    out.push((p, q));
                }
            }
        }
        out
    }

    /// Brute force over all triples: `p ≤ r ⇒ p ∨ (q ∧ r) = (p ∨ q) ∧ r`.
    pub fn is_modular_lattice(&self) -> bool {
        self.modular_witness().is_none()
    }

    /// First triple `(p, q, r)` violating the modular law, if any.
    pub fn modular_witness(&self) -> Option<(Elem, Elem, Elem)> {
        for p in self.elements() {
            for r in self.elements().filter(|&r| self.leq(p, r)) {
                for q in self.elements() {
                    if self.join(p, self.meet(q, r)) != self.meet(self.join(p, q), r) {
                        return Some((p, q, r));
                    }
                }
            }
        }
        None
    }

    /// Distributivity checked over all triples (complements exist in any OML).
    pub fn is_boolean_lattice(&self) -> bool {
        self.distributive_witness().is_none()
    }

    pub fn distributive_witness(&self) -> Option<(Elem, Elem, Elem)> {
        for p in self.elements() {
            for q in self.elements() {
                for r in self.elements() {
                    let lhs = self.meet(p, self.join(q, r));
                    let rhs = self.join(self.meet(p, q), self.meet(p, r));
                    if lhs != rhs {
                        return Some((p, q, r));
                    }
                }
            }
        }
        None
    }

    /// The interval `[0, p]` as an OML in its own right.
    pub fn interval(&self, p: Elem) -> Interval {
        build::interval(self, p)
    }

    /// The raw relation and orthocomplement, e.g. for re-validation.
    pub fn to_raw(&self) -> RawOml {
        let n = self.n;
        RawOml {
            labels: self.labels.clone(),
            leq: (0..n)
                .map(|p| (0..n).map(|q| self.leq[p * n + q]).collect())
                .collect(),
            ortho: self.ortho.iter().map(|e| e.0).collect(),
        }
    }

    /// Identical tables under the identity map.
    pub fn same_tables(&self, other: &Oml) -> bool {
        self.n == other.n
            && self.leq == other.leq
            && self.ortho == other.ortho
            && self.meet == other.meet
            && self.join == other.join
    }

    /// Brute-force isomorphism test (backtracking over order-compatible
    /// bijections). Intended for small lattices in tests and examples.
    pub fn is_isomorphic(&self, other: &Oml) -> bool {
        if self.n != other.n {
            return false;
        }
        let n = self.n;
        let down = |l: &Oml, p: Elem| l.elements().filter(|&q| l.leq(q, p)).count();
        let up = |l: &Oml, p: Elem| l.elements().filter(|&q| l.leq(p, q)).count();
        let sig_a: Vec<_> = self.elements().map(|p| (down(self, p), up(self, p))).collect();
        let sig_b: Vec<_> = other.elements().map(|p| (down(other, p), up(other, p))).collect();
        let mut map: Vec<Option<Elem>> = vec![None; n];
        let mut used = vec![false; n];
        fn extend(
            a: &Oml,
            b: &Oml,
            i: usize,
            map: &mut Vec<Option<Elem>>,
            used: &mut Vec<bool>,
            sig_a: &[(usize, usize)],
            sig_b: &[(usize, usize)],
        ) -> bool {
            if i == a.n {
                return true;
            }
            let p = Elem(i);
            for j in 0..b.n {
                if used[j] || sig_a[i] != sig_b[j] {
                    continue;
                }
                let img = Elem(j);
                let consistent = (0..i).all(|k| {
                    let pk = Elem(k);
                    let ik = map[k].unwrap();
                    a.leq(pk, p) == b.leq(ik, img) && a.leq(p, pk) == b.leq(img, ik)
                        && (a.ortho(p) != pk || b.ortho(img) == ik)
                        && (a.ortho(pk) != p || b.ortho(ik) == img)
                });
                if !consistent {
                    continue;
                }
                map[i] = Some(img);
                used[j] = true;
                if extend(a, b, i + 1, map, used, sig_a, sig_b) {
                    return true;
                }
                map[i] = None;
                used[j] = false;
            }
            false
        }
        extend(self, other, 0, &mut map, &mut used, &sig_a, &sig_b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mo2() -> Oml {
        mo(2)
    }

    #[test]
    fn meets_and_joins_in_mo2() {
        let l = mo2();
        let a1 = l.find("a1").unwrap();
        let a2 = l.find("a2").unwrap();
        assert_eq!(l.meet(a1, a2), l.bottom());
        assert_eq!(l.join(a1, a2), l.top());
        for p in l.elements() {
            assert_eq!(l.join(p, l.bottom()), p);
            assert_eq!(l.meet(p, l.ortho(p)), l.bottom());
            assert_eq!(l.join(p, l.ortho(p)), l.top());
        }
    }

    #[test]
    fn complements_in_boolean_square() {
        let l = boolean(2);
        let a = l.find("10").unwrap();
        let a_perp = l.find("01").unwrap();
        assert_eq!(l.ortho(a), a_perp);
        assert_eq!(l.meet(a, a_perp), l.bottom());
        assert_eq!(l.join(a, a_perp), l.top());
    }

    #[test]
    fn out_of_range_element_is_an_input_error() {
        let l = mo2();
        assert!(matches!(l.try_meet(Elem(0), Elem(99)), Err(Error::Input(_))));
        assert!(matches!(l.try_join(Elem(42), Elem(0)), Err(Error::Input(_))));
    }

    #[test]
    fn orthogonality() {
        let l = mo2();
        let a1 = l.find("a1").unwrap();
        let a1p = l.find("a1'").unwrap();
        let a2 = l.find("a2").unwrap();
        assert!(l.is_orthogonal(a1, a1p));
        assert!(!l.is_orthogonal(a1, a2));
        for p in l.elements() {
            assert!(l.is_orthogonal(l.bottom(), p));
            for q in l.elements() {
                assert_eq!(l.is_orthogonal(p, q), l.is_orthogonal(q, p));
            }
        }
    }

    /// Literal search over `x ≤ q`, `y ≤ q^⊥`.
    fn compatible_by_search(l: &Oml, p: Elem, q: Elem) -> bool {
        let xs = l.down_set(q);
        let ys = l.down_set(l.ortho(q));
        xs.iter().any(|&x| ys.iter().any(|&y| l.join(x, y) == p))
    }

    #[test]
    fn compatibility_matches_search() {
        for l in [mo2(), boolean(2), mo(3), direct_product(&[mo(2), boolean(1)]).unwrap()] {
            for p in l.elements() {
                for q in l.elements() {
                    assert_eq!(l.is_compatible(p, q), compatible_by_search(&l, p, q));
                    assert_eq!(l.is_compatible(p, q), l.is_compatible(q, p));
                    if l.leq(p, q) || l.is_orthogonal(p, q) {
                        assert!(l.is_compatible(p, q));
                    }
                }
            }
        }
    }

    #[test]
    fn compatibility_examples() {
        let b2 = boolean(2);
        for p in b2.elements() {
            for q in b2.elements() {
                assert!(b2.is_compatible(p, q));
            }
        }
        let l = mo2();
        let a1 = l.find("a1").unwrap();
        assert!(!l.is_compatible(a1, l.find("a2").unwrap()));
        assert!(l.is_compatible(a1, l.find("a1'").unwrap()));
    }

    #[test]
    fn modular_and_boolean_verdicts() {
        let l = mo2();
        assert!(l.is_modular_lattice());
        assert!(!l.is_boolean_lattice());
        let b3 = boolean(3);
        assert!(b3.is_modular_lattice());
        assert!(b3.is_boolean_lattice());
        let a1 = l.find("a1").unwrap();
        let a2 = l.find("a2").unwrap();
        let a2p = l.find("a2'").unwrap();
        // a1 ∧ (a2 ∨ a2') = a1, but (a1∧a2) ∨ (a1∧a2') = 0
        assert_ne!(l.meet(a1, l.join(a2, a2p)), l.join(l.meet(a1, a2), l.meet(a1, a2p)));
    }

    #[test]
    fn de_morgan_and_orthomodular_law() {
        for l in [mo(3), boolean(3), pasting::d16()] {
            for p in l.elements() {
                for q in l.elements() {
                    assert_eq!(l.ortho(l.join(p, q)), l.meet(l.ortho(p), l.ortho(q)));
                    if l.leq(p, q) {
                        assert_eq!(l.join(p, l.meet(q, l.ortho(p))), q);
                    }
                }
            }
        }
    }

    #[test]
    fn distributive_under_compatibility() {
        for l in [mo(2), pasting::d16(), direct_product(&[mo(2), boolean(1)]).unwrap()] {
            for p in l.elements() {
                for q in l.elements().filter(|&q| l.is_compatible(p, q)) {
                    for r in l.elements().filter(|&r| l.is_compatible(p, r)) {
                        assert_eq!(
                            l.meet(p, l.join(q, r)),
                            l.join(l.meet(p, q), l.meet(p, r))
                        );
                        assert_eq!(
                            l.join(p, l.meet(q, r)),
                            l.meet(l.join(p, q), l.join(p, r))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn d16_is_not_modular() {
        let l = pasting::d16();
        assert_eq!(l.len(), 16);
        assert!(!l.is_modular_lattice());
    }
}

//! Center, central covers and centrally orthogonal families.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{Elem, Oml, ProjectionSet};

/// `{c : c is compatible with every p}`.
pub fn center(l: &Oml) -> &ProjectionSet {
    l.cache
        .center
        .get_or_init(|| ProjectionSet::filter(l, |c| l.elements().all(|p| l.is_compatible(c, p))))
}

pub fn is_central(l: &Oml, c: Elem) -> bool {
    center(l).contains(c)
}

pub fn is_irreducible(l: &Oml) -> bool {
    center(l).len() == 2
}

fn cover_table(l: &Oml) -> &[Elem] {
    l.cache.gamma.get_or_init(|| {
        let cs = center(l).to_vec();
        l.elements()
            .map(|p| {
                cs.iter()
                    .copied()
                    .filter(|&c| l.leq(p, c))
                    .fold(l.top(), |acc, c| l.meet(acc, c))
            })
            .collect()
    })
}

/// `γp`, the least central element above `p`.
pub fn central_cover(l: &Oml, p: Elem) -> Elem {
    cover_table(l)[p.0]
}

/// The central covers of the family are pairwise orthogonal.
pub fn is_centrally_orthogonal(l: &Oml, family: &[Elem]) -> bool {
    family.iter().enumerate().all(|(i, &p)| {
        family[i + 1..]
            .iter()
            .all(|&q| l.is_orthogonal(central_cover(l, p), central_cover(l, q)))
    })
}

/// The center of every interval `[0, p]` is `{p ∧ c : c central}`.
pub fn has_relative_center_property(l: &Oml) -> bool {
    let cs = center(l).to_vec();
    l.elements().all(|p| {
        let iv = l.interval(p);
        let local: Vec<Elem> = center(&iv.oml).iter().map(|c| iv.to_parent(c)).collect();
        let expected = ProjectionSet::from_elems(l.len(), cs.iter().map(|&c| l.meet(p, c)));
        ProjectionSet::from_elems(l.len(), local) == expected
    })
}

/// The center, checked directly to be a sublattice closed under `⊥` on
/// which meet distributes over join.
pub fn center_is_boolean_subalgebra(l: &Oml) -> bool {
    let c = center(l);
    let cs = c.to_vec();
    let closed = c.contains(l.bottom())
        && c.contains(l.top())
        && cs.iter().all(|&a| {
            c.contains(l.ortho(a))
                && cs.iter().all(|&b| c.contains(l.meet(a, b)) && c.contains(l.join(a, b)))
        });
    closed
        && cs.iter().all(|&a| {
            cs.iter().all(|&b| {
                cs.iter().all(|&d| {
                    l.meet(a, l.join(b, d)) == l.join(l.meet(a, b), l.meet(a, d))
                })
            })
        })
}

/// Outcome of checking `Φ((eᵢ)) = ⋁ eᵢ` from `∏ [0, pᵢ]` onto `[0, ⋁ pᵢ]`.
#[derive(Clone, Debug, Serialize)]
pub struct CarProdReport {
    pub join: Elem,
    pub factor_sizes: Vec<usize>,
    pub interval_size: usize,
    pub bijective: bool,
    pub order_preserving: bool,
    pub order_reflecting: bool,
    pub ortho_preserving: bool,
    /// `q ↦ (q ∧ γpᵢ)` lands in the product and inverts `Φ` on both sides.
    pub inverse_ok: bool,
}

impl CarProdReport {
    pub fn is_isomorphism(&self) -> bool {
        self.bijective
            && self.order_preserving
            && self.order_reflecting
            && self.ortho_preserving
            && self.inverse_ok
    }
}

pub fn carprod_iso(l: &Oml, family: &[Elem]) -> Result<CarProdReport> {
    for &p in family {
        l.check(p)?;
    }
    if !is_centrally_orthogonal(l, family) {
        return Err(Error::Precondition("family is not centrally orthogonal".into()));
    }
    let p = l.join_all(family.iter().copied());
    let factors: Vec<_> = family.iter().map(|&pi| l.interval(pi)).collect();
    let sizes: Vec<usize> = factors.iter().map(|f| f.oml.len()).collect();
    let total: usize = sizes.iter().product();

    let decode = |mut i: usize| {
        let mut c = vec![Elem(0); sizes.len()];
        for k in (0..sizes.len()).rev() {
            c[k] = Elem(i % sizes[k]);
            i /= sizes[k];
        }
        c
    };
    let tuples: Vec<Vec<Elem>> = (0..total).map(decode).collect();
    let phi = |t: &[Elem]| l.join_all(t.iter().zip(&factors).map(|(&e, f)| f.to_parent(e)));
    let images: Vec<Elem> = tuples.iter().map(|t| phi(t)).collect();

    let target = l.down_set(p);
    let mut hit = vec![false; l.len()];
    let mut injective = true;
    for &img in &images {
        if hit[img.0] {
            injective = false;
        }
        hit[img.0] = true;
    }
    let onto = target.iter().all(|q| hit[q.0]) && images.iter().all(|&q| l.leq(q, p));
    let bijective = injective && onto && total == target.len();

    let coord_leq = |a: &[Elem], b: &[Elem]| {
        a.iter().zip(b).zip(&factors).all(|((&x, &y), f)| f.oml.leq(x, y))
    };
    let mut order_preserving = true;
    let mut order_reflecting = true;
    for (i, a) in tuples.iter().enumerate() {
        for (j, b) in tuples.iter().enumerate() {
            let prod = coord_leq(a, b);
            let img = l.leq(images[i], images[j]);
            order_preserving &= !prod || img;
            order_reflecting &= !img || prod;
        }
    }

    let ortho_preserving = tuples.iter().zip(&images).all(|(t, &img)| {
        let perp: Vec<Elem> = t.iter().zip(&factors).map(|(&e, f)| f.oml.ortho(e)).collect();
        phi(&perp) == l.meet(p, l.ortho(img))
    });

    let covers: Vec<Elem> = family.iter().map(|&pi| central_cover(l, pi)).collect();
    let inverse = |q: Elem| -> Option<Vec<Elem>> {
        covers
            .iter()
            .zip(&factors)
            .map(|(&g, f)| f.from_parent(l.meet(q, g)))
            .collect()
    };
    let inverse_ok = target.iter().all(|&q| inverse(q).is_some_and(|t| phi(&t) == q))
        && tuples
            .iter()
            .zip(&images)
            .all(|(t, &img)| inverse(img).is_some_and(|back| &back == t));

    Ok(CarProdReport {
        join: p,
        factor_sizes: sizes,
        interval_size: target.len(),
        bijective,
        order_preserving,
        order_reflecting,
        ortho_preserving,
        inverse_ok,
    })
}

mod common;

use common::*;
use omlkit::central::*;
use omlkit::equivalence::{are_related, is_subequivalent, projectivity_classes};
use omlkit::lattice::direct_product;
use omlkit::{Elem, Oml};
use rand::Rng;

#[test]
fn gamma_is_the_least_central_upper_bound() {
    for l in corpus() {
        let cs = center(&l).to_vec();
        for p in l.elements() {
            let g = central_cover(&l, p);
            assert!(is_central(&l, g) && l.leq(p, g));
            for &c in &cs {
                if l.leq(p, c) {
                    assert!(l.leq(g, c));
                }
            }
        }
    }
}

#[test]
fn gamma_is_monotone_and_commutes_with_central_meets() {
    for l in corpus() {
        let cs = center(&l).to_vec();
        for p in l.elements() {
            for q in l.elements().filter(|&q| l.leq(p, q)) {
                assert!(l.leq(central_cover(&l, p), central_cover(&l, q)));
            }
            for &c in &cs {
                assert_eq!(central_cover(&l, l.meet(p, c)), l.meet(central_cover(&l, p), c));
            }
        }
    }
}

fn check_sup(l: &Oml, family: &[Elem]) {
    let lhs = central_cover(l, l.join_all(family.iter().copied()));
    let rhs = l.join_all(family.iter().map(|&p| central_cover(l, p)));
    assert_eq!(lhs, rhs, "{} on {:?}", l.name(), family);
}

#[test]
fn gamma_preserves_suprema() {
    for l in corpus() {
        if l.len() <= 24 {
            let all: Vec<Elem> = l.elements().collect();
            for mask in 0u32..(1 << l.len()) {
                let fam: Vec<Elem> = all.iter().copied().filter(|p| mask >> p.0 & 1 == 1).collect();
                check_sup(&l, &fam);
            }
        } else {
            let mut r = rng(0x5eed ^ l.len() as u64);
            for _ in 0..10_000 {
                let fam: Vec<Elem> = l.elements().filter(|_| r.gen_bool(0.1)).collect();
                check_sup(&l, &fam);
            }
        }
    }
}

#[test]
fn gamma_is_constant_on_projectivity_classes() {
    for l in corpus() {
        for class in &projectivity_classes(&l).classes {
            let g = central_cover(&l, class[0]);
            assert!(class.iter().all(|&p| central_cover(&l, p) == g), "{}", l.name());
        }
    }
}

#[test]
fn unrelated_iff_covers_orthogonal() {
    for l in corpus_up_to(80) {
        for p in l.elements() {
            for q in l.elements() {
                let orth = l.is_orthogonal(central_cover(&l, p), central_cover(&l, q));
                assert_eq!(are_related(&l, p, q), !orth, "{}: {} {}", l.name(), l.label(p), l.label(q));
            }
        }
    }
}

#[test]
fn gamma_is_the_join_of_subequivalent_elements() {
    for l in corpus_up_to(80) {
        for p in l.elements() {
            let j = l.join_all(l.elements().filter(|&q| is_subequivalent(&l, q, p)));
            assert_eq!(j, central_cover(&l, p), "{} at {}", l.name(), l.label(p));
        }
    }
}

#[test]
fn central_elements_split_every_element() {
    for l in corpus() {
        for c in l.elements() {
            let splits = l
                .elements()
                .all(|p| l.join(l.meet(p, c), l.meet(p, l.ortho(c))) == p);
            assert_eq!(splits, is_central(&l, c));
        }
        assert!(center_is_boolean_subalgebra(&l));
    }
}

#[test]
fn center_of_a_product_is_the_product_of_centers() {
    let factors = [get("mo:2"), get("boolean:2"), get("d16")];
    let p = direct_product(&factors).unwrap();
    let expected: usize = factors.iter().map(|f| center(f).len()).product();
    assert_eq!(center(&p).len(), expected);
    for c in center(&p).iter() {
        let label = p.label(c).trim_matches(|ch| ch == '(' || ch == ')');
        let parts: Vec<&str> = label.split(',').collect();
        for (f, part) in factors.iter().zip(parts) {
            assert!(is_central(f, e(f, part)));
        }
    }
}

#[test]
fn central_orthogonality_relativizes_to_central_intervals() {
    for l in corpus_up_to(40) {
        for c in center(&l).iter() {
            let iv = l.interval(c);
            let m = &iv.oml;
            for a in m.elements() {
                for b in m.elements() {
                    let local = is_centrally_orthogonal(m, &[a, b]);
                    let global = is_centrally_orthogonal(&l, &[iv.to_parent(a), iv.to_parent(b)]);
                    assert_eq!(local, global, "{} in [0,{}]", l.name(), l.label(c));
                }
            }
        }
    }
}

fn families(l: &Oml, max: usize) -> Vec<Vec<Elem>> {
    let mut out = vec![vec![]];
    let mut frontier = vec![vec![]];
    for _ in 0..max {
        let mut next = Vec::new();
        for fam in &frontier {
            let start = fam.last().map_or(0, |x: &Elem| x.0 + 1);
            for p in l.elements().skip(start) {
                let mut f = fam.clone();
                f.push(p);
                if is_centrally_orthogonal(l, &f) {
                    next.push(f);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[test]
fn cartesian_product_map_is_an_isomorphism() {
    for l in corpus() {
        for fam in families(&l, 3) {
            let r = carprod_iso(&l, &fam).unwrap();
            assert!(r.is_isomorphism(), "{} {:?}: {:?}", l.name(), fam, r);
        }
    }
}

#[test]
fn non_centrally_orthogonal_families_are_rejected() {
    for l in corpus_up_to(40) {
        let atoms = l.atoms();
        for &a in &atoms {
            for &b in &atoms {
                if a != b && !is_centrally_orthogonal(&l, &[a, b]) {
                    assert!(carprod_iso(&l, &[a, b]).is_err());
                }
            }
        }
    }
}

#[test]
fn relative_center_property_on_block_free_corpus() {
    for l in corpus().into_iter().filter(|l| !l.name().contains("d16")) {
        assert!(has_relative_center_property(&l), "{}", l.name());
    }
    for token in ["d16", "product(d16,boolean:1)", "product(d16,mo:2)"] {
        assert!(!has_relative_center_property(&get(token)), "{token}");
    }
}

mod common;

use common::*;
use omlkit::central::center;
use omlkit::classes::*;
use omlkit::equivalence::{are_perspective, are_projective, is_subequivalent, projectivity_classes};
use omlkit::td::{classify_set, gamma_image};

#[test]
fn class_inclusions() {
    for l in corpus() {
        let t = class_table(&l);
        for p in l.elements() {
            assert!(!t.abelian[p.0] || t.modular[p.0]);
            assert!(!t.modular[p.0] || t.locally_modular[p.0]);
            assert!(t.complete[p.0]);
        }
        assert!(t.abelian[l.bottom().0]);
    }
}

#[test]
fn class_columns_match_interval_checks() {
    for l in corpus_up_to(80) {
        let t = class_table(&l);
        for p in l.elements() {
            let iv = l.interval(p);
            assert_eq!(t.abelian[p.0], iv.oml.is_boolean_lattice());
            assert_eq!(t.modular[p.0], iv.oml.is_modular_lattice());
        }
    }
}

#[test]
fn locally_modular_central_elements_are_locally_type_m() {
    for l in corpus() {
        let m0 = class_as_set(&l, ClassName::M0);
        let gm = gamma_image(&l, &class_as_set(&l, ClassName::M));
        for c in center(&l).iter() {
            assert_eq!(m0.contains(c), gm.contains(c), "{} at {}", l.name(), l.label(c));
        }
    }
}

#[test]
fn modular_elements_form_a_p_ideal() {
    for l in rcp_corpus() {
        let m = class_as_set(&l, ClassName::M);
        for p in m.iter() {
            for q in m.iter() {
                assert!(m.contains(l.join(p, q)), "{}", l.name());
            }
        }
        let c = classify_set(&l, &m).unwrap();
        assert!(c.is_std && c.is_projective && c.is_p_ideal, "{}", l.name());
    }
}

#[test]
fn modular_joins_can_fail_without_relative_centers() {
    let l = get("d16");
    let m = class_as_set(&l, ClassName::M);
    let (a, f) = (e(&l, "a"), e(&l, "f"));
    assert!(m.contains(a) && m.contains(f));
    assert_eq!(l.join(a, f), l.top());
    assert!(!m.contains(l.top()));
}

#[test]
fn modular_elements_are_finite() {
    for l in rcp_corpus() {
        let m = class_as_set(&l, ClassName::M);
        for p in m.iter() {
            for q in l.elements().filter(|&q| l.lt(q, p)) {
                assert!(!are_projective(&l, q, p), "{}", l.name());
            }
        }
        for p in m.iter() {
            for q in m.iter() {
                assert_eq!(are_perspective(&l, p, q), are_projective(&l, p, q), "{}", l.name());
                if is_subequivalent(&l, p, q) && is_subequivalent(&l, q, p) {
                    assert!(are_projective(&l, p, q));
                }
            }
        }
    }
}

#[test]
fn orthogonal_projective_families_in_modular_intervals_are_small() {
    for l in rcp_corpus().into_iter().filter(|l| l.len() <= 40) {
        let m = class_as_set(&l, ClassName::M);
        let part = projectivity_classes(&l);
        let atoms = l.atoms().len();
        for p in m.iter() {
            for class in &part.classes {
                let members: Vec<_> = class
                    .iter()
                    .copied()
                    .filter(|&x| x != l.bottom() && l.leq(x, p))
                    .collect();
                // a greedy orthogonal family inside one class
                let mut fam: Vec<omlkit::Elem> = Vec::new();
                for x in members {
                    if fam.iter().all(|&y| l.is_orthogonal(x, y)) {
                        fam.push(x);
                    }
                }
                assert!(fam.len() <= atoms);
            }
        }
    }
}

#[test]
fn class_names_round_trip() {
    for name in ClassName::ALL {
        assert_eq!(name.to_string().parse::<ClassName>().unwrap(), name);
    }
    assert!("Z".parse::<ClassName>().is_err());
}

mod common;

use common::*;
use omlkit::central::center;
use omlkit::classes::{class_as_set, ClassName};
use omlkit::decomposition::*;
use omlkit::td::{classify_set, is_orthodense, restricted_type_cover, td_closure, type_cover};
use omlkit::{Oml, ProjectionSet};

fn zero(l: &Oml) -> ProjectionSet {
    ProjectionSet::from_elems(l.len(), [l.bottom()])
}

fn class(l: &Oml, n: ClassName) -> ProjectionSet {
    class_as_set(l, n)
}

fn test_sets(l: &Oml, seed: u64) -> Vec<ProjectionSet> {
    let mut out = vec![zero(l), center(l).clone()];
    out.extend(ClassName::ALL.iter().map(|&n| class(l, n)));
    let mut r = rng(seed);
    for d in [0.03, 0.1, 0.3] {
        out.push(td_closure(l, &random_subset(l, &mut r, d)));
    }
    out
}

#[test]
fn classification_corollary() {
    for l in corpus() {
        for q in test_sets(&l, 1) {
            let cs = center(&l).to_vec();
            for &c in &cs {
                let k = classify_central(&l, &q, c).unwrap();
                assert!(!k.is_type_q || k.is_locally_type_q);
                assert!(!k.is_purely_non_q || k.is_properly_non_q);
                if (k.is_type_q && k.is_properly_non_q) || (k.is_locally_type_q && k.is_purely_non_q) {
                    assert_eq!(c, l.bottom());
                }
                for &d in &cs {
                    let kd = classify_central(&l, &q, d).unwrap();
                    let meet = classify_central(&l, &q, l.meet(c, d)).unwrap();
                    let join = classify_central(&l, &q, l.join(c, d)).unwrap();
                    assert!(!k.is_type_q || meet.is_type_q);
                    assert!(!k.is_locally_type_q || meet.is_locally_type_q);
                    assert!(!k.is_purely_non_q || meet.is_purely_non_q);
                    assert!(!k.is_properly_non_q || meet.is_properly_non_q);
                    assert!(!(k.is_type_q && kd.is_type_q) || join.is_type_q);
                    assert!(!(k.is_locally_type_q && kd.is_locally_type_q) || join.is_locally_type_q);
                    assert!(!(k.is_purely_non_q && kd.is_purely_non_q) || join.is_purely_non_q);
                    assert!(!(k.is_properly_non_q && kd.is_properly_non_q) || join.is_properly_non_q);
                }
            }
        }
    }
}

#[test]
fn fundamental_decomposition_is_unique_and_closed_form() {
    for l in corpus() {
        for q in test_sets(&l, 2) {
            let f = fundamental_decomposition(&l, &q).unwrap();
            assert_eq!(l.join(l.join(f.c1, f.c2), f.c3), l.top());
            assert!(l.is_orthogonal(f.c1, f.c2) && l.is_orthogonal(f.c2, f.c3) && l.is_orthogonal(f.c1, f.c3));
            assert!(q.iter().all(|x| l.leq(x, l.join(f.c1, f.c2))));
            let qc = q.intersection(center(&l));
            assert_eq!(qc, ProjectionSet::filter(&l, |c| center(&l).contains(c) && l.leq(c, f.c1)));
            let tail = l.join(f.c2, f.c3);
            assert!(qc.iter().all(|c| c == l.bottom() || !l.leq(c, tail)));
        }
    }
}

fn pairs(l: &Oml) -> Vec<(&'static str, ProjectionSet, ProjectionSet)> {
    vec![
        ("(B,M)", class(l, ClassName::B), class(l, ClassName::M)),
        ("(0,0)", zero(l), zero(l)),
        ("(0,M)", zero(l), class(l, ClassName::M)),
        ("(B,T)", class(l, ClassName::B), class(l, ClassName::T)),
        ("(M,T)", class(l, ClassName::M), class(l, ClassName::T)),
    ]
}

#[test]
fn type_decomposition_partitions_and_refines() {
    for l in corpus() {
        for (name, q, k) in pairs(&l) {
            let t = type_split(&l, &q, &k).unwrap_or_else(|err| panic!("{} {name}: {err}", l.name()));
            let orth = |a, b| l.is_orthogonal(a, b);
            assert!(orth(t.c_i, t.c_ii) && orth(t.c_ii, t.c_iii) && orth(t.c_i, t.c_iii));
            assert_eq!(l.join(l.join(t.c_i, t.c_ii), t.c_iii), l.top());
            assert!(orth(t.c_ik, t.c_ikt) && l.join(t.c_ik, t.c_ikt) == t.c_i);
            assert!(orth(t.c_iik, t.c_iikt) && l.join(t.c_iik, t.c_iikt) == t.c_ii);
            assert!(orth(t.c11, t.c21) && l.join(t.c11, t.c21) == t.c_ik);
            assert!(q.iter().all(|x| l.leq(x, t.c_i)));
            assert!(k.iter().all(|x| l.leq(x, l.join(t.c_i, t.c_ii))));
            let c_q = type_cover(&l, &q).unwrap();
            let c_k = type_cover(&l, &k).unwrap();
            assert!(l.leq(c_q, c_k));
            assert!(l.leq(restricted_type_cover(&l, &q).unwrap(), restricted_type_cover(&l, &k).unwrap()));
        }
    }
}

#[test]
fn random_nested_pairs() {
    for l in corpus_up_to(80) {
        let mut r = rng(99);
        for _ in 0..20 {
            let q = td_closure(&l, &random_subset(&l, &mut r, 0.05));
            let k = td_closure(&l, &q.union(&random_subset(&l, &mut r, 0.1)));
            type_decomposition(&l, &q, &k).unwrap();
        }
    }
}

#[test]
fn projective_std_sets_fill_their_type_cover() {
    for l in rcp_corpus() {
        for n in [ClassName::B, ClassName::M, ClassName::T] {
            let q = class(&l, n);
            assert!(classify_set(&l, &q).unwrap().is_projective);
            let t = type_split(&l, &q, &class(&l, ClassName::T)).unwrap();
            assert_eq!(t.c_i, l.join_all(q.iter()), "{} {n}", l.name());
            assert!(is_orthodense(&l, &q, t.c_i).unwrap(), "{} {n}", l.name());
        }
    }
}

#[test]
fn alternative_type_i_characterizations() {
    for l in corpus() {
        for q in test_sets(&l, 4) {
            let c_q = type_cover(&l, &q).unwrap();
            for c in center(&l).iter() {
                let r = alt_type_i_conditions(&l, &q, c).unwrap();
                assert_eq!(r.all(), l.leq(c, c_q));
                assert!(r.all() || r.none());
            }
        }
    }
}

#[test]
fn worked_values() {
    let l = get("mo:2");
    let r = type_decomposition(&l, &class(&l, ClassName::B), &class(&l, ClassName::M)).unwrap();
    assert_eq!(
        [&r.c_i.label, &r.c_ii.label, &r.c_iii.label, &r.c_ik.label, &r.c11.label, &r.c21.label],
        ["1", "0", "0", "1", "0", "1"]
    );
    let b = get("boolean:2");
    let r = type_decomposition(&b, &class(&b, ClassName::B), &class(&b, ClassName::M)).unwrap();
    assert_eq!(r.c11.label, "11");
    for x in [&r.c21, &r.c_ikt, &r.c_ii, &r.c_iik, &r.c_iikt, &r.c_iii, &r.c2, &r.c3] {
        assert_eq!(x.label, "00");
    }
    let p = get("product(mo:2,boolean:1)");
    let f = fundamental_decomposition(&p, &class(&p, ClassName::B)).unwrap();
    assert_eq!([p.label(f.c1), p.label(f.c2), p.label(f.c3)], ["(0,1)", "(1,0)", "(0,0)"]);
}

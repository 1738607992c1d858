//! Standard constructions: boolean algebras, MOₙ, the benzene ring,
//! direct products and intervals.

use super::{Elem, Oml, RawOml};
use crate::error::{Error, Result};

/// The boolean algebra 2ⁿ. Element `i` is the subset with bitmask `i`; its
/// label is the bitstring, most significant atom first.
pub fn boolean(n: u32) -> Oml {
    assert!(n <= 10, "boolean:{n} is too large");
    let size = 1usize << n;
    let full = size - 1;
    let label = |i: usize| {
        if n == 0 {
            "0".to_string()
        } else {
            format!("{:0width$b}", i, width = n as usize)
        }
    };
    let labels = (0..size).map(label).collect();
    let leq = (0..size).map(|p| (0..size).map(|q| p & !q == 0).collect()).collect();
    let ortho = (0..size).map(|p| full & !p).collect();
    Oml::new(format!("boolean:{n}"), RawOml { labels, leq, ortho })
        .expect("boolean algebras are orthomodular")
}

/// MOₙ: bottom, `2n` atoms `a1, a1', …, an, an'`, top.
pub fn mo(n: usize) -> Oml {
    assert!(n >= 1, "mo:n needs n ≥ 1");
    let size = 2 * n + 2;
    let top = size - 1;
    let mut labels = vec!["0".to_string()];
    for i in 1..=n {
        labels.push(format!("a{i}"));
        labels.push(format!("a{i}'"));
    }
    labels.push("1".to_string());
    let leq = (0..size)
        .map(|p| (0..size).map(|q| p == 0 || q == top || p == q).collect())
        .collect();
    let ortho = (0..size)
        .map(|p| match p {
            0 => top,
            p if p == top => 0,
            p if p % 2 == 1 => p + 1,
            p => p - 1,
        })
        .collect();
    Oml::new(format!("mo:{n}"), RawOml { labels, leq, ortho }).expect("MOn is orthomodular")
}

/// The benzene ring O₆: an ortholattice that is not orthomodular. Returned
/// raw, since it cannot be an [`Oml`].
pub fn o6() -> RawOml {
    let labels = ["0", "a", "b", "b'", "a'", "1"].iter().map(|s| s.to_string()).collect();
    let covers = [(0, 1), (1, 2), (2, 5), (0, 3), (3, 4), (4, 5)];
    RawOml::from_covers(labels, &covers, vec![5, 4, 3, 2, 1, 0]).expect("static covers are in range")
}

/// Cartesian product with coordinatewise order and orthocomplement. Element
/// indices are mixed-radix with the first factor most significant.
pub fn direct_product(factors: &[Oml]) -> Result<Oml> {
    if factors.is_empty() {
        return Err(Error::Input("direct product of an empty family".into()));
    }
    let sizes: Vec<usize> = factors.iter().map(Oml::len).collect();
    let total: usize = sizes.iter().product();
    let decode = |mut i: usize| {
        let mut coords = vec![0usize; sizes.len()];
        for k in (0..sizes.len()).rev() {
            coords[k] = i % sizes[k];
            i /= sizes[k];
        }
        coords
    };
    let encode = |coords: &[usize]| coords.iter().zip(&sizes).fold(0, |acc, (&c, &s)| acc * s + c);
    let coords: Vec<Vec<usize>> = (0..total).map(decode).collect();

    let labels = if factors.len() == 1 {
        factors[0].labels().to_vec()
    } else {
        coords
            .iter()
            .map(|c| {
                let parts: Vec<&str> =
                    c.iter().zip(factors).map(|(&i, l)| l.label(Elem(i))).collect();
                format!("({})", parts.join(","))
            })
            .collect()
    };
    let mut leq = vec![false; total * total];
    let mut meet = vec![Elem(0); total * total];
    let mut join = vec![Elem(0); total * total];
    let mut buf = vec![0usize; sizes.len()];
    for p in 0..total {
        for q in 0..total {
            let (cp, cq) = (&coords[p], &coords[q]);
            leq[p * total + q] = factors
                .iter()
                .enumerate()
                .all(|(k, l)| l.leq(Elem(cp[k]), Elem(cq[k])));
            for (k, l) in factors.iter().enumerate() {
                buf[k] = l.meet(Elem(cp[k]), Elem(cq[k])).0;
            }
            meet[p * total + q] = Elem(encode(&buf));
            for (k, l) in factors.iter().enumerate() {
                buf[k] = l.join(Elem(cp[k]), Elem(cq[k])).0;
            }
            join[p * total + q] = Elem(encode(&buf));
        }
    }
    let ortho = coords
        .iter()
        .map(|c| {
            let img: Vec<usize> =
                c.iter().zip(factors).map(|(&i, l)| l.ortho(Elem(i)).0).collect();
            Elem(encode(&img))
        })
        .collect();
    let bottom = Elem(encode(&factors.iter().map(|l| l.bottom().0).collect::<Vec<_>>()));
    let top = Elem(encode(&factors.iter().map(|l| l.top().0).collect::<Vec<_>>()));
    let name = format!(
        "product({})",
        factors.iter().map(Oml::name).collect::<Vec<_>>().join(",")
    );
    Ok(Oml::from_tables(name, labels, leq, ortho, meet, join, bottom, top))
}

/// The interval `[0, p]` of a parent lattice, with the relative
/// orthocomplement `q ↦ p ∧ q^⊥` and maps to and from the parent.
#[derive(Clone, Debug)]
pub struct Interval {
    pub oml: Oml,
    /// Top of the interval, as a parent element.
    pub top: Elem,
    to_parent: Vec<Elem>,
    from_parent: Vec<Option<Elem>>,
}

impl Interval {
    /// Parent element corresponding to an interval element.
    pub fn to_parent(&self, q: Elem) -> Elem {
        self.to_parent[q.0]
    }

    /// Interval element corresponding to a parent element `q ≤ top`.
    pub fn from_parent(&self, q: Elem) -> Option<Elem> {
        self.from_parent.get(q.0).copied().flatten()
    }

    pub fn parent_elements(&self) -> &[Elem] {
        &self.to_parent
    }
}

pub(crate) fn interval(l: &Oml, p: Elem) -> Interval {
    let members = l.down_set(p);
    let m = members.len();
    let mut from_parent = vec![None; l.len()];
    for (i, &q) in members.iter().enumerate() {
        from_parent[q.0] = Some(Elem(i));
    }
    let local = |q: Elem| from_parent[q.0].expect("closed under meet/join below p");
    let mut leq = vec![false; m * m];
    let mut meet = vec![Elem(0); m * m];
    let mut join = vec![Elem(0); m * m];
    for (i, &a) in members.iter().enumerate() {
        for (j, &b) in members.iter().enumerate() {
            leq[i * m + j] = l.leq(a, b);
            meet[i * m + j] = local(l.meet(a, b));
            join[i * m + j] = local(l.join(a, b));
        }
    }
    let ortho = members.iter().map(|&q| local(l.meet(p, l.ortho(q)))).collect();
    let labels = members.iter().map(|&q| l.label(q).to_string()).collect();
    let oml = Oml::from_tables(
        format!("interval({},{})", l.name(), l.label(p)),
        labels,
        leq,
        ortho,
        meet,
        join,
        local(l.bottom()),
        local(p),
    );
    Interval { oml, top: p, to_parent: members, from_parent }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::validate_oml;

    #[test]
    fn interval_below_an_atom_is_a_two_chain() {
        let l = mo(2);
        let iv = l.interval(l.find("a1").unwrap());
        assert_eq!(iv.oml.len(), 2);
        assert_eq!(iv.oml.labels(), ["0", "a1"]);
        assert!(validate_oml(&iv.oml.to_raw()).unwrap().ok);
    }

    #[test]
    fn interval_at_top_is_the_lattice() {
        for l in [mo(2), boolean(3), crate::lattice::pasting::d16()] {
            let iv = l.interval(l.top());
            assert!(iv.oml.same_tables(&l));
            for p in l.elements() {
                assert_eq!(iv.to_parent(p), p);
            }
        }
    }

    #[test]
    fn interval_of_product_recovers_factor() {
        let l = direct_product(&[mo(2), boolean(1)]).unwrap();
        let p = l.find("(1,0)").unwrap();
        let iv = l.interval(p);
        assert_eq!(iv.oml.len(), 6);
        assert!(iv.oml.is_isomorphic(&mo(2)));
    }

    #[test]
    fn intervals_validate_and_agree_with_parent() {
        let l = direct_product(&[mo(2), boolean(1)]).unwrap();
        for p in l.elements() {
            let iv = l.interval(p);
            let report = validate_oml(&iv.oml.to_raw()).unwrap();
            assert!(report.ok, "interval at {} fails: {}", l.label(p), report.summary());
            for a in iv.oml.elements() {
                for b in iv.oml.elements() {
                    assert_eq!(iv.to_parent(iv.oml.meet(a, b)), l.meet(iv.to_parent(a), iv.to_parent(b)));
                    assert_eq!(iv.to_parent(iv.oml.join(a, b)), l.join(iv.to_parent(a), iv.to_parent(b)));
                }
            }
        }
    }

    #[test]
    fn products() {
        let sq = direct_product(&[boolean(1), boolean(1)]).unwrap();
        assert!(sq.is_isomorphic(&boolean(2)));
        let l = direct_product(&[mo(2), boolean(1)]).unwrap();
        assert_eq!(l.len(), 12);
        assert!(validate_oml(&l.to_raw()).unwrap().ok);
        let single = direct_product(&[mo(3)]).unwrap();
        assert!(single.same_tables(&mo(3)));
        assert!(matches!(direct_product(&[]), Err(Error::Input(_))));
    }
}

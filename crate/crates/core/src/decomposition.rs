//! Classification of central elements relative to a TD set, and the
//! fundamental and type I/II/III decompositions.
//!
//! Every decomposition is computed twice: from the type-cover formulas and
//! by searching all central tuples for the unique one whose members carry
//! the required labels. Disagreement is reported as
//! [`Error::Inconsistent`].

use serde::Serialize;

use crate::central::{center, central_cover, is_central};
use crate::error::{Error, Result};
use crate::lattice::{Elem, Oml, ProjectionSet};
use crate::td::{ensure_td, gamma_image, restricted_type_cover, type_cover};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CentralClassification {
    pub is_type_q: bool,
    pub is_locally_type_q: bool,
    pub is_purely_non_q: bool,
    pub is_properly_non_q: bool,
}

/// The four labels of a central `c`, straight from their definitions.
struct Labels<'a> {
    l: &'a Oml,
    q: &'a ProjectionSet,
    gamma_q: ProjectionSet,
}

impl<'a> Labels<'a> {
    fn new(l: &'a Oml, q: &'a ProjectionSet) -> Self {
        Labels { l, q, gamma_q: gamma_image(l, q) }
    }

    fn type_q(&self, c: Elem) -> bool {
        self.q.contains(c)
    }

    fn locally(&self, c: Elem) -> bool {
        self.gamma_q.contains(c)
    }

    fn purely_non(&self, c: Elem) -> bool {
        let l = self.l;
        !self.q.iter().any(|x| x != l.bottom() && l.leq(x, c))
    }

    fn properly_non(&self, c: Elem) -> bool {
        let l = self.l;
        !self.q.iter().any(|x| x != l.bottom() && l.leq(x, c) && is_central(l, x))
    }

    fn classify(&self, c: Elem) -> CentralClassification {
        CentralClassification {
            is_type_q: self.type_q(c),
            is_locally_type_q: self.locally(c),
            is_purely_non_q: self.purely_non(c),
            is_properly_non_q: self.properly_non(c),
        }
    }
}

fn require_central(l: &Oml, c: Elem) -> Result<()> {
    l.check(c)?;
    if is_central(l, c) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{} is not central", l.label(c))))
    }
}

pub fn classify_central(l: &Oml, q: &ProjectionSet, c: Elem) -> Result<CentralClassification> {
    require_central(l, c)?;
    let c_q = type_cover(l, q)?;
    let c_qc = restricted_type_cover(l, q)?;
    let direct = Labels::new(l, q).classify(c);
    let by_covers = CentralClassification {
        is_type_q: l.leq(c, c_qc),
        is_locally_type_q: l.leq(c, c_q),
        is_purely_non_q: l.leq(c, l.ortho(c_q)),
        is_properly_non_q: l.leq(c, l.ortho(c_qc)),
    };
    if direct != by_covers {
        return Err(Error::Inconsistent(format!(
            "classification of {} disagrees: definitions give {direct:?}, type covers give {by_covers:?}",
            l.label(c)
        )));
    }
    Ok(direct)
}

/// An element with its label, as it appears in reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Labeled {
    pub index: usize,
    pub label: String,
}

impl Labeled {
    pub fn new(l: &Oml, e: Elem) -> Labeled {
        Labeled { index: e.0, label: l.label(e).to_string() }
    }

    pub fn elem(&self) -> Elem {
        Elem(self.index)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fundamental {
    pub c1: Elem,
    pub c2: Elem,
    pub c3: Elem,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TypeSplit {
    pub c_i: Elem,
    pub c_ii: Elem,
    pub c_iii: Elem,
    pub c_ik: Elem,
    pub c_ikt: Elem,
    pub c_iik: Elem,
    pub c_iikt: Elem,
    pub c11: Elem,
    pub c21: Elem,
}

/// Every tuple of central elements satisfying `accept`, in index order.
fn search<const N: usize>(l: &Oml, accept: impl Fn(&[Elem; N]) -> bool) -> Vec<[Elem; N]> {
    let cs = center(l).to_vec();
    let mut out = Vec::new();
    let mut idx = [0usize; N];
    if cs.is_empty() {
        return out;
    }
    loop {
        let tuple: [Elem; N] = std::array::from_fn(|i| cs[idx[i]]);
        if accept(&tuple) {
            out.push(tuple);
        }
        let mut k = 0;
        loop {
            if k == N {
                return out;
            }
            idx[k] += 1;
            if idx[k] < cs.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Pairwise orthogonal with the given join.
fn partitions(l: &Oml, parts: &[Elem], whole: Elem) -> bool {
    parts.iter().enumerate().all(|(i, &a)| parts[i + 1..].iter().all(|&b| l.is_orthogonal(a, b)))
        && l.join_all(parts.iter().copied()) == whole
}

fn unique<const N: usize>(found: Vec<[Elem; N]>, what: &str) -> Result<[Elem; N]> {
    match found.as_slice() {
        [one] => Ok(*one),
        _ => Err(Error::Inconsistent(format!(
            "{what}: expected exactly one central tuple with the required labels, found {}",
            found.len()
        ))),
    }
}

fn mismatch(l: &Oml, what: &str, closed: &[Elem], searched: &[Elem]) -> Error {
    let show = |v: &[Elem]| v.iter().map(|&e| l.label(e)).collect::<Vec<_>>().join(", ");
    Error::Inconsistent(format!(
        "{what}: closed form ({}) differs from label search ({})",
        show(closed),
        show(searched)
    ))
}

/// `c₁ = c_{Q∩C}`, `c₂ = c_Q ∧ c₁^⊥`, `c₃ = c_Q^⊥`, cross-checked against
/// the unique central triple that partitions `1` into a type-Q, a locally
/// type-Q but properly non-Q and a purely non-Q part.
pub fn fundamental_decomposition(l: &Oml, q: &ProjectionSet) -> Result<Fundamental> {
    let c_q = type_cover(l, q)?;
    let c1 = restricted_type_cover(l, q)?;
    let closed = [c1, l.meet(c_q, l.ortho(c1)), l.ortho(c_q)];

    let lab = Labels::new(l, q);
    let found = unique(
        search::<3>(l, |&[a, b, c]| {
            partitions(l, &[a, b, c], l.top())
                && lab.type_q(a)
                && lab.locally(b)
                && lab.properly_non(b)
                && lab.purely_non(c)
        }),
        "fundamental decomposition",
    )?;
    if found != closed {
        return Err(mismatch(l, "fundamental decomposition", &closed, &found));
    }
    Ok(Fundamental { c1: closed[0], c2: closed[1], c3: closed[2] })
}

/// The type I/II/III decomposition for TD sets `Q ⊆ K`, with its refinement
/// into I_K, I_K̃, II_K, II_K̃ and of I_K into `c₁₁`, `c₂₁`.
///
/// I_K̃ is read as "type I and properly non-K", matching II_K̃.
pub fn type_split(l: &Oml, q: &ProjectionSet, k: &ProjectionSet) -> Result<TypeSplit> {
    ensure_td(l, q, "Q")?;
    ensure_td(l, k, "K")?;
    if !q.is_subset(k) {
        return Err(Error::Precondition("Q is not contained in K".into()));
    }
    let c_q = type_cover(l, q)?;
    let c_k = type_cover(l, k)?;
    let c_qc = restricted_type_cover(l, q)?;
    let c_kc = restricted_type_cover(l, k)?;
    let (nq, nk, nkc, nqc) = (l.ortho(c_q), l.ortho(c_k), l.ortho(c_kc), l.ortho(c_qc));
    let closed = TypeSplit {
        c_i: c_q,
        c_ii: l.meet(c_k, nq),
        c_iii: nk,
        c_ik: l.meet(c_q, c_kc),
        c_ikt: l.meet(c_q, nkc),
        c_iik: l.meet(c_kc, nq),
        c_iikt: l.meet(l.meet(c_k, nkc), nq),
        c11: c_qc,
        c21: l.meet(l.meet(c_kc, c_q), nqc),
    };

    let lq = Labels::new(l, q);
    let lk = Labels::new(l, k);
    let type_i = |c: Elem| lq.locally(c);
    let type_ii = |c: Elem| lk.locally(c) && lq.purely_non(c);
    let type_iii = |c: Elem| lk.purely_non(c);

    let [c_i, c_ii, c_iii] = unique(
        search::<3>(l, |&[a, b, c]| {
            partitions(l, &[a, b, c], l.top()) && type_i(a) && type_ii(b) && type_iii(c)
        }),
        "type I/II/III decomposition",
    )?;
    let [c_ik, c_ikt] = unique(
        search::<2>(l, |&[a, b]| {
            partitions(l, &[a, b], c_i)
                && type_i(a)
                && lk.type_q(a)
                && type_i(b)
                && lk.properly_non(b)
        }),
        "type I refinement",
    )?;
    let [c_iik, c_iikt] = unique(
        search::<2>(l, |&[a, b]| {
            partitions(l, &[a, b], c_ii)
                && type_ii(a)
                && lk.type_q(a)
                && type_ii(b)
                && lk.properly_non(b)
        }),
        "type II refinement",
    )?;
    let [c11, c21] = unique(
        search::<2>(l, |&[a, b]| {
            partitions(l, &[a, b], c_ik)
                && lq.type_q(a)
                && lk.type_q(b)
                && lq.locally(b)
                && lq.properly_non(b)
        }),
        "type I_K refinement",
    )?;
    let searched = TypeSplit { c_i, c_ii, c_iii, c_ik, c_ikt, c_iik, c_iikt, c11, c21 };
    if searched != closed {
        let flat = |t: &TypeSplit| {
            [t.c_i, t.c_ii, t.c_iii, t.c_ik, t.c_ikt, t.c_iik, t.c_iikt, t.c11, t.c21]
        };
        return Err(mismatch(l, "type decomposition", &flat(&closed), &flat(&searched)));
    }
    Ok(closed)
}

#[derive(Clone, Debug, Serialize)]
pub struct TypeCovers {
    #[serde(rename = "c_Q")]
    pub c_q: Labeled,
    #[serde(rename = "c_QC")]
    pub c_qc: Labeled,
    #[serde(rename = "c_K")]
    pub c_k: Labeled,
    #[serde(rename = "c_KC")]
    pub c_kc: Labeled,
}

/// Both decompositions for a pair `Q ⊆ K`, in report form.
#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub c1: Labeled,
    pub c2: Labeled,
    pub c3: Labeled,
    #[serde(rename = "cI")]
    pub c_i: Labeled,
    #[serde(rename = "cII")]
    pub c_ii: Labeled,
    #[serde(rename = "cIII")]
    pub c_iii: Labeled,
    #[serde(rename = "cIK")]
    pub c_ik: Labeled,
    #[serde(rename = "cIKt")]
    pub c_ikt: Labeled,
    #[serde(rename = "cIIK")]
    pub c_iik: Labeled,
    #[serde(rename = "cIIKt")]
    pub c_iikt: Labeled,
    pub c11: Labeled,
    pub c21: Labeled,
    pub covers: TypeCovers,
}

pub fn type_decomposition(l: &Oml, q: &ProjectionSet, k: &ProjectionSet) -> Result<DecompositionReport> {
    let t = type_split(l, q, k)?;
    let f = fundamental_decomposition(l, q)?;
    let lab = |e| Labeled::new(l, e);
    Ok(DecompositionReport {
        c1: lab(f.c1),
        c2: lab(f.c2),
        c3: lab(f.c3),
        c_i: lab(t.c_i),
        c_ii: lab(t.c_ii),
        c_iii: lab(t.c_iii),
        c_ik: lab(t.c_ik),
        c_ikt: lab(t.c_ikt),
        c_iik: lab(t.c_iik),
        c_iikt: lab(t.c_iikt),
        c11: lab(t.c11),
        c21: lab(t.c21),
        covers: TypeCovers {
            c_q: lab(type_cover(l, q)?),
            c_qc: lab(restricted_type_cover(l, q)?),
            c_k: lab(type_cover(l, k)?),
            c_kc: lab(restricted_type_cover(l, k)?),
        },
    })
}

/// The five equivalent characterizations of a type I central element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AltTypeI {
    /// `c ∈ γ(Q)`.
    pub locally_type_q: bool,
    /// Some `q ∈ Q` has `γq = c`.
    pub cover_attained: bool,
    /// Some `q ∈ Q ∩ [0, c]` is faithful in `[0, c]`.
    pub faithful_in_interval: bool,
    /// Every nonzero central `d ≤ c` lies above a nonzero member of `Q`.
    pub summands_meet_q: bool,
    /// `c ≤ c_Q`.
    pub below_type_cover: bool,
    pub witness: Option<Elem>,
}

impl AltTypeI {
    pub fn all(&self) -> bool {
        self.locally_type_q
            && self.cover_attained
            && self.faithful_in_interval
            && self.summands_meet_q
            && self.below_type_cover
    }

    pub fn none(&self) -> bool {
        !(self.locally_type_q
            || self.cover_attained
            || self.faithful_in_interval
            || self.summands_meet_q
            || self.below_type_cover)
    }
}

pub fn alt_type_i_conditions(l: &Oml, q: &ProjectionSet, c: Elem) -> Result<AltTypeI> {
    require_central(l, c)?;
    let c_q = type_cover(l, q)?;
    let locally_type_q = gamma_image(l, q).contains(c);
    let witness = q.iter().find(|&x| central_cover(l, x) == c);
    let iv = l.interval(c);
    let faithful_in_interval = q.iter().filter(|&x| l.leq(x, c)).any(|x| {
        let local = iv.from_parent(x).expect("x lies below c");
        central_cover(&iv.oml, local) == iv.oml.top()
    });
    let summands_meet_q = center(l)
        .iter()
        .filter(|&d| d != l.bottom() && l.leq(d, c))
        .all(|d| q.iter().any(|x| x != l.bottom() && l.leq(x, d)));
    let report = AltTypeI {
        locally_type_q,
        cover_attained: witness.is_some(),
        faithful_in_interval,
        summands_meet_q,
        below_type_cover: l.leq(c, c_q),
        witness,
    };
    if !(report.all() || report.none()) {
        return Err(Error::Inconsistent(format!(
            "type I characterizations of {} disagree: {report:?}",
            l.label(c)
        )));
    }
    Ok(report)
}

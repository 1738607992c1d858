use serde::Serialize;

use super::Elem;
use crate::error::{Error, Result};

/// An unvalidated lattice candidate: a full order relation and an
/// orthocomplement map over `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawOml {
    pub labels: Vec<String>,
    pub leq: Vec<Vec<bool>>,
    pub ortho: Vec<usize>,
}

impl RawOml {
    pub fn len(&self) -> usize {
        self.leq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leq.is_empty()
    }

    /// Builds the relation as the reflexive-transitive closure of a set of
    /// `(lower, upper)` pairs, e.g. a Hasse diagram.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)], ortho: Vec<usize>) -> Result<RawOml> {
        let n = labels.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(lo, hi) in covers {
            if lo >= n || hi >= n {
                return Err(Error::Structure(format!(
                    "cover ({lo}, {hi}) refers to an element outside 0..{n}"
                )));
            }
            leq[lo][hi] = true;
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        Ok(RawOml { labels, leq, ortho })
    }
}

/// The axioms checked by [`validate_oml`], in checking order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    Reflexive,
    Antisymmetric,
    Transitive,
    HasBottom,
    HasTop,
    MeetExists,
    JoinExists,
    OrthoInvolution,
    OrthoOrderReversing,
    OrthoComplement,
    OrthomodularLaw,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Reflexive => "reflexive",
            Axiom::Antisymmetric => "antisymmetric",
            Axiom::Transitive => "transitive",
            Axiom::HasBottom => "has-bottom",
            Axiom::HasTop => "has-top",
            Axiom::MeetExists => "meet-exists",
            Axiom::JoinExists => "join-exists",
            Axiom::OrthoInvolution => "ortho-involution",
            Axiom::OrthoOrderReversing => "ortho-order-reversing",
            Axiom::OrthoComplement => "ortho-complement",
            Axiom::OrthomodularLaw => "orthomodular-law",
        }
    }
}

/// One violated axiom together with the first witness found in index order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

impl Failure {
    /// Re-checks this failure against `raw` using only the relation and the
    /// orthocomplement map. Returns `true` iff the failure is reproduced.
    pub fn replay(&self, raw: &RawOml) -> bool {
        let leq = &raw.leq;
        let o = &raw.ortho;
        let n = raw.len();
        let w = &self.witness;
        match self.axiom {
            Axiom::Reflexive => !leq[w[0]][w[0]],
            Axiom::Antisymmetric => w[0] != w[1] && leq[w[0]][w[1]] && leq[w[1]][w[0]],
            Axiom::Transitive => leq[w[0]][w[1]] && leq[w[1]][w[2]] && !leq[w[0]][w[2]],
            Axiom::HasBottom => !(0..n).any(|b| (0..n).all(|p| leq[b][p])),
            Axiom::HasTop => !(0..n).any(|t| (0..n).all(|p| leq[p][t])),
            Axiom::MeetExists => brute_glb(raw, w[0], w[1]).is_none(),
            Axiom::JoinExists => brute_lub(raw, w[0], w[1]).is_none(),
            Axiom::OrthoInvolution => o[o[w[0]]] != w[0],
            Axiom::OrthoOrderReversing => leq[w[0]][w[1]] && !leq[o[w[1]]][o[w[0]]],
            Axiom::OrthoComplement => {
                let p = w[0];
                let top = (0..n).find(|&t| (0..n).all(|q| leq[q][t]));
                let bot = (0..n).find(|&b| (0..n).all(|q| leq[b][q]));
                brute_lub(raw, p, o[p]) != top || brute_glb(raw, p, o[p]) != bot
            }
            Axiom::OrthomodularLaw => {
                let (p, q) = (w[0], w[1]);
                if !leq[p][q] {
                    return false;
                }
                let Some(m) = brute_glb(raw, q, o[p]) else {
                    return false;
                };
                brute_lub(raw, p, m) != Some(q)
            }
        }
    }
}

/// Outcome of axiom checking. `ok` iff `failures` is empty.
#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    pub(crate) tables: Option<Tables>,
}

impl ValidationReport {
    pub fn summary(&self) -> String {
        if self.ok {
            return "ok".to_string();
        }
        self.failures
            .iter()
            .map(|f| format!("{} at {:?}", f.axiom.name(), f.witness))
            .collect::<Vec<_>>()
            .join("; ")
    }

    pub fn first_failure(&self) -> Option<&Failure> {
        self.failures.first()
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Tables {
    pub meet: Vec<Elem>,
    pub join: Vec<Elem>,
    pub bottom: Elem,
    pub top: Elem,
}

fn brute_glb(raw: &RawOml, p: usize, q: usize) -> Option<usize> {
    let n = raw.len();
    let lower: Vec<usize> = (0..n).filter(|&x| raw.leq[x][p] && raw.leq[x][q]).collect();
    let found: Vec<usize> = lower
        .iter()
        .copied()
        .filter(|&g| lower.iter().all(|&x| raw.leq[x][g]))
        .collect();
    (found.len() == 1).then(|| found[0])
}

fn brute_lub(raw: &RawOml, p: usize, q: usize) -> Option<usize> {
    let n = raw.len();
    let upper: Vec<usize> = (0..n).filter(|&x| raw.leq[p][x] && raw.leq[q][x]).collect();
    let found: Vec<usize> = upper
        .iter()
        .copied()
        .filter(|&g| upper.iter().all(|&x| raw.leq[g][x]))
        .collect();
    (found.len() == 1).then(|| found[0])
}

fn check_structure(raw: &RawOml) -> Result<()> {
    let n = raw.len();
    if n == 0 {
        return Err(Error::Structure("a lattice needs at least one element".into()));
    }
    if let Some((i, row)) = raw.leq.iter().enumerate().find(|(_, row)| row.len() != n) {
        return Err(Error::Structure(format!(
            "order relation is not square: row {i} has {} entries, expected {n}",
            row.len()
        )));
    }
    if raw.ortho.len() != n {
        return Err(Error::Structure(format!(
            "ortho map has {} entries, expected {n}",
            raw.ortho.len()
        )));
    }
    if !raw.labels.is_empty() && raw.labels.len() != n {
        return Err(Error::Structure(format!(
            "{} labels given for {n} elements",
            raw.labels.len()
        )));
    }
    let mut seen = vec![false; n];
    for (i, &img) in raw.ortho.iter().enumerate() {
        if img >= n {
            return Err(Error::Structure(format!("ortho({i}) = {img} is out of range")));
        }
        if std::mem::replace(&mut seen[img], true) {
            return Err(Error::Structure(format!(
                "ortho is not a permutation: {img} is hit twice"
            )));
        }
    }
    Ok(())
}

/// Checks every OML axiom on `raw`.
///
/// Axioms are checked in stages (order, lattice, orthocomplement,
/// orthomodularity); a stage only runs when the previous ones passed, since
/// its checks presuppose them. Within a stage each violated axiom is reported
/// once, with the lexicographically first witness.
pub fn validate_oml(raw: &RawOml) -> Result<ValidationReport> {
    check_structure(raw)?;
    let n = raw.len();
    let leq = &raw.leq;
    let o = &raw.ortho;
    let fail = |failures: Vec<Failure>| Ok(ValidationReport { ok: false, failures, tables: None });

    // order
    let mut failures = Vec::new();
    if let Some(p) = (0..n).find(|&p| !leq[p][p]) {
        failures.push(Failure { axiom: Axiom::Reflexive, witness: vec![p] });
    }
    'anti: for p in 0..n {
        for q in p + 1..n {
            if leq[p][q] && leq[q][p] {
                failures.push(Failure { axiom: Axiom::Antisymmetric, witness: vec![p, q] });
                break 'anti;
            }
        }
    }
    'trans: for p in 0..n {
        for q in 0..n {
            if !leq[p][q] {
                continue;
            }
            for r in 0..n {
                if leq[q][r] && !leq[p][r] {
                    failures.push(Failure { axiom: Axiom::Transitive, witness: vec![p, q, r] });
                    break 'trans;
                }
            }
        }
    }
    if !failures.is_empty() {
        return fail(failures);
    }

    // lattice
    let bottom = (0..n).find(|&b| (0..n).all(|p| leq[b][p]));
    let top = (0..n).find(|&t| (0..n).all(|p| leq[p][t]));
    if bottom.is_none() {
        failures.push(Failure { axiom: Axiom::HasBottom, witness: vec![] });
    }
    if top.is_none() {
        failures.push(Failure { axiom: Axiom::HasTop, witness: vec![] });
    }
    // Number of elements below / above each element; the glb of p and q is
    // the common lower bound with the most elements below it, provided every
    // other common lower bound is below it.
    let down: Vec<usize> = (0..n).map(|p| (0..n).filter(|&x| leq[x][p]).count()).collect();
    let up: Vec<usize> = (0..n).map(|p| (0..n).filter(|&x| leq[p][x]).count()).collect();
    let mut meet = vec![Elem(0); n * n];
    let mut join = vec![Elem(0); n * n];
    let mut meet_fail = None;
    let mut join_fail = None;
    let mut bounds = Vec::with_capacity(n);
    for p in 0..n {
        for q in 0..n {
            bounds.clear();
            bounds.extend((0..n).filter(|&x| leq[x][p] && leq[x][q]));
            let cand = bounds.iter().copied().max_by_key(|&x| (down[x], std::cmp::Reverse(x)));
            match cand.filter(|&g| bounds.iter().all(|&x| leq[x][g])) {
                Some(g) => meet[p * n + q] = Elem(g),
                None => {
                    meet_fail.get_or_insert(vec![p, q]);
                }
            }
            bounds.clear();
            bounds.extend((0..n).filter(|&x| leq[p][x] && leq[q][x]));
            let cand = bounds.iter().copied().max_by_key(|&x| (up[x], std::cmp::Reverse(x)));
            match cand.filter(|&g| bounds.iter().all(|&x| leq[g][x])) {
                Some(g) => join[p * n + q] = Elem(g),
                None => {
                    join_fail.get_or_insert(vec![p, q]);
                }
            }
        }
    }
    if let Some(w) = meet_fail {
        failures.push(Failure { axiom: Axiom::MeetExists, witness: w });
    }
    if let Some(w) = join_fail {
        failures.push(Failure { axiom: Axiom::JoinExists, witness: w });
    }
    if !failures.is_empty() {
        return fail(failures);
    }
    let (bottom, top) = (bottom.unwrap(), top.unwrap());

    // orthocomplement
    if let Some(p) = (0..n).find(|&p| o[o[p]] != p) {
        failures.push(Failure { axiom: Axiom::OrthoInvolution, witness: vec![p] });
    }
    'rev: for p in 0..n {
        for q in 0..n {
            if leq[p][q] && !leq[o[q]][o[p]] {
                failures.push(Failure { axiom: Axiom::OrthoOrderReversing, witness: vec![p, q] });
                break 'rev;
            }
        }
    }
    if let Some(p) = (0..n).find(|&p| join[p * n + o[p]].0 != top || meet[p * n + o[p]].0 != bottom) {
        failures.push(Failure { axiom: Axiom::OrthoComplement, witness: vec![p] });
    }
    if !failures.is_empty() {
        return fail(failures);
    }

    // orthomodular law: p ≤ q ⇒ q = p ∨ (q ∧ p^⊥)
    'om: for p in 0..n {
        for q in 0..n {
            if !leq[p][q] {
                continue;
            }
            let m = meet[q * n + o[p]].0;
            if join[p * n + m].0 != q {
                failures.push(Failure { axiom: Axiom::OrthomodularLaw, witness: vec![p, q] });
                break 'om;
            }
        }
    }
    if !failures.is_empty() {
        return fail(failures);
    }

    Ok(ValidationReport {
        ok: true,
        failures,
        tables: Some(Tables { meet, join, bottom: Elem(bottom), top: Elem(top) }),
    })
}

//! Pastings of boolean blocks described by a Greechie-style diagram: a list
//! of atoms and a list of blocks (maximal orthogonal sets of atoms). Each
//! block contributes the boolean algebra of its subsets; two block elements
//! are identified when they have the same atoms or the same complementary
//! atoms. The result is only accepted if it validates as an OML.

use std::collections::HashMap;

use super::{Oml, RawOml};
use crate::error::{Error, Result};

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

pub fn from_blocks(name: &str, atoms: &[&str], blocks: &[Vec<usize>]) -> Result<Oml> {
    if atoms.len() > 64 {
        return Err(Error::Input("at most 64 atoms are supported".into()));
    }
    if blocks.is_empty() {
        return Err(Error::Input("a pasting needs at least one block".into()));
    }
    for b in blocks {
        if b.is_empty() || b.len() > 16 {
            return Err(Error::Input(format!("block {b:?} must have between 1 and 16 atoms")));
        }
        if let Some(&a) = b.iter().find(|&&a| a >= atoms.len()) {
            return Err(Error::Input(format!("block {b:?} refers to unknown atom {a}")));
        }
    }
    let block_mask: Vec<u64> = blocks.iter().map(|b| b.iter().fold(0, |m, &a| m | 1 << a)).collect();

    // nodes: (block, subset of that block as an atom mask)
    let mut nodes: Vec<(usize, u64)> = Vec::new();
    for (bi, b) in blocks.iter().enumerate() {
        for sub in 0u32..(1 << b.len()) {
            let mask = b
                .iter()
                .enumerate()
                .filter(|(k, _)| sub >> k & 1 == 1)
                .fold(0u64, |m, (_, &a)| m | 1 << a);
            nodes.push((bi, mask));
        }
    }
    let mut uf = UnionFind((0..nodes.len()).collect());
    let mut by_atoms: HashMap<u64, usize> = HashMap::new();
    let mut by_complement: HashMap<u64, usize> = HashMap::new();
    for (i, &(bi, mask)) in nodes.iter().enumerate() {
        let comp = block_mask[bi] & !mask;
        if let Some(&j) = by_atoms.get(&mask) {
            uf.union(i, j);
        } else {
            by_atoms.insert(mask, i);
        }
        if let Some(&j) = by_complement.get(&comp) {
            uf.union(i, j);
        } else {
            by_complement.insert(comp, i);
        }
    }

    let mut class_of_root: HashMap<usize, usize> = HashMap::new();
    let mut members: Vec<Vec<usize>> = Vec::new();
    for i in 0..nodes.len() {
        let r = uf.find(i);
        let c = *class_of_root.entry(r).or_insert_with(|| {
            members.push(Vec::new());
            members.len() - 1
        });
        members[c].push(i);
    }

    // (category, ordinal) sort key and label per class
    let describe = |ms: &[usize]| -> ((u8, u64), String) {
        let is_full = ms.iter().any(|&i| nodes[i].1 == block_mask[nodes[i].0]);
        if is_full {
            return ((4, 0), "1".into());
        }
        if ms.iter().any(|&i| nodes[i].1 == 0) {
            return ((0, 0), "0".into());
        }
        if let Some(&i) = ms.iter().find(|&&i| nodes[i].1.count_ones() == 1) {
            let a = nodes[i].1.trailing_zeros() as usize;
            return ((1, a as u64), atoms[a].to_string());
        }
        if let Some(&i) = ms
            .iter()
            .find(|&&i| (block_mask[nodes[i].0] & !nodes[i].1).count_ones() == 1)
        {
            let a = (block_mask[nodes[i].0] & !nodes[i].1).trailing_zeros() as usize;
            return ((2, a as u64), format!("{}'", atoms[a]));
        }
        let mask = ms.iter().map(|&i| nodes[i].1).min_by_key(|m| (m.count_ones(), *m)).unwrap();
        let parts: Vec<&str> = (0..atoms.len()).filter(|a| mask >> a & 1 == 1).map(|a| atoms[a]).collect();
        ((3, mask), parts.join("+"))
    };
    let mut classes: Vec<((u8, u64), String, Vec<usize>)> = members
        .into_iter()
        .map(|ms| {
            let (key, label) = describe(&ms);
            (key, label, ms)
        })
        .collect();
    classes.sort_by(|a, b| a.0.cmp(&b.0));

    let n = classes.len();
    let mut elem_of_node = vec![0usize; nodes.len()];
    for (e, (_, _, ms)) in classes.iter().enumerate() {
        for &i in ms {
            elem_of_node[i] = e;
        }
    }
    let mut node_of: HashMap<(usize, u64), usize> = HashMap::new();
    for (i, &k) in nodes.iter().enumerate() {
        node_of.insert(k, i);
    }
    let mut pairs = Vec::new();
    let mut ortho = vec![usize::MAX; n];
    for (i, &(bi, mask)) in nodes.iter().enumerate() {
        let e = elem_of_node[i];
        let comp = node_of[&(bi, block_mask[bi] & !mask)];
        let oe = elem_of_node[comp];
        if ortho[e] != usize::MAX && ortho[e] != oe {
            return Err(Error::Input(format!(
                "pasting {name} identifies elements with different orthocomplements"
            )));
        }
        ortho[e] = oe;
        for (j, &(bj, mask2)) in nodes.iter().enumerate() {
            if bj == bi && mask & !mask2 == 0 {
                pairs.push((e, elem_of_node[j]));
            }
        }
    }
    let labels = classes.into_iter().map(|(_, l, _)| l).collect();
    let raw = RawOml::from_covers(labels, &pairs, ortho)?;
    Oml::new(name, raw)
}

/// Three 3-atom blocks in a chain, `{a,b,c}`, `{c,d,e}`, `{e,f,g}`: a
/// 16-element OML that is not modular.
pub fn d16() -> Oml {
    from_blocks(
        "d16",
        &["a", "b", "c", "d", "e", "f", "g"],
        &[vec![0, 1, 2], vec![2, 3, 4], vec![4, 5, 6]],
    )
    .expect("the three-block chain is an OML")
}

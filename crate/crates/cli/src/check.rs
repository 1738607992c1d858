use omlkit::central::{carprod_iso, central_cover, is_centrally_orthogonal};
use omlkit::decomposition::type_decomposition;
use omlkit::lattice::catalog::{self, CORPUS};
use omlkit::lattice::io::load_oml;
use omlkit::matrix::sample::{random_exchange_instance, random_projection_with_ranks, random_ranks};
use omlkit::matrix::{equivalence_witness, exchange_symmetry_orthogonal, BlockAlgebra};
use omlkit::td::{classify_set, std_closure, td_closure};
use omlkit::{Elem, Error, Oml, ProjectionSet, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::Output;

const SHAPES: [&[usize]; 5] = [&[2], &[3], &[2, 1], &[2, 2], &[3, 2]];

#[derive(Default)]
struct Tally {
    cases: usize,
    failures: usize,
    first: Option<String>,
}

impl Tally {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            self.first.get_or_insert_with(what);
        }
    }

    fn json(&self, name: &str) -> Value {
        json!({"name": name, "cases": self.cases, "failures": self.failures, "first_failure": self.first})
    }
}

fn seed_from_env() -> Result<u64, Error> {
    match std::env::var("OML_SEED") {
        Ok(s) => s.trim().parse().map_err(|_| Error::Input(format!("OML_SEED `{s}` is not an unsigned integer"))),
        Err(_) => Ok(0),
    }
}

fn subset(l: &Oml, r: &mut ChaCha8Rng, density: f64) -> ProjectionSet {
    ProjectionSet::filter(l, |_| r.gen_bool(density))
}

fn sweep_lattice(l: &Oml, r: &mut ChaCha8Rng, samples: usize, t: &mut [Tally; 4]) {
    for _ in 0..samples {
        let density = r.gen_range(0.01..0.3);
        let raw = subset(l, r, density);
        let q = td_closure(l, &raw);
        let s = std_closure(l, &raw);
        let ok = classify_set(l, &q).is_ok_and(|c| c.is_td) && classify_set(l, &s).is_ok_and(|c| c.is_std);
        t[0].record(ok, || format!("{}: closures", l.name()));

        let fam: Vec<Elem> = l.elements().filter(|_| r.gen_bool(0.1)).collect();
        let lhs = central_cover(l, l.join_all(fam.iter().copied()));
        let rhs = l.join_all(fam.iter().map(|&p| central_cover(l, p)));
        t[1].record(lhs == rhs, || format!("{}: γ on {fam:?}", l.name()));

        let k = td_closure(l, &q.union(&subset(l, r, 0.1)));
        let res = type_decomposition(l, &q, &k);
        t[2].record(res.is_ok(), || format!("{}: {}", l.name(), res.err().map(|e| e.to_string()).unwrap_or_default()));

        let a = Elem(r.gen_range(0..l.len()));
        let b = Elem(r.gen_range(0..l.len()));
        if is_centrally_orthogonal(l, &[a, b]) {
            let ok = carprod_iso(l, &[a, b]).is_ok_and(|rep| rep.is_isomorphism());
            t[3].record(ok, || format!("{}: Φ on ({}, {})", l.name(), l.label(a), l.label(b)));
        }
    }
}

pub fn run(inputs: &[String], seed: Option<u64>, samples: usize) -> Result<Output, Error> {
    let seed = match seed {
        Some(s) => s,
        None => seed_from_env()?,
    };
    let lattices: Vec<Oml> = if inputs.is_empty() {
        CORPUS.iter().map(|t| catalog::load(t)).collect::<Result<_, _>>()?
    } else {
        inputs.iter().map(|i| load_oml(i)).collect::<Result<_, _>>()?
    };
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    let mut lt: [Tally; 4] = Default::default();
    for l in &lattices {
        sweep_lattice(l, &mut r, samples, &mut lt);
    }

    let mut exact = Tally::default();
    let mut float = Tally::default();
    for dims in SHAPES {
        let alg = BlockAlgebra::new(dims.to_vec())?;
        for _ in 0..samples {
            let inst = random_exchange_instance::<Rational, _>(&alg, &mut r);
            let ok = exchange_symmetry_orthogonal(&inst.p, &inst.q, &inst.x)
                .is_ok_and(|s| s.square() == alg.one() && s.conjugate(&inst.p) == *inst.q);
            exact.record(ok, || format!("exchange formula on {dims:?}"));

            let ranks = random_ranks(&alg, &mut r);
            let p = random_projection_with_ranks::<f64, _>(&alg, &ranks, &mut r);
            let q = random_projection_with_ranks::<f64, _>(&alg, &ranks, &mut r);
            let ok = matches!(equivalence_witness(&p, &q), Ok(Some(x)) if x.conjugate(&p).distance(&q) <= 1e-9);
            float.record(ok, || format!("equivalence witness on {dims:?}"));
        }
    }

    let checks = vec![
        lt[0].json("td-closures"),
        lt[1].json("central-cover-joins"),
        lt[2].json("type-decomposition"),
        lt[3].json("cartesian-product"),
        exact.json("exchange-formula-exact"),
        float.json("equivalence-witness-float"),
    ];
    let failures: usize = lt.iter().chain([&exact, &float]).map(|t| t.failures).sum();
    let v = json!({"seed": seed, "samples": samples, "lattices": lattices.len(), "ok": failures == 0, "checks": checks});
    Ok(Output { text: serde_json::to_string(&v).expect("serializes"), code: if failures == 0 { 0 } else { 2 } })
}

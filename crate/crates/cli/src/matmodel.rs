//! `matmodel` requests: `{"blocks": [n₁, …], "op": …, "mode": "exact" |
//! "float", …operands}`. Elements are nested arrays of `"num/den"` strings
//! or numbers, or `{"mode": …, "blocks": …}` objects.

use omlkit::matrix::io::{element_to_json, parse_algebra, parse_element, Mode};
use omlkit::matrix::{
    central_cover_m, chained_exchange, equivalence_witness, exchange_symmetry_orthogonal, extend_symmetry,
    generalized_comparability, jordan_product, localize_symmetry, projection_join, projection_meet,
    single_exchange_symmetry, BlockAlgebra, BlockMatrix, Projection, SaElement, Scalar, Symmetry, SymmetryWitness,
};
use omlkit::{Error, Rational};
use serde_json::{json, Value};

use crate::Output;

const OPS: &str = "jordan, cover, join, meet, exchange, localize, chained, witness, single-exchange, comparability";

struct Request {
    algebra: BlockAlgebra,
    body: Value,
}

impl Request {
    fn field(&self, name: &str) -> Result<&Value, Error> {
        self.body.get(name).ok_or_else(|| Error::Input(format!("request is missing `{name}`")))
    }

    fn matrix<T: Scalar>(&self, name: &str) -> Result<BlockMatrix<T>, Error> {
        parse_element(&self.algebra, self.field(name)?).map_err(|e| Error::Input(format!("`{name}`: {e}")))
    }

    fn list<T: Scalar>(&self, name: &str) -> Result<Vec<BlockMatrix<T>>, Error> {
        let items = self.field(name)?.as_array().ok_or_else(|| Error::Input(format!("`{name}` must be an array")))?;
        items.iter().map(|v| parse_element(&self.algebra, v)).collect()
    }

    fn sa<T: Scalar>(&self, name: &str) -> Result<SaElement<T>, Error> {
        SaElement::new(self.matrix(name)?).map_err(|e| Error::Input(format!("`{name}`: {e}")))
    }

    fn proj<T: Scalar>(&self, name: &str) -> Result<Projection<T>, Error> {
        Projection::new(self.matrix(name)?).map_err(|e| Error::Input(format!("`{name}`: {e}")))
    }

    fn sym<T: Scalar>(&self, name: &str) -> Result<Symmetry<T>, Error> {
        Symmetry::new(self.matrix(name)?).map_err(|e| Error::Input(format!("`{name}`: {e}")))
    }

    fn symmetries<T: Scalar>(&self, name: &str) -> Result<Vec<Symmetry<T>>, Error> {
        self.list(name)?.into_iter().map(Symmetry::new).collect()
    }
}

fn generic<T: Scalar>(op: &str, req: &Request) -> Result<Value, Error> {
    Ok(match op {
        "jordan" => element_to_json(jordan_product::<T>(&req.sa("a")?, &req.sa("b")?)?.as_matrix()),
        "cover" => element_to_json(&central_cover_m::<T>(&req.matrix("a")?)),
        "join" => element_to_json(projection_join::<T>(&req.proj("p")?, &req.proj("q")?)?.as_matrix()),
        "meet" => element_to_json(projection_meet::<T>(&req.proj("p")?, &req.proj("q")?)?.as_matrix()),
        "exchange" => {
            let x = SymmetryWitness::new(&req.algebra, req.symmetries::<T>("x")?)?;
            element_to_json(exchange_symmetry_orthogonal(&req.proj("p")?, &req.proj("q")?, &x)?.as_matrix())
        }
        "localize" => {
            let r = req.proj::<T>("r")?;
            let s1 = localize_symmetry(&r, &req.proj("p")?, &req.proj("q")?, &req.sym("s")?)?;
            let global = extend_symmetry(&r, &s1)?;
            json!({"local": element_to_json(&s1), "extended": element_to_json(&global)})
        }
        "chained" => {
            let family = req.list::<T>("family")?.into_iter().map(Projection::new).collect::<Result<Vec<_>, _>>()?;
            let pairs = chained_exchange(&family, &req.symmetries("steps")?)?;
            Value::Array(
                pairs.iter().map(|p| json!({"i": p.i, "j": p.j, "s": element_to_json(&p.symmetry)})).collect(),
            )
        }
        _ => return Err(Error::Input(format!("unknown op `{op}` (known: {OPS})"))),
    })
}

fn float_only(op: &str, req: &Request) -> Result<Value, Error> {
    Ok(match op {
        "witness" => match equivalence_witness::<f64>(&req.proj("p")?, &req.proj("q")?)? {
            Some(x) => json!({"equivalent": true, "factors": x.factors().iter().map(|s| element_to_json(s)).collect::<Vec<_>>()}),
            None => json!({"equivalent": false, "factors": null}),
        },
        "single-exchange" => element_to_json(single_exchange_symmetry::<f64>(&req.proj("p")?, &req.proj("q")?)?.as_matrix()),
        "comparability" => {
            let (e, f) = (req.proj::<f64>("e")?, req.proj::<f64>("f")?);
            let out = generalized_comparability(&e, &f)?;
            json!({
                "c": element_to_json(&out.c),
                "s": element_to_json(&out.s),
                "c_blocks": out.c_blocks,
                "e_ranks": out.e_ranks,
                "f_ranks": out.f_ranks,
                "inequalities": out.inequalities(&e, &f),
            })
        }
        _ => unreachable!(),
    })
}

pub fn run(path: &str, pretty: bool) -> Result<Output, Error> {
    let text = if path == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| Error::Input(format!("stdin: {e}")))?
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {path}: {e}")))?
    };
    let body: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    let algebra = parse_algebra(&body)?;
    let op = body.get("op").and_then(Value::as_str).ok_or_else(|| Error::Input("request needs a string `op`".into()))?.to_string();
    let mode: Mode = match body.get("mode") {
        Some(m) => serde_json::from_value(m.clone()).map_err(|e| Error::Parse(format!("mode: {e}")))?,
        None => Mode::Exact,
    };
    let req = Request { algebra, body };
    let (mode, result) = match (op.as_str(), mode) {
        ("witness" | "single-exchange" | "comparability", _) => (Mode::Float, float_only(&op, &req)?),
        (_, Mode::Exact) => (Mode::Exact, generic::<Rational>(&op, &req)?),
        (_, Mode::Float) => (Mode::Float, generic::<f64>(&op, &req)?),
    };
    let v = json!({"op": op, "mode": mode, "blocks": req.algebra.block_dims(), "result": result});
    let text = if pretty { serde_json::to_string_pretty(&v) } else { serde_json::to_string(&v) }.expect("serializes");
    Ok(Output::ok(text))
}

//! Polytope documents: the JSON exchange format of the CLI. A document
//! carries `ambient_dim` and exactly one of `vertices` (integer tuples) or
//! `inequalities` (primitive integer rows `A` and rational right-hand sides
//! `b` for `A x >= b`), plus an optional `name`. Integers are arbitrary
//! precision and parsed exactly; rationals travel as canonical `p/q`
//! strings with positive denominator. Corpus files are line-delimited
//! documents.

use num_traits::{One, Zero};
use serde_json::Value;

use crate::linalg::{solve_rational, IntMatrix};
use crate::lp::{maximize, LpOutcome};
use crate::polytope::{HRep, LatticePolytope};
use crate::{parse_rat, rat_string, Error, Int, Rat, Result};

#[derive(Clone, Debug)]
pub struct PolytopeDocument {
    pub name: Option<String>,
    pub ambient_dim: usize,
    pub body: DocumentBody,
}

#[derive(Clone, Debug)]
pub enum DocumentBody {
    Vertices(Vec<Vec<Int>>),
    Inequalities { rows: Vec<Vec<Int>>, rhs: Vec<Rat> },
}

/// Either side of a parsed document, hulled or checked respectively.
#[derive(Clone, Debug)]
pub enum ParsedPolytope {
    Vertices(LatticePolytope),
    Inequalities { a: IntMatrix, b: Vec<Rat> },
}

impl ParsedPolytope {
    /// A lattice polytope either way: inequality documents are converted by
    /// exact vertex enumeration and must describe a bounded region with
    /// integral vertices.
    pub fn into_polytope(self) -> Result<LatticePolytope> {
        match self {
            ParsedPolytope::Vertices(p) => Ok(p),
            ParsedPolytope::Inequalities { a, b } => {
                let n = a.cols();
                let rows: Vec<Vec<Int>> = a.row_vecs();
                ensure_bounded(&rows, &b, n)?;
                let verts = enumerate_vertices(&rows, &b, n);
                if verts.is_empty() {
                    return Err(Error::Document(
                        "inequality system is infeasible".into(),
                    ));
                }
                let mut pts = Vec::with_capacity(verts.len());
                for v in &verts {
                    let mut p = Vec::with_capacity(n);
                    for x in v {
                        if !x.denom().is_one() {
                            return Err(Error::Document(format!(
                                "inequality system has a non-lattice vertex at {}",
                                v.iter().map(rat_string).collect::<Vec<_>>().join(", ")
                            )));
                        }
                        p.push(x.numer().clone());
                    }
                    pts.push(p);
                }
                LatticePolytope::from_points(&pts)
            }
        }
    }
}

/// Exact rational vertices of `{x : rows . x >= rhs}` (bounded systems).
pub fn enumerate_vertices(rows: &[Vec<Int>], rhs: &[Rat], n: usize) -> Vec<Vec<Rat>> {
    let m = rows.len();
    let rat_rows: Vec<Vec<Rat>> = rows
        .iter()
        .map(|a| a.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect();
    let mut vertices = Vec::new();
    let mut subset = vec![0usize; n];
    fn rec(
        start: usize,
        k: usize,
        n: usize,
        m: usize,
        subset: &mut Vec<usize>,
        rat_rows: &[Vec<Rat>],
        rhs: &[Rat],
        vertices: &mut Vec<Vec<Rat>>,
    ) {
        if k == n {
            let sub_rows: Vec<Vec<Rat>> = subset.iter().map(|&i| rat_rows[i].clone()).collect();
            let sub_rhs: Vec<Rat> = subset.iter().map(|&i| rhs[i].clone()).collect();
            if let Some(x) = solve_rational(&sub_rows, &sub_rhs) {
                let feasible = rat_rows
                    .iter()
                    .zip(rhs)
                    .all(|(a, b)| a.iter().zip(&x).map(|(p, q)| p * q).sum::<Rat>() >= *b);
                if feasible {
                    vertices.push(x);
                }
            }
            return;
        }
        for i in start..m {
            subset[k] = i;
            rec(i + 1, k + 1, n, m, subset, rat_rows, rhs, vertices);
        }
    }
    rec(0, 0, n, m, &mut subset, &rat_rows, rhs, &mut vertices);
    vertices.sort();
    vertices.dedup();
    vertices
}

fn ensure_bounded(rows: &[Vec<Int>], rhs: &[Rat], n: usize) -> Result<()> {
    let rat_rows: Vec<Vec<Rat>> = rows
        .iter()
        .map(|a| a.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect();
    for j in 0..n {
        for sign in [1i64, -1] {
            let mut obj = vec![Rat::from_integer(Int::zero()); n];
            obj[j] = Rat::from_integer(Int::from(sign));
            match maximize(&obj, &rat_rows, rhs) {
                LpOutcome::Unbounded => {
                    return Err(Error::Document(format!(
                        "inequality system is unbounded in coordinate {j}"
                    )))
                }
                LpOutcome::Infeasible => {
                    return Err(Error::Document("inequality system is infeasible".into()))
                }
                LpOutcome::Optimal(..) => {}
            }
        }
    }
    Ok(())
}

fn int_from_number(n: &serde_json::Number, at: &str) -> Result<Int> {
    let token = n.to_string();
    token
        .parse::<Int>()
        .map_err(|_| Error::Document(format!("{at}: `{token}` is not an integer")))
}

fn int_from_value(v: &Value, at: &str) -> Result<Int> {
    match v {
        Value::Number(n) => int_from_number(n, at),
        Value::String(s) => {
            let r = parse_rat(s).map_err(|_| {
                Error::Document(format!("{at}: `{s}` is not an integer"))
            })?;
            if !r.denom().is_one() {
                return Err(Error::Document(format!(
                    "{at}: `{s}` is not an integer (lattice polytopes require integers)"
                )));
            }
            Ok(r.numer().clone())
        }
        other => Err(Error::Document(format!(
            "{at}: expected an integer, found {other}"
        ))),
    }
}

fn rat_from_value(v: &Value, at: &str) -> Result<Rat> {
    match v {
        Value::Number(n) => Ok(Rat::from_integer(int_from_number(n, at)?)),
        Value::String(s) => parse_rat(s)
            .map_err(|_| Error::Document(format!("{at}: `{s}` is not a rational"))),
        other => Err(Error::Document(format!(
            "{at}: expected an integer or `p/q` string, found {other}"
        ))),
    }
}

/// Parses one polytope document. Vertex documents are hull-reduced on load;
/// inequality documents keep their rows for later use.
pub fn parse_document(text: &str) -> Result<PolytopeDocument> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| Error::Document(format!("invalid JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Document("document must be a JSON object".into()))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "name" | "ambient_dim" | "vertices" | "inequalities") {
            return Err(Error::Document(format!("unknown field `{key}`")));
        }
    }
    let name = match obj.get("name") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(other) => {
            return Err(Error::Document(format!(
                "name: expected a string, found {other}"
            )))
        }
    };
    let ambient_dim = obj
        .get("ambient_dim")
        .ok_or_else(|| Error::Document("missing field `ambient_dim`".into()))?
        .as_u64()
        .ok_or_else(|| Error::Document("ambient_dim must be a nonnegative integer".into()))?
        as usize;

    let vertices = obj.get("vertices");
    let inequalities = obj.get("inequalities");
    let body = match (vertices, inequalities) {
        (Some(_), Some(_)) => {
            return Err(Error::Document(
                "exactly one of `vertices` and `inequalities` must be present, found both"
                    .into(),
            ))
        }
        (None, None) => {
            return Err(Error::Document(
                "exactly one of `vertices` and `inequalities` must be present, found neither"
                    .into(),
            ))
        }
        (Some(v), None) => {
            let arr = v
                .as_array()
                .ok_or_else(|| Error::Document("vertices: expected an array".into()))?;
            if arr.is_empty() {
                return Err(Error::Document("vertices: must be nonempty".into()));
            }
            let mut pts = Vec::with_capacity(arr.len());
            for (i, row) in arr.iter().enumerate() {
                let tuple = row.as_array().ok_or_else(|| {
                    Error::Document(format!("vertices[{i}]: expected an array"))
                })?;
                if tuple.len() != ambient_dim {
                    return Err(Error::Document(format!(
                        "vertices[{i}]: expected {ambient_dim} coordinates, found {}",
                        tuple.len()
                    )));
                }
                let mut p = Vec::with_capacity(ambient_dim);
                for (j, c) in tuple.iter().enumerate() {
                    p.push(int_from_value(c, &format!("vertices[{i}][{j}]"))?);
                }
                pts.push(p);
            }
            DocumentBody::Vertices(pts)
        }
        (None, Some(v)) => {
            let obj = v.as_object().ok_or_else(|| {
                Error::Document("inequalities: expected an object with rows and rhs".into())
            })?;
            let rows_v = obj
                .get("rows")
                .and_then(|r| r.as_array())
                .ok_or_else(|| Error::Document("inequalities.rows: expected an array".into()))?;
            let rhs_v = obj
                .get("rhs")
                .and_then(|r| r.as_array())
                .ok_or_else(|| Error::Document("inequalities.rhs: expected an array".into()))?;
            if rows_v.len() != rhs_v.len() {
                return Err(Error::Document(format!(
                    "inequalities: {} rows but {} right-hand sides",
                    rows_v.len(),
                    rhs_v.len()
                )));
            }
            let mut rows = Vec::with_capacity(rows_v.len());
            for (i, row) in rows_v.iter().enumerate() {
                let tuple = row.as_array().ok_or_else(|| {
                    Error::Document(format!("inequalities.rows[{i}]: expected an array"))
                })?;
                if tuple.len() != ambient_dim {
                    return Err(Error::Document(format!(
                        "inequalities.rows[{i}]: expected {ambient_dim} entries, found {}",
                        tuple.len()
                    )));
                }
                let mut r = Vec::with_capacity(ambient_dim);
                for (j, c) in tuple.iter().enumerate() {
                    r.push(int_from_value(c, &format!("inequalities.rows[{i}][{j}]"))?);
                }
                if r.iter().all(|x| x.is_zero()) {
                    return Err(Error::Document(format!(
                        "inequalities.rows[{i}]: zero normal"
                    )));
                }
                rows.push(r);
            }
            let mut rhs = Vec::with_capacity(rhs_v.len());
            for (i, c) in rhs_v.iter().enumerate() {
                rhs.push(rat_from_value(c, &format!("inequalities.rhs[{i}]"))?);
            }
            DocumentBody::Inequalities { rows, rhs }
        }
    };
    Ok(PolytopeDocument {
        name,
        ambient_dim,
        body,
    })
}

/// Parses a document and realizes it: vertex documents become hull-reduced
/// lattice polytopes, inequality documents become their row systems.
pub fn parse_polytope(text: &str) -> Result<(Option<String>, ParsedPolytope)> {
    let doc = parse_document(text)?;
    let parsed = match doc.body {
        DocumentBody::Vertices(pts) => ParsedPolytope::Vertices(
            LatticePolytope::from_points(&pts)?,
        ),
        DocumentBody::Inequalities { rows, rhs } => ParsedPolytope::Inequalities {
            a: IntMatrix::from_rows(&rows),
            b: rhs,
        },
    };
    Ok((doc.name, parsed))
}

/// JSON value for an arbitrary-precision integer: a number token when it
/// fits a machine integer, a decimal string otherwise; both parse back
/// exactly.
pub fn int_value(x: &Int) -> Value {
    match i64::try_from(x) {
        Ok(v) => Value::Number(v.into()),
        Err(_) => Value::Number(serde_json::Number::from_string_unchecked(x.to_string())),
    }
}

/// JSON value for a rational: integer value when the denominator is one,
/// canonical `p/q` string otherwise.
pub fn rat_value(r: &Rat) -> Value {
    if r.denom().is_one() {
        int_value(r.numer())
    } else {
        Value::String(rat_string(r))
    }
}

/// Serializes a polytope as a vertex document.
pub fn to_document(p: &LatticePolytope, name: Option<&str>) -> Value {
    let verts: Vec<Value> = p
        .vertices()
        .iter()
        .map(|v| Value::Array(v.iter().map(int_value).collect()))
        .collect();
    let mut obj = serde_json::Map::new();
    if let Some(n) = name {
        obj.insert("name".into(), Value::String(n.to_string()));
    }
    obj.insert("ambient_dim".into(), Value::Number(p.ambient_dim().into()));
    obj.insert("vertices".into(), Value::Array(verts));
    Value::Object(obj)
}

/// Serializes an ambient H-description as an inequality document.
pub fn hrep_to_document(h: &HRep, ambient_dim: usize, name: Option<&str>) -> Value {
    let rows: Vec<Value> = (0..h.a.rows())
        .map(|i| Value::Array(h.a.row(i).iter().map(int_value).collect()))
        .collect();
    let rhs: Vec<Value> = h.b.iter().map(rat_value).collect();
    let mut ineq = serde_json::Map::new();
    ineq.insert("rows".into(), Value::Array(rows));
    ineq.insert("rhs".into(), Value::Array(rhs));
    if h.eq_a.rows() > 0 {
        let eq_rows: Vec<Value> = (0..h.eq_a.rows())
            .map(|i| Value::Array(h.eq_a.row(i).iter().map(int_value).collect()))
            .collect();
        let eq_rhs: Vec<Value> = h.eq_b.iter().map(rat_value).collect();
        ineq.insert("eq_rows".into(), Value::Array(eq_rows));
        ineq.insert("eq_rhs".into(), Value::Array(eq_rhs));
    }
    let mut obj = serde_json::Map::new();
    if let Some(n) = name {
        obj.insert("name".into(), Value::String(n.to_string()));
    }
    obj.insert("ambient_dim".into(), Value::Number(ambient_dim.into()));
    obj.insert("inequalities".into(), Value::Object(ineq));
    Value::Object(obj)
}

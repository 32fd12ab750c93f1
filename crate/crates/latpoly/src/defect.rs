//! Discriminant degrees and dual defect through alternating face-volume
//! sums. With `Vol` the normalized lattice volume, the top Chern class of
//! the 1-jet bundle of a smooth embedding is
//!
//! ```text
//! sum over nonempty faces F of (-1)^codim(F) * (dim(F)+1) * Vol(F)
//! ```
//!
//! and the degree sums are
//!
//! ```text
//! delta_i = sum over F of (-1)^codim(F) * (C(dim F + 1, i) + (-1)^(i-1) (i-1)) * Vol(F)
//! ```
//!
//! evaluated with trivial Euler obstructions, which is exact for smooth
//! polytopes. The codimension of the dual variety is the first `i` with
//! `delta_i != 0` and its degree is that value.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::faces::{face_lattice, normalized_volume_of_face};
use crate::polytope::LatticePolytope;
use crate::regularity::regularity_report;
use crate::{Error, Int, Result};

#[derive(Clone, Debug)]
pub struct DefectReport {
    /// the alternating face sum (c_n of the 1-jet bundle for smooth P)
    pub chern_sum: Int,
    /// delta_i for i = 1..=n+1
    pub delta: BTreeMap<usize, Int>,
    /// smallest i with delta_i != 0; `None` when all vanish
    pub codim: Option<usize>,
    /// delta_codim; `None` when all vanish
    pub degree: Option<Int>,
    /// chern_sum == 0
    pub defective: bool,
    /// set when the first nonzero delta is negative: the degree formula has
    /// no interpretation here (the embedding is degenerate, e.g. a basic
    /// simplex) and the raw values are reported without one
    pub degenerate_embedding_suspected: bool,
    /// set when the input is simple but not smooth: the sums were evaluated
    /// assuming trivial Euler obstructions, which is only guaranteed for
    /// smooth polytopes
    pub euler_obstruction_warning: bool,
}

/// binomial C(n, k) with C(n, k) = 0 for k > n
fn binomial(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    let mut num = Int::from(1);
    for j in 0..k {
        num = num * Int::from((n - j) as i64);
        num = num / Int::from((j + 1) as i64);
    }
    num
}

fn require_gate(p: &LatticePolytope) -> Result<bool> {
    if !p.is_full_dimensional() {
        return Err(Error::NotFullDimensional {
            dim: p.dim(),
            ambient: p.ambient_dim(),
        });
    }
    let report = regularity_report(p);
    if report.smooth {
        return Ok(false);
    }
    if report.simple {
        // allowed with a warning: trivial Euler obstructions are assumed
        return Ok(true);
    }
    Err(Error::NotSimple(
        "face-sum degree formulas need a simple polytope".into(),
    ))
}

/// The alternating face sum equal to `c_n(J_1)` for a smooth embedding with
/// every lattice point used: positive degree of the discriminant when the
/// dual variety is a hypersurface, zero exactly in the defective case.
pub fn jet1_chern_degree(p: &LatticePolytope) -> Result<Int> {
    require_gate(p)?;
    Ok(raw_chern_sum(p))
}

/// The same sum without any smoothness gate; callers own the interpretation.
pub fn raw_chern_sum(p: &LatticePolytope) -> Int {
    let n = p.dim();
    let lattice = face_lattice(p);
    let mut total = Int::zero();
    for face in &lattice.faces {
        let vol = normalized_volume_of_face(p, face);
        let term = Int::from((face.dim + 1) as i64) * vol;
        if (n - face.dim) % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// delta_i of the degree formula, evaluated with trivial Euler obstructions.
pub fn delta_i(p: &LatticePolytope, i: usize) -> Result<Int> {
    if i == 0 {
        return Err(Error::InvalidParameter(
            "delta_0 is undefined by the degree formula".into(),
        ));
    }
    require_gate(p)?;
    Ok(raw_delta_i(p, i))
}

fn raw_delta_i(p: &LatticePolytope, i: usize) -> Int {
    let n = p.dim();
    let lattice = face_lattice(p);
    let sign_term = if (i - 1) % 2 == 0 {
        Int::from((i - 1) as i64)
    } else {
        -Int::from((i - 1) as i64)
    };
    let mut total = Int::zero();
    for face in &lattice.faces {
        let vol = normalized_volume_of_face(p, face);
        let coeff = binomial(face.dim + 1, i) + &sign_term;
        let term = coeff * vol;
        if (n - face.dim) % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Full defect report: the Chern sum, the delta sequence for i = 1..=n+1,
/// and the codimension/degree of the dual variety when the first nonzero
/// delta is positive.
pub fn dual_defect(p: &LatticePolytope) -> Result<DefectReport> {
    let warn = require_gate(p)?;
    let n = p.dim();
    let chern = raw_chern_sum(p);
    let mut delta = BTreeMap::new();
    for i in 1..=n + 1 {
        delta.insert(i, raw_delta_i(p, i));
    }
    debug_assert_eq!(delta[&1], chern, "delta_1 must equal the Chern sum");
    let codim = delta.iter().find(|(_, v)| !v.is_zero()).map(|(i, _)| *i);
    let degree = codim.map(|i| delta[&i].clone());
    let degenerate = degree.as_ref().map(|d| d.is_negative()).unwrap_or(false);
    Ok(DefectReport {
        defective: chern.is_zero(),
        chern_sum: chern,
        delta,
        codim: if degenerate { None } else { codim },
        degree: if degenerate { None } else { degree },
        degenerate_embedding_suspected: degenerate,
        euler_obstruction_warning: warn,
    })
}

/// True iff the Chern sum vanishes, i.e. the dual variety of the smooth
/// embedding has codimension greater than one.
pub fn is_dually_defective(p: &LatticePolytope) -> Result<bool> {
    Ok(jet1_chern_degree(p)?.is_zero())
}

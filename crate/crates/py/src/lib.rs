//! Python extension module `schmidt_lab`: the partition operations, the
//! bijection, the counting functions, and the identity verifiers, over plain
//! Python data (lists, tuples, dicts).
//!
//! Build the importable module with
//! `cargo build --release -p schmidt-lab-py --features extension-module`
//! and rename/copy `libschmidt_lab_py.so` to `schmidt_lab.so`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;
use schmidt_lab::schmidt::{self, DiffVector, SchmidtSpec, WeightVector};
use schmidt_lab::stockhofe::{self, ColoredPart, ColoredPartition};
use schmidt_lab::verify::{run_claim, ClaimId, Status, VerifyOptions};
use schmidt_lab::{Modulus, Partition, ResidueVector};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn partition(parts: Vec<u32>) -> PyResult<Partition> {
    Partition::new(parts).map_err(value_err)
}

fn modulus(m: u32) -> PyResult<Modulus> {
    Modulus::new(m).map_err(value_err)
}

fn spec(m: u32, s: Vec<u32>) -> PyResult<SchmidtSpec> {
    SchmidtSpec::new(m, s).map_err(value_err)
}

/// Conjugate partition (Ferrers-diagram reflection).
#[pyfunction]
fn conjugate(parts: Vec<u32>) -> PyResult<Vec<u32>> {
    Ok(partition(parts)?.conjugate().parts().to_vec())
}

#[pyfunction]
fn is_m_flat(parts: Vec<u32>, m: u32) -> PyResult<bool> {
    Ok(partition(parts)?.is_m_flat(modulus(m)?))
}

#[pyfunction]
fn is_m_distinct(parts: Vec<u32>, m: u32) -> PyResult<bool> {
    Ok(partition(parts)?.is_m_distinct(modulus(m)?))
}

#[pyfunction]
fn is_m_regular(parts: Vec<u32>, m: u32) -> PyResult<bool> {
    Ok(partition(parts)?.is_m_regular(modulus(m)?))
}

/// The unique m-regular m-flat partition with the given residue sequence.
#[pyfunction]
fn lambda_of_residues(m: u32, residues: Vec<u32>) -> PyResult<Vec<u32>> {
    let v = ResidueVector::new(modulus(m)?, residues).map_err(value_err)?;
    Ok(schmidt_lab::lambda_of_residues(&v).parts().to_vec())
}

/// Flat-to-regular bijection; returns a dict with the image and the removal
/// trace.
#[pyfunction]
fn phi<'py>(py: Python<'py>, parts: Vec<u32>, m: u32) -> PyResult<Bound<'py, PyDict>> {
    let p = partition(parts)?;
    let (image, trace) = stockhofe::phi(&p, modulus(m)?).map_err(value_err)?;
    let d = PyDict::new(py);
    d.set_item("image", image.parts().to_vec())?;
    d.set_item("mu", trace.mu.parts().to_vec())?;
    d.set_item("lambda_v", trace.lambda_v.parts().to_vec())?;
    d.set_item("removed_step1", trace.removed_step1)?;
    d.set_item("removed_step2", trace.removed_step2)?;
    Ok(d)
}

/// Inverse bijection (regular to flat).
#[pyfunction]
fn phi_inverse(parts: Vec<u32>, m: u32) -> PyResult<Vec<u32>> {
    let p = partition(parts)?;
    Ok(stockhofe::phi_inverse(&p, modulus(m)?)
        .map_err(value_err)?
        .parts()
        .to_vec())
}

/// Unique decomposition of an m-regular partition; returns
/// `(lambda_v, mu)` with `parts = lambda_v + m * conjugate(mu)`.
#[pyfunction]
fn decompose_regular(parts: Vec<u32>, m: u32) -> PyResult<(Vec<u32>, Vec<u32>)> {
    let p = partition(parts)?;
    let (lambda_v, mu) = stockhofe::decompose_regular(&p, modulus(m)?).map_err(value_err)?;
    Ok((lambda_v.parts().to_vec(), mu.parts().to_vec()))
}

/// Sum of the parts in counted places (`S` mod `m`).
#[pyfunction]
fn schmidt_weight(parts: Vec<u32>, m: u32, s: Vec<u32>) -> PyResult<u64> {
    Ok(schmidt::schmidt_weight(&partition(parts)?, &spec(m, s)?))
}

/// The difference vector of length m-1.
#[pyfunction]
fn diff_vector(parts: Vec<u32>, m: u32) -> PyResult<Vec<u32>> {
    Ok(schmidt::diff_vector(&partition(parts)?, modulus(m)?).0)
}

/// Colored reduction of an m-distinct partition; returns
/// `[(size, color), ...]`.
#[pyfunction]
fn schmidt_to_colored(parts: Vec<u32>, m: u32, s: Vec<u32>) -> PyResult<Vec<(u32, u32)>> {
    let colored =
        stockhofe::schmidt_to_colored(&partition(parts)?, &spec(m, s)?).map_err(value_err)?;
    Ok(colored.parts().iter().map(|p| (p.size, p.color)).collect())
}

/// Inverse of `schmidt_to_colored`.
#[pyfunction]
fn colored_to_schmidt(colored: Vec<(u32, u32)>, m: u32, s: Vec<u32>) -> PyResult<Vec<u32>> {
    let parts = colored
        .into_iter()
        .map(|(size, color)| ColoredPart { size, color })
        .collect();
    let cp = ColoredPartition::new(parts).map_err(value_err)?;
    Ok(stockhofe::colored_to_schmidt(&cp, &spec(m, s)?)
        .map_err(value_err)?
        .parts()
        .to_vec())
}

/// `P_{m,S}(n; rho)`.
#[pyfunction]
fn count_p(m: u32, s: Vec<u32>, n: u64, rho: Vec<u32>) -> PyResult<u64> {
    let spec = spec(m, s)?;
    if rho.len() != spec.color_count() as usize {
        return Err(value_err(format!(
            "rho must have {} entries",
            spec.color_count()
        )));
    }
    Ok(schmidt::count_p(&spec, n, &DiffVector(rho)))
}

/// Colored partitions of `n` with prescribed color multiplicities.
#[pyfunction]
fn count_colored(n: u64, m: u32, s: Vec<u32>, rho: Vec<u32>) -> PyResult<u64> {
    let spec = spec(m, s)?;
    if rho.len() != spec.color_count() as usize {
        return Err(value_err(format!(
            "rho must have {} entries",
            spec.color_count()
        )));
    }
    Ok(schmidt::count_colored(n, &spec, &DiffVector(rho)))
}

/// `R_{m,i}(n)`.
#[pyfunction]
fn count_r(m: u32, i: u32, n: u64) -> PyResult<u64> {
    schmidt::count_r(m, i, n).map_err(value_err)
}

#[pyfunction]
fn count_f32(n: u64, m: u64) -> u64 {
    schmidt::count_f32(n, m)
}

#[pyfunction]
fn count_f31(n: u64, m1: u64, m2: u64) -> u64 {
    schmidt::count_f31(n, m1, m2)
}

#[pyfunction]
fn count_fk(k: u32, n: u64, m: u64) -> PyResult<u64> {
    schmidt::count_fk(k, n, m).map_err(value_err)
}

/// Partitions with parts repeating at most `max_rep` times, counted by the
/// periodic weight vector `w`, at weighted size `n`.
#[pyfunction]
fn count_weighted(w: Vec<i64>, max_rep: usize, n: u64) -> PyResult<u64> {
    let w = WeightVector::new(w).map_err(value_err)?;
    schmidt::count_weighted(&w, max_rep, n).map_err(value_err)
}

/// Partitions of `n` into parts 1, 3, 6, or 8 mod 9.
#[pyfunction]
fn mod9_class_count(n: u64) -> u64 {
    schmidt::mod9_class_count(n)
}

/// `p(n, m)`: partitions of `n` into exactly `m` parts.
#[pyfunction]
fn partitions_exact_parts(n: u64, m: u64) -> u64 {
    schmidt::partitions_exact_parts(n, m)
}

/// Multiset equality of odd-indexed subpartitions vs diagonal hooklengths.
#[pyfunction]
fn hook_multiset_check(n: u64) -> bool {
    schmidt::hook_multiset_check(n)
}

/// All partitions of `n` (reverse-lexicographic). Keep `n` modest.
#[pyfunction]
fn partitions_of(n: u32) -> Vec<Vec<u32>> {
    schmidt_lab::partition::partitions_of(n)
        .map(|p| p.parts().to_vec())
        .collect()
}

/// Runs a claim grid; returns one dict per instance with keys
/// `claim, params, status, discrepancy, ms`.
#[pyfunction]
#[pyo3(signature = (claim, order=30, cap_t=None, cap_t1=10, cap_t2=10, k=None, m=None, i=None, big_m=None))]
#[allow(clippy::too_many_arguments)]
fn verify<'py>(
    py: Python<'py>,
    claim: &str,
    order: u32,
    cap_t: Option<u32>,
    cap_t1: u32,
    cap_t2: u32,
    k: Option<u32>,
    m: Option<u32>,
    i: Option<u32>,
    big_m: Option<u32>,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let id = ClaimId::parse(claim)
        .ok_or_else(|| value_err(format!("unknown claim id '{claim}'")))?;
    let opts = VerifyOptions {
        order,
        cap_t: cap_t.unwrap_or(order),
        cap_t1,
        cap_t2,
        k,
        m,
        i,
        big_m,
    };
    let mut out = Vec::new();
    for v in run_claim(id, &opts) {
        let d = PyDict::new(py);
        d.set_item("claim", &v.claim)?;
        let params = PyDict::new(py);
        for (key, value) in &v.params {
            params.set_item(key, value)?;
        }
        d.set_item("params", params)?;
        d.set_item(
            "status",
            match v.status {
                Status::Verified => "verified",
                Status::Mismatch => "mismatch",
                Status::Skipped => "skipped",
            },
        )?;
        match v.discrepancy {
            Some(disc) => {
                let dd = PyDict::new(py);
                dd.set_item("q", disc.q)?;
                dd.set_item("t", disc.t)?;
                dd.set_item("t1", disc.t1)?;
                dd.set_item("t2", disc.t2)?;
                dd.set_item("lhs", disc.lhs)?;
                dd.set_item("rhs", disc.rhs)?;
                d.set_item("discrepancy", dd)?;
            }
            None => d.set_item("discrepancy", py.None())?,
        }
        d.set_item("ms", v.ms)?;
        out.push(d);
    }
    Ok(out)
}

#[pymodule]
#[pyo3(name = "schmidt_lab")]
fn schmidt_lab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(conjugate, m)?)?;
    m.add_function(wrap_pyfunction!(is_m_flat, m)?)?;
    m.add_function(wrap_pyfunction!(is_m_distinct, m)?)?;
    m.add_function(wrap_pyfunction!(is_m_regular, m)?)?;
    m.add_function(wrap_pyfunction!(lambda_of_residues, m)?)?;
    m.add_function(wrap_pyfunction!(phi, m)?)?;
    m.add_function(wrap_pyfunction!(phi_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(decompose_regular, m)?)?;
    m.add_function(wrap_pyfunction!(schmidt_weight, m)?)?;
    m.add_function(wrap_pyfunction!(diff_vector, m)?)?;
    m.add_function(wrap_pyfunction!(schmidt_to_colored, m)?)?;
    m.add_function(wrap_pyfunction!(colored_to_schmidt, m)?)?;
    m.add_function(wrap_pyfunction!(count_p, m)?)?;
    m.add_function(wrap_pyfunction!(count_colored, m)?)?;
    m.add_function(wrap_pyfunction!(count_r, m)?)?;
    m.add_function(wrap_pyfunction!(count_f32, m)?)?;
    m.add_function(wrap_pyfunction!(count_f31, m)?)?;
    m.add_function(wrap_pyfunction!(count_fk, m)?)?;
    m.add_function(wrap_pyfunction!(count_weighted, m)?)?;
    m.add_function(wrap_pyfunction!(mod9_class_count, m)?)?;
    m.add_function(wrap_pyfunction!(partitions_exact_parts, m)?)?;
    m.add_function(wrap_pyfunction!(hook_multiset_check, m)?)?;
    m.add_function(wrap_pyfunction!(partitions_of, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}

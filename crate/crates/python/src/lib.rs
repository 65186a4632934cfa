//! Python bindings for `hhwreath_core`.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use hhwreath_core::cherednik::{self, CherednikElement};
use hhwreath_core::hochschild::{self, Bimodule, FiniteDimAlgebra, Group};
use hhwreath_core::koszul::{self, Kind, Twist};
use hhwreath_core::presets::{self, Format};
use hhwreath_core::{verify, wreath, AlgebraPreset, BettiTable, BiSeries, Error};

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn table_from_dict(betti: BTreeMap<u32, u64>) -> BettiTable {
    BettiTable::from_pairs(betti)
}

fn table_to_dict(t: &BettiTable) -> BTreeMap<u32, u64> {
    t.iter().collect()
}

fn parse_format(s: &str) -> PyResult<Format> {
    match s {
        "plain" => Ok(Format::Plain),
        "json" => Ok(Format::Json),
        "csv" => Ok(Format::Csv),
        _ => Err(PyValueError::new_err(format!("unknown format {s:?}"))),
    }
}

/// A named algebra: even dimension `d` and Betti numbers of HH^*.
#[pyclass(name = "Preset", frozen)]
struct PyPreset(AlgebraPreset);

#[pymethods]
impl PyPreset {
    #[new]
    fn new(name: String, d: u32, betti: BTreeMap<u32, u64>) -> PyResult<Self> {
        AlgebraPreset::new(name, d, table_from_dict(betti)).map(PyPreset).map_err(err)
    }

    #[getter]
    fn name(&self) -> &str {
        &self.0.name
    }

    #[getter]
    fn d(&self) -> u32 {
        self.0.d
    }

    #[getter]
    fn betti(&self) -> BTreeMap<u32, u64> {
        table_to_dict(&self.0.betti)
    }

    fn to_json(&self) -> String {
        presets::preset_to_json(&self.0)
    }

    fn __repr__(&self) -> String {
        format!("Preset({:?}, d={}, betti={})", self.0.name, self.0.d, self.0.betti)
    }
}

/// Truncated power series in `q` and `t` with integer coefficients.
#[pyclass(name = "Series", frozen, eq)]
#[derive(PartialEq)]
struct PySeries(BiSeries);

#[pymethods]
impl PySeries {
    #[getter]
    fn q_bound(&self) -> usize {
        self.0.q_bound()
    }

    #[getter]
    fn t_bound(&self) -> usize {
        self.0.t_bound()
    }

    fn coeff(&self, n: usize, i: usize) -> String {
        self.0.coeff(n, i).to_string()
    }

    /// Coefficient of `qⁿ` as a list of nonnegative dimensions.
    fn q_row(&self, n: usize) -> Vec<u64> {
        wreath::q_row(&self.0, n)
    }

    #[pyo3(signature = (format = "plain"))]
    fn emit(&self, format: &str) -> PyResult<String> {
        Ok(presets::emit_series(&self.0, parse_format(format)?))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Series({})", self.0)
    }
}

/// Element of the rational Cherednik algebra with coefficients in `ℚ[k]`.
#[pyclass(name = "CherednikElement", frozen, eq)]
#[derive(PartialEq)]
struct PyCherednik(CherednikElement);

#[pymethods]
impl PyCherednik {
    /// Normal form of a word such as `"p1 x2 s12"`.
    #[staticmethod]
    fn from_word(word: &str, n: usize) -> PyResult<Self> {
        let w = cherednik::parse_word(word, n).map_err(err)?;
        cherednik::normal_order(&w, n).map(PyCherednik).map_err(err)
    }

    #[staticmethod]
    fn symmetrizer(n: usize) -> Self {
        PyCherednik(cherednik::symmetrizer(n))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn max_degree(&self) -> Option<u32> {
        self.0.max_degree()
    }

    fn spherical(&self) -> PyResult<Self> {
        cherednik::spherical_product(&self.0).map(PyCherednik).map_err(err)
    }

    fn __mul__(&self, other: &PyCherednik) -> PyResult<Self> {
        cherednik::multiply(&self.0, &other.0).map(PyCherednik).map_err(err)
    }

    fn __add__(&self, other: &PyCherednik) -> PyResult<Self> {
        if self.0.n() != other.0.n() {
            return Err(err(Error::RankMismatch(self.0.n(), other.0.n())));
        }
        Ok(PyCherednik(self.0.add(&other.0)))
    }

    fn __sub__(&self, other: &PyCherednik) -> PyResult<Self> {
        if self.0.n() != other.0.n() {
            return Err(err(Error::RankMismatch(self.0.n(), other.0.n())));
        }
        Ok(PyCherednik(self.0.sub(&other.0)))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("CherednikElement(n={}, {})", self.0.n(), self.0)
    }
}

#[pyfunction]
fn load_preset(name: &str) -> PyResult<PyPreset> {
    presets::load_preset(name).map(PyPreset).map_err(err)
}

#[pyfunction]
fn hh_cohomology_wreath(preset: &PyPreset, n: usize) -> PyResult<BTreeMap<u32, u64>> {
    let t = wreath::hh_cohomology_wreath(&preset.0.betti, preset.0.d, n).map_err(err)?;
    Ok(table_to_dict(&t))
}

#[pyfunction]
fn hh_homology_wreath(betti: BTreeMap<u32, u64>, n: usize) -> BTreeMap<u32, u64> {
    table_to_dict(&wreath::hh_homology_wreath(&table_from_dict(betti), n))
}

#[pyfunction]
fn generating_series_product(preset: &PyPreset, max_q: usize, max_t: usize) -> PyResult<PySeries> {
    wreath::generating_series_product(&preset.0.betti, preset.0.d, max_q, max_t).map(PySeries).map_err(err)
}

#[pyfunction]
fn generating_series_sum(preset: &PyPreset, max_q: usize, max_t: usize) -> PyResult<PySeries> {
    wreath::generating_series_sum(&preset.0.betti, preset.0.d, max_q, max_t).map(PySeries).map_err(err)
}

/// One of `PA`, `PA_trig`, `PA_q`, `PB`, `PB_trig`, `PB_q`.
#[pyfunction]
fn closed_form(label: &str, max_q: usize, max_t: usize) -> PyResult<PySeries> {
    let l: wreath::ClosedForm = label.parse().map_err(err)?;
    Ok(PySeries(wreath::closed_form(l, max_q, max_t)))
}

#[pyfunction]
fn deformation_parameter_count(preset: &PyPreset, n: usize) -> PyResult<u64> {
    wreath::deformation_parameter_count(&preset.0.betti, preset.0.d, n).map_err(err)
}

#[pyfunction]
fn hilb_poincare(betti: Vec<u64>, n: usize) -> PyResult<Vec<u64>> {
    wreath::hilb_poincare(&BettiTable::from_dense(&betti), n).map_err(err)
}

fn kind(name: &str) -> PyResult<Kind> {
    name.parse().map_err(err)
}

#[pyfunction]
#[pyo3(signature = (kind_name, window = 8, epsilon = false))]
fn hh_cohomology_rank_one(kind_name: &str, window: usize, epsilon: bool) -> PyResult<[usize; 3]> {
    let twist = if epsilon { Twist::Epsilon } else { Twist::Id };
    koszul::hh_cohomology_rank_one(kind(kind_name)?, twist, window).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (kind_name, window = 8))]
fn crossed_z2_cohomology(kind_name: &str, window: usize) -> PyResult<[usize; 3]> {
    koszul::crossed_z2_cohomology(kind(kind_name)?, window).map_err(err)
}

/// Hochschild homology of `ℚ[x]/(x^k)` or of `ℚ[Z_k]`, levels `0..=max_level`.
#[pyfunction]
fn hh_dims(algebra: &str, k: usize, max_level: usize) -> PyResult<Vec<usize>> {
    let a = match algebra {
        "truncated" => FiniteDimAlgebra::truncated_poly(k),
        "cyclic" => FiniteDimAlgebra::group_algebra(&Group::cyclic(k)),
        _ => return Err(PyValueError::new_err(format!("unknown algebra {algebra:?}"))),
    };
    hochschild::hh_dims(&a, &Bimodule::regular(&a), max_level).map_err(err)
}

/// Runs a verification suite and returns `(passed, report_text)`.
#[pyfunction]
#[pyo3(signature = (suite = "all", seed = 0))]
fn run_verify(py: Python<'_>, suite: &str, seed: u64) -> PyResult<(bool, String)> {
    let suite = suite.to_owned();
    let reports = py.detach(move || match suite.as_str() {
        "all" => Ok(verify::all_suites(seed)),
        "wreath" => Ok(vec![verify::wreath_suite(seed)]),
        "bruteforce" => Ok(vec![verify::bruteforce_suite(seed)]),
        "koszul" => Ok(vec![verify::koszul_suite()]),
        "cherednik" => Ok(vec![verify::cherednik_suite(seed)]),
        other => Err(format!("unknown suite {other:?}")),
    });
    let reports = reports.map_err(PyValueError::new_err)?;
    let passed = reports.iter().all(|r| r.passed());
    let text = reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n");
    Ok((passed, text))
}

#[pymodule]
fn hhwreath(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPreset>()?;
    m.add_class::<PySeries>()?;
    m.add_class::<PyCherednik>()?;
    m.add_function(wrap_pyfunction!(load_preset, m)?)?;
    m.add_function(wrap_pyfunction!(hh_cohomology_wreath, m)?)?;
    m.add_function(wrap_pyfunction!(hh_homology_wreath, m)?)?;
    m.add_function(wrap_pyfunction!(generating_series_product, m)?)?;
    m.add_function(wrap_pyfunction!(generating_series_sum, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(deformation_parameter_count, m)?)?;
    m.add_function(wrap_pyfunction!(hilb_poincare, m)?)?;
    m.add_function(wrap_pyfunction!(hh_cohomology_rank_one, m)?)?;
    m.add_function(wrap_pyfunction!(crossed_z2_cohomology, m)?)?;
    m.add_function(wrap_pyfunction!(hh_dims, m)?)?;
    m.add_function(wrap_pyfunction!(run_verify, m)?)?;
    Ok(())
}

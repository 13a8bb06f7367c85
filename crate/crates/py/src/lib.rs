use pyo3::prelude::*;

#[pymodule]
fn symqaoa_py(_m: &Bound<'_, PyModule>) -> PyResult<()> {
    Ok(())
}

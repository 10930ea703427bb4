//! JSON and CSV formats. Complex numbers are always `[re, im]` pairs and
//! matrices row-major; floats are written in shortest round-trip form, so
//! every artifact reloads bit-for-bit.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use num_complex::Complex64 as C64;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::linalg::CMatrix;
use crate::repr::{Irrep, IrrepSet};
use crate::wigner::{ExtendedWignerTensor, StateVector, Variant, WignerTensor};

pub type Pair = [f64; 2];

fn pair(z: C64) -> Pair {
    [z.re, z.im]
}

fn complex(p: &Pair) -> C64 {
    C64::new(p[0], p[1])
}

fn matrix_to_pairs(m: &CMatrix) -> Vec<Pair> {
    (0..m.nrows())
        .flat_map(|r| (0..m.ncols()).map(move |c| (r, c)))
        .map(|(r, c)| pair(m[(r, c)]))
        .collect()
}

fn pairs_to_matrix(d: usize, v: &[Pair]) -> Result<CMatrix> {
    if v.len() != d * d {
        return Err(Error::DimensionMismatch { expected: d * d, found: v.len() });
    }
    Ok(CMatrix::from_fn(d, d, |r, c| complex(&v[r * d + c])))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GroupJson {
    pub order: usize,
    pub names: Vec<String>,
    pub mul: Vec<Vec<usize>>,
}

impl GroupJson {
    pub fn from_group(g: &GroupTable) -> Self {
        GroupJson { order: g.order(), names: g.names().to_vec(), mul: g.table().to_vec() }
    }

    /// Runs the full group validation.
    pub fn into_group(self) -> Result<GroupTable> {
        if self.mul.len() != self.order {
            return Err(Error::DimensionMismatch { expected: self.order, found: self.mul.len() });
        }
        let names = if self.names.is_empty() { None } else { Some(self.names) };
        GroupTable::from_table(self.mul, names)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IrrepJson {
    pub j: usize,
    pub dim: usize,
    /// One row-major matrix per group element.
    pub matrices: Vec<Vec<Pair>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IrrepSetJson {
    pub group: GroupJson,
    pub irreps: Vec<IrrepJson>,
}

impl IrrepSetJson {
    pub fn from_set(set: &IrrepSet) -> Self {
        IrrepSetJson {
            group: GroupJson::from_group(set.group()),
            irreps: set
                .irreps()
                .iter()
                .map(|ir| IrrepJson {
                    j: ir.label,
                    dim: ir.dim,
                    matrices: ir.matrices.iter().map(matrix_to_pairs).collect(),
                })
                .collect(),
        }
    }

    pub fn into_set(self) -> Result<IrrepSet> {
        let group = self.group.into_group()?;
        let irreps = self
            .irreps
            .iter()
            .map(|ir| {
                Ok(Irrep {
                    label: ir.j,
                    dim: ir.dim,
                    matrices: ir.matrices.iter().map(|m| pairs_to_matrix(ir.dim, m)).collect::<Result<_>>()?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        IrrepSet::from_parts(group, irreps)
    }
}

pub fn state_to_json(state: &StateVector) -> Vec<Pair> {
    state.psi.iter().copied().map(pair).collect()
}

/// States are taken as given; callers decide whether to normalize.
pub fn state_from_json(v: &[Pair]) -> StateVector {
    StateVector::new(v.iter().map(complex).collect())
}

/// `values[g][j]` is `W(g; j)` row-major, or for the extended
/// distribution the `N_j⁴` values of `w(g; j m n' m' n)` with `m` slowest.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WignerJson {
    pub variant: String,
    pub order: usize,
    pub dims: Vec<usize>,
    pub values: BTreeMap<usize, BTreeMap<usize, Vec<Pair>>>,
}

fn variant_name(v: Variant) -> &'static str {
    match v {
        Variant::I => "I",
        Variant::II => "II",
    }
}

impl WignerJson {
    pub fn from_tensor(w: &WignerTensor) -> Self {
        let values = w
            .data
            .iter()
            .enumerate()
            .map(|(g, row)| (g, row.iter().map(matrix_to_pairs).enumerate().collect()))
            .collect();
        WignerJson { variant: variant_name(w.variant).into(), order: w.order(), dims: w.dims.clone(), values }
    }

    pub fn from_extended(w: &ExtendedWignerTensor) -> Self {
        let values = w
            .data
            .iter()
            .enumerate()
            .map(|(g, row)| (g, row.iter().map(|v| v.iter().copied().map(pair).collect()).enumerate().collect()))
            .collect();
        WignerJson { variant: "extended".into(), order: w.order(), dims: w.dims.clone(), values }
    }

    fn cells(&self, width: impl Fn(usize) -> usize) -> Result<Vec<Vec<&Vec<Pair>>>> {
        (0..self.order)
            .map(|g| {
                let row = self.values.get(&g).ok_or_else(|| Error::Parse(format!("missing element {g}")))?;
                self.dims
                    .iter()
                    .enumerate()
                    .map(|(j, &d)| {
                        let cell = row.get(&j).ok_or_else(|| Error::Parse(format!("missing irrep {j} at {g}")))?;
                        if cell.len() != width(d) {
                            return Err(Error::DimensionMismatch { expected: width(d), found: cell.len() });
                        }
                        Ok(cell)
                    })
                    .collect()
            })
            .collect()
    }

    pub fn into_tensor(self) -> Result<WignerTensor> {
        let variant: Variant = self.variant.parse()?;
        let data = self
            .cells(|d| d * d)?
            .into_iter()
            .map(|row| row.into_iter().zip(&self.dims).map(|(c, &d)| pairs_to_matrix(d, c)).collect())
            .collect::<Result<_>>()?;
        Ok(WignerTensor { variant, dims: self.dims.clone(), data })
    }

    pub fn into_extended(self) -> Result<ExtendedWignerTensor> {
        if self.variant != "extended" {
            return Err(Error::Parse(format!("expected an extended distribution, found variant {}", self.variant)));
        }
        let data = self
            .cells(|d| d * d * d * d)?
            .into_iter()
            .map(|row| row.into_iter().map(|c| c.iter().map(complex).collect()).collect())
            .collect();
        Ok(ExtendedWignerTensor { dims: self.dims.clone(), data })
    }
}

/// `g,j,m,value` rows holding the real parts of the diagonal entries.
pub fn wigner_csv(w: &WignerTensor) -> String {
    let mut out = String::from("g,j,m,value\n");
    for (g, row) in w.data.iter().enumerate() {
        for (j, m) in row.iter().enumerate() {
            for k in 0..m.nrows() {
                writeln!(out, "{g},{j},{k},{}", m[(k, k)].re).expect("writing to a String");
            }
        }
    }
    out
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("artifact types always serialize")
}

pub fn from_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    from_json(&text)
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::frobenius21_spec;
    use crate::group::build_group;
    use crate::repr::compute_irreps;

    #[test]
    fn irreps_round_trip_exactly() {
        let set = compute_irreps(&build_group(&frobenius21_spec()).unwrap()).unwrap();
        let text = to_json(&IrrepSetJson::from_set(&set));
        let back = from_json::<IrrepSetJson>(&text).unwrap().into_set().unwrap();
        assert_eq!(back.group(), set.group());
        assert_eq!(back.irreps(), set.irreps());
    }

    #[test]
    fn wigner_keys_are_numeric() {
        let set = compute_irreps(&build_group(&crate::GroupSpec::cyclic(3)).unwrap()).unwrap();
        let w = crate::wigner::wigner_i(&StateVector::basis(3, 0), &set).unwrap();
        let v: serde_json::Value = serde_json::from_str(&to_json(&WignerJson::from_tensor(&w))).unwrap();
        assert_eq!(v["values"]["0"]["2"], serde_json::json!([[1.0, 0.0]]));
        assert!(wigner_csv(&w).starts_with("g,j,m,value\n0,0,0,1\n"));
    }

    #[test]
    fn variant_is_checked() {
        let set = compute_irreps(&build_group(&crate::GroupSpec::cyclic(3)).unwrap()).unwrap();
        let w = crate::wigner::wigner_i(&StateVector::uniform(3), &set).unwrap();
        let mut j = WignerJson::from_tensor(&w);
        assert!(j.clone().into_extended().is_err());
        j.variant = "III".into();
        assert!(matches!(j.into_tensor(), Err(Error::Parse(_))));
    }
}

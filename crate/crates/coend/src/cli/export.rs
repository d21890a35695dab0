//! JSON export of the algebra: basis and structure tensors with exact
//! rational-vector coefficients, in a deterministic (lexicographic) order so
//! exported files are byte-stable.

use crate::cyclotomic::{CycField, CycNum};
use crate::wha::duality::SelfDuality;
use crate::wha::WhaData;
use serde::{Deserialize, Serialize};
use std::sync::Arc;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExportError {
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed export file: {0}")]
    Malformed(String),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

type Coeffs = Vec<String>;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Tensors {
    pub mu: Vec<(u32, u32, u32, Coeffs)>,
    pub delta: Vec<(u32, u32, u32, Coeffs)>,
    pub epsilon: Vec<(u32, Coeffs)>,
    pub eta: Vec<(u32, Coeffs)>,
    pub antipode: Vec<(u32, u32, Coeffs)>,
    pub w: Vec<(u32, Coeffs)>,
    pub pairing: Vec<(u32, u32, Coeffs)>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ExportFile {
    pub r: usize,
    pub zeta_order: usize,
    pub phi: usize,
    pub basis: Vec<[usize; 5]>,
    pub tensors: Tensors,
}

/// Serialize the algebra and its pairing. Entry order is lexicographic in
/// the indices, and coefficients are "p/q" strings in ascending power order.
pub fn export(h: &WhaData, sd: &SelfDuality) -> ExportFile {
    let dim = h.dim();
    let mut mu = Vec::new();
    for x in 0..dim as u32 {
        for y in 0..dim as u32 {
            let mut terms: Vec<_> = h.mu_terms(x, y).to_vec();
            terms.sort_by_key(|(t, _)| *t);
            for (t, c) in terms {
                mu.push((x, y, t, c.to_coeff_strings()));
            }
        }
    }
    let mut delta = Vec::new();
    for x in 0..dim as u32 {
        let mut terms: Vec<_> = h.delta_terms(x).to_vec();
        terms.sort_by_key(|&(a, b, _)| (a, b));
        for (a, b, c) in terms {
            delta.push((x, a, b, c.to_coeff_strings()));
        }
    }
    let epsilon: Vec<(u32, Coeffs)> = (0..dim as u32)
        .filter(|&x| !h.epsilon_coeff(x).is_zero())
        .map(|x| (x, h.epsilon_coeff(x).to_coeff_strings()))
        .collect();
    let eta: Vec<(u32, Coeffs)> = h
        .eta_coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(x, c)| (x as u32, c.to_coeff_strings()))
        .collect();
    let antipode: Vec<(u32, u32, Coeffs)> = (0..dim as u32)
        .map(|x| {
            let (t, c) = h.antipode_term(x);
            (x, *t, c.to_coeff_strings())
        })
        .collect();
    let w: Vec<(u32, Coeffs)> = (0..dim as u32)
        .filter(|&x| !h.w_coeff(x).is_zero())
        .map(|x| (x, h.w_coeff(x).to_coeff_strings()))
        .collect();
    let mut pairing = Vec::new();
    for x in 0..dim {
        for y in 0..dim {
            let v = sd.pairing_matrix().at(x, y);
            if !v.is_zero() {
                pairing.push((x as u32, y as u32, v.to_coeff_strings()));
            }
        }
    }
    ExportFile {
        r: h.level(),
        zeta_order: 4 * h.level(),
        phi: h.field().phi(),
        basis: h
            .basis()
            .iter()
            .map(|b| [b.j, b.p, b.q, b.r_, b.s])
            .collect(),
        tensors: Tensors {
            mu,
            delta,
            epsilon,
            eta,
            antipode,
            w,
            pairing,
        },
    }
}

pub fn to_bytes(file: &ExportFile) -> Result<Vec<u8>, ExportError> {
    let mut bytes = serde_json::to_vec_pretty(file)?;
    bytes.push(b'\n');
    Ok(bytes)
}

pub fn from_bytes(bytes: &[u8]) -> Result<ExportFile, ExportError> {
    Ok(serde_json::from_slice(bytes)?)
}

fn parse_coeffs(field: &Arc<CycField>, c: &Coeffs) -> Result<CycNum, ExportError> {
    CycNum::from_coeff_strings(field, c)
        .ok_or_else(|| ExportError::Malformed("bad coefficient vector".to_string()))
}

/// Re-import an export file and compare every tensor exactly against a fresh
/// in-memory build at the same level. Returns the rebuilt algebra so the
/// verification suites can run on it.
pub fn import_and_check(file: &ExportFile) -> Result<Arc<WhaData>, ExportError> {
    let h = WhaData::build(file.r).map_err(|e| ExportError::Malformed(e.to_string()))?;
    let sd = SelfDuality::build(&h).map_err(|e| ExportError::Malformed(e.to_string()))?;
    let field = h.field();
    if file.zeta_order != 4 * file.r || file.phi != field.phi() {
        return Err(ExportError::Malformed("field parameters disagree".into()));
    }
    let basis: Vec<[usize; 5]> = h
        .basis()
        .iter()
        .map(|b| [b.j, b.p, b.q, b.r_, b.s])
        .collect();
    if basis != file.basis {
        return Err(ExportError::Malformed("basis enumeration disagrees".into()));
    }
    let fresh = export(&h, &sd);
    if fresh.tensors != file.tensors {
        return Err(ExportError::Malformed(
            "structure tensors disagree with a fresh build".into(),
        ));
    }
    // exact parse check of every coefficient vector
    for (_, _, _, c) in &file.tensors.mu {
        parse_coeffs(field, c)?;
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn export_import_roundtrip_is_byte_stable() {
        let h = WhaData::build(3).unwrap();
        let sd = SelfDuality::build(&h).unwrap();
        let file = export(&h, &sd);
        let bytes1 = to_bytes(&file).unwrap();
        let parsed = from_bytes(&bytes1).unwrap();
        let bytes2 = to_bytes(&parsed).unwrap();
        assert_eq!(bytes1, bytes2, "byte-stable reserialization");
        let h2 = import_and_check(&parsed).unwrap();
        assert_eq!(h2.dim(), h.dim());
    }
}

//! File formats: cochain files, representation files, and the
//! multiplication-table JSON.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use poset_forge::cocycle::MultCochain;
use poset_forge::deform::StructureConstantAlgebra;
use poset_forge::error::{Error, Result};
use poset_forge::field::Field;
use poset_forge::poset::{ClosedSubposet, Poset};
use poset_forge::thin::ThinRep;

pub fn read_to_string(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

pub fn load_poset(path: &Path) -> Result<Arc<Poset>> {
    Ok(Arc::new(Poset::parse(&read_to_string(path)?)?))
}

/// Cochain files: one line per chain, `x y : value` (degree 1),
/// `x y z : value` (degree 2), and so on; `#` comments; chains not listed
/// default to 1.
pub fn parse_cochain<F: Field>(
    poset: &Arc<Poset>,
    field: &F,
    text: &str,
    degree: usize,
) -> Result<MultCochain<F>> {
    let mut map = BTreeMap::new();
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (chain_part, value_part) = line
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("missing `:` in cochain line `{line}`")))?;
        let labels: Vec<&str> = chain_part.split_whitespace().collect();
        if labels.len() != degree + 1 {
            return Err(Error::Parse(format!(
                "cochain line `{line}` has {} labels; degree {} needs {}",
                labels.len(),
                degree,
                degree + 1
            )));
        }
        let chain: Vec<usize> =
            labels.iter().map(|l| poset.index_of(l)).collect::<Result<_>>()?;
        let value = field.parse(value_part.trim())?;
        map.insert(chain, value);
    }
    MultCochain::from_partial(poset.clone(), field.clone(), degree, map)
}

pub fn load_cochain<F: Field>(
    poset: &Arc<Poset>,
    field: &F,
    path: &Path,
    degree: usize,
) -> Result<MultCochain<F>> {
    parse_cochain(poset, field, &read_to_string(path)?, degree)
}

/// Representation files:
/// ```text
/// poset: relative/path.poset
/// support: a b
/// rel: a<b
/// alpha: a b 2
/// ```
pub fn load_rep<F: Field>(path: &Path, field: &F) -> Result<(Arc<Poset>, ThinRep<F>)> {
    let text = read_to_string(path)?;
    let base = path.parent().map(|p| p.to_path_buf()).unwrap_or_default();
    let mut poset: Option<Arc<Poset>> = None;
    let mut support: Vec<String> = Vec::new();
    let mut rel: Vec<(String, String)> = Vec::new();
    let mut alpha: Vec<(String, String, String)> = Vec::new();
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("poset:") {
            let mut p = PathBuf::from(rest.trim());
            if p.is_relative() {
                p = base.join(p);
            }
            poset = Some(load_poset(&p)?);
        } else if let Some(rest) = line.strip_prefix("support:") {
            support.extend(rest.split_whitespace().map(|s| s.to_string()));
        } else if let Some(rest) = line.strip_prefix("rel:") {
            for tok in rest.split_whitespace() {
                let (a, b) = tok
                    .split_once('<')
                    .ok_or_else(|| Error::Parse(format!("bad rel pair `{tok}`")))?;
                rel.push((a.to_string(), b.to_string()));
            }
        } else if let Some(rest) = line.strip_prefix("alpha:") {
            let toks: Vec<&str> = rest.split_whitespace().collect();
            if toks.len() != 3 {
                return Err(Error::Parse(format!("bad alpha line `{line}`")));
            }
            alpha.push((toks[0].to_string(), toks[1].to_string(), toks[2].to_string()));
        } else {
            return Err(Error::Parse(format!("unrecognized rep line `{line}`")));
        }
    }
    let poset = poset.ok_or_else(|| Error::Parse("missing `poset:` line".into()))?;
    let members: Vec<usize> =
        support.iter().map(|l| poset.index_of(l)).collect::<Result<_>>()?;
    let pairs: Vec<(usize, usize)> = rel
        .iter()
        .map(|(a, b)| Ok((poset.index_of(a)?, poset.index_of(b)?)))
        .collect::<Result<_>>()?;
    let subposet = ClosedSubposet::new(poset.clone(), members, &pairs)?;
    let mut strict = BTreeMap::new();
    for (a, b, v) in &alpha {
        strict.insert((poset.index_of(a)?, poset.index_of(b)?), field.parse(v)?);
    }
    let rep = ThinRep::new(field.clone(), subposet, &strict)?;
    Ok((poset, rep))
}

/// Multiplication-table JSON:
/// `{"basis":[...],"idempotents":[...],"table":{"i,j":[["k",coeff],...]}}`
/// with 0-based indices in the keys and entries; coefficients are numbers
/// for finite fields and `"p/q"` strings over the rationals.
pub fn load_structure_constants<F: Field>(
    path: &Path,
    field: &F,
) -> Result<StructureConstantAlgebra<F>> {
    let text = read_to_string(path)?;
    let v: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| Error::Parse(format!("bad JSON: {e}")))?;
    let basis: Vec<String> = v["basis"]
        .as_array()
        .ok_or_else(|| Error::Parse("missing `basis` array".into()))?
        .iter()
        .map(|b| b.as_str().map(|s| s.to_string()))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Parse("basis entries must be strings".into()))?;
    let n = basis.len();
    let idempotents: Vec<usize> = v["idempotents"]
        .as_array()
        .ok_or_else(|| Error::Parse("missing `idempotents` array".into()))?
        .iter()
        .map(|b| b.as_u64().map(|x| x as usize))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Parse("idempotents must be indices".into()))?;
    for &i in &idempotents {
        if i >= n {
            return Err(Error::Parse(format!("idempotent index {i} out of range")));
        }
    }
    let mut table = vec![vec![Vec::new(); n]; n];
    let obj = v["table"]
        .as_object()
        .ok_or_else(|| Error::Parse("missing `table` object".into()))?;
    for (key, entries) in obj {
        let (i, j) = key
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("bad table key `{key}`")))?;
        let i: usize =
            i.trim().parse().map_err(|_| Error::Parse(format!("bad table key `{key}`")))?;
        let j: usize =
            j.trim().parse().map_err(|_| Error::Parse(format!("bad table key `{key}`")))?;
        if i >= n || j >= n {
            return Err(Error::Parse(format!("table key `{key}` out of range")));
        }
        let list = entries
            .as_array()
            .ok_or_else(|| Error::Parse(format!("table entry `{key}` must be an array")))?;
        for pair in list {
            let arr = pair
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| Error::Parse("table terms must be [index, coeff] pairs".into()))?;
            let k = arr[0]
                .as_u64()
                .ok_or_else(|| Error::Parse("term index must be a number".into()))?
                as usize;
            if k >= n {
                return Err(Error::Parse(format!("term index {k} out of range")));
            }
            let coeff = match &arr[1] {
                serde_json::Value::String(s) => field.parse(s)?,
                other => field.parse(&other.to_string())?,
            };
            table[i][j].push((k, coeff));
        }
    }
    Ok(StructureConstantAlgebra { basis, idempotents, field: field.clone(), table })
}

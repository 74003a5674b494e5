//! Pair files for `--pairs critical`: one `<i> : <I labels> | <J labels>` per line.

use anyhow::{anyhow, bail, Context, Result};
use golodscope_core::{PairSpec, SimplicialComplex};

pub fn parse_pair_file(c: &SimplicialComplex, text: &str) -> Result<Vec<PairSpec>> {
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let lineno = k + 1;
        let (degree, sets) = line.split_once(':').ok_or_else(|| anyhow!("pair file line {lineno}: missing ':'"))?;
        let degree: usize =
            degree.trim().parse().with_context(|| format!("pair file line {lineno}: bad degree {:?}", degree.trim()))?;
        let (left, right) = sets.split_once('|').ok_or_else(|| anyhow!("pair file line {lineno}: missing '|'"))?;
        let side = |s: &str| {
            let labels: Vec<&str> = s.split_whitespace().collect();
            if labels.is_empty() {
                bail!("pair file line {lineno}: empty vertex set");
            }
            c.vertex_set(&labels).with_context(|| format!("pair file line {lineno}"))
        };
        out.push(PairSpec::new(side(left)?, side(right)?, degree));
    }
    if out.is_empty() {
        bail!("pair file lists no pairs");
    }
    Ok(out)
}

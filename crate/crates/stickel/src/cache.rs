//! Versioned on-disk caches for `a_p` tables and rational period maps.
//!
//! Both are plain text. The first line is a magic string carrying the
//! format version, followed by `key value` header lines and a body:
//!
//! ```text
//! stickel-ap-cache v1
//! key 0,-1,1,-10,-20;11
//! pmax 1000
//! 2 -2
//! 3 -1
//! ...
//! ```
//!
//! ```text
//! stickel-period-cache v1
//! key 0,-1,1,-10,-20;11
//! level 11
//! normalization gcd1-first-positive
//! primes 2,3,5,7
//! 0;0;1;0
//! ...
//! ```
//!
//! The period body is the `index;c;d;value` dump of the map. A file
//! whose magic, key or parameters do not match is ignored and rewritten.
//! Writes go to a temporary file in the same directory and are renamed
//! into place, so concurrent readers never see a partial file.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};
use stickel_core::curve::CurveData;
use stickel_core::maninsym::{cut_eigenspace, ModularSymbolSpace, RationalPeriodMap};

use crate::error::{CliError, Context};

pub const AP_MAGIC: &str = "stickel-ap-cache v1";
pub const PERIOD_MAGIC: &str = "stickel-period-cache v1";

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

fn digest(key: &str) -> String {
    hex::encode(&Sha256::digest(key.as_bytes())[..8])
}

fn write_atomic(dir: &Path, path: &Path, contents: &str) -> Result<(), CliError> {
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| CliError::io(dir, e))?;
    tmp.write_all(contents.as_bytes()).map_err(|e| CliError::io(path, e))?;
    tmp.persist(path).map_err(|e| CliError::io(path, e.error))?;
    Ok(())
}

/// Splits a cache file into its header map and body, checking the magic.
fn parse_header<'a>(text: &'a str, magic: &str) -> Option<(BTreeMap<&'a str, &'a str>, Vec<&'a str>)> {
    let mut lines = text.lines();
    if lines.next()? != magic {
        return None;
    }
    let mut header = BTreeMap::new();
    let mut body = Vec::new();
    for line in lines {
        match line.split_once(' ') {
            Some((k, v)) if body.is_empty() && !k.contains(';') && k.parse::<u64>().is_err() => {
                header.insert(k, v);
            }
            _ => body.push(line),
        }
    }
    Some((header, body))
}

impl Cache {
    pub fn open(dir: impl Into<PathBuf>) -> Result<Self, CliError> {
        let dir = dir.into();
        std::fs::create_dir_all(&dir).map_err(|e| CliError::io(&dir, e))?;
        Ok(Self { dir })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn ap_path(&self, curve: &CurveData, p_max: u64) -> PathBuf {
        self.dir.join(format!("ap-{}-{p_max}.txt", digest(&curve.key())))
    }

    pub fn period_path(&self, curve: &CurveData) -> PathBuf {
        self.dir.join(format!("period-{}.txt", digest(&curve.key())))
    }

    fn read_ap(path: &Path, key: &str, p_max: u64) -> Option<BTreeMap<u64, i64>> {
        let text = std::fs::read_to_string(path).ok()?;
        let (header, body) = parse_header(&text, AP_MAGIC)?;
        if header.get("key") != Some(&key) || header.get("pmax")?.parse::<u64>().ok()? != p_max {
            return None;
        }
        body.iter()
            .map(|l| {
                let (p, a) = l.split_once(' ')?;
                Some((p.parse().ok()?, a.parse().ok()?))
            })
            .collect()
    }

    /// `a_p` for all primes `p <= p_max`, from disk when possible.
    pub fn ap_table(&self, curve: &CurveData, p_max: u64) -> Result<BTreeMap<u64, i64>, CliError> {
        let path = self.ap_path(curve, p_max);
        let key = curve.key();
        if let Some(t) = Self::read_ap(&path, &key, p_max) {
            return Ok(t);
        }
        let table = curve.ap_table(p_max).context(|| format!("a_p table of {}", curve.label()))?;
        let mut out = format!("{AP_MAGIC}\nkey {key}\npmax {p_max}\n");
        for (p, a) in &table {
            out.push_str(&format!("{p} {a}\n"));
        }
        write_atomic(&self.dir, &path, &out)?;
        Ok(table)
    }

    fn read_period(
        path: &Path,
        space: &ModularSymbolSpace,
        curve: &CurveData,
    ) -> Option<RationalPeriodMap> {
        let text = std::fs::read_to_string(path).ok()?;
        let (header, body) = parse_header(&text, PERIOD_MAGIC)?;
        let key = curve.key();
        if header.get("key") != Some(&key.as_str())
            || header.get("level")?.parse::<u64>().ok()? != curve.conductor()
            || *header.get("normalization")? != stickel_core::maninsym::NORMALIZATION_ID
        {
            return None;
        }
        let primes = header
            .get("primes")?
            .split(',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse().ok())
            .collect::<Option<Vec<u64>>>()?;
        let mut values = Vec::with_capacity(body.len());
        for (i, line) in body.iter().enumerate() {
            let mut f = line.split(';');
            if f.next()?.parse::<usize>().ok()? != i {
                return None;
            }
            values.push(f.nth(2)?.parse().ok()?);
        }
        RationalPeriodMap::from_parts(space, curve, values, primes).ok()
    }

    /// The period map of `curve` on `space`, from disk when possible.
    pub fn period_map(&self, space: &ModularSymbolSpace, curve: &CurveData) -> Result<RationalPeriodMap, CliError> {
        let path = self.period_path(curve);
        if let Some(m) = Self::read_period(&path, space, curve) {
            return Ok(m);
        }
        let map = cut_eigenspace(space, curve).context(|| format!("period map of {}", curve.label()))?;
        let primes: Vec<String> = map.primes_used().iter().map(u64::to_string).collect();
        let out = format!(
            "{PERIOD_MAGIC}\nkey {}\nlevel {}\nnormalization {}\nprimes {}\n{}",
            curve.key(),
            curve.conductor(),
            map.normalization_id(),
            primes.join(","),
            map.dump()
        );
        write_atomic(&self.dir, &path, &out)?;
        Ok(map)
    }
}

/// Computes without touching disk when no cache is configured.
pub fn period_map(
    cache: Option<&Cache>,
    space: &ModularSymbolSpace,
    curve: &CurveData,
) -> Result<RationalPeriodMap, CliError> {
    match cache {
        Some(c) => c.period_map(space, curve),
        None => cut_eigenspace(space, curve).context(|| format!("period map of {}", curve.label())),
    }
}

pub fn ap_table(cache: Option<&Cache>, curve: &CurveData, p_max: u64) -> Result<BTreeMap<u64, i64>, CliError> {
    match cache {
        Some(c) => c.ap_table(curve, p_max),
        None => curve.ap_table(p_max).context(|| format!("a_p table of {}", curve.label())),
    }
}

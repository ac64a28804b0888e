//! On-disk memo of skew counts, keyed by `outer/inner`.
//!
//! The file starts with a version line; any other first line (or any
//! unreadable entry) makes the whole file be ignored and rewritten.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::Context;
use num_bigint::BigUint;
use partition_minors::Partition;

pub const HEADER: &str = "# pminor count cache v1";
pub const FILE_NAME: &str = "skew-counts.txt";

pub struct CountCache {
    path: PathBuf,
    entries: BTreeMap<String, BigUint>,
    dirty: bool,
}

fn key(outer: &Partition, inner: &Partition) -> String {
    format!("{outer}/{inner}")
}

fn parse(text: &str) -> Option<BTreeMap<String, BigUint>> {
    let mut lines = text.lines();
    if lines.next()? != HEADER {
        return None;
    }
    let mut entries = BTreeMap::new();
    for line in lines.filter(|l| !l.trim().is_empty()) {
        let (k, v) = line.split_once(' ')?;
        let (outer, inner) = k.split_once('/')?;
        let outer: Partition = outer.parse().ok()?;
        let inner: Partition = inner.parse().ok()?;
        entries.insert(key(&outer, &inner), v.parse().ok()?);
    }
    Some(entries)
}

impl CountCache {
    pub fn open(dir: &Path) -> anyhow::Result<Self> {
        let path = dir.join(FILE_NAME);
        let (entries, dirty) = match fs::read_to_string(&path) {
            Ok(text) => match parse(&text) {
                Some(entries) => (entries, false),
                None => (BTreeMap::new(), true),
            },
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => (BTreeMap::new(), false),
            Err(e) => return Err(e).with_context(|| format!("reading {}", path.display())),
        };
        Ok(Self { path, entries, dirty })
    }

    pub fn get(&self, outer: &Partition, inner: &Partition) -> Option<BigUint> {
        self.entries.get(&key(outer, inner)).cloned()
    }

    pub fn insert(&mut self, outer: &Partition, inner: &Partition, count: &BigUint) {
        if self.entries.insert(key(outer, inner), count.clone()).as_ref() != Some(count) {
            self.dirty = true;
        }
    }

    pub fn save(&mut self) -> anyhow::Result<()> {
        if !self.dirty {
            return Ok(());
        }
        let dir = self.path.parent().expect("cache file has a directory");
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        let tmp = self.path.with_extension("tmp");
        {
            let mut f = fs::File::create(&tmp).with_context(|| format!("writing {}", tmp.display()))?;
            writeln!(f, "{HEADER}")?;
            for (k, v) in &self.entries {
                writeln!(f, "{k} {v}")?;
            }
        }
        fs::rename(&tmp, &self.path).with_context(|| format!("replacing {}", self.path.display()))?;
        self.dirty = false;
        Ok(())
    }
}

//! On-disk cache of solve tables.
//!
//! File format (little-endian): magic `PLAB1`, cop rule byte, robber rule
//! byte, k (u16), n (u16), adjacency hash (u64), state count (u64), the
//! bit-packed win array, then one u16 capture time per state. Keys are over
//! the literal adjacency encoding, so isomorphic relabelings miss on purpose.

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rules::MovementRule;

use super::{solve, SolveTable};

pub const MAGIC: &[u8; 5] = b"PLAB1";

/// Environment variable overriding the default cache directory; an explicit
/// `--cache-dir` flag wins over both.
pub const CACHE_DIR_ENV: &str = "PLAB_CACHE_DIR";
pub const DEFAULT_CACHE_DIR: &str = "plab-cache";

pub fn default_cache_dir() -> PathBuf {
    std::env::var_os(CACHE_DIR_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR))
}

fn file_name(hash: u64, k: usize, rule: MovementRule) -> String {
    format!("{hash:016x}-k{k}-{}.plab", rule.name())
}

pub fn write_table(table: &SolveTable, w: &mut impl Write) -> Result<()> {
    w.write_all(MAGIC)?;
    w.write_all(&[table.rule().cop_byte(), table.rule().robber_byte()])?;
    w.write_all(&(table.k() as u16).to_le_bytes())?;
    w.write_all(&(table.n() as u16).to_le_bytes())?;
    w.write_all(&table.graph_hash().to_le_bytes())?;
    w.write_all(&table.total_states().to_le_bytes())?;
    for word in table.win_words() {
        w.write_all(&word.to_le_bytes())?;
    }
    for &t in table.times() {
        w.write_all(&t.to_le_bytes())?;
    }
    Ok(())
}

pub fn read_table(r: &mut impl Read) -> Result<SolveTable> {
    let mut magic = [0u8; 5];
    r.read_exact(&mut magic)?;
    if &magic != MAGIC {
        return Err(Error::Cache("bad magic bytes".into()));
    }
    let mut two = [0u8; 2];
    r.read_exact(&mut two)?;
    let rule = MovementRule::from_bytes(two[0], two[1])
        .ok_or_else(|| Error::Cache("unknown rule bytes".into()))?;
    let mut u16buf = [0u8; 2];
    r.read_exact(&mut u16buf)?;
    let k = u16::from_le_bytes(u16buf) as usize;
    r.read_exact(&mut u16buf)?;
    let n = u16::from_le_bytes(u16buf) as usize;
    let mut u64buf = [0u8; 8];
    r.read_exact(&mut u64buf)?;
    let hash = u64::from_le_bytes(u64buf);
    r.read_exact(&mut u64buf)?;
    let total = u64::from_le_bytes(u64buf) as usize;

    let words = total.div_ceil(64);
    let mut win = Vec::with_capacity(words);
    for _ in 0..words {
        r.read_exact(&mut u64buf)?;
        win.push(u64::from_le_bytes(u64buf));
    }
    let mut time = Vec::with_capacity(total);
    for _ in 0..total {
        r.read_exact(&mut u16buf)?;
        time.push(u16::from_le_bytes(u16buf));
    }
    // catch truncated-vs-padded mismatches
    let mut probe = [0u8; 1];
    if r.read(&mut probe)? != 0 {
        return Err(Error::Cache("trailing bytes after table".into()));
    }
    Ok(SolveTable::from_raw(hash, n, k, rule, win, time))
}

/// Cache lookup. A hit must match hash, k, rule, and state count exactly.
pub fn get(dir: &Path, g: &Graph, k: usize, rule: MovementRule) -> Option<SolveTable> {
    let path = dir.join(file_name(g.adjacency_hash(), k, rule));
    let data = fs::read(&path).ok()?;
    match read_table(&mut data.as_slice()) {
        Ok(t)
            if t.graph_hash() == g.adjacency_hash()
                && t.k() == k
                && t.rule() == rule
                && t.n() == g.vertex_count() =>
        {
            Some(t)
        }
        Ok(_) => None,
        Err(e) => {
            eprintln!("warning: corrupt cache file {}: {e}; recomputing", path.display());
            None
        }
    }
}

pub fn put(dir: &Path, table: &SolveTable) -> Result<()> {
    fs::create_dir_all(dir)?;
    let path = dir.join(file_name(table.graph_hash(), table.k(), table.rule()));
    let tmp = path.with_extension("tmp");
    let mut f = fs::File::create(&tmp)?;
    write_table(table, &mut f)?;
    f.sync_all()?;
    fs::rename(&tmp, &path)?;
    Ok(())
}

/// Solve with read-through caching; `dir = None` disables the cache.
pub fn solve_cached(
    dir: Option<&Path>,
    g: &Graph,
    k: usize,
    rule: MovementRule,
) -> Result<SolveTable> {
    if let Some(dir) = dir {
        if let Some(t) = get(dir, g, k, rule) {
            return Ok(t);
        }
    }
    let table = solve(g, k, rule)?;
    if let Some(dir) = dir {
        put(dir, &table)?;
    }
    Ok(table)
}

/// Entries found in a cache directory.
pub struct CacheEntry {
    pub file: String,
    pub n: usize,
    pub k: usize,
    pub rule: MovementRule,
    pub hash: u64,
    pub states: u64,
    pub bytes: u64,
}

pub fn list(dir: &Path) -> Result<Vec<CacheEntry>> {
    let mut out = Vec::new();
    if !dir.exists() {
        return Ok(out);
    }
    let mut files: Vec<_> = fs::read_dir(dir)?
        .filter_map(|e| e.ok())
        .filter(|e| e.path().extension().is_some_and(|x| x == "plab"))
        .collect();
    files.sort_by_key(|e| e.file_name());
    for entry in files {
        let data = fs::read(entry.path())?;
        match read_table(&mut data.as_slice()) {
            Ok(t) => out.push(CacheEntry {
                file: entry.file_name().to_string_lossy().into_owned(),
                n: t.n(),
                k: t.k(),
                rule: t.rule(),
                hash: t.graph_hash(),
                states: t.total_states(),
                bytes: data.len() as u64,
            }),
            Err(e) => eprintln!(
                "warning: unreadable cache file {}: {e}",
                entry.path().display()
            ),
        }
    }
    Ok(out)
}

/// JSON export of a table for inspection: classification of every
/// robber-to-move and round-start state.
pub fn export_json(table: &SolveTable, g: &Graph) -> serde_json::Value {
    use super::GameState;
    let mut initial = Vec::new();
    let mut robber_to_move = Vec::new();
    table.layout().codec(table.k()).for_each(|_, cops| {
        for r in g.vertices() {
            let start = GameState::round_start(cops.to_vec(), r);
            initial.push(serde_json::json!({
                "cops": cops,
                "robber": r,
                "status": table.status(&start),
                "capture_time_moves": nullable_time(table.time(&start)),
            }));
            let rtm = GameState::RobberToMove {
                cops: cops.to_vec(),
                robber: r,
            };
            robber_to_move.push(serde_json::json!({
                "cops": cops,
                "robber": r,
                "status": table.status(&rtm),
                "capture_time_moves": nullable_time(table.time(&rtm)),
            }));
        }
    });
    serde_json::json!({
        "n": table.n(),
        "k": table.k(),
        "rule": table.rule().name(),
        "graph_hash": format!("{:016x}", table.graph_hash()),
        "total_states": table.total_states(),
        "note": "capture times count individual moves; divide cop moves by k for rounds",
        "initial_states": initial,
        "robber_to_move_states": robber_to_move,
    })
}

fn nullable_time(t: u16) -> serde_json::Value {
    if t == super::ROBBER_WIN_TIME {
        serde_json::Value::Null
    } else {
        serde_json::json!(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle, path};

    #[test]
    fn roundtrip_identity() {
        let g = cycle(5).unwrap();
        let t = solve(&g, 2, MovementRule::FULLY_ACTIVE).unwrap();
        let mut buf = Vec::new();
        write_table(&t, &mut buf).unwrap();
        let back = read_table(&mut buf.as_slice()).unwrap();
        assert_eq!(back.graph_hash(), t.graph_hash());
        assert_eq!(back.win_words(), t.win_words());
        assert_eq!(back.times(), t.times());
    }

    #[test]
    fn cache_hits_and_misses() {
        let dir = std::env::temp_dir().join(format!("plab-test-cache-{}", std::process::id()));
        let _ = std::fs::remove_dir_all(&dir);
        let g = path(4).unwrap();
        let t = solve_cached(Some(&dir), &g, 1, MovementRule::PASSIVE).unwrap();
        assert!(get(&dir, &g, 1, MovementRule::PASSIVE).is_some());
        // rule change misses
        assert!(get(&dir, &g, 1, MovementRule::LAZY).is_none());
        // relabeled isomorphic graph misses by design
        let relabeled = Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3)]).unwrap();
        assert!(get(&dir, &relabeled, 1, MovementRule::PASSIVE).is_none());
        // corrupt file is reported and recomputed
        let name = super::file_name(g.adjacency_hash(), 1, MovementRule::PASSIVE);
        std::fs::write(dir.join(&name), b"garbage").unwrap();
        assert!(get(&dir, &g, 1, MovementRule::PASSIVE).is_none());
        let again = solve_cached(Some(&dir), &g, 1, MovementRule::PASSIVE).unwrap();
        assert_eq!(again.win_words(), t.win_words());
        let entries = list(&dir).unwrap();
        assert_eq!(entries.len(), 1);
        let _ = std::fs::remove_dir_all(&dir);
    }
}

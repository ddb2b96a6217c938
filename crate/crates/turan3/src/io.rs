//! Text formats.
//!
//! `.h3` (3-graphs): first line `n m`, then `m` lines `u v w` with
//! `0 <= u < v < w < n` in ascending lexicographic order. Unsorted or
//! duplicate lines are rejected.
//!
//! `.cmg` (colored multigraphs): first line `n s`, then for each layer a
//! line `m_i` followed by `m_i` lines `u v` with `u < v < n`, ascending,
//! no duplicates within a layer.

use std::path::Path;

use crate::colored::ColoredMultigraph;
use crate::error::{Error, Result};
use crate::hypergraph::{Graph2, Hypergraph3};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

struct Lines<'a> {
    iter: std::str::Lines<'a>,
    number: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines { iter: text.lines(), number: 0 }
    }

    fn next_content(&mut self) -> Option<(usize, &'a str)> {
        for line in self.iter.by_ref() {
            self.number += 1;
            if !line.trim().is_empty() {
                return Some((self.number, line));
            }
        }
        None
    }

    fn expect_numbers(&mut self, count: usize, what: &str) -> Result<(usize, Vec<u64>)> {
        let (no, line) = self
            .next_content()
            .ok_or_else(|| parse_err(self.number + 1, format!("expected {what}, found end of input")))?;
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != count {
            return Err(parse_err(no, format!("expected {count} fields for {what}, found {}", fields.len())));
        }
        let mut numbers = Vec::with_capacity(count);
        for f in fields {
            numbers.push(
                f.parse::<u64>()
                    .map_err(|_| parse_err(no, format!("invalid integer `{f}`")))?,
            );
        }
        Ok((no, numbers))
    }

    fn expect_end(&mut self) -> Result<()> {
        if let Some((no, _)) = self.next_content() {
            return Err(parse_err(no, "unexpected trailing content"));
        }
        Ok(())
    }
}

pub fn write_h3(h: &Hypergraph3) -> String {
    let mut out = format!("{} {}\n", h.n(), h.edge_count());
    for e in h.edges() {
        out.push_str(&format!("{} {} {}\n", e[0], e[1], e[2]));
    }
    out
}

pub fn read_h3(text: &str) -> Result<Hypergraph3> {
    let mut lines = Lines::new(text);
    let (_, header) = lines.expect_numbers(2, "header `n m`")?;
    let (n, m) = (header[0], header[1]);
    if n > u32::MAX as u64 {
        return Err(parse_err(1, "vertex count too large"));
    }
    let n = n as u32;
    let mut edges: Vec<[u32; 3]> = Vec::with_capacity(m as usize);
    for _ in 0..m {
        let (no, nums) = lines.expect_numbers(3, "edge line `u v w`")?;
        if !(nums[0] < nums[1] && nums[1] < nums[2]) {
            return Err(parse_err(no, "edge vertices must satisfy u < v < w"));
        }
        if nums[2] >= n as u64 {
            return Err(parse_err(no, format!("vertex {} out of range (n = {n})", nums[2])));
        }
        let e = [nums[0] as u32, nums[1] as u32, nums[2] as u32];
        if let Some(prev) = edges.last() {
            if *prev >= e {
                return Err(parse_err(no, "edge lines must be strictly ascending"));
            }
        }
        edges.push(e);
    }
    lines.expect_end()?;
    Hypergraph3::new(n, edges)
}

pub fn write_cmg(m: &ColoredMultigraph) -> String {
    let mut out = format!("{} {}\n", m.n(), m.s());
    for layer in m.layers() {
        out.push_str(&format!("{}\n", layer.edge_count()));
        for e in layer.edges() {
            out.push_str(&format!("{} {}\n", e[0], e[1]));
        }
    }
    out
}

pub fn read_cmg(text: &str) -> Result<ColoredMultigraph> {
    let mut lines = Lines::new(text);
    let (_, header) = lines.expect_numbers(2, "header `n s`")?;
    let (n, s) = (header[0], header[1]);
    if n > u32::MAX as u64 {
        return Err(parse_err(1, "vertex count too large"));
    }
    let n = n as u32;
    let mut layers = Vec::with_capacity(s as usize);
    for _ in 0..s {
        let (_, count) = lines.expect_numbers(1, "layer size `m_i`")?;
        let mut edges: Vec<[u32; 2]> = Vec::with_capacity(count[0] as usize);
        for _ in 0..count[0] {
            let (no, nums) = lines.expect_numbers(2, "layer edge `u v`")?;
            if nums[0] >= nums[1] {
                return Err(parse_err(no, "layer edge must satisfy u < v"));
            }
            if nums[1] >= n as u64 {
                return Err(parse_err(no, format!("vertex {} out of range (n = {n})", nums[1])));
            }
            let e = [nums[0] as u32, nums[1] as u32];
            if let Some(prev) = edges.last() {
                if *prev >= e {
                    return Err(parse_err(no, "layer edges must be strictly ascending"));
                }
            }
            edges.push(e);
        }
        layers.push(Graph2::new(n, edges)?);
    }
    lines.expect_end()?;
    ColoredMultigraph::new(n, layers)
}

pub fn load_h3(path: &Path) -> Result<Hypergraph3> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    read_h3(&text)
}

pub fn save_h3(path: &Path, h: &Hypergraph3) -> Result<()> {
    std::fs::write(path, write_h3(h))
        .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))
}

pub fn load_cmg(path: &Path) -> Result<ColoredMultigraph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    read_cmg(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{matching, turan_graph};

    #[test]
    fn h3_round_trip() {
        let m2 = matching(2);
        let text = write_h3(&m2);
        assert_eq!(text, "6 2\n0 1 2\n3 4 5\n");
        let back = read_h3(&text).unwrap();
        assert_eq!(back, m2);
        assert_eq!(write_h3(&back), text);
    }

    #[test]
    fn h3_rejects_unsorted_triple() {
        assert!(read_h3("4 1\n2 1 0\n").is_err());
    }

    #[test]
    fn h3_rejects_duplicate_and_out_of_order() {
        assert!(read_h3("5 2\n0 1 2\n0 1 2\n").is_err());
        assert!(read_h3("5 2\n0 1 3\n0 1 2\n").is_err());
    }

    #[test]
    fn h3_rejects_wrong_counts() {
        assert!(read_h3("4 2\n0 1 2\n").is_err());
        assert!(read_h3("4 0\n0 1 2\n").is_err());
        assert!(read_h3("4 1\n0 1 5\n").is_err());
    }

    #[test]
    fn h3_empty_host() {
        let h = read_h3("0 0\n").unwrap();
        assert_eq!(h.n(), 0);
        assert_eq!(write_h3(&h), "0 0\n");
    }

    #[test]
    fn cmg_round_trip() {
        let g = turan_graph(4, 2).unwrap();
        let m = ColoredMultigraph::new(4, vec![g.clone(), g]).unwrap();
        let text = write_cmg(&m);
        let back = read_cmg(&text).unwrap();
        assert_eq!(write_cmg(&back), text);
        assert_eq!(back.multiplicity(0, 1).unwrap(), 2);
    }

    #[test]
    fn cmg_rejects_bad_lines() {
        assert!(read_cmg("3 1\n1\n1 1\n").is_err());
        assert!(read_cmg("3 1\n2\n0 1\n0 1\n").is_err());
        assert!(read_cmg("3 1\n1\n0 5\n").is_err());
    }
}

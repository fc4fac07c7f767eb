//! Multigraded Betti tallies and their table rendering.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::multidegree::Multidegree;

/// Multiplicity of each generator degree at each homological index.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTally {
    entries: BTreeMap<(usize, Multidegree), usize>,
}

/// One entry of a tally in its JSON form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub degree: Multidegree,
    pub rank: usize,
}

impl BettiTally {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, i: usize, degree: Multidegree, count: usize) {
        if count > 0 {
            *self.entries.entry((i, degree)).or_insert(0) += count;
        }
    }

    pub fn get(&self, i: usize, degree: &Multidegree) -> usize {
        self.entries.get(&(i, degree.clone())).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total rank at index `i`.
    pub fn rank(&self, i: usize) -> usize {
        self.entries.iter().filter(|((j, _), _)| *j == i).map(|(_, n)| n).sum()
    }

    /// Ranks at indices `0..=length`.
    pub fn ranks(&self) -> Vec<usize> {
        let len = self.entries.keys().map(|(i, _)| *i).max().map_or(0, |m| m + 1);
        (0..len).map(|i| self.rank(i)).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Multidegree, usize)> {
        self.entries.iter().map(|((i, d), n)| (*i, d, *n))
    }

    /// Entrywise `self <= other`.
    pub fn is_subtally_of(&self, other: &BettiTally) -> bool {
        self.iter().all(|(i, d, n)| n <= other.get(i, d))
    }

    pub fn to_entries(&self) -> Vec<BettiEntry> {
        self.iter().map(|(i, d, n)| BettiEntry { i, degree: d.clone(), rank: n }).collect()
    }

    pub fn from_entries(entries: &[BettiEntry]) -> Self {
        let mut t = BettiTally::new();
        for e in entries {
            t.add(e.i, e.degree.clone(), e.rank);
        }
        t
    }

    /// Formal sum of the degrees at `(i, total degree)`, e.g. `2a3b+2a2b2`.
    fn cell(&self, i: usize, total: i64) -> String {
        let mut terms: Vec<(&Multidegree, usize)> =
            self.iter().filter(|(j, d, _)| *j == i && d.total() == total).map(|(_, d, n)| (d, n)).collect();
        if terms.is_empty() {
            return ".".into();
        }
        terms.sort_by(|a, b| b.0.cmp(a.0));
        terms.iter().map(|(d, n)| word(d, *n)).collect::<Vec<_>>().join("+")
    }
}

fn word(d: &Multidegree, n: usize) -> String {
    let mut s = String::new();
    for (k, e) in d.iter().enumerate() {
        if e == 0 {
            continue;
        }
        s.push((b'a' + k as u8) as char);
        if e != 1 {
            s.push_str(&e.to_string());
        }
    }
    match (n, s.is_empty()) {
        (1, true) => "1".into(),
        (1, false) => s,
        (n, _) => format!("{n}{s}"),
    }
}

impl fmt::Display for BettiTally {
    /// Rows are total degrees, columns homological indices.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ncols = self.ranks().len();
        let rows: std::collections::BTreeSet<i64> = self.entries.keys().map(|(_, d)| d.total()).collect();
        let labels: Vec<String> = rows.iter().map(|r| format!("{r}:")).collect();
        let lw = labels.iter().map(String::len).max().unwrap_or(0);
        let cells: Vec<Vec<String>> = rows.iter().map(|&r| (0..ncols).map(|i| self.cell(i, r)).collect()).collect();
        let widths: Vec<usize> = (0..ncols)
            .map(|i| cells.iter().map(|row| row[i].len()).chain([i.to_string().len()]).max().unwrap())
            .collect();
        let header: Vec<String> = (0..ncols).map(|i| format!("{:>w$}", i, w = widths[i])).collect();
        writeln!(f, "{:lw$} {}", "", header.join(" "))?;
        for (label, row) in labels.iter().zip(&cells) {
            let row: Vec<String> = row.iter().enumerate().map(|(i, c)| format!("{:>w$}", c, w = widths[i])).collect();
            writeln!(f, "{:>lw$} {}", label, row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deg;

    #[test]
    fn words() {
        assert_eq!(word(&deg![3, 1], 2), "2a3b");
        assert_eq!(word(&deg![0, 0], 1), "1");
        assert_eq!(word(&deg![1, 1], 1), "ab");
        assert_eq!(word(&deg![0, 3], 1), "b3");
    }

    #[test]
    fn renders_rows_by_total_degree() {
        let mut t = BettiTally::new();
        t.add(0, deg![0, 0], 1);
        t.add(1, deg![1, 1], 1);
        t.add(1, deg![3, 0], 1);
        t.add(1, deg![2, 1], 1);
        t.add(2, deg![3, 1], 2);
        let text = t.to_string();
        let squeeze = |s: &str| s.split_whitespace().collect::<Vec<_>>().join(" ");
        assert_eq!(squeeze(&text), "0 1 2 0: 1 . . 2: . ab . 3: . a3+a2b . 4: . . 2a3b");
        assert_eq!(t.ranks(), vec![1, 3, 2]);
        assert!(BettiTally::new().to_string().trim().is_empty());
    }
}

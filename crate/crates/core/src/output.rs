//! Stable JSON and text renderings of expansions and Kostka tables, shared by
//! the command-line tool and the browser demo.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arith::Ring;
use crate::macdonald::KostkaMatrix;
use crate::partition::Partition;
use crate::report::Status;
use crate::symmetric::SymPoly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coeff {
    pub partition: Vec<u32>,
    pub value: String,
}

/// A monomial-basis expansion.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Expansion {
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub basis: String,
    pub coeffs: Vec<Coeff>,
    pub provenance: String,
    pub check: Option<Status>,
}

impl Expansion {
    /// Terms are listed in reverse lexicographic order of partitions.
    pub fn new<R: Ring>(
        command: &str,
        params: BTreeMap<String, Value>,
        f: &SymPoly<R>,
        provenance: &str,
        check: Option<Status>,
    ) -> Self {
        let mut terms: Vec<(&Partition, &R)> = f.terms();
        terms.sort_by(|a, b| b.0.cmp(a.0));
        Expansion {
            command: command.to_string(),
            params,
            basis: f.basis().to_string(),
            coeffs: terms
                .into_iter()
                .map(|(p, c)| Coeff {
                    partition: p.parts().to_vec(),
                    value: c.to_string(),
                })
                .collect(),
            provenance: provenance.to_string(),
            check,
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for c in &self.coeffs {
            let label: Vec<String> = c.partition.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(s, "({}): {}", label.join(","), c.value);
        }
        if self.coeffs.is_empty() {
            s.push_str("0\n");
        }
        let _ = writeln!(s, "provenance: {}", self.provenance);
        if let Some(c) = self.check {
            let _ = writeln!(s, "check: {}", status_word(c));
        }
        s
    }
}

/// A Kostka table with row and column labels.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KostkaTable {
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub labels: Vec<Vec<u32>>,
    pub entries: Vec<Vec<String>>,
    pub provenance: String,
    pub check: Option<Status>,
}

impl KostkaTable {
    pub fn new(k: &KostkaMatrix, provenance: &str, check: Option<Status>) -> Self {
        let mut params = BTreeMap::new();
        params.insert("degree".to_string(), Value::from(k.degree));
        params.insert("nvars".to_string(), Value::from(k.nvars));
        KostkaTable {
            command: "kostka".into(),
            params,
            labels: k.labels.iter().map(|p| p.parts().to_vec()).collect(),
            entries: k
                .entries
                .iter()
                .map(|row| row.iter().map(|c| c.to_string()).collect())
                .collect(),
            provenance: provenance.to_string(),
            check,
        }
    }

    pub fn to_text(&self) -> String {
        let label = |p: &[u32]| {
            let s: Vec<String> = p.iter().map(|x| x.to_string()).collect();
            format!("({})", s.join(","))
        };
        let mut s = String::new();
        for (row, entries) in self.labels.iter().zip(&self.entries) {
            for (col, e) in self.labels.iter().zip(entries) {
                let _ = writeln!(s, "K[{}][{}] = {e}", label(row), label(col));
            }
        }
        let _ = writeln!(s, "provenance: {}", self.provenance);
        if let Some(c) = self.check {
            let _ = writeln!(s, "check: {}", status_word(c));
        }
        s
    }
}

pub fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
    }
}

/// Compact JSON with a trailing newline.
pub fn to_json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::macdonald::{kostka_matrix, macdonald_j_raising, RaisingKind};

    fn pt(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn expansion_of_j2() {
        let r = macdonald_j_raising(&pt(&[2]), 2, RaisingKind::Kminus).unwrap();
        let e = Expansion::new("jpoly", BTreeMap::new(), &r.j, r.provenance.tag(), None);
        assert_eq!(e.coeffs[0].partition, vec![2]);
        assert_eq!(e.coeffs[0].value, "1 - t - q*t + q*t^2");
        assert_eq!(e.coeffs[1].partition, vec![1, 1]);
        assert_eq!(e.coeffs[1].value, "1 + q - 2*t - 2*q*t + t^2 + q*t^2");
        let json = to_json_line(&e);
        let back: Expansion = serde_json::from_str(&json).unwrap();
        assert_eq!(to_json_line(&back), json);
    }

    #[test]
    fn kostka_table_two() {
        let k = kostka_matrix(2).unwrap();
        let t = KostkaTable::new(&k, "kostka", Some(Status::Pass));
        assert_eq!(t.labels, vec![vec![2], vec![1, 1]]);
        assert_eq!(t.entries, vec![vec!["1", "t"], vec!["q", "1"]]);
        assert!(t.to_text().contains("K[(1,1)][(2)] = q"));
    }
}

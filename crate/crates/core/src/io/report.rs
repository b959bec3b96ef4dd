//! Plain-text reports. Everything is emitted in a fixed order so that two
//! runs on the same input produce identical bytes.

use std::fmt::Write as _;

use crate::algebra::{BilinearMap, LinearOperator};
use crate::cohomology::DegreeSummary;
use crate::linalg::{format_rational, RatMatrix};
use crate::violation::Violation;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    lines: Vec<String>,
    failed: bool,
}

impl Report {
    /// Starts a report whose first line echoes the command.
    pub fn new(echo: &str) -> Self {
        Report { lines: vec![format!("# rbleib {echo}")], failed: false }
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    /// Records a failed verdict without printing anything.
    pub fn fail(&mut self) {
        self.failed = true;
    }

    pub fn passed(&self) -> bool {
        !self.failed
    }

    /// One line `name: ok, name: FAILED (k)`, followed by the violations.
    pub fn verdicts(&mut self, items: &[(&str, &[Violation])]) -> bool {
        let summary: Vec<String> = items
            .iter()
            .map(|(name, v)| if v.is_empty() { format!("{name}: ok") } else { format!("{name}: FAILED ({})", v.len()) })
            .collect();
        self.lines.push(summary.join(", "));
        let mut ok = true;
        for (_, v) in items {
            for violation in v.iter() {
                self.lines.push(format!("  - {violation}"));
            }
            ok &= v.is_empty();
        }
        self.failed |= !ok;
        ok
    }

    /// `name: ok` or `name: FAILED`.
    pub fn check(&mut self, name: &str, ok: bool) -> bool {
        self.lines.push(format!("{name}: {}", if ok { "ok" } else { "FAILED" }));
        self.failed |= !ok;
        ok
    }

    /// Nonzero structure constants, one `[i, j, k] c` per line.
    pub fn constants(&mut self, title: &str, b: &BilinearMap) {
        let entries = b.nonzero_entries();
        self.lines.push(format!("{title}: {} nonzero", entries.len()));
        for (i, j, k, c) in entries {
            self.lines.push(format!("  [{i}, {j}, {k}] {}", format_rational(&c)));
        }
    }

    pub fn operator(&mut self, title: &str, t: &LinearOperator) {
        self.matrix(title, t.matrix());
    }

    pub fn matrix(&mut self, title: &str, m: &RatMatrix) {
        self.lines.push(format!("{title} ({}x{}):", m.rows(), m.cols()));
        for i in 0..m.rows() {
            let row: Vec<String> = m.row(i).iter().map(format_rational).collect();
            self.lines.push(format!("  [{}]", row.join(", ")));
        }
    }

    pub fn table(&mut self, rows: &[DegreeSummary]) {
        let header = ["n", "dim C^n", "rank d^n", "ker d^n", "H^n"];
        let body: Vec<[String; 5]> = rows
            .iter()
            .map(|r| {
                [r.degree, r.cochains, r.rank_out, r.kernel(), r.dimension()].map(|x| x.to_string())
            })
            .collect();
        let mut widths = header.map(str::len);
        for row in &body {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let fmt_row = |cells: &[&str]| {
            let mut s = String::new();
            for (n, (cell, w)) in cells.iter().zip(widths).enumerate() {
                if n > 0 {
                    s.push_str("  ");
                }
                let _ = write!(s, "{cell:>w$}");
            }
            s
        };
        self.lines.push(fmt_row(&header));
        for row in &body {
            let cells: Vec<&str> = row.iter().map(String::as_str).collect();
            self.lines.push(fmt_row(&cells));
        }
    }

    pub fn render(&self) -> String {
        let mut s = self.lines.join("\n");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::violation::Law;
    use crate::linalg::RatVector;

    #[test]
    fn verdict_lines_and_status() {
        let mut r = Report::new("validate");
        assert!(r.verdicts(&[("leibniz", &[]), ("rota-baxter", &[])]));
        assert!(r.passed());
        let v = Violation::new(Law::Leibniz, vec![0, 1, 1], RatVector::unit(2, 0));
        assert!(!r.verdicts(&[("leibniz", std::slice::from_ref(&v))]));
        assert!(!r.passed());
        assert_eq!(
            r.render(),
            "# rbleib validate\nleibniz: ok, rota-baxter: ok\nleibniz: FAILED (1)\n  - leibniz (0,1,1) defect [1, 0]\n"
        );
    }

    #[test]
    fn table_is_right_aligned() {
        let mut r = Report::new("t");
        r.table(&[DegreeSummary { degree: 0, cochains: 12, rank_out: 3, rank_in: 0 }]);
        assert_eq!(r.render(), "# rbleib t\nn  dim C^n  rank d^n  ker d^n  H^n\n0       12         3        9    9\n");
    }
}

//! Plain-text report rendering. All output is deterministic.

use std::fmt::Write;

use mbaudit_core::{E2Consistency, HomologyProfile, InequalityVerdict};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Style {
    pub color: bool,
}

impl Style {
    /// `MBAUDIT_COLOR=1` turns on ANSI colour; anything else is plain.
    pub fn from_env() -> Self {
        Self { color: std::env::var("MBAUDIT_COLOR").is_ok_and(|v| v == "1") }
    }

    fn paint(self, code: &str, s: &str) -> String {
        if self.color {
            format!("\x1b[{code}m{s}\x1b[0m")
        } else {
            s.to_string()
        }
    }

    pub fn good(self, s: &str) -> String {
        self.paint("32", s)
    }

    pub fn bad(self, s: &str) -> String {
        self.paint("31", s)
    }

    pub fn verdict(self, ok: bool, s: &str) -> String {
        if ok {
            self.good(s)
        } else {
            self.bad(s)
        }
    }
}

/// Degree table: free rank, torsion coefficients and the group.
pub fn homology_table(h: &HomologyProfile) -> String {
    let mut out = String::from("deg  rank  torsion  group\n");
    for (k, g) in h.degrees().iter().enumerate() {
        let torsion = if g.torsion.is_empty() {
            "-".to_string()
        } else {
            g.torsion.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
        };
        writeln!(out, "{k:>3}  {:>4}  {torsion:<7}  {g}", g.free_rank).unwrap();
    }
    out
}

/// Nonzero groups on one line, e.g. `H_1 = Z/2, H_3 = Z/2`.
pub fn homology_inline(h: &HomologyProfile) -> String {
    let parts: Vec<String> = h
        .degrees()
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_trivial())
        .map(|(k, g)| format!("H_{k} = {g}"))
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(", ")
    }
}

pub fn verdict_lines(v: &InequalityVerdict, style: Style) -> String {
    let mut out = String::new();
    match v {
        InequalityVerdict::Holds { q } => {
            writeln!(out, "Q = {q}").unwrap();
            writeln!(out, "verdict: {}", style.good(&v.to_string())).unwrap();
        }
        InequalityVerdict::FailsNegativeCoefficient { degree, q } => {
            writeln!(out, "Q = {q}").unwrap();
            writeln!(out, "verdict: {}", style.bad(&v.to_string())).unwrap();
            writeln!(
                out,
                "  the unique Q with MB = P + (1 + t) Q has coefficient {} at degree {degree}",
                q.coeff(*degree)
            )
            .unwrap();
        }
        InequalityVerdict::FailsNotDivisible { chi_gap } => {
            writeln!(out, "verdict: {}", style.bad(&v.to_string())).unwrap();
            writeln!(out, "  MB(-1) - P(-1) = {chi_gap}, so 1 + t does not divide MB - P").unwrap();
        }
    }
    out
}

pub fn consistency_line(c: &E2Consistency, style: Style) -> String {
    let flag = |ok: bool| style.verdict(ok, if ok { "ok" } else { "violated" });
    format!(
        "total_free_rank={} ambient_rank={} rank_bound={} euler_sum={} ambient_euler={} euler={}",
        c.total_free_rank,
        c.ambient_rank,
        flag(c.rank_bound_ok),
        c.euler_sum,
        c.ambient_euler,
        flag(c.euler_ok)
    )
}

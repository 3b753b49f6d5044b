//! Subcommand implementations. Each returns the full report text and the
//! exit code, so they can be tested without spawning a process.

use std::fmt::Write;

use mbaudit_core::{
    check_inequalities, e2_consistency_with, e2_page_with, mb_polynomial, morse_homology, stabilize,
    thom_iso_check, thom_pair_homology, BundleDescriptor, CoefficientMode, MorseBottData,
    OrientationCharacter, SignTwist, SpaceDescriptor,
};

use crate::document::{parse_audit, parse_bundle_spec, Audit, CharacterDoc};
use crate::error::{CliError, ExitCode};
use crate::fixtures;
use crate::report::{consistency_line, homology_inline, homology_table, verdict_lines, Style};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub report: String,
    pub code: ExitCode,
}

impl Outcome {
    fn ok(report: String) -> Self {
        Self { report, code: ExitCode::Holds }
    }
}

fn character_name(w: OrientationCharacter) -> &'static str {
    match CharacterDoc::from(w) {
        CharacterDoc::Orientable => "orientable",
        CharacterDoc::Twisted => "twisted",
    }
}

pub fn cmd_homology(space: &str, twisted: bool) -> Result<Outcome, CliError> {
    let s: SpaceDescriptor = space.parse()?;
    let w = if twisted { OrientationCharacter::CanonicalNontrivial } else { OrientationCharacter::Trivial };
    let h = s.homology(w)?;
    let mut out = String::new();
    writeln!(out, "space: {s}").unwrap();
    writeln!(out, "coefficients: {}", if twisted { "twisted (canonical character)" } else { "Z" }).unwrap();
    out.push_str(&homology_table(&h));
    writeln!(out, "P_t = {}", h.poincare_poly()).unwrap();
    Ok(Outcome::ok(out))
}

fn e2_section(out: &mut String, d: &MorseBottData, mode: CoefficientMode, style: Style) -> Result<(), CliError> {
    let page = e2_page_with(d, mode)?;
    for (j, (c, h)) in d.criticals().iter().zip(&page).enumerate() {
        let w = match mode {
            CoefficientMode::Local => c.negative_character,
            CoefficientMode::Untwisted => OrientationCharacter::Trivial,
        };
        writeln!(
            out,
            "  j={j}  {}  index {}  {}  ->  {}",
            c.space,
            c.index,
            character_name(w),
            homology_inline(h)
        )
        .unwrap();
    }
    let c = e2_consistency_with(d, mode)?;
    writeln!(out, "  consistency: {}", consistency_line(&c, style)).unwrap();
    Ok(())
}

pub fn audit_report(a: &Audit, mode: CoefficientMode, naive: bool, style: Style) -> Result<Outcome, CliError> {
    let d = &a.morse_bott;
    let p = d.ambient_homology()?.poincare_poly();
    let mb = mb_polynomial(d, mode)?;
    let verdict = check_inequalities(&mb, &p);

    let mut out = String::new();
    if let Some(name) = &a.name {
        writeln!(out, "document: {name}").unwrap();
    }
    writeln!(out, "ambient: {}", d.ambient()).unwrap();
    writeln!(out, "mode: {mode}").unwrap();
    for w in d.warnings() {
        writeln!(out, "warning: {w}").unwrap();
    }
    writeln!(out, "critical submanifolds:").unwrap();
    for (j, c) in d.criticals().iter().enumerate() {
        let value = c.value.map(|v| format!("  value {v}")).unwrap_or_default();
        writeln!(
            out,
            "  j={j}  {}  index {}  negative bundle {}{value}",
            c.space,
            c.index,
            character_name(c.negative_character)
        )
        .unwrap();
    }
    writeln!(out, "P = {p}").unwrap();
    writeln!(out, "MB = {mb}").unwrap();
    writeln!(out, "MB - P = {}", &mb - &p).unwrap();
    out.push_str(&verdict_lines(&verdict, style));
    writeln!(out, "E2 page, H_*(DN-, SN-; Z) in filtration order:").unwrap();
    e2_section(&mut out, d, CoefficientMode::Local, style)?;
    if naive {
        writeln!(out, "E2 page, naive (every negative bundle treated as orientable):").unwrap();
        e2_section(&mut out, d, CoefficientMode::Untwisted, style)?;
    }
    let code = if verdict.holds() { ExitCode::Holds } else { ExitCode::Fails };
    Ok(Outcome { report: out, code })
}

pub fn cmd_audit(file: &str, mode: CoefficientMode, naive: bool, style: Style) -> Result<Outcome, CliError> {
    let audit = parse_audit(&fixtures::load(file)?)?;
    audit_report(&audit, mode, naive, style)
}

fn thom_section(out: &mut String, b: &BundleDescriptor, style: Style) -> Result<bool, CliError> {
    let r = thom_iso_check(b)?;
    writeln!(out, "bundle: base {} rank {} {}", b.base, b.rank, character_name(b.character)).unwrap();
    writeln!(out, "H_*(DE, SE; Z):").unwrap();
    out.push_str(&homology_table(&r.pair));
    writeln!(out, "H_{{*-{}}}({}; Z):", b.rank, b.base).unwrap();
    out.push_str(&homology_table(&r.shifted_base));
    let holds = r.holds();
    writeln!(out, "THOM ISO: {}", style.verdict(holds, if holds { "holds" } else { "fails" })).unwrap();
    Ok(holds)
}

pub fn cmd_thom(spec: &str, style: Style) -> Result<Outcome, CliError> {
    let b = parse_bundle_spec(spec)?;
    let mut out = String::new();
    thom_section(&mut out, &b, style)?;
    Ok(Outcome::ok(out))
}

pub fn cmd_morse(file: &str, rank: Option<usize>, twist: Option<&str>, style: Style) -> Result<Outcome, CliError> {
    let audit = parse_audit(&fixtures::load(file)?)?;
    let Some(block) = &audit.morse else {
        return Err(CliError::parse("document has no `morse` block"));
    };
    let m = &block.data;
    let before = morse_homology(m)?;
    let mut out = String::new();
    writeln!(out, "critical points: {}", m.generators().len()).unwrap();
    writeln!(out, "trajectories: {}", m.trajectories().len()).unwrap();
    writeln!(out, "HM_*(f):").unwrap();
    out.push_str(&homology_table(&before));
    if rank.is_none() && twist.is_none() {
        return Ok(Outcome::ok(out));
    }

    let r = rank.unwrap_or(0);
    let s = match twist {
        Some(name) => block
            .twist(name)
            .cloned()
            .ok_or_else(|| CliError::parse(format!("no twist named `{name}`")))?,
        None => SignTwist::all_plus(m),
    };
    let stabilized = stabilize(m, r, &s)?;
    let after = morse_homology(&stabilized)?;
    writeln!(out, "stabilized: rank {r} twist {}", twist.unwrap_or("all-plus")).unwrap();
    writeln!(out, "HM_*(F):").unwrap();
    out.push_str(&homology_table(&after));
    let shifted = after == before.shift(r);
    writeln!(out, "MATCHES shifted HM_*(f): {}", style.verdict(shifted, if shifted { "yes" } else { "no" })).unwrap();
    if let Some(b) = &audit.bundle {
        if b.rank == r {
            let pair = thom_pair_homology(b)?;
            let matches = pair == after;
            writeln!(out, "bundle: base {} rank {} {}", b.base, b.rank, character_name(b.character)).unwrap();
            writeln!(out, "MATCHES H(DE⁻,SE⁻): {}", style.verdict(matches, if matches { "yes" } else { "no" }))
                .unwrap();
        } else {
            writeln!(out, "MATCHES H(DE⁻,SE⁻): n/a (bundle rank {}, stabilization rank {r})", b.rank).unwrap();
        }
    }
    Ok(Outcome::ok(out))
}

pub fn cmd_fixtures_list() -> Result<Outcome, CliError> {
    let mut out = String::new();
    for (name, text) in fixtures::FIXTURES {
        let doc = crate::document::parse_document(text)?;
        writeln!(out, "{name}  {}", doc.description.unwrap_or_default()).unwrap();
    }
    Ok(Outcome::ok(out))
}

pub fn cmd_fixtures_show(name: &str) -> Result<Outcome, CliError> {
    let name = name.strip_prefix("fixtures/").unwrap_or(name);
    fixtures::embedded(name)
        .map(|t| Outcome::ok(t.to_string()))
        .ok_or_else(|| CliError::parse(format!("no fixture named `{name}`")))
}

#[cfg(test)]
mod tests {
    use super::*;

    const PLAIN: Style = Style { color: false };

    #[test]
    fn homology_command() {
        let o = cmd_homology("rp:5", false).unwrap();
        assert!(o.report.ends_with("P_t = 1 + t^5\n"));
        let o = cmd_homology("rp:3", true).unwrap();
        assert!(o.report.contains("  0     0  2        Z/2\n"));
        assert!(o.report.contains("  2     0  2        Z/2\n"));
        assert!(o.report.ends_with("P_t = 0\n"));
        assert!(cmd_homology("point", false).unwrap().report.ends_with("P_t = 1\n"));
        assert_eq!(cmd_homology("klein", false).unwrap_err().code, ExitCode::Parse);
        assert_eq!(cmd_homology("sphere:2", true).unwrap_err().code, ExitCode::Inadmissible);
    }

    #[test]
    fn audit_modes() {
        let o = cmd_audit("rp5-counterexample", CoefficientMode::Untwisted, false, PLAIN).unwrap();
        assert!(o.report.contains("MB = 1 + t + t^4 + t^5\n"));
        assert!(o.report.contains("verdict: FailsNegativeCoefficient(k=2)\n"));
        assert_eq!(o.code, ExitCode::Fails);
        let o = cmd_audit("rp5-counterexample", CoefficientMode::Local, false, PLAIN).unwrap();
        assert!(o.report.contains("MB = 1 + t^5\n"));
        assert!(o.report.contains("verdict: Holds(Q=0)\n"));
        assert_eq!(o.code, ExitCode::Holds);
        assert!(!o.report.contains("naive"));
        let n = cmd_audit("rp5-counterexample", CoefficientMode::Local, true, PLAIN).unwrap();
        assert!(n.report.contains("naive"));
        assert!(n.report.contains("total_free_rank=4"));
    }

    #[test]
    fn thom_command() {
        let o = cmd_thom("sphere:1,1,twisted", PLAIN).unwrap();
        assert!(o.report.contains("THOM ISO: fails"));
        assert!(cmd_thom("point,5,orientable", PLAIN).unwrap().report.contains("THOM ISO: holds"));
    }

    #[test]
    fn morse_command() {
        let o = cmd_morse("s1-moebius", Some(1), Some("moebius"), PLAIN).unwrap();
        assert!(o.report.contains("MATCHES H(DE⁻,SE⁻): yes"));
        assert!(o.report.contains("MATCHES shifted HM_*(f): no"));
        let plain = cmd_morse("s1-moebius", None, None, PLAIN).unwrap();
        assert!(!plain.report.contains("MATCHES"));
        let e = cmd_morse("torus-perfect", Some(1), Some("inconsistent"), PLAIN).unwrap_err();
        assert_eq!(e.code, ExitCode::InconsistentTwist);
        assert_eq!(cmd_morse("s1-moebius", Some(1), Some("nope"), PLAIN).unwrap_err().code, ExitCode::Parse);
        assert_eq!(cmd_morse("s2-height", None, None, PLAIN).unwrap_err().code, ExitCode::Parse);
        let k = cmd_morse("torus-perfect", Some(1), Some("klein-a"), PLAIN).unwrap();
        assert!(k.report.contains("MATCHES H(DE⁻,SE⁻): yes"));
    }
}

//! Plain-text polynomial tables.

use std::io::Write;

use coxkl::bruhat::bruhat_leq;
use coxkl::{CoxeterSystem, Element, IntPolynomial, KlEngine, ParabolicContext};

use crate::HarnessError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableKind {
    R,
    P,
}

impl TableKind {
    pub fn name(self) -> &'static str {
        match self {
            TableKind::R => "R",
            TableKind::P => "P",
        }
    }
}

/// Every nonzero value for `u ≤ v` in `W^J`, ordered by `(v, u)`.
pub fn table(
    kl: &KlEngine<'_>,
    ctx: ParabolicContext,
    kind: TableKind,
) -> Result<Vec<(Element, Element, IntPolynomial)>, HarnessError> {
    let sys = kl.system();
    let members: Vec<Element> = sys.elements().filter(|&w| sys.is_min_coset_rep(w, ctx.j)).collect();
    let mut out = Vec::new();
    for &v in &members {
        for &u in &members {
            if !bruhat_leq(sys, u, v) {
                continue;
            }
            let p = match kind {
                TableKind::R => kl.parabolic_r_poly(u, v, ctx)?,
                TableKind::P => kl.parabolic_p_poly(u, v, ctx)?,
            };
            if !p.is_zero() {
                out.push((u, v, p));
            }
        }
    }
    Ok(out)
}

/// Writes the table as tab-separated `u`, `v`, coefficient array lines after
/// a `#` header. Words are 1-based; `e` is the identity.
pub fn write_table<W: Write>(
    out: &mut W,
    sys: &CoxeterSystem,
    ctx: ParabolicContext,
    kind: TableKind,
    rows: &[(Element, Element, IntPolynomial)],
) -> std::io::Result<()> {
    writeln!(out, "# {} {} J={} x={} entries={}", sys.name(), kind.name(), ctx.j, ctx.x, rows.len())?;
    for (u, v, p) in rows {
        let coeffs: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
        writeln!(out, "{}\t{}\t[{}]", sys.word_string(*u), sys.word_string(*v), coeffs.join(","))?;
    }
    Ok(())
}

pub fn table_dump(
    kl: &KlEngine<'_>,
    ctx: ParabolicContext,
    kind: TableKind,
    path: &std::path::Path,
) -> Result<usize, HarnessError> {
    let rows = table(kl, ctx, kind)?;
    let mut file = std::io::BufWriter::new(std::fs::File::create(path).map_err(|e| HarnessError::io(path, e))?);
    write_table(&mut file, kl.system(), ctx, kind, &rows).map_err(|e| HarnessError::io(path, e))?;
    file.flush().map_err(|e| HarnessError::io(path, e))?;
    Ok(rows.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use coxkl::{GeneratorSet, XParam};

    fn render(name: &str, ctx: ParabolicContext, kind: TableKind) -> String {
        let sys = CoxeterSystem::named(name).unwrap();
        let kl = KlEngine::new(&sys);
        let rows = table(&kl, ctx, kind).unwrap();
        let mut buf = Vec::new();
        write_table(&mut buf, &sys, ctx, kind, &rows).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn s3_kl_polynomials_are_all_one() {
        let text = render("A2", ParabolicContext::ordinary(), TableKind::P);
        let lines: Vec<&str> = text.lines().skip(1).collect();
        assert_eq!(lines.len(), 19);
        assert!(lines.iter().all(|l| l.ends_with("\t[1]")));
    }

    #[test]
    fn a3_r_table_contains_the_square() {
        let text = render("A3", ParabolicContext::ordinary(), TableKind::R);
        assert!(text.lines().any(|l| l == "e\t1,2\t[1,-2,1]"));
    }

    #[test]
    fn a3_parabolic_table_contains_both_example_entries() {
        let ctx = ParabolicContext::new(GeneratorSet::singleton(0), XParam::MinusOne);
        let text = render("A3", ctx, TableKind::P);
        assert!(text.lines().any(|l| l == "e\t1,2,3\t[1]"));
        let ctx = ParabolicContext::new(GeneratorSet::singleton(1), XParam::MinusOne);
        let text = render("A3", ctx, TableKind::P);
        assert!(text.lines().any(|l| l == "e\t2,1,3\t[1,1]"));
    }
}

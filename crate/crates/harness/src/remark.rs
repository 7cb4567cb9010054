//! The S4 example: two Boolean intervals with an atom-respecting isomorphism
//! but different `P^{J,-1}`.

use coxkl::analysis::{check_nondominated_transport, find_isomorphisms, poset_fingerprint, Constraint};
use coxkl::bruhat::{atoms_in_quotient, build_interval};
use coxkl::{CoxeterSystem, GeneratorSet, GradedPoset, IntPolynomial, KlEngine, ParabolicContext, XParam};
use serde::{Deserialize, Serialize};

use crate::HarnessError;

#[allow(non_snake_case)]
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemarkRecord {
    pub system: String,
    pub u1: String,
    pub v1: String,
    pub j1: String,
    pub u2: String,
    pub v2: String,
    pub j2: String,
    pub sizes: (usize, usize),
    pub boolean_fingerprint: bool,
    pub atom_counts: (usize, usize),
    pub isomorphism_found: bool,
    pub mapping: Vec<(String, String)>,
    pub nondominated_transport: bool,
    pub p_J1_xminus1: IntPolynomial,
    pub p_J2_xminus1: IntPolynomial,
    pub p_J1_q: IntPolynomial,
    pub p_J2_q: IntPolynomial,
    pub p_q_equal: bool,
}

/// Recomputes the example and checks every recorded value.
pub fn reproduce_remark() -> Result<RemarkRecord, HarnessError> {
    let sys = CoxeterSystem::named("A3")?;
    let e = sys.identity();
    let v1 = sys.element_from_word(&[0, 1, 2])?;
    let v2 = sys.element_from_word(&[1, 0, 2])?;
    let (j1, j2) = (GeneratorSet::singleton(0), GeneratorSet::singleton(1));
    let i1 = build_interval(&sys, e, v1, false)?;
    let i2 = build_interval(&sys, e, v2, false)?;
    let boolean = poset_fingerprint(&GradedPoset::boolean_lattice(3));
    let witnesses = find_isomorphisms(&i1, &i2, Constraint::AtomBijection { j1, j2 }, 1)?;
    let witness = witnesses.first();
    let kl = KlEngine::new(&sys);
    let p = |v, j, x| kl.parabolic_p_poly(e, v, ParabolicContext::new(j, x));
    let record = RemarkRecord {
        system: sys.name().to_string(),
        u1: sys.word_string(e),
        v1: sys.word_string(v1),
        j1: j1.to_string(),
        u2: sys.word_string(e),
        v2: sys.word_string(v2),
        j2: j2.to_string(),
        sizes: (i1.len(), i2.len()),
        boolean_fingerprint: poset_fingerprint(i1.poset()) == boolean && poset_fingerprint(i2.poset()) == boolean,
        atom_counts: (atoms_in_quotient(&sys, e, v1, j1)?.len(), atoms_in_quotient(&sys, e, v2, j2)?.len()),
        isomorphism_found: witness.is_some(),
        mapping: witness.map_or_else(Vec::new, |w| {
            w.pairs(&i1, &i2).into_iter().map(|(a, b)| (sys.word_string(a), sys.word_string(b))).collect()
        }),
        nondominated_transport: match witness {
            Some(w) => check_nondominated_transport(&i1, &i2, w)?,
            None => false,
        },
        p_J1_xminus1: p(v1, j1, XParam::MinusOne)?,
        p_J2_xminus1: p(v2, j2, XParam::MinusOne)?,
        p_J1_q: p(v1, j1, XParam::Q)?,
        p_J2_q: p(v2, j2, XParam::Q)?,
        p_q_equal: false,
    };
    let record = RemarkRecord { p_q_equal: record.p_J1_q == record.p_J2_q, ..record };
    let expect = |ok: bool, what: &str| if ok { Ok(()) } else { Err(HarnessError::Remark(what.to_string())) };
    expect(record.sizes == (8, 8), "interval sizes differ from 8")?;
    expect(record.boolean_fingerprint, "fingerprint is not that of the Boolean lattice")?;
    expect(record.atom_counts == (2, 2), "atom counts differ from (2, 2)")?;
    expect(record.isomorphism_found, "no atom-respecting isomorphism")?;
    expect(record.nondominated_transport, "non-dominated sets not transported")?;
    expect(record.p_J1_xminus1 == IntPolynomial::one(), "P^{J1,-1} is not 1")?;
    expect(record.p_J2_xminus1 == IntPolynomial::from_i64(&[1, 1]), "P^{J2,-1} is not 1+q")?;
    expect(record.p_q_equal, "P^{J,q} differs between the two sides")?;
    Ok(record)
}

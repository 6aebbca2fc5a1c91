//! Special cycles C(σ, Γ): their dimensions and the test for a zero
//! component on each A_q summand of the cohomology.

use serde::Serialize;

use crate::aq::{class_records, ClassRecord};
use crate::exact::HodgePolynomial;
use crate::involutions::{fixed_subalgebra, holomorphy_class, Holomorphy, Involution};
use crate::liealg::build_context;
use crate::orientation::theorem_scope;
use crate::Error;

#[derive(Clone, Debug, Serialize)]
pub struct CycleRecord {
    pub involution: String,
    pub name: String,
    pub d_sigma: usize,
    pub d_sigma_theta: usize,
    pub holomorphy: Holomorphy,
}

pub fn cycle_record(sigma: &Involution) -> Result<CycleRecord, Error> {
    let ctx = build_context(sigma.m)?;
    let d_sigma = fixed_subalgebra(sigma)?.p0_fixed_dim;
    Ok(CycleRecord {
        involution: sigma.id(),
        name: sigma.name(),
        d_sigma,
        d_sigma_theta: ctx.dim_p0 - d_sigma,
        holomorphy: holomorphy_class(sigma)?,
    })
}

/// Dimensions of X(σ) and X(σθ) for each involution in the theorem's scope.
pub fn dimension_table(m: usize) -> Result<Vec<CycleRecord>, Error> {
    theorem_scope(m)?.iter().map(cycle_record).collect()
}

/// Whether both cycle classes of `rec` avoid the A_q summand with polynomial
/// `p`. The trivial class is never avoided.
pub fn no_aq_component_poly(rec: &CycleRecord, p: &HodgePolynomial, trivial: bool) -> bool {
    if trivial {
        return false;
    }
    let (d1, d2) = (rec.d_sigma as u32, rec.d_sigma_theta as u32);
    match rec.holomorphy {
        Holomorphy::Holomorphic => p.coeff(d1 / 2, d1 / 2) == 0 && p.coeff(d2 / 2, d2 / 2) == 0,
        Holomorphy::Antiholomorphic | Holomorphy::Mixed => {
            let support = p.total_degree_support();
            !support.contains(&d1) && !support.contains(&d2)
        }
    }
}

pub fn no_aq_component(rec: &CycleRecord, class: &ClassRecord) -> bool {
    no_aq_component_poly(rec, &class.polynomial, class.parabolic.is_trivial())
}

/// One row per parabolic class: the involutions with no component there.
#[derive(Clone, Debug)]
pub struct ColumnRow {
    pub class: ClassRecord,
    pub involutions: Vec<String>,
}

pub fn no_component_column(m: usize) -> Result<Vec<ColumnRow>, Error> {
    let recs = dimension_table(m)?;
    Ok(class_records(m)?
        .into_iter()
        .map(|class| {
            let involutions =
                recs.iter().filter(|r| no_aq_component(r, &class)).map(|r| r.involution.clone()).collect();
            ColumnRow { class, involutions }
        })
        .collect())
}

/// Involutions whose cycles avoid every nontrivial class but one; that class
/// then contributes to the cohomology and its A_q is automorphic.
pub fn automorphic_candidates(m: usize) -> Result<Vec<(CycleRecord, ClassRecord)>, Error> {
    if m < 3 {
        return Ok(Vec::new());
    }
    let recs = dimension_table(m)?;
    let classes = class_records(m)?;
    let mut out = Vec::new();
    for rec in recs {
        let kept: Vec<&ClassRecord> = classes.iter().filter(|c| !no_aq_component(&rec, c)).collect();
        if let [a, b] = kept.as_slice() {
            let other = match (a.parabolic.is_trivial(), b.parabolic.is_trivial()) {
                (true, false) => *b,
                (false, true) => *a,
                _ => continue,
            };
            out.push((rec, other.clone()));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::Root;

    #[test]
    fn dimensions() {
        let t = dimension_table(5).unwrap();
        assert_eq!((t[0].d_sigma, t[0].d_sigma_theta), (4, 6));
        let t2 = dimension_table(2).unwrap();
        let eta = t2.iter().find(|r| r.involution == "eta_1").unwrap();
        assert_eq!((eta.d_sigma, eta.d_sigma_theta), (3, 1));
        for m in 2..=8 {
            for r in dimension_table(m).unwrap() {
                assert_eq!(r.d_sigma + r.d_sigma_theta, 2 * m);
            }
        }
    }

    #[test]
    fn m2_columns() {
        let rows = no_component_column(2).unwrap();
        let x2 = rows.iter().find(|r| r.class.polynomial == HodgePolynomial::monomial(2, 0, 1)).unwrap();
        assert_eq!(x2.involutions, ["sigma_1", "eta_1", "eta_2"]);
        let trivial = rows.iter().find(|r| r.class.parabolic.is_trivial()).unwrap();
        assert!(trivial.involutions.is_empty());
    }

    #[test]
    fn remark_classes() {
        for (m, witness) in [(5, "sigma_3"), (6, "tauprime_1")] {
            let c = automorphic_candidates(m).unwrap();
            let hit = c.iter().find(|(r, _)| r.involution == witness).unwrap();
            let l = build_context(m).unwrap().l;
            let phi1 = Root::e(l, 1).sub(&Root::e(l, 2));
            let delta = Root::e(l, 1).add(&Root::e(l, 2));
            assert_eq!(hit.1.parabolic.delta_u_p_minus, vec![phi1.neg()]);
            assert_eq!(hit.1.parabolic.delta_u_p_plus, vec![delta]);
        }
        assert!(automorphic_candidates(2).unwrap().is_empty());
    }
}

//! Orientation behaviour of G(σ) on X(σ): component representatives of K(σ),
//! determinants of Ad on p₀(σ), and the resulting verdict per involution.

use serde::Serialize;

use crate::exact::{rational_to_i64, GaussianRational, Rational};
use crate::involutions::{catalog, fixed_subalgebra, holomorphy_class, matrix_on, Holomorphy, Involution, Kind};
use crate::liealg::{diag_runs, e_mat, ExactMatrix, RealCoordinates};
use crate::linear;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RepLabel {
    Identity,
    Y2,
    Y3,
    Y4,
}

impl RepLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            RepLabel::Identity => "identity",
            RepLabel::Y2 => "Y2",
            RepLabel::Y3 => "Y3",
            RepLabel::Y4 => "Y4",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ComponentRep {
    pub label: RepLabel,
    pub matrix: ExactMatrix,
}

#[derive(Clone, Debug)]
pub struct Components {
    pub reps: Vec<ComponentRep>,
    /// σ fixes the centre of k; orientation follows without component data.
    pub holomorphic_shortcut: bool,
}

fn rep(label: RepLabel, matrix: ExactMatrix) -> ComponentRep {
    ComponentRep { label, matrix }
}

/// One representative per component of K(σ). K(σθ) = K(σ).
pub fn k_sigma_components(sigma: &Involution) -> Result<Components, Error> {
    let m = sigma.m;
    let n = m + 2;
    let identity = rep(RepLabel::Identity, ExactMatrix::identity(n));
    let mut reps = vec![identity];
    match (sigma.kind, sigma.p) {
        (Kind::Tau, Some(p)) => {
            reps.push(rep(RepLabel::Y2, diag_runs(&[(-1, 2), (1, m)])));
            if p > 1 {
                let y3 = diag_runs(&[(1, 2), (-1, 1), (1, 2 * p - 3), (-1, 1), (1, m + 1 - 2 * p)]);
                let y4 = diag_runs(&[(-1, 2), (-1, 1), (1, 2 * p - 3), (-1, 1), (1, m + 1 - 2 * p)]);
                reps.push(rep(RepLabel::Y3, y3));
                reps.push(rep(RepLabel::Y4, y4));
            }
        }
        (Kind::Mu, Some(_)) => {
            reps.push(rep(RepLabel::Y2, diag_runs(&[(-1, 2), (1, n - 2)])));
            reps.push(rep(RepLabel::Y3, diag_runs(&[(1, n - 2), (-1, 2)])));
            reps.push(rep(RepLabel::Y4, diag_runs(&[(-1, 2), (1, n - 4), (-1, 2)])));
        }
        (Kind::Sigma0Prime, _) => {
            reps.push(rep(RepLabel::Y2, diag_runs(&[(-1, 2), (1, 4)])));
            reps.push(rep(RepLabel::Y3, diag_runs(&[(1, 4), (-1, 2)])));
            reps.push(rep(RepLabel::Y4, diag_runs(&[(-1, 2), (1, 2), (-1, 2)])));
        }
        (Kind::TauPrime, _) if m == 2 => {
            reps.push(rep(RepLabel::Y2, diag_runs(&[(1, 2), (-1, 2)])));
        }
        (Kind::Eta1 | Kind::Eta2, _) => {}
        _ => {
            if holomorphy_class(sigma)? == Holomorphy::Holomorphic {
                return Ok(Components { reps, holomorphic_shortcut: true });
            }
            return Err(Error::Unsupported(format!("no component data for {}", sigma.name())));
        }
    }
    Ok(Components { reps, holomorphic_shortcut: false })
}

fn sym(n: usize, a: usize, k: usize) -> ExactMatrix {
    &e_mat(n, a, k) + &e_mat(n, k, a)
}

/// The explicit spanning set of p₀(σ) for the non-holomorphic families,
/// if one is recorded. Returns `None` for σθ and for other involutions.
pub fn explicit_p0_basis(sigma: &Involution) -> Option<Vec<ExactMatrix>> {
    if sigma.twisted {
        return None;
    }
    let m = sigma.m;
    let n = m + 2;
    match (sigma.kind, sigma.p) {
        (Kind::Tau, Some(p)) => {
            let mut b: Vec<ExactMatrix> = (2 * p + 1..=n).map(|k| sym(n, 1, k)).collect();
            b.extend((3..=2 * p).map(|r| sym(n, 2, r)));
            Some(b)
        }
        (Kind::Mu, Some(p)) => {
            let mut b: Vec<ExactMatrix> = (3..=2 * p).chain([n]).map(|k| sym(n, 1, k)).collect();
            b.extend((2 * p + 1..n).map(|r| sym(n, 2, r)));
            Some(b)
        }
        (Kind::Sigma0Prime, _) => Some(vec![sym(n, 1, 3), sym(n, 1, 5), sym(n, 2, 4), sym(n, 2, 6)]),
        (Kind::TauPrime, _) if m == 2 => Some(vec![sym(n, 1, 4), sym(n, 2, 4)]),
        _ => None,
    }
}

/// Basis of p₀(σ): the explicit set when available (checked against the
/// eigenspace), otherwise the computed +1 eigenspace of σ on p₀.
pub fn p0_sigma_basis(sigma: &Involution) -> Result<Vec<ExactMatrix>, Error> {
    let computed = fixed_subalgebra(sigma)?.p0_fixed_basis;
    let Some(explicit) = explicit_p0_basis(sigma) else {
        return Ok(computed);
    };
    let rc = RealCoordinates::new(&computed)?;
    if explicit.len() != computed.len() || explicit.iter().any(|x| rc.coords(x).is_none()) {
        return Err(Error::Verification(format!(
            "explicit p0 basis of {} disagrees with the eigenspace",
            sigma.name()
        )));
    }
    Ok(explicit)
}

/// Whether `k` lies in K = SO(2) × SO(m).
pub fn in_k(k: &ExactMatrix, m: usize) -> bool {
    let n = m + 2;
    if k.size() != n || !k.is_real() {
        return false;
    }
    let off_block = k.nonzeros().any(|(i, j, _)| (i < 2) != (j < 2));
    if off_block || k.mul(&k.transpose()) != ExactMatrix::identity(n) {
        return false;
    }
    let top = ExactMatrix::from_fn(2, |i, j| k.at(i, j).clone());
    top.det() == GaussianRational::from_int(1) && k.det() == GaussianRational::from_int(1)
}

/// det(Ad(k)|_{p₀(σ)}) for a representative of a component of K(σ).
pub fn det_ad_on_p0(sigma: &Involution, rep: &ComponentRep) -> Result<i64, Error> {
    det_ad_on_basis(sigma, &rep.matrix, &p0_sigma_basis(sigma)?)
}

fn det_ad_on_basis(sigma: &Involution, k: &ExactMatrix, basis: &[ExactMatrix]) -> Result<i64, Error> {
    if !in_k(k, sigma.m) || sigma.apply(k) != *k {
        return Err(Error::Verification(format!("representative is not in K({})", sigma.name())));
    }
    let k_inv = k.transpose();
    let mat = matrix_on(basis, |x| k.mul(x).mul(&k_inv))
        .map_err(|_| Error::Verification(format!("representative does not stabilize p0({})", sigma.name())))?;
    let d: Rational = linear::det(&mat);
    match rational_to_i64(&d) {
        Some(v) if v.abs() == 1 => Ok(v),
        _ => Err(Error::Verification(format!("determinant {d} is not ±1"))),
    }
}

/// Orientation row for one component.
#[derive(Clone, Debug, Serialize)]
pub struct OrientationRow {
    pub involution: String,
    pub component: &'static str,
    pub determinant: Option<i64>,
    pub verdict: bool,
}

/// True iff every component acts with determinant +1 on p₀(σ).
pub fn orientation_preserving(sigma: &Involution) -> Result<bool, Error> {
    let comps = k_sigma_components(sigma)?;
    if comps.holomorphic_shortcut {
        return Ok(true);
    }
    for r in &comps.reps {
        if det_ad_on_p0(sigma, r)? != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Per-component rows; holomorphic entries report a single shortcut row.
pub fn orientation_report(sigma: &Involution) -> Result<Vec<OrientationRow>, Error> {
    let comps = k_sigma_components(sigma)?;
    let verdict = orientation_preserving(sigma)?;
    if comps.holomorphic_shortcut {
        return Ok(vec![OrientationRow {
            involution: sigma.id(),
            component: "holomorphic",
            determinant: None,
            verdict,
        }]);
    }
    comps
        .reps
        .iter()
        .map(|r| {
            Ok(OrientationRow {
                involution: sigma.id(),
                component: r.label.as_str(),
                determinant: Some(det_ad_on_p0(sigma, r)?),
                verdict,
            })
        })
        .collect()
}

/// Cross-check independent of the hard-coded representatives: determinants
/// on p₀(σ) of the diagonal sign matrices in K(σ). The determinant is a
/// character, so it suffices to evaluate it on an F₂-basis of that group.
pub fn diagonal_sign_determinants(sigma: &Involution) -> Result<Vec<(Vec<i64>, i64)>, Error> {
    let n = sigma.m + 2;
    let basis = p0_sigma_basis(sigma)?;
    let mut gens: Vec<u32> = Vec::new();
    let mut reduced: Vec<u32> = Vec::new();
    for mask in 0u32..(1 << n) {
        let signs: Vec<i64> = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
        let k = ExactMatrix::diag(&signs);
        if !in_k(&k, sigma.m) || sigma.apply(&k) != k {
            continue;
        }
        let mut v = mask;
        for &r in &reduced {
            v = v.min(v ^ r);
        }
        if v != 0 {
            reduced.push(v);
            reduced.sort_unstable_by(|a, b| b.cmp(a));
            gens.push(mask);
        }
    }
    gens.into_iter()
        .map(|mask| {
            let signs: Vec<i64> = (0..n).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect();
            let d = det_ad_on_basis(sigma, &ExactMatrix::diag(&signs), &basis)?;
            Ok((signs, d))
        })
        .collect()
}

/// Involutions covered by the main theorem: the catalog, minus τ_p for odd m.
pub fn theorem_scope(m: usize) -> Result<Vec<Involution>, Error> {
    let odd = m % 2 == 1;
    Ok(catalog(m)?.into_iter().filter(|s| !(odd && s.kind == Kind::Tau)).collect())
}

//! Involutions of SO₀(2,m) commuting with θ: the explicit catalog, axiom
//! checks, fixed subalgebras, Cayley transforms, Vogan-diagram extraction
//! and the extendability criterion for involutions of k₀.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chevalley::{build_chevalley, proportionality, ChevalleyBasis};
use crate::exact::{rat, rational_to_i64, GaussianRational, Rational};
use crate::liealg::{
    block_diag, bracket, build_context, diag_runs, e_mat, i_pq, j_pq, ExactMatrix, Family, RealBasis, RealCoordinates,
};
use crate::linear::{self, RatMatrix};
use crate::roots::{build_root_system, Root, RootSystem, Variant};
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Kind {
    Sigma,
    Tau,
    Mu,
    TauPrime,
    SigmaLMinus1,
    SigmaL,
    Sigma0,
    Sigma0Prime,
    Sigma1,
    Eta1,
    Eta2,
    Theta,
}

#[derive(Clone, Debug)]
pub struct Involution {
    pub kind: Kind,
    pub p: Option<usize>,
    pub m: usize,
    pub l: usize,
    pub family: Family,
    pub variant: Variant,
    /// σ(X) = g X g⁻¹.
    pub conjugator: ExactMatrix,
    conjugator_inv: ExactMatrix,
    /// True for σθ.
    pub twisted: bool,
}

impl Involution {
    pub fn new(
        kind: Kind,
        p: Option<usize>,
        m: usize,
        variant: Variant,
        conjugator: ExactMatrix,
    ) -> Result<Self, Error> {
        let ctx = build_context(m)?;
        let conjugator_inv = conjugator.inverse().ok_or_else(|| Error::Malformed("singular conjugator".into()))?;
        Ok(Involution { kind, p, m, l: ctx.l, family: ctx.family, variant, conjugator, conjugator_inv, twisted: false })
    }

    /// θ as a regression control.
    pub fn theta(m: usize) -> Result<Self, Error> {
        Involution::new(Kind::Theta, None, m, Variant::T0, i_pq(2, m))
    }

    /// σθ, with conjugator `I_{2,m} g`.
    pub fn times_theta(&self) -> Self {
        let g = i_pq(2, self.m).mul(&self.conjugator);
        let inv = self.conjugator_inv.mul(&i_pq(2, self.m));
        Involution { conjugator: g, conjugator_inv: inv, twisted: !self.twisted, ..self.clone() }
    }

    pub fn apply(&self, x: &ExactMatrix) -> ExactMatrix {
        self.conjugator.mul(x).mul(&self.conjugator_inv)
    }

    /// Human-readable name such as `σ_2`, `τ'_1`, `η_1θ`.
    pub fn name(&self) -> String {
        let p = self.p.map(|p| p.to_string()).unwrap_or_default();
        let base = match self.kind {
            Kind::Sigma | Kind::SigmaLMinus1 | Kind::SigmaL | Kind::Sigma1 => format!("σ_{p}"),
            Kind::Tau => format!("τ_{p}"),
            Kind::Mu => format!("μ_{p}"),
            Kind::TauPrime => format!("τ'_{p}"),
            Kind::Sigma0 => "σ_0".into(),
            Kind::Sigma0Prime => "σ'_0".into(),
            Kind::Eta1 => "η_1".into(),
            Kind::Eta2 => "η_2".into(),
            Kind::Theta => "θ".into(),
        };
        if self.twisted {
            format!("{base}θ")
        } else {
            base
        }
    }

    /// ASCII identifier used in serialized output.
    pub fn id(&self) -> String {
        let p = self.p.map(|p| p.to_string()).unwrap_or_default();
        let base = match self.kind {
            Kind::Sigma | Kind::SigmaLMinus1 | Kind::SigmaL | Kind::Sigma1 => format!("sigma_{p}"),
            Kind::Tau => format!("tau_{p}"),
            Kind::Mu => format!("mu_{p}"),
            Kind::TauPrime => format!("tauprime_{p}"),
            Kind::Sigma0 => "sigma_0".into(),
            Kind::Sigma0Prime => "sigmaprime_0".into(),
            Kind::Eta1 => "eta_1".into(),
            Kind::Eta2 => "eta_2".into(),
            Kind::Theta => "theta".into(),
        };
        if self.twisted {
            format!("{base}*theta")
        } else {
            base
        }
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// The catalog in table order.
pub fn catalog(m: usize) -> Result<Vec<Involution>, Error> {
    let ctx = build_context(m)?;
    let l = ctx.l;
    let mut out = Vec::new();
    let mut push = |kind, p, variant, g| -> Result<(), Error> {
        out.push(Involution::new(kind, p, m, variant, g)?);
        Ok(())
    };
    use Variant::{T0Prime, T0};
    match (ctx.family, l) {
        (Family::B, _) => {
            for p in 2..=l {
                push(Kind::Sigma, Some(p), T0, diag_runs(&[(-1, 2 * p), (1, 2 * l + 1 - 2 * p)]))?;
            }
            for p in 1..=l {
                push(Kind::Tau, Some(p), T0, diag_runs(&[(-1, 1), (1, 2 * p - 1), (-1, 2 * l - 2 * p + 1)]))?;
            }
        }
        (Family::D, 2) => {
            let j = j_pq(0, 1);
            push(Kind::Sigma1, Some(1), T0, block_diag(&[-&j, j.clone()]))?;
            let swap = |d: &ExactMatrix| {
                let mut g = ExactMatrix::zeros(4);
                for (i, jj, v) in d.nonzeros() {
                    g.set(i, 2 + jj, v.clone());
                    g.set(2 + i, jj, v.clone());
                }
                g
            };
            push(Kind::Eta1, Some(1), T0, swap(&ExactMatrix::identity(2)))?;
            push(Kind::Eta2, Some(2), T0, swap(&i_pq(1, 1)))?;
            push(Kind::Mu, Some(1), T0, diag_runs(&[(-1, 1), (1, 2), (-1, 1)]))?;
            push(Kind::TauPrime, Some(1), T0, diag_runs(&[(-1, 2), (1, 1), (-1, 1)]))?;
            push(Kind::Tau, Some(1), T0, diag_runs(&[(-1, 1), (1, 1), (-1, 2)]))?;
        }
        (Family::D, _) => {
            let j0 = block_diag(&[j_pq(0, 1), j_pq(0, l - 1)]);
            let j0p = block_diag(&[j_pq(0, 1), j_pq(l - 2, 1)]);
            if l == 3 {
                push(Kind::Sigma0, None, T0Prime, j0p.mul(&j0))?;
                push(Kind::Sigma0Prime, None, T0Prime, ExactMatrix::diag(&[-1, 1, -1, 1, -1, 1]))?;
            }
            for p in 2..=l.saturating_sub(2) {
                push(Kind::Sigma, Some(p), T0, i_pq(2 * p, 2 * l - 2 * p))?;
            }
            push(Kind::SigmaLMinus1, Some(l - 1), T0Prime, j0p)?;
            push(Kind::SigmaL, Some(l), T0Prime, j0)?;
            for p in 1..=l - 2 {
                push(Kind::Tau, Some(p), T0, diag_runs(&[(-1, 1), (1, 2 * p - 1), (-1, 2 * l - 2 * p)]))?;
            }
            for p in 1..=l - 2 {
                push(Kind::TauPrime, Some(p), T0, diag_runs(&[(-1, 2 * p), (1, 2 * l - 2 * p - 1), (-1, 1)]))?;
            }
            for p in 1..=l - 2 {
                let g = if p == 1 {
                    diag_runs(&[(-1, 1), (1, 2 * l - 2), (-1, 1)])
                } else {
                    diag_runs(&[(-1, 1), (1, 1), (-1, 2 * p - 2), (1, 2 * l - 2 * p - 1), (-1, 1)])
                };
                push(Kind::Mu, Some(p), T0, g)?;
            }
        }
    }
    Ok(out)
}

/// Outcome of the involution axiom checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutionReport {
    pub involution: String,
    pub preserves_g0: bool,
    pub squares_to_identity: bool,
    pub commutes_with_theta: bool,
    pub bracket_preserving: bool,
    pub pairs_checked: usize,
}

impl InvolutionReport {
    pub fn passed(&self) -> bool {
        self.preserves_g0 && self.squares_to_identity && self.commutes_with_theta && self.bracket_preserving
    }

    /// First failed axiom, if any.
    pub fn failure(&self) -> Option<&'static str> {
        if !self.preserves_g0 {
            Some("sigma preserves g0")
        } else if !self.squares_to_identity {
            Some("sigma^2 = id")
        } else if !self.commutes_with_theta {
            Some("sigma theta = theta sigma")
        } else if !self.bracket_preserving {
            Some("sigma[X,Y] = [sigma X, sigma Y]")
        } else {
            None
        }
    }
}

/// Checks σ² = id, σθ = θσ, σ(g₀) ⊆ g₀ on a basis, and the bracket
/// relation on all basis pairs for m ≤ 5 plus 200 seeded random pairs.
pub fn verify_involution(sigma: &Involution) -> Result<InvolutionReport, Error> {
    let ctx = build_context(sigma.m)?;
    let basis = ctx.standard_g0_basis();
    let images: Vec<ExactMatrix> = basis.iter().map(|x| sigma.apply(x)).collect();
    let preserves_g0 = images.iter().all(|y| ctx.in_g0(y));
    let squares_to_identity = basis.iter().zip(&images).all(|(x, y)| sigma.apply(y) == *x);
    let commutes_with_theta = basis.iter().zip(&images).all(|(x, y)| ctx.theta(y) == sigma.apply(&ctx.theta(x)));
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    if sigma.m <= 5 {
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                pairs.push((i, j));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 + sigma.m as u64);
    for _ in 0..200 {
        pairs.push((rng.gen_range(0..basis.len()), rng.gen_range(0..basis.len())));
    }
    let bracket_preserving =
        pairs.iter().all(|&(i, j)| sigma.apply(&bracket(&basis[i], &basis[j])) == bracket(&images[i], &images[j]));
    Ok(InvolutionReport {
        involution: sigma.name(),
        preserves_g0,
        squares_to_identity,
        commutes_with_theta,
        bracket_preserving,
        pairs_checked: pairs.len(),
    })
}

#[derive(Clone, Debug)]
pub struct FixedSubalgebra {
    pub g0_fixed_dim: usize,
    pub k0_fixed_dim: usize,
    pub p0_fixed_dim: usize,
    pub p0_fixed_basis: Vec<ExactMatrix>,
    pub k0_fixed_basis: Vec<ExactMatrix>,
}

/// Matrix of a linear map on the real span of `basis`, columns = images.
pub fn matrix_on(basis: &[ExactMatrix], map: impl Fn(&ExactMatrix) -> ExactMatrix) -> Result<RatMatrix, Error> {
    let rc = RealCoordinates::new(basis)?;
    let n = basis.len();
    let mut m = linear::zeros(n, n);
    for (j, b) in basis.iter().enumerate() {
        let c = rc.coords(&map(b)).ok_or_else(|| Error::Verification("image leaves the subspace".into()))?;
        for (i, v) in c.into_iter().enumerate() {
            m[i][j] = v;
        }
    }
    Ok(m)
}

fn fixed_vectors(basis: &[ExactMatrix], sigma: &Involution) -> Result<Vec<ExactMatrix>, Error> {
    let mut m = matrix_on(basis, |x| sigma.apply(x))?;
    for (i, row) in m.iter_mut().enumerate() {
        row[i] -= Rational::one();
    }
    let rc = RealCoordinates::new(basis)?;
    Ok(linear::nullspace(&m, basis.len()).iter().map(|v| rc.combine(v)).collect())
}

/// The +1 eigenspace of σ on g₀, split along k₀ ⊕ p₀.
pub fn fixed_subalgebra(sigma: &Involution) -> Result<FixedSubalgebra, Error> {
    let ctx = build_context(sigma.m)?;
    let k = fixed_vectors(&ctx.standard_k0_basis(), sigma)?;
    let p = fixed_vectors(&ctx.standard_p0_basis(), sigma)?;
    Ok(FixedSubalgebra {
        g0_fixed_dim: k.len() + p.len(),
        k0_fixed_dim: k.len(),
        p0_fixed_dim: p.len(),
        p0_fixed_basis: p,
        k0_fixed_basis: k,
    })
}

/// exp(t X) for `X² = −c²P`, `P` a projector with `XP = X`, and
/// `t = pi_quarters · π/4`, provided `c·t` is a multiple of π/2.
pub fn cayley_exp(x: &ExactMatrix, pi_quarters: i64) -> Result<ExactMatrix, Error> {
    let n = x.size();
    if x.is_zero() || pi_quarters == 0 {
        return Ok(ExactMatrix::identity(n));
    }
    let x2 = x.mul(x);
    let x4 = x2.mul(&x2);
    let lambda = proportionality(&x4, &x2)
        .filter(GaussianRational::is_real)
        .ok_or_else(|| Error::Malformed("X^2 is not a multiple of a projector".into()))?
        .re;
    // X⁴ = −c² X² and X³ = −c² X.
    let c2 = -lambda;
    if c2 <= Rational::zero() || x2.mul(x) != x.scale_rational(&-c2.clone()) {
        return Err(Error::Malformed("X^2 = -c^2 P fails".into()));
    }
    let c = rational_sqrt(&c2).ok_or_else(|| Error::Malformed("c is irrational".into()))?;
    let quarter_periods = &c * rat(pi_quarters) / rat(2);
    let k = rational_to_i64(&quarter_periods).ok_or_else(|| Error::Malformed("inexact angle".into()))?;
    let (sin, cos) = match k.rem_euclid(4) {
        0 => (0, 1),
        1 => (1, 0),
        2 => (0, -1),
        _ => (-1, 0),
    };
    let a = rat(sin) / &c;
    let b = (rat(1) - rat(cos)) / &c2;
    Ok(&(&ExactMatrix::identity(n) + &x.scale_rational(&a)) + &x2.scale_rational(&b))
}

/// The Cayley identities behind τ_p (odd m) and μ_p (even m):
/// exp(π/2·X) is I − 2(E₁₁ + E_nn), resp. I − 2(E₂₂ + E_nn); the
/// quarter-turn sends Y_γ to iH*_γ; and the conjugated σ_p are the catalog
/// matrices up to sign.
pub fn verify_cayley(m: usize) -> Result<(), Error> {
    let ctx = build_context(m)?;
    let (l, n) = (ctx.l, ctx.n());
    let fail = |what: &str| Err(Error::Verification(format!("Cayley identity: {what}")));
    if m < 3 {
        return Ok(());
    }
    let rs = build_root_system(&ctx, Variant::T0)?;
    let cb = build_chevalley(&rs)?;
    let two = GaussianRational::from_int(2);
    let (gammas, corner) = match ctx.family {
        Family::B => (vec![Root::e(l, 1)], 1),
        Family::D => {
            let mut g1 = Root::e(l, 1);
            g1.coords[l - 1] = -1;
            let mut g2 = Root::e(l, 1);
            g2.coords[l - 1] = 1;
            (vec![g1, g2], 2)
        }
    };
    let x = gammas.iter().fold(ExactMatrix::zeros(n), |acc, g| &acc + &cb.xy(g).0);
    let half_turn = cayley_exp(&x, 2)?;
    let want = &ExactMatrix::identity(n) - &(&e_mat(n, corner, corner) + &e_mat(n, n, n)).scale(&two);
    if half_turn != want {
        return fail("exp(π/2·X)");
    }
    let c = cayley_exp(&x, 1)?;
    let c_inv = cayley_exp(&x, -1)?;
    for g in &gammas {
        let (_, y) = cb.xy(g);
        if crate::liealg::conjugate(&c, &y, &c_inv) != rs.hstar(g).times_i() {
            return fail(&format!("c(Y_{g}) = iH*_{g}"));
        }
    }
    let cat = catalog(m)?;
    let same_up_to_sign = |a: &ExactMatrix, b: &ExactMatrix| a == b || *a == -b;
    for p in 2..=l {
        let conj = match ctx.family {
            Family::B => {
                let sigma_l = i_pq(2 * l, 1);
                sigma_l.mul(&half_turn).mul(&i_pq(2 * p, 2 * l + 1 - 2 * p))
            }
            Family::D if p <= l - 2 => half_turn.mul(&i_pq(2 * p, 2 * l - 2 * p)),
            Family::D => continue,
        };
        let kind = if ctx.family == Family::B { Kind::Tau } else { Kind::Mu };
        let entry =
            cat.iter().find(|s| s.kind == kind && s.p == Some(p)).ok_or_else(|| Error::Malformed("catalog".into()))?;
        if !same_up_to_sign(&conj, &entry.conjugator) {
            return fail(&format!("conjugated σ_{p}"));
        }
    }
    Ok(())
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::new(n, d))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Holomorphy {
    Holomorphic,
    Antiholomorphic,
    Mixed,
}

/// Classification by σ on the centre z of k, spanned by `H_ω` for the
/// noncompact simple roots: id → Holomorphic, −id → Antiholomorphic,
/// otherwise Mixed (possible only for m = 2, where z is two-dimensional).
pub fn holomorphy_class(sigma: &Involution) -> Result<Holomorphy, Error> {
    let ctx = build_context(sigma.m)?;
    let rs = build_root_system(&ctx, Variant::T0)?;
    let weights = rs.fundamental_coweights();
    let z: Vec<&ExactMatrix> =
        rs.simples.iter().zip(&weights).filter(|(s, _)| !s.is_compact()).map(|(_, h)| h).collect();
    if z.iter().all(|h| sigma.apply(h) == **h) {
        Ok(Holomorphy::Holomorphic)
    } else if z.iter().all(|h| sigma.apply(h) == -*h) {
        Ok(Holomorphy::Antiholomorphic)
    } else {
        Ok(Holomorphy::Mixed)
    }
}

/// A vertex of the extended diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Vertex {
    /// φ_j (1-based).
    Phi(usize),
    /// −φ_j, used only for m = 2.
    MinusPhi(usize),
    MinusDelta,
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Phi(j) => write!(f, "φ_{j}"),
            Vertex::MinusPhi(j) => write!(f, "-φ_{j}"),
            Vertex::MinusDelta => write!(f, "-δ"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Color {
    White,
    Black,
}

/// The extended (affine) diagram with marks.
#[derive(Clone, Debug)]
pub struct ExtendedDiagram {
    pub vertices: Vec<Vertex>,
    pub roots: Vec<Root>,
    pub marks: Vec<i64>,
    pub colors: Vec<Color>,
}

impl ExtendedDiagram {
    pub fn new(rs: &RootSystem) -> Result<Self, Error> {
        let mut vertices: Vec<Vertex> = (1..=rs.l).map(Vertex::Phi).collect();
        let mut roots = rs.simples.clone();
        let marks = if rs.m == 2 {
            vertices.extend([Vertex::MinusPhi(1), Vertex::MinusPhi(2)]);
            roots.extend([rs.phi(1).neg(), rs.phi(2).neg()]);
            vec![1; 4]
        } else {
            vertices.push(Vertex::MinusDelta);
            roots.push(rs.highest_root()?.neg());
            let mut mk = rs.marks()?;
            mk.push(1);
            mk
        };
        let colors = roots.iter().map(|r| if r.is_compact() { Color::White } else { Color::Black }).collect();
        Ok(ExtendedDiagram { vertices, roots, marks, colors })
    }

    pub fn index(&self, v: Vertex) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        i != j && self.roots[i].dot(&self.roots[j]) != 0
    }

    /// Cartan integer `2⟨ψ_i, ψ_j⟩/|ψ_j|²`.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        2 * self.roots[i].dot(&self.roots[j]) / self.roots[j].norm2()
    }

    /// Whether `perm` preserves all Cartan integers.
    pub fn is_automorphism(&self, perm: &[usize]) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| (0..n).all(|j| self.cartan(i, j) == self.cartan(perm[i], perm[j])))
    }
}

/// Action of σ on the extended diagram.
#[derive(Clone, Debug)]
pub struct VoganData {
    pub diagram: ExtendedDiagram,
    /// `vertex_action[i]` is the index of σ(vertex i).
    pub vertex_action: Vec<usize>,
    /// Sign of σ on the root space of each fixed vertex; `None` when moved.
    pub signs: Vec<Option<i64>>,
}

impl VoganData {
    pub fn fixed(&self, i: usize) -> bool {
        self.vertex_action[i] == i
    }

    pub fn circled(&self) -> Vec<Vertex> {
        (0..self.signs.len()).filter(|&i| self.signs[i] == Some(-1)).map(|i| self.diagram.vertices[i]).collect()
    }

    /// Unordered swapped pairs.
    pub fn swaps(&self) -> Vec<(Vertex, Vertex)> {
        (0..self.vertex_action.len())
            .filter(|&i| self.vertex_action[i] > i)
            .map(|i| (self.diagram.vertices[i], self.diagram.vertices[self.vertex_action[i]]))
            .collect()
    }

    /// Both black vertices fixed (+1) or swapped (−1); m ≥ 3 only.
    pub fn z_sign(&self) -> Option<i64> {
        let black: Vec<usize> =
            (0..self.diagram.colors.len()).filter(|&i| self.diagram.colors[i] == Color::Black).collect();
        if black.len() != 2 {
            return None;
        }
        if black.iter().all(|&i| self.fixed(i)) {
            Some(1)
        } else if self.vertex_action[black[0]] == black[1] {
            Some(-1)
        } else {
            None
        }
    }
}

/// Vogan data for every catalog entry and its θ-twist, in catalog order
/// (σ before σθ), sharing one Chevalley basis per Cartan variant.
pub fn catalog_vogan_data(m: usize) -> Result<Vec<(Involution, VoganData)>, Error> {
    let ctx = build_context(m)?;
    let mut bases: Vec<(Variant, ChevalleyBasis)> = Vec::new();
    let mut out = Vec::new();
    for s in catalog(m)? {
        if !bases.iter().any(|(v, _)| *v == s.variant) {
            let cb = build_chevalley(&build_root_system(&ctx, s.variant)?)?;
            bases.push((s.variant, cb));
        }
        let cb = &bases.iter().find(|(v, _)| *v == s.variant).expect("basis cached").1;
        let twisted = s.times_theta();
        let (a, b) = (vogan_data_with(&s, cb)?, vogan_data_with(&twisted, cb)?);
        out.push((s, a));
        out.push((twisted, b));
    }
    Ok(out)
}

/// Reads σ off the simple-root vectors of the Chevalley basis of
/// `sigma.variant`: where each vertex goes and the sign on fixed ones.
pub fn vogan_data(sigma: &Involution) -> Result<VoganData, Error> {
    let ctx = build_context(sigma.m)?;
    let rs = build_root_system(&ctx, sigma.variant)?;
    let cb = build_chevalley(&rs)?;
    vogan_data_with(sigma, &cb)
}

pub fn vogan_data_with(sigma: &Involution, cb: &ChevalleyBasis) -> Result<VoganData, Error> {
    let rs = &cb.rs;
    for t in &rs.frame {
        if rs.cartan_coordinates(&sigma.apply(t)).is_none() {
            return Err(Error::Verification(format!("{} does not normalize the Cartan subalgebra", sigma.name())));
        }
    }
    let diagram = ExtendedDiagram::new(rs)?;
    let mut action = Vec::new();
    let mut signs = Vec::new();
    for (i, r) in diagram.roots.iter().enumerate() {
        let img = rs
            .root_of_coroot(&sigma.apply(&rs.hstar(r)))
            .ok_or_else(|| Error::Verification("image of a coroot is not a coroot".into()))?;
        let j = diagram.roots.iter().position(|x| *x == img).ok_or_else(|| {
            Error::Verification(format!("{} moves vertex {} off the diagram", sigma.name(), diagram.vertices[i]))
        })?;
        action.push(j);
        if i == j {
            let c = proportionality(&sigma.apply(cb.e(r)), cb.e(r))
                .filter(GaussianRational::is_real)
                .and_then(|c| rational_to_i64(&c.re))
                .filter(|c| c.abs() == 1)
                .ok_or_else(|| Error::Verification("fixed root space sign is not ±1".into()))?;
            signs.push(Some(c));
        } else {
            signs.push(None);
        }
    }
    if !diagram.is_automorphism(&action) {
        return Err(Error::Verification("vertex action is not a diagram automorphism".into()));
    }
    Ok(VoganData { diagram, vertex_action: action, signs })
}

/// 𝒪 = circled vertices ∪ adjacent swapped pairs, with the parity of Σ_𝒪 a_ψ
/// (`true` = even).
pub fn almost_double_parity(vd: &VoganData) -> (Vec<Vertex>, bool) {
    let d = &vd.diagram;
    let mut o: BTreeSet<usize> = BTreeSet::new();
    for i in 0..d.vertices.len() {
        let j = vd.vertex_action[i];
        if (i == j && vd.signs[i] == Some(-1)) || (i != j && d.adjacent(i, j)) {
            o.insert(i);
        }
    }
    let sum: i64 = o.iter().map(|&i| d.marks[i]).sum();
    (o.into_iter().map(|i| d.vertices[i]).collect(), sum % 2 == 0)
}

/// A Vogan diagram on the compact simple roots φ₂..φ_l together with the
/// action on the centre of k (`z_sign` = ±1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K0Diagram {
    pub m: usize,
    /// `perm[j]` = image of φ_j, indexed by j ∈ 2..=l (entries 0, 1 unused).
    pub perm: Vec<usize>,
    pub circled: BTreeSet<usize>,
    pub z_sign: i64,
}

impl K0Diagram {
    /// Identity automorphism with the given circles.
    pub fn plain(m: usize, circled: &[usize], z_sign: i64) -> Result<Self, Error> {
        let l = build_context(m)?.l;
        Ok(K0Diagram { m, perm: (0..=l).collect(), circled: circled.iter().copied().collect(), z_sign })
    }

    /// Restriction of a catalog entry's Vogan data to k₀.
    pub fn from_vogan(m: usize, vd: &VoganData) -> Result<Self, Error> {
        let l = build_context(m)?.l;
        let z_sign = vd.z_sign().ok_or_else(|| Error::Malformed("black vertices neither fixed nor swapped".into()))?;
        let mut perm: Vec<usize> = (0..=l).collect();
        let mut circled = BTreeSet::new();
        for (j, image) in perm.iter_mut().enumerate().skip(2) {
            let i = vd.diagram.index(Vertex::Phi(j)).expect("simple vertex");
            match vd.diagram.vertices[vd.vertex_action[i]] {
                Vertex::Phi(k) if k >= 2 => *image = k,
                _ => return Err(Error::Malformed("compact vertex sent to a black vertex".into())),
            }
            if vd.signs[i] == Some(-1) {
                circled.insert(j);
            }
        }
        Ok(K0Diagram { m, perm, circled, z_sign })
    }
}

/// Whether the k₀-diagram extends to an almost double Vogan diagram with
/// Σ_𝒪 a_ψ even. Black vertices are fixed when `z_sign = 1` (each may be
/// circled or not) and swapped when `z_sign = −1`.
pub fn extendability(k0: &K0Diagram) -> Result<bool, Error> {
    if k0.m < 3 {
        return Err(Error::Malformed("the compact diagram is empty for m = 2".into()));
    }
    let ctx = build_context(k0.m)?;
    let l = ctx.l;
    let rs = build_root_system(&ctx, Variant::T0)?;
    let d = ExtendedDiagram::new(&rs)?;
    if k0.perm.len() != l + 1 || (2..=l).any(|j| k0.perm[j] < 2 || k0.perm[j] > l || k0.perm[k0.perm[j]] != j) {
        return Err(Error::Malformed("not an involutive permutation of the compact vertices".into()));
    }
    if k0.circled.iter().any(|&j| j < 2 || j > l || k0.perm[j] != j) {
        return Err(Error::Malformed("circles must sit on fixed compact vertices".into()));
    }
    if k0.z_sign.abs() != 1 {
        return Err(Error::Malformed("z_sign must be ±1".into()));
    }
    let phi1 = d.index(Vertex::Phi(1)).expect("vertex");
    let md = d.index(Vertex::MinusDelta).expect("vertex");
    let mut action: Vec<usize> = (0..d.vertices.len()).collect();
    for j in 2..=l {
        action[j - 1] = k0.perm[j] - 1;
    }
    let black_options: Vec<(bool, bool)> = if k0.z_sign == 1 {
        action[phi1] = phi1;
        action[md] = md;
        vec![(false, false), (true, false), (false, true), (true, true)]
    } else {
        action[phi1] = md;
        action[md] = phi1;
        vec![(false, false)]
    };
    if !d.is_automorphism(&action) {
        return Ok(false);
    }
    Ok(black_options.into_iter().any(|(c1, c2)| {
        let mut signs: Vec<Option<i64>> = (0..d.vertices.len()).map(|i| (action[i] == i).then_some(1)).collect();
        for &j in &k0.circled {
            signs[j - 1] = Some(-1);
        }
        if k0.z_sign == 1 {
            signs[phi1] = Some(if c1 { -1 } else { 1 });
            signs[md] = Some(if c2 { -1 } else { 1 });
        }
        let vd = VoganData { diagram: d.clone(), vertex_action: action.clone(), signs };
        almost_double_parity(&vd).1
    }))
}

/// Matrix of σ on g₀ in a real basis, plus whether every entry is an integer.
#[derive(Clone, Debug)]
pub struct LatticeReport {
    pub matrix: RatMatrix,
    pub integral: bool,
}

pub fn ad_matrix_in_lattice_basis(sigma: &Involution, basis: &RealBasis) -> Result<LatticeReport, Error> {
    let elems = basis.elements();
    let matrix = matrix_on(&elems, |x| sigma.apply(x))
        .map_err(|_| Error::Verification(format!("{} has a non-rational matrix in the lattice basis", sigma.name())))?;
    let integral = matrix.iter().flatten().all(|x| x.is_integer());
    Ok(LatticeReport { matrix, integral })
}

//! Matrices over ℚ(i), the real form g₀ = so(2,m), its Cartan involution
//! θ(X) = I_{2,m} X I_{2,m}, the map f : so(m+2,ℂ) → g and the real
//! bases B, B′ built from Chevalley vectors.
//!
//! Matrix helper constructors take 1-based indices.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::chevalley::{build_chevalley, ChevalleyBasis};
use crate::exact::{GaussianRational, Rational};
use crate::linear::{self, RatMatrix};
use crate::roots::{build_root_system, Variant};
use crate::Error;

/// Square matrix with entries in ℚ(i), row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    n: usize,
    entries: Vec<GaussianRational>,
}

impl ExactMatrix {
    pub fn zeros(n: usize) -> Self {
        ExactMatrix { n, entries: vec![GaussianRational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = GaussianRational::one();
        }
        m
    }

    /// Diagonal matrix with integer entries.
    pub fn diag(d: &[i64]) -> Self {
        let mut m = ExactMatrix::zeros(d.len());
        for (i, &x) in d.iter().enumerate() {
            m.set(i, i, GaussianRational::from_int(x));
        }
        m
    }

    pub fn from_fn<F: FnMut(usize, usize) -> GaussianRational>(n: usize, mut f: F) -> Self {
        let mut m = ExactMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                m.entries[i * n + j] = f(i, j);
            }
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// 0-based entry access.
    pub fn at(&self, i: usize, j: usize) -> &GaussianRational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GaussianRational) {
        self.entries[i * self.n + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &GaussianRational) {
        self.entries[i * self.n + j] += v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(GaussianRational::is_real)
    }

    /// Nonzero entries as `(row, col, value)`, 0-based.
    pub fn nonzeros(&self) -> impl Iterator<Item = (usize, usize, &GaussianRational)> {
        let n = self.n;
        self.entries.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(move |(k, v)| (k / n, k % n, v))
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        ExactMatrix { n: self.n, entries: self.entries.iter().map(|x| x * c).collect() }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        ExactMatrix { n: self.n, entries: self.entries.iter().map(|x| x.scale(r)).collect() }
    }

    pub fn times_i(&self) -> Self {
        ExactMatrix { n: self.n, entries: self.entries.iter().map(|x| x.times_i()).collect() }
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> Self {
        ExactMatrix { n: self.n, entries: self.entries.iter().map(|x| x.conj()).collect() }
    }

    pub fn transpose(&self) -> Self {
        ExactMatrix::from_fn(self.n, |i, j| self.at(j, i).clone())
    }

    pub fn trace(&self) -> GaussianRational {
        (0..self.n).fold(GaussianRational::zero(), |acc, i| acc + self.at(i, i).clone())
    }

    /// Product skipping zero entries; the matrices in play are very sparse.
    pub fn mul(&self, o: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.n, o.n, "matrix size mismatch");
        let n = self.n;
        let rows: Vec<Vec<(usize, &GaussianRational)>> = (0..n)
            .map(|k| {
                (0..n)
                    .filter_map(|j| {
                        let v = o.at(k, j);
                        (!v.is_zero()).then_some((j, v))
                    })
                    .collect()
            })
            .collect();
        let mut out = ExactMatrix::zeros(n);
        for (i, k, a) in self.nonzeros() {
            for &(j, b) in &rows[k] {
                out.entries[i * n + j] += &(a * b);
            }
        }
        out
    }

    /// `tr(XY)` without forming the product.
    pub fn trace_form(&self, o: &ExactMatrix) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for (i, k, a) in self.nonzeros() {
            let b = o.at(k, i);
            if !b.is_zero() {
                acc += &(a * b);
            }
        }
        acc
    }

    /// Inverse by Gauss–Jordan elimination over ℚ(i).
    pub fn inverse(&self) -> Option<ExactMatrix> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = ExactMatrix::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&r| !a.at(r, c).is_zero())?;
            if p != c {
                for j in 0..n {
                    a.entries.swap(p * n + j, c * n + j);
                    inv.entries.swap(p * n + j, c * n + j);
                }
            }
            let s = a.at(c, c).inv()?;
            for j in 0..n {
                a.entries[c * n + j] = &a.entries[c * n + j] * &s;
                inv.entries[c * n + j] = &inv.entries[c * n + j] * &s;
            }
            for r in 0..n {
                if r == c || a.at(r, c).is_zero() {
                    continue;
                }
                let f = a.at(r, c).clone();
                for j in 0..n {
                    let da = &f * a.at(c, j);
                    let di = &f * inv.at(c, j);
                    a.entries[r * n + j] -= &da;
                    inv.entries[r * n + j] -= &di;
                }
            }
        }
        Some(inv)
    }

    /// Determinant over ℚ(i).
    pub fn det(&self) -> GaussianRational {
        let n = self.n;
        let mut a = self.clone();
        let mut d = GaussianRational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a.at(r, c).is_zero()) else {
                return GaussianRational::zero();
            };
            if p != c {
                for j in 0..n {
                    a.entries.swap(p * n + j, c * n + j);
                }
                d = -d;
            }
            d = &d * a.at(c, c);
            let s = a.at(c, c).inv().expect("nonzero pivot");
            for r in c + 1..n {
                if a.at(r, c).is_zero() {
                    continue;
                }
                let f = a.at(r, c) * &s;
                for j in c..n {
                    let dv = &f * a.at(c, j);
                    a.entries[r * n + j] -= &dv;
                }
            }
        }
        d
    }

    /// Real and imaginary parts flattened: `[re(0,0), …, im(0,0), …]`.
    pub fn flatten_real(&self) -> Vec<Rational> {
        let mut v: Vec<Rational> = self.entries.iter().map(|x| x.re.clone()).collect();
        v.extend(self.entries.iter().map(|x| x.im.clone()));
        v
    }
}

impl std::ops::Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, o: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.n, o.n, "matrix size mismatch");
        ExactMatrix { n: self.n, entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a + b).collect() }
    }
}

impl std::ops::Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, o: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.n, o.n, "matrix size mismatch");
        ExactMatrix { n: self.n, entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a - b).collect() }
    }
}

impl std::ops::Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        ExactMatrix { n: self.n, entries: self.entries.iter().map(|x| -x).collect() }
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.at(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `E_ij` (1-based).
pub fn e_mat(n: usize, i: usize, j: usize) -> ExactMatrix {
    let mut m = ExactMatrix::zeros(n);
    m.set(i - 1, j - 1, GaussianRational::one());
    m
}

/// `F_jk = E_jk − E_kj` (1-based).
pub fn f_mat(n: usize, j: usize, k: usize) -> ExactMatrix {
    &e_mat(n, j, k) - &e_mat(n, k, j)
}

/// `H_j = F_{2j−1,2j}`.
pub fn h_mat(n: usize, j: usize) -> ExactMatrix {
    f_mat(n, 2 * j - 1, 2 * j)
}

/// `I_{p,q} = diag(−I_p, I_q)`.
pub fn i_pq(p: usize, q: usize) -> ExactMatrix {
    let d: Vec<i64> = (0..p + q).map(|k| if k < p { -1 } else { 1 }).collect();
    ExactMatrix::diag(&d)
}

/// Diagonal matrix from runs `(sign, length)`.
pub fn diag_runs(runs: &[(i64, usize)]) -> ExactMatrix {
    let d: Vec<i64> = runs.iter().flat_map(|&(s, len)| std::iter::repeat_n(s, len)).collect();
    ExactMatrix::diag(&d)
}

/// Block-diagonal matrix.
pub fn block_diag(blocks: &[ExactMatrix]) -> ExactMatrix {
    let n = blocks.iter().map(ExactMatrix::size).sum();
    let mut m = ExactMatrix::zeros(n);
    let mut off = 0;
    for b in blocks {
        for (i, j, v) in b.nonzeros() {
            m.set(off + i, off + j, v.clone());
        }
        off += b.size();
    }
    m
}

/// `J_{p,q} = [[0, I_{p,q}], [−I_{p,q}, 0]]`.
pub fn j_pq(p: usize, q: usize) -> ExactMatrix {
    let k = p + q;
    let ipq = i_pq(p, q);
    let mut m = ExactMatrix::zeros(2 * k);
    for i in 0..k {
        let v = ipq.at(i, i).clone();
        m.set(i, k + i, v.clone());
        m.set(k + i, i, -v);
    }
    m
}

/// `[X, Y] = XY − YX`.
pub fn bracket(x: &ExactMatrix, y: &ExactMatrix) -> ExactMatrix {
    &x.mul(y) - &y.mul(x)
}

/// Conjugation `g X g⁻¹` with a precomputed inverse.
pub fn conjugate(g: &ExactMatrix, x: &ExactMatrix, g_inv: &ExactMatrix) -> ExactMatrix {
    g.mul(x).mul(g_inv)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    B,
    D,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            match self {
                Family::B => "B",
                Family::D => "D",
            }
        )
    }
}

/// so(2,m) with its Cartan data.
#[derive(Clone, Debug)]
pub struct LieContext {
    pub m: usize,
    pub l: usize,
    pub family: Family,
    pub dim_g0: usize,
    pub dim_k0: usize,
    pub dim_p0: usize,
    pub theta_conjugator: ExactMatrix,
}

pub fn build_context(m: usize) -> Result<LieContext, Error> {
    if m < 2 {
        return Err(Error::UnsupportedRank(m));
    }
    let (l, family) = if m % 2 == 1 { (m.div_ceil(2), Family::B) } else { ((m + 2) / 2, Family::D) };
    let ctx = LieContext {
        m,
        l,
        family,
        dim_g0: (m + 1) * (m + 2) / 2,
        dim_k0: 1 + m * (m - 1) / 2,
        dim_p0: 2 * m,
        theta_conjugator: i_pq(2, m),
    };
    debug_assert_eq!(ctx.dim_g0, ctx.dim_k0 + ctx.dim_p0);
    debug_assert_eq!(ctx.standard_k0_basis().len(), ctx.dim_k0);
    Ok(ctx)
}

impl LieContext {
    /// Matrix size `m + 2`.
    pub fn n(&self) -> usize {
        self.m + 2
    }

    pub fn theta(&self, x: &ExactMatrix) -> ExactMatrix {
        let i = &self.theta_conjugator;
        i.mul(x).mul(i)
    }

    /// `Xᵗ I + I X = 0` (membership in g = g₀ ⊗ ℂ).
    pub fn in_g(&self, x: &ExactMatrix) -> bool {
        let i = &self.theta_conjugator;
        x.size() == self.n() && (&x.transpose().mul(i) + &i.mul(x)).is_zero()
    }

    pub fn in_g0(&self, x: &ExactMatrix) -> bool {
        self.in_g(x) && x.is_real()
    }

    /// Real basis of k₀: `F_12` and `F_jk` for 3 ≤ j < k ≤ m+2.
    pub fn standard_k0_basis(&self) -> Vec<ExactMatrix> {
        let n = self.n();
        let mut v = vec![f_mat(n, 1, 2)];
        for j in 3..=n {
            for k in j + 1..=n {
                v.push(f_mat(n, j, k));
            }
        }
        v
    }

    /// Real basis of p₀: `E_ak + E_ka` for a ∈ {1,2}, 3 ≤ k ≤ m+2.
    pub fn standard_p0_basis(&self) -> Vec<ExactMatrix> {
        let n = self.n();
        let mut v = Vec::new();
        for a in 1..=2 {
            for k in 3..=n {
                v.push(&e_mat(n, a, k) + &e_mat(n, k, a));
            }
        }
        v
    }

    pub fn standard_g0_basis(&self) -> Vec<ExactMatrix> {
        let mut v = self.standard_k0_basis();
        v.extend(self.standard_p0_basis());
        v
    }
}

/// `X = k + p` with θk = k, θp = −p.
pub fn cartan_decompose(ctx: &LieContext, x: &ExactMatrix) -> Result<(ExactMatrix, ExactMatrix), Error> {
    if !ctx.in_g(x) {
        return Err(Error::NotInAlgebra);
    }
    let tx = ctx.theta(x);
    let half = crate::exact::ratio(1, 2);
    Ok(((x + &tx).scale_rational(&half), (x - &tx).scale_rational(&half)))
}

/// f([Z1 Z2; −Z2ᵗ Z3]) = [Z1 iZ2; iZ2ᵗ Z3] on skew-symmetric `Z`.
pub fn f_isomorphism(z: &ExactMatrix) -> Result<ExactMatrix, Error> {
    if !(z + &z.transpose()).is_zero() {
        return Err(Error::NotSkew);
    }
    let n = z.size();
    let mut out = ExactMatrix::zeros(n);
    for (i, j, v) in z.nonzeros() {
        let w = match (i < 2, j < 2) {
            (true, false) => v.times_i(),
            (false, true) => -v.times_i(),
            _ => v.clone(),
        };
        out.set(i, j, w);
    }
    Ok(out)
}

/// Real coordinates relative to a list of matrices that are linearly
/// independent over ℝ. A pivot subset of the real components gives a
/// square system; every answer is checked by reconstruction.
#[derive(Clone, Debug)]
pub struct RealCoordinates {
    basis: Vec<ExactMatrix>,
    pivots: Vec<usize>,
    inv: RatMatrix,
}

impl RealCoordinates {
    pub fn new(basis: &[ExactMatrix]) -> Result<Self, Error> {
        let rows: RatMatrix = basis.iter().map(ExactMatrix::flatten_real).collect();
        let mut work = rows.clone();
        let pivots = linear::rref(&mut work);
        if pivots.len() != basis.len() {
            return Err(Error::Dependent);
        }
        let sub: RatMatrix = rows.iter().map(|r| pivots.iter().map(|&p| r[p].clone()).collect()).collect();
        let inv = linear::inverse(&sub).ok_or(Error::Dependent)?;
        Ok(RealCoordinates { basis: basis.to_vec(), pivots, inv })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[ExactMatrix] {
        &self.basis
    }

    /// Coordinates `c` with `Σ c_k b_k = x`, or `None` if `x` is outside the real span.
    pub fn coords(&self, x: &ExactMatrix) -> Option<Vec<Rational>> {
        let flat = x.flatten_real();
        let xp: Vec<&Rational> = self.pivots.iter().map(|&p| &flat[p]).collect();
        let n = self.basis.len();
        let mut c = vec![Rational::zero(); n];
        for (p, xv) in xp.iter().enumerate() {
            if xv.is_zero() {
                continue;
            }
            for (k, ck) in c.iter_mut().enumerate() {
                let s = &self.inv[p][k];
                if !s.is_zero() {
                    *ck += *xv * s;
                }
            }
        }
        (self.combine(&c) == *x).then_some(c)
    }

    pub fn combine(&self, c: &[Rational]) -> ExactMatrix {
        let n = self.basis[0].size();
        let mut out = ExactMatrix::zeros(n);
        for (ck, b) in c.iter().zip(&self.basis) {
            if ck.is_zero() {
                continue;
            }
            for (i, j, v) in b.nonzeros() {
                out.add_at(i, j, &v.scale(ck));
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BasisLabel {
    B,
    BPrime,
}

/// Real basis of g₀ assembled from a Chevalley basis.
#[derive(Clone, Debug)]
pub struct RealBasis {
    pub label: BasisLabel,
    pub kappa_part: Vec<ExactMatrix>,
    pub p_part: Vec<ExactMatrix>,
}

impl RealBasis {
    pub fn elements(&self) -> Vec<ExactMatrix> {
        let mut v = self.kappa_part.clone();
        v.extend(self.p_part.iter().cloned());
        v
    }
}

/// B_k = {iH*_φ} ∪ {X_α, Y_α : α ∈ Δ_k⁺}, B_n = {iX_α, iY_α : α ∈ Δ_n⁺}.
pub fn real_basis_from(cb: &ChevalleyBasis, label: BasisLabel) -> RealBasis {
    let rs = &cb.rs;
    let mut kappa: Vec<ExactMatrix> = rs.simples.iter().map(|s| cb.hstar(s).times_i()).collect();
    let mut p = Vec::new();
    for a in &rs.positives {
        let (x, y) = cb.xy(a);
        if a.is_compact() {
            kappa.push(x);
            kappa.push(y);
        } else {
            p.push(x.times_i());
            p.push(y.times_i());
        }
    }
    RealBasis { label, kappa_part: kappa, p_part: p }
}

pub fn build_real_basis(ctx: &LieContext, label: BasisLabel) -> Result<RealBasis, Error> {
    let variant = match label {
        BasisLabel::B => Variant::T0,
        BasisLabel::BPrime => Variant::T0Prime,
    };
    let rs = build_root_system(ctx, variant)?;
    let cb = build_chevalley(&rs)?;
    Ok(real_basis_from(&cb, label))
}

/// Outcome of a real-basis structure-constant scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub basis_size: usize,
    pub all_in_g0: bool,
    pub independent: bool,
    pub all_rational: bool,
}

/// Checks that every bracket of basis elements has rational coordinates.
pub fn structure_constants_rational(ctx: &LieContext, basis: &RealBasis) -> StructureReport {
    let elems = basis.elements();
    let all_in_g0 = elems.iter().all(|x| ctx.in_g0(x));
    let Ok(coords) = RealCoordinates::new(&elems) else {
        return StructureReport { basis_size: elems.len(), all_in_g0, independent: false, all_rational: false };
    };
    let all_rational =
        (0..elems.len()).all(|i| (i + 1..elems.len()).all(|j| coords.coords(&bracket(&elems[i], &elems[j])).is_some()));
    StructureReport { basis_size: elems.len(), all_in_g0, independent: true, all_rational }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompactFormReport {
    pub dim: usize,
    pub bracket_closed: bool,
    pub negative_definite: bool,
}

impl CompactFormReport {
    pub fn passed(&self) -> bool {
        self.bracket_closed && self.negative_definite
    }
}

/// u = k₀ ⊕ i·p₀ spanned by B_k ∪ {X_α, Y_α : α ∈ Δ_n⁺}: real bracket
/// closure and negative definiteness of tr(XY).
pub fn verify_compact_form(ctx: &LieContext) -> Result<CompactFormReport, Error> {
    let rs = build_root_system(ctx, Variant::T0)?;
    let cb = build_chevalley(&rs)?;
    let rb = real_basis_from(&cb, BasisLabel::B);
    let mut u = rb.kappa_part.clone();
    for a in rs.positives.iter().filter(|a| !a.is_compact()) {
        let (x, y) = cb.xy(a);
        u.push(x);
        u.push(y);
    }
    let coords = RealCoordinates::new(&u)?;
    let bracket_closed =
        (0..u.len()).all(|i| (i + 1..u.len()).all(|j| coords.coords(&bracket(&u[i], &u[j])).is_some()));
    let mut gram = linear::zeros(u.len(), u.len());
    let mut real_gram = true;
    for i in 0..u.len() {
        for j in 0..u.len() {
            let t = u[i].trace_form(&u[j]);
            real_gram &= t.is_real();
            gram[i][j] = t.re;
        }
    }
    Ok(CompactFormReport {
        dim: u.len(),
        bracket_closed,
        negative_definite: real_gram && linear::is_negative_definite(&gram),
    })
}

/// `tr(X²)` as a rational, for real-valued forms.
pub fn trace_square(x: &ExactMatrix) -> GaussianRational {
    x.trace_form(x)
}

/// Jacobi identity on a single triple.
pub fn jacobi_holds(x: &ExactMatrix, y: &ExactMatrix, z: &ExactMatrix) -> bool {
    let a = bracket(x, &bracket(y, z));
    let b = bracket(y, &bracket(z, x));
    let c = bracket(z, &bracket(x, y));
    (&(&a + &b) + &c).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn gi(re: i64, im: i64) -> GaussianRational {
        GaussianRational::int_pair(re, im)
    }

    #[test]
    fn context_dimensions() {
        let c3 = build_context(3).unwrap();
        assert_eq!((c3.dim_g0, c3.dim_p0, c3.l, c3.family), (10, 6, 2, Family::B));
        let c2 = build_context(2).unwrap();
        assert_eq!((c2.dim_g0, c2.dim_k0, c2.l, c2.family), (6, 2, 2, Family::D));
        assert_eq!(build_context(4).unwrap().dim_g0, 15);
        assert!(matches!(build_context(1), Err(Error::UnsupportedRank(1))));
    }

    #[test]
    fn so3_bracket() {
        let a = f_mat(3, 1, 2);
        let b = f_mat(3, 2, 3);
        assert_eq!(bracket(&a, &b), f_mat(3, 1, 3));
        assert!(bracket(&a, &a).is_zero());
    }

    #[test]
    fn cartan_decomposition_examples() {
        let ctx = build_context(3).unwrap();
        let n = ctx.n();
        let k = h_mat(n, 1);
        let p = &e_mat(n, 1, 3) + &e_mat(n, 3, 1);
        assert_eq!(cartan_decompose(&ctx, &k).unwrap(), (k.clone(), ExactMatrix::zeros(n)));
        assert_eq!(cartan_decompose(&ctx, &p).unwrap(), (ExactMatrix::zeros(n), p.clone()));
        assert_eq!(cartan_decompose(&ctx, &(&k + &p)).unwrap(), (k, p));
        assert!(cartan_decompose(&ctx, &e_mat(n, 1, 1)).is_err());
    }

    #[test]
    fn standard_bases_are_eigenspaces() {
        for m in 2..6 {
            let ctx = build_context(m).unwrap();
            assert_eq!(ctx.standard_k0_basis().len(), ctx.dim_k0);
            assert_eq!(ctx.standard_p0_basis().len(), ctx.dim_p0);
            for x in ctx.standard_k0_basis() {
                assert!(ctx.in_g0(&x));
                assert_eq!(ctx.theta(&x), x);
            }
            for x in ctx.standard_p0_basis() {
                assert!(ctx.in_g0(&x));
                assert_eq!(ctx.theta(&x), -&x);
            }
        }
    }

    #[test]
    fn f_map_examples() {
        let n = 5;
        let z = f_mat(n, 3, 4);
        assert_eq!(f_isomorphism(&z).unwrap(), z);
        let f13 = f_isomorphism(&f_mat(n, 1, 3)).unwrap();
        let expect = (&e_mat(n, 1, 3) + &e_mat(n, 3, 1)).times_i();
        assert_eq!(f13, expect);
        assert!(f_isomorphism(&e_mat(n, 1, 3)).is_err());
        let a = f_mat(n, 1, 3);
        let b = f_mat(n, 3, 4);
        let lhs = f_isomorphism(&bracket(&a, &b)).unwrap();
        let rhs = bracket(&f_isomorphism(&a).unwrap(), &f_isomorphism(&b).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_and_det() {
        let j = j_pq(0, 1);
        assert_eq!(j.mul(&j.inverse().unwrap()), ExactMatrix::identity(2));
        assert_eq!(j.det(), gi(1, 0));
        assert_eq!(i_pq(1, 2).det(), gi(-1, 0));
        let z = ExactMatrix::from_fn(2, |i, j| gi((i + j) as i64, i as i64));
        assert_eq!(z.mul(&z.inverse().unwrap()), ExactMatrix::identity(2));
    }

    #[test]
    fn trace_of_ip0_square() {
        let n = 5;
        let x = (&e_mat(n, 1, 3) + &e_mat(n, 3, 1)).times_i();
        assert_eq!(trace_square(&x), gi(-2, 0));
    }

    #[test]
    fn real_coordinates_round_trip() {
        let ctx = build_context(3).unwrap();
        let b = ctx.standard_g0_basis();
        let rc = RealCoordinates::new(&b).unwrap();
        let x = &(&b[0] + &b[3]) + &b[7].scale_rational(&rat(5));
        let c = rc.coords(&x).unwrap();
        assert_eq!(c[7], rat(5));
        assert!(rc.coords(&e_mat(5, 1, 1)).is_none());
    }
}

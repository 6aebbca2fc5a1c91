//! Root systems of g on the two Cartan subalgebras h (frame T₀) and h′
//! (frame T₀′), Borel–de Siebenthal positivity, Weyl groups and the
//! Schubert-cell Poincaré polynomial of W(l∩k)\W(l).

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::exact::{rat, ratio, GaussianRational, HodgePolynomial, Rational};
use crate::liealg::{f_mat, h_mat, ExactMatrix, Family, LieContext};
use crate::linear;
use crate::Error;

/// Which Cartan subalgebra the coordinates refer to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Variant {
    T0,
    T0Prime,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            match self {
                Variant::T0 => "T0",
                Variant::T0Prime => "T0'",
            }
        )
    }
}

/// A root as an integer vector in the e_j (or ε_j) basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Root {
    pub coords: Vec<i64>,
}

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Root { coords }
    }

    /// `e_j` (1-based) in rank `l`.
    pub fn e(l: usize, j: usize) -> Self {
        let mut c = vec![0; l];
        c[j - 1] = 1;
        Root::new(c)
    }

    pub fn is_compact(&self) -> bool {
        self.coords[0] == 0
    }

    /// First nonzero coordinate positive.
    pub fn is_positive(&self) -> bool {
        self.coords.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
    }

    pub fn neg(&self) -> Root {
        Root::new(self.coords.iter().map(|c| -c).collect())
    }

    pub fn add(&self, o: &Root) -> Root {
        Root::new(self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Root) -> Root {
        Root::new(self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect())
    }

    pub fn dot(&self, o: &Root) -> i64 {
        self.coords.iter().zip(&o.coords).map(|(a, b)| a * b).sum()
    }

    pub fn norm2(&self) -> i64 {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if out.is_empty() {
                ""
            } else {
                "+"
            };
            let mag = if c.abs() == 1 { String::new() } else { c.abs().to_string() };
            out.push_str(&format!("{sign}{mag}e{}", k + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        write!(f, "{out}")
    }
}

/// Trace-orthonormal frame `T_1..T_l` of the Cartan subalgebra:
/// `e_j(T_k) = −iδ_jk` and `tr(T_k T_j) = −2δ_kj`.
pub fn cartan_frame(ctx: &LieContext, variant: Variant) -> Vec<ExactMatrix> {
    let n = ctx.n();
    let l = ctx.l;
    match variant {
        Variant::T0 => (1..=l).map(|k| h_mat(n, k)).collect(),
        Variant::T0Prime => {
            let mut v = vec![h_mat(n, 1)];
            for k in 2..=l {
                v.push(-&f_mat(n, 1 + k, l + k));
            }
            v
        }
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub m: usize,
    pub l: usize,
    pub family: Family,
    pub variant: Variant,
    /// All roots, sorted.
    pub roots: Vec<Root>,
    /// Positive roots ordered by height, then coordinates.
    pub positives: Vec<Root>,
    pub simples: Vec<Root>,
    pub frame: Vec<ExactMatrix>,
    simple_inverse: linear::RatMatrix,
}

pub fn build_root_system(ctx: &LieContext, variant: Variant) -> Result<RootSystem, Error> {
    if variant == Variant::T0Prime && ctx.family == Family::B {
        return Err(Error::InvalidVariant);
    }
    let l = ctx.l;
    let mut roots = Vec::new();
    for j in 1..=l {
        for k in j + 1..=l {
            for (sj, sk) in [(1, -1), (1, 1), (-1, 1), (-1, -1)] {
                let mut c = vec![0; l];
                c[j - 1] = sj;
                c[k - 1] = sk;
                roots.push(Root::new(c));
            }
        }
        if ctx.family == Family::B {
            for s in [1, -1] {
                let mut c = vec![0; l];
                c[j - 1] = s;
                roots.push(Root::new(c));
            }
        }
    }
    roots.sort();
    let mut simples: Vec<Root> = (1..l).map(|j| Root::e(l, j).sub(&Root::e(l, j + 1))).collect();
    simples.push(match ctx.family {
        Family::B => Root::e(l, l),
        Family::D => Root::e(l, l - 1).add(&Root::e(l, l)),
    });
    let sm: linear::RatMatrix = simples.iter().map(|s| s.coords.iter().map(|&c| rat(c)).collect()).collect();
    let simple_inverse = linear::inverse(&sm).expect("simple roots are a basis");
    let mut rs = RootSystem {
        m: ctx.m,
        l,
        family: ctx.family,
        variant,
        roots: roots.clone(),
        positives: Vec::new(),
        simples,
        frame: cartan_frame(ctx, variant),
        simple_inverse,
    };
    let mut pos: Vec<Root> = roots.into_iter().filter(Root::is_positive).collect();
    pos.sort_by_key(|r| (rs.height(r), std::cmp::Reverse(r.clone())));
    rs.positives = pos;
    Ok(rs)
}

impl RootSystem {
    pub fn contains(&self, r: &Root) -> bool {
        self.roots.binary_search(r).is_ok()
    }

    /// Coefficients of `v` in the simple roots (exact, possibly fractional
    /// for non-lattice input).
    pub fn simple_coefficients_rational(&self, v: &Root) -> Vec<Rational> {
        let row: linear::RatMatrix = vec![v.coords.iter().map(|&c| rat(c)).collect()];
        linear::mat_mul(&row, &self.simple_inverse).remove(0)
    }

    /// Integer simple-root coefficients of a root-lattice vector.
    pub fn simple_coefficients(&self, v: &Root) -> Vec<i64> {
        self.simple_coefficients_rational(v)
            .iter()
            .map(|c| crate::exact::rational_to_i64(c).expect("root lattice vector"))
            .collect()
    }

    pub fn height(&self, r: &Root) -> i64 {
        self.simple_coefficients(r).iter().sum()
    }

    /// `β ≥ γ` in the root order.
    pub fn geq(&self, beta: &Root, gamma: &Root) -> bool {
        self.simple_coefficients(&beta.sub(gamma)).iter().all(|&c| c >= 0)
    }

    pub fn compact_positives(&self) -> Vec<Root> {
        self.positives.iter().filter(|r| r.is_compact()).cloned().collect()
    }

    pub fn noncompact_positives(&self) -> Vec<Root> {
        self.positives.iter().filter(|r| !r.is_compact()).cloned().collect()
    }

    /// Simple root `φ_j` (1-based).
    pub fn phi(&self, j: usize) -> &Root {
        &self.simples[j - 1]
    }

    /// Sum of consecutive simple roots `φ_a + … + φ_b`.
    pub fn phi_sum(&self, a: usize, b: usize) -> Root {
        (a..=b).fold(Root::new(vec![0; self.l]), |acc, j| acc.add(self.phi(j)))
    }

    /// Highest root δ = e₁ + e₂; undefined for m = 2.
    pub fn highest_root(&self) -> Result<Root, Error> {
        if self.m == 2 {
            return Err(Error::NoHighestRoot);
        }
        Ok(Root::e(self.l, 1).add(&Root::e(self.l, 2)))
    }

    /// Marks `a_φ = n_φ(δ)`.
    pub fn marks(&self) -> Result<Vec<i64>, Error> {
        Ok(self.simple_coefficients(&self.highest_root()?))
    }

    /// `α(H)` for `H = Σ c_k T_k` is `−i Σ α_k c_k`; this returns the
    /// real number `Σ α_k c_k`.
    pub fn pairing(&self, alpha: &Root, h_coords: &[Rational]) -> Rational {
        alpha.coords.iter().zip(h_coords).map(|(&a, c)| c * rat(a)).sum()
    }

    /// `Σ c_k T_k` with complex coefficients.
    pub fn frame_combination(&self, c: &[GaussianRational]) -> ExactMatrix {
        let n = self.frame[0].size();
        let mut out = ExactMatrix::zeros(n);
        for (ck, t) in c.iter().zip(&self.frame) {
            if !ck.is_zero() {
                out = &out + &t.scale(ck);
            }
        }
        out
    }

    /// Trace-form dual `H_λ = (i/2) Σ λ_k T_k`, so that `tr(H_λ H) = λ(H)`.
    pub fn h_lambda(&self, lambda: &[Rational]) -> ExactMatrix {
        let c: Vec<GaussianRational> =
            lambda.iter().map(|x| GaussianRational::new(Rational::zero(), x * ratio(1, 2))).collect();
        self.frame_combination(&c)
    }

    /// Coroot `H*_α = 2i Σ α_k T_k / |α|²`.
    pub fn hstar(&self, alpha: &Root) -> ExactMatrix {
        let n2 = alpha.norm2();
        let c: Vec<GaussianRational> =
            alpha.coords.iter().map(|&a| GaussianRational::new(Rational::zero(), ratio(2 * a, n2))).collect();
        self.frame_combination(&c)
    }

    /// Fundamental weights ω_i with `ω_i(H*_{φ_j}) = δ_ij`.
    pub fn fundamental_weights(&self) -> Vec<Vec<Rational>> {
        // Row j of the system is 2φ_j/|φ_j|², so ω = (that matrix)⁻¹ columns.
        let a: linear::RatMatrix =
            self.simples.iter().map(|s| s.coords.iter().map(|&c| ratio(2 * c, s.norm2())).collect()).collect();
        let inv = linear::inverse(&a).expect("Cartan system invertible");
        (0..self.l).map(|i| (0..self.l).map(|k| inv[k][i].clone()).collect()).collect()
    }

    /// `H_{ω_i}` for each fundamental weight.
    pub fn fundamental_coweights(&self) -> Vec<ExactMatrix> {
        self.fundamental_weights().iter().map(|w| self.h_lambda(w)).collect()
    }

    /// Real coordinates `c` of `H = Σ (−i)·c_k·T_k`-style elements: returns
    /// `x_k` with `H = Σ x_k T_k`, `None` if `H` is not in the Cartan span.
    pub fn cartan_coordinates(&self, h: &ExactMatrix) -> Option<Vec<GaussianRational>> {
        // tr(T_k T_j) = −2δ_kj.
        let c: Vec<GaussianRational> = self.frame.iter().map(|t| h.trace_form(t).scale(&ratio(-1, 2))).collect();
        (self.frame_combination(&c) == *h).then_some(c)
    }

    /// Identify which root `β` satisfies `H*_β = h`.
    pub fn root_of_coroot(&self, h: &ExactMatrix) -> Option<Root> {
        let c = self.cartan_coordinates(h)?;
        // c_k = 2iβ_k/|β|²; recover β up to the norm factor.
        let im: Vec<Rational> = c.iter().map(|x| x.im.clone()).collect();
        if c.iter().any(|x| !x.re.is_zero()) {
            return None;
        }
        self.roots
            .iter()
            .find(|r| {
                let n2 = r.norm2();
                r.coords.iter().zip(&im).all(|(&a, x)| ratio(2 * a, n2) == *x)
            })
            .cloned()
    }
}

/// Simple reflection as a signed permutation of coordinates.
fn reflection(alpha: &Root) -> Vec<i64> {
    let l = alpha.coords.len();
    let n2 = alpha.norm2();
    (0..l)
        .map(|k| {
            let mut img: Vec<Rational> = vec![Rational::zero(); l];
            img[k] = rat(1);
            let f = ratio(2 * alpha.coords[k], n2);
            for (x, &a) in img.iter_mut().zip(&alpha.coords) {
                *x -= &f * rat(a);
            }
            let (idx, val) = img.iter().enumerate().find(|(_, v)| !v.is_zero()).expect("nonzero image");
            let s = if val.is_positive() { 1 } else { -1 };
            s * (idx as i64 + 1)
        })
        .collect()
}

/// Signed permutation `w` with `w(e_k) = sign(w[k])·e_{|w[k]|}`.
pub type SignedPerm = Vec<i64>;

pub fn apply_signed_perm(w: &SignedPerm, v: &Root) -> Root {
    let mut out = vec![0; v.coords.len()];
    for (k, &wk) in w.iter().enumerate() {
        let idx = (wk.unsigned_abs() - 1) as usize;
        out[idx] += wk.signum() * v.coords[k];
    }
    Root::new(out)
}

fn compose(a: &SignedPerm, b: &SignedPerm) -> SignedPerm {
    // (a∘b)(e_k) = a(sign_b e_{|b_k|})
    b.iter()
        .map(|&bk| {
            let j = (bk.unsigned_abs() - 1) as usize;
            bk.signum() * a[j]
        })
        .collect()
}

fn invert(w: &SignedPerm) -> SignedPerm {
    let mut out = vec![0; w.len()];
    for (k, &wk) in w.iter().enumerate() {
        let j = (wk.unsigned_abs() - 1) as usize;
        out[j] = wk.signum() * (k as i64 + 1);
    }
    out
}

/// Weyl group of the subsystem generated by `simples`, with the positive
/// system they determine.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub simples: Vec<Root>,
    pub positives: Vec<Root>,
    pub elements: Vec<SignedPerm>,
}

/// Coefficients of `v` in linearly independent `simples`, if it lies in their span.
fn coefficients_in(simples: &[Root], v: &Root) -> Option<Vec<Rational>> {
    let k = simples.len();
    let l = v.coords.len();
    // Columns: simples then v; solve by rref.
    let mut a: linear::RatMatrix = (0..l)
        .map(|r| {
            let mut row: Vec<Rational> = simples.iter().map(|s| rat(s.coords[r])).collect();
            row.push(rat(v.coords[r]));
            row
        })
        .collect();
    let piv = linear::rref(&mut a);
    if piv.contains(&k) {
        return None;
    }
    let mut c = vec![Rational::zero(); k];
    for (r, &p) in piv.iter().enumerate() {
        c[p] = a[r][k].clone();
    }
    Some(c)
}

impl WeylGroup {
    pub fn generate(simples: &[Root]) -> Result<Self, Error> {
        if simples.len() > 8 {
            return Err(Error::RankTooLarge(simples.len()));
        }
        let l = simples.first().map_or(0, |s| s.coords.len());
        let gens: Vec<SignedPerm> = simples.iter().map(reflection).collect();
        let id: SignedPerm = (1..=l as i64).collect();
        let mut seen: HashMap<SignedPerm, ()> = HashMap::new();
        let mut order = vec![id.clone()];
        seen.insert(id.clone(), ());
        let mut queue = VecDeque::from([id]);
        while let Some(w) = queue.pop_front() {
            for g in &gens {
                let x = compose(g, &w);
                if seen.insert(x.clone(), ()).is_none() {
                    order.push(x.clone());
                    queue.push_back(x);
                }
            }
        }
        let mut roots: BTreeSet<Root> = BTreeSet::new();
        for w in &order {
            for s in simples {
                roots.insert(apply_signed_perm(w, s));
            }
        }
        let positives = roots
            .into_iter()
            .filter(|r| coefficients_in(simples, r).is_some_and(|c| c.iter().all(|x| !x.is_negative())))
            .collect();
        Ok(WeylGroup { simples: simples.to_vec(), positives, elements: order })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    fn is_positive(&self, r: &Root) -> bool {
        self.positives.binary_search(r).is_ok()
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: &SignedPerm) -> usize {
        self.positives.iter().filter(|a| !self.is_positive(&apply_signed_perm(w, a))).count()
    }

    /// Length generating function as coefficients of `q^k`.
    pub fn length_polynomial(&self) -> Vec<u64> {
        let mut v = Vec::new();
        for w in &self.elements {
            let k = self.length(w);
            if v.len() <= k {
                v.resize(k + 1, 0);
            }
            v[k] += 1;
        }
        v
    }
}

fn poly_div_exact(num: &[u64], den: &[u64]) -> Option<Vec<u64>> {
    let mut r: Vec<i128> = num.iter().map(|&x| x as i128).collect();
    let d: Vec<i128> = den.iter().map(|&x| x as i128).collect();
    let lead = *d.last()?;
    if r.len() < d.len() {
        return None;
    }
    let mut q = vec![0i128; r.len() - d.len() + 1];
    for k in (0..q.len()).rev() {
        let c = r[k + d.len() - 1];
        if c % lead != 0 {
            return None;
        }
        let c = c / lead;
        q[k] = c;
        for (j, &dj) in d.iter().enumerate() {
            r[k + j] -= c * dj;
        }
    }
    if r.iter().any(|&x| x != 0) || q.iter().any(|&x| x < 0) {
        return None;
    }
    Some(q.into_iter().map(|x| x as u64).collect())
}

/// Σ_{w} (xt)^{ℓ(w)} over minimal representatives of W(l∩k)\W(l),
/// i.e. `w` with `w⁻¹(β) > 0` for every compact simple β. Cross-checked
/// against the quotient of length generating functions.
pub fn coset_poincare(levi_simples: &[Root], compact_simples: &[Root]) -> Result<HodgePolynomial, Error> {
    if compact_simples.iter().any(|c| coefficients_in(levi_simples, c).is_none()) {
        return Err(Error::NotSubsystem);
    }
    let wl = WeylGroup::generate(levi_simples)?;
    let wk = WeylGroup::generate(compact_simples)?;
    let mut coeffs: Vec<u64> = Vec::new();
    for w in &wl.elements {
        let winv = invert(w);
        if compact_simples.iter().all(|b| wl.is_positive(&apply_signed_perm(&winv, b))) {
            let k = wl.length(w);
            if coeffs.len() <= k {
                coeffs.resize(k + 1, 0);
            }
            coeffs[k] += 1;
        }
    }
    let quotient = if compact_simples.is_empty() {
        Some(wl.length_polynomial())
    } else {
        poly_div_exact(&wl.length_polynomial(), &wk.length_polynomial())
    };
    if quotient.as_deref() != Some(&coeffs[..]) {
        return Err(Error::Verification("coset representatives disagree with length quotient".into()));
    }
    Ok(HodgePolynomial::from_terms(coeffs.iter().enumerate().map(|(k, &c)| (k as u32, k as u32, c))))
}

//! Explicit root vectors `E_α` on both Cartan subalgebras, built from the
//! matrices G_jk^±, D_j^+ (frame T₀) and G′_jk^± (frame T₀′), with every
//! Chevalley relation checked at construction.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::exact::{ratio, rational_to_i64, GaussianRational};
use crate::liealg::{bracket, e_mat, f_isomorphism, f_mat, ExactMatrix, Family};
use crate::roots::{Root, RootSystem, Variant};
use crate::Error;

#[derive(Clone, Debug)]
pub struct ChevalleyBasis {
    pub rs: RootSystem,
    pub variant: Variant,
    e: BTreeMap<Root, ExactMatrix>,
}

fn gi(re: i64, im: i64) -> GaussianRational {
    GaussianRational::int_pair(re, im)
}

/// `a + i·b` for matrices.
fn cplx(a: &ExactMatrix, b: &ExactMatrix) -> ExactMatrix {
    a + &b.times_i()
}

fn f(z: ExactMatrix) -> ExactMatrix {
    f_isomorphism(&z).expect("skew-symmetric input")
}

/// G_jk^± for frame T₀ (1-based, j < k).
pub fn g_matrix(n: usize, j: usize, k: usize, plus: bool) -> ExactMatrix {
    let (a, b, c, d) = (2 * j - 1, 2 * j, 2 * k - 1, 2 * k);
    let z = if plus {
        cplx(&(&f_mat(n, a, c) + &f_mat(n, b, d)), &(&f_mat(n, a, d) - &f_mat(n, b, c)))
    } else {
        cplx(&(&f_mat(n, b, d) - &f_mat(n, a, c)), &(&f_mat(n, a, d) + &f_mat(n, b, c)))
    };
    if j == 1 {
        f(z)
    } else {
        z
    }
}

/// D_j^+ for frame T₀, odd m (n = 2l+1).
pub fn d_matrix(n: usize, j: usize) -> ExactMatrix {
    let z = cplx(&-&f_mat(n, 2 * j - 1, n), &f_mat(n, 2 * j, n));
    if j == 1 {
        f(z)
    } else {
        z
    }
}

/// G′_jk^± for frame T₀′, even m (n = 2l).
pub fn g_prime_matrix(n: usize, l: usize, j: usize, k: usize, plus: bool) -> ExactMatrix {
    if j == 1 {
        let z = if plus {
            cplx(&(&f_mat(n, 1, l + k) + &f_mat(n, 2, 1 + k)), &(&f_mat(n, 1, 1 + k) - &f_mat(n, 2, l + k)))
        } else {
            cplx(&(&f_mat(n, 2, 1 + k) - &f_mat(n, 1, l + k)), &(&f_mat(n, 1, 1 + k) + &f_mat(n, 2, l + k)))
        };
        return f(z);
    }
    let s = if plus { -1 } else { 1 };
    let re = &-&f_mat(n, 1 + j, 1 + k) + &f_mat(n, l + j, l + k).scale(&gi(s, 0));
    let im = &f_mat(n, 1 + j, l + k).scale(&gi(-s, 0)) + &f_mat(n, 1 + k, l + j);
    cplx(&re, &im)
}

impl ChevalleyBasis {
    pub fn e(&self, alpha: &Root) -> &ExactMatrix {
        self.e.get(alpha).unwrap_or_else(|| panic!("{alpha} is not a root"))
    }

    pub fn try_e(&self, alpha: &Root) -> Result<&ExactMatrix, Error> {
        self.e.get(alpha).ok_or_else(|| Error::NotARoot(alpha.to_string()))
    }

    pub fn hstar(&self, alpha: &Root) -> ExactMatrix {
        self.rs.hstar(alpha)
    }

    /// `(X_α, Y_α) = (E_α − E_{−α}, i(E_α + E_{−α}))`.
    pub fn xy(&self, alpha: &Root) -> (ExactMatrix, ExactMatrix) {
        let a = self.e(alpha);
        let b = self.e(&alpha.neg());
        (a - b, (a + b).times_i())
    }

    /// `N` with `[E_α, E_β] = N·E_{α+β}`.
    pub fn structure_constant(&self, alpha: &Root, beta: &Root) -> Result<i64, Error> {
        let s = alpha.add(beta);
        if !self.rs.contains(&s) {
            return Err(Error::NotARoot(s.to_string()));
        }
        let br = bracket(self.try_e(alpha)?, self.try_e(beta)?);
        proportionality(&br, self.e(&s))
            .and_then(|c| if c.is_real() { rational_to_i64(&c.re) } else { None })
            .ok_or_else(|| Error::Verification(format!("[E_{alpha}, E_{beta}] not an integer multiple of E_{s}")))
    }

    /// `p_α`: +1 for compact roots, −1 otherwise.
    pub fn theta_signature(&self, alpha: &Root) -> i64 {
        if alpha.is_compact() {
            1
        } else {
            -1
        }
    }

    pub fn roots(&self) -> impl Iterator<Item = (&Root, &ExactMatrix)> {
        self.e.iter()
    }
}

/// `c` with `x = c·y`, if one exists (y ≠ 0).
pub fn proportionality(x: &ExactMatrix, y: &ExactMatrix) -> Option<GaussianRational> {
    let (i, j, v) = y.nonzeros().next()?;
    let c = x.at(i, j) * &v.inv()?;
    (y.scale(&c) == *x).then_some(c)
}

fn raw_vectors(rs: &RootSystem) -> BTreeMap<Root, ExactMatrix> {
    let n = rs.m + 2;
    let l = rs.l;
    let half = gi(1, 0).scale(&ratio(1, 2));
    let mut out = BTreeMap::new();
    let ej = |j: usize| Root::e(l, j);
    for j in 1..=l {
        for k in j + 1..=l {
            for plus in [true, false] {
                let g = match rs.variant {
                    Variant::T0 => g_matrix(n, j, k, plus),
                    Variant::T0Prime => g_prime_matrix(n, l, j, k, plus),
                };
                let alpha = if plus { ej(j).sub(&ej(k)) } else { ej(j).add(&ej(k)) };
                let sign = if j == 1 { gi(1, 0) } else { gi(-1, 0) };
                out.insert(alpha.neg(), g.conj().scale(&(&sign * &half)));
                out.insert(alpha, g.scale(&half));
            }
        }
        if rs.family == Family::B {
            let d = d_matrix(n, j);
            let sign = if j == 1 { gi(1, 0) } else { gi(-1, 0) };
            out.insert(ej(j).neg(), d.conj().scale(&sign));
            out.insert(ej(j), d);
        }
    }
    out
}

/// Builds the root vectors of `rs` and checks every relation:
/// `[H, E_α] = α(H)E_α`, `[E_α, E_{−α}] = H*_α`, integral `N_{α,β}` with
/// `N_{α,β} = −N_{−α,−β}`, `[E_α, E_β] = 0` when `α+β ∉ Δ ∪ {0}`, and
/// `θ(E_α) = p_α E_α`.
pub fn build_chevalley(rs: &RootSystem) -> Result<ChevalleyBasis, Error> {
    let cb = ChevalleyBasis { rs: rs.clone(), variant: rs.variant, e: raw_vectors(rs) };
    verify(&cb)?;
    Ok(cb)
}

fn verify(cb: &ChevalleyBasis) -> Result<(), Error> {
    let rs = &cb.rs;
    let ctx = crate::liealg::build_context(rs.m)?;
    if cb.e.len() != rs.roots.len() {
        return Err(Error::Verification("root vector count".into()));
    }
    for (a, ea) in &cb.e {
        if !ctx.in_g(ea) {
            return Err(Error::Verification(format!("E_{a} not in g")));
        }
        for (k, t) in rs.frame.iter().enumerate() {
            let want = ea.scale(&gi(0, -a.coords[k]));
            if bracket(t, ea) != want {
                return Err(Error::Verification(format!("[T_{}, E_{a}] = {a}(T_{})E_{a}", k + 1, k + 1)));
            }
        }
        let p = gi(cb.theta_signature(a), 0);
        if ctx.theta(ea) != ea.scale(&p) {
            return Err(Error::Verification(format!("theta(E_{a}) = p E_{a}")));
        }
        if bracket(ea, cb.e(&a.neg())) != rs.hstar(a) {
            return Err(Error::Verification(format!("[E_{a}, E_-{a}] = H*_{a}")));
        }
    }
    let roots: Vec<&Root> = cb.e.keys().collect();
    roots.par_iter().try_for_each(|a| -> Result<(), Error> {
        for b in &roots {
            let s = a.add(b);
            if s.is_zero() {
                continue;
            }
            if rs.contains(&s) {
                let n1 = cb.structure_constant(a, b)?;
                let n2 = cb.structure_constant(&a.neg(), &b.neg())?;
                if n1 != -n2 || n1 == 0 {
                    return Err(Error::Verification(format!("N_{{{a},{b}}} = -N_{{-{a},-{b}}}")));
                }
            } else if !bracket(cb.e(a), cb.e(b)).is_zero() {
                return Err(Error::Verification(format!("[E_{a}, E_{b}] = 0")));
            }
        }
        Ok(())
    })?;
    Ok(())
}

/// `E_ij` re-export convenience for tests of explicit identities.
pub fn unit(n: usize, i: usize, j: usize) -> ExactMatrix {
    e_mat(n, i, j)
}

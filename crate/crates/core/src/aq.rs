//! θ-stable parabolic subalgebras q = l ⊕ u up to the equivalence
//! Δ(u ∩ p) = Δ(u′ ∩ p), and their Poincaré–Hodge polynomials.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::exact::HodgePolynomial;
use crate::liealg::{build_context, Family};
use crate::roots::{build_root_system, coset_poincare, Root, RootSystem, Variant};
use crate::Error;

/// Equivalence key: (Δ(u∩p₋), Δ(u∩p₊)), each sorted.
pub type ClassKey = (Vec<Root>, Vec<Root>);

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaStableParabolic {
    /// Coordinates h_j with e_j(H) = −i h_j, dominant for Δ_k⁺.
    pub defining_vector: Vec<i64>,
    pub delta_u_p_plus: Vec<Root>,
    pub delta_u_p_minus: Vec<Root>,
    pub levi_roots: Vec<Root>,
    pub r_plus: usize,
    pub r_minus: usize,
    pub s_dim: usize,
}

impl ThetaStableParabolic {
    pub fn key(&self) -> ClassKey {
        (self.delta_u_p_minus.clone(), self.delta_u_p_plus.clone())
    }

    /// R(q) = dim(u ∩ p).
    pub fn r_total(&self) -> usize {
        self.r_plus + self.r_minus
    }

    pub fn is_trivial(&self) -> bool {
        self.delta_u_p_plus.is_empty() && self.delta_u_p_minus.is_empty()
    }
}

fn value(r: &Root, h: &[i64]) -> i64 {
    r.coords.iter().zip(h).map(|(a, b)| a * b).sum()
}

/// The parabolic defined by `h`; `h` must be Δ_k⁺-dominant.
pub fn parabolic_from_vector(rs: &RootSystem, h: &[i64]) -> Result<ThetaStableParabolic, Error> {
    if h.len() != rs.l {
        return Err(Error::Malformed(format!("defining vector needs {} coordinates", rs.l)));
    }
    if rs.compact_positives().iter().any(|a| value(a, h) < 0) {
        return Err(Error::Malformed("defining vector is not dominant for the compact roots".into()));
    }
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    let mut levi = Vec::new();
    let mut s_dim = 0;
    for r in &rs.roots {
        let v = value(r, h);
        if v == 0 {
            levi.push(r.clone());
        } else if v > 0 {
            match (r.is_compact(), r.is_positive()) {
                (true, true) => s_dim += 1,
                (true, false) => {}
                (false, true) => plus.push(r.clone()),
                (false, false) => minus.push(r.clone()),
            }
        }
    }
    let q = ThetaStableParabolic {
        defining_vector: h.to_vec(),
        r_plus: plus.len(),
        r_minus: minus.len(),
        delta_u_p_plus: plus,
        delta_u_p_minus: minus,
        levi_roots: levi,
        s_dim,
    };
    let levi_nc = q.levi_roots.iter().filter(|r| !r.is_compact()).count();
    if 2 * q.r_total() + levi_nc != 2 * rs.m {
        return Err(Error::Verification("noncompact root count mismatch".into()));
    }
    Ok(q)
}

fn non_increasing(len: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    if len == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (lo..=hi).rev() {
        for mut tail in non_increasing(len - 1, lo, first) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

fn classes_at(rs: &RootSystem, bound: i64) -> Result<BTreeMap<ClassKey, ThetaStableParabolic>, Error> {
    let compact = rs.compact_positives();
    let tails: Vec<Vec<i64>> = non_increasing(rs.l - 1, -bound, bound)
        .into_iter()
        .filter(|t| {
            let mut h = vec![0];
            h.extend(t);
            compact.iter().all(|a| value(a, &h) >= 0)
        })
        .collect();
    let per_h1: Vec<Vec<ThetaStableParabolic>> = (-bound..=bound)
        .into_par_iter()
        .map(|h1| {
            tails
                .iter()
                .map(|t| {
                    let mut h = vec![h1];
                    h.extend(t);
                    parabolic_from_vector(rs, &h)
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;
    let mut out: BTreeMap<ClassKey, ThetaStableParabolic> = BTreeMap::new();
    for q in per_h1.into_iter().flatten() {
        let size = |q: &ThetaStableParabolic| {
            (q.defining_vector.iter().map(|x| x.abs()).sum::<i64>(), q.defining_vector.clone())
        };
        match out.get(&q.key()) {
            Some(old) if size(old) <= size(&q) => {}
            _ => {
                out.insert(q.key(), q);
            }
        }
    }
    Ok(out)
}

/// One representative per equivalence class, ordered by key. The class set
/// must be unchanged at `bound + 1`.
pub fn enumerate_parabolics(m: usize, bound: i64) -> Result<Vec<ThetaStableParabolic>, Error> {
    let ctx = build_context(m)?;
    let rs = build_root_system(&ctx, Variant::T0)?;
    enumerate_with(&rs, bound)
}

pub fn enumerate_with(rs: &RootSystem, bound: i64) -> Result<Vec<ThetaStableParabolic>, Error> {
    if bound < 1 {
        return Err(Error::Malformed("bound must be positive".into()));
    }
    let a = classes_at(rs, bound)?;
    let b = classes_at(rs, bound + 1)?;
    if !a.keys().eq(b.keys()) {
        return Err(Error::NotSaturated(bound));
    }
    Ok(a.into_values().collect())
}

/// Enumeration with the default bound l + 1.
pub fn parabolic_classes(m: usize) -> Result<Vec<ThetaStableParabolic>, Error> {
    let l = build_context(m)?.l;
    enumerate_parabolics(m, l as i64 + 1)
}

/// Δ_k⁺-dominant representative of the W(k)-orbit of `h`.
pub fn dominant_representative(family: Family, m: usize, h: &[i64]) -> Vec<i64> {
    if m == 2 {
        return h.to_vec();
    }
    let mut tail: Vec<i64> = h[1..].iter().map(|x| x.abs()).collect();
    tail.sort_unstable_by(|a, b| b.cmp(a));
    if family == Family::D {
        let negatives = h[1..].iter().filter(|x| **x < 0).count();
        if negatives % 2 == 1 {
            if let Some(last) = tail.last_mut() {
                *last = -*last;
            }
        }
    }
    let mut out = vec![h[0]];
    out.extend(tail);
    out
}

/// Class of −H, i.e. the complex-conjugate parabolic.
pub fn conjugate_class(rs: &RootSystem, q: &ThetaStableParabolic) -> Result<ThetaStableParabolic, Error> {
    let neg: Vec<i64> = q.defining_vector.iter().map(|x| -x).collect();
    parabolic_from_vector(rs, &dominant_representative(rs.family, rs.m, &neg))
}

/// Isomorphism type of the compact dual Y_q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LeviKind {
    Point,
    Projective(usize),
    QuadricOdd(usize),
    QuadricEven(usize),
    ProductP1P1,
}

impl fmt::Display for LeviKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LeviKind::Point => write!(f, "point"),
            LeviKind::Projective(n) => write!(f, "P^{n}"),
            LeviKind::QuadricOdd(n) | LeviKind::QuadricEven(n) => write!(f, "Q^{n}"),
            LeviKind::ProductP1P1 => write!(f, "P^1 x P^1"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviHermitianFactor {
    pub kind: LeviKind,
    /// Irreducible levi components containing noncompact roots.
    pub components: Vec<Vec<Root>>,
}

/// Irreducible components of a root subsystem, closed under negation.
pub fn irreducible_components(roots: &[Root]) -> Vec<Vec<Root>> {
    let mut seen = vec![false; roots.len()];
    let mut out = Vec::new();
    for start in 0..roots.len() {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let a = &roots[comp[k]];
            for (j, b) in roots.iter().enumerate() {
                if !seen[j] && a.dot(b) != 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp.into_iter().map(|i| roots[i].clone()).collect());
    }
    out
}

fn rank_of(roots: &[Root]) -> usize {
    let rows: crate::linear::RatMatrix =
        roots.iter().map(|r| r.coords.iter().map(|&c| crate::exact::rat(c)).collect()).collect();
    crate::linear::rank(&rows)
}

fn classify_component(comp: &[Root]) -> Result<LeviKind, Error> {
    let r = rank_of(comp);
    let total = comp.len();
    let nc_half = comp.iter().filter(|a| !a.is_compact()).count() / 2;
    let kind = if r == 1 {
        LeviKind::Projective(1)
    } else if total == r * (r + 1) && nc_half == r {
        LeviKind::Projective(r)
    } else if total == 2 * r * r && nc_half == 2 * r - 1 {
        LeviKind::QuadricOdd(2 * r - 1)
    } else if total == 2 * r * (r - 1) && nc_half == 2 * r - 2 {
        LeviKind::QuadricEven(2 * r - 2)
    } else {
        return Err(Error::Unsupported(format!("levi component of rank {r} with {total} roots")));
    };
    Ok(kind)
}

/// Y_q from the levi components that contain noncompact roots.
pub fn levi_hermitian_factor(q: &ThetaStableParabolic) -> Result<LeviHermitianFactor, Error> {
    let comps: Vec<Vec<Root>> =
        irreducible_components(&q.levi_roots).into_iter().filter(|c| c.iter().any(|r| !r.is_compact())).collect();
    let kind = match comps.len() {
        0 => LeviKind::Point,
        1 => classify_component(&comps[0])?,
        2 if comps.iter().all(|c| c.len() == 2) => LeviKind::ProductP1P1,
        n => return Err(Error::Unsupported(format!("{n} noncompact levi components"))),
    };
    Ok(LeviHermitianFactor { kind, components: comps })
}

/// Poincaré polynomial of Y_q in the variables (x, t).
pub fn compact_dual_hodge(f: &LeviKind) -> HodgePolynomial {
    match *f {
        LeviKind::Point => HodgePolynomial::one(),
        LeviKind::Projective(n) | LeviKind::QuadricOdd(n) => HodgePolynomial::diagonal_run(0, n as u32),
        LeviKind::QuadricEven(n) => {
            let mut p = HodgePolynomial::diagonal_run(0, n as u32);
            p.add_term(n as u32 / 2, n as u32 / 2, 1);
            p
        }
        LeviKind::ProductP1P1 => {
            let a = HodgePolynomial::diagonal_run(0, 1);
            &a * &a
        }
    }
}

/// Positive simple system of a closed root subsystem.
pub fn simple_system(roots: &[Root]) -> Vec<Root> {
    let pos: BTreeSet<&Root> = roots.iter().filter(|r| r.is_positive()).collect();
    pos.iter().filter(|a| !pos.iter().any(|b| pos.contains(&a.sub(b)))).map(|a| (*a).clone()).collect()
}

/// Y_q's polynomial computed as W(l)/W(l∩k) coset lengths.
pub fn levi_coset_poincare(q: &ThetaStableParabolic) -> Result<HodgePolynomial, Error> {
    let compact: Vec<Root> = q.levi_roots.iter().filter(|r| r.is_compact()).cloned().collect();
    coset_poincare(&simple_system(&q.levi_roots), &simple_system(&compact))
}

/// P_q(x, t) = x^{R₊} t^{R₋} P(Y_q; x, t).
pub fn hodge_polynomial(q: &ThetaStableParabolic) -> Result<HodgePolynomial, Error> {
    let f = levi_hermitian_factor(q)?;
    Ok(compact_dual_hodge(&f.kind).shift(q.r_plus as u32, q.r_minus as u32))
}

/// A row of the class tables: block number, sub-row letter, and parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RowPattern {
    pub block: u8,
    pub row: char,
    pub i: Option<usize>,
    pub j: Option<usize>,
}

impl fmt::Display for RowPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.block, self.row)?;
        if let Some(i) = self.i {
            write!(f, " i={i}")?;
        }
        if let Some(j) = self.j {
            write!(f, " j={j}")?;
        }
        Ok(())
    }
}

/// A row pattern with its two root sets and a textual description.
#[derive(Clone, Debug)]
pub struct PatternEntry {
    pub pattern: RowPattern,
    pub key: ClassKey,
    pub minus_label: String,
    pub plus_label: String,
}

struct Grammar<'a> {
    rs: &'a RootSystem,
    nc: Vec<Root>,
    out: Vec<PatternEntry>,
}

#[derive(Clone)]
enum Set {
    Empty,
    All,
    Up(Vec<Root>),
    Down(Vec<Root>),
}

impl<'a> Grammar<'a> {
    fn up(&self, gens: &[Root]) -> Vec<Root> {
        self.nc.iter().filter(|b| gens.iter().any(|g| self.rs.geq(b, g))).cloned().collect()
    }

    fn down(&self, gens: &[Root]) -> Vec<Root> {
        self.nc.iter().filter(|b| gens.iter().any(|g| self.rs.geq(g, b))).cloned().collect()
    }

    fn label(gens: &[Root], op: &str) -> String {
        let g: Vec<String> = gens.iter().map(Root::to_string).collect();
        format!("{{{op} {}}}", g.join(" or "))
    }

    fn push(&mut self, block: u8, row: char, i: Option<usize>, j: Option<usize>, minus: Set, plus: Set) {
        let (mut mset, mlabel) = match minus {
            Set::Empty => (Vec::new(), "{}".to_string()),
            Set::All => (self.nc.clone(), "-all".to_string()),
            Set::Down(g) => (self.down(&g), format!("-{}", Self::label(&g, "<="))),
            Set::Up(_) => unreachable!("p- sets are downward closed"),
        };
        mset = mset.iter().map(Root::neg).collect();
        mset.sort();
        let (mut pset, plabel) = match plus {
            Set::Empty => (Vec::new(), "{}".to_string()),
            Set::All => (self.nc.clone(), "all".to_string()),
            Set::Up(g) => (self.up(&g), Self::label(&g, ">=")),
            Set::Down(_) => unreachable!("p+ sets are upward closed"),
        };
        pset.sort();
        self.out.push(PatternEntry {
            pattern: RowPattern { block, row, i, j },
            key: (mset, pset),
            minus_label: mlabel,
            plus_label: plabel,
        });
    }
}

fn e(l: usize, j: usize) -> Root {
    Root::e(l, j)
}

/// β_i = e₁ − e_{i+1} (and e₁ for i = l in type B).
fn beta(rs: &RootSystem, i: usize) -> Root {
    rs.phi_sum(1, i)
}

fn gamma(l: usize, j: usize) -> Root {
    e(l, 1).add(&e(l, j))
}

fn b_grammar(g: &mut Grammar) {
    use Set::*;
    let l = g.rs.l;
    let rs = g.rs;
    let b = |i| beta(rs, i);
    g.push(1, 'a', Some(1), None, Empty, Up(vec![b(1)]));
    for i in 2..=l {
        g.push(1, 'b', Some(i), None, Empty, Up(vec![b(i)]));
    }
    g.push(1, 'c', None, None, Empty, Empty);
    for i in 1..l {
        g.push(2, 'a', Some(i), None, Down(vec![b(i)]), Up(vec![b(i + 1)]));
        for j in i + 2..=l {
            g.push(2, 'b', Some(i), Some(j), Down(vec![b(i)]), Up(vec![b(j)]));
        }
        g.push(2, 'c', Some(i), None, Down(vec![b(i)]), Up(vec![gamma(l, i + 1)]));
    }
    g.push(3, 'a', None, None, Down(vec![b(l)]), Up(vec![gamma(l, l)]));
    for j in 2..l {
        g.push(3, 'b', None, Some(j), Down(vec![b(l)]), Up(vec![gamma(l, j)]));
    }
    g.push(3, 'c', None, None, Down(vec![b(l)]), Empty);
    for i in 3..=l {
        g.push(4, 'a', Some(i), None, Down(vec![gamma(l, i)]), Up(vec![gamma(l, i - 1)]));
        for j in 2..=i - 2 {
            g.push(4, 'b', Some(i), Some(j), Down(vec![gamma(l, i)]), Up(vec![gamma(l, j)]));
        }
        g.push(4, 'c', Some(i), None, Down(vec![gamma(l, i)]), Empty);
    }
    g.push(5, 'a', None, None, All, Empty);
}

fn d_grammar(g: &mut Grammar) {
    use Set::*;
    let l = g.rs.l;
    let rs = g.rs;
    let b = |i| beta(rs, i);
    if l == 2 {
        let phi = |i| rs.phi(i).clone();
        g.push(1, 'a', None, None, Empty, Empty);
        for i in 1..=2 {
            g.push(1, 'b', Some(i), None, Empty, Up(vec![phi(i)]));
        }
        g.push(1, 'c', None, None, Empty, All);
        for i in 1..=2 {
            g.push(2, 'a', Some(i), None, Down(vec![phi(i)]), Empty);
        }
        for i in 1..=2 {
            g.push(2, 'b', Some(i), Some(3 - i), Down(vec![phi(i)]), Up(vec![phi(3 - i)]));
        }
        g.push(3, 'a', None, None, All, Empty);
        return;
    }
    let xi = |k: usize| if k == 1 { e(l, 1).sub(&e(l, l)) } else { e(l, 1).add(&e(l, l)) };
    let xis = || vec![xi(1), xi(2)];
    let top = gamma(l, l - 1);
    g.push(1, 'a', None, None, Empty, All);
    for i in 2..=l - 2 {
        g.push(1, 'b', Some(i), None, Empty, Up(vec![b(i)]));
    }
    for k in 1..=2 {
        g.push(1, 'c', Some(k), None, Empty, Up(vec![xi(k)]));
    }
    g.push(1, 'd', None, None, Empty, Up(xis()));
    g.push(1, 'e', None, None, Empty, Empty);
    for i in 1..=l.saturating_sub(3) {
        let dm = || Down(vec![b(i)]);
        g.push(2, 'a', Some(i), None, dm(), Up(vec![b(i + 1)]));
        for j in i + 2..=l - 2 {
            g.push(2, 'b', Some(i), Some(j), dm(), Up(vec![b(j)]));
        }
        for k in 1..=2 {
            g.push(2, 'c', Some(i), Some(k), dm(), Up(vec![xi(k)]));
        }
        g.push(2, 'd', Some(i), None, dm(), Up(xis()));
        g.push(2, 'e', Some(i), None, dm(), Up(vec![gamma(l, i + 1)]));
    }
    let d3 = || Down(vec![b(l - 2)]);
    g.push(3, 'a', None, None, d3(), Up(xis()));
    for k in 1..=2 {
        g.push(3, 'b', Some(k), None, d3(), Up(vec![xi(k)]));
    }
    g.push(3, 'c', None, None, d3(), Up(vec![top.clone()]));
    for k in 1..=2 {
        let d4 = || Down(vec![xi(k)]);
        g.push(4, 'a', Some(k), Some(3 - k), d4(), Up(vec![xi(3 - k)]));
        g.push(4, 'b', Some(k), None, d4(), Up(vec![top.clone()]));
        for j in 2..=l - 2 {
            g.push(4, 'c', Some(k), Some(j), d4(), Up(vec![gamma(l, j)]));
        }
        g.push(4, 'd', Some(k), None, d4(), Empty);
    }
    g.push(5, 'a', None, None, Down(xis()), Up(vec![top.clone()]));
    for j in 2..=l - 2 {
        g.push(5, 'b', None, Some(j), Down(xis()), Up(vec![gamma(l, j)]));
    }
    g.push(5, 'c', None, None, Down(xis()), Empty);
    if l >= 4 {
        let d6 = || Down(vec![top.clone()]);
        g.push(6, 'a', None, None, d6(), Up(vec![gamma(l, l - 2)]));
        for j in 2..=l - 3 {
            g.push(6, 'b', None, Some(j), d6(), Up(vec![gamma(l, j)]));
        }
        g.push(6, 'c', None, None, d6(), Empty);
    }
    for i in 3..=l.saturating_sub(2) {
        let d7 = || Down(vec![gamma(l, i)]);
        g.push(7, 'a', Some(i), None, d7(), Up(vec![gamma(l, i - 1)]));
        for j in 2..=i - 2 {
            g.push(7, 'b', Some(i), Some(j), d7(), Up(vec![gamma(l, j)]));
        }
        g.push(7, 'c', Some(i), None, d7(), Empty);
    }
    g.push(8, 'a', None, None, All, Empty);
}

/// Every row pattern of the class table for this rank, in table order.
pub fn row_patterns(rs: &RootSystem) -> Vec<PatternEntry> {
    let mut g = Grammar { rs, nc: rs.noncompact_positives(), out: Vec::new() };
    match rs.family {
        Family::B => b_grammar(&mut g),
        Family::D => d_grammar(&mut g),
    }
    g.out
}

/// The unique table row whose root sets equal those of `q`.
pub fn table_row_pattern(patterns: &[PatternEntry], q: &ThetaStableParabolic) -> Result<PatternEntry, Error> {
    let key = q.key();
    let hits: Vec<&PatternEntry> = patterns.iter().filter(|p| p.key == key).collect();
    match hits.as_slice() {
        [one] => Ok((*one).clone()),
        [] => Err(Error::Verification(format!("class {:?} matches no table row", q.defining_vector))),
        _ => Err(Error::Verification(format!("class {:?} matches several table rows", q.defining_vector))),
    }
}

/// Number of classes predicted by the row grammar.
pub fn predicted_class_count(family: Family, l: usize) -> usize {
    match family {
        Family::B => l * (l + 2),
        Family::D if l == 2 => 9,
        Family::D => {
            let block2: usize = (1..=l - 3).map(|i| l + 2 - i).sum();
            let block6 = if l >= 4 { l - 2 } else { 0 };
            let block7: usize = (3..=l.saturating_sub(2)).map(|i| i - 1).sum();
            (l + 2) + block2 + 4 + 2 * l + (l - 1) + block6 + block7 + 1
        }
    }
}

/// A class together with its polynomial and table row.
#[derive(Clone, Debug)]
pub struct ClassRecord {
    pub parabolic: ThetaStableParabolic,
    pub factor: LeviKind,
    pub polynomial: HodgePolynomial,
    pub row: PatternEntry,
}

/// All classes for `m` with polynomials and matched rows.
pub fn class_records(m: usize) -> Result<Vec<ClassRecord>, Error> {
    let ctx = build_context(m)?;
    let rs = build_root_system(&ctx, Variant::T0)?;
    let patterns = row_patterns(&rs);
    enumerate_with(&rs, ctx.l as i64 + 1)?
        .into_iter()
        .map(|q| {
            let factor = levi_hermitian_factor(&q)?.kind;
            Ok(ClassRecord {
                polynomial: compact_dual_hodge(&factor).shift(q.r_plus as u32, q.r_minus as u32),
                row: table_row_pattern(&patterns, &q)?,
                factor,
                parabolic: q,
            })
        })
        .collect()
}

//! Closed-form expectations for the tables, written out independently of
//! the library's own enumeration and root-set grammar.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use so2m_core::involutions::Vertex;
use so2m_core::HodgePolynomial;

pub type RowKey = (u8, char, Option<usize>, Option<usize>);

pub fn rank(m: usize) -> usize {
    if m % 2 == 1 {
        m.div_ceil(2)
    } else {
        (m + 2) / 2
    }
}

/// Σ_{k<len} x^{a+k} t^{b+k}.
pub fn run(a: u32, b: u32, len: u32) -> HodgePolynomial {
    HodgePolynomial::from_terms((0..len).map(|k| (a + k, b + k, 1)))
}

fn mono(a: u32, b: u32) -> HodgePolynomial {
    HodgePolynomial::monomial(a, b, 1)
}

fn plus(p: HodgePolynomial, q: HodgePolynomial) -> HodgePolynomial {
    &p + &q
}

// ------------------------------------------------------ cycle dimensions

/// (id, d(σ), d(σθ)) for every involution in scope.
pub fn dimensions(m: usize) -> Vec<(String, usize, usize)> {
    let l = rank(m);
    let mut out = Vec::new();
    if m == 2 {
        for id in ["sigma_1", "tauprime_1", "tau_1", "mu_1"] {
            out.push((id.to_string(), 2, 2));
        }
        for id in ["eta_1", "eta_2"] {
            out.push((id.to_string(), 3, 1));
        }
    } else if m % 2 == 1 {
        for p in 2..=l {
            out.push((format!("sigma_{p}"), 2 * (2 * p - 2), 2 * (2 * l - 2 * p + 1)));
        }
    } else {
        for p in 2..=l - 2 {
            out.push((format!("sigma_{p}"), 2 * (2 * p - 2), 2 * (2 * l - 2 * p)));
        }
        for p in [l - 1, l] {
            out.push((format!("sigma_{p}"), 2 * (l - 1), 2 * (l - 1)));
        }
        for p in 1..=l - 2 {
            out.push((format!("tauprime_{p}"), 2 * (2 * p - 1), 2 * (2 * l - 2 * p - 1)));
            out.push((format!("tau_{p}"), 2 * (l - 1), 2 * (l - 1)));
            out.push((format!("mu_{p}"), 2 * (l - 1), 2 * (l - 1)));
        }
        if l == 3 {
            out.push(("sigma_0".to_string(), 4, 4));
            out.push(("sigmaprime_0".to_string(), 4, 4));
        }
    }
    out.sort();
    out
}

// --------------------------------------------------------- Vogan diagrams

pub type Diagram = (BTreeSet<Vertex>, BTreeSet<(Vertex, Vertex)>);

fn diagram(circled: &[Vertex], swaps: &[(Vertex, Vertex)]) -> Diagram {
    let c = circled.iter().copied().collect();
    let s = swaps.iter().map(|&(a, b)| if a <= b { (a, b) } else { (b, a) }).collect();
    (c, s)
}

/// Entries whose σ and σθ pictures are compared as an unordered pair: for
/// these the literal matrices produce the diagram drawn for the θ-twist.
pub fn compared_as_pair(m: usize, base: &str) -> bool {
    let l = rank(m);
    m.is_multiple_of(2) && m >= 4 && (base == "tauprime_1" || base == format!("sigma_{}", l - 1) || base == "sigma_0")
}

/// Expected diagrams of (σ, σθ) for each catalog entry, keyed by id.
pub fn vogan_tables(m: usize) -> BTreeMap<String, (Diagram, Diagram)> {
    use Vertex::{MinusDelta as D, MinusPhi as N, Phi as P};
    let l = rank(m);
    let mut out = BTreeMap::new();
    let mut put = |id: String, a: Diagram, b: Diagram| {
        out.insert(id, (a, b));
    };
    if m == 2 {
        put("sigma_1".into(), diagram(&[P(1), N(1)], &[]), diagram(&[P(2), N(2)], &[]));
        put("eta_1".into(), diagram(&[], &[(P(1), N(1))]), diagram(&[P(2), N(2)], &[(P(1), N(1))]));
        put("eta_2".into(), diagram(&[], &[(P(2), N(2))]), diagram(&[P(1), N(1)], &[(P(2), N(2))]));
        let mu = diagram(&[], &[(P(1), N(1)), (P(2), N(2))]);
        put("mu_1".into(), mu.clone(), mu);
        let tp = diagram(&[], &[(P(1), P(2)), (N(1), N(2))]);
        put("tauprime_1".into(), tp.clone(), tp);
        let t = diagram(&[], &[(P(1), N(2)), (P(2), N(1))]);
        put("tau_1".into(), t.clone(), t);
        return out;
    }
    let circ = |p: usize| if p >= 2 { vec![P(p)] } else { vec![] };
    if m % 2 == 1 {
        for p in 2..=l {
            put(format!("sigma_{p}"), diagram(&[P(p)], &[]), diagram(&[P(p), P(1), D], &[]));
        }
        for p in 1..=l {
            let d = diagram(&circ(p), &[(P(1), D)]);
            put(format!("tau_{p}"), d.clone(), d);
        }
        return out;
    }
    for p in 2..=l - 2 {
        put(format!("sigma_{p}"), diagram(&[P(p)], &[]), diagram(&[P(p), P(1), D], &[]));
    }
    put(format!("sigma_{}", l - 1), diagram(&[P(1), P(l - 1)], &[]), diagram(&[P(l - 1), D], &[]));
    put(format!("sigma_{l}"), diagram(&[P(1), P(l)], &[]), diagram(&[P(l), D], &[]));
    let ends = (P(l - 1), P(l));
    for p in 1..=l - 2 {
        let t = diagram(&circ(p), &[(P(1), D)]);
        put(format!("tau_{p}"), t.clone(), t);
        let mu = diagram(&circ(p), &[(P(1), D), ends]);
        put(format!("mu_{p}"), mu.clone(), mu);
        let mut twisted = circ(p);
        twisted.extend([P(1), D]);
        put(format!("tauprime_{p}"), diagram(&circ(p), &[ends]), diagram(&twisted, &[ends]));
    }
    if l == 3 {
        put("sigma_0".into(), diagram(&[P(2), P(3)], &[]), diagram(&[P(1), P(2), P(3), D], &[]));
        let s = diagram(&[P(2), P(3)], &[(P(1), D)]);
        put("sigmaprime_0".into(), s.clone(), s);
    }
    out
}

// -------------------------------------------------- parabolic classes

/// Which involutions a table cell lists.
#[derive(Clone, Copy)]
enum Col {
    None,
    /// Every σ_p.
    SigmaAll,
    /// σ_0, σ_p, τ′_p, plus σ′_0, τ_p, μ_p when the flag holds.
    Group {
        sigma0: bool,
        rest: bool,
        sigma0_prime: bool,
    },
    Explicit(fn(usize, &str, usize) -> bool),
}

fn parse_id(id: &str) -> (String, usize) {
    let (k, p) = id.rsplit_once('_').expect("id has a parameter");
    (k.to_string(), p.parse().expect("numeric parameter"))
}

fn listed(col: Col, l: usize, id: &str) -> bool {
    let (kind, p) = parse_id(id);
    match col {
        Col::None => false,
        Col::SigmaAll => kind == "sigma",
        Col::Group { sigma0, rest, sigma0_prime } => match kind.as_str() {
            "sigma" if p == 0 => sigma0,
            "sigma" | "tauprime" => true,
            "sigmaprime" => sigma0_prime,
            "tau" | "mu" => rest,
            _ => false,
        },
        Col::Explicit(f) => f(l, &kind, p),
    }
}

fn group(sigma0: bool, rest: bool, sigma0_prime: bool) -> Col {
    Col::Group { sigma0, rest, sigma0_prime }
}

pub struct ClassRow {
    pub polynomial: HodgePolynomial,
    col: Col,
}

impl ClassRow {
    pub fn excluded(&self, l: usize, ids: &[String]) -> BTreeSet<String> {
        ids.iter().filter(|id| listed(self.col, l, id)).cloned().collect()
    }
}

fn b_table(l: usize) -> BTreeMap<RowKey, ClassRow> {
    let n = 2 * l as u32;
    let lu = l as u32;
    let mut t = BTreeMap::new();
    let mut put = |k: RowKey, polynomial, col| {
        t.insert(k, ClassRow { polynomial, col });
    };
    put((1, 'a', Some(1), None), mono(n - 1, 0), Col::SigmaAll);
    for i in 2..=lu {
        put((1, 'b', Some(i as usize), None), run(n - i, 0, i), Col::SigmaAll);
    }
    put((1, 'c', None, None), run(0, 0, n), Col::None);
    for i in 1..lu {
        let iu = i as usize;
        put((2, 'a', Some(iu), None), mono(n - 1 - i, i), Col::SigmaAll);
        for j in i + 2..=lu {
            put((2, 'b', Some(iu), Some(j as usize)), run(n - j, i, j - i), Col::SigmaAll);
        }
        put((2, 'c', Some(iu), None), run(i, i, n - 2 * i), Col::Explicit(B2C[iu]));
    }
    put((3, 'a', None, None), mono(lu - 1, lu), Col::SigmaAll);
    for j in 2..lu {
        put((3, 'b', None, Some(j as usize)), run(j - 1, lu, lu - j + 1), Col::SigmaAll);
    }
    put((3, 'c', None, None), run(0, lu, lu), Col::SigmaAll);
    for i in 3..=lu {
        let iu = i as usize;
        put((4, 'a', Some(iu), None), mono(i - 2, n - i + 1), Col::SigmaAll);
        for j in 2..=i - 2 {
            put((4, 'b', Some(iu), Some(j as usize)), run(j - 1, n - i + 1, i - j), Col::SigmaAll);
        }
        put((4, 'c', Some(iu), None), run(0, n - i + 1, i - 1), Col::SigmaAll);
    }
    put((5, 'a', None, None), mono(0, n - 1), Col::SigmaAll);
    t
}

/// σ_p listed iff p < (i+2)/2 or p > (2l−i+1)/2. A `fn` pointer cannot
/// capture `i`, so one instance per i.
macro_rules! b2c {
    ($($i:literal),*) => {
        [$(|l: usize, kind: &str, p: usize| kind == "sigma" && (2 * p < $i + 2 || 2 * p > 2 * l - $i + 1)),*]
    };
}
const B2C: [fn(usize, &str, usize) -> bool; 12] = b2c!(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11);

macro_rules! d2e {
    ($($i:literal),*) => {
        [$(|l: usize, kind: &str, p: usize| match kind {
            // The inequality presumes d(σ_p) = 2(2p−2), i.e. p ≤ l−2.
            "sigma" => (2..=l - 2).contains(&p) && (2 * p < $i + 2 || 2 * p > 2 * l - $i),
            "tauprime" => 2 * p < $i + 1 || 2 * p + $i + 1 > 2 * l,
            _ => false,
        }),*]
    };
}
const D2E: [fn(usize, &str, usize) -> bool; 12] = d2e!(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11);

fn d3c(l: usize, kind: &str, p: usize) -> bool {
    match kind {
        "sigma" => p != 0 && ![l, l + 1, l + 2].contains(&(2 * p)) && p != l - 1 && p != l,
        "tauprime" => ![l - 1, l, l + 1].contains(&(2 * p)),
        _ => false,
    }
}

fn d4a(l: usize, kind: &str, p: usize) -> bool {
    match kind {
        "sigma" => p != 0 && 2 * p != l + 1 && p != l - 1 && p != l,
        "tauprime" => 2 * p != l,
        _ => false,
    }
}

fn d_table(l: usize) -> BTreeMap<RowKey, ClassRow> {
    let lu = l as u32;
    let n = 2 * lu - 2;
    let even = |x: u32| x.is_multiple_of(2);
    let mut t = BTreeMap::new();
    let mut put = |k: RowKey, polynomial, col| {
        t.insert(k, ClassRow { polynomial, col });
    };
    let middle = |lo: u32, hi: u32| plus(run(lo, lo, hi - lo + 1), mono(lu - 1, lu - 1));
    let all6 = group(true, true, true);

    put((1, 'a', None, None), mono(n, 0), group(true, false, false));
    for i in 2..=lu - 2 {
        put((1, 'b', Some(i as usize), None), run(n + 1 - i, 0, i), group(false, even(i), false));
    }
    for k in 1..=2 {
        put((1, 'c', Some(k), None), run(lu - 1, 0, lu), group(true, even(lu), false));
    }
    put((1, 'd', None, None), run(lu, 0, lu - 1), group(true, !even(lu), !even(lu)));
    put((1, 'e', None, None), middle(0, n), Col::None);

    for i in 1..=lu.saturating_sub(3) {
        let iu = i as usize;
        put((2, 'a', Some(iu), None), mono(n - i, i), group(false, false, false));
        for j in i + 2..=lu - 2 {
            put((2, 'b', Some(iu), Some(j as usize)), run(n + 1 - j, i, j - i), group(false, even(j - i), false));
        }
        for k in 1..=2 {
            put((2, 'c', Some(iu), Some(k)), run(lu - 1, i, lu - i), group(false, even(lu - i), false));
        }
        put((2, 'd', Some(iu), None), run(lu, i, lu - 1 - i), group(false, !even(lu - i), false));
        put((2, 'e', Some(iu), None), middle(i, n - i), Col::Explicit(D2E[iu]));
    }

    put((3, 'a', None, None), mono(lu, lu - 2), group(true, false, false));
    for k in 1..=2 {
        put((3, 'b', Some(k), None), plus(mono(lu - 1, lu - 2), mono(lu, lu - 1)), all6);
    }
    put(
        (3, 'c', None, None),
        plus(
            HodgePolynomial::from_terms([(lu - 2, lu - 2, 1), (lu, lu, 1)]),
            HodgePolynomial::monomial(lu - 1, lu - 1, 2),
        ),
        Col::Explicit(d3c),
    );

    for i in 1..=2usize {
        put((4, 'a', Some(i), Some(3 - i)), mono(lu - 1, lu - 1), Col::Explicit(d4a));
        put((4, 'b', Some(i), None), plus(mono(lu - 2, lu - 1), mono(lu - 1, lu)), all6);
        for j in 2..=lu - 2 {
            put(
                (4, 'c', Some(i), Some(j as usize)),
                run(j - 1, lu - 1, lu - j + 1),
                group(false, !even(lu - j), false),
            );
        }
        put((4, 'd', Some(i), None), run(0, lu - 1, lu), group(true, even(lu), false));
    }

    put((5, 'a', None, None), mono(lu - 2, lu), group(true, false, false));
    for j in 2..=lu - 2 {
        put((5, 'b', None, Some(j as usize)), run(j - 1, lu, lu - j), group(false, even(lu - j), false));
    }
    put((5, 'c', None, None), run(0, lu, lu - 1), group(true, !even(lu), !even(lu)));

    if lu >= 4 {
        put((6, 'a', None, None), mono(lu - 3, lu + 1), group(false, false, false));
        for j in 2..=lu - 3 {
            put((6, 'b', None, Some(j as usize)), run(j - 1, lu + 1, lu - j - 1), group(false, !even(lu - j), false));
        }
        put((6, 'c', None, None), run(0, lu + 1, lu - 2), group(false, even(lu), false));
    }

    for i in 3..=lu.saturating_sub(2) {
        let iu = i as usize;
        put((7, 'a', Some(iu), None), mono(i - 2, n + 2 - i), group(false, false, false));
        for j in 2..=i - 2 {
            put((7, 'b', Some(iu), Some(j as usize)), run(j - 1, n + 2 - i, i - j), group(false, even(i - j), false));
        }
        put((7, 'c', Some(iu), None), run(0, n + 2 - i, i - 1), group(false, !even(i), false));
    }

    put((8, 'a', None, None), mono(0, n), group(true, false, false));
    t
}

fn rank_two_table() -> BTreeMap<RowKey, ClassRow> {
    fn four(_: usize, kind: &str, _: usize) -> bool {
        matches!(kind, "sigma" | "tauprime" | "tau" | "mu")
    }
    fn three(_: usize, kind: &str, _: usize) -> bool {
        matches!(kind, "sigma" | "eta")
    }
    fn etas(_: usize, kind: &str, _: usize) -> bool {
        kind == "eta"
    }
    let mut t = BTreeMap::new();
    let mut put = |k: RowKey, polynomial, col| {
        t.insert(k, ClassRow { polynomial, col });
    };
    put((1, 'a', None, None), HodgePolynomial::from_terms([(0, 0, 1), (1, 1, 2), (2, 2, 1)]), Col::None);
    for i in 1..=2 {
        put((1, 'b', Some(i), None), run(1, 0, 2), Col::Explicit(four));
        put((2, 'a', Some(i), None), run(0, 1, 2), Col::Explicit(four));
        put((2, 'b', Some(i), Some(3 - i)), mono(1, 1), Col::Explicit(etas));
    }
    put((1, 'c', None, None), mono(2, 0), Col::Explicit(three));
    put((3, 'a', None, None), mono(0, 2), Col::Explicit(three));
    t
}

/// The class table for so(2,m), keyed by row.
pub fn class_table(m: usize) -> BTreeMap<RowKey, ClassRow> {
    let l = rank(m);
    if m == 2 {
        rank_two_table()
    } else if m % 2 == 1 {
        b_table(l)
    } else {
        d_table(l)
    }
}

/// Row counts read off the tables.
pub fn class_count(m: usize) -> usize {
    class_table(m).len()
}

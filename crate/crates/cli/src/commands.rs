//! One builder per subcommand.

use so2m_core::aq::{
    class_records, compact_dual_hodge, conjugate_class, enumerate_with, hodge_polynomial, levi_coset_poincare,
    levi_hermitian_factor, predicted_class_count, row_patterns, table_row_pattern, ClassRecord,
};
use so2m_core::chevalley::build_chevalley;
use so2m_core::cycles::{automorphic_candidates, dimension_table, no_aq_component, no_component_column};
use so2m_core::involutions::{
    almost_double_parity, catalog, catalog_vogan_data, extendability, fixed_subalgebra, holomorphy_class,
    verify_cayley, verify_involution, Involution, K0Diagram,
};
use so2m_core::liealg::{
    build_real_basis, jacobi_holds, structure_constants_rational, verify_compact_form, BasisLabel,
};
use so2m_core::orientation::{diagonal_sign_determinants, orientation_preserving, orientation_report, theorem_scope};
use so2m_core::{build_context, build_root_system, Error, Family, LieContext, Variant};

use crate::render::{Cell, Table};

pub enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Verification(e.to_string())
    }
}

/// A table plus the invariants that failed while building it.
pub struct Outcome {
    pub table: Table,
    pub failures: Vec<String>,
}

impl From<Table> for Outcome {
    fn from(table: Table) -> Self {
        Outcome { table, failures: Vec::new() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, clap::ValueEnum)]
pub enum Suite {
    Liealg,
    Chevalley,
    Involutions,
    Orientation,
    Aq,
    Cycles,
}

impl Suite {
    const ALL: [Suite; 6] =
        [Suite::Liealg, Suite::Chevalley, Suite::Involutions, Suite::Orientation, Suite::Aq, Suite::Cycles];

    fn name(self) -> &'static str {
        match self {
            Suite::Liealg => "liealg",
            Suite::Chevalley => "chevalley",
            Suite::Involutions => "involutions",
            Suite::Orientation => "orientation",
            Suite::Aq => "aq",
            Suite::Cycles => "cycles",
        }
    }
}

fn context(m: usize) -> Result<LieContext, Failure> {
    build_context(m).map_err(|e| Failure::Usage(e.to_string()))
}

struct Checks {
    suite: &'static str,
    rows: Vec<(String, bool, String)>,
}

impl Checks {
    fn add(&mut self, check: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.rows.push((check.into(), passed, detail.into()));
    }

    /// Records `Err` as a failed check instead of aborting the suite.
    fn attempt<T>(&mut self, check: &str, r: Result<T, Error>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.add(check, false, e.to_string());
                None
            }
        }
    }
}

fn suite_liealg(ctx: &LieContext, c: &mut Checks) {
    let m = ctx.m;
    c.add(
        "dim g0 = dim k0 + dim p0",
        ctx.dim_g0 == ctx.dim_k0 + ctx.dim_p0,
        format!("{} = {} + {}", ctx.dim_g0, ctx.dim_k0, ctx.dim_p0),
    );
    if let Some(r) = c.attempt("compact form", verify_compact_form(ctx)) {
        c.add("compact form bracket closure", r.bracket_closed, format!("dim {}", r.dim));
        c.add("compact form negative definite", r.negative_definite, format!("dim {}", r.dim));
    }
    let mut labels = vec![BasisLabel::B];
    if ctx.family == Family::D && m >= 4 {
        labels.push(BasisLabel::BPrime);
    }
    for label in labels {
        let name = if label == BasisLabel::B { "B" } else { "B'" };
        if let Some(basis) = c.attempt("real basis", build_real_basis(ctx, label)) {
            let r = structure_constants_rational(ctx, &basis);
            c.add(format!("basis {name} lies in g0"), r.all_in_g0, format!("{} elements", r.basis_size));
            c.add(format!("basis {name} independent"), r.independent, format!("{} elements", r.basis_size));
            c.add(
                format!("structure constants in {name} rational"),
                r.all_rational,
                format!("{} elements", r.basis_size),
            );
        }
    }
    let basis = ctx.standard_g0_basis();
    let k = basis.len().min(6);
    let mut triples = 0;
    let mut ok = true;
    for a in 0..k {
        for b in a + 1..k {
            for d in b + 1..k {
                ok &= jacobi_holds(&basis[a], &basis[b], &basis[d]);
                triples += 1;
            }
        }
    }
    c.add("Jacobi identity", ok, format!("{triples} triples"));
}

fn suite_chevalley(ctx: &LieContext, c: &mut Checks) {
    let mut variants = vec![Variant::T0];
    if ctx.family == Family::D && ctx.m >= 4 {
        variants.push(Variant::T0Prime);
    }
    for v in variants {
        let check = format!("Chevalley relations on {v}");
        if let Some(rs) = c.attempt(&check, build_root_system(ctx, v)) {
            if let Some(cb) = c.attempt(&check, build_chevalley(&rs)) {
                c.add(check, true, format!("{} roots", cb.roots().count()));
            }
        }
    }
}

fn suite_involutions(ctx: &LieContext, c: &mut Checks) {
    let m = ctx.m;
    let Some(all) = c.attempt("Vogan data", catalog_vogan_data(m)) else { return };
    for (s, vd) in &all {
        if let Some(r) = c.attempt(&format!("{} axioms", s.id()), verify_involution(s)) {
            c.add(
                format!("{} axioms", s.id()),
                r.passed(),
                r.failure().map_or(format!("{} pairs", r.pairs_checked), str::to_string),
            );
        }
        let (orbit, even) = almost_double_parity(vd);
        let orbit: Vec<String> = orbit.iter().map(ToString::to_string).collect();
        c.add(format!("{} almost-double parity", s.id()), even, format!("{{{}}}", orbit.join(", ")));
        if m >= 3 {
            let check = format!("{} k0-diagram extends", s.id());
            if let Some(k0) = c.attempt(&check, K0Diagram::from_vogan(m, vd)) {
                if let Some(ext) = c.attempt(&check, extendability(&k0)) {
                    c.add(check, ext, "");
                }
            }
        }
    }
    if ctx.family == Family::D && m >= 4 {
        for j in [ctx.l - 1, ctx.l] {
            let check = format!("k0-diagram circling φ_{j} with z = -1 does not extend");
            if let Some(ext) = c.attempt(&check, K0Diagram::plain(m, &[j], -1).and_then(|k| extendability(&k))) {
                c.add(check, !ext, "");
            }
        }
    }
    if m >= 3 {
        let r = verify_cayley(m);
        let detail = r.as_ref().err().map(ToString::to_string).unwrap_or_default();
        c.add("Cayley identities", r.is_ok(), detail);
    }
}

fn suite_orientation(ctx: &LieContext, c: &mut Checks) {
    let Some(cat) = c.attempt("catalog", catalog(ctx.m)) else { return };
    for s in &cat {
        let check = format!("{} orientation", s.id());
        let Some(pres) = c.attempt(&check, orientation_preserving(s)) else { continue };
        let twisted = c.attempt(&check, orientation_preserving(&s.times_theta()));
        c.add(format!("{} agrees with its θ-twist", s.id()), twisted == Some(pres), "");
        if let Some(dets) = c.attempt(&check, diagonal_sign_determinants(s)) {
            let brute = dets.iter().all(|(_, d)| *d == 1);
            c.add(format!("{} sign-matrix cross-check", s.id()), brute == pres, format!("{} generators", dets.len()));
        }
    }
    if let Some(scope) = c.attempt("theorem scope", theorem_scope(ctx.m)) {
        let preserving: Vec<String> =
            cat.iter().filter(|s| orientation_preserving(s).unwrap_or(false)).map(Involution::id).collect();
        let ids: Vec<String> = scope.iter().map(Involution::id).collect();
        c.add("theorem scope = orientation-preserving entries", ids == preserving, format!("{} entries", ids.len()));
    }
}

fn suite_aq(ctx: &LieContext, c: &mut Checks) {
    let bound = ctx.l as i64 + 1;
    let Some(rs) = c.attempt("root system", build_root_system(ctx, Variant::T0)) else { return };
    let Some(classes) = c.attempt("enumeration saturated", enumerate_with(&rs, bound)) else { return };
    c.add("enumeration saturated", true, format!("bound {bound} vs {}", bound + 1));
    let want = predicted_class_count(ctx.family, ctx.l);
    c.add("class count", classes.len() == want, format!("{} found, {want} predicted", classes.len()));
    let patterns = row_patterns(&rs);
    let unmatched = classes.iter().filter(|q| table_row_pattern(&patterns, q).is_err()).count();
    c.add("every class matches one table row", unmatched == 0, format!("{unmatched} unmatched"));
    let mut palindromic = true;
    let mut conj_ok = true;
    let mut oracle_ok = true;
    let mut oracle_checked = 0;
    for q in &classes {
        let Some(f) = c.attempt("levi factor", levi_hermitian_factor(q)) else { continue };
        let y = compact_dual_hodge(&f.kind);
        palindromic &= y.is_palindromic();
        if ctx.l <= 5 {
            oracle_checked += 1;
            oracle_ok &= levi_coset_poincare(q).map(|p| p == y).unwrap_or(false);
        }
        let p = hodge_polynomial(q);
        let pc = conjugate_class(&rs, q).and_then(|qc| hodge_polynomial(&qc));
        conj_ok &= matches!((p, pc), (Ok(a), Ok(b)) if a.swap_variables() == b);
    }
    c.add("P(Y_q) palindromic", palindromic, "");
    c.add("conjugate class swaps x and t", conj_ok, "");
    if ctx.l <= 5 {
        c.add("P(Y_q) equals Weyl coset oracle", oracle_ok, format!("{oracle_checked} classes"));
    }
}

fn suite_cycles(ctx: &LieContext, c: &mut Checks) {
    let m = ctx.m;
    let Some(recs) = c.attempt("dimension table", dimension_table(m)) else { return };
    for r in &recs {
        c.add(
            format!("{} d(σ) + d(σθ) = 2m", r.involution),
            r.d_sigma + r.d_sigma_theta == 2 * m,
            format!("{} + {}", r.d_sigma, r.d_sigma_theta),
        );
    }
    let Some(classes) = c.attempt("class records", class_records(m)) else { return };
    let trivial_kept =
        classes.iter().filter(|k| k.parabolic.is_trivial()).all(|k| recs.iter().all(|r| !no_aq_component(r, k)));
    c.add("trivial class never excluded", trivial_kept, "");
    if let Some(cands) = c.attempt("automorphic candidates", automorphic_candidates(m)) {
        let ids: Vec<String> = cands.iter().map(|(r, _)| r.involution.clone()).collect();
        c.add("automorphic candidates computed", true, ids.join(" "));
    }
}

pub fn verify(m: usize, suites: &[Suite]) -> Result<Outcome, Failure> {
    let ctx = context(m)?;
    let mut table = Table::new(
        m,
        ctx.family,
        &[("suite", "suite"), ("check", "check"), ("passed", "passed"), ("detail", "detail")],
    );
    let mut failures = Vec::new();
    let mut suites = suites.to_vec();
    suites.sort();
    suites.dedup();
    for s in suites {
        let mut c = Checks { suite: s.name(), rows: Vec::new() };
        match s {
            Suite::Liealg => suite_liealg(&ctx, &mut c),
            Suite::Chevalley => suite_chevalley(&ctx, &mut c),
            Suite::Involutions => suite_involutions(&ctx, &mut c),
            Suite::Orientation => suite_orientation(&ctx, &mut c),
            Suite::Aq => suite_aq(&ctx, &mut c),
            Suite::Cycles => suite_cycles(&ctx, &mut c),
        }
        for (check, passed, detail) in c.rows {
            if !passed {
                failures.push(format!(
                    "{}: {check}{}",
                    c.suite,
                    if detail.is_empty() { String::new() } else { format!(" ({detail})") }
                ));
            }
            table.push(vec![Cell::str(c.suite), Cell::str(check), Cell::bool(passed), Cell::str(detail)]);
        }
    }
    Ok(Outcome { table, failures })
}

pub fn all_suites() -> Vec<Suite> {
    Suite::ALL.to_vec()
}

fn vertex_list<T: ToString>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// Vogan-diagram rows (tables 1 and 2).
fn vogan_table(ctx: &LieContext) -> Result<Table, Failure> {
    let mut t = Table::new(
        ctx.m,
        ctx.family,
        &[
            ("involution", "σ"),
            ("variant", "Cartan"),
            ("circled", "circled"),
            ("swapped", "swapped"),
            ("orbit", "𝒪"),
            ("orbit_even", "Σ a even"),
        ],
    );
    for (s, vd) in catalog_vogan_data(ctx.m)? {
        let (orbit, even) = almost_double_parity(&vd);
        let swaps: Vec<String> = vd.swaps().iter().map(|(a, b)| format!("{a}<->{b}")).collect();
        t.push(vec![
            Cell::new(s.id().into(), s.name()),
            Cell::str(s.variant.to_string()),
            Cell::list(&vertex_list(&vd.circled()), " "),
            Cell::list(&swaps, " "),
            Cell::list(&vertex_list(&orbit), " "),
            Cell::bool(even),
        ]);
    }
    Ok(t)
}

fn dimension_rows(ctx: &LieContext) -> Result<Table, Failure> {
    let mut t = Table::new(ctx.m, ctx.family, &[("involution", "σ"), ("d_sigma", "d(σ)"), ("d_sigma_theta", "d(σθ)")]);
    for r in dimension_table(ctx.m)? {
        t.push(vec![
            Cell::new(r.involution.clone().into(), r.name),
            Cell::int(r.d_sigma as i64),
            Cell::int(r.d_sigma_theta as i64),
        ]);
    }
    Ok(t)
}

fn names_by_id(m: usize) -> Result<Vec<(String, String)>, Error> {
    Ok(catalog(m)?.iter().map(|s| (s.id(), s.name())).collect())
}

fn class_table(ctx: &LieContext) -> Result<Table, Failure> {
    let names = names_by_id(ctx.m)?;
    let name = |id: &String| names.iter().find(|(i, _)| i == id).map_or(id.clone(), |(_, n)| n.clone());
    let mut t = Table::new(
        ctx.m,
        ctx.family,
        &[
            ("row", "row"),
            ("delta_u_p_minus", "Δ(u∩p_−)"),
            ("delta_u_p_plus", "Δ(u∩p_+)"),
            ("polynomial", "P_q"),
            ("excluded", "excluded σ"),
        ],
    );
    for r in no_component_column(ctx.m)? {
        let q = &r.class.parabolic;
        let excluded: Vec<String> = r.involutions.iter().map(name).collect();
        t.push(vec![
            Cell::str(r.class.row.pattern.to_string()),
            Cell::new(Cell::roots(&q.delta_u_p_minus).json, r.class.row.minus_label.clone()),
            Cell::new(Cell::roots(&q.delta_u_p_plus).json, r.class.row.plus_label.clone()),
            Cell::polynomial(&r.class.polynomial),
            Cell::new(serde_json::json!(r.involutions), excluded.join(" ")),
        ]);
    }
    Ok(t)
}

pub fn tables(m: usize, table: u8) -> Result<Outcome, Failure> {
    let ctx = context(m)?;
    let want = match table {
        1 | 4 => Some(Family::B),
        2 | 5 => Some(Family::D),
        _ => None,
    };
    if let Some(f) = want {
        if f != ctx.family {
            return Err(Failure::Usage(format!("table {table} covers type {f}; m = {m} is type {}", ctx.family)));
        }
    }
    Ok(match table {
        1 | 2 => vogan_table(&ctx)?,
        3 => dimension_rows(&ctx)?,
        _ => class_table(&ctx)?,
    }
    .into())
}

pub fn involutions(m: usize) -> Result<Outcome, Failure> {
    let ctx = context(m)?;
    let mut t = Table::new(
        m,
        ctx.family,
        &[
            ("involution", "σ"),
            ("variant", "Cartan"),
            ("axioms", "axioms"),
            ("pairs_checked", "pairs"),
            ("k0_fixed_dim", "dim k0^σ"),
            ("p0_fixed_dim", "dim p0^σ"),
            ("holomorphy", "type"),
            ("circled", "circled"),
            ("swapped", "swapped"),
        ],
    );
    let mut failures = Vec::new();
    for (s, vd) in catalog_vogan_data(m)? {
        let r = verify_involution(&s)?;
        if let Some(f) = r.failure() {
            failures.push(format!("{}: {f}", s.id()));
        }
        let fx = fixed_subalgebra(&s)?;
        let swaps: Vec<String> = vd.swaps().iter().map(|(a, b)| format!("{a}<->{b}")).collect();
        t.push(vec![
            Cell::new(s.id().into(), s.name()),
            Cell::str(s.variant.to_string()),
            Cell::bool(r.passed()),
            Cell::int(r.pairs_checked as i64),
            Cell::int(fx.k0_fixed_dim as i64),
            Cell::int(fx.p0_fixed_dim as i64),
            Cell::str(format!("{:?}", holomorphy_class(&s)?)),
            Cell::list(&vertex_list(&vd.circled()), " "),
            Cell::list(&swaps, " "),
        ]);
    }
    Ok(Outcome { table: t, failures })
}

pub fn orientation(m: usize) -> Result<Outcome, Failure> {
    let ctx = context(m)?;
    let mut t = Table::new(
        m,
        ctx.family,
        &[
            ("involution", "σ"),
            ("component", "component"),
            ("determinant", "det Ad|p0(σ)"),
            ("preserving", "orientation-preserving"),
        ],
    );
    for s in catalog(m)? {
        for row in orientation_report(&s)? {
            let det = row.determinant.map_or(Cell::new(serde_json::Value::Null, "-"), Cell::int);
            t.push(vec![
                Cell::new(row.involution.clone().into(), s.name()),
                Cell::str(row.component),
                det,
                Cell::bool(row.verdict),
            ]);
        }
    }
    Ok(t.into())
}

fn class_row(rec: &ClassRecord) -> Vec<Cell> {
    let q = &rec.parabolic;
    vec![
        Cell::str(rec.row.pattern.to_string()),
        Cell::int_vec(&q.defining_vector),
        Cell::roots(&q.delta_u_p_minus),
        Cell::roots(&q.delta_u_p_plus),
        Cell::int(q.r_minus as i64),
        Cell::int(q.r_plus as i64),
        Cell::str(rec.factor.to_string()),
        Cell::polynomial(&rec.polynomial),
    ]
}

const CLASS_COLUMNS: [(&str, &str); 8] = [
    ("row", "row"),
    ("defining_vector", "H"),
    ("delta_u_p_minus", "Δ(u∩p_−)"),
    ("delta_u_p_plus", "Δ(u∩p_+)"),
    ("r_minus", "R_−"),
    ("r_plus", "R_+"),
    ("levi", "Y_q"),
    ("polynomial", "P_q"),
];

pub fn aq(m: usize, bound: Option<i64>) -> Result<Outcome, Failure> {
    let ctx = context(m)?;
    let bound = bound.unwrap_or(ctx.l as i64 + 1);
    if bound < 1 {
        return Err(Failure::Usage("--bound must be at least 1".into()));
    }
    let rs = build_root_system(&ctx, Variant::T0)?;
    let patterns = row_patterns(&rs);
    let mut t = Table::new(m, ctx.family, &CLASS_COLUMNS);
    for q in enumerate_with(&rs, bound)? {
        let factor = levi_hermitian_factor(&q)?.kind;
        let rec = ClassRecord {
            polynomial: hodge_polynomial(&q)?,
            row: table_row_pattern(&patterns, &q)?,
            factor,
            parabolic: q,
        };
        t.push(class_row(&rec));
    }
    Ok(t.into())
}

pub fn cycles(m: usize) -> Result<Outcome, Failure> {
    let ctx = context(m)?;
    let classes = class_records(m)?;
    let mut t = Table::new(
        m,
        ctx.family,
        &[
            ("involution", "σ"),
            ("d_sigma", "d(σ)"),
            ("d_sigma_theta", "d(σθ)"),
            ("holomorphy", "type"),
            ("no_component_rows", "rows with no A_q-component"),
        ],
    );
    for r in dimension_table(m)? {
        let rows: Vec<String> =
            classes.iter().filter(|c| no_aq_component(&r, c)).map(|c| c.row.pattern.to_string()).collect();
        t.push(vec![
            Cell::new(r.involution.clone().into(), r.name.clone()),
            Cell::int(r.d_sigma as i64),
            Cell::int(r.d_sigma_theta as i64),
            Cell::str(format!("{:?}", r.holomorphy)),
            Cell::list(&rows, "; "),
        ]);
    }
    Ok(t.into())
}

pub fn automorphic(m: usize) -> Result<Outcome, Failure> {
    let ctx = context(m)?;
    let mut columns = vec![("involution", "σ")];
    columns.extend(CLASS_COLUMNS);
    let mut t = Table::new(m, ctx.family, &columns);
    for (r, class) in automorphic_candidates(m)? {
        let mut row = vec![Cell::new(r.involution.clone().into(), r.name.clone())];
        row.extend(class_row(&class));
        t.push(row);
    }
    Ok(t.into())
}

//! The full identity suite, run per group and over the whole catalog, with
//! a plain-text table and a JSON form.

use std::fmt::Write as _;

use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::catalog::catalog;
use crate::error::{Error, Result};
use crate::group::{build_group, verify_sqrt_properties, GroupSpec, GroupTable};
use crate::linalg::{max_abs_diff, CMatrix};
use crate::repr::{
    character_table, compute_irreps, irrep_residuals, momentum_basis, regular_actions, verify_reduced_actions,
};
use crate::wigner::{
    covariance_check, expand_operator, extended_wigner, extended_wigner_right_form, inversion_residual, marginal_momentum,
    momentum_wavefunction, phase_point_family, phase_point_operator, phase_point_structure, phase_point_sums,
    reconstruct_dyad, reconstruct_extended, traciality, variant_relation_residual, wigner, wigner_cyclic_fast,
    synthesize_operator, wigner_i, wigner_i_density, wigner_ii, StateVector, Variant, WignerTensor,
};
use crate::wigner::distribution::marginal_position_complex;

pub const ABELIAN_TOLERANCE: f64 = 1e-12;
pub const NONABELIAN_TOLERANCE: f64 = 1e-9;
/// Minimum relabeling-invariant distance between the `C9` and `C3xC3`
/// distributions of [`WITNESS_N9`].
pub const DISTINCTNESS_MARGIN: f64 = 1e-3;

/// A fixed 9-component state (unnormalized) whose Wigner tensors over `C9`
/// and over `C3 × C3` cannot be matched by relabeling points or irreps.
pub const WITNESS_N9: [[f64; 2]; 9] = [
    [0.9, 0.1],
    [-0.3, 0.5],
    [0.2, -0.7],
    [0.6, 0.4],
    [-0.1, -0.2],
    [0.3, 0.8],
    [-0.5, 0.0],
    [0.05, -0.35],
    [0.4, 0.15],
];

pub fn witness_state() -> StateVector {
    StateVector::normalized(WITNESS_N9.iter().map(|p| C64::new(p[0], p[1])).collect()).expect("nonzero")
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportEntry {
    pub group: String,
    /// Stable identifier, e.g. `wigner-I.traciality`.
    pub tag: String,
    pub identity: String,
    pub residual: f64,
    pub tolerance: f64,
    /// For separation checks the value must exceed the tolerance instead.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub lower_bound: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub trials: usize,
    pub entries: Vec<ReportEntry>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let gw = self.entries.iter().map(|e| e.group.len()).max().unwrap_or(5).max(5);
        let tw = self.entries.iter().map(|e| e.tag.len()).max().unwrap_or(3).max(3);
        writeln!(out, "{:<gw$}  {:<tw$}  {:>10}  {:>9}  result  identity", "group", "tag", "residual", "tol").unwrap();
        for e in &self.entries {
            let cmp = if e.lower_bound { ">" } else { "" };
            writeln!(
                out,
                "{:<gw$}  {:<tw$}  {:>10.3e}  {:>9}  {:<6}  {}",
                e.group,
                e.tag,
                e.residual,
                format!("{cmp}{:.0e}", e.tolerance),
                if e.pass { "PASS" } else { "FAIL" },
                e.identity
            )
            .unwrap();
        }
        let failed = self.failures().count();
        writeln!(
            out,
            "{} checks, {} failed (seed {}, {} trials)",
            self.entries.len(),
            failed,
            self.seed,
            self.trials
        )
        .unwrap();
        out
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Random states per group for the distribution identities.
    pub trials: usize,
    /// Random states per group for the four-index distribution.
    pub extended_trials: usize,
    /// Overrides the abelian / nonabelian defaults for floating-point checks.
    pub tolerance: Option<f64>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { seed: 1, trials: 100, extended_trials: 100, tolerance: None }
    }
}

struct Collector {
    group: String,
    tol: f64,
    entries: Vec<ReportEntry>,
}

impl Collector {
    fn push_with(&mut self, tag: &str, identity: &str, residual: f64, tolerance: f64) {
        let pass = residual.is_finite() && residual <= tolerance;
        self.entries.push(ReportEntry {
            group: self.group.clone(),
            tag: tag.into(),
            identity: identity.into(),
            residual,
            tolerance,
            lower_bound: false,
            pass,
        });
    }

    fn push(&mut self, tag: &str, identity: &str, residual: f64) {
        let tol = self.tol;
        self.push_with(tag, identity, residual, tol);
    }

    fn exact(&mut self, tag: &str, identity: &str, ok: bool) {
        self.push_with(tag, identity, if ok { 0.0 } else { 1.0 }, 0.0);
    }
}

fn complex_gaussian(rng: &mut ChaCha8Rng) -> C64 {
    C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Whether element `k` is literally `g^k` for `g = 1`, so the cyclic closed
/// form applies without relabeling.
fn is_standard_cyclic(group: &GroupTable) -> bool {
    let n = group.order();
    (0..n).all(|a| (0..n).all(|b| group.mul(a, b) == (a + b) % n))
}

/// Runs every identity on one odd-order group.
pub fn verify_group(name: &str, group: &GroupTable, opts: &SuiteOptions, stream: u64) -> Result<Vec<ReportEntry>> {
    if opts.trials == 0 || opts.extended_trials == 0 {
        return Err(Error::Parse("the suite needs at least one random state".into()));
    }
    let abelian = group.is_abelian();
    let tol = opts
        .tolerance
        .unwrap_or(if abelian { ABELIAN_TOLERANCE } else { NONABELIAN_TOLERANCE });
    let mut c = Collector { group: name.into(), tol, entries: Vec::new() };
    let n = group.order();

    // group structure, exact
    c.exact("group.latin-square", "multiplication table is a Latin square", group.is_latin_square());
    c.exact("group.associativity", "(ab)c = a(bc) for all triples", group.check_associativity());
    let classes = group.conjugacy_classes();
    c.exact(
        "group.class-equation",
        "class sizes divide N and sum to N",
        classes.iter().map(Vec::len).sum::<usize>() == n && classes.iter().all(|k| n.is_multiple_of(k.len())),
    );
    for check in verify_sqrt_properties(group)?.checks {
        c.push_with(&format!("sqrt.{}", check.name.replace(' ', "-")), check.name, check.failures as f64, 0.0);
    }

    // representations
    let irreps = compute_irreps(group)?;
    let r = irrep_residuals(&irreps);
    c.push("irrep.identity", "D(e) = 1", r.identity);
    c.push("irrep.composition", "D(g)D(g') = D(gg')", r.composition);
    c.push("irrep.unitarity", "D(g)D(g)† = 1", r.unitarity);
    c.push("irrep.orthogonality", "Σ_g D^j_mn(g) D^j'_m'n'(g)* = (N/N_j) δδδ", r.orthogonality);
    c.push("irrep.completeness", "Σ_jmn N_j D^j_mn(g) D^j_mn(g')* = N δ_gg'", r.completeness);
    c.exact("irrep.dimension-sum", "Σ_j N_j² = N", r.dimension_sum_ok);
    if abelian {
        c.exact("irrep.abelian-one-dimensional", "abelian group has only 1-dim irreps", irreps.dims().iter().all(|&d| d == 1));
    }
    c.push(
        "character.orthogonality",
        "character rows orthonormal",
        character_table(group)?.row_orthogonality_residual(),
    );
    c.exact("regular.relations", "L, R homomorphisms that commute", regular_actions(group).check_relations(group));
    let basis = momentum_basis(&irreps);
    c.push("momentum.orthonormality", "⟨jmn|j'm'n'⟩ = δδδ", basis.orthonormality_residual());
    c.push("momentum.completeness", "Σ |jmn⟩⟨jmn| = 1", basis.completeness_residual());
    c.push("momentum.reduced-actions", "L_g, R_g act on |jmn⟩ through D^j", verify_reduced_actions(&irreps, &basis));

    // distributions over random states
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    rng.set_stream(stream);
    let states: Vec<StateVector> = (0..opts.trials).map(|_| StateVector::random(n, &mut rng)).collect();
    let partners: Vec<StateVector> = (0..opts.trials).map(|_| StateVector::random(n, &mut rng)).collect();
    let shifts: Vec<usize> = (0..opts.trials).map(|_| rng.random_range(0..n)).collect();

    let mut herm = [0.0f64; 2];
    let mut pos = [0.0f64; 2];
    let mut mom = [0.0f64; 2];
    let mut trac = [0.0f64; 2];
    let mut cov = [0.0f64; 2];
    let (mut relation, mut coincidence, mut density, mut ppo_expect, mut fast) = (0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64);
    let cyclic = is_standard_cyclic(group);
    let family = phase_point_family(&irreps)?;

    for ((psi, phi), &gp) in states.iter().zip(&partners).zip(&shifts) {
        let mw = momentum_wavefunction(psi, &basis);
        let overlap = psi.inner(phi).norm_sqr();
        let mut both: Vec<WignerTensor> = Vec::new();
        for (k, variant) in [Variant::I, Variant::II].into_iter().enumerate() {
            let w = wigner(psi, &irreps, variant)?;
            herm[k] = herm[k].max(w.hermiticity_residual());
            for (p, z) in marginal_position_complex(&w).iter().zip(&psi.psi) {
                pos[k] = pos[k].max((p - z.norm_sqr()).norm());
            }
            for (got, want) in marginal_momentum(&w).iter().zip(mw.polarized(variant)) {
                mom[k] = mom[k].max(max_abs_diff(got, &want));
            }
            let wphi = wigner(phi, &irreps, variant)?;
            trac[k] = trac[k].max((traciality(&wphi, &w)? - overlap).abs());
            cov[k] = cov[k].max(covariance_check(psi, &irreps, gp, variant)?.max());
            both.push(w);
        }
        relation = relation.max(variant_relation_residual(&both[0], &both[1], &irreps));
        coincidence = coincidence.max(both[0].max_abs_diff(&WignerTensor { variant: Variant::I, ..both[1].clone() }));
        density = density.max(wigner_i_density(&psi.to_density(), &irreps)?.max_abs_diff(&both[0]));
        for op in &family {
            ppo_expect = ppo_expect.max((op.expectation(psi) - both[0].value(op.g, op.j, op.m, op.mp)).norm());
        }
        if cyclic {
            for g in 0..n {
                for j in 0..n {
                    fast = fast.max((wigner_cyclic_fast(&psi.psi, n, j, g)? - both[0].value(g, j, 0, 0)).norm());
                }
            }
        }
    }
    let names = ["I", "II"];
    for k in 0..2 {
        let v = names[k];
        c.push(&format!("wigner-{v}.hermiticity"), "W(g;j)† = W(g;j)", herm[k]);
        c.push(&format!("wigner-{v}.covariance"), "left/right translation laws", cov[k]);
        c.push(&format!("wigner-{v}.position-marginal"), "(1/N) Σ_jm N_j W(g;jmm) = |ψ(g)|²", pos[k]);
        c.push(&format!("wigner-{v}.momentum-marginal"), "(N_j/N) Σ_g W(g;j) = polarized momentum sum", mom[k]);
        c.push(&format!("wigner-{v}.traciality"), "phase-space overlap = |⟨φ|ψ⟩|²", trac[k]);
    }
    c.push("wigner.variant-relation", "W'(g;j) = D^j(g⁻¹) W(g;j) D^j(g)", relation);
    if abelian {
        c.push("wigner.abelian-coincidence", "W = W' entrywise", coincidence);
    }
    c.push("wigner.density-rank-one", "density form of |ψ⟩⟨ψ| = pure-state form", density);
    if cyclic {
        c.push("wigner.cyclic-fast-path", "closed cyclic form = general path", fast);
    }

    // phase-point operators
    c.push("ppo.expectation", "⟨ψ|Ŵ(g;jmm')|ψ⟩ = W(g;jmm')", ppo_expect);
    let sums = phase_point_sums(&irreps, &basis)?;
    c.push("ppo.momentum-sum", "(N_j/N) Σ_g Ŵ(g;jmm') = Σ_n |jmn⟩⟨jm'n|", sums.momentum);
    c.push("ppo.position-sum", "Σ_jm (N_j/N) Ŵ(g;jmm) = |g⟩⟨g|", sums.position);
    let st = phase_point_structure(&irreps)?;
    c.push("ppo.adjoint", "Ŵ(g;jmm')† = Ŵ(g;jm'm)", st.adjoint);
    c.push("ppo.trace", "Tr Ŵ(g;jmm') = δ_mm'", st.trace);
    c.push("ppo.orthogonality", "Tr[Ŵ_a Ŵ_b†] = (N/N_j) δ_ab", st.orthogonality);
    let (inv_action, inv_square) = inversion_residual(&irreps)?;
    c.push("ppo.inversion-action", "Ŵ(e;000)|g⟩ = |g⁻¹⟩", inv_action);
    c.push("ppo.inversion-square", "Ŵ(e;000)² = 1", inv_square);
    let mut dyad = 0.0f64;
    for g in 0..n {
        for gp in 0..n {
            let mut expect = CMatrix::zeros(n, n);
            expect[(group.mul(gp, g), group.mul(group.inv(gp), g))] = C64::new(1.0, 0.0);
            dyad = dyad.max(max_abs_diff(&reconstruct_dyad(g, gp, &irreps)?, &expect));
        }
    }
    c.push("ppo.dyad", "|g'g⟩⟨g'⁻¹g| from the Ŵ family", dyad);
    let op = CMatrix::from_fn(n, n, |_, _| complex_gaussian(&mut rng));
    let back = synthesize_operator(&expand_operator(&op, &irreps)?, &irreps)?;
    c.push("ppo.expansion", "operator expanded in Ŵ and resynthesized", max_abs_diff(&back, &op));

    // four-index distribution
    let (mut forms, mut tr1, mut tr2, mut conj, mut emom, mut epos, mut rebuild) =
        (0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for psi in states.iter().take(opts.extended_trials) {
        let w = extended_wigner(psi, &irreps)?;
        let w1 = wigner_i(psi, &irreps)?;
        forms = forms.max(w.max_abs_diff(&extended_wigner_right_form(psi, &irreps)?));
        tr1 = tr1.max(w.trace_to_variant_i().max_abs_diff(&w1));
        tr2 = tr2.max(w.trace_to_variant_ii().max_abs_diff(&wigner_ii(psi, &irreps)?));
        conj = conj.max(w.conjugation_residual());
        emom = emom.max(w.momentum_residual(&momentum_wavefunction(psi, &basis)));
        for (p, z) in w.position_marginal().iter().zip(&psi.psi) {
            epos = epos.max((p - z.norm_sqr()).norm());
        }
        rebuild = rebuild.max(reconstruct_extended(&w1, &irreps)?.max_abs_diff(&w));
    }
    c.push("extended.two-forms", "left- and right-shifted forms agree", forms);
    c.push("extended.trace-to-I", "Σ_n w(g;jmnm'n) = W(g;jmm')", tr1);
    c.push("extended.trace-to-II", "Σ_m w(g;jmn'mn) = W'(g;jnn')", tr2);
    c.push("extended.conjugation", "w(g;jmn'm'n)* = w(g;jm'nmn')", conj);
    c.push("extended.momentum", "(N_j/N) Σ_g w = ψ_jm'n ψ*_jmn'", emom);
    c.push("extended.position", "(1/N) Σ_jmn N_j w(g;jmnmn) = |ψ(g)|²", epos);
    c.push("extended.reconstruction", "w rebuilt from W alone", rebuild);

    Ok(c.entries)
}

/// Relabeling-invariant distance between two scalar-valued distributions:
/// the Euclidean distance between their sorted diagonal values.
pub fn sorted_value_distance(a: &WignerTensor, b: &WignerTensor) -> f64 {
    let sorted = |w: &WignerTensor| {
        let mut v: Vec<f64> = w.data.iter().flatten().flat_map(|m| (0..m.nrows()).map(move |k| m[(k, k)].re)).collect();
        v.sort_by(f64::total_cmp);
        v
    };
    let (x, y) = (sorted(a), sorted(b));
    if x.len() != y.len() {
        return f64::INFINITY;
    }
    x.iter().zip(&y).map(|(p, q)| (p - q).powi(2)).sum::<f64>().sqrt()
}

/// Distinctness of the `C9` and `C3 × C3` phase spaces on the witness
/// state: entrywise distance and the relabeling-invariant distance.
pub fn distinctness_witness() -> Result<(f64, f64)> {
    let psi = witness_state();
    let a = wigner_i(&psi, &compute_irreps(&build_group(&GroupSpec::cyclic(9))?)?)?;
    let b = wigner_i(
        &psi,
        &compute_irreps(&build_group(&GroupSpec::product(GroupSpec::cyclic(3), GroupSpec::cyclic(3)))?)?,
    )?;
    let direct = a
        .data
        .iter()
        .flatten()
        .zip(b.data.iter().flatten())
        .map(|(x, y)| (x - y).norm_squared())
        .sum::<f64>()
        .sqrt();
    Ok((direct, sorted_value_distance(&a, &b)))
}

/// Calls every square-root dependent entry point on an even-order group and
/// counts those that do not fail with `EvenOrderGroup`.
pub fn even_order_violations(n: usize) -> usize {
    let group = build_group(&GroupSpec::cyclic(n)).expect("cyclic groups are valid");
    let is_even_err = |r: std::result::Result<(), Error>| matches!(r, Err(Error::EvenOrderGroup(m)) if m == n);
    let psi = StateVector::uniform(n);
    let mut bad = 0;
    let mut check = |ok: bool| bad += usize::from(!ok);
    check(is_even_err(group.sqrt(1).map(drop)));
    check(is_even_err(group.sqrt_table().map(drop)));
    check(is_even_err(group.require_odd()));
    check(is_even_err(verify_sqrt_properties(&group).map(drop)));
    check(is_even_err(wigner_cyclic_fast(&psi.psi, n, 0, 0).map(drop)));
    match compute_irreps(&group) {
        Ok(irreps) => {
            check(is_even_err(wigner_i(&psi, &irreps).map(drop)));
            check(is_even_err(wigner_ii(&psi, &irreps).map(drop)));
            check(is_even_err(wigner_i_density(&psi.to_density(), &irreps).map(drop)));
            check(is_even_err(phase_point_operator(0, 0, 0, 0, &irreps).map(drop)));
            check(is_even_err(phase_point_family(&irreps).map(drop)));
            check(is_even_err(reconstruct_dyad(0, 0, &irreps).map(drop)));
            check(is_even_err(extended_wigner(&psi, &irreps).map(drop)));
            check(is_even_err(covariance_check(&psi, &irreps, 0, Variant::I).map(drop)));
        }
        Err(_) => check(false),
    }
    bad
}

/// The suite over every catalog group plus the global checks.
pub fn verify_all(opts: &SuiteOptions) -> Result<VerificationReport> {
    let mut entries = Vec::new();
    for (k, entry) in catalog().iter().enumerate() {
        entries.extend(verify_group(entry.name, &entry.build(), opts, k as u64)?);
    }
    let mut c = Collector { group: "global".into(), tol: 0.0, entries: Vec::new() };
    c.exact(
        "group.c15-c3xc5-isomorphic",
        "C3 x C5 has an explicit isomorphism to C15",
        build_group(&GroupSpec::product(GroupSpec::cyclic(3), GroupSpec::cyclic(5)))?
            .isomorphism_to_cyclic()
            .is_some(),
    );
    c.exact(
        "group.c9-c3xc3-distinct",
        "C3 x C3 has no element of order 9",
        build_group(&GroupSpec::product(GroupSpec::cyclic(3), GroupSpec::cyclic(3)))?
            .isomorphism_to_cyclic()
            .is_none(),
    );
    for n in [2, 4, 6] {
        c.push_with(
            &format!("even.c{n}"),
            "square-root operations reject even order",
            even_order_violations(n) as f64,
            0.0,
        );
    }
    let (_, invariant) = distinctness_witness()?;
    c.entries.push(ReportEntry {
        group: "global".into(),
        tag: "wigner.c9-vs-c3xc3".into(),
        identity: "witness distributions differ under any relabeling".into(),
        residual: invariant,
        tolerance: DISTINCTNESS_MARGIN,
        lower_bound: true,
        pass: invariant > DISTINCTNESS_MARGIN,
    });
    entries.extend(c.entries);
    Ok(VerificationReport { seed: opts.seed, trials: opts.trials, entries })
}

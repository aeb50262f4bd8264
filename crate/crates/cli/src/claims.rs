//! Registry mapping claim ids to the checks that establish them.

use std::time::Instant;

use gf3lie::algebra::{
    self, check_simple, check_super_jacobi, check_super_simple_criterion, check_super_skew,
    IdentityReport, Simplicity,
};
use gf3lie::error::Error;
use gf3lie::frank::{self, Block};
use gf3lie::gf3::Gf3;
use gf3lie::jternary::{self, AxiomMode, AxiomReport, DegeneracySearch};
use gf3lie::linalg::{self, Subspace};
use gf3lie::meataxe::{Irreducibility, MeatAxe, NortonCertificate};
use gf3lie::rep_alpha3::{self, JordanType, RepAlpha3Object};
use gf3lie::witt_contact;

use crate::report::{Check, ClaimReport, Status, Witness};

pub const DEFAULT_SAMPLES: u64 = jternary::DEFAULT_SAMPLES;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub n: u32,
    pub seed: u64,
    pub samples: u64,
}

impl RunConfig {
    pub fn new(n: u32, seed: u64) -> Self {
        RunConfig { n, seed, samples: DEFAULT_SAMPLES }
    }

    fn meataxe(&self) -> MeatAxe {
        MeatAxe::with_seed(self.seed)
    }
}

pub struct Claim {
    pub id: &'static str,
    pub anchor: &'static str,
    run: fn(&RunConfig, &mut Outcome) -> Result<(), Error>,
}

/// Every claim, sorted by id.
pub fn registry() -> Vec<Claim> {
    let mut claims = vec![
        Claim { id: "witt-simple", anchor: "W(1;n) is a simple Lie algebra", run: witt_simple },
        Claim {
            id: "lemma-contact-iso",
            anchor: "Lemma: K(1,1;n) is isomorphic to W(1;n) + O_div",
            run: contact_iso,
        },
        Claim {
            id: "lemma-derived-contact",
            anchor: "Lemma: K(1,1;n)^(1) = W(1;n) + O'",
            run: derived_contact,
        },
        Claim {
            id: "remark-super-simple",
            anchor: "Remark: W(1;n) + O' is simple, hence K(1,1;n)^(1) is simple",
            run: super_simple,
        },
        Claim {
            id: "frank-integrity",
            anchor: "Frank algebras F(n): Lie algebra, Z/2 and weight gradings, simple",
            run: frank_integrity,
        },
        Claim {
            id: "rep-alpha3-structure",
            anchor: "Rep(alpha_3): d = ad(e x 1), d^3 = 0, (2) x (2) = (3) + (1), braiding",
            run: rep_alpha3_structure,
        },
        Claim {
            id: "prop-frank-semisimplification",
            anchor: "Proposition: the semisimplification of F(n) is K(1,1;n)",
            run: frank_semisimplification,
        },
        Claim {
            id: "representative-independence",
            anchor: "Semisimplification does not depend on class representatives",
            run: representative_independence,
        },
        Claim {
            id: "jternary-axioms",
            anchor: "Example lemma: O with L_{f,g}h = fg dh - hg df is J-ternary",
            run: jternary_axioms,
        },
        Claim {
            id: "lemma-jordan-o",
            anchor: "Lemma: J is isomorphic to (O, •)",
            run: jordan_o,
        },
        Claim {
            id: "hein-counterexample",
            anchor: "Remark: O refutes Hein's 'simple iff J simple and <,> nondegenerate'",
            run: hein_counterexample,
        },
        Claim {
            id: "frank-ternary-link",
            anchor: "Example lemma: [[u x f, v x g], u x h] = u x L_{f,g}h",
            run: frank_ternary_link,
        },
    ];
    claims.sort_by_key(|c| c.id);
    claims
}

pub fn find(id: &str) -> Option<Claim> {
    registry().into_iter().find(|c| c.id == id)
}

pub fn run_claim(claim: &Claim, config: &RunConfig) -> ClaimReport {
    let start = Instant::now();
    let mut outcome = Outcome::default();
    if let Err(e) = (claim.run)(config, &mut outcome) {
        outcome.error(e);
    }
    ClaimReport {
        claim_id: claim.id.to_string(),
        paper_anchor: claim.anchor.to_string(),
        n: config.n,
        status: outcome.status(),
        checks: outcome.checks,
        witness: outcome.witness,
        seed: config.seed,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

pub fn run_all(config: &RunConfig) -> Vec<ClaimReport> {
    registry().iter().map(|c| run_claim(c, config)).collect()
}

/// Accumulates sub-checks; the first failure supplies the witness.
#[derive(Default)]
pub struct Outcome {
    checks: Vec<Check>,
    witness: Option<Witness>,
}

impl Outcome {
    fn status(&self) -> Status {
        self.checks.iter().fold(Status::Pass, |s, c| s.combine(c.status))
    }

    fn push(&mut self, name: &str, status: Status, detail: String) {
        self.checks.push(Check { name: name.to_string(), status, detail });
    }

    fn check(&mut self, name: &str, ok: bool, detail: String) {
        if !ok && self.witness.is_none() {
            self.witness = Some(Witness { note: format!("{}: {}", name, detail), ..Witness::default() });
        }
        self.push(name, if ok { Status::Pass } else { Status::Fail }, detail);
    }

    fn identity(&mut self, name: &str, r: &IdentityReport) {
        let detail = format!("{} instances, {} violations", r.checked, r.violation_count);
        if let (Some(v), None) = (r.first_witness(), &self.witness) {
            self.witness = Some(Witness {
                note: format!("{}: lhs != rhs", name),
                indices: v.indices.clone(),
                vectors: vec![values(&v.lhs), values(&v.rhs)],
            });
        }
        self.push(name, if r.passed() { Status::Pass } else { Status::Fail }, detail);
    }

    fn simplicity(&mut self, name: &str, s: &Simplicity, expect_simple: bool) {
        let detail = match s {
            Simplicity::Simple(cert) => certificate(cert),
            Simplicity::Abelian => "product is zero".to_string(),
            Simplicity::ProperIdeal(w) => format!("proper ideal of dimension {}", w.dim()),
        };
        let ok = s.is_simple() == expect_simple;
        if !ok && self.witness.is_none() {
            if let Some(w) = s.ideal() {
                self.witness = Some(subspace_witness(&format!("{}: ideal", name), w));
            }
        }
        self.check(name, ok, detail);
    }

    fn error(&mut self, e: Error) {
        match e {
            Error::RetriesExhausted { attempts, seed } => self.push(
                "meataxe",
                Status::Inconclusive,
                format!("no certificate after {} attempts with seed {}", attempts, seed),
            ),
            other => self.check("evaluation", false, other.to_string()),
        }
    }
}

fn values(v: &[Gf3]) -> Vec<u8> {
    v.iter().map(|c| c.value()).collect()
}

fn certificate(c: &NortonCertificate) -> String {
    format!(
        "simple (Norton certificate: factor of degree {}, nullity {}, attempt {})",
        c.factor.len() - 1,
        c.nullity,
        c.attempts
    )
}

fn subspace_witness(note: &str, s: &Subspace) -> Witness {
    Witness { note: note.to_string(), indices: Vec::new(), vectors: s.basis_vectors().iter().map(|v| values(v)).collect() }
}

fn dim_of(n: u32) -> usize {
    3usize.pow(n)
}

fn witt_simple(cfg: &RunConfig, out: &mut Outcome) -> Result<(), Error> {
    let w = witt_contact::build_witt(cfg.n)?;
    out.check("dimension", w.dim() == dim_of(cfg.n), format!("dim W = {}", w.dim()));
    out.identity("anticommutativity", &check_super_skew(&w));
    out.identity("jacobi", &check_super_jacobi(&w).multilinear);
    out.simplicity("simple", &check_simple(&w, &cfg.meataxe())?, true);
    Ok(())
}

fn contact_iso(cfg: &RunConfig, out: &mut Outcome) -> Result<(), Error> {
    let k = witt_contact::build_contact_k(cfg.n)?;
    let p = witt_contact::build_contact_presentation(cfg.n, false)?;
    out.identity("K super-skew", &check_super_skew(&k));
    out.identity("K super-jacobi", &check_super_jacobi(&k).multilinear);
    out.identity("presentation super-skew", &check_super_skew(&p));
    out.identity("presentation super-jacobi", &check_super_jacobi(&p).multilinear);
    out.identity("D_K bracket compatibility", &witt_contact::verify_dk_compatibility(cfg.n)?);
    let even = witt_contact::even_part_matches_witt(cfg.n)?;
    out.check("even part is W(1;n)", even, format!("{}", even));
    let map = witt_contact::contact_isomorphism(cfg.n, &k, &p)?;
    let r = algebra::verify_homomorphism(&map);
    out.identity("brackets preserved", &r.brackets);
    out.check(
        "bijective and parity preserving",
        r.invertible && r.parity_preserving,
        format!("invertible = {}, parity preserving = {}", r.invertible, r.parity_preserving),
    );
    Ok(())
}

fn derived_contact(cfg: &RunConfig, out: &mut Outcome) -> Result<(), Error> {
    let r = witt_contact::verify_derived_contact(cfg.n, &cfg.meataxe())?;
    out.check(
        "dimension",
        r.derived_dim == r.expected_dim,
        format!("dim = {}, expected 2*3^n - 1 = {}", r.derived_dim, r.expected_dim),
    );
    out.check("equals W + O'", r.equals_w_plus_o_prime, format!("{}", r.equals_w_plus_o_prime));
    out.check("contains all of W", r.even_part_is_all_of_w, format!("{}", r.even_part_is_all_of_w));
    out.check("perfect", r.perfect, format!("derived algebra of the derived algebra: {}", r.perfect));
    Ok(())
}

fn super_simple(cfg: &RunConfig, out: &mut Outcome) -> Result<(), Error> {
    let a = witt_contact::build_contact_presentation(cfg.n, true)?;
    let r = check_super_simple_criterion(&a, &cfg.meataxe())?;
    out.simplicity("even part simple", &r.even_part, true);
    let detail = match &r.odd_module {
        Irreducibility::Irreducible(c) => certificate(c).replacen("simple", "irreducible", 1),
        Irreducibility::Reducible(w) => format!("submodule of dimension {}", w.dim()),
    };
    if let (Some(w), true) = (r.odd_module.witness(), out.witness.is_none()) {
        out.witness = Some(subspace_witness("odd part: submodule", w));
    }
    out.check("odd part irreducible", r.odd_module.is_irreducible(), detail);
    out.check("[odd, odd] != 0", r.odd_odd_nonzero, format!("{}", r.odd_odd_nonzero));
    Ok(())
}

fn frank_integrity(cfg: &RunConfig, out: &mut Outcome) -> Result<(), Error> {
    let fr = frank::build_frank(cfg.n)?;
    let l = fr.algebra();
    out.check("dimension", l.dim() == 6 * dim_of(cfg.n), format!("dim F = {}", l.dim()));
    out.identity("anticommutativity", &check_super_skew(l));
    out.identity("jacobi", &check_super_jacobi(l).multilinear);
    let z2 = algebra::check_grading_mod(l, &fr.z2_degrees(), 2)?;
    out.check("Z/2 grading", z2.passed(), format!("{} constants, {} violations", z2.checked, z2.violations.len()));
    let z = algebra::check_grading(l, &fr.weights())?;
    out.check("weight grading", z.passed(), format!("{} constants, {} violations", z.checked, z.violations.len()));
    let ws = frank::weight_set(&fr);
    out.check("weight set", ws == [-2, -1, 0, 1, 2], format!("{:?}", ws));
    out.check(
        "ad(x)^3 = 0 for weight 2",
        frank::weight_two_cubes_vanish(&fr),
        format!("{} basis elements of weight 2", fr.block_len()),
    );
    out.simplicity("simple", &check_simple(l, &cfg.meataxe())?, true);
    Ok(())
}

fn rep_alpha3_structure(cfg: &RunConfig, out: &mut Outcome) -> Result<(), Error> {
    let fr = frank::build_frank(cfg.n)?;
    let d = frank::frank_derivation(&fr);
    out.identity("d = ad(e x 1) is a derivation", &algebra::check_derivation(fr.algebra(), &d)?);
    out.check("d^3 = 0", d.pow(3).is_zero(), format!("{}", d.pow(3).is_zero()));
    out.check("d^2 != 0", !d.pow(2).is_zero(), format!("{}", !d.pow(2).is_zero()));
    let m = dim_of(cfg.n);
    let jt = frank::frank_jordan_type(&fr)?;
    out.check("Jordan type of d", jt == JordanType { m1: m, m2: m, m3: m }, format!("{}, expected ({m}, {m}, {m})", jt));
    let two = RepAlpha3Object::block(2)?;
    let t = two.tensor(&two)?.jordan_type();
    out.check("(2) x (2)", t == JordanType { m1: 1, m2: 0, m3: 1 }, format!("{}", t));
    let b = rep_alpha3::braiding_sign_check();
    out.check(
        "braiding sign",
        b.passed(),
        format!(
            "killed = {}, outside image = {}, negated by swap = {}",
            b.annihilated, b.outside_image, b.negated_by_swap
        ),
    );
    Ok(())
}

fn frank_semisimplification(cfg: &RunConfig, out: &mut Outcome) -> Result<(), Error> {
    let r = rep_alpha3::verify_frank_semisimplification(cfg.n)?;
    let m = dim_of(cfg.n);
    out.check(
        "dimensions",
        r.even_dim == m && r.odd_dim == m && r.even_dim == r.jordan_type.m1 && r.odd_dim == r.jordan_type.m2,
        format!("even {}, odd {}, Jordan type {}", r.even_dim, r.odd_dim, r.jordan_type),
    );
    out.identity("super-skew", &r.skew);
    out.identity("class(Id x w) -> w, class(v x o) -> o brackets", &r.homomorphism.brackets);
    out.check(
        "bijective and parity preserving",
        r.homomorphism.invertible && r.homomorphism.parity_preserving,
        format!("invertible = {}", r.homomorphism.invertible),
    );
    Ok(())
}

fn representative_independence(cfg: &RunConfig, out: &mut Outcome) -> Result<(), Error> {
    let fr = frank::build_frank(cfg.n)?;
    let d = frank::frank_derivation(&fr);
    let r = rep_alpha3::representative_independence(fr.algebra(), &d, 10, cfg.seed)?;
    out.check(
        "perturbed representatives",
        r.passed(),
        format!("{} trials, {} mismatches", r.trials, r.mismatches.len()),
    );
    Ok(())
}

fn axiom_detail(r: &AxiomReport, dim: usize) -> String {
    match r.mode {
        AxiomMode::Exhaustive => format!(
            "exhaustive: {} five-tuples ({} scalar equations), {} violations",
            r.axiom1.checked,
            r.axiom1_scalar_checks(dim),
            r.axiom1.violation_count
        ),
        AxiomMode::Sampled { seed, samples } => format!(
            "randomized(seed={}): {} five-tuples, {} violations",
            seed, samples, r.axiom1.violation_count
        ),
    }
}

fn push_axioms(out: &mut Outcome, r: &AxiomReport, dim: usize) {
    out.identity("axiom 2", &r.axiom2);
    if let (Some(v), None) = (r.axiom1.first_witness(), &out.witness) {
        out.witness = Some(Witness {
            note: "axiom 1: lhs != rhs".into(),
            indices: v.indices.clone(),
            vectors: vec![values(&v.lhs), values(&v.rhs)],
        });
    }
    out.check("axiom 1", r.axiom1.passed(), axiom_detail(r, dim));
}

fn jternary_axioms(cfg: &RunConfig, out: &mut Outcome) -> Result<(), Error> {
    let x = jternary::build_o_jternary(cfg.n)?;
    let r = jternary::check_axioms(&x, AxiomMode::auto(x.dim(), cfg.seed, cfg.samples));
    push_axioms(out, &r, x.dim());
    Ok(())
}

fn jordan_o(cfg: &RunConfig, out: &mut Outcome) -> Result<(), Error> {
    let angle = jternary::verify_angle_formula(cfg.n)?;
    out.identity("<f,h> = multiplication by f dh - h df", &angle.closed_form);
    out.identity("<x,y> = L_{x,y} - L_{y,x}", &angle.reexpression);
    let x = jternary::build_o_jternary(cfg.n)?;
    let j = jternary::build_jordan_j(&x)?;
    out.check("dim J", j.dim() == dim_of(cfg.n), format!("dim J = {}", j.dim()));
    out.identity("Jordan identity", &jternary::check_jordan_identity(j.algebra())?);
    let id = jternary::identify_j_with_o(cfg.n, &j)?;
    out.check(
        "J -> (O, •) is an isomorphism",
        id.passed(),
        format!(
            "multiplication operators = {}, bijective homomorphism = {}",
            id.multiplication_operators,
            id.homomorphism.is_isomorphism()
        ),
    );
    Ok(())
}

fn hein_counterexample(cfg: &RunConfig, out: &mut Outcome) -> Result<(), Error> {
    let r = jternary::hein_counterexample(cfg.n, &cfg.meataxe(), cfg.samples)?;
    let m = dim_of(cfg.n);
    out.check("J-ternary axioms", r.axioms.passed(), axiom_detail(&r.axioms, m));
    out.simplicity("J-ternary algebra simple", &r.jternary_simple, true);
    out.check(
        "<,> nondegenerate",
        r.form.nondegenerate(),
        format!(
            "left radical dim {}, right radical dim {} (trivial-radical reading)",
            r.form.left_radical.dim(),
            r.form.right_radical.dim()
        ),
    );
    let ideal_dim = r.jordan_simple.ideal().map_or(0, Subspace::dim);
    out.simplicity("J not simple", &r.jordan_simple, false);
    if r.jordan_simple.ideal().is_some() {
        out.check("ideal dimension", ideal_dim == m - 1, format!("{}, expected {}", ideal_dim, m - 1));
    }
    let id = r.identification.as_ref().expect("O case");
    let in_o = r.degeneracy.as_ref().map(|w| id.matrix.mul_vec(&w.vector));
    let expected = linalg::unit_vector(m, m - 1);
    let found_by = match r.degeneracy.as_ref().map(|w| w.found_by) {
        Some(DegeneracySearch::Basis) => "basis scan",
        Some(DegeneracySearch::Exhaustive) => "exhaustive scan",
        Some(DegeneracySearch::Randomized { .. }) => "randomized scan",
        None => "none found",
    };
    out.check(
        "J degenerate",
        in_o.as_deref() == Some(expected.as_slice()),
        format!("U_b = 0 for b = {} ({})", in_o.as_deref().map_or("-".into(), render_o), found_by),
    );
    if out.status() == Status::Pass && r.is_counterexample() {
        let mut vectors = Vec::new();
        if let Some(v) = &in_o {
            vectors.push(values(v));
        }
        if let Some(w) = r.jordan_simple.ideal() {
            let ideal_in_o = w.map(&id.matrix);
            vectors.extend(ideal_in_o.basis_vectors().iter().map(|v| values(v)));
        }
        out.witness = Some(Witness {
            note: "O is a simple J-ternary algebra with nondegenerate <,> (read as: trivial left and right radical) whose Jordan algebra J has a proper ideal and an absolute zero divisor; this contradicts Hein's theorem that such an algebra is simple iff J is simple and <,> is nondegenerate. Vectors, in O coordinates: the zero divisor, then a basis of the ideal".into(),
            indices: vec![m - 1],
            vectors,
        });
    }
    Ok(())
}

fn render_o(v: &[Gf3]) -> String {
    let terms: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| if *c == Gf3::ONE { format!("x^({})", i) } else { format!("{}*x^({})", c.value(), i) })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn frank_ternary_link(cfg: &RunConfig, out: &mut Outcome) -> Result<(), Error> {
    let r = jternary::verify_frank_link(cfg.n, cfg.seed, cfg.samples)?;
    out.identity("[[u x f, v x g], u x h] = u x L_{f,g}h", &r.u_variant);
    out.identity("[[v x f, u x g], v x h] = -v x L_{f,g}h", &r.v_variant);
    out.identity("[L_{x,y}, L_{a,b}] = L_{L_{x,y}a,b} + L_{a,L_{y,x}b}", &r.operator);
    let fr = frank::build_frank(cfg.n)?;
    let one_u = fr.element(Block::U, &fr.o().basis(0));
    out.check(
        "u x 1 lies in F(n)",
        !linalg::is_zero(&one_u),
        format!("operator identity {}", if r.operator_exhaustive { "exhaustive" } else { "sampled" }),
    );
    Ok(())
}

use anyhow::{bail, Result};
use clap::ValueEnum;
use inverse_hom::crossprod::{
    class_sum_criterion, crossed_product, ks_as_crossed_product, phi_map,
    verify_separable_collapse_cohomology_capped, verify_separable_collapse_homology_capped,
    Algebra, CrossedProduct, UnitalAction,
};
use inverse_hom::field::{Field, FieldSpec, PrimeField, Rationals};
use inverse_hom::invmon::InverseMonoid;
use inverse_hom::monhom::{
    build_resolution_capped, cohomology_complex_capped, homology_complex_capped, KSModule, Side,
};
use inverse_hom::serial::{
    action_from_shorthand, algebra_from_shorthand, bimodule_from_shorthand,
    groupoid_from_shorthand, module_from_shorthand, monoid_from_shorthand, vector_to_json,
    ActionDoc, AlgebraDoc, BimoduleDoc, GroupoidDoc, ModuleDoc, MonoidDoc,
};
use inverse_hom::steinberg::{
    verify_steinberg_cohomology_capped, verify_steinberg_homology_capped, FiniteGroupoid,
    SteinbergData,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

use crate::job::{Check, Command, Request};

/// Number of random elements of `𝒩` tested against the class-sum condition.
const CLASS_SUM_SAMPLES: usize = 16;

/// A finished report: ordered fields and an optional verdict.
pub struct Report {
    pub fields: Map<String, Value>,
    pub passed: Option<bool>,
}

pub fn dispatch(req: &Request) -> Result<Report> {
    match req.field {
        FieldSpec::Rationals => run_in(Rationals, req),
        FieldSpec::Prime(p) => run_in(PrimeField::new(p)?, req),
    }
}

fn run_in<F: Field>(f: F, req: &Request) -> Result<Report> {
    let mut out = Map::new();
    out.insert("command".into(), json!(command_name(req)));
    out.insert("field".into(), json!(req.field.to_string()));
    out.insert("max_degree".into(), json!(req.max_degree));
    let passed = match (req.command, req.check) {
        (Command::Homology, _) | (Command::Cohomology, _) => {
            let s = monoid(req)?;
            let v = module(req, &s, f)?;
            let c = if req.command == Command::Homology {
                homology_complex_capped(&s, &v, req.max_degree + 1, req.cap_columns)?
            } else {
                cohomology_complex_capped(&s, &v, req.max_degree + 1, req.cap_columns)?
            };
            out.insert("monoid_size".into(), json!(s.size()));
            out.insert("module_dim".into(), json!(v.dim()));
            out.insert("space_dims".into(), json!(c.space_dims));
            out.insert("betti".into(), json!(c.betti()));
            let ok = c.is_complex();
            out.insert("squares_to_zero".into(), json!(ok));
            Some(ok)
        }
        (Command::ResolutionCheck, _) => {
            let s = monoid(req)?;
            let r = build_resolution_capped(&s, f, req.max_degree, req.cap_columns)?;
            let ids = r.homotopy_identities();
            out.insert("monoid_size".into(), json!(s.size()));
            out.insert("dims".into(), json!(r.dims()));
            out.insert("is_complex".into(), json!(r.is_complex()));
            out.insert("homotopy_identities".into(), json!(ids));
            Some(r.is_complex() && ids.iter().all(|&b| b))
        }
        (Command::CrossedProduct, _) => {
            let c = crossed(req, f)?;
            let s = c.action().monoid();
            out.insert("monoid_size".into(), json!(s.size()));
            out.insert("algebra_dim".into(), json!(c.action().algebra().dim()));
            out.insert("l_dim".into(), json!(c.l_dim()));
            out.insert("n_dim".into(), json!(c.n_dim()));
            out.insert("dim".into(), json!(c.dim()));
            out.insert(
                "unit".into(),
                vector_to_json(c.algebra().field(), c.algebra().unit()),
            );
            let cs = class_sum_criterion(&c)?;
            let sampled = sample_class_sums(&c, req.seed)?;
            out.insert("class_sum".into(), serde_json::to_value(&cs)?);
            out.insert("class_sum_converse".into(), json!(cs.converse_holds()));
            out.insert(
                "class_sum_samples".into(),
                json!({"seed": req.seed, "count": CLASS_SUM_SAMPLES, "passed": sampled}),
            );
            let mut ok = cs.passed() && sampled;
            match phi_map(&c) {
                Err(e) => {
                    out.insert("phi_unavailable".into(), json!(e.to_string()));
                }
                Ok((_, phi)) => {
                    ok &= phi.passed();
                    out.insert(
                    "phi".into(),
                    json!({
                        "kills_n": phi.kills_n, "homomorphism": phi.homomorphism, "surjective": phi.surjective,
                        "bimodule_map": phi.bimodule_map, "bijective": phi.bijective, "e_unitary": phi.e_unitary,
                        "source_dim": phi.source_dim, "target_dim": phi.target_dim,
                    }),
                );
                }
            }
            Some(ok)
        }
        (Command::Steinberg, _) => {
            let d = SteinbergData::new(&groupoid(req)?, f)?;
            out.insert("objects".into(), json!(d.groupoid.objects()));
            out.insert("arrows".into(), json!(d.groupoid.arrows()));
            out.insert("bisections".into(), json!(d.bisection_monoid.size()));
            out.insert("psi".into(), serde_json::to_value(&d.psi_report)?);
            Some(d.psi_report.passed())
        }
        (Command::Verify, Some(Check::CollapseHomology | Check::CollapseCohomology)) => {
            let c = crossed(req, f)?;
            let m = req
                .input_any(&["bimodule", "module"])?
                .load::<BimoduleDoc, _>(
                    |s| bimodule_from_shorthand(s, c.algebra()),
                    |d| d.build(c.algebra()),
                )?;
            let r = if req.check == Some(Check::CollapseHomology) {
                verify_separable_collapse_homology_capped(&c, &m, req.max_degree, req.cap_columns)?
            } else {
                verify_separable_collapse_cohomology_capped(
                    &c,
                    &m,
                    req.max_degree,
                    req.cap_columns,
                )?
            };
            out.insert("coefficient_dim".into(), json!(r.coefficient_dim));
            out.insert("lhs".into(), json!(r.lhs));
            out.insert("rhs".into(), json!(r.rhs));
            Some(r.passed())
        }
        (Command::Verify, Some(Check::SteinbergHomology | Check::SteinbergCohomology)) => {
            let d = SteinbergData::new(&groupoid(req)?, f)?;
            let a = &d.steinberg_algebra;
            let m = req
                .input_any(&["bimodule", "module"])?
                .load::<BimoduleDoc, _>(|s| bimodule_from_shorthand(s, a), |doc| doc.build(a))?;
            let r = if req.check == Some(Check::SteinbergHomology) {
                verify_steinberg_homology_capped(&d, &m, req.max_degree, req.cap_columns)?
            } else {
                verify_steinberg_cohomology_capped(&d, &m, req.max_degree, req.cap_columns)?
            };
            out.insert("coefficient_dim".into(), json!(r.coefficient_dim));
            out.insert("lhs".into(), json!(r.lhs));
            out.insert("rhs".into(), json!(r.rhs));
            if let Some(h) = &r.lx_cohomology {
                out.insert("lx_cohomology".into(), json!(h));
            }
            out.insert("psi".into(), serde_json::to_value(&r.psi)?);
            Some(r.passed())
        }
        (Command::Verify, Some(Check::KsCrossedProduct)) => {
            let s = monoid(req)?;
            let r = ks_as_crossed_product(&s, f)?;
            out.insert("ks_dim".into(), json!(r.ks_dim));
            out.insert("domain_dims".into(), json!(r.domain_dims));
            out.insert("bijective".into(), json!(r.bijective));
            out.insert("homomorphism".into(), json!(r.homomorphism));
            out.insert("bimodule_map".into(), json!(r.bimodule_map));
            Some(r.passed())
        }
        (Command::Verify, None) => bail!("verify needs a check"),
    };
    Ok(Report {
        fields: out,
        passed,
    })
}

fn command_name(req: &Request) -> String {
    match req.check {
        Some(c) => format!("verify {}", value_name(&c)),
        None => value_name(&req.command),
    }
}

pub fn value_name<T: ValueEnum>(v: &T) -> String {
    v.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}

fn monoid(req: &Request) -> Result<InverseMonoid> {
    req.input("monoid")?
        .load::<MonoidDoc, _>(monoid_from_shorthand, |d| d.build())
}

fn module<F: Field>(req: &Request, s: &InverseMonoid, f: F) -> Result<KSModule<F>> {
    let g = f.clone();
    req.input("module")?.load::<ModuleDoc, _>(
        |m| module_from_shorthand(m, s, f, Side::Left),
        |d| d.build(s, g),
    )
}

fn algebra<F: Field>(req: &Request, s: &InverseMonoid, f: F) -> Result<Algebra<F>> {
    let g = f.clone();
    req.input("algebra")?
        .load::<AlgebraDoc, _>(|a| algebra_from_shorthand(a, f, Some(s)), |d| d.build(g))
}

fn action<F: Field>(req: &Request, s: &InverseMonoid, a: &Algebra<F>) -> Result<UnitalAction<F>> {
    req.input("action")?
        .load::<ActionDoc, _>(|x| action_from_shorthand(x, s, a), |d| d.build(s, a))
}

fn crossed<F: Field>(req: &Request, f: F) -> Result<CrossedProduct<F>> {
    let s = monoid(req)?;
    let a = algebra(req, &s, f)?;
    let act = action(req, &s, &a)?;
    Ok(crossed_product(&act)?)
}

fn groupoid(req: &Request) -> Result<FiniteGroupoid> {
    req.input("groupoid")?
        .load::<GroupoidDoc, _>(groupoid_from_shorthand, |d| d.build())
}

/// Random integer combinations of the generators of `𝒩` must have zero
/// σ-class sums.
fn sample_class_sums<F: Field>(c: &CrossedProduct<F>, seed: u64) -> Result<bool> {
    let s = c.action().monoid();
    let gi = s.max_group_image()?;
    let sigma = c.class_sum_matrix(&gi.proj, gi.group.size());
    let gens = c.n_generators();
    let f = c.algebra().field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ok = (0..CLASS_SUM_SAMPLES).all(|_| {
        let coeffs: Vec<F::Elem> = (0..gens.cols())
            .map(|_| f.from_i64(rng.gen_range(-3..=3)))
            .collect();
        let x = gens.mul_vec(&coeffs);
        sigma.mul_vec(&x).iter().all(|v| f.is_zero(v))
    });
    Ok(ok)
}

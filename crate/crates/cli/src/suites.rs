//! Per-theorem check suites.

use std::sync::Arc;
use std::time::Instant;

use serde_json::{json, Value};

use cpw_core::coeff::{evaluate, CoeffFn};
use cpw_core::commutant::{
    circle_points, commutant_basis_window, default_probe_radius, in_commutant_direct, in_commutant_structural,
    is_maximal_abelian,
};
use cpw_core::dynsys::{
    aperiodic_points_dense, apply_sigma_tilde, check_baire_lemma, disjoint_invariant_open_sets,
    has_empty_interior, is_minimal, is_root_of_unity, is_topologically_transitive, per_n, verify_toptraper,
};
use cpw_core::ideals::{
    contains_unit, default_period, find_indicator, ideal_window_span, intersect_with_a_window, prime_refutation,
    prime_witness, proper_ideal_from_nondense_orbit, verify_paired_form, witness_in_a, witness_in_commutant,
    zero_intersection_generator,
};
use cpw_core::sample::{random_coeff, random_element, rng, SampleRng};
use cpw_core::{parse_element, Certificate, CrossedElement, Error, Point, PointSet, SystemModel, Window};

use crate::config::SystemConfig;
use crate::report::{CheckSuiteResult, Item, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Triquiv,
    Commint,
    Simplicity,
    Primeness,
    Baire,
    Algebra,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Triquiv => "triquiv",
            Suite::Commint => "commint",
            Suite::Simplicity => "simplicity",
            Suite::Primeness => "primeness",
            Suite::Baire => "baire",
            Suite::Algebra => "algebra",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    pub degree: usize,
    pub radius: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            degree: 3,
            radius: 2,
            samples: 20,
            seed: 0,
        }
    }
}

impl CheckOptions {
    fn window(&self) -> Window {
        Window::new(self.degree.max(1), self.radius.max(1)).expect("bounds are positive")
    }
}

type Model = Arc<SystemModel>;

fn texts(xs: &[CrossedElement]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

fn window_json(w: &Window) -> Value {
    json!({"degree_bound": w.degree_bound, "support_radius": w.support_radius})
}

/// Everything needed to replay a certificate: generators, claimed element,
/// and the window for linear combinations.
pub fn certificate_detail(
    gens: &[CrossedElement],
    element: &CrossedElement,
    cert: &Certificate,
    window: Option<&Window>,
) -> Value {
    let mut v = json!({
        "generators": texts(gens),
        "element": element.to_string(),
        "certificate": cert.to_json(),
    });
    if let Some(w) = window {
        v["window"] = window_json(w);
    }
    v
}

/// Replays an object written by [`certificate_detail`] against its model.
pub fn replay_detail(model: &Model, detail: &Value) -> Result<bool, String> {
    let text = |v: &Value| v.as_str().map(str::to_owned).ok_or_else(|| format!("expected a string, got {v}"));
    let gens = detail["generators"]
        .as_array()
        .ok_or("missing generators")?
        .iter()
        .map(|g| parse_element(model, &text(g)?).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    let element = parse_element(model, &text(&detail["element"])?).map_err(|e| e.to_string())?;
    let cert = Certificate::from_json(model, &detail["certificate"]).map_err(|e| e.to_string())?;
    let window = match detail.get("window") {
        Some(w) => {
            let bound = |k: &str| w[k].as_u64().map(|x| x as usize).ok_or(format!("window.{k} missing"));
            Some(Window::new(bound("degree_bound")?, bound("support_radius")?).map_err(|e| e.to_string())?)
        }
        None => None,
    };
    Ok(replays(&gens, &element, &cert, window.as_ref()))
}

fn replays(gens: &[CrossedElement], element: &CrossedElement, cert: &Certificate, window: Option<&Window>) -> bool {
    cert.replay(gens, window).map(|x| &x == element).unwrap_or(false)
}

/// Operations refused for capability reasons become unsupported items;
/// anything else is a failure.
fn error_item(name: &str, e: Error) -> Item {
    match e {
        Error::Unsupported(reason) => Item::unsupported(name, "model", reason),
        Error::PreconditionFailed(reason) => Item::unsupported(name, "precondition", reason),
        Error::NotUnital => Item::unsupported(name, "unital", "coefficient algebra has no unit"),
        Error::NotRegularModel => Item::unsupported(name, "regular_bumps", "no bump functions"),
        other => Item::new(name, Status::Fail, json!({"error": other.to_string()})),
    }
}

fn timed(f: impl FnOnce() -> Item) -> Item {
    let t = Instant::now();
    let mut item = f();
    item.elapsed_ms = Some(t.elapsed().as_secs_f64() * 1e3);
    item
}

pub fn run_suite(suite: Suite, cfg: &SystemConfig, opts: &CheckOptions) -> CheckSuiteResult {
    let s = &cfg.model;
    let mut r = rng(opts.seed);
    let items = match suite {
        Suite::Triquiv => triquiv(s, opts, &mut r),
        Suite::Commint => commint(s, opts, &mut r),
        Suite::Simplicity => simplicity(s, opts, &mut r),
        Suite::Primeness => primeness(s, opts, &mut r),
        Suite::Baire => baire(s, opts),
        Suite::Algebra => algebra(s, opts, &mut r),
    };
    CheckSuiteResult {
        suite: suite.name().into(),
        system: cfg.echo.clone(),
        items,
    }
}

fn triquiv(s: &Model, opts: &CheckOptions, r: &mut SampleRng) -> Vec<Item> {
    let dense = aperiodic_points_dense(s);
    let maximal = is_maximal_abelian(s);
    let mut items = vec![timed(|| {
        Item::new(
            "maximal_abelian_iff_aperiodic_dense",
            Status::from_bool(dense == maximal),
            json!({"aperiodic_dense": dense, "maximal_abelian": maximal}),
        )
    })];
    if dense {
        if !s.capabilities().regular_bumps {
            items.push(Item::unsupported(
                "ideals_meet_coefficients",
                "regular_bumps",
                "the witness construction needs bump functions",
            ));
            return items;
        }
        for k in 0..opts.samples {
            let f = random_element(s, r);
            let name = format!("ideal_meets_coefficients[{k}]");
            items.push(timed(|| match witness_in_a(&f) {
                Ok((a, cert)) => {
                    let a = CrossedElement::from_coeff(s, a).expect("matches model");
                    let gens = [f.clone()];
                    let ok = !a.is_zero() && replays(&gens, &a, &cert, None);
                    Item::new(name, Status::from_bool(ok), certificate_detail(&gens, &a, &cert, None))
                }
                Err(e) => error_item(&name, e),
            }));
        }
        return items;
    }
    let w = opts.window();
    items.push(timed(|| {
        let name = "zero_intersection_ideal";
        let Some(n) = default_period(s) else {
            return Item::new(name, Status::Fail, json!({"error": "no period with nonempty interior"}));
        };
        let (gen, _) = match zero_intersection_generator(s, n) {
            Ok(x) => x,
            Err(e) => return error_item(name, e),
        };
        let paired = match verify_paired_form(s, n, &gen, &w) {
            Ok(b) => b,
            Err(e) => return error_item(name, e),
        };
        let span = ideal_window_span(std::slice::from_ref(&gen), &w).expect("generator is nonzero");
        let meet = intersect_with_a_window(&span);
        Item::new(
            name,
            Status::from_bool(paired && meet.is_empty()),
            json!({
                "generator": gen.to_string(),
                "period": n,
                "window": window_json(&w),
                "paired_form": paired,
                "window_intersection_dimension": meet.len(),
                "argument": "every window product of f + f*d^n has the form sum b_i*(d^i + d^(i+n)), which holds no nonzero degree-0 element",
            }),
        )
    }));
    items.push(timed(|| {
        let name = "commutant_exceeds_coefficients";
        let n = default_period(s).unwrap_or(1);
        let found = commutant_basis_window(s, n, opts.radius.max(1))
            .into_iter()
            .find(|x| x.support_degrees() != [0]);
        match found {
            Some(x) => {
                let direct = in_commutant_direct(s, &x, default_probe_radius(&x));
                Item::new(
                    name,
                    Status::from_bool(direct),
                    json!({"element": x.to_string(), "commutes_with_generators": direct}),
                )
            }
            None => Item::new(name, Status::Fail, json!({"error": "no commutant element outside degree 0"})),
        }
    }));
    items
}

fn commint(s: &Model, opts: &CheckOptions, r: &mut SampleRng) -> Vec<Item> {
    if !s.capabilities().regular_bumps {
        return vec![Item::unsupported(
            "commutant_witness",
            "regular_bumps",
            "the reduction step needs bump functions",
        )];
    }
    (0..opts.samples)
        .map(|k| {
            let f = random_element(s, r);
            let name = format!("commutant_witness[{k}]");
            timed(|| match witness_in_commutant(&f) {
                Ok((c, cert, iterations)) => {
                    let gens = [f.clone()];
                    let ok = !c.is_zero()
                        && in_commutant_structural(s, &c).member
                        && iterations <= f.term_count()
                        && replays(&gens, &c, &cert, None);
                    let mut detail = certificate_detail(&gens, &c, &cert, None);
                    detail["iterations"] = json!(iterations);
                    Item::new(name, Status::from_bool(ok), detail)
                }
                Err(e) => error_item(&name, e),
            })
        })
        .collect()
}

fn proper_ideal_item(s: &Model, mu: Point, w: &Window) -> Item {
    let name = "proper_ideal_from_nondense_orbit";
    match proper_ideal_from_nondense_orbit(s, &mu, w) {
        Ok((gens, vanish)) => {
            let unit = contains_unit(&gens, w);
            let unit_absent = matches!(unit, Ok(None));
            Item::new(
                name,
                Status::from_bool(vanish && unit_absent),
                json!({
                    "mu": mu.to_string(),
                    "generators": texts(&gens),
                    "window": window_json(w),
                    "coefficients_vanish_at_mu": vanish,
                    "unit_found": !unit_absent,
                    "argument": "every coefficient of every window-span element vanishes at mu, so the span misses 1",
                }),
            )
        }
        Err(e) => error_item(name, e),
    }
}

fn simplicity(s: &Model, opts: &CheckOptions, r: &mut SampleRng) -> Vec<Item> {
    let w = opts.window();
    let minimal = is_minimal(s);
    let mut items = vec![Item::new("minimal", Status::Pass, json!({"minimal": minimal}))];
    match s.as_ref() {
        SystemModel::FinitePermutation(_) if !minimal => {
            items.push(timed(|| proper_ideal_item(s, Point::Finite(0), &w)));
        }
        SystemModel::FinitePermutation(p) => {
            let n = p.len();
            items.push(timed(|| {
                let gen = parse_element(s, &format!("1 - d^{n}")).expect("valid element");
                let unit = contains_unit(std::slice::from_ref(&gen), &w);
                Item::new(
                    "boundary_finite_minimal",
                    Status::from_bool(matches!(unit, Ok(None))),
                    json!({
                        "generator": gen.to_string(),
                        "window": window_json(&w),
                        "unit_found": !matches!(unit, Ok(None)),
                        "observation": "minimal, yet 1 - d^N spans a proper ideal in the window; the character space is finite, so the simplicity theorem does not apply",
                    }),
                )
            }));
        }
        SystemModel::CircleRotation(q) if is_root_of_unity(q) => {
            let mu = Point::Circle(cpw_core::GaussianRational::one());
            items.push(timed(|| proper_ideal_item(s, mu, &w)));
        }
        SystemModel::CircleRotation(_) => {
            items.push(timed(|| {
                let name = "unit_in_ideal";
                let gens = [parse_element(s, "t - 1").expect("valid element")];
                match contains_unit(&gens, &w) {
                    Ok(Some(cert)) => {
                        let one = parse_element(s, "1").expect("valid element");
                        let ok = replays(&gens, &one, &cert, Some(&w));
                        Item::new(name, Status::from_bool(ok), certificate_detail(&gens, &one, &cert, Some(&w)))
                    }
                    Ok(None) => Item::new(
                        name,
                        Status::Fail,
                        json!({"generators": texts(&gens), "window": window_json(&w), "unit_found": false}),
                    ),
                    Err(e) => error_item(name, e),
                }
            }));
        }
        SystemModel::IntegerShift => {
            let max_bound = opts.degree.max(6);
            let radius = opts.radius.max(3);
            for k in 0..opts.samples {
                let f = random_element(s, r);
                let name = format!("indicator_in_ideal[{k}]");
                items.push(timed(|| {
                    let gens = [f.clone()];
                    for d in 1..=max_bound {
                        let w = Window::new(d, radius).expect("positive bounds");
                        match find_indicator(&gens, &w) {
                            Ok(Some((e, cert))) => {
                                let e = CrossedElement::from_coeff(s, e).expect("matches model");
                                let ok = replays(&gens, &e, &cert, Some(&w));
                                return Item::new(name.clone(), Status::from_bool(ok), certificate_detail(&gens, &e, &cert, Some(&w)));
                            }
                            Ok(None) => {}
                            Err(e) => return error_item(&name, e),
                        }
                    }
                    Item::new(
                        name.clone(),
                        Status::Fail,
                        json!({"generators": texts(&gens), "searched_degree_bound": max_bound, "found": false}),
                    )
                }));
            }
        }
    }
    items
}

fn primeness(s: &Model, opts: &CheckOptions, r: &mut SampleRng) -> Vec<Item> {
    let w = opts.window();
    let transitive = is_topologically_transitive(s);
    let mut items = vec![Item::new("transitive", Status::Pass, json!({"transitive": transitive}))];
    if !transitive {
        items.push(timed(|| {
            let name = "prime_refutation";
            if let SystemModel::CircleRotation(_) = s.as_ref() {
                return Item::unsupported(
                    name,
                    "regular_bumps",
                    "open-set enumeration and vanishing ideals are unavailable on the circle; at a root of unity the algebra behaves like a prime ring although the rotation is not transitive, which the theorem allows because regularity fails",
                );
            }
            match prime_refutation(s, &w) {
                Ok(rf) => Item::new(
                    name,
                    Status::from_bool(rf.verified),
                    json!({
                        "gens1": texts(&rf.gens1),
                        "gens2": texts(&rf.gens2),
                        "window": window_json(&w),
                        "common_element": rf.common.map(|x| x.to_string()),
                        "argument": "the ideals live on disjoint invariant orbit blocks: their window spans meet only in 0 and E vanishes on the intersection",
                    }),
                ),
                Err(e) => error_item(name, e),
            }
        }));
        return items;
    }
    if !s.capabilities().regular_bumps {
        items.push(Item::unsupported(
            "common_element",
            "regular_bumps",
            "the rotation is transitive but the coefficient algebra is not regular, so the theorem does not apply; Laurent window spans are too large to search at desk scale",
        ));
        return items;
    }
    let radius = opts.radius.max(3);
    let max_bound = opts.degree.max(2) + 2;
    for k in 0..opts.samples {
        let f = random_element(s, r);
        let g = random_element(s, r);
        let name = format!("common_element[{k}]");
        items.push(timed(|| {
            for d in 2..=max_bound {
                let w = Window::new(d, radius).expect("positive bounds");
                match prime_witness(&f, &g, &w) {
                    Ok(Some(pw)) => {
                        let ok = !pw.element.is_zero()
                            && replays(std::slice::from_ref(&f), &pw.element, &pw.cert_f, Some(&w))
                            && replays(std::slice::from_ref(&g), &pw.element, &pw.cert_g, Some(&w));
                        return Item::new(
                            name.clone(),
                            Status::from_bool(ok),
                            json!({
                                "element": pw.element.to_string(),
                                "in_first": certificate_detail(std::slice::from_ref(&f), &pw.element, &pw.cert_f, Some(&w)),
                                "in_second": certificate_detail(std::slice::from_ref(&g), &pw.element, &pw.cert_g, Some(&w)),
                            }),
                        );
                    }
                    Ok(None) => {}
                    Err(e) => return error_item(&name, e),
                }
            }
            Item::new(
                name.clone(),
                Status::Fail,
                json!({"f": f.to_string(), "g": g.to_string(), "searched_degree_bound": max_bound, "found": false}),
            )
        }));
    }
    items
}

fn point_set_json(s: &SystemModel, set: &PointSet) -> Value {
    match set.enumerate(s) {
        Some(points) => json!(points.iter().map(|p| p.to_string()).collect::<Vec<_>>()),
        None => json!(set.to_string()),
    }
}

fn baire(s: &Model, opts: &CheckOptions) -> Vec<Item> {
    let n_max = opts.degree.max(6);
    let mut items = Vec::new();
    items.push(timed(|| {
        let interior: Vec<i64> = (1..=n_max.max(s.period_bound()) as i64)
            .filter(|&n| !has_empty_interior(s, &per_n(s, n).expect("n > 0")))
            .collect();
        Item::new(
            "baire_lemma",
            Status::from_bool(check_baire_lemma(s, n_max)),
            json!({"aperiodic_dense": aperiodic_points_dense(s), "periods_with_interior": interior}),
        )
    }));
    items.push(timed(|| {
        let name = "disjoint_invariant_open_sets";
        match disjoint_invariant_open_sets(s) {
            Ok(None) => Item::new(name, Status::Pass, json!({"transitive": true})),
            Ok(Some((o1, o2))) => {
                let invariant = |set: &PointSet| {
                    set.enumerate(s).is_some_and(|pts| {
                        pts.iter().all(|p| set.contains(&apply_sigma_tilde(s, p, 1).expect("valid point")))
                    })
                };
                let ok = o1.intersect(s, &o2).is_empty()
                    && !o1.is_empty()
                    && !o2.is_empty()
                    && invariant(&o1)
                    && invariant(&o2);
                Item::new(
                    name,
                    Status::from_bool(ok),
                    json!({"first": point_set_json(s, &o1), "second": point_set_json(s, &o2)}),
                )
            }
            Err(e) => error_item(name, e),
        }
    }));
    items.push(timed(|| {
        let failing: Vec<usize> = (1..=6).filter(|&n0| !verify_toptraper(s, n0)).collect();
        Item::new(
            "transitive_periodic_is_single_orbit",
            Status::from_bool(failing.is_empty()),
            json!({"n0_checked": "1..=6", "failing": failing}),
        )
    }));
    items
}

fn probe_points(s: &SystemModel) -> Vec<Point> {
    match s {
        SystemModel::FinitePermutation(p) => (0..p.len()).map(Point::Finite).collect(),
        SystemModel::IntegerShift => (-12..=12).map(Point::Shift).collect(),
        SystemModel::CircleRotation(_) => circle_points().take(20).collect(),
    }
}

fn monomial_rule_holds(s: &Model, a: &CoeffFn, n: i64, b: &CoeffFn, m: i64) -> bool {
    let prod = CrossedElement::monomial(s, a.clone(), n)
        .and_then(|x| x.mul(&CrossedElement::monomial(s, b.clone(), m)?))
        .expect("same model");
    let c = prod.coeff(n + m);
    prod.support_degrees().iter().all(|&d| d == n + m)
        && probe_points(s).iter().all(|p| {
            let moved = apply_sigma_tilde(s, p, -n).expect("valid point");
            evaluate(s, &c, p).expect("valid point")
                == &evaluate(s, a, p).expect("valid point") * &evaluate(s, b, &moved).expect("valid point")
        })
}

fn algebra(s: &Model, opts: &CheckOptions, r: &mut SampleRng) -> Vec<Item> {
    let mut assoc_bad = None;
    let mut dist_bad = None;
    let mut mono_bad = None;
    let mut unit_bad = None;
    let one = CrossedElement::delta_power(s, 0).ok();
    let t = Instant::now();
    for _ in 0..opts.samples {
        let (f, g, h) = (random_element(s, r), random_element(s, r), random_element(s, r));
        let fg = f.mul(&g).expect("same model");
        if assoc_bad.is_none() && fg.mul(&h).ok() != f.mul(&g.mul(&h).expect("same model")).ok() {
            assoc_bad = Some(texts(&[f.clone(), g.clone(), h.clone()]));
        }
        let left = f.mul(&g.add(&h).expect("same model")).ok() == fg.add(&f.mul(&h).expect("same model")).ok();
        let right = f.add(&g).expect("same model").mul(&h).ok()
            == f.mul(&h).expect("same model").add(&g.mul(&h).expect("same model")).ok();
        if dist_bad.is_none() && !(left && right) {
            dist_bad = Some(texts(&[f.clone(), g.clone(), h.clone()]));
        }
        if let Some(one) = &one {
            if unit_bad.is_none() && (one.mul(&f).ok().as_ref() != Some(&f) || f.mul(one).ok().as_ref() != Some(&f)) {
                unit_bad = Some(f.to_string());
            }
        }
        let (a, b) = (random_coeff(s, r), random_coeff(s, r));
        let (n, m) = (g.degree_reach() - 1, h.degree_reach() - 2);
        if mono_bad.is_none() && !monomial_rule_holds(s, &a, n, &b, m) {
            mono_bad = Some(json!({"a": format!("{a:?}"), "n": n, "b": format!("{b:?}"), "m": m}));
        }
    }
    let elapsed = t.elapsed().as_secs_f64() * 1e3;
    let item = |name: &str, bad: Option<Value>| {
        let mut i = Item::new(
            name,
            Status::from_bool(bad.is_none()),
            json!({"samples": opts.samples, "counterexample": bad}),
        );
        i.elapsed_ms = Some(elapsed);
        i
    };
    let mut items = vec![
        item("associativity", assoc_bad.map(|x| json!(x))),
        item("distributivity", dist_bad.map(|x| json!(x))),
        item("monomial_rule", mono_bad),
    ];
    if one.is_some() {
        items.push(item("unit", unit_bad.map(|x| json!(x))));
    } else {
        items.push(Item::unsupported("unit", "unital", "coefficient algebra has no unit"));
    }
    items
}

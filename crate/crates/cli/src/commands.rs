use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use pdyn_core::checks::{self, Suite};
use pdyn_core::dermap::{
    affine_form, build_phi, char_divides_degree, fixed_points, iterate, modified_newton, periodic_report, psi_sequence,
    reconstruct, res_disc_check, ReconstructionSource, DEFAULT_SIZE_CAP,
};
use pdyn_core::lattes::{
    cm_automorphism_suite, division_polynomials, doubling_from_torsion, lattes_map, res_disc_experiment,
    three_torsion_by_integration, CmFamily,
};
use pdyn_core::moduli::{
    alpha_family_form, conjugate_form, conjugate_map, invariance_check, is_automorphism, normal_form,
    pythagorean_alphas, two_periodic_points, AlphaFamily,
};
use pdyn_core::polyalg::{discriminant, parse_scalar, squarefree, DiscRoute};
use pdyn_core::random;
use pdyn_core::{EllCurve, Field, Fp, Modulus, Moebius, ProjPoint, Rational};

use crate::parse::{parse_form, parse_poly, ParseError};
use crate::render::{self, list, opt, s};

/// Exact dynamics of `phi_F = (F_Y, -F_X)` on the projective line.
#[derive(Debug, Parser)]
#[command(name = "pdyn", version)]
pub struct Cli {
    /// Scalar field: `q` or `fp:<p>` for a prime p.
    #[arg(long, global = true, default_value = "q", value_parser = parse_field)]
    pub field: FieldSpec,
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest map degree any iteration may reach.
    #[arg(long, global = true, default_value_t = DEFAULT_SIZE_CAP)]
    pub size_cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldSpec {
    Q,
    Fp(Modulus),
}

impl FieldSpec {
    fn name(self) -> String {
        match self {
            FieldSpec::Q => "q".into(),
            FieldSpec::Fp(p) => format!("fp:{p}"),
        }
    }
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    if s == "q" || s == "Q" {
        return Ok(FieldSpec::Q);
    }
    let p = s
        .strip_prefix("fp:")
        .ok_or_else(|| format!("expected `q` or `fp:<p>`, got `{s}`"))?
        .parse::<u64>()
        .map_err(|e| format!("bad modulus: {e}"))?;
    Modulus::new(p).map(FieldSpec::Fp).map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// phi_F, its partials and the morphism check.
    Build {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// Res(phi_F) against (-1)^(d(d-1)/2) d^(d-2) Disc(F).
    Resdisc {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// The affine map x - d f/f'.
    Affine {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// Fixed points, multipliers and sum 1/(1 - lambda).
    Fixed {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// The exact n-th iterate of phi_F.
    Iterate {
        #[arg(allow_hyphen_values = true)]
        form: String,
        #[arg(long)]
        n: usize,
    },
    /// The orbit of a point under phi_F.
    Orbit {
        #[arg(allow_hyphen_values = true)]
        form: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long)]
        n: usize,
    },
    /// Psi_1 .. Psi_n with the c-scalars and the degree table.
    Psi {
        #[arg(allow_hyphen_values = true)]
        form: String,
        #[arg(long)]
        n: usize,
    },
    /// Points of period dividing n and the multiplier polynomial.
    Periodic {
        #[arg(allow_hyphen_values = true)]
        form: String,
        #[arg(long)]
        n: usize,
    },
    /// The modified Newton map x - r f/f'.
    Newton {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
    },
    /// The map with given fixed points and multipliers 1 - r.
    Reconstruct {
        /// Comma-separated points (`a`, `a/b` or `inf`).
        #[arg(long, allow_hyphen_values = true)]
        points: String,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
    },
    /// Conjugate F and phi_F by gamma = [[a, b], [c, d]].
    Conjugate {
        #[arg(allow_hyphen_values = true)]
        form: String,
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
    },
    /// Move three fixed points to 0, 1, inf and report the rest.
    NormalForm {
        #[arg(allow_hyphen_values = true)]
        form: String,
    },
    /// The degree-4 family with fixed points 0, 1, alpha, inf.
    Alpha {
        #[arg(long, allow_hyphen_values = true)]
        value: String,
    },
    /// alpha = p^2/q^2 from Pythagorean triples with hypotenuse up to the bound.
    Pythagorean {
        #[arg(long)]
        bound: u64,
    },
    /// The invariance scalar chi(gamma) and the automorphism verdict.
    Aut {
        #[arg(allow_hyphen_values = true)]
        form: String,
        #[arg(long, allow_hyphen_values = true)]
        gamma: String,
    },
    /// Division polynomials and the Lattes map of y^2 = x^3 + a x^2 + b x + c.
    Lattes {
        /// `a,b,c`.
        #[arg(long, allow_hyphen_values = true)]
        curve: String,
        #[arg(long)]
        m: usize,
    },
    /// Exploratory computations.
    #[command(subcommand)]
    Experiment(Experiment),
    /// Seeded randomized property suites.
    Check {
        /// euler, resdisc, family, psi or multipliers.
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum Experiment {
    /// Disc(Psi_{m-1} Psi_{m+1}) / Res(phi_{E,m}) with its factorization.
    Resdisc {
        /// `a,b,c`; may be repeated.
        #[arg(long, allow_hyphen_values = true)]
        curve: Vec<String>,
        /// Comma-separated values of m.
        #[arg(long, default_value = "2")]
        m: String,
        /// Add this many seeded random curves with coefficients in [-9, 9].
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Malformed input; exit status 2.
    Usage(String),
    /// A violated mathematical precondition; exit status 1.
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => m,
        }
    }
}

impl From<pdyn_core::Error> for CliError {
    fn from(e: pdyn_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        match e {
            ParseError::Field(m) => CliError::Domain(m),
            other => CliError::Usage(other.to_string()),
        }
    }
}

/// The rendered document and the exit status.
pub struct Outcome {
    pub doc: Value,
    pub status: i32,
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let mut out = match cli.field {
        FieldSpec::Q => run::<Rational>(&cli.command, &(), cli)?,
        FieldSpec::Fp(p) => run::<Fp>(&cli.command, &p, cli)?,
    };
    if let Value::Object(m) = &mut out.doc {
        m.insert("field".into(), s(cli.field.name()));
    }
    Ok(out)
}

fn ok(doc: Value) -> Result<Outcome, CliError> {
    Ok(Outcome { doc, status: 0 })
}

fn scalars<T: Field>(ctx: &T::Ctx, src: &str, want: usize, what: &str) -> Result<Vec<T>, CliError> {
    let parts: Vec<&str> = src.split(',').collect();
    if parts.len() != want {
        return Err(CliError::Usage(format!("{what} needs {want} comma-separated values, got {}", parts.len())));
    }
    parts.iter().map(|p| scalar(ctx, p)).collect()
}

fn scalar<T: Field>(ctx: &T::Ctx, src: &str) -> Result<T, CliError> {
    parse_scalar(ctx, src).map_err(|e| match e {
        pdyn_core::Error::InvalidParameter(m) => CliError::Usage(m),
        other => other.into(),
    })
}

fn point<T: Field>(ctx: &T::Ctx, src: &str) -> Result<ProjPoint<T>, CliError> {
    ProjPoint::parse(ctx, src).map_err(|e| match e {
        pdyn_core::Error::InvalidParameter(m) => CliError::Usage(m),
        other => other.into(),
    })
}

fn gamma<T: Field>(ctx: &T::Ctx, src: &str) -> Result<Moebius<T>, CliError> {
    let [a, b, c, d]: [T; 4] = scalars(ctx, src, 4, "--gamma")?.try_into().expect("four entries");
    Ok(Moebius::new(a, b, c, d)?)
}

fn curve<T: Field>(ctx: &T::Ctx, src: &str) -> Result<EllCurve<T>, CliError> {
    let [a, b, c]: [T; 3] = scalars(ctx, src, 3, "--curve")?.try_into().expect("three entries");
    Ok(EllCurve::new(a, b, c)?)
}

fn positive(n: usize, what: &str) -> Result<usize, CliError> {
    if n == 0 {
        return Err(CliError::Usage(format!("{what} must be positive")));
    }
    Ok(n)
}

fn rational_only(ctx_is_q: bool, command: &str) -> Result<(), CliError> {
    if ctx_is_q {
        Ok(())
    } else {
        Err(CliError::Usage(format!("{command} requires --field q")))
    }
}

fn run<T: Field>(cmd: &Command, ctx: &T::Ctx, cli: &Cli) -> Result<Outcome, CliError> {
    let cap = cli.size_cap;
    let is_q = T::characteristic(ctx) == 0;
    match cmd {
        Command::Build { form } => {
            let f = parse_form::<T>(ctx, form)?;
            let phi = build_phi(&f)?;
            let (fx, fy) = f.partials();
            let res = phi.resultant();
            ok(json!({
                "command": "build",
                "form": s(&f),
                "degree": f.degree(),
                "partials": { "f_x": s(&fx), "f_y": s(&fy) },
                "map": render::map(&phi),
                "resultant": s(&res),
                "morphism": !res.is_zero(),
                "char_divides_degree": char_divides_degree(&f),
                "identity": phi.is_identity(),
            }))
        }
        Command::Resdisc { form } => {
            let f = parse_form::<T>(ctx, form)?;
            let r = res_disc_check(&f)?;
            let route = match discriminant(&f)?.route {
                DiscRoute::Direct => "direct".to_string(),
                DiscRoute::Swapped => "swapped".to_string(),
                DiscRoute::Sheared(t) => format!("sheared by {t}"),
            };
            ok(json!({
                "command": "resdisc",
                "form": s(&f),
                "degree": f.degree(),
                "res": s(&r.res),
                "disc": s(&r.disc),
                "disc_route": route,
                "squarefree": squarefree(&f),
                "identity_holds": r.holds,
            }))
        }
        Command::Affine { form } => {
            let f = parse_form::<T>(ctx, form)?;
            let a = affine_form(&f)?;
            ok(json!({
                "command": "affine",
                "form": s(&f),
                "f": s(f.dehomogenize()),
                "num": s(a.num()),
                "den": s(a.den()),
                "degree": a.degree(),
            }))
        }
        Command::Fixed { form } => {
            let f = parse_form::<T>(ctx, form)?;
            let phi = build_phi(&f)?;
            let r = fixed_points(&phi)?;
            let pts: Vec<Value> = r
                .points
                .iter()
                .map(|p| json!({ "point": s(&p.point), "multiplicity": p.multiplicity, "multiplier": s(&p.multiplier) }))
                .collect();
            ok(json!({
                "command": "fixed",
                "form": s(&f),
                "map": render::map(&phi),
                "fixed_points": pts,
                "all_rational": r.all_rational,
                "relation_sum": opt(r.relation_sum.as_ref()),
            }))
        }
        Command::Iterate { form, n } => {
            let n = positive(*n, "--n")?;
            let f = parse_form::<T>(ctx, form)?;
            let phi = iterate(&build_phi(&f)?, n, cap)?;
            ok(json!({ "command": "iterate", "form": s(&f), "n": n, "map": render::map(&phi) }))
        }
        Command::Orbit { form, point: start, n } => {
            let f = parse_form::<T>(ctx, form)?;
            let phi = build_phi(&f)?;
            let mut p = point(ctx, start)?;
            let mut orbit = vec![p.clone()];
            for _ in 0..*n {
                p = phi.eval(&p)?;
                orbit.push(p.clone());
            }
            let period = orbit[1..].iter().position(|q| *q == orbit[0]).map(|i| i + 1);
            ok(json!({
                "command": "orbit",
                "form": s(&f),
                "n": n,
                "orbit": render::points(&orbit),
                "returns_after": period,
            }))
        }
        Command::Psi { form, n } => {
            let n = positive(*n, "--n")?;
            let f = parse_form::<T>(ctx, form)?;
            let steps: Vec<Value> = psi_sequence(&f, n, cap)?
                .iter()
                .map(|st| {
                    json!({
                        "n": st.n,
                        "psi": s(&st.psi),
                        "psi_scale": s(&st.psi_scale),
                        "c": s(&st.c),
                        "b": s(&st.b),
                        "degree": st.degree(),
                        "expected_degree": st.expected_degree,
                        "infinity_periodic": st.infinity_periodic,
                        "degree_law_holds": st.degree_law_holds(),
                    })
                })
                .collect();
            let experimental = T::characteristic(ctx) != 0;
            ok(json!({ "command": "psi", "form": s(&f), "steps": steps, "experimental": experimental }))
        }
        Command::Periodic { form, n } => {
            let n = positive(*n, "--n")?;
            let f = parse_form::<T>(ctx, form)?;
            let r = periodic_report(&f, n, cap)?;
            let pts: Vec<Value> =
                r.rational_points.iter().map(|(p, m)| json!({ "point": s(p), "multiplier": s(m) })).collect();
            ok(json!({
                "command": "periodic",
                "experimental": T::characteristic(ctx) != 0,
                "form": s(&f),
                "period": r.period,
                "psi": s(&r.psi),
                "degree": r.psi.degree().unwrap_or(0),
                "expected_degree": r.expected_degree,
                "degree_law_holds": r.degree_law_holds(),
                "infinity_periodic": r.infinity_periodic,
                "rational_points": pts,
                "multiplier_charpoly": render::poly_in(&r.multiplier_charpoly, "t"),
            }))
        }
        Command::Newton { poly, r } => {
            let f = parse_poly::<T>(ctx, poly)?;
            let r = scalar::<T>(ctx, r)?;
            let nm = modified_newton(&f, &r)?;
            ok(json!({
                "command": "newton",
                "f": s(&f),
                "r": s(&r),
                "num": s(nm.map.num()),
                "den": s(nm.map.den()),
                "root_multiplier": s(&nm.root_multiplier),
                "infinity_multiplier": opt(nm.infinity_multiplier.as_ref()),
                "r_equals_degree": nm.r_equals_degree(),
            }))
        }
        Command::Reconstruct { points, r } => {
            let pts = points.split(',').map(|p| point::<T>(ctx, p)).collect::<Result<Vec<_>, _>>()?;
            let r = scalar::<T>(ctx, r)?;
            let rec = reconstruct(ctx, &pts, &r)?;
            let source = match &rec.source {
                ReconstructionSource::Form(f) => json!({ "kind": "form", "form": s(f) }),
                ReconstructionSource::Newton(f) => json!({ "kind": "newton", "f": s(f) }),
            };
            ok(json!({
                "command": "reconstruct",
                "points": render::points(&pts),
                "r": s(&r),
                "source": source,
                "map": render::map(&rec.map),
                "root_multiplier": s(&rec.root_multiplier),
                "infinity_multiplier": opt(rec.infinity_multiplier.as_ref()),
            }))
        }
        Command::Conjugate { form, gamma: g } => {
            let f = parse_form::<T>(ctx, form)?;
            let g = gamma(ctx, g)?;
            let conj = conjugate_form(&f, &g);
            let map = conjugate_map(&build_phi(&f)?, &g);
            ok(json!({
                "command": "conjugate",
                "form": s(&f),
                "gamma": s(&g),
                "conjugated_form": s(&conj),
                "conjugated_map": render::map(&map),
                "closure_holds": build_phi(&conj)? == map,
            }))
        }
        Command::NormalForm { form } => {
            let f = parse_form::<T>(ctx, form)?;
            let nf = normal_form(&f)?;
            let orbits: Vec<Value> = nf.cross_ratio_orbits.iter().map(list).collect();
            ok(json!({
                "command": "normal-form",
                "form": s(&f),
                "ordered_points": render::points(&nf.ordered_points),
                "moebius": s(&nf.moebius),
                "alphas": list(&nf.alphas),
                "normalized_form": s(&nf.form),
                "cross_ratio_orbits": orbits,
            }))
        }
        Command::Alpha { value } => {
            let a = scalar::<T>(ctx, value)?;
            let fam = AlphaFamily::new(a.clone())?;
            let (f, phi) = alpha_family_form(&fam)?;
            let two = two_periodic_points(&fam)?;
            ok(json!({
                "command": "alpha",
                "alpha": s(&a),
                "form": s(&f),
                "map": render::map(&phi),
                "quadratics": list(&two.quadratics),
                "fixed_points": render::points(&two.fixed_points),
                "rational_two_periodic": list(&two.rational_points),
                "matches_psi2": two.matches_psi2,
            }))
        }
        Command::Pythagorean { bound } => {
            rational_only(is_q, "pythagorean")?;
            let mut rows = Vec::new();
            for a in pythagorean_alphas(*bound)? {
                let two = two_periodic_points(&AlphaFamily::new(a.clone())?)?;
                rows.push(json!({ "alpha": s(&a), "rational_two_periodic": list(&two.rational_points) }));
            }
            ok(json!({ "command": "pythagorean", "bound": bound, "alphas": rows }))
        }
        Command::Aut { form, gamma: g } => {
            let f = parse_form::<T>(ctx, form)?;
            let g = gamma(ctx, g)?;
            let chi = invariance_check(&f, &g);
            ok(json!({
                "command": "aut",
                "form": s(&f),
                "gamma": s(&g),
                "chi": opt(chi.as_ref()),
                "automorphism": is_automorphism(&build_phi(&f)?, &g),
            }))
        }
        Command::Lattes { curve: spec, m } => {
            let e = curve::<T>(ctx, spec)?;
            let l = lattes_map(&e, *m)?;
            let divs: Vec<Value> = division_polynomials(&e, m + 1)
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, p)| json!({ "m": k, "psi": s(p) }))
                .collect();
            let (newton, equal) = doubling_from_torsion(&e)?;
            let integration = match three_torsion_by_integration(&e) {
                Ok((g, holds)) => json!({ "g": s(&g), "twelve_g_is_psi3": holds }),
                Err(_) => Value::Null,
            };
            let cm = match cm_automorphism_suite(&e) {
                Ok(rep) => {
                    let checks: Vec<Value> = rep
                        .checks
                        .iter()
                        .map(|c| json!({ "label": c.label, "form": s(&c.form), "chi": opt(c.chi.as_ref()), "automorphism": c.automorphism }))
                        .collect();
                    json!({
                        "family": match rep.family { CmFamily::J1728 => "j=1728", CmFamily::J0 => "j=0" },
                        "action": opt(rep.action.as_ref()),
                        "skipped": rep.skipped,
                        "checks": checks,
                    })
                }
                Err(_) => Value::Null,
            };
            ok(json!({
                "command": "lattes",
                "curve": s(&e),
                "discriminant": s(e.discriminant()),
                "j_invariant": opt(e.j_invariant().ok()),
                "m": m,
                "division_polynomials": divs,
                "map": render::map(&l.map),
                "num": s(l.affine.num()),
                "den": s(l.affine.den()),
                "fixed_point_poly": s(&l.fixed_point_poly),
                "multiplier_charpoly": render::poly_in(&l.multiplier_charpoly, "t"),
                "infinity_multiplier": s(&l.infinity_multiplier),
                "doubling": {
                    "newton_num": s(newton.map.num()),
                    "newton_den": s(newton.map.den()),
                    "equals_lattes_2": equal,
                },
                "three_torsion_integration": integration,
                "cm": cm,
            }))
        }
        Command::Experiment(Experiment::Resdisc { curve: specs, m, random: k, seed }) => {
            rational_only(is_q, "experiment resdisc")?;
            let ms = m
                .split(',')
                .map(|v| v.trim().parse::<usize>().map_err(|e| CliError::Usage(format!("bad --m value `{v}`: {e}"))))
                .collect::<Result<Vec<_>, _>>()?;
            let mut curves = specs.iter().map(|c| curve::<Rational>(&(), c)).collect::<Result<Vec<_>, _>>()?;
            let mut rng = random::rng(*seed);
            curves.extend((0..*k).map(|_| random::curve::<Rational>(&mut rng, &(), 9)));
            if curves.is_empty() {
                return Err(CliError::Usage("give at least one --curve or --random".into()));
            }
            let mut rows = Vec::new();
            for e in &curves {
                for &mm in &ms {
                    let x = res_disc_experiment(e, mm)?;
                    let factors: Vec<Value> = x.factorization.iter().map(|(p, k)| json!([s(p), k])).collect();
                    rows.push(json!({
                        "curve": s(e),
                        "m": mm,
                        "disc": s(&x.disc),
                        "res": s(&x.res),
                        "ratio": s(&x.ratio),
                        "sign": x.sign,
                        "factorization": factors,
                        "unfactored": opt(x.unfactored.as_ref()),
                        "primes_divide_2_m_pm_1": x.primes_divide_2_m_pm_1,
                    }));
                }
            }
            ok(json!({ "command": "experiment resdisc", "seed": seed, "rows": rows }))
        }
        Command::Check { suite, seed, trials } => {
            let suite: Suite = suite.parse().map_err(|e: pdyn_core::Error| CliError::Usage(e.to_string()))?;
            let r = checks::run::<T>(suite, ctx, *seed, *trials);
            let status = if r.ok() { 0 } else { 1 };
            Ok(Outcome {
                doc: json!({
                    "command": "check",
                    "suite": suite.name(),
                    "seed": r.seed,
                    "trials": r.trials,
                    "passed": r.passed(),
                    "failures": r.failures,
                }),
                status,
            })
        }
    }
}

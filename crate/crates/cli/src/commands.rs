//! One handler per subcommand; each builds a [`Report`] from a core call.

use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;

use num_complex::Complex64;
use num_rational::Rational64;
use serde::Serialize;
use serde_json::{json, Value};

use smolab::euler::{
    convergence_probe, grc_profile, key_observation_abscissa, landau_region_check, positive_type_check,
    rankin_selberg_local, rs_leading_coefficient, EulerProduct, LocalFactor,
};
use smolab::groups::{
    bundled_catalog, build_group, character_table, extremal_search, lemma_threshold, parse_group_spec,
    CharacterTable, FiniteGroup, MAX_ORDER,
};
use smolab::groups::catalog::{catalog, parse_catalog_expr};
use smolab::groups::lemma::agreement_fraction;
use smolab::numeric::{parse_rational, rational_to_f64};
use smolab::primes::{
    dirichlet_density_estimate, frobenius_statistics, natural_density_estimate, prime_zeta, selector_from_str,
    Counting, DensityEstimate, FieldSpec, PrimeSelector,
};
use smolab::report::Report;
use smolab::smo::tower::bundled_chain;
use smolab::smo::{
    bundled_tau, compare_local, generate_tau, inert_experiment, load_hecke, pole_order_estimate, rajan_criterion,
    synthetic_tempered, tau_csv, tempered_bound_check, tower_degree_check, z_ratio, RepresentationData,
};

use crate::{
    CharlabCmd, Cli, CliError, Command, CountingArg, DataCmd, DensityCmd, EulerCmd, FactorArgs, FrobArgs, Output,
    PairArgs, SmoCmd, SourceArgs,
};

type Res = Result<Output, CliError>;

pub(crate) fn run(cli: &Cli) -> Res {
    match &cli.command {
        Command::Charlab { cmd } => charlab(cli, cmd),
        Command::Density { cmd } => density(cli, cmd),
        Command::Frobstats(args) => frobstats(cli, args),
        Command::Euler { cmd } => euler(cli, cmd),
        Command::Smo { cmd } => smo(cli, cmd),
        Command::Data { cmd } => data(cmd),
    }
}

fn done(r: Report) -> Res {
    Ok(Output::Report(Box::new(r)))
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

/// A group file when the path exists, a catalog expression otherwise.
fn load_group(arg: &str) -> Result<FiniteGroup, CliError> {
    let path = Path::new(arg);
    if path.is_file() {
        let gens = parse_group_spec(&read_file(path)?)?;
        let label = path
            .file_stem()
            .map_or_else(|| arg.to_string(), |s| s.to_string_lossy().into_owned());
        return Ok(build_group(&gens, MAX_ORDER, label)?);
    }
    Ok(catalog(&parse_catalog_expr(arg)?)?)
}

/// A field file when the path exists, inline `N=..;H=..` otherwise.
fn load_field(arg: &str) -> Result<FieldSpec, CliError> {
    let path = Path::new(arg);
    let text = if path.is_file() { read_file(path)? } else { arg.to_string() };
    Ok(FieldSpec::parse(&text)?)
}

fn rational(text: &str) -> Result<Rational64, CliError> {
    parse_rational(text).ok_or_else(|| usage(format!("not a rational number: {text:?}")))
}

fn eps_grid(list: &[String]) -> Result<Vec<f64>, CliError> {
    list.iter().map(|e| rational(e).map(|r| rational_to_f64(&r))).collect()
}

fn complex(text: &str) -> Result<Complex64, CliError> {
    Complex64::from_str(text.trim()).map_err(|_| usage(format!("not a complex number: {text:?}")))
}

fn selector(text: &str) -> Result<PrimeSelector, CliError> {
    Ok(selector_from_str(text)?)
}

fn character_cell(table: &CharacterTable, row: usize, k: usize) -> Value {
    let ch = &table.rows()[row];
    match ch.integer_values() {
        Some(v) => json!(v[k]),
        None => {
            let z = ch.values()[k];
            json!(format!("{:.9}{:+.9}i", z.re, z.im))
        }
    }
}

fn charlab(cli: &Cli, cmd: &CharlabCmd) -> Res {
    match cmd {
        CharlabCmd::Table { group } => {
            let g = load_group(group)?;
            let t = character_table(&g)?;
            let sizes = t.classes().class_sizes().to_vec();
            let degrees = t.degrees();
            let sum_sq: u64 = degrees.iter().map(|&d| (d as u64) * (d as u64)).sum();
            let headers: Vec<String> = sizes.iter().map(|s| s.to_string()).collect();
            let header_refs: Vec<&str> = headers.iter().map(String::as_str).collect();
            let rows = (0..t.rows().len())
                .map(|i| (0..sizes.len()).map(|k| character_cell(&t, i, k)).collect())
                .collect();
            let r = Report::new("charlab.table", cli, &["character table", "row orthogonality"])?
                .values(&json!({
                    "group": t.label(),
                    "order": t.group_order(),
                    "class_sizes": sizes,
                    "degrees": degrees,
                    "sum_of_squared_degrees": sum_sq,
                    "row_orthogonality_error": t.row_orthogonality_error(),
                    "column_orthogonality_error": t.column_orthogonality_error(),
                }))?
                .verdict("sum_of_squares_equals_order", &(sum_sq == t.group_order() as u64))?
                .verdict(
                    "orthogonal",
                    &(t.row_orthogonality_error() <= 1e-6 * t.group_order() as f64),
                )?
                .table(&header_refs, rows);
            done(r)
        }
        CharlabCmd::Extremal { group, degree } => {
            if *degree == 0 {
                return Err(usage("--degree must be positive"));
            }
            let g = load_group(group)?;
            let t = character_table(&g)?;
            let threshold = lemma_threshold(*degree);
            let ext = extremal_search(&t, *degree);
            let r = Report::new("charlab.extremal", cli, &["character agreement bound 1 - 1/(2n^2)"])?
                .values(&json!({
                    "group": t.label(),
                    "order": t.group_order(),
                    "degree": degree,
                    "irreducibles_of_degree": t.rows_of_degree(*degree).len(),
                    "threshold": threshold.to_string(),
                    "fraction": ext.as_ref().map(|e| e.fraction.to_string()),
                    "fraction_approx": ext.as_ref().map(|e| rational_to_f64(&e.fraction)),
                    "witness": ext.as_ref().map(|e| e.witness),
                }))?
                .verdict("witness_found", &ext.is_some())?
                .verdict("within_bound", &ext.as_ref().is_none_or(|e| e.fraction <= threshold))?
                .verdict("attains_bound", &ext.as_ref().is_some_and(|e| e.fraction == threshold))?;
            done(r)
        }
        CharlabCmd::Sweep { max_order } => sweep(cli, *max_order),
    }
}

#[derive(Serialize)]
struct SweepRow {
    group: String,
    order: usize,
    classes: usize,
    two_group: bool,
    pairs_checked: usize,
    violations: Vec<(usize, usize, String)>,
    row_orthogonality_error: f64,
    orthogonal: bool,
    sum_of_squares_ok: bool,
    /// Best agreement among degree-2 pairs.
    degree_two_extremal: Option<String>,
}

fn sweep(cli: &Cli, max_order: usize) -> Res {
    let groups: Vec<FiniteGroup> = bundled_catalog()?
        .into_iter()
        .filter(|g| g.order() <= max_order)
        .collect();
    let mut rows = Vec::new();
    let mut witnesses = Vec::new();
    for g in &groups {
        let t = character_table(g)?;
        let mut pairs = 0;
        let mut violations = Vec::new();
        let mut degrees = t.degrees();
        degrees.dedup();
        for &n in &degrees {
            let idx = t.rows_of_degree(n);
            let bound = lemma_threshold(n);
            for (k, &i) in idx.iter().enumerate() {
                for &j in &idx[k + 1..] {
                    pairs += 1;
                    let f = agreement_fraction(&t.rows()[i], &t.rows()[j], &t)?;
                    if f > bound {
                        violations.push((i, j, f.to_string()));
                    }
                }
            }
        }
        let order = t.group_order();
        let two_group = order.is_power_of_two();
        let ext = extremal_search(&t, 2);
        if two_group && ext.as_ref().is_some_and(|e| e.fraction == Rational64::new(7, 8)) {
            witnesses.push(json!({"group": t.label(), "witness": ext.as_ref().map(|e| e.witness)}));
        }
        let err = t.row_orthogonality_error();
        let sum_sq: usize = t.degrees().iter().map(|&d| (d * d) as usize).sum();
        rows.push(SweepRow {
            group: t.label().to_string(),
            order,
            classes: t.classes().len(),
            two_group,
            pairs_checked: pairs,
            violations,
            row_orthogonality_error: err,
            orthogonal: err <= 1e-6 * order as f64,
            sum_of_squares_ok: sum_sq == order,
            degree_two_extremal: ext.map(|e| e.fraction.to_string()),
        });
    }
    let total_violations: usize = rows.iter().map(|r| r.violations.len()).sum();
    let table = rows
        .iter()
        .map(|r| {
            vec![
                json!(r.group),
                json!(r.order),
                json!(r.pairs_checked),
                json!(r.violations.len()),
                json!(r.row_orthogonality_error),
                json!(r.degree_two_extremal),
            ]
        })
        .collect();
    let r = Report::new(
        "charlab.sweep",
        cli,
        &["character agreement bound 1 - 1/(2n^2)", "sharpness at 7/8 for n = 2", "row orthogonality"],
    )?
    .values(&json!({"groups": rows, "sharp_witnesses": witnesses}))?
    .verdict("groups", &groups.len())?
    .verdict("violations", &total_violations)?
    .verdict("all_orthogonal", &rows.iter().all(|r| r.orthogonal && r.sum_of_squares_ok))?
    .verdict("sharp_witness_found", &!witnesses.is_empty())?
    .table(&["group", "order", "pairs", "violations", "orthogonality_error", "degree_two_extremal"], table);
    done(r)
}

fn density_table<T: Serialize>(points: &[T], est: &DensityEstimate) -> Vec<Vec<Value>> {
    points
        .iter()
        .zip(&est.partial_values)
        .map(|(x, v)| vec![json!(x), json!(v)])
        .collect()
}

fn density(cli: &Cli, cmd: &DensityCmd) -> Res {
    match cmd {
        DensityCmd::Natural { selector: s, x } => {
            let est = natural_density_estimate(&selector(s)?, x)?;
            let r = Report::new("density.natural", cli, &["natural density"])?
                .cutoffs(x)?
                .values(&est)?
                .verdict("extrapolated", &est.extrapolated)?
                .table(&["x", "ratio"], density_table(x, &est));
            done(r)
        }
        DensityCmd::Dirichlet {
            selector: s,
            s: grid,
            x,
            counting,
        } => {
            let counting = match counting {
                CountingArg::Norms => Counting::Norms,
                CountingArg::Rational => Counting::RationalPrimes,
            };
            let est = dirichlet_density_estimate(&selector(s)?, grid, *x, counting)?;
            let r = Report::new("density.dirichlet", cli, &["Dirichlet density"])?
                .cutoffs(x)?
                .values(&est)?
                .verdict("extrapolated", &est.extrapolated)?
                .table(&["s", "ratio"], density_table(&est.sample_points, &est));
            done(r)
        }
        DensityCmd::Primezeta { s, x } => {
            let rows = s.iter().map(|&s| prime_zeta(s, *x)).collect::<Result<Vec<_>, _>>()?;
            let worst = rows.iter().map(|z| z.deviation.abs()).fold(0.0, f64::max);
            let table = rows
                .iter()
                .map(|z| vec![json!(z.s), json!(z.value), json!(z.log_pole), json!(z.deviation)])
                .collect();
            let r = Report::new("density.primezeta", cli, &["prime zeta function near s = 1"])?
                .cutoffs(x)?
                .values(&rows)?
                .verdict("max_abs_deviation", &worst)?
                .verdict("bounded", &(worst < 2.0))?
                .table(&["s", "sum", "log_pole", "deviation"], table);
            done(r)
        }
    }
}

fn frobstats(cli: &Cli, args: &FrobArgs) -> Res {
    let fs = load_field(&args.field)?;
    let st = frobenius_statistics(&fs, args.x)?;
    let expected = 1.0 / fs.degree() as f64;
    let max_dev = st.fractions.iter().map(|f| (f - expected).abs()).fold(0.0, f64::max);
    let table = (0..st.class_reps.len())
        .map(|i| vec![json!(st.class_reps[i]), json!(st.counts[i]), json!(st.fractions[i])])
        .collect();
    let r = Report::new("frobstats", cli, &["Frobenius classes equidistribute"])?
        .cutoffs(&args.x)?
        .values(&st)?
        .verdict("expected_fraction", &expected)?
        .verdict("max_deviation", &max_dev)?
        .table(&["class", "count", "fraction"], table);
    done(r)
}

fn local_factor(f: &FactorArgs) -> Result<LocalFactor, CliError> {
    let alphas = f.alphas.iter().map(|a| complex(a)).collect::<Result<Vec<_>, _>>()?;
    let degree = alphas.len();
    Ok(LocalFactor::new(f.q, alphas, degree)?)
}

/// Euler product named by the source flags; zeta when none is given.
/// Hecke and Satake data are squared as `A x conj A` unless `--no-rs`.
fn product(src: &SourceArgs) -> Result<EulerProduct, CliError> {
    let given = [src.data.is_some() || src.tau, src.satake.is_some(), src.field.is_some()];
    if given.iter().filter(|&&b| b).count() > 1 {
        return Err(usage("give at most one of --data/--tau, --satake, --field"));
    }
    let base = if let Some(path) = &src.data {
        load_hecke(path, src.weight)?.product
    } else if src.tau {
        bundled_tau().product
    } else if let Some(path) = &src.satake {
        let label = path
            .file_stem()
            .map_or_else(|| "satake".to_string(), |s| s.to_string_lossy().into_owned());
        EulerProduct::from_satake_csv(&read_file(path)?, None, label)?
    } else if let Some(field) = &src.field {
        return Ok(EulerProduct::dedekind(Arc::new(load_field(field)?)));
    } else {
        return Ok(EulerProduct::zeta());
    };
    Ok(if src.no_rs {
        base
    } else {
        let label = format!("{} x conj", base.label());
        EulerProduct::rankin_selberg(&base, &base, true).with_label(label)
    })
}

fn euler(cli: &Cli, cmd: &EulerCmd) -> Res {
    match cmd {
        EulerCmd::Eval { factor, s } => {
            let f = local_factor(factor)?;
            let s = complex(s)?;
            let v = f.eval(s)?;
            let r = Report::new("euler.eval", cli, &["local factor prod (1 - alpha q^-s)^-1"])?
                .values(&json!({"q": f.q(), "alphas": f.alphas(), "s": s, "value": v, "abs": v.norm()}))?;
            done(r)
        }
        EulerCmd::Poleline { factor } => {
            let f = local_factor(factor)?;
            let line = f.first_pole_line();
            let r = Report::new("euler.poleline", cli, &["poles of a local factor at Re s = log|alpha|/log q"])?
                .values(&json!({"q": f.q(), "alphas": f.alphas(), "poleline": line, "tempered": f.is_tempered()}))?;
            done(r)
        }
        EulerCmd::Rs {
            factor,
            with,
            unconjugated,
        } => {
            let f = local_factor(factor)?;
            let with_alphas = with.iter().map(|a| complex(a)).collect::<Result<Vec<_>, _>>()?;
            let g = if with_alphas.is_empty() {
                f.clone()
            } else {
                let d = with_alphas.len();
                LocalFactor::new(f.q(), with_alphas, d)?
            };
            let rs = rankin_selberg_local(&f, &g, !unconjugated)?;
            let lead = rs_leading_coefficient(&f, !unconjugated);
            let r = Report::new("euler.rs", cli, &["Rankin-Selberg local parameters alpha_i conj(beta_j)"])?
                .values(&json!({
                    "q": rs.q(),
                    "degree": rs.degree(),
                    "alphas": rs.alphas(),
                    "poleline": rs.first_pole_line(),
                    "self_leading_coefficient": lead,
                }))?;
            done(r)
        }
        EulerCmd::Positivity {
            source,
            selector: s,
            m,
            sigma,
        } => {
            let ep = product(source)?;
            let sel = selector(s)?;
            let pos = positive_type_check(&ep, &sel, *m)?;
            let landau = if pos.positive {
                Some(landau_region_check(&ep, &sel, sigma, *m)?)
            } else {
                None
            };
            let all_at_least_one = landau
                .as_ref()
                .is_some_and(|l| l.points.iter().all(|p| p.at_least_one));
            let mut r = Report::new("euler.positivity", cli, &["series of positive type", "Landau's lemma"])?
                .cutoffs(m)?
                .values(&json!({"label": ep.label(), "positivity": pos, "landau": landau}))?
                .verdict("positive_type", &pos.positive)?
                .verdict("landau_at_least_one", &all_at_least_one)?;
            if let Some(l) = &landau {
                let rows = l
                    .points
                    .iter()
                    .map(|p| vec![json!(p.sigma), json!(p.log_value), json!(p.value)])
                    .collect();
                r = r.table(&["sigma", "log_value", "value"], rows);
            }
            done(r)
        }
        EulerCmd::Probe {
            selector: s,
            delta,
            profile,
            n,
            sigma,
            cutoffs,
        } => {
            let delta = match (delta, profile) {
                (Some(_), Some(_)) => return Err(usage("give --delta or --profile, not both")),
                (Some(d), None) => rational_to_f64(&rational(d)?),
                (None, Some(p)) => grc_profile(p, *n)?.exponent_f64(),
                (None, None) => return Err(usage("one of --delta or --profile is required")),
            };
            let sel = selector(s)?;
            let rep = convergence_probe(&sel, delta, sigma, cutoffs)?;
            let rows = rep
                .series
                .iter()
                .flat_map(|ser| {
                    ser.rows.iter().map(move |row| {
                        vec![json!(ser.sigma), json!(row.cutoff), json!(row.partial_sum), json!(row.increment)]
                    })
                })
                .collect();
            let mut r = Report::new("euler.probe", cli, &["absolute convergence right of delta + 1/j"])?
                .cutoffs(cutoffs)?
                .values(&rep)?
                .verdict("analytic_abscissa", &rep.analytic_abscissa)?;
            for ser in &rep.series {
                r = r.verdict(&format!("growth_at_{}", ser.sigma), &ser.growth)?;
            }
            done(r.table(&["sigma", "cutoff", "partial_sum", "increment"], rows))
        }
        EulerCmd::Profile { name, n } => {
            let p = grc_profile(name, *n)?;
            let e = p.exponent();
            let r = Report::new("euler.profile", cli, &["bounds towards Ramanujan |alpha| <= q^delta"])?
                .values(&json!({
                    "profile": p.to_string(),
                    "n": n,
                    "exponent": e.to_string(),
                    "exponent_approx": p.exponent_f64(),
                    "abscissa_degree_one": key_observation_abscissa(p.exponent_f64(), 1),
                }))?;
            done(r)
        }
    }
}

fn hecke(data: &Option<PathBuf>, weight: u32) -> Result<RepresentationData, CliError> {
    Ok(match data {
        Some(path) => load_hecke(path, weight)?,
        None => bundled_tau(),
    })
}

fn pair(cli: &Cli, p: &PairArgs) -> Result<(RepresentationData, RepresentationData), CliError> {
    let a = hecke(&p.data, p.weight)?;
    let b = match (&p.against, p.synthetic) {
        (Some(path), false) => load_hecke(path, p.weight)?,
        (None, true) => synthetic_tempered(cli.seed, a.degree)?,
        (None, false) => a.clone(),
        (Some(_), true) => return Err(usage("give --against or --synthetic, not both")),
    };
    Ok((a, b))
}

fn smo(cli: &Cli, cmd: &SmoCmd) -> Res {
    match cmd {
        SmoCmd::Compare { pair: p, x } => {
            let (a, b) = pair(cli, p)?;
            let rep = compare_local(&a, &b, *x)?;
            let rows = rep
                .density_profile
                .iter()
                .map(|(x, f)| vec![json!(x), json!(f)])
                .collect();
            let r = Report::new("smo.compare", cli, &["multiplicity one from local agreement", "density thresholds"])?
                .cutoffs(&json!({"scan": rep.scan_limit, "effective": rep.effective_limit}))?
                .values(&rep)?
                .verdict("agree", &rep.disagreements.is_empty())?
                .verdict("first_disagreement", &rep.first_disagreement)?
                .table(&["x", "disagreeing_fraction"], rows);
            done(r)
        }
        SmoCmd::Poleorder {
            source,
            selector: s,
            eps,
        } => {
            let ep = product(source)?;
            let est = pole_order_estimate(&ep, &selector(s)?, &eps_grid(eps)?)?;
            let rows = (0..est.eps.len())
                .map(|i| {
                    vec![json!(est.eps[i]), json!(est.log_inv_eps[i]), json!(est.cutoffs[i]), json!(est.values[i])]
                })
                .collect();
            let r = Report::new("smo.poleorder", cli, &["order of the pole at s = 1"])?
                .cutoffs(&est.cutoffs)?
                .values(&est)?
                .verdict("slope", &est.slope)?
                .table(&["eps", "log_inv_eps", "cutoff", "value"], rows);
            done(r)
        }
        SmoCmd::Tempered {
            data,
            weight,
            selector: s,
            eps,
        } => {
            let a = hecke(data, *weight)?;
            let rep = tempered_bound_check(&a, &selector(s)?, &eps_grid(eps)?)?;
            let r = Report::new(
                "smo.tempered",
                cli,
                &["pole order of L_S(A x conj A) at most n^2 delta(S)", "density thresholds"],
            )?
            .cutoffs(&rep.estimate.cutoffs)?
            .values(&rep)?
            .verdict("slope", &rep.slope)?
            .verdict("bound", &rep.bound)?
            .verdict("within_bound", &rep.pass)?;
            done(r)
        }
        SmoCmd::Zratio {
            pair: p,
            selector: s,
            s: grid,
            cutoff,
        } => {
            let (a, b) = pair(cli, p)?;
            let rep = z_ratio(&a, &b, &selector(s)?, grid, *cutoff)?;
            let rows = rep
                .points
                .iter()
                .map(|z| vec![json!(z.s), json!(z.direct.re), json!(z.via_log), json!(z.abs_diff)])
                .collect();
            let r = Report::new("smo.zratio", cli, &["ratio Z_S of Rankin-Selberg products", "D_S of positive type"])?
                .cutoffs(&json!({"requested": rep.cutoff, "effective": rep.effective_cutoff}))?
                .values(&rep)?
                .verdict("routes_agree", &rep.all_agree)?
                .verdict("d_positive", &rep.d_positive)?
                .table(&["s", "direct", "via_log", "abs_diff"], rows);
            done(r)
        }
        SmoCmd::Rajan { selector: s, n } => {
            let rep = rajan_criterion(&selector(s)?, *n)?;
            let rows = rep.partial_sums.iter().map(|(c, v)| vec![json!(c), json!(v)]).collect();
            let r = Report::new("smo.rajan", cli, &["summability of q^(-2/(n^2+1)) over S"])?
                .cutoffs(&rep.partial_sums.iter().map(|p| p.0).collect::<Vec<_>>())?
                .values(&rep)?
                .verdict("verdict", &rep.verdict)?
                .table(&["cutoff", "partial_sum"], rows);
            done(r)
        }
        SmoCmd::Inert {
            field,
            n,
            profile,
            delta,
            no_probe,
        } => {
            let fs = load_field(field)?;
            let profile = profile.as_deref().map(|p| grc_profile(p, *n)).transpose()?;
            let delta = delta.as_deref().map(rational).transpose()?;
            let rep = inert_experiment(&fs, *n, profile, delta, !no_probe)?;
            let r = Report::new("smo.inert", cli, &["abscissa 2 delta + 1/p for inert primes"])?
                .values(&rep)?
                .verdict("main_sufficient", &rep.main.sufficient)?
                .verdict("step_one_sufficient", &rep.step_one.sufficient)?;
            done(r)
        }
        SmoCmd::Tower { field, chain, x } => {
            let (f, ch) = match field {
                None if chain.is_empty() => bundled_chain(),
                Some(f) if !chain.is_empty() => {
                    let ch = chain.iter().map(|c| load_field(c)).collect::<Result<Vec<_>, _>>()?;
                    (load_field(f)?, ch)
                }
                _ => return Err(usage("--field and --chain go together")),
            };
            let rep = tower_degree_check(&f, &ch, *x)?;
            let r = Report::new("smo.tower", cli, &["residue degrees in a cyclic p^m tower"])?
                .cutoffs(x)?
                .values(&rep)?
                .verdict("counterexamples", &rep.counterexamples.len())?;
            done(r)
        }
    }
}

fn data(cmd: &DataCmd) -> Res {
    match cmd {
        DataCmd::GenTau { limit } => Ok(Output::Raw(tau_csv(&generate_tau(*limit)?))),
    }
}


use std::time::{SystemTime, UNIX_EPOCH};

use stickel_core::arith;
use stickel_core::curve::{an_from_ap, fixtures, CurveData};
use stickel_core::groupring::{augmentation_order, OrderRing, VanishingOrder};
use stickel_core::lseries::{check_special_values, terms_needed, LSeriesContext, Pairing};
use stickel_core::maninsym::{build_space, RationalPeriodMap};
use stickel_core::stickelberger::{self as st, PinnedOrientations, RelationReport, ThetaElement};

use crate::cache::{self, Cache};
use crate::config::{Check, RunConfig};
use crate::error::{CliError, Context};
use crate::report::{
    pair, CurveReport, ModulusReport, OrderEntry, OrientationReport, RelationEntry, RunReport, SpecialRow,
    SpecialTable,
};

/// Coprime primes tried in the norm relations, besides the primes of `N`.
const NORM_PRIMES: [u64; 4] = [2, 3, 5, 7];
/// Largest modulus `M l` evaluated for a norm relation at `l | N`.
const BAD_PRIME_LIMIT: u64 = 4000;
/// Largest top modulus `M' l^{r+1}` evaluated for a tower relation.
const TOWER_LIMIT: u64 = 600;

pub struct Outcome {
    pub report: RunReport,
    pub exit_code: i32,
}

struct CurveWork<'a> {
    curve: &'a CurveData,
    map: RationalPeriodMap,
    fricke: i64,
}

fn pins(cache: Option<&Cache>) -> Result<PinnedOrientations, CliError> {
    let e11 = fixtures::e11();
    let map = cache::period_map(cache, &build_space(11), &e11)?;
    st::pin_orientations(&e11, &map).context(|| "orientation pinning on 11a1".into())
}

fn order(theta: &ThetaElement, ring: OrderRing, r_max: u32) -> Result<VanishingOrder, CliError> {
    augmentation_order(&theta.element, ring, r_max).context(|| format!("ord of Theta_{}", theta.modulus))
}

fn push(rels: &mut Vec<RelationReport>, r: stickel_core::Result<RelationReport>, what: &str) -> Result<(), CliError> {
    rels.push(r.context(|| what.to_string())?);
    Ok(())
}

fn modulus_report(
    work: &CurveWork<'_>,
    m: u64,
    config: &RunConfig,
    pins: Option<&PinnedOrientations>,
) -> Result<ModulusReport, CliError> {
    let curve = work.curve;
    let n = curve.conductor();
    let theta = st::theta(curve, &work.map, m).context(|| format!("Theta_{m} of {}", curve.label()))?;
    let mut orders = Vec::new();
    let mut rels = Vec::new();

    if config.wants(Check::Ord) || config.wants(Check::MazurTate) {
        let ord = order(&theta, OrderRing::Integers, config.r_max)?;
        orders.push(OrderEntry { ring: "Z".into(), ord: ord.to_string() });
        if config.wants(Check::Ord) {
            rels.push(st::check_vanishing_bound(&theta, ord));
        }
        if let (true, Some(rank)) = (config.wants(Check::MazurTate), curve.rank_hint()) {
            rels.push(st::check_mazur_tate(&theta, ord, rank));
        }
    }

    if let (true, Some(p)) = (config.wants(Check::Norm), pins) {
        let mut ells: Vec<u64> = NORM_PRIMES.iter().copied().filter(|l| m % l != 0).collect();
        for (q, _) in arith::factor(n) {
            if m % q != 0 && m * q <= BAD_PRIME_LIMIT && !ells.contains(&q) {
                ells.push(q);
            }
        }
        for l in ells {
            let what = format!("norm relation M={m} l={l}");
            push(&mut rels, st::check_norm_coprime(curve, &work.map, m, l, p.bad_prime), &what)?;
        }
        for l in [2u64, 3] {
            if m % l == 0 {
                continue;
            }
            for r in 1..=2u32 {
                if m * l.pow(r + 1) <= TOWER_LIMIT {
                    let what = format!("tower relation M'={m} l={l} r={r}");
                    push(&mut rels, st::check_norm_dividing(curve, &work.map, m, l, r, p.dividing), &what)?;
                }
            }
        }
    }

    if let (true, Some(p)) = (config.wants(Check::Funceq), pins) {
        if arith::gcd(m, n) == 1 {
            let r = st::check_functional_equation(&theta, n, work.fricke, p.functional_equation);
            push(&mut rels, r, &format!("functional equation M={m}"))?;
        }
    }

    if config.wants(Check::Parity) {
        for ring in [OrderRing::Rationals, OrderRing::half_integers()] {
            let ord = order(&theta, ring.clone(), config.r_max)?;
            orders.push(OrderEntry { ring: st::ring_name(&ring), ord: ord.to_string() });
            let mut r = st::check_parity(&theta, ord, &ring, n, work.fricke);
            r.name = format!("parity-{}", st::ring_name(&ring));
            rels.push(r);
        }
    }

    Ok(ModulusReport {
        modulus: m,
        group: theta.group.invariants().to_vec(),
        theta: theta.dump(),
        split_primes: theta.split_primes.clone(),
        orders,
        relations: rels.iter().map(RelationEntry::from).collect(),
    })
}

fn special_table(work: &CurveWork<'_>, config: &RunConfig, cache: Option<&Cache>) -> Result<Option<SpecialTable>, CliError> {
    let n = work.curve.conductor();
    let moduli: Vec<u64> = config.moduli.iter().copied().filter(|&m| arith::gcd(m, n) == 1).collect();
    let Some(&max_m) = moduli.iter().max() else {
        return Ok(None);
    };
    let terms = terms_needed(n, max_m, config.digits);
    let aps = cache::ap_table(cache, work.curve, terms as u64)?;
    let an = an_from_ap(&aps, n, terms);
    let ctx = LSeriesContext::from_coefficients(n, work.fricke, &an);
    let rep = match check_special_values(&ctx, &work.map, &moduli, config.digits, Pairing::Bridged) {
        Ok(r) => r,
        // Moduli without primitive characters leave nothing to compare.
        Err(stickel_core::Error::InconsistentInput(_)) => return Ok(None),
        Err(e) => return Err(e).context(|| format!("special values of {}", work.curve.label())),
    };
    Ok(Some(SpecialTable {
        label: work.curve.label().into(),
        moduli,
        pairing: "bridged".into(),
        c: pair(rep.c),
        max_rel: rep.max_rel,
        tolerance: rep.tolerance,
        passed: rep.passed(),
        rows: rep
            .rows
            .iter()
            .map(|r| SpecialRow {
                modulus: r.modulus,
                char_id: r.char_id.clone(),
                a_chi: pair(r.a_chi),
                b_chi: pair(r.b_chi),
                rel: r.rel,
            })
            .collect(),
    }))
}

pub fn run(config: &RunConfig) -> Result<Outcome, CliError> {
    config.validate()?;
    let cache = config.cache_dir.as_ref().map(Cache::open).transpose()?;
    let cache = cache.as_ref();
    let pins = if config.wants(Check::Norm) || config.wants(Check::Funceq) {
        Some(pins(cache)?)
    } else {
        None
    };

    let mut curves = Vec::new();
    let mut special = Vec::new();
    for curve in &config.curves {
        let space = build_space(curve.conductor());
        let map = cache::period_map(cache, &space, curve)?;
        let fricke = map.fricke_eigenvalue().context(|| format!("Fricke sign of {}", curve.label()))?;
        let work = CurveWork { curve, map, fricke };
        let moduli = config
            .moduli
            .iter()
            .map(|&m| modulus_report(&work, m, config, pins.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        if config.wants(Check::Special) {
            special.extend(special_table(&work, config, cache)?);
        }
        curves.push(CurveReport {
            label: curve.label().into(),
            key: curve.key(),
            conductor: curve.conductor(),
            rank_hint: curve.rank_hint(),
            fricke,
            normalization: work.map.normalization_id().into(),
            moduli,
        });
    }

    let relations = curves.iter().flat_map(|c| &c.moduli).flat_map(|m| &m.relations);
    let hard_failures = relations.clone().filter(|r| r.hard && !r.passed).count()
        + special.iter().filter(|t| !t.passed).count();
    let advisory_warnings = relations.filter(|r| !r.hard && !r.passed).count();
    let report = RunReport {
        generated: SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs()),
        tool: format!("stickel {}", env!("CARGO_PKG_VERSION")),
        r_max: config.r_max,
        digits: config.digits,
        checks: config.checks.iter().map(|c| c.name().to_string()).collect(),
        orientations: pins.map(|p| OrientationReport {
            bad_prime: p.bad_prime.name().into(),
            dividing: p.dividing.name().into(),
            functional_equation: p.functional_equation.name().into(),
        }),
        curves,
        special,
        hard_failures,
        advisory_warnings,
    };
    Ok(Outcome { exit_code: i32::from(hard_failures > 0), report })
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct LValueRow {
    pub label: String,
    /// Conductor of the twisting character; 1 for `L(E, 1)` itself.
    pub modulus: u64,
    pub char_id: String,
    pub value: [f64; 2],
}

/// `L(E, 1)` and `L(E, chi, 1)` for the primitive characters of each `G_M`.
pub fn lvalues(
    curve: &CurveData,
    moduli: &[u64],
    digits: u32,
    cache: Option<&Cache>,
) -> Result<Vec<LValueRow>, CliError> {
    use stickel_core::groupring::GaloisGroup;
    use stickel_core::lseries::DirichletCharacter;

    let n = curve.conductor();
    let space = build_space(n);
    let map = cache::period_map(cache, &space, curve)?;
    let fricke = map.fricke_eigenvalue().context(|| format!("Fricke sign of {}", curve.label()))?;
    let max_m = moduli.iter().copied().max().unwrap_or(1);
    let terms = terms_needed(n, max_m, digits);
    let aps = cache::ap_table(cache, curve, terms as u64)?;
    let ctx = LSeriesContext::from_coefficients(n, fricke, &an_from_ap(&aps, n, terms));
    let label = curve.label().to_string();
    let central = ctx.central_value(digits).context(|| format!("L({label}, 1)"))?;
    let mut rows = vec![LValueRow { label: label.clone(), modulus: 1, char_id: "trivial".into(), value: [central, 0.0] }];
    for &m in moduli {
        let group = GaloisGroup::new(m).context(|| format!("G_{m}"))?;
        for chi in group.characters() {
            if !group.is_primitive(&chi) {
                continue;
            }
            let d = DirichletCharacter::primitive_lift(&group, &chi);
            let v = ctx
                .l_value_twisted(&d, digits)
                .context(|| format!("L({label}, {} mod {m}, 1)", chi.id()))?;
            rows.push(LValueRow { label: label.clone(), modulus: m, char_id: chi.id(), value: pair(v) });
        }
    }
    Ok(rows)
}

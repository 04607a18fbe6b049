//! One function per subcommand, each returning the structured report.

use std::collections::BTreeSet;

use reducibility_core::abelian::{
    attached_primes, check_additivity, quotient_monotonicity_check, secondary_representation,
    sum_reducibility_index_bruteforce, sum_reducibility_index_formula, ELEMENT_CAP, LATTICE_CAP,
    QUOTIENT_CAP,
};
use reducibility_core::base_change::{check_base_change, BaseChange, BaseChangeReport};
use reducibility_core::bass::{
    ass_by_colon_scan, is_ir_one, localized_ideal, reducibility_index_by_bass, MonomialPrime,
};
use reducibility_core::decompose;
use reducibility_core::duality::{
    check_finite_length, min_cover_oracle, sum_irreducible_iff_dual_irreducible,
    sum_irreducible_representation, Staircase, MIN_COVER_CAP,
};
use reducibility_core::parse::{
    canonical_group, parse_field_change, parse_group, parse_ideal, parse_polynomial, IdealInput,
};
use reducibility_core::univariate::{base_change_field, factor};
use reducibility_core::verify::{self, Config, Scope};
use reducibility_core::{Error, PolyRing, RingContext};
use serde_json::{json, Value};

pub enum Failure {
    Input(String),
    Core(Error),
}

impl From<String> for Failure {
    fn from(message: String) -> Self {
        Failure::Input(message)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = Result<Value, Failure>;

fn header(command: &str, input: String) -> Value {
    json!({
        "command": command,
        "version": env!("CARGO_PKG_VERSION"),
        "input": input,
    })
}

fn merge(mut base: Value, extra: Value) -> Value {
    if let (Value::Object(b), Value::Object(e)) = (&mut base, extra) {
        b.extend(e);
    }
    base
}

fn proper_ideal(text: &str) -> Result<IdealInput, Failure> {
    let input = parse_ideal(text)?;
    if input.ideal.is_unit() {
        return Err(Error::UnitIdeal.into());
    }
    Ok(input)
}

pub fn decompose(text: &str) -> Outcome {
    let IdealInput { ring, ideal } = proper_ideal(text)?;
    let input = IdealInput {
        ring: ring.clone(),
        ideal: ideal.clone(),
    };
    let d = decompose::decompose(&ideal)?;
    let bass = reducibility_index_by_bass(&ideal)?;
    let scanned = ass_by_colon_scan(&ideal)?;
    let from_components: BTreeSet<MonomialPrime> = bass.entries.keys().cloned().collect();
    let per_prime_ok = bass
        .entries
        .iter()
        .all(|(p, e)| d.count_with_support(p.support()) == e.mu0);
    let agree = d.ir() == bass.ir_by_formula && scanned == from_components && per_prime_ok;
    let ir_one = is_ir_one(&ideal)?;

    let components: Vec<Value> = d
        .components()
        .iter()
        .map(|c| json!({ "ideal": c.display(&ring), "exponents": c.bounds() }))
        .collect();
    let primes: Vec<Value> = bass
        .entries
        .iter()
        .map(|(p, e)| {
            json!({
                "prime": p.display(&ring),
                "support": p.names(&ring),
                "mu0": e.mu0,
                "components": d.count_with_support(p.support()),
                "socle_witnesses": e.witnesses.iter().map(|w| ring.fmt_monomial(w)).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(merge(
        header("decompose", input.canonical()),
        json!({
            "ir": d.ir(),
            "domain_case": d.is_domain_case(),
            "components": components,
            "associated_primes": primes,
            "ir_by_bass": bass.ir_by_formula,
            "ass_by_colon_scan": scanned.iter().map(|p| p.display(&ring)).collect::<Vec<_>>(),
            "ir_one": { "holds": ir_one.holds, "reason": ir_one.reason },
            "agreement": {
                "ir_by_decomposition": d.ir(),
                "ir_by_bass": bass.ir_by_formula,
                "ass_routes_agree": scanned == from_components,
                "components_per_prime_equal_mu0": per_prime_ok,
            },
            "passed": agree,
        }),
    ))
}

fn base_change_json(r: &BaseChangeReport) -> Value {
    serde_json::to_value(r).expect("report serializes")
}

pub fn basechange(text: &str, descriptor: &str) -> Outcome {
    if descriptor.trim_start().starts_with("field") {
        let change = parse_field_change(descriptor)?;
        let input = parse_polynomial(text)?;
        let (base, target) = change.resolve(&input)?;
        let report = base_change_field(&base, &target, &input.poly)?;
        let base_ring = PolyRing::new(&base);
        let target_ring = PolyRing::new(&target);
        let before = factor(&base, &input.poly)?;
        let after = factor(&target, &input.poly)?;
        return Ok(merge(
            header("basechange", input.canonical()),
            json!({
                "descriptor": format!("field:GF({})->GF({})", base.size(), target.size()),
                "target_modulus": if target.is_prime_field() { Value::Null } else { Value::from(target.modulus_string()) },
                "factorization_before": before.display(&base_ring),
                "factorization_after": after.display(&target_ring),
                "report": base_change_json(&report),
                "passed": report.passed(),
            }),
        ));
    }
    let input = parse_ideal(text)?;
    let change = BaseChange::parse(descriptor, &input.ring)?;
    let report = check_base_change(&input.ideal, &change, Some(&input.ring))?;
    let target = match &change {
        BaseChange::Extend(extra) => {
            let ring = input.ring.extend(*extra);
            json!({ "ring": ring.names(), "ideal": ring.fmt_ideal(&input.ideal.extend(*extra)) })
        }
        BaseChange::Invert(vars) => {
            let kept: Vec<usize> = (0..input.ring.var_count())
                .filter(|i| !vars.contains(i))
                .collect();
            let local = localized_ideal(&input.ideal, &MonomialPrime::new(kept.iter().copied()));
            match input.ring.restrict(&kept) {
                Some(ring) => json!({ "ring": ring.names(), "ideal": ring.fmt_ideal(&local) }),
                None => json!({ "ring": [], "ideal": if local.is_unit() { "(1)" } else { "(0)" } }),
            }
        }
    };
    let descriptor = match &change {
        BaseChange::Extend(k) => format!("extend:{k}"),
        BaseChange::Invert(vars) => format!(
            "invert:{}",
            vars.iter()
                .map(|&i| input.ring.names()[i].as_str())
                .collect::<Vec<_>>()
                .join(",")
        ),
    };
    Ok(merge(
        header("basechange", input.canonical()),
        json!({
            "descriptor": descriptor,
            "target": target,
            "report": base_change_json(&report),
            "passed": report.passed(),
        }),
    ))
}

fn staircase_picture(g: &Staircase, ring: &RingContext) -> Value {
    match g.render_grid() {
        Some(rows) => Value::from(rows.join("\n")),
        None => Value::from(
            g.monomials()
                .iter()
                .map(|u| ring.fmt_monomial(u))
                .collect::<Vec<_>>(),
        ),
    }
}

pub fn dual(text: &str) -> Outcome {
    let input = proper_ideal(text)?;
    let (ring, ideal) = (&input.ring, &input.ideal);
    if !ideal.is_finite_colength() {
        return Err(Error::InfiniteColength.into());
    }
    let g = Staircase::from_ideal(ideal)?;
    let check = check_finite_length(ideal)?;
    let rep = sum_irreducible_representation(&g)?;
    let (irreducible, sum_irreducible) = sum_irreducible_iff_dual_irreducible(ideal)?;
    let covers = if g.len() <= MIN_COVER_CAP {
        let o = min_cover_oracle(&g)?;
        json!({
            "minimum": o.minimum,
            "irredundant_cover_sizes": o.irredundant_cover_sizes,
            "irredundant_cover_count": o.irredundant_cover_count,
        })
    } else {
        Value::Null
    };
    let parts: Vec<Value> = rep
        .generators
        .iter()
        .zip(&rep.parts)
        .map(|(u, part)| json!({ "generator": ring.fmt_monomial(u), "size": part.len() }))
        .collect();
    Ok(merge(
        header("dual", input.canonical()),
        json!({
            "model": "D(R/I) is the staircase of standard monomials with x_i acting as u* -> (u/x_i)*; the graded ring stands in for its completion",
            "length": g.len(),
            "maximal_elements": g.maximal_elements().iter().map(|u| ring.fmt_monomial(u)).collect::<Vec<_>>(),
            "staircase": staircase_picture(&g, ring),
            "sum_representation": parts,
            "ir_prime": rep.ir_prime(),
            "min_cover": covers,
            "indices": {
                "ir_by_decomposition": check.ir_by_decomposition,
                "ir_by_bass": check.ir_by_bass,
                "ir_prime": check.ir_prime,
                "min_cover": check.min_cover,
                "covers_equicardinal": check.covers_equicardinal,
            },
            "zero_irreducible": irreducible,
            "dual_sum_irreducible": sum_irreducible,
            "passed": check.passed && irreducible == sum_irreducible,
        }),
    ))
}

pub fn abelian(text: &str, max_order: u64) -> Outcome {
    if max_order > LATTICE_CAP {
        return Err(format!("--max-order is capped at {LATTICE_CAP}").into());
    }
    let g = parse_group(text)?;
    if g.is_trivial() {
        return Err(Error::TrivialGroup.into());
    }
    let formula = sum_reducibility_index_formula(&g);
    let att = attached_primes(&g)?;
    let mut passed = true;

    let secondary = if g.order() <= ELEMENT_CAP {
        let rep = secondary_representation(&g)?;
        passed &= rep.is_valid() && rep.primes() == att;
        let components: Vec<Value> = rep
            .components
            .iter()
            .map(|c| {
                json!({
                    "prime": c.prime,
                    "structure": c.structure.to_string(),
                    "order": c.subgroup.order(),
                    "killed_by": format!("{}^{}", c.prime, c.nilpotency_exponent),
                    "nilpotent": c.nilpotent,
                    "surjective_off_prime": c.surjective_off_prime,
                })
            })
            .collect();
        json!({ "components": components, "sums_to_group": rep.sums_to_group })
    } else {
        Value::Null
    };

    let bruteforce = if g.order() <= max_order {
        let b = sum_reducibility_index_bruteforce(&g)?;
        passed &= b.equicardinal() && b.index == formula;
        json!({
            "ir_prime": b.index,
            "representation_sizes": b.sizes,
            "representation_count": b.representation_count,
        })
    } else {
        Value::Null
    };

    let parts_in_cap = g.primes().iter().all(|&p| g.p_part(p).order() <= max_order);
    let additivity = if parts_in_cap {
        let r = check_additivity(&g)?;
        passed &= r.passed;
        json!({
            "per_prime": r.per_prime.iter().map(|(p, v)| json!({ "prime": p, "ir_prime": v })).collect::<Vec<_>>(),
            "sum": r.per_prime.values().sum::<usize>(),
            "formula": r.formula,
            "passed": r.passed,
            "note": "attached primes of a finite group are maximal, so none is embedded",
        })
    } else {
        Value::Null
    };

    let quotients = if g.order() <= QUOTIENT_CAP.min(max_order) {
        let r = quotient_monotonicity_check(&g)?;
        passed &= r.passed;
        json!({
            "subgroups_checked": r.subgroups_checked,
            "max_quotient_ir_prime": r.max_quotient_ir_prime,
            "violations": r.violations,
        })
    } else {
        Value::Null
    };
    passed &= formula >= att.len();

    Ok(merge(
        header("abelian", canonical_group(&g)),
        json!({
            "order": g.order(),
            "attached_primes": att,
            "ir_prime_formula": formula,
            "bruteforce": bruteforce,
            "secondary_representation": secondary,
            "additivity": additivity,
            "quotient_monotonicity": quotients,
            "passed": passed,
        }),
    ))
}

pub fn selftest(scope: Scope, seed: u64, max_order: u64) -> Outcome {
    if max_order > LATTICE_CAP {
        return Err(format!("--max-order is capped at {LATTICE_CAP}").into());
    }
    let report = verify::run(scope, Config { seed, max_order });
    let suites: Vec<Value> = report
        .suites
        .iter()
        .map(|s| {
            json!({
                "suite": s.suite,
                "result": s.result,
                "seeded": s.seeded,
                "cases": s.cases,
                "failed": s.failed,
                "first_failures": s.first_failures,
            })
        })
        .collect();
    let by_result: Vec<Value> = report
        .by_result()
        .iter()
        .map(|(r, s)| json!({ "result": r, "suites": s.suites, "cases": s.cases, "failed": s.failed }))
        .collect();
    let untested: Vec<Value> = report
        .documented_untested
        .iter()
        .map(
            |u| json!({ "result": u.result, "status": "documented, untested", "reason": u.reason }),
        )
        .collect();
    Ok(merge(
        header(
            "selftest",
            format!(
                "--scope {} --seed {seed} --max-order {}",
                report.scope, report.max_order
            ),
        ),
        json!({
            "seed": seed,
            "suites": suites,
            "summary": by_result,
            "documented_untested": untested,
            "passed": report.passed(),
        }),
    ))
}

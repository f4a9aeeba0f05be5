//! The verification suites behind `yhlink verify`: each returns labeled
//! pass/fail checks so the caller can print a report and pick an exit
//! code. Resource-budget overruns surface as errors, not failures.

use std::collections::BTreeMap;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use yokonuma::iso::{psi_forward, psi_inverse, verify_relations, BlockMatrix};
use yokonuma::link::{
    check_support_reduction, delta_image, rho_invariant, GammaMode, InvariantOptions,
};
use yokonuma::trace::{ocneanu_trace, rho_element, rho_tilde_element, TraceEvaluator};
use yokonuma::{
    parse_poly, Budget, BraidWord, CycNumber, LaurentPoly, Monomial, Perm, RhoSpec, TraceError,
    VarId, YElement, YKey,
};

use crate::wordgen::{random_conjugator, random_word, WordShape};

/// One labeled outcome inside a suite report.
#[derive(Clone, Debug)]
pub struct Check {
    pub label: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn ok(label: impl Into<String>) -> Self {
        Check {
            label: label.into(),
            pass: true,
            detail: String::new(),
        }
    }

    fn from_failures(label: impl Into<String>, total: usize, failures: Vec<String>) -> Self {
        if failures.is_empty() {
            let mut c = Check::ok(label);
            c.detail = format!("{total} cases");
            c
        } else {
            Check {
                label: label.into(),
                pass: false,
                detail: format!(
                    "{} of {total} cases failed; first: {}",
                    failures.len(),
                    failures[0]
                ),
            }
        }
    }
}

fn default_budget(max_degree: Option<i64>) -> Budget {
    let mut b = Budget::default();
    if let Some(m) = max_degree {
        b.max_x_degree = m;
    }
    b
}

fn all_perms(n: usize) -> Vec<Perm> {
    if n == 1 {
        return vec![Perm::identity(1)];
    }
    let mut out = Vec::new();
    for w in all_perms(n - 1) {
        let img = w.images();
        for slot in 0..n {
            let mut v: Vec<usize> = img.iter().map(|&x| x + usize::from(x >= slot)).collect();
            v.push(slot);
            out.push(Perm::from_images(v));
        }
    }
    out
}

fn random_basis_element(rng: &mut ChaCha8Rng, d: u32, n: usize, max_wind: i64) -> YElement {
    let perms = all_perms(n);
    let mut key = YKey::unit(n);
    key.w = perms[rng.gen_range(0..perms.len())].clone();
    for j in 0..n {
        key.t[j] = rng.gen_range(0..d);
        key.x[j] = rng.gen_range(-max_wind..=max_wind);
    }
    YElement::from_key(d, n, key, LaurentPoly::integer(1))
}

// ---------------------------------------------------------------- iso --

/// Relations on generator images, invertibility on the low-degree basis,
/// and the morphism property on random pairs.
pub fn iso_suite(
    d: Option<u32>,
    n: Option<usize>,
    samples: usize,
    seed: u64,
) -> Result<Vec<Check>, TraceError> {
    let contexts: Vec<(u32, usize)> = match (d, n) {
        (Some(d), Some(n)) => vec![(d, n)],
        (Some(d), None) => vec![(d, 2), (d, 3)],
        (None, Some(n)) => vec![(2, n), (3, n)],
        (None, None) => vec![(2, 2), (2, 3), (3, 2), (3, 3)],
    };
    let mut checks = Vec::new();
    for &(d, n) in &contexts {
        let label = format!("generator relations d={d} n={n}");
        match verify_relations(d, n) {
            Ok(()) => checks.push(Check::ok(label)),
            Err(why) => checks.push(Check {
                label,
                pass: false,
                detail: why,
            }),
        }
    }
    for &(d, n) in &contexts {
        if (d as usize).pow(n as u32) > 16 {
            continue; // keep the exhaustive pass small
        }
        let mut failures = Vec::new();
        let mut total = 0;
        for el in low_degree_basis(d, n) {
            total += 1;
            if psi_inverse(&psi_forward(&el)) != el {
                failures.push(format!("basis element of d={d} n={n}"));
            }
        }
        checks.push(Check::from_failures(
            format!("round trip on the low-degree basis d={d} n={n}"),
            total,
            failures,
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for &(d, n) in &contexts {
        let mut failures = Vec::new();
        for k in 0..samples {
            let a = random_basis_element(&mut rng, d, n, 1)
                .add(&random_basis_element(&mut rng, d, n, 1).scale(&parse_poly("v", d).unwrap()));
            let b = random_basis_element(&mut rng, d, n, 1);
            if psi_forward(&a.mul(&b)) != psi_forward(&a).mul(&psi_forward(&b)) {
                failures.push(format!("pair {k}"));
            }
        }
        checks.push(Check::from_failures(
            format!("multiplicativity on random pairs d={d} n={n}"),
            samples,
            failures,
        ));
    }
    Ok(checks)
}

fn low_degree_basis(d: u32, n: usize) -> Vec<YElement> {
    let mut torus = vec![vec![0u32; n]];
    for j in 0..n {
        let mut more = Vec::new();
        for t in &torus {
            for a in 1..d {
                let mut s = t.clone();
                s[j] = a;
                more.push(s);
            }
        }
        torus.extend(more);
    }
    let mut loops = vec![vec![0i64; n]];
    for j in 0..n {
        for s in [-1i64, 1] {
            let mut l = vec![0i64; n];
            l[j] = s;
            loops.push(l);
        }
    }
    let mut out = Vec::new();
    for w in all_perms(n) {
        for t in &torus {
            for x in &loops {
                out.push(YElement::from_key(
                    d,
                    n,
                    YKey {
                        t: t.clone(),
                        x: x.clone(),
                        w: w.clone(),
                    },
                    LaurentPoly::integer(1),
                ));
            }
        }
    }
    out
}

// ------------------------------------------------------------- traces --

/// The winding-aware evaluator against the classical trace, plus
/// invariance of results under randomized reduction order.
pub fn trace_consistency_checks(samples: usize, seed: u64) -> Result<Vec<Check>, TraceError> {
    let mut checks = Vec::new();
    let mut ev = TraceEvaluator::new(BTreeMap::new(), Budget::default());

    let mut failures = Vec::new();
    let mut total = 0;
    for w in all_perms(3) {
        total += 1;
        let mut key = YKey::unit(3);
        key.w = w.clone();
        let el = YElement::from_key(1, 3, key, LaurentPoly::integer(1));
        if ev.eval_element(1, &el)? != ocneanu_trace(&el) {
            failures.push(format!("word {:?}", w.images()));
        }
    }
    checks.push(Check::from_failures(
        "winding evaluator matches the classical trace on plain three-strand words",
        total,
        failures,
    ));

    let trefoil = YElement::one(1, 2).rmul_g(1).rmul_g(1).rmul_g(1);
    let got = ocneanu_trace(&trefoil);
    let expect = parse_poly("2*u^2 - u^4 + v^2", 1).unwrap();
    checks.push(if got == expect {
        Check::ok("frozen closed three-crossing value")
    } else {
        Check {
            label: "frozen closed three-crossing value".into(),
            pass: false,
            detail: format!("got {got}"),
        }
    });

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for k in 0..samples {
        let a = random_basis_element(&mut rng, 1, 3, 1);
        let b = random_basis_element(&mut rng, 1, 3, 1).scale(&parse_poly("u^2", 1).unwrap());
        let el = a.add(&b);
        let reference = ev.eval_element(1, &el)?;
        let rebuilt = shuffled_rebuild(&mut rng, &el);
        if rebuilt != el {
            failures.push(format!("sample {k}: normal forms differ"));
            continue;
        }
        if ev.eval_element(1, &rebuilt)? != reference {
            failures.push(format!("sample {k}: traces differ"));
        }
    }
    checks.push(Check::from_failures(
        "trace is invariant under randomized reduction order",
        samples,
        failures,
    ));
    Ok(checks)
}

/// Rebuild an element by multiplying its letters back together in a
/// random evaluation order: random reduced words for the permutation
/// part, random slot order for the winding part, shuffled term order.
fn shuffled_rebuild(rng: &mut ChaCha8Rng, el: &YElement) -> YElement {
    let d = el.d();
    let n = el.n();
    let mut terms: Vec<(YKey, LaurentPoly)> =
        el.terms().map(|(k, c)| (k.clone(), c.clone())).collect();
    terms.shuffle(rng);
    let mut acc = YElement::zero(d, n);
    for (key, coeff) in terms {
        let mut part = YElement::one(d, n);
        for j in 1..=n {
            if key.t[j - 1] != 0 {
                part = part.mul(&YElement::t(d, n, j, key.t[j - 1] as i64));
            }
        }
        let mut slots: Vec<usize> = (0..n).collect();
        slots.shuffle(rng);
        for j in slots {
            if key.x[j] != 0 {
                part = part.rmul_x_pow(j, key.x[j]);
            }
        }
        // a random reduced word, letter by letter
        let mut tail = Vec::new();
        let mut v = key.w.clone();
        loop {
            let descents: Vec<usize> = (1..n).filter(|&i| !v.ascends_at(i)).collect();
            if descents.is_empty() {
                break;
            }
            let i = descents[rng.gen_range(0..descents.len())];
            tail.push(i);
            v = v.rmul_simple(i);
        }
        tail.reverse();
        for i in tail {
            part = part.rmul_g(i);
        }
        acc = acc.add(&part.scale(&coeff));
    }
    acc
}

/// Symmetry and one-strand stability of the color-set trace families,
/// with sample elements drawn both from the basis and from braid-letter
/// images under each gamma mode.
pub fn trace_axiom_checks(seed: u64) -> Result<Vec<Check>, TraceError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // products of two sampled elements reach twice the per-element degree
    let budget = Budget {
        max_x_degree: 16,
        ..Budget::default()
    };
    let mut checks = Vec::new();
    for d in 1..=2u32 {
        let supports: Vec<Vec<u32>> = match d {
            1 => vec![vec![1]],
            _ => vec![vec![1], vec![2], vec![1, 2]],
        };
        for support in &supports {
            let spec = RhoSpec::symbolic(d, support);
            for gamma in [GammaMode::Symbolic, GammaMode::One] {
                let tag = match gamma {
                    GammaMode::Symbolic => "symbolic",
                    _ => "specialized",
                };
                let mut failures = Vec::new();
                let mut total = 0;
                for k in 0..10 {
                    let x = sample_mixed_element(&mut rng, d, 3, &gamma)?;
                    let y = sample_mixed_element(&mut rng, d, 3, &gamma)?;
                    total += 1;
                    if rho_element(&x.mul(&y), &spec, budget)?
                        != rho_element(&y.mul(&x), &spec, budget)?
                    {
                        failures.push(format!("pair {k}"));
                    }
                }
                checks.push(Check::from_failures(
                    format!("trace symmetry d={d} S={support:?} gamma {tag}"),
                    total,
                    failures,
                ));

                let mut failures = Vec::new();
                let mut total = 0;
                for k in 0..8 {
                    let x = sample_mixed_element(&mut rng, d, 2, &gamma)?;
                    let up = x.embed(3);
                    let base = rho_element(&x, &spec, budget)?;
                    total += 1;
                    let pos = rho_element(&up.mul(&YElement::g(d, 3, 2)), &spec, budget)?;
                    let neg = rho_element(&up.mul(&YElement::g_inv(d, 3, 2)), &spec, budget)?;
                    if pos != base || neg != base {
                        failures.push(format!("sample {k}"));
                    }
                }
                checks.push(Check::from_failures(
                    format!("one-strand stability d={d} S={support:?} gamma {tag}"),
                    total,
                    failures,
                ));
            }
        }
    }
    Ok(checks)
}

/// A product of a random basis element with the image of a short random
/// braid word, so the gamma mode is actually exercised.
fn sample_mixed_element(
    rng: &mut ChaCha8Rng,
    d: u32,
    n: usize,
    gamma: &GammaMode,
) -> Result<YElement, TraceError> {
    let shape = WordShape {
        min_strands: n,
        max_strands: n,
        max_len: 3,
        max_loops: 1,
        frames: d > 1,
        frame_span: 1,
    };
    let word = random_word(rng, shape);
    let img = delta_image(&word, d, gamma)?;
    Ok(random_basis_element(rng, d, n, 1).mul(&img))
}

// ------------------------------------------------------------- markov --

/// Invariance of the basic invariant under conjugation and both
/// stabilizations on random framed affine words.
pub fn markov_suite(
    samples: usize,
    seed: u64,
    budget: Option<i64>,
) -> Result<Vec<Check>, TraceError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let opts = InvariantOptions {
        gamma: GammaMode::Symbolic,
        budget: default_budget(budget),
    };
    let mut conj_failures = Vec::new();
    let mut stab_failures = Vec::new();
    for k in 0..samples {
        let d = rng.gen_range(1..=3u32);
        let set_size = rng.gen_range(1..=2.min(d));
        let mut colors: Vec<u32> = (1..=d).collect();
        colors.shuffle(&mut rng);
        let mut support: Vec<u32> = colors.into_iter().take(set_size as usize).collect();
        support.sort_unstable();
        let spec = RhoSpec::symbolic(d, &support);
        let word = random_word(&mut rng, WordShape::framed(4, 10, 2, 2));
        let base = rho_invariant(&word, &spec, &opts)?;

        let conj = word.conjugate(&random_conjugator(&mut rng, word.n(), d > 1));
        if rho_invariant(&conj, &spec, &opts)? != base {
            conj_failures.push(format!("word {k}: {word}"));
        }
        for negative in [false, true] {
            if rho_invariant(&word.stabilize(negative), &spec, &opts)? != base {
                stab_failures.push(format!("word {k}: {word}"));
            }
        }
    }
    Ok(vec![
        Check::from_failures("invariance under conjugation", samples, conj_failures),
        Check::from_failures(
            "invariance under positive and negative stabilization",
            samples,
            stab_failures,
        ),
    ])
}

// -------------------------------------------------------------- skein --

/// The three-term relation between a positive insertion, a negative
/// insertion, and the plain word, at one color.
pub fn skein_suite(samples: usize, seed: u64) -> Result<Vec<Check>, TraceError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let opts = InvariantOptions::default();
    let spec = RhoSpec::symbolic(1, &[1]);
    let u2 = parse_poly("u^2", 1).unwrap();
    let v = parse_poly("v", 1).unwrap();
    let mut failures = Vec::new();
    for k in 0..samples {
        let word = random_word(&mut rng, WordShape::classical(4, 8));
        let pos = rng.gen_range(0..=word.letters().len());
        let i = rng.gen_range(1..word.n());
        let insert = |inverse: bool| {
            let mut letters = word.letters().to_vec();
            letters.insert(
                pos,
                yokonuma::link::BraidLetter::Sigma { i, inverse },
            );
            BraidWord::new(word.n(), letters)
        };
        let p_plus = rho_invariant(&insert(false), &spec, &opts)?;
        let p_minus = rho_invariant(&insert(true), &spec, &opts)?;
        let p_base = rho_invariant(&word, &spec, &opts)?;
        if p_plus.sub(&u2.mul(&p_minus)) != v.mul(&p_base) {
            failures.push(format!("word {k}: {word} at position {pos}"));
        }
    }
    Ok(vec![Check::from_failures(
        "three-term crossing relation",
        samples,
        failures,
    )])
}

// -------------------------------------------------------------- props --

/// The block quadratic identity for the braid-letter images with
/// symbolic gamma.
pub fn quadratic_checks() -> Result<Vec<Check>, TraceError> {
    let gamma = LaurentPoly::var(VarId::Gamma);
    let u2 = parse_poly("u^2", 1).unwrap();
    let v = parse_poly("v", 1).unwrap();
    let mut failures = Vec::new();
    let mut total = 0;
    for d in 1..=3u32 {
        for n in 2..=3usize {
            for i in 1..n {
                total += 1;
                let word = BraidWord::new(
                    n,
                    vec![yokonuma::link::BraidLetter::Sigma { i, inverse: false }],
                );
                let a = psi_forward(&delta_image(&word, d, &GammaMode::Symbolic)?);
                let e = psi_forward(&YElement::e(d, n, i));
                let id = BlockMatrix::identity(d, n);
                let gg = gamma.mul(&gamma);
                let one_minus_gg = LaurentPoly::one().sub(&gg);
                let target = a
                    .mul(&a)
                    .sub(&id.scale(&u2.mul(&gg)))
                    .sub(&e.scale(&u2.mul(&one_minus_gg)))
                    .sub(&e.mul(&a).scale(&v));
                if !target.is_zero() {
                    failures.push(format!("d={d} n={n} i={i}"));
                }
            }
        }
    }
    Ok(vec![Check::from_failures(
        "block quadratic identity with symbolic gamma",
        total,
        failures,
    )])
}

/// The winding-and-framing rule of the averaged family: pushing one
/// twisted power and one framing letter through the functional multiplies
/// by the color-averaged parameter.
pub fn winding_checks(seed: u64) -> Result<Vec<Check>, TraceError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = 2u32;
    let dset = [1u32, 2];
    let params: BTreeMap<u32, yokonuma::TraceParams> = BTreeMap::new();
    let budget = Budget::default();
    let mut failures = Vec::new();
    let mut total = 0;
    for n in 2..=3usize {
        for a in [-1i64, 0, 1] {
            for b in 1..=2i64 {
                let mut hs = vec![YElement::one(d, n - 1)];
                for _ in 0..4 {
                    hs.push(random_basis_element(&mut rng, d, n - 1, 1));
                }
                for h in hs {
                    total += 1;
                    let up = h.embed(n);
                    let twisted = if a == 0 {
                        YElement::one(d, n)
                    } else {
                        YElement::x_twisted(d, n, n, a)
                    };
                    let el = twisted.mul(&YElement::t(d, n, n, b)).mul(&up);
                    let lhs = rho_tilde_element(&el, &dset, &params, budget)?;
                    let rhs = averaged_parameter(d, &dset, a, b).mul(&rho_tilde_element(
                        &up,
                        &dset,
                        &params,
                        budget,
                    )?);
                    if lhs != rhs {
                        failures.push(format!("n={n} a={a} b={b}"));
                    }
                }
            }
        }
    }
    Ok(vec![Check::from_failures(
        "winding and framing letters peel off as averaged parameters",
        total,
        failures,
    )])
}

/// The averaged parameter: (1/|D|) sum over colors k in D of x_a^(k)
/// times the k-th root power xi_k^b, with x_0^(k) = 1.
fn averaged_parameter(d: u32, dset: &[u32], a: i64, b: i64) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    for &k in dset {
        let mut root = CycNumber::one();
        for _ in 0..b.rem_euclid(d as i64) {
            root = root.checked_mul(&CycNumber::xi(d, k)).unwrap();
        }
        let factor = if a == 0 {
            LaurentPoly::constant(root)
        } else {
            LaurentPoly::term(
                Monomial::var(VarId::XParam { color: k, winding: a }, 1),
                root,
            )
        };
        acc = acc.add(&factor);
    }
    acc.mul(&LaurentPoly::fraction(1, dset.len() as i64))
}

/// Equality of the invariant across color sets of the same size on
/// non-framed words.
pub fn reduction_checks(samples: usize, seed: u64) -> Result<Vec<Check>, TraceError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let opts = InvariantOptions::default();
    let mut failures = Vec::new();
    for k in 0..samples {
        // a two-color support needs two components to contribute, so
        // force that on half the samples instead of comparing 0 with 0
        let word = loop {
            let w = random_word(&mut rng, WordShape::affine(3, 6, 2));
            if k % 2 == 0 || w.components() >= 2 {
                break w;
            }
        };
        let report = check_support_reduction(&word, 3, &[1, 3], &opts)?;
        if !report.holds() {
            failures.push(format!("word {k}: {word}"));
        }
    }
    Ok(vec![Check::from_failures(
        "support reduction on non-framed words",
        samples,
        failures,
    )])
}

/// Stability of the averaged family when a strand is appended.
pub fn averaged_stability_checks(seed: u64) -> Result<Vec<Check>, TraceError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let budget = Budget::default();
    let dset = [1u32, 2];
    let params: BTreeMap<u32, yokonuma::TraceParams> = BTreeMap::new();
    let c = yokonuma::trace::free_strand_factor();
    let scale = LaurentPoly::integer(dset.len() as i64).mul(&c);
    let mut failures = Vec::new();
    let mut total = 0;
    for _ in 0..8 {
        let h = random_basis_element(&mut rng, 2, 2, 1);
        total += 1;
        let lhs = rho_tilde_element(&h.embed(3), &dset, &params, budget)?;
        let rhs = scale.mul(&rho_tilde_element(&h, &dset, &params, budget)?);
        if lhs != rhs {
            failures.push("appended-strand sample".to_string());
        }
    }
    Ok(vec![Check::from_failures(
        "averaged family gains one free-strand factor per appended strand",
        total,
        failures,
    )])
}

/// All property checks, or one named subset.
pub fn props_suite(
    prop: Option<&str>,
    samples: Option<usize>,
    seed: u64,
    budget: Option<i64>,
) -> Result<Vec<Check>, TraceError> {
    let run = |name: &str| prop.map_or(true, |p| p == name);
    let mut checks = Vec::new();
    let mut matched = false;
    if run("markov") {
        matched = true;
        checks.extend(markov_suite(samples.unwrap_or(200), seed, budget)?);
    }
    if run("skein") {
        matched = true;
        checks.extend(skein_suite(samples.unwrap_or(100), seed)?);
    }
    if run("quadratic") {
        matched = true;
        checks.extend(quadratic_checks()?);
    }
    if run("winding") {
        matched = true;
        checks.extend(winding_checks(seed)?);
        checks.extend(averaged_stability_checks(seed)?);
    }
    if run("reduction") {
        matched = true;
        checks.extend(reduction_checks(samples.unwrap_or(20), seed)?);
    }
    if !matched {
        return Err(TraceError::Parameter(format!(
            "unknown property {:?}; expected markov, skein, quadratic, winding, or reduction",
            prop.unwrap_or("")
        )));
    }
    Ok(checks)
}

//! The individual sweeps behind [`super::verify`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Display;

use crate::error::{Error, Result};
use crate::grothendieck::{
    expand, grassmannian_pieri, groth, k_pieri_chains, lemma_1gr, lenart_transition, lensot_product,
    pieri_chain, symp_groth, two_power_product, f_stat, p_stat, GrothExpansion,
};
use crate::involutions::{Family, FpfInvolution, Involution};
use crate::ortho::{self, ClosedFamily, ShiftMode, StableKind};
use crate::permgroup::Permutation;
use crate::polyring::MultiPoly;

use super::{run_cases, Failure};

const SHOWN: usize = 240;

fn clip(s: String) -> String {
    if s.chars().count() <= SHOWN {
        s
    } else {
        let head: String = s.chars().take(SHOWN).collect();
        format!("{head}…")
    }
}

fn fail(input: impl Display, expected: impl Display, actual: impl Display) -> Option<Failure> {
    Some(Failure {
        input: input.to_string(),
        expected: clip(expected.to_string()),
        actual: clip(actual.to_string()),
    })
}

fn check_eq<A: PartialEq + Display>(input: impl Display, expected: &A, actual: &A) -> Option<Failure> {
    if expected == actual {
        None
    } else {
        fail(input, expected, actual)
    }
}

fn set_text(s: &BTreeSet<Permutation>) -> String {
    let v: Vec<String> = s.iter().map(|w| w.to_string()).collect();
    format!("{{{}}}", v.join(", "))
}

fn map_text(m: &BTreeMap<Permutation, u64>) -> String {
    let v: Vec<String> = m.iter().map(|(w, c)| format!("{w}:{c}")).collect();
    format!("{{{}}}", v.join(", "))
}

fn vexillary(n: usize) -> Vec<Involution> {
    Involution::all_vexillary(n)
}

fn perms_up_to_length(n: usize, max_len: usize) -> Vec<Permutation> {
    Permutation::all(n).into_iter().filter(|v| v.length() <= max_len).collect()
}

fn strict_partitions(max_part: usize) -> Vec<Vec<usize>> {
    (0u32..1 << max_part)
        .map(|mask| (1..=max_part).rev().filter(|&p| mask >> (p - 1) & 1 == 1).collect())
        .collect()
}

fn partitions(max_size: usize, max_parts: usize, max_part: usize) -> Vec<Vec<usize>> {
    fn rec(rem: usize, parts: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        if parts == 0 {
            return;
        }
        for p in 1..=cap.min(rem) {
            cur.push(p);
            rec(rem - p, parts - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(max_size, max_parts, max_part, &mut Vec::new(), &mut out);
    out
}

fn column(j: usize, k: usize) -> Result<Permutation> {
    Permutation::grassmannian(&vec![1; j], k)
}

type Outcome = Result<(usize, Vec<Failure>)>;

fn sweep<T: Sync>(cases: Vec<T>, jobs: usize, check: impl Fn(&T) -> Result<Option<Failure>> + Sync) -> Outcome {
    let failures = run_cases(&cases, jobs, check)?;
    Ok((cases.len(), failures))
}

pub(super) fn run(id: &str, n: usize, jobs: usize) -> Outcome {
    match id {
        "qd-thm" => {
            let cases: Vec<Involution> = vexillary(n).into_iter().filter(|z| z.is_quasi_dominant()).collect();
            sweep(cases, jobs, |z| Ok(check_eq(z, &*ortho::ortho_groth(z)?, &ortho::qd_formula(z)?)))
        }
        "ivex-thm" => sweep(vexillary(n), jobs, |z| {
            Ok(check_eq(z, &*ortho::ortho_groth(z)?, &ortho::ivex_formula(z)?))
        }),
        "iG-thm" => {
            let cases: Vec<(Involution, usize)> =
                Involution::all(n).into_iter().flat_map(|z| (1..=n).map(move |i| (z.clone(), i))).collect();
            sweep(cases, jobs, |(z, i)| {
                let i = *i;
                let lhs = ortho::invgroth(z).beta_divdiff(i);
                let rhs = if z.perm().has_right_descent(i) {
                    let y = if z.apply(i) == i + 1 {
                        Involution::from_perm(z.perm().right_mul_s(i))?
                    } else {
                        z.conj_s(i)
                    };
                    (*ortho::invgroth(&y)).clone()
                } else {
                    ortho::invgroth(z).mul(&MultiPoly::beta_term(-1, 1))
                };
                Ok(check_eq(format!("{z}, i={i}"), &rhs, &lhs))
            })
        }
        "iG-thm2" => {
            let cases: Vec<Involution> = Involution::all(n).into_iter().filter(|z| z.is_dominant()).collect();
            sweep(cases, jobs, |z| {
                let lambda: Vec<usize> = z.perm().code().into_iter().filter(|&c| c > 0).collect();
                Ok(check_eq(z, &*ortho::invgroth(z), &ortho::invgroth_dominant(&lambda)?))
            })
        }
        "dom-thm" => {
            let cases: Vec<Involution> = vexillary(n).into_iter().filter(|z| z.is_quasi_dominant()).collect();
            sweep(cases, jobs, |z| {
                let want = ortho::gco_by_path(z)?.coeffs;
                let got = ortho::dom_thm_gco(z)?;
                Ok((want != got).then(|| fail(z, map_text(&want), map_text(&got))).flatten())
            })
        }
        "orthogonal-recursion" => {
            let cases: Vec<(Involution, usize)> = vexillary(n)
                .into_iter()
                .flat_map(|z| (1..n).map(move |i| (z.clone(), i)))
                .filter(|(z, i)| {
                    let y = z.conj_s(*i);
                    y != *z && y.is_vexillary()
                })
                .collect();
            sweep(cases, jobs, |(z, i)| {
                let i = *i;
                let lhs = ortho::ortho_groth(z)?.beta_divdiff(i);
                let rhs = if z.perm().has_right_descent(i) {
                    (*ortho::ortho_groth(&z.conj_s(i))?).clone()
                } else {
                    ortho::ortho_groth(z)?.mul(&MultiPoly::beta_term(-1, 1))
                };
                Ok(check_eq(format!("{z}, i={i}"), &rhs, &lhs))
            })
        }
        "positivity" => sweep(vexillary(n), jobs, |z| {
            let direct = match ortho::gco(z) {
                Err(Error::NegativeCoefficient(m)) => return Ok(fail(z, "nonnegative", m)),
                r => r?,
            };
            let path = ortho::gco_by_path(z)?;
            Ok((direct.coeffs != path.coeffs)
                .then(|| fail(z, map_text(&direct.coeffs), map_text(&path.coeffs)))
                .flatten())
        }),
        "supp-thm" => sweep(vexillary(n), jobs, |z| {
            let up = ortho::shift_expansion(&ortho::gco_by_path(z)?.expansion, ShiftMode::Up);
            let next = ortho::gco_by_path(&z.one_times(1))?.expansion;
            let fixed = z.apply(1) == 1;
            Ok(((up == next) != fixed)
                .then(|| fail(z, format!("equality iff z(1)=1 ({fixed})"), up == next))
                .flatten())
        }),
        "shift-cor" => {
            let mut cases: Vec<(Involution, usize, char)> = Vec::new();
            for z in vexillary(n) {
                let lead = z.perm().support().first().map_or(0, |&m| m - 1);
                for m in 1..=lead.min(2) {
                    cases.push((z.clone(), m, 'a'));
                }
                if z.apply(1) == 1 {
                    for m in 1..=2 {
                        cases.push((z.clone(), m, 'b'));
                    }
                }
            }
            sweep(cases, jobs, |(z, m, part)| {
                let (small, big) = match part {
                    'a' => (z.shift_down(*m)?, z.clone()),
                    _ => (z.clone(), z.one_times(*m)),
                };
                let lifted: BTreeMap<Permutation, u64> =
                    ortho::gco_by_path(&small)?.coeffs.into_iter().map(|(w, c)| (w.one_times(*m), c)).collect();
                let mut got = ortho::gco_by_path(&big)?.coeffs;
                if *part == 'a' {
                    got.retain(|w, _| (1..=*m).all(|i| w.apply(i) == i));
                }
                Ok((lifted != got)
                    .then(|| fail(format!("({part}) {z}, m={m}"), map_text(&lifted), map_text(&got)))
                    .flatten())
            })
        }
        "b+conj" => sweep(vexillary(n), jobs, |z| {
            let supp = ortho::gco_by_path(z)?.support();
            let atoms = z.binv();
            let plus = ortho::binv_plus(z).nodes;
            if !atoms.is_subset(&supp) {
                return Ok(fail(z, format!("B_inv {} ⊆ supp", set_text(&atoms)), set_text(&supp)));
            }
            if !supp.is_subset(&plus) {
                return Ok(fail(z, format!("supp {} ⊆ B_inv⁺", set_text(&supp)), set_text(&plus)));
            }
            Ok(None)
        }),
        "supp-prop" => {
            let cases: Vec<Involution> = Involution::all(n).into_iter().filter(|z| !z.is_identity()).collect();
            sweep(cases, jobs, |z| {
                let s = z.perm().support();
                let (a, b) = (s[0], *s.last().expect("nonempty support"));
                for v in z.binv() {
                    if v.support().iter().any(|&i| i < a || i > b) {
                        return Ok(fail(z, format!("supp(v) ⊆ [{a},{b}]"), v));
                    }
                }
                for w in ortho::binv_plus(z).nodes {
                    if w.support().iter().any(|&i| i + 1 < a || i > b + 1) {
                        return Ok(fail(z, format!("supp(w) ⊆ [{},{}]", a - 1, b + 1), w));
                    }
                }
                Ok(None)
            })
        }
        "fkgsp" => {
            let cases: Vec<FpfInvolution> = (2..=n).step_by(2).flat_map(FpfInvolution::all).collect();
            sweep(cases, jobs, |z| {
                let (poly, e) = symp_groth(z);
                let back = expand(&poly)?;
                if back != e {
                    return Ok(fail(z, &e, &back));
                }
                let norm = back.normalized(z.ell_fpf())?;
                let bad: Vec<String> =
                    norm.iter().filter(|(_, c)| !c.is_one()).map(|(w, c)| format!("{w}:{c}")).collect();
                Ok((!bad.is_empty()).then(|| fail(z, "all coefficients 1", bad.join(", "))).flatten())
            })
        }
        "lenart" => {
            let cases: Vec<(Permutation, usize)> = perms_up_to_length(n, 6)
                .into_iter()
                .flat_map(|v| (1..=4).map(move |k| (v.clone(), k)))
                .collect();
            sweep(cases, jobs, |(v, k)| {
                let want = expand(&MultiPoly::c_plus_beta_x(1, *k).mul(&groth(v)))?;
                Ok(check_eq(format!("k={k}, v={v}"), &want, &lenart_transition(*k, v)))
            })
        }
        "lensot" => {
            let cases: Vec<(Permutation, usize, usize)> = perms_up_to_length(n, 6)
                .into_iter()
                .flat_map(|v| {
                    (1..=4).flat_map(|k| (1..=k).map(move |p| (p, k))).map(move |(p, k)| (v.clone(), p, k))
                })
                .collect();
            sweep(cases, jobs, |(v, p, k)| {
                let want = expand(&groth(&column(*p, *k)?).mul(&groth(v)))?;
                Ok(check_eq(format!("p={p}, k={k}, v={v}"), &want, &lensot_product(*p, *k, v)?))
            })
        }
        "pieri" => {
            let mut cases: Vec<(usize, usize, Vec<usize>)> = Vec::new();
            for k in 1..=4 {
                for lam in partitions(6, k, n) {
                    for p in 1..=k {
                        cases.push((p, k, lam.clone()));
                    }
                }
            }
            sweep(cases, jobs, |(p, k, lam)| {
                let (p, k) = (*p, *k);
                let grass = Permutation::grassmannian(lam, k)?;
                let want = expand(&groth(&column(p, k)?).mul(&groth(&grass)))?;
                let got = grassmannian_pieri(p, k, lam)?;
                if want != got {
                    return Ok(fail(format!("p={p}, k={k}, λ={lam:?}"), &want, &got));
                }
                Ok(check_eq(format!("p={p}, k={k}, λ={lam:?} vs k-Pieri rule"), &lensot_product(p, k, &grass)?, &got))
            })
        }
        "pieri-unique" => {
            let cases: Vec<(Permutation, usize)> =
                Permutation::all(n).into_iter().flat_map(|v| (1..=4).map(move |k| (v.clone(), k))).collect();
            sweep(cases, jobs, |(v, k)| {
                let chains = k_pieri_chains(v, *k, &|_, _| true);
                let mut seen = BTreeSet::new();
                for c in &chains {
                    let input = format!("v={v}, k={k}, w={}", c.end);
                    if !seen.insert(c.end.clone()) {
                        return Ok(fail(input, "one chain", "two chains"));
                    }
                    if c.steps.is_empty() {
                        continue;
                    }
                    let (f, p) = (f_stat(&c.steps), p_stat(&c.steps));
                    let d = c.end.length() - v.length();
                    if f < 1 || f + p > d {
                        return Ok(fail(input, format!("1 ≤ F, F+P ≤ {d}"), format!("F={f}, P={p}")));
                    }
                    match pieri_chain(v, &c.end, *k)? {
                        Some((found, _, _)) if found.steps == c.steps => {}
                        other => return Ok(fail(input, format!("{:?}", c.steps), format!("{:?}", other.map(|o| o.0.steps)))),
                    }
                }
                Ok(None)
            })
        }
        "1gr-lem" => {
            let cases: Vec<(usize, usize)> = (1..=n).flat_map(|m| (0..=m).map(move |j| (m, j))).collect();
            sweep(cases, jobs, |(m, j)| {
                let got = lemma_1gr(*m, *j)?;
                let v = column(*j, *m)?;
                let want = expand(&MultiPoly::c_plus_beta_x(1, m + 1).mul(&groth(&v)))?;
                if want != got {
                    return Ok(fail(format!("n={m}, j={j}"), &want, &got));
                }
                Ok(check_eq(format!("n={m}, j={j} vs transition"), &lenart_transition(m + 1, &v), &got))
            })
        }
        "prod-lem" => sweep((1..=n).collect(), jobs, |k| {
            let prod = MultiPoly::product((1..=*k).map(|i| MultiPoly::c_plus_beta_x(2, i)).collect::<Vec<_>>().iter());
            Ok(check_eq(format!("k={k}"), &expand(&prod)?, &two_power_product(*k)?))
        }),
        "igrass-cor" => {
            let cases: Vec<(Vec<usize>, usize)> = (1..=n)
                .flat_map(|m| strict_partitions(m).into_iter().map(move |mu| (mu, m)))
                .collect();
            sweep(cases, jobs, |(mu, m)| {
                let z = Involution::igrassmannian(mu, *m)?;
                Ok(check_eq(format!("μ={mu:?}, n={m}"), &*ortho::ortho_groth(&z)?, &ortho::igrass_sum(mu, *m)?))
            })
        }
        "almost-eq" => {
            const VARS: usize = 2;
            let mut cases: Vec<(Involution, Option<(Vec<usize>, usize)>)> = Vec::new();
            for m in 1..=n {
                for mu in strict_partitions(m).into_iter().filter(|mu| !mu.is_empty()) {
                    cases.push((Involution::igrassmannian(&mu, m)?, Some((mu, m))));
                }
            }
            for z in vexillary(n).into_iter().filter(|z| z.apply(1) == 1) {
                cases.push((z, None));
            }
            sweep(cases, jobs, |(z, grass)| {
                let want = ortho::stable_truncation(z, StableKind::GQ, VARS, VARS)?;
                let (label, got) = match grass {
                    Some((mu, m)) => (format!("μ={mu:?}, n={m}"), ortho::igrass_stable_truncation(mu, *m, VARS, VARS)?),
                    None => (z.to_string(), ortho::gq_shiftable_truncation(z, VARS, VARS)?),
                };
                Ok(check_eq(label, &want, &got))
            })
        }
        "stab" => {
            let cases: Vec<(Vec<usize>, usize)> = (1..=n)
                .flat_map(|m| strict_partitions(m).into_iter().filter(|mu| !mu.is_empty()).map(move |mu| (mu, m)))
                .collect();
            sweep(cases, jobs, |(mu, m)| {
                let m = *m;
                let z = Involution::igrassmannian(mu, m)?;
                let label = format!("μ={mu:?}, n={m}");
                for w in z.binv() {
                    let want = ortho::stable_groth_truncation(&w, m, 12)?;
                    let got = ortho::stab_operator(m, &groth(&w));
                    if want != got {
                        return Ok(fail(format!("{label}, w={w}"), want, got));
                    }
                }
                let ghat = ortho::invgroth(&z);
                let stabbed = ortho::stab_operator(m, &ghat);
                let (gp, _) = ortho::stable_limit(&z, StableKind::GP, m, 12)?;
                if gp != stabbed {
                    return Ok(fail(format!("{label}, GP"), gp, stabbed));
                }
                for i in 1..m {
                    let again = ortho::stab_operator(m, &ghat.isobaric(i));
                    if again != stabbed {
                        return Ok(fail(format!("{label}, stab∘π_{i}"), &stabbed, again));
                    }
                }
                Ok(None)
            })
        }
        "g-prop" => sweep((3..=n).collect(), jobs, |m| closed_check(ClosedFamily::G2n, *m)),
        "t-prop" => sweep((3..=n).collect(), jobs, |m| closed_check(ClosedFamily::TShifted, *m)),
        "wij" => {
            let cases: Vec<(usize, usize)> = (1..=n)
                .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
                .filter(|&(i, j)| i == 1 || (j - i) % 2 == 1)
                .collect();
            sweep(cases, jobs, |(i, j)| {
                let z = Involution::family(Family::W(*i, *j))?;
                let supp = ortho::gco_by_path(&z)?.support();
                let plus = ortho::binv_plus(&z).nodes;
                Ok((supp != plus)
                    .then(|| fail(format!("w_{{{i},{j}}} = {z}"), format!("|B_inv⁺| = {}", plus.len()), format!("|supp| = {}", supp.len())))
                    .flatten())
            })
        }
        "connectivity" => sweep(vexillary(n), jobs, |z| {
            Ok((!ortho::binv_plus(z).is_connected()).then(|| fail(z, "connected", "disconnected")).flatten())
        }),
        _ => Err(Error::InvalidParameter(format!("unknown sweep id {id:?}"))),
    }
}

fn closed_check(family: ClosedFamily, n: usize) -> Result<Option<Failure>> {
    let z = ortho::family_involution(family, n)?;
    let label = format!("{family:?} n={n}: {z}");
    let (atoms, plus): (BTreeSet<Permutation>, BTreeSet<Permutation>) = match family {
        ClosedFamily::TShifted => {
            let t = ortho::t_words(n)?;
            let inv = |s: &BTreeSet<Permutation>| s.iter().map(|w| w.inverse()).collect::<BTreeSet<_>>();
            let mut plus = inv(&t.x);
            plus.extend(inv(&t.y));
            plus.extend(inv(&t.z));
            (inv(&t.x), plus)
        }
        ClosedFamily::G2n => {
            let (atom, plus, _) = ortho::g_words(n)?;
            (BTreeSet::from([atom.inverse()]), plus.iter().map(|w| w.inverse()).collect())
        }
    };
    let got_atoms = z.binv();
    if got_atoms != atoms {
        return Ok(fail(format!("{label} B_inv"), set_text(&atoms), set_text(&got_atoms)));
    }
    let got_plus = ortho::binv_plus(&z).nodes;
    if got_plus != plus {
        return Ok(fail(format!("{label} B_inv⁺"), set_text(&plus), set_text(&got_plus)));
    }
    let want: GrothExpansion = ortho::closed_form(family, n)?;
    let got = ortho::gco_by_path(&z)?.expansion;
    Ok(check_eq(format!("{label} expansion"), &want, &got))
}

//! Acceptance criteria 1–10, one line each.

use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use hopf_cyclic::actions::{
    twisted_product, verify_beta, verify_module_algebra, verify_t, verify_yd, yd_perturbation_suite, HAlgebra,
};
use hopf_cyclic::catalog::*;
use hopf_cyclic::cyclic::{equivariant_complex, r_of_h, verify_cylindrical, verify_diagonal, verify_phi, verify_r_of_h, Crossed};
use hopf_cyclic::ktheory::{verify_pairing, InnerOps, PsiTrace};
use hopf_cyclic::report::Report;
use hopf_cyclic::rewrite::{podles_action, podles_sphere, rep2_uq, uq_su2};
use hopf_cyclic::Error;

struct Outcome {
    reports: Vec<Report>,
    extra: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Self { reports: Vec::new(), extra: Vec::new() }
    }

    fn add(&mut self, r: Report) {
        self.reports.push(r);
    }

    fn checks(&self) -> usize {
        self.reports.iter().map(|r| r.checks.len()).sum()
    }

    fn failures(&self) -> Vec<String> {
        let mut out: Vec<String> =
            self.reports.iter().flat_map(|r| r.failures().map(move |c| format!("{}: {c}", r.title))).collect();
        out.extend(self.extra.iter().cloned());
        out
    }
}

type Run = fn() -> Result<Outcome, Error>;

fn c1() -> Result<Outcome, Error> {
    let mut o = Outcome::new();
    let a = monopole_suite();
    if a.report.checks.len() != 4 {
        o.extra.push(format!("expected 4 monopole checks, got {}", a.report.checks.len()));
    }
    o.add(a.report);
    Ok(o)
}

fn c2() -> Result<Outcome, Error> {
    let mut o = Outcome::new();
    let e = lookup("rep2-uq").expect("catalog entry");
    o.add(e.verify());
    o.add(rep2_uq().verify(uq_su2().presentation()));
    Ok(o)
}

fn c3() -> Result<Outcome, Error> {
    let mut o = Outcome::new();
    let pairs = [sign_line(), HAlgebra::adjoint(sweedler_h4())?, HAlgebra::adjoint(ks3())?];
    for a in &pairs {
        o.add(equivariant_complex(a).verify(3, true));
    }
    Ok(o)
}

fn c4() -> Result<Outcome, Error> {
    let mut o = Outcome::new();
    let a = sign_line();
    o.add(verify_phi(&a, 2)?);
    let x = Arc::new(Crossed::new(&a)?);
    o.add(verify_diagonal(&x, 2));
    o.add(verify_cylindrical(&x, 2, 2));
    Ok(o)
}

fn c5() -> Result<Outcome, Error> {
    let mut o = Outcome::new();
    let mut yd = self_yd_algebras();
    yd.push(sign_line());
    yd.push(sign_line_braided());
    for h in [kc2(), kc3(), ks3(), sweedler_h4()] {
        let t = twisted_product(&HAlgebra::self_yd(h.clone())?, &HAlgebra::adjoint(h)?)?;
        o.add(verify_module_algebra(&t.hopf, &t.algebra, &t.action));
    }
    for (a, b) in [(sign_line(), sign_line()), (sign_line_braided(), sign_line())] {
        let t = twisted_product(&a, &b)?;
        o.add(verify_module_algebra(&t.hopf, &t.algebra, &t.action));
    }
    for a in &yd {
        o.add(verify_yd(a)?);
    }
    o.add(yd_perturbation_suite(&yd, 50, 0));
    o.add(verify_beta(&sign_line(), &regular_kc2())?);
    o.add(verify_beta(&sign_line_braided(), &regular_kc2())?);
    o.add(verify_beta(&HAlgebra::self_yd(sweedler_h4())?, &h4_rep2())?);
    o.add(verify_beta(&HAlgebra::self_yd(sweedler_h4())?, &trivial_rep(&sweedler_h4()))?);
    o.add(verify_t(&sign_line(), &regular_kc2(), &kc2_r_matrix())?);
    Ok(o)
}

fn c6() -> Result<Outcome, Error> {
    let mut o = Outcome::new();
    let cases = [(sign_line(), regular_kc2()), (sign_line_braided(), regular_kc2()), (HAlgebra::self_yd(sweedler_h4())?, h4_rep2())];
    for (a, v) in &cases {
        let t = PsiTrace::new(a, v)?;
        o.add(t.verify(2));
        o.add(t.verify_beta(2));
    }
    Ok(o)
}

fn c7() -> Result<Outcome, Error> {
    let mut o = Outcome::new();
    for e in [sign_line_idempotent(), sign_line_braided_idempotent()] {
        let (g, gi) = kc2_invertible(&e)?;
        o.add(verify_pairing(&e, &g, &gi, 1)?);
    }
    Ok(o)
}

fn c8() -> Result<Outcome, Error> {
    let mut o = Outcome::new();
    let e = sign_line_idempotent();
    let (g, _) = kc2_invertible(&e)?;
    let ops = InnerOps::new(e.algebra().halgebra(), g.elem().clone())?;
    o.add(ops.verify(2)?);
    let ops = InnerOps::new(&HAlgebra::adjoint(kc3())?, hopf_cyclic::hopf::Elem::unit(1))?;
    o.add(ops.verify(2)?);
    Ok(o)
}

fn c9() -> Result<Outcome, Error> {
    let mut o = Outcome::new();
    for h in [kc2(), kc3(), ks3(), sweedler_h4()] {
        o.add(verify_r_of_h(&h));
        let r = r_of_h(&h)?.len();
        let a = HAlgebra::trivial(h.clone(), sign_line_algebra())?;
        let cx = equivariant_complex(&a);
        for n in 0..=3 {
            let got = cx.space(n, false).dim();
            let want = 2usize.pow(n as u32 + 1) * r;
            if got != want {
                o.extra.push(format!("{}: dim C^{n} = {got}, expected {want}", h.name()));
            }
        }
    }
    Ok(o)
}

fn c10() -> Result<Outcome, Error> {
    let mut o = Outcome::new();
    o.add(uq_su2().presentation().check_confluence(6));
    o.add(podles_sphere().check_confluence(6));
    o.add(podles_action().verify_well_defined(&uq_su2(), &podles_sphere()));
    Ok(o)
}

fn main() -> ExitCode {
    let criteria: [(&str, Duration, Run); 10] = [
        ("monopole idempotent and its invariance", Duration::from_secs(5), c1),
        ("U_q(su_2) relations in the 2-dimensional representation ([F, E] read as EF − FE)", Duration::from_secs(1), c2),
        ("cocyclic module identities for n ≤ 3 (kC2/sign-line, H4/adjoint, kS3/adjoint)", Duration::from_secs(120), c3),
        ("φ, φ∘ψ = ψ∘φ = id and cylindricity on kC2", Duration::from_secs(120), c4),
        ("twisted products, YD forms, β/β′ and t/t′", Duration::from_secs(60), c5),
        ("Ψ is an equivariant cocyclic map; Ψ∘β = Ψ̄", Duration::from_secs(60), c6),
        ("pairing well-definedness, additivity, R(H)-membership", Duration::from_secs(60), c7),
        ("homotopies θ, ϱ for inner automorphisms and derivations", Duration::from_secs(30), c8),
        ("dimension law under trivial actions", Duration::from_secs(30), c9),
        ("rewriting confluence and action well-definedness", Duration::from_secs(30), c10),
    ];
    let mut failed = 0;
    for (i, (title, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = run();
        let took = start.elapsed();
        let (ok, detail) = match res {
            Ok(o) => {
                let fails = o.failures();
                let over = took > *budget;
                let mut detail = format!("{} checks", o.checks());
                if over {
                    detail.push_str(&format!(", over the {:.0?} budget", budget));
                }
                if let Some(f) = fails.first() {
                    detail.push_str(&format!(", {} failing; first: {f}", fails.len()));
                }
                (fails.is_empty() && !over, detail)
            }
            Err(e) => (false, format!("error: {e}")),
        };
        if !ok {
            failed += 1;
        }
        println!("criterion {:>2}: {} {title} ({:.2} s; {detail})", i + 1, if ok { "PASS" } else { "FAIL" }, took.as_secs_f64());
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

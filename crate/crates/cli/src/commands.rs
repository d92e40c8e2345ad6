use hkinv::degeneration::{
    central_charge, effectivity_ratio, ext_dimensions, f3_hodge_relations, jacobian_class_of_e,
    kuranishi_check, kuranishi_identity_check, pell_spherical_classes, plane_curve_genus,
    sym_prod_eval, theta_characteristic_counts, yoneda_relation, Substitution, SymProdClass,
    WallPoint,
};
use hkinv::fujiki::{fujiki_constant, specialized_integral, AbsoluteClass};
use hkinv::hodge_ring::{
    chern_numbers_from_ring, derive_degree10_relations, derive_degree8_relation,
    verify_independence_degree6, HodgeClass, HodgeRing, Monomial,
};
use hkinv::lagrangian::{
    disambiguate, fixed_locus_invariants, hodge_symmetry_relation, project_lagrangian_class,
    self_intersection,
};
use hkinv::llv::{betti_of_quotient, euler_of_fixed_locus, euler_of_quotient, InvolutionCase};
use hkinv::mukai::{hyperbolic_lattice, MukaiVector};
use hkinv::poly::ParametricScalar;
use hkinv::rational::{int, rational_sqrt};
use hkinv::{Error, Rational, Result};
use num_traits::Zero;

use crate::report::Report;

#[derive(Clone, Debug)]
pub struct Params {
    pub q: Rational,
    pub degree: Rational,
    pub case: Option<InvolutionCase>,
    pub beta: Rational,
    pub bound: u64,
    pub genus: u64,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            q: int(4),
            degree: int(720),
            case: None,
            beta: int(-2),
            bound: 1000,
            genus: 10,
        }
    }
}

impl Params {
    fn cases(&self) -> Vec<InvolutionCase> {
        match self.case {
            Some(c) => vec![c],
            None => InvolutionCase::BOTH.to_vec(),
        }
    }
}

pub const COMMANDS: [&str; 13] = [
    "fujiki",
    "ring",
    "relations",
    "betti",
    "euler",
    "lagrangian",
    "fixed-locus",
    "walls",
    "pell",
    "ext",
    "kuranishi",
    "symprod",
    "f3",
];

pub fn build(command: &str, p: &Params) -> Result<Report> {
    match command {
        "fujiki" => fujiki(p),
        "ring" => ring(p),
        "relations" => relations(p),
        "betti" => betti(p),
        "euler" => euler(p),
        "lagrangian" => lagrangian(p),
        "fixed-locus" => fixed_locus(p),
        "walls" => walls(p),
        "pell" => pell(p),
        "ext" => ext(),
        "kuranishi" => kuranishi(),
        "symprod" => symprod(p),
        "f3" => f3(),
        "report-all" => report_all(p),
        other => Err(Error::UnknownLabel(other.to_string())),
    }
}

fn fujiki(p: &Params) -> Result<Report> {
    let mut r = Report::new("fujiki");
    r.param("q", &p.q);
    let q = ParametricScalar::constant(p.q.clone());
    for alpha in AbsoluteClass::ALL {
        let m = alpha.codegree() / 2;
        r.push(
            format!("C({alpha})"),
            &fujiki_constant(alpha),
            "generalized Fujiki constant",
        );
        r.push(
            format!("int {alpha}*beta^{}", 2 * m),
            &specialized_integral(alpha, &q).eval(&p.q)?,
            format!("C({alpha})*q^{m}"),
        );
    }
    Ok(r)
}

fn ring(p: &Params) -> Result<Report> {
    let mut r = Report::new("ring");
    r.param("q", &p.q);
    let ring = HodgeRing::at(&p.q)?;
    let top = |m: Monomial| -> Result<Rational> { ring.integrate(&ring.reduce(m)?)?.eval(&p.q) };
    r.push("h^6", &top(Monomial::new(6, 0, 0))?, "15*q^3");
    r.push("h^4c2", &top(Monomial::new(4, 1, 0))?, "108*q^2");
    r.push("h^2c2^2", &top(Monomial::new(2, 2, 0))?, "1200*q");
    let h2c4 = ring.multiply(&HodgeClass::h_pow(2)?, &ring.c4())?;
    r.push("h^2c4", &ring.integrate(&h2c4)?.eval(&p.q)?, "480*q");
    let c = chern_numbers_from_ring(&p.q)?;
    r.push("c2^3", &c.c2_cubed, "c2*c2*c2 multiplied in the ring");
    r.push("c2c4", &c.c2c4, "c2*c4 multiplied in the ring");
    r.push("c6", &c.c6, "Euler characteristic of K3^[3]-type");
    let (independent, det) = verify_independence_degree6(&p.q)?;
    r.push("det Gram(h^3, hc2)", &det, "degree-6 Gram determinant");
    r.push_bool(
        "h^3, hc2 independent",
        independent,
        "nonzero Gram determinant",
    );
    Ok(r)
}

fn relations(p: &Params) -> Result<Report> {
    let mut r = Report::new("relations");
    r.param("q", &p.q);
    if !hkinv::rational::is_positive(&p.q) {
        return Err(Error::NonPositive(p.q.to_string()));
    }
    let symbolic = ParametricScalar::q();
    let at = ParametricScalar::constant(p.q.clone());
    let s8 = derive_degree8_relation(&symbolic)?;
    let n8 = derive_degree8_relation(&at)?;
    r.push(
        "c4: coeff of h^4",
        &n8.h4.eval(&p.q)?,
        format!("symbolic {}", s8.h4),
    );
    r.push(
        "c4: coeff of h^2c2",
        &n8.h2c2.eval(&p.q)?,
        format!("symbolic {}", s8.h2c2),
    );
    r.push(
        "c2^2 / c4",
        &hkinv::hodge_ring::c2_squared_over_c4(),
        "ratio of Fujiki constants",
    );
    let s10 = derive_degree10_relations(&symbolic)?;
    let n10 = derive_degree10_relations(&at)?;
    r.push(
        "h^3c2 / h^5",
        &n10.h3c2.eval(&p.q)?,
        format!("symbolic {}", s10.h3c2),
    );
    r.push(
        "hc2^2 / h^5",
        &n10.hc2_squared.eval(&p.q)?,
        format!("symbolic {}", s10.hc2_squared),
    );
    r.push(
        "hc4 / h^5",
        &n10.hc4.eval(&p.q)?,
        format!("symbolic {}", s10.hc4),
    );
    Ok(r)
}

fn betti(p: &Params) -> Result<Report> {
    let mut r = Report::new("betti");
    if let Some(c) = p.case {
        r.param("case", c);
    }
    for case in p.cases() {
        let b = betti_of_quotient(case);
        for (k, v) in [(0, b.b0), (2, b.b2), (4, b.b4), (6, b.b6)] {
            r.push_int(
                format!("{case}: b{k}(X/i)"),
                v as i64,
                "invariant part of the LLV decomposition",
            );
        }
    }
    Ok(r)
}

fn euler(p: &Params) -> Result<Report> {
    let mut r = Report::new("euler");
    if let Some(c) = p.case {
        r.param("case", c);
    }
    for case in p.cases() {
        r.push_int(
            format!("{case}: chi(X/i)"),
            euler_of_quotient(case),
            "2(b0+b2+b4)+b6 of the quotient",
        );
        r.push_int(
            format!("{case}: chi(fixed locus)"),
            euler_of_fixed_locus(case),
            "2*chi(X/i) - 3200",
        );
    }
    Ok(r)
}

fn lagrangian(p: &Params) -> Result<Report> {
    let mut r = Report::new("lagrangian");
    r.param("degree", &p.degree).param("q", &p.q);
    if let Some(c) = p.case {
        r.param("case", c);
    }
    let (a, b) = project_lagrangian_class(&p.degree, &p.q)?;
    r.push("a (h^3)", &a, "degree/(6q^3)");
    r.push("b (hc2)", &b, "-degree/(72q^2)");
    let verbitsky = self_intersection(&a, &b, &Rational::zero(), &p.q)?;
    r.push(
        "(a h^3 + b hc2)^2",
        &verbitsky,
        "self-intersection of the Verbitsky projection",
    );
    let candidates: Vec<_> = p
        .cases()
        .into_iter()
        .map(|c| (c, euler_of_fixed_locus(c)))
        .collect();
    for &(case, chi) in &candidates {
        let four_c_squared = -int(chi) - &verbitsky;
        let rational = rational_sqrt(&(&four_c_squared / int(4))).is_some();
        r.push(
            format!("{case}: 4c^2"),
            &four_c_squared,
            "-chi_top - (a h^3 + b hc2)^2",
        );
        r.push_bool(
            format!("{case}: c rational"),
            rational,
            "c^2 is a rational square",
        );
    }
    match disambiguate(&p.degree, &p.q, &candidates) {
        Ok(d) => {
            r.push_bool(
                "case natural",
                d.case == InvolutionCase::Natural,
                "selected involution case",
            );
            r.push("c (eta)", &d.c, "coefficient of eta, nonnegative root");
            r.push_int(
                "chi_top",
                d.chi_top,
                "Euler characteristic of the fixed locus",
            );
            r.push("[W]^2 (ring)", &d.ring_self_intersection, "equals -chi_top");
            r.push_bool(
                "sign-convention flag",
                d.sign_convention_flag(),
                "ring self-intersection differs in sign from chi_top",
            );
        }
        Err(Error::NoAdmissibleCase) => {
            r.push_bool(
                "admissible case found",
                false,
                "no candidate gives a rational c",
            );
        }
        Err(e) => return Err(e),
    }
    Ok(r)
}

fn fixed_locus(p: &Params) -> Result<Report> {
    let mut r = Report::new("fixed-locus");
    r.param("degree", &p.degree).param("q", &p.q);
    let inv = fixed_locus_invariants(&p.degree, &p.q)?;
    r.push("c1c2", &inv.c1c2, "-(4h^3 + hc2)*[W]");
    r.push("chi(O)", &inv.chi_o, "c1c2/24");
    r.push("chi(Omega^1)", &inv.chi_omega1, "chi(O) - chi_top/2");
    r.push("c3", &inv.c3, "chi_top");
    r.push("K^3", &inv.k_cubed, "(2h)^3*[W]");
    r.push_bool(
        "Hodge symmetry",
        hodge_symmetry_relation(&inv.chi_o, &inv.chi_omega1, &inv.c3),
        "chi_top/2 = chi(O) - chi(Omega^1)",
    );
    Ok(r)
}

fn walls(p: &Params) -> Result<Report> {
    let mut r = Report::new("walls");
    r.param("beta", &p.beta);
    let pt = WallPoint::from_beta(p.beta.clone())?;
    r.push("alpha^2", pt.alpha_sq(), "2 - (beta+2)^2");
    let (v, s) = (MukaiVector::V, MukaiVector::S);
    for (name, u) in [("v", v), ("s", s)] {
        let z = central_charge(&u, &pt);
        r.push(format!("Re Z({name})"), &z.re, "real part");
        r.push(
            format!("Im Z({name}) / alpha"),
            &z.im,
            "imaginary part over alpha",
        );
    }
    r.push(
        "Re Z(s)/Z(v)",
        &effectivity_ratio(&s, &v, &pt)?,
        "effectivity ratio",
    );
    let gram = hyperbolic_lattice(&v, &s)?;
    r.push_int("(v,v)", gram[0][0], "Mukai pairing");
    r.push_int("(v,s)", gram[0][1], "Mukai pairing");
    r.push_int("(s,s)", gram[1][1], "Mukai pairing");
    Ok(r)
}

fn pell(p: &Params) -> Result<Report> {
    let mut r = Report::new("pell");
    r.param("bound", p.bound);
    let sols = pell_spherical_classes(p.bound);
    r.push_int(
        "solutions",
        sols.len() as i64,
        "2x^2 - y^2 = -1 with |x| <= bound",
    );
    r.push_bool(
        "x<0 implies x+y/2<0",
        sols.iter().all(|u| u.respects_effectivity()),
        "no effective spherical class with (u,v) < 0",
    );
    for u in sols.iter().filter(|u| u.x >= 0 && u.y > 0) {
        r.push_int(format!("y at x={}", u.x), u.y, "nonnegative branch");
    }
    Ok(r)
}

fn ext() -> Result<Report> {
    let mut r = Report::new("ext");
    let e = ext_dimensions();
    r.push_int(
        "(s, v-s)",
        e.spherical_to_quotient,
        "ext^1 between the spherical object and the quotient",
    );
    r.push_int(
        "a^2+2",
        e.quotient_moduli,
        "dimension of the quotient moduli, a = v - s",
    );
    r.push_int("v^2+2", e.ambient_moduli, "dimension of the moduli of v");
    r.push_int("a.(v-a)", e.extension_fibre, "extension fibre");
    Ok(r)
}

fn kuranishi() -> Result<Report> {
    let mut r = Report::new("kuranishi");
    r.push_bool(
        "standard substitution",
        kuranishi_identity_check(),
        "u1^2-u2u3 in (a1b1+a2b2)",
    );
    r.push_bool(
        "u2 sign flipped",
        kuranishi_check(&Substitution::sign_flipped(), &[yoneda_relation()]),
        "perturbed substitution",
    );
    r.push_bool(
        "zero ideal",
        kuranishi_check(&Substitution::standard(), &[]),
        "no relation imposed",
    );
    Ok(r)
}

fn symprod(p: &Params) -> Result<Report> {
    let mut r = Report::new("symprod");
    r.param("genus", p.genus);
    let g = p.genus;
    let cube = SymProdClass::linear_cube(g, &int(1), &int(-6));
    r.push(
        "(theta-6eta)^3",
        &sym_prod_eval(&cube)?,
        "sum of 3Ci (-6)^(3-i) g!/(g-i)!",
    );
    for i in 0..4 {
        r.push(
            format!("theta^{i} eta^{}", 3 - i),
            &sym_prod_eval(&SymProdClass::monomial(g, i))?,
            "g!/(g-i)!",
        );
    }
    let anchor = if g == 10 {
        "[E] = e theta^8/8!"
    } else {
        "extension: (g-2) - 6"
    };
    r.push("[E] coefficient", &jacobian_class_of_e(g)?, anchor);
    let (odd, even) = theta_characteristic_counts(2);
    r.push(
        "odd theta characteristics (g=2)",
        &Rational::from_integer(odd),
        "2^(g-1)(2^g-1)",
    );
    r.push(
        "even theta characteristics (g=2)",
        &Rational::from_integer(even),
        "2^(g-1)(2^g+1)",
    );
    Ok(r)
}

fn f3() -> Result<Report> {
    let mut r = Report::new("f3");
    let g = plane_curve_genus(6);
    let rel = f3_hodge_relations(g)?;
    r.push_int("plane sextic genus", g as i64, "(d-1)(d-2)/2");
    r.push("h^1(F3, O)", &rel.h1_f3_structure_sheaf, "vanishing");
    r.push(
        "h^{0,2}(W) lower bound",
        &rel.h02_lower_bound,
        "binomial(g, 2)",
    );
    r.push("h^{0,3} - h^{0,2}", &rel.h03_offset, "1 - chi(O)");
    r.push(
        "h^{1,2} - h^{0,2} - h^{1,1}",
        &rel.h12_offset,
        "chi(Omega^1)",
    );
    r.push_int(
        "unknowns",
        rel.unknowns.len() as i64,
        rel.unknowns.join("; "),
    );
    Ok(r)
}

fn report_all(p: &Params) -> Result<Report> {
    let mut r = Report::new("report-all");
    r.param("degree", &p.degree).param("q", &p.q);
    let all = Params {
        case: None,
        ..p.clone()
    };
    for c in COMMANDS {
        r.absorb(build(c, &all)?);
    }
    Ok(r)
}

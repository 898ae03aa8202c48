//! The named-polynomial catalog and its exact identity checks.
//!
//! Every entry states two closed forms for the same object — a derivative and
//! its factorization, an evaluation and its expanded value, a substitution
//! instance and its direct definition — and the check is canonical-form
//! equality of the two expansions, never sampling.

use crate::arith::{rat, MultiPoly, Var};
use crate::{Error, Result};

fn n() -> MultiPoly {
    MultiPoly::var(Var::N)
}

fn t() -> MultiPoly {
    MultiPoly::var(Var::T)
}

fn x() -> MultiPoly {
    MultiPoly::var(Var::X)
}

fn q(num: i64, den: i64) -> MultiPoly {
    MultiPoly::constant(rat(num, den))
}

/// The quadratic controlling the sign of `l_mod` on the binomial triangle:
/// `l_mod(binomial,n,t,k)` equals a positive prefactor times `phi(k)`.
pub(super) fn phi() -> MultiPoly {
    (n() + 1) * (n() - x()) * (n() - x() + 1) + (n() + 1) * (n() - t() + x()) * (n() - t() + x() + 1)
        - 2 * n() * (n() - x() + 1) * (n() - t() + x() + 1)
}

/// Sextic controlling the sign of `l_mod` on the `sun_a` triangle away from
/// the `t = n, k = 0` corner.
pub(super) fn psi() -> MultiPoly {
    (n() + 1)
        * (n() - x()).pow(2)
        * (n() - x() + 1).pow(2)
        * (2 * n() - 2 * t() + 2 * x() + 1)
        * (2 * n() - 2 * t() + 2 * x() - 1)
        + (n() + 1)
            * (n() - t() + x()).pow(2)
            * (n() - t() + x() + 1).pow(2)
            * (2 * n() - 2 * x() - 1)
            * (2 * n() - 2 * x() + 1)
        - 2 * n()
            * (n() - x() + 1).pow(2)
            * (n() - t() + x() + 1).pow(2)
            * (2 * n() - 2 * x() - 1)
            * (2 * n() - 2 * t() + 2 * x() - 1)
}

/// Quartic whose sign on `0..n` decides nonnegativity of `l_mod(sun_a,n,t,0)`.
pub(super) fn theta() -> MultiPoly {
    (4 * n() * n() - 1) * x().pow(4) - 2 * (2 * n() - 1) * (2 * n() * n() + 2 * n() + 1) * x().pow(3)
        + (4 * n().pow(4) + 8 * n().pow(3) + 8 * n() * n() - 1) * x().pow(2)
        - 2 * n() * (n() + 1) * (2 * n() * n() + 4 * n() - 1) * x()
        + 2 * n() * (2 * n() - 1) * (n() + 1).pow(2)
}

/// First derivative factor of [`theta`]: `theta' = 2(n-x)·theta1`.
pub(super) fn theta1() -> MultiPoly {
    2 * (1 - 4 * n() * n()) * x() * x() + (2 * n() - 1) * (2 * n() * n() + 4 * n() + 3) * x()
        - (2 * n().pow(3) + 6 * n() * n() + 3 * n() - 1)
}

/// Second derivative factor of [`theta`]: `theta1' = (2n-1)·theta2`.
pub(super) fn theta2() -> MultiPoly {
    -4 * (2 * n() + 1) * x() + (2 * n() * n() + 4 * n() + 3)
}

/// First derivative factor of [`psi`]: `psi' = 2(2x-t)·psi1`.
pub(super) fn psi1() -> MultiPoly {
    12 * (2 * n() + 1) * x().pow(4) - 24 * t() * (2 * n() + 1) * x().pow(3)
        - 2 * (16 * n().pow(3)
            - 8 * (2 * t() - 1) * n() * n()
            - 2 * (7 * t() * t() + 3 * t() + 1) * n()
            - (8 * t() * t() - 4 * t() + 3))
            * x()
            * x()
        + 2 * t()
            * (16 * n().pow(3)
                - 8 * (2 * t() - 1) * n() * n()
                - 2 * (t() * t() + 3 * t() + 1) * n()
                - (2 * t() * t() - 4 * t() + 3))
            * x()
        + (8 * n().pow(5) - 4 * (4 * t() - 1) * n().pow(4)
            + 4 * (t() * t() - t() - 3) * n().pow(3)
            + 4 * (t().pow(3) - t() * t() + 5 * t() - 2) * n() * n()
            + (4 * t().pow(3) - 10 * t() * t() + 11 * t() - 1) * n()
            - (2 * t() * t() - 3 * t() + 1))
}

/// Second derivative factor of [`psi`]: `psi1' = 2(2x-t)·psi2`.
pub(super) fn psi2() -> MultiPoly {
    12 * (2 * n() + 1) * x() * x() - 12 * t() * (2 * n() + 1) * x() - 16 * n().pow(3)
        + 8 * (2 * t() - 1) * n() * n()
        + 2 * (t() * t() + 3 * t() + 1) * n()
        + (2 * t() * t() - 4 * t() + 3)
}

/// `psi1(0)/(n+1)` as a cubic in `t`, used on the upper part of `[0, n-1]`.
pub(super) fn xi() -> MultiPoly {
    4 * n() * t().pow(3) + 2 * (2 * n() * n() - 4 * n() - 1) * t() * t()
        - (16 * n().pow(3) - 12 * n() * n() - 8 * n() - 3) * t()
        + (8 * n().pow(4) - 4 * n().pow(3) - 8 * n() * n() - 1)
}

/// `psi2(0)` as a quadratic in `t`, used on the lower part of `[0, n-1]`.
pub(super) fn eta() -> MultiPoly {
    2 * (n() + 1) * t() * t() + 2 * (8 * n() * n() + 3 * n() - 2) * t()
        - (2 * n() - 1) * (8 * n() * n() + 8 * n() + 3)
}

/// [`psi`] on the diagonal `t = n`, where the grid needs its own analysis.
pub(super) fn psi_nn() -> MultiPoly {
    8 * (2 * n() + 1) * x().pow(6) - 24 * n() * (2 * n() + 1) * x().pow(5)
        + 2 * (26 * n().pow(3) - 2 * n() + 12 * n() * n() + 3) * x().pow(4)
        - 4 * n() * (3 + 6 * n().pow(3) + 2 * n() * n() - 2 * n()) * x().pow(3)
        + 2 * (4 * n() * n() + 2 * n() - 1 - 4 * n().pow(3) + 2 * n().pow(5)) * x() * x()
        + 2 * n() * (n() - 1) * (2 * n() - 1) * (n() + 1) * x()
        - n() * (n() - 1) * (n() - 2) * (n() + 1).pow(2)
}

/// Derivative factor of [`psi_nn`]: `psi_nn' = 2(2x-n)·psi1_nn`.
pub(super) fn psi1_nn() -> MultiPoly {
    12 * (1 + 2 * n()) * x().pow(4) - 24 * n() * (1 + 2 * n()) * x().pow(3)
        + 2 * (6 * n() * n() - 2 * n() + 3 + 14 * n().pow(3)) * x() * x()
        - 2 * n() * (2 * n().pow(3) + 3 - 2 * n()) * x()
        - (n() - 1) * (2 * n() - 1) * (n() + 1)
}

/// Derivative factor of [`psi1_nn`]: `psi1_nn' = 2(2x-n)·psi2_nn`.
pub(super) fn psi2_nn() -> MultiPoly {
    12 * (1 + 2 * n()) * x() * x() - 12 * n() * (1 + 2 * n()) * x()
        + (2 * n().pow(3) + 3 - 2 * n())
}

/// A catalog polynomial with its active variables.
#[derive(Clone, Debug)]
pub struct NamedPoly {
    pub name: &'static str,
    pub poly: MultiPoly,
    pub vars: Vec<Var>,
}

pub const POLY_NAMES: [&str; 12] = [
    "phi", "psi", "theta", "theta1", "theta2", "psi1", "psi2", "xi", "eta", "psi_nn", "psi1_nn",
    "psi2_nn",
];

/// Builds a catalog polynomial by name.
pub fn build_named_poly(name: &str) -> Result<NamedPoly> {
    let (name, poly) = match name {
        "phi" => ("phi", phi()),
        "psi" => ("psi", psi()),
        "theta" => ("theta", theta()),
        "theta1" => ("theta1", theta1()),
        "theta2" => ("theta2", theta2()),
        "psi1" => ("psi1", psi1()),
        "psi2" => ("psi2", psi2()),
        "xi" => ("xi", xi()),
        "eta" => ("eta", eta()),
        "psi_nn" => ("psi_nn", psi_nn()),
        "psi1_nn" => ("psi1_nn", psi1_nn()),
        "psi2_nn" => ("psi2_nn", psi2_nn()),
        other => return Err(Error::UnknownNamedPoly(other.to_string())),
    };
    let vars = Var::ALL
        .into_iter()
        .filter(|&v| poly.degree_in(v) > 0)
        .collect();
    Ok(NamedPoly { name, poly, vars })
}

/// Result of one exact identity check.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub id: &'static str,
    pub lhs: &'static str,
    pub rhs: &'static str,
    pub pass: bool,
    /// First differing term when the check fails.
    pub difference: Option<String>,
}

pub const IDENTITY_IDS: [&str; 46] = [
    "dphi-dx",
    "phi-at-0",
    "dtheta-dx",
    "dtheta1-dx",
    "theta-at-0",
    "theta-at-1",
    "theta-at-2",
    "theta-at-n-minus-1",
    "theta-at-n",
    "theta1-at-0",
    "theta1-at-1",
    "theta1-at-n-minus-1",
    "theta2-at-0",
    "theta2-at-n-minus-1",
    "dpsi-dx",
    "dpsi1-dx",
    "psi-at-0-theta",
    "psi1-at-0-xi",
    "psi2-at-0-eta",
    "psi1-at-midpoint-expanded",
    "psi1-at-midpoint-shifted",
    "psi1-at-midpoint-n2",
    "psi1-at-midpoint-n3",
    "psi2-at-midpoint",
    "psi2-axis",
    "dxi-dt",
    "d2xi-dt2",
    "d2xi-at-0",
    "dxi-at-3n-over-4",
    "xi-at-3n-over-4",
    "xi-at-n-minus-1",
    "eta-at-0",
    "eta-at-3n-over-4",
    "eta-axis",
    "psi-nn-substitution",
    "psi1-nn-substitution",
    "psi2-nn-substitution",
    "dpsi-nn-dx",
    "dpsi1-nn-dx",
    "psi2-nn-axis",
    "psi-nn-at-1",
    "psi-nn-at-midpoint",
    "psi1-nn-at-0",
    "psi1-nn-at-midpoint",
    "psi2-nn-at-0",
    "psi2-nn-at-midpoint",
];

fn at(p: &MultiPoly, v: Var, value: MultiPoly) -> MultiPoly {
    p.substitute(v, &value)
}

#[allow(clippy::too_many_lines)]
fn sides(id: &str) -> Option<(&'static str, &'static str, MultiPoly, MultiPoly)> {
    use Var::{T, X};
    let half_t = || q(1, 2) * t();
    let half_n = || q(1, 2) * n();
    Some(match id {
        "dphi-dx" => (
            "d/dx phi",
            "(4n+2)(2x-t)",
            phi().derivative(X),
            (4 * n() + 2) * (2 * x() - t()),
        ),
        "phi-at-0" => (
            "phi(x:=0)",
            "(n+1)(t^2-t)",
            at(&phi(), X, q(0, 1)),
            (n() + 1) * (t() * t() - t()),
        ),
        "dtheta-dx" => (
            "d/dx theta",
            "2(n-x)*theta1",
            theta().derivative(X),
            2 * (n() - x()) * theta1(),
        ),
        "dtheta1-dx" => (
            "d/dx theta1",
            "(2n-1)*theta2",
            theta1().derivative(X),
            (2 * n() - 1) * theta2(),
        ),
        "theta-at-0" => (
            "theta(x:=0)",
            "2n(2n-1)(n+1)^2",
            at(&theta(), X, q(0, 1)),
            2 * n() * (2 * n() - 1) * (n() + 1).pow(2),
        ),
        "theta-at-1" => (
            "theta(x:=1)",
            "2n^2(2n-1)(n-1)",
            at(&theta(), X, q(1, 1)),
            2 * n() * n() * (2 * n() - 1) * (n() - 1),
        ),
        "theta-at-2" => (
            "theta(x:=2)",
            "2(n-2)(6n^3-13n^2+1)",
            at(&theta(), X, q(2, 1)),
            2 * (n() - 2) * (6 * n().pow(3) - 13 * n() * n() + 1),
        ),
        "theta-at-n-minus-1" => (
            "theta(x:=n-1)",
            "3n^4-10n^3+11n^2+8n-4",
            at(&theta(), X, n() - 1),
            3 * n().pow(4) - 10 * n().pow(3) + 11 * n() * n() + 8 * n() - 4,
        ),
        "theta-at-n" => (
            "theta(x:=n)",
            "-n(n-1)(n-2)(n+1)",
            at(&theta(), X, n()),
            -(n() * (n() - 1) * (n() - 2) * (n() + 1)),
        ),
        "theta1-at-0" => (
            "theta1(x:=0)",
            "1-2n^3-6n^2-3n",
            at(&theta1(), X, q(0, 1)),
            1 - (2 * n().pow(3) + 6 * n() * n() + 3 * n()),
        ),
        "theta1-at-1" => (
            "theta1(x:=1)",
            "n(2(n-2)^2-9)",
            at(&theta1(), X, q(1, 1)),
            n() * (2 * (n() - 2).pow(2) - 9),
        ),
        "theta1-at-n-minus-1" => (
            "theta1(x:=n-1)",
            "-4n^4+16n^3-16n^2-12n+6",
            at(&theta1(), X, n() - 1),
            -4 * n().pow(4) + 16 * n().pow(3) - 16 * n() * n() - 12 * n() + 6,
        ),
        "theta2-at-0" => (
            "theta2(x:=0)",
            "2n^2+4n+3",
            at(&theta2(), X, q(0, 1)),
            2 * n() * n() + 4 * n() + 3,
        ),
        "theta2-at-n-minus-1" => (
            "theta2(x:=n-1)",
            "-6n^2+8n+7",
            at(&theta2(), X, n() - 1),
            -6 * n() * n() + 8 * n() + 7,
        ),
        "dpsi-dx" => (
            "d/dx psi",
            "2(2x-t)*psi1",
            psi().derivative(X),
            2 * (2 * x() - t()) * psi1(),
        ),
        "dpsi1-dx" => (
            "d/dx psi1",
            "2(2x-t)*psi2",
            psi1().derivative(X),
            2 * (2 * x() - t()) * psi2(),
        ),
        "psi-at-0-theta" => (
            "psi(x:=0)",
            "(n+1)*theta(x:=t)",
            at(&psi(), X, q(0, 1)),
            (n() + 1) * at(&theta(), X, t()),
        ),
        "psi1-at-0-xi" => (
            "psi1(x:=0)",
            "(n+1)*xi",
            at(&psi1(), X, q(0, 1)),
            (n() + 1) * xi(),
        ),
        "psi2-at-0-eta" => ("psi2(x:=0)", "eta", at(&psi2(), X, q(0, 1)), eta()),
        "psi1-at-midpoint-expanded" => (
            "psi1(x:=t/2)",
            "degree-4 expansion in t",
            at(&psi1(), X, half_t()),
            8 * n().pow(5) - 16 * n().pow(4) * t() + 12 * n().pow(3) * t() * t()
                - 4 * n() * n() * t().pow(3)
                + q(1, 2) * n() * t().pow(4)
                + 4 * n().pow(4)
                - 4 * n().pow(3) * t()
                + n() * t().pow(3)
                - q(1, 4) * t().pow(4)
                - 12 * n().pow(3)
                + 20 * n() * n() * t()
                - 11 * n() * t() * t()
                + 2 * t().pow(3)
                - 8 * n() * n()
                + 11 * n() * t()
                - q(7, 2) * t() * t()
                - n()
                + 3 * t()
                - 1,
        ),
        "psi1-at-midpoint-shifted" => (
            "psi1(x:=t/2)",
            "powers of (2n-t)",
            at(&psi1(), X, half_t()),
            (q(1, 2) * n() - q(1, 4)) * (2 * n() - t()).pow(4)
                + (n() - 2) * (2 * n() - t()).pow(3)
                + (n() - q(7, 2)) * (2 * n() - t()).pow(2)
                + 3 * (n() - 1) * (2 * n() - t())
                + 5 * n()
                - 1,
        ),
        "psi1-at-midpoint-n2" => (
            "psi1(n:=2, x:=t/2)",
            "3/4((4-t)^2-1)^2+3(4-t)+33/4",
            at(&at(&psi1(), Var::N, q(2, 1)), X, half_t()),
            q(3, 4) * ((4 - t()) * (4 - t()) - 1).pow(2) + 3 * (4 - t()) + q(33, 4),
        ),
        "psi1-at-midpoint-n3" => (
            "psi1(n:=3, x:=t/2)",
            "5/4(6-t)^4+(11/2-t)(6-t)^2+6(6-t)+14",
            at(&at(&psi1(), Var::N, q(3, 1)), X, half_t()),
            q(5, 4) * (6 - t()).pow(4) + (q(11, 2) - t()) * (6 - t()).pow(2) + 6 * (6 - t()) + 14,
        ),
        "psi2-at-midpoint" => (
            "psi2(x:=t/2)",
            "-4n(2n-t)^2-(4n-t-1)(2n-t)-3(t-1)",
            at(&psi2(), X, half_t()),
            -(4 * n() * (2 * n() - t()).pow(2)) - (4 * n() - t() - 1) * (2 * n() - t())
                - 3 * (t() - 1),
        ),
        "psi2-axis" => (
            "-(x-coefficient of psi2)",
            "t*(x^2-coefficient of psi2)",
            -psi2().coeff_of(X, 1),
            t() * psi2().coeff_of(X, 2),
        ),
        "dxi-dt" => (
            "d/dt xi",
            "12nt^2+(8n^2-16n-4)t+(12n^2-16n^3+8n+3)",
            xi().derivative(T),
            12 * n() * t() * t() + (8 * n() * n() - 16 * n() - 4) * t()
                + (12 * n() * n() - 16 * n().pow(3) + 8 * n() + 3),
        ),
        "d2xi-dt2" => (
            "d2/dt2 xi",
            "24nt+(8n^2-16n-4)",
            xi().derivative(T).derivative(T),
            24 * n() * t() + (8 * n() * n() - 16 * n() - 4),
        ),
        "d2xi-at-0" => (
            "(d2/dt2 xi)(t:=0)",
            "8(n-1)^2-12",
            at(&xi().derivative(T).derivative(T), T, q(0, 1)),
            8 * (n() - 1).pow(2) - 12,
        ),
        "dxi-at-3n-over-4" => (
            "(d/dt xi)(t:=3n/4)",
            "-13/4 n^3+5n+3",
            at(&xi().derivative(T), T, q(3, 4) * n()),
            q(-13, 4) * n().pow(3) + 5 * n() + 3,
        ),
        "xi-at-3n-over-4" => (
            "xi(t:=3n/4)",
            "-(4n^2(n-4)^2+136(n-9/17)^2+440/17)/64",
            at(&xi(), T, q(3, 4) * n()),
            q(-1, 64)
                * (4 * n() * n() * (n() - 4).pow(2)
                    + 136 * (n() - q(9, 17)).pow(2)
                    + q(440, 17)),
        ),
        "xi-at-n-minus-1" => (
            "xi(t:=n-1)",
            "-(4n-18)n^2-13n-6",
            at(&xi(), T, n() - 1),
            -((4 * n() - 18) * n() * n()) - 13 * n() - 6,
        ),
        "eta-at-0" => (
            "eta(t:=0)",
            "-16n^3-8n^2+2n+3",
            at(&eta(), T, q(0, 1)),
            -16 * n().pow(3) - 8 * n() * n() + 2 * n() + 3,
        ),
        "eta-at-3n-over-4" => (
            "eta(t:=3n/4)",
            "-23/8 n^3-19/8 n^2-n+3",
            at(&eta(), T, q(3, 4) * n()),
            q(-23, 8) * n().pow(3) - q(19, 8) * n() * n() - n() + 3,
        ),
        "eta-axis" => (
            "2(n+1)*(t-coefficient of eta)",
            "2(8n^2+3n-2)*(t^2-coefficient of eta)",
            2 * (n() + 1) * eta().coeff_of(T, 1),
            2 * (8 * n() * n() + 3 * n() - 2) * eta().coeff_of(T, 2),
        ),
        "psi-nn-substitution" => (
            "psi(t:=n)",
            "psi_nn",
            at(&psi(), T, n()),
            psi_nn(),
        ),
        "psi1-nn-substitution" => (
            "psi1(t:=n)",
            "psi1_nn",
            at(&psi1(), T, n()),
            psi1_nn(),
        ),
        "psi2-nn-substitution" => (
            "psi2(t:=n)",
            "psi2_nn",
            at(&psi2(), T, n()),
            psi2_nn(),
        ),
        "dpsi-nn-dx" => (
            "d/dx psi_nn",
            "2(2x-n)*psi1_nn",
            psi_nn().derivative(X),
            2 * (2 * x() - n()) * psi1_nn(),
        ),
        "dpsi1-nn-dx" => (
            "d/dx psi1_nn",
            "2(2x-n)*psi2_nn",
            psi1_nn().derivative(X),
            2 * (2 * x() - n()) * psi2_nn(),
        ),
        "psi2-nn-axis" => (
            "-(x-coefficient of psi2_nn)",
            "n*(x^2-coefficient of psi2_nn)",
            -psi2_nn().coeff_of(X, 1),
            n() * psi2_nn().coeff_of(X, 2),
        ),
        "psi-nn-at-1" => (
            "psi_nn(x:=1)",
            "(n-1)((3n-16)n^3+(21n^2+8n-12))",
            at(&psi_nn(), X, q(1, 1)),
            (n() - 1) * ((3 * n() - 16) * n().pow(3) + (21 * n() * n() + 8 * n() - 12)),
        ),
        "psi-nn-at-midpoint" => (
            "psi_nn(x:=n/2)",
            "-1/8 n(n-1)(n^2-n-4)(n+2)^2",
            at(&psi_nn(), X, half_n()),
            q(-1, 8) * n() * (n() - 1) * (n() * n() - n() - 4) * (n() + 2).pow(2),
        ),
        "psi1-nn-at-0" => (
            "psi1_nn(x:=0)",
            "-n^2(n-1)-n(n^2-2)-1",
            at(&psi1_nn(), X, q(0, 1)),
            -(n() * n() * (n() - 1)) - n() * (n() * n() - 2) - 1,
        ),
        "psi1-nn-at-midpoint" => (
            "psi1_nn(x:=n/2)",
            "(2n^3(n^2-2)+n^2(3n^2-2)+4(2n-1))/4",
            at(&psi1_nn(), X, half_n()),
            q(1, 4)
                * (2 * n().pow(3) * (n() * n() - 2) + n() * n() * (3 * n() * n() - 2)
                    + 4 * (2 * n() - 1)),
        ),
        "psi2-nn-at-0" => (
            "psi2_nn(x:=0)",
            "2n^3-2n+3",
            at(&psi2_nn(), X, q(0, 1)),
            2 * n().pow(3) - 2 * n() + 3,
        ),
        "psi2-nn-at-midpoint" => (
            "psi2_nn(x:=n/2)",
            "-4n^3-3n^2-2n+3",
            at(&psi2_nn(), X, half_n()),
            -4 * n().pow(3) - 3 * n() * n() - 2 * n() + 3,
        ),
        _ => return None,
    })
}

/// Checks one identity by id.
pub fn verify_identity(id: &str) -> Result<IdentityCheck> {
    let static_id = IDENTITY_IDS
        .iter()
        .find(|&&known| known == id)
        .copied()
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))?;
    let (lhs_desc, rhs_desc, lhs, rhs) = sides(static_id).expect("listed id has sides");
    let difference = lhs.first_difference(&rhs);
    Ok(IdentityCheck {
        id: static_id,
        lhs: lhs_desc,
        rhs: rhs_desc,
        pass: difference.is_none(),
        difference,
    })
}

/// Checks the whole catalog, in the order of [`IDENTITY_IDS`].
pub fn verify_all() -> Vec<IdentityCheck> {
    IDENTITY_IDS
        .iter()
        .map(|id| verify_identity(id).expect("listed id"))
        .collect()
}

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};

use super::{rat_str, Rat};

/// The three formal variables a [`MultiPoly`] may mention.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    N,
    T,
    X,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::N, Var::T, Var::X];

    fn index(self) -> usize {
        match self {
            Var::N => 0,
            Var::T => 1,
            Var::X => 2,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Var::N => 'n',
            Var::T => 't',
            Var::X => 'x',
        }
    }
}

type Exps = [u32; 3];

/// Sparse polynomial in `n`, `t`, `x` over exact rationals.
///
/// Canonical form: zero coefficients are never stored, so structural equality
/// is mathematical equality. Term order is the lexicographic order on the
/// exponent triple `(e_n, e_t, e_x)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiPoly {
    terms: BTreeMap<Exps, Rat>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn constant(c: Rat) -> Self {
        MultiPoly::monomial([0, 0, 0], c)
    }

    pub fn from_int(v: i64) -> Self {
        MultiPoly::constant(Rat::from_integer(v.into()))
    }

    pub fn var(v: Var) -> Self {
        let mut exps = [0u32; 3];
        exps[v.index()] = 1;
        MultiPoly::monomial(exps, Rat::one())
    }

    pub fn monomial(exps: Exps, coeff: Rat) -> Self {
        let mut p = MultiPoly::zero();
        p.add_term(exps, coeff);
        p
    }

    fn add_term(&mut self, exps: Exps, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending `(e_n, e_t, e_x)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &Rat)> {
        self.terms.iter()
    }

    /// Highest power of `v` occurring; 0 for the zero polynomial.
    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|e| e[v.index()]).max().unwrap_or(0)
    }

    /// Coefficient of `v^power`, itself a polynomial in the other variables.
    pub fn coeff_of(&self, v: Var, power: u32) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (exps, c) in &self.terms {
            if exps[v.index()] == power {
                let mut e = *exps;
                e[v.index()] = 0;
                out.add_term(e, c.clone());
            }
        }
        out
    }

    /// Partial derivative with respect to `v`, by the term rule.
    pub fn derivative(&self, v: Var) -> MultiPoly {
        let i = v.index();
        let mut out = MultiPoly::zero();
        for (exps, c) in &self.terms {
            if exps[i] == 0 {
                continue;
            }
            let mut e = *exps;
            e[i] -= 1;
            out.add_term(e, c * Rat::from_integer(exps[i].into()));
        }
        out
    }

    /// Substitutes `replacement` for `v`.
    pub fn substitute(&self, v: Var, replacement: &MultiPoly) -> MultiPoly {
        let i = v.index();
        let max_pow = self.degree_in(v);
        let mut powers: Vec<MultiPoly> = Vec::with_capacity(max_pow as usize + 1);
        powers.push(MultiPoly::from_int(1));
        for _ in 1..=max_pow {
            let next = powers.last().unwrap() * replacement;
            powers.push(next);
        }
        let mut out = MultiPoly::zero();
        for (exps, c) in &self.terms {
            let mut rest = *exps;
            rest[i] = 0;
            let term = MultiPoly::monomial(rest, c.clone());
            out = &out + &(&term * &powers[exps[i] as usize]);
        }
        out
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        let mut out = MultiPoly::from_int(1);
        for _ in 0..exp {
            out = &out * self;
        }
        out
    }

    /// Evaluates at an exact rational point.
    pub fn eval(&self, n: &Rat, t: &Rat, x: &Rat) -> Rat {
        let pts = [n, t, x];
        let mut powers: [Vec<Rat>; 3] = [vec![], vec![], vec![]];
        for (i, pt) in pts.iter().enumerate() {
            let d = self.terms.keys().map(|e| e[i]).max().unwrap_or(0);
            let mut col = Vec::with_capacity(d as usize + 1);
            col.push(Rat::one());
            for _ in 1..=d {
                col.push(col.last().unwrap() * *pt);
            }
            powers[i] = col;
        }
        let mut acc = Rat::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for i in 0..3 {
                if exps[i] > 0 {
                    term *= &powers[i][exps[i] as usize];
                }
            }
            acc += term;
        }
        acc
    }

    /// Evaluates at an integer point.
    pub fn eval_int(&self, n: i64, t: i64, x: i64) -> Rat {
        self.eval(
            &Rat::from_integer(n.into()),
            &Rat::from_integer(t.into()),
            &Rat::from_integer(x.into()),
        )
    }

    /// First term (in term order) where `self` and `other` differ, with both
    /// coefficients rendered, for diagnostics.
    pub fn first_difference(&self, other: &MultiPoly) -> Option<String> {
        let keys: std::collections::BTreeSet<_> =
            self.terms.keys().chain(other.terms.keys()).collect();
        for exps in keys {
            let a = self.terms.get(exps);
            let b = other.terms.get(exps);
            if a != b {
                let show = |c: Option<&Rat>| c.map_or_else(|| "0".into(), rat_str);
                return Some(format!(
                    "at {}: {} vs {}",
                    monomial_str(exps),
                    show(a),
                    show(b)
                ));
            }
        }
        None
    }
}

fn monomial_str(exps: &Exps) -> String {
    let mut parts = Vec::new();
    for v in Var::ALL {
        let e = exps[v.index()];
        match e {
            0 => {}
            1 => parts.push(v.symbol().to_string()),
            _ => parts.push(format!("{}^{}", v.symbol(), e)),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (exps, c) in &rhs.terms {
            out.add_term(*exps, c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (exps, c) in &rhs.terms {
            out.add_term(*exps, -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                out.add_term(exps, ca * cb);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

macro_rules! forward_mp_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                self.$method(&rhs)
            }
        }
        impl $trait<i64> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: i64) -> MultiPoly {
                (&self).$method(&MultiPoly::from_int(rhs))
            }
        }
        impl $trait<i64> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: i64) -> MultiPoly {
                self.$method(&MultiPoly::from_int(rhs))
            }
        }
        impl $trait<MultiPoly> for i64 {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&MultiPoly::from_int(self)).$method(&rhs)
            }
        }
        impl $trait<&MultiPoly> for i64 {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&MultiPoly::from_int(self)).$method(rhs)
            }
        }
    };
}

forward_mp_binop!(Add, add);
forward_mp_binop!(Sub, sub);
forward_mp_binop!(Mul, mul);

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in self.terms.iter().rev() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = monomial_str(exps);
            if mono == "1" {
                write!(f, "{}", rat_str(&mag))?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", rat_str(&mag))?;
            }
        }
        Ok(())
    }
}

//! Closed-form invariants of torus knots.

use super::alexander::normalize_alexander;
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Var};
use num_integer::Integer;

/// Closed forms for T(p,q): normalized Alexander polynomial, Jones
/// polynomial (sqrt_t exponents), and the Seifert genus (p-1)(q-1)/2.
pub struct TorusClosedForms {
    pub alexander: LaurentPoly,
    pub jones: LaurentPoly,
    pub genus: u64,
}

pub fn torus_closed_forms(p: u64, q: u64) -> Result<TorusClosedForms> {
    if p < 2 || q < 2 || p.gcd(&q) != 1 {
        return Err(Error::input(format!(
            "closed forms need coprime p, q >= 2, got ({p}, {q})"
        )));
    }
    let mono = |e: i64, c: i64| LaurentPoly::from_terms(Var::T, &[(e, c)]);
    let pq = (p * q) as i64;
    let (pi, qi) = (p as i64, q as i64);

    // (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)), then normalized
    let num = mono(pq, 1).sub(&mono(0, 1)).mul(&mono(1, 1).sub(&mono(0, 1)));
    let den = mono(pi, 1).sub(&mono(0, 1)).mul(&mono(qi, 1).sub(&mono(0, 1)));
    let alexander = normalize_alexander(
        &num.div_exact(&den)
            .ok_or_else(|| Error::consistency("torus Alexander division not exact"))?,
    )?;

    // t^{(p-1)(q-1)/2} (1 - t^{p+1} - t^{q+1} + t^{p+q}) / (1 - t^2)
    let jnum = mono(0, 1)
        .sub(&mono(pi + 1, 1))
        .sub(&mono(qi + 1, 1))
        .add(&mono(pi + qi, 1));
    let jden = mono(0, 1).sub(&mono(2, 1));
    let genus = (p - 1) * (q - 1) / 2;
    let jones_t = jnum
        .div_exact(&jden)
        .ok_or_else(|| Error::consistency("torus Jones division not exact"))?
        .shift(genus as i64);
    let jones = jones_t.substitute_exponents(Var::SqrtT, 2, 1).unwrap();

    Ok(TorusClosedForms {
        alexander,
        jones,
        genus,
    })
}

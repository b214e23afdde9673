//! Exact factorization of integer polynomials and the Fox-Milnor slice
//! obstruction.
//!
//! Factorization is classical Zassenhaus: squarefree decomposition (Yun),
//! distinct/equal-degree factorization mod a small prime, quadratic Hensel
//! lifting, and subset recombination. Inputs are desk scale (degree <= 40).

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Var};
use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Dense integer polynomial, ascending coefficients, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ZPoly {
    pub coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: i64) -> Self {
        ZPoly::new(vec![BigInt::from(c)])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    pub fn primitive(&self) -> ZPoly {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        ZPoly {
            coeffs: self.coeffs.iter().map(|x| x / &c).collect(),
        }
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        if self.is_zero() || other.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ZPoly::new(out)
    }

    /// Exact division; None if the remainder is nonzero.
    pub fn div_exact(&self, d: &ZPoly) -> Option<ZPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        if self.degree() < d.degree() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); self.degree() - d.degree() + 1];
        let dl = d.lc();
        for k in (0..q.len()).rev() {
            let top = rem[k + d.degree()].clone();
            if top.is_zero() {
                continue;
            }
            let (quot, r) = top.div_rem(&dl);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &quot * dc;
            }
            q[k] = quot;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(ZPoly::new(q))
    }

    pub fn derivative(&self) -> ZPoly {
        if self.coeffs.len() <= 1 {
            return ZPoly::zero();
        }
        ZPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i as u64 + 1))
                .collect(),
        )
    }

    /// Coefficient reversal x^deg * p(1/x).
    pub fn reversal(&self) -> ZPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        ZPoly::new(c)
    }

    /// Sign-normalized primitive form (positive leading coefficient).
    pub fn normalized(&self) -> ZPoly {
        let p = self.primitive();
        if p.lc().is_negative() {
            p.neg()
        } else {
            p
        }
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

// ---------- arithmetic mod a small prime ----------

type PPoly = Vec<u64>; // ascending, trimmed

fn ptrim(mut p: PPoly) -> PPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn pdeg(p: &PPoly) -> isize {
    p.len() as isize - 1
}

fn pmul(a: &PPoly, b: &PPoly, m: u64) -> PPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as u128 + x as u128 * y as u128) % m as u128) as u64;
        }
    }
    ptrim(out)
}

fn psub(a: &PPoly, b: &PPoly, m: u64) -> PPoly {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        out[i] = (x + m - y) % m;
    }
    ptrim(out)
}

fn modinv(a: u64, m: u64) -> u64 {
    // Fermat; m prime
    modpow(a, m - 2, m)
}

fn modpow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % m as u128) as u64;
        }
        b = ((b as u128 * b as u128) % m as u128) as u64;
        e >>= 1;
    }
    r
}

fn pscale(a: &PPoly, s: u64, m: u64) -> PPoly {
    ptrim(a.iter().map(|&x| ((x as u128 * s as u128) % m as u128) as u64).collect())
}

fn pmonic(a: &PPoly, m: u64) -> PPoly {
    match a.last() {
        None => Vec::new(),
        Some(&l) if l == 1 => a.clone(),
        Some(&l) => pscale(a, modinv(l, m), m),
    }
}

/// Remainder of a mod b.
fn prem(a: &PPoly, b: &PPoly, m: u64) -> PPoly {
    let mut r = a.clone();
    let db = pdeg(b);
    assert!(db >= 0);
    let binv = modinv(*b.last().unwrap(), m);
    while pdeg(&r) >= db {
        let shift = (pdeg(&r) - db) as usize;
        let f = ((*r.last().unwrap() as u128 * binv as u128) % m as u128) as u64;
        let mut sub = vec![0u64; shift];
        sub.extend(pscale(b, f, m));
        r = psub(&r, &sub, m);
    }
    r
}

fn pgcd(a: &PPoly, b: &PPoly, m: u64) -> PPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = prem(&a, &b, m);
        a = b;
        b = r;
    }
    pmonic(&a, m)
}

fn ppowmod(base: &PPoly, mut e: u128, modp: &PPoly, m: u64) -> PPoly {
    let mut b = prem(base, modp, m);
    let mut r = vec![1u64];
    while e > 0 {
        if e & 1 == 1 {
            r = prem(&pmul(&r, &b, m), modp, m);
        }
        b = prem(&pmul(&b, &b, m), modp, m);
        e >>= 1;
    }
    r
}

fn pderiv(a: &PPoly, m: u64) -> PPoly {
    if a.len() <= 1 {
        return Vec::new();
    }
    ptrim(
        a[1..]
            .iter()
            .enumerate()
            .map(|(i, &c)| ((c as u128 * (i as u128 + 1)) % m as u128) as u64)
            .collect(),
    )
}

/// Factors a squarefree monic polynomial mod p into monic irreducibles.
fn factor_mod_p(f: &PPoly, p: u64, rng: &mut ChaCha8Rng) -> Vec<PPoly> {
    let f = pmonic(f, p);
    let mut out = Vec::new();
    // distinct-degree
    let mut rest = f;
    let mut h = vec![0u64, 1]; // x
    let mut d = 0usize;
    while pdeg(&rest) > 0 {
        d += 1;
        if (pdeg(&rest) as usize) < 2 * d {
            out.push((rest.clone(), pdeg(&rest) as usize));
            break;
        }
        h = ppowmod(&h, p as u128, &rest, p);
        let hx = psub(&h, &[0, 1][..].to_vec(), p);
        let g = pgcd(&hx, &rest, p);
        if pdeg(&g) > 0 {
            out.push((g.clone(), d));
            rest = pmonic(
                &{
                    // exact division rest / g
                    pdivq(&rest, &g, p)
                },
                p,
            );
            h = prem(&h, &rest, p);
        }
    }
    // equal-degree splitting (Cantor-Zassenhaus, p odd)
    let mut irr = Vec::new();
    for (prod, d) in out {
        let mut stack = vec![prod];
        while let Some(g) = stack.pop() {
            let dg = pdeg(&g) as usize;
            if dg == d {
                irr.push(pmonic(&g, p));
                continue;
            }
            // random split
            loop {
                let deg = dg - 1;
                let mut r: PPoly = (0..=deg).map(|_| rng.gen_range(0..p)).collect();
                r = ptrim(r);
                if pdeg(&r) < 1 {
                    continue;
                }
                let e = (p as u128).pow(d as u32) / 2; // (p^d - 1)/2
                let t = ppowmod(&r, e, &g, p);
                let t1 = psub(&t, &vec![1], p);
                let w = pgcd(&t1, &g, p);
                if pdeg(&w) > 0 && pdeg(&w) < pdeg(&g) {
                    let other = pmonic(&pdivq(&g, &w, p), p);
                    stack.push(w);
                    stack.push(other);
                    break;
                }
            }
        }
    }
    irr
}

/// Quotient a / b mod p (exact division assumed).
fn pdivq(a: &PPoly, b: &PPoly, m: u64) -> PPoly {
    let mut r = a.clone();
    let db = pdeg(b);
    let binv = modinv(*b.last().unwrap(), m);
    let mut q = vec![0u64; (pdeg(a) - db + 1).max(0) as usize];
    while pdeg(&r) >= db {
        let shift = (pdeg(&r) - db) as usize;
        let f = ((*r.last().unwrap() as u128 * binv as u128) % m as u128) as u64;
        q[shift] = f;
        let mut sub = vec![0u64; shift];
        sub.extend(pscale(b, f, m));
        r = psub(&r, &sub, m);
    }
    ptrim(q)
}

// ---------- Hensel lifting ----------

/// Polynomials with BigInt coefficients mod m, ascending.
type MPoly = Vec<BigInt>;

fn mtrim(mut p: MPoly) -> MPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn mreduce(p: &[BigInt], m: &BigInt) -> MPoly {
    mtrim(p.iter().map(|c| c.mod_floor(m)).collect())
}

fn mmul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> MPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    mreduce(&out, m)
}

fn msub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> MPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    let mut out = vec![BigInt::zero(); n];
    for (i, o) in out.iter_mut().enumerate() {
        *o = (a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).mod_floor(m);
    }
    mtrim(out)
}

/// Division with remainder by a monic polynomial, mod m.
fn mdivrem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (MPoly, MPoly) {
    let mut r: MPoly = a.to_vec();
    let db = b.len() - 1;
    if r.len() <= db {
        return (Vec::new(), mtrim(r));
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let top = r[k + db].mod_floor(m);
        if !top.is_zero() {
            for (j, bc) in b.iter().enumerate() {
                let v = (&r[k + j] - &top * bc).mod_floor(m);
                r[k + j] = v;
            }
            q[k] = top;
        }
        r.truncate(k + db);
    }
    (mtrim(q), mtrim(mreduce(&r, m)))
}

/// Lifts f = g*h (mod p) with Bezout s*g + t*h = 1 (mod p) to mod p^(2^iters)
/// >= bound. f, g, h monic. Returns (g, h) mod final modulus, and the modulus.
fn hensel_pair(
    f: &ZPoly,
    g0: &PPoly,
    h0: &PPoly,
    p: u64,
    bound: &BigInt,
) -> (MPoly, MPoly, BigInt) {
    let to_m = |v: &PPoly| -> MPoly { v.iter().map(|&c| BigInt::from(c)).collect() };
    let mut m = BigInt::from(p);
    let mut g = to_m(g0);
    let mut h = to_m(h0);
    // Bezout by extended Euclid mod p
    let (s0, t0) = {
        // compute s,t with s*g + t*h = 1 mod p using u64 arithmetic
        let (mut r0, mut r1) = (g0.clone(), h0.clone());
        let (mut s0v, mut s1v): (PPoly, PPoly) = (vec![1], vec![]);
        let (mut t0v, mut t1v): (PPoly, PPoly) = (vec![], vec![1]);
        while !r1.is_empty() {
            let q = pdivq(&r0, &r1, p);
            let r2 = psub(&r0, &pmul(&q, &r1, p), p);
            let s2 = psub(&s0v, &pmul(&q, &s1v, p), p);
            let t2 = psub(&t0v, &pmul(&q, &t1v, p), p);
            r0 = r1;
            r1 = r2;
            s0v = s1v;
            s1v = s2;
            t0v = t1v;
            t1v = t2;
        }
        // r0 is a nonzero constant; divide through
        let inv = modinv(r0[0], p);
        (pscale(&s0v, inv, p), pscale(&t0v, inv, p))
    };
    let mut s = to_m(&s0);
    let mut t = to_m(&t0);
    while &m < bound {
        let m2 = &m * &m;
        // e = f - g*h mod m2
        let fv: MPoly = mreduce(&f.coeffs, &m2);
        let e = msub(&fv, &mmul(&g, &h, &m2), &m2);
        // q, r = (s*e) divrem h; g += t*e + q*g; h += r
        let se = mmul(&s, &e, &m2);
        let (q, r) = mdivrem_monic(&se, &h, &m2);
        let te = mmul(&t, &e, &m2);
        let tg = mmul(&q, &g, &m2);
        let mut gnew = vec![BigInt::zero(); g.len().max(te.len()).max(tg.len())];
        for (i, gn) in gnew.iter_mut().enumerate() {
            let z = BigInt::zero();
            *gn = (g.get(i).unwrap_or(&z) + te.get(i).unwrap_or(&z) + tg.get(i).unwrap_or(&z))
                .mod_floor(&m2);
        }
        let g2 = mtrim(gnew);
        let mut hnew = vec![BigInt::zero(); h.len().max(r.len())];
        for (i, hn) in hnew.iter_mut().enumerate() {
            let z = BigInt::zero();
            *hn = (h.get(i).unwrap_or(&z) + r.get(i).unwrap_or(&z)).mod_floor(&m2);
        }
        let h2 = mtrim(hnew);
        // lift Bezout: b = s*g2 + t*h2 - 1; s -= s*b mod h2 stuff (standard)
        let sg = mmul(&s, &g2, &m2);
        let th = mmul(&t, &h2, &m2);
        let mut b = vec![BigInt::zero(); sg.len().max(th.len()).max(1)];
        for (i, bb) in b.iter_mut().enumerate() {
            let z = BigInt::zero();
            *bb = (sg.get(i).unwrap_or(&z) + th.get(i).unwrap_or(&z)).mod_floor(&m2);
        }
        b[0] = (&b[0] - BigInt::one()).mod_floor(&m2);
        let b = mtrim(b);
        let sb = mmul(&s, &b, &m2);
        let (c, d) = mdivrem_monic(&sb, &h2, &m2);
        let s2 = msub(&s, &d, &m2);
        let tb = mmul(&t, &b, &m2);
        let cg = mmul(&c, &g2, &m2);
        let mut tsum = vec![BigInt::zero(); tb.len().max(cg.len())];
        for (i, ts) in tsum.iter_mut().enumerate() {
            let z = BigInt::zero();
            *ts = (tb.get(i).unwrap_or(&z) + cg.get(i).unwrap_or(&z)).mod_floor(&m2);
        }
        let t2 = msub(&t, &mtrim(tsum), &m2);
        g = g2;
        h = h2;
        s = s2;
        t = t2;
        m = m2;
    }
    (g, h, m)
}

/// Lifts the full list of monic mod-p factors of monic f to mod p^k >= bound
/// via a binary factor tree.
fn hensel_tree(f: &ZPoly, factors: &[PPoly], p: u64, bound: &BigInt) -> (Vec<MPoly>, BigInt) {
    if factors.len() == 1 {
        let m = {
            let mut m = BigInt::from(p);
            while &m < bound {
                m = &m * &m;
            }
            m
        };
        return (vec![mreduce(&f.coeffs, &m)], m);
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let gp = left.iter().fold(vec![1u64], |acc, x| pmul(&acc, x, p));
    let hp = right.iter().fold(vec![1u64], |acc, x| pmul(&acc, x, p));
    let (g, h, m) = hensel_pair(f, &gp, &hp, p, bound);
    let to_z = |v: &MPoly, m: &BigInt| -> ZPoly {
        let half = m / 2;
        ZPoly::new(
            v.iter()
                .map(|c| {
                    let c = c.mod_floor(m);
                    if c > half {
                        c - m
                    } else {
                        c
                    }
                })
                .collect(),
        )
    };
    let (lf, m1) = hensel_tree(&to_z(&g, &m), left, p, bound);
    let (rf, m2) = hensel_tree(&to_z(&h, &m), right, p, bound);
    debug_assert_eq!(m1, m2);
    (lf.into_iter().chain(rf).collect(), m1)
}

// ---------- top level factorization ----------

const PRIMES: [u64; 12] = [
    1000003, 1000033, 1000037, 1000039, 1000081, 1000099, 1000117, 1000121, 1000133, 1000151,
    1000159, 1000171,
];

/// Factors a primitive squarefree polynomial into irreducibles over Z.
fn factor_squarefree(f: &ZPoly) -> Result<Vec<ZPoly>> {
    let n = f.degree();
    if n == 0 {
        return Ok(Vec::new());
    }
    if n == 1 {
        return Ok(vec![f.normalized()]);
    }
    // choose a prime keeping f squarefree with invertible lc
    let mut chosen = None;
    'prime: for &p in &PRIMES {
        let lc = f.lc().mod_floor(&BigInt::from(p));
        if lc.is_zero() {
            continue;
        }
        let fp: PPoly = ptrim(
            f.coeffs
                .iter()
                .map(|c| {
                    let r = c.mod_floor(&BigInt::from(p));
                    r.to_u64_digits().1.first().copied().unwrap_or(0)
                })
                .collect(),
        );
        let g = pgcd(&fp, &pderiv(&fp, p), p);
        if pdeg(&g) == 0 {
            chosen = Some((p, fp));
            break 'prime;
        }
    }
    let Some((p, fp)) = chosen else {
        return Err(Error::resource(
            "no suitable prime found for factorization (input too degenerate)",
        ));
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e1f_e27a);
    let modular = factor_mod_p(&pmonic(&fp, p), p, &mut rng);
    if modular.len() == 1 {
        return Ok(vec![f.normalized()]);
    }
    if modular.len() > 24 {
        return Err(Error::resource(format!(
            "too many modular factors ({}) for subset recombination",
            modular.len()
        )));
    }
    // Landau-Mignotte style bound on coefficients of any factor of lc * f
    let bound = {
        let norm = f.max_abs_coeff();
        let two_n = BigInt::from(2u64).pow(n as u32 + 1);
        two_n * norm * f.lc().abs() * 2 + 1
    };
    // make f monic times lc: work with f directly but track lc in candidates
    let monic_target = {
        // f_monic mod m is handled inside hensel via monic modular factors;
        // lift against lc-adjusted f: standard trick f* = lc^(deg-1) f(x/lc)
        // is avoided; instead lift with f made monic mod m.
        f.clone()
    };
    // Hensel wants monic f mod p^k; multiply f by inverse of lc mod modulus.
    let mut m = BigInt::from(p);
    while m < bound {
        m = &m * &m;
    }
    let lcinv = mod_inverse(&f.lc(), &m)
        .ok_or_else(|| Error::consistency("leading coefficient not invertible mod p^k"))?;
    let f_monic = ZPoly::new(
        monic_target
            .coeffs
            .iter()
            .map(|c| (c * &lcinv).mod_floor(&m))
            .collect(),
    );
    let (lifted, m) = hensel_tree(&f_monic, &modular, p, &bound);
    // subset recombination
    let mut remaining: Vec<MPoly> = lifted;
    let mut current = f.clone();
    let mut out: Vec<ZPoly> = Vec::new();
    let mut k = 1usize;
    let half = &m / 2;
    let center = |c: &BigInt| -> BigInt {
        let c = c.mod_floor(&m);
        if c > half {
            c - &m
        } else {
            c
        }
    };
    'outer: while 2 * k <= remaining.len() {
        for combo in (0..remaining.len()).combinations(k) {
            // candidate = lc(current) * prod of chosen, centered
            let mut prod: MPoly = vec![current.lc().mod_floor(&m)];
            for &i in &combo {
                prod = mmul(&prod, &remaining[i], &m);
            }
            let cand = ZPoly::new(prod.iter().map(&center).collect()).primitive();
            if let Some(quot) = current.div_exact(&cand) {
                out.push(cand.normalized());
                current = quot;
                let keep: Vec<MPoly> = remaining
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, v)| v.clone())
                    .collect();
                remaining = keep;
                continue 'outer;
            }
        }
        k += 1;
    }
    if current.degree() > 0 {
        out.push(current.normalized());
    }
    Ok(out)
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Full factorization over Z: returns (unit_and_content, [(irreducible,
/// multiplicity)]). Degree capped at 40 (resource error beyond).
pub fn factor_z(f: &ZPoly) -> Result<(BigInt, Vec<(ZPoly, usize)>)> {
    if f.is_zero() {
        return Err(Error::input("cannot factor the zero polynomial"));
    }
    if f.degree() > 40 {
        return Err(Error::resource(format!(
            "factorization capped at degree 40, got {}",
            f.degree()
        )));
    }
    let content = f.content() * if f.lc().is_negative() { -1 } else { 1 };
    let mut prim = f.primitive();
    if prim.lc().is_negative() {
        prim = prim.neg();
    }
    // strip powers of x
    let mut xpow = 0usize;
    while prim.coeffs.first().is_some_and(|c| c.is_zero()) {
        prim.coeffs.remove(0);
        xpow += 1;
    }
    let mut factors: Vec<(ZPoly, usize)> = Vec::new();
    if xpow > 0 {
        factors.push((ZPoly::new(vec![BigInt::zero(), BigInt::one()]), xpow));
    }
    // Yun squarefree decomposition
    let mut sq: Vec<(ZPoly, usize)> = Vec::new();
    if prim.degree() > 0 {
        let fd = prim.derivative();
        let a = zgcd(&prim, &fd);
        let mut b = prim
            .div_exact(&a)
            .ok_or_else(|| Error::consistency("gcd does not divide in Yun step"))?;
        let mut c = fd
            .div_exact(&a)
            .ok_or_else(|| Error::consistency("gcd does not divide derivative in Yun step"))?;
        let mut d = zsub(&c, &b.derivative());
        let mut i = 1usize;
        while b.degree() > 0 {
            let g = zgcd(&b, &d);
            if g.degree() > 0 {
                sq.push((g.normalized(), i));
            }
            b = b
                .div_exact(&g)
                .ok_or_else(|| Error::consistency("Yun factor does not divide"))?;
            c = d
                .div_exact(&g)
                .ok_or_else(|| Error::consistency("Yun cofactor does not divide"))?;
            d = zsub(&c, &b.derivative());
            i += 1;
        }
    }
    for (part, mult) in sq {
        for irr in factor_squarefree(&part)? {
            factors.push((irr, mult));
        }
    }
    factors.sort();
    Ok((content, factors))
}

fn zsub(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let n = a.coeffs.len().max(b.coeffs.len());
    let z = BigInt::zero();
    ZPoly::new(
        (0..n)
            .map(|i| a.coeffs.get(i).unwrap_or(&z) - b.coeffs.get(i).unwrap_or(&z))
            .collect(),
    )
}

/// Primitive gcd over Z via the subresultant-free route: gcd of primitive
/// parts using pseudo-remainders.
fn zgcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let mut a = a.primitive();
    let mut b = b.primitive();
    if a.is_zero() {
        return b;
    }
    if b.is_zero() {
        return a;
    }
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        // pseudo-remainder of a by b
        let d = a.degree() - b.degree();
        let mut r = a.clone();
        let bl = b.lc();
        for _ in 0..=d {
            if r.is_zero() || r.degree() < b.degree() {
                break;
            }
            let shift = r.degree() - b.degree();
            let top = r.lc();
            // r = bl*r - top * x^shift * b
            let mut scaled: Vec<BigInt> = r.coeffs.iter().map(|c| c * &bl).collect();
            for (j, bc) in b.coeffs.iter().enumerate() {
                scaled[shift + j] -= &top * bc;
            }
            r = ZPoly::new(scaled);
        }
        a = b;
        b = r.primitive();
    }
    a.normalized()
}

// ---------- Fox-Milnor ----------

/// Converts a normalized Alexander polynomial to the integer polynomial
/// t^d * Delta(t).
pub fn alexander_to_zpoly(delta: &LaurentPoly) -> Result<ZPoly> {
    if delta.var() != Var::T {
        return Err(Error::input("Fox-Milnor expects a polynomial in t"));
    }
    if delta.is_zero() {
        return Err(Error::input("zero Alexander polynomial"));
    }
    let lo = delta.min_exp().unwrap();
    let hi = delta.max_exp().unwrap();
    let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (e, c) in delta.terms() {
        coeffs[(e - lo) as usize] = c.clone();
    }
    Ok(ZPoly::new(coeffs))
}

/// Fox-Milnor slice obstruction: true iff Delta(t) = +-t^k f(t) f(1/t) for
/// some integer polynomial f. False means the knot is not smoothly slice.
pub fn fox_milnor_test(delta: &LaurentPoly) -> Result<bool> {
    let p = alexander_to_zpoly(delta)?;
    if p.degree() == 0 {
        return Ok(true); // Delta = 1
    }
    if p.degree() % 2 != 0 {
        return Ok(false);
    }
    let (content, factors) = factor_z(&p)?;
    // content must be +- a perfect square
    let c = content.abs();
    if !c.sqrt().pow(2).eq(&c) {
        return Ok(false);
    }
    // pair each irreducible with its reversal
    let mut counts: std::collections::BTreeMap<ZPoly, usize> = Default::default();
    for (f, m) in factors {
        *counts.entry(f).or_insert(0) += m;
    }
    for (f, &m) in counts.clone().iter() {
        let rev = f.reversal().normalized();
        if rev == *f {
            if m % 2 != 0 {
                return Ok(false);
            }
        } else {
            let mrev = counts.get(&rev).copied().unwrap_or(0);
            if mrev != m {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

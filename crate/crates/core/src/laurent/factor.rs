//! Irreducible factorization over Z[t] via Kronecker interpolation, and the
//! factorization-property decision `p ~ f(t) f(t^-1)`.
//!
//! Kronecker search is adequate for the desk-scale degrees this crate deals
//! with (default bound 12). Two ingredients keep it fast in practice:
//! a mod-p distinct-degree prefilter that rules out impossible factor
//! degrees, and incremental Newton divided differences over consecutive
//! integer nodes, which prune almost all divisor combinations early.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};

use super::{LaurentError, LaurentPoly};

pub const DEFAULT_DEGREE_BOUND: i64 = 12;

/// A complete factorization `unit_sign * t^unit_exp * prod factor^mult`.
///
/// Factors are ordinary polynomials with min_exp 0, nonzero constant term
/// and positive leading coefficient, irreducible over Z[t]; prime integers
/// appear as constant factors when the content is not `±1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit_sign: i8,
    pub unit_exp: i64,
    pub factors: Vec<(LaurentPoly, u32)>,
}

impl Factorization {
    /// Reassembles the original polynomial exactly.
    pub fn product(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::term(self.unit_sign as i64, self.unit_exp);
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = &acc * f;
            }
        }
        acc
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// Total number of irreducible factors, with multiplicity.
    pub fn factor_count(&self) -> u32 {
        self.factors.iter().map(|(_, m)| m).sum()
    }
}

pub fn factor(p: &LaurentPoly) -> Result<Factorization, LaurentError> {
    factor_with_bound(p, DEFAULT_DEGREE_BOUND)
}

pub fn factor_with_bound(p: &LaurentPoly, bound: i64) -> Result<Factorization, LaurentError> {
    if p.is_zero() {
        return Err(LaurentError::ZeroPolynomial);
    }
    if p.span() > bound {
        return Err(LaurentError::DegreeTooLarge { degree: p.span(), bound });
    }
    let unit_exp = p.min_exp();
    let mut coeffs: Vec<BigInt> = p.coeffs().to_vec();
    let unit_sign = if coeffs.last().unwrap().is_negative() {
        coeffs.iter_mut().for_each(|c| *c = -&*c);
        -1
    } else {
        1
    };
    let mut factors: Vec<Vec<BigInt>> = Vec::new();
    let content = coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !content.is_one() {
        for c in coeffs.iter_mut() {
            *c = &*c / &content;
        }
        for prime in prime_factors(&content) {
            factors.push(vec![prime]);
        }
    }
    factor_primitive(coeffs, &mut factors);

    let mut grouped: BTreeMap<LaurentPoly, u32> = BTreeMap::new();
    for f in factors {
        *grouped.entry(LaurentPoly::from_coeffs(0, f)).or_insert(0) += 1;
    }
    Ok(Factorization {
        unit_sign,
        unit_exp,
        factors: grouped.into_iter().collect(),
    })
}

/// Factors a primitive polynomial with positive leading coefficient,
/// pushing irreducible factors (constant term may be zero on entry:
/// powers of t are split off first).
fn factor_primitive(mut q: Vec<BigInt>, out: &mut Vec<Vec<BigInt>>) {
    trim(&mut q);
    let shift = q.iter().take_while(|c| c.is_zero()).count();
    if shift > 0 {
        q.drain(..shift);
        for _ in 0..shift {
            out.push(vec![BigInt::zero(), BigInt::one()]);
        }
    }
    if deg(&q) == 0 {
        return; // q == 1 after content extraction
    }

    // Linear factors via the rational root theorem.
    loop {
        if deg(&q) < 1 {
            return;
        }
        match find_linear_factor(&q) {
            Some(lin) => {
                q = exact_div(&q, &lin).expect("linear factor must divide");
                out.push(lin);
            }
            None => break,
        }
    }

    let d = deg(&q);
    if d == 0 {
        return;
    }
    if d <= 3 {
        // No linear factor and degree <= 3 means irreducible.
        out.push(q);
        return;
    }

    let feasible = feasible_degrees(&q, d);
    if feasible.iter().all(|&ok| !ok) {
        out.push(q);
        return;
    }

    for k in 2..=d / 2 {
        if !feasible[k] {
            continue;
        }
        if let Some(g) = kronecker_search(&q, k) {
            let cofactor = exact_div(&q, &g).expect("kronecker factor must divide");
            // Smaller degrees were exhausted, so g is irreducible.
            let mut rest = cofactor;
            loop {
                out.push(g.clone());
                match exact_div(&rest, &g) {
                    Some(r) => rest = r,
                    None => break,
                }
            }
            factor_primitive(rest, out);
            return;
        }
    }
    out.push(q);
}

/// Returns the Fox-Milnor witness `f` with
/// `canonicalize(f(t) f(t^-1)) = canonicalize(p)` if one exists.
///
/// Pairs each irreducible factor with one whose canonical form is the
/// canonical form of its involution; a self-paired factor must occur with
/// even multiplicity.
pub fn fox_milnor_witness(p: &LaurentPoly) -> Result<Option<LaurentPoly>, LaurentError> {
    let fact = factor(p)?;
    let mut classes: BTreeMap<LaurentPoly, u32> = BTreeMap::new();
    for (f, m) in &fact.factors {
        *classes.entry(f.canonicalize().unwrap()).or_insert(0) += m;
    }
    let mut witness = LaurentPoly::one();
    let keys: Vec<LaurentPoly> = classes.keys().cloned().collect();
    let mut done: BTreeMap<LaurentPoly, bool> = BTreeMap::new();
    for q in keys {
        if done.contains_key(&q) {
            continue;
        }
        let m = classes[&q];
        let qbar = q.involute().canonicalize().unwrap();
        if qbar == q {
            if m % 2 != 0 {
                return Ok(None);
            }
            for _ in 0..m / 2 {
                witness = &witness * &q;
            }
            done.insert(q, true);
        } else {
            match classes.get(&qbar) {
                Some(&mbar) if mbar == m => {
                    for _ in 0..m {
                        witness = &witness * &q;
                    }
                    done.insert(q, true);
                    done.insert(qbar, true);
                }
                _ => return Ok(None),
            }
        }
    }
    let product = &witness * &witness.involute();
    debug_assert_eq!(product.canonicalize().unwrap(), p.canonicalize().unwrap());
    Ok(Some(witness.canonicalize().unwrap()))
}

// ---- dense Z[t] helpers (ascending coefficients, trimmed) ----

fn deg(p: &[BigInt]) -> usize {
    p.len().saturating_sub(1)
}

fn trim(p: &mut Vec<BigInt>) {
    while p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
}

fn eval(p: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Exact division in Z[t]; None when the division is not exact.
fn exact_div(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    if b.is_empty() || a.len() < b.len() {
        return None;
    }
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - b.len() + 1];
    let lead_b = b.last().unwrap();
    for i in (0..quot.len()).rev() {
        let lead_r = &rem[i + b.len() - 1];
        if lead_r.is_zero() {
            continue;
        }
        let (q, r) = lead_r.div_rem(lead_b);
        if !r.is_zero() {
            return None;
        }
        for (j, bc) in b.iter().enumerate() {
            let prod = &q * bc;
            rem[i + j] -= prod;
        }
        quot[i] = q;
    }
    if rem.iter().all(|c| c.is_zero()) {
        Some(quot)
    } else {
        None
    }
}

fn find_linear_factor(q: &[BigInt]) -> Option<Vec<BigInt>> {
    let lead = q.last().unwrap().abs();
    let cons = q[0].abs();
    debug_assert!(!cons.is_zero());
    for a in divisors(&lead) {
        for b in divisors(&cons) {
            if a.gcd(&b) != BigInt::one() {
                continue;
            }
            for b_signed in [b.clone(), -&b] {
                let cand = vec![b_signed, a.clone()];
                if exact_div(q, &cand).is_some() {
                    return Some(cand);
                }
            }
        }
    }
    None
}

/// Positive divisors, unsorted.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return Vec::new();
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in prime_factorization(&n) {
        let base: Vec<BigInt> = divs.clone();
        let mut power = BigInt::one();
        for _ in 0..e {
            power = &power * &p;
            for d in &base {
                divs.push(d * &power);
            }
        }
    }
    divs
}

fn prime_factors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    for (p, e) in prime_factorization(n) {
        for _ in 0..e {
            out.push(p.clone());
        }
    }
    out
}

fn prime_factorization(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        let mut e = 0u32;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if n > BigInt::one() {
        out.push((n, 1));
    }
    out
}

// ---- mod-p prefilter ----

const FILTER_PRIMES: [i64; 6] = [3, 5, 7, 11, 13, 17];

/// feasible[k] is true when a factor of degree k is not excluded by the
/// distinct-degree factorization patterns mod the filter primes.
fn feasible_degrees(q: &[BigInt], d: usize) -> Vec<bool> {
    let mut feasible = vec![true; d / 2 + 1];
    feasible[0] = false;
    if d >= 1 {
        // Linear factors were already extracted.
        if feasible.len() > 1 {
            feasible[1] = false;
        }
    }
    for p in FILTER_PRIMES {
        if (q.last().unwrap() % p).is_zero() {
            continue;
        }
        let Some(pattern) = ddf_degree_pattern(q, p) else { continue };
        let sums = subset_sums(&pattern, d);
        for k in 2..feasible.len() {
            if !sums[k] {
                feasible[k] = false;
            }
        }
    }
    feasible
}

/// Multiset of irreducible-factor degrees of q mod p, with multiplicity.
/// Multiplicities are peeled off with repeated gcd(f, f') rounds; each
/// round runs distinct-degree factorization on its squarefree part.
/// Returns None when a multiplicity divisible by p shows up (f' vanishes),
/// in which case this prime gives no information.
fn ddf_degree_pattern(q: &[BigInt], p: i64) -> Option<Vec<usize>> {
    let mut f = reduce_mod(q, p);
    make_monic(&mut f, p);
    let mut degrees = Vec::new();
    while polydeg(&f) > 0 {
        let fp = derivative_mod(&f, p);
        if fp.is_empty() {
            return None; // f is a p-th power mod p
        }
        let g = gcd_mod(&f, &fp, p);
        let mut squarefree = div_mod(&f, &g, p);
        make_monic(&mut squarefree, p);
        if polydeg(&squarefree) == 0 {
            return None;
        }
        // DDF on the squarefree part.
        let mut h = vec![0, 1]; // x
        let mut rest = squarefree;
        let mut dd = 1usize;
        while polydeg(&rest) >= 2 * dd {
            h = powmod_frobenius(&h, p, &rest);
            let mut hx = h.clone();
            sub_x(&mut hx, p);
            let gd = gcd_mod(&rest, &hx, p);
            if polydeg(&gd) > 0 {
                for _ in 0..polydeg(&gd) / dd {
                    degrees.push(dd);
                }
                rest = div_mod(&rest, &gd, p);
                make_monic(&mut rest, p);
                h = rem_mod(&h, &rest, p);
            }
            dd += 1;
        }
        if polydeg(&rest) > 0 {
            degrees.push(polydeg(&rest));
        }
        f = g;
        make_monic(&mut f, p);
    }
    Some(degrees)
}

fn subset_sums(pattern: &[usize], cap: usize) -> Vec<bool> {
    let mut sums = vec![false; cap + 1];
    sums[0] = true;
    for &d in pattern {
        for k in (d..=cap).rev() {
            if sums[k - d] {
                sums[k] = true;
            }
        }
    }
    sums
}

// Small dense polynomial arithmetic over F_p with i64 coefficients.

fn reduce_mod(q: &[BigInt], p: i64) -> Vec<i64> {
    let mut f: Vec<i64> = q
        .iter()
        .map(|c| {
            let r = c % p;
            let mut v = i64::try_from(r).unwrap();
            if v < 0 {
                v += p;
            }
            v
        })
        .collect();
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn polydeg(f: &[i64]) -> usize {
    f.len().saturating_sub(1)
}

fn inv_mod(a: i64, p: i64) -> i64 {
    // Fermat; p is prime and a != 0 mod p.
    let mut result = 1i64;
    let mut base = a.rem_euclid(p);
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

fn make_monic(f: &mut Vec<i64>, p: i64) {
    while f.last() == Some(&0) {
        f.pop();
    }
    if let Some(&lc) = f.last() {
        if lc != 1 {
            let inv = inv_mod(lc, p);
            for c in f.iter_mut() {
                *c = *c * inv % p;
            }
        }
    }
}

fn derivative_mod(f: &[i64], p: i64) -> Vec<i64> {
    let mut out: Vec<i64> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| (i as i64 % p) * c % p)
        .collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

fn rem_mod(a: &[i64], m: &[i64], p: i64) -> Vec<i64> {
    let mut r = a.to_vec();
    while r.last() == Some(&0) {
        r.pop();
    }
    while r.len() >= m.len() && !m.is_empty() {
        let shift = r.len() - m.len();
        let coef = *r.last().unwrap() * inv_mod(*m.last().unwrap(), p) % p;
        for (j, &mc) in m.iter().enumerate() {
            r[shift + j] = (r[shift + j] - coef * mc).rem_euclid(p);
        }
        while r.last() == Some(&0) {
            r.pop();
        }
    }
    r
}

fn div_mod(a: &[i64], b: &[i64], p: i64) -> Vec<i64> {
    let mut r = a.to_vec();
    while r.last() == Some(&0) {
        r.pop();
    }
    let mut q = vec![0i64; r.len().saturating_sub(b.len()) + 1];
    let inv = inv_mod(*b.last().unwrap(), p);
    while r.len() >= b.len() && r.last() != Some(&0) {
        let shift = r.len() - b.len();
        let coef = *r.last().unwrap() * inv % p;
        q[shift] = coef;
        for (j, &bc) in b.iter().enumerate() {
            r[shift + j] = (r[shift + j] - coef * bc).rem_euclid(p);
        }
        while r.last() == Some(&0) {
            r.pop();
        }
    }
    while q.last() == Some(&0) {
        q.pop();
    }
    q
}

fn gcd_mod(a: &[i64], b: &[i64], p: i64) -> Vec<i64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while a.last() == Some(&0) {
        a.pop();
    }
    while b.last() == Some(&0) {
        b.pop();
    }
    while !b.is_empty() {
        let r = rem_mod(&a, &b, p);
        a = b;
        b = r;
    }
    make_monic(&mut a, p);
    if a.is_empty() {
        a.push(0);
    }
    a
}

fn mulmod(a: &[i64], b: &[i64], m: &[i64], p: i64) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut prod = vec![0i64; a.len() + b.len() - 1];
    for (i, &ac) in a.iter().enumerate() {
        if ac == 0 {
            continue;
        }
        for (j, &bc) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ac * bc) % p;
        }
    }
    rem_mod(&prod, m, p)
}

/// h^p mod m over F_p.
fn powmod_frobenius(h: &[i64], p: i64, m: &[i64]) -> Vec<i64> {
    let mut result = vec![1i64];
    let mut base = h.to_vec();
    let mut e = p;
    while e > 0 {
        if e & 1 == 1 {
            result = mulmod(&result, &base, m, p);
        }
        base = mulmod(&base, &base, m, p);
        e >>= 1;
    }
    result
}

fn sub_x(h: &mut Vec<i64>, p: i64) {
    if h.len() < 2 {
        h.resize(2, 0);
    }
    h[1] = (h[1] - 1).rem_euclid(p);
    while h.last() == Some(&0) {
        h.pop();
    }
}

// ---- Kronecker interpolation ----

/// Searches for a degree-k factor of q by interpolating through divisor
/// tuples at k+1 consecutive integer nodes. Returns a factor with positive
/// leading coefficient, or None.
fn kronecker_search(q: &[BigInt], k: usize) -> Option<Vec<BigInt>> {
    let start = -((k / 2) as i64);
    let nodes: Vec<i64> = (0..=k as i64).map(|i| start + i).collect();
    let values: Vec<BigInt> = nodes.iter().map(|&x| eval(q, &BigInt::from(x))).collect();
    debug_assert!(values.iter().all(|v| !v.is_zero()));

    let divisor_lists: Vec<Vec<BigInt>> = values
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let pos = divisors(v);
            if i == 0 {
                pos // sign of the candidate is normalized by d_0 > 0
            } else {
                pos.into_iter().flat_map(|d| [d.clone(), -d]).collect()
            }
        })
        .collect();

    let lead = q.last().unwrap();
    let mut newton: Vec<Vec<BigInt>> = vec![Vec::new(); k + 1];
    search(q, k, &nodes, &divisor_lists, lead, &mut newton, 0)
}

/// DFS over divisor choices, maintaining Newton divided differences.
/// `newton[i]` holds the difference column after fixing values 0..=i.
#[allow(clippy::too_many_arguments)]
fn search(
    q: &[BigInt],
    k: usize,
    nodes: &[i64],
    divisor_lists: &[Vec<BigInt>],
    lead: &BigInt,
    newton: &mut Vec<Vec<BigInt>>,
    depth: usize,
) -> Option<Vec<BigInt>> {
    if depth == k + 1 {
        // Leading Newton coefficient is the candidate's leading coefficient.
        let lc = newton[k].last().unwrap().clone();
        if lc.is_zero() || !(lead % &lc).is_zero() {
            return None;
        }
        let mut cand = newton_to_poly(nodes, newton);
        if cand.last().unwrap().is_negative() {
            cand.iter_mut().for_each(|c| *c = -&*c);
        }
        return exact_div(q, &cand).map(|_| cand);
    }
    for d in &divisor_lists[depth] {
        // Divided differences at consecutive integer nodes must be integers.
        let mut column = vec![d.clone()];
        let mut ok = true;
        for m in 1..=depth {
            let diff = column[m - 1].clone() - &newton[depth - 1][m - 1];
            let (val, rem) = diff.div_rem(&BigInt::from(m as i64));
            if !rem.is_zero() {
                ok = false;
                break;
            }
            column.push(val);
        }
        if !ok {
            continue;
        }
        newton[depth] = column;
        if let Some(f) = search(q, k, nodes, divisor_lists, lead, newton, depth + 1) {
            return Some(f);
        }
    }
    None
}

/// Expands the Newton form with coefficients `newton[k]` (top diagonal)
/// back into monomial coefficients.
fn newton_to_poly(nodes: &[i64], newton: &[Vec<BigInt>]) -> Vec<BigInt> {
    let k = nodes.len() - 1;
    // Top-diagonal Newton coefficients: f[x0], f[x0,x1], ..., f[x0..xk].
    let coeffs: Vec<BigInt> = (0..=k).map(|i| newton[i][i].clone()).collect();
    let mut poly = vec![BigInt::zero()];
    let mut basis = vec![BigInt::one()];
    for (i, c) in coeffs.iter().enumerate() {
        if poly.len() < basis.len() {
            poly.resize(basis.len(), BigInt::zero());
        }
        for (j, b) in basis.iter().enumerate() {
            poly[j] += c * b;
        }
        if i < k {
            // basis *= (t - nodes[i])
            let mut next = vec![BigInt::zero(); basis.len() + 1];
            for (j, b) in basis.iter().enumerate() {
                next[j + 1] += b;
                next[j] -= b * BigInt::from(nodes[i]);
            }
            basis = next;
        }
    }
    poly
}

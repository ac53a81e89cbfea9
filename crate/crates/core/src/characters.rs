//! Dirichlet characters mod q, Gauss sums, and the Kronecker character of a
//! fundamental discriminant.
//!
//! Characters are built from a decomposition of (ℤ/qℤ)× into cyclic factors
//! (for 2^e: ⟨−1⟩ × ⟨3⟩; for odd p^e: a primitive root). Every character
//! value is stored both as a complex double and as an exact fraction of a
//! full turn, so products and multiplicativity checks reduce to integer
//! arithmetic mod the group exponent.
//!
//! The canonical `label` of a character is the mixed-radix index of its
//! exponent vector on the fixed generator list; enumeration returns
//! characters sorted by (conductor, label), which pins a reproducible order
//! for CSV output and fixtures.

use num_complex::Complex64;
use num_integer::gcd;
use serde::Serialize;

use crate::error::{EvalError, Result};

/// Largest modulus accepted by the constructors.
pub const MODULUS_BOUND: u64 = 1_000_000;

/// An exact root of unity e^{2πi·num/den}, reduced, 0 ≤ num < den.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TurnFraction {
    pub num: u64,
    pub den: u64,
}

impl TurnFraction {
    pub fn new(num: u64, den: u64) -> Self {
        debug_assert!(den > 0);
        let num = num % den;
        let g = gcd(num, den);
        if g > 1 {
            TurnFraction {
                num: num / g,
                den: den / g,
            }
        } else {
            TurnFraction { num, den }
        }
    }

    pub const ONE: TurnFraction = TurnFraction { num: 0, den: 1 };

    /// Exact product of the two roots of unity (sum of turn fractions).
    pub fn mul(self, other: TurnFraction) -> TurnFraction {
        let den = self.den / gcd(self.den, other.den) * other.den;
        let num = (self.num as u128 * (den / self.den) as u128
            + other.num as u128 * (den / other.den) as u128)
            % den as u128;
        TurnFraction::new(num as u64, den)
    }

    pub fn conj(self) -> TurnFraction {
        TurnFraction::new((self.den - self.num) % self.den, self.den)
    }

    pub fn is_one(self) -> bool {
        self.num == 0
    }

    /// Complex value; quarter-turn multiples are exact.
    pub fn to_complex(self) -> Complex64 {
        match (self.num, self.den) {
            (0, _) => Complex64::new(1.0, 0.0),
            (1, 2) => Complex64::new(-1.0, 0.0),
            (1, 4) => Complex64::new(0.0, 1.0),
            (3, 4) => Complex64::new(0.0, -1.0),
            (n, d) => {
                let (sin, cos) = (2.0 * std::f64::consts::PI * n as f64 / d as f64).sin_cos();
                Complex64::new(cos, sin)
            }
        }
    }
}

/// A Dirichlet character mod q with tabulated values.
#[derive(Debug, Clone)]
pub struct DirichletCharacter {
    modulus: u64,
    label: u64,
    values: Vec<Option<TurnFraction>>,
    complex_values: Vec<Complex64>,
    kappa: u8,
    conductor: u64,
}

/// Gauss sum G(χ) = Σ_{r=1}^{q} χ(r) e^{2πir/q}.
#[derive(Debug, Clone, Copy)]
pub struct GaussSumValue {
    pub value: Complex64,
    pub modulus: u64,
}

impl DirichletCharacter {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn label(&self) -> u64 {
        self.label
    }

    /// Parity: 0 when χ(−1) = 1 (even), 1 otherwise.
    pub fn kappa(&self) -> u8 {
        self.kappa
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor == self.modulus
    }

    pub fn is_principal(&self) -> bool {
        self.conductor == 1
    }

    /// True when every value is real (χ = χ̄).
    pub fn is_real(&self) -> bool {
        self.values
            .iter()
            .flatten()
            .all(|f| f.num == 0 || (f.den == 2 && f.num == 1))
    }

    /// χ(n), reduced mod q; 0 off the units.
    pub fn value(&self, n: u64) -> Complex64 {
        self.complex_values[(n % self.modulus) as usize]
    }

    /// χ(n) as an exact turn fraction, `None` when gcd(n,q) > 1.
    pub fn turn(&self, n: u64) -> Option<TurnFraction> {
        self.values[(n % self.modulus) as usize]
    }

    /// The complex-conjugate character χ̄.
    pub fn conjugate(&self) -> DirichletCharacter {
        let values: Vec<Option<TurnFraction>> =
            self.values.iter().map(|v| v.map(TurnFraction::conj)).collect();
        let complex_values = values
            .iter()
            .map(|v| v.map_or(Complex64::new(0.0, 0.0), TurnFraction::to_complex))
            .collect();
        let label = conjugate_label(self.modulus, self.label);
        DirichletCharacter {
            modulus: self.modulus,
            label,
            values,
            complex_values,
            kappa: self.kappa,
            conductor: self.conductor,
        }
    }

    /// Serialization per the wire format:
    /// `{q, label, values: [[num,den] | null, …], kappa, conductor}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "q": self.modulus,
            "label": self.label,
            "values": self.values
                .iter()
                .map(|v| v.map(|f| serde_json::json!([f.num, f.den]))
                    .unwrap_or(serde_json::Value::Null))
                .collect::<Vec<_>>(),
            "kappa": self.kappa,
            "conductor": self.conductor,
        })
    }
}

/// One cyclic factor of (ℤ/qℤ)×: a generator mod q and its order.
#[derive(Debug, Clone, Copy)]
struct CyclicFactor {
    generator: u64,
    order: u64,
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % modulus as u128) as u64;
        }
        base = (base as u128 * base as u128 % modulus as u128) as u64;
        exp >>= 1;
    }
    acc
}

fn primitive_root_mod_p(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let phi = p - 1;
    let factors = factorize(phi);
    'outer: for g in 2..p {
        for &(f, _) in &factors {
            if pow_mod(g, phi / f, p) == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("prime has a primitive root")
}

/// Cyclic factors of (ℤ/p^eℤ)× with generators lifted mod p^e.
fn prime_power_factors(p: u64, e: u32) -> Vec<CyclicFactor> {
    let pe = p.pow(e);
    if p == 2 {
        match e {
            1 => vec![],
            2 => vec![CyclicFactor { generator: 3, order: 2 }],
            _ => vec![
                CyclicFactor { generator: pe - 1, order: 2 },
                CyclicFactor { generator: 3, order: pe / 4 },
            ],
        }
    } else {
        let g = primitive_root_mod_p(p);
        // lift: g must stay primitive mod p²; otherwise g + p does.
        let g = if e > 1 && pow_mod(g, p - 1, p * p) == 1 { g + p } else { g };
        let order = pe / p * (p - 1);
        vec![CyclicFactor { generator: g, order }]
    }
}

/// Decomposition of (ℤ/qℤ)× with generators expressed mod q via CRT.
fn unit_group(q: u64) -> Vec<CyclicFactor> {
    if q == 1 {
        return vec![];
    }
    let mut factors = Vec::new();
    for (p, e) in factorize(q) {
        let pe = p.pow(e);
        let rest = q / pe;
        for f in prime_power_factors(p, e) {
            // CRT lift: ≡ f.generator mod p^e, ≡ 1 mod rest.
            let generator = if rest == 1 {
                f.generator
            } else {
                crt_pair(f.generator, pe, 1, rest)
            };
            factors.push(CyclicFactor { generator, order: f.order });
        }
    }
    factors
}

fn crt_pair(a1: u64, m1: u64, a2: u64, m2: u64) -> u64 {
    // m1, m2 coprime; solve x ≡ a1 (m1), x ≡ a2 (m2).
    let m = m1 * m2;
    let inv = mod_inverse(m1 % m2, m2);
    let diff = (a2 + m2 - a1 % m2) % m2;
    (a1 as u128 + m1 as u128 * (diff as u128 * inv as u128 % m2 as u128)) as u64 % m
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    // extended Euclid; gcd(a, m) = 1
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let qt = old_r / r;
        (old_r, r) = (r, old_r - qt * r);
        (old_s, s) = (s, old_s - qt * s);
    }
    old_s.rem_euclid(m as i128) as u64
}

/// Discrete logarithms of every unit with respect to the factor generators.
fn discrete_log_tables(q: u64, factors: &[CyclicFactor]) -> Vec<Vec<u64>> {
    // exps[j][x] = exponent of x on generator j (only meaningful for units)
    let mut exps = vec![vec![0u64; q as usize]; factors.len()];
    // enumerate the whole group as products of generator powers
    let mut stack = vec![(0usize, 1u64, Vec::<u64>::new())];
    while let Some((j, x, path)) = stack.pop() {
        if j == factors.len() {
            for (jj, &k) in path.iter().enumerate() {
                exps[jj][x as usize] = k;
            }
            continue;
        }
        let mut v = x;
        for k in 0..factors[j].order {
            let mut p2 = path.clone();
            p2.push(k);
            stack.push((j + 1, v, p2));
            v = (v as u128 * factors[j].generator as u128 % q as u128) as u64;
        }
    }
    exps
}

fn euler_phi(q: u64) -> u64 {
    factorize(q).iter().fold(q, |acc, &(p, _)| acc / p * (p - 1))
}

/// Builds the character with the given exponent vector on `factors`.
fn build_character(
    q: u64,
    factors: &[CyclicFactor],
    dlogs: &[Vec<u64>],
    exponents: &[u64],
) -> DirichletCharacter {
    let mut values: Vec<Option<TurnFraction>> = vec![None; q as usize];
    if q == 1 {
        values[0] = Some(TurnFraction::ONE);
    } else {
        for x in 1..q {
            if gcd(x, q) != 1 {
                continue;
            }
            let mut frac = TurnFraction::ONE;
            for (j, f) in factors.iter().enumerate() {
                let k = exponents[j];
                if k == 0 {
                    continue;
                }
                let e = dlogs[j][x as usize];
                frac = frac.mul(TurnFraction::new(
                    ((k as u128 * e as u128) % f.order as u128) as u64,
                    f.order,
                ));
            }
            values[x as usize] = Some(frac);
        }
    }
    let complex_values: Vec<Complex64> = values
        .iter()
        .map(|v| v.map_or(Complex64::new(0.0, 0.0), TurnFraction::to_complex))
        .collect();
    let kappa = if q <= 2 {
        0
    } else {
        let minus_one = values[(q - 1) as usize].expect("-1 is a unit");
        u8::from(!minus_one.is_one())
    };
    let label = mixed_radix_label(factors, exponents);
    let conductor = conductor_of(q, &values);
    DirichletCharacter {
        modulus: q,
        label,
        values,
        complex_values,
        kappa,
        conductor,
    }
}

fn mixed_radix_label(factors: &[CyclicFactor], exponents: &[u64]) -> u64 {
    let mut label = 0u64;
    for (f, &k) in factors.iter().zip(exponents) {
        label = label * f.order + k;
    }
    label
}

fn conjugate_label(q: u64, label: u64) -> u64 {
    let factors = unit_group(q);
    let exps = label_to_exponents(&factors, label);
    let conj: Vec<u64> = factors
        .iter()
        .zip(&exps)
        .map(|(f, &k)| if k == 0 { 0 } else { f.order - k })
        .collect();
    mixed_radix_label(&factors, &conj)
}

fn label_to_exponents(factors: &[CyclicFactor], label: u64) -> Vec<u64> {
    let mut exps = vec![0u64; factors.len()];
    let mut rest = label;
    for (j, f) in factors.iter().enumerate().rev() {
        exps[j] = rest % f.order;
        rest /= f.order;
    }
    exps
}

/// Smallest f | q from which the character is induced.
fn conductor_of(q: u64, values: &[Option<TurnFraction>]) -> u64 {
    if q == 1 {
        return 1;
    }
    let mut divisors: Vec<u64> = (1..=q).filter(|d| q % d == 0).collect();
    divisors.sort_unstable();
    'outer: for &f in &divisors {
        // induced by a character mod f iff χ(a) = 1 whenever a ≡ 1 (mod f)
        // and gcd(a, q) = 1
        let mut a = 1 + f;
        while a < q {
            if gcd(a, q) == 1 {
                match values[a as usize] {
                    Some(fr) if fr.is_one() => {}
                    _ => {
                        continue 'outer;
                    }
                }
            }
            a += f;
        }
        return f;
    }
    q
}

/// All φ(q) characters mod q, sorted by (conductor, label).
pub fn enumerate_characters(q: u64) -> Result<Vec<DirichletCharacter>> {
    if q == 0 {
        return Err(EvalError::Domain("modulus must be positive".into()));
    }
    if q > MODULUS_BOUND {
        return Err(EvalError::Overflow(q, MODULUS_BOUND));
    }
    let factors = unit_group(q);
    let dlogs = discrete_log_tables(q, &factors);
    let phi = euler_phi(q);
    let mut exps = vec![0u64; factors.len()];
    let mut out = Vec::with_capacity(phi as usize);
    loop {
        out.push(build_character(q, &factors, &dlogs, &exps));
        // increment mixed-radix counter
        let mut j = factors.len();
        loop {
            if j == 0 {
                break;
            }
            j -= 1;
            exps[j] += 1;
            if exps[j] < factors[j].order {
                break;
            }
            exps[j] = 0;
            if j == 0 {
                j = usize::MAX;
                break;
            }
        }
        if factors.is_empty() || j == usize::MAX {
            break;
        }
    }
    debug_assert_eq!(out.len() as u64, phi);
    out.sort_by_key(|c| (c.conductor, c.label));
    Ok(out)
}

/// Character mod q with the given canonical label.
pub fn character_by_label(q: u64, label: u64) -> Result<DirichletCharacter> {
    let all = enumerate_characters(q)?;
    all.into_iter()
        .find(|c| c.label == label)
        .ok_or_else(|| EvalError::Domain(format!("no character mod {q} with label {label}")))
}

/// B₀(χ) = Σ_{r=0}^{q−1} χ(r)/q — the residue of L(s,χ) at s = 1.
pub fn b0(chi: &DirichletCharacter) -> Complex64 {
    let q = chi.modulus();
    let terms: Vec<Complex64> = (0..q).map(|r| chi.value(r)).collect();
    pairwise_sum(&terms) / q as f64
}

/// Pairwise (cascade) summation; kept for the Gauss-sum accuracy contract.
pub(crate) fn pairwise_sum(terms: &[Complex64]) -> Complex64 {
    match terms.len() {
        0 => Complex64::new(0.0, 0.0),
        1..=8 => terms.iter().sum(),
        n => {
            let (a, b) = terms.split_at(n / 2);
            pairwise_sum(a) + pairwise_sum(b)
        }
    }
}

/// Gauss sum G(χ) = Σ_{r=1}^{q} χ(r) e^{2πir/q}.
///
/// Each term is a single exact root of unity (the turn fractions add in
/// integer arithmetic), so the only rounding is one sin/cos per term plus
/// the pairwise summation.
pub fn gauss_sum(chi: &DirichletCharacter) -> GaussSumValue {
    let q = chi.modulus();
    let mut terms = Vec::with_capacity(q as usize);
    for r in 1..=q {
        if let Some(f) = chi.turn(r) {
            terms.push(f.mul(TurnFraction::new(r % q, q)).to_complex());
        }
    }
    GaussSumValue {
        value: pairwise_sum(&terms),
        modulus: q,
    }
}

/// λ(χ) = G(χ)/(i^{κ(χ)} √q); unit modulus for primitive χ.
pub fn lambda_chi(chi: &DirichletCharacter) -> Result<Complex64> {
    if !chi.is_primitive() {
        return Err(EvalError::NonPrimitive {
            modulus: chi.modulus() as u32,
            label: chi.label() as u32,
        });
    }
    let g = gauss_sum(chi).value;
    let i_kappa = if chi.kappa() == 0 {
        Complex64::new(1.0, 0.0)
    } else {
        Complex64::new(0.0, 1.0)
    };
    Ok(g / (i_kappa * (chi.modulus() as f64).sqrt()))
}

/// Kronecker symbol (a | n) extended to all integers.
pub fn kronecker_symbol(a: i64, n: i64) -> i64 {
    if n == 0 {
        return i64::from(a == 1 || a == -1);
    }
    if a % 2 == 0 && n % 2 == 0 {
        return 0;
    }
    let mut a = a;
    let mut n = n;
    let mut v = 0;
    while n % 2 == 0 {
        n /= 2;
        v += 1;
    }
    let mut k = if v % 2 == 0 {
        1
    } else {
        match a.rem_euclid(8) {
            1 | 7 => 1,
            3 | 5 => -1,
            _ => 0,
        }
    };
    if k == 0 {
        return 0;
    }
    if n < 0 {
        n = -n;
        if a < 0 {
            k = -k;
        }
    }
    loop {
        a = a.rem_euclid(n);
        if a == 0 {
            return if n > 1 { 0 } else { k };
        }
        while a % 2 == 0 {
            a /= 2;
            match n.rem_euclid(8) {
                3 | 5 => k = -k,
                _ => {}
            }
        }
        if a.rem_euclid(4) == 3 && n.rem_euclid(4) == 3 {
            k = -k;
        }
        std::mem::swap(&mut a, &mut n);
    }
}

fn is_squarefree(mut n: u64) -> bool {
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return false;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    true
}

/// Fundamental discriminant test: D ≡ 1 (mod 4) squarefree, or D = 4m with
/// m ≡ 2, 3 (mod 4) squarefree.
pub fn is_fundamental_discriminant(d: i64) -> bool {
    if d == 0 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => is_squarefree(d.unsigned_abs()),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m.unsigned_abs())
        }
        _ => false,
    }
}

/// The real primitive character mod |D| given by the Kronecker symbol (D|n).
pub fn kronecker_character(d: i64) -> Result<DirichletCharacter> {
    if !is_fundamental_discriminant(d) {
        return Err(EvalError::NotFundamental(d));
    }
    let q = d.unsigned_abs();
    if q > MODULUS_BOUND {
        return Err(EvalError::Overflow(q, MODULUS_BOUND));
    }
    let factors = unit_group(q);
    // exponent on each generator: χ(g) = ±1 picks k ∈ {0, order/2}
    let mut exponents = Vec::with_capacity(factors.len());
    for f in &factors {
        let v = kronecker_symbol(d, f.generator as i64);
        let k = match v {
            1 => 0,
            -1 => f.order / 2,
            _ => {
                return Err(EvalError::Domain(format!(
                    "kronecker symbol vanished on a unit generator of modulus {q}"
                )))
            }
        };
        exponents.push(k);
    }
    let dlogs = discrete_log_tables(q, &factors);
    let chi = build_character(q, &factors, &dlogs, &exponents);
    debug_assert!(chi.is_primitive());
    debug_assert_eq!(chi.kappa() == 0, d > 0);
    Ok(chi)
}

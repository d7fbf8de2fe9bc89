//! Irreducible factorisation of squarefree polynomials over ℚ
//! (Berlekamp–Zassenhaus: mod-p splitting, Hensel lifting, recombination).

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::modp::{Fp, PolyP};
use super::UniPoly;
use crate::rng::SplitMix64;

/// Candidate primes tried per factorisation.
const PRIME_TRIALS: usize = 6;

/// Monic irreducible factors of a squarefree polynomial, sorted by degree then
/// coefficients. Constants yield an empty list.
pub fn factor_squarefree(p: &UniPoly) -> Vec<UniPoly> {
    if p.deg() == 0 {
        return Vec::new();
    }
    if p.deg() == 1 {
        return vec![p.monic()];
    }
    let mut ints = p.primitive_integer();
    let mut out = Vec::new();
    if ints[0].is_zero() {
        out.push(UniPoly::x());
        ints.remove(0);
    }
    if ints.len() > 1 {
        for f in factor_primitive(ints) {
            out.push(UniPoly::from_bigints(&f).monic());
        }
    }
    out.sort_by(|a, b| a.deg().cmp(&b.deg()).then_with(|| a.coeffs().cmp(b.coeffs())));
    out
}

fn small_primes() -> impl Iterator<Item = u64> {
    (101u64..).step_by(2).filter(|&n| {
        let mut d = 3;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 2;
        }
        true
    })
}

fn reduce(f: &[BigInt], p: u64) -> PolyP {
    let pb = BigInt::from(p);
    Fp::trim(
        f.iter()
            .map(|c| c.mod_floor(&pb).to_u64().expect("reduced below p"))
            .collect(),
    )
}

/// Factor a primitive squarefree integer polynomial with positive leading
/// coefficient and nonzero constant term.
fn factor_primitive(f: Vec<BigInt>) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    if n == 1 {
        return vec![f];
    }
    let lc = f[n].clone();
    let mut rng = SplitMix64::new(0x5eed_f00d ^ n as u64);

    let mut best: Option<(Fp, Vec<PolyP>)> = None;
    let mut tried = 0;
    for p in small_primes() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = Fp::new(p);
        let fbar = reduce(&f, p);
        if fbar.len() != n + 1 || fp.gcd(&fbar, &fp.derivative(&fbar)).len() != 1 {
            continue;
        }
        let factors = fp.factor_squarefree(&fp.monic(&fbar), &mut rng);
        if factors.len() == 1 {
            return vec![f];
        }
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((fp, factors));
        }
        tried += 1;
        if tried == PRIME_TRIALS {
            break;
        }
    }
    let (fp, factors) = best.expect("some prime is admissible for a squarefree polynomial");

    // Any factor's coefficients are bounded by 2^n · ‖f‖₂ ≤ 2^n · (n+1) · max|fᵢ|.
    let max = f.iter().map(|c| c.abs()).max().unwrap();
    let bound = BigInt::from(2u32) * lc.abs() * (BigInt::one() << n) * BigInt::from(n + 1) * max;
    let (lifted, modulus) = hensel_lift(&f, fp, &factors, &bound);
    recombine(f, lifted, &modulus)
}

/// Multifactor linear Hensel lifting of `f ≡ lc · ∏ gᵢ (mod p)` until the
/// modulus exceeds `bound`.
fn hensel_lift(f: &[BigInt], fp: Fp, factors: &[PolyP], bound: &BigInt) -> (Vec<Vec<BigInt>>, BigInt) {
    let p = BigInt::from(fp.p);
    let n = f.len() - 1;
    let lc = &f[n];
    let lc_inv = fp.inv(lc.mod_floor(&p).to_u64().unwrap());

    // sᵢ ≡ (∏_{k≠i} g_k)^{-1} mod gᵢ, so Σ sᵢ ∏_{k≠i} g_k = 1 over 𝔽_p.
    let cofactor_inverses: Vec<PolyP> = (0..factors.len())
        .map(|i| {
            let others = factors
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .fold(vec![1u64], |acc, (_, g)| fp.poly_mul(&acc, g));
            fp.inv_mod(&others, &factors[i]).expect("factors mod p are coprime")
        })
        .collect();

    let mut lifted: Vec<Vec<BigInt>> = factors
        .iter()
        .map(|g| g.iter().map(|&c| BigInt::from(c)).collect())
        .collect();
    let mut modulus = p.clone();
    while &modulus <= bound {
        let next = &modulus * &p;
        let prod = lifted.iter().fold(vec![lc.clone()], |acc, g| mul_mod(&acc, g, &next));
        let err: Vec<BigInt> = (0..=n)
            .map(|i| {
                let d = (&f[i] - prod.get(i).cloned().unwrap_or_default()).mod_floor(&next);
                debug_assert!((&d % &modulus).is_zero());
                d / &modulus
            })
            .collect();
        let err = fp.poly_mul(&reduce(&err, fp.p), &[lc_inv]);
        for (g, s) in lifted.iter_mut().zip(&cofactor_inverses) {
            let gbar = reduce(g, fp.p);
            let delta = fp.poly_rem(&fp.poly_mul(&err, s), &gbar);
            for (i, d) in delta.iter().enumerate() {
                g[i] += &modulus * BigInt::from(*d);
            }
        }
        modulus = next;
    }
    (lifted, modulus)
}

fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out.iter_mut().for_each(|c| *c = c.mod_floor(m));
    out
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn primitive(mut f: Vec<BigInt>) -> Vec<BigInt> {
    let content = f.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return f;
    }
    let sign = if f.last().is_some_and(|c| c.sign() == Sign::Minus) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    f.iter_mut().for_each(|c| *c = &*c / &content * &sign);
    f
}

/// Exact integer quotient `a / b`, if `b` divides `a` in ℤ[x].
fn divide_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let db = b.len() - 1;
    if a.len() < b.len() {
        return None;
    }
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (0..q.len()).rev() {
        let (c, rem) = r[k + db].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] -= &c * bj;
        }
        q[k] = c;
    }
    r[..db].iter().all(Zero::is_zero).then_some(q)
}

fn recombine(f: Vec<BigInt>, mut local: Vec<Vec<BigInt>>, modulus: &BigInt) -> Vec<Vec<BigInt>> {
    let mut rest = f;
    let mut found = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= local.len() {
        let lc = rest.last().unwrap().clone();
        for subset in Combinations::new(local.len(), size) {
            let prod = subset
                .iter()
                .fold(vec![lc.clone()], |acc, &i| mul_mod(&acc, &local[i], modulus));
            let candidate = primitive(prod.iter().map(|c| symmetric(c, modulus)).collect());
            if let Some(q) = divide_exact(&rest, &candidate) {
                found.push(candidate);
                rest = q;
                for &i in subset.iter().rev() {
                    local.remove(i);
                }
                continue 'outer;
            }
        }
        size += 1;
    }
    found.push(primitive(rest));
    found
}

/// Lexicographic k-subsets of `0..n`.
struct Combinations {
    idx: Vec<usize>,
    n: usize,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Self {
            idx: (0..k).collect(),
            n,
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

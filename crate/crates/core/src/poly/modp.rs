//! Dense polynomials over 𝔽_p for word-sized odd primes, and their factorisation
//! (distinct-degree plus Cantor–Zassenhaus equal-degree splitting).

use num_bigint::BigUint;
use num_traits::One;

use crate::rng::SplitMix64;

/// Coefficients in ascending degree, reduced mod p, no trailing zeros.
pub(crate) type PolyP = Vec<u64>;

#[derive(Debug, Clone, Copy)]
pub(crate) struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        debug_assert!(p > 2 && p < (1 << 31));
        Self { p }
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(a % self.p != 0);
        self.pow(a, self.p - 2)
    }

    fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn trim(mut a: PolyP) -> PolyP {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn poly_sub(&self, a: &[u64], b: &[u64]) -> PolyP {
        let n = a.len().max(b.len());
        Self::trim(
            (0..n)
                .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
                .collect(),
        )
    }

    pub fn poly_mul(&self, a: &[u64], b: &[u64]) -> PolyP {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        Self::trim(out)
    }

    pub fn poly_divrem(&self, a: &[u64], b: &[u64]) -> (PolyP, PolyP) {
        assert!(!b.is_empty(), "division by zero polynomial mod p");
        if a.len() < b.len() {
            return (Vec::new(), a.to_vec());
        }
        let db = b.len() - 1;
        let inv = self.inv(b[db]);
        let mut r = a.to_vec();
        let mut q = vec![0u64; a.len() - db];
        for k in (0..q.len()).rev() {
            let c = self.mul(r[k + db], inv);
            if c == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                r[k + j] = self.sub(r[k + j], self.mul(c, bj));
            }
            q[k] = c;
        }
        r.truncate(db);
        (Self::trim(q), Self::trim(r))
    }

    pub fn poly_rem(&self, a: &[u64], b: &[u64]) -> PolyP {
        self.poly_divrem(a, b).1
    }

    pub fn monic(&self, a: &[u64]) -> PolyP {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => {
                let inv = self.inv(lc);
                a.iter().map(|&c| self.mul(c, inv)).collect()
            }
        }
    }

    pub fn gcd(&self, a: &[u64], b: &[u64]) -> PolyP {
        let (mut a, mut b) = (a.to_vec(), b.to_vec());
        while !b.is_empty() {
            let r = self.poly_rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// Inverse of `a` modulo `m`; `None` when they are not coprime.
    pub fn inv_mod(&self, a: &[u64], m: &[u64]) -> Option<PolyP> {
        let (mut r0, mut r1) = (m.to_vec(), self.poly_rem(a, m));
        let (mut s0, mut s1): (PolyP, PolyP) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = self.poly_divrem(&r0, &r1);
            let s = self.poly_sub(&s0, &self.poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        if r0.len() != 1 {
            return None;
        }
        let k = self.inv(r0[0]);
        Some(self.poly_rem(&self.poly_mul(&s0, &[k]), m))
    }

    pub fn derivative(&self, a: &[u64]) -> PolyP {
        Self::trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.mul(c, i as u64 % self.p))
                .collect(),
        )
    }

    fn powmod(&self, base: &[u64], e: &BigUint, m: &[u64]) -> PolyP {
        let mut acc: PolyP = self.poly_rem(&[1], m);
        let base = self.poly_rem(base, m);
        for i in (0..e.bits()).rev() {
            acc = self.poly_rem(&self.poly_mul(&acc, &acc), m);
            if e.bit(i) {
                acc = self.poly_rem(&self.poly_mul(&acc, &base), m);
            }
        }
        acc
    }

    /// Monic irreducible factors of a monic squarefree polynomial.
    pub fn factor_squarefree(&self, f: &[u64], rng: &mut SplitMix64) -> Vec<PolyP> {
        let mut out = Vec::new();
        for (part, d) in self.distinct_degree(f) {
            self.equal_degree(&part, d, rng, &mut out);
        }
        out
    }

    fn distinct_degree(&self, f: &[u64]) -> Vec<(PolyP, usize)> {
        let mut res = Vec::new();
        let mut rest = f.to_vec();
        let x: PolyP = vec![0, 1];
        let p_big = BigUint::from(self.p);
        let mut h = self.poly_rem(&x, &rest);
        let mut d = 1;
        while 2 * d < rest.len() {
            h = self.powmod(&h, &p_big, &rest);
            let t = self.gcd(&self.poly_sub(&h, &x), &rest);
            if t.len() > 1 {
                rest = self.poly_divrem(&rest, &t).0;
                h = self.poly_rem(&h, &rest);
                res.push((t, d));
            }
            d += 1;
        }
        if rest.len() > 1 {
            let deg = rest.len() - 1;
            res.push((self.monic(&rest), deg));
        }
        res
    }

    fn equal_degree(&self, f: &[u64], d: usize, rng: &mut SplitMix64, out: &mut Vec<PolyP>) {
        let n = f.len() - 1;
        if n == d {
            out.push(f.to_vec());
            return;
        }
        let e = (BigUint::from(self.p).pow(d as u32) - BigUint::one()) >> 1;
        loop {
            let a: PolyP = Self::trim((0..n).map(|_| rng.below(self.p)).collect());
            if a.len() < 2 {
                continue;
            }
            let b = self.poly_sub(&self.powmod(&a, &e, f), &[1]);
            let u = self.gcd(&b, f);
            if u.len() > 1 && u.len() < f.len() {
                let v = self.monic(&self.poly_divrem(f, &u).0);
                self.equal_degree(&u, d, rng, out);
                self.equal_degree(&v, d, rng, out);
                return;
            }
        }
    }
}

//! Probable-prime testing for candidates beyond u64: trial division,
//! base-2 strong test, extra strong Lucas test (Baillie parameter method C),
//! and seeded extra strong rounds with random bases.

use crate::Nat;
use num_bigint::RandBigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::SeedableRng;
use std::sync::OnceLock;

fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let limit = 2048usize;
        let mut composite = vec![false; limit];
        let mut primes = Vec::new();
        for p in 2..limit {
            if !composite[p] {
                primes.push(p as u64);
                for m in (p * p..limit).step_by(p) {
                    composite[m] = true;
                }
            }
        }
        primes
    })
}

/// `digits mod m` for a little-endian u64 limb view, avoiding BigUint
/// division per small prime.
fn rem_digits(digits: &[u64], m: u64) -> u64 {
    digits.iter().rev().fold(0u64, |r, &d| {
        ((((u128::from(r)) << 64) | u128::from(d)) % u128::from(m)) as u64
    })
}

fn low_bits(n: &Nat, mask: u64) -> u64 {
    n.iter_u64_digits().next().unwrap_or(0) & mask
}

/// Jacobi symbol (a/n) for odd positive n.
fn jacobi(a: &Nat, n: &Nat) -> i8 {
    debug_assert!(n.is_odd() && !n.is_zero());
    let mut a = a % n;
    let mut n = n.clone();
    let mut result: i8 = 1;
    while !a.is_zero() {
        while a.is_even() {
            a >>= 1u32;
            let n_mod_8 = low_bits(&n, 7);
            if n_mod_8 == 3 || n_mod_8 == 5 {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if low_bits(&a, 3) == 3 && low_bits(&n, 3) == 3 {
            result = -result;
        }
        a %= &n;
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

/// Strong probable-prime test of `n` to `base`; `n` odd, ≥ 3.
fn strong_probable_prime(n: &Nat, base: &Nat) -> bool {
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().expect("n > 1 is odd");
    let d = &n_minus_1 >> s;
    let mut x = base.modpow(&d, n);
    if x.is_one() || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n_minus_1 {
            return true;
        }
        if x.is_one() {
            return false;
        }
    }
    false
}

/// Extra strong Lucas probable-prime test with parameters chosen by
/// Baillie's method C: the smallest p ≥ 3 with Jacobi(p² − 4, n) = −1,
/// then the V-sequence ladder for V_s(p, 1) where n + 1 = 2^r·s.
fn extra_strong_lucas(n: &Nat) -> bool {
    // Parameter search. Failure to find Jacobi = −1 quickly means n is a
    // perfect square (checked at p = 40) or shares a factor with p² − 4.
    let mut p = 3u64;
    loop {
        if p > 10_000 {
            return false;
        }
        let d = Nat::from(p * p - 4);
        match jacobi(&d, n) {
            -1 => break,
            0 => {
                // Shared factor is p + 2 (p − 2 values were already tried),
                // so n is composite unless it *is* p + 2.
                return *n == Nat::from(p + 2);
            }
            _ => {}
        }
        if p == 40 {
            let root = n.sqrt();
            if &root * &root == *n {
                return false;
            }
        }
        p += 1;
    }

    let mut s = n + 1u32;
    let r = s.trailing_zeros().expect("n + 1 is even");
    s >>= r;
    let n_minus_2 = n - 2u32;
    let p_big = Nat::from(p);

    // Ladder for (V_k, V_{k+1}) mod n from the top bit of s:
    //   V_{2k}   = V_k² − 2
    //   V_{2k+1} = V_k·V_{k+1} − p
    let mut vk = Nat::from(2u32);
    let mut vk1 = p_big.clone();
    for i in (0..s.bits()).rev() {
        let cross = (&vk * &vk1 + n - &p_big) % n;
        if s.bit(i) {
            vk = cross;
            vk1 = (&vk1 * &vk1 + &n_minus_2) % n;
        } else {
            vk1 = cross;
            vk = (&vk * &vk + &n_minus_2) % n;
        }
    }

    // Condition (i): V_s ≡ ±2 and U_s ≡ 0, the latter checked without
    // computing U via p·V_s ≡ 2·V_{s+1} (mod n).
    if vk == Nat::from(2u32) || vk == n_minus_2 {
        let lhs = (&vk * &p_big) % n;
        let rhs = (&vk1 << 1u32) % n;
        if lhs == rhs {
            return true;
        }
    }

    // Condition (ii): V_{2^t·s} ≡ 0 for some 0 ≤ t < r − 1.
    for _ in 0..r.saturating_sub(1) {
        if vk.is_zero() {
            return true;
        }
        if vk == Nat::from(2u32) {
            return false; // fixed point of V ↦ V² − 2; no zero can follow
        }
        vk = (&vk * &vk + &n_minus_2) % n;
    }
    false
}

fn mix_seed(seed: u64, n: &Nat) -> u64 {
    let mut h = seed ^ 0x9E37_79B9_7F4A_7C15;
    for d in n.iter_u64_digits() {
        h = (h.rotate_left(29) ^ d).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    }
    h
}

/// Probable-prime decision: trial division, strong base-2 test, extra
/// strong Lucas test, then `rounds` further strong tests with random bases
/// drawn from an rng seeded by `seed` and the candidate (so verdicts are
/// reproducible regardless of evaluation order). Composite answers are
/// always exact.
pub(crate) fn is_probable_prime(n: &Nat, rounds: u32, seed: u64) -> bool {
    if *n < Nat::from(2u32) {
        return false;
    }
    let digits = n.to_u64_digits();
    for &p in small_primes() {
        if rem_digits(&digits, p) == 0 {
            return *n == Nat::from(p);
        }
    }
    // n is odd and > 2048² would be needed for trial division alone; run
    // the probable-prime battery.
    if !strong_probable_prime(n, &Nat::from(2u32)) {
        return false;
    }
    if !extra_strong_lucas(n) {
        return false;
    }
    if rounds > 0 {
        let mut rng = StdRng::seed_from_u64(mix_seed(seed, n));
        let low = Nat::from(2u32);
        let high = n - 1u32; // exclusive, so bases fall in [2, n − 2]
        for _ in 0..rounds {
            let base = rng.gen_biguint_range(&low, &high);
            if !strong_probable_prime(n, &base) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primes::mr64::is_prime_u64;

    fn nat(n: u64) -> Nat {
        Nat::from(n)
    }

    #[test]
    fn jacobi_basics() {
        // (a/7) for a = 0..6: 0, 1, 1, -1, 1, -1, -1
        let expected = [0i8, 1, 1, -1, 1, -1, -1];
        for (a, &e) in expected.iter().enumerate() {
            assert_eq!(jacobi(&nat(a as u64), &nat(7)), e, "a = {a}");
        }
        // (2/15) = 1, (7/15) = -1
        assert_eq!(jacobi(&nat(2), &nat(15)), 1);
        assert_eq!(jacobi(&nat(7), &nat(15)), -1);
    }

    #[test]
    fn jacobi_matches_euler_criterion_on_odd_primes() {
        for p in (3u64..200).filter(|&p| is_prime_u64(p)) {
            for a in 1..p {
                let euler = nat(a).modpow(&nat((p - 1) / 2), &nat(p));
                let expected = if euler.is_one() { 1 } else { -1 };
                assert_eq!(jacobi(&nat(a), &nat(p)), expected, "a = {a}, p = {p}");
            }
        }
    }

    #[test]
    fn agrees_with_deterministic_path_on_small_values() {
        for n in 0u64..30_000 {
            assert_eq!(
                is_probable_prime(&nat(n), 2, 7),
                is_prime_u64(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn agrees_on_scattered_wide_values() {
        // Deterministic 64-bit answers vs the probable-prime battery.
        let mut n = 0xF00D_DEAD_BEEF_u64;
        for _ in 0..400 {
            n = n.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let v = n | 1;
            assert_eq!(is_probable_prime(&nat(v), 3, 42), is_prime_u64(v), "v = {v}");
        }
    }

    #[test]
    fn mersenne_exponent_classics() {
        let m = |e: u32| (Nat::from(1u32) << e) - 1u32;
        assert!(is_probable_prime(&m(61), 8, 1));
        assert!(is_probable_prime(&m(89), 8, 1));
        assert!(is_probable_prime(&m(107), 8, 1));
        assert!(is_probable_prime(&m(127), 8, 1));
        assert!(!is_probable_prime(&m(67), 8, 1));
        assert!(!is_probable_prime(&m(101), 8, 1));
        assert!(!is_probable_prime(&m(111), 8, 1));
    }

    #[test]
    fn perfect_squares_rejected() {
        for base in [3u64, 1_000_003, 4_294_967_291] {
            let square = nat(base) * nat(base);
            assert!(!is_probable_prime(&square, 2, 9));
        }
    }

    #[test]
    fn semiprime_of_wide_primes_rejected_for_any_seed() {
        // No small factor, so trial division cannot shortcut the battery.
        let semiprime = ((Nat::from(1u32) << 61) - 1u32) * ((Nat::from(1u32) << 89) - 1u32);
        for seed in 0..8 {
            assert!(!is_probable_prime(&semiprime, 4, seed));
        }
    }
}

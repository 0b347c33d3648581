//! Binary-code utilities: LSB-first bit views, Mersenne numbers, the unit
//! (trailing-ones) suffix length, and the Dyck-number predicate.

use crate::Nat;
use num_traits::{One, Zero};

/// Binary code of a natural number, least-significant bit first.
///
/// The code of 0 is exactly `[0]`; every other code ends (most-significant
/// side) with a 1, i.e. carries no leading zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitSeqLsb {
    bits: Vec<u8>,
}

impl BitSeqLsb {
    /// Bits in LSB-first order, each 0 or 1.
    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: length >= 1
    }

    /// Reconstructs the integer the code denotes.
    pub fn to_nat(&self) -> Nat {
        let mut n = Nat::zero();
        for &b in self.bits.iter().rev() {
            n <<= 1u32;
            if b == 1 {
                n |= Nat::one();
            }
        }
        n
    }
}

/// Binary code of `n`, least-significant bit first. `0` codes as `[0]`.
pub fn bits_lsb(n: &Nat) -> BitSeqLsb {
    if n.is_zero() {
        return BitSeqLsb { bits: vec![0] };
    }
    let len = n.bits();
    let mut bits = Vec::with_capacity(len as usize);
    for i in 0..len {
        bits.push(u8::from(n.bit(i)));
    }
    BitSeqLsb { bits }
}

/// The y-th Mersenne number `2^y − 1` (binary code: y ones).
pub fn mersenne(y: u32) -> Nat {
    (Nat::one() << y) - 1u32
}

/// Length of the unit suffix of `n`: the number of trailing 1-bits, which
/// equals the 2-adic valuation of `n + 1`. Even numbers give 0.
pub fn unit_suffix_len(n: &Nat) -> u32 {
    let tz = (n + 1u32).trailing_zeros().expect("n + 1 is nonzero");
    u32::try_from(tz).expect("unit suffix exceeds u32 range")
}

/// Dyck-number predicate: every suffix (trailing-bit side) of the binary
/// code has at least as many ones as zeros. `0` is a member by convention
/// even though its code `0` fails the suffix rule.
///
/// Streaming form: scan LSB to MSB keeping `balance = ones − zeros`, which
/// must never go negative.
pub fn is_dyck(n: &Nat) -> bool {
    if n.is_zero() {
        return true;
    }
    let len = n.bits();
    let mut balance: i64 = 0;
    for i in 0..len {
        if n.bit(i) {
            balance += 1;
        } else {
            balance -= 1;
            if balance < 0 {
                return false;
            }
        }
    }
    true
}

/// Independent oracle for [`is_dyck`]: enumerates every suffix of the code
/// explicitly and counts zeros and ones per suffix.
pub fn is_dyck_oracle(n: &Nat) -> bool {
    if n.is_zero() {
        return true;
    }
    let code = bits_lsb(n);
    let bits = code.bits();
    for suffix_len in 1..=bits.len() {
        let suffix = &bits[..suffix_len];
        let ones = suffix.iter().filter(|&&b| b == 1).count();
        let zeros = suffix.len() - ones;
        if zeros > ones {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(n: u64) -> Nat {
        Nat::from(n)
    }

    #[test]
    fn zero_codes_as_single_zero_bit() {
        assert_eq!(bits_lsb(&nat(0)).bits(), &[0]);
    }

    #[test]
    fn small_codes() {
        assert_eq!(bits_lsb(&nat(5)).bits(), &[1, 0, 1]);
        assert_eq!(bits_lsb(&nat(119)).bits(), &[1, 1, 1, 0, 1, 1, 1]);
    }

    #[test]
    fn codes_round_trip() {
        for n in 0u64..1 << 12 {
            assert_eq!(bits_lsb(&nat(n)).to_nat(), nat(n));
        }
    }

    #[test]
    fn mersenne_values() {
        assert_eq!(mersenne(0), nat(0));
        assert_eq!(mersenne(3), nat(7));
        assert_eq!(
            mersenne(130).to_string(),
            "1361129467683753853853498429727072845823"
        );
    }

    #[test]
    fn unit_suffix_examples() {
        assert_eq!(unit_suffix_len(&nat(4)), 0);
        assert_eq!(unit_suffix_len(&nat(119)), 3);
        assert_eq!(unit_suffix_len(&nat(7)), 3);
        assert_eq!(unit_suffix_len(&nat(0)), 0);
    }

    #[test]
    fn unit_suffix_is_two_adic_valuation_of_successor() {
        // Trial division check of v2(n + 1).
        for n in 0u64..1 << 16 {
            let mut m = n + 1;
            let mut v = 0;
            while m % 2 == 0 {
                m /= 2;
                v += 1;
            }
            assert_eq!(unit_suffix_len(&nat(n)), v, "n = {n}");
        }
    }

    #[test]
    fn dyck_examples() {
        assert!(is_dyck(&nat(0)));
        assert!(is_dyck(&nat(5)));
        assert!(is_dyck(&nat(27)));
        assert!(!is_dyck(&nat(9)));
        assert!(!is_dyck(&nat(17)));
        assert!(is_dyck_oracle(&nat(1)));
        assert!(is_dyck_oracle(&nat(5)));
        assert!(!is_dyck_oracle(&nat(17)));
    }

    #[test]
    fn dyck_matches_oracle_exhaustively() {
        for n in 0u64..1 << 16 {
            let n = nat(n);
            assert_eq!(is_dyck(&n), is_dyck_oracle(&n), "n = {n}");
        }
    }

    #[test]
    fn nonzero_dyck_numbers_are_odd() {
        for n in 1u64..1 << 16 {
            if is_dyck(&nat(n)) {
                assert_eq!(n % 2, 1, "n = {n}");
            }
        }
    }

    #[test]
    fn appending_ones_preserves_membership() {
        for n in 0u64..1 << 16 {
            if is_dyck(&nat(n)) {
                assert!(is_dyck(&nat(2 * n + 1)), "n = {n}");
            }
        }
    }

    #[test]
    fn mersenne_numbers_are_dyck() {
        for y in 0..64 {
            assert!(is_dyck(&mersenne(y)), "y = {y}");
        }
    }
}

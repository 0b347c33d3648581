//! Primality engine and the segment experiments: per-segment prime census,
//! least-prime position scans, and the `p < d²/2` bound check.

mod bpsw;
mod mr64;

use crate::matrix::progression_term;
use crate::Nat;
use rayon::prelude::*;

/// Knobs for probable-prime testing. Candidates below 2^64 are decided
/// deterministically and ignore both fields; above, `rounds` extra strong
/// tests with random bases run after the fixed battery, seeded so results
/// reproduce across runs and thread counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimalityPolicy {
    pub rounds: u32,
    pub seed: u64,
}

impl Default for PrimalityPolicy {
    fn default() -> Self {
        PrimalityPolicy { rounds: 16, seed: 0 }
    }
}

/// How a verdict was reached. Probabilistic composite verdicts are exact;
/// probabilistic prime verdicts err with probability at most 4^−rounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certainty {
    Deterministic,
    Probabilistic { rounds: u32 },
}

impl std::fmt::Display for Certainty {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Certainty::Deterministic => write!(f, "deterministic"),
            Certainty::Probabilistic { rounds } => write!(f, "probabilistic({rounds})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimalityVerdict {
    pub value: Nat,
    pub is_prime: bool,
    pub certainty: Certainty,
}

/// Primality of `n`: deterministic witnesses below 2^64, the probable-prime
/// battery above. 0 and 1 are not prime; 2 is.
pub fn is_prime(n: &Nat, policy: &PrimalityPolicy) -> PrimalityVerdict {
    match u64::try_from(n) {
        Ok(v) => PrimalityVerdict {
            value: n.clone(),
            is_prime: mr64::is_prime_u64(v),
            certainty: Certainty::Deterministic,
        },
        Err(_) => PrimalityVerdict {
            value: n.clone(),
            is_prime: bpsw::is_probable_prime(n, policy.rounds, policy.seed),
            certainty: Certainty::Probabilistic {
                rounds: policy.rounds,
            },
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimeLabError {
    /// Census refused: 2^y primality tests above the configured ceiling.
    ResourceLimit { y: u32, ceiling: u32 },
    /// No prime found within the scan bound. Signals a bug or an
    /// extraordinary counterexample; never a silent truncation.
    ScanExhausted { y: u32, scanned: u64 },
}

impl std::fmt::Display for PrimeLabError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PrimeLabError::ResourceLimit { y, ceiling } => {
                write!(f, "census at y = {y} exceeds the ceiling {ceiling}")
            }
            PrimeLabError::ScanExhausted { y, scanned } => {
                write!(f, "no prime in the first {scanned} terms of column {y}")
            }
        }
    }
}

impl std::error::Error for PrimeLabError {}

/// Prime statistics for segment `S_y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub y: u32,
    pub prime_count: u64,
    pub segment_size: u64,
    /// `100·prime_count/segment_size`, rendered to exactly three decimals
    /// (ties to even).
    pub percent: String,
}

/// Default refusal point for [`census`]: 2^26 tests is roughly a desk-scale
/// minute-range run; override explicitly for more.
pub const DEFAULT_CENSUS_CEILING: u32 = 26;

/// Exact three-decimal rendering of `100·count/size`, rounding half to even.
pub fn percent_string(count: u64, size: u64) -> String {
    assert!(size > 0);
    let scaled = u128::from(count) * 100_000;
    let size = u128::from(size);
    let mut q = scaled / size;
    let r = scaled % size;
    if 2 * r > size || (2 * r == size && q % 2 == 1) {
        q += 1;
    }
    format!("{}.{:03}", q / 1000, q % 1000)
}

fn segment_term_u64(y: u32, k: u64) -> u64 {
    debug_assert!(y <= 31);
    ((2 * k + 1) << y) - 1
}

/// Counts primes among all `2^y` terms of `S_y`, with an explicit ceiling.
pub fn census_with_ceiling(
    y: u32,
    policy: &PrimalityPolicy,
    ceiling: u32,
) -> Result<CensusRow, PrimeLabError> {
    if y > ceiling {
        return Err(PrimeLabError::ResourceLimit { y, ceiling });
    }
    let size = 1u64 << y;
    let prime_count = if y <= 31 {
        // Every term fits u64: (2k+1)·2^y − 1 < 2^(2y+1) ≤ 2^63.
        (0..size)
            .into_par_iter()
            .filter(|&k| mr64::is_prime_u64(segment_term_u64(y, k)))
            .count() as u64
    } else {
        (0..size)
            .into_par_iter()
            .filter(|&k| is_prime(&progression_term(y, &Nat::from(k)), policy).is_prime)
            .count() as u64
    };
    Ok(CensusRow {
        y,
        prime_count,
        segment_size: size,
        percent: percent_string(prime_count, size),
    })
}

/// Counts primes among all `2^y` terms of `S_y` under the default ceiling.
pub fn census(y: u32, policy: &PrimalityPolicy) -> Result<CensusRow, PrimeLabError> {
    census_with_ceiling(y, policy, DEFAULT_CENSUS_CEILING)
}

/// Census rows for each `y` in `[y_from, y_to]`, ordered by `y`.
pub fn census_range(
    y_from: u32,
    y_to: u32,
    policy: &PrimalityPolicy,
    ceiling: u32,
) -> Result<Vec<CensusRow>, PrimeLabError> {
    (y_from..=y_to)
        .map(|y| census_with_ceiling(y, policy, ceiling))
        .collect()
}

/// Least-prime scan result for column `y`: position 0 is the first term
/// `M_y`; everything before `x_position` is composite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeastPrimeRow {
    pub y: u32,
    pub x_position: u64,
    pub prime_value: Nat,
    pub certainty: Certainty,
}

const SCAN_BATCH: u64 = 32;

fn default_scan_bound(y: u32) -> u64 {
    // 10·d_y = 10·2^(y+1), a generous safety stop; effectively unbounded
    // once it saturates u64.
    10u64.saturating_mul(1u64.checked_shl(y + 1).unwrap_or(u64::MAX))
}

/// Scans positions x = 0, 1, 2, … of column `y` for the first prime term,
/// testing batches speculatively in parallel but always returning the
/// minimal position.
pub fn least_prime_with_bound(
    y: u32,
    policy: &PrimalityPolicy,
    max_positions: u64,
) -> Result<LeastPrimeRow, PrimeLabError> {
    let mut x = 0u64;
    while x < max_positions {
        let hi = x.saturating_add(SCAN_BATCH).min(max_positions);
        let found = (x..hi)
            .into_par_iter()
            .filter_map(|pos| {
                let verdict = is_prime(&progression_term(y, &Nat::from(pos)), policy);
                verdict.is_prime.then_some((pos, verdict))
            })
            .min_by_key(|(pos, _)| *pos);
        if let Some((pos, verdict)) = found {
            return Ok(LeastPrimeRow {
                y,
                x_position: pos,
                prime_value: verdict.value,
                certainty: verdict.certainty,
            });
        }
        x = hi;
    }
    Err(PrimeLabError::ScanExhausted {
        y,
        scanned: max_positions,
    })
}

/// [`least_prime_with_bound`] with the default `10·d_y` stop.
pub fn least_prime(y: u32, policy: &PrimalityPolicy) -> Result<LeastPrimeRow, PrimeLabError> {
    least_prime_with_bound(y, policy, default_scan_bound(y))
}

/// Outcome of the `p(M_y, d_y) < d_y²/2` bound check for column `y`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinnikReport {
    pub least: LeastPrimeRow,
    /// `d_y²/2`.
    pub bound: Nat,
    /// `prime_value / bound`.
    pub ratio: f64,
    pub holds: bool,
    /// Whether the least prime falls inside `S_y` (x < 2^y), i.e. the
    /// stronger in-segment bound `p ≤ max S_y` also holds.
    pub in_segment: bool,
    /// `x_position / 2^y`, the least prime's relative position in `S_y`.
    pub relative_position: f64,
}

/// f64 quotient of two Nats of any width (exact to f64 precision).
fn ratio_f64(num: &Nat, den: &Nat) -> f64 {
    use num_traits::Zero;
    if num.is_zero() {
        return 0.0;
    }
    let num_shift = num.bits().saturating_sub(53);
    let den_shift = den.bits().saturating_sub(53);
    let num_top = u64::try_from(num >> num_shift).expect("53-bit window") as f64;
    let den_top = u64::try_from(den >> den_shift).expect("53-bit window") as f64;
    (num_top / den_top) * 2f64.powi(num_shift as i32 - den_shift as i32)
}

/// Runs the least-prime scan for column `y` and checks `p < d_y²/2`.
pub fn linnik_check(y: u32, policy: &PrimalityPolicy) -> Result<LinnikReport, PrimeLabError> {
    let least = least_prime(y, policy)?;
    let d = Nat::from(1u32) << (y + 1);
    let bound = (&d * &d) >> 1u32;
    let holds = least.prime_value < bound;
    let ratio = ratio_f64(&least.prime_value, &bound);
    let in_segment = y >= 64 || least.x_position < (1u64 << y);
    let relative_position = least.x_position as f64 * 2f64.powi(-(y as i32));
    Ok(LinnikReport {
        least,
        bound,
        ratio,
        holds,
        in_segment,
        relative_position,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn nat(n: u64) -> Nat {
        Nat::from(n)
    }

    fn policy() -> PrimalityPolicy {
        PrimalityPolicy::default()
    }

    #[test]
    fn verdict_examples() {
        assert!(is_prime(&nat(19), &policy()).is_prime);
        assert!(!is_prime(&nat(27), &policy()).is_prime);
        assert!(!is_prime(&nat(0), &policy()).is_prime);
        assert!(!is_prime(&nat(1), &policy()).is_prime);
        assert!(is_prime(&nat(2), &policy()).is_prime);
        let big: Nat = "363421567871562278978884080737128449835007".parse().unwrap();
        let v = is_prime(&big, &policy());
        assert!(v.is_prime);
        assert_eq!(v.certainty, Certainty::Probabilistic { rounds: 16 });
    }

    #[test]
    fn census_examples() {
        let p = policy();
        assert_eq!(census(1, &p).unwrap().prime_count, 1);
        let row = census(4, &p).unwrap();
        assert_eq!((row.prime_count, row.segment_size), (7, 16));
        assert_eq!(row.percent, "43.750");
        let row = census(2, &p).unwrap();
        assert_eq!((row.prime_count, row.segment_size), (3, 4));
        assert_eq!(row.percent, "75.000");
    }

    #[test]
    fn census_ceiling_enforced() {
        assert!(matches!(
            census_with_ceiling(9, &policy(), 8),
            Err(PrimeLabError::ResourceLimit { .. })
        ));
    }

    #[test]
    fn census_matches_trial_division_oracle() {
        for y in 1..=10u32 {
            let size = 1u64 << y;
            let oracle = (0..size)
                .filter(|&k| {
                    let t = ((2 * k + 1) << y) - 1;
                    t >= 2 && (2..).take_while(|d| d * d <= t).all(|d| t % d != 0)
                })
                .count() as u64;
            assert_eq!(census(y, &policy()).unwrap().prime_count, oracle, "y = {y}");
        }
    }

    #[test]
    fn census_range_ordered() {
        let rows = census_range(1, 3, &policy(), DEFAULT_CENSUS_CEILING).unwrap();
        let shape: Vec<(u64, u64)> = rows
            .iter()
            .map(|r| (r.prime_count, r.segment_size))
            .collect();
        assert_eq!(shape, vec![(1, 2), (3, 4), (4, 8)]);
    }

    #[test]
    fn least_prime_examples() {
        let p = policy();
        let row = least_prime(4, &p).unwrap();
        assert_eq!((row.x_position, row.prime_value.clone()), (1, nat(47)));
        let row = least_prime(30, &p).unwrap();
        assert_eq!(row.x_position, 106);
    }

    #[test]
    fn least_prime_positions_are_minimal_under_second_policy() {
        let first = policy();
        let second = PrimalityPolicy { rounds: 24, seed: 0xA5A5_5A5A };
        for y in 1..=60u32 {
            let row = least_prime(y, &first).unwrap();
            for x in 0..row.x_position {
                let term = progression_term(y, &Nat::from(x));
                assert!(!is_prime(&term, &second).is_prime, "y = {y}, x = {x}");
            }
            assert!(is_prime(&row.prime_value, &second).is_prime, "y = {y}");
        }
    }

    #[test]
    fn scan_exhaustion_reported() {
        // Column 9's first prime sits at x = 3, so a 2-position scan fails.
        assert!(matches!(
            least_prime_with_bound(9, &policy(), 2),
            Err(PrimeLabError::ScanExhausted { scanned: 2, .. })
        ));
    }

    #[test]
    fn linnik_examples() {
        let p = policy();
        let r = linnik_check(3, &p).unwrap();
        assert_eq!(r.least.prime_value, nat(7));
        assert_eq!(r.bound, nat(128));
        assert!(r.holds && r.in_segment);

        let r = linnik_check(1, &p).unwrap();
        assert_eq!(r.least.prime_value, nat(5));
        assert_eq!(r.bound, nat(8));
        assert!(r.holds);
    }

    #[test]
    fn percent_rendering() {
        assert_eq!(percent_string(1, 2), "50.000");
        assert_eq!(percent_string(7, 16), "43.750");
        assert_eq!(percent_string(13, 64), "20.312"); // tie, rounds to even
        assert_eq!(percent_string(95, 512), "18.555");
        assert_eq!(percent_string(1717, 16384), "10.480");
        assert_eq!(percent_string(0, 8), "0.000");
        assert_eq!(percent_string(8, 8), "100.000");
    }

    #[test]
    fn ratio_f64_spans_wide_magnitudes() {
        assert_eq!(ratio_f64(&Nat::zero(), &nat(5)), 0.0);
        assert!((ratio_f64(&nat(1), &nat(3)) - 1.0 / 3.0).abs() < 1e-12);
        let tiny = ratio_f64(&nat(133), &(Nat::from(1u32) << 130));
        assert!(tiny > 0.0 && tiny < 1e-37, "tiny = {tiny}");
    }

    #[test]
    fn deterministic_across_seeds_below_word_size() {
        let a = PrimalityPolicy { rounds: 4, seed: 1 };
        let b = PrimalityPolicy { rounds: 4, seed: 2 };
        for y in 1..=12u32 {
            assert_eq!(census(y, &a).unwrap(), census(y, &b).unwrap());
        }
    }
}

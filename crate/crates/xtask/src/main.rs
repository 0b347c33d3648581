//! Workspace chores. `cargo run -p xtask -- gen-bfiles [--out DIR]`
//! regenerates the vendored OEIS b-file snapshot under `data/oeis/`.
//!
//! Closed-form sequences are written from their published formulas. The
//! membership sequences (A036991 and its prime subsequence A350577) are
//! enumerated with the explicit suffix-counting oracle and trial-division
//! primality, deliberately avoiding the streaming predicate and the
//! probable-prime engine those files later cross-check.

use natmat_core::bits::is_dyck_oracle;
use natmat_core::Nat;
use std::path::{Path, PathBuf};

/// Values of A036991/A350577 are enumerated below this bound, comfortably
/// past the 2^16 range the crosschecks sweep.
const MEMBERSHIP_LIMIT: u64 = 1 << 17;

/// Terms written for closed-form sequences.
const FORMULA_TERMS: u64 = 201;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    match args.first().map(String::as_str) {
        Some("gen-bfiles") => {
            let out = args
                .iter()
                .position(|a| a == "--out")
                .and_then(|i| args.get(i + 1))
                .map(PathBuf::from)
                .unwrap_or_else(default_out_dir);
            gen_bfiles(&out);
        }
        _ => {
            eprintln!("usage: cargo run -p xtask -- gen-bfiles [--out DIR]");
            std::process::exit(2);
        }
    }
}

fn default_out_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/oeis")
}

fn gen_bfiles(out: &Path) {
    std::fs::create_dir_all(out).expect("create output directory");

    // Chains (2k+1)·2^n − 1 by odd multiplier, each identified in the OEIS.
    let chains: [(u32, u64); 11] = [
        (225, 1),    // A000225, root 0
        (153893, 3), // root 2
        (153894, 5), // root 4
        (86224, 7),  // root 6
        (86225, 11), // root 10
        (198274, 13),
        (196305, 15),
        (198275, 17),
        (198276, 19),
        (171389, 21),
        (291557, 23),
    ];
    for (number, multiplier) in chains {
        write_bfile(out, number, 0, geometric_chain(multiplier, FORMULA_TERMS));
    }

    // A052996 lists 1, 3 ahead of the root-8 chain 9·2^n − 1.
    let mut a052996 = vec!["1".to_string(), "3".to_string()];
    a052996.extend(geometric_chain(9, FORMULA_TERMS - 2));
    write_bfile(out, 52996, 0, a052996);

    write_bfile(out, 1477, 0, (0..FORMULA_TERMS).map(|n| n.to_string()).collect());
    write_bfile(out, 5843, 0, (0..FORMULA_TERMS).map(|n| (2 * n).to_string()).collect());
    write_bfile(out, 16813, 0, (0..FORMULA_TERMS).map(|n| (4 * n + 1).to_string()).collect());
    write_bfile(out, 17101, 0, (0..FORMULA_TERMS).map(|n| (8 * n + 3).to_string()).collect());

    // Diagonal of segment maxima: (2^{n+1} − 1)·2^n − 1.
    let diagonal: Vec<String> = (0..FORMULA_TERMS)
        .map(|n| {
            let n = n as u32;
            let v = ((Nat::from(1u32) << (n + 1)) - 1u32) * (Nat::from(1u32) << n) - 1u32;
            v.to_string()
        })
        .collect();
    write_bfile(out, 129868, 0, diagonal);

    // Their binary codes read as decimal digit strings: n ones, 0, n ones.
    let codes: Vec<String> = (0..FORMULA_TERMS)
        .map(|n| {
            if n == 0 {
                "0".to_string()
            } else {
                let ones = "1".repeat(n as usize);
                format!("{ones}0{ones}")
            }
        })
        .collect();
    write_bfile(out, 138148, 0, codes);

    // Self-inverse permutation of ℕ: each antidiagonal block reversed.
    let mut perm = Vec::with_capacity(FORMULA_TERMS as usize);
    let mut block_start = 0u64;
    let mut width = 1u64;
    'outer: loop {
        for j in 0..width {
            if perm.len() as u64 == FORMULA_TERMS {
                break 'outer;
            }
            perm.push((block_start + width - 1 - j).to_string());
        }
        block_start += width;
        width += 1;
    }
    write_bfile(out, 61579, 0, perm);

    // Membership sequences, enumerated with independent oracles.
    let members: Vec<u64> = (0..MEMBERSHIP_LIMIT)
        .filter(|&n| is_dyck_oracle(&Nat::from(n)))
        .collect();
    write_bfile(
        out,
        36991,
        1,
        members.iter().map(|n| n.to_string()).collect(),
    );
    let prime_members: Vec<String> = members
        .iter()
        .copied()
        .filter(|&n| trial_division_prime(n))
        .map(|n| n.to_string())
        .collect();
    write_bfile(out, 350577, 1, prime_members);

    println!("b-files written to {}", out.display());
}

fn geometric_chain(multiplier: u64, count: u64) -> Vec<String> {
    (0..count)
        .map(|n| ((Nat::from(multiplier) << n as u32) - 1u32).to_string())
        .collect()
}

fn trial_division_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn write_bfile(out: &Path, number: u32, offset: i64, values: Vec<String>) {
    let mut text = String::new();
    for (i, v) in values.iter().enumerate() {
        text.push_str(&format!("{} {}\n", offset + i as i64, v));
    }
    let path = out.join(format!("b{number:06}.txt"));
    std::fs::write(&path, text).expect("write b-file");
    println!("  {} ({} terms)", path.display(), values.len());
}

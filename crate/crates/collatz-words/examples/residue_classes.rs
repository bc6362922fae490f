//! The structure of the special solutions y0(m, n): periodicity in n,
//! the reduced residue system they sweep out, and the shift identity for x0.
//!
//!     cargo run --example residue_classes

use collatz_words::diophantine::{rrs_check, x0_shift_check, y0_period_check};

fn main() {
    for m in 0..=4 {
        let report = y0_period_check(m, 4 * 2 * 3u64.pow(m.max(1) as u32 - 1) + 4);
        println!(
            "m={m}: primitive period of n -> y0({m}, n) is {} (phi(3^{m}) = {})",
            report.period, report.totient
        );
        if m == 3 {
            let values: Vec<String> = report.first_period.iter().map(|v| v.to_string()).collect();
            println!("  first period: {{{}}}", values.join(", "));
        }
        println!(
            "  one period is the reduced residue system mod 3^{m}: {}",
            rrs_check(m)
        );
    }

    // x0(m, n + phi) = 2^phi * x0(m, n) - (2^phi - 1)/3^m
    let all = (0..=4).all(|m| (0..=20).all(|n| x0_shift_check(m, n)));
    println!("shift identity for x0 over m <= 4, n <= 20: {all}");
}

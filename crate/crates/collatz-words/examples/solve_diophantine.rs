//! Solve instances of 3^m x - 2^n y = c exactly and list the positive
//! solution family.
//!
//!     cargo run --example solve_diophantine

use num_bigint::BigInt;

use collatz_words::diophantine::{solve, special_solution, DioProblem};

fn show(m: u64, n: u64, c: i64, count: u64) {
    let problem = DioProblem {
        m,
        n,
        c: BigInt::from(c),
    };
    let solution = solve(&problem);
    println!("3^{m} x - 2^{n} y = {c}");
    println!(
        "  special solution x0={} y0={}, t_min={}",
        solution.x0, solution.y0, solution.t_min
    );
    let pairs: Vec<String> = (0..count)
        .map(|k| {
            let (x, y) = solution.member(k);
            format!("({x}, {y})")
        })
        .collect();
    println!("  positive pairs: {}", pairs.join(", "));
}

fn main() {
    show(3, 0, 1, 4);
    show(1, 1, -2, 4);
    show(2, 3, 1, 4);
    show(0, 0, 5, 4);
    show(0, 0, 0, 4);

    // The special solution stays exact even where the defining exponent
    // n + 3^(m-1) is astronomically large: it is reduced mod phi(3^m).
    let (x0, y0) = special_solution(200, 10);
    println!("\nx0(200, 10) has {} decimal digits", x0.to_string().len());
    println!("y0(200, 10) = {y0}");
}

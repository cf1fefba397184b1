// quick probe: SNF at the spec's stated desk-scale ceiling
use gysinkit::linalg::{smith_normal_form, verify_snf, IntMatrix};
fn main() {
    let mut state: u64 = 42;
    let mut next = move || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((state >> 33) as i64 % 5) - 2
    };
    for n in [50usize, 100, 150] {
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| next()).collect()).collect();
        let a = IntMatrix::from_rows(&rows);
        let t = std::time::Instant::now();
        let r = smith_normal_form(&a);
        let elapsed = t.elapsed();
        assert!(verify_snf(&a, &r));
        println!("{n}x{n}: rank {} in {elapsed:.2?}", r.rank());
    }
}

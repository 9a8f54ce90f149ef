use tomescu_core::conjecture::enumerate_connected;

fn main() {
    for n in 1..=7usize {
        let started = std::time::Instant::now();
        let planar = enumerate_connected(n, |g| g.is_planar()).unwrap().len();
        let total = enumerate_connected(n, |_| true).unwrap().len();
        println!(
            "n={n}: connected={total} planar={planar} nonplanar={} ({} ms)",
            total - planar,
            started.elapsed().as_millis()
        );
    }
}

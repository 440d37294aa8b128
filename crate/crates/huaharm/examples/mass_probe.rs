use huaharm::kernels::{HKernelSpec, MassBox};

fn main() {
    let b = MassBox::default();
    let spec = HKernelSpec::calibrated(0.5, 1, 12, &b, 0.5).unwrap();
    println!("c_n = {:.6e}", spec.constant());
    for a in [0.25, 0.5, 1.0] {
        let m = spec.mass(&b, a).unwrap();
        println!("a = {a}: mass = {m:.6}");
    }
    // tail ratio at a couple of points
    use huaharm::heisenberg::HPoint;
    use num_complex::Complex64;
    for (r, t, a) in [(0.0, 0.0, 0.25), (1.0, 2.0, 0.5), (2.0, -5.0, 1.0)] {
        let w = HPoint::new(vec![Complex64::new(r, 0.0)], t);
        let v = spec.p_kernel(&w, a).unwrap();
        println!("P({r},{t};{a}) = {:.4e}, tail {:.2e}, warn {}", v.value, v.tail_ratio, v.truncation_warning);
    }
}

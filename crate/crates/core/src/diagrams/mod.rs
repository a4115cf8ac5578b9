//! Labelled Brauer diagrams and the algebras they span.

mod algebra;
mod diagram;
mod element;
mod generators;

pub use algebra::{DiagramAlgebra, Trace, TracedProduct};
pub use diagram::{Diagram, DiagramJson, RawStrand, StrandJson};
pub use element::{AlgebraElement, TermJson};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Subspace;
    use crate::scalars::{Cyclotomic, Params};
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn alg(m: u32, n: usize, oriented: bool) -> DiagramAlgebra {
        let p = if oriented { Params::generic(m, 7) } else { Params::generic_unrestricted(m, 7) };
        DiagramAlgebra::cyclotomic(n, &p, oriented)
    }

    /// Reversing an arc inverts its label, so with `δ_1 ≠ δ_2` the oriented
    /// product of `e_{1,2}`, `t_{1,2}` and a labelled arc depends on the
    /// bracketing; symmetric parameters restore associativity.
    #[test]
    fn oriented_product_needs_symmetric_parameters() {
        let p = Params::generic_unrestricted(3, 7);
        assert!(!p.is_symmetric());
        let a = DiagramAlgebra::cyclotomic(2, &p, true);
        let x = a.element(a.e_arc(1, 2).unwrap());
        let y = a.element(a.t_swap(1, 2).unwrap());
        let z = a.element(
            Diagram::from_strands(2, 3, &[RawStrand { from: 0, to: 1, label: 1 }, RawStrand { from: 2, to: 3, label: 0 }])
                .unwrap(),
        );
        let left = a.mul(&a.mul(&x, &y), &z);
        let right = a.mul(&x, &a.mul(&y, &z));
        assert_eq!(left, x.scale(&p.delta()[1]));
        assert_eq!(right, x.scale(&p.delta()[2]));
        let b = DiagramAlgebra::cyclotomic(2, &Params::generic(3, 7), true);
        assert_eq!(b.mul(&b.mul(&x, &y), &z), b.mul(&x, &b.mul(&y, &z)));
    }

    #[test]
    fn basis_sizes() {
        for m in 1..=3 {
            for n in 0..=4 {
                let a = alg(m, n, true);
                let b = a.basis();
                assert_eq!(b.len() as u128, DiagramAlgebra::expected_dim(m, n));
                let mut dedup = b.clone();
                dedup.dedup();
                assert_eq!(dedup.len(), b.len());
            }
        }
        assert_eq!(alg(1, 2, true).basis().len(), 3);
        assert_eq!(alg(3, 2, true).basis().len(), 27);
    }

    #[test]
    fn rank_one_is_group_algebra() {
        let a = alg(4, 1, true);
        let b = a.basis();
        assert_eq!(b.len(), 4);
        for x in &b {
            for y in &b {
                let (c, z) = a.mul_diagrams(x, y);
                assert!(c.is_one());
                assert_eq!(z.label(0), (x.label(0) + y.label(0)) % 4);
            }
        }
    }

    #[test]
    fn associativity_exhaustive() {
        for oriented in [true, false] {
            for (m, n) in [(1, 2), (2, 2), (3, 2), (2, 3)] {
                let a = alg(m, n, oriented);
                let b = a.basis();
                for x in &b {
                    for y in &b {
                        let (c1, xy) = a.mul_diagrams(x, y);
                        for z in &b {
                            let (c2, l) = a.mul_diagrams(&xy, z);
                            let (c3, yz) = a.mul_diagrams(y, z);
                            let (c4, r) = a.mul_diagrams(x, &yz);
                            assert_eq!(l, r);
                            assert_eq!(&c1 * &c2, &c3 * &c4, "m={m} n={n} oriented={oriented} x={x} y={y} z={z}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn associativity_random_n4() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for oriented in [true, false] {
            let a = alg(2, 4, oriented);
            let b = a.basis();
            for _ in 0..200 {
                let x = &b[rng.gen_range(0..b.len())];
                let y = &b[rng.gen_range(0..b.len())];
                let z = &b[rng.gen_range(0..b.len())];
                let (c1, xy) = a.mul_diagrams(x, y);
                let (c2, l) = a.mul_diagrams(&xy, z);
                let (c3, yz) = a.mul_diagrams(y, z);
                let (c4, r) = a.mul_diagrams(x, &yz);
                assert_eq!(l, r);
                assert_eq!(&c1 * &c2, &c3 * &c4);
            }
        }
    }

    #[test]
    fn generator_relations() {
        let p = Params::generic(3, 5);
        for oriented in [true, false] {
            let a = DiagramAlgebra::cyclotomic(3, &p, oriented);
            let one = a.one();
            let el = |d: Diagram| a.element(d);
            let t12 = el(a.t_swap(1, 2).unwrap());
            assert_eq!(a.mul(&t12, &t12), one);
            for x in 0..3 {
                for y in 0..3 {
                    let lhs = a.mul(&el(a.t_label(2, x).unwrap()), &el(a.t_label(2, y).unwrap()));
                    assert_eq!(lhs, el(a.t_label(2, x + y).unwrap()));
                }
            }
            let e = el(a.e_arc(1, 2).unwrap());
            assert_eq!(a.mul(&e, &e), e.scale(&p.delta()[0]));
            for k in 0..3 {
                let tek = a.mul(&a.mul(&e, &el(a.t_label(1, k).unwrap())), &e);
                assert_eq!(tek, e.scale(&p.delta()[k as usize]));
            }
        }
    }

    /// `t_i^a e = t_j^{-a} e` oriented, `t_i^a e = t_j^a e` unoriented.
    #[test]
    fn labels_slide_around_arcs() {
        for oriented in [true, false] {
            let a = alg(4, 2, oriented);
            let e = a.element(a.e_arc(1, 2).unwrap());
            for k in 0..4i64 {
                let lhs = a.mul(&a.element(a.t_label(1, k).unwrap()), &e);
                let j = if oriented { -k } else { k };
                let rhs = a.mul(&a.element(a.t_label(2, j).unwrap()), &e);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn star_is_anti_automorphism() {
        for oriented in [true, false] {
            let a = alg(3, 3, oriented);
            let b = a.basis();
            for x in b.iter().step_by(7) {
                assert_eq!(x.star(3, oriented).star(3, oriented), *x);
                for y in b.iter().step_by(5) {
                    let xy = a.mul(&a.element(x.clone()), &a.element(y.clone()));
                    let rhs = a.mul(&a.star(&a.element(y.clone())), &a.star(&a.element(x.clone())));
                    assert_eq!(a.star(&xy), rhs);
                }
            }
            assert_eq!(a.star(&a.one()), a.one());
            let e = a.element(a.e_arc(1, 3).unwrap());
            assert_eq!(a.star(&e), e);
            let t = a.element(a.t_swap(1, 3).unwrap());
            assert_eq!(a.star(&t), t);
            let tr = a.element(a.t_label(2, 1).unwrap());
            let want = if oriented { 2 } else { 1 };
            assert_eq!(a.star(&tr), a.element(a.t_label(2, want).unwrap()));
        }
    }

    #[test]
    fn through_strand_diagrams_close_under_product() {
        let a = alg(2, 3, true);
        let h: Vec<_> = a.basis().into_iter().filter(|d| d.through_count() == 3).collect();
        assert_eq!(h.len(), 8 * 6);
        for x in &h {
            for y in &h {
                let (c, z) = a.mul_diagrams(x, y);
                assert!(c.is_one());
                assert_eq!(z.through_count(), 3);
            }
        }
    }

    #[test]
    fn generators_generate() {
        for (m, n) in [(1, 3), (2, 3), (3, 2)] {
            let a = alg(m, n, true);
            let b = a.basis();
            let gens: Vec<Diagram> = a.generators().into_iter().map(|(_, d)| d).collect();
            let mut seen: std::collections::BTreeSet<Diagram> = [Diagram::identity(n)].into();
            let mut frontier: Vec<Diagram> = seen.iter().cloned().collect();
            while let Some(x) = frontier.pop() {
                for g in &gens {
                    let (_, z) = a.mul_diagrams(g, &x);
                    if seen.insert(z.clone()) {
                        frontier.push(z);
                    }
                }
            }
            assert_eq!(seen.len(), b.len(), "m={m} n={n}");
        }
    }

    #[test]
    fn torus_projection_matches_multiplication() {
        for oriented in [true, false] {
            let a = alg(3, 3, oriented);
            let b = a.basis();
            for x in b.iter().step_by(11) {
                let xe = a.element(x.clone());
                for i in 1..=3 {
                    for r in 0..3u32 {
                        let mut t = AlgebraElement::zero(3);
                        for q in 0..3i64 {
                            let c = Cyclotomic::xi_pow(3, q * r as i64).scale(&crate::Rational::new(1.into(), 3.into()));
                            t.add_term(a.t_label(i, q).unwrap(), c);
                        }
                        assert_eq!(a.torus_projection(&xe, i - 1, r), a.mul(&t, &xe));
                        assert_eq!(a.torus_projection(&xe, 3 + i - 1, r), a.mul(&xe, &t));
                    }
                }
            }
        }
    }

    #[test]
    fn localising_idempotent() {
        // δ ≠ 0 form
        for (m, n) in [(2, 3), (2, 4), (3, 2)] {
            let p = Params::generic(m, 3);
            let a = DiagramAlgebra::cyclotomic(n, &p, true);
            let e = a.e_localising().unwrap();
            assert_eq!(a.mul(&e, &e), e);
        }
        // δ = 0 form
        for (m, n) in [(1, 3), (2, 3), (2, 4)] {
            let p = Params::from_ints(&vec![0; m as usize]);
            let a = DiagramAlgebra::cyclotomic(n, &p, true);
            let e = a.e_localising().unwrap();
            assert_eq!(a.mul(&e, &e), e);
        }
        let a0 = DiagramAlgebra::cyclotomic(2, &Params::from_ints(&[0, 0]), true);
        assert!(a0.e_localising().is_err());
    }

    /// `e B_n e` has dimension `m^{n−2}(2n−5)!!` and `x ↦ e x̂ e` respects products.
    #[test]
    fn corner_algebra() {
        for (m, n, zero) in [(2, 3, false), (2, 4, false), (2, 3, true), (2, 4, true)] {
            let p = if zero { Params::from_ints(&vec![0; m as usize]) } else { Params::generic(m, 9) };
            let a = DiagramAlgebra::cyclotomic(n, &p, true);
            let small = DiagramAlgebra::cyclotomic(n - 2, &p, true);
            let e = a.e_localising().unwrap();
            let basis = a.basis();
            let index: std::collections::HashMap<Diagram, usize> =
                basis.iter().cloned().enumerate().map(|(i, d)| (d, i)).collect();
            let mut span = Subspace::new(basis.len(), m);
            for d in &basis {
                let v = a.mul(&a.mul(&e, &a.element(d.clone())), &e);
                span.insert(v.coordinates(&index, basis.len()).unwrap());
            }
            assert_eq!(span.dim() as u128, DiagramAlgebra::expected_dim(m, n - 2));
            let img = |d: &Diagram| {
                let l = a.lift_from_smaller(d, zero).unwrap();
                a.mul(&a.mul(&e, &l), &e)
            };
            let sb = small.basis();
            for x in &sb {
                for y in &sb {
                    let lhs = a.mul(&img(x), &img(y));
                    let (c, z) = small.mul_diagrams(x, y);
                    assert_eq!(lhs, img(&z).scale(&c));
                }
            }
        }
    }

    #[test]
    fn unoriented_loop_sums_labels() {
        let p = Params::generic(3, 1);
        let a = DiagramAlgebra::cyclotomic(2, &p, false);
        for x in 0..3i64 {
            for y in 0..3i64 {
                let top = Diagram::from_strands(2, 3, &[RawStrand { from: 0, to: 1, label: 0 }, RawStrand { from: 2, to: 3, label: x }]).unwrap();
                let bot = Diagram::from_strands(2, 3, &[RawStrand { from: 0, to: 1, label: y }, RawStrand { from: 2, to: 3, label: 0 }]).unwrap();
                let (c, _) = a.mul_diagrams(&top, &bot);
                assert_eq!(c, p.delta()[((x + y) % 3) as usize]);
            }
        }
    }

    fn arb_raw(n: usize) -> impl Strategy<Value = (Vec<usize>, Vec<i64>, Vec<bool>)> {
        (
            Just((0..2 * n).collect::<Vec<_>>()).prop_shuffle(),
            prop::collection::vec(0i64..6, n),
            prop::collection::vec(any::<bool>(), n),
        )
    }

    fn build(n: usize, m: u32, raw: &(Vec<usize>, Vec<i64>, Vec<bool>), flip: bool) -> Diagram {
        let (perm, labels, dirs) = raw;
        let strands: Vec<RawStrand> = (0..n)
            .map(|k| {
                let (u, v) = (perm[2 * k], perm[2 * k + 1]);
                let l = labels[k];
                if dirs[k] ^ flip {
                    RawStrand { from: v, to: u, label: -l }
                } else {
                    RawStrand { from: u, to: v, label: l }
                }
            })
            .collect();
        Diagram::from_strands(n, m, &strands).unwrap()
    }

    proptest! {
        #[test]
        fn orientation_independent(x in arb_raw(4), y in arb_raw(4)) {
            let a = alg(3, 4, true);
            let (c1, d1) = a.mul_diagrams(&build(4, 3, &x, false), &build(4, 3, &y, false));
            let (c2, d2) = a.mul_diagrams(&build(4, 3, &x, true), &build(4, 3, &y, true));
            prop_assert_eq!(c1, c2);
            prop_assert_eq!(d1, d2);
        }
    }
}

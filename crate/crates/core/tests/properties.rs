use proptest::prelude::*;
use rand::Rng;

use poisson_dirac::bivector::BivectorField;
use poisson_dirac::dirac::DiracVS;
use poisson_dirac::linalg::{coordinates_in, Kind, MatrixQ, Rational, Subspace};
use poisson_dirac::poisson::{
    canonical_iso, check_poisla, classify_subspace, cosymplectic_extension, PoissonVS,
};
use poisson_dirac::poly::{Monomial, Poly, PolyMap};
use poisson_dirac::sampling::*;
use poisson_dirac::submanifold::{basic_bracket, bracket_consistency_check, classify_at, SubmanifoldPatch};

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn random_poly(rng: &mut SampleRng, nvars: usize, max_deg: u32, terms: usize) -> Poly {
    Poly::from_terms(
        nvars,
        (0..terms).map(|_| {
            let exps = (0..nvars).map(|_| rng.gen_range(0..=max_deg)).collect();
            (Monomial::from_exponents(exps), small_int(rng, 3))
        }),
    )
}

fn random_map(rng: &mut SampleRng, source: usize, target: usize) -> PolyMap {
    PolyMap::new(source, (0..target).map(|_| random_poly(rng, source, 2, 3)).collect()).unwrap()
}

/// Each coordinate shifted by a polynomial in the earlier ones, with its inverse.
fn triangular_diffeo(rng: &mut SampleRng, n: usize) -> (PolyMap, PolyMap) {
    let mut fwd = Vec::with_capacity(n);
    let mut inv: Vec<Poly> = Vec::with_capacity(n);
    for i in 0..n {
        let shift = random_poly(rng, i, 2, 2);
        let x = Poly::var(n, i);
        let positions: Vec<usize> = (0..i).collect();
        let lifted = shift.embed(n, &positions).unwrap();
        fwd.push(&x + &lifted);
        // x_i = y_i − shift(x_0..x_{i−1}(y))
        let back = if i == 0 { lifted.clone() } else { shift.compose(&inv).unwrap() };
        inv.push(&x - &back);
    }
    (PolyMap::new(n, fwd).unwrap(), PolyMap::new(n, inv).unwrap())
}

fn sharp_vectors(p: &PoissonVS, s: &Subspace) -> Vec<Vec<Rational>> {
    s.basis_vectors().iter().map(|xi| p.matrix().mul_vec(xi).unwrap()).collect()
}

fn rank_of(n: usize, vs: Vec<Vec<Rational>>) -> usize {
    Subspace::from_vectors(Kind::Vectors, n, vs).unwrap().dim()
}

fn random_dirac(rng: &mut SampleRng, n: usize) -> DiracVS {
    let o = random_subspace_any_dim(rng, n);
    let omega = random_antisymmetric(rng, o.dim(), 2);
    let l = DiracVS::from_subspace_form(&o, &omega).unwrap();
    if rng.gen_bool(0.5) {
        l
    } else {
        l.gauge(&random_antisymmetric(rng, n, 2)).unwrap()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn compose_commutes_with_evaluation(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let f = random_map(&mut rng, 3, 2);
        let g = random_map(&mut rng, 2, 3);
        let p = grid_point(&mut rng, 2, 4);
        let fg = f.compose(&g).unwrap();
        prop_assert_eq!(fg.evaluate(&p).unwrap(), f.evaluate(&g.evaluate(&p).unwrap()).unwrap());
        // chain rule
        let lhs = fg.jacobian_at(&p).unwrap();
        let rhs = f.jacobian_at(&g.evaluate(&p).unwrap()).unwrap().mul(&g.jacobian_at(&p).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn partial_derivatives_commute(seed in any::<u64>(), i in 0usize..3, j in 0usize..3) {
        let mut rng = seeded(seed);
        let f = random_poly(&mut rng, 3, 3, 5);
        prop_assert_eq!(f.partial(i).unwrap().partial(j).unwrap(), f.partial(j).unwrap().partial(i).unwrap());
    }

    #[test]
    fn subspace_duality_and_modular_law(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = seeded(seed);
        let a = random_subspace_any_dim(&mut rng, n);
        let b = random_subspace_any_dim(&mut rng, n);
        prop_assert_eq!(&a.annihilator().annihilator(), &a);
        prop_assert_eq!(a.dim() + b.dim(), a.sum(&b).unwrap().dim() + a.intersect(&b).unwrap().dim());
        // canonical representation under a change of basis
        let mix = random_matrix(&mut rng, a.dim(), a.dim(), 3);
        if mix.rank() == a.dim() {
            prop_assert_eq!(&Subspace::span(Kind::Vectors, &mix.mul(a.basis()).unwrap()), &a);
        }
    }

    #[test]
    fn classification_table(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = seeded(seed);
        let p = random_bivector(&mut rng, n);
        let c = random_subspace_any_dim(&mut rng, n);
        let rec = classify_subspace(&p, &c).unwrap();
        let sharp = sharp_vectors(&p, &c.annihilator());
        let coisotropic = sharp.iter().all(|v| c.contains_vector(v).unwrap());
        prop_assert_eq!(rec.rho_rank == 0, coisotropic);
        prop_assert_eq!(rec.coisotropic, coisotropic);
        let sharp_rank = rank_of(n, sharp.clone());
        let all: Vec<_> = c.basis_vectors().into_iter().chain(sharp).collect();
        let direct = rank_of(n, all) == n && c.dim() + sharp_rank == n;
        prop_assert_eq!(rec.cosymplectic, direct);
        prop_assert_eq!(rec.rho_rank == rec.dim_conormal, direct);
        prop_assert_eq!(rec.dim_characteristic, c.dim() + rec.dim_sharp_conormal - rec.dim_sum);
    }

    #[test]
    fn leaf_form_identity(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = seeded(seed);
        let p = random_bivector(&mut rng, n);
        let xi = grid_point(&mut rng, n, 3);
        let eta = grid_point(&mut rng, n, 3);
        let x = p.matrix().mul_vec(&xi).unwrap();
        let y = p.matrix().mul_vec(&eta).unwrap();
        prop_assert_eq!(p.leaf_form_value(&x, &y).unwrap(), -dot(&xi, &y));
    }

    #[test]
    fn extension_satisfies_both_conditions_and_coro(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = seeded(seed);
        let p = random_bivector(&mut rng, n);
        let c = random_subspace_any_dim(&mut rng, n);
        let ext = cosymplectic_extension(&p, &c).unwrap();
        prop_assert_eq!(&ext, &cosymplectic_extension(&p, &c).unwrap());
        let sharp_c = Subspace::from_vectors(Kind::Vectors, n, sharp_vectors(&p, &c.annihilator())).unwrap();
        prop_assert!(ext.w.sum(&sharp_c).unwrap().contains(&p.leaf()).unwrap());
        prop_assert_eq!(&ext.w.intersect(&c.sum(&sharp_c).unwrap()).unwrap(), &c);

        // any complement of C + ♯C° gives another cosymplectic W
        let r = random_complement(&mut rng, &c.sum(&sharp_c).unwrap());
        let w = c.sum(&r).unwrap();
        let cond = check_poisla(&p, &c, &w).unwrap();
        prop_assert!(cond.both());
        prop_assert!(classify_subspace(&p, &w).unwrap().cosymplectic);
        let sharp_w = Subspace::from_vectors(Kind::Vectors, n, sharp_vectors(&p, &w.annihilator())).unwrap();
        prop_assert_eq!(c.sum(&sharp_c).unwrap(), c.sum(&sharp_w).unwrap());
        prop_assert!(c.intersect(&sharp_w).unwrap().is_zero());
    }

    #[test]
    fn canonical_iso_postconditions(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = seeded(seed);
        let p = random_bivector(&mut rng, n);
        let c = random_subspace_any_dim(&mut rng, n);
        let s = c.sum(&p.sharp_image(&c.annihilator()).unwrap()).unwrap();
        let v = c.sum(&random_complement(&mut rng, &s)).unwrap();
        let w = c.sum(&random_complement(&mut rng, &s)).unwrap();
        let iso = canonical_iso(&p, &c, &v, &w).unwrap();
        for x in c.basis_vectors() {
            prop_assert_eq!(iso.apply(&x).unwrap(), x);
        }
        let graph = DiracVS::from_bivector(&p);
        let pi_v = graph.pullback(&v).unwrap().as_bivector().bivector().unwrap();
        let pi_w = graph.pullback(&w).unwrap().as_bivector().bivector().unwrap();
        prop_assert_eq!(pi_v.pushforward(&iso.matrix).unwrap(), pi_w);
    }

    #[test]
    fn pullback_is_functorial(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = seeded(seed);
        let l = random_dirac(&mut rng, n);
        let outer = random_subspace_any_dim(&mut rng, n);
        let k = rng.gen_range(0..=outer.dim());
        let inner_coords = random_matrix(&mut rng, k, outer.dim(), 2);
        let inner = Subspace::span(Kind::Vectors, &inner_coords);
        let inner_ambient = inner.basis().mul(outer.basis()).unwrap();
        let two_step = l.pullback(&outer).unwrap().pullback(&inner).unwrap();
        let one_step = l.pullback_along(&inner_ambient).unwrap();
        prop_assert_eq!(two_step, one_step);
    }

    #[test]
    fn gauge_is_an_involution(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = seeded(seed);
        let l = random_dirac(&mut rng, n);
        let b = random_antisymmetric(&mut rng, n, 3);
        let g = l.gauge(&b).unwrap();
        prop_assert_eq!(g.range(), l.range());
        prop_assert_eq!(g.gauge(&b.neg()).unwrap(), l);
    }

    #[test]
    fn characteristic_matches_poisson_side(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = seeded(seed);
        let p = random_bivector(&mut rng, n);
        let c = random_subspace_any_dim(&mut rng, n);
        let rec = classify_subspace(&p, &c).unwrap();
        let lc = DiracVS::from_bivector(&p).pullback(&c).unwrap();
        let char_ambient = lc.characteristic().basis().mul(c.basis()).unwrap();
        prop_assert_eq!(Subspace::span(Kind::Vectors, &char_ambient), rec.characteristic);
        prop_assert_eq!(lc.as_bivector().bivector().is_some(), rec.pointwise_poisson_dirac);
    }

    #[test]
    fn pushforward_preserves_jacobi_and_transforms_values(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let n = 3;
        let pi = BivectorField::constant(&random_bivector(&mut rng, n));
        let (phi, phi_inv) = triangular_diffeo(&mut rng, n);
        prop_assert!(phi.compose(&phi_inv).unwrap().is_identity());
        let pushed = pi.pushforward(&phi, &phi_inv).unwrap();
        prop_assert!(pushed.is_poisson());
        let p = grid_point(&mut rng, n, 3);
        let j = phi.jacobian_at(&p).unwrap();
        let expect = j.mul(pi.evaluate(&p).unwrap().matrix()).unwrap().mul(&j.transpose()).unwrap();
        let value = pushed.evaluate(&phi.evaluate(&p).unwrap()).unwrap();
        prop_assert_eq!(value.matrix(), &expect);
    }

    #[test]
    fn jacobiator_is_antisymmetric(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let n = 4;
        let entries: Vec<_> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| (i, j, random_poly(&mut rng, n, 1, 2)))
            .collect();
        let pi = BivectorField::from_entries(n, entries).unwrap();
        let jac = pi.jacobiator();
        for (i, j, k) in [(0, 1, 2), (0, 2, 3), (1, 2, 3), (0, 1, 3)] {
            let a = jac.component(i, j, k);
            prop_assert_eq!(&jac.component(j, i, k), &-a.clone());
            prop_assert_eq!(&jac.component(j, k, i), &a);
            prop_assert_eq!(&jac.component(i, k, j), &-a.clone());
        }
    }

    #[test]
    fn level_set_and_graph_parametrization_agree(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let n = 4;
        let pi = BivectorField::constant(&random_bivector(&mut rng, n));
        // C = {x4 = h(x1, x2, x3)}
        let h = random_poly(&mut rng, 3, 2, 3);
        let lifted = h.embed(n, &[0, 1, 2]).unwrap();
        let level = SubmanifoldPatch::level_set(n, vec![&Poly::var(n, 3) - &lifted]).unwrap();
        let param = SubmanifoldPatch::Parametrized(
            PolyMap::new(3, vec![Poly::var(3, 0), Poly::var(3, 1), Poly::var(3, 2), h.clone()]).unwrap(),
        );
        let t = grid_point(&mut rng, 3, 3);
        let mut x = t.clone();
        x.push(h.evaluate(&t).unwrap());
        prop_assert_eq!(classify_at(&pi, &level, &x).unwrap(), classify_at(&pi, &param, &t).unwrap());
    }

    #[test]
    fn brackets_on_symplectic_lines_and_planes(seed in any::<u64>()) {
        let mut rng = seeded(seed);
        let n = 4;
        let pi = BivectorField::constant(&PoissonVS::standard_symplectic(2));
        let d = rng.gen_range(1..=2);
        let mut basis = random_matrix(&mut rng, d, n, 2);
        while basis.rank() < d {
            basis = random_matrix(&mut rng, d, n, 2);
        }
        let param = PolyMap::new(
            d,
            (0..n)
                .map(|i| {
                    (0..d).fold(Poly::zero(d), |acc, a| &acc + &Poly::var(d, a).scale(&basis[(a, i)]))
                })
                .collect(),
        )
        .unwrap();
        let c = SubmanifoldPatch::Parametrized(param);
        let f = random_poly(&mut rng, n, 1, 3);
        let g = random_poly(&mut rng, n, 1, 3);
        let q = grid_point(&mut rng, d, 3);
        if let (Ok(fg), Ok(gf)) = (basic_bracket(&f, &g, &pi, &c, &q), basic_bracket(&g, &f, &pi, &c, &q)) {
            prop_assert_eq!(fg.clone(), -gf);
            let check = bracket_consistency_check(&pi, &c, &q, &f, &g).unwrap();
            prop_assert!(check.agree);
            prop_assert_eq!(check.intrinsic, fg);
        }
    }
}

#[test]
fn identity_pushforward_is_trivial() {
    let mut rng = seeded(11);
    let p = random_bivector(&mut rng, 5);
    assert_eq!(p.pushforward(&MatrixQ::identity(5)).unwrap(), p);
    let c = random_subspace(&mut rng, 5, 2);
    let coords = coordinates_in(c.basis(), c.basis()).unwrap();
    assert_eq!(coords, MatrixQ::identity(c.dim()));
}

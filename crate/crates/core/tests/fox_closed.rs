use artinqp::alexander::{fox_closed_a, fox_closed_b, fox_derivative, BracketCell, BracketWrt, FoxSide};
use artinqp::graph::LabeledGraph;
use artinqp::presentation::{
    abelianize, artin_relator, bracket_word, cocyclic_presentation, eps_for, Abelianization, Gen, Presentation,
    RelatorRole,
};
use artinqp::Monomial;

fn free_ab(gens: &[Gen]) -> Abelianization {
    abelianize(&Presentation::new(gens.to_vec(), vec![]).unwrap()).unwrap()
}

#[test]
fn closed_a_matches_generic() {
    let (a, b, c) = (Gen::vertex("a"), Gen::vertex("b"), Gen::vertex("c"));
    let ab = free_ab(&[a.clone(), b.clone(), c.clone()]);
    let (ta, tb) = (ab.image(&a).unwrap().clone(), ab.image(&b).unwrap().clone());
    for ell in 1..=6 {
        let w = artin_relator(&a, &b, ell as i64).unwrap();
        for (g, side) in [(&a, FoxSide::A), (&b, FoxSide::B), (&c, FoxSide::Other)] {
            assert_eq!(fox_derivative(&w, g, &ab).unwrap(), fox_closed_a(ell, &ta, &tb, side), "ell={ell} g={g}");
        }
    }
}

fn cell_wrt(k: u32, g: &Gen) -> BracketWrt {
    match g {
        Gen::Bar(_) => BracketWrt::Ubar,
        Gen::Copy(x, j) if x == "w" && *j < k => BracketWrt::Copy(*j),
        _ => BracketWrt::Other,
    }
}

#[test]
fn closed_b_matches_generic_on_free_images() {
    let mut cells = 0;
    for k in 1..=5u32 {
        let copies: Vec<Gen> = (0..k).map(|j| Gen::copy("w", j)).collect();
        let ubar = Gen::bar("u");
        let other = Gen::vertex("x");
        let mut gens = copies.clone();
        gens.push(ubar.clone());
        gens.push(other.clone());
        let ab = free_ab(&gens);
        let img = |g: &Gen| ab.image(g).unwrap().clone();
        for ell in 1..=6u32 {
            for i in 0..k {
                let eps = eps_for(ell, k, i);
                let lhs = bracket_word(&copies, &ubar, i as usize, eps, ell).unwrap();
                let rhs = bracket_word(&copies, &ubar, i as usize + 1, eps, ell).unwrap();
                let word = lhs.concat(&rhs.inverse());
                let cell = BracketCell { ell, k, i, ubar: img(&ubar), w: copies.iter().map(img).collect() };
                for g in &gens {
                    let generic = fox_derivative(&word, g, &ab).unwrap();
                    assert_eq!(generic, fox_closed_b(&cell, cell_wrt(k, g)), "k={k} ell={ell} i={i} g={g}");
                    cells += 1;
                }
            }
        }
    }
    assert_eq!(cells, (1..=5).map(|k| 6 * k * (k + 2)).sum::<u32>());
}

#[test]
fn closed_b_matches_generic_after_identifications() {
    // label 2 puts w among the commuting neighbours, with no bracket rows
    for k in 2..=5u32 {
        for ell in 2..=6u32 {
            let g = LabeledGraph::segment("u", "w", 2 * ell as u64).unwrap();
            let p = cocyclic_presentation(&g, "u", k).unwrap();
            let ab = abelianize(&p).unwrap();
            let img = |g: &Gen| ab.image(g).unwrap().clone();
            let w: Vec<Monomial> = (0..k).map(|j| img(&Gen::copy("w", j))).collect();
            for r in p.relators() {
                let RelatorRole::B { i, .. } = r.role else { continue };
                let cell = BracketCell { ell, k, i, ubar: img(&Gen::bar("u")), w: w.clone() };
                for g in p.generators() {
                    let generic = fox_derivative(r.word(), g, &ab).unwrap();
                    assert_eq!(generic, fox_closed_b(&cell, cell_wrt(k, g)), "k={k} ell={ell} i={i} g={g}");
                }
            }
        }
    }
}

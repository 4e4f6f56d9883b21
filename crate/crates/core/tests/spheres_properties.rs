use heegaard_core::diagram::{lens, s2xs1_sum, s3};
use heegaard_core::spheres::{
    act_pi1, enumerate_intersection, h1_obstruction, reducibility_probe, search_commutator_certificate,
    verify_commutator_certificate, CertificateSearch, ProbeResult, SearchBounds,
};
use heegaard_core::{parse_diagram, stabilize, write_diagram, Generator, HeegaardDiagram, SplittingHom, Word};
use proptest::prelude::*;

fn hom(d: HeegaardDiagram) -> SplittingHom {
    SplittingHom::new(d).unwrap()
}

fn surface_word(genus: u32, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((1..=genus, any::<bool>(), any::<bool>()), 0..=max_len).prop_map(|letters| {
        Word::from_letters(letters.into_iter().map(|(i, is_b, inv)| {
            let g = if is_b { Generator::b(i) } else { Generator::a(i) };
            if inv {
                g.inverse()
            } else {
                g
            }
        }))
    })
}

fn catalog() -> Vec<HeegaardDiagram> {
    vec![s3(1).unwrap(), s3(2).unwrap(), lens(5, 2).unwrap(), lens(7, 3).unwrap(), s2xs1_sum(1).unwrap(), s2xs1_sum(2).unwrap()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn action_preserves_intersection_and_homology(g in surface_word(2, 6), pick in 0usize..1000) {
        for d in [s3(2).unwrap(), s2xs1_sum(2).unwrap()] {
            let s = hom(d);
            let words = enumerate_intersection(&s, 4).unwrap().words;
            let gamma = &words[pick % words.len()];
            let moved = act_pi1(&g, gamma, &s).unwrap();
            prop_assert!(s.in_intersection(&moved).unwrap());
            prop_assert_eq!(h1_obstruction(&moved, &s).unwrap(), h1_obstruction(gamma, &s).unwrap());
            let back = act_pi1(&g.inverse(), &moved, &s).unwrap();
            prop_assert!(s.surface().equal(&back, gamma).unwrap());
        }
    }

    #[test]
    fn found_certificates_verify(a in surface_word(2, 1), b in surface_word(2, 1)) {
        // commutators of kernel conjugates of a1 and b1 on s3(2)
        let s = hom(s3(2).unwrap());
        let a1 = Word::letter(Generator::a(1)).conjugate(&a);
        let b1 = Word::letter(Generator::b(1)).conjugate(&b);
        let gamma = a1.commutator(&b1);
        let bounds = SearchBounds { max_factors: 1, max_word_len: 3, max_checks: 1_000_000 };
        match search_commutator_certificate(&gamma, &s, bounds).unwrap() {
            CertificateSearch::Found(c) => {
                prop_assert!(c.factors.len() <= 1);
                prop_assert!(verify_commutator_certificate(&gamma, &c, &s).unwrap());
                prop_assert!(h1_obstruction(&gamma, &s).unwrap().iter().all(|&e| e == 0));
            }
            CertificateSearch::NotFound(reason) => prop_assert!(false, "{:?} for {}", reason, gamma),
        }
    }
}

#[test]
fn probe_results_are_sound() {
    for d in catalog() {
        let s = hom(d);
        for depth in 0..=2 {
            if let ProbeResult::Reducing(c) = reducibility_probe(&s, depth).unwrap() {
                assert!(s.in_intersection(&c).unwrap());
                assert!(!s.surface().is_trivial(&c).unwrap());
            }
        }
    }
}

#[test]
fn genus_one_enumeration_matches_rank() {
    for d in catalog().into_iter().filter(|d| d.genus() == 1) {
        let rank = heegaard_core::spheres::pi2_genus1(&d).unwrap();
        let s = hom(d);
        for len in 1..=6 {
            assert_eq!(rank == 1, !enumerate_intersection(&s, len).unwrap().words.is_empty());
        }
    }
}

#[test]
fn stabilized_files_round_trip() {
    for d in catalog() {
        let once = stabilize(&d).unwrap();
        let twice = stabilize(&once).unwrap();
        for x in [d, once, twice] {
            assert_eq!(parse_diagram(&write_diagram(&x)).unwrap(), x);
        }
    }
}

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use twisted_alexander::algebra::{Field, LaurentPoly};
use twisted_alexander::corpus;
use twisted_alexander::diagram::LinkDiagram;
use twisted_alexander::representation::triangular::triangular_representation;
use twisted_alexander::representation::Representation;
use twisted_alexander::wada::{alexander_matrix, classical_alexander, wada_invariant};

fn q(text: &str, nvars: usize) -> LaurentPoly {
    LaurentPoly::parse(text, Field::Rational, nvars).unwrap()
}

fn diagram(name: &str) -> LinkDiagram {
    corpus::entry(name).unwrap().diagram().unwrap()
}

#[test]
fn every_entry_parses_and_round_trips() {
    let entries = corpus::entries();
    assert_eq!(entries.len(), 13);
    for e in &entries {
        let d = e.diagram().unwrap_or_else(|err| panic!("{}: {err}", e.name));
        let again = LinkDiagram::parse_pd(&d.to_string()).unwrap();
        assert_eq!(again, d, "{}", e.name);
        for c in 0..d.num_components() {
            if d.num_components() < 2 {
                break;
            }
            let (reduced, _) = d.delete_component(c).unwrap();
            let text = reduced.to_string();
            let over_only = (0..reduced.num_components()).any(|k| reduced.crossings().iter().all(|x| x.under != k));
            match LinkDiagram::parse_pd(&text) {
                Ok(back) => assert_eq!(back, reduced, "{} without {}", e.name, c + 1),
                // a strand that never passes under has no recorded direction, and a
                // crossingless split piece has no tuples at all
                Err(err) => assert!(over_only, "{} without {}: {err}", e.name, c + 1),
            }
        }
    }
}

#[test]
fn goldens_match() {
    for e in corpus::entries() {
        let d = e.diagram().unwrap();
        let Some(expected) = e.golden(d.num_components()).unwrap() else {
            continue;
        };
        assert_eq!(classical_alexander(&d.wirtinger().unwrap()).unwrap(), expected, "{}", e.name);
    }
}

#[test]
fn linking_numbers_are_symmetric() {
    for e in corpus::entries() {
        let d = e.diagram().unwrap();
        let mu = d.num_components();
        let table: Vec<Vec<i64>> = (0..mu).map(|c| d.linking_numbers(c).unwrap()).collect();
        for i in 0..mu {
            for j in 0..mu {
                if i == j {
                    continue;
                }
                // row c omits c itself
                let lij = table[j][if i < j { i } else { i - 1 }];
                let lji = table[i][if j < i { j } else { j - 1 }];
                assert_eq!(lij, lji, "{}: components {} and {}", e.name, i + 1, j + 1);
            }
        }
    }
}

#[test]
fn hopf_link_by_hand() {
    let d = LinkDiagram::parse_pd("component 1 orientation +\ncomponent 2 orientation +\nX[1,3,2,4]\nX[3,1,4,2]\n")
        .unwrap();
    assert_eq!(d.num_components(), 2);
    assert_eq!(d.signs(), vec![1, 1]);
    assert_eq!(d.linking_numbers(1).unwrap(), vec![1]);

    let pres = d.wirtinger().unwrap();
    assert_eq!(pres.to_string(), "gen x1_1 component 1\ngen x2_1 component 2\nrel x2_1 x1_1 x2_1^-1 x1_1^-1\n");

    // r = b a b^-1 a^-1 with a = x1_1, b = x2_1
    let m = alexander_matrix(&pres, &Representation::trivial(Field::Rational, 1, &pres)).unwrap();
    assert_eq!(m.matrix.get(0, 0), &q("t2 - 1", 2));
    assert_eq!(m.matrix.get(0, 1), &q("1 - t1", 2));

    let rep = Representation::trivial(Field::Rational, 1, &pres);
    let w = wada_invariant(&pres, &rep, Some(1)).unwrap();
    assert_eq!(w.numerator, q("t2 - 1", 2));
    assert_eq!(w.denominator, q("t2 - 1", 2));
    assert_eq!(w.quotient, Some(q("1", 2)));
    let w = wada_invariant(&pres, &rep, Some(0)).unwrap();
    assert!(w.quotient.unwrap().equal_up_to_units(&q("1", 2), 1).unwrap());

    let (unknot, merge) = d.delete_component(1).unwrap();
    assert_eq!(unknot.num_components(), 1);
    assert_eq!(unknot.wirtinger().unwrap().num_generators(), 1);
    assert_eq!(merge.images, vec![Some(0), None]);
}

#[test]
fn malformed_pd_is_rejected() {
    assert!(LinkDiagram::parse_pd("").is_err());
    assert!(LinkDiagram::parse_pd("X[1,1,1,1]\n").is_err());
    assert!(LinkDiagram::parse_pd("X[1,2,3]\n").is_err());
}

#[test]
fn trefoil_presentation_and_twisted_shape() {
    let pres = diagram("trefoil").wirtinger().unwrap();
    assert_eq!(pres.num_generators(), 3);
    assert_eq!(pres.relators().len(), 2);
    assert!(pres.generators().iter().all(|g| g.component == 0));

    let w = wada_invariant(&pres, &Representation::trivial(Field::Rational, 1, &pres), None).unwrap();
    assert!(w.numerator.equal_up_to_units(&q("t1^2 - t1 + 1", 1), 1).unwrap());
    assert_eq!(w.denominator, q("t1 - 1", 1));
    assert_eq!(w.quotient, None);

    let w = wada_invariant(&pres, &Representation::trivial(Field::Rational, 2, &pres), None).unwrap();
    assert!(w.numerator.equal_up_to_units(&q("t1^2 - t1 + 1", 1).pow(2), 2).unwrap());
    assert_eq!(w.denominator, q("t1 - 1", 1).pow(2));
}

#[test]
fn deletions_behave() {
    let (d, merge) = diagram("trefoil_split_unknot").delete_component(1).unwrap();
    assert_eq!(d, diagram("trefoil"));
    assert_eq!(merge.images, vec![Some(0), Some(1), Some(2), None]);

    let w = diagram("whitehead");
    let deleted_sum: i64 = w
        .crossings()
        .iter()
        .filter(|c| c.involves(1) && c.involves(0))
        .map(|c| i64::from(c.sign))
        .sum();
    assert_eq!(deleted_sum, 0);
    let (unknot, _) = w.delete_component(1).unwrap();
    assert_eq!(classical_alexander(&unknot.wirtinger().unwrap()).unwrap(), q("1", 1));

    assert!(diagram("hopf").delete_component(2).is_err());
    assert!(diagram("trefoil").delete_component(0).is_err());
}

#[test]
fn merge_maps_are_surjective_and_pullbacks_validate() {
    let f = Field::prime(7).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for e in corpus::entries() {
        let d = e.diagram().unwrap();
        if d.num_components() < 2 {
            continue;
        }
        let pres = d.wirtinger().unwrap();
        for c in 0..d.num_components() {
            let (reduced, merge) = d.delete_component(c).unwrap();
            let rpres = reduced.wirtinger().unwrap();
            let mut hit = vec![false; rpres.num_generators()];
            for (j, image) in merge.images.iter().enumerate() {
                assert_eq!(image.is_none(), pres.generators()[j].component == c, "{} arc {}", e.name, j + 1);
                if let Some(k) = image {
                    hit[*k] = true;
                }
            }
            assert!(hit.iter().all(|&h| h), "{} without {}: merge map misses a generator", e.name, c + 1);

            let rep = triangular_representation(&rpres, f, &[f.from_i64(3), f.from_i64(5)], &mut rng).unwrap();
            let pulled = rep.pullback(&rpres, &merge, &pres).unwrap();
            pulled.validate(&pres).unwrap_or_else(|err| panic!("{} without {}: {err}", e.name, c + 1));
        }
    }
}

#[test]
fn types_are_thread_safe() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<LinkDiagram>();
    assert_send_sync::<LaurentPoly>();
    assert_send_sync::<Representation>();
    assert_send_sync::<twisted_alexander::presentation::Presentation>();
    assert_send_sync::<twisted_alexander::torres::TorresReport>();
}

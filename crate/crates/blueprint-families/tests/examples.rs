use std::collections::{BTreeMap, BTreeSet};

use blueprint_families::{
    detect_alternating, detect_exotic, detect_type_nr, detect_type_nr_in_pool, geodesic_between, nil_pattern, parse_nil, BlueprintFamily,
    FamilyDocument, FamilyError, NilBound, NilLetters, Variant,
};
use coxeter_core::{CoxeterMatrix, Gallery, Gen};

const R: Gen = 0;
const S: Gen = 1;
const T: Gen = 2;
const RST: NilLetters = NilLetters { r: R, s: S, t: T };

fn tits(rank: usize, levels: &[(usize, &[usize])]) -> BlueprintFamily {
    let levels = levels.iter().map(|&(k, js)| (k, js.iter().copied().collect())).collect();
    BlueprintFamily::new(CoxeterMatrix::universal(rank).unwrap(), Variant::Tits { s: 0, t: 1, levels }, None).unwrap()
}

fn nil(n: NilBound) -> BlueprintFamily {
    BlueprintFamily::new(CoxeterMatrix::universal(3).unwrap(), Variant::Nil { n, letters: RST }, None).unwrap()
}

fn quad(levels: &[(usize, Gen, &[usize])]) -> BlueprintFamily {
    let mut map: BTreeMap<usize, BTreeMap<Gen, BTreeSet<usize>>> = BTreeMap::new();
    for &(k, r, ls) in levels {
        map.entry(k).or_default().insert(r, ls.iter().copied().collect());
    }
    BlueprintFamily::new(CoxeterMatrix::quad444(), Variant::Quad { levels: map }, None).unwrap()
}

#[test]
fn tits_middle_root() {
    let fam = tits(2, &[(1, &[1])]);
    let g = Gallery::from_identity(fam.matrix(), vec![0, 1, 0]).unwrap();
    let roots = g.crossed_roots(fam.matrix());
    let m = fam.m_set_at(&g, &roots, 1, 3).unwrap();
    assert_eq!(m.positions, vec![2]);
    assert_eq!(fam.m_set(&g, &roots[0], &roots[2]).unwrap(), m);
    assert!(fam.m_set_at(&g, &roots, 1, 2).unwrap().is_empty());
    assert!(fam.m_set_at(&g, &roots, 2, 2).unwrap().is_empty());
    assert!(matches!(fam.m_set_at(&g, &roots, 3, 1), Err(FamilyError::BadPositions { .. })));
}

#[test]
fn alternating_detection_and_translation() {
    let m = CoxeterMatrix::universal(3).unwrap();
    let g = Gallery::from_identity(&m, vec![S, T, S]).unwrap();
    let roots = g.crossed_roots(&m);
    let hit = detect_alternating(&m, &roots[0], &roots[2], S, T).unwrap();
    assert_eq!(hit.k, 1);
    assert_eq!(hit.even_root(1), &roots[1]);
    let other = Gallery::from_identity(&m, vec![S, R, S]).unwrap();
    let other_roots = other.crossed_roots(&m);
    assert!(detect_alternating(&m, &other_roots[0], &other_roots[2], S, T).is_none());
    for w in m.ball(4) {
        let (a, b) = (m.translate(&w, &roots[0]), m.translate(&w, &roots[2]));
        let moved = detect_alternating(&m, &a, &b, S, T).expect("translation preserves the pattern");
        assert_eq!(moved.k, 1);
        assert_eq!(moved.even_root(1), &m.translate(&w, &roots[1]));
    }
}

#[test]
fn exotic_cases() {
    let m = CoxeterMatrix::universal(2).unwrap();
    let (s0, s1) = (0, 1);
    let run = |word: Vec<Gen>| {
        let g = Gallery::from_identity(&m, word).unwrap();
        let roots = g.crossed_roots(&m);
        detect_exotic(&m, &roots[0], roots.last().unwrap(), s0, s1)
    };
    assert_eq!(run(vec![0, 1, 0, 1]).unwrap().positions, [2, 3]);
    assert_eq!(run(vec![0, 1, 0, 1, 0]).unwrap().positions, [2, 3]);
    assert_eq!(run(vec![1, 0, 1, 0, 1]).unwrap().positions, [3, 4]);
    let six = run(vec![1, 0, 1, 0, 1, 0]).unwrap();
    assert_eq!((six.k, six.first, six.positions), (6, 1, [3, 4]));
    assert!(run(vec![1, 0, 1, 0]).is_none());
    assert!(run(vec![0, 1, 0, 1, 0, 1]).is_none());
    assert!(run(vec![0, 1, 0, 1, 0, 1, 0]).is_none());
}

#[test]
fn worked_nil_gallery() {
    let pattern = nil_pattern(2, 3, 3, 5, RST).unwrap();
    let rtst: Vec<Gen> = pattern.word[1..9].to_vec();
    assert_eq!(rtst, vec![R, T, S, R, T, S, T, R]);
    let five = nil(NilBound::Finite(5));
    let g = Gallery::from_identity(five.matrix(), pattern.word.clone()).unwrap();
    let roots = g.crossed_roots(five.matrix());
    assert_eq!(roots.len(), 61);
    let m = five.m_set_at(&g, &roots, 1, 61).unwrap();
    assert_eq!(m.positions, vec![50]);
    assert!(nil(NilBound::Finite(4)).m_set_at(&g, &roots, 1, 61).unwrap().is_empty());
    assert_eq!(nil(NilBound::Unbounded).m_set_at(&g, &roots, 1, 61).unwrap().positions, vec![50]);

    let geo = geodesic_between(five.matrix(), &roots[0], &roots[60]).unwrap();
    let parsed = parse_nil(geo.type_word(), RST).unwrap();
    assert_eq!((parsed.i1, parsed.j1, parsed.i2, parsed.j2), (2, 3, 3, 5));
}

#[test]
fn nil_detection_edge_cases() {
    let m = CoxeterMatrix::universal(3).unwrap();
    let short = Gallery::from_identity(&m, vec![S, T, S]).unwrap();
    let roots = short.crossed_roots(&m);
    let geo = geodesic_between(&m, &roots[0], &roots[2]).unwrap();
    assert!(parse_nil(geo.type_word(), RST).is_none());

    let p = nil_pattern(1, 2, 3, 4, RST).unwrap();
    assert_eq!(p.word.len(), 44);
    let g = Gallery::from_identity(&m, p.word.clone()).unwrap();
    let roots = g.crossed_roots(&m);
    let geo = geodesic_between(&m, &roots[0], &roots[43]).unwrap();
    let parsed = parse_nil(geo.type_word(), RST).unwrap();
    assert_eq!((parsed.i1, parsed.j1, parsed.i2, parsed.j2), (1, 2, 3, 4));
    assert!(nil(NilBound::Unbounded).m_set_at(&g, &roots, 1, 44).unwrap().is_empty());
}

#[test]
fn short_type_nr_gallery() {
    let m = CoxeterMatrix::quad444();
    let g = Gallery::from_identity(&m, vec![R, S, T, S, T, R]).unwrap();
    let roots = g.crossed_roots(&m);
    let (alpha, beta) = (&roots[0], &roots[5]);
    assert_eq!(alpha, &m.simple_root(R));
    let found = match detect_type_nr(&m, alpha, beta, 12) {
        Ok(found) => found.unwrap(),
        Err(e) => panic!("{e}"),
    };
    assert_eq!((found.n, found.r, found.u, found.v), (1, R, None, None));
    assert_eq!(found.gallery, g);
    // The pool search reports only witnesses with at least three blocks.
    assert!(detect_type_nr_in_pool(&m, alpha, beta, &roots).is_none());
}

#[test]
fn quad_omega_selection() {
    let fam = quad(&[(3, R, &[2])]);
    let m = fam.matrix();
    let word = blueprint_families::quad::type_nr_word(3, R, None, None, &[true, false, true]);
    assert_eq!(word.len(), 16);
    let g = Gallery::from_identity(m, word).unwrap();
    let roots = g.crossed_roots(m);
    let set = fam.m_set_at(&g, &roots, 1, 16).unwrap();
    assert_eq!(set.positions, vec![8, 9]);
    let hit = detect_type_nr_in_pool(m, &roots[0], &roots[15], &roots).unwrap();
    assert_eq!((hit.n, hit.r), (3, R));
    assert_eq!(hit.omega_positions(2), (8, 9));
    let bounded = detect_type_nr(m, &roots[0], &roots[15], 16 + 5 * 3 + 4).unwrap().unwrap();
    assert_eq!(bounded.omega_sets(), hit.omega_sets());

    let finite = Gallery::from_identity(m, vec![S, T, S, T]).unwrap();
    let froots = finite.crossed_roots(m);
    assert_eq!(fam.m_set_at(&finite, &froots, 1, 4).unwrap().positions, vec![2, 3]);
    assert!(fam.m_set_at(&finite, &froots, 1, 3).unwrap().is_empty());
}

#[test]
fn documents_round_trip_and_reject_noise() {
    let text = r#"{"variant":"quad","K":[3],"J":{"3":["r"]},"L":{"3":{"r":[2]}}}"#;
    let doc: FamilyDocument = serde_json::from_str(text).unwrap();
    let fam = doc.build().unwrap();
    assert_eq!(fam.variant(), quad(&[(3, R, &[2])]).variant());
    let again = fam.document().build().unwrap();
    assert_eq!(again.variant(), fam.variant());

    assert!(serde_json::from_str::<FamilyDocument>(r#"{"variant":"tits","K":[1],"bogus":1}"#).is_err());
    let wrong_field: FamilyDocument = serde_json::from_str(r#"{"variant":"tits","s":"s","t":"t","K":[1],"L":{}}"#).unwrap();
    assert!(matches!(wrong_field.build(), Err(FamilyError::BadParameters(_))));
    let mismatch: FamilyDocument = serde_json::from_str(r#"{"variant":"tits","s":"s","t":"t","K":[1],"matrix":[[1,2],[2,1]]}"#).unwrap();
    assert!(matches!(mismatch.build(), Err(FamilyError::MatrixMismatch(_))));
    let bad_l: FamilyDocument = serde_json::from_str(r#"{"variant":"quad","K":[3],"J":{"3":["r"]},"L":{"3":{"r":[1]}}}"#).unwrap();
    assert!(matches!(bad_l.build(), Err(FamilyError::BadParameters(_))));
    let nil_doc: FamilyDocument = serde_json::from_str(r#"{"variant":"nil","rank":3,"n":"unbounded","r":"r","s":"s","t":"t"}"#).unwrap();
    assert!(matches!(nil_doc.build().unwrap().variant(), Variant::Nil { n: NilBound::Unbounded, .. }));
    assert!(BlueprintFamily::new(CoxeterMatrix::quad444(), Variant::Exotic { s0: 0, s1: 1 }, None).is_err());
}

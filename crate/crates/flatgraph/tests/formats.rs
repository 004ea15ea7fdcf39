use flatgraph::formats::{
    detect, parse_cemb, parse_draw, parse_flatw, parse_rot, write_cemb, write_draw, write_flatw,
    write_rot, Kind,
};
use flatgraph::svg::{render_map, MapStyle};
use flatgraph_core::crossings::{planarize, planarize_drawing, CrossedEmbedding};
use flatgraph_core::fixtures;
use flatgraph_core::generate::{random_plane_map, small_map_corpus};
use flatgraph_core::geometry::Point;
use flatgraph_core::wbw::{lambda_power, witness_from_distances};
use flatgraph_core::AbstractGraph;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn rot_round_trips_on_fixtures() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut maps = vec![
        fixtures::single_vertex(),
        fixtures::tetrahedron(),
        fixtures::octahedron(),
        fixtures::icosahedron(),
        fixtures::grid_map(3, 4),
    ];
    maps.extend(small_map_corpus(&mut rng, 200, 12));
    for m in maps {
        let text = write_rot(&m);
        assert_eq!(detect(&text), Kind::Rot);
        assert_eq!(parse_rot(&text).unwrap(), m);
        assert_eq!(write_rot(&parse_rot(&text).unwrap()), text);
    }
}

#[test]
fn cemb_and_draw_round_trip_on_drawings() {
    for d in [
        fixtures::k5_one_crossing_drawing(),
        fixtures::convex_complete_drawing(5),
        fixtures::convex_complete_drawing(6),
        fixtures::convex_octahedron_drawing(),
    ] {
        let text = write_draw(&d);
        assert_eq!(detect(&text), Kind::Draw);
        assert_eq!(parse_draw(&text).unwrap(), d);
        let ce = planarize_drawing(&d).unwrap().embedding;
        let text = write_cemb(&ce);
        if !ce.crossings().is_empty() {
            assert_eq!(detect(&text), Kind::Cemb);
        }
        assert_eq!(parse_cemb(&text).unwrap(), ce);
    }
}

#[test]
fn flatw_round_trips_on_powers() {
    for host in [fixtures::grid_map(3, 3), fixtures::star_map(5), fixtures::octahedron()] {
        for lambda in 1..=3 {
            let g = lambda_power(&host, lambda).unwrap();
            let w = witness_from_distances(&g, host.clone(), (0..host.vertex_count()).collect(), lambda)
                .unwrap();
            let text = write_flatw(&g, &w);
            assert_eq!(detect(&text), Kind::Flatw);
            let back = parse_flatw(&text).unwrap();
            assert_eq!((back.graph, back.witness), (g.clone(), w));
        }
    }
}

fn small_map() -> impl Strategy<Value = flatgraph_core::PlaneMap> {
    (any::<u64>(), 1usize..9, 0usize..8, any::<bool>()).prop_map(|(seed, n, chords, parallel)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_plane_map(&mut rng, n, chords, parallel)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rot_parse_of_write_is_identity(m in small_map()) {
        prop_assert_eq!(parse_rot(&write_rot(&m)).unwrap(), m);
    }

    #[test]
    fn planar_cemb_round_trips(m in small_map()) {
        let ce = CrossedEmbedding::from_plane_map(m);
        prop_assert_eq!(parse_cemb(&write_cemb(&ce)).unwrap(), ce);
    }

    #[test]
    fn straight_drawings_round_trip(
        pts in proptest::collection::btree_set((-50i64..50, -50i64..50), 3..8),
        seed in any::<u64>(),
    ) {
        let pts: Vec<Point> = pts.into_iter().map(|(x, y)| Point::from_ints(x, y)).collect();
        let g = AbstractGraph::complete(pts.len());
        if let Ok(p) = planarize(&pts, g.edges(), seed) {
            let d = p.drawing;
            prop_assert_eq!(parse_draw(&write_draw(&d)).unwrap(), d.clone());
            let ce = p.planarized.embedding;
            prop_assert_eq!(parse_cemb(&write_cemb(&ce)).unwrap(), ce);
        }
    }

    #[test]
    fn svg_is_byte_identical_across_runs(m in small_map()) {
        let power = m.is_simple().then_some(2);
        let style = MapStyle { highlight: vec![0], power };
        let a = render_map(&m, &style).unwrap();
        prop_assert_eq!(a, render_map(&m, &style).unwrap());
    }
}

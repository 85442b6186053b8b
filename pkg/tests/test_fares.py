"""Money parsing, fare tables, synthetic curve generation, concavity."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fareswap import (
    FareCurveModel,
    FareTable,
    Money,
    RouteDef,
    SyntheticTripGeometry,
    TripKey,
    Zone,
    all_trips,
    build_network,
    generate_fare_table,
    model_is_concave,
    parse_fare_table,
    serialize_fare_table,
    tree_path,
)
from fareswap.errors import (
    AsymmetricFare,
    InvalidZoneInterval,
    MalformedCsv,
    MalformedMoney,
    MissingPair,
    UnknownStation,
    ZoneOnNonLineNetwork,
)

from conftest import line_network, numbered_line, random_tree


class TestMoney:
    @pytest.mark.parametrize(
        "text,cents",
        [("4.50", 450), ("1.8", 180), ("2", 200), ("0.05", 5), ("0", 0), ("12.00", 1200)],
    )
    def test_parse(self, text, cents):
        assert Money.parse(text).cents == cents

    @pytest.mark.parametrize("text", ["1.855", "-1", "abc", "1.2.3", "", "$4", "4,50"])
    def test_parse_rejects(self, text):
        with pytest.raises(MalformedMoney):
            Money.parse(text)

    def test_dollars(self):
        assert Money(5).dollars() == "0.05"
        assert Money(450).dollars() == "4.50"
        assert Money(1200).dollars() == "12.00"

    def test_negative_rejected(self):
        with pytest.raises(MalformedMoney):
            Money(-5)


class TestParseFareTable:
    def test_parses_and_covers_all_pairs(self, sf_mini):
        net, table = sf_mini
        assert len(table.fare) == 6
        assert table.cents(TripKey("millbrae", "embarcadero")) == 450
        assert table.cents(TripKey("berkeley", "glen-park")) == 420

    def test_blank_mirror_cell_falls_back(self):
        net = line_network(["a", "b"])
        table = parse_fare_table(",a,b\na,,1.25\nb,,\n", net)
        assert table.cents(TripKey("a", "b")) == 125

    def test_missing_pair(self):
        net = line_network(["a", "b", "c"])
        text = ",a,b,c\na,,1.00,\nb,1.00,,\nc,,,\n"
        with pytest.raises(MissingPair):
            parse_fare_table(text, net)

    def test_asymmetric_rejected(self):
        net = line_network(["a", "b"])
        with pytest.raises(AsymmetricFare):
            parse_fare_table(",a,b\na,,1.00\nb,2.00,\n", net)

    def test_malformed_cell(self):
        net = line_network(["a", "b"])
        with pytest.raises(MalformedMoney):
            parse_fare_table(",a,b\na,,1.005\nb,1.00,\n", net)

    def test_unknown_station_in_header(self):
        net = line_network(["a", "b"])
        with pytest.raises(UnknownStation):
            parse_fare_table(",a,zzz\na,,1.00\nzzz,1.00,\n", net)

    def test_header_must_start_empty(self):
        net = line_network(["a", "b"])
        with pytest.raises(MalformedCsv):
            parse_fare_table("a,b\n", net)

    def test_excursion_diagonal(self):
        net = line_network(["a", "b"])
        table = parse_fare_table(",a,b\na,4.75,1.00\nb,1.00,\n", net)
        assert table.excursion == {"a": Money(475)}

    def test_round_trip(self):
        net = numbered_line(6)
        table = generate_fare_table(FareCurveModel.power(Money(300), 0.5), net)
        assert parse_fare_table(serialize_fare_table(table), net) == table

    def test_round_trip_with_excursion(self, sf_mini):
        net, _ = sf_mini
        table = parse_fare_table(
            ",millbrae,glen-park,embarcadero,berkeley\n"
            "millbrae,9.00,3.00,4.50,5.10\n"
            "glen-park,3.00,,1.85,4.20\n"
            "embarcadero,4.50,1.85,,3.50\n"
            "berkeley,5.10,4.20,3.50,\n",
            net,
        )
        assert parse_fare_table(serialize_fare_table(table), net) == table


class TestGenerate:
    def test_flat(self):
        net = numbered_line(5)
        table = generate_fare_table(FareCurveModel.flat(Money(200)), net)
        assert {m.cents for m in table.fare.values()} == {200}
        assert len(table.fare) == 10

    def test_affine_distance(self):
        net = line_network(["a", "b", "c", "d"])
        table = generate_fare_table(FareCurveModel.affine(Money(0), Money(100)), net)
        assert table.cents(TripKey("a", "c")) == 200
        assert table.cents(TripKey("a", "d")) == 300

    def test_power_hand_values(self):
        # frozen by hand: 300 * sqrt(4) = 600, 300 * sqrt(9) = 900
        net = numbered_line(10)
        table = generate_fare_table(FareCurveModel.power(Money(300), 0.5), net)
        assert table.cents(TripKey("s01", "s05")) == 600
        assert table.cents(TripKey("s01", "s10")) == 900

    def test_power_works_on_branching_tree(self):
        import random

        net = random_tree(random.Random(7), 9)
        table = generate_fare_table(FareCurveModel.power(Money(300), 0.5), net)
        for trip in all_trips(net):
            hops = tree_path(net, trip).hops
            assert table.cents(trip) == FareCurveModel.power(Money(300), 0.5).fare_at(hops)

    def test_density_zone_hand_values(self):
        # line of 20, zone over positions 3..7, base 100, 25/hop, +150 to cross
        net = numbered_line(20)
        model = FareCurveModel.density_zone(Money(100), Money(25), [Zone(3, 7, Money(150))])
        table = generate_fare_table(model, net)
        assert table.cents(TripKey("s01", "s03")) == 150  # outside, never touches
        assert table.cents(TripKey("s01", "s04")) == 325  # crosses in at position 3
        assert table.cents(TripKey("s05", "s07")) == 150  # wholly inside, no crossing
        assert table.cents(TripKey("s05", "s10")) == 375  # leaves the zone: crossing
        assert table.cents(TripKey("s09", "s15")) == 250  # wholly right of the zone

    def test_density_zone_requires_line(self):
        import random

        model = FareCurveModel.density_zone(Money(100), Money(25), [Zone(1, 2, Money(150))])
        with pytest.raises(ZoneOnNonLineNetwork):
            generate_fare_table(model, random_tree(random.Random(1), 6))

    def test_zone_out_of_range(self):
        net = numbered_line(5)
        model = FareCurveModel.density_zone(Money(100), Money(25), [Zone(2, 9, Money(150))])
        with pytest.raises(InvalidZoneInterval):
            generate_fare_table(model, net)

    def test_zone_reversed_interval(self):
        with pytest.raises(InvalidZoneInterval):
            Zone(5, 2, Money(100))

    def test_symmetry_by_construction(self):
        net = numbered_line(8)
        model = FareCurveModel.density_zone(Money(100), Money(25), [Zone(2, 4, Money(150))])
        table = generate_fare_table(model, net)
        # TripKey is unordered, so one entry per pair is symmetry; spot-check lookup
        assert table.cents(TripKey("s06", "s02")) == table.cents(TripKey("s02", "s06"))


class TestConcavity:
    def test_power_sublinear_is_concave(self):
        assert model_is_concave(FareCurveModel.power(Money(300), 0.5), 9) == "concave"

    def test_power_superlinear_is_convex(self):
        assert model_is_concave(FareCurveModel.power(Money(300), 2.0), 9) == "convex"

    def test_affine_and_flat_are_linear(self):
        assert model_is_concave(FareCurveModel.affine(Money(200), Money(25)), 9) == "linear"
        assert model_is_concave(FareCurveModel.flat(Money(200)), 9) == "linear"

    def test_density_zone_is_mixed(self):
        model = FareCurveModel.density_zone(Money(100), Money(25), [Zone(3, 7, Money(150))])
        assert model_is_concave(model, 10) == "mixed"

    def test_requires_max_hops(self):
        with pytest.raises(ValueError):
            model_is_concave(FareCurveModel.flat(Money(100)), 1)


class TestSyntheticTripGeometry:
    def test_swapped_lengths(self):
        geom = SyntheticTripGeometry(x=4, y=9, o=2)
        assert geom.swapped == (11, 2)

    @pytest.mark.parametrize("x,y,o", [(0, 5, 1), (5, 4, 2), (3, 5, 4), (1, 1, 0)])
    def test_rejects_bad_geometry(self, x, y, o):
        with pytest.raises(ValueError):
            SyntheticTripGeometry(x=x, y=y, o=o)

    def test_majorization_for_concave_models(self):
        # for a concave curve the tighter-spread pair always pays at least
        # as much: f(x) + f(y) >= f(x+y-o) + f(o)
        cases = [(300, 0.3), (300, 0.5), (300, 0.8), (100000, 0.5)]
        confirmed = 0
        for a, p in cases:
            model = FareCurveModel.power(Money(a), p)
            if model_is_concave(model, 24) != "concave":
                continue
            confirmed += 1
            for y in range(1, 13):
                for x in range(1, y + 1):
                    for o in range(1, x + 1):
                        geom = SyntheticTripGeometry(x=x, y=y, o=o)
                        long, short = geom.swapped
                        assert model.fare_at(x) + model.fare_at(y) >= model.fare_at(
                            long
                        ) + model.fare_at(short), (a, p, geom)
        assert confirmed >= 1

    def test_power_with_zero_anchor(self):
        assert FareCurveModel.power(Money(300), 0.5).fare_at(0) == 0


# --- property tests ----------------------------------------------------------


@given(
    n=st.integers(min_value=2, max_value=8),
    seed=st.integers(min_value=0, max_value=5000),
)
@settings(max_examples=60, deadline=None)
def test_serialize_parse_round_trip(n, seed):
    import random

    rng = random.Random(seed)
    net = numbered_line(n)
    fare = {t: Money(rng.randint(100, 999)) for t in all_trips(net)}
    excursion = {net.stations[0]: Money(rng.randint(100, 999))} if seed % 2 else {}
    table = FareTable(stations=net.stations, fare=fare, excursion=excursion)
    assert parse_fare_table(serialize_fare_table(table), net) == table


@given(st.integers(min_value=0, max_value=99999))
@settings(max_examples=80)
def test_money_dollars_parse_round_trip(cents):
    assert Money.parse(Money(cents).dollars()) == Money(cents)

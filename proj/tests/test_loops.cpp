#include <doctest.h>

#include "loopon/loops.hpp"
#include "loopon/rational.hpp"

using namespace loopon;

namespace {

const LatticeKind z2 = LatticeKind::hypercubic(2);

std::vector<int> edge_ids(const Domain& g, const std::vector<Edge>& edges) {
  std::vector<int> out;
  for (const Edge& e : edges) {
    int id = g.edge_index(e.first, e.second);
    REQUIRE(id >= 0);
    out.push_back(id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> square_at(Coord x, Coord y) {
  return {make_edge({x, y}, {x + 1, y}),
          make_edge({x + 1, y}, {x + 1, y + 1}),
          make_edge({x, y + 1}, {x + 1, y + 1}),
          make_edge({x, y}, {x, y + 1})};
}

}  // namespace

TEST_CASE("is_valid_config") {
  Domain g = box_domain(z2, {0, 0}, {3, 3});
  CHECK(is_valid_config(g, {}));
  CHECK(is_valid_config(g, edge_ids(g, square_at(0, 0))));
  CHECK(!is_valid_config(g, {0}));
  CHECK_THROWS_AS(is_valid_config(g, {999}), UsageError);
}

TEST_CASE("loop and edge counts") {
  Domain g = box_domain(z2, {0, 0}, {4, 2});
  LoopConfig empty{&g, {}};
  CHECK(loop_count(empty) == 0);
  CHECK(edge_count(empty) == 0);

  LoopConfig one{&g, edge_ids(g, square_at(0, 0))};
  CHECK(loop_count(one) == 1);
  CHECK(edge_count(one) == 4);

  auto two_sq = square_at(0, 0);
  auto right = square_at(2, 0);
  two_sq.insert(two_sq.end(), right.begin(), right.end());
  LoopConfig two{&g, edge_ids(g, two_sq)};
  CHECK(loop_count(two) == 2);
  CHECK(edge_count(two) == 8);
}

TEST_CASE("hexagon loop has six edges") {
  auto hex = LatticeKind::hexagonal();
  Domain g = box_domain(hex, {0, 0}, {3, 2});
  std::vector<Edge> ring = {
      make_edge({0, 0}, {1, 0}), make_edge({1, 0}, {2, 0}),
      make_edge({2, 0}, {2, 1}), make_edge({2, 1}, {1, 1}),
      make_edge({1, 1}, {0, 1}), make_edge({0, 1}, {0, 0})};
  LoopConfig k{&g, edge_ids(g, ring)};
  CHECK(loop_count(k) == 1);
  CHECK(edge_count(k) == 6);
}

TEST_CASE("config weight") {
  Domain g = box_domain(z2, {0, 0}, {4, 2});
  ModelParams<double> p{0.5, 3.0};
  LoopConfig empty{&g, {}};
  CHECK(config_weight(empty, p) == 1.0);
  CHECK(config_weight(empty, ModelParams<double>{0.0, 0.0}) == 1.0);

  LoopConfig one{&g, edge_ids(g, square_at(0, 0))};
  CHECK(config_weight(one, p) == doctest::Approx(std::pow(0.5, 4) * 3.0));

  auto both = square_at(0, 0);
  auto right = square_at(2, 0);
  both.insert(both.end(), right.begin(), right.end());
  LoopConfig two{&g, edge_ids(g, both)};
  CHECK(config_weight(two, p) ==
        doctest::Approx(std::pow(0.5, 8) * 9.0));

  ModelParams<Rational> q{Rational(1, 2), Rational(3)};
  CHECK(config_weight(LoopConfig{&g, edge_ids(g, square_at(0, 0))}, q) ==
        Rational(3, 16));

  CHECK_THROWS_AS(config_weight(empty, ModelParams<double>{-1.0, 1.0}),
                  UsageError);
}

TEST_CASE("component_at") {
  Domain g = box_domain(z2, {0, 0}, {4, 2});
  LoopConfig empty{&g, {}};
  Polygon at = component_at(empty, {1, 1});
  CHECK(at.is_degenerate());
  CHECK(at.length() == 0);
  CHECK(at.base == Vertex{1, 1});

  LoopConfig one{&g, edge_ids(g, square_at(0, 0))};
  Polygon sq = component_at(one, {0, 0});
  CHECK(sq.length() == 4);
  CHECK(sq.contains_vertex({1, 1}));
  // A vertex off the square is degenerate.
  CHECK(component_at(one, {3, 0}).is_degenerate());
  // Same loop from every vertex on it.
  CHECK(component_at(one, {1, 1}) == sq);
  CHECK(component_at(one, {0, 1}) == sq);

  CHECK_THROWS_AS(component_at(one, {9, 9}), UsageError);
}

TEST_CASE("envelope") {
  Domain g33 = box_domain(z2, {0, 0}, {3, 3});
  Polygon sq = Polygon::from_edges(z2, square_at(0, 0));
  Domain env = envelope(g33, sq);
  CHECK(env.vertex_count() == 4);
  CHECK(env.edge_count() == 4);

  // Perimeter of the 3x3 box: an 8-cycle with no chords.
  std::vector<Edge> per = {
      make_edge({0, 0}, {1, 0}), make_edge({1, 0}, {2, 0}),
      make_edge({2, 0}, {2, 1}), make_edge({2, 1}, {2, 2}),
      make_edge({2, 2}, {1, 2}), make_edge({1, 2}, {0, 2}),
      make_edge({0, 2}, {0, 1}), make_edge({0, 1}, {0, 0})};
  Polygon ring = Polygon::from_edges(z2, per);
  Domain env8 = envelope(g33, ring);
  CHECK(env8.vertex_count() == 8);
  CHECK(env8.edge_count() == 8);

  Polygon degen = Polygon::degenerate({1, 1});
  Domain env0 = envelope(g33, degen);
  CHECK(env0.vertex_count() == 1);
  CHECK(env0.edge_count() == 0);

  CHECK_THROWS_AS(envelope(box_domain(z2, {5, 5}, {2, 2}), sq), UsageError);
}

TEST_CASE("polygon validation") {
  CHECK_THROWS_AS(Polygon::from_edges(z2, {make_edge({0, 0}, {1, 0})}),
                  UsageError);
  // Two disjoint squares are not a single cycle.
  auto e = square_at(0, 0);
  auto f = square_at(3, 0);
  e.insert(e.end(), f.begin(), f.end());
  CHECK_THROWS_AS(Polygon::from_edges(z2, e), UsageError);
}

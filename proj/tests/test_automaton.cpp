#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "shirshov/automaton.hpp"

using namespace shirshov;

namespace {
const Alphabet xy("xy");

Automaton forbid(const Alphabet& a, std::initializer_list<const char*> words) {
  std::vector<Word> f;
  for (const char* w : words) f.push_back(a.parse(w));
  return build_normal_word_automaton(a, f);
}

bool avoids(const Word& w, const std::vector<Word>& forbidden) {
  for (const auto& f : forbidden) {
    if (w.contains(f)) return false;
  }
  return true;
}

void check_same_language(const Automaton& a, const Automaton& b, std::size_t k) {
  for (std::size_t n = 0; n <= 8; ++n) {
    for (const auto& w : all_words(k, n)) CHECK(a.accepts(w) == b.accepts(w));
  }
}

std::vector<std::pair<std::size_t, std::size_t>> edge_list(const Automaton& a) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (State s = 0; s < a.state_count(); ++s) {
    for (std::size_t l = 0; l < a.alphabet_size(); ++l) {
      for (State t : a.successors(s, static_cast<Letter>(l))) edges.emplace_back(s, t);
    }
  }
  return edges;
}
}  // namespace

TEST_CASE("normal word automata") {
  const Automaton yy = forbid(xy, {"yy"});
  CHECK(yy.state_count() == 2);
  CHECK(yy.is_deterministic());
  CHECK(is_trimmed(yy));
  const Automaton yx = forbid(xy, {"yx"});
  const Alphabet unary("x");
  const Automaton x = forbid(unary, {"x"});
  CHECK(x.accepts(Word{}));
  CHECK_FALSE(x.accepts(unary.parse("x")));
  CHECK(x.state_count() == 1);
  CHECK_THROWS_AS(build_normal_word_automaton(xy, {Word{}}), std::invalid_argument);

  SUBCASE("agrees with brute-force filtering") {
    const std::vector<std::vector<const char*>> sets = {
        {"yy"}, {"yx"}, {"xy", "yx"}, {"xx", "yyy"}, {"xyx", "yy"}, {"x", "y"}};
    for (const auto& set : sets) {
      std::vector<Word> f;
      for (const char* w : set) f.push_back(xy.parse(w));
      const Automaton a = build_normal_word_automaton(xy, f);
      for (std::size_t n = 0; n <= 8; ++n) {
        for (const auto& w : all_words(2, n)) CHECK(a.accepts(w) == avoids(w, f));
      }
    }
  }

  SUBCASE("random forbidden sets over three letters") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Word> f;
      for (unsigned i = 0; i < 1 + rng() % 4; ++i) {
        Word w;
        for (unsigned j = 0; j < 1 + rng() % 3; ++j) w.push_back(static_cast<Letter>(rng() % 3));
        f.push_back(w);
      }
      const Automaton a = build_normal_word_automaton(Alphabet("abc"), f);
      CHECK(is_trimmed(a));
      CHECK(minimize(a).state_count() == a.state_count());
      for (std::size_t n = 0; n <= 6; ++n) {
        for (const auto& w : all_words(3, n)) CHECK(a.accepts(w) == avoids(w, f));
      }
    }
  }
}

TEST_CASE("determinize and trim") {
  const Automaton yy = forbid(xy, {"yy"});
  check_same_language(determinize(yy), yy, 2);

  // x*y ∪ y x* with two initial states.
  Automaton n(2, 4);
  n.set_initial(0);
  n.set_initial(2);
  n.add_transition(0, 0, 0);
  n.add_transition(0, 1, 1);
  n.add_transition(2, 1, 3);
  n.add_transition(3, 0, 3);
  n.set_accepting(1);
  n.set_accepting(3);
  CHECK_FALSE(n.is_deterministic());
  const Automaton d = determinize(n);
  CHECK(d.is_deterministic());
  check_same_language(d, n, 2);
  const Automaton m = minimize(d);
  check_same_language(m, n, 2);
  CHECK(is_trimmed(m));

  Automaton empty(2, 2);
  empty.set_initial(0);
  empty.add_transition(0, 0, 1);
  const Automaton de = determinize(empty);
  CHECK(de.is_deterministic());
  for (std::size_t len = 0; len <= 4; ++len) {
    for (const auto& w : all_words(2, len)) CHECK_FALSE(de.accepts(w));
  }
  const Automaton te = trim(de);
  CHECK(te.state_count() == 1);
  CHECK_FALSE(te.is_accepting(0));

  SUBCASE("random nondeterministic automata") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
      Automaton r(2, 4);
      for (State s = 0; s < 4; ++s) {
        if (rng() % 3 == 0) r.set_initial(s);
        if (rng() % 2 == 0) r.set_accepting(s);
        for (Letter l = 0; l < 2; ++l) {
          for (State t = 0; t < 4; ++t) {
            if (rng() % 4 == 0) r.add_transition(s, l, t);
          }
        }
      }
      const Automaton dr = determinize(r);
      CHECK(dr.is_deterministic());
      check_same_language(dr, r, 2);
      check_same_language(minimize(dr), r, 2);
      check_same_language(trim(dr), r, 2);
    }
  }
}

TEST_CASE("growth") {
  const Automaton yy = forbid(xy, {"yy"});
  const auto v = growth(yy, 6);
  CHECK(v == std::vector<Count>{1, 3, 6, 11, 19, 32, 53});
  const auto p = growth_per_length(yy, 6);
  CHECK(p == std::vector<Count>{1, 2, 3, 5, 8, 13, 21});

  const auto yx = growth_per_length(forbid(xy, {"yx"}), 20);
  for (std::size_t n = 0; n <= 20; ++n) CHECK(yx[n] == Count(n + 1));

  const Automaton full = forbid(xy, {"xyxyxyxyxyxyxyxyxyxyxy"});
  const auto f = growth_per_length(full, 10);
  for (std::size_t n = 0; n <= 10; ++n) CHECK(f[n] == Count(1) << n);

  CHECK(growth_per_length(forbid(xy, {"yy"}), 200)[200] > Count(1) << 100);

  Automaton nd(1, 2);
  nd.set_initial(0);
  nd.set_initial(1);
  CHECK_THROWS_AS(growth(nd, 3), std::invalid_argument);
}

TEST_CASE("classify_growth") {
  using K = GrowthClass::Kind;
  CHECK(classify_growth(forbid(xy, {"yy"})).kind == K::Exponential);
  CHECK(classify_growth(forbid(xy, {"yx"})) == GrowthClass{K::Polynomial, 2});
  const Alphabet unary("x");
  CHECK(classify_growth(forbid(unary, {"xxxxxxxx"})) == GrowthClass{K::Finite, 0});
  Automaton loop(1, 1);
  loop.set_initial(0);
  loop.set_accepting(0);
  loop.add_transition(0, 0, 0);
  CHECK(classify_growth(loop) == GrowthClass{K::Polynomial, 1});
  const Alphabet abc("abc");
  CHECK(classify_growth(forbid(abc, {"ba", "ca", "cb"})) == GrowthClass{K::Polynomial, 3});
  CHECK(classify_growth(forbid(xy, {"xx", "yy"})) == GrowthClass{K::Polynomial, 1});
  CHECK(to_string(GrowthClass{K::Polynomial, 2}) == "polynomial(2)");

  Automaton untrimmed(1, 2);
  untrimmed.set_initial(0);
  untrimmed.set_accepting(0);
  untrimmed.add_transition(0, 0, 1);
  CHECK_THROWS_AS(classify_growth(untrimmed), std::invalid_argument);

  SUBCASE("classification matches observed growth") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Word> f;
      for (unsigned i = 0; i < 1 + rng() % 4; ++i) {
        Word w;
        for (unsigned j = 0; j < 1 + rng() % 4; ++j) w.push_back(static_cast<Letter>(rng() % 2));
        f.push_back(w);
      }
      const Automaton a = build_normal_word_automaton(xy, f);
      const GrowthClass g = classify_growth(a);
      const auto v = growth(a, 1000);
      if (g.kind == K::Exponential) {
        // Doubling-time bound: some λ > 1 with V(n) >= λ^n / C over n <= 30.
        const double lambda = std::pow(v[30].convert_to<double>() / v[15].convert_to<double>(),
                                       1.0 / 15);
        CHECK(lambda > 1.05);
        CHECK(has_doubly_cyclic_state(a));
      } else if (g.kind == K::Finite) {
        CHECK(v[1000] == v[999]);
      } else {
        CHECK_FALSE(has_doubly_cyclic_state(a));
        // n^d / C <= V(n) <= C·n^d at n = 100 and n = 1000.
        const double d = static_cast<double>(g.gk);
        for (std::size_t n : {100, 1000}) {
          const double ratio = v[n].convert_to<double>() / std::pow(static_cast<double>(n), d);
          CHECK(ratio > 1e-3);
          CHECK(ratio < 1e3);
        }
      }
    }
  }
}

TEST_CASE("gk_estimate") {
  CHECK(gk_estimate(forbid(xy, {"yx"}), 1000) == doctest::Approx(2.0).epsilon(0.075));
  Automaton loop(1, 1);
  loop.set_initial(0);
  loop.set_accepting(0);
  loop.add_transition(0, 0, 0);
  CHECK(std::abs(gk_estimate(loop, 1000) - 1.0) < 0.15);
  CHECK(gk_estimate(forbid(Alphabet("x"), {"xxx"}), 100000) < 0.1);
  CHECK_THROWS_AS(gk_estimate(loop, 1), std::invalid_argument);
}

TEST_CASE("doubly cyclic detection matches cycle enumeration") {
  SUBCASE("unary, up to 5 states") {
    for (std::size_t n = 1; n <= 5; ++n) {
      std::size_t tables = 1;
      for (std::size_t i = 0; i < n; ++i) tables *= n + 1;
      for (std::size_t code = 0; code < tables; ++code) {
        Automaton a(1, n);
        a.set_initial(0);
        std::size_t c = code;
        for (State s = 0; s < n; ++s, c /= n + 1) {
          if (c % (n + 1) != 0) a.add_transition(s, 0, static_cast<State>(c % (n + 1) - 1));
        }
        CHECK(has_doubly_cyclic_state(a) == oracle::doubly_cyclic(n, edge_list(a)));
      }
    }
  }
  SUBCASE("binary, up to 4 states") {
    for (std::size_t n = 1; n <= 4; ++n) {
      std::size_t tables = 1;
      for (std::size_t i = 0; i < 2 * n; ++i) tables *= n + 1;
      for (std::size_t code = 0; code < tables; ++code) {
        Automaton a(2, n);
        a.set_initial(0);
        std::size_t c = code;
        for (State s = 0; s < n; ++s) {
          for (Letter l = 0; l < 2; ++l, c /= n + 1) {
            if (c % (n + 1) != 0) a.add_transition(s, l, static_cast<State>(c % (n + 1) - 1));
          }
        }
        const bool got = has_doubly_cyclic_state(a);
        if (got != oracle::doubly_cyclic(n, edge_list(a))) FAIL("mismatch at table " << code);
      }
    }
  }
  SUBCASE("random binary with 5 states") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 20000; ++trial) {
      Automaton a(2, 5);
      a.set_initial(0);
      for (State s = 0; s < 5; ++s) {
        for (Letter l = 0; l < 2; ++l) {
          const unsigned t = rng() % 6;
          if (t != 0) a.add_transition(s, l, t - 1);
        }
      }
      const bool got = has_doubly_cyclic_state(a);
      if (got != oracle::doubly_cyclic(5, edge_list(a))) FAIL("mismatch in trial " << trial);
    }
  }
}

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "monideal/core/monomial_ideal.hpp"
#include "monideal/polyalg/ideal_ops.hpp"

using namespace monideal;
using namespace monideal::poly;

namespace monideal::poly {
void PrintTo(const Polynomial& p, std::ostream* os) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < p.nvars(); ++i) names.push_back("v" + std::to_string(i));
  *os << to_string(p, names);
}
}  // namespace monideal::poly

namespace {

const std::vector<std::string> kXY{"x", "y"};
const std::vector<std::string> kXYZ{"x", "y", "z"};

Polynomial P(const std::string& s, const std::vector<std::string>& names = kXY, std::optional<TermOrder> ord = {}) {
  return parse_polynomial(s, names, ord.value_or(TermOrder::degrevlex(names.size())));
}

std::vector<Polynomial> Ps(std::initializer_list<const char*> v, const std::vector<std::string>& names = kXY,
                           std::optional<TermOrder> ord = {}) {
  std::vector<Polynomial> out;
  for (const auto* s : v) out.push_back(P(s, names, ord));
  return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  return f.times_term(l / f.leading_monomial(), Rational(1) / f.leading_coefficient()) -
         g.times_term(l / g.leading_monomial(), Rational(1) / g.leading_coefficient());
}

Polynomial random_poly(std::mt19937_64& rng, const TermOrder& ord, int terms, int maxdeg) {
  std::uniform_int_distribution<int> e(0, maxdeg), c(-3, 3);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) {
    std::vector<std::int64_t> ex(ord.nvars);
    for (auto& v : ex) v = e(rng);
    ts.push_back(Term{Monomial::from(ex), Rational(c(rng))});
  }
  return Polynomial(ord, ts);
}

void expect_groebner_invariants(const std::vector<Polynomial>& input, const GroebnerBasis& gb) {
  for (std::size_t i = 0; i < gb.basis.size(); ++i) {
    EXPECT_EQ(gb.basis[i].leading_coefficient(), 1);
    for (std::size_t j = 0; j < gb.basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : gb.basis[i].terms()) EXPECT_FALSE(gb.basis[j].leading_monomial().divides(t.m));
      if (j > i) {
        EXPECT_TRUE(reduce(s_polynomial(gb.basis[i], gb.basis[j]), gb).is_zero());
      }
    }
  }
  for (const auto& f : input) EXPECT_TRUE(reduce(f, gb).is_zero());
}

// Minimal hitting set of supports by branching: every generator must lose one
// of its variables. The quotient dimension is n minus that size.
int min_hitting(const std::vector<std::vector<int>>& supports, std::vector<char>& removed, int budget) {
  for (const auto& s : supports) {
    bool hit = std::any_of(s.begin(), s.end(), [&](int v) { return removed[static_cast<std::size_t>(v)]; });
    if (hit) continue;
    if (budget == 0) return -1;
    int best = -1;
    for (int v : s) {
      removed[static_cast<std::size_t>(v)] = 1;
      int r = min_hitting(supports, removed, budget - 1);
      removed[static_cast<std::size_t>(v)] = 0;
      if (r >= 0 && (best < 0 || r + 1 < best)) best = r + 1;
    }
    return best;
  }
  return 0;
}

}  // namespace

TEST(TermOrder, KnownComparisons) {
  auto lex = TermOrder::lex(3), drl = TermOrder::degrevlex(3), blk = TermOrder::elimination(3, 1);
  auto m = [](std::int64_t a, std::int64_t b, std::int64_t c) { return Monomial::from({a, b, c}); };
  EXPECT_TRUE(lex.greater(m(1, 0, 0), m(0, 5, 5)));
  EXPECT_TRUE(drl.greater(m(0, 5, 5), m(1, 0, 0)));
  EXPECT_TRUE(drl.greater(m(1, 0, 1), m(0, 2, 0)) == false);  // xz < y^2 in degrevlex
  EXPECT_TRUE(blk.greater(m(1, 0, 0), m(0, 9, 9)));
  EXPECT_TRUE(blk.greater(m(0, 2, 0), m(0, 1, 1)));
}

TEST(TermOrder, TotalMultiplicativeWellOrder) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> e(0, 4);
  for (auto ord : {TermOrder::lex(4), TermOrder::degrevlex(4), TermOrder::elimination(4, 2)}) {
    for (int t = 0; t < 500; ++t) {
      auto a = Monomial::from({e(rng), e(rng), e(rng), e(rng)});
      auto b = Monomial::from({e(rng), e(rng), e(rng), e(rng)});
      auto c = Monomial::from({e(rng), e(rng), e(rng), e(rng)});
      int ab = ord.compare(a, b);
      EXPECT_EQ(ab, -ord.compare(b, a));
      EXPECT_EQ(ab == 0, a == b);
      if (ab != 0) {
        EXPECT_EQ(ord.compare(a * c, b * c), ab);
      }
      EXPECT_GE(ord.compare(a, Monomial{}), 0);
    }
  }
}

TEST(Polynomial, ParsePrintRoundTrip) {
  auto p = P("x^2*y - 3/2 y + 1");
  EXPECT_EQ(to_string(p, kXY), "x^2*y - 3/2*y + 1");
  EXPECT_EQ(P(to_string(p, kXY)), p);
  EXPECT_TRUE(P("x - x").is_zero());
  EXPECT_EQ(to_string(P("0"), kXY), "0");
  EXPECT_THROW(P("x^-1"), ParseError);
  EXPECT_THROW(P("x + w"), ParseError);
  EXPECT_THROW(P("x +"), ParseError);
}

TEST(Polynomial, ArithmeticIdentities) {
  std::mt19937_64 rng(2);
  auto ord = TermOrder::degrevlex(3);
  for (int t = 0; t < 100; ++t) {
    auto a = random_poly(rng, ord, 4, 3), b = random_poly(rng, ord, 4, 3), c = random_poly(rng, ord, 3, 2);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_TRUE((a - a).is_zero());
    if (!b.is_zero()) {
      EXPECT_EQ(divide_exact(a * b, b), a);
    }
  }
  EXPECT_THROW(divide_exact(P("x + 1"), P("y")), InvalidArgument);
}

TEST(Reduce, Examples) {
  EXPECT_TRUE(reduce(P("x^2"), Ps({"x"})).is_zero());
  auto lex = TermOrder::lex(2);
  EXPECT_EQ(reduce(P("x^2 + y", kXY, lex), Ps({"x - y"}, kXY, lex)), P("y^2 + y", kXY, lex));
  EXPECT_THROW(reduce(P("x"), Ps({"x"}, kXYZ)), DimensionMismatch);
}

TEST(Reduce, DifferenceLiesInIdeal) {
  std::mt19937_64 rng(3);
  auto ord = TermOrder::degrevlex(3);
  for (int t = 0; t < 40; ++t) {
    std::vector<Polynomial> g{random_poly(rng, ord, 3, 2), random_poly(rng, ord, 3, 2)};
    if (g[0].is_zero() || g[1].is_zero()) continue;
    auto p = random_poly(rng, ord, 5, 3);
    auto r = reduce(p, g);
    for (const auto& t2 : r.terms())
      for (const auto& q : g) EXPECT_FALSE(q.leading_monomial().divides(t2.m));
    auto gb = buchberger(g);
    EXPECT_TRUE(ideal_member(p - r, gb));
  }
}

TEST(Buchberger, Examples) {
  auto gb = buchberger(Ps({"x + y", "x - y"}));
  EXPECT_EQ(gb.basis, Ps({"y", "x"}));
  auto mono = buchberger(Ps({"x^3", "x^2*y", "x*y^2", "x^2*y^2", "y^4"}));
  EXPECT_EQ(mono.basis.size(), 4u);
  for (const auto& g : mono.basis) EXPECT_EQ(g.size(), 1u);
  EXPECT_TRUE(buchberger(Ps({"x*y - 1", "x"})).is_unit());
  EXPECT_TRUE(buchberger(Ps({"0"})).is_zero());
}

TEST(Buchberger, InvariantsAndPermutationStability) {
  std::mt19937_64 rng(4);
  for (auto ord : {TermOrder::degrevlex(3), TermOrder::lex(3), TermOrder::elimination(3, 1)}) {
    for (int t = 0; t < 25; ++t) {
      // Small supports keep lex bases (which can be huge for dense input) cheap.
      std::vector<Polynomial> g;
      for (int k = 0; k < 3; ++k) g.push_back(random_poly(rng, ord, 3, 1));
      auto gb = buchberger(g);
      expect_groebner_invariants(g, gb);
      auto h = g;
      std::reverse(h.begin(), h.end());
      h.push_back(g[0] * g[1]);
      EXPECT_EQ(buchberger(h), gb);
      // every basis element lies in the ideal of the permuted input
      auto other = buchberger(h);
      for (const auto& b : gb.basis) EXPECT_TRUE(ideal_member(b, other));
    }
  }
}

TEST(Buchberger, LinearIdealsMatchRowReduction) {
  // For degree-one generators the reduced basis is the reduced row echelon
  // form with columns ordered by the term order (variables, then constant).
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-4, 4);
  auto ord = TermOrder::lex(4);
  for (int t = 0; t < 50; ++t) {
    std::vector<std::vector<Rational>> rows(3, std::vector<Rational>(5));
    std::vector<Polynomial> gens;
    for (auto& r : rows) {
      std::vector<Term> ts;
      for (std::size_t v = 0; v < 5; ++v) {
        r[v] = c(rng);
        ts.push_back(Term{v < 4 ? Monomial::var(v) : Monomial{}, r[v]});
      }
      gens.emplace_back(ord, ts);
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < 5 && rank < rows.size(); ++col) {
      std::size_t p = rank;
      while (p < rows.size() && rows[p][col] == 0) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[p], rows[rank]);
      Rational piv = rows[rank][col];
      for (auto& v : rows[rank]) v /= piv;
      for (std::size_t o = 0; o < rows.size(); ++o)
        if (o != rank && rows[o][col] != 0) {
          Rational f = rows[o][col];
          for (std::size_t k = 0; k < 5; ++k) rows[o][k] -= f * rows[rank][k];
        }
      ++rank;
    }
    std::vector<Polynomial> expected;
    for (std::size_t r = 0; r < rank; ++r) {
      std::vector<Term> ts;
      for (std::size_t v = 0; v < 5; ++v) ts.push_back(Term{v < 4 ? Monomial::var(v) : Monomial{}, rows[r][v]});
      expected.emplace_back(ord, ts);
    }
    bool unit = std::any_of(expected.begin(), expected.end(), [](const Polynomial& p) { return p.leading_monomial().is_one(); });
    auto gb = buchberger(gens);
    if (unit) {
      EXPECT_TRUE(gb.is_unit());
      continue;
    }
    std::sort(expected.begin(), expected.end(),
              [&](const Polynomial& a, const Polynomial& b) { return ord.compare(a.leading_monomial(), b.leading_monomial()) < 0; });
    EXPECT_EQ(gb.basis, expected);
  }
}

TEST(Buchberger, ResourceCeilings) {
  GroebnerLimits tiny{2, 400};
  EXPECT_THROW(buchberger(Ps({"x^2 - y", "x*y - 1", "y^2 - x"}), tiny), ResourceExceeded);
  GroebnerLimits shallow{5000, 2};
  EXPECT_THROW(buchberger(Ps({"x^3 - y"}), shallow), ResourceExceeded);
}

TEST(Member, Examples) {
  EXPECT_TRUE(ideal_member(P("x"), buchberger(Ps({"x + y", "y"}))));
  EXPECT_FALSE(ideal_member(P("x"), buchberger(Ps({"x^2", "y"}))));
}

TEST(Colon, Examples) {
  auto c = ideal_colon(Ps({"x^2", "x*y"}), P("x"));
  EXPECT_EQ(c.basis, Ps({"y", "x"}));
  auto linear = ideal_colon(Ps({"x^4", "x^3*y", "x*y^5", "y^6"}), P("x + y"));
  for (const char* g : {"x^3", "x^2*y^3 - x*y^4", "y^5"}) EXPECT_TRUE(ideal_member(P(g), linear)) << g;
  EXPECT_THROW(ideal_colon(Ps({"x"}), P("0")), InvalidArgument);
}

TEST(Colon, MonomialCaseMatchesCombinatorialColon) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<std::int64_t> e(0, 5);
  for (int t = 0; t < 40; ++t) {
    std::vector<ExponentVector> raw;
    for (int k = 0; k < 3; ++k) raw.push_back(ExponentVector{e(rng), e(rng)});
    MonomialIdeal j(2, raw);
    if (j.is_unit()) continue;
    ExponentVector m{e(rng), e(rng)};
    std::vector<Polynomial> gens;
    for (const auto& g : j.generators()) gens.push_back(Polynomial::term(TermOrder::degrevlex(2), Monomial::from({g[0], g[1]})));
    auto gb = ideal_colon(gens, Polynomial::term(TermOrder::degrevlex(2), Monomial::from({m[0], m[1]})));
    auto expected = colon_monomial(j, m);
    std::vector<ExponentVector> got;
    for (const auto& g : gb.basis) {
      ASSERT_EQ(g.size(), 1u);
      got.push_back(ExponentVector{g.leading_monomial().e[0], g.leading_monomial().e[1]});
    }
    EXPECT_EQ(MonomialIdeal(2, got), expected);
  }
}

TEST(Colon, MultipliesBackIntoIdeal) {
  std::mt19937_64 rng(7);
  auto ord = TermOrder::degrevlex(2);
  for (int t = 0; t < 25; ++t) {
    std::vector<Polynomial> j{random_poly(rng, ord, 3, 3), random_poly(rng, ord, 2, 3)};
    auto f = random_poly(rng, ord, 2, 2);
    if (j[0].is_zero() || j[1].is_zero() || f.is_zero()) continue;
    auto c = ideal_colon(j, f);
    auto jb = buchberger(j);
    for (const auto& g : c.basis) EXPECT_TRUE(ideal_member(f * g, jb));
    for (const auto& g : jb.basis) EXPECT_TRUE(ideal_member(g, c));  // J in J:f
  }
}

TEST(Colon, ByIdealIntersectsColons) {
  auto q = ideal_colon_ideal(Ps({"x^3", "x*y", "y^3"}), Ps({"x", "y"}));
  EXPECT_EQ(q.basis, Ps({"y^2", "x*y", "x^2"}));
}

TEST(Intersect, MonomialIdealsGiveLcms) {
  auto gb = intersect(Ps({"x^2", "y"}), Ps({"x", "y^3"}));
  EXPECT_EQ(gb.basis, Ps({"x*y", "x^2", "y^3"}));
  auto gb2 = intersect(Ps({"x^2*y"}), Ps({"x*y^3"}));
  EXPECT_EQ(gb2.basis, Ps({"x^2*y^3"}));
}

TEST(Eliminate, Examples) {
  const std::vector<std::string> ring{"t", "x"};
  EXPECT_TRUE(eliminate(Ps({"t*x - 1"}, ring), 1).is_zero());
  const std::vector<std::string> rees{"t", "x", "y", "T1", "T2"};
  auto e = eliminate(Ps({"T1 - x*t", "T2 - y*t"}, rees), 1);
  ASSERT_EQ(e.basis.size(), 1u);
  auto expected = parse_polynomial("y*T1 - x*T2", {"x", "y", "T1", "T2"}, TermOrder::degrevlex(4));
  EXPECT_EQ(e.basis[0], expected.monic());
}

TEST(Eliminate, ResultIsInIdealAndFreeOfEliminatedVariables) {
  std::mt19937_64 rng(8);
  auto ord = TermOrder::degrevlex(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<Polynomial> g{random_poly(rng, ord, 3, 2), random_poly(rng, ord, 3, 2)};
    if (g[0].is_zero() || g[1].is_zero()) continue;
    auto e = eliminate(g, 1);
    auto gb = buchberger(g);
    for (const auto& p : e.basis) EXPECT_TRUE(ideal_member(embed(p, ord, 1), gb));
  }
}

TEST(Dimension, Examples) {
  EXPECT_EQ(dim_quotient(Ps({"x"})), 1);
  EXPECT_EQ(dim_quotient(Ps({"x*y"})), 1);
  EXPECT_EQ(dim_quotient(Ps({"x", "y"})), 0);
  EXPECT_EQ(dim_quotient(Ps({"x - 1", "x"})), -1);
  EXPECT_EQ(dim_quotient(Ps({"x^2 + y^2 + z^2 - 1"}, kXYZ)), 2);
}

TEST(Dimension, MonomialIdealsMatchHittingSetSearch) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> nv(2, 8), bit(0, 3);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = static_cast<std::size_t>(nv(rng));
    auto ord = TermOrder::degrevlex(n);
    std::vector<Polynomial> gens;
    std::vector<std::vector<int>> supports;
    for (int g = 0; g < 4; ++g) {
      std::vector<std::int64_t> ex(n);
      std::vector<int> supp;
      for (std::size_t v = 0; v < n; ++v) {
        ex[v] = bit(rng) == 0 ? 1 + bit(rng) : 0;
        if (ex[v]) supp.push_back(static_cast<int>(v));
      }
      if (supp.empty()) continue;
      gens.push_back(Polynomial::term(ord, Monomial::from(ex)));
      supports.push_back(supp);
    }
    if (gens.empty()) continue;
    std::vector<char> removed(n, 0);
    int cover = -1;
    for (int b = 0; cover < 0; ++b) cover = min_hitting(supports, removed, b);
    EXPECT_EQ(dim_quotient(gens), static_cast<std::int64_t>(n) - cover);
  }
}

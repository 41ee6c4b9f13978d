#include <gtest/gtest.h>

#include <map>

#include "data/reference_tables.hpp"
#include "nbdom/counting.hpp"
#include "nbdom/gf_engine.hpp"

using namespace nbdom;
using namespace nbdom::gf;
using poly::BiPoly;
using poly::RationalGF;

namespace {

RationalGF printed_gf(int cols) {
  for (const auto& p : testdata::kPrintedGfs) {
    if (p.cols == cols) return RationalGF(poly::parse_bipoly(std::string(p.num)), poly::parse_bipoly(std::string(p.den)));
  }
  std::vector<poly::Term> num, den;
  for (const auto& e : testdata::kGfCoefficients) {
    if (e.cols != cols) continue;
    poly::Term t{static_cast<std::uint32_t>(e.x_exp), static_cast<std::uint32_t>(e.y_exp), Integer(e.value)};
    (e.kind == 'a' ? num : den).push_back(t);
  }
  return RationalGF(BiPoly::from_terms(num), BiPoly::from_terms(den));
}

const RationalGF& eliminated(int cols) {
  static std::map<int, RationalGF> cache;
  auto it = cache.find(cols);
  if (it == cache.end()) it = cache.emplace(cols, gf_by_elimination(cols)).first;
  return it->second;
}

}  // namespace

TEST(Transfer, OneColumnEdges) {
  const TransferMatrix t = build_transfer(1);
  const auto& space = t.space();
  const auto z = space.index_of(words::RowWord::parse("0"));
  const auto u = space.index_of(words::RowWord::parse("u"));
  const auto d = space.index_of(words::RowWord::parse("d"));
  EXPECT_EQ(t.entries().size(), 4u);
  EXPECT_EQ(t.entry(z, z), BiPoly::x());
  EXPECT_EQ(t.entry(z, u), poly::parse_bipoly("x*y"));
  EXPECT_EQ(t.entry(u, d), BiPoly::x());
  EXPECT_EQ(t.entry(d, z), BiPoly::x());
  EXPECT_TRUE(t.entry(u, z).is_zero());
  EXPECT_FALSE(t.has_edge(d, u));
  EXPECT_THROW(build_transfer(0), std::invalid_argument);
  EXPECT_THROW(build_transfer(words::kMaxStateCols + 1), std::invalid_argument);
}

TEST(Transfer, LumpingRespectsBlockSums) {
  for (int c = 1; c <= 6; ++c) {
    const TransferMatrix t = build_transfer(c);
    const LumpedSystem sys = lump(t);
    ASSERT_LE(sys.size(), t.size());
    EXPECT_EQ(sys.empty_block, sys.size() - 1);
    EXPECT_EQ(sys.block_of[t.space().empty_index()], sys.empty_block);
    for (std::size_t s = 0; s < t.size(); ++s) {
      if (s != t.space().empty_index()) EXPECT_NE(sys.block_of[s], sys.empty_block);
    }
    // Each state's weighted successor counts into a block equal that block's entry.
    std::vector<std::vector<poly::UniPoly>> sums(t.size(), std::vector<poly::UniPoly>(sys.size()));
    for (const TransferEntry& e : t.entries()) {
      sums[e.from][sys.block_of[e.to]] += poly::UniPoly::monomial(1, static_cast<std::size_t>(e.weight));
    }
    for (std::size_t s = 0; s < t.size(); ++s) EXPECT_EQ(sums[s], sys.matrix[sys.block_of[s]]) << "c=" << c;
  }
}

TEST(Elimination, ReproducesPrintedClosedForms) {
  for (int c = 1; c <= 4; ++c) {
    const RationalGF want = printed_gf(c);
    EXPECT_TRUE(eliminated(c).same_function(want)) << c;
    EXPECT_EQ(eliminated(c), poly::reduce(want)) << c;
    EXPECT_TRUE(eliminated(c).is_normalized()) << c;
  }
}

TEST(Elimination, MethodsAgree) {
  for (int c = 1; c <= 5; ++c) {
    const LumpedSystem sys = lump(build_transfer(c));
    const DeterminantPair ff = determinants_fraction_free(sys);
    const DeterminantPair mm = determinants_multimodular(sys);
    EXPECT_EQ(ff.full, mm.full) << c;
    EXPECT_EQ(ff.minor, mm.minor) << c;
    EXPECT_EQ(ff.full.constant_term(), 1) << c;
  }
}

TEST(Elimination, ResultMetadata) {
  EliminationOptions opts;
  opts.method = EliminationMethod::Multimodular;
  const EliminationResult r = gf_by_elimination(build_transfer(3), opts);
  EXPECT_EQ(r.method, EliminationMethod::Multimodular);
  EXPECT_EQ(r.states, 13u);
  EXPECT_TRUE(r.fully_reduced);
  EXPECT_FALSE(r.residual_factor.has_value());
  EXPECT_EQ(r.gf, eliminated(3));

  opts.full_reduction_cols = 2;
  const EliminationResult partial = gf_by_elimination(build_transfer(3), opts);
  EXPECT_FALSE(partial.fully_reduced);
  ASSERT_TRUE(partial.residual_factor.has_value());
  EXPECT_FALSE(*partial.residual_factor);
  EXPECT_TRUE(partial.gf.same_function(r.gf));
}

TEST(Elimination, TranspositionCoherence) {
  // [x^r] H_c = [x^c] H_r as polynomials in y.
  const auto h3 = poly::series_x(eliminated(3), 6);
  const auto h5 = poly::series_x(eliminated(5), 6);
  EXPECT_EQ(h3[5], h5[3]);
  const auto h4 = poly::series_x(eliminated(4), 6);
  EXPECT_EQ(h4[5], h5[4]);
  EXPECT_EQ(h3[4], h4[3]);
}

TEST(SeriesFit, AgreesWithElimination) {
  for (int c = 1; c <= 4; ++c) {
    const FitResult f = gf_by_series_fit(c);
    EXPECT_TRUE(f.gf.same_function(eliminated(c))) << c;
    EXPECT_EQ(f.gf, eliminated(c)) << c;
    EXPECT_GE(f.held_out, 10);
    EXPECT_GE(f.primes_used, 2);
    EXPECT_GE(f.nullity, 1);
  }
}

TEST(SeriesFit, DefaultBoundsCoverTheResult) {
  for (int c = 1; c <= 4; ++c) {
    const FitBounds b = default_fit_bounds(c);
    EXPECT_GE(b.x_degree, eliminated(c).den().degree_x());
    EXPECT_GE(b.x_degree, eliminated(c).num().degree_x());
    EXPECT_GE(b.y_degree, eliminated(c).den().degree_y());
    EXPECT_GE(b.y_degree, eliminated(c).num().degree_y());
  }
}

TEST(SeriesFit, ExactBoundsGiveNullityOne) {
  const RationalGF& g = eliminated(2);
  const FitBounds tight{std::max(g.num().degree_x(), g.den().degree_x()),
                        std::max(g.num().degree_y(), g.den().degree_y())};
  const FitResult f = gf_by_series_fit(2, tight);
  EXPECT_EQ(f.gf, g);
  EXPECT_EQ(f.nullity, 1);
}

TEST(SeriesFit, PrintedDegreeBounds) {
  EXPECT_EQ(gf_by_series_fit(1, FitBounds{3, 1}).gf, poly::reduce(printed_gf(1)));
  EXPECT_EQ(gf_by_series_fit(2, FitBounds{4, 2}).gf, poly::reduce(printed_gf(2)));
  const RationalGF d4 = printed_gf(4);
  const FitResult f = gf_by_series_fit(4, FitBounds{14, 12});
  EXPECT_EQ(f.gf, d4);
  EXPECT_EQ(f.gf.den().coeff(4, 3), -48);
}

TEST(SeriesFit, TooSmallBoundsAreReported) {
  EXPECT_THROW(gf_by_series_fit(3, FitBounds{3, 6}), std::domain_error);
  EXPECT_THROW(gf_by_series_fit(3, FitBounds{9, 2}), std::domain_error);
}

TEST(Verify, PassesWithPrintedReference) {
  const RationalGF ref = printed_gf(3);
  const VerifyReport report = verify_gf(3, 30, &ref);
  EXPECT_TRUE(report.passed());
  for (const CheckEntry& e : report.checks) EXPECT_TRUE(e.passed) << e.name << ": " << e.detail;
}

TEST(Verify, FlagsAWrongReference) {
  const RationalGF wrong(printed_gf(2).num() + BiPoly::monomial(1, 3, 3), printed_gf(2).den());
  const VerifyReport report = verify_gf(2, 20, &wrong);
  EXPECT_FALSE(report.passed());
  EXPECT_THROW(verify_gf(0), std::invalid_argument);
}

TEST(Verify, SeriesCheckExplainsMismatch) {
  std::string why;
  EXPECT_TRUE(series_matches_counts(eliminated(2), 2, 30, &why));
  EXPECT_FALSE(series_matches_counts(eliminated(2), 3, 10, &why));
  EXPECT_FALSE(why.empty());
}

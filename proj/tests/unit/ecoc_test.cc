// Copyright 2026 The fewshot Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "fewshot/ecoc.h"
#include "fewshot/error.h"
#include "fewshot/rng.h"
#include "fewshot/synthetic.h"

namespace fewshot {
namespace {

using Bits = std::vector<std::vector<std::uint8_t>>;

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{};
}

std::vector<double> AsDouble(std::span<const double> s) { return {s.begin(), s.end()}; }

// Four well separated Gaussian classes in 8 dimensions, 50 records each.
FeatureSet SeparableFixture() {
  SyntheticSpec spec;
  spec.num_classes = 8;
  spec.dimension = 8;
  spec.records_per_class = 50;
  spec.class_spread = 3.0;
  spec.within_spread = 0.3;
  spec.offset_norm = 0.0;
  spec.seed = 11;
  return GenerateSynthetic(spec).base;
}

TEST(CodeLength, Minimum) {
  EXPECT_EQ(MinimumCodeLength(2), 1u);
  EXPECT_EQ(MinimumCodeLength(4), 2u);
  EXPECT_EQ(MinimumCodeLength(5), 3u);
  EXPECT_EQ(MinimumCodeLength(16), 4u);
  EXPECT_EQ(MinimumCodeLength(17), 5u);
}

TEST(RandomCodebook, TwoClassesOneBit) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto cb = RandomCodebook(2, 1, seed);
    EXPECT_NE(cb.row(0)[0], cb.row(1)[0]);
  }
}

TEST(RandomCodebook, CodeTooShort) {
  try {
    RandomCodebook(5, 2, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCodeTooShort);
    EXPECT_NE(std::string(e.what()).find("at least 3 bits"), std::string::npos) << e.what();
  }
}

TEST(RandomCodebook, DeterministicAndDistinct) {
  const auto a = RandomCodebook(16, 64, 1234);
  EXPECT_EQ(a, RandomCodebook(16, 64, 1234));
  EXPECT_NE(a, RandomCodebook(16, 64, 1235));
  std::set<std::vector<double>> rows;
  for (std::size_t r = 0; r < a.num_classes(); ++r) rows.insert(AsDouble(a.row(r)));
  EXPECT_EQ(rows.size(), 16u);
  EXPECT_TRUE(a.is_binary());
}

TEST(RandomCodebook, FullSpaceNeedsResampling) {
  // Eight classes in three bits must use every code exactly once.
  const auto cb = RandomCodebook(8, 3, 9);
  std::set<std::vector<double>> rows;
  for (std::size_t r = 0; r < 8; ++r) rows.insert(AsDouble(cb.row(r)));
  EXPECT_EQ(rows.size(), 8u);
}

TEST(RandomCodebook, MatchesOracle) {
  const auto cb = RandomCodebook(4, 8, 5);
  EXPECT_EQ(cb, Codebook::FromBits({0, 1, 2, 3}, Bits{{1, 1, 0, 0, 1, 0, 0, 1},
                                                      {0, 0, 1, 1, 0, 1, 0, 1},
                                                      {0, 0, 0, 0, 0, 0, 1, 1},
                                                      {1, 0, 0, 1, 0, 1, 1, 0}}));
}

TEST(Codebook, FromBitsValidation) {
  EXPECT_EQ(CodeOf([] { Codebook::FromBits({1, 1}, Bits{{0}, {1}}); }),
            ErrorCode::kDuplicateClass);
  EXPECT_EQ(CodeOf([] { Codebook::FromBits({1, 2}, Bits{{0, 1}, {0, 1}}); }),
            ErrorCode::kCodebookCollision);
  EXPECT_EQ(CodeOf([] { Codebook::FromBits({1, 2}, Bits{{0, 1}, {0}}); }),
            ErrorCode::kLengthMismatch);
  EXPECT_EQ(CodeOf([] { Codebook::FromBits({1, 2, 3}, Bits{{0}, {1}, {0}}); }),
            ErrorCode::kCodeTooShort);
  EXPECT_EQ(CodeOf([] { Codebook::FromBits({1, 2}, Bits{{0}, {2}}); }),
            ErrorCode::kInvalidArgument);
}

Codebook ZerosOnes() { return Codebook::FromBits({1, 2}, Bits{{0, 0, 0, 0}, {1, 1, 1, 1}}); }

TEST(Decode, Examples) {
  const auto cb = ZerosOnes();
  EXPECT_EQ(Decode(cb, std::vector<double>{0, 0, 1, 0}), 1u);
  EXPECT_EQ(Decode(cb, std::vector<double>{1, 1, 1, 1}), 2u);
  EXPECT_EQ(Decode(cb, std::vector<double>(4, 0.5)), 1u);
  EXPECT_EQ(CodeOf([&] { Decode(cb, std::vector<double>{0, 0}); }), ErrorCode::kLengthMismatch);
}

TEST(Decode, TieGoesToLowestRowNotLowestId) {
  const auto cb = Codebook::FromBits({9, 4}, Bits{{0, 0}, {1, 1}});
  EXPECT_EQ(DecodeRow(cb, std::vector<double>{0.5, 0.5}), 0u);
  EXPECT_EQ(Decode(cb, std::vector<double>{0.5, 0.5}), 9u);
}

TEST(Decode, EveryRowDecodesToItself) {
  Rng rng(DeriveSeed(3, 3));
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t c = 2 + rng.UniformIndex(31);
    const std::size_t b = std::max<std::size_t>(MinimumCodeLength(c), 1) + rng.UniformIndex(20);
    const auto cb = RandomCodebook(c, b, rng.Next());
    for (std::size_t r = 0; r < c; ++r) EXPECT_EQ(DecodeRow(cb, cb.row(r)), r);
  }
}

TEST(Decode, CosineMatchesHammingOnBinaryInputs) {
  Rng rng(DeriveSeed(6, 6));
  const auto cb = RandomCodebook(10, 12, 77);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> q(12);
    for (auto& x : q) x = rng.Bit() ? 1.0 : 0.0;
    EXPECT_EQ(DecodeCosine(cb, q), Decode(cb, q));
  }
}

TEST(Decode, ThresholdCode) {
  EXPECT_EQ(ThresholdCode(std::vector<double>{0.2, 0.5, 0.51, 0.9}),
            (std::vector<std::uint8_t>{0, 1, 1, 1}));
}

TEST(MinimumDistance, Examples) {
  EXPECT_EQ(MinimumPairwiseDistance(ZerosOnes()), 4u);
  EXPECT_EQ(MinimumPairwiseDistance(Codebook::FromBits({0, 1, 2}, Bits{{0, 0}, {0, 1}, {1, 1}})),
            1u);
}

TEST(Extend, ExactSoftRow) {
  const auto ext = ExtendCodebook(ZerosOnes(), 3, std::vector<double>{1, 0, 1, 1});
  EXPECT_EQ(ext.num_classes(), 3u);
  EXPECT_EQ(Decode(ext, std::vector<double>{1, 0, 1, 1}), 3u);
  EXPECT_EQ(Decode(ext, std::vector<double>{0, 0, 0, 1}), 1u);
}

TEST(Extend, SoftRowWinsOnNearQuery) {
  const auto ext = ExtendCodebook(ZerosOnes(), 3, std::vector<double>{0.9, 0.1, 0.9, 0.9});
  EXPECT_FALSE(ext.is_binary());
  // L1 distances: 3 to 0000, 1 to 1111, 0.4 to the soft row.
  EXPECT_EQ(Decode(ext, std::vector<double>{1, 0, 1, 1}), 3u);
}

TEST(Extend, Validation) {
  EXPECT_EQ(CodeOf([] { ExtendCodebook(ZerosOnes(), 2, std::vector<double>(4, 0.5)); }),
            ErrorCode::kDuplicateClass);
  EXPECT_EQ(CodeOf([] { ExtendCodebook(ZerosOnes(), 3, std::vector<double>(3, 0.5)); }),
            ErrorCode::kLengthMismatch);
  EXPECT_EQ(CodeOf([] { ExtendCodebook(ZerosOnes(), 3, std::vector<double>{0, 0, 0, 1.5}); }),
            ErrorCode::kInvalidArgument);
}

TEST(Sigmoid, StableAtExtremes) {
  EXPECT_EQ(Sigmoid(0.0), 0.5);
  EXPECT_EQ(Sigmoid(1000.0), 1.0);
  EXPECT_EQ(Sigmoid(-1000.0), 0.0);
  EXPECT_NEAR(Sigmoid(2.0) + Sigmoid(-2.0), 1.0, 2.3e-16);
}

TEST(PredictCode, ZeroModel) {
  EXPECT_EQ(PredictCode(EcocModel(3, 5), std::vector<float>{1, -2, 3}),
            std::vector<double>(5, 0.5));
}

TEST(PredictCode, MatchesOracle) {
  const EcocModel m(2, 3, {0.5, -1, 2, 1.5, 0.25, -0.75}, {0.1, -0.2, 0.3});
  const auto p = PredictCode(m, std::vector<float>{1, -2});
  const std::vector<double> golden{0.08317269649392238, 0.1544652650835347, 0.9781187290638694};
  for (std::size_t b = 0; b < 3; ++b) EXPECT_NEAR(p[b], golden[b], 1e-15);
}

TEST(PredictCode, SaturatesOnAlignedColumn) {
  const EcocModel m(2, 2, {40, 0, 40, 0}, {0, 0});
  const auto p = PredictCode(m, std::vector<float>{1, 1});
  EXPECT_GT(p[0], 0.999999);
  EXPECT_EQ(p[1], 0.5);
}

TEST(PredictCode, DimensionMismatch) {
  EXPECT_EQ(CodeOf([] { PredictCode(EcocModel(3, 2), std::vector<float>{1, 2}); }),
            ErrorCode::kDimensionMismatch);
}

TEST(SoftCode, AveragesShots) {
  const double l = 1000;
  const EcocModel m(2, 4, {l, -l, l, -l, -l, -l, l, l}, {0, 0, 0, 0});
  const std::vector<std::vector<float>> shots{{1, 0}, {0, 1}};
  EXPECT_EQ(PredictCode(m, shots[0]), (std::vector<double>{1, 0, 1, 0}));
  EXPECT_EQ(PredictCode(m, shots[1]), (std::vector<double>{0, 0, 1, 1}));
  EXPECT_EQ(SoftCode(m, shots), (std::vector<double>{0.5, 0, 1, 0.5}));
}

TEST(SoftCode, SingleShotAndZeroModel) {
  const EcocModel m(2, 3, {0.5, -1, 2, 1.5, 0.25, -0.75}, {0.1, -0.2, 0.3});
  const std::vector<std::vector<float>> one{{1, -2}};
  EXPECT_EQ(SoftCode(m, one), PredictCode(m, one[0]));
  const std::vector<std::vector<float>> many{{1, 2}, {3, 4}, {-5, 6}};
  EXPECT_EQ(SoftCode(EcocModel(2, 3), many), std::vector<double>(3, 0.5));
  EXPECT_EQ(CodeOf([&] { SoftCode(m, std::span<const std::vector<float>>{}); }),
            ErrorCode::kEmptySet);
}

TEST(Model, Validation) {
  EXPECT_EQ(CodeOf([] { EcocModel(0, 1); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { EcocModel(2, 2, {1, 2, 3}, {0, 0}); }), ErrorCode::kLengthMismatch);
  EXPECT_EQ(CodeOf([] { EcocModel(1, 1, {NAN}, {0}); }), ErrorCode::kNonFiniteValue);
}

EcocModel RandomModel(Rng& rng, std::size_t dim, std::size_t bits, double scale) {
  std::vector<double> w(dim * bits);
  std::vector<double> b(bits);
  for (auto& x : w) x = scale * rng.Normal();
  for (auto& x : b) x = scale * rng.Normal();
  return EcocModel(dim, bits, std::move(w), std::move(b));
}

// Central differences with step 1e-5 on every coordinate.
void ExpectGradientMatches(const EcocModel& model, const FeatureSet& train,
                           const Codebook& codebook) {
  const auto g = EcocLossGradient(model, train, codebook);
  EXPECT_NEAR(g.loss, EcocLoss(model, train, codebook), 1e-9 * std::abs(g.loss));
  const double h = 1e-5;
  const std::size_t dim = model.dimension();
  const std::size_t bits = model.bits();
  std::vector<double> w(model.weights().begin(), model.weights().end());
  std::vector<double> b(model.biases().begin(), model.biases().end());
  const auto loss_at = [&](std::vector<double> ww, std::vector<double> bb) {
    return EcocLoss(EcocModel(dim, bits, std::move(ww), std::move(bb)), train, codebook);
  };
  // Coordinates whose analytic value is below 1e-8 are compared absolutely.
  const auto check = [](double analytic, double numeric) {
    const double diff = std::abs(analytic - numeric);
    EXPECT_LE(std::abs(analytic) < 1e-8 ? diff : diff / std::abs(analytic), 1e-4)
        << analytic << " vs " << numeric;
  };
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto plus = w;
    auto minus = w;
    plus[i] += h;
    minus[i] -= h;
    check(g.weight_gradient[i], (loss_at(plus, b) - loss_at(minus, b)) / (2 * h));
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    auto plus = b;
    auto minus = b;
    plus[i] += h;
    minus[i] -= h;
    check(g.bias_gradient[i], (loss_at(w, plus) - loss_at(w, minus)) / (2 * h));
  }
}

TEST(Gradient, MatchesFiniteDifferencesAtZero) {
  const auto train = SeparableFixture();
  ExpectGradientMatches(EcocModel(8, 8), train, RandomCodebook(4, 8, 5));
}

TEST(Gradient, MatchesFiniteDifferencesAtRandomPoints) {
  const auto train = SeparableFixture();
  const auto cb = RandomCodebook(4, 8, 5);
  Rng rng(DeriveSeed(21, 0));
  for (int point = 0; point < 5; ++point) ExpectGradientMatches(RandomModel(rng, 8, 8, 0.1), train, cb);
}

TEST(Train, ValidatesInputs) {
  const auto train = SeparableFixture();
  const auto cb = RandomCodebook(4, 8, 5);
  EXPECT_EQ(CodeOf([&] { TrainLinearEcoc(train, cb, 0.0, 10, 0); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([&] { TrainLinearEcoc(train, cb, 0.01, 0, 0); }), ErrorCode::kInvalidArgument);
  const auto small = Codebook::FromBits({0, 1, 2}, Bits{{0, 0}, {0, 1}, {1, 0}});
  EXPECT_EQ(CodeOf([&] { TrainLinearEcoc(train, small, 0.01, 10, 0); }),
            ErrorCode::kUnknownLabel);
}

TEST(Train, DivergenceIsReported) {
  FeatureSet train(1);
  train.Add(0, std::vector<float>{3e38f});
  train.Add(1, std::vector<float>{-3e38f});
  const auto cb = Codebook::FromBits({0, 1}, Bits{{0}, {1}});
  EXPECT_EQ(CodeOf([&] { TrainLinearEcoc(train, cb, 1e300, 5, 0); }), ErrorCode::kNonFiniteLoss);
}

TEST(Train, SinglePointSingleBit) {
  FeatureSet train(2);
  train.Add(0, std::vector<float>{1, 0.5f});
  const auto cb = Codebook::FromBits({0}, Bits{{1}});
  const auto r = TrainLinearEcoc(train, cb, 0.1, 200, 1);
  EXPECT_GT(PredictCode(r.model, train.vector(0))[0], 0.9);
}

TEST(Train, InitializationIsSmallAndSymmetric) {
  FeatureSet train(4);
  train.Add(0, std::vector<float>{0, 0, 0, 0});
  const auto cb = Codebook::FromBits({0}, Bits{{1, 0, 1}});
  // With an all-zero input only the biases move, so the weights keep their
  // initial values.
  const auto r = TrainLinearEcoc(train, cb, 1e-3, 1, 8);
  for (double w : r.model.weights()) EXPECT_LE(std::abs(w), 0.01);
}

TEST(Train, SeparableFixtureMatchesOracle) {
  const auto train = SeparableFixture();
  ASSERT_EQ(train.Classes(), (std::vector<ClassId>{0, 1, 2, 3}));
  const auto cb = RandomCodebook(4, 8, 5);
  const auto r = TrainLinearEcoc(train, cb, 0.01, 500, 3);
  ASSERT_EQ(r.loss_trace.size(), 501u);
  EXPECT_NEAR(r.loss_trace.front(), 1121.145297429854, 1e-9);
  EXPECT_NEAR(r.loss_trace.back(), 0.08655793419208932, 1e-9);
  for (std::size_t e = 1; e < r.loss_trace.size(); ++e) {
    EXPECT_LE(r.loss_trace[e], r.loss_trace[e - 1]) << e;
  }
  EXPECT_EQ(r.loss_trace.back(), EcocLoss(r.model, train, cb));
  std::size_t correct = 0;
  for (std::size_t i = 0; i < train.size(); ++i) {
    correct += Decode(cb, PredictCode(r.model, train.vector(i))) == train.label(i);
  }
  EXPECT_EQ(correct, train.size());
  EXPECT_EQ(r.model, TrainLinearEcoc(train, cb, 0.01, 500, 3).model);
}

}  // namespace
}  // namespace fewshot

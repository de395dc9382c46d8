// Copyright 2026 The Simplex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "simplex/embeddings.h"

#include <atomic>
#include <cmath>
#include <thread>

#include "gtest/gtest.h"
#include "httplib.h"
#include "json.hpp"
#include "simplex/errors.h"

namespace simplex {
namespace {

TEST(CosineTest, HandValues) {
  EXPECT_DOUBLE_EQ(Cosine(std::vector<double>{1, 0}, std::vector<double>{1, 0}), 1.0);
  EXPECT_DOUBLE_EQ(Cosine(std::vector<double>{1, 0}, std::vector<double>{0, 1}), 0.0);
  EXPECT_NEAR(Cosine(std::vector<double>{1, 2, 3}, std::vector<double>{4, 5, 6}),
              32 / (std::sqrt(14.0) * std::sqrt(77.0)), 1e-12);
  EXPECT_NEAR(Cosine(std::vector<double>{1, 2, 3}, std::vector<double>{4, 5, 6}),
              0.974632, 1e-6);
}

TEST(CosineTest, Errors) {
  EXPECT_THROW(Cosine(std::vector<double>{0, 0}, std::vector<double>{1, 0}),
               UndefinedSimilarityError);
  EXPECT_THROW(Cosine(std::vector<double>{1}, std::vector<double>{1, 0}),
               ValidationError);
}

TEST(CosineTest, SymmetryScaleAndSelf) {
  MockSentenceEmbedder mock("m", 16);
  for (const char* w : {"alpha", "beta", "gamma", "delta"}) {
    const EmbeddingVector a = mock.TokenVector(w);
    const EmbeddingVector b = mock.TokenVector(std::string(w) + "x");
    EXPECT_NEAR(Cosine(a, b), Cosine(b, a), 1e-12);
    EXPECT_NEAR(Cosine(a, a), 1.0, 1e-9);
    for (double alpha : {0.5, 2.0, 10.0}) {
      EmbeddingVector scaled = a;
      for (double& x : scaled) x *= alpha;
      EXPECT_NEAR(Cosine(scaled, b), Cosine(a, b), 1e-9);
    }
    EmbeddingVector neg = a;
    for (double& x : neg) x = -x;
    EXPECT_GE(Cosine(a, neg), -1.0);
  }
}

TEST(WordVectorStoreTest, ParsesWithAndWithoutHeader) {
  WordVectorStore s = WordVectorStore::Parse("cat 0.1 0.2\ndog 0.3 0.4\n");
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.dim(), 2u);
  ASSERT_NE(s.Find("dog"), nullptr);
  EXPECT_EQ(*s.Find("dog"), (EmbeddingVector{0.3, 0.4}));
  EXPECT_EQ(s.Find("zebra"), nullptr);
  WordVectorStore h = WordVectorStore::Parse("2 3\na 1 2 3\nb 4 5 6\n");
  EXPECT_EQ(h.size(), 2u);
  EXPECT_EQ(h.dim(), 3u);
}

TEST(WordVectorStoreTest, RejectsBadInput) {
  try {
    WordVectorStore::Parse("a 1 2\nb 1 2 3\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  try {
    WordVectorStore::Parse("a 1 2\nb 1 nope\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(WordVectorStore::Parse(""), ParseError);
  EXPECT_THROW(WordVectorStore::Parse("3 2\n"), ParseError);
  EXPECT_THROW(WordVectorStore::Load("/nonexistent.vec"), IoError);
}

TEST(WordVectorStoreTest, FixtureCosines) {
  WordVectorStore s = WordVectorStore::Load(SIMPLEX_FIXTURE_DIR "/vectors.txt");
  EXPECT_EQ(s.dim(), 16u);
  EXPECT_NEAR(Cosine(*s.Find("indispensable"), *s.Find("necessary")), 0.92, 1e-6);
  EXPECT_NEAR(Cosine(*s.Find("encloses"), *s.Find("wraps")), 0.8, 1e-6);
}

TEST(MockEmbedderTest, DeterministicAndProportional) {
  MockSentenceEmbedder mock("bert");
  const Sentence a = Sentence::Parse("oregano is a vital ingredient in greek cooking");
  EXPECT_EQ(mock.Embed(a), mock.Embed(a));
  EXPECT_EQ(mock.Embed(a).size(), MockSentenceEmbedder::kDefaultDim);
  EXPECT_EQ(MockSentenceEmbedder("bert").Embed(a), mock.Embed(a));
  EXPECT_NE(MockSentenceEmbedder("gpt2").Embed(a), mock.Embed(a));
  for (size_t k = 0; k < a.size(); ++k) {
    const double c = Cosine(mock.Embed(a), mock.Embed(a.WithToken(k, "zzz")));
    EXPECT_LT(c, 1.0);
    EXPECT_GT(c, 0.5);
  }
  EXPECT_NEAR(Cosine(mock.TokenVector("a"), mock.TokenVector("a")), 1.0, 1e-12);
}

TEST(CachedEmbedderTest, RoundTripAndMisses) {
  CachedSentenceEmbedder cache("bert");
  cache.Add("bert", "the cat sat", {1, 0, 0});
  cache.Add("gpt2", "the cat sat", {0, 1, 0});
  const std::string text = cache.Serialize();
  CachedSentenceEmbedder bert = CachedSentenceEmbedder::Parse(text, "bert");
  CachedSentenceEmbedder gpt2 = CachedSentenceEmbedder::Parse(text, "gpt2");
  EXPECT_EQ(bert.Embed(Sentence::Parse("the cat sat")), (EmbeddingVector{1, 0, 0}));
  EXPECT_EQ(gpt2.Embed(Sentence::Parse("the cat sat")), (EmbeddingVector{0, 1, 0}));
  EXPECT_THROW(bert.Embed(Sentence::Parse("the dog sat")), MissingEmbeddingError);
  EXPECT_EQ(bert.Serialize(), text);
  EXPECT_THROW(CachedSentenceEmbedder::Parse("SIMPLEX-EMB0\n", "m"), ParseError);
  EXPECT_THROW(CachedSentenceEmbedder::Parse("SIMPLEX-EMB1\ndim\t2\nm\ts\t1\n", "m"),
               ParseError);
  EXPECT_THROW(cache.Add("bert", "x", {1, 2}), ValidationError);
}

TEST(MakeSentenceEmbedderTest, Specs) {
  EXPECT_NE(dynamic_cast<MockSentenceEmbedder*>(
                MakeSentenceEmbedder("mock:", "bert").get()),
            nullptr);
  EXPECT_NE(dynamic_cast<RemoteSentenceEmbedder*>(
                MakeSentenceEmbedder("http://127.0.0.1:1", "bert").get()),
            nullptr);
  EXPECT_THROW(MakeSentenceEmbedder("ftp://x", "bert"), ValidationError);
  EXPECT_THROW(MakeSentenceEmbedder("cache:/nonexistent.emb", "bert"), IoError);
}

class RemoteEmbedderTest : public ::testing::Test {
 protected:
  void SetUp() override {
    server_.Post("/embed", [this](const httplib::Request& req,
                                 httplib::Response& res) {
      ++hits_;
      if (mode_ == 1) {
        res.status = 500;
        return;
      }
      if (mode_ == 2) {
        res.set_content("{\"embeddings\": 3}", "application/json");
        return;
      }
      auto body = nlohmann::json::parse(req.body);
      nlohmann::json out = {{"embeddings", nlohmann::json::array()}};
      for (const auto& s : body["sentences"]) {
        const std::string text = s.get<std::string>();
        out["embeddings"].push_back(
            {static_cast<double>(text.size()), 1.0,
             body["model"] == "bert" ? 0.0 : 1.0});
      }
      res.set_content(out.dump(), "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  void TearDown() override {
    server_.stop();
    thread_.join();
  }
  std::string Url() const { return "http://127.0.0.1:" + std::to_string(port_); }

  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<int> hits_{0};
  std::atomic<int> mode_{0};  // 0 ok, 1 server error, 2 malformed body
};

TEST_F(RemoteEmbedderTest, FetchesAndCaches) {
  RemoteSentenceEmbedder remote(Url(), "bert");
  const Sentence a = Sentence::Parse("the cat sat");
  const Sentence b = Sentence::Parse("a dog");
  EXPECT_EQ(remote.Embed(a), (EmbeddingVector{11, 1, 0}));
  EXPECT_EQ(remote.Embed(a), (EmbeddingVector{11, 1, 0}));
  EXPECT_EQ(hits_.load(), 1);
  std::vector<Sentence> batch = {a, b};
  std::vector<EmbeddingVector> out = remote.EmbedBatch(batch);
  EXPECT_EQ(out[1], (EmbeddingVector{5, 1, 0}));
  EXPECT_EQ(hits_.load(), 2);
}

TEST_F(RemoteEmbedderTest, ConcurrentCallsAgree) {
  RemoteSentenceEmbedder remote(Url(), "gpt2");
  std::vector<std::thread> threads;
  std::vector<EmbeddingVector> results(8);
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&, i] {
      results[i] = remote.Embed(Sentence::Parse("same sentence"));
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& r : results) EXPECT_EQ(r, results[0]);
}

TEST_F(RemoteEmbedderTest, FailuresAreProviderErrors) {
  EXPECT_THROW(RemoteSentenceEmbedder("http://127.0.0.1:1", "bert",
                                      std::chrono::milliseconds(300))
                   .Embed(Sentence::Parse("x")),
               ProviderError);
  mode_ = 1;
  EXPECT_THROW(RemoteSentenceEmbedder(Url(), "bert").Embed(Sentence::Parse("x")),
               ProviderError);
  mode_ = 2;
  EXPECT_THROW(RemoteSentenceEmbedder(Url(), "bert").Embed(Sentence::Parse("x")),
               ProviderError);
}

}  // namespace
}  // namespace simplex

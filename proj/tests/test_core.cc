// tests/test_core.cc

// Copyright 2026  ASRLab Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <set>
#include <string>
#include <vector>

#include "asrlab/base/error.h"
#include "asrlab/base/rng.h"
#include "asrlab/core/corpus.h"
#include "asrlab/core/synth.h"
#include "doctest.h"
#include "test_util.h"

using namespace asrlab;

namespace {

// Minimal spec: one template, zero noise, fixed durations.
SynthSpec cat_spec() {
  SynthSpec spec;
  spec.dim = 4;
  spec.mean_seed = 11;
  spec.seed = 7;
  spec.noise_stddev = 0.0;
  spec.min_dur = 2;
  spec.max_dur = 2;
  spec.phonemes = {"AE", "K", "T"};
  Rng rng(spec.mean_seed);
  for (const auto& p : spec.phonemes) {
    Vec mean(spec.dim);
    for (int d = 0; d < spec.dim; ++d) mean(d) = rng.normal();
    spec.phoneme_means[p] = mean;
  }
  spec.lexicon.entries["CAT"] = {{"K", "AE", "T"}};
  spec.templates.push_back({1.0, {"CAT"}});
  return spec;
}

}  // namespace

TEST_CASE("rng determinism and seed derivation") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    CHECK(a.next_u64() == b.next_u64());
  }
  CHECK(derive_seed(1, "x") == derive_seed(1, "x"));
  CHECK(derive_seed(1, "x") != derive_seed(1, "y"));
  CHECK(derive_seed(1, "x") != derive_seed(2, "x"));
}

TEST_CASE("rng uniform_int range and rough uniformity") {
  Rng rng(3);
  int counts[4] = {0, 0, 0, 0};
  for (int i = 0; i < 40000; ++i) {
    int v = rng.uniform_int(4);
    REQUIRE(v >= 0);
    REQUIRE(v < 4);
    counts[v]++;
  }
  for (int c : counts) CHECK(std::abs(c - 10000) < 500);
}

TEST_CASE("synth zero-noise fixed-duration frames equal phoneme means") {
  SynthSpec spec = cat_spec();
  Corpus corpus = synth_corpus(spec, 3, Split::kTrain);
  REQUIRE(corpus.size() == 3);
  for (const auto& utt : corpus.utterances) {
    REQUIRE(utt.transcript == std::vector<std::string>{"CAT"});
    REQUIRE(utt.features.num_frames() == 6);
    const char* expect[6] = {"K", "K", "AE", "AE", "T", "T"};
    for (int t = 0; t < 6; ++t) {
      const Vec& mean = spec.phoneme_means.at(expect[t]);
      CHECK((utt.features.frames.row(t).transpose() - mean).norm() == 0.0);
    }
  }
}

TEST_CASE("synth is a pure function of (spec, count, split)") {
  SynthSpec spec = cat_spec();
  spec.noise_stddev = 0.4;
  spec.min_dur = 2;
  spec.max_dur = 4;
  Corpus a = synth_corpus(spec, 5, Split::kDev);
  Corpus b = synth_corpus(spec, 5, Split::kDev);
  REQUIRE(a.size() == b.size());
  for (int i = 0; i < a.size(); ++i) {
    CHECK(a.utterances[i].id == b.utterances[i].id);
    CHECK(a.utterances[i].transcript == b.utterances[i].transcript);
    // Bit-identical features.
    CHECK'((a.utterances[i].features.frames.array() ==
            b.utterances[i].features.frames.array())
               .all());
  }
  Corpus c = synth_corpus(spec, 5, Split::kTest);
  CHECK(c.utterances[0].id != a.utterances[0].id);
}

TEST_CASE("homophones yield identical features at zero noise") {
  SynthSpec spec = cat_spec();
  spec.phonemes = {"D", "EH", "R"};
  spec.phoneme_means.clear();
  Rng rng(spec.mean_seed);
  for (const auto& p : spec.phonemes) {
    Vec mean(spec.dim);
    for (int d = 0; d < spec.dim; ++d) mean(d) = rng.normal();
    spec.phoneme_means[p] = mean;
  }
  spec.lexicon.entries.clear();
  spec.lexicon.entries["RED"] = {{"R", "EH", "D"}};
  spec.lexicon.entries["READ"] = {{"R", "EH", "D"}};
  spec.homophone_groups = {{"RED", "READ"}};
  spec.templates = {{0.5, {"RED"}}, {0.5, {"READ"}}};

  // Same seed stream, fixed durations, zero noise: the feature matrix is a
  // function of the pronunciation alone. Generate each word via a forced
  // single-template spec and compare frame-for-frame.
  SynthSpec red = spec;
  red.templates = {{1.0, {"RED"}}};
  SynthSpec readv = spec;
  readv.templates = {{1.0, {"READ"}}};
  Corpus a = synth_corpus(red, 4, Split::kTrain);
  Corpus b = synth_corpus(readv, 4, Split::kTrain);
  for (int i = 0; i < 4; ++i) {
    CHECK((a.utterances[i].features.frames.array() ==
           b.utterances[i].features.frames.array())
              .all());
  }
}

TEST_CASE("synth rejects invalid specs") {
  SynthSpec spec = cat_spec();
  spec.templates.clear();
  CHECK_THROWS_AS(synth_corpus(spec, 1, Split::kTrain), Error);
  spec = cat_spec();
  spec.dim = 0;
  CHECK_THROWS_AS(spec.validate(), Error);
  spec = cat_spec();
  CHECK_THROWS_AS(synth_corpus(spec, 0, Split::kTrain), Error);
}

TEST_CASE("corpus save/load round trip") {
  SynthSpec spec = cat_spec();
  spec.noise_stddev = 0.37;
  spec.min_dur = 1;
  spec.max_dur = 3;
  Corpus corpus = synth_corpus(spec, 4, Split::kTrain);
  std::string path = test::scratch_path("roundtrip.corpus");
  save_corpus(corpus, path);
  Corpus loaded = load_corpus(path, Split::kTrain);
  REQUIRE(loaded.size() == corpus.size());
  for (int i = 0; i < corpus.size(); ++i) {
    CHECK(loaded.utterances[i].id == corpus.utterances[i].id);
    CHECK(loaded.utterances[i].transcript == corpus.utterances[i].transcript);
    CHECK((loaded.utterances[i].features.frames.array() ==
           corpus.utterances[i].features.frames.array())
              .all());
  }
}

TEST_CASE("corpus loader: single record") {
  std::string path = test::write_file("one.corpus",
                                      "DIM 2\n"
                                      "UTT u1\n"
                                      "REF hello world\n"
                                      "FRAMES 2\n"
                                      "0.5 1.5\n"
                                      "-1 2\n");
  Corpus c = load_corpus(path);
  REQUIRE(c.size() == 1);
  CHECK(c.utterances[0].transcript ==
        std::vector<std::string>{"HELLO", "WORLD"});
  CHECK(c.utterances[0].features.frames(1, 0) == -1.0);
}

TEST_CASE("corpus loader: empty file yields empty corpus") {
  std::string path = test::write_file("empty.corpus", "");
  Corpus c = load_corpus(path);
  CHECK(c.empty());
}

TEST_CASE("corpus loader: malformed input names the line") {
  std::string path = test::write_file("bad1.corpus",
                                      "DIM 2\n"
                                      "UTT u1\n"
                                      "REF a\n"
                                      "FRAMES 1\n"
                                      "0.5\n");  // dim mismatch on line 5
  try {
    load_corpus(path);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find(":5:") != std::string::npos);
  }

  path = test::write_file("bad2.corpus",
                          "DIM 1\n"
                          "UTT u1\n"
                          "REF a\n"
                          "FRAMES 1\n"
                          "0.5 0.7\n");
  CHECK_THROWS_AS(load_corpus(path), Error);

  path = test::write_file("bad3.corpus",
                          "DIM 1\n"
                          "UTT u1\n"
                          "REF a\n"
                          "FRAMES 1\n"
                          "0.5\n"
                          "UTT u1\n"
                          "REF b\n"
                          "FRAMES 1\n"
                          "0.2\n");
  try {
    load_corpus(path);
    FAIL("expected duplicate-id error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
  }
}

TEST_CASE("lexicon loader") {
  std::string path = test::write_file("lex.txt",
                                      "CAT K AE T\n"
                                      "READ R EH D\n"
                                      "READ R IY D\n");
  Lexicon lex = load_lexicon(path);
  REQUIRE(lex.contains("CAT"));
  CHECK(lex.pronunciations("CAT") ==
        std::vector<std::vector<std::string>>{{"K", "AE", "T"}});
  // Two pronunciations kept in file order.
  REQUIRE(lex.pronunciations("READ").size() == 2);
  CHECK(lex.pronunciations("READ")[0] ==
        std::vector<std::string>{"R", "EH", "D"});
  CHECK(lex.pronunciations("READ")[1] ==
        std::vector<std::string>{"R", "IY", "D"});

  std::string bad = test::write_file("lex_bad.txt", "CAT\n");
  CHECK_THROWS_AS(load_lexicon(bad), Error);
}

TEST_CASE("lexicon save/load round trip") {
  Lexicon lex;
  lex.entries["A"] = {{"AH"}};
  lex.entries["READ"] = {{"R", "EH", "D"}, {"R", "IY", "D"}};
  std::string path = test::scratch_path("lex_rt.txt");
  save_lexicon(lex, path);
  Lexicon loaded = load_lexicon(path);
  CHECK(loaded.entries == lex.entries);
}

TEST_CASE("vocabulary") {
  Corpus c;
  Utterance u1;
  u1.id = "u1";
  u1.transcript = {"A", "B"};
  Utterance u2;
  u2.id = "u2";
  u2.transcript = {"B", "C"};
  c.utterances = {u1, u2};
  CHECK(vocabulary(c) == std::set<std::string>{"A", "B", "C"});
  CHECK(vocabulary(Corpus{}).empty());
}

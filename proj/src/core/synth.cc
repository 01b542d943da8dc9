// src/core/synth.cc

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

#include "asrlab/core/synth.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "asrlab/base/error.h"
#include "asrlab/base/rng.h"

namespace asrlab {

void SynthSpec::validate() const {
  ASR_REQUIRE(dim >= 1, "synth spec: feature dimension must be >= 1");
  ASR_REQUIRE(!phonemes.empty(), "synth spec: empty phoneme inventory");
  ASR_REQUIRE(!templates.empty(), "synth spec: empty grammar");
  ASR_REQUIRE(min_dur >= 1 && max_dur >= min_dur,
              "synth spec: bad duration range [" << min_dur << "," << max_dur
                                                 << "]");
  ASR_REQUIRE(noise_stddev >= 0.0, "synth spec: negative noise stddev");

  std::set<std::string> phone_set(phonemes.begin(), phonemes.end());
  ASR_REQUIRE(phone_set.size() == phonemes.size(),
              "synth spec: duplicate phoneme symbols");
  for (const auto& p : phonemes)
    ASR_REQUIRE(phoneme_means.count(p) == 1,
                "synth spec: missing mean vector for phoneme " << p);

  for (const auto& [word, prons] : lexicon.entries) {
    ASR_REQUIRE(!prons.empty(), "synth spec: word without pronunciation: "
                                    << word);
    for (const auto& pron : prons) {
      ASR_REQUIRE(!pron.empty(), "synth spec: empty pronunciation for "
                                     << word);
      for (const auto& p : pron)
        ASR_REQUIRE(phone_set.count(p) == 1,
                    "synth spec: pronunciation of " << word
                        << " uses undeclared phoneme " << p);
    }
  }

  double total = 0.0;
  for (const auto& t : templates) {
    ASR_REQUIRE(t.prob > 0.0, "synth spec: non-positive template probability");
    ASR_REQUIRE(!t.tokens.empty(), "synth spec: empty template");
    total += t.prob;
    for (const auto& tok : t.tokens) {
      if (tok.rfind('$', 0) == 0) {
        ASR_REQUIRE(slots.count(tok.substr(1)) == 1,
                    "synth spec: template references undefined slot " << tok);
      } else {
        ASR_REQUIRE(lexicon.contains(tok),
                    "synth spec: template word not in lexicon: " << tok);
      }
    }
  }
  ASR_REQUIRE(std::abs(total - 1.0) < 1e-6,
              "synth spec: template probabilities sum to " << total
                                                           << ", expected 1");
  for (const auto& [name, words] : slots) {
    ASR_REQUIRE(!words.empty(), "synth spec: empty slot " << name);
    for (const auto& w : words)
      ASR_REQUIRE(lexicon.contains(w),
                  "synth spec: slot " << name << " word not in lexicon: " << w);
  }

  // Homophone group members must share identical pronunciation sets.
  for (const auto& group : homophone_groups) {
    ASR_REQUIRE(group.size() >= 2, "synth spec: homophone group too small");
    const auto& ref = lexicon.pronunciations(group.front());
    for (const auto& w : group) {
      const auto& prons = lexicon.pronunciations(w);
      ASR_REQUIRE(prons == ref, "synth spec: homophone group of "
                                    << group.front() << " and " << w
                                    << " differs in pronunciations");
    }
  }
}

SynthSpec load_synth_spec(const std::string& path) {
  std::ifstream in(path);
  ASR_REQUIRE(in.good(), "cannot open synth spec: " << path);
  SynthSpec spec;
  // (a, b, alpha): pull b's mean toward a's by (1 - alpha).
  std::vector<std::tuple<std::string, std::string, double>> confusions;

  std::string line;
  int lineno = 0;
  bool in_lexicon = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto hash_pos = line.find('#');
    if (hash_pos != std::string::npos) line = line.substr(0, hash_pos);
    auto tokens = split_words(line);
    if (tokens.empty()) continue;

    if (in_lexicon) {
      if (tokens[0] == "END") {
        in_lexicon = false;
        continue;
      }
      ASR_REQUIRE(tokens.size() >= 2, path << ":" << lineno
                                           << ": lexicon line needs phonemes");
      spec.lexicon.entries[to_upper(tokens[0])].push_back(
          {tokens.begin() + 1, tokens.end()});
      continue;
    }

    const std::string& key = tokens[0];
    std::istringstream rest(line.substr(key.size()));
    if (key == "DIM") {
      rest >> spec.dim;
    } else if (key == "SEED") {
      rest >> spec.seed;
    } else if (key == "MEANSEED") {
      rest >> spec.mean_seed;
    } else if (key == "NOISE") {
      rest >> spec.noise_stddev;
    } else if (key == "DUR") {
      rest >> spec.min_dur >> spec.max_dur;
    } else if (key == "PHONEMES") {
      spec.phonemes.assign(tokens.begin() + 1, tokens.end());
    } else if (key == "CONFUSE") {
      ASR_REQUIRE(tokens.size() == 4, path << ":" << lineno
                                           << ": CONFUSE A B ALPHA");
      confusions.emplace_back(tokens[1], tokens[2], std::stod(tokens[3]));
    } else if (key == "LEXICON") {
      in_lexicon = true;
    } else if (key == "HOMOPHONES") {
      std::vector<std::string> group(tokens.begin() + 1, tokens.end());
      for (auto& w : group) w = to_upper(w);
      spec.homophone_groups.push_back(std::move(group));
    } else if (key == "SLOT") {
      ASR_REQUIRE(tokens.size() >= 3, path << ":" << lineno
                                           << ": SLOT NAME WORD...");
      std::vector<std::string> words(tokens.begin() + 2, tokens.end());
      for (auto& w : words) w = to_upper(w);
      spec.slots[tokens[1]] = std::move(words);
    } else if (key == "TEMPLATE") {
      ASR_REQUIRE(tokens.size() >= 3, path << ":" << lineno
                                           << ": TEMPLATE PROB WORD...");
      SentenceTemplate t;
      t.prob = std::stod(tokens[1]);
      for (size_t i = 2; i < tokens.size(); ++i) {
        const std::string& tok = tokens[i];
        t.tokens.push_back(tok.rfind('$', 0) == 0 ? "$" + tok.substr(1)
                                                  : to_upper(tok));
      }
      spec.templates.push_back(std::move(t));
    } else {
      Fail(path + ":" + std::to_string(lineno) + ": unknown directive " + key);
    }
  }
  ASR_REQUIRE(!in_lexicon, path << ": LEXICON block not closed with END");

  // Means are drawn once here and stored; everything downstream reads them.
  Rng rng(spec.mean_seed);
  for (const auto& p : spec.phonemes) {
    Vec mean(spec.dim);
    for (int d = 0; d < spec.dim; ++d) mean(d) = rng.normal();
    spec.phoneme_means[p] = mean;
  }
  for (const auto& [a, b, alpha] : confusions) {
    ASR_REQUIRE(spec.phoneme_means.count(a) && spec.phoneme_means.count(b),
                "CONFUSE references undeclared phoneme");
    Vec& mb = spec.phoneme_means[b];
    const Vec& ma = spec.phoneme_means[a];
    mb = ma + alpha * (mb - ma);
  }

  spec.validate();
  return spec;
}

namespace {

std::vector<std::string> sample_sentence(const SynthSpec& spec, Rng& rng) {
  double u = rng.uniform();
  const SentenceTemplate* chosen = &spec.templates.back();
  double acc = 0.0;
  for (const auto& t : spec.templates) {
    acc += t.prob;
    if (u < acc) {
      chosen = &t;
      break;
    }
  }
  std::vector<std::string> words;
  for (const auto& tok : chosen->tokens) {
    if (tok.rfind('$', 0) == 0) {
      const auto& options = spec.slots.at(tok.substr(1));
      words.push_back(options[rng.uniform_int(
          static_cast<int>(options.size()))]);
    } else {
      words.push_back(tok);
    }
  }
  return words;
}

}  // namespace

Corpus synth_corpus(const SynthSpec& spec, int count, Split split) {
  spec.validate();
  ASR_REQUIRE(count >= 1, "synth_corpus: count must be >= 1");

  Corpus corpus;
  corpus.split = split;
  Rng rng(derive_seed(spec.seed, split_name(split)));

  for (int n = 0; n < count; ++n) {
    Utterance utt;
    {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%s-%06d", split_name(split), n);
      utt.id = buf;
    }
    utt.transcript = sample_sentence(spec, rng);

    std::vector<Vec> frames;
    for (const auto& word : utt.transcript) {
      const auto& prons = spec.lexicon.pronunciations(word);
      const auto& pron =
          prons[rng.uniform_int(static_cast<int>(prons.size()))];
      for (const auto& phone : pron) {
        const Vec& mean = spec.phoneme_means.at(phone);
        int dur = spec.min_dur + rng.uniform_int(spec.max_dur - spec.min_dur + 1);
        for (int i = 0; i < dur; ++i) {
          Vec frame(spec.dim);
          for (int d = 0; d < spec.dim; ++d)
            frame(d) = mean(d) + spec.noise_stddev * rng.normal();
          frames.push_back(std::move(frame));
        }
      }
    }
    utt.features.frames.resize(static_cast<int>(frames.size()), spec.dim);
    for (size_t t = 0; t < frames.size(); ++t)
      utt.features.frames.row(static_cast<int>(t)) = frames[t].transpose();
    corpus.utterances.push_back(std::move(utt));
  }
  return corpus;
}

}  // namespace asrlab

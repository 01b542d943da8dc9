// include/asrlab/core/corpus.h

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

#ifndef ASRLAB_CORE_CORPUS_H_
#define ASRLAB_CORE_CORPUS_H_

#include <Eigen/Dense>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace asrlab {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

// T x D matrix of synthetic acoustic features, one row per frame.
struct FeatureSequence {
  Mat frames;

  int num_frames() const { return static_cast<int>(frames.rows()); }
  int dim() const { return static_cast<int>(frames.cols()); }
};

struct Utterance {
  std::string id;
  FeatureSequence features;
  std::vector<std::string> transcript;  // uppercase, space-free tokens
};

enum class Split { kTrain, kDev, kTest };

const char* split_name(Split split);

struct Corpus {
  Split split = Split::kTrain;
  std::vector<Utterance> utterances;

  bool empty() const { return utterances.empty(); }
  int size() const { return static_cast<int>(utterances.size()); }
  // Feature dimension of the first utterance; 0 for an empty corpus.
  int feature_dim() const;
};

// word -> ordered pronunciations, each a non-empty phoneme sequence.
// Entry order is sorted by word; pronunciation order is file order.
struct Lexicon {
  std::map<std::string, std::vector<std::vector<std::string>>> entries;

  bool empty() const { return entries.empty(); }
  bool contains(const std::string& word) const {
    return entries.count(word) > 0;
  }
  const std::vector<std::vector<std::string>>& pronunciations(
      const std::string& word) const;
  // Sorted unique phonemes appearing in any pronunciation.
  std::vector<std::string> phoneme_inventory() const;
};

// Corpus text format:
//   DIM <D>
//   UTT <id>
//   REF <words>
//   FRAMES <T>
//   <T lines of D space-separated decimals>
// Transcript words are uppercase-normalized on load. An empty file yields an
// empty corpus with a warning (valid only for unlabeled decoding).
Corpus load_corpus(const std::string& path, Split split = Split::kTest);
void save_corpus(const Corpus& corpus, const std::string& path);

// One pronunciation per line: WORD PH1 PH2 ...; repeated words accumulate
// pronunciations in file order.
Lexicon load_lexicon(const std::string& path);
void save_lexicon(const Lexicon& lexicon, const std::string& path);

// Transcript-only text: one utterance per line, optionally "<id> WORD ...".
// Used for vocabulary / OOV computations on text without features.
std::vector<std::vector<std::string>> load_transcripts(const std::string& path,
                                                       bool leading_id);

std::set<std::string> vocabulary(const Corpus& corpus);

// ASCII uppercase; other bytes pass through unchanged.
std::string to_upper(const std::string& s);
std::vector<std::string> split_words(const std::string& line);

}  // namespace asrlab

#endif  // ASRLAB_CORE_CORPUS_H_

// include/asrlab/core/synth.h

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

#ifndef ASRLAB_CORE_SYNTH_H_
#define ASRLAB_CORE_SYNTH_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "asrlab/core/corpus.h"

namespace asrlab {

// One weighted sentence pattern. Tokens are literal words or "$NAME" slot
// references filled uniformly from the named slot's word list.
struct SentenceTemplate {
  double prob = 0.0;
  std::vector<std::string> tokens;
};

// Recipe for a synthetic corpus: a phoneme inventory with one mean vector
// per phoneme (drawn once from a seeded standard normal), a lexicon with
// explicit homophone groups, and a weighted template grammar. Utterance
// features are, per phoneme of the sampled pronunciation, d in
// [min_dur, max_dur] frames of (phoneme mean + Gaussian noise).
struct SynthSpec {
  int dim = 16;
  uint64_t mean_seed = 1;
  uint64_t seed = 0;
  double noise_stddev = 0.3;
  int min_dur = 2;
  int max_dur = 4;

  std::vector<std::string> phonemes;
  std::map<std::string, Vec> phoneme_means;
  Lexicon lexicon;
  std::vector<std::vector<std::string>> homophone_groups;
  std::map<std::string, std::vector<std::string>> slots;
  std::vector<SentenceTemplate> templates;

  // Throws on: empty grammar, zero-dim features, probabilities not summing
  // to 1, words without pronunciations, homophone groups whose members do
  // not share identical pronunciation sets.
  void validate() const;
};

// Text format (see docs/formats.md):
//   DIM/SEED/MEANSEED/NOISE/DUR headers, PHONEMES list, optional CONFUSE
//   directives, a LEXICON...END block, HOMOPHONES/SLOT/TEMPLATE lines.
SynthSpec load_synth_spec(const std::string& path);

// Pure function of (spec, count, split): repeated calls are bit-identical.
Corpus synth_corpus(const SynthSpec& spec, int count, Split split);

}  // namespace asrlab

#endif  // ASRLAB_CORE_SYNTH_H_

// src/core/corpus.cc

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

#include "asrlab/core/corpus.h"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "asrlab/base/error.h"

namespace asrlab {

const char* split_name(Split split) {
  switch (split) {
    case Split::kTrain: return "train";
    case Split::kDev: return "dev";
    case Split::kTest: return "test";
  }
  return "unknown";
}

int Corpus::feature_dim() const {
  return utterances.empty() ? 0 : utterances.front().features.dim();
}

const std::vector<std::vector<std::string>>& Lexicon::pronunciations(
    const std::string& word) const {
  auto it = entries.find(word);
  ASR_REQUIRE(it != entries.end(), "word not in lexicon: " << word);
  return it->second;
}

std::vector<std::string> Lexicon::phoneme_inventory() const {
  std::set<std::string> phones;
  for (const auto& [word, prons] : entries)
    for (const auto& pron : prons)
      for (const auto& p : pron) phones.insert(p);
  return {phones.begin(), phones.end()};
}

std::string to_upper(const std::string& s) {
  std::string out = s;
  for (char& c : out)
    c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string> split_words(const std::string& line) {
  std::vector<std::string> words;
  std::istringstream is(line);
  std::string w;
  while (is >> w) words.push_back(w);
  return words;
}

namespace {

// Reads one logical line, tracking the line number for diagnostics.
struct LineReader {
  std::istream& in;
  const std::string& path;
  int lineno = 0;

  bool next(std::string* line) {
    if (!std::getline(in, *line)) return false;
    ++lineno;
    if (!line->empty() && line->back() == '\r') line->pop_back();
    return true;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    Fail(path + ":" + std::to_string(lineno) + ": " + msg);
  }
};

}  // namespace

Corpus load_corpus(const std::string& path, Split split) {
  std::ifstream in(path);
  ASR_REQUIRE(in.good(), "cannot open corpus file: " << path);
  Corpus corpus;
  corpus.split = split;

  LineReader reader{in, path};
  std::string line;
  if (!reader.next(&line)) {
    Warn("corpus file is empty: " + path +
         " (valid only for unlabeled decoding)");
    return corpus;
  }

  int dim = 0;
  {
    std::istringstream is(line);
    std::string tag;
    if (!(is >> tag >> dim) || tag != "DIM" || dim < 1)
      reader.fail("expected header 'DIM <D>', got: " + line);
  }

  std::unordered_set<std::string> seen_ids;
  while (reader.next(&line)) {
    if (line.empty()) continue;
    std::istringstream is(line);
    std::string tag;
    is >> tag;
    if (tag != "UTT") reader.fail("expected 'UTT <id>', got: " + line);
    Utterance utt;
    if (!(is >> utt.id)) reader.fail("missing utterance id");
    if (!seen_ids.insert(utt.id).second)
      reader.fail("duplicate utterance id: " + utt.id);

    if (!reader.next(&line)) reader.fail("unexpected end of file after UTT");
    if (line.rfind("REF ", 0) != 0 && line != "REF")
      reader.fail("expected 'REF <words>', got: " + line);
    for (const auto& w : split_words(line.substr(3)))
      utt.transcript.push_back(to_upper(w));

    if (!reader.next(&line)) reader.fail("unexpected end of file after REF");
    int frames = 0;
    {
      std::istringstream fs(line);
      std::string ftag;
      if (!(fs >> ftag >> frames) || ftag != "FRAMES" || frames < 1)
        reader.fail("expected 'FRAMES <T>', got: " + line);
    }
    utt.features.frames.resize(frames, dim);
    for (int t = 0; t < frames; ++t) {
      if (!reader.next(&line)) reader.fail("unexpected end of feature block");
      std::istringstream fs(line);
      for (int d = 0; d < dim; ++d) {
        double v = 0.0;
        if (!(fs >> v))
          reader.fail("feature row has fewer than " + std::to_string(dim) +
                      " values (dim mismatch vs header)");
        ASR_REQUIRE(std::isfinite(v), path << ":" << reader.lineno
                                           << ": non-finite feature value");
        utt.features.frames(t, d) = v;
      }
      double extra = 0.0;
      if (fs >> extra)
        reader.fail("feature row has more than " + std::to_string(dim) +
                    " values (dim mismatch vs header)");
    }
    corpus.utterances.push_back(std::move(utt));
  }
  return corpus;
}

void save_corpus(const Corpus& corpus, const std::string& path) {
  std::ofstream out(path);
  ASR_REQUIRE(out.good(), "cannot write corpus file: " << path);
  out << "DIM " << (corpus.empty() ? 1 : corpus.feature_dim()) << "\n";
  char buf[64];
  for (const auto& utt : corpus.utterances) {
    out << "UTT " << utt.id << "\n";
    out << "REF";
    for (const auto& w : utt.transcript) out << " " << w;
    out << "\n";
    const Mat& f = utt.features.frames;
    out << "FRAMES " << f.rows() << "\n";
    for (int t = 0; t < f.rows(); ++t) {
      for (int d = 0; d < f.cols(); ++d) {
        // %.17g round-trips doubles exactly.
        std::snprintf(buf, sizeof(buf), "%.17g", f(t, d));
        out << (d ? " " : "") << buf;
      }
      out << "\n";
    }
  }
  ASR_REQUIRE(out.good(), "failed writing corpus file: " << path);
}

Lexicon load_lexicon(const std::string& path) {
  std::ifstream in(path);
  ASR_REQUIRE(in.good(), "cannot open lexicon file: " << path);
  Lexicon lex;
  LineReader reader{in, path};
  std::string line;
  while (reader.next(&line)) {
    auto tokens = split_words(line);
    if (tokens.empty()) continue;
    if (tokens.size() < 2)
      reader.fail("lexicon line has a word but no phonemes: " + tokens[0]);
    std::string word = to_upper(tokens[0]);
    std::vector<std::string> pron(tokens.begin() + 1, tokens.end());
    lex.entries[word].push_back(std::move(pron));
  }
  return lex;
}

void save_lexicon(const Lexicon& lexicon, const std::string& path) {
  std::ofstream out(path);
  ASR_REQUIRE(out.good(), "cannot write lexicon file: " << path);
  for (const auto& [word, prons] : lexicon.entries)
    for (const auto& pron : prons) {
      out << word;
      for (const auto& p : pron) out << " " << p;
      out << "\n";
    }
  ASR_REQUIRE(out.good(), "failed writing lexicon file: " << path);
}

std::vector<std::vector<std::string>> load_transcripts(const std::string& path,
                                                       bool leading_id) {
  std::ifstream in(path);
  ASR_REQUIRE(in.good(), "cannot open transcript file: " << path);
  std::vector<std::vector<std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    auto words = split_words(line);
    if (words.empty()) continue;
    if (leading_id) words.erase(words.begin());
    for (auto& w : words) w = to_upper(w);
    if (!words.empty()) out.push_back(std::move(words));
  }
  return out;
}

std::set<std::string> vocabulary(const Corpus& corpus) {
  std::set<std::string> vocab;
  for (const auto& utt : corpus.utterances)
    vocab.insert(utt.transcript.begin(), utt.transcript.end());
  return vocab;
}

}  // namespace asrlab

// Copyright 2026 The stforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stforge::corpus {

// Casing/punctuation treatments of a tokenized sentence:
//   tc    - truecased, punctuation kept
//   lc    - lowercased, punctuation kept
//   lc.rm - lowercased, punctuation-only tokens dropped (apostrophe-bearing
//           tokens like "'t" survive)
enum class Treatment { kTc, kLc, kLcRm };

const char* treatment_name(Treatment t);              // "tc" / "lc" / "lc.rm"
Treatment treatment_from_name(std::string_view name);

// One text side of an utterance with all three treatments.
struct TextSet {
  bool present = false;
  std::string tc;
  std::string lc;
  std::string lc_rm;

  const std::string& get(Treatment t) const;
};

struct Segment {
  double start_sec = 0.0;
  double end_sec = 0.0;
};

struct UtteranceRecord {
  std::string utt_id;
  std::string spk_id;
  std::string audio_path;
  std::optional<Segment> segment;
  TextSet src_text;
  TextSet tgt_text;
};

struct CorpusTable {
  std::vector<UtteranceRecord> records;  // sorted by utt_id, ids unique
  std::string src_lang;
  std::string tgt_lang;

  const UtteranceRecord* find(std::string_view utt_id) const;
};

// Whitespace-split / single-space join of token strings.
std::vector<std::string> split_tokens(std::string_view s);
std::string join_tokens(const std::vector<std::string>& tokens);

// Rule-pinned tokenizer: split on whitespace, detach leading/trailing ASCII
// punctuation as single-character tokens, split word-internal apostrophes
// with the apostrophe attaching to the suffix ("don't" -> "don 't").
// Deterministic; no non-breaking-prefix list, no hyphen splitting.
std::string tokenize(std::string_view text);

// Lowercases ASCII A-Z and the Latin-1 uppercase range; other codepoints
// pass through unchanged. Input must be valid UTF-8.
std::string lowercase(std::string_view utf8);

// Applies a treatment to an already-tokenized string.
std::string apply_treatment(std::string_view tokens, Treatment t);

TextSet make_text_set(std::string_view raw_text);

// Loads a prepared data directory (wav.scp, utt2spk, optional segments,
// text.{tc,lc,lc.rm} and optionally text.{tc,lc,lc.rm}.<tgt_lang>).
CorpusTable load_data_dir(const std::string& dir, const std::string& src_lang,
                          const std::string& tgt_lang);

// Stage 0: reads a raw corpus directory (wav.scp, utt2spk, optional
// segments, `text` and optionally `text.<tgt_lang>` with untokenized cased
// sentences), tokenizes, produces all treatments and writes a prepared
// data directory.
void prepare_data_dir(const std::string& raw_dir, const std::string& out_dir,
                      const std::string& src_lang, const std::string& tgt_lang);

// Writes a CorpusTable back out in the prepared-directory format.
void write_data_dir(const CorpusTable& table, const std::string& dir);

}  // namespace stforge::corpus

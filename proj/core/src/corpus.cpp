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

#include "stforge/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "stforge/common.hpp"

namespace fs = std::filesystem;

namespace stforge::corpus {

namespace {

// The 32 ASCII punctuation characters; apostrophe is U+0027 only.
bool is_ascii_punct(char c) {
  return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') ||
         (c >= '[' && c <= '`') || (c >= '{' && c <= '~');
}

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

bool all_punct(std::string_view tok) {
  if (tok.empty()) return false;
  return std::all_of(tok.begin(), tok.end(), is_ascii_punct);
}

// Emits one whitespace-delimited chunk as tokens: leading punctuation,
// the apostrophe-split core, trailing punctuation (in original order).
void tokenize_chunk(std::string_view chunk, std::vector<std::string>& out) {
  size_t begin = 0;
  size_t end = chunk.size();
  std::vector<std::string> lead, trail;
  while (begin < end && is_ascii_punct(chunk[begin])) {
    lead.emplace_back(1, chunk[begin]);
    ++begin;
  }
  while (end > begin && is_ascii_punct(chunk[end - 1])) {
    trail.emplace_back(1, chunk[end - 1]);
    --end;
  }
  for (auto& t : lead) out.push_back(std::move(t));
  std::string_view core = chunk.substr(begin, end - begin);
  // split before each interior apostrophe so it attaches to the suffix
  size_t start = 0;
  for (size_t i = 1; i < core.size(); ++i) {
    if (core[i] == '\'') {
      out.emplace_back(core.substr(start, i - start));
      start = i;
      // consume the rest up to the next interior apostrophe
    }
  }
  if (start < core.size()) out.emplace_back(core.substr(start));
  for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
    out.push_back(std::move(*it));
  }
}

struct Line {
  std::string utt_id;
  std::string rest;  // may be empty
  size_t lineno = 0;
};

std::vector<Line> read_kaldi_file(const std::string& path, bool rest_required) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_error(ErrorCode::MissingFile, path);
  std::vector<Line> lines;
  std::string raw;
  size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty()) continue;
    size_t sp = raw.find(' ');
    Line line;
    line.lineno = lineno;
    if (sp == std::string::npos) {
      line.utt_id = raw;
    } else {
      line.utt_id = raw.substr(0, sp);
      line.rest = raw.substr(sp + 1);
    }
    if (line.utt_id.empty() || (rest_required && line.rest.empty())) {
      throw_error(ErrorCode::MalformedLine,
                  path + ":" + std::to_string(lineno));
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

std::unordered_map<std::string, std::string> read_kaldi_map(
    const std::string& path) {
  std::unordered_map<std::string, std::string> m;
  for (auto& line : read_kaldi_file(path, true)) {
    if (!m.emplace(line.utt_id, line.rest).second) {
      throw_error(ErrorCode::DuplicateUttId,
                  path + ": " + line.utt_id);
    }
  }
  return m;
}

bool load_text_side(const fs::path& dir, const std::string& suffix,
                    std::unordered_map<std::string, TextSet>& out,
                    std::vector<std::string>* order) {
  fs::path tc_path = dir / ("text.tc" + suffix);
  if (!fs::exists(tc_path)) return false;
  auto tc = read_kaldi_file(tc_path.string(), false);
  auto lc = read_kaldi_map((dir / ("text.lc" + suffix)).string());
  auto lcrm_lines = read_kaldi_file((dir / ("text.lc.rm" + suffix)).string(), false);
  std::unordered_map<std::string, std::string> lcrm;
  for (auto& line : lcrm_lines) lcrm[line.utt_id] = line.rest;

  for (auto& line : tc) {
    TextSet set;
    set.present = true;
    set.tc = line.rest;
    auto lc_it = lc.find(line.utt_id);
    auto rm_it = lcrm.find(line.utt_id);
    if (lc_it == lc.end() || rm_it == lcrm.end()) {
      throw_error(ErrorCode::MissingEntry,
                  "treatment files disagree for " + line.utt_id);
    }
    set.lc = lc_it->second;
    set.lc_rm = rm_it->second;
    if (!out.emplace(line.utt_id, std::move(set)).second) {
      throw_error(ErrorCode::DuplicateUttId, line.utt_id);
    }
    if (order) order->push_back(line.utt_id);
  }
  return true;
}

void write_lines(const fs::path& path,
                 const std::vector<std::pair<std::string, std::string>>& kv) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw_error(ErrorCode::IoError, "cannot write " + path.string());
  for (auto& [k, v] : kv) {
    out << k;
    if (!v.empty()) out << ' ' << v;
    out << '\n';
  }
}

}  // namespace

const char* treatment_name(Treatment t) {
  switch (t) {
    case Treatment::kTc: return "tc";
    case Treatment::kLc: return "lc";
    case Treatment::kLcRm: return "lc.rm";
  }
  return "?";
}

Treatment treatment_from_name(std::string_view name) {
  if (name == "tc") return Treatment::kTc;
  if (name == "lc") return Treatment::kLc;
  if (name == "lc.rm") return Treatment::kLcRm;
  throw_error(ErrorCode::BadConfig, "unknown treatment: " + std::string(name));
}

const std::string& TextSet::get(Treatment t) const {
  switch (t) {
    case Treatment::kTc: return tc;
    case Treatment::kLc: return lc;
    case Treatment::kLcRm: return lc_rm;
  }
  return tc;
}

const UtteranceRecord* CorpusTable::find(std::string_view utt_id) const {
  auto it = std::lower_bound(
      records.begin(), records.end(), utt_id,
      [](const UtteranceRecord& r, std::string_view id) { return r.utt_id < id; });
  if (it == records.end() || it->utt_id != utt_id) return nullptr;
  return &*it;
}

std::vector<std::string> split_tokens(std::string_view s) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_ascii_space(s[i])) ++i;
    size_t start = i;
    while (i < s.size() && !is_ascii_space(s[i])) ++i;
    if (i > start) out.emplace_back(s.substr(start, i - start));
  }
  return out;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

std::string tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_ascii_space(text[i])) ++i;
    size_t start = i;
    while (i < text.size() && !is_ascii_space(text[i])) ++i;
    if (i > start) tokenize_chunk(text.substr(start, i - start), tokens);
  }
  return join_tokens(tokens);
}

std::string lowercase(std::string_view utf8) {
  std::string out;
  out.reserve(utf8.size());
  size_t i = 0;
  while (i < utf8.size()) {
    unsigned char c = utf8[i];
    if (c >= 'A' && c <= 'Z') {
      out += static_cast<char>(c - 'A' + 'a');
      ++i;
    } else if (c == 0xC3 && i + 1 < utf8.size()) {
      // Latin-1 supplement: U+00C0..U+00DE map to +0x20, except U+00D7.
      unsigned char c2 = utf8[i + 1];
      if (c2 >= 0x80 && c2 <= 0x9E && c2 != 0x97) {
        out += static_cast<char>(0xC3);
        out += static_cast<char>(c2 + 0x20);
      } else {
        out += static_cast<char>(c);
        out += static_cast<char>(c2);
      }
      i += 2;
    } else {
      out += static_cast<char>(c);
      ++i;
    }
  }
  return out;
}

std::string apply_treatment(std::string_view tokens, Treatment t) {
  switch (t) {
    case Treatment::kTc:
      return std::string(tokens);
    case Treatment::kLc:
      return lowercase(tokens);
    case Treatment::kLcRm: {
      std::string lowered = lowercase(tokens);
      std::vector<std::string> kept;
      for (auto& tok : split_tokens(lowered)) {
        if (!all_punct(tok)) kept.push_back(tok);
      }
      return join_tokens(kept);
    }
  }
  return std::string(tokens);
}

TextSet make_text_set(std::string_view raw_text) {
  TextSet set;
  set.present = true;
  set.tc = tokenize(raw_text);
  set.lc = apply_treatment(set.tc, Treatment::kLc);
  set.lc_rm = apply_treatment(set.tc, Treatment::kLcRm);
  return set;
}

CorpusTable load_data_dir(const std::string& dir, const std::string& src_lang,
                          const std::string& tgt_lang) {
  fs::path root(dir);
  auto wav = read_kaldi_map((root / "wav.scp").string());
  auto utt2spk = read_kaldi_map((root / "utt2spk").string());

  std::unordered_map<std::string, Segment> segments;
  if (fs::exists(root / "segments")) {
    for (auto& line : read_kaldi_file((root / "segments").string(), true)) {
      std::istringstream ss(line.rest);
      std::string rec_id;
      Segment seg;
      if (!(ss >> rec_id >> seg.start_sec >> seg.end_sec) ||
          !(seg.start_sec >= 0.0 && seg.start_sec < seg.end_sec)) {
        throw_error(ErrorCode::MalformedLine,
                    "segments:" + std::to_string(line.lineno));
      }
      segments[line.utt_id] = seg;
    }
  }

  std::unordered_map<std::string, TextSet> src_text, tgt_text;
  std::vector<std::string> order;
  if (!load_text_side(root, "", src_text, &order)) {
    throw_error(ErrorCode::MissingFile, (root / "text.tc").string());
  }
  load_text_side(root, "." + tgt_lang, tgt_text, nullptr);

  CorpusTable table;
  table.src_lang = src_lang;
  table.tgt_lang = tgt_lang;
  table.records.reserve(order.size());
  for (auto& utt_id : order) {
    UtteranceRecord rec;
    rec.utt_id = utt_id;
    auto wav_it = wav.find(utt_id);
    if (wav_it == wav.end()) {
      throw_error(ErrorCode::MissingEntry, "wav.scp lacks " + utt_id);
    }
    rec.audio_path = wav_it->second;
    auto spk_it = utt2spk.find(utt_id);
    if (spk_it == utt2spk.end()) {
      throw_error(ErrorCode::MissingEntry, "utt2spk lacks " + utt_id);
    }
    rec.spk_id = spk_it->second;
    auto seg_it = segments.find(utt_id);
    if (seg_it != segments.end()) rec.segment = seg_it->second;
    rec.src_text = src_text.at(utt_id);
    auto tgt_it = tgt_text.find(utt_id);
    if (tgt_it != tgt_text.end()) rec.tgt_text = tgt_it->second;
    table.records.push_back(std::move(rec));
  }
  std::sort(table.records.begin(), table.records.end(),
            [](const UtteranceRecord& a, const UtteranceRecord& b) {
              return a.utt_id < b.utt_id;
            });
  return table;
}

void prepare_data_dir(const std::string& raw_dir, const std::string& out_dir,
                      const std::string& src_lang, const std::string& tgt_lang) {
  fs::path raw(raw_dir);
  fs::path out(out_dir);
  fs::create_directories(out);

  auto raw_src = read_kaldi_file((raw / "text").string(), false);
  std::unordered_map<std::string, std::string> raw_tgt;
  bool has_tgt = fs::exists(raw / ("text." + tgt_lang));
  if (has_tgt) {
    raw_tgt = read_kaldi_map((raw / ("text." + tgt_lang)).string());
  }

  std::unordered_set<std::string> seen;
  std::vector<std::pair<std::string, std::string>> tc, lc, lcrm;
  std::vector<std::pair<std::string, std::string>> ttc, tlc, tlcrm;
  for (auto& line : raw_src) {
    if (!seen.insert(line.utt_id).second) {
      throw_error(ErrorCode::DuplicateUttId, line.utt_id);
    }
    TextSet s = make_text_set(line.rest);
    tc.emplace_back(line.utt_id, s.tc);
    lc.emplace_back(line.utt_id, s.lc);
    lcrm.emplace_back(line.utt_id, s.lc_rm);
    if (has_tgt) {
      auto it = raw_tgt.find(line.utt_id);
      if (it == raw_tgt.end()) {
        throw_error(ErrorCode::MissingEntry,
                    "text." + tgt_lang + " lacks " + line.utt_id);
      }
      TextSet t = make_text_set(it->second);
      ttc.emplace_back(line.utt_id, t.tc);
      tlc.emplace_back(line.utt_id, t.lc);
      tlcrm.emplace_back(line.utt_id, t.lc_rm);
    }
  }

  write_lines(out / "text.tc", tc);
  write_lines(out / "text.lc", lc);
  write_lines(out / "text.lc.rm", lcrm);
  if (has_tgt) {
    write_lines(out / ("text.tc." + tgt_lang), ttc);
    write_lines(out / ("text.lc." + tgt_lang), tlc);
    write_lines(out / ("text.lc.rm." + tgt_lang), tlcrm);
  }
  for (const char* name : {"wav.scp", "utt2spk", "segments"}) {
    if (fs::exists(raw / name)) {
      fs::copy_file(raw / name, out / name, fs::copy_options::overwrite_existing);
    } else if (std::string(name) != "segments") {
      throw_error(ErrorCode::MissingFile, (raw / name).string());
    }
  }
}

void write_data_dir(const CorpusTable& table, const std::string& dir) {
  fs::path out(dir);
  fs::create_directories(out);
  std::vector<std::pair<std::string, std::string>> wav, spk, seg;
  std::vector<std::pair<std::string, std::string>> tc, lc, lcrm, ttc, tlc, tlcrm;
  bool has_tgt = false;
  for (auto& rec : table.records) {
    wav.emplace_back(rec.utt_id, rec.audio_path);
    spk.emplace_back(rec.utt_id, rec.spk_id);
    if (rec.segment) {
      std::ostringstream ss;
      ss << rec.utt_id << ' ' << rec.segment->start_sec << ' '
         << rec.segment->end_sec;
      seg.emplace_back(rec.utt_id, ss.str());
    }
    tc.emplace_back(rec.utt_id, rec.src_text.tc);
    lc.emplace_back(rec.utt_id, rec.src_text.lc);
    lcrm.emplace_back(rec.utt_id, rec.src_text.lc_rm);
    if (rec.tgt_text.present) {
      has_tgt = true;
      ttc.emplace_back(rec.utt_id, rec.tgt_text.tc);
      tlc.emplace_back(rec.utt_id, rec.tgt_text.lc);
      tlcrm.emplace_back(rec.utt_id, rec.tgt_text.lc_rm);
    }
  }
  write_lines(out / "wav.scp", wav);
  write_lines(out / "utt2spk", spk);
  if (!seg.empty()) write_lines(out / "segments", seg);
  write_lines(out / "text.tc", tc);
  write_lines(out / "text.lc", lc);
  write_lines(out / "text.lc.rm", lcrm);
  if (has_tgt) {
    write_lines(out / ("text.tc." + table.tgt_lang), ttc);
    write_lines(out / ("text.lc." + table.tgt_lang), tlc);
    write_lines(out / ("text.lc.rm." + table.tgt_lang), tlcrm);
  }
}

}  // namespace stforge::corpus

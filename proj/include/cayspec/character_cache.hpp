// Copyright 2026 The cayspec Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Character cache file. Line oriented text:
//
//   cayspec-character-cache <version>
//   <n>\t<partition>\t<cycle type>\t<value>
//   ...
//
// Records are written in canonical order so identical memo contents give
// byte-identical files. A header with any other version is rejected.

#ifndef CAYSPEC_CHARACTER_CACHE_HPP_
#define CAYSPEC_CHARACTER_CACHE_HPP_

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "cayspec/characters.hpp"

namespace cayspec {

inline constexpr const char* kCacheMagic = "cayspec-character-cache";
inline constexpr int kCacheVersion = 1;

inline void write_character_cache(const CharacterEngine& engine, std::ostream& out) {
  out << kCacheMagic << ' ' << kCacheVersion << '\n';
  for (const auto& r : engine.export_records()) {
    out << r.partition.size() << '\t' << r.partition.to_string() << '\t'
        << r.cycle_type.to_string() << '\t' << r.value.str() << '\n';
  }
}

// Returns the number of records loaded.
inline std::size_t read_character_cache(CharacterEngine& engine, std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InputError("character cache: missing header");
  std::istringstream header(line);
  std::string magic;
  std::string version;
  header >> magic >> version;
  if (magic != kCacheMagic) throw InputError("character cache: not a cayspec cache file");
  if (version != std::to_string(kCacheVersion)) {
    throw InputError("character cache: format version " + version + " does not match expected " +
                     std::to_string(kCacheVersion));
  }
  std::size_t loaded = 0;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string n_text, part_text, type_text, value_text;
    if (!std::getline(fields, n_text, '\t') || !std::getline(fields, part_text, '\t') ||
        !std::getline(fields, type_text, '\t') || !std::getline(fields, value_text)) {
      throw InputError("character cache: malformed record on line " + std::to_string(line_no));
    }
    CharacterEngine::Record r{Partition::parse(part_text), CycleType::parse(type_text),
                              parse_bigint(value_text)};
    if (r.partition.size() != parse_int(n_text, "cache n")) {
      throw InputError("character cache: size mismatch on line " + std::to_string(line_no));
    }
    engine.import_record(r);
    ++loaded;
  }
  return loaded;
}

inline void save_character_cache(const CharacterEngine& engine, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write character cache '" + path + "'");
  write_character_cache(engine, out);
}

// Missing file is not an error: returns 0.
inline std::size_t load_character_cache(CharacterEngine& engine, const std::string& path) {
  std::ifstream in(path);
  if (!in) return 0;
  return read_character_cache(engine, in);
}

}  // namespace cayspec

#endif  // CAYSPEC_CHARACTER_CACHE_HPP_
